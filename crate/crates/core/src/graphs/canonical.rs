//! Canonical labeling by exhaustive search over relabelings of the internal
//! vertices. The representative is the relabeling whose sorted edge list is
//! lexicographically smallest; its sign is the parity of the sort.

use std::sync::OnceLock;

use itertools::Itertools;
use serde::Serialize;

use super::graph::{DirectedGraph, GraphError};

/// `sign · graph` equals the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientedClass {
    pub graph: DirectedGraph,
    pub sign: i32,
}

pub(crate) const MAX_CACHED: usize = 8;

fn permutations(k: usize) -> &'static [Vec<u8>] {
    static CACHE: OnceLock<Vec<Vec<Vec<u8>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| (0..=MAX_CACHED).map(|k| (0..k as u8).permutations(k).collect()).collect());
    &cache[k]
}

fn inversion_parity(edges: &[(u8, u8)]) -> bool {
    let mut odd = false;
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if edges[i] > edges[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// Canonical edge list and sign, or `None` when an automorphism acts on the
/// edges by an odd permutation. Edges must be distinct.
pub(crate) fn canonical_edges(n_ext: usize, n_int: usize, edges: &[(u8, u8)]) -> Option<(Vec<(u8, u8)>, i32)> {
    assert!(n_int <= MAX_CACHED, "canonical labeling supports at most {MAX_CACHED} internal vertices");
    let base = n_ext as u8 + 1;
    let relabel = |p: &[u8], v: u8| if v >= base { base + p[(v - base) as usize] } else { v };
    let mut best: Option<(Vec<(u8, u8)>, bool)> = None;
    let mut conflict = false;
    let mut image = Vec::with_capacity(edges.len());
    for p in permutations(n_int) {
        image.clear();
        image.extend(edges.iter().map(|&(s, t)| (relabel(p, s), relabel(p, t))));
        let odd = inversion_parity(&image);
        image.sort_unstable();
        match &best {
            Some((b, _)) if image > *b => {}
            Some((b, sign)) if image == *b => conflict |= *sign != odd,
            _ => {
                best = Some((image.clone(), odd));
                conflict = false;
            }
        }
    }
    let (edges, odd) = best?;
    if conflict {
        return None;
    }
    Some((edges, if odd { -1 } else { 1 }))
}

/// Canonical representative, or `None` for a graph that vanishes by an odd
/// automorphism.
pub fn canonical_form(g: &DirectedGraph) -> Result<Option<OrientedClass>, GraphError> {
    g.validate()?;
    check_internal_count(g.n_ext, g.n_int)?;
    Ok(canonical_unchecked(g))
}

pub(crate) fn check_internal_count(n_ext: usize, n_int: usize) -> Result<(), GraphError> {
    if n_int > MAX_CACHED {
        return Err(GraphError::Bounds { n_ext, n_int, max_ext: u8::MAX as usize - MAX_CACHED, max_int: MAX_CACHED });
    }
    Ok(())
}

pub(crate) fn canonical_unchecked(g: &DirectedGraph) -> Option<OrientedClass> {
    canonical_edges(g.n_ext, g.n_int, &g.edges).map(|(edges, sign)| OrientedClass {
        graph: DirectedGraph { n_ext: g.n_ext, n_int: g.n_int, edges, regime: g.regime },
        sign,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Regime;

    fn tripod(edges: Vec<(u8, u8)>) -> DirectedGraph {
        DirectedGraph::new(3, 1, edges, Regime::OrientedOdd).unwrap()
    }

    #[test]
    fn tripod_signs() {
        let g = tripod(vec![(4, 1), (4, 2), (4, 3)]);
        let c = canonical_form(&g).unwrap().unwrap();
        assert_eq!((c.graph.clone(), c.sign), (g, 1));
        let c = canonical_form(&tripod(vec![(4, 2), (4, 1), (4, 3)])).unwrap().unwrap();
        assert_eq!(c.sign, -1);
    }

    #[test]
    fn relabeling_internal_vertices() {
        let a = DirectedGraph::new(3, 2, vec![(4, 1), (4, 2), (4, 5), (5, 3)], Regime::Oriented).unwrap();
        let b = DirectedGraph::new(3, 2, vec![(5, 1), (5, 2), (5, 4), (4, 3)], Regime::Oriented).unwrap();
        let (ca, cb) = (canonical_form(&a).unwrap().unwrap(), canonical_form(&b).unwrap().unwrap());
        assert_eq!(ca.graph, cb.graph);
    }

    #[test]
    fn odd_automorphism_vanishes() {
        // two sources into two sinks: swapping the sources permutes edges by two transpositions
        let even = DirectedGraph::new(0, 4, vec![(1, 3), (1, 4), (2, 3), (2, 4)], Regime::Oriented).unwrap();
        assert!(canonical_form(&even).unwrap().is_some());
        // a source with two edges to symmetric sinks: the swap is a single transposition
        let odd = DirectedGraph::new(0, 3, vec![(1, 2), (1, 3)], Regime::Oriented).unwrap();
        assert!(canonical_form(&odd).unwrap().is_none());
    }

    #[test]
    fn too_many_internal_vertices() {
        let star = DirectedGraph::new(1, 9, (2..=10).map(|v| (v, 1)).collect(), Regime::Directed).unwrap();
        assert!(matches!(canonical_form(&star), Err(GraphError::Bounds { n_int: 9, .. })));
    }
}
