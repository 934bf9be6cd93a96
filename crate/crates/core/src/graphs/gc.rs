//! Vertex splitting on directed acyclic graphs without external vertices,
//! and the kernel of splitting on graphs with 4 vertices and 5 edges.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::exact::{BasisRegistry, Rational, RationalMatrix, SparseVec};

use super::canonical::{canonical_edges, check_internal_count};
use super::graph::{is_acyclic, DirectedGraph, GraphError, Regime};
use super::GraphChain;

fn gc_graph(n: usize, edges: Vec<(u8, u8)>) -> DirectedGraph {
    DirectedGraph { n_ext: 0, n_int: n, edges, regime: Regime::Oriented }
}

fn add_canonical(out: &mut GraphChain, n: usize, edges: &[(u8, u8)], c: &Rational) {
    if let Some((e, s)) = canonical_edges(0, n, edges) {
        let x = out.entry(gc_graph(n, e)).or_insert_with(Rational::zero);
        *x += &(c * &Rational::from_int(s as i64));
    }
}

fn check_gc(g: &DirectedGraph) -> Result<(), GraphError> {
    if g.n_ext != 0 {
        return Err(GraphError::HasExternals);
    }
    if g.regime == Regime::Directed {
        return Err(GraphError::Regime { want: Regime::Oriented, have: g.regime });
    }
    g.validate()?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    check_internal_count(0, g.n_int + 1)
}

/// Sum over vertices `v` and ordered splits `(A, B)` of the edges at `v`
/// with both parts nonempty: `A` stays at `v`, `B` moves to a new vertex,
/// and a new edge from `v` to it is placed first in the ordering.
pub fn gc_splitting_differential(g: &DirectedGraph) -> Result<GraphChain, GraphError> {
    check_gc(g)?;
    Ok(splitting_unchecked(g))
}

fn splitting_unchecked(g: &DirectedGraph) -> GraphChain {
    let n = g.n_int;
    let new = (n + 1) as u8;
    let one = Rational::one();
    let mut out = GraphChain::new();
    for v in 1..=n as u8 {
        let half: Vec<usize> = (0..g.edges.len()).filter(|&i| g.edges[i].0 == v || g.edges[i].1 == v).collect();
        let full = (1u32 << half.len()) - 1;
        for mask in 1..full {
            let mut edges = vec![(v, new)];
            edges.extend(g.edges.iter().enumerate().map(|(i, &(s, t))| {
                match half.iter().position(|&h| h == i) {
                    Some(b) if mask >> b & 1 == 1 => (if s == v { new } else { s }, if t == v { new } else { t }),
                    _ => (s, t),
                }
            }));
            add_canonical(&mut out, n + 1, &edges, &one);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Applies the splitting differential linearly.
pub fn gc_splitting_chain(chain: &GraphChain) -> Result<GraphChain, GraphError> {
    let mut out = GraphChain::new();
    for (g, c) in chain {
        for (h, x) in gc_splitting_differential(g)? {
            let e = out.entry(h).or_insert_with(Rational::zero);
            *e += &(c * &x);
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Canonical nonvanishing connected acyclic graphs on `n` vertices with `e` edges.
pub fn connected_dags(n: usize, e: usize) -> Vec<DirectedGraph> {
    let pairs: Vec<(u8, u8)> = (1..=n as u8).tuple_combinations().collect();
    let mut found = BTreeSet::new();
    for chosen in pairs.iter().combinations(e) {
        for dirs in 0u32..1 << e {
            let edges: Vec<(u8, u8)> = chosen
                .iter()
                .enumerate()
                .map(|(i, &&(a, b))| if dirs >> i & 1 == 1 { (b, a) } else { (a, b) })
                .collect();
            let g = gc_graph(n, edges);
            if g.is_connected() && is_acyclic(n, &g.edges) {
                if let Some((c, _)) = canonical_edges(0, n, &g.edges) {
                    found.insert(gc_graph(n, c));
                }
            }
        }
    }
    found.into_iter().collect()
}

/// The three graphs on 4 vertices expected in the leading closed element,
/// with the expected coefficient magnitudes `1, 1, 2`.
pub fn leading_mc_shapes() -> [(DirectedGraph, u32); 3] {
    let g = |edges: &[(u8, u8)]| DirectedGraph::new(0, 4, edges.to_vec(), Regime::Oriented).expect("shape");
    [
        (g(&[(1, 2), (3, 2), (3, 1), (4, 1), (4, 2)]), 1),
        (g(&[(1, 2), (2, 3), (1, 3), (1, 4), (2, 4)]), 1),
        (g(&[(1, 2), (1, 3), (2, 3), (4, 1), (4, 2)]), 2),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct McLeading {
    /// Canonical graphs on 4 vertices with 5 edges.
    pub domain: Vec<DirectedGraph>,
    pub image_dim: usize,
    pub kernel: Vec<Vec<(DirectedGraph, Rational)>>,
    /// Kernel element supported on the expected shapes, scaled to coefficient
    /// 1 on the first one.
    pub leading: Option<Vec<(DirectedGraph, Rational)>>,
    pub d_squared_zero: bool,
}

impl McLeading {
    /// The leading element exists and has magnitudes `1, 1, 2` on the shapes.
    pub fn matches_shapes(&self) -> bool {
        let Some(leading) = &self.leading else { return false };
        let shapes = leading_mc_shapes();
        leading.len() == 3
            && shapes.iter().all(|(s, m)| {
                let class = super::canonical::canonical_unchecked(s).expect("shape is nonvanishing");
                leading.iter().any(|(g, c)| *g == class.graph && c.abs() == Rational::from_int(*m as i64))
            })
    }

    /// Signs of the second and third coefficient relative to the first, in the
    /// orientations of `leading_mc_shapes`.
    pub fn relative_signs(&self) -> Option<(i32, i32)> {
        let leading = self.leading.as_ref()?;
        let coeff = |s: &DirectedGraph| {
            let class = super::canonical::canonical_unchecked(s)?;
            let c = &leading.iter().find(|(g, _)| *g == class.graph)?.1;
            Some(c.signum() * class.sign)
        };
        let [a, b, c] = leading_mc_shapes().map(|(s, _)| coeff(&s));
        Some((b? * a?, c? * a?))
    }
}

fn chain_pairs(v: &SparseVec, basis: &[DirectedGraph]) -> Vec<(DirectedGraph, Rational)> {
    v.entries().iter().map(|(i, c)| (basis[*i].clone(), c.clone())).collect()
}

/// Kernel of splitting on connected acyclic graphs with 4 vertices and 5
/// edges, and the kernel element restricted to the expected shapes.
pub fn solve_mc_leading() -> McLeading {
    let domain = connected_dags(4, 5);
    let images: Vec<GraphChain> = domain.iter().map(splitting_unchecked).collect();
    let target = BasisRegistry::new(images.iter().flat_map(|c| c.keys().cloned()));
    let matrix = RationalMatrix::from_columns(target.len(), images.iter().map(|c| target.vector(c)).collect())
        .expect("columns fit");
    let kernel: Vec<Vec<(DirectedGraph, Rational)>> =
        matrix.kernel_basis().iter().map(|v| chain_pairs(v, &domain)).collect();

    let shape_cols: Vec<usize> = leading_mc_shapes()
        .iter()
        .filter_map(|(s, _)| {
            let class = super::canonical::canonical_unchecked(s)?;
            domain.iter().position(|g| *g == class.graph)
        })
        .collect();
    let restricted =
        RationalMatrix::from_columns(target.len(), shape_cols.iter().map(|&i| matrix.column(i).clone()).collect())
            .expect("columns fit");
    let restricted_kernel = restricted.kernel_basis();
    let leading = (shape_cols.len() == 3 && restricted_kernel.len() == 1).then(|| {
        let v = &restricted_kernel[0];
        let scale = v.get(0).recip();
        let full = SparseVec::from_pairs(v.entries().iter().map(|(i, c)| (shape_cols[*i], c * &scale)));
        chain_pairs(&full, &domain)
    });

    let d_squared_zero = images.iter().all(|c| gc_splitting_chain(c).map(|x| x.is_empty()).unwrap_or(false));
    McLeading { domain, image_dim: target.len(), kernel, leading, d_squared_zero }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(u8, u8)]) -> DirectedGraph {
        DirectedGraph::new(0, n, edges.to_vec(), Regime::Oriented).unwrap()
    }

    #[test]
    fn single_edge_is_closed() {
        assert!(gc_splitting_differential(&g(2, &[(1, 2)])).unwrap().is_empty());
    }

    #[test]
    fn triangle_splits_to_four_vertices() {
        let d = gc_splitting_differential(&g(3, &[(1, 2), (2, 3), (1, 3)])).unwrap();
        assert!(d.keys().all(|h| h.n_int() == 4 && h.edges().len() == 4));
    }

    #[test]
    fn rejects_externals_and_disconnected() {
        let with_ext = DirectedGraph::new(1, 2, vec![(2, 1), (3, 1)], Regime::Oriented).unwrap();
        assert_eq!(gc_splitting_differential(&with_ext), Err(GraphError::HasExternals));
        assert_eq!(gc_splitting_differential(&g(4, &[(1, 2), (3, 4)])), Err(GraphError::Disconnected));
    }

    #[test]
    fn d_squared_on_small_graphs() {
        for (n, e) in [(3, 2), (3, 3), (4, 3), (4, 4), (4, 5), (4, 6)] {
            for h in connected_dags(n, e) {
                let d = gc_splitting_differential(&h).unwrap();
                assert!(gc_splitting_chain(&d).unwrap().is_empty(), "{h}");
            }
        }
    }

    #[test]
    fn leading_element() {
        let r = solve_mc_leading();
        assert!(r.d_squared_zero);
        assert!(r.matches_shapes(), "{:?}", r.leading);
    }
}
