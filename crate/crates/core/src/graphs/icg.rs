//! Internally connected odd oriented graphs with the edge-contraction
//! differential. The complex is graded by the number of internal vertices;
//! contraction lowers it by one.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::{ChainComplex, ChainGroup};
use crate::exact::{BasisRegistry, Rational, RationalMatrix};

use super::canonical::{canonical_edges, check_internal_count};
use super::graph::{internally_connected, is_acyclic, DirectedGraph, GraphError, Regime};
use super::GraphChain;

/// Enumeration limits; larger values are exhaustive but slow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IcgLimits {
    pub max_ext: usize,
    pub max_int: usize,
}

impl Default for IcgLimits {
    fn default() -> Self {
        IcgLimits { max_ext: 5, max_int: 4 }
    }
}

impl IcgLimits {
    fn check(&self, n_ext: usize, n_int: usize) -> Result<(), GraphError> {
        if n_ext > self.max_ext || n_int > self.max_int {
            return Err(GraphError::Bounds { n_ext, n_int, max_ext: self.max_ext, max_int: self.max_int });
        }
        Ok(())
    }
}

fn odd_graph(n_ext: usize, n_int: usize, edges: Vec<(u8, u8)>) -> DirectedGraph {
    DirectedGraph { n_ext, n_int, edges, regime: Regime::OrientedOdd }
}

/// Admissible and internally connected, assuming no tadpoles and no edges
/// out of externals.
fn admissible(n_ext: usize, n_int: usize, edges: &[(u8, u8)]) -> bool {
    let mut out = vec![0usize; n_int];
    let mut val = vec![0usize; n_int];
    for &(s, t) in edges {
        out[s as usize - n_ext - 1] += 1;
        val[s as usize - n_ext - 1] += 1;
        if t as usize > n_ext {
            val[t as usize - n_ext - 1] += 1;
        }
    }
    out.iter().all(|d| d % 2 == 1)
        && val.iter().all(|&v| v >= 3)
        && internally_connected(n_ext, n_int, edges)
        && is_acyclic(n_ext + n_int, edges)
}

fn canonical_graph(n_ext: usize, n_int: usize, edges: &[(u8, u8)]) -> Option<(DirectedGraph, i32)> {
    canonical_edges(n_ext, n_int, edges).map(|(e, s)| (odd_graph(n_ext, n_int, e), s))
}

/// Canonical representatives of all nonvanishing classes with the given
/// vertex counts, sorted.
pub fn enumerate_icg(n_ext: usize, n_int: usize) -> Result<Vec<DirectedGraph>, GraphError> {
    enumerate_icg_within(n_ext, n_int, IcgLimits::default())
}

pub fn enumerate_icg_within(n_ext: usize, n_int: usize, limits: IcgLimits) -> Result<Vec<DirectedGraph>, GraphError> {
    limits.check(n_ext, n_int)?;
    if n_int == 0 {
        return Ok(Vec::new());
    }
    // Label internals in a topological order: vertex `i` only points to
    // externals and to internals after it. Each out-set is an odd subset.
    let targets: Vec<Vec<u8>> = (0..n_int)
        .map(|i| (1..=n_ext as u8).chain((n_ext + i + 2..=n_ext + n_int).map(|v| v as u8)).collect())
        .collect();
    let odd_masks = |i: usize| (1u32..1 << targets[i].len()).filter(|m| m.count_ones() % 2 == 1);
    let first: Vec<u32> = odd_masks(0).collect();
    let found: BTreeSet<DirectedGraph> = first
        .par_iter()
        .map(|&m0| {
            let mut local = BTreeSet::new();
            let mut masks = vec![m0];
            fn rec(
                i: usize,
                masks: &mut Vec<u32>,
                targets: &[Vec<u8>],
                n_ext: usize,
                local: &mut BTreeSet<DirectedGraph>,
            ) {
                let n_int = targets.len();
                if i == n_int {
                    let mut edges = Vec::new();
                    for (k, &m) in masks.iter().enumerate() {
                        let s = (n_ext + k + 1) as u8;
                        for (b, &t) in targets[k].iter().enumerate() {
                            if m >> b & 1 == 1 {
                                edges.push((s, t));
                            }
                        }
                    }
                    if admissible(n_ext, n_int, &edges) {
                        if let Some((g, _)) = canonical_graph(n_ext, n_int, &edges) {
                            local.insert(g);
                        }
                    }
                    return;
                }
                for m in (1u32..1 << targets[i].len()).filter(|m| m.count_ones() % 2 == 1) {
                    masks.push(m);
                    rec(i + 1, masks, targets, n_ext, local);
                    masks.pop();
                }
            }
            rec(1, &mut masks, &targets, n_ext, &mut local);
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(found.into_iter().collect())
}

/// Merge vertex `drop` into `keep`, then close the gap in the internal labels.
/// `None` when the result has a tadpole, parallel edges or a directed cycle.
fn merge(n_ext: usize, n_int: usize, edges: &[(u8, u8)], skip: usize, drop: u8, keep: u8) -> Option<Vec<(u8, u8)>> {
    let shift = |v: u8| if v > drop { v - 1 } else { v };
    let mut out = Vec::with_capacity(edges.len() - 1);
    for (i, &(s, t)) in edges.iter().enumerate() {
        if i == skip {
            continue;
        }
        let f = |v: u8| shift(if v == drop { keep } else { v });
        let e = (f(s), f(t));
        if e.0 == e.1 || out.contains(&e) {
            return None;
        }
        out.push(e);
    }
    is_acyclic(n_ext + n_int - 1, &out).then_some(out)
}

/// Signed contractions of `g`, as raw edge lists with `n_int - 1` internal vertices.
fn contractions(g: &DirectedGraph) -> Vec<(i32, Vec<(u8, u8)>)> {
    let (n_ext, n_int) = (g.n_ext, g.n_int);
    let mut out = Vec::new();
    for (i, &(s, t)) in g.edges.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        if g.is_internal(t) {
            if let Some(e) = merge(n_ext, n_int, &g.edges, i, t, s) {
                let merged = if s > t { s - 1 } else { s };
                debug_assert!(e.iter().filter(|x| x.0 == merged).count() % 2 == 1, "merged vertex stays odd");
                out.push((sign, e));
            }
        } else if g.out_degree(s) == 1 {
            if let Some(e) = merge(n_ext, n_int, &g.edges, i, s, t) {
                if internally_connected(n_ext, n_int - 1, &e) {
                    out.push((sign, e));
                }
            }
        }
    }
    out
}

/// Contraction of internal-internal edges, and of an edge into an external
/// vertex when its source has out-degree 1 and the rest stays internally
/// connected. Edge `i` of the ordering contributes the sign `(-1)^i`.
pub fn icg_differential(g: &DirectedGraph) -> Result<GraphChain, GraphError> {
    check_icg(g)?;
    Ok(differential_unchecked(g))
}

fn differential_unchecked(g: &DirectedGraph) -> GraphChain {
    let mut out = GraphChain::new();
    for (sign, e) in contractions(g) {
        if let Some((h, s)) = canonical_graph(g.n_ext, g.n_int - 1, &e) {
            let c = out.entry(h).or_insert_with(Rational::zero);
            *c += &Rational::from_int((sign * s) as i64);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// All admissible graphs with one more internal vertex that contract onto `g`.
fn splittings(g: &DirectedGraph) -> BTreeSet<DirectedGraph> {
    let (n_ext, n_int) = (g.n_ext, g.n_int);
    let new = (n_ext + n_int + 1) as u8;
    let mut out = BTreeSet::new();
    let mut push = |edges: Vec<(u8, u8)>| {
        if admissible(n_ext, n_int + 1, &edges) {
            if let Some((h, _)) = canonical_graph(n_ext, n_int + 1, &edges) {
                out.insert(h);
            }
        }
    };
    for v in 1..=(n_ext + n_int) as u8 {
        let half: Vec<usize> = (0..g.edges.len()).filter(|&i| g.edges[i].0 == v || g.edges[i].1 == v).collect();
        let moved = |mask: u32| -> Vec<(u8, u8)> {
            let mut e = g.edges.clone();
            for (b, &i) in half.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    let (s, t) = e[i];
                    e[i] = (if s == v { new } else { s }, if t == v { new } else { t });
                }
            }
            e
        };
        for mask in 0u32..1 << half.len() {
            if g.is_internal(v) {
                for dir in [(v, new), (new, v)] {
                    let mut e = moved(mask);
                    e.push(dir);
                    push(e);
                }
            } else if mask.count_ones() >= 2 {
                let mut e = moved(mask);
                e.push((new, v));
                push(e);
            }
        }
    }
    out
}

fn boundary_matrix(domain: &[DirectedGraph], target: &BasisRegistry<DirectedGraph>) -> RationalMatrix {
    let columns = domain.par_iter().map(|g| target.vector(&differential_unchecked(g))).collect();
    RationalMatrix::from_columns(target.len(), columns).expect("boundary lands in the enumerated basis")
}

/// The complex in internal-vertex degrees `0..=max_int`.
pub fn icg_complex(n_ext: usize, max_int: usize) -> Result<ChainComplex, GraphError> {
    let bases = icg_bases(n_ext, max_int)?;
    Ok(complex_from_bases(&bases))
}

fn icg_bases(n_ext: usize, max_int: usize) -> Result<Vec<Vec<DirectedGraph>>, GraphError> {
    (0..=max_int).map(|k| enumerate_icg(n_ext, k)).collect()
}

fn complex_from_bases(bases: &[Vec<DirectedGraph>]) -> ChainComplex {
    let mut groups = Vec::new();
    for (k, basis) in bases.iter().enumerate() {
        let boundary = if k == 0 {
            RationalMatrix::zeros(0, basis.len())
        } else {
            boundary_matrix(basis, &BasisRegistry::new(bases[k - 1].iter().cloned()))
        };
        groups.push(ChainGroup { basis: basis.iter().map(ToString::to_string).collect(), boundary });
    }
    ChainComplex::new(groups).expect("shapes agree")
}

/// Homology ranks indexed by the number of internal vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IcgHomology {
    pub n_ext: usize,
    pub dims: Vec<usize>,
    pub ranks: Vec<usize>,
}

impl IcgHomology {
    pub fn total(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// Ranks at `2m - 1` internal vertices for `m = 1, 2, ...`.
    pub fn by_word_length(&self) -> Vec<usize> {
        self.ranks.iter().skip(1).step_by(2).copied().collect()
    }

    pub fn concentrated_in_odd_degrees(&self) -> bool {
        self.ranks.iter().step_by(2).all(|&r| r == 0)
    }
}

/// Homology in degrees `0..=max_int`. The image into the top degree comes
/// from the graphs that contract onto it, so the top rank is exact too.
pub fn icg_homology(n_ext: usize, max_int: usize) -> Result<IcgHomology, GraphError> {
    let bases = icg_bases(n_ext, max_int)?;
    let complex = complex_from_bases(&bases);
    let top = &bases[max_int];
    let above: Vec<DirectedGraph> = top
        .par_iter()
        .map(splittings)
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
        .into_iter()
        .collect();
    let top_image = boundary_matrix(&above, &BasisRegistry::new(top.iter().cloned())).rank();
    let dims = complex.dims();
    let mut boundary_ranks = complex.boundary_ranks();
    boundary_ranks.push(top_image);
    let ranks = (0..=max_int).map(|k| dims[k] - boundary_ranks[k] - boundary_ranks[k + 1]).collect();
    Ok(IcgHomology { n_ext, dims, ranks })
}

/// Boundary coefficients of every graph with `n_int + 1` internal vertices
/// on the class of `g`.
pub fn contraction_row(g: &DirectedGraph) -> Result<BTreeMap<DirectedGraph, Rational>, GraphError> {
    check_icg(g)?;
    check_internal_count(g.n_ext, g.n_int + 1)?;
    let mut row = BTreeMap::new();
    // a graph with an odd automorphism is zero
    let Some(class) = canonical_graph(g.n_ext, g.n_int, &g.edges) else {
        return Ok(row);
    };
    for h in splittings(&class.0) {
        if let Some(c) = differential_unchecked(&h).get(&class.0) {
            row.insert(h, c * &Rational::from_int(class.1 as i64));
        }
    }
    Ok(row)
}

fn check_icg(g: &DirectedGraph) -> Result<(), GraphError> {
    if g.regime != Regime::OrientedOdd {
        return Err(GraphError::Regime { want: Regime::OrientedOdd, have: g.regime });
    }
    g.validate()?;
    if !g.is_internally_connected() {
        return Err(GraphError::NotInternallyConnected);
    }
    check_internal_count(g.n_ext, g.n_int)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n_ext: usize, n_int: usize, edges: &[(u8, u8)]) -> DirectedGraph {
        DirectedGraph::new(n_ext, n_int, edges.to_vec(), Regime::OrientedOdd).unwrap()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_icg(3, 1).unwrap(), vec![graph(3, 1, &[(4, 1), (4, 2), (4, 3)])]);
        assert!(enumerate_icg(3, 0).unwrap().is_empty());
        assert_eq!(enumerate_icg(4, 1).unwrap().len(), 4);
        assert!(matches!(enumerate_icg(6, 1), Err(GraphError::Bounds { .. })));
    }

    #[test]
    fn tripod_is_closed() {
        assert!(icg_differential(&graph(3, 1, &[(4, 1), (4, 2), (4, 3)])).unwrap().is_empty());
    }

    #[test]
    fn d_squared_vanishes() {
        for n in 2..=4 {
            let c = icg_complex(n, 3).unwrap();
            assert!(c.check_d_squared(), "n_ext = {n}");
        }
    }

    #[test]
    fn splittings_cover_the_boundary() {
        // every graph with a nonzero boundary is found by splitting its image
        let (lower, upper) = (enumerate_icg(4, 2).unwrap(), enumerate_icg(4, 3).unwrap());
        let mut found = BTreeSet::new();
        for g in &lower {
            found.extend(splittings(g));
        }
        for h in upper {
            assert_eq!(found.contains(&h), !differential_unchecked(&h).is_empty(), "{h}");
        }
    }

    #[test]
    fn homology_small() {
        let h = icg_homology(3, 3).unwrap();
        assert_eq!(h.total(), 1);
        let h = icg_homology(4, 3).unwrap();
        assert_eq!(h.by_word_length(), vec![4, 6]);
        assert!(h.concentrated_in_odd_degrees());
    }

    #[test]
    fn bracket_tree_row() {
        // v -> i, j, k and w -> v, p, q
        let g = graph(5, 2, &[(6, 1), (6, 2), (6, 3), (7, 6), (7, 4), (7, 5)]);
        let row = contraction_row(&g).unwrap();
        assert_eq!(row.len(), 3);
        assert!(row.values().all(|c| c.abs() == Rational::one()));
    }
}
