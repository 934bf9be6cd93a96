//! Cobar complex of the cooperad of `τ`-coinvariants of `As^∨`.
//!
//! A generator of arity `m` is an ordering of the inputs of a vertex, taken
//! modulo `σ ~ (-1)^{m-1} σ^op`, and sits in odd degree. A basis element is a
//! planar tree whose every vertex has its first child's smallest leaf below
//! its last child's; the tensor order of the vertices is by
//! `(smallest leaf, -number of leaves)`, which does not depend on the planar
//! representative. The differential splits one vertex into an outer and an
//! inner vertex along a block of consecutive children.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::chain::{ChainComplex, ChainGroup};
use crate::exact::{RationalMatrix, SparseVec};
use crate::trees::{enumerate_planar_trees, replace_at_path, PlanarTree, TreeError};

fn min_leaf(t: &PlanarTree) -> u8 {
    match t {
        PlanarTree::Leaf(l) => *l,
        PlanarTree::Node(cs) => cs.iter().map(min_leaf).min().unwrap(),
    }
}

/// Sign of identifying an ordering of `m` inputs with its reverse.
fn reversal_sign(m: usize) -> i32 {
    if m.is_multiple_of(2) {
        -1
    } else {
        1
    }
}

/// Representative of the coinvariant class and its sign.
pub fn cobar_normal_form(t: &PlanarTree) -> (PlanarTree, i32) {
    match t {
        PlanarTree::Leaf(l) => (PlanarTree::Leaf(*l), 1),
        PlanarTree::Node(cs) => {
            let mut sign = 1;
            let mut children: Vec<PlanarTree> = cs
                .iter()
                .map(|c| {
                    let (n, s) = cobar_normal_form(c);
                    sign *= s;
                    n
                })
                .collect();
            if min_leaf(&children[0]) > min_leaf(children.last().unwrap()) {
                children.reverse();
                sign *= reversal_sign(children.len());
            }
            (PlanarTree::Node(children), sign)
        }
    }
}

/// `(path, key)` of every vertex, in tensor order.
fn ordered_vertices(t: &PlanarTree) -> Vec<(Vec<usize>, (u8, i64))> {
    fn go(t: &PlanarTree, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, (u8, i64))>) {
        if let PlanarTree::Node(cs) = t {
            out.push((path.clone(), (min_leaf(t), -(t.arity() as i64))));
            for (i, c) in cs.iter().enumerate() {
                path.push(i);
                go(c, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(t, &mut Vec::new(), &mut out);
    out.sort_by_key(|v| v.1);
    out
}

fn subtree<'a>(t: &'a PlanarTree, path: &[usize]) -> &'a PlanarTree {
    path.iter().fold(t, |t, &i| match t {
        PlanarTree::Node(cs) => &cs[i],
        PlanarTree::Leaf(_) => unreachable!(),
    })
}

fn inversions_odd<T: Ord>(xs: &[T]) -> bool {
    let mut odd = false;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] > xs[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// Differential of a normalized tree, as signed normalized trees.
pub fn cobar_differential(t: &PlanarTree) -> Vec<(i32, PlanarTree)> {
    let vertices = ordered_vertices(t);
    let mut out = Vec::new();
    for (pos, (path, _)) in vertices.iter().enumerate() {
        let PlanarTree::Node(cs) = subtree(t, path) else { unreachable!() };
        let m = cs.len();
        for l in 2..m {
            for j in 0..=m - l {
                let inner = PlanarTree::Node(cs[j..j + l].to_vec());
                let mut outer = cs[..j].to_vec();
                outer.push(inner.clone());
                outer.extend_from_slice(&cs[j + l..]);
                let split = replace_at_path(t, path, PlanarTree::Node(outer));
                // tensor order after the split: ..., outer, inner, ...
                let mut keys: Vec<(u8, i64)> = vertices.iter().map(|v| v.1).collect();
                keys.insert(pos + 1, (min_leaf(&inner), -(inner.arity() as i64)));
                let mut sign = if pos % 2 == 0 { 1 } else { -1 };
                if inversions_odd(&keys) {
                    sign = -sign;
                }
                let (nf, s) = cobar_normal_form(&split);
                out.push((sign * s, nf));
            }
        }
    }
    out
}

/// The cobar complex in arity `n`, graded like the mosaic complex: a tree
/// with `v` vertices sits in degree `n - 1 - v`.
pub fn cobar_complex(n: usize) -> Result<ChainComplex, TreeError> {
    if n < 2 {
        return Err(TreeError::Arity { n, min: 2 });
    }
    let top = n - 2;
    let mut by_degree: Vec<Vec<PlanarTree>> = vec![Vec::new(); top + 1];
    for t in enumerate_planar_trees(n)? {
        if cobar_normal_form(&t).0 == t {
            by_degree[t.cell_dimension()].push(t);
        }
    }
    for d in &mut by_degree {
        d.sort();
    }
    let index: Vec<HashMap<PlanarTree, usize>> =
        by_degree.iter().map(|d| d.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect()).collect();
    let groups = (0..=top)
        .map(|k| {
            let columns: Vec<SparseVec> = by_degree[k]
                .par_iter()
                .map(|t| {
                    if k == 0 {
                        return SparseVec::new();
                    }
                    SparseVec::from_pairs(
                        cobar_differential(t).into_iter().map(|(s, f)| (index[k - 1][&f], (s as i64).into())),
                    )
                })
                .collect();
            let rows = if k == 0 { 0 } else { by_degree[k - 1].len() };
            ChainGroup {
                basis: by_degree[k].iter().map(|t| t.to_string()).collect(),
                boundary: RationalMatrix::from_columns(rows, columns).unwrap(),
            }
        })
        .collect();
    Ok(ChainComplex::new(groups).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::mosaic_chain_complex;

    #[test]
    fn arity_three() {
        let c = cobar_complex(3).unwrap();
        assert_eq!(c.dims(), vec![3, 3]);
        assert_eq!(c.homology_ranks(), vec![1, 1]);
    }

    #[test]
    fn matches_mosaic_up_to_four() {
        for n in 2..=4 {
            let c = cobar_complex(n).unwrap();
            assert!(c.check_d_squared());
            let m = mosaic_chain_complex(n).unwrap();
            assert_eq!(c.summary(), m.summary(), "arity {n}");
        }
    }
}
