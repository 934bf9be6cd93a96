//! Strategies and property bodies shared by the property tests and the
//! acceptance harness.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use mosaic_core::exact::{Rational, RationalMatrix, SparseVec};
use mosaic_core::graphs::{canonical_form, gc_splitting_chain, gc_splitting_differential, DirectedGraph, Regime};

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| Rational::new(a, b))
}

/// Sparse matrix with roughly 40% nonzero entries.
pub fn sparse_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RationalMatrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::option::weighted(0.4, rational()), r * c).prop_map(move |cells| {
            let triplets = cells.into_iter().enumerate().filter_map(|(i, x)| x.map(|x| (i / c.max(1), i % c.max(1), x)));
            RationalMatrix::from_triplets(r, c, triplets).unwrap()
        })
    })
}

pub fn matrix_and_vector(max: usize) -> impl Strategy<Value = (RationalMatrix, Vec<Rational>)> {
    sparse_matrix(max, max).prop_flat_map(|m| {
        let cols = m.cols();
        (Just(m), proptest::collection::vec(rational(), cols))
    })
}

pub fn check_rank_kernel(m: &RationalMatrix, x: &[Rational]) -> Result<(), TestCaseError> {
    let rank = m.rank();
    let kernel = m.kernel_basis();
    prop_assert!(rank <= m.rows().min(m.cols()));
    prop_assert_eq!(rank + kernel.len(), m.cols());
    prop_assert_eq!(rank, m.transpose().rank());
    prop_assert_eq!(rank, m.rank_fraction_free());
    let reversed: Vec<usize> = (0..m.rows()).rev().collect();
    prop_assert_eq!(rank, m.rank_with_row_order(&reversed));
    for seed in 1..=3 {
        prop_assert_eq!(rank, m.rank_with_row_order(&shuffled(m.rows(), seed)));
    }
    for v in &kernel {
        prop_assert!(m.mul_vec(v).unwrap().is_zero());
    }
    let k = RationalMatrix::from_columns(m.cols(), kernel.clone()).unwrap();
    prop_assert_eq!(k.rank(), kernel.len());
    let image = m.mul_vec(&SparseVec::from_dense(x)).unwrap();
    prop_assert!(m.image_membership(&image).unwrap());
    Ok(())
}

pub fn check_rational_field(a: &Rational, b: &Rational, c: &Rational) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(&(a + b) - b), a);
    prop_assert_eq!(&(a * &(b + c)), &(&(a * b) + &(a * c)));
    if !b.is_zero() {
        prop_assert_eq!(&(&(a * b) / b), a);
    }
    // exercise the arbitrary-precision path
    let big = Rational::from_int(i64::MAX);
    let wide = &(&big * &big) * a;
    prop_assert_eq!(&(&wide / &big) / &big, a.clone());
    Ok(())
}

/// Acyclic graph with edges only out of internal vertices, plus a random
/// relabeling of the internals and a random reordering of the edges.
#[derive(Clone, Debug)]
pub struct GraphCase {
    pub graph: DirectedGraph,
    pub relabeled: DirectedGraph,
    pub edge_permutation_odd: bool,
}

/// Fisher-Yates driven by a linear congruential generator.
fn shuffled(len: usize, mut state: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..len).collect();
    for i in (1..len).rev() {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        order.swap(i, (state >> 33) as usize % (i + 1));
    }
    order
}

pub fn graph_case() -> impl Strategy<Value = GraphCase> {
    (0usize..=3, 1usize..=4)
        .prop_flat_map(|(n_ext, n_int)| {
            let n = n_ext + n_int;
            // internal s points to externals and to later internals
            let slots: Vec<(u8, u8)> = (n_ext + 1..=n)
                .flat_map(|s| (1..=n).filter(move |&t| t <= n_ext || t > s).map(move |t| (s as u8, t as u8)))
                .collect();
            let len = slots.len();
            (
                Just((n_ext, n_int)),
                proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
                    slots.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e).collect::<Vec<_>>()
                }),
                any::<u64>(),
                any::<u64>(),
            )
        })
        .prop_map(|((n_ext, n_int), edges, perm_seed, edge_seed)| {
            let perm: Vec<u8> = shuffled(n_int, perm_seed).into_iter().map(|i| i as u8).collect();
            let base = n_ext as u8 + 1;
            let relabel = |v: u8| if v >= base { base + perm[(v - base) as usize] } else { v };
            let order = shuffled(edges.len(), edge_seed);
            let mut odd = false;
            for i in 0..order.len() {
                for j in i + 1..order.len() {
                    odd ^= order[i] > order[j];
                }
            }
            let moved: Vec<(u8, u8)> = order.iter().map(|&i| (relabel(edges[i].0), relabel(edges[i].1))).collect();
            GraphCase {
                graph: DirectedGraph::new(n_ext, n_int, edges, Regime::Oriented).unwrap(),
                relabeled: DirectedGraph::new(n_ext, n_int, moved, Regime::Oriented).unwrap(),
                edge_permutation_odd: odd,
            }
        })
}

pub fn check_canonical(case: &GraphCase) -> Result<(), TestCaseError> {
    let a = canonical_form(&case.graph).unwrap();
    let b = canonical_form(&case.relabeled).unwrap();
    match (a, b) {
        (None, None) => {}
        (Some(a), Some(b)) => {
            prop_assert_eq!(&a.graph, &b.graph);
            let rel = if case.edge_permutation_odd { -1 } else { 1 };
            prop_assert_eq!(b.sign, a.sign * rel);
            let again = canonical_form(&a.graph).unwrap().unwrap();
            prop_assert_eq!(again.graph, a.graph);
            prop_assert_eq!(again.sign, 1);
        }
        _ => prop_assert!(false, "vanishing differs between isomorphic graphs"),
    }
    Ok(())
}

pub fn check_gc_d_squared(g: &DirectedGraph) -> Result<(), TestCaseError> {
    let d = gc_splitting_differential(g).unwrap();
    prop_assert!(gc_splitting_chain(&d).unwrap().is_empty(), "d^2 != 0 on {}", g);
    Ok(())
}
