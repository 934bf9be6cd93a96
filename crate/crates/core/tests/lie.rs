use mosaic_core::lie::*;

#[test]
fn xi_is_injective_for_four_points() {
    let dims = t_odd(4).graded_dims(3);
    let ranks: Vec<usize> = (1..=3).map(|m| xi_rank(4, m)).collect();
    assert_eq!(ranks, dims);
    assert_eq!(ranks, vec![4, 6, 20]);
}

#[test]
fn xi_is_injective_for_five_points() {
    let ranks: Vec<usize> = (1..=2).map(|m| xi_rank(5, m)).collect();
    assert_eq!(ranks, vec![10, 36]);
}

#[test]
fn drinfeld_kohno_envelopes() {
    // U(𝔱₂(n)) has Hilbert series ∏_{k<n} 1/(1-kt)
    for n in 3..=5 {
        let dims = drinfeld_kohno(n).graded_dims(4);
        let pbw = algebra::pbw_counts(&dims, 5);
        let mut want = vec![1u128, 0, 0, 0, 0];
        for k in 1..n as u128 {
            for i in 1..5 {
                want[i] += k * want[i - 1];
            }
        }
        assert_eq!(pbw, want, "n={n}");
    }
}

#[test]
fn kernels_are_free() {
    for n in 3..=5 {
        let p = kernel_freeness_probe(n, 3);
        assert!(p.is_free(), "{p:?}");
    }
}
