use mosaic_core::operads::free::free_operad_basis;
use mosaic_core::operads::hopf::hopf_coideal_report;
use mosaic_core::operads::presentation::{as_z2_generation, even_shuffle_jacobi, ideal_rank, Relation};
use mosaic_core::operads::*;
use mosaic_core::trees::mosaic_chain_complex;

#[test]
fn cobar_matches_mosaic_in_arity_five() {
    let c = cobar_complex(5).unwrap();
    assert!(c.check_d_squared());
    let m = mosaic_chain_complex(5).unwrap();
    assert_eq!(c.summary(), m.summary());
    assert_eq!(c.homology_ranks(), vec![0, 9, 10, 1].into_iter().rev().collect::<Vec<_>>());
}

#[test]
fn hopf_coideal_in_arity_five() {
    let r = hopf_coideal_report(5).unwrap();
    assert!(r.ideal_elements > 0);
    assert!(r.passed(), "{r:?}");
}

#[test]
fn cubic_correction_exists() {
    let r = verify_eq11_shape().unwrap();
    println!("{r:#?}");
    assert!(r.lhs_nonzero);
    assert!(r.in_higher_image);
    assert!(r.kernel_witness);
    assert!(r.diagonal_vanishes);
    assert_eq!(r.lhs_at_aaabb.len(), 10);
}

#[test]
fn generation_in_arity_five() {
    let r = as_z2_generation(5).unwrap();
    assert!(r.image_is_invariant);
    assert_eq!(r.image_rank, 60);
    let p = Presentation::preset("AsZ2").unwrap();
    // the quadratic relations alone leave room for the cubic correction
    assert!(ideal_rank(&p, 5).unwrap() < r.kernel_dim);
}

#[test]
fn jacobi_variants() {
    let mut p = Presentation::preset("PoisOdd").unwrap();
    p.relations.pop();
    let alt: Relation = even_shuffle_jacobi(1, &p.generators).unwrap();
    p.relations.push(alt);
    // unsigned even shuffles leave too much in arity 5: Com∘LieOdd has 1 + 10 + 9 = 20
    let dims: Vec<usize> = (1..=5).map(|n| quotient_dimension(&p, n).unwrap()).collect();
    assert_eq!(dims, vec![1, 1, 2, 5, 11]);
}

#[test]
fn lie_odd_arity_seven() {
    let p = Presentation::preset("LieOdd").unwrap();
    assert_eq!(free_operad_basis(&p.generators, 7).unwrap().len(), 280);
    assert_eq!(quotient_dimension(&p, 7).unwrap(), 225);
}
