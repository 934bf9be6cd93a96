use mosaic_core::series::poincare_polynomial;
use mosaic_core::trees::{mosaic_chain_complex, mosaic_classes, reflection_is_chain_map};

fn poincare(n: usize) -> Vec<usize> {
    let mut p: Vec<usize> =
        poincare_polynomial(n).integer_coeffs().unwrap().into_iter().map(|c| c as usize).collect();
    p.resize(n - 1, 0);
    p
}

#[test]
fn mosaic_n5_homology() {
    let c = mosaic_chain_complex(5).unwrap();
    assert!(c.check_d_squared());
    assert_eq!(c.homology_ranks(), vec![1, 10, 9, 0]);
    assert_eq!(c.homology_ranks(), poincare(5));
    assert_eq!(c.dims().iter().sum::<usize>(), mosaic_classes(5).unwrap().len());
    let chi: i64 = c.homology_ranks().iter().enumerate().map(|(k, &r)| if k % 2 == 0 { r as i64 } else { -(r as i64) }).sum();
    assert_eq!(chi, c.euler_characteristic());
}

#[test]
fn reflections_commute_with_boundary_n5() {
    assert!(reflection_is_chain_map(5));
}

#[test]
fn mosaic_n6_homology() {
    let c = mosaic_chain_complex(6).unwrap();
    assert!(c.check_d_squared());
    assert_eq!(c.homology_ranks(), poincare(6));
}
