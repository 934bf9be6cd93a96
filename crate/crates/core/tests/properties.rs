mod common;

use proptest::prelude::*;

use common::*;
use mosaic_core::graphs::connected_dags;

proptest! {
    #[test]
    fn rank_and_kernel((m, x) in matrix_and_vector(7)) {
        check_rank_kernel(&m, &x)?;
    }

    #[test]
    fn rational_arithmetic(a in rational(), b in rational(), c in rational()) {
        check_rational_field(&a, &b, &c)?;
    }

    #[test]
    fn canonical_forms(case in graph_case()) {
        check_canonical(&case)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn splitting_squares_to_zero(e in 4usize..=6, pick in any::<prop::sample::Index>()) {
        let domain = connected_dags(5, e);
        check_gc_d_squared(pick.get(&domain))?;
    }
}
