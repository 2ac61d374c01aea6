mod common;

use common::{bell_vector, random_projector};
use prodbasis::constructions::{cartesian_basis, gen_tiles1, gen_tiles2, ProductBasis};
use prodbasis::numkernel::kron;
use prodbasis::sampling::{random_unit_vector, stream_rng};
use prodbasis::verification::{check_upb, complement_projector, UpbConfig, Verdict};
use prodbasis::verification::{
    grid_oracle_max_product_overlap, seesaw_max_product_overlap, SeesawOptions,
};
use prodbasis::{ComplexMatrix, Error, Tolerances};
use proptest::prelude::*;

fn opts(restarts: usize, seed: u64) -> SeesawOptions {
    SeesawOptions {
        restarts,
        seed,
        ..SeesawOptions::default()
    }
}

#[test]
fn seesaw_reaches_grid_oracle_on_small_random_projectors() {
    let mut rng = stream_rng(7, 0);
    for (d_a, d_b) in [(2, 2), (2, 3)] {
        let n = d_a * d_b;
        for rank in 1..n {
            for _ in 0..4 {
                let q = random_projector(&mut rng, n, rank);
                let ss = seesaw_max_product_overlap(&q, d_a, d_b, &opts(100, 3)).unwrap();
                let grid = grid_oracle_max_product_overlap(&q, d_a, d_b, 64).unwrap();
                assert!(
                    ss.value >= grid.value - 1e-6,
                    "{d_a}x{d_b} r={rank}: {} < {}",
                    ss.value,
                    grid.value
                );
                // The oracle's Lipschitz bound also caps the see-saw from above.
                assert!(ss.value <= grid.value + grid.gap_bound + 1e-9);
                assert!(ss.max_monotonicity_violation <= 1e-12);
            }
        }
    }
}

#[test]
fn rank_one_product_projector_is_found() {
    let mut rng = stream_rng(11, 0);
    for (d_a, d_b) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        let a = random_unit_vector(&mut rng, d_a);
        let b = random_unit_vector(&mut rng, d_b);
        let v = kron(&a, &b);
        let q = ComplexMatrix::outer(&v, &v);
        let out = seesaw_max_product_overlap(&q, d_a, d_b, &opts(20, 0)).unwrap();
        assert!(out.value >= 0.998, "{d_a}x{d_b}: {}", out.value);
        assert!((out.value - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn maximally_entangled_projector_gives_one_half() {
    let v = bell_vector();
    let q = ComplexMatrix::outer(&v, &v);
    let out = seesaw_max_product_overlap(&q, 2, 2, &opts(50, 0)).unwrap();
    assert!((out.value - 0.5).abs() <= 0.01);
    let grid = grid_oracle_max_product_overlap(&q, 2, 2, 32).unwrap();
    assert!((grid.value - 0.5).abs() <= 1e-9);
}

#[test]
fn non_projector_is_rejected() {
    let q = ComplexMatrix::identity(4).scaled(prodbasis::C64::new(2.0, 0.0));
    assert!(matches!(
        seesaw_max_product_overlap(&q, 2, 2, &opts(1, 0)),
        Err(Error::InvalidProjector(_))
    ));
    assert!(matches!(
        grid_oracle_max_product_overlap(&ComplexMatrix::identity(9), 3, 3, 8),
        Err(Error::DimensionTooLarge { .. })
    ));
}

#[test]
fn gen_tiles1_4_matches_frozen_baseline() {
    let report = check_upb(&gen_tiles1(4).unwrap(), &UpbConfig::default()).unwrap();
    assert!((report.max_product_overlap - 0.970278247980012).abs() <= 1e-9);
    assert_eq!(report.verdict, Verdict::UpbNumeric);
}

#[test]
fn all_small_instances_are_unextendible() {
    let mut instances: Vec<ProductBasis> =
        [4, 6, 8].iter().map(|&n| gen_tiles1(n).unwrap()).collect();
    for (m, n) in [(3, 4), (3, 5), (4, 4), (4, 5)] {
        instances.push(gen_tiles2(m, n).unwrap());
    }
    let config = UpbConfig::default();
    for basis in &instances {
        let report = check_upb(basis, &config).unwrap();
        assert_eq!(
            report.verdict,
            Verdict::UpbNumeric,
            "{}x{}",
            basis.d_a(),
            basis.d_b()
        );
        assert!(report.max_product_overlap < 1.0 - 1e-3);
        assert_eq!(report.complement_dim, basis.dim() - basis.len());
        let witness = report.witness_state.unwrap();
        let q = complement_projector(basis).unwrap();
        let recomputed = q.sandwich(&witness.joint(), &witness.joint()).re;
        assert!((recomputed - report.max_product_overlap).abs() <= 1e-10);
    }
}

#[test]
fn complete_basis_skips_the_search() {
    let report = check_upb(&cartesian_basis(3, 4).unwrap(), &UpbConfig::default()).unwrap();
    assert_eq!(report.verdict, Verdict::CompleteBasis);
    assert_eq!(report.restarts_used, 0);
    assert!(report.witness_state.is_none());
}

#[test]
fn incomplete_grid_is_extendible() {
    let grid = cartesian_basis(3, 3).unwrap();
    let partial = grid.select(&[0, 1, 2, 3, 4]);
    let report = check_upb(&partial, &UpbConfig::default()).unwrap();
    assert_eq!(report.verdict, Verdict::Extendible);
    assert!(report.max_product_overlap >= 1.0 - 1e-8);
}

#[test]
fn report_is_deterministic() {
    let basis = gen_tiles2(3, 5).unwrap();
    let config = UpbConfig {
        seesaw: opts(50, 42),
        tolerances: Tolerances::DEFAULT,
    };
    let first = check_upb(&basis, &config).unwrap();
    let second = check_upb(&basis, &config).unwrap();
    assert_eq!(first, second);
    assert_eq!(
        first.max_product_overlap.to_bits(),
        second.max_product_overlap.to_bits()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn seesaw_value_is_a_valid_overlap(seed in any::<u64>(), rank in 1usize..6) {
        let mut rng = stream_rng(seed, 1);
        let q = random_projector(&mut rng, 6, rank);
        let out = seesaw_max_product_overlap(&q, 2, 3, &opts(8, seed)).unwrap();
        prop_assert!(out.value >= -1e-12 && out.value <= 1.0 + 1e-12);
        let recomputed = q.sandwich(&out.witness.joint(), &out.witness.joint()).re;
        prop_assert!((recomputed - out.value).abs() <= 1e-10);
        prop_assert!(out.max_monotonicity_violation <= 1e-12);
    }

    #[test]
    fn more_restarts_never_lower_the_value(seed in any::<u64>()) {
        let mut rng = stream_rng(seed, 2);
        let q = random_projector(&mut rng, 9, 4);
        let few = seesaw_max_product_overlap(&q, 3, 3, &opts(4, seed)).unwrap();
        let many = seesaw_max_product_overlap(&q, 3, 3, &opts(12, seed)).unwrap();
        prop_assert!(many.value >= few.value);
    }
}
