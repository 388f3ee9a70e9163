use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ydforge_core::builtin::yd_catalog;
use ydforge_core::linalg::{permutation, Wiring};
use ydforge_core::yd::{coaction_to_halfbraid, halfbraid_to_coaction, YdModule};
use ydforge_core::{FieldSpec, Matrix};

fn small_matrix(field: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Matrix::from_ints(field, rows, cols, &v))
}

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::prime(5).unwrap()),
        Just(FieldSpec::prime(7).unwrap())
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_and_rank(m in fields().prop_flat_map(|f| small_matrix(f, 4, 6))) {
        let k = m.kernel();
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.cols() + m.rank(), 6);
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn inverse_is_two_sided(m in fields().prop_flat_map(|f| small_matrix(f, 4, 4))) {
        let f = m.field();
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(f, 4));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(f, 4));
            }
            None => prop_assert!(m.rank() < 4),
        }
    }

    #[test]
    fn solve_produces_solutions(m in small_matrix(FieldSpec::Rationals, 3, 5), x in small_matrix(FieldSpec::Rationals, 5, 2)) {
        let b = m.mul(&x);
        let y = m.solve(&b).unwrap();
        prop_assert_eq!(m.mul(&y), b);
    }

    #[test]
    fn kronecker_mixed_product(
        a in small_matrix(FieldSpec::Rationals, 2, 3),
        b in small_matrix(FieldSpec::Rationals, 2, 2),
        c in small_matrix(FieldSpec::Rationals, 3, 2),
        d in small_matrix(FieldSpec::Rationals, 2, 3),
    ) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn wiring_matches_dense_composition(
        f in small_matrix(FieldSpec::Rationals, 3, 2),
        g in small_matrix(FieldSpec::Rationals, 2, 6),
    ) {
        let q = FieldSpec::Rationals;
        let wired = Wiring::identity(q, &[2, 3, 2])
            .apply(0, 1, &f, &[3])
            .apply(1, 2, &g, &[2])
            .permute(&[1, 0])
            .finish();
        let dense = permutation(q, &[3, 2], &[1, 0])
            .mul(&Matrix::identity(q, 3).kron(&g))
            .mul(&f.kron(&Matrix::identity(q, 6)));
        prop_assert_eq!(wired, dense);
    }

    #[test]
    fn prime_field_inverses(p in prop_oneof![Just(5u64), Just(7), Just(101)], n in -1000i64..1000) {
        let f = FieldSpec::prime(p).unwrap();
        let x = f.from_i64(n);
        match x.inv() {
            Some(y) => prop_assert!((x * y).is_one()),
            None => prop_assert!(x.is_zero()),
        }
    }

    #[test]
    fn rational_parse_display_round_trip(num in -500i64..500, den in 1i64..500) {
        let q = FieldSpec::Rationals;
        let x = q.parse(&format!("{num}/{den}")).unwrap();
        prop_assert_eq!(q.parse(&x.to_string()).unwrap(), x);
    }
}

/// Adds a random nonzero constant to one random entry of the action or
/// coaction.
fn perturb(m: &YdModule, rng: &mut ChaCha8Rng) -> YdModule {
    let mut out = m.clone();
    let f = m.action.field();
    let target = if rng.gen_bool(0.5) {
        &mut out.action
    } else {
        &mut out.coaction
    };
    let (r, c) = (
        rng.gen_range(0..target.rows()),
        rng.gen_range(0..target.cols()),
    );
    let delta = f.from_i64(*[1i64, -1, 2, 3].get(rng.gen_range(0..4)).unwrap());
    let v = target.get(r, c).clone() + delta;
    target.set(r, c, v);
    out
}

#[test]
fn both_compatibility_forms_agree_under_perturbation() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (name, m) in yd_catalog() {
        assert!(m.check().is_ok(), "{name}");
        let mut failing = 0;
        for _ in 0..12 {
            let p = perturb(&m, &mut rng);
            let defining = p.check_compatibility().is_ok();
            let inverse = p.check_compatibility_inverse_form().unwrap().is_ok();
            assert_eq!(defining, inverse, "{name}");
            failing += usize::from(!defining);
        }
        assert!(
            failing > 0 || m.dim() == 1,
            "{name}: no perturbation broke compatibility"
        );
    }
}

#[test]
fn halfbraid_round_trip_on_catalog() {
    for (name, m) in yd_catalog() {
        let hb = coaction_to_halfbraid(&m).unwrap();
        let back = halfbraid_to_coaction(&hb).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(back, m, "{name}");
    }
}
