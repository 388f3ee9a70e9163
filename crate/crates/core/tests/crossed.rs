use std::sync::Arc;

use ydforge_core::builtin::{self, coregular_yd, cyclic_group, group_algebra};
use ydforge_core::crossed::{
    alpha_beta_datum, check_alpha_beta_compatibility, check_grading_and_crossing,
    check_tensor_classes, crossed_braiding, phi_action, twist_iso, ClassKind, GradedClass,
    GradedYdModule, Twists,
};
use ydforge_core::hopf::HopfAlgebra;
use ydforge_core::yd::YdDatum;
use ydforge_core::{FieldSpec, Matrix};

fn f7() -> FieldSpec {
    FieldSpec::prime(7).unwrap()
}

fn twists(alpha: Matrix, beta: Matrix, gamma: Matrix, delta: Matrix) -> Twists {
    Twists {
        alpha,
        beta,
        gamma,
        delta,
    }
}

fn graded(h: &HopfAlgebra, t: Twists) -> GradedYdModule {
    let datum = Arc::new(alpha_beta_datum(h.bialgebra(), &t).unwrap());
    GradedYdModule::new(coregular_yd(&datum).unwrap()).unwrap()
}

/// `A = H`, `C = _{α_λ}H`: right class `α_λ`.
fn right_graded(h: &HopfAlgebra, lambda: i64) -> GradedYdModule {
    let id = h.bialgebra().id();
    graded(
        h,
        twists(id.clone(), id.clone(), builtin::h4_scaling(h, lambda), id),
    )
}

/// `A = ^{α_λ}H`, `C = H`: left class `α_λ`.
fn left_graded(h: &HopfAlgebra, lambda: i64) -> GradedYdModule {
    let id = h.bialgebra().id();
    graded(
        h,
        twists(builtin::h4_scaling(h, lambda), id.clone(), id.clone(), id),
    )
}

#[test]
fn identity_twists_give_the_regular_datum() {
    let h = builtin::sweedler_h4(FieldSpec::Rationals);
    let b = h.bialgebra();
    let id = b.id();
    let d = alpha_beta_datum(b, &twists(id.clone(), id.clone(), id.clone(), id)).unwrap();
    assert_eq!(d, YdDatum::regular(b.clone()));
}

#[test]
fn twisted_forms_agree_with_the_general_compatibility() {
    let h = builtin::sweedler_h4(FieldSpec::Rationals);
    let b = h.bialgebra();
    let id = b.id();
    let s2 = h.antipode().mul(h.antipode());
    let cases = [
        twists(
            builtin::h4_scaling(&h, 2),
            id.clone(),
            id.clone(),
            id.clone(),
        ),
        twists(id.clone(), s2.clone(), id.clone(), id.clone()),
        twists(
            builtin::h4_scaling(&h, 3),
            s2,
            builtin::h4_scaling(&h, -1),
            builtin::h4_scaling(&h, 5),
        ),
    ];
    for t in cases {
        let datum = Arc::new(alpha_beta_datum(b, &t).unwrap());
        assert!(datum.check().is_ok());
        let m = coregular_yd(&datum).unwrap();
        assert!(m.check().is_ok());
        assert!(check_alpha_beta_compatibility(&m).unwrap().is_ok());
        let mut failures = 0;
        for entry in [0, 5, 9, 14] {
            let mut bad = m.clone();
            let (r, c) = (entry % 4, entry % 16);
            let v = bad.action.get(r, c).clone() + FieldSpec::Rationals.one();
            bad.action.set(r, c, v);
            let general = bad.check_compatibility().is_ok();
            let twisted = check_alpha_beta_compatibility(&bad).unwrap();
            assert_eq!(general, twisted.findings[0].ok);
            assert_eq!(general, twisted.findings[1].ok);
            failures += usize::from(!general);
        }
        assert!(failures > 0);
    }
}

#[test]
fn twist_isomorphisms_compose() {
    let h = builtin::sweedler_h4(FieldSpec::Rationals);
    let b = h.bialgebra();
    let id = b.id();
    assert_eq!(
        twist_iso(b, &id, &id, &id).unwrap(),
        (id.clone(), id.clone())
    );
    let a2 = builtin::h4_scaling(&h, 2);
    let a3 = builtin::h4_scaling(&h, 3);
    let (g2, _) = twist_iso(b, &a3, &id, &a2).unwrap();
    let (g3, _) = twist_iso(b, &a3, &id, &a3).unwrap();
    let (g6, _) = twist_iso(b, &a3, &id, &a2.mul(&a3)).unwrap();
    assert_eq!(g2.mul(&g3), g6);
    let mut bad = id.clone();
    bad.set(1, 2, FieldSpec::Rationals.one());
    assert!(twist_iso(b, &id, &id, &bad).is_err());
}

#[test]
fn phi_identity_and_inverse() {
    let h = builtin::sweedler_h4(f7());
    let m = right_graded(&h, 2);
    for kind in [ClassKind::GaloisObject, ClassKind::GaloisCoobject] {
        let e = GradedClass::identity(kind, h.bialgebra().clone());
        assert_eq!(phi_action(&e, &m).unwrap(), m);
        let g = GradedClass::new(kind, h.bialgebra().clone(), builtin::h4_scaling(&h, 3)).unwrap();
        let x = phi_action(&g, &m).unwrap();
        assert!(x.check().is_ok());
        assert_eq!(phi_action(&g.inverse(), &x).unwrap(), m);
    }
}

#[test]
fn scaling_classes_compose_over_f7() {
    let h = builtin::sweedler_h4(f7());
    let (m, n) = (right_graded(&h, 2), right_graded(&h, 3));
    assert!(m.check().is_ok() && n.check().is_ok());
    let composite = m.right_class.compose(&n.right_class).unwrap();
    assert_eq!(composite.representative, builtin::h4_scaling(&h, 6));
    let r = check_tensor_classes(&m, &n).unwrap();
    assert!(r.is_ok(), "{:?}", r.first_failure());
    let (p, q) = (left_graded(&h, 2), left_graded(&h, 3));
    let r = check_tensor_classes(&p, &q).unwrap();
    assert!(r.is_ok(), "{:?}", r.first_failure());
    assert_eq!(
        p.left_class.compose(&q.left_class).unwrap().representative,
        builtin::h4_scaling(&h, 6)
    );
}

#[test]
fn crossed_braiding_is_a_graded_isomorphism() {
    let h = builtin::sweedler_h4(f7());
    let (x, y) = (right_graded(&h, 2), right_graded(&h, 3));
    let cb = crossed_braiding(&x, &y).unwrap();
    assert!(cb.report.is_ok(), "{:?}", cb.report.first_failure());
    assert_eq!(
        cb.twisted.right_class,
        x.right_class.conjugate(&y.right_class).unwrap()
    );
    assert!(crossed_braiding(&left_graded(&h, 2), &y).is_err());
}

#[test]
fn grading_and_crossing_report() {
    let h = builtin::sweedler_h4(f7());
    let ms = [right_graded(&h, 2), right_graded(&h, 3), left_graded(&h, 3)];
    let r = check_grading_and_crossing(&ms);
    assert!(r.is_ok(), "{:?}", r.first_failure());
    let k = group_algebra(&cyclic_group(2), f7()).unwrap();
    let id = k.bialgebra().id();
    let other = graded(&k, twists(id.clone(), id.clone(), id.clone(), id));
    let r = check_grading_and_crossing(&[ms[0].clone(), other]);
    assert!(r
        .findings
        .iter()
        .any(|f| f.note.as_deref() == Some("empty composite (0-dimensional)")));
}

/// The Hopf automorphism of `kG` induced by conjugation with `t`.
fn inner(table: &[Vec<usize>], t: usize, field: FieldSpec) -> Matrix {
    let n = table.len();
    let e = (0..n).find(|&e| (0..n).all(|i| table[e][i] == i)).unwrap();
    let t_inv = (0..n).find(|&s| table[t][s] == e).unwrap();
    Matrix::from_fn(field, n, n, |i, j| {
        if table[table[t][j]][t_inv] == i {
            field.one()
        } else {
            field.zero()
        }
    })
}

#[test]
fn conjugation_law_with_noncommuting_classes() {
    let q = FieldSpec::Rationals;
    let table = builtin::symmetric_group_s3();
    let h = group_algebra(&table, q).unwrap();
    let id = h.bialgebra().id();
    let n = table.len();
    let transpositions: Vec<usize> = (0..n).filter(|&t| t != 0 && table[t][t] == 0).collect();
    let (g1, g2) = (
        inner(&table, transpositions[0], q),
        inner(&table, transpositions[1], q),
    );
    assert_ne!(g1.mul(&g2), g2.mul(&g1));
    let x = graded(&h, twists(id.clone(), id.clone(), g1, id.clone()));
    let y = graded(&h, twists(id.clone(), id.clone(), g2, id.clone()));
    let cb = crossed_braiding(&x, &y).unwrap();
    assert!(cb.report.is_ok(), "{:?}", cb.report.first_failure());
    assert_ne!(cb.twisted.right_class, x.right_class);
    let r = check_grading_and_crossing(&[x, y]);
    assert!(r.is_ok(), "{:?}", r.first_failure());
}
