use std::sync::Arc;

use ydforge_core::builtin::{self, coregular_yd, cyclic_group, group_algebra, symmetric_group_s3};
use ydforge_core::rep::{BicomoduleAlgebra, BimoduleCoalgebra, LeftModule, RightComodule};
use ydforge_core::yd::{
    braid_map, check_braid_coherence, check_braid_linearity, check_dual_braid_colinearity,
    coaction_to_halfbraid, dual_braid_map, halfbraid_to_coaction, tensor_yd, YdDatum, YdModule,
};
use ydforge_core::{FieldSpec, Matrix};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

#[test]
fn classical_examples_pass() {
    let algebras = [
        group_algebra(&cyclic_group(2), q()).unwrap(),
        group_algebra(&cyclic_group(3), FieldSpec::prime(7).unwrap()).unwrap(),
        group_algebra(&symmetric_group_s3(), q()).unwrap(),
        builtin::sweedler_h4(q()),
        builtin::taft(3, 2, FieldSpec::prime(7).unwrap()).unwrap(),
    ];
    for h in &algebras {
        let examples = builtin::classical_yd_examples(h);
        assert!(examples.len() >= 2);
        for m in &examples {
            let r = m.check();
            assert!(r.is_ok(), "{:?}", r.first_failure());
            assert!(m.check_compatibility_inverse_form().unwrap().is_ok());
        }
    }
}

#[test]
fn multiplication_action_fails_with_witness() {
    let h = group_algebra(&cyclic_group(2), q()).unwrap();
    let conj = builtin::conjugation_yd(&h).unwrap();
    let bad = YdModule::new(
        conj.datum.clone(),
        2,
        h.mult().clone(),
        conj.coaction.clone(),
    )
    .unwrap();
    let r = bad.check();
    let f = r
        .failures()
        .find(|f| f.check == "YD compatibility")
        .unwrap();
    let w = f.witness.as_ref().unwrap();
    // a = g, m = 1: LHS g ⊗ g·g, RHS g ⊗ g.
    assert_eq!(w.basis_tuple, vec![1, 0]);
    assert_ne!(w.lhs, w.rhs);
}

fn twisted_datum(lambda: i64) -> Arc<YdDatum> {
    let h = builtin::sweedler_h4(q());
    let b = h.bialgebra().clone();
    let alpha = builtin::h4_scaling(&h, lambda);
    let id = b.id();
    let a = BicomoduleAlgebra::twisted(b.clone(), &alpha, &id);
    let c = BimoduleCoalgebra::twisted(b.clone(), &id, &alpha);
    Arc::new(YdDatum::new(a, c).unwrap())
}

#[test]
fn coregular_over_twisted_datum() {
    let d = twisted_datum(3);
    assert!(d.check().is_ok());
    let m = coregular_yd(&d).unwrap();
    assert!(m.check().is_ok(), "{:?}", m.check().first_failure());
}

#[test]
fn tensor_of_yd_modules_is_yd() {
    let h = builtin::sweedler_h4(q());
    let ms = builtin::classical_yd_examples(&h);
    let t = tensor_yd(&ms[1], &ms[1]).unwrap();
    assert!(t.module.datum.check().is_ok());
    let r = t.module.check();
    assert!(r.is_ok(), "{:?}", r.first_failure());
}

#[test]
fn braid_is_linear_and_coherent() {
    let h = builtin::sweedler_h4(q());
    let ms = builtin::classical_yd_examples(&h);
    let m = &ms[1];
    let v = LeftModule::regular(&h.algebra);
    let b = braid_map(m, &v).unwrap();
    assert!(check_braid_linearity(m, &v, &b).is_ok());
    let u = LeftModule::trivial(h.bialgebra());
    let r = check_braid_coherence(m, &ms[1], &u, &v).unwrap();
    assert!(r.is_ok(), "{:?}", r.first_failure());
}

#[test]
fn halfbraid_round_trip() {
    let d = twisted_datum(2);
    let m = coregular_yd(&d).unwrap();
    let hb = coaction_to_halfbraid(&m).unwrap();
    let back = halfbraid_to_coaction(&hb).unwrap();
    assert_eq!(back, m);
    assert_eq!(coaction_to_halfbraid(&back).unwrap(), hb);
}

#[test]
fn dual_braid_colinear_iff_compatible() {
    let d = twisted_datum(2);
    let m = coregular_yd(&d).unwrap();
    let v = RightComodule {
        coaction: d.h().comult().clone(),
    };
    let db = dual_braid_map(&m, &v);
    assert!(check_dual_braid_colinearity(&m, &v, &db).is_ok());
    let mut bad = m.clone();
    let f = q();
    let mut act = bad.action.clone();
    act.set(0, 5, f.from_i64(1) + act.get(0, 5).clone());
    bad.action = act;
    assert!(!bad.check_compatibility().is_ok());
    assert!(!check_dual_braid_colinearity(&bad, &v, &dual_braid_map(&bad, &v)).is_ok());
    let _ = Matrix::identity(f, 1);
}
