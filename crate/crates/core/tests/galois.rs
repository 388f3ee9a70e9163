use std::sync::Arc;

use ydforge_core::builtin::{self, coregular_yd, cyclic_group, group_algebra};
use ydforge_core::galois::{
    check_bigalois_coobject, check_bigalois_object, check_identity_lift, galois_braiding,
    lift_to_classical, lift_yd,
};
use ydforge_core::hopf::Coalgebra;
use ydforge_core::rep::{BicomoduleAlgebra, BimoduleCoalgebra};
use ydforge_core::yd::YdDatum;
use ydforge_core::{FieldSpec, Matrix};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

#[test]
fn group_algebra_wedge_and_sigma() {
    let h = group_algebra(&cyclic_group(2), q()).unwrap();
    let c = BimoduleCoalgebra::regular(h.bialgebra().clone());
    let (r, cert) = check_bigalois_coobject(&c);
    let cert = cert.unwrap_or_else(|| panic!("{:?}", r.first_failure()));
    // g ∧ g = S(g)g = 1, g ∧ 1 = g.
    let gg = cert.wedge.column(3);
    assert_eq!(gg, vec![q().one(), q().zero()]);
    let g1 = cert.wedge.column(2);
    assert_eq!(g1, vec![q().zero(), q().one()]);
    let sigma = cert.sigma_map().unwrap();
    assert_eq!(sigma.matrix, Matrix::identity(q(), 2));
    assert!(cert.check_sigma(&sigma).is_ok());
}

#[test]
fn regular_and_twisted_h4_are_galois() {
    let h = builtin::sweedler_h4(q());
    let b = h.bialgebra().clone();
    let id = b.id();
    for lambda in [1, 2, -3] {
        let alpha = builtin::h4_scaling(&h, lambda);
        let c = BimoduleCoalgebra::twisted(b.clone(), &id, &alpha);
        let (r, cert) = check_bigalois_coobject(&c);
        let cert = cert.unwrap_or_else(|| panic!("{:?}", r.first_failure()));
        assert!(cert.inverse_coobject().unwrap().cbar.check().is_ok());
        let sigma = cert.sigma_map().unwrap();
        let rs = cert.check_sigma(&sigma);
        assert!(rs.is_ok(), "{:?}", rs.first_failure());
        let a = BicomoduleAlgebra::twisted(b.clone(), &alpha, &id);
        assert!(check_bigalois_object(&a).1.is_some());
    }
}

#[test]
fn flipped_sigma_comultiplicativity_fails_on_h4() {
    let h = builtin::sweedler_h4(q());
    let c = BimoduleCoalgebra::regular(h.bialgebra().clone());
    let cert = check_bigalois_coobject(&c).1.unwrap();
    let s = cert.sigma_map().unwrap().matrix;
    // On H the map is S⁻², a coalgebra map but not an anti-coalgebra map.
    assert_eq!(&s, &h.antipode().mul(h.antipode()).inverse().unwrap());
    let flip = Matrix::flip(q(), 4, 4);
    let lhs = flip.mul(&c.coalgebra.comult).mul(&s);
    let rhs = s.kron(&s).mul(&c.coalgebra.comult);
    assert_ne!(lhs, rhs);
}

#[test]
fn dimension_mismatch_is_rejected() {
    let h = group_algebra(&cyclic_group(2), q()).unwrap();
    let b = h.bialgebra().clone();
    let one = Matrix::identity(q(), 1);
    let coalgebra = Coalgebra::new(one.clone(), one.clone()).unwrap();
    let c = BimoduleCoalgebra::new(
        b.clone(),
        b.clone(),
        coalgebra,
        b.counit().clone(),
        b.counit().clone(),
    )
    .unwrap();
    assert!(c.check().is_ok());
    let (r, cert) = check_bigalois_coobject(&c);
    assert!(cert.is_none());
    let f = r.failures().next().unwrap();
    assert!(f
        .note
        .as_deref()
        .unwrap()
        .starts_with("not Galois: dimension obstruction"));
}

#[test]
fn lifts_are_yd_and_transport_to_classical() {
    let h = builtin::sweedler_h4(q());
    let b = h.bialgebra().clone();
    let alpha = builtin::h4_scaling(&h, 2);
    let c = BimoduleCoalgebra::twisted(b.clone(), &b.id(), &alpha);
    let cert = check_bigalois_coobject(&c).1.unwrap();
    let d = BimoduleCoalgebra::regular(b.clone());
    for v in builtin::classical_yd_examples(&h) {
        let lift = lift_yd(&cert, &d, &v).unwrap();
        let r = lift.module.check();
        assert!(r.is_ok(), "{:?}", r.first_failure());
        let (_, classical, rt) = lift_to_classical(&cert, &lift).unwrap();
        assert!(rt.is_ok(), "{:?}", rt.first_failure());
        assert!(classical.check().is_ok());
    }
}

#[test]
fn identity_lift_is_isomorphic() {
    let h = builtin::taft(3, 2, FieldSpec::prime(7).unwrap()).unwrap();
    let b = h.bialgebra().clone();
    let c = BimoduleCoalgebra::regular(b.clone());
    let cert = check_bigalois_coobject(&c).1.unwrap();
    for v in builtin::classical_yd_examples(&h) {
        let lift = lift_yd(&cert, &c, &v).unwrap();
        let r = check_identity_lift(&cert, &c, &v, &lift);
        assert!(r.is_ok(), "{:?}", r.first_failure());
    }
}

#[test]
fn galois_braiding_is_invertible_and_colinear() {
    let h = builtin::sweedler_h4(q());
    let b = h.bialgebra().clone();
    let alpha = builtin::h4_scaling(&h, 3);
    let id = b.id();
    let a = BicomoduleAlgebra::twisted(b.clone(), &alpha, &id);
    let c = BimoduleCoalgebra::twisted(b.clone(), &id, &alpha);
    let datum = Arc::new(YdDatum::new(a, c.clone()).unwrap());
    let m = coregular_yd(&datum).unwrap();
    let cert = check_bigalois_coobject(&c).1.unwrap();
    for v in builtin::classical_yd_examples(&h) {
        let gb = galois_braiding(&cert, &m, &v).unwrap();
        assert!(gb.report.is_ok(), "{:?}", gb.report.first_failure());
    }
}
