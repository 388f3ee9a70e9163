//! Bi-Galois objects and co-objects, the Morita maps `∧` and `∨`, the
//! inverse co-object `C̄`, the map `σ̄`, the lift of YD modules along a
//! bi-Galois co-object and the resulting invertible braiding.

use std::sync::Arc;

use crate::hopf::Coalgebra;
use crate::linalg::{Matrix, Quotient, Wiring};
use crate::rep::{
    balanced_tensor, induced_module, BicomoduleAlgebra, BimoduleCoalgebra, InducedModule,
};
use crate::report::Report;
use crate::yd::{braid_map, regular_balanced_iso, tensor_yd, YdDatum, YdModule};
use crate::Error;

const DIMENSION_OBSTRUCTION: &str = "not Galois: dimension obstruction";

/// Verified data of a (K, H)-bi-Galois co-object `C`.
#[derive(Clone, Debug)]
pub struct GaloisCoobjectCert {
    pub c: BimoduleCoalgebra,
    pub over_can: Matrix,
    pub over_can_inv: Matrix,
    pub under_can: Matrix,
    pub under_can_inv: Matrix,
    /// `ε(u) = 1`.
    pub u: Matrix,
    /// `c̄ ∧ d`, on representatives in `C ⊗ C` (first factor read in `C̄`).
    pub wedge: Matrix,
    /// `c ∨ d̄`, on representatives in `C ⊗ C` (second factor read in `C̄`).
    pub vee: Matrix,
}

/// `C̄`: the co-opposite coalgebra of `C` as an (H, K)-bimodule coalgebra
/// with `h ▶ c ◀ k = S⁻¹_K(k) ▷ c ◁ S⁻¹_H(h)`.
#[derive(Clone, Debug)]
pub struct InverseCoobject {
    pub cbar: BimoduleCoalgebra,
}

/// `σ̄: C -> C̄`, `σ̄(c) = S⁻¹_H(u₁ ∧ c) ▶ u₂`.
#[derive(Clone, Debug)]
pub struct SigmaMap {
    pub matrix: Matrix,
}

fn dims_of(c: &BimoduleCoalgebra) -> (usize, usize, usize) {
    (c.k.dim(), c.h.dim(), c.dim())
}

/// `over_can(c ⊗ h) = c₁ ⊗ c₂ ◁ h`, `C ⊗ H -> C ⊗ C`.
pub fn over_can(c: &BimoduleCoalgebra) -> Matrix {
    let (_, hd, n) = dims_of(c);
    Wiring::identity(c.coalgebra.field(), &[n, hd])
        .apply(0, 1, &c.coalgebra.comult, &[n, n])
        .apply(1, 2, &c.right, &[n])
        .finish()
}

/// `under_can(k ⊗ c) = k ▷ c₁ ⊗ c₂`, `K ⊗ C -> C ⊗ C`.
pub fn under_can(c: &BimoduleCoalgebra) -> Matrix {
    let (kd, _, n) = dims_of(c);
    Wiring::identity(c.coalgebra.field(), &[kd, n])
        .apply(1, 1, &c.coalgebra.comult, &[n, n])
        .apply(0, 2, &c.left, &[n])
        .finish()
}

/// Checks that `C` is a bi-Galois co-object and builds its certificate.
/// On failure the report names the first failing condition.
pub fn check_bigalois_coobject(c: &BimoduleCoalgebra) -> (Report, Option<GaloisCoobjectCert>) {
    let mut r = Report::new();
    let (kd, hd, n) = dims_of(c);
    let f = c.coalgebra.field();
    if !r.check_true(
        "C is a bimodule coalgebra",
        "C is a (K, H)-bimodule coalgebra",
        c.check().is_ok(),
        None,
    ) {
        return (r, None);
    }
    if n != hd || n != kd {
        r.check_true(
            "canonical maps are square",
            "dim C = dim H = dim K",
            false,
            Some(format!(
                "{DIMENSION_OBSTRUCTION} (dim C = {n}, dim H = {hd}, dim K = {kd})"
            )),
        );
        return (r, None);
    }
    let over = over_can(c);
    let under = under_can(c);
    let (Some(over_inv), Some(under_inv)) = (over.inverse(), under.inverse()) else {
        r.check_true(
            "canonical maps invertible",
            "c ⊗ h ↦ c₁ ⊗ c₂ ◁ h and k ⊗ c ↦ k ▷ c₁ ⊗ c₂ are bijective",
            false,
            Some("not Galois: a canonical map is singular".into()),
        );
        return (r, None);
    };
    r.check_true(
        "canonical maps invertible",
        "c ⊗ h ↦ c₁ ⊗ c₂ ◁ h and k ⊗ c ↦ k ▷ c₁ ⊗ c₂ are bijective",
        true,
        None,
    );
    r.check_maps(
        "over_can inverse",
        "over_can ∘ over_can⁻¹ = id",
        &over.mul(&over_inv),
        &Matrix::identity(f, n * n),
        &[n, n],
    );
    r.check_maps(
        "under_can inverse",
        "under_can ∘ under_can⁻¹ = id",
        &under.mul(&under_inv),
        &Matrix::identity(f, n * n),
        &[n, n],
    );

    // can₀: C / C·H⁺ ≅ k and C / K⁺·C ≅ k.
    let eps_h = c.h.counit();
    let eps_k = c.k.counit();
    let right_aug = c.right.sub(&Matrix::identity(f, n).kron(eps_h));
    let left_aug = c.left.sub(&eps_k.kron(&Matrix::identity(f, n)));
    let q_right = Quotient::new(&right_aug).dim();
    let q_left = Quotient::new(&left_aug).dim();
    if !r.check_true(
        "can₀ bijective",
        "C ⊗_H k ≅ k ≅ k ⊗_K C",
        q_right == 1 && q_left == 1,
        Some(format!("dimensions {q_right} and {q_left}")),
    ) {
        return (r, None);
    }

    let wedge = Wiring::from_map(&over_inv, &[n, hd])
        .apply(0, 1, &c.coalgebra.counit, &[])
        .finish();
    let vee = Wiring::from_map(&under_inv, &[kd, n])
        .apply(1, 1, &c.coalgebra.counit, &[])
        .finish();

    let Some(u) = find_u(&c.coalgebra) else {
        r.check_true("counit nonzero", "ε(u) = 1 for some u", false, None);
        return (r, None);
    };
    let cert = GaloisCoobjectCert {
        c: c.clone(),
        over_can: over,
        over_can_inv: over_inv,
        under_can: under,
        under_can_inv: under_inv,
        u,
        wedge,
        vee,
    };
    r.merge(cert.check_identities());
    if r.is_ok() {
        (r, Some(cert))
    } else {
        (r, None)
    }
}

/// The first basis vector with nonzero counit, rescaled so that `ε(u) = 1`.
pub fn find_u(c: &Coalgebra) -> Option<Matrix> {
    let n = c.dim();
    let j = (0..n).find(|&j| !c.counit.get(0, j).is_zero())?;
    let inv = c.counit.get(0, j).inv()?;
    Some(Matrix::unit_vector(c.field(), n, j).scale(&inv))
}

impl GaloisCoobjectCert {
    fn field(&self) -> crate::FieldSpec {
        self.c.coalgebra.field()
    }

    /// All Morita identities, the grouplike and dual-basis properties of `u`.
    pub fn check_identities(&self) -> Report {
        let (kd, hd, n) = dims_of(&self.c);
        let f = self.field();
        let c = &self.c;
        let comult = &c.coalgebra.comult;
        let eps = &c.coalgebra.counit;
        let mut r = Report::new();
        r.check_maps(
            "∧ on the comultiplication",
            "c₁ ∧ c₂ = ε(c)1",
            &self.wedge.mul(comult),
            &c.h.unit().mul(eps),
            &[n],
        );
        r.check_maps(
            "∨ on the comultiplication",
            "c₁ ∨ c₂ = ε(c)1",
            &self.vee.mul(comult),
            &c.k.unit().mul(eps),
            &[n],
        );
        let lhs = Wiring::identity(f, &[n, n, n])
            .apply(1, 2, &self.wedge, &[hd])
            .apply(0, 2, &c.right, &[n])
            .finish();
        let rhs = Wiring::identity(f, &[n, n, n])
            .apply(0, 2, &self.vee, &[kd])
            .apply(0, 2, &c.left, &[n])
            .finish();
        r.check_maps(
            "∧ and ∨ associate",
            "c ◁ (d ∧ e) = (c ∨ d) ▷ e",
            &lhs,
            &rhs,
            &[n, n, n],
        );

        // Coalgebra maps out of C̄ ⊗ C and C ⊗ C̄.
        let cop = Matrix::flip(f, n, n).mul(comult);
        let d_bar_c = Wiring::identity(f, &[n, n])
            .apply(0, 1, &cop, &[n, n])
            .apply(2, 1, comult, &[n, n])
            .permute(&[0, 2, 1, 3])
            .finish();
        let d_c_bar = Wiring::identity(f, &[n, n])
            .apply(0, 1, comult, &[n, n])
            .apply(2, 1, &cop, &[n, n])
            .permute(&[0, 2, 1, 3])
            .finish();
        r.check_maps(
            "∧ is comultiplicative",
            "(c̄ ∧ d)₁ ⊗ (c̄ ∧ d)₂ = c̄₁ ∧ d₁ ⊗ c̄₂ ∧ d₂",
            &c.h.comult().mul(&self.wedge),
            &self.wedge.kron(&self.wedge).mul(&d_bar_c),
            &[n, n],
        );
        r.check_maps(
            "∧ is counital",
            "ε(c̄ ∧ d) = ε(c)ε(d)",
            &c.h.counit().mul(&self.wedge),
            &eps.kron(eps),
            &[n, n],
        );
        r.check_maps(
            "∨ is comultiplicative",
            "(c ∨ d̄)₁ ⊗ (c ∨ d̄)₂ = c₁ ∨ d̄₁ ⊗ c₂ ∨ d̄₂",
            &c.k.comult().mul(&self.vee),
            &self.vee.kron(&self.vee).mul(&d_c_bar),
            &[n, n],
        );
        r.check_maps(
            "∨ is counital",
            "ε(c ∨ d̄) = ε(c)ε(d)",
            &c.k.counit().mul(&self.vee),
            &eps.kron(eps),
            &[n, n],
        );

        let Ok(inv) = self.inverse_coobject() else {
            r.check_true(
                "antipodes invertible",
                "S_H and S_K are bijective",
                false,
                None,
            );
            return r;
        };
        let cbar = &inv.cbar;
        // ∧ descends to C̄ ⊗_K C and ∨ to C ⊗_H C̄.
        let wedge_q = balanced_tensor(&cbar.right_module(), &c.left_module());
        r.check_true(
            "∧ is K-balanced",
            "(c̄ ◀ k) ∧ d = c̄ ∧ (k ▷ d)",
            wedge_q.descend(&self.wedge).is_some(),
            None,
        );
        let vee_q = balanced_tensor(&c.right_module(), &cbar.left_module());
        let Some(vee_desc) = vee_q.descend(&self.vee) else {
            r.check_true("∨ is H-balanced", "(c ◁ h) ∨ d̄ = c ∨ (h ▶ d̄)", false, None);
            return r;
        };
        r.check_true("∨ is H-balanced", "(c ◁ h) ∨ d̄ = c ∨ (h ▶ d̄)", true, None);

        let du = comult.mul(&self.u);
        let x = vee_q.projection().mul(&du);
        let q = vee_q.dim();
        let qcomult = Wiring::identity(f, &[n, n])
            .apply(0, 1, comult, &[n, n])
            .apply(2, 1, &cop, &[n, n])
            .permute(&[0, 2, 1, 3])
            .apply(0, 2, vee_q.projection(), &[q])
            .apply(1, 2, vee_q.projection(), &[q])
            .finish();
        let qcomult = vee_q.descend(&qcomult);
        let ok = qcomult.as_ref().is_some_and(|d| d.mul(&x) == x.kron(&x))
            && eps.kron(eps).mul(&du).get(0, 0).is_one();
        r.check_true(
            "u₁ ⊗ u₂ is grouplike",
            "Δ(u₁ ⊗_H u₂) = (u₁ ⊗_H u₂) ⊗ (u₁ ⊗_H u₂)",
            ok,
            None,
        );
        r.check_true(
            "∨ is an isomorphism C ⊗_H C̄ -> K",
            "∨⁻¹(1) = u₁ ⊗_H u₂",
            vee_desc.is_invertible() && vee_desc.mul(&x) == *c.k.unit(),
            None,
        );

        // Dual bases: c = u₁ ◁ (u₂ ∧ c) = (c ∨ u₁) ▷ u₂.
        let id = Matrix::identity(f, n);
        let first = Wiring::from_map(&du.kron(&id), &[n, n, n])
            .apply(1, 2, &self.wedge, &[hd])
            .apply(0, 2, &c.right, &[n])
            .finish();
        r.check_maps("dual basis via ∧", "c = u₁ ◁ (u₂ ∧ c)", &first, &id, &[n]);
        let second = Wiring::from_map(&id.kron(&du), &[n, n, n])
            .apply(0, 2, &self.vee, &[kd])
            .apply(0, 2, &c.left, &[n])
            .finish();
        r.check_maps("dual basis via ∨", "c = (c ∨ u₁) ▷ u₂", &second, &id, &[n]);
        r
    }

    pub fn inverse_coobject(&self) -> Result<InverseCoobject, Error> {
        inverse_coobject(&self.c)
    }

    /// `σ̄(c) = u₂ ◁ S⁻¹_H(S⁻¹_H(u₁ ∧ c))`.
    pub fn sigma_map(&self) -> Result<SigmaMap, Error> {
        let (_, hd, n) = dims_of(&self.c);
        let f = self.field();
        let s_inv = self
            .c
            .h
            .s_inv()
            .ok_or_else(|| Error::NoAntipode("S⁻¹ of H is needed for σ̄".into()))?;
        let du = self.c.coalgebra.comult.mul(&self.u);
        let matrix = Wiring::from_map(&du.kron(&Matrix::identity(f, n)), &[n, n, n])
            .permute(&[0, 2, 1])
            .apply(0, 2, &self.wedge, &[hd])
            .apply(0, 1, s_inv, &[hd])
            .apply(0, 1, s_inv, &[hd])
            .permute(&[1, 0])
            .apply(0, 2, &self.c.right, &[n])
            .finish();
        Ok(SigmaMap { matrix })
    }

    /// The σ̄ invariants: comultiplicativity (in the form
    /// `Δ(σ̄(c)) = σ̄(c₁) ⊗ σ̄(c₂)` computed in `C`), counit,
    /// `σ̄(c₂) ∧ c₁ = ε(c)1` and equivariance.
    pub fn check_sigma(&self, sigma: &SigmaMap) -> Report {
        let (kd, hd, n) = dims_of(&self.c);
        let f = self.field();
        let c = &self.c;
        let s = &sigma.matrix;
        let mut r = Report::new();
        r.check_maps(
            "σ̄ is comultiplicative",
            "σ̄(c)₁ ⊗ σ̄(c)₂ = σ̄(c₁) ⊗ σ̄(c₂)",
            &c.coalgebra.comult.mul(s),
            &s.kron(s).mul(&c.coalgebra.comult),
            &[n],
        );
        r.check_maps(
            "σ̄ is counital",
            "ε(σ̄(c)) = ε(c)",
            &c.coalgebra.counit.mul(s),
            &c.coalgebra.counit,
            &[n],
        );
        let lhs = Wiring::identity(f, &[n])
            .apply(0, 1, &c.coalgebra.comult, &[n, n])
            .permute(&[1, 0])
            .apply(0, 1, s, &[n])
            .apply(0, 2, &self.wedge, &[hd])
            .finish();
        r.check_maps(
            "σ̄ inverts ∧",
            "σ̄(c₂) ∧ c₁ = ε(c)1",
            &lhs,
            &c.h.unit().mul(&c.coalgebra.counit),
            &[n],
        );
        let (Some(sh), Some(sk)) = (c.h.s_inv(), c.k.s_inv()) else {
            r.check_true(
                "antipodes invertible",
                "S_H and S_K are bijective",
                false,
                None,
            );
            return r;
        };
        let lhs = Wiring::identity(f, &[kd, n, hd])
            .apply(1, 2, &c.right, &[n])
            .apply(0, 2, &c.left, &[n])
            .apply(0, 1, s, &[n])
            .finish();
        let rhs = Wiring::identity(f, &[kd, n, hd])
            .apply(1, 1, s, &[n])
            .apply(0, 1, &sk.mul(sk), &[kd])
            .apply(2, 1, &sh.mul(sh), &[hd])
            .apply(1, 2, &c.right, &[n])
            .apply(0, 2, &c.left, &[n])
            .finish();
        r.check_maps(
            "σ̄ is equivariant",
            "σ̄(k ▷ c ◁ h) = S⁻¹(h) ▶ σ̄(c) ◀ S⁻¹(k)",
            &lhs,
            &rhs,
            &[kd, n, hd],
        );
        r
    }
}

pub fn inverse_coobject(c: &BimoduleCoalgebra) -> Result<InverseCoobject, Error> {
    let (kd, hd, n) = dims_of(c);
    let f = c.coalgebra.field();
    let sh =
        c.h.s_inv()
            .ok_or_else(|| Error::NoAntipode("S⁻¹ of H is needed for C̄".into()))?;
    let sk =
        c.k.s_inv()
            .ok_or_else(|| Error::NoAntipode("S⁻¹ of K is needed for C̄".into()))?;
    let left = Wiring::identity(f, &[hd, n])
        .apply(0, 1, sh, &[hd])
        .permute(&[1, 0])
        .apply(0, 2, &c.right, &[n])
        .finish();
    let right = Wiring::identity(f, &[n, kd])
        .apply(1, 1, sk, &[kd])
        .permute(&[1, 0])
        .apply(0, 2, &c.left, &[n])
        .finish();
    let cbar = BimoduleCoalgebra::new(
        c.h.clone(),
        c.k.clone(),
        c.coalgebra.coopposite(),
        left,
        right,
    )?;
    Ok(InverseCoobject { cbar })
}

/// Verified data of an (H, K)-bi-Galois object `A`.
#[derive(Clone, Debug)]
pub struct GaloisObjectCert {
    pub can_left: Matrix,
    pub can_left_inv: Matrix,
    pub can_right: Matrix,
    pub can_right_inv: Matrix,
}

/// `a ⊗ b ↦ a₋₁ ⊗ a₀b` and `a ⊗ b ↦ ab₀ ⊗ b₁` must both be bijective.
pub fn check_bigalois_object(a: &BicomoduleAlgebra) -> (Report, Option<GaloisObjectCert>) {
    let mut r = Report::new();
    let (n, hd, kd) = (a.dim(), a.h.dim(), a.k.dim());
    let f = a.algebra.field();
    if !r.check_true(
        "A is a bicomodule algebra",
        "A is an (H, K)-bicomodule algebra",
        a.check().is_ok(),
        None,
    ) {
        return (r, None);
    }
    if n != hd || n != kd || n == 0 {
        r.check_true(
            "canonical maps are square",
            "dim A = dim H = dim K",
            false,
            Some(format!(
                "{DIMENSION_OBSTRUCTION} (dim A = {n}, dim H = {hd}, dim K = {kd})"
            )),
        );
        return (r, None);
    }
    let can_left = Wiring::identity(f, &[n, n])
        .apply(0, 1, &a.left, &[hd, n])
        .apply(1, 2, &a.algebra.mult, &[n])
        .finish();
    let can_right = Wiring::identity(f, &[n, n])
        .apply(1, 1, &a.right, &[n, kd])
        .apply(0, 2, &a.algebra.mult, &[n])
        .finish();
    let (Some(li), Some(ri)) = (can_left.inverse(), can_right.inverse()) else {
        r.check_true(
            "canonical maps invertible",
            "a ⊗ b ↦ a₋₁ ⊗ a₀b and a ⊗ b ↦ ab₀ ⊗ b₁ are bijective",
            false,
            Some("not Galois: a canonical map is singular".into()),
        );
        return (r, None);
    };
    r.check_true(
        "canonical maps invertible",
        "a ⊗ b ↦ a₋₁ ⊗ a₀b and a ⊗ b ↦ ab₀ ⊗ b₁ are bijective",
        true,
        None,
    );
    r.check_maps(
        "left canonical inverse",
        "can ∘ can⁻¹ = id",
        &can_left.mul(&li),
        &Matrix::identity(f, n * n),
        &[n, n],
    );
    r.check_maps(
        "right canonical inverse",
        "can ∘ can⁻¹ = id",
        &can_right.mul(&ri),
        &Matrix::identity(f, n * n),
        &[n, n],
    );
    let cert = GaloisObjectCert {
        can_left,
        can_left_inv: li,
        can_right,
        can_right_inv: ri,
    };
    (r, Some(cert))
}

/// The lift of a YD module over `(H, H, H, D)` to one over
/// `(K, K, K, C ⊗_H D ⊗_H C̄)`, carried by `C ⊗_H V`.
#[derive(Clone, Debug)]
pub struct Lift {
    pub module: YdModule,
    pub space: InducedModule,
    pub coalgebra: Quotient,
}

pub fn lift_yd(
    cert: &GaloisCoobjectCert,
    d: &BimoduleCoalgebra,
    v: &YdModule,
) -> Result<Lift, Error> {
    let c = &cert.c;
    let h = c.h.clone();
    let k = c.k.clone();
    if d.k != h || d.h != h {
        return Err(Error::Incompatible(
            "D must be an (H, H)-bimodule coalgebra".into(),
        ));
    }
    if v.datum.h() != &h
        || v.datum.k() != &h
        || v.datum.a != BicomoduleAlgebra::regular(h.clone())
        || v.datum.c != *d
    {
        return Err(Error::Incompatible(
            "V must be a YD module over (H, H, H, D)".into(),
        ));
    }
    let f = c.coalgebra.field();
    let (kd, hd, n) = dims_of(c);
    let (dd, dv) = (d.dim(), v.dim());
    let cbar = cert.inverse_coobject()?.cbar;
    let sigma = cert.sigma_map()?;

    let rel_left = Wiring::identity(f, &[n, hd, dd, n])
        .apply(0, 2, &c.right, &[n])
        .finish()
        .sub(
            &Wiring::identity(f, &[n, hd, dd, n])
                .apply(1, 2, &d.left, &[dd])
                .finish(),
        );
    let rel_right = Wiring::identity(f, &[n, dd, hd, n])
        .apply(1, 2, &d.right, &[dd])
        .finish()
        .sub(
            &Wiring::identity(f, &[n, dd, hd, n])
                .apply(2, 2, &cbar.left, &[n])
                .finish(),
        );
    let t = Quotient::new(&rel_left.hstack(&rel_right));
    let td = t.dim();
    let pi_t = t.projection();
    let bad =
        |what: &str| Error::Incompatible(format!("{what} is not well defined on C ⊗_H D ⊗_H C̄"));

    let cop = &cbar.coalgebra.comult;
    let comult = Wiring::identity(f, &[n, dd, n])
        .apply(0, 1, &c.coalgebra.comult, &[n, n])
        .apply(2, 1, &d.coalgebra.comult, &[dd, dd])
        .apply(4, 1, cop, &[n, n])
        .permute(&[0, 2, 4, 1, 3, 5])
        .apply(0, 3, pi_t, &[td])
        .apply(1, 3, pi_t, &[td])
        .finish();
    let comult = t.descend(&comult).ok_or_else(|| bad("comultiplication"))?;
    let counit = c
        .coalgebra
        .counit
        .kron(&d.coalgebra.counit)
        .kron(&cbar.coalgebra.counit);
    let counit = t.descend(&counit).ok_or_else(|| bad("counit"))?;
    let left = Wiring::identity(f, &[kd, n, dd, n])
        .apply(0, 2, &c.left, &[n])
        .apply(0, 3, pi_t, &[td])
        .finish();
    let left = t
        .descend_factor(&left, &[kd, n * dd * n], 1)
        .ok_or_else(|| bad("left K-action"))?;
    let right = Wiring::identity(f, &[n, dd, n, kd])
        .apply(2, 2, &cbar.right, &[n])
        .apply(0, 3, pi_t, &[td])
        .finish();
    let right = t
        .descend_factor(&right, &[n * dd * n, kd], 0)
        .ok_or_else(|| bad("right K-action"))?;
    let tc = BimoduleCoalgebra::new(
        k.clone(),
        k.clone(),
        Coalgebra::new(comult, counit)?,
        left,
        right,
    )?;
    let datum = Arc::new(YdDatum::new(BicomoduleAlgebra::regular(k.clone()), tc)?);

    let space = induced_module(c, &v.module())?;
    let x = &space.quotient;
    let xd = x.dim();
    let coaction = Wiring::identity(f, &[n, dv])
        .apply(0, 1, &c.coalgebra.comult, &[n, n])
        .apply(1, 1, &c.coalgebra.comult, &[n, n])
        .apply(3, 1, &v.coaction, &[dv, dd])
        .apply(0, 1, &sigma.matrix, &[n])
        .permute(&[1, 3, 2, 4, 0])
        .apply(0, 2, x.projection(), &[xd])
        .apply(1, 3, pi_t, &[td])
        .finish();
    let coaction = x.descend(&coaction).ok_or_else(|| {
        Error::Incompatible("lifted coaction is not well defined on C ⊗_H V".into())
    })?;
    let module = YdModule::new(datum, xd, space.module.action.clone(), coaction)?;
    Ok(Lift {
        module,
        space,
        coalgebra: t,
    })
}

/// For `D = H`: the isomorphism `C ⊗_H H ⊗_H C̄ -> K`, `x ⊗ h ⊗ y ↦ (x ◁ h) ∨ y`,
/// and the lifted module transported to a classical YD module over `K`.
pub fn lift_to_classical(
    cert: &GaloisCoobjectCert,
    lift: &Lift,
) -> Result<(Matrix, YdModule, Report), Error> {
    let c = &cert.c;
    let f = c.coalgebra.field();
    let (kd, hd, n) = dims_of(c);
    let t = &lift.coalgebra;
    let nu = Wiring::identity(f, &[n, hd, n])
        .apply(0, 2, &c.right, &[n])
        .apply(0, 2, &cert.vee, &[kd])
        .finish();
    let nu = t
        .descend(&nu)
        .ok_or_else(|| Error::Incompatible("(x ◁ h) ∨ y is not balanced".into()))?;
    let tc = &lift.module.datum.c;
    let k = c.k.clone();
    let mut r = Report::new();
    let td = t.dim();
    r.check_true(
        "T ≅ K",
        "x ⊗ h ⊗ y ↦ (x ◁ h) ∨ y is bijective",
        nu.is_invertible(),
        None,
    );
    r.check_maps(
        "T ≅ K comultiplicative",
        "ν(t)₁ ⊗ ν(t)₂ = ν(t₁) ⊗ ν(t₂)",
        &k.comult().mul(&nu),
        &nu.kron(&nu).mul(&tc.coalgebra.comult),
        &[td],
    );
    r.check_maps(
        "T ≅ K counital",
        "ε(ν(t)) = ε(t)",
        &k.counit().mul(&nu),
        &tc.coalgebra.counit,
        &[td],
    );
    r.check_maps(
        "T ≅ K left linear",
        "ν(k ▷ t) = kν(t)",
        &nu.mul(&tc.left),
        &k.mult().mul(&Matrix::identity(f, kd).kron(&nu)),
        &[kd, td],
    );
    r.check_maps(
        "T ≅ K right linear",
        "ν(t ◀ k) = ν(t)k",
        &nu.mul(&tc.right),
        &k.mult().mul(&nu.kron(&Matrix::identity(f, kd))),
        &[td, kd],
    );
    let m = &lift.module;
    let datum = Arc::new(YdDatum::regular(k));
    let coaction = Matrix::identity(f, m.dim()).kron(&nu).mul(&m.coaction);
    let classical = YdModule::new(datum, m.dim(), m.action.clone(), coaction)?;
    Ok((nu, classical, r))
}

/// For `C = H` regular: checks that the lift of `V` is isomorphic to `V`
/// via `H ⊗_H V ≅ V` and `H ⊗_H D ⊗_H H̄ ≅ D`, `x ⊗ d ⊗ y ↦ x ▷ d ◁ S(y)`.
pub fn check_identity_lift(
    cert: &GaloisCoobjectCert,
    d: &BimoduleCoalgebra,
    v: &YdModule,
    lift: &Lift,
) -> Report {
    let c = &cert.c;
    let f = c.coalgebra.field();
    let (_, hd, n) = dims_of(c);
    let dd = d.dim();
    let mut r = Report::new();
    let regular = BimoduleCoalgebra::regular(c.h.clone());
    if *c != regular || c.h != c.k {
        r.check_true("C is H regular", "C = H", false, None);
        return r;
    }
    let s = c.h.s().expect("Hopf");
    let Some(fx) = regular_balanced_iso(&c.h, &v.module()) else {
        r.check_true("H ⊗_H V ≅ V", "h ⊗ v ↦ h·v", false, None);
        return r;
    };
    let g = Wiring::identity(f, &[n, dd, n])
        .apply(2, 1, s, &[hd])
        .apply(1, 2, &d.right, &[dd])
        .apply(0, 2, &d.left, &[dd])
        .finish();
    let Some(g) = lift.coalgebra.descend(&g) else {
        r.check_true(
            "H ⊗_H D ⊗_H H̄ ≅ D",
            "x ⊗ d ⊗ y ↦ x ▷ d ◁ S(y)",
            false,
            Some("not balanced".into()),
        );
        return r;
    };
    let m = &lift.module;
    let (xd, td) = (m.dim(), lift.coalgebra.dim());
    r.check_true("H ⊗_H V ≅ V", "h ⊗ v ↦ h·v", fx.is_invertible(), None);
    r.check_true(
        "H ⊗_H D ⊗_H H̄ ≅ D",
        "x ⊗ d ⊗ y ↦ x ▷ d ◁ S(y)",
        g.is_invertible(),
        None,
    );
    r.check_maps(
        "identity lift: coalgebra",
        "g(t)₁ ⊗ g(t)₂ = g(t₁) ⊗ g(t₂)",
        &d.coalgebra.comult.mul(&g),
        &g.kron(&g).mul(&m.datum.c.coalgebra.comult),
        &[td],
    );
    r.check_maps(
        "identity lift: counit",
        "ε(g(t)) = ε(t)",
        &d.coalgebra.counit.mul(&g),
        &m.datum.c.coalgebra.counit,
        &[td],
    );
    r.check_maps(
        "identity lift: left action",
        "g(h ▷ t) = h ▷ g(t)",
        &g.mul(&m.datum.c.left),
        &d.left.mul(&Matrix::identity(f, hd).kron(&g)),
        &[hd, td],
    );
    r.check_maps(
        "identity lift: right action",
        "g(t ◀ h) = g(t) ◁ h",
        &g.mul(&m.datum.c.right),
        &d.right.mul(&g.kron(&Matrix::identity(f, hd))),
        &[td, hd],
    );
    r.check_maps(
        "identity lift: action",
        "f(h·x) = h·f(x)",
        &fx.mul(&m.action),
        &v.action.mul(&Matrix::identity(f, hd).kron(&fx)),
        &[hd, xd],
    );
    r.check_maps(
        "identity lift: coaction",
        "(f ⊗ g)ρ(x) = ρ(f(x))",
        &fx.kron(&g).mul(&m.coaction),
        &v.coaction.mul(&fx),
        &[xd],
    );
    r
}

/// The braiding `V ⊗ M -> M ⊗ (C ⊗_H V)` and its inverse
/// `m ⊗ [c ⊗ v] ↦ (m₁ ∧ c) ▷ v ⊗ m₀`.
#[derive(Clone, Debug)]
pub struct GaloisBraiding {
    pub forward: Matrix,
    pub inverse: Matrix,
    pub report: Report,
}

pub fn galois_braiding(
    cert: &GaloisCoobjectCert,
    m: &YdModule,
    v: &YdModule,
) -> Result<GaloisBraiding, Error> {
    let c = &cert.c;
    if m.datum.c != *c {
        return Err(Error::Incompatible(
            "the certificate is for a different co-object".into(),
        ));
    }
    let f = c.coalgebra.field();
    let (_, hd, n) = dims_of(c);
    let (dm, dv) = (m.dim(), v.dim());
    let b = braid_map(m, &v.module())?;
    let x = &b.target.quotient;
    let xd = x.dim();
    let inv_amb = Wiring::identity(f, &[dm, n, dv])
        .apply(0, 1, &m.coaction, &[dm, n])
        .apply(1, 2, &cert.wedge, &[hd])
        .apply(1, 2, &v.action, &[dv])
        .permute(&[1, 0])
        .finish();
    let inverse = x
        .descend_factor(&inv_amb, &[dm, n * dv], 1)
        .ok_or_else(|| Error::Incompatible("the inverse braiding is not balanced".into()))?;
    let mut r = Report::new();
    r.check_maps(
        "β̄ ∘ β = id",
        "β̄(β(v ⊗ m)) = v ⊗ m",
        &inverse.mul(&b.map),
        &Matrix::identity(f, dv * dm),
        &[dv, dm],
    );
    r.check_maps(
        "β ∘ β̄ = id",
        "β(β̄(m ⊗ x)) = m ⊗ x",
        &b.map.mul(&inverse),
        &Matrix::identity(f, dm * xd),
        &[dm, xd],
    );

    let d = &v.datum.c;
    let lift = lift_yd(cert, d, v)?;
    let dom = tensor_yd(v, m)?;
    let cod = tensor_yd(m, &lift.module)?;
    let target = &dom.composed.balanced;
    let q_cod = &cod.composed.balanced;
    let dd = d.dim();
    let j_amb = Wiring::from_map(
        &lift.coalgebra.section().kron(&Matrix::identity(f, n)),
        &[n, dd, n, n],
    )
    .apply(2, 2, &cert.wedge, &[hd])
    .apply(1, 2, &d.right, &[dd])
    .apply(0, 2, target.projection(), &[target.dim()])
    .finish();
    let Some(j) = q_cod.descend(&j_amb) else {
        r.check_true(
            "(C ⊗_H D ⊗_H C̄) ⊗_K C ≅ C ⊗_H D",
            "c ⊗ d ⊗ c̄ ⊗ c' ↦ c ⊗ d ◁ (c̄ ∧ c')",
            false,
            Some("not balanced".into()),
        );
        return Ok(GaloisBraiding {
            forward: b.map,
            inverse,
            report: r,
        });
    };
    r.check_true(
        "(C ⊗_H D ⊗_H C̄) ⊗_K C ≅ C ⊗_H D",
        "c ⊗ d ⊗ c̄ ⊗ c' ↦ c ⊗ d ◁ (c̄ ∧ c')",
        j.is_invertible(),
        None,
    );
    let lhs = b
        .map
        .kron(&Matrix::identity(f, target.dim()))
        .mul(&dom.module.coaction);
    let rhs = Matrix::identity(f, dm * xd)
        .kron(&j)
        .mul(&cod.module.coaction)
        .mul(&b.map);
    r.check_maps(
        "braiding is C ⊗_H D-colinear",
        "β(x)₀ ⊗ J(β(x)₁) = β(x₀) ⊗ x₁",
        &lhs,
        &rhs,
        &[dv, dm],
    );
    Ok(GaloisBraiding {
        forward: b.map,
        inverse,
        report: r,
    })
}
