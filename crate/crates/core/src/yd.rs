//! Generalized Yetter-Drinfeld modules over a datum `(H, K, A, C)`.
//!
//! `A` is an (H, K)-bicomodule algebra and `C` a (K, H)-bimodule coalgebra.
//! A YD module is a left `A`-module and right `C`-comodule `M` with
//! `(a₀·m)₀ ⊗ (a₀·m)₁ ◁ a₋₁ = a₀·m₀ ⊗ a₁ ▷ m₁`.

use std::sync::Arc;

use crate::hopf::Bialgebra;
use crate::linalg::{Matrix, Quotient, Subspace, Wiring};
use crate::rep::{
    balanced_tensor, cotensor, induced_module, opmonoidal_psi, opmonoidal_psi0, BicomoduleAlgebra,
    BimoduleCoalgebra, InducedModule, LeftModule, RightComodule, RightModule,
};
use crate::report::Report;
use crate::Error;

pub const YD_ANCHOR: &str = "(a₀·m)₀ ⊗ (a₀·m)₁ ◁ a₋₁ = a₀·m₀ ⊗ a₁ ▷ m₁";
pub const YD_INVERSE_ANCHOR: &str = "(a·m)₀ ⊗ (a·m)₁ = a₀·m₀ ⊗ a₁ ▷ m₁ ◁ S⁻¹(a₋₁)";

#[derive(Clone, Debug, PartialEq)]
pub struct YdDatum {
    pub a: BicomoduleAlgebra,
    pub c: BimoduleCoalgebra,
}

impl YdDatum {
    pub fn new(a: BicomoduleAlgebra, c: BimoduleCoalgebra) -> Result<Self, Error> {
        if a.h != c.h {
            return Err(Error::Incompatible(
                "A coacts on the left by a different bialgebra than acts on C from the right"
                    .into(),
            ));
        }
        if a.k != c.k {
            return Err(Error::Incompatible(
                "A coacts on the right by a different bialgebra than acts on C from the left"
                    .into(),
            ));
        }
        Ok(YdDatum { a, c })
    }

    /// `(H, H, H, H)` with all structure maps regular.
    pub fn regular(h: Arc<Bialgebra>) -> Self {
        YdDatum {
            a: BicomoduleAlgebra::regular(h.clone()),
            c: BimoduleCoalgebra::regular(h),
        }
    }

    pub fn h(&self) -> &Arc<Bialgebra> {
        &self.a.h
    }

    pub fn k(&self) -> &Arc<Bialgebra> {
        &self.a.k
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new();
        r.merge_prefixed("A", self.a.check());
        r.merge_prefixed("C", self.c.check());
        r
    }
}

/// `action` is `dim M x (dim A * dim M)`, `coaction` is `(dim M * dim C) x dim M`.
#[derive(Clone, Debug, PartialEq)]
pub struct YdModule {
    pub datum: Arc<YdDatum>,
    pub action: Matrix,
    pub coaction: Matrix,
}

impl YdModule {
    pub fn new(
        datum: Arc<YdDatum>,
        dim: usize,
        action: Matrix,
        coaction: Matrix,
    ) -> Result<Self, Error> {
        let (a, c) = (datum.a.dim(), datum.c.dim());
        if action.shape() != (dim, a * dim) {
            return Err(Error::DimensionMismatch(format!(
                "action must be {dim}x{}",
                a * dim
            )));
        }
        if coaction.shape() != (dim * c, dim) {
            return Err(Error::DimensionMismatch(format!(
                "coaction must be {}x{dim}",
                dim * c
            )));
        }
        Ok(YdModule {
            datum,
            action,
            coaction,
        })
    }

    pub fn dim(&self) -> usize {
        self.action.rows()
    }

    pub fn module(&self) -> LeftModule {
        LeftModule {
            action: self.action.clone(),
        }
    }

    pub fn comodule(&self) -> RightComodule {
        RightComodule {
            coaction: self.coaction.clone(),
        }
    }

    fn dims(&self) -> (usize, usize, usize, usize, usize) {
        let d = &self.datum;
        (d.h().dim(), d.k().dim(), d.a.dim(), d.c.dim(), self.dim())
    }

    /// The left side of the compatibility condition, `A ⊗ M -> M ⊗ C`.
    fn compat_lhs(&self) -> Matrix {
        let (h, _, a, c, m) = self.dims();
        let f = self.action.field();
        Wiring::identity(f, &[a, m])
            .apply(0, 1, &self.datum.a.left, &[h, a])
            .apply(1, 2, &self.action, &[m])
            .apply(1, 1, &self.coaction, &[m, c])
            .permute(&[1, 2, 0])
            .apply(1, 2, &self.datum.c.right, &[c])
            .finish()
    }

    fn compat_rhs(&self) -> Matrix {
        let (_, k, a, c, m) = self.dims();
        let f = self.action.field();
        Wiring::identity(f, &[a, m])
            .apply(0, 1, &self.datum.a.right, &[a, k])
            .apply(2, 1, &self.coaction, &[m, c])
            .permute(&[0, 2, 1, 3])
            .apply(0, 2, &self.action, &[m])
            .apply(1, 2, &self.datum.c.left, &[c])
            .finish()
    }

    /// The compatibility condition in its defining form.
    pub fn check_compatibility(&self) -> Report {
        let (_, _, a, _, m) = self.dims();
        let mut r = Report::new();
        r.check_maps(
            "YD compatibility",
            YD_ANCHOR,
            &self.compat_lhs(),
            &self.compat_rhs(),
            &[a, m],
        );
        r
    }

    /// The equivalent form using `S⁻¹` of `H`; `None` when `S` is not invertible.
    pub fn check_compatibility_inverse_form(&self) -> Option<Report> {
        let (h, k, a, c, m) = self.dims();
        let s_inv = self.datum.h().s_inv()?;
        let f = self.action.field();
        let lhs = self.coaction.mul(&self.action);
        let rhs = Wiring::identity(f, &[a, m])
            .apply(0, 1, &self.datum.a.left, &[h, a])
            .apply(1, 1, &self.datum.a.right, &[a, k])
            .apply(3, 1, &self.coaction, &[m, c])
            .permute(&[1, 3, 2, 4, 0])
            .apply(0, 2, &self.action, &[m])
            .apply(1, 2, &self.datum.c.left, &[c])
            .apply(2, 1, s_inv, &[h])
            .apply(1, 2, &self.datum.c.right, &[c])
            .finish();
        let mut r = Report::new();
        r.check_maps(
            "YD compatibility (S⁻¹ form)",
            YD_INVERSE_ANCHOR,
            &lhs,
            &rhs,
            &[a, m],
        );
        Some(r)
    }

    /// Module, comodule and compatibility axioms.
    pub fn check(&self) -> Report {
        let mut r = Report::new();
        r.merge(self.module().check(&self.datum.a.algebra));
        r.merge(self.comodule().check(&self.datum.c.coalgebra));
        r.merge(self.check_compatibility());
        r
    }
}

pub fn check_yd_module(m: &YdModule) -> Report {
    m.check()
}

/// Moves a map whose factor `at` lies in `sub`'s ambient space into
/// subspace coordinates, failing if some value leaves the subspace.
fn restrict_factor(sub: &Subspace, map: Matrix, dims: &[usize], at: usize) -> Option<Matrix> {
    let mut out_dims = dims.to_vec();
    out_dims[at] = sub.dim();
    let coords = Wiring::from_map(&map, dims)
        .apply(at, 1, sub.coordinates(), &[sub.dim()])
        .finish();
    let back = Wiring::from_map(&coords, &out_dims)
        .apply(at, 1, sub.inclusion(), &[dims[at]])
        .finish();
    (back == map).then_some(coords)
}

/// The datum `(H, L, A □_K B, D ⊗_K C)` carrying `M ⊗ N`, with the
/// embeddings needed to compute in the ambient spaces.
#[derive(Clone, Debug)]
pub struct ComposedDatum {
    pub datum: Arc<YdDatum>,
    pub cotensor: Subspace,
    pub balanced: Quotient,
    pub first: Arc<YdDatum>,
    pub second: Arc<YdDatum>,
}

/// Composes `(H, K, A, C)` with `(K, L, B, D)`.
pub fn compose_data(first: &Arc<YdDatum>, second: &Arc<YdDatum>) -> Result<ComposedDatum, Error> {
    if first.k() != second.h() {
        return Err(Error::Incompatible(
            "the middle bialgebras of the two data differ".into(),
        ));
    }
    let a = &first.a;
    let b = &second.a;
    let c = &first.c;
    let d = &second.c;
    let f = a.algebra.field();
    let (da, db, dc, dd) = (a.dim(), b.dim(), c.dim(), d.dim());
    let (hd, ld) = (first.h().dim(), second.k().dim());
    let bad =
        |what: &str| Error::Incompatible(format!("{what} does not restrict to the composite"));

    let sub = cotensor(&a.right_comodule(), &b.left_comodule());
    let s = sub.dim();
    let incl = sub.inclusion();
    let mult_amb =
        crate::hopf::tensor_mult(&a.algebra.mult, &b.algebra.mult, da, db).mul(&incl.kron(incl));
    let mult =
        restrict_factor(&sub, mult_amb, &[da * db], 0).ok_or_else(|| bad("multiplication"))?;
    let unit = restrict_factor(&sub, a.algebra.unit.kron(&b.algebra.unit), &[da * db], 0)
        .ok_or_else(|| bad("unit"))?;
    let left_amb = a.left.kron(&Matrix::identity(f, db)).mul(incl);
    let left =
        restrict_factor(&sub, left_amb, &[hd, da * db], 1).ok_or_else(|| bad("left coaction"))?;
    let right_amb = Matrix::identity(f, da).kron(&b.right).mul(incl);
    let right =
        restrict_factor(&sub, right_amb, &[da * db, ld], 0).ok_or_else(|| bad("right coaction"))?;
    let algebra = crate::hopf::Algebra::new(mult, unit)?;
    let new_a =
        BicomoduleAlgebra::new(first.h().clone(), second.k().clone(), algebra, left, right)?;
    debug_assert_eq!(new_a.dim(), s);

    let quo = balanced_tensor(&d.right_module(), &c.left_module());
    let q = quo.dim();
    let pi = quo.projection();
    let comult_amb = Wiring::identity(f, &[dd, dc])
        .apply(0, 1, &d.coalgebra.comult, &[dd, dd])
        .apply(2, 1, &c.coalgebra.comult, &[dc, dc])
        .permute(&[0, 2, 1, 3])
        .apply(0, 2, pi, &[q])
        .apply(1, 2, pi, &[q])
        .finish();
    let comult = quo
        .descend(&comult_amb)
        .ok_or_else(|| bad("comultiplication"))?;
    let counit = quo
        .descend(&d.coalgebra.counit.kron(&c.coalgebra.counit))
        .ok_or_else(|| bad("counit"))?;
    let left_amb = Wiring::identity(f, &[ld, dd, dc])
        .apply(0, 2, &d.left, &[dd])
        .apply(0, 2, pi, &[q])
        .finish();
    let cleft = quo
        .descend_factor(&left_amb, &[ld, dd * dc], 1)
        .ok_or_else(|| bad("left action"))?;
    let right_amb = Wiring::identity(f, &[dd, dc, hd])
        .apply(1, 2, &c.right, &[dc])
        .apply(0, 2, pi, &[q])
        .finish();
    let cright = quo
        .descend_factor(&right_amb, &[dd * dc, hd], 0)
        .ok_or_else(|| bad("right action"))?;
    let coalgebra = crate::hopf::Coalgebra::new(comult, counit)?;
    let new_c = BimoduleCoalgebra::new(
        second.k().clone(),
        first.h().clone(),
        coalgebra,
        cleft,
        cright,
    )?;

    let datum = Arc::new(YdDatum::new(new_a, new_c)?);
    Ok(ComposedDatum {
        datum,
        cotensor: sub,
        balanced: quo,
        first: first.clone(),
        second: second.clone(),
    })
}

/// `M ⊗ N` for `M` over `(H, K, A, C)` and `N` over `(K, L, B, D)`:
/// `(a ⊗ b)·(m ⊗ n) = a·m ⊗ b·n` and `m ⊗ n ↦ m₀ ⊗ n₀ ⊗ [n₁ ⊗ m₁]`.
#[derive(Clone, Debug)]
pub struct YdTensor {
    pub module: YdModule,
    pub composed: ComposedDatum,
}

pub fn tensor_yd(m: &YdModule, n: &YdModule) -> Result<YdTensor, Error> {
    let composed = compose_data(&m.datum, &n.datum)?;
    tensor_over(&composed, m, n)
}

/// Like [`tensor_yd`] but reusing an existing composite datum.
pub fn tensor_over(
    composed: &ComposedDatum,
    m: &YdModule,
    n: &YdModule,
) -> Result<YdTensor, Error> {
    if m.datum != composed.first || n.datum != composed.second {
        return Err(Error::Incompatible(
            "modules do not live over the composed data".into(),
        ));
    }
    let f = m.action.field();
    let (da, db) = (m.datum.a.dim(), n.datum.a.dim());
    let (dc, dd) = (m.datum.c.dim(), n.datum.c.dim());
    let (dm, dn) = (m.dim(), n.dim());
    let s = composed.cotensor.dim();
    let q = composed.balanced.dim();
    let action = Wiring::identity(f, &[s, dm, dn])
        .apply(0, 1, composed.cotensor.inclusion(), &[da, db])
        .permute(&[0, 2, 1, 3])
        .apply(0, 2, &m.action, &[dm])
        .apply(1, 2, &n.action, &[dn])
        .finish();
    let coaction = Wiring::identity(f, &[dm, dn])
        .apply(0, 1, &m.coaction, &[dm, dc])
        .apply(2, 1, &n.coaction, &[dn, dd])
        .permute(&[0, 2, 3, 1])
        .apply(2, 2, composed.balanced.projection(), &[q])
        .finish();
    let module = YdModule::new(composed.datum.clone(), dm * dn, action, coaction)?;
    Ok(YdTensor {
        module,
        composed: composed.clone(),
    })
}

/// The braiding `β_{V,M}: V ⊗ M -> M ⊗ (C ⊗_H V)`, `v ⊗ m ↦ m₀ ⊗ [m₁ ⊗ v]`.
#[derive(Clone, Debug)]
pub struct BraidMap {
    pub target: InducedModule,
    pub map: Matrix,
}

pub fn braid_map(m: &YdModule, v: &LeftModule) -> Result<BraidMap, Error> {
    let c = &m.datum.c;
    let target = induced_module(c, v)?;
    let (dm, dc, dv) = (m.dim(), c.dim(), v.dim());
    let map = Wiring::identity(m.action.field(), &[dv, dm])
        .apply(1, 1, &m.coaction, &[dm, dc])
        .permute(&[1, 2, 0])
        .apply(1, 2, target.quotient.projection(), &[target.quotient.dim()])
        .finish();
    Ok(BraidMap { target, map })
}

/// `A`-linearity of `β_{V,M}` for the actions
/// `a·(v ⊗ m) = a₋₁·v ⊗ a₀·m` and `a·(m ⊗ x) = a₀·m ⊗ a₁ ▷ x`.
pub fn check_braid_linearity(m: &YdModule, v: &LeftModule, braid: &BraidMap) -> Report {
    let d = &m.datum;
    let f = m.action.field();
    let (hd, da, dm, dv) = (d.h().dim(), d.a.dim(), m.dim(), v.dim());
    let q = braid.target.quotient.dim();
    let dom_action = Wiring::identity(f, &[da, dv, dm])
        .apply(0, 1, &d.a.left, &[hd, da])
        .permute(&[0, 2, 1, 3])
        .apply(0, 2, &v.action, &[dv])
        .apply(1, 2, &m.action, &[dm])
        .finish();
    let cod_action = codomain_action(m, &braid.target.module.action, q);
    let lhs = braid.map.mul(&dom_action);
    let rhs = cod_action.mul(&Matrix::identity(f, da).kron(&braid.map));
    let mut r = Report::new();
    r.check_maps(
        "braiding is A-linear",
        "β(a₋₁·v ⊗ a₀·m) = a₀·β(v ⊗ m)₁ ⊗ a₁ ▷ β(v ⊗ m)₂",
        &lhs,
        &rhs,
        &[da, dv, dm],
    );
    r
}

/// `a·(m ⊗ x) = a₀·m ⊗ a₁ ▷ x` on `M ⊗ X` for a left K-module `X`.
fn codomain_action(m: &YdModule, x_action: &Matrix, dx: usize) -> Matrix {
    let d = &m.datum;
    let (kd, da, dm) = (d.k().dim(), d.a.dim(), m.dim());
    Wiring::identity(m.action.field(), &[da, dm, dx])
        .apply(0, 1, &d.a.right, &[da, kd])
        .permute(&[0, 2, 1, 3])
        .apply(0, 2, &m.action, &[dm])
        .apply(1, 2, x_action, &[dx])
        .finish()
}

/// Both braiding coherence identities:
/// `(id ⊗ ψ)β_{U⊗V,M} = (β_{U,M} ⊗ id)(id ⊗ β_{V,M})` and the composite
/// `β_{V,M⊗N} = (id ⊗ β_{C⊗_H V,N})(β_{V,M} ⊗ id)`, the latter compared
/// inside `D ⊗_K C ⊗_H V`. Also checks the unit law through `ψ₀`.
pub fn check_braid_coherence(
    m: &YdModule,
    n: &YdModule,
    u: &LeftModule,
    v: &LeftModule,
) -> Result<Report, Error> {
    let mut r = Report::new();
    let h = m.datum.h().clone();
    let f = m.action.field();
    let dm = m.dim();
    let (du, dv) = (u.dim(), v.dim());

    let uv = u.tensor(v, &h);
    let b_uv = braid_map(m, &uv)?;
    let b_u = braid_map(m, u)?;
    let b_v = braid_map(m, v)?;
    let (qu, qv) = (b_u.target.quotient.dim(), b_v.target.quotient.dim());
    let psi = opmonoidal_psi(
        &m.datum.c,
        &b_uv.target.quotient,
        &b_u.target.quotient,
        &b_v.target.quotient,
        du,
        dv,
    )?;
    let lhs = Matrix::identity(f, dm).kron(&psi).mul(&b_uv.map);
    let rhs = Wiring::identity(f, &[du, dv, dm])
        .apply(1, 2, &b_v.map, &[dm, qv])
        .apply(0, 2, &b_u.map, &[dm, qu])
        .finish();
    r.check_maps(
        "braiding coherence with ψ",
        "m₀ ⊗ [m₁ ⊗ u] ⊗ [m₂ ⊗ v] = (id ⊗ ψ)(m₀ ⊗ [m₁ ⊗ u ⊗ v])",
        &lhs,
        &rhs,
        &[du, dv, dm],
    );

    let triv = LeftModule::trivial(&h);
    let b_k = braid_map(m, &triv)?;
    let psi0 = opmonoidal_psi0(&m.datum.c, &b_k.target.quotient)?;
    let lhs = Matrix::identity(f, dm).kron(&psi0).mul(&b_k.map);
    r.check_maps(
        "braiding unit law",
        "m₀ ε(m₁) = m",
        &lhs,
        &Matrix::identity(f, dm),
        &[1, dm],
    );

    r.merge(check_composite_coherence(m, n, v)?);
    Ok(r)
}

fn check_composite_coherence(m: &YdModule, n: &YdModule, v: &LeftModule) -> Result<Report, Error> {
    let f = m.action.field();
    let mn = tensor_yd(m, n)?;
    let c = &m.datum.c;
    let d = &n.datum.c;
    let (dc, dd, dv, dm, dn) = (c.dim(), d.dim(), v.dim(), m.dim(), n.dim());
    let (kd, hd) = (c.k.dim(), c.h.dim());

    let total_k = Wiring::identity(f, &[dd, kd, dc, dv])
        .apply(0, 2, &d.right, &[dd])
        .finish()
        .sub(
            &Wiring::identity(f, &[dd, kd, dc, dv])
                .apply(1, 2, &c.left, &[dc])
                .finish(),
        );
    let total_h = Wiring::identity(f, &[dd, dc, hd, dv])
        .apply(1, 2, &c.right, &[dc])
        .finish()
        .sub(
            &Wiring::identity(f, &[dd, dc, hd, dv])
                .apply(2, 2, &v.action, &[dv])
                .finish(),
        );
    let total = Quotient::new(&total_k.hstack(&total_h));
    let t = total.dim();

    let b1 = braid_map(&mn.module, v)?;
    let q1 = &b1.target.quotient;
    let dq = mn.composed.balanced.dim();
    let phi1 = Wiring::from_map(q1.section(), &[dq, dv])
        .apply(0, 1, mn.composed.balanced.section(), &[dd, dc])
        .apply(0, 3, total.projection(), &[t])
        .finish();

    let b_v = braid_map(m, v)?;
    let qv = &b_v.target;
    let b2 = braid_map(n, &qv.module)?;
    let q2 = &b2.target.quotient;
    let phi2 = Wiring::from_map(q2.section(), &[dd, qv.quotient.dim()])
        .apply(1, 1, qv.quotient.section(), &[dc, dv])
        .apply(0, 3, total.projection(), &[t])
        .finish();

    let mut r = Report::new();
    let isos = phi1.is_invertible() && phi2.is_invertible();
    r.check_true(
        "composite coherence identifications",
        "(D ⊗_K C) ⊗_H V ≅ D ⊗_K C ⊗_H V ≅ D ⊗_K (C ⊗_H V)",
        isos,
        (!isos)
            .then(|| "canonical maps into the total balanced tensor are not isomorphisms".into()),
    );
    if !isos {
        return Ok(r);
    }
    let lhs = Matrix::identity(f, dm * dn).kron(&phi1).mul(&b1.map);
    let rhs = Wiring::identity(f, &[dv, dm, dn])
        .apply(0, 2, &b_v.map, &[dm, qv.quotient.dim()])
        .apply(1, 2, &b2.map, &[dn, q2.dim()])
        .apply(2, 1, &phi2, &[t])
        .finish();
    r.check_maps(
        "braiding coherence with composition",
        "(m ⊗ n)₀ ⊗ [(m ⊗ n)₁ ⊗ v] = m₀ ⊗ n₀ ⊗ [n₁ ⊗ m₁ ⊗ v]",
        &lhs,
        &rhs,
        &[dv, dm, dn],
    );
    Ok(r)
}

/// A half-braiding on a left `A`-module `M`, recorded by its component on
/// the regular module: `β_H: H ⊗ M -> M ⊗ C`, using `C ⊗_H H ≅ C`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfBraid {
    pub datum: Arc<YdDatum>,
    pub action: Matrix,
    pub component: Matrix,
}

/// Recovers the coaction `m ↦ β_H(1 ⊗ m)` after checking that the
/// component is natural, coassociative, counital and `A`-linear.
pub fn halfbraid_to_coaction(hb: &HalfBraid) -> Result<YdModule, Error> {
    let (r, m) = check_half_braid(hb)?;
    if !r.is_ok() {
        return Err(Error::verification("half-braiding", r));
    }
    Ok(m)
}

/// The half-braid axioms on the regular component, with the candidate
/// module `m ↦ β_H(1 ⊗ m)` whether or not they hold.
pub fn check_half_braid(hb: &HalfBraid) -> Result<(Report, YdModule), Error> {
    let d = &hb.datum;
    let f = hb.action.field();
    let (hd, da, dc) = (d.h().dim(), d.a.dim(), d.c.dim());
    let dm = hb.action.rows();
    if hb.component.shape() != (dm * dc, hd * dm) {
        return Err(Error::DimensionMismatch(format!(
            "half-braid component must be {}x{}",
            dm * dc,
            hd * dm
        )));
    }
    let beta = &hb.component;
    let rho = beta.mul(&d.h().unit().kron(&Matrix::identity(f, dm)));
    let mut r = Report::new();

    let natural = Wiring::identity(f, &[hd, dm])
        .permute(&[1, 0])
        .apply(0, 1, &rho, &[dm, dc])
        .apply(1, 2, &d.c.right, &[dc])
        .finish();
    r.check_maps(
        "half-braid naturality",
        "β_H(h ⊗ m) = β_H(1 ⊗ m) ◁ h",
        beta,
        &natural,
        &[hd, dm],
    );

    let lhs = Matrix::identity(f, dm)
        .kron(&d.c.coalgebra.comult)
        .mul(beta);
    let rhs = Wiring::identity(f, &[hd, dm])
        .apply(0, 1, d.h().comult(), &[hd, hd])
        .apply(1, 2, beta, &[dm, dc])
        .apply(0, 2, beta, &[dm, dc])
        .finish();
    r.check_maps(
        "half-braid coherence on H ⊗ H",
        "(id ⊗ Δ)β_H(h ⊗ m) = (β_H ⊗ id)(h₁ ⊗ β_H(h₂ ⊗ m))",
        &lhs,
        &rhs,
        &[hd, dm],
    );
    let counit = Matrix::identity(f, dm)
        .kron(&d.c.coalgebra.counit)
        .mul(&rho);
    r.check_maps(
        "half-braid unit",
        "(id ⊗ ε)β_H(1 ⊗ m) = m",
        &counit,
        &Matrix::identity(f, dm),
        &[dm],
    );

    let dom_action = Wiring::identity(f, &[da, hd, dm])
        .apply(0, 1, &d.a.left, &[hd, da])
        .permute(&[0, 2, 1, 3])
        .apply(0, 2, d.h().mult(), &[hd])
        .apply(1, 2, &hb.action, &[dm])
        .finish();
    let lhs = beta.mul(&dom_action);
    let m_stub = YdModule {
        datum: d.clone(),
        action: hb.action.clone(),
        coaction: rho.clone(),
    };
    let rhs = codomain_action(&m_stub, &d.c.left, dc).mul(&Matrix::identity(f, da).kron(beta));
    r.check_maps(
        "half-braid A-linearity",
        "β_H(a₋₁h ⊗ a₀·m) = a₀·β_H(h ⊗ m)₁ ⊗ a₁ ▷ β_H(h ⊗ m)₂",
        &lhs,
        &rhs,
        &[da, hd, dm],
    );

    r.merge(
        LeftModule {
            action: hb.action.clone(),
        }
        .check(&d.a.algebra),
    );
    Ok((r, m_stub))
}

/// The half-braiding `β_H(h ⊗ m) = m₀ ⊗ m₁ ◁ h` of a YD module.
pub fn coaction_to_halfbraid(m: &YdModule) -> Result<HalfBraid, Error> {
    let d = &m.datum;
    let reg = LeftModule::regular(&d.h().algebra);
    let b = braid_map(m, &reg)?;
    let iso = b
        .target
        .quotient
        .descend(&d.c.right)
        .ok_or_else(|| Error::Incompatible("C ⊗_H H -> C does not descend".into()))?;
    if !iso.is_invertible() {
        return Err(Error::Incompatible(
            "C ⊗_H H -> C is not an isomorphism".into(),
        ));
    }
    let f = m.action.field();
    let component = Matrix::identity(f, m.dim()).kron(&iso).mul(&b.map);
    Ok(HalfBraid {
        datum: d.clone(),
        action: m.action.clone(),
        component,
    })
}

/// The dual braiding `M ⊗ (V □_H A) -> V ⊗ M`, `m ⊗ v ⊗ a ↦ v ⊗ a·m`.
#[derive(Clone, Debug)]
pub struct DualBraid {
    pub cotensor: Subspace,
    /// Defined on `M ⊗ V ⊗ A`; restrict along the cotensor inclusion.
    pub ambient_map: Matrix,
}

pub fn dual_braid_map(m: &YdModule, v: &RightComodule) -> DualBraid {
    let d = &m.datum;
    let cot = cotensor(v, &d.a.left_comodule());
    let (dv, da, dm) = (v.dim(), d.a.dim(), m.dim());
    let ambient_map = Wiring::identity(m.action.field(), &[dm, dv, da])
        .permute(&[1, 2, 0])
        .apply(1, 2, &m.action, &[dm])
        .finish();
    DualBraid {
        cotensor: cot,
        ambient_map,
    }
}

/// C-colinearity of the dual braiding for the coactions
/// `m ⊗ v ⊗ a ↦ m₀ ⊗ v ⊗ a₀ ⊗ a₁ ▷ m₁` and `v ⊗ m ↦ v₀ ⊗ m₀ ⊗ m₁ ◁ v₁`.
pub fn check_dual_braid_colinearity(m: &YdModule, v: &RightComodule, db: &DualBraid) -> Report {
    let d = &m.datum;
    let f = m.action.field();
    let (hd, kd, da, dc, dm, dv) = (
        d.h().dim(),
        d.k().dim(),
        d.a.dim(),
        d.c.dim(),
        m.dim(),
        v.dim(),
    );
    let s = db.cotensor.dim();
    let dom = Wiring::identity(f, &[dm, s])
        .apply(1, 1, db.cotensor.inclusion(), &[dv, da])
        .apply(0, 1, &m.coaction, &[dm, dc])
        .apply(3, 1, &d.a.right, &[da, kd])
        .permute(&[0, 2, 3, 4, 1])
        .apply(3, 2, &d.c.left, &[dc])
        .apply(0, 3, &db.ambient_map, &[dv, dm])
        .finish();
    let mapped = Wiring::identity(f, &[dm, s])
        .apply(1, 1, db.cotensor.inclusion(), &[dv, da])
        .apply(0, 3, &db.ambient_map, &[dv, dm])
        .apply(0, 1, &v.coaction, &[dv, hd])
        .apply(2, 1, &m.coaction, &[dm, dc])
        .permute(&[0, 2, 3, 1])
        .apply(2, 2, &d.c.right, &[dc])
        .finish();
    let mut r = Report::new();
    r.check_maps(
        "dual braiding is C-colinear",
        "β(m ⊗ v ⊗ a)₀ ⊗ β(m ⊗ v ⊗ a)₁ = β(m₀ ⊗ v ⊗ a₀) ⊗ a₁ ▷ m₁",
        &dom,
        &mapped,
        &[dm, s],
    );
    r
}

/// `H ⊗_H V -> V`, `h ⊗ v ↦ h·v`, for a left `H`-module.
pub fn regular_balanced_iso(h: &Bialgebra, v: &LeftModule) -> Option<Matrix> {
    let q = balanced_tensor(&RightModule::regular(&h.algebra), v);
    q.descend(&v.action)
}
