//! Modules, comodules, bicomodule algebras, bimodule coalgebras and the
//! balanced tensor and cotensor products built from them.

use std::sync::Arc;

use crate::hopf::{tensor_mult, Algebra, Bialgebra, Coalgebra};
use crate::linalg::{Matrix, Quotient, Subspace, Wiring};
use crate::report::Report;
use crate::Error;

fn expect_shape(what: &str, m: &Matrix, rows: usize, cols: usize) -> Result<(), Error> {
    if m.shape() != (rows, cols) {
        return Err(Error::DimensionMismatch(format!(
            "{what} must be {rows}x{cols}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// `action` is `dim M x (dim A * dim M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    pub action: Matrix,
}

/// `action` is `dim M x (dim M * dim A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    pub action: Matrix,
}

/// `coaction` is `(dim C * dim M) x dim M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftComodule {
    pub coaction: Matrix,
}

/// `coaction` is `(dim M * dim C) x dim M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    pub coaction: Matrix,
}

impl LeftModule {
    pub fn new(algebra: &Algebra, dim: usize, action: Matrix) -> Result<Self, Error> {
        expect_shape("left action", &action, dim, algebra.dim() * dim)?;
        Ok(LeftModule { action })
    }

    pub fn dim(&self) -> usize {
        self.action.rows()
    }

    pub fn regular(algebra: &Algebra) -> Self {
        LeftModule {
            action: algebra.mult.clone(),
        }
    }

    /// The one-dimensional module `h·1 = ε(h)`.
    pub fn trivial(b: &Bialgebra) -> Self {
        LeftModule {
            action: b.counit().clone(),
        }
    }

    pub fn check(&self, algebra: &Algebra) -> Report {
        let (n, a) = (self.dim(), algebra.dim());
        let id = Matrix::identity(algebra.field(), n);
        let mut r = Report::new();
        let lhs = self.action.mul(&algebra.mult.kron(&id));
        let rhs = self
            .action
            .mul(&Matrix::identity(algebra.field(), a).kron(&self.action));
        r.check_maps(
            "action associativity",
            "(ab)·m = a·(b·m)",
            &lhs,
            &rhs,
            &[a, a, n],
        );
        r.check_maps(
            "action unit",
            "1·m = m",
            &self.action.mul(&algebra.unit.kron(&id)),
            &id,
            &[n],
        );
        r
    }

    /// The diagonal action `h·(u ⊗ v) = h₁·u ⊗ h₂·v`.
    pub fn tensor(&self, other: &LeftModule, b: &Bialgebra) -> LeftModule {
        let (h, u, v) = (b.dim(), self.dim(), other.dim());
        let action = Wiring::identity(b.field(), &[h, u, v])
            .apply(0, 1, b.comult(), &[h, h])
            .permute(&[0, 2, 1, 3])
            .apply(0, 2, &self.action, &[u])
            .apply(1, 2, &other.action, &[v])
            .finish();
        LeftModule { action }
    }

    /// Restriction along an algebra map `phi: B -> A`.
    pub fn pullback(&self, phi: &Matrix) -> LeftModule {
        let id = Matrix::identity(phi.field(), self.dim());
        LeftModule {
            action: self.action.mul(&phi.kron(&id)),
        }
    }
}

impl RightModule {
    pub fn new(algebra: &Algebra, dim: usize, action: Matrix) -> Result<Self, Error> {
        expect_shape("right action", &action, dim, dim * algebra.dim())?;
        Ok(RightModule { action })
    }

    pub fn dim(&self) -> usize {
        self.action.rows()
    }

    pub fn regular(algebra: &Algebra) -> Self {
        RightModule {
            action: algebra.mult.clone(),
        }
    }

    pub fn check(&self, algebra: &Algebra) -> Report {
        let (n, a) = (self.dim(), algebra.dim());
        let id = Matrix::identity(algebra.field(), n);
        let mut r = Report::new();
        let lhs = self
            .action
            .mul(&self.action.kron(&Matrix::identity(algebra.field(), a)));
        let rhs = self.action.mul(&id.kron(&algebra.mult));
        r.check_maps(
            "action associativity",
            "(m·a)·b = m·(ab)",
            &lhs,
            &rhs,
            &[n, a, a],
        );
        r.check_maps(
            "action unit",
            "m·1 = m",
            &self.action.mul(&id.kron(&algebra.unit)),
            &id,
            &[n],
        );
        r
    }
}

impl LeftComodule {
    pub fn new(coalgebra: &Coalgebra, dim: usize, coaction: Matrix) -> Result<Self, Error> {
        expect_shape("left coaction", &coaction, coalgebra.dim() * dim, dim)?;
        Ok(LeftComodule { coaction })
    }

    pub fn dim(&self) -> usize {
        self.coaction.cols()
    }

    pub fn check(&self, coalgebra: &Coalgebra) -> Report {
        let (n, c) = (self.dim(), coalgebra.dim());
        let f = coalgebra.field();
        let id = Matrix::identity(f, n);
        let mut r = Report::new();
        let lhs = coalgebra.comult.kron(&id).mul(&self.coaction);
        let rhs = Matrix::identity(f, c)
            .kron(&self.coaction)
            .mul(&self.coaction);
        r.check_maps(
            "coaction coassociativity",
            "m₋₁₁ ⊗ m₋₁₂ ⊗ m₀ = m₋₂ ⊗ m₋₁ ⊗ m₀",
            &lhs,
            &rhs,
            &[n],
        );
        r.check_maps(
            "coaction counit",
            "ε(m₋₁)m₀ = m",
            &coalgebra.counit.kron(&id).mul(&self.coaction),
            &id,
            &[n],
        );
        r
    }
}

impl RightComodule {
    pub fn new(coalgebra: &Coalgebra, dim: usize, coaction: Matrix) -> Result<Self, Error> {
        expect_shape("right coaction", &coaction, dim * coalgebra.dim(), dim)?;
        Ok(RightComodule { coaction })
    }

    pub fn dim(&self) -> usize {
        self.coaction.cols()
    }

    pub fn check(&self, coalgebra: &Coalgebra) -> Report {
        let (n, c) = (self.dim(), coalgebra.dim());
        let f = coalgebra.field();
        let id = Matrix::identity(f, n);
        let mut r = Report::new();
        let lhs = self
            .coaction
            .kron(&Matrix::identity(f, c))
            .mul(&self.coaction);
        let rhs = id.kron(&coalgebra.comult).mul(&self.coaction);
        r.check_maps(
            "coaction coassociativity",
            "m₀₀ ⊗ m₀₁ ⊗ m₁ = m₀ ⊗ m₁₁ ⊗ m₁₂",
            &lhs,
            &rhs,
            &[n],
        );
        r.check_maps(
            "coaction counit",
            "m₀ε(m₁) = m",
            &id.kron(&coalgebra.counit).mul(&self.coaction),
            &id,
            &[n],
        );
        r
    }
}

/// An (H, K)-bicomodule algebra: left H-coaction `a ↦ a₋₁ ⊗ a₀` and right
/// K-coaction `a ↦ a₀ ⊗ a₁`, both algebra maps.
#[derive(Clone, Debug, PartialEq)]
pub struct BicomoduleAlgebra {
    pub h: Arc<Bialgebra>,
    pub k: Arc<Bialgebra>,
    pub algebra: Algebra,
    pub left: Matrix,
    pub right: Matrix,
}

impl BicomoduleAlgebra {
    pub fn new(
        h: Arc<Bialgebra>,
        k: Arc<Bialgebra>,
        algebra: Algebra,
        left: Matrix,
        right: Matrix,
    ) -> Result<Self, Error> {
        let n = algebra.dim();
        expect_shape("left coaction", &left, h.dim() * n, n)?;
        expect_shape("right coaction", &right, n * k.dim(), n)?;
        Ok(BicomoduleAlgebra {
            h,
            k,
            algebra,
            left,
            right,
        })
    }

    /// `H` over itself with both coactions given by the comultiplication.
    pub fn regular(h: Arc<Bialgebra>) -> Self {
        Self::twisted(h.clone(), &h.id(), &h.id())
    }

    /// `^α H^β`: coactions `α(h₁) ⊗ h₂` and `h₁ ⊗ β(h₂)`.
    pub fn twisted(h: Arc<Bialgebra>, alpha: &Matrix, beta: &Matrix) -> Self {
        let id = h.id();
        let left = alpha.kron(&id).mul(h.comult());
        let right = id.kron(beta).mul(h.comult());
        BicomoduleAlgebra {
            algebra: h.algebra.clone(),
            k: h.clone(),
            h,
            left,
            right,
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn left_comodule(&self) -> LeftComodule {
        LeftComodule {
            coaction: self.left.clone(),
        }
    }

    pub fn right_comodule(&self) -> RightComodule {
        RightComodule {
            coaction: self.right.clone(),
        }
    }

    pub fn check(&self) -> Report {
        let (n, hd, kd) = (self.dim(), self.h.dim(), self.k.dim());
        let mut r = self.algebra.check();
        r.merge_prefixed("left", self.left_comodule().check(&self.h.coalgebra));
        r.merge_prefixed("right", self.right_comodule().check(&self.k.coalgebra));
        let lhs = self.left.mul(&self.algebra.mult);
        let rhs =
            tensor_mult(self.h.mult(), &self.algebra.mult, hd, n).mul(&self.left.kron(&self.left));
        r.check_maps(
            "left coaction multiplicative",
            "(ab)₋₁ ⊗ (ab)₀ = a₋₁b₋₁ ⊗ a₀b₀",
            &lhs,
            &rhs,
            &[n, n],
        );
        r.check_maps(
            "left coaction unital",
            "1₋₁ ⊗ 1₀ = 1 ⊗ 1",
            &self.left.mul(&self.algebra.unit),
            &self.h.unit().kron(&self.algebra.unit),
            &[1],
        );
        let lhs = self.right.mul(&self.algebra.mult);
        let rhs = tensor_mult(&self.algebra.mult, self.k.mult(), n, kd)
            .mul(&self.right.kron(&self.right));
        r.check_maps(
            "right coaction multiplicative",
            "(ab)₀ ⊗ (ab)₁ = a₀b₀ ⊗ a₁b₁",
            &lhs,
            &rhs,
            &[n, n],
        );
        r.check_maps(
            "right coaction unital",
            "1₀ ⊗ 1₁ = 1 ⊗ 1",
            &self.right.mul(&self.algebra.unit),
            &self.algebra.unit.kron(self.k.unit()),
            &[1],
        );
        let f = self.algebra.field();
        let lhs = Matrix::identity(f, hd).kron(&self.right).mul(&self.left);
        let rhs = self.left.kron(&Matrix::identity(f, kd)).mul(&self.right);
        r.check_maps(
            "coactions commute",
            "a₋₁ ⊗ a₀₀ ⊗ a₀₁ = a₀₋₁ ⊗ a₀₀ ⊗ a₁",
            &lhs,
            &rhs,
            &[n],
        );
        r
    }
}

/// A (K, H)-bimodule coalgebra: left K-action `k ▷ c` and right H-action
/// `c ◁ h`, both coalgebra maps.
#[derive(Clone, Debug, PartialEq)]
pub struct BimoduleCoalgebra {
    pub k: Arc<Bialgebra>,
    pub h: Arc<Bialgebra>,
    pub coalgebra: Coalgebra,
    pub left: Matrix,
    pub right: Matrix,
}

impl BimoduleCoalgebra {
    pub fn new(
        k: Arc<Bialgebra>,
        h: Arc<Bialgebra>,
        coalgebra: Coalgebra,
        left: Matrix,
        right: Matrix,
    ) -> Result<Self, Error> {
        let n = coalgebra.dim();
        expect_shape("left action", &left, n, k.dim() * n)?;
        expect_shape("right action", &right, n, n * h.dim())?;
        Ok(BimoduleCoalgebra {
            k,
            h,
            coalgebra,
            left,
            right,
        })
    }

    pub fn regular(h: Arc<Bialgebra>) -> Self {
        Self::twisted(h.clone(), &h.id(), &h.id())
    }

    /// `_c H_d`: `h ▷ g = c(h)g` and `g ◁ h = g d(h)`.
    pub fn twisted(h: Arc<Bialgebra>, c: &Matrix, d: &Matrix) -> Self {
        let id = h.id();
        let left = h.mult().mul(&c.kron(&id));
        let right = h.mult().mul(&id.kron(d));
        BimoduleCoalgebra {
            coalgebra: h.coalgebra.clone(),
            k: h.clone(),
            h,
            left,
            right,
        }
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn left_module(&self) -> LeftModule {
        LeftModule {
            action: self.left.clone(),
        }
    }

    pub fn right_module(&self) -> RightModule {
        RightModule {
            action: self.right.clone(),
        }
    }

    pub fn check(&self) -> Report {
        let (n, kd, hd) = (self.dim(), self.k.dim(), self.h.dim());
        let f = self.coalgebra.field();
        let mut r = self.coalgebra.check();
        r.merge_prefixed("left", self.left_module().check(&self.k.algebra));
        r.merge_prefixed("right", self.right_module().check(&self.h.algebra));
        let lhs = self.coalgebra.comult.mul(&self.left);
        let rhs = Wiring::identity(f, &[kd, n])
            .apply(0, 1, self.k.comult(), &[kd, kd])
            .apply(2, 1, &self.coalgebra.comult, &[n, n])
            .permute(&[0, 2, 1, 3])
            .apply(0, 2, &self.left, &[n])
            .apply(1, 2, &self.left, &[n])
            .finish();
        r.check_maps(
            "left action comultiplicative",
            "(k ▷ c)₁ ⊗ (k ▷ c)₂ = k₁ ▷ c₁ ⊗ k₂ ▷ c₂",
            &lhs,
            &rhs,
            &[kd, n],
        );
        r.check_maps(
            "left action counital",
            "ε(k ▷ c) = ε(k)ε(c)",
            &self.coalgebra.counit.mul(&self.left),
            &self.k.counit().kron(&self.coalgebra.counit),
            &[kd, n],
        );
        let lhs = self.coalgebra.comult.mul(&self.right);
        let rhs = Wiring::identity(f, &[n, hd])
            .apply(0, 1, &self.coalgebra.comult, &[n, n])
            .apply(2, 1, self.h.comult(), &[hd, hd])
            .permute(&[0, 2, 1, 3])
            .apply(0, 2, &self.right, &[n])
            .apply(1, 2, &self.right, &[n])
            .finish();
        r.check_maps(
            "right action comultiplicative",
            "(c ◁ h)₁ ⊗ (c ◁ h)₂ = c₁ ◁ h₁ ⊗ c₂ ◁ h₂",
            &lhs,
            &rhs,
            &[n, hd],
        );
        r.check_maps(
            "right action counital",
            "ε(c ◁ h) = ε(c)ε(h)",
            &self.coalgebra.counit.mul(&self.right),
            &self.coalgebra.counit.kron(self.h.counit()),
            &[n, hd],
        );
        let lhs = self.left.mul(&Matrix::identity(f, kd).kron(&self.right));
        let rhs = self.right.mul(&self.left.kron(&Matrix::identity(f, hd)));
        r.check_maps(
            "actions commute",
            "k ▷ (c ◁ h) = (k ▷ c) ◁ h",
            &lhs,
            &rhs,
            &[kd, n, hd],
        );
        r
    }
}

/// `X ⊗_A V`: the quotient of `X ⊗ V` by `x·a ⊗ v - x ⊗ a·v`.
pub fn balanced_tensor(x: &RightModule, v: &LeftModule) -> Quotient {
    let f = x.action.field();
    let rho = x.action.kron(&Matrix::identity(f, v.dim()));
    let lambda = Matrix::identity(f, x.dim()).kron(&v.action);
    Quotient::new(&rho.sub(&lambda))
}

/// `X □_C V`: the kernel of `x₀ ⊗ x₁ ⊗ v - x ⊗ v₋₁ ⊗ v₀`.
pub fn cotensor(x: &RightComodule, v: &LeftComodule) -> Subspace {
    let f = x.coaction.field();
    let rho = x.coaction.kron(&Matrix::identity(f, v.dim()));
    let lambda = Matrix::identity(f, x.dim()).kron(&v.coaction);
    Subspace::kernel_of(&rho.sub(&lambda))
}

/// `C ⊗_H V` for a bimodule coalgebra `C` and a left `H`-module `V`, with
/// `K` acting on the `C` factor.
#[derive(Clone, Debug)]
pub struct InducedModule {
    pub quotient: Quotient,
    pub module: LeftModule,
    pub v_dim: usize,
}

pub fn induced_module(c: &BimoduleCoalgebra, v: &LeftModule) -> Result<InducedModule, Error> {
    let quotient = balanced_tensor(&c.right_module(), v);
    let (kd, n, vd) = (c.k.dim(), c.dim(), v.dim());
    let on_ambient = Wiring::identity(c.coalgebra.field(), &[kd, n, vd])
        .apply(0, 2, &c.left, &[n])
        .finish();
    let on_ambient = quotient.projection().mul(&on_ambient);
    let action = quotient
        .descend_factor(&on_ambient, &[kd, n * vd], 1)
        .ok_or_else(|| {
            Error::Incompatible("left action does not descend to the balanced tensor".into())
        })?;
    Ok(InducedModule {
        quotient,
        module: LeftModule { action },
        v_dim: vd,
    })
}

/// `ψ: C ⊗_H (U ⊗ V) -> (C ⊗_H U) ⊗ (C ⊗_H V)`, `c ⊗ u ⊗ v ↦ (c₁ ⊗ u) ⊗ (c₂ ⊗ v)`.
pub fn opmonoidal_psi(
    c: &BimoduleCoalgebra,
    uv: &Quotient,
    u: &Quotient,
    v: &Quotient,
    u_dim: usize,
    v_dim: usize,
) -> Result<Matrix, Error> {
    let n = c.dim();
    let amb = Wiring::identity(c.coalgebra.field(), &[n, u_dim, v_dim])
        .apply(0, 1, &c.coalgebra.comult, &[n, n])
        .permute(&[0, 2, 1, 3])
        .apply(0, 2, u.projection(), &[u.dim()])
        .apply(1, 2, v.projection(), &[v.dim()])
        .finish();
    uv.descend(&amb)
        .ok_or_else(|| Error::Incompatible("ψ does not descend to C ⊗_H (U ⊗ V)".into()))
}

/// `ψ₀: C ⊗_H k -> k`, `c ⊗ 1 ↦ ε(c)`.
pub fn opmonoidal_psi0(c: &BimoduleCoalgebra, triv: &Quotient) -> Result<Matrix, Error> {
    triv.descend(&c.coalgebra.counit)
        .ok_or_else(|| Error::Incompatible("ψ₀ does not descend".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::scalar::FieldSpec;

    #[test]
    fn regular_structures_pass() {
        let h = builtin::sweedler_h4(FieldSpec::Rationals);
        let b = h.bialgebra().clone();
        assert!(BicomoduleAlgebra::regular(b.clone()).check().is_ok());
        assert!(BimoduleCoalgebra::regular(b.clone()).check().is_ok());
        assert!(LeftModule::regular(&b.algebra).check(&b.algebra).is_ok());
        assert!(LeftModule::trivial(&b).check(&b.algebra).is_ok());
    }

    #[test]
    fn balanced_tensor_over_regular_is_v() {
        let h = builtin::sweedler_h4(FieldSpec::Rationals);
        let v = LeftModule::regular(&h.algebra);
        let q = balanced_tensor(&RightModule::regular(&h.algebra), &v);
        assert_eq!(q.dim(), 4);
    }

    #[test]
    fn cotensor_over_regular_is_v() {
        let h = builtin::sweedler_h4(FieldSpec::Rationals);
        let a = BicomoduleAlgebra::regular(h.bialgebra().clone());
        let s = cotensor(&a.right_comodule(), &a.left_comodule());
        assert_eq!(s.dim(), 4);
    }

    #[test]
    fn diagonal_tensor_is_a_module() {
        let h = builtin::sweedler_h4(FieldSpec::Rationals);
        let v = LeftModule::regular(&h.algebra);
        let t = v.tensor(&LeftModule::trivial(h.bialgebra()), h.bialgebra());
        assert!(t.check(&h.algebra).is_ok());
    }
}
