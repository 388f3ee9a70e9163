//! Algebras, coalgebras, bialgebras and Hopf algebras given by structure
//! constants.

use std::sync::{Arc, OnceLock};

use crate::linalg::{Matrix, Wiring};
use crate::report::Report;
use crate::scalar::FieldSpec;
use crate::Error;

/// `mult` is `dim x dim^2`, `unit` is `dim x 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub mult: Matrix,
    pub unit: Matrix,
}

/// `comult` is `dim^2 x dim`, `counit` is `1 x dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub comult: Matrix,
    pub counit: Matrix,
}

fn shape_err(what: &str, m: &Matrix, rows: usize, cols: usize) -> Result<(), Error> {
    if m.shape() != (rows, cols) {
        return Err(Error::DimensionMismatch(format!(
            "{what} must be {rows}x{cols}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

impl Algebra {
    pub fn new(mult: Matrix, unit: Matrix) -> Result<Self, Error> {
        let n = unit.rows();
        shape_err("multiplication", &mult, n, n * n)?;
        shape_err("unit", &unit, n, 1)?;
        if mult.field() != unit.field() {
            return Err(Error::InvalidField(
                "multiplication and unit over different fields".into(),
            ));
        }
        Ok(Algebra { mult, unit })
    }

    pub fn dim(&self) -> usize {
        self.unit.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.unit.field()
    }

    /// Product of two elements given as column vectors.
    pub fn product(&self, a: &Matrix, b: &Matrix) -> Matrix {
        self.mult.mul(&a.kron(b))
    }

    pub fn basis(&self, i: usize) -> Matrix {
        Matrix::unit_vector(self.field(), self.dim(), i)
    }

    /// Left multiplication by `a` as a matrix.
    pub fn left_mult(&self, a: &Matrix) -> Matrix {
        self.mult
            .mul(&a.kron(&Matrix::identity(self.field(), self.dim())))
    }

    pub fn right_mult(&self, a: &Matrix) -> Matrix {
        self.mult
            .mul(&Matrix::identity(self.field(), self.dim()).kron(a))
    }

    pub fn check(&self) -> Report {
        let n = self.dim();
        let f = self.field();
        let id = Matrix::identity(f, n);
        let mut r = Report::new();
        let left = self.mult.mul(&self.mult.kron(&id));
        let right = self.mult.mul(&id.kron(&self.mult));
        r.check_maps("associativity", "(ab)c = a(bc)", &left, &right, &[n, n, n]);
        r.check_maps(
            "left unit",
            "1a = a",
            &self.mult.mul(&self.unit.kron(&id)),
            &id,
            &[n],
        );
        r.check_maps(
            "right unit",
            "a1 = a",
            &self.mult.mul(&id.kron(&self.unit)),
            &id,
            &[n],
        );
        r
    }

    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        Algebra {
            mult: self.mult.mul(&Matrix::flip(self.field(), n, n)),
            unit: self.unit.clone(),
        }
    }
}

impl Coalgebra {
    pub fn new(comult: Matrix, counit: Matrix) -> Result<Self, Error> {
        let n = counit.cols();
        shape_err("comultiplication", &comult, n * n, n)?;
        shape_err("counit", &counit, 1, n)?;
        if comult.field() != counit.field() {
            return Err(Error::InvalidField(
                "comultiplication and counit over different fields".into(),
            ));
        }
        Ok(Coalgebra { comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.counit.cols()
    }

    pub fn field(&self) -> FieldSpec {
        self.counit.field()
    }

    pub fn check(&self) -> Report {
        let n = self.dim();
        let id = Matrix::identity(self.field(), n);
        let mut r = Report::new();
        let left = self.comult.kron(&id).mul(&self.comult);
        let right = id.kron(&self.comult).mul(&self.comult);
        r.check_maps(
            "coassociativity",
            "c₁₁ ⊗ c₁₂ ⊗ c₂ = c₁ ⊗ c₂₁ ⊗ c₂₂",
            &left,
            &right,
            &[n],
        );
        r.check_maps(
            "left counit",
            "ε(c₁)c₂ = c",
            &self.counit.kron(&id).mul(&self.comult),
            &id,
            &[n],
        );
        r.check_maps(
            "right counit",
            "c₁ε(c₂) = c",
            &id.kron(&self.counit).mul(&self.comult),
            &id,
            &[n],
        );
        r
    }

    /// Same space with the flipped comultiplication `c ↦ c₂ ⊗ c₁`.
    pub fn coopposite(&self) -> Coalgebra {
        let n = self.dim();
        Coalgebra {
            comult: Matrix::flip(self.field(), n, n).mul(&self.comult),
            counit: self.counit.clone(),
        }
    }

    /// Whether basis vector `i` is grouplike.
    pub fn is_grouplike(&self, v: &Matrix) -> bool {
        self.comult.mul(v) == v.kron(v) && self.counit.mul(v).get(0, 0).is_one()
    }
}

/// The multiplication of `A ⊗ B`: `(a ⊗ b)(a' ⊗ b') = aa' ⊗ bb'`.
pub fn tensor_mult(a: &Matrix, b: &Matrix, da: usize, db: usize) -> Matrix {
    Wiring::identity(a.field(), &[da, db, da, db])
        .permute(&[0, 2, 1, 3])
        .apply(0, 2, a, &[da])
        .apply(1, 2, b, &[db])
        .finish()
}

/// The comultiplication of `C ⊗ D`: `c ⊗ d ↦ (c₁ ⊗ d₁) ⊗ (c₂ ⊗ d₂)`.
pub fn tensor_comult(c: &Matrix, d: &Matrix, dc: usize, dd: usize) -> Matrix {
    Wiring::identity(c.field(), &[dc, dd])
        .apply(0, 1, c, &[dc, dc])
        .apply(2, 1, d, &[dd, dd])
        .permute(&[0, 2, 1, 3])
        .finish()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antipode {
    pub s: Matrix,
    pub s_inv: Option<Matrix>,
}

/// An algebra and coalgebra on the same space, with a lazily computed antipode.
#[derive(Debug)]
pub struct Bialgebra {
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
    antipode: OnceLock<Option<Antipode>>,
}

impl Clone for Bialgebra {
    fn clone(&self) -> Self {
        Bialgebra {
            algebra: self.algebra.clone(),
            coalgebra: self.coalgebra.clone(),
            antipode: self.antipode.clone(),
        }
    }
}

impl PartialEq for Bialgebra {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.algebra == other.algebra && self.coalgebra == other.coalgebra)
    }
}

impl Eq for Bialgebra {}

impl Bialgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra) -> Result<Self, Error> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dimension {}, coalgebra {}",
                algebra.dim(),
                coalgebra.dim()
            )));
        }
        if algebra.field() != coalgebra.field() {
            return Err(Error::InvalidField(
                "algebra and coalgebra over different fields".into(),
            ));
        }
        Ok(Bialgebra {
            algebra,
            coalgebra,
            antipode: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn mult(&self) -> &Matrix {
        &self.algebra.mult
    }

    pub fn unit(&self) -> &Matrix {
        &self.algebra.unit
    }

    pub fn comult(&self) -> &Matrix {
        &self.coalgebra.comult
    }

    pub fn counit(&self) -> &Matrix {
        &self.coalgebra.counit
    }

    pub fn id(&self) -> Matrix {
        Matrix::identity(self.field(), self.dim())
    }

    /// Algebra, coalgebra and compatibility axioms.
    pub fn check(&self) -> Report {
        let n = self.dim();
        let f = self.field();
        let mut r = self.algebra.check();
        r.merge(self.coalgebra.check());
        let lhs = self.comult().mul(self.mult());
        let rhs =
            tensor_mult(self.mult(), self.mult(), n, n).mul(&self.comult().kron(self.comult()));
        r.check_maps(
            "comultiplication is multiplicative",
            "(ab)₁ ⊗ (ab)₂ = a₁b₁ ⊗ a₂b₂",
            &lhs,
            &rhs,
            &[n, n],
        );
        r.check_maps(
            "comultiplication is unital",
            "Δ(1) = 1 ⊗ 1",
            &self.comult().mul(self.unit()),
            &self.unit().kron(self.unit()),
            &[1],
        );
        let lhs = self.counit().mul(self.mult());
        r.check_maps(
            "counit is multiplicative",
            "ε(ab) = ε(a)ε(b)",
            &lhs,
            &self.counit().kron(self.counit()),
            &[n, n],
        );
        r.check_maps(
            "counit is unital",
            "ε(1) = 1",
            &self.counit().mul(self.unit()),
            &Matrix::identity(f, 1),
            &[1],
        );
        r
    }

    /// The antipode, found by solving both convolution-inverse equations
    /// `S(h₁)h₂ = ε(h)1 = h₁S(h₂)` as one linear system. `None` if no
    /// antipode exists.
    pub fn antipode(&self) -> Option<&Antipode> {
        self.antipode
            .get_or_init(|| compute_antipode(self))
            .as_ref()
    }

    pub fn s(&self) -> Option<&Matrix> {
        self.antipode().map(|a| &a.s)
    }

    pub fn s_inv(&self) -> Option<&Matrix> {
        self.antipode().and_then(|a| a.s_inv.as_ref())
    }

    /// The dual bialgebra on the dual basis.
    pub fn dual(&self) -> Bialgebra {
        Bialgebra::new(
            Algebra {
                mult: self.comult().transpose(),
                unit: self.counit().transpose(),
            },
            Coalgebra {
                comult: self.mult().transpose(),
                counit: self.unit().transpose(),
            },
        )
        .expect("dual of a well-shaped bialgebra")
    }

    /// Checks `m(S ⊗ id)Δ = ηε = m(id ⊗ S)Δ` for a proposed antipode.
    pub fn check_antipode(&self, s: &Matrix) -> Report {
        let n = self.dim();
        let id = self.id();
        let target = self.unit().mul(self.counit());
        let mut r = Report::new();
        let left = self.mult().mul(&s.kron(&id)).mul(self.comult());
        let right = self.mult().mul(&id.kron(s)).mul(self.comult());
        r.check_maps("left antipode", "S(h₁)h₂ = ε(h)1", &left, &target, &[n]);
        r.check_maps("right antipode", "h₁S(h₂) = ε(h)1", &right, &target, &[n]);
        r
    }

    pub fn check_automorphism(&self, phi: &Matrix) -> Report {
        let n = self.dim();
        let mut r = Report::new();
        r.check_true(
            "bijective",
            "φ is invertible",
            phi.shape() == (n, n) && phi.is_invertible(),
            None,
        );
        if phi.shape() != (n, n) {
            return r;
        }
        let lhs = phi.mul(self.mult());
        let rhs = self.mult().mul(&phi.kron(phi));
        r.check_maps("multiplicative", "φ(ab) = φ(a)φ(b)", &lhs, &rhs, &[n, n]);
        r.check_maps(
            "unital",
            "φ(1) = 1",
            &phi.mul(self.unit()),
            self.unit(),
            &[1],
        );
        let lhs = self.comult().mul(phi);
        let rhs = phi.kron(phi).mul(self.comult());
        r.check_maps(
            "comultiplicative",
            "φ(h)₁ ⊗ φ(h)₂ = φ(h₁) ⊗ φ(h₂)",
            &lhs,
            &rhs,
            &[n],
        );
        r.check_maps(
            "counital",
            "ε(φ(h)) = ε(h)",
            &self.counit().mul(phi),
            self.counit(),
            &[n],
        );
        r
    }
}

fn compute_antipode(b: &Bialgebra) -> Option<Antipode> {
    let n = b.dim();
    let f = b.field();
    let delta = b.comult();
    let mult = b.mult();
    // Unknown S_{k,i} sits at variable k*n + i; equations indexed by (eq, l, col).
    let mut sys = Matrix::zeros(f, 2 * n * n, n * n);
    for col in 0..n {
        for i in 0..n {
            for j in 0..n {
                let c = delta.get(i * n + j, col);
                if c.is_zero() {
                    continue;
                }
                for k in 0..n {
                    for l in 0..n {
                        // Σ c_ij S(e_i) e_j: S(e_i) = Σ_k S_ki e_k.
                        let m = mult.get(l, k * n + j);
                        if !m.is_zero() {
                            let row = l * n + col;
                            let mut v = sys.get(row, k * n + i).clone();
                            v.add_mul(c, m);
                            sys.set(row, k * n + i, v);
                        }
                        // Σ c_ij e_i S(e_j).
                        let m = mult.get(l, i * n + k);
                        if !m.is_zero() {
                            let row = n * n + l * n + col;
                            let mut v = sys.get(row, k * n + j).clone();
                            v.add_mul(c, m);
                            sys.set(row, k * n + j, v);
                        }
                    }
                }
            }
        }
    }
    let target = b.unit().mul(b.counit());
    let mut rhs = Matrix::zeros(f, 2 * n * n, 1);
    for l in 0..n {
        for col in 0..n {
            rhs.set(l * n + col, 0, target.get(l, col).clone());
            rhs.set(n * n + l * n + col, 0, target.get(l, col).clone());
        }
    }
    let sol = sys.solve(&rhs)?;
    let s = Matrix::from_fn(f, n, n, |k, i| sol.get(k * n + i, 0).clone());
    let s_inv = s.inverse();
    Some(Antipode { s, s_inv })
}

/// A bialgebra known to have an antipode.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebra {
    bialgebra: Arc<Bialgebra>,
}

impl HopfAlgebra {
    /// Computes the antipode; a supplied antipode must agree exactly.
    pub fn new(bialgebra: Bialgebra, claimed: Option<&Matrix>) -> Result<Self, Error> {
        let report = bialgebra.check();
        if !report.is_ok() {
            return Err(Error::verification("bialgebra", report));
        }
        let Some(anti) = bialgebra.antipode() else {
            return Err(Error::NoAntipode(
                "the convolution equations have no solution".into(),
            ));
        };
        if let Some(claimed) = claimed {
            let mut r = Report::new();
            let n = bialgebra.dim();
            if claimed.shape() != (n, n) {
                return Err(Error::DimensionMismatch(format!(
                    "antipode must be {n}x{n}"
                )));
            }
            r.check_maps(
                "antipode matches computed value",
                "S is the convolution inverse of id",
                claimed,
                &anti.s,
                &[n],
            );
            if !r.is_ok() {
                return Err(Error::verification("supplied antipode", r));
            }
        }
        Ok(HopfAlgebra {
            bialgebra: Arc::new(bialgebra),
        })
    }

    pub fn from_arc(bialgebra: Arc<Bialgebra>) -> Result<Self, Error> {
        if bialgebra.antipode().is_none() {
            return Err(Error::NoAntipode(
                "the convolution equations have no solution".into(),
            ));
        }
        Ok(HopfAlgebra { bialgebra })
    }

    pub fn bialgebra(&self) -> &Arc<Bialgebra> {
        &self.bialgebra
    }

    pub fn antipode(&self) -> &Matrix {
        self.bialgebra.s().expect("checked at construction")
    }

    pub fn antipode_inverse(&self) -> Option<&Matrix> {
        self.bialgebra.s_inv()
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.bialgebra.field()
    }

    /// Bialgebra axioms, antipode laws and invertibility of the antipode.
    pub fn check(&self) -> Report {
        let mut r = self.bialgebra.check();
        r.merge(self.bialgebra.check_antipode(self.antipode()));
        r.check_true(
            "antipode invertible",
            "S is bijective",
            self.antipode_inverse().is_some(),
            None,
        );
        r
    }
}

impl std::ops::Deref for HopfAlgebra {
    type Target = Bialgebra;
    fn deref(&self) -> &Bialgebra {
        &self.bialgebra
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k_c2() -> Bialgebra {
        let f = FieldSpec::Rationals;
        let mult = Matrix::from_ints(f, 2, 4, &[1, 0, 0, 1, 0, 1, 1, 0]);
        let unit = Matrix::from_ints(f, 2, 1, &[1, 0]);
        let comult = Matrix::from_ints(f, 4, 2, &[1, 0, 0, 0, 0, 0, 0, 1]);
        let counit = Matrix::from_ints(f, 1, 2, &[1, 1]);
        Bialgebra::new(
            Algebra::new(mult, unit).unwrap(),
            Coalgebra::new(comult, counit).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn group_algebra_antipode_is_inversion() {
        let b = k_c2();
        assert!(b.check().is_ok());
        assert_eq!(b.s().unwrap(), &Matrix::identity(FieldSpec::Rationals, 2));
    }

    #[test]
    fn bialgebra_without_antipode() {
        // The monoid bialgebra of {1, z} with z·z = z.
        let f = FieldSpec::Rationals;
        let mult = Matrix::from_ints(f, 2, 4, &[1, 0, 0, 0, 0, 1, 1, 1]);
        let unit = Matrix::from_ints(f, 2, 1, &[1, 0]);
        let comult = Matrix::from_ints(f, 4, 2, &[1, 0, 0, 0, 0, 0, 0, 1]);
        let counit = Matrix::from_ints(f, 1, 2, &[1, 1]);
        let b = Bialgebra::new(
            Algebra::new(mult, unit).unwrap(),
            Coalgebra::new(comult, counit).unwrap(),
        )
        .unwrap();
        assert!(b.check().is_ok());
        assert!(b.antipode().is_none());
        assert!(matches!(
            HopfAlgebra::new(b, None),
            Err(Error::NoAntipode(_))
        ));
    }

    #[test]
    fn wrong_claimed_antipode_is_rejected() {
        let f = FieldSpec::Rationals;
        let bad = Matrix::from_ints(f, 2, 2, &[0, 1, 1, 0]);
        assert!(matches!(
            HopfAlgebra::new(k_c2(), Some(&bad)),
            Err(Error::Verification { .. })
        ));
    }

    #[test]
    fn shape_errors() {
        let f = FieldSpec::Rationals;
        assert!(Algebra::new(Matrix::zeros(f, 2, 3), Matrix::zeros(f, 2, 1)).is_err());
        assert!(Coalgebra::new(Matrix::zeros(f, 4, 2), Matrix::zeros(f, 1, 3)).is_err());
    }
}
