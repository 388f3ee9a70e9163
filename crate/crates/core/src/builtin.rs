//! Concrete Hopf algebras and Yetter-Drinfeld modules.

use std::sync::Arc;

use crate::hopf::{Algebra, Bialgebra, Coalgebra, HopfAlgebra};
use crate::linalg::{Matrix, Wiring};
use crate::scalar::FieldSpec;
use crate::yd::{YdDatum, YdModule};
use crate::Error;

/// Multiplication table of the cyclic group `Z/n`.
pub fn cyclic_group(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect()
}

/// Multiplication table of `S₃`, permutations of `{0,1,2}` listed in
/// lexicographic order; `table[p][q]` is `p ∘ q`.
pub fn symmetric_group_s3() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index([p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect()
}

pub(crate) struct Group {
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

pub(crate) fn validate_group(table: &[Vec<usize>]) -> Result<Group, Error> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if table
        .iter()
        .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
    {
        return Err(Error::NotAGroup(
            "table is not an n x n table over 0..n".into(),
        ));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                }
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let inverse = table
        .iter()
        .enumerate()
        .map(|(a, row)| {
            (0..n)
                .find(|&b| row[b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Group {
        table: table.to_vec(),
        identity,
        inverse,
    })
}

/// The group algebra `kG` on the basis of group elements.
pub fn group_algebra(table: &[Vec<usize>], field: FieldSpec) -> Result<HopfAlgebra, Error> {
    let g = validate_group(table)?;
    let n = table.len();
    let mut mult = Matrix::zeros(field, n, n * n);
    let mut comult = Matrix::zeros(field, n * n, n);
    let mut s = Matrix::zeros(field, n, n);
    for a in 0..n {
        for b in 0..n {
            mult.set(g.table[a][b], a * n + b, field.one());
        }
        comult.set(a * n + a, a, field.one());
        s.set(g.inverse[a], a, field.one());
    }
    let unit = Matrix::unit_vector(field, n, g.identity);
    let counit = Matrix::from_fn(field, 1, n, |_, _| field.one());
    let b = Bialgebra::new(Algebra::new(mult, unit)?, Coalgebra::new(comult, counit)?)?;
    HopfAlgebra::new(b, Some(&s))
}

/// The function algebra `k^G` on the basis of point indicators `δ_g`.
pub fn function_algebra(table: &[Vec<usize>], field: FieldSpec) -> Result<HopfAlgebra, Error> {
    let g = validate_group(table)?;
    let n = table.len();
    let mut mult = Matrix::zeros(field, n, n * n);
    let mut comult = Matrix::zeros(field, n * n, n);
    let mut s = Matrix::zeros(field, n, n);
    for a in 0..n {
        mult.set(a, a * n + a, field.one());
        for b in 0..n {
            comult.set(a * n + b, g.table[a][b], field.one());
        }
        s.set(g.inverse[a], a, field.one());
    }
    let unit = Matrix::from_fn(field, n, 1, |_, _| field.one());
    let counit = Matrix::from_fn(field, 1, n, |_, j| {
        if j == g.identity {
            field.one()
        } else {
            field.zero()
        }
    });
    let b = Bialgebra::new(Algebra::new(mult, unit)?, Coalgebra::new(comult, counit)?)?;
    HopfAlgebra::new(b, Some(&s))
}

/// Sweedler's four-dimensional Hopf algebra on the basis `{1, g, x, gx}`.
///
/// Panics in characteristic 2; use [`try_sweedler_h4`] to get an error instead.
pub fn sweedler_h4(field: FieldSpec) -> HopfAlgebra {
    try_sweedler_h4(field).expect("characteristic 2")
}

pub fn try_sweedler_h4(field: FieldSpec) -> Result<HopfAlgebra, Error> {
    if field.characteristic() == 2 {
        return Err(Error::InvalidField(
            "Sweedler's algebra needs characteristic other than 2".into(),
        ));
    }
    taft(2, -1, field)
}

/// The Taft algebra `T_n(q)`: `gⁿ = 1`, `xⁿ = 0`, `xg = q gx`, `g`
/// grouplike and `Δx = x ⊗ 1 + g ⊗ x`. The basis element `gⁱxʲ` sits at
/// index `j·n + i`, so `n = 2` gives the order `{1, g, x, gx}`.
pub fn taft(n: usize, q: i64, field: FieldSpec) -> Result<HopfAlgebra, Error> {
    if n < 2 {
        return Err(Error::InvalidParameter("Taft algebras need n >= 2".into()));
    }
    let q = field.from_i64(q);
    let one = field.one();
    let primitive = q.pow(n as u64) == one && (1..n).all(|k| q.pow(k as u64) != one);
    if !primitive {
        return Err(Error::InvalidParameter(format!(
            "{q} is not a primitive {n}-th root of unity in {field}"
        )));
    }
    let d = n * n;
    let idx = |i: usize, j: usize| j * n + i;
    let mut mult = Matrix::zeros(field, d, d * d);
    for (a, b, c, e) in itertools4(n) {
        if b + e < n {
            // gᵃxᵇ gᶜxᵉ = q^{bc} g^{a+c} x^{b+e}
            mult.set(
                idx((a + c) % n, b + e),
                idx(a, b) * d + idx(c, e),
                q.pow((b * c) as u64),
            );
        }
    }
    let unit = Matrix::unit_vector(field, d, idx(0, 0));
    let algebra = Algebra::new(mult, unit)?;
    // Δ(gᵃxᵇ) = Δ(g)ᵃ Δ(x)ᵇ, multiplied out in H ⊗ H.
    let tensor_product = |u: &Matrix, v: &Matrix| -> Matrix {
        let mut out = Matrix::zeros(field, d * d, 1);
        for i in 0..d * d {
            if u.get(i, 0).is_zero() {
                continue;
            }
            for j in 0..d * d {
                if v.get(j, 0).is_zero() {
                    continue;
                }
                let coeff = u.get(i, 0) * v.get(j, 0);
                let left = algebra.product(&algebra.basis(i / d), &algebra.basis(j / d));
                let right = algebra.product(&algebra.basis(i % d), &algebra.basis(j % d));
                out = out.add(&left.kron(&right).scale(&coeff));
            }
        }
        out
    };
    let e = |i: usize| Matrix::unit_vector(field, d, i);
    let delta_g = e(idx(1 % n, 0)).kron(&e(idx(1 % n, 0)));
    let delta_x = e(idx(0, 1))
        .kron(&e(idx(0, 0)))
        .add(&e(idx(1, 0)).kron(&e(idx(0, 1))));
    let mut comult = Matrix::zeros(field, d * d, d);
    let mut counit = Matrix::zeros(field, 1, d);
    for a in 0..n {
        for b in 0..n {
            let mut v = e(0).kron(&e(0));
            for _ in 0..a {
                v = tensor_product(&v, &delta_g);
            }
            for _ in 0..b {
                v = tensor_product(&v, &delta_x);
            }
            for r in 0..d * d {
                comult.set(r, idx(a, b), v.get(r, 0).clone());
            }
            if b == 0 {
                counit.set(0, idx(a, b), one.clone());
            }
        }
    }
    let b = Bialgebra::new(algebra, Coalgebra::new(comult, counit)?)?;
    HopfAlgebra::new(b, None)
}

fn itertools4(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..n).flat_map(move |a| {
        (0..n).flat_map(move |b| (0..n).flat_map(move |c| (0..n).map(move |e| (a, b, c, e))))
    })
}

/// The Hopf automorphism of a Taft algebra fixing `g` and scaling `x` by `λ`.
pub fn taft_scaling(h: &HopfAlgebra, n: usize, lambda: i64) -> Matrix {
    let field = h.field();
    let l = field.from_i64(lambda);
    Matrix::from_fn(field, n * n, n * n, |i, j| {
        if i == j {
            l.pow((j / n) as u64)
        } else {
            field.zero()
        }
    })
}

/// The automorphism `g ↦ g`, `x ↦ λx` of Sweedler's algebra.
pub fn h4_scaling(h: &HopfAlgebra, lambda: i64) -> Matrix {
    taft_scaling(h, 2, lambda)
}

/// The one-dimensional module over the regular datum: `h·1 = ε(h)`, `1 ↦ 1 ⊗ 1`.
pub fn trivial_yd(h: &Arc<Bialgebra>) -> YdModule {
    let datum = Arc::new(YdDatum::regular(h.clone()));
    YdModule {
        datum,
        action: h.counit().clone(),
        coaction: h.unit().clone(),
    }
}

/// `M = C` with `ρ = Δ_C` and `a·c = a₁ ▷ c ◁ S⁻¹(a₋₁)`, where the
/// middle leg of `a₋₁ ⊗ a₀ ⊗ a₁` is evaluated by the counit of `H`.
/// Needs `A` to be `H` as an algebra (so that `ε_H` is a character of `A`)
/// and an invertible antipode on `H`.
pub fn coregular_yd(datum: &Arc<YdDatum>) -> Result<YdModule, Error> {
    let (h, k) = (datum.h(), datum.k());
    let (hd, kd, da, dc) = (h.dim(), k.dim(), datum.a.dim(), datum.c.dim());
    if datum.a.algebra != h.algebra {
        return Err(Error::Incompatible(
            "the coregular module needs A = H as an algebra".into(),
        ));
    }
    let s_inv = h
        .s_inv()
        .ok_or_else(|| Error::NoAntipode("H needs an invertible antipode".into()))?;
    let action = Wiring::identity(h.field(), &[da, dc])
        .apply(0, 1, &datum.a.left, &[hd, da])
        .apply(1, 1, &datum.a.right, &[da, kd])
        .apply(1, 1, h.counit(), &[])
        .apply(1, 2, &datum.c.left, &[dc])
        .apply(0, 1, s_inv, &[hd])
        .permute(&[1, 0])
        .apply(0, 2, &datum.c.right, &[dc])
        .finish();
    YdModule::new(datum.clone(), dc, action, datum.c.coalgebra.comult.clone())
}

/// For a group algebra: `kG` with `g·x = gxg⁻¹` and `x ↦ x ⊗ x`.
/// `None` if some basis element is not grouplike.
pub fn conjugation_yd(h: &HopfAlgebra) -> Option<YdModule> {
    let n = h.dim();
    if !(0..n).all(|i| h.coalgebra.is_grouplike(&h.algebra.basis(i))) {
        return None;
    }
    let b = h.bialgebra();
    let action = Wiring::identity(h.field(), &[n, n])
        .apply(0, 1, b.comult(), &[n, n])
        .permute(&[0, 2, 1])
        .apply(2, 1, h.antipode(), &[n])
        .apply(0, 2, b.mult(), &[n])
        .apply(0, 2, b.mult(), &[n])
        .finish();
    let datum = Arc::new(YdDatum::regular(b.clone()));
    Some(YdModule {
        datum,
        action,
        coaction: b.comult().clone(),
    })
}

/// The classical examples over `(H, H, H, H)`: the trivial module, the
/// coregular module, and for group algebras the conjugation module.
pub fn classical_yd_examples(h: &HopfAlgebra) -> Vec<YdModule> {
    let b = h.bialgebra();
    let mut out = vec![trivial_yd(b)];
    if let Ok(m) = coregular_yd(&Arc::new(YdDatum::regular(b.clone()))) {
        out.push(m);
    }
    out.extend(conjugation_yd(h));
    out
}

/// The named Hopf algebras every suite runs on.
pub fn hopf_catalog() -> Vec<(&'static str, HopfAlgebra)> {
    let q = FieldSpec::Rationals;
    let f7 = FieldSpec::prime(7).expect("7 is prime");
    vec![
        ("kC2", group_algebra(&cyclic_group(2), q).expect("group")),
        (
            "kC3_F7",
            group_algebra(&cyclic_group(3), f7).expect("group"),
        ),
        (
            "kS3",
            group_algebra(&symmetric_group_s3(), q).expect("group"),
        ),
        (
            "k^C2",
            function_algebra(&cyclic_group(2), q).expect("group"),
        ),
        ("H4", sweedler_h4(q)),
        (
            "T3_F7",
            taft(3, 2, f7).expect("2 is a primitive cube root of unity mod 7"),
        ),
    ]
}

/// `(H₄, H₄, ^αH₄, _{id}H₄_α)` for the scaling `α: x ↦ λx`.
pub fn twisted_h4_datum(field: FieldSpec, lambda: i64) -> Arc<YdDatum> {
    let h = sweedler_h4(field);
    let b = h.bialgebra().clone();
    let alpha = h4_scaling(&h, lambda);
    let id = b.id();
    let a = crate::rep::BicomoduleAlgebra::twisted(b.clone(), &alpha, &id);
    let c = crate::rep::BimoduleCoalgebra::twisted(b, &id, &alpha);
    Arc::new(YdDatum::new(a, c).expect("same Hopf algebra on both sides"))
}

/// Every built-in YD module, named: the classical examples over each
/// catalog Hopf algebra and the coregular modules over twisted `H₄` data.
pub fn yd_catalog() -> Vec<(String, YdModule)> {
    let mut out = Vec::new();
    for (name, h) in hopf_catalog() {
        let b = h.bialgebra();
        out.push((format!("{name}_trivial"), trivial_yd(b)));
        if let Ok(m) = coregular_yd(&Arc::new(YdDatum::regular(b.clone()))) {
            out.push((format!("{name}_coregular"), m));
        }
        if let Some(m) = conjugation_yd(&h) {
            out.push((format!("{name}_conjugation"), m));
        }
    }
    for (lambda, field, tag) in [
        (2, FieldSpec::Rationals, "Q"),
        (3, FieldSpec::prime(7).expect("prime"), "F7"),
    ] {
        let m = coregular_yd(&twisted_h4_datum(field, lambda)).expect("A = H as an algebra");
        out.push((format!("H4_twisted{lambda}_{tag}_coregular"), m));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_table_is_a_nonabelian_group() {
        let t = symmetric_group_s3();
        assert!(validate_group(&t).is_ok());
        assert!((0..6).any(|a| (0..6).any(|b| t[a][b] != t[b][a])));
    }

    #[test]
    fn non_group_rejected() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            group_algebra(&t, FieldSpec::Rationals),
            Err(Error::NotAGroup(_))
        ));
    }

    #[test]
    fn taft_rejects_non_primitive_root() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert!(taft(3, 3, f7).is_err());
        assert!(taft(3, 1, f7).is_err());
        assert!(taft(3, 2, f7).is_ok());
    }

    #[test]
    fn sweedler_rejected_in_characteristic_two() {
        assert!(try_sweedler_h4(FieldSpec::prime(2).unwrap()).is_err());
    }
}
