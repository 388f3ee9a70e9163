use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_ratio::RBig;

use crate::Error;

/// The ground field of a structure: exact rationals or a prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Prime fields are limited to p < 2^32 so products fit in a u64.
    pub fn prime(p: u64) -> Result<Self, Error> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a supported prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(RBig::from(n)),
            FieldSpec::PrimeField(p) => Scalar::Modular {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    /// Parses `"-3/7"`, `"5"` and, over F_p, any integer or fraction with
    /// denominator prime to p.
    pub fn parse(&self, text: &str) -> Result<Scalar, Error> {
        let text = text.trim();
        let bad = || Error::InvalidScalar(text.to_string());
        match self {
            FieldSpec::Rationals => {
                let (num, den) = text.split_once('/').unwrap_or((text, "1"));
                let int = |s: &str| -> Result<RBig, Error> {
                    let s = s.trim();
                    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(bad());
                    }
                    RBig::from_str(s).map_err(|_| bad())
                };
                let (num, den) = (int(num)?, int(den)?);
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(num / den))
            }
            FieldSpec::PrimeField(_) => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let reduce = |s: &str| -> Result<Scalar, Error> {
                    let p = self.characteristic() as i128;
                    let v: i128 = s.parse().map_err(|_| bad())?;
                    Ok(self.from_i64(v.rem_euclid(p) as i64))
                };
                let d = reduce(den)?.inv().ok_or_else(bad)?;
                Ok(&reduce(num)? * &d)
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::PrimeField(p), Scalar::Modular { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Arithmetic between elements of different fields
/// is an internal invariant violation and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(RBig),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(RBig::ONE / r),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self += a * b`, the inner step of every matrix product.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (
                Scalar::Modular { value, modulus },
                Scalar::Modular { value: x, .. },
                Scalar::Modular { value: y, .. },
            ) => {
                *value = (*value + x * y % *modulus) % *modulus;
            }
            (Scalar::Rational(r), Scalar::Rational(x), Scalar::Rational(y)) => {
                *r += x * y;
            }
            _ => mixed(),
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

#[cold]
fn mixed() -> ! {
    panic!("arithmetic between scalars of different fields")
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $rat:expr, $modular:expr) => {
        #[allow(clippy::suspicious_arithmetic_impl)]
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($rat(a, b)),
                    (
                        Scalar::Modular { value: a, modulus },
                        Scalar::Modular {
                            value: b,
                            modulus: m2,
                        },
                    ) if modulus == m2 => Scalar::Modular {
                        value: $modular(*a, *b, *modulus),
                        modulus: *modulus,
                    },
                    _ => mixed(),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &RBig, b: &RBig| a + b,
    |a: u64, b: u64, m: u64| (a + b) % m
);
binop!(
    Sub,
    sub,
    |a: &RBig, b: &RBig| a - b,
    |a: u64, b: u64, m: u64| (a + m - b) % m
);
binop!(
    Mul,
    mul,
    |a: &RBig, b: &RBig| a * b,
    |a: u64, b: u64, m: u64| a * b % m
);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_and_display_round_trip() {
        let q = FieldSpec::Rationals;
        let a = q.parse("-6/14").unwrap();
        assert_eq!(a.to_string(), "-3/7");
        assert_eq!(q.parse("4/2").unwrap().to_string(), "2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn modular_arithmetic() {
        let f7 = FieldSpec::prime(7).unwrap();
        let two = f7.from_i64(2);
        assert_eq!(two.inv().unwrap(), f7.from_i64(4));
        assert_eq!(two.pow(3), f7.one());
        assert_eq!(f7.parse("-1").unwrap(), f7.from_i64(6));
        assert_eq!(f7.parse("1/2").unwrap(), f7.from_i64(4));
        assert!(f7.parse("1/7").is_err());
        assert_eq!((-&two).to_string(), "5");
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2).is_ok());
    }

    #[test]
    fn add_mul_matches_separate_ops() {
        let q = FieldSpec::Rationals;
        let mut acc = q.parse("1/3").unwrap();
        acc.add_mul(&q.parse("2/5").unwrap(), &q.parse("-5/4").unwrap());
        assert_eq!(acc, q.parse("-1/6").unwrap());
    }
}
