//! Dense polynomials with arbitrary-precision non-negative integer
//! coefficients.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `s_0 + s_1 x + ... + s_d x^d`, stored without trailing zeros. The zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigUint>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![BigUint::one()] }
    }

    /// `1 + x`.
    pub fn one_plus_x() -> Self {
        Self::from_u64s(&[1, 1])
    }

    pub fn new(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// `c * x^k`.
    pub fn monomial(c: BigUint, k: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Number of stored coefficients (`degree + 1`, or 0 for the zero
    /// polynomial).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients as `u64`, if they all fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(|c| u64::try_from(c).ok()).collect()
    }

    /// `x * self`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigUint::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigUint) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self - 1`, for polynomials whose constant term is 1.
    fn minus_one(&self) -> Result<Self> {
        match self.coeffs.first() {
            Some(c) if c.is_one() => {
                let mut coeffs = self.coeffs.clone();
                coeffs[0] = BigUint::zero();
                Ok(Self::new(coeffs))
            }
            _ => Err(Error::InvalidParameter(
                "substituted polynomial must have constant term 1".into(),
            )),
        }
    }

    /// `self(q(x) - 1)`. This is the independence polynomial of a
    /// lexicographic product `G[H]` when `self = I(G)` and `q = I(H)`.
    pub fn compose_shifted(&self, q: &Polynomial) -> Result<Self> {
        let inner = q.minus_one()?;
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Self::new(vec![c.clone()]);
        }
        Ok(acc)
    }

    /// Value at a non-negative integer point.
    pub fn eval(&self, x: &BigUint) -> BigUint {
        self.coeffs.iter().rev().fold(BigUint::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// Space-separated coefficients, lowest degree first. The zero polynomial
/// prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_string().replace(' ', ", "))
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split_whitespace()
            .map(|t| {
                t.parse::<BigUint>()
                    .map_err(|_| Error::InvalidParameter(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[u64]) -> Polynomial {
        Polynomial::from_u64s(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p(&[1, 2]).pow(2), p(&[1, 4, 4]));
        assert_eq!(&p(&[3, 0, 7]) * &Polynomial::one(), p(&[3, 0, 7]));
        // (1+x)(1+x+x^2) by hand: 1 + 2x + 2x^2 + x^3
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1, 1]), p(&[1, 2, 2, 1]));
        assert_eq!(&p(&[1, 2]) + &p(&[0, 0, 5]), p(&[1, 2, 5]));
        assert_eq!(p(&[1, 1]).pow(0), Polynomial::one());
        assert_eq!(p(&[0, 0]), Polynomial::zero());
        assert_eq!(p(&[2, 3]).shift(), p(&[0, 2, 3]));
    }

    #[test]
    fn compose_examples() {
        // 1 + 2((1+2x+x^2) - 1) = 1 + 4x + 2x^2
        assert_eq!(p(&[1, 2]).compose_shifted(&p(&[1, 2, 1])).unwrap(), p(&[1, 4, 2]));
        let q = p(&[1, 7, 3, 1]);
        let m = 5u64;
        let expected = &Polynomial::one() + &p(&[0, 7 * m, 3 * m, m]);
        assert_eq!(p(&[1, m]).compose_shifted(&q).unwrap(), expected);
        assert!(p(&[1, 2]).compose_shifted(&p(&[2, 1])).is_err());
        assert_eq!(p(&[1, 2]).compose_shifted(&p(&[1, 2])).unwrap().degree(), 1);
    }

    #[test]
    fn text_form() {
        let q = p(&[1, 5, 5]);
        assert_eq!(q.to_string(), "1 5 5");
        assert_eq!("1 5 5".parse::<Polynomial>().unwrap(), q);
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!("0".parse::<Polynomial>().unwrap(), Polynomial::zero());
        assert!("1 x".parse::<Polynomial>().is_err());
        assert_eq!(serde_json::to_string(&q).unwrap(), "\"1 5 5\"");
    }

    #[test]
    fn eval_matches_coefficients() {
        assert_eq!(p(&[1, 5, 5]).eval(&BigUint::from(1u32)), BigUint::from(11u32));
        assert_eq!(p(&[1, 5, 5]).eval(&BigUint::from(2u32)), BigUint::from(31u32));
    }

    fn poly_strategy() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(0u64..1000, 0..6).prop_map(|c| Polynomial::from_u64s(&c))
    }

    fn graph_like() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(0u64..50, 0..4).prop_map(|mut c| {
            c.insert(0, 1);
            Polynomial::from_u64s(&c)
        })
    }

    proptest! {
        #[test]
        fn multiplication_commutes_and_associates(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn identity_substitution(a in poly_strategy()) {
            prop_assert_eq!(a.compose_shifted(&Polynomial::one_plus_x()).unwrap(), a);
        }

        #[test]
        fn composition_agrees_with_evaluation(a in poly_strategy(), q in graph_like(), x in 0u32..5) {
            // a(q(x) - 1) evaluated pointwise
            let x = BigUint::from(x);
            let inner = q.eval(&x) - BigUint::one();
            prop_assert_eq!(a.compose_shifted(&q).unwrap().eval(&x), a.eval(&inner));
        }
    }
}
