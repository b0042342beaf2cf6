//! Dense univariate polynomials and truncated power series over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `t^k`.
///
/// The coefficient list never ends in a zero, so the zero polynomial is the
/// empty list and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl From<Vec<Rational>> for UniPoly {
    fn from(coeffs: Vec<Rational>) -> Self {
        UniPoly::new(coeffs)
    }
}

impl From<UniPoly> for Vec<Rational> {
    fn from(p: UniPoly) -> Self {
        p.coeffs
    }
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^deg`
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Drops every term of degree above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Product with all terms above `order` discarded.
    pub fn mul_trunc(&self, other: &UniPoly, order: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(order + 1);
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from(k))
                .collect(),
        )
    }

    /// Value of the `k`-th derivative at `x`.
    pub fn derivative_at(&self, k: usize, x: &Rational) -> Rational {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.derivative();
        }
        p.eval(x)
    }

    /// The polynomial `t -> p(a + t)`.
    pub fn shift(&self, a: &Rational) -> Self {
        let base = UniPoly::new(vec![a.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &base) + &Self::constant(c.clone()))
    }

    /// Power series `q` with `p * q = 1 mod t^(order+1)`.
    pub fn series_invert(&self, order: usize) -> Result<Self> {
        let p0 = self.coeff(0);
        if p0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = p0.recip()?;
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        q.push(inv0.clone());
        for k in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                acc += &self.coeffs[j] * &q[k - j];
            }
            q.push(-(acc * &inv0));
        }
        Ok(Self::new(q))
    }

    /// Formal logarithm of `p / p(0)` up to `t^order`, computed as the
    /// integral of `p'/p`. The constant term of the result is zero.
    pub fn series_log(&self, order: usize) -> Result<Self> {
        let inv = self.series_invert(order)?;
        let ratio = self.derivative().mul_trunc(&inv, order.saturating_sub(1));
        let mut out = vec![Rational::zero(); order + 1];
        for (k, c) in ratio.coeffs.iter().enumerate() {
            if k < order {
                out[k + 1] = c.div_int(k as i64 + 1)?;
            }
        }
        Ok(Self::new(out))
    }

    /// Euclidean division; fails on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].recip()?;
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if sd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; fails when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NonZeroRemainder);
        }
        Ok(q)
    }

    /// Multiplicity of `a` as a root. The zero polynomial reports `None`.
    pub fn root_multiplicity(&self, a: &Rational) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let factor = UniPoly::new(vec![-a.clone(), Rational::one()]);
        let mut p = self.clone();
        let mut mult = 0;
        loop {
            match p.div_rem(&factor) {
                Ok((q, r)) if r.is_zero() => {
                    p = q;
                    mult += 1;
                }
                _ => return Some(mult),
            }
        }
    }

    /// Renders with the given variable name, e.g. `1 + 22*t^2 + t^4`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let mag_str = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if k == 0 {
                out.push_str(&mag_str);
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag_str}*{power}"));
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let order = (self.coeffs.len() + rhs.coeffs.len()).saturating_sub(2);
        self.mul_trunc(rhs, order)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    /// Term-by-term solution of the triangular system `p * q = 1`.
    fn triangular_inverse(p: &[Rational], order: usize) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::new();
        for k in 0..=order {
            // p0*q_k + sum_{j>=1} p_j q_{k-j} = [k == 0]
            let rhs = if k == 0 { Rational::one() } else { Rational::zero() };
            let mut s = Rational::zero();
            for j in 1..=k {
                if j < p.len() {
                    s += &p[j] * &out[k - j];
                }
            }
            out.push((rhs - s).checked_div(&p[0]).unwrap());
        }
        out
    }

    #[test]
    fn invert_one_minus_exp_over_x() {
        // (1 - e^{-x})/x = sum_k (-1)^k x^k/(k+1)!
        let p: Vec<Rational> = [(1, 1), (-1, 2), (1, 6), (-1, 24), (1, 120)]
            .iter()
            .map(|&(n, d)| q(n, d))
            .collect();
        let oracle = triangular_inverse(&p, 4);
        assert_eq!(
            oracle,
            vec![q(1, 1), q(1, 2), q(1, 12), q(0, 1), q(-1, 720)]
        );
        let inv = UniPoly::new(p.clone()).series_invert(4).unwrap();
        assert_eq!(inv, UniPoly::new(oracle));
        let prod = UniPoly::new(p).mul_trunc(&inv, 4);
        assert_eq!(prod, UniPoly::one());
    }

    #[test]
    fn invert_trivial_cases() {
        assert_eq!(UniPoly::one().series_invert(5).unwrap(), UniPoly::one());
        assert_eq!(
            UniPoly::from_ints(&[1, 1]).series_invert(3).unwrap(),
            UniPoly::from_ints(&[1, -1, 1, -1])
        );
        assert_eq!(
            UniPoly::from_ints(&[0, 1]).series_invert(3),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn division() {
        let p = UniPoly::from_ints(&[1, 0, -1]);
        let (quot, rem) = p.div_rem(&UniPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(quot, UniPoly::from_ints(&[1, -1]));
        assert!(rem.is_zero());
        assert_eq!(
            UniPoly::from_ints(&[1, 0, 1]).div_exact(&UniPoly::from_ints(&[1, 1])),
            Err(Error::NonZeroRemainder)
        );
        assert_eq!(
            p.div_rem(&UniPoly::zero()).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn multiplicity_and_shift() {
        let p = UniPoly::from_ints(&[1, 1]).pow(4);
        assert_eq!(p.root_multiplicity(&Rational::from(-1)), Some(4));
        assert_eq!(p.shift(&Rational::from(-1)), UniPoly::monomial(q(1, 1), 4));
    }

    #[test]
    fn log_of_geometric_series() {
        // log(1/(1-t)) = t + t^2/2 + t^3/3
        let p = UniPoly::from_ints(&[1, -1]);
        let l = p.series_log(3).unwrap();
        assert_eq!(l, UniPoly::new(vec![q(0, 1), q(-1, 1), q(-1, 2), q(-1, 3)]));
    }

    #[test]
    fn display() {
        let p = UniPoly::new(vec![q(1, 1), q(0, 1), q(-22, 1), q(1, 2)]);
        assert_eq!(p.to_string(), "1 - 22*t^2 + (1/2)*t^3");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    fn small_series() -> impl Strategy<Value = UniPoly> {
        (
            (1i64..6).prop_flat_map(|c0| Just(if c0 % 2 == 0 { -c0 } else { c0 })),
            prop::collection::vec((-6i64..6, 1i64..5), 0..6),
        )
            .prop_map(|(c0, rest)| {
                let mut v = vec![Rational::from(c0)];
                v.extend(rest.into_iter().map(|(n, d)| Rational::frac(n, d)));
                UniPoly::new(v)
            })
    }

    proptest! {
        #[test]
        fn inverse_times_series_is_one(p in small_series(), order in 0usize..8) {
            let inv = p.series_invert(order).unwrap();
            prop_assert_eq!(p.mul_trunc(&inv, order), UniPoly::one());
        }

        #[test]
        fn div_rem_reconstructs(a in small_series(), b in small_series()) {
            let (quot, rem) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&quot * &b) + &rem, a);
            prop_assert!(rem.degree().unwrap_or(0) < b.degree().unwrap_or(0).max(1));
        }
    }
}
