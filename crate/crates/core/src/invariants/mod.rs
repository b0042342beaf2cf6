//! Betti- and Hodge-level invariants.
//!
//! For a Poincare polynomial `P(t) = sum b_j t^j` of a `d`-manifold:
//!
//! ```text
//! e   = P(-1)
//! Phi = 6 P''(-1) + d(5 - 3d)/2 P(-1)
//! phi = 4 P''(-1) / P(-1) - d^2
//! ```
//!
//! `Phi` vanishes on hyper-Kahler manifolds (`d = 4m`); `phi` is the
//! normalised version, with `Phi = (3 phi + 5d) e / 2`.

mod hodge;
mod holonomy;

use serde::{Deserialize, Serialize};

pub use hodge::{hodge_to_chi, hodge_to_poincare, mirror, mirror_sum_check, phi_lemma_check, phi_lemma_sides, HodgeDiamond};
pub use holonomy::{g2_quantity, hk_report, qk_constraint, spin7_report, QkBetti};

use crate::error::{Error, Result};
use crate::exact::{Rational, UniPoly};

/// Betti numbers `b_0..b_d` of a real `d`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincarePoly {
    pub d: usize,
    pub betti: Vec<i64>,
    /// Assert `b_0 >= 1`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub connected: bool,
    /// Assert Poincare duality `b_j = b_{d-j}`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub closed_oriented: bool,
}

impl PoincarePoly {
    /// Unflagged Betti list; `d` is `betti.len() - 1`.
    pub fn new(betti: Vec<i64>) -> Result<Self> {
        if betti.is_empty() {
            return Err(Error::InvalidDimension("empty Betti list".into()));
        }
        let p = PoincarePoly {
            d: betti.len() - 1,
            betti,
            connected: false,
            closed_oriented: false,
        };
        p.validate()?;
        Ok(p)
    }

    /// Betti list of a closed, oriented, connected manifold; all three
    /// conditions are checked.
    pub fn manifold(betti: Vec<i64>) -> Result<Self> {
        let mut p = Self::new(betti)?;
        p.connected = true;
        p.closed_oriented = true;
        p.validate()?;
        Ok(p)
    }

    pub fn from_ints(betti: &[i64]) -> Result<Self> {
        Self::new(betti.to_vec())
    }

    /// Checks shape, non-negativity and whichever flags are set.
    pub fn validate(&self) -> Result<()> {
        if self.betti.len() != self.d + 1 {
            return Err(Error::InvalidDimension(format!(
                "d = {} needs {} Betti numbers, got {}",
                self.d,
                self.d + 1,
                self.betti.len()
            )));
        }
        if let Some((j, &b)) = self.betti.iter().enumerate().find(|(_, &b)| b < 0) {
            return Err(Error::Negative {
                location: format!("b{j}"),
                value: b,
            });
        }
        if self.connected && self.betti[0] < 1 {
            return Err(Error::Input("connected space needs b0 >= 1".into()));
        }
        if self.closed_oriented {
            self.check_duality()?;
        }
        Ok(())
    }

    pub fn check_duality(&self) -> Result<()> {
        for j in 0..=self.d / 2 {
            let (a, b) = (self.betti[j], self.betti[self.d - j]);
            if a != b {
                return Err(Error::DualityViolated {
                    j,
                    dual: self.d - j,
                    left: a,
                    right: b,
                });
            }
        }
        Ok(())
    }

    pub fn has_duality(&self) -> bool {
        self.check_duality().is_ok()
    }

    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::from_ints(&self.betti)
    }

    /// `P^{(k)}(-1) = sum_j j(j-1)..(j-k+1) b_j (-1)^{j-k}`.
    pub fn derivative_at_minus_one(&self, k: usize) -> Rational {
        let mut acc = Rational::zero();
        for (j, &b) in self.betti.iter().enumerate().skip(k) {
            let falling: i64 = (0..k as i64).map(|i| j as i64 - i).product();
            let sign = if (j - k).is_multiple_of(2) { 1 } else { -1 };
            acc += Rational::from(sign * falling) * Rational::from(b);
        }
        acc
    }

    pub fn euler(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(j, &b)| if j % 2 == 0 { b } else { -b })
            .sum()
    }

    /// `P(1)`, the total Betti number.
    pub fn total(&self) -> i64 {
        self.betti.iter().sum()
    }

    pub fn b(&self, j: usize) -> i64 {
        self.betti.get(j).copied().unwrap_or(0)
    }

    /// Whether the `Phi = 0` theorem can apply, i.e. `d = 4m`.
    pub fn quaternionic_dimension(&self) -> Option<usize> {
        self.d.is_multiple_of(4).then_some(self.d / 4)
    }
}

/// `chi^0..chi^n` with `chi(t) = sum chi^p t^p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiPoly {
    pub n: usize,
    pub coeffs: Vec<i64>,
}

impl ChiPoly {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidDimension("empty chi list".into()));
        }
        Ok(ChiPoly {
            n: coeffs.len() - 1,
            coeffs,
        })
    }

    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::from_ints(&self.coeffs)
    }

    pub fn eval(&self, t: i64) -> Rational {
        self.to_unipoly().eval(&Rational::from(t))
    }

    /// `chi^{(k)}(-1)`.
    pub fn derivative_at_minus_one(&self, k: usize) -> Rational {
        self.to_unipoly().derivative_at(k, &Rational::from(-1))
    }

    /// Serre duality `chi^{n-p} = (-1)^n chi^p`.
    pub fn satisfies_serre(&self) -> bool {
        let sign = if self.n.is_multiple_of(2) { 1 } else { -1 };
        (0..=self.n).all(|p| self.coeffs[self.n - p] == sign * self.coeffs[p])
    }

    /// `chi(-1 + t)` as a polynomial in `t`.
    pub fn shifted_to_minus_one(&self) -> UniPoly {
        self.to_unipoly().shift(&Rational::from(-1))
    }
}

/// `Phi = 6 P''(-1) + d(5 - 3d)/2 P(-1)`. Requires even `d`; see
/// [`PoincarePoly::quaternionic_dimension`] for when it is expected to vanish.
pub fn phi_cap(p: &PoincarePoly) -> Result<Rational> {
    if !p.d.is_multiple_of(2) {
        return Err(Error::InvalidDimension(format!("Phi needs even d, got {}", p.d)));
    }
    let d = p.d as i64;
    Ok(Rational::from(6) * p.derivative_at_minus_one(2) + Rational::frac(d * (5 - 3 * d), 2) * Rational::from(p.euler()))
}

/// `(m e, 6 sum_{j<2m} (-1)^j (2m - j)^2 b_j)` for `d = 4m`; the two agree
/// exactly when `Phi = 0`.
pub fn fo_form(p: &PoincarePoly) -> Result<(i128, i128)> {
    let m = p
        .quaternionic_dimension()
        .ok_or_else(|| Error::InvalidDimension(format!("needs d divisible by 4, got {}", p.d)))?;
    p.check_duality()?;
    let lhs = m as i128 * p.euler() as i128;
    let mut rhs = 0i128;
    for j in 0..2 * m {
        let w = (2 * m - j) as i128;
        let term = w * w * p.betti[j] as i128;
        rhs += if j % 2 == 0 { term } else { -term };
    }
    Ok((lhs, 6 * rhs))
}

/// `phi = 4 P''(-1) / P(-1) - d^2`.
pub fn phi_small(p: &PoincarePoly) -> Result<Rational> {
    let e = p.euler();
    if e == 0 {
        return Err(Error::EulerZero("phi undefined"));
    }
    let d = p.d as i64;
    Ok(Rational::from(4) * p.derivative_at_minus_one(2) * Rational::frac(1, e) - Rational::from(d * d))
}

/// Coefficient 0 is `e` itself; coefficients `1..=order` are those of
/// `log(P(-1 + t) / e)`, namely `-d/2`, `phi/8`, `(3 phi + 2d)/24`, ... when
/// duality holds.
pub fn log_expansion(p: &PoincarePoly, order: usize) -> Result<UniPoly> {
    let e = p.euler();
    if e == 0 {
        return Err(Error::EulerZero("log P(-1 + t) undefined"));
    }
    let shifted = p.to_unipoly().shift(&Rational::from(-1)).scale(&Rational::frac(1, e));
    let log = shifted.series_log(order)?;
    let mut coeffs: Vec<Rational> = (0..=order).map(|k| log.coeff(k)).collect();
    coeffs[0] = Rational::from(e);
    Ok(UniPoly::new(coeffs))
}
