//! Hodge diamonds, the mirror map `h^{p,q} <-> h^{n-p,q}`, and the identity
//! relating `Phi` of `P(t) = H(t,t)` to the chi_y genus `chi(y) = H(y,-1)`:
//!
//! ```text
//! Phi(H(t,t)) = 2 [6 chi''(-1) + n(5-3n)/2 chi(-1)]
//!             + 6 sum_{p,q} (-1)^{p+q} p q (h^{p,q} - (-1)^n h^{n-p,q})
//! ```
//!
//! For even `n` the sign is `+1` and the sum is the familiar
//! `sum (-1)^{p+q} p q (h^{p,q} - h^{n-p,q})`. For odd `n` reindexing
//! `p -> n - p` picks up `(-1)^n`, so without the sign the identity fails
//! (the quintic threefold is a counterexample).

use serde::{Deserialize, Serialize};

use super::{phi_cap, ChiPoly, PoincarePoly};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::report::Check;

/// `h[p][q] = h^{p,q}` for `0 <= p, q <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeDiamond {
    pub n: usize,
    pub h: Vec<Vec<i64>>,
}

impl HodgeDiamond {
    pub fn new(h: Vec<Vec<i64>>) -> Result<Self> {
        if h.is_empty() {
            return Err(Error::InvalidDimension("empty Hodge diamond".into()));
        }
        let d = HodgeDiamond { n: h.len() - 1, h };
        d.validate()?;
        Ok(d)
    }

    /// Checks the grid is `(n+1) x (n+1)` with non-negative entries.
    pub fn validate(&self) -> Result<()> {
        if self.h.len() != self.n + 1 {
            return Err(Error::InvalidDimension(format!(
                "n = {} needs {} rows, got {}",
                self.n,
                self.n + 1,
                self.h.len()
            )));
        }
        for (p, row) in self.h.iter().enumerate() {
            if row.len() != self.n + 1 {
                return Err(Error::InvalidDimension(format!(
                    "row h^{{{p},*}} has {} entries, expected {}",
                    row.len(),
                    self.n + 1
                )));
            }
            if let Some((q, &v)) = row.iter().enumerate().find(|(_, &v)| v < 0) {
                return Err(Error::Negative {
                    location: format!("h^{{{p},{q}}}"),
                    value: v,
                });
            }
        }
        Ok(())
    }

    pub fn get(&self, p: usize, q: usize) -> i64 {
        self.h[p][q]
    }

    fn first_violation(&self, kind: &'static str, image: impl Fn(usize, usize) -> (usize, usize)) -> Result<()> {
        for p in 0..=self.n {
            for q in 0..=self.n {
                let (a, b) = image(p, q);
                if self.h[p][q] != self.h[a][b] {
                    return Err(Error::HodgeSymmetry { kind, p, q });
                }
            }
        }
        Ok(())
    }

    /// `h^{p,q} = h^{q,p}`.
    pub fn check_conjugation(&self) -> Result<()> {
        self.first_violation("conjugation", |p, q| (q, p))
    }

    /// `h^{p,q} = h^{n-p,n-q}`.
    pub fn check_serre(&self) -> Result<()> {
        let n = self.n;
        self.first_violation("Serre", |p, q| (n - p, n - q))
    }

    /// `h^{p,q} = h^{n-p,q}`.
    pub fn check_mirror(&self) -> Result<()> {
        let n = self.n;
        self.first_violation("mirror", |p, q| (n - p, q))
    }

    /// Conjugation symmetry and Serre duality together.
    pub fn check_kahler(&self) -> Result<()> {
        self.check_conjugation()?;
        self.check_serre()
    }

    pub fn euler(&self) -> i64 {
        let mut e = 0;
        for p in 0..=self.n {
            for q in 0..=self.n {
                e += if (p + q) % 2 == 0 { self.h[p][q] } else { -self.h[p][q] };
            }
        }
        e
    }
}

/// `b_k = sum_{p+q=k} h^{p,q}`.
pub fn hodge_to_poincare(h: &HodgeDiamond) -> PoincarePoly {
    let mut betti = vec![0i64; 2 * h.n + 1];
    for p in 0..=h.n {
        for q in 0..=h.n {
            betti[p + q] += h.h[p][q];
        }
    }
    PoincarePoly {
        d: 2 * h.n,
        betti,
        connected: false,
        closed_oriented: false,
    }
}

/// `chi^p = sum_q (-1)^q h^{p,q}`.
pub fn hodge_to_chi(h: &HodgeDiamond) -> ChiPoly {
    let coeffs = h
        .h
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(q, &v)| if q % 2 == 0 { v } else { -v })
                .sum()
        })
        .collect();
    ChiPoly { n: h.n, coeffs }
}

/// `h'^{p,q} = h^{n-p,q}`.
pub fn mirror(h: &HodgeDiamond) -> HodgeDiamond {
    HodgeDiamond {
        n: h.n,
        h: (0..=h.n).map(|p| h.h[h.n - p].clone()).collect(),
    }
}

/// `2[6 chi''(-1) + n(5-3n)/2 chi(-1)]`.
fn chi_part(chi: &ChiPoly) -> Rational {
    let n = chi.n as i64;
    Rational::from(2)
        * (Rational::from(6) * chi.derivative_at_minus_one(2)
            + Rational::frac(n * (5 - 3 * n), 2) * chi.derivative_at_minus_one(0))
}

/// `(Phi(H(t,t)), chi part, correction sum)`, with `Phi = chi part + correction`
/// for every diamond.
pub fn phi_lemma_sides(h: &HodgeDiamond) -> Result<(Rational, Rational, Rational)> {
    let phi = phi_cap(&hodge_to_poincare(h))?;
    let chi = chi_part(&hodge_to_chi(h));
    let sign = if h.n.is_multiple_of(2) { 1 } else { -1 };
    let mut correction = 0i64;
    for p in 0..=h.n {
        for q in 0..=h.n {
            let term = (p * q) as i64 * (h.h[p][q] - sign * h.h[h.n - p][q]);
            correction += if (p + q) % 2 == 0 { term } else { -term };
        }
    }
    Ok((phi, chi, Rational::from(6 * correction)))
}

/// Checks `Phi(H(t,t)) = 2[6 chi''(-1) + n(5-3n)/2 chi(-1)] + 6 sum (-1)^{p+q} p q (h^{p,q} - (-1)^n h^{n-p,q})`.
/// The diamond must satisfy conjugation symmetry and Serre duality.
pub fn phi_lemma_check(h: &HodgeDiamond) -> Result<Check> {
    h.validate()?;
    h.check_kahler()?;
    let (phi, chi, correction) = phi_lemma_sides(h)?;
    let rhs = &chi + &correction;
    Ok(Check::expect(
        phi == rhs,
        format!("Phi from Hodge numbers n={}", h.n),
        "Phi(H(t,t)) = 2[6chi''(-1) + n(5-3n)chi(-1)/2] + 6 sum (-1)^{p+q} pq (h^{p,q} - (-1)^n h^{n-p,q})",
        format!("Phi = {phi}, chi part = {chi}, correction = {correction}"),
    ))
}

/// For even `n`: `Phi(H) + Phi(mirror H) = 4[6 chi''(-1) + n(5-3n)/2 chi(-1)]`.
pub fn mirror_sum_check(h: &HodgeDiamond) -> Result<Check> {
    h.validate()?;
    if !h.n.is_multiple_of(2) {
        return Err(Error::InvalidDimension(format!("mirror sum needs even n, got {}", h.n)));
    }
    let lhs = phi_cap(&hodge_to_poincare(h))? + phi_cap(&hodge_to_poincare(&mirror(h)))?;
    let rhs = Rational::from(2) * chi_part(&hodge_to_chi(h));
    Ok(Check::expect(
        lhs == rhs,
        format!("mirror sum n={}", h.n),
        "Phi(H) + Phi(mirror H) = 4[6chi''(-1) + n(5-3n)chi(-1)/2]",
        format!("lhs = {lhs}, rhs = {rhs}"),
    ))
}
