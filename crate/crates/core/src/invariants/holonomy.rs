//! Betti-number constraints attached to special holonomy: hyper-Kahler
//! (`Phi = 0` and its congruences), G2 (`P'(-1)` on a 7-manifold), Spin(7),
//! and the primitive-Betti relation for quaternion-Kahler manifolds.

use serde::{Deserialize, Serialize};

use super::{fo_form, phi_cap, PoincarePoly};
use crate::charclass::pair;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::manifolds::ChernNumbers;
use crate::report::{Check, Report};
use crate::symmetric::ChernPoly;

/// Checks a `4m`-dimensional Betti list against everything a hyper-Kahler
/// metric forces: `Phi = 0`, odd Betti numbers divisible by 4,
/// `m e = 0 mod 24`, and `e` even unless `m = 0 mod 8`.
pub fn hk_report(p: &PoincarePoly) -> Result<Report> {
    let m = p
        .quaternionic_dimension()
        .ok_or_else(|| Error::InvalidDimension(format!("hyper-Kahler needs d = 4m, got {}", p.d)))?;
    let mut r = Report::new();
    let phi = phi_cap(p)?;
    r.push(Check::expect(phi.is_zero(), "Phi = 0", "hyper-Kahler 4m-manifolds have Phi = 0", format!("Phi = {phi}")));
    if p.has_duality() {
        let (lhs, rhs) = fo_form(p)?;
        r.push(Check::expect(
            lhs == rhs,
            "m e = 6 sum (-1)^j (2m-j)^2 b_j",
            "equivalent form of Phi = 0 under Poincare duality",
            format!("{lhs} vs {rhs}"),
        ));
    }
    let bad_odd: Vec<String> = p
        .betti
        .iter()
        .enumerate()
        .filter(|(j, b)| j % 2 == 1 && *b % 4 != 0)
        .map(|(j, b)| format!("b{j} = {b}"))
        .collect();
    r.push(Check::expect(
        bad_odd.is_empty(),
        "odd b_j = 0 mod 4",
        "odd Betti numbers of a hyper-Kahler manifold are divisible by 4",
        if bad_odd.is_empty() { "all odd Betti numbers divisible by 4".to_string() } else { bad_odd.join(", ") },
    ));
    let e = p.euler() as i128;
    let me = m as i128 * e;
    r.push(Check::expect(
        me % 24 == 0,
        "m e = 0 mod 24",
        "m e(M) = 0 mod 24",
        format!("m = {m}, e = {e}, m e = {me}"),
    ));
    if m % 8 != 0 {
        r.push(Check::expect(
            e % 2 == 0,
            "e even",
            "e(M) even when m is not 0 mod 8",
            format!("e = {e}"),
        ));
    } else {
        r.push(Check::pass(
            "e even",
            "e(M) even when m is not 0 mod 8",
            format!("m = {m} = 0 mod 8, parity unconstrained (e = {e})"),
        ));
    }
    Ok(r)
}

/// `P'(-1)` for a 7-manifold; with `b_0 = 1` and Poincare duality this is
/// `-b_3 + 3 b_2 - 5 b_1 + 7`, which vanishes on the known G2 examples.
pub fn g2_quantity(p: &PoincarePoly) -> Result<i64> {
    if p.d != 7 {
        return Err(Error::InvalidDimension(format!("G2 quantity needs d = 7, got {}", p.d)));
    }
    p.check_duality()?;
    if p.betti[0] != 1 {
        return Err(Error::Input(format!("G2 quantity needs b0 = 1, got {}", p.betti[0])));
    }
    let value = p.derivative_at_minus_one(1).to_i64().expect("integer Betti numbers");
    debug_assert_eq!(value, -p.b(3) + 3 * p.b(2) - 5 * p.b(1) + 7);
    Ok(value)
}

/// Spin(7) checks on an 8-manifold: `Phi = 0`; optionally `b_4^- = 3 b_2 + 7`;
/// optionally, for Chern data with `c_1 = 0`, `<4 p_2 - p_1^2> = 8 e` using
/// `p_1 = -2 c_2`, `p_2 = 2 c_4 + c_2^2`.
pub fn spin7_report(p: &PoincarePoly, b4_minus: Option<i64>, chern: Option<&ChernNumbers>) -> Result<Report> {
    if p.d != 8 {
        return Err(Error::InvalidDimension(format!("Spin(7) needs d = 8, got {}", p.d)));
    }
    let mut r = Report::new();
    let phi = phi_cap(p)?;
    r.push(Check::expect(
        phi.is_zero(),
        "Phi = 0",
        "Phi/4 = 46 - 25b_1 + 10b_2 - b_3 - b_4",
        format!("Phi = {phi}"),
    ));
    if let Some(b4m) = b4_minus {
        let expected = 3 * p.b(2) + 7;
        r.push(Check::expect(
            b4m == expected,
            "b4- = 3 b2 + 7",
            "anti-self-dual harmonic 4-forms on a Spin(7) manifold",
            format!("b4- = {b4m}, 3 b2 + 7 = {expected}"),
        ));
    }
    if let Some(data) = chern {
        if data.dim() != 4 {
            return Err(Error::InvalidDimension(format!("Chern data has n = {}, expected 4", data.dim())));
        }
        if !data.c1_zero() {
            return Err(Error::Input("Pontryagin relation needs Chern data flagged c1_zero".into()));
        }
        let n = 4;
        let p1 = ChernPoly::c(n, 2).scale(&Rational::from(-2));
        let p2 = ChernPoly::c(n, 4).scale(&Rational::from(2)).add(&ChernPoly::c(n, 2).pow(2));
        let class = p2.scale(&Rational::from(4)).sub(&p1.pow(2));
        let value = pair(&class, data)?;
        let expected = Rational::from(8 * p.euler());
        r.push(Check::expect(
            value == expected,
            "<4p2 - p1^2> = 8e",
            "p_1 = -2c_2, p_2 = 2c_4 + c_2^2 when c_1 = 0",
            format!("<4p2 - p1^2> = {value}, 8e = {expected}"),
        ));
    }
    Ok(r)
}

/// Primitive Betti numbers `beta_{2k} = b_{2k} - b_{2k-4}`, `k = 1..m`, of a
/// quaternion-Kahler `4m`-manifold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QkBetti {
    pub m: usize,
    /// `beta[k-1] = beta_{2k}`.
    pub beta: Vec<i64>,
}

impl QkBetti {
    pub fn new(m: usize, beta: Vec<i64>) -> Result<Self> {
        let q = QkBetti { m, beta };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        if self.beta.len() != self.m {
            return Err(Error::InvalidDimension(format!(
                "m = {} needs {} primitive Betti numbers, got {}",
                self.m,
                self.m,
                self.beta.len()
            )));
        }
        if let Some((i, &b)) = self.beta.iter().enumerate().find(|(_, &b)| b < 0) {
            return Err(Error::Negative {
                location: format!("beta{}", 2 * (i + 1)),
                value: b,
            });
        }
        Ok(())
    }

    pub fn from_poincare(p: &PoincarePoly) -> Result<Self> {
        let m = p
            .quaternionic_dimension()
            .ok_or_else(|| Error::InvalidDimension(format!("needs d = 4m, got {}", p.d)))?;
        let beta = (1..=m)
            .map(|k| p.b(2 * k) - if 2 * k >= 4 { p.b(2 * k - 4) } else { 0 })
            .collect();
        Self::new(m, beta)
    }
}

/// `sum_{k=1..m} k (m+1-k) (m+1-2k) beta_{2k}`; zero when the relation holds.
pub fn qk_constraint(b: &QkBetti) -> Rational {
    let m = b.m as i64;
    let total: i64 = b
        .beta
        .iter()
        .enumerate()
        .map(|(i, &beta)| {
            let k = i as i64 + 1;
            k * (m + 1 - k) * (m + 1 - 2 * k) * beta
        })
        .sum();
    Rational::from(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn pp(b: &[i64]) -> PoincarePoly {
        PoincarePoly::manifold(b.to_vec()).unwrap()
    }

    #[test]
    fn hk_examples() {
        let k2 = pp(&[1, 0, 7, 8, 108, 8, 7, 0, 1]);
        let r = hk_report(&k2).unwrap();
        assert!(r.ok(), "{}", r.to_table());
        let fake = pp(&[1, 0, 1, 0, 1, 0, 1, 0, 1]);
        let r = hk_report(&fake).unwrap();
        assert_eq!(r.checks[0].status, Status::Fail);
        assert!(hk_report(&pp(&[1, 0, 1, 0, 1, 0, 1])).is_err());
    }

    #[test]
    fn g2_examples() {
        let joyce = pp(&[1, 0, 12, 43, 43, 12, 0, 1]);
        assert_eq!(g2_quantity(&joyce).unwrap(), 0);
        let orbifold = pp(&[1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(g2_quantity(&orbifold).unwrap(), 0);
        for (b2, b3) in [(3, 16), (12, 43), (0, 7)] {
            let before = g2_quantity(&pp(&[1, 0, b2, b3, b3, b2, 0, 1])).unwrap();
            let after = g2_quantity(&pp(&[1, 0, b2 + 1, b3 + 3, b3 + 3, b2 + 1, 0, 1])).unwrap();
            assert_eq!(before, after);
        }
        assert!(g2_quantity(&PoincarePoly::from_ints(&[1, 0, 1, 2, 3, 1, 0, 1]).unwrap()).is_err());
    }

    #[test]
    fn spin7_examples() {
        let joyce = pp(&[1, 0, 12, 16, 150, 16, 12, 0, 1]);
        let r = spin7_report(&joyce, Some(43), None).unwrap();
        assert!(r.ok());
        assert_eq!(r.checks.len(), 2);
        let r = spin7_report(&joyce, Some(42), None).unwrap();
        assert!(!r.ok());
        // sextic fourfold: c1 = 0
        let sextic = crate::manifolds::complete_intersection_chern(5, &[6]).unwrap();
        let e = sextic.get_key("c4").unwrap();
        let fake_p = PoincarePoly::new(vec![1, 0, e - 2, 0, 1, 0, 0, 0, 0]).unwrap();
        assert_eq!(fake_p.euler(), e);
        let r = spin7_report(&fake_p, None, Some(&sextic)).unwrap();
        assert_eq!(r.checks[1].status, Status::Pass, "{}", r.to_table());
    }

    #[test]
    fn qk_examples() {
        let weights: Vec<i64> = (1..=7).map(|k| k * (8 - k) * (8 - 2 * k)).collect();
        assert_eq!(weights, vec![42, 48, 30, 0, -30, -48, -42]);
        let fixtures = [
            vec![0, 0, 0, 0, 0, 0, 0],
            vec![1, 1, 1, 1, 1, 1, 1],
            vec![0, 1, 0, 1, 0, 1, 0],
            vec![0, 0, 0, 1, 0, 0, 0],
        ];
        for beta in fixtures {
            assert!(qk_constraint(&QkBetti::new(7, beta).unwrap()).is_zero());
        }
        assert_eq!(qk_constraint(&QkBetti::new(7, vec![1, 0, 0, 0, 0, 0, 0]).unwrap()), Rational::from(42));
        assert!(QkBetti::new(7, vec![1]).is_err());
        // HP^2: b = 1,0,0,0,1,0,0,0,1 -> beta_2 = 0, beta_4 = 0
        let hp2 = pp(&[1, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(QkBetti::from_poincare(&hp2).unwrap().beta, vec![0, 0]);
    }
}
