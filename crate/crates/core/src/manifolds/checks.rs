//! Numerical consequences of the Chern-class identities, evaluated on
//! concrete Chern numbers.

use super::{chi_from_chern, ChernNumbers};
use crate::charclass::pair;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::invariants::{hodge_to_chi, HodgeDiamond};
use crate::report::{Check, Report};
use crate::symmetric::{power_sums, ChernPoly};

fn cj(n: usize, j: i64) -> ChernPoly {
    match j {
        0 => ChernPoly::one(n),
        j if j < 0 || j > n as i64 => ChernPoly::zero(n),
        j => ChernPoly::c(n, j as usize),
    }
}

fn integer(r: &Rational) -> Result<i128> {
    if !r.is_integer() {
        return Err(Error::Input(format!("expected an integer pairing, got {r}")));
    }
    r.to_i128().ok_or_else(|| Error::Overflow(r.to_string()))
}

/// The partial sums `S_k = sum_{j<k} (-1)^j s_j c_{n-j}` (`s_0 = n`) of
/// Newton's identity `sum_j (-1)^j s_j c_{n-j} = 0`, for `k = 1..=n`.
pub fn newton_partial_sums(n: usize) -> Vec<ChernPoly> {
    let s = power_sums(n, n);
    let mut acc = ChernPoly::c(n, n).scale(&Rational::from(n));
    let mut out = vec![acc.clone()];
    for j in 1..n {
        let term = s[j - 1].mul(&cj(n, (n - j) as i64));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        out.push(acc.clone());
    }
    out
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Congruences on Chern numbers. With `c_1 = 0`: `n e = 0 mod 3`; `e` even
/// for `n = 2 mod 4`; `2n c_n + c_2 c_{n-2} - c_3 c_{n-3} = 0 mod 5` for
/// `n >= 3`. Always: `S_k = 0 mod k+1` for each prime `k+1 >= 3`, `k <= n`.
pub fn divisibility_suite(data: &ChernNumbers) -> Result<Report> {
    let n = data.dim();
    let mut r = Report::new();
    let e = data.euler()? as i128;
    if data.c1_zero() {
        let ne = n as i128 * e;
        r.push(Check::expect(
            ne % 3 == 0,
            "n e = 0 mod 3",
            "c_1 = 0 implies n e(M) = 0 mod 3",
            format!("n = {n}, e = {e}"),
        ));
        if n % 4 == 2 {
            r.push(Check::expect(
                e % 2 == 0,
                "e even",
                "c_1 = 0 and n = 2 mod 4 imply e(M) even",
                format!("e = {e}"),
            ));
        }
        if n >= 3 {
            let m = n as i64;
            let class = cj(n, m)
                .scale(&Rational::from(2 * m))
                .add(&cj(n, 2).mul(&cj(n, m - 2)))
                .sub(&cj(n, 3).mul(&cj(n, m - 3)));
            let v = integer(&pair(&class, data)?)?;
            r.push(Check::expect(
                v % 5 == 0,
                "mod 5 combination",
                "c_1 = 0 implies <2n c_n + c_2c_{n-2} - c_3c_{n-3}> = 0 mod 5",
                format!("value = {v}"),
            ));
        }
    }
    for (idx, class) in newton_partial_sums(n).iter().enumerate() {
        let k = idx + 1;
        if k + 1 < 3 || !is_prime(k + 1) {
            continue;
        }
        let v = integer(&pair(class, data)?)?;
        r.push(Check::expect(
            v % (k as i128 + 1) == 0,
            format!("Newton partial sum k={k}"),
            "n c_n - s_1 c_{n-1} + ... +- s_{k-1} c_{n-k+1} = 0 mod k+1 for prime k+1",
            format!("value = {v}, modulus {}", k + 1),
        ));
    }
    Ok(r)
}

/// Both sides of the `c_1 c_{n-1}` identity and, for `c_1 = 0` and `n >= 4`,
/// the `c_2 c_{n-2} - c_3 c_{n-3}` identity, with chi from Riemann-Roch. If a
/// Hodge diamond is given, its chi_y genus must agree.
pub fn theorem_checks(data: &ChernNumbers, hodge: Option<&HodgeDiamond>) -> Result<Report> {
    let n = data.dim();
    let m = n as i64;
    let chi = chi_from_chern(data)?;
    let mut r = Report::new();
    r.push(Check::expect(
        chi.satisfies_serre(),
        "Serre duality for chi",
        "chi^{n-p} = (-1)^n chi^p",
        format!("chi = {:?}", chi.coeffs),
    ));
    let lhs = pair(&cj(n, 1).mul(&cj(n, m - 1)), data)?;
    let rhs = Rational::from(6) * chi.derivative_at_minus_one(2)
        + Rational::frac(m * (5 - 3 * m), 2) * chi.derivative_at_minus_one(0);
    r.push(Check::expect(
        lhs == rhs,
        "c1*c(n-1) identity",
        "<c_1c_{n-1}> = 6 chi''(-1) + n(5-3n)/2 chi(-1)",
        format!("{lhs} = {rhs}"),
    ));
    if data.c1_zero() && n >= 4 {
        let lhs = pair(&cj(n, 2).mul(&cj(n, m - 2)).sub(&cj(n, 3).mul(&cj(n, m - 3))), data)?;
        let rhs = Rational::from(10) * chi.derivative_at_minus_one(4)
            - Rational::frac(m * (15 * m * m * m - 150 * m * m + 485 * m - 502), 24) * chi.derivative_at_minus_one(0);
        r.push(Check::expect(
            lhs == rhs,
            "c2*c(n-2) - c3*c(n-3) identity",
            "c_1 = 0: <c_2c_{n-2} - c_3c_{n-3}> = 10 chi''''(-1) - n(15n^3-150n^2+485n-502)/24 chi(-1)",
            format!("{lhs} = {rhs}"),
        ));
    }
    if let Some(h) = hodge {
        if h.n != n {
            return Err(Error::ArityMismatch { left: h.n, right: n });
        }
        let from_hodge = hodge_to_chi(h);
        r.push(Check::expect(
            from_hodge == chi,
            "chi from Hodge numbers",
            "chi^p = sum_q (-1)^q h^{p,q} agrees with Riemann-Roch",
            format!("Hodge {:?}, Riemann-Roch {:?}", from_hodge.coeffs, chi.coeffs),
        ));
    }
    Ok(r)
}
