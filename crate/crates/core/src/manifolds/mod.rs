//! Chern numbers of concrete manifolds, Riemann-Roch evaluation of the
//! chi_y genus from them, and the congruences they must satisfy.

mod checks;

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use checks::{divisibility_suite, newton_partial_sums, theorem_checks};

use crate::charclass::{chi_classes, pair};
use crate::combinat::multiplicity_vectors;
use crate::error::{Error, Result};
use crate::exact::{binomial, Rational, UniPoly};
use crate::invariants::ChiPoly;
use crate::symmetric::{check_dim, ChernMonomial};

/// Pairings `<c_lambda, [M]>` of the weight-`n` Chern monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernNumbers {
    n: usize,
    c1_zero: bool,
    pairings: BTreeMap<ChernMonomial, i64>,
}

impl ChernNumbers {
    /// From canonical monomial keys (`c1^2*c3`). Keys must parse strictly and
    /// have weight exactly `n`; with `c1_zero`, every pairing involving `c_1`
    /// must vanish.
    pub fn new<'a>(n: usize, c1_zero: bool, pairings: impl IntoIterator<Item = (&'a str, i64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (key, value) in pairings {
            let m = ChernMonomial::parse(key, n)?;
            if map.insert(m, value).is_some() {
                return Err(Error::Input(format!("duplicate pairing for `{key}`")));
            }
        }
        Self::from_map(n, c1_zero, map)
    }

    pub fn from_map(n: usize, c1_zero: bool, pairings: BTreeMap<ChernMonomial, i64>) -> Result<Self> {
        check_dim(n)?;
        for (m, &v) in &pairings {
            if m.dim() != n {
                return Err(Error::ArityMismatch { left: m.dim(), right: n });
            }
            if m.weight() != n as u32 {
                return Err(Error::WeightMismatch {
                    key: m.key(),
                    weight: m.weight(),
                    expected: n as u32,
                });
            }
            if c1_zero && m.exp(1) > 0 && v != 0 {
                return Err(Error::Input(format!(
                    "data flagged c1_zero but <{}> = {v}",
                    m.key()
                )));
            }
        }
        Ok(ChernNumbers { n, c1_zero, pairings })
    }

    /// Builds all weight-`n` pairings from a function of the monomial.
    pub fn from_fn(n: usize, c1_zero: bool, mut f: impl FnMut(&ChernMonomial) -> Result<i64>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for exps in multiplicity_vectors(n as u32, n) {
            let m = ChernMonomial::new(&exps);
            let v = f(&m)?;
            map.insert(m, v);
        }
        Self::from_map(n, c1_zero, map)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn c1_zero(&self) -> bool {
        self.c1_zero
    }

    pub fn get(&self, m: &ChernMonomial) -> Option<i64> {
        self.pairings.get(m).copied()
    }

    pub fn get_key(&self, key: &str) -> Option<i64> {
        ChernMonomial::parse(key, self.n).ok().and_then(|m| self.get(&m))
    }

    pub fn pairings(&self) -> impl Iterator<Item = (&ChernMonomial, i64)> {
        self.pairings.iter().map(|(m, &v)| (m, v))
    }

    /// Whether every weight-`n` monomial has a pairing.
    pub fn is_complete(&self) -> bool {
        self.pairings.len() == multiplicity_vectors(self.n as u32, self.n).len()
    }

    /// `<c_n>`, the Euler characteristic.
    pub fn euler(&self) -> Result<i64> {
        let m = ChernMonomial::generator(self.n, self.n);
        self.get(&m).ok_or_else(|| Error::MissingPairing(m.key()))
    }
}

#[derive(Serialize, Deserialize)]
struct ChernNumbersRepr {
    n: usize,
    #[serde(default)]
    c1_zero: bool,
    pairings: BTreeMap<String, i64>,
}

impl Serialize for ChernNumbers {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ChernNumbersRepr {
            n: self.n,
            c1_zero: self.c1_zero,
            pairings: self.pairings.iter().map(|(m, &v)| (m.key(), v)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChernNumbers {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ChernNumbersRepr::deserialize(d)?;
        ChernNumbers::new(repr.n, repr.c1_zero, repr.pairings.iter().map(|(k, &v)| (k.as_str(), v)))
            .map_err(serde::de::Error::custom)
    }
}

fn to_i64(r: &Rational, what: &str) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::Input(format!("{what} = {r} is not an integer")));
    }
    r.to_i64().ok_or_else(|| Error::Overflow(what.to_string()))
}

/// Pairings of a manifold whose total Chern class is `sum_k a_k h^k` with
/// `<h^n> = degree`: `<c_lambda> = degree * prod_i a_{lambda_i}`.
fn from_total_class(n: usize, total: &UniPoly, degree: i64) -> Result<ChernNumbers> {
    let c1_zero = total.coeff(1).is_zero();
    ChernNumbers::from_fn(n, c1_zero, |m| {
        let mut v = Rational::from(degree);
        for k in m.parts() {
            v *= total.coeff(k);
        }
        to_i64(&v, &m.key())
    })
}

/// `CP^n`: `c = (1 + h)^{n+1}`, `<h^n> = 1`.
pub fn cp_chern(n: usize) -> Result<ChernNumbers> {
    check_dim(n)?;
    let total = UniPoly::new((0..=n).map(|k| binomial(n as i64 + 1, k as i64)).collect());
    from_total_class(n, &total, 1)
}

/// Complete intersection of hypersurfaces of degrees `degrees` in
/// `CP^ambient`: `c = (1+h)^{ambient+1} / prod (1 + d_j h)`, `<h^n> = prod d_j`.
pub fn complete_intersection_chern(ambient: usize, degrees: &[i64]) -> Result<ChernNumbers> {
    if degrees.len() >= ambient {
        return Err(Error::InvalidDimension(format!(
            "{} hypersurfaces in CP^{ambient} leave no positive dimension",
            degrees.len()
        )));
    }
    if let Some(&d) = degrees.iter().find(|&&d| d < 1) {
        return Err(Error::Input(format!("hypersurface degree must be positive, got {d}")));
    }
    let n = ambient - degrees.len();
    check_dim(n)?;
    let numer = UniPoly::new((0..=n).map(|k| binomial(ambient as i64 + 1, k as i64)).collect());
    let denom = degrees
        .iter()
        .fold(UniPoly::one(), |acc, &d| &acc * &UniPoly::from_ints(&[1, d]));
    let total = numer.mul_trunc(&denom.series_invert(n)?, n);
    from_total_class(n, &total, degrees.iter().product())
}

/// Degree lists `(ambient, degrees)` of the complete intersections of
/// dimension `n` with `c_1 = 0`: degrees `>= 2`, non-increasing, summing to
/// `ambient + 1`.
pub fn c1_zero_complete_intersections(n: usize) -> Vec<(usize, Vec<i64>)> {
    let mut out = Vec::new();
    for r in 1..=n + 1 {
        let ambient = n + r;
        let mut cur = Vec::with_capacity(r);
        degree_lists((ambient + 1) as i64, r, (ambient + 1) as i64, &mut cur, &mut |d| {
            out.push((ambient, d.to_vec()))
        });
    }
    out
}

fn degree_lists(rem: i64, slots: usize, max: i64, cur: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    if slots == 0 {
        if rem == 0 {
            emit(cur);
        }
        return;
    }
    for d in (2..=rem.min(max)).rev() {
        if rem - d < 2 * (slots as i64 - 1) {
            continue;
        }
        cur.push(d);
        degree_lists(rem - d, slots - 1, d, cur, emit);
        cur.pop();
    }
}

/// Chern numbers of `A x B` from `c(A x B) = c(A) c(B)`.
pub fn product_chern(a: &ChernNumbers, b: &ChernNumbers) -> Result<ChernNumbers> {
    let (na, nb) = (a.dim(), b.dim());
    let n = na + nb;
    check_dim(n)?;
    ChernNumbers::from_fn(n, a.c1_zero() && b.c1_zero(), |m| {
        // expand prod over factors c_k of sum_{i+j=k} c_i(A) c_j(B) into
        // bigraded monomials, keeping only A-weight <= na, B-weight <= nb
        let mut terms: BTreeMap<(Vec<u16>, Vec<u16>), i64> = BTreeMap::new();
        terms.insert((vec![0; na], vec![0; nb]), 1);
        for k in m.parts() {
            let mut next = BTreeMap::new();
            for ((ea, eb), coef) in &terms {
                let wa: usize = ea.iter().enumerate().map(|(i, &e)| (i + 1) * e as usize).sum();
                let wb: usize = eb.iter().enumerate().map(|(i, &e)| (i + 1) * e as usize).sum();
                for i in 0..=k {
                    let j = k - i;
                    if wa + i > na || wb + j > nb {
                        continue;
                    }
                    let (mut ea2, mut eb2) = (ea.clone(), eb.clone());
                    if i > 0 {
                        ea2[i - 1] += 1;
                    }
                    if j > 0 {
                        eb2[j - 1] += 1;
                    }
                    *next.entry((ea2, eb2)).or_insert(0) += coef;
                }
            }
            terms = next;
        }
        let mut total: i128 = 0;
        for ((ea, eb), coef) in terms {
            let ma = ChernMonomial::new(&ea);
            let mb = ChernMonomial::new(&eb);
            if ma.weight() as usize != na || mb.weight() as usize != nb {
                continue;
            }
            let va = a.get(&ma).ok_or_else(|| Error::MissingPairing(ma.key()))?;
            let vb = b.get(&mb).ok_or_else(|| Error::MissingPairing(mb.key()))?;
            total += coef as i128 * va as i128 * vb as i128;
        }
        i64::try_from(total).map_err(|_| Error::Overflow(m.key()))
    })
}

/// `chi^p = <ch(Lambda^p T*) td(T), [M]>` for `p = 0..=n`; each must be an
/// integer.
pub fn chi_from_chern(data: &ChernNumbers) -> Result<ChiPoly> {
    let classes = chi_classes(data.dim())?;
    let mut coeffs = Vec::with_capacity(classes.len());
    for (p, class) in classes.iter().enumerate() {
        let v = pair(class, data)?;
        if !v.is_integer() {
            return Err(Error::NonIntegral { p, value: v.to_string() });
        }
        coeffs.push(v.to_i64().ok_or_else(|| Error::Overflow(format!("chi^{p}")))?);
    }
    ChiPoly::new(coeffs)
}

/// `gamma = <c_1 c_{n-1}> / <c_n>`; for `n = 1`, `c_0 = 1` gives `gamma = 1`.
pub fn gamma(data: &ChernNumbers) -> Result<Rational> {
    let n = data.dim();
    let e = data.euler()?;
    if e == 0 {
        return Err(Error::EulerZero("gamma"));
    }
    let m = ChernMonomial::from_parts(n, &[1, n - 1]);
    let num = data.get(&m).ok_or_else(|| Error::MissingPairing(m.key()))?;
    Ok(Rational::frac(num, e))
}

/// `psi = 4 chi''(-1) / chi(-1) - n^2`.
pub fn psi(chi: &ChiPoly) -> Result<Rational> {
    let e = chi.derivative_at_minus_one(0);
    if e.is_zero() {
        return Err(Error::EulerZero("psi"));
    }
    let n = chi.n as i64;
    Ok(Rational::from(4) * chi.derivative_at_minus_one(2) * e.recip()? - Rational::from(n * n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_spaces() {
        let cp1 = cp_chern(1).unwrap();
        assert_eq!(cp1.get_key("c1"), Some(2));
        let cp2 = cp_chern(2).unwrap();
        assert_eq!(cp2.get_key("c2"), Some(3));
        assert_eq!(cp2.get_key("c1^2"), Some(9));
        for n in 1..=8 {
            let cp = cp_chern(n).unwrap();
            assert_eq!(cp.euler().unwrap(), n as i64 + 1);
            assert!(cp.is_complete());
            assert!(!cp.c1_zero());
        }
    }

    #[test]
    fn complete_intersections() {
        let k3 = complete_intersection_chern(3, &[4]).unwrap();
        assert!(k3.c1_zero());
        assert_eq!(k3.get_key("c2"), Some(24));
        assert_eq!(k3.get_key("c1^2"), Some(0));
        let quintic = complete_intersection_chern(4, &[5]).unwrap();
        assert_eq!(quintic.get_key("c3"), Some(-200));
        assert_eq!(quintic.get_key("c1*c2"), Some(0));
        // oracle: (1+h)^5/(1+5h) = 1 + 0h + 10h^2 - 40h^3 to order 3, times 5
        let q = UniPoly::from_ints(&[1, 5, 10, 10])
            .mul_trunc(&UniPoly::from_ints(&[1, 5]).series_invert(3).unwrap(), 3);
        assert_eq!(q, UniPoly::from_ints(&[1, 0, 10, -40]));
        let cubic_pair = complete_intersection_chern(5, &[2, 2]).unwrap();
        assert!(!cubic_pair.c1_zero());
        assert_eq!(cubic_pair.dim(), 3);
        // a quadric in CP^3 is CP^1 x CP^1
        let quadric = complete_intersection_chern(3, &[2]).unwrap();
        assert_eq!(quadric, product_chern(&cp_chern(1).unwrap(), &cp_chern(1).unwrap()).unwrap());
        assert!(complete_intersection_chern(2, &[1, 1]).is_err());
    }

    #[test]
    fn products() {
        let p11 = product_chern(&cp_chern(1).unwrap(), &cp_chern(1).unwrap()).unwrap();
        assert_eq!(p11.get_key("c1^2"), Some(8));
        assert_eq!(p11.get_key("c2"), Some(4));
        let a = cp_chern(2).unwrap();
        let b = cp_chern(3).unwrap();
        let ab = product_chern(&a, &b).unwrap();
        assert_eq!(ab.euler().unwrap(), 12);
        assert_eq!(gamma(&ab).unwrap(), gamma(&a).unwrap() + gamma(&b).unwrap());
    }

    #[test]
    fn chi_examples() {
        for n in 1..=6 {
            let chi = chi_from_chern(&cp_chern(n).unwrap()).unwrap();
            let expected: Vec<i64> = (0..=n).map(|p| if p % 2 == 0 { 1 } else { -1 }).collect();
            assert_eq!(chi.coeffs, expected);
        }
        let quintic = complete_intersection_chern(4, &[5]).unwrap();
        assert_eq!(chi_from_chern(&quintic).unwrap().coeffs, vec![0, 100, -100, 0]);
        let k3 = complete_intersection_chern(3, &[4]).unwrap();
        assert_eq!(chi_from_chern(&k3).unwrap().coeffs, vec![2, -20, 2]);
        let bogus = ChernNumbers::new(2, false, [("c1^2", 1), ("c2", 0)]).unwrap();
        assert!(matches!(chi_from_chern(&bogus), Err(Error::NonIntegral { .. })));
    }

    #[test]
    fn gamma_examples() {
        assert!(gamma(&complete_intersection_chern(4, &[5]).unwrap()).unwrap().is_zero());
        assert_eq!(gamma(&cp_chern(1).unwrap()).unwrap(), Rational::one());
        assert_eq!(gamma(&cp_chern(2).unwrap()).unwrap(), Rational::from(3));
        let cp2 = cp_chern(2).unwrap();
        assert_eq!(gamma(&product_chern(&cp2, &cp2).unwrap()).unwrap(), Rational::from(6));
        let torus = ChernNumbers::new(1, true, [("c1", 0)]).unwrap();
        assert_eq!(gamma(&torus).unwrap_err(), Error::EulerZero("gamma"));
    }

    #[test]
    fn json_round_trip_and_strict_keys() {
        let json = r#"{"n":3,"c1_zero":true,"pairings":{"c3":-200,"c1*c2":0,"c1^3":0}}"#;
        let data: ChernNumbers = serde_json::from_str(json).unwrap();
        assert_eq!(data.euler().unwrap(), -200);
        let back: ChernNumbers = serde_json::from_str(&serde_json::to_string(&data).unwrap()).unwrap();
        assert_eq!(back, data);
        let bad = r#"{"n":6,"pairings":{"c5c1":1}}"#;
        let err = serde_json::from_str::<ChernNumbers>(bad).unwrap_err().to_string();
        assert!(err.contains("c5c1"), "{err}");
        let wrong_weight = r#"{"n":3,"pairings":{"c2":1}}"#;
        assert!(serde_json::from_str::<ChernNumbers>(wrong_weight).is_err());
        let not_c1_zero = r#"{"n":2,"c1_zero":true,"pairings":{"c1^2":3,"c2":1}}"#;
        assert!(serde_json::from_str::<ChernNumbers>(not_c1_zero).is_err());
    }

    #[test]
    fn c1_zero_lists() {
        let two: Vec<_> = c1_zero_complete_intersections(2);
        assert_eq!(two, vec![(3, vec![4]), (4, vec![3, 2]), (5, vec![2, 2, 2])]);
        for n in 1..=6 {
            for (ambient, d) in c1_zero_complete_intersections(n) {
                assert_eq!(d.iter().sum::<i64>(), ambient as i64 + 1);
                let x = complete_intersection_chern(ambient, &d).unwrap();
                assert!(x.c1_zero(), "{ambient} {d:?}");
            }
        }
    }
}
