//! Characteristic classes in the Chern basis: Chern character, Todd class,
//! characters of exterior powers of the cotangent bundle, and the classes
//! `K(n,k)` whose pairings give the derivatives of the chi_y genus at
//! `y = -1`:
//!
//! ```text
//! chi(-1 - t) = sum_k <K(n,k), [M]> t^k,   chi^(k)(-1) = (-1)^k k! <K(n,k), [M]>
//! ```
//!
//! `K(n,k)` is the weight-`n` part of the `t^k` coefficient of
//! `prod_i (x_i + t * x_i / (1 - e^{-x_i}))`.
//!
//! Every product here has the form `prod_i g(x_i)` for a one-variable series
//! `g`, so its coefficient at a dominant monomial `x^lambda` is just
//! `prod_i g_{lambda_i}`. The classes are built from those coefficients and
//! reduced directly, without expanding the product in `n` variables.
//! [`kclass_product`] does the full expansion and is kept as a cross-check.

mod lemmas;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

pub use lemmas::{
    first_lemma_check, ideal_threshold, odd_dependence, printed_first_lemma, printed_kclass, theorem2_identity,
    theorem3_identity, todd4_c1_zero_check, todd_printed_terms, verify_ideal_membership, verify_kclass_lemmas, OddDependence,
};

use crate::combinat::partitions_padded;
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, MultiPoly, Rational, UniPoly};
use crate::manifolds::ChernNumbers;
use crate::symmetric::{check_dim, newton_power_sum, ChernPoly, ElementaryExpansions, SymmetricPoly};

/// `x / (1 - e^{-x})` truncated after `x^order`.
pub fn todd_series(order: usize) -> UniPoly {
    // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    let denom = UniPoly::new(
        (0..=order)
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                Rational::from(sign) * factorial(k as u32 + 1).recip().expect("nonzero")
            })
            .collect(),
    );
    denom.series_invert(order).expect("constant term is 1")
}

/// `ch(T) = n + sum_k s_k / k!`.
pub fn chern_character(n: usize) -> Result<ChernPoly> {
    check_dim(n)?;
    let mut out = ChernPoly::constant(n, Rational::from(n));
    for k in 1..=n {
        let s = newton_power_sum(n, k)?;
        out = out.add(&s.scale(&factorial(k as u32).recip()?));
    }
    Ok(out)
}

/// `td(T) = prod_i x_i / (1 - e^{-x_i})`, all weights up to `n`.
pub fn todd_class(n: usize) -> Result<ChernPoly> {
    check_dim(n)?;
    let td = todd_series(n);
    let sym = SymmetricPoly::from_dominant_fn(n, n as u32, |lam| lam.iter().map(|&j| td.coeff(j as usize)).product());
    Ok(sym.reduce())
}

/// `ch(Lambda^p T*) = sum over p-subsets S of exp(-sum_{i in S} x_i)`.
pub fn lambda_chern_character(n: usize, p: usize) -> Result<ChernPoly> {
    check_dim(n)?;
    if p > n {
        return Err(Error::OutOfRange {
            what: "exterior power p",
            value: p as i64,
            min: 0,
            max: n as i64,
        });
    }
    // A subset S contributes to x^lambda iff it contains the support of
    // lambda; each exponent j then carries (-1)^j / j!.
    let sym = SymmetricPoly::from_dominant_fn(n, n as u32, |lam| {
        let len = lam.iter().filter(|&&j| j > 0).count() as i64;
        let mut c = binomial(n as i64 - len, p as i64 - len);
        for &j in lam.iter().filter(|&&j| j > 0) {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            c = c * Rational::from(sign) * factorial(j as u32).recip().expect("nonzero");
        }
        c
    });
    Ok(sym.reduce())
}

/// `prod_i (x_i + t * x_i / (1 - e^{-x_i}))` in roots and `t`, truncated at
/// root degree `n`.
pub fn kclass_product(n: usize) -> Result<MultiPoly> {
    check_dim(n)?;
    let bound = n as u32;
    let td = todd_series(n);
    let t = MultiPoly::t(n, bound);
    let mut acc = MultiPoly::one(n, bound);
    for i in 0..n {
        let factor = MultiPoly::root(n, bound, i).add(&t.mul(&MultiPoly::univariate_in_root(n, bound, i, td.coeffs()))?)?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// `K(n,k)` via the full product expansion. Slow; for cross-checks.
pub fn kclass_from_product(n: usize, k: usize) -> Result<ChernPoly> {
    let p = kclass_product(n)?;
    let part = p.t_coefficient(k as u16).homogeneous_part(n as u32);
    crate::symmetric::reduce_to_elementary(&part)
}

/// For a family `g_j(t)` (coefficient of `x^j` in a one-variable series with
/// polynomial dependence on `t`), returns the weight-`n` part of the `t^k`
/// coefficient of `prod_i g(x_i)` for every `k` up to the `t`-degree.
fn weight_n_classes(n: usize, g: &[UniPoly]) -> Vec<ChernPoly> {
    let mut by_k: Vec<BTreeMap<Vec<u16>, Rational>> = Vec::new();
    for lam in partitions_padded(n as u32, n) {
        let poly = lam.iter().fold(UniPoly::one(), |acc, &j| &acc * &g[j as usize]);
        for (k, c) in poly.coeffs().iter().enumerate() {
            if by_k.len() <= k {
                by_k.resize_with(k + 1, BTreeMap::new);
            }
            if !c.is_zero() {
                by_k[k].insert(lam.clone(), c.clone());
            }
        }
    }
    let mut cache = ElementaryExpansions::new(n);
    by_k.into_iter()
        .map(|coeffs| SymmetricPoly::from_dominant(n, n as u32, coeffs).reduce_with(&mut cache).0)
        .collect()
}

/// The classes `K(n,0), .., K(n,n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KClassTable {
    n: usize,
    entries: Vec<ChernPoly>,
}

impl KClassTable {
    pub fn compute(n: usize) -> Result<Self> {
        check_dim(n)?;
        let td = todd_series(n);
        // coefficient of x^j in x + t * td(x)
        let g: Vec<UniPoly> = (0..=n)
            .map(|j| {
                let mut c = vec![Rational::zero(), td.coeff(j)];
                if j == 1 {
                    c[0] = Rational::one();
                }
                UniPoly::new(c)
            })
            .collect();
        let mut entries = weight_n_classes(n, &g);
        entries.resize(n + 1, ChernPoly::zero(n));
        Ok(KClassTable { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize) -> Option<&ChernPoly> {
        self.entries.get(k)
    }

    pub fn entries(&self) -> &[ChernPoly] {
        &self.entries
    }
}

type ClassCache = OnceLock<Mutex<HashMap<usize, Arc<Vec<ChernPoly>>>>>;

fn cached(cache: &'static ClassCache, n: usize, build: impl FnOnce() -> Result<Vec<ChernPoly>>) -> Result<Arc<Vec<ChernPoly>>> {
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().expect("cache lock").get(&n) {
        return Ok(v.clone());
    }
    let value = Arc::new(build()?);
    map.lock().expect("cache lock").insert(n, value.clone());
    Ok(value)
}

/// `K(n,0..=n)`, computed once per `n`.
pub fn kclass_table(n: usize) -> Result<Arc<Vec<ChernPoly>>> {
    static CACHE: ClassCache = OnceLock::new();
    cached(&CACHE, n, || Ok(KClassTable::compute(n)?.entries))
}

pub fn kclass(n: usize, k: usize) -> Result<ChernPoly> {
    check_dim(n)?;
    if k > n {
        return Err(Error::OutOfRange {
            what: "order k",
            value: k as i64,
            min: 0,
            max: n as i64,
        });
    }
    Ok(kclass_table(n)?[k].clone())
}

/// The classes whose pairings are `chi^p = <ch(Lambda^p T*) td(T), [M]>`,
/// `p = 0..=n`, computed once per `n`.
pub fn chi_classes(n: usize) -> Result<Arc<Vec<ChernPoly>>> {
    static CACHE: ClassCache = OnceLock::new();
    check_dim(n)?;
    cached(&CACHE, n, || {
        // sum_p y^p ch(Lambda^p T*) td = prod_i (1 + y e^{-x_i}) td(x_i), and
        // e^{-x} td(x) = td(-x).
        let td = todd_series(n);
        let g: Vec<UniPoly> = (0..=n)
            .map(|j| {
                let c = td.coeff(j);
                let flipped = if j % 2 == 0 { c.clone() } else { -&c };
                UniPoly::new(vec![c, flipped])
            })
            .collect();
        let mut classes = weight_n_classes(n, &g);
        classes.resize(n + 1, ChernPoly::zero(n));
        Ok(classes)
    })
}

/// `chi^p` through the full product `ch(Lambda^p T*) * td(T)`. Slow; for
/// cross-checks.
pub fn chi_class_from_product(n: usize, p: usize) -> Result<ChernPoly> {
    Ok(lambda_chern_character(n, p)?.mul(&todd_class(n)?).weight_part(n as u32))
}

/// Pairs a weight-`n` class against Chern numbers.
pub fn pair(p: &ChernPoly, data: &ChernNumbers) -> Result<Rational> {
    if p.dim() != data.dim() {
        return Err(Error::ArityMismatch {
            left: p.dim(),
            right: data.dim(),
        });
    }
    let mut acc = Rational::zero();
    for (m, c) in p.terms() {
        if m.weight() != p.dim() as u32 {
            return Err(Error::WeightMismatch {
                key: m.key(),
                weight: m.weight(),
                expected: p.dim() as u32,
            });
        }
        let value = data.get(m).ok_or_else(|| Error::MissingPairing(m.key()))?;
        acc += c * &Rational::from(value);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::MultiPoly;
    use crate::symmetric::reduce_to_elementary;

/// `e^{sign * x}` truncated after `x^order`.
fn exp_series(order: usize, sign: i64) -> UniPoly {
    UniPoly::new(
        (0..=order)
            .map(|k| Rational::from(sign).pow(k as u32) * factorial(k as u32).recip().expect("nonzero"))
            .collect(),
    )
}

    fn r(a: i64, b: i64) -> Rational {
        Rational::frac(a, b)
    }

    #[test]
    fn todd_series_examples() {
        assert_eq!(todd_series(2), UniPoly::new(vec![r(1, 1), r(1, 2), r(1, 12)]));
        assert_eq!(todd_series(0), UniPoly::one());
        // independent oracle: x = (1 - e^{-x}) * td(x) coefficientwise,
        // i.e. td_k = sum_{j=1..k} (-1)^{j+1} td_{k-j} / (j+1)! ... solved
        // term by term
        let order = 8;
        let mut td = vec![Rational::one()];
        for k in 1..=order {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                acc -= Rational::from(sign) * factorial(j as u32 + 1).recip().unwrap() * &td[k - j];
            }
            td.push(acc);
        }
        assert_eq!(todd_series(order), UniPoly::new(td));
        assert_eq!(todd_series(4).coeff(4), r(-1, 720));
        assert_eq!(todd_series(6).coeff(6), r(1, 30240));
    }

    #[test]
    fn chern_character_examples() {
        assert_eq!(chern_character(1).unwrap().render(), "1 + c1");
        assert_eq!(chern_character(2).unwrap().render(), "2 + c1 + (1/2)*c1^2 - c2");
        let ch4 = chern_character(4).unwrap();
        assert_eq!(
            ch4.weight_part(4),
            newton_power_sum(4, 4).unwrap().scale(&r(1, 24))
        );
    }

    #[test]
    fn todd_class_examples() {
        for n in 1..=6 {
            let td = todd_class(n).unwrap();
            assert_eq!(td.weight_part(0), ChernPoly::one(n));
            assert_eq!(td.weight_part(1), ChernPoly::c(n, 1).scale(&r(1, 2)));
            if n >= 2 {
                let expected = ChernPoly::product_of(n, &[1, 1]).add(&ChernPoly::c(n, 2)).scale(&r(1, 12));
                assert_eq!(td.weight_part(2), expected);
            }
        }
        assert_eq!(todd_class(3).unwrap().weight_part(3).render(), "(1/24)*c1*c2");
        assert_eq!(
            todd_class(4).unwrap().weight_part(4).render(),
            "-(1/720)*c1^4 + (1/180)*c1^2*c2 + (1/240)*c2^2 + (1/720)*c1*c3 - (1/720)*c4"
        );
    }

    #[test]
    fn todd_class_matches_root_product() {
        for n in 1..=5 {
            let bound = n as u32;
            let td = todd_series(n);
            let mut prod = MultiPoly::one(n, bound);
            for i in 0..n {
                prod = prod.mul(&MultiPoly::univariate_in_root(n, bound, i, td.coeffs())).unwrap();
            }
            assert_eq!(reduce_to_elementary(&prod).unwrap(), todd_class(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn lambda_examples() {
        for n in 1..=5 {
            assert_eq!(lambda_chern_character(n, 0).unwrap(), ChernPoly::one(n));
            let top = lambda_chern_character(n, n).unwrap();
            let low = top.weight_part(0).add(&top.weight_part(1));
            assert_eq!(low, ChernPoly::one(n).sub(&ChernPoly::c(n, 1)));
        }
        // ch(T*) is ch(T) with x_i -> -x_i, i.e. weight w scaled by (-1)^w
        for n in 1..=6 {
            let ch = chern_character(n).unwrap();
            let dual = (0..=n as u32).fold(ChernPoly::zero(n), |acc, w| {
                let part = ch.weight_part(w);
                acc.add(&if w % 2 == 0 { part } else { part.neg() })
            });
            assert_eq!(lambda_chern_character(n, 1).unwrap(), dual, "n={n}");
        }
        assert_eq!(lambda_chern_character(2, 1).unwrap().render(), "2 - c1 + (1/2)*c1^2 - c2");
        assert!(lambda_chern_character(3, 4).is_err());
    }

    #[test]
    fn lambda_matches_subset_sum() {
        // direct expansion of sum over p-subsets of exp(-sum x_i)
        let n = 4;
        let bound = n as u32;
        let e = exp_series(n, -1);
        let exps: Vec<MultiPoly> = (0..n)
            .map(|i| MultiPoly::univariate_in_root(n, bound, i, e.coeffs()))
            .collect();
        for p in 0..=n {
            let mut sum = MultiPoly::zero(n, bound);
            for subset in itertools::Itertools::combinations(0..n, p) {
                let term = subset.iter().fold(MultiPoly::one(n, bound), |acc, &i| acc.mul(&exps[i]).unwrap());
                sum = sum.add(&term).unwrap();
            }
            assert_eq!(reduce_to_elementary(&sum).unwrap(), lambda_chern_character(n, p).unwrap());
        }
    }

    #[test]
    fn kclass_product_examples() {
        let p1 = kclass_product(1).unwrap();
        assert_eq!(p1.to_string(), "t + x1 + (1/2)*t*x1");
        for n in 1..=5 {
            let p = kclass_product(n).unwrap();
            assert!(p.t_degree().unwrap() <= n as u16);
            let t0 = reduce_to_elementary(&p.t_coefficient(0)).unwrap();
            assert_eq!(t0, ChernPoly::c(n, n));
        }
    }

    #[test]
    fn kclass_basic_values() {
        for n in 1..=8 {
            assert_eq!(kclass(n, 0).unwrap(), ChernPoly::c(n, n), "n={n}");
            assert_eq!(kclass(n, 1).unwrap(), ChernPoly::c(n, n).scale(&r(n as i64, 2)), "n={n}");
        }
        assert_eq!(kclass(6, 2).unwrap().render(), "(1/12)*c1*c5 + (13/4)*c6");
        assert_eq!(kclass(2, 2).unwrap().render(), "(1/12)*c1^2 + (1/12)*c2");
        assert_eq!(kclass(4, 4).unwrap(), todd_class(4).unwrap().weight_part(4));
        assert!(kclass(3, 4).is_err());
    }

    #[test]
    fn kclass_top_is_todd() {
        for n in 1..=8 {
            assert_eq!(kclass(n, n).unwrap(), todd_class(n).unwrap().weight_part(n as u32), "n={n}");
        }
    }

    #[test]
    fn kclass_fast_route_matches_product() {
        for n in 1..=5 {
            for k in 0..=n {
                assert_eq!(kclass(n, k).unwrap(), kclass_from_product(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn chi_classes_match_product() {
        for n in 1..=5 {
            let fast = chi_classes(n).unwrap();
            for p in 0..=n {
                assert_eq!(fast[p], chi_class_from_product(n, p).unwrap(), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn alternating_chi_classes_give_euler_class() {
        // sum_p (-1)^p ch(Lambda^p T*) td(T) = prod (1 - e^{-x_i}) x_i/(1 - e^{-x_i}) = c_n
        for n in 1..=8 {
            let classes = chi_classes(n).unwrap();
            let sum = classes.iter().enumerate().fold(ChernPoly::zero(n), |acc, (p, c)| {
                if p % 2 == 0 { acc.add(c) } else { acc.sub(c) }
            });
            assert_eq!(sum, ChernPoly::c(n, n), "n={n}");
        }
    }

    #[test]
    fn chi_classes_serre_duality() {
        for n in 1..=7 {
            let classes = chi_classes(n).unwrap();
            for p in 0..=n {
                let dual = if n % 2 == 0 { classes[n - p].clone() } else { classes[n - p].neg() };
                assert_eq!(classes[p], dual, "n={n} p={p}");
            }
        }
    }

    #[test]
    fn kclasses_are_chi_at_shifted_argument() {
        // sum_k K(n,k) t^k = sum_p chi^p (-1 - t)^p
        for n in 1..=7 {
            let chi = chi_classes(n).unwrap();
            let k = kclass_table(n).unwrap();
            for (j, kj) in k.iter().enumerate() {
                let mut expected = ChernPoly::zero(n);
                for (p, c) in chi.iter().enumerate() {
                    // coefficient of t^j in (-1 - t)^p = (-1)^p C(p, j)
                    let sign = if p % 2 == 0 { 1 } else { -1 };
                    expected = expected.add(&c.scale(&(Rational::from(sign) * binomial(p as i64, j as i64))));
                }
                assert_eq!(kj, &expected, "n={n} k={j}");
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let cp1 = crate::manifolds::cp_chern(1).unwrap();
        assert_eq!(pair(&ChernPoly::c(1, 1), &cp1).unwrap(), Rational::from(2));
        let k3 = crate::manifolds::complete_intersection_chern(3, &[4]).unwrap();
        let td2 = todd_class(2).unwrap().weight_part(2);
        assert_eq!(pair(&td2, &k3).unwrap(), Rational::from(2));
        let quintic = crate::manifolds::complete_intersection_chern(4, &[5]).unwrap();
        assert_eq!(pair(&kclass(3, 0).unwrap(), &quintic).unwrap(), Rational::from(-200));
        let partial = ChernNumbers::new(2, false, [("c2", 3)]).unwrap();
        assert_eq!(
            pair(&td2, &partial).unwrap_err(),
            Error::MissingPairing("c1^2".into())
        );
    }
}
