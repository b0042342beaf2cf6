//! The Chern-roots ring: elementary symmetric polynomials, symmetry checks,
//! reduction of symmetric polynomials to the Chern-class basis, and Newton's
//! identities.
//!
//! A symmetric polynomial is determined by its coefficients on dominant
//! monomials `x^lambda` with `lambda_1 >= lambda_2 >= ... >= lambda_n`.
//! [`SymmetricPoly`] stores exactly those, and the reduction below is the
//! classical leading-term algorithm run on that representation: take the
//! lexicographically largest `lambda`, subtract `coef * e_1^(l1-l2) e_2^(l2-l3)
//! ... e_n^ln`, repeat. The leading exponent strictly decreases at every step.

mod chernpoly;

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;

pub use chernpoly::{ChernMonomial, ChernPoly};

use crate::combinat::partitions_padded;
use crate::error::{Error, Result};
use crate::exact::{Monomial, MultiPoly, Rational};

/// Default largest supported complex dimension.
pub const DEFAULT_MAX_DIM: usize = 8;
/// Hard ceiling on the complex dimension.
pub const DIM_CEILING: usize = 10;

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > DIM_CEILING {
        return Err(Error::OutOfRange {
            what: "dimension n",
            value: n as i64,
            min: 1,
            max: DIM_CEILING as i64,
        });
    }
    Ok(())
}

/// `e_k(x_1..x_n)` truncated at root degree `n`.
pub fn elementary_in_roots(n: usize, k: usize) -> Result<MultiPoly> {
    if k > n {
        return Err(Error::OutOfRange {
            what: "elementary index k",
            value: k as i64,
            min: 0,
            max: n as i64,
        });
    }
    let bound = n as u32;
    let terms = (0..n).combinations(k).map(|subset| {
        let mut exps = vec![0u16; n];
        for i in subset {
            exps[i] = 1;
        }
        (Monomial::new(&exps, 0), Rational::one())
    });
    Ok(MultiPoly::from_terms(n, bound, terms))
}

/// First adjacent transposition `(i, i+1)` of root slots that changes `p`,
/// if any. Adjacent transpositions generate the symmetric group.
pub fn symmetry_violation(p: &MultiPoly) -> Option<(usize, usize)> {
    let n = p.arity();
    for i in 0..n.saturating_sub(1) {
        for (m, c) in p.terms() {
            let mut roots = m.roots().to_vec();
            roots.swap(i, i + 1);
            if &p.coeff(&Monomial::new(&roots, m.t_exp())) != c {
                return Some((i, i + 1));
            }
        }
    }
    None
}

pub fn is_symmetric(p: &MultiPoly) -> bool {
    symmetry_violation(p).is_none()
}

/// Rewrites a symmetric, `t`-free polynomial in the elementary basis.
pub fn reduce_to_elementary(p: &MultiPoly) -> Result<ChernPoly> {
    Ok(SymmetricPoly::from_multipoly(p)?.reduce())
}

/// Power sum `s_k = sum_i x_i^k` in the Chern basis via Newton's recurrence
/// `s_k = c_1 s_{k-1} - c_2 s_{k-2} + ... + (-1)^{k-1} k c_k`.
pub fn newton_power_sum(n: usize, k: usize) -> Result<ChernPoly> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange {
            what: "power-sum index k",
            value: k as i64,
            min: 1,
            max: n as i64,
        });
    }
    Ok(power_sums(n, k).pop().expect("k >= 1"))
}

/// `[s_1, .., s_k]` in the Chern basis of dimension `n`.
pub(crate) fn power_sums(n: usize, k: usize) -> Vec<ChernPoly> {
    let mut s: Vec<ChernPoly> = Vec::with_capacity(k);
    for j in 1..=k {
        let mut acc = ChernPoly::c(n, j).scale(&Rational::from(j as i64));
        if j % 2 == 0 {
            acc = acc.neg();
        }
        for i in 1..j {
            let term = ChernPoly::c(n, i).mul(&s[j - i - 1]);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        s.push(acc);
    }
    s
}

/// Symmetric polynomial stored by its dominant coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPoly {
    n: usize,
    bound: u32,
    // keys: weakly decreasing exponent vectors of length n
    coeffs: BTreeMap<Vec<u16>, Rational>,
}

impl SymmetricPoly {
    pub fn zero(n: usize, bound: u32) -> Self {
        SymmetricPoly {
            n,
            bound,
            coeffs: BTreeMap::new(),
        }
    }

    /// Checks symmetry and keeps the dominant terms.
    pub fn from_multipoly(p: &MultiPoly) -> Result<Self> {
        if !p.is_t_free() {
            return Err(Error::UnexpectedT);
        }
        if let Some((i, j)) = symmetry_violation(p) {
            return Err(Error::NotSymmetric(i, j));
        }
        let mut out = Self::zero(p.arity(), p.bound());
        for (m, c) in p.terms() {
            if m.roots().windows(2).all(|w| w[0] >= w[1]) {
                out.coeffs.insert(m.roots().to_vec(), c.clone());
            }
        }
        Ok(out)
    }

    /// Builds from a coefficient function on dominant monomials of root
    /// degree `<= bound`. Used for products `prod_i g(x_i)`, whose coefficient
    /// at `x^lambda` is `prod_i g_{lambda_i}`.
    pub fn from_dominant_fn(n: usize, bound: u32, mut f: impl FnMut(&[u16]) -> Rational) -> Self {
        let mut out = Self::zero(n, bound);
        for lam in dominant_monomials(n, bound) {
            let c = f(&lam);
            if !c.is_zero() {
                out.coeffs.insert(lam, c);
            }
        }
        out
    }

    /// From dominant coefficients keyed by weakly decreasing exponent vectors.
    pub(crate) fn from_dominant(n: usize, bound: u32, coeffs: BTreeMap<Vec<u16>, Rational>) -> Self {
        debug_assert!(coeffs.keys().all(|k| k.len() == n && k.windows(2).all(|w| w[0] >= w[1])));
        SymmetricPoly { n, bound, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, lambda: &[u16]) -> Rational {
        let mut key = lambda.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        self.coeffs.get(&key).cloned().unwrap_or_default()
    }

    /// Part of root degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        SymmetricPoly {
            n: self.n,
            bound: self.bound,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.iter().map(|&e| e as u32).sum::<u32>() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn reduce(&self) -> ChernPoly {
        self.reduce_traced().0
    }

    /// Reduction together with the sequence of leading exponent vectors that
    /// were eliminated, in order.
    pub fn reduce_traced(&self) -> (ChernPoly, Vec<Vec<u16>>) {
        self.reduce_with(&mut ElementaryExpansions::new(self.n))
    }

    /// Reduction reusing the elementary-product expansions in `cache`.
    pub(crate) fn reduce_with(&self, cache: &mut ElementaryExpansions) -> (ChernPoly, Vec<Vec<u16>>) {
        let n = self.n;
        assert_eq!(cache.n, n);
        let mut rem = self.coeffs.clone();
        let mut out = ChernPoly::zero_bounded(n, self.bound);
        let mut trace = Vec::new();
        while let Some((lam, c)) = rem.pop_last() {
            let mut mu = vec![0u16; n];
            for k in 0..n {
                mu[k] = lam[k] - lam.get(k + 1).copied().unwrap_or(0);
            }
            let expansion = cache.get(&mu);
            debug_assert!(expansion.get(&lam).is_some_and(Rational::is_one));
            for (nu, v) in expansion {
                if nu == &lam {
                    continue;
                }
                let delta = &c * v;
                let entry = rem.entry(nu.clone()).or_default();
                *entry -= delta;
                if entry.is_zero() {
                    rem.remove(nu);
                }
            }
            out.add_term(ChernMonomial::new(&mu), c);
            trace.push(lam);
        }
        (out, trace)
    }
}

/// All weakly decreasing exponent vectors of length `n` with total degree at
/// most `bound`.
pub fn dominant_monomials(n: usize, bound: u32) -> Vec<Vec<u16>> {
    (0..=bound).flat_map(|d| partitions_padded(d, n)).collect()
}

/// Dominant coefficients of products of elementary symmetric polynomials,
/// memoised by exponent vector.
pub(crate) struct ElementaryExpansions {
    n: usize,
    cache: HashMap<Vec<u16>, BTreeMap<Vec<u16>, Rational>>,
}

impl ElementaryExpansions {
    pub(crate) fn new(n: usize) -> Self {
        ElementaryExpansions {
            n,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, mu: &[u16]) -> &BTreeMap<Vec<u16>, Rational> {
        if !self.cache.contains_key(mu) {
            let value = self.compute(mu);
            self.cache.insert(mu.to_vec(), value);
        }
        &self.cache[mu]
    }

    fn compute(&mut self, mu: &[u16]) -> BTreeMap<Vec<u16>, Rational> {
        match mu.iter().rposition(|&e| e > 0) {
            None => {
                let mut m = BTreeMap::new();
                m.insert(vec![0u16; self.n], Rational::one());
                m
            }
            Some(idx) => {
                let mut rest = mu.to_vec();
                rest[idx] -= 1;
                let n = self.n;
                times_elementary(self.get(&rest), idx + 1, n)
            }
        }
    }
}

/// Dominant coefficients of `e_k * f` for symmetric homogeneous `f`:
/// `[x^lambda](e_k f) = sum_{|S| = k} f[lambda - 1_S]`.
fn times_elementary(f: &BTreeMap<Vec<u16>, Rational>, k: usize, n: usize) -> BTreeMap<Vec<u16>, Rational> {
    let Some(deg) = f.keys().next().map(|key| key.iter().map(|&e| e as u32).sum::<u32>()) else {
        return BTreeMap::new();
    };
    let mut out = BTreeMap::new();
    for lam in partitions_padded(deg + k as u32, n) {
        let support = lam.iter().take_while(|&&e| e > 0).count();
        if support < k {
            continue;
        }
        let mut acc = Rational::zero();
        for subset in (0..support).combinations(k) {
            let mut nu = lam.clone();
            for i in subset {
                nu[i] -= 1;
            }
            nu.sort_unstable_by(|a, b| b.cmp(a));
            if let Some(v) = f.get(&nu) {
                acc += v;
            }
        }
        if !acc.is_zero() {
            out.insert(lam, acc);
        }
    }
    out
}
