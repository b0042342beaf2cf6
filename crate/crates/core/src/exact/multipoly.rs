//! Sparse polynomials in a fixed number of root generators `x_1..x_n` plus one
//! formal variable `t`, truncated at a bound on total root degree.
//!
//! Truncation contract: a term whose root degree exceeds the bound is dropped
//! on construction and after every operation. The `t` slot is exempt, so the
//! ring is `Q[x_1..x_n]/(deg > bound) [t]`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use smallvec::SmallVec;

use super::Rational;
use crate::error::{Error, Result};

pub(crate) type ExpVec = SmallVec<[u16; 12]>;

/// Exponent vector: `arity` root slots followed by a single `t` slot.
///
/// Ordered graded-lexicographically on the root slots, ties broken by the
/// `t` exponent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: ExpVec,
}

impl Monomial {
    pub fn new(roots: &[u16], t: u16) -> Self {
        let mut exps: ExpVec = roots.iter().copied().collect();
        exps.push(t);
        Monomial { exps }
    }

    pub fn one(arity: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, arity + 1),
        }
    }

    pub fn arity(&self) -> usize {
        self.exps.len() - 1
    }

    pub fn roots(&self) -> &[u16] {
        &self.exps[..self.exps.len() - 1]
    }

    pub fn t_exp(&self) -> u16 {
        *self.exps.last().expect("monomial has a t slot")
    }

    pub fn root_degree(&self) -> u32 {
        self.roots().iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn swapped(&self, i: usize, j: usize) -> Monomial {
        let mut m = self.clone();
        m.exps.swap(i, j);
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.root_degree()
            .cmp(&other.root_degree())
            .then_with(|| self.roots().cmp(other.roots()))
            .then_with(|| self.t_exp().cmp(&other.t_exp()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_monomial(self))
    }
}

fn render_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    if m.t_exp() == 1 {
        parts.push("t".to_string());
    } else if m.t_exp() > 1 {
        parts.push(format!("t^{}", m.t_exp()));
    }
    for (i, &e) in m.roots().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Sparse truncated polynomial in `arity` roots and `t`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    arity: usize,
    bound: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(arity: usize, bound: u32) -> Self {
        MultiPoly {
            arity,
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, bound: u32, c: Rational) -> Self {
        let mut p = Self::zero(arity, bound);
        p.add_term(Monomial::one(arity), c);
        p
    }

    pub fn one(arity: usize, bound: u32) -> Self {
        Self::constant(arity, bound, Rational::one())
    }

    /// The root generator `x_{i+1}` (zero-based index).
    pub fn root(arity: usize, bound: u32, i: usize) -> Self {
        assert!(i < arity, "root index {i} out of range for arity {arity}");
        let mut exps = vec![0u16; arity];
        exps[i] = 1;
        Self::from_terms(arity, bound, [(Monomial::new(&exps, 0), Rational::one())])
    }

    /// The formal variable `t`.
    pub fn t(arity: usize, bound: u32) -> Self {
        let roots = vec![0u16; arity];
        Self::from_terms(arity, bound, [(Monomial::new(&roots, 1), Rational::one())])
    }

    /// Builds a polynomial from terms, merging duplicates and applying the
    /// truncation bound.
    pub fn from_terms(
        arity: usize,
        bound: u32,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(arity, bound);
        for (m, c) in terms {
            assert_eq!(m.arity(), arity, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    /// `sum_k coeffs[k] * x_{i+1}^k`, truncated.
    pub fn univariate_in_root(arity: usize, bound: u32, i: usize, coeffs: &[Rational]) -> Self {
        let mut exps = vec![0u16; arity];
        let terms = coeffs.iter().enumerate().map(|(k, c)| {
            exps[i] = k as u16;
            (Monomial::new(&exps, 0), c.clone())
        });
        let collected: Vec<_> = terms.collect();
        Self::from_terms(arity, bound, collected)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || m.root_degree() > self.bound {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Same polynomial under a different truncation bound; lowering the
    /// bound discards terms.
    pub fn with_bound(&self, bound: u32) -> Self {
        Self::from_terms(
            self.arity,
            bound,
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    fn check_compatible(&self, other: &MultiPoly) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        if self.bound != other.bound {
            return Err(Error::BoundMismatch {
                left: self.bound,
                right: other.bound,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from(-1))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity, self.bound);
        }
        MultiPoly {
            arity: self.arity,
            bound: self.bound,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Truncated product. Terms whose root degree exceeds the bound never
    /// enter the accumulator.
    pub fn mul(&self, other: &MultiPoly) -> Result<Self> {
        self.check_compatible(other)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        let rhs: Vec<(&Monomial, &Rational, u32)> = other
            .terms
            .iter()
            .map(|(m, c)| (m, c, m.root_degree()))
            .collect();
        for (ma, ca) in &self.terms {
            let da = ma.root_degree();
            for &(mb, cb, db) in &rhs {
                if da + db > self.bound {
                    continue;
                }
                let m = ma.mul(mb);
                let prod = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(m, prod);
                    }
                }
            }
        }
        Ok(MultiPoly {
            arity: self.arity,
            bound: self.bound,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.arity, self.bound);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Coefficient of `t^k`, as a `t`-free polynomial.
    pub fn t_coefficient(&self, k: u16) -> Self {
        Self::from_terms(
            self.arity,
            self.bound,
            self.terms
                .iter()
                .filter(|(m, _)| m.t_exp() == k)
                .map(|(m, c)| (Monomial::new(m.roots(), 0), c.clone())),
        )
    }

    pub fn t_degree(&self) -> Option<u16> {
        self.terms.keys().map(Monomial::t_exp).max()
    }

    /// Component of root degree exactly `d` (all `t` powers kept).
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_terms(
            self.arity,
            self.bound,
            self.terms
                .iter()
                .filter(|(m, _)| m.root_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Image under the transposition of root slots `i` and `j`.
    pub fn swap_roots(&self, i: usize, j: usize) -> Self {
        Self::from_terms(
            self.arity,
            self.bound,
            self.terms.iter().map(|(m, c)| (m.swapped(i, j), c.clone())),
        )
    }

    /// True when every exponent vector in the polynomial leaves the `t` slot
    /// at zero.
    pub fn is_t_free(&self) -> bool {
        self.terms.keys().all(|m| m.t_exp() == 0)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = render_monomial(m);
            let mag_str = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if mono == "1" {
                f.write_str(&mag_str)?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag_str}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[n={}, bound={}]({self})", self.arity, self.bound)
    }
}
