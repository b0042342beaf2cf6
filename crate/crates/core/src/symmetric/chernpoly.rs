use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Rational};

use super::elementary_in_roots;

/// Chern monomial `c_1^e_1 ... c_n^e_n`.
///
/// Ordered by weight (`sum_k k*e_k`), then by the exponent vector read from
/// `c_n` down to `c_1`, so `c1^2*c2` < `c2^2` < `c1*c3` < `c4`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChernMonomial {
    exps: SmallVec<[u16; 10]>,
}

impl ChernMonomial {
    pub fn new(exps: &[u16]) -> Self {
        ChernMonomial {
            exps: exps.iter().copied().collect(),
        }
    }

    pub fn one(n: usize) -> Self {
        ChernMonomial {
            exps: SmallVec::from_elem(0, n),
        }
    }

    /// The generator `c_k` (`k >= 1`).
    pub fn generator(n: usize, k: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[k - 1] = 1;
        m
    }

    /// Monomial `c_{parts[0]} c_{parts[1]} ...`; parts equal to zero are
    /// skipped (`c_0 = 1`).
    pub fn from_parts(n: usize, parts: &[usize]) -> Self {
        let mut m = Self::one(n);
        for &k in parts.iter().filter(|&&k| k > 0) {
            m.exps[k - 1] += 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    /// Exponent of `c_k`.
    pub fn exp(&self, k: usize) -> u16 {
        self.exps.get(k - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u32 + 1) * e as u32)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &ChernMonomial) -> ChernMonomial {
        ChernMonomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Indices `k` with `c_k` dividing the monomial.
    pub fn factors(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
    }

    /// Indices with multiplicity: `c1^2*c3` gives `1, 1, 3`.
    pub fn parts(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i + 1, e as usize))
    }

    /// Canonical key, e.g. `c1^2*c3`; the empty monomial renders as `1`.
    pub fn key(&self) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("c{}", i + 1)
                } else {
                    format!("c{}^{}", i + 1, e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// `c_1^{2}c_3` style LaTeX.
    pub fn latex(&self) -> String {
        let s: String = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("c_{{{}}}", i + 1)
                } else {
                    format!("c_{{{}}}^{{{}}}", i + 1, e)
                }
            })
            .collect();
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    /// Parses a canonical key in dimension `n`. Keys that parse but are not
    /// in canonical form (`c5*c1`, `c1*c1`, `c2^1`) are rejected.
    pub fn parse(key: &str, n: usize) -> Result<Self> {
        let bad = || Error::MalformedMonomial(key.to_string());
        let mut m = Self::one(n);
        if key == "1" {
            return Ok(m);
        }
        for factor in key.split('*') {
            let body = factor.strip_prefix('c').ok_or_else(bad)?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<u16>().map_err(|_| bad())?),
                None => (body, 1),
            };
            if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let k: usize = idx.parse().map_err(|_| bad())?;
            if k == 0 || k > n || exp == 0 {
                return Err(bad());
            }
            m.exps[k - 1] += exp;
        }
        if m.key() != key {
            return Err(bad());
        }
        Ok(m)
    }
}

impl Ord for ChernMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.exps.iter().rev().cmp(other.exps.iter().rev()))
    }
}

impl PartialOrd for ChernMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ChernMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl fmt::Debug for ChernMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// Polynomial in the Chern classes `c_1..c_n`, truncated at a weight bound.
#[derive(Clone, PartialEq, Eq)]
pub struct ChernPoly {
    n: usize,
    bound: u32,
    terms: BTreeMap<ChernMonomial, Rational>,
}

impl ChernPoly {
    /// Zero polynomial in dimension `n` with the default weight bound `n`.
    pub fn zero(n: usize) -> Self {
        Self::zero_bounded(n, n as u32)
    }

    pub fn zero_bounded(n: usize, bound: u32) -> Self {
        ChernPoly {
            n,
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(ChernMonomial::one(n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    /// `c_k`, with `c_0 = 1` and `c_k = 0` for `k > n`.
    pub fn c(n: usize, k: usize) -> Self {
        match k {
            0 => Self::one(n),
            k if k > n => Self::zero(n),
            k => Self::monomial(n, ChernMonomial::generator(n, k), Rational::one()),
        }
    }

    /// `c_{a} c_{b} ...` with the conventions of [`ChernPoly::c`]; negative
    /// indices give zero.
    pub fn product_of(n: usize, parts: &[i64]) -> Self {
        if parts.iter().any(|&k| k < 0 || k > n as i64) {
            return Self::zero(n);
        }
        let parts: Vec<usize> = parts.iter().map(|&k| k as usize).collect();
        Self::monomial(n, ChernMonomial::from_parts(n, &parts), Rational::one())
    }

    pub fn monomial(n: usize, m: ChernMonomial, c: Rational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(
        n: usize,
        bound: u32,
        terms: impl IntoIterator<Item = (ChernMonomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero_bounded(n, bound);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: ChernMonomial, c: Rational) {
        debug_assert_eq!(m.dim(), self.n);
        if c.is_zero() || m.weight() > self.bound {
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

    pub fn dim(&self) -> usize {
        self.n
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

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&ChernMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &ChernMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Coefficient of the monomial with the given canonical key.
    pub fn coeff_of(&self, key: &str) -> Result<Rational> {
        Ok(self.coeff(&ChernMonomial::parse(key, self.n)?))
    }

    pub fn add(&self, other: &ChernPoly) -> ChernPoly {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ChernPoly) -> ChernPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ChernPoly {
        self.scale(&Rational::from(-1))
    }

    pub fn scale(&self, c: &Rational) -> ChernPoly {
        let mut out = Self::zero_bounded(self.n, self.bound);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    /// Weight-truncated product; the bound of the result is the smaller of
    /// the two bounds.
    pub fn mul(&self, other: &ChernPoly) -> ChernPoly {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let bound = self.bound.min(other.bound);
        let mut out = Self::zero_bounded(self.n, bound);
        for (ma, ca) in &self.terms {
            let wa = ma.weight();
            for (mb, cb) in &other.terms {
                if wa + mb.weight() <= bound {
                    out.add_term(ma.mul(mb), ca * cb);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> ChernPoly {
        (0..e).fold(Self::one(self.n).with_bound(self.bound), |acc, _| acc.mul(self))
    }

    pub fn with_bound(&self, bound: u32) -> ChernPoly {
        Self::from_terms(
            self.n,
            bound,
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Component of weight exactly `w`.
    pub fn weight_part(&self, w: u32) -> ChernPoly {
        Self::from_terms(
            self.n,
            self.bound,
            self.terms
                .iter()
                .filter(|(m, _)| m.weight() == w)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn is_homogeneous(&self, w: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    /// Replaces each `c_k` in `assignments` by the given polynomial (use
    /// [`ChernPoly::zero`] for `c_k -> 0`), then re-truncates.
    pub fn substitute(&self, assignments: &BTreeMap<usize, ChernPoly>) -> ChernPoly {
        let mut out = Self::zero_bounded(self.n, self.bound);
        for (m, c) in &self.terms {
            let mut term = Self::constant(self.n, c.clone()).with_bound(self.bound);
            for k in 1..=self.n {
                let e = m.exp(k) as u32;
                if e == 0 {
                    continue;
                }
                let factor = match assignments.get(&k) {
                    Some(p) => p.pow(e),
                    None => ChernPoly::c(self.n, k).pow(e),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }

    /// Convenience for the common `c1 -> 0` specialisation.
    pub fn with_c1_zero(&self) -> ChernPoly {
        let mut a = BTreeMap::new();
        a.insert(1, ChernPoly::zero(self.n));
        self.substitute(&a)
    }

    /// Expansion in Chern roots: every `c_k` becomes `e_k(x_1..x_n)`.
    pub fn to_roots(&self) -> MultiPoly {
        let n = self.n;
        let bound = self.bound;
        let elementary: Vec<MultiPoly> = (1..=n)
            .map(|k| elementary_in_roots(n, k).expect("k <= n").with_bound(bound))
            .collect();
        let mut out = MultiPoly::zero(n, bound);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(n, bound, c.clone());
            for k in 1..=n {
                let e = m.exp(k) as u32;
                if e > 0 {
                    term = term.mul(&elementary[k - 1].pow(e)).expect("same ring");
                }
            }
            out = out.add(&term).expect("same ring");
        }
        out
    }

    /// Canonical text, e.g. `(1/12)*c1*c5 + (13/4)*c6`.
    pub fn render(&self) -> String {
        render_terms(self.terms.iter(), |m| m.key(), |c| format!("({c})"), "*")
    }

    /// LaTeX, e.g. `\frac{1}{12}c_{1}c_{5} + \frac{13}{4}c_{6}`.
    pub fn render_latex(&self) -> String {
        render_terms(
            self.terms.iter(),
            |m| m.latex(),
            |c| format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom()),
            "",
        )
    }
}

fn render_terms<'a>(
    terms: impl Iterator<Item = (&'a ChernMonomial, &'a Rational)>,
    mono: impl Fn(&ChernMonomial) -> String,
    frac: impl Fn(&Rational) -> String,
    sep: &str,
) -> String {
    let mut out = String::new();
    for (m, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag_str = if mag.is_integer() {
            mag.to_string()
        } else {
            frac(&mag)
        };
        if m.is_one() {
            out.push_str(&mag_str);
        } else if mag.is_one() {
            out.push_str(&mono(m));
        } else {
            out.push_str(&mag_str);
            out.push_str(sep);
            out.push_str(&mono(m));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for ChernPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for ChernPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChernPoly[n={}]({})", self.n, self.render())
    }
}

#[derive(Serialize, Deserialize)]
struct ChernPolyRepr {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bound: Option<u32>,
    terms: BTreeMap<String, Rational>,
}

impl Serialize for ChernPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ChernPolyRepr {
            n: self.n,
            bound: (self.bound != self.n as u32).then_some(self.bound),
            terms: self.terms.iter().map(|(m, c)| (m.key(), c.clone())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChernPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ChernPolyRepr::deserialize(deserializer)?;
        let bound = repr.bound.unwrap_or(repr.n as u32);
        let mut p = ChernPoly::zero_bounded(repr.n, bound);
        for (k, c) in repr.terms {
            let m = ChernMonomial::parse(&k, repr.n).map_err(serde::de::Error::custom)?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}
