//! Bivariate generating functions `F = sum p^c(R) q^r(R)` over the dominant
//! regions `R` having a given separating wall, computed either directly or
//! through the column recursion.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_rank, Error, Result};
use crate::shi::{enumerate_regions, stat_c, stat_r, Root};

/// Sparse polynomial in `p` and `q` with integer coefficients, keyed by
/// `(p-degree, q-degree)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variable {
    P,
    Q,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(p: u32, q: u32, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, coeff.into());
        out
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u32, u32, C)>) -> Self {
        let mut out = Self::zero();
        for (p, q, c) in terms {
            out.add_term(p, q, c.into());
        }
        out
    }

    fn add_term(&mut self, p: u32, q: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((p, q)).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: `p`-degree ascending, then `q`-degree ascending.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(p, q), c)| (p, q, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, p: u32, q: u32) -> BigInt {
        self.terms.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn degree_in(&self, var: Variable) -> Option<u32> {
        self.terms().map(|(p, q, _)| pick(var, p, q)).max()
    }

    pub fn eval(&self, p: &BigInt, q: &BigInt) -> BigInt {
        self.terms()
            .map(|(a, b, c)| c * p.pow(a) * q.pow(b))
            .sum()
    }

    /// Value at `p = q = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Drops every term whose degree in `var` exceeds `bound`.
    pub fn truncate(&self, var: Variable, bound: u32) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(&(p, q), _)| pick(var, p, q) <= bound)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    /// `f(q, p)`.
    pub fn swap_variables(&self) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(p, q), c)| ((q, p), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }
}

fn pick(var: Variable, p: u32, q: u32) -> u32 {
    match var {
        Variable::P => p,
        Variable::Q => q,
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (p, q, c) in rhs.terms() {
            out.add_term(p, q, c.clone());
        }
        out
    }
}

impl Add for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self + &rhs
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (a1, b1, c1) in self.terms() {
            for (a2, b2, c2) in rhs.terms() {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for BivariatePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

fn write_power(out: &mut Vec<String>, var: char, exp: u32) {
    match exp {
        0 => {}
        1 => out.push(var.to_string()),
        e => out.push(format!("{var}^{e}")),
    }
}

/// Human-readable form, highest `p`-degree first: `p^3*q^2 + p^2*q^3`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms().collect();
        ordered.sort_by(|x, y| (y.0, x.1).cmp(&(x.0, y.1)));
        for (i, (p, q, c)) in ordered.into_iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !magnitude.is_one() || (p == 0 && q == 0) {
                factors.push(magnitude.to_string());
            }
            write_power(&mut factors, 'p', p);
            write_power(&mut factors, 'q', q);
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePolynomial({self})")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    p: u32,
    q: u32,
    coeff: CoeffRepr,
}

/// Sorted array of `{"p": a, "q": b, "coeff": c}`; coefficients beyond the
/// `i64` range are written as decimal strings.
impl Serialize for BivariatePolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr> = self
            .terms()
            .map(|(p, q, c)| TermRepr {
                p,
                q,
                coeff: match c.to_i64() {
                    Some(x) => CoeffRepr::Small(x),
                    None => CoeffRepr::Big(c.to_string()),
                },
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(d)?;
        let mut out = BivariatePolynomial::zero();
        for t in terms {
            let c = match t.coeff {
                CoeffRepr::Small(x) => BigInt::from(x),
                CoeffRepr::Big(s) => s.parse().map_err(serde::de::Error::custom)?,
            };
            out.add_term(t.p, t.q, c);
        }
        Ok(out)
    }
}

/// `[k]_{p,q} = p^{k-1} + p^{k-2} q + ... + q^{k-1}`; `[0] = 0`.
pub fn bracket(k: u32) -> BivariatePolynomial {
    BivariatePolynomial::from_terms((0..k).map(|j| (j, k - 1 - j, 1)))
}

/// `[k]_p = 1 + p + ... + p^{k-1}`, the bracket at `q = 1`.
pub fn bracket_p(k: u32) -> BivariatePolynomial {
    BivariatePolynomial::from_terms((0..k).map(|j| (j, 0, 1)))
}

pub fn truncate(f: &BivariatePolynomial, var: Variable, bound: u32) -> BivariatePolynomial {
    f.truncate(var, bound)
}

/// `phi_{k,m}(f) = trunc_{p <= (k-1)m}(q^m [m(k-2)+1]_p f)`, which appends a
/// first column to tableaux of rank `k - 1`.
pub fn phi_op(k: usize, m: usize, f: &BivariatePolynomial) -> Result<BivariatePolynomial> {
    if k < 3 {
        return Err(Error::PhiIndexTooSmall(k));
    }
    if m < 1 {
        return Err(Error::LevelTooSmall);
    }
    let (k, m) = (k as u32, m as u32);
    let factor = &BivariatePolynomial::monomial(0, m, 1) * &bracket_p(m * (k - 2) + 1);
    Ok((&factor * f).truncate(Variable::P, (k - 1) * m))
}

/// `rho(f)(p, q) = f(q, p)`, the effect of conjugating every tableau.
pub fn rho_op(f: &BivariatePolynomial) -> BivariatePolynomial {
    f.swap_variables()
}

/// `p^m q^m [m]_{p,q}^{n-2}`, the generating function for the highest root.
pub fn base_theta(n: usize, m: usize) -> Result<BivariatePolynomial> {
    check_rank(n)?;
    if m < 1 {
        return Err(Error::LevelTooSmall);
    }
    let m = m as u32;
    Ok(&BivariatePolynomial::monomial(m, m, 1) * &bracket(m).pow(n as u32 - 2))
}

/// The set of dominant regions of the m-Shi arrangement of rank `n` that
/// have `H_{root, m}` as a separating wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WallQuery {
    pub n: usize,
    pub m: usize,
    pub root: Root,
}

impl WallQuery {
    pub fn new(n: usize, m: usize, u: usize, v: usize) -> Result<Self> {
        check_rank(n)?;
        if m < 1 {
            return Err(Error::LevelTooSmall);
        }
        let root = Root::new(u, v, n)?;
        Ok(WallQuery { n, m, root })
    }
}

/// One operator application in the recursion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecursionStep {
    /// `"base"`, `"phi"` or `"rho"`.
    pub op: &'static str,
    /// Rank after this step.
    pub rank: usize,
    /// For `phi` steps: the bracket size and the `p`-degree bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<u32>,
    pub result: BivariatePolynomial,
}

/// Every intermediate result of the recursion for `query`, ending with the
/// generating function itself.
pub fn recursion_trace(query: &WallQuery) -> Result<Vec<RecursionStep>> {
    let WallQuery { n, m, root } = *query;
    let (u, v) = (root.u, root.v);
    let start = v - u + 2;
    let mut f = base_theta(start, m)?;
    let mut steps = vec![RecursionStep {
        op: "base",
        rank: start,
        bracket: None,
        bound: None,
        result: f.clone(),
    }];
    let phi = |j: usize, f: &mut BivariatePolynomial, steps: &mut Vec<RecursionStep>| {
        *f = phi_op(j, m, f)?;
        steps.push(RecursionStep {
            op: "phi",
            rank: j,
            bracket: Some((m * (j - 2) + 1) as u32),
            bound: Some(((j - 1) * m) as u32),
            result: f.clone(),
        });
        Ok::<_, Error>(())
    };
    for j in start + 1..=v + 1 {
        phi(j, &mut f, &mut steps)?;
    }
    f = rho_op(&f);
    steps.push(RecursionStep {
        op: "rho",
        rank: v + 1,
        bracket: None,
        bound: None,
        result: f.clone(),
    });
    for j in v + 2..=n {
        phi(j, &mut f, &mut steps)?;
    }
    Ok(steps)
}

/// The generating function for `query` via the column recursion.
pub fn recursion(query: &WallQuery) -> Result<BivariatePolynomial> {
    let steps = recursion_trace(query)?;
    Ok(steps.into_iter().last().expect("trace is never empty").result)
}

/// The generating function for `query` summed directly over the regions.
pub fn brute(query: &WallQuery, cap: usize) -> Result<BivariatePolynomial> {
    let regions = enumerate_regions(query.n, query.m, cap)?;
    Ok(regions
        .iter()
        .filter(|e| e.is_separating_wall(query.root))
        .map(|e| BivariatePolynomial::monomial(stat_c(e) as u32, stat_r(e) as u32, 1))
        .sum())
}
