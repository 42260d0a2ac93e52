//! Exact sparse multivariate polynomials over the integers and the graph
//! polynomial `P_G = prod_{uv in E, u < v} (x_v - x_u)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph [`graph_polynomial`] expands by default.
pub const DEFAULT_EXPAND_EDGES: usize = 25;
/// Largest graph [`graph_coefficient`] accepts by default.
pub const DEFAULT_COEFFICIENT_EDGES: usize = 32;
/// Hard bound keeping the coefficient dynamic program inside `i128`.
pub const MAX_COEFFICIENT_EDGES: usize = 120;

/// Exponent vector over variables `x_0, x_1, ...` (one per vertex, in vertex
/// order). Missing trailing entries are zero, so equal monomials compare
/// equal regardless of how many variables were named.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct IndexFunction(Vec<u32>);

impl From<Vec<u32>> for IndexFunction {
    fn from(v: Vec<u32>) -> Self {
        IndexFunction::new(v)
    }
}

impl From<IndexFunction> for Vec<u32> {
    fn from(f: IndexFunction) -> Self {
        f.0
    }
}

impl IndexFunction {
    pub fn new(mut values: Vec<u32>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        IndexFunction(values)
    }

    pub fn zero() -> Self {
        IndexFunction(Vec::new())
    }

    /// The indicator `1_v`.
    pub fn unit(v: usize) -> Self {
        let mut values = vec![0; v + 1];
        values[v] = 1;
        IndexFunction(values)
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn set(&mut self, v: usize, value: u32) {
        if v >= self.0.len() {
            if value == 0 {
                return;
            }
            self.0.resize(v + 1, 0);
        }
        self.0[v] = value;
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn max_value(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Dense values for `n` variables.
    pub fn to_dense(&self, n: usize) -> Vec<u32> {
        (0..n).map(|v| self.get(v)).collect()
    }

    /// Pointwise `self <= other`.
    pub fn dominated_by(&self, other: &IndexFunction) -> bool {
        self.0.iter().enumerate().all(|(v, &x)| x <= other.get(v))
    }

    /// Pointwise difference, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &IndexFunction) -> Option<IndexFunction> {
        if !other.dominated_by(self) {
            return None;
        }
        let values = self.0.iter().enumerate().map(|(v, &x)| x - other.get(v)).collect();
        Some(IndexFunction::new(values))
    }

    pub fn plus(&self, other: &IndexFunction) -> IndexFunction {
        let n = self.0.len().max(other.0.len());
        IndexFunction::new((0..n).map(|v| self.get(v) + other.get(v)).collect())
    }

    /// Variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &x)| x > 0).map(|(v, _)| v)
    }

    /// Reads `label=value` pairs, e.g. `a=1,b=2`; unnamed vertices get 0.
    pub fn parse_labeled(g: &Graph, text: &str) -> Result<Self> {
        let mut f = IndexFunction::zero();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected label=value, got `{part}`")))?;
            let v = g.require(name.trim())?;
            let value: u32 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{part}`")))?;
            f.set(v, value);
        }
        Ok(f)
    }

    pub fn labeled(&self, g: &Graph) -> BTreeMap<String, u32> {
        (0..g.vertex_count())
            .map(|v| (g.label(v).to_string(), self.get(v)))
            .collect()
    }
}

impl fmt::Display for IndexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A polynomial in canonical form: each monomial at most once, no zero
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparsePolynomial {
    terms: BTreeMap<IndexFunction, BigInt>,
}

/// Serialized form of one term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exponents: BTreeMap<String, u32>,
    pub coefficient: String,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(IndexFunction::zero(), c)
    }

    pub fn monomial(exponent: IndexFunction, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        SparsePolynomial { terms }
    }

    /// The variable `x_v`.
    pub fn variable(v: usize) -> Self {
        Self::monomial(IndexFunction::unit(v), BigInt::one())
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (IndexFunction, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: IndexFunction, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexFunction, &BigInt)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `c_{P, eta}`: the coefficient of `x^eta`, zero if absent.
    pub fn coefficient(&self, eta: &IndexFunction) -> BigInt {
        self.terms.get(eta).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, alpha: &BigInt) -> Self {
        if alpha.is_zero() {
            return Self::zero();
        }
        SparsePolynomial {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * alpha)).collect(),
        }
    }

    /// `x^shift * self`.
    pub fn mul_monomial(&self, shift: &IndexFunction) -> Self {
        SparsePolynomial {
            terms: self.terms.iter().map(|(e, c)| (e.plus(shift), c.clone())).collect(),
        }
    }

    /// True iff `x_v` occurs in no term.
    pub fn is_dummy(&self, v: usize) -> bool {
        self.terms.keys().all(|e| e.get(v) == 0)
    }

    /// True iff every term has total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: u64) -> bool {
        self.terms.keys().all(|e| e.total() == d)
    }

    pub fn to_records(&self, g: &Graph) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(e, c)| TermRecord {
                exponents: e
                    .support()
                    .map(|v| {
                        let name = g.labels().get(v).cloned().unwrap_or_else(|| format!("x{v}"));
                        (name, e.get(v))
                    })
                    .collect(),
                coefficient: c.to_string(),
            })
            .collect()
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        SparsePolynomial {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.plus(e2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let mag = c.abs();
            let vars: Vec<String> = e
                .support()
                .map(|v| match e.get(v) {
                    1 => format!("x{v}"),
                    k => format!("x{v}^{k}"),
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Full expansion of `P_G` (default cap [`DEFAULT_EXPAND_EDGES`]).
pub fn graph_polynomial(g: &Graph) -> Result<SparsePolynomial> {
    graph_polynomial_with(g, DEFAULT_EXPAND_EDGES)
}

pub fn graph_polynomial_with(g: &Graph, max_edges: usize) -> Result<SparsePolynomial> {
    if g.edge_count() > max_edges {
        return Err(Error::TooManyEdges {
            what: "graph polynomial expansion",
            found: g.edge_count(),
            limit: max_edges,
        });
    }
    let mut p = SparsePolynomial::one();
    for &(u, v) in g.edges() {
        let factor = &SparsePolynomial::variable(v) - &SparsePolynomial::variable(u);
        p = &p * &factor;
    }
    Ok(p)
}

/// `c_{G, eta}` without expanding `P_G` (default cap
/// [`DEFAULT_COEFFICIENT_EDGES`]).
pub fn graph_coefficient(g: &Graph, eta: &IndexFunction) -> Result<BigInt> {
    graph_coefficient_with(g, eta, DEFAULT_COEFFICIENT_EDGES)
}

/// Sums `(-1)^{#factors contributing -x_u}` over all choices of one variable
/// per edge factor whose exponents add up to `eta`.
///
/// Choices are made edge by edge in [`Graph::elimination_edge_order`]; a
/// partial choice is cut as soon as some vertex still needs more exponent
/// than it has undecided incident edges. Partial choices leaving identical
/// residual demands are merged.
pub fn graph_coefficient_with(g: &Graph, eta: &IndexFunction, max_edges: usize) -> Result<BigInt> {
    let limit = max_edges.min(MAX_COEFFICIENT_EDGES);
    if g.edge_count() > limit {
        return Err(Error::TooManyEdges {
            what: "graph coefficient",
            found: g.edge_count(),
            limit,
        });
    }
    let n = g.vertex_count();
    if eta.support().any(|v| v >= n) || eta.total() != g.edge_count() as u64 {
        return Ok(BigInt::zero());
    }
    if (0..n).any(|v| eta.get(v) as usize > g.degree(v)) {
        return Ok(BigInt::zero());
    }
    let need: Vec<u8> = (0..n).map(|v| eta.get(v) as u8).collect();
    let mut remaining: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut states: HashMap<Vec<u8>, i128> = HashMap::from([(need, 1)]);
    for idx in g.elimination_edge_order() {
        let (a, b) = g.edges()[idx];
        remaining[a] -= 1;
        remaining[b] -= 1;
        let (ra, rb) = (remaining[a], remaining[b]);
        let mut next: HashMap<Vec<u8>, i128> = HashMap::with_capacity(states.len() * 2);
        for (state, value) in states {
            // x_b taken from (x_b - x_a): sign +; x_a taken: sign -.
            for (tail, sign) in [(b, 1i128), (a, -1i128)] {
                if state[tail] == 0 {
                    continue;
                }
                let mut s = state.clone();
                s[tail] -= 1;
                if s[a] as usize > ra || s[b] as usize > rb {
                    continue;
                }
                *next.entry(s).or_insert(0) += sign * value;
            }
        }
        next.retain(|_, v| *v != 0);
        states = next;
        if states.is_empty() {
            return Ok(BigInt::zero());
        }
    }
    let total: i128 = states.values().sum();
    Ok(BigInt::from(total))
}
