//! Truncated symmetric functions with integer coefficients in the monomial,
//! complete homogeneous, Schur and the two Grothendieck bases.
//!
//! Everything funnels through the monomial basis. Multiplication is a
//! convolution of exponent vectors, and the other bases are reached by
//! unitriangular solves whose pivot order depends on the target basis.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fillings::{k_coeff, kostka, r_coeff};
use crate::shapes::{partitions_of, partitions_up_to, Composition, Partition, SkewShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    M,
    H,
    S,
    BigG,
    SmallG,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::H, Basis::S, Basis::BigG, Basis::SmallG];

    pub fn symbol(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::H => 'h',
            Basis::S => 's',
            Basis::BigG => 'G',
            Basis::SmallG => 'g',
        }
    }

    pub fn from_symbol(c: char) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.symbol() == c)
    }

    /// Whether `B[ν/λ]` has a meaning.
    pub fn allows_skew(self) -> bool {
        matches!(self, Basis::BigG | Basis::SmallG)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next().and_then(Basis::from_symbol), chars.next()) {
            (Some(b), None) => Ok(b),
            _ => Err(Error::Unsupported(format!("unknown basis {s:?}; expected one of m, h, s, G, g"))),
        }
    }
}

impl Serialize for Basis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Basis {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub type Coeffs = BTreeMap<Partition, BigInt>;

/// `Σ c_λ B_λ` over partitions of size at most `degree_bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedExpansion {
    basis: Basis,
    degree_bound: usize,
    coeffs: Coeffs,
}

fn add_into(map: &mut Coeffs, key: &Partition, delta: BigInt) {
    if delta.is_zero() {
        return;
    }
    let entry = map.entry(key.clone()).or_insert_with(BigInt::zero);
    *entry += delta;
    if entry.is_zero() {
        map.remove(key);
    }
}

impl GradedExpansion {
    pub fn zero(basis: Basis, degree_bound: usize) -> Self {
        GradedExpansion { basis, degree_bound, coeffs: Coeffs::new() }
    }

    /// Builds an expansion, dropping zero coefficients and indices above the bound.
    pub fn from_coeffs(basis: Basis, degree_bound: usize, coeffs: Coeffs) -> Self {
        let mut e = GradedExpansion::zero(basis, degree_bound);
        for (k, v) in coeffs {
            e.add_term(&k, v);
        }
        e
    }

    /// `c · B_λ`, or zero when `|λ| > D`.
    pub fn term(basis: Basis, degree_bound: usize, index: Partition, coeff: impl Into<BigInt>) -> Self {
        let mut e = GradedExpansion::zero(basis, degree_bound);
        e.add_term(&index, coeff.into());
        e
    }

    pub fn constant(basis: Basis, degree_bound: usize, c: impl Into<BigInt>) -> Self {
        GradedExpansion::term(basis, degree_bound, Partition::empty(), c)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn coeffs(&self) -> &Coeffs {
        &self.coeffs
    }

    pub fn get(&self, index: &Partition) -> BigInt {
        self.coeffs.get(index).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in graded order: by size, reverse-lexicographic within a size.
    pub fn terms(&self) -> Vec<(&Partition, &BigInt)> {
        let mut t: Vec<_> = self.coeffs.iter().collect();
        t.sort_by(|a, b| a.0.graded_cmp(b.0));
        t
    }

    pub fn add_term(&mut self, index: &Partition, coeff: BigInt) {
        if index.size() <= self.degree_bound {
            add_into(&mut self.coeffs, index, coeff);
        }
    }

    /// Largest size of an index with a nonzero coefficient.
    pub fn top_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::size).max()
    }

    fn check_compatible(&self, other: &GradedExpansion) -> Result<()> {
        if self.degree_bound != other.degree_bound {
            return Err(Error::BoundMismatch(self.degree_bound, other.degree_bound));
        }
        Ok(())
    }

    /// Sum; operands in different bases meet in the monomial basis.
    pub fn add(&self, other: &GradedExpansion) -> Result<GradedExpansion> {
        self.check_compatible(other)?;
        let (a, b) =
            if self.basis == other.basis { (self.clone(), other.clone()) } else { (to_m(self)?, to_m(other)?) };
        let mut out = a;
        for (k, v) in b.coeffs {
            add_into(&mut out.coeffs, &k, v);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> GradedExpansion {
        let coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        GradedExpansion::from_coeffs(self.basis, self.degree_bound, coeffs)
    }

    pub fn neg(&self) -> GradedExpansion {
        self.scale(&BigInt::from(-1))
    }

    pub fn sub(&self, other: &GradedExpansion) -> Result<GradedExpansion> {
        self.add(&other.neg())
    }

    /// Same basis and coefficients at a different bound (dropping terms above it).
    pub fn with_bound(&self, degree_bound: usize) -> GradedExpansion {
        GradedExpansion::from_coeffs(self.basis, degree_bound, self.coeffs.clone())
    }

    /// `+ 2 G[2,1] - G[1]` style text, in graded order.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (idx, c)) in self.terms().into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&format!("{mag} "));
            }
            out.push_str(&format!("{}[{}]", self.basis, idx));
        }
        out
    }
}

impl fmt::Display for GradedExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  (degree <= {})", self.to_text(), self.degree_bound)
    }
}

/// JSON coefficient: a number when it fits in 64 bits, a decimal string otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    index: Partition,
    coeff: CoeffRepr,
}

#[derive(Serialize, Deserialize)]
struct ExpansionRepr {
    basis: Basis,
    degree_bound: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for GradedExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .into_iter()
            .map(|(k, v)| TermRepr {
                index: k.clone(),
                coeff: v.to_i64().map(CoeffRepr::Small).unwrap_or_else(|| CoeffRepr::Big(v.to_string())),
            })
            .collect();
        ExpansionRepr { basis: self.basis, degree_bound: self.degree_bound, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ExpansionRepr::deserialize(d)?;
        let mut e = GradedExpansion::zero(r.basis, r.degree_bound);
        for t in r.terms {
            let c = match t.coeff {
                CoeffRepr::Small(c) => BigInt::from(c),
                CoeffRepr::Big(s) => s.parse().map_err(serde::de::Error::custom)?,
            };
            if t.index.size() > r.degree_bound {
                return Err(serde::de::Error::custom(format!("index {} exceeds degree bound", t.index)));
            }
            e.add_term(&t.index, c);
        }
        Ok(e)
    }
}

type MemoKey = (Basis, Partition, Partition, usize);

fn memo() -> &'static RwLock<HashMap<MemoKey, Coeffs>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, Coeffs>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn monomial_column(basis: Basis, outer: &Partition, inner: &Partition, d: usize) -> Result<Coeffs> {
    let key = (basis, outer.clone(), inner.clone(), d);
    if let Some(c) = memo().read().unwrap().get(&key) {
        return Ok(c.clone());
    }
    let mut out = Coeffs::new();
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    match basis {
        Basis::M => {
            if outer.size() <= d {
                out.insert(outer.clone(), BigInt::one());
            }
        }
        Basis::H => {
            let mut acc = GradedExpansion::constant(Basis::M, d, 1);
            for &k in outer.parts() {
                let hk: Coeffs = partitions_of(k).into_iter().map(|p| (p, BigInt::one())).collect();
                acc = multiply_m(&acc, &GradedExpansion::from_coeffs(Basis::M, d, hk));
            }
            out = acc.coeffs;
        }
        Basis::S => {
            if outer.size() <= d {
                for mu in partitions_of(outer.size()) {
                    add_into(&mut out, &mu, BigInt::from(kostka(outer, &Composition::from(&mu))));
                }
            }
        }
        Basis::BigG => {
            for mu in partitions_up_to(d).into_iter().filter(|m| m.size() >= shape.num_cells()) {
                add_into(&mut out, &mu, BigInt::from(k_coeff(&shape, &Composition::from(&mu))));
            }
        }
        Basis::SmallG => {
            for mu in partitions_up_to(d.min(shape.num_cells())) {
                add_into(&mut out, &mu, BigInt::from(r_coeff(&shape, &Composition::from(&mu))));
            }
        }
    }
    memo().write().unwrap().insert(key, out.clone());
    Ok(out)
}

/// Monomial expansion of `B_{ν/λ}` truncated at degree `D`. Skew indices
/// are only meaningful for `G` and `g`; pass the empty partition otherwise.
pub fn expand_to_m_skew(basis: Basis, outer: &Partition, inner: &Partition, d: usize) -> Result<GradedExpansion> {
    if !inner.is_empty() && !basis.allows_skew() {
        return Err(Error::Unsupported(format!("skew not supported for basis {basis}")));
    }
    Ok(GradedExpansion { basis: Basis::M, degree_bound: d, coeffs: monomial_column(basis, outer, inner, d)? })
}

pub fn expand_to_m(basis: Basis, lambda: &Partition, d: usize) -> Result<GradedExpansion> {
    expand_to_m_skew(basis, lambda, &Partition::empty(), d)
}

/// Re-expands in the monomial basis.
pub fn to_m(e: &GradedExpansion) -> Result<GradedExpansion> {
    if e.basis == Basis::M {
        return Ok(e.clone());
    }
    let mut out = GradedExpansion::zero(Basis::M, e.degree_bound);
    for (idx, c) in &e.coeffs {
        for (k, v) in monomial_column(e.basis, idx, &Partition::empty(), e.degree_bound)? {
            add_into(&mut out.coeffs, &k, v * c);
        }
    }
    Ok(out)
}

fn multiply_m(a: &GradedExpansion, b: &GradedExpansion) -> GradedExpansion {
    let d = a.degree_bound;
    let mut out = GradedExpansion::zero(Basis::M, d);
    let max_a = a.top_degree().unwrap_or(0);
    let min_a = a.coeffs.keys().map(Partition::size).min().unwrap_or(0);
    let min_b = b.coeffs.keys().map(Partition::size).min().unwrap_or(0);
    if a.is_zero() || b.is_zero() {
        return out;
    }
    for nu in partitions_up_to(d).into_iter().filter(|n| n.size() >= min_a + min_b) {
        // coefficient of x^ν: split ν = α + β over its own variables
        let parts = nu.parts();
        let mut alpha = vec![0usize; parts.len()];
        let mut total = BigInt::zero();
        loop {
            let sa: usize = alpha.iter().sum();
            if sa <= max_a {
                let beta: Vec<usize> = parts.iter().zip(&alpha).map(|(n, a)| n - a).collect();
                if let (Some(x), Some(y)) = (
                    a.coeffs.get(&Partition::from_unsorted(alpha.clone())),
                    b.coeffs.get(&Partition::from_unsorted(beta)),
                ) {
                    total += x * y;
                }
            }
            let Some(i) = (0..alpha.len()).find(|&i| alpha[i] < parts[i]) else { break };
            alpha[i] += 1;
            alpha[..i].iter_mut().for_each(|x| *x = 0);
        }
        out.add_term(&nu, total);
    }
    out
}

/// Product, computed in the monomial basis and returned there.
pub fn multiply(a: &GradedExpansion, b: &GradedExpansion) -> Result<GradedExpansion> {
    a.check_compatible(b)?;
    Ok(multiply_m(&to_m(a)?, &to_m(b)?))
}

/// Pivot order for the solve into `basis`; the smallest key is eliminated first.
fn pivot_key(basis: Basis, p: &Partition) -> (usize, Reverse<usize>, Vec<usize>, Reverse<Vec<usize>>) {
    let parts = p.parts().to_vec();
    match basis {
        Basis::S | Basis::BigG => (p.size(), Reverse(0), Vec::new(), Reverse(parts)),
        Basis::SmallG => (0, Reverse(p.size()), Vec::new(), Reverse(parts)),
        Basis::H => (p.size(), Reverse(0), parts, Reverse(Vec::new())),
        Basis::M => (p.size(), Reverse(0), Vec::new(), Reverse(Vec::new())),
    }
}

/// Solves `rest = Σ x_λ · column(λ)` for `x`, where each column is
/// unitriangular with respect to `pivot_key(target, ·)`.
fn triangular_solve(
    mut rest: Coeffs,
    target: Basis,
    d: usize,
    column: impl Fn(&Partition) -> Result<Coeffs>,
) -> Result<GradedExpansion> {
    let mut out = GradedExpansion::zero(target, d);
    while let Some(lead) = rest.keys().min_by_key(|p| pivot_key(target, p)).cloned() {
        let c = rest[&lead].clone();
        let col = column(&lead)?;
        let lead_key = pivot_key(target, &lead);
        let unitriangular = col.get(&lead).is_some_and(One::is_one)
            && col.keys().all(|k| k == &lead || pivot_key(target, k) > lead_key);
        if !unitriangular {
            return Err(Error::NonInvertible { basis: target.symbol(), index: lead.to_string() });
        }
        for (k, v) in col {
            add_into(&mut rest, &k, -(v * &c));
        }
        out.add_term(&lead, c);
    }
    Ok(out)
}

fn h_in_s(mu: &Partition) -> Coeffs {
    let mu_c = Composition::from(mu);
    partitions_of(mu.size())
        .into_iter()
        .map(|l| {
            let k = kostka(&l, &mu_c);
            (l, BigInt::from(k))
        })
        .filter(|(_, k)| !k.is_zero())
        .collect()
}

fn from_m(e: &GradedExpansion, target: Basis) -> Result<GradedExpansion> {
    let d = e.degree_bound;
    match target {
        Basis::M => Ok(e.clone()),
        Basis::H => {
            let s = from_m(e, Basis::S)?;
            triangular_solve(s.coeffs, Basis::H, d, |mu| Ok(h_in_s(mu)))
        }
        _ => triangular_solve(e.coeffs.clone(), target, d, |p| monomial_column(target, p, &Partition::empty(), d)),
    }
}

/// Exact re-expansion in `target`, truncated at the same bound.
pub fn change_basis(e: &GradedExpansion, target: Basis) -> Result<GradedExpansion> {
    if e.basis == target {
        return Ok(e.clone());
    }
    from_m(&to_m(e)?, target)
}

/// `⟨a, b⟩` with `⟨m_λ, h_μ⟩ = δ_{λμ}`. Truncation makes this exact only when
/// at least one side vanishes in the top degree `D`.
pub fn hall_pair(a: &GradedExpansion, b: &GradedExpansion) -> Result<BigInt> {
    a.check_compatible(b)?;
    let am = to_m(a)?;
    let bh = change_basis(b, Basis::H)?;
    let d = a.degree_bound;
    if am.top_degree() == Some(d) && bh.top_degree() == Some(d) {
        return Err(Error::InsufficientDegree { need: d + 1, have: d });
    }
    Ok(am.coeffs.iter().map(|(k, v)| v * bh.get(k)).sum())
}
