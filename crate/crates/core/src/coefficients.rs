//! Three independent computations of `c_{λμ}^ν` (counting column
//! `λ`-Yamanouchi set-valued tableaux, multiplying `G_λ G_μ`, and expanding
//! skew `g_{ν/λ}`), together with a shared record cache.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fillings::{self, column_word, is_yamanouchi, r_coeff, Constraint, FillingClass};
use crate::inflated::{enumerate_augmented, AugmentedKind, TopConstraint};
use crate::shapes::{partitions_up_to, subpartitions, subtract, Composition, Partition, SkewShape};
use crate::symfunc::{change_basis, expand_to_m, expand_to_m_skew, multiply, Basis, GradedExpansion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Route {
    #[serde(rename = "BUCH_COUNT")]
    Buch,
    #[serde(rename = "G_PRODUCT")]
    Product,
    #[serde(rename = "G_DUAL")]
    Dual,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Buch, Route::Product, Route::Dual];

    pub fn name(self) -> &'static str {
        match self {
            Route::Buch => "BUCH_COUNT",
            Route::Product => "G_PRODUCT",
            Route::Dual => "G_DUAL",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "buch" | "BUCH_COUNT" => Ok(Route::Buch),
            "product" | "G_PRODUCT" => Ok(Route::Product),
            "dual" | "G_DUAL" => Ok(Route::Dual),
            _ => Err(Error::Unsupported(format!("unknown route {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRecord {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub value: i64,
    pub route: Route,
}

fn sign(excess: usize) -> i64 {
    if excess.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn small(v: BigInt) -> Result<i64> {
    v.to_i64().ok_or_else(|| Error::Invariant(format!("coefficient {v} overflows 64 bits")))
}

/// Signed count of set-valued tableaux of shape `μ` and weight `ν − λ`
/// whose column word is `λ`-Yamanouchi.
pub fn c_buch(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let Ok(alpha) = subtract(nu, lambda) else { return 0 };
    if alpha.size() < mu.size() {
        return 0;
    }
    let mut n = 0i64;
    fillings::for_each(mu.parts(), &[], FillingClass::Svt, &Constraint::Weight(alpha.clone()), &mut |s| {
        if is_yamanouchi(&column_word(s), lambda) {
            n += 1;
        }
    })
    .expect("straight shape");
    sign(alpha.size() - mu.size()) * n
}

type ProductKey = (Partition, Partition, usize);

fn product_memo() -> &'static RwLock<HashMap<ProductKey, GradedExpansion>> {
    static MEMO: OnceLock<RwLock<HashMap<ProductKey, GradedExpansion>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `G_λ · G_μ` in the `G` basis, truncated at `D`.
pub fn g_product(lambda: &Partition, mu: &Partition, d: usize) -> Result<GradedExpansion> {
    let key = (lambda.clone(), mu.clone(), d);
    if let Some(e) = product_memo().read().unwrap().get(&key) {
        return Ok(e.clone());
    }
    let p = multiply(&expand_to_m(Basis::BigG, lambda, d)?, &expand_to_m(Basis::BigG, mu, d)?)?;
    let e = change_basis(&p, Basis::BigG)?;
    product_memo().write().unwrap().insert(key, e.clone());
    Ok(e)
}

/// Coefficient of `G_ν` in `G_λ G_μ`, computed with degree bound `D`.
pub fn c_product(lambda: &Partition, mu: &Partition, nu: &Partition, d: usize) -> Result<i64> {
    if d < nu.size() {
        return Err(Error::InsufficientDegree { need: nu.size(), have: d });
    }
    small(g_product(lambda, mu, d)?.get(nu))
}

/// `g_{ν/λ}` in the `g` basis and the bound at which it was certified: the
/// bound starts at `|ν/λ|` and is raised until two successive bounds agree.
pub fn skew_g_expansion(nu: &Partition, lambda: &Partition) -> Result<(GradedExpansion, usize)> {
    type Key = (Partition, Partition);
    static MEMO: OnceLock<RwLock<HashMap<Key, (GradedExpansion, usize)>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let key = (nu.clone(), lambda.clone());
    if let Some(v) = memo.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let cells = SkewShape::new(nu.clone(), lambda.clone())?.num_cells();
    let at = |d: usize| -> Result<GradedExpansion> {
        change_basis(&expand_to_m_skew(Basis::SmallG, nu, lambda, d)?, Basis::SmallG)
    };
    let mut d = cells;
    let mut prev = at(d)?;
    loop {
        let next = at(d + 1)?;
        if next.coeffs() == prev.coeffs() {
            break;
        }
        prev = next;
        d += 1;
    }
    let v = (prev.with_bound(d), d);
    memo.write().unwrap().insert(key, v.clone());
    Ok(v)
}

/// Coefficient of `g_μ` in `g_{ν/λ}`.
pub fn c_dual(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    small(skew_g_expansion(nu, lambda)?.0.get(mu))
}

/// `g_{ν/λ} = Σ s_{shape(T)}` over semistandard `T` with `ιwt(T * T_λ) = ν`.
pub fn skew_g_schur_expand(nu: &Partition, lambda: &Partition) -> Result<GradedExpansion> {
    let shape = SkewShape::new(nu.clone(), lambda.clone())?;
    let mut out = GradedExpansion::zero(Basis::S, shape.num_cells());
    for a in enumerate_augmented(lambda, AugmentedKind::Ssyt, nu, &TopConstraint::AnyShape, None)? {
        let sigma = a.top.straight_shape().expect("straight tops");
        out.add_term(&sigma, BigInt::from(1));
    }
    Ok(out)
}

/// `G_λ · h_α` in the `G` basis, truncated at `D`.
pub fn pieri_g(lambda: &Partition, alpha: &Composition, d: usize) -> Result<GradedExpansion> {
    let need = lambda.size() + alpha.size();
    if d < need {
        return Err(Error::InsufficientDegree { need, have: d });
    }
    let p = multiply(&expand_to_m(Basis::BigG, lambda, d)?, &expand_to_m(Basis::H, &alpha.sorted(), d)?)?;
    change_basis(&p, Basis::BigG)
}

/// `Σ_ν r_{ν/λ,α} G_ν` over `|ν| ≤ D`, the right side of the Pieri rule.
pub fn pieri_g_by_rpp(lambda: &Partition, alpha: &Composition, d: usize) -> GradedExpansion {
    let mut out = GradedExpansion::zero(Basis::BigG, d);
    for nu in partitions_up_to(d).into_iter().filter(|n| n.contains(lambda)) {
        let shape = SkewShape::new(nu.clone(), lambda.clone()).expect("contained");
        out.add_term(&nu, BigInt::from(r_coeff(&shape, alpha)));
    }
    out
}

/// Littlewood–Richardson number: the coefficient of `s_ν` in `s_λ s_μ`,
/// multiplied out in the monomial basis.
pub fn classical_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<i64> {
    if nu.size() != lambda.size() + mu.size() {
        return Ok(0);
    }
    let d = nu.size();
    let p = multiply(&expand_to_m(Basis::S, lambda, d)?, &expand_to_m(Basis::S, mu, d)?)?;
    small(change_basis(&p, Basis::S)?.get(nu))
}

/// Concurrent-read record store, optionally mirrored to an NDJSON file.
#[derive(Debug, Default)]
pub struct CoefficientCache {
    path: Option<PathBuf>,
    records: RwLock<HashMap<(Partition, Partition, Partition, Route), i64>>,
    file: Mutex<()>,
}

impl CoefficientCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads the records of `path`, which need not exist yet.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut records = HashMap::new();
        if path.exists() {
            let text = fs::read_to_string(&path).map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                let r: CoefficientRecord = serde_json::from_str(line)?;
                records.insert((r.lambda, r.mu, r.nu, r.route), r.value);
            }
        }
        Ok(CoefficientCache { path: Some(path), records: RwLock::new(records), file: Mutex::new(()) })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition, nu: &Partition, route: Route) -> Option<i64> {
        let key = (lambda.clone(), mu.clone(), nu.clone(), route);
        self.records.read().unwrap().get(&key).copied()
    }

    pub fn insert(&self, record: &CoefficientRecord) -> Result<()> {
        let key = (record.lambda.clone(), record.mu.clone(), record.nu.clone(), record.route);
        let fresh = self.records.write().unwrap().insert(key, record.value).is_none();
        if let (true, Some(path)) = (fresh, &self.path) {
            let _guard = self.file.lock().unwrap();
            let mut f = fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
            writeln!(f, "{}", serde_json::to_string(record)?).map_err(|e| Error::Json(e.to_string()))?;
        }
        Ok(())
    }

    /// Records sorted by triple and route.
    pub fn records(&self) -> Vec<CoefficientRecord> {
        let mut out: Vec<CoefficientRecord> = self
            .records
            .read()
            .unwrap()
            .iter()
            .map(|((l, m, n, r), &v)| CoefficientRecord {
                lambda: l.clone(),
                mu: m.clone(),
                nu: n.clone(),
                value: v,
                route: *r,
            })
            .collect();
        out.sort_by(|a, b| {
            a.nu.graded_cmp(&b.nu)
                .then_with(|| a.lambda.graded_cmp(&b.lambda))
                .then_with(|| a.mu.graded_cmp(&b.mu))
                .then(a.route.cmp(&b.route))
        });
        out
    }

    /// Forgets every record and truncates the backing file.
    pub fn clear(&self) -> Result<()> {
        self.records.write().unwrap().clear();
        if let Some(path) = &self.path {
            let _guard = self.file.lock().unwrap();
            fs::write(path, "").map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
        }
        Ok(())
    }
}

/// `c_{λμ}^ν` by one route, consulting and filling `cache`. The product
/// route uses the bound `D`, defaulting to `|ν|`.
pub fn coefficient(
    route: Route,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    d: Option<usize>,
    cache: Option<&CoefficientCache>,
) -> Result<CoefficientRecord> {
    if let Some(v) = cache.and_then(|c| c.get(lambda, mu, nu, route)) {
        return Ok(CoefficientRecord { lambda: lambda.clone(), mu: mu.clone(), nu: nu.clone(), value: v, route });
    }
    let value = match route {
        Route::Buch => c_buch(lambda, mu, nu),
        Route::Product => c_product(lambda, mu, nu, d.unwrap_or(nu.size()))?,
        Route::Dual => c_dual(lambda, mu, nu)?,
    };
    let rec = CoefficientRecord { lambda: lambda.clone(), mu: mu.clone(), nu: nu.clone(), value, route };
    if let Some(c) = cache {
        c.insert(&rec)?;
    }
    Ok(rec)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub buch: i64,
    pub product: i64,
    pub dual: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
    /// Bound used for the product route.
    pub degree_bound: usize,
    /// Largest bound at which a skew `g` expansion was certified stable.
    pub dual_certified_bound: usize,
}

impl CrossReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Triples `(λ, μ, ν)` with `λ, μ ⊆ ν` and `|ν| ≤ n`: `ν` in graded order,
/// then `λ`, then `μ`.
pub fn triples(n: usize) -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for nu in partitions_up_to(n) {
        let subs = subpartitions(&nu);
        for l in &subs {
            for m in &subs {
                out.push((l.clone(), m.clone(), nu.clone()));
            }
        }
    }
    out
}

/// Checks all three routes agree on every triple with `|ν| ≤ n`. Triples
/// are evaluated in parallel; the report lists mismatches in triple order.
pub fn cross_validate(n: usize, cache: Option<&CoefficientCache>) -> Result<CrossReport> {
    let all = triples(n);
    let results: Vec<Result<(Option<Mismatch>, usize)>> = all
        .par_iter()
        .map(|(l, m, nu)| {
            let get = |r| coefficient(r, l, m, nu, Some(n), cache).map(|rec| rec.value);
            let (buch, product, dual) = (get(Route::Buch)?, get(Route::Product)?, get(Route::Dual)?);
            let bound = skew_g_expansion(nu, l)?.1;
            let bad = buch != product || buch != dual;
            let mm = bad.then(|| Mismatch { lambda: l.clone(), mu: m.clone(), nu: nu.clone(), buch, product, dual });
            Ok((mm, bound))
        })
        .collect();
    let mut report =
        CrossReport { checked: all.len(), mismatches: Vec::new(), degree_bound: n, dual_certified_bound: 0 };
    for r in results {
        let (mm, bound) = r?;
        report.mismatches.extend(mm);
        report.dual_certified_bound = report.dual_certified_bound.max(bound);
    }
    Ok(report)
}

/// `Σ_μ c_buch(λ, μ, ν) g_μ`.
pub fn dual_by_buch(nu: &Partition, lambda: &Partition) -> GradedExpansion {
    let cells = nu.size().saturating_sub(lambda.size());
    let mut out = GradedExpansion::zero(Basis::SmallG, cells);
    for mu in partitions_up_to(cells) {
        let c = c_buch(lambda, &mu, nu);
        if c != 0 {
            out.add_term(&mu, BigInt::from(c));
        }
    }
    out
}

/// Whether the Schur form of `g_{ν/λ}` has the same monomial expansion as
/// the reverse plane partition count.
pub fn skew_g_consistent(nu: &Partition, lambda: &Partition) -> Result<bool> {
    let s = skew_g_schur_expand(nu, lambda)?;
    let via_s = change_basis(&s, Basis::M)?;
    let direct = expand_to_m_skew(Basis::SmallG, nu, lambda, s.degree_bound())?;
    Ok(via_s == direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn buch_examples() {
        assert_eq!(c_buch(&part![1], &part![1], &part![2]), 1);
        assert_eq!(c_buch(&part![1], &part![1], &part![2, 1]), -1);
        assert_eq!(c_buch(&part![], &part![2, 1], &part![2, 1]), 1);
        assert_eq!(c_buch(&part![], &part![2], &part![1, 1]), 0);
        assert_eq!(c_buch(&part![2], &part![1], &part![1, 1]), 0);
    }

    #[test]
    fn product_examples() {
        assert_eq!(c_product(&part![1], &part![1], &part![2], 4).unwrap(), 1);
        assert_eq!(c_product(&part![1], &part![1], &part![2, 1], 4).unwrap(), -1);
        assert_eq!(c_product(&part![], &part![1], &part![1], 4).unwrap(), 1);
        assert_eq!(
            c_product(&part![1], &part![1], &part![2, 1], 2).unwrap_err(),
            Error::InsufficientDegree { need: 3, have: 2 }
        );
    }

    #[test]
    fn dual_examples() {
        assert_eq!(c_dual(&part![1], &part![2], &part![2, 1]).unwrap(), 1);
        assert_eq!(c_dual(&part![1], &part![1, 1], &part![2, 1]).unwrap(), 1);
        assert_eq!(c_dual(&part![1], &part![1], &part![2, 1]).unwrap(), -1);
        assert_eq!(c_dual(&part![2, 1], &part![], &part![2, 1]).unwrap(), 1);
        assert_eq!(c_dual(&part![], &part![2, 1], &part![2, 1]).unwrap(), 1);
        assert_eq!(c_dual(&part![], &part![2], &part![2, 1]).unwrap(), 0);
        assert!(matches!(c_dual(&part![3], &part![], &part![2, 1]), Err(Error::NotContained(_))));
    }

    #[test]
    fn schur_form_of_skew_g() {
        let e = skew_g_schur_expand(&part![2, 1], &part![1]).unwrap();
        assert_eq!(e.to_text(), "s[2] + s[1,1]");
        let e = skew_g_schur_expand(&part![2, 1], &part![2, 1]).unwrap();
        assert_eq!(e.to_text(), "s[]");
        assert!(skew_g_consistent(&part![3, 2, 1], &part![1]).unwrap());
    }

    #[test]
    fn pieri_examples() {
        let e = pieri_g(&part![1], &Composition::new(vec![1]), 4).unwrap();
        assert_eq!(e.get(&part![2]), BigInt::from(1));
        assert_eq!(e, pieri_g_by_rpp(&part![1], &Composition::new(vec![1]), 4));
        let e = pieri_g(&part![1], &Composition::new(vec![]), 4).unwrap();
        assert_eq!(e.to_text(), "G[1]");
    }

    #[test]
    fn small_cross_validation() {
        let r = cross_validate(3, None).unwrap();
        assert!(r.passed(), "{:?}", r.mismatches);
        assert_eq!(r.checked, triples(3).len());
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("kschub-cache-{}", std::process::id()));
        let _ = fs::remove_file(&dir);
        let cache = CoefficientCache::open(&dir).unwrap();
        let rec = coefficient(Route::Buch, &part![1], &part![1], &part![2, 1], None, Some(&cache)).unwrap();
        assert_eq!(rec.value, -1);
        let again = CoefficientCache::open(&dir).unwrap();
        assert_eq!(again.records(), vec![rec]);
        again.clear().unwrap();
        assert!(CoefficientCache::open(&dir).unwrap().records().is_empty());
        fs::remove_file(&dir).unwrap();
    }
}
