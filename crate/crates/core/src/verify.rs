//! Exhaustive consistency suites over all shapes up to a size bound.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijections::{dilate, partial_inverse, partial_map, phi, phi_t_fiber, tau};
use crate::coefficients::{
    c_buch, classical_lr, cross_validate, dual_by_buch, pieri_g, pieri_g_by_rpp, skew_g_consistent, skew_g_expansion,
    triples, CoefficientCache,
};
use crate::error::{Error, Result};
use crate::fillings::{self, elegant_count, k_coeff, kostka, sv_row_word, validate, Constraint, Filling, FillingClass};
use crate::inflated::{
    check_yamanouchi_weight_equivalence, enumerate_augmented, inflate_svt, inflate_svt_by_columns, inflated_weight,
    AugmentedFilling, AugmentedKind, TopConstraint,
};
use crate::rsk::insertion_tableau;
use crate::shapes::{compositions_of, partitions_up_to, subpartitions, Composition, Partition, SkewShape};
use crate::symfunc::{change_basis, expand_to_m, hall_pair, Basis, GradedExpansion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Involution,
    Bijection,
    Duality,
    Routes,
    Basis,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Involution, Suite::Bijection, Suite::Duality, Suite::Routes, Suite::Basis];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "involution" => Suite::Involution,
            "bijection" => Suite::Bijection,
            "duality" => Suite::Duality,
            "routes" => Suite::Routes,
            "basis" => Suite::Basis,
            "all" => Suite::All,
            _ => return Err(Error::Unsupported(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).unwrap();
        f.write_str(s.as_str().unwrap())
    }
}

const MAX_WITNESSES: usize = 10;

/// Outcome of one property over its range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn new(name: &str) -> Self {
        Check { name: name.into(), checked: 0, failed: 0, witnesses: Vec::new() }
    }

    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    fn merge(&mut self, other: Check) {
        self.checked += other.checked;
        self.failed += other.failed;
        let room = MAX_WITNESSES.saturating_sub(self.witnesses.len());
        self.witnesses.extend(other.witnesses.into_iter().take(room));
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: Suite,
    pub max_size: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed() { "ok  " } else { "FAIL" };
            out.push_str(&format!("{status} {:<40} {:>7} checked, {} failed\n", c.name, c.checked, c.failed));
            for w in &c.witnesses {
                out.push_str(&format!("       {w}\n"));
            }
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{verdict}: suite {} at max size {}\n", self.suite, self.max_size));
        out
    }
}

/// Runs `suite` over every shape of size at most `n`.
pub fn run(suite: Suite, n: usize, cache: Option<&CoefficientCache>) -> Result<Report> {
    let checks = match suite {
        Suite::Involution => involution(n)?,
        Suite::Bijection => bijection(n)?,
        Suite::Duality => duality(n)?,
        Suite::Routes => routes(n, cache)?,
        Suite::Basis => basis(n)?,
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::EACH {
                all.extend(run(s, n, cache)?.checks);
            }
            all
        }
    };
    Ok(Report { suite, max_size: n, checks })
}

fn pairs(n: usize) -> Vec<(Partition, Partition)> {
    partitions_up_to(n)
        .into_iter()
        .flat_map(|nu| subpartitions(&nu).into_iter().map(move |l| (nu.clone(), l)))
        .collect()
}

fn merge_all(names: &[&str], parts: Vec<Vec<Check>>) -> Vec<Check> {
    let mut out: Vec<Check> = names.iter().map(|n| Check::new(n)).collect();
    for part in parts {
        for (acc, c) in out.iter_mut().zip(part) {
            acc.merge(c);
        }
    }
    out
}

/// `τ` on every augmented set-valued tableau with `ιwt = ν`, `λ ⊆ ν`, `|ν| ≤ n`.
pub fn involution(n: usize) -> Result<Vec<Check>> {
    let names = [
        "tau is an involution",
        "tau reverses sign off its fixed points",
        "tau preserves inflated weight and shape",
        "tau fixed points are column Yamanouchi with wt = nu",
        "signed sum equals signed fixed-point count",
        "fixed points count |c_buch|",
    ];
    let parts = pairs(n)
        .par_iter()
        .map(|(nu, lambda)| -> Result<Vec<Check>> {
            let mut c: Vec<Check> = names.iter().map(|n| Check::new(n)).collect();
            let all = enumerate_augmented(lambda, AugmentedKind::Svt, nu, &TopConstraint::AnyShape, None)?;
            let mut by_shape: BTreeMap<Partition, (i64, i64)> = BTreeMap::new();
            for a in &all {
                let out = tau(a)?;
                let eta = a.top.straight_shape().expect("straight");
                let entry = by_shape.entry(eta.clone()).or_default();
                entry.0 += if a.top.excess() % 2 == 0 { 1 } else { -1 };
                match &out.toggle {
                    Some(_) => {
                        let b = &out.result;
                        let back = tau(b)?;
                        c[0].expect(back.result == *a && back.toggle.is_some(), || format!("{a:?}"));
                        c[1].expect(a.top.excess().abs_diff(b.top.excess()) == 1, || format!("{a:?}"));
                        c[2].expect(inflated_weight(b) == *nu && b.top.straight_shape() == Some(eta.clone()), || {
                            format!("{a:?} -> {b:?}")
                        });
                        c[3].expect(!a.is_column_yamanouchi(), || format!("moved Yamanouchi {a:?}"));
                    }
                    None => {
                        entry.1 += 1;
                        c[3].expect(a.is_column_yamanouchi() && a.weight() == *nu, || format!("{a:?}"));
                    }
                }
            }
            for eta in partitions_up_to(nu.size() - lambda.size()) {
                let (signed, fixed) = by_shape.get(&eta).copied().unwrap_or_default();
                let s = if (nu.size() - lambda.size() - eta.size()) % 2 == 0 { 1 } else { -1 };
                c[4].expect(signed == s * fixed, || format!("nu={nu:?} lambda={lambda:?} eta={eta:?}"));
                let buch = c_buch(lambda, &eta, nu);
                c[5].expect(buch == s * fixed, || {
                    format!("nu={nu:?} lambda={lambda:?} eta={eta:?}: {fixed} fixed, c_buch {buch}")
                });
            }
            Ok(c)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merge_all(&names, parts))
}

fn tabloid_checks(n: usize) -> Result<Vec<Check>> {
    let mut yam = Check::new("tabloid Yamanouchi iff inflated weight = wt");
    for lambda in partitions_up_to(n) {
        for k in 1..=n - lambda.size() {
            for rows in compositions_of(k) {
                for weight in compositions_of(k) {
                    let all = fillings::enumerate_tabloids(&rows, &Constraint::Weight(weight.clone()))?;
                    for t in all {
                        let a = AugmentedFilling::new(t, lambda.clone());
                        let (y, eq) = check_yamanouchi_weight_equivalence(&a)?;
                        yam.expect(y == eq, || format!("{a:?}: yamanouchi {y}, equal {eq}"));
                    }
                }
            }
        }
    }
    Ok(vec![yam])
}

fn svt_inflation_checks(n: usize) -> Result<Vec<Check>> {
    let mut orders = Check::new("row and column order inflated weights agree");
    let mut yam = Check::new("SVT Yamanouchi gives wt and interval columns");
    for lambda in partitions_up_to(n) {
        for k in 1..=n - lambda.size() {
            for weight in compositions_of(k) {
                for eta in partitions_up_to(k).into_iter().filter(|e| !e.is_empty()) {
                    fillings::for_each(
                        eta.parts(),
                        &[],
                        FillingClass::Svt,
                        &Constraint::Weight(weight.clone()),
                        &mut |s| {
                            let a = AugmentedFilling::new(s.clone(), lambda.clone());
                            let by_rows = inflate_svt(&a);
                            let by_cols = inflate_svt_by_columns(&a);
                            orders.expect(by_rows.inflated_weight() == by_cols.inflated_weight(), || format!("{a:?}"));
                            if a.is_column_yamanouchi() {
                                yam.expect(
                                    a.weight() == by_rows.inflated_weight() && by_rows.has_interval_columns(),
                                    || format!("{a:?}"),
                                );
                            }
                        },
                    )?;
                }
            }
        }
    }
    Ok(vec![orders, yam])
}

fn partial_checks(n: usize) -> Result<Vec<Check>> {
    let mut inverse = Check::new("partial map inverts on its image");
    let mut counts = Check::new("RPP count equals tabloid count");
    for (nu, lambda) in pairs(n) {
        let shape = SkewShape::new(nu.clone(), lambda.clone())?;
        for k in 0..=shape.num_cells() {
            for alpha in compositions_of(k) {
                let rpps = fillings::enumerate(&shape, FillingClass::Rpp, &Constraint::Weight(alpha.clone()))?;
                let tabs = enumerate_augmented(
                    &lambda,
                    AugmentedKind::Tabloid,
                    &nu,
                    &TopConstraint::RowLengths(alpha.clone()),
                    None,
                )?;
                let mut images = BTreeSet::new();
                for r in &rpps {
                    let a = partial_map(r)?;
                    let ok = Composition::new(a.top.row_lengths()) == alpha
                        && inflated_weight(&a) == nu
                        && partial_inverse(&a, &nu).as_ref() == Ok(r);
                    inverse.expect(ok, || format!("{r:?}"));
                    images.insert(a.top.to_notation());
                }
                let expected: BTreeSet<String> = tabs.iter().map(|a| a.top.to_notation()).collect();
                counts.expect(images == expected, || {
                    format!("nu={nu:?} lambda={lambda:?} alpha={alpha:?}: {} RPP, {} tabloids", rpps.len(), tabs.len())
                });
            }
        }
    }
    Ok(vec![inverse, counts])
}

fn dilation_checks(n: usize) -> Result<Vec<Check>> {
    let mut knuth = Check::new("dilation preserves Knuth class of sw");
    let mut iwt = Check::new("dilation preserves inflated weight");
    let lambdas = partitions_up_to(2);
    for k in 1..=n {
        for weight in compositions_of(k) {
            for eta in partitions_up_to(k - 1).into_iter().filter(|e| !e.is_empty()) {
                let mut res = Ok(());
                fillings::for_each(
                    eta.parts(),
                    &[],
                    FillingClass::Svt,
                    &Constraint::Weight(weight.clone()),
                    &mut |s| {
                        if !s.has_multicell() || res.is_err() {
                            return;
                        }
                        match dilate(s) {
                            Ok((d, _)) => {
                                knuth.expect(
                                    insertion_tableau(&sv_row_word(s)) == insertion_tableau(&sv_row_word(&d))
                                        && d.content() == s.content(),
                                    || format!("{s:?} -> {d:?}"),
                                );
                                for l in &lambdas {
                                    let before = inflated_weight(&AugmentedFilling::new(s.clone(), l.clone()));
                                    let after = inflated_weight(&AugmentedFilling::new(d.clone(), l.clone()));
                                    iwt.expect(before == after, || format!("{s:?} over {l:?}"));
                                }
                            }
                            Err(e) => res = Err(e),
                        }
                    },
                )?;
                res?;
            }
        }
    }
    Ok(vec![knuth, iwt])
}

fn fiber_checks(n: usize) -> Result<Vec<Check>> {
    let mut sizes = Check::new("phi_T fibers are counted by elegant fillings");
    let mut images = Check::new("phi_T maps fibers onto elegant fillings");
    for k in 1..=n {
        for weight in compositions_of(k) {
            for mu in partitions_of_len(k, weight.len()) {
                for t in fillings::enumerate(
                    &SkewShape::straight(mu.clone()),
                    FillingClass::Ssyt,
                    &Constraint::Weight(weight.clone()),
                )? {
                    for eta in subpartitions(&mu).into_iter().filter(|e| !e.is_empty()) {
                        let fiber = phi_t_fiber(&t, &eta)?;
                        let f = elegant_count(&mu, &eta);
                        sizes
                            .expect(fiber.len() as u64 == f, || format!("T={t:?} eta={eta:?}: {} vs {f}", fiber.len()));
                        let mut seen = BTreeSet::new();
                        for s in &fiber {
                            let p = phi(s)?;
                            images.expect(
                                p.terminal == t
                                    && validate(&p.elegant, FillingClass::Elegant)
                                    && seen.insert(p.elegant.to_notation()),
                                || format!("{s:?}"),
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(vec![sizes, images])
}

fn partitions_of_len(k: usize, max_len: usize) -> Vec<Partition> {
    crate::shapes::partitions_of(k).into_iter().filter(|p| p.len() <= max_len).collect()
}

/// `∂`, dilation, `φ_T` and the inflated-weight statements.
pub fn bijection(n: usize) -> Result<Vec<Check>> {
    let mut out = partial_checks(n)?;
    out.extend(dilation_checks(n)?);
    out.extend(fiber_checks(n)?);
    out.extend(tabloid_checks(n)?);
    out.extend(svt_inflation_checks(n)?);
    Ok(out)
}

fn delta(a: &Partition, b: &Partition) -> BigInt {
    BigInt::from(i32::from(a == b))
}

/// Hall duality of `G` and `g`, and the `g` expansion of skew `g` against the counting route.
pub fn duality(n: usize) -> Result<Vec<Check>> {
    let mut pairing = Check::new("<G_lambda, g_mu> = delta");
    let small = partitions_up_to(n.min(4));
    let d = 6.max(n.min(4) + 1);
    for l in &small {
        let gl = GradedExpansion::term(Basis::BigG, d, l.clone(), 1);
        for m in &small {
            let gm = GradedExpansion::term(Basis::SmallG, d, m.clone(), 1);
            pairing.expect(hall_pair(&gl, &gm)? == delta(l, m), || format!("lambda={l:?} mu={m:?}"));
        }
    }
    let mut expansion = Check::new("g_{nu/lambda} = sum c_buch g_mu");
    let mut schur = Check::new("Schur form of skew g matches RPP count");
    for (nu, lambda) in pairs(n) {
        let (g, _) = skew_g_expansion(&nu, &lambda)?;
        let by_buch = dual_by_buch(&nu, &lambda);
        expansion.expect(g.coeffs() == by_buch.coeffs(), || format!("nu={nu:?} lambda={lambda:?}: {g} vs {by_buch}"));
        schur.expect(skew_g_consistent(&nu, &lambda)?, || format!("nu={nu:?} lambda={lambda:?}"));
    }
    Ok(vec![pairing, expansion, schur])
}

/// The three routes, symmetry in `λ, μ`, and the cohomological case.
pub fn routes(n: usize, cache: Option<&CoefficientCache>) -> Result<Vec<Check>> {
    let report = cross_validate(n, cache)?;
    let mut agree = Check::new("c_buch = c_product = c_dual");
    agree.checked = report.checked;
    agree.failed = report.mismatches.len();
    agree.witnesses = report.mismatches.iter().take(MAX_WITNESSES).map(|m| format!("{m:?}")).collect();
    let mut sym = Check::new("c_buch symmetric in lambda, mu");
    let mut lr = Check::new("degree-preserving c equals Littlewood-Richardson");
    for (l, m, nu) in triples(n) {
        let c = c_buch(&l, &m, &nu);
        sym.expect(c == c_buch(&m, &l, &nu), || format!("{l:?} {m:?} {nu:?}"));
        if nu.size() == l.size() + m.size() {
            let classical = classical_lr(&l, &m, &nu)?;
            lr.expect(c >= 0 && c == classical, || format!("{l:?} {m:?} {nu:?}: {c} vs {classical}"));
        }
    }
    Ok(vec![agree, sym, lr])
}

/// Transition matrices among `h, s, G, g` at degree bound 6 (or `n + 1` if larger).
pub fn basis(n: usize) -> Result<Vec<Check>> {
    let d = 6.max(n + 1);
    let range = partitions_up_to(n.min(5));
    let everything = partitions_up_to(d);
    let mut htos = Check::new("h_mu = sum K s_lambda");
    let mut htog = Check::new("h_mu = sum k g_lambda");
    let mut lenart_g = Check::new("G_mu = sum (-1)^. F s_lambda");
    let mut lenart_s = Check::new("s_lambda = sum (-1)^. F g_mu");
    for mu in &range {
        let h = GradedExpansion::term(Basis::H, d, mu.clone(), 1);
        let in_s = change_basis(&h, Basis::S)?;
        let in_g = change_basis(&h, Basis::SmallG)?;
        let g_in_s = change_basis(&GradedExpansion::term(Basis::BigG, d, mu.clone(), 1), Basis::S)?;
        let s_in_g = change_basis(&GradedExpansion::term(Basis::S, d, mu.clone(), 1), Basis::SmallG)?;
        let mc = Composition::from(mu);
        for l in &everything {
            let k = if l.size() == mu.size() { kostka(l, &mc) } else { 0 };
            htos.expect(in_s.get(l) == BigInt::from(k), || format!("mu={mu:?} lambda={l:?}"));
            let kk = k_coeff(&SkewShape::straight(l.clone()), &mc);
            htog.expect(in_g.get(l) == BigInt::from(kk), || format!("mu={mu:?} lambda={l:?}"));
            let f = elegant_count(l, mu) as i64;
            let sign = if l.size() >= mu.size() && (l.size() - mu.size()) % 2 == 1 { -1 } else { 1 };
            lenart_g.expect(g_in_s.get(l) == BigInt::from(sign * f), || format!("mu={mu:?} lambda={l:?}"));
            let f2 = elegant_count(mu, l) as i64;
            let sign2 = if mu.size() >= l.size() && (mu.size() - l.size()) % 2 == 1 { -1 } else { 1 };
            lenart_s.expect(s_in_g.get(l) == BigInt::from(sign2 * f2), || format!("lambda={mu:?} mu={l:?}"));
        }
    }
    let mut lenart_m = Check::new("G_mu in m agrees with its Schur form");
    for mu in partitions_up_to(n.min(4)) {
        let direct = expand_to_m(Basis::BigG, &mu, d)?;
        let mut via = GradedExpansion::zero(Basis::S, d);
        for l in &everything {
            let f = elegant_count(l, &mu) as i64;
            let sign = if (l.size() + mu.size()) % 2 == 1 { -1 } else { 1 };
            via.add_term(l, BigInt::from(sign * f));
        }
        lenart_m.expect(change_basis(&via, Basis::M)? == direct, || format!("mu={mu:?}"));
    }
    let mut pieri = Check::new("G_lambda h_alpha = sum r G_nu");
    for l in &range {
        for k in 0..=d - l.size() {
            for alpha in
                compositions_of(k).into_iter().filter(|a| k <= 3 || a.entries().windows(2).all(|w| w[0] >= w[1]))
            {
                let lhs = pieri_g(l, &alpha, d)?;
                let rhs = pieri_g_by_rpp(l, &alpha, d);
                pieri.expect(lhs == rhs, || format!("lambda={l:?} alpha={alpha:?}: {lhs} vs {rhs}"));
            }
        }
    }
    let mut trips = Check::new("basis changes round-trip");
    for p in partitions_up_to(n.min(4)) {
        for from in Basis::ALL {
            let e = GradedExpansion::term(from, d, p.clone(), 1);
            for to in Basis::ALL {
                let back = change_basis(&change_basis(&e, to)?, from)?;
                trips.expect(back == e, || format!("{from}[{p}] via {to}"));
            }
        }
    }
    Ok(vec![htos, htog, lenart_g, lenart_s, lenart_m, pieri, trips])
}

/// Whether `f` is accepted by the validator of `class`, for callers with untrusted input.
pub fn check_class(f: &Filling, class: FillingClass) -> Result<()> {
    if validate(f, class) {
        Ok(())
    } else {
        Err(Error::InvalidFilling(format!("{} is not a valid {class:?} filling", f.to_notation())))
    }
}
