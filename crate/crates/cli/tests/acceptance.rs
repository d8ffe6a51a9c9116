//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the verdicts are always printed.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use kschub::bijections::{dilate, partial_inverse, partial_map, phi, tau};
use kschub::coefficients::{c_buch, classical_lr, cross_validate, dual_by_buch, skew_g_expansion, triples};
use kschub::expr::parse;
use kschub::fillings::{column_word, enumerate, sv_row_word, Constraint, FillingClass};
use kschub::inflated::{inflate_svt, inflate_tabloid, inflated_weight, AugmentedFilling};
use kschub::shapes::{partitions_up_to, star, subpartitions};
use kschub::verify;
use kschub::{part, Filling, Partition, SkewShape};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn f(s: &str) -> Filling {
    Filling::from_notation(s).unwrap()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn worked_examples() -> Outcome {
    let start = Instant::now();
    let a = AugmentedFilling::new(f("1 2 4 5 7 / 2 3 6 / 1"), part![]);
    ensure(inflate_tabloid(&a).inflated_weight() == part![6, 5, 4, 3, 2, 2, 1], || "tabloid iwt".into())?;
    let a = AugmentedFilling::new(f("1 2 / 1"), part![3, 1]);
    ensure(inflate_tabloid(&a).inflated_weight() == part![5, 2], || "tabloid over T_(3,1)".into())?;
    ensure(a.row_word().unwrap() == vec![1, 1, 2, 2, 1, 1, 1], || "row word 1122111".into())?;
    let a = AugmentedFilling::new(f("1 5 / 4,8 9"), part![]);
    ensure(inflate_svt(&a).inflated_weight() == part![9, 8].conjugate(), || "svt iwt (9,8)'".into())?;
    let d = inflate_svt(&AugmentedFilling::new(f("1 5 6 / 4,7,8 9"), part![]));
    ensure(d.inflated_weight() == part![9, 8, 4].conjugate(), || "svt iwt (9,8,4)'".into())?;
    let row2: Vec<Vec<u32>> = d.cells.iter().filter(|(k, _)| k.0 == 2).map(|(_, e)| e.clone()).collect();
    ensure(row2 == vec![vec![4], vec![7, 8], vec![9]], || format!("svt row 2 {row2:?}"))?;

    ensure(column_word(&f("1,2 2 2,3 / 4 5,7 / 5")) == vec![5, 4, 1, 2, 5, 7, 2, 2, 3], || "w(S)".into())?;
    ensure(sv_row_word(&f("1,2 2,3 3 / 3 4,5,6")) == vec![6, 5, 3, 4, 3, 2, 1, 2, 3], || "sw(S)".into())?;
    let s = star(&part![2, 2, 1], &part![3, 1]);
    ensure(s == SkewShape::new(part![5, 3, 2, 2, 1], part![2, 2]).unwrap(), || "star shape".into())?;

    let r = f(". . 2 2 / 1 1 2 / 1 3 / 1");
    let a = partial_map(&r).map_err(|e| e.to_string())?;
    ensure(a.top == f("2 4 / 1 2 / 3") && a.lambda == part![2], || "partial map".into())?;
    ensure(partial_inverse(&a, &inflated_weight(&a)).as_ref() == Ok(&r), || "partial inverse".into())?;

    let (d, step) = dilate(&f("1 1,2 2,3 5 / 3,4 4,5,6 8 / 6 7 / 7")).map_err(|e| e.to_string())?;
    ensure(step.row == 2 && step.ejected == 6, || "row(S), x(S)".into())?;
    ensure(d == f("1 1,2 2,3 5 / 3,4 4,5 8 / 6 6 / 7 7"), || "dilation".into())?;

    let p = phi(&f("1 1 1,2,3,4 / 2 2,3 / 4")).map_err(|e| e.to_string())?;
    let chain: Vec<Filling> = p.trace.steps.iter().map(|s| s.before.clone()).chain([p.terminal.clone()]).collect();
    let expected = [
        "1 1 1,2,3,4 / 2 2,3 / 4",
        "1 1 1,2,3,4 / 2 2 / 3 / 4",
        "1 1 1,2,3 / 2 2 4 / 3 / 4",
        "1 1 1,2 / 2 2 3 / 3 4 / 4",
        "1 1 1 / 2 2 2 / 3 3 / 4 4",
    ];
    ensure(chain == expected.iter().map(|s| f(s)).collect::<Vec<_>>(), || "phi chain".into())?;
    ensure(p.elegant == f(". . . / . . 1 / . 2 / 2 3"), || "phi elegant filling".into())?;

    let t = tau(&AugmentedFilling::new(f("5,7 7"), part![2, 1])).map_err(|e| e.to_string())?;
    let toggle = t.toggle.ok_or("tau fixed")?;
    ensure(t.result.top == f("5,6,7 7") && toggle.added && toggle.letter == 7, || "tau toggle".into())?;

    let elapsed = start.elapsed();
    ensure(elapsed.as_secs_f64() < 1.0, || format!("took {elapsed:?}"))?;
    Ok(format!("all worked examples match in {elapsed:.2?}"))
}

fn route_agreement() -> Outcome {
    let start = Instant::now();
    let r = cross_validate(6, None).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("{} mismatches, first {:?}", r.mismatches.len(), r.mismatches.first()))?;
    Ok(format!("{} triples with |nu| <= 6 agree on three routes in {:.2?}", r.checked, start.elapsed()))
}

fn skew_g_expansion_check() -> Outcome {
    let mut n = 0;
    for nu in partitions_up_to(6) {
        for lambda in subpartitions(&nu) {
            let (g, _) = skew_g_expansion(&nu, &lambda).map_err(|e| e.to_string())?;
            let by_count = dual_by_buch(&nu, &lambda);
            ensure(g.coeffs() == by_count.coeffs(), || format!("nu={nu:?} lambda={lambda:?}: {g} vs {by_count}"))?;
            n += 1;
        }
    }
    Ok(format!("g_(nu/lambda) matches sum of c_buch g_mu for {n} pairs"))
}

fn run_suite(checks: Vec<verify::Check>) -> Result<usize, String> {
    let mut total = 0;
    for c in checks {
        ensure(c.passed(), || format!("{}: {} failed, e.g. {:?}", c.name, c.failed, c.witnesses.first()))?;
        total += c.checked;
    }
    Ok(total)
}

fn structural() -> Outcome {
    let mut total = run_suite(verify::involution(6).map_err(|e| e.to_string())?)?;
    total += run_suite(verify::bijection(6).map_err(|e| e.to_string())?)?;
    Ok(format!("{total} structural checks (tau, maps and inflated weight to size 6)"))
}

fn basis_changes() -> Outcome {
    let mut total = run_suite(verify::basis(5).map_err(|e| e.to_string())?)?;
    total += run_suite(verify::duality(4).map_err(|e| e.to_string())?)?;
    Ok(format!("{total} transition, Lenart, Pieri, duality and round-trip checks at D=6"))
}

fn cohomological() -> Outcome {
    let mut n = 0;
    for (l, m, nu) in triples(6) {
        if nu.size() != l.size() + m.size() {
            continue;
        }
        let c = c_buch(&l, &m, &nu);
        let lr = classical_lr(&l, &m, &nu).map_err(|e| e.to_string())?;
        ensure(c >= 0 && c == lr, || format!("{l:?} {m:?} {nu:?}: {c} vs {lr}"))?;
        n += 1;
    }
    Ok(format!("{n} degree-preserving coefficients equal Littlewood-Richardson numbers"))
}

fn random_filling(rng: &mut StdRng) -> (FillingClass, Filling) {
    loop {
        let class =
            [FillingClass::Ssyt, FillingClass::Tabloid, FillingClass::Svt, FillingClass::Rpp, FillingClass::Elegant]
                [rng.gen_range(0..5)];
        let shapes = partitions_up_to(5);
        let outer = shapes[rng.gen_range(1..shapes.len())].clone();
        let inners = subpartitions(&outer);
        let inner = if class == FillingClass::Tabloid {
            Partition::empty()
        } else {
            inners[rng.gen_range(0..inners.len())].clone()
        };
        let shape = SkewShape::new(outer, inner).unwrap();
        let constraint =
            if class == FillingClass::Elegant { Constraint::Free } else { Constraint::MaxEntry(rng.gen_range(1..4)) };
        let all = enumerate(&shape, class, &constraint).unwrap();
        if !all.is_empty() {
            return (class, all[rng.gen_range(0..all.len())].clone());
        }
    }
}

fn cli_contract() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_kschub");
    let status =
        Command::new(exe).args(["verify", "--suite", "all", "--max-size", "5"]).output().map_err(|e| e.to_string())?;
    ensure(status.status.code() == Some(0), || format!("verify exited {:?}", status.status.code()))?;

    let corpus = include_str!("../../core/tests/data/parser_corpus.tsv");
    let mut cases = 0;
    for line in corpus.lines().filter(|l| !l.starts_with('#') && !l.is_empty()) {
        let fields: Vec<&str> = line.split('\t').collect();
        let ok = match (fields[0], parse(fields[1])) {
            ("accept", Ok(p)) => p.to_string() == fields[2],
            ("reject", Err(d)) => d.position.to_string() == fields[2] && d.message.contains(fields[3]),
            _ => false,
        };
        ensure(ok, || format!("corpus case {:?}", fields[1]))?;
        cases += 1;
    }
    ensure(cases == 50, || format!("{cases} corpus cases"))?;

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut by_class: BTreeMap<String, Vec<Filling>> = BTreeMap::new();
    for _ in 0..200 {
        let (class, fill) = random_filling(&mut rng);
        let text = serde_json::to_string(&fill).unwrap();
        let back: Filling = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        ensure(back == fill, || format!("JSON round trip of {text}"))?;
        by_class.entry(format!("{class:?}").to_lowercase()).or_default().push(fill);
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (class, fills) in &by_class {
        let path = dir.path().join(format!("{class}.json"));
        std::fs::write(&path, serde_json::to_string(fills).unwrap()).map_err(|e| e.to_string())?;
        let out = Command::new(exe)
            .args(["--output", "json", "enumerate", "--class", class, "--input"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("enumerate --input for {class}: {}", String::from_utf8_lossy(&out.stderr))
        })?;
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let echoed: Vec<Filling> = serde_json::from_value(v["fillings"].clone()).map_err(|e| e.to_string())?;
        ensure(&echoed == fills, || format!("CLI round trip for {class}"))?;
    }
    Ok("verify exits 0, 50 corpus cases pass, 200 random fillings round-trip".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("worked examples", worked_examples),
        ("route agreement", route_agreement),
        ("skew g expansion", skew_g_expansion_check),
        ("structural suites", structural),
        ("basis changes", basis_changes),
        ("cohomological case", cohomological),
        ("cli contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
