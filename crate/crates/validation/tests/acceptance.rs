//! Acceptance suite. Each criterion prints one PASS/FAIL line, preceded by
//! indented detail lines; the process fails if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use superschur::cli;
use superschur_core::capability::{epicenter, gamma, mono_criterion, verify_no_low_gamma};
use superschur_core::catalog::{self, family_4_2, GAMMA_TWO_TAG, TABLE_TAG};
use superschur_core::homology::{boundary2, multiplier_dimension, relations3, tail_extension};
use superschur_core::verifier::{check_bounds, generate_nilpotent, ScanConfig, RESOLVED_2_3_18};
use superschur_core::{Claim, Field, GradedSubspace, Parity, PrimeField, Rationals, SuperDim, Superalgebra};

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    details: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            pass: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, line: String) {
        self.pass &= ok;
        self.details.push(format!("{} {line}", if ok { "ok  " } else { "FAIL" }));
    }

    fn note(&mut self, line: String) {
        self.details.push(format!("     {line}"));
    }
}

fn default_scan() -> Vec<Superalgebra<PrimeField>> {
    generate_nilpotent(&ScanConfig::default()).collect()
}

fn catalog_q() -> Vec<Superalgebra<Rationals>> {
    catalog::names(None)
        .into_iter()
        .map(|n| catalog::get(n, Rationals).unwrap())
        .collect()
}

/// Multiplier dimension from the Jacobi expansion of all ordered basis
/// triples, with its own pair indexing.
fn brute_force_multiplier<F: Field>(l: &Superalgebra<F>) -> (usize, usize, usize) {
    let f = l.field();
    let dims = l.dims();
    let n = l.dim();
    let odd = |i: usize| i >= dims.even;
    let mut index = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            if i != j || odd(i) {
                let k = index.len();
                index.insert((i, j), k);
            }
        }
    }
    let locate = |a: usize, b: usize| {
        if a <= b {
            index.get(&(a, b)).map(|&k| (k, false))
        } else {
            index.get(&(b, a)).map(|&k| (k, !(odd(a) && odd(b))))
        }
    };
    let mut columns = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut col = vec![f.zero(); index.len()];
                let mut add = |a: usize, b: usize, c: F::Elem| {
                    if let Some((k, flip)) = locate(a, b) {
                        let c = if flip { f.neg(&c) } else { c };
                        col[k] = f.add(&col[k], &c);
                    }
                };
                let sign = if odd(x) && odd(y) { f.one() } else { f.neg(&f.one()) };
                for (k, c) in l.bracket_basis(y, z).iter().enumerate() {
                    add(x, k, c.clone());
                }
                for (k, c) in l.bracket_basis(x, y).iter().enumerate() {
                    add(k, z, f.neg(c));
                }
                for (k, c) in l.bracket_basis(x, z).iter().enumerate() {
                    add(y, k, f.mul(&sign, c));
                }
                columns.push(col);
            }
        }
    }
    let rank = f.rank(&columns);
    (index.len(), rank, index.len() - l.derived().dim() - rank)
}

fn criterion_1() -> Verdict {
    let mut v = Verdict::new();
    let expected = [
        ("(2|2)_1", 1),
        ("(2|2)_4", 2),
        ("(2|2)_6", 2),
        ("(1|3)_1", 3),
        ("(1|4)_7", 3),
        ("(3|2)_5", 2),
        ("(3|2)_13", 3),
        ("(2|3)_18", RESOLVED_2_3_18),
        ("(2|3)_19", 3),
        ("(2|3)_22", 3),
        ("(2|3)_23", 2),
    ];
    assert_eq!(catalog::names(Some(TABLE_TAG)).len(), expected.len());
    for (name, want) in expected {
        let l = catalog::get(name, Rationals).unwrap();
        let start = Instant::now();
        let got = multiplier_dimension(&l).unwrap().dim_multiplier;
        let elapsed = start.elapsed();
        v.check(
            got == want && elapsed < Duration::from_secs(1),
            format!("{name}: dim M = {got}, expected {want}, {:.1} ms", elapsed.as_secs_f64() * 1e3),
        );
    }
    v
}

fn criterion_2() -> Verdict {
    let mut v = Verdict::new();
    let l = catalog::get("(2|3)_18", Rationals).unwrap();
    let (pairs, rank, oracle) = brute_force_multiplier(&l);
    v.note(format!("brute force over all 125 ordered triples: {pairs} pairs, rank {rank}, dim L^2 = {}", l.derived().dim()));
    v.check(oracle == RESOLVED_2_3_18, format!("pinned value {RESOLVED_2_3_18} = brute-force value {oracle}"));
    let computed = multiplier_dimension(&l).unwrap().dim_multiplier;
    v.check(computed == oracle, format!("multiplier_dimension = {computed}"));

    let mut out = Vec::new();
    let mut err = Vec::new();
    cli::run(["superschur", "verify-table1", "--json"], &mut out, &mut err);
    let doc: serde_json::Value = serde_json::from_slice(&out).unwrap();
    let finding = doc["findings"].as_array().unwrap().iter().find(|f| {
        f["claim"] == "gamma2-list" && f["instance"].as_str().is_some_and(|s| s.starts_with("superalgebra (2|3)_18\n"))
    });
    v.check(
        finding.is_some(),
        format!(
            "verify-table1 emits a gamma2-list finding for (2|3)_18: {}",
            finding.map_or_else(|| String::from("none"), |f| f["detail"].to_string())
        ),
    );
    v
}

fn criterion_3() -> Verdict {
    let mut v = Verdict::new();
    let mut wrong = Vec::new();
    for m in 0..=6usize {
        for n in 0..=6usize {
            if !(1..=6).contains(&(m + n)) {
                continue;
            }
            let got = multiplier_dimension(&catalog::abelian(Rationals, m, n)).unwrap().dim_multiplier;
            let t = m + n;
            if got != (t * t + n - m) / 2 {
                wrong.push(format!("({m}|{n}): {got}"));
            }
        }
    }
    v.check(wrong.is_empty(), format!("abelian formula on all 1 <= m+n <= 6: mismatches {wrong:?}"));
    let mut above = 0;
    let mut non_abelian = 0;
    for l in default_scan().iter().filter(|l| !l.is_abelian()) {
        non_abelian += 1;
        let t = l.dim();
        let bound = (t * t + l.dims().odd - l.dims().even) / 2;
        if multiplier_dimension(l).unwrap().dim_multiplier >= bound {
            above += 1;
        }
    }
    v.check(above == 0, format!("{non_abelian} non-abelian scan instances, {above} not strictly below the formula"));
    v
}

fn criterion_4() -> Verdict {
    let mut v = Verdict::new();
    for name in ["(2|2)_4", "(2|2)_6", "(1|3)_1", "(3|2)_13"] {
        let g = gamma(&catalog::get(name, Rationals).unwrap()).unwrap();
        v.check(
            g.gamma == Some(2) && g.class_match.is_some(),
            format!("{name}: gamma = {:?}, classMatch = {:?}", g.gamma, g.class_match),
        );
    }
    for name in ["(2|3)_19", "(2|3)_22"] {
        let g = gamma(&catalog::get(name, Rationals).unwrap()).unwrap();
        v.check(
            g.gamma == Some(3) && g.class_match.is_none(),
            format!("{name}: gamma = {:?} (dim M = {}), classMatch = {:?}", g.gamma, g.dim_multiplier, g.class_match),
        );
    }
    let cat = verify_no_low_gamma(&catalog_q());
    v.check(
        cat.findings.is_empty(),
        format!("catalog: {} in scope, {} with gamma in {{0,1}}", cat.checked, cat.findings.len()),
    );
    let scan = verify_no_low_gamma(&default_scan());
    v.check(
        scan.findings.is_empty(),
        format!("F5 scan of 200: {} in scope, {} with gamma in {{0,1}}", scan.checked, scan.findings.len()),
    );
    v
}

fn criterion_5() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    for name in catalog::names(Some(GAMMA_TWO_TAG)) {
        let r = epicenter(&catalog::get(name, Rationals).unwrap()).unwrap();
        v.check(r.capable, format!("{name}: dim Z*(L) = {}, capable = {}", r.epicenter.dim(), r.capable));
    }
    let r = epicenter(&catalog::abelian(Rationals, 1, 0)).unwrap();
    v.check(!r.capable, format!("abelian(1|0): capable = {}", r.capable));

    let mut lines = 0;
    let mut disagreements = Vec::new();
    for l in catalog_q() {
        let q = Rationals;
        let ep = match epicenter(&l) {
            Ok(ep) => ep,
            Err(e) => {
                disagreements.push(format!("{:?}: {e}", l.name()));
                continue;
            }
        };
        let center = l.center();
        let mut candidates: Vec<Vec<BigRational>> = (0..l.dim())
            .map(|i| l.unit(i))
            .filter(|u| center.contains(&q, u))
            .collect();
        candidates.extend(center.basis().cloned());
        for z in candidates {
            lines += 1;
            let k = GradedSubspace::span(&q, l.dims(), std::slice::from_ref(&z)).unwrap();
            if mono_criterion(&l, &k).unwrap() != ep.epicenter.contains(&q, &z) {
                disagreements.push(format!("{:?}", l.name()));
            }
        }
    }
    v.check(
        disagreements.is_empty(),
        format!("{lines} central lines on the catalog, disagreements {disagreements:?}"),
    );
    let elapsed = start.elapsed();
    v.check(elapsed < Duration::from_secs(5), format!("runtime {:.2} s", elapsed.as_secs_f64()));
    v
}

fn criterion_6() -> Verdict {
    let mut v = Verdict::new();
    let q = Rationals;
    let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let samples = [
        (r(1, 1), r(0, 1)),
        (r(0, 1), r(1, 1)),
        (r(1, 1), r(1, 1)),
        (r(2, 1), r(-3, 1)),
        (r(-1, 1), r(0, 1)),
        (r(3, 1), r(0, 1)),
        (r(1, 2), r(0, 1)),
        (r(1, 1), r(2, 1)),
        (r(-2, 1), r(5, 1)),
        (r(0, 1), r(-1, 3)),
    ];
    for (a2, a4) in samples {
        let label = format!("(a2, a4) = ({a2}, {a4})");
        let fam = family_4_2(q, a2, a4);
        let derived = fam.algebra.derived().dim();
        if !fam.validation.is_ok() {
            let w = &fam.validation.violations[0].triple;
            let labels = fam.algebra.labels();
            v.check(
                false,
                format!(
                    "{label}: not a Lie superalgebra, graded Jacobi fails at ({}, {}, {}); dim L^2 = {derived}",
                    labels[w[0]], labels[w[1]], labels[w[2]]
                ),
            );
            continue;
        }
        let m = multiplier_dimension(&fam.algebra).unwrap().dim_multiplier;
        v.check(
            fam.in_scope && derived == 4 && m <= 3,
            format!("{label}: dim L^2 = {derived}, dim M = {m}"),
        );
    }
    let zero = family_4_2(q, r(0, 1), r(0, 1));
    v.check(
        zero.validation.is_ok() && !zero.in_scope && zero.algebra.derived().dim() == 3 && !zero.warnings.is_empty(),
        format!("(0, 0): dim L^2 = {}, warnings {:?}", zero.algebra.derived().dim(), zero.warnings),
    );
    v
}

fn structural<F: Field>(l: &Superalgebra<F>, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let f = l.field();
    let dims = l.dims();
    if !boundary2(l).compose(f, &relations3(l)).unwrap().is_zero(f) {
        return Err(String::from("boundary2 . relations3 != 0"));
    }
    let te = tail_extension(l).unwrap();
    let e = &te.extension;
    if !e.validate().is_ok() {
        return Err(String::from("tail extension violates Jacobi"));
    }
    let (back, _) = e.quotient(&te.kernel).unwrap();
    if back.table() != l.table() {
        return Err(String::from("E/W differs from L"));
    }
    let m = multiplier_dimension(l).unwrap();
    if e.derived().dim() != m.dim_derived + m.dim_multiplier {
        return Err(String::from("dim E^2 != dim L^2 + dim M"));
    }
    for a in 0..l.dim() {
        for b in 0..l.dim() {
            let ab = l.bracket(&l.unit(a), &l.unit(b)).unwrap();
            let ba = l.bracket(&l.unit(b), &l.unit(a)).unwrap();
            let both_odd = dims.parity_of(a).is_odd() && dims.parity_of(b).is_odd();
            let mirrored: Vec<_> = if both_odd { ab.clone() } else { ab.iter().map(|x| f.neg(x)).collect() };
            if ba != mirrored {
                return Err(format!("super-skew symmetry fails on ({a}, {b})"));
            }
            let target = dims.parity_of(a) + dims.parity_of(b);
            if ab.iter().enumerate().any(|(k, x)| !f.is_zero(x) && dims.parity_of(k) != target) {
                return Err(format!("grading fails on ({a}, {b})"));
            }
        }
    }
    let mut x = vec![f.zero(); l.dim()];
    for i in dims.block(Parity::Odd) {
        x[i] = f.random(rng);
    }
    let cube = l.bracket(&x, &l.bracket(&x, &x).unwrap()).unwrap();
    if cube.iter().any(|c| !f.is_zero(c)) {
        return Err(String::from("[x,[x,x]] != 0 for an odd x"));
    }
    let n = l.dim();
    let mut order: Vec<usize> = (0..n).collect();
    for parity in [Parity::Even, Parity::Odd] {
        let block: Vec<usize> = dims.block(parity).collect();
        let mut shuffled = block.clone();
        shuffled.shuffle(rng);
        for (i, j) in block.into_iter().zip(shuffled) {
            order[i] = j;
        }
    }
    let p: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| (0..n).map(|j| if order[i] == j { f.one() } else { f.zero() }).collect())
        .collect();
    let permuted = l.change_basis(&p).unwrap();
    if multiplier_dimension(&permuted).unwrap().dim_multiplier != m.dim_multiplier {
        return Err(String::from("dim M changes under a basis permutation"));
    }
    Ok(())
}

fn criterion_7() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = Vec::new();
    let catalog = catalog_q();
    for l in &catalog {
        if let Err(e) = structural(l, &mut rng) {
            failures.push(format!("{:?}: {e}", l.name()));
        }
    }
    let scan = default_scan();
    for l in &scan {
        if let Err(e) = structural(l, &mut rng) {
            failures.push(format!("{:?}: {e}", l.name()));
        }
    }
    let max = scan.iter().map(Superalgebra::dims).fold(SuperDim::new(0, 0), |a, d| {
        SuperDim::new(a.even.max(d.even), a.odd.max(d.odd))
    });
    v.check(
        failures.is_empty() && max.even <= 3 && max.odd <= 3,
        format!(
            "{} catalog + {} generated F5 instances (largest components {max}), failures {failures:?}",
            catalog.len(),
            scan.len()
        ),
    );
    let elapsed = start.elapsed();
    v.check(elapsed < Duration::from_secs(60), format!("runtime {:.2} s", elapsed.as_secs_f64()));
    v
}

fn criterion_8() -> Verdict {
    let mut v = Verdict::new();
    let report = check_bounds(&default_scan());
    v.note(format!(
        "{} instances, {} in scope, {} central lines",
        report.instances, report.in_scope, report.lines
    ));
    for claim in [
        Claim::AbelianExtremal,
        Claim::CentralQuotientInequality,
        Claim::CentralQuotientPairBound,
        Claim::CodimTwoBound,
        Claim::CodimTwoStrict,
        Claim::SixStrict,
        Claim::SixBound,
        Claim::EvenLineQuotient,
        Claim::OddLineQuotient,
    ] {
        let evaluated = report.evaluated.get(&claim).copied().unwrap_or(0);
        let found = report.findings_for(claim);
        v.check(found == 0, format!("{claim}: {evaluated} checks, {found} findings"));
    }
    v.check(report.errors.is_empty(), format!("{} instances failed to evaluate", report.errors.len()));
    v
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("tabulated multiplier dimensions", criterion_1),
        ("resolved (2|3)_18 value and finding", criterion_2),
        ("abelian formula and strictness", criterion_3),
        ("gamma classification", criterion_4),
        ("capability", criterion_5),
        ("(4|2) family", criterion_6),
        ("structural properties", criterion_7),
        ("bound scan", criterion_8),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let verdict = run();
        for line in &verdict.details {
            println!("    {line}");
        }
        println!(
            "acceptance {} ({title}): {}",
            k + 1,
            if verdict.pass { "PASS" } else { "FAIL" }
        );
        failed += usize::from(!verdict.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
