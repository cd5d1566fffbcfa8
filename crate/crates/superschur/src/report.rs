//! Human-readable tables and JSON documents.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde_json::{json, Map, Value};
use superschur_core::capability::{self, CandidateVerdict};
use superschur_core::catalog;
use superschur_core::verifier::{ScanReport, TableReport};
use superschur_core::{multiplier_dimension, Claim, Error, Field, Finding, SuperDim, Superalgebra};

use crate::presentation::{format_vector, serialize};

/// A published statement that the computed invariants of a catalog entry contradict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub claim: Claim,
    pub expected: String,
    pub observed: i64,
    pub detail: String,
}

/// Everything the `multiplier`, `capability` and `gamma` commands report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    pub name: Option<String>,
    pub dims: SuperDim,
    pub dim_c2: usize,
    pub dim_derived: usize,
    pub rank_relations: usize,
    pub dim_multiplier: usize,
    pub gamma: Option<i64>,
    pub capable: bool,
    pub epicenter_dim: usize,
    pub center_dim: usize,
    pub class_match: Option<&'static str>,
    pub generators: Vec<(String, bool)>,
    pub discrepancies: Vec<Discrepancy>,
    pub multiplier_time: Duration,
}

fn catalog_twin<F: Field>(l: &Superalgebra<F>) -> Option<&'static catalog::CatalogEntry> {
    let entry = catalog::entry(l.name()?)?;
    let twin = entry.build(l.field().clone()).ok()?;
    (twin.dims() == l.dims() && twin.table() == l.table()).then_some(entry)
}

pub fn algebra_report<F: Field>(l: &Superalgebra<F>) -> Result<AlgebraReport, Error> {
    let start = Instant::now();
    let m = multiplier_dimension(l)?;
    let multiplier_time = start.elapsed();
    let ep = capability::epicenter(l)?;
    let verdict = capability::gamma(l)?;
    let generators = ep
        .per_generator
        .iter()
        .map(|g: &CandidateVerdict<F::Elem>| (format_vector(l, &g.generator), g.mono))
        .collect();

    let mut discrepancies = Vec::new();
    if let Some(entry) = catalog_twin(l) {
        if let Some(published) = entry.expected_multiplier_dim {
            if published != m.dim_multiplier {
                discrepancies.push(Discrepancy {
                    claim: Claim::TableValue,
                    expected: format!("= {published}"),
                    observed: m.dim_multiplier as i64,
                    detail: format!("tabulated dim M{} = {published}", entry.name),
                });
            }
        }
        if entry.tags.contains(&catalog::GAMMA_TWO_TAG) {
            if m.gamma != Some(2) {
                discrepancies.push(Discrepancy {
                    claim: Claim::GammaTwoList,
                    expected: String::from("gamma = 2"),
                    observed: m.gamma.unwrap_or(-1),
                    detail: format!("{} is listed with gamma = 2", entry.name),
                });
            }
            if !ep.capable {
                discrepancies.push(Discrepancy {
                    claim: Claim::GammaTwoCapable,
                    expected: String::from("epicenter = 0"),
                    observed: ep.epicenter.dim() as i64,
                    detail: format!("{} is listed with gamma = 2", entry.name),
                });
            }
        }
    }

    Ok(AlgebraReport {
        name: l.name().map(String::from),
        dims: l.dims(),
        dim_c2: m.dim_c2,
        dim_derived: m.dim_derived,
        rank_relations: m.rank_relations,
        dim_multiplier: m.dim_multiplier,
        gamma: m.gamma,
        capable: ep.capable,
        epicenter_dim: ep.epicenter.dim(),
        center_dim: l.center().dim(),
        class_match: verdict.class_match,
        generators,
        discrepancies,
        multiplier_time,
    })
}

/// The stable JSON shape: exactly `dimC2, dimDerived, rankRelations,
/// dimMultiplier, gamma, capable, epicenterDim, discrepancies`.
pub fn algebra_json(r: &AlgebraReport) -> Value {
    let discrepancies: Vec<Value> = r
        .discrepancies
        .iter()
        .map(|d| {
            json!({
                "claim": d.claim.id(),
                "expected": d.expected,
                "observed": d.observed,
                "detail": d.detail,
            })
        })
        .collect();
    json!({
        "dimC2": r.dim_c2,
        "dimDerived": r.dim_derived,
        "rankRelations": r.rank_relations,
        "dimMultiplier": r.dim_multiplier,
        "gamma": r.gamma,
        "capable": r.capable,
        "epicenterDim": r.epicenter_dim,
        "discrepancies": discrepancies,
    })
}

/// Two aligned columns.
pub fn key_values(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        writeln!(out, "{k:<width$}  {v}").expect("writing to a String");
    }
    out
}

/// A column-aligned table with a header rule.
pub fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = String::new();
    out.push_str(&line(header.to_vec()));
    out.push('\n');
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&rule.join("  "));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

fn title(r: &AlgebraReport) -> String {
    format!("{} {}", r.name.as_deref().unwrap_or("unnamed"), r.dims)
}

fn gamma_text(g: Option<i64>) -> String {
    g.map_or_else(|| String::from("undefined (out of scope)"), |g| g.to_string())
}

fn discrepancy_lines(r: &AlgebraReport) -> String {
    let mut out = String::new();
    for d in &r.discrepancies {
        writeln!(out, "discrepancy [{}]: expected {}, observed {} ({})", d.claim, d.expected, d.observed, d.detail)
            .expect("writing to a String");
    }
    out
}

pub fn multiplier_human(r: &AlgebraReport) -> String {
    let mut out = key_values(&[
        ("algebra", title(r)),
        ("dim C2", r.dim_c2.to_string()),
        ("dim L^2", r.dim_derived.to_string()),
        ("rank relations", r.rank_relations.to_string()),
        ("dim M(L)", r.dim_multiplier.to_string()),
        ("gamma", gamma_text(r.gamma)),
        ("time", format!("{:.3} ms", r.multiplier_time.as_secs_f64() * 1e3)),
    ]);
    out.push_str(&discrepancy_lines(r));
    out
}

pub fn capability_human(r: &AlgebraReport) -> String {
    let mut out = key_values(&[
        ("algebra", title(r)),
        ("dim Z(L)", r.center_dim.to_string()),
        ("dim Z*(L)", r.epicenter_dim.to_string()),
        ("capable", r.capable.to_string()),
    ]);
    if !r.generators.is_empty() {
        let rows: Vec<Vec<String>> = r
            .generators
            .iter()
            .map(|(g, mono)| vec![g.clone(), mono.to_string()])
            .collect();
        out.push('\n');
        out.push_str(&grid(&["center generator", "in Z*(L)"], &rows));
    }
    out.push_str(&discrepancy_lines(r));
    out
}

pub fn gamma_human(r: &AlgebraReport) -> String {
    let mut out = key_values(&[
        ("algebra", title(r)),
        ("dim L^2", r.dim_derived.to_string()),
        ("dim M(L)", r.dim_multiplier.to_string()),
        ("gamma", gamma_text(r.gamma)),
        ("class match", r.class_match.unwrap_or("none").to_string()),
    ]);
    out.push_str(&discrepancy_lines(r));
    out
}

pub fn finding_json<F: Field>(f: &Finding<F>) -> Value {
    let mut map = Map::new();
    map.insert("claim".into(), json!(f.claim.id()));
    map.insert("expected".into(), json!(f.expected));
    map.insert("observed".into(), json!(f.observed));
    map.insert("sample".into(), json!(f.sample));
    map.insert("detail".into(), json!(f.detail));
    map.insert("instance".into(), json!(serialize(&f.instance)));
    Value::Object(map)
}

/// One compact JSON document per line.
pub fn finding_lines<F: Field>(findings: &[Finding<F>]) -> String {
    let mut out = String::new();
    for f in findings {
        out.push_str(&finding_json(f).to_string());
        out.push('\n');
    }
    out
}

pub fn table_json<F: Field>(t: &TableReport<F>) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "dims": r.dims.to_string(),
                "published": r.published,
                "expected": r.expected,
                "dimMultiplier": r.computed,
                "rankRelations": r.rank_relations,
                "pass": r.pass,
            })
        })
        .collect();
    let findings: Vec<Value> = t.findings.iter().map(finding_json).collect();
    json!({ "rows": rows, "findings": findings })
}

pub fn table_human<F: Field>(t: &TableReport<F>) -> String {
    let rows: Vec<Vec<String>> = t
        .rows
        .iter()
        .map(|r| {
            vec![
                r.name.to_string(),
                r.published.to_string(),
                r.expected.to_string(),
                r.computed.to_string(),
                if r.pass { "pass" } else { "FAIL" }.to_string(),
            ]
        })
        .collect();
    let mut out = grid(&["name", "published", "expected", "computed", "status"], &rows);
    out.push_str(&finding_lines(&t.findings));
    out
}

fn scan_rows<F: Field>(s: &ScanReport<F>) -> Vec<(Claim, usize, usize)> {
    s.evaluated
        .iter()
        .map(|(&c, &k)| (c, k, s.findings_for(c)))
        .collect()
}

pub fn scan_json<F: Field>(s: &ScanReport<F>) -> Value {
    let claims: Vec<Value> = scan_rows(s)
        .into_iter()
        .map(|(c, k, f)| json!({ "claim": c.id(), "evaluated": k, "findings": f }))
        .collect();
    let errors: Vec<Value> = s
        .errors
        .iter()
        .map(|(i, e)| json!({ "sample": i, "error": e.to_string() }))
        .collect();
    let findings: Vec<Value> = s.findings.iter().map(finding_json).collect();
    json!({
        "instances": s.instances,
        "inScope": s.in_scope,
        "centralLines": s.lines,
        "claims": claims,
        "errors": errors,
        "findings": findings,
    })
}

pub fn scan_human<F: Field>(s: &ScanReport<F>) -> String {
    let mut out = key_values(&[
        ("instances", s.instances.to_string()),
        ("in scope", s.in_scope.to_string()),
        ("central lines", s.lines.to_string()),
        ("findings", s.findings.len().to_string()),
    ]);
    out.push('\n');
    let rows: Vec<Vec<String>> = scan_rows(s)
        .into_iter()
        .map(|(c, k, f)| vec![c.id().to_string(), k.to_string(), f.to_string()])
        .collect();
    out.push_str(&grid(&["claim", "evaluated", "findings"], &rows));
    for (i, e) in &s.errors {
        writeln!(out, "sample {i}: {e}").expect("writing to a String");
    }
    out.push_str(&finding_lines(&s.findings));
    out
}
