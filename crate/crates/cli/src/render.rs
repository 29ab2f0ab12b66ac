//! Text, JSON, CSV and LaTeX renderings of command results.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::json;
use toric_core::{Error, Poly};

use crate::{Format, PoincareReport, PosetReport, TableReport};

/// Columns per block in LaTeX tables, as in the published layout.
const LATEX_BLOCK: usize = 10;

fn to_json<T: Serialize>(value: &T) -> Result<String, Error> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn to_csv(rows: &[Vec<String>]) -> Result<String, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r).map_err(|e| Error::Internal(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

fn classes_json(rows: &[(String, usize, Poly)]) -> serde_json::Value {
    rows.iter().map(|(l, s, p)| json!({"label": l, "size": s, "poincare": p.coeffs()})).collect()
}

pub fn poincare(report: &PoincareReport, all_classes: bool, format: Format) -> Result<String, Error> {
    let n = report.rank;
    match format {
        Format::Json => to_json(&json!({"system": report.system, "classes": classes_json(&report.rows)})),
        Format::Csv => {
            let mut rows = vec![["label".to_string(), "size".to_string()]
                .into_iter()
                .chain((0..=n).map(|i| format!("t^{i}")))
                .collect::<Vec<_>>()];
            for (l, s, p) in &report.rows {
                rows.push([l.clone(), s.to_string()].into_iter().chain(p.padded(n + 1).iter().map(|c| c.to_string())).collect());
            }
            to_csv(&rows)
        }
        Format::Text if !all_classes => Ok(format!("{}\n", report.rows[0].2)),
        Format::Text => {
            let mut out = String::new();
            for (l, s, p) in &report.rows {
                writeln!(out, "{l}\t{s}\t{p}").unwrap();
            }
            Ok(out)
        }
        Format::Latex if !all_classes => Ok(format!("P(T_{{\\Phi}},t) = {}\n", report.rows[0].2.to_latex())),
        Format::Latex => {
            let mut out = String::new();
            for (k, (l, _, _)) in report.rows.iter().enumerate() {
                writeln!(out, "% {}: {l}", k + 1).unwrap();
            }
            out.push_str("\\begin{array}{r|r|l}\n\\text{class} & |C| & P(T_{\\Phi},t)(g) \\\\\n\\hline\n");
            for (k, (_, s, p)) in report.rows.iter().enumerate() {
                writeln!(out, "{} & {s} & {} \\\\", k + 1, p.to_latex()).unwrap();
            }
            out.push_str("\\end{array}\n");
            Ok(out)
        }
    }
}

fn latex_name(name: &str) -> String {
    if name.starts_with("phi_") {
        format!("\\{name}")
    } else {
        name.to_string()
    }
}

pub fn table(report: &TableReport, format: Format) -> Result<String, Error> {
    let d = &report.decomposition;
    let mut rows: Vec<(String, Vec<i64>)> =
        d.rows.iter().enumerate().map(|(i, r)| (format!("H^{i}"), r.clone())).collect();
    if report.total {
        rows.push(("total".into(), d.total()));
    }
    match format {
        Format::Json => {
            let cp = &report.classes;
            let classes: Vec<(String, usize, Poly)> =
                cp.labels.iter().cloned().zip(cp.sizes.iter().copied()).zip(cp.polys.iter().cloned()).map(|((l, s), p)| (l, s, p)).collect();
            let mut decomposition = json!({
                "names": d.names,
                "rows": d.rows,
                "ties_from_data": report.ties_from_data,
            });
            if report.total {
                decomposition["total"] = json!(d.total());
            }
            to_json(&json!({"system": cp.system, "classes": classes_json(&classes), "decomposition": decomposition}))
        }
        Format::Csv => {
            let mut out = vec![std::iter::once(String::new()).chain(d.names.iter().cloned()).collect::<Vec<_>>()];
            for (label, r) in &rows {
                out.push(std::iter::once(label.clone()).chain(r.iter().map(|m| m.to_string())).collect());
            }
            to_csv(&out)
        }
        Format::Text => {
            let label_w = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
            let widths: Vec<usize> = (0..d.names.len())
                .map(|k| rows.iter().map(|(_, r)| r[k].to_string().len()).chain([d.names[k].len()]).max().unwrap_or(1))
                .collect();
            let mut out = String::new();
            write!(out, "{:label_w$}", "").unwrap();
            for (name, w) in d.names.iter().zip(&widths) {
                write!(out, "  {name:>w$}").unwrap();
            }
            out.push('\n');
            for (label, r) in &rows {
                write!(out, "{label:label_w$}").unwrap();
                for (m, w) in r.iter().zip(&widths) {
                    write!(out, "  {m:>w$}").unwrap();
                }
                out.push('\n');
            }
            Ok(out)
        }
        Format::Latex => {
            let blocks: Vec<std::ops::Range<usize>> =
                (0..d.names.len()).step_by(LATEX_BLOCK).map(|s| s..(s + LATEX_BLOCK).min(d.names.len())).collect();
            // multi-block tables pad the last block to full width
            let width = if blocks.len() > 1 { LATEX_BLOCK } else { d.names.len() };
            let mut out = format!("\\begin{{array}}{{r|{}}}\n", "r".repeat(width));
            for (b, range) in blocks.iter().enumerate() {
                if b > 0 {
                    out.push_str("\\hline\n");
                }
                let pad = width - range.len();
                let mut header: Vec<String> = range.clone().map(|k| latex_name(&d.names[k])).collect();
                header.extend(std::iter::repeat("\\,".to_string()).take(pad));
                writeln!(out, "\\, & {} \\\\", header.join(" & ")).unwrap();
                out.push_str("\\hline\n");
                for (i, (label, r)) in rows.iter().enumerate() {
                    let name = if label == "total" { "\\text{total}".to_string() } else { format!("H^{{{i}}}(T_{{\\Phi}})") };
                    let mut cells: Vec<String> = range.clone().map(|k| r[k].to_string()).collect();
                    cells.extend(std::iter::repeat("\\,".to_string()).take(pad));
                    let end = if b + 1 == blocks.len() && i + 1 == rows.len() { "" } else { " \\\\" };
                    writeln!(out, "{name} & {}{end}", cells.join(" & ")).unwrap();
                }
            }
            out.push_str("\\end{array}\n");
            Ok(out)
        }
    }
}

/// `(value, count)` pairs of Möbius values per rank, ascending by value.
fn mobius_values_by_rank(report: &PosetReport) -> Vec<Vec<(i64, usize)>> {
    let counts = report.poset.counts_by_rank();
    let mut out: Vec<BTreeMap<i64, usize>> = vec![BTreeMap::new(); counts.len()];
    for n in report.poset.nodes() {
        *out[n.rank].entry(n.mobius).or_default() += 1;
    }
    out.into_iter().map(|m| m.into_iter().collect()).collect()
}

fn tau_text(tau: bool) -> &'static str {
    if tau {
        "isomorphism"
    } else {
        "not an isomorphism"
    }
}

pub fn poset(report: &PosetReport, format: Format) -> Result<String, Error> {
    let p = &report.poset;
    let counts = p.counts_by_rank();
    let sums = p.mobius_by_rank();
    let values = mobius_values_by_rank(report);
    match format {
        Format::Json => {
            let mut v = json!({
                "system": report.system,
                "linear": p.is_linear(),
                "nodes": p.len(),
                "counts_by_rank": counts,
                "mobius_by_rank": sums,
                "mobius_values_by_rank": values,
            });
            if let Some(t) = report.tau {
                v["tau_isomorphism"] = json!(t);
            }
            to_json(&v)
        }
        Format::Csv => {
            let mut rows = vec![vec!["rank".to_string(), "nodes".to_string(), "mobius_sum".to_string()]];
            for (r, (c, s)) in counts.iter().zip(&sums).enumerate() {
                rows.push(vec![r.to_string(), c.to_string(), s.to_string()]);
            }
            to_csv(&rows)
        }
        Format::Text => {
            let join = |v: &[String]| v.join(" ");
            let mut out = String::new();
            writeln!(out, "system: {}", report.system).unwrap();
            writeln!(out, "nodes: {}", p.len()).unwrap();
            writeln!(out, "nodes by rank: {}", join(&counts.iter().map(|c| c.to_string()).collect::<Vec<_>>())).unwrap();
            writeln!(out, "mobius by rank: {}", join(&sums.iter().map(|c| c.to_string()).collect::<Vec<_>>())).unwrap();
            for (r, vals) in values.iter().enumerate() {
                let parts: Vec<String> = vals.iter().map(|(v, c)| format!("{v} x{c}")).collect();
                writeln!(out, "mobius values at rank {r}: {}", parts.join(", ")).unwrap();
            }
            if let Some(t) = report.tau {
                writeln!(out, "tau: {}", tau_text(t)).unwrap();
            }
            Ok(out)
        }
        Format::Latex => {
            let mut out = String::from("\\begin{array}{r|rr}\n\\text{rank} & \\#\\text{nodes} & \\sum \\mu \\\\\n\\hline\n");
            for (r, (c, s)) in counts.iter().zip(&sums).enumerate() {
                writeln!(out, "{r} & {c} & {s} \\\\").unwrap();
            }
            out.push_str("\\end{array}\n");
            if let Some(t) = report.tau {
                writeln!(out, "% tau: {}", tau_text(t)).unwrap();
            }
            Ok(out)
        }
    }
}
