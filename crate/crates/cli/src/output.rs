//! Text and JSON renderings of evaluation results.
//!
//! Text tables list occupancies with the first box fullest first, the way
//! the distributions are usually drawn; JSON keeps the library's
//! lexicographic order.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use quasiset::render;
use quasiset::stat::{fixed6, DistributionReport, Model, OccupancyVector, QsetDistribution};
use quasiset::QSet;
use serde_json::{json, Value as Json};

use crate::eval::Value;

/// Pictures are drawn when every box fits this many particles.
const PICTURE_MAX_PARTICLES: usize = 12;
/// The one-row-per-possibility listing is printed up to this many rows.
const LISTING_MAX_ROWS: u64 = 64;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Show witnesses; only meant for debugging.
    pub debug_witnesses: bool,
}

fn qset_text(q: &QSet, opts: RenderOptions) -> String {
    if opts.debug_witnesses {
        render::debug_text(q)
    } else {
        render::text(q)
    }
}

fn qset_json(q: &QSet, opts: RenderOptions) -> Json {
    if opts.debug_witnesses {
        render::to_json_debug(q)
    } else {
        render::to_json(q)
    }
}

pub fn text(v: &Value, opts: RenderOptions) -> String {
    match v {
        Value::Qset(q) => format!("{}\n", qset_text(q, opts)),
        Value::Nat(n) => format!("{n}\n"),
        Value::Bool(b) => format!("{b}\n"),
        Value::ExtEq(e) => format!("{}\n", e.as_str()),
        Value::Flags(c) => format!("{}\n", c.names().join(" ")),
        Value::Power { entries, total } => {
            let width = entries
                .iter()
                .map(|e| e.multiplicity.to_string().len())
                .max()
                .unwrap_or(1);
            let mut out = String::new();
            for e in entries {
                let _ = writeln!(out, "{:>width$}  {}", e.multiplicity.to_string(), qset_text(&e.subset, opts));
            }
            let _ = writeln!(out, "total {total}");
            out
        }
        Value::QFunctions(fs) => {
            let mut out = String::new();
            for (i, (f, kind)) in fs.iter().enumerate() {
                let map: Vec<String> = f
                    .assignment()
                    .iter()
                    .map(|(d, c)| format!("{} -> {}", render::view_text(d), render::view_text(c)))
                    .collect();
                let mut tags = Vec::new();
                if kind.injection {
                    tags.push("injection");
                }
                if kind.surjection {
                    tags.push("surjection");
                }
                if kind.bijection {
                    tags.push("bijection");
                }
                let _ = write!(out, "f{}: {{{}}}", i + 1, map.join("; "));
                if !tags.is_empty() {
                    let _ = write!(out, "  {}", tags.join(" "));
                }
                out.push('\n');
            }
            let _ = writeln!(out, "count {}", fs.len());
            out
        }
        Value::Report(r) => report_text(r),
        Value::Tuples(d) => tuples_text(d, opts),
        Value::Occupancies(vs) => vs.iter().map(|v| format!("{v}\n")).collect(),
    }
}

pub fn json(v: &Value, opts: RenderOptions) -> Json {
    match v {
        Value::Qset(q) => qset_json(q, opts),
        Value::Nat(n) => json!({"kind": "number", "value": n.to_string()}),
        Value::Bool(b) => json!({"kind": "boolean", "value": b}),
        Value::ExtEq(e) => json!({"kind": "exteq", "value": e.as_str()}),
        Value::Flags(c) => json!({"kind": "classification", "flags": c.names()}),
        Value::Power { entries, total } => json!({
            "kind": "power",
            "total": total.to_string(),
            "entries": entries.iter().map(|e| json!({
                "subset": qset_json(&e.subset, opts),
                "multiplicity": e.multiplicity.to_string(),
            })).collect::<Vec<_>>(),
        }),
        Value::QFunctions(fs) => json!({
            "kind": "qfunctions",
            "count": fs.len(),
            "functions": fs.iter().map(|(f, k)| json!({
                "assignment": f.assignment().iter().map(|(d, c)| json!({
                    "from": render::view_json(d),
                    "to": render::view_json(c),
                })).collect::<Vec<_>>(),
                "graph": qset_json(f.graph(), opts),
                "injection": k.injection,
                "surjection": k.surjection,
                "bijection": k.bijection,
            })).collect::<Vec<_>>(),
        }),
        Value::Report(r) => r.to_json(),
        Value::Tuples(d) => json!({
            "kind": "distributions",
            "n": d.boxes,
            "N": d.particles,
            "total": d.total.to_string(),
            "tuples": d.tuples.iter().map(|t| json!({
                "counts": t.occupancy().counts(),
                "boxes": t.boxes.iter().map(|b| qset_json(b, opts)).collect::<Vec<_>>(),
                "multiplicity": t.multiplicity.to_string(),
            })).collect::<Vec<_>>(),
        }),
        Value::Occupancies(vs) => json!({
            "kind": "occupancies",
            "vectors": vs.iter().map(|v| v.counts().to_vec()).collect::<Vec<_>>(),
        }),
    }
}

/// Descending in the first box, then the second, and so on.
fn fullest_first<T>(rows: &mut [(OccupancyVector, T)]) {
    rows.sort_by(|a, b| b.0.cmp(&a.0));
}

fn picture(v: &OccupancyVector, width: usize) -> String {
    let mut out = String::from("|");
    for &c in v.counts() {
        let _ = write!(out, "{:<width$}|", "*".repeat(c));
    }
    out
}

pub fn report_text(r: &DistributionReport) -> String {
    let mut rows: Vec<(OccupancyVector, &BigUint)> =
        r.per_occupancy.iter().map(|(v, w)| (v.clone(), w)).collect();
    fullest_first(&mut rows);
    let draw = r.particles <= PICTURE_MAX_PARTICLES;
    let cell = r.particles.max(1);

    let occ: Vec<String> = rows.iter().map(|(v, _)| v.to_string()).collect();
    let weights: Vec<String> = rows.iter().map(|(_, w)| w.to_string()).collect();
    let total = r.total.to_string();
    let occ_w = occ.iter().map(String::len).max().unwrap_or(0).max("occupancy".len()).max("total".len());
    let weight_w = weights.iter().map(String::len).max().unwrap_or(0).max("weight".len()).max(total.len());

    let mut out = String::new();
    let _ = writeln!(
        out,
        "{}: {} particle{} in {} box{}",
        r.model.name(),
        r.particles,
        if r.particles == 1 { "" } else { "s" },
        r.boxes,
        if r.boxes == 1 { "" } else { "es" }
    );
    out.push('\n');
    let _ = write!(out, "{:<occ_w$}  {:>weight_w$}  probability", "occupancy", "weight");
    if draw {
        out.push_str("  boxes");
    }
    out.push('\n');
    for (((v, w), o), ws) in rows.iter().zip(&occ).zip(&weights) {
        let _ = write!(out, "{o:<occ_w$}  {ws:>weight_w$}  {:>11}", fixed6(w, &r.total));
        if draw {
            let _ = write!(out, "  {}", picture(v, cell));
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{:<occ_w$}  {total:>weight_w$}", "total");
    out.push('\n');
    if r.most_probable.is_empty() {
        out.push_str("most probable: none\n");
    } else {
        let mp: Vec<String> = r.most_probable.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "most probable: {}", mp.join(" "));
    }

    // one row per possibility, grouped by occupancy
    if r.model == Model::MaxwellBoltzmann && draw && r.total <= BigUint::from(LISTING_MAX_ROWS) {
        out.push('\n');
        let _ = writeln!(out, "all {total} possibilities, one row each:");
        for (v, w) in &rows {
            for _ in 0..w.to_u64().unwrap_or(0) {
                let _ = writeln!(out, "{}", picture(v, cell));
            }
        }
    }
    out
}

fn tuples_text(d: &QsetDistribution, opts: RenderOptions) -> String {
    let mut rows: Vec<(OccupancyVector, (&BigUint, String))> = d
        .tuples
        .iter()
        .map(|t| {
            let boxes: Vec<String> = t.boxes.iter().map(|b| qset_text(b, opts)).collect();
            (t.occupancy(), (&t.multiplicity, boxes.join(" | ")))
        })
        .collect();
    fullest_first(&mut rows);
    let mult_w = rows
        .iter()
        .map(|(_, (m, _))| m.to_string().len())
        .max()
        .unwrap_or(0)
        .max("multiplicity".len());
    let occ_w = rows
        .iter()
        .map(|(v, _)| v.to_string().len())
        .max()
        .unwrap_or(0)
        .max("occupancy".len());

    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} members in {} boxes: {} observably distinct tuples, {} possibilities",
        d.particles,
        d.boxes,
        d.tuples.len(),
        d.total
    );
    out.push('\n');
    let _ = writeln!(out, "{:>mult_w$}  {:<occ_w$}  boxes", "multiplicity", "occupancy");
    for (v, (m, boxes)) in &rows {
        let _ = writeln!(out, "{:>mult_w$}  {:<occ_w$}  {boxes}", m.to_string(), v.to_string());
    }
    out
}
