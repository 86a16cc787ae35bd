//! Deterministic text and JSON forms.
//!
//! The public forms are functions of the [`View`] alone; witnesses only
//! appear in the explicitly requested debug forms.
//!
//! Text grammar (ASCII): `[]` is the empty qset, `M"a"` an M-atom, `m s` an
//! m-atom of species `s`, `m s:3` three of them.

use serde_json::{json, Value as Json};

use crate::value::{Occurrence, QSet, View};

pub fn text(q: &QSet) -> String {
    let mut out = String::new();
    write_views(&mut out, q.view());
    out
}

/// Text form of a single object's view.
pub fn view_text(v: &View) -> String {
    let mut out = String::new();
    write_view(&mut out, v);
    out
}

fn write_views(out: &mut String, views: &[View]) {
    out.push('[');
    let mut first = true;
    for run in views.chunk_by(|a, b| matches!((a, b), (View::MOcc(x), View::MOcc(y)) if x == y)) {
        if !first {
            out.push_str(", ");
        }
        first = false;
        match &run[0] {
            View::MOcc(s) if run.len() > 1 => {
                out.push_str(&format!("m {s}:{}", run.len()));
            }
            v => write_view(out, v),
        }
    }
    out.push(']');
}

fn write_view(out: &mut String, v: &View) {
    match v {
        View::MAtom(l) => {
            out.push('M');
            write_string(out, l.name());
        }
        View::MOcc(s) => {
            out.push_str("m ");
            out.push_str(s.name());
        }
        View::Nested(members) => write_views(out, members),
    }
}

fn write_string(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
}

/// Text form listing every occurrence with its witness, e.g. `[m s#0, m s#4]`.
pub fn debug_text(q: &QSet) -> String {
    let mut out = String::new();
    write_debug(&mut out, q);
    out
}

fn write_debug(out: &mut String, q: &QSet) {
    out.push('[');
    for (i, e) in q.occurrences().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        match e {
            Occurrence::MAtom(l) => {
                out.push('M');
                write_string(out, l.name());
            }
            Occurrence::MOcc(s, w) => out.push_str(&format!("m {s}#{}", w.tag())),
            Occurrence::Nested(inner) => write_debug(out, inner),
        }
    }
    out.push(']');
}

/// `{"kind":"qset","elems":[...]}` with members in canonical order.
pub fn to_json(q: &QSet) -> Json {
    views_json(q.view())
}

pub fn view_json(v: &View) -> Json {
    match v {
        View::MAtom(l) => json!({"kind": "matom", "label": l.name()}),
        View::MOcc(s) => json!({"kind": "mocc", "species": s.name()}),
        View::Nested(members) => views_json(members),
    }
}

fn views_json(views: &[View]) -> Json {
    json!({"kind": "qset", "elems": views.iter().map(view_json).collect::<Vec<_>>()})
}

/// JSON form including the witness of every m-atom occurrence.
pub fn to_json_debug(q: &QSet) -> Json {
    let elems: Vec<Json> = q
        .occurrences()
        .iter()
        .map(|e| match e {
            Occurrence::MAtom(l) => json!({"kind": "matom", "label": l.name()}),
            Occurrence::MOcc(s, w) => {
                json!({"kind": "mocc", "species": s.name(), "witness": w.tag()})
            }
            Occurrence::Nested(inner) => to_json_debug(inner),
        })
        .collect();
    json!({"kind": "qset", "elems": elems})
}
