//! Element and matrix serialization.

use std::fmt::Write as _;

use peakalg::algebra::Element;
use peakalg::linalg::Matrix;
use peakalg::permutations::GroupElement;
use serde::Serialize;

use crate::literal::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Tsv,
    Json,
}

#[derive(Serialize)]
pub struct TermRecord {
    pub perm: String,
    pub coeff: String,
}

#[derive(Serialize)]
pub struct ElementRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub n: usize,
    #[serde(rename = "type")]
    pub group_type: String,
    pub terms: Vec<TermRecord>,
}

fn records<G: GroupElement>(u: &Element<G>) -> Vec<TermRecord> {
    let mut terms: Vec<TermRecord> =
        u.iter().map(|(g, c)| TermRecord { perm: g.to_string(), coeff: c.to_string() }).collect();
    terms.sort_by(|a, b| a.perm.cmp(&b.perm));
    terms
}

impl ElementRecord {
    pub fn new(label: Option<String>, v: &Value) -> ElementRecord {
        let terms = match v {
            Value::A(u) => records(u),
            Value::B(u) => records(u),
        };
        ElementRecord { label, n: v.n(), group_type: v.group_type().to_string(), terms }
    }
}

pub fn element_text(v: &Value) -> String {
    match v {
        Value::A(u) => u.to_string(),
        Value::B(u) => u.to_string(),
    }
}

/// Labelled elements in the requested format.
pub fn elements(items: &[(String, Value)], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Text => {
            for (label, v) in items {
                let _ = writeln!(s, "{label} = {}", element_text(v));
            }
        }
        Format::Tsv => {
            s.push_str("label\tperm\tcoeff\n");
            for (label, v) in items {
                for t in ElementRecord::new(None, v).terms {
                    let _ = writeln!(s, "{label}\t{}\t{}", t.perm, t.coeff);
                }
            }
        }
        Format::Json => {
            let recs: Vec<ElementRecord> = items.iter().map(|(l, v)| ElementRecord::new(Some(l.clone()), v)).collect();
            s = serde_json::to_string_pretty(&recs).expect("elements serialize") + "\n";
        }
    }
    s
}

#[derive(Serialize)]
struct MatrixRecord<'a> {
    from: &'a str,
    to: &'a str,
    n: usize,
    rows: &'a [String],
    cols: &'a [String],
    entries: Vec<Vec<String>>,
}

/// Row `i` holds the coordinates of `from_i` in the `to` basis.
pub fn matrix(from: &str, to: &str, n: usize, labels: &[String], m: &Matrix, format: Format) -> String {
    let entries: Vec<Vec<String>> =
        (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect();
    match format {
        Format::Json => {
            let rec = MatrixRecord { from, to, n, rows: labels, cols: labels, entries };
            serde_json::to_string_pretty(&rec).expect("matrix serializes") + "\n"
        }
        Format::Tsv | Format::Text => {
            let mut s = format!("{from}\\{to}");
            for l in labels {
                let _ = write!(s, "\t{l}");
            }
            s.push('\n');
            for (l, row) in labels.iter().zip(&entries) {
                s.push_str(l);
                for x in row {
                    let _ = write!(s, "\t{x}");
                }
                s.push('\n');
            }
            s
        }
    }
}
