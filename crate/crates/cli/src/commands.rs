//! The subcommands. Each returns the text for stdout and an exit status.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use peakalg::bases::{descent_element_a, descent_element_b, descent_transition, peak_basis_elements, peak_coords, transition_matrix, PeakBasis};
use peakalg::classes::ClassKind;
use peakalg::combinatorics::{enumerate_sparse, enumerate_subsets};
use peakalg::eulerian::{
    e0_coefficient, e_coefficient, left_ideal_dimension, rho0_coefficient, rho_0n, rho_coefficient, rho_n,
};
use peakalg::lie::{check_charpeak, check_gr, Alphabet, LieMonomial, SpanCoefficients, TensorElement};
use peakalg::permutations::GroupType;
use peakalg::radical::Flavor;
use peakalg::{BitSet, Caps, Rational};
use num_traits::Zero;
use serde::Serialize;

use crate::literal::{parse_element, Value};
use crate::output::{self, Format};
use crate::report::SuiteReport;
use crate::suites::{run_suite, Suite, SuiteOptions};
use crate::{CliError, EXIT_FAIL, EXIT_PASS};

pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, code: EXIT_PASS }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Writes `content` to `path`, or returns it for stdout when no path is given.
fn deliver(content: String, export: Option<&Path>) -> Result<String, CliError> {
    match export {
        Some(p) => {
            std::fs::write(p, &content).map_err(|e| CliError::Io { path: p.display().to_string(), source: e })?;
            eprintln!("wrote {}", p.display());
            Ok(String::new())
        }
        None => Ok(content),
    }
}

/// A basis name as typed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisName {
    Peak(PeakBasis),
    X,
    Y,
}

impl std::str::FromStr for BasisName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "X" => Ok(BasisName::X),
            "Y" => Ok(BasisName::Y),
            _ => s.parse().map(BasisName::Peak).map_err(|_| format!("unknown basis {s:?} (P, Q, O, Obar, X, Y)")),
        }
    }
}

impl std::fmt::Display for BasisName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisName::Peak(b) => b.fmt(f),
            BasisName::X => f.write_str("X"),
            BasisName::Y => f.write_str("Y"),
        }
    }
}

fn descent_kind(ty: GroupType) -> ClassKind {
    match ty {
        GroupType::A => ClassKind::DescentA,
        GroupType::B => ClassKind::DescentB,
    }
}

fn descent_labels(ty: GroupType, n: usize) -> Vec<BitSet> {
    match ty {
        GroupType::A => enumerate_subsets(1, n as i64 - 1),
        GroupType::B => enumerate_subsets(0, n as i64 - 1),
    }
}

pub fn bases(
    n: usize,
    basis: BasisName,
    ty: GroupType,
    format: Format,
    export: Option<&Path>,
    caps: &Caps,
) -> Result<Outcome, CliError> {
    let items: Vec<(String, Value)> = match basis {
        BasisName::Peak(b) => {
            if ty == GroupType::B {
                return Err(usage("peak bases live in type A"));
            }
            let elems = peak_basis_elements(b, n, caps)?;
            enumerate_sparse(n).iter().zip(elems).map(|(f, u)| (format!("{b}{f}"), Value::A(u))).collect()
        }
        BasisName::X | BasisName::Y => {
            let cumulative = basis == BasisName::X;
            let mut out = Vec::new();
            for set in descent_labels(ty, n) {
                let v = match ty {
                    GroupType::A => Value::A(descent_element_a(set, n, cumulative, caps)?),
                    GroupType::B => Value::B(descent_element_b(set, n, cumulative, caps)?),
                };
                out.push((format!("{basis}{set}@{ty}{n}"), v));
            }
            out
        }
    };
    Ok(Outcome::ok(deliver(output::elements(&items, format), export)?))
}

pub fn matrix(
    from: BasisName,
    to: BasisName,
    n: usize,
    ty: GroupType,
    format: Format,
    export: Option<&Path>,
) -> Result<Outcome, CliError> {
    let (labels, m) = match (from, to) {
        (BasisName::Peak(a), BasisName::Peak(b)) => {
            let labels = enumerate_sparse(n).iter().map(|f| f.bits().to_string()).collect();
            (labels, transition_matrix(a, b, n))
        }
        (BasisName::X | BasisName::Y, BasisName::X | BasisName::Y) => {
            let labels: Vec<String> = descent_labels(ty, n).iter().map(|s| s.to_string()).collect();
            let m = if from == to {
                peakalg::linalg::Matrix::identity(labels.len())
            } else {
                descent_transition(n, descent_kind(ty), from == BasisName::X)
            };
            (labels, m)
        }
        _ => return Err(usage(format!("no transition matrix between {from} and {to}"))),
    };
    let text = output::matrix(&from.to_string(), &to.to_string(), n, &labels, &m, format);
    Ok(Outcome::ok(deliver(text, export)?))
}

/// `a..b`, `a..=b` or a single degree.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad degree range {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty degree range {s:?}"));
    }
    Ok((lo, hi))
}

pub struct VerifyArgs<'a> {
    pub suite: Option<Suite>,
    pub range: (usize, usize),
    pub seed: u64,
    pub flavor: Option<Flavor>,
    pub format: Format,
    pub export: Option<&'a Path>,
    pub caps: Caps,
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let suites: Vec<Suite> = match args.suite {
        Some(s) => vec![s],
        None => Suite::ALL.to_vec(),
    };
    let name = args.suite.map_or("all", Suite::name);
    let opts = SuiteOptions { caps: args.caps, seed: args.seed, flavor: args.flavor };
    let start = Instant::now();
    let mut report = SuiteReport::new(name, args.range, args.seed);
    for &suite in &suites {
        for n in args.range.0..=args.range.1 {
            report.absorb(suite.name(), run_suite(suite, n, &opts)?);
        }
    }
    report.finish();
    // wall time stays off stdout so reports are reproducible byte for byte
    eprintln!("{name}: {}/{} claims pass in {:.2?}", report.passed(), report.claims.len(), start.elapsed());
    let text = match args.format {
        Format::Json => report.to_json(),
        Format::Text | Format::Tsv => report.to_text(),
    };
    let stdout = match args.export {
        Some(_) => {
            deliver(text, args.export)?;
            format!("{}/{} claims pass\n", report.passed(), report.claims.len())
        }
        None => text,
    };
    Ok(Outcome { stdout, code: if report.all_pass() { EXIT_PASS } else { EXIT_FAIL } })
}

/// Letters of the alphabet for `act`: those of the monomial plus any paired
/// letters, with the pairs as the involution.
fn act_alphabet(m: &LieMonomial, pairs: &[(char, char)]) -> Result<Alphabet, CliError> {
    let mut letters: Vec<char> = Vec::new();
    for t in m.factors() {
        letters.extend(t.foliage().iter().map(|&b| b as char));
    }
    for &(a, b) in pairs {
        letters.extend([a, b]);
    }
    letters.sort_unstable();
    letters.dedup();
    let s: String = letters.into_iter().collect();
    Ok(Alphabet::new(&s)?.with_pairs(pairs)?)
}

pub fn parse_pairs(s: &str) -> Result<Vec<(char, char)>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let cs: Vec<char> = p.chars().filter(|&c| c != ':' && c != '~').collect();
            match cs[..] {
                [a, b] => Ok((a, b)),
                _ => Err(format!("bad letter pair {p:?}, expected e.g. aA")),
            }
        })
        .collect()
}

#[derive(Serialize)]
struct SpanTerm {
    monomial: String,
    coeff: String,
}

#[derive(Serialize)]
struct ActRecord {
    element: String,
    monomial: String,
    result: String,
    span: Option<SpanRecord>,
}

#[derive(Serialize)]
struct SpanRecord {
    kind: &'static str,
    terms: Option<Vec<SpanTerm>>,
}

pub fn act(element: &str, monomial: &str, pairs: &[(char, char)], format: Format, caps: &Caps) -> Result<Outcome, CliError> {
    let value = parse_element(element, caps)?;
    let m: LieMonomial = monomial.parse()?;
    if m.degree() != value.n() {
        return Err(usage(format!("monomial has degree {} but the element lives in degree {}", m.degree(), value.n())));
    }
    let w = m.expand();
    let alph = act_alphabet(&m, pairs)?;
    let result: TensorElement = match &value {
        Value::A(u) => w.act(u, &alph)?,
        Value::B(u) => w.act(u, &alph)?,
    };
    let span = match &value {
        Value::A(u) => {
            let in_peak = peak_coords(u, PeakBasis::P, caps).is_ok();
            let (kind, coeffs): (&'static str, Option<SpanCoefficients>) = if in_peak && m.is_parity_sorted() {
                ("odd factors rearranged", check_charpeak(u, &m)?)
            } else {
                ("factors rearranged", check_gr(u, &m)?)
            };
            let terms = coeffs.map(|c| {
                c.into_iter()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(mono, x)| SpanTerm { monomial: mono.to_string(), coeff: x.to_string() })
                    .collect()
            });
            Some(SpanRecord { kind, terms })
        }
        Value::B(_) => None,
    };
    let rec = ActRecord { element: output::element_text(&value), monomial: m.to_string(), result: result.to_string(), span };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&rec).expect("act record serializes") + "\n",
        Format::Text | Format::Tsv => {
            let mut s = format!("result: {}\n", rec.result);
            if let Some(sp) = &rec.span {
                match &sp.terms {
                    Some(ts) if ts.is_empty() => {
                        let _ = writeln!(s, "span ({}): 0", sp.kind);
                    }
                    Some(ts) => {
                        let _ = writeln!(s, "span ({}):", sp.kind);
                        for t in ts {
                            let _ = writeln!(s, "  {}\t{}", t.coeff, t.monomial);
                        }
                    }
                    None => {
                        let _ = writeln!(s, "span ({}): not in span", sp.kind);
                    }
                }
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Serialize)]
struct StatTerm {
    statistic: String,
    coeff: String,
}

#[derive(Serialize)]
struct IdempotentRecord {
    name: String,
    /// Basis of the statistic sums: descents of signed permutations or peaks.
    family: &'static str,
    terms: Vec<StatTerm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    left_ideal_dim: Option<String>,
}

pub fn idempotents(n: usize, dims: bool, format: Format, export: Option<&Path>, caps: &Caps) -> Result<Outcome, CliError> {
    let stat = |name: &str, coeff: Rational| StatTerm { statistic: name.into(), coeff: coeff.to_string() };
    let mut recs = Vec::new();
    recs.push(IdempotentRecord {
        name: format!("e_({n})"),
        family: "y",
        terms: (0..=n).map(|j| stat(&format!("y_{j}"), e_coefficient(n, j))).collect(),
        left_ideal_dim: None,
    });
    if n >= 1 {
        recs.push(IdempotentRecord {
            name: format!("e_(0,{n})"),
            family: "y0",
            terms: (1..=n).map(|j| stat(&format!("y0_{j}"), e0_coefficient(n, j))).collect(),
            left_ideal_dim: None,
        });
    }
    let ideal_dim = |u: peakalg::Result<peakalg::algebra::SnElement>| -> Result<Option<String>, CliError> {
        if !dims {
            return Ok(None);
        }
        let d = left_ideal_dimension(&u?, caps)?;
        Ok(Some(if d.agree() { d.by_rank.to_string() } else { format!("trace {} rank {}", d.by_trace, d.by_rank) }))
    };
    if n % 2 == 0 {
        recs.push(IdempotentRecord {
            name: format!("rho_({n})"),
            family: "p",
            terms: (0..=n / 2).map(|j| stat(&format!("p_{j}"), rho_coefficient(n, j))).collect(),
            left_ideal_dim: ideal_dim(rho_n(n, caps))?,
        });
    } else {
        recs.push(IdempotentRecord {
            name: format!("rho_(0,{n})"),
            family: "p0",
            terms: (1..=(n + 1) / 2).map(|j| stat(&format!("p0_{j}"), rho0_coefficient(n, j))).collect(),
            left_ideal_dim: ideal_dim(rho_0n(n, caps))?,
        });
    }
    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                n: usize,
                idempotents: Vec<IdempotentRecord>,
            }
            serde_json::to_string_pretty(&Out { n, idempotents: recs }).expect("idempotents serialize") + "\n"
        }
        Format::Text | Format::Tsv => {
            let mut s = String::new();
            for r in &recs {
                let _ = write!(s, "{} =", r.name);
                for (i, t) in r.terms.iter().enumerate() {
                    let (sign, mag) = match t.coeff.strip_prefix('-') {
                        Some(m) => ("-", m),
                        None => ("+", t.coeff.as_str()),
                    };
                    match (i, sign) {
                        (0, "+") => {
                            let _ = write!(s, " {mag} {}", t.statistic);
                        }
                        _ => {
                            let _ = write!(s, " {sign} {mag} {}", t.statistic);
                        }
                    }
                }
                if let Some(d) = &r.left_ideal_dim {
                    let _ = write!(s, "\n  left ideal dimension {d}");
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(Outcome::ok(deliver(text, export)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_pairs() {
        assert_eq!(parse_range("2..6"), Ok((2, 6)));
        assert_eq!(parse_range("2..=6"), Ok((2, 6)));
        assert_eq!(parse_range("4"), Ok((4, 4)));
        assert!(parse_range("6..2").is_err());
        assert!(parse_range("x").is_err());
        assert_eq!(parse_pairs("aA, b:B"), Ok(vec![('a', 'A'), ('b', 'B')]));
        assert!(parse_pairs("abc").is_err());
    }

    #[test]
    fn act_reports_span() {
        let out = act("P{5}@6", "[a,b] c [a,[b,d]]", &[], Format::Text, &Caps::default()).unwrap();
        assert!(out.stdout.contains("span (odd factors rearranged):"), "{}", out.stdout);
        assert!(out.stdout.contains("-1\t[a,b] c [a,[b,d]]"));
        assert!(out.stdout.contains("  1\t[a,b] [a,[b,d]] c"));
        let zero = act("P{4}@5", "[a,b] [c,d] a", &[], Format::Text, &Caps::default()).unwrap();
        assert!(zero.stdout.starts_with("result: 0\n"));
        assert!(act("P{1}@3", "a b", &[], Format::Text, &Caps::default()).is_err());
    }

    #[test]
    fn incompatible_matrix_pair() {
        let r = matrix(BasisName::Peak(PeakBasis::P), BasisName::X, 3, GroupType::A, Format::Tsv, None);
        assert!(matches!(r, Err(CliError::Usage(_))));
    }
}
