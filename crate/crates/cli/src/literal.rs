//! Element literals.
//!
//! A literal is a sum of terms `c*T` where `T` is one of
//!
//! - `P{1,3}@6`, `Q{}@4`, `O{2}@5`, `Obar{1,4}@6`: a peak basis element
//!   indexed by a sparse subset;
//! - `Q(0,3,1)`, `O(1,2,2)`, `Obar ao:(2,1,1)`: a peak basis element indexed
//!   by an almost-odd (`ao:`) or thin (`thin:`) composition;
//! - `X{0,2}@B5`, `Y{1}@A3`: a descent basis element;
//! - `X(0,2,3)`, `Y pc:(1,2)`, `X comp:(2,1)`: a descent basis element indexed
//!   by a pseudocomposition (type B) or a composition (type A);
//! - `[132]`, `[-2,1]`, `B[12]`: a single permutation;
//! - `rho(4)`, `rho0(5)`, `e(3)`, `e0(3)`: the Eulerian-type idempotents.
//!
//! Untagged compositions are read as almost-odd when possible, except for
//! `O`, which prefers thin. `X` and `Y` default to pseudocompositions.

use peakalg::algebra::{BnElement, SnElement};
use peakalg::bases::{descent_element_a, descent_element_b, peak_element, AnyElement, PeakBasis};
use peakalg::combinatorics::{
    sparse_from_almostodd, sparse_from_thin, AlmostOddComposition, Composition, PseudoComposition, SparseSubset,
    ThinComposition,
};
use peakalg::eulerian::{e_0n, e_n, rho_0n, rho_n};
use peakalg::permutations::{GroupType, Permutation, SignedPermutation};
use peakalg::{BitSet, Caps, Rational};

use crate::CliError;

/// A parsed element of `kS_n` or `kB_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    A(SnElement),
    B(BnElement),
}

impl Value {
    pub fn n(&self) -> usize {
        match self {
            Value::A(u) => u.n(),
            Value::B(u) => u.n(),
        }
    }

    pub fn group_type(&self) -> GroupType {
        match self {
            Value::A(_) => GroupType::A,
            Value::B(_) => GroupType::B,
        }
    }

    fn scale(&self, c: &Rational) -> Value {
        match self {
            Value::A(u) => Value::A(u.scale(c)),
            Value::B(u) => Value::B(u.scale(c)),
        }
    }

    fn add(&self, other: &Value) -> Result<Value, CliError> {
        let mismatch = || {
            CliError::Usage(format!(
                "cannot add elements of {}{} and {}{}",
                self.group_type(),
                self.n(),
                other.group_type(),
                other.n()
            ))
        };
        match (self, other) {
            (Value::A(a), Value::A(b)) => a.try_add(b).map(Value::A).map_err(|_| mismatch()),
            (Value::B(a), Value::B(b)) => a.try_add(b).map(Value::B).map_err(|_| mismatch()),
            _ => Err(mismatch()),
        }
    }
}

impl From<AnyElement> for Value {
    fn from(e: AnyElement) -> Value {
        match e {
            AnyElement::A(u) => Value::A(u),
            AnyElement::B(u) => Value::B(u),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses a whole literal.
pub fn parse_element(src: &str, caps: &Caps) -> Result<Value, CliError> {
    let mut total: Option<Value> = None;
    for (sign, term) in split_terms(src)? {
        let (coeff, body) = split_coefficient(term)?;
        let v = parse_term(body, caps)?.scale(&(coeff * Rational::from_integer(sign.into())));
        total = Some(match total {
            None => v,
            Some(t) => t.add(&v)?,
        });
    }
    total.ok_or_else(|| usage("empty element literal"))
}

/// Splits at top-level `+` and `-`.
fn split_terms(src: &str) -> Result<Vec<(i64, &str)>, CliError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut sign = 1;
    let mut start = 0;
    for (i, c) in src.char_indices() {
        match c {
            '{' | '(' | '[' => depth += 1,
            '}' | ')' | ']' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let piece = src[start..i].trim();
                if piece.is_empty() {
                    if !src[..i].trim().is_empty() && !src[..i].trim_end().ends_with(['+', '-']) {
                        return Err(usage(format!("misplaced sign in {src:?}")));
                    }
                } else {
                    out.push((sign, piece));
                    sign = 1;
                }
                if c == '-' {
                    sign = -sign;
                }
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(usage(format!("unbalanced brackets in {src:?}")));
        }
    }
    if depth != 0 {
        return Err(usage(format!("unbalanced brackets in {src:?}")));
    }
    let piece = src[start..].trim();
    if piece.is_empty() {
        return Err(usage(format!("missing term in {src:?}")));
    }
    out.push((sign, piece));
    Ok(out)
}

fn split_coefficient(term: &str) -> Result<(Rational, &str), CliError> {
    match term.split_once('*') {
        Some((c, body)) => {
            let c: Rational = c.trim().parse().map_err(|_| usage(format!("bad coefficient {c:?}")))?;
            Ok((c, body.trim()))
        }
        None => Ok((Rational::from_integer(1.into()), term)),
    }
}

fn parse_term(term: &str, caps: &Caps) -> Result<Value, CliError> {
    if let Some(rest) = term.strip_prefix('[') {
        return permutation(rest, GroupType::A);
    }
    if let Some(rest) = term.strip_prefix("B[") {
        return permutation(rest, GroupType::B);
    }
    for (name, build) in [
        ("rho0", Eulerian::Rho0),
        ("rho", Eulerian::Rho),
        ("e0", Eulerian::E0),
        ("e", Eulerian::E),
    ] {
        if let Some(arg) = term.strip_prefix(name).and_then(|r| r.trim().strip_prefix('(')) {
            let arg = arg.strip_suffix(')').ok_or_else(|| usage(format!("bad literal {term:?}")))?;
            let n: usize = arg.trim().parse().map_err(|_| usage(format!("bad degree in {term:?}")))?;
            return build.element(n, caps);
        }
    }
    let name_end = term.find(|c: char| !c.is_alphabetic()).unwrap_or(term.len());
    let (name, rest) = term.split_at(name_end);
    let rest = rest.trim_start();
    match name {
        "X" | "Y" => descent_term(name == "X", rest, caps),
        _ => {
            let basis: PeakBasis = name.parse().map_err(|_| usage(format!("unknown basis {name:?} in {term:?}")))?;
            peak_term(basis, rest, caps)
        }
    }
}

#[derive(Clone, Copy)]
enum Eulerian {
    E,
    E0,
    Rho,
    Rho0,
}

impl Eulerian {
    fn element(self, n: usize, caps: &Caps) -> Result<Value, CliError> {
        Ok(match self {
            Eulerian::E => Value::B(e_n(n, caps)?),
            Eulerian::E0 => Value::B(e_0n(n, caps)?),
            Eulerian::Rho => Value::A(rho_n(n, caps)?),
            Eulerian::Rho0 => Value::A(rho_0n(n, caps)?),
        })
    }
}

fn permutation(rest: &str, ty: GroupType) -> Result<Value, CliError> {
    let inner = rest.strip_suffix(']').ok_or_else(|| usage(format!("unterminated permutation [{rest}")))?;
    let as_b: SignedPermutation = inner.parse()?;
    if ty == GroupType::A && as_b.as_slice().iter().all(|&x| x > 0) {
        let p: Permutation = inner.parse()?;
        return Ok(Value::A(SnElement::basis(p)));
    }
    Ok(Value::B(BnElement::basis(as_b)))
}

/// `{1,3}@6` or `{0,2}@B5`; returns the set, the type tag if any, and `n`.
fn subset_index(rest: &str) -> Result<(BitSet, Option<GroupType>, usize), CliError> {
    let bad = || usage(format!("bad subset index {rest:?}"));
    let inner = rest.strip_prefix('{').ok_or_else(bad)?;
    let (set, tail) = inner.split_once('}').ok_or_else(bad)?;
    let tail = tail.trim().strip_prefix('@').ok_or_else(bad)?.trim();
    let (ty, n) = match tail.chars().next() {
        Some(c @ ('A' | 'B')) => (Some(if c == 'A' { GroupType::A } else { GroupType::B }), &tail[1..]),
        _ => (None, tail),
    };
    let n: usize = n.parse().map_err(|_| bad())?;
    let mut bits = BitSet::EMPTY;
    for part in set.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i: usize = part.parse().map_err(|_| bad())?;
        if i >= 64 {
            return Err(bad());
        }
        bits.insert(i);
    }
    Ok((bits, ty, n))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    Thin,
    AlmostOdd,
    Pseudo,
    Plain,
}

/// `(0,3,1)` with an optional `thin:`, `ao:`, `pc:` or `comp:` tag.
fn composition_index(rest: &str) -> Result<(Option<Family>, Vec<usize>), CliError> {
    let (family, body) = match rest.split_once(':') {
        Some((tag, body)) => {
            let f = match tag.trim() {
                "thin" => Family::Thin,
                "ao" => Family::AlmostOdd,
                "pc" => Family::Pseudo,
                "comp" => Family::Plain,
                t => return Err(usage(format!("unknown composition tag {t:?}"))),
            };
            (Some(f), body.trim())
        }
        None => (None, rest),
    };
    let inner = body
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(|| usage(format!("bad composition {rest:?}")))?;
    let parts = inner
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<usize>().map_err(|_| usage(format!("bad part {p:?} in {rest:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((family, parts))
}

fn peak_term(basis: PeakBasis, rest: &str, caps: &Caps) -> Result<Value, CliError> {
    let f = if rest.starts_with('{') {
        let (bits, ty, n) = subset_index(rest)?;
        if ty == Some(GroupType::B) {
            return Err(usage(format!("peak basis elements live in type A: {rest:?}")));
        }
        SparseSubset::from_bits(n, bits)?
    } else {
        let (family, parts) = composition_index(rest)?;
        let family = match family {
            Some(f) => f,
            None => {
                let ao = AlmostOddComposition::from_parts(&parts).is_ok();
                let thin = ThinComposition::new(parts.clone()).is_ok();
                match (ao, thin) {
                    (true, true) if basis == PeakBasis::O => Family::Thin,
                    (true, _) => Family::AlmostOdd,
                    (false, true) => Family::Thin,
                    (false, false) => {
                        return Err(usage(format!("{rest:?} is neither almost-odd nor thin")));
                    }
                }
            }
        };
        match family {
            Family::Thin => sparse_from_thin(&ThinComposition::new(parts)?),
            Family::AlmostOdd => sparse_from_almostodd(&AlmostOddComposition::from_parts(&parts)?),
            _ => return Err(usage("peak bases are indexed by thin or almost-odd compositions")),
        }
    };
    Ok(Value::A(peak_element(basis, &f, caps)?))
}

fn descent_term(cumulative: bool, rest: &str, caps: &Caps) -> Result<Value, CliError> {
    let (ty, n, set) = if rest.starts_with('{') {
        let (bits, ty, n) = subset_index(rest)?;
        let ty = ty.ok_or_else(|| usage(format!("descent index needs a type, as in {{1}}@A3: {rest:?}")))?;
        (ty, n, bits)
    } else {
        let (family, parts) = composition_index(rest)?;
        match family.unwrap_or(Family::Pseudo) {
            Family::Pseudo | Family::AlmostOdd => {
                let b = PseudoComposition::from_parts(&parts)?;
                (GroupType::B, b.n(), b.subset())
            }
            Family::Plain | Family::Thin => {
                let c = Composition::new(parts)?;
                (GroupType::A, c.n(), c.subset())
            }
        }
    };
    Ok(match ty {
        GroupType::A => Value::A(descent_element_a(set, n, cumulative, caps)?),
        GroupType::B => Value::B(descent_element_b(set, n, cumulative, caps)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use peakalg::bases::PeakBasis;

    fn parse(s: &str) -> Value {
        parse_element(s, &Caps::default()).unwrap()
    }

    fn peak(b: PeakBasis, n: usize, e: &[usize]) -> SnElement {
        peak_element(b, &SparseSubset::new(n, e).unwrap(), &Caps::default()).unwrap()
    }

    #[test]
    fn subset_and_composition_indices() {
        assert_eq!(parse("P{1}@2"), Value::A(SnElement::basis("21".parse().unwrap())));
        assert_eq!(parse("Q{1,3}@6"), Value::A(peak(PeakBasis::Q, 6, &[1, 3])));
        // (0,3,1) is almost-odd with peak set {2}
        assert_eq!(parse("Q(0,3,1)"), Value::A(peak(PeakBasis::Q, 4, &[2])));
        assert_eq!(parse("Q(0,3,1)"), parse("Q ao:(0,3,1)"));
        // (1,2,2) is only thin
        assert_eq!(parse("O(1,2,2)"), parse("O thin:(1,2,2)"));
        assert_eq!(parse("Obar{1,3}@6"), parse("TO{1,3}@6"));
    }

    #[test]
    fn descent_indices() {
        let x = parse("X{0}@B3");
        assert_eq!(x, parse("X(0,3)"));
        if let Value::B(u) = &x {
            assert_eq!(u.len(), 8);
        } else {
            panic!("expected type B");
        }
        assert_eq!(parse("Y{1}@A3"), parse("Y comp:(1,2)"));
        assert_eq!(parse("X{}@A3"), Value::A(SnElement::identity(3)));
    }

    #[test]
    fn sums_and_coefficients() {
        let v = parse("2*[12] - 1/2*[21] + [21]");
        let mut want = SnElement::term("12".parse().unwrap(), Rational::from_integer(2.into()));
        want.add_term("21".parse().unwrap(), Rational::new(1.into(), 2.into()));
        assert_eq!(v, Value::A(want));
        assert_eq!(parse("-[-1]"), Value::B(BnElement::basis("-1".parse().unwrap()).scale(&Rational::from_integer((-1).into()))));
        assert_eq!(parse("P{}@3 + P{1}@3 + P{2}@3"), Value::A(SnElement::sum_of(3, peakalg::permutations::enumerate_group::<Permutation>(3, &Caps::default()).unwrap().iter())));
    }

    #[test]
    fn rejects_bad_literals() {
        let caps = Caps::default();
        for bad in ["", "P{1,2}@4", "P{1}", "Z{1}@3", "X{1}@3", "Q(1,3)", "Q ao:(1,2)", "[12] + B[12]", "[12] + [123]", "(", "2*", "P{1}@2 +"] {
            assert!(parse_element(bad, &caps).is_err(), "{bad}");
        }
    }
}
