use alloc::boxed::Box;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::TensorElement;
use crate::error::{Error, Result};

/// A bracketing of letters, expanded by `[x, y] = xy - yx`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieTree {
    Leaf(u8),
    Bracket(Box<LieTree>, Box<LieTree>),
}

impl LieTree {
    pub fn leaf(letter: char) -> Self {
        LieTree::Leaf(letter as u8)
    }

    pub fn bracket(left: LieTree, right: LieTree) -> Self {
        LieTree::Bracket(Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            LieTree::Leaf(_) => 1,
            LieTree::Bracket(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.degree() % 2 == 0
    }

    /// Leaves from left to right.
    pub fn foliage(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            LieTree::Leaf(l) => out.push(*l),
            LieTree::Bracket(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn expand(&self) -> TensorElement {
        match self {
            LieTree::Leaf(l) => TensorElement::word(alloc::vec![*l]),
            LieTree::Bracket(l, r) => {
                let (a, b) = (l.expand(), r.expand());
                &(&a * &b) - &(&b * &a)
            }
        }
    }
}

impl fmt::Display for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieTree::Leaf(l) => write!(f, "{}", *l as char),
            LieTree::Bracket(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

impl fmt::Debug for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A product of Lie trees, written with spaces between the factors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieMonomial {
    factors: Vec<LieTree>,
}

impl LieMonomial {
    pub fn new(factors: Vec<LieTree>) -> Self {
        LieMonomial { factors }
    }

    pub fn factors(&self) -> &[LieTree] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(LieTree::degree).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(LieTree::degree).collect()
    }

    /// Even-degree factors all precede the odd-degree ones.
    pub fn is_parity_sorted(&self) -> bool {
        let first_odd = self.factors.iter().position(|t| !t.is_even()).unwrap_or(self.factors.len());
        self.factors[first_odd..].iter().all(|t| !t.is_even())
    }

    /// Number of leading even factors.
    pub fn even_prefix_len(&self) -> usize {
        self.factors.iter().take_while(|t| t.is_even()).count()
    }

    pub fn expand(&self) -> TensorElement {
        self.factors.iter().fold(TensorElement::one(), |acc, t| &acc * &t.expand())
    }

    pub fn factor_expansions(&self) -> Vec<TensorElement> {
        self.factors.iter().map(LieTree::expand).collect()
    }

    /// The factors taken in the given order.
    pub fn permuted(&self, order: &[usize]) -> LieMonomial {
        LieMonomial { factors: order.iter().map(|&i| self.factors[i].clone()).collect() }
    }
}

impl fmt::Display for LieMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LieMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::InvalidMonomial(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn tree(&mut self) -> Result<LieTree> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b'[') => {
                self.pos += 1;
                let l = self.tree()?;
                self.expect(b',')?;
                let r = self.tree()?;
                self.expect(b']')?;
                Ok(LieTree::bracket(l, r))
            }
            Some(&c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                if self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_alphabetic()) {
                    return Err(self.err("factors must be separated by spaces"));
                }
                Ok(LieTree::Leaf(c))
            }
            _ => Err(self.err("expected a letter or '['")),
        }
    }
}

impl FromStr for LieTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, bytes: s.as_bytes(), pos: 0 };
        let t = p.tree()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(t)
    }
}

impl FromStr for LieMonomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, bytes: s.as_bytes(), pos: 0 };
        let mut factors = Vec::new();
        loop {
            p.skip_ws();
            if p.pos == s.len() {
                break;
            }
            let start = p.pos;
            factors.push(p.tree()?);
            if p.pos < s.len() && !s.as_bytes()[p.pos].is_ascii_whitespace() {
                p.pos = start;
                return Err(p.err("factors must be separated by spaces"));
            }
        }
        if factors.is_empty() {
            return Err(Error::InvalidMonomial("empty monomial".to_string()));
        }
        Ok(LieMonomial { factors })
    }
}
