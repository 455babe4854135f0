//! The tensor algebra over an involutive alphabet, the right action of
//! `S_n` and `B_n` on words, and Lie monomials.
//!
//! Words are byte strings of ASCII letters. `S_n` acts by
//! `(v_1 ... v_n)·σ = v_{σ(1)} ... v_{σ(n)}`; `B_n` does the same and bars
//! the letter whenever `σ(i)` is negative.

mod checks;
mod lyndon;
mod tree;

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::permutations::{GroupElement, Permutation, SignedPermutation};
use crate::Rational;

pub use checks::*;
pub use lyndon::{is_lyndon, lyndon_count, lyndon_lie_basis, lyndon_words, standard_bracketing};
pub use tree::{LieMonomial, LieTree};

/// A finite set of ASCII letters with an involution `a ↦ ā`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<u8>,
    bar: [u8; 128],
}

impl Alphabet {
    /// The given letters with the trivial involution.
    pub fn new(letters: &str) -> Result<Self> {
        let mut seen = [false; 128];
        let mut out = Vec::new();
        for b in letters.bytes() {
            if !b.is_ascii_alphabetic() {
                return Err(Error::InvalidAlphabet(format!("{:?} is not an ASCII letter", b as char)));
            }
            if seen[b as usize] {
                return Err(Error::InvalidAlphabet(format!("repeated letter {}", b as char)));
            }
            seen[b as usize] = true;
            out.push(b);
        }
        let mut bar = [0u8; 128];
        for (i, slot) in bar.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Ok(Alphabet { letters: out, bar })
    }

    /// The first `k` lowercase letters, trivial involution.
    pub fn standard(k: usize) -> Self {
        assert!(k <= 26, "at most 26 standard letters");
        let s: String = (0..k).map(|i| (b'a' + i as u8) as char).collect();
        Alphabet::new(&s).expect("lowercase letters")
    }

    /// Swaps each pair `(a, b)` under the involution.
    pub fn with_pairs(mut self, pairs: &[(char, char)]) -> Result<Self> {
        for &(a, b) in pairs {
            let (x, y) = (self.index_of(a)?, self.index_of(b)?);
            if self.bar[x as usize] != x || self.bar[y as usize] != y {
                return Err(Error::InvalidAlphabet(format!("letter paired twice in ({a},{b})")));
            }
            self.bar[x as usize] = y;
            self.bar[y as usize] = x;
        }
        Ok(self)
    }

    fn index_of(&self, c: char) -> Result<u8> {
        let b = c as u32;
        if b < 128 && self.letters.contains(&(b as u8)) {
            Ok(b as u8)
        } else {
            Err(Error::InvalidAlphabet(format!("{c} is not in the alphabet")))
        }
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, letter: u8) -> bool {
        self.letters.contains(&letter)
    }

    pub fn bar(&self, letter: u8) -> u8 {
        self.bar[letter as usize & 127]
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.iter().all(|&l| self.bar(l) == l)
    }

    /// All words of length `n`, in lexicographic order.
    pub fn words(&self, n: usize) -> Vec<Vec<u8>> {
        let mut out = alloc::vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * self.letters.len());
            for w in &out {
                for &l in &self.letters {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet(")?;
        for &l in &self.letters {
            let b = self.bar(l);
            if b == l {
                write!(f, "{}", l as char)?;
            } else {
                write!(f, "{}~{}", l as char, b as char)?;
            }
        }
        write!(f, ")")
    }
}

/// Group elements acting on the right of words.
pub trait WordAction: GroupElement {
    fn act_on_word(&self, word: &[u8], alphabet: &Alphabet) -> Vec<u8>;
}

impl WordAction for Permutation {
    fn act_on_word(&self, word: &[u8], _: &Alphabet) -> Vec<u8> {
        self.as_slice().iter().map(|&i| word[i as usize - 1]).collect()
    }
}

impl WordAction for SignedPermutation {
    fn act_on_word(&self, word: &[u8], alphabet: &Alphabet) -> Vec<u8> {
        self.as_slice()
            .iter()
            .map(|&i| {
                let v = word[i.unsigned_abs() as usize - 1];
                if i < 0 {
                    alphabet.bar(v)
                } else {
                    v
                }
            })
            .collect()
    }
}

/// A finitely supported linear combination of words.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TensorElement {
    terms: BTreeMap<Vec<u8>, Rational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    /// The empty word.
    pub fn one() -> Self {
        TensorElement::word(Vec::new())
    }

    pub fn word(w: Vec<u8>) -> Self {
        TensorElement::term(w, Rational::one())
    }

    pub fn term(w: Vec<u8>, c: Rational) -> Self {
        let mut t = TensorElement::zero();
        t.add_term(w, c);
        t
    }

    /// A single word given as a string of letters.
    pub fn from_word(s: &str) -> Result<Self> {
        if !s.bytes().all(|b| b.is_ascii_alphabetic()) {
            return Err(Error::InvalidMonomial(format!("{s:?} is not a word")));
        }
        Ok(TensorElement::word(s.as_bytes().to_vec()))
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u8>, Rational)>>(terms: I) -> Self {
        let mut t = TensorElement::zero();
        for (w, c) in terms {
            t.add_term(w, c);
        }
        t
    }

    pub fn add_term(&mut self, w: Vec<u8>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u8>, Rational> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u8>, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &[u8]) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// The common length of all words, `None` for zero or mixed lengths.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Vec::len);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return TensorElement::zero();
        }
        TensorElement { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// `v_1 ... v_n ↦ v̄_n ... v̄_1`, an anti-automorphism.
    pub fn reverse_involution(&self, alphabet: &Alphabet) -> Self {
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.iter().rev().map(|&l| alphabet.bar(l)).collect(), c.clone()))
                .collect(),
        }
    }

    /// `∇(a) = a + ā`.
    pub fn nabla(&self, alphabet: &Alphabet) -> Self {
        self + &self.reverse_involution(alphabet)
    }

    /// `{a, b} = ab + (-1)^{deg b - 1} ba`; `b` must be homogeneous.
    pub fn brace(&self, b: &TensorElement) -> Result<Self> {
        if b.is_zero() {
            return Ok(TensorElement::zero());
        }
        let d = b.degree().ok_or(Error::Inhomogeneous)?;
        let ab = self * b;
        let ba = b * self;
        Ok(if d % 2 == 1 { &ab + &ba } else { &ab - &ba })
    }

    /// Right action of a group-algebra element on a homogeneous tensor.
    pub fn act<G: WordAction>(&self, u: &Element<G>, alphabet: &Alphabet) -> Result<Self> {
        let n = u.n();
        if let Some(w) = self.terms.keys().find(|w| w.len() != n) {
            return Err(Error::DegreeMismatch(w.len(), n));
        }
        let mut out = TensorElement::zero();
        for (g, a) in u.iter() {
            for (w, b) in &self.terms {
                out.add_term(g.act_on_word(w, alphabet), a * b);
            }
        }
        Ok(out)
    }

    /// [`TensorElement::act`] for `S_n`, where no involution is involved.
    pub fn act_s(&self, u: &Element<Permutation>) -> Result<Self> {
        self.act(u, &Alphabet::standard(0))
    }

    /// Words ordered by the key map, with coefficients as a dense vector.
    pub(crate) fn dense(&self, index: &BTreeMap<Vec<u8>, usize>) -> Vec<Rational> {
        let mut v = alloc::vec![Rational::zero(); index.len()];
        for (w, c) in &self.terms {
            v[index[w]] = c.clone();
        }
        v
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

/// Concatenation product.
impl Mul for &TensorElement {
    type Output = TensorElement;
    fn mul(self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a} ")?;
            }
            if w.is_empty() {
                write!(f, "1")?;
            } else {
                f.write_str(core::str::from_utf8(w).unwrap_or("?"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shared word index for a family of tensors.
pub(crate) fn word_index<'a, I: IntoIterator<Item = &'a TensorElement>>(items: I) -> BTreeMap<Vec<u8>, usize> {
    let mut idx = BTreeMap::new();
    for t in items {
        for w in t.terms.keys() {
            let next = idx.len();
            idx.entry(w.clone()).or_insert(next);
        }
    }
    idx
}

/// Coefficients expressing `target` in terms of `spanning`, if it lies in
/// their span. Dependent spanning sets are allowed.
pub fn span_coordinates(target: &TensorElement, spanning: &[TensorElement]) -> Option<Vec<Rational>> {
    let idx = word_index(spanning.iter().chain(core::iter::once(target)));
    let vecs: Vec<Vec<Rational>> = spanning.iter().map(|t| t.dense(&idx)).collect();
    crate::linalg::solve_combination(&vecs, &target.dense(&idx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    fn t(s: &str) -> TensorElement {
        TensorElement::from_word(s).unwrap()
    }

    fn r(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    #[test]
    fn act_by_index_shuffle() {
        let s: Permutation = "213".parse().unwrap();
        assert_eq!(t("abc").act_s(&Element::basis(s)).unwrap(), t("bac"));
        assert_eq!(t("abc").act_s(&Element::identity(3)).unwrap(), t("abc"));
        assert!(matches!(t("ab").act_s(&Element::identity(3)), Err(Error::DegreeMismatch(2, 3))));
    }

    #[test]
    fn signed_action_bars_negative_entries() {
        let alph = Alphabet::new("abxy").unwrap().with_pairs(&[('a', 'x'), ('b', 'y')]).unwrap();
        let s = SignedPermutation::from_slice(&[-2, 1]).unwrap();
        assert_eq!(t("ab").act(&Element::basis(s), &alph).unwrap(), t("ya"));
        let triv = Alphabet::standard(2);
        let s = SignedPermutation::from_slice(&[-2, -1]).unwrap();
        assert_eq!(t("ab").act(&Element::basis(s), &triv).unwrap(), t("ba"));
    }

    #[test]
    fn nabla_and_brace() {
        let alph = Alphabet::standard(4);
        assert_eq!(t("ab").nabla(&alph), &t("ab") + &t("ba"));
        assert_eq!(t("a").brace(&t("b")).unwrap(), &t("ab") + &t("ba"));
        assert_eq!(t("ab").brace(&t("cd")).unwrap(), &t("abcd") - &t("cdab"));
        let mixed = &t("a") + &t("bc");
        assert_eq!(t("a").brace(&mixed), Err(Error::Inhomogeneous));
        let paired = Alphabet::new("ab").unwrap().with_pairs(&[('a', 'b')]).unwrap();
        assert_eq!(t("aab").reverse_involution(&paired), t("abb"));
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new("aa").is_err());
        assert!(Alphabet::new("a1").is_err());
        assert!(Alphabet::standard(2).with_pairs(&[('a', 'c')]).is_err());
        assert!(Alphabet::standard(3).with_pairs(&[('a', 'b'), ('b', 'c')]).is_err());
        assert_eq!(Alphabet::standard(2).words(3).len(), 8);
    }

    #[test]
    fn display() {
        let x = &(&t("ab") - &t("ba")).scale(&r(2)) + &TensorElement::one();
        assert_eq!(x.to_string(), "1 + 2 ab - 2 ba");
        assert_eq!(TensorElement::zero().to_string(), "0");
    }

    #[test]
    fn span_with_dependent_vectors() {
        let s = vec![t("ab"), t("ab"), &t("ab") + &t("ba")];
        let c = span_coordinates(&(&t("ba") - &t("ab")), &s).unwrap();
        let back = s.iter().zip(&c).fold(TensorElement::zero(), |acc, (v, x)| &acc + &v.scale(x));
        assert_eq!(back, &t("ba") - &t("ab"));
        assert!(span_coordinates(&t("aa"), &s).is_none());
    }

    fn word(n: usize) -> impl Strategy<Value = Vec<u8>> {
        proptest::collection::vec(prop_oneof![Just(b'a'), Just(b'b'), Just(b'c')], n)
    }

    fn tensor(n: usize) -> impl Strategy<Value = TensorElement> {
        proptest::collection::vec((word(n), -3i64..4), 0..5)
            .prop_map(|ts| TensorElement::from_terms(ts.into_iter().map(|(w, c)| (w, r(c)))))
    }

    proptest! {
        #[test]
        fn right_action_s3(w in tensor(3)) {
            let g = Permutation::elements(3);
            for s in g.iter() {
                for u in g.iter() {
                    let lhs = w.act_s(&Element::basis(s.clone())).unwrap().act_s(&Element::basis(u.clone())).unwrap();
                    prop_assert_eq!(lhs, w.act_s(&Element::basis(s.compose(u))).unwrap());
                }
            }
        }

        #[test]
        fn right_action_b2(w in tensor(2)) {
            let alph = Alphabet::new("abc").unwrap().with_pairs(&[('a', 'c')]).unwrap();
            let g = SignedPermutation::elements(2);
            for s in g.iter() {
                for u in g.iter() {
                    let lhs = w.act(&Element::basis(s.clone()), &alph).unwrap()
                        .act(&Element::basis(u.clone()), &alph).unwrap();
                    prop_assert_eq!(lhs, w.act(&Element::basis(s.compose(u)), &alph).unwrap());
                }
            }
        }

        #[test]
        fn reversal_is_anti_automorphism(a in tensor(2), b in tensor(3)) {
            let alph = Alphabet::new("abc").unwrap().with_pairs(&[('b', 'c')]).unwrap();
            prop_assert_eq!(
                (&a * &b).reverse_involution(&alph),
                &b.reverse_involution(&alph) * &a.reverse_involution(&alph)
            );
            prop_assert_eq!(a.reverse_involution(&alph).reverse_involution(&alph), a);
        }
    }

    #[test]
    fn signed_action_factors_through_forgetting_signs() {
        let alph = Alphabet::standard(4);
        for n in 1..=4 {
            let words = alph.words(n);
            for s in SignedPermutation::elements(n).iter() {
                let u = Element::basis(s.clone());
                for w in words.iter().step_by(7) {
                    let w = TensorElement::word(w.clone());
                    assert_eq!(w.act(&u, &alph).unwrap(), w.act_s(&u.forget_signs()).unwrap());
                }
            }
        }
    }
}
