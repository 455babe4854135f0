//! Group-algebra elements of `kS_n` and `kB_n` with exact rational
//! coefficients, the internal product and the convolution product.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::permutations::{shuffles, GroupElement, GroupType, Permutation, SignedPermutation};
use crate::Rational;

/// A finitely supported map from degree-`n` group elements to rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element<G: GroupElement> {
    n: usize,
    terms: BTreeMap<G, Rational>,
}

pub type SnElement = Element<Permutation>;
pub type BnElement = Element<SignedPermutation>;

impl<G: GroupElement> Element<G> {
    pub fn zero(n: usize) -> Self {
        Element { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(G::identity(n))
    }

    pub fn basis(g: G) -> Self {
        Self::term(g, Rational::one())
    }

    pub fn term(g: G, c: Rational) -> Self {
        let mut e = Self::zero(g.degree());
        if !c.is_zero() {
            e.terms.insert(g, c);
        }
        e
    }

    /// Builds `Σ c_g g`, merging repeated keys.
    pub fn from_terms<I: IntoIterator<Item = (G, Rational)>>(n: usize, terms: I) -> Result<Self> {
        let mut e = Self::zero(n);
        for (g, c) in terms {
            if g.degree() != n {
                return Err(Error::DegreeMismatch(n, g.degree()));
            }
            e.add_term(g, c);
        }
        Ok(e)
    }

    /// `Σ_{g ∈ set} g`.
    pub fn sum_of<'a, I: IntoIterator<Item = &'a G>>(n: usize, set: I) -> Self {
        let mut e = Self::zero(n);
        for g in set {
            debug_assert_eq!(g.degree(), n);
            e.terms.insert(g.clone(), Rational::one());
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group_type(&self) -> GroupType {
        G::TYPE
    }

    pub fn terms(&self) -> &BTreeMap<G, Rational> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&G, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_of(&self, g: &G) -> Rational {
        self.terms.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, g: G, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Element { n: self.n, terms: self.terms.iter().map(|(g, x)| (g.clone(), x * c)).collect() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// `Σ c_i u_i` over elements of one degree.
    pub fn linear_combination<'a, I>(n: usize, parts: I) -> Self
    where
        I: IntoIterator<Item = (Rational, &'a Self)>,
    {
        let mut out = Self::zero(n);
        for (c, u) in parts {
            assert_eq!(u.n, n, "degree mismatch in linear combination");
            for (g, x) in &u.terms {
                out.add_term(g.clone(), x * &c);
            }
        }
        out
    }

    /// Product in the group algebra, `(Σ a_g g)(Σ b_h h) = Σ a_g b_h gh`.
    pub fn internal_product(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.n));
        }
        Ok(integer_kernel(self, other).unwrap_or_else(|| self.naive_product(other)))
    }

    fn naive_product(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<G, Rational> = BTreeMap::new();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                *acc.entry(g.compose(h)).or_insert_with(Rational::zero) += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Element { n: self.n, terms: acc }
    }

    /// `u ∗ v = Σ_{σ, τ} u_σ v_τ Σ_{ξ ∈ Sh(p,q)} ξ·(σ × τ)`.
    pub fn convolution(&self, other: &Self) -> Self {
        let (p, q) = (self.n, other.n);
        let sh = shuffles(p, q);
        let mut acc: BTreeMap<G, Rational> = BTreeMap::new();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                let c = a * b;
                let st = s.cross(t);
                for xi in &sh {
                    *acc.entry(st.left_by_unsigned(xi)).or_insert_with(Rational::zero) += &c;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Element { n: p + q, terms: acc }
    }

    /// Applies a linear map given on group elements.
    pub fn map_linear<H: GroupElement>(&self, m: usize, f: impl Fn(&G) -> H) -> Element<H> {
        let mut out = Element::zero(m);
        for (g, c) in &self.terms {
            out.add_term(f(g), c.clone());
        }
        out
    }

    /// Dense coefficient vector indexed by group rank.
    pub fn to_dense(&self) -> Vec<Rational> {
        let mut v = alloc::vec![Rational::zero(); G::group_order(self.n)];
        for (g, c) in &self.terms {
            v[g.rank()] = c.clone();
        }
        v
    }
}

impl BnElement {
    /// Linear extension of the sign-forgetting map `φ: kB_n → kS_n`.
    pub fn forget_signs(&self) -> SnElement {
        self.map_linear(self.n, |g| g.forget_signs())
    }
}

impl SnElement {
    /// The inclusion `kS_n ⊆ kB_n`.
    pub fn to_signed(&self) -> BnElement {
        self.map_linear(self.n, |g| g.to_signed())
    }
}

/// Exact product through integer numerators when they fit in `i64`,
/// accumulated densely in `i128` by group rank. `None` means the caller
/// should fall back to big rationals.
fn integer_kernel<G: GroupElement>(u: &Element<G>, v: &Element<G>) -> Option<Element<G>> {
    let (du, nu) = scaled_numerators(u)?;
    let (dv, nv) = scaled_numerators(v)?;
    let n = u.n;
    let elems = G::elements(n);
    let ru: Vec<(&G, i64)> = u.terms.keys().zip(nu).collect();
    let rv: Vec<(&G, i64)> = v.terms.keys().zip(nv).collect();
    let mut acc = alloc::vec![0i128; elems.len()];
    for (g, a) in &ru {
        for (h, b) in &rv {
            let r = g.compose(h).rank();
            acc[r] = acc[r].checked_add(*a as i128 * *b as i128)?;
        }
    }
    let denom = Rational::from_integer(du * dv);
    let mut terms = BTreeMap::new();
    for (r, c) in acc.into_iter().enumerate() {
        if c != 0 {
            terms.insert(elems[r].clone(), Rational::from_integer(BigInt::from(c)) / &denom);
        }
    }
    Some(Element { n, terms })
}

fn scaled_numerators<G: GroupElement>(u: &Element<G>) -> Option<(BigInt, Vec<i64>)> {
    let mut d = BigInt::one();
    for c in u.terms.values() {
        d = d.lcm(c.denom());
    }
    let mut out = Vec::with_capacity(u.terms.len());
    for c in u.terms.values() {
        let x = c.numer() * (&d / c.denom());
        out.push(x.to_i64()?);
    }
    Some((d, out))
}

impl<G: GroupElement> Neg for &Element<G> {
    type Output = Element<G>;

    fn neg(self) -> Element<G> {
        Element { n: self.n, terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect() }
    }
}

impl<G: GroupElement> Neg for Element<G> {
    type Output = Element<G>;

    fn neg(self) -> Element<G> {
        -&self
    }
}

impl<G: GroupElement> Add for &Element<G> {
    type Output = Element<G>;

    /// Panics on a degree mismatch; use [`Element::try_add`] to check.
    fn add(self, rhs: &Element<G>) -> Element<G> {
        self.try_add(rhs).expect("degree mismatch in sum")
    }
}

impl<G: GroupElement> Add for Element<G> {
    type Output = Element<G>;

    fn add(self, rhs: Element<G>) -> Element<G> {
        &self + &rhs
    }
}

impl<G: GroupElement> Sub for &Element<G> {
    type Output = Element<G>;

    fn sub(self, rhs: &Element<G>) -> Element<G> {
        self.try_sub(rhs).expect("degree mismatch in difference")
    }
}

impl<G: GroupElement> Sub for Element<G> {
    type Output = Element<G>;

    fn sub(self, rhs: Element<G>) -> Element<G> {
        &self - &rhs
    }
}

impl<G: GroupElement> Mul for &Element<G> {
    type Output = Element<G>;

    fn mul(self, rhs: &Element<G>) -> Element<G> {
        self.internal_product(rhs).expect("degree mismatch in product")
    }
}

impl<G: GroupElement> Mul for Element<G> {
    type Output = Element<G>;

    fn mul(self, rhs: Element<G>) -> Element<G> {
        &self * &rhs
    }
}

impl<G: GroupElement> fmt::Display for Element<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "[{g}]")?;
        }
        Ok(())
    }
}

impl<G: GroupElement> fmt::Debug for Element<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element<{}{}>({self})", G::TYPE, self.n)
    }
}

/// An element of `⊕_n kS_n` (or `⊕_n kB_n`) with finitely many nonzero
/// homogeneous components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedElement<G: GroupElement> {
    parts: BTreeMap<usize, Element<G>>,
}

impl<G: GroupElement> Default for GradedElement<G> {
    fn default() -> Self {
        GradedElement { parts: BTreeMap::new() }
    }
}

impl<G: GroupElement> GradedElement<G> {
    pub fn unit() -> Self {
        Element::identity(0).into()
    }

    pub fn component(&self, n: usize) -> Element<G> {
        self.parts.get(&n).cloned().unwrap_or_else(|| Element::zero(n))
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    fn accumulate(&mut self, e: Element<G>) {
        let n = e.n;
        let sum = match self.parts.remove(&n) {
            Some(old) => &old + &e,
            None => e,
        };
        if !sum.is_zero() {
            self.parts.insert(n, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for e in other.parts.values() {
            out.accumulate(e.clone());
        }
        out
    }

    pub fn convolution(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for a in self.parts.values() {
            for b in other.parts.values() {
                out.accumulate(a.convolution(b));
            }
        }
        out
    }
}

impl<G: GroupElement> From<Element<G>> for GradedElement<G> {
    fn from(e: Element<G>) -> Self {
        let mut g = GradedElement::default();
        g.accumulate(e);
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn b(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn basics() {
        let u = SnElement::basis(p("12"));
        let v = SnElement::basis(p("21"));
        assert_eq!(&u * &v, v);
        let rho = (&u - &v).scale(&q(1, 2));
        assert_eq!(&rho * &rho, rho);
        assert_eq!(rho.coefficient_of(&p("12")), q(1, 2));
        assert!((&u - &u).is_zero());
        assert!(u.try_add(&SnElement::identity(3)).is_err());
        assert!(u.internal_product(&SnElement::identity(3)).is_err());
        assert!(SnElement::from_terms(2, [(p("123"), q(1, 1))]).is_err());
    }

    #[test]
    fn convolution_examples() {
        let one = SnElement::identity(1);
        let c = one.convolution(&one);
        assert_eq!(c, SnElement::from_terms(2, [(p("12"), q(1, 1)), (p("21"), q(1, 1))]).unwrap());
        // X_{(0,1)} = 1 + (-1) in B_1; its convolution square is X_{(0,1,1)}
        let x01 = BnElement::from_terms(1, [(b("1"), q(1, 1)), (b("-1"), q(1, 1))]).unwrap();
        let sq = x01.convolution(&x01);
        let expected: Vec<_> = SignedPermutation::elements(2)
            .iter()
            .filter(|s| s.descent_set().is_subset(crate::BitSet::from_slice(&[0, 1])))
            .cloned()
            .collect();
        assert_eq!(sq, BnElement::sum_of(2, &expected));
        let e0 = SnElement::identity(0);
        assert_eq!(e0.convolution(&one), one);
    }

    #[test]
    fn kernel_matches_naive() {
        let all = SignedPermutation::elements(3);
        let u = BnElement::from_terms(3, all.iter().step_by(5).enumerate().map(|(i, g)| (g.clone(), q(i as i64 - 3, 7)))).unwrap();
        let v = BnElement::from_terms(3, all.iter().step_by(3).enumerate().map(|(i, g)| (g.clone(), q(2 * i as i64 + 1, 3)))).unwrap();
        assert_eq!(u.internal_product(&v).unwrap(), u.naive_product(&v));
        let big = BnElement::term(all[4].clone(), Rational::from_integer(BigInt::from(i64::MAX)));
        assert_eq!(big.internal_product(&big).unwrap(), big.naive_product(&big));
    }

    fn sn_elem(n: usize) -> impl Strategy<Value = SnElement> {
        let order = Permutation::group_order(n);
        prop::collection::vec((0..order, -4i64..5, 1i64..4), 0..6).prop_map(move |ts| {
            SnElement::from_terms(n, ts.into_iter().map(|(r, a, d)| (Permutation::unrank(n, r), q(a, d)))).unwrap()
        })
    }

    fn bn_elem(n: usize) -> impl Strategy<Value = BnElement> {
        let order = SignedPermutation::group_order(n);
        prop::collection::vec((0..order, -4i64..5, 1i64..4), 0..5).prop_map(move |ts| {
            BnElement::from_terms(n, ts.into_iter().map(|(r, a, d)| (SignedPermutation::unrank(n, r), q(a, d)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn bilinear_and_associative(u in sn_elem(3), v in sn_elem(3), w in sn_elem(3)) {
            prop_assert_eq!(&(&u + &v) * &w, &(&u * &w) + &(&v * &w));
            prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        }

        #[test]
        fn convolution_associative(u in sn_elem(1), v in sn_elem(2), w in sn_elem(1)) {
            prop_assert_eq!(u.convolution(&v).convolution(&w), u.convolution(&v.convolution(&w)));
            let unit = SnElement::identity(0);
            prop_assert_eq!(unit.convolution(&v), v.clone());
            prop_assert_eq!(v.convolution(&unit), v);
        }

        #[test]
        fn convolution_associative_b(u in bn_elem(1), v in bn_elem(1), w in bn_elem(1)) {
            prop_assert_eq!(u.convolution(&v).convolution(&w), u.convolution(&v.convolution(&w)));
        }

        #[test]
        fn phi_is_homomorphism(u in bn_elem(3), v in bn_elem(3), a in bn_elem(1), c in bn_elem(2)) {
            prop_assert_eq!((&u * &v).forget_signs(), &u.forget_signs() * &v.forget_signs());
            prop_assert_eq!(a.convolution(&c).forget_signs(), a.forget_signs().convolution(&c.forget_signs()));
        }

        #[test]
        fn graded_convolution(u in sn_elem(1), v in sn_elem(2)) {
            let gu: GradedElement<Permutation> = u.clone().into();
            let gv = GradedElement::from(v.clone()).add(&GradedElement::unit());
            let prod = gu.convolution(&gv);
            prop_assert_eq!(prod.component(3), u.convolution(&v));
            prop_assert_eq!(prod.component(1), u);
        }
    }

    #[test]
    fn phi_on_basis_pairs() {
        for n in 0..=3 {
            let all = SignedPermutation::elements(n);
            for s in all.iter() {
                for t in all.iter() {
                    let (x, y) = (BnElement::basis(s.clone()), BnElement::basis(t.clone()));
                    assert_eq!((&x * &y).forget_signs(), &x.forget_signs() * &y.forget_signs());
                }
            }
        }
        for p_ in 0..=2 {
            for q_ in 0..=2 {
                for s in SignedPermutation::elements(p_).iter() {
                    for t in SignedPermutation::elements(q_).iter() {
                        let (x, y) = (BnElement::basis(s.clone()), BnElement::basis(t.clone()));
                        assert_eq!(x.convolution(&y).forget_signs(), x.forget_signs().convolution(&y.forget_signs()));
                    }
                }
            }
        }
    }
}
