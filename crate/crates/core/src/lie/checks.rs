//! The action characterizations of the peak algebra, its ideals and the
//! descent algebras, checked on finite batteries of Lie monomials.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{is_lyndon, lyndon_lie_basis, standard_bracketing, word_index, Alphabet, LieMonomial, LieTree, TensorElement, WordAction};
use crate::algebra::{BnElement, Element, SnElement};
use crate::bases::{descent_element_a, descent_element_b, ideal_membership, peak_basis_elements, peak_element, pi, PeakBasis};
use crate::bitset::BitSet;
use crate::check::Report;
use crate::combinatorics::{enumerate_subsets, SparseSubset};
use crate::error::{Error, Result};
use crate::eulerian::{rho_0n, rho_n};
use crate::linalg::Subspace;
use crate::permutations::{GroupElement, Permutation, SignedPermutation};
use crate::{Caps, Rational};

/// Spanning monomials with the coefficients of a solution.
pub type SpanCoefficients = Vec<(LieMonomial, Rational)>;

/// `X_(0,n)`, the sum of the signed permutations with descent set in `{0}`.
pub fn x0n(n: usize, caps: &Caps) -> Result<BnElement> {
    descent_element_b(BitSet::from_slice(&[0]), n, true, caps)
}

/// `P_(0,n) = P_∅ + P_{1}`.
pub fn p0n(n: usize, caps: &Caps) -> Result<SnElement> {
    let mut u = peak_element(PeakBasis::P, &SparseSubset::empty(n), caps)?;
    if n >= 2 {
        u = &u + &peak_element(PeakBasis::P, &SparseSubset::new(n, &[1])?, caps)?;
    }
    Ok(u)
}

/// `R_(p,q) = 1̄_p ∗ 1_q` with `1̄_p = (-p, ..., -2, -1)`.
pub fn r_element(p: usize, q: usize) -> BnElement {
    let images: Vec<i64> = (1..=p as i64).map(|i| i - 1 - p as i64).collect();
    let bar = SignedPermutation::from_slice(&images).expect("signed permutation");
    Element::basis(bar).convolution(&Element::identity(q))
}

/// `X_(0,n) = Σ_{p=0}^{n} R_(p,n-p)`.
pub fn r_decomposition_holds(n: usize, caps: &Caps) -> Result<bool> {
    let sum = (0..=n).fold(BnElement::zero(n), |acc, p| &acc + &r_element(p, n - p));
    Ok(sum == x0n(n, caps)?)
}

/// `∇(... ∇(∇(p_1) p_2) ... p_k)`.
pub fn nested_nabla(parts: &[TensorElement], alphabet: &Alphabet) -> TensorElement {
    let mut it = parts.iter();
    let Some(first) = it.next() else {
        return TensorElement::one();
    };
    it.fold(first.nabla(alphabet), |acc, p| (&acc * p).nabla(alphabet))
}

/// `{... {{p_1, p_2}, p_3} ..., p_k}`.
pub fn nested_brace(parts: &[TensorElement]) -> Result<TensorElement> {
    let mut it = parts.iter();
    let Some(first) = it.next() else {
        return Ok(TensorElement::one());
    };
    it.try_fold(first.clone(), |acc, p| acc.brace(p))
}

/// `m · X_(0,n)` against the nested `∇` expression, and the decomposition
/// of `X_(0,n)` into the `R_(p,n-p)`.
pub fn check_x0n_action(m: &LieMonomial, alphabet: &Alphabet, caps: &Caps) -> Result<bool> {
    let n = m.degree();
    let lhs = m.expand().act(&x0n(n, caps)?, alphabet)?;
    let parts = m.factor_expansions();
    let rhs = nested_nabla(&parts, alphabet);
    let skew = {
        let p1 = &parts[0];
        p1.reverse_involution(alphabet) == -p1
    };
    Ok(lhs == rhs && (!skew || lhs.is_zero()) && r_decomposition_holds(n, caps)?)
}

/// `m · P_(0,n)` is the nested brace when the first factor is odd and `0`
/// when it is even.
pub fn check_p0n_action(m: &LieMonomial, caps: &Caps) -> Result<bool> {
    let lhs = m.expand().act_s(&p0n(m.degree(), caps)?)?;
    if m.factors()[0].is_even() {
        return Ok(lhs.is_zero());
    }
    Ok(lhs == nested_brace(&m.factor_expansions())?)
}

fn permutations_of(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return alloc::vec![Vec::new()];
    }
    Permutation::elements(k).iter().map(|p| p.as_slice().iter().map(|&i| i as usize - 1).collect()).collect()
}

fn solve_in_span(target: &TensorElement, spanning: Vec<LieMonomial>) -> Option<SpanCoefficients> {
    let distinct: Vec<LieMonomial> = spanning.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let exps: Vec<TensorElement> = distinct.iter().map(LieMonomial::expand).collect();
    let coeffs = super::span_coordinates(target, &exps)?;
    Some(distinct.into_iter().zip(coeffs).collect())
}

/// Whether `m · u` is a combination of the monomials obtained by permuting
/// the factors of `m`; returns the coefficients when it is.
pub fn check_gr(u: &SnElement, m: &LieMonomial) -> Result<Option<SpanCoefficients>> {
    let lhs = m.expand().act_s(u)?;
    let spanning = permutations_of(m.len()).iter().map(|o| m.permuted(o)).collect();
    Ok(solve_in_span(&lhs, spanning))
}

fn require_parity_sorted(m: &LieMonomial) -> Result<usize> {
    if !m.is_parity_sorted() {
        return Err(Error::InvalidMonomial(format!("even factors must precede odd ones in {m}")));
    }
    Ok(m.even_prefix_len())
}

/// For `m = p_1 ... p_u q_1 ... q_v` (even `p`, odd `q`), whether `m · u`
/// lies in the span of `p_1 ... p_u q_{s(1)} ... q_{s(v)}`, `s ∈ S_v`.
pub fn check_charpeak(u: &SnElement, m: &LieMonomial) -> Result<Option<SpanCoefficients>> {
    let e = require_parity_sorted(m)?;
    let lhs = m.expand().act_s(u)?;
    Ok(solve_in_span(&lhs, odd_rearrangements(m, e)))
}

fn odd_rearrangements(m: &LieMonomial, e: usize) -> Vec<LieMonomial> {
    permutations_of(m.len() - e)
        .iter()
        .map(|s| {
            let order: Vec<usize> = (0..e).chain(s.iter().map(|&i| e + i)).collect();
            m.permuted(&order)
        })
        .collect()
}

/// Total degree of the leading even factors.
pub fn even_degree(m: &LieMonomial) -> usize {
    m.factors()[..m.even_prefix_len()].iter().map(LieTree::degree).sum()
}

/// The dichotomy characterizing the ideal of index `j`: `m · u = 0` when
/// the even part has degree above `2j`, span membership otherwise.
pub fn check_charpeakideal(u: &SnElement, j: usize, m: &LieMonomial) -> Result<bool> {
    let e = require_parity_sorted(m)?;
    let lhs = m.expand().act_s(u)?;
    Ok(ideal_dichotomy(&lhs, m, e, j))
}

fn ideal_dichotomy(lhs: &TensorElement, m: &LieMonomial, e: usize, j: usize) -> bool {
    if even_degree(m) > 2 * j {
        lhs.is_zero()
    } else {
        solve_in_span(lhs, odd_rearrangements(m, e)).is_some()
    }
}

/// `(ℓ_0 ℓ_1 ... ℓ_v) · u = ℓ_0 ((ℓ_1 ... ℓ_v) · π(u))` for `ℓ_0` of degree 2.
pub fn check_action_pi(u: &SnElement, m: &LieMonomial, caps: &Caps) -> Result<bool> {
    if m.factors()[0].degree() != 2 {
        return Err(Error::InvalidMonomial(format!("first factor of {m} must have degree 2")));
    }
    let lhs = m.expand().act_s(u)?;
    let image = pi(u, caps)?.ok_or(Error::Undefined("π below degree 2"))?;
    let tail = LieMonomial::new(m.factors()[1..].to_vec());
    let rhs = &m.factors()[0].expand() * &tail.expand().act_s(&image)?;
    Ok(lhs == rhs)
}

/// Reversal fixes odd-degree Lie elements and negates even-degree ones,
/// checked on the Lyndon basis of degree `d` over `letters` letters.
pub fn check_parity_invariance(d: usize, letters: usize) -> bool {
    let alph = Alphabet::standard(letters);
    lyndon_lie_basis(d, &alph).iter().all(|t| {
        let e = t.expand();
        let r = e.reverse_involution(&alph);
        if d % 2 == 1 {
            r == e
        } else {
            r == -&e
        }
    })
}

/// Image of `w ↦ w · ρ` on all words of length `n`, and the Lie-theoretic
/// target: the Lyndon expansions (odd `n`, `ρ = ρ_(0,n)`) or the products
/// of even-degree Lyndon expansions (even `n`, `ρ = ρ_(n)`).
pub fn rho_projection_spaces(n: usize, letters: usize, caps: &Caps) -> Result<(Subspace, Subspace)> {
    let alph = Alphabet::standard(letters);
    let rho = if n % 2 == 1 { rho_0n(n, caps)? } else { rho_n(n, caps)? };
    let words = alph.words(n);
    let idx = word_index(&words.iter().map(|w| TensorElement::word(w.clone())).collect::<Vec<_>>());
    let image: Vec<Vec<Rational>> = words
        .iter()
        .map(|w| TensorElement::word(w.clone()).act_s(&rho).map(|t| t.dense(&idx)))
        .collect::<Result<_>>()?;
    let target: Vec<TensorElement> = if n % 2 == 1 {
        lyndon_lie_basis(n, &alph).iter().map(LieTree::expand).collect()
    } else {
        even_products(n, &alph)
    };
    let target: Vec<Vec<Rational>> = target.iter().map(|t| t.dense(&idx)).collect();
    Ok((Subspace::from_spanning(idx.len(), &image), Subspace::from_spanning(idx.len(), &target)))
}

fn even_products(n: usize, alph: &Alphabet) -> Vec<TensorElement> {
    if n == 0 {
        return alloc::vec![TensorElement::one()];
    }
    let mut out = Vec::new();
    for d in (2..=n).step_by(2) {
        let heads: Vec<TensorElement> = lyndon_lie_basis(d, alph).iter().map(LieTree::expand).collect();
        for rest in even_products(n - d, alph) {
            for h in &heads {
                out.push(h * &rest);
            }
        }
    }
    out
}

/// The two spaces of [`rho_projection_spaces`] coincide.
pub fn check_rho_projections(n: usize, letters: usize, caps: &Caps) -> Result<bool> {
    let (image, target) = rho_projection_spaces(n, letters, caps)?;
    Ok(image.contains_subspace(&target) && target.contains_subspace(&image))
}

/// `m · (u ∗ v) = Σ (m_S · u)(m_T · v)` over the splittings of the factors
/// of `m` into complementary subsequences with `deg m_S = deg u`.
pub fn check_convolution_split<G: WordAction>(
    m: &LieMonomial,
    u: &Element<G>,
    v: &Element<G>,
    alphabet: &Alphabet,
) -> Result<bool> {
    let lhs = m.expand().act(&u.convolution(v), alphabet)?;
    let k = m.len();
    let degs = m.degrees();
    let mut rhs = TensorElement::zero();
    for s in enumerate_subsets(0, k as i64 - 1) {
        let (left, right): (Vec<usize>, Vec<usize>) = (0..k).partition(|&i| s.contains(i));
        if left.iter().map(|&i| degs[i]).sum::<usize>() != u.n() {
            continue;
        }
        let a = m.permuted(&left).expand().act(u, alphabet)?;
        let b = m.permuted(&right).expand().act(v, alphabet)?;
        rhs = &rhs + &(&a * &b);
    }
    Ok(lhs == rhs)
}

/// Acting on a word with distinct letters recovers every coefficient of `u`.
pub fn check_faithful<G: WordAction>(u: &Element<G>, alphabet: &Alphabet) -> Result<bool> {
    let n = u.n();
    if alphabet.len() < n {
        return Err(Error::InvalidAlphabet(format!("need at least {n} letters")));
    }
    let w = TensorElement::word(alphabet.letters()[..n].to_vec());
    let image = w.act(u, alphabet)?;
    Ok(image.len() == u.len() && u.is_zero() == image.is_zero())
}

fn rng_for(seed: u64, n: usize, tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ tag.rotate_left(32))
}

/// A standard bracketing of a uniformly chosen Lyndon word of length `d`.
pub fn random_lie_tree<R: Rng>(d: usize, letters: &[u8], rng: &mut R) -> LieTree {
    assert!(d == 1 || letters.len() >= 2, "no Lyndon words of length {d}");
    loop {
        let w: Vec<u8> = (0..d).map(|_| letters[rng.gen_range(0..letters.len())]).collect();
        if is_lyndon(&w) {
            return standard_bracketing(&w);
        }
    }
}

fn compositions_with(m: usize, keep: fn(usize) -> bool) -> Vec<Vec<usize>> {
    if m == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=m).filter(|&d| keep(d)) {
        for mut rest in compositions_with(m - first, keep) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn fill(types: Vec<Vec<usize>>, n: usize, rng: &mut ChaCha8Rng, samples: usize) -> Vec<LieMonomial> {
    let alph = Alphabet::standard(n.max(2));
    let mut out = Vec::new();
    for t in types {
        for _ in 0..samples {
            out.push(LieMonomial::new(t.iter().map(|&d| random_lie_tree(d, alph.letters(), rng)).collect()));
        }
    }
    out
}

/// `samples` random monomials for every ordered factor-degree type of
/// total degree `n`, with factors over the first `n` letters.
pub fn monomial_battery(n: usize, seed: u64, samples: usize) -> Vec<LieMonomial> {
    let mut rng = rng_for(seed, n, 1);
    fill(compositions_with(n, |_| true), n, &mut rng, samples)
}

/// As [`monomial_battery`], restricted to types listing the even degrees
/// before the odd ones.
pub fn parity_sorted_battery(n: usize, seed: u64, samples: usize) -> Vec<LieMonomial> {
    let mut types = Vec::new();
    for e in (0..=n).step_by(2) {
        for evens in compositions_with(e, |d| d % 2 == 0) {
            for odds in compositions_with(n - e, |d| d % 2 == 1) {
                types.push(evens.iter().chain(&odds).copied().collect());
            }
        }
    }
    let mut rng = rng_for(seed, n, 2);
    fill(types, n, &mut rng, samples)
}

/// First battery monomial on which the descent-algebra criterion fails.
pub fn gr_witness(u: &SnElement, seed: u64, samples: usize) -> Result<Option<LieMonomial>> {
    for m in monomial_battery(u.n(), seed, samples) {
        if check_gr(u, &m)?.is_none() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// First battery monomial on which the peak-algebra criterion fails.
pub fn charpeak_witness(u: &SnElement, seed: u64, samples: usize) -> Result<Option<LieMonomial>> {
    for m in parity_sorted_battery(u.n(), seed, samples) {
        if check_charpeak(u, &m)?.is_none() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// First battery monomial on which the index-`j` dichotomy fails.
pub fn charpeakideal_witness(u: &SnElement, j: usize, seed: u64, samples: usize) -> Result<Option<LieMonomial>> {
    for m in parity_sorted_battery(u.n(), seed, samples) {
        if !check_charpeakideal(u, j, &m)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Monomials acted on per factor-degree type in [`lie_report`].
pub const BATTERY_SAMPLES: usize = 2;

fn paired_alphabet(n: usize) -> Alphabet {
    let alph = Alphabet::standard(n.max(2));
    let letters: Vec<char> = alph.letters().iter().map(|&b| b as char).collect();
    let pairs: Vec<(char, char)> = letters.chunks_exact(2).map(|p| (p[0], p[1])).collect();
    alph.with_pairs(&pairs).expect("distinct letters")
}

/// The worked example for the peak criterion: `P_{5}` in degree 6 on
/// `[a,b] c [a,[b,d]]`.
pub fn charpeak_example(caps: &Caps) -> Result<Option<SpanCoefficients>> {
    let u = peak_element(PeakBasis::P, &SparseSubset::new(6, &[5])?, caps)?;
    check_charpeak(&u, &"[a,b] c [a,[b,d]]".parse()?)
}

/// The worked example for the ideal criterion: `P_{4}` in degree 5 on
/// `[a,b] [c,d] a`.
pub fn charpeakideal_example(caps: &Caps) -> Result<TensorElement> {
    let u = peak_element(PeakBasis::P, &SparseSubset::new(5, &[4])?, caps)?;
    "[a,b] [c,d] a".parse::<LieMonomial>()?.expand().act_s(&u)
}

fn expected_charpeak_coefficients(c: &SpanCoefficients) -> bool {
    let want = [("[a,b] c [a,[b,d]]", -1), ("[a,b] [a,[b,d]] c", 1)];
    want.iter().all(|(m, x)| {
        let m: LieMonomial = m.parse().expect("literal");
        c.iter().any(|(k, v)| *k == m && *v == Rational::from_integer((*x).into()))
    }) && c.len() == 2
}

/// Every action claim at degree `n` on the seeded battery.
pub fn lie_report(n: usize, seed: u64, caps: &Caps) -> Result<Report> {
    let mut r = Report::new("lie");
    if n == 0 {
        return Ok(r);
    }
    let battery = monomial_battery(n, seed, BATTERY_SAMPLES);
    let sorted = parity_sorted_battery(n, seed, BATTERY_SAMPLES);

    if n == 5 {
        let e = charpeakideal_example(caps)?;
        r.push("ideal action example P{4}@5 on [a,b] [c,d] a", Some(5), e.is_zero(), format!("{e}"));
    }
    if n == 6 {
        let c = charpeak_example(caps)?;
        let ok = c.as_ref().is_some_and(expected_charpeak_coefficients);
        let detail = match &c {
            Some(c) => c.iter().map(|(m, x)| format!("{x}*({m})")).collect::<Vec<_>>().join(" + "),
            None => "not in span".into(),
        };
        r.push("peak action example P{5}@6 on [a,b] c [a,[b,d]]", Some(6), ok, detail);
    }

    r.push("parity invariance of Lie elements", Some(n), check_parity_invariance(n, if n <= 5 { 3 } else { 2 }), "");

    if n <= caps.type_b {
        let paired = paired_alphabet(n);
        let triv = Alphabet::standard(n.max(2));
        let mut ok = r_decomposition_holds(n, caps)?;
        for m in &battery {
            ok &= check_x0n_action(m, &triv, caps)? && check_x0n_action(m, &paired, caps)?;
        }
        r.push("X_(0,n) action is nested nabla", Some(n), ok, format!("{} monomials, 2 involutions", battery.len()));
    }

    if n > caps.type_a {
        return Ok(r);
    }
    let mut ok = true;
    for m in &battery {
        ok &= check_p0n_action(m, caps)?;
    }
    r.push("P_(0,n) action is nested brace", Some(n), ok, format!("{} monomials", battery.len()));

    let mut ok = true;
    let stride = if n > 5 { 5 } else { 1 };
    for &set in enumerate_subsets(1, n as i64 - 1).iter().step_by(stride) {
        let x = descent_element_a(set, n, true, caps)?;
        for m in &battery {
            ok &= check_gr(&x, m)?.is_some();
        }
    }
    r.push("descent elements preserve permuted factors", Some(n), ok, "");
    if n >= 3 {
        let u = SnElement::basis(Permutation::from_slice(&non_descent_witness_perm(n))?);
        let w = gr_witness(&u, seed, 3)?;
        r.push("non-descent element has a witness", Some(n), w.is_some(), w.map(|m| format!("{m}")).unwrap_or_default());
    }

    let obar = peak_basis_elements(PeakBasis::Obar, n, caps)?;
    let mut acts: Vec<Vec<TensorElement>> = Vec::new();
    for u in &obar {
        acts.push(sorted.iter().map(|m| m.expand().act_s(u)).collect::<Result<_>>()?);
    }
    let mut ok = true;
    for row in &acts {
        for (m, lhs) in sorted.iter().zip(row) {
            ok &= solve_in_span(lhs, odd_rearrangements(m, m.even_prefix_len())).is_some();
        }
    }
    r.push("peak elements preserve even prefix", Some(n), ok, format!("{} elements, {} monomials", obar.len(), sorted.len()));
    if n >= 3 {
        let u = SnElement::basis(Permutation::from_slice(&non_peak_witness_perm(n))?);
        let w = charpeak_witness(&u, seed, 3)?;
        r.push("non-peak element has a witness", Some(n), w.is_some(), w.map(|m| format!("{m}")).unwrap_or_default());
    }

    let mut dichotomy = true;
    let mut converse = true;
    for j in 0..=n / 2 {
        for (u, row) in obar.iter().zip(&acts) {
            let member = ideal_membership(u, j, caps)?;
            let holds: Vec<bool> =
                sorted.iter().zip(row).map(|(m, lhs)| ideal_dichotomy(lhs, m, m.even_prefix_len(), j)).collect();
            if member {
                dichotomy &= holds.iter().all(|&h| h);
            } else {
                converse &= holds.iter().any(|&h| !h);
            }
        }
    }
    r.push("ideal elements satisfy the even-degree dichotomy", Some(n), dichotomy, "");
    r.push("non-members violate the dichotomy", Some(n), converse, "");

    let mut ok = true;
    for u in &obar {
        if !ideal_membership(u, 0, caps)? {
            continue;
        }
        for m in battery.iter().filter(|m| m.factors()[0].is_even()) {
            ok &= m.expand().act_s(u)?.is_zero();
        }
    }
    r.push("index-0 elements kill even-first monomials", Some(n), ok, "");

    if n >= 2 {
        let mut ok = true;
        let mut count = 0;
        for u in &obar {
            for m in battery.iter().filter(|m| m.factors()[0].degree() == 2) {
                ok &= check_action_pi(u, m, caps)?;
                count += 1;
            }
        }
        r.push("degree-2 first factor reduces through pi", Some(n), ok, format!("{count} cases"));
    }

    let letters = if n <= 4 { 3 } else { 2 };
    if n <= 6 {
        let (image, target) = rho_projection_spaces(n, letters, caps)?;
        let ok = image.contains_subspace(&target) && target.contains_subspace(&image);
        r.push("rho image is the Lie target", Some(n), ok, format!("rank {}", image.dim()));
    }

    let mut ok = true;
    let triv = Alphabet::standard(n);
    for p in 1..n {
        let u = SnElement::basis(Permutation::elements(p).last().expect("nonempty").clone());
        let v = SnElement::basis(Permutation::elements(n - p)[0].clone());
        let ub = u.to_signed();
        let vb = BnElement::basis(SignedPermutation::elements(n - p).last().expect("nonempty").clone());
        for m in battery.iter().take(8) {
            ok &= check_convolution_split(m, &u, &v, &triv)?;
            if n <= caps.type_b {
                ok &= check_convolution_split(m, &ub, &vb, &paired_alphabet(n))?;
            }
        }
    }
    r.push("action of a convolution splits over factors", Some(n), ok, "");

    let mut ok = true;
    for u in &obar {
        ok &= check_faithful(u, &Alphabet::standard(n))?;
    }
    r.push("action on distinct letters is faithful", Some(n), ok, "");
    Ok(r)
}

/// `1 3 2 4 ... n`: its descent class also contains `2 3 1 4 ... n`.
fn non_descent_witness_perm(n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (1..=n).collect();
    v.swap(1, 2);
    v
}

/// `1 3 2 4 ... n`: its peak class also contains `2 3 1 4 ... n`.
fn non_peak_witness_perm(n: usize) -> Vec<usize> {
    non_descent_witness_perm(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_traits::Zero;

    fn t(s: &str) -> TensorElement {
        TensorElement::from_word(s).unwrap()
    }

    fn m(s: &str) -> LieMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        let caps = Caps::default();
        let c = charpeak_example(&caps).unwrap().unwrap();
        assert!(expected_charpeak_coefficients(&c), "{c:?}");
        assert!(charpeakideal_example(&caps).unwrap().is_zero());
    }

    #[test]
    fn small_actions() {
        let caps = Caps::default();
        let triv = Alphabet::standard(4);
        assert!(m("[a,b]").expand().act(&x0n(2, &caps).unwrap(), &triv).unwrap().is_zero());
        let ab = m("a b").expand().act(&x0n(2, &caps).unwrap(), &triv).unwrap();
        assert_eq!(ab, (&t("ab") + &t("ba")).scale(&Rational::from_integer(2.into())));
        assert!(check_x0n_action(&m("a b"), &triv, &caps).unwrap());
        assert_eq!(&r_element(1, 1) + &(&r_element(0, 2) + &r_element(2, 0)), x0n(2, &caps).unwrap());
        assert!(m("[a,b] c").expand().act_s(&p0n(3, &caps).unwrap()).unwrap().is_zero());
        let abc = m("a [b,c]").expand().act_s(&p0n(3, &caps).unwrap()).unwrap();
        let bc = m("[b,c]").expand();
        assert_eq!(abc, &(&t("a") * &bc) - &(&bc * &t("a")));
        assert_eq!(abc.len(), 4);
        assert!(check_p0n_action(&m("a [b,c]"), &caps).unwrap());
        assert_eq!(m("a").expand().act_s(&p0n(1, &caps).unwrap()).unwrap(), t("a"));
    }

    #[test]
    fn descent_elements_and_identity() {
        let caps = Caps::default();
        let mono = m("[a,b] c [a,[b,d]]");
        for set in enumerate_subsets(1, 5) {
            let x = descent_element_a(set, 6, true, &caps).unwrap();
            assert!(check_gr(&x, &mono).unwrap().is_some(), "{set:?}");
        }
        let c = check_gr(&SnElement::identity(6), &mono).unwrap().unwrap();
        for (k, v) in &c {
            assert_eq!(v.is_zero(), *k != mono, "{k}");
        }
        let u = SnElement::basis("1324".parse().unwrap());
        assert!(gr_witness(&u, 7, 3).unwrap().is_some());
        assert!(charpeak_witness(&u, 7, 3).unwrap().is_some());
    }

    #[test]
    fn parity_and_rho() {
        let caps = Caps::default();
        for d in 1..=6 {
            assert!(check_parity_invariance(d, 3));
        }
        let (image, target) = rho_projection_spaces(3, 3, &caps).unwrap();
        assert_eq!(image.dim(), 8);
        assert_eq!(target.dim(), 8);
        for n in 1..=5 {
            assert!(check_rho_projections(n, 3, &caps).unwrap(), "n={n}");
        }
    }

    #[test]
    fn not_parity_sorted_is_rejected() {
        let u = SnElement::identity(3);
        assert!(check_charpeak(&u, &m("c [a,b]")).is_err());
        assert!(check_action_pi(&u, &m("a [a,b]"), &Caps::default()).is_err());
    }

    #[test]
    fn batteries_are_seeded() {
        let a = parity_sorted_battery(5, 3, 2);
        assert_eq!(a, parity_sorted_battery(5, 3, 2));
        assert!(a.iter().all(|m| m.degree() == 5 && m.is_parity_sorted()));
        let b = monomial_battery(4, 3, 1);
        assert_eq!(b.len(), 8);
        assert_ne!(monomial_battery(4, 3, 1), monomial_battery(4, 4, 1));
        assert_eq!(b.iter().map(|m| m.degrees()).collect::<BTreeSet<_>>().len(), 8);
        assert!(b.iter().all(|m| !m.to_string().is_empty()));
    }

    #[test]
    fn reports() {
        let caps = Caps::default();
        for n in 1..=5 {
            let r = lie_report(n, 7, &caps).unwrap();
            assert!(r.all_hold(), "{r}");
        }
    }
}
