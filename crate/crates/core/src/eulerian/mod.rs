//! Statistic sums over descents and peaks, the Eulerian-type idempotents
//! `e_(n)`, `e_(0,n)`, `ρ_(n)`, `ρ_(0,n)`, and the semiidempotent bases
//! built from them by convolution.

mod identities;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{BnElement, Element, SnElement};
use crate::bases::{sign, transition_matrix, x_to_y_b, PeakBasis};
use crate::classes::{element_from_coords, ClassKind, Classified, LabelIndex};
use crate::combinatorics::{sparse_index, AlmostOddComposition, PseudoComposition};
use crate::error::{Error, Result};
use crate::linalg::{rank_mod_p, residue};
use crate::permutations::{enumerate_group, GroupElement, Permutation, SignedPermutation};
use crate::{Caps, Rational};

pub use identities::{binomial_identity_1, binomial_identity_2, binomial_checks, idempotent_checks, subalgebra_checks};

/// `n!!` for `n ≥ -1`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigInt> {
    if n < -1 {
        return Err(Error::OutOfRange { value: n, lo: -1, hi: i64::MAX });
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

pub(crate) fn df(n: i64) -> Rational {
    Rational::from_integer(double_factorial(n).expect("argument at least -1"))
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

pub(crate) fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || n < 0 || k > n {
        return Rational::zero();
    }
    let (n, k) = (n as usize, k as usize);
    Rational::new(factorial(n), factorial(k) * factorial(n - k))
}

fn indicator(len: usize, hit: impl Fn(usize) -> bool) -> Vec<Rational> {
    (0..len).map(|i| if hit(i) { Rational::one() } else { Rational::zero() }).collect()
}

fn b_labels(n: usize) -> Vec<crate::bitset::BitSet> {
    LabelIndex::get(ClassKind::DescentB, n).labels().to_vec()
}

/// `y_j` in `Y_B` coordinates: signed permutations with `j` descents.
pub fn y_coords(n: usize, j: usize) -> Vec<Rational> {
    let l = b_labels(n);
    indicator(l.len(), |i| l[i].len() == j)
}

/// `y⁰_j` in `Y_B` coordinates: `#(Des ∖ {0}) = j - 1`.
pub fn y0_coords(n: usize, j: usize) -> Vec<Rational> {
    let l = b_labels(n);
    indicator(l.len(), |i| j >= 1 && l[i].without(0).len() == j - 1)
}

/// `x_j = Σ_{#J=j} X_J` in `Y_B` coordinates.
pub fn x_coords(n: usize, j: usize) -> Vec<Rational> {
    let l = b_labels(n);
    x_to_y_b(n, &indicator(l.len(), |i| l[i].len() == j))
}

/// `x⁰_j = Σ_{0∈J, #J=j} X_J` in `Y_B` coordinates.
pub fn x0_coords(n: usize, j: usize) -> Vec<Rational> {
    let l = b_labels(n);
    x_to_y_b(n, &indicator(l.len(), |i| l[i].contains(0) && l[i].len() == j))
}

/// `p_j` in `P` coordinates: permutations with `j` peaks.
pub fn p_coords(n: usize, j: usize) -> Vec<Rational> {
    let l = &sparse_index(n).list;
    indicator(l.len(), |i| l[i].len() == j)
}

/// `p⁰_j` in `P` coordinates: `#(Peak ∖ {1}) = j - 1`.
pub fn p0_coords(n: usize, j: usize) -> Vec<Rational> {
    let l = &sparse_index(n).list;
    indicator(l.len(), |i| j >= 1 && l[i].bits().without(1).len() == j - 1)
}

/// `q_j = Σ_{#F=j} Q_F` in `P` coordinates.
pub fn q_coords(n: usize, j: usize) -> Vec<Rational> {
    let l = &sparse_index(n).list;
    transition_matrix(PeakBasis::Q, PeakBasis::P, n).left_apply(&indicator(l.len(), |i| l[i].len() == j))
}

/// `q⁰_j = Σ_{1∉F, #F=j-1} Q_F` in `P` coordinates.
pub fn q0_coords(n: usize, j: usize) -> Vec<Rational> {
    let l = &sparse_index(n).list;
    let hit = |i: usize| j >= 1 && !l[i].contains(1) && l[i].len() == j - 1;
    transition_matrix(PeakBasis::Q, PeakBasis::P, n).left_apply(&indicator(l.len(), hit))
}

fn combine(terms: impl Iterator<Item = (Rational, Vec<Rational>)>, len: usize) -> Vec<Rational> {
    let mut out = alloc::vec![Rational::zero(); len];
    for (c, v) in terms {
        for (o, x) in out.iter_mut().zip(v) {
            *o += &c * x;
        }
    }
    out
}

fn check_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Undefined("the (0,n) idempotents need n ≥ 1"));
    }
    Ok(())
}

/// Coefficient of `y_j` in `e_(n)`: `(-1)^j (2j-1)!!(2n-2j-1)!!/(2n)!!`.
pub fn e_coefficient(n: usize, j: usize) -> Rational {
    let (n, j) = (n as i64, j as i64);
    sign(j as usize) * df(2 * j - 1) * df(2 * n - 2 * j - 1) / df(2 * n)
}

/// Coefficient of `y⁰_j` in `e_(0,n)`: `(-1)^{j-1} (j-1)!(n-j)!/n!`.
pub fn e0_coefficient(n: usize, j: usize) -> Rational {
    sign(j - 1) * Rational::new(factorial(j - 1) * factorial(n - j), factorial(n))
}

/// Coefficient of `p_j` in `ρ_(n)`: `(-1)^j (2j-1)!!(n-2j-1)!!/n!!`.
pub fn rho_coefficient(n: usize, j: usize) -> Rational {
    let (n, j) = (n as i64, j as i64);
    sign(j as usize) * df(2 * j - 1) * df(n - 2 * j - 1) / df(n)
}

/// Coefficient of `p⁰_j` in `ρ_(0,n)`: `(-1)^{j-1} (2j-2)!!(n-2j)!!/n!!`.
pub fn rho0_coefficient(n: usize, j: usize) -> Rational {
    let (n, j) = (n as i64, j as i64);
    sign((j - 1) as usize) * df(2 * j - 2) * df(n - 2 * j) / df(n)
}

/// `e_(n)` in `Y_B` coordinates.
pub fn e_coords(n: usize) -> Vec<Rational> {
    combine((0..=n).map(|j| (e_coefficient(n, j), y_coords(n, j))), 1 << n)
}

/// `e_(0,n)` in `Y_B` coordinates, `n ≥ 1`.
pub fn e0_coords(n: usize) -> Result<Vec<Rational>> {
    check_positive(n)?;
    Ok(combine((1..=n).map(|j| (e0_coefficient(n, j), y0_coords(n, j))), 1 << n))
}

/// `ρ_(n)` in `P` coordinates.
pub fn rho_coords(n: usize) -> Vec<Rational> {
    let len = sparse_index(n).list.len();
    combine((0..=n / 2).map(|j| (rho_coefficient(n, j), p_coords(n, j))), len)
}

/// `ρ_(0,n)` in `P` coordinates, `n ≥ 1`.
pub fn rho0_coords(n: usize) -> Result<Vec<Rational>> {
    check_positive(n)?;
    let len = sparse_index(n).list.len();
    Ok(combine((1..=(n + 1) / 2).map(|j| (rho0_coefficient(n, j), p0_coords(n, j))), len))
}

fn build<G: Classified>(kind: ClassKind, n: usize, coords: &[Rational], caps: &Caps) -> Result<Element<G>> {
    enumerate_group::<G>(n, caps)?;
    Ok(element_from_coords(kind, n, coords))
}

pub fn e_n(n: usize, caps: &Caps) -> Result<BnElement> {
    build(ClassKind::DescentB, n, &e_coords(n), caps)
}

pub fn e_0n(n: usize, caps: &Caps) -> Result<BnElement> {
    build(ClassKind::DescentB, n, &e0_coords(n)?, caps)
}

pub fn rho_n(n: usize, caps: &Caps) -> Result<SnElement> {
    build(ClassKind::Peak, n, &rho_coords(n), caps)
}

pub fn rho_0n(n: usize, caps: &Caps) -> Result<SnElement> {
    build(ClassKind::Peak, n, &rho0_coords(n)?, caps)
}

/// The statistic sums of one degree. Vectors of the `⁰` families start at
/// `j = 1`, so `y0[0]` is `y⁰_1`.
#[derive(Clone, Debug)]
pub struct EulerianFamily {
    pub n: usize,
    pub y: Vec<BnElement>,
    pub y0: Vec<BnElement>,
    pub x: Vec<BnElement>,
    pub x0: Vec<BnElement>,
    pub p: Vec<SnElement>,
    pub p0: Vec<SnElement>,
    pub q: Vec<SnElement>,
    pub q0: Vec<SnElement>,
}

pub fn build_family(n: usize, caps: &Caps) -> Result<EulerianFamily> {
    let b = |v: Vec<Rational>| build::<SignedPermutation>(ClassKind::DescentB, n, &v, caps);
    let a = |v: Vec<Rational>| build::<Permutation>(ClassKind::Peak, n, &v, caps);
    Ok(EulerianFamily {
        n,
        y: (0..=n).map(|j| b(y_coords(n, j))).collect::<Result<_>>()?,
        y0: (1..=n).map(|j| b(y0_coords(n, j))).collect::<Result<_>>()?,
        x: (0..=n).map(|j| b(x_coords(n, j))).collect::<Result<_>>()?,
        x0: (1..=n).map(|j| b(x0_coords(n, j))).collect::<Result<_>>()?,
        p: (0..=n / 2).map(|j| a(p_coords(n, j))).collect::<Result<_>>()?,
        p0: (1..=(n + 1) / 2).map(|j| a(p0_coords(n, j))).collect::<Result<_>>()?,
        q: (0..=n / 2).map(|j| a(q_coords(n, j))).collect::<Result<_>>()?,
        q0: (1..=(n + 1) / 2).map(|j| a(q0_coords(n, j))).collect::<Result<_>>()?,
    })
}

/// `e_(n)`, `e_(0,n)`, `ρ_(n)`, `ρ_(0,n)` of one degree; the `(0,n)` pair
/// is absent for `n = 0`.
#[derive(Clone, Debug)]
pub struct EulerianIdempotents {
    pub e: BnElement,
    pub e0: Option<BnElement>,
    pub rho: SnElement,
    pub rho0: Option<SnElement>,
}

pub fn eulerian_idempotents(n: usize, caps: &Caps) -> Result<EulerianIdempotents> {
    Ok(EulerianIdempotents {
        e: e_n(n, caps)?,
        e0: if n == 0 { None } else { Some(e_0n(n, caps)?) },
        rho: rho_n(n, caps)?,
        rho0: if n == 0 { None } else { Some(rho_0n(n, caps)?) },
    })
}

/// `e_β = e_(b_0) ∗ e_(0,b_1) ∗ ⋯ ∗ e_(0,b_k)`.
pub fn e_beta(beta: &PseudoComposition, caps: &Caps) -> Result<BnElement> {
    let mut acc = e_n(beta.head(), caps)?;
    for &b in beta.tail() {
        acc = acc.convolution(&e_0n(b, caps)?);
    }
    Ok(acc)
}

/// `ρ_γ = ρ_(b_0) ∗ ρ_(0,b_1) ∗ ⋯ ∗ ρ_(0,b_k)`.
pub fn rho_gamma(gamma: &AlmostOddComposition, caps: &Caps) -> Result<SnElement> {
    let mut acc = rho_n(gamma.head(), caps)?;
    for &b in gamma.tail() {
        acc = acc.convolution(&rho_0n(b, caps)?);
    }
    Ok(acc)
}

/// `{ρ_γ}` over almost-odd compositions, in sparse order.
pub fn semiidempotent_basis(n: usize, caps: &Caps) -> Result<Vec<SnElement>> {
    crate::combinatorics::enumerate_almost_odd(n).iter().map(|g| rho_gamma(g, caps)).collect()
}

/// The scalar `c` with `u² = c·u`, if there is one.
pub fn semiidempotent_scalar<G: GroupElement>(u: &Element<G>) -> Result<Option<Rational>> {
    let sq = u.internal_product(u)?;
    let Some((g, a)) = u.iter().next() else { return Ok(Some(Rational::zero())) };
    let c = sq.coefficient_of(g) / a;
    Ok(if sq == u.scale(&c) { Some(c) } else { None })
}

/// `dim kG·e` computed twice: `|G|` times the coefficient of the identity,
/// and the rank of `a ↦ a·e` on the group basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftIdealDimension {
    pub by_trace: Rational,
    pub by_rank: usize,
}

impl LeftIdealDimension {
    pub fn agree(&self) -> bool {
        self.by_trace == Rational::from_integer(self.by_rank.into())
    }

    pub fn value(&self) -> Option<usize> {
        if self.agree() {
            Some(self.by_rank)
        } else {
            None
        }
    }
}

pub fn left_ideal_dimension<G: GroupElement>(idem: &Element<G>, caps: &Caps) -> Result<LeftIdealDimension> {
    let n = idem.n();
    let elems = enumerate_group::<G>(n, caps)?;
    if idem.internal_product(idem)? != *idem {
        return Err(Error::NotIdempotent);
    }
    let order = G::group_order(n);
    let by_trace = idem.coefficient_of(&G::identity(n)) * Rational::from_integer(order.into());
    // residues of the coefficients modulo a large prime; an idempotent keeps
    // its rank there as long as no denominator vanishes
    let support: Vec<(G, u64)> = idem
        .iter()
        .map(|(h, c)| Ok((h.clone(), residue(c).ok_or(Error::Undefined("denominator divisible by the rank prime"))?)))
        .collect::<Result<_>>()?;
    let mut rows: Vec<Vec<u64>> = elems
        .iter()
        .map(|g| {
            let mut row = alloc::vec![0u64; order];
            for (h, r) in &support {
                row[g.compose(h).rank()] = *r;
            }
            row
        })
        .collect();
    Ok(LeftIdealDimension { by_trace, by_rank: rank_mod_p(&mut rows) })
}

/// Integer value of an exact rational, when it is one.
pub fn as_integer(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}
