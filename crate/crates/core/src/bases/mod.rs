//! Named bases of the peak algebra and of the descent algebras, coordinate
//! extraction, transition matrices, the maps `φ`, `π`, `β`, the ideal
//! chains and the convolution factorizations.

mod free;
mod ideals;
mod maps;

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{BnElement, Element, SnElement};
use crate::bitset::BitSet;
use crate::cache::Memo;
use crate::classes::{peak_class_coords, ClassKind, Classified, LabelIndex};
use crate::combinatorics::{closure_bits, sparse_index, SparseSubset};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::permutations::enumerate_group;
use crate::{Caps, Rational};

pub use free::{multiplicative_factorization_check, FactorBasis};
pub use ideals::{
    descent_ideal_subspace, ideal_dimension, ideal_membership, ideal_membership_b, ideal_subspace,
    pi_power_kernel,
};
pub use maps::{
    beta, beta_x_coords, phi, phi_matrix, phi_x_in_p, pi, pi_closed_form, pi_matrix, pi_p_coords, x_to_y_b, y_to_x_b,
};

/// The four bases of the peak algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PeakBasis {
    P,
    Q,
    O,
    Obar,
}

impl PeakBasis {
    pub const ALL: [PeakBasis; 4] = [PeakBasis::P, PeakBasis::Q, PeakBasis::O, PeakBasis::Obar];
}

impl fmt::Display for PeakBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PeakBasis::P => "P",
            PeakBasis::Q => "Q",
            PeakBasis::O => "O",
            PeakBasis::Obar => "Obar",
        })
    }
}

impl FromStr for PeakBasis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" => Ok(PeakBasis::P),
            "Q" => Ok(PeakBasis::Q),
            "O" => Ok(PeakBasis::O),
            "Obar" | "Ō" | "TO" => Ok(PeakBasis::Obar),
            _ => Err(Error::Undefined("unknown peak basis")),
        }
    }
}

/// Every named spanning set: `Y`/`X` of types A and B and the peak bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisId {
    YA,
    XA,
    YB,
    XB,
    Peak(PeakBasis),
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisId::YA => f.write_str("Y_A"),
            BasisId::XA => f.write_str("X_A"),
            BasisId::YB => f.write_str("Y_B"),
            BasisId::XB => f.write_str("X_B"),
            BasisId::Peak(p) => p.fmt(f),
        }
    }
}

/// Coordinates of an element of `℘_n` in one of the peak bases, indexed by
/// [`crate::combinatorics::enumerate_sparse`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakCoords {
    pub n: usize,
    pub basis: PeakBasis,
    pub coords: Vec<Rational>,
}

impl PeakCoords {
    pub fn unit(n: usize, basis: PeakBasis, index: usize) -> PeakCoords {
        let mut coords = alloc::vec![Rational::zero(); sparse_index(n).list.len()];
        coords[index] = Rational::one();
        PeakCoords { n, basis, coords }
    }

    /// Re-expresses the same element in another basis.
    pub fn to_basis(&self, target: PeakBasis) -> PeakCoords {
        if target == self.basis {
            return self.clone();
        }
        let m = transition_matrix(self.basis, target, self.n);
        PeakCoords { n: self.n, basis: target, coords: m.left_apply(&self.coords) }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }
}

/// Rows are basis elements in `P` coordinates, both in sparse order.
pub fn basis_in_p(basis: PeakBasis, n: usize) -> Arc<Matrix> {
    static CACHE: Memo<(PeakBasis, usize), Matrix> = Memo::new();
    CACHE.get_or_insert_with((basis, n), || {
        let list = &sparse_index(n).list;
        let full = BitSet::interval(1, n as i64 - 1);
        let mut m = Matrix::zeros(list.len(), list.len());
        for (i, f) in list.iter().enumerate() {
            let f = f.bits();
            for (j, g) in list.iter().enumerate() {
                let g = g.bits();
                let hit = match basis {
                    PeakBasis::P => f == g,
                    PeakBasis::Q => f.is_subset(g),
                    PeakBasis::O => g.is_subset(full.difference(f)),
                    PeakBasis::Obar => g.is_subset(full.difference(closure_bits(f, n))),
                };
                if hit {
                    m.set(i, j, Rational::one());
                }
            }
        }
        m
    })
}

/// Row `F` holds the coordinates of `from_F` in the `to` basis.
pub fn transition_matrix(from: PeakBasis, to: PeakBasis, n: usize) -> Matrix {
    static CACHE: Memo<(PeakBasis, PeakBasis, usize), Matrix> = Memo::new();
    let m = CACHE.get_or_insert_with((from, to, n), || {
        let to_inv = basis_in_p(to, n).inverse().expect("peak bases are bases");
        basis_in_p(from, n).mul(&to_inv)
    });
    (*m).clone()
}

/// `X → Y` (subset zeta matrix) or `Y → X` (its Möbius inverse) for
/// `Σ(A_{n-1})` (`ClassKind::DescentA`) or `Σ(B_n)` (`ClassKind::DescentB`),
/// rows and columns in lexicographic subset order.
pub fn descent_transition(n: usize, kind: ClassKind, x_to_y: bool) -> Matrix {
    assert!(kind != ClassKind::Peak, "descent transition needs a descent kind");
    let labels = LabelIndex::get(kind, n);
    let l = labels.labels();
    let mut m = Matrix::zeros(l.len(), l.len());
    for (i, &a) in l.iter().enumerate() {
        for (j, &b) in l.iter().enumerate() {
            if b.is_subset(a) {
                let v = if x_to_y || (a.len() - b.len()) % 2 == 0 { 1 } else { -1 };
                m.set(i, j, Rational::from_integer(v.into()));
            }
        }
    }
    m
}

fn class_sums<G: Classified>(kind: ClassKind, n: usize, caps: &Caps) -> Result<Vec<Element<G>>> {
    let elems = enumerate_group::<G>(n, caps)?;
    let index = LabelIndex::get(kind, n);
    let mut sums: Vec<Element<G>> = (0..index.labels().len()).map(|_| Element::zero(n)).collect();
    for g in elems.iter() {
        let a = index.position(g.label(kind)).expect("basis label");
        sums[a].add_term(g.clone(), Rational::one());
    }
    Ok(sums)
}

/// `P_F` for every sparse `F`, in sparse order.
pub fn peak_class_sums(n: usize, caps: &Caps) -> Result<Arc<Vec<SnElement>>> {
    static CACHE: Memo<usize, Vec<SnElement>> = Memo::new();
    CACHE.try_get_or_insert_with(n, || class_sums(ClassKind::Peak, n, caps))
}

/// `Y_I` for every `I ⊆ [n-1]`, in lexicographic order.
pub fn descent_class_sums_a(n: usize, caps: &Caps) -> Result<Arc<Vec<SnElement>>> {
    static CACHE: Memo<usize, Vec<SnElement>> = Memo::new();
    CACHE.try_get_or_insert_with(n, || class_sums(ClassKind::DescentA, n, caps))
}

/// `Y_J` for every `J ⊆ [0,n-1]`, in lexicographic order.
pub fn descent_class_sums_b(n: usize, caps: &Caps) -> Result<Arc<Vec<BnElement>>> {
    static CACHE: Memo<usize, Vec<BnElement>> = Memo::new();
    CACHE.try_get_or_insert_with(n, || class_sums(ClassKind::DescentB, n, caps))
}

/// Expands coordinates in a peak basis into a group-algebra element.
pub fn peak_element_from_coords(c: &PeakCoords, caps: &Caps) -> Result<SnElement> {
    let p = c.to_basis(PeakBasis::P);
    let sums = peak_class_sums(c.n, caps)?;
    Ok(SnElement::linear_combination(
        c.n,
        p.coords.iter().cloned().zip(sums.iter()).filter(|(x, _)| !x.is_zero()),
    ))
}

/// The basis element of `℘_n` indexed by the sparse subset `f`.
pub fn peak_element(basis: PeakBasis, f: &SparseSubset, caps: &Caps) -> Result<SnElement> {
    static CACHE: Memo<(PeakBasis, usize, BitSet), SnElement> = Memo::new();
    let n = f.n();
    CACHE
        .try_get_or_insert_with((basis, n, f.bits()), || {
            peak_element_from_coords(&PeakCoords::unit(n, basis, f.index()), caps)
        })
        .map(|e| (*e).clone())
}

/// All basis elements of one peak basis, in sparse order.
pub fn peak_basis_elements(basis: PeakBasis, n: usize, caps: &Caps) -> Result<Vec<SnElement>> {
    sparse_index(n).list.iter().map(|f| peak_element(basis, f, caps)).collect()
}

fn descent_element<G: Classified>(
    sums: &[Element<G>],
    kind: ClassKind,
    n: usize,
    set: BitSet,
    cumulative: bool,
) -> Result<Element<G>> {
    let labels = LabelIndex::get(kind, n);
    let Some(pos) = labels.position(set) else {
        let (lo, hi) = if kind == ClassKind::DescentB { (0, n as i64 - 1) } else { (1, n as i64 - 1) };
        let bad = set.iter().find(|&i| (i as i64) < lo || i as i64 > hi).unwrap_or(0);
        return Err(Error::OutOfRange { value: bad as i64, lo, hi });
    };
    if !cumulative {
        return Ok(sums[pos].clone());
    }
    let mut out = Element::zero(n);
    for (i, &l) in labels.labels().iter().enumerate() {
        if l.is_subset(set) {
            for (g, c) in sums[i].iter() {
                out.add_term(g.clone(), c.clone());
            }
        }
    }
    Ok(out)
}

/// `Y_I` (`cumulative = false`) or `X_I` (`true`) in `kS_n`, `I ⊆ [n-1]`.
pub fn descent_element_a(set: BitSet, n: usize, cumulative: bool, caps: &Caps) -> Result<SnElement> {
    descent_element(&descent_class_sums_a(n, caps)?, ClassKind::DescentA, n, set, cumulative)
}

/// `Y_J` (`cumulative = false`) or `X_J` (`true`) in `kB_n`, `J ⊆ [0,n-1]`.
pub fn descent_element_b(set: BitSet, n: usize, cumulative: bool, caps: &Caps) -> Result<BnElement> {
    static CACHE: Memo<(usize, BitSet, bool), BnElement> = Memo::new();
    CACHE
        .try_get_or_insert_with((n, set, cumulative), || {
            descent_element(&descent_class_sums_b(n, caps)?, ClassKind::DescentB, n, set, cumulative)
        })
        .map(|e| (*e).clone())
}

/// A basis element of either group algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyElement {
    A(SnElement),
    B(BnElement),
}

/// Builds the element of `id` indexed by `set` (a sparse subset for the
/// peak bases, `I ⊆ [n-1]` for type A, `J ⊆ [0,n-1]` for type B).
pub fn build_basis_element(id: BasisId, n: usize, set: BitSet, caps: &Caps) -> Result<AnyElement> {
    Ok(match id {
        BasisId::YA => AnyElement::A(descent_element_a(set, n, false, caps)?),
        BasisId::XA => AnyElement::A(descent_element_a(set, n, true, caps)?),
        BasisId::YB => AnyElement::B(descent_element_b(set, n, false, caps)?),
        BasisId::XB => AnyElement::B(descent_element_b(set, n, true, caps)?),
        BasisId::Peak(b) => AnyElement::A(peak_element(b, &SparseSubset::from_bits(n, set)?, caps)?),
    })
}

/// Coordinates of `u ∈ kS_n` in a peak basis, or a witness that `u` is not
/// in the peak algebra.
pub fn peak_coords(u: &SnElement, target: PeakBasis, caps: &Caps) -> Result<PeakCoords> {
    let coords = peak_class_coords(u, caps)?;
    Ok(PeakCoords { n: u.n(), basis: PeakBasis::P, coords }.to_basis(target))
}

/// `(-1)^k` as a rational.
pub(crate) fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `2^k` as a rational.
pub(crate) fn pow2(k: usize) -> Rational {
    Rational::from_integer(num_bigint::BigInt::one() << k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_sparse, moebius_preceq, preceq, AlmostOddComposition};

    fn caps() -> Caps {
        Caps::default()
    }

    fn sp(n: usize, v: &[usize]) -> SparseSubset {
        SparseSubset::new(n, v).unwrap()
    }

    fn p_sum(n: usize, sets: &[&[usize]]) -> SnElement {
        let mut out = SnElement::zero(n);
        for s in sets {
            out = &out + &peak_element(PeakBasis::P, &sp(n, s), &caps()).unwrap();
        }
        out
    }

    #[test]
    fn worked_example_n6() {
        let f = sp(6, &[1, 3]);
        let c = caps();
        assert_eq!(peak_element(PeakBasis::Q, &f, &c).unwrap(), p_sum(6, &[&[1, 3], &[1, 3, 5]]));
        assert_eq!(peak_element(PeakBasis::Obar, &f, &c).unwrap(), p_sum(6, &[&[], &[4], &[5]]));
        assert_eq!(
            peak_element(PeakBasis::O, &f, &c).unwrap(),
            p_sum(6, &[&[], &[2], &[4], &[5], &[2, 4], &[2, 5]])
        );
    }

    #[test]
    fn q_to_p_n2() {
        assert_eq!(transition_matrix(PeakBasis::Q, PeakBasis::P, 2), Matrix::from_i64(&[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn transition_formulas() {
        for n in 0..=8 {
            let list = enumerate_sparse(n);
            let pq = transition_matrix(PeakBasis::P, PeakBasis::Q, n);
            let oq = transition_matrix(PeakBasis::O, PeakBasis::Q, n);
            let tq = transition_matrix(PeakBasis::Obar, PeakBasis::Q, n);
            let qo = transition_matrix(PeakBasis::Q, PeakBasis::O, n);
            let qt = transition_matrix(PeakBasis::Q, PeakBasis::Obar, n);
            for (i, f) in list.iter().enumerate() {
                for (j, g) in list.iter().enumerate() {
                    let (fb, gb) = (f.bits(), g.bits());
                    let expect_pq = if fb.is_subset(gb) { sign(gb.len() - fb.len()) } else { Rational::zero() };
                    assert_eq!(pq.get(i, j), &expect_pq);
                    let expect_oq = if gb.is_subset(fb) { sign(gb.len()) } else { Rational::zero() };
                    assert_eq!(oq.get(i, j), &expect_oq);
                    assert_eq!(qo.get(i, j), &expect_oq);
                    let expect_tq = if preceq(f, g).unwrap() { sign(gb.len()) } else { Rational::zero() };
                    assert_eq!(tq.get(i, j), &expect_tq);
                    // (-1)^{#F} Q_F = Σ μ(F,G) Ō_G
                    let expect_qt = if preceq(f, g).unwrap() {
                        sign(fb.len()) * Rational::from_integer(moebius_preceq(f, g).unwrap().into())
                    } else {
                        Rational::zero()
                    };
                    assert_eq!(qt.get(i, j), &expect_qt);
                }
            }
        }
    }

    #[test]
    fn bases_integral_full_rank() {
        for n in 0..=8 {
            for a in PeakBasis::ALL {
                let m = basis_in_p(a, n);
                assert_eq!(m.rank(), m.rows());
                for b in PeakBasis::ALL {
                    let t = transition_matrix(a, b, n);
                    assert!(t.is_integral());
                    assert!(t.inverse().unwrap().is_integral());
                    assert!(t.mul(&transition_matrix(b, a, n)).is_identity());
                }
            }
        }
    }

    #[test]
    fn peak_coords_examples() {
        let c = caps();
        for n in [2usize, 4, 6] {
            let odds: Vec<usize> = (1..n).step_by(2).collect();
            let gamma = AlmostOddComposition::from_parts(&[n]).unwrap();
            let f = crate::combinatorics::sparse_from_almostodd(&gamma);
            assert_eq!(f.elements(), odds);
            let q = peak_element(PeakBasis::Q, &f, &c).unwrap();
            assert_eq!(q, peak_element(PeakBasis::P, &f, &c).unwrap());
            assert_eq!(peak_element(PeakBasis::Obar, &f, &c).unwrap(), SnElement::identity(n));
        }
        for n in [3usize, 5, 7] {
            let gamma = AlmostOddComposition::from_parts(&[0, n]).unwrap();
            let f = crate::combinatorics::sparse_from_almostodd(&gamma);
            assert_eq!(f.elements(), (2..n).step_by(2).collect::<Vec<_>>());
            assert_eq!(peak_element(PeakBasis::Obar, &f, &c).unwrap(), p_sum(n, &[&[], &[1]]));
        }
        for f in enumerate_sparse(5) {
            for b in PeakBasis::ALL {
                let e = peak_element(b, &f, &c).unwrap();
                assert_eq!(peak_coords(&e, b, &c).unwrap(), PeakCoords::unit(5, b, f.index()));
            }
        }
    }

    #[test]
    fn single_permutation_not_in_peak_algebra() {
        let u = SnElement::basis("132".parse().unwrap());
        assert!(matches!(peak_coords(&u, PeakBasis::Q, &caps()), Err(Error::NotInPeakAlgebra(_))));
        // the identity is alone in its peak class
        let id = SnElement::basis("123".parse().unwrap());
        assert_eq!(peak_coords(&id, PeakBasis::P, &caps()).unwrap(), PeakCoords::unit(3, PeakBasis::P, 0));
    }

    #[test]
    fn descent_bases() {
        let c = caps();
        let x = descent_transition(3, ClassKind::DescentB, true);
        let y = descent_transition(3, ClassKind::DescentB, false);
        assert!(x.mul(&y).is_identity());
        assert_eq!(x.rows(), 8);
        let xb = descent_element_b(BitSet::from_slice(&[0, 1]), 2, true, &c).unwrap();
        assert_eq!(xb.len(), 8);
        assert_eq!(descent_element_b(BitSet::EMPTY, 2, true, &c).unwrap(), BnElement::identity(2));
        assert!(descent_element_a(BitSet::from_slice(&[0]), 3, false, &c).is_err());
        let xa = descent_element_a(BitSet::from_slice(&[1, 2]), 3, true, &c).unwrap();
        assert_eq!(xa.len(), 6);
    }
}
