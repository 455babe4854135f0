//! Subalgebras of a group algebra spanned by class sums, with their
//! structure constants.
//!
//! If the span of the class sums `Z_a = Σ_{c(σ)=a} σ` is closed under the
//! product, then `Z_a Z_b = Σ_c N^c_{ab} Z_c` where, for any fixed `r` in
//! class `c`, `N^c_{ab} = #{σ ∈ a : c(σ⁻¹ r) = b}`. One representative per
//! class therefore gives the whole table in `O(#classes · |G|)` products.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::Element;
use crate::bitset::BitSet;
use crate::cache::Memo;
use crate::combinatorics::{enumerate_subsets, sparse_index};
use crate::error::{Error, NotInPeakAlgebra, Result};
use crate::permutations::{enumerate_group, GroupElement, GroupType, Permutation, SignedPermutation};
use crate::{Caps, Rational};

/// Which class function defines the subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKind {
    /// Peak sets in `S_n`: the peak algebra, basis `P_F`.
    Peak,
    /// Descent sets in `S_n`: `Σ(A_{n-1})`, basis `Y_I`, `I ⊆ [n-1]`.
    DescentA,
    /// Descent sets in `B_n`: `Σ(B_n)`, basis `Y_J`, `J ⊆ [0,n-1]`.
    DescentB,
}

impl ClassKind {
    pub fn group_type(self) -> GroupType {
        match self {
            ClassKind::Peak | ClassKind::DescentA => GroupType::A,
            ClassKind::DescentB => GroupType::B,
        }
    }

    /// Class labels in basis order.
    pub fn labels(self, n: usize) -> Vec<BitSet> {
        match self {
            ClassKind::Peak => sparse_index(n).list.iter().map(|f| f.bits()).collect(),
            ClassKind::DescentA => enumerate_subsets(1, n as i64 - 1),
            ClassKind::DescentB => enumerate_subsets(0, n as i64 - 1),
        }
    }

    pub fn dim(self, n: usize) -> usize {
        match self {
            ClassKind::Peak => sparse_index(n).list.len(),
            ClassKind::DescentA => 1 << n.saturating_sub(1),
            ClassKind::DescentB => 1 << n,
        }
    }
}

/// Position of a label among the labels of `kind` at degree `n`.
pub struct LabelIndex {
    labels: Vec<BitSet>,
    pos: BTreeMap<BitSet, usize>,
}

impl LabelIndex {
    pub fn get(kind: ClassKind, n: usize) -> Arc<LabelIndex> {
        static CACHE: Memo<(ClassKind, usize), LabelIndex> = Memo::new();
        CACHE.get_or_insert_with((kind, n), || {
            let labels = kind.labels(n);
            let pos = labels.iter().enumerate().map(|(i, &s)| (s, i)).collect();
            LabelIndex { labels, pos }
        })
    }

    pub fn labels(&self) -> &[BitSet] {
        &self.labels
    }

    pub fn position(&self, label: BitSet) -> Option<usize> {
        self.pos.get(&label).copied()
    }
}

/// Maps a group element to the label of its class.
pub trait Classified: GroupElement {
    fn label(&self, kind: ClassKind) -> BitSet;
}

impl Classified for Permutation {
    fn label(&self, kind: ClassKind) -> BitSet {
        match kind {
            ClassKind::Peak => self.peak_set().bits(),
            ClassKind::DescentA => self.descent_set(),
            ClassKind::DescentB => panic!("descent classes of B_n need signed permutations"),
        }
    }
}

impl Classified for SignedPermutation {
    fn label(&self, kind: ClassKind) -> BitSet {
        match kind {
            ClassKind::DescentB => self.descent_set(),
            _ => panic!("peak and type-A classes need unsigned permutations"),
        }
    }
}

/// Structure constants of a class-sum subalgebra at one degree.
pub struct ClassAlgebra {
    pub kind: ClassKind,
    pub n: usize,
    dim: usize,
    table: Vec<Vec<(u32, u64)>>,
    sizes: Vec<u64>,
}

impl ClassAlgebra {
    pub fn get(kind: ClassKind, n: usize, caps: &Caps) -> Result<Arc<ClassAlgebra>> {
        static CACHE: Memo<(ClassKind, usize), ClassAlgebra> = Memo::new();
        CACHE.try_get_or_insert_with((kind, n), || match kind.group_type() {
            GroupType::A => Self::build::<Permutation>(kind, n, caps),
            GroupType::B => Self::build::<SignedPermutation>(kind, n, caps),
        })
    }

    fn build<G: Classified>(kind: ClassKind, n: usize, caps: &Caps) -> Result<ClassAlgebra> {
        let elems = enumerate_group::<G>(n, caps)?;
        let index = LabelIndex::get(kind, n);
        let dim = index.labels.len();
        let class_of: Vec<usize> = elems
            .iter()
            .map(|g| index.position(g.label(kind)).expect("label of an element is a basis label"))
            .collect();
        let mut sizes = alloc::vec![0u64; dim];
        let mut rep = alloc::vec![usize::MAX; dim];
        for (r, &c) in class_of.iter().enumerate() {
            sizes[c] += 1;
            if rep[c] == usize::MAX {
                rep[c] = r;
            }
        }
        let mut counts: Vec<BTreeMap<u32, u64>> = (0..dim * dim).map(|_| BTreeMap::new()).collect();
        for (c, &r) in rep.iter().enumerate() {
            let target = &elems[r];
            for (s, sigma) in elems.iter().enumerate() {
                let a = class_of[s];
                let tau = sigma.inverse().compose(target);
                let b = class_of[tau.rank()];
                *counts[a * dim + b].entry(c as u32).or_insert(0) += 1;
            }
        }
        let table = counts.into_iter().map(|m| m.into_iter().collect()).collect();
        Ok(ClassAlgebra { kind, n, dim, table, sizes })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn class_size(&self, a: usize) -> u64 {
        self.sizes[a]
    }

    pub fn constant(&self, a: usize, b: usize, c: usize) -> u64 {
        self.table[a * self.dim + b].iter().find(|(x, _)| *x as usize == c).map_or(0, |(_, v)| *v)
    }

    /// Coordinates of the identity element (the class of `∅`).
    pub fn unit(&self) -> Vec<Rational> {
        let mut v = alloc::vec![Rational::zero(); self.dim];
        v[0] = Rational::one();
        v
    }

    pub fn basis_vector(&self, a: usize) -> Vec<Rational> {
        let mut v = alloc::vec![Rational::zero(); self.dim];
        v[a] = Rational::one();
        v
    }

    pub fn multiply(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); self.dim];
        for (a, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in v.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for &(c, k) in &self.table[a * self.dim + b] {
                    out[c as usize] += &xy * Rational::from_integer(k.into());
                }
            }
        }
        out
    }
}

/// Coefficients of `u` in the class-sum basis, or two elements of one class
/// carrying different coefficients.
pub fn class_coords<G: Classified>(
    kind: ClassKind,
    u: &Element<G>,
    caps: &Caps,
) -> core::result::Result<Vec<Rational>, (G, G)> {
    let n = u.n();
    let index = LabelIndex::get(kind, n);
    let dim = index.labels.len();
    let mut coeff: Vec<Option<(G, Rational)>> = alloc::vec![None; dim];
    let mut seen = alloc::vec![0u64; dim];
    for (g, c) in u.iter() {
        let a = index.position(g.label(kind)).expect("basis label");
        seen[a] += 1;
        match &coeff[a] {
            None => coeff[a] = Some((g.clone(), c.clone())),
            Some((h, d)) if d != c => return Err((h.clone(), g.clone())),
            Some(_) => {}
        }
    }
    let alg = ClassAlgebra::get(kind, n, caps).ok();
    for a in 0..dim {
        let Some((h, _)) = &coeff[a] else { continue };
        let full = match &alg {
            Some(alg) => alg.class_size(a),
            None => class_size_by_enumeration::<G>(kind, n, a),
        };
        if seen[a] != full {
            let label = index.labels[a];
            let missing = G::elements(n)
                .iter()
                .find(|g| g.label(kind) == label && u.coefficient_of(g).is_zero())
                .cloned()
                .expect("class has an element outside the support");
            return Err((h.clone(), missing));
        }
    }
    Ok(coeff.into_iter().map(|c| c.map_or_else(Rational::zero, |(_, x)| x)).collect())
}

fn class_size_by_enumeration<G: Classified>(kind: ClassKind, n: usize, a: usize) -> u64 {
    let label = LabelIndex::get(kind, n).labels[a];
    G::elements(n).iter().filter(|g| g.label(kind) == label).count() as u64
}

/// `P`-coordinates of an element of `kS_n`, or a witness pair.
pub fn peak_class_coords(u: &Element<Permutation>, caps: &Caps) -> Result<Vec<Rational>> {
    class_coords(ClassKind::Peak, u, caps)
        .map_err(|(first, second)| Error::from(NotInPeakAlgebra { first, second }))
}

/// Descent-class coordinates (`Y` basis), or a membership error.
pub fn descent_class_coords<G: Classified>(u: &Element<G>, caps: &Caps) -> Result<Vec<Rational>> {
    let kind = match G::TYPE {
        GroupType::A => ClassKind::DescentA,
        GroupType::B => ClassKind::DescentB,
    };
    class_coords(kind, u, caps).map_err(|(a, b)| Error::NotInDescentAlgebra {
        first: a.to_string(),
        second: b.to_string(),
    })
}

/// The class sum `Z_a` as a group-algebra element.
pub fn class_sum<G: Classified>(kind: ClassKind, n: usize, a: usize) -> Element<G> {
    let label = LabelIndex::get(kind, n).labels[a];
    let elems = G::elements(n);
    Element::sum_of(n, elems.iter().filter(|g| g.label(kind) == label))
}

/// Rebuilds a group-algebra element from class coordinates.
pub fn element_from_coords<G: Classified>(kind: ClassKind, n: usize, coords: &[Rational]) -> Element<G> {
    let index = LabelIndex::get(kind, n);
    let mut out = Element::zero(n);
    for g in G::elements(n).iter() {
        let a = index.position(g.label(kind)).expect("basis label");
        if !coords[a].is_zero() {
            out.add_term(g.clone(), coords[a].clone());
        }
    }
    out
}

/// Embeds `P`-coordinates into `Y_A`-coordinates (`P_F` is the sum of the
/// `Y_I` with `Peak(I) = F`, where `Peak(I) = {i ∈ I : i-1 ∉ I}`).
pub fn peak_to_descent_a(n: usize, p: &[Rational]) -> Vec<Rational> {
    let sparse = sparse_index(n);
    let ya = LabelIndex::get(ClassKind::DescentA, n);
    ya.labels
        .iter()
        .map(|&i| {
            let peaks = i.difference(i.shift_up());
            p[sparse.position(peaks)].clone()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_against_brute_force<G: Classified>(kind: ClassKind, n: usize) {
        let caps = Caps::default();
        let alg = ClassAlgebra::get(kind, n, &caps).unwrap();
        let sums: Vec<Element<G>> = (0..alg.dim()).map(|a| class_sum(kind, n, a)).collect();
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let prod = &sums[a] * &sums[b];
                let coords = class_coords(kind, &prod, &caps).expect("closed under product");
                assert_eq!(coords, alg.multiply(&alg.basis_vector(a), &alg.basis_vector(b)));
            }
        }
    }

    #[test]
    fn structure_constants_match_products() {
        for n in 0..=4 {
            check_against_brute_force::<Permutation>(ClassKind::Peak, n);
            check_against_brute_force::<Permutation>(ClassKind::DescentA, n);
        }
        for n in 0..=3 {
            check_against_brute_force::<SignedPermutation>(ClassKind::DescentB, n);
        }
    }

    #[test]
    fn unit_and_sizes() {
        let caps = Caps::default();
        for kind in [ClassKind::Peak, ClassKind::DescentA, ClassKind::DescentB] {
            for n in 0..=4 {
                let alg = ClassAlgebra::get(kind, n, &caps).unwrap();
                assert_eq!(alg.class_size(0), 1);
                for a in 0..alg.dim() {
                    let e = alg.basis_vector(a);
                    assert_eq!(alg.multiply(&alg.unit(), &e), e);
                    assert_eq!(alg.multiply(&e, &alg.unit()), e);
                }
                let total: u64 = (0..alg.dim()).map(|a| alg.class_size(a)).sum();
                let order = match kind.group_type() {
                    GroupType::A => Permutation::group_order(n),
                    GroupType::B => SignedPermutation::group_order(n),
                } as u64;
                assert_eq!(total, order);
            }
        }
    }

    #[test]
    fn membership_witness() {
        let caps = Caps::default();
        let u = Element::basis("123".parse::<Permutation>().unwrap());
        assert!(peak_class_coords(&u, &caps).is_ok());
        let u = Element::basis("132".parse::<Permutation>().unwrap());
        let err = peak_class_coords(&u, &caps).unwrap_err();
        match err {
            Error::NotInPeakAlgebra(w) => assert_eq!(w.first.peak_set(), w.second.peak_set()),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn peak_embedding() {
        for n in 0..=5 {
            let dim = ClassKind::Peak.dim(n);
            for a in 0..dim {
                let mut e = alloc::vec![Rational::zero(); dim];
                e[a] = Rational::one();
                let y = peak_to_descent_a(n, &e);
                let sum: Element<Permutation> = element_from_coords(ClassKind::DescentA, n, &y);
                assert_eq!(sum, class_sum(ClassKind::Peak, n, a));
            }
        }
    }
}
