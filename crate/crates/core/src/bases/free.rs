use super::{descent_element_b, peak_element, PeakBasis};
use crate::algebra::Element;
use crate::combinatorics::{sparse_from_almostodd, AlmostOddComposition, PseudoComposition};
use crate::error::Result;
use crate::permutations::GroupElement;
use crate::Caps;

/// Bases that factor as convolution products of their one-part pieces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorBasis {
    /// `X` of `Σ(B)`, indexed by pseudocompositions.
    X,
    /// A peak basis, indexed by almost-odd compositions.
    Peak(PeakBasis),
}

fn fold<G: GroupElement>(factors: impl Iterator<Item = Result<Element<G>>>) -> Result<Element<G>> {
    let mut acc = Element::identity(0);
    for f in factors {
        acc = acc.convolution(&f?);
    }
    Ok(acc)
}

/// Checks `Z_{(b_0,…,b_k)} = Z_{(b_0)} ∗ Z_{(0,b_1)} ∗ ⋯ ∗ Z_{(0,b_k)}` by
/// expanding both sides in the group algebra.
pub fn multiplicative_factorization_check(basis: FactorBasis, parts: &[usize], caps: &Caps) -> Result<bool> {
    let head = parts.first().copied().unwrap_or(0);
    let tail = parts.get(1..).unwrap_or(&[]);
    match basis {
        FactorBasis::X => {
            let beta = PseudoComposition::from_parts(parts)?;
            let x = |p: PseudoComposition| descent_element_b(p.subset(), p.n(), true, caps);
            let lhs = x(beta)?;
            let rhs = fold(
                core::iter::once(PseudoComposition::new(head, alloc::vec![]))
                    .chain(tail.iter().map(|&b| PseudoComposition::new(0, alloc::vec![b])))
                    .map(|p| x(p?)),
            )?;
            Ok(lhs == rhs)
        }
        FactorBasis::Peak(b) => {
            let gamma = AlmostOddComposition::from_parts(parts)?;
            let e = |g: AlmostOddComposition| peak_element(b, &sparse_from_almostodd(&g), caps);
            let lhs = e(gamma)?;
            let rhs = fold(
                core::iter::once(AlmostOddComposition::new(head, alloc::vec![]))
                    .chain(tail.iter().map(|&t| AlmostOddComposition::new(0, alloc::vec![t])))
                    .map(|g| e(g?)),
            )?;
            Ok(lhs == rhs)
        }
    }
}
