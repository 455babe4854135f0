use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{descent_class_sums_b, descent_transition, peak_class_sums, pow2, PeakBasis, PeakCoords};
use crate::algebra::{BnElement, SnElement};
use crate::bitset::BitSet;
use crate::classes::{descent_class_coords, element_from_coords, peak_class_coords, ClassKind, LabelIndex};
use crate::combinatorics::sparse_index;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::{Caps, Rational};

/// The linear extension of forgetting signs, `kB_n → kS_n`.
pub fn phi(u: &BnElement) -> SnElement {
    u.forget_signs()
}

/// `φ(X_J) = 2^{#J} Σ_{H ⊆ J ∪ (J+1)} P_H` in `P` coordinates.
pub fn phi_x_in_p(j: BitSet, n: usize) -> PeakCoords {
    let list = &sparse_index(n).list;
    let hull = j.union(j.shift_up());
    let coords = list
        .iter()
        .map(|h| if h.bits().is_subset(hull) { pow2(j.len()) } else { Rational::zero() })
        .collect();
    PeakCoords { n, basis: PeakBasis::P, coords }
}

/// Matrix of `φ` on `Σ(B_n)`: row `J` holds the `P` coordinates of `φ(Y_J)`.
pub fn phi_matrix(n: usize, caps: &Caps) -> Result<Matrix> {
    let sums = descent_class_sums_b(n, caps)?;
    let rows = sums.iter().map(|y| peak_class_coords(&y.forget_signs(), caps)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows))
}

/// `π` on `P` coordinates of `℘_n`, landing in `P` coordinates of
/// `℘_{n-2}`. For `n < 2` the map is zero and the result is empty.
pub fn pi_p_coords(n: usize, p: &[Rational]) -> Vec<Rational> {
    if n < 2 {
        return Vec::new();
    }
    let src = sparse_index(n);
    let dst = sparse_index(n - 2);
    let mut out = alloc::vec![Rational::zero(); dst.list.len()];
    for (f, c) in src.list.iter().zip(p) {
        if c.is_zero() {
            continue;
        }
        let f = f.bits();
        if f.contains(1) {
            out[dst.position(f.without(1).shift_down(2))] -= c;
        } else if !f.contains(2) {
            out[dst.position(f.shift_down(2))] += c;
        }
    }
    out
}

/// Row `F` holds `π(P_F)` in `P` coordinates.
pub fn pi_matrix(n: usize) -> Matrix {
    let dim = sparse_index(n).list.len();
    let rows = (0..dim)
        .map(|i| pi_p_coords(n, &PeakCoords::unit(n, PeakBasis::P, i).coords))
        .collect();
    if n < 2 {
        return Matrix::zeros(dim, 0);
    }
    Matrix::from_rows(rows)
}

/// `π(u)` for `u ∈ ℘_n`; `None` when `n < 2` (zero map), an error when `u`
/// is outside the peak algebra.
pub fn pi(u: &SnElement, caps: &Caps) -> Result<Option<SnElement>> {
    let p = peak_class_coords(u, caps)?;
    let n = u.n();
    if n < 2 {
        return Ok(None);
    }
    let q = pi_p_coords(n, &p);
    let sums = peak_class_sums(n - 2, caps)?;
    Ok(Some(SnElement::linear_combination(
        n - 2,
        q.into_iter().zip(sums.iter()).filter(|(x, _)| !x.is_zero()),
    )))
}

/// `β` on `X_B` coordinates: `X_J ↦ X_{J-1}` when `0 ∉ J`, else `0`.
/// Empty for `n = 0`.
pub fn beta_x_coords(n: usize, x: &[Rational]) -> Vec<Rational> {
    if n == 0 {
        return Vec::new();
    }
    let src = LabelIndex::get(ClassKind::DescentB, n);
    let dst = LabelIndex::get(ClassKind::DescentB, n - 1);
    let mut out = alloc::vec![Rational::zero(); dst.labels().len()];
    for (&j, c) in src.labels().iter().zip(x) {
        if !j.contains(0) && !c.is_zero() {
            out[dst.position(j.shift_down(1)).expect("shifted label")] += c;
        }
    }
    out
}

/// `Y_B` coordinates to `X_B` coordinates.
pub fn y_to_x_b(n: usize, y: &[Rational]) -> Vec<Rational> {
    descent_transition(n, ClassKind::DescentB, false).left_apply(y)
}

/// `X_B` coordinates to `Y_B` coordinates.
pub fn x_to_y_b(n: usize, x: &[Rational]) -> Vec<Rational> {
    descent_transition(n, ClassKind::DescentB, true).left_apply(x)
}

/// `β(u)` for `u ∈ Σ(B_n)`; `None` when `n = 0`.
pub fn beta(u: &BnElement, caps: &Caps) -> Result<Option<BnElement>> {
    let y = descent_class_coords(u, caps)?;
    let n = u.n();
    if n == 0 {
        return Ok(None);
    }
    let x = beta_x_coords(n, &y_to_x_b(n, &y));
    Ok(Some(element_from_coords(ClassKind::DescentB, n - 1, &x_to_y_b(n - 1, &x))))
}

/// `π(Q_F)`, `π(O_τ)`, `π(Ō_γ)` by the closed forms, in the same basis.
/// Requires `n ≥ 2`.
pub fn pi_closed_form(basis: PeakBasis, n: usize, index: usize) -> Vec<Rational> {
    assert!(n >= 2, "π has no closed form below degree 2");
    use crate::combinatorics::{almostodd_from_sparse, sparse_from_almostodd, sparse_from_thin, thin_from_sparse};
    use crate::combinatorics::{AlmostOddComposition, ThinComposition};
    let src = sparse_index(n);
    let dst = sparse_index(n - 2);
    let mut out = alloc::vec![Rational::zero(); dst.list.len()];
    let f = &src.list[index];
    match basis {
        PeakBasis::P => return pi_p_coords(n, &PeakCoords::unit(n, basis, index).coords),
        PeakBasis::Q => {
            let b = f.bits();
            if b.contains(1) {
                out[dst.position(b.without(1).shift_down(2))] = -Rational::one();
            }
        }
        PeakBasis::O => {
            let t = thin_from_sparse(f);
            if t.parts().first() == Some(&2) {
                let rest = ThinComposition::new(t.parts()[1..].to_vec()).expect("thin tail");
                out[sparse_from_thin(&rest).index()] = Rational::one();
            }
        }
        PeakBasis::Obar => {
            let g = almostodd_from_sparse(f);
            if g.head() >= 2 {
                let h = AlmostOddComposition::new(g.head() - 2, g.tail().to_vec()).expect("almost-odd");
                out[sparse_from_almostodd(&h).index()] = Rational::one();
            }
        }
    }
    out
}
