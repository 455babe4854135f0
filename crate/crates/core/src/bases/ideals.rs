use alloc::vec::Vec;

use num_traits::Zero;

use super::maps::{pi_matrix, y_to_x_b};
use super::{basis_in_p, peak_coords, PeakBasis};
use crate::algebra::{BnElement, SnElement};
use crate::classes::{descent_class_coords, ClassKind, LabelIndex};
use crate::combinatorics::{almostodd_from_sparse, fibonacci, sparse_index};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::{Caps, Rational};

fn check_j(n: usize, j: usize) -> Result<()> {
    if j > n / 2 {
        return Err(Error::OutOfRange { value: j as i64, lo: 0, hi: (n / 2) as i64 });
    }
    Ok(())
}

/// `dim ℘_n^j = f_n - f_{n-2j-2}`, or `f_n` when `2j+2 > n`.
pub fn ideal_dimension(n: usize, j: usize) -> Result<usize> {
    check_j(n, j)?;
    let f = fibonacci(n) as usize;
    Ok(match n.checked_sub(2 * j + 2) {
        Some(m) => f - fibonacci(m) as usize,
        None => f,
    })
}

/// `Ō_γ` with `b_0 ≤ 2j` as a row subset of the sparse order.
fn obar_rows_in_ideal(n: usize, j: usize) -> Vec<bool> {
    sparse_index(n).list.iter().map(|f| almostodd_from_sparse(f).head() <= 2 * j).collect()
}

/// `℘_n^j` in `P` coordinates, spanned by the `Ō_γ` with `b_0 ≤ 2j`.
pub fn ideal_subspace(n: usize, j: usize) -> Result<Subspace> {
    check_j(n, j)?;
    let m = basis_in_p(PeakBasis::Obar, n);
    let rows: Vec<Vec<Rational>> = obar_rows_in_ideal(n, j)
        .into_iter()
        .enumerate()
        .filter(|&(_, keep)| keep)
        .map(|(i, _)| m.row(i).to_vec())
        .collect();
    Ok(Subspace::from_spanning(m.cols(), &rows))
}

/// `ker π^m` on `℘_n`, in `P` coordinates.
pub fn pi_power_kernel(n: usize, m: usize) -> Subspace {
    let dim = sparse_index(n).list.len();
    if m == 0 {
        return Subspace::zero(dim);
    }
    if 2 * m > n {
        return Subspace::full(dim);
    }
    let mut acc = Matrix::identity(dim);
    for step in 0..m {
        acc = acc.mul(&pi_matrix(n - 2 * step));
    }
    acc.left_kernel()
}

/// Whether `u ∈ ℘_n^j`, read off the `Ō` coordinates and confirmed against
/// `ker π^{j+1}`.
pub fn ideal_membership(u: &SnElement, j: usize, caps: &Caps) -> Result<bool> {
    let n = u.n();
    check_j(n, j)?;
    let ob = peak_coords(u, PeakBasis::Obar, caps)?;
    let allowed = obar_rows_in_ideal(n, j);
    let by_coords = ob.coords.iter().zip(&allowed).all(|(c, &ok)| ok || c.is_zero());
    let p = ob.to_basis(PeakBasis::P);
    let by_kernel = pi_power_kernel(n, j + 1).contains(&p.coords);
    if by_coords != by_kernel {
        return Err(Error::Undefined("ideal membership disagrees with the kernel of π"));
    }
    Ok(by_coords)
}

fn b0_of_label(n: usize, j: crate::bitset::BitSet) -> usize {
    j.min().unwrap_or(n)
}

/// `𝔍_n^i` in `Y_B` coordinates, spanned by the `X_J` with `b_0 ≤ i`.
pub fn descent_ideal_subspace(n: usize, i: usize) -> Result<Subspace> {
    if i > n {
        return Err(Error::OutOfRange { value: i as i64, lo: 0, hi: n as i64 });
    }
    let m = super::descent_transition(n, ClassKind::DescentB, true);
    let labels = LabelIndex::get(ClassKind::DescentB, n);
    let rows: Vec<Vec<Rational>> = labels
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, &j)| b0_of_label(n, j) <= i)
        .map(|(r, _)| m.row(r).to_vec())
        .collect();
    Ok(Subspace::from_spanning(m.cols(), &rows))
}

/// Whether `u ∈ 𝔍_n^i`, by `X_B` coordinates.
pub fn ideal_membership_b(u: &BnElement, i: usize, caps: &Caps) -> Result<bool> {
    let n = u.n();
    if i > n {
        return Err(Error::OutOfRange { value: i as i64, lo: 0, hi: n as i64 });
    }
    let x = y_to_x_b(n, &descent_class_coords(u, caps)?);
    let labels = LabelIndex::get(ClassKind::DescentB, n);
    Ok(labels.labels().iter().zip(&x).all(|(&j, c)| c.is_zero() || b0_of_label(n, j) <= i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::maps::phi_matrix;
    use crate::bases::{descent_element_b, peak_element};
    use crate::combinatorics::{enumerate_sparse, enumerate_subsets};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn dimensions() {
        for n in 0..=9 {
            assert_eq!(ideal_dimension(n, 0).unwrap(), fibonacci(n.saturating_sub(1)) as usize);
            for j in 0..=n / 2 {
                let d = ideal_dimension(n, j).unwrap();
                assert_eq!(ideal_subspace(n, j).unwrap().dim(), d);
                assert_eq!(pi_power_kernel(n, j + 1).dim(), d);
                assert_eq!(pi_power_kernel(n, j + 1), ideal_subspace(n, j).unwrap());
            }
            assert!(ideal_dimension(n, n / 2 + 1).is_err());
        }
    }

    #[test]
    fn q_in_peak_ideal_iff_one_missing() {
        let c = caps();
        for n in 1..=7 {
            for f in enumerate_sparse(n) {
                let q = peak_element(PeakBasis::Q, &f, &c).unwrap();
                assert_eq!(ideal_membership(&q, 0, &c).unwrap(), !f.contains(1), "{f}");
            }
        }
    }

    #[test]
    fn q_spanning_sets_of_ideals() {
        // ℘_n^j is spanned by the Q_F with F ⊉ {1,3,…,2j+1}
        for n in 0..=9 {
            let q = basis_in_p(PeakBasis::Q, n);
            for j in 0..=n / 2 {
                let odd: crate::bitset::BitSet = (0..=j).map(|i| 2 * i + 1).collect();
                let rows: Vec<Vec<Rational>> = enumerate_sparse(n)
                    .iter()
                    .filter(|f| !odd.is_subset(f.bits()))
                    .map(|f| q.row(f.index()).to_vec())
                    .collect();
                assert_eq!(Subspace::from_spanning(q.cols(), &rows), ideal_subspace(n, j).unwrap());
            }
        }
    }

    #[test]
    fn phi_of_descent_ideals() {
        let c = caps();
        for n in 0..=5 {
            let m = phi_matrix(n, &c).unwrap();
            for i in 0..=n {
                let image = descent_ideal_subspace(n, i).unwrap().map(&m);
                assert_eq!(image, ideal_subspace(n, i / 2).unwrap(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn hilbert_recurrences() {
        for n in 2..=9 {
            let top = ideal_dimension(n, n / 2).unwrap();
            let bottom = ideal_dimension(n, 0).unwrap();
            assert_eq!(top - bottom, fibonacci(n - 2) as usize);
        }
        for n in 1..=9 {
            let d0 = descent_ideal_subspace(n, 0).unwrap().dim();
            assert_eq!((1usize << n) - d0, 1 << (n - 1));
        }
    }

    #[test]
    fn membership_b() {
        let c = caps();
        for n in 0..=4 {
            for j in enumerate_subsets(0, n as i64 - 1) {
                let x = descent_element_b(j, n, true, &c).unwrap();
                let b0 = j.min().unwrap_or(n);
                for i in 0..=n {
                    assert_eq!(ideal_membership_b(&x, i, &c).unwrap(), b0 <= i);
                }
            }
        }
    }
}
