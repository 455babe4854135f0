//! Radicals of `Σ(B_n)`, `Σ(A_{n-1})` and `℘_n`: spanning sets, codimensions,
//! nilpotency and intersections with the ideal chains.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::bases::{
    descent_ideal_subspace, descent_transition, ideal_subspace, phi_matrix, transition_matrix, AnyElement, PeakBasis,
};
use crate::classes::{element_from_coords, peak_to_descent_a, ClassAlgebra, ClassKind, LabelIndex};
use crate::combinatorics::{
    enumerate_almost_odd, enumerate_compositions, enumerate_pseudo, enumerate_thin, sparse_from_almostodd,
    sparse_from_thin, sparse_index, thin_segments, Composition, PseudoComposition, ThinComposition,
};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::{Caps, Rational};

/// The algebra whose radical is described.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RadicalAlgebra {
    SolB,
    SolA,
    Peak,
}

impl RadicalAlgebra {
    /// The class-sum basis used as coordinates: `Y_B`, `Y_A` or `P`.
    pub fn kind(self) -> ClassKind {
        match self {
            RadicalAlgebra::SolB => ClassKind::DescentB,
            RadicalAlgebra::SolA => ClassKind::DescentA,
            RadicalAlgebra::Peak => ClassKind::Peak,
        }
    }

    pub fn default_flavor(self) -> Flavor {
        match self {
            RadicalAlgebra::Peak => Flavor::Obar,
            _ => Flavor::X,
        }
    }
}

impl fmt::Display for RadicalAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RadicalAlgebra::SolB => "SolB",
            RadicalAlgebra::SolA => "SolA",
            RadicalAlgebra::Peak => "Peak",
        })
    }
}

impl FromStr for RadicalAlgebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "SolB" | "B" => Ok(RadicalAlgebra::SolB),
            "SolA" | "A" => Ok(RadicalAlgebra::SolA),
            "Peak" | "peak" => Ok(RadicalAlgebra::Peak),
            _ => Err(Error::Undefined("unknown algebra")),
        }
    }
}

/// Which family of differences spans the radical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `X_β - X_{β^s}` (descent algebras only).
    X,
    /// `Ō_γ - Ō_{γ^t}` over almost-odd `γ`.
    Obar,
    /// `Q_γ - Q_{γ^t}` over almost-odd `γ`.
    Q,
    /// `O_γ - O_{γ^t}` over almost-odd `γ`.
    O,
    /// `Z_τ - Z_{τ^t}` over thin `τ`, permuting segments `τ_1 … τ_h`.
    Thin(PeakBasis),
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::X => f.write_str("X"),
            Flavor::Obar => f.write_str("Obar"),
            Flavor::Q => f.write_str("Q"),
            Flavor::O => f.write_str("O"),
            Flavor::Thin(b) => write!(f, "thin-{b}"),
        }
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "X" => Ok(Flavor::X),
            "Obar" => Ok(Flavor::Obar),
            "Q" => Ok(Flavor::Q),
            "O" => Ok(Flavor::O),
            "thin" => Ok(Flavor::Thin(PeakBasis::Q)),
            _ => match s.strip_prefix("thin-") {
                Some(b) => Ok(Flavor::Thin(b.parse()?)),
                None => Err(Error::Undefined("unknown radical flavor")),
            },
        }
    }
}

/// All distinct orderings of `items`, starting from the sorted one.
pub fn distinct_rearrangements(items: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = items.to_vec();
    cur.sort_unstable();
    let mut out = alloc::vec![cur.clone()];
    loop {
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

fn push_differences(out: &mut Vec<Vec<Rational>>, rows: &[Vec<Rational>], base: usize, others: &[usize]) {
    for &o in others {
        if o != base {
            out.push(rows[base].iter().zip(&rows[o]).map(|(a, b)| a - b).collect());
        }
    }
}

/// Generators of the radical in the algebra's class-sum coordinates.
pub fn radical_generator_coords(alg: RadicalAlgebra, n: usize, flavor: Flavor) -> Result<Vec<Vec<Rational>>> {
    let mut out = Vec::new();
    match (alg, flavor) {
        (RadicalAlgebra::SolB, Flavor::X) => {
            let m = descent_transition(n, ClassKind::DescentB, true);
            let labels = LabelIndex::get(ClassKind::DescentB, n);
            let rows = m.row_vecs();
            let pos = |p: &PseudoComposition| labels.position(p.subset()).expect("label");
            for beta in enumerate_pseudo(n) {
                let others: Vec<usize> = distinct_rearrangements(beta.tail())
                    .into_iter()
                    .map(|t| pos(&PseudoComposition::new(beta.head(), t).expect("rearranged")))
                    .collect();
                push_differences(&mut out, &rows, pos(&beta), &others);
            }
        }
        (RadicalAlgebra::SolA, Flavor::X) => {
            let m = descent_transition(n, ClassKind::DescentA, true);
            let labels = LabelIndex::get(ClassKind::DescentA, n);
            let rows = m.row_vecs();
            let pos = |a: &Composition| labels.position(a.subset()).expect("label");
            for alpha in enumerate_compositions(n) {
                let others: Vec<usize> = distinct_rearrangements(alpha.parts())
                    .into_iter()
                    .map(|p| pos(&Composition::new(p).expect("rearranged")))
                    .collect();
                push_differences(&mut out, &rows, pos(&alpha), &others);
            }
        }
        (RadicalAlgebra::Peak, Flavor::Obar | Flavor::Q | Flavor::O) => {
            let basis = match flavor {
                Flavor::Obar => PeakBasis::Obar,
                Flavor::Q => PeakBasis::Q,
                _ => PeakBasis::O,
            };
            let rows = transition_matrix(basis, PeakBasis::P, n).row_vecs();
            for gamma in enumerate_almost_odd(n) {
                let others: Vec<usize> = distinct_rearrangements(gamma.tail())
                    .into_iter()
                    .map(|t| {
                        let g = crate::combinatorics::AlmostOddComposition::new(gamma.head(), t).expect("rearranged");
                        sparse_from_almostodd(&g).index()
                    })
                    .collect();
                push_differences(&mut out, &rows, sparse_from_almostodd(&gamma).index(), &others);
            }
        }
        (RadicalAlgebra::Peak, Flavor::Thin(basis)) => {
            let rows = transition_matrix(basis, PeakBasis::P, n).row_vecs();
            for tau in enumerate_thin(n) {
                let segs = thin_segments(&tau);
                let order: Vec<usize> = (1..segs.len()).collect();
                let mut seen = Vec::new();
                for perm in distinct_rearrangements(&order) {
                    let mut parts = segs[0].clone();
                    for &s in &perm {
                        parts.extend_from_slice(&segs[s]);
                    }
                    let idx = sparse_from_thin(&ThinComposition::new(parts).expect("thin")).index();
                    if !seen.contains(&idx) {
                        seen.push(idx);
                    }
                }
                push_differences(&mut out, &rows, sparse_from_thin(&tau).index(), &seen);
            }
        }
        _ => return Err(Error::Undefined("flavor does not apply to this algebra")),
    }
    Ok(out)
}

/// Generators as group-algebra elements.
pub fn radical_generators(alg: RadicalAlgebra, n: usize, flavor: Flavor, caps: &Caps) -> Result<Vec<AnyElement>> {
    let coords = radical_generator_coords(alg, n, flavor)?;
    let kind = alg.kind();
    match alg {
        RadicalAlgebra::SolB => {
            crate::permutations::enumerate_group::<crate::permutations::SignedPermutation>(n, caps)?;
            Ok(coords.iter().map(|c| AnyElement::B(element_from_coords(kind, n, c))).collect())
        }
        _ => {
            crate::permutations::enumerate_group::<crate::permutations::Permutation>(n, caps)?;
            Ok(coords.iter().map(|c| AnyElement::A(element_from_coords(kind, n, c))).collect())
        }
    }
}

/// The span of one generator family.
pub fn radical_subspace_with(alg: RadicalAlgebra, n: usize, flavor: Flavor) -> Result<Subspace> {
    let rows = radical_generator_coords(alg, n, flavor)?;
    Ok(Subspace::from_spanning(alg.kind().dim(n), &rows))
}

/// The radical in class-sum coordinates, from the default generator family.
pub fn radical_subspace(alg: RadicalAlgebra, n: usize) -> Subspace {
    radical_subspace_with(alg, n, alg.default_flavor()).expect("default flavor applies")
}

/// `dim A - dim rad(A)`.
pub fn codim(alg: RadicalAlgebra, n: usize) -> usize {
    radical_subspace(alg, n).codim()
}

/// Smallest `m` with `S^m = 0`, iterating `S^{m+1} = span(S^m · S)` in the
/// class algebra of `kind`. A zero subspace has index 1. Fails with
/// `NotNilpotent` once the powers stop shrinking.
pub fn nilpotency_index(kind: ClassKind, n: usize, s: &Subspace, caps: &Caps) -> Result<usize> {
    let alg = ClassAlgebra::get(kind, n, caps)?;
    let gens = s.basis();
    let mut power = s.clone();
    let mut m = 1;
    while power.dim() > 0 {
        if m > s.dim() + 1 {
            return Err(Error::NotNilpotent(m));
        }
        let mut rows = Vec::new();
        for u in power.basis() {
            for v in &gens {
                let w = alg.multiply(&u, v);
                if w.iter().any(|x| !x.is_zero()) {
                    rows.push(w);
                }
            }
        }
        let next = Subspace::from_spanning(alg.dim(), &rows);
        if next == power {
            return Err(Error::NotNilpotent(m));
        }
        power = next;
        m += 1;
    }
    Ok(m)
}

/// Whether `S` is closed under multiplication by every basis element on
/// both sides.
pub fn is_two_sided_ideal(kind: ClassKind, n: usize, s: &Subspace, caps: &Caps) -> Result<bool> {
    let alg = ClassAlgebra::get(kind, n, caps)?;
    for u in s.basis() {
        for a in 0..alg.dim() {
            let b = alg.basis_vector(a);
            if !s.contains(&alg.multiply(&u, &b)) || !s.contains(&alg.multiply(&b, &u)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `dim ℘_n^j / (rad(℘_n) ∩ ℘_n^j)`.
pub fn radical_ideal_quotient(n: usize, j: usize) -> Result<usize> {
    let ideal = ideal_subspace(n, j)?;
    Ok(ideal.dim() - ideal.intersection(&radical_subspace(RadicalAlgebra::Peak, n)).dim())
}

/// `dim 𝔍_n^i / (rad(Σ(B_n)) ∩ 𝔍_n^i)`.
pub fn descent_radical_ideal_quotient(n: usize, i: usize) -> Result<usize> {
    let ideal = descent_ideal_subspace(n, i)?;
    Ok(ideal.dim() - ideal.intersection(&radical_subspace(RadicalAlgebra::SolB, n)).dim())
}

/// `℘_n` inside `Σ(A_{n-1})`, in `Y_A` coordinates.
pub fn peak_in_descent_a(n: usize) -> Subspace {
    let dim = sparse_index(n).list.len();
    let rows: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            let mut e = alloc::vec![Rational::zero(); dim];
            e[i] = Rational::from_integer(1.into());
            peak_to_descent_a(n, &e)
        })
        .collect();
    Subspace::from_spanning(ClassKind::DescentA.dim(n), &rows)
}

/// Whether `rad(℘_n) = rad(Σ(A_{n-1})) ∩ ℘_n`, compared inside `Y_A`
/// coordinates.
pub fn rad_peak_equals_rad_a_cap_peak(n: usize) -> bool {
    let rad_p = radical_subspace(RadicalAlgebra::Peak, n);
    let embedded: Vec<Vec<Rational>> = rad_p.basis().iter().map(|v| peak_to_descent_a(n, v)).collect();
    let embedded = Subspace::from_spanning(ClassKind::DescentA.dim(n), &embedded);
    let cap = radical_subspace(RadicalAlgebra::SolA, n).intersection(&peak_in_descent_a(n));
    cap.contains_subspace(&embedded) && embedded.contains_subspace(&cap)
}

/// Whether `φ(rad(Σ(B_n))) = rad(℘_n)`.
pub fn phi_maps_radical_onto(n: usize, caps: &Caps) -> Result<bool> {
    let image = radical_subspace(RadicalAlgebra::SolB, n).map(&phi_matrix(n, caps)?);
    Ok(image == radical_subspace(RadicalAlgebra::Peak, n))
}
