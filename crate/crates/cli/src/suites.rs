//! Verification suites run by `peakalg verify`.

use std::fmt;
use std::str::FromStr;

use peakalg::algebra::SnElement;
use peakalg::bases::{
    beta, descent_element_b, descent_ideal_subspace, ideal_dimension, ideal_subspace,
    multiplicative_factorization_check, peak_basis_elements, peak_element, peak_element_from_coords, phi, phi_matrix,
    phi_x_in_p, pi, pi_power_kernel, transition_matrix, FactorBasis, PeakBasis,
};
use peakalg::check::Report;
use peakalg::classes::{peak_class_coords, ClassKind};
use peakalg::combinatorics::{
    count_odd_partitions, count_partitions, enumerate_almost_odd, enumerate_pseudo, enumerate_sparse,
    enumerate_subsets, fibonacci, SparseSubset,
};
use peakalg::eulerian::{binomial_checks, idempotent_checks, semiidempotent_basis, subalgebra_checks};
use peakalg::lie::lie_report;
use peakalg::linalg::Echelon;
use peakalg::permutations::{enumerate_group, Permutation};
use peakalg::radical::{
    codim, is_two_sided_ideal, nilpotency_index, phi_maps_radical_onto, rad_peak_equals_rad_a_cap_peak,
    radical_ideal_quotient, radical_subspace, radical_subspace_with, Flavor, RadicalAlgebra,
};
use peakalg::{BitSet, Caps, Rational};

use crate::CliError;

/// Largest degree for which the `B_n` group algebra is expanded inside a suite.
const B_EXPAND: usize = 5;
/// Largest degree for which basis-pair grids are multiplied out.
const GRID: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Bases,
    Ideals,
    Radical,
    Idempotents,
    Convolution,
    Lie,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Bases, Suite::Ideals, Suite::Radical, Suite::Idempotents, Suite::Convolution, Suite::Lie];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bases => "bases",
            Suite::Ideals => "ideals",
            Suite::Radical => "radical",
            Suite::Idempotents => "idempotents",
            Suite::Convolution => "convolution",
            Suite::Lie => "lie",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Options shared by every suite.
#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub caps: Caps,
    pub seed: u64,
    /// Radical generators to compare against the default family.
    pub flavor: Option<Flavor>,
}

pub fn run_suite(suite: Suite, n: usize, opts: &SuiteOptions) -> Result<Report, CliError> {
    let caps = &opts.caps;
    if n > caps.type_a {
        return Err(CliError::Usage(format!("n={n} exceeds cap_a={}", caps.type_a)));
    }
    let r = match suite {
        Suite::Bases => bases(n, caps)?,
        Suite::Ideals => ideals(n, caps)?,
        Suite::Radical => radical(n, opts.flavor, caps)?,
        Suite::Idempotents => idempotents(n, caps)?,
        Suite::Convolution => convolution(n, caps)?,
        Suite::Lie => lie_report(n, opts.seed, caps)?,
    };
    Ok(r)
}

fn b_limit(caps: &Caps) -> usize {
    caps.type_b.min(B_EXPAND)
}

fn bases(n: usize, caps: &Caps) -> Result<Report, CliError> {
    let mut r = Report::new("bases");
    let f = fibonacci(n) as usize;
    let sparse = enumerate_sparse(n);
    let mut counts = true;
    for b in PeakBasis::ALL {
        counts &= peak_basis_elements(b, n, caps)?.len() == f;
    }
    r.push("each peak basis has f_n elements", Some(n), counts && sparse.len() == f, format!("f_n = {f}"));

    let classes: Vec<SnElement> = peak_basis_elements(PeakBasis::P, n, caps)?;
    let mut covered = SnElement::zero(n);
    for u in &classes {
        covered = &covered + u;
    }
    let all = SnElement::sum_of(n, enumerate_group::<Permutation>(n, caps)?.iter());
    r.push("peak classes partition S_n", Some(n), covered == all, "");

    let mut ok = true;
    for from in PeakBasis::ALL {
        for to in PeakBasis::ALL {
            let m = transition_matrix(from, to, n);
            ok &= m.is_integral() && m.inverse().is_some_and(|inv| inv.is_integral());
        }
    }
    r.push("peak transition matrices are integral and unimodular", Some(n), ok, "");

    if n <= b_limit(caps) {
        let mut ok = true;
        let subsets = if n == 0 { vec![BitSet::EMPTY] } else { enumerate_subsets(0, n as i64 - 1) };
        for &j in &subsets {
            let lhs = phi(&descent_element_b(j, n, true, caps)?);
            ok &= lhs == peak_element_from_coords(&phi_x_in_p(j, n), caps)?;
        }
        r.push("phi(X_J) expansion in P", Some(n), ok, format!("{} subsets", subsets.len()));
    }

    if (2..=GRID).contains(&n) {
        let images: Vec<SnElement> =
            classes.iter().map(|u| pi(u, caps).map(|x| x.expect("n >= 2"))).collect::<Result<_, _>>()?;
        let mut ok = true;
        for (a, ua) in classes.iter().enumerate() {
            for (b, ub) in classes.iter().enumerate() {
                ok &= pi(&(ua * ub), caps)?.as_ref() == Some(&(&images[a] * &images[b]));
            }
        }
        r.push("pi is multiplicative on P pairs", Some(n), ok, "");
    }
    if n == 5 {
        let lhs = pi(&peak_element(PeakBasis::P, &SparseSubset::new(5, &[4])?, caps)?, caps)?;
        let rhs = peak_element(PeakBasis::P, &SparseSubset::new(3, &[2])?, caps)?;
        r.push("pi(P{4}@5) = P{2}@3", Some(n), lhs == Some(rhs), "");
    }

    if (1..=4).contains(&n) && n <= caps.type_b {
        let xs = enumerate_subsets(0, n as i64 - 1)
            .into_iter()
            .map(|j| descent_element_b(j, n, true, caps))
            .collect::<Result<Vec<_>, _>>()?;
        let bx = xs.iter().map(|u| beta(u, caps).map(|x| x.expect("n >= 1"))).collect::<Result<Vec<_>, _>>()?;
        let mut ok = true;
        for (a, ua) in xs.iter().enumerate() {
            for (b, ub) in xs.iter().enumerate() {
                ok &= beta(&(ua * ub), caps)?.as_ref() == Some(&(&bx[a] * &bx[b]));
            }
        }
        r.push("beta is multiplicative on X pairs", Some(n), ok, "");
        if n >= 2 {
            let mut ok = true;
            for (u, bu) in xs.iter().zip(&bx) {
                let bb = beta(bu, caps)?.expect("n >= 2");
                ok &= Some(phi(&bb)) == pi(&phi(u), caps)?;
            }
            r.push("phi(beta^2(u)) = pi(phi(u))", Some(n), ok, "");
        }
    }
    Ok(r)
}

fn ideals(n: usize, caps: &Caps) -> Result<Report, CliError> {
    let mut r = Report::new("ideals");
    let f = |m: i64| if m < 0 { 0 } else { fibonacci(m as usize) as usize };
    let mut prev: Option<peakalg::linalg::Subspace> = None;
    for j in 0..=n / 2 {
        let s = ideal_subspace(n, j)?;
        let want = f(n as i64) - f(n as i64 - 2 * j as i64 - 2);
        let ok = s.dim() == want && ideal_dimension(n, j)? == want;
        r.push(&format!("ideal {j} has dimension f_n - f_(n-2j-2)"), Some(n), ok, format!("dim {}", s.dim()));
        r.push(&format!("ideal {j} is the kernel of pi^(j+1)"), Some(n), s == pi_power_kernel(n, j + 1), "");
        if let Some(p) = &prev {
            r.push(&format!("ideal {} lies in ideal {j}", j - 1), Some(n), s.contains_subspace(p), "");
        }
        if n <= GRID {
            r.push(
                &format!("ideal {j} is two-sided"),
                Some(n),
                is_two_sided_ideal(ClassKind::Peak, n, &s, caps)?,
                "",
            );
        }
        prev = Some(s);
    }
    if n <= b_limit(caps) {
        let m = phi_matrix(n, caps)?;
        let mut ok = true;
        for i in 0..=n {
            ok &= descent_ideal_subspace(n, i)?.map(&m) == ideal_subspace(n, i / 2)?;
        }
        r.push("phi maps descent ideal i onto peak ideal i/2", Some(n), ok, "");
    }
    Ok(r)
}

fn flavors_for(alg: RadicalAlgebra) -> Vec<Flavor> {
    match alg {
        RadicalAlgebra::Peak => vec![
            Flavor::Q,
            Flavor::O,
            Flavor::Thin(PeakBasis::Q),
            Flavor::Thin(PeakBasis::O),
            Flavor::Thin(PeakBasis::Obar),
        ],
        _ => vec![],
    }
}

fn radical(n: usize, flavor: Option<Flavor>, caps: &Caps) -> Result<Report, CliError> {
    let mut r = Report::new("radical");
    let peak_codim: u64 = (0..=n / 2).map(|j| count_odd_partitions(n - 2 * j)).sum();
    let got = codim(RadicalAlgebra::Peak, n);
    r.push("codim of the peak radical", Some(n), got as u64 == peak_codim, format!("{got}"));
    let got = codim(RadicalAlgebra::SolA, n);
    r.push("codim of the type A radical is p(n)", Some(n), got as u64 == count_partitions(n), format!("{got}"));
    let b_codim: u64 = (0..=n).map(count_partitions).sum();
    let got = codim(RadicalAlgebra::SolB, n);
    r.push("codim of the type B radical", Some(n), got as u64 == b_codim, format!("{got}"));

    let base = radical_subspace(RadicalAlgebra::Peak, n);
    let others = match flavor {
        Some(f) => vec![f],
        None => flavors_for(RadicalAlgebra::Peak),
    };
    let mut ok = true;
    let mut names = Vec::new();
    for f in others {
        ok &= radical_subspace_with(RadicalAlgebra::Peak, n, f)? == base;
        names.push(f.to_string());
    }
    r.push("radical generator families agree", Some(n), ok, names.join(","));

    for j in 0..=n / 2 {
        let partial: u64 = (0..=j).map(|i| count_odd_partitions(n - 2 * i)).sum();
        let got = radical_ideal_quotient(n, j)?;
        r.push(
            &format!("quotient of ideal {j} by its radical"),
            Some(n),
            got as u64 == partial,
            format!("dim {got}"),
        );
    }
    if n <= GRID {
        let idx = nilpotency_index(ClassKind::Peak, n, &base, caps)?;
        r.push("peak radical is nilpotent", Some(n), true, format!("index {idx}"));
        r.push("peak radical is two-sided", Some(n), is_two_sided_ideal(ClassKind::Peak, n, &base, caps)?, "");
        r.push("peak radical is the type A radical inside the peak algebra", Some(n), rad_peak_equals_rad_a_cap_peak(n), "");
    }
    if n <= b_limit(caps) {
        r.push("phi maps the type B radical onto the peak radical", Some(n), phi_maps_radical_onto(n, caps)?, "");
    }
    Ok(r)
}

fn idempotents(n: usize, caps: &Caps) -> Result<Report, CliError> {
    let mut r = Report::new("idempotents");
    if n == 0 {
        return Ok(r);
    }
    r.extend(idempotent_checks(n, caps)?);
    if n <= b_limit(caps) {
        r.extend(subalgebra_checks(n, caps)?);
    }
    let mut b = binomial_checks(n);
    b.claims.retain(|c| c.n == Some(n));
    r.extend(b);
    Ok(r)
}

fn convolution(n: usize, caps: &Caps) -> Result<Report, CliError> {
    let mut r = Report::new("convolution");
    if n <= b_limit(caps) {
        let all = enumerate_pseudo(n);
        let mut bad = Vec::new();
        for b in &all {
            if !multiplicative_factorization_check(FactorBasis::X, &b.parts(), caps)? {
                bad.push(b.to_string());
            }
        }
        r.push("X factors over pseudocomposition parts", Some(n), bad.is_empty(), witness(all.len(), &bad));
    }
    let all = enumerate_almost_odd(n);
    for basis in [PeakBasis::Q, PeakBasis::O, PeakBasis::Obar] {
        let mut bad = Vec::new();
        for g in &all {
            if !multiplicative_factorization_check(FactorBasis::Peak(basis), &g.parts(), caps)? {
                bad.push(g.to_string());
            }
        }
        r.push(&format!("{basis} factors over almost-odd parts"), Some(n), bad.is_empty(), witness(all.len(), &bad));
    }
    let rows: Vec<Vec<Rational>> =
        semiidempotent_basis(n, caps)?.iter().map(|u| peak_class_coords(u, caps)).collect::<Result<_, _>>()?;
    let f = fibonacci(n) as usize;
    let rank = Echelon::from_rows(f, &rows).rank();
    r.push("rho_gamma span the peak algebra", Some(n), rank == f, format!("rank {rank} of {f}"));
    Ok(r)
}

fn witness(total: usize, bad: &[String]) -> String {
    if bad.is_empty() {
        format!("{total} compositions")
    } else {
        format!("fails at {}", bad.join(" "))
    }
}
