use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::*;
use crate::bases::{beta_x_coords, phi_matrix, pi_p_coords, y_to_x_b};
use crate::check::Report;
use crate::classes::ClassAlgebra;
use crate::linalg::Subspace;

fn fact(n: i64) -> Rational {
    Rational::from_integer(factorial(n as usize))
}

/// `(2j-1)!/(j-1)!`, read as `2^{j-1}(2j-1)!!` so that `j = 0` gives `1/2`.
fn odd_factorial_ratio(j: i64) -> Rational {
    let two = Rational::from_integer(2.into());
    let mut p = Rational::one();
    if j >= 1 {
        for _ in 0..j - 1 {
            p *= &two;
        }
    } else {
        p /= &two;
    }
    p * df(2 * j - 1)
}

/// Both sides of the first binomial identity, `1 ≤ i ≤ ⌊(n+1)/2⌋`.
pub fn binomial_identity_1(n: usize, i: usize) -> (Rational, Rational) {
    let (n, i) = (n as i64, i as i64);
    let mut lhs = Rational::zero();
    for j in i..=n - i + 1 {
        let t = fact(j - 1) * fact(n - j) / (fact(j - i) * fact(n - i - j + 1));
        lhs += sign((j - i) as usize) * t;
    }
    let rhs = if n % 2 == 1 {
        df(2 * i - 2) * df(n - 1) / (Rational::from_integer(BigInt::one() << (2 * i - 2) as usize) * df(n - 2 * i + 1))
    } else {
        Rational::zero()
    };
    (lhs, rhs)
}

/// Both sides of the second binomial identity, `0 ≤ i ≤ ⌊n/2⌋`. The
/// quotients `(2j-1)!/(j-1)!` are read as `2^{j-1}(2j-1)!!`, which is their
/// limiting value `1/2` at `j = 0`.
pub fn binomial_identity_2(n: usize, i: usize) -> (Rational, Rational) {
    let (n, i) = (n as i64, i as i64);
    let mut lhs = Rational::zero();
    for j in i..=n - i {
        let t = odd_factorial_ratio(j) * odd_factorial_ratio(n - j) / (fact(j - i) * fact(n - i - j));
        lhs += sign((j - i) as usize) * t;
    }
    let rhs = if n % 2 == 0 {
        let e = 2 * i - 2 * n + 2;
        let pow = Rational::from_integer(BigInt::one() << e.unsigned_abs() as usize);
        let scale = if e >= 0 { pow.recip() } else { pow };
        df(2 * i - 1) * df(n - 1) * scale / df(n - 2 * i)
    } else {
        Rational::zero()
    };
    (lhs, rhs)
}

/// Evaluates both binomial identities for every admissible `i` and `n ≤ max`.
pub fn binomial_checks(max: usize) -> Report {
    let mut r = Report::new("binomials");
    for n in 0..=max {
        let ok1 = (1..=(n + 1) / 2).all(|i| {
            let (a, b) = binomial_identity_1(n, i);
            a == b
        });
        r.push("binomial identity (1)", Some(n), ok1, "");
        let ok2 = (0..=n / 2).all(|i| {
            let (a, b) = binomial_identity_2(n, i);
            a == b
        });
        r.push("binomial identity (2)", Some(n), ok2, "");
    }
    r
}

fn span(dim: usize, rows: &[Vec<Rational>]) -> Subspace {
    Subspace::from_spanning(dim, rows)
}

/// Closure of `s` under products by `t` on both sides, and commutativity of
/// the basis of `s`.
fn closed_commutative(alg: &ClassAlgebra, s: &Subspace, t: &Subspace) -> (bool, bool) {
    let (sb, tb) = (s.basis(), t.basis());
    let mut closed = true;
    let mut comm = true;
    for u in &sb {
        for v in &tb {
            let (uv, vu) = (alg.multiply(u, v), alg.multiply(v, u));
            closed &= t.contains(&uv) && t.contains(&vu);
        }
        for v in &sb {
            comm &= alg.multiply(u, v) == alg.multiply(v, u);
        }
    }
    (closed, comm)
}

fn lin(len: usize, terms: impl Iterator<Item = (Rational, Vec<Rational>)>) -> Vec<Rational> {
    super::combine(terms, len)
}

/// Subalgebra structure, basis expansions and compatibility with `φ`, `π`
/// and `β` for the statistic sums of degree `n`.
pub fn subalgebra_checks(n: usize, caps: &Caps) -> Result<Report> {
    let mut r = Report::new("eulerian");
    let fp = sparse_index(n).list.len();
    let fb = 1usize << n;
    let half = n / 2;
    let half1 = (n + 1) / 2;

    // peak side
    let pa = ClassAlgebra::get(ClassKind::Peak, n, caps)?;
    let wp = span(fp, &(0..=half).map(|j| p_coords(n, j)).collect::<Vec<_>>());
    let wp0 = span(fp, &(1..=half1).map(|j| p0_coords(n, j)).collect::<Vec<_>>());
    let hat = wp.sum(&wp0);
    let (closed, comm) = closed_commutative(&pa, &hat, &hat);
    r.push("peak statistic span closed", Some(n), closed, "");
    r.push("peak statistic span commutative", Some(n), comm, "");
    if n >= 1 {
        r.push("peak statistic span dim n", Some(n), hat.dim() == n, format!("dim {}", hat.dim()));
    }
    let (sub, _) = closed_commutative(&pa, &wp, &wp);
    r.push("p_j span subalgebra", Some(n), sub && wp.dim() == half + 1, format!("dim {}", wp.dim()));
    let (ideal, _) = closed_commutative(&pa, &hat, &wp0);
    r.push("p0_j span ideal", Some(n), ideal && wp0.dim() == half1, format!("dim {}", wp0.dim()));

    // descent side
    let ba = ClassAlgebra::get(ClassKind::DescentB, n, caps)?;
    let sy = span(fb, &(0..=n).map(|j| y_coords(n, j)).collect::<Vec<_>>());
    let sy0 = span(fb, &(1..=n).map(|j| y0_coords(n, j)).collect::<Vec<_>>());
    let bhat = sy.sum(&sy0);
    let (closed, comm) = closed_commutative(&ba, &bhat, &bhat);
    r.push("descent statistic span closed and commutative", Some(n), closed && comm, "");
    if n >= 1 {
        r.push("descent statistic span dim 2n", Some(n), bhat.dim() == 2 * n, format!("dim {}", bhat.dim()));
    }
    let (sub, _) = closed_commutative(&ba, &sy, &sy);
    r.push("y_j span subalgebra", Some(n), sub && sy.dim() == n + 1, "");
    let (ideal, _) = closed_commutative(&ba, &bhat, &sy0);
    r.push("y0_j span ideal", Some(n), ideal && sy0.dim() == n, "");

    // φ on the statistic sums
    let phi = phi_matrix(n, caps)?;
    let four = |i: usize| Rational::from_integer(BigInt::one() << (2 * i));
    let phi_y = (0..=n).all(|j| {
        let expect = lin(fp, (0..=j.min(n - j)).map(|i| (four(i) * binomial((n - 2 * i) as i64, (j - i) as i64), p_coords(n, i))));
        phi.left_apply(&y_coords(n, j)) == expect
    });
    r.push("phi(y_j) expansion", Some(n), phi_y, "");
    let phi_y0 = (1..=n).all(|j| {
        let expect = lin(
            fp,
            (1..=j.min(n + 1 - j))
                .map(|i| (four(i) / Rational::from_integer(2.into()) * binomial((n + 1 - 2 * i) as i64, (j - i) as i64), p0_coords(n, i))),
        );
        phi.left_apply(&y0_coords(n, j)) == expect
    });
    r.push("phi(y0_j) expansion", Some(n), phi_y0, "");
    let pow2 = |j: usize| Rational::from_integer(BigInt::one() << j);
    let phi_x = (0..=n).all(|j| {
        let expect = lin(fp, (0..=half).map(|i| (pow2(j) * sign(i) * binomial((n - 2 * i) as i64, j as i64), q_coords(n, i))));
        phi.left_apply(&x_coords(n, j)) == expect
    });
    let phi_x0 = (1..=n).all(|j| {
        let expect = lin(
            fp,
            (1..=half1).map(|i| (pow2(j) * sign(i - 1) * binomial((n + 1 - 2 * i) as i64, (j - 1) as i64), q0_coords(n, i))),
        );
        phi.left_apply(&x0_coords(n, j)) == expect
    });
    r.push("phi(x_j) in q", Some(n), phi_x, "");
    r.push("phi(x0_j) in q0", Some(n), phi_x0, "");

    // q in p and ρ in q
    let q_in_p = (0..=half).all(|j| q_coords(n, j) == lin(fp, (j..=half).map(|i| (binomial(i as i64, j as i64), p_coords(n, i)))));
    let q0_in_p0 = (1..=half1).all(|j| {
        q0_coords(n, j) == lin(fp, (j..=half1).map(|i| (binomial(i as i64 - 1, j as i64 - 1), p0_coords(n, i))))
    });
    r.push("q_j in p", Some(n), q_in_p, "");
    r.push("q0_j in p0", Some(n), q0_in_p0, "");
    let rho_in_q = rho_coords(n)
        == lin(fp, (0..=half).map(|i| (sign(i) * df((n - 2 * i) as i64 - 1) / df((n - 2 * i) as i64), q_coords(n, i))));
    r.push("rho_(n) in q", Some(n), rho_in_q, "");
    if n >= 1 {
        let rho0_in_q0 = rho0_coords(n)?
            == lin(
                fp,
                (1..=half1).map(|i| {
                    (sign(i - 1) / Rational::from_integer(((n + 2 - 2 * i) as i64).into()), q0_coords(n, i))
                }),
            );
        r.push("rho_(0,n) in q0", Some(n), rho0_in_q0, "");
    }

    // e in x
    let e_in_x =
        e_coords(n) == lin(fb, (0..=n).map(|j| (sign(j) * df(2 * j as i64 - 1) / df(2 * j as i64), x_coords(n, j))));
    r.push("e_(n) in x", Some(n), e_in_x, "");
    if n >= 1 {
        let e0_in_x = e0_coords(n)?
            == lin(fb, (1..=n).map(|j| (sign(j - 1) / Rational::from_integer((j as i64).into()), x0_coords(n, j))));
        r.push("e_(0,n) in x0", Some(n), e0_in_x, "");
    }

    // φ(e) by parity
    let phi_e = phi.left_apply(&e_coords(n));
    let expect = if n % 2 == 0 { rho_coords(n) } else { alloc::vec![Rational::zero(); fp] };
    r.push("phi(e_(n)) = rho_(n) or 0", Some(n), phi_e == expect, "");
    if n >= 1 {
        let phi_e0 = phi.left_apply(&e0_coords(n)?);
        let two = Rational::from_integer(2.into());
        let expect: Vec<Rational> = if n % 2 == 1 {
            rho0_coords(n)?.iter().map(|x| x * &two).collect()
        } else {
            alloc::vec![Rational::zero(); fp]
        };
        r.push("phi(e_(0,n)) = 2 rho_(0,n) or 0", Some(n), phi_e0 == expect, "");
    }

    // β and π
    if n >= 1 {
        let beta = |y: &[Rational]| x_to_y_b(n - 1, &beta_x_coords(n, &y_to_x_b(n, y)));
        let bx = (0..=n).all(|j| {
            let expect = if j < n { x_coords(n - 1, j) } else { alloc::vec![Rational::zero(); fb / 2] };
            beta(&x_coords(n, j)) == expect
        });
        r.push("beta(x_j) = x_j", Some(n), bx, "");
        r.push("beta(e_(n)) = e_(n-1)", Some(n), beta(&e_coords(n)) == e_coords(n - 1), "");
        r.push("beta(e_(0,n)) = 0", Some(n), beta(&e0_coords(n)?).iter().all(|x| x.is_zero()), "");
    }
    if n >= 2 {
        let zero = alloc::vec![Rational::zero(); sparse_index(n - 2).list.len()];
        let pq = (0..=half).all(|j| {
            let got = pi_p_coords(n, &q_coords(n, j));
            if j == 0 {
                got == zero
            } else {
                got == q_coords(n - 2, j - 1).iter().map(|x| -x).collect::<Vec<_>>()
            }
        });
        r.push("pi(q_j) = -q_(j-1)", Some(n), pq, "");
        r.push("pi(rho_(n)) = rho_(n-2)", Some(n), pi_p_coords(n, &rho_coords(n)) == rho_coords(n - 2), "");
        r.push("pi(rho_(0,n)) = 0", Some(n), pi_p_coords(n, &rho0_coords(n)?) == zero, "");
    }

    // e_(n) and e_(0,n)/2 are orthogonal idempotents
    if n >= 1 {
        let e = e_coords(n);
        let f: Vec<Rational> = e0_coords(n)?.iter().map(|x| x / Rational::from_integer(2.into())).collect();
        let zero = alloc::vec![Rational::zero(); fb];
        let ok = ba.multiply(&e, &e) == e
            && ba.multiply(&f, &f) == f
            && ba.multiply(&e, &f) == zero
            && ba.multiply(&f, &e) == zero;
        r.push("e_(n), e_(0,n)/2 orthogonal idempotents", Some(n), ok, "");
    }
    Ok(r)
}

/// Idempotency of `ρ_(n)` (even `n`) and `ρ_(0,n)` (odd `n`) and the
/// dimensions of the left ideals they generate.
pub fn idempotent_checks(n: usize, caps: &Caps) -> Result<Report> {
    let mut r = Report::new("idempotents");
    let pa = ClassAlgebra::get(ClassKind::Peak, n, caps)?;
    if n % 2 == 0 {
        let rho = rho_coords(n);
        r.push("rho_(n) idempotent", Some(n), pa.multiply(&rho, &rho) == rho, "");
        let d = left_ideal_dimension(&rho_n(n, caps)?, caps)?;
        let expect = double_factorial(n as i64 - 1)?.pow(2);
        let ok = d.agree() && Rational::from_integer(expect.clone()) == d.by_trace;
        r.push("dim kS_n rho_(n) = (n-1)!!^2", Some(n), ok, format!("trace {} rank {} expected {}", d.by_trace, d.by_rank, expect));
    } else {
        let rho0 = rho0_coords(n)?;
        r.push("rho_(0,n) idempotent", Some(n), pa.multiply(&rho0, &rho0) == rho0, "");
        let d = left_ideal_dimension(&rho_0n(n, caps)?, caps)?;
        let expect = factorial(n - 1);
        let ok = d.agree() && Rational::from_integer(expect.clone()) == d.by_trace;
        r.push("dim kS_n rho_(0,n) = (n-1)!", Some(n), ok, format!("trace {} rank {} expected {}", d.by_trace, d.by_rank, expect));
    }
    Ok(r)
}
