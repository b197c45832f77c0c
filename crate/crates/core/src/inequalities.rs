//! Shape predicates on coefficient sequences and the coefficient
//! inequalities satisfied by independence polynomials.
//!
//! Everything here is exact: integer or big-integer arithmetic only.

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::poly::Polynomial;
use crate::rational::Rational;

/// Least `k` with `s_k^2 < s_{k-1} s_{k+1}`, if any.
pub fn log_concavity_violation(p: &Polynomial) -> Option<usize> {
    let s = p.coeffs();
    (1..s.len().saturating_sub(1)).find(|&k| &s[k] * &s[k] < &s[k - 1] * &s[k + 1])
}

pub fn is_log_concave(p: &Polynomial) -> bool {
    log_concavity_violation(p).is_none()
}

/// Least index of the peak when the sequence rises then falls (plateaus
/// allowed), `None` otherwise.
pub fn unimodal_mode(p: &Polynomial) -> Option<usize> {
    let s = p.coeffs();
    if s.is_empty() {
        return Some(0);
    }
    let mut top = s.len() - 1;
    for i in 0..s.len() - 1 {
        if s[i + 1] < s[i] {
            top = i;
            break;
        }
    }
    if s[top..].windows(2).any(|w| w[1] > w[0]) {
        return None;
    }
    let peak = &s[top];
    s[..=top].iter().position(|c| c == peak)
}

pub fn is_unimodal(p: &Polynomial) -> bool {
    unimodal_mode(p).is_some()
}

/// `alpha * s_alpha <= n * s_{alpha - 1}` with `alpha = deg p`. Vacuous for
/// constants.
pub fn check_lem2a(p: &Polynomial, n: usize) -> bool {
    let a = p.degree();
    if a == 0 {
        return true;
    }
    p.coeff(a) * BigUint::from(a) <= p.coeff(a - 1) * BigUint::from(n)
}

/// Least `k` in `0..deg` breaking `(k+1) s_{k+1} <= (n - (lambda+1) k) s_k`.
pub fn quasi_reg_bound_violation(p: &Polynomial, n: usize, lambda: &Rational) -> Option<usize> {
    // scale by the denominator b of lambda = a/b:
    // b (k+1) s_{k+1} <= (b n - (a + b) k) s_k
    let a = lambda.numer();
    let b = lambda.denom();
    (0..p.degree()).find(|&k| {
        let lhs = b * BigInt::from(k + 1) * BigInt::from(p.coeff(k + 1));
        let factor = b * BigInt::from(n) - (a + b) * BigInt::from(k);
        let rhs = factor * BigInt::from(p.coeff(k));
        lhs > rhs
    })
}

pub fn check_quasi_reg_bounds(p: &Polynomial, n: usize, lambda: &Rational) -> bool {
    quasi_reg_bound_violation(p, n, lambda).is_none()
}

/// Least `k` in `1..alpha` breaking `p (alpha - k) s_k <= (k+1) s_{k+1}`.
pub fn wp_lower_bound_violation(poly: &Polynomial, alpha: usize, p: usize) -> Option<usize> {
    (1..alpha).find(|&k| {
        poly.coeff(k) * BigUint::from(p * (alpha - k)) > poly.coeff(k + 1) * BigUint::from(k + 1)
    })
}

pub fn check_wp_lower_bounds(poly: &Polynomial, alpha: usize, p: usize) -> bool {
    wp_lower_bound_violation(poly, alpha, p).is_none()
}

/// Which of the two `(n, alpha, p)` regions guaranteeing log-concavity of a
/// connected `W_p` graph (with `p != 2`) contains the parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalCase {
    /// `alpha^2 / (4(alpha+1)) <= p` and
    /// `(p+1) alpha <= n <= p alpha + 2 sqrt(p alpha + p)`.
    CaseA,
    /// `alpha (alpha-1) / (alpha+1) <= p` and
    /// `p alpha + 2 sqrt(p alpha + p) < n <= ((alpha^2+1) p + (alpha-1)^2) / (alpha-1)`.
    CaseB,
    Outside,
}

impl IntervalCase {
    pub fn is_inside(self) -> bool {
        self != IntervalCase::Outside
    }
}

/// Exact classification; the square root is compared by squaring.
///
/// For `alpha = 1` the upper end of the second region has a zero denominator
/// and positive numerator, so it is taken as unbounded.
pub fn log2_interval_case(n: u64, alpha: u64, p: u64) -> IntervalCase {
    let (n, a, p) = (n as i128, alpha as i128, p as i128);
    let radicand4 = 4 * p * (a + 1); // (2 sqrt(p a + p))^2
    let excess = n - p * a; // n - p alpha, compared with 2 sqrt(p alpha + p)
    let within_sqrt = excess < 0 || excess * excess <= radicand4;

    let case_a = a * a <= radicand4 && (p + 1) * a <= n && within_sqrt;
    if case_a {
        return IntervalCase::CaseA;
    }
    let upper_ok = a == 1 || n * (a - 1) <= (a * a + 1) * p + (a - 1) * (a - 1);
    let case_b = a * (a - 1) <= p * (a + 1) && !within_sqrt && upper_ok;
    if case_b {
        IntervalCase::CaseB
    } else {
        IntervalCase::Outside
    }
}

/// `k^2 - (n - p alpha) k + p alpha + p >= 0` for every integer
/// `1 <= k <= alpha - 1`.
///
/// This is the pointwise condition behind both regions of
/// [`log2_interval_case`]; combined with the two coefficient bounds for
/// `p`-quasi-regularizable `W_p` graphs it forces `s_k^2 >= s_{k-1} s_{k+1}`.
/// It can hold for integer `k` even when the real-interval test fails.
pub fn quadratic_condition(n: u64, alpha: u64, p: u64) -> bool {
    let (n, a, p) = (n as i128, alpha as i128, p as i128);
    (1..a).all(|k| k * k - (n - p * a) * k + p * a + p >= 0)
}
