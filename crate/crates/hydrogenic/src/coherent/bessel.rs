//! Modified Bessel functions of the first kind and the derived coherent-state
//! normalization constants M_l.

use crate::numerics::{log_factorial, KahanSum};
use crate::scalar::Real;

/// Terms below this fraction of the running sum are dropped; the series
/// converge super-linearly so the truncation error is far smaller still.
const TERM_CUTOFF: f64 = 1e-18;
const MAX_TERMS: usize = 500;

/// I_order(x) by its power series sum_k (x/2)^(2k+order) / (k! (k+order)!).
///
/// Requires x >= 0 (integer order). I_0(0) = 1; higher orders vanish at 0.
pub fn bessel_i<R: Real>(order: u32, x: R) -> R {
    assert!(x >= R::zero(), "bessel_i requires x >= 0");
    if x == R::zero() {
        return if order == 0 { R::one() } else { R::zero() };
    }
    let half = x * R::of(0.5);
    let mut term = (R::from_uint(u64::from(order)) * half.ln()
        - log_factorial::<R>(u64::from(order)))
    .exp();
    let ratio_base = half * half;
    let mut acc = KahanSum::new();
    acc.add(term);
    for k in 0..MAX_TERMS {
        let kf = R::from_uint(k as u64 + 1);
        let of = R::from_uint(k as u64 + 1 + u64::from(order));
        term = term * ratio_base / (kf * of);
        acc.add(term);
        if term < R::of(TERM_CUTOFF) * acc.value() {
            break;
        }
    }
    acc.value()
}

/// Series form of M_l(x)^-2: sum_k (x/2)^(2k) / (k! (k+2l+1)!).
///
/// Singularity-free at x = 0, where it reduces to 1/(2l+1)!.
pub(crate) fn bessel_m_inverse_square<R: Real>(l: u32, x: R) -> R {
    let mut term = (-log_factorial::<R>(u64::from(2 * l + 1))).exp();
    let half = x * R::of(0.5);
    let ratio_base = half * half;
    let mut acc = KahanSum::new();
    acc.add(term);
    for k in 0..MAX_TERMS {
        let kf = R::from_uint(k as u64 + 1);
        let of = R::from_uint(k as u64 + 2 + u64::from(2 * l));
        term = term * ratio_base / (kf * of);
        acc.add(term);
        if term < R::of(TERM_CUTOFF) * acc.value() {
            break;
        }
    }
    acc.value()
}

/// Coherent-state normalization constant
/// M_l(x) = (x/2)^(l+1/2) I_{2l+1}(x)^(-1/2), evaluated through its
/// singularity-free series so the x = 0 one-sided limit sqrt((2l+1)!) comes
/// out directly. Strictly positive and strictly decreasing in x.
pub fn bessel_m<R: Real>(l: u32, x: R) -> R {
    assert!(x >= R::zero(), "bessel_m requires x >= 0");
    bessel_m_inverse_square(l, x).sqrt().recip()
}
