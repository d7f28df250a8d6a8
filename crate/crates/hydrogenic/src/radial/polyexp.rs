//! Exponential-polynomial radial functions in rho-space.
//!
//! Every bound radial eigenfunction has the shape
//! `phi(rho) = e^(-rho/2) * sum_{k=l}^{n-1} c_k rho^k`, and the family is
//! closed under the ladder operators: raising and lowering act as exact
//! coefficient recurrences, so no differential equation is ever solved
//! numerically.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::atom::LadderSign;
use crate::error::{Error, Result};
use crate::numerics::log_factorial;
use crate::scalar::Real;


/// A radial function `e^(-rho/2) * sum_{k=l}^{n-1} c_k rho^k`.
///
/// `coeffs[j]` stores `c_{l+j}`; the implied principal number is
/// `n = l + coeffs.len()`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyExp<R: Real> {
    l: u32,
    coeffs: Vec<R>,
}

impl<R: Real> PolyExp<R> {
    /// Builds from the coefficient run `c_l ..= c_{n-1}`.
    ///
    /// The top coefficient must be nonzero (the all-below-threshold zero
    /// function produced by lowering a ground state is also accepted).
    pub fn new(l: u32, coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidPolyExp(
                "coefficient run must be non-empty".into(),
            ));
        }
        if !coeffs.iter().all(|c| c.is_finite()) {
            return Err(Error::InvalidPolyExp("coefficients must be finite".into()));
        }
        let out = Self { l, coeffs };
        if !out.is_zero() && *out.coeffs.last().unwrap() == R::zero() {
            return Err(Error::InvalidPolyExp(
                "top coefficient must be nonzero".into(),
            ));
        }
        Ok(out)
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Implied principal quantum number n = l + (number of coefficients).
    pub fn n(&self) -> u32 {
        self.l + self.coeffs.len() as u32
    }

    /// Coefficient run `c_l ..= c_{n-1}`.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of rho^k for an absolute power index k.
    pub fn coeff(&self, k: u32) -> R {
        if k < self.l || k >= self.n() {
            R::zero()
        } else {
            self.coeffs[(k - self.l) as usize]
        }
    }

    /// True when every coefficient vanished; callers of [`apply_ladder`]
    /// treat this as ladder termination.
    ///
    /// Lowering a ground state annihilates each coefficient through an exact
    /// integer multiplier, so the comparison here is exact. An absolute
    /// cutoff would misread high-l states, whose normalized coefficients are
    /// legitimately far below any fixed threshold.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == R::zero())
    }

    /// phi(rho).
    pub fn eval(&self, rho: R) -> R {
        (-rho * R::of(0.5)).exp() * self.eval_poly(rho)
    }

    /// The polynomial factor P(rho) = sum c_k rho^k alone.
    pub fn eval_poly(&self, rho: R) -> R {
        rho.powi(self.l as i32) * self.eval_inner(rho)
    }

    /// Horner evaluation of Q(rho) = sum_j coeffs[j] rho^j (poly with the
    /// leading rho^l split off).
    fn eval_inner(&self, rho: R) -> R {
        let mut acc = R::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * rho + c;
        }
        acc
    }

    /// (Q, Q', Q'') for the inner polynomial by a fused Horner pass.
    fn eval_inner_derivatives(&self, rho: R) -> (R, R, R) {
        let mut q = R::zero();
        let mut dq = R::zero();
        let mut d2q = R::zero();
        for &c in self.coeffs.iter().rev() {
            d2q = d2q * rho + R::of(2.0) * dq;
            dq = dq * rho + q;
            q = q * rho + c;
        }
        (q, dq, d2q)
    }

    /// (P, P', P'') for the full polynomial factor P = rho^l Q.
    pub fn eval_poly_derivatives(&self, rho: R) -> (R, R, R) {
        let (q, dq, d2q) = self.eval_inner_derivatives(rho);
        let l = R::from_uint(u64::from(self.l));
        match self.l {
            0 => (q, dq, d2q),
            1 => (rho * q, q + rho * dq, R::of(2.0) * dq + rho * d2q),
            _ => {
                let pl2 = rho.powi(self.l as i32 - 2);
                let pl1 = pl2 * rho;
                let pl = pl1 * rho;
                (
                    pl * q,
                    pl1 * (l * q + rho * dq),
                    pl2 * (l * (l - R::one()) * q + R::of(2.0) * l * rho * dq + rho * rho * d2q),
                )
            }
        }
    }

    /// (phi, phi', phi'') at rho; the exponential factor is differentiated
    /// analytically.
    pub fn eval_derivatives(&self, rho: R) -> (R, R, R) {
        let (p, dp, d2p) = self.eval_poly_derivatives(rho);
        let e = (-rho * R::of(0.5)).exp();
        let half = R::of(0.5);
        (
            e * p,
            e * (dp - half * p),
            e * (d2p - dp + R::of(0.25) * p),
        )
    }

    /// Rescaled copy.
    pub fn scaled(&self, s: R) -> Self {
        Self {
            l: self.l,
            coeffs: self.coeffs.iter().map(|&c| c * s).collect(),
        }
    }

    /// Checks the required boundary decay of rho*phi(rho) numerically at the
    /// conventional probe points rho = 1e-8 and rho = 400.
    pub fn boundary_decay_ok(&self) -> bool {
        let near = R::of(1e-8);
        let far = R::of(400.0);
        let at_near = near * self.eval(near);
        let at_far = far * self.eval(far);
        at_near.is_finite()
            && at_far.is_finite()
            && at_near.abs() < R::of(1e-7)
            && at_far.abs() < R::of(1e-8)
    }

    /// JSON form `{"l":..,"n":..,"coeffs":[..]}`.
    pub fn to_json(&self) -> String {
        let coeffs: Vec<String> = self
            .coeffs
            .iter()
            .map(|c| format!("{:?}", c.to_f64().unwrap()))
            .collect();
        format!(
            "{{\"l\":{},\"n\":{},\"coeffs\":[{}]}}",
            self.l,
            self.n(),
            coeffs.join(",")
        )
    }
}

/// Normalized ladder ground state for orbital number l:
/// `rho^l e^(-rho/2) / sqrt((2l+1)!)` under the measure rho d(rho).
pub fn ground_phi<R: Real>(l: u32) -> PolyExp<R> {
    let norm = (-R::of(0.5) * log_factorial::<R>(u64::from(2 * l + 1))).exp();
    let mut coeffs = vec![R::zero(); 1];
    coeffs[0] = norm;
    PolyExp { l, coeffs }
}

/// Applies a ladder operator `(+-rho d/drho - rho/2 + n +- 1)` exactly on the
/// coefficient representation; the image is unnormalized.
///
/// Raising lifts the degree by one; lowering drops it by one, and lowering a
/// ground state yields the zero function (see [`PolyExp::is_zero`]).
pub fn apply_ladder<R: Real>(sign: LadderSign, poly: &PolyExp<R>) -> PolyExp<R> {
    let n = i64::from(poly.n());
    let l = i64::from(poly.l);
    match sign {
        LadderSign::Raise => {
            // c'_k = (k + n + 1) c_k - c_{k-1}
            let len = poly.coeffs.len();
            let mut out = vec![R::zero(); len + 1];
            for (j, &c) in poly.coeffs.iter().enumerate() {
                let k = l + j as i64;
                out[j] += R::from_int(k + n + 1) * c;
                out[j + 1] -= c;
            }
            PolyExp {
                l: poly.l,
                coeffs: out,
            }
        }
        LadderSign::Lower => {
            // c'_k = (n - 1 - k) c_k; the top coefficient is annihilated
            let mut out: Vec<R> = poly
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, &c)| R::from_int(n - 1 - (l + j as i64)) * c)
                .collect();
            if out.len() > 1 {
                out.pop();
            }
            PolyExp {
                l: poly.l,
                coeffs: out,
            }
        }
    }
}

/// Integer coefficient run of the unnormalized ladder chain: starting from
/// c_l = 1, applies the raising recurrence (n - l - 1) times. The result
/// scaled by 1/sqrt((n+l)!(n-l-1)!) is the normalized phi_nl.
pub(crate) fn phi_coeffs_exact(n: u32, l: u32) -> Vec<BigInt> {
    let li = i64::from(l);
    let mut coeffs: Vec<BigInt> = vec![BigInt::one()];
    for m in (l + 1)..n {
        let mi = i64::from(m);
        let len = coeffs.len();
        let mut next: Vec<BigInt> = Vec::with_capacity(len + 1);
        for j in 0..=len {
            let k = li + j as i64;
            let mut v = BigInt::zero();
            if j < len {
                v += BigInt::from(k + mi + 1) * &coeffs[j];
            }
            if j > 0 {
                v -= &coeffs[j - 1];
            }
            next.push(v);
        }
        coeffs = next;
    }
    coeffs
}

pub(crate) fn big_to_f64(v: &BigInt) -> f64 {
    v.to_f64().expect("BigInt magnitude exceeds f64 range")
}

/// Normalized eigenfunction phi_nl built by the pure ladder recurrence.
///
/// The coefficient chain is carried in exact integer arithmetic and scaled
/// once at the end, so the stored doubles are correct to final rounding.
pub fn phi_nl<R: Real>(n: u32, l: u32) -> Result<PolyExp<R>> {
    crate::atom::QuantumNumbers::new(n, l)?;
    let exact = phi_coeffs_exact(n, l);
    let log_norm = -0.5
        * (log_factorial::<f64>(u64::from(n + l)) + log_factorial::<f64>(u64::from(n - l - 1)));
    let scale = log_norm.exp();
    let coeffs: Vec<R> = exact.iter().map(|c| R::of(big_to_f64(c) * scale)).collect();
    Ok(PolyExp { l, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atom::LadderSign::{Lower, Raise};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn ground_phi_closed_forms() {
        // l = 0: e^(-rho/2)
        let g0 = ground_phi::<f64>(0);
        assert_eq!(g0.coeffs().len(), 1);
        assert!(close(g0.coeff(0), 1.0, 1e-15));
        // l = 1: rho e^(-rho/2) / sqrt(6)
        let g1 = ground_phi::<f64>(1);
        assert!(close(g1.coeff(1), 1.0 / 6.0f64.sqrt(), 1e-15));
        // l = 2: rho^2 e^(-rho/2) / (2 sqrt(30))
        let g2 = ground_phi::<f64>(2);
        assert!(close(g2.coeff(2), 1.0 / (2.0 * 30.0f64.sqrt()), 1e-15));
    }

    #[test]
    fn raising_ground_matches_first_excited() {
        // raising the l=0 ground gives sqrt(2) * (2 - rho) e^(-rho/2) / sqrt(2)
        let image = apply_ladder(Raise, &ground_phi::<f64>(0));
        assert_eq!(image.n(), 2);
        let a = 2.0f64.sqrt();
        let phi20 = phi_nl::<f64>(2, 0).unwrap();
        for k in 0..2 {
            assert!(
                close(image.coeff(k), a * phi20.coeff(k), 1e-14),
                "k={k}: {} vs {}",
                image.coeff(k),
                a * phi20.coeff(k)
            );
        }
        // explicit closed form phi_20 = (2 - rho) e^(-rho/2) / sqrt(2)
        assert!(close(phi20.coeff(0), 2.0 / a, 1e-14));
        assert!(close(phi20.coeff(1), -1.0 / a, 1e-14));
    }

    #[test]
    fn lowering_ground_states_terminates() {
        for l in 0..4 {
            let image = apply_ladder(Lower, &ground_phi::<f64>(l));
            assert!(image.is_zero(), "l={l}");
        }
    }

    #[test]
    fn raising_p_ground_matches_golden() {
        // A_+ on phi_21 equals 2 * phi_31 with phi_31 = rho (4 - rho) e^(-rho/2) / (2 sqrt 6)
        let image = apply_ladder(Raise, &ground_phi::<f64>(1));
        let c = 2.0 * 6.0f64.sqrt();
        assert!(close(image.coeff(1), 2.0 * 4.0 / c, 1e-14));
        assert!(close(image.coeff(2), -2.0 / c, 1e-14));
    }

    #[test]
    fn degree_moves_by_exactly_one() {
        let phi = phi_nl::<f64>(5, 2).unwrap();
        assert_eq!(apply_ladder(Raise, &phi).n(), 6);
        assert_eq!(apply_ladder(Lower, &phi).n(), 4);
    }

    #[test]
    fn phi_30_closed_form() {
        // (3 - 3 rho + rho^2/2) e^(-rho/2) / sqrt(3)
        let phi = phi_nl::<f64>(3, 0).unwrap();
        let s = 1.0 / 3.0f64.sqrt();
        assert!(close(phi.coeff(0), 3.0 * s, 1e-14));
        assert!(close(phi.coeff(1), -3.0 * s, 1e-14));
        assert!(close(phi.coeff(2), 0.5 * s, 1e-14));
    }

    #[test]
    fn phi_31_closed_form() {
        let phi = phi_nl::<f64>(3, 1).unwrap();
        let c = 2.0 * 6.0f64.sqrt();
        assert!(close(phi.coeff(1), 4.0 / c, 1e-14));
        assert!(close(phi.coeff(2), -1.0 / c, 1e-14));
    }

    #[test]
    fn phi_10_is_ground() {
        let phi = phi_nl::<f64>(1, 0).unwrap();
        assert_eq!(phi.coeffs().len(), 1);
        assert!(close(phi.coeff(0), 1.0, 1e-15));
    }

    #[test]
    fn float_ladder_chain_agrees_with_exact_path() {
        // apply_ladder + eigenvalue divisions must reproduce phi_nl
        use crate::atom::{ladder_eigenvalue, LadderSign, QuantumNumbers};
        for (n, l) in [(4u32, 0u32), (6, 2), (9, 4)] {
            let mut phi = ground_phi::<f64>(l);
            for m in (l + 1)..n {
                let a = ladder_eigenvalue::<f64>(
                    LadderSign::Raise,
                    QuantumNumbers::new(m, l).unwrap(),
                );
                phi = apply_ladder(Raise, &phi).scaled(1.0 / a);
            }
            let exact = phi_nl::<f64>(n, l).unwrap();
            let max = exact.coeffs().iter().fold(0.0f64, |m, c| m.max(c.abs()));
            for k in l..n {
                assert!(
                    close(phi.coeff(k), exact.coeff(k), 1e-12 * max),
                    "(n,l)=({n},{l}) k={k}"
                );
            }
        }
    }

    #[test]
    fn boundary_decay_holds_across_supported_range() {
        for (n, l) in [(1u32, 0u32), (5, 0), (12, 6), (20, 0), (20, 19), (60, 30)] {
            let phi = phi_nl::<f64>(n, l).unwrap();
            assert!(phi.boundary_decay_ok(), "(n,l)=({n},{l})");
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        // oracle: central finite differences on a mid-range point
        let phi = phi_nl::<f64>(6, 1).unwrap();
        let rho = 3.7;
        let h = 1e-5;
        let (f, df, d2f) = phi.eval_derivatives(rho);
        assert_eq!(f, phi.eval(rho));
        let fd1 = (phi.eval(rho + h) - phi.eval(rho - h)) / (2.0 * h);
        let fd2 = (phi.eval(rho + h) - 2.0 * phi.eval(rho) + phi.eval(rho - h)) / (h * h);
        assert!(close(df, fd1, 1e-8), "{df} vs {fd1}");
        assert!(close(d2f, fd2, 1e-5), "{d2f} vs {fd2}");
    }

    #[test]
    fn rejects_empty_and_nonfinite() {
        assert!(PolyExp::<f64>::new(0, vec![]).is_err());
        assert!(PolyExp::new(0, vec![f64::NAN]).is_err());
        assert!(PolyExp::new(1, vec![1.0, 0.0]).is_err());
        assert!(PolyExp::new(1, vec![1.0, 1.0]).is_ok());
    }

    #[test]
    fn json_emission_shape() {
        let phi = phi_nl::<f64>(2, 0).unwrap();
        let json = phi.to_json();
        assert!(json.starts_with("{\"l\":0,\"n\":2,\"coeffs\":["));
        assert!(json.ends_with("]}"));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // lower(raise(phi)) = [n(n+1) - l(l+1)] phi: both recurrences in
            // one exact identity
            #[test]
            fn lower_after_raise_is_scalar(n in 1u32..24, l_frac in 0.0f64..1.0) {
                let l = ((f64::from(n) - 1.0) * l_frac) as u32;
                let phi = phi_nl::<f64>(n, l).unwrap();
                let round_trip = apply_ladder(Lower, &apply_ladder(Raise, &phi));
                let factor = f64::from(n * (n + 1) - l * (l + 1));
                let max = phi.coeffs().iter().fold(0.0f64, |m, c| m.max(c.abs()));
                for k in l..n {
                    prop_assert!(
                        (round_trip.coeff(k) - factor * phi.coeff(k)).abs()
                            <= 1e-12 * factor * max
                    );
                }
            }

            // raise(lower(phi)) = [n(n-1) - l(l+1)] phi on excited states
            #[test]
            fn raise_after_lower_is_scalar(n in 2u32..24, l_frac in 0.0f64..1.0) {
                let l = ((f64::from(n) - 2.0) * l_frac) as u32; // keep n > l+1
                let phi = phi_nl::<f64>(n, l).unwrap();
                let round_trip = apply_ladder(Raise, &apply_ladder(Lower, &phi));
                let factor = f64::from(n * (n - 1) - l * (l + 1));
                let max = phi.coeffs().iter().fold(0.0f64, |m, c| m.max(c.abs()));
                for k in l..n {
                    prop_assert!(
                        (round_trip.coeff(k) - factor * phi.coeff(k)).abs()
                            <= 1e-12 * factor.max(1.0) * max
                    );
                }
            }

            #[test]
            fn generated_states_decay_at_boundaries(n in 1u32..40, l_frac in 0.0f64..1.0) {
                let l = ((f64::from(n) - 1.0) * l_frac) as u32;
                let phi = phi_nl::<f64>(n, l).unwrap();
                prop_assert!(phi.boundary_decay_ok());
                prop_assert!(!phi.is_zero());
            }
        }
    }
}
