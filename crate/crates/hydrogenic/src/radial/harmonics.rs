//! Orthonormal spherical harmonics and full spatial wavefunction assembly.

use num_complex::Complex;

use crate::atom::{AtomConfig, QuantumNumbers};
use crate::error::{Error, Result};
use crate::radial::{radial_wavefunction, RadialFunction};
use crate::scalar::Real;

/// Fully normalized associated Legendre value, Condon-Shortley phase
/// included, by the standard diagonal-then-upward recurrence (no factorial
/// overflow at any l).
fn normalized_legendre<R: Real>(l: u32, m: u32, x: R) -> R {
    debug_assert!(m <= l);
    let one = R::one();
    let four_pi = R::of(4.0) * R::PI();
    let sin_theta = (one - x * x).max(R::zero()).sqrt();
    // P~_m^m
    let mut pmm = (one / four_pi).sqrt();
    for k in 1..=m {
        let kf = R::from_uint(u64::from(k));
        pmm = -((R::of(2.0) * kf + one) / (R::of(2.0) * kf)).sqrt() * sin_theta * pmm;
    }
    if l == m {
        return pmm;
    }
    // P~_{m+1}^m
    let mut p_prev = pmm;
    let mut p = x * (R::of(2.0) * R::from_uint(u64::from(m)) + R::of(3.0)).sqrt() * pmm;
    if l == m + 1 {
        return p;
    }
    for ll in (m + 2)..=l {
        let lf = R::from_uint(u64::from(ll));
        let mf = R::from_uint(u64::from(m));
        let a = ((R::of(4.0) * lf * lf - one) / (lf * lf - mf * mf)).sqrt();
        let prev_lf = lf - one;
        let b = ((prev_lf * prev_lf - mf * mf) / (R::of(4.0) * prev_lf * prev_lf - one)).sqrt();
        let next = a * (x * p - b * p_prev);
        p_prev = p;
        p = next;
    }
    p
}

/// Orthonormal Y_lm(theta, phi); requires |m| <= l.
pub fn spherical_harmonic<R: Real>(
    l: u32,
    m: i32,
    theta: R,
    phi: R,
) -> Result<Complex<R>> {
    if m.unsigned_abs() > l {
        return Err(Error::InvalidHarmonicOrder { l, m });
    }
    let mu = m.unsigned_abs();
    let p = normalized_legendre(l, mu, theta.cos());
    let phase = R::from_int(i64::from(m)) * phi;
    let value = Complex::new(p * phase.cos(), p * phase.sin());
    if m < 0 && mu % 2 == 1 {
        // Y_{l,-m} = (-1)^m conj(Y_{l,m}); the conjugate is already encoded
        // in the phase sign, leaving only the parity factor.
        Ok(-value)
    } else {
        Ok(value)
    }
}

/// Spin projection label carried inertly on assembled states (s = 1/2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinProjection {
    Up,
    Down,
}

impl SpinProjection {
    /// m_s value of the label.
    pub fn m_s<R: Real>(&self) -> R {
        match self {
            SpinProjection::Up => R::of(0.5),
            SpinProjection::Down => R::of(-0.5),
        }
    }
}

/// psi_{n l m}(r, theta, phi) = R_nl(r) Y_lm(theta, phi), with an optional
/// inert spin label.
#[derive(Debug, Clone)]
pub struct SpatialWaveFunction<R: Real> {
    radial: RadialFunction<R>,
    m: i32,
    spin: Option<SpinProjection>,
}

/// Assembles the full spatial wavefunction for validated (n, l, m).
pub fn assemble_psi<R: Real>(
    n: u32,
    l: u32,
    m: i32,
    cfg: &AtomConfig<R>,
) -> Result<SpatialWaveFunction<R>> {
    if m.unsigned_abs() > l {
        return Err(Error::InvalidHarmonicOrder { l, m });
    }
    let qn = QuantumNumbers::new(n, l)?;
    Ok(SpatialWaveFunction {
        radial: radial_wavefunction(qn, cfg)?,
        m,
        spin: None,
    })
}

impl<R: Real> SpatialWaveFunction<R> {
    pub fn qn(&self) -> QuantumNumbers {
        self.radial.qn()
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    pub fn radial(&self) -> &RadialFunction<R> {
        &self.radial
    }

    pub fn spin(&self) -> Option<SpinProjection> {
        self.spin
    }

    /// Attaches the inert (s = 1/2, m_s) label.
    pub fn with_spin(mut self, spin: SpinProjection) -> Self {
        self.spin = Some(spin);
        self
    }

    /// psi(r, theta, phi).
    pub fn eval(&self, r: R, theta: R, phi: R) -> Complex<R> {
        let y = spherical_harmonic(self.qn().l(), self.m, theta, phi)
            .expect("orders validated at construction");
        y * self.radial.eval(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{integrate, QuadratureSpec};

    #[test]
    fn y00_is_inverse_sqrt_four_pi() {
        let y = spherical_harmonic::<f64>(0, 0, 0.7, 1.3).unwrap();
        let expected = 1.0 / (4.0 * std::f64::consts::PI).sqrt();
        assert!((y.re - expected).abs() <= 1e-15);
        assert!(y.im.abs() <= 1e-15);
    }

    #[test]
    fn y10_and_y11_closed_forms() {
        let theta = 0.9_f64;
        let phi = 0.4_f64;
        let y10 = spherical_harmonic::<f64>(1, 0, theta, phi).unwrap();
        let expected10 = (3.0 / (4.0 * std::f64::consts::PI)).sqrt() * theta.cos();
        assert!((y10.re - expected10).abs() <= 1e-14);
        let y11 = spherical_harmonic::<f64>(1, 1, theta, phi).unwrap();
        let mag = (3.0 / (8.0 * std::f64::consts::PI)).sqrt() * theta.sin();
        assert!((y11.re + mag * phi.cos()).abs() <= 1e-14);
        assert!((y11.im + mag * phi.sin()).abs() <= 1e-14);
    }

    #[test]
    fn negative_m_parity_relation() {
        let theta = 1.1_f64;
        let phi = 2.0_f64;
        for l in 1..=4u32 {
            for m in 1..=l {
                let plus = spherical_harmonic::<f64>(l, m as i32, theta, phi).unwrap();
                let minus = spherical_harmonic::<f64>(l, -(m as i32), theta, phi).unwrap();
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let expected = plus.conj() * sign;
                assert!((minus - expected).norm() <= 1e-14, "l={l} m={m}");
            }
        }
    }

    #[test]
    fn harmonics_normalized_under_solid_angle() {
        // oracle: 2-D quadrature over the sphere
        let spec = QuadratureSpec::<f64>::default();
        for l in 0..=4u32 {
            for m in -(l as i32)..=(l as i32) {
                let inner = integrate(
                    |theta: f64| {
                        let ring = integrate(
                            |phi: f64| {
                                spherical_harmonic::<f64>(l, m, theta, phi).unwrap().norm_sqr()
                            },
                            0.0,
                            2.0 * std::f64::consts::PI,
                            &spec,
                        )
                        .unwrap()
                        .value;
                        ring * theta.sin()
                    },
                    0.0,
                    std::f64::consts::PI,
                    &spec,
                )
                .unwrap()
                .value;
                assert!((inner - 1.0).abs() <= 1e-8, "l={l} m={m}: {inner}");
            }
        }
    }

    #[test]
    fn invalid_orders_rejected() {
        assert!(spherical_harmonic::<f64>(1, 2, 0.0, 0.0).is_err());
        assert!(assemble_psi::<f64>(2, 1, -2, &AtomConfig::paper(1).unwrap()).is_err());
    }

    #[test]
    fn psi_100_is_product_of_factors() {
        let cfg = AtomConfig::<f64>::paper(1).unwrap().with_bohr_radius(1.0).unwrap();
        let psi = assemble_psi::<f64>(1, 0, 0, &cfg).unwrap();
        let v = psi.eval(0.8, 0.3, 2.2);
        let expected = 2.0 * (-0.8f64).exp() / (4.0 * std::f64::consts::PI).sqrt();
        assert!((v.re - expected).abs() <= 1e-14);
        assert!(v.im.abs() <= 1e-16);
    }

    #[test]
    fn spin_label_is_inert_metadata() {
        let cfg = AtomConfig::<f64>::paper(1).unwrap();
        let bare = assemble_psi::<f64>(2, 1, 1, &cfg).unwrap();
        let labeled = bare.clone().with_spin(SpinProjection::Down);
        assert_eq!(labeled.spin(), Some(SpinProjection::Down));
        assert_eq!(labeled.spin().unwrap().m_s::<f64>(), -0.5);
        let (r, t, p) = (1.3, 0.4, 5.0);
        assert_eq!(bare.eval(r, t, p), labeled.eval(r, t, p));
    }
}
