//! Radial wavefunctions R_nl(r): ladder-generated representation, closed-form
//! cross-check, moments, probability densities, and full spatial assembly.

mod harmonics;
mod oracle;
mod polyexp;

pub use harmonics::{assemble_psi, spherical_harmonic, SpatialWaveFunction, SpinProjection};
pub use oracle::{laguerre_rodrigues_coeffs, phi_oracle};
pub use polyexp::{apply_ladder, ground_phi, phi_nl, PolyExp};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::atom::{rho_of_r, xi_scale, AtomConfig, QuantumNumbers};
use crate::error::{Error, Result};
use crate::numerics::{integrate_to_cutoff, QuadratureSpec};
use crate::scalar::Real;

/// Number of sample points used by the density grid scans.
const DENSITY_GRID_POINTS: usize = 20_000;

/// A normalized radial wavefunction R_nl(r) = xi_n phi_nl(rho(r)).
#[derive(Debug, Clone)]
pub struct RadialFunction<R: Real> {
    qn: QuantumNumbers,
    cfg: AtomConfig<R>,
    poly: PolyExp<R>,
    scale: R,
}

/// Builds R_nl for validated quantum numbers; normalized under r^2 dr.
pub fn radial_wavefunction<R: Real>(qn: QuantumNumbers, cfg: &AtomConfig<R>) -> Result<RadialFunction<R>> {
    let poly = phi_nl::<R>(qn.n(), qn.l())?;
    Ok(RadialFunction {
        qn,
        cfg: *cfg,
        poly,
        scale: xi_scale(qn.n(), cfg),
    })
}

impl<R: Real> RadialFunction<R> {
    pub fn qn(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn cfg(&self) -> &AtomConfig<R> {
        &self.cfg
    }

    /// The rho-space factor phi_nl.
    pub fn poly(&self) -> &PolyExp<R> {
        &self.poly
    }

    /// xi_n basis-change coefficient.
    pub fn scale(&self) -> R {
        self.scale
    }

    /// R(r).
    pub fn eval(&self, r: R) -> R {
        self.scale * self.poly.eval(rho_of_r(r, self.qn.n(), &self.cfg))
    }

    /// Radial probability density p(r) = r^2 R(r)^2.
    pub fn probability_density(&self, r: R) -> R {
        let v = self.eval(r);
        r * r * v * v
    }

    /// Exponential decay rate of R^2: 2Z / (n a0).
    pub fn density_decay_rate(&self) -> R {
        R::of(2.0) * R::from_uint(u64::from(self.cfg.z()))
            / (R::from_uint(u64::from(self.qn.n())) * self.cfg.bohr_radius())
    }

    /// Conventional scan cutoff 40 n^2 a0 / Z; the density beyond it is
    /// negligible for every supported n.
    pub fn density_cutoff(&self) -> R {
        let n = R::from_uint(u64::from(self.qn.n()));
        R::of(40.0) * n * n * self.cfg.bohr_radius() / R::from_uint(u64::from(self.cfg.z()))
    }

    /// Quadrature value of the normalization integral over r^2 dr.
    pub fn norm_squared(&self, spec: &QuadratureSpec<R>) -> Result<R> {
        let cutoff = self.density_cutoff();
        let rate = self.density_decay_rate();
        Ok(integrate_to_cutoff(|r| self.probability_density(r), R::zero(), cutoff, rate, spec)?
            .value)
    }
}

/// Sign of d/drho of the density in rho coordinates, as a polynomial factor:
/// for rho > 0, sign(dp/drho) = sign(P (P + rho P' - rho P / 2)).
fn density_slope_factor<R: Real>(poly: &PolyExp<R>, rho: R) -> R {
    let (p, dp, _) = poly.eval_poly_derivatives(rho);
    p * (p + rho * dp - rho * p * R::of(0.5))
}

/// Number of bulges (strict local maxima) of p(r), counted from the sign
/// changes of the analytic derivative on a dense rho grid.
pub fn bulge_count<R: Real>(rf: &RadialFunction<R>) -> usize {
    let rho_cut = rho_of_r(rf.density_cutoff(), rf.qn.n(), &rf.cfg);
    let steps = DENSITY_GRID_POINTS;
    let h = rho_cut / R::from_uint(steps as u64);
    let mut count = 0;
    let mut prev = density_slope_factor(&rf.poly, h);
    for i in 2..=steps {
        let here = density_slope_factor(&rf.poly, h * R::from_uint(i as u64));
        if prev > R::zero() && here < R::zero() {
            count += 1;
        }
        if here != R::zero() {
            prev = here;
        }
    }
    count
}

/// Cross-check count: strict local maxima of p on the same grid.
pub fn bulge_count_grid<R: Real>(rf: &RadialFunction<R>) -> usize {
    let cutoff = rf.density_cutoff();
    let steps = DENSITY_GRID_POINTS;
    let h = cutoff / R::from_uint(steps as u64);
    let p = |i: usize| rf.probability_density(h * R::from_uint(i as u64));
    let mut count = 0;
    let mut prev = p(0);
    let mut here = p(1);
    for i in 2..=steps {
        let next = p(i);
        if here > prev && here > next {
            count += 1;
        }
        prev = here;
        here = next;
    }
    count
}

/// Location (in r) of the global maximum of p(r), refined by bisection on the
/// analytic derivative factor.
pub fn density_mode<R: Real>(rf: &RadialFunction<R>) -> R {
    let n = rf.qn.n();
    let rho_cut = rho_of_r(rf.density_cutoff(), n, &rf.cfg);
    let steps = DENSITY_GRID_POINTS;
    let h = rho_cut / R::from_uint(steps as u64);
    let mut best_rho = h;
    let mut best_p = R::neg_infinity();
    let mut prev_rho = h;
    let mut prev = density_slope_factor(&rf.poly, prev_rho);
    for i in 2..=steps {
        let rho = h * R::from_uint(i as u64);
        let here = density_slope_factor(&rf.poly, rho);
        if prev > R::zero() && here < R::zero() {
            let root = bisect_slope(&rf.poly, prev_rho, rho);
            let p_here = {
                let phi = rf.poly.eval(root);
                root * root * phi * phi
            };
            if p_here > best_p {
                best_p = p_here;
                best_rho = root;
            }
        }
        if here != R::zero() {
            prev = here;
            prev_rho = rho;
        }
    }
    crate::atom::r_of_rho(best_rho, n, &rf.cfg)
}

fn bisect_slope<R: Real>(poly: &PolyExp<R>, mut lo: R, mut hi: R) -> R {
    for _ in 0..200 {
        let mid = (lo + hi) * R::of(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        if density_slope_factor(poly, mid) > R::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) * R::of(0.5)
}

/// Ratio of two big integers as f64, robust to magnitudes beyond f64 range.
fn big_ratio<R: Real>(num: &BigInt, den: &BigInt) -> R {
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift_n = (nb - 800).max(0) as u64;
    let shift_d = (db - 800).max(0) as u64;
    let n = polyexp_big_to_f64(&(num >> shift_n));
    let d = polyexp_big_to_f64(&(den >> shift_d));
    R::of(n / d * ((shift_n as f64) - (shift_d as f64)).exp2())
}

fn polyexp_big_to_f64(v: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().expect("shifted BigInt fits f64")
}

/// Expectation value <r^k> on |n l>, computed analytically from term-wise
/// Gamma integrals on the exact integer coefficient run.
///
/// Exact up to one final floating division; integer k >= -2 always converges,
/// and more negative k is accepted whenever 2 + k + 2l >= 0.
pub fn moment<R: Real>(qn: QuantumNumbers, k: i32, cfg: &AtomConfig<R>) -> Result<R> {
    let (n, l) = (qn.n(), qn.l());
    let min_power = 2 + k + 2 * l as i32;
    if min_power < 0 {
        return Err(Error::DivergentMoment { k, l });
    }
    let coeffs = polyexp::phi_coeffs_exact(n, l);
    // density coefficient convolution: power 2l + u
    let deg = coeffs.len();
    let mut density = vec![BigInt::zero(); 2 * deg - 1];
    for (i, a) in coeffs.iter().enumerate() {
        for (j, b) in coeffs.iter().enumerate() {
            density[i + j] += a * b;
        }
    }
    // S = sum_u D_u (2 + k + 2l + u)!
    let mut s = BigInt::zero();
    let mut factorial = BigInt::from(1);
    for i in 2..=u64::try_from(min_power).unwrap() {
        factorial *= i;
    }
    for (u, d) in density.iter().enumerate() {
        if u > 0 {
            factorial *= min_power as u64 + u as u64;
        }
        s += d * &factorial;
    }
    let mut denom = BigInt::from(2 * u64::from(n));
    for i in 2..=u64::from(n + l) {
        denom *= i;
    }
    for i in 2..=u64::from(n - l - 1) {
        denom *= i;
    }
    let beta = R::of(2.0) * R::from_uint(u64::from(cfg.z()))
        / (R::from_uint(u64::from(n)) * cfg.bohr_radius());
    Ok(big_ratio::<R>(&s, &denom) * beta.powi(-k))
}

/// Quadrature cross-check for [`moment`].
pub fn moment_quadrature<R: Real>(
    qn: QuantumNumbers,
    k: i32,
    cfg: &AtomConfig<R>,
    spec: &QuadratureSpec<R>,
) -> Result<R> {
    let min_power = 2 + k + 2 * qn.l() as i32;
    if min_power < 0 {
        return Err(Error::DivergentMoment { k, l: qn.l() });
    }
    let rf = radial_wavefunction(qn, cfg)?;
    let cutoff = rf.density_cutoff();
    let rate = rf.density_decay_rate();
    let est = integrate_to_cutoff(
        |r| {
            if r <= R::zero() {
                R::zero()
            } else {
                let v = rf.eval(r);
                r.powi(2 + k) * v * v
            }
        },
        R::zero(),
        cutoff,
        rate,
        spec,
    )?;
    Ok(est.value)
}
