//! Coherent states of the fixed-l ladder: eigenvectors of the lowering
//! operator with complex eigenvalue z, their Fock-basis coefficients,
//! occupation statistics, uncertainty saturation, and radial profiles.

mod bessel;
mod table;

pub use bessel::{bessel_i, bessel_m};
pub use table::{
    compare_table, BesselMTable, TableComparison, TableRow, ABS_REL_SPLIT, TABLE_TOLERANCE,
};

use num_complex::Complex;

use crate::atom::{AtomConfig, QuantumNumbers};
use crate::error::{Error, Result};
use crate::numerics::log_factorial;
use crate::operators::{build_operator, OperatorKind, TruncatedBasis};
use crate::radial::{radial_wavefunction, RadialFunction};
use crate::scalar::Real;

/// Default dropped-tail probability mass for coefficient truncation.
pub const DEFAULT_TAIL_TOLERANCE: f64 = 1e-12;

const MAX_COEFFS: usize = 512;

/// A coherent state |z> on the fixed-l ladder, expanded over |n l> for
/// n = l+1 ..= n_cut with adaptively chosen cutoff.
#[derive(Debug, Clone)]
pub struct CoherentState<R: Real> {
    l: u32,
    z: Complex<R>,
    coeffs: Vec<Complex<R>>,
}

/// Expands |z> over the Fock basis: coefficients
/// `c_n = M_l(2|z|) z^(n-l-1) / sqrt((n+l)! (n-l-1)!)` with factorials in log
/// space, truncated once the dropped tail mass falls below `tolerance`.
pub fn coherent_state<R: Real>(l: u32, z: Complex<R>, tolerance: R) -> CoherentState<R> {
    let abs_z = z.norm();
    if abs_z == R::zero() {
        // vacuum case: exactly the ladder ground state
        return CoherentState {
            l,
            z,
            coeffs: vec![Complex::new(R::one(), R::zero())],
        };
    }
    let m = bessel_m(l, R::of(2.0) * abs_z);
    let theta = z.arg();
    let ln_abs_z = abs_z.ln();
    let two_l = u64::from(2 * l);
    let mut coeffs = Vec::new();
    let mut k = 0u64;
    loop {
        let magnitude = m
            * (R::from_uint(k) * ln_abs_z
                - R::of(0.5) * (log_factorial::<R>(k) + log_factorial::<R>(k + two_l + 1)))
            .exp();
        let phase = R::from_uint(k) * theta;
        coeffs.push(Complex::from_polar(magnitude, phase));
        // geometric tail bound once the term ratio has dropped below 1/2
        let kf = R::from_uint(k + 1);
        let ratio = (abs_z * abs_z) / (kf * R::from_uint(k + two_l + 2));
        if ratio < R::of(0.5) {
            let tail = magnitude * magnitude * ratio / (R::one() - ratio);
            if tail < tolerance * R::of(0.5) {
                break;
            }
        }
        k += 1;
        if coeffs.len() >= MAX_COEFFS {
            break;
        }
    }
    CoherentState { l, z, coeffs }
}

impl<R: Real> CoherentState<R> {
    /// Coherent state with the stock tail tolerance.
    pub fn new(l: u32, z: Complex<R>) -> Self {
        coherent_state(l, z, R::of(DEFAULT_TAIL_TOLERANCE))
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn z(&self) -> Complex<R> {
        self.z
    }

    /// Coefficients for n = l+1 ..= n_cut.
    pub fn coeffs(&self) -> &[Complex<R>] {
        &self.coeffs
    }

    /// Largest retained principal number.
    pub fn n_cut(&self) -> u32 {
        self.l + self.coeffs.len() as u32
    }

    /// Coefficient of |n l>, zero outside the retained window.
    pub fn coefficient(&self, n: u32) -> Complex<R> {
        if n < self.l + 1 || n > self.n_cut() {
            Complex::new(R::zero(), R::zero())
        } else {
            self.coeffs[(n - self.l - 1) as usize]
        }
    }

    /// sum |c_n|^2 over the retained window.
    pub fn norm_sqr(&self) -> R {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// sum n |c_n|^2: the occupation mean straight from the coefficients.
    pub fn occupation_mean_direct(&self) -> R {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| R::from_uint(u64::from(self.l) + 1 + i as u64) * c.norm_sqr())
            .sum()
    }

    /// Variance of n under |c_n|^2.
    pub fn occupation_variance(&self) -> R {
        let mean = self.occupation_mean_direct();
        let second: R = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let n = R::from_uint(u64::from(self.l) + 1 + i as u64);
                n * n * c.norm_sqr()
            })
            .sum();
        second - mean * mean
    }

    /// Residual of the defining eigenrelation A_minus |z> = z |z> applied
    /// through the truncated lowering matrix, measured on the retained block
    /// (the last row is excluded: truncation corrupts it by construction).
    pub fn eigen_residual(&self) -> Result<R> {
        let dim = self.coeffs.len().max(2);
        let basis = TruncatedBasis::new(self.l, self.l + dim as u32)?;
        let am = build_operator::<R>(OperatorKind::AMinus, basis)?;
        let mut v = self.coeffs.clone();
        v.resize(basis.dim(), Complex::new(R::zero(), R::zero()));
        let lowered = am.apply(&v)?;
        let mut worst = R::zero();
        for i in 0..v.len() - 1 {
            let d = lowered[i] - self.z * v[i];
            worst = worst.max(d.norm());
        }
        Ok(worst)
    }
}

/// Occupation-number mean from the closed series
/// `|M_l|^2 sum_k (k+l+1) |z|^(2k) / (k! (k+2l+1)!)`; equals
/// [`CoherentState::occupation_mean_direct`] up to the truncation tail.
pub fn mean_occupation<R: Real>(state: &CoherentState<R>) -> R {
    let l = state.l;
    let abs_z = state.z.norm();
    let m = bessel_m(l, R::of(2.0) * abs_z);
    let m2 = m * m;
    let z2 = abs_z * abs_z;
    let mut term = (-log_factorial::<R>(u64::from(2 * l + 1))).exp();
    let mut acc = term * R::from_uint(u64::from(l) + 1);
    for k in 0..MAX_COEFFS {
        let kf = R::from_uint(k as u64 + 1);
        let of = R::from_uint(k as u64 + 2 + u64::from(2 * l));
        term = term * z2 / (kf * of);
        let contribution = term * R::from_uint(k as u64 + 2 + u64::from(l));
        acc += contribution;
        if contribution < R::of(1e-18) * acc {
            break;
        }
    }
    m2 * acc
}

/// Coefficients of the displacement expansion
/// `D_l(z) |l+1, l> = M_l sqrt((2l+1)!) sum_k z^k / (k! (k+2l+1)!) A_+^k |l+1, l>`
/// computed with the truncated raising matrix; matches [`coherent_state`].
pub fn displacement_coefficients<R: Real>(l: u32, z: Complex<R>) -> Result<Vec<Complex<R>>> {
    let draft = coherent_state(l, z, R::of(1e-14));
    let terms = draft.coeffs.len() + 2;
    let basis = TruncatedBasis::new(l, l + terms as u32 + 2)?;
    let dim = basis.dim();
    let abs_z = z.norm();
    if abs_z == R::zero() {
        // only the k = 0 term survives: exact identity action on the ground
        let mut out = vec![Complex::new(R::zero(), R::zero()); dim];
        out[0] = Complex::new(R::one(), R::zero());
        return Ok(out);
    }
    let ap = build_operator::<R>(OperatorKind::APlus, basis)?;
    let theta = z.arg();
    let m = bessel_m(l, R::of(2.0) * abs_z);
    let half_log_ground = R::of(0.5) * log_factorial::<R>(u64::from(2 * l + 1));
    let zero = Complex::new(R::zero(), R::zero());

    let mut ladder_power = vec![zero; dim];
    ladder_power[0] = Complex::new(R::one(), R::zero());
    let mut acc = vec![zero; dim];
    for k in 0..terms {
        let k_u = k as u64;
        let coef_mag = m
            * (half_log_ground + R::from_uint(k_u) * abs_z.ln()
                - log_factorial::<R>(k_u)
                - log_factorial::<R>(k_u + u64::from(2 * l) + 1))
            .exp();
        let coef = Complex::from_polar(coef_mag, R::from_uint(k_u) * theta);
        for (a, v) in acc.iter_mut().zip(&ladder_power) {
            *a += coef * v;
        }
        ladder_power = ap.apply(&ladder_power)?;
    }
    Ok(acc)
}

/// Uncertainties of the symmetric pair (q, p) on a state vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyTriple<R: Real> {
    pub sigma_q: R,
    pub sigma_p: R,
    pub product: R,
}

/// sigma_q, sigma_p and their product on the coherent state, evaluated
/// through the truncated operator matrices with two levels of headroom.
/// Coherent states saturate the bound: both variances equal the occupation
/// mean.
pub fn coherent_uncertainty<R: Real>(state: &CoherentState<R>) -> Result<UncertaintyTriple<R>> {
    let basis = TruncatedBasis::new(state.l, state.n_cut() + 2)?;
    let q = build_operator::<R>(OperatorKind::Q, basis)?;
    let p = build_operator::<R>(OperatorKind::P, basis)?;
    let dim = basis.dim();
    let mut v = state.coeffs.clone();
    v.resize(dim, Complex::new(R::zero(), R::zero()));

    let variance = |op: &crate::operators::OperatorMatrix<R>| -> Result<R> {
        let applied = op.apply(&v)?;
        // Hermitian operator: <op^2> = |op v|^2, <op> = Re(v . op v)
        let mean: R = v
            .iter()
            .zip(&applied)
            .map(|(a, b)| (a.conj() * b).re)
            .sum();
        let second: R = applied.iter().map(|c| c.norm_sqr()).sum();
        Ok(second - mean * mean)
    };
    let var_q = variance(&q)?;
    let var_p = variance(&p)?;
    let sigma_q = var_q.max(R::zero()).sqrt();
    let sigma_p = var_p.max(R::zero()).sqrt();
    Ok(UncertaintyTriple {
        sigma_q,
        sigma_p,
        product: sigma_q * sigma_p,
    })
}

/// Overlap <a|b> of two coherent states on the same ladder; never zero.
pub fn coherent_overlap<R: Real>(
    a: &CoherentState<R>,
    b: &CoherentState<R>,
) -> Result<Complex<R>> {
    if a.l != b.l {
        return Err(Error::InvalidConfig(
            "coherent overlap requires states on the same l ladder".into(),
        ));
    }
    let mut acc = Complex::new(R::zero(), R::zero());
    for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
        acc += x.conj() * y;
    }
    Ok(acc)
}

/// Radial profile of a coherent state: R(z, r) = sum_n c_n R_nl(r), with the
/// radial functions cached at construction.
#[derive(Debug, Clone)]
pub struct CoherentRadial<R: Real> {
    state: CoherentState<R>,
    cfg: AtomConfig<R>,
    radials: Vec<RadialFunction<R>>,
}

impl<R: Real> CoherentRadial<R> {
    pub fn new(state: CoherentState<R>, cfg: &AtomConfig<R>) -> Result<Self> {
        let l = state.l();
        let radials: Result<Vec<_>> = (0..state.coeffs().len())
            .map(|i| radial_wavefunction(QuantumNumbers::new(l + 1 + i as u32, l)?, cfg))
            .collect();
        Ok(Self {
            state,
            cfg: *cfg,
            radials: radials?,
        })
    }

    pub fn state(&self) -> &CoherentState<R> {
        &self.state
    }

    /// R(z, r).
    pub fn eval(&self, r: R) -> Complex<R> {
        let mut acc = Complex::new(R::zero(), R::zero());
        for (c, rf) in self.state.coeffs().iter().zip(&self.radials) {
            acc += *c * rf.eval(r);
        }
        acc
    }

    /// Scan cutoff covering the slowest-decaying retained component.
    pub fn density_cutoff(&self) -> R {
        let n = R::from_uint(u64::from(self.state.n_cut()));
        R::of(40.0) * n * n * self.cfg.bohr_radius() / R::from_uint(u64::from(self.cfg.z()))
    }

    /// Decay rate of |R(z, r)|^2 far out (set by the slowest component).
    pub fn density_decay_rate(&self) -> R {
        R::of(2.0) * R::from_uint(u64::from(self.cfg.z()))
            / (R::from_uint(u64::from(self.state.n_cut())) * self.cfg.bohr_radius())
    }
}

/// Convenience single-point evaluation of R(z, r); builds the radial stack on
/// every call, so hot loops should hold a [`CoherentRadial`] instead.
pub fn coherent_radial<R: Real>(
    state: &CoherentState<R>,
    cfg: &AtomConfig<R>,
    r: R,
) -> Result<Complex<R>> {
    Ok(CoherentRadial::new(state.clone(), cfg)?.eval(r))
}
