//! Physical parameters, quantum-number bookkeeping, the bound energy
//! spectrum, and ladder eigenvalues. Everything downstream consumes this
//! scalar layer.
//!
//! Internal algebra is carried out in dimensionless coordinates (hbar = 1,
//! lengths in units of the Bohr radius); eV and nm appear only at the API
//! boundary through [`AtomConfig`].

use crate::error::{Error, Result};
use crate::scalar::Real;

/// hbar * c in eV nm (CODATA 2018).
pub const HBAR_C_EV_NM: f64 = 197.326_980_4;

/// Electron rest energy m_e c^2 in eV (CODATA 2018).
pub const ELECTRON_REST_ENERGY_EV: f64 = 510_998.95;

/// CODATA 2018 fine-structure constant.
pub const ALPHA_CODATA: f64 = 7.297_352_569_3e-3;

/// A validated (n, l) pair indexing the basis state |n l>.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    n: u32,
    l: u32,
}

impl QuantumNumbers {
    /// Requires n >= 1 and n >= l + 1.
    pub fn new(n: u32, l: u32) -> Result<Self> {
        if n == 0 || n < l + 1 {
            return Err(Error::InvalidQuantumNumbers { n, l });
        }
        Ok(Self { n, l })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Radial quantum number n_r = n - l - 1 (the number of radial nodes).
    pub fn radial_nodes(&self) -> u32 {
        self.n - self.l - 1
    }

    /// True for the lowest rung |l+1, l> of the fixed-l ladder.
    pub fn is_ladder_ground(&self) -> bool {
        self.n == self.l + 1
    }
}

/// Which constants seed an [`AtomConfig`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantsMode {
    /// alpha = 1/137 exactly, electron rest energy for the reduced mass.
    Paper,
    /// CODATA 2018 alpha.
    Codata,
}

/// Physical parameters of a hydrogen-like atom (one electron bound to a
/// charge +Ze) plus the unit choices derived from them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomConfig<R: Real> {
    z: u32,
    mu_c2: R,
    alpha: R,
    a0: R,
    mode: ConstantsMode,
}

impl<R: Real> AtomConfig<R> {
    /// Config with alpha = 1/137 and the electron rest energy; the Bohr
    /// radius is derived in nm.
    pub fn paper(z: u32) -> Result<Self> {
        let alpha = R::one() / R::of(137.0);
        Self::from_parts(z, R::of(ELECTRON_REST_ENERGY_EV), alpha, ConstantsMode::Paper)
    }

    /// Config with the CODATA 2018 fine-structure constant.
    pub fn codata(z: u32) -> Result<Self> {
        Self::from_parts(
            z,
            R::of(ELECTRON_REST_ENERGY_EV),
            R::of(ALPHA_CODATA),
            ConstantsMode::Codata,
        )
    }

    /// Custom reduced-mass rest energy (eV) and fine-structure constant.
    pub fn from_parts(z: u32, mu_c2: R, alpha: R, mode: ConstantsMode) -> Result<Self> {
        if z == 0 {
            return Err(Error::InvalidConfig("nuclear charge Z must be >= 1".into()));
        }
        if !mu_c2.is_finite() || mu_c2 <= R::zero() {
            return Err(Error::InvalidConfig(
                "reduced-mass rest energy must be positive".into(),
            ));
        }
        if !alpha.is_finite() || alpha <= R::zero() || alpha >= R::one() {
            return Err(Error::InvalidConfig(
                "fine-structure constant must lie in (0, 1)".into(),
            ));
        }
        let a0 = R::of(HBAR_C_EV_NM) / (mu_c2 * alpha);
        Ok(Self {
            z,
            mu_c2,
            alpha,
            a0,
            mode,
        })
    }

    /// Overrides the Bohr radius; pass 1 to work in internal (a0 = 1) units.
    pub fn with_bohr_radius(mut self, a0: R) -> Result<Self> {
        if !a0.is_finite() || a0 <= R::zero() {
            return Err(Error::InvalidConfig("Bohr radius must be positive".into()));
        }
        self.a0 = a0;
        Ok(self)
    }

    pub fn z(&self) -> u32 {
        self.z
    }

    /// Reduced-mass rest energy in eV.
    pub fn mu_c2(&self) -> R {
        self.mu_c2
    }

    pub fn alpha(&self) -> R {
        self.alpha
    }

    /// Bohr radius in the configured length unit (nm unless overridden).
    pub fn bohr_radius(&self) -> R {
        self.a0
    }

    pub fn mode(&self) -> ConstantsMode {
        self.mode
    }
}

/// Bound-level energy E_n = -(1/2) mu c^2 (Z alpha)^2 / n^2 in eV.
///
/// Negative, independent of l, and strictly increasing toward 0 with n.
pub fn energy_level<R: Real>(qn: QuantumNumbers, cfg: &AtomConfig<R>) -> R {
    let z_alpha = R::from_uint(u64::from(cfg.z)) * cfg.alpha;
    let n = R::from_uint(u64::from(qn.n));
    -R::of(0.5) * cfg.mu_c2 * z_alpha * z_alpha / (n * n)
}

/// Number of states sharing E_n, spin included: 2 n^2.
pub fn degeneracy(n: u32) -> u32 {
    2 * n * n
}

/// Ladder direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderSign {
    /// A_plus: |n l> -> |n+1 l>.
    Raise,
    /// A_minus: |n l> -> |n-1 l>.
    Lower,
}

/// Integer radicand n(n +- 1) - l(l+1) in its factored form
/// (n -+ l)(n +- l +- 1); exact in integer arithmetic.
pub fn ladder_radicand(sign: LadderSign, n: u32, l: u32) -> i64 {
    let n = i64::from(n);
    let l = i64::from(l);
    match sign {
        LadderSign::Raise => (n - l) * (n + l + 1),
        LadderSign::Lower => (n + l) * (n - l - 1),
    }
}

/// Ladder eigenvalue sqrt(n(n +- 1) - l(l+1)) on a validated |n l>.
///
/// The Lower value on a ladder ground state |l+1, l> is exactly 0.
pub fn ladder_eigenvalue<R: Real>(sign: LadderSign, qn: QuantumNumbers) -> R {
    R::from_int(ladder_radicand(sign, qn.n, qn.l)).sqrt()
}

/// Checked variant guarding raw (possibly corrupted) integers; reports a
/// domain error when the radicand is negative.
pub fn ladder_eigenvalue_checked<R: Real>(sign: LadderSign, n: u32, l: u32) -> Result<R> {
    let radicand = ladder_radicand(sign, n, l);
    if radicand < 0 {
        return Err(Error::NegativeRadicand { n, l, radicand });
    }
    Ok(R::from_int(radicand).sqrt())
}

/// Dimensionless radial coordinate rho = (2Z / (n a0)) r.
pub fn rho_of_r<R: Real>(r: R, n: u32, cfg: &AtomConfig<R>) -> R {
    r * rho_scale_factor(n, cfg)
}

/// Inverse map r = (n a0 / 2Z) rho.
pub fn r_of_rho<R: Real>(rho: R, n: u32, cfg: &AtomConfig<R>) -> R {
    rho / rho_scale_factor(n, cfg)
}

fn rho_scale_factor<R: Real>(n: u32, cfg: &AtomConfig<R>) -> R {
    R::of(2.0) * R::from_uint(u64::from(cfg.z)) / (R::from_uint(u64::from(n)) * cfg.a0)
}

/// A rho value tagged with the scale context it was produced under.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledCoordinate<R: Real> {
    rho: R,
    n_context: u32,
    z: u32,
    a0: R,
}

impl<R: Real> ScaledCoordinate<R> {
    pub fn from_r(r: R, n: u32, cfg: &AtomConfig<R>) -> Self {
        Self {
            rho: rho_of_r(r, n, cfg),
            n_context: n,
            z: cfg.z,
            a0: cfg.a0,
        }
    }

    pub fn rho(&self) -> R {
        self.rho
    }

    pub fn n_context(&self) -> u32 {
        self.n_context
    }

    /// Maps back to the physical radius.
    pub fn r(&self) -> R {
        self.rho * R::from_uint(u64::from(self.n_context)) * self.a0
            / (R::of(2.0) * R::from_uint(u64::from(self.z)))
    }
}

/// Basis-change coefficient xi_n = (1/sqrt(2n)) (2Z/(n a0))^(3/2), evaluated
/// in log space so large n cannot overflow the power.
pub fn xi_scale<R: Real>(n: u32, cfg: &AtomConfig<R>) -> R {
    let nf = R::from_uint(u64::from(n));
    let base = rho_scale_factor(n, cfg);
    (R::of(1.5) * base.ln() - R::of(0.5) * (R::of(2.0) * nf).ln()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qn(n: u32, l: u32) -> QuantumNumbers {
        QuantumNumbers::new(n, l).unwrap()
    }

    #[test]
    fn quantum_number_validation() {
        assert!(QuantumNumbers::new(0, 0).is_err());
        assert!(QuantumNumbers::new(1, 1).is_err());
        assert!(QuantumNumbers::new(3, 2).is_ok());
        assert_eq!(qn(4, 1).radial_nodes(), 2);
        assert!(qn(3, 2).is_ladder_ground());
    }

    #[test]
    fn config_validation() {
        assert!(AtomConfig::<f64>::paper(0).is_err());
        assert!(AtomConfig::<f64>::from_parts(1, -1.0, 0.5, ConstantsMode::Paper).is_err());
        assert!(AtomConfig::<f64>::from_parts(1, 1.0, 1.5, ConstantsMode::Paper).is_err());
        let cfg = AtomConfig::<f64>::paper(1).unwrap();
        // derived Bohr radius lands near the physical 0.0529 nm
        assert!((cfg.bohr_radius() - 0.0529).abs() < 3e-4);
    }

    #[test]
    fn ground_state_energy_paper_constants() {
        let cfg = AtomConfig::<f64>::paper(1).unwrap();
        let e1 = energy_level(qn(1, 0), &cfg);
        assert!((e1 - (-13.6)).abs() < 0.1, "E1 = {e1}");
    }

    #[test]
    fn energy_scales_as_inverse_n_squared() {
        let cfg = AtomConfig::<f64>::paper(1).unwrap();
        let e1 = energy_level(qn(1, 0), &cfg);
        let e2 = energy_level(qn(2, 0), &cfg);
        assert_eq!(e2, e1 / 4.0);
    }

    #[test]
    fn energy_z_scaling_against_direct_evaluation() {
        // oracle: direct evaluation of the closed form for (n=3, Z=2)
        let cfg1 = AtomConfig::<f64>::paper(1).unwrap();
        let cfg2 = AtomConfig::<f64>::paper(2).unwrap();
        let direct = -0.5 * cfg2.mu_c2() * (2.0 * cfg2.alpha()).powi(2) / 9.0;
        let got = energy_level(qn(3, 1), &cfg2);
        assert!((got - direct).abs() <= 1e-12 * direct.abs());
        let e1 = energy_level(qn(1, 0), &cfg1);
        assert!((got - 4.0 / 9.0 * e1).abs() <= 1e-12 * e1.abs());
    }

    #[test]
    fn energy_independent_of_l() {
        let cfg = AtomConfig::<f64>::codata(3).unwrap();
        let base = energy_level(qn(5, 0), &cfg);
        for l in 1..5 {
            assert_eq!(energy_level(qn(5, l), &cfg), base);
        }
    }

    #[test]
    fn degeneracy_matches_brute_force_count() {
        // oracle: enumerate (l, m_l, m_s) tuples
        for n in 1..=10u32 {
            let mut count = 0u32;
            for l in 0..n {
                let m_l_values = 2 * l + 1;
                count += 2 * m_l_values; // two spin projections
            }
            assert_eq!(degeneracy(n), count, "n = {n}");
        }
        assert_eq!(degeneracy(1), 2);
        assert_eq!(degeneracy(2), 8);
        assert_eq!(degeneracy(3), 18);
    }

    #[test]
    fn ladder_eigenvalue_goldens() {
        let sqrt2 = 2.0_f64.sqrt();
        assert!((ladder_eigenvalue::<f64>(LadderSign::Raise, qn(1, 0)) - sqrt2).abs() <= 1e-15);
        assert_eq!(ladder_eigenvalue::<f64>(LadderSign::Lower, qn(1, 0)), 0.0);
        assert_eq!(ladder_eigenvalue::<f64>(LadderSign::Lower, qn(4, 3)), 0.0);
        assert_eq!(ladder_eigenvalue::<f64>(LadderSign::Raise, qn(2, 1)), 2.0);
    }

    #[test]
    fn ladder_radicand_forms_agree_exactly() {
        for n in 1..=60u32 {
            for l in 0..n {
                let (ni, li) = (i64::from(n), i64::from(l));
                let unfactored_plus = ni * (ni + 1) - li * (li + 1);
                let unfactored_minus = ni * (ni - 1) - li * (li + 1);
                assert_eq!(ladder_radicand(LadderSign::Raise, n, l), unfactored_plus);
                assert_eq!(ladder_radicand(LadderSign::Lower, n, l), unfactored_minus);
            }
        }
    }

    #[test]
    fn ladder_radicand_difference_is_two_n() {
        for n in 1..=40u32 {
            for l in 0..n {
                let d = ladder_radicand(LadderSign::Raise, n, l)
                    - ladder_radicand(LadderSign::Lower, n, l);
                assert_eq!(d, 2 * i64::from(n));
            }
        }
    }

    #[test]
    fn lower_eigenvalue_positive_iff_excited() {
        for n in 1..=20u32 {
            for l in 0..n {
                let v = ladder_eigenvalue::<f64>(LadderSign::Lower, qn(n, l));
                assert_eq!(v > 0.0, n > l + 1, "n={n} l={l}");
            }
        }
    }

    #[test]
    fn checked_eigenvalue_guards_corrupted_input() {
        match ladder_eigenvalue_checked::<f64>(LadderSign::Lower, 1, 3) {
            Err(Error::NegativeRadicand { radicand, .. }) => assert!(radicand < 0),
            other => panic!("expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn xi_scale_internal_unit_goldens() {
        // oracle: direct evaluation with a0 = 1
        let cfg = AtomConfig::<f64>::paper(1)
            .unwrap()
            .with_bohr_radius(1.0)
            .unwrap();
        assert!((xi_scale(1, &cfg) - 2.0).abs() <= 1e-14);
        assert!((xi_scale(2, &cfg) - 0.5).abs() <= 1e-14);
    }

    #[test]
    fn xi_scale_decreases_with_n() {
        let cfg = AtomConfig::<f64>::paper(2).unwrap();
        let mut prev = f64::INFINITY;
        for n in 1..=60 {
            let xi = xi_scale(n, &cfg);
            assert!(xi > 0.0 && xi < prev, "n={n}");
            prev = xi;
        }
    }

    #[test]
    fn scaled_coordinate_definition_points() {
        let cfg = AtomConfig::<f64>::paper(1)
            .unwrap()
            .with_bohr_radius(1.0)
            .unwrap();
        assert_eq!(rho_of_r(0.0, 3, &cfg), 0.0);
        // r = n a0 / (2Z) maps to rho = 1
        let r = 3.0 * 1.0 / 2.0;
        assert!((rho_of_r(r, 3, &cfg) - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn pure_functions_are_bit_stable() {
        let cfg = AtomConfig::<f64>::codata(2).unwrap();
        let a = energy_level(qn(7, 3), &cfg);
        let b = energy_level(qn(7, 3), &cfg);
        assert_eq!(a.to_bits(), b.to_bits());
        assert_eq!(
            xi_scale(9, &cfg).to_bits(),
            xi_scale(9, &cfg).to_bits()
        );
    }

    proptest! {
        #[test]
        fn rho_round_trip_is_tight(r in 0.0f64..1e4, n in 1u32..40, z in 1u32..6) {
            let cfg = AtomConfig::<f64>::paper(z).unwrap();
            let back = r_of_rho(rho_of_r(r, n, &cfg), n, &cfg);
            prop_assert!((back - r).abs() <= 1e-14 * r.abs().max(1e-300));
        }

        #[test]
        fn energy_ratio_e1_over_en_is_n_squared(n in 1u32..=20, z in 1u32..6) {
            let cfg = AtomConfig::<f64>::codata(z).unwrap();
            let e1 = energy_level(qn(1, 0), &cfg);
            let en = energy_level(qn(n, 0), &cfg);
            let ratio = e1 / en;
            prop_assert!((ratio - f64::from(n * n)).abs() <= 1e-12 * f64::from(n * n));
        }
    }
}
