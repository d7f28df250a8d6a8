//! Cross-module invariant suites: differential eigenrelations of the
//! generated wavefunctions, quadrature-versus-algebra consistency of matrix
//! elements, normalization sweeps, and the orthogonality convention of the
//! underlying Rodrigues polynomials.

use hydrogenic::atom::{ladder_eigenvalue, AtomConfig, LadderSign, QuantumNumbers};
use hydrogenic::numerics::{integrate_to_cutoff, log_factorial, QuadratureSpec};
use hydrogenic::radial::{
    assemble_psi, laguerre_rodrigues_coeffs, phi_nl, radial_wavefunction, spherical_harmonic,
};

fn qn(n: u32, l: u32) -> QuantumNumbers {
    QuantumNumbers::new(n, l).unwrap()
}

fn spec() -> QuadratureSpec<f64> {
    QuadratureSpec {
        abs_tol: 1e-11,
        ..QuadratureSpec::default()
    }
}

/// Applying the second-order radial operator to phi_nl must return
/// l(l+1) phi_nl pointwise: the generated functions solve the equation they
/// were never numerically integrated from.
#[test]
fn differential_eigenrelation_second_order() {
    for n in 1..=12u32 {
        for l in 0..n {
            let phi = phi_nl::<f64>(n, l).unwrap();
            let ll = f64::from(l * (l + 1));
            let nf = f64::from(n);
            let mut max_phi = 0.0f64;
            let mut max_resid = 0.0f64;
            for i in 1..=1500 {
                let rho = 150.0 * f64::from(i) / 1500.0;
                let (f, df, d2f) = phi.eval_derivatives(rho);
                max_phi = max_phi.max(f.abs());
                let lhs = rho * rho * d2f + 2.0 * rho * df - 0.25 * rho * rho * f + nf * rho * f;
                max_resid = max_resid.max((lhs - ll * f).abs());
            }
            assert!(
                max_resid <= 1e-8 * max_phi,
                "(n,l)=({n},{l}): resid {max_resid:.3e} vs scale {max_phi:.3e}"
            );
        }
    }
}

/// The first-order number-operator form `-rho f'' - 2 f' + rho f / 4 +
/// l(l+1) f / rho = n f` pointwise; the stiff 1/rho term is only probed away
/// from the origin.
#[test]
fn differential_eigenrelation_number_operator() {
    for n in 1..=12u32 {
        for l in 0..n {
            let phi = phi_nl::<f64>(n, l).unwrap();
            let ll = f64::from(l * (l + 1));
            let nf = f64::from(n);
            let mut max_phi = 0.0f64;
            let mut max_resid = 0.0f64;
            for i in 1..=1500 {
                let rho = 1e-3 + 150.0 * f64::from(i) / 1500.0;
                let (f, df, d2f) = phi.eval_derivatives(rho);
                max_phi = max_phi.max(f.abs());
                let lhs = -rho * d2f - 2.0 * df + 0.25 * rho * f + ll * f / rho;
                max_resid = max_resid.max((lhs - nf * f).abs());
            }
            assert!(
                max_resid <= 1e-8 * max_phi,
                "(n,l)=({n},{l}): resid {max_resid:.3e}"
            );
        }
    }
}

/// Quadrature of the rho-weighted product against the tridiagonal closed
/// form of the position matrix elements.
#[test]
fn matrix_elements_of_rho_quadrature_vs_algebra() {
    let s = spec();
    for l in [0u32, 1] {
        for n in (l + 1)..=8 {
            for n_other in (l + 1)..=8 {
                let a = phi_nl::<f64>(n, l).unwrap();
                let b = phi_nl::<f64>(n_other, l).unwrap();
                let value = integrate_to_cutoff(
                    |rho| rho * a.eval(rho) * rho * b.eval(rho),
                    0.0,
                    180.0,
                    1.0,
                    &s,
                )
                .unwrap()
                .value;
                let expected = if n == n_other {
                    2.0 * f64::from(n)
                } else if n_other == n + 1 {
                    -ladder_eigenvalue::<f64>(LadderSign::Raise, qn(n, l))
                } else if n_other + 1 == n {
                    -ladder_eigenvalue::<f64>(LadderSign::Lower, qn(n, l))
                } else {
                    0.0
                };
                assert!(
                    (value - expected).abs() <= 1e-8,
                    "l={l} ({n},{n_other}): {value} vs {expected}"
                );
            }
        }
    }
}

/// phi_nl normalization under the rho measure for the full desk range.
#[test]
fn phi_normalization_sweep() {
    let s = spec();
    for n in 1..=12u32 {
        for l in 0..n {
            let phi = phi_nl::<f64>(n, l).unwrap();
            let norm = integrate_to_cutoff(
                |rho| {
                    let v = phi.eval(rho);
                    rho * v * v
                },
                0.0,
                180.0,
                1.0,
                &s,
            )
            .unwrap()
            .value;
            assert!((norm - 1.0).abs() <= 1e-10, "(n,l)=({n},{l}): {norm}");
        }
    }
}

/// Orthogonality weight of the Rodrigues-convention polynomials as used
/// here: integral of rho^(2l+1) e^-rho [L^{2l+1}_{n+l}]^2 equals
/// [(n+l)!]^3/(n-l-1)!, while the rho^(2l+2) weight carries the extra 2n.
#[test]
fn laguerre_orthogonality_weight_convention() {
    let s = spec();
    for (n, l) in [(1u32, 0u32), (2, 0), (3, 1), (4, 2), (5, 0)] {
        let coeffs = laguerre_rodrigues_coeffs::<f64>(n + l, 2 * l + 1);
        let eval = |rho: f64| {
            let mut acc = 0.0;
            for c in coeffs.iter().rev() {
                acc = acc * rho + c;
            }
            acc
        };
        let log_ref = 3.0 * log_factorial::<f64>(u64::from(n + l))
            - log_factorial::<f64>(u64::from(n - l - 1));
        let reference = log_ref.exp();
        let weight_2l1 = integrate_to_cutoff(
            |rho: f64| rho.powi(2 * l as i32 + 1) * (-rho).exp() * eval(rho) * eval(rho),
            0.0,
            200.0,
            1.0,
            &QuadratureSpec {
                abs_tol: 1e-8 * reference.max(1.0),
                ..s
            },
        )
        .unwrap()
        .value;
        assert!(
            ((weight_2l1 - reference) / reference).abs() <= 1e-8,
            "(n,l)=({n},{l}): weight rho^(2l+1) gives {weight_2l1}, reference {reference}"
        );
        let weight_2l2 = integrate_to_cutoff(
            |rho: f64| rho.powi(2 * l as i32 + 2) * (-rho).exp() * eval(rho) * eval(rho),
            0.0,
            200.0,
            1.0,
            &QuadratureSpec {
                abs_tol: 1e-8 * reference.max(1.0),
                ..s
            },
        )
        .unwrap()
        .value;
        let with_2n = 2.0 * f64::from(n) * reference;
        assert!(
            ((weight_2l2 - with_2n) / with_2n).abs() <= 1e-8,
            "(n,l)=({n},{l}): weight rho^(2l+2) gives {weight_2l2}, expected {with_2n}"
        );
    }
}

/// Full spatial wavefunctions integrate to unit probability.
#[test]
fn assembled_psi_normalization() {
    let cfg = AtomConfig::<f64>::paper(1)
        .unwrap()
        .with_bohr_radius(1.0)
        .unwrap();
    let s = QuadratureSpec {
        abs_tol: 1e-9,
        ..QuadratureSpec::default()
    };
    for (n, l, m) in [(1u32, 0u32, 0i32), (2, 1, 0), (3, 2, -1)] {
        let psi = assemble_psi::<f64>(n, l, m, &cfg).unwrap();
        let radial_part = {
            let rf = psi.radial();
            integrate_to_cutoff(
                |r| rf.probability_density(r),
                0.0,
                rf.density_cutoff(),
                rf.density_decay_rate(),
                &s,
            )
            .unwrap()
            .value
        };
        let angular_part = hydrogenic::numerics::integrate(
            |theta: f64| {
                let ring = hydrogenic::numerics::integrate(
                    |phi_angle: f64| {
                        spherical_harmonic::<f64>(l, m, theta, phi_angle)
                            .unwrap()
                            .norm_sqr()
                    },
                    0.0,
                    2.0 * std::f64::consts::PI,
                    &s,
                )
                .unwrap()
                .value;
                ring * theta.sin()
            },
            0.0,
            std::f64::consts::PI,
            &s,
        )
        .unwrap()
        .value;
        let total = radial_part * angular_part;
        assert!((total - 1.0).abs() <= 1e-7, "(n,l,m)=({n},{l},{m}): {total}");
    }
}

/// The generic kernels run at f32 too; only the tolerances change.
#[test]
fn f32_instantiation_smoke() {
    let cfg = AtomConfig::<f32>::paper(1).unwrap();
    let e1 = hydrogenic::atom::energy_level(qn(1, 0), &cfg);
    assert!((e1 - (-13.6)).abs() < 0.1);
    let phi = phi_nl::<f32>(3, 1).unwrap();
    assert!((phi.eval(0.0)).abs() < 1.0);
    let rf = radial_wavefunction(qn(2, 0), &cfg.with_bohr_radius(1.0).unwrap()).unwrap();
    assert!((rf.eval(0.0) - 2.0 * 0.5f32.powf(1.5)).abs() <= 1e-5);
}
