//! The validation check catalogue behind `hla validate`.
//!
//! Every check is a pure closure returning a residual that is compared
//! against its pinned tolerance; `fast` covers the reference table and the
//! closed-form goldens, `full` adds the quadrature and recurrence sweeps.

use std::time::Instant;

use num_complex::Complex;
use rayon::prelude::*;

use hydrogenic::atom::{
    degeneracy, energy_level, ladder_eigenvalue, ladder_radicand, r_of_rho, rho_of_r, xi_scale,
    AtomConfig, LadderSign, QuantumNumbers,
};
use hydrogenic::coherent::{
    bessel_i, bessel_m, coherent_overlap, coherent_uncertainty, compare_table,
    displacement_coefficients, mean_occupation, BesselMTable, CoherentRadial, CoherentState,
};
use hydrogenic::numerics::{integrate, integrate_to_cutoff, QuadratureSpec};
use hydrogenic::operators::{
    build_operator, commutator, expectation, uncertainty_product_nl, OperatorKind, OperatorMatrix,
    TruncatedBasis,
};
use hydrogenic::radial::{
    apply_ladder, assemble_psi, bulge_count, density_mode, ground_phi, moment, moment_quadrature,
    phi_nl, phi_oracle, radial_wavefunction, spherical_harmonic,
};

use crate::report::{CheckRecord, ValidationReport};

type C64 = Complex<f64>;

/// Validation depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

impl Level {
    pub fn as_str(&self) -> &'static str {
        match self {
            Level::Fast => "fast",
            Level::Full => "full",
        }
    }
}

struct CheckDef {
    name: String,
    tolerance: f64,
    run: Box<dyn Fn() -> f64 + Send + Sync>,
}

fn check(name: impl Into<String>, tolerance: f64, run: impl Fn() -> f64 + Send + Sync + 'static) -> CheckDef {
    CheckDef {
        name: name.into(),
        tolerance,
        run: Box::new(run),
    }
}

fn qn(n: u32, l: u32) -> QuantumNumbers {
    QuantumNumbers::new(n, l).unwrap()
}

fn internal_cfg() -> AtomConfig<f64> {
    AtomConfig::paper(1).unwrap().with_bohr_radius(1.0).unwrap()
}

fn quad_spec() -> QuadratureSpec<f64> {
    QuadratureSpec {
        abs_tol: 1e-11,
        ..QuadratureSpec::default()
    }
}

/// Runs the catalogue against the given reference table (injectable so a
/// corrupted table is detectable in tests) and aggregates the report.
pub fn run_checks(level: Level, table: &BesselMTable) -> ValidationReport {
    let mut defs = table_checks(table);
    defs.extend(golden_checks());
    if level == Level::Full {
        defs.extend(sweep_checks());
    }
    let records: Vec<CheckRecord> = defs
        .par_iter()
        .map(|def| {
            let started = Instant::now();
            let residual = (def.run)();
            CheckRecord {
                name: def.name.clone(),
                passed: residual <= def.tolerance,
                residual,
                tolerance: def.tolerance,
                runtime_ms: started.elapsed().as_secs_f64() * 1e3,
            }
        })
        .collect();
    ValidationReport::from_checks(level.as_str(), records)
}

/// One check per reference-table entry.
fn table_checks(table: &BesselMTable) -> Vec<CheckDef> {
    compare_table(table)
        .into_iter()
        .map(|cmp| {
            check(
                format!("table/bessel-m/x={:.1}/l={}", cmp.x, cmp.l),
                cmp.tolerance,
                move || cmp.error,
            )
        })
        .collect()
}

/// Closed-form and reference-entry goldens (the `fast` tier).
fn golden_checks() -> Vec<CheckDef> {
    let mut defs = Vec::new();

    defs.push(check("energy/e1-paper", 0.1, || {
        let cfg = AtomConfig::<f64>::paper(1).unwrap();
        (energy_level(qn(1, 0), &cfg) + 13.6).abs()
    }));
    defs.push(check("energy/n-scaling", 1e-12, || {
        let cfg = AtomConfig::<f64>::paper(1).unwrap();
        let e1 = energy_level(qn(1, 0), &cfg);
        (1..=20u32)
            .map(|n| ((energy_level(qn(n, 0), &cfg) * f64::from(n * n) - e1) / e1).abs())
            .fold(0.0, f64::max)
    }));
    defs.push(check("energy/z-scaling", 1e-12, || {
        let cfg1 = AtomConfig::<f64>::paper(1).unwrap();
        let cfg2 = AtomConfig::<f64>::paper(2).unwrap();
        let expected = 4.0 / 9.0 * energy_level(qn(1, 0), &cfg1);
        ((energy_level(qn(3, 0), &cfg2) - expected) / expected).abs()
    }));
    defs.push(check("energy/degeneracy-count", 0.0, || {
        (1..=10u32)
            .map(|n| {
                let brute: u32 = (0..n).map(|l| 2 * (2 * l + 1)).sum();
                f64::from(degeneracy(n).abs_diff(brute))
            })
            .fold(0.0, f64::max)
    }));

    defs.push(check("ladder/eigenvalue-goldens", 1e-12, || {
        let mut worst = (ladder_eigenvalue::<f64>(LadderSign::Raise, qn(1, 0)) - 2.0f64.sqrt()).abs();
        worst = worst.max(ladder_eigenvalue::<f64>(LadderSign::Lower, qn(4, 3)).abs());
        worst.max((ladder_eigenvalue::<f64>(LadderSign::Raise, qn(2, 1)) - 2.0).abs())
    }));
    defs.push(check("ladder/radicand-forms-agree", 0.0, || {
        let mut worst = 0i64;
        for n in 1..=40u32 {
            for l in 0..n {
                let (ni, li) = (i64::from(n), i64::from(l));
                let d_plus =
                    (ladder_radicand(LadderSign::Raise, n, l) - (ni * (ni + 1) - li * (li + 1))).abs();
                let d_minus =
                    (ladder_radicand(LadderSign::Lower, n, l) - (ni * (ni - 1) - li * (li + 1))).abs();
                worst = worst.max(d_plus).max(d_minus);
            }
        }
        worst as f64
    }));
    defs.push(check("ladder/radicand-difference-two-n", 0.0, || {
        let mut worst = 0i64;
        for n in 1..=40u32 {
            for l in 0..n {
                let d = ladder_radicand(LadderSign::Raise, n, l)
                    - ladder_radicand(LadderSign::Lower, n, l)
                    - 2 * i64::from(n);
                worst = worst.max(d.abs());
            }
        }
        worst as f64
    }));

    defs.push(check("scale/xi-goldens", 1e-14, || {
        let cfg = internal_cfg();
        let a = (xi_scale(1, &cfg) - 2.0).abs();
        a.max((xi_scale(2, &cfg) - 0.5).abs())
    }));
    defs.push(check("scale/rho-round-trip", 1e-14, || {
        let cfg = AtomConfig::<f64>::paper(2).unwrap();
        let mut worst = 0.0f64;
        for i in 0..200 {
            let r = 0.05 * f64::from(i) + 0.01;
            for n in [1u32, 3, 9, 27] {
                let back = r_of_rho(rho_of_r(r, n, &cfg), n, &cfg);
                worst = worst.max((back - r).abs() / r);
            }
        }
        worst
    }));

    // leading operator windows for l = 0 and l = 1
    for l in [0u32, 1] {
        let sub: [f64; 3] = if l == 0 {
            [2.0f64.sqrt(), 6.0f64.sqrt(), 12.0f64.sqrt()]
        } else {
            [2.0, 10.0f64.sqrt(), 18.0f64.sqrt()]
        };
        defs.push(check(format!("matrix/l{l}-number"), 1e-12, move || {
            let m = build_operator::<f64>(OperatorKind::Number, TruncatedBasis::new(l, l + 4).unwrap())
                .unwrap();
            (0..3)
                .map(|i| (m.entry(i, i).re - f64::from(l + 1 + i as u32)).abs())
                .fold(0.0, f64::max)
        }));
        defs.push(check(format!("matrix/l{l}-hn"), 1e-12, move || {
            let m = build_operator::<f64>(OperatorKind::Hn, TruncatedBasis::new(l, l + 4).unwrap())
                .unwrap();
            let expected = f64::from(l * (l + 1));
            let mut worst = 0.0f64;
            for i in 0..3 {
                for j in 0..3 {
                    let e = if i == j { expected } else { 0.0 };
                    worst = worst.max((m.entry(i, j).re - e).abs()).max(m.entry(i, j).im.abs());
                }
            }
            worst
        }));
        defs.push(check(format!("matrix/l{l}-raising"), 1e-12, move || {
            let m = build_operator::<f64>(OperatorKind::APlus, TruncatedBasis::new(l, l + 4).unwrap())
                .unwrap();
            sub.iter()
                .enumerate()
                .map(|(i, e)| (m.entry(i + 1, i).re - e).abs())
                .fold(0.0, f64::max)
        }));
        defs.push(check(format!("matrix/l{l}-lowering"), 1e-12, move || {
            let m = build_operator::<f64>(OperatorKind::AMinus, TruncatedBasis::new(l, l + 4).unwrap())
                .unwrap();
            sub.iter()
                .enumerate()
                .map(|(i, e)| (m.entry(i, i + 1).re - e).abs())
                .fold(0.0, f64::max)
        }));
        defs.push(check(format!("matrix/l{l}-rho"), 1e-12, move || {
            let m = build_operator::<f64>(OperatorKind::Rho, TruncatedBasis::new(l, l + 4).unwrap())
                .unwrap();
            let mut worst = 0.0f64;
            for i in 0..4usize {
                worst = worst.max((m.entry(i, i).re - 2.0 * f64::from(l + 1 + i as u32)).abs());
            }
            for (i, e) in sub.iter().enumerate() {
                worst = worst.max((m.entry(i, i + 1).re + e).abs());
                worst = worst.max((m.entry(i + 1, i).re + e).abs());
            }
            worst
        }));
        defs.push(check(format!("matrix/l{l}-rho-p-rho"), 1e-12, move || {
            let m = build_operator::<f64>(OperatorKind::RhoPRho, TruncatedBasis::new(l, l + 4).unwrap())
                .unwrap();
            let mut worst = 0.0f64;
            for (i, e) in sub.iter().enumerate() {
                worst = worst.max((m.entry(i, i + 1).im - e / 2.0).abs());
                worst = worst.max((m.entry(i + 1, i).im + e / 2.0).abs());
                worst = worst.max(m.entry(i, i).norm());
            }
            worst
        }));
        defs.push(check(format!("matrix/l{l}-commutator-ladders"), 1e-12, move || {
            let basis = TruncatedBasis::new(l, l + 16).unwrap();
            let ap = build_operator::<f64>(OperatorKind::APlus, basis).unwrap();
            let am = build_operator::<f64>(OperatorKind::AMinus, basis).unwrap();
            let n = build_operator::<f64>(OperatorKind::Number, basis).unwrap();
            commutator(&am, &ap)
                .unwrap()
                .interior()
                .max_abs_diff(&n.scale(C64::new(2.0, 0.0)).interior())
        }));
        defs.push(check(format!("matrix/l{l}-factorization"), 1e-12, move || {
            let basis = TruncatedBasis::new(l, l + 12).unwrap();
            let ap = build_operator::<f64>(OperatorKind::APlus, basis).unwrap();
            let n = build_operator::<f64>(OperatorKind::Number, basis).unwrap();
            let id = OperatorMatrix::<f64>::identity(basis);
            let hn = build_operator::<f64>(OperatorKind::Hn, basis).unwrap();
            ap.transpose()
                .matmul(&ap)
                .unwrap()
                .scale(C64::new(-1.0, 0.0))
                .add(&n.matmul(&n.add(&id).unwrap()).unwrap())
                .unwrap()
                .interior()
                .max_abs_diff(&hn.interior())
        }));
        defs.push(check(format!("matrix/l{l}-p-rho-solve"), 1e-12, move || {
            let basis = TruncatedBasis::new(l, l + 12).unwrap();
            let rho = build_operator::<f64>(OperatorKind::Rho, basis).unwrap();
            let p_rho = build_operator::<f64>(OperatorKind::PRho, basis).unwrap();
            let direct = build_operator::<f64>(OperatorKind::RhoPRho, basis).unwrap();
            rho.matmul(&p_rho).unwrap().max_abs_diff(&direct)
        }));
    }
    defs.push(check("matrix/commutator-number-ladder", 1e-14, || {
        let basis = TruncatedBasis::new(0, 12).unwrap();
        let n = build_operator::<f64>(OperatorKind::Number, basis).unwrap();
        let ap = build_operator::<f64>(OperatorKind::APlus, basis).unwrap();
        commutator(&n, &ap).unwrap().interior().max_abs_diff(&ap.interior())
    }));

    // rho-space wavefunction goldens
    let phi_cases: Vec<(&str, u32, u32, Vec<f64>)> = vec![
        ("10", 1, 0, vec![1.0]),
        ("20", 2, 0, vec![2.0 / 2.0f64.sqrt(), -1.0 / 2.0f64.sqrt()]),
        (
            "30",
            3,
            0,
            vec![
                3.0 / 3.0f64.sqrt(),
                -3.0 / 3.0f64.sqrt(),
                0.5 / 3.0f64.sqrt(),
            ],
        ),
        ("21", 2, 1, vec![1.0 / 6.0f64.sqrt()]),
        (
            "31",
            3,
            1,
            vec![4.0 / (2.0 * 6.0f64.sqrt()), -1.0 / (2.0 * 6.0f64.sqrt())],
        ),
        ("32", 3, 2, vec![1.0 / (2.0 * 30.0f64.sqrt())]),
    ];
    for (tag, n, l, expected) in phi_cases {
        defs.push(check(format!("radial/phi-{tag}"), 1e-12, move || {
            let phi = phi_nl::<f64>(n, l).unwrap();
            expected
                .iter()
                .enumerate()
                .map(|(j, e)| (phi.coeffs()[j] - e).abs())
                .fold(0.0, f64::max)
        }));
    }

    // r-space closed forms at Z = 1, a0 = 1
    type ClosedForm = fn(f64) -> f64;
    let radial_cases: Vec<(&str, u32, u32, ClosedForm)> = vec![
        ("10", 1, 0, |r| 2.0 * (-r).exp()),
        ("20", 2, 0, |r| {
            2.0 * 0.5f64.powf(1.5) * (1.0 - 0.5 * r) * (-0.5 * r).exp()
        }),
        ("30", 3, 0, |r| {
            2.0 * (1.0f64 / 3.0).powf(1.5) * (1.0 - 2.0 * r / 3.0 + 2.0 * r * r / 27.0)
                * (-r / 3.0).exp()
        }),
        ("21", 2, 1, |r| {
            (1.0 / 3.0f64.sqrt()) * 0.5f64.powf(1.5) * r * (-0.5 * r).exp()
        }),
        ("31", 3, 1, |r| {
            (4.0 * 2.0f64.sqrt() / 9.0) * (1.0f64 / 3.0).powf(1.5) * r * (1.0 - r / 6.0)
                * (-r / 3.0).exp()
        }),
        ("32", 3, 2, |r| {
            (2.0 * 2.0f64.sqrt() / (27.0 * 5.0f64.sqrt())) * (1.0f64 / 3.0).powf(1.5) * r * r
                * (-r / 3.0).exp()
        }),
    ];
    for (tag, n, l, closed) in radial_cases {
        defs.push(check(format!("radial/R-{tag}"), 1e-12, move || {
            let rf = radial_wavefunction(qn(n, l), &internal_cfg()).unwrap();
            let span = 15.0 * f64::from(n * n);
            let mut max_abs = 0.0f64;
            let mut worst = 0.0f64;
            let samples: Vec<(f64, f64)> = (0..100)
                .map(|i| {
                    let r = span * f64::from(i) / 99.0;
                    (rf.eval(r), closed(r))
                })
                .collect();
            for (_, c) in &samples {
                max_abs = max_abs.max(c.abs());
            }
            for (got, c) in samples {
                worst = worst.max((got - c).abs() / max_abs);
            }
            worst
        }));
    }

    defs.push(check("radial/ladder-steps", 1e-12, || {
        // raising chains against the tabulated eigenvalues
        let mut worst = 0.0f64;
        let cases = [(1u32, 0u32), (2, 0), (2, 1)];
        for (n, l) in cases {
            let from = phi_nl::<f64>(n, l).unwrap();
            let to = phi_nl::<f64>(n + 1, l).unwrap();
            let a = ladder_eigenvalue::<f64>(LadderSign::Raise, qn(n, l));
            let image = apply_ladder(LadderSign::Raise, &from);
            for k in l..=n {
                worst = worst.max((image.coeff(k) - a * to.coeff(k)).abs());
            }
        }
        worst
    }));
    defs.push(check("radial/lowering-terminates", 0.0, || {
        let mut worst = 0.0f64;
        for l in 0..4u32 {
            let image = apply_ladder(LadderSign::Lower, &ground_phi::<f64>(l));
            if !image.is_zero() {
                worst = 1.0;
            }
        }
        worst
    }));

    defs.push(check("uncertainty/ground-states", 1e-10, || {
        (0..=3u32)
            .map(|l| {
                (uncertainty_product_nl::<f64>(qn(l + 1, l)).unwrap() - f64::from(l + 1)).abs()
            })
            .fold(0.0, f64::max)
    }));
    defs.push(check("uncertainty/basis-goldens", 1e-10, || {
        let mut worst = (uncertainty_product_nl::<f64>(qn(1, 0)).unwrap() - 1.0).abs();
        worst = worst.max((uncertainty_product_nl::<f64>(qn(3, 1)).unwrap() - 7.0).abs());
        worst.max((uncertainty_product_nl::<f64>(qn(2, 1)).unwrap() - 2.0).abs())
    }));

    defs.push(check("harmonics/y00", 1e-14, || {
        let y = spherical_harmonic::<f64>(0, 0, 1.1, 0.3).unwrap();
        (y.re - 1.0 / (4.0 * std::f64::consts::PI).sqrt()).abs() + y.im.abs()
    }));

    defs.push(check("coherent/vacuum-exact", 0.0, || {
        let mut worst = 0.0f64;
        for l in [0u32, 1, 2] {
            let s = CoherentState::<f64>::new(l, C64::new(0.0, 0.0));
            if s.coeffs().len() != 1 || s.coefficient(l + 1) != C64::new(1.0, 0.0) {
                worst = 1.0;
            }
        }
        worst
    }));
    defs.push(check("bessel/i-goldens", 1e-13, || {
        let mut worst = (bessel_i::<f64>(0, 0.0) - 1.0).abs();
        worst = worst.max(bessel_i::<f64>(1, 0.0).abs());
        worst.max((bessel_i::<f64>(1, 1.0) - 0.565159103992485).abs())
    }));
    defs.push(check("bessel/m-i-identity", 1e-12, || {
        let mut worst = 0.0f64;
        for l in 0..6u32 {
            for i in 1..=10 {
                let x = 0.5 * f64::from(i);
                let m = bessel_m::<f64>(l, x);
                let lhs = (x / 2.0).powi(2 * l as i32 + 1) / (m * m);
                let rhs = bessel_i::<f64>(2 * l + 1, x);
                worst = worst.max(((lhs - rhs) / rhs).abs());
            }
        }
        worst
    }));
    defs.push(check("bessel/m-monotone", 0.0, || {
        let mut violations = 0.0f64;
        for l in 0..6u32 {
            let mut prev = f64::INFINITY;
            for i in 0..=50 {
                let v = bessel_m::<f64>(l, 0.1 * f64::from(i));
                if v >= prev {
                    violations += 1.0;
                }
                prev = v;
            }
        }
        violations
    }));

    defs
}

/// Quadrature- and recurrence-sweep checks (the `full` tier).
fn sweep_checks() -> Vec<CheckDef> {
    let mut defs = Vec::new();

    defs.push(check("sweep/oracle-equivalence", 1e-10, || {
        let mut worst = 0.0f64;
        for n in 1..=20u32 {
            for l in 0..n {
                let ladder = phi_nl::<f64>(n, l).unwrap();
                let oracle = phi_oracle::<f64>(n, l).unwrap();
                let mut max_phi = 0.0f64;
                let mut max_diff = 0.0f64;
                for i in 0..=1000 {
                    let rho = 200.0 * f64::from(i) / 1000.0;
                    let a = ladder.eval(rho);
                    max_phi = max_phi.max(a.abs());
                    max_diff = max_diff.max((a - oracle.eval(rho)).abs());
                }
                worst = worst.max(max_diff / max_phi);
            }
        }
        worst
    }));

    for l in [0u32, 1, 2] {
        defs.push(check(format!("sweep/orthonormality-rho-l{l}"), 1e-8, move || {
            let spec = quad_spec();
            let phis: Vec<_> = ((l + 1)..=12).map(|n| phi_nl::<f64>(n, l).unwrap()).collect();
            let mut worst = 0.0f64;
            for (i, a) in phis.iter().enumerate() {
                for (j, b) in phis.iter().enumerate().skip(i) {
                    let v = integrate_to_cutoff(
                        |rho| rho * a.eval(rho) * b.eval(rho),
                        0.0,
                        220.0,
                        1.0,
                        &spec,
                    )
                    .unwrap()
                    .value;
                    let expected = if i == j { 1.0 } else { 0.0 };
                    worst = worst.max((v - expected).abs());
                }
            }
            worst
        }));
        defs.push(check(format!("sweep/orthonormality-r-l{l}"), 1e-8, move || {
            let spec = quad_spec();
            let cfg = internal_cfg();
            let ns: Vec<u32> = ((l + 1)..=12).collect();
            let rfs: Vec<_> = ns
                .iter()
                .map(|&n| radial_wavefunction(qn(n, l), &cfg).unwrap())
                .collect();
            let mut worst = 0.0f64;
            for (i, a) in rfs.iter().enumerate() {
                for (j, b) in rfs.iter().enumerate().skip(i) {
                    let rate = 1.0 / f64::from(ns[i]) + 1.0 / f64::from(ns[j]);
                    let v = integrate_to_cutoff(
                        |r| r * r * a.eval(r) * b.eval(r),
                        0.0,
                        700.0,
                        rate,
                        &spec,
                    )
                    .unwrap()
                    .value;
                    let expected = if i == j { 1.0 } else { 0.0 };
                    worst = worst.max((v - expected).abs());
                }
            }
            worst
        }));
    }

    defs.push(check("sweep/moments-mean-r", 1e-10, || {
        let cfg = internal_cfg();
        let mut worst = 0.0f64;
        for n in 1..=12u32 {
            for l in 0..n {
                let expected = 0.5 * (3.0 * f64::from(n * n) - f64::from(l * (l + 1)));
                worst = worst.max(((moment(qn(n, l), 1, &cfg).unwrap() - expected) / expected).abs());
            }
        }
        worst
    }));
    defs.push(check("sweep/moments-inverse-r", 1e-10, || {
        let cfg = internal_cfg();
        let mut worst = 0.0f64;
        for n in 1..=12u32 {
            for l in 0..n {
                let expected = 1.0 / f64::from(n * n);
                worst =
                    worst.max(((moment(qn(n, l), -1, &cfg).unwrap() - expected) / expected).abs());
            }
        }
        worst
    }));
    defs.push(check("sweep/moments-quadrature-cross-check", 1e-8, || {
        let cfg = internal_cfg();
        let spec = quad_spec();
        let mut worst = 0.0f64;
        for (n, l, k) in [(2u32, 1u32, 1i32), (3, 0, 2), (5, 2, -1), (6, 3, 0)] {
            let a = moment(qn(n, l), k, &cfg).unwrap();
            let q = moment_quadrature(qn(n, l), k, &cfg, &spec).unwrap();
            worst = worst.max((a - q).abs() / a.abs().max(1.0));
        }
        worst
    }));
    defs.push(check("sweep/moments-matrix-diagonals", 1e-12, || {
        let mut worst = 0.0f64;
        for l in [0u32, 1, 2] {
            let basis = TruncatedBasis::default_for_l(l);
            let rho = build_operator::<f64>(OperatorKind::Rho, basis).unwrap();
            let rho2 = rho.matmul(&rho).unwrap();
            for n in (l + 1)..=12 {
                let mean = expectation(&rho, qn(n, l)).unwrap();
                worst = worst.max((mean.re - 2.0 * f64::from(n)).abs());
                let second = expectation(&rho2, qn(n, l)).unwrap();
                let expected = 6.0 * f64::from(n * n) - 2.0 * f64::from(l * (l + 1));
                worst = worst.max((second.re - expected).abs() / expected);
            }
        }
        worst
    }));

    defs.push(check("sweep/eigenrelation-second-order", 1e-8, || {
        let mut worst = 0.0f64;
        for n in 1..=12u32 {
            for l in 0..n {
                let phi = phi_nl::<f64>(n, l).unwrap();
                let ll = f64::from(l * (l + 1));
                let nf = f64::from(n);
                let mut max_phi = 0.0f64;
                let mut max_resid = 0.0f64;
                for i in 1..=800 {
                    let rho = 150.0 * f64::from(i) / 800.0;
                    let (f, df, d2f) = phi.eval_derivatives(rho);
                    max_phi = max_phi.max(f.abs());
                    let lhs =
                        rho * rho * d2f + 2.0 * rho * df - 0.25 * rho * rho * f + nf * rho * f;
                    max_resid = max_resid.max((lhs - ll * f).abs());
                }
                worst = worst.max(max_resid / max_phi);
            }
        }
        worst
    }));
    defs.push(check("sweep/eigenrelation-number-operator", 1e-8, || {
        let mut worst = 0.0f64;
        for n in 1..=12u32 {
            for l in 0..n {
                let phi = phi_nl::<f64>(n, l).unwrap();
                let ll = f64::from(l * (l + 1));
                let nf = f64::from(n);
                let mut max_phi = 0.0f64;
                let mut max_resid = 0.0f64;
                for i in 1..=800 {
                    let rho = 1e-3 + 150.0 * f64::from(i) / 800.0;
                    let (f, df, d2f) = phi.eval_derivatives(rho);
                    max_phi = max_phi.max(f.abs());
                    let lhs = -rho * d2f - 2.0 * df + 0.25 * rho * f + ll * f / rho;
                    max_resid = max_resid.max((lhs - nf * f).abs());
                }
                worst = worst.max(max_resid / max_phi);
            }
        }
        worst
    }));

    defs.push(check("sweep/normalization-phi", 1e-10, || {
        let spec = quad_spec();
        let mut worst = 0.0f64;
        for n in 1..=12u32 {
            for l in 0..n {
                let phi = phi_nl::<f64>(n, l).unwrap();
                let v = integrate_to_cutoff(
                    |rho| {
                        let f = phi.eval(rho);
                        rho * f * f
                    },
                    0.0,
                    180.0,
                    1.0,
                    &spec,
                )
                .unwrap()
                .value;
                worst = worst.max((v - 1.0).abs());
            }
        }
        worst
    }));
    defs.push(check("sweep/normalization-radial", 1e-8, || {
        let spec = quad_spec();
        let cfg = internal_cfg();
        let mut worst = 0.0f64;
        for (n, l) in [(1u32, 0u32), (4, 2), (8, 3), (12, 0), (12, 11)] {
            let rf = radial_wavefunction(qn(n, l), &cfg).unwrap();
            worst = worst.max((rf.norm_squared(&spec).unwrap() - 1.0).abs());
        }
        worst
    }));

    defs.push(check("sweep/bulge-counts", 0.0, || {
        let cfg = internal_cfg();
        let mut mismatches = 0.0f64;
        for n in 1..=8u32 {
            for l in 0..n {
                let rf = radial_wavefunction(qn(n, l), &cfg).unwrap();
                if bulge_count(&rf) != (n - l) as usize {
                    mismatches += 1.0;
                }
            }
        }
        mismatches
    }));
    defs.push(check("sweep/circular-modes", 1e-8, || {
        let cfg = internal_cfg();
        let mut worst = 0.0f64;
        for n in 1..=6u32 {
            let rf = radial_wavefunction(qn(n, n - 1), &cfg).unwrap();
            let expected = f64::from(n * n);
            worst = worst.max(((density_mode(&rf) - expected) / expected).abs());
        }
        worst
    }));

    defs.push(check("sweep/matrix-elements-rho", 1e-8, || {
        let spec = quad_spec();
        let mut worst = 0.0f64;
        for l in [0u32, 1] {
            for n in (l + 1)..=8 {
                for n_other in (l + 1)..=8 {
                    let a = phi_nl::<f64>(n, l).unwrap();
                    let b = phi_nl::<f64>(n_other, l).unwrap();
                    let v = integrate_to_cutoff(
                        |rho| rho * rho * a.eval(rho) * b.eval(rho),
                        0.0,
                        180.0,
                        1.0,
                        &spec,
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
                    worst = worst.max((v - expected).abs());
                }
            }
        }
        worst
    }));
    defs.push(check("sweep/uncertainty-basis", 1e-10, || {
        let mut worst = 0.0f64;
        for n in 1..=12u32 {
            for l in 0..n {
                let expected = f64::from(n * n) - f64::from(l * (l + 1));
                worst = worst
                    .max((uncertainty_product_nl::<f64>(qn(n, l)).unwrap() - expected).abs() / expected);
            }
        }
        worst
    }));
    defs.push(check("matrix/commutator-rho-p-rho", 1e-12, || {
        let mut worst = 0.0f64;
        for l in [0u32, 1] {
            for extra in [8u32, 16, 32] {
                let basis = TruncatedBasis::new(l, l + extra).unwrap();
                let rho = build_operator::<f64>(OperatorKind::Rho, basis).unwrap();
                let p_rho = build_operator::<f64>(OperatorKind::PRho, basis).unwrap();
                let comm = commutator(&rho, &p_rho).unwrap();
                let window = basis.dim() / 2;
                for i in 0..window {
                    for j in 0..window {
                        let expected = if i == j { C64::new(0.0, 1.0) } else { C64::new(0.0, 0.0) };
                        worst = worst.max((comm.entry(i, j) - expected).norm());
                    }
                }
            }
        }
        worst
    }));

    let z_set = [C64::new(0.5, 0.0), C64::new(1.0, 1.0), C64::new(3.0, 0.0)];
    defs.push(check("coherent/normalization", 1e-10, move || {
        let mut worst = 0.0f64;
        for l in [0u32, 1, 2] {
            for z in z_set {
                worst = worst.max((CoherentState::<f64>::new(l, z).norm_sqr() - 1.0).abs());
            }
        }
        worst
    }));
    defs.push(check("coherent/eigenrelation", 1e-8, move || {
        let mut worst = 0.0f64;
        for l in [0u32, 1, 2] {
            for z in z_set {
                worst = worst.max(CoherentState::<f64>::new(l, z).eigen_residual().unwrap());
            }
        }
        worst
    }));
    defs.push(check("coherent/displacement-equivalence", 1e-9, || {
        let mut worst = 0.0f64;
        for (l, z) in [(0u32, C64::new(1.0, 0.0)), (1, C64::new(0.8, -1.1))] {
            let s = CoherentState::<f64>::new(l, z);
            let d = displacement_coefficients::<f64>(l, z).unwrap();
            let norm: f64 = d.iter().map(|v| v.norm_sqr()).sum();
            worst = worst.max((norm - 1.0).abs());
            for (i, c) in s.coeffs().iter().enumerate() {
                worst = worst.max((d[i] - c).norm());
            }
        }
        worst
    }));
    defs.push(check("coherent/mean-occupation", 1e-10, || {
        let mut worst = 0.0f64;
        for (l, z) in [(0u32, C64::new(0.0, 0.0)), (2, C64::new(0.0, 0.0)), (0, C64::new(2.0, 0.0))] {
            let s = CoherentState::<f64>::new(l, z);
            worst = worst.max((mean_occupation(&s) - s.occupation_mean_direct()).abs());
        }
        worst
    }));
    defs.push(check("coherent/uncertainty-saturation", 1e-8, move || {
        let mut worst = 0.0f64;
        for l in 0..=3u32 {
            for z in z_set {
                let s = CoherentState::<f64>::new(l, z);
                let n_bar = mean_occupation(&s);
                let u = coherent_uncertainty(&s).unwrap();
                worst = worst.max((u.sigma_q * u.sigma_q - n_bar).abs());
                worst = worst.max((u.sigma_p * u.sigma_p - n_bar).abs());
                worst = worst.max((u.product - n_bar).abs());
            }
        }
        worst
    }));
    defs.push(check("coherent/radial-norm", 1e-7, || {
        let cfg = internal_cfg();
        let spec = QuadratureSpec {
            abs_tol: 1e-9,
            ..QuadratureSpec::default()
        };
        let mut worst = 0.0f64;
        for (l, z) in [(0u32, C64::new(1.0, 0.0)), (1, C64::new(1.0, 1.0))] {
            let prof = CoherentRadial::new(CoherentState::<f64>::new(l, z), &cfg).unwrap();
            let v = integrate_to_cutoff(
                |r| r * r * prof.eval(r).norm_sqr(),
                0.0,
                prof.density_cutoff(),
                prof.density_decay_rate(),
                &spec,
            )
            .unwrap()
            .value;
            worst = worst.max((v - 1.0).abs());
        }
        worst
    }));
    defs.push(check("coherent/overlap-nonzero", 0.0, || {
        let a = CoherentState::<f64>::new(0, C64::new(1.0, 0.0));
        let b = CoherentState::<f64>::new(0, C64::new(2.0, 0.0));
        if coherent_overlap(&a, &b).unwrap().norm() > 1e-6 {
            0.0
        } else {
            1.0
        }
    }));
    defs.push(check("coherent/variance-growth", 0.0, || {
        let mut prev = -1.0f64;
        let mut violations = 0.0f64;
        for mag in [0.0, 0.5, 1.0, 2.0, 3.0] {
            let var = CoherentState::<f64>::new(0, C64::new(mag, 0.0)).occupation_variance();
            if var < prev || var < -1e-12 {
                violations += 1.0;
            }
            prev = var;
        }
        violations
    }));

    defs.push(check("harmonics/normalization", 1e-8, || {
        let spec = quad_spec();
        let mut worst = 0.0f64;
        for l in 0..=4u32 {
            for m in -(l as i32)..=(l as i32) {
                let v = integrate(
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
                worst = worst.max((v - 1.0).abs());
            }
        }
        worst
    }));
    defs.push(check("psi/normalization", 1e-7, || {
        let cfg = internal_cfg();
        let spec = QuadratureSpec {
            abs_tol: 1e-9,
            ..QuadratureSpec::default()
        };
        let mut worst = 0.0f64;
        for (n, l, m) in [(1u32, 0u32, 0i32), (2, 1, 1)] {
            let psi = assemble_psi::<f64>(n, l, m, &cfg).unwrap();
            let rf = psi.radial();
            let radial_part = integrate_to_cutoff(
                |r| rf.probability_density(r),
                0.0,
                rf.density_cutoff(),
                rf.density_decay_rate(),
                &spec,
            )
            .unwrap()
            .value;
            let angular = integrate(
                |theta: f64| {
                    let ring = integrate(
                        |phi: f64| spherical_harmonic::<f64>(l, m, theta, phi).unwrap().norm_sqr(),
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
            worst = worst.max((radial_part * angular - 1.0).abs());
        }
        worst
    }));

    defs
}
