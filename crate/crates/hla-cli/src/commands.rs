//! The data-producing commands. Each returns named artifacts so the binary,
//! tests, and scripts share one deterministic implementation.

use num_complex::Complex;
use serde::Serialize;

use hydrogenic::atom::{degeneracy, energy_level, AtomConfig, QuantumNumbers};
use hydrogenic::coherent::{bessel_m, mean_occupation, CoherentRadial, CoherentState};
use hydrogenic::operators::{build_operator, OperatorKind, TruncatedBasis};
use hydrogenic::radial::radial_wavefunction;
use hydrogenic::Result;

use crate::output::{csv_table, fmt_f64, Artifact};
use crate::svg::LineChart;

type C64 = Complex<f64>;

/// Output format of the data commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Which physical constants seed the atom configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantsChoice {
    Paper,
    Codata,
}

impl ConstantsChoice {
    pub fn config(&self, z: u32) -> Result<AtomConfig<f64>> {
        match self {
            ConstantsChoice::Paper => AtomConfig::paper(z),
            ConstantsChoice::Codata => AtomConfig::codata(z),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ConstantsChoice::Paper => "paper",
            ConstantsChoice::Codata => "codata",
        }
    }
}

#[derive(Serialize)]
struct SpectrumLevel {
    n: u32,
    energy_ev: f64,
    degeneracy: u32,
}

#[derive(Serialize)]
struct SpectrumArtifact {
    z: u32,
    constants: String,
    levels: Vec<SpectrumLevel>,
}

/// Energy table rows (n, E_n in eV, degeneracy 2n^2).
pub fn cmd_spectrum(
    z: u32,
    n_max: u32,
    constants: ConstantsChoice,
    format: Format,
) -> Result<Vec<Artifact>> {
    if n_max == 0 {
        return Err(hydrogenic::Error::InvalidConfig(
            "spectrum needs n_max >= 1".into(),
        ));
    }
    let cfg = constants.config(z)?;
    let levels: Vec<SpectrumLevel> = (1..=n_max)
        .map(|n| SpectrumLevel {
            n,
            energy_ev: energy_level(QuantumNumbers::new(n, 0).unwrap(), &cfg),
            degeneracy: degeneracy(n),
        })
        .collect();
    let artifact = match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = levels
                .iter()
                .map(|lev| {
                    vec![
                        lev.n.to_string(),
                        fmt_f64(lev.energy_ev),
                        lev.degeneracy.to_string(),
                    ]
                })
                .collect();
            Artifact::new("spectrum.csv", csv_table(&["n", "energy_ev", "degeneracy"], &rows))
        }
        Format::Json => {
            let doc = SpectrumArtifact {
                z,
                constants: constants.as_str().to_string(),
                levels,
            };
            Artifact::new(
                "spectrum.json",
                serde_json::to_string_pretty(&doc).expect("spectrum serializes"),
            )
        }
    };
    Ok(vec![artifact])
}

#[derive(Serialize)]
struct RadialSample {
    r: f64,
    #[serde(rename = "R")]
    radial: f64,
    p: f64,
}

#[derive(Serialize)]
struct RadialArtifact {
    n: u32,
    l: u32,
    z: u32,
    constants: String,
    bohr_radius_nm: f64,
    poly: serde_json::Value,
    samples: Vec<RadialSample>,
}

/// Radial wavefunction samples (r, R, p) with optional SVG plots.
#[allow(clippy::too_many_arguments)]
pub fn cmd_radial(
    n: u32,
    l: u32,
    z: u32,
    samples: usize,
    r_max: Option<f64>,
    constants: ConstantsChoice,
    format: Format,
    plot: bool,
) -> Result<Vec<Artifact>> {
    let cfg = constants.config(z)?;
    let qn = QuantumNumbers::new(n, l)?;
    let rf = radial_wavefunction(qn, &cfg)?;
    if let Some(rm) = r_max {
        if !rm.is_finite() || rm <= 0.0 {
            return Err(hydrogenic::Error::InvalidConfig(
                "r_max must be positive and finite".into(),
            ));
        }
    }
    let r_max = r_max.unwrap_or_else(|| rf.density_cutoff() / 4.0);
    let count = samples.max(2);
    let table: Vec<RadialSample> = (0..count)
        .map(|i| {
            let r = r_max * i as f64 / (count - 1) as f64;
            RadialSample {
                r,
                radial: rf.eval(r),
                p: rf.probability_density(r),
            }
        })
        .collect();
    let mut artifacts = Vec::new();
    match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = table
                .iter()
                .map(|s| vec![fmt_f64(s.r), fmt_f64(s.radial), fmt_f64(s.p)])
                .collect();
            artifacts.push(Artifact::new("radial.csv", csv_table(&["r", "R", "p"], &rows)));
        }
        Format::Json => {
            let doc = RadialArtifact {
                n,
                l,
                z,
                constants: constants.as_str().to_string(),
                bohr_radius_nm: cfg.bohr_radius(),
                poly: serde_json::from_str(&rf.poly().to_json()).expect("poly json is valid"),
                samples: table.iter().map(|s| RadialSample { r: s.r, radial: s.radial, p: s.p }).collect(),
            };
            artifacts.push(Artifact::new(
                "radial.json",
                serde_json::to_string_pretty(&doc).expect("radial serializes"),
            ));
        }
    }
    if plot {
        let mut chart_r = LineChart::new(
            &format!("R_{n}{l}(r), Z = {z}"),
            "r [nm]",
            "R [nm^-3/2]",
        );
        chart_r.add_series("R", table.iter().map(|s| (s.r, s.radial)).collect());
        artifacts.push(Artifact::new("radial_R.svg", chart_r.to_svg()));
        let mut chart_p = LineChart::new(
            &format!("p_{n}{l}(r) = r^2 R^2, Z = {z}"),
            "r [nm]",
            "p [nm^-1]",
        );
        chart_p.add_series("p", table.iter().map(|s| (s.r, s.p)).collect());
        artifacts.push(Artifact::new("radial_density.svg", chart_p.to_svg()));
    }
    Ok(artifacts)
}

/// Operator selector exposed on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindChoice {
    N,
    Hn,
    APlus,
    AMinus,
    Rho,
    PRho,
    RhoPRho,
    Q,
    P,
}

impl KindChoice {
    pub fn operator_kind(&self) -> OperatorKind {
        match self {
            KindChoice::N => OperatorKind::Number,
            KindChoice::Hn => OperatorKind::Hn,
            KindChoice::APlus => OperatorKind::APlus,
            KindChoice::AMinus => OperatorKind::AMinus,
            KindChoice::Rho => OperatorKind::Rho,
            KindChoice::PRho => OperatorKind::PRho,
            KindChoice::RhoPRho => OperatorKind::RhoPRho,
            KindChoice::Q => OperatorKind::Q,
            KindChoice::P => OperatorKind::P,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            KindChoice::N => "n",
            KindChoice::Hn => "hn",
            KindChoice::APlus => "aplus",
            KindChoice::AMinus => "aminus",
            KindChoice::Rho => "rho",
            KindChoice::PRho => "p-rho",
            KindChoice::RhoPRho => "rho-p-rho",
            KindChoice::Q => "q",
            KindChoice::P => "p",
        }
    }
}

/// Dense matrix dump of one operator truncation.
pub fn cmd_matrix(kind: KindChoice, l: u32, n_max: u32, format: Format) -> Result<Vec<Artifact>> {
    let basis = TruncatedBasis::new(l, n_max)?;
    let matrix = build_operator::<f64>(kind.operator_kind(), basis)?;
    let artifact = match format {
        Format::Csv => Artifact::new("matrix.csv", matrix.to_csv()),
        Format::Json => {
            let mut doc: serde_json::Value =
                serde_json::from_str(&matrix.to_json()).expect("matrix json is valid");
            doc.as_object_mut()
                .expect("matrix json is an object")
                .insert("kind".into(), serde_json::Value::String(kind.as_str().into()));
            Artifact::new(
                "matrix.json",
                serde_json::to_string_pretty(&doc).expect("matrix serializes"),
            )
        }
    };
    Ok(vec![artifact])
}

#[derive(Serialize)]
struct CoherentCoefficient {
    n: u32,
    re: f64,
    im: f64,
    prob: f64,
}

#[derive(Serialize)]
struct CoherentRadialSample {
    r: f64,
    re: f64,
    im: f64,
    density: f64,
}

#[derive(Serialize)]
struct CoherentArtifact {
    l: u32,
    z: [f64; 2],
    constants: String,
    n_cut: u32,
    mean_occupation: f64,
    coefficients: Vec<CoherentCoefficient>,
    radial_samples: Vec<CoherentRadialSample>,
}

/// Coherent-state coefficients (and optional radial profile samples).
pub fn cmd_coherent(
    l: u32,
    z: C64,
    r_samples: usize,
    constants: ConstantsChoice,
    format: Format,
) -> Result<Vec<Artifact>> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(hydrogenic::Error::InvalidConfig(
            "coherent eigenvalue z must be finite".into(),
        ));
    }
    let cfg = constants.config(1)?;
    let state = CoherentState::<f64>::new(l, z);
    let coefficients: Vec<CoherentCoefficient> = state
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| CoherentCoefficient {
            n: l + 1 + i as u32,
            re: c.re,
            im: c.im,
            prob: c.norm_sqr(),
        })
        .collect();
    let occupation = mean_occupation(&state);
    let n_cut = state.n_cut();
    let radial: Vec<CoherentRadialSample> = if r_samples > 0 {
        let prof = CoherentRadial::new(state, &cfg)?;
        let r_max = prof.density_cutoff() / 10.0;
        let count = r_samples.max(2);
        (0..count)
            .map(|i| {
                let r = r_max * i as f64 / (count - 1) as f64;
                let v = prof.eval(r);
                CoherentRadialSample {
                    r,
                    re: v.re,
                    im: v.im,
                    density: r * r * v.norm_sqr(),
                }
            })
            .collect()
    } else {
        Vec::new()
    };

    let mut artifacts = Vec::new();
    match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = coefficients
                .iter()
                .map(|c| {
                    vec![
                        c.n.to_string(),
                        fmt_f64(c.re),
                        fmt_f64(c.im),
                        fmt_f64(c.prob),
                    ]
                })
                .collect();
            artifacts.push(Artifact::new(
                "coherent.csv",
                csv_table(&["n", "re", "im", "prob"], &rows),
            ));
            if !radial.is_empty() {
                let rows: Vec<Vec<String>> = radial
                    .iter()
                    .map(|s| {
                        vec![
                            fmt_f64(s.r),
                            fmt_f64(s.re),
                            fmt_f64(s.im),
                            fmt_f64(s.density),
                        ]
                    })
                    .collect();
                artifacts.push(Artifact::new(
                    "coherent_radial.csv",
                    csv_table(&["r", "re", "im", "density"], &rows),
                ));
            }
        }
        Format::Json => {
            let doc = CoherentArtifact {
                l,
                z: [z.re, z.im],
                constants: constants.as_str().to_string(),
                n_cut,
                mean_occupation: occupation,
                coefficients,
                radial_samples: radial,
            };
            artifacts.push(Artifact::new(
                "coherent.json",
                serde_json::to_string_pretty(&doc).expect("coherent serializes"),
            ));
        }
    }
    Ok(artifacts)
}

#[derive(Serialize)]
struct BesselPoint {
    x: f64,
    values: Vec<f64>,
}

#[derive(Serialize)]
struct BesselArtifact {
    l_values: Vec<u32>,
    points: Vec<BesselPoint>,
}

/// M_l(x) over requested orders and arguments.
pub fn cmd_bessel_m(
    l_list: &[u32],
    x_list: &[f64],
    format: Format,
    plot: bool,
) -> Result<Vec<Artifact>> {
    if l_list.is_empty() || x_list.is_empty() {
        return Err(hydrogenic::Error::InvalidConfig(
            "bessel-m needs at least one order and one argument".into(),
        ));
    }
    if let Some(&bad) = x_list.iter().find(|x| !x.is_finite() || **x < 0.0) {
        return Err(hydrogenic::Error::InvalidConfig(format!(
            "bessel-m arguments must be finite and >= 0, got {bad}"
        )));
    }
    let points: Vec<BesselPoint> = x_list
        .iter()
        .map(|&x| BesselPoint {
            x,
            values: l_list.iter().map(|&l| bessel_m::<f64>(l, x)).collect(),
        })
        .collect();
    let mut artifacts = Vec::new();
    match format {
        Format::Csv => {
            let mut header: Vec<String> = vec!["x".to_string()];
            header.extend(l_list.iter().map(|l| format!("M{l}")));
            let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows: Vec<Vec<String>> = points
                .iter()
                .map(|p| {
                    let mut row = vec![fmt_f64(p.x)];
                    row.extend(p.values.iter().map(|v| fmt_f64(*v)));
                    row
                })
                .collect();
            artifacts.push(Artifact::new("bessel_m.csv", csv_table(&header_refs, &rows)));
        }
        Format::Json => {
            let doc = BesselArtifact {
                l_values: l_list.to_vec(),
                points,
            };
            artifacts.push(Artifact::new(
                "bessel_m.json",
                serde_json::to_string_pretty(&doc).expect("bessel serializes"),
            ));
        }
    }
    if plot {
        let mut chart = LineChart::new("Coherent normalization constants M_l(x)", "x", "M_l");
        for &l in l_list {
            let series: Vec<(f64, f64)> = x_list
                .iter()
                .map(|&x| (x, bessel_m::<f64>(l, x)))
                .collect();
            chart.add_series(&format!("M{l}"), series);
        }
        artifacts.push(Artifact::new("bessel_m.svg", chart.to_svg()));
    }
    Ok(artifacts)
}
