use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex;

use hla_cli::checks::{run_checks, Level};
use hla_cli::commands::{
    cmd_bessel_m, cmd_coherent, cmd_matrix, cmd_radial, cmd_spectrum, ConstantsChoice, Format,
    KindChoice,
};
use hla_cli::output::{resolve_output_dir, write_artifacts, Artifact};
use hydrogenic::coherent::BesselMTable;

#[derive(Parser)]
#[command(
    name = "hla",
    version,
    about = "Hydrogen-like-atom numerics: bound spectra, operator matrices, radial wavefunctions, coherent states, and a validation suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl FormatArg {
    fn into_format(self) -> Format {
        match self {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstantsArg {
    Paper,
    Codata,
}

impl ConstantsArg {
    fn into_choice(self) -> ConstantsChoice {
        match self {
            ConstantsArg::Paper => ConstantsChoice::Paper,
            ConstantsArg::Codata => ConstantsChoice::Codata,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    N,
    Hn,
    Aplus,
    Aminus,
    Rho,
    #[value(name = "p-rho")]
    PRho,
    #[value(name = "rho-p-rho")]
    RhoPRho,
    Q,
    P,
}

impl KindArg {
    fn into_choice(self) -> KindChoice {
        match self {
            KindArg::N => KindChoice::N,
            KindArg::Hn => KindChoice::Hn,
            KindArg::Aplus => KindChoice::APlus,
            KindArg::Aminus => KindChoice::AMinus,
            KindArg::Rho => KindChoice::Rho,
            KindArg::PRho => KindChoice::PRho,
            KindArg::RhoPRho => KindChoice::RhoPRho,
            KindArg::Q => KindChoice::Q,
            KindArg::P => KindChoice::P,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Bound energy spectrum table (n, E_n in eV, degeneracy 2n^2)
    Spectrum {
        #[arg(long = "Z", default_value_t = 1)]
        z: u32,
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "paper")]
        constants: ConstantsArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Radial wavefunction samples (r, R, p), optionally plotted
    Radial {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
        #[arg(long = "Z", default_value_t = 1)]
        z: u32,
        #[arg(long, default_value_t = 400)]
        samples: usize,
        /// Sampling endpoint in the configured length unit (defaults to a
        /// span covering every density bulge)
        #[arg(long)]
        r_max: Option<f64>,
        #[arg(long, value_enum, default_value = "paper")]
        constants: ConstantsArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        plot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dense truncation of one ladder-algebra operator
    Matrix {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        l: u32,
        /// Largest principal number in the basis (defaults to l + 8)
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coherent-state coefficients and optional radial profile
    Coherent {
        #[arg(long)]
        l: u32,
        /// Re(z) of the lowering-operator eigenvalue
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["z_abs", "z_arg"])]
        z_re: Option<f64>,
        /// Im(z)
        #[arg(long, allow_hyphen_values = true, requires = "z_re")]
        z_im: Option<f64>,
        /// |z| for polar input
        #[arg(long, requires = "z_arg")]
        z_abs: Option<f64>,
        /// arg(z) in radians for polar input
        #[arg(long, allow_hyphen_values = true, requires = "z_abs")]
        z_arg: Option<f64>,
        #[arg(long, default_value_t = 0)]
        r_samples: usize,
        #[arg(long, value_enum, default_value = "paper")]
        constants: ConstantsArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coherent normalization constants M_l over an x grid
    BesselM {
        /// Comma-separated orders
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3,4,5")]
        l_list: Vec<u32>,
        /// Comma-separated arguments (defaults to 0.0..=5.0 step 0.1)
        #[arg(long, value_delimiter = ',')]
        x_list: Option<Vec<f64>>,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        #[arg(long)]
        plot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the validation suite (exit 0 pass / 1 any failure)
    Validate {
        #[arg(long, value_enum, default_value = "fast")]
        level: LevelArg,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Domain-validation problems are usage errors (2); everything else is a
/// runtime failure (1).
fn error_exit_code(e: &hydrogenic::Error) -> u8 {
    use hydrogenic::Error;
    match e {
        Error::InvalidQuantumNumbers { .. }
        | Error::InvalidConfig(_)
        | Error::InvalidHarmonicOrder { .. }
        | Error::BasisTooSmall { .. }
        | Error::OutOfTruncation { .. }
        | Error::InsufficientHeadroom { .. }
        | Error::DivergentMoment { .. } => 2,
        _ => 1,
    }
}

fn emit(artifacts: hydrogenic::Result<Vec<Artifact>>, out: Option<PathBuf>) -> ExitCode {
    match artifacts {
        Ok(artifacts) => {
            let dir = resolve_output_dir(out.as_deref());
            match write_artifacts(&dir, &artifacts) {
                Ok(paths) => {
                    for p in paths {
                        println!("wrote {}", p.display());
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: cannot write artifacts: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Spectrum {
            z,
            n_max,
            constants,
            format,
            out,
        } => emit(
            cmd_spectrum(z, n_max, constants.into_choice(), format.into_format()),
            out,
        ),
        Command::Radial {
            n,
            l,
            z,
            samples,
            r_max,
            constants,
            format,
            plot,
            out,
        } => emit(
            cmd_radial(
                n,
                l,
                z,
                samples,
                r_max,
                constants.into_choice(),
                format.into_format(),
                plot,
            ),
            out,
        ),
        Command::Matrix {
            kind,
            l,
            n_max,
            format,
            out,
        } => emit(
            cmd_matrix(
                kind.into_choice(),
                l,
                n_max.unwrap_or(l + 8),
                format.into_format(),
            ),
            out,
        ),
        Command::Coherent {
            l,
            z_re,
            z_im,
            z_abs,
            z_arg,
            r_samples,
            constants,
            format,
            out,
        } => {
            let z = match (z_re, z_abs) {
                (Some(re), None) => Complex::new(re, z_im.unwrap_or(0.0)),
                (None, Some(abs)) => {
                    if abs < 0.0 {
                        eprintln!("error: --z-abs must be a non-negative modulus");
                        return ExitCode::from(2);
                    }
                    Complex::from_polar(abs, z_arg.unwrap_or(0.0))
                }
                (None, None) => Complex::new(0.0, 0.0),
                (Some(_), Some(_)) => unreachable!("clap conflicts prevent mixed z input"),
            };
            emit(
                cmd_coherent(
                    l,
                    z,
                    r_samples,
                    constants.into_choice(),
                    format.into_format(),
                ),
                out,
            )
        }
        Command::BesselM {
            l_list,
            x_list,
            format,
            plot,
            out,
        } => {
            let xs =
                x_list.unwrap_or_else(|| (0..=50).map(|i| f64::from(i) * 0.1).collect::<Vec<_>>());
            emit(cmd_bessel_m(&l_list, &xs, format.into_format(), plot), out)
        }
        Command::Validate { level, format, out } => {
            let level = match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            };
            let report = run_checks(level, &BesselMTable::embedded());
            match format {
                ReportFormatArg::Text => {
                    print!("{}", report.to_text());
                }
                ReportFormatArg::Json => {
                    let dir = resolve_output_dir(out.as_deref());
                    let artifact = Artifact::new("validation.json", report.to_json());
                    match write_artifacts(&dir, &[artifact]) {
                        Ok(paths) => println!("wrote {}", paths[0].display()),
                        Err(e) => {
                            eprintln!("error: cannot write report: {e}");
                            return ExitCode::from(1);
                        }
                    }
                }
            }
            ExitCode::from(u8::try_from(report.exit_code()).unwrap_or(1))
        }
    }
}
