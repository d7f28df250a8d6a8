//! Algebraic numerics for hydrogen-like atoms.
//!
//! The bound problem of a single electron around a charge +Ze is solved here
//! entirely through the ladder algebra of the radial equation: the energy
//! spectrum, finite operator matrices in the |n l> basis, radial
//! wavefunctions generated by exact coefficient recurrences (with an
//! independent closed-form cross-check), coherent states normalized through
//! modified Bessel functions, and the uncertainty relations they saturate.
//!
//! All numeric kernels are generic over the scalar type via [`scalar::Real`]
//! (f32 or f64); the `*64` aliases at the crate root pin the f64 working
//! precision used by the CLI and the validation suites. Exact integer
//! arithmetic backs the wavefunction coefficient chains and moment integrals,
//! so golden comparisons are limited only by final rounding.
//!
//! Internally the algebra lives in dimensionless rho-space (hbar = 1,
//! lengths in Bohr radii); eV and nm enter only through
//! [`atom::AtomConfig`].

pub mod atom;
pub mod coherent;
mod error;
pub mod numerics;
pub mod operators;
pub mod radial;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Real;

pub use atom::{AtomConfig, ConstantsMode, LadderSign, QuantumNumbers, ScaledCoordinate};
pub use coherent::{BesselMTable, CoherentRadial, CoherentState};
pub use numerics::QuadratureSpec;
pub use operators::{OperatorKind, OperatorMatrix, TruncatedBasis};
pub use radial::{PolyExp, RadialFunction, SpatialWaveFunction, SpinProjection};

/// f64 working-precision aliases.
pub type AtomConfig64 = atom::AtomConfig<f64>;
pub type PolyExp64 = radial::PolyExp<f64>;
pub type RadialFunction64 = radial::RadialFunction<f64>;
pub type SpatialWaveFunction64 = radial::SpatialWaveFunction<f64>;
pub type OperatorMatrix64 = operators::OperatorMatrix<f64>;
pub type CoherentState64 = coherent::CoherentState<f64>;
pub type CoherentRadial64 = coherent::CoherentRadial<f64>;
pub type QuadratureSpec64 = numerics::QuadratureSpec<f64>;
pub type Complex64 = num_complex::Complex<f64>;
