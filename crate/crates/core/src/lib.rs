//! Deformation theory of Lagrangian tori inside the singular locus of
//! log-symplectic 4-manifolds, computed spectrally on the 2-torus.
//!
//! The library is organized around a bandlimited Fourier algebra on `T^2`
//! ([`fourier`]), foliated calculus for the fibration and Kronecker
//! foliations ([`foliated`]), twisted cohomology diagnostics
//! ([`cohomology`]), the deformation DGLA with Maurer-Cartan, Kuranishi,
//! gauge and prolongation machinery ([`dgla`]), Liouville-number
//! certificates and the small-divisor counterexample bundle
//! ([`diophantine`]), and an independent symbolic Schouten-bracket layer on
//! the coordinate model `T^2 x R^2` ([`schouten`]) that cross-checks the
//! spectral computations exactly.

pub mod cohomology;
pub mod dgla;
pub mod diophantine;
pub mod error;
pub mod exact;
pub mod foliated;
pub mod fourier;
pub mod schouten;

pub use error::{Error, Result, Tolerances};
pub use exact::{Coeff, ExactComplex, ExactReal, RatInterval};
pub use foliated::{FoliatedOneForm, FoliationSpec, LambdaValue, ModelData, XField};
pub use fourier::{BandLimit, CkNorm, FourierScalar};
