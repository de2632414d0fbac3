//! Bound-state solver for the single-particle radial Schrodinger equation
//! with central potentials.
//!
//! The discretization is pseudospectral: the semi-infinite radial domain is
//! mapped onto `[-1, 1]` by an algebraic change of variable, the wavefunction
//! is collocated at Legendre-Gauss-Lobatto points, and the Dirichlet problem
//! becomes a dense symmetric matrix eigenproblem. Node spacing is nonuniform
//! (dense at small radius), which is what lets singular potentials such as
//! `1/r`, spiked oscillators and screened Coulomb interactions be handled on
//! one footing without regularization.
//!
//! Module layout mirrors the stages of a solve:
//!
//! * [`orthopoly`] - Legendre polynomials, Lobatto nodes/weights, cardinal
//!   functions and the exact first-derivative collocation matrix.
//! * [`mapping`] - the algebraic map `r(x)` with analytic derivatives.
//! * [`discretization`] - assembly of the symmetric Hamiltonian matrix.
//! * [`eigensolver`] - dense symmetric eigendecomposition.
//! * [`potentials`] - the potential catalog, singularity classification,
//!   closed-form reference energies and asymptotic series.
//! * [`observables`] - wavefunction reconstruction, node counts, densities,
//!   expectation values.
//! * [`analysis`] - spectrum drivers, parameter sweeps, critical screening
//!   constants, level-ordering studies.
//! * [`cli`] - command-line front end and the benchmark validation suite.

pub mod analysis;
pub mod cli;
pub mod discretization;
pub mod eigensolver;
pub mod error;
pub mod mapping;
pub mod matrix;
pub mod observables;
pub mod orthopoly;
pub mod potentials;
pub mod registry;

pub use error::GpsError;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, GpsError>;
