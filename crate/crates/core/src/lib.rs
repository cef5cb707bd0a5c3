//! Farey subsequences of Boolean lattices and the layer structure of tope
//! committees for simple oriented matroids.
//!
//! The crate is organised bottom-up:
//!
//! - [`farey`]: exact fractions, standard and Boolean-lattice Farey
//!   subsequences, neighbor formulas, three-term recurrences, bijections and
//!   symmetry identities.
//! - [`om`]: tope sets of simple oriented matroids, realized from central
//!   hyperplane arrangements by exact Fourier-Motzkin feasibility.
//! - [`committees`]: brute-force enumeration of tope committees by layer and
//!   verifiers for the two layer decompositions.
//! - [`schemes`]: Johnson, crosspolytope-layer and Hamming scheme parameters
//!   with exhaustive counting oracles.
//! - [`exec`]: the sequential/parallel execution switch shared by the
//!   data-parallel sweeps.

pub mod committees;
pub mod exec;
pub mod farey;
pub mod om;
pub mod report;
pub mod schemes;

pub use committees::{Committee, CommitteeFamily};
pub use exec::{Guard, Strategy};
pub use farey::{Fraction, FareySeq};
pub use om::{Arrangement, Sign, SignVector, ToposSystem};
pub use report::Report;
pub use schemes::SchemeKind;
