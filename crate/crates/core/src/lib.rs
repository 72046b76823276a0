//! Exact arithmetic for the seminormal basis of dual Specht modules of the
//! symmetric groups: basis vectors, transition coefficients against the
//! standard (polytabloid) basis, and denominators.
//!
//! The crate is organised bottom-up:
//!
//! * [`combinat`]: partitions, compositions, tableaux, dominance, up-arrow
//!   tableaux and the colour/weight bookkeeping used by the closed formulas;
//! * [`permalg`]: permutations and the sparse rational group algebra;
//! * [`specht`]: the dual Specht module in its standard basis, with memoized
//!   Garnir straightening;
//! * [`seminormal`]: the seminormal basis via its characterising recursion,
//!   transition rows, `D` elements and denominators;
//! * [`formulas`]: closed formulas and reduction rules, each independent of
//!   the recursion so the two can be compared;
//! * [`oracle`]: brute-force verifiers and parameter sweeps;
//! * [`cli`]: the command-line front end.
//!
//! All arithmetic is exact (`BigRational`). With the default `parallel`
//! feature, batch computations and sweeps run on rayon; without it the same
//! entry points run sequentially.

pub mod cli;
pub mod combinat;
mod error;
pub mod exec;
pub mod formulas;
pub mod oracle;
pub mod permalg;
pub mod rational;
pub mod seminormal;
pub mod specht;

pub use combinat::{Composition, Node, Partition, Tableau};
pub use error::{Error, Result};
pub use exec::Execution;
pub use permalg::{AlgebraElement, Permutation};
pub use rational::Rational;
pub use seminormal::{Engine, SeminormalBasis, TransitionRow};
pub use specht::{SpechtModule, SpechtVector};
