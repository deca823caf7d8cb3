//! Exact arithmetic for symplectic capacities of rational surfaces.
//!
//! The library works in the second (co)homology of `CP² # n·CP̄²` with the
//! standard basis `{H, E₁, …, Eₙ}` and computes
//!
//! * the tamed capacities `f_k`, as the exact minimum of symplectic area
//!   over integer classes of index `≥ 2k` pairing positively with `H`
//!   ([`capacity::capacity_fk`]),
//! * the finite minimizer sets that present each `f_k` as a tropical
//!   polynomial (a minimum of affine forms) over the c₁-nef cone
//!   ([`tropical::minimizer_set`]),
//! * Cremona reduction of symplectic classes to the fundamental domain of
//!   the canonical-class-preserving symmetry group ([`cremona::reduce`]),
//! * ECH capacities of rational convex toric domains through weight
//!   sequences ([`toric`]), cross-validated against `f_k` on the closed
//!   toric surface.
//!
//! All homology coefficients are integers and all cohomology coefficients
//! are arbitrary-precision rationals, so every comparison made here is
//! exact; there is no floating point anywhere in the computational paths.
//!
//! ```
//! use capcalc::{capacity_fk, CohomClass};
//!
//! // f_2 at ω = (1 | 1/2) is 1, attained by both H and 2H − 2E₁.
//! let omega: CohomClass = "1;1/2".parse().unwrap();
//! let result = capacity_fk(&omega, 2).unwrap();
//! assert_eq!(result.value.to_string(), "1");
//! let witnesses: Vec<String> = result.witnesses.iter().map(|w| w.to_string()).collect();
//! assert_eq!(witnesses, ["1;0", "2;2"]);
//! ```

pub mod capacity;
pub mod cremona;
mod error;
pub mod lattice;
pub mod rational;
pub mod toric;
pub mod tropical;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub use capacity::{capacity_fk, CapacityResult};
pub use cremona::{reduce, Reduced, ReductionStep, ReductionTrace};
pub use lattice::{canonical_class, CohomClass, HomologyClass};
pub use toric::{Polygon, WeightSequence};
pub use tropical::TropicalCapacity;
