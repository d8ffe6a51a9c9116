//! Exact combinatorics for K-theoretic Schubert calculus of Grassmannians.
//!
//! Set-valued tableaux, reverse plane partitions, tabloids and elegant
//! fillings; the inflated weight statistic; the maps between these
//! families; and three independent routes to the structure constants
//! `c_{λμ}^ν` of the stable Grothendieck basis.

pub mod bijections;
pub mod coefficients;
pub mod error;
pub mod expr;
pub mod fillings;
pub mod inflated;
pub mod render;
pub mod rsk;
pub mod shapes;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use fillings::{Constraint, Filling, FillingClass, Letter, Word};
pub use shapes::{Composition, Partition, SkewShape};
