//! Exact intersection theory for Fano manifolds and their polarized minimal
//! families of rational curves.
//!
//! The crate is layered bottom-up:
//!
//! * [`numeric`]: rationals, Bernoulli numbers, Todd coefficients.
//! * [`rings`] and [`schubert`]: truncated graded Chow-ring models.
//! * [`bundles`]: Chern class and Chern character calculus.
//! * [`minimalfamily`]: Chern characters of the family of minimal rational
//!   curves through a general point, and the symbolic universal-family ring.
//! * [`catalog`]: polarized pairs with explicit nef and Mori cones.
//! * [`families`]: the example families (complete intersections,
//!   Grassmannians and their isotropic relatives, `G2/P`, products).

pub mod bundles;
pub mod catalog;
pub mod checks;
pub mod error;
pub mod families;
pub mod minimalfamily;
pub mod numeric;
pub mod rings;
pub mod schubert;

pub use error::{Error, Result};
pub use numeric::Rational;
