//! Exact certificates for the failure of Kodaira vanishing on cyclic covers
//! of ruled surfaces in positive characteristic.
//!
//! Everything here is numerical bookkeeping over the rationals: divisor
//! classes are tracked by their coordinates in small intersection lattices,
//! direct images are tracked by their summand invariants, and each
//! nonvanishing claim is certified by an integer identity that forces a
//! global section of an explicit bundle on the base curve. No scheme is ever
//! constructed, and no cohomology group is computed from first principles;
//! the point of the crate is that the interesting statements reduce to exact
//! arithmetic that can be replayed and audited.
//!
//! The construction is parametrized by a triple `(p, g, l)`, see
//! [`params::ConstructionParams`]. All results are conditional on the
//! existence of a genus-`g` Tango curve in characteristic `p`; the reports
//! say so explicitly.
//!
//! Module map:
//! * [`params`]: admissible triples and derived invariants.
//! * [`picard`]: numerical divisor classes and intersection numbers on the
//!   ruled surface and on its cyclic cover.
//! * [`pushforward`]: direct-image decompositions under the cover map,
//!   including the refutation of an erroneous variant by Euler
//!   characteristics.
//! * [`cohomology`]: direct images on the base curve, the Leray
//!   identification of `H^1`, and section witnesses for the nonvanishing
//!   theorems.
//! * [`pathology`]: the non-nef direct image of the relative dualizing
//!   sheaf, the Kollár-vanishing violation, and auxiliary numerology for
//!   inseparable covers.
//! * [`dossier`]: assembles the above into a serializable report.

pub mod cohomology;
pub mod dossier;
pub mod params;
pub mod pathology;
pub mod picard;
pub mod pushforward;

/// Exact rational scalar used throughout.
///
/// Coordinates and intersection numbers in this crate stay far below the
/// `i64` range for every admissible input the CLI accepts, so a fixed-width
/// rational is enough as long as arithmetic stays exact.
pub type Rat = num_rational::Rational64;

/// Shorthand for `Rat::from_integer`.
pub fn rat(x: i64) -> Rat {
    Rat::from_integer(x)
}

pub use cohomology::{CurveBundle, IndexedBundle, SectionRule, Witness};
pub use params::{enumerate_params, validate, ConstructionParams, ParamError};
pub use picard::{DivClassP, DivClassX};
pub use pushforward::{Decomposition, PSummand, Provenance};
