//! Exact intersection theory for lines on complete intersections and
//! embedding orders of Fano varieties.
//!
//! The crate is organised bottom-up:
//!
//! - [`schubert`]: the cohomology ring of the Grassmannian `G(2, m)` in the
//!   Schubert basis (rank-2 Pieri rules, integration, Plücker degrees).
//! - [`chern`]: polynomials in the Chern classes `c1`, `c2` of the rank-2
//!   tautological quotient bundle, and the top Chern class of its symmetric
//!   powers (closed formula checked against a splitting-principle expansion).
//! - [`lines`]: existence, count and family dimension of lines on a generic
//!   complete intersection in projective space.
//! - [`fano_ci`]: jet order of the anticanonical bundle of a Fano complete
//!   intersection, its degree, and section counts from the Hilbert series.
//! - [`bounds`]: numerical necessary conditions for k-very ampleness.
//! - [`catalog`]: classified pairs `(X, L)` with k-very ample `L`, every
//!   invariant recomputed and bound-checked, plus the adjunction outcome table.
//! - [`report`]: serializable reports shared by the command-line front end.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod bounds;
pub mod catalog;
pub mod chern;
pub mod decimal;
mod error;
pub mod fano_ci;
pub mod lines;
pub mod report;
pub mod schubert;

pub use bounds::{BoundsVerdict, PolarizedInvariants};
pub use catalog::{AdjunctionOutcome, CatalogEntry, Construction, EntryFilter, VerifyReport};
pub use chern::ChernPolynomial;
pub use error::{Error, Result};
pub use fano_ci::EmbeddingOrderReport;
pub use lines::{CompleteIntersection, LineCount};
pub use schubert::{CohomologyElement, SchubertClass};
