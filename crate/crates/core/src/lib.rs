//! Exact growth ratios of regular mosaics.
//!
//! Starting from a Schläfli symbol the crate builds the face-incidence matrix
//! `K`, the sieve matrix `G` and the belt recurrence matrix `M`, iterates the
//! recurrence `w_{i+1} = M w_i` in unbounded integers and certifies the
//! dominant eigenvalue of `M` with rational interval arithmetic. The dominant
//! eigenvalue `z1` is the limit of successive belt-size ratios and
//! `(z1 - 1) / z1` is the limit of the belt-to-ball density.
//!
//! Everything here is pure computation on `alloc` types; IO, report formats
//! and the command-line front end live in the companion `mosaic-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod decimal;
pub mod error;
pub mod growth;
pub mod incidence;
pub mod interval;
pub mod matrix;
pub mod oracle2d;
pub mod poly;
pub mod roots;
pub mod schlafli;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use growth::{BeltCounts, BeltSeries, GrowthMatrix, Start};
pub use incidence::{IncidenceMatrix, KIdentityReport};
pub use interval::Interval;
pub use matrix::IntMatrix;
pub use poly::Poly;
pub use roots::{RealRoot, RootSet};
pub use schlafli::{GeometryClass, SchlafliSymbol};
pub use spectral::{CharPoly, EigenDecomposition, HypothesisReport, QuadraticSurd, SpectralResult};

/// The nine hyperbolic mosaics with bounded cells in dimensions 3 and 4.
pub const BOUNDED_HYPERBOLIC: [&[u32]; 9] = [
    &[4, 3, 5],
    &[5, 3, 4],
    &[3, 5, 3],
    &[5, 3, 5],
    &[3, 3, 3, 5],
    &[5, 3, 3, 3],
    &[4, 3, 3, 5],
    &[5, 3, 3, 4],
    &[5, 3, 3, 5],
];
