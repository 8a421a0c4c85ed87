//! Exact combinatorics of triangular partitions.
//!
//! A partition is *triangular* when its cells are exactly the lattice cells
//! lying weakly below some line x/r + y/s = 1 with r, s > 0. This crate
//! provides the classification machinery (slope bounds, cutting lines,
//! integrality), the triangular Young lattice (covers, meet/join, dominance,
//! rays, moduli-region geometry), tau-Dyck path enumeration (counting,
//! q-area and (q,t) enumerators, first-return recurrence, Bizley sums),
//! two-variable Schur expansions with hook generating functions, and
//! tau-parking-function enumerators over the elementary basis.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals,
//! no floating point. The crate is `no_std` (with `alloc`).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dyck;
pub mod geometry;
pub mod oracle;
pub mod parking;
pub mod partition;
pub mod poly;
pub mod poset;
pub mod schur;

pub use dyck::{
    big_binomial, bizley_count, bizley_series, count_dyck, delta_enumerator, odot,
    q_area_enumerator, qt_enumerator, threeway_decompositions, BoundingWord, SubpartitionIter,
    ThreeWayDecomposition,
};
pub use geometry::{
    integral_partition, is_integral, is_triangular, partition_from_line, recover_line, sim,
    sim_cells, slope_bounds, tau_midpoint, CuttingLine, TriangularityCertificate,
};
pub use oracle::{slope_sweep_triangular, slope_sweep_witness};
pub use parking::{
    column_profile, parking_bizley_count, parking_bizley_series, parking_bizley_variant,
    parking_count, parking_enumerator, parking_enumerator_by_definition, EPolynomialVector,
    EVector,
};
pub use partition::{Cell, Dominance, Partition};
pub use poly::{qbinom, qint, BivariatePolynomial, Polynomial};
pub use poset::{
    addable_cells, diagonal, dominance_sorted, enumerate_triangular, hasse_graph, interior, join,
    join_in, lower_covers, meet, meet_in, ray_prefixes, region_profile, removable_cells,
    upper_covers, HasseGraph, HasseNode, Ray, RegionProfile, TriangularCensus,
};
pub use schur::{
    expand_schur, hook_generating_function, rho, two_row_schur, HookExpansion, SchurExpansion,
};

use core::fmt;

/// Errors reported by fallible operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Parts were not weakly decreasing.
    NonMonotonicParts,
    /// A part string failed to parse as a nonnegative integer.
    InvalidPart,
    /// The cell does not belong to the partition.
    CellNotInPartition,
    /// Dominance comparison requires equal sizes.
    SizeMismatch,
    /// The operation is defined for triangular partitions only.
    NotTriangular,
    /// The first partition does not contain the second.
    NotContained,
    /// The operation is undefined for the empty partition.
    EmptyPartition,
    /// Parking-function height must exceed the number of parts.
    HeightTooSmall,
    /// The pair of integers must be coprime.
    NonCoprime,
    /// An index or parameter lies outside its allowed range.
    OutOfRange(&'static str),
    /// A two-row shape (a, b) requires a >= b >= 0.
    InvalidShape,
    /// A Laurent specialization produced a negative exponent.
    ExponentUnderflow,
    /// A cutting line needs strictly positive intercepts.
    NonPositiveLine,
    /// A computed part does not fit in a 32-bit integer.
    PartTooLarge,
    /// The polynomial is not symmetric in q and t.
    NotSymmetric,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonMonotonicParts => write!(f, "parts must be weakly decreasing"),
            Error::InvalidPart => write!(f, "invalid partition part"),
            Error::CellNotInPartition => write!(f, "cell not in partition"),
            Error::SizeMismatch => write!(f, "partitions must have equal size"),
            Error::NotTriangular => write!(f, "partition is not triangular"),
            Error::NotContained => write!(f, "partition is not contained in the other"),
            Error::EmptyPartition => write!(f, "operation undefined for the empty partition"),
            Error::HeightTooSmall => write!(f, "height must exceed the number of parts"),
            Error::NonCoprime => write!(f, "integers must be coprime"),
            Error::OutOfRange(what) => write!(f, "out of range: {what}"),
            Error::InvalidShape => write!(f, "invalid two-row shape"),
            Error::ExponentUnderflow => write!(f, "negative exponent in specialization"),
            Error::NonPositiveLine => write!(f, "line intercepts must be positive"),
            Error::PartTooLarge => write!(f, "part does not fit in 32 bits"),
            Error::NotSymmetric => write!(f, "polynomial is not symmetric in q and t"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
