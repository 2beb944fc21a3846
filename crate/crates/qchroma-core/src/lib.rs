//! Exact arithmetic for q-chromatic polynomials of labeled graphs.
//!
//! The q-chromatic polynomial of a graph G on vertex set {1..d} with respect to a
//! linear form lambda is
//!
//! ```text
//!     chi_G^lambda(q, n) = sum over proper colorings c: [d] -> [n] of q^(lambda . c)
//! ```
//!
//! Everything in this crate is computed exactly: polynomials in q carry
//! arbitrary-precision integer coefficients and exponents, and every identity
//! is checkable against brute-force enumeration at desk scale.
//!
//! Module map:
//! - [`graph`]: labeled graphs, proper colorings, deletion-contraction, acyclic
//!   orientations, induced posets, natural labelings, linear extensions.
//! - [`qpoly`]: sparse polynomials in q ([`QPoly`]), reduced rational functions
//!   ([`QRat`]), and numerators of rational generating functions ([`ZNumerator`]),
//!   together with q-integers, q-factorials, and Gaussian binomials.
//! - [`gstats`]: rank functions, G-descents/G-ascents, G-sequences, and the
//!   half-open cone decomposition of the proper-coloring region.
//! - [`genfunc`]: the q-chromatic polynomial itself — brute-force oracle,
//!   permutation-sum generating functions, the q-binomial basis for the
//!   all-ones form, and the polynomial in `[n]_q` with coefficients in Q(q).
//! - [`orient`]: the bijection between permutations and pairs (acyclic
//!   orientation, linear extension), the reversal involution, order-polytope
//!   lattice-point sums, and Stanley's W_P(q).
//! - [`apps`]: minimum sum coloring, the G-major index polynomial and its
//!   degree law, and the base-k fingerprint that distinguishes labeled graphs.

pub mod apps;
pub mod genfunc;
pub mod graph;
pub mod gstats;
pub mod orient;
pub mod qpoly;

pub use apps::{
    distinguish, fingerprint, g_major_polynomial, min_sum_coloring, tree_degree_bounds,
    Fingerprint, MinSumResult,
};
pub use genfunc::{
    brute_chi, chi_ones_qbinom, chi_tilde, chung_graham, leading_coeff_formula, numerator_ones,
    palindromicity_check, perm_terms, series_chi, symmetry_check, ChiTilde, LinearForm, PermTerm,
};
pub use graph::{
    acyclic_orientations, chromatic_number, chromatic_polynomial_dc, delta_stat, induced_poset,
    labeled_trees, linear_extensions, proper_colorings, rank_labeling, Coloring, Graph, IntPoly,
    Labeling, Orientation, Poset,
};
pub use gstats::{
    cone_contains, g_sequence, g_sequence_coloring, g_statistics, locate_point, rank_of_partition,
    rank_of_permutation, GStatProfile, LatticePoint, OrderedSetPartition, Permutation,
    RankFunction,
};
pub use orient::{
    numerator_double_sum, order_polytope_ehr_open, phi, phi_inverse, pi_rank_orientation,
    reverse_pair, verify_qehrhart_lemma, w_poly, LabelingScheme, OrientationPair,
};
pub use qpoly::{qbinomial, qfactorial, qint, series_coeffs, QPoly, QRat, ZNumerator};

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed graph file or invalid graph data.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    /// A generator was called with inadmissible size parameters.
    #[error("invalid size parameters: {0}")]
    InvalidSize(String),
    /// An edge orientation contains a directed cycle.
    #[error("orientation contains a directed cycle")]
    CyclicOrientation,
    /// A labeling is not a natural labeling of the given poset.
    #[error("labeling is not natural for the poset")]
    NotNatural,
    /// A word is not a linear extension of the given labeled poset.
    #[error("word is not a linear extension of the labeled poset")]
    NotLinearExtension,
    /// A permutation word is not a bijection on 1..=d.
    #[error("invalid permutation word: {0}")]
    InvalidPermutation(String),
    /// A lattice point has the wrong number of coordinates.
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// A point fails membership in the homogenized proper-coloring region.
    #[error("point is not an interior lattice point of the coloring region: {0}")]
    PointOutsideRegion(String),
    /// An S_d-scale enumeration would exceed the configured cap.
    #[error("enumeration over S_{d} exceeds the cap of {max} (pass an explicit override to accept the cost)")]
    CapExceeded { d: usize, max: usize },
    /// Division by a zero polynomial or rational function.
    #[error("zero denominator")]
    ZeroDenominator,
    /// A shift would produce a negative exponent.
    #[error("shift produces a negative exponent")]
    NegativeExponent,
    /// The operation requires a tree input.
    #[error("input graph is not a tree")]
    NotATree,
    /// Fingerprint base too small or mismatched vertex counts.
    #[error("invalid fingerprint parameters: {0}")]
    InvalidFingerprint(String),
}

/// Cap on S_d-scale enumerations (permutation sums and friends).
///
/// The default refuses d > 10, since 10! is already 3.6M permutations; callers
/// that accept the cost can raise or remove the cap explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCap {
    max_d: usize,
}

impl EnumCap {
    pub const DEFAULT_MAX_D: usize = 10;

    /// Cap with an explicit maximum d.
    pub fn with_max(max_d: usize) -> Self {
        EnumCap { max_d }
    }

    /// No cap. "I accept the cost."
    pub fn unlimited() -> Self {
        EnumCap { max_d: usize::MAX }
    }

    pub fn max_d(&self) -> usize {
        self.max_d
    }

    /// Fail if an S_d enumeration would exceed the cap.
    pub fn check(&self, d: usize) -> Result<(), Error> {
        if d > self.max_d {
            Err(Error::CapExceeded { d, max: self.max_d })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumCap {
    fn default() -> Self {
        EnumCap {
            max_d: Self::DEFAULT_MAX_D,
        }
    }
}
