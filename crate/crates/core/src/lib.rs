//! Combinatorial rank analysis for subsets of the Hamming space E_q^n.
//!
//! The rank of a finite set of words is the number of non-constant columns
//! of the matrix whose rows are the words, equivalently the dimension of the
//! smallest face of E_q^n containing the set. This crate computes ranks,
//! distance sums and per-column statistics ([`space`]), evaluates the exact
//! rational bounds tying rank to the distance sum ([`bounds`]), constructs
//! finite-field linear subspaces and their spans ([`field`]), finds
//! distance-preserving bijections ([`isometry`]), and decides metric
//! density — whether a set minimizes rank among all its isometric images —
//! by exact minimum-dimension realization search ([`density`]).

pub mod bounds;
pub mod density;
pub mod error;
pub mod field;
pub mod format;
pub mod isometry;
pub mod space;

pub use bounds::{
    bounds_report, max_column_contribution, min_column_contribution, rank_lower_bound,
    rank_upper_bound, BoundsReport, LowerBoundCase, Rational,
};
pub use density::{
    is_metrically_dense, min_embedding_dimension, realize_in_dimension, verify_witness,
    CertifiedBy, DensityVerdict, EmbeddingResult, EmbeddingStatus, RealizeOutcome, RealizeResult,
    SearchConfig, Verdict,
};
pub use error::{Error, Result};
pub use field::{is_uniform_columns, make_field, random_subspace, FieldSpec, GeneratorMatrix};
pub use format::{
    generator_matrix_to_string, parse_generator_matrix, parse_point_set, point_set_to_string,
};
pub use isometry::{is_isometric, IsometryWitness};
pub use space::{
    count_faces, hamming_distance, ColumnHistogram, DistanceMatrix, PointSet, SpaceParams, Word,
};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::space::PointSet;

    /// Four-point binary set with all pairwise distances 2 and rank 3.
    pub fn example_a() -> PointSet {
        PointSet::from_rows(
            2,
            4,
            vec![
                vec![0, 0, 0, 0],
                vec![0, 0, 1, 1],
                vec![0, 1, 0, 1],
                vec![0, 1, 1, 0],
            ],
        )
        .unwrap()
    }

    /// Isometric to [`example_a`] but with rank 4.
    pub fn example_b() -> PointSet {
        PointSet::from_rows(
            2,
            4,
            vec![
                vec![0, 0, 0, 0],
                vec![0, 0, 1, 1],
                vec![0, 1, 0, 1],
                vec![1, 0, 0, 1],
            ],
        )
        .unwrap()
    }
}
