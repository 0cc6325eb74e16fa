//! Exact scalars, dense and sparse exact linear algebra, Smith normal form.

mod linalg;
mod matrix;
mod ring;
mod snf;
mod sparse;
mod summary;

pub use linalg::{
    image_basis, intersect_spans, kernel_basis, left_inverse, rank, row_echelon, same_column_span, solve,
    span_contains, SummandBasis,
};
pub use matrix::{ExactMatrix, DENSE_LIMIT};
pub use ring::{Ring, Scalar};
pub use snf::{inverse, snf, SmithForm};
pub use sparse::{cokernel, normalize, rank_and_torsion, Cokernel, SparseMatrix, SparseVec};
pub use summary::{
    homology_of_pair, kernel_of_rows, quotient_presentation, sparse_quotient_presentation, HomologySummary,
    QuotientPresentation,
};
