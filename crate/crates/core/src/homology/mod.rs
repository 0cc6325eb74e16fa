//! Bar complexes for partial and ordinary group (co)homology, and the comparison drivers.

mod bar;
mod compare;
mod complex;

pub use bar::{
    bar_faces, global_bar_complex, global_cochain_complex, partial_bar_complex, partial_cochain_complex, word_epsilon,
    Face,
};
pub use compare::{
    compare_cohomology, compare_homology, partial_cohomology, partial_homology, shapiro_check, Comparison,
};
pub use complex::{ChainComplex, CochainComplex, CHAIN_LIMIT};
