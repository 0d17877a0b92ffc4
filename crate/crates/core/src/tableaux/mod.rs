//! Ribbons, Young tableaux and dual immaculate tableaux.

pub mod immaculate;
pub mod ribbon;
pub mod tableau;

pub use immaculate::{
    dual_immaculate_tableaux, frozen_set, shapes, two_row_frozen_first, two_row_frozen_second, Frozen,
    FrozenTableau,
};
pub use ribbon::{
    collapse_count, cut_cell_splits, cut_edge_splits, decompositions, from_step_word, step_word,
    superstandard_word, transpose, Decomposition, Sep, Step,
};
pub use tableau::{
    column_superstandard, jdt_rectify, knuth_class, rsk_insert, standard_tableaux, standard_tableaux_of_size,
    SkewTableau, Tableau,
};
