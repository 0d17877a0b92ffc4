//! Compositions, ordered set partitions, words, permutations and shuffles.

mod composition;
mod osp;
mod quasishuffle;
mod word;

pub use composition::{coarsenings, compositions_of, compositions_up_to, partitions_of, reversal, Composition};
pub use osp::{ordered_set_partitions, ordered_set_partitions_of, OrderedSetPartition};
pub use quasishuffle::{quasishuffle, quasishuffle_compositions, QPart};
pub use word::{
    colayered_layers, concat_lc, delta, descent_composition, eta, multishuffle, rotate180, shift, shuffle,
    shuffle_lc, standardize, Permutation, Word,
};
