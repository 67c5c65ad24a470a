//! Goldman bracket and Turaev cobracket of free homotopy classes of loops on
//! a genus-`g` surface with one boundary component, computed combinatorially
//! from words in the generators `a_k`, `b_k`.
//!
//! Loops are words over `{a_k, b_k, a_k^-1, b_k^-1}`; their classes are
//! [`CyclicWord`]s. The linking number of two partitions of a word is read off
//! the order of gates on the boundary of a disk around the base point
//! ([`diagram`]), and the cobracket and bracket are sums over partition
//! pairs weighted by those linking numbers ([`bialgebra`]).

pub mod bialgebra;
pub mod diagram;
pub mod error;
pub mod json;
pub mod lincomb;
pub mod sweep;
pub mod word;

pub use bialgebra::{bracket, bracket_words, cobracket, cobracket_word};
pub use diagram::{lk_pair, lk_self, Diagram, Gate, Partition, Tag};
pub use error::{Error, Result};
pub use lincomb::{LinComb, TensorComb};
pub use word::{CyclicWord, Family, Letter, Word};
