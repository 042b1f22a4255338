//! Bit-level building blocks: bit vectors with rank/select, packed integer
//! arrays, a choice dictionary, static space allocation, variable-width
//! arrays and balanced parentheses.

mod balparen;
mod bitvec;
mod choice;
mod intvec;
mod rank;
mod static_alloc;
mod varvec;

pub use balparen::BalParen;
pub use bitvec::{BitVec, Ones};
pub use choice::ChoiceDict;
pub use intvec::{bits_for, IntVec};
pub use rank::{select_in_word, RankSelect};
pub use static_alloc::{Census, StaticAlloc};
pub use varvec::VarVec;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuccinctError {
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("ordinal {ordinal} exceeds popcount {ones}")]
    OrdinalOutOfRange { ordinal: usize, ones: usize },
    #[error("{0} is not a key of the static allocation")]
    NotAKey(usize),
    #[error("parenthesis sequence is not balanced")]
    Unbalanced,
    #[error("position {0} does not hold a parenthesis of the queried kind")]
    NotAParen(usize),
    #[error("no matching parenthesis for position {0}")]
    Unmatched(usize),
}
