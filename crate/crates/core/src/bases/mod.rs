//! Circuits, Graver bases, indispensable moves and Markov bases.

mod circuits;
mod graver;
mod indispensable;
mod markov;

pub use circuits::circuits;
pub use graver::graver;
pub use indispensable::indispensables;
pub use markov::{
    is_minimal_markov, markov_fibers, minimal_markov_bases, universal_markov, verify_markov, verify_markov_exhaustive,
    MarkovCheck, MarkovFiber,
};
