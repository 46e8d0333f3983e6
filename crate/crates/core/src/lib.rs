pub mod analysis;
pub mod cli;
pub mod error;
pub mod export;
pub mod pitch;
pub mod position;
pub mod properties;
pub mod run_length;
pub mod sequence;

pub use error::{Error, Result};
pub use run_length::{eval_closed_form, Run, RunLengthWord};
pub use sequence::{expand_morphism, Block, Branch, RadixRecurrence};
