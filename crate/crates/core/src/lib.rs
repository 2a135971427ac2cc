#![allow(clippy::needless_range_loop)]

pub mod double_symfunc;
pub mod error;
pub mod fq_oracle;
pub mod hall_bimodule;
pub mod lincomb;
pub mod lusztig_shoji;
pub mod par;
pub mod partition;
pub mod poly;
pub mod symfunc;
pub mod tableaux;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{DoublePartition, Partition};
pub use poly::{IntPoly, RatFn, Rational};
