//! Exact combinatorics of Young diagrams: hook length and skew dimensions,
//! excited diagrams, thick hook and stairs decompositions, Murnaghan–Nakayama
//! characters, and an exhaustive verification harness for the bounds these
//! quantities satisfy.

pub mod arith;
pub mod characters;
pub mod cli;
pub mod config;
pub mod cycle_type;
pub mod decomposition;
pub mod dimensions;
pub mod error;
pub mod excited;
pub mod harness;
pub mod partition;
pub mod render;

pub use cycle_type::{parse_cycle_type, CycleType};
pub use error::{Error, Result};
pub use partition::{parse_partition, Cell, Partition};
