//! Littlewood-Richardson fillings of skew shapes and two partial orders
//! on them.
//!
//! The library covers four layers:
//!
//! * [`partitions`]: integer partitions, skew shapes, strip
//!   classification, and the dominance order on partitions.
//! * [`tableaux`]: LR fillings of a skew shape with a given content,
//!   their column words, partition sequences, the dominance order on
//!   fillings, and decreasing box moves together with the order they
//!   generate.
//! * [`bruhat`]: permutations, Bruhat order, reduced words, the
//!   standardization map that identifies fillings of a rook strip with
//!   permutations in a parabolic quotient, and a chain construction
//!   through Bruhat covers.
//! * [`orders`]: a second chain construction working directly on column
//!   words, Hasse diagram construction with DOT and JSON export,
//!   extremal fillings, gradedness checks, and exhaustive verification
//!   sweeps over small instances.
//!
//! Fillings use matrix coordinates: rows are numbered from 1 at the top,
//! columns from 1 at the left, and a skew shape holds the boxes of the
//! outer partition that are not boxes of the inner one.

pub mod bruhat;
mod error;
pub mod orders;
pub mod partitions;
pub mod tableaux;

pub use error::Error;
