//! McKay quivers of the complex reflection groups G(r,p,n), an exact
//! character-theoretic oracle to cross-check them, and Lusztig algebras
//! (labelled quivers with quadratic relations) of explicit finite matrix
//! groups.
//!
//! All arithmetic is exact: rationals and cyclotomic numbers throughout,
//! no floating point in any computation path.

pub mod characters;
pub mod clifford;
pub mod cyclotomic;
pub mod linalg;
pub mod lusztig;
pub mod mckay;
pub mod partitions;

pub use cyclotomic::{Cyclo, Rational};
pub use partitions::{CellRef, MultiPartition, Partition};
