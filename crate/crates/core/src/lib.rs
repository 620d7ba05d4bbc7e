pub mod abacus;
pub mod affine;
pub mod error;
pub mod genfunc;
pub mod partitions;
pub mod plot;
pub mod shi;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::Partition;
