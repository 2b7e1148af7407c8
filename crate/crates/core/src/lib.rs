pub mod algebra;
pub mod arith;
pub mod decomposition;
pub mod diagram;
pub mod error;
pub mod tensor;

pub use error::{Error, Result};
