pub mod error;
pub mod involution;
pub mod poset;
pub mod shapes;
pub mod symx;
pub mod tableaux;
pub mod upoly;

pub use error::{Error, Result};
