#![no_std]
extern crate alloc;

pub mod algsolve;
pub mod arith;
pub mod branch;
pub mod charring;
pub mod closedform;
pub mod compactcert;
pub mod cyclotomic;
pub mod error;
pub mod invder;
pub mod poly;
pub mod rootdata;
pub mod su2asym;
pub mod upoly;

pub use error::{Error, Result};
