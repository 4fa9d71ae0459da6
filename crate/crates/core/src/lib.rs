pub mod clifford;
pub mod error;
pub mod poly;
pub mod radial;
pub mod rational;
pub mod rootsys;
pub mod linalg;
pub mod dunkl;
pub mod monogenic;
pub mod jacobi;
pub mod constants;
pub mod gegenbauer;
pub mod integration;
pub mod json;
pub mod suite;
