pub mod cartan;
pub mod cli;
pub mod crystal;
pub mod error;
pub mod fock;
pub mod freudenthal;
pub mod satake;
mod signature;
