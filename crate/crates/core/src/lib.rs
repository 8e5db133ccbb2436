pub mod arith;
pub mod catalog;
pub mod cli;
pub mod contraction;
pub mod gt;
pub mod lie;
pub mod report;
