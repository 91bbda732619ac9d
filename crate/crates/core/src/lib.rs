pub mod atoms;
pub mod base;
pub mod cli;
pub mod ctd;
pub mod diagram;
pub mod error;
pub mod oracle;
pub mod render;
pub mod roots;
pub mod tails;
pub mod weight;
