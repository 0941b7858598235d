//! Command-line front end: the input document format, reports, commands,
//! brute-force oracles and the built-in self-test.

pub mod commands;
pub mod doc;
pub mod oracle;
pub mod report;
pub mod selftest;
