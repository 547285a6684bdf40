//! Exports and verification suites for the `fibo-rook` command.

pub mod format;
pub mod verify;
