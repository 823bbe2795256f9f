//! File formats and commands around `cellfuse-core`: group JSON files,
//! inline constructor requests, report JSON, and the batch verifier.

pub mod commands;
pub mod group_file;
pub mod report;
pub mod request;
pub mod verify;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 1;
    pub const VERIFICATION_FAILED: u8 = 2;
    pub const CAP_EXCEEDED: u8 = 3;
}
