//! Output record types shared between the binary and its tests.

pub mod records;
