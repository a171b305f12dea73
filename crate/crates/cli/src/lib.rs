//! Library side of the `fracspec` binary: flag types, file formats, and
//! the command implementations, exposed for integration testing.

pub mod args;
pub mod commands;
pub mod fail;
pub mod formats;
