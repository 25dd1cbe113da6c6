//! File formats, sessions, command line and HTTP service for `qck-core`.

pub mod json;
pub mod ops;
pub mod server;
pub mod session;
