// SPDX-License-Identifier: Apache-2.0

//! File formats, the threaded attack runner, the self-test, and the command
//! line front end for `grcrypt-core`.

pub mod cli;
pub mod formats;
pub mod runner;
pub mod selftest;

pub use cli::{run, Exit};
