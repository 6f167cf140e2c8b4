// SPDX-License-Identifier: Apache-2.0

//! Cryptanalysis of Diffie–Hellman key exchange over `Mat3(F7[S5])`.
//!
//! The group ring `F7[S5]` is semisimple, so the linear extension of the seven
//! irreducible representations of `S5` is an algebra isomorphism onto a direct
//! sum of matrix algebras over `F7`. Lifting a 3×3 matrix over the group ring
//! through that isomorphism yields seven square blocks of sizes
//! 3, 3, 12, 12, 15, 15, 18, and the matrix discrete-logarithm problem splits
//! into per-block problems that reduce to discrete logarithms in small
//! extensions `F_{7^d}`.
//!
//! The crate is `no_std` and only needs `alloc`. Everything that touches a
//! file system, a clock, or threads lives in the companion `grcrypt` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod blocklift;
pub mod dlattack;
pub mod error;
pub mod ffield;
pub mod groupring;
pub mod matlin;
pub mod protocol;
pub mod s5rep;

pub use blocklift::{BlockMat, DSum7, Wedderburn, BLOCK_SIZES, IRREP_DIMS};
pub use dlattack::{break_dh, recover_exponent, AttackTranscript, BlockReport, Recovery};
pub use error::{Error, Result};
pub use ffield::{CrtConstraint, Field, FqElem, FqField, FqValue, Gf7, Poly, PolyF7, F7};
pub use groupring::{GRElem, GRMat3, GroupRing, Regime};
pub use matlin::{FittingSplit, Matrix};
pub use protocol::{new_session, Challenge, KeyPair, Session, Solution};
pub use s5rep::{IrrepTable, Perm5, S5};
