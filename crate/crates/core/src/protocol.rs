// SPDX-License-Identifier: Apache-2.0

//! Honest parties of the matrix Diffie–Hellman exchange: a public base
//! `M`, secrets `n_A`, `n_B`, public values `M^{n_A}`, `M^{n_B}`, and the
//! shared key `M^{n_A n_B}`.

use num_bigint::BigUint;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blocklift::Wedderburn;
use crate::error::{Error, Result};
use crate::groupring::{random_grmat, GRMat3, Regime};

pub const DEFAULT_EXPONENT_BOUND: u64 = 1_000_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyPair {
    pub secret: u64,
    pub public: GRMat3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Session {
    pub base: GRMat3,
    pub alice: KeyPair,
    pub bob: KeyPair,
    pub shared_key: GRMat3,
}

/// The public transcript of a session.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Challenge {
    pub base: GRMat3,
    pub alice_public: GRMat3,
    pub bob_public: GRMat3,
}

/// What the challenge withholds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub alice_secret: u64,
    pub bob_secret: u64,
    pub shared_key: GRMat3,
}

/// Uniform in `[lo, hi]` by rejection.
fn uniform_in(rng: &mut ChaCha8Rng, lo: u64, hi: u64) -> u64 {
    let span = hi - lo;
    if span == u64::MAX {
        return rng.next_u64();
    }
    let n = span + 1;
    let zone = u64::MAX - (u64::MAX - n + 1) % n;
    loop {
        let x = rng.next_u64();
        if x <= zone {
            return lo + x % n;
        }
    }
}

/// Samples a base with `regime` and both secrets uniformly in
/// `[2, exponent_bound]`, all from `seed`.
pub fn new_session(w: &Wedderburn, seed: u64, exponent_bound: u64, regime: Regime) -> Result<Session> {
    if exponent_bound < 2 {
        return Err(Error::InvalidParameter("exponent bound must be at least 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base_seed = rng.next_u64();
    let a = uniform_in(&mut rng, 2, exponent_bound);
    let b = uniform_in(&mut rng, 2, exponent_bound);
    let base = random_grmat(w, base_seed, regime)?;
    session_from_secrets(w, base, a, b)
}

pub fn session_from_secrets(w: &Wedderburn, base: GRMat3, a: u64, b: u64) -> Result<Session> {
    let ring = w.ring();
    let alice = KeyPair { secret: a, public: ring.mat_pow_u64(&base, a) };
    let bob = KeyPair { secret: b, public: ring.mat_pow_u64(&base, b) };
    let alice_key = ring.mat_pow_u64(&bob.public, a);
    let bob_key = ring.mat_pow_u64(&alice.public, b);
    if alice_key != bob_key {
        return Err(Error::Internal("the two parties derived different keys".into()));
    }
    Ok(Session { base, alice, bob, shared_key: alice_key })
}

impl Session {
    pub fn challenge(&self) -> Challenge {
        Challenge {
            base: self.base.clone(),
            alice_public: self.alice.public.clone(),
            bob_public: self.bob.public.clone(),
        }
    }

    pub fn solution(&self) -> Solution {
        Solution {
            alice_secret: self.alice.secret,
            bob_secret: self.bob.secret,
            shared_key: self.shared_key.clone(),
        }
    }

    pub fn product_exponent(&self) -> BigUint {
        BigUint::from(self.alice.secret) * self.bob.secret
    }
}
