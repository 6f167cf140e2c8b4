// SPDX-License-Identifier: Apache-2.0

//! The attack with the seven block analyses on separate threads.

use std::thread;
use std::time::Instant;

use grcrypt_core::dlattack::{analyze_block, finish_recovery, AttackTranscript, FieldCache, BLOCK_ORDER};
use grcrypt_core::{BlockMat, Challenge, GRMat3, Recovery, Result, Wedderburn};

pub struct AttackOutcome {
    /// `bob_public^{n'}` for the recovered exponent of `alice_public`.
    pub shared_key: GRMat3,
    pub recovery: Recovery,
    pub lifted_base: BlockMat,
    pub lifted_challenge: BlockMat,
}

/// Recovers an exponent `n'` with `base^{n'} = c`.
///
/// Per-block and total wall times are filled into the transcript. When
/// several blocks fail, the error from the largest one is reported, matching
/// the sequential order.
pub fn recover(w: &Wedderburn, base: &GRMat3, c: &GRMat3) -> Result<(Recovery, BlockMat, BlockMat)> {
    let start = Instant::now();
    let lb = w.lift(base);
    let lc = w.lift(c);
    let results: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = BLOCK_ORDER
            .iter()
            .map(|&i| {
                let (b, t) = (&lb.blocks[i], &lc.blocks[i]);
                s.spawn(move || {
                    let t0 = Instant::now();
                    let mut r = analyze_block(i, b, t, &mut FieldCache::default());
                    if let Ok(r) = r.as_mut() {
                        r.elapsed_us = t0.elapsed().as_micros() as u64;
                    }
                    r
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("block worker panicked")).collect()
    });
    let reports = results.into_iter().collect::<Result<Vec<_>>>()?;
    let mut rec = finish_recovery(w, base, c, &lb, &lc, reports)?;
    rec.transcript.total_elapsed_us = start.elapsed().as_micros() as u64;
    Ok((rec, lb, lc))
}

pub fn attack(w: &Wedderburn, challenge: &Challenge) -> Result<AttackOutcome> {
    let (recovery, lifted_base, lifted_challenge) = recover(w, &challenge.base, &challenge.alice_public)?;
    let shared_key = w.ring().mat_pow(&challenge.bob_public, &recovery.exponent);
    Ok(AttackOutcome { shared_key, recovery, lifted_base, lifted_challenge })
}

/// Zeroes every timing field so that transcripts compare byte for byte.
pub fn strip_timings(t: &mut AttackTranscript) {
    t.total_elapsed_us = 0;
    for b in &mut t.blocks {
        b.elapsed_us = 0;
    }
}
