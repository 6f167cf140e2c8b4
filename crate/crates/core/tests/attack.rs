// SPDX-License-Identifier: Apache-2.0

use grcrypt_core::groupring::random_grmat;
use grcrypt_core::protocol::session_from_secrets;
use grcrypt_core::{break_dh, new_session, recover_exponent, Regime, Wedderburn};
use num_bigint::BigUint;
use proptest::prelude::*;

fn regime(k: u8) -> Regime {
    match k % 3 {
        0 => Regime::Uniform,
        1 => Regime::Invertible,
        _ => Regime::Singular,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn recovered_exponent_is_sound_and_congruent(seed in any::<u64>(), k in any::<u8>(), n in 1u64..1_000_000_000_000) {
        let w = Wedderburn::new().unwrap();
        let m = random_grmat(&w, seed, regime(k)).unwrap();
        let c = w.ring().mat_pow_u64(&m, n);
        let rec = recover_exponent(&w, &m, &c).unwrap();
        let t = &rec.transcript;
        // independent square-and-multiply in the group ring
        prop_assert_eq!(w.ring().mat_pow(&m, &rec.exponent), c);
        if n as usize >= t.max_fitting_index {
            prop_assert!(t.combined.is_satisfied_by(&BigUint::from(n)));
        }
        prop_assert_eq!(t.combined.modulus(), &rec.period_modulus);
        let bound = BigUint::from(7u64.pow(t.p_part_exponent)) * &rec.period_modulus + t.max_fitting_index;
        prop_assert!(rec.exponent <= bound);
        let eigen_lcm = t.blocks.iter().flat_map(|b| b.factors.iter()).fold(BigUint::from(1u8), |acc, f| {
            num_integer::Integer::lcm(&acc, f.constraint.modulus())
        });
        prop_assert_eq!(eigen_lcm, rec.period_modulus.clone());
    }
}

#[test]
fn sessions_break_in_both_regimes() {
    let w = Wedderburn::new().unwrap();
    for seed in 0..4 {
        for regime in [Regime::Invertible, Regime::Singular] {
            let s = new_session(&w, seed, 1_000_000_000_000, regime).unwrap();
            let (key, rec) = break_dh(&w, &s.base, &s.alice.public, &s.bob.public).unwrap();
            assert_eq!(key, s.shared_key);
            assert!(rec.exponent >= BigUint::from(rec.transcript.max_fitting_index as u64));
        }
    }
}

#[test]
fn singular_break_with_fixed_secrets() {
    let w = Wedderburn::new().unwrap();
    let base = random_grmat(&w, 31, Regime::Singular).unwrap();
    let s = session_from_secrets(&w, base, 12_345, 67_890).unwrap();
    let (key, _) = break_dh(&w, &s.base, &s.alice.public, &s.bob.public).unwrap();
    assert_eq!(key, w.ring().mat_pow_u64(&s.base, 12_345 * 67_890));
}
