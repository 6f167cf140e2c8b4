// SPDX-License-Identifier: Apache-2.0

//! Multiplicative orders and discrete logarithms in `F_{7^d}^*`.
//!
//! Pohlig–Hellman reduces to subgroups of prime order `p`; each of those is
//! solved by baby-step giant-step, or by Pollard rho when `√p` exceeds the
//! baby-step table cap.

use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CrtConstraint, Field, FqElem, FqField};
use crate::error::{Error, Result};

/// Baby-step table entries allowed before switching to Pollard rho.
pub const DEFAULT_BSGS_CAP: u64 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DlogConfig {
    pub bsgs_cap: u64,
    /// Seed for the Pollard rho starting points.
    pub seed: u64,
}

impl Default for DlogConfig {
    fn default() -> Self {
        DlogConfig {
            bsgs_cap: DEFAULT_BSGS_CAP,
            seed: 0,
        }
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn inv_mod_prime(a: u64, p: u64) -> u64 {
    let (mut acc, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Exact multiplicative order of a nonzero element.
pub fn element_order(field: &FqField, a: FqElem) -> Result<u64> {
    if field.is_zero(a) {
        return Err(Error::DivisionByZero);
    }
    let mut m = field.group_order();
    for &(p, _) in field.order_factors() {
        while m.is_multiple_of(p) && field.pow(a, m / p) == field.one() {
            m /= p;
        }
    }
    Ok(m)
}

pub fn discrete_log(field: &FqField, base: FqElem, target: FqElem) -> Result<CrtConstraint> {
    discrete_log_with(field, base, target, &DlogConfig::default())
}

/// Returns `(r, ord(base))` with `base^r = target`.
pub fn discrete_log_with(
    field: &FqField,
    base: FqElem,
    target: FqElem,
    cfg: &DlogConfig,
) -> Result<CrtConstraint> {
    let order = element_order(field, base)?;
    if field.is_zero(target) {
        return Err(Error::NotInSubgroup);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    // (residue, prime power) per factor of the order
    let mut parts: Vec<(u64, u64)> = Vec::new();
    for &(p, _) in field.order_factors() {
        let mut e = 0u32;
        let mut pe = 1u64;
        while (order / pe).is_multiple_of(p) {
            pe *= p;
            e += 1;
        }
        if e == 0 {
            continue;
        }
        let cofactor = order / pe;
        let g = field.pow(base, cofactor);
        let h = field.pow(target, cofactor);
        parts.push((prime_power_log(field, g, h, p, e, cfg, &mut rng)?, pe));
    }
    // Pairwise coprime moduli whose product is `order`, so u128 suffices.
    let mut r = 0u64;
    let mut m = 1u64;
    for (ri, mi) in parts {
        // r + m·k ≡ ri (mod mi)
        let diff = (ri + mi - r % mi) % mi;
        let k = mulmod(diff, inv_mod_coprime(m % mi, mi), mi);
        r += m * k;
        m *= mi;
    }
    if field.pow(base, r) != target {
        return Err(Error::NotInSubgroup);
    }
    CrtConstraint::new(r, order)
}

/// Inverse of `a` modulo `m` for `gcd(a, m) = 1`, `m` possibly composite.
fn inv_mod_coprime(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(m as i128) as u64
}

/// Logarithm of `h` to base `g`, where `g` has order `p^e`, digit by digit.
fn prime_power_log(
    field: &FqField,
    g: FqElem,
    h: FqElem,
    p: u64,
    e: u32,
    cfg: &DlogConfig,
    rng: &mut ChaCha8Rng,
) -> Result<u64> {
    let gamma = field.pow(g, p.pow(e - 1));
    let g_inv = field.inv(g)?;
    let mut x = 0u64;
    let mut pk = 1u64;
    let solver = PrimeOrderLog::new(field, gamma, p, cfg.bsgs_cap);
    for k in 0..e {
        let shifted = field.mul(field.pow(g_inv, x), h);
        let hk = field.pow(shifted, p.pow(e - 1 - k));
        let dk = solver.solve(field, hk, rng)?;
        x += dk * pk;
        pk *= p;
    }
    Ok(x)
}

/// Logarithms in the subgroup of prime order `p` generated by `gamma`.
enum PrimeOrderLog {
    Bsgs {
        table: Vec<(FqElem, u64)>,
        step: u64,
        giant: FqElem,
    },
    Rho {
        gamma: FqElem,
        p: u64,
    },
}

impl PrimeOrderLog {
    fn new(field: &FqField, gamma: FqElem, p: u64, cap: u64) -> Self {
        let step = ceil_sqrt(p);
        if step > cap {
            return PrimeOrderLog::Rho { gamma, p };
        }
        let mut table = Vec::with_capacity(step as usize);
        let mut cur = field.one();
        for j in 0..step {
            table.push((cur, j));
            cur = field.mul(cur, gamma);
        }
        table.sort_unstable();
        let giant = field.inv(field.pow(gamma, step)).expect("gamma is a unit");
        PrimeOrderLog::Bsgs { table, step, giant }
    }

    fn solve(&self, field: &FqField, h: FqElem, rng: &mut ChaCha8Rng) -> Result<u64> {
        match self {
            PrimeOrderLog::Bsgs { table, step, giant } => {
                let mut y = h;
                for i in 0..=*step {
                    if let Ok(pos) = table.binary_search_by(|(k, _)| k.cmp(&y)) {
                        return Ok(i * step + table[pos].1);
                    }
                    y = field.mul(y, *giant);
                }
                Err(Error::NotInSubgroup)
            }
            PrimeOrderLog::Rho { gamma, p } => rho_log(field, *gamma, h, *p, rng),
        }
    }
}

fn ceil_sqrt(n: u64) -> u64 {
    let s = num_integer::Roots::sqrt(&n);
    if s * s < n {
        s + 1
    } else {
        s
    }
}

fn partition(a: &FqElem) -> u8 {
    // FNV-1a over the coefficient bytes
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for c in a.coeffs(super::MAX_DEGREE as u32) {
        h ^= c.value() as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    (h % 3) as u8
}

/// Pollard rho with Floyd cycle finding on the walk `γ^a h^b`.
fn rho_log(field: &FqField, gamma: FqElem, h: FqElem, p: u64, rng: &mut ChaCha8Rng) -> Result<u64> {
    if h == field.one() {
        return Ok(0);
    }
    let step = |x: FqElem, a: u64, b: u64| match partition(&x) {
        0 => (field.mul(x, gamma), (a + 1) % p, b),
        1 => (field.mul(x, x), (2 * a) % p, (2 * b) % p),
        _ => (field.mul(x, h), a, (b + 1) % p),
    };
    for _ in 0..32 {
        let a0 = rng.next_u64() % p;
        let b0 = rng.next_u64() % p;
        let start = field.mul(field.pow(gamma, a0), field.pow(h, b0));
        let (mut x, mut a, mut b) = (start, a0, b0);
        let (mut y, mut ay, mut by) = (start, a0, b0);
        loop {
            (x, a, b) = step(x, a, b);
            (y, ay, by) = step(y, ay, by);
            (y, ay, by) = step(y, ay, by);
            if x == y {
                break;
            }
        }
        // γ^a h^b = γ^ay h^by  ⇒  log h = (a − ay)/(by − b)
        let db = (by + p - b) % p;
        if db == 0 {
            continue;
        }
        let da = (a + p - ay) % p;
        let l = mulmod(da, inv_mod_prime(db, p), p);
        if field.pow(gamma, l) == h {
            return Ok(l);
        }
    }
    Err(Error::NotInSubgroup)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::F7;
    use num_bigint::BigUint;

    fn f7() -> FqField {
        FqField::new(1).unwrap()
    }

    fn e(f: &FqField, v: u64) -> FqElem {
        f.embed(F7::new(v))
    }

    /// Exhaustive logarithm over the exponents 0..order.
    fn brute_log(f: &FqField, base: FqElem, target: FqElem) -> Option<u64> {
        let mut cur = f.one();
        let ord = element_order(f, base).unwrap();
        for k in 0..ord {
            if cur == target {
                return Some(k);
            }
            cur = f.mul(cur, base);
        }
        None
    }

    #[test]
    fn order_examples() {
        let f = f7();
        assert_eq!(element_order(&f, e(&f, 1)), Ok(1));
        assert_eq!(element_order(&f, e(&f, 3)), Ok(6));
        assert_eq!(element_order(&f, e(&f, 6)), Ok(2));
        assert_eq!(element_order(&f, e(&f, 0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn log_examples() {
        let f = f7();
        assert_eq!(brute_log(&f, e(&f, 3), e(&f, 6)), Some(3));
        assert_eq!(discrete_log(&f, e(&f, 3), e(&f, 6)), CrtConstraint::new(3u8, 6u8));
        assert_eq!(discrete_log(&f, e(&f, 3), e(&f, 1)), CrtConstraint::new(0u8, 6u8));
        assert_eq!(discrete_log(&f, e(&f, 3), e(&f, 3)), CrtConstraint::new(1u8, 6u8));
        assert_eq!(discrete_log(&f, e(&f, 2), e(&f, 1)), CrtConstraint::new(0u8, 3u8));
    }

    #[test]
    fn not_in_subgroup() {
        let f = f7();
        // <2> = {1, 2, 4}
        assert_eq!(discrete_log(&f, e(&f, 2), e(&f, 3)), Err(Error::NotInSubgroup));
        assert_eq!(discrete_log(&f, e(&f, 2), e(&f, 0)), Err(Error::NotInSubgroup));
        let f2 = FqField::new(2).unwrap();
        // an element of order 3 cannot reach a primitive element
        let prim = (1..7)
            .flat_map(|a| (0..7).map(move |b| [F7::new(b), F7::new(a)]))
            .map(|c| f2.from_coeffs(&c).unwrap())
            .find(|&g| element_order(&f2, g) == Ok(48))
            .unwrap();
        let small = f2.pow(prim, 16);
        assert_eq!(element_order(&f2, small), Ok(3));
        assert_eq!(discrete_log(&f2, small, prim), Err(Error::NotInSubgroup));
    }

    #[test]
    fn exhaustive_in_f49() {
        let f = FqField::new(2).unwrap();
        let mut all = Vec::new();
        for a in 0..7 {
            for b in 0..7 {
                all.push(f.from_coeffs(&[F7::new(a), F7::new(b)]).unwrap());
            }
        }
        for &base in all.iter().skip(1).step_by(5) {
            for &target in all.iter().skip(1) {
                match brute_log(&f, base, target) {
                    Some(k) => {
                        let ord = element_order(&f, base).unwrap();
                        assert_eq!(discrete_log(&f, base, target), CrtConstraint::new(k, ord));
                    }
                    None => assert_eq!(discrete_log(&f, base, target), Err(Error::NotInSubgroup)),
                }
            }
        }
    }

    #[test]
    fn order_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for d in 1..=6 {
            let f = FqField::new(d).unwrap();
            for _ in 0..100 {
                let a = f.random(&mut rng);
                if f.is_zero(a) {
                    continue;
                }
                let t = element_order(&f, a).unwrap();
                assert_eq!(f.pow(a, t), f.one());
                for &(p, _) in f.order_factors() {
                    if t.is_multiple_of(p) {
                        assert_ne!(f.pow(a, t / p), f.one());
                    }
                }
            }
        }
    }

    #[test]
    fn random_logs_small_degrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for d in 1..=6 {
            let f = FqField::new(d).unwrap();
            for _ in 0..100 {
                let base = f.random(&mut rng);
                if f.is_zero(base) {
                    continue;
                }
                let exp = rng.next_u64() % f.group_order();
                let c = discrete_log(&f, base, f.pow(base, exp)).unwrap();
                assert!(c.is_satisfied_by(&BigUint::from(exp)));
            }
        }
    }

    #[test]
    fn rho_fallback_matches_bsgs() {
        // A cap of 2 forces rho for every prime above 4.
        let cfg = DlogConfig { bsgs_cap: 2, seed: 3 };
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for d in [3, 5, 7, 8] {
            let f = FqField::new(d).unwrap();
            for _ in 0..20 {
                let base = f.random(&mut rng);
                if f.is_zero(base) {
                    continue;
                }
                let exp = rng.next_u64() % f.group_order();
                let target = f.pow(base, exp);
                let via_rho = discrete_log_with(&f, base, target, &cfg).unwrap();
                assert_eq!(Ok(via_rho), discrete_log(&f, base, target));
            }
        }
    }

    #[test]
    fn rho_solver_directly() {
        // 7^5 − 1 has the prime factor 2801
        let f = FqField::new(5).unwrap();
        let x = f.generator_root();
        let ord = element_order(&f, x).unwrap();
        let gamma = f.pow(x, ord / 2801);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for k in [0u64, 1, 17, 2800, 1234] {
            let l = rho_log(&f, gamma, f.pow(gamma, k), 2801, &mut rng).unwrap();
            assert_eq!(l, k);
        }
    }

    #[test]
    fn ceil_sqrt_edges() {
        assert_eq!(ceil_sqrt(1), 1);
        assert_eq!(ceil_sqrt(2), 2);
        assert_eq!(ceil_sqrt(16), 4);
        assert_eq!(ceil_sqrt(17), 5);
        assert_eq!(ceil_sqrt(16_148_168_401), 127_076);
    }
}
