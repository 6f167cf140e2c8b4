// SPDX-License-Identifier: Apache-2.0

//! Factorization of 64-bit integers: trial division, then Pollard rho with
//! Brent's cycle detection, certified by deterministic Miller–Rabin.

use alloc::vec::Vec;

const TRIAL_LIMIT: u64 = 1_000_000;

// Valid for every n < 3.3 * 10^24, which covers u64.
const MR_WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
/// composite `n`.
fn pollard_brent(n: u64) -> u64 {
    for c in 1u64.. {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        let m = 128u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mulmod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn split_into(n: u64, primes: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        primes.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_into(d, primes);
    split_into(n / d, primes);
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
/// `int_factor(1)` is empty; `int_factor(0)` is empty as well.
pub fn int_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n == 0 {
        return out;
    }
    let push = |p: u64, out: &mut Vec<(u64, u32)>| match out.iter_mut().find(|e| e.0 == p) {
        Some(e) => e.1 += 1,
        None => out.push((p, 1)),
    };
    let mut p = 2u64;
    while p <= TRIAL_LIMIT && p * p <= n {
        while n.is_multiple_of(p) {
            push(p, &mut out);
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        let mut big = Vec::new();
        split_into(n, &mut big);
        for q in big {
            push(q, &mut out);
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(f: &[(u64, u32)]) -> u64 {
        f.iter().map(|&(p, e)| p.pow(e)).product()
    }

    #[test]
    fn examples() {
        assert_eq!(int_factor(48), [(2, 4), (3, 1)]);
        assert_eq!(int_factor(2400), [(2, 5), (3, 1), (5, 2)]);
        assert!(int_factor(1).is_empty());
    }

    #[test]
    fn primality_against_sieve() {
        let n = 20_000usize;
        let mut sieve = alloc::vec![true; n];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..n {
            if sieve[i] {
                for j in (i * i..n).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (i, &s) in sieve.iter().enumerate() {
            assert_eq!(is_prime(i as u64), s, "{i}");
        }
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // base-2 strong pseudoprime, Carmichael number, and a product of two large primes
        assert!(!is_prime(2047));
        assert!(!is_prime(561));
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(1_000_003 * 1_000_033));
        assert!(is_prime(16_148_168_401));
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn rho_path_on_semiprimes() {
        let n = 1_000_003u64 * 1_000_033;
        assert_eq!(int_factor(n), [(1_000_003, 1), (1_000_033, 1)]);
        let n = 4_294_967_291u64 * 4_294_967_279;
        assert_eq!(int_factor(n), [(4_294_967_279, 1), (4_294_967_291, 1)]);
    }

    #[test]
    fn seven_power_minus_one_all_degrees() {
        for d in 1..=22u32 {
            let n = 7u64.pow(d) - 1;
            let f = int_factor(n);
            assert_eq!(product(&f), n, "d = {d}");
            assert!(f.iter().all(|&(p, _)| is_prime(p)), "d = {d}");
        }
        assert_eq!(
            int_factor(7u64.pow(13) - 1),
            [(2, 1), (3, 1), (16_148_168_401, 1)]
        );
    }
}
