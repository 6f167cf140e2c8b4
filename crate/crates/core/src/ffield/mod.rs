// SPDX-License-Identifier: Apache-2.0

//! Arithmetic in `F7` and its extensions, polynomials over them, integer
//! factorization, discrete logarithms and Chinese remaindering.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rand_core::RngCore;

use crate::error::{Error, Result};

mod crt;
mod dlog;
mod fq;
mod intfactor;
mod poly;

pub use crt::{crt_combine, CrtConstraint};
pub(crate) use crt::decimal;
pub use dlog::{discrete_log, discrete_log_with, element_order, DlogConfig, DEFAULT_BSGS_CAP};
pub use fq::{FqElem, FqField, FqValue, MAX_DEGREE};
pub use intfactor::{int_factor, is_prime};
pub use poly::{find_irreducible, Poly, PolyF7};

/// The characteristic of every field in this crate.
pub const P: u64 = 7;

/// An element of the prime field `F7`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F7(u8);

impl F7 {
    pub const ZERO: F7 = F7(0);
    pub const ONE: F7 = F7(1);

    pub const fn new(v: u64) -> F7 {
        F7((v % P) as u8)
    }

    /// Reduces a signed integer, so `-1` maps to `6`.
    pub const fn from_i64(v: i64) -> F7 {
        F7(v.rem_euclid(P as i64) as u8)
    }

    #[inline]
    pub const fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inv(self) -> Result<F7> {
        // 1, 4, 5, 2, 3, 6 are the inverses of 1..6.
        const INV: [u8; 7] = [0, 1, 4, 5, 2, 3, 6];
        if self.0 == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(F7(INV[self.0 as usize]))
        }
    }

    pub fn pow(self, mut e: u64) -> F7 {
        let mut base = self;
        let mut acc = F7::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for F7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for F7 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for F7 {
    type Output = F7;
    #[inline]
    fn add(self, rhs: F7) -> F7 {
        let s = self.0 + rhs.0;
        F7(if s >= 7 { s - 7 } else { s })
    }
}

impl Sub for F7 {
    type Output = F7;
    #[inline]
    fn sub(self, rhs: F7) -> F7 {
        F7(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + 7 - rhs.0
        })
    }
}

impl Mul for F7 {
    type Output = F7;
    #[inline]
    fn mul(self, rhs: F7) -> F7 {
        F7((self.0 * rhs.0) % 7)
    }
}

impl Neg for F7 {
    type Output = F7;
    #[inline]
    fn neg(self) -> F7 {
        F7(if self.0 == 0 { 0 } else { 7 - self.0 })
    }
}

impl AddAssign for F7 {
    fn add_assign(&mut self, rhs: F7) {
        *self = *self + rhs;
    }
}

impl SubAssign for F7 {
    fn sub_assign(&mut self, rhs: F7) {
        *self = *self - rhs;
    }
}

impl MulAssign for F7 {
    fn mul_assign(&mut self, rhs: F7) {
        *self = *self * rhs;
    }
}

/// A finite field of characteristic 7, used as an explicit context object.
///
/// Elements are plain values; all arithmetic goes through the field so that
/// extension elements do not need to carry a reference to their modulus.
/// `Elem::default()` must be the zero element.
pub trait Field {
    type Elem: Copy + Eq + Ord + Default + fmt::Debug;

    /// Number of elements `q = 7^d`.
    fn size(&self) -> u64;
    /// Degree over `F7`.
    fn degree(&self) -> u32;

    fn zero(&self) -> Self::Elem {
        Self::Elem::default()
    }
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem>;
    fn embed(&self, a: F7) -> Self::Elem;
    fn random<R: RngCore + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn pow(&self, a: Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }
}

/// The prime field `F7` as a zero-sized context.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Gf7;

impl Field for Gf7 {
    type Elem = F7;

    fn size(&self) -> u64 {
        P
    }
    fn degree(&self) -> u32 {
        1
    }
    fn one(&self) -> F7 {
        F7::ONE
    }
    #[inline]
    fn add(&self, a: F7, b: F7) -> F7 {
        a + b
    }
    #[inline]
    fn sub(&self, a: F7, b: F7) -> F7 {
        a - b
    }
    #[inline]
    fn mul(&self, a: F7, b: F7) -> F7 {
        a * b
    }
    #[inline]
    fn neg(&self, a: F7) -> F7 {
        -a
    }
    fn inv(&self, a: F7) -> Result<F7> {
        a.inv()
    }
    fn embed(&self, a: F7) -> F7 {
        a
    }
    fn random<R: RngCore + ?Sized>(&self, rng: &mut R) -> F7 {
        random_f7(rng)
    }
}

/// Uniform element of `F7` by rejection sampling on a byte.
pub(crate) fn random_f7<R: RngCore + ?Sized>(rng: &mut R) -> F7 {
    loop {
        let b = (rng.next_u32() & 0xff) as u8;
        // 252 = 36 * 7
        if b < 252 {
            return F7(b % 7);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f7_examples() {
        assert_eq!(F7::new(3) * F7::new(5), F7::new(1));
        assert_eq!(F7::new(1).inv().unwrap(), F7::new(1));
        assert_eq!(F7::new(6) + F7::new(1), F7::ZERO);
        assert_eq!(F7::from_i64(-1), F7::new(6));
        assert_eq!(F7::ZERO.inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn f7_exhaustive_axioms() {
        for a in 0..7 {
            let a = F7::new(a);
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), F7::ONE);
            }
            assert_eq!(a + (-a), F7::ZERO);
            for b in 0..7 {
                let b = F7::new(b);
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                assert_eq!((a - b) + b, a);
                for c in 0..7 {
                    let c = F7::new(c);
                    assert_eq!(a * (b + c), a * b + a * c);
                    assert_eq!((a * b) * c, a * (b * c));
                }
            }
        }
    }
}
