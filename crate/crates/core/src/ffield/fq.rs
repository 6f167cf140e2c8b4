// SPDX-License-Identifier: Apache-2.0

use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;
use serde::{Deserialize, Serialize};

use super::{find_irreducible, int_factor, random_f7, Field, Gf7, PolyF7, F7};
use crate::error::{Error, Result};

/// Largest supported extension degree; `7^22 − 1` still fits in a `u64`.
pub const MAX_DEGREE: usize = 22;

/// An element of `F_{7^d}` in the polynomial basis `1, x, …, x^(d−1)`.
///
/// Coefficients at positions `≥ d` are always zero, so the derived ordering
/// and equality are well defined within one field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqElem {
    c: [F7; MAX_DEGREE],
}

impl FqElem {
    pub fn coeffs(&self, degree: u32) -> &[F7] {
        &self.c[..degree as usize]
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.c.iter().rposition(|c| !c.is_zero()).map_or(1, |i| i + 1);
        f.debug_list().entries(&self.c[..top]).finish()
    }
}

/// `F_{7^d} = F7[x]/(g)` for a monic irreducible `g` of degree `d`.
///
/// Immutable once built. The factorization of the multiplicative group
/// order `7^d − 1` is cached for order and logarithm computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqField {
    degree: u32,
    modulus: PolyF7,
    // x^d = Σ fold[i] x^i
    fold: [F7; MAX_DEGREE],
    order_factors: Vec<(u64, u32)>,
}

impl FqField {
    /// The canonical field of degree `d`, built on [`find_irreducible`].
    pub fn new(degree: u32) -> Result<Self> {
        if degree == 0 || degree as usize > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        Self::with_modulus(find_irreducible(degree)?)
    }

    /// A field on an explicit modulus; rejects reducible input.
    pub fn with_modulus(modulus: PolyF7) -> Result<Self> {
        let degree = modulus.degree().unwrap_or(0) as u32;
        if degree == 0 || degree as usize > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        let modulus = modulus.monic(&Gf7);
        if !modulus.is_irreducible(&Gf7) {
            return Err(Error::ReducibleModulus(degree));
        }
        let mut fold = [F7::ZERO; MAX_DEGREE];
        for (i, slot) in fold.iter_mut().enumerate().take(degree as usize) {
            *slot = -modulus.coeff(i);
        }
        let order_factors = int_factor(7u64.pow(degree) - 1);
        Ok(FqField {
            degree,
            modulus,
            fold,
            order_factors,
        })
    }

    pub fn modulus(&self) -> &PolyF7 {
        &self.modulus
    }

    /// Prime factorization of `7^d − 1`.
    pub fn order_factors(&self) -> &[(u64, u32)] {
        &self.order_factors
    }

    pub fn group_order(&self) -> u64 {
        self.size() - 1
    }

    /// Builds an element from coefficients, lowest first. Fails if there are
    /// more than `d` of them.
    pub fn from_coeffs(&self, coeffs: &[F7]) -> Result<FqElem> {
        if coeffs.len() > self.degree as usize {
            return Err(Error::DimensionMismatch("too many coefficients for field degree"));
        }
        let mut c = [F7::ZERO; MAX_DEGREE];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Ok(FqElem { c })
    }

    /// Reduces an arbitrary polynomial modulo the field polynomial.
    pub fn from_poly(&self, p: &PolyF7) -> FqElem {
        let r = p.rem(&Gf7, &self.modulus).expect("nonzero modulus");
        let mut c = [F7::ZERO; MAX_DEGREE];
        c[..r.coeffs().len()].copy_from_slice(r.coeffs());
        FqElem { c }
    }

    pub fn to_poly(&self, a: FqElem) -> PolyF7 {
        PolyF7::from_coeffs(a.coeffs(self.degree).to_vec())
    }

    /// The class of `x`, a root of the modulus.
    pub fn generator_root(&self) -> FqElem {
        self.from_poly(&PolyF7::x(&Gf7))
    }

    pub fn frobenius(&self, a: FqElem) -> FqElem {
        self.pow(a, 7)
    }

    pub fn encode(&self, a: FqElem) -> FqValue {
        FqValue {
            degree: self.degree,
            coeffs: a.coeffs(self.degree).iter().map(|c| c.value()).collect(),
        }
    }

    /// Inverse of [`encode`](Self::encode); the degree must match.
    pub fn decode(&self, v: &FqValue) -> Result<FqElem> {
        if v.degree != self.degree {
            return Err(Error::DimensionMismatch("field degree differs"));
        }
        let coeffs = v
            .coeffs
            .iter()
            .map(|&c| if c < 7 { Ok(F7::new(c as u64)) } else { Err(Error::InvalidParameter("coefficient out of range")) })
            .collect::<Result<Vec<_>>>()?;
        self.from_coeffs(&coeffs)
    }
}

/// Serialized form of an element of the canonical field of degree `d`:
/// coefficients `0..=6`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FqValue {
    pub degree: u32,
    pub coeffs: Vec<u8>,
}

impl Field for FqField {
    type Elem = FqElem;

    fn size(&self) -> u64 {
        7u64.pow(self.degree)
    }

    fn degree(&self) -> u32 {
        self.degree
    }

    fn one(&self) -> FqElem {
        let mut c = [F7::ZERO; MAX_DEGREE];
        c[0] = F7::ONE;
        FqElem { c }
    }

    fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let mut c = a.c;
        for (x, y) in c.iter_mut().zip(b.c.iter()) {
            *x += *y;
        }
        FqElem { c }
    }

    fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        let mut c = a.c;
        for (x, y) in c.iter_mut().zip(b.c.iter()) {
            *x -= *y;
        }
        FqElem { c }
    }

    fn neg(&self, a: FqElem) -> FqElem {
        let mut c = a.c;
        for x in c.iter_mut() {
            *x = -*x;
        }
        FqElem { c }
    }

    fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        let d = self.degree as usize;
        let mut prod = [0u32; 2 * MAX_DEGREE];
        for i in 0..d {
            let ai = a.c[i].value() as u32;
            if ai == 0 {
                continue;
            }
            for j in 0..d {
                prod[i + j] += ai * b.c[j].value() as u32;
            }
        }
        let mut t = [F7::ZERO; 2 * MAX_DEGREE];
        for (dst, src) in t.iter_mut().zip(prod.iter()) {
            *dst = F7::new(*src as u64);
        }
        for k in (d..(2 * d).saturating_sub(1)).rev() {
            let top = t[k];
            if top.is_zero() {
                continue;
            }
            t[k] = F7::ZERO;
            for i in 0..d {
                t[k - d + i] += top * self.fold[i];
            }
        }
        let mut c = [F7::ZERO; MAX_DEGREE];
        c[..d].copy_from_slice(&t[..d]);
        FqElem { c }
    }

    fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a == FqElem::default() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.size() - 2))
    }

    fn embed(&self, a: F7) -> FqElem {
        let mut c = [F7::ZERO; MAX_DEGREE];
        c[0] = a;
        FqElem { c }
    }

    fn random<R: RngCore + ?Sized>(&self, rng: &mut R) -> FqElem {
        let mut c = [F7::ZERO; MAX_DEGREE];
        for x in c.iter_mut().take(self.degree as usize) {
            *x = random_f7(rng);
        }
        FqElem { c }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_round_trip() {
        let f = FqField::new(5).unwrap();
        let a = f.pow(f.generator_root(), 1234);
        let v = f.encode(a);
        assert_eq!(v.degree, 5);
        assert_eq!(v.coeffs.len(), 5);
        assert_eq!(f.decode(&v).unwrap(), a);
        assert!(FqField::new(4).unwrap().decode(&v).is_err());
    }
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_as_degree_one() {
        let f = FqField::new(1).unwrap();
        let e = |v| f.embed(F7::new(v));
        assert_eq!(f.mul(e(3), e(5)), e(1));
        assert_eq!(f.size(), 7);
        assert_eq!(f.order_factors(), &[(2, 1), (3, 1)]);
    }

    #[test]
    fn rejects_reducible_and_oversized() {
        assert_eq!(
            FqField::with_modulus(PolyF7::from_i64s(&[-1, 0, 1])),
            Err(Error::ReducibleModulus(2))
        );
        assert_eq!(FqField::new(23), Err(Error::UnsupportedDegree(23)));
        assert_eq!(FqField::new(0), Err(Error::UnsupportedDegree(0)));
    }

    #[test]
    fn order_factors_multiply_back() {
        for d in 1..=22 {
            let f = FqField::new(d).unwrap();
            let prod: u64 = f.order_factors().iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, f.group_order());
        }
    }

    /// Multiplication checked against reducing the plain polynomial product.
    #[test]
    fn mul_matches_polynomial_reduction() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for d in [2, 5, 13, 18, 22] {
            let f = FqField::new(d).unwrap();
            for _ in 0..50 {
                let a = f.random(&mut rng);
                let b = f.random(&mut rng);
                let expect = f.from_poly(&f.to_poly(a).mul(&Gf7, &f.to_poly(b)));
                assert_eq!(f.mul(a, b), expect);
            }
        }
    }

    #[test]
    fn field_axioms_and_frobenius() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for d in [1, 2, 4, 5, 6, 12, 15, 18] {
            let f = FqField::new(d).unwrap();
            for _ in 0..200 {
                let a = f.random(&mut rng);
                let b = f.random(&mut rng);
                let c = f.random(&mut rng);
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                let mut fr = a;
                for _ in 0..d {
                    fr = f.frobenius(fr);
                }
                assert_eq!(fr, a, "a^(7^d) = a in degree {d}");
                if a != f.zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    fn generator_root_is_root_of_modulus() {
        for d in [2, 3, 7, 18] {
            let f = FqField::new(d).unwrap();
            let x = f.generator_root();
            assert_eq!(f.modulus().embed(&f).eval(&f, x), f.zero());
        }
    }
}
