// SPDX-License-Identifier: Apache-2.0

//! Dense univariate polynomials over a [`Field`] and their factorization.
//!
//! Factorization follows the textbook pipeline: squarefree decomposition,
//! distinct-degree splitting, then Cantor–Zassenhaus equal-degree splitting
//! driven by a seeded ChaCha stream.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{intfactor, Field, Gf7, F7, P};
use crate::error::{Error, Result};

/// Coefficients lowest degree first, trimmed so the leading coefficient is
/// nonzero. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

pub type PolyF7 = Poly<F7>;

impl<E: Copy + Eq + Default> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<E>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: E) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: E, k: usize) -> Self {
        let mut v = vec![E::default(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| *c == E::default()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> E {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<E> {
        self.coeffs.last().copied()
    }
}

impl<E: Copy + Eq + Ord + Default> Poly<E> {
    /// Degree first, then coefficients from the top down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PolyF7 {
    pub fn from_u8s(c: &[u8]) -> Self {
        Self::from_coeffs(c.iter().map(|&v| F7::new(v as u64)).collect())
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&v| F7::from_i64(v)).collect())
    }

    /// Maps the coefficients into an extension field.
    pub fn embed<F: Field>(&self, f: &F) -> Poly<F::Elem> {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| f.embed(c)).collect())
    }
}

/// Polynomial arithmetic that needs the coefficient field.
impl<E: Copy + Eq + Ord + Default> Poly<E> {
    pub fn one<F: Field<Elem = E>>(f: &F) -> Self {
        Self::constant(f.one())
    }

    pub fn x<F: Field<Elem = E>>(f: &F) -> Self {
        Self::monomial(f.one(), 1)
    }

    pub fn is_one<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == f.one()
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..n)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..n)
                .map(|i| f.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: E) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::from_coeffs(out)
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn divrem<F: Field<Elem = E>>(&self, f: &F, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = f.mul(rem[k], lead_inv);
            if f.is_zero(c) {
                continue;
            }
            quot[k - dd] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = f.sub(rem[k - dd + i], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem<F: Field<Elem = E>>(&self, f: &F, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(f, divisor)?.1)
    }

    /// Exact quotient; the caller guarantees divisibility.
    fn div_exact<F: Field<Elem = E>>(&self, f: &F, divisor: &Self) -> Self {
        let (q, r) = self.divrem(f, divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        q
    }

    pub fn monic<F: Field<Elem = E>>(&self, f: &F) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(f, f.inv(l).expect("nonzero leading coefficient")),
        }
    }

    pub fn is_monic<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.leading() == Some(f.one())
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(f, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative<F: Field<Elem = E>>(&self, f: &F) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.embed(F7::new(i as u64)), c))
                .collect(),
        )
    }

    pub fn eval<F: Field<Elem = E>>(&self, f: &F, x: E) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn mulmod<F: Field<Elem = E>>(&self, f: &F, other: &Self, modulus: &Self) -> Self {
        self.mul(f, other).rem(f, modulus).expect("nonzero modulus")
    }

    pub fn powmod<F: Field<Elem = E>>(&self, f: &F, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(f, modulus).expect("nonzero modulus");
        let mut acc = Self::one(f).rem(f, modulus).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(f, &base, modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mulmod(f, &base, modulus);
            }
        }
        acc
    }

    /// `self^q mod modulus`, the Frobenius of the coefficient field.
    fn frobenius_mod<F: Field<Elem = E>>(&self, f: &F, modulus: &Self) -> Self {
        self.powmod(f, f.size(), modulus)
    }

    /// Inverse of `g ↦ g^7` on a polynomial whose exponents are multiples of 7.
    fn pth_root<F: Field<Elem = E>>(&self, f: &F) -> Self {
        let root_exp = f.size() / P;
        Self::from_coeffs(
            self.coeffs
                .iter()
                .step_by(P as usize)
                .map(|&c| f.pow(c, root_exp))
                .collect(),
        )
    }

    /// Squarefree decomposition of a monic polynomial: pairs `(g, m)` with
    /// pairwise coprime squarefree `g` and `∏ g^m = self`.
    pub fn squarefree<F: Field<Elem = E>>(&self, f: &F) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative(f);
        let mut c = self.gcd(f, &d);
        let mut w = self.div_exact(f, &c);
        let mut i = 1u32;
        while !w.is_one(f) {
            let y = w.gcd(f, &c);
            let fac = w.div_exact(f, &y);
            if !fac.is_one(f) {
                out.push((fac, i));
            }
            w = y;
            c = c.div_exact(f, &w);
            i += 1;
        }
        if !c.is_one(f) {
            let root = c.pth_root(f).monic(f);
            for (g, m) in root.squarefree(f) {
                out.push((g, m * P as u32));
            }
        }
        out
    }

    /// Splits a squarefree monic polynomial into products of irreducibles of
    /// equal degree: pairs `(product, degree)`.
    pub fn distinct_degree<F: Field<Elem = E>>(&self, f: &F) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        let x = Self::x(f);
        let mut g = self.clone();
        let mut h = x.rem(f, &g).unwrap_or_default();
        let mut i = 1;
        while g.degree().unwrap_or(0) >= 2 * i {
            h = h.frobenius_mod(f, &g);
            let t = g.gcd(f, &h.sub(f, &x));
            if !t.is_one(f) {
                g = g.div_exact(f, &t);
                h = h.rem(f, &g).expect("nonzero modulus");
                out.push((t, i));
            }
            i += 1;
        }
        if g.degree().unwrap_or(0) > 0 {
            let d = g.degree().unwrap();
            out.push((g, d));
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a monic squarefree product of
    /// irreducibles that all have degree `d`.
    pub fn equal_degree<F: Field<Elem = E>>(
        &self,
        f: &F,
        d: usize,
        rng: &mut ChaCha8Rng,
    ) -> Vec<Self> {
        let n = self.degree().unwrap_or(0);
        if n == 0 {
            return Vec::new();
        }
        if n == d {
            return vec![self.clone()];
        }
        let half = (f.size() - 1) / 2;
        loop {
            let a = Self::from_coeffs((0..n).map(|_| f.random(rng)).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            // a^((q^d - 1)/2) = (a · a^q · … · a^(q^(d-1)))^((q-1)/2)
            let mut conj = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                conj = conj.frobenius_mod(f, self);
                norm = norm.mulmod(f, &conj, self);
            }
            let b = norm.powmod(f, half, self).sub(f, &Self::one(f));
            let t = self.gcd(f, &b);
            let td = t.degree().unwrap_or(0);
            if td > 0 && td < n {
                let rest = self.div_exact(f, &t);
                let mut out = t.equal_degree(f, d, rng);
                out.extend(rest.equal_degree(f, d, rng));
                return out;
            }
        }
    }

    /// Full factorization into monic irreducibles with multiplicities,
    /// sorted by degree then coefficients. The leading unit is dropped.
    pub fn factor<F: Field<Elem = E>>(&self, f: &F, seed: u64) -> Result<Vec<(Self, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let monic = self.monic(f);
        let mut out = Vec::new();
        for (sf, mult) in monic.squarefree(f) {
            for (part, d) in sf.distinct_degree(f) {
                for g in part.equal_degree(f, d, &mut rng) {
                    out.push((g, mult));
                }
            }
        }
        out.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
        Ok(out)
    }

    /// Rabin's test: `x^(q^n) ≡ x` and `gcd(x^(q^(n/r)) − x, self) = 1` for
    /// every prime `r | n`.
    pub fn is_irreducible<F: Field<Elem = E>>(&self, f: &F) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let m = self.monic(f);
        let x = Self::x(f);
        let mut frob = Vec::with_capacity(n + 1);
        let mut h = x.clone();
        frob.push(h.clone());
        for _ in 0..n {
            h = h.frobenius_mod(f, &m);
            frob.push(h.clone());
        }
        if frob[n] != x {
            return false;
        }
        intfactor::int_factor(n as u64)
            .iter()
            .all(|&(r, _)| m.gcd(f, &frob[n / r as usize].sub(f, &x)).is_one(f))
    }

    /// Distinct roots in the coefficient field, in ascending order.
    pub fn roots<F: Field<Elem = E>>(&self, f: &F, seed: u64) -> Vec<E> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let m = self.monic(f);
        let x = Self::x(f);
        let xq = x.rem(f, &m).unwrap().frobenius_mod(f, &m);
        let linear = m.gcd(f, &xq.sub(f, &x));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut roots: Vec<E> = linear
            .equal_degree(f, 1, &mut rng)
            .iter()
            .map(|l| f.neg(l.coeff(0)))
            .collect();
        roots.sort();
        roots
    }
}

/// First monic irreducible of degree `d` when enumerating `x^d + Σ c_i x^i`
/// by the integer `Σ c_i 7^i` in increasing order (so `c_0` varies fastest).
pub fn find_irreducible(d: u32) -> Result<PolyF7> {
    if d == 0 {
        return Err(Error::InvalidParameter("degree must be positive"));
    }
    let d = d as usize;
    let mut digits = vec![0u8; d];
    loop {
        // Constant term 0 means x divides it, except for d = 1.
        if d == 1 || digits[0] != 0 {
            let mut c: Vec<F7> = digits.iter().map(|&v| F7::new(v as u64)).collect();
            c.push(F7::ONE);
            let p = PolyF7::from_coeffs(c);
            if p.is_irreducible(&Gf7) {
                return Ok(p);
            }
        }
        // increment base-7 counter
        let mut i = 0;
        loop {
            if i == d {
                return Err(Error::Internal("irreducible search exhausted".into()));
            }
            digits[i] += 1;
            if digits[i] < 7 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> PolyF7 {
        PolyF7::from_i64s(c)
    }

    fn product(factors: &[(PolyF7, u32)]) -> PolyF7 {
        factors.iter().fold(PolyF7::one(&Gf7), |acc, (g, m)| {
            (0..*m).fold(acc, |a, _| a.mul(&Gf7, g))
        })
    }

    #[test]
    fn trimmed_form() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 7, 14]).is_zero());
    }

    #[test]
    fn factor_difference_of_squares() {
        let f = p(&[-1, 0, 1]).factor(&Gf7, 0).unwrap();
        assert_eq!(f, vec![(p(&[1, 1]), 1), (p(&[-1, 1]), 1)]);
    }

    #[test]
    fn x2_plus_1_is_irreducible() {
        // no roots by exhaustive search
        let g = p(&[1, 0, 1]);
        assert!((0..7).all(|a| g.eval(&Gf7, F7::new(a)) != F7::ZERO));
        assert!(g.is_irreducible(&Gf7));
        assert_eq!(g.factor(&Gf7, 1).unwrap(), vec![(g.clone(), 1)]);
    }

    #[test]
    fn factor_cube() {
        let l = p(&[-2, 1]);
        let cube = l.mul(&Gf7, &l).mul(&Gf7, &l);
        assert_eq!(cube.factor(&Gf7, 2).unwrap(), vec![(l, 3)]);
    }

    #[test]
    fn factor_seventh_power_needs_pth_root() {
        // (x^2 + 1)^7 (x - 3)^8
        let g = p(&[1, 0, 1]);
        let l = p(&[-3, 1]);
        let mut f = PolyF7::one(&Gf7);
        for _ in 0..7 {
            f = f.mul(&Gf7, &g);
        }
        for _ in 0..8 {
            f = f.mul(&Gf7, &l);
        }
        let fac = f.factor(&Gf7, 3).unwrap();
        assert_eq!(fac, vec![(l, 8), (g, 7)]);
    }

    #[test]
    fn factor_zero_is_error() {
        assert_eq!(PolyF7::zero().factor(&Gf7, 0), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn find_irreducible_small_degrees() {
        let f1 = find_irreducible(1).unwrap();
        assert_eq!(f1.degree(), Some(1));
        assert_eq!(f1, p(&[0, 1]));
        let f2 = find_irreducible(2).unwrap();
        assert_eq!(f2.degree(), Some(2));
        assert!(f2.is_monic(&Gf7));
        assert!((0..7).all(|a| f2.eval(&Gf7, F7::new(a)) != F7::ZERO));
        assert_eq!(f2, p(&[1, 0, 1]));
        assert_eq!(find_irreducible(0), Err(Error::InvalidParameter("degree must be positive")));
    }

    /// Irreducibility by the definition: x^(7^k) − x shares no factor with f
    /// for every k < d, and x^(7^d) ≡ x. Computed with plain repeated
    /// 7th powers rather than the Rabin shortcut.
    fn irreducible_by_gcd_chain(f: &PolyF7) -> bool {
        let d = f.degree().unwrap();
        let x = PolyF7::x(&Gf7).rem(&Gf7, f).unwrap();
        let mut h = x.clone();
        for k in 1..=d {
            let mut next = PolyF7::one(&Gf7);
            for _ in 0..7 {
                next = next.mulmod(&Gf7, &h, f);
            }
            h = next;
            if k < d && !f.gcd(&Gf7, &h.sub(&Gf7, &x)).is_one(&Gf7) {
                return false;
            }
        }
        h == x
    }

    #[test]
    fn find_irreducible_is_deterministic_and_irreducible() {
        for d in [3u32, 4, 5, 6, 12, 15, 18] {
            let f = find_irreducible(d).unwrap();
            assert_eq!(f.degree(), Some(d as usize));
            assert!(f.is_monic(&Gf7));
            assert!(irreducible_by_gcd_chain(&f), "degree {d}");
            assert_eq!(find_irreducible(d).unwrap(), f);
        }
    }

    #[test]
    fn rabin_agrees_with_gcd_chain_on_small_degrees() {
        // every monic quartic with c0 = 1
        for k in 0..343u32 {
            let c = [1, (k % 7) as i64, ((k / 7) % 7) as i64, (k / 49) as i64, 1];
            let f = p(&c);
            assert_eq!(f.is_irreducible(&Gf7), irreducible_by_gcd_chain(&f), "{c:?}");
        }
    }

    #[test]
    fn roots_of_split_polynomial() {
        let f = p(&[-1, 1])
            .mul(&Gf7, &p(&[-4, 1]))
            .mul(&Gf7, &p(&[-4, 1]))
            .mul(&Gf7, &p(&[1, 0, 1]));
        assert_eq!(f.roots(&Gf7, 9), vec![F7::new(1), F7::new(4)]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn factor_round_trip(c in proptest::collection::vec(0u8..7, 1..=20), seed in any::<u64>()) {
            let mut c = c;
            c.push(1);
            let f = PolyF7::from_u8s(&c);
            let fac = f.factor(&Gf7, seed).unwrap();
            prop_assert_eq!(product(&fac), f);
            for (g, _) in &fac {
                prop_assert!(g.is_irreducible(&Gf7));
                prop_assert!(irreducible_by_gcd_chain(g));
            }
        }
    }
}
