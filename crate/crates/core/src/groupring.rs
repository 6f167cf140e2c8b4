// SPDX-License-Identifier: Apache-2.0

//! The group ring `F7[S5]` and 3×3 matrices over it.

use core::fmt;

use num_bigint::BigUint;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blocklift::Wedderburn;
use crate::error::{Error, Result};
use crate::ffield::{random_f7, F7};
use crate::s5rep::{ORDER, S5};

/// `Σ_g a_g · g` with coefficients indexed by the lexicographic numbering of
/// `S5`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GRElem {
    coeffs: [F7; ORDER],
}

impl fmt::Debug for GRElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()))
            .finish()
    }
}

impl Default for GRElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl GRElem {
    pub fn zero() -> Self {
        GRElem {
            coeffs: [F7::ZERO; ORDER],
        }
    }

    /// The basis element of the group element with index `g`.
    pub fn delta(g: usize) -> Self {
        Self::zero().with(g, F7::ONE)
    }

    pub fn one() -> Self {
        Self::delta(0)
    }

    pub fn from_coeffs(coeffs: [F7; ORDER]) -> Self {
        GRElem { coeffs }
    }

    /// Rejects anything but exactly 120 values in `0..7`.
    pub fn from_u8s(values: &[u8]) -> Result<Self> {
        if values.len() != ORDER {
            return Err(Error::DimensionMismatch("group ring element needs 120 coefficients"));
        }
        let mut coeffs = [F7::ZERO; ORDER];
        for (c, &v) in coeffs.iter_mut().zip(values) {
            if v >= 7 {
                return Err(Error::InvalidParameter("coefficient outside 0..7"));
            }
            *c = F7::new(v as u64);
        }
        Ok(GRElem { coeffs })
    }

    pub fn to_u8s(&self) -> [u8; ORDER] {
        self.coeffs.map(F7::value)
    }

    pub fn with(mut self, g: usize, c: F7) -> Self {
        self.coeffs[g] = c;
        self
    }

    pub fn coeffs(&self) -> &[F7; ORDER] {
        &self.coeffs
    }

    pub fn get(&self, g: usize) -> F7 {
        self.coeffs[g]
    }

    pub fn scale(&self, c: F7) -> Self {
        GRElem {
            coeffs: self.coeffs.map(|a| a * c),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs;
        for (a, &b) in coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a += b;
        }
        GRElem { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// A 3×3 matrix over `F7[S5]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GRMat3 {
    entries: [[GRElem; 3]; 3],
}

impl GRMat3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.entries[i][i] = GRElem::one();
        }
        m
    }

    pub fn from_entries(entries: [[GRElem; 3]; 3]) -> Self {
        GRMat3 { entries }
    }

    pub fn entries(&self) -> &[[GRElem; 3]; 3] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &GRElem {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GRElem) {
        self.entries[i][j] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                out.entries[i][j] = self.entries[i][j].add(&other.entries[i][j]);
            }
        }
        out
    }

    pub fn scale(&self, c: F7) -> Self {
        let mut out = self.clone();
        for row in out.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = e.scale(c);
            }
        }
        out
    }
}

/// Left-to-right binary exponentiation over any monoid: `⌊log2 e⌋`
/// squarings and `popcount(e) − 1` further products. Also returns those two
/// counts.
pub(crate) fn square_and_multiply<T: Clone>(
    base: &T,
    e: &BigUint,
    one: impl FnOnce() -> T,
    mul: impl Fn(&T, &T) -> T,
) -> (T, u64, u64) {
    let bits = e.bits();
    if bits == 0 {
        return (one(), 0, 0);
    }
    let mut acc = base.clone();
    let (mut squarings, mut products) = (0, 0);
    for i in (0..bits - 1).rev() {
        acc = mul(&acc, &acc);
        squarings += 1;
        if e.bit(i) {
            acc = mul(&acc, base);
            products += 1;
        }
    }
    (acc, squarings, products)
}

/// Arithmetic context for `F7[S5]`: holds the Cayley table of `S5`.
#[derive(Clone, Debug, Default)]
pub struct GroupRing {
    group: S5,
}

impl GroupRing {
    pub fn new() -> Self {
        GroupRing { group: S5::new() }
    }

    pub fn group(&self) -> &S5 {
        &self.group
    }

    pub fn add(&self, x: &GRElem, y: &GRElem) -> GRElem {
        x.add(y)
    }

    /// Convolution `(xy)[g] = Σ_{h∘k = g} x[h] y[k]`.
    pub fn mul(&self, x: &GRElem, y: &GRElem) -> GRElem {
        let mut acc = [0u32; ORDER];
        self.mul_acc(x, y, &mut acc);
        let mut coeffs = [F7::ZERO; ORDER];
        for (c, &a) in coeffs.iter_mut().zip(acc.iter()) {
            *c = F7::new(a as u64);
        }
        GRElem { coeffs }
    }

    // Each call adds at most 120 · 36 to a slot.
    fn mul_acc(&self, x: &GRElem, y: &GRElem, acc: &mut [u32; ORDER]) {
        for (h, xh) in x.coeffs.iter().enumerate() {
            let xh = xh.value() as u32;
            if xh == 0 {
                continue;
            }
            for (k, yk) in y.coeffs.iter().enumerate() {
                acc[self.group.mul_index(h, k)] += xh * yk.value() as u32;
            }
        }
    }

    /// Row-by-column product; in each entry product the left factor comes
    /// from `x`.
    pub fn mat_mul(&self, x: &GRMat3, y: &GRMat3) -> GRMat3 {
        let mut out = GRMat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = [0u32; ORDER];
                for k in 0..3 {
                    self.mul_acc(&x.entries[i][k], &y.entries[k][j], &mut acc);
                }
                let mut coeffs = [F7::ZERO; ORDER];
                for (c, &a) in coeffs.iter_mut().zip(acc.iter()) {
                    *c = F7::new(a as u64);
                }
                out.entries[i][j] = GRElem { coeffs };
            }
        }
        out
    }

    pub fn mat_pow(&self, x: &GRMat3, e: &BigUint) -> GRMat3 {
        square_and_multiply(x, e, GRMat3::identity, |a, b| self.mat_mul(a, b)).0
    }

    pub fn mat_pow_u64(&self, x: &GRMat3, e: u64) -> GRMat3 {
        self.mat_pow(x, &BigUint::from(e))
    }
}

/// Sampling regime for the public matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// Plain i.i.d. uniform coefficients.
    Uniform,
    /// Resample until every lifted block is invertible.
    Invertible,
    /// Resample until at least one lifted block is singular.
    Singular,
}

pub const RESAMPLE_CAP: u32 = 1000;

/// Uniform i.i.d. coefficients from a ChaCha8 stream seeded with `seed`,
/// filtered by `regime` through the block lift.
pub fn random_grmat(w: &Wedderburn, seed: u64, regime: Regime) -> Result<GRMat3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESAMPLE_CAP {
        let mut m = GRMat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut coeffs = [F7::ZERO; ORDER];
                for c in coeffs.iter_mut() {
                    *c = random_f7(&mut rng);
                }
                m.entries[i][j] = GRElem { coeffs };
            }
        }
        let keep = match regime {
            Regime::Uniform => true,
            Regime::Invertible => w.lift(&m).is_invertible(),
            Regime::Singular => !w.lift(&m).is_invertible(),
        };
        if keep {
            return Ok(m);
        }
    }
    Err(Error::ResamplingCapExceeded(RESAMPLE_CAP))
}
