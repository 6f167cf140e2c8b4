// SPDX-License-Identifier: Apache-2.0

//! The Wedderburn isomorphism `f: F7[S5] → ⊕ Mat_d(F7)` and the induced lift
//! of `Mat3(F7[S5])` to seven square blocks over `F7`.

use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::ffield::{random_f7, Gf7, F7};
use crate::groupring::{square_and_multiply, GRElem, GRMat3, GroupRing};
use crate::matlin::Matrix;
use crate::s5rep::{GeneratorData, IrrepTable, ORDER, S5};

/// Dimensions of the irreducible representations of `S5` over `F7`.
pub const IRREP_DIMS: [usize; 7] = [1, 1, 4, 4, 5, 5, 6];
/// Sizes of the lifted blocks of a 3×3 matrix.
pub const BLOCK_SIZES: [usize; 7] = [3, 3, 12, 12, 15, 15, 18];
pub const COMPONENT_NAMES: [&str; 7] = [
    "trivial",
    "sign",
    "four",
    "four_prime",
    "five",
    "five_prime",
    "six",
];

/// A tuple of square matrices of sizes `IRREP_DIMS`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DSum7 {
    pub blocks: [Matrix<F7>; 7],
}

impl DSum7 {
    pub fn from_fn(f: impl FnMut(usize) -> Matrix<F7>) -> Self {
        DSum7 {
            blocks: core::array::from_fn(f),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|c| Matrix::identity(&Gf7, IRREP_DIMS[c]))
    }

    pub fn zero() -> Self {
        Self::from_fn(|c| Matrix::zeros(IRREP_DIMS[c], IRREP_DIMS[c]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_fn(|c| self.blocks[c].mul(&Gf7, &other.blocks[c]))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(|c| self.blocks[c].add(&Gf7, &other.blocks[c]))
    }

    pub fn scale(&self, a: F7) -> Self {
        Self::from_fn(|c| self.blocks[c].scale(&Gf7, a))
    }

    /// All 120 entries in component order, each block row-major.
    pub fn flatten(&self) -> Vec<F7> {
        self.blocks.iter().flat_map(|b| b.as_slice().iter().copied()).collect()
    }
}

/// Seven square blocks over `F7` of sizes `BLOCK_SIZES`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockMat {
    pub blocks: [Matrix<F7>; 7],
}

impl BlockMat {
    pub fn from_fn(f: impl FnMut(usize) -> Matrix<F7>) -> Self {
        BlockMat {
            blocks: core::array::from_fn(f),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|c| Matrix::identity(&Gf7, BLOCK_SIZES[c]))
    }

    pub fn sizes(&self) -> [usize; 7] {
        core::array::from_fn(|c| self.blocks[c].rows())
    }

    pub fn has_canonical_shape(&self) -> bool {
        self.blocks
            .iter()
            .zip(BLOCK_SIZES.iter())
            .all(|(b, &n)| b.rows() == n && b.cols() == n)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_fn(|c| self.blocks[c].mul(&Gf7, &other.blocks[c]))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(|c| self.blocks[c].add(&Gf7, &other.blocks[c]))
    }

    pub fn scale(&self, a: F7) -> Self {
        Self::from_fn(|c| self.blocks[c].scale(&Gf7, a))
    }

    /// Blockwise power.
    pub fn pow(&self, e: &BigUint) -> Self {
        square_and_multiply(self, e, Self::identity, |a, b| a.mul(b)).0
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| !b.determinant(&Gf7).is_zero())
    }
}

/// Group ring arithmetic together with the irreducible representation
/// table; the shared, read-only context of the whole attack.
#[derive(Clone, Debug)]
pub struct Wedderburn {
    ring: GroupRing,
    table: IrrepTable,
}

impl Wedderburn {
    /// Uses the bundled generator data.
    pub fn new() -> Result<Self> {
        Self::with_data(&GeneratorData::builtin())
    }

    pub fn with_data(data: &GeneratorData) -> Result<Self> {
        let ring = GroupRing::new();
        let table = IrrepTable::build(ring.group(), data)?;
        Ok(Wedderburn { ring, table })
    }

    pub fn ring(&self) -> &GroupRing {
        &self.ring
    }

    pub fn group(&self) -> &S5 {
        self.ring.group()
    }

    pub fn table(&self) -> &IrrepTable {
        &self.table
    }

    /// `f(x) = Σ_g x[g] · ρ(g)`, componentwise.
    pub fn f(&self, x: &GRElem) -> DSum7 {
        DSum7::from_fn(|c| {
            let d = IRREP_DIMS[c];
            let mut acc = alloc::vec![0u32; d * d];
            for (g, coeff) in x.coeffs().iter().enumerate() {
                let a = coeff.value() as u32;
                if a == 0 {
                    continue;
                }
                for (slot, v) in acc.iter_mut().zip(self.table.get(g).blocks[c].as_slice()) {
                    *slot += a * v.value() as u32;
                }
            }
            Matrix::from_fn(d, d, |i, j| F7::new(acc[i * d + j] as u64))
        })
    }

    /// Block `c` of the lift is the `3d × 3d` matrix whose `(i, j)` sub-block
    /// of size `d` is component `c` of `f(X[i][j])`, placed at rows
    /// `i·d..(i+1)·d` and columns `j·d..(j+1)·d`.
    pub fn lift(&self, x: &GRMat3) -> BlockMat {
        let images: [[DSum7; 3]; 3] =
            core::array::from_fn(|i| core::array::from_fn(|j| self.f(x.entry(i, j))));
        BlockMat::from_fn(|c| {
            let d = IRREP_DIMS[c];
            let mut b = Matrix::zeros(3 * d, 3 * d);
            for (i, row) in images.iter().enumerate() {
                for (j, img) in row.iter().enumerate() {
                    b.set_block(i * d, j * d, &img.blocks[c]);
                }
            }
            b
        })
    }

    /// The 120×120 matrix of `f` as a linear map: column `g` holds the
    /// flattened image of the basis element `g`.
    pub fn f_matrix(&self) -> Matrix<F7> {
        let cols: Vec<Vec<F7>> = self.table.entries().iter().map(DSum7::flatten).collect();
        Matrix::from_fn(ORDER, ORDER, |i, j| cols[j][i])
    }

    /// Seeded spot checks that `f` and the lift are algebra isomorphisms.
    pub fn verify_iso(&self, seed: u64) -> IsoReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut elem = || GRElem::from_coeffs(core::array::from_fn(|_| random_f7(&mut rng)));
        let mut f_fail = 0;
        for _ in 0..IsoReport::F_PAIRS {
            let (x, y) = (elem(), elem());
            if self.f(&self.ring.mul(&x, &y)) != self.f(&x).mul(&self.f(&y)) {
                f_fail += 1;
            }
        }
        let mut lift_fail = 0;
        for _ in 0..IsoReport::LIFT_PAIRS {
            let a = GRMat3::from_entries(core::array::from_fn(|_| core::array::from_fn(|_| elem())));
            let b = GRMat3::from_entries(core::array::from_fn(|_| core::array::from_fn(|_| elem())));
            if self.lift(&self.ring.mat_mul(&a, &b)) != self.lift(&a).mul(&self.lift(&b)) {
                lift_fail += 1;
            }
        }
        IsoReport {
            dimension_sum: IRREP_DIMS.iter().map(|d| d * d).sum(),
            f_rank: self.f_matrix().rank(&Gf7),
            f_multiplicative_failures: f_fail,
            lift_multiplicative_failures: lift_fail,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub dimension_sum: usize,
    pub f_rank: usize,
    pub f_multiplicative_failures: usize,
    pub lift_multiplicative_failures: usize,
}

impl IsoReport {
    pub const F_PAIRS: usize = 500;
    pub const LIFT_PAIRS: usize = 100;

    pub fn all_passed(&self) -> bool {
        self.dimension_sum == ORDER
            && self.f_rank == ORDER
            && self.f_multiplicative_failures == 0
            && self.lift_multiplicative_failures == 0
    }
}
