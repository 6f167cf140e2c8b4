// SPDX-License-Identifier: Apache-2.0

//! Recovery of the secret exponent from `(M, M^n)`.
//!
//! Both matrices are lifted to seven blocks over `F7`. In each block `B`
//! with challenge `T = B^n`, the Fitting decomposition isolates the core on
//! which `B` is invertible. For every irreducible factor `g` of the core's
//! characteristic polynomial, a root `λ` of `g` in `F_{7^d}` and a
//! `λ`-eigenvector `v` give `T v = λ^n v`, so `n mod ord(λ)` is a discrete
//! logarithm in a small field. The congruences are merged by CRT into
//! `n ≡ n0 (mod L)`, and the remaining unipotent part of the period (a power
//! of 7 no larger than 49 for blocks of size ≤ 18) is settled by testing the
//! few candidates `n0 + tL` directly.
//!
//! `n` is only recoverable modulo the period of `M`, above its preperiod;
//! any such exponent yields the same shared key.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::blocklift::{BlockMat, Wedderburn};
use crate::error::{Error, Result};
use crate::ffield::{discrete_log, CrtConstraint, Field, FqElem, FqField, FqValue, Gf7, F7};
use crate::groupring::GRMat3;
use crate::matlin::{fitting_split, restrict, Matrix};

/// Blocks are processed largest first.
pub const BLOCK_ORDER: [usize; 7] = [6, 5, 4, 3, 2, 1, 0];

const FACTOR_SEED: u64 = 0x5eed;

/// One irreducible factor of a core characteristic polynomial and the
/// congruence it yields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub degree: u32,
    pub multiplicity: u32,
    /// Monic factor, coefficients lowest degree first.
    pub factor: Vec<u8>,
    /// Canonical root `λ` of the factor.
    pub eigenvalue: FqValue,
    /// `μ = λ^n`, read off the challenge.
    pub challenge_eigenvalue: FqValue,
    pub eigenvalue_order: u64,
    pub constraint: CrtConstraint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub block: usize,
    pub size: usize,
    pub fitting_index: usize,
    pub core_dim: usize,
    pub factors: Vec<FactorRecord>,
    /// Wall time spent on this block; zero unless a caller measured it.
    pub elapsed_us: u64,
}

impl BlockReport {
    pub fn constraints(&self) -> impl Iterator<Item = &CrtConstraint> {
        self.factors.iter().map(|f| &f.constraint)
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.factors.iter().map(|f| f.multiplicity).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttackTranscript {
    pub blocks: Vec<BlockReport>,
    /// `n ≡ n0 (mod L)` from all eigenvalue constraints.
    pub combined: CrtConstraint,
    /// Smallest `s` with `7^s` at least the largest factor multiplicity.
    pub p_part_exponent: u32,
    pub max_fitting_index: usize,
    /// Candidates `n0 + tL` were tried for `t = 0..=search_limit`.
    pub search_limit: u64,
    pub candidates_tried: u64,
    #[serde(with = "crate::ffield::decimal")]
    pub recovered_exponent: BigUint,
    pub total_elapsed_us: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recovery {
    /// An exponent `n'` with `M^{n'} = C`.
    pub exponent: BigUint,
    /// `L`: the recovered exponent is determined modulo `L · 7^e` for some
    /// `e ≤ p_part_exponent`, above the preperiod.
    pub period_modulus: BigUint,
    pub transcript: AttackTranscript,
}

/// Canonical extension fields, built on demand per degree.
#[derive(Default)]
pub struct FieldCache {
    fields: BTreeMap<u32, FqField>,
}

impl FieldCache {
    pub fn get(&mut self, degree: u32) -> Result<&FqField> {
        Ok(match self.fields.entry(degree) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(FqField::new(degree)?),
        })
    }
}

/// Congruences on `n` from one block pair `(B, T = B^n)`.
pub fn block_constraints(b: &Matrix<F7>, t: &Matrix<F7>) -> Result<Vec<CrtConstraint>> {
    let report = analyze_block(0, b, t, &mut FieldCache::default())?;
    Ok(report.factors.into_iter().map(|f| f.constraint).collect())
}

/// Canonical root of the irreducible `g` of degree `d` in `F_{7^d}`: the
/// class of `x` when `g` is the field modulus, else the least root.
fn canonical_root(field: &FqField, g: &crate::ffield::PolyF7) -> Result<FqElem> {
    if g == field.modulus() {
        return Ok(field.generator_root());
    }
    g.embed(field)
        .roots(field, FACTOR_SEED)
        .first()
        .copied()
        .ok_or_else(|| Error::Internal(format!("irreducible of degree {} has no root in its field", field.degree())))
}

pub fn analyze_block(
    index: usize,
    b: &Matrix<F7>,
    t: &Matrix<F7>,
    fields: &mut FieldCache,
) -> Result<BlockReport> {
    if !b.is_square() || b.rows() != t.rows() || b.cols() != t.cols() {
        return Err(Error::DimensionMismatch("block pair must be square and equal-sized"));
    }
    let not_power = |reason: &str| Error::not_power(Some(index), reason);
    let split = fitting_split(&Gf7, b);
    let mut report = BlockReport {
        block: index,
        size: b.rows(),
        fitting_index: split.index,
        core_dim: split.core_dim(),
        factors: Vec::new(),
        elapsed_us: 0,
    };
    let tc = restrict(&Gf7, t, &split).map_err(|_| not_power("challenge does not preserve the core subspace"))?;
    if split.is_nilpotent() {
        if !tc.is_square() || tc.rows() != 0 {
            return Err(Error::Internal("restriction to empty core".into()));
        }
        return Ok(report);
    }
    let bc = &split.core;
    let cp = bc.char_poly(&Gf7);
    for (g, multiplicity) in cp.factor(&Gf7, FACTOR_SEED)? {
        let degree = g.degree().expect("nonconstant factor") as u32;
        let field = fields.get(degree)?;
        let lambda = canonical_root(field, &g)?;
        let bq = bc.map(|x| field.embed(x));
        let tq = tc.map(|x| field.embed(x));
        let v = bq.eigenvector(field, lambda)?;
        let tv = tq.mul_vec(field, &v);
        let lead = v.iter().position(|&c| !field.is_zero(c)).expect("nonzero eigenvector");
        // v[lead] = 1
        let mu = tv[lead];
        if field.is_zero(mu) || tv.iter().zip(&v).any(|(&a, &c)| a != field.mul(mu, c)) {
            return Err(not_power("eigenvector of the base is not an eigenvector of the challenge"));
        }
        let constraint = discrete_log(field, lambda, mu).map_err(|e| match e {
            Error::NotInSubgroup => not_power("eigenvalue of the challenge is not a power of the base eigenvalue"),
            other => other,
        })?;
        report.factors.push(FactorRecord {
            degree,
            multiplicity,
            factor: g.coeffs().iter().map(|c| c.value()).collect(),
            eigenvalue: field.encode(lambda),
            challenge_eigenvalue: field.encode(mu),
            eigenvalue_order: constraint.modulus().try_into().unwrap_or(u64::MAX),
            constraint,
        });
    }
    Ok(report)
}

/// Analyzes the seven lifted block pairs in [`BLOCK_ORDER`].
pub fn analyze_blocks(lb: &BlockMat, lc: &BlockMat) -> Result<Vec<BlockReport>> {
    let mut fields = FieldCache::default();
    BLOCK_ORDER
        .iter()
        .map(|&i| analyze_block(i, &lb.blocks[i], &lc.blocks[i], &mut fields))
        .collect()
}

/// Lifts both matrices, analyzes every block, and searches the exponent.
pub fn recover_exponent(w: &Wedderburn, m: &GRMat3, c: &GRMat3) -> Result<Recovery> {
    let lb = w.lift(m);
    let lc = w.lift(c);
    let reports = analyze_blocks(&lb, &lc)?;
    finish_recovery(w, m, c, &lb, &lc, reports)
}

/// CRT, candidate search, and the final check in the group ring, given
/// per-block reports (in any order).
pub fn finish_recovery(
    w: &Wedderburn,
    m: &GRMat3,
    c: &GRMat3,
    lb: &BlockMat,
    lc: &BlockMat,
    reports: Vec<BlockReport>,
) -> Result<Recovery> {
    let mut combined = CrtConstraint::trivial();
    for r in &reports {
        for k in r.constraints() {
            combined = combined
                .combine(k)
                .map_err(|_| Error::not_power(Some(r.block), "inconsistent system of exponent congruences"))?;
        }
    }
    let max_mult = reports.iter().map(BlockReport::max_multiplicity).max().unwrap_or(0);
    let mut p_part_exponent = 0u32;
    while 7u64.pow(p_part_exponent) < max_mult as u64 {
        p_part_exponent += 1;
    }
    let k_star = reports.iter().map(|r| r.fitting_index).max().unwrap_or(0);
    let l = combined.modulus().clone();
    let n0 = combined.residue().clone();
    let offset: u64 = BigUint::from(k_star as u64)
        .div_ceil(&l)
        .try_into()
        .expect("preperiod is at most 18");
    let search_limit = 7u64.pow(p_part_exponent) + offset;

    let step = lb.pow(&l);
    let mut current = lb.pow(&n0);
    let mut exponent = n0.clone();
    let mut tried = 0u64;
    let mut ever_matched = [false; 7];
    let mut found = None;
    for _ in 0..=search_limit {
        if !exponent.is_zero() {
            tried += 1;
            let mut all = true;
            for (i, hit) in ever_matched.iter_mut().enumerate() {
                let eq = current.blocks[i] == lc.blocks[i];
                *hit |= eq;
                all &= eq;
            }
            if all {
                found = Some(exponent.clone());
                break;
            }
        }
        current = current.mul(&step);
        exponent += &l;
    }
    let Some(exponent) = found else {
        let culprit = BLOCK_ORDER.iter().copied().find(|&i| !ever_matched[i]);
        return Err(Error::not_power(culprit, "no candidate exponent reproduces the challenge"));
    };
    if &w.ring().mat_pow(m, &exponent) != c {
        return Err(Error::Internal(format!(
            "exponent {exponent} matches in the block domain but not in the group ring"
        )));
    }
    let transcript = AttackTranscript {
        blocks: reports,
        combined,
        p_part_exponent,
        max_fitting_index: k_star,
        search_limit,
        candidates_tried: tried,
        recovered_exponent: exponent.clone(),
        total_elapsed_us: 0,
    };
    Ok(Recovery {
        exponent,
        period_modulus: if l.is_zero() { BigUint::one() } else { l },
        transcript,
    })
}

/// Recovers an exponent for `a_pub` and raises `b_pub` to it.
pub fn break_dh(w: &Wedderburn, m: &GRMat3, a_pub: &GRMat3, b_pub: &GRMat3) -> Result<(GRMat3, Recovery)> {
    let rec = recover_exponent(w, m, a_pub)?;
    let key = w.ring().mat_pow(b_pub, &rec.exponent);
    Ok((key, rec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocklift::BLOCK_SIZES;
    use crate::groupring::{random_grmat, Regime};

    fn m(rows: &[&[i64]]) -> Matrix<F7> {
        let n = rows.len();
        Matrix::from_fn(n, n, |i, j| F7::from_i64(rows[i][j]))
    }

    fn residues(cs: &[CrtConstraint]) -> Vec<(u64, u64)> {
        cs.iter()
            .map(|c| (c.residue().try_into().unwrap(), c.modulus().try_into().unwrap()))
            .collect()
    }

    #[test]
    fn identity_pair_gives_residue_one() {
        let b = m(&[&[1, 2, 0], &[3, 4, 1], &[0, 5, 6]]);
        let cs = block_constraints(&b, &b).unwrap();
        assert!(!cs.is_empty());
        for c in &cs {
            assert_eq!(c.residue(), &(BigUint::one() % c.modulus()));
        }
    }

    #[test]
    fn diagonal_example() {
        // eigenvalues 3, 5, 6 have orders 6, 6, 2; 3^4 = 4, 5^4 = 2, 6^4 = 1
        let b = m(&[&[3, 0, 0], &[0, 5, 0], &[0, 0, 6]]);
        let t = b.pow_u64(&Gf7, 4);
        assert_eq!(t, m(&[&[4, 0, 0], &[0, 2, 0], &[0, 0, 1]]));
        let mut r = residues(&block_constraints(&b, &t).unwrap());
        r.sort();
        assert_eq!(r, [(0, 2), (4, 6), (4, 6)]);
    }

    #[test]
    fn nilpotent_block_gives_nothing() {
        let b = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let t = b.pow_u64(&Gf7, 5);
        assert!(block_constraints(&b, &t).unwrap().is_empty());
    }

    #[test]
    fn extension_field_eigenvalues() {
        let g = crate::ffield::find_irreducible(3).unwrap();
        let gc = g.coeffs();
        let b = Matrix::from_fn(3, 3, |i, j| {
            if j == 2 {
                -gc[i]
            } else if i == j + 1 {
                F7::ONE
            } else {
                F7::ZERO
            }
        });
        assert_eq!(b.char_poly(&Gf7), g);
        for n in [1u64, 2, 57, 341] {
            let cs = block_constraints(&b, &b.pow_u64(&Gf7, n)).unwrap();
            for c in &cs {
                assert!(c.is_satisfied_by(&BigUint::from(n)));
            }
        }
    }

    #[test]
    fn rejects_non_power_block() {
        let b = m(&[&[3, 0], &[0, 5]]);
        // swapping the eigenvectors is not a power of a diagonal matrix
        let t = m(&[&[0, 1], &[1, 0]]);
        assert!(matches!(block_constraints(&b, &t), Err(Error::NotAPowerPair { .. })));
        // 2 is not a power of 2 in ⟨6⟩ = {1, 6}
        let b = m(&[&[6]]);
        let t = m(&[&[2]]);
        assert!(matches!(block_constraints(&b, &t), Err(Error::NotAPowerPair { .. })));
    }

    #[test]
    fn recovers_small_exponents() {
        let w = Wedderburn::new().unwrap();
        let base = random_grmat(&w, 11, Regime::Invertible).unwrap();
        let rec = recover_exponent(&w, &base, &base).unwrap();
        assert_eq!(rec.exponent, BigUint::one());
        for n in [2u64, 12_345] {
            let c = w.ring().mat_pow_u64(&base, n);
            let rec = recover_exponent(&w, &base, &c).unwrap();
            assert_eq!(rec.exponent, BigUint::from(n));
            assert_eq!(rec.transcript.blocks.len(), 7);
            let order: Vec<usize> = rec.transcript.blocks.iter().map(|b| b.block).collect();
            assert_eq!(order, BLOCK_ORDER);
            for b in &rec.transcript.blocks {
                assert_eq!(b.size, BLOCK_SIZES[b.block]);
            }
        }
    }

    #[test]
    fn recovers_large_exponent_exactly() {
        let w = Wedderburn::new().unwrap();
        let base = random_grmat(&w, 21, Regime::Invertible).unwrap();
        let n = 1_000_003u64;
        let c = w.ring().mat_pow_u64(&base, n);
        let rec = recover_exponent(&w, &base, &c).unwrap();
        assert!(rec.period_modulus > BigUint::from(n));
        assert_eq!(rec.exponent, BigUint::from(n));
        assert_eq!(rec.transcript.max_fitting_index, 0);
    }

    #[test]
    fn recovers_from_singular_base() {
        let w = Wedderburn::new().unwrap();
        let base = random_grmat(&w, 12, Regime::Singular).unwrap();
        let c = w.ring().mat_pow_u64(&base, 65_537);
        let rec = recover_exponent(&w, &base, &c).unwrap();
        assert!(rec.transcript.max_fitting_index >= 1);
        assert!(rec.exponent >= BigUint::from(rec.transcript.max_fitting_index as u64));
        assert_eq!(w.ring().mat_pow(&base, &rec.exponent), c);
        assert!(rec.transcript.combined.is_satisfied_by(&BigUint::from(65_537u64)));
    }

    #[test]
    fn break_dh_trivial_exponents() {
        let w = Wedderburn::new().unwrap();
        let base = random_grmat(&w, 13, Regime::Uniform).unwrap();
        let (key, _) = break_dh(&w, &base, &base, &base).unwrap();
        assert_eq!(key, w.ring().mat_pow_u64(&base, 1));
        let a = 12_345u64;
        let b = 67_890u64;
        let (ap, bp) = (w.ring().mat_pow_u64(&base, a), w.ring().mat_pow_u64(&base, b));
        let (key, _) = break_dh(&w, &base, &ap, &bp).unwrap();
        assert_eq!(key, w.ring().mat_pow_u64(&base, a * b));
    }

    #[test]
    fn random_challenge_is_rejected() {
        let w = Wedderburn::new().unwrap();
        let base = random_grmat(&w, 14, Regime::Uniform).unwrap();
        let noise = random_grmat(&w, 15, Regime::Uniform).unwrap();
        assert!(matches!(
            recover_exponent(&w, &base, &noise),
            Err(Error::NotAPowerPair { .. })
        ));
    }
}
