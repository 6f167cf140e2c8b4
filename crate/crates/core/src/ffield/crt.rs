// SPDX-License-Identifier: Apache-2.0

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `x ≡ residue (mod modulus)` with `0 ≤ residue < modulus`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CrtConstraint {
    #[serde(with = "decimal")]
    residue: BigUint,
    #[serde(with = "decimal")]
    modulus: BigUint,
}

impl CrtConstraint {
    pub fn new(residue: impl Into<BigUint>, modulus: impl Into<BigUint>) -> Result<Self> {
        let residue = residue.into();
        let modulus = modulus.into();
        if modulus.is_zero() {
            return Err(Error::InvalidParameter("modulus must be positive"));
        }
        if residue >= modulus {
            return Err(Error::InvalidParameter("residue must be below modulus"));
        }
        Ok(CrtConstraint { residue, modulus })
    }

    /// The trivial constraint `x ≡ 0 (mod 1)`.
    pub fn trivial() -> Self {
        CrtConstraint {
            residue: BigUint::zero(),
            modulus: BigUint::one(),
        }
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn is_satisfied_by(&self, x: &BigUint) -> bool {
        x % &self.modulus == self.residue
    }

    /// Combines with another constraint; moduli need not be coprime.
    pub fn combine(&self, other: &CrtConstraint) -> Result<CrtConstraint> {
        let (m1, m2) = (BigInt::from(self.modulus.clone()), BigInt::from(other.modulus.clone()));
        let (r1, r2) = (BigInt::from(self.residue.clone()), BigInt::from(other.residue.clone()));
        let g = m1.gcd(&m2);
        let diff = &r2 - &r1;
        if !(&diff % &g).is_zero() {
            return Err(Error::InconsistentSystem);
        }
        let m1g = &m1 / &g;
        let m2g = &m2 / &g;
        // m1g * s ≡ 1 (mod m2g)
        let s = m1g.extended_gcd(&m2g).x;
        let t = ((&diff / &g) * s).mod_floor(&m2g);
        let lcm = &m1g * &m2;
        let x = (r1 + &m1 * t).mod_floor(&lcm);
        Ok(CrtConstraint {
            residue: x.to_biguint().expect("non-negative after mod_floor"),
            modulus: lcm.to_biguint().expect("positive"),
        })
    }
}

impl fmt::Display for CrtConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

/// Folds a non-empty list of congruences into one modulo the lcm.
pub fn crt_combine(constraints: &[CrtConstraint]) -> Result<CrtConstraint> {
    let (first, rest) = constraints.split_first().ok_or(Error::EmptySystem)?;
    rest.iter().try_fold(first.clone(), |acc, c| acc.combine(c))
}

/// Serde adapter writing big integers as decimal strings.
pub(crate) mod decimal {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> core::result::Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::from_str(&s).map_err(serde::de::Error::custom)
    }
}
