// SPDX-License-Identifier: Apache-2.0

//! The symmetric group `S5`, its presentation on `W = (1 2)` and
//! `Z = (1 2 3 4 5)`, and the seven irreducible representations over `F7`
//! extended from the generator images to all 120 elements.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::blocklift::{DSum7, IRREP_DIMS};
use crate::error::{Error, Result};
use crate::ffield::{Gf7, F7};
use crate::matlin::Matrix;

/// Order of `S5`.
pub const ORDER: usize = 120;

/// A permutation of `{1, …, 5}`; `images[i]` is the image of `i + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm5 {
    images: [u8; 5],
}

impl fmt::Debug for Perm5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm5{:?}", self.images)
    }
}

impl Perm5 {
    pub const IDENTITY: Perm5 = Perm5 {
        images: [1, 2, 3, 4, 5],
    };
    /// The transposition `(1 2)`.
    pub const W: Perm5 = Perm5 {
        images: [2, 1, 3, 4, 5],
    };
    /// The 5-cycle `(1 2 3 4 5)`.
    pub const Z: Perm5 = Perm5 {
        images: [2, 3, 4, 5, 1],
    };

    pub fn new(images: [u8; 5]) -> Result<Self> {
        let mut seen = [false; 5];
        for &v in &images {
            if !(1..=5).contains(&v) || seen[v as usize - 1] {
                return Err(Error::InvalidParameter("not a permutation of 1..=5"));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Perm5 { images })
    }

    /// Product of cycles, rightmost applied first.
    pub fn from_cycles(cycles: &[&[u8]]) -> Result<Self> {
        let mut p = Perm5::IDENTITY;
        for cyc in cycles.iter().rev() {
            let mut images = [1, 2, 3, 4, 5];
            for (k, &a) in cyc.iter().enumerate() {
                let b = cyc[(k + 1) % cyc.len()];
                if !(1..=5).contains(&a) {
                    return Err(Error::InvalidParameter("cycle entry outside 1..=5"));
                }
                images[a as usize - 1] = b;
            }
            p = Perm5::new(images)?.compose(&p);
        }
        Ok(p)
    }

    pub fn images(&self) -> [u8; 5] {
        self.images
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.images[x as usize - 1]
    }

    /// `self ∘ h`: apply `h` first.
    pub fn compose(&self, h: &Perm5) -> Perm5 {
        let mut images = [0; 5];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = self.apply(h.images[i]);
        }
        Perm5 { images }
    }

    pub fn inverse(&self) -> Perm5 {
        let mut images = [0; 5];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u8 + 1;
        }
        Perm5 { images }
    }

    /// Position in the lexicographic order of image arrays (Lehmer code).
    pub fn rank(&self) -> usize {
        const FACT: [usize; 5] = [24, 6, 2, 1, 1];
        (0..5)
            .map(|i| {
                let smaller = self.images[i + 1..]
                    .iter()
                    .filter(|&&v| v < self.images[i])
                    .count();
                smaller * FACT[i]
            })
            .sum()
    }

    pub fn from_rank(mut r: usize) -> Perm5 {
        const FACT: [usize; 5] = [24, 6, 2, 1, 1];
        let mut pool: Vec<u8> = vec![1, 2, 3, 4, 5];
        let mut images = [0; 5];
        for i in 0..5 {
            let k = r / FACT[i];
            r %= FACT[i];
            images[i] = pool.remove(k);
        }
        Perm5 { images }
    }

    pub fn is_even(&self) -> bool {
        let inversions = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count();
        inversions % 2 == 0
    }
}

/// `S5` with a canonical lexicographic numbering and its Cayley tables.
#[derive(Clone)]
pub struct S5 {
    elements: Vec<Perm5>,
    mul: Vec<[u8; ORDER]>,
    inv: [u8; ORDER],
}

impl fmt::Debug for S5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("S5")
    }
}

impl Default for S5 {
    fn default() -> Self {
        Self::new()
    }
}

impl S5 {
    pub fn new() -> Self {
        let elements: Vec<Perm5> = (0..ORDER).map(Perm5::from_rank).collect();
        let mul = elements
            .iter()
            .map(|g| {
                let mut row = [0u8; ORDER];
                for (j, h) in elements.iter().enumerate() {
                    row[j] = g.compose(h).rank() as u8;
                }
                row
            })
            .collect();
        let mut inv = [0u8; ORDER];
        for (i, g) in elements.iter().enumerate() {
            inv[i] = g.inverse().rank() as u8;
        }
        S5 { elements, mul, inv }
    }

    pub fn elements(&self) -> &[Perm5] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> Perm5 {
        self.elements[i]
    }

    pub fn index_of(&self, p: &Perm5) -> usize {
        p.rank()
    }

    /// Index of `elements[a] ∘ elements[b]`.
    #[inline]
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    pub fn inv_index(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// One representative per cycle type: `1^5, 2·1^3, 2^2·1, 3·1^2, 3·2,
    /// 4·1, 5`.
    pub fn class_representatives() -> [Perm5; 7] {
        let c = |cs: &[&[u8]]| Perm5::from_cycles(cs).expect("valid cycles");
        [
            Perm5::IDENTITY,
            c(&[&[1, 2]]),
            c(&[&[1, 2], &[3, 4]]),
            c(&[&[1, 2, 3]]),
            c(&[&[1, 2, 3], &[4, 5]]),
            c(&[&[1, 2, 3, 4]]),
            c(&[&[1, 2, 3, 4, 5]]),
        ]
    }
}

/// A letter of a word in the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    W,
    WInv,
    Z,
    ZInv,
}

/// A defining relation `lhs = rhs` of the presentation of `S5`.
#[derive(Clone, Copy, Debug)]
pub struct Relation {
    pub name: &'static str,
    pub lhs: &'static [Letter],
    pub rhs: &'static [Letter],
}

pub use relation_words::RELATIONS;

mod relation_words {
    use super::Letter::{WInv as w, ZInv as z, W, Z};
    use super::Relation;

    /// The six relations on `W, Z`. Commutators are `[a, b] = a⁻¹b⁻¹ab`.
    pub const RELATIONS: [Relation; 6] = [
        Relation {
            name: "W^2 = id",
            lhs: &[W, W],
            rhs: &[],
        },
        Relation {
            name: "Z^5 = id",
            lhs: &[Z, Z, Z, Z, Z],
            rhs: &[],
        },
        Relation {
            name: "(ZW)^4 = id",
            lhs: &[Z, W, Z, W, Z, W, Z, W],
            rhs: &[],
        },
        Relation {
            name: "W Z^-1 W Z W = Z^-1 W Z W Z^-1 W Z",
            lhs: &[W, z, W, Z, W],
            rhs: &[z, W, Z, W, z, W, Z],
        },
        Relation {
            name: "[W, Z^-2 W Z^2] = id",
            lhs: &[w, z, z, w, Z, Z, W, z, z, W, Z, Z],
            rhs: &[],
        },
        Relation {
            name: "[W, Z^-3 W Z^3] = id",
            lhs: &[w, z, z, z, w, Z, Z, Z, W, z, z, z, W, Z, Z, Z],
            rhs: &[],
        },
    ];
}

/// Evaluates a word given images of the four letters.
pub fn eval_word<T: Clone>(word: &[Letter], images: [&T; 4], one: T, mul: impl Fn(&T, &T) -> T) -> T {
    word.iter().fold(one, |acc, l| {
        let img = match l {
            Letter::W => images[0],
            Letter::WInv => images[1],
            Letter::Z => images[2],
            Letter::ZInv => images[3],
        };
        mul(&acc, img)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorPerms {
    pub w: [u8; 5],
    pub z: [u8; 5],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentData {
    pub name: String,
    pub dim: usize,
    pub w: Vec<Vec<i64>>,
    pub z: Vec<Vec<i64>>,
}

/// The generator images as integer matrices, before reduction mod 7.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorData {
    pub format_version: u32,
    pub generators: GeneratorPerms,
    pub components: Vec<ComponentData>,
}

impl GeneratorData {
    pub const FORMAT_VERSION: u32 = 1;
    pub const BUILTIN_JSON: &'static str = include_str!("../data/s5_generators.json");
    /// SHA-256 of `data/s5_generators.json`.
    pub const BUILTIN_SHA256: &'static str =
        "ae8b6774462532e6d2b4ed82f84d333463c6896dd6378d6bfe1c5d64d87a1074";

    pub fn builtin() -> Self {
        Self::from_json(Self::BUILTIN_JSON).expect("bundled generator data is valid")
    }

    pub fn sha256_hex(bytes: &[u8]) -> String {
        Sha256::digest(bytes)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    /// Parses data after checking its SHA-256 against the bundled file.
    pub fn from_verified_bytes(bytes: &[u8]) -> Result<Self> {
        let got = Self::sha256_hex(bytes);
        if got != Self::BUILTIN_SHA256 {
            return Err(Error::CorruptGeneratorData(format!(
                "sha256 mismatch: expected {}, got {got}",
                Self::BUILTIN_SHA256
            )));
        }
        let text = core::str::from_utf8(bytes)
            .map_err(|_| Error::CorruptGeneratorData("not UTF-8".into()))?;
        Self::from_json(text)
    }

    /// Parses and shape-checks, without the hash check.
    pub fn from_json(text: &str) -> Result<Self> {
        let data: GeneratorData = serde_json::from_str(text)
            .map_err(|e| Error::CorruptGeneratorData(format!("{e}")))?;
        if data.format_version != Self::FORMAT_VERSION {
            return Err(Error::CorruptGeneratorData(format!(
                "format_version {} unsupported",
                data.format_version
            )));
        }
        if data.components.len() != 7 {
            return Err(Error::CorruptGeneratorData("expected 7 components".into()));
        }
        for (c, &dim) in data.components.iter().zip(IRREP_DIMS.iter()) {
            let square = |m: &Vec<Vec<i64>>| m.len() == dim && m.iter().all(|r| r.len() == dim);
            if c.dim != dim || !square(&c.w) || !square(&c.z) {
                return Err(Error::CorruptGeneratorData(format!(
                    "component {} must be {dim}×{dim}",
                    c.name
                )));
            }
        }
        Perm5::new(data.generators.w)?;
        Perm5::new(data.generators.z)?;
        Ok(data)
    }

    fn reduce(m: &[Vec<i64>]) -> Matrix<F7> {
        let n = m.len();
        Matrix::from_fn(n, n, |i, j| F7::from_i64(m[i][j]))
    }

    /// Image of `W` in each component, reduced mod 7.
    pub fn w_images(&self) -> DSum7 {
        DSum7::from_fn(|c| Self::reduce(&self.components[c].w))
    }

    /// Image of `Z` in each component, reduced mod 7.
    pub fn z_images(&self) -> DSum7 {
        DSum7::from_fn(|c| Self::reduce(&self.components[c].z))
    }

    pub fn w_perm(&self) -> Perm5 {
        Perm5::new(self.generators.w).expect("validated at parse time")
    }

    pub fn z_perm(&self) -> Perm5 {
        Perm5::new(self.generators.z).expect("validated at parse time")
    }
}

/// Images of every element of `S5` in the seven irreducible
/// representations, indexed like [`S5::elements`].
#[derive(Clone, Debug)]
pub struct IrrepTable {
    entries: Vec<DSum7>,
    w: DSum7,
    z: DSum7,
    w_perm: Perm5,
    z_perm: Perm5,
    /// BFS depth of the Cayley graph on `{W, Z}`.
    pub diameter: usize,
}

impl IrrepTable {
    /// Breadth-first closure over the Cayley graph: the image of `g ∘ s` is
    /// the image of `g` times the image of the generator `s`.
    pub fn build(group: &S5, data: &GeneratorData) -> Result<Self> {
        let w = data.w_images();
        let z = data.z_images();
        let gens = [(data.w_perm(), &w), (data.z_perm(), &z)];
        let mut slots: Vec<Option<DSum7>> = vec![None; ORDER];
        let mut depth = vec![0usize; ORDER];
        let id = Perm5::IDENTITY.rank();
        slots[id] = Some(DSum7::identity());
        let mut queue = VecDeque::from([id]);
        let mut reached = 1;
        while let Some(g) = queue.pop_front() {
            for (s, img) in &gens {
                let h = group.mul_index(g, s.rank());
                if slots[h].is_none() {
                    let next = slots[g].as_ref().expect("visited").mul(img);
                    slots[h] = Some(next);
                    depth[h] = depth[g] + 1;
                    reached += 1;
                    queue.push_back(h);
                }
            }
        }
        if reached != ORDER {
            return Err(Error::CorruptGeneratorData(format!(
                "generators reach only {reached} of {ORDER} elements"
            )));
        }
        Ok(IrrepTable {
            entries: slots.into_iter().map(|s| s.expect("all reached")).collect(),
            w,
            z,
            w_perm: data.w_perm(),
            z_perm: data.z_perm(),
            diameter: depth.into_iter().max().unwrap_or(0),
        })
    }

    pub fn get(&self, index: usize) -> &DSum7 {
        &self.entries[index]
    }

    pub fn entries(&self) -> &[DSum7] {
        &self.entries
    }

    pub fn w_image(&self) -> &DSum7 {
        &self.w
    }

    pub fn z_image(&self) -> &DSum7 {
        &self.z
    }

    /// `table[g ∘ h] = table[g] · table[h]` for every pair.
    pub fn is_homomorphism(&self, group: &S5) -> bool {
        (0..ORDER).all(|g| {
            (0..ORDER).all(|h| self.entries[group.mul_index(g, h)] == self.entries[g].mul(&self.entries[h]))
        })
    }

    /// Checks all six relations on the permutations `W, Z` and on each of
    /// the seven components, plus that `W, Z` generate all of `S5`.
    pub fn verify_relations(&self) -> RelationReport {
        let mut checks = Vec::new();
        let (pw, pz) = (self.w_perm, self.z_perm);
        let perm_images = [&pw, &pw.inverse(), &pz, &pz.inverse()];
        let pmul = |a: &Perm5, b: &Perm5| a.compose(b);
        for rel in &RELATIONS {
            let l = eval_word(rel.lhs, perm_images, Perm5::IDENTITY, pmul);
            let r = eval_word(rel.rhs, perm_images, Perm5::IDENTITY, pmul);
            checks.push(RelationCheck {
                relation: rel.name,
                target: String::from("perm"),
                passed: l == r,
            });
        }
        for (c, &dim) in IRREP_DIMS.iter().enumerate() {
            let wm = &self.w.blocks[c];
            let zm = &self.z.blocks[c];
            let name = crate::blocklift::COMPONENT_NAMES[c];
            let (wi, zi) = match (wm.inverse(&Gf7), zm.inverse(&Gf7)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => {
                    for rel in &RELATIONS {
                        checks.push(RelationCheck {
                            relation: rel.name,
                            target: String::from(name),
                            passed: false,
                        });
                    }
                    continue;
                }
            };
            let images = [wm, &wi, zm, &zi];
            let one = Matrix::identity(&Gf7, dim);
            let mmul = |a: &Matrix<F7>, b: &Matrix<F7>| a.mul(&Gf7, b);
            for rel in &RELATIONS {
                let l = eval_word(rel.lhs, images, one.clone(), mmul);
                let r = eval_word(rel.rhs, images, one.clone(), mmul);
                checks.push(RelationCheck {
                    relation: rel.name,
                    target: String::from(name),
                    passed: l == r,
                });
            }
        }
        checks.push(RelationCheck {
            relation: "<W, Z> = S5",
            target: String::from("perm"),
            passed: self.entries.len() == ORDER,
        });
        RelationReport { checks }
    }

    /// Mod-7 characters: trace vectors on the class representatives must be
    /// pairwise distinct, and `Σ_g χ_i(g) χ_j(g⁻¹) = 120 δ_ij` in `F7`.
    pub fn character_check(&self, group: &S5) -> CharacterReport {
        let reps = S5::class_representatives();
        let traces: Vec<[u8; 7]> = (0..7)
            .map(|c| {
                let mut v = [0u8; 7];
                for (k, r) in reps.iter().enumerate() {
                    v[k] = trace(&self.entries[r.rank()].blocks[c]).value();
                }
                v
            })
            .collect();
        let distinct = (0..7).all(|i| (i + 1..7).all(|j| traces[i] != traces[j]));
        let chi: Vec<Vec<F7>> = (0..7)
            .map(|c| self.entries.iter().map(|e| trace(&e.blocks[c])).collect())
            .collect();
        let expected_diag = F7::new(ORDER as u64);
        let mut orthogonality = Vec::with_capacity(49);
        for i in 0..7 {
            for j in 0..7 {
                let sum = (0..ORDER).fold(F7::ZERO, |acc, g| acc + chi[i][g] * chi[j][group.inv_index(g)]);
                let expected = if i == j { expected_diag } else { F7::ZERO };
                orthogonality.push(OrthogonalityCheck {
                    i,
                    j,
                    value: sum.value(),
                    passed: sum == expected,
                });
            }
        }
        CharacterReport {
            traces,
            distinct,
            orthogonality,
        }
    }
}

fn trace(m: &Matrix<F7>) -> F7 {
    (0..m.rows()).fold(F7::ZERO, |acc, i| acc + m.get(i, i))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: &'static str,
    /// `"perm"` or a component name.
    pub target: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityCheck {
    pub i: usize,
    pub j: usize,
    pub value: u8,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterReport {
    /// Per component, traces on the seven class representatives.
    pub traces: Vec<[u8; 7]>,
    pub distinct: bool,
    pub orthogonality: Vec<OrthogonalityCheck>,
}

impl CharacterReport {
    pub fn all_passed(&self) -> bool {
        self.distinct && self.orthogonality.iter().all(|c| c.passed)
    }
}
