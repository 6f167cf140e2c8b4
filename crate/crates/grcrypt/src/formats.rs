// SPDX-License-Identifier: Apache-2.0

//! On-disk JSON formats.
//!
//! Every file carries a `format_version`. Output is compact, with keys in
//! declaration order, followed by a single newline, so a fixed seed always
//! produces the same bytes.

use std::fs;
use std::path::{Path, PathBuf};

use grcrypt_core::dlattack::AttackTranscript;
use grcrypt_core::s5rep::ORDER;
use grcrypt_core::{BlockMat, Challenge, GRElem, GRMat3, Solution};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

/// 3×3 entries, each the 120 coefficients of a group-ring element in
/// lexicographic order of `S5`.
pub type Entries = Vec<Vec<Vec<u8>>>;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: malformed JSON: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{path}: unsupported format version {found} (expected {FORMAT_VERSION})")]
    Version { path: PathBuf, found: u32 },
    #[error("{path}: {reason}")]
    Malformed { path: PathBuf, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub format_version: u32,
    pub entries: Entries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChallengeFile {
    pub format_version: u32,
    pub base: Entries,
    pub alice_public: Entries,
    pub bob_public: Entries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionFile {
    pub format_version: u32,
    pub alice_secret: u64,
    pub bob_secret: u64,
    pub shared_key: Entries,
}

/// One square block, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockJson {
    pub size: usize,
    pub entries: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TranscriptFile {
    pub format_version: u32,
    pub lifted_base: Vec<BlockJson>,
    pub lifted_challenge: Vec<BlockJson>,
    pub transcript: AttackTranscript,
}

trait Versioned {
    fn version(&self) -> u32;
}

macro_rules! versioned {
    ($($t:ty),*) => {
        $(impl Versioned for $t {
            fn version(&self) -> u32 {
                self.format_version
            }
        })*
    };
}
versioned!(MatrixFile, ChallengeFile, SolutionFile, TranscriptFile);

pub fn encode_grmat(m: &GRMat3) -> Entries {
    m.entries()
        .iter()
        .map(|row| row.iter().map(|e| e.to_u8s().to_vec()).collect())
        .collect()
}

pub fn decode_grmat(entries: &Entries) -> Result<GRMat3, String> {
    if entries.len() != 3 || entries.iter().any(|r| r.len() != 3) {
        return Err("expected a 3x3 array of group-ring elements".into());
    }
    let mut m = GRMat3::zero();
    for (i, row) in entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if e.len() != ORDER {
                return Err(format!("entry ({i},{j}) has {} coefficients, expected {ORDER}", e.len()));
            }
            let x = GRElem::from_u8s(e).map_err(|err| format!("entry ({i},{j}): {err}"))?;
            m.set(i, j, x);
        }
    }
    Ok(m)
}

pub fn encode_blockmat(b: &BlockMat) -> Vec<BlockJson> {
    b.blocks
        .iter()
        .map(|m| BlockJson {
            size: m.rows(),
            entries: m.as_slice().iter().map(|c| c.value()).collect(),
        })
        .collect()
}

pub fn decode_blockmat(blocks: &[BlockJson]) -> Result<BlockMat, String> {
    use grcrypt_core::{Matrix, BLOCK_SIZES, F7};
    if blocks.len() != 7 {
        return Err(format!("expected 7 blocks, found {}", blocks.len()));
    }
    for (k, b) in blocks.iter().enumerate() {
        if b.size != BLOCK_SIZES[k] || b.entries.len() != b.size * b.size {
            return Err(format!("block {k} does not have size {}", BLOCK_SIZES[k]));
        }
        if b.entries.iter().any(|&c| c > 6) {
            return Err(format!("block {k} has an entry outside 0..=6"));
        }
    }
    Ok(BlockMat::from_fn(|k| {
        let b = &blocks[k];
        Matrix::from_fn(b.size, b.size, |i, j| F7::new(b.entries[i * b.size + j] as u64))
    }))
}

impl ChallengeFile {
    pub fn new(c: &Challenge) -> Self {
        ChallengeFile {
            format_version: FORMAT_VERSION,
            base: encode_grmat(&c.base),
            alice_public: encode_grmat(&c.alice_public),
            bob_public: encode_grmat(&c.bob_public),
        }
    }

    pub fn decode(&self) -> Result<Challenge, String> {
        Ok(Challenge {
            base: decode_grmat(&self.base).map_err(|e| format!("base: {e}"))?,
            alice_public: decode_grmat(&self.alice_public).map_err(|e| format!("alice_public: {e}"))?,
            bob_public: decode_grmat(&self.bob_public).map_err(|e| format!("bob_public: {e}"))?,
        })
    }
}

impl SolutionFile {
    pub fn new(s: &Solution) -> Self {
        SolutionFile {
            format_version: FORMAT_VERSION,
            alice_secret: s.alice_secret,
            bob_secret: s.bob_secret,
            shared_key: encode_grmat(&s.shared_key),
        }
    }

    pub fn decode(&self) -> Result<Solution, String> {
        Ok(Solution {
            alice_secret: self.alice_secret,
            bob_secret: self.bob_secret,
            shared_key: decode_grmat(&self.shared_key).map_err(|e| format!("shared_key: {e}"))?,
        })
    }
}

impl MatrixFile {
    pub fn new(m: &GRMat3) -> Self {
        MatrixFile { format_version: FORMAT_VERSION, entries: encode_grmat(m) }
    }

    pub fn decode(&self) -> Result<GRMat3, String> {
        decode_grmat(&self.entries)
    }
}

/// Canonical bytes of any of the file types.
pub fn to_bytes<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec(value).expect("in-memory serialization cannot fail");
    out.push(b'\n');
    out
}

pub fn write_file<T: Serialize>(path: &Path, value: &T) -> Result<(), FormatError> {
    fs::write(path, to_bytes(value)).map_err(|source| FormatError::Io { path: path.into(), source })
}

#[allow(private_bounds)]
pub fn parse<T: DeserializeOwned + Versioned>(path: &Path, bytes: &[u8]) -> Result<T, FormatError> {
    // version first, so a newer file is reported as such rather than as a
    // field mismatch
    #[derive(Deserialize)]
    struct Probe {
        format_version: Option<u32>,
    }
    let json = |source| FormatError::Json { path: path.into(), source };
    let probe: Probe = serde_json::from_slice(bytes).map_err(json)?;
    match probe.format_version {
        Some(FORMAT_VERSION) => {}
        Some(found) => return Err(FormatError::Version { path: path.into(), found }),
        None => {
            return Err(FormatError::Malformed { path: path.into(), reason: "missing format_version".into() })
        }
    }
    let value: T = serde_json::from_slice(bytes).map_err(json)?;
    debug_assert_eq!(value.version(), FORMAT_VERSION);
    Ok(value)
}

#[allow(private_bounds)]
pub fn read_file<T: DeserializeOwned + Versioned>(path: &Path) -> Result<T, FormatError> {
    let bytes = fs::read(path).map_err(|source| FormatError::Io { path: path.into(), source })?;
    parse(path, &bytes)
}

pub fn read_challenge(path: &Path) -> Result<Challenge, FormatError> {
    let f: ChallengeFile = read_file(path)?;
    f.decode().map_err(|reason| FormatError::Malformed { path: path.into(), reason })
}

pub fn read_solution(path: &Path) -> Result<Solution, FormatError> {
    let f: SolutionFile = read_file(path)?;
    f.decode().map_err(|reason| FormatError::Malformed { path: path.into(), reason })
}

pub fn read_matrix(path: &Path) -> Result<GRMat3, FormatError> {
    let f: MatrixFile = read_file(path)?;
    f.decode().map_err(|reason| FormatError::Malformed { path: path.into(), reason })
}
