// SPDX-License-Identifier: Apache-2.0

//! Health checks of the representation data, the decomposition, and the
//! finite-field kernel.

use grcrypt_core::blocklift::COMPONENT_NAMES;
use grcrypt_core::ffield::{discrete_log, element_order, find_irreducible, int_factor, is_prime};
use grcrypt_core::s5rep::GeneratorData;
use grcrypt_core::{Field, FqField, Gf7, Wedderburn, IRREP_DIMS};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub generator_sha256: String,
    pub checks: Vec<Check>,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn render(&self) -> String {
        let mut out = format!("generator data sha256 {}\n", self.generator_sha256);
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                out.push_str(&format!("{mark} {}\n", c.name));
            } else {
                out.push_str(&format!("{mark} {}: {}\n", c.name, c.detail));
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }
}

/// Runs every check against already verified generator data.
pub fn run(data: &GeneratorData, sha256: String, seed: u64) -> SelftestReport {
    let mut report = SelftestReport { generator_sha256: sha256, checks: Vec::new() };
    let w = match Wedderburn::with_data(data) {
        Ok(w) => w,
        Err(e) => {
            report.push("irrep table", false, e.to_string());
            return report;
        }
    };
    let table = w.table();

    for c in table.verify_relations().checks {
        report.push(format!("relation {} on {}", c.relation, c.target), c.passed, "");
    }

    let chars = table.character_check(w.group());
    for (name, t) in COMPONENT_NAMES.iter().zip(&chars.traces) {
        report.push(format!("character {name}"), true, format!("{t:?}"));
    }
    report.push("characters pairwise distinct", chars.distinct, "");
    let bad: Vec<_> = chars.orthogonality.iter().filter(|o| !o.passed).map(|o| (o.i, o.j)).collect();
    report.push(
        "character orthogonality",
        bad.is_empty(),
        format!("{} of {} pairs, failing {bad:?}", chars.orthogonality.len() - bad.len(), chars.orthogonality.len()),
    );

    let iso = w.verify_iso(seed);
    let sum_line = IRREP_DIMS.iter().map(|d| (d * d).to_string()).collect::<Vec<_>>().join("+");
    report.push("dimension sum", iso.dimension_sum == 120, format!("{sum_line}={}", iso.dimension_sum));
    report.push("rank of f", iso.f_rank == 120, format!("{}", iso.f_rank));
    report.push(
        "f multiplicative",
        iso.f_multiplicative_failures == 0,
        format!("{} failures in {} pairs", iso.f_multiplicative_failures, grcrypt_core::blocklift::IsoReport::F_PAIRS),
    );
    report.push(
        "lift multiplicative",
        iso.lift_multiplicative_failures == 0,
        format!(
            "{} failures in {} pairs",
            iso.lift_multiplicative_failures,
            grcrypt_core::blocklift::IsoReport::LIFT_PAIRS
        ),
    );

    field_checks(&mut report, seed);
    report
}

fn field_checks(report: &mut SelftestReport, seed: u64) {
    let mut factor_ok = true;
    let mut irred_ok = true;
    for d in 1..=18u32 {
        let n = 7u64.pow(d) - 1;
        let f = int_factor(n);
        factor_ok &= f.iter().map(|&(p, e)| p.pow(e)).product::<u64>() == n && f.iter().all(|&(p, _)| is_prime(p));
        irred_ok &= find_irreducible(d).map(|g| g.is_irreducible(&Gf7)).unwrap_or(false);
    }
    report.push("int_factor of 7^d - 1, d <= 18", factor_ok, "");
    report.push("canonical moduli irreducible, d <= 18", irred_ok, "");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut solved = 0;
    let mut total = 0;
    for d in 1..=6u32 {
        let field = FqField::new(d).expect("supported degree");
        for _ in 0..10 {
            total += 1;
            let g = loop {
                let g = field.random(&mut rng);
                if !field.is_zero(g) {
                    break g;
                }
            };
            let e = rng.next_u64() % field.group_order();
            let t = field.pow(g, e);
            let ok = discrete_log(&field, g, t)
                .map(|c| {
                    let r: u64 = c.residue().try_into().unwrap_or(u64::MAX);
                    field.pow(g, r) == t && Ok(c.modulus().clone()) == element_order(&field, g).map(Into::into)
                })
                .unwrap_or(false);
            solved += ok as usize;
        }
    }
    report.push("discrete_log, d <= 6", solved == total, format!("{solved}/{total}"));
}
