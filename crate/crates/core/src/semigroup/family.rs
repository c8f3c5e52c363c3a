use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::plethysm::{excluded_bars, plethysm};

/// Environment variable naming a directory that replaces the bundled data.
pub const DATA_DIR_ENV: &str = "PLETH_DATA_DIR";

pub const FAMILY_IDS: &[&str] = &["3x6", "4x7"];

const BUNDLED_3X6: &str = include_str!("../../data/generators_3x6.json");
const BUNDLED_4X7: &str = include_str!("../../data/generators_4x7.json");

/// Subtract `generator` whenever the partition has at least `min_columns`
/// columns of height exactly `column_height`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub generator: Partition,
    pub column_height: usize,
    pub min_columns: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorFamily {
    pub schema: String,
    pub family: String,
    pub n: u32,
    pub m: usize,
    pub source: String,
    pub excluded_bars: Vec<Partition>,
    /// Above this degree reductions are applied before searching.
    pub base_search_bound: u32,
    /// Reductions never take the degree below this value.
    pub stable_from: u32,
    pub reductions: Vec<Reduction>,
    pub generators: Vec<Partition>,
    pub sha256: String,
}

impl GeneratorFamily {
    /// Degree `|lambda| / n`.
    pub fn degree_of(&self, lambda: &Partition) -> Option<u32> {
        let n = u64::from(self.n);
        (lambda.size() % n == 0).then(|| (lambda.size() / n) as u32)
    }

    pub fn is_excluded(&self, lambda: &Partition) -> bool {
        self.excluded_bars.contains(&lambda.bar())
    }

    fn validate(&self) -> Result<()> {
        if self.schema != "1" {
            return Err(Error::Malformed(format!("unsupported schema {:?}", self.schema)));
        }
        let actual = hex::encode(Sha256::digest(canonical_generator_text(&self.generators)));
        if actual != self.sha256 {
            return Err(Error::ChecksumMismatch {
                family: self.family.clone(),
                expected: self.sha256.clone(),
                actual,
            });
        }
        for g in &self.generators {
            if g.is_empty() || !g.is_m_partition(self.m) || self.degree_of(g).is_none() {
                return Err(Error::DataCorruption(format!(
                    "{g} is not a nonempty {}-partition of a multiple of {}",
                    self.m, self.n
                )));
            }
        }
        if self.excluded_bars != excluded_bars(self.n)? {
            return Err(Error::DataCorruption(format!(
                "excluded bars of {} disagree with the vanishing table",
                self.family
            )));
        }
        for r in &self.reductions {
            if !self.generators.contains(&r.generator) || r.generator.length() != r.column_height {
                return Err(Error::DataCorruption(format!("bad reduction rule {:?}", r)));
            }
        }
        Ok(())
    }
}

/// The text hashed for the checksum: one generator per line, parts joined
/// by commas, each line terminated by a newline.
pub fn canonical_generator_text(generators: &[Partition]) -> String {
    let mut s = String::new();
    for g in generators {
        let parts: Vec<String> = g.parts().iter().map(u32::to_string).collect();
        s.push_str(&parts.join(","));
        s.push('\n');
    }
    s
}

pub fn parse_family(text: &str) -> Result<GeneratorFamily> {
    let fam: GeneratorFamily = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    fam.validate()?;
    Ok(fam)
}

pub fn load_family_from(path: &Path) -> Result<GeneratorFamily> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    parse_family(&text)
}

/// Loads `"3x6"` or `"4x7"`, from `$PLETH_DATA_DIR` when set and otherwise
/// from the copies compiled into the library.
pub fn load_family(id: &str) -> Result<GeneratorFamily> {
    let bundled = match id {
        "3x6" => BUNDLED_3X6,
        "4x7" => BUNDLED_4X7,
        _ => return Err(Error::UnknownFamily(id.to_string())),
    };
    let fam = match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) => load_family_from(&PathBuf::from(dir).join(format!("generators_{id}.json")))?,
        None => parse_family(bundled)?,
    };
    if fam.family != id {
        return Err(Error::DataCorruption(format!("file for {id} declares family {}", fam.family)));
    }
    Ok(fam)
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub family: String,
    pub checked: Vec<(Partition, BigUint)>,
    pub skipped: Vec<Partition>,
}

/// Checks `a_mu(d[n]) > 0` for every generator of degree at most
/// `max_degree`; larger generators are reported as skipped.
pub fn verify_generators(fam: &GeneratorFamily, max_degree: u32) -> Result<VerifyReport> {
    let (todo, skipped): (Vec<_>, Vec<_>) = fam
        .generators
        .iter()
        .cloned()
        .partition(|g| fam.degree_of(g).is_some_and(|d| d <= max_degree));
    let checked = todo
        .into_par_iter()
        .map(|g| {
            let d = fam.degree_of(&g).expect("validated on load");
            let v = plethysm(&g, d, fam.n)?;
            if v == BigUint::default() {
                return Err(Error::DataCorruption(format!("generator {g} has zero plethysm coefficient")));
            }
            Ok((g, v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        family: fam.family.clone(),
        checked,
        skipped,
    })
}
