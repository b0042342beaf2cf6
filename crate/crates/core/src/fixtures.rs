//! Reference data shipped with the crate (`fixtures/reference.toml`).
//!
//! The embedded copy is used unless the `CHERNHODGE_FIXTURES` environment
//! variable names a directory containing a replacement `reference.toml`.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};

pub const FIXTURE_ENV: &str = "CHERNHODGE_FIXTURES";
const EMBEDDED: &str = include_str!("../fixtures/reference.toml");

#[derive(Clone, Debug, Deserialize)]
pub struct BettiFixture {
    #[serde(default)]
    pub name: Option<String>,
    pub betti: Vec<i64>,
    #[serde(default)]
    pub euler: Option<i64>,
    #[serde(default)]
    pub b4_minus: Option<i64>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct EulerFixture {
    pub euler: i64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct QkFixture {
    pub name: String,
    pub m: usize,
    pub beta: Vec<i64>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ModuliFixture {
    pub k64_pairing: i64,
    pub todd_genus: i64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Fixtures {
    pub k3_hilbert_2: BettiFixture,
    pub k3_hilbert_8: EulerFixture,
    pub kummer_2: BettiFixture,
    pub kummer_8: EulerFixture,
    pub g2: Vec<BettiFixture>,
    pub spin7: BettiFixture,
    pub qk: Vec<QkFixture>,
    pub moduli_genus_3: ModuliFixture,
}

impl Fixtures {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Fixture(e.to_string()))
    }

    pub fn embedded() -> Self {
        Self::parse(EMBEDDED).expect("embedded fixtures parse")
    }

    /// Embedded data, or `$CHERNHODGE_FIXTURES/reference.toml` if set.
    pub fn load() -> Result<Self> {
        Self::load_from(std::env::var_os(FIXTURE_ENV).map(PathBuf::from).as_deref())
    }

    /// `dir/reference.toml`, or the embedded data when `dir` is `None`.
    pub fn load_from(dir: Option<&Path>) -> Result<Self> {
        match dir {
            Some(dir) => {
                let path = dir.join("reference.toml");
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?;
                Self::parse(&text)
            }
            None => Ok(Self::embedded()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_parses() {
        let f = Fixtures::embedded();
        assert_eq!(f.kummer_2.euler, Some(108));
        assert_eq!(f.kummer_8.euler, 9477);
        assert_eq!(f.k3_hilbert_8.euler, 30178575);
        assert_eq!(f.g2.len(), 2);
        assert_eq!(f.qk.len(), 4);
        assert_eq!(f.spin7.b4_minus, Some(43));
        assert!(Fixtures::parse("not = [toml").is_err());
    }
}
