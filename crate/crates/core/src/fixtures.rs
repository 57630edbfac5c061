//! Bundled minimal diagrams and the crossing-number table.
//!
//! Both files can be replaced by pointing `KNOTSUM_FIXTURES` at a directory
//! holding `primes.pd` and `knots.csv`.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::path::PathBuf;

use thiserror::Error;

use crate::diagram::{parse_pd_code, Diagram, DiagramError};

pub const ENV_VAR: &str = "KNOTSUM_FIXTURES";
pub const PD_FILE: &str = "primes.pd";
pub const TABLE_FILE: &str = "knots.csv";

const BUNDLED_PD: &str = include_str!("../fixtures/primes.pd");
const BUNDLED_TABLE: &str = include_str!("../fixtures/knots.csv");

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: expected `name X(...)...`")]
    Malformed { line: usize },
    #[error("line {line}: duplicate diagram for {name}")]
    Duplicate { line: usize, name: String },
    #[error("line {line} ({name}): {source}")]
    Diagram { line: usize, name: String, source: DiagramError },
}

fn fixture_text(file: &str, bundled: &'static str) -> Result<Cow<'static, str>, FixtureError> {
    match std::env::var_os(ENV_VAR) {
        Some(dir) => {
            let path = PathBuf::from(dir).join(file);
            std::fs::read_to_string(&path).map(Cow::Owned).map_err(|source| FixtureError::Io { path, source })
        }
        None => Ok(Cow::Borrowed(bundled)),
    }
}

/// Text of the PD fixture, honoring the override directory.
pub fn pd_text() -> Result<Cow<'static, str>, FixtureError> {
    fixture_text(PD_FILE, BUNDLED_PD)
}

/// Text of the crossing-number CSV, honoring the override directory.
pub fn table_text() -> Result<Cow<'static, str>, FixtureError> {
    fixture_text(TABLE_FILE, BUNDLED_TABLE)
}

/// Named minimal diagrams.
#[derive(Debug, Clone, Default)]
pub struct DiagramLibrary {
    diagrams: BTreeMap<String, Diagram>,
}

impl DiagramLibrary {
    /// One `name X(..) X(..) ...` record per line; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<DiagramLibrary, FixtureError> {
        let mut diagrams = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, code) = line.split_once(char::is_whitespace).ok_or(FixtureError::Malformed { line: i + 1 })?;
            let d = parse_pd_code(code).map_err(|source| FixtureError::Diagram {
                line: i + 1,
                name: name.to_string(),
                source,
            })?;
            if diagrams.insert(name.to_string(), d).is_some() {
                return Err(FixtureError::Duplicate { line: i + 1, name: name.to_string() });
            }
        }
        Ok(DiagramLibrary { diagrams })
    }

    pub fn bundled() -> Result<DiagramLibrary, FixtureError> {
        DiagramLibrary::parse(&pd_text()?)
    }

    pub fn get(&self, name: &str) -> Option<&Diagram> {
        self.diagrams.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.diagrams.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_parses() {
        let lib = DiagramLibrary::parse(BUNDLED_PD).unwrap();
        assert_eq!(lib.len(), 84);
        for name in lib.names() {
            let c: usize = name.split('_').next().unwrap().parse().unwrap();
            assert_eq!(lib.get(name).unwrap().crossing_count(), c, "{name}");
        }
    }

    #[test]
    fn rejects_bad_records() {
        assert!(matches!(DiagramLibrary::parse("3_1"), Err(FixtureError::Malformed { line: 1 })));
        let dup = "3_1 X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\n3_1 X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";
        assert!(matches!(DiagramLibrary::parse(dup), Err(FixtureError::Duplicate { line: 2, .. })));
        assert!(matches!(DiagramLibrary::parse("# c\nk X(1,2,3)"), Err(FixtureError::Diagram { line: 2, .. })));
    }
}
