//! The inequality `c > S/16` for a connected sum, checked from a crossing
//! number table and a diagram of the sum.
//!
//! `S` is the sum of the summands' crossing numbers and `c` the crossing
//! count of the sum diagram. Comparisons use exact rationals.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::diagram::{connected_sum, Diagram};
use crate::fixtures::{self, DiagramLibrary, FixtureError};
use crate::models::{aggregate_bound, per_crossing_bound, AggregateReport, CrossingBudget, ModelError, ModelSet};

#[derive(Debug, Error)]
pub enum BoundError {
    #[error("line {line}: duplicate entry for {name}")]
    Duplicate { line: usize, name: String },
    #[error("line {line}: crossing number `{value}` is not an integer")]
    NotInteger { line: usize, value: String },
    #[error("line {line}: crossing number {value} out of range")]
    Range { line: usize, value: i64 },
    #[error("line {line}: expected `name,crossing_number`")]
    Malformed { line: usize },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("no components given")]
    NoComponents,
    #[error("unknown knot `{0}`")]
    UnknownName(String),
    #[error("no bundled diagram for `{0}`")]
    MissingDiagram(String),
    #[error("crossing {0} has no model assignment")]
    Uncovered(usize),
    #[error("assignment names crossing {crossing}, diagram has {crossings}")]
    UnknownCrossing { crossing: usize, crossings: usize },
    #[error("crossing {crossing}: {source}")]
    InvalidTemplate { crossing: usize, source: ModelError },
    #[error(transparent)]
    Fixture(#[from] FixtureError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotEntry {
    pub crossing_number: u32,
    pub provenance: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct KnotTable {
    pub entries: BTreeMap<String, KnotEntry>,
}

impl KnotTable {
    pub fn get(&self, name: &str) -> Option<u32> {
        self.entries.get(name).map(|e| e.crossing_number)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The bundled table, or the override directory's `knots.csv`.
    pub fn bundled() -> Result<KnotTable, BoundError> {
        load_knot_table(&fixtures::table_text()?, fixtures::TABLE_FILE)
    }
}

/// Parse `name,crossing_number` records. A leading `name,...` header row is
/// skipped. `origin` is recorded as the provenance of every entry.
pub fn load_knot_table(text: &str, origin: &str) -> Result<KnotTable, BoundError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut table = KnotTable::default();
    for rec in rdr.records() {
        let rec = rec?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        if rec.len() == 1 && rec[0].is_empty() {
            continue;
        }
        if rec.len() != 2 {
            return Err(BoundError::Malformed { line });
        }
        if line == 1 && &rec[0] == "name" {
            continue;
        }
        let name = rec[0].to_string();
        let value: i64 =
            rec[1].parse().map_err(|_| BoundError::NotInteger { line, value: rec[1].to_string() })?;
        // No knot has crossing number 1 or 2.
        if value < 0 || value == 1 || value == 2 || value > i64::from(u32::MAX) {
            return Err(BoundError::Range { line, value });
        }
        if table.entries.contains_key(&name) {
            return Err(BoundError::Duplicate { line, name });
        }
        let entry = KnotEntry { crossing_number: value as u32, provenance: format!("{origin}:{line}") };
        table.entries.insert(name, entry);
    }
    Ok(table)
}

fn ratio_str<S: Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Per-crossing budgets behind a certificate report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub budgets: Vec<CrossingBudget>,
    pub aggregate: AggregateReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub components: Vec<String>,
    /// `S`: the sum of summand crossing numbers, or of budgets for a certificate.
    pub crossing_sum: u64,
    /// `c`: crossings of the sum diagram.
    pub crossings: u64,
    #[serde(serialize_with = "ratio_str")]
    pub lower_bound: Ratio<u64>,
    pub faces: Option<usize>,
    pub verdict: bool,
    pub certificate: Option<Certificate>,
}

/// `c > S/16` and `c <= S`, exactly.
pub fn verdict(s: u64, c: u64) -> bool {
    Ratio::from_integer(c) > Ratio::new(s, 16) && c <= s
}

/// Diagram of the sum of `components`, glued left to right.
pub fn sum_diagram(components: &[String], library: &DiagramLibrary, table: &KnotTable) -> Result<Diagram, BoundError> {
    let mut acc = Diagram::unknot();
    for name in components {
        let d = match library.get(name) {
            Some(d) => d,
            None if table.get(name) == Some(0) => continue,
            None => return Err(BoundError::MissingDiagram(name.clone())),
        };
        acc = connected_sum(&acc, d);
    }
    Ok(acc)
}

/// Check the inequality for a sum of table entries. Without `diagram`, the
/// sum of the library's minimal diagrams is used.
pub fn check_bound(
    components: &[String],
    table: &KnotTable,
    diagram: Option<&Diagram>,
    library: &DiagramLibrary,
) -> Result<BoundReport, BoundError> {
    if components.is_empty() {
        return Err(BoundError::NoComponents);
    }
    let mut s = 0u64;
    for name in components {
        s += u64::from(table.get(name).ok_or_else(|| BoundError::UnknownName(name.clone()))?);
    }
    let built;
    let d = match diagram {
        Some(d) => d,
        None => {
            built = sum_diagram(components, library, table)?;
            &built
        }
    };
    let c = d.crossing_count() as u64;
    Ok(BoundReport {
        components: components.to_vec(),
        crossing_sum: s,
        crossings: c,
        lower_bound: Ratio::new(s, 16),
        faces: (c > 0).then(|| d.faces().len()),
        verdict: verdict(s, c),
        certificate: None,
    })
}

/// Certify `sum of budgets <= 16 c` for a model assignment on `diagram`.
///
/// The verdict is `c >= S/16` with `S` the budget total. It is strict when
/// the aggregate has a crossing below 16.
pub fn budget_certificate(diagram: &Diagram, assignment: &BTreeMap<usize, ModelSet>) -> Result<BoundReport, BoundError> {
    let n = diagram.crossing_count();
    if let Some(&v) = assignment.keys().find(|&&v| v >= n) {
        return Err(BoundError::UnknownCrossing { crossing: v, crossings: n });
    }
    let mut budgets = Vec::with_capacity(n);
    for v in 0..n {
        let ms = assignment.get(&v).ok_or(BoundError::Uncovered(v))?;
        let mut ms = ms.clone();
        ms.crossing = v;
        budgets.push(per_crossing_bound(&ms).map_err(|source| BoundError::InvalidTemplate { crossing: v, source })?);
    }
    let totals: Vec<u32> = budgets.iter().map(|b| b.total).collect();
    let aggregate = aggregate_bound(&totals, n).expect("one budget per crossing");
    let s = aggregate.sum;
    let c = n as u64;
    Ok(BoundReport {
        components: Vec::new(),
        crossing_sum: s,
        crossings: c,
        lower_bound: Ratio::new(s, 16),
        faces: (c > 0).then(|| diagram.faces().len()),
        verdict: aggregate.holds && Ratio::from_integer(c) >= Ratio::new(s, 16),
        certificate: Some(Certificate { budgets, aggregate }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn table_errors() {
        let t = load_knot_table("3_1,3", "t").unwrap();
        assert_eq!(t.get("3_1"), Some(3));
        assert!(matches!(load_knot_table("3_1,3\n3_1,4", "t"), Err(BoundError::Duplicate { line: 2, .. })));
        assert!(matches!(load_knot_table("4_1,-1", "t"), Err(BoundError::Range { value: -1, .. })));
        assert!(matches!(load_knot_table("4_1,x", "t"), Err(BoundError::NotInteger { .. })));
        assert!(matches!(load_knot_table("4_1,2", "t"), Err(BoundError::Range { .. })));
        assert!(matches!(load_knot_table("4_1", "t"), Err(BoundError::Malformed { .. })));
        assert_eq!(load_knot_table("name,crossing_number\n0_1,0\n", "t").unwrap().get("0_1"), Some(0));
    }

    #[test]
    fn boundary_verdict() {
        assert!(!verdict(16, 1));
        assert!(verdict(15, 1));
        assert!(verdict(3, 3));
        assert!(!verdict(3, 4));
    }

    #[test]
    fn sums_of_bundled() {
        let table = KnotTable::bundled().unwrap();
        let lib = DiagramLibrary::bundled().unwrap();
        let r = check_bound(&names(&["3_1", "3_1"]), &table, None, &lib).unwrap();
        assert_eq!((r.crossing_sum, r.crossings, r.faces, r.verdict), (6, 6, Some(8), true));
        assert_eq!(r.lower_bound, Ratio::new(3, 8));
        let r = check_bound(&names(&["3_1", "4_1", "5_2"]), &table, None, &lib).unwrap();
        assert_eq!((r.crossing_sum, r.crossings, r.verdict), (12, 12, true));
        assert!(matches!(check_bound(&names(&["10_1"]), &table, None, &lib), Err(BoundError::UnknownName(_))));
        let small = DiagramLibrary::parse("3_1 X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        assert!(matches!(
            check_bound(&names(&["4_1"]), &table, None, &small),
            Err(BoundError::MissingDiagram(_))
        ));
    }

    #[test]
    fn certificates() {
        let lib = DiagramLibrary::bundled().unwrap();
        let t = lib.get("3_1").unwrap();
        let d = connected_sum(t, t);
        let all: BTreeMap<usize, ModelSet> =
            (0..6).map(|v| (v, ModelSet::parse(v, "Z2, Z2").unwrap())).collect();
        let r = budget_certificate(&d, &all).unwrap();
        assert!(r.verdict);
        assert!(r.crossing_sum <= 96);
        assert_eq!(r.certificate.as_ref().unwrap().aggregate.cap, 96);

        let mut one = all.clone();
        one.insert(2, ModelSet::parse(2, "X2").unwrap());
        let r = budget_certificate(&d, &one).unwrap();
        let b = &r.certificate.unwrap().budgets[2];
        assert!(b.total <= 11 && b.cap == 11);

        let mut missing = all.clone();
        missing.remove(&4);
        assert!(matches!(budget_certificate(&d, &missing), Err(BoundError::Uncovered(4))));
        let mut bad = all;
        bad.insert(0, ModelSet::parse(0, "X4, X4").unwrap());
        assert!(matches!(budget_certificate(&d, &bad), Err(BoundError::InvalidTemplate { crossing: 0, .. })));

        let r = budget_certificate(&Diagram::unknot(), &BTreeMap::new()).unwrap();
        assert!(r.certificate.unwrap().aggregate.degenerate);
        assert_eq!((r.crossing_sum, r.crossings, r.faces), (0, 0, None));
    }
}
