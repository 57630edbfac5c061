//! Piece models, their crossing budgets, and the per-crossing counting.
//!
//! A model's budget is the largest number of crossings forced by its arcs:
//! each boundary sheet carries at most one arc, plus one arc of the knot for
//! 0-handle models. Arcs are chords of a disk whose endpoints sit on its
//! boundary; straight chords realize the minimum crossing count of a
//! placement, which is the number of linked endpoint pairs. The budget is
//! the maximum of that count over endpoint patterns.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("unknown model `{0}`")]
    Unknown(String),
    #[error("model set {{{0}}} matches no co-occurrence row or mutation of one")]
    NonMatching(String),
    #[error("model set {{{set}}} has budget {total}, above its cap {cap}")]
    BudgetExceeded { set: String, total: u32, cap: u32 },
    #[error("model set {{{0}}} pairs 0-handle models that get no inter-model allowance")]
    UnsupportedPair(String),
    #[error("{given} budgets for {expected} crossings")]
    MissingBudgets { given: usize, expected: usize },
    #[error("merging pieces {0:?} closes a cycle (solid torus)")]
    SolidTorus(Vec<usize>),
    #[error("row `{0}` is malformed")]
    BadRow(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ModelName {
    Z1,
    Z2,
    Z3,
    Zbar3,
    XZ3,
    YZ3,
    YZ1,
    X1,
    X2,
    X3,
    X4,
    XY2,
    Y2,
    X1pY,
    X2pY,
    X3pY,
    Y3p,
    YZ2p,
    Y2pZ,
    X2ppZ,
    O2pp,
    Y3ppZ,
    GZ1,
    GZ2,
    GZ3,
}

impl ModelName {
    pub const CATALOG: [ModelName; 22] = [
        ModelName::Z1,
        ModelName::Z2,
        ModelName::Z3,
        ModelName::Zbar3,
        ModelName::XZ3,
        ModelName::YZ3,
        ModelName::YZ1,
        ModelName::X1,
        ModelName::X2,
        ModelName::X3,
        ModelName::X4,
        ModelName::XY2,
        ModelName::Y2,
        ModelName::X1pY,
        ModelName::X2pY,
        ModelName::X3pY,
        ModelName::Y3p,
        ModelName::YZ2p,
        ModelName::Y2pZ,
        ModelName::X2ppZ,
        ModelName::O2pp,
        ModelName::Y3ppZ,
    ];

    pub const GENERALIZED: [ModelName; 3] = [ModelName::GZ1, ModelName::GZ2, ModelName::GZ3];

    /// Models allowed to occur at a crossing without lowering the cap to 11.
    pub fn is_z_like(self) -> bool {
        matches!(
            self,
            ModelName::Z1
                | ModelName::Z2
                | ModelName::Z3
                | ModelName::YZ1
                | ModelName::Zbar3
                | ModelName::GZ1
                | ModelName::GZ2
                | ModelName::GZ3
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            ModelName::Z1 => "Z1",
            ModelName::Z2 => "Z2",
            ModelName::Z3 => "Z3",
            ModelName::Zbar3 => "Zbar3",
            ModelName::XZ3 => "XZ3",
            ModelName::YZ3 => "YZ3",
            ModelName::YZ1 => "YZ1",
            ModelName::X1 => "X1",
            ModelName::X2 => "X2",
            ModelName::X3 => "X3",
            ModelName::X4 => "X4",
            ModelName::XY2 => "XY2",
            ModelName::Y2 => "Y2",
            ModelName::X1pY => "X1pY",
            ModelName::X2pY => "X2pY",
            ModelName::X3pY => "X3pY",
            ModelName::Y3p => "Y3p",
            ModelName::YZ2p => "YZ2p",
            ModelName::Y2pZ => "Y2pZ",
            ModelName::X2ppZ => "X2ppZ",
            ModelName::O2pp => "O2pp",
            ModelName::Y3ppZ => "Y3ppZ",
            ModelName::GZ1 => "GZ1",
            ModelName::GZ2 => "GZ2",
            ModelName::GZ3 => "GZ3",
        }
    }
}

impl fmt::Display for ModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelName {
    type Err = ModelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        ModelName::CATALOG
            .iter()
            .chain(ModelName::GENERALIZED.iter())
            .copied()
            .find(|m| m.name() == s)
            .ok_or_else(|| ModelError::Unknown(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HandleKind {
    /// Lies in a 1-handle of the original structure.
    OneHandleLike,
    ZeroHandleLike,
    /// Absorbed into parallelity 2-handles.
    Annulus,
    /// Union of two catalog models.
    Composite,
    /// Merged 1-handle-like pieces.
    Generalized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Source {
    Stated,
    Derived,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Stated => "stated",
            Source::Derived => "derived",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelInfo {
    pub name: ModelName,
    pub kind: HandleKind,
    /// Components of the intersection with the boundary.
    pub sheets: u32,
    pub k_arcs: u32,
    /// Arcs the budget enumerator places.
    pub arcs: u32,
    /// Arc pairs whose endpoints are never linked (arc 0 is the knot arc).
    pub unlinked: Vec<(usize, usize)>,
    pub note: &'static str,
}

pub fn model_info(m: ModelName) -> ModelInfo {
    use ModelName::*;
    let zero = |sheets: u32| {
        let unlinked = if sheets >= 3 { vec![(sheets as usize - 1, sheets as usize)] } else { vec![] };
        ModelInfo {
            name: m,
            kind: HandleKind::ZeroHandleLike,
            sheets,
            k_arcs: 1,
            arcs: sheets + 1,
            unlinked,
            note: "",
        }
    };
    let one = |sheets: u32, arcs: u32, note: &'static str| ModelInfo {
        name: m,
        kind: HandleKind::OneHandleLike,
        sheets,
        k_arcs: 1,
        arcs,
        unlinked: vec![],
        note,
    };
    match m {
        Z1 => one(1, 1, "one arc, from the knot"),
        Z2 => one(2, 3, "at most two arcs plus one moved-in knot subarc"),
        Z3 => one(3, 3, "at most three arcs"),
        Zbar3 => ModelInfo { arcs: 0, k_arcs: 0, note: "essentially the same as Z3; no crossings", ..one(3, 0, "") },
        YZ1 => one(1, 1, "one arc, from the knot"),
        X1 | X1pY => zero(1),
        X2 | XY2 | Y2 | X2pY | YZ2p | Y2pZ | X2ppZ => zero(2),
        X3 | X3pY | Y3p | XZ3 | YZ3 => zero(3),
        X4 => zero(4),
        O2pp => ModelInfo {
            name: m,
            kind: HandleKind::Annulus,
            sheets: 2,
            k_arcs: 0,
            arcs: 0,
            unlinked: vec![],
            note: "lies in a parallelity 2-handle or is removed",
        },
        Y3ppZ => ModelInfo {
            name: m,
            kind: HandleKind::Composite,
            sheets: 3,
            k_arcs: 1,
            arcs: 3,
            unlinked: vec![],
            note: "combination of Z3 and O2pp",
        },
        GZ1 | GZ2 | GZ3 => {
            let base = generalized_base(m).expect("generalized");
            ModelInfo { name: m, kind: HandleKind::Generalized, note: "merged 1-handle pieces", ..model_info(base) }
        }
    }
}

fn generalized_base(m: ModelName) -> Option<ModelName> {
    match m {
        ModelName::GZ1 => Some(ModelName::Z1),
        ModelName::GZ2 => Some(ModelName::Z2),
        ModelName::GZ3 => Some(ModelName::Z3),
        _ => None,
    }
}

pub fn model_catalog() -> Vec<ModelInfo> {
    ModelName::CATALOG.iter().map(|&m| model_info(m)).collect()
}

pub fn generalized_models() -> Vec<ModelInfo> {
    ModelName::GENERALIZED.iter().map(|&m| model_info(m)).collect()
}

/// Largest number of linked chord pairs among `n` chords on a circle,
/// with `unlinked` label pairs forced apart.
pub fn max_linked_pairs(n: usize, unlinked: &[(usize, usize)]) -> u32 {
    if n < 2 {
        return 0;
    }
    let mut best = 0;
    for m in perfect_matchings(2 * n) {
        let linked = |a: (usize, usize), b: (usize, usize)| {
            let inside = |z: usize| a.0 < z && z < a.1;
            inside(b.0) != inside(b.1)
        };
        let mut labels: Vec<usize> = (0..n).collect();
        loop {
            let chord = |label: usize| m[labels.iter().position(|&l| l == label).expect("label")];
            if unlinked.iter().all(|&(a, b)| !linked(chord(a), chord(b))) {
                let mut count = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if linked(m[i], m[j]) {
                            count += 1;
                        }
                    }
                }
                best = best.max(count);
            }
            if !next_permutation(&mut labels) {
                break;
            }
        }
    }
    best
}

fn perfect_matchings(points: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            cur.push((a, b));
            rec(free, cur, out);
            cur.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    rec(&mut (0..points).collect(), &mut Vec::new(), &mut out);
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Crossing budget of a single model.
pub fn max_crossings(m: ModelName) -> u32 {
    static CACHE: OnceLock<BTreeMap<ModelName, u32>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        ModelName::CATALOG
            .iter()
            .chain(ModelName::GENERALIZED.iter())
            .map(|&m| (m, compute_budget(m)))
            .collect()
    });
    cache[&m]
}

fn compute_budget(m: ModelName) -> u32 {
    match m {
        ModelName::Y3ppZ => compute_budget(ModelName::Z3) + compute_budget(ModelName::O2pp),
        _ => {
            let info = model_info(m);
            max_linked_pairs(info.arcs as usize, &info.unlinked)
        }
    }
}

pub fn budget_source(m: ModelName) -> Source {
    match m {
        ModelName::X3 | ModelName::Zbar3 => Source::Stated,
        _ => Source::Derived,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum MutationTarget {
    Model(ModelName),
    Null,
}

impl fmt::Display for MutationTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MutationTarget::Model(m) => write!(f, "{m}"),
            MutationTarget::Null => f.write_str("Null"),
        }
    }
}

pub fn mutation_table() -> Vec<(ModelName, Vec<MutationTarget>)> {
    use ModelName::*;
    use MutationTarget::{Model as M, Null};
    vec![
        (X1, vec![M(X1pY)]),
        (X2, vec![M(X2pY), M(Z2)]),
        (X3, vec![M(X3pY), M(Y3p), M(Z3)]),
        (Z2, vec![Null]),
        (Y2, vec![M(Y2pZ)]),
        (Y3p, vec![M(Z3)]),
        (XY2, vec![M(YZ2p)]),
        (X2pY, vec![M(X2ppZ), M(Z2)]),
        (X3pY, vec![M(Z3)]),
    ]
}

pub fn mutate_model(m: ModelName) -> BTreeSet<MutationTarget> {
    mutation_table().into_iter().find(|(k, _)| *k == m).map(|(_, v)| v.into_iter().collect()).unwrap_or_default()
}

/// Co-occurrence rows per gluing case; parenthesized names are alternatives.
pub const COOCCURRENCE_ROWS: [(u8, &str); 16] = [
    (1, "Z2(Z1,Z3), Z2(Z1,Z3)"),
    (1, "X4, Z1, Z1"),
    (1, "X3, Z1"),
    (1, "X2"),
    (2, "Y2(YZ3,Z1), Y2(YZ3,Z1)"),
    (3, "X2pY"),
    (3, "Y3p, Z1"),
    (3, "X3pY(Z3), Z1"),
    (4, "Y2pZ, Y2(YZ3,Z1)"),
    (5, "XZ3, Z1, Z1"),
    (5, "XY2, Z1"),
    (5, "X1"),
    (6, "YZ1, Y2(YZ3,Z1)(YZ1)"),
    (7, "YZ2p, Z1"),
    (7, "X1pY"),
    (8, "Y2pZ, YZ1"),
];

fn parse_row(row: &str) -> Result<Vec<Vec<ModelName>>, ModelError> {
    let mut items = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for c in row.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth -= 1;
                cur.push(c);
            }
            ',' if depth == 0 => items.push(std::mem::take(&mut cur)),
            _ => cur.push(c),
        }
    }
    items.push(cur);
    items
        .iter()
        .map(|item| {
            let names: Vec<&str> =
                item.split(['(', ')', ',']).map(str::trim).filter(|s| !s.is_empty()).collect();
            if names.is_empty() {
                return Err(ModelError::BadRow(row.to_string()));
            }
            names.into_iter().map(str::parse).collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Template {
    pub case: u8,
    pub row: &'static str,
    pub models: Vec<ModelName>,
}

/// Every row expanded over its alternatives, without deduplication.
pub fn cooccurrence_sets() -> Vec<Template> {
    let mut out = Vec::new();
    for (case, row) in COOCCURRENCE_ROWS {
        let slots = parse_row(row).expect("built-in rows parse");
        let mut acc: Vec<Vec<ModelName>> = vec![vec![]];
        for alts in &slots {
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    alts.iter().map(move |&m| {
                        let mut p = prefix.clone();
                        p.push(m);
                        p
                    })
                })
                .collect();
        }
        for mut models in acc {
            models.sort();
            out.push(Template { case, row, models });
        }
    }
    out
}

/// All multisets reachable from `ms` by mutations, including `ms`.
pub fn mutation_closure(ms: &[ModelName]) -> BTreeSet<Vec<ModelName>> {
    let mut start = ms.to_vec();
    start.sort();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len() {
            for target in mutate_model(cur[i]) {
                let mut next = cur.clone();
                match target {
                    MutationTarget::Model(m) => next[i] = m,
                    MutationTarget::Null => {
                        next.remove(i);
                    }
                }
                next.sort();
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// Every multiset allowed at a crossing.
pub fn admissible_sets() -> &'static BTreeSet<Vec<ModelName>> {
    static SETS: OnceLock<BTreeSet<Vec<ModelName>>> = OnceLock::new();
    SETS.get_or_init(|| cooccurrence_sets().iter().flat_map(|t| mutation_closure(&t.models)).collect())
}

/// Models occupying one crossing region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelSet {
    pub crossing: usize,
    pub models: Vec<ModelName>,
}

impl ModelSet {
    pub fn new(crossing: usize, models: impl IntoIterator<Item = ModelName>) -> ModelSet {
        let mut models: Vec<ModelName> = models.into_iter().collect();
        models.sort();
        ModelSet { crossing, models }
    }

    /// Parse a comma-separated list of model names.
    pub fn parse(crossing: usize, text: &str) -> Result<ModelSet, ModelError> {
        let models = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ModelSet::new(crossing, models))
    }

    fn label(&self) -> String {
        self.models.iter().map(|m| m.name()).collect::<Vec<_>>().join(", ")
    }

    /// The table form: generalized pieces as their base model, composites as
    /// their crossing-bearing part, zero-contribution pieces dropped.
    pub fn table_form(&self) -> Vec<ModelName> {
        let mut v: Vec<ModelName> = self
            .models
            .iter()
            .filter_map(|&m| match m {
                ModelName::Zbar3 | ModelName::O2pp => None,
                ModelName::Y3ppZ => Some(ModelName::Z3),
                m => Some(generalized_base(m).unwrap_or(m)),
            })
            .collect();
        v.sort();
        v
    }
}

/// Models allowed to share the one extra crossing between two 0-handles.
pub const ALLOWANCE_MODELS: [ModelName; 3] = [ModelName::Y2, ModelName::YZ3, ModelName::Y2pZ];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingBudget {
    pub crossing: usize,
    pub per_model: Vec<(ModelName, u32)>,
    pub allowance: u32,
    pub total: u32,
    pub cap: u32,
}

pub fn per_crossing_bound(ms: &ModelSet) -> Result<CrossingBudget, ModelError> {
    let table = ms.table_form();
    if !table.is_empty() && !admissible_sets().contains(&table) {
        return Err(ModelError::NonMatching(ms.label()));
    }
    let heavy: Vec<ModelName> = ms.models.iter().copied().filter(|m| !m.is_z_like()).collect();
    let allowance = if heavy.len() >= 2 {
        if heavy.len() > 2 || !heavy.iter().all(|m| ALLOWANCE_MODELS.contains(m)) {
            return Err(ModelError::UnsupportedPair(ms.label()));
        }
        1
    } else {
        0
    };
    let per_model: Vec<(ModelName, u32)> = ms.models.iter().map(|&m| (m, max_crossings(m))).collect();
    let total = per_model.iter().map(|(_, c)| c).sum::<u32>() + allowance;
    let cap = if heavy.is_empty() { 16 } else { 11 };
    if total > cap {
        return Err(ModelError::BudgetExceeded { set: ms.label(), total, cap });
    }
    Ok(CrossingBudget { crossing: ms.crossing, per_model, allowance, total, cap })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AggregateReport {
    pub crossings: usize,
    pub sum: u64,
    pub cap: u64,
    pub holds: bool,
    /// A crossing whose budget is below 16, which makes the final inequality strict.
    pub strict_witness: Option<usize>,
    /// Every budget is zero, so every summand is trivial.
    pub degenerate: bool,
}

impl fmt::Display for AggregateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= {}", self.sum, self.cap)?;
        if !self.holds {
            write!(f, " FAILS")?;
        }
        match self.strict_witness {
            Some(v) => write!(f, " (strict: crossing {v} is below 16)")?,
            None => write!(f, " (no strict witness)")?,
        }
        if self.degenerate {
            write!(f, " (degenerate: all budgets zero)")?;
        }
        Ok(())
    }
}

pub fn aggregate_bound(budgets: &[u32], c_total: usize) -> Result<AggregateReport, ModelError> {
    if budgets.len() != c_total {
        return Err(ModelError::MissingBudgets { given: budgets.len(), expected: c_total });
    }
    let sum: u64 = budgets.iter().map(|&b| u64::from(b)).sum();
    let cap = 16 * c_total as u64;
    Ok(AggregateReport {
        crossings: c_total,
        sum,
        cap,
        holds: budgets.iter().all(|&b| b <= 16),
        strict_witness: budgets.iter().position(|&b| b < 16),
        degenerate: sum == 0,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralizedHandle {
    pub model: ModelName,
    pub pieces: Vec<usize>,
}

fn generalized_class(m: ModelName) -> Option<ModelName> {
    match m {
        ModelName::Z1 | ModelName::YZ1 => Some(ModelName::GZ1),
        ModelName::Z2 => Some(ModelName::GZ2),
        ModelName::Z3 | ModelName::Zbar3 => Some(ModelName::GZ3),
        _ => None,
    }
}

/// Merge adjacent 1-handle-like pieces of the same class into generalized
/// handles. `contacts` lists adjacent piece indices; a cycle of contacts
/// inside one class is rejected.
pub fn merge_generalized(
    pieces: &[ModelName],
    contacts: &[(usize, usize)],
) -> Result<Vec<GeneralizedHandle>, ModelError> {
    let n = pieces.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut edges = BTreeSet::new();
    for &(a, b) in contacts {
        if a == b || a >= n || b >= n {
            continue;
        }
        let (ca, cb) = (generalized_class(pieces[a]), generalized_class(pieces[b]));
        if ca.is_none() || ca != cb || !edges.insert((a.min(b), a.max(b))) {
            continue;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            let mut members: Vec<usize> = (0..n).filter(|&v| find(&mut parent, v) == ra).collect();
            members.sort();
            return Err(ModelError::SolidTorus(members));
        }
        parent[ra] = rb;
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        if generalized_class(pieces[v]).is_some() {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
    }
    let mut out: Vec<GeneralizedHandle> = groups
        .into_values()
        .map(|pieces_in| GeneralizedHandle {
            model: generalized_class(pieces[pieces_in[0]]).expect("class"),
            pieces: pieces_in,
        })
        .collect();
    out.sort_by(|a, b| a.pieces.cmp(&b.pieces));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        assert_eq!(model_catalog().len(), 22);
        assert_eq!(generalized_models().len(), 3);
        assert_eq!(model_info(ModelName::X3).sheets, 3);
        assert_eq!(max_crossings(ModelName::Zbar3), 0);
    }

    #[test]
    fn calibration_point() {
        assert_eq!(max_crossings(ModelName::X3), 5);
    }

    #[test]
    fn mutations() {
        use MutationTarget::*;
        assert_eq!(
            mutate_model(ModelName::X3),
            [Model(ModelName::X3pY), Model(ModelName::Y3p), Model(ModelName::Z3)].into()
        );
        assert_eq!(mutate_model(ModelName::Z2), [Null].into());
        assert!(mutate_model(ModelName::XZ3).is_empty());
    }

    #[test]
    fn row_expansion() {
        let sets = cooccurrence_sets();
        assert_eq!(sets.iter().filter(|t| t.row == "Z2(Z1,Z3), Z2(Z1,Z3)").count(), 9);
        assert!(sets.iter().any(|t| t.models == vec![ModelName::Z1, ModelName::Z1, ModelName::X4]));
        assert!(sets.iter().any(|t| t.models == vec![ModelName::Z1, ModelName::YZ2p]));
    }

    #[test]
    fn crossing_bounds() {
        let b = per_crossing_bound(&ModelSet::parse(0, "X2").unwrap()).unwrap();
        assert!(b.total <= 11);
        let z = per_crossing_bound(&ModelSet::parse(0, "Zbar3").unwrap()).unwrap();
        assert_eq!(z.total, 0);
        assert!(per_crossing_bound(&ModelSet::parse(0, "X4, X4").unwrap()).is_err());
        let y = per_crossing_bound(&ModelSet::parse(0, "YZ3, YZ3").unwrap()).unwrap();
        assert_eq!((y.allowance, y.total), (1, 11));
    }

    #[test]
    fn aggregate_examples() {
        let r = aggregate_bound(&[11, 16, 16], 3).unwrap();
        assert_eq!((r.sum, r.cap, r.strict_witness), (43, 48, Some(0)));
        assert!(aggregate_bound(&[0, 0], 2).unwrap().degenerate);
        let one = aggregate_bound(&[16], 1).unwrap();
        assert_eq!((one.sum, one.cap, one.strict_witness), (16, 16, None));
        assert!(aggregate_bound(&[1], 2).is_err());
    }

    #[test]
    fn merging() {
        use ModelName::*;
        let merged = merge_generalized(&[Z1, YZ1, Z2, X2], &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(merged.len(), 2);
        assert_eq!(merged[0], GeneralizedHandle { model: GZ1, pieces: vec![0, 1] });
        let err = merge_generalized(&[Z3, Z3, Zbar3], &[(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(err, Err(ModelError::SolidTorus(_))));
    }
}
