//! Block vectors over the nine boundary types, their parameters, and the
//! reconstruction of a block from its seven parameters.

mod paste;
mod surface;

pub use paste::{
    axis_weight, paste_blocks, paste_from_inputs, Bands, DiskClass, PasteInputs, ZeroHandleConfig,
};
pub use surface::{
    compare_complexity, complexity, ComplexityTriple, EdgeDisks, NormalSurfaceVector, ZeroHandleContent,
};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiskError {
    #[error("non-realizable parameter vector")]
    NonRealizable,
    #[error("not realizable: {0}")]
    NotRealizable(String),
    #[error("side condition violated: {0}")]
    SideCondition(String),
    #[error("negative count {count} for {class}")]
    NegativeCount { class: String, count: i64 },
    #[error("unsupported band pattern: {0}")]
    UnsupportedBands(String),
    #[error("matching failure: {0}")]
    Matching(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BlockType {
    IPlus,
    I,
    IMinus,
    IIPlus,
    II,
    IIMinus,
    III,
    Tau1,
    Tau2,
}

impl BlockType {
    pub const ALL: [BlockType; 9] = [
        BlockType::IPlus,
        BlockType::I,
        BlockType::IMinus,
        BlockType::IIPlus,
        BlockType::II,
        BlockType::IIMinus,
        BlockType::III,
        BlockType::Tau1,
        BlockType::Tau2,
    ];

    /// Types adjacent to every other type.
    pub const UNIVERSAL: [BlockType; 3] = [BlockType::IPlus, BlockType::IMinus, BlockType::IIMinus];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            BlockType::IPlus => "I+",
            BlockType::I => "I",
            BlockType::IMinus => "I-",
            BlockType::IIPlus => "II+",
            BlockType::II => "II",
            BlockType::IIMinus => "II-",
            BlockType::III => "III",
            BlockType::Tau1 => "t1",
            BlockType::Tau2 => "t2",
        }
    }

    pub fn is_universal(self) -> bool {
        Self::UNIVERSAL.contains(&self)
    }
}

impl fmt::Display for BlockType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BlockType {
    type Err = DiskError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = match s {
            "I+" => BlockType::IPlus,
            "I" => BlockType::I,
            "I-" => BlockType::IMinus,
            "II+" => BlockType::IIPlus,
            "II" => BlockType::II,
            "II-" => BlockType::IIMinus,
            "III" => BlockType::III,
            "t1" | "tau1" | "τ1" => BlockType::Tau1,
            "t2" | "tau2" | "τ2" => BlockType::Tau2,
            _ => return Err(DiskError::Parse(format!("unknown block type `{s}`"))),
        };
        Ok(t)
    }
}

/// Non-universal edges of the block-type graph, one per reconstruction case.
/// Regenerated by [`derive_case_edges`] and by the boundary-curve oracle in
/// `compat`; the `derive_block_graph` example prints both derivations.
pub const BLOCK_EDGES: [(BlockType, BlockType); 6] = [
    (BlockType::I, BlockType::IIPlus),
    (BlockType::IIPlus, BlockType::III),
    (BlockType::IIPlus, BlockType::II),
    (BlockType::III, BlockType::Tau1),
    (BlockType::II, BlockType::Tau2),
    (BlockType::Tau1, BlockType::Tau2),
];

/// Columns `(Iv+, Iv0, Iv-, h1+, h1-, h2, kappa)` per type.
pub const PARAM_TABLE: [[u32; 7]; 9] = [
    [1, 0, 0, 1, 1, 1, 0],
    [0, 1, 0, 1, 1, 1, 0],
    [0, 0, 1, 1, 1, 1, 0],
    [1, 1, 0, 2, 0, 0, 0],
    [1, 0, 1, 2, 2, 0, 0],
    [0, 1, 1, 0, 2, 0, 0],
    [1, 1, 1, 1, 1, 1, 0],
    [0, 0, 1, 1, 1, 1, 1],
    [1, 0, 1, 0, 2, 0, 1],
];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlockVector {
    pub x_plus: u32,
    pub x: u32,
    pub x_minus: u32,
    pub y_plus: u32,
    pub y: u32,
    pub y_minus: u32,
    pub z: u32,
    pub t1: u32,
    pub t2: u32,
}

impl BlockVector {
    pub fn from_array(a: [u32; 9]) -> BlockVector {
        BlockVector {
            x_plus: a[0],
            x: a[1],
            x_minus: a[2],
            y_plus: a[3],
            y: a[4],
            y_minus: a[5],
            z: a[6],
            t1: a[7],
            t2: a[8],
        }
    }

    pub fn to_array(self) -> [u32; 9] {
        [self.x_plus, self.x, self.x_minus, self.y_plus, self.y, self.y_minus, self.z, self.t1, self.t2]
    }

    pub fn unit(t: BlockType) -> BlockVector {
        let mut a = [0; 9];
        a[t.index()] = 1;
        BlockVector::from_array(a)
    }

    pub fn get(&self, t: BlockType) -> u32 {
        self.to_array()[t.index()]
    }

    pub fn support(&self) -> BTreeSet<BlockType> {
        BlockType::ALL.into_iter().filter(|&t| self.get(t) > 0).collect()
    }

    pub fn total(&self) -> u32 {
        self.to_array().iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total() == 0
    }
}

impl std::ops::Add for BlockVector {
    type Output = BlockVector;
    fn add(self, o: BlockVector) -> BlockVector {
        let (a, b) = (self.to_array(), o.to_array());
        BlockVector::from_array(std::array::from_fn(|i| a[i] + b[i]))
    }
}

impl fmt::Display for BlockVector {
    /// Nonzero terms as `I+:1 II-:2`; the zero vector prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = BlockType::ALL
            .iter()
            .filter(|&&t| self.get(t) > 0)
            .map(|&t| format!("{}:{}", t, self.get(t)))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" "))
        }
    }
}

impl FromStr for BlockVector {
    type Err = DiskError;

    /// Accepts nine comma-separated integers or `Type:count` terms.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(BlockVector::default());
        }
        if !s.contains(':') {
            let v = parse_u32_list(s, 9)?;
            return Ok(BlockVector::from_array(v.try_into().expect("length checked")));
        }
        let mut a = [0u32; 9];
        for term in s.split_whitespace() {
            let (name, count) = term
                .split_once(':')
                .ok_or_else(|| DiskError::Parse(format!("bad term `{term}`")))?;
            let t: BlockType = name.parse()?;
            a[t.index()] += count
                .parse::<u32>()
                .map_err(|_| DiskError::Parse(format!("bad count in `{term}`")))?;
        }
        Ok(BlockVector::from_array(a))
    }
}

pub(crate) fn parse_u32_list(s: &str, n: usize) -> Result<Vec<u32>, DiskError> {
    let v: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| DiskError::Parse(format!("expected {n} nonnegative integers, got `{s}`")))?;
    if v.len() != n {
        return Err(DiskError::Parse(format!("expected {n} entries, got {}", v.len())));
    }
    Ok(v)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParamVector {
    pub iv_plus: u32,
    pub iv_0: u32,
    pub iv_minus: u32,
    pub h1_plus: u32,
    pub h1_minus: u32,
    pub h2: u32,
    pub kappa: u32,
}

impl ParamVector {
    pub fn from_array(a: [u32; 7]) -> ParamVector {
        ParamVector { iv_plus: a[0], iv_0: a[1], iv_minus: a[2], h1_plus: a[3], h1_minus: a[4], h2: a[5], kappa: a[6] }
    }

    pub fn to_array(self) -> [u32; 7] {
        [self.iv_plus, self.iv_0, self.iv_minus, self.h1_plus, self.h1_minus, self.h2, self.kappa]
    }

    pub fn iv(&self) -> u32 {
        self.iv_plus + self.iv_0 + self.iv_minus
    }
}

impl fmt::Display for ParamVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.to_array();
        write!(f, "{},{},{},{},{},{},{}", a[0], a[1], a[2], a[3], a[4], a[5], a[6])
    }
}

impl FromStr for ParamVector {
    type Err = DiskError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = parse_u32_list(s, 7)?;
        Ok(ParamVector::from_array(v.try_into().expect("length checked")))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct DerivedVector {
    pub a_plus: i64,
    pub a_minus: i64,
    pub h_plus: i64,
    pub h_minus: i64,
    pub eta: i64,
    pub sigma: i64,
}

impl DerivedVector {
    pub fn to_array(self) -> [i64; 6] {
        [self.a_plus, self.a_minus, self.h_plus, self.h_minus, self.eta, self.sigma]
    }
}

pub fn params(xi: &BlockVector) -> ParamVector {
    let c = xi.to_array();
    let mut p = [0u32; 7];
    for (t, row) in PARAM_TABLE.iter().enumerate() {
        for k in 0..7 {
            p[k] += c[t] * row[k];
        }
    }
    ParamVector::from_array(p)
}

fn half(n: i64) -> Result<i64, DiskError> {
    if n % 2 != 0 {
        Err(DiskError::NonRealizable)
    } else {
        Ok(n / 2)
    }
}

pub fn derived(p: &ParamVector) -> Result<DerivedVector, DiskError> {
    let [ivp, iv0, ivm, h1p, h1m, h2, _] = p.to_array().map(i64::from);
    let iv = ivp + iv0 + ivm;
    Ok(DerivedVector {
        a_plus: half(iv - h1m)?,
        a_minus: half(iv - h1p)?,
        h_plus: half(h1p - h2)?,
        h_minus: half(h1m - h2)?,
        eta: ivp + ivm - half(h1p + h1m)?,
        sigma: half(ivp - iv0 + ivm - h2)?,
    })
}

/// Whether the non-universal part of `support` is a clique of `edges`.
pub fn is_clique_under(support: &BTreeSet<BlockType>, edges: &[(BlockType, BlockType)]) -> bool {
    let rest: Vec<BlockType> = support.iter().copied().filter(|t| !t.is_universal()).collect();
    rest.iter().enumerate().all(|(i, &a)| {
        rest[i + 1..]
            .iter()
            .all(|&b| edges.iter().any(|&(u, w)| (u, w) == (a, b) || (u, w) == (b, a)))
    })
}

pub fn is_admissible(xi: &BlockVector) -> bool {
    is_clique_under(&xi.support(), &BLOCK_EDGES)
}

/// Which branch of the reconstruction produced a vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ReconCase {
    EtaNegative,
    EtaPositive,
    EtaZero,
    KappaAPlus,
    KappaHPlus,
    KappaOther,
}

impl fmt::Display for ReconCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReconCase::EtaNegative => "kappa=0, eta<0",
            ReconCase::EtaPositive => "kappa=0, eta>0",
            ReconCase::EtaZero => "kappa=0, eta=0",
            ReconCase::KappaAPlus => "kappa>0, a+>0",
            ReconCase::KappaHPlus => "kappa>0, h+>0",
            ReconCase::KappaOther => "kappa>0, a+=h+=0",
        };
        f.write_str(s)
    }
}

/// The six-case formulas, without sign or round-trip checks.
fn run_cases(p: &ParamVector) -> Result<([i64; 9], ReconCase), DiskError> {
    let d = derived(p)?;
    let ivp = i64::from(p.iv_plus);
    let ivm = i64::from(p.iv_minus);
    let kappa = i64::from(p.kappa);
    // [x+, x, x-, y+, y, y-, z, t1, t2]
    let mut v = [0i64; 9];
    let case;
    if kappa == 0 {
        if d.eta < 0 {
            if d.sigma != d.eta {
                return Err(DiskError::NotRealizable(format!(
                    "eta = {} < 0 forces sigma = eta, got sigma = {}",
                    d.eta, d.sigma
                )));
            }
            v[1] = -d.eta;
            v[3] = d.a_plus;
            v[5] = d.a_minus;
            v[0] = ivp - v[3];
            v[2] = ivm - v[5];
            case = ReconCase::EtaNegative;
        } else if d.eta > 0 {
            v[6] = d.eta;
            v[3] = d.h_plus;
            v[5] = d.h_minus;
            v[0] = ivp - v[3] - v[6];
            v[2] = ivm - v[5] - v[6];
            case = ReconCase::EtaPositive;
        } else {
            v[4] = d.sigma;
            v[3] = d.a_plus;
            v[5] = d.a_minus;
            v[0] = ivp - v[3] - v[4];
            v[2] = ivm - v[5] - v[4];
            case = ReconCase::EtaZero;
        }
    } else {
        v[4] = d.h_plus;
        v[6] = d.a_plus;
        if d.a_plus != 0 {
            v[4] = 0;
            v[7] = kappa;
            v[5] = d.h_minus;
            v[0] = ivp - v[6];
            v[2] = ivm - v[5] - v[6] - v[7];
            case = ReconCase::KappaAPlus;
        } else if d.h_plus != 0 {
            v[6] = 0;
            v[8] = kappa;
            v[5] = d.a_minus - v[8];
            v[0] = ivp - v[4] - v[8];
            v[2] = ivm - v[5] - v[4] - v[8];
            case = ReconCase::KappaHPlus;
        } else {
            v[8] = d.eta;
            v[5] = d.a_minus - v[8];
            v[7] = kappa - v[8];
            v[0] = ivp - v[8];
            v[2] = ivm - v[5] - v[7] - v[8];
            case = ReconCase::KappaOther;
        }
    }
    Ok((v, case))
}

fn to_block(v: [i64; 9]) -> Result<BlockVector, DiskError> {
    let mut a = [0u32; 9];
    for (i, &c) in v.iter().enumerate() {
        a[i] = u32::try_from(c).map_err(|_| {
            DiskError::NotRealizable(format!("negative coefficient {c} for {}", BlockType::ALL[i]))
        })?;
    }
    Ok(BlockVector::from_array(a))
}

/// Reconstruct the admissible block vector with the given parameters.
pub fn reconstruct(p: &ParamVector) -> Result<BlockVector, DiskError> {
    reconstruct_traced(p).map(|(v, _)| v)
}

pub fn reconstruct_traced(p: &ParamVector) -> Result<(BlockVector, ReconCase), DiskError> {
    let (v, case) = run_cases(p)?;
    let xi = to_block(v)?;
    if params(&xi) != *p {
        return Err(DiskError::NotRealizable(format!("candidate {xi} has parameters {}", params(&xi))));
    }
    if !is_admissible(&xi) {
        return Err(DiskError::NotRealizable(format!("candidate {xi} is not admissible")));
    }
    Ok((xi, case))
}

/// All block vectors with coefficient sum at most `n`, in lexicographic order.
pub fn vectors_with_sum_at_most(n: u32) -> Vec<BlockVector> {
    fn rec(i: usize, left: u32, cur: &mut [u32; 9], out: &mut Vec<BlockVector>) {
        if i == 9 {
            out.push(BlockVector::from_array(*cur));
            return;
        }
        for c in 0..=left {
            cur[i] = c;
            rec(i + 1, left - c, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, n, &mut [0; 9], &mut out);
    out
}

/// All block vectors with every coefficient at most `m`.
pub fn vectors_with_entries_at_most(m: u32) -> Vec<BlockVector> {
    let base = m + 1;
    (0..base.pow(9))
        .map(|mut k| {
            let mut a = [0u32; 9];
            for slot in a.iter_mut() {
                *slot = k % base;
                k /= base;
            }
            BlockVector::from_array(a)
        })
        .collect()
}

/// Edges forced by the reconstruction cases: for each case, the
/// non-universal pairs occurring together in a vector that the case
/// reproduces exactly.
pub fn derive_case_edges(max_entry: u32) -> BTreeMap<ReconCase, BTreeSet<(BlockType, BlockType)>> {
    let mut out: BTreeMap<ReconCase, BTreeSet<(BlockType, BlockType)>> = BTreeMap::new();
    for xi in vectors_with_entries_at_most(max_entry) {
        let Ok((v, case)) = run_cases(&params(&xi)) else { continue };
        if to_block(v).ok() != Some(xi) {
            continue;
        }
        let rest: Vec<BlockType> = xi.support().into_iter().filter(|t| !t.is_universal()).collect();
        let entry = out.entry(case).or_default();
        for (i, &a) in rest.iter().enumerate() {
            for &b in &rest[i + 1..] {
                entry.insert((a, b));
            }
        }
    }
    out
}

/// First pair of distinct vectors, both admissible under `edges` and with
/// coefficient sum at most `max_sum`, that share parameters.
pub fn collision_under(
    edges: &[(BlockType, BlockType)],
    max_sum: u32,
) -> Option<(BlockVector, BlockVector)> {
    let mut seen: HashMap<ParamVector, BlockVector> = HashMap::new();
    for xi in vectors_with_sum_at_most(max_sum) {
        if !is_clique_under(&xi.support(), edges) {
            continue;
        }
        if let Some(prev) = seen.insert(params(&xi), xi) {
            return Some((prev, xi));
        }
    }
    None
}

/// First pair of distinct non-admissible vectors with equal parameters.
pub fn non_admissible_collision(max_sum: u32) -> Option<(BlockVector, BlockVector)> {
    let mut seen: HashMap<ParamVector, BlockVector> = HashMap::new();
    for xi in vectors_with_sum_at_most(max_sum) {
        if is_admissible(&xi) {
            continue;
        }
        if let Some(prev) = seen.insert(params(&xi), xi) {
            return Some((prev, xi));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_examples() {
        assert_eq!(params(&BlockVector::unit(BlockType::IPlus)).to_array(), [1, 0, 0, 1, 1, 1, 0]);
        let v = BlockVector { x_plus: 1, y_minus: 2, ..Default::default() };
        assert_eq!(params(&v).to_array(), [1, 2, 2, 1, 5, 1, 0]);
        assert_eq!(params(&BlockVector::default()), ParamVector::default());
    }

    #[test]
    fn reconstruct_examples() {
        let p: ParamVector = "1,2,2,1,5,1,0".parse().unwrap();
        assert_eq!(reconstruct(&p).unwrap().to_string(), "I+:1 II-:2");
        let iii = BlockVector::unit(BlockType::III);
        assert_eq!(reconstruct(&params(&iii)).unwrap(), iii);
        assert_eq!(reconstruct(&ParamVector::default()).unwrap(), BlockVector::default());
    }

    #[test]
    fn parity_failure() {
        let p = ParamVector { iv_plus: 1, ..Default::default() };
        assert_eq!(derived(&p), Err(DiskError::NonRealizable));
        assert!(reconstruct(&p).is_err());
    }

    #[test]
    fn admissibility_examples() {
        assert!(!is_admissible(&BlockVector { x: 1, z: 1, ..Default::default() }));
        assert!(is_admissible(&BlockVector { t1: 2, t2: 3, ..Default::default() }));
        assert!(is_admissible(&BlockVector { x_plus: 4, x_minus: 1, y_minus: 7, ..Default::default() }));
    }

    #[test]
    fn vector_text_round_trip() {
        let v = BlockVector { x_plus: 1, y_minus: 2, t2: 5, ..Default::default() };
        assert_eq!(v.to_string().parse::<BlockVector>().unwrap(), v);
        assert_eq!("1,0,0,0,0,2,0,0,5".parse::<BlockVector>().unwrap(), v);
    }
}
