//! Moves of τ-points between the rectangles of the skeleton.
//!
//! The up-direction rules:
//!
//! | move | from | to |
//! |------|------|----|
//! | 0    | 3+   | 2+ or 4+ |
//! | 0    | 2-, 4- | 3- |
//! | 1s   | 4+   | 1+ or 3+ |
//! | 1s   | 1-, 3- | 4- |
//! | 1d   | 4+   | 4- |
//! | 1d   | 1-, 3- | 1+ or 3+ |
//!
//! Down-direction rules interchange the signs. The relation has cycles
//! (3+ and 4+, 3- and 4-), so normalization only takes moves that lower the
//! distance to the sinks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::Diagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move {kind} does not apply to {tau} ({dir})")]
    Inapplicable { tau: TauType, kind: MoveKind, dir: Direction },
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TauSign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TauType {
    pub base: u8,
    pub sign: TauSign,
}

impl TauType {
    pub const fn new(base: u8, sign: TauSign) -> TauType {
        TauType { base, sign }
    }

    pub const fn plus(base: u8) -> TauType {
        TauType::new(base, TauSign::Plus)
    }

    pub const fn minus(base: u8) -> TauType {
        TauType::new(base, TauSign::Minus)
    }

    /// The eight types, in the tie-breaking order used by policies.
    pub const ALL: [TauType; 8] = [
        TauType::plus(1),
        TauType::plus(2),
        TauType::plus(3),
        TauType::plus(4),
        TauType::minus(1),
        TauType::minus(2),
        TauType::minus(3),
        TauType::minus(4),
    ];

    pub fn flip(self) -> TauType {
        let sign = match self.sign {
            TauSign::Plus => TauSign::Minus,
            TauSign::Minus => TauSign::Plus,
        };
        TauType { base: self.base, sign }
    }

    fn order(self) -> usize {
        TauType::ALL.iter().position(|&t| t == self).expect("valid type")
    }
}

impl fmt::Display for TauType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == TauSign::Plus { '+' } else { '-' };
        write!(f, "{}{}", self.base, s)
    }
}

impl FromStr for TauType {
    type Err = MoveError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut cs = s.chars();
        let base = cs.next().and_then(|c| c.to_digit(10)).filter(|b| (1..=4).contains(b));
        let sign = match cs.next() {
            Some('+') => Some(TauSign::Plus),
            Some('-') | Some('\u{2212}') => Some(TauSign::Minus),
            _ => None,
        };
        match (base, sign, cs.next()) {
            (Some(b), Some(sign), None) => Ok(TauType { base: b as u8, sign }),
            _ => Err(MoveError::Parse(format!("bad tau type `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveKind {
    Zero,
    OneS,
    OneD,
}

impl MoveKind {
    pub const ALL: [MoveKind; 3] = [MoveKind::Zero, MoveKind::OneS, MoveKind::OneD];
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::Zero => "zero",
            MoveKind::OneS => "one_s",
            MoveKind::OneD => "one_d",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Direction {
    Up,
    Down,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Direction::Up { "up" } else { "down" })
    }
}

impl FromStr for Direction {
    type Err = MoveError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "up" => Ok(Direction::Up),
            "down" => Ok(Direction::Down),
            _ => Err(MoveError::Parse(format!("bad direction `{s}`"))),
        }
    }
}

fn up_successors(tau: TauType, kind: MoveKind) -> Vec<TauType> {
    use TauSign::*;
    match (kind, tau.base, tau.sign) {
        (MoveKind::Zero, 3, Plus) => vec![TauType::plus(2), TauType::plus(4)],
        (MoveKind::Zero, 2 | 4, Minus) => vec![TauType::minus(3)],
        (MoveKind::OneS, 4, Plus) => vec![TauType::plus(1), TauType::plus(3)],
        (MoveKind::OneS, 1 | 3, Minus) => vec![TauType::minus(4)],
        (MoveKind::OneD, 4, Plus) => vec![TauType::minus(4)],
        (MoveKind::OneD, 1 | 3, Minus) => vec![TauType::plus(1), TauType::plus(3)],
        _ => vec![],
    }
}

pub fn transition(tau: TauType, kind: MoveKind, dir: Direction) -> Result<BTreeSet<TauType>, MoveError> {
    let succ = match dir {
        Direction::Up => up_successors(tau, kind),
        Direction::Down => up_successors(tau.flip(), kind).into_iter().map(TauType::flip).collect(),
    };
    if succ.is_empty() {
        return Err(MoveError::Inapplicable { tau, kind, dir });
    }
    Ok(succ.into_iter().collect())
}

pub fn applicable_moves(tau: TauType, dir: Direction) -> BTreeSet<MoveKind> {
    MoveKind::ALL.into_iter().filter(|&k| transition(tau, k, dir).is_ok()).collect()
}

/// Types at which no move applies in direction `dir`.
pub fn sinks(dir: Direction) -> BTreeSet<TauType> {
    TauType::ALL.into_iter().filter(|&t| applicable_moves(t, dir).is_empty()).collect()
}

/// Shortest number of moves from `tau` to a sink.
pub fn distance(tau: TauType, dir: Direction) -> u32 {
    static TABLE: OnceLock<[[u32; 8]; 2]> = OnceLock::new();
    let table = TABLE.get_or_init(|| [distances(Direction::Up), distances(Direction::Down)]);
    table[dir as usize][tau.order()]
}

fn distances(dir: Direction) -> [u32; 8] {
    let targets = sinks(dir);
    let mut dist: BTreeMap<TauType, u32> = targets.iter().map(|&t| (t, 0)).collect();
    let mut queue: VecDeque<TauType> = targets.into_iter().collect();
    while let Some(t) = queue.pop_front() {
        for s in TauType::ALL {
            if dist.contains_key(&s) {
                continue;
            }
            let reaches = MoveKind::ALL
                .iter()
                .any(|&k| transition(s, k, dir).map(|set| set.contains(&t)).unwrap_or(false));
            if reaches {
                dist.insert(s, dist[&t] + 1);
                queue.push_back(s);
            }
        }
    }
    TauType::ALL.map(|t| dist.get(&t).copied().unwrap_or(u32::MAX))
}

/// Moves from `tau` that strictly lower the distance to the sinks.
pub fn decreasing_moves(tau: TauType, dir: Direction) -> Vec<(MoveKind, TauType)> {
    let d = distance(tau, dir);
    let mut out = Vec::new();
    for k in MoveKind::ALL {
        if let Ok(set) = transition(tau, k, dir) {
            out.extend(set.into_iter().filter(|&s| distance(s, dir) < d).map(|s| (k, s)));
        }
    }
    out
}

/// Chooses one of the measure-decreasing moves; `None` means stop.
pub trait SuccessorPolicy {
    fn choose(&self, tau: TauType, dir: Direction, options: &[(MoveKind, TauType)]) -> Option<(MoveKind, TauType)>;
}

/// Smallest resulting distance, ties broken by type order, then move kind.
#[derive(Debug, Clone, Copy, Default)]
pub struct MinMeasure;

impl SuccessorPolicy for MinMeasure {
    fn choose(&self, _tau: TauType, dir: Direction, options: &[(MoveKind, TauType)]) -> Option<(MoveKind, TauType)> {
        options.iter().copied().min_by_key(|&(k, s)| (distance(s, dir), s.order(), k))
    }
}

/// First option in move-kind order.
#[derive(Debug, Clone, Copy, Default)]
pub struct FirstSuccessor;

impl SuccessorPolicy for FirstSuccessor {
    fn choose(&self, _tau: TauType, _dir: Direction, options: &[(MoveKind, TauType)]) -> Option<(MoveKind, TauType)> {
        options.first().copied()
    }
}

/// τ-points per crossing and rectangle; rectangle `r` lies along slot `r`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TauState {
    pub crossings: Vec<[Vec<TauType>; 4]>,
    /// Where a 1-move carries a point: the rectangle at the other end of the
    /// same edge. Without it points stay in place.
    #[serde(skip)]
    pub neighbors: Option<Vec<[(usize, usize); 4]>>,
}

impl TauState {
    pub fn new(crossings: usize) -> TauState {
        TauState { crossings: vec![Default::default(); crossings], neighbors: None }
    }

    pub fn for_diagram(d: &Diagram) -> TauState {
        let n = d.crossing_count();
        let neighbors = (0..n).map(|v| [0, 1, 2, 3].map(|s| d.partner((v, s)))).collect();
        TauState { crossings: vec![Default::default(); n], neighbors: Some(neighbors) }
    }

    pub fn push(&mut self, crossing: usize, rect: usize, tau: TauType) {
        if crossing >= self.crossings.len() {
            self.crossings.resize(crossing + 1, Default::default());
        }
        self.crossings[crossing][rect].push(tau);
    }

    pub fn points(&self) -> impl Iterator<Item = (usize, usize, TauType)> + '_ {
        self.crossings
            .iter()
            .enumerate()
            .flat_map(|(v, rs)| rs.iter().enumerate().flat_map(move |(r, ts)| ts.iter().map(move |&t| (v, r, t))))
    }

    pub fn measure(&self, dir: Direction) -> u32 {
        self.points().map(|(_, _, t)| distance(t, dir)).sum()
    }

    /// Parse `crossing:rect:type,type;crossing:rect:type`.
    pub fn parse(text: &str) -> Result<TauState, MoveError> {
        let mut st = TauState::default();
        for group in text.split(';').map(str::trim).filter(|g| !g.is_empty()) {
            let mut parts = group.splitn(3, ':');
            let bad = || MoveError::Parse(format!("bad group `{group}`, expected crossing:rect:types"));
            let v: usize = parts.next().and_then(|p| p.trim().parse().ok()).ok_or_else(bad)?;
            let r: usize = parts.next().and_then(|p| p.trim().parse().ok()).filter(|&r| r < 4).ok_or_else(bad)?;
            let types = parts.next().ok_or_else(bad)?;
            for t in types.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                st.push(v, r, t.parse()?);
            }
        }
        Ok(st)
    }
}

impl fmt::Display for TauState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups = Vec::new();
        for (v, rs) in self.crossings.iter().enumerate() {
            for (r, ts) in rs.iter().enumerate() {
                if !ts.is_empty() {
                    let list: Vec<String> = ts.iter().map(TauType::to_string).collect();
                    groups.push(format!("{v}:{r}:{}", list.join(",")));
                }
            }
        }
        f.write_str(&groups.join(";"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub crossing: usize,
    pub rect: usize,
    pub kind: MoveKind,
    pub before: TauType,
    pub after: TauType,
    pub to_crossing: usize,
    pub to_rect: usize,
    pub measure: u32,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "step={} crossing={} rect={} kind={} {} -> {} at {}:{} measure={}",
            self.step,
            self.crossing,
            self.rect,
            self.kind,
            self.before,
            self.after,
            self.to_crossing,
            self.to_rect,
            self.measure
        )
    }
}

/// Apply measure-decreasing moves until none is left.
pub fn normalize(state: &TauState, dir: Direction, policy: &dyn SuccessorPolicy) -> (TauState, Vec<TraceStep>) {
    let mut st = state.clone();
    let mut trace = Vec::new();
    loop {
        let mut pick = None;
        'scan: for (v, rs) in st.crossings.iter().enumerate() {
            for (r, ts) in rs.iter().enumerate() {
                for (i, &t) in ts.iter().enumerate() {
                    let opts = decreasing_moves(t, dir);
                    if let Some(choice) = policy.choose(t, dir, &opts) {
                        pick = Some((v, r, i, t, choice));
                        break 'scan;
                    }
                }
            }
        }
        let Some((v, r, i, before, (kind, after))) = pick else { break };
        st.crossings[v][r].remove(i);
        let (tv, tr) = match kind {
            MoveKind::Zero => (v, (r + 2) % 4),
            _ => st.neighbors.as_ref().map_or((v, r), |n| n[v][r]),
        };
        st.crossings[tv][tr].push(after);
        trace.push(TraceStep {
            step: trace.len(),
            crossing: v,
            rect: r,
            kind,
            before,
            after,
            to_crossing: tv,
            to_rect: tr,
            measure: st.measure(dir),
        });
    }
    (st, trace)
}

/// Only 1+ and 2+ points, and at most one occupied rectangle per crossing.
pub fn is_standard_form(state: &TauState) -> bool {
    let ok_types = state.points().all(|(_, _, t)| t.sign == TauSign::Plus && t.base <= 2);
    let one_rect = state.crossings.iter().all(|rs| rs.iter().filter(|ts| !ts.is_empty()).count() <= 1);
    ok_types && one_rect
}

/// Every maximal path of measure-decreasing moves from `tau`, as type sequences.
pub fn maximal_paths(tau: TauType, dir: Direction) -> Vec<Vec<TauType>> {
    let opts = decreasing_moves(tau, dir);
    if opts.is_empty() {
        return vec![vec![tau]];
    }
    let mut out = Vec::new();
    for (_, s) in opts {
        for mut p in maximal_paths(s, dir) {
            p.insert(0, tau);
            out.push(p);
        }
    }
    out
}
