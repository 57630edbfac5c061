//! Oriented 4-valent knot diagrams: PD and Gauss parsing, faces, validation,
//! connected sums.
//!
//! Slots of a crossing are numbered counterclockwise starting at the incoming
//! under-strand, so slots 0/2 carry the under-strand and 1/3 the over-strand.
//! After parsing, edge labels are renumbered in strand-walk order starting at
//! the edge that enters crossing 0 through slot 0.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("no crossings")]
    NoCrossings,
    #[error("malformed tuple: {0}")]
    Malformed(String),
    #[error("open strand: label {0} used once")]
    OpenStrand(i64),
    #[error("label {label} used {count} times")]
    RepeatedLabel { label: i64, count: usize },
    #[error("disconnected diagram")]
    Disconnected,
    #[error("multiple components: strand walk covers {walked} of {total} edges")]
    MultipleComponents { walked: usize, total: usize },
    #[error("non-planar code: {faces} faces for {crossings} crossings")]
    NonPlanar { crossings: usize, faces: usize },
    #[error("gauss code: {0}")]
    Gauss(String),
    #[error("edge {edge} out of range (diagram has {edges} edges)")]
    UnknownEdge { edge: usize, edges: usize },
}

/// Crossing handedness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

/// A half-edge: (crossing id, slot).
pub type HalfEdge = (usize, usize);

/// A face of the diagram, traversed with the face on the left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    /// Corner `(v, j)` sits between slots `j` and `j + 1` of crossing `v`.
    pub corners: Vec<HalfEdge>,
    /// `edges[k]` is the edge arriving at `corners[k]`.
    pub edges: Vec<usize>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.corners.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Diagram {
    slots: Vec<[usize; 4]>,
    head: Vec<HalfEdge>,
    tail: Vec<HalfEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Violation {
    FaceMeetsCrossingTwice { face: usize, crossing: usize },
    FaceMeetsEdgeTwice { face: usize, edge: usize },
    EdgeMeetsCrossingTwice { edge: usize, crossing: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FaceMeetsCrossingTwice { face, crossing } => {
                write!(f, "face {face} meets crossing region {crossing} twice")
            }
            Violation::FaceMeetsEdgeTwice { face, edge } => {
                write!(f, "face {face} meets edge region {edge} twice")
            }
            Violation::EdgeMeetsCrossingTwice { edge, crossing } => {
                write!(f, "edge region {edge} meets crossing region {crossing} twice")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Invariants used in place of diagram isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub crossings: usize,
    pub faces: usize,
    pub face_degrees: Vec<usize>,
}

impl Diagram {
    /// The 0-crossing unknot. It has no PD code.
    pub fn unknot() -> Diagram {
        Diagram { slots: Vec::new(), head: Vec::new(), tail: Vec::new() }
    }

    pub fn is_unknot(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.slots.len()
    }

    pub fn edge_count(&self) -> usize {
        self.head.len()
    }

    /// Edge labels at the four slots of crossing `v`.
    pub fn crossing(&self, v: usize) -> [usize; 4] {
        self.slots[v]
    }

    pub fn label(&self, (v, s): HalfEdge) -> usize {
        self.slots[v][s]
    }

    /// Half-edge where edge `e` enters a crossing.
    pub fn head(&self, e: usize) -> HalfEdge {
        self.head[e]
    }

    /// Half-edge where edge `e` leaves a crossing.
    pub fn tail(&self, e: usize) -> HalfEdge {
        self.tail[e]
    }

    /// The other end of the edge attached at `h`.
    pub fn partner(&self, h: HalfEdge) -> HalfEdge {
        let e = self.label(h);
        if self.head[e] == h {
            self.tail[e]
        } else {
            self.head[e]
        }
    }

    pub fn sign(&self, v: usize) -> Sign {
        if self.head[self.slots[v][3]] == (v, 3) {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    /// Build from raw PD tuples, renormalizing labels.
    pub fn from_tuples(tuples: &[[i64; 4]]) -> Result<Diagram, DiagramError> {
        let n = tuples.len();
        if n == 0 {
            return Err(DiagramError::NoCrossings);
        }
        let mut occ: BTreeMap<i64, Vec<HalfEdge>> = BTreeMap::new();
        for (v, t) in tuples.iter().enumerate() {
            for (s, &l) in t.iter().enumerate() {
                occ.entry(l).or_default().push((v, s));
            }
        }
        for (&label, hs) in &occ {
            match hs.len() {
                2 => {}
                1 => return Err(DiagramError::OpenStrand(label)),
                count => return Err(DiagramError::RepeatedLabel { label, count }),
            }
        }
        let mut mate = vec![[(0usize, 0usize); 4]; n];
        for hs in occ.values() {
            mate[hs[0].0][hs[0].1] = hs[1];
            mate[hs[1].0][hs[1].1] = hs[0];
        }

        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for hs in occ.values() {
            let a = find(&mut parent, hs[0].0);
            let b = find(&mut parent, hs[1].0);
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        if (0..n).any(|v| find(&mut parent, v) != root) {
            return Err(DiagramError::Disconnected);
        }

        let total = 2 * n;
        let mut seen = vec![[false; 4]; n];
        let mut head = Vec::with_capacity(total);
        let mut tail = Vec::with_capacity(total);
        let mut cur = (0usize, 0usize);
        loop {
            let (v, s) = cur;
            if s == 2 || seen[v][s] {
                return Err(DiagramError::Malformed(format!(
                    "inconsistent strand orientation at crossing {v}"
                )));
            }
            let out = (v, (s + 2) % 4);
            if seen[out.0][out.1] {
                return Err(DiagramError::Malformed(format!(
                    "inconsistent strand orientation at crossing {v}"
                )));
            }
            seen[v][s] = true;
            seen[out.0][out.1] = true;
            head.push(cur);
            tail.push(out);
            cur = mate[out.0][out.1];
            if cur == (0, 0) {
                break;
            }
        }
        if head.len() < total {
            return Err(DiagramError::MultipleComponents { walked: head.len(), total });
        }
        // `tail[k]` was recorded as the exit after entering through `head[k]`,
        // i.e. it belongs to edge k + 1.
        tail.rotate_right(1);
        let mut slots = vec![[0usize; 4]; n];
        for e in 0..total {
            slots[head[e].0][head[e].1] = e;
            slots[tail[e].0][tail[e].1] = e;
        }
        let d = Diagram { slots, head, tail };
        let f = d.faces().len();
        if f != n + 2 {
            return Err(DiagramError::NonPlanar { crossings: n, faces: f });
        }
        Ok(d)
    }

    /// Raw tuples of the normalized diagram, sorted by crossing id.
    pub fn tuples(&self) -> Vec<[i64; 4]> {
        self.slots.iter().map(|t| t.map(|l| l as i64)).collect()
    }

    /// Faces in order of their first corner `(v, j)`.
    pub fn faces(&self) -> Vec<Face> {
        if self.is_unknot() {
            return vec![Face { corners: vec![], edges: vec![] }; 2];
        }
        let n = self.crossing_count();
        let mut used = vec![[false; 4]; n];
        let mut out = Vec::with_capacity(n + 2);
        for v in 0..n {
            for j in 0..4 {
                if used[v][j] {
                    continue;
                }
                let mut corners = Vec::new();
                let mut edges = Vec::new();
                let mut c = (v, j);
                loop {
                    used[c.0][c.1] = true;
                    corners.push(c);
                    edges.push(self.label(c));
                    let leave = (c.0, (c.1 + 1) % 4);
                    c = self.partner(leave);
                    if c == (v, j) {
                        break;
                    }
                }
                out.push(Face { corners, edges });
            }
        }
        out
    }

    /// Face index containing each corner.
    pub fn corner_faces(&self) -> Vec<[usize; 4]> {
        let mut m = vec![[0usize; 4]; self.crossing_count()];
        for (i, f) in self.faces().iter().enumerate() {
            for &(v, j) in &f.corners {
                m[v][j] = i;
            }
        }
        m
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let faces = self.faces();
        let mut face_degrees: Vec<usize> = faces.iter().map(Face::degree).collect();
        face_degrees.sort_unstable();
        Fingerprint { crossings: self.crossing_count(), faces: faces.len(), face_degrees }
    }

    /// Contact-condition check between face, edge and crossing regions.
    pub fn validate_minimal_adjacency(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (i, f) in self.faces().iter().enumerate() {
            let mut by_crossing: BTreeMap<usize, usize> = BTreeMap::new();
            for &(v, _) in &f.corners {
                *by_crossing.entry(v).or_default() += 1;
            }
            for (&crossing, &k) in &by_crossing {
                if k > 1 {
                    violations.push(Violation::FaceMeetsCrossingTwice { face: i, crossing });
                }
            }
            let mut by_edge: BTreeMap<usize, usize> = BTreeMap::new();
            for &e in &f.edges {
                *by_edge.entry(e).or_default() += 1;
            }
            for (&edge, &k) in &by_edge {
                if k > 1 {
                    violations.push(Violation::FaceMeetsEdgeTwice { face: i, edge });
                }
            }
        }
        for e in 0..self.edge_count() {
            if self.head[e].0 == self.tail[e].0 {
                violations.push(Violation::EdgeMeetsCrossingTwice { edge: e, crossing: self.head[e].0 });
            }
        }
        violations.sort();
        ValidationReport { violations }
    }

    /// Lowest edge label on the first face of maximal degree.
    pub fn default_gluing_edge(&self) -> Option<usize> {
        let faces = self.faces();
        let max = faces.iter().map(Face::degree).max()?;
        let f = faces.iter().find(|f| f.degree() == max)?;
        f.edges.iter().copied().min()
    }

    pub fn emit_pd_code(&self) -> String {
        self.slots
            .iter()
            .map(|t| format!("X({},{},{},{})", t[0], t[1], t[2], t[3]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.emit_pd_code())
    }
}

/// Parse `X(a,b,c,d) X(...)`; brackets `X[...]` and a `PD[...]` wrapper are accepted.
pub fn parse_pd_code(text: &str) -> Result<Diagram, DiagramError> {
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix("PD[").and_then(|r| r.strip_suffix(']')) {
        body = rest;
    }
    let mut tuples = Vec::new();
    let mut rest = body;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        let after = rest
            .strip_prefix('X')
            .ok_or_else(|| DiagramError::Malformed(format!("expected X(...) at `{}`", head_of(rest))))?;
        let (open, close) = match after.chars().next() {
            Some('(') => ('(', ')'),
            Some('[') => ('[', ']'),
            _ => return Err(DiagramError::Malformed(format!("expected X(...) at `{}`", head_of(rest)))),
        };
        let end = after
            .find(close)
            .ok_or_else(|| DiagramError::Malformed(format!("unterminated tuple at `{}`", head_of(rest))))?;
        let inner = &after[open.len_utf8()..end];
        let nums: Vec<i64> = inner
            .split(',')
            .map(|s| s.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| DiagramError::Malformed(format!("non-integer label in `X{open}{inner}{close}`")))?;
        if nums.len() != 4 {
            return Err(DiagramError::Malformed(format!(
                "tuple `X{open}{inner}{close}` has {} entries",
                nums.len()
            )));
        }
        tuples.push([nums[0], nums[1], nums[2], nums[3]]);
        rest = &after[end + close.len_utf8()..];
    }
    Diagram::from_tuples(&tuples)
}

fn head_of(s: &str) -> &str {
    let end = s.char_indices().nth(12).map_or(s.len(), |(i, _)| i);
    &s[..end]
}

/// Parse a signed Gauss code such as `O1+ U2+ O3+ U1+ O2+ U3+`.
pub fn parse_gauss_code(text: &str) -> Result<Diagram, DiagramError> {
    #[derive(Clone, Copy)]
    struct Pass {
        over: bool,
        label: u64,
        sign: Sign,
    }
    let mut passes = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let mut chars = tok.chars();
        let over = match chars.next() {
            Some('O') | Some('o') => true,
            Some('U') | Some('u') => false,
            _ => return Err(DiagramError::Gauss(format!("bad token `{tok}`"))),
        };
        let rest: String = chars.collect();
        let sign_char = rest.chars().last().ok_or_else(|| DiagramError::Gauss(format!("bad token `{tok}`")))?;
        let sign = match sign_char {
            '+' => Sign::Positive,
            '-' | '\u{2212}' => Sign::Negative,
            _ => return Err(DiagramError::Gauss(format!("token `{tok}` lacks a sign"))),
        };
        let digits = &rest[..rest.len() - sign_char.len_utf8()];
        let label = digits.parse::<u64>().map_err(|_| DiagramError::Gauss(format!("bad token `{tok}`")))?;
        passes.push(Pass { over, label, sign });
    }
    if passes.is_empty() {
        return Err(DiagramError::NoCrossings);
    }
    let mut order: Vec<u64> = Vec::new();
    let mut uses: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (k, p) in passes.iter().enumerate() {
        let entry = uses.entry(p.label).or_default();
        if entry.is_empty() {
            order.push(p.label);
        }
        entry.push(k);
    }
    let m = passes.len() as i64;
    let mut tuples = Vec::with_capacity(order.len());
    for label in order {
        let ks = &uses[&label];
        if ks.len() != 2 {
            return Err(DiagramError::Gauss(format!("crossing {label} appears {} time(s)", ks.len())));
        }
        let (a, b) = (passes[ks[0]], passes[ks[1]]);
        if a.over == b.over {
            return Err(DiagramError::Gauss(format!("crossing {label} lacks an over/under pair")));
        }
        if a.sign != b.sign {
            return Err(DiagramError::Gauss(format!("crossing {label} has inconsistent signs")));
        }
        let (i, j) = if a.over { (ks[1] as i64, ks[0] as i64) } else { (ks[0] as i64, ks[1] as i64) };
        let prev = |k: i64| (k - 1).rem_euclid(m);
        let (b_slot, d_slot) = match a.sign {
            Sign::Positive => (j, prev(j)),
            Sign::Negative => (prev(j), j),
        };
        tuples.push([prev(i), b_slot, i, d_slot]);
    }
    Diagram::from_tuples(&tuples)
}

/// Connected sum glued at the default sites.
pub fn connected_sum(d1: &Diagram, d2: &Diagram) -> Diagram {
    match (d1.default_gluing_edge(), d2.default_gluing_edge()) {
        (Some(e1), Some(e2)) => connected_sum_at(d1, d2, e1, e2).expect("default gluing site is valid"),
        (None, _) => d2.clone(),
        (_, None) => d1.clone(),
    }
}

/// Connected sum cutting edge `e1` of `d1` and `e2` of `d2`.
pub fn connected_sum_at(d1: &Diagram, d2: &Diagram, e1: usize, e2: usize) -> Result<Diagram, DiagramError> {
    if d1.is_unknot() {
        return Ok(d2.clone());
    }
    if d2.is_unknot() {
        return Ok(d1.clone());
    }
    for (d, e) in [(d1, e1), (d2, e2)] {
        if e >= d.edge_count() {
            return Err(DiagramError::UnknownEdge { edge: e, edges: d.edge_count() });
        }
    }
    let off = d1.edge_count() as i64;
    let mut t1 = d1.tuples();
    let mut t2: Vec<[i64; 4]> = d2.tuples().into_iter().map(|t| t.map(|l| l + off)).collect();
    let (q1, s1) = d1.head(e1);
    let (q2, s2) = d2.head(e2);
    t2[q2][s2] = e1 as i64;
    t1[q1][s1] = e2 as i64 + off;
    t1.extend(t2);
    Diagram::from_tuples(&t1)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";

    #[test]
    fn trefoil_counts() {
        let d = parse_pd_code(TREFOIL).unwrap();
        assert_eq!((d.crossing_count(), d.edge_count(), d.faces().len()), (3, 6, 5));
        assert!(d.validate_minimal_adjacency().is_empty());
    }

    #[test]
    fn labels_follow_strand() {
        let d = parse_pd_code(TREFOIL).unwrap();
        for e in 0..d.edge_count() {
            let (v, s) = d.head(e);
            let out = d.label((v, (s + 2) % 4));
            assert_eq!(out, (e + 1) % d.edge_count());
        }
    }

    #[test]
    fn pd_errors() {
        assert_eq!(parse_pd_code(""), Err(DiagramError::NoCrossings));
        assert!(matches!(parse_pd_code("X(1,4,2,3) X(3,6,4,5)"), Err(DiagramError::OpenStrand(_))));
        assert!(matches!(parse_pd_code("X(1,2,3)"), Err(DiagramError::Malformed(_))));
        assert!(matches!(parse_pd_code("Y(1,2,3,4)"), Err(DiagramError::Malformed(_))));
        assert!(matches!(
            parse_pd_code("X(1,1,1,2) X(2,3,3,4) X(4,5,5,5)"),
            Err(DiagramError::RepeatedLabel { .. })
        ));
    }

    #[test]
    fn three_component_code_is_rejected() {
        assert!(matches!(
            parse_pd_code("X(1,4,2,3) X(3,6,4,5) X(5,2,6,1)"),
            Err(DiagramError::MultipleComponents { .. })
        ));
    }

    #[test]
    fn disconnected_is_rejected() {
        let two = format!("{TREFOIL} X(11,15,12,14) X(13,11,14,16) X(15,13,16,12)");
        assert_eq!(parse_pd_code(&two), Err(DiagramError::Disconnected));
    }

    #[test]
    fn gauss_trefoil_matches_pd() {
        let g = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        let p = parse_pd_code(TREFOIL).unwrap();
        assert_eq!(g.fingerprint(), p.fingerprint());
        assert!(parse_gauss_code("O1+ U2+ O3+ U1+ O2+").is_err());
        assert_eq!(parse_gauss_code(""), Err(DiagramError::NoCrossings));
    }

    #[test]
    fn emit_round_trip() {
        let d = parse_pd_code(TREFOIL).unwrap();
        let again = parse_pd_code(&d.emit_pd_code()).unwrap();
        assert_eq!(d, again);
    }

    #[test]
    fn unknot_sentinel() {
        let u = Diagram::unknot();
        assert_eq!(u.faces().len(), 2);
        let t = parse_pd_code(TREFOIL).unwrap();
        assert_eq!(connected_sum(&t, &u), t);
        assert_eq!(connected_sum(&u, &t), t);
    }

    #[test]
    fn kink_and_bigon_violations() {
        let kinked = parse_pd_code("X(1,5,2,4) X(3,1,4,8) X(5,3,6,2) X(6,7,7,8)").unwrap();
        let r = kinked.validate_minimal_adjacency();
        let loops: Vec<_> = r
            .violations
            .iter()
            .filter(|v| matches!(v, Violation::EdgeMeetsCrossingTwice { .. }))
            .collect();
        assert_eq!(loops.len(), 1);

        let r2 = parse_pd_code("X(3,1,4,4) X(2,2,3,1)").unwrap().validate_minimal_adjacency();
        assert!(r2.violations.iter().any(|v| matches!(v, Violation::FaceMeetsCrossingTwice { .. })));
    }
}
