//! Disjointness graphs: the nine block boundary types, decided by a
//! boundary-curve oracle, and the eleven 0-handle disk subclasses, built from
//! the gluing-case supports.
//!
//! A block's boundary sphere is cut into eight faces by the skeleton, the
//! crossing axis and the K-points. A boundary type is a simple closed curve,
//! listed as the cyclic sequence of face edges it crosses. Two types are
//! compatible when some ordering of their crossing points along shared edges
//! leaves every face with non-interleaving chords.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::disk::{derive_case_edges, BlockType, ParamVector, ReconCase, BLOCK_EDGES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompatError {
    #[error("oracle and derived edge sets disagree: {0}")]
    Conflict(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
}

/// Boundary faces: cyclic lists of `(edge, direction)`.
const FACES: [(&str, &[(&str, i8)]); 8] = [
    ("At", &[("KA", 1), ("h1p_u", 1), ("tA", -1), ("ax+", -1)]),
    ("Ab", &[("bA", 1), ("h1p_l", 1), ("KA", -1), ("ax0", -1), ("ax-", -1)]),
    ("Oa", &[("bOa", 1), ("h2", 1), ("tOa", -1), ("h1p_u", -1), ("h1p_l", -1)]),
    ("Ob", &[("bOb", 1), ("h1m_l", 1), ("h1m_u", 1), ("tOb", -1), ("h2", -1)]),
    ("Bt", &[("KB", 1), ("ax0", 1), ("ax+", 1), ("tB", -1), ("h1m_u", -1)]),
    ("Bb", &[("bB", 1), ("ax-", 1), ("KB", -1), ("h1m_l", -1)]),
    ("T", &[("tA", 1), ("tOa", 1), ("tOb", 1), ("tB", 1)]),
    ("Bo", &[("bA", 1), ("bOa", 1), ("bOb", 1), ("bB", 1)]),
];

fn curve(t: BlockType) -> &'static [&'static str] {
    match t {
        BlockType::IPlus => &["ax+", "h1p_u", "h2", "h1m_u"],
        BlockType::I => &["ax0", "h1p_l", "h2", "h1m_u"],
        BlockType::IMinus => &["ax-", "h1p_l", "h2", "h1m_l"],
        BlockType::IIPlus => &["ax+", "h1p_u", "h1p_l", "ax0"],
        BlockType::IIMinus => &["ax-", "h1m_l", "h1m_u", "ax0"],
        BlockType::II => &["ax+", "h1p_u", "h1p_l", "ax-", "h1m_l", "h1m_u"],
        BlockType::III => &["ax+", "h1p_u", "h2", "h1m_l", "ax-", "ax0"],
        BlockType::Tau1 => &["ax-", "KA", "h1p_u", "h2", "h1m_l"],
        BlockType::Tau2 => &["ax+", "KA", "ax-", "h1m_l", "h1m_u"],
    }
}

/// One arc of a boundary curve: it runs inside `face` from one edge to the next.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternArc {
    pub face: &'static str,
    pub from: &'static str,
    pub to: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryPattern {
    pub block_type: BlockType,
    /// Face edges crossed, in cyclic order.
    pub crossings: Vec<&'static str>,
    pub arcs: Vec<PatternArc>,
}

impl BoundaryPattern {
    /// Parameters read off as edge-crossing counts.
    pub fn params(&self) -> ParamVector {
        let mut p = ParamVector::default();
        for e in &self.crossings {
            match *e {
                "ax+" => p.iv_plus += 1,
                "ax0" => p.iv_0 += 1,
                "ax-" => p.iv_minus += 1,
                "h1p_u" | "h1p_l" => p.h1_plus += 1,
                "h1m_u" | "h1m_l" => p.h1_minus += 1,
                "h2" => p.h2 += 1,
                "KA" | "KB" => p.kappa += 1,
                _ => {}
            }
        }
        p
    }
}

fn face_of(a: &str, b: &str) -> &'static str {
    let hits: Vec<&str> = FACES
        .iter()
        .filter(|(_, bd)| bd.iter().any(|(e, _)| *e == a) && bd.iter().any(|(e, _)| *e == b))
        .map(|(f, _)| *f)
        .collect();
    assert_eq!(hits.len(), 1, "edges {a} and {b} must share exactly one face");
    hits[0]
}

pub fn block_boundary_pattern(t: BlockType) -> BoundaryPattern {
    let c = curve(t);
    let arcs = (0..c.len())
        .map(|i| {
            let (from, to) = (c[i], c[(i + 1) % c.len()]);
            PatternArc { face: face_of(from, to), from, to }
        })
        .collect();
    BoundaryPattern { block_type: t, crossings: c.to_vec(), arcs }
}

/// Whether disjoint curves of types `a` and `b` fit in one block.
/// `a == b` asks for two parallel copies.
pub fn disjoint_realizable(a: BlockType, b: BlockType) -> bool {
    let pa = block_boundary_pattern(a);
    let pb = block_boundary_pattern(b);
    let shared: Vec<&str> = {
        let sa: BTreeSet<&str> = pa.crossings.iter().copied().collect();
        pb.crossings.iter().copied().filter(|e| sa.contains(e)).collect::<BTreeSet<_>>().into_iter().collect()
    };
    let arcs: Vec<(&PatternArc, usize)> =
        pa.arcs.iter().map(|x| (x, 0)).chain(pb.arcs.iter().map(|x| (x, 1))).collect();
    'orders: for bits in 0u32..(1 << shared.len()) {
        // bit set: curve b's point comes first along the edge's direction
        let b_first = |e: &str| shared.iter().position(|s| *s == e).map(|i| bits >> i & 1 == 1);
        for (fname, bd) in FACES.iter() {
            let pos = |e: &str, cid: usize| -> (usize, u8) {
                let idx = bd.iter().position(|(x, _)| *x == e).expect("edge on face");
                let sub = match b_first(e) {
                    None => 0,
                    Some(bf) => {
                        let first = if bf { 1 } else { 0 };
                        let s = if cid == first { 0 } else { 1 };
                        if bd[idx].1 < 0 {
                            1 - s
                        } else {
                            s
                        }
                    }
                };
                (idx, sub)
            };
            let chords: Vec<((usize, u8), (usize, u8), usize)> = arcs
                .iter()
                .filter(|(arc, _)| arc.face == *fname)
                .map(|(arc, cid)| {
                    let (p, q) = (pos(arc.from, *cid), pos(arc.to, *cid));
                    (p.min(q), p.max(q), *cid)
                })
                .collect();
            for (i, &(p, q, c1)) in chords.iter().enumerate() {
                for &(r, s, c2) in &chords[i + 1..] {
                    if c1 == c2 {
                        continue;
                    }
                    let inside = |z| p < z && z < q;
                    if inside(r) != inside(s) {
                        continue 'orders;
                    }
                }
            }
        }
        return true;
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Provenance {
    /// A type stated to be adjacent to every other one.
    Universality,
    BoundaryOracle,
    Reconstruction(ReconCase),
    CaseSupport(u8),
    /// Image of a case-support edge under the mirror or up/down swap;
    /// derived, not separately confirmed.
    Symmetry,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Universality => write!(f, "stated: universal vertex"),
            Provenance::BoundaryOracle => write!(f, "derived: boundary-curve oracle"),
            Provenance::Reconstruction(c) => write!(f, "derived: reconstruction case ({c})"),
            Provenance::CaseSupport(n) => write!(f, "stated: case {n} support"),
            Provenance::Symmetry => write!(f, "derived, unconfirmed: symmetry image"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clique {
    pub vertices: Vec<String>,
    pub source: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompatGraph {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: BTreeMap<(String, String), BTreeSet<Provenance>>,
    pub realizable_cliques: Vec<Clique>,
}

impl CompatGraph {
    fn new(name: &str, vertices: Vec<String>) -> CompatGraph {
        CompatGraph { name: name.into(), vertices, edges: BTreeMap::new(), realizable_cliques: Vec::new() }
    }

    fn key(&self, a: &str, b: &str) -> (String, String) {
        let ia = self.vertices.iter().position(|v| v == a);
        let ib = self.vertices.iter().position(|v| v == b);
        if ia <= ib {
            (a.to_string(), b.to_string())
        } else {
            (b.to_string(), a.to_string())
        }
    }

    fn add_edge(&mut self, a: &str, b: &str, p: Provenance) {
        if a != b {
            let k = self.key(a, b);
            self.edges.entry(k).or_default().insert(p);
        }
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        self.edges.contains_key(&self.key(a, b))
    }

    pub fn is_clique<S: AsRef<str>>(&self, vs: &[S]) -> bool {
        vs.iter().enumerate().all(|(i, a)| vs[i + 1..].iter().all(|b| self.has_edge(a.as_ref(), b.as_ref())))
    }

    /// Edges among the given vertices.
    pub fn induced_edges<S: AsRef<str>>(&self, vs: &[S]) -> Vec<(String, String)> {
        let set: BTreeSet<&str> = vs.iter().map(|s| s.as_ref()).collect();
        self.edges
            .keys()
            .filter(|(a, b)| set.contains(a.as_str()) && set.contains(b.as_str()))
            .cloned()
            .collect()
    }

    /// Triangles contained in no recorded clique.
    pub fn unwitnessed_triangles(&self) -> Vec<[String; 3]> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let t = [self.vertices[i].clone(), self.vertices[j].clone(), self.vertices[k].clone()];
                    if !self.is_clique(&t) {
                        continue;
                    }
                    let witnessed =
                        self.realizable_cliques.iter().any(|c| t.iter().all(|v| c.vertices.contains(v)));
                    if !witnessed {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("graph \"{}\" {{\n", self.name);
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for ((a, b), ps) in &self.edges {
            let derived_only = ps.iter().all(|p| matches!(p, Provenance::Symmetry));
            let style = if derived_only { " [style=dashed]" } else { "" };
            s.push_str(&format!("  \"{a}\" -- \"{b}\"{style};\n"));
        }
        s.push_str("}\n");
        s
    }

    /// One line per edge with its provenance, then cliques and unwitnessed triangles.
    pub fn report(&self) -> String {
        let mut s = format!("graph {}: {} vertices, {} edges\n", self.name, self.vertices.len(), self.edges.len());
        for ((a, b), ps) in &self.edges {
            let p: Vec<String> = ps.iter().map(Provenance::to_string).collect();
            s.push_str(&format!("edge {a} -- {b}: {}\n", p.join("; ")));
        }
        for c in &self.realizable_cliques {
            s.push_str(&format!("clique {{{}}}: {}\n", c.vertices.join(", "), c.source));
        }
        let tri = self.unwitnessed_triangles();
        s.push_str(&format!("unwitnessed triangles: {}\n", tri.len()));
        for t in tri {
            s.push_str(&format!("  {{{}}}\n", t.join(", ")));
        }
        s
    }
}

fn block_graph_uncached() -> Result<CompatGraph, CompatError> {
    let names: Vec<String> = BlockType::ALL.iter().map(|t| t.name().to_string()).collect();
    let mut g = CompatGraph::new("block-types", names);
    let mut problems = Vec::new();
    for (i, &a) in BlockType::ALL.iter().enumerate() {
        for &b in &BlockType::ALL[i + 1..] {
            let oracle = disjoint_realizable(a, b);
            if oracle {
                g.add_edge(a.name(), b.name(), Provenance::BoundaryOracle);
            }
            if a.is_universal() || b.is_universal() {
                if !oracle {
                    problems.push(format!("{a}-{b} stated universal, oracle finds no placement"));
                }
                g.add_edge(a.name(), b.name(), Provenance::Universality);
            }
        }
    }
    let cases = derive_case_edges(2);
    let mut from_cases = BTreeSet::new();
    for (case, edges) in &cases {
        for &(a, b) in edges {
            from_cases.insert(if a <= b { (a, b) } else { (b, a) });
            g.add_edge(a.name(), b.name(), Provenance::Reconstruction(*case));
        }
    }
    let shipped: BTreeSet<_> = BLOCK_EDGES.iter().map(|&(a, b)| if a <= b { (a, b) } else { (b, a) }).collect();
    if from_cases != shipped {
        problems.push(format!("reconstruction cases give {from_cases:?}, shipped constant is {shipped:?}"));
    }
    for (i, &a) in BlockType::ALL.iter().enumerate() {
        for &b in &BlockType::ALL[i + 1..] {
            if a.is_universal() || b.is_universal() {
                continue;
            }
            let oracle = disjoint_realizable(a, b);
            if oracle != shipped.contains(&(a, b)) {
                problems.push(format!("{a}-{b}: oracle {oracle}, reconstruction {}", !oracle));
            }
        }
    }
    if !problems.is_empty() {
        return Err(CompatError::Conflict(problems.join("; ")));
    }
    for (case, edges) in cases {
        for (a, b) in edges {
            let mut vs: Vec<String> = BlockType::UNIVERSAL.iter().map(|t| t.name().to_string()).collect();
            vs.push(a.name().into());
            vs.push(b.name().into());
            g.realizable_cliques.push(Clique { vertices: vs, source: Provenance::Reconstruction(case) });
        }
    }
    Ok(g)
}

/// The nine-vertex block-type graph, cross-checked between the oracle,
/// the reconstruction cases and [`BLOCK_EDGES`].
pub fn block_graph() -> Result<&'static CompatGraph, CompatError> {
    static G: OnceLock<Result<CompatGraph, CompatError>> = OnceLock::new();
    G.get_or_init(block_graph_uncached).as_ref().map_err(Clone::clone)
}

pub const SUBCLASSES: [&str; 11] = ["F0", "Fp", "Fm", "Cp", "Cm", "Tm", "Tp", "FmP", "FpM", "CmP", "CpM"];

/// Disk-class supports of the four unbanded gluing cases.
pub const CASE_SUPPORTS: [(u8, [&str; 5]); 4] = [
    (1, ["Fp", "Fm", "Cp", "Cm", "F0"]),
    (2, ["Fp", "Fm", "Cp", "Cm", "Tm"]),
    (3, ["Fp", "Fm", "Cm", "CmP", "FmP"]),
    (4, ["Fp", "Fm", "Cm", "Tm", "FmP"]),
];

fn mirror_twist(v: &str) -> &str {
    match v {
        "Tm" => "Tp",
        "Tp" => "Tm",
        x => x,
    }
}

fn swap_up_down(v: &str) -> &str {
    match v {
        "FmP" => "FpM",
        "FpM" => "FmP",
        "CmP" => "CpM",
        "CpM" => "CmP",
        x => x,
    }
}

fn subclass_graph_uncached() -> CompatGraph {
    let mut g = CompatGraph::new("subclasses", SUBCLASSES.iter().map(|s| s.to_string()).collect());
    for u in ["Fp", "Fm"] {
        for v in SUBCLASSES {
            g.add_edge(u, v, Provenance::Universality);
        }
    }
    let images: [fn(&str) -> &str; 4] =
        [|v| v, mirror_twist, swap_up_down, |v| swap_up_down(mirror_twist(v))];
    for (case, support) in CASE_SUPPORTS {
        let mut seen = BTreeSet::new();
        for (k, img) in images.iter().enumerate() {
            let vs: Vec<String> = support.iter().map(|v| img(v).to_string()).collect();
            let mut sorted = vs.clone();
            sorted.sort();
            if !seen.insert(sorted) {
                continue;
            }
            let p = if k == 0 { Provenance::CaseSupport(case) } else { Provenance::Symmetry };
            for (i, a) in vs.iter().enumerate() {
                for b in &vs[i + 1..] {
                    g.add_edge(a, b, p);
                }
            }
            g.realizable_cliques.push(Clique { vertices: vs, source: p });
        }
    }
    g
}

pub fn subclass_graph() -> &'static CompatGraph {
    static G: OnceLock<CompatGraph> = OnceLock::new();
    G.get_or_init(subclass_graph_uncached)
}

/// For each non-edge among the non-universal block types: the first pair of
/// distinct vectors with equal parameters once that edge is added, if any.
pub type Refutation = ((BlockType, BlockType), Option<(crate::disk::BlockVector, crate::disk::BlockVector)>);

pub fn injectivity_refutations(max_sum: u32) -> Vec<Refutation> {
    let rest: Vec<BlockType> = BlockType::ALL.into_iter().filter(|t| !t.is_universal()).collect();
    let mut out = Vec::new();
    for (i, &a) in rest.iter().enumerate() {
        for &b in &rest[i + 1..] {
            if BLOCK_EDGES.iter().any(|&e| e == (a, b) || e == (b, a)) {
                continue;
            }
            let mut edges = BLOCK_EDGES.to_vec();
            edges.push((a, b));
            out.push(((a, b), crate::disk::collision_under(&edges, max_sum)));
        }
    }
    out
}
