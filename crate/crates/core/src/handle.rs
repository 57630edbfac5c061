//! Handle decomposition read off a diagram: two 3-handles, one 2-handle per
//! face, one 1-handle per edge, one 0-handle per crossing.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{Diagram, ValidationReport, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HandleId {
    H3Plus,
    H3Minus,
    H2(usize),
    H1(usize),
    H0(usize),
}

impl fmt::Display for HandleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HandleId::H3Plus => write!(f, "H3+"),
            HandleId::H3Minus => write!(f, "H3-"),
            HandleId::H2(i) => write!(f, "H2({i})"),
            HandleId::H1(i) => write!(f, "H1({i})"),
            HandleId::H0(i) => write!(f, "H0({i})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HandleError {
    #[error("diagram fails the contact condition: {}", list(.0))]
    Violations(ValidationReport),
    #[error("unknown handle {0}")]
    UnknownHandle(HandleId),
    #[error("unknown face {0}")]
    UnknownFace(usize),
    #[error("face {face} has degree {degree}; a monogon has no alternating walk")]
    Monogon { face: usize, degree: usize },
}

fn list(r: &ValidationReport) -> String {
    r.violations.iter().map(Violation::to_string).collect::<Vec<_>>().join("; ")
}

/// Skeleton pieces carried by a handle, stored as tags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Skeleton {
    /// Two K-arcs (under and over strand) and the four rectangles along the
    /// arms; over-strand arms are the upper ones.
    ZeroHandle { k_arcs: usize, rectangles: [Rectangle; 4] },
    OneHandle { k_arcs: usize },
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rectangle {
    pub slot: usize,
    pub edge: usize,
    pub upper: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HandleCounts {
    pub three: usize,
    pub two: usize,
    pub one: usize,
    pub zero: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DStructure {
    source: Diagram,
    faces: Vec<crate::diagram::Face>,
    contacts: BTreeMap<(HandleId, HandleId), u32>,
}

impl DStructure {
    pub fn build(d: &Diagram) -> Result<DStructure, HandleError> {
        let report = d.validate_minimal_adjacency();
        if !report.is_empty() {
            return Err(HandleError::Violations(report));
        }
        let faces = d.faces();
        let mut contacts = BTreeMap::new();
        let mut touch = |a: HandleId, b: HandleId| {
            let key = if a <= b { (a, b) } else { (b, a) };
            contacts.insert(key, 1u32);
        };
        let lower: Vec<HandleId> = (0..faces.len())
            .map(HandleId::H2)
            .chain((0..d.edge_count()).map(HandleId::H1))
            .chain((0..d.crossing_count()).map(HandleId::H0))
            .collect();
        for &h in &lower {
            touch(HandleId::H3Plus, h);
            touch(HandleId::H3Minus, h);
        }
        for (i, f) in faces.iter().enumerate() {
            for (&e, &(v, _)) in f.edges.iter().zip(&f.corners) {
                touch(HandleId::H2(i), HandleId::H1(e));
                touch(HandleId::H2(i), HandleId::H0(v));
            }
        }
        for e in 0..d.edge_count() {
            touch(HandleId::H1(e), HandleId::H0(d.head(e).0));
            touch(HandleId::H1(e), HandleId::H0(d.tail(e).0));
        }
        Ok(DStructure { source: d.clone(), faces, contacts })
    }

    pub fn source(&self) -> &Diagram {
        &self.source
    }

    pub fn faces(&self) -> &[crate::diagram::Face] {
        &self.faces
    }

    pub fn counts(&self) -> HandleCounts {
        HandleCounts {
            three: 2,
            two: self.faces.len(),
            one: self.source.edge_count(),
            zero: self.source.crossing_count(),
        }
    }

    pub fn handles(&self) -> Vec<HandleId> {
        let mut v = vec![HandleId::H3Plus, HandleId::H3Minus];
        v.extend((0..self.faces.len()).map(HandleId::H2));
        v.extend((0..self.source.edge_count()).map(HandleId::H1));
        v.extend((0..self.source.crossing_count()).map(HandleId::H0));
        v
    }

    pub fn contains(&self, h: HandleId) -> bool {
        match h {
            HandleId::H3Plus | HandleId::H3Minus => true,
            HandleId::H2(i) => i < self.faces.len(),
            HandleId::H1(i) => i < self.source.edge_count(),
            HandleId::H0(i) => i < self.source.crossing_count(),
        }
    }

    pub fn contact_count(&self, a: HandleId, b: HandleId) -> Result<u32, HandleError> {
        for h in [a, b] {
            if !self.contains(h) {
                return Err(HandleError::UnknownHandle(h));
            }
        }
        let key = if a <= b { (a, b) } else { (b, a) };
        Ok(self.contacts.get(&key).copied().unwrap_or(0))
    }

    /// All contacts as ordered pairs `(a, b)` with `a < b`.
    pub fn contacts(&self) -> impl Iterator<Item = (HandleId, HandleId)> + '_ {
        self.contacts.keys().copied()
    }

    /// The annulus where 2-handle `f` meets the 0- and 1-handles.
    pub fn mainbody_walk(&self, f: usize) -> Result<Vec<HandleId>, HandleError> {
        let face = self.faces.get(f).ok_or(HandleError::UnknownFace(f))?;
        if face.degree() < 2 {
            return Err(HandleError::Monogon { face: f, degree: face.degree() });
        }
        Ok(face
            .edges
            .iter()
            .zip(&face.corners)
            .flat_map(|(&e, &(v, _))| [HandleId::H1(e), HandleId::H0(v)])
            .collect())
    }

    pub fn skeleton(&self, h: HandleId) -> Result<Skeleton, HandleError> {
        if !self.contains(h) {
            return Err(HandleError::UnknownHandle(h));
        }
        Ok(match h {
            HandleId::H0(v) => {
                let labels = self.source.crossing(v);
                let rectangles = [0, 1, 2, 3].map(|s| Rectangle { slot: s, edge: labels[s], upper: s % 2 == 1 });
                Skeleton::ZeroHandle { k_arcs: 2, rectangles }
            }
            HandleId::H1(_) => Skeleton::OneHandle { k_arcs: 1 },
            _ => Skeleton::None,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph dstructure {\n");
        for h in self.handles() {
            let shape = match h {
                HandleId::H3Plus | HandleId::H3Minus => "doublecircle",
                HandleId::H2(_) => "box",
                HandleId::H1(_) => "ellipse",
                HandleId::H0(_) => "diamond",
            };
            s.push_str(&format!("  \"{h}\" [shape={shape}];\n"));
        }
        for (a, b) in self.contacts() {
            s.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
        }
        s.push_str("}\n");
        s
    }
}

pub fn build_d_structure(d: &Diagram) -> Result<DStructure, HandleError> {
    DStructure::build(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd_code;

    #[test]
    fn trefoil_handles() {
        let d = parse_pd_code("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        let s = build_d_structure(&d).unwrap();
        assert_eq!(s.counts(), HandleCounts { three: 2, two: 5, one: 6, zero: 3 });
        assert_eq!(s.contact_count(HandleId::H1(0), HandleId::H1(1)), Ok(0));
        let (v, _) = d.head(0);
        assert_eq!(s.contact_count(HandleId::H0(v), HandleId::H1(0)), Ok(1));
        assert!(s.contact_count(HandleId::H0(9), HandleId::H1(0)).is_err());
        let walks: usize = (0..5).map(|f| s.mainbody_walk(f).unwrap().len()).sum();
        // one 1-handle and one 0-handle per corner
        assert_eq!(walks, 2 * 4 * 3);
    }

    #[test]
    fn kinked_is_rejected() {
        let d = parse_pd_code("X(1,5,2,4) X(3,1,4,8) X(5,3,6,2) X(6,7,7,8)").unwrap();
        let err = build_d_structure(&d).unwrap_err();
        assert!(err.to_string().contains("meets crossing region"));
    }
}
