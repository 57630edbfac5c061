//! Normal surfaces as disk counts per handle, and their complexity.
//!
//! Text format, one record per line, keyed by handle id:
//!
//! ```text
//! # normal-surface v1
//! H2(0) 2
//! H1(3) flat=2 curved=0
//! H0(1) blocks I+:2 | I+:2 | I+:2 | I+:2
//! H0(2) config case=1 Fp:1
//! ```
//!
//! Block `i` of a 0-handle sits at corner `i` (between slots `i` and `i + 1`).

use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::Serialize;

use super::{params, BlockVector, DiskError, ZeroHandleConfig};
use crate::handle::DStructure;

pub const TEXT_HEADER: &str = "# normal-surface v1";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EdgeDisks {
    pub flat: u32,
    pub curved: u32,
}

impl EdgeDisks {
    /// Horizontal skeleton arcs: one per flat disk, two per curved disk.
    pub fn arcs(&self) -> u32 {
        self.flat + 2 * self.curved
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ZeroHandleContent {
    Blocks([BlockVector; 4]),
    Config(ZeroHandleConfig),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct NormalSurfaceVector {
    pub h2: Vec<u32>,
    pub h1: Vec<EdgeDisks>,
    pub h0: Vec<ZeroHandleContent>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ComplexityTriple {
    pub i2: u64,
    pub i1: u64,
    pub i0: u64,
}

impl NormalSurfaceVector {
    pub fn empty(s: &DStructure) -> NormalSurfaceVector {
        let d = s.source();
        NormalSurfaceVector {
            h2: vec![0; s.faces().len()],
            h1: vec![EdgeDisks::default(); d.edge_count()],
            h0: vec![ZeroHandleContent::Blocks([BlockVector::default(); 4]); d.crossing_count()],
        }
    }

    /// Every face carries `n` disks, every edge `n` flat disks and every
    /// block `n` copies of I+.
    pub fn vertical(s: &DStructure, n: u32) -> NormalSurfaceVector {
        let d = s.source();
        let block = BlockVector { x_plus: n, ..Default::default() };
        NormalSurfaceVector {
            h2: vec![n; s.faces().len()],
            h1: vec![EdgeDisks { flat: n, curved: 0 }; d.edge_count()],
            h0: vec![ZeroHandleContent::Blocks([block; 4]); d.crossing_count()],
        }
    }

    pub fn check_matching(&self, s: &DStructure) -> Result<(), DiskError> {
        let d = s.source();
        let shape = (s.faces().len(), d.edge_count(), d.crossing_count());
        if (self.h2.len(), self.h1.len(), self.h0.len()) != shape {
            return Err(DiskError::Matching(format!(
                "vector has {}/{}/{} entries for {}/{}/{} handles",
                self.h2.len(),
                self.h1.len(),
                self.h0.len(),
                shape.0,
                shape.1,
                shape.2
            )));
        }
        let corner_face = d.corner_faces();
        for (v, content) in self.h0.iter().enumerate() {
            let ZeroHandleContent::Blocks(blocks) = content else { continue };
            let ps = blocks.map(|b| params(&b));
            for i in 0..4 {
                if ps[i].iv_plus != ps[0].iv_plus || ps[i].iv_0 != ps[0].iv_0 || ps[i].iv_minus != ps[0].iv_minus {
                    return Err(DiskError::Matching(format!("H0({v}) blocks disagree on the axis")));
                }
                let f = corner_face[v][i];
                if ps[i].h2 != self.h2[f] {
                    return Err(DiskError::Matching(format!(
                        "H0({v}) block {i} meets H2({f}) in {} arcs, face has {} disks",
                        ps[i].h2, self.h2[f]
                    )));
                }
                for slot in [i, (i + 1) % 4] {
                    let h1 = if slot % 2 == 1 { ps[i].h1_plus } else { ps[i].h1_minus };
                    let e = d.label((v, slot));
                    if h1 != self.h1[e].arcs() {
                        return Err(DiskError::Matching(format!(
                            "H0({v}) block {i} meets H1({e}) in {h1} arcs, edge carries {}",
                            self.h1[e].arcs()
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from(TEXT_HEADER);
        s.push('\n');
        for (f, n) in self.h2.iter().enumerate() {
            let _ = writeln!(s, "H2({f}) {n}");
        }
        for (e, k) in self.h1.iter().enumerate() {
            let _ = writeln!(s, "H1({e}) flat={} curved={}", k.flat, k.curved);
        }
        for (v, c) in self.h0.iter().enumerate() {
            match c {
                ZeroHandleContent::Blocks(b) => {
                    let _ = writeln!(s, "H0({v}) blocks {} | {} | {} | {}", b[0], b[1], b[2], b[3]);
                }
                ZeroHandleContent::Config(c) => {
                    let _ = writeln!(s, "H0({v}) config {c}");
                }
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<NormalSurfaceVector, DiskError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        if lines.next() != Some(TEXT_HEADER) {
            return Err(DiskError::Parse(format!("missing header `{TEXT_HEADER}`")));
        }
        let mut out = NormalSurfaceVector::default();
        for line in lines {
            if line.starts_with('#') {
                continue;
            }
            let (id, rest) = line.split_once(' ').unwrap_or((line, ""));
            let (kind, idx) = parse_id(id)?;
            let slot = |len: usize| -> Result<(), DiskError> {
                if idx != len {
                    Err(DiskError::Parse(format!("`{id}` out of order")))
                } else {
                    Ok(())
                }
            };
            match kind {
                "H2" => {
                    slot(out.h2.len())?;
                    out.h2.push(rest.trim().parse().map_err(|_| DiskError::Parse(format!("bad count in `{line}`")))?);
                }
                "H1" => {
                    slot(out.h1.len())?;
                    let mut k = EdgeDisks::default();
                    for tok in rest.split_whitespace() {
                        let (key, val) =
                            tok.split_once('=').ok_or_else(|| DiskError::Parse(format!("bad field `{tok}`")))?;
                        let val: u32 = val.parse().map_err(|_| DiskError::Parse(format!("bad field `{tok}`")))?;
                        match key {
                            "flat" => k.flat = val,
                            "curved" => k.curved = val,
                            _ => return Err(DiskError::Parse(format!("bad field `{tok}`"))),
                        }
                    }
                    out.h1.push(k);
                }
                "H0" => {
                    slot(out.h0.len())?;
                    let rest = rest.trim();
                    if let Some(b) = rest.strip_prefix("blocks") {
                        let parts: Vec<BlockVector> =
                            b.split('|').map(|p| p.parse()).collect::<Result<_, _>>()?;
                        let arr: [BlockVector; 4] = parts
                            .try_into()
                            .map_err(|_| DiskError::Parse(format!("`{line}` needs four blocks")))?;
                        out.h0.push(ZeroHandleContent::Blocks(arr));
                    } else if let Some(c) = rest.strip_prefix("config") {
                        out.h0.push(ZeroHandleContent::Config(c.trim().parse()?));
                    } else {
                        return Err(DiskError::Parse(format!("bad 0-handle record `{line}`")));
                    }
                }
                _ => return Err(DiskError::Parse(format!("unexpected handle `{id}`"))),
            }
        }
        Ok(out)
    }
}

fn parse_id(id: &str) -> Result<(&str, usize), DiskError> {
    let bad = || DiskError::Parse(format!("bad handle id `{id}`"));
    let (kind, rest) = id.split_once('(').ok_or_else(bad)?;
    let idx = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
    Ok((kind, idx))
}

pub fn complexity(sv: &NormalSurfaceVector, s: &DStructure) -> Result<ComplexityTriple, DiskError> {
    sv.check_matching(s)?;
    let i2 = sv.h2.iter().map(|&n| u64::from(n)).sum();
    let i1 = sv.h1.iter().map(|k| u64::from(k.arcs())).sum();
    let i0 = sv
        .h0
        .iter()
        .map(|c| match c {
            ZeroHandleContent::Blocks(b) => u64::from(params(&b[0]).iv()),
            ZeroHandleContent::Config(c) => u64::from(c.axis_total()),
        })
        .sum();
    Ok(ComplexityTriple { i2, i1, i0 })
}

pub fn compare_complexity(a: &ComplexityTriple, b: &ComplexityTriple) -> Ordering {
    a.cmp(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd_code;
    use crate::disk::DiskClass;
    use crate::handle::build_d_structure;

    fn trefoil() -> DStructure {
        build_d_structure(&parse_pd_code("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap()).unwrap()
    }

    #[test]
    fn vertical_sphere() {
        let s = trefoil();
        let sv = NormalSurfaceVector::vertical(&s, 2);
        assert_eq!(complexity(&sv, &s).unwrap(), ComplexityTriple { i2: 10, i1: 12, i0: 6 });
        assert_eq!(complexity(&NormalSurfaceVector::empty(&s), &s).unwrap(), ComplexityTriple::default());
    }

    #[test]
    fn matching_failure() {
        let s = trefoil();
        let mut sv = NormalSurfaceVector::vertical(&s, 2);
        sv.h2[0] = 3;
        assert!(matches!(complexity(&sv, &s), Err(DiskError::Matching(_))));
    }

    #[test]
    fn single_flat_disk() {
        let s = trefoil();
        let mut sv = NormalSurfaceVector::empty(&s);
        sv.h0[0] = ZeroHandleContent::Config(ZeroHandleConfig::new(1, [(DiskClass::Fp, 1)]).unwrap());
        assert_eq!(complexity(&sv, &s).unwrap().i0, 1);
    }

    #[test]
    fn text_round_trip() {
        let s = trefoil();
        let mut sv = NormalSurfaceVector::vertical(&s, 2);
        sv.h0[1] = ZeroHandleContent::Config(ZeroHandleConfig::new(1, [(DiskClass::Fp, 2)]).unwrap());
        assert_eq!(NormalSurfaceVector::from_text(&sv.to_text()).unwrap(), sv);
    }

    #[test]
    fn lexicographic() {
        let t = |a, b, c| ComplexityTriple { i2: a, i1: b, i0: c };
        assert_eq!(compare_complexity(&t(1, 9, 9), &t(2, 0, 0)), Ordering::Less);
        assert_eq!(compare_complexity(&t(1, 2, 3), &t(1, 2, 3)), Ordering::Equal);
        assert_eq!(compare_complexity(&t(0, 5, 0), &t(0, 4, 99)), Ordering::Greater);
    }
}
