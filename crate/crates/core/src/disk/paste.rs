//! Gluing four blocks of a 0-handle into a configuration of normal disks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{derived, params, BlockType, BlockVector, DiskError};

/// Normal-disk subclasses inside a 0-handle. Twisted classes with band
/// counts `(r, s)` satisfy `|r - s| <= 1`; `(0, 0)` is stored as the plain class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DiskClass {
    F0,
    Fp,
    Fm,
    C0,
    Cp,
    Cm,
    Tm,
    Tp,
    TmRS(u32, u32),
    TpRS(u32, u32),
    FmP,
    FpM,
    CmP,
    CpM,
    C0P,
    C0M,
}

impl DiskClass {
    /// Twisted class with the given band counts, normalized.
    pub fn tm(r: u32, s: u32) -> DiskClass {
        if (r, s) == (0, 0) {
            DiskClass::Tm
        } else {
            DiskClass::TmRS(r, s)
        }
    }

    pub fn tp(r: u32, s: u32) -> DiskClass {
        if (r, s) == (0, 0) {
            DiskClass::Tp
        } else {
            DiskClass::TpRS(r, s)
        }
    }

    /// Swap the roles of the plus and minus bands.
    fn mirror_bands(self) -> DiskClass {
        match self {
            DiskClass::Fp => DiskClass::Fm,
            DiskClass::Fm => DiskClass::Fp,
            DiskClass::TmRS(r, s) => DiskClass::tm(s, r),
            DiskClass::TpRS(r, s) => DiskClass::tp(s, r),
            c => c,
        }
    }
}

/// Number of points a disk of class `c` meets the crossing axis in.
pub fn axis_weight(c: DiskClass) -> u32 {
    match c {
        DiskClass::F0 | DiskClass::Fp | DiskClass::Fm | DiskClass::FmP | DiskClass::FpM => 1,
        DiskClass::C0
        | DiskClass::Cp
        | DiskClass::Cm
        | DiskClass::CmP
        | DiskClass::CpM
        | DiskClass::C0P
        | DiskClass::C0M => 2,
        DiskClass::Tm | DiskClass::Tp => 3,
        DiskClass::TmRS(r, s) | DiskClass::TpRS(r, s) => 3 + r + s,
    }
}

impl fmt::Display for DiskClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiskClass::TmRS(r, s) => write!(f, "Tm({r},{s})"),
            DiskClass::TpRS(r, s) => write!(f, "Tp({r},{s})"),
            c => write!(f, "{c:?}"),
        }
    }
}

impl FromStr for DiskClass {
    type Err = DiskError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || DiskError::Parse(format!("unknown disk class `{s}`"));
        if let Some(rest) = s.strip_prefix("Tm(").or_else(|| s.strip_prefix("Tp(")) {
            let inner = rest.strip_suffix(')').ok_or_else(bad)?;
            let (r, t) = inner.split_once(',').ok_or_else(bad)?;
            let r: u32 = r.trim().parse().map_err(|_| bad())?;
            let t: u32 = t.trim().parse().map_err(|_| bad())?;
            if r.abs_diff(t) > 1 {
                return Err(DiskError::Parse(format!("band counts in `{s}` differ by more than one")));
            }
            return Ok(if s.starts_with("Tm") { DiskClass::tm(r, t) } else { DiskClass::tp(r, t) });
        }
        Ok(match s {
            "F0" => DiskClass::F0,
            "Fp" => DiskClass::Fp,
            "Fm" => DiskClass::Fm,
            "C0" => DiskClass::C0,
            "Cp" => DiskClass::Cp,
            "Cm" => DiskClass::Cm,
            "Tm" => DiskClass::Tm,
            "Tp" => DiskClass::Tp,
            "FmP" => DiskClass::FmP,
            "FpM" => DiskClass::FpM,
            "CmP" => DiskClass::CmP,
            "CpM" => DiskClass::CpM,
            "C0P" => DiskClass::C0P,
            "C0M" => DiskClass::C0M,
            _ => return Err(bad()),
        })
    }
}

/// Band counts joining disks inside the 0-handle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Bands {
    pub plus: u32,
    pub minus: u32,
}

impl Bands {
    pub fn is_zero(&self) -> bool {
        self.plus == 0 && self.minus == 0
    }
}

/// The six numbers the gluing formulas read off the blocks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PasteInputs {
    pub x_plus: u32,
    pub x: u32,
    pub x_minus: u32,
    pub y_plus: u32,
    pub y_minus: u32,
    pub t: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ZeroHandleConfig {
    pub case_tag: u8,
    counts: BTreeMap<DiskClass, u32>,
}

impl ZeroHandleConfig {
    pub fn new(case_tag: u8, counts: impl IntoIterator<Item = (DiskClass, u32)>) -> Result<Self, DiskError> {
        let mut m = BTreeMap::new();
        for (c, n) in counts {
            if let DiskClass::TmRS(r, s) | DiskClass::TpRS(r, s) = c {
                if r.abs_diff(s) > 1 {
                    return Err(DiskError::SideCondition(format!("{c} has |r - s| > 1")));
                }
            }
            if n > 0 {
                *m.entry(c).or_insert(0) += n;
            }
        }
        Ok(ZeroHandleConfig { case_tag, counts: m })
    }

    pub fn count(&self, c: DiskClass) -> u32 {
        self.counts.get(&c).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<DiskClass, u32> {
        &self.counts
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total intersection with the crossing axis.
    pub fn axis_total(&self) -> u32 {
        self.counts.iter().map(|(&c, &n)| n * axis_weight(c)).sum()
    }
}

impl fmt::Display for ZeroHandleConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case={}", self.case_tag)?;
        for (c, n) in &self.counts {
            write!(f, " {c}:{n}")?;
        }
        Ok(())
    }
}

impl FromStr for ZeroHandleConfig {
    type Err = DiskError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut toks = s.split_whitespace();
        let tag = toks
            .next()
            .and_then(|t| t.strip_prefix("case="))
            .and_then(|t| t.parse::<u8>().ok())
            .ok_or_else(|| DiskError::Parse(format!("config `{s}` lacks case=N")))?;
        let mut counts = Vec::new();
        for t in toks {
            let (c, n) = t.rsplit_once(':').ok_or_else(|| DiskError::Parse(format!("bad term `{t}`")))?;
            let n: u32 = n.parse().map_err(|_| DiskError::Parse(format!("bad count in `{t}`")))?;
            counts.push((c.parse()?, n));
        }
        ZeroHandleConfig::new(tag, counts)
    }
}

/// Glue four blocks `xi[0..4]` into a configuration, applying `bands`.
///
/// The blocks must share their axis counts, satisfy
/// `a+(1) = a+(2)`, `a+(3) = a+(4)`, `a-(1) = a-(3)`, `a-(2) = a-(4)`,
/// `a-(2) = a+(3) = 0`, and the fourth block must consist of flat types only.
pub fn paste_blocks(xi: [&BlockVector; 4], bands: Bands) -> Result<ZeroHandleConfig, DiskError> {
    let ps: Vec<_> = xi.iter().map(|b| params(b)).collect();
    for (i, p) in ps.iter().enumerate().skip(1) {
        if (p.iv_plus, p.iv_0, p.iv_minus) != (ps[0].iv_plus, ps[0].iv_0, ps[0].iv_minus) {
            return Err(DiskError::SideCondition(format!("block {} has different axis counts from block 1", i + 1)));
        }
    }
    let ds = ps.iter().map(derived).collect::<Result<Vec<_>, _>>()?;
    let checks = [
        (ds[0].a_plus == ds[1].a_plus, "a+(1) = a+(2)"),
        (ds[2].a_plus == ds[3].a_plus, "a+(3) = a+(4)"),
        (ds[0].a_minus == ds[2].a_minus, "a-(1) = a-(3)"),
        (ds[1].a_minus == ds[3].a_minus, "a-(2) = a-(4)"),
        (ds[1].a_minus == 0, "a-(2) = 0"),
        (ds[2].a_plus == 0, "a+(3) = 0"),
    ];
    for (ok, what) in checks {
        if !ok {
            return Err(DiskError::SideCondition(what.to_string()));
        }
    }
    let flat = [BlockType::IPlus, BlockType::I, BlockType::IMinus];
    if xi[3].support().iter().any(|t| !flat.contains(t)) {
        return Err(DiskError::SideCondition("block 4 must use only I+, I, I-".into()));
    }
    let inputs = PasteInputs {
        x_plus: xi[3].x_plus,
        x: xi[3].x,
        x_minus: xi[3].x_minus,
        y_plus: ds[0].a_plus as u32,
        y_minus: ds[0].a_minus as u32,
        t: ps[0].kappa,
    };
    paste_from_inputs(inputs, bands)
}

type Counts = BTreeMap<DiskClass, i64>;

fn get(m: &Counts, c: DiskClass) -> i64 {
    m.get(&c).copied().unwrap_or(0)
}

fn add(m: &mut Counts, c: DiskClass, n: i64) {
    *m.entry(c).or_insert(0) += n;
}

/// Base case 1..4 selected by the inputs.
pub fn base_case(inp: &PasteInputs) -> u8 {
    if inp.t == 0 {
        if inp.y_plus + inp.y_minus <= inp.x {
            1
        } else {
            2
        }
    } else if inp.y_plus == 0 {
        3
    } else {
        4
    }
}

pub fn paste_from_inputs(inp: PasteInputs, bands: Bands) -> Result<ZeroHandleConfig, DiskError> {
    let [xp, x, xm, yp, ym, t] =
        [inp.x_plus, inp.x, inp.x_minus, inp.y_plus, inp.y_minus, inp.t].map(i64::from);
    let base = base_case(&inp);
    let mut m: Counts = BTreeMap::new();
    match base {
        1 => {
            add(&mut m, DiskClass::Fp, xp - yp);
            add(&mut m, DiskClass::Fm, xm - ym);
            add(&mut m, DiskClass::Cp, yp);
            add(&mut m, DiskClass::Cm, ym);
            add(&mut m, DiskClass::F0, x - yp - ym);
        }
        2 => {
            add(&mut m, DiskClass::Fp, xp - yp);
            add(&mut m, DiskClass::Fm, xm - ym);
            add(&mut m, DiskClass::Tm, yp + ym - x);
            add(&mut m, DiskClass::Cp, x - ym);
            add(&mut m, DiskClass::Cm, x - yp);
        }
        3 => {
            add(&mut m, DiskClass::Cm, x);
            add(&mut m, DiskClass::Fm, xm - x - t);
            add(&mut m, DiskClass::Fp, xp - ym + x);
            add(&mut m, DiskClass::CmP, ym - x);
            add(&mut m, DiskClass::FmP, t - ym + x);
        }
        _ => {
            add(&mut m, DiskClass::Fp, xp - yp);
            add(&mut m, DiskClass::Fm, xm - x - t);
            add(&mut m, DiskClass::FmP, t);
            add(&mut m, DiskClass::Tm, yp);
            add(&mut m, DiskClass::Cm, x - yp);
        }
    }
    check_nonnegative(&m)?;
    let tag = if bands.is_zero() {
        base
    } else {
        match base {
            1 => case5(&mut m, bands)?,
            2 => case6(&mut m, bands)?,
            3 => case7(&mut m, bands)?,
            _ => case8(&mut m, bands)?,
        }
        base + 4
    };
    check_nonnegative(&m)?;
    ZeroHandleConfig::new(tag, m.into_iter().map(|(c, n)| (c, n as u32)))
}

fn check_nonnegative(m: &Counts) -> Result<(), DiskError> {
    match m.iter().find(|(_, &n)| n < 0) {
        Some((c, &n)) => Err(DiskError::NegativeCount { class: c.to_string(), count: n }),
        None => Ok(()),
    }
}

fn plus_only(bands: Bands, case: u8) -> Result<i64, DiskError> {
    if bands.minus != 0 {
        return Err(DiskError::UnsupportedBands(format!("case {case} takes plus bands only")));
    }
    Ok(i64::from(bands.plus))
}

/// Bands between flat disks of opposite sides.
fn case5(m: &mut Counts, bands: Bands) -> Result<(), DiskError> {
    let b = plus_only(bands, 5)?;
    if get(m, DiskClass::F0) != 0 {
        return Err(DiskError::UnsupportedBands("case 5 requires no F0 disks".into()));
    }
    add(m, DiskClass::C0, b);
    add(m, DiskClass::Fp, -b);
    add(m, DiskClass::Fm, -b);
    Ok(())
}

/// Bands attached to twisted disks.
fn case6(m: &mut Counts, bands: Bands) -> Result<(), DiskError> {
    let t0 = get(m, DiskClass::Tm);
    if t0 == 0 {
        return Err(DiskError::UnsupportedBands("case 6 requires twisted disks".into()));
    }
    let (cp, cm) = (get(m, DiskClass::Cp), get(m, DiskClass::Cm));
    let (bp, bm) = (i64::from(bands.plus), i64::from(bands.minus));
    match (cp > 0, cm > 0) {
        (true, true) => Err(DiskError::UnsupportedBands("case 6 with both Cp and Cm present".into())),
        (true, false) => {
            if bm != 0 {
                return Err(DiskError::UnsupportedBands("case 6 with Cp takes plus bands only".into()));
            }
            one_sided_twist(m, t0, bp, false);
            Ok(())
        }
        (false, true) => {
            if bp != 0 {
                return Err(DiskError::UnsupportedBands("case 6 with Cm takes minus bands only".into()));
            }
            one_sided_twist(m, t0, bm, true);
            Ok(())
        }
        (false, false) => {
            let (tp, tm) = (get(m, DiskClass::Fp), get(m, DiskClass::Fm));
            let (q_plus, q_minus) = (bp / t0, bm / t0);
            let mirrored = q_plus < q_minus;
            let out = if mirrored {
                distribute(tm, tp, t0, bm, bp)
            } else {
                distribute(tp, tm, t0, bp, bm)
            };
            m.remove(&DiskClass::Tm);
            m.remove(&DiskClass::Fp);
            m.remove(&DiskClass::Fm);
            for (c, n) in out {
                add(m, if mirrored { c.mirror_bands() } else { c }, n);
            }
            Ok(())
        }
    }
}

fn one_sided_twist(m: &mut Counts, t0: i64, b: i64, minus: bool) {
    let (own, other, tw) = if minus {
        (DiskClass::Fm, DiskClass::Fp, DiskClass::tm(0, 1))
    } else {
        (DiskClass::Fp, DiskClass::Fm, DiskClass::tm(1, 0))
    };
    if t0 >= b {
        add(m, tw, b);
        add(m, DiskClass::Tm, -b);
        add(m, own, -b);
    } else {
        add(m, tw, t0);
        add(m, DiskClass::Tm, -t0);
        add(m, DiskClass::C0, b - t0);
        add(m, own, -b);
        add(m, other, -(b - t0));
    }
}

/// Spread `bp` plus and `bm` minus bands over `t0` twisted disks as evenly
/// as the `|r - s| <= 1` constraint allows. Assumes `bp / t0 >= bm / t0`.
fn distribute(tp: i64, tm: i64, t0: i64, bp: i64, bm: i64) -> Vec<(DiskClass, i64)> {
    let (qp, rp) = (bp / t0, bp % t0);
    let (qm, rm) = (bm / t0, bm % t0);
    let q = qm;
    let tw = |r: i64, s: i64| DiskClass::tm(r as u32, s as u32);
    let mut out = Vec::new();
    if qp == qm {
        if rp + rm <= t0 {
            out.push((tw(q + 1, q), rp));
            out.push((tw(q, q + 1), rm));
            out.push((tw(q, q), t0 - rp - rm));
        } else {
            out.push((tw(q + 1, q), t0 - rm));
            out.push((tw(q, q + 1), t0 - rp));
            out.push((tw(q + 1, q + 1), rp + rm - t0));
        }
        out.push((DiskClass::Fp, tp - bp));
        out.push((DiskClass::Fm, tm - bm));
    } else {
        let rp2 = (qp - q - 1) * t0 + rp;
        if rm >= rp2 {
            out.push((tw(q + 2, q + 1), rp2));
            out.push((tw(q + 1, q + 1), rm - rp2));
            out.push((tw(q + 1, q), t0 - rm));
        } else {
            out.push((tw(q + 1, q), t0 - rm));
            out.push((tw(q + 2, q + 1), rm));
            out.push((DiskClass::C0, rp2 - rm));
        }
        out.push((DiskClass::Fp, tp - bp));
        out.push((DiskClass::Fm, tm - bm.max(bp - t0)));
    }
    out
}

/// Bands in the presence of disks of classes CmP or FmP.
fn case7(m: &mut Counts, bands: Bands) -> Result<(), DiskError> {
    let b = plus_only(bands, 7)?;
    let (cmp, t) = (get(m, DiskClass::CmP), get(m, DiskClass::FmP));
    if cmp > 0 && t > 0 {
        return Err(DiskError::UnsupportedBands("case 7 with both CmP and FmP present".into()));
    }
    if cmp > 0 {
        add(m, DiskClass::C0, b);
        add(m, DiskClass::Fp, -b);
        add(m, DiskClass::Fm, -b);
        return Ok(());
    }
    if get(m, DiskClass::Cm) != 0 {
        return Err(DiskError::UnsupportedBands("case 7 with FmP requires no Cm disks".into()));
    }
    if b <= t {
        add(m, DiskClass::C0P, b);
        add(m, DiskClass::FmP, -b);
        add(m, DiskClass::Fp, -b);
    } else {
        add(m, DiskClass::C0P, t);
        add(m, DiskClass::C0, b - t);
        add(m, DiskClass::FmP, -t);
        add(m, DiskClass::Fp, -b);
        add(m, DiskClass::Fm, -(b - t));
    }
    Ok(())
}

/// Bands in the presence of twisted disks and FmP disks.
fn case8(m: &mut Counts, bands: Bands) -> Result<(), DiskError> {
    let b = plus_only(bands, 8)?;
    let (t, t0) = (get(m, DiskClass::FmP), get(m, DiskClass::Tm));
    if t == 0 || t0 == 0 || get(m, DiskClass::Cm) != 0 {
        return Err(DiskError::UnsupportedBands("case 8 requires FmP and Tm disks and no Cm disks".into()));
    }
    let tw = DiskClass::tm(1, 0);
    add(m, DiskClass::Fp, -b);
    if b < t0 {
        add(m, tw, b);
        add(m, DiskClass::Tm, -b);
    } else if b < t0 + t {
        add(m, tw, t0);
        add(m, DiskClass::Tm, -t0);
        add(m, DiskClass::C0P, b - t0);
        add(m, DiskClass::FmP, -(b - t0));
    } else {
        add(m, tw, t0);
        add(m, DiskClass::Tm, -t0);
        add(m, DiskClass::C0P, t);
        add(m, DiskClass::FmP, -t);
        add(m, DiskClass::C0, b - t0 - t);
        add(m, DiskClass::Fm, -(b - t0 - t));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inputs(xp: u32, x: u32, xm: u32, yp: u32, ym: u32, t: u32) -> PasteInputs {
        PasteInputs { x_plus: xp, x, x_minus: xm, y_plus: yp, y_minus: ym, t }
    }

    #[test]
    fn case1_example() {
        let c = paste_from_inputs(inputs(2, 3, 2, 1, 1, 0), Bands::default()).unwrap();
        assert_eq!(c.to_string(), "case=1 F0:1 Fp:1 Fm:1 Cp:1 Cm:1");
    }

    #[test]
    fn case2_example() {
        let c = paste_from_inputs(inputs(1, 1, 1, 1, 1, 0), Bands::default()).unwrap();
        assert_eq!(c.to_string(), "case=2 Tm:1");
    }

    #[test]
    fn empty_inputs() {
        let c = paste_from_inputs(PasteInputs::default(), Bands::default()).unwrap();
        assert!(c.is_empty());
    }

    #[test]
    fn twisted_band_spread() {
        // Tm:2 with three plus bands and one minus band
        let c = paste_from_inputs(inputs(5, 2, 5, 2, 2, 0), Bands { plus: 3, minus: 1 }).unwrap();
        assert_eq!(c.case_tag, 6);
        for (cl, _) in c.counts() {
            if let DiskClass::TmRS(r, s) = cl {
                assert!(r.abs_diff(*s) <= 1);
            }
        }
        assert_eq!(c.axis_total(), 12);
        assert_eq!(c.to_string(), "case=6 Fm:2 Tm(1,0):1 Tm(2,1):1");
    }

    #[test]
    fn config_text_round_trip() {
        let c = ZeroHandleConfig::new(6, [(DiskClass::tm(2, 1), 3), (DiskClass::Fp, 1)]).unwrap();
        assert_eq!(c.to_string().parse::<ZeroHandleConfig>().unwrap(), c);
        assert!(ZeroHandleConfig::new(6, [(DiskClass::TmRS(3, 1), 1)]).is_err());
    }
}
