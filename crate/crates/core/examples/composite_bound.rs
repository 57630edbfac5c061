//! Check c > S/16 for connected sums of tabulated primes, and certify a
//! budget assignment on a sum diagram.
//!
//! cargo run -p knotsum --example composite_bound -- 3_1 4_1 5_2

use std::collections::BTreeMap;

use knotsum::bound::{budget_certificate, check_bound, sum_diagram, KnotTable};
use knotsum::fixtures::DiagramLibrary;
use knotsum::models::ModelSet;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = KnotTable::bundled()?;
    let lib = DiagramLibrary::bundled()?;
    let mut comps: Vec<String> = std::env::args().skip(1).collect();
    if comps.is_empty() {
        comps = vec!["3_1".into(), "3_1".into()];
    }
    let r = check_bound(&comps, &table, None, &lib)?;
    println!("{}: S={} c={} S/16={} verdict={}", comps.join("#"), r.crossing_sum, r.crossings, r.lower_bound, r.verdict);

    let d = sum_diagram(&comps, &lib, &table)?;
    let assignment: BTreeMap<usize, ModelSet> =
        (0..d.crossing_count()).map(|v| Ok((v, ModelSet::parse(v, "Z2, Z2")?))).collect::<Result<_, knotsum::models::ModelError>>()?;
    let cert = budget_certificate(&d, &assignment)?;
    let agg = &cert.certificate.as_ref().expect("certificate").aggregate;
    println!("budget certificate: {agg}; c >= S/16 with S={}: {}", cert.crossing_sum, cert.verdict);
    Ok(())
}
