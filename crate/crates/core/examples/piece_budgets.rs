//! Piece models, their crossing budgets, and per-crossing totals over the
//! co-occurrence rows.
//!
//! cargo run -p knotsum --example piece_budgets

use std::collections::BTreeSet;

use knotsum::models::{
    aggregate_bound, budget_source, cooccurrence_sets, max_crossings, model_catalog, mutation_closure,
    per_crossing_bound, ModelSet,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in model_catalog() {
        println!("{:<6} sheets={} arcs={} budget={} ({})", m.name.name(), m.sheets, m.arcs, max_crossings(m.name), budget_source(m.name));
    }

    let mut seen = BTreeSet::new();
    for tpl in cooccurrence_sets() {
        for v in mutation_closure(&tpl.models) {
            if seen.insert(v.clone()) {
                let b = per_crossing_bound(&ModelSet::new(0, v.clone()))?;
                let names: Vec<&str> = v.iter().map(|m| m.name()).collect();
                println!("case {} {{{}}}: {} / {}", tpl.case, names.join(", "), b.total, b.cap);
            }
        }
    }

    let totals = [11, 16, 6, 3];
    println!("aggregate over {totals:?}: {}", aggregate_bound(&totals, totals.len())?);
    Ok(())
}
