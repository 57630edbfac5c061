//! Disjointness graphs with edge provenance.
//!
//! cargo run -p knotsum --example compatibility [-- --dot]

use knotsum::compat::{block_graph, block_boundary_pattern, subclass_graph};
use knotsum::disk::BlockType;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let blocks = block_graph()?;
    let subs = subclass_graph();
    if std::env::args().any(|a| a == "--dot") {
        print!("{}{}", blocks.to_dot(), subs.to_dot());
        return Ok(());
    }
    let p = block_boundary_pattern(BlockType::Tau2);
    println!("t2 boundary crosses {:?}", p.crossings);
    print!("{}", blocks.report());
    print!("{}", subs.report());
    println!("{{Fp, Fm, Cm, Tm, FmP}} is a clique: {}", subs.is_clique(&["Fp", "Fm", "Cm", "Tm", "FmP"]));
    Ok(())
}
