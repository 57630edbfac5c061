//! Derive the non-universal edges of the block-type graph three ways: from
//! the reconstruction cases, from the boundary-curve oracle, and by asking
//! which extra edge would break injectivity of the parameters.
//!
//! cargo run -p knotsum --example derive_block_graph

use knotsum::compat::{disjoint_realizable, injectivity_refutations};
use knotsum::disk::{derive_case_edges, BlockType, BLOCK_EDGES};

fn main() {
    println!("reconstruction cases:");
    for (case, edges) in derive_case_edges(2) {
        for (a, b) in edges {
            println!("  {case}: {a} -- {b}");
        }
    }

    println!("boundary-curve oracle:");
    let rest: Vec<BlockType> = BlockType::ALL.into_iter().filter(|t| !t.is_universal()).collect();
    for (i, &a) in rest.iter().enumerate() {
        for &b in &rest[i + 1..] {
            if disjoint_realizable(a, b) {
                println!("  {a} -- {b}");
            }
        }
    }

    println!("injectivity search (entry sum <= 6):");
    for ((a, b), hit) in injectivity_refutations(6) {
        match hit {
            Some((x, y)) => println!("  adding {a} -- {b}: {x} and {y} collide"),
            None => println!("  adding {a} -- {b}: no collision found"),
        }
    }
    println!("shipped edges: {:?}", BLOCK_EDGES.map(|(a, b)| format!("{a}--{b}")));
}
