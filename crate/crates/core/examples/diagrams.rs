//! Parse diagrams, list faces, validate, and form connected sums.
//!
//! cargo run -p knotsum --example diagrams

use knotsum::diagram::{connected_sum, parse_gauss_code, parse_pd_code};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trefoil = parse_pd_code("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")?;
    println!("trefoil: {trefoil}");
    for (i, f) in trefoil.faces().iter().enumerate() {
        println!("  face {i}: degree {} edges {:?}", f.degree(), f.edges);
    }

    let from_gauss = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")?;
    println!("gauss code gives {} crossings, faces {:?}", from_gauss.crossing_count(), from_gauss.fingerprint().face_degrees);

    let figure_eight = parse_pd_code("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)")?;
    let sum = connected_sum(&trefoil, &figure_eight);
    println!("3_1 # 4_1: {} crossings, {} faces", sum.crossing_count(), sum.faces().len());
    println!("  {sum}");

    let kinked = parse_pd_code("X(1,5,2,4) X(3,1,4,8) X(5,3,6,2) X(6,7,7,8)")?;
    for v in kinked.validate_minimal_adjacency().violations {
        println!("kinked trefoil: {v}");
    }

    match parse_pd_code("X(1,1,2,2) X(3,3,4,4)") {
        Ok(_) => println!("two-component code unexpectedly parsed"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
