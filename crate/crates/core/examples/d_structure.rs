//! Handle structure of a diagram: counts, walks around faces, skeleton pieces.
//!
//! cargo run -p knotsum --example d_structure [-- --dot]

use knotsum::diagram::parse_pd_code;
use knotsum::handle::{build_d_structure, HandleId};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_pd_code("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)")?;
    let s = build_d_structure(&d)?;
    if std::env::args().any(|a| a == "--dot") {
        print!("{}", s.to_dot());
        return Ok(());
    }
    println!("{:?}", s.counts());
    for f in 0..s.faces().len() {
        let walk: Vec<String> = s.mainbody_walk(f)?.iter().map(HandleId::to_string).collect();
        println!("H2({f}) runs along {}", walk.join(" "));
    }
    println!("H0(0) carries {:?}", s.skeleton(HandleId::H0(0))?);
    println!("H1(0)/H0(1) contact: {}", s.contact_count(HandleId::H1(0), HandleId::H0(1))?);
    Ok(())
}
