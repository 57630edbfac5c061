//! Block vectors: parameters, derived functions, reconstruction, pasting,
//! and the complexity of a normal surface.
//!
//! cargo run -p knotsum --example disk_vectors

use knotsum::diagram::parse_pd_code;
use knotsum::disk::{
    complexity, derived, non_admissible_collision, params, paste_from_inputs, reconstruct_traced, Bands, BlockType,
    BlockVector, NormalSurfaceVector, PasteInputs,
};
use knotsum::handle::build_d_structure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("type  params           derived");
    for t in BlockType::ALL {
        let p = params(&BlockVector::unit(t));
        println!("{:<5} {:<16} {:?}", t.name(), p.to_string(), derived(&p)?.to_array());
    }

    let xi: BlockVector = "I+:1 II-:2".parse()?;
    let p = params(&xi);
    let (back, case) = reconstruct_traced(&p)?;
    println!("\n{xi} -> {p} -> {back} ({case})");

    if let Some((a, b)) = non_admissible_collision(8) {
        println!("outside the admissible supports, {a} and {b} share parameters {}", params(&a));
    }

    let inputs = PasteInputs { x_plus: 5, x: 2, x_minus: 5, y_plus: 2, y_minus: 2, t: 0 };
    let plain = paste_from_inputs(inputs, Bands::default())?;
    let banded = paste_from_inputs(inputs, Bands { plus: 3, minus: 1 })?;
    println!("\npaste {inputs:?}\n  {plain} (axis {})\n  {banded} (axis {})", plain.axis_total(), banded.axis_total());

    let s = build_d_structure(&parse_pd_code("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")?)?;
    let sphere = NormalSurfaceVector::vertical(&s, 2);
    println!("\n{}complexity {:?}", sphere.to_text(), complexity(&sphere, &s)?);
    Ok(())
}
