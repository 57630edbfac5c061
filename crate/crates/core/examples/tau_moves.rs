//! Move τ-points toward the sinks and inspect the trace.
//!
//! cargo run -p knotsum --example tau_moves

use knotsum::diagram::parse_pd_code;
use knotsum::moves::{
    distance, is_standard_form, maximal_paths, normalize, sinks, Direction, FirstSuccessor, MinMeasure, TauState,
    TauType,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("up sinks: {:?}", sinks(Direction::Up).iter().map(|t| t.to_string()).collect::<Vec<_>>());
    for t in TauType::ALL {
        let paths: Vec<String> = maximal_paths(t, Direction::Up)
            .iter()
            .map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" > "))
            .collect();
        println!("{t}: distance {} paths {}", distance(t, Direction::Up), paths.join(" | "));
    }

    let d = parse_pd_code("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")?;
    let mut st = TauState::for_diagram(&d);
    for (v, r, t) in [(0, 0, "3+"), (0, 0, "4+"), (1, 2, "1-"), (1, 2, "2-")] {
        st.push(v, r, t.parse()?);
    }
    for (name, policy) in [("min", &MinMeasure as &dyn knotsum::moves::SuccessorPolicy), ("first", &FirstSuccessor)] {
        let (end, trace) = normalize(&st, Direction::Up, policy);
        println!("\npolicy {name}, start {st}");
        for step in trace {
            println!("  {step}");
        }
        println!("  final {end}, standard form: {}", is_standard_form(&end));
    }
    Ok(())
}
