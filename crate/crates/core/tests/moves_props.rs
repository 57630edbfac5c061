use proptest::prelude::*;

use knotsum::diagram::parse_pd_code;
use knotsum::moves::{
    decreasing_moves, distance, normalize, transition, Direction, FirstSuccessor, MinMeasure, MoveKind, SuccessorPolicy,
    TauSign, TauState, TauType,
};

fn tau() -> impl Strategy<Value = TauType> {
    (0usize..8).prop_map(|i| TauType::ALL[i])
}

fn state(max_points: usize) -> impl Strategy<Value = TauState> {
    prop::collection::vec((0usize..3, 0usize..4, tau()), 0..=max_points).prop_map(|pts| {
        let mut st = TauState::new(3);
        for (v, r, t) in pts {
            st.push(v, r, t);
        }
        st
    })
}

fn check_run(st: &TauState, dir: Direction, policy: &dyn SuccessorPolicy) -> Result<(), TestCaseError> {
    let (end, trace) = normalize(st, dir, policy);
    let mut m = st.measure(dir);
    for step in &trace {
        prop_assert!(step.measure < m, "measure did not drop at {}", step);
        m = step.measure;
    }
    prop_assert!(trace.len() as u32 <= st.measure(dir));
    prop_assert_eq!(end.points().count(), st.points().count());
    let sink_sign = if dir == Direction::Up { TauSign::Plus } else { TauSign::Minus };
    for (_, _, t) in end.points() {
        prop_assert!(decreasing_moves(t, dir).is_empty());
        prop_assert!(t.sign == sink_sign && t.base <= 2, "{} left over", t);
    }
    Ok(())
}

proptest! {
    #[test]
    fn normalization_terminates(st in state(6), up in any::<bool>()) {
        let dir = if up { Direction::Up } else { Direction::Down };
        check_run(&st, dir, &MinMeasure)?;
        check_run(&st, dir, &FirstSuccessor)?;
    }

    #[test]
    fn normalization_on_a_diagram(pts in prop::collection::vec((0usize..3, 0usize..4, tau()), 0..=6)) {
        let d = parse_pd_code("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        let mut st = TauState::for_diagram(&d);
        for (v, r, t) in pts {
            st.push(v, r, t);
        }
        check_run(&st, Direction::Up, &MinMeasure)?;
    }

    #[test]
    fn state_text_round_trip(st in state(6)) {
        let back = TauState::parse(&st.to_string()).unwrap();
        prop_assert_eq!(back.points().collect::<Vec<_>>(), st.points().collect::<Vec<_>>());
    }
}

#[test]
fn exhaustive_small_states() {
    let slots: Vec<(usize, usize, TauType)> =
        (0..3).flat_map(|v| (0..4).flat_map(move |r| TauType::ALL.map(|t| (v, r, t)))).collect();
    let mut n = 0;
    for i in 0..slots.len() {
        for j in i..slots.len() {
            let mut st = TauState::new(3);
            for &(v, r, t) in [slots[i], slots[j]].iter() {
                st.push(v, r, t);
            }
            for dir in [Direction::Up, Direction::Down] {
                check_run(&st, dir, &MinMeasure).unwrap();
                check_run(&st, dir, &FirstSuccessor).unwrap();
            }
            n += 1;
        }
    }
    assert_eq!(n, 96 * 97 / 2);
}

#[test]
fn duality_for_every_pair() {
    for t in TauType::ALL {
        for k in MoveKind::ALL {
            let down = transition(t, k, Direction::Down).ok();
            let up = transition(t.flip(), k, Direction::Up)
                .ok()
                .map(|s| s.into_iter().map(TauType::flip).collect());
            assert_eq!(down, up, "({t}, {k})");
            assert_eq!(distance(t, Direction::Down), distance(t.flip(), Direction::Up));
        }
    }
}
