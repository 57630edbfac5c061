use std::sync::OnceLock;

use proptest::prelude::*;

use knotsum::bound::{check_bound, load_knot_table, verdict, BoundError, KnotTable};
use knotsum::fixtures::DiagramLibrary;

fn fixtures() -> &'static (KnotTable, DiagramLibrary, Vec<String>) {
    static F: OnceLock<(KnotTable, DiagramLibrary, Vec<String>)> = OnceLock::new();
    F.get_or_init(|| {
        let lib = DiagramLibrary::bundled().unwrap();
        let names = lib.names().map(String::from).collect();
        (KnotTable::bundled().unwrap(), lib, names)
    })
}

proptest! {
    // Integer form of c > S/16: 16c > S.
    #[test]
    fn verdict_matches_integer_form(s in 0u64..10_000, c in 0u64..10_000) {
        prop_assert_eq!(verdict(s, c), 16 * c > s && c <= s);
    }

    #[test]
    fn sum_diagram_adds_crossings(idx in prop::collection::vec(0usize..84, 1..5)) {
        let (table, lib, names) = fixtures();
        let comps: Vec<String> = idx.iter().map(|&i| names[i].clone()).collect();
        let r = check_bound(&comps, table, None, lib).unwrap();
        let s: u64 = comps.iter().map(|n| u64::from(table.get(n).unwrap())).sum();
        prop_assert_eq!(r.crossing_sum, s);
        prop_assert_eq!(r.crossings, s);
        prop_assert_eq!(r.faces, Some(s as usize + 2));
        prop_assert!(r.verdict);
    }

    #[test]
    fn table_round_trip(rows in prop::collection::btree_map("[a-z][a-z0-9_]{0,6}", 3u32..20, 0..20)) {
        let text: String = rows.iter().map(|(k, v)| format!("{k},{v}\n")).collect();
        let t = load_knot_table(&format!("name,crossing_number\n{text}"), "gen").unwrap();
        prop_assert_eq!(t.len(), rows.len());
        for (k, v) in &rows {
            prop_assert_eq!(t.get(k), Some(*v));
        }
    }

    #[test]
    fn negative_values_rejected(v in i64::MIN / 2..0) {
        let r = load_knot_table(&format!("k,{v}"), "gen");
        prop_assert!(matches!(r, Err(BoundError::Range { .. })), "expected a range error");
    }
}

#[test]
fn boundary_pinned() {
    assert!(!verdict(16, 1));
    assert!(verdict(16, 2));
}

#[test]
fn bundled_table_matches_diagrams() {
    let (table, lib, _) = fixtures();
    assert_eq!(table.len(), lib.len());
    for name in lib.names() {
        assert_eq!(table.get(name), Some(lib.get(name).unwrap().crossing_count() as u32), "{name}");
    }
}
