use std::collections::BTreeSet;

use proptest::prelude::*;

use knotsum::models::{
    admissible_sets, cooccurrence_sets, max_crossings, merge_generalized, mutation_closure, mutation_table,
    per_crossing_bound, ModelError, ModelName, ModelSet, MutationTarget, ALLOWANCE_MODELS,
};

fn catalog_model() -> impl Strategy<Value = ModelName> {
    (0usize..22).prop_map(|i| ModelName::CATALOG[i])
}

#[test]
fn mutation_targets_are_catalog_models() {
    for (m, targets) in mutation_table() {
        assert!(ModelName::CATALOG.contains(&m));
        for t in targets {
            if let MutationTarget::Model(x) = t {
                assert!(ModelName::CATALOG.contains(&x), "{m:?} -> {x:?}");
            }
        }
    }
}

#[test]
fn closures_are_finite_and_within_budget() {
    for tpl in cooccurrence_sets() {
        let closure = mutation_closure(&tpl.models);
        assert!(closure.len() < 200);
        for v in closure {
            let b = per_crossing_bound(&ModelSet::new(0, v.clone())).unwrap();
            assert!(b.total <= b.cap && b.cap <= 16, "{v:?}");
        }
    }
}

#[test]
fn budgets_match_arc_counts() {
    // 1, 2, 3 sheets plus the knot arc: 2, 3, 4 chords
    assert_eq!(max_crossings(ModelName::X1), 1);
    assert_eq!(max_crossings(ModelName::X2), 3);
    assert_eq!(max_crossings(ModelName::X3), 5);
    assert_eq!(max_crossings(ModelName::X4), 9);
    assert_eq!(max_crossings(ModelName::Z1), 0);
}

proptest! {
    #[test]
    fn allowance_only_for_named_pairs(ms in prop::collection::vec(catalog_model(), 1..4)) {
        let set = ModelSet::new(0, ms.clone());
        let heavy: Vec<ModelName> = ms.iter().copied().filter(|m| !m.is_z_like()).collect();
        match per_crossing_bound(&set) {
            Ok(b) => {
                let named = heavy.len() == 2 && heavy.iter().all(|m| ALLOWANCE_MODELS.contains(m));
                prop_assert_eq!(b.allowance, u32::from(named));
                prop_assert_eq!(b.total, b.per_model.iter().map(|(_, c)| c).sum::<u32>() + b.allowance);
                prop_assert!(admissible_sets().contains(&set.table_form()) || set.table_form().is_empty());
            }
            Err(ModelError::NonMatching(_)) => prop_assert!(!admissible_sets().contains(&set.table_form())),
            Err(ModelError::UnsupportedPair(_)) => prop_assert!(heavy.len() >= 2),
            Err(e) => prop_assert!(false, "unexpected {}", e),
        }
    }

    #[test]
    fn merging_a_path_never_makes_a_torus(n in 1usize..8) {
        let pieces = vec![ModelName::Z2; n];
        let contacts: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        let merged = merge_generalized(&pieces, &contacts).unwrap();
        prop_assert_eq!(merged.len(), 1);
        prop_assert_eq!(&merged[0].pieces, &(0..n).collect::<Vec<_>>());
        if n >= 3 {
            let mut cyc = contacts.clone();
            cyc.push((n - 1, 0));
            prop_assert!(matches!(merge_generalized(&pieces, &cyc), Err(ModelError::SolidTorus(_))));
        }
    }
}

#[test]
fn templates_cover_every_case() {
    let cases: BTreeSet<u8> = cooccurrence_sets().iter().map(|t| t.case).collect();
    assert_eq!(cases, (1..=8).collect());
}
