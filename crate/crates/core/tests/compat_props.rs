use proptest::prelude::*;

use knotsum::compat::{block_graph, disjoint_realizable, injectivity_refutations, subclass_graph};
use knotsum::disk::{params, BlockType};

fn ty() -> impl Strategy<Value = BlockType> {
    (0usize..9).prop_map(|i| BlockType::ALL[i])
}

proptest! {
    #[test]
    fn oracle_is_symmetric(a in ty(), b in ty()) {
        prop_assert_eq!(disjoint_realizable(a, b), disjoint_realizable(b, a));
    }
}

#[test]
fn parallel_copies_exist() {
    for t in BlockType::ALL {
        assert!(disjoint_realizable(t, t), "{t}");
    }
}

#[test]
fn universal_vertices_meet_everything() {
    let g = block_graph().unwrap();
    for u in BlockType::UNIVERSAL {
        for t in BlockType::ALL {
            if t != u {
                assert!(g.has_edge(u.name(), t.name()), "{u} -- {t}");
            }
        }
    }
}

#[test]
fn recorded_subclass_cliques_are_cliques() {
    let g = subclass_graph();
    for c in &g.realizable_cliques {
        assert!(g.is_clique(&c.vertices));
    }
}

// Adding a missing edge should break injectivity of the parameters. The
// search only finds a collision for I -- t2 at this size; the remaining
// non-edges stay unrefuted by parameter collisions alone.
#[test]
fn injectivity_refutations_are_real_collisions() {
    let refs = injectivity_refutations(4);
    assert_eq!(refs.len(), 15 - 6);
    let found: Vec<_> = refs.iter().filter(|(_, c)| c.is_some()).map(|(e, _)| *e).collect();
    assert!(found.contains(&(BlockType::I, BlockType::Tau2)));
    for (_, c) in refs {
        if let Some((a, b)) = c {
            assert_ne!(a, b);
            assert_eq!(params(&a), params(&b));
        }
    }
}
