use std::sync::OnceLock;

use proptest::prelude::*;

use knotsum::diagram::{connected_sum, parse_pd_code, Diagram};
use knotsum::fixtures::DiagramLibrary;

fn lib() -> &'static (DiagramLibrary, Vec<String>) {
    static L: OnceLock<(DiagramLibrary, Vec<String>)> = OnceLock::new();
    L.get_or_init(|| {
        let lib = DiagramLibrary::bundled().unwrap();
        let names = lib.names().map(String::from).collect();
        (lib, names)
    })
}

fn prime(i: usize) -> &'static Diagram {
    let (lib, names) = lib();
    lib.get(&names[i % names.len()]).unwrap()
}

fn shuffled<T>(mut v: Vec<T>, keys: &[u32]) -> Vec<T> {
    let mut idx: Vec<(u32, usize)> = keys.iter().copied().zip(0..v.len()).collect();
    idx.sort();
    let mut out = Vec::with_capacity(v.len());
    let mut taken: Vec<Option<T>> = v.drain(..).map(Some).collect();
    for (_, i) in idx {
        out.push(taken[i].take().unwrap());
    }
    out
}

proptest! {
    #[test]
    fn euler_characteristic(a in 0usize..84, b in 0usize..84, c in 0usize..84) {
        let d = connected_sum(&connected_sum(prime(a), prime(b)), prime(c));
        let (v, e, f) = (d.crossing_count(), d.edge_count(), d.faces().len());
        prop_assert_eq!(e, 2 * v);
        prop_assert_eq!(f, v + 2);
        prop_assert_eq!(v as i64 - e as i64 + f as i64, 2);
    }

    #[test]
    fn emit_parse_round_trip(a in 0usize..84, b in 0usize..84) {
        let d = connected_sum(prime(a), prime(b));
        prop_assert_eq!(parse_pd_code(&d.emit_pd_code()).unwrap(), d);
    }

    #[test]
    fn relabeling_is_invisible(a in 0usize..84, keys in prop::collection::vec(any::<u32>(), 40), order in prop::collection::vec(any::<u32>(), 20)) {
        let d = prime(a);
        let n = d.edge_count();
        let perm = shuffled((0..n as i64).collect(), &keys[..n]);
        let tuples: Vec<[i64; 4]> = d.tuples().into_iter().map(|t| t.map(|l| perm[l as usize] + 100)).collect();
        let relabeled = Diagram::from_tuples(&tuples).unwrap();
        prop_assert_eq!(&relabeled, d);
        let reordered = Diagram::from_tuples(&shuffled(tuples, &order[..d.crossing_count()])).unwrap();
        prop_assert_eq!(reordered.fingerprint(), d.fingerprint());
    }

    #[test]
    fn sum_is_associative_on_counts(a in 0usize..84, b in 0usize..84, c in 0usize..84) {
        let (x, y, z) = (prime(a), prime(b), prime(c));
        let left = connected_sum(&connected_sum(x, y), z);
        let right = connected_sum(x, &connected_sum(y, z));
        prop_assert_eq!(left.crossing_count(), right.crossing_count());
        prop_assert_eq!(left.crossing_count(), x.crossing_count() + y.crossing_count() + z.crossing_count());
        prop_assert_eq!(left.faces().len(), right.faces().len());
    }

    #[test]
    fn sums_of_primes_stay_reduced(a in 0usize..84, b in 0usize..84) {
        let d = connected_sum(prime(a), prime(b));
        prop_assert!(d.validate_minimal_adjacency().is_empty());
    }
}

#[test]
fn trefoil_sum_is_reduced() {
    let t = parse_pd_code("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
    let d = connected_sum(&t, &t);
    assert_eq!(d.crossing_count(), 6);
    assert!(d.validate_minimal_adjacency().is_empty());
}

#[test]
fn unknot_is_identity() {
    let t = prime(0);
    assert_eq!(&connected_sum(&Diagram::unknot(), t), t);
    assert_eq!(&connected_sum(t, &Diagram::unknot()), t);
}
