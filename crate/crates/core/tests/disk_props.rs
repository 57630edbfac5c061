use proptest::prelude::*;

use knotsum::disk::{
    derived, is_admissible, params, paste_from_inputs, reconstruct, Bands, BlockType, BlockVector, NormalSurfaceVector,
    ParamVector, PasteInputs, BLOCK_EDGES,
};

fn block(max: u32) -> impl Strategy<Value = BlockVector> {
    prop::array::uniform9(0..=max).prop_map(BlockVector::from_array)
}

/// Random vector supported on the universal types plus one edge of the graph.
fn admissible(max: u32) -> impl Strategy<Value = BlockVector> {
    (block(max), 0..BLOCK_EDGES.len()).prop_map(|(xi, e)| {
        let (a, b) = BLOCK_EDGES[e];
        let mut arr = xi.to_array();
        for t in BlockType::ALL {
            if !t.is_universal() && t != a && t != b {
                arr[t.index()] = 0;
            }
        }
        BlockVector::from_array(arr)
    })
}

proptest! {
    #[test]
    fn params_are_linear(a in block(8), b in block(8)) {
        let (pa, pb, pab) = (params(&a).to_array(), params(&b).to_array(), params(&(a + b)).to_array());
        for k in 0..7 {
            prop_assert_eq!(pab[k], pa[k] + pb[k]);
        }
    }

    #[test]
    fn generator_identities(xi in block(1000)) {
        let p = params(&xi);
        let d = derived(&p).unwrap();
        let [_, x, _, _, y, _, z, t1, t2] = xi.to_array().map(i64::from);
        prop_assert_eq!(i64::from(p.kappa), t1 + t2);
        prop_assert_eq!(d.eta, -x + z + t2);
        prop_assert_eq!(d.sigma, -x + y + t2);
    }

    #[test]
    fn eta_identity_on_all_params(raw in prop::array::uniform7(0u32..50)) {
        let p = ParamVector::from_array(raw);
        if let Ok(d) = derived(&p) {
            prop_assert_eq!(d.eta, d.a_plus + d.a_minus - i64::from(p.iv_0));
        }
    }

    #[test]
    fn admissible_round_trip(xi in admissible(30)) {
        prop_assert!(is_admissible(&xi));
        prop_assert_eq!(reconstruct(&params(&xi)).unwrap(), xi);
    }

    #[test]
    fn param_text_round_trip(raw in prop::array::uniform7(0u32..1000), xi in block(50)) {
        let p = ParamVector::from_array(raw);
        prop_assert_eq!(p.to_string().parse::<ParamVector>().unwrap(), p);
        prop_assert_eq!(xi.to_string().parse::<BlockVector>().unwrap(), xi);
    }

    #[test]
    fn reconstruct_agrees_with_params(raw in prop::array::uniform7(0u32..12)) {
        let p = ParamVector::from_array(raw);
        if let Ok(xi) = reconstruct(&p) {
            prop_assert_eq!(params(&xi), p);
            prop_assert!(is_admissible(&xi));
        }
    }

    #[test]
    fn paste_conserves_axis_points(v in prop::array::uniform6(0u32..8), plus in 0u32..4, minus in 0u32..4) {
        let [x_plus, x, x_minus, y_plus, y_minus, t] = v;
        let inp = PasteInputs { x_plus, x, x_minus, y_plus, y_minus, t };
        for bands in [Bands::default(), Bands { plus, minus }] {
            if let Ok(cfg) = paste_from_inputs(inp, bands) {
                prop_assert_eq!(cfg.axis_total(), x_plus + x + x_minus);
                prop_assert_eq!(cfg.to_string().parse::<knotsum::disk::ZeroHandleConfig>().unwrap(), cfg);
            }
        }
    }
}

#[test]
fn paste_grid_succeeds_in_every_case() {
    let mut tags = std::collections::BTreeSet::new();
    for v in 0..4u32.pow(6) {
        let d: Vec<u32> = (0..6).map(|i| (v / 4u32.pow(i)) % 4).collect();
        let inp = PasteInputs { x_plus: d[0] + 2, x: d[1], x_minus: d[2] + 2, y_plus: d[3], y_minus: d[4], t: d[5] };
        for bands in [Bands::default(), Bands { plus: 1, minus: 0 }, Bands { plus: 1, minus: 1 }] {
            if let Ok(cfg) = paste_from_inputs(inp, bands) {
                assert_eq!(cfg.axis_total(), inp.x_plus + inp.x + inp.x_minus);
                tags.insert(cfg.case_tag);
            }
        }
    }
    assert_eq!(tags, (1..=8).collect());
}

#[test]
fn surface_text_header_required() {
    assert!(NormalSurfaceVector::from_text("H2(0) 1").is_err());
}
