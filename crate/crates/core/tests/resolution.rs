use proptest::prelude::*;
use snc_core::resolution::{
    build_chain, chain_members, exceptional_count, h2_closed_form, h2_mayer_vietoris, local_model_trace,
    resolve_local, Assumptions, BettiInputs, LocalModel, Variant,
};
use snc_core::Error;

proptest! {
    #[test]
    fn closed_form_matches_mayer_vietoris(m in 1u32..=12, z1 in 1u32..=5, s in 1u32..=5, c in 1u32..=5, z2 in 1u32..=5) {
        let b = BettiInputs { z1, s, c, z2 };
        match build_chain(m, b, Assumptions::both()) {
            Ok(chain) => {
                prop_assert!(z2 >= s);
                prop_assert_eq!(chain.h2_mayer_vietoris, chain.h2_closed_form);
                let sum: i64 = chain.members.iter().map(|e| e.h2 as i64).sum();
                prop_assert_eq!(sum - (m * s) as i64, chain.h2_total);
                prop_assert_eq!(chain.members.len(), m as usize + 1);
                for (i, &(a, bb)) in chain.intersections.iter().enumerate() {
                    prop_assert_eq!((a, bb), (i, i + 1));
                }
            }
            Err(e) => {
                prop_assert!(z2 < s);
                prop_assert!(matches!(e, Error::AssumptionViolated(_)));
            }
        }
    }

    #[test]
    fn trace_steps_down_by_two(m in 1u32..=60, twisted in any::<bool>()) {
        let v = if twisted { Variant::Twisted } else { Variant::Plain };
        let t = local_model_trace(m, v).unwrap();
        prop_assert!(t.iter().all(|l| l.variant == v));
        prop_assert!(t.windows(2).all(|w| w[0].multiplicity == w[1].multiplicity + 2));
        prop_assert!(matches!(t.last().unwrap().multiplicity, 1 | 2));
    }
}

#[test]
fn exceptional_divisor_count() {
    for m in 1..=50 {
        for v in [Variant::Plain, Variant::Twisted] {
            assert_eq!(exceptional_count(&resolve_local(LocalModel::new(m, v).unwrap())), m - 1);
        }
    }
}

#[test]
fn without_surjectivity_the_kernel_is_larger() {
    // Z2 too small to surject: the rank computation exceeds the formula
    let b = BettiInputs { z1: 1, s: 3, c: 1, z2: 1 };
    assert!(h2_mayer_vietoris(4, b) > h2_closed_form(4, b));
    assert_eq!(chain_members(4, b).len(), 5);
}
