use proptest::prelude::*;

use troot_core::levi::{troot_system, ParabolicDesignation};
use troot_core::series::{closed_form_series, grading};
use troot_core::{Rat, RootSystem, SimpleType};

fn type_and_mask() -> impl Strategy<Value = (SimpleType, u32)> {
    proptest::sample::select(SimpleType::all_up_to(7)).prop_flat_map(|t| (Just(t), 0u32..(1 << t.rank) - 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn designation_invariants((t, mask) in type_and_mask()) {
        let rs = RootSystem::of_type(t).unwrap();
        let kept: Vec<usize> = (0..t.rank).filter(|i| mask & (1 << i) != 0).collect();
        let des = ParabolicDesignation::from_kept(t.rank, &kept).unwrap();
        prop_assert_eq!(des.t_rank() + des.s_rank(), t.rank);
        let tr = troot_system(&rs, &des).unwrap();

        // spaces partition Δ \ Δ(m), symmetric under negation
        let total: usize = tr.spaces().iter().map(|s| s.dim()).sum();
        prop_assert_eq!(total + tr.levi_roots().len(), rs.len());
        for s in tr.spaces() {
            let neg = tr.space(&s.key().neg()).unwrap();
            prop_assert_eq!(neg.dim(), s.dim());
        }

        prop_assert_eq!(tr.simples().len(), des.t_rank());
        for s in tr.positive_spaces() {
            let v = tr.vec_of_key(s.key());
            prop_assert!(rs.form(tr.delta_n(), &v) > Rat::ZERO);
        }

        // nilpotency length is the sum of deleted marks
        let k: i64 = des.deleted().iter().map(|&j| rs.marks()[j]).sum();
        let g = grading(&tr);
        prop_assert_eq!(g.k_cent, k);
        let series = closed_form_series(&tr, &g).unwrap();
        prop_assert_eq!(series.length as i64, k);
    }
}
