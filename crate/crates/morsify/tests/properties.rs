//! Randomized cross-checks between the independent computation routes.

use morsify::{
    adjacency_graph, compare_series, count_components, count_components_naive, egf_k,
    enumerate_components, neighbors, CellValue, ComponentType, Comparison, Count, Rat,
    Recurrence, Series,
};
use proptest::prelude::*;

fn small_nl() -> impl Strategy<Value = (u32, u32)> {
    (1u32..=5, 0u32..=4).prop_filter("atom budget", |&(n, l)| n - 1 + l <= 6)
}

fn rat(v: i64) -> Rat {
    Rat::from_integer(Count::from(v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn counting_backends_agree((n, l) in small_nl()) {
        let dp = count_components(n, l).unwrap();
        let naive = count_components_naive(n, l).unwrap();
        let listed = enumerate_components(n, l).unwrap();
        prop_assert_eq!(&dp, &naive);
        prop_assert_eq!(Count::from(listed.len()), dp);
    }

    #[test]
    fn table_cells_match_component_counts((n, l) in small_nl()) {
        let mut rec = Recurrence::new();
        match rec.cell(n as i64, l as i64).unwrap() {
            CellValue::Known(v) => prop_assert_eq!(v, count_components(n, l).unwrap()),
            CellValue::Unknown => prop_assert!(false, "positive cells are always determined"),
        }
    }

    #[test]
    fn wall_crossings_are_involutive((n, l) in small_nl(), pick in any::<prop::sample::Index>()) {
        let comps = enumerate_components(n, l).unwrap();
        let ct = &comps[pick.index(comps.len())];
        for (nb, wall) in neighbors(ct) {
            let back = neighbors(&nb);
            prop_assert!(
                back.iter().any(|(c, w)| c == ct && *w == wall),
                "wall {} from {} is not involutive",
                wall.tag(),
                ct.canonical_id()
            );
        }
    }

    #[test]
    fn relabelling_preserves_the_component_set(
        ((n, l), perm) in small_nl().prop_flat_map(|(n, l)| {
            let ids: Vec<u32> = (0..l).collect();
            (Just((n, l)), Just(ids).prop_shuffle())
        })
    ) {
        use std::collections::BTreeSet;
        let comps = enumerate_components(n, l).unwrap();
        let set: BTreeSet<_> = comps.iter().cloned().collect();
        let ncrit = (n - 1) as usize;
        for ct in &comps {
            // Label j of the image takes the data of label perm[j].
            let mut assignment = vec![0u8; l as usize];
            let mut ranks = ct.ranks().to_vec();
            for (j, &src) in perm.iter().enumerate() {
                assignment[j] = ct.assignment()[src as usize];
                ranks[ncrit + j] = ct.ranks()[ncrit + src as usize];
            }
            let image = ComponentType::new(n, l, assignment, ranks).unwrap();
            prop_assert!(set.contains(&image));
        }
    }

    #[test]
    fn wall_graphs_stay_consistent((n, l) in small_nl()) {
        let graph = adjacency_graph(n, l).unwrap();
        prop_assert_eq!(
            Count::from(graph.node_count()),
            count_components(n, l).unwrap()
        );
        prop_assert!(graph.is_connected());
    }

    #[test]
    fn division_inverts_multiplication_on_random_series(
        a in prop::collection::vec(-9i64..=9, 1..=8),
        b0 in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
        b_tail in prop::collection::vec(-9i64..=9, 0..=7),
    ) {
        let a = Series::from_coeffs(a.into_iter().map(rat).collect());
        let mut b_coeffs = vec![rat(b0)];
        b_coeffs.extend(b_tail.into_iter().map(rat));
        let b = Series::from_coeffs(b_coeffs);
        let order = a.order().min(b.order());
        let round_trip = a.mul(&b).div(&b).unwrap();
        prop_assert_eq!(round_trip, a.truncate(order));
    }

    #[test]
    fn updown_generating_function_satisfies_its_equation(order in 4usize..=24) {
        // 2 K' = 1 + K^2, the defining equation of tan + sec.
        let k = egf_k(order).unwrap();
        let lhs = k.derive().unwrap().scale(&rat(2));
        let rhs = Series::one(order - 1).add(&k.mul(&k).truncate(order - 1));
        prop_assert_eq!(
            compare_series(&lhs, &rhs, order - 1).unwrap(),
            Comparison::Equal
        );
    }

    #[test]
    fn memoization_never_changes_a_value(n in -6i64..=8, l in 0i64..=5) {
        let mut direct = Recurrence::new();
        let fresh = direct.cell(n, l).unwrap();
        let mut warmed = Recurrence::new();
        warmed.table(-6, 8, 6).unwrap();
        prop_assert_eq!(fresh, warmed.cell(n, l).unwrap());
    }
}
