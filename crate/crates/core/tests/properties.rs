use proptest::prelude::*;

use leafspan::builder::{apply_step, choose_bases, next_step, PartialTree, StepPlan};
use leafspan::io::{parse_edge_list, parse_graph6, render_edge_list, to_graph6};
use leafspan::iso::{find_isomorphism, is_isomorphic};
use leafspan::ledger::{alpha_prime, check_catalog, StepLabel};
use leafspan::oracle::{min_cds, tree_from_cds};
use leafspan::reduction::{find_reduction, is_reduced, ReductionEvent};
use leafspan::{build, exact_u, lift_tree, reduce_fully, verify_ledger, Fifteenths, Graph, SpanningTree, VertexClass};

/// Random tree on `n` vertices plus each other pair with a drawn density.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        let coins = proptest::collection::vec(0.0..1.0f64, n * (n - 1) / 2);
        (parents, coins, 0.0..0.7f64).prop_map(move |(parents, coins, density)| {
            let mut g = Graph::new(n);
            for (i, p) in parents.into_iter().enumerate() {
                g.add_edge(i + 1, p).unwrap();
            }
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for ((u, v), coin) in pairs.zip(coins) {
                if coin < density {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
    })
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|&(_, b)| b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), permutation(n))
    })
}

fn bfs_tree(g: &Graph) -> SpanningTree {
    let mut parent = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::from([0]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    SpanningTree::from_parents(&parent).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn cost_is_sum_of_class_costs(g in any_graph(12)) {
        let by_class: i64 = (0..g.n())
            .map(|v| match g.class_of(v) {
                VertexClass::T => 6,
                VertexClass::S => 3,
                VertexClass::Other => 0,
            })
            .sum();
        prop_assert_eq!(g.cost(), Fifteenths(by_class));
    }

    #[test]
    fn components_partition_the_graph(g in any_graph(12)) {
        let parts = g.components();
        let mut owner = vec![usize::MAX; g.n()];
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                prop_assert_eq!(owner[v], usize::MAX);
                owner[v] = i;
            }
            prop_assert!(g.induced(part).0.is_connected());
        }
        prop_assert!(owner.iter().all(|&o| o != usize::MAX));
        for (u, v) in g.edges() {
            prop_assert_eq!(owner[u], owner[v]);
        }
    }

    #[test]
    fn isomorphism_is_an_equivalence((g, p) in with_perm(9), q in permutation(9)) {
        let h = g.relabel(&p);
        prop_assert!(is_isomorphic(&g, &g));
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert!(is_isomorphic(&h, &g));
        let q: Vec<usize> = q.into_iter().filter(|&x| x < g.n()).collect();
        let k = h.relabel(&q);
        prop_assert!(is_isomorphic(&g, &k));
        let map = find_isomorphism(&g, &k).unwrap();
        for (u, v) in g.edges() {
            prop_assert!(k.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn relabeling_preserves_invariants((g, p) in with_perm(9)) {
        let h = g.relabel(&p);
        prop_assert_eq!(g.cost(), h.cost());
        prop_assert_eq!(exact_u(&g).unwrap(), exact_u(&h).unwrap());
        let mut a = g.degree_sequence();
        let mut b = h.degree_sequence();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn reduction_keeps_cost_and_connectivity(g in any_graph(14)) {
        let (reduced, trace) = reduce_fully(&g);
        prop_assert_eq!(reduced.cost(), g.cost());
        prop_assert_eq!(reduced.is_connected(), g.is_connected());
        prop_assert!(is_reduced(&reduced));
        prop_assert!(find_reduction(&reduced).is_none());
        prop_assert_eq!(trace.replay(&g).unwrap(), reduced);
    }

    #[test]
    fn contraction_of_eligible_pair_keeps_cost(g in connected_graph(14)) {
        if let Some(ReductionEvent::Contract { a1, a2, .. }) = find_reduction(&g) {
            let (h, _) = g.contract(a1, a2).unwrap();
            prop_assert_eq!(h.cost(), g.cost());
        }
    }

    #[test]
    fn lifting_never_loses_leaves(g in connected_graph(14)) {
        let (reduced, trace) = reduce_fully(&g);
        let mut trees = vec![bfs_tree(&reduced)];
        if reduced.n() >= 2 {
            trees.push(build(&reduced).unwrap().tree);
        }
        for t in trees {
            let lifted = lift_tree(&trace, &t).unwrap();
            prop_assert!(lifted.is_spanning_tree_of(&g));
            prop_assert!(lifted.leaf_count() >= t.leaf_count());
        }
    }

    #[test]
    fn build_is_sound_and_meets_the_bound(g in connected_graph(11)) {
        let r = build(&g).unwrap();
        prop_assert!(r.tree.is_spanning_tree_of(&g));
        prop_assert_eq!(r.leaves, r.tree.leaf_count());
        prop_assert!(r.bound_ok(), "alpha {} on {}", r.alpha, render_edge_list(&g));
        prop_assert!(r.defects.is_empty(), "{:?}", r.defects);
        prop_assert!(r.leaves <= exact_u(&g).unwrap());
        if let Some(kind) = r.exclusion {
            prop_assert!(r.alpha >= Fifteenths::EIGHT_FIFTHS, "{kind:?}");
        } else {
            prop_assert!(r.alpha >= Fifteenths::TWO);
        }
    }

    #[test]
    fn ledger_is_consistent(g in connected_graph(12)) {
        let r = build(&g).unwrap();
        prop_assert!(verify_ledger(&g, &r.ledger, &r.tree).is_ok());
        prop_assert!(check_catalog(&r.ledger).is_ok());
    }

    #[test]
    fn step_boundaries_hold_invariants(g in connected_graph(12)) {
        let (g, _) = reduce_fully(&g);
        prop_assume!(g.n() >= 3 && g.max_degree() >= 3);
        for (mut f, _) in choose_bases(&g) {
            let mut alpha = alpha_prime(&g, &f);
            loop {
                check_dead_leaves(&g, &f)?;
                let plan = next_step(&g, &f).unwrap();
                let StepPlan::Grow { label, .. } = &plan else { break };
                if !matches!(label, StepLabel::A1 | StepLabel::A2 | StepLabel::A3 | StepLabel::A4) {
                    check_level1_cap(&g, &f)?;
                }
                let (size, dead) = (f.size(), f.dead_count());
                let records = apply_step(&g, &mut f, &plan).unwrap();
                prop_assert!(f.size() > size || f.dead_count() > dead);
                let profit: Fifteenths = records.iter().map(|r| r.profit).sum();
                prop_assert_eq!(alpha_prime(&g, &f), alpha + profit);
                if let StepLabel::Mn(..) = label {
                    prop_assert!(profit >= Fifteenths::ZERO);
                }
                alpha += profit;
            }
        }
    }

    #[test]
    fn cds_duality(g in connected_graph(10)) {
        prop_assume!(g.n() >= 3);
        let u = exact_u(&g).unwrap();
        let cds = min_cds(&g).unwrap();
        prop_assert_eq!(u, g.n() - cds.len());
        let t = tree_from_cds(&g, &cds);
        prop_assert!(t.is_spanning_tree_of(&g));
        prop_assert_eq!(t.leaf_count(), u);
    }

    #[test]
    fn edge_list_round_trip(g in any_graph(14)) {
        prop_assert_eq!(parse_edge_list(&render_edge_list(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

fn check_dead_leaves(g: &Graph, f: &PartialTree) -> Result<(), TestCaseError> {
    for x in f.vertices().filter(|&x| f.is_leaf(x)) {
        let closed = g.neighbors(x).iter().all(|&w| f.contains(w));
        prop_assert_eq!(f.is_dead(x), closed, "leaf {}", x);
    }
    Ok(())
}

fn check_level1_cap(g: &Graph, f: &PartialTree) -> Result<(), TestCaseError> {
    for v in f.outside().filter(|&v| f.is_level1(g, v)) {
        prop_assert!(f.outside_degree(v) <= 2, "level-1 vertex {} sees {} outside", v, f.outside_degree(v));
    }
    for x in f.vertices().filter(|&x| f.is_leaf(x)) {
        prop_assert!(f.outside_degree(x) <= 1, "leaf {} sees {} outside", x, f.outside_degree(x));
    }
    Ok(())
}
