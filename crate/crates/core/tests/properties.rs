mod common;

use common::*;
use itertools::Itertools;
use kempe_recon::graph::{apply_exchange, degeneracy, is_proper, kempe_component, max_pred, read_dimacs, write_dimacs};
use kempe_recon::instance::{read_normalized, write_normalized, Event};
use kempe_recon::oracle::{
    build_reconfig_graph, enumerate_colorings, exact_subdeg, lambda_bruteforce, pairwise_kempe_edges, Caps, Relation,
};
use kempe_recon::reconfig::{kempe_reconfigure, read_plan, replay, verify_plan, write_plan};
use kempe_recon::reduction::{build_reduced, fixed_set, project_coloring};
use kempe_recon::subdeg::{check_sprime, subdeg_ub, vertex_elimination};
use kempe_recon::{Color, Coloring, Graph, KempeExchange, UtpInstance, VertexOrdering, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |mask| (g.clone(), VertexSet::from_mask(mask)))
    })
}

/// Graph, palette and per-vertex lists (non-empty subsets of the palette).
fn list_instance(max_n: usize, max_p: Color) -> impl Strategy<Value = (Graph, Color, Vec<Vec<Color>>)> {
    (graph(max_n), 1..=max_p).prop_flat_map(|(g, p)| {
        let n = g.vertex_count();
        proptest::collection::vec(1u32..(1 << p), n).prop_map(move |masks| {
            let lists = masks
                .iter()
                .map(|m| (1..=p).filter(|c| m & (1 << (c - 1)) != 0).collect())
                .collect();
            (g.clone(), p, lists)
        })
    })
}

fn colorings(g: &Graph, k: Color) -> Vec<Coloring> {
    enumerate_colorings(g, k, None, &Caps::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn exchange_is_an_involution_and_stays_proper(g in graph(6), k in 1u32..=4, pick in any::<prop::sample::Index>(), a in 1u32..=4, b in 1u32..=4, u in any::<prop::sample::Index>()) {
        let all = colorings(&g, k);
        prop_assume!(!all.is_empty() && g.vertex_count() > 0 && a != b && a <= k && b <= k);
        let c = &all[pick.index(all.len())];
        let u = u.index(g.vertex_count());
        prop_assume!(c.color(u) == a || c.color(u) == b);
        let x = KempeExchange::new(a, b, u).unwrap();
        let once = apply_exchange(&g, c, &x).unwrap();
        prop_assert!(is_proper(&g, &once));
        prop_assert_eq!(apply_exchange(&g, &once, &x).unwrap(), c.clone());
        let naive = naive_swap(&adjacency(&g), c.as_slice(), a, b, u);
        prop_assert_eq!(once.as_slice(), naive.as_slice());
        let comp = kempe_component(&g, c, a, b, u).unwrap();
        let inside = naive_component(&adjacency(&g), c.as_slice(), a, b, u);
        prop_assert_eq!(comp, (0..g.vertex_count()).filter(|&v| inside[v]).collect::<Vec<_>>());
    }

    #[test]
    fn degeneracy_matches_max_min_degree(g in graph(8)) {
        let (value, witness) = degeneracy(&g);
        prop_assert_eq!(value, naive_degeneracy(&g));
        prop_assert!(witness.is_total());
        prop_assert!(max_pred(&g, &witness) <= value);
    }

    #[test]
    fn elimination_reaches_lambda((g, f) in graph_and_set(7)) {
        let tail = vertex_elimination(&g, &f);
        let full: Vec<_> = f.members().iter().copied().chain(tail.iter()).collect();
        let got = naive_max_free_pred(&g, f.mask(), &full);
        prop_assert_eq!(got, naive_lambda(&g, f.mask()));
        prop_assert_eq!(got, lambda_bruteforce(&g, &f, &Caps::default()).unwrap());
        prop_assert_eq!(subdeg_ub(&g, &f).lambda, got);
    }

    #[test]
    fn bound_orderings_are_admissible_and_chain((g, f) in graph_and_set(7)) {
        let r = subdeg_ub(&g, &f);
        prop_assert!(r.ordering.is_total());
        prop_assert!(check_sprime(&g, &f, &r.ordering));
        prop_assert!(naive_admissible(&g, f.mask(), r.ordering.as_slice()));
        prop_assert_eq!(r.value, naive_max_free_pred(&g, f.mask(), r.ordering.as_slice()));
        let exact = naive_exact_subdeg(&g, f.mask());
        prop_assert_eq!(exact_subdeg(&g, &f, &Caps::default()).unwrap(), exact);
        prop_assert!(exact <= r.value);
        prop_assert!(r.value <= r.lambda);
        if r.lambda > 0 || f.len() < g.vertex_count() {
            prop_assert!(r.prefix >= 1);
        }
    }

    #[test]
    fn sprime_agrees_with_path_definition((g, f, order) in graph_and_set(6).prop_flat_map(|(g, f)| {
        let n = g.vertex_count();
        (Just(g), Just(f), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })) {
        let n = g.vertex_count();
        let sigma = VertexOrdering::new(order.clone(), n).unwrap();
        prop_assert_eq!(check_sprime(&g, &f, &sigma), naive_admissible(&g, f.mask(), &order));
        let fixed_first: Vec<usize> = f.members().iter().copied().chain(f.complement()).collect();
        prop_assert!(check_sprime(&g, &f, &VertexOrdering::new(fixed_first, n).unwrap()));
    }

    #[test]
    fn enumeration_matches_naive((g, p, lists) in list_instance(5, 4)) {
        let got = enumerate_colorings(&g, p, Some(&lists), &Caps::default()).unwrap();
        let got: Vec<Vec<Color>> = got.into_iter().map(Coloring::into_vec).collect();
        prop_assert_eq!(got, naive_colorings(&g, p, Some(&lists)));
    }

    #[test]
    fn reconfiguration_edges_match_naive(g in graph(4), k in 1u32..=3) {
        let all = colorings(&g, k);
        let raw: Vec<Vec<Color>> = all.iter().map(|c| c.as_slice().to_vec()).collect();
        let kempe = build_reconfig_graph(&g, &all, Relation::Kempe);
        let elem = build_reconfig_graph(&g, &all, Relation::Elementary);
        prop_assert_eq!(kempe.edges(), naive_kempe_edges(&g, k, &raw));
        prop_assert_eq!(kempe.edges(), pairwise_kempe_edges(&g, &all));
        prop_assert_eq!(elem.edges(), naive_elementary_edges(&raw));
        let kempe_edges = kempe.edges();
        prop_assert!(elem.edges().iter().all(|e| kempe_edges.contains(e)));
        prop_assert!(kempe_edges.iter().all(|&(i, j)| i != j));
    }

    #[test]
    fn reduction_preserves_colorability((g, p, lists) in list_instance(4, 3)) {
        let h = build_reduced(&g, p, &lists).unwrap();
        let listed = naive_colorings(&g, p, Some(&lists));
        let reduced = enumerate_colorings(h.graph(), p, None, &Caps::default()).unwrap();
        prop_assert_eq!(listed.is_empty(), reduced.is_empty());
        // every coloring of the reduced graph projects onto a list coloring
        for c in &reduced {
            let projected = project_coloring(&h, c).unwrap();
            prop_assert!(listed.contains(&projected.as_slice().to_vec()));
        }
        // the fixed set holds the clique and the single-color vertices
        let f = fixed_set(&h);
        for v in h.graph().vertices() {
            let expected = h.is_clique_vertex(v) || lists[v].len() == 1;
            prop_assert_eq!(f.contains(v), expected);
        }
    }

    #[test]
    fn plans_from_degeneracy_witness_succeed(g in graph(6), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (deg, witness) = degeneracy(&g);
        let k = deg as Color + 1;
        let all = colorings(&g, k);
        let (c1, c2) = (&all[a.index(all.len())], &all[b.index(all.len())]);
        let plan = kempe_reconfigure(&g, &witness, c1, c2, k);
        prop_assert!(plan.is_ok(), "{:?}", plan);
        let plan = plan.unwrap();
        let run = replay(&g, c1, plan.exchanges()).unwrap();
        prop_assert_eq!(&run.final_coloring, c2);
        prop_assert!(run.trace.iter().all(|c| is_proper(&g, c)));
        let verdict = verify_plan(&g, c1, c2, plan.exchanges(), None);
        prop_assert!(verdict.passed());
        prop_assert!(verdict.colors_used <= k as usize);
        let compacted = plan.compacted();
        prop_assert_eq!(replay(&g, c1, &compacted).unwrap().final_coloring, c2.clone());
        let reversed: Vec<_> = plan.exchanges().iter().rev().copied().collect();
        prop_assert_eq!(&replay(&g, c2, &reversed).unwrap().final_coloring, c1);
    }

    #[test]
    fn fixed_first_plans_leave_fixed_vertices_alone((g, p, lists) in list_instance(5, 4), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let listed = enumerate_colorings(&g, p, Some(&lists), &Caps::default()).unwrap();
        prop_assume!(!listed.is_empty());
        let h = build_reduced(&g, p, &lists).unwrap();
        let f = fixed_set(&h);
        let lambda = subdeg_ub(h.graph(), f.as_set()).lambda;
        prop_assume!(p as usize > lambda);
        let tail = vertex_elimination(h.graph(), f.as_set());
        let order: Vec<usize> = f.members().iter().copied().chain(tail.iter()).collect();
        let order = VertexOrdering::new(order, h.graph().vertex_count()).unwrap();
        let c1 = h.lift(&listed[a.index(listed.len())]).unwrap();
        let c2 = h.lift(&listed[b.index(listed.len())]).unwrap();
        let plan = kempe_reconfigure(h.graph(), &order, &c1, &c2, p).unwrap();
        let v = verify_plan(h.graph(), &c1, &c2, plan.exchanges(), Some(f.as_set()));
        prop_assert!(v.passed());
        prop_assert_eq!(v.fixed_untouched, Some(true));
        for (vertex, _, to) in plan.corrections() {
            prop_assert!(!f.contains(vertex));
            prop_assert!(to as usize <= lambda + 1);
        }
        let projected = project_coloring(&h, &replay(h.graph(), &c1, plan.exchanges()).unwrap().final_coloring).unwrap();
        prop_assert_eq!(projected.as_slice(), listed[b.index(listed.len())].as_slice());
    }

    #[test]
    fn lifted_list_colorings_are_proper((g, p, lists) in list_instance(4, 3)) {
        let h = build_reduced(&g, p, &lists).unwrap();
        let listed = enumerate_colorings(&g, p, Some(&lists), &Caps::default()).unwrap();
        let lifted: Vec<Coloring> = listed.iter().map(|c| h.lift(c).unwrap()).collect();
        prop_assert!(lifted.iter().all(|c| is_proper(h.graph(), c)));
    }

    #[test]
    fn text_formats_round_trip((g, p, lists) in list_instance(6, 5), xs in proptest::collection::vec((1u32..=5, 1u32..=5, 0usize..6), 0..8)) {
        prop_assert_eq!(read_dimacs(&write_dimacs(&g)).unwrap(), g.clone());
        let n = g.vertex_count();
        let events = (0..n).map(|i| Event { label: format!("e{i}") }).collect();
        let inst = UtpInstance::new("rt".into(), events, p as usize, 1, g, lists, true).unwrap();
        prop_assert_eq!(read_normalized(&write_normalized(&inst)).unwrap(), inst);
        let plan: Vec<KempeExchange> = xs.into_iter().filter(|(a, b, _)| a != b).map(|(a, b, u)| KempeExchange::new(a, b, u).unwrap()).collect();
        prop_assert_eq!(read_plan(&write_plan(5, &plan)).unwrap(), (5, plan));
    }
}

#[test]
fn fixed_set_bound_can_exceed_degeneracy() {
    // path a - x - y - b with both ends fixed
    let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let f = VertexSet::new(4, [0, 3]).unwrap();
    assert_eq!(degeneracy(&g).0, 1);
    assert_eq!(naive_exact_subdeg(&g, f.mask()), 2);
    assert_eq!(exact_subdeg(&g, &f, &Caps::default()).unwrap(), 2);
    assert_eq!(subdeg_ub(&g, &f).value, 2);
}

#[test]
fn prefix_ordering_can_strand_a_fixed_vertex() {
    // three isolated events, lists {1,2}, {1,2}, {2,3}; every event moves in front of the clique
    let g = Graph::empty(3);
    let lists = vec![vec![1, 2], vec![1, 2], vec![2, 3]];
    let h = build_reduced(&g, 3, &lists).unwrap();
    let f = fixed_set(&h);
    let r = subdeg_ub(h.graph(), f.as_set());
    assert_eq!((r.value, r.lambda, r.prefix), (0, 1, 3));
    assert_eq!(r.ordering.as_slice(), &[2, 1, 0, 3, 4, 5]);
    let c1 = h.lift(&Coloring::new(vec![1, 2, 2], 3).unwrap()).unwrap();
    let c2 = h.lift(&Coloring::new(vec![2, 2, 3], 3).unwrap()).unwrap();
    let stuck = kempe_reconfigure(h.graph(), &r.ordering, &c1, &c2, 3).unwrap_err();
    assert!(matches!(stuck, kempe_recon::reconfig::ReconfigError::Stuck { vertex: 5, stage: 5, .. }));
    assert!(f.contains(5));

    let tail = vertex_elimination(h.graph(), f.as_set());
    let fixed_first = VertexOrdering::new(f.members().iter().copied().chain(tail.iter()).collect(), 6).unwrap();
    let plan = kempe_reconfigure(h.graph(), &fixed_first, &c1, &c2, 3).unwrap();
    assert!(verify_plan(h.graph(), &c1, &c2, plan.exchanges(), Some(f.as_set())).passed());

    let listed = enumerate_colorings(&g, 3, Some(&lists), &Caps::default()).unwrap();
    let space = kempe_recon::oracle::connectivity(&build_reconfig_graph(&g, &listed, Relation::Kempe));
    assert!(space.connected);
}

#[test]
fn diameter_bound_is_zero_on_two_vertices() {
    let g = Graph::complete(2);
    let lists = vec![vec![1, 2], vec![1, 2]];
    let listed = enumerate_colorings(&g, 2, Some(&lists), &Caps::default()).unwrap();
    let space = kempe_recon::oracle::connectivity(&build_reconfig_graph(&g, &listed, Relation::Kempe));
    let h = build_reduced(&g, 2, &lists).unwrap();
    let all = enumerate_colorings(h.graph(), 2, None, &Caps::default()).unwrap();
    let whole = kempe_recon::oracle::connectivity(&build_reconfig_graph(h.graph(), &all, Relation::Kempe));
    assert_eq!((space.diameter, whole.diameter), (Some(1), Some(2)));
    let bound = (g.vertex_count() - 1) / 2 * whole.diameter.unwrap();
    assert_eq!(bound, 0);
    assert!(space.diameter.unwrap() > bound);
}
