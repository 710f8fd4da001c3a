use std::collections::{BTreeSet, VecDeque};

use mal_core::approx::{self, ceil_fraction};
use mal_core::bridge;
use mal_core::dominating::{self, hitting_set_bound, Condition, Delta};
use mal_core::folklore;
use mal_core::generate::random_connected;
use mal_core::graph::{self, Edge, Graph, UNREACHABLE};
use mal_core::io;
use mal_core::temporal::{is_temporally_connected, Labeling, TemporalGraph};
use mal_core::variants;
use mal_core::Parallelism;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 0.0f64..1.0).prop_map(|(n, seed, density)| {
        let max_m = n * (n - 1) / 2;
        let m = (n - 1) + ((max_m - (n - 1)) as f64 * density * density) as usize;
        random_connected(n, m, seed).unwrap()
    })
}

fn oracle_bfs(g: &Graph, s: usize) -> Vec<u32> {
    let mut adj = vec![Vec::new(); g.n()];
    for e in g.edges() {
        adj[e.0].push(e.1);
        if !g.is_directed() {
            adj[e.1].push(e.0);
        }
    }
    let mut dist = vec![UNREACHABLE; g.n()];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &w in &adj[u] {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    dist
}

/// Reachability by exhaustive search over (vertex, last label) states.
fn oracle_temporally_connected(g: &Graph, l: &Labeling) -> bool {
    let occurrences: Vec<(usize, usize, u32)> = l
        .iter()
        .flat_map(|(e, labels)| {
            labels
                .iter()
                .flat_map(move |&t| [(e.0, e.1, t), (e.1, e.0, t)])
        })
        .collect();
    (0..g.n()).all(|s| {
        let mut reached = vec![false; g.n()];
        reached[s] = true;
        let mut seen = BTreeSet::from([(s, 0u32)]);
        let mut stack = vec![(s, 0u32)];
        while let Some((v, last)) = stack.pop() {
            for &(a, b, t) in &occurrences {
                if a == v && t > last && seen.insert((b, t)) {
                    reached[b] = true;
                    stack.push((b, t));
                }
            }
        }
        reached.iter().all(|&r| r)
    })
}

fn random_labeling(g: &Graph, seed: u64, max_label: u32, density: f64) -> Labeling {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut l = Labeling::new();
    for &e in g.edges() {
        for t in 1..=max_label {
            if rng.gen_bool(density) {
                l.add(e, t);
            }
        }
    }
    l
}

fn brute_force_has_c4(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = BTreeSet::from([a, b, c, d]).len() == 4;
                    if distinct
                        && g.has_edge(a, b)
                        && g.has_edge(b, c)
                        && g.has_edge(c, d)
                        && g.has_edge(d, a)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Fewest edges of a tree spanning `terminals`: smallest connected vertex
/// set containing them, minus one.
fn brute_force_steiner_edges(g: &Graph, terminals: &[usize]) -> usize {
    let n = g.n();
    let must = terminals.iter().fold(0u32, |acc, &t| acc | 1 << t);
    let mut best = usize::MAX;
    for mask in 0u32..(1 << n) {
        if mask & must != must {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut seen = 1u32 << verts[0];
        let mut stack = vec![verts[0]];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if mask >> w & 1 == 1 && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        if seen == mask {
            best = best.min(verts.len() - 1);
        }
    }
    best
}

fn permute(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(g.n(), g.edges().iter().map(|e| (perm[e.0], perm[e.1]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn radius_diameter_sandwich(g in connected_graph(40)) {
        let m = graph::metrics(&g).unwrap();
        prop_assert!(m.radius <= m.diameter && m.diameter <= 2 * m.radius);
        prop_assert_eq!(m.eccentricities[m.center], m.radius);
    }

    #[test]
    fn spt_matches_independent_bfs(g in connected_graph(40), root in any::<prop::sample::Index>()) {
        let r = root.index(g.n());
        let spt = graph::bfs_spt(&g, r).unwrap();
        prop_assert_eq!(&spt.dist, &oracle_bfs(&g, r));
        for (child, parent) in spt.tree_edges() {
            prop_assert!(g.has_edge(child, parent));
            prop_assert_eq!(spt.dist[child], spt.dist[parent] + 1);
        }
    }

    #[test]
    fn spf_is_pointwise_minimum(g in connected_graph(60), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let roots: Vec<usize> = picks.iter().map(|p| p.index(g.n())).collect();
        let spf = graph::bfs_spf(&g, &roots).unwrap();
        let per_root: Vec<Vec<u32>> = roots.iter().map(|&r| oracle_bfs(&g, r)).collect();
        for v in 0..g.n() {
            let best = per_root.iter().map(|d| d[v]).min().unwrap();
            prop_assert_eq!(spf.dist[v], best);
            prop_assert_eq!(per_root[roots.iter().position(|&r| Some(r) == spf.root_of[v]).unwrap()][v], best);
        }
    }

    #[test]
    fn metrics_invariant_under_relabeling(g in connected_graph(30), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut ChaCha8Rng::seed_from_u64(seed));
        let a = graph::metrics(&g).unwrap();
        let b = graph::metrics(&permute(&g, &perm)).unwrap();
        prop_assert_eq!((a.diameter, a.radius), (b.diameter, b.radius));
        let mut ea = a.eccentricities.clone();
        let mut eb = b.eccentricities.clone();
        ea.sort_unstable();
        eb.sort_unstable();
        prop_assert_eq!(ea, eb);
    }

    #[test]
    fn c4_detection_matches_brute_force(g in connected_graph(9)) {
        prop_assert_eq!(g.has_c4(), brute_force_has_c4(&g));
    }

    #[test]
    fn connectivity_matches_walk_search(g in connected_graph(6), seed in any::<u64>(), density in 0.1f64..0.7) {
        let l = random_labeling(&g, seed, 4, density);
        prop_assume!(l.total_labels() <= 12);
        let fast = is_temporally_connected(&g, &l, None).unwrap().is_connected();
        prop_assert_eq!(fast, oracle_temporally_connected(&g, &l));
    }

    #[test]
    fn full_range_labels_give_bfs_distances(g in connected_graph(30)) {
        let d = graph::metrics(&g).unwrap().diameter.max(1);
        let mut l = Labeling::new();
        for &e in g.edges() {
            l.add_all(e, 1..=d);
        }
        let tg = TemporalGraph::new(&g, &l).unwrap();
        for s in 0..g.n() {
            prop_assert_eq!(tg.earliest_arrival(s).unwrap(), oracle_bfs(&g, s));
        }
    }

    #[test]
    fn adding_labels_never_delays_arrival(g in connected_graph(15), seed in any::<u64>()) {
        let base = random_labeling(&g, seed, 5, 0.3);
        let mut more = base.clone();
        more.union_with(&random_labeling(&g, seed ^ 0x9e37, 5, 0.2));
        let a = TemporalGraph::new(&g, &base).unwrap();
        let b = TemporalGraph::new(&g, &more).unwrap();
        for s in 0..g.n() {
            let (x, y) = (a.earliest_arrival(s).unwrap(), b.earliest_arrival(s).unwrap());
            for v in 0..g.n() {
                prop_assert!(y[v] <= x[v]);
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree(g in connected_graph(40), seed in any::<u64>()) {
        let l = random_labeling(&g, seed, 6, 0.4);
        let tg = TemporalGraph::new(&g, &l).unwrap();
        prop_assert_eq!(
            tg.check_connectivity_with(Some(6), Parallelism::Sequential),
            tg.check_connectivity_with(Some(6), Parallelism::Parallel)
        );
        prop_assert_eq!(
            approx::label_trivial_with(&g, Parallelism::Sequential).unwrap(),
            approx::label_trivial_with(&g, Parallelism::Parallel).unwrap()
        );
    }

    #[test]
    fn folklore_counts_and_lifetimes(g in connected_graph(60)) {
        let n = g.n();
        let r = graph::metrics(&g).unwrap().radius;
        let a = folklore::label_2r(&g).unwrap();
        prop_assert_eq!(a.total_labels(), (2 * n).saturating_sub(2));
        prop_assert!(a.lifetime() <= 2 * r);
        prop_assert!(is_temporally_connected(&g, &a, Some(2 * r)).unwrap().is_connected());
        let b = folklore::label_2r_plus_1(&g).unwrap();
        prop_assert_eq!(b.total_labels(), (2 * n).saturating_sub(3));
        prop_assert!(is_temporally_connected(&g, &b, Some(2 * r + 1)).unwrap().is_connected());
    }

    #[test]
    fn approximations_meet_their_bounds(g in connected_graph(80)) {
        let n = g.n();
        let d = graph::metrics(&g).unwrap().diameter;
        let t = approx::label_trivial(&g).unwrap();
        prop_assert!(t.lifetime() <= d && t.total_labels() <= n * (n - 1));
        prop_assert!(is_temporally_connected(&g, &t, Some(d)).unwrap().is_connected());

        let h = approx::label_3half(&g).unwrap();
        prop_assert!(is_temporally_connected(&g, &h.labeling, Some(ceil_fraction(3, 2, d))).unwrap().is_connected());
        if let Some(pair) = &h.pair {
            prop_assert!(h.labeling.total_labels() <= approx::count_bound_3half(n, pair.dominating().0.len()));
        }

        let f = approx::label_5thirds(&g).unwrap();
        prop_assert!(is_temporally_connected(&g, &f.labeling, Some(ceil_fraction(5, 3, d))).unwrap().is_connected());
        if let Some(pair) = &f.pair {
            prop_assert!(f.labeling.total_labels() <= approx::count_bound_5thirds(n, d, pair));
        }
    }

    #[test]
    fn dominating_pair_conditions(g in connected_graph(80), n2_frac in 0.05f64..1.0, third in any::<bool>()) {
        let n = g.n();
        let n2 = ((n as f64 * n2_frac).ceil() as usize).clamp(1, n);
        let delta = if third { Delta::THIRD } else { Delta::HALF };
        let p = dominating::dominating_set_pair(&g, delta, n2).unwrap();
        let d = graph::metrics(&g).unwrap().diameter;
        prop_assert_eq!(p.h1, delta.floor_of(d));
        prop_assert_eq!(p.h2, delta.ceil_complement_of(d));
        prop_assert!(p.s1.len() <= dominating::s1_size_bound(n, n2));
        prop_assert_eq!(p.s2.len(), n2);
        let (set, radius) = p.dominating();
        prop_assert!(graph::bfs_spf(&g, set).unwrap().height() <= radius);
        if p.satisfied == Condition::Second {
            prop_assert!(graph::bfs_spf(&g, &p.s1).unwrap().height() > p.h1);
        }
    }

    #[test]
    fn greedy_hitting_set_hits_and_respects_bound(
        universe in 1usize..60,
        ell_frac in 0.0f64..1.0,
        count in 1usize..80,
        seed in any::<u64>(),
    ) {
        let ell = 1 + ((universe - 1) as f64 * ell_frac) as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let elements: Vec<usize> = (0..universe).collect();
        let sets: Vec<Vec<usize>> = (0..count)
            .map(|_| rand::seq::SliceRandom::choose_multiple(elements.as_slice(), &mut rng, ell).copied().collect())
            .collect();
        let hs = dominating::greedy_hitting_set(universe, &sets).unwrap();
        for s in &sets {
            prop_assert!(s.iter().any(|x| hs.binary_search(x).is_ok()));
        }
        prop_assert!(hs.len() <= hitting_set_bound(universe, ell, count));
    }

    #[test]
    fn graph_text_round_trip(g in connected_graph(30)) {
        let text = io::write_graph(&g);
        let back = io::parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(io::write_graph(&back), text);
    }

    #[test]
    fn labeling_json_round_trip(g in connected_graph(20), seed in any::<u64>()) {
        let l = random_labeling(&g, seed, 7, 0.3);
        let text = io::write_labeling(&l);
        prop_assert_eq!(io::parse_labeling(&text, &g).unwrap(), l);
    }

    #[test]
    fn subgraph_labeling_round_trip(g in connected_graph(30), extra in 0u32..3) {
        let m = graph::metrics(&g).unwrap();
        let spt = graph::bfs_spt(&g, m.center).unwrap();
        let h = g.spanning_subgraph(spt.tree_edges().map(|(a, b)| Edge::undirected(a, b))).unwrap();
        let b = graph::diameter(&h).unwrap() + extra;
        let l = bridge::dcss_to_mal(&h, b).unwrap();
        prop_assert_eq!(l.total_labels(), b as usize * h.m());
        let back = bridge::mal_to_dcss(&TemporalGraph::new(&g, &l).unwrap()).unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn plus2_spanner_stretch(g in connected_graph(70)) {
        let h = bridge::plus2_spanner(&g).unwrap();
        prop_assert!(h.is_subgraph_of(&g));
        prop_assert!(bridge::additive_stretch(&g, &h, Parallelism::Parallel).unwrap() <= 2);
        prop_assert!(h.m() <= bridge::plus2_edge_bound(g.n()));
    }

    #[test]
    fn undirection_preserves_feasibility(g in connected_graph(25), seed in any::<u64>()) {
        let d = graph::metrics(&g).unwrap().diameter;
        let dg = variants::bidirect(&g).unwrap();
        prop_assert_eq!(dg.m(), 2 * g.m());
        prop_assert!(dg.is_connected());
        // Orient the trivial labeling: each arc keeps its edge's labels with
        // probability 1/2, and both arcs keep the full set otherwise.
        let base = approx::label_trivial(&g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut dl = Labeling::new();
        for (e, labels) in base.iter() {
            for &t in labels {
                dl.add(Edge(e.0, e.1), t);
                dl.add(Edge(e.1, e.0), t);
                if rng.gen_bool(0.5) {
                    dl.add(Edge(e.0, e.1), t + d);
                }
            }
        }
        let age = if dl.lifetime() > d { Some(2 * d) } else { Some(d) };
        let ul = variants::undirect_labeling(&g, &dl, age).unwrap();
        prop_assert!(ul.total_labels() <= dl.total_labels());
        prop_assert!(is_temporally_connected(&g, &ul, age).unwrap().is_connected());
    }

    #[test]
    fn steiner_heuristic_within_factor_two(g in connected_graph(10), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let terminals: Vec<usize> = picks.iter().map(|p| p.index(g.n())).collect();
        let tree = variants::steiner_tree(&g, &terminals).unwrap();
        let opt = brute_force_steiner_edges(&g, &terminals);
        prop_assert!(tree.edges.len() <= 2 * opt);
        prop_assert_eq!(tree.edges.len() + 1, tree.vertices.len());
        let l = variants::label_msl(&g, &terminals).unwrap();
        prop_assert!(l.total_labels() <= 2 * tree.edges.len());
        prop_assert!(variants::terminals_connected(&g, &l, &terminals, None).unwrap());
    }
}

#[test]
fn dominating_pair_holds_on_200_graphs() {
    for seed in 0..200u64 {
        let n = 5 + (seed as usize * 7) % 120;
        let m = (n - 1) + (seed as usize * 13) % (n * 2);
        let g = random_connected(n, m.min(n * (n - 1) / 2), seed).unwrap();
        let d = graph::metrics(&g).unwrap().diameter;
        for (delta, n2) in [
            (Delta::HALF, approx::n2_three_half(n)),
            (Delta::THIRD, approx::n2_five_thirds(n, d)),
        ] {
            let p = dominating::dominating_set_pair(&g, delta, n2).unwrap();
            let (set, radius) = p.dominating();
            assert!(
                graph::bfs_spf(&g, set).unwrap().height() <= radius,
                "seed {seed}"
            );
            assert!(
                p.s1.len() <= dominating::s1_size_bound(n, n2),
                "seed {seed}"
            );
        }
    }
}
