use proptest::prelude::*;

use super::*;
use crate::graph::{complete, cycle, path};

/// Minimum generator by plain enumeration of bitmasks, checking the
/// definition directly against BFS distances.
fn oracle_generator(g: &Graph, w: u32) -> bool {
    let dist = g.distance_matrix();
    g.edges()
        .all(|(u, v)| (0..g.n()).any(|x| w & (1 << x) != 0 && dist[u][x] != dist[v][x]))
}

fn oracle_dim(g: &Graph) -> usize {
    (1u32..1 << g.n())
        .filter(|&w| oracle_generator(g, w))
        .map(|w| w.count_ones() as usize)
        .min()
        .unwrap()
}

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

fn cfg() -> Config {
    Config::default()
}

fn k4_plus_three() -> Graph {
    let mut edges: Vec<_> = complete(4).unwrap().edges().collect();
    edges.extend([(0, 4), (1, 4), (2, 4)]);
    Graph::from_edge_list(5, &edges).unwrap()
}

/// The apex 0 joined to two disjoint edges 1-2 and 3-4.
fn apex_two_edges() -> Graph {
    let k1 = complete(1).unwrap();
    let k2 = complete(2).unwrap();
    k1.join(&k2.disjoint_union(&k2))
}

#[test]
fn representation_examples() {
    let c5 = cycle(5).unwrap();
    assert_eq!(representation(&c5, 0, &[1, 3]).unwrap(), vec![1, 2]);
    assert_eq!(representation(&c5, 4, &[4]).unwrap(), vec![0]);
    let k4 = complete(4).unwrap();
    assert_eq!(representation(&k4, 0, &[1, 2, 3]).unwrap(), vec![1, 1, 1]);
    assert_eq!(
        representation(&k4, 0, &[9]),
        Err(Error::VertexOutOfRange(9))
    );
}

#[test]
fn generator_predicate_examples() {
    assert!(is_local_metric_generator(&path(4).unwrap(), &set(&[0])).unwrap());
    let k3 = complete(3).unwrap();
    assert!(!is_local_metric_generator(&k3, &set(&[0])).unwrap());
    assert!(is_local_metric_generator(&k3, &set(&[0, 1])).unwrap());
    assert_eq!(
        is_local_metric_generator(&k3, &VertexSet::new()),
        Err(Error::EmptySet)
    );
    assert_eq!(
        is_local_metric_generator(&Graph::empty(2), &set(&[0])),
        Err(Error::Disconnected)
    );
}

#[test]
fn dimension_examples() {
    let r = local_metric_dimension(&complete(5).unwrap(), &cfg()).unwrap();
    assert_eq!((r.dimension, r.method), (4, Method::CompleteFastPath));
    let r = local_metric_dimension(&cycle(6).unwrap(), &cfg()).unwrap();
    assert_eq!((r.dimension, r.method), (1, Method::BipartiteFastPath));
    let r = local_metric_dimension(&cycle(5).unwrap(), &cfg()).unwrap();
    assert_eq!((r.dimension, r.method), (2, Method::BruteForce));
    assert_eq!(r.witness, set(&[0, 1]));
    let r = local_metric_dimension(&k4_plus_three(), &cfg()).unwrap();
    assert_eq!((r.dimension, r.method), (3, Method::CliqueFastPath));
    assert_eq!(r.witness, set(&[0, 1, 2]));
    let r = local_metric_dimension(&apex_two_edges(), &cfg()).unwrap();
    assert_eq!(r.dimension, 2);
    assert_eq!(r.witness, set(&[1, 3]));
}

#[test]
fn fast_paths_agree_with_search() {
    for g in [
        complete(5).unwrap(),
        cycle(6).unwrap(),
        k4_plus_three(),
        path(2).unwrap(),
    ] {
        let fast = local_metric_dimension(&g, &cfg()).unwrap();
        let slow = exhaustive_dimension(&g, &cfg()).unwrap();
        assert_eq!(fast.dimension, slow.dimension);
        assert_eq!(fast.witness, slow.witness);
    }
}

#[test]
fn dimension_errors() {
    assert_eq!(
        local_metric_dimension(&complete(1).unwrap(), &cfg()),
        Err(Error::Trivial)
    );
    assert_eq!(
        local_metric_dimension(&Graph::empty(3), &cfg()),
        Err(Error::Disconnected)
    );
    let small = Config {
        max_exact: 4,
        ..Config::default()
    };
    assert_eq!(
        local_metric_dimension(&cycle(5).unwrap(), &small),
        Err(Error::SearchLimitExceeded { n: 5, cap: 4 })
    );
    // Fast paths still answer above the cap.
    assert_eq!(
        local_metric_dimension(&complete(40).unwrap(), &small)
            .unwrap()
            .dimension,
        39
    );
}

#[test]
fn bases_examples() {
    let fam = enumerate_local_metric_bases(&complete(3).unwrap(), &cfg()).unwrap();
    assert_eq!(fam.bases, vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]);
    // Every vertex of a bipartite graph is a basis on its own, the middle
    // vertex of P_3 included.
    let fam = enumerate_local_metric_bases(&path(3).unwrap(), &cfg()).unwrap();
    assert_eq!(fam.bases, vec![set(&[0]), set(&[1]), set(&[2])]);
    let fam = enumerate_local_metric_bases(&apex_two_edges(), &cfg()).unwrap();
    assert_eq!(
        fam.bases,
        vec![set(&[1, 3]), set(&[1, 4]), set(&[2, 3]), set(&[2, 4])]
    );
    assert!(!fam.covers(0));
    let fam = enumerate_local_metric_bases(&cycle(5).unwrap(), &cfg()).unwrap();
    assert_eq!(fam.bases.len(), 10);
}

#[test]
fn rho_examples() {
    let c5 = cycle(5).unwrap();
    assert_eq!(rho(&c5, &c5.vertices(), &cfg()).unwrap().0, 0);
    assert_eq!(
        rho(&complete(4).unwrap(), &set(&[0, 1]), &cfg()).unwrap(),
        (1, set(&[2]))
    );
    assert_eq!(rho(&c5, &VertexSet::new(), &cfg()).unwrap(), (2, set(&[0, 1])));
    assert_eq!(
        rho(&complete(3).unwrap(), &set(&[0]), &cfg()).unwrap(),
        (1, set(&[1]))
    );
    assert_eq!(
        rho(&cycle(6).unwrap(), &VertexSet::new(), &cfg()).unwrap(),
        (1, set(&[0]))
    );
    // Non-complete general path through the search.
    let h = apex_two_edges();
    assert_eq!(rho(&h, &set(&[0]), &cfg()).unwrap(), (2, set(&[1, 3])));
    assert_eq!(rho(&h, &set(&[1]), &cfg()).unwrap(), (1, set(&[3])));
}

#[test]
fn alpha_examples() {
    assert_eq!(alpha(&complete(3).unwrap(), &set(&[0]), &cfg()).unwrap(), 1);
    assert_eq!(alpha(&cycle(5).unwrap(), &VertexSet::new(), &cfg()).unwrap(), 0);
    assert_eq!(alpha(&apex_two_edges(), &set(&[0]), &cfg()).unwrap(), 0);
}

#[test]
fn minimality_examples() {
    assert!(is_minimal_generator_always_minimum(&complete(4).unwrap(), &cfg()).unwrap());
    assert!(is_minimal_generator_always_minimum(&path(4).unwrap(), &cfg()).unwrap());
    assert!(is_minimal_generator_always_minimum(&cycle(5).unwrap(), &cfg()).unwrap());
    assert_eq!(
        is_minimal_generator_always_minimum(&complete(13).unwrap(), &cfg()),
        Err(Error::TooLarge { n: 13, limit: 12 })
    );
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let tree = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
            let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
            (Just(n), tree, extra)
        })
        .prop_map(|(n, tree, extra)| {
            let mut edges: Vec<_> = tree
                .iter()
                .enumerate()
                .map(|(i, ix)| (ix.index(i + 1), i + 1))
                .collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] && k % 3 == 0 {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn search_matches_oracle(g in arb_connected(9)) {
        let r = exhaustive_dimension(&g, &cfg()).unwrap();
        prop_assert_eq!(r.dimension, oracle_dim(&g));
        prop_assert!(is_local_metric_generator(&g, &r.witness).unwrap());
        prop_assert_eq!(r.witness.len(), r.dimension);
        let fast = local_metric_dimension(&g, &cfg()).unwrap();
        prop_assert_eq!(fast.dimension, r.dimension);
        prop_assert_eq!(fast.witness, r.witness);
    }

    #[test]
    fn generators_are_monotone(g in arb_connected(10), a in any::<u16>(), b in any::<u16>()) {
        let n = g.n();
        let small = VertexSet::from_mask(u64::from(a) & ((1 << n) - 1));
        let big = small.union(&VertexSet::from_mask(u64::from(b) & ((1 << n) - 1)));
        prop_assume!(!small.is_empty());
        if is_local_metric_generator(&g, &small).unwrap() {
            prop_assert!(is_local_metric_generator(&g, &big).unwrap());
        }
        prop_assert!(is_local_metric_generator(&g, &g.vertices()).unwrap());
    }

    #[test]
    fn dimension_bounds_and_characterizations(g in arb_connected(8)) {
        let n = g.n();
        let d = exhaustive_dimension(&g, &cfg()).unwrap().dimension;
        prop_assert!(1 <= d && d < n);
        prop_assert_eq!(d == 1, g.is_bipartite());
        prop_assert_eq!(d == n - 1, g.is_complete());
    }

    #[test]
    fn rho_properties(g in arb_connected(9), a in any::<u16>(), b in any::<u16>()) {
        let n = g.n();
        let dim = exhaustive_dimension(&g, &cfg()).unwrap().dimension;
        prop_assert_eq!(rho(&g, &VertexSet::new(), &cfg()).unwrap().0, dim);
        prop_assert_eq!(rho(&g, &g.vertices(), &cfg()).unwrap().0, 0);
        let small = VertexSet::from_mask(u64::from(a) & ((1 << n) - 1));
        let big = small.union(&VertexSet::from_mask(u64::from(b) & ((1 << n) - 1)));
        let (rs, ws) = rho(&g, &small, &cfg()).unwrap();
        let (rb, _) = rho(&g, &big, &cfg()).unwrap();
        prop_assert!(rb <= rs);
        prop_assert_eq!(ws.len(), rs);
        prop_assert!(ws.intersection(&small).is_empty());
        let all = ws.union(&small);
        if !all.is_empty() {
            prop_assert!(is_local_metric_generator(&g, &all).unwrap());
        }
    }

    #[test]
    fn single_attachment_rho(g in arb_connected(9)) {
        prop_assume!(!g.is_bipartite());
        let dim = exhaustive_dimension(&g, &cfg()).unwrap().dimension;
        for v in 0..g.n() {
            let c = VertexSet::from_iter([v]);
            let a = alpha(&g, &c, &cfg()).unwrap();
            let (r, _) = rho(&g, &c, &cfg()).unwrap();
            prop_assert_eq!(r, if a == 1 { dim - 1 } else { dim });
        }
    }

    #[test]
    fn alpha_bounds(g in arb_connected(9), a in any::<u16>()) {
        let c = VertexSet::from_mask(u64::from(a) & ((1 << g.n()) - 1));
        let dim = exhaustive_dimension(&g, &cfg()).unwrap().dimension;
        let al = alpha(&g, &c, &cfg()).unwrap();
        prop_assert!(al <= c.len().min(dim));
    }

    #[test]
    fn bases_match_oracle(g in arb_connected(8)) {
        let fam = enumerate_local_metric_bases(&g, &cfg()).unwrap();
        let dim = oracle_dim(&g);
        let expected: Vec<VertexSet> = {
            let mut v: Vec<VertexSet> = (1u32..1 << g.n())
                .filter(|&w| w.count_ones() as usize == dim && oracle_generator(&g, w))
                .map(|w| VertexSet::from_mask(u64::from(w)))
                .collect();
            v.sort();
            v
        };
        prop_assert_eq!(fam.dimension, dim);
        prop_assert_eq!(fam.bases, expected);
    }
}
