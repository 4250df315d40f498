use locdim::decomposition::{
    decompose, dim_via_decomposition, hanging_part, solve, upper_bound_via_alpha,
};
use locdim::generate::{cut_vertex_suite, generate, random_connected, Family, GeneratorConfig};
use locdim::local_metric::{exhaustive_dimension, is_local_metric_generator};
use locdim::{Config, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cfg() -> Config {
    Config::default()
}

#[test]
fn engine_matches_exhaustive_search() {
    for inst in cut_vertex_suite(200, 12, 2024) {
        let g = &inst.graph;
        let engine = dim_via_decomposition(g, &cfg()).unwrap();
        let brute = exhaustive_dimension(g, &cfg()).unwrap();
        assert_eq!(engine.dimension, brute.dimension, "{}", inst.id);
        assert!(is_local_metric_generator(g, &engine.witness).unwrap());
    }
}

#[test]
fn engine_matches_on_random_connected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..150 {
        let n = rng.gen_range(2..=11);
        let g = random_connected(n, rng.gen_range(0.0..0.4), &mut rng).unwrap();
        let engine = dim_via_decomposition(&g, &cfg()).unwrap().dimension;
        let brute = exhaustive_dimension(&g, &cfg()).unwrap().dimension;
        assert_eq!(engine, brute, "{g:?}");
    }
}

#[test]
fn attachment_sets_match_hanging_parts() {
    for inst in cut_vertex_suite(120, 15, 8) {
        let g = &inst.graph;
        let d = decompose(g).unwrap();
        for j in 0..d.block_count() {
            for &x in &d.tree.block_cuts[j] {
                let part = hanging_part(g, &d, j, x);
                let (h, _) = g.induced_subgraph(&part).unwrap();
                assert_eq!(
                    d.attachments[j].contains(x),
                    !h.is_bipartite(),
                    "{} block {j} vertex {x}",
                    inst.id
                );
            }
            assert!(d.attachments[j].is_subset(&d.blocks[j]));
        }
    }
}

#[test]
fn blocks_partition_the_edges() {
    for inst in cut_vertex_suite(100, 15, 9) {
        let g = &inst.graph;
        let d = decompose(g).unwrap();
        let mut owner = vec![0usize; 0];
        for (u, v) in g.edges() {
            let holders = d
                .blocks
                .iter()
                .filter(|b| b.contains(u) && b.contains(v))
                .count();
            owner.push(holders);
        }
        assert!(owner.iter().all(|&c| c == 1), "{}", inst.id);
        let block_edges: usize = (0..d.block_count())
            .map(|j| d.block_view(g, j).subgraph.m())
            .sum();
        assert_eq!(block_edges, g.m());
        for x in d.cut_vertices.iter() {
            assert!(d.blocks.iter().filter(|b| b.contains(x)).count() >= 2);
        }
    }
}

#[test]
fn alpha_bound_sandwich() {
    for inst in cut_vertex_suite(200, 12, 2024) {
        let g = &inst.graph;
        let Ok(bound) = upper_bound_via_alpha(g, &cfg()) else {
            assert!(g.is_bipartite(), "{}", inst.id);
            continue;
        };
        let dim = dim_via_decomposition(g, &cfg()).unwrap().dimension;
        assert!(dim <= bound, "{}: {dim} > {bound}", inst.id);
    }
}

#[test]
fn unicyclic_graphs_with_odd_cycles() {
    let mut seen = 0;
    let mut seed = 0;
    while seen < 50 {
        seed += 1;
        let g = generate(&GeneratorConfig::new(Family::Unicyclic { n: 15, cycle_len: None }, seed)).unwrap();
        if g.is_bipartite() {
            continue;
        }
        assert_eq!(dim_via_decomposition(&g, &cfg()).unwrap().dimension, 2);
        seen += 1;
    }
}

#[test]
fn per_block_witnesses_avoid_attachments() {
    for inst in cut_vertex_suite(60, 12, 4) {
        let report = solve(&inst.graph, &cfg()).unwrap();
        let d = &report.decomposition;
        for b in &report.blocks {
            assert!(b.witness.intersection(&d.attachments[b.block]).is_empty());
            assert!(b.witness.is_subset(&d.blocks[b.block]));
            assert_eq!(b.witness.len(), b.rho);
        }
    }
}

#[test]
fn thread_count_does_not_change_output() {
    for inst in cut_vertex_suite(40, 12, 31) {
        let one = dim_via_decomposition(&inst.graph, &cfg()).unwrap();
        let four = dim_via_decomposition(&inst.graph, &cfg().with_threads(4)).unwrap();
        assert_eq!(one, four);
    }
}

#[test]
fn bowtie_witness() {
    let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
    let r = dim_via_decomposition(&g, &cfg()).unwrap();
    assert_eq!(r.dimension, 2);
    assert_eq!(r.witness, VertexSet::from_iter([0, 3]));
}
