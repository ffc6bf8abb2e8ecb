use rigiditylab::component::{giant_component_experiment, greedy_rigid_closure, validate_growth, GrowthReason, ValidationTarget};
use rigiditylab::generators::gnp;
use rigiditylab::graph::Graph;
use rigiditylab::rigidity::randomized_rigidity_test;
use rigiditylab::rng::RngSeed;

#[test]
fn growth_trace_is_a_valid_construction() {
    for seed in 0..10u64 {
        let g = gnp(120, 0.08, RngSeed::new(seed)).unwrap();
        let Ok(trace) = greedy_rigid_closure(&g, 2) else { continue };
        let order = trace.order();
        let mut position = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        for a in &trace.additions {
            if let GrowthReason::ZeroExtension { neighbours } = &a.reason {
                // exactly d earlier neighbours
                assert_eq!(neighbours.len(), 2);
                assert!(neighbours.iter().all(|&w| position[w] < position[a.vertex] && g.has_edge(w, a.vertex)));
            }
        }
        assert_eq!(trace.final_set.len(), order.len());
        for &(u, v) in &trace.witness_edges {
            assert!(g.has_edge(u, v) && trace.final_set.contains(u) && trace.final_set.contains(v));
        }
        let induced = validate_growth(&g, &trace, 3, RngSeed::new(1), usize::MAX).unwrap();
        assert_eq!(induced.target, ValidationTarget::InducedSubgraph);
        assert!(induced.verdict.is_rigid(), "seed {seed}");
        let witness = validate_growth(&g, &trace, 3, RngSeed::new(1), 0).unwrap();
        assert_eq!(witness.target, ValidationTarget::WitnessSubgraph);
        assert!(witness.verdict.is_rigid(), "seed {seed}");
    }
}

#[test]
fn glue_joins_rigid_blocks() {
    // two K4s sharing an edge: in the plane the second block enters by
    // 0-extension; after removing the shared edge's second copy there is
    // nothing to glue, so use a bridge of two shared vertices instead
    let mut edges = Vec::new();
    for block in [[0, 1, 2, 3], [3, 4, 5, 6]] {
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((block[i], block[j]));
            }
        }
    }
    // a third block meeting the first two in vertices 2 and 5
    for block in [[2, 5, 7, 8]] {
        for i in 0..4 {
            for j in i + 1..4 {
                let e = (block[i].min(block[j]), block[i].max(block[j]));
                if !edges.contains(&e) {
                    edges.push(e);
                }
            }
        }
    }
    let g = Graph::new(9, edges).unwrap();
    let trace = greedy_rigid_closure(&g, 2).unwrap();
    let v = validate_growth(&g, &trace, 3, RngSeed::new(0), usize::MAX).unwrap();
    let direct = randomized_rigidity_test(&g.induced(&trace.final_set).unwrap().graph, 2, 3, RngSeed::new(0)).unwrap();
    assert_eq!(v.verdict.is_rigid(), direct.is_rigid());
    assert!(v.verdict.is_rigid());
}

#[test]
fn experiment_reports_are_reproducible() {
    let a = giant_component_experiment(150, 2, 20.0, 4, RngSeed::new(3)).unwrap();
    let b = giant_component_experiment(150, 2, 20.0, 4, RngSeed::new(3)).unwrap();
    assert_eq!(a.content_hash(), b.content_hash());
    assert_eq!(a.trials.len(), 4);
    assert!(giant_component_experiment(150, 0, 20.0, 1, RngSeed::new(3)).is_err());
}
