mod common;

use std::collections::BTreeMap;

use rigiditylab::experiments::{random_partition_source, SourceKind};
use rigiditylab::graph::{clique_number, Graph};
use rigiditylab::partition::{
    brute_force_cut_oracle, check_hierarchy, convert_to_rigid_partition, find_cut_hierarchy, landau_prefix_condition,
    landau_tournament, restriction_bound_holds, singleton_clique_check, verify_rigid_partition, verify_strong, CdsFamily,
    CutHierarchy, PartitionError, PartitionSource, Rejection, RigidPartition, StrongPartition, Verdict,
};
use rigiditylab::rigidity::randomized_rigidity_test;
use rigiditylab::rng::RngSeed;

#[test]
fn converted_sources_are_accepted_and_rigid() {
    for (i, kind) in SourceKind::ALL.into_iter().cycle().take(40).enumerate() {
        let (g, source) = random_partition_source(kind, 18, 3, RngSeed::new(i as u64)).expect("source sampled");
        let rp = convert_to_rigid_partition(&g, &source).unwrap();
        let report = verify_rigid_partition(&g, &rp, 8).unwrap();
        let h = report.hierarchy().unwrap_or_else(|| panic!("case {i} ({kind:?}) rejected: {:?}", report.verdict));
        check_hierarchy(&g, &rp, h).unwrap();
        assert!(singleton_clique_check(&g, &rp));
        assert!(restriction_bound_holds(&g, rp.d()));
        // a rigid partition certifies d-rigidity
        if g.n() > rp.d() {
            assert!(randomized_rigidity_test(&g, rp.d(), 3, RngSeed::new(1)).unwrap().is_rigid(), "case {i}");
        }
    }
}

#[test]
fn oracle_passes_imply_hierarchies() {
    let mut hierarchy_only = 0;
    for seed in 0..300u64 {
        let n = 6 + (seed % 9) as usize;
        let (g, rp) = common::random_colouring(n, 1 + (seed % 3) as usize, 0.6, 0.8, seed);
        for part in 0..=rp.d() {
            if rp.part(part).len() > 8 {
                continue;
            }
            let oracle = brute_force_cut_oracle(&g, &rp, part).unwrap();
            assert_eq!(oracle, common::every_subset_has_monochromatic_cut(&rp, part), "seed {seed} part {part}");
            let found = find_cut_hierarchy(&g, &rp, part);
            if oracle {
                assert!(found.is_ok(), "seed {seed} part {part}: oracle holds, search failed");
            }
            if found.is_ok() && !oracle {
                hierarchy_only += 1;
            }
        }
    }
    // the recorded disagreement direction is allowed, not required
    let _ = hierarchy_only;
}

#[test]
fn verifier_rejections_are_specific() {
    let g = Graph::complete(4);
    // d = 1 with both parts empty-free but no colour: G_12 disconnected
    let rp = RigidPartition::new(1, vec![vec![0, 1], vec![2, 3]], BTreeMap::new()).unwrap();
    let r = verify_rigid_partition(&g, &rp, 0).unwrap();
    assert_eq!(r.verdict, Verdict::Rejected(Rejection::DisconnectedPair { i: 1, j: 2 }));
    // two empty parts
    let rp = RigidPartition::new(2, vec![vec![0, 1, 2, 3], vec![], vec![]], BTreeMap::new()).unwrap();
    let r = verify_rigid_partition(&g, &rp, 0).unwrap();
    assert_eq!(r.verdict, Verdict::Rejected(Rejection::TooManyEmptyParts { count: 2 }));
    // K4 inside one part, two colours arranged so that every cut of the
    // part crosses both colours; every G_ij is still connected
    let g = Graph::new(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (4, 5)]).unwrap();
    let mut colours = BTreeMap::new();
    colours.insert((0, 1), vec![(0, 1), (2, 3), (0, 3), (0, 4)]);
    colours.insert((0, 2), vec![(0, 2), (1, 3), (1, 2), (0, 5)]);
    colours.insert((1, 2), vec![(4, 5)]);
    let rp = RigidPartition::new(2, vec![vec![0, 1, 2, 3], vec![4], vec![5]], colours).unwrap();
    assert!(!common::every_subset_has_monochromatic_cut(&rp, 0));
    let r = verify_rigid_partition(&g, &rp, 4).unwrap();
    assert_eq!(
        r.verdict,
        Verdict::Rejected(Rejection::NoCutHierarchy {
            part: 1,
            subset: vec![0, 1, 2, 3]
        })
    );
    assert_eq!(r.hierarchy_only_parts(), Vec::<usize>::new());
}

#[test]
fn structural_errors() {
    let g = Graph::complete(3);
    let mut colours = BTreeMap::new();
    colours.insert((0, 1), vec![(0, 1)]);
    colours.insert((0, 2), vec![(0, 1)]);
    let rp = RigidPartition::new(2, vec![vec![0], vec![1], vec![2]], colours).unwrap();
    assert!(matches!(verify_rigid_partition(&g, &rp, 0), Err(PartitionError::Structural(_))));
    let rp = RigidPartition::new(1, vec![vec![0], vec![1]], BTreeMap::new()).unwrap();
    assert!(matches!(verify_rigid_partition(&g, &rp, 0), Err(PartitionError::Structural(_))));
    assert!(RigidPartition::new(2, vec![vec![0], vec![1, 2]], BTreeMap::new()).is_err());
}

#[test]
fn invalid_sources_are_refused() {
    // a path is no CDS partition into three sets
    let g = Graph::path(3);
    let fam: PartitionSource = CdsFamily {
        d: 2,
        sets: vec![vec![0], vec![1], vec![2]],
    }
    .into();
    assert!(matches!(convert_to_rigid_partition(&g, &fam), Err(PartitionError::InvalidSource(_))));
    let sp = StrongPartition::TypeI {
        d: 2,
        parts: vec![vec![0, 1], vec![2]],
    };
    assert!(!verify_strong(&g, &sp));
    assert!(convert_to_rigid_partition(&g, &sp.into()).is_err());
}

#[test]
fn json_round_trips() {
    for seed in 0..20u64 {
        let kind = SourceKind::ALL[seed as usize % 4];
        let (g, source) = random_partition_source(kind, 14, 3, RngSeed::new(seed)).unwrap();
        let text = serde_json::to_string(&source).unwrap();
        let back: PartitionSource = serde_json::from_str(&text).unwrap();
        assert_eq!(back, source);
        let rp = convert_to_rigid_partition(&g, &source).unwrap();
        assert_eq!(RigidPartition::from_json(&rp.to_json()).unwrap(), rp);
        let report = verify_rigid_partition(&g, &rp, 0).unwrap();
        let h = report.hierarchy().unwrap();
        let h_text = serde_json::to_string(h).unwrap();
        let h_back: CutHierarchy = serde_json::from_str(&h_text).unwrap();
        assert_eq!(&h_back, h);
    }
}

#[test]
fn landau_scores_are_realised() {
    for scores in [vec![], vec![0], vec![0, 1], vec![1, 1, 1], vec![0, 1, 2, 3], vec![1, 1, 2, 2], vec![2, 2, 2, 2, 2]] {
        assert!(landau_prefix_condition(&scores));
        let t = landau_tournament(&scores).unwrap();
        let mut out = t.out_degrees();
        out.sort_unstable();
        let mut want = scores.clone();
        want.sort_unstable();
        assert_eq!(out, want);
        for i in 0..t.size() {
            for j in 0..t.size() {
                if i != j {
                    assert_ne!(t.beats(i, j), t.beats(j, i));
                }
            }
        }
    }
    assert!(!landau_prefix_condition(&[0, 0, 3]));
    assert!(landau_tournament(&[0, 0, 3]).is_err());
}

#[test]
fn restriction_bound_on_small_graphs() {
    // exhaustive over graphs with five vertices: any accepted partition
    // from the complete-graph converter obeys 2d <= n + ω
    for mask in (0..1u64 << 10).step_by(7) {
        let g = common::graph_from_mask(5, mask);
        let omega = clique_number(&g);
        for d in 1..=4 {
            assert_eq!(restriction_bound_holds(&g, d), 2 * d <= 5 + omega);
        }
    }
}
