mod common;

use common::{graphs_up_to, labeled_graphs};
use homdual::digraph::{is_homomorphism, maps_to};
use homdual::families::{
    append_pair, append_sinks, family_hits, gadget_graph, gen_d, gen_g2, gen_p, phi_to_dual, BinaryTree, DualKind,
    DualOutcome, FamilyDescriptor, TreeFixpoint, TreeParams,
};
use homdual::verify::{enumerate_ids, verify_duality, Canonizer, GraphId, Verdict, VerifyOptions};
use homdual::DiGraph;

fn tree_oracle(trees: &[DiGraph], g: &DiGraph) -> bool {
    trees.iter().any(|t| maps_to(t, g))
}

fn check_tree_family(params: &TreeParams, graphs: impl Iterator<Item = DiGraph>) {
    let trees: Vec<DiGraph> = BinaryTree::all_up_to(4).iter().map(|t| gadget_graph(t, params)).collect();
    let family = FamilyDescriptor::TreeFamily(params.clone());
    for g in graphs {
        let fp = TreeFixpoint::compute(params, &g);
        assert!(fp.rounds() <= g.n().max(1), "{g}");
        let hit = family_hits(&family, &g);
        assert_eq!(hit.is_some(), tree_oracle(&trees, &g), "{params} on\n{g}");
        if let Some(w) = hit {
            assert!(is_homomorphism(&w.graph, &g, &w.map).unwrap());
        }
    }
}

#[test]
fn tree_fixpoint_matches_enumeration_up_to_three_vertices() {
    for params in [TreeParams::t1(), TreeParams::t2()] {
        check_tree_family(&params, graphs_up_to(3));
    }
}

#[test]
fn tree_fixpoint_matches_enumeration_on_four_vertex_classes() {
    let classes: Vec<DiGraph> = enumerate_ids(4, true).into_iter().map(GraphId::graph).collect();
    for params in [TreeParams::t1(), TreeParams::t2()] {
        check_tree_family(&params, classes.iter().cloned());
    }
}

#[test]
fn path_power_decider_matches_truncation() {
    for s in [3, 4] {
        let family = FamilyDescriptor::PathPower(s);
        let check = |g: DiGraph| {
            let bound = 2 * g.n() * g.n();
            let oracle = (0..=bound).any(|k| maps_to(&gen_p(s, k), &g));
            assert_eq!(family_hits(&family, &g).is_some(), oracle, "P^{s} on\n{g}");
        };
        graphs_up_to(3).for_each(check);
        enumerate_ids(4, true).into_iter().map(GraphId::graph).for_each(check);
    }
}

#[test]
fn appending_preserves_hits_on_non_sinks() {
    let family = FamilyDescriptor::PathPower(3);
    let appended = FamilyDescriptor::append(family.clone());
    for g in graphs_up_to(3) {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| g.out_degree(v) > 0).collect();
        let core = g.induced_subgraph(&keep);
        assert_eq!(family_hits(&appended, &g).is_some(), family_hits(&family, &core).is_some(), "{g}");
    }
    let (left, duals) = append_pair(family, &[gen_d(3)]);
    let report = verify_duality(&left, &duals, &VerifyOptions::up_to(4));
    assert!(report.is_ok(), "{}", report.render());
}

#[test]
fn appended_members_are_sink_extensions() {
    let appended = FamilyDescriptor::append(FamilyDescriptor::PathPower(3));
    for (k, (_, g)) in appended.members(homdual::families::Truncation::new(3, 0)).into_iter().enumerate() {
        assert_eq!(g, append_sinks(&gen_p(3, k)));
    }
}

#[test]
fn labelings_share_their_class_verdict() {
    let canon = Canonizer::new(3);
    for (family, duals) in [(FamilyDescriptor::PathPower(3), vec![gen_d(3)]), (FamilyDescriptor::t2(), vec![gen_g2()])]
    {
        let verdict =
            |g: &DiGraph| Verdict::new(family_hits(&family, g).is_some(), duals.iter().any(|d| maps_to(g, d)));
        for g in labeled_graphs(3) {
            let rep = GraphId { n: 3, code: canon.canonical(g.adjacency_code().unwrap()) }.graph();
            assert_eq!(verdict(&g), verdict(&rep), "{g}");
        }
    }
}

#[test]
fn reports_are_deterministic_across_worker_counts() {
    let family = FamilyDescriptor::t2();
    let one = verify_duality(&family, &[gen_g2()], &VerifyOptions::up_to(3).jobs(Some(1)));
    let four = verify_duality(&family, &[gen_g2()], &VerifyOptions::up_to(3).jobs(Some(4)));
    assert_eq!(one.render(), four.render());
    let dedup = verify_duality(&family, &[gen_g2()], &VerifyOptions::up_to(3).dedup(true).jobs(Some(3)));
    assert_eq!(dedup.render(), verify_duality(&family, &[gen_g2()], &VerifyOptions::up_to(3).dedup(true)).render());
}

#[test]
fn verdicts_agree_with_the_construction() {
    let report = verify_duality(&FamilyDescriptor::PathPower(3), &[gen_d(3)], &VerifyOptions::up_to(3));
    for (id, verdict) in &report.verdicts {
        let outcome = phi_to_dual(DualKind::Ds(3), &id.graph());
        match verdict {
            Verdict::Left => assert!(outcome.is_witness(), "{id}"),
            Verdict::Right => assert!(matches!(outcome, DualOutcome::Hom(_)), "{id}"),
            other => panic!("{id}: {other}"),
        }
    }
}
