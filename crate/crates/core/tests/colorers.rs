mod oracle;

use chibound::colorers::color_p2k3_free;
use chibound::{
    chromatic_number, color_by_class, evaluate_bound, is_member, named_graph, sample_class, verify_coloring,
    ChromaticOutcome, ClassName, ColorOptions, Named, ProofTrace, SampleConfig, SolveBudget, SplitMix64, StepVerdict,
};

const CLASSES: [ClassName; 6] = [
    ClassName::KiteFree,
    ClassName::HammerFree,
    ClassName::C5Free,
    ClassName::K4Free,
    ClassName::P2K3Free,
    ClassName::K1K3Free,
];

/// Soft gaps are only allowed where the decomposition does not pin the
/// palette of a block on its own.
const SOFT_TAGS: [&str; 3] = [
    "kite.hammer.pairs-bipartite",
    "kite.hammer.triples-bipartite",
    "c5.block-rank",
];

#[test]
fn sampled_members_are_colored_within_bound() {
    let budget = SolveBudget::default();
    for class in CLASSES {
        let mut rng = SplitMix64::new(class as u64);
        for i in 0..40 {
            let n = 3 + i % 8;
            let g = sample_class(&SampleConfig::new(class, n, rng.next_u64()))
                .unwrap()
                .graph;
            let out = color_by_class(class, &g, &ColorOptions::default()).unwrap();
            assert!(verify_coloring(&g, &out.coloring).unwrap().is_proper());
            assert_eq!(out.omega, oracle::clique_number(&oracle::matrix(&g)));
            assert_eq!(out.bound, evaluate_bound(class, out.omega).unwrap());
            assert!(out.coloring.palette() <= out.bound);
            let chi = match chromatic_number(&g, &budget).unwrap() {
                ChromaticOutcome::Exact { chi, .. } => chi,
                other => panic!("{other:?}"),
            };
            assert!(out.omega <= chi && chi <= out.coloring.palette());
            assert_eq!(out.trace.count(StepVerdict::Violated), 0);
            assert!(out.trace.soft_gaps().all(|s| SOFT_TAGS.contains(&s.tag.as_str())));

            let text = out.trace.to_text();
            let parsed = ProofTrace::parse(&text).unwrap();
            assert_eq!(parsed.to_text(), text);
            let bad = parsed.replay(&g, &budget).unwrap();
            assert!(
                bad.is_empty(),
                "{class} replay {:?}",
                bad.iter().map(|&i| parsed.steps[i].to_string()).collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn membership_is_hereditary_on_samples() {
    for class in CLASSES {
        let mut rng = SplitMix64::new(100 + class as u64);
        let g = sample_class(&SampleConfig::new(class, 10, rng.next_u64()))
            .unwrap()
            .graph;
        for _ in 0..20 {
            let keep: Vec<usize> = (0..g.order()).filter(|_| rng.below(3) > 0).collect();
            assert!(is_member(&g.induced_by_ids(&keep), &class.spec()).is_member());
        }
    }
}

#[test]
fn tightness_witnesses() {
    let grotzsch = named_graph(Named::Grotzsch);
    let kite = color_by_class(ClassName::KiteFree, &grotzsch, &ColorOptions::default()).unwrap();
    assert_eq!(kite.coloring.palette(), 4);
    assert_eq!(evaluate_bound(ClassName::KiteFree, 2).unwrap(), 4);
    let hammer = color_by_class(ClassName::HammerFree, &grotzsch, &ColorOptions::default()).unwrap();
    assert_eq!(hammer.coloring.palette(), 4);
    let p2k3 = color_p2k3_free(&grotzsch, &ColorOptions::default()).unwrap();
    assert!(p2k3.coloring.palette() <= 4);
}

#[test]
fn out_of_class_inputs_are_rejected() {
    let c5 = chibound::make_basic(chibound::BasicKind::Cycle(5)).unwrap();
    assert!(color_by_class(ClassName::C5Free, &c5, &ColorOptions::default()).is_err());
    let k4 = chibound::make_basic(chibound::BasicKind::Complete(4)).unwrap();
    assert!(color_by_class(ClassName::K4Free, &k4, &ColorOptions::default()).is_err());
    assert!(color_by_class(ClassName::P3P2, &k4, &ColorOptions::default()).is_err());
}
