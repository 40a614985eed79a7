mod oracle;

use chibound::io::{parse_graph6, to_graph6};
use chibound::{
    chromatic_number, clique_number, find_induced, gnp, join, named_graph, ChromaticOutcome, Named, Pattern,
    SolveBudget, SplitMix64,
};

fn random_graph(rng: &mut SplitMix64, max_order: usize) -> chibound::Graph {
    let n = rng.below(max_order + 1);
    let p = rng.next_f64();
    gnp(n, p, rng.next_u64()).unwrap()
}

fn exact_chi(g: &chibound::Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    match chromatic_number(g, &SolveBudget::default()).unwrap() {
        ChromaticOutcome::Exact { chi, .. } => chi,
        other => panic!("budget ran out: {other:?}"),
    }
}

fn exact_omega(g: &chibound::Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    clique_number(g, &SolveBudget::default())
        .unwrap()
        .exact()
        .unwrap()
        .size()
}

#[test]
fn detector_matches_exhaustive_search() {
    let mut rng = SplitMix64::new(11);
    let mut hosts: Vec<_> = (0..300).map(|_| random_graph(&mut rng, 7)).collect();
    hosts.extend(Named::patterns().map(named_graph));
    for host in &hosts {
        let h = oracle::matrix(host);
        for name in Named::patterns() {
            let p = Pattern::named(name).unwrap();
            let found = find_induced(host, &p).unwrap();
            assert_eq!(
                found.is_some(),
                oracle::has_induced(&h, &oracle::matrix(p.graph())),
                "{name} in {host:?}"
            );
            if let Some(e) = found {
                assert!(e.is_induced(p.graph(), host));
            }
        }
    }
}

#[test]
fn solvers_match_brute_force() {
    let mut rng = SplitMix64::new(12);
    for _ in 0..150 {
        let g = random_graph(&mut rng, 6);
        let a = oracle::matrix(&g);
        assert_eq!(exact_chi(&g), oracle::chromatic_number(&a), "{g:?}");
        assert_eq!(exact_omega(&g), oracle::clique_number(&a), "{g:?}");
    }
}

#[test]
fn join_adds_chi_and_omega() {
    let mut rng = SplitMix64::new(13);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 8);
        let h = random_graph(&mut rng, 8);
        let gh = join(&g, &h);
        assert_eq!(exact_chi(&gh), exact_chi(&g) + exact_chi(&h));
        assert_eq!(exact_omega(&gh), exact_omega(&g) + exact_omega(&h));
    }
}

#[test]
fn induced_subgraphs_never_need_more_colors() {
    let mut rng = SplitMix64::new(14);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 10);
        let keep: Vec<usize> = (0..g.order()).filter(|_| rng.below(2) == 0).collect();
        let sub = g.induced_by_ids(&keep);
        assert!(exact_chi(&sub) <= exact_chi(&g));
    }
}

#[test]
fn graph6_agrees_with_independent_decoder() {
    let mut rng = SplitMix64::new(15);
    let mut graphs: Vec<_> = (0..200).map(|_| random_graph(&mut rng, 20)).collect();
    graphs.push(gnp(70, 0.3, 1).unwrap());
    graphs.push(named_graph(Named::SchlafliComplement));
    for g in &graphs {
        let text = to_graph6(g);
        assert_eq!(oracle::decode_graph6(&text), oracle::matrix(g));
        assert_eq!(&parse_graph6(&text).unwrap(), g);
    }
    // a fixed 5-vertex graph: the path 0-1-2-3-4
    let p5 = chibound::make_basic(chibound::BasicKind::Path(5)).unwrap();
    let text = to_graph6(&p5);
    assert_eq!(oracle::decode_graph6(&text), oracle::matrix(&p5));
}
