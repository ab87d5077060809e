use std::io::Write;

use genergy::census::{census_csv, census_json, parse_census_json, ratios, CensusOutcome};
use genergy::enumerate::{connected_graphs_by_order, read_graph6_file, ErrorPolicy};
use genergy::{run_census, verify_chain, CensusInput, Subclass, Threshold, ToleranceConfig, Workers};

// Reference counts of connected graphs per subclass for orders 1..=7.
const TABLE: [(usize, [usize; 4]); 7] = [
    (1, [1, 0, 0, 0]),
    (2, [0, 0, 0, 1]),
    (3, [0, 0, 1, 1]),
    (4, [4, 0, 1, 1]),
    (5, [12, 4, 4, 1]),
    (6, [58, 39, 12, 3]),
    (7, [440, 381, 28, 4]),
];

fn census(max_n: usize, tol: &ToleranceConfig, workers: Workers) -> Vec<CensusOutcome> {
    connected_graphs_by_order(max_n, workers)
        .unwrap()
        .into_iter()
        .enumerate()
        .map(|(i, level)| run_census(&CensusInput::from_levels(i + 1, level), tol, workers, true).unwrap())
        .collect()
}

fn counts(o: &CensusOutcome) -> [usize; 4] {
    Subclass::ALL.map(|c| o.row.count(c))
}

#[test]
fn counts_match_the_table() {
    let outcomes = census(7, &ToleranceConfig::default(), Workers::ONE);
    for ((n, expected), o) in TABLE.iter().zip(&outcomes) {
        assert_eq!(o.row.n, *n);
        assert_eq!(counts(o), *expected, "n={n}");
        assert_eq!(o.row.total, expected.iter().sum::<usize>());
        assert_eq!(o.row.borderline_count, 0, "n={n}");
    }
}

#[test]
fn classes_are_stable_across_tolerances() {
    let reference = census(7, &ToleranceConfig::default(), Workers::ONE);
    for eps_abs in [1e-8, 1e-10] {
        let tol = ToleranceConfig::new(eps_abs, 1e-12).unwrap();
        for (a, b) in reference.iter().zip(census(7, &tol, Workers::ONE)) {
            assert_eq!(a.listings, b.listings, "n={} eps_abs={eps_abs:e}", a.row.n);
        }
    }
}

#[test]
fn chain_and_threshold_identity_hold_everywhere() {
    let tol = ToleranceConfig::default();
    let levels = connected_graphs_by_order(7, Workers::ONE).unwrap();
    let mut threshold_graphs = 0;
    for g in levels.iter().flatten() {
        let p = genergy::profile(&g.graph).unwrap();
        assert!(verify_chain(&p, &tol).is_empty(), "{}: {p:?}", g.form);
        for (left, right) in [
            (p.pi_star, p.lel),
            (p.lel, p.incidence_energy),
            (p.incidence_energy, p.pi),
            (p.energy, p.pi),
        ] {
            assert!(right - left >= -1e-9, "{}", g.form);
        }
        if g.graph.is_threshold() {
            threshold_graphs += 1;
            assert!((p.pi_star - p.lel).abs() <= 1e-9, "{}", g.form);
        }
    }
    // Connected threshold graphs on n vertices number 2^(n-2) for n >= 2.
    assert_eq!(threshold_graphs, 1 + (2..=7).map(|n| 1usize << (n - 2)).sum::<usize>());
}

#[test]
fn equality_cases_are_flagged() {
    let outcomes = census(4, &ToleranceConfig::default(), Workers::ONE);
    let g3 = &outcomes[2].listings[&Subclass::G3];
    // K3 is the only G3 graph of order 3 and sits on E = IE.
    assert_eq!(g3.len(), 1);
    let k3 = genergy::parse_graph6(g3[0].as_str()).unwrap();
    let c = genergy::classify(&genergy::profile(&k3).unwrap(), &ToleranceConfig::default()).unwrap();
    assert!(c.has_flag(Threshold::Ie));
    assert!(!c.borderline);
}

#[test]
fn file_source_matches_builtin() {
    let levels = connected_graphs_by_order(6, Workers::ONE).unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, ">>graph6<<").unwrap();
    for g in levels.iter().flatten() {
        writeln!(file, "{}", g.form).unwrap();
    }
    // A disconnected graph of order 6 is skipped, not classified.
    writeln!(file, "Ehc?").unwrap();
    file.flush().unwrap();

    let batch = read_graph6_file(file.path(), ErrorPolicy::FailFast).unwrap();
    let tol = ToleranceConfig::default();
    let builtin = census(6, &tol, Workers::ONE);
    for b in &builtin {
        let n = b.row.n;
        let input = CensusInput::from_file_graphs(n, &batch.graphs, Workers::ONE);
        let f = run_census(&input, &tol, Workers::ONE, true).unwrap();
        assert_eq!(f.listings, b.listings, "n={n}");
        assert_eq!(counts(&f), counts(b));
        assert_eq!(f.row.skipped_disconnected, usize::from(n == 6));
    }
}

#[test]
fn exports_are_independent_of_workers() {
    let tol = ToleranceConfig::default();
    let rows = |w| {
        census(7, &tol, Workers::new(w).unwrap())
            .into_iter()
            .map(|o| o.row)
            .collect::<Vec<_>>()
    };
    let (one, many) = (rows(1), rows(4));
    assert_eq!(census_csv(&one), census_csv(&many));
    let json = census_json(&one, &tol).unwrap();
    assert_eq!(json, census_json(&many, &tol).unwrap());
    let doc = parse_census_json(&json).unwrap();
    assert_eq!(doc.rows, one);
}

#[test]
fn ratios_sum_to_one() {
    for o in census(7, &ToleranceConfig::default(), Workers::ONE) {
        let r = ratios(&o.row).unwrap();
        let total: f64 = Subclass::ALL.iter().map(|&c| r.ratio(c)).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }
}
