use std::io::Cursor;

use genergy::enumerate::{
    brute_force_connected_classes, connected_graphs_by_order, distinct_forms, read_graph6_stream, ErrorPolicy,
};
use genergy::{canonical_form, connected_graphs, parse_graph6, to_graph6, Error, Workers};

/// Connected labelled graphs on n vertices, counted by the exponential
/// formula from `2^C(n,2)` labelled graphs.
fn labelled_connected(n: usize) -> u128 {
    let binom = |a: usize, b: usize| -> u128 { (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128) };
    let all = |k: usize| -> u128 { 1u128 << (k * k.saturating_sub(1) / 2) };
    let mut c = vec![0u128; n + 1];
    for k in 1..=n {
        let split: u128 = (1..k).map(|j| binom(k - 1, j - 1) * c[j] * all(k - j)).sum();
        c[k] = all(k) - split;
    }
    c[n]
}

#[test]
fn augmentation_agrees_with_brute_force() {
    for n in 1..=6 {
        let buckets = brute_force_connected_classes(n).unwrap();
        let graphs = connected_graphs(n, Workers::ONE).unwrap();
        let forms: Vec<_> = graphs.iter().map(|g| g.form.clone()).collect();
        let brute: Vec<_> = buckets.keys().cloned().collect();
        assert_eq!(forms, brute, "n={n}");

        // Each bucket is an orbit of the symmetric group, so its size divides n!.
        let factorial: usize = (1..=n).product();
        assert!(buckets.values().all(|&size| factorial.is_multiple_of(size)), "n={n}");
        let labelled: usize = buckets.values().sum();
        assert_eq!(labelled as u128, labelled_connected(n), "n={n}");
    }
}

#[test]
fn emitted_forms_are_canonical_sorted_and_distinct() {
    let levels = connected_graphs_by_order(7, Workers::ONE).unwrap();
    for (i, level) in levels.iter().enumerate() {
        let n = i + 1;
        assert!(level.windows(2).all(|w| w[0].form < w[1].form), "n={n}");
        assert_eq!(distinct_forms(level).len(), level.len());
        for g in level {
            assert_eq!(g.graph.order(), n);
            assert!(g.graph.is_connected());
            assert_eq!(canonical_form(&g.graph), g.form);
            assert_eq!(to_graph6(&g.graph).unwrap(), g.form.as_str());
        }
    }
}

#[test]
fn graph6_round_trip_over_order_seven() {
    let graphs = connected_graphs(7, Workers::ONE).unwrap();
    assert_eq!(graphs.len(), 853);
    let text: String = graphs.iter().map(|g| format!("{}\n", g.form)).collect();
    let batch = read_graph6_stream(Cursor::new(text), ErrorPolicy::FailFast).unwrap();
    assert_eq!(batch.graphs.len(), 853);
    for (parsed, original) in batch.graphs.iter().zip(&graphs) {
        assert_eq!(parsed, &original.graph);
        assert_eq!(&parse_graph6(original.form.as_str()).unwrap(), parsed);
    }
}

#[test]
fn worker_count_does_not_change_output() {
    let one = connected_graphs(7, Workers::ONE).unwrap();
    for w in [2, 3, 8] {
        let many = connected_graphs(7, Workers::new(w).unwrap()).unwrap();
        assert_eq!(one, many, "workers={w}");
    }
}

#[test]
fn stream_errors_carry_line_numbers() {
    let text = ">>graph6<<A_\n\nBw\n~~\nC~\n";
    match read_graph6_stream(Cursor::new(text), ErrorPolicy::FailFast) {
        Err(Error::Line { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected a line error, got {other:?}"),
    }
    let batch = read_graph6_stream(Cursor::new(text), ErrorPolicy::Collect).unwrap();
    assert_eq!(batch.graphs.len(), 3);
    assert_eq!(batch.errors.len(), 1);
}
