//! Isomorph-free generation of connected graphs and graph6 file input.
//!
//! Every connected graph on `n >= 2` vertices has a vertex whose removal
//! leaves it connected, so joining a new vertex to each nonempty subset of
//! every connected `(n-1)`-vertex representative reaches every class.
//! Duplicates are collapsed by canonical form.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::canon::{canonical_labelling, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6_line;
use crate::par::{self, Workers};

pub const MAX_ENUMERATION_ORDER: usize = 10;
/// Labelled brute force visits `2^(n(n-1)/2)` graphs.
pub const MAX_BRUTE_FORCE_ORDER: usize = 7;

/// A graph in its canonical labelling, keyed by its canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGraph {
    pub form: CanonicalForm,
    pub graph: Graph,
}

impl CanonicalGraph {
    pub fn new(g: &Graph) -> Self {
        let (form, graph) = canonical_labelling(g);
        CanonicalGraph { form, graph }
    }
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidOrder { what: "enumeration", n })
    }
}

/// One representative per isomorphism class of connected graphs of order
/// `n`, sorted by canonical form.
pub fn connected_graphs(n: usize, workers: Workers) -> Result<Vec<CanonicalGraph>> {
    Ok(connected_graphs_by_order(n, workers)?.pop().unwrap_or_default())
}

/// Levels `1..=max_n`; entry `k - 1` holds the connected graphs of order `k`.
pub fn connected_graphs_by_order(max_n: usize, workers: Workers) -> Result<Vec<Vec<CanonicalGraph>>> {
    check_order(max_n)?;
    let mut levels = vec![vec![CanonicalGraph::new(&Graph::complete(1)?)]];
    for _ in 2..=max_n {
        let next = extend_level(levels.last().expect("nonempty"), workers);
        levels.push(next);
    }
    Ok(levels)
}

fn extend_level(parents: &[CanonicalGraph], workers: Workers) -> Vec<CanonicalGraph> {
    let per_parent = par::map(parents, workers, |parent| {
        let k = parent.graph.order();
        let mut children = BTreeMap::new();
        for mask in 1..(1u64 << k) {
            let child = CanonicalGraph::new(&parent.graph.extend_with_mask(mask));
            children.entry(child.form.clone()).or_insert(child.graph);
        }
        children
    });
    let mut merged: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for children in per_parent {
        for (form, graph) in children {
            merged.entry(form).or_insert(graph);
        }
    }
    merged
        .into_iter()
        .map(|(form, graph)| CanonicalGraph { form, graph })
        .collect()
}

/// Independent oracle: every labelled graph on `n` vertices, filtered to
/// connected ones and bucketed by canonical form. Returns the bucket sizes.
pub fn brute_force_connected_classes(n: usize) -> Result<BTreeMap<CanonicalForm, usize>> {
    if !(1..=MAX_BRUTE_FORCE_ORDER).contains(&n) {
        return Err(Error::InvalidOrder {
            what: "brute-force enumeration",
            n,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut buckets = BTreeMap::new();
    for bits in 0u64..(1u64 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| (bits >> k) & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            *buckets.entry(canonical_labelling(&g).0).or_insert(0) += 1;
        }
    }
    Ok(buckets)
}

/// Iterator over the graphs in a graph6 stream, one per line. Blank lines
/// and the `>>graph6<<` header are skipped; errors carry the 1-based line.
pub struct Graph6Reader<R> {
    lines: std::io::Lines<R>,
    line: usize,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Graph6Reader {
            lines: reader.lines(),
            line: 0,
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let text = self.lines.next()?;
            self.line += 1;
            let line = self.line;
            let wrap = |source: Error| Error::Line {
                line,
                source: Box::new(source),
            };
            let text = match text {
                Ok(t) => t,
                Err(e) => {
                    return Some(Err(wrap(Error::InvalidArgument(e.to_string()))));
                }
            };
            if let Some(parsed) = parse_graph6_line(&text) {
                return Some(parsed.map_err(wrap));
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ErrorPolicy {
    #[default]
    FailFast,
    /// Keep going and return bad lines alongside the good graphs.
    Collect,
}

#[derive(Debug, Default)]
pub struct Graph6Batch {
    pub graphs: Vec<Graph>,
    pub errors: Vec<Error>,
}

pub fn read_graph6_stream<R: BufRead>(reader: R, policy: ErrorPolicy) -> Result<Graph6Batch> {
    let mut batch = Graph6Batch::default();
    for item in Graph6Reader::new(reader) {
        match (item, policy) {
            (Ok(g), _) => batch.graphs.push(g),
            (Err(e), ErrorPolicy::FailFast) => return Err(e),
            (Err(e), ErrorPolicy::Collect) => batch.errors.push(e),
        }
    }
    Ok(batch)
}

pub fn read_graph6_file(path: impl AsRef<Path>, policy: ErrorPolicy) -> Result<Graph6Batch> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_graph6_stream(BufReader::new(file), policy)
}

/// Canonical forms of `graphs`, for duplicate detection.
pub fn distinct_forms<'a>(graphs: impl IntoIterator<Item = &'a CanonicalGraph>) -> BTreeSet<&'a CanonicalForm> {
    graphs.into_iter().map(|g| &g.form).collect()
}
