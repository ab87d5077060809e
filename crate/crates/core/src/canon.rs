//! Canonical labelling by colour refinement and individualisation.
//!
//! Vertices are partitioned by iterated neighbour-count refinement into an
//! ordered, label-independent colouring. While the colouring is not
//! discrete, each vertex of the first non-singleton cell is individualised
//! in turn and the colouring refined again. Every discrete leaf gives a
//! vertex order; the canonical form is the smallest graph6 string over all
//! leaves. Sibling branches that an already-found automorphism maps onto
//! an explored branch are skipped.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::graph6::{to_graph6, MAX_ORDER};

/// graph6 string of the canonical relabelling. Equal forms mean
/// isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Panics if `g` has more than 62 vertices.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (form, _) = canonical_labelling(g);
    form
}

/// Canonical form together with the relabelled graph it encodes.
pub fn canonical_labelling(g: &Graph) -> (CanonicalForm, Graph) {
    assert!(g.order() <= MAX_ORDER, "canonical form limited to order {MAX_ORDER}");
    let mut search = Search::new(g);
    let colors = refine(g, vec![0; g.order()]);
    search.descend(colors, &mut Vec::new());
    let best = search.best.expect("at least one leaf");
    let relabelled = g.relabel(&best.position).expect("leaf is a permutation");
    let text = to_graph6(&relabelled).expect("order checked");
    (CanonicalForm(text), relabelled)
}

/// Splits colour classes by the number of neighbours each vertex has in
/// every class until stable. New classes are ranked by their signature, so
/// the result depends only on the structure, never on vertex labels.
/// `colors` must be dense ranks `0..k`.
pub(crate) fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.order();
    let mut k = colors.iter().max().map_or(0, |c| c + 1);
    loop {
        let mut sigs: Vec<(Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut sig = vec![0; k + 1];
                sig[0] = colors[v];
                for u in g.neighbors(v) {
                    sig[colors[u] + 1] += 1;
                }
                (sig, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut next = vec![0; n];
        let mut rank = 0;
        for i in 0..n {
            if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                rank += 1;
            }
            next[sigs[i].1] = rank;
        }
        let new_k = rank + 1;
        colors = next;
        if new_k == k {
            return colors;
        }
        k = new_k;
    }
}

struct Leaf {
    code: Vec<u64>,
    /// `position[v]` is the new label of vertex `v`.
    position: Vec<usize>,
}

struct Search<'g> {
    g: &'g Graph,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        Search {
            g,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    /// Upper-triangle bits of the relabelled graph in graph6 order, packed
    /// most significant bit first so word order is bit-string order.
    fn code(&self, position: &[usize]) -> Vec<u64> {
        let n = self.g.order();
        let mut vertex_at = vec![0; n];
        for (v, &p) in position.iter().enumerate() {
            vertex_at[p] = v;
        }
        let nbits = n * (n - 1) / 2;
        let mut code = vec![0u64; nbits.div_ceil(64).max(1)];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.g.has_edge(vertex_at[i], vertex_at[j]) {
                    code[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        code
    }

    fn leaf(&mut self, position: Vec<usize>) {
        let code = self.code(&position);
        match &self.best {
            None => self.best = Some(Leaf { code, position }),
            Some(best) => match code.cmp(&best.code) {
                std::cmp::Ordering::Less => self.best = Some(Leaf { code, position }),
                std::cmp::Ordering::Equal => {
                    // Both orders give the same graph, so mapping one onto
                    // the other is an automorphism.
                    let n = position.len();
                    let mut vertex_at = vec![0; n];
                    for (v, &p) in best.position.iter().enumerate() {
                        vertex_at[p] = v;
                    }
                    let gamma: Vec<usize> = position.iter().map(|&p| vertex_at[p]).collect();
                    if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                        self.automorphisms.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    fn descend(&mut self, colors: Vec<usize>, path: &mut Vec<usize>) {
        let n = colors.len();
        let mut size = vec![0usize; n];
        for &c in &colors {
            size[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| size[c] > 1) else {
            self.leaf(colors);
            return;
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if self.equivalent_to_explored(v, &explored, path, &cell) {
                continue;
            }
            let individualised: Vec<usize> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| {
                    if c > target || (c == target && u != v) {
                        c + 1
                    } else {
                        c
                    }
                })
                .collect();
            path.push(v);
            self.descend(refine(self.g, individualised), path);
            path.pop();
            explored.push(v);
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix every vertex on the current path.
    fn equivalent_to_explored(&self, v: usize, explored: &[usize], path: &[usize], cell: &[usize]) -> bool {
        if explored.is_empty() {
            return false;
        }
        let stabilising: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|gamma| path.iter().all(|&p| gamma[p] == p))
            .collect();
        if stabilising.is_empty() {
            return false;
        }
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in stabilising {
            for &u in cell {
                let (a, b) = (find(&mut parent, u), find(&mut parent, gamma[u]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn relabelled_paths_agree() {
        let a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&Graph::complete(3).unwrap()));
    }

    #[test]
    fn all_labellings_of_c4_share_a_form() {
        let c4 = Graph::cycle(4).unwrap();
        let forms: std::collections::BTreeSet<_> = permutations(4)
            .iter()
            .map(|p| canonical_form(&c4.relabel(p).unwrap()))
            .collect();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn invariant_over_every_labelling_of_order_six() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (2, 5)]).unwrap();
        let want = canonical_form(&g);
        for p in permutations(6) {
            assert_eq!(canonical_form(&g.relabel(&p).unwrap()), want, "{p:?}");
        }
    }

    #[test]
    fn labelling_encodes_its_graph() {
        let g = Graph::star(5).unwrap();
        let (form, h) = canonical_labelling(&g);
        assert_eq!(to_graph6(&h).unwrap(), form.as_str());
        assert_eq!(h.degree_sequence(), g.degree_sequence());
    }

    #[test]
    fn symmetric_graphs_terminate_quickly() {
        let k8 = Graph::complete(8).unwrap();
        assert_eq!(canonical_form(&k8).as_str(), to_graph6(&k8).unwrap());
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(canonical_form(&k1).as_str(), "@");
    }

    #[test]
    fn refinement_splits_by_degree() {
        let star = Graph::star(4).unwrap();
        let colors = refine(&star, vec![0; 4]);
        assert_eq!(colors, vec![1, 0, 0, 0]);
    }
}
