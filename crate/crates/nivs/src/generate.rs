//! Isomorph-free exhaustive generation of small graphs and free trees.

use crate::canon::canonical_graph;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashSet};

/// Largest order served by the built-in graph generator. Beyond this the
/// search layer accepts external graph6 streams instead.
pub const MAX_GEN_GRAPH_ORDER: usize = 9;

/// Largest order served by the free-tree generator.
pub const MAX_GEN_TREE_ORDER: usize = 16;

/// Exactly one representative per isomorphism class of simple graphs on `n`
/// vertices, each in canonical labeling, sorted by canonical graph6 bytes.
///
/// Graphs of order k are derived from the order k-1 classes by attaching a
/// new vertex with every possible neighborhood and deduplicating by
/// canonical form.
pub fn gen_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_GEN_GRAPH_ORDER).contains(&n) {
        return Err(Error::GenGraphOrder {
            order: n,
            max: MAX_GEN_GRAPH_ORDER,
        });
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let classes: HashSet<Graph> = level
            .par_iter()
            .flat_map_iter(|parent| {
                (0u64..1 << (k - 1)).map(move |neighborhood| {
                    let mut rows = Vec::with_capacity(k);
                    for v in 0..k - 1 {
                        let mut row = parent.row(v);
                        if neighborhood & bit(v) != 0 {
                            row |= bit(k - 1);
                        }
                        rows.push(row);
                    }
                    rows.push(neighborhood);
                    Graph::from_rows(k, rows)
                })
            })
            .map(|child| canonical_graph(&child).expect("generator order within canon limit"))
            .collect();
        level = classes.into_iter().collect();
        level.sort_by_key(|g| {
            crate::graph6::to_graph6(g).expect("generator order within graph6 limit")
        });
    }
    Ok(level)
}

/// Exactly one representative per isomorphism class of free trees on `n`
/// vertices, sorted by centroid-rooted canonical encoding.
///
/// Rooted trees are enumerated by level-sequence successor; each is reduced
/// to its free tree via a centroid-rooted canonical string for dedup.
pub fn gen_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_GEN_TREE_ORDER).contains(&n) {
        return Err(Error::GenTreeOrder {
            order: n,
            max: MAX_GEN_TREE_ORDER,
        });
    }
    let mut found: BTreeMap<String, Graph> = BTreeMap::new();
    for levels in LevelSequences::new(n) {
        let tree = tree_from_levels(&levels);
        let key = free_tree_key(&tree);
        found.entry(key).or_insert(tree);
    }
    Ok(found.into_values().collect())
}

/// Rooted-tree level sequences in reverse lexicographic order
/// (root at level 1), via the standard successor rule.
struct LevelSequences {
    levels: Vec<usize>,
    started: bool,
}

impl LevelSequences {
    fn new(n: usize) -> Self {
        LevelSequences {
            levels: (1..=n).collect(),
            started: false,
        }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if !self.started {
            self.started = true;
            return Some(self.levels.clone());
        }
        let p = self.levels.iter().rposition(|&l| l > 2)?;
        let q = self.levels[..p]
            .iter()
            .rposition(|&l| l == self.levels[p] - 1)
            .expect("level sequence always has a parent level to the left");
        for i in p..self.levels.len() {
            self.levels[i] = self.levels[i - (p - q)];
        }
        Some(self.levels.clone())
    }
}

/// Vertex i is attached to the nearest earlier vertex one level up.
fn tree_from_levels(levels: &[usize]) -> Graph {
    let n = levels.len();
    let mut g = Graph::empty(n).expect("tree order within capacity");
    for i in 1..n {
        let parent = (0..i)
            .rev()
            .find(|&j| levels[j] == levels[i] - 1)
            .expect("well-formed level sequence");
        g.add_edge(parent, i).expect("indices in range");
    }
    g
}

/// Canonical encoding of the free tree underlying `tree`: the rooted
/// canonical string at the centroid, or the sorted pair of half-strings for
/// a bicentroidal tree. Equal keys iff the free trees are isomorphic.
pub(crate) fn free_tree_key(tree: &Graph) -> String {
    let centroids = centroids(tree);
    match centroids[..] {
        [c] => rooted_string(tree, c, usize::MAX),
        [c1, c2] => {
            let a = rooted_string(tree, c1, c2);
            let b = rooted_string(tree, c2, c1);
            if a <= b {
                format!("{a}{b}")
            } else {
                format!("{b}{a}")
            }
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
}

/// AHU-style canonical string of the subtree rooted at `v`, entered from
/// `parent` (usize::MAX for the root).
fn rooted_string(tree: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = tree
        .closed_neighborhood(v)
        .expect("vertex in range")
        .iter()
        .filter(|&u| u != v && u != parent)
        .map(|u| rooted_string(tree, u, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// The one or two vertices minimizing the largest component left by their
/// removal.
fn centroids(tree: &Graph) -> Vec<usize> {
    let n = tree.order();
    if n == 1 {
        return vec![0];
    }
    let mut subtree = vec![0usize; n];
    let mut worst = vec![0usize; n];
    // iterative post-order from vertex 0
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut seen = bit(0);
    while let Some(v) = stack.pop() {
        order.push(v);
        let mut nbrs = tree.row(v) & !seen;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            seen |= bit(u);
            parent[u] = v;
            stack.push(u);
        }
    }
    for &v in order.iter().rev() {
        subtree[v] += 1;
        let mut max_child = 0;
        let mut nbrs = tree.row(v);
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if parent[u] == v {
                max_child = max_child.max(subtree[u]);
            }
        }
        worst[v] = max_child.max(n - 1 - (subtree[v] - 1));
        if parent[v] != usize::MAX {
            subtree[parent[v]] += subtree[v];
        }
    }
    let best = *worst.iter().min().expect("nonempty tree");
    (0..n).filter(|&v| worst[v] == best).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    #[test]
    fn graph_class_counts_match_known_table() {
        let expected = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(gen_graphs(i + 1).unwrap().len(), count, "order {}", i + 1);
        }
    }

    #[test]
    fn generated_graphs_match_labeled_brute_force_dedup() {
        // all 2^(n choose 2) labeled graphs, deduplicated by canonical form
        for n in 1..=5usize {
            let nbits = n * (n - 1) / 2;
            let mut forms = std::collections::HashSet::new();
            for bits in 0u64..1 << nbits {
                let mut g = Graph::empty(n).unwrap();
                let mut idx = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits >> idx & 1 == 1 {
                            g.add_edge(i, j).unwrap();
                        }
                        idx += 1;
                    }
                }
                forms.insert(canonical_form(&g).unwrap());
            }
            let generated: std::collections::HashSet<_> = gen_graphs(n)
                .unwrap()
                .iter()
                .map(|g| canonical_form(g).unwrap())
                .collect();
            assert_eq!(generated, forms, "order {n}");
        }
    }

    #[test]
    fn generator_rejects_out_of_range_orders() {
        assert!(matches!(gen_graphs(0), Err(Error::GenGraphOrder { .. })));
        assert!(matches!(gen_graphs(10), Err(Error::GenGraphOrder { .. })));
        assert!(matches!(gen_trees(17), Err(Error::GenTreeOrder { .. })));
    }

    #[test]
    fn generation_is_deterministic() {
        let a = gen_graphs(6).unwrap();
        let b = gen_graphs(6).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rooted_tree_counts_match_known_table() {
        let expected = [1usize, 1, 2, 4, 9, 20, 48, 115, 286];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(LevelSequences::new(i + 1).count(), count, "order {}", i + 1);
        }
    }

    #[test]
    fn free_tree_counts_match_known_table() {
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(gen_trees(i + 1).unwrap().len(), count, "order {}", i + 1);
        }
    }

    #[test]
    fn generated_trees_are_trees() {
        for n in 1..=10 {
            for t in gen_trees(n).unwrap() {
                assert_eq!(t.order(), n);
                assert!(t.is_tree());
            }
        }
    }

    #[test]
    fn trees_match_prufer_enumeration_dedup() {
        // independent oracle: decode every Prüfer sequence and deduplicate
        // by canonical form
        for n in 3..=7usize {
            let mut forms = std::collections::HashSet::new();
            let total = (n as u64).pow(n as u32 - 2);
            for code in 0..total {
                let mut seq = Vec::with_capacity(n - 2);
                let mut c = code;
                for _ in 0..n - 2 {
                    seq.push((c % n as u64) as usize);
                    c /= n as u64;
                }
                forms.insert(canonical_form(&prufer_decode(&seq, n)).unwrap());
            }
            let generated: std::collections::HashSet<_> = gen_trees(n)
                .unwrap()
                .iter()
                .map(|t| canonical_form(t).unwrap())
                .collect();
            assert_eq!(generated, forms, "order {n}");
        }
    }

    fn prufer_decode(seq: &[usize], n: usize) -> Graph {
        let mut degree = vec![1usize; n];
        for &v in seq {
            degree[v] += 1;
        }
        let mut g = Graph::empty(n).unwrap();
        for &v in seq {
            let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
            g.add_edge(leaf, v).unwrap();
            degree[leaf] -= 1;
            degree[v] -= 1;
        }
        let rest: Vec<_> = (0..n).filter(|&u| degree[u] == 1).collect();
        g.add_edge(rest[0], rest[1]).unwrap();
        g
    }

    #[test]
    fn centroid_examples() {
        // path on 5: single centroid at the middle
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(centroids(&p5), vec![2]);
        // path on 4: bicentroidal
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(centroids(&p4), vec![1, 2]);
        // star: the center
        let star = Graph::complete(1).unwrap().join(&Graph::empty(5).unwrap()).unwrap();
        assert_eq!(centroids(&star), vec![0]);
    }
}
