//! Independent brute-force ground truth: automorphism enumeration for
//! colored graphs, orbit partitions, explicit isomorphism search, and
//! exhaustive generation of rooted and free trees.
//!
//! Everything here exists to check the fast paths, so the implementations
//! favor obviousness over speed. Sizes are guarded because automorphism
//! counts grow factorially; the default cap of 12 vertices can be raised
//! through the `QTREE_MAX_BRUTE` environment variable or the `_with_limit`
//! entry points.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::Rng;
use thiserror::Error;

use crate::canon::ahu_code;
use crate::center::center_by_leaf_stripping;
use crate::graph::{ColoredGraph, Graph, RootedTree};
use crate::refine::{color_refinement, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {vertices} vertices, above the brute-force limit {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("n = {n} is outside the supported range 1..={max}")]
    OutOfRange { n: usize, max: usize },
}

const GENERATOR_MAX_N: usize = 18;

/// Brute-force size cap: `QTREE_MAX_BRUTE` when set and parseable, else 12.
pub fn max_brute_default() -> usize {
    std::env::var("QTREE_MAX_BRUTE")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(12)
}

fn check_size(x: &ColoredGraph, limit: usize) -> Result<(), OracleError> {
    let vertices = x.graph().vertex_count();
    if vertices > limit {
        return Err(OracleError::TooLarge { vertices, limit });
    }
    Ok(())
}

fn automorphism_backtrack(x: &ColoredGraph, candidates: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = x.graph().vertex_count();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn recurse(
        x: &ColoredGraph,
        candidates: &[Vec<usize>],
        pos: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = image.len();
        if pos == n {
            out.push(image.clone());
            return;
        }
        'cands: for &cand in &candidates[pos] {
            if used[cand] {
                continue;
            }
            for (prev, &prev_image) in image.iter().enumerate().take(pos) {
                if x.graph().has_edge(pos, prev) != x.graph().has_edge(cand, prev_image) {
                    continue 'cands;
                }
            }
            image[pos] = cand;
            used[cand] = true;
            recurse(x, candidates, pos + 1, image, used, out);
            used[cand] = false;
            image[pos] = usize::MAX;
        }
    }

    recurse(x, candidates, 0, &mut image, &mut used, &mut out);
    out
}

/// All color- and adjacency-preserving permutations of `x`, as image
/// vectors in lexicographic order. Candidate images are pruned to the
/// refinement class of the source vertex, which no automorphism can leave.
pub fn brute_automorphisms_with_limit(
    x: &ColoredGraph,
    limit: usize,
) -> Result<Vec<Vec<usize>>, OracleError> {
    check_size(x, limit)?;
    let partition = color_refinement(x);
    let candidates: Vec<Vec<usize>> = x
        .graph()
        .vertices()
        .map(|v| {
            let class = partition.class_of(v).expect("full refinement covers V");
            partition.classes()[class].clone()
        })
        .collect();
    Ok(automorphism_backtrack(x, &candidates))
}

/// [`brute_automorphisms_with_limit`] at the default size cap.
pub fn brute_automorphisms(x: &ColoredGraph) -> Result<Vec<Vec<usize>>, OracleError> {
    brute_automorphisms_with_limit(x, max_brute_default())
}

/// Automorphism search pruned only by color and degree, with no use of
/// color refinement. Exists to cross-check the pruned search.
pub fn brute_automorphisms_unpruned(
    x: &ColoredGraph,
    limit: usize,
) -> Result<Vec<Vec<usize>>, OracleError> {
    check_size(x, limit)?;
    let candidates: Vec<Vec<usize>> = x
        .graph()
        .vertices()
        .map(|v| {
            x.graph()
                .vertices()
                .filter(|&u| x.color(u) == x.color(v) && x.graph().degree(u) == x.graph().degree(v))
                .collect()
        })
        .collect();
    Ok(automorphism_backtrack(x, &candidates))
}

/// Orbit partition of the brute-force automorphism group.
pub fn brute_orbits(x: &ColoredGraph) -> Result<Partition, OracleError> {
    brute_orbits_with_limit(x, max_brute_default())
}

pub fn brute_orbits_with_limit(x: &ColoredGraph, limit: usize) -> Result<Partition, OracleError> {
    let autos = brute_automorphisms_with_limit(x, limit)?;
    let n = x.graph().vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let root = find(parent, parent[v]);
            parent[v] = root;
        }
        parent[v]
    }
    for auto in &autos {
        for (v, &image) in auto.iter().enumerate() {
            let a = find(&mut parent, v);
            let b = find(&mut parent, image);
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let root = find(&mut parent, v);
        classes[root].push(v);
    }
    Ok(Partition::from_classes(n, classes))
}

/// Backtracking search for a color- and adjacency-preserving bijection
/// between two colored graphs. Candidates are pruned by color and degree
/// only, keeping this independent of both AHU codes and color refinement.
pub fn brute_isomorphic(
    a: &ColoredGraph,
    b: &ColoredGraph,
    limit: usize,
) -> Result<bool, OracleError> {
    check_size(a, limit)?;
    check_size(b, limit)?;
    let n = a.graph().vertex_count();
    if n != b.graph().vertex_count() || a.graph().edge_count() != b.graph().edge_count() {
        return Ok(false);
    }

    fn recurse(
        a: &ColoredGraph,
        b: &ColoredGraph,
        pos: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = image.len();
        if pos == n {
            return true;
        }
        'cands: for cand in 0..n {
            if used[cand]
                || a.color(pos) != b.color(cand)
                || a.graph().degree(pos) != b.graph().degree(cand)
            {
                continue;
            }
            for (prev, &prev_image) in image.iter().enumerate().take(pos) {
                if a.graph().has_edge(pos, prev) != b.graph().has_edge(cand, prev_image) {
                    continue 'cands;
                }
            }
            image[pos] = cand;
            used[cand] = true;
            if recurse(a, b, pos + 1, image, used) {
                return true;
            }
            used[cand] = false;
        }
        false
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(recurse(a, b, 0, &mut image, &mut used))
}

/// Rooted-tree isomorphism through the explicit search, with the roots
/// pinned by the rooted coloring.
pub fn brute_rooted_isomorphic(
    a: &RootedTree,
    b: &RootedTree,
    limit: usize,
) -> Result<bool, OracleError> {
    brute_isomorphic(&a.to_colored(), &b.to_colored(), limit)
}

/// Generates every rooted tree on `n` vertices, one per isomorphism class,
/// by level-sequence successor stepping. The root is always vertex 0 and
/// vertices are numbered in the depth-first order of the level sequence.
pub fn all_rooted_trees(n: usize) -> Result<RootedTreeGen, OracleError> {
    if n == 0 || n > GENERATOR_MAX_N {
        return Err(OracleError::OutOfRange {
            n,
            max: GENERATOR_MAX_N,
        });
    }
    Ok(RootedTreeGen {
        levels: None,
        n,
        done: false,
    })
}

pub struct RootedTreeGen {
    levels: Option<Vec<usize>>,
    n: usize,
    done: bool,
}

impl RootedTreeGen {
    fn tree_from_levels(levels: &[usize]) -> RootedTree {
        let n = levels.len();
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        // last_at_level[l] = most recent vertex seen on level l (1-based).
        let mut last_at_level = vec![usize::MAX; n + 2];
        last_at_level[1] = 0;
        for v in 1..n {
            let parent = last_at_level[levels[v] - 1];
            edges.push((parent, v));
            last_at_level[levels[v]] = v;
        }
        let tree = Graph::from_edges(n, &edges).expect("level sequence encodes a tree");
        RootedTree::new(tree, 0).expect("level sequence encodes a tree")
    }
}

impl Iterator for RootedTreeGen {
    type Item = RootedTree;

    fn next(&mut self) -> Option<RootedTree> {
        if self.done {
            return None;
        }
        match &mut self.levels {
            None => {
                // Lexicographically largest canonical sequence: the path.
                let levels: Vec<usize> = (1..=self.n).collect();
                self.levels = Some(levels);
            }
            Some(levels) => {
                // Successor rule: locate the rightmost entry above level 2,
                // truncate there, and tile the pattern that starts at its
                // parent.
                let Some(p) = (0..levels.len()).rev().find(|&i| levels[i] > 2) else {
                    self.done = true;
                    return None;
                };
                let q = (0..p)
                    .rev()
                    .find(|&i| levels[i] == levels[p] - 1)
                    .expect("a vertex above level 2 has a parent above level 1");
                for i in p..levels.len() {
                    levels[i] = levels[i - (p - q)];
                }
            }
        }
        Some(Self::tree_from_levels(self.levels.as_ref().expect("set above")))
    }
}

/// Generates every free tree on `n` vertices, one per isomorphism class,
/// by filtering the rooted stream down to trees whose root is the
/// canonical choice of center.
pub fn all_free_trees(n: usize) -> Result<impl Iterator<Item = Graph>, OracleError> {
    let rooted = all_rooted_trees(n)?;
    Ok(rooted.filter_map(|rt| {
        let tree = rt.tree();
        let center = center_by_leaf_stripping(tree).expect("generated graphs are trees");
        match *center.as_slice() {
            [z] => (z == 0).then(|| tree.clone()),
            [z1, z2] => {
                if z1 != 0 {
                    return None;
                }
                let at_root = ahu_code(&RootedTree::new(tree.clone(), 0).expect("tree"));
                let at_other = ahu_code(&RootedTree::new(tree.clone(), z2).expect("tree"));
                (at_root <= at_other).then(|| tree.clone())
            }
            _ => unreachable!("tree centers have one or two vertices"),
        }
    }))
}

/// Decodes a Pruefer sequence over `0..n` (length `n - 2`) into a labeled
/// tree on `n` vertices.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    assert!(n >= 1 && (n < 2 || seq.len() == n - 2), "sequence length must be n - 2");
    if n == 1 {
        return Graph::empty(1);
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    Graph::from_edges(n, &edges).expect("Pruefer decoding yields a tree")
}

/// All labeled trees on `n` vertices, by enumerating every Pruefer
/// sequence. There are `n^(n-2)` of them, so keep `n` small.
pub fn all_labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let total: usize = if n >= 3 { n.pow(n as u32 - 2) } else { 1 };
    (0..total).map(move |mut index| {
        let mut seq = vec![0usize; n.saturating_sub(2)];
        for slot in &mut seq {
            *slot = index % n;
            index /= n;
        }
        prufer_decode(n, &seq)
    })
}

/// A uniformly random labeled tree on `n` vertices via a random Pruefer
/// sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1);
    if n <= 2 {
        return path_like(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(n, &seq)
}

fn path_like(n: usize) -> Graph {
    crate::graph::path_graph(n)
}
