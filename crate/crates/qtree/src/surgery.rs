//! Colored-graph modifications that preserve the quantum automorphism
//! group, with checked preconditions.
//!
//! The four basic moves are: completing an independent union of color
//! classes to a clique, joining two such sets by a complete bipartite
//! graph, recoloring an orbit-closed set with a fresh color, and adding an
//! isolated vertex in a fresh color. Each is an equivalence on the defining
//! relations, so the inverse moves (deleting a clique, merging a color
//! back) are exposed as well.
//!
//! Orbit closure itself is not computable, so the recoloring precondition
//! is checked against the color-refinement partition, which is a
//! coarse-graining of the quantum orbits and therefore a sound sufficient
//! condition.

use thiserror::Error;

use crate::graph::{ColoredGraph, Graph};
use crate::refine::color_refinement;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("vertex sets overlap")]
    Overlap,
    #[error("vertex set is not independent")]
    NotIndependent,
    #[error("vertex set is not a clique")]
    NotClique,
    #[error("vertex set is not a union of color classes")]
    NotColorClassUnion,
    #[error("vertex set is not monochromatic")]
    NotMonochromatic,
    #[error("vertex set is not a union of refinement classes")]
    NotOrbitClosed,
    #[error("color {0} is already in use")]
    ColorInUse(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
}

fn checked_set(x: &ColoredGraph, s: &[usize]) -> Result<Vec<usize>, SurgeryError> {
    let n = x.graph().vertex_count();
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&v) = sorted.iter().find(|&&v| v >= n) {
        return Err(SurgeryError::OutOfRange(v));
    }
    Ok(sorted)
}

fn is_independent(g: &Graph, s: &[usize]) -> bool {
    s.iter()
        .all(|&u| s.iter().all(|&v| u >= v || !g.has_edge(u, v)))
}

fn is_clique(g: &Graph, s: &[usize]) -> bool {
    s.iter()
        .all(|&u| s.iter().all(|&v| u >= v || g.has_edge(u, v)))
}

fn is_color_class_union(x: &ColoredGraph, s: &[usize]) -> bool {
    let in_s = |v: usize| s.binary_search(&v).is_ok();
    x.graph()
        .vertices()
        .all(|v| !in_s(v) || x.graph().vertices().all(|u| x.color(u) != x.color(v) || in_s(u)))
}

fn with_edges(x: &ColoredGraph, edges: Vec<(usize, usize)>) -> ColoredGraph {
    let g = Graph::from_edges(x.graph().vertex_count(), &edges)
        .expect("surgery preserves simplicity");
    ColoredGraph::new(g, x.colors().to_vec())
}

/// Joins every pair inside `s`. Requires `s` independent and a union of
/// whole color classes; colors are unchanged.
pub fn add_clique(x: &ColoredGraph, s: &[usize]) -> Result<ColoredGraph, SurgeryError> {
    let s = checked_set(x, s)?;
    if !is_independent(x.graph(), &s) {
        return Err(SurgeryError::NotIndependent);
    }
    if !is_color_class_union(x, &s) {
        return Err(SurgeryError::NotColorClassUnion);
    }
    let mut edges = x.graph().edges();
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            edges.push((u, v));
        }
    }
    Ok(with_edges(x, edges))
}

/// Deletes every edge inside `s` — the exact inverse of [`add_clique`].
/// Requires `s` to induce a clique and to be a union of color classes.
pub fn remove_clique(x: &ColoredGraph, s: &[usize]) -> Result<ColoredGraph, SurgeryError> {
    let s = checked_set(x, s)?;
    if !is_clique(x.graph(), &s) {
        return Err(SurgeryError::NotClique);
    }
    if !is_color_class_union(x, &s) {
        return Err(SurgeryError::NotColorClassUnion);
    }
    let in_s = |v: usize| s.binary_search(&v).is_ok();
    let mut edges = x.graph().edges();
    edges.retain(|&(u, v)| !(in_s(u) && in_s(v)));
    Ok(with_edges(x, edges))
}

/// Adds all edges between `s` and `t`. The sets must be disjoint, their
/// union independent, and each a union of whole color classes.
pub fn add_biclique(
    x: &ColoredGraph,
    s: &[usize],
    t: &[usize],
) -> Result<ColoredGraph, SurgeryError> {
    let s = checked_set(x, s)?;
    let t = checked_set(x, t)?;
    if s.iter().any(|v| t.binary_search(v).is_ok()) {
        return Err(SurgeryError::Overlap);
    }
    let mut union = s.clone();
    union.extend_from_slice(&t);
    union.sort_unstable();
    if !is_independent(x.graph(), &union) {
        return Err(SurgeryError::NotIndependent);
    }
    if !is_color_class_union(x, &s) || !is_color_class_union(x, &t) {
        return Err(SurgeryError::NotColorClassUnion);
    }
    let mut edges = x.graph().edges();
    for &u in &s {
        for &v in &t {
            edges.push((u.min(v), u.max(v)));
        }
    }
    Ok(with_edges(x, edges))
}

fn recolor_inner(
    x: &ColoredGraph,
    s: &[usize],
    fresh_color: usize,
    check_orbit_closure: bool,
) -> Result<ColoredGraph, SurgeryError> {
    let s = checked_set(x, s)?;
    if x.uses_color(fresh_color) {
        return Err(SurgeryError::ColorInUse(fresh_color));
    }
    if let Some((&first, rest)) = s.split_first() {
        if rest.iter().any(|&v| x.color(v) != x.color(first)) {
            return Err(SurgeryError::NotMonochromatic);
        }
    }
    if check_orbit_closure && !color_refinement(x).is_union_of_classes(&s) {
        return Err(SurgeryError::NotOrbitClosed);
    }
    let mut colors = x.colors().to_vec();
    for &v in &s {
        colors[v] = fresh_color;
    }
    Ok(ColoredGraph::new(x.graph().clone(), colors))
}

/// Recolors `s` with an unused color. Requires `s` monochromatic and a
/// union of refinement classes (the computable stand-in for "union of
/// quantum orbits").
pub fn recolor(
    x: &ColoredGraph,
    s: &[usize],
    fresh_color: usize,
) -> Result<ColoredGraph, SurgeryError> {
    recolor_inner(x, s, fresh_color, true)
}

/// [`recolor`] without the orbit-closure check, for callers that have
/// established closure by other means.
pub fn recolor_unchecked(
    x: &ColoredGraph,
    s: &[usize],
    fresh_color: usize,
) -> Result<ColoredGraph, SurgeryError> {
    recolor_inner(x, s, fresh_color, false)
}

/// Merges the color of `s` into `target_color` — the inverse of
/// [`recolor`]. Requires `s` to be exactly one whole color class. The
/// orbit-closure condition lives on the *result* (where `s` is no longer
/// distinguished by color), so it is checked there.
pub fn merge_color(
    x: &ColoredGraph,
    s: &[usize],
    target_color: usize,
) -> Result<ColoredGraph, SurgeryError> {
    let s = checked_set(x, s)?;
    if let Some((&first, rest)) = s.split_first() {
        if rest.iter().any(|&v| x.color(v) != x.color(first)) {
            return Err(SurgeryError::NotMonochromatic);
        }
    }
    if !is_color_class_union(x, &s) {
        return Err(SurgeryError::NotColorClassUnion);
    }
    let mut colors = x.colors().to_vec();
    for &v in &s {
        colors[v] = target_color;
    }
    let merged = ColoredGraph::new(x.graph().clone(), colors);
    if !color_refinement(&merged).is_union_of_classes(&s) {
        return Err(SurgeryError::NotOrbitClosed);
    }
    Ok(merged)
}

/// Appends one isolated vertex carrying an unused color.
pub fn add_isolated(x: &ColoredGraph, fresh_color: usize) -> Result<ColoredGraph, SurgeryError> {
    if x.uses_color(fresh_color) {
        return Err(SurgeryError::ColorInUse(fresh_color));
    }
    let n = x.graph().vertex_count();
    let g = Graph::from_edges(n + 1, &x.graph().edges()).expect("edges unchanged");
    let mut colors = x.colors().to_vec();
    colors.push(fresh_color);
    Ok(ColoredGraph::new(g, colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path_graph;

    fn uniform(g: Graph) -> ColoredGraph {
        ColoredGraph::uniform(g)
    }

    #[test]
    fn add_clique_makes_triangle() {
        let x = uniform(Graph::empty(3));
        let y = add_clique(&x, &[0, 1, 2]).unwrap();
        assert_eq!(y.graph().edge_count(), 3);
        assert_eq!(y.colors(), x.colors());
    }

    #[test]
    fn add_clique_singleton_is_identity() {
        let x = ColoredGraph::new(path_graph(3), vec![0, 1, 0]);
        // {1} is the whole color-1 class and trivially independent.
        assert_eq!(add_clique(&x, &[1]).unwrap(), x);
    }

    #[test]
    fn add_clique_rejects_existing_edge() {
        let x = uniform(path_graph(2));
        assert_eq!(add_clique(&x, &[0, 1]), Err(SurgeryError::NotIndependent));
    }

    #[test]
    fn add_clique_rejects_partial_color_class() {
        let x = uniform(Graph::empty(3));
        assert_eq!(
            add_clique(&x, &[0, 1]),
            Err(SurgeryError::NotColorClassUnion)
        );
    }

    #[test]
    fn remove_clique_inverts_add_clique() {
        let x = ColoredGraph::new(Graph::empty(4), vec![0, 0, 0, 1]);
        let y = add_clique(&x, &[0, 1, 2]).unwrap();
        assert_eq!(remove_clique(&y, &[0, 1, 2]).unwrap(), x);
        assert_eq!(remove_clique(&x, &[0, 1, 2]), Err(SurgeryError::NotClique));
    }

    #[test]
    fn add_biclique_examples() {
        // Two roots (color 1) and one fresh vertex (color 2), as in the
        // forest-joining step.
        let g = Graph::from_edges(5, &[(1, 0), (3, 2)]).unwrap();
        let x = ColoredGraph::new(g, vec![0, 1, 0, 1, 2]);
        let y = add_biclique(&x, &[1, 3], &[4]).unwrap();
        assert!(y.graph().has_edge(1, 4));
        assert!(y.graph().has_edge(3, 4));
        assert_eq!(y.graph().edge_count(), 4);

        // Empty side: unchanged graph.
        assert_eq!(add_biclique(&x, &[], &[4]).unwrap(), x);
        // Overlapping sides are rejected.
        assert_eq!(
            add_biclique(&x, &[4], &[4]),
            Err(SurgeryError::Overlap)
        );
    }

    #[test]
    fn add_biclique_rejects_edges_inside_union() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let x = ColoredGraph::new(g, vec![0, 0, 1]);
        assert_eq!(
            add_biclique(&x, &[0, 1], &[2]),
            Err(SurgeryError::NotIndependent)
        );
    }

    #[test]
    fn recolor_center_of_path() {
        // P5 has center {2}; its refinement class is {2}.
        let x = uniform(path_graph(5));
        let y = recolor(&x, &[2], 1).unwrap();
        assert_eq!(y.color(2), 1);
        assert_eq!(y.graph(), x.graph());
    }

    #[test]
    fn recolor_empty_set_is_identity() {
        let x = uniform(path_graph(3));
        assert_eq!(recolor(&x, &[], 7).unwrap(), x);
    }

    #[test]
    fn recolor_rejects_half_an_orbit() {
        let x = uniform(path_graph(3));
        assert_eq!(recolor(&x, &[0], 1), Err(SurgeryError::NotOrbitClosed));
        // The unchecked variant allows it.
        assert!(recolor_unchecked(&x, &[0], 1).is_ok());
    }

    #[test]
    fn recolor_rejects_used_color() {
        let x = uniform(path_graph(3));
        assert_eq!(recolor(&x, &[1], 0), Err(SurgeryError::ColorInUse(0)));
    }

    #[test]
    fn recolor_rejects_mixed_colors() {
        let x = ColoredGraph::new(Graph::empty(2), vec![0, 1]);
        assert_eq!(
            recolor(&x, &[0, 1], 2),
            Err(SurgeryError::NotMonochromatic)
        );
    }

    #[test]
    fn merge_color_inverts_recolor() {
        let x = uniform(path_graph(5));
        let y = recolor(&x, &[2], 1).unwrap();
        assert_eq!(merge_color(&y, &[2], 0).unwrap(), x);
    }

    #[test]
    fn merge_color_rejects_partial_class() {
        let x = ColoredGraph::new(Graph::empty(3), vec![1, 1, 0]);
        assert_eq!(
            merge_color(&x, &[0], 0),
            Err(SurgeryError::NotColorClassUnion)
        );
    }

    #[test]
    fn add_isolated_examples() {
        let x = uniform(Graph::empty(0));
        let y = add_isolated(&x, 0).unwrap();
        assert_eq!(y.graph().vertex_count(), 1);
        assert_eq!(y.colors(), &[0]);

        let x = uniform(path_graph(3));
        let y = add_isolated(&x, 1).unwrap();
        assert_eq!(y.graph().vertex_count(), 4);
        assert_eq!(y.graph().degree(3), 0);
        assert_eq!(add_isolated(&x, 0), Err(SurgeryError::ColorInUse(0)));
    }

    #[test]
    fn five_step_pipeline_reproduces_the_rootification() {
        // For every tree whose center is an edge: recolor the center,
        // delete the central edge, add an isolated root, join it to the
        // center pair, and merge the center back into the background
        // color. The result must be exactly the rootified tree with only
        // the root color-distinguished.
        use crate::center::rootify;
        use crate::oracle::all_free_trees;

        let mut covered = 0;
        for n in 2..=9 {
            for tree in all_free_trees(n).unwrap() {
                let rootification = rootify(&tree).unwrap();
                if !rootification.subdivided {
                    continue;
                }
                covered += 1;
                let center = rootification.original_center.clone();
                let x0 = uniform(tree.clone());
                let x1 = recolor(&x0, &center, 1).unwrap();
                let x2 = remove_clique(&x1, &center).unwrap();
                let x3 = add_isolated(&x2, 2).unwrap();
                let root = tree.vertex_count();
                let x4 = add_biclique(&x3, &center, &[root]).unwrap();
                let x5 = merge_color(&x4, &center, 0).unwrap();

                assert_eq!(x5.graph(), rootification.rooted.tree());
                let mut expected_colors = vec![0; root + 1];
                expected_colors[root] = 2;
                assert_eq!(x5.colors(), expected_colors.as_slice());
            }
        }
        assert!(covered > 40, "corpus exercised {} two-vertex centers", covered);
    }
}
