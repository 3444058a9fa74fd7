//! Color refinement (the 1-dimensional Weisfeiler-Leman algorithm) and the
//! partition machinery built on it.
//!
//! The stable partition refines the input coloring so that two vertices
//! share a class iff they share a color and have equally many neighbors in
//! every class. It is a coarse-graining of the quantum orbits of the
//! colored graph, which makes it a sound (and computable) precondition
//! check for the orbit-closure hypotheses used elsewhere.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::ColoredGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RefineError {
    #[error("vertex set is not a union of refinement classes")]
    NotClassUnion,
}

/// A partition of (a subset of) a graph's vertices into classes.
///
/// Classes are sorted internally, disjoint, nonempty, and ordered by
/// smallest member; class ids are their positions in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<Option<usize>>,
}

impl Partition {
    /// Builds a partition from raw classes over vertex ids `< vertex_count`.
    pub fn from_classes(vertex_count: usize, mut classes: Vec<Vec<usize>>) -> Self {
        for class in &mut classes {
            class.sort_unstable();
        }
        classes.retain(|c| !c.is_empty());
        classes.sort_by_key(|c| c[0]);
        let mut class_of = vec![None; vertex_count];
        for (id, class) in classes.iter().enumerate() {
            for &v in class {
                debug_assert!(class_of[v].is_none(), "classes must be disjoint");
                class_of[v] = Some(id);
            }
        }
        Partition { classes, class_of }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class id of `v`, or `None` when `v` is outside the covered set.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.class_of.get(v).copied().flatten()
    }

    /// True iff `s` is exactly a union of whole classes.
    pub fn is_union_of_classes(&self, s: &[usize]) -> bool {
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut chosen = vec![false; self.classes.len()];
        for &v in &sorted {
            match self.class_of(v) {
                Some(id) => chosen[id] = true,
                None => return false,
            }
        }
        let expected: usize = chosen
            .iter()
            .zip(&self.classes)
            .filter(|(&c, _)| c)
            .map(|(_, class)| class.len())
            .sum();
        expected == sorted.len()
    }
}

/// Runs color refinement to its fixpoint and returns the stable partition.
///
/// Each round replaces a vertex's label by (old class, sorted multiset of
/// neighbor classes); class ids are re-canonicalized by smallest member
/// every round, so the result is label-independent and deterministic. The
/// fixpoint is reached in at most `|V|` rounds.
pub fn color_refinement(x: &ColoredGraph) -> Partition {
    let n = x.graph().vertex_count();
    let mut partition = Partition::from_classes(n, x.color_classes());
    loop {
        let refined = refine_once(x, &partition);
        if refined.classes == partition.classes {
            return partition;
        }
        partition = refined;
    }
}

fn refine_once(x: &ColoredGraph, p: &Partition) -> Partition {
    let n = x.graph().vertex_count();
    let mut groups: HashMap<(usize, Vec<usize>), Vec<usize>> = HashMap::new();
    for v in 0..n {
        let Some(own) = p.class_of(v) else { continue };
        let mut neighbor_classes: Vec<usize> = x
            .graph()
            .neighbors(v)
            .iter()
            .filter_map(|&u| p.class_of(u))
            .collect();
        neighbor_classes.sort_unstable();
        groups.entry((own, neighbor_classes)).or_default().push(v);
    }
    Partition::from_classes(n, groups.into_values().collect())
}

/// Refines the subgraph induced by `s` (with inherited colors), provided
/// `s` is a union of classes of the ambient refinement. The returned
/// partition is expressed in the original vertex ids and covers exactly `s`.
pub fn refine_induced(x: &ColoredGraph, s: &[usize]) -> Result<Partition, RefineError> {
    let ambient = color_refinement(x);
    if !ambient.is_union_of_classes(s) {
        return Err(RefineError::NotClassUnion);
    }
    let (sub, old_ids) = x.graph().induced_subgraph(s);
    let colors: Vec<usize> = old_ids.iter().map(|&v| x.color(v)).collect();
    let inner = color_refinement(&ColoredGraph::new(sub, colors));
    let classes = inner
        .classes()
        .iter()
        .map(|class| class.iter().map(|&v| old_ids[v]).collect())
        .collect();
    Ok(Partition::from_classes(x.graph().vertex_count(), classes))
}

/// Fractional isomorphism: refine the disjoint union and require every
/// stable class to contain equally many vertices of each side. Colors are
/// matched by id. On trees this coincides with isomorphism.
pub fn fractionally_isomorphic(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    let na = a.graph().vertex_count();
    let nb = b.graph().vertex_count();
    if na != nb {
        return false;
    }
    let mut edges = a.graph().edges();
    edges.extend(b.graph().edges().iter().map(|&(u, v)| (u + na, v + na)));
    let union = crate::graph::Graph::from_edges(na + nb, &edges)
        .expect("disjoint union of simple graphs is simple");
    let mut colors = a.colors().to_vec();
    colors.extend_from_slice(b.colors());
    let partition = color_refinement(&ColoredGraph::new(union, colors));
    partition.classes().iter().all(|class| {
        let from_a = class.iter().filter(|&&v| v < na).count();
        2 * from_a == class.len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path_graph, star_graph, ColoredGraph, Graph};

    fn uniform(g: Graph) -> ColoredGraph {
        ColoredGraph::uniform(g)
    }

    #[test]
    fn refinement_splits_p3_by_degree() {
        let p = color_refinement(&uniform(path_graph(3)));
        assert_eq!(p.classes(), &[vec![0, 2], vec![1]]);
    }

    #[test]
    fn refinement_of_star_and_p4() {
        let p = color_refinement(&uniform(star_graph(4)));
        assert_eq!(p.classes(), &[vec![0], vec![1, 2, 3, 4]]);

        let p = color_refinement(&uniform(path_graph(4)));
        assert_eq!(p.classes(), &[vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn refinement_respects_input_colors() {
        // Same path, ends colored apart: they must stay apart.
        let x = ColoredGraph::new(path_graph(3), vec![1, 0, 2]);
        let p = color_refinement(&x);
        assert_eq!(p.class_count(), 3);
    }

    #[test]
    fn refinement_is_stable() {
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        let x = uniform(g);
        let p = color_refinement(&x);
        // Re-coloring by the stable classes and refining again changes nothing.
        let colors: Vec<usize> = (0..7).map(|v| p.class_of(v).unwrap()).collect();
        let again = color_refinement(&ColoredGraph::new(x.graph().clone(), colors));
        assert_eq!(again.classes(), p.classes());
    }

    #[test]
    fn no_class_mixes_degrees() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        let p = color_refinement(&uniform(g.clone()));
        for class in p.classes() {
            let d = g.degree(class[0]);
            assert!(class.iter().all(|&v| g.degree(v) == d));
        }
    }

    #[test]
    fn union_of_classes_examples() {
        let p = color_refinement(&uniform(path_graph(3)));
        assert!(p.is_union_of_classes(&[1]));
        assert!(!p.is_union_of_classes(&[0]));
        let p = color_refinement(&uniform(star_graph(4)));
        assert!(p.is_union_of_classes(&[1, 2, 3, 4]));
    }

    #[test]
    fn induced_refinement_of_stripped_p5() {
        let x = uniform(path_graph(5));
        let p = refine_induced(&x, &[1, 2, 3]).unwrap();
        assert_eq!(p.classes(), &[vec![1, 3], vec![2]]);
        assert_eq!(p.class_of(0), None);
    }

    #[test]
    fn induced_refinement_identity_and_singleton() {
        let x = uniform(star_graph(4));
        let full = refine_induced(&x, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(full.classes(), color_refinement(&x).classes());
        let hub = refine_induced(&x, &[0]).unwrap();
        assert_eq!(hub.classes(), &[vec![0]]);
    }

    #[test]
    fn induced_refinement_rejects_partial_class() {
        let x = uniform(path_graph(3));
        assert_eq!(refine_induced(&x, &[0]), Err(RefineError::NotClassUnion));
    }

    #[test]
    fn fractional_isomorphism_examples() {
        let a = uniform(path_graph(4));
        let b = uniform(path_graph(4).relabeled(&[2, 0, 3, 1]));
        assert!(fractionally_isomorphic(&a, &b));
        assert!(!fractionally_isomorphic(
            &uniform(path_graph(4)),
            &uniform(star_graph(3))
        ));
        assert!(!fractionally_isomorphic(
            &uniform(path_graph(4)),
            &uniform(path_graph(5))
        ));
    }

    #[test]
    fn fractional_isomorphism_decides_isomorphism_on_trees() {
        // Exhaustive over all pairs from the n <= 8 corpus. Pairs of
        // different sizes are false on both sides by the size check.
        use crate::canon::tree_isomorphic;
        use crate::oracle::all_free_trees;
        for n in 1..=8 {
            let trees: Vec<Graph> = all_free_trees(n).unwrap().collect();
            for a in &trees {
                for b in &trees {
                    assert_eq!(
                        fractionally_isomorphic(&uniform(a.clone()), &uniform(b.clone())),
                        tree_isomorphic(a, b).unwrap(),
                        "fractional isomorphism diverges at n = {}",
                        n
                    );
                }
            }
        }
    }
}
