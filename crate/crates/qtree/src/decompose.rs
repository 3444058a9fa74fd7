//! The decomposition algorithm: quantum automorphism groups of trees,
//! rooted trees, and forests of rooted trees as normalized symbolic
//! expressions.
//!
//! For a rooted tree, deleting the root leaves a forest of rooted subtrees;
//! grouping those into isomorphism classes with multiplicities turns the
//! group into a free product over classes of free wreath products by the
//! class sizes. A leafless root contributes the trivial group, and an
//! unrooted tree reduces to the rooted case by rooting at its center. The
//! recursion is memoized per subtree shape, so repeated subtrees cost
//! nothing extra and the whole computation is polynomial.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use num_bigint::BigUint;

use crate::canon::ahu_code;
use crate::center::{center_by_eccentricity, rootify, CenterResult, Rootification};
use crate::expr::{classical_order, is_classical, normalize, GroupExpr};
use crate::graph::{ColoredGraph, Graph, RootedForest, RootedTree, TreeError};
use crate::refine::{color_refinement, Partition};

/// Full analysis record for one tree.
#[derive(Debug, Clone)]
pub struct TreeReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub center: CenterResult,
    pub rootification: Rootification,
    /// Normalized quantum automorphism group expression.
    pub qut: GroupExpr,
    /// Exact order of the classical automorphism group.
    pub classical_order: BigUint,
    /// True iff the quantum group differs from the classical one.
    pub quantum_symmetry: bool,
    /// Stable color-refinement partition of the analyzed colored graph.
    pub refinement: Partition,
}

/// Quantum automorphism group of a rooted tree.
///
/// Runs bottom-up over the tree once, interning subtree shapes so the
/// expression for each isomorphism class of subtrees is built a single
/// time.
pub fn qut_rooted(rt: &RootedTree) -> GroupExpr {
    let (children, order) = rt.bfs_children();
    let n = rt.tree().vertex_count();
    let mut shape_ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut shape_of: Vec<usize> = vec![usize::MAX; n];
    let mut expr_of_shape: Vec<GroupExpr> = Vec::new();
    for &v in order.iter().rev() {
        let mut child_shapes: Vec<usize> = children[v].iter().map(|&c| shape_of[c]).collect();
        child_shapes.sort_unstable();
        let next_id = expr_of_shape.len();
        match shape_ids.entry(child_shapes) {
            Entry::Occupied(entry) => shape_of[v] = *entry.get(),
            Entry::Vacant(entry) => {
                let expr = {
                    let shapes = entry.key();
                    let mut factors = Vec::new();
                    let mut i = 0;
                    while i < shapes.len() {
                        let mut j = i + 1;
                        while j < shapes.len() && shapes[j] == shapes[i] {
                            j += 1;
                        }
                        factors.push(GroupExpr::wreath(
                            expr_of_shape[shapes[i]].clone(),
                            j - i,
                        ));
                        i = j;
                    }
                    normalize(&GroupExpr::FreeProd(factors))
                };
                entry.insert(next_id);
                shape_of[v] = next_id;
                expr_of_shape.push(expr);
            }
        }
    }
    expr_of_shape[shape_of[rt.root()]].clone()
}

/// Quantum automorphism group of an unrooted tree, through its
/// rootification.
pub fn qut_tree(t: &Graph) -> Result<GroupExpr, TreeError> {
    Ok(qut_rooted(&rootify(t)?.rooted))
}

/// Quantum automorphism group of a forest of rooted trees: components are
/// grouped into isomorphism classes, each class of size `m` contributing a
/// free wreath product by `m`, and non-isomorphic classes combining as a
/// free product. The empty forest gives the trivial group.
pub fn qut_forest(f: &RootedForest) -> GroupExpr {
    let mut by_code: Vec<(String, RootedTree, usize)> = Vec::new();
    for component in f.component_trees() {
        let code = ahu_code(&component).as_str().to_string();
        match by_code.iter_mut().find(|(c, _, _)| *c == code) {
            Some((_, _, count)) => *count += 1,
            None => by_code.push((code, component, 1)),
        }
    }
    by_code.sort_by(|a, b| a.0.cmp(&b.0));
    let factors: Vec<GroupExpr> = by_code
        .into_iter()
        .map(|(_, rep, count)| GroupExpr::wreath(qut_rooted(&rep), count))
        .collect();
    normalize(&GroupExpr::FreeProd(factors))
}

/// Joins a forest of rooted trees into one rooted tree by attaching every
/// root to a single new root (the last vertex id). The resulting rooted
/// tree has the same quantum automorphism group as the forest.
pub fn join_forest(f: &RootedForest) -> RootedTree {
    let n = f.graph().vertex_count();
    let mut edges = f.graph().edges();
    for &r in f.roots() {
        edges.push((r, n));
    }
    let tree = Graph::from_edges(n + 1, &edges).expect("joining roots keeps the graph simple");
    RootedTree::new(tree, n).expect("joining a forest of rooted trees yields a tree")
}

fn is_endpoint_rooted_path(rt: &RootedTree) -> bool {
    rt.tree().degree(rt.root()) <= 1
        && rt.tree().vertices().all(|v| rt.tree().degree(v) <= 2)
}

/// Builds an unrooted tree whose quantum automorphism group equals that of
/// the given rooted tree.
///
/// A path rooted at an endpoint has trivial quantum automorphism group, so
/// it maps to the one-vertex tree. Otherwise the tree is padded with a
/// disjoint path of `2|V|` edges rooted at one of its leaves, and both
/// roots are attached to one new vertex; the padding path is long enough
/// to capture the center, which pins the construction apart under
/// rootification.
pub fn rooted_to_tree(rt: &RootedTree) -> Graph {
    if is_endpoint_rooted_path(rt) {
        return Graph::empty(1);
    }
    let t = rt.tree().vertex_count();
    let path_vertices = 2 * t + 1;
    let join = t + path_vertices;
    let mut edges = rt.tree().edges();
    for i in 0..path_vertices - 1 {
        edges.push((t + i, t + i + 1));
    }
    edges.push((rt.root(), join));
    edges.push((t, join)); // the path is rooted at its first vertex, a leaf
    Graph::from_edges(join + 1, &edges).expect("gadget is a tree")
}

/// Analyzes an unrooted tree: center, rootification, group expression,
/// classical order, quantum-symmetry verdict, and the refinement partition
/// of the (uncolored) input.
pub fn analyze(t: &Graph) -> Result<TreeReport, TreeError> {
    let center = center_by_eccentricity(t)?;
    let rootification = rootify(t)?;
    let qut = qut_rooted(&rootification.rooted);
    let order = classical_order(&qut);
    let quantum_symmetry = !is_classical(&qut);
    let refinement = color_refinement(&ColoredGraph::uniform(t.clone()));
    Ok(TreeReport {
        vertex_count: t.vertex_count(),
        edge_count: t.edge_count(),
        center,
        rootification,
        qut,
        classical_order: order,
        quantum_symmetry,
        refinement,
    })
}

/// Analyzes a tree rooted at a caller-chosen vertex instead of the center.
/// The report's refinement partition is taken over the root-colored graph.
pub fn analyze_rooted(rt: &RootedTree) -> TreeReport {
    let center = center_by_eccentricity(rt.tree()).expect("rooted trees are valid trees");
    let qut = qut_rooted(rt);
    let order = classical_order(&qut);
    let quantum_symmetry = !is_classical(&qut);
    let refinement = color_refinement(&rt.to_colored());
    TreeReport {
        vertex_count: rt.tree().vertex_count(),
        edge_count: rt.tree().edge_count(),
        center: center.clone(),
        rootification: Rootification {
            rooted: rt.clone(),
            subdivided: false,
            original_center: center.center,
        },
        qut,
        classical_order: order,
        quantum_symmetry,
        refinement,
    }
}
