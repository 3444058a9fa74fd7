//! Quantum automorphism groups of trees.
//!
//! Every tree's quantum automorphism group can be built from the trivial
//! group using free products and free wreath products with quantum
//! symmetric groups. This crate computes that expression for any finite
//! tree, along with the exact order of the classical automorphism group, a
//! quantum-symmetry verdict, and the supporting machinery: Jordan centers
//! and rootification, AHU canonical codes, color refinement, and the
//! colored-graph surgeries the construction rests on. A brute-force oracle
//! module provides independent ground truth at small sizes.
//!
//! ```
//! use qtree::{analyze, parse_edge_list};
//!
//! // A star with four leaves.
//! let tree = parse_edge_list("0 1\n0 2\n0 3\n0 4").unwrap();
//! let report = analyze(&tree).unwrap();
//! assert_eq!(report.qut.to_string(), "S4+");
//! assert_eq!(report.classical_order.to_string(), "24");
//! assert!(report.quantum_symmetry);
//! ```
//!
//! The `examples/` directory walks through each capability; the `qtree`
//! binary exposes the same operations as subcommands.

pub mod canon;
pub mod census;
pub mod center;
pub mod cli;
pub mod decompose;
pub mod expr;
pub mod graph;
pub mod oracle;
pub mod refine;
pub mod surgery;

pub use canon::{ahu_code, child_classes, rooted_isomorphic, tree_isomorphic, CanonCode};
pub use census::{run_census, CensusTable};
pub use center::{
    center_by_eccentricity, center_by_leaf_stripping, leaf_stripping_layers, rootify,
    CenterResult, Rootification,
};
pub use decompose::{analyze, qut_forest, qut_rooted, qut_tree, rooted_to_tree, TreeReport};
pub use expr::{classical_order, is_classical, normalize, parse_expr, GroupExpr};
pub use graph::{
    parse_edge_list, parse_edge_list_labeled, ColoredGraph, Graph, RootedForest, RootedTree,
};
pub use refine::{color_refinement, fractionally_isomorphic, refine_induced, Partition};
