//! Full analysis of a tree: center, rootification, quantum automorphism
//! group, classical order, and the quantum-symmetry verdict.
//!
//! ```text
//! cargo run -p qtree --example analyze_tree
//! ```

use qtree::{analyze, parse_edge_list};

fn report(name: &str, edges: &str) {
    let tree = parse_edge_list(edges).expect("valid edge list");
    let report = analyze(&tree).expect("input is a tree");
    println!("== {name}");
    println!("vertices {}, edges {}", report.vertex_count, report.edge_count);
    println!("radius {}, center {:?}", report.center.radius, report.center.center);
    println!(
        "rooted at {}{}",
        report.rootification.rooted.root(),
        if report.rootification.subdivided {
            " (fresh vertex on the central edge)"
        } else {
            ""
        }
    );
    println!("Qut  = {}", report.qut);
    println!("|Aut| = {}", report.classical_order);
    println!(
        "quantum symmetry: {}",
        if report.quantum_symmetry { "yes" } else { "no" }
    );
    println!();
}

fn main() {
    // A path: only the end-to-end flip survives, nothing quantum.
    report("path on 5 vertices", "0 1\n1 2\n2 3\n3 4");

    // The smallest tree with quantum symmetry: the star with four leaves.
    report("star with 4 leaves", "hub a\nhub b\nhub c\nhub d");

    // Two non-isomorphic branches that each contribute a swap: the group
    // is a free product once the tree is pinned at its central vertex.
    report(
        "double cherry on a spine",
        "r a\na x\na y\nr b\nb c\nc u\nc v\nr t",
    );
}
