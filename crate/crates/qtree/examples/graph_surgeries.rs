//! The four colored-graph surgeries that leave the quantum automorphism
//! group untouched, composed into the pipeline that turns a tree with a
//! two-vertex center into its rootification.
//!
//! ```text
//! cargo run -p qtree --example graph_surgeries
//! ```

use qtree::surgery::{add_biclique, add_isolated, merge_color, recolor, remove_clique};
use qtree::{parse_edge_list, rootify, ColoredGraph};

fn main() {
    // An 8-vertex tree whose center is the edge {0, 4}.
    let tree = parse_edge_list("0 1\n1 2\n1 3\n0 4\n4 5\n5 6\n5 7").expect("valid edge list");
    let rooted = rootify(&tree).expect("tree");
    assert!(rooted.subdivided);
    let center = rooted.original_center.clone();
    println!("center: {center:?}");

    // Walk the five steps, printing the evolving edge and color data.
    let x0 = ColoredGraph::uniform(tree);
    let x1 = recolor(&x0, &center, 1).expect("center is orbit-closed");
    println!("recolored center -> colors {:?}", x1.colors());
    let x2 = remove_clique(&x1, &center).expect("central edge is a 2-clique color class");
    println!("central edge removed -> {} edges", x2.graph().edge_count());
    let x3 = add_isolated(&x2, 2).expect("fresh color");
    let root = x3.graph().vertex_count() - 1;
    println!("isolated root {root} added");
    let x4 = add_biclique(&x3, &center, &[root]).expect("joinable");
    println!("root joined -> {} edges", x4.graph().edge_count());
    let x5 = merge_color(&x4, &center, 0).expect("center is orbit-closed in the result");

    // The pipeline lands exactly on the rootified tree, with only the
    // root color-distinguished.
    assert_eq!(x5.graph(), rooted.rooted.tree());
    assert_eq!(x5.color(root), 2);
    println!("pipeline reproduces the rootification: {:?}", x5.graph().edges());
}
