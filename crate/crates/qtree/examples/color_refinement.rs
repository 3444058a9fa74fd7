//! Color refinement: the stable partition, refinement of an induced
//! subgraph, and the fractional-isomorphism test. The stable classes
//! coarse-grain the quantum orbits, and on trees they match the
//! automorphism orbits exactly.
//!
//! ```text
//! cargo run -p qtree --example color_refinement
//! ```

use qtree::{
    color_refinement, fractionally_isomorphic, parse_edge_list, refine_induced, ColoredGraph,
};

fn main() {
    let tree = parse_edge_list("0 1\n1 2\n2 3\n3 4").expect("valid edge list");
    let x = ColoredGraph::uniform(tree);
    let partition = color_refinement(&x);
    println!("stable classes of P5: {:?}", partition.classes());

    // The survivors of one leaf-stripping round form a union of classes,
    // so the induced refinement is legal and stays expressed in the
    // original vertex ids.
    let inner = refine_induced(&x, &[1, 2, 3]).expect("class union");
    println!("refinement of the stripped core: {:?}", inner.classes());

    // Fractional isomorphism compares class censuses on the disjoint
    // union; for trees it agrees with isomorphism.
    let a = ColoredGraph::uniform(parse_edge_list("0 1\n1 2\n2 3").expect("ok"));
    let b = ColoredGraph::uniform(parse_edge_list("3 1\n1 0\n0 2").expect("ok"));
    let star = ColoredGraph::uniform(parse_edge_list("0 1\n0 2\n0 3").expect("ok"));
    println!("P4 ~f relabeled P4: {}", fractionally_isomorphic(&a, &b));
    println!("P4 ~f star: {}", fractionally_isomorphic(&a, &star));

    // Input colors are never merged: a colored path keeps its ends apart.
    let colored = ColoredGraph::new(parse_edge_list("0 1\n1 2").expect("ok"), vec![1, 0, 2]);
    println!(
        "colored P3 refines into {} classes",
        color_refinement(&colored).class_count()
    );
}
