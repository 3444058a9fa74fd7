//! Jordan centers two ways (eccentricities and iterated leaf removal),
//! leaf-stripping layers, and rootification.
//!
//! ```text
//! cargo run -p qtree --example center_and_rootification
//! ```

use qtree::{
    center_by_eccentricity, center_by_leaf_stripping, leaf_stripping_layers, parse_edge_list,
    rootify,
};

fn main() {
    let tree = parse_edge_list("0 1\n1 2\n2 3\n3 4\n2 5\n5 6").expect("valid edge list");

    let by_ecc = center_by_eccentricity(&tree).expect("tree");
    println!("eccentricities: {:?}", by_ecc.eccentricities);
    println!("radius {}, center {:?}", by_ecc.radius, by_ecc.center);

    let by_strip = center_by_leaf_stripping(&tree).expect("tree");
    println!("leaf stripping finds the same center: {:?}", by_strip);
    assert_eq!(by_ecc.center, by_strip);

    let (layers, survivors) = leaf_stripping_layers(&tree);
    for (round, layer) in layers.iter().enumerate() {
        println!("round {round} removes {layer:?}");
    }
    println!("survivors: {survivors:?}");

    // A two-vertex center forces a subdivision; the fresh vertex gets the
    // next unused id and becomes the root.
    let edge = parse_edge_list("0 1").expect("valid edge list");
    let r = rootify(&edge).expect("tree");
    println!(
        "single edge rootifies to {:?} rooted at {} (subdivided: {})",
        r.rooted.tree().edges(),
        r.rooted.root(),
        r.subdivided
    );
}
