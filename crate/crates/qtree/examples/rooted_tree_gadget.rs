//! Every rooted tree has an unrooted companion with the same quantum
//! automorphism group: pad the tree with a long path, join both to a new
//! vertex, and let rootification rediscover the root. Paths rooted at an
//! endpoint are already trivial and map to the one-vertex tree.
//!
//! ```text
//! cargo run -p qtree --example rooted_tree_gadget
//! ```

use qtree::{parse_edge_list, qut_rooted, qut_tree, rooted_to_tree, RootedTree};

fn main() {
    // A star with three leaves, rooted at the hub.
    let star = parse_edge_list("0 1\n0 2\n0 3").expect("valid edge list");
    let rooted = RootedTree::new(star, 0).expect("valid root");
    let gadget = rooted_to_tree(&rooted);
    println!(
        "gadget for the rooted star: {} vertices, {} edges",
        gadget.vertex_count(),
        gadget.edge_count()
    );
    let direct = qut_rooted(&rooted);
    let via_gadget = qut_tree(&gadget).expect("gadget is a tree");
    println!("Qut of the rooted star:   {direct}");
    println!("Qut of the unrooted tree: {via_gadget}");
    assert_eq!(direct, via_gadget);

    // Endpoint-rooted paths carry no symmetry at all, so a single vertex
    // already has the same group.
    let path = parse_edge_list("0 1\n1 2\n2 3").expect("valid edge list");
    let endpoint_rooted = RootedTree::new(path, 0).expect("valid root");
    let collapsed = rooted_to_tree(&endpoint_rooted);
    println!(
        "endpoint-rooted P4 collapses to {} vertex (Qut = {})",
        collapsed.vertex_count(),
        qut_rooted(&endpoint_rooted)
    );
}
