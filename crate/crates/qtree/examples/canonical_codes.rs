//! AHU canonical codes: equal codes mean isomorphic rooted trees, and the
//! code of the rootification decides isomorphism of unrooted trees. For
//! trees this also settles quantum isomorphism, which coincides with
//! isomorphism on forests.
//!
//! ```text
//! cargo run -p qtree --example canonical_codes
//! ```

use qtree::{ahu_code, child_classes, parse_edge_list, tree_isomorphic, RootedTree};

fn main() {
    let path = parse_edge_list("0 1\n1 2").expect("valid edge list");
    for root in 0..3 {
        let rt = RootedTree::new(path.clone(), root).expect("valid root");
        println!("P3 rooted at {root}: {}", ahu_code(&rt));
    }

    // Relabeling never changes the code.
    let scrambled = parse_edge_list("b a\nc b").expect("valid edge list");
    let original = RootedTree::new(path.clone(), 0).expect("valid root");
    let relabeled = RootedTree::new(scrambled, 1).expect("valid root");
    assert_eq!(ahu_code(&original), ahu_code(&relabeled));

    // Child subtrees grouped into isomorphism classes with multiplicities.
    let tree = parse_edge_list("r a\nr b\nr c\na x\na y\nb u\nb v").expect("valid edge list");
    let rooted = RootedTree::new(tree, 0).expect("valid root");
    println!("child classes at the root:");
    for class in &child_classes(&rooted).classes {
        println!(
            "  {} x {} headed by {:?}",
            class.multiplicity,
            ahu_code(&class.representative),
            class.members
        );
    }

    // Unrooted isomorphism via canonical rooting at the center.
    let a = parse_edge_list("0 1\n1 2\n2 3").expect("valid edge list");
    let b = parse_edge_list("d c\nb c\nb a").expect("valid edge list");
    let star = parse_edge_list("0 1\n0 2\n0 3").expect("valid edge list");
    println!("P4 ~ relabeled P4: {}", tree_isomorphic(&a, &b).expect("trees"));
    println!("P4 ~ star: {}", tree_isomorphic(&a, &star).expect("trees"));
}
