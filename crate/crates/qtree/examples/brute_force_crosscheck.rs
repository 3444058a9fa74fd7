//! The single most important identity in the repository, run live: for
//! every tree with up to eight vertices, the classical order of the
//! decomposed group expression equals the brute-force automorphism count.
//!
//! ```text
//! cargo run -p qtree --example brute_force_crosscheck
//! ```

use num_bigint::BigUint;
use qtree::oracle::{all_free_trees, brute_automorphisms, brute_orbits};
use qtree::{classical_order, color_refinement, qut_tree, ColoredGraph};

fn main() {
    for n in 1..=8 {
        let mut checked = 0;
        for tree in all_free_trees(n).expect("in range") {
            let expr = qut_tree(&tree).expect("tree");
            let x = ColoredGraph::uniform(tree);
            let autos = brute_automorphisms(&x).expect("small enough");
            assert_eq!(
                classical_order(&expr),
                BigUint::from(autos.len()),
                "decomposition disagrees with brute force"
            );
            // The refinement partition matches the orbit partition too.
            assert_eq!(
                color_refinement(&x).classes(),
                brute_orbits(&x).expect("small enough").classes()
            );
            checked += 1;
        }
        println!("n = {n}: verified {checked} isomorphism classes");
    }
    println!("classical order of the expression = |Aut| on every tree checked");
}
