//! Sweep all trees up to a size and tabulate how many have quantum
//! symmetry. The fraction climbs steadily: almost all large trees are
//! quantum-symmetric, and the census shows that already at desk scale.
//!
//! ```text
//! cargo run --release -p qtree --example quantum_census
//! ```

use qtree::run_census;

fn main() {
    let table = run_census(12).expect("in range");
    print!("{}", table.to_tsv());
    for warning in &table.warnings {
        eprintln!("warning: {warning}");
    }
    let last = table.rows.last().expect("nonempty");
    println!(
        "\nat n = {}: {}/{} classes have quantum symmetry",
        last.n, last.quantum, last.total
    );
}
