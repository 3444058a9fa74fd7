//! The symbolic group algebra: normalization, printing and parsing,
//! classical orders, and the classicality predicate.
//!
//! ```text
//! cargo run -p qtree --example expression_algebra
//! ```

use qtree::{classical_order, is_classical, normalize, parse_expr, GroupExpr};

fn main() {
    // A raw product with trivial factors, a nested product, and a
    // one-copy wreath all collapse under normalization.
    let raw = GroupExpr::FreeProd(vec![
        GroupExpr::Triv,
        GroupExpr::wreath(GroupExpr::SnPlus(2), 1),
        GroupExpr::FreeProd(vec![GroupExpr::SnPlus(3), GroupExpr::wreath(GroupExpr::Triv, 4)]),
    ]);
    let normal = normalize(&raw);
    println!("normal form: {normal}");
    assert_eq!(normal.to_string(), "(S2+ * S3+ * S4+)");

    // Orders multiply over products; a wreath by n copies raises the base
    // order to the n-th power and multiplies by n factorial.
    let wreath_tower = GroupExpr::wreath(GroupExpr::wreath(GroupExpr::SnPlus(2), 3), 2);
    println!(
        "|{}| = {} (exact, arbitrary precision)",
        wreath_tower,
        classical_order(&wreath_tower)
    );

    // Only the trivial group and the degree-2 and degree-3 quantum
    // symmetric groups are classical.
    for expr in ["1", "S2+", "S3+", "S4+", "(S2+ * S2+)", "(S2+ wr S2+)"] {
        let parsed = parse_expr(expr).expect("well-formed expression");
        println!("{expr:14} classical: {}", is_classical(&parsed));
    }

    // Parsing inverts printing on normal forms.
    let text = "((S2+ wr S3+) * S5+)";
    let parsed = parse_expr(text).expect("well-formed expression");
    assert_eq!(parsed.to_string(), text);
    println!("round-trip ok for {text}");
}
