//! The term algebra of quantum groups generated by the trivial group, free
//! products, and free wreath products with quantum symmetric groups.
//!
//! Expressions are symbolic values. Normal forms flatten and sort free
//! products, drop trivial factors, collapse one-copy wreaths, and rewrite a
//! wreath over a trivial base to the plain quantum symmetric group. The
//! classical counterpart (direct products and ordinary wreath products with
//! symmetric groups) gives an exact group order, and a normalized
//! expression denotes a classical group exactly when no product structure
//! survives and any quantum symmetric group has degree at most three.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

/// Symbolic quantum-group expression.
///
/// `SnPlus(n)` is the quantum symmetric group of degree `n`; `FreeWreath`
/// is the free wreath product of the base with `SnPlus` of the given degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Triv,
    SnPlus(usize),
    FreeProd(Vec<GroupExpr>),
    FreeWreath(Box<GroupExpr>, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ExprParseError {
    pub position: usize,
    pub message: String,
}

impl GroupExpr {
    /// Convenience constructor for a free wreath product.
    pub fn wreath(base: GroupExpr, n: usize) -> GroupExpr {
        GroupExpr::FreeWreath(Box::new(base), n)
    }

    /// True iff the expression already satisfies the normal-form invariants.
    pub fn is_normal(&self) -> bool {
        match self {
            GroupExpr::Triv => true,
            GroupExpr::SnPlus(n) => *n >= 2,
            GroupExpr::FreeProd(children) => {
                children.len() >= 2
                    && children.iter().all(|c| {
                        c.is_normal()
                            && !matches!(c, GroupExpr::Triv | GroupExpr::FreeProd(_))
                    })
                    && children.windows(2).all(|w| w[0].to_string() <= w[1].to_string())
            }
            GroupExpr::FreeWreath(base, n) => {
                *n >= 2 && !matches!(**base, GroupExpr::Triv) && base.is_normal()
            }
        }
    }
}

/// Rewrites an expression to normal form. Idempotent.
pub fn normalize(e: &GroupExpr) -> GroupExpr {
    match e {
        GroupExpr::Triv => GroupExpr::Triv,
        GroupExpr::SnPlus(n) => {
            if *n <= 1 {
                GroupExpr::Triv
            } else {
                GroupExpr::SnPlus(*n)
            }
        }
        GroupExpr::FreeWreath(base, n) => {
            // Zero copies of anything is the trivial group.
            if *n == 0 {
                return GroupExpr::Triv;
            }
            let base = normalize(base);
            // One copy of anything is just the thing itself.
            if *n == 1 {
                return base;
            }
            match base {
                // The free wreath product over a trivial base is the plain
                // quantum symmetric group on the copies.
                GroupExpr::Triv => normalize(&GroupExpr::SnPlus(*n)),
                base => GroupExpr::FreeWreath(Box::new(base), *n),
            }
        }
        GroupExpr::FreeProd(children) => {
            let mut flat: Vec<GroupExpr> = Vec::new();
            for child in children {
                match normalize(child) {
                    GroupExpr::Triv => {}
                    GroupExpr::FreeProd(grandchildren) => flat.extend(grandchildren),
                    other => flat.push(other),
                }
            }
            match flat.len() {
                0 => GroupExpr::Triv,
                1 => flat.pop().expect("length checked"),
                _ => {
                    let mut keyed: Vec<(String, GroupExpr)> =
                        flat.into_iter().map(|c| (c.to_string(), c)).collect();
                    keyed.sort_by(|a, b| a.0.cmp(&b.0));
                    GroupExpr::FreeProd(keyed.into_iter().map(|(_, c)| c).collect())
                }
            }
        }
    }
}

fn factorial(n: usize) -> BigUint {
    let mut out = BigUint::from(1u32);
    for k in 2..=n {
        out *= BigUint::from(k);
    }
    out
}

/// Exact order of the classical counterpart group: free products become
/// direct products, free wreath products become wreath products with the
/// symmetric group, and `SnPlus(n)` becomes the symmetric group of degree
/// `n`. So `|Triv| = 1`, `|SnPlus(n)| = n!`, orders multiply over products,
/// and a wreath by `n` copies contributes `|base|^n * n!`.
pub fn classical_order(e: &GroupExpr) -> BigUint {
    match e {
        GroupExpr::Triv => BigUint::from(1u32),
        GroupExpr::SnPlus(n) => factorial(*n),
        GroupExpr::FreeProd(children) => children.iter().map(classical_order).product(),
        GroupExpr::FreeWreath(base, n) => {
            classical_order(base).pow(*n as u32) * factorial(*n)
        }
    }
}

/// Whether a normalized expression denotes a classical group (one whose
/// quantum and ordinary automorphism pictures agree). This holds exactly
/// for the trivial group and the quantum symmetric groups of degree two
/// and three, which coincide with their classical counterparts.
pub fn is_classical(e: &GroupExpr) -> bool {
    matches!(e, GroupExpr::Triv | GroupExpr::SnPlus(2) | GroupExpr::SnPlus(3))
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Triv => write!(f, "1"),
            GroupExpr::SnPlus(n) => write!(f, "S{}+", n),
            GroupExpr::FreeProd(children) => {
                write!(f, "(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    write!(f, "{}", c)?;
                }
                write!(f, ")")
            }
            GroupExpr::FreeWreath(base, n) => write!(f, "({} wr S{}+)", base, n),
        }
    }
}

/// Nested-record view of an expression for structured output. Map keys are
/// emitted in sorted order, so the rendering is deterministic.
pub fn expr_to_json(e: &GroupExpr) -> serde_json::Value {
    use serde_json::{json, Value};
    match e {
        GroupExpr::Triv => json!({ "kind": "triv" }),
        GroupExpr::SnPlus(n) => json!({ "kind": "snplus", "n": n }),
        GroupExpr::FreeProd(children) => {
            let children: Vec<Value> = children.iter().map(expr_to_json).collect();
            json!({ "kind": "free_product", "children": children })
        }
        GroupExpr::FreeWreath(base, n) => {
            json!({ "kind": "free_wreath", "base": expr_to_json(base), "n": n })
        }
    }
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T, ExprParseError> {
        Err(ExprParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<(), ExprParseError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected {:?}", b as char))
        }
    }

    fn parse_int(&mut self) -> Result<usize, ExprParseError> {
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected an integer");
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .expect("digits are ASCII")
            .parse()
            .or_else(|_| self.error("integer out of range"))
    }

    fn parse_sn_plus(&mut self) -> Result<usize, ExprParseError> {
        self.eat(b'S')?;
        let n = self.parse_int()?;
        if n == 0 {
            return self.error("degree must be at least 1");
        }
        self.eat(b'+')?;
        Ok(n)
    }

    fn parse_expr(&mut self) -> Result<GroupExpr, ExprParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(GroupExpr::Triv)
            }
            Some(b'S') => Ok(GroupExpr::SnPlus(self.parse_sn_plus()?)),
            Some(b'(') => {
                self.pos += 1;
                let first = self.parse_expr()?;
                self.skip_ws();
                match self.peek() {
                    Some(b'*') => {
                        let mut children = vec![first];
                        while self.peek() == Some(b'*') {
                            self.pos += 1;
                            children.push(self.parse_expr()?);
                            self.skip_ws();
                        }
                        self.eat(b')')?;
                        Ok(GroupExpr::FreeProd(children))
                    }
                    Some(b'w') => {
                        self.eat(b'w')?;
                        self.eat(b'r')?;
                        self.skip_ws();
                        let n = self.parse_sn_plus()?;
                        self.skip_ws();
                        self.eat(b')')?;
                        Ok(GroupExpr::wreath(first, n))
                    }
                    _ => self.error("expected '*' or 'wr'"),
                }
            }
            _ => self.error("expected '1', 'S<n>+', or '('"),
        }
    }
}

/// Parses the expression grammar:
/// `Expr := "1" | "S" INT "+" | "(" Expr (" * " Expr)+ ")" | "(" Expr " wr S" INT "+" ")"`.
///
/// On normal forms this inverts the `Display` rendering.
pub fn parse_expr(s: &str) -> Result<GroupExpr, ExprParseError> {
    let mut parser = Parser {
        input: s.as_bytes(),
        pos: 0,
    };
    let expr = parser.parse_expr()?;
    parser.skip_ws();
    if parser.pos != parser.input.len() {
        return parser.error("trailing input");
    }
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prod(children: Vec<GroupExpr>) -> GroupExpr {
        GroupExpr::FreeProd(children)
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            normalize(&GroupExpr::wreath(GroupExpr::Triv, 1)),
            GroupExpr::Triv
        );
        assert_eq!(
            normalize(&prod(vec![GroupExpr::Triv, GroupExpr::SnPlus(3)])),
            GroupExpr::SnPlus(3)
        );
        assert_eq!(
            normalize(&GroupExpr::wreath(GroupExpr::Triv, 4)),
            GroupExpr::SnPlus(4)
        );
    }

    #[test]
    fn normalize_flattens_and_sorts_products() {
        let e = prod(vec![
            GroupExpr::SnPlus(3),
            prod(vec![GroupExpr::SnPlus(2), GroupExpr::Triv]),
        ]);
        let n = normalize(&e);
        assert_eq!(n.to_string(), "(S2+ * S3+)");
        assert!(n.is_normal());
    }

    #[test]
    fn normalize_collapses_single_copy_wreath() {
        let e = GroupExpr::wreath(GroupExpr::SnPlus(4), 1);
        assert_eq!(normalize(&e), GroupExpr::SnPlus(4));
    }

    #[test]
    fn normalize_drops_degree_one_symmetric_group() {
        assert_eq!(normalize(&GroupExpr::SnPlus(1)), GroupExpr::Triv);
        assert_eq!(
            normalize(&GroupExpr::wreath(GroupExpr::SnPlus(1), 3)),
            GroupExpr::SnPlus(3)
        );
    }

    #[test]
    fn order_examples() {
        assert_eq!(classical_order(&GroupExpr::Triv), BigUint::from(1u32));
        assert_eq!(classical_order(&GroupExpr::SnPlus(4)), BigUint::from(24u32));
        // Hub with three cherry children: 2^3 * 3! = 48. The decompose tests
        // cross-check this against the brute-force automorphism count.
        assert_eq!(
            classical_order(&GroupExpr::wreath(GroupExpr::SnPlus(2), 3)),
            BigUint::from(48u32)
        );
    }

    #[test]
    fn order_structural_identities() {
        let g = GroupExpr::SnPlus(3);
        let h = GroupExpr::wreath(GroupExpr::SnPlus(2), 2);
        let both = normalize(&prod(vec![g.clone(), h.clone()]));
        assert_eq!(
            classical_order(&both),
            classical_order(&g) * classical_order(&h)
        );
        let w = GroupExpr::wreath(h.clone(), 3);
        assert_eq!(
            classical_order(&w),
            classical_order(&h).pow(3) * BigUint::from(6u32)
        );
    }

    #[test]
    fn classicality_rule() {
        assert!(is_classical(&GroupExpr::Triv));
        assert!(is_classical(&GroupExpr::SnPlus(2)));
        assert!(is_classical(&GroupExpr::SnPlus(3)));
        assert!(!is_classical(&GroupExpr::SnPlus(4)));
        assert!(!is_classical(&normalize(&prod(vec![
            GroupExpr::SnPlus(2),
            GroupExpr::SnPlus(2)
        ]))));
        assert!(!is_classical(&GroupExpr::wreath(GroupExpr::SnPlus(2), 2)));
    }

    #[test]
    fn print_examples() {
        assert_eq!(GroupExpr::SnPlus(4).to_string(), "S4+");
        assert_eq!(
            prod(vec![GroupExpr::SnPlus(2), GroupExpr::SnPlus(2)]).to_string(),
            "(S2+ * S2+)"
        );
        assert_eq!(
            GroupExpr::wreath(GroupExpr::SnPlus(2), 3).to_string(),
            "(S2+ wr S3+)"
        );
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_expr("1").unwrap(), GroupExpr::Triv);
        assert_eq!(parse_expr("S4+").unwrap(), GroupExpr::SnPlus(4));
        assert_eq!(
            parse_expr("(S2+ * S2+)").unwrap(),
            prod(vec![GroupExpr::SnPlus(2), GroupExpr::SnPlus(2)])
        );
        assert_eq!(
            parse_expr("(S2+ wr S3+)").unwrap(),
            GroupExpr::wreath(GroupExpr::SnPlus(2), 3)
        );
        assert_eq!(
            parse_expr("((1 wr S2+) * S5+)").unwrap(),
            prod(vec![
                GroupExpr::wreath(GroupExpr::Triv, 2),
                GroupExpr::SnPlus(5)
            ])
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_expr("S4").unwrap_err();
        assert_eq!(err.position, 2);
        let err = parse_expr("(S2+ % S2+)").unwrap_err();
        assert_eq!(err.position, 5);
        assert!(parse_expr("S4+ junk").is_err());
        assert!(parse_expr("").is_err());
    }

    #[test]
    fn expr_json_shapes() {
        let e = GroupExpr::wreath(GroupExpr::SnPlus(2), 3);
        assert_eq!(
            expr_to_json(&e).to_string(),
            r#"{"base":{"kind":"snplus","n":2},"kind":"free_wreath","n":3}"#
        );
    }
}
