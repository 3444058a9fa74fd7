//! AHU canonical codes for rooted trees and the isomorphism tests built on
//! them.
//!
//! The code of a rooted tree is a balanced parenthesis string: a leaf is
//! `()`, and an internal vertex wraps the concatenation of its children's
//! codes in lexicographically sorted order. Two rooted trees are isomorphic
//! iff their codes are equal, and for trees this also decides quantum
//! isomorphism, since the two notions coincide on forests.

use std::fmt;

use crate::center::rootify;
use crate::graph::{Graph, RootedTree, TreeError};

/// Canonical parenthesis code of a rooted tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonCode(String);

impl CanonCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One isomorphism class among the root's child subtrees.
#[derive(Debug, Clone)]
pub struct ChildClass {
    /// The class shape as a standalone rooted tree (vertices renumbered in
    /// ascending original-id order).
    pub representative: RootedTree,
    /// Number of child subtrees in the class.
    pub multiplicity: usize,
    /// The child vertices (in the original tree) heading members of this
    /// class, in increasing id order.
    pub members: Vec<usize>,
}

/// The root's child subtrees grouped into isomorphism classes, sorted by
/// representative code.
#[derive(Debug, Clone)]
pub struct ChildClasses {
    pub classes: Vec<ChildClass>,
}

/// Code of the subtree hanging below `sub_root`, computed bottom-up
/// without recursion. Child codes are consumed as parents are composed,
/// so the peak memory stays linear even on long paths.
fn subtree_code(children: &[Vec<usize>], sub_root: usize) -> String {
    let mut order = vec![sub_root];
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        order.extend_from_slice(&children[u]);
    }
    let mut codes: Vec<String> = vec![String::new(); children.len()];
    for &v in order.iter().rev() {
        let mut child_codes: Vec<String> = children[v]
            .iter()
            .map(|&c| std::mem::take(&mut codes[c]))
            .collect();
        child_codes.sort_unstable();
        let mut code =
            String::with_capacity(2 + child_codes.iter().map(String::len).sum::<usize>());
        code.push('(');
        for c in &child_codes {
            code.push_str(c);
        }
        code.push(')');
        codes[v] = code;
    }
    std::mem::take(&mut codes[sub_root])
}

/// The canonical code of a rooted tree. Deterministic and invariant under
/// relabeling of the vertex ids.
pub fn ahu_code(rt: &RootedTree) -> CanonCode {
    let (children, _) = rt.bfs_children();
    CanonCode(subtree_code(&children, rt.root()))
}

/// Rooted-tree isomorphism via code equality.
pub fn rooted_isomorphic(a: &RootedTree, b: &RootedTree) -> bool {
    ahu_code(a) == ahu_code(b)
}

/// Unrooted-tree isomorphism: both trees are rooted canonically at their
/// centers and the codes compared. The subdivision flag participates in the
/// comparison so a subdivision vertex is never matched against an original
/// vertex.
pub fn tree_isomorphic(a: &Graph, b: &Graph) -> Result<bool, TreeError> {
    let ra = rootify(a)?;
    let rb = rootify(b)?;
    Ok(ra.subdivided == rb.subdivided && ahu_code(&ra.rooted) == ahu_code(&rb.rooted))
}

/// A comparison key that identifies an unrooted tree up to isomorphism.
pub fn tree_canon_key(t: &Graph) -> Result<(bool, CanonCode), TreeError> {
    let r = rootify(t)?;
    Ok((r.subdivided, ahu_code(&r.rooted)))
}

/// Extracts the subtree hanging below `v` (with respect to the given root
/// structure) as a standalone rooted tree.
fn extract_subtree(rt: &RootedTree, children: &[Vec<usize>], v: usize) -> RootedTree {
    let mut verts = vec![v];
    let mut head = 0;
    while head < verts.len() {
        let u = verts[head];
        head += 1;
        verts.extend_from_slice(&children[u]);
    }
    let (sub, old_ids) = rt.tree().induced_subgraph(&verts);
    let root = old_ids.binary_search(&v).expect("v belongs to its subtree");
    RootedTree::new(sub, root).expect("a subtree of a tree is a tree")
}

/// Groups the root's child subtrees (each rooted at the child) by canonical
/// code. Classes are sorted by code; members within a class by vertex id.
pub fn child_classes(rt: &RootedTree) -> ChildClasses {
    let (children, _) = rt.bfs_children();
    let mut tagged: Vec<(String, usize)> = children[rt.root()]
        .iter()
        .map(|&c| (subtree_code(&children, c), c))
        .collect();
    tagged.sort();
    let mut classes: Vec<ChildClass> = Vec::new();
    for (code, child) in tagged {
        match classes.last_mut() {
            Some(last) if ahu_code(&last.representative).as_str() == code => {
                last.multiplicity += 1;
                last.members.push(child);
            }
            _ => classes.push(ChildClass {
                representative: extract_subtree(rt, &children, child),
                multiplicity: 1,
                members: vec![child],
            }),
        }
    }
    ChildClasses { classes }
}
