//! Eccentricity, the Jordan center of a tree (by two independent
//! algorithms), leaf-stripping layers, and rootification.
//!
//! The center of a tree is a single vertex or a pair of adjacent vertices;
//! rootification roots the tree there, subdividing the central edge when
//! the center is a pair.

use crate::graph::{Graph, RootedTree, TreeError};

/// Eccentricities, radius, and the center set of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterResult {
    /// Vertices of minimum eccentricity, sorted. Size 1 or 2 for a tree.
    pub center: Vec<usize>,
    /// Minimum eccentricity over all vertices.
    pub radius: usize,
    /// Eccentricity per vertex.
    pub eccentricities: Vec<usize>,
}

/// A tree rooted at its center, with the central edge subdivided when the
/// center had two vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rootification {
    pub rooted: RootedTree,
    /// True iff a fresh vertex was inserted on the central edge.
    pub subdivided: bool,
    /// The center of the input tree, sorted.
    pub original_center: Vec<usize>,
}

fn bfs_distances(g: &Graph, start: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    dist[start] = 0;
    let mut queue = vec![start];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push(v);
            }
        }
    }
    dist
}

/// Center and radius from per-vertex eccentricities (BFS from every vertex).
pub fn center_by_eccentricity(t: &Graph) -> Result<CenterResult, TreeError> {
    t.validate_tree()?;
    let eccentricities: Vec<usize> = t
        .vertices()
        .map(|v| {
            bfs_distances(t, v)
                .into_iter()
                .max()
                .expect("tree is nonempty")
        })
        .collect();
    let radius = *eccentricities.iter().min().expect("tree is nonempty");
    let center: Vec<usize> = t
        .vertices()
        .filter(|&v| eccentricities[v] == radius)
        .collect();
    Ok(CenterResult {
        center,
        radius,
        eccentricities,
    })
}

/// Jordan's iterative procedure: simultaneously delete all leaves until at
/// most two vertices survive; the survivors are the center.
pub fn center_by_leaf_stripping(t: &Graph) -> Result<Vec<usize>, TreeError> {
    t.validate_tree()?;
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut alive: Vec<bool> = vec![true; t.vertex_count()];
    let mut remaining = t.vertex_count();
    while remaining > 2 {
        let leaves: Vec<usize> = t
            .vertices()
            .filter(|&v| alive[v] && degree[v] == 1)
            .collect();
        for &leaf in &leaves {
            alive[leaf] = false;
            remaining -= 1;
            for &u in t.neighbors(leaf) {
                if alive[u] {
                    degree[u] -= 1;
                }
            }
        }
    }
    Ok(t.vertices().filter(|&v| alive[v]).collect())
}

/// Rounds of simultaneous leaf deletion on an arbitrary graph, until no
/// leaves remain. `layers[k]` holds the leaves removed in round `k + 1`;
/// the second component is the surviving vertex set.
///
/// A leaf is a vertex of degree exactly one, so isolated vertices survive.
pub fn leaf_stripping_layers(g: &Graph) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive: Vec<bool> = vec![true; g.vertex_count()];
    let mut layers = Vec::new();
    loop {
        let leaves: Vec<usize> = g
            .vertices()
            .filter(|&v| alive[v] && degree[v] == 1)
            .collect();
        if leaves.is_empty() {
            break;
        }
        for &leaf in &leaves {
            alive[leaf] = false;
            for &u in g.neighbors(leaf) {
                if alive[u] {
                    degree[u] -= 1;
                }
            }
        }
        layers.push(leaves);
    }
    let survivors = g.vertices().filter(|&v| alive[v]).collect();
    (layers, survivors)
}

/// Roots a tree at its center. A two-vertex center gets a fresh vertex
/// (the next unused id) inserted on the central edge, and the root is
/// that new vertex.
pub fn rootify(t: &Graph) -> Result<Rootification, TreeError> {
    let center = center_by_leaf_stripping(t)?;
    match *center.as_slice() {
        [z] => Ok(Rootification {
            rooted: RootedTree::new(t.clone(), z).expect("input validated"),
            subdivided: false,
            original_center: center,
        }),
        [z1, z2] => {
            let n = t.vertex_count();
            let mut edges = t.edges();
            edges.retain(|&(u, v)| (u, v) != (z1.min(z2), z1.max(z2)));
            edges.push((z1, n));
            edges.push((z2, n));
            let subdivided_tree =
                Graph::from_edges(n + 1, &edges).expect("subdivision keeps the graph simple");
            Ok(Rootification {
                rooted: RootedTree::new(subdivided_tree, n)
                    .expect("subdividing an edge of a tree yields a tree"),
                subdivided: true,
                original_center: center,
            })
        }
        _ => unreachable!("the center of a tree has one or two vertices"),
    }
}
