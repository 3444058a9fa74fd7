//! Graph, colored-graph, and rooted-tree data model, plus the text formats
//! used by the CLI and the generators.
//!
//! All values are immutable after construction and safe to share between
//! threads. Vertex ids are dense integers `0..n`.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

/// Construction errors for [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range for vertex count {1}")]
    VertexOutOfRange(usize, usize),
}

/// Errors raised while parsing edge-list text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed line {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("line {line}: self-loop on vertex {token:?}")]
    SelfLoop { line: usize, token: String },
    #[error("line {line}: duplicate edge {a:?} {b:?}")]
    DuplicateEdge { line: usize, a: String, b: String },
    #[error("empty input: no vertices or edges")]
    EmptyInput,
}

/// Why a graph fails to be a tree (or a valid rooted structure).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("input graph is empty")]
    Empty,
    #[error("input is disconnected")]
    Disconnected,
    #[error("input has a cycle")]
    HasCycle,
    #[error("root {root} out of range for vertex count {vertices}")]
    InvalidRoot { root: usize, vertices: usize },
}

/// Errors specific to forests of rooted trees.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("input has a cycle")]
    HasCycle,
    #[error("root {root} out of range for vertex count {vertices}")]
    InvalidRoot { root: usize, vertices: usize },
    #[error("component containing vertex {0} has no root")]
    MissingRoot(usize),
    #[error("component contains two roots ({0} and {1})")]
    DuplicateRoot(usize, usize),
}

/// A finite simple undirected graph over vertex ids `0..n`.
///
/// Adjacency lists are kept sorted; the representation is symmetric by
/// construction and admits no self-loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// A graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a simple graph from an edge list, rejecting loops, duplicates
    /// (in either orientation), and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adjacency[u].contains(&v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in &self.adjacency[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connected components as sorted vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Succeeds iff the graph is a tree: nonempty, connected, acyclic.
    pub fn validate_tree(&self) -> Result<(), TreeError> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let comps = self.components();
        // |E| > |V| - #components forces a cycle regardless of connectivity.
        if self.edge_count() > n - comps.len() {
            return Err(TreeError::HasCycle);
        }
        if comps.len() > 1 {
            return Err(TreeError::Disconnected);
        }
        Ok(())
    }

    /// The induced subgraph on `verts` (sorted, deduplicated internally),
    /// renumbered `0..k` in ascending original-id order. Returns the
    /// subgraph and the old-id list indexed by new id.
    pub fn induced_subgraph(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut old_ids: Vec<usize> = verts.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        let new_id: HashMap<usize, usize> = old_ids
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let mut adjacency = vec![Vec::new(); old_ids.len()];
        for (new_u, &old_u) in old_ids.iter().enumerate() {
            for &old_v in &self.adjacency[old_u] {
                if let Some(&new_v) = new_id.get(&old_v) {
                    adjacency[new_u].push(new_v);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        (Graph { adjacency }, old_ids)
    }

    /// Relabels vertices by `perm`, where `perm[old] = new`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        assert_eq!(perm.len(), n, "permutation length mismatch");
        let mut adjacency = vec![Vec::new(); n];
        for u in 0..n {
            for &v in &self.adjacency[u] {
                adjacency[perm[u]].push(perm[v]);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { adjacency }
    }

    /// Structured text form: `n <count>` then one `e u v` line per edge,
    /// `u < v`, sorted. This is also accepted back by [`parse_edge_list`].
    pub fn structured_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.vertex_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {} {}", u, v);
        }
        out
    }
}

/// A graph plus a total vertex coloring by dense small integers.
///
/// Adjacent vertices may share a color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: Graph,
    colors: Vec<usize>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, colors: Vec<usize>) -> Self {
        assert_eq!(
            colors.len(),
            graph.vertex_count(),
            "one color per vertex required"
        );
        ColoredGraph { graph, colors }
    }

    /// All vertices in the same color (color id 0).
    pub fn uniform(graph: Graph) -> Self {
        let n = graph.vertex_count();
        ColoredGraph {
            graph,
            colors: vec![0; n],
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn uses_color(&self, c: usize) -> bool {
        self.colors.contains(&c)
    }

    /// Smallest color id strictly greater than every color in use.
    pub fn fresh_color(&self) -> usize {
        self.colors.iter().max().map_or(0, |m| m + 1)
    }

    /// Color classes as sorted vertex sets, ordered by smallest member.
    pub fn color_classes(&self) -> Vec<Vec<usize>> {
        let mut by_color: HashMap<usize, Vec<usize>> = HashMap::new();
        for (v, &c) in self.colors.iter().enumerate() {
            by_color.entry(c).or_default().push(v);
        }
        let mut classes: Vec<Vec<usize>> = by_color.into_values().collect();
        classes.sort_by_key(|class| class[0]);
        classes
    }
}

/// A tree with a designated root vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    tree: Graph,
    root: usize,
}

impl RootedTree {
    pub fn new(tree: Graph, root: usize) -> Result<Self, TreeError> {
        tree.validate_tree()?;
        if root >= tree.vertex_count() {
            return Err(TreeError::InvalidRoot {
                root,
                vertices: tree.vertex_count(),
            });
        }
        Ok(RootedTree { tree, root })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Children lists and a breadth-first vertex order starting at the root.
    pub fn bfs_children(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let n = self.tree.vertex_count();
        let mut children = vec![Vec::new(); n];
        let mut order = vec![self.root];
        let mut seen = vec![false; n];
        seen[self.root] = true;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &v in self.tree.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    children[u].push(v);
                    order.push(v);
                }
            }
        }
        (children, order)
    }

    /// The two-colored view used for colored automorphisms of rooted trees:
    /// the root alone carries color 1, everything else color 0.
    pub fn to_colored(&self) -> ColoredGraph {
        let mut colors = vec![0; self.tree.vertex_count()];
        colors[self.root] = 1;
        ColoredGraph::new(self.tree.clone(), colors)
    }
}

/// An acyclic graph in which every connected component has exactly one
/// designated root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedForest {
    graph: Graph,
    roots: Vec<usize>,
}

impl RootedForest {
    pub fn new(graph: Graph, mut roots: Vec<usize>) -> Result<Self, ForestError> {
        let n = graph.vertex_count();
        let comps = graph.components();
        if graph.edge_count() > n - comps.len() {
            return Err(ForestError::HasCycle);
        }
        roots.sort_unstable();
        roots.dedup();
        for &r in &roots {
            if r >= n {
                return Err(ForestError::InvalidRoot {
                    root: r,
                    vertices: n,
                });
            }
        }
        for comp in &comps {
            let in_comp: Vec<usize> = roots
                .iter()
                .copied()
                .filter(|r| comp.binary_search(r).is_ok())
                .collect();
            match in_comp.len() {
                0 => return Err(ForestError::MissingRoot(comp[0])),
                1 => {}
                _ => return Err(ForestError::DuplicateRoot(in_comp[0], in_comp[1])),
            }
        }
        Ok(RootedForest { graph, roots })
    }

    /// The empty forest (no vertices, no components).
    pub fn empty() -> Self {
        RootedForest {
            graph: Graph::empty(0),
            roots: Vec::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    /// Components as rooted trees, renumbered, ordered by smallest member.
    pub fn component_trees(&self) -> Vec<RootedTree> {
        self.graph
            .components()
            .iter()
            .map(|comp| {
                let (sub, old_ids) = self.graph.induced_subgraph(comp);
                let root_old = self
                    .roots
                    .iter()
                    .copied()
                    .find(|r| comp.binary_search(r).is_ok())
                    .expect("validated: one root per component");
                let root_new = old_ids
                    .binary_search(&root_old)
                    .expect("root belongs to its component");
                RootedTree::new(sub, root_new).expect("component of a forest is a tree")
            })
            .collect()
    }

    /// Two-colored view per the colored-graph convention: roots color 1,
    /// non-roots color 0.
    pub fn to_colored(&self) -> ColoredGraph {
        let mut colors = vec![0; self.graph.vertex_count()];
        for &r in &self.roots {
            colors[r] = 1;
        }
        ColoredGraph::new(self.graph.clone(), colors)
    }
}

/// Parses edge-list text, returning the graph together with the original
/// vertex labels (indexed by internal id).
///
/// Two layouts are accepted:
///
/// * bare lines `u v` with arbitrary string tokens, renumbered `0..n` in
///   first-appearance order;
/// * the structured form produced by [`Graph::structured_text`]: an
///   `n <count>` header (which permits isolated vertices) followed by
///   `e u v` lines with explicit integer ids.
///
/// Lines starting with `#` are comments. Duplicate edges (in either
/// orientation) and self-loops are hard errors.
pub fn parse_edge_list_labeled(text: &str) -> Result<(Graph, Vec<String>), ParseError> {
    let mut labels: Vec<String> = Vec::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_set: HashMap<(usize, usize), ()> = HashMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let malformed = || ParseError::MalformedLine {
            line,
            content: content.to_string(),
        };
        let (a, b) = match tokens.as_slice() {
            ["n", count] => {
                let count: usize = count.parse().map_err(|_| malformed())?;
                if declared.is_some() || !labels.is_empty() {
                    return Err(malformed());
                }
                declared = Some(count);
                for v in 0..count {
                    let tok = v.to_string();
                    ids.insert(tok.clone(), v);
                    labels.push(tok);
                }
                continue;
            }
            ["e", a, b] => (*a, *b),
            [a, b] => (*a, *b),
            _ => return Err(malformed()),
        };
        if a == b {
            return Err(ParseError::SelfLoop {
                line,
                token: a.to_string(),
            });
        }
        let mut id_of = |tok: &str| -> Result<usize, ParseError> {
            if let Some(&id) = ids.get(tok) {
                return Ok(id);
            }
            if declared.is_some() {
                // Header mode pins the vertex set; unknown tokens are errors.
                return Err(malformed());
            }
            let id = labels.len();
            ids.insert(tok.to_string(), id);
            labels.push(tok.to_string());
            Ok(id)
        };
        let u = id_of(a)?;
        let v = id_of(b)?;
        let key = (u.min(v), u.max(v));
        if edge_set.insert(key, ()).is_some() {
            return Err(ParseError::DuplicateEdge {
                line,
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        edges.push((u, v));
    }

    if labels.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    let graph = Graph::from_edges(labels.len(), &edges)
        .expect("duplicates and loops already rejected during parsing");
    Ok((graph, labels))
}

/// [`parse_edge_list_labeled`] without the label table.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    parse_edge_list_labeled(text).map(|(g, _)| g)
}

/// A path `0-1-...-(n-1)`.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path edges are simple")
}

/// A star with hub 0 and `leaves` leaves.
pub fn star_graph(leaves: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star edges are simple")
}
