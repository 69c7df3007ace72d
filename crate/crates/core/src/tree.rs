//! Validated undirected trees, the standard families, and vertex removal.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors raised while building or parsing a tree.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("edge ({u}, {v}) uses a label outside 0..{n}")]
    LabelOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("a tree on {n} vertices has {expected} edges, got {found}")]
    WrongEdgeCount { n: usize, expected: usize, found: usize },
    #[error("vertex {v} is not reachable from vertex 0")]
    NotConnected { v: usize },
    #[error("a spider needs at least 3 legs, got {legs}")]
    InvalidSpider { legs: usize },
    #[error("spider legs must have positive length")]
    ZeroLeg,
    #[error("vertex {v} is out of range for a tree of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// An immutable tree on vertices `0..n`.
///
/// Neighbor lists are kept sorted so that every derived structure is
/// deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// One component of `T \ v`, relabeled to `0..k`, with `labels[i]` the
/// original label of component vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub tree: Tree,
    pub labels: Vec<usize>,
}

impl Tree {
    /// Validates `edges` as a tree on `n` vertices.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(TreeError::LabelOutOfRange { u, v, n });
            }
            if u == v {
                return Err(TreeError::SelfLoop { v: u });
            }
            if adj[u].contains(&v) {
                return Err(TreeError::DuplicateEdge { u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
            normalized.push((u.min(v), u.max(v)));
        }
        if normalized.len() != n - 1 {
            return Err(TreeError::WrongEdgeCount {
                n,
                expected: n - 1,
                found: normalized.len(),
            });
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(TreeError::NotConnected { v });
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        normalized.sort_unstable();
        Ok(Tree {
            edges: normalized,
            adj,
        })
    }

    /// Builds a tree from a parent array where `parent[0]` is ignored and
    /// `parent[i] < n` for every other `i`. Used by the enumerator, whose
    /// output is a valid tree by construction.
    pub(crate) fn from_parents(parent: &[usize]) -> Self {
        let edges: Vec<_> = (1..parent.len()).map(|i| (parent[i], i)).collect();
        Tree::new(parent.len(), &edges).expect("parent array describes a tree")
    }

    /// The path `0 - 1 - ... - (n-1)`.
    ///
    /// Panics if `n == 0`.
    pub fn path(n: usize) -> Self {
        assert!(n > 0, "path needs at least one vertex");
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::new(n, &edges).expect("path is a tree")
    }

    /// The star with center `0` and leaves `1..n`.
    ///
    /// Panics if `n == 0`.
    pub fn star(n: usize) -> Self {
        assert!(n > 0, "star needs at least one vertex");
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Tree::new(n, &edges).expect("star is a tree")
    }

    /// The spider with head `0` and the given leg lengths; legs are laid out
    /// consecutively, each starting next to the head.
    pub fn spider(legs: &[usize]) -> Result<Self, TreeError> {
        if legs.len() < 3 {
            return Err(TreeError::InvalidSpider { legs: legs.len() });
        }
        if legs.contains(&0) {
            return Err(TreeError::ZeroLeg);
        }
        let n = 1 + legs.iter().sum::<usize>();
        let mut edges = Vec::with_capacity(n - 1);
        let mut next = 1;
        for &len in legs {
            edges.push((0, next));
            for i in 1..len {
                edges.push((next + i - 1, next + i));
            }
            next += len;
        }
        Tree::new(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&v| self.is_leaf(v))
    }

    fn check_vertex(&self, v: usize) -> Result<(), TreeError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(TreeError::VertexOutOfRange { v, n: self.order() })
        }
    }

    /// Vertex sets of the components of `T \ v`, one per neighbor of `v` in
    /// neighbor order. Each set is sorted.
    pub fn component_vertex_sets(&self, v: usize) -> Result<Vec<Vec<usize>>, TreeError> {
        self.check_vertex(v)?;
        let mut out = Vec::with_capacity(self.degree(v));
        for &start in &self.adj[v] {
            let mut set = vec![start];
            let mut stack = vec![(start, v)];
            while let Some((u, from)) = stack.pop() {
                for &w in &self.adj[u] {
                    if w != from {
                        set.push(w);
                        stack.push((w, u));
                    }
                }
            }
            set.sort_unstable();
            out.push(set);
        }
        Ok(out)
    }

    /// Sizes `|T_{v,w}|` of the components of `T \ v`, in neighbor order.
    pub fn component_sizes(&self, v: usize) -> Result<Vec<usize>, TreeError> {
        Ok(self
            .component_vertex_sets(v)?
            .into_iter()
            .map(|s| s.len())
            .collect())
    }

    /// The components of `T \ v` as standalone trees.
    pub fn remove_vertex(&self, v: usize) -> Result<Vec<Component>, TreeError> {
        Ok(self
            .component_vertex_sets(v)?
            .into_iter()
            .map(|labels| self.induced(labels))
            .collect())
    }

    /// The component of `T \ v` containing `target`, or `None` if
    /// `target == v`.
    pub fn component_containing(&self, v: usize, target: usize) -> Result<Option<Component>, TreeError> {
        self.check_vertex(target)?;
        if v == target {
            self.check_vertex(v)?;
            return Ok(None);
        }
        Ok(self
            .component_vertex_sets(v)?
            .into_iter()
            .find(|set| set.binary_search(&target).is_ok())
            .map(|labels| self.induced(labels)))
    }

    /// Subtree induced by a connected, sorted vertex set.
    pub(crate) fn induced(&self, labels: Vec<usize>) -> Component {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &l) in labels.iter().enumerate() {
            index[l] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        let tree = Tree::new(labels.len(), &edges).expect("connected vertex set induces a tree");
        Component { tree, labels }
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tree, TreeError> {
        let edges: Vec<_> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Tree::new(self.order(), &edges)
    }

    /// The edge-list text form: `n` on the first line, then one `u v` line
    /// per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text form. Blank lines and `#` comments are
    /// skipped.
    pub fn parse_edge_list(text: &str) -> Result<Tree, TreeError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, first) = lines.next().ok_or(TreeError::Syntax {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let n: usize = first.parse().map_err(|_| TreeError::Syntax {
            line,
            message: format!("expected a vertex count, found {first:?}"),
        })?;
        let mut edges = Vec::new();
        for (line, text) in lines {
            let mut parts = text.split_whitespace();
            let mut field = |what: &str| -> Result<usize, TreeError> {
                let raw = parts.next().ok_or_else(|| TreeError::Syntax {
                    line,
                    message: format!("missing {what} endpoint"),
                })?;
                raw.parse().map_err(|_| TreeError::Syntax {
                    line,
                    message: format!("expected a vertex label, found {raw:?}"),
                })
            };
            let u = field("first")?;
            let v = field("second")?;
            if parts.next().is_some() {
                return Err(TreeError::Syntax {
                    line,
                    message: "expected exactly two labels".into(),
                });
            }
            edges.push((u, v));
        }
        Tree::new(n, &edges)
    }

    /// Parses either a family shorthand (`P:n`, `S:n`, `SP:a,b,c`) or an
    /// edge list.
    pub fn parse_spec(text: &str) -> Result<Tree, TreeError> {
        let trimmed = text.trim();
        let shorthand = |message: String| TreeError::Syntax { line: 1, message };
        let count = |raw: &str| -> Result<usize, TreeError> {
            match raw.trim().parse::<usize>() {
                Ok(0) => Err(TreeError::Empty),
                Ok(n) => Ok(n),
                Err(_) => Err(shorthand(format!("expected a positive integer, found {raw:?}"))),
            }
        };
        if let Some(rest) = trimmed.strip_prefix("SP:") {
            let legs = rest
                .split(',')
                .map(|leg| {
                    leg.trim()
                        .parse::<usize>()
                        .map_err(|_| shorthand(format!("bad leg length {leg:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Tree::spider(&legs)
        } else if let Some(rest) = trimmed.strip_prefix("P:") {
            Ok(Tree::path(count(rest)?))
        } else if let Some(rest) = trimmed.strip_prefix("S:") {
            Ok(Tree::star(count(rest)?))
        } else {
            Tree::parse_edge_list(text)
        }
    }
}

impl FromStr for Tree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tree::parse_spec(s)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({}; {:?})", self.order(), self.edges)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}
