//! Canonical byte keys for trees up to isomorphism.
//!
//! Rooted trees are encoded AHU-style: a vertex becomes `(` followed by the
//! sorted encodings of its children and `)`. Free trees are rooted at their
//! center; with two centers the smaller of the two encodings wins.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tree::Tree;

/// Identifies the isomorphism class of a (free or rooted) tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CanonKey(Vec<u8>);

impl CanonKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of vertices encoded by the key.
    pub fn order(&self) -> usize {
        self.0.len() / 2
    }
}

impl fmt::Display for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Only '(' and ')' ever appear.
        f.write_str(std::str::from_utf8(&self.0).unwrap_or_default())
    }
}

impl fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonKey({self})")
    }
}

impl From<CanonKey> for String {
    fn from(key: CanonKey) -> Self {
        key.to_string()
    }
}

impl TryFrom<String> for CanonKey {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        let mut depth = 0i64;
        for b in s.bytes() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                _ => return Err(format!("invalid key byte {:?}", b as char)),
            }
            if depth < 0 {
                return Err("unbalanced key".into());
            }
        }
        if depth != 0 || s.is_empty() {
            return Err("unbalanced key".into());
        }
        Ok(CanonKey(s.into_bytes()))
    }
}

/// One or two central vertices, found by repeatedly stripping leaves.
pub fn centers(tree: &Tree) -> Vec<usize> {
    let n = tree.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in tree.neighbors(leaf) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// AHU encoding of `tree` rooted at `root`.
pub fn rooted_key(tree: &Tree, root: usize) -> CanonKey {
    let n = tree.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    order.push(root);
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    let mut children: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[u]);
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(b')');
        if u == root {
            codes[u] = code;
        } else {
            children[parent[u]].push(code);
        }
    }
    CanonKey(std::mem::take(&mut codes[root]))
}

/// Isomorphism-invariant key of a free tree.
pub fn canonical_key(tree: &Tree) -> CanonKey {
    centers(tree)
        .into_iter()
        .map(|c| rooted_key(tree, c))
        .min()
        .expect("every tree has a center")
}
