//! Labeled simplicial graphs: the defining datum of an Artin group.
//!
//! A graph is a finite vertex list plus integer edge labels `m >= 2`.
//! Vertex order as given in the input file is the canonical order used for
//! every deterministic tie-break in the crate.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite simplicial graph with integer edge labels `>= 2`.
///
/// Immutable after construction. No loops, no duplicate edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    /// Symmetric adjacency matrix; `None` means non-adjacent.
    adj: Vec<Vec<Option<u32>>>,
}

#[derive(Serialize, Deserialize)]
struct RawEdge {
    u: String,
    v: String,
    m: serde_json::Number,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertices: Vec<String>,
    edges: Vec<RawEdge>,
}

impl Serialize for LabeledGraph {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let raw = RawGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v, m)| RawEdge {
                    u: self.vertices[u].clone(),
                    v: self.vertices[v].clone(),
                    m: m.into(),
                })
                .collect(),
        };
        raw.serialize(serializer)
    }
}

impl LabeledGraph {
    /// Build a graph from vertex names (kept in order) and labeled edges.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, u32)]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::MalformedInput(format!(
                    "vertex name '{name}' must be nonempty and contain no whitespace"
                )));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::MalformedInput(format!(
                    "duplicate vertex name '{name}'"
                )));
            }
        }
        let n = names.len();
        let mut adj = vec![vec![None; n]; n];
        for (u, v, m) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let ui = *index
                .get(u)
                .ok_or_else(|| Error::UnknownEndpoint(u.to_owned()))?;
            let vi = *index
                .get(v)
                .ok_or_else(|| Error::UnknownEndpoint(v.to_owned()))?;
            if ui == vi {
                return Err(Error::LoopEdge(u.to_owned()));
            }
            if *m < 2 {
                return Err(Error::InvalidLabel {
                    u: u.to_owned(),
                    v: v.to_owned(),
                    found: m.to_string(),
                });
            }
            if adj[ui][vi].is_some() {
                return Err(Error::DuplicateEdge {
                    u: u.to_owned(),
                    v: v.to_owned(),
                });
            }
            adj[ui][vi] = Some(*m);
            adj[vi][ui] = Some(*m);
        }
        Ok(LabeledGraph {
            vertices: names,
            index,
            adj,
        })
    }

    /// Parse the JSON wire format
    /// `{"vertices": ["a", ...], "edges": [{"u": "a", "v": "b", "m": 3}, ...]}`.
    pub fn parse_json(text: &str) -> Result<Self> {
        let raw: RawGraph = serde_json::from_str(text)
            .map_err(|e| Error::MalformedInput(format!("bad graph JSON: {e}")))?;
        let mut edges = Vec::with_capacity(raw.edges.len());
        for e in &raw.edges {
            let m = match e.m.as_u64() {
                Some(m) if (2..=u32::MAX as u64).contains(&m) => m as u32,
                _ => {
                    return Err(Error::InvalidLabel {
                        u: e.u.clone(),
                        v: e.v.clone(),
                        found: e.m.to_string(),
                    })
                }
            };
            edges.push((e.u.as_str(), e.v.as_str(), m));
        }
        let verts: Vec<&str> = raw.vertices.iter().map(String::as_str).collect();
        Self::new(&verts, &edges)
    }

    /// Canonical JSON emission: edges sorted by (min endpoint, max endpoint)
    /// in vertex order, earlier endpoint written as `u`.
    pub fn to_json(&self) -> String {
        let raw = RawGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v, m)| RawEdge {
                    u: self.vertices[u].clone(),
                    v: self.vertices[v].clone(),
                    m: m.into(),
                })
                .collect(),
        };
        serde_json::to_string(&raw).expect("graph serialization cannot fail")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require_vertex(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_owned()))
    }

    pub fn label(&self, u: usize, v: usize) -> Option<u32> {
        self.adj[u][v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v].is_some()
    }

    /// Edges as `(i, j, m)` with `i < j`, sorted by `(i, j)`.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if let Some(m) = self.adj[i][j] {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Neighbor indices of `v` in canonical order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&u| self.adj[v][u].is_some())
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|i| (i + 1..n).all(|j| self.adjacent(i, j)))
    }

    /// All pairs inside `set` adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let idx = set.indices();
        idx.iter()
            .enumerate()
            .all(|(p, &i)| idx[p + 1..].iter().all(|&j| self.adjacent(i, j)))
    }

    /// Induced subgraph on `set`, vertices kept in canonical order.
    pub fn induced(&self, set: &VertexSet) -> LabeledGraph {
        let idx = set.indices();
        let names: Vec<&str> = idx.iter().map(|&i| self.name(i)).collect();
        let mut edges = Vec::new();
        for (p, &i) in idx.iter().enumerate() {
            for &j in &idx[p + 1..] {
                if let Some(m) = self.adj[i][j] {
                    edges.push((self.name(i), self.name(j), m));
                }
            }
        }
        LabeledGraph::new(&names, &edges).expect("induced subgraph of a valid graph is valid")
    }

    /// Link, star and label-2 link of a vertex.
    pub fn neighborhoods(&self, v: &str) -> Result<Neighborhoods> {
        let vi = self.require_vertex(v)?;
        let link: Vec<usize> = self.neighbors(vi);
        let link2: Vec<usize> = link
            .iter()
            .copied()
            .filter(|&u| self.adj[vi][u] == Some(2))
            .collect();
        let mut star = link.clone();
        star.push(vi);
        star.sort_unstable();
        Ok(Neighborhoods {
            link: VertexSet::from_sorted(link),
            star: VertexSet::from_sorted(star),
            link2: VertexSet::from_sorted(link2),
        })
    }

    /// Spanning subgraph keeping exactly the odd-labeled edges.
    pub fn odd_subgraph(&self) -> LabeledGraph {
        let names: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str, u32)> = self
            .edges()
            .into_iter()
            .filter(|&(_, _, m)| m % 2 == 1)
            .map(|(i, j, m)| (self.name(i), self.name(j), m))
            .collect();
        LabeledGraph::new(&names, &edges).expect("odd subgraph of a valid graph is valid")
    }

    /// Unlabeled graph on `V` with an edge `{u, v}` exactly when `u` and `v`
    /// do NOT commute as generators: non-adjacent, or adjacent with label > 2.
    /// Its connected components are the finest direct-product factorization
    /// of the vertex set.
    pub fn commuting_complement(&self) -> UnlabeledGraph {
        let n = self.vertex_count();
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                if self.adj[i][j] != Some(2) {
                    adj[i][j] = true;
                    adj[j][i] = true;
                }
            }
        }
        UnlabeledGraph {
            vertices: self.vertices.clone(),
            adj,
        }
    }

    /// Connected components (ordinary adjacency), ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        components_of(self.vertex_count(), |i, j| self.adjacent(i, j))
    }

    /// Chordality test with certificate: a perfect elimination ordering from
    /// lexicographic BFS, or an induced cycle of length >= 4.
    pub fn is_chordal(&self) -> Chordality {
        let order = self.lex_bfs();
        let peo: Vec<usize> = order.iter().rev().copied().collect();
        if self.verify_peo_indices(&peo) {
            Chordality::Chordal {
                elimination: peo.iter().map(|&i| self.vertices[i].clone()).collect(),
            }
        } else {
            let cycle = self
                .find_hole()
                .expect("a failed elimination ordering implies a hole");
            Chordality::NotChordal {
                cycle: cycle.iter().map(|&i| self.vertices[i].clone()).collect(),
            }
        }
    }

    /// Lexicographic BFS visit order; start vertex and all ties resolved by
    /// canonical order.
    fn lex_bfs(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for step in 0..n {
            let u = (0..n)
                .filter(|&u| !visited[u])
                .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
                .expect("unvisited vertex exists");
            visited[u] = true;
            order.push(u);
            for w in self.neighbors(u) {
                if !visited[w] {
                    // Labels record visit times in decreasing "priority": later
                    // steps append larger stamps, so compare by sequence of
                    // (n - step) to make lexicographic comparison direct.
                    labels[w].push(n - step);
                }
            }
        }
        order
    }

    fn verify_peo_indices(&self, peo: &[usize]) -> bool {
        let n = self.vertex_count();
        let mut pos = vec![0usize; n];
        for (p, &v) in peo.iter().enumerate() {
            pos[v] = p;
        }
        for (p, &v) in peo.iter().enumerate() {
            let later: Vec<usize> = self
                .neighbors(v)
                .into_iter()
                .filter(|&u| pos[u] > p)
                .collect();
            for (a, &x) in later.iter().enumerate() {
                for &y in &later[a + 1..] {
                    if !self.adjacent(x, y) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Search for an induced cycle of length >= 4: a vertex `v` with two
    /// non-adjacent neighbors `x`, `y` joined by a path avoiding `N[v]`.
    /// A shortest such path is induced, so `v` plus the path is a hole, and
    /// every hole arises this way.
    fn find_hole(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        for v in 0..n {
            let nb = self.neighbors(v);
            for (a, &x) in nb.iter().enumerate() {
                for &y in &nb[a + 1..] {
                    if self.adjacent(x, y) {
                        continue;
                    }
                    let mut blocked = vec![false; n];
                    blocked[v] = true;
                    for &u in &nb {
                        if u != x && u != y {
                            blocked[u] = true;
                        }
                    }
                    if let Some(path) = self.bfs_path(x, y, &blocked) {
                        let mut cycle = vec![v];
                        cycle.extend(path);
                        return Some(cycle);
                    }
                }
            }
        }
        None
    }

    fn bfs_path(&self, from: usize, to: usize, blocked: &[bool]) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        seen[from] = true;
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.neighbors(u) {
                if !seen[w] && !blocked[w] {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// One clique split of a chordal graph: `g1 ∪ g2 = V`, `delta = g1 ∩ g2`
    /// a clique, no edges between the two sides outside `delta`.
    ///
    /// Deterministic: takes the canonically smallest non-adjacent pair
    /// `(u, v)` and separates with the neighborhood of `v`'s component in
    /// `G - N[u]`.
    pub fn find_clique_separator(&self) -> Result<SeparatorOutcome> {
        let n = self.vertex_count();
        match self.is_chordal() {
            Chordality::Chordal { .. } => {}
            Chordality::NotChordal { cycle } => return Err(Error::NotChordal { cycle }),
        }
        if n < 2 || self.is_complete() {
            return Ok(SeparatorOutcome::NotSplittable);
        }
        let (u, v) = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .find(|&(i, j)| !self.adjacent(i, j))
            .expect("non-complete graph has a non-adjacent pair");
        let mut blocked = vec![false; n];
        blocked[u] = true;
        for w in self.neighbors(u) {
            blocked[w] = true;
        }
        // Component of v in G - N[u].
        let mut comp = vec![false; n];
        let mut stack = vec![v];
        comp[v] = true;
        while let Some(x) = stack.pop() {
            for w in self.neighbors(x) {
                if !blocked[w] && !comp[w] {
                    comp[w] = true;
                    stack.push(w);
                }
            }
        }
        let comp_set: Vec<usize> = (0..n).filter(|&i| comp[i]).collect();
        let mut in_delta = vec![false; n];
        for &c in &comp_set {
            for w in self.neighbors(c) {
                if !comp[w] {
                    in_delta[w] = true;
                }
            }
        }
        let delta: Vec<usize> = (0..n).filter(|&i| in_delta[i]).collect();
        let g1: Vec<usize> = (0..n).filter(|&i| !comp[i]).collect();
        let g2: Vec<usize> = (0..n).filter(|&i| comp[i] || in_delta[i]).collect();
        let split = CliqueSplit {
            g1: VertexSet::from_sorted(g1),
            g2: VertexSet::from_sorted(g2),
            delta: VertexSet::from_sorted(delta),
        };
        debug_assert!(
            self.is_clique(&split.delta),
            "minimal separator of a chordal graph is a clique"
        );
        Ok(SeparatorOutcome::Split(split))
    }

    /// All induced subgraphs matching the forbidden coherence pattern: a
    /// 4-cycle `v-a-w-b` with all four labels 2, chord `{v, w}` labeled
    /// `m > 2`, and `{a, b}` non-adjacent. Reported once with `a < b` and
    /// `v < w` canonically, sorted.
    pub fn find_forbidden_squares(&self) -> Vec<ForbiddenSquare> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for (v, w, m) in self.edges() {
            if m <= 2 {
                continue;
            }
            let common2: Vec<usize> = (0..n)
                .filter(|&x| self.adj[x][v] == Some(2) && self.adj[x][w] == Some(2))
                .collect();
            for (p, &a) in common2.iter().enumerate() {
                for &b in &common2[p + 1..] {
                    if !self.adjacent(a, b) {
                        out.push((a, b, v, w));
                    }
                }
            }
        }
        out.sort_unstable();
        out.into_iter()
            .map(|(a, b, v, w)| ForbiddenSquare {
                a: self.vertices[a].clone(),
                b: self.vertices[b].clone(),
                v: self.vertices[v].clone(),
                w: self.vertices[w].clone(),
            })
            .collect()
    }

    /// Resolve a list of names into a vertex set.
    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        let mut idx = Vec::with_capacity(names.len());
        for name in names {
            idx.push(self.require_vertex(name.as_ref())?);
        }
        idx.sort_unstable();
        idx.dedup();
        Ok(VertexSet::from_sorted(idx))
    }

    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet::from_sorted((0..self.vertex_count()).collect())
    }
}

/// Subset of the vertices of a parent graph, stored as sorted canonical
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet {
    indices: Vec<usize>,
}

impl VertexSet {
    /// Caller guarantees `indices` sorted, deduplicated and in range.
    pub fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        VertexSet { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn names(&self, g: &LabeledGraph) -> Vec<String> {
        self.indices.iter().map(|&i| g.name(i).to_owned()).collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v: Vec<usize> = self.indices.iter().chain(&other.indices).copied().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet::from_sorted(v)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(
            self.indices
                .iter()
                .copied()
                .filter(|&i| other.contains(i))
                .collect(),
        )
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(
            self.indices
                .iter()
                .copied()
                .filter(|&i| !other.contains(i))
                .collect(),
        )
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }
}

/// Link, star, and label-2 link of a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighborhoods {
    pub link: VertexSet,
    pub star: VertexSet,
    pub link2: VertexSet,
}

/// Graph without edge labels, used for commuting-complement components.
#[derive(Debug, Clone)]
pub struct UnlabeledGraph {
    vertices: Vec<String>,
    adj: Vec<Vec<bool>>,
}

impl UnlabeledGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn components(&self) -> Vec<VertexSet> {
        components_of(self.vertex_count(), |i, j| self.adj[i][j])
    }
}

fn components_of(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<VertexSet> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in 0..n {
                if !seen[w] && adjacent(u, w) {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(VertexSet::from_sorted(comp));
    }
    out
}

/// Chordality verdict with a verifiable certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Chordality {
    Chordal { elimination: Vec<String> },
    NotChordal { cycle: Vec<String> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }

    /// Re-check the certificate against a graph.
    pub fn verify(&self, g: &LabeledGraph) -> bool {
        match self {
            Chordality::Chordal { elimination } => {
                if elimination.len() != g.vertex_count() {
                    return false;
                }
                let idx: Option<Vec<usize>> = elimination.iter().map(|v| g.index_of(v)).collect();
                match idx {
                    Some(peo) => {
                        let mut sorted = peo.clone();
                        sorted.sort_unstable();
                        sorted.dedup();
                        sorted.len() == g.vertex_count() && g.verify_peo_indices(&peo)
                    }
                    None => false,
                }
            }
            Chordality::NotChordal { cycle } => {
                let k = cycle.len();
                if k < 4 {
                    return false;
                }
                let idx: Option<Vec<usize>> = cycle.iter().map(|v| g.index_of(v)).collect();
                let Some(idx) = idx else { return false };
                let mut sorted = idx.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != k {
                    return false;
                }
                for i in 0..k {
                    for j in i + 1..k {
                        let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                        if g.adjacent(idx[i], idx[j]) != consecutive {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }
}

/// A split `G = g1 ∪ g2` with complete intersection `delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSplit {
    pub g1: VertexSet,
    pub g2: VertexSet,
    pub delta: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparatorOutcome {
    Split(CliqueSplit),
    NotSplittable,
}

/// Witness for the forbidden pattern: 4-cycle `v-a-w-b` all labeled 2,
/// chord `{v, w}` with label > 2, `{a, b}` non-adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenSquare {
    pub a: String,
    pub b: String,
    pub v: String,
    pub w: String,
}

impl fmt::Display for ForbiddenSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a={}, b={}, v={}, w={})",
            self.a, self.b, self.v, self.w
        )
    }
}
