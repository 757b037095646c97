//! Structural classification: even / spherical / FC / even FC / coherent /
//! derived-subgroup-free / irreducible, each with certificates.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{Chordality, ForbiddenSquare, LabeledGraph, VertexSet};
use crate::oracles;

/// Recognized connected Coxeter diagram type, or `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxeterTypeTag {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
    Infinite,
}

impl CoxeterTypeTag {
    pub fn is_finite(&self) -> bool {
        !matches!(self, CoxeterTypeTag::Infinite)
    }
}

impl fmt::Display for CoxeterTypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterTypeTag::A(n) => write!(f, "A{n}"),
            CoxeterTypeTag::B(n) => write!(f, "B{n}"),
            CoxeterTypeTag::D(n) => write!(f, "D{n}"),
            CoxeterTypeTag::E6 => write!(f, "E6"),
            CoxeterTypeTag::E7 => write!(f, "E7"),
            CoxeterTypeTag::E8 => write!(f, "E8"),
            CoxeterTypeTag::F4 => write!(f, "F4"),
            CoxeterTypeTag::H3 => write!(f, "H3"),
            CoxeterTypeTag::H4 => write!(f, "H4"),
            CoxeterTypeTag::I2(m) => write!(f, "I2({m})"),
            CoxeterTypeTag::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for CoxeterTypeTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One connected component of the Coxeter diagram with its recognized type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramComponent {
    pub vertices: Vec<String>,
    pub tag: CoxeterTypeTag,
}

/// Finiteness verdict for the associated Coxeter group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphericalVerdict {
    pub is_spherical: bool,
    pub components: Vec<DiagramComponent>,
    /// Numeric cross-check: positive definiteness of the cosine matrix.
    pub pd_crosscheck: bool,
}

/// Witness for incoherence, in the order the conditions are checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum FailingCondition {
    NotChordal { cycle: Vec<String> },
    BadClique { vertices: Vec<String> },
    ForbiddenSquare { pattern: ForbiddenSquare },
}

impl fmt::Display for FailingCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailingCondition::NotChordal { cycle } => {
                write!(f, "induced cycle of length >= 4: {}", cycle.join("-"))
            }
            FailingCondition::BadClique { vertices } => write!(
                f,
                "complete subgraph {{{}}} with more than one label different from 2",
                vertices.join(", ")
            ),
            FailingCondition::ForbiddenSquare { pattern } => {
                write!(f, "forbidden square-with-chord pattern {pattern}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoherenceVerdict {
    pub coherent: bool,
    pub failing_condition: Option<FailingCondition>,
}

/// Whether the derived subgroup is free; `trivial` flags the abelian case
/// where it is the trivial group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DerivedSubgroupVerdict {
    pub free: bool,
    pub trivial: bool,
}

/// True iff every edge label is even.
pub fn is_even(g: &LabeledGraph) -> bool {
    g.edges().iter().all(|&(_, _, m)| m % 2 == 0)
}

/// Finiteness of the associated Coxeter group, decided structurally on the
/// Coxeter diagram (one component per commuting-complement block), with the
/// positive-definiteness oracle attached as a cross-check.
pub fn spherical_type(g: &LabeledGraph) -> SphericalVerdict {
    let components: Vec<DiagramComponent> = g
        .commuting_complement()
        .components()
        .into_iter()
        .map(|comp| DiagramComponent {
            tag: classify_component(g, &comp),
            vertices: comp.names(g),
        })
        .collect();
    let is_spherical = components.iter().all(|c| c.tag.is_finite());
    SphericalVerdict {
        is_spherical,
        components,
        pd_crosscheck: oracles::cosine_matrix_pd(g),
    }
}

/// Recognize the connected Coxeter diagram induced on one
/// commuting-complement component against the finite-type catalog.
fn classify_component(g: &LabeledGraph, comp: &VertexSet) -> CoxeterTypeTag {
    let verts: Vec<usize> = comp.iter().collect();
    let n = verts.len();
    if n == 1 {
        return CoxeterTypeTag::A(1);
    }
    // A non-adjacent pair inside the component is an infinite bond.
    for (p, &u) in verts.iter().enumerate() {
        for &v in &verts[p + 1..] {
            if !g.adjacent(u, v) {
                return CoxeterTypeTag::Infinite;
            }
        }
    }
    // Diagram edges are the pairs with label >= 3.
    let edges: Vec<(usize, usize, u32)> = {
        let mut e = Vec::new();
        for (p, &u) in verts.iter().enumerate() {
            for &v in &verts[p + 1..] {
                if let Some(m) = g.label(u, v) {
                    if m >= 3 {
                        e.push((u, v, m));
                    }
                }
            }
        }
        e
    };
    if n == 2 {
        return CoxeterTypeTag::I2(edges[0].2);
    }
    if edges.len() != n - 1 {
        // The component is diagram-connected, so more edges means a cycle.
        return CoxeterTypeTag::Infinite;
    }
    let degree = |u: usize| edges.iter().filter(|&&(a, b, _)| a == u || b == u).count();
    let degrees: Vec<usize> = verts.iter().map(|&u| degree(u)).collect();
    if degrees.iter().any(|&d| d >= 4) {
        return CoxeterTypeTag::Infinite;
    }
    let branch_count = degrees.iter().filter(|&&d| d == 3).count();
    let heavy: Vec<u32> = edges
        .iter()
        .filter(|&&(_, _, m)| m >= 4)
        .map(|&(_, _, m)| m)
        .collect();
    if heavy.len() >= 2 {
        return CoxeterTypeTag::Infinite;
    }
    match branch_count {
        0 => classify_path(&verts, &edges, n),
        1 => {
            if !heavy.is_empty() {
                return CoxeterTypeTag::Infinite;
            }
            let center = verts[degrees.iter().position(|&d| d == 3).unwrap()];
            let mut arms: Vec<usize> = Vec::new();
            for (u, v, _) in &edges {
                for (&s, &o) in [(u, v), (v, u)] {
                    if s == center {
                        arms.push(arm_length(&edges, center, o));
                    }
                }
            }
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => CoxeterTypeTag::D(n),
                [1, 2, 2] => CoxeterTypeTag::E6,
                [1, 2, 3] => CoxeterTypeTag::E7,
                [1, 2, 4] => CoxeterTypeTag::E8,
                _ => CoxeterTypeTag::Infinite,
            }
        }
        _ => CoxeterTypeTag::Infinite,
    }
}

/// Number of edges in the arm starting at `center -> next` of a tree.
fn arm_length(edges: &[(usize, usize, u32)], center: usize, next: usize) -> usize {
    let mut len = 1;
    let mut prev = center;
    let mut cur = next;
    loop {
        let step = edges.iter().find_map(|&(a, b, _)| {
            if a == cur && b != prev {
                Some(b)
            } else if b == cur && a != prev {
                Some(a)
            } else {
                None
            }
        });
        match step {
            Some(nxt) => {
                prev = cur;
                cur = nxt;
                len += 1;
            }
            None => return len,
        }
    }
}

fn classify_path(verts: &[usize], edges: &[(usize, usize, u32)], n: usize) -> CoxeterTypeTag {
    // Walk the path from an endpoint and read the label sequence.
    let degree = |u: usize| edges.iter().filter(|&&(a, b, _)| a == u || b == u).count();
    let start = *verts
        .iter()
        .find(|&&u| degree(u) == 1)
        .expect("a tree path has endpoints");
    let mut labels = Vec::with_capacity(n - 1);
    let mut prev = usize::MAX;
    let mut cur = start;
    while labels.len() < n - 1 {
        let (nxt, m) = edges
            .iter()
            .find_map(|&(a, b, m)| {
                if a == cur && b != prev {
                    Some((b, m))
                } else if b == cur && a != prev {
                    Some((a, m))
                } else {
                    None
                }
            })
            .expect("path continues");
        labels.push(m);
        prev = cur;
        cur = nxt;
    }
    let heavy_positions: Vec<usize> = labels
        .iter()
        .enumerate()
        .filter(|&(_, &m)| m >= 4)
        .map(|(i, _)| i)
        .collect();
    match heavy_positions.as_slice() {
        [] => CoxeterTypeTag::A(n),
        [p] => {
            let q = labels[*p];
            let at_end = *p == 0 || *p == n - 2;
            match (q, at_end) {
                (4, true) => CoxeterTypeTag::B(n),
                (4, false) if n == 4 => CoxeterTypeTag::F4,
                (5, true) if n == 3 => CoxeterTypeTag::H3,
                (5, true) if n == 4 => CoxeterTypeTag::H4,
                _ => CoxeterTypeTag::Infinite,
            }
        }
        _ => unreachable!("two heavy edges already rejected"),
    }
}

/// FC-type: every complete induced subgraph generates a spherical group;
/// it suffices to check the maximal cliques.
pub fn is_fc(g: &LabeledGraph) -> bool {
    maximal_cliques(g)
        .into_iter()
        .all(|clique| spherical_type(&g.induced(&clique)).is_spherical)
}

/// Even FC-type, by the triangle rule: even, and every triangle has at least
/// two edges labeled 2.
pub fn is_even_fc(g: &LabeledGraph) -> bool {
    if !is_even(g) {
        return false;
    }
    let n = g.vertex_count();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (Some(a), Some(b), Some(c)) = (g.label(i, j), g.label(i, k), g.label(j, k))
                else {
                    continue;
                };
                let twos = [a, b, c].iter().filter(|&&m| m == 2).count();
                if twos < 2 {
                    return false;
                }
            }
        }
    }
    true
}

/// Bron-Kerbosch; candidate sets processed in canonical order.
fn maximal_cliques(g: &LabeledGraph) -> Vec<VertexSet> {
    fn extend(
        g: &LabeledGraph,
        clique: &mut Vec<usize>,
        mut candidates: Vec<usize>,
        mut excluded: Vec<usize>,
        out: &mut Vec<VertexSet>,
    ) {
        if candidates.is_empty() && excluded.is_empty() {
            out.push(VertexSet::from_sorted(clique.clone()));
            return;
        }
        while let Some(v) = candidates.first().copied() {
            candidates.remove(0);
            clique.push(v);
            let next_c: Vec<usize> = candidates
                .iter()
                .copied()
                .filter(|&u| g.adjacent(u, v))
                .collect();
            let next_e: Vec<usize> = excluded
                .iter()
                .copied()
                .filter(|&u| g.adjacent(u, v))
                .collect();
            extend(g, clique, next_c, next_e, out);
            clique.pop();
            excluded.push(v);
        }
    }
    let mut out = Vec::new();
    let mut clique = Vec::new();
    let n = g.vertex_count();
    if n == 0 {
        return out;
    }
    extend(g, &mut clique, (0..n).collect(), Vec::new(), &mut out);
    out
}

/// Coherence of the Artin group: chordal, at most one non-2 label in every
/// complete subgraph on 3 or 4 vertices, and no forbidden square pattern.
/// The first failing condition, in that order, is returned with a witness.
pub fn coherence(g: &LabeledGraph) -> CoherenceVerdict {
    if let Chordality::NotChordal { cycle } = g.is_chordal() {
        return CoherenceVerdict {
            coherent: false,
            failing_condition: Some(FailingCondition::NotChordal { cycle }),
        };
    }
    if let Some(bad) = bad_clique_witness(g) {
        return CoherenceVerdict {
            coherent: false,
            failing_condition: Some(FailingCondition::BadClique {
                vertices: bad.iter().map(|&i| g.name(i).to_owned()).collect(),
            }),
        };
    }
    if let Some(pattern) = g.find_forbidden_squares().into_iter().next() {
        return CoherenceVerdict {
            coherent: false,
            failing_condition: Some(FailingCondition::ForbiddenSquare { pattern }),
        };
    }
    CoherenceVerdict {
        coherent: true,
        failing_condition: None,
    }
}

/// First complete subgraph on 3 or 4 vertices (triangles first, canonical
/// order) with two or more labels different from 2.
fn bad_clique_witness(g: &LabeledGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let non2 = |set: &[usize]| -> usize {
        let mut count = 0;
        for (p, &u) in set.iter().enumerate() {
            for &v in &set[p + 1..] {
                match g.label(u, v) {
                    Some(2) => {}
                    Some(_) => count += 1,
                    None => return usize::MAX, // not a clique marker
                }
            }
        }
        count
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let c = non2(&[i, j, k]);
                if c != usize::MAX && c >= 2 {
                    return Some(vec![i, j, k]);
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let c = non2(&[i, j, k, l]);
                    if c != usize::MAX && c >= 2 {
                        return Some(vec![i, j, k, l]);
                    }
                }
            }
        }
    }
    None
}

/// The derived subgroup is free exactly when the group is coherent; it is
/// trivial exactly when the group is abelian (complete graph, all labels 2).
pub fn derived_subgroup_free(g: &LabeledGraph) -> DerivedSubgroupVerdict {
    let trivial = g.is_complete() && g.edges().iter().all(|&(_, _, m)| m == 2);
    DerivedSubgroupVerdict {
        free: coherence(g).coherent,
        trivial,
    }
}

/// Finest partition of the vertices into mutually commuting blocks: the
/// group is the direct product of the blocks, and irreducible iff there is
/// exactly one block.
pub fn irreducible_factors(g: &LabeledGraph) -> Vec<VertexSet> {
    g.commuting_complement().components()
}

impl SphericalVerdict {
    pub fn summary(&self) -> String {
        if !self.is_spherical {
            "not spherical".to_owned()
        } else if self.components.is_empty() {
            "spherical (trivial)".to_owned()
        } else {
            let tags: Vec<String> = self.components.iter().map(|c| c.tag.to_string()).collect();
            format!("spherical ({})", tags.join(" x "))
        }
    }
}

// Manual impl so the verdict can embed failing-condition text for humans
// alongside the structured witness.
impl fmt::Display for CoherenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failing_condition {
            None => write!(f, "coherent"),
            Some(cond) => write!(f, "incoherent: {cond}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::cosine_matrix_pd;

    fn triangle(m1: u32, m2: u32, m3: u32) -> LabeledGraph {
        LabeledGraph::new(
            &["a", "b", "c"],
            &[("a", "b", m1), ("a", "c", m2), ("b", "c", m3)],
        )
        .unwrap()
    }

    fn chorded_square() -> LabeledGraph {
        LabeledGraph::new(
            &["a", "b", "v", "w"],
            &[
                ("a", "v", 2),
                ("a", "w", 2),
                ("b", "w", 2),
                ("b", "v", 2),
                ("v", "w", 4),
            ],
        )
        .unwrap()
    }

    fn ex39() -> LabeledGraph {
        LabeledGraph::new(&["u", "v", "w"], &[("u", "v", 3), ("v", "w", 3)]).unwrap()
    }

    fn four_cycle(m1: u32, m2: u32, m3: u32, m4: u32) -> LabeledGraph {
        LabeledGraph::new(
            &["a", "b", "c", "d"],
            &[
                ("a", "b", m1),
                ("b", "c", m2),
                ("c", "d", m3),
                ("d", "a", m4),
            ],
        )
        .unwrap()
    }

    #[test]
    fn evenness() {
        let raag = triangle(2, 2, 2);
        assert!(is_even(&raag));
        assert!(!is_even(&ex39()));
        let single4 = LabeledGraph::new(&["a", "b"], &[("a", "b", 4)]).unwrap();
        assert!(is_even(&single4));
    }

    #[test]
    fn spherical_triangles() {
        let v = spherical_type(&triangle(2, 3, 5));
        assert!(v.is_spherical);
        assert!(v.components.iter().any(|c| c.tag == CoxeterTypeTag::H3));
        assert!(v.pd_crosscheck);

        let v = spherical_type(&triangle(2, 3, 6));
        assert!(!v.is_spherical);
        assert!(!v.pd_crosscheck);

        let v = spherical_type(&triangle(2, 3, 3));
        assert!(v.is_spherical);
        assert!(v.components.iter().any(|c| c.tag == CoxeterTypeTag::A(3)));

        let v = spherical_type(&triangle(2, 3, 4));
        assert!(v.components.iter().any(|c| c.tag == CoxeterTypeTag::B(3)));

        let v = spherical_type(&triangle(2, 2, 7));
        assert!(v.is_spherical);
        assert!(v.components.iter().any(|c| c.tag == CoxeterTypeTag::I2(7)));

        assert!(!spherical_type(&triangle(3, 3, 3)).is_spherical);
    }

    #[test]
    fn spherical_degenerate_cases() {
        let empty = LabeledGraph::new::<&str>(&[], &[]).unwrap();
        assert!(spherical_type(&empty).is_spherical);
        let single = LabeledGraph::new(&["a"], &[]).unwrap();
        let v = spherical_type(&single);
        assert!(v.is_spherical && v.pd_crosscheck);
        for m in 2..=12 {
            let edge = LabeledGraph::new(&["a", "b"], &[("a", "b", m)]).unwrap();
            assert!(spherical_type(&edge).is_spherical, "I2({m}) is finite");
        }
    }

    #[test]
    fn non_complete_is_never_spherical() {
        let v = spherical_type(&four_cycle(2, 2, 2, 2));
        assert!(!v.is_spherical);
        assert!(!v.pd_crosscheck);
        assert!(v
            .components
            .iter()
            .all(|c| c.tag == CoxeterTypeTag::Infinite));
    }

    /// Complete labeled graph realizing a given diagram: diagram edges keep
    /// their labels, everything else is labeled 2.
    fn from_diagram(n: usize, edges: &[(usize, usize, u32)]) -> LabeledGraph {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut all = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = edges
                    .iter()
                    .find(|&&(a, b, _)| (a, b) == (i, j) || (a, b) == (j, i))
                    .map_or(2, |&(_, _, m)| m);
                all.push((refs[i], refs[j], m));
            }
        }
        LabeledGraph::new(&refs, &all).unwrap()
    }

    fn path_diagram(labels: &[u32]) -> Vec<(usize, usize, u32)> {
        labels
            .iter()
            .enumerate()
            .map(|(i, &m)| (i, i + 1, m))
            .collect()
    }

    #[test]
    fn finite_type_catalog_matches_pd_oracle() {
        // Every catalog family instance is both recognized and positive
        // definite; the first step past each family is neither.
        let mut cases: Vec<(LabeledGraph, CoxeterTypeTag)> = Vec::new();
        cases.push((from_diagram(1, &[]), CoxeterTypeTag::A(1)));
        // Two-vertex components are always tagged I2(m); A2 = I2(3) and
        // B2 = I2(4) appear through the I2 family below.
        for n in 3..=7usize {
            let labels = vec![3; n - 1];
            cases.push((
                from_diagram(n, &path_diagram(&labels)),
                CoxeterTypeTag::A(n),
            ));
        }
        for n in 3..=7usize {
            let mut labels = vec![3; n - 1];
            labels[0] = 4;
            cases.push((
                from_diagram(n, &path_diagram(&labels)),
                CoxeterTypeTag::B(n),
            ));
        }
        for n in 4..=7usize {
            let mut edges = path_diagram(&vec![3; n - 2]);
            edges.push((n - 3, n - 1, 3));
            cases.push((from_diagram(n, &edges), CoxeterTypeTag::D(n)));
        }
        for (n, tag) in [
            (6, CoxeterTypeTag::E6),
            (7, CoxeterTypeTag::E7),
            (8, CoxeterTypeTag::E8),
        ] {
            let mut edges = path_diagram(&vec![3; n - 2]);
            edges.push((2, n - 1, 3));
            cases.push((from_diagram(n, &edges), tag));
        }
        cases.push((
            from_diagram(4, &path_diagram(&[3, 4, 3])),
            CoxeterTypeTag::F4,
        ));
        cases.push((from_diagram(3, &path_diagram(&[5, 3])), CoxeterTypeTag::H3));
        cases.push((
            from_diagram(4, &path_diagram(&[5, 3, 3])),
            CoxeterTypeTag::H4,
        ));
        for m in 3..=10 {
            cases.push((from_diagram(2, &[(0, 1, m)]), CoxeterTypeTag::I2(m)));
        }
        for (g, tag) in cases {
            let v = spherical_type(&g);
            assert!(v.is_spherical, "{tag} should be spherical");
            assert!(cosine_matrix_pd(&g), "{tag} should be positive definite");
            assert!(v.components.iter().any(|c| c.tag == tag), "expected {tag}");
        }

        // Affine and other just-infinite diagrams.
        let infinite = vec![
            from_diagram(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)]),
            from_diagram(5, &path_diagram(&[3, 4, 3, 3])),
            from_diagram(5, &path_diagram(&[3, 3, 5, 3])),
            from_diagram(5, &path_diagram(&[5, 3, 3, 3])),
            from_diagram(3, &path_diagram(&[3, 6])),
            from_diagram(9, &{
                let mut e = path_diagram(&[3; 7]);
                e.push((2, 8, 3));
                e
            }),
            // Star with four arms: the branch vertex has degree 4.
            from_diagram(5, &[(0, 1, 3), (0, 2, 3), (0, 3, 3), (0, 4, 3)]),
        ];
        for g in infinite {
            let v = spherical_type(&g);
            assert!(!v.is_spherical);
            assert!(!cosine_matrix_pd(&g));
        }
    }

    #[test]
    fn fc_type_checks() {
        assert!(is_even_fc(&triangle(2, 4, 2)));
        assert!(is_fc(&triangle(2, 4, 2)));

        let bad = triangle(4, 4, 2);
        assert!(is_even(&bad));
        assert!(!is_fc(&bad));
        assert!(!is_even_fc(&bad));

        // Triangle-free even graph.
        let c4 = four_cycle(4, 2, 4, 2);
        assert!(is_even_fc(&c4) && is_fc(&c4));

        assert!(!is_even_fc(&ex39()));
    }

    #[test]
    fn coherence_fixed_verdicts() {
        let v = coherence(&chorded_square());
        assert!(!v.coherent);
        assert!(matches!(
            v.failing_condition,
            Some(FailingCondition::ForbiddenSquare { .. })
        ));

        let v = coherence(&triangle(2, 3, 5));
        assert!(!v.coherent);
        assert!(matches!(
            v.failing_condition,
            Some(FailingCondition::BadClique { .. })
        ));

        let v = coherence(&four_cycle(2, 2, 2, 2));
        assert!(!v.coherent);
        assert!(matches!(
            v.failing_condition,
            Some(FailingCondition::NotChordal { .. })
        ));

        assert!(coherence(&ex39()).coherent);
    }

    #[test]
    fn k4_with_disjoint_heavy_edges_is_incoherent() {
        // Triangles each see one heavy edge; only the 4-clique check fails.
        let k4 = LabeledGraph::new(
            &["a", "b", "c", "d"],
            &[
                ("a", "b", 4),
                ("c", "d", 4),
                ("a", "c", 2),
                ("a", "d", 2),
                ("b", "c", 2),
                ("b", "d", 2),
            ],
        )
        .unwrap();
        let v = coherence(&k4);
        assert!(!v.coherent);
        match v.failing_condition {
            Some(FailingCondition::BadClique { vertices }) => assert_eq!(vertices.len(), 4),
            other => panic!("expected a 4-clique witness, got {other:?}"),
        }
    }

    #[test]
    fn derived_subgroup_verdicts() {
        assert!(derived_subgroup_free(&ex39()).free);
        assert!(!derived_subgroup_free(&four_cycle(2, 2, 2, 2)).free);
        let single = LabeledGraph::new(&["a"], &[]).unwrap();
        let v = derived_subgroup_free(&single);
        assert!(v.free && v.trivial);
        let z2 = LabeledGraph::new(&["a", "b"], &[("a", "b", 2)]).unwrap();
        assert!(derived_subgroup_free(&z2).trivial);
        assert!(!derived_subgroup_free(&ex39()).trivial);
    }

    #[test]
    fn irreducible_factor_blocks() {
        let z3 = triangle(2, 2, 2);
        assert_eq!(irreducible_factors(&z3).len(), 3);

        let g = LabeledGraph::new(
            &["a", "v", "w"],
            &[("a", "v", 2), ("a", "w", 4), ("v", "w", 2)],
        )
        .unwrap();
        let blocks: Vec<Vec<String>> = irreducible_factors(&g)
            .iter()
            .map(|b| b.names(&g))
            .collect();
        assert_eq!(blocks, vec![vec!["a", "w"], vec!["v"]]);

        assert_eq!(irreducible_factors(&four_cycle(4, 2, 4, 2)).len(), 1);
    }
}
