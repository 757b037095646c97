//! Centralizers, normalizers, and acylindricity reports for even Artin
//! groups of FC-type.
//!
//! Everything here is a containment statement where only containment is
//! known: verdicts say "bound", never "equals", except the case where the
//! normalizer provably equals the parabolic subgroup itself.

use serde::Serialize;

use crate::classifier::is_even_fc;
use crate::decompose::DecompositionTree;
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexSet};
use crate::word::GeneratorWord;

/// One generator of a centralizer, with its word in the standard generators
/// and, for twisted generators, a factored display form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerGenerator {
    pub name: String,
    pub word: GeneratorWord,
    pub factored: Option<String>,
}

/// `C(a) = <a> x L`: the centralizer of a standard generator, with `L` an
/// Artin group over a graph isomorphic to the link of `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerStructure {
    pub actor: String,
    pub generators: Vec<CentralizerGenerator>,
    pub l_graph: LabeledGraph,
    /// Link vertices joined to the actor with label 2.
    pub omega1: Vec<String>,
    /// `(vertex, k)` for link vertices joined to the actor with label `2k`,
    /// `k > 1`.
    pub heavy: Vec<(String, u32)>,
}

impl CentralizerStructure {
    pub fn to_tree(&self) -> DecompositionTree {
        DecompositionTree::Semidirect {
            actor: self.actor.clone(),
            base: self.l_graph.clone(),
        }
    }
}

/// Normalizer containment verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum NormalizerCase {
    /// `N(A_S) = A_S`.
    Equal { s: Vec<String> },
    /// `N(A_S) <= A_T1 x A_T2` with `T1`, `T2` disjoint and nonempty.
    ProductBound { t1: Vec<String>, t2: Vec<String> },
    /// `A_S` free abelian and `N(A_S) <= L x A_S`.
    SemidirectBound {
        l_graph: LabeledGraph,
        s: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizerVerdict {
    #[serde(flatten)]
    pub case: NormalizerCase,
    /// Vertices removed from the ambient graph during the reduction, in
    /// removal order, so the trace can be audited.
    pub removed_vertices: Vec<String>,
    /// Central subset of `S` carrying all remaining heavy links (product
    /// case only).
    pub z: Option<Vec<String>>,
}

/// Per-factor acylindricity classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FactorKind {
    SingleVertex {
        vertex: String,
    },
    Dihedral {
        a: String,
        b: String,
        k: u32,
        center: GeneratorWord,
        quotient: String,
    },
    AcylindricallyHyperbolic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AcylFactor {
    pub vertices: Vec<String>,
    #[serde(flatten)]
    pub kind: FactorKind,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AcylReport {
    pub target: Vec<String>,
    pub factors: Vec<AcylFactor>,
    pub overall: String,
}

fn ensure_even_fc(g: &LabeledGraph) -> Result<()> {
    if is_even_fc(g) {
        Ok(())
    } else {
        Err(Error::NotEvenFC(
            "all labels must be even and every triangle needs at least two labels equal to 2"
                .to_owned(),
        ))
    }
}

/// The twisted generator `z = a^(1-k) (w a)^k a^-1` commuting with `a`.
fn twist_word(a: &str, w: &str, k: u32) -> GeneratorWord {
    let mut letters: Vec<(&str, i64)> = vec![(a, 1 - i64::from(k))];
    for _ in 0..k {
        letters.push((w, 1));
        letters.push((a, 1));
    }
    letters.push((a, -1));
    GeneratorWord::from_letters(letters)
}

fn z_generator(a: &str, w: &str, k: u32) -> CentralizerGenerator {
    CentralizerGenerator {
        name: format!("z_{{{a},{w}}}"),
        word: twist_word(a, w, k),
        factored: Some(format!("{a}^{} ({w} {a})^{} {a}^-1", 1 - i64::from(k), k)),
    }
}

fn delta_pair_generator(g: &LabeledGraph, x: usize, y: usize, m: u32) -> CentralizerGenerator {
    let (xn, yn) = (g.name(x), g.name(y));
    let k = m / 2;
    let mut letters: Vec<(&str, i64)> = Vec::new();
    for _ in 0..k {
        letters.push((yn, 1));
        letters.push((xn, 1));
    }
    CentralizerGenerator {
        name: format!("Delta_{{{xn},{yn}}}"),
        word: GeneratorWord::from_letters(letters),
        factored: Some(format!("({yn} {xn})^{k}")),
    }
}

/// Centralizer of a standard generator: `a` itself, the link vertices joined
/// with label 2, and one twisted generator per heavier link vertex. The
/// graph of `L` is a relabeled copy of the link of `a`.
pub fn vertex_centralizer(g: &LabeledGraph, a: &str) -> Result<CentralizerStructure> {
    ensure_even_fc(g)?;
    let ai = g.require_vertex(a)?;
    let link = g.neighbors(ai);
    let mut generators = vec![CentralizerGenerator {
        name: a.to_owned(),
        word: GeneratorWord::generator(a),
        factored: None,
    }];
    let mut omega1 = Vec::new();
    let mut heavy = Vec::new();
    let mut l_names: Vec<String> = Vec::new();
    for &u in &link {
        let m = g.label(ai, u).expect("link vertex is adjacent");
        let un = g.name(u);
        if m == 2 {
            omega1.push(un.to_owned());
            l_names.push(un.to_owned());
            generators.push(CentralizerGenerator {
                name: un.to_owned(),
                word: GeneratorWord::generator(un),
                factored: None,
            });
        } else {
            let k = m / 2;
            let gen = z_generator(a, un, k);
            l_names.push(gen.name.clone());
            heavy.push((un.to_owned(), k));
            generators.push(gen);
        }
    }
    // Edges of L mirror the induced link; every edge touching a twisted
    // vertex is forced to label 2 and twisted vertices are never adjacent.
    let mut l_edges: Vec<(String, String, u32)> = Vec::new();
    for (p, &u) in link.iter().enumerate() {
        for (q, &v) in link.iter().enumerate().skip(p + 1) {
            let Some(m) = g.label(u, v) else { continue };
            let u_heavy = g.label(ai, u) != Some(2);
            let v_heavy = g.label(ai, v) != Some(2);
            if u_heavy && v_heavy {
                return Err(Error::InternalInconsistency(format!(
                    "link vertices {} and {} both heavy yet adjacent",
                    g.name(u),
                    g.name(v)
                )));
            }
            if (u_heavy || v_heavy) && m != 2 {
                return Err(Error::InternalInconsistency(format!(
                    "edge {{{}, {}}} in the link of {a} should be labeled 2",
                    g.name(u),
                    g.name(v)
                )));
            }
            l_edges.push((l_names[p].clone(), l_names[q].clone(), m));
        }
    }
    let l_refs: Vec<&str> = l_names.iter().map(String::as_str).collect();
    let l_edge_refs: Vec<(&str, &str, u32)> = l_edges
        .iter()
        .map(|(u, v, m)| (u.as_str(), v.as_str(), *m))
        .collect();
    let l_graph = LabeledGraph::new(&l_refs, &l_edge_refs)?;
    Ok(CentralizerStructure {
        actor: a.to_owned(),
        generators,
        l_graph,
        omega1,
        heavy,
    })
}

/// Parabolic bound for the intersection of two vertex centralizers:
/// `C(a) ∩ C(b) <= A_T` with `T` the vertices commuting with both.
pub fn pair_centralizer_bound(g: &LabeledGraph, a: &str, b: &str) -> Result<VertexSet> {
    ensure_even_fc(g)?;
    let ai = g.require_vertex(a)?;
    let bi = g.require_vertex(b)?;
    if ai == bi {
        return Err(Error::MalformedInput(
            "two distinct vertices required".to_owned(),
        ));
    }
    if g.adjacent(ai, bi) {
        return Err(Error::VerticesAdjacent {
            u: a.to_owned(),
            v: b.to_owned(),
        });
    }
    Ok(VertexSet::from_sorted(
        (0..g.vertex_count())
            .filter(|&v| g.label(v, ai) == Some(2) && g.label(v, bi) == Some(2))
            .collect(),
    ))
}

/// True when `x` and `y` fail to commute as generators: non-adjacent, or
/// adjacent with label > 2.
fn non_commuting(g: &LabeledGraph, x: usize, y: usize) -> bool {
    g.label(x, y) != Some(2)
}

/// Component of `seed` in the non-commutation graph restricted to `allowed`.
fn sharp_component(g: &LabeledGraph, allowed: &[usize], seed: usize) -> Vec<usize> {
    let mut comp = vec![seed];
    let mut stack = vec![seed];
    while let Some(u) = stack.pop() {
        for &w in allowed {
            if w != u && !comp.contains(&w) && non_commuting(g, u, w) {
                comp.push(w);
                stack.push(w);
            }
        }
    }
    comp.sort_unstable();
    comp
}

/// Generators of the centralizer of a standard parabolic subgroup, from the
/// two elementary-ribbon families specialized to even FC-type, where every
/// spherical indecomposable block has at most two vertices:
///
/// * per indecomposable block of `S`: the vertex itself, or for an adjacent
///   pair the central element `(y x)^k`;
/// * per outside vertex `t` whose block in `S ∪ {t}` stays spherical: `t`
///   itself, or the twisted generator over the unique heavy link into `S`.
pub fn parabolic_centralizer_generators(
    g: &LabeledGraph,
    s: &VertexSet,
) -> Result<Vec<CentralizerGenerator>> {
    ensure_even_fc(g)?;
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    if s.indices().iter().any(|&i| i >= g.vertex_count()) {
        return Err(Error::SubsetViolation(
            "vertex set indices exceed the graph".to_owned(),
        ));
    }
    let s_verts: Vec<usize> = s.iter().collect();
    let mut out = Vec::new();
    // Indecomposable blocks of S itself.
    let mut seen: Vec<usize> = Vec::new();
    for &v in &s_verts {
        if seen.contains(&v) {
            continue;
        }
        let comp = sharp_component(g, &s_verts, v);
        seen.extend(&comp);
        match comp.as_slice() {
            [x] => out.push(CentralizerGenerator {
                name: g.name(*x).to_owned(),
                word: GeneratorWord::generator(g.name(*x)),
                factored: None,
            }),
            [x, y] => {
                if let Some(m) = g.label(*x, *y) {
                    out.push(delta_pair_generator(g, *x, *y, m));
                }
            }
            // Larger blocks are never complete in even FC-type, hence never
            // spherical: no generator.
            _ => {}
        }
    }
    // Outside vertices whose block in S ∪ {t} stays spherical.
    for t in 0..g.vertex_count() {
        if s.contains(t) {
            continue;
        }
        let mut allowed = s_verts.clone();
        allowed.push(t);
        allowed.sort_unstable();
        let comp = sharp_component(g, &allowed, t);
        match comp.as_slice() {
            [x] if *x == t => out.push(CentralizerGenerator {
                name: g.name(t).to_owned(),
                word: GeneratorWord::generator(g.name(t)),
                factored: None,
            }),
            [x, y] => {
                let s0 = if *x == t { *y } else { *x };
                if let Some(m) = g.label(t, s0) {
                    out.push(z_generator(g.name(s0), g.name(t), m / 2));
                }
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Normalizer classification mirroring the reduction: empty common link
/// means equality; a free abelian base gives the semidirect bound through
/// the vertex centralizer of the canonically first vertex of `S`; otherwise
/// ambient vertices with a heavy link into a non-central generator are
/// successively removed and the result is either equality or a product
/// bound split along the central part.
pub fn normalizer_classify(g: &LabeledGraph, s: &VertexSet) -> Result<NormalizerVerdict> {
    ensure_even_fc(g)?;
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    let n = g.vertex_count();
    if s.indices().iter().any(|&i| i >= n) {
        return Err(Error::SubsetViolation(
            "vertex set indices exceed the graph".to_owned(),
        ));
    }
    let common_link = |alive: &[bool]| -> Vec<usize> {
        (0..n)
            .filter(|&v| alive[v] && !s.contains(v) && s.iter().all(|a| g.adjacent(v, a)))
            .collect()
    };
    let alive_all = vec![true; n];
    if common_link(&alive_all).is_empty() {
        return Ok(NormalizerVerdict {
            case: NormalizerCase::Equal { s: s.names(g) },
            removed_vertices: Vec::new(),
            z: None,
        });
    }
    let s_verts: Vec<usize> = s.iter().collect();
    let free_abelian = s_verts
        .iter()
        .enumerate()
        .all(|(p, &x)| s_verts[p + 1..].iter().all(|&y| g.label(x, y) == Some(2)));
    if free_abelian {
        let canonical = g.name(s_verts[0]).to_owned();
        let centralizer = vertex_centralizer(g, &canonical)?;
        return Ok(NormalizerVerdict {
            case: NormalizerCase::SemidirectBound {
                l_graph: centralizer.l_graph,
                s: s.names(g),
            },
            removed_vertices: Vec::new(),
            z: None,
        });
    }
    let mut alive = vec![true; n];
    let mut removed = Vec::new();
    loop {
        let lk = common_link(&alive);
        let candidate = lk.iter().copied().find(|&v| {
            s.iter().any(|a| {
                g.label(v, a).is_some_and(|m| m > 2)
                    && s.iter().any(|b| b != a && non_commuting(g, a, b))
            })
        });
        match candidate {
            Some(v) => {
                alive[v] = false;
                removed.push(g.name(v).to_owned());
            }
            None => break,
        }
    }
    let lk2 = common_link(&alive);
    let z: Vec<usize> = s
        .iter()
        .filter(|&a| lk2.iter().any(|&w| g.label(a, w).is_some_and(|m| m > 2)))
        .collect();
    for &zv in &z {
        for b in s.iter() {
            if b != zv && g.label(zv, b) != Some(2) {
                return Err(Error::InternalInconsistency(format!(
                    "vertex {} carries a heavy outside link but is not central in the subset",
                    g.name(zv)
                )));
            }
        }
    }
    if lk2.is_empty() {
        return Ok(NormalizerVerdict {
            case: NormalizerCase::Equal { s: s.names(g) },
            removed_vertices: removed,
            z: None,
        });
    }
    let t1: Vec<usize> = s.iter().filter(|v| !z.contains(v)).collect();
    if t1.is_empty() {
        return Err(Error::InternalInconsistency(
            "non-abelian subset reduced to its center".to_owned(),
        ));
    }
    let mut t2: Vec<usize> = z.iter().copied().chain(lk2).collect();
    t2.sort_unstable();
    let z_names: Vec<String> = z.iter().map(|&i| g.name(i).to_owned()).collect();
    Ok(NormalizerVerdict {
        case: NormalizerCase::ProductBound {
            t1: t1.iter().map(|&i| g.name(i).to_owned()).collect(),
            t2: t2.iter().map(|&i| g.name(i).to_owned()).collect(),
        },
        removed_vertices: removed,
        z: Some(z_names),
    })
}

/// Per-factor acylindricity report for the group or a standard parabolic
/// subgroup of it.
pub fn acyl_report(g: &LabeledGraph, target: Option<&VertexSet>) -> Result<AcylReport> {
    ensure_even_fc(g)?;
    let target_set = match target {
        Some(t) => {
            if t.indices().iter().any(|&i| i >= g.vertex_count()) {
                return Err(Error::SubsetViolation(
                    "vertex set indices exceed the graph".to_owned(),
                ));
            }
            t.clone()
        }
        None => g.full_vertex_set(),
    };
    let sub = g.induced(&target_set);
    let factors: Vec<AcylFactor> = sub
        .commuting_complement()
        .components()
        .into_iter()
        .map(|comp| classify_factor(&sub, &comp))
        .collect();
    let overall = if factors.is_empty() {
        "trivial group".to_owned()
    } else if factors.len() == 1 {
        format!("irreducible: {}", factors[0].verdict)
    } else if factors
        .iter()
        .all(|f| matches!(f.kind, FactorKind::SingleVertex { .. }))
    {
        "free abelian; no acylindrically hyperbolic factor".to_owned()
    } else {
        "reducible: direct product of standard parabolic subgroups; \
         two commuting infinite normal subgroups obstruct acylindrical hyperbolicity"
            .to_owned()
    };
    Ok(AcylReport {
        target: target_set.names(g),
        factors,
        overall,
    })
}

fn classify_factor(sub: &LabeledGraph, comp: &VertexSet) -> AcylFactor {
    let names = comp.names(sub);
    let idx: Vec<usize> = comp.iter().collect();
    if idx.len() == 1 {
        return AcylFactor {
            vertices: names.clone(),
            kind: FactorKind::SingleVertex {
                vertex: names[0].clone(),
            },
            verdict: "infinite cyclic (virtually cyclic; not acylindrically hyperbolic)".to_owned(),
        };
    }
    if idx.len() == 2 {
        if let Some(m) = sub.label(idx[0], idx[1]) {
            let k = m / 2;
            let (a, b) = (sub.name(idx[0]), sub.name(idx[1]));
            let mut letters: Vec<(&str, i64)> = Vec::new();
            for _ in 0..k {
                letters.push((a, 1));
                letters.push((b, 1));
            }
            return AcylFactor {
                vertices: names,
                kind: FactorKind::Dihedral {
                    a: a.to_owned(),
                    b: b.to_owned(),
                    k,
                    center: GeneratorWord::from_letters(letters),
                    quotient: format!("Z * Z_{k}"),
                },
                verdict: format!(
                    "dihedral: infinite center generated by ({a} {b})^{k}; \
                     the quotient by the center is Z * Z_{k}; \
                     center x (free normal closure of {b}) has finite index"
                ),
            };
        }
    }
    AcylFactor {
        vertices: names,
        kind: FactorKind::AcylindricallyHyperbolic,
        verdict:
            "irreducible even FC-type, not a single vertex, not dihedral: acylindrically hyperbolic"
                .to_owned(),
    }
}
