//! Group presentations and their text/JSON rendering.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::decompose::DecompositionTree;
use crate::error::Result;
use crate::evenfc::CentralizerStructure;
use crate::graph::LabeledGraph;
use crate::word::GeneratorWord;

/// One defining relation: the two alternating words of length `m` in `u`
/// and `v` agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinRelation {
    pub u: String,
    pub v: String,
    pub m: u32,
}

impl ArtinRelation {
    pub fn text(&self) -> String {
        format!(
            "{} = {}",
            alternating(&self.u, &self.v, self.m),
            alternating(&self.v, &self.u, self.m)
        )
    }
}

impl Serialize for ArtinRelation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ArtinRelation", 4)?;
        st.serialize_field("u", &self.u)?;
        st.serialize_field("v", &self.v)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("text", &self.text())?;
        st.end()
    }
}

/// Alternating word of length `m` starting at `u`: `u v u v ...`.
pub fn alternating(u: &str, v: &str, m: u32) -> String {
    let mut out = String::new();
    for i in 0..m {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(if i % 2 == 0 { u } else { v });
    }
    out
}

/// An equation between two generator words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationPair {
    pub lhs: GeneratorWord,
    pub rhs: GeneratorWord,
}

impl RelationPair {
    pub fn text(&self) -> String {
        format!("{} = {}", self.lhs, self.rhs)
    }
}

impl Serialize for RelationPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RelationPair", 3)?;
        st.serialize_field("lhs", &self.lhs)?;
        st.serialize_field("rhs", &self.rhs)?;
        st.serialize_field("text", &self.text())?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<ArtinRelation>,
    pub extra_relations: Vec<RelationPair>,
    /// Adds `v^2 = 1` for every generator when rendering.
    pub coxeter: bool,
}

impl GroupPresentation {
    /// Standard presentation read off the defining graph.
    pub fn from_graph(g: &LabeledGraph, coxeter: bool) -> Self {
        GroupPresentation {
            generators: g.vertex_names().to_vec(),
            relations: g
                .edges()
                .into_iter()
                .map(|(u, v, m)| ArtinRelation {
                    u: g.name(u).to_owned(),
                    v: g.name(v).to_owned(),
                    m,
                })
                .collect(),
            extra_relations: Vec::new(),
            coxeter,
        }
    }

    /// `< a, b | a b a b = b a b a >` style rendering.
    pub fn text(&self) -> String {
        let mut rels: Vec<String> = Vec::new();
        if self.coxeter {
            rels.extend(self.generators.iter().map(|v| format!("{v}^2 = 1")));
        }
        rels.extend(self.relations.iter().map(ArtinRelation::text));
        rels.extend(self.extra_relations.iter().map(RelationPair::text));
        if rels.is_empty() {
            format!("< {} | >", self.generators.join(", "))
        } else {
            format!("< {} | {} >", self.generators.join(", "), rels.join(", "))
        }
    }

    /// Rebuild the defining graph from the generator list and alternating
    /// relations; inverse of `from_graph` up to vertex order.
    pub fn to_graph(&self) -> Result<LabeledGraph> {
        let verts: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str, u32)> = self
            .relations
            .iter()
            .map(|r| (r.u.as_str(), r.v.as_str(), r.m))
            .collect();
        LabeledGraph::new(&verts, &edges)
    }
}

/// Render a decomposition tree with amalgam and product combinators, e.g.
/// `A{x,c} *_{A{c}} A{c,y}`.
pub fn render_tree(tree: &DecompositionTree) -> String {
    render_tree_prec(tree, false)
}

fn render_tree_prec(tree: &DecompositionTree, nested: bool) -> String {
    match tree {
        DecompositionTree::Leaf { vertices } => format!("A{{{}}}", vertices.join(",")),
        DecompositionTree::Amalgam { left, right, over } => {
            let body = format!(
                "{} *_{{A{{{}}}}} {}",
                render_tree_prec(left, true),
                over.join(","),
                render_tree_prec(right, true)
            );
            if nested {
                format!("({body})")
            } else {
                body
            }
        }
        DecompositionTree::DirectProduct { factors } => {
            let body = factors
                .iter()
                .map(|f| render_tree_prec(f, true))
                .collect::<Vec<_>>()
                .join(" x ");
            if nested {
                format!("({body})")
            } else {
                body
            }
        }
        DecompositionTree::Semidirect { actor, base } => {
            format!("<{actor}> |x A{{{}}}", base.vertex_names().join(","))
        }
    }
}

/// Presentation of the centralizer `<a> x L`: the actor commutes with every
/// generator of `L`, and `L` carries the Artin relations of its graph.
pub fn centralizer_presentation(c: &CentralizerStructure) -> GroupPresentation {
    let mut generators = vec![c.actor.clone()];
    generators.extend(c.l_graph.vertex_names().iter().cloned());
    let relations: Vec<ArtinRelation> = c
        .l_graph
        .edges()
        .into_iter()
        .map(|(u, v, m)| ArtinRelation {
            u: c.l_graph.name(u).to_owned(),
            v: c.l_graph.name(v).to_owned(),
            m,
        })
        .collect();
    let extra_relations: Vec<RelationPair> = c
        .l_graph
        .vertex_names()
        .iter()
        .map(|l| RelationPair {
            lhs: GeneratorWord::from_letters([(c.actor.as_str(), 1), (l.as_str(), 1)]),
            rhs: GeneratorWord::from_letters([(l.as_str(), 1), (c.actor.as_str(), 1)]),
        })
        .collect();
    GroupPresentation {
        generators,
        relations,
        extra_relations,
        coxeter: false,
    }
}

/// Rewritten presentation of the star of the actor as a semidirect product:
/// conjugation by the actor fixes the label-2 link, cycles the `w_i` family
/// of every heavier link vertex, and fixes the twisted generator.
pub fn star_semidirect_presentation(c: &CentralizerStructure) -> GroupPresentation {
    let a = c.actor.as_str();
    let mut generators = vec![c.actor.clone()];
    generators.extend(c.omega1.iter().cloned());
    // Base generators per heavy vertex w: w (= w_0), w_1 .. w_{k-2}, z_{a,w}.
    let family = |w: &str, k: u32| -> Vec<String> {
        let mut names = vec![w.to_owned()];
        for i in 1..=k.saturating_sub(2) {
            names.push(format!("{w}_{i}"));
        }
        names.push(format!("z_{{{a},{w}}}"));
        names
    };
    for (w, k) in &c.heavy {
        generators.extend(family(w, *k));
    }
    let mut relations: Vec<ArtinRelation> = Vec::new();
    // Relations among the label-2 link survive unchanged.
    for (u, v, m) in c.l_graph.edges() {
        let (un, vn) = (c.l_graph.name(u), c.l_graph.name(v));
        if c.omega1.iter().any(|o| o == un) && c.omega1.iter().any(|o| o == vn) {
            relations.push(ArtinRelation {
                u: un.to_owned(),
                v: vn.to_owned(),
                m,
            });
        }
    }
    // Every member of a heavy family commutes with the label-2 link
    // neighbors of its base vertex.
    for (w, k) in &c.heavy {
        let z_name = format!("z_{{{a},{w}}}");
        let z_idx = c.l_graph.index_of(&z_name).expect("twisted vertex is in L");
        let neighbors: Vec<String> = c
            .l_graph
            .neighbors(z_idx)
            .into_iter()
            .map(|i| c.l_graph.name(i).to_owned())
            .collect();
        for member in family(w, *k) {
            for v in &neighbors {
                relations.push(ArtinRelation {
                    u: member.clone(),
                    v: v.clone(),
                    m: 2,
                });
            }
        }
    }
    // Conjugation action of the actor.
    let conj =
        |x: &str| -> GeneratorWord { GeneratorWord::from_letters([(a, -1), (x, 1), (a, 1)]) };
    let mut extra_relations: Vec<RelationPair> = Vec::new();
    for v in &c.omega1 {
        extra_relations.push(RelationPair {
            lhs: conj(v),
            rhs: GeneratorWord::generator(v),
        });
    }
    for (w, k) in &c.heavy {
        let members = family(w, *k);
        let z_name = members.last().expect("family ends with z").clone();
        // w_i -> w_{i+1} for i = 0 .. k-3.
        for i in 0..members.len().saturating_sub(2) {
            extra_relations.push(RelationPair {
                lhs: conj(&members[i]),
                rhs: GeneratorWord::generator(&members[i + 1]),
            });
        }
        // w_{k-2} -> z w_0^-1 ... w_{k-2}^-1.
        let last_base = &members[members.len() - 2];
        let mut rhs: Vec<(String, i64)> = vec![(z_name.clone(), 1)];
        for base in &members[..members.len() - 1] {
            rhs.push((base.clone(), -1));
        }
        extra_relations.push(RelationPair {
            lhs: conj(last_base),
            rhs: GeneratorWord::from_letters(rhs),
        });
        extra_relations.push(RelationPair {
            lhs: conj(&z_name),
            rhs: GeneratorWord::generator(&z_name),
        });
    }
    GroupPresentation {
        generators,
        relations,
        extra_relations,
        coxeter: false,
    }
}
