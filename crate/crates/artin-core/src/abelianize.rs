//! Abelianization of the group and the odd-component restriction test for
//! standard parabolic subgroups.

use serde::ser::SerializeMap;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexSet};

/// The abelianization is free abelian; its rank is the number of connected
/// components of the odd-label subgraph, and each vertex maps to the basis
/// element of its component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianizationMap {
    pub rank: usize,
    /// `(vertex name, basis index)` in canonical vertex order.
    classes: Vec<(String, usize)>,
}

impl AbelianizationMap {
    pub fn class_of(&self, vertex: &str) -> Option<usize> {
        self.classes
            .iter()
            .find(|(v, _)| v == vertex)
            .map(|&(_, c)| c)
    }

    pub fn classes(&self) -> &[(String, usize)] {
        &self.classes
    }
}

impl Serialize for AbelianizationMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Clone)]
        struct ClassMap<'a>(&'a [(String, usize)]);
        impl Serialize for ClassMap<'_> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (name, class) in self.0 {
                    map.serialize_entry(name, class)?;
                }
                map.end()
            }
        }
        let mut st = serializer.serialize_struct("AbelianizationMap", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("classes", &ClassMap(&self.classes))?;
        st.end()
    }
}

/// Rank and class map of the abelianization, from the components of the
/// odd-label subgraph. Components are numbered by smallest vertex.
pub fn abelianization(g: &LabeledGraph) -> AbelianizationMap {
    let comps = g.odd_subgraph().components();
    let mut class = vec![usize::MAX; g.vertex_count()];
    for (c, comp) in comps.iter().enumerate() {
        for v in comp.iter() {
            class[v] = c;
        }
    }
    AbelianizationMap {
        rank: comps.len(),
        classes: class
            .iter()
            .enumerate()
            .map(|(v, &c)| (g.name(v).to_owned(), c))
            .collect(),
    }
}

/// Result of the restriction test, with a witness pair when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutatorCheck {
    pub holds: bool,
    /// Two vertices of the subset odd-connected in the ambient graph but not
    /// inside the subset.
    pub witness: Option<(String, String)>,
}

/// True iff the odd components of the induced subgraph on `omega` are
/// exactly the intersections of the ambient odd components with `omega`;
/// then the derived subgroup of the parabolic subgroup is the restriction of
/// the ambient derived subgroup.
pub fn parabolic_commutator_check(g: &LabeledGraph, omega: &VertexSet) -> Result<CommutatorCheck> {
    if omega.indices().iter().any(|&i| i >= g.vertex_count()) {
        return Err(Error::SubsetViolation(
            "vertex set indices exceed the graph".to_owned(),
        ));
    }
    let ambient = abelianization(g);
    let induced = g.induced(omega);
    let restricted = abelianization(&induced);
    let verts: Vec<usize> = omega.iter().collect();
    for (p, &x) in verts.iter().enumerate() {
        for &y in &verts[p + 1..] {
            let (xn, yn) = (g.name(x), g.name(y));
            let joined_in_g = ambient.class_of(xn) == ambient.class_of(yn);
            let joined_in_omega = restricted.class_of(xn) == restricted.class_of(yn);
            debug_assert!(
                !joined_in_omega || joined_in_g,
                "odd paths inside the subset exist in the ambient graph"
            );
            if joined_in_g && !joined_in_omega {
                return Ok(CommutatorCheck {
                    holds: false,
                    witness: Some((xn.to_owned(), yn.to_owned())),
                });
            }
        }
    }
    Ok(CommutatorCheck {
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_39() -> LabeledGraph {
        LabeledGraph::new(&["u", "v", "w"], &[("u", "v", 3), ("v", "w", 3)]).unwrap()
    }

    #[test]
    fn even_graph_has_full_rank() {
        let g = LabeledGraph::new(&["a", "b", "c"], &[("a", "b", 2), ("b", "c", 4)]).unwrap();
        let ab = abelianization(&g);
        assert_eq!(ab.rank, 3);
        let classes: Vec<usize> = ab.classes().iter().map(|&(_, c)| c).collect();
        assert_eq!(classes, vec![0, 1, 2]);
    }

    #[test]
    fn odd_path_has_rank_one() {
        assert_eq!(abelianization(&example_39()).rank, 1);
    }

    #[test]
    fn odd_triangle_rank() {
        let g = LabeledGraph::new(
            &["a", "b", "c"],
            &[("a", "b", 2), ("a", "c", 3), ("b", "c", 3)],
        )
        .unwrap();
        assert_eq!(abelianization(&g).rank, 1);
    }

    #[test]
    fn restriction_fails_on_odd_path_ends() {
        let g = example_39();
        let omega = g.vertex_set(&["u", "w"]).unwrap();
        let check = parabolic_commutator_check(&g, &omega).unwrap();
        assert!(!check.holds);
        assert_eq!(check.witness, Some(("u".to_owned(), "w".to_owned())));
    }

    #[test]
    fn restriction_holds_for_even_graphs_and_full_set() {
        let even = LabeledGraph::new(&["a", "b", "c"], &[("a", "b", 4), ("b", "c", 2)]).unwrap();
        for subset in [
            vec!["a"],
            vec!["a", "b"],
            vec!["a", "c"],
            vec!["a", "b", "c"],
        ] {
            let omega = even.vertex_set(&subset).unwrap();
            assert!(parabolic_commutator_check(&even, &omega).unwrap().holds);
        }
        let g = example_39();
        let full = g.full_vertex_set();
        assert!(parabolic_commutator_check(&g, &full).unwrap().holds);
    }

    #[test]
    fn json_shape() {
        let g = example_39();
        let ab = abelianization(&g);
        let json = serde_json::to_string(&ab).unwrap();
        assert_eq!(json, r#"{"rank":1,"classes":{"u":0,"v":0,"w":0}}"#);
    }
}
