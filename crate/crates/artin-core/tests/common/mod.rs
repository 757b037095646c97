//! Shared enumeration and RNG helpers for the integration suites.
#![allow(dead_code)] // each test binary uses its own subset of the helpers

use artin_core::abelianize;
use artin_core::decompose::{self, DecompositionTree};
use artin_core::graph::{CliqueSplit, VertexSet};
use artin_core::LabeledGraph;

pub const NAMES: [&str; 16] = [
    "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p",
];

/// Canonical pair order: (0,1), (0,2), (1,2), (0,3), ... — every triangle
/// {x, i, j} is complete as soon as its last pair (i, j) is assigned.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for j in 0..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

pub fn build_graph(n: usize, edges: &[(usize, usize, u32)]) -> LabeledGraph {
    let verts: Vec<&str> = NAMES[..n].to_vec();
    let named: Vec<(&str, &str, u32)> = edges
        .iter()
        .map(|&(i, j, m)| (NAMES[i], NAMES[j], m))
        .collect();
    LabeledGraph::new(&verts, &named).expect("enumerated graph is valid")
}

/// Run `f(i)` for every `i` in `0..total`, strided over the available
/// threads. Panics inside `f` fail the calling test.
pub fn run_sharded(total: u64, f: impl Fn(u64) + Sync) {
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(8);
    std::thread::scope(|scope| {
        for w in 0..workers as u64 {
            let f = &f;
            scope.spawn(move || {
                let mut i = w;
                while i < total {
                    f(i);
                    i += workers as u64;
                }
            });
        }
    });
}

/// Decode a base-`k` digit string over the pair list into labeled edges:
/// digit 0 = no edge, digit d >= 1 = label `labels[d - 1]`.
pub fn decode_graph(n: usize, mut code: u64, labels: &[u32]) -> LabeledGraph {
    let k = labels.len() as u64 + 1;
    let mut edges = Vec::new();
    for (i, j) in pair_list(n) {
        let digit = (code % k) as usize;
        code /= k;
        if digit > 0 {
            edges.push((i, j, labels[digit - 1]));
        }
    }
    build_graph(n, &edges)
}

pub fn code_count(n: usize, label_count: usize) -> u64 {
    let pairs = (n * n.saturating_sub(1) / 2) as u32;
    (label_count as u64 + 1).pow(pairs)
}

/// Complete graph on `n` vertices; the base-`labels.len()` digits of `code`
/// pick each pair's label.
pub fn complete_graph(n: usize, mut code: u64, labels: &[u32]) -> LabeledGraph {
    let mut edges = Vec::new();
    for (i, j) in pair_list(n) {
        let digit = (code % labels.len() as u64) as usize;
        code /= labels.len() as u64;
        edges.push((i, j, labels[digit]));
    }
    build_graph(n, &edges)
}

/// Enumerate all even FC-type graphs on `n` vertices with labels drawn from
/// `{2} ∪ heavies`, pruning as soon as a triangle collects two non-2 labels.
pub fn for_each_even_fc(n: usize, heavies: &[u32], f: &mut impl FnMut(&LabeledGraph)) {
    let pairs = pair_list(n);
    let mut labels: Vec<Option<u32>> = vec![None; pairs.len()];
    recurse_even_fc(n, heavies, &pairs, &mut labels, 0, f);
}

fn recurse_even_fc(
    n: usize,
    heavies: &[u32],
    pairs: &[(usize, usize)],
    labels: &mut Vec<Option<u32>>,
    depth: usize,
    f: &mut impl FnMut(&LabeledGraph),
) {
    if depth == pairs.len() {
        let edges: Vec<(usize, usize, u32)> = pairs
            .iter()
            .zip(labels.iter())
            .filter_map(|(&(i, j), m)| m.map(|m| (i, j, m)))
            .collect();
        f(&build_graph(n, &edges));
        return;
    }
    let mut options: Vec<Option<u32>> = vec![None, Some(2)];
    options.extend(heavies.iter().map(|&h| Some(h)));
    let (i, j) = pairs[depth];
    let label_of = |labels: &[Option<u32>], x: usize, y: usize| -> Option<u32> {
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        let pos = pairs
            .iter()
            .position(|&p| p == (x, y))
            .expect("pair exists");
        labels[pos]
    };
    for option in options {
        if let Some(m) = option {
            // Completing a triangle with two non-2 labels breaks the FC
            // rule, whatever the current label is.
            let mut ok = true;
            for x in 0..j {
                if x == i {
                    continue;
                }
                let (Some(mx), Some(my)) = (label_of(labels, x, i), label_of(labels, x, j)) else {
                    continue;
                };
                let heavies = u8::from(mx > 2) + u8::from(my > 2) + u8::from(m > 2);
                if heavies >= 2 {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
        }
        labels[depth] = option;
        recurse_even_fc(n, heavies, pairs, labels, depth + 1, f);
    }
    labels[depth] = None;
}

/// SplitMix64: deterministic, platform-independent test RNG.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

/// Named fixture graphs used across the suites.
pub fn chorded_square_graph() -> LabeledGraph {
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

pub fn example_39() -> LabeledGraph {
    LabeledGraph::new(&["u", "v", "w"], &[("u", "v", 3), ("v", "w", 3)]).unwrap()
}

pub fn triangle_235() -> LabeledGraph {
    LabeledGraph::new(
        &["a", "b", "c"],
        &[("a", "b", 2), ("a", "c", 3), ("b", "c", 5)],
    )
    .unwrap()
}

pub fn square_all2() -> LabeledGraph {
    LabeledGraph::new(
        &["a", "b", "c", "d"],
        &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("d", "a", 2)],
    )
    .unwrap()
}

/// Walk a decomposition tree of `root`, asserting the amalgam invariants,
/// the kernel certificate, and the parabolic commutator checks at every
/// split. Returns (amalgams, leaves) seen.
pub fn check_tree(root: &LabeledGraph, tree: &DecompositionTree) -> (u64, u64) {
    match tree {
        DecompositionTree::Leaf { vertices } => {
            let set = root.vertex_set(vertices).expect("leaf names resolve");
            assert!(root.is_clique(&set), "leaf must be complete");
            let heavy = set
                .indices()
                .iter()
                .enumerate()
                .flat_map(|(p, &u)| set.indices()[p + 1..].iter().map(move |&v| (u, v)))
                .filter(|&(u, v)| root.label(u, v).is_some_and(|m| m != 2))
                .count();
            assert!(heavy <= 1, "leaf carries more than one heavy edge");
            (0, 1)
        }
        DecompositionTree::DirectProduct { factors } => {
            // Factors partition their support and commute pairwise.
            let supports: Vec<VertexSet> = factors
                .iter()
                .map(|f| root.vertex_set(&f.support()).unwrap())
                .collect();
            for (p, s1) in supports.iter().enumerate() {
                for s2 in &supports[p + 1..] {
                    assert!(s1.intersection(s2).is_empty(), "factors must be disjoint");
                    for u in s1.iter() {
                        for v in s2.iter() {
                            assert_eq!(root.label(u, v), Some(2), "factors must commute");
                        }
                    }
                }
            }
            let mut totals = (0, 0);
            for f in factors {
                let (a, l) = check_tree(root, f);
                totals.0 += a;
                totals.1 += l;
            }
            totals
        }
        DecompositionTree::Amalgam { left, right, over } => {
            let over_set = root.vertex_set(over).expect("over names resolve");
            assert!(
                root.is_clique(&over_set),
                "amalgamated subgraph must be complete"
            );
            for (p, &u) in over_set.indices().iter().enumerate() {
                for &v in &over_set.indices()[p + 1..] {
                    assert_eq!(
                        root.label(u, v),
                        Some(2),
                        "amalgamated subgraph must be all-2"
                    );
                }
            }
            // Reconstruct the split inside the node's own graph.
            let left_names = left.support();
            let right_names = right.support();
            let support = root
                .vertex_set(&left_names)
                .unwrap()
                .union(&root.vertex_set(&right_names).unwrap());
            let node = root.induced(&support);
            let split = CliqueSplit {
                g1: node.vertex_set(&left_names).unwrap(),
                g2: node.vertex_set(&right_names).unwrap(),
                delta: node.vertex_set(over).unwrap(),
            };
            // Criterion 6: the kernel certificate holds at every split.
            let kernel = decompose::bass_serre_kernel(&node, &split).expect("kernel exists");
            assert!(kernel.is_direct_factor);
            for s in &kernel.s {
                let si = node.index_of(s).unwrap();
                for u in 0..node.vertex_count() {
                    if u != si {
                        assert_eq!(node.label(si, u), Some(2), "kernel certificate failed");
                    }
                }
            }
            // Criterion 9: the commutator restriction test holds on all
            // three pieces.
            for piece in [&split.g1, &split.g2, &split.delta] {
                let check = abelianize::parabolic_commutator_check(&node, piece).unwrap();
                assert!(
                    check.holds,
                    "commutator restriction failed on a split piece"
                );
            }
            let (a1, l1) = check_tree(root, left);
            let (a2, l2) = check_tree(root, right);
            (a1 + a2 + 1, l1 + l2)
        }
        DecompositionTree::Semidirect { .. } => {
            unreachable!("coherent decompositions never emit semidirect nodes")
        }
    }
}
