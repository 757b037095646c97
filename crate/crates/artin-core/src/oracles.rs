//! Independent brute-force and numeric oracles used by tests and as CLI
//! cross-checks. These deliberately share no code with the fast paths they
//! validate.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{ForbiddenSquare, LabeledGraph};
use crate::word::GeneratorWord;

/// Dense integer matrix with exact (128-bit) entries.
///
/// Desk-scale relation matrices only; arithmetic overflow aborts instead of
/// wrapping, so results are never silently wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i128>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::MalformedInput(format!(
                "matrix data length {} does not match {rows}x{cols}",
                data.len()
            )));
        }
        Ok(IntegerMatrix { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        self.data[i * self.cols + j] = v;
    }

    /// One relation row `e_v - e_u = 0` per odd edge of the graph; columns
    /// indexed by vertices. Even edges contribute nothing after abelianizing.
    pub fn abelianized_relations(g: &LabeledGraph) -> Self {
        let odd: Vec<(usize, usize, u32)> = g
            .edges()
            .into_iter()
            .filter(|&(_, _, m)| m % 2 == 1)
            .collect();
        let mut m = IntegerMatrix::zero(odd.len(), g.vertex_count());
        for (row, &(u, v, _)) in odd.iter().enumerate() {
            m.set(row, u, -1);
            m.set(row, v, 1);
        }
        m
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    /// Nonzero elementary divisors, positive, each dividing the next.
    pub divisors: Vec<i128>,
    /// Rank of the free part of the cokernel: `cols - rank`.
    pub free_rank: usize,
}

/// Smith normal form by exact row/column reduction.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithNormalForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut k = 0usize;
    while k < rows && k < cols {
        // Smallest nonzero entry of the trailing submatrix becomes the pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                let v = a.get(i, j);
                if v != 0 && pivot.is_none_or(|(pi, pj)| v.abs() < a.get(pi, pj).abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut a, k, pi);
        swap_cols(&mut a, k, pj);
        loop {
            let mut dirty = false;
            for i in k + 1..rows {
                let q = a.get(i, k).div_euclid(a.get(k, k));
                if q != 0 {
                    add_row(&mut a, i, k, -q);
                }
                if a.get(i, k) != 0 {
                    // Remainder is strictly smaller; make it the pivot.
                    swap_rows(&mut a, k, i);
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                let q = a.get(k, j).div_euclid(a.get(k, k));
                if q != 0 {
                    add_col(&mut a, j, k, -q);
                }
                if a.get(k, j) != 0 {
                    swap_cols(&mut a, k, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let d = a.get(k, k);
            let bad = (k + 1..rows)
                .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| a.get(i, j) % d != 0);
            match bad {
                Some((i, _)) => {
                    add_row(&mut a, k, i, 1);
                }
                None => break,
            }
        }
        k += 1;
    }
    let mut divisors = Vec::new();
    for i in 0..k {
        divisors.push(a.get(i, i).abs());
    }
    debug_assert!(divisors.windows(2).all(|w| w[1] % w[0] == 0));
    SmithNormalForm {
        free_rank: cols - divisors.len(),
        divisors,
    }
}

fn swap_rows(a: &mut IntegerMatrix, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for j in 0..a.cols() {
        let t = a.get(r1, j);
        a.set(r1, j, a.get(r2, j));
        a.set(r2, j, t);
    }
}

fn swap_cols(a: &mut IntegerMatrix, c1: usize, c2: usize) {
    if c1 == c2 {
        return;
    }
    for i in 0..a.rows() {
        let t = a.get(i, c1);
        a.set(i, c1, a.get(i, c2));
        a.set(i, c2, t);
    }
}

/// row[target] += factor * row[source]
fn add_row(a: &mut IntegerMatrix, target: usize, source: usize, factor: i128) {
    for j in 0..a.cols() {
        a.set(target, j, a.get(target, j) + factor * a.get(source, j));
    }
}

fn add_col(a: &mut IntegerMatrix, target: usize, source: usize, factor: i128) {
    for i in 0..a.rows() {
        a.set(i, target, a.get(i, target) + factor * a.get(i, source));
    }
}

/// Labels above this are clamped when building the cosine matrix; the clamp
/// never changes a finiteness verdict and keeps the minors away from the
/// tolerance.
const COSINE_LABEL_CAP: u32 = 1000;

/// Positive-definiteness of the Coxeter cosine matrix: `M_ii = 1`,
/// `M_ij = -cos(pi / m)` for an edge labeled `m`, `M_ij = -1` for a
/// non-adjacent pair. True iff every leading principal minor exceeds `1e-9`.
/// Finiteness of the Coxeter group is equivalent to positive definiteness.
pub fn cosine_matrix_pd(g: &LabeledGraph) -> bool {
    let n = g.vertex_count();
    let mut m = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        m[i][i] = 1.0;
        for j in 0..n {
            if i == j {
                continue;
            }
            m[i][j] = match g.label(i, j) {
                Some(l) => -(std::f64::consts::PI / f64::from(l.min(COSINE_LABEL_CAP))).cos(),
                None => -1.0,
            };
        }
    }
    for k in 1..=n {
        if leading_minor(&m, k) <= 1e-9 {
            return false;
        }
    }
    true
}

/// Determinant of the leading k x k block by Gaussian elimination with
/// partial pivoting.
fn leading_minor(m: &[Vec<f64>], k: usize) -> f64 {
    let mut a: Vec<Vec<f64>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
    let mut det = 1.0f64;
    for col in 0..k {
        let pivot = (col..k)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for i in col + 1..k {
            let f = a[i][col] / a[col][col];
            for j in col..k {
                a[i][j] -= f * a[col][j];
            }
        }
    }
    det
}

/// Exhaustive chordality check: true iff no vertex subset induces a cycle of
/// length >= 4. Exponential; `max_vertices` is enforced.
pub fn brute_chordal(g: &LabeledGraph, max_vertices: usize) -> Result<bool> {
    let n = g.vertex_count();
    if n > max_vertices {
        return Err(Error::TooLarge {
            size: n,
            max: max_vertices,
        });
    }
    for mask in 0u32..(1 << n) {
        if (mask.count_ones() as usize) < 4 {
            continue;
        }
        if induces_cycle(g, mask) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn induces_cycle(g: &LabeledGraph, mask: u32) -> bool {
    let verts: Vec<usize> = (0..g.vertex_count())
        .filter(|&i| mask & (1 << i) != 0)
        .collect();
    // Every vertex has exactly two neighbors inside, and the subset is
    // connected: that is precisely an induced (chordless) cycle.
    for &v in &verts {
        let deg = verts
            .iter()
            .filter(|&&u| u != v && g.adjacent(u, v))
            .count();
        if deg != 2 {
            return false;
        }
    }
    let mut seen = vec![verts[0]];
    let mut stack = vec![verts[0]];
    while let Some(u) = stack.pop() {
        for &w in &verts {
            if !seen.contains(&w) && g.adjacent(u, w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == verts.len()
}

/// Exhaustive forbidden-pattern search over all 4-subsets, straight from the
/// definition. Exponential; `max_vertices` is enforced.
pub fn brute_pattern(g: &LabeledGraph, max_vertices: usize) -> Result<Vec<ForbiddenSquare>> {
    let n = g.vertex_count();
    if n > max_vertices {
        return Err(Error::TooLarge {
            size: n,
            max: max_vertices,
        });
    }
    let mut found: Vec<(usize, usize, usize, usize)> = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            for r in q + 1..n {
                for s in r + 1..n {
                    let quad = [p, q, r, s];
                    // Exactly one non-adjacent pair, which is {a, b}; the
                    // complementary pair is {v, w}.
                    let mut missing = Vec::new();
                    for x in 0..4 {
                        for y in x + 1..4 {
                            if !g.adjacent(quad[x], quad[y]) {
                                missing.push((x, y));
                            }
                        }
                    }
                    if missing.len() != 1 {
                        continue;
                    }
                    let (ax, bx) = missing[0];
                    let (a, b) = (quad[ax], quad[bx]);
                    let vw: Vec<usize> =
                        quad.iter().copied().filter(|&x| x != a && x != b).collect();
                    let (v, w) = (vw[0], vw[1]);
                    if g.label(v, w).unwrap_or(0) <= 2 {
                        continue;
                    }
                    if [(a, v), (a, w), (b, v), (b, w)]
                        .iter()
                        .all(|&(x, y)| g.label(x, y) == Some(2))
                    {
                        found.push((a, b, v, w));
                    }
                }
            }
        }
    }
    found.sort_unstable();
    Ok(found
        .into_iter()
        .map(|(a, b, v, w)| ForbiddenSquare {
            a: g.name(a).to_owned(),
            b: g.name(b).to_owned(),
            v: g.name(v).to_owned(),
            w: g.name(w).to_owned(),
        })
        .collect())
}

/// Outcome of the bounded word-problem search. The search never claims
/// inequality: `Unknown` only means the identity was not certified within
/// the budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteOutcome {
    Equal,
    Unknown { budget_exceeded: bool },
}

impl RewriteOutcome {
    pub fn is_equal(&self) -> bool {
        matches!(self, RewriteOutcome::Equal)
    }
}

/// Bounded breadth-first search for `w1 = w2` in the dihedral Artin group on
/// two generators with even label `2k`: free reduction plus the relation
/// `(xy)^k = (yx)^k` (and its inverse form) applied at any position.
/// `Equal` if `w1 * w2^-1` reaches the empty word within `max_states`
/// explored states.
pub fn bounded_rewrite_equal(
    label: u32,
    w1: &GeneratorWord,
    w2: &GeneratorWord,
    max_states: usize,
) -> Result<RewriteOutcome> {
    if label < 2 || !label.is_multiple_of(2) {
        return Err(Error::MalformedInput(format!(
            "dihedral relation needs an even label >= 2, got {label}"
        )));
    }
    let k = (label / 2) as usize;
    let mut names = w1.support();
    for n in w2.support() {
        if !names.contains(&n) {
            names.push(n);
        }
    }
    names.sort();
    if names.len() > 2 {
        return Err(Error::MalformedInput(format!(
            "words must involve at most two generators, got {}",
            names.len()
        )));
    }
    // Letters encoded as 0 = x, 1 = x^-1, 2 = y, 3 = y^-1.
    let encode = |word: &GeneratorWord| -> Vec<u8> {
        let mut out = Vec::new();
        for (name, exp) in word.letters() {
            let base = if Some(name) == names.first() {
                0u8
            } else {
                2u8
            };
            let letter = if *exp > 0 { base } else { base + 1 };
            for _ in 0..exp.unsigned_abs() {
                out.push(letter);
            }
        }
        out
    };
    let start = free_reduce(
        encode(w1)
            .into_iter()
            .chain(encode(&w2.inverse()))
            .collect(),
    );
    if start.is_empty() {
        return Ok(RewriteOutcome::Equal);
    }

    // The four oriented relator patterns, each of length 2k.
    let pattern = |first: u8, second: u8| -> Vec<u8> {
        (0..k).flat_map(|_| [first, second]).collect::<Vec<u8>>()
    };
    let rules: Vec<(Vec<u8>, Vec<u8>)> = vec![
        (pattern(0, 2), pattern(2, 0)),
        (pattern(2, 0), pattern(0, 2)),
        (pattern(1, 3), pattern(3, 1)),
        (pattern(3, 1), pattern(1, 3)),
    ];

    let mut visited: HashSet<Vec<u8>> = HashSet::new();
    let mut queue: VecDeque<Vec<u8>> = VecDeque::new();
    visited.insert(start.clone());
    queue.push_back(start);
    let mut explored = 0usize;
    while let Some(word) = queue.pop_front() {
        explored += 1;
        if explored > max_states {
            return Ok(RewriteOutcome::Unknown {
                budget_exceeded: true,
            });
        }
        let len = word.len();
        let plen = 2 * k;
        if len >= plen {
            for i in 0..=len - plen {
                for (from, to) in &rules {
                    if &word[i..i + plen] == from.as_slice() {
                        let mut next: Vec<u8> = Vec::with_capacity(len);
                        next.extend_from_slice(&word[..i]);
                        next.extend_from_slice(to);
                        next.extend_from_slice(&word[i + plen..]);
                        let next = free_reduce(next);
                        if next.is_empty() {
                            return Ok(RewriteOutcome::Equal);
                        }
                        if visited.insert(next.clone()) {
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
    }
    Ok(RewriteOutcome::Unknown {
        budget_exceeded: false,
    })
}

fn free_reduce(word: Vec<u8>) -> Vec<u8> {
    let mut stack: Vec<u8> = Vec::with_capacity(word.len());
    for letter in word {
        match stack.last() {
            Some(&top) if top ^ 1 == letter => {
                stack.pop();
            }
            _ => stack.push(letter),
        }
    }
    stack
}
