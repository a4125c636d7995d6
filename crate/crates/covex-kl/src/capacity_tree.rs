//! Profiles, capacities, αβ-words, linked-pair trees and their labellings.
//!
//! An [`ABMatrix`] `(a_1 … a_d ; b_0 … b_{d−1})` is drawn as a lattice path
//! starting at the origin that rises `b_0` steps, falls `a_1` steps, rises
//! `b_1` steps, and so on, and finally keeps rising.  The same matrix read as
//! a word uses `β` for a rising and `α` for a falling step.
//!
//! The capacity of a pair (𝔥, 𝔎) is read off at the valleys of the 𝔥-path
//! (the points after each α-run): `c_i` is half the height of the 𝔥-path
//! above the 𝔎-path there.
//!
//! The letters of the word are linked like brackets, α opening and β closing.
//! α's left over are linked to each other from left to right (αα-pairs) and a
//! last odd α stays single (a terminal α, whose span runs to the end of the
//! word).  Each linked pair becomes an edge of a rooted tree; an edge is a
//! child of the innermost pair whose span contains it.  Edges from αα-pairs
//! and terminal α's are marked with a plus sign.
//!
//! A labelling gives every edge a nonnegative integer not exceeding the
//! capacity of the valley its α belongs to, such that labels never decrease
//! from an edge to its children.  For types B, C and D two parity rules
//! apply: plus-marked edges carry even labels, and an edge that lies entirely
//! before the terminal α and whose label does not exceed the terminal edge's
//! label must carry an even label.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::pipeline::{Case, PipelineError};
use crate::polyq::QPoly;
use crate::triples::{ABMatrix, Triple};
use crate::weyl::{LieType, WeylElement};

/// The capacity vector `(c_1, …, c_d)`; `c_0 = 0` is implicit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Capacity {
    pub c: Vec<u64>,
}

impl Capacity {
    pub fn new(c: Vec<u64>) -> Self {
        Capacity { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }
}

/// The lattice path of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    /// Points `(x, y)` with consecutive points differing by `(1, ±1)`.
    pub points: Vec<(i64, i64)>,
    /// Indices into `points` of the valley after each α-run.
    pub valleys: Vec<usize>,
}

/// The path of `m` followed by `tail` rising steps.
pub fn profile(m: &ABMatrix, tail: usize) -> Profile {
    let mut points = vec![(0, 0)];
    let mut valleys = Vec::with_capacity(m.d());
    let (mut x, mut y) = (0i64, 0i64);
    let mut step = |dy: i64, points: &mut Vec<(i64, i64)>| {
        x += 1;
        y += dy;
        points.push((x, y));
    };
    for i in 0..m.d() {
        for _ in 0..m.b[i] {
            step(1, &mut points);
        }
        for _ in 0..m.a[i] {
            step(-1, &mut points);
        }
        valleys.push(points.len() - 1);
    }
    for _ in 0..tail {
        step(1, &mut points);
    }
    Profile { points, valleys }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CapacityError {
    #[error("odd vertical gap {gap} at valley {index} of the 𝔥-profile")]
    OddGap { index: usize, gap: i64 },
    #[error("the 𝔎-profile lies above the 𝔥-profile at valley {index} (gap {gap})")]
    NegativeGap { index: usize, gap: i64 },
    #[error("word of length {len} exceeds the allowed length {total}")]
    TooLong { len: usize, total: usize },
    #[error("matrix is malformed: {0}")]
    BadMatrix(String),
    #[error("type A words never produce plus-marked edges, found one in {0}")]
    PlusInTypeA(String),
}

/// The capacity of (𝔥, 𝔎): half the height of the 𝔥-path above the
/// 𝔎-path at each valley of the 𝔥-path, both paths starting at the origin.
pub fn capacity(h: &ABMatrix, k: &ABMatrix) -> Result<Capacity, CapacityError> {
    h.check().map_err(|e| CapacityError::BadMatrix(e.to_string()))?;
    k.check().map_err(|e| CapacityError::BadMatrix(e.to_string()))?;
    let hp = profile(h, 0);
    let width = h.width().max(0) as usize;
    let kp = profile(k, width);
    let mut c = Vec::with_capacity(h.d());
    for (i, &v) in hp.valleys.iter().enumerate() {
        let (x, yh) = hp.points[v];
        let yk = kp.points[x as usize].1;
        let gap = yh - yk;
        if gap < 0 {
            return Err(CapacityError::NegativeGap { index: i + 1, gap });
        }
        if gap % 2 != 0 {
            return Err(CapacityError::OddGap { index: i + 1, gap });
        }
        c.push((gap / 2) as u64);
    }
    Ok(Capacity { c })
}

/// A letter of an αβ-word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    Alpha,
    Beta,
}

/// How an α is linked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// α linked to a later β.
    AlphaBeta,
    /// α linked to a later α.
    AlphaAlpha,
    /// α left single.
    Terminal,
}

/// A linked pair: the opening α and its partner (none for a terminal α).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pair {
    pub open: usize,
    pub close: Option<usize>,
    pub kind: PairKind,
    /// Index (0-based) of the α-run containing the opening α.
    pub run: usize,
}

impl Pair {
    /// Last position covered by the pair (the end of the word for a terminal α).
    pub fn end(&self, word_len: usize) -> usize {
        self.close.unwrap_or(word_len)
    }
}

/// The αβ-word of a matrix with its linked pairs (ordered by opening α).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABWord {
    pub letters: Vec<Letter>,
    pub pairs: Vec<Pair>,
}

impl ABWord {
    /// The word in bracket notation, e.g. `βββ(αβ)(α(αβ)β)`, with αα-pairs
    /// as `(α…α)` and a terminal α as `(α)`.
    pub fn bracketed(&self) -> String {
        let mut opens = vec![0usize; self.letters.len() + 1];
        let mut closes = vec![0usize; self.letters.len() + 1];
        let mut single = vec![false; self.letters.len()];
        for p in &self.pairs {
            match p.close {
                Some(c) => {
                    opens[p.open] += 1;
                    closes[c] += 1;
                }
                None => single[p.open] = true,
            }
        }
        let mut s = String::new();
        for (i, l) in self.letters.iter().enumerate() {
            s.push_str(&"(".repeat(opens[i]));
            let ch = match l {
                Letter::Alpha => "α",
                Letter::Beta => "β",
            };
            if single[i] {
                let _ = write!(s, "({ch})");
            } else {
                s.push_str(ch);
            }
            s.push_str(&")".repeat(closes[i]));
        }
        s
    }
}

/// The word `β^{b_0} α^{a_1} β^{b_1} ⋯ α^{a_d}`, padded with β's to length
/// `total` when given, with its linked pairs.  Without `total` the word is
/// followed by as many β's as needed to close every α (the infinite rising
/// tail used in type A).
pub fn ab_word(h: &ABMatrix, total: Option<usize>) -> Result<ABWord, CapacityError> {
    h.check().map_err(|e| CapacityError::BadMatrix(e.to_string()))?;
    let mut letters = Vec::new();
    let mut run_of = Vec::new();
    for i in 0..h.d() {
        for _ in 0..h.b[i] {
            letters.push(Letter::Beta);
            run_of.push(usize::MAX);
        }
        for _ in 0..h.a[i] {
            letters.push(Letter::Alpha);
            run_of.push(i);
        }
    }
    let pad = match total {
        Some(total) => {
            if letters.len() > total {
                return Err(CapacityError::TooLong { len: letters.len(), total });
            }
            total - letters.len()
        }
        None => h.a.iter().sum::<i64>() as usize,
    };
    letters.extend(std::iter::repeat_n(Letter::Beta, pad));

    let mut pairs = Vec::new();
    let mut stack = Vec::new();
    for (i, l) in letters.iter().enumerate() {
        match l {
            Letter::Alpha => stack.push(i),
            Letter::Beta => {
                if let Some(o) = stack.pop() {
                    pairs.push(Pair { open: o, close: Some(i), kind: PairKind::AlphaBeta, run: run_of[o] });
                }
            }
        }
    }
    for chunk in stack.chunks(2) {
        match *chunk {
            [o, c] => pairs.push(Pair { open: o, close: Some(c), kind: PairKind::AlphaAlpha, run: run_of[o] }),
            [o] => pairs.push(Pair { open: o, close: None, kind: PairKind::Terminal, run: run_of[o] }),
            _ => unreachable!(),
        }
    }
    pairs.sort_by_key(|p| p.open);
    Ok(ABWord { letters, pairs })
}

/// An edge of a linked-pair tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub pair: Pair,
    pub plus: bool,
    pub capacity_bound: u64,
    /// Parent edge (index into the edge list), `None` when attached to the root.
    pub parent: Option<usize>,
}

/// A rooted tree whose edges are the linked pairs of a word, listed in
/// pre-order (by opening α).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelTree {
    pub word_len: usize,
    pub edges: Vec<Edge>,
}

impl LabelTree {
    /// Children of an edge (`None` for the root), in order.
    pub fn children(&self, parent: Option<usize>) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].parent == parent).collect()
    }

    /// DOT rendering: one node per edge end, the root is node 0, nodes are
    /// numbered in pre-order; plus-marked edges are bold.  With labels, each
    /// edge is annotated `label=<n>`.
    pub fn to_dot(&self, labels: Option<&[u64]>) -> String {
        let mut s = String::from("graph tree {\n  node [shape=point];\n  n0;\n");
        for (i, e) in self.edges.iter().enumerate() {
            let parent = e.parent.map_or(0, |p| p + 1);
            let mut attrs = Vec::new();
            match labels {
                Some(l) => attrs.push(format!("label={}", l[i])),
                None => attrs.push(format!("label=\"≤{}\"", e.capacity_bound)),
            }
            if e.plus {
                attrs.push("style=bold".to_string());
            }
            let _ = writeln!(s, "  n{};", i + 1);
            let _ = writeln!(s, "  n{parent} -- n{} [{}];", i + 1, attrs.join(", "));
        }
        s.push_str("}\n");
        s
    }
}

/// The tree of a paired word, with each edge bounded by the capacity of the
/// valley its opening α belongs to.
pub fn build_tree(word: &ABWord, c: &Capacity) -> Result<LabelTree, CapacityError> {
    let len = word.letters.len();
    let mut edges: Vec<Edge> = Vec::with_capacity(word.pairs.len());
    for (i, p) in word.pairs.iter().enumerate() {
        let parent = (0..i).rev().find(|&j| {
            let q = &word.pairs[j];
            q.open < p.open && p.end(len) <= q.end(len)
        });
        let capacity_bound =
            *c.c.get(p.run).ok_or_else(|| CapacityError::BadMatrix(format!("no capacity for α-run {}", p.run + 1)))?;
        edges.push(Edge { pair: *p, plus: p.kind != PairKind::AlphaBeta, capacity_bound, parent });
    }
    Ok(LabelTree { word_len: len, edges })
}

/// A full labelling and its weight (the sum of the labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labelling {
    pub labels: Vec<u64>,
    pub weight: u64,
}

/// Depth-first stream of the admissible labellings of a tree.
///
/// Edges are labelled in pre-order; each edge's candidates start at its
/// parent's label, step by two on plus-marked edges (types B/C/D), and stop
/// at the capacity bound.  The terminal edge comes after every edge lying
/// before it in pre-order, so the second parity rule is enforced when the
/// terminal edge is labelled: its label must stay strictly below every odd
/// label of an edge ending before the terminal α.
pub struct Labellings<'a> {
    tree: &'a LabelTree,
    parity: bool,
    labels: Vec<u64>,
    started: bool,
    done: bool,
}

/// Stream of admissible labellings; parity rules apply unless `lie_type` is A.
pub fn enumerate_labellings(tree: &LabelTree, lie_type: LieType) -> Labellings<'_> {
    Labellings { tree, parity: lie_type != LieType::A, labels: vec![0; tree.edges.len()], started: false, done: false }
}

impl Labellings<'_> {
    /// Smallest admissible label for edge `i` that is at least `from`.
    fn candidate(&self, i: usize, from: u64) -> Option<u64> {
        let e = &self.tree.edges[i];
        let lower = e.parent.map_or(0, |p| self.labels[p]);
        let mut l = from.max(lower);
        if self.parity && e.plus && l % 2 == 1 {
            l += 1;
        }
        if l > e.capacity_bound {
            return None;
        }
        if self.parity && e.pair.kind == PairKind::Terminal {
            // Every earlier edge ending before the terminal α with an odd
            // label must have that label strictly above the terminal label.
            let open = e.pair.open;
            let cap = (0..i)
                .filter(|&j| {
                    let f = &self.tree.edges[j];
                    f.pair.end(self.tree.word_len) < open && self.labels[j] % 2 == 1
                })
                .map(|j| self.labels[j])
                .min();
            if let Some(cap) = cap {
                if l >= cap {
                    return None;
                }
            }
        }
        Some(l)
    }

    /// Fills positions from `i` on; `fresh` means position `i` takes its
    /// first candidate, otherwise its next one.
    fn advance(&mut self, mut i: isize, mut fresh: bool) -> bool {
        let m = self.labels.len() as isize;
        let step = |tree: &LabelTree, parity: bool, i: usize| if parity && tree.edges[i].plus { 2 } else { 1 };
        loop {
            if i < 0 {
                return false;
            }
            if i == m {
                return true;
            }
            let iu = i as usize;
            let from = if fresh { 0 } else { self.labels[iu] + step(self.tree, self.parity, iu) };
            match self.candidate(iu, from) {
                Some(l) => {
                    self.labels[iu] = l;
                    i += 1;
                    fresh = true;
                }
                None => {
                    i -= 1;
                    fresh = false;
                }
            }
        }
    }
}

impl Iterator for Labellings<'_> {
    type Item = Labelling;

    fn next(&mut self) -> Option<Labelling> {
        if self.done {
            return None;
        }
        let ok = if self.started {
            self.advance(self.labels.len() as isize - 1, false)
        } else {
            self.started = true;
            self.advance(0, true)
        };
        if !ok {
            self.done = true;
            return None;
        }
        Some(Labelling { labels: self.labels.clone(), weight: self.labels.iter().sum() })
    }
}

/// `Σ q^{weight}` over the admissible labellings of a tree.
pub fn tree_polynomial(tree: &LabelTree, lie_type: LieType) -> QPoly {
    let mut counts: BTreeMap<u64, i64> = BTreeMap::new();
    for l in enumerate_labellings(tree, lie_type) {
        *counts.entry(l.weight).or_default() += 1;
    }
    counts.into_iter().fold(QPoly::zero(), |acc, (w, c)| &acc + &QPoly::monomial(c, w as usize))
}

/// `P_{w∘v, w∘w}(q)` with `w = w(τ)`, as the weighted count of labelled trees.
pub fn kl_via_trees(t: &Triple, v: &WeylElement) -> Result<QPoly, PipelineError> {
    Case::new(t, v)?.by_trees()
}
