//! The end-to-end computation for one pair `(τ, v)`.
//!
//! [`Case::new`] runs every construction step once — `w(τ)`, the weak triple,
//! 𝔥, 𝔎 and the capacity — and keeps the intermediates; the three methods
//! then read from it.

use thiserror::Error;

use crate::capacity_tree::{self, ab_word, build_tree, capacity, ABWord, Capacity, CapacityError, LabelTree};
use crate::inductive::{kl_via_inductive, InductiveError};
use crate::oracle::{KlTable, OracleError};
use crate::polyq::QPoly;
use crate::triples::{
    h_matrix, k_matrix, side_conditions, vexillary_from_triple, w0_times, weak_triple_from_pair, ABMatrix, MatrixData,
    Triple, TripleError, Violation, WeakTriple,
};
use crate::weyl::{LieType, WeylElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error(transparent)]
    Triple(#[from] TripleError),
    #[error(transparent)]
    Capacity(#[from] CapacityError),
    #[error(transparent)]
    Inductive(#[from] InductiveError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// All intermediates for one `(τ, v)`.
#[derive(Clone, Debug)]
pub struct Case {
    pub triple: Triple,
    pub v: WeylElement,
    /// `w(τ)`.
    pub w: WeylElement,
    pub weak: WeakTriple,
    pub h: MatrixData,
    pub k: MatrixData,
    pub capacity: Capacity,
    /// Failed side conditions of 𝔥(τ) (types B/C/D); empty when they hold.
    pub side_violations: Vec<Violation>,
}

impl Case {
    pub fn new(triple: &Triple, v: &WeylElement) -> Result<Self, PipelineError> {
        let w = vexillary_from_triple(triple)?;
        let weak = weak_triple_from_pair(triple, v)?;
        let h = h_matrix(triple)?;
        let k = k_matrix(triple, &weak)?;
        let capacity = capacity(&h.matrix, &k.matrix)?;
        let side_violations = side_conditions(triple)?;
        Ok(Case { triple: triple.clone(), v: v.clone(), w, weak, h, k, capacity, side_violations })
    }

    pub fn lie_type(&self) -> LieType {
        self.triple.lie_type
    }

    /// Whether 𝔥(τ) meets the side conditions under which the merging
    /// recursion is valid (always true in type A).
    pub fn side_conditions_hold(&self) -> bool {
        self.side_violations.is_empty()
    }

    /// The matrix and capacity the tree is built from.
    ///
    /// For type D with an odd last capacity the column
    /// `(a_{s+1}, b_s) = (1, 2n − Σa − Σb)` is appended and the word may then
    /// reach length `2n + 1`.  The appended α only matters as the closing
    /// letter of an αα pair, whose bound comes from the opening run; left
    /// unpaired it must carry the label 0, so its run gets capacity 0.
    pub fn tree_input(&self) -> (ABMatrix, Capacity, Option<usize>) {
        let n = self.triple.n;
        let mut m = self.h.matrix.clone();
        let mut c = self.capacity.clone();
        match self.lie_type() {
            LieType::A => (m, c, None),
            LieType::D if c.c.last().is_some_and(|&x| x % 2 == 1) => {
                let b_s = 2 * n as i64 - m.width();
                m.a.push(1);
                m.b.push(b_s);
                c.c.push(0);
                (m, c, Some(2 * n + 1))
            }
            _ => (m, c, Some(2 * n)),
        }
    }

    pub fn word(&self) -> Result<ABWord, PipelineError> {
        let (m, _, total) = self.tree_input();
        Ok(ab_word(&m, total)?)
    }

    pub fn tree(&self) -> Result<LabelTree, PipelineError> {
        let (m, c, total) = self.tree_input();
        let word = ab_word(&m, total)?;
        let tree = build_tree(&word, &c)?;
        if self.lie_type() == LieType::A && tree.edges.iter().any(|e| e.plus) {
            return Err(CapacityError::PlusInTypeA(word.bracketed()).into());
        }
        Ok(tree)
    }

    /// `P_{w∘v, w∘w}` by counting labelled trees.
    pub fn by_trees(&self) -> Result<QPoly, PipelineError> {
        Ok(capacity_tree::tree_polynomial(&self.tree()?, self.lie_type()))
    }

    /// `P_{w∘v, w∘w}` by the merging recursion on (𝔥, c).
    pub fn by_inductive(&self) -> Result<QPoly, PipelineError> {
        Ok(kl_via_inductive(&self.h.matrix, &self.capacity)?)
    }

    /// The pair `(w∘v, w∘w)` of group elements whose polynomial is computed.
    pub fn oracle_pair(&self) -> (WeylElement, WeylElement) {
        let gt = oracle_type(self.lie_type());
        let x = w0_times(&self.v).with_type(gt).expect("same window rules");
        let y = w0_times(&self.w).with_type(gt).expect("same window rules");
        (x, y)
    }

    /// `P_{w∘v, w∘w}` from a Kazhdan–Lusztig table of the right group.
    pub fn by_oracle(&self, table: &mut KlTable) -> Result<QPoly, PipelineError> {
        let (x, y) = self.oracle_pair();
        Ok(table.p(&x, &y)?)
    }

    /// Degree bound `(ℓ(w∘w) − ℓ(w∘v) − 1) / 2` for `v ≠ w(τ)`; `None` when
    /// `v = w(τ)`.
    pub fn degree_bound(&self) -> Option<usize> {
        let (x, y) = self.oracle_pair();
        let lx = x.length().expect("group element");
        let ly = y.length().expect("group element");
        (lx < ly).then(|| (ly - lx - 1) / 2)
    }
}

/// Types B and C share their group; Kazhdan–Lusztig tables are built for C.
pub fn oracle_type(t: LieType) -> LieType {
    if t == LieType::B {
        LieType::C
    } else {
        t
    }
}
