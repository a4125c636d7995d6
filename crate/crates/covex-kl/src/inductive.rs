//! The column-merging recursion for `P_{𝔥,c}(q)`.
//!
//! With sentinels `a_0 = b_d = ∞`, let `i` be the smallest index with
//! `b_i ≤ a_i` and `a_{i+1} ≤ b_{i+1}`.  Merging fuses `a_i, a_{i+1}` into
//! `a_i + a_{i+1}` and `b_i, b_{i+1}` into `b_i + b_{i+1}` (at the boundary
//! the entry paired with a sentinel is dropped), and
//!
//! ```text
//! P_{𝔥,c} = Σ_{t=0}^{min(c_i, c_{i+1})} q^{(c_i−t)(c_{i+1}−t)}
//!           [a_{i+1} − c_i + c_{i+1} ; c_{i+1} − t] [b_i + c_i − c_{i+1} ; c_i − t]
//!           P_{𝔥₁, c(t)}
//! ```
//!
//! with `c = (c_0 = 0, c_1, …, c_d)` and `c(t)` obtained by replacing
//! `c_i, c_{i+1}` by `t`.  The empty matrix gives `1`.

use std::collections::HashMap;

use thiserror::Error;

use crate::capacity_tree::Capacity;
use crate::polyq::{q_binomial, QPoly};
use crate::triples::ABMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InductiveError {
    #[error("capacity has {got} entries but the matrix has {d} columns")]
    LengthMismatch { d: usize, got: usize },
    #[error("malformed matrix: {0}")]
    BadMatrix(String),
    #[error("no merge site in {0}")]
    NoMergeSite(String),
}

/// The column index at which the next merge happens.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MergeSite {
    pub i: usize,
}

/// Smallest `i` in `0..d` with `b_i ≤ a_i` and `a_{i+1} ≤ b_{i+1}` under
/// `a_0 = b_d = ∞`.
pub fn find_merge_site(h: &ABMatrix) -> Result<MergeSite, InductiveError> {
    let d = h.d();
    let a = |i: usize| if i == 0 { i64::MAX } else { h.a[i - 1] };
    let b = |i: usize| if i == d { i64::MAX } else { h.b[i] };
    (0..d)
        .find(|&i| b(i) <= a(i) && a(i + 1) <= b(i + 1))
        .map(|i| MergeSite { i })
        .ok_or_else(|| InductiveError::NoMergeSite(h.to_string()))
}

/// Fuses columns at a merge site.
pub fn merge(h: &ABMatrix, site: MergeSite) -> ABMatrix {
    let (a, b) = merge_raw(&h.a, &h.b, site.i);
    ABMatrix { a, b }
}

fn merge_raw(a: &[i64], b: &[i64], i: usize) -> (Vec<i64>, Vec<i64>) {
    let d = a.len();
    let mut na = Vec::with_capacity(d.saturating_sub(1));
    let mut nb = Vec::with_capacity(d.saturating_sub(1));
    if i == 0 {
        na.extend_from_slice(&a[1..]);
    } else {
        na.extend_from_slice(&a[..i - 1]);
        na.push(a[i - 1] + a[i]);
        na.extend_from_slice(&a[i + 1..]);
    }
    nb.extend_from_slice(&b[..i]);
    if i + 1 < d {
        nb.push(b[i] + b[i + 1]);
        nb.extend_from_slice(&b[i + 2..]);
    }
    (na, nb)
}

type Key = (Vec<i64>, Vec<i64>, Vec<u64>);

/// `P_{𝔥,c}(q)` by the merging recursion.  `c` lists `c_1, …, c_d`.
pub fn kl_via_inductive(h: &ABMatrix, c: &Capacity) -> Result<QPoly, InductiveError> {
    h.check().map_err(|e| InductiveError::BadMatrix(e.to_string()))?;
    if c.c.len() != h.d() {
        return Err(InductiveError::LengthMismatch { d: h.d(), got: c.c.len() });
    }
    let mut full = Vec::with_capacity(h.d() + 1);
    full.push(0);
    full.extend_from_slice(&c.c);
    let mut memo = HashMap::new();
    recurse(&h.a, &h.b, &full, &mut memo)
}

fn recurse(a: &[i64], b: &[i64], c: &[u64], memo: &mut HashMap<Key, QPoly>) -> Result<QPoly, InductiveError> {
    let d = a.len();
    if d == 0 {
        return Ok(QPoly::one());
    }
    let key = (a.to_vec(), b.to_vec(), c.to_vec());
    if let Some(p) = memo.get(&key) {
        return Ok(p.clone());
    }
    let i = find_merge_site(&ABMatrix { a: a.to_vec(), b: b.to_vec() })?.i;
    let (na, nb) = merge_raw(a, b, i);
    let (ci, cj) = (c[i] as i64, c[i + 1] as i64);
    let mut total = QPoly::zero();
    for t in 0..=ci.min(cj) {
        let coefficient = &q_binomial(a[i] - ci + cj, cj - t) * &q_binomial(b[i] + ci - cj, ci - t);
        if coefficient.is_zero() {
            continue;
        }
        let mut nc = Vec::with_capacity(c.len() - 1);
        nc.extend_from_slice(&c[..i]);
        nc.push(t as u64);
        nc.extend_from_slice(&c[i + 2..]);
        let rest = recurse(&na, &nb, &nc, memo)?;
        total += &(&coefficient * &rest).shift(((ci - t) * (cj - t)) as usize);
    }
    memo.insert(key, total.clone());
    Ok(total)
}
