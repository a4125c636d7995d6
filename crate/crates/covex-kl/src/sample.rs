//! Generators of inputs: every valid triple of a small rank, the elements
//! above `w(τ)`, and seeded random `(τ, v)` pairs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::triples::{
    position_bounds, side_conditions, side_leq, validate_triple, vexillary_from_triple, w0_times, Triple,
};
use crate::weyl::{all_elements, right_reflections, LieType, WeylElement};

fn strictly_increasing(len: usize, lo: i64, hi: i64, out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    let start = cur.last().map_or(lo, |&x| x + 1);
    for x in start..=hi {
        cur.push(x);
        strictly_increasing(len, lo, hi, out, cur);
        cur.pop();
    }
}

fn weakly_increasing(len: usize, lo: i64, hi: i64, out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    let start = cur.last().copied().unwrap_or(lo);
    for x in start..=hi {
        cur.push(x);
        weakly_increasing(len, lo, hi, out, cur);
        cur.pop();
    }
}

/// Every triple of the given type and rank accepted by [`validate_triple`].
///
/// Since `k_s` counts positions of a window, `k_s ≤ n` bounds the search.
pub fn all_triples(t: LieType, n: usize) -> Vec<Triple> {
    let (plo, qlo, hi) = position_bounds(t, n);
    let mut out = Vec::new();
    for s in 1..=n {
        let mut ks = Vec::new();
        strictly_increasing(s, 1, n as i64, &mut ks, &mut Vec::new());
        let mut ps = Vec::new();
        weakly_increasing(s, plo, hi, &mut ps, &mut Vec::new());
        let mut qs = Vec::new();
        weakly_increasing(s, qlo, hi, &mut qs, &mut Vec::new());
        for k in &ks {
            for p in &ps {
                for q in &qs {
                    let tr = Triple::new(t, n, k.clone(), p.clone(), q.clone());
                    if validate_triple(&tr).is_ok() {
                        out.push(tr);
                    }
                }
            }
        }
    }
    out
}

/// The windows on which `w(τ)` and `v` live: the whole group, except for
/// type D of odd rank where it is the coset with an odd number of negative
/// entries.
pub fn side_elements(t: LieType, n: usize) -> Vec<WeylElement> {
    if t == LieType::D && n % 2 == 1 {
        all_elements(LieType::B, n)
            .into_iter()
            .filter(|w| w.negatives() % 2 == 1)
            .map(|w| w.with_type(LieType::D).expect("same window rules"))
            .collect()
    } else {
        all_elements(t, n)
    }
}

/// All `v` with `w ≼ v`.
pub fn elements_above(w: &WeylElement) -> Vec<WeylElement> {
    side_elements(w.lie_type(), w.n()).into_iter().filter(|v| side_leq(w, v)).collect()
}

/// A random valid triple, optionally also meeting the side conditions.
/// Gives up (returning `None`) after `attempts` rejected draws.
pub fn random_triple<R: Rng + ?Sized>(
    t: LieType,
    n: usize,
    require_side_conditions: bool,
    attempts: usize,
    rng: &mut R,
) -> Option<Triple> {
    let (plo, qlo, hi) = position_bounds(t, n);
    for _ in 0..attempts {
        let s = rng.gen_range(1..=n.min(4));
        let mut pool: Vec<i64> = (1..=n as i64).collect();
        pool.shuffle(rng);
        let mut k: Vec<i64> = pool[..s].to_vec();
        k.sort_unstable();
        let mut p: Vec<i64> = (0..s).map(|_| rng.gen_range(plo..=hi)).collect();
        let mut q: Vec<i64> = (0..s).map(|_| rng.gen_range(qlo..=hi)).collect();
        p.sort_unstable();
        q.sort_unstable();
        let tr = Triple::new(t, n, k, p, q);
        if validate_triple(&tr).is_err() {
            continue;
        }
        if require_side_conditions && !side_conditions(&tr).map(|v| v.is_empty()).unwrap_or(false) {
            continue;
        }
        return Some(tr);
    }
    None
}

/// A random `v ≽ w`: a walk of uniformly random length down Bruhat covers
/// from `w∘w` (each step a reflection lowering the length by one), mapped
/// back by `w∘`.
pub fn random_above<R: Rng + ?Sized>(w: &WeylElement, rng: &mut R) -> WeylElement {
    let mut x = w0_times(w);
    let total = x.length().expect("w∘w is a group element");
    let steps = rng.gen_range(0..=total);
    for _ in 0..steps {
        let lx = x.length().expect("group element");
        let lower: Vec<WeylElement> =
            right_reflections(&x).into_iter().filter(|y| y.length().expect("group element") + 1 == lx).collect();
        match lower.choose(rng) {
            Some(y) => x = y.clone(),
            None => break,
        }
    }
    w0_times(&x)
}

/// A random valid `(τ, v)` pair with `v ≽ w(τ)`.
pub fn random_case<R: Rng + ?Sized>(
    t: LieType,
    n: usize,
    require_side_conditions: bool,
    rng: &mut R,
) -> Option<(Triple, WeylElement)> {
    let tr = random_triple(t, n, require_side_conditions, 5_000, rng)?;
    let w = vexillary_from_triple(&tr).ok()?;
    let v = random_above(&w, rng);
    Some((tr, v))
}
