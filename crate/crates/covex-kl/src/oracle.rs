//! Brute-force Kazhdan–Lusztig polynomials by the classical recursion.
//!
//! For a left descent `s` of `w` (the one with the smallest index) and
//! `v = sw`, every `x` with `sx > x` satisfies
//!
//! ```text
//! P_{x,w} = q·P_{sx,v} + P_{x,v} − Σ_{z : sz < z, μ(z,v) ≠ 0} μ(z,v) q^{(ℓ(w)−ℓ(z))/2} P_{x,z}
//! P_{sx,w} = P_{x,w}
//! ```
//!
//! where `μ(z,v)` is the coefficient of `q^{(ℓ(v)−ℓ(z)−1)/2}` in `P_{z,v}`.
//! The table computes whole rows `{P_{x,w} : x ≤ w}` on demand: the row of
//! `w` is built from the row of `v` and the rows of the `z` appearing in the
//! correction sum.  Rows are kept for the lifetime of the table and dropped
//! together with it.
//!
//! Coefficients are accumulated in checked `i64` arithmetic; an overflow is
//! reported as an error instead of wrapping.  At the group sizes this module
//! accepts, Kazhdan–Lusztig coefficients stay many orders of magnitude below
//! that limit.

use std::collections::{HashMap, HashSet, VecDeque};
use std::rc::Rc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::polyq::QPoly;
use crate::weyl::{
    is_left_descent, left_mul_simple, right_reflection_images, window_bruhat_leq, window_length, LieType, WeylElement,
    WeylError,
};

/// Default bound on the order of the groups the oracle will work in.
pub const DEFAULT_BUDGET: u128 = 50_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "COVEX_KL_BUDGET";

/// The budget in effect: `COVEX_KL_BUDGET` if set and parseable, otherwise
/// [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u128 {
    std::env::var(BUDGET_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("group {lie_type}{n} has order {order}, above the oracle budget {budget}")]
    BudgetExceeded { lie_type: LieType, n: usize, order: u128, budget: u128 },
    #[error("{x} is not below {w} in Bruhat order")]
    NotBelow { x: String, w: String },
    #[error("integer overflow while accumulating Kazhdan-Lusztig coefficients")]
    Overflow,
    #[error("the oracle supports window sizes up to 12")]
    RankTooLarge,
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

const MAX_N: usize = 12;

type Key = u64;
type Poly = Vec<i64>;

fn pack(w: &[i32]) -> Key {
    w.iter().enumerate().fold(0u64, |acc, (i, &x)| acc | (((x + 16) as u64) << (5 * i)))
}

fn unpack(k: Key, n: usize, out: &mut [i32]) {
    for (i, slot) in out.iter_mut().enumerate().take(n) {
        *slot = ((k >> (5 * i)) & 31) as i32 - 16;
    }
}

fn poly_add_assign(acc: &mut Poly, p: &[i64], shift: usize, scale: i64) -> Result<(), OracleError> {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        let term = c.checked_mul(scale).ok_or(OracleError::Overflow)?;
        acc[i + shift] = acc[i + shift].checked_add(term).ok_or(OracleError::Overflow)?;
    }
    Ok(())
}

fn trim(p: &mut Poly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

struct Row {
    len: usize,
    /// `x ↦ (ℓ(x), P_{x,w})` for every `x ≤ w`.
    entries: HashMap<Key, (usize, Rc<Poly>)>,
    /// `(z, μ(z,w))` for `z < w` with nonzero μ.
    mu: Vec<(Key, i64)>,
}

/// A lazily filled table of Kazhdan–Lusztig polynomials for one group.
pub struct KlTable {
    lie_type: LieType,
    n: usize,
    gens: Vec<usize>,
    rows: HashMap<Key, Rc<Row>>,
}

impl KlTable {
    /// A table for the group of type `lie_type` with window size `n`, using
    /// the budget from [`budget_from_env`].
    pub fn new(lie_type: LieType, n: usize) -> Result<Self, OracleError> {
        KlTable::with_budget(lie_type, n, budget_from_env())
    }

    pub fn with_budget(lie_type: LieType, n: usize, budget: u128) -> Result<Self, OracleError> {
        if n == 0 {
            return Err(WeylError::BadRank.into());
        }
        if n > MAX_N {
            return Err(OracleError::RankTooLarge);
        }
        let order = lie_type.group_order(n);
        if order > budget {
            return Err(OracleError::BudgetExceeded { lie_type, n, order, budget });
        }
        Ok(KlTable { lie_type, n, gens: lie_type.generators(n), rows: HashMap::new() })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows computed so far.
    pub fn rows_computed(&self) -> usize {
        self.rows.len()
    }

    fn check(&self, w: &WeylElement) -> Result<(), OracleError> {
        if w.lie_type() != self.lie_type || w.n() != self.n {
            return Err(WeylError::Mismatch(self.lie_type, self.n, w.lie_type(), w.n()).into());
        }
        if !w.is_group_element() {
            return Err(WeylError::NotInGroup(w.window().to_vec()).into());
        }
        Ok(())
    }

    /// `P_{x,w}(q)`; an error if `x ≰ w`.
    pub fn p(&mut self, x: &WeylElement, w: &WeylElement) -> Result<QPoly, OracleError> {
        self.check(x)?;
        self.check(w)?;
        if !window_bruhat_leq(self.lie_type, x.window(), w.window()) {
            return Err(OracleError::NotBelow { x: x.to_string(), w: w.to_string() });
        }
        let row = self.row(pack(w.window()))?;
        let (_, p) = row.entries.get(&pack(x.window())).expect("row covers the lower interval");
        Ok(QPoly::from_coeffs(p.iter().map(|&c| BigInt::from(c)).collect()))
    }

    /// The μ-coefficient of `(x, w)`: the coefficient of
    /// `q^{(ℓ(w)−ℓ(x)−1)/2}` in `P_{x,w}`, zero for even length difference.
    pub fn mu(&mut self, x: &WeylElement, w: &WeylElement) -> Result<BigInt, OracleError> {
        self.check(x)?;
        self.check(w)?;
        let row = self.row(pack(w.window()))?;
        let key = pack(x.window());
        Ok(BigInt::from(row.mu.iter().find(|(z, _)| *z == key).map_or(0, |&(_, m)| m)))
    }

    /// The row of `w`, computing it (and its prerequisites) if needed.
    fn row(&mut self, w: Key) -> Result<Rc<Row>, OracleError> {
        if let Some(r) = self.rows.get(&w) {
            return Ok(r.clone());
        }
        let t = self.lie_type;
        let n = self.n;
        let mut win = [0i32; MAX_N];
        unpack(w, n, &mut win);
        let wwin = &win[..n];
        let lw = window_length(t, wwin);
        let descent = self.gens.iter().copied().find(|&s| is_left_descent(t, wwin, s));
        let Some(s) = descent else {
            // The identity.
            let mut entries = HashMap::new();
            entries.insert(w, (0, Rc::new(vec![1])));
            let row = Rc::new(Row { len: 0, entries, mu: Vec::new() });
            self.rows.insert(w, row.clone());
            return Ok(row);
        };
        let mut vwin = wwin.to_vec();
        left_mul_simple(t, &mut vwin, s);
        let v = pack(&vwin);
        let vrow = self.row(v)?;

        // Rows needed for the correction sum: z with μ(z, v) ≠ 0 and sz < z.
        let mut corrections: Vec<(i64, usize, Rc<Row>)> = Vec::new();
        for &(z, m) in &vrow.mu {
            let mut zwin = [0i32; MAX_N];
            unpack(z, n, &mut zwin);
            if is_left_descent(t, &zwin[..n], s) {
                let zrow = self.row(z)?;
                corrections.push((m, (lw - zrow.len) / 2, zrow));
            }
        }

        let mut entries: HashMap<Key, (usize, Rc<Poly>)> = HashMap::with_capacity(vrow.entries.len() * 2);
        let mut xwin = [0i32; MAX_N];
        for (&x, &(lx, ref pxv)) in &vrow.entries {
            unpack(x, n, &mut xwin);
            if is_left_descent(t, &xwin[..n], s) {
                continue;
            }
            left_mul_simple(t, &mut xwin[..n], s);
            let sx = pack(&xwin[..n]);
            let mut acc: Poly = pxv.as_ref().clone();
            if let Some((_, psx)) = vrow.entries.get(&sx) {
                poly_add_assign(&mut acc, psx, 1, 1)?;
            }
            for (m, shift, zrow) in &corrections {
                if let Some((_, pxz)) = zrow.entries.get(&x) {
                    poly_add_assign(&mut acc, pxz, *shift, -m)?;
                }
            }
            trim(&mut acc);
            let acc = Rc::new(acc);
            entries.insert(x, (lx, acc.clone()));
            entries.insert(sx, (lx + 1, acc));
        }
        entries.insert(w, (lw, Rc::new(vec![1])));

        let mut mu: Vec<(Key, i64)> = entries
            .iter()
            .filter(|(&z, (lz, _))| z != w && (lw - lz) % 2 == 1)
            .filter_map(|(&z, (lz, p))| {
                let k = (lw - lz - 1) / 2;
                p.get(k).copied().filter(|&c| c != 0).map(|c| (z, c))
            })
            .collect();
        mu.sort_unstable();
        let row = Rc::new(Row { len: lw, entries, mu });
        self.rows.insert(w, row.clone());
        Ok(row)
    }

    /// All `z` with `x ≤ z ≤ w`, sorted by length and then window.
    pub fn bruhat_interval(&self, x: &WeylElement, w: &WeylElement) -> Result<Vec<WeylElement>, OracleError> {
        self.check(x)?;
        self.check(w)?;
        let t = self.lie_type;
        if !window_bruhat_leq(t, x.window(), w.window()) {
            return Err(OracleError::NotBelow { x: x.to_string(), w: w.to_string() });
        }
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.window().to_vec());
        queue.push_back(w.window().to_vec());
        while let Some(z) = queue.pop_front() {
            let lz = window_length(t, &z);
            for y in right_reflection_images(t, &z) {
                if window_length(t, &y) + 1 == lz && !seen.contains(&y) && window_bruhat_leq(t, x.window(), &y) {
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut out: Vec<(usize, WeylElement)> =
            seen.into_iter().map(|z| (window_length(t, &z), WeylElement::new(t, z).expect("valid window"))).collect();
        out.sort();
        Ok(out.into_iter().map(|(_, z)| z).collect())
    }
}

/// `P_{x,w}(q)` in a fresh table.
pub fn kl_oracle(x: &WeylElement, w: &WeylElement) -> Result<QPoly, OracleError> {
    KlTable::new(w.lie_type(), w.n())?.p(x, w)
}
