//! Triples `τ = (k, p, q)`, the vexillary elements they determine, weak
//! triples read off a second element, and the 𝔥 / 𝔎 matrices.
//!
//! The counting statistic of an element `w` at index `i` is
//!
//! * type A: `#{a ≤ p_i : w(a) > n − q_i}`;
//! * types B/C: `#{a ≥ n+1−p_i : w(a) ≤ −(n+1−q_i)}`;
//! * type D: `#{a ≥ n−p_i : w(a) ≤ −(n−q_i)}`.
//!
//! `w(τ)` is the Bruhat-minimal element whose statistics equal `k`.  It is
//! built directly: the statistics are entries of the rank function of `w`
//! (for signed types, of `w` viewed as a permutation of `±1, …, ±n`), and the
//! pointwise smallest rank function meeting the constraints is the rank
//! function of `w(τ)`.

use std::fmt;

use thiserror::Error;

use crate::weyl::{window_bruhat_leq, LieType, WeylElement, WeylError};

/// A triple `τ = (k, p, q)` for a group of type `lie_type` and rank `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub lie_type: LieType,
    pub n: usize,
    pub k: Vec<i64>,
    pub p: Vec<i64>,
    pub q: Vec<i64>,
}

/// A weak triple `τ′ = (k′, p, q)` with weakly increasing `k′`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeakTriple {
    pub lie_type: LieType,
    pub n: usize,
    pub k: Vec<i64>,
    pub p: Vec<i64>,
    pub q: Vec<i64>,
}

/// The 2×d matrix `(a_1 … a_d ; b_0 … b_{d−1})`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ABMatrix {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl ABMatrix {
    /// Checks the shape invariants: equal lengths, `a_i ≥ 1`, `b_i ≥ 0`.
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Result<Self, TripleError> {
        let m = ABMatrix { a, b };
        m.check()?;
        Ok(m)
    }

    pub fn check(&self) -> Result<(), TripleError> {
        if self.a.len() != self.b.len() {
            return Err(TripleError::BadMatrix(format!("rows of unequal length: {self}")));
        }
        if self.a.iter().any(|&x| x < 1) || self.b.iter().any(|&x| x < 0) {
            return Err(TripleError::BadMatrix(format!("need a_i ≥ 1 and b_i ≥ 0: {self}")));
        }
        Ok(())
    }

    /// Number of columns `d`.
    pub fn d(&self) -> usize {
        self.a.len()
    }

    /// Total number of letters `Σa_i + Σb_i`.
    pub fn width(&self) -> i64 {
        self.a.iter().sum::<i64>() + self.b.iter().sum::<i64>()
    }
}

impl fmt::Display for ABMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "({}; {})", join(&self.a), join(&self.b))
    }
}

/// A matrix together with the partitions it was read from.
///
/// Type A fills all three partitions (`lambda` is the partition called `μ`
/// for 𝔎-matrices).  For types B/C/D only `lambda`, the list `p_i + q_i` of
/// the (shifted, for D) triple, is recorded.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatrixData {
    pub matrix: ABMatrix,
    pub nu: Vec<i64>,
    pub nu_t: Vec<i64>,
    pub lambda: Vec<i64>,
}

/// The rule a triple breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Sequences of unequal or zero length, or a rank of zero.
    Shape,
    /// `0 < k_1 < k_2 < …` (weakly for weak triples).
    KIncreasing,
    /// `p` weakly increasing.
    PMonotone,
    /// `q` weakly increasing.
    QMonotone,
    /// Entries outside the type's range.
    Range,
    /// `k_{i+1} − k_i < (p_{i+1} − p_i) + (q_{i+1} − q_i)`.
    Gap,
    /// No element of the group has the required counting statistics.
    Unrealizable,
    /// `λ_d < N − a_d`.
    SideCondition1,
    /// `(a_d + … + a_i) − (b_{d−1} + … + b_i) < N − λ_d`.
    SideCondition2,
}

/// One failed inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    /// 1-based index the inequality refers to, when there is one.
    pub index: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{:?} at i={}: {}", self.rule, i, self.detail),
            None => write!(f, "{:?}: {}", self.rule, self.detail),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TripleError {
    #[error("invalid triple: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("{v} is not above w(τ) = {w} in Bruhat order")]
    NotAbove { v: String, w: String },
    #[error("weak triple breaks its inequalities: {}", join_violations(.0))]
    BadWeakTriple(Vec<Violation>),
    #[error("malformed matrix: {0}")]
    BadMatrix(String),
    #[error("w(τ) is not unique: {0} minimal candidates")]
    NotUnique(usize),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

impl Triple {
    pub fn new(lie_type: LieType, n: usize, k: Vec<i64>, p: Vec<i64>, q: Vec<i64>) -> Self {
        Triple { lie_type, n, k, p, q }
    }

    /// Parses `k=1,3 p=3,4 q=2,5` (separators `;` and whitespace between the
    /// three fields are both accepted).
    pub fn parse(lie_type: LieType, n: usize, text: &str) -> Result<Self, String> {
        let (k, p, q) = parse_kpq(text)?;
        Ok(Triple { lie_type, n, k, p, q })
    }

    pub fn len(&self) -> usize {
        self.k.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k.is_empty()
    }

    /// The triple viewed as a weak triple.
    pub fn as_weak(&self) -> WeakTriple {
        WeakTriple { lie_type: self.lie_type, n: self.n, k: self.k.clone(), p: self.p.clone(), q: self.q.clone() }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_kpq(f, &self.k, &self.p, &self.q)
    }
}

impl fmt::Display for WeakTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_kpq(f, &self.k, &self.p, &self.q)
    }
}

fn write_kpq(f: &mut fmt::Formatter<'_>, k: &[i64], p: &[i64], q: &[i64]) -> fmt::Result {
    let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    write!(f, "k={} p={} q={}", join(k), join(p), join(q))
}

/// The `k`, `p` and `q` lists of a triple.
type Kpq = (Vec<i64>, Vec<i64>, Vec<i64>);

fn parse_kpq(text: &str) -> Result<Kpq, String> {
    let mut k = None;
    let mut p = None;
    let mut q = None;
    for field in text.split(|c: char| c == ';' || c.is_whitespace()).filter(|s| !s.is_empty()) {
        let (name, values) = field.split_once('=').ok_or_else(|| format!("expected name=values, got `{field}`"))?;
        let values = values
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| s.trim().parse::<i64>().map_err(|_| format!("bad integer `{s}`")))
            .collect::<Result<Vec<_>, _>>()?;
        match name.trim() {
            "k" => k = Some(values),
            "p" => p = Some(values),
            "q" => q = Some(values),
            other => return Err(format!("unknown field `{other}`")),
        }
    }
    match (k, p, q) {
        (Some(k), Some(p), Some(q)) => Ok((k, p, q)),
        _ => Err(format!("expected fields k, p and q in `{text}`")),
    }
}

/// Inclusive ranges of `p_i` and `q_i`: `(p_lo, q_lo, hi)`.  Type D
/// positions are one smaller than in type C, so that the shifted triple τ⁺
/// is a type C triple.
pub fn position_bounds(t: LieType, n: usize) -> (i64, i64, i64) {
    let n = n as i64;
    match t {
        LieType::A => (1, 0, n),
        LieType::B | LieType::C => (1, 1, n),
        LieType::D => (0, 0, n - 1),
    }
}

fn structural_violations(t: LieType, n: usize, k: &[i64], p: &[i64], q: &[i64], weak: bool) -> Vec<Violation> {
    let mut out = Vec::new();
    let v = |rule, index: Option<usize>, detail: String| Violation { rule, index, detail };
    let s = k.len();
    if n == 0 || s == 0 || p.len() != s || q.len() != s {
        out.push(v(
            Rule::Shape,
            None,
            format!("need n ≥ 1 and |k| = |p| = |q| ≥ 1 (got n={n}, {s}, {}, {})", p.len(), q.len()),
        ));
        return out;
    }
    let (plo, qlo, hi) = position_bounds(t, n);
    for i in 0..s {
        if k[i] < 0 || (!weak && k[i] == 0) {
            let what = if weak { "nonnegative" } else { "positive" };
            out.push(v(Rule::KIncreasing, Some(i + 1), format!("k_{} = {} must be {what}", i + 1, k[i])));
        }
        if !(plo..=hi).contains(&p[i]) {
            out.push(v(Rule::Range, Some(i + 1), format!("p_{} = {} outside {plo}..={hi}", i + 1, p[i])));
        }
        if !(qlo..=hi).contains(&q[i]) {
            out.push(v(Rule::Range, Some(i + 1), format!("q_{} = {} outside {qlo}..={hi}", i + 1, q[i])));
        }
    }
    for i in 0..s.saturating_sub(1) {
        let idx = Some(i + 1);
        let bad_k = if weak { k[i] > k[i + 1] } else { k[i] >= k[i + 1] };
        if bad_k {
            let rel = if weak { "≤" } else { "<" };
            out.push(v(
                Rule::KIncreasing,
                idx,
                format!("k_{} = {} {rel} k_{} = {} fails", i + 1, k[i], i + 2, k[i + 1]),
            ));
        }
        if p[i] > p[i + 1] {
            out.push(v(Rule::PMonotone, idx, format!("p_{} = {} > p_{} = {}", i + 1, p[i], i + 2, p[i + 1])));
        }
        if q[i] > q[i + 1] {
            out.push(v(Rule::QMonotone, idx, format!("q_{} = {} > q_{} = {}", i + 1, q[i], i + 2, q[i + 1])));
        }
        let lhs = k[i + 1] - k[i];
        let rhs = (p[i + 1] - p[i]) + (q[i + 1] - q[i]);
        let holds = if weak { lhs <= rhs } else { lhs < rhs };
        if !holds {
            let rel = if weak { "≤" } else { "<" };
            out.push(v(
                Rule::Gap,
                idx,
                format!(
                    "k_{} − k_{} = {lhs} {rel} (p_{} − p_{}) + (q_{} − q_{}) = {rhs} fails",
                    i + 2,
                    i + 1,
                    i + 2,
                    i + 1,
                    i + 2,
                    i + 1
                ),
            ));
        }
    }
    out
}

/// Checks monotonicity, ranges, the gap inequalities and realizability
/// (existence of an element with the prescribed counting statistics).
///
/// The two side conditions on 𝔥(τ) for types B/C/D are checked separately by
/// [`side_conditions`]; they restrict where the inductive formula applies
/// but are not needed for `τ` to define a vexillary element.
pub fn validate_triple(t: &Triple) -> Result<(), TripleError> {
    let mut out = structural_violations(t.lie_type, t.n, &t.k, &t.p, &t.q, false);
    if out.is_empty() && construct_vexillary(t).is_none() {
        out.push(Violation {
            rule: Rule::Unrealizable,
            index: None,
            detail: format!("no element of {}{} has counting statistics k = {:?}", t.lie_type, t.n, t.k),
        });
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(TripleError::Invalid(out))
    }
}

/// The side conditions for types B/C/D (always empty for type A):
/// (1) `λ_d < N − a_d` and (2) `(a_d+…+a_i) − (b_{d−1}+…+b_i) < N − λ_d` for
/// `1 ≤ i ≤ d`, where `(a; b) = 𝔥(τ)`, and `λ_d = p_s + q_s`, `N = 2n+1` for
/// types B/C, `λ_d = p_s + q_s + 2`, `N = 2n` for type D.
pub fn side_conditions(t: &Triple) -> Result<Vec<Violation>, TripleError> {
    if t.lie_type == LieType::A {
        return Ok(Vec::new());
    }
    let h = h_matrix(t)?.matrix;
    let s = t.len();
    let n = t.n as i64;
    let (lambda, big_n) = if t.lie_type == LieType::D {
        (t.p[s - 1] + t.q[s - 1] + 2, 2 * n)
    } else {
        (t.p[s - 1] + t.q[s - 1], 2 * n + 1)
    };
    let d = h.d();
    let mut out = Vec::new();
    if d == 0 {
        return Ok(out);
    }
    if lambda >= big_n - h.a[d - 1] {
        out.push(Violation {
            rule: Rule::SideCondition1,
            index: Some(d),
            detail: format!("λ_d = {lambda} < N − a_d = {} − {} fails", big_n, h.a[d - 1]),
        });
    }
    for i in 1..=d {
        let lhs: i64 = h.a[i - 1..].iter().sum::<i64>() - h.b[i..].iter().sum::<i64>();
        if lhs >= big_n - lambda {
            out.push(Violation {
                rule: Rule::SideCondition2,
                index: Some(i),
                detail: format!("(a_d+…+a_{i}) − (b_{{d−1}}+…+b_{i}) = {lhs} < N − λ_d = {} fails", big_n - lambda),
            });
        }
    }
    Ok(out)
}

/// The counting statistics of `w` for the positions `p` and `q`.
pub fn counting_statistics(lie_type: LieType, p: &[i64], q: &[i64], w: &WeylElement) -> Vec<i64> {
    let n = w.n() as i64;
    p.iter()
        .zip(q)
        .map(|(&pi, &qi)| {
            w.window()
                .iter()
                .enumerate()
                .filter(|&(idx, &x)| {
                    let a = idx as i64 + 1;
                    let x = x as i64;
                    match lie_type {
                        LieType::A => a <= pi && x > n - qi,
                        LieType::B | LieType::C => a >= n + 1 - pi && x <= -(n + 1 - qi),
                        LieType::D => a >= n - pi && x <= -(n - qi),
                    }
                })
                .count() as i64
        })
        .collect()
}

/// `w∘ · w`: reverse the values (type A) or negate them (types B/C/D).
pub fn w0_times(w: &WeylElement) -> WeylElement {
    let n = w.n() as i32;
    let window = match w.lie_type() {
        LieType::A => w.window().iter().map(|&x| n + 1 - x).collect(),
        _ => w.window().iter().map(|&x| -x).collect(),
    };
    WeylElement::new(w.lie_type(), window).expect("w∘w is a valid window")
}

/// The order on vexillary-side elements: `u ≼ v` iff `w∘v ≤ w∘u`.
///
/// For types A, B, C and for type D of even rank this is the Bruhat order;
/// for type D of odd rank it orders the coset with an odd number of negative
/// entries, via the group elements `−u`, `−v`.
pub fn side_leq(u: &WeylElement, v: &WeylElement) -> bool {
    let (x, y) = (w0_times(u), w0_times(v));
    window_bruhat_leq(u.lie_type(), y.window(), x.window())
}

/// Smallest rank function `r(p, m) = #{a ≤ p : w(a) > m}` on `0..=size`
/// meeting `r(p_i, m_i) ≥ k_i`, decoded into a permutation of `1..=size` if
/// it is the rank function of one.
fn minimal_permutation(size: usize, constraints: &[(i64, i64, i64)]) -> Option<Vec<i64>> {
    let size_i = size as i64;
    let r = |p: i64, m: i64| -> i64 {
        let mut v = (p - m).max(0);
        for &(pi, mi, ki) in constraints {
            v = v.max(ki - (pi - p).max(0) - (m - mi).max(0));
        }
        v
    };
    let mut w = Vec::with_capacity(size);
    for a in 1..=size_i {
        let mut val = 0;
        for m in 0..size_i {
            let bit = r(a, m) - r(a - 1, m);
            if !(0..=1).contains(&bit) {
                return None;
            }
            val += bit;
        }
        w.push(val);
    }
    let mut seen = vec![false; size + 1];
    for &x in &w {
        if x < 1 || x > size_i || seen[x as usize] {
            return None;
        }
        seen[x as usize] = true;
    }
    Some(w)
}

/// Builds `w(τ)` or returns `None` when no element has statistics `k`.
fn construct_vexillary(t: &Triple) -> Option<WeylElement> {
    let n = t.n;
    let ni = n as i64;
    let candidate = match t.lie_type {
        LieType::A => {
            let cons: Vec<_> = (0..t.len()).map(|i| (t.p[i], ni - t.q[i], t.k[i])).collect();
            let w = minimal_permutation(n, &cons)?;
            WeylElement::new(LieType::A, w.into_iter().map(|x| x as i32).collect()).ok()?
        }
        _ => {
            // Signed permutations as permutations of ±1..±n, listed as
            // −n < … < −1 < 1 < … < n.  The statistic at (p, q) counts the
            // last p positions whose values lie among the q smallest, which
            // by the symmetry w(−a) = −w(a) is the type A statistic at
            // (p, 2n − q), together with its mirror image.
            let shift = if t.lie_type == LieType::D { 1 } else { 0 };
            let size = 2 * ni;
            let mut cons = Vec::new();
            for i in 0..t.len() {
                let p = t.p[i] + shift;
                let q = t.q[i] + shift;
                cons.push((p, size - q, t.k[i]));
                cons.push((size - p, q, t.k[i] + size - p - q));
            }
            let full = minimal_permutation(2 * n, &cons)?;
            let window: Vec<i32> = (0..n)
                .map(|a| {
                    let j = full[n + a];
                    (if j > ni { j - ni } else { j - ni - 1 }) as i32
                })
                .collect();
            WeylElement::new(t.lie_type, window).ok()?
        }
    };
    let w = if t.lie_type == LieType::D && candidate.negatives() % 2 != n % 2 {
        // The minimum over all signed permutations has the wrong sign
        // parity; the minimum within the right coset differs from it by a
        // single sign change.
        let flips: Vec<WeylElement> = (0..n)
            .map(|i| {
                let mut win = candidate.window().to_vec();
                win[i] = -win[i];
                WeylElement::new(LieType::D, win).expect("sign change keeps a valid window")
            })
            .filter(|u| counting_statistics(t.lie_type, &t.p, &t.q, u) == t.k)
            .collect();
        let minimal: Vec<&WeylElement> = flips.iter().filter(|u| flips.iter().all(|v| side_leq(u, v))).collect();
        match minimal.as_slice() {
            [one] => (*one).clone(),
            _ => return None,
        }
    } else {
        candidate
    };
    (counting_statistics(t.lie_type, &t.p, &t.q, &w) == t.k).then_some(w)
}

/// The vexillary element `w(τ)`.
pub fn vexillary_from_triple(t: &Triple) -> Result<WeylElement, TripleError> {
    validate_triple(t)?;
    Ok(construct_vexillary(t).expect("validated triples are realizable"))
}

/// The weak triple `τ′(w(τ), v)`.
pub fn weak_triple_from_pair(t: &Triple, v: &WeylElement) -> Result<WeakTriple, TripleError> {
    let w = vexillary_from_triple(t)?;
    if v.lie_type() != t.lie_type || v.n() != t.n {
        return Err(WeylError::Mismatch(t.lie_type, t.n, v.lie_type(), v.n()).into());
    }
    if t.lie_type == LieType::D && v.negatives() % 2 != t.n % 2 {
        return Err(TripleError::NotAbove { v: v.to_string(), w: w.to_string() });
    }
    if !side_leq(&w, v) {
        return Err(TripleError::NotAbove { v: v.to_string(), w: w.to_string() });
    }
    let k = counting_statistics(t.lie_type, &t.p, &t.q, v);
    let weak = WeakTriple { lie_type: t.lie_type, n: t.n, k, p: t.p.clone(), q: t.q.clone() };
    let bad = structural_violations(t.lie_type, t.n, &weak.k, &weak.p, &weak.q, true);
    if !bad.is_empty() {
        return Err(TripleError::BadWeakTriple(bad));
    }
    Ok(weak)
}

/// Type A: `ν_j = n − q_i − p_i + k_i` for `k_{i−1} < j ≤ k_i`, its
/// conjugate `ν^T` padded to length `n`, `λ = n − ν^T`; `a` lists the
/// multiplicities of the distinct parts of `λ`, `b_0 = λ_1` and `b_i` the
/// successive differences of the distinct parts.
fn matrix_type_a(n: usize, k: &[i64], p: &[i64], q: &[i64]) -> Result<MatrixData, TripleError> {
    let ni = n as i64;
    let mut nu = Vec::new();
    let mut prev = 0;
    for i in 0..k.len() {
        let val = ni - q[i] - p[i] + k[i];
        for _ in prev..k[i] {
            nu.push(val);
        }
        prev = k[i];
    }
    let nu_t: Vec<i64> = (1..=ni).map(|i| nu.iter().filter(|&&x| x >= i).count() as i64).collect();
    let lambda: Vec<i64> = nu_t.iter().map(|&x| ni - x).collect();
    let mut a: Vec<i64> = Vec::new();
    let mut parts: Vec<i64> = Vec::new();
    for &x in &lambda {
        if parts.last() == Some(&x) {
            *a.last_mut().expect("nonempty") += 1;
        } else {
            parts.push(x);
            a.push(1);
        }
    }
    let mut b = Vec::with_capacity(parts.len());
    if let Some(&first) = parts.first() {
        b.push(first);
    }
    b.extend(parts.windows(2).map(|w| w[1] - w[0]));
    Ok(MatrixData { matrix: ABMatrix::new(a, b)?, nu, nu_t, lambda })
}

/// Types B/C (and D after the shift): `a_i = k_i − k_{i−1}`,
/// `λ_i = p_i + q_i`, `b_0 = λ_1 − a_1`, `b_i = λ_{i+1} − λ_i − a_{i+1}`.
fn matrix_type_c(k: &[i64], p: &[i64], q: &[i64]) -> Result<MatrixData, TripleError> {
    let s = k.len();
    let lambda: Vec<i64> = (0..s).map(|i| p[i] + q[i]).collect();
    let a: Vec<i64> = (0..s).map(|i| k[i] - if i == 0 { 0 } else { k[i - 1] }).collect();
    let mut b = Vec::with_capacity(s);
    if s > 0 {
        b.push(lambda[0] - a[0]);
    }
    for i in 0..s.saturating_sub(1) {
        b.push(lambda[i + 1] - lambda[i] - a[i + 1]);
    }
    Ok(MatrixData { matrix: ABMatrix::new(a, b)?, nu: Vec::new(), nu_t: Vec::new(), lambda })
}

/// `(p, q)` shifted by one for type D (the triple τ⁺), unchanged otherwise.
fn shifted(t: LieType, p: &[i64], q: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let sh = if t == LieType::D { 1 } else { 0 };
    (p.iter().map(|x| x + sh).collect(), q.iter().map(|x| x + sh).collect())
}

/// The matrix 𝔥(τ).
pub fn h_matrix(t: &Triple) -> Result<MatrixData, TripleError> {
    let bad = structural_violations(t.lie_type, t.n, &t.k, &t.p, &t.q, false);
    if !bad.is_empty() {
        return Err(TripleError::Invalid(bad));
    }
    matrix_for(t.lie_type, t.n, &t.k, &t.p, &t.q)
}

fn matrix_for(lie_type: LieType, n: usize, k: &[i64], p: &[i64], q: &[i64]) -> Result<MatrixData, TripleError> {
    match lie_type {
        LieType::A => matrix_type_a(n, k, p, q),
        _ => {
            let (p, q) = shifted(lie_type, p, q);
            matrix_type_c(k, &p, &q)
        }
    }
}

/// Reduces a weak triple to a triple: rows with `k′_i = 0` are dropped,
/// row `i+1` is dropped when `k′_i = k′_{i+1}`, and for type A row `i` is
/// dropped when the gap inequality holds with equality.  Repeats until no
/// rule applies.  Returns `(k, p, q)` of the reduced triple; for type D the
/// positions are already shifted by one.
pub fn reduce_weak_triple(wt: &WeakTriple) -> (Vec<i64>, Vec<i64>, Vec<i64>) {
    let (mut p, mut q) = shifted(wt.lie_type, &wt.p, &wt.q);
    let mut k = wt.k.clone();
    loop {
        if k.first() == Some(&0) {
            k.remove(0);
            p.remove(0);
            q.remove(0);
            continue;
        }
        let mut changed = false;
        for i in 0..k.len().saturating_sub(1) {
            if k[i] == k[i + 1] {
                k.remove(i + 1);
                p.remove(i + 1);
                q.remove(i + 1);
                changed = true;
                break;
            }
            if wt.lie_type == LieType::A && k[i + 1] - k[i] == (p[i + 1] - p[i]) + (q[i + 1] - q[i]) {
                k.remove(i);
                p.remove(i);
                q.remove(i);
                changed = true;
                break;
            }
        }
        if !changed {
            return (k, p, q);
        }
    }
}

/// The matrix 𝔎(w(τ), v) of a weak triple.
pub fn k_matrix(t: &Triple, wt: &WeakTriple) -> Result<MatrixData, TripleError> {
    if wt.lie_type != t.lie_type || wt.n != t.n || wt.p != t.p || wt.q != t.q {
        return Err(TripleError::BadMatrix("weak triple does not belong to the triple".into()));
    }
    let (k, p, q) = reduce_weak_triple(wt);
    match t.lie_type {
        LieType::A => matrix_type_a(t.n, &k, &p, &q),
        _ => matrix_type_c(&k, &p, &q),
    }
}
