//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use covex_kl::polyq::QPoly;
use covex_kl::weyl::{all_elements, LieType, Side, WeylElement};

/// Coxeter lengths as graph distances from the identity in the Cayley graph
/// of the simple reflections.
pub fn bfs_lengths(t: LieType, n: usize) -> HashMap<WeylElement, usize> {
    let mut dist = HashMap::new();
    let id = WeylElement::identity(t, n);
    dist.insert(id.clone(), 0);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for i in t.generators(n) {
            let x = w.apply_simple(i, Side::Right).unwrap();
            if !dist.contains_key(&x) {
                dist.insert(x.clone(), d + 1);
                queue.push_back(x);
            }
        }
    }
    dist
}

/// All products of subwords of a reduced word of `w`: the Bruhat interval
/// `[e, w]` by the subword criterion.
pub fn subword_interval(w: &WeylElement) -> HashSet<WeylElement> {
    let word = w.reduced_word().unwrap();
    let mut set: HashSet<WeylElement> = HashSet::from([WeylElement::identity(w.lie_type(), w.n())]);
    for &i in &word {
        let extra: Vec<WeylElement> = set.iter().map(|x| x.apply_simple(i, Side::Right).unwrap()).collect();
        set.extend(extra);
    }
    set
}

/// Kazhdan–Lusztig polynomials of a small group from R-polynomials:
/// `q^{ℓ(w)−ℓ(x)} P_{x,w}(q^{-1}) − P_{x,w}(q) = Σ_{x<y≤w} R_{x,y} P_{y,w}`,
/// where `R_{x,w} = R_{xs,ws}` if `xs < x` and
/// `(q−1) R_{x,ws} + q R_{xs,ws}` otherwise, for a right descent `s` of `w`.
pub struct RPolynomialKl {
    lie_type: LieType,
    n: usize,
    below: HashMap<WeylElement, HashSet<WeylElement>>,
    length: HashMap<WeylElement, usize>,
    r_memo: HashMap<(WeylElement, WeylElement), QPoly>,
}

impl RPolynomialKl {
    pub fn new(lie_type: LieType, n: usize) -> Self {
        let length = bfs_lengths(lie_type, n);
        let below = all_elements(lie_type, n).into_iter().map(|w| (w.clone(), subword_interval(&w))).collect();
        RPolynomialKl { lie_type, n, below, length, r_memo: HashMap::new() }
    }

    fn leq(&self, x: &WeylElement, w: &WeylElement) -> bool {
        self.below[w].contains(x)
    }

    pub fn r(&mut self, x: &WeylElement, w: &WeylElement) -> QPoly {
        if !self.leq(x, w) {
            return QPoly::zero();
        }
        if x == w {
            return QPoly::one();
        }
        let key = (x.clone(), w.clone());
        if let Some(p) = self.r_memo.get(&key) {
            return p.clone();
        }
        let s = *w.right_descents().first().expect("w is not the identity");
        let ws = w.apply_simple(s, Side::Right).unwrap();
        let xs = x.apply_simple(s, Side::Right).unwrap();
        let result = if self.length[&xs] < self.length[x] {
            self.r(&xs, &ws)
        } else {
            let q_minus_1 = QPoly::from_i64s(&[-1, 1]);
            &(&q_minus_1 * &self.r(x, &ws)) + &self.r(&xs, &ws).shift(1)
        };
        self.r_memo.insert(key, result.clone());
        result
    }

    /// `P_{x,w}` for every `x ≤ w`.
    pub fn p_column(&mut self, w: &WeylElement) -> HashMap<WeylElement, QPoly> {
        let mut interval: Vec<WeylElement> = self.below[w].iter().cloned().collect();
        interval.sort_by_key(|x| std::cmp::Reverse(self.length[x]));
        let lw = self.length[w];
        let mut p: HashMap<WeylElement, QPoly> = HashMap::new();
        for x in interval {
            if &x == w {
                p.insert(x, QPoly::one());
                continue;
            }
            let mut rhs = QPoly::zero();
            let ys: Vec<WeylElement> = p.keys().filter(|y| self.leq(&x, y) && **y != x).cloned().collect();
            for y in ys {
                let term = &self.r(&x, &y) * &p[&y];
                rhs += &term;
            }
            let d = lw - self.length[&x];
            let low: Vec<i64> =
                (0..=(d - 1) / 2).map(|i| -i64::try_from(rhs.coeff(i)).expect("small coefficient")).collect();
            p.insert(x, QPoly::from_i64s(&low));
        }
        p
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// All windows of a set, as a sorted set of strings (for readable asserts).
pub fn windows(set: &HashSet<WeylElement>) -> BTreeSet<String> {
    set.iter().map(|w| w.to_string()).collect()
}
