//! One line per acceptance criterion: `PASS`, `FAIL` or `SKIP`, with timings.
//!
//! Criteria listed in `KNOWN_FAILURES` are reported as `FAIL` with the reason
//! and do not fail the test target; any other failure does, and so does a
//! known failure that unexpectedly passes (the list would be stale).
//!
//! Lines go to the process's stderr directly rather than through `println!`,
//! so they appear even when the test harness captures output.

mod common;

use std::collections::HashSet;
use std::io::Write;
use std::time::{Duration, Instant};

use common::{subword_interval, RPolynomialKl};
use covex_kl::oracle::{budget_from_env, KlTable, BUDGET_ENV};
use covex_kl::pipeline::{oracle_type, Case};
use covex_kl::polyq::{q_binomial, QPoly};
use covex_kl::sample::{all_triples, elements_above, random_case};
use covex_kl::triples::{vexillary_from_triple, Triple};
use covex_kl::weyl::{all_elements, bruhat_leq, longest_element, LieType, WeylElement};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria that fail for a documented reason.
const KNOWN_FAILURES: &[(&str, &str)] = &[
    ("1.C.induction", "𝔥(τ) violates the side conditions under which the merging recursion is valid"),
    ("1.D.induction", "𝔥(τ) violates the side conditions under which the merging recursion is valid"),
];

fn emit(line: &str) {
    let _ = writeln!(std::io::stderr().lock(), "{line}");
}

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

struct Report {
    lines: Vec<(String, &'static str, String)>,
}

impl Report {
    fn run(&mut self, id: &str, limit: Duration, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let (mut status, mut detail) = match outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => ("FAIL", d),
            Outcome::Skip(d) => ("SKIP", d),
        };
        if status == "PASS" && elapsed > limit {
            status = "FAIL";
            detail = format!("{detail}; exceeded the {limit:?} limit");
        }
        if status == "FAIL" {
            if let Some((_, why)) = KNOWN_FAILURES.iter().find(|(k, _)| *k == id) {
                detail = format!("{detail} [known: {why}]");
            }
        }
        let line = format!("{status} {id} ({:.3}s) {detail}", elapsed.as_secs_f64());
        emit(&line);
        self.lines.push((id.to_string(), status, line));
    }
}

fn poly_outcome(got: Result<QPoly, impl std::fmt::Display>, expected: &str) -> Outcome {
    match got {
        Ok(p) if p.to_string() == expected => Outcome::Pass(format!("`{p}`")),
        Ok(p) => Outcome::Fail(format!("got `{p}`, expected `{expected}`")),
        Err(e) => Outcome::Fail(format!("error: {e}")),
    }
}

struct Golden {
    id: &'static str,
    lie_type: LieType,
    n: usize,
    tau: &'static str,
    v: &'static str,
    expected: &'static str,
    w: &'static str,
    h: &'static str,
    k: Option<&'static str>,
    c: &'static [u64],
    oracle: bool,
}

const GOLDENS: &[Golden] = &[
    Golden {
        id: "A",
        lie_type: LieType::A,
        n: 8,
        tau: "k=1,3 p=3,4 q=2,5",
        v: "8 7 6 5 4 3 2 1",
        expected: "q^3 + 2*q^2 + 2*q + 1",
        w: "1 4 7 5 2 3 6 8",
        h: "(2 2 4; 5 2 1)",
        k: Some("(3 2 3; 4 2 2)"),
        c: &[1, 1, 0],
        oracle: true,
    },
    Golden {
        id: "C",
        lie_type: LieType::C,
        n: 7,
        tau: "k=1,2,4 p=2,3,6 q=6,7,7",
        v: "7 -6 -5 -4 -3 -2 -1",
        expected: "q^4 + q^3 + 2*q^2 + 2*q + 1",
        w: "5 -4 -3 6 -1 -2 7",
        h: "(1 1 2; 7 1 1)",
        k: Some("(1 2 3; 7 0 0)"),
        c: &[0, 1, 2],
        oracle: true,
    },
    Golden {
        id: "D",
        lie_type: LieType::D,
        n: 6,
        tau: "k=1,2,4 p=0,2,5 q=0,2,5",
        v: "-3 -2 -1 -5 -4 -6",
        expected: "q^3 + q^2 + q + 1",
        w: "-2 -1 3 -4 5 -6",
        h: "(1 1 2; 1 3 4)",
        k: None,
        c: &[0, 1, 2],
        oracle: true,
    },
    Golden {
        id: "BC-zelevinsky",
        lie_type: LieType::B,
        n: 8,
        tau: "k=1,2,3 p=3,5,6 q=3,4,5",
        v: "1 2 -4 -5 3 -7 -6 8",
        expected: "q^3 + 3*q^2 + 3*q + 1",
        w: "1 2 -4 -5 3 -6 7 8",
        h: "(1 1 1; 5 2 1)",
        k: Some("(2 1 1; 4 2 1)"),
        c: &[1, 1, 1],
        oracle: false,
    },
    Golden {
        id: "D-zelevinsky",
        lie_type: LieType::D,
        n: 7,
        tau: "k=2,3 p=3,6 q=3,4",
        v: "-3 1 2 -7 -6 -5 -4",
        expected: "q^6 + 2*q^5 + 4*q^4 + 4*q^3 + 4*q^2 + 2*q + 1",
        w: "-3 1 2 -5 -4 6 7",
        h: "(2 1; 6 3)",
        k: None,
        c: &[2, 2],
        oracle: false,
    },
];

fn goldens(report: &mut Report) {
    let second = Duration::from_secs(1);
    for g in GOLDENS {
        let tau = Triple::parse(g.lie_type, g.n, g.tau).unwrap();
        let v = WeylElement::parse(g.lie_type, g.v).unwrap();
        let case = Case::new(&tau, &v);
        report.run(&format!("1.{}.intermediates", g.id), second, || {
            let c = match &case {
                Ok(c) => c,
                Err(e) => return Outcome::Fail(e.to_string()),
            };
            let mut bad = Vec::new();
            if c.w.to_string() != g.w {
                bad.push(format!("w(τ) = {} ≠ {}", c.w, g.w));
            }
            if c.h.matrix.to_string() != g.h {
                bad.push(format!("𝔥 = {} ≠ {}", c.h.matrix, g.h));
            }
            if let Some(k) = g.k {
                if c.k.matrix.to_string() != k {
                    bad.push(format!("𝔎 = {} ≠ {k}", c.k.matrix));
                }
            }
            if c.capacity.c != g.c {
                bad.push(format!("c = {:?} ≠ {:?}", c.capacity.c, g.c));
            }
            if bad.is_empty() {
                Outcome::Pass(format!("w(τ) = {}, 𝔥 = {}, 𝔎 = {}, c = {:?}", c.w, c.h.matrix, c.k.matrix, c.capacity.c))
            } else {
                Outcome::Fail(bad.join("; "))
            }
        });
        let Ok(case) = case else { continue };
        report.run(&format!("1.{}.trees", g.id), second, || poly_outcome(case.by_trees(), g.expected));
        report.run(&format!("1.{}.induction", g.id), second, || {
            let outcome = poly_outcome(case.by_inductive(), g.expected);
            match outcome {
                Outcome::Fail(d) if !case.side_conditions_hold() => {
                    let v: Vec<String> = case.side_violations.iter().map(|v| v.to_string()).collect();
                    Outcome::Fail(format!("{d}; violated: {}", v.join("; ")))
                }
                o => o,
            }
        });
        if g.oracle {
            let gt = oracle_type(g.lie_type);
            let limit = if g.id == "C" { Duration::from_secs(60) } else { second };
            report.run(&format!("1.{}.oracle", g.id), limit, || match KlTable::new(gt, g.n) {
                Ok(mut table) => poly_outcome(case.by_oracle(&mut table), g.expected),
                Err(e) => Outcome::Skip(format!("{e}; set {BUDGET_ENV} ≥ {} to run", gt.group_order(g.n))),
            });
        }
    }
}

fn three_way(report: &mut Report) {
    report.run("2.three-way", Duration::from_secs(300), || {
        let mut counts = Vec::new();
        let mut total = 0usize;
        for (t, nmax) in [(LieType::A, 5), (LieType::B, 3), (LieType::C, 3), (LieType::D, 3)] {
            let mut checked = 0usize;
            let mut outside = 0usize;
            for n in 1..=nmax {
                let mut table = match KlTable::new(oracle_type(t), n) {
                    Ok(t) => t,
                    Err(e) => return Outcome::Fail(e.to_string()),
                };
                for tr in all_triples(t, n) {
                    let w = vexillary_from_triple(&tr).unwrap();
                    for v in elements_above(&w) {
                        let c = Case::new(&tr, &v).unwrap();
                        if !c.side_conditions_hold() {
                            outside += 1;
                            continue;
                        }
                        let o = c.by_oracle(&mut table).unwrap();
                        let tp = c.by_trees().unwrap();
                        let ip = c.by_inductive().unwrap();
                        if tp != o || ip != o {
                            return Outcome::Fail(format!(
                                "{t}{n} {tr} v={v}: trees `{tp}`, induction `{ip}`, oracle `{o}`"
                            ));
                        }
                        checked += 1;
                    }
                }
            }
            total += checked;
            counts.push(format!("{t}≤{nmax}: {checked}"));
            if outside > 0 {
                counts.push(format!("({outside} outside the side conditions)"));
            }
        }
        Outcome::Pass(format!("{total} pairs agree [{}]", counts.join(" ")))
    });
}

fn invariants(report: &mut Report) {
    report.run("3.invariants", Duration::from_secs(120), || {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut summary = Vec::new();
        for t in LieType::ALL {
            let mut done = 0;
            let mut attempts = 0;
            while done < 1000 {
                attempts += 1;
                if attempts > 20_000 {
                    return Outcome::Fail(format!("{t}: could not draw 1000 cases"));
                }
                let n = rng.gen_range(if t == LieType::A { 1 } else { 2 }..=8);
                let Some((tr, v)) = random_case(t, n, true, &mut rng) else { continue };
                let c = Case::new(&tr, &v).unwrap();
                let p = c.by_trees().unwrap();
                let ip = c.by_inductive().unwrap();
                let what = if p.coeff(0) != BigInt::from(1) {
                    Some("constant term")
                } else if !p.is_nonnegative() {
                    Some("negative coefficient")
                } else if c.degree_bound().is_some_and(|b| p.degree().unwrap() > b) {
                    Some("degree bound")
                } else if ip != p {
                    Some("trees ≠ induction")
                } else {
                    None
                };
                if let Some(what) = what {
                    return Outcome::Fail(format!("{what}: {t}{n} {tr} v={v}: trees `{p}`, induction `{ip}`"));
                }
                done += 1;
            }
            summary.push(format!("{t}: {done}"));
        }
        Outcome::Pass(summary.join(", "))
    });
}

fn q_binomials(report: &mut Report) {
    report.run("4.q-binomials", Duration::from_secs(1), || {
        let mut checked = 0;
        for a in 0..=12i64 {
            let mut binom = BigInt::from(1);
            for b in 0..=a {
                if b > 0 {
                    binom = binom * (a - b + 1) / b;
                }
                let p = q_binomial(a, b);
                if p != q_binomial(a, a - b) {
                    return Outcome::Fail(format!("symmetry fails at [{a};{b}]"));
                }
                if p.eval(&BigInt::from(1)) != binom {
                    return Outcome::Fail(format!("q = 1 specialization fails at [{a};{b}]"));
                }
                if a > 0 && b > 0 && b < a {
                    let pascal = &q_binomial(a - 1, b - 1) + &q_binomial(a - 1, b).shift(b as usize);
                    if p != pascal {
                        return Outcome::Fail(format!("Pascal recurrence fails at [{a};{b}]"));
                    }
                }
                checked += 1;
            }
        }
        Outcome::Pass(format!("{checked} coefficients"))
    });
}

fn weyl(report: &mut Report) {
    report.run("5.weyl", Duration::from_secs(30), || {
        let mut pairs = 0usize;
        for t in LieType::ALL {
            for n in 1..=3 {
                let all = all_elements(t, n);
                let max = all.iter().map(|w| w.length().unwrap()).max().unwrap();
                let top = longest_element(t, n).unwrap();
                if max != t.positive_roots(n) || top.length().unwrap() != max {
                    return Outcome::Fail(format!("{t}{n}: longest length {max}, expected {}", t.positive_roots(n)));
                }
                let intervals: Vec<HashSet<WeylElement>> = all.iter().map(subword_interval).collect();
                let leq: Vec<Vec<bool>> =
                    all.iter().map(|u| all.iter().map(|w| bruhat_leq(u, w).unwrap()).collect()).collect();
                let m = all.len();
                for i in 0..m {
                    if !leq[i][i] {
                        return Outcome::Fail(format!("{t}{n}: not reflexive at {}", all[i]));
                    }
                    for j in 0..m {
                        pairs += 1;
                        if leq[i][j] != intervals[j].contains(&all[i]) {
                            return Outcome::Fail(format!("{t}{n}: {} ≤ {} disagrees with subwords", all[i], all[j]));
                        }
                        if i != j && leq[i][j] && leq[j][i] {
                            return Outcome::Fail(format!("{t}{n}: not antisymmetric"));
                        }
                        for k in 0..m {
                            if leq[i][j] && leq[j][k] && !leq[i][k] {
                                return Outcome::Fail(format!("{t}{n}: not transitive"));
                            }
                        }
                    }
                }
            }
        }
        Outcome::Pass(format!("{pairs} pairs"))
    });
}

fn oracle_sanity(report: &mut Report) {
    report.run("6.oracle-sanity", Duration::from_secs(1), || {
        let a = |s| WeylElement::parse(LieType::A, s).unwrap();
        let (x, w) = (a("1 2 3 4"), a("3 4 1 2"));
        let p = match KlTable::new(LieType::A, 4).and_then(|mut t| t.p(&x, &w)) {
            Ok(p) => p,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        let reference = RPolynomialKl::new(LieType::A, 4).p_column(&w)[&x].clone();
        if p == QPoly::from_i64s(&[1, 1]) && reference == p {
            Outcome::Pass(format!("P_{{1234,3412}} = `{p}` (R-polynomials: `{reference}`)"))
        } else {
            Outcome::Fail(format!("oracle `{p}`, R-polynomials `{reference}`"))
        }
    });
}

#[test]
fn acceptance() {
    emit(&format!("oracle budget: {}", budget_from_env()));
    let mut report = Report { lines: Vec::new() };
    goldens(&mut report);
    three_way(&mut report);
    invariants(&mut report);
    q_binomials(&mut report);
    weyl(&mut report);
    oracle_sanity(&mut report);

    let unexpected: Vec<&String> = report
        .lines
        .iter()
        .filter(|(id, status, _)| *status == "FAIL" && !KNOWN_FAILURES.iter().any(|(k, _)| k == id))
        .map(|(_, _, line)| line)
        .collect();
    let stale: Vec<&&str> = KNOWN_FAILURES
        .iter()
        .map(|(k, _)| k)
        .filter(|k| report.lines.iter().any(|(id, status, _)| id == *k && *status != "FAIL"))
        .collect();
    let counts = |s: &str| report.lines.iter().filter(|(_, status, _)| *status == s).count();
    emit(&format!(
        "summary: {} PASS, {} FAIL ({} known), {} SKIP",
        counts("PASS"),
        counts("FAIL"),
        KNOWN_FAILURES.len(),
        counts("SKIP")
    ));
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:#?}");
    assert!(stale.is_empty(), "known failures that now pass: {stale:?}");
}
