//! `crosscheck`: every valid `(τ, v)` up to a rank (or a seeded random
//! sample), checked in parallel.
//!
//! Where 𝔥(τ) meets the side conditions all three methods must agree.
//! Outside them the merging recursion does not apply; in types A, B and C
//! trees are still compared with the oracle, in type D such cases are
//! counted as skipped.

use std::collections::HashMap;

use covex_kl::oracle::KlTable;
use covex_kl::pipeline::{oracle_type, Case};
use covex_kl::sample::{all_triples, elements_above, random_case};
use covex_kl::triples::{vexillary_from_triple, Triple};
use covex_kl::weyl::{LieType, WeylElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{CliError, CrosscheckArgs};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    ThreeWay,
    TreesOracle,
    Skipped,
}

struct Checked {
    index: usize,
    n: usize,
    kind: Kind,
    mismatch: Option<String>,
}

fn check(index: usize, triple: &Triple, v: &WeylElement, tables: &mut HashMap<usize, KlTable>) -> Checked {
    let n = triple.n;
    let t = triple.lie_type;
    let describe = |what: String| format!("{t}{n} τ = {triple}, v = {v}: {what}");
    let case = match Case::new(triple, v) {
        Ok(c) => c,
        Err(e) => return Checked { index, n, kind: Kind::ThreeWay, mismatch: Some(describe(e.to_string())) },
    };
    let kind = if case.side_conditions_hold() {
        Kind::ThreeWay
    } else if t == LieType::D {
        return Checked { index, n, kind: Kind::Skipped, mismatch: None };
    } else {
        Kind::TreesOracle
    };
    let table = tables
        .entry(n)
        .or_insert_with(|| KlTable::with_budget(oracle_type(t), n, u128::MAX).expect("rank checked up front"));
    let result = (|| {
        let o = case.by_oracle(table)?;
        let tp = case.by_trees()?;
        let ip = if kind == Kind::ThreeWay { Some(case.by_inductive()?) } else { None };
        Ok::<_, covex_kl::pipeline::PipelineError>((o, tp, ip))
    })();
    let mismatch = match result {
        Err(e) => Some(describe(e.to_string())),
        Ok((o, tp, ip)) => {
            let bad = tp != o || ip.as_ref().is_some_and(|ip| *ip != o);
            bad.then(|| {
                let ip = ip.map_or("n/a".to_string(), |p| format!("`{p}`"));
                describe(format!("trees `{tp}`, inductive {ip}, oracle `{o}`"))
            })
        }
    };
    Checked { index, n, kind, mismatch }
}

fn enumerate(t: LieType, n_max: usize, limit: usize) -> Vec<(Triple, WeylElement)> {
    let mut cases = Vec::new();
    'outer: for n in 1..=n_max {
        for triple in all_triples(t, n) {
            let w = vexillary_from_triple(&triple).expect("enumerated triples are valid");
            for v in elements_above(&w) {
                if cases.len() >= limit {
                    break 'outer;
                }
                cases.push((triple.clone(), v));
            }
        }
    }
    cases
}

fn sample(t: LieType, n_max: usize, count: usize, seed: u64) -> Vec<(Triple, WeylElement)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lo = if t == LieType::A { 1 } else { 2 }.min(n_max);
    let mut cases = Vec::with_capacity(count);
    let mut misses = 0;
    while cases.len() < count && misses < 100 * count.max(1) {
        let n = rng.gen_range(lo..=n_max);
        match random_case(t, n, true, &mut rng) {
            Some(c) => cases.push(c),
            None => misses += 1,
        }
    }
    cases
}

pub fn run(args: &CrosscheckArgs, oracle_budget: u128) -> Result<(), CliError> {
    let t = args.lie_type;
    if args.n_max == 0 {
        return Err(CliError::Validation("--n-max must be at least 1".into()));
    }
    let limit = args.budget.unwrap_or(usize::MAX);
    let mode = match args.random {
        Some(count) => format!("{count} random cases, seed {}", args.seed),
        None => "exhaustive".to_string(),
    };
    out!("crosscheck type {t}, n = 1..={} ({mode})", args.n_max);
    if limit == 0 {
        out!("case budget 0: nothing checked");
        return Ok(());
    }
    let gt = oracle_type(t);
    if let Some(n) = (1..=args.n_max).find(|&n| gt.group_order(n) > oracle_budget) {
        return Err(CliError::Budget(format!(
            "group {gt}{n} has order {}, above the oracle budget {oracle_budget}; lower --n-max or raise COVEX_KL_BUDGET",
            gt.group_order(n)
        )));
    }
    let cases = match args.random {
        Some(count) => sample(t, args.n_max, count.min(limit), args.seed),
        None => enumerate(t, args.n_max, limit),
    };
    let mut results: Vec<Checked> = cases
        .par_iter()
        .enumerate()
        .map_init(HashMap::new, |tables, (i, (triple, v))| check(i, triple, v, tables))
        .collect();
    results.sort_by_key(|r| r.index);

    let mut total = [0usize; 3];
    for n in 1..=args.n_max {
        let mut counts = [0usize; 3];
        for r in results.iter().filter(|r| r.n == n) {
            counts[r.kind as usize] += 1;
        }
        if counts.iter().sum::<usize>() == 0 {
            continue;
        }
        out!(
            "n={n}: {} cases ({} three-way, {} trees/oracle, {} skipped)",
            counts.iter().sum::<usize>(),
            counts[0],
            counts[1],
            counts[2]
        );
        for (tot, c) in total.iter_mut().zip(counts) {
            *tot += c;
        }
    }
    if args.budget.is_some_and(|b| results.len() >= b) {
        out!("stopped at the case budget of {limit}");
    }
    let mismatches: Vec<&Checked> = results.iter().filter(|r| r.mismatch.is_some()).collect();
    let checked = total[0] + total[1];
    if let Some(first) = mismatches.first() {
        out!("{} of {checked} checked cases disagree", mismatches.len());
        out!("first: {}", first.mismatch.as_deref().unwrap_or_default());
        return Err(CliError::Mismatch(format!("{} disagreement(s)", mismatches.len())));
    }
    out!("all {checked} checked cases agree ({} skipped)", total[2]);
    Ok(())
}
