//! Catalog-wide verification of the solubilizer identities.

use clap::ValueEnum;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::json;

use solv_lab::catalog::CatalogEntry;
use solv_lab::solubilizer::properties::check_record;
use solv_lab::solubilizer::{
    abelian_kernel_check, eq1_check, lemma32_residual, lemma_exp_bound, pq_verdict, quotient_sol_check,
    sol_record_cached, soluble_radical, SolubilityCache, SolubilizerRecord,
};
use solv_lab::subgroups::{center, conjugacy_class_reps};
use solv_lab::{PermGroup, Permutation, Result};

use crate::report::{Item, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    Conjecture,
    Lemma32,
    Eq1,
    Ratio34,
    Pq,
    LemmaSol,
    ExpBound,
    Quotient,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Conjecture => "conjecture",
            Check::Lemma32 => "lemma32",
            Check::Eq1 => "eq1",
            Check::Ratio34 => "ratio34",
            Check::Pq => "pq",
            Check::LemmaSol => "lemma_sol",
            Check::ExpBound => "exp_bound",
            Check::Quotient => "quotient",
        }
    }
}

struct GroupContext<'a> {
    entry: &'a CatalogEntry,
    cache: SolubilityCache,
    radical: Option<PermGroup>,
    center: Option<PermGroup>,
}

/// Verdict of one check, with a detail line on failure.
type CheckResult = (Check, bool, Option<String>);

struct Outcome {
    item: Item,
    failures: Vec<String>,
    sol: Vec<String>,
}

fn evaluate(
    ctx: &GroupContext<'_>,
    x: &Permutation,
    checks: &[Check],
    cap: usize,
) -> Result<(SolubilizerRecord, Vec<CheckResult>)> {
    let g = &ctx.entry.group;
    let rec = sol_record_cached(g, x, cap, &ctx.cache)?;
    let mut results = Vec::new();
    for &check in checks {
        let verdict: Option<(bool, Option<String>)> = match check {
            Check::Conjecture => Some((rec.conjecture_ok, None)),
            Check::Ratio34 => Some((rec.ratio34_integral(), None)),
            Check::Lemma32 => {
                let rc = lemma32_residual(g, &rec, &rec.c_x, cap, &ctx.cache)?;
                let rn = lemma32_residual(g, &rec, &rec.n_x, cap, &ctx.cache)?;
                let ok = rc.is_zero() && rn.is_zero();
                Some((ok, (!ok).then(|| format!("residuals C_x {rc}, N_x {rn}"))))
            }
            Check::Eq1 if ctx.entry.soluble => {
                let rc = eq1_check(g, x, &rec.c_x, cap)?;
                let rn = eq1_check(g, x, &rec.n_x, cap)?;
                let mut ok = rc.is_zero() && rn.is_zero();
                let mut detail = (!ok).then(|| format!("residuals C_x {rc}, N_x {rn}"));
                if let Some(k) = abelian_kernel_check(g, x, cap)? {
                    if !k.holds() {
                        ok = false;
                        detail = Some(format!("abelian kernel: direct {} vs formula {}", k.direct, k.formula));
                    }
                }
                Some((ok, detail))
            }
            Check::Pq if !ctx.entry.soluble && !x.is_identity() => {
                let mut problems = pq_verdict(&rec).map(|v| v.violations).unwrap_or_default();
                if rec.sol_size == 6 && problems.is_empty() {
                    problems.push("|Sol| = 6".into());
                }
                Some((problems.is_empty(), (!problems.is_empty()).then(|| problems.join("; "))))
            }
            Check::LemmaSol => {
                let mut problems = check_record(g, &rec, cap, &ctx.cache)?;
                let radical = ctx.radical.as_ref().expect("radical computed for lemma checks");
                if (rec.sol_size as u128 == g.order()) != radical.contains(x) {
                    problems.push("Sol = G disagrees with membership in the soluble radical".into());
                }
                Some((problems.is_empty(), (!problems.is_empty()).then(|| problems.join("; "))))
            }
            Check::ExpBound if rec.n_x.order() != g.order() => {
                let b = lemma_exp_bound(g, &rec, cap)?;
                Some((b.ok, (!b.ok).then(|| format!("exp_ell {}", b.exp_ell))))
            }
            Check::Quotient => match &ctx.center {
                Some(z) => {
                    let ok = quotient_sol_check(g, z, x, cap)?;
                    Some((ok, None))
                }
                None => None,
            },
            _ => None,
        };
        if let Some((ok, detail)) = verdict {
            results.push((check, ok, detail));
        }
    }
    Ok((rec, results))
}

fn run_unit(ctx: &GroupContext<'_>, x: &Permutation, checks: &[Check], cap: usize) -> Outcome {
    match evaluate(ctx, x, checks, cap) {
        Ok((rec, results)) => {
            let mut item = Item::from_record(&ctx.entry.name, &rec);
            let mut failures = Vec::new();
            for (check, ok, detail) in results {
                item.flags.insert(check.name().to_string(), ok);
                if !ok {
                    failures.push(match detail {
                        Some(d) => format!("{}: {d}", check.name()),
                        None => check.name().to_string(),
                    });
                }
            }
            let sol = if failures.is_empty() {
                Vec::new()
            } else {
                rec.sol.iter().map(ToString::to_string).collect()
            };
            Outcome { item, failures, sol }
        }
        Err(e) => Outcome {
            item: Item {
                group: ctx.entry.name.clone(),
                element: x.to_string(),
                sol_size: 0,
                nx_order: 0,
                cx_order: 0,
                ell_cx: 0,
                ell_nx: 0,
                ratio34: "0/1".into(),
                structure: None,
                flags: Default::default(),
            },
            failures: vec![format!("engine error: {e}")],
            sol: Vec::new(),
        },
    }
}

pub fn verify(catalog: &[CatalogEntry], checks: &[Check], cap: usize, params: serde_json::Value) -> Report<Item> {
    let mut report = Report::new("verify", params);
    let mut contexts = Vec::new();
    for entry in catalog {
        if entry.group.order() > cap as u128 {
            report.summary.skipped += 1;
            report.notes.push(format!(
                "{} skipped: order {} exceeds cap {cap}",
                entry.name,
                entry.group.order()
            ));
            continue;
        }
        contexts.push(entry);
    }
    let prepared: Vec<(GroupContext<'_>, Vec<Permutation>)> = contexts
        .par_iter()
        .map(|entry| {
            let g = &entry.group;
            let radical = checks
                .contains(&Check::LemmaSol)
                .then(|| soluble_radical(g, cap).expect("order within cap"));
            let center = checks
                .contains(&Check::Quotient)
                .then(|| center(g, cap).expect("order within cap"))
                .filter(|z| !z.is_trivial());
            let reps = conjugacy_class_reps(g, cap).expect("order within cap");
            (
                GroupContext {
                    entry,
                    cache: SolubilityCache::new(),
                    radical,
                    center,
                },
                reps,
            )
        })
        .collect();
    let units: Vec<(&GroupContext<'_>, &Permutation)> = prepared
        .iter()
        .flat_map(|(ctx, reps)| reps.iter().map(move |x| (ctx, x)))
        .collect();
    let outcomes: Vec<Outcome> = units.par_iter().map(|(ctx, x)| run_unit(ctx, x, checks, cap)).collect();
    for outcome in outcomes {
        report.summary.checked += 1;
        if !outcome.failures.is_empty() {
            report.summary.failed += 1;
            report.counterexamples.push(json!({
                "group": outcome.item.group,
                "element": outcome.item.element,
                "failed_checks": outcome.failures,
                "record": outcome.item,
                "sol": outcome.sol,
            }));
        }
        report.items.push(outcome.item);
    }
    report
}
