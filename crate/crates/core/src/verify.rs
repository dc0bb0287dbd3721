//! Exhaustive checks of every bijection and counting claim up to a size
//! bound. Each check runs its sizes in parallel and reports in a fixed order.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bijections::{
    riordan_to_no_short_descent, restrict_motzkin_to_udu_free, std_bijection,
    std_bijection_inverse, t1_forward, t1_inverse, t2_forward, t2_forward_with_flat_order,
    t2_inverse,
};
use crate::count::{catalan, motzkin, riordan, CountValue};
use crate::enumeration::{
    count_no_ground_flat, count_no_short_descent, count_uuu_free, distribution_table,
    family_count, generate_paths_capped, Statistic,
};
use crate::path::{
    associated_downstep, matching_downstep, parse_path, Family, LatticePath, Step, StepIndex,
};

pub type CheckResult = Result<(), String>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub max_n: usize,
    pub result: CheckResult,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }

    pub fn line(&self) -> String {
        match &self.result {
            Ok(()) => format!("PASS\t{}\tn<={}", self.name, self.max_n),
            Err(e) => format!("FAIL\t{}\tn<={}\t{}", self.name, self.max_n, e),
        }
    }
}

type CheckFn = fn(usize, u64) -> CheckResult;

/// `(name, check)` in report order.
pub const CHECKS: &[(&str, CheckFn)] = &[
    ("generator_counts", check_generator_counts),
    ("generator_order", check_generator_order),
    ("parse_render_roundtrip", check_parse_render),
    ("height_invariant", check_heights),
    ("udu_free_iff_no_short_nonterminal_descent", check_udu_short_descent),
    ("matching_pairs_noncrossing", check_matching),
    ("ground_flat_associated_to_appended", check_ground_flats),
    ("uuu_free_count_is_motzkin", check_uuu_free_count),
    ("t1_bijection", check_t1),
    ("std_bijection", check_std),
    ("t2_bijection", check_t2),
    ("t2_statistic_transport", check_t2_transport),
    ("t2_order_independence", check_order_independence),
    ("udu_distribution", check_udu_distribution),
    ("ddu_distribution", check_ddu_distribution),
    ("motzkin_to_udu_free_restriction", check_restriction),
    ("ground_flat_iff_not_ending_ud", check_ground_flat_ending),
    ("riordan_counts", check_riordan_counts),
    ("riordan_to_no_short_descent", check_riordan_map),
];

pub fn run_all(max_n: usize, cap: u64) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|&(name, f)| CheckOutcome {
            name,
            max_n,
            result: f(max_n, cap),
        })
        .collect()
}

/// Runs `f` for every n in `0..=max_n` in parallel; reports the smallest
/// failing n.
fn for_each_n(max_n: usize, f: impl Fn(usize) -> CheckResult + Sync + Send) -> CheckResult {
    let results: Vec<CheckResult> = (0..=max_n).into_par_iter().map(f).collect();
    results.into_iter().collect()
}

fn paths(family: Family, n: usize, cap: u64) -> Result<Vec<LatticePath>, String> {
    generate_paths_capped(family, n, cap)
        .map(|g| g.collect())
        .map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn count_of(v: Result<CountValue, impl ToString>) -> Result<u128, String> {
    v.map(|c| c.get()).map_err(|e| e.to_string())
}

fn check_generator_counts(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        for fam in [Family::Dyck, Family::Motzkin, Family::BicoloredMotzkin] {
            let got = paths(fam, n, cap)?.len() as u128;
            let want = count_of(family_count(fam, n))?;
            ensure(got == want, || format!("{fam} n={n}: generated {got}, expected {want}"))?;
        }
        Ok(())
    })
}

fn check_generator_order(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        for fam in [Family::Dyck, Family::Motzkin, Family::BicoloredMotzkin] {
            let ps = paths(fam, n, cap)?;
            for w in ps.windows(2) {
                ensure(w[0].steps() < w[1].steps(), || {
                    format!("{fam} n={n}: {} not before {}", w[0], w[1])
                })?;
            }
        }
        Ok(())
    })
}

fn check_parse_render(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        for fam in [Family::Dyck, Family::Motzkin, Family::BicoloredMotzkin] {
            for p in paths(fam, n, cap)? {
                let text = p.to_string();
                let back = parse_path(&text, fam).map_err(|e| format!("{text}: {e}"))?;
                ensure(back == p && back.to_string() == text, || format!("{text} did not round-trip"))?;
            }
        }
        Ok(())
    })
}

fn check_heights(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        for fam in [Family::Dyck, Family::Motzkin, Family::BicoloredMotzkin] {
            for p in paths(fam, n, cap)? {
                let hs = p.heights();
                ensure(hs.iter().all(|&h| h >= 0) && hs.last() == Some(&0), || {
                    format!("{p}: bad heights {hs:?}")
                })?;
            }
        }
        Ok(())
    })
}

fn check_udu_short_descent(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        for p in paths(Family::Dyck, n, cap)? {
            let s = p.statistics();
            ensure(
                (s.udu_count == 0) == (s.short_nonterminal_descent_count == 0),
                || format!("{p}: udu={} short nonterminal descents={}", s.udu_count, s.short_nonterminal_descent_count),
            )?;
        }
        Ok(())
    })
}

fn check_matching(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        for fam in [Family::Dyck, Family::Motzkin] {
            for p in paths(fam, n, cap)? {
                let mut pairs = Vec::new();
                for (i, &s) in p.steps().iter().enumerate() {
                    if s == Step::Up {
                        let j = matching_downstep(&p, i).map_err(|e| e.to_string())?;
                        ensure(j > i && p.steps()[j] == Step::Down, || format!("{p}: bad match {i}->{j}"))?;
                        pairs.push((i, j));
                    }
                }
                let downs: HashSet<usize> = pairs.iter().map(|&(_, j)| j).collect();
                let total_downs = p.steps().iter().filter(|&&s| s == Step::Down).count();
                ensure(downs.len() == pairs.len() && downs.len() == total_downs, || {
                    format!("{p}: matching is not a bijection onto downsteps")
                })?;
                for &(a, b) in &pairs {
                    for &(c, d) in &pairs {
                        let crossing = a < c && c < b && b < d;
                        ensure(!crossing, || format!("{p}: pairs ({a},{b}) and ({c},{d}) cross"))?;
                    }
                }
            }
        }
        Ok(())
    })
}

fn check_ground_flats(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        for p in paths(Family::BicoloredMotzkin, n, cap)? {
            let hs = p.heights();
            for (i, &s) in p.steps().iter().enumerate() {
                if s.is_flat() {
                    let a = associated_downstep(&p, i).map_err(|e| e.to_string())?;
                    ensure((hs[i] == 0) == (a == StepIndex::AppendedDown), || {
                        format!("{p}: flat {i} at height {} associated to {a:?}", hs[i])
                    })?;
                    if let StepIndex::At(j) = a {
                        ensure(p.steps()[j] == Step::Down && hs[j] == hs[i], || {
                            format!("{p}: flat {i} associated to non-matching step {j}")
                        })?;
                    }
                }
            }
        }
        Ok(())
    })
}

fn check_uuu_free_count(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        let got = count_of(count_uuu_free(n, cap))?;
        let want = count_of(motzkin(n))?;
        ensure(got == want, || format!("n={n}: {got} UUU-free Dyck paths, M_n = {want}"))
    })
}

/// Checks that `forward` maps `domain` injectively onto `codomain` and that
/// `inverse` undoes it on both sides.
fn check_bijection(
    label: &str,
    domain: &[LatticePath],
    codomain: &[LatticePath],
    forward: impl Fn(&LatticePath) -> Result<LatticePath, String>,
    inverse: impl Fn(&LatticePath) -> Result<LatticePath, String>,
) -> CheckResult {
    let mut image = HashSet::with_capacity(domain.len());
    for p in domain {
        let q = forward(p)?;
        let back = inverse(&q)?;
        ensure(&back == p, || format!("{label}: {p} -> {q} -> {back}"))?;
        ensure(image.insert(q.clone()), || format!("{label}: {q} hit twice"))?;
    }
    let target: HashSet<&LatticePath> = codomain.iter().collect();
    ensure(image.len() == target.len() && image.iter().all(|q| target.contains(q)), || {
        format!("{label}: image has {} paths, codomain {}", image.len(), target.len())
    })?;
    for d in codomain {
        let m = inverse(d)?;
        let again = forward(&m)?;
        ensure(&again == d, || format!("{label}: {d} -> {m} -> {again}"))?;
    }
    Ok(())
}

fn check_t1(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        let domain: Vec<_> = paths(Family::Dyck, n, cap)?
            .into_iter()
            .filter(|p| p.statistics().uuu_count == 0)
            .collect();
        let codomain = paths(Family::Motzkin, n, cap)?;
        check_bijection(
            &format!("t1 n={n}"),
            &domain,
            &codomain,
            |p| t1_forward(p).map_err(|e| e.to_string()),
            |p| t1_inverse(p).map_err(|e| e.to_string()),
        )
    })
}

fn check_std(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        check_bijection(
            &format!("std n={n}"),
            &paths(Family::BicoloredMotzkin, n, cap)?,
            &paths(Family::Dyck, n + 1, cap)?,
            |p| std_bijection(p).map_err(|e| e.to_string()),
            |p| std_bijection_inverse(p).map_err(|e| e.to_string()),
        )
    })
}

fn check_t2(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        check_bijection(
            &format!("t2 n={n}"),
            &paths(Family::BicoloredMotzkin, n, cap)?,
            &paths(Family::Dyck, n + 1, cap)?,
            |p| t2_forward(p).map_err(|e| e.to_string()),
            |p| t2_inverse(p).map_err(|e| e.to_string()),
        )
    })
}

fn check_t2_transport(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        for m in paths(Family::BicoloredMotzkin, n, cap)? {
            let d = t2_forward(&m).map_err(|e| e.to_string())?;
            let (a, b) = (m.statistics(), d.statistics());
            ensure(d.size() == n + 1, || format!("{m} -> {d}: wrong size"))?;
            ensure(b.udu_count == a.green_flat_count && b.ddu_count == a.down_count, || {
                format!(
                    "{m} -> {d}: udu {} vs green {}, ddu {} vs downs {}",
                    b.udu_count, a.green_flat_count, b.ddu_count, a.down_count
                )
            })?;
        }
        Ok(())
    })
}

/// Every rotation and the reversal of the black-flat list, compared with the
/// single-pass map.
fn check_order_independence(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        for m in paths(Family::BicoloredMotzkin, n, cap)? {
            let expected = t2_forward(&m).map_err(|e| e.to_string())?;
            let flats: Vec<usize> = (0..m.len()).filter(|&i| m.steps()[i] == Step::FlatBlack).collect();
            let mut orders = Vec::new();
            for r in 0..flats.len().max(1) {
                let mut o = flats.clone();
                o.rotate_left(r);
                orders.push(o.clone());
                o.reverse();
                orders.push(o);
            }
            for o in orders {
                let got = t2_forward_with_flat_order(&m, &o).map_err(|e| e.to_string())?;
                ensure(got == expected, || format!("{m}: order {o:?} gives {got}, not {expected}"))?;
            }
        }
        Ok(())
    })
}

fn check_distribution(stat: Statistic, max_n: usize, cap: u64) -> CheckResult {
    // The closed forms need n >= 1.
    for_each_n(max_n, |n| {
        if n == 0 {
            return Ok(());
        }
        let rows = distribution_table(stat, n, cap).map_err(|e| e.to_string())?;
        for r in &rows {
            ensure(r.ok(), || format!("{stat} n={n} k={}: brute {} formula {}", r.k, r.brute, r.formula))?;
        }
        let total: u128 = rows.iter().map(|r| r.brute.get()).sum();
        let formula_total: u128 = rows.iter().map(|r| r.formula.get()).sum();
        let c = count_of(catalan(n))?;
        ensure(total == c && formula_total == c, || {
            format!("{stat} n={n}: rows sum to {total}/{formula_total}, C_n = {c}")
        })
    })
}

fn check_udu_distribution(max_n: usize, cap: u64) -> CheckResult {
    check_distribution(Statistic::Udu, max_n, cap)
}

fn check_ddu_distribution(max_n: usize, cap: u64) -> CheckResult {
    check_distribution(Statistic::Ddu, max_n, cap)
}

fn check_restriction(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        let mut image = HashSet::new();
        for m in paths(Family::Motzkin, n, cap)? {
            let d = restrict_motzkin_to_udu_free(&m).map_err(|e| e.to_string())?;
            image.insert(d);
        }
        let target: HashSet<LatticePath> = paths(Family::Dyck, n + 1, cap)?
            .into_iter()
            .filter(|d| d.statistics().udu_count == 0)
            .collect();
        ensure(image == target, || {
            format!("n={n}: image has {} paths, {} UDU-free Dyck paths", image.len(), target.len())
        })
    })
}

fn check_ground_flat_ending(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        for m in paths(Family::Motzkin, n, cap)? {
            let d = restrict_motzkin_to_udu_free(&m).map_err(|e| e.to_string())?;
            let no_ground = m.statistics().ground_flat_count == 0;
            let ends_ud = d.steps().ends_with(&[Step::Up, Step::Down]);
            ensure(no_ground == ends_ud, || format!("{m} -> {d}"))?;
        }
        Ok(())
    })
}

fn check_riordan_counts(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        let r = count_of(riordan(n))?;
        let a = count_of(count_no_short_descent(n, cap))?;
        let b = count_of(count_no_ground_flat(n, cap))?;
        ensure(a == r && b == r, || {
            format!("n={n}: {a} Dyck paths without short descents, {b} Motzkin paths without ground flats, R_n = {r}")
        })
    })
}

fn check_riordan_map(max_n: usize, cap: u64) -> CheckResult {
    for_each_n(max_n, |n| {
        let domain: Vec<_> = paths(Family::Motzkin, n, cap)?
            .into_iter()
            .filter(|m| m.statistics().ground_flat_count == 0)
            .collect();
        let codomain: Vec<_> = paths(Family::Dyck, n, cap)?
            .into_iter()
            .filter(|d| d.statistics().short_descent_count == 0)
            .collect();
        check_bijection(
            &format!("riordan n={n}"),
            &domain,
            &codomain,
            |p| riordan_to_no_short_descent(p).map_err(|e| e.to_string()),
            |p| crate::bijections::no_short_descent_to_riordan(p).map_err(|e| e.to_string()),
        )
    })
}
