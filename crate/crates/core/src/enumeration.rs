//! Exhaustive path generation and brute-force distribution tables.

use std::fmt;
use std::str::FromStr;

use crate::count::{catalan, formula_ddu, formula_udu, motzkin, CountValue};
use crate::error::CountError;
use crate::path::{Family, LatticePath, Step};

pub const DEFAULT_CAP: u64 = 10_000_000;

/// Number of paths of the family and size.
pub fn family_count(family: Family, n: usize) -> Result<CountValue, CountError> {
    match family {
        Family::Dyck => catalan(n),
        Family::Motzkin => motzkin(n),
        Family::BicoloredMotzkin => catalan(n + 1),
    }
}

/// Every path of the family and size, in lexicographic order of the rendered
/// string with `U < D < F < G`.
pub fn generate_paths(family: Family, n: usize) -> Result<PathGenerator, CountError> {
    generate_paths_capped(family, n, DEFAULT_CAP)
}

pub fn generate_paths_capped(
    family: Family,
    n: usize,
    cap: u64,
) -> Result<PathGenerator, CountError> {
    let count = family_count(family, n).map_err(|_| CountError::SizeTooLarge {
        family,
        n,
        count: "more than 2^128".into(),
        cap,
    })?;
    if count.get() > cap as u128 {
        return Err(CountError::SizeTooLarge {
            family,
            n,
            count: count.to_string(),
            cap,
        });
    }
    Ok(PathGenerator::new(family, n))
}

/// Depth-first generator over prefixes that can still be completed.
///
/// A prefix at height `h` with `r` steps left is completable iff `h <= r`
/// (and `h` has the parity of `r` for Dyck paths, which holds automatically
/// when only `U` and `D` are used).
#[derive(Debug, Clone)]
pub struct PathGenerator {
    family: Family,
    choices: Vec<Step>,
    steps: Vec<Step>,
    /// heights[i] is the height before steps[i].
    heights: Vec<i64>,
    started: bool,
    done: bool,
}

impl PathGenerator {
    fn new(family: Family, n: usize) -> Self {
        let len = family.step_len(n);
        let choices = Step::ALL
            .into_iter()
            .filter(|&s| family.allows(s))
            .collect();
        PathGenerator {
            family,
            choices,
            steps: Vec::with_capacity(len),
            heights: vec![0; len + 1],
            started: false,
            done: false,
        }
    }

    fn len(&self) -> usize {
        self.heights.len() - 1
    }

    fn allowed(&self, pos: usize, step: Step) -> bool {
        let h = self.heights[pos];
        let remaining_after = (self.len() - pos - 1) as i64;
        let next = h + step.delta();
        next >= 0 && next <= remaining_after
    }

    /// Fills positions `steps.len()..` with the smallest allowed steps.
    fn fill_min(&mut self) {
        while self.steps.len() < self.len() {
            let pos = self.steps.len();
            let step = *self
                .choices
                .iter()
                .find(|&&s| self.allowed(pos, s))
                .expect("a completable prefix always has a completable extension");
            self.heights[pos + 1] = self.heights[pos] + step.delta();
            self.steps.push(step);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(cur) = self.steps.pop() {
            let pos = self.steps.len();
            let next = self
                .choices
                .iter()
                .copied()
                .filter(|&s| s > cur)
                .find(|&s| self.allowed(pos, s));
            if let Some(step) = next {
                self.heights[pos + 1] = self.heights[pos] + step.delta();
                self.steps.push(step);
                self.fill_min();
                return true;
            }
        }
        false
    }
}

impl Iterator for PathGenerator {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_min();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(LatticePath::from_trusted(self.steps.clone(), self.family))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Udu,
    Ddu,
}

impl Statistic {
    pub fn name(self) -> &'static str {
        match self {
            Statistic::Udu => "udu",
            Statistic::Ddu => "ddu",
        }
    }

    pub fn of(self, path: &LatticePath) -> usize {
        let st = path.statistics();
        match self {
            Statistic::Udu => st.udu_count,
            Statistic::Ddu => st.ddu_count,
        }
    }

    /// Closed-form count of Dyck n-paths with statistic value `k`, zero
    /// when `k` is outside the formula's range.
    pub fn formula(self, n: usize, k: usize) -> Result<CountValue, CountError> {
        let r = match self {
            Statistic::Udu => formula_udu(n, k),
            Statistic::Ddu => formula_ddu(n, k),
        };
        match r {
            Err(CountError::KOutOfRange { .. }) => Ok(CountValue::ZERO),
            other => other,
        }
    }

    /// Largest `k` the formula is defined for at size `n >= 1`.
    pub fn max_k(self, n: usize) -> usize {
        match self {
            Statistic::Udu => n - 1,
            Statistic::Ddu => (n - 1) / 2,
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "udu" => Ok(Statistic::Udu),
            "ddu" => Ok(Statistic::Ddu),
            other => Err(format!("unknown statistic {other:?} (expected udu or ddu)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistributionRow {
    pub n: usize,
    pub k: usize,
    pub brute: CountValue,
    pub formula: CountValue,
}

impl DistributionRow {
    pub fn ok(&self) -> bool {
        self.brute == self.formula
    }
}

/// Brute-force and closed-form counts of Dyck n-paths by statistic value.
/// Covers every `k` where either side is nonzero. Requires `n >= 1`.
pub fn distribution_table(
    stat: Statistic,
    n: usize,
    cap: u64,
) -> Result<Vec<DistributionRow>, CountError> {
    if n == 0 {
        return Err(CountError::SizeOutOfRange(0));
    }
    let mut brute: Vec<u64> = Vec::new();
    for path in generate_paths_capped(Family::Dyck, n, cap)? {
        let k = stat.of(&path);
        if brute.len() <= k {
            brute.resize(k + 1, 0);
        }
        brute[k] += 1;
    }
    let top = brute.len().max(stat.max_k(n) + 1);
    let mut rows = Vec::with_capacity(top);
    for k in 0..top {
        let b = CountValue::from(brute.get(k).copied().unwrap_or(0));
        let f = stat.formula(n, k)?;
        if b != CountValue::ZERO || f != CountValue::ZERO {
            rows.push(DistributionRow {
                n,
                k,
                brute: b,
                formula: f,
            });
        }
    }
    Ok(rows)
}

pub const TSV_HEADER: &str = "n\tk\tbrute\tformula\tok";

pub fn rows_to_tsv(rows: &[DistributionRow]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.n,
            r.k,
            r.brute,
            r.formula,
            r.ok()
        ));
    }
    out
}

fn count_dyck_where(
    n: usize,
    cap: u64,
    pred: impl Fn(&LatticePath) -> bool,
) -> Result<CountValue, CountError> {
    let c = generate_paths_capped(Family::Dyck, n, cap)?
        .filter(|p| pred(p))
        .count();
    Ok(CountValue::from(c))
}

/// Brute-force count of UUU-free Dyck n-paths.
pub fn count_uuu_free(n: usize, cap: u64) -> Result<CountValue, CountError> {
    count_dyck_where(n, cap, |p| p.statistics().uuu_count == 0)
}

/// Brute-force count of Dyck n-paths with no descent of length one.
pub fn count_no_short_descent(n: usize, cap: u64) -> Result<CountValue, CountError> {
    count_dyck_where(n, cap, |p| p.statistics().short_descent_count == 0)
}

/// Brute-force count of Motzkin n-paths with no flat at ground level.
pub fn count_no_ground_flat(n: usize, cap: u64) -> Result<CountValue, CountError> {
    let c = generate_paths_capped(Family::Motzkin, n, cap)?
        .filter(|p| p.statistics().ground_flat_count == 0)
        .count();
    Ok(CountValue::from(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(family: Family, n: usize) -> Vec<String> {
        generate_paths(family, n)
            .unwrap()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn small_listings() {
        assert_eq!(strings(Family::Dyck, 0), [""]);
        assert_eq!(
            strings(Family::Dyck, 3),
            ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]
        );
        assert_eq!(
            strings(Family::Motzkin, 4),
            ["UUDD", "UDUD", "UDFF", "UFDF", "UFFD", "FUDF", "FUFD", "FFUD", "FFFF"]
        );
        assert_eq!(strings(Family::BicoloredMotzkin, 2), ["UD", "FF", "FG", "GF", "GG"]);
        assert_eq!(strings(Family::Motzkin, 1), ["F"]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            generate_paths_capped(Family::Dyck, 4, 13),
            Err(CountError::SizeTooLarge { .. })
        ));
        assert_eq!(generate_paths_capped(Family::Dyck, 4, 14).unwrap().count(), 14);
        assert!(generate_paths(Family::Dyck, 40).is_err());
    }

    #[test]
    fn tables() {
        let rows = distribution_table(Statistic::Udu, 4, DEFAULT_CAP).unwrap();
        let got: Vec<_> = rows.iter().map(|r| (r.k, r.brute.get(), r.formula.get())).collect();
        assert_eq!(got, [(0, 4, 4), (1, 6, 6), (2, 3, 3), (3, 1, 1)]);

        let rows = distribution_table(Statistic::Ddu, 4, DEFAULT_CAP).unwrap();
        let got: Vec<_> = rows.iter().map(|r| (r.k, r.brute.get(), r.formula.get())).collect();
        assert_eq!(got, [(0, 8, 8), (1, 6, 6)]);

        let rows = distribution_table(Statistic::Udu, 1, DEFAULT_CAP).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].k, rows[0].brute.get()), (0, 1));

        assert_eq!(
            distribution_table(Statistic::Udu, 0, DEFAULT_CAP),
            Err(CountError::SizeOutOfRange(0))
        );
    }

    #[test]
    fn tsv_layout() {
        let rows = distribution_table(Statistic::Ddu, 3, DEFAULT_CAP).unwrap();
        assert_eq!(
            rows_to_tsv(&rows),
            "n\tk\tbrute\tformula\tok\n3\t0\t4\t4\ttrue\n3\t1\t1\t1\ttrue\n"
        );
    }

    #[test]
    fn brute_counts() {
        assert_eq!(count_uuu_free(0, DEFAULT_CAP).unwrap().get(), 1);
        assert_eq!(count_uuu_free(3, DEFAULT_CAP).unwrap().get(), 4);
        assert_eq!(count_uuu_free(5, DEFAULT_CAP).unwrap().get(), 21);
        let riordan: Vec<u128> = (0..6)
            .map(|n| count_no_ground_flat(n, DEFAULT_CAP).unwrap().get())
            .collect();
        assert_eq!(riordan, [1, 0, 1, 1, 3, 6]);
    }
}
