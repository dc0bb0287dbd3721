//! Steps, validated path families, text I/O and path statistics.
//!
//! Paths are written with one character per step: `U` (up), `D` (down),
//! `F` (black flat) and `G` (green flat). The family is always supplied by
//! the caller and never inferred from the text.

use std::fmt;
use std::str::FromStr;

use crate::error::PathError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
    FlatBlack,
    FlatGreen,
}

impl Step {
    /// All steps in enumeration order (`U < D < F < G`).
    pub const ALL: [Step; 4] = [Step::Up, Step::Down, Step::FlatBlack, Step::FlatGreen];

    pub fn to_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::FlatBlack => 'F',
            Step::FlatGreen => 'G',
        }
    }

    pub fn from_char(ch: char) -> Option<Step> {
        match ch {
            'U' => Some(Step::Up),
            'D' => Some(Step::Down),
            'F' => Some(Step::FlatBlack),
            'G' => Some(Step::FlatGreen),
            _ => None,
        }
    }

    pub fn is_flat(self) -> bool {
        matches!(self, Step::FlatBlack | Step::FlatGreen)
    }

    /// Height change contributed by this step.
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::FlatBlack | Step::FlatGreen => 0,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Dyck,
    Motzkin,
    BicoloredMotzkin,
}

impl Family {
    pub fn allows(self, step: Step) -> bool {
        match self {
            Family::Dyck => matches!(step, Step::Up | Step::Down),
            Family::Motzkin => step != Step::FlatGreen,
            Family::BicoloredMotzkin => true,
        }
    }

    /// Number of steps in a path of the given size.
    pub fn step_len(self, size: usize) -> usize {
        match self {
            Family::Dyck => 2 * size,
            Family::Motzkin | Family::BicoloredMotzkin => size,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Dyck => "dyck",
            Family::Motzkin => "motzkin",
            Family::BicoloredMotzkin => "bicolored",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dyck" => Ok(Family::Dyck),
            "motzkin" => Ok(Family::Motzkin),
            "bicolored" | "bicolored-motzkin" | "bicolor" => Ok(Family::BicoloredMotzkin),
            other => Err(format!("unknown path family {other:?}")),
        }
    }
}

/// A position inside a path, or the virtual downstep appended past its end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepIndex {
    At(usize),
    AppendedDown,
}

/// A validated lattice path of a fixed family.
///
/// Invariants: every step is allowed by the family, the path never goes
/// below height 0 and it ends at height 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
    family: Family,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>, family: Family) -> Result<Self, PathError> {
        validate(&steps, family)?;
        Ok(LatticePath { steps, family })
    }

    /// Builds a path without validation. Callers must uphold the invariants.
    pub(crate) fn from_trusted(steps: Vec<Step>, family: Family) -> Self {
        debug_assert!(validate(&steps, family).is_ok());
        LatticePath { steps, family }
    }

    pub fn empty(family: Family) -> Self {
        LatticePath {
            steps: Vec::new(),
            family,
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Semilength for Dyck paths, length for Motzkin and bicolored paths.
    pub fn size(&self) -> usize {
        match self.family {
            Family::Dyck => self.steps.len() / 2,
            Family::Motzkin | Family::BicoloredMotzkin => self.steps.len(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Reinterprets the same steps as a member of another family.
    pub fn with_family(&self, family: Family) -> Result<LatticePath, PathError> {
        LatticePath::new(self.steps.clone(), family)
    }

    /// Height before each step, followed by the final height (always 0).
    pub fn heights(&self) -> Vec<i64> {
        heights(&self.steps)
    }

    pub fn statistics(&self) -> PathStatistics {
        compute_statistics(self)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

fn validate(steps: &[Step], family: Family) -> Result<(), PathError> {
    let mut height: i64 = 0;
    let (mut ups, mut downs) = (0usize, 0usize);
    for (index, &step) in steps.iter().enumerate() {
        if !family.allows(step) {
            return Err(PathError::FamilyViolation {
                family,
                step: step.to_char(),
                index,
            });
        }
        match step {
            Step::Up => ups += 1,
            Step::Down => downs += 1,
            _ => {}
        }
        height += step.delta();
        if height < 0 {
            return Err(PathError::NegativePrefix { index });
        }
    }
    if ups != downs {
        return Err(PathError::UnbalancedPath { ups, downs });
    }
    Ok(())
}

pub(crate) fn heights(steps: &[Step]) -> Vec<i64> {
    let mut out = Vec::with_capacity(steps.len() + 1);
    let mut h = 0;
    out.push(h);
    for s in steps {
        h += s.delta();
        out.push(h);
    }
    out
}

pub fn parse_path(text: &str, family: Family) -> Result<LatticePath, PathError> {
    let steps = text
        .chars()
        .enumerate()
        .map(|(index, ch)| Step::from_char(ch).ok_or(PathError::IllegalCharacter { ch, index }))
        .collect::<Result<Vec<_>, _>>()?;
    LatticePath::new(steps, family)
}

pub fn render_path(path: &LatticePath) -> String {
    path.to_string()
}

pub(crate) fn render_steps(steps: &[Step]) -> String {
    steps.iter().map(|s| s.to_char()).collect()
}

/// Index of the matching downstep of the upstep at `i`, scanning a raw step
/// slice. Returns `None` when the slice ends before the path comes back
/// down to the upstep's starting height.
pub(crate) fn matching_down_in(steps: &[Step], i: usize) -> Option<usize> {
    let mut depth: i64 = 0;
    for (j, &s) in steps.iter().enumerate().skip(i + 1) {
        match s {
            Step::Up => depth += 1,
            Step::Down if depth == 0 => return Some(j),
            Step::Down => depth -= 1,
            _ => {}
        }
    }
    None
}

/// The first downstep east of the upstep at `i` that returns to the upstep's
/// starting height.
pub fn matching_downstep(path: &LatticePath, i: usize) -> Result<usize, PathError> {
    match path.steps.get(i) {
        None => Err(PathError::IndexOutOfRange {
            index: i,
            len: path.len(),
        }),
        Some(Step::Up) => Ok(matching_down_in(&path.steps, i)
            .expect("a balanced path closes every upstep")),
        Some(_) => Err(PathError::NotAnUpstep(i)),
    }
}

/// First downstep after the flat at `i` whose initial height equals the
/// flat's height, with a virtual downstep appended past the end of the path.
pub(crate) fn associated_down_in(steps: &[Step], i: usize) -> StepIndex {
    // Scanning east from the flat, the running height relative to the flat
    // stays >= 0 until the associated downstep is reached.
    let mut rel: i64 = 0;
    for (j, &s) in steps.iter().enumerate().skip(i + 1) {
        match s {
            Step::Up => rel += 1,
            Step::Down if rel == 0 => return StepIndex::At(j),
            Step::Down => rel -= 1,
            _ => {}
        }
    }
    StepIndex::AppendedDown
}

pub fn associated_downstep(path: &LatticePath, i: usize) -> Result<StepIndex, PathError> {
    match path.steps.get(i) {
        None => Err(PathError::IndexOutOfRange {
            index: i,
            len: path.len(),
        }),
        Some(s) if s.is_flat() => Ok(associated_down_in(&path.steps, i)),
        Some(_) => Err(PathError::NotAFlatstep(i)),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PathStatistics {
    pub udu_count: usize,
    pub ddu_count: usize,
    pub uuu_count: usize,
    pub green_flat_count: usize,
    pub black_flat_count: usize,
    pub up_count: usize,
    pub down_count: usize,
    pub descent_count: usize,
    /// Descents of length one, terminal or not.
    pub short_descent_count: usize,
    pub short_nonterminal_descent_count: usize,
    /// Length of the descent that ends the path, 0 if the path does not end
    /// with a downstep.
    pub terminal_descent_length: usize,
    pub ground_flat_count: usize,
}

impl PathStatistics {
    /// `(name, value)` pairs in a fixed order.
    pub fn fields(&self) -> [(&'static str, usize); 12] {
        [
            ("udu_count", self.udu_count),
            ("ddu_count", self.ddu_count),
            ("uuu_count", self.uuu_count),
            ("green_flat_count", self.green_flat_count),
            ("black_flat_count", self.black_flat_count),
            ("up_count", self.up_count),
            ("down_count", self.down_count),
            ("descent_count", self.descent_count),
            ("short_descent_count", self.short_descent_count),
            (
                "short_nonterminal_descent_count",
                self.short_nonterminal_descent_count,
            ),
            ("terminal_descent_length", self.terminal_descent_length),
            ("ground_flat_count", self.ground_flat_count),
        ]
    }
}

pub(crate) fn count_pattern(steps: &[Step], pattern: [Step; 3]) -> usize {
    steps.windows(3).filter(|w| *w == pattern).count()
}

pub fn compute_statistics(path: &LatticePath) -> PathStatistics {
    use Step::*;
    let steps = path.steps();
    let mut st = PathStatistics {
        udu_count: count_pattern(steps, [Up, Down, Up]),
        ddu_count: count_pattern(steps, [Down, Down, Up]),
        uuu_count: count_pattern(steps, [Up, Up, Up]),
        ..Default::default()
    };

    let mut height = 0i64;
    for &s in steps {
        match s {
            Up => st.up_count += 1,
            Down => st.down_count += 1,
            FlatBlack => st.black_flat_count += 1,
            FlatGreen => st.green_flat_count += 1,
        }
        if s.is_flat() && height == 0 {
            st.ground_flat_count += 1;
        }
        height += s.delta();
    }

    let mut i = 0;
    while i < steps.len() {
        if steps[i] != Down {
            i += 1;
            continue;
        }
        let start = i;
        while i < steps.len() && steps[i] == Down {
            i += 1;
        }
        let run = i - start;
        let terminal = i == steps.len();
        st.descent_count += 1;
        if run == 1 {
            st.short_descent_count += 1;
            if !terminal {
                st.short_nonterminal_descent_count += 1;
            }
        }
        if terminal {
            st.terminal_descent_length = run;
        }
    }
    st
}

/// Draws the path as ASCII art, highest row first.
pub fn ascii_art(path: &LatticePath) -> String {
    let hs = path.heights();
    let max = hs.iter().copied().max().unwrap_or(0).max(0) as usize;
    let width = path.len();
    let mut rows = vec![vec![' '; width]; max + 1];
    for (x, &s) in path.steps().iter().enumerate() {
        let h = hs[x] as usize;
        let (row, ch) = match s {
            Step::Up => (h, '/'),
            Step::Down => (h - 1, '\\'),
            Step::FlatBlack => (h, '_'),
            Step::FlatGreen => (h, '~'),
        };
        rows[row][x] = ch;
    }
    let lines: Vec<String> = rows
        .iter()
        .rev()
        .map(|r| r.iter().collect::<String>().trim_end().to_string())
        .skip_while(|l| l.is_empty())
        .collect();
    lines.join("\n")
}
