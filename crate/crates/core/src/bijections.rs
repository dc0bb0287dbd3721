//! The two bijections, their inverses, the step-doubling bijection between
//! bicolored Motzkin paths and Dyck paths, and the two restrictions.
//!
//! Size contracts:
//!
//! | map | input | output |
//! |-----|-------|--------|
//! | `t1_forward` | UUU-free Dyck n-path | Motzkin n-path |
//! | `t2_forward` | bicolored Motzkin n-path | Dyck (n+1)-path |
//! | `std_bijection` | bicolored Motzkin n-path | Dyck (n+1)-path |
//! | `riordan_to_no_short_descent` | Motzkin n-path, no ground flats | Dyck n-path, no short descents |

use std::fmt;
use std::str::FromStr;

use crate::error::BijectionError;
use crate::path::{
    associated_down_in, count_pattern, matching_down_in, render_steps, Family, LatticePath, Step,
    StepIndex,
};

use Step::{Down, FlatBlack, FlatGreen, Up};

fn expect_family(path: &LatticePath, expected: Family) -> Result<(), BijectionError> {
    if path.family() == expected {
        Ok(())
    } else {
        Err(BijectionError::WrongFamily {
            expected,
            found: path.family(),
        })
    }
}

fn build(steps: Vec<Step>, family: Family) -> Result<LatticePath, BijectionError> {
    let text = render_steps(&steps);
    LatticePath::new(steps, family)
        .map_err(|e| BijectionError::NotDecodable(format!("{text} is not a {family} path: {e}")))
}

// ---------------------------------------------------------------------------
// UUU-free Dyck paths <-> Motzkin paths

/// `UUD -> U`, then each remaining `UD -> F`; other downsteps pass through.
pub fn t1_forward(path: &LatticePath) -> Result<LatticePath, BijectionError> {
    expect_family(path, Family::Dyck)?;
    let s = path.steps();
    if let Some(i) = s.windows(3).position(|w| w == [Up, Up, Up]) {
        return Err(BijectionError::NotUuuFree(i));
    }
    let mut out = Vec::with_capacity(s.len() / 2);
    let mut i = 0;
    while i < s.len() {
        match (s[i], s.get(i + 1), s.get(i + 2)) {
            (Up, Some(Up), Some(Down)) => {
                out.push(Up);
                i += 3;
            }
            (Up, Some(Down), _) => {
                out.push(FlatBlack);
                i += 2;
            }
            (Down, _, _) => {
                out.push(Down);
                i += 1;
            }
            // UU is always followed by D in a UUU-free path, and a Dyck path
            // never ends with U.
            _ => unreachable!("UUU-free Dyck path tokenizes"),
        }
    }
    Ok(LatticePath::from_trusted(out, Family::Motzkin))
}

/// `U -> UUD`, `F -> UD`, `D -> D`.
pub fn t1_inverse(path: &LatticePath) -> Result<LatticePath, BijectionError> {
    expect_family(path, Family::Motzkin)?;
    let mut out = Vec::with_capacity(2 * path.len());
    for &s in path.steps() {
        match s {
            Up => out.extend([Up, Up, Down]),
            FlatBlack => out.extend([Up, Down]),
            Down => out.push(Down),
            FlatGreen => unreachable!("Motzkin paths have no green flats"),
        }
    }
    Ok(LatticePath::from_trusted(out, Family::Dyck))
}

// ---------------------------------------------------------------------------
// Step doubling: bicolored Motzkin n-paths <-> Dyck (n+1)-paths

/// `U -> UU`, `D -> DD`, black `F -> UD`, green `F -> DU`, wrapped in `U ... D`.
pub fn std_bijection(path: &LatticePath) -> Result<LatticePath, BijectionError> {
    expect_family(path, Family::BicoloredMotzkin)?;
    let mut out = Vec::with_capacity(2 * path.len() + 2);
    out.push(Up);
    for &s in path.steps() {
        out.extend(match s {
            Up => [Up, Up],
            Down => [Down, Down],
            FlatBlack => [Up, Down],
            FlatGreen => [Down, Up],
        });
    }
    out.push(Down);
    Ok(LatticePath::from_trusted(out, Family::Dyck))
}

pub fn std_bijection_inverse(path: &LatticePath) -> Result<LatticePath, BijectionError> {
    expect_family(path, Family::Dyck)?;
    let s = path.steps();
    if s.is_empty() {
        return Err(BijectionError::EmptyDyck);
    }
    let inner = &s[1..s.len() - 1];
    let out = inner
        .chunks_exact(2)
        .map(|pair| match (pair[0], pair[1]) {
            (Up, Up) => Up,
            (Down, Down) => Down,
            (Up, Down) => FlatBlack,
            (Down, Up) => FlatGreen,
            _ => unreachable!("Dyck paths contain only U and D"),
        })
        .collect();
    build(out, Family::BicoloredMotzkin)
}

// ---------------------------------------------------------------------------
// Pattern-transporting map: bicolored Motzkin n-paths <-> Dyck (n+1)-paths

/// Maps a bicolored Motzkin n-path to a Dyck (n+1)-path, sending green flats
/// to `UDU`s and downsteps to `DDU`s.
///
/// A virtual downstep is appended first. Then `U` stays `U`, each downstep
/// (the appended one included) becomes `UDD`, a green flat becomes `UD`, and a
/// black flat becomes `U` with a matching `D` inserted immediately before its
/// associated downstep. The appended downstep is dropped at the end.
///
/// Runs as one left-to-right pass: the `D`s owed by black flats are queued on
/// the index of their associated downstep and flushed when it is emitted.
pub fn t2_forward(path: &LatticePath) -> Result<LatticePath, BijectionError> {
    expect_family(path, Family::BicoloredMotzkin)?;
    let s = path.steps();
    let n = s.len();
    // pending[j] = number of Ds to insert before downstep j; j == n is the
    // appended downstep.
    let mut pending = vec![0usize; n + 1];
    for (i, &step) in s.iter().enumerate() {
        if step == FlatBlack {
            let target = match associated_down_in(s, i) {
                StepIndex::At(j) => j,
                StepIndex::AppendedDown => n,
            };
            pending[target] += 1;
        }
    }

    let mut out = Vec::with_capacity(2 * n + 2);
    for (j, &step) in s.iter().enumerate() {
        match step {
            Up | FlatBlack => out.push(Up),
            FlatGreen => out.extend([Up, Down]),
            Down => {
                out.extend([Up, Down]);
                out.extend(std::iter::repeat_n(Down, pending[j]));
                out.push(Down);
            }
        }
    }
    // The appended downstep: its UD and the flats' Ds stay, the step itself
    // is deleted.
    out.extend([Up, Down]);
    out.extend(std::iter::repeat_n(Down, pending[n]));

    Ok(LatticePath::from_trusted(out, Family::Dyck))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tag {
    Plain,
    /// The downstep that was at this index of the extended input.
    Original(usize),
    /// Black flat at this index, not yet processed.
    Flat(usize),
}

/// Applies the same map as [`t2_forward`] by literal rewriting, processing
/// the black flats in the given order. `order` must be a permutation of the
/// indices of the black flats of `path`.
pub fn t2_forward_with_flat_order(
    path: &LatticePath,
    order: &[usize],
) -> Result<LatticePath, BijectionError> {
    expect_family(path, Family::BicoloredMotzkin)?;
    let s = path.steps();
    let n = s.len();
    let mut flats: Vec<usize> = (0..n).filter(|&i| s[i] == FlatBlack).collect();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != flats {
        return Err(BijectionError::Internal(format!(
            "processing order {order:?} is not a permutation of black flat indices {flats:?}"
        )));
    }
    flats.clear();

    let mut seq: Vec<(Step, Tag)> = Vec::with_capacity(2 * n + 3);
    for (i, &step) in s.iter().chain(std::iter::once(&Down)).enumerate() {
        match step {
            Up => seq.push((Up, Tag::Plain)),
            Down => seq.extend([(Up, Tag::Plain), (Down, Tag::Plain), (Down, Tag::Original(i))]),
            FlatGreen => seq.extend([(Up, Tag::Plain), (Down, Tag::Plain)]),
            FlatBlack => seq.push((FlatBlack, Tag::Flat(i))),
        }
    }

    for &f in order {
        let target = match associated_down_in(s, f) {
            StepIndex::At(j) => j,
            StepIndex::AppendedDown => n,
        };
        let at = seq
            .iter()
            .position(|&(_, t)| t == Tag::Flat(f))
            .expect("flat present");
        seq[at] = (Up, Tag::Plain);
        let before = seq
            .iter()
            .position(|&(_, t)| t == Tag::Original(target))
            .expect("associated downstep present");
        seq.insert(before, (Down, Tag::Plain));
    }

    let appended = seq
        .iter()
        .position(|&(_, t)| t == Tag::Original(n))
        .expect("appended downstep present");
    seq.remove(appended);
    build(seq.into_iter().map(|(st, _)| st).collect(), Family::Dyck)
}

/// What each upstep of the extended Dyck path decodes to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Recaptured {
    Up,
    Down,
    Green,
    Black,
}

/// Inverse of [`t2_forward`].
///
/// Works on the path with a downstep appended. Every upstep is classified:
/// a `UD` followed by `U` is a green flat; a `UD` followed by `D` is a
/// downstep (together with the last `D` of that descent); a `U` whose
/// matching `D` lies strictly inside a descent is a black flat; a `U` followed
/// by `U` whose matching `D` is followed by `U` is an original upstep. The
/// classification must use every step exactly once, and the token built on
/// the appended downstep is dropped.
pub fn t2_inverse(path: &LatticePath) -> Result<LatticePath, BijectionError> {
    expect_family(path, Family::Dyck)?;
    if path.is_empty() {
        return Err(BijectionError::EmptyDyck);
    }
    let mut e = path.steps().to_vec();
    e.push(Down);
    let last = e.len() - 1;

    let mut used = vec![false; e.len()];
    let mut consume = |pos: usize| -> Result<(), BijectionError> {
        if std::mem::replace(&mut used[pos], true) {
            Err(BijectionError::NotDecodable(format!(
                "step {pos} claimed twice"
            )))
        } else {
            Ok(())
        }
    };

    let undecodable = |i: usize| {
        BijectionError::NotDecodable(format!(
            "upstep at index {i} of {} matches no recapture rule",
            render_steps(&e)
        ))
    };

    let mut tokens: Vec<Recaptured> = Vec::with_capacity(e.len() / 2);
    let mut appended_token = None;
    for i in 0..e.len() {
        if e[i] != Up {
            continue;
        }
        consume(i)?;
        let token = match (e.get(i + 1), e.get(i + 2)) {
            (Some(Down), Some(Up)) => {
                consume(i + 1)?;
                Recaptured::Green
            }
            (Some(Down), Some(Down)) => {
                consume(i + 1)?;
                let mut end = i + 2;
                while end + 1 < e.len() && e[end + 1] == Down {
                    end += 1;
                }
                consume(end)?;
                if end == last {
                    appended_token = Some(tokens.len());
                }
                Recaptured::Down
            }
            (Some(Up), _) => {
                let m = matching_down_in(&e, i).ok_or_else(|| undecodable(i))?;
                let inside_descent = e[m - 1] == Down && e.get(m + 1) == Some(&Down);
                if inside_descent {
                    consume(m)?;
                    Recaptured::Black
                } else if e.get(m + 1) == Some(&Up) {
                    Recaptured::Up
                } else {
                    return Err(undecodable(i));
                }
            }
            _ => return Err(undecodable(i)),
        };
        tokens.push(token);
    }

    if let Some(pos) = used.iter().position(|u| !u) {
        return Err(BijectionError::NotDecodable(format!(
            "step {pos} of {} is not recaptured by any rule",
            render_steps(&e)
        )));
    }
    match appended_token {
        Some(t) if t + 1 == tokens.len() => {
            tokens.pop();
        }
        _ => {
            return Err(BijectionError::NotDecodable(
                "appended downstep is not the last recaptured downstep".into(),
            ))
        }
    }

    let out = tokens
        .into_iter()
        .map(|t| match t {
            Recaptured::Up => Up,
            Recaptured::Down => Down,
            Recaptured::Green => FlatGreen,
            Recaptured::Black => FlatBlack,
        })
        .collect();
    build(out, Family::BicoloredMotzkin)
}

// ---------------------------------------------------------------------------
// Restrictions

fn as_bicolored(path: &LatticePath) -> LatticePath {
    LatticePath::from_trusted(path.steps().to_vec(), Family::BicoloredMotzkin)
}

/// [`t2_forward`] on a Motzkin path; the image is a UDU-free Dyck (n+1)-path.
pub fn restrict_motzkin_to_udu_free(path: &LatticePath) -> Result<LatticePath, BijectionError> {
    if path.family() == Family::BicoloredMotzkin {
        if let Some(i) = path.steps().iter().position(|&s| s == FlatGreen) {
            return Err(BijectionError::HasGreenFlat(i));
        }
    }
    expect_family(path, Family::Motzkin)?;
    let out = t2_forward(&as_bicolored(path))?;
    if count_pattern(out.steps(), [Up, Down, Up]) != 0 {
        return Err(BijectionError::Internal(format!(
            "image {out} of Motzkin path {path} contains UDU"
        )));
    }
    Ok(out)
}

/// Inverse of [`restrict_motzkin_to_udu_free`].
pub fn udu_free_to_motzkin(path: &LatticePath) -> Result<LatticePath, BijectionError> {
    expect_family(path, Family::Dyck)?;
    if let Some(i) = path.steps().windows(3).position(|w| w == [Up, Down, Up]) {
        return Err(BijectionError::NotDecodable(format!(
            "{path} contains UDU at index {i}"
        )));
    }
    let m = t2_inverse(path)?;
    Ok(LatticePath::from_trusted(m.into_steps(), Family::Motzkin))
}

/// Motzkin n-path with no ground-level flat to a Dyck n-path with no short
/// descents: apply [`t2_forward`] and delete the trailing `UD` of the image.
pub fn riordan_to_no_short_descent(path: &LatticePath) -> Result<LatticePath, BijectionError> {
    expect_family(path, Family::Motzkin)?;
    let mut height = 0;
    for (i, &s) in path.steps().iter().enumerate() {
        if s.is_flat() && height == 0 {
            return Err(BijectionError::HasGroundFlat(i));
        }
        height += s.delta();
    }
    let image = restrict_motzkin_to_udu_free(path)?;
    let mut steps = image.into_steps();
    if !steps.ends_with(&[Up, Down]) {
        return Err(BijectionError::Internal(format!(
            "image {} of {path} does not end with UD",
            render_steps(&steps)
        )));
    }
    steps.truncate(steps.len() - 2);
    let out = build(steps, Family::Dyck)?;
    if out.statistics().short_descent_count != 0 {
        return Err(BijectionError::Internal(format!(
            "image {out} of {path} has a short descent"
        )));
    }
    Ok(out)
}

/// Inverse of [`riordan_to_no_short_descent`]: append `UD` and invert.
pub fn no_short_descent_to_riordan(path: &LatticePath) -> Result<LatticePath, BijectionError> {
    expect_family(path, Family::Dyck)?;
    if path.statistics().short_descent_count != 0 {
        return Err(BijectionError::NotDecodable(format!(
            "{path} has a short descent"
        )));
    }
    let mut steps = path.steps().to_vec();
    steps.extend([Up, Down]);
    udu_free_to_motzkin(&LatticePath::from_trusted(steps, Family::Dyck))
}

// ---------------------------------------------------------------------------
// Dispatch

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    T1,
    T2,
    Std,
    Riordan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

impl Bijection {
    pub const ALL: [Bijection; 4] = [Bijection::T1, Bijection::T2, Bijection::Std, Bijection::Riordan];

    pub fn name(self) -> &'static str {
        match self {
            Bijection::T1 => "t1",
            Bijection::T2 => "t2",
            Bijection::Std => "std",
            Bijection::Riordan => "riordan",
        }
    }

    /// Family of the paths this map accepts in the given direction.
    pub fn domain(self, dir: Direction) -> Family {
        match (self, dir) {
            (Bijection::T1, Direction::Forward) => Family::Dyck,
            (Bijection::T1, Direction::Inverse) => Family::Motzkin,
            (Bijection::T2 | Bijection::Std, Direction::Forward) => Family::BicoloredMotzkin,
            (Bijection::Riordan, Direction::Forward) => Family::Motzkin,
            (_, Direction::Inverse) => Family::Dyck,
        }
    }

    pub fn codomain(self, dir: Direction) -> Family {
        let flipped = match dir {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        };
        self.domain(flipped)
    }

    pub fn apply(self, dir: Direction, path: &LatticePath) -> Result<LatticePath, BijectionError> {
        match (self, dir) {
            (Bijection::T1, Direction::Forward) => t1_forward(path),
            (Bijection::T1, Direction::Inverse) => t1_inverse(path),
            (Bijection::T2, Direction::Forward) => t2_forward(path),
            (Bijection::T2, Direction::Inverse) => t2_inverse(path),
            (Bijection::Std, Direction::Forward) => std_bijection(path),
            (Bijection::Std, Direction::Inverse) => std_bijection_inverse(path),
            (Bijection::Riordan, Direction::Forward) => riordan_to_no_short_descent(path),
            (Bijection::Riordan, Direction::Inverse) => no_short_descent_to_riordan(path),
        }
    }

    /// Applies the map and pairs up the statistics it is known to carry.
    pub fn report(self, dir: Direction, path: &LatticePath) -> Result<BijectionReport, BijectionError> {
        let output = self.apply(dir, path)?;
        let (src, dst) = match dir {
            Direction::Forward => (path, &output),
            Direction::Inverse => (&output, path),
        };
        let (a, b) = (src.statistics(), dst.statistics());
        let pairs: Vec<(&'static str, usize, usize)> = match self {
            Bijection::T1 => vec![("size", src.size(), dst.size())],
            Bijection::T2 => vec![
                ("green_flats->udu", a.green_flat_count, b.udu_count),
                ("downs->ddu", a.down_count, b.ddu_count),
                ("size+1", src.size() + 1, dst.size()),
            ],
            Bijection::Std => vec![("size+1", src.size() + 1, dst.size())],
            Bijection::Riordan => vec![
                ("ground_flats->short_descents", a.ground_flat_count, b.short_descent_count),
                ("size", src.size(), dst.size()),
            ],
        };
        let transported_stats = match dir {
            Direction::Forward => pairs,
            Direction::Inverse => pairs.into_iter().map(|(n, x, y)| (n, y, x)).collect(),
        };
        Ok(BijectionReport {
            input: path.clone(),
            output,
            transported_stats,
        })
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bijection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Bijection::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown bijection {s:?} (expected t1, t2, std or riordan)"))
    }
}

/// Result of applying a map, with `(name, input value, output value)` for
/// each statistic it transports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub input: LatticePath,
    pub output: LatticePath,
    pub transported_stats: Vec<(&'static str, usize, usize)>,
}

impl BijectionReport {
    pub fn stats_agree(&self) -> bool {
        self.transported_stats.iter().all(|&(_, a, b)| a == b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::parse_path;

    fn p(s: &str, f: Family) -> LatticePath {
        parse_path(s, f).unwrap()
    }
    fn dyck(s: &str) -> LatticePath {
        p(s, Family::Dyck)
    }
    fn motz(s: &str) -> LatticePath {
        p(s, Family::Motzkin)
    }
    fn bi(s: &str) -> LatticePath {
        p(s, Family::BicoloredMotzkin)
    }

    #[test]
    fn t1_examples() {
        for (d, m) in [("UUDUDUUDDD", "UFUDD"), ("", ""), ("UD", "F"), ("UUDD", "UD")] {
            assert_eq!(t1_forward(&dyck(d)).unwrap().to_string(), m);
            assert_eq!(t1_inverse(&motz(m)).unwrap().to_string(), d);
        }
    }

    #[test]
    fn t1_errors() {
        assert_eq!(t1_forward(&dyck("UUUDDD")), Err(BijectionError::NotUuuFree(0)));
        assert!(matches!(
            t1_forward(&motz("UD")),
            Err(BijectionError::WrongFamily { .. })
        ));
        assert!(matches!(
            t1_inverse(&bi("G")),
            Err(BijectionError::WrongFamily { .. })
        ));
    }

    #[test]
    fn std_examples() {
        for (m, d) in [("", "UD"), ("F", "UUDD"), ("G", "UDUD")] {
            assert_eq!(std_bijection(&bi(m)).unwrap().to_string(), d);
            assert_eq!(std_bijection_inverse(&dyck(d)).unwrap().to_string(), m);
        }
        assert_eq!(std_bijection_inverse(&dyck("")), Err(BijectionError::EmptyDyck));
    }

    #[test]
    fn t2_examples() {
        let cases = [
            ("", "UD"),
            ("G", "UDUD"),
            ("F", "UUDD"),
            ("UD", "UUDDUD"),
            ("UUDFUFDGDUDFUD", "UUUDDUUUUDDDUDUDDDUUDDUUUDDUDD"),
        ];
        for (m, d) in cases {
            assert_eq!(t2_forward(&bi(m)).unwrap().to_string(), d, "forward {m}");
            assert_eq!(t2_inverse(&dyck(d)).unwrap().to_string(), m, "inverse {d}");
        }
    }

    #[test]
    fn t2_literal_rewriting_agrees() {
        let m = bi("UUDFUFDGDUDFUD");
        for order in [[3, 5, 11], [11, 5, 3], [5, 11, 3]] {
            assert_eq!(
                t2_forward_with_flat_order(&m, &order).unwrap(),
                t2_forward(&m).unwrap()
            );
        }
        assert!(matches!(
            t2_forward_with_flat_order(&m, &[3, 5]),
            Err(BijectionError::Internal(_))
        ));
    }

    #[test]
    fn t2_inverse_empty() {
        assert_eq!(t2_inverse(&dyck("")), Err(BijectionError::EmptyDyck));
    }

    #[test]
    fn restrictions() {
        for (m, d) in [("", "UD"), ("F", "UUDD"), ("UD", "UUDDUD")] {
            assert_eq!(restrict_motzkin_to_udu_free(&motz(m)).unwrap().to_string(), d);
            assert_eq!(udu_free_to_motzkin(&dyck(d)).unwrap().to_string(), m);
        }
        assert_eq!(
            restrict_motzkin_to_udu_free(&bi("UGD")),
            Err(BijectionError::HasGreenFlat(1))
        );
        assert!(udu_free_to_motzkin(&dyck("UDUD")).is_err());
    }

    #[test]
    fn riordan_examples() {
        assert_eq!(riordan_to_no_short_descent(&motz("")).unwrap().to_string(), "");
        assert_eq!(riordan_to_no_short_descent(&motz("UD")).unwrap().to_string(), "UUDD");
        // t2_forward(UFD) = U U UDD UDD; dropping the trailing UD leaves a
        // Dyck 3-path whose only descent has length 3.
        assert_eq!(t2_forward(&bi("UFD")).unwrap().to_string(), "UUUDDDUD");
        let img = riordan_to_no_short_descent(&motz("UFD")).unwrap();
        assert_eq!(img.to_string(), "UUUDDD");
        assert_eq!(img.statistics().short_descent_count, 0);
        assert_eq!(
            riordan_to_no_short_descent(&motz("FUD")),
            Err(BijectionError::HasGroundFlat(0))
        );
        assert_eq!(no_short_descent_to_riordan(&dyck("UUUDDD")).unwrap().to_string(), "UFD");
        assert!(no_short_descent_to_riordan(&dyck("UDUUDD")).is_err());
    }

    #[test]
    fn report_transports_statistics() {
        let r = Bijection::T2
            .report(Direction::Forward, &bi("UUDFUFDGDUDFUD"))
            .unwrap();
        assert!(r.stats_agree());
        assert_eq!(r.transported_stats[0], ("green_flats->udu", 1, 1));
        assert_eq!(r.transported_stats[1], ("downs->ddu", 5, 5));
        let r = Bijection::T2
            .report(Direction::Inverse, &dyck("UUDDUD"))
            .unwrap();
        assert_eq!(r.output.to_string(), "UD");
        assert!(r.stats_agree());
    }

    #[test]
    fn bijection_names_parse() {
        for b in Bijection::ALL {
            assert_eq!(b.name().parse::<Bijection>(), Ok(b));
        }
        assert!("t3".parse::<Bijection>().is_err());
    }
}
