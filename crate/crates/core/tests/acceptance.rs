//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails if
//! any criterion fails. Run with `cargo test -p pathbij --test acceptance -- --nocapture`.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use pathbij::enumeration::{count_no_short_descent, distribution_table, Statistic};
use pathbij::{
    catalan, count_uuu_free, generate_paths, motzkin, parse_path, restrict_motzkin_to_udu_free,
    riordan, std_bijection, std_bijection_inverse, t1_forward, t1_inverse, t2_forward,
    t2_forward_with_flat_order, t2_inverse, Family, LatticePath, Step, DEFAULT_CAP,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn all(family: Family, n: usize) -> Vec<LatticePath> {
    generate_paths(family, n).unwrap().collect()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// UUU-free Dyck n-paths are counted by M_n, n in 0..=12, in under 30 s.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    for n in 0..=12 {
        let got = count_uuu_free(n, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let want = motzkin(n).unwrap();
        check(got == want, || format!("n={n}: {got} != M_n = {want}"))?;
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))
}

/// t1 is a bijection from UUU-free Dyck n-paths onto Motzkin n-paths,
/// n in 0..=10, with both round trips exact.
fn criterion_2() -> Outcome {
    for n in 0..=10 {
        let domain: Vec<_> = all(Family::Dyck, n)
            .into_iter()
            .filter(|d| d.statistics().uuu_count == 0)
            .collect();
        let motz = all(Family::Motzkin, n);
        let mut image = HashSet::new();
        for d in &domain {
            let m = t1_forward(d).map_err(|e| e.to_string())?;
            check(m.family() == Family::Motzkin && m.size() == n, || format!("{d} -> {m}"))?;
            check(&t1_inverse(&m).unwrap() == d, || format!("{d} does not round-trip"))?;
            check(image.insert(m.clone()), || format!("n={n}: {m} hit twice"))?;
        }
        let target: HashSet<_> = motz.iter().cloned().collect();
        check(image == target, || format!("n={n}: image is not all Motzkin paths"))?;
        for m in &motz {
            let d = t1_inverse(m).unwrap();
            check(d.statistics().uuu_count == 0, || format!("{m} -> {d} has UUU"))?;
            check(&t1_forward(&d).unwrap() == m, || format!("{m} does not round-trip"))?;
        }
    }
    Ok(())
}

/// t2 maps bicolored Motzkin n-paths bijectively onto Dyck (n+1)-paths,
/// n in 0..=8, sending green flats to UDUs and downs to DDUs.
fn criterion_3() -> Outcome {
    for n in 0..=8 {
        let bic = all(Family::BicoloredMotzkin, n);
        check(bic.len() as u128 == catalan(n + 1).unwrap().get(), || format!("n={n}: bad count"))?;
        let mut image = HashSet::new();
        for m in &bic {
            let d = t2_forward(m).map_err(|e| e.to_string())?;
            check(
                LatticePath::new(d.steps().to_vec(), Family::Dyck).is_ok() && d.size() == n + 1,
                || format!("{m} -> {d} is not a Dyck (n+1)-path"),
            )?;
            let (a, b) = (m.statistics(), d.statistics());
            check(b.udu_count == a.green_flat_count, || format!("{m} -> {d}: UDU count"))?;
            check(b.ddu_count == a.down_count, || format!("{m} -> {d}: DDU count"))?;
            check(&t2_inverse(&d).map_err(|e| e.to_string())? == m, || format!("{m} does not round-trip"))?;
            check(image.insert(d), || format!("n={n}: collision at {m}"))?;
        }
        let dyck = all(Family::Dyck, n + 1);
        check(image.len() == dyck.len() && dyck.iter().all(|d| image.contains(d)), || {
            format!("n={n}: image is not all Dyck (n+1)-paths")
        })?;
        for d in &dyck {
            let m = t2_inverse(d).map_err(|e| format!("{d}: {e}"))?;
            check(&t2_forward(&m).unwrap() == d, || format!("{d} does not round-trip"))?;
        }
    }
    Ok(())
}

/// Worked examples for both maps.
fn criterion_4() -> Outcome {
    let d = parse_path("UUDUDUUDDD", Family::Dyck).unwrap();
    let m = t1_forward(&d).unwrap();
    check(m.to_string() == "UFUDD", || format!("t1 example gave {m}"))?;

    let m = parse_path("UUDFUFDGDUDFUD", Family::BicoloredMotzkin).unwrap();
    let out = t2_forward(&m).unwrap();
    let st = out.statistics();
    check(st.udu_count == 1 && st.ddu_count == 5, || {
        format!("t2 example {out}: {} UDU, {} DDU", st.udu_count, st.ddu_count)
    })?;
    check(t2_inverse(&out).unwrap() == m, || "t2 example does not round-trip".into())?;
    check(out.to_string() == "UUUDDUUUUDDDUDUDDDUUDDUUUDDUDD", || format!("t2 example gave {out}"))
}

/// Both distributions agree with brute force for n in 1..=10 and sum to C_n.
fn criterion_5() -> Outcome {
    for stat in [Statistic::Udu, Statistic::Ddu] {
        for n in 1..=10 {
            let rows = distribution_table(stat, n, DEFAULT_CAP).map_err(|e| e.to_string())?;
            for r in &rows {
                check(r.brute == r.formula, || {
                    format!("{stat} n={n} k={}: brute {} formula {}", r.k, r.brute, r.formula)
                })?;
            }
            let sum: u128 = rows.iter().map(|r| r.brute.get()).sum();
            check(sum == catalan(n).unwrap().get(), || format!("{stat} n={n}: sum {sum}"))?;
        }
    }
    Ok(())
}

/// Restriction to Motzkin paths hits exactly the UDU-free Dyck paths; no
/// ground flats iff the image ends in UD; no-short-descent count is R_n.
fn criterion_6() -> Outcome {
    for n in 0..=8 {
        let mut image = HashSet::new();
        for m in all(Family::Motzkin, n) {
            let d = restrict_motzkin_to_udu_free(&m).map_err(|e| e.to_string())?;
            let no_ground = m.statistics().ground_flat_count == 0;
            let ends_ud = d.steps().ends_with(&[Step::Up, Step::Down]);
            check(no_ground == ends_ud, || format!("{m} -> {d}"))?;
            image.insert(d);
        }
        let target: HashSet<_> = all(Family::Dyck, n + 1)
            .into_iter()
            .filter(|d| d.statistics().udu_count == 0)
            .collect();
        check(image == target, || format!("n={n}: image != UDU-free Dyck (n+1)-paths"))?;
    }
    for n in 0..=10 {
        let got = count_no_short_descent(n, DEFAULT_CAP).unwrap();
        let want = riordan(n).unwrap();
        check(got == want, || format!("n={n}: {got} != R_n = {want}"))?;
    }
    Ok(())
}

/// Random bicolored path with `n` steps, by a height-bounded random walk.
fn random_bicolored(rng: &mut StdRng, n: usize) -> LatticePath {
    let mut steps = Vec::with_capacity(n);
    let mut h = 0usize;
    for i in 0..n {
        let left = n - i - 1;
        let options: Vec<Step> = Step::ALL
            .into_iter()
            .filter(|s| {
                let next = h as i64 + s.delta();
                next >= 0 && next <= left as i64
            })
            .collect();
        let s = *options.choose(rng).unwrap();
        h = (h as i64 + s.delta()) as usize;
        steps.push(s);
    }
    LatticePath::new(steps, Family::BicoloredMotzkin).unwrap()
}

/// 200 random bicolored paths (n <= 12), 5 random black-flat orders each.
fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_2004);
    for _ in 0..200 {
        let n = rng.gen_range(0..=12);
        let m = random_bicolored(&mut rng, n);
        let expected = t2_forward(&m).unwrap();
        let mut flats: Vec<usize> = (0..n).filter(|&i| m.steps()[i] == Step::FlatBlack).collect();
        for _ in 0..5 {
            flats.shuffle(&mut rng);
            let got = t2_forward_with_flat_order(&m, &flats).map_err(|e| e.to_string())?;
            check(got == expected, || format!("{m}: order {flats:?} gave {got}, not {expected}"))?;
        }
    }
    Ok(())
}

/// Step doubling (green flat -> DU) is a bijection onto Dyck (n+1)-paths, n <= 8.
fn criterion_8() -> Outcome {
    for n in 0..=8 {
        let mut image = HashSet::new();
        for m in all(Family::BicoloredMotzkin, n) {
            let d = std_bijection(&m).unwrap();
            check(d.size() == n + 1, || format!("{m} -> {d}"))?;
            check(std_bijection_inverse(&d).unwrap() == m, || format!("{m} does not round-trip"))?;
            check(image.insert(d), || format!("n={n}: collision at {m}"))?;
        }
        let dyck = all(Family::Dyck, n + 1);
        check(image.len() == dyck.len() && dyck.iter().all(|d| image.contains(d)), || {
            format!("n={n}: not onto")
        })?;
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("1 UUU-free Dyck n-paths counted by Motzkin numbers, n<=12", criterion_1),
        ("2 t1 bijection with exact round trips, n<=10", criterion_2),
        ("3 t2 bijection and UDU/DDU transport, n<=8", criterion_3),
        ("4 worked examples for t1 and t2", criterion_4),
        ("5 UDU and DDU distributions, 1<=n<=10", criterion_5),
        ("6 Motzkin restriction and Riordan corollary", criterion_6),
        ("7 t2 black-flat order independence, 200 paths x 5 orders", criterion_7),
        ("8 step-doubling bijection, n<=8", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(()) => println!("PASS  criterion {name} ({:.2?})", start.elapsed()),
            Err(e) => {
                println!("FAIL  criterion {name}: {e}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
