//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use typeb::patterns::{
    is_minimal_nonseparable_fast, parabolic_factor, separable_elements, st_class,
};
use typeb::root_system::{full_system, inversion_roots, RootVector};
use typeb::signed_perm::all;
use typeb::theorems::{
    check_coefficient_shift, check_factorization_bijection, check_rank_symmetry_proposition,
    check_separable_product_identity, check_unique_reduced_word, run_check, staircase_element,
    LemmaReport, ShiftSign,
};
use typeb::weak_order::{lower_ideal_left, reduced_words};
use typeb::{Polynomial, SignedPermutation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn sp(s: &str) -> SignedPermutation {
    s.parse().unwrap()
}

fn sorted(list: &[&str]) -> Vec<SignedPermutation> {
    let mut v: Vec<_> = list.iter().map(|s| sp(s)).collect();
    v.sort();
    v
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs a registered check and fails unless it passes with something to test.
fn passing(id: &str, n: usize) -> Result<LemmaReport, String> {
    let report = run_check(id, n).map_err(|e| format!("{id} at n = {n}: {e}"))?;
    ensure(report.pass, || format!("{id} at n = {n}: witnesses {:?}", report.witnesses))?;
    ensure(!report.vacuous, || format!("{id} at n = {n} was vacuous"))?;
    Ok(report)
}

fn b2_separable_set() -> Outcome {
    let expected = sorted(&["1 2", "-1 2", "2 1", "1 -2", "-2 -1", "-1 -2"]);
    let found = separable_elements(2).map_err(|e| e.to_string())?;
    ensure(found == expected, || format!("separable elements of B_2: {found:?}"))?;

    // Inversion sets written in simple-root coordinates (a, b) = a·α_0 + b·α_1.
    let sys = full_system(2).map_err(|e| e.to_string())?;
    let simple = sys.simple_roots();
    let root = |a: i32, b: i32| {
        let coords: Vec<i32> = (0..2).map(|k| a * simple[0].coords()[k] + b * simple[1].coords()[k]).collect();
        RootVector::new(coords).unwrap()
    };
    let all_positive: Vec<(i32, i32)> = vec![(1, 0), (0, 1), (1, 1), (2, 1)];
    let table: Vec<(&str, Vec<(i32, i32)>)> = vec![
        ("1 2", vec![]),
        ("-1 2", vec![(1, 0)]),
        ("2 1", vec![(0, 1)]),
        ("1 -2", vec![(0, 1), (1, 1), (2, 1)]),
        ("-2 -1", vec![(1, 0), (1, 1), (2, 1)]),
        ("-1 -2", all_positive),
    ];
    for (w, roots) in table {
        let want: BTreeSet<RootVector> = roots.into_iter().map(|(a, b)| root(a, b)).collect();
        let got = inversion_roots(&sp(w));
        ensure(got == want, || format!("inversion set of {w}: {got:?}"))?;
    }
    Ok("6 elements, 6 inversion sets".into())
}

fn st_classes() -> Outcome {
    let c3142 = sorted(&[
        "3 1 4 2", "-2 -4 -1 -3", "3 -1 4 2", "3 -2 4 1", "2 -3 4 1", "2 -4 3 1", "3 -2 4 -1",
        "2 -3 4 -1", "2 -4 3 -1", "1 -3 4 -2", "1 -4 3 -2", "1 -4 2 -3", "-2 -4 1 -3",
        "-1 -4 2 -3", "-1 -4 3 -2", "-1 -3 4 -2",
    ]);
    let c2413 = sorted(&[
        "2 4 1 3", "-3 -1 -4 -2", "1 3 -4 2", "1 4 -3 2", "1 4 -2 3", "2 4 -1 3", "-3 2 -4 1",
        "-2 3 -4 1", "-2 4 -3 1", "-1 3 -4 2", "-1 4 -3 2", "-1 4 -2 3", "-3 1 -4 -2",
        "-3 2 -4 -1", "-2 3 -4 -1", "-2 4 -3 -1",
    ]);
    for (target, want) in [("3 1 4 2", &c3142), ("2 4 1 3", &c2413)] {
        let mut got = st_class(&sp(target)).map_err(|e| e.to_string())?;
        got.sort();
        ensure(&got == want, || format!("st class of {target}: {got:?}"))?;
    }
    Ok("16 + 16 elements".into())
}

fn closing_polynomials() -> Outcome {
    let left = lower_ideal_left(&sp("-2 3 4 5 1")).rank_polynomial();
    let right = lower_ideal_left(&sp("2 3 4 5 -1")).rank_polynomial();
    ensure(left == Polynomial::new(vec![1, 2, 2, 2, 1, 1]), || format!("got {left}"))?;
    ensure(!left.is_symmetric(), || format!("{left} is symmetric"))?;
    ensure(right == Polynomial::new(vec![1, 1, 1, 1, 1, 1]), || format!("got {right}"))?;
    ensure(right.is_symmetric(), || format!("{right} is not symmetric"))?;
    Ok(format!("{left}; {right}"))
}

fn main_theorem() -> Outcome {
    let start = Instant::now();
    let mut summary = Vec::new();
    for n in 2..=4 {
        let r = passing("theorem", n)?;
        summary.push(format!("n={n}: {} separable of {}", r.stats.get("separable").copied().unwrap_or(0), r.checked));
    }
    let small = start.elapsed();
    ensure(small < Duration::from_secs(10), || format!("n = 2..4 took {small:?}"))?;
    let start = Instant::now();
    let r = passing("theorem", 5)?;
    let big = start.elapsed();
    ensure(big < Duration::from_secs(300), || format!("n = 5 took {big:?}"))?;
    summary.push(format!("n=5: {} separable of {}", r.stats["separable"], r.checked));
    Ok(summary.join(", "))
}

fn classifier() -> Outcome {
    let mut total = 0;
    for n in 2..=4 {
        total += passing("classifier-equivalence", n)?.checked;
    }
    ensure(total == 440, || format!("{total} elements compared"))?;
    Ok(format!("{total} elements, 0 disagreements"))
}

fn minimality() -> Outcome {
    let mut parts = Vec::new();
    for n in 4..=5 {
        let fast = passing("minimality-equivalence", n)?;
        let inverse = passing("inverse-minimality", n)?;
        parts.push(format!("B_{n}: {} compared, {} minimal", fast.checked, inverse.checked));
    }
    Ok(parts.join("; "))
}

fn product_identity() -> Outcome {
    let r = check_separable_product_identity(4).map_err(|e| e.to_string())?;
    ensure(r.pass && !r.vacuous, || format!("{:?}", r.witnesses))?;
    Ok(format!("{} separable elements", r.checked))
}

fn coefficient_shift() -> Outcome {
    let plus = sp("2 3 5 1 -4");
    ensure(plus.length() == 11, || format!("length {}", plus.length()))?;
    let f = lower_ideal_left(&plus).rank_polynomial();
    ensure(f.coeff(3) == f.coeff(8) + 1, || format!("plus element: {f}"))?;
    for (w, sign) in [(plus, ShiftSign::Plus), (sp("-2 -3 -5 -1 4"), ShiftSign::Minus)] {
        let r = check_coefficient_shift(&w, sign).map_err(|e| e.to_string())?;
        ensure(r.pass, || format!("{w}: {:?}", r.witnesses))?;
    }
    let mut counts = Vec::new();
    for n in 4..=5 {
        counts.push(passing("coefficient-shift", n)?.checked);
    }
    Ok(format!("both examples; exhaustive on {} + {} elements", counts[0], counts[1]))
}

fn unique_word() -> Outcome {
    for n in 2..=6 {
        let r = check_unique_reduced_word(n).map_err(|e| e.to_string())?;
        ensure(r.pass, || format!("n = {n}: {:?}", r.witnesses))?;
        let w = staircase_element(n);
        let mut word: Vec<usize> = (0..n).rev().collect();
        word.extend(1..n - 1);
        let words = reduced_words(&w, 10);
        ensure(words == vec![word.clone()], || format!("n = {n}: {words:?}"))?;
        ensure(w.length() == 2 * n - 2, || format!("n = {n}: length {}", w.length()))?;
    }
    Ok("n = 2..6".into())
}

fn factorization() -> Outcome {
    let mut count = 0;
    for n in 4..=5 {
        let m = n as i8;
        for w in all(n).unwrap().filter(|w| w.get(n - 1) == -m && w.get(n) == m - 1) {
            let (_, subgroup) = parabolic_factor(&w, &[n - 2, n - 1]).map_err(|e| e.to_string())?;
            let lhs = lower_ideal_left(&w).rank_polynomial();
            let rhs = Polynomial::q_integer(2 * n - 1).multiply(&lower_ideal_left(&subgroup).rank_polynomial());
            ensure(lhs == rhs, || format!("{w}: {lhs} vs {rhs}"))?;
            let r = check_factorization_bijection(&w).map_err(|e| e.to_string())?;
            ensure(r.pass, || format!("{w}: {:?}", r.witnesses))?;
            count += 1;
        }
    }
    Ok(format!("{count} elements"))
}

fn rank_symmetry() -> Outcome {
    let r = check_rank_symmetry_proposition(5).map_err(|e| e.to_string())?;
    ensure(r.pass && !r.vacuous, || format!("{:?}", r.witnesses))?;
    let direct = all(5)
        .unwrap()
        .filter(|w| {
            let pair: BTreeSet<u8> = [w.get(4).unsigned_abs(), w.get(5).unsigned_abs()].into();
            pair == BTreeSet::from([4, 5]) && is_minimal_nonseparable_fast(w)
        })
        .count();
    ensure(direct == r.checked, || format!("{direct} qualifying, report checked {}", r.checked))?;
    Ok(format!("{direct} elements"))
}

fn infrastructure() -> Outcome {
    for n in 1..=5 {
        passing("poincare", n)?;
    }
    let bw = passing("bw-interval", 4)?;
    let w0 = passing("w0-conjugation", 4)?;
    Ok(format!("poincare n = 1..5; interval identity on {}; w_0 symmetry on {}", bw.checked, w0.checked))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("separable elements of B_2 and their inversion sets", b2_separable_set),
        ("standardization classes 3142 and 2413 in B_4", st_classes),
        ("rank polynomials of -2 3 4 5 1 and 2 3 4 5 -1", closing_polynomials),
        ("splitting iff separable, n = 2..5", main_theorem),
        ("pattern classifier matches root-system recursion on B_2..B_4", classifier),
        ("minimality criteria agree on B_4 and B_5", minimality),
        ("lower and upper ideal polynomials multiply to W(q) on B_4", product_identity),
        ("coefficient shift at the top position", coefficient_shift),
        ("unique reduced word, n = 2..6", unique_word),
        ("factorization of ideals ending in -n (n-1)", factorization),
        ("rank symmetry for minimal elements ending in {4, 5}", rank_symmetry),
        ("Poincare polynomial, interval quotient, w_0 symmetry", infrastructure),
    ];
    let mut failures = 0;
    for (k, (name, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(criterion)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail}) [{elapsed:.2}s]", k + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name}: {detail} [{elapsed:.2}s]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
