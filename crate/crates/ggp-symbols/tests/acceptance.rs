//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ggp_symbols::catalog::*;
use ggp_symbols::combinatorics::*;
use ggp_symbols::ggp::*;
use ggp_symbols::oracle::*;
use ggp_symbols::theta::*;

/// The outcome of one criterion: whether it holds and a one-line summary.
type Outcome = (bool, String);

fn timed(limit: Option<Duration>, body: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let (ok, detail) = body();
    let elapsed = start.elapsed();
    match limit {
        Some(limit) => {
            let in_time = elapsed < limit;
            (ok && in_time, format!("{detail}; {:.2} s (limit {} s)", elapsed.as_secs_f64(), limit.as_secs()))
        }
        None => (ok, detail),
    }
}

fn report_outcome(report: &VerificationReport) -> Outcome {
    let first = report.failures.first().map(|f| format!("; first failure: {} expected {} got {}", f.input, f.expected, f.actual));
    (report.is_passing(), format!("{} checks, {} failures{}", report.checked, report.failures.len(), first.unwrap_or_default()))
}

/// Symbol counts agree with bipartition counts for ranks up to 8.
fn criterion_1() -> Outcome {
    let report = verify_counts(8);
    let small = enumerate_symbols(1, SymbolFamily::SpUnipotent).len() == 2
        && enumerate_symbols(2, SymbolFamily::SpUnipotent).len() == 6;
    let (ok, detail) = report_outcome(&report);
    (ok && small, format!("{detail}; ranks 1, 2 give 2, 6: {small}"))
}

/// Closed-form first occurrences equal exhaustive scans up to rank 6.
fn criterion_2() -> Outcome {
    report_outcome(&verify_f1(6))
}

/// Cuspidal theta pairs lie in `B` with the stated ranks and defects.
fn criterion_3() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for k in 0..=3u32 {
        for variant in [CuspVariant::Down, CuspVariant::Up] {
            checked += 1;
            let (lam, lam_prime, sign) = cuspidal_theta(k, variant);
            let (rank, magnitude, expected_sign) = match variant {
                CuspVariant::Down => (k * k, 2 * k as i32, Sign::parity(k as i64)),
                CuspVariant::Up => ((k + 1) * (k + 1), 2 * k as i32 + 2, Sign::parity(k as i64 + 1)),
            };
            let sp_defect = if k % 2 == 0 { 1 } else { -1 } * (2 * k as i32 + 1);
            let ok = in_b(&lam, &lam_prime, sign).unwrap_or(false)
                && lam.rank() == k * (k + 1)
                && lam.defect() == sp_defect
                && lam_prime.rank() == rank
                && lam_prime.defect().abs() == magnitude
                && sign == expected_sign;
            if !ok {
                bad.push(format!("k={k} {variant:?}"));
            }
        }
    }
    (bad.is_empty(), format!("{checked} pairs, failing: [{}]", bad.join(", ")))
}

/// The two even-tower first occurrences of a supported symplectic label sum
/// to `2n + 1`.
fn criterion_4() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 0..=10u32 {
        for k in 0..=4u32 {
            let base = k * (k + 1);
            let mut h = 0i32;
            while base + (h * h) as u32 <= n {
                for signed_h in if h == 0 { vec![0] } else { vec![h, -h] } {
                    let rest = n - base - (h * h) as u32;
                    let rho = if rest == 0 { RhoDescriptor::trivial() } else { RhoDescriptor::new("x", rest, true).unwrap() };
                    let lam_prime = upsilon_inverse(&Bipartition::default(), 2 * signed_h);
                    let label =
                        make_label(GroupTag::Sp { n }, rho, cuspidal_symbol(CuspKind::Sp, k), lam_prime, None).unwrap();
                    for orientation in [None, Some(Sign::Plus), Some(Sign::Minus)] {
                        if orientation.is_none() && !label.rho().is_trivial() {
                            continue;
                        }
                        let index = |tower| {
                            let ctx = TowerContext { eps_minus_one: Sign::Plus, tower, orientation };
                            first_occurrence_supported(&label, &ctx).unwrap().index
                        };
                        checked += 1;
                        let sum = index(Tower::OEvenPlus) + index(Tower::OEvenMinus);
                        if sum != 2 * n + 1 {
                            bad.push(format!("n={n} k={k} h={signed_h}: {sum}"));
                        }
                    }
                }
                h += 1;
            }
        }
    }
    (bad.is_empty(), format!("{checked} labels, failing: [{}]", bad.join(", ")))
}

/// At most one nonzero member per transpose-variant family, ranks up to 3.
fn criterion_5() -> Outcome {
    let mut checked = 0;
    let mut failures = 0;
    for kind in [CaseKind::FourierJacobi, CaseKind::Bessel] {
        for eps_minus_one in Sign::BOTH {
            let report = verify_variant_uniqueness(3, kind, eps_minus_one);
            checked += report.checked;
            failures += report.failures.len();
        }
    }
    (failures == 0, format!("{checked} families, {failures} failures"))
}

/// Elements of `O^ε_2(F_3)`: matrices preserving `x² − y²` (`+`) or
/// `x² + y²` (`−`).
fn orthogonal_group_2(eps: Sign) -> Vec<[[i64; 2]; 2]> {
    let b = if eps == Sign::Plus { -1 } else { 1 };
    let q = |x: i64, y: i64| (x * x + b * y * y).rem_euclid(3);
    let mut out = Vec::new();
    for entries in 0..81 {
        let m = [[entries % 3, (entries / 3) % 3], [(entries / 9) % 3, (entries / 27) % 3]];
        let preserves = (0..3).all(|x| {
            (0..3).all(|y| q((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3) == q(x, y))
        });
        if preserves {
            out.push(m);
        }
    }
    out
}

fn det(m: &[[i64; 2]; 2]) -> i64 {
    let d = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).rem_euclid(3);
    if d == 1 {
        1
    } else {
        -1
    }
}

/// Unipotent branching from odd to even orthogonal groups is multiplicity
/// free, and the trivial representation restricts as a character would.
fn criterion_6() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    let ctx = GgpContext::new(Sign::Plus);
    for n in 0..=3u32 {
        let catalog = RhoDescriptor::default_catalog(n);
        for eps in Sign::BOTH {
            for pi in enumerate_labels(GroupTag::OOdd { n, eps }, &[RhoDescriptor::trivial()]) {
                if !pi.is_unipotent() {
                    continue;
                }
                for target_eps in Sign::BOTH {
                    let target = GroupTag::OEven { n, eps: target_eps };
                    checked += 1;
                    let rows = branch_decomposition(&pi, target, &ctx, &catalog).unwrap();
                    let certain_one =
                        rows.iter().all(|(_, m)| matches!(m, Multiplicity::One | Multiplicity::Undetermined(_)));
                    let oriented_one = Sign::BOTH.into_iter().all(|o| {
                        let c = GgpContext { orient_right: Some(o), ..ctx };
                        branch_decomposition(&pi, target, &c, &catalog).unwrap().iter().all(|(_, m)| *m == Multiplicity::One)
                    });
                    if !(certain_one && oriented_one) {
                        bad.push(pi.to_string());
                    }
                }
            }
        }
    }
    // Trivial character restricted from O_{2n+1} to O^{ε'}_{2n}, n ≤ 1.
    let mut character_checks = 0;
    for eps in Sign::BOTH {
        for (n, lam) in [(0u32, "[0|]"), (1, "[1|]")] {
            let trivial = make_label(
                GroupTag::OOdd { n, eps },
                RhoDescriptor::trivial(),
                lam.parse().unwrap(),
                "[0|]".parse().unwrap(),
                Some(Sign::Plus),
            )
            .unwrap();
            for target_eps in Sign::BOTH {
                if n == 0 && target_eps == Sign::Minus {
                    continue;
                }
                let target = GroupTag::OEven { n, eps: target_eps };
                let target_trivial_symbol = match (n, target_eps) {
                    (0, _) => "[|]",
                    (_, Sign::Plus) => "[1|0]",
                    (_, Sign::Minus) => "[|1,0]",
                };
                let target_trivial = make_label(
                    target,
                    RhoDescriptor::trivial(),
                    target_trivial_symbol.parse().unwrap(),
                    "[|]".parse().unwrap(),
                    None,
                )
                .unwrap();
                // ⟨Res 1, 1⟩ and ⟨Res 1, det⟩ over the finite group.
                let (with_trivial, with_det) = if n == 0 {
                    (1, 0)
                } else {
                    let group = orthogonal_group_2(target_eps);
                    let order = group.len() as i64;
                    let expected_order = if target_eps == Sign::Plus { 4 } else { 8 };
                    if order != expected_order {
                        bad.push(format!("|O^{target_eps}_2(F_3)| = {order}"));
                    }
                    let det_sum: i64 = group.iter().map(det).sum();
                    (order / order, det_sum / order)
                };
                character_checks += 1;
                let rows = branch_decomposition(&trivial, target, &ctx, &RhoDescriptor::default_catalog(n)).unwrap();
                let expected = vec![(target_trivial.clone(), Multiplicity::One)];
                let sgn = twist_label(&target_trivial, Twist::Sgn).unwrap();
                let sgn_count = rows.iter().filter(|(l, _)| *l == sgn && sgn != target_trivial).count() as i64;
                if rows != expected || with_trivial != 1 || with_det != sgn_count {
                    bad.push(format!("restriction of {trivial} to {target}"));
                }
            }
        }
    }
    (
        bad.is_empty(),
        format!("{checked} decompositions, {character_checks} character checks, failing: [{}]", bad.join(", ")),
    )
}

/// Labels of rank at most 4 of every group, with a few descriptor kinds.
fn fuzz_pool() -> (Vec<RepLabel>, Vec<RepLabel>, Vec<RepLabel>) {
    let catalog = [
        RhoDescriptor::trivial(),
        RhoDescriptor::new("a", 1, true).unwrap(),
        RhoDescriptor::new("b", 1, false).unwrap(),
        RhoDescriptor::new("c", 2, true).unwrap(),
    ];
    let (mut sp, mut odd, mut even) = (Vec::new(), Vec::new(), Vec::new());
    for n in 0..=4 {
        sp.extend(enumerate_labels(GroupTag::Sp { n }, &catalog));
        for eps in Sign::BOTH {
            odd.extend(enumerate_labels(GroupTag::OOdd { n, eps }, &catalog));
            even.extend(enumerate_labels(GroupTag::OEven { n, eps }, &catalog));
        }
    }
    (sp, odd, even)
}

/// Random pairs: zero when the bands fail, no symbolic base for trivial
/// descriptors, undetermined only when an orientation is missing.
fn criterion_7() -> Outcome {
    let (sp, odd, even) = fuzz_pool();
    let mut rng = StdRng::seed_from_u64(0x6770);
    let mut bad = Vec::new();
    let mut counts = [0usize; 4];
    let pairs = 10_000;
    for _ in 0..pairs {
        let pick = |rng: &mut StdRng, pool: &[RepLabel]| pool[rng.random_range(0..pool.len())].clone();
        let orientation = |rng: &mut StdRng| match rng.random_range(0..3) {
            0 => None,
            1 => Some(Sign::Plus),
            _ => Some(Sign::Minus),
        };
        let eps_minus_one = if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus };
        let ctx = GgpContext {
            eps_minus_one,
            orient_left: orientation(&mut rng),
            orient_right: orientation(&mut rng),
            disjoint_eigenvalues: rng.random_bool(0.8),
        };
        let (left, right, case) = if rng.random_bool(0.5) {
            let eps_zero = [None, Some(Sign::Plus), Some(Sign::Minus)][rng.random_range(0..3)];
            let case = GGPCase { kind: CaseKind::FourierJacobi, eps_zero, symmetrize: true };
            (pick(&mut rng, &sp), pick(&mut rng, &sp), case)
        } else {
            (pick(&mut rng, &odd), pick(&mut rng, &even), GGPCase::bessel())
        };
        let m = match ggp_multiplicity(&left, &right, &case, &ctx) {
            Ok(m) => m,
            Err(e) => {
                bad.push(format!("{left} | {right}: error {e}"));
                continue;
            }
        };
        counts[match m {
            Multiplicity::Zero => 0,
            Multiplicity::One => 1,
            Multiplicity::SymbolicBase { .. } => 2,
            Multiplicity::Undetermined(_) => 3,
        }] += 1;
        let bands = relevance_necessary(kh_of(&left), kh_of(&right), &case);
        let (odd_side, even_side) = match (case.kind, left.group()) {
            (CaseKind::Bessel, GroupTag::OEven { .. }) => (kh_of(&right), kh_of(&left)),
            _ => (kh_of(&left), kh_of(&right)),
        };
        let bands = bands && relevance_necessary(odd_side, even_side, &case);
        let both_trivial = left.rho().is_trivial() && right.rho().is_trivial();
        let missing = |given: Option<Sign>, label: &RepLabel| given.is_none() && !label.rho().is_trivial();
        let orientation_missing = missing(ctx.orient_left, &left) || missing(ctx.orient_right, &right);
        if !bands && m != Multiplicity::Zero {
            bad.push(format!("{left} | {right}: bands fail but {m}"));
        }
        if both_trivial && matches!(m, Multiplicity::SymbolicBase { .. }) {
            bad.push(format!("{left} | {right}: symbolic with trivial descriptors"));
        }
        if matches!(m, Multiplicity::Undetermined(_)) && !orientation_missing {
            bad.push(format!("{left} | {right}: undetermined with orientations supplied"));
        }
    }
    let detail = format!(
        "{pairs} pairs (zero {}, one {}, symbolic {}, undetermined {}), {} violations{}",
        counts[0],
        counts[1],
        counts[2],
        counts[3],
        bad.len(),
        bad.first().map(|b| format!("; first: {b}")).unwrap_or_default()
    );
    (bad.is_empty(), detail)
}

/// Normalization, transposition and Υ round trips.
fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for family in SymbolFamily::ALL {
        for n in 0..=8 {
            for x in enumerate_symbols(n, family) {
                checked += 1;
                let renormalized = symbol_normalize(x.row_a().to_vec(), x.row_b().to_vec()).unwrap();
                if upsilon_inverse(&upsilon(&x), x.defect()) != x
                    || symbol_transpose(&symbol_transpose(&x)) != x
                    || renormalized != x
                    || upsilon(&x.transpose()) != upsilon(&x).swap()
                {
                    bad.push(x.to_string());
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let random_row = |rng: &mut StdRng| -> Vec<u32> {
        let mut row: Vec<u32> = (0..12).filter(|_| rng.random_bool(0.3)).collect();
        row.reverse();
        row
    };
    for _ in 0..10_000 {
        checked += 1;
        let (a, b) = (random_row(&mut rng), random_row(&mut rng));
        let shifts = rng.random_range(0..4);
        let (mut a2, mut b2) = (a.clone(), b.clone());
        for _ in 0..shifts {
            a2 = a2.iter().map(|x| x + 1).chain([0]).collect();
            b2 = b2.iter().map(|x| x + 1).chain([0]).collect();
        }
        let x = symbol_normalize(a, b).unwrap();
        let y = symbol_normalize(a2.clone(), b2.clone()).unwrap();
        let len = (a2.len() + b2.len()) as i64;
        let raw_rank = a2.iter().chain(&b2).map(|&v| v as i64).sum::<i64>() - ((len - 1) * (len - 1)).div_euclid(4);
        let idempotent = symbol_normalize(x.row_a().to_vec(), x.row_b().to_vec()).unwrap() == x;
        if x != y || raw_rank != x.rank() as i64 || a2.len() as i32 - b2.len() as i32 != x.defect() || !idempotent {
            bad.push(format!("{x}"));
        }
    }
    (bad.is_empty(), format!("{checked} checks, failing: [{}]", bad.iter().take(5).cloned().collect::<Vec<_>>().join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, Option<u64>, fn() -> Outcome); 8] = [
        ("bijection counts", Some(5), criterion_1),
        ("closed form equals brute force", Some(60), criterion_2),
        ("cuspidal theta consistency", None, criterion_3),
        ("conservation for supported labels", None, criterion_4),
        ("variant uniqueness", Some(60), criterion_5),
        ("multiplicity-one branching", None, criterion_6),
        ("gate soundness", None, criterion_7),
        ("round-trip and invariance", None, criterion_8),
    ];
    let mut all = true;
    for (number, (name, limit, run)) in criteria.into_iter().enumerate() {
        let (ok, detail) = timed(limit.map(Duration::from_secs), run);
        all &= ok;
        println!("criterion {}: {} - {name}: {detail}", number + 1, if ok { "PASS" } else { "FAIL" });
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
