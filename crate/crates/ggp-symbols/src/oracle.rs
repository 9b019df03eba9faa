//! Brute-force verifiers for the closed forms of this crate.
//!
//! Every verifier works from definitions only: `B`-set membership scanned
//! over whole families ([`crate::theta::theta_fiber`]), bipartition counts
//! from a generating-function recursion, and exhaustive evaluation of
//! variant families. The closed forms under test are called only to compare
//! against.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::catalog::{cuspidal_symbol, enumerate_labels, CuspKind, GroupTag, RepLabel, RhoDescriptor};
use crate::combinatorics::{enumerate_symbols, Sign, Symbol, SymbolFamily};
use crate::error::{GgpError, ThetaError};
use crate::ggp::{select_nonzero_variant, CaseKind, GGPCase, GgpContext};
use crate::theta::{first_occurrence_unipotent, theta_fiber, theta_fiber_to_sp, Direction, FirstOccurrence, Lift};

/// One failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// The outcome of a verifier: the number of checks, the failures and the
/// wall-clock time.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn is_passing(&self) -> bool {
        self.failures.is_empty()
    }

    /// `{"checked": …, "failures": [{"input", "expected", "actual"}], "elapsed_ms": …}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Accumulates checks and times them.
struct Recorder {
    start: Instant,
    checked: u64,
    failures: Vec<Failure>,
}

impl Recorder {
    fn new() -> Recorder {
        Recorder { start: Instant::now(), checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, input: impl Fn() -> String, expected: String, actual: String) {
        self.checked += 1;
        if expected != actual {
            self.failures.push(Failure { input: input(), expected, actual });
        }
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            checked: self.checked,
            failures: self.failures,
            elapsed_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

/// A scan bound that always reaches the first occurrence: the rank plus the
/// largest staircase offset, `rank + (|def| + 1)/2 + 1`.
pub fn default_scan_bound(symbol: &Symbol) -> u32 {
    symbol.rank() + (symbol.defect().unsigned_abs() + 1) / 2 + 1
}

/// The smallest rank `≤ max_rank` of the even tower of `sign` at which the
/// `B`-set fiber of the symplectic symbol `lam` is nonempty.
pub fn brute_first_occurrence(lam: &Symbol, sign: Sign, max_rank: u32) -> Result<Option<u32>, ThetaError> {
    for rank in 0..=max_rank {
        if !theta_fiber(lam, sign, rank)?.is_empty() {
            return Ok(Some(rank));
        }
    }
    Ok(None)
}

/// The smallest symplectic rank `≤ max_rank` at which the `B`-set fiber of
/// the even orthogonal symbol `lam_prime` is nonempty.
pub fn brute_first_occurrence_to_sp(lam_prime: &Symbol, sign: Sign, max_rank: u32) -> Result<Option<u32>, ThetaError> {
    for rank in 0..=max_rank {
        if !theta_fiber_to_sp(lam_prime, sign, rank)?.is_empty() {
            return Ok(Some(rank));
        }
    }
    Ok(None)
}

/// Checks the closed-form first occurrences against exhaustive scans, for
/// every symbol of rank `≤ max_rank`, both signs and both directions.
pub fn verify_f1(max_rank: u32) -> VerificationReport {
    verify_f1_with(max_rank, |symbol, sign, direction| {
        first_occurrence_unipotent(symbol, sign, direction).expect("symbols are drawn from the matching family")
    })
}

/// [`verify_f1`] against an arbitrary closed form; used to check that the
/// harness detects wrong formulas.
pub fn verify_f1_with(
    max_rank: u32,
    closed_form: impl Fn(&Symbol, Sign, Direction) -> FirstOccurrence,
) -> VerificationReport {
    let mut rec = Recorder::new();
    let describe = |fo: &FirstOccurrence| -> String {
        let lift = match &fo.lift {
            Some(Lift::Symbol(x)) => x.to_string(),
            other => format!("{other:?}"),
        };
        format!("index {} lift {}", fo.index, lift)
    };
    for n in 0..=max_rank {
        for sign in Sign::BOTH {
            let sources = [
                (Direction::SpToO, enumerate_symbols(n, SymbolFamily::SpUnipotent)),
                (Direction::OToSp, enumerate_symbols(n, SymbolFamily::even(sign))),
            ];
            for (direction, symbols) in sources {
                for symbol in symbols {
                    let bound = default_scan_bound(&symbol);
                    let fiber = |rank: u32| match direction {
                        Direction::SpToO => theta_fiber(&symbol, sign, rank),
                        Direction::OToSp => theta_fiber_to_sp(&symbol, sign, rank),
                    }
                    .expect("symbols are drawn from the matching family");
                    let expected = (0..=bound).map(|rank| (rank, fiber(rank))).find(|(_, f)| !f.is_empty());
                    let expected = match expected {
                        Some((rank, f)) if f.len() == 1 => format!("index {rank} lift {}", f[0]),
                        Some((rank, f)) => {
                            let all: Vec<String> = f.iter().map(|x| x.to_string()).collect();
                            format!("index {rank} fiber of size {} [{}]", f.len(), all.join(" "))
                        }
                        None => format!("no occurrence up to rank {bound}"),
                    };
                    let actual = describe(&closed_form(&symbol, sign, direction));
                    rec.check(|| format!("{symbol} sign {sign} {direction:?}"), expected, actual);
                }
            }
        }
    }
    rec.finish()
}

/// Number of partitions of `0..=n`.
fn partition_counts(n: u32) -> Vec<u64> {
    let mut counts = vec![0u64; n as usize + 1];
    counts[0] = 1;
    for part in 1..=n as usize {
        for total in part..=n as usize {
            counts[total] += counts[total - part];
        }
    }
    counts
}

/// Number of bipartitions of `n`.
pub fn bipartition_count(n: u32) -> u64 {
    let p = partition_counts(n);
    (0..=n as usize).map(|a| p[a] * p[n as usize - a]).sum()
}

/// The rank of the staircase of defect `β`, recomputed from its rows.
fn staircase_rank(beta: i64) -> i64 {
    let len = beta.abs();
    let total: i64 = (0..len).sum();
    total - ((len - 1) * (len - 1)).div_euclid(4)
}

/// `Σ_β |P₂(n − f(β))|` over the defects `β` admitted by `family`.
pub fn independent_family_count(n: u32, family: SymbolFamily) -> u64 {
    let bound = 2 * n as i64 + 3;
    (-bound..=bound)
        .filter(|&beta| beta.rem_euclid(4) == family.residue() as i64)
        .filter_map(|beta| {
            let offset = staircase_rank(beta);
            (offset <= n as i64).then(|| bipartition_count((n as i64 - offset) as u32))
        })
        .sum()
}

/// Checks enumeration sizes against independent bipartition counts for every
/// family and rank `≤ max_rank`, and that the staircase (cuspidal) symbols of
/// each rank are exactly the expected ones: the symplectic staircase at
/// ranks `k(k+1)` and the even staircase of defect `±2k` at ranks `k²`.
pub fn verify_counts(max_rank: u32) -> VerificationReport {
    let mut rec = Recorder::new();
    for n in 0..=max_rank {
        for family in SymbolFamily::ALL {
            let all = enumerate_symbols(n, family);
            rec.check(
                || format!("count of {family} at rank {n}"),
                independent_family_count(n, family).to_string(),
                all.len().to_string(),
            );
            let mut staircases: Vec<String> =
                all.iter().filter(|x| x.upsilon().size() == 0).map(|x| x.to_string()).collect();
            staircases.sort();
            let mut expected: Vec<String> = Vec::new();
            for k in 0..=n {
                match family {
                    SymbolFamily::SpUnipotent | SymbolFamily::OOdd if k * (k + 1) == n => {
                        expected.push(cuspidal_symbol(CuspKind::Sp, k).to_string());
                    }
                    SymbolFamily::OEvenPlus | SymbolFamily::OEvenMinus if k * k == n => {
                        if Sign::parity(k as i64) == if family == SymbolFamily::OEvenPlus { Sign::Plus } else { Sign::Minus } {
                            let x = cuspidal_symbol(CuspKind::OEven, k);
                            expected.push(x.transpose().to_string());
                            if k > 0 {
                                expected.push(x.to_string());
                            }
                        }
                    }
                    _ => {}
                }
            }
            expected.sort();
            rec.check(|| format!("staircases of {family} at rank {n}"), expected.join(" "), staircases.join(" "));
        }
    }
    rec.finish()
}

fn trivial_labels(group: GroupTag) -> Vec<RepLabel> {
    enumerate_labels(group, &[RhoDescriptor::trivial()])
}

/// Checks that every transpose-variant family of label pairs with trivial
/// `ρ` and ranks `≤ max_rank` has at most one member with nonzero
/// multiplicity.
///
/// Fourier–Jacobi pairs are taken with the left rank at least the right
/// rank; Bessel pairs range over both signs of both groups.
pub fn verify_variant_uniqueness(max_rank: u32, kind: CaseKind, eps_minus_one: Sign) -> VerificationReport {
    let mut rec = Recorder::new();
    let ctx = GgpContext::new(eps_minus_one);
    let (case, pairs): (GGPCase, Vec<(GroupTag, GroupTag)>) = match kind {
        CaseKind::FourierJacobi => {
            let pairs = (0..=max_rank)
                .flat_map(|n| (0..=n).map(move |m| (GroupTag::Sp { n }, GroupTag::Sp { n: m })))
                .collect();
            (GGPCase::fourier_jacobi(), pairs)
        }
        CaseKind::Bessel => {
            let mut pairs = Vec::new();
            for n in 0..=max_rank {
                for m in 0..=max_rank {
                    for eps in Sign::BOTH {
                        for eps_prime in Sign::BOTH {
                            pairs.push((GroupTag::OOdd { n, eps }, GroupTag::OEven { n: m, eps: eps_prime }));
                        }
                    }
                }
            }
            (GGPCase::bessel(), pairs)
        }
    };
    for (g, h) in pairs {
        let rights = trivial_labels(h);
        for left in trivial_labels(g) {
            for right in &rights {
                let expected = "at most one nonzero variant".to_string();
                let actual = match select_nonzero_variant(&left, right, &case, &ctx) {
                    Ok(_) => expected.clone(),
                    Err(GgpError::MultipleNonzero { count }) => format!("{count} nonzero variants"),
                    Err(other) => format!("error: {other}"),
                };
                rec.check(|| format!("{left} | {right}"), expected, actual);
            }
        }
    }
    rec.finish()
}
