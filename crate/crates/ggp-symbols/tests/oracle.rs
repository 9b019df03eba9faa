use ggp_symbols::combinatorics::*;
use ggp_symbols::ggp::CaseKind;
use ggp_symbols::oracle::*;
use ggp_symbols::theta::{first_occurrence_unipotent, Direction, FirstOccurrence};

fn s(text: &str) -> Symbol {
    text.parse().unwrap()
}

#[test]
fn brute_first_occurrence_examples() {
    assert_eq!(brute_first_occurrence(&s("[1,0|1]"), Sign::Plus, 6).unwrap(), Some(1));
    assert_eq!(brute_first_occurrence(&s("[1|]"), Sign::Plus, 6).unwrap(), Some(0));
    assert_eq!(brute_first_occurrence(&s("[1|]"), Sign::Minus, 6).unwrap(), Some(2));
    assert_eq!(brute_first_occurrence(&s("[1|]"), Sign::Minus, 1).unwrap(), None);
    assert!(brute_first_occurrence(&s("[1|0]"), Sign::Plus, 6).is_err());
}

#[test]
fn scan_bound_is_sufficient() {
    for n in 0..=5 {
        for lam in enumerate_symbols(n, SymbolFamily::SpUnipotent) {
            for sign in Sign::BOTH {
                let bound = default_scan_bound(&lam);
                assert!(brute_first_occurrence(&lam, sign, bound).unwrap().is_some());
            }
        }
    }
}

#[test]
fn verify_f1_passes() {
    let report = verify_f1(4);
    assert!(report.is_passing(), "{:?}", report.failures);
    assert!(report.checked > 0);
    let trivial = verify_f1(0);
    assert!(trivial.is_passing());
    assert!(trivial.checked > 0 && trivial.checked < report.checked);
}

#[test]
fn verify_f1_detects_a_perturbed_closed_form() {
    // Replace λ₁ by λ₁ + 1 in the index formula of the `+` lift.
    let perturbed = |symbol: &Symbol, sign: Sign, direction: Direction| -> FirstOccurrence {
        let mut fo = first_occurrence_unipotent(symbol, sign, direction).unwrap();
        if direction == Direction::SpToO && sign == Sign::Plus && !symbol.upsilon().upper.is_empty() {
            fo.index = fo.index.wrapping_sub(1);
        }
        fo
    };
    let report = verify_f1_with(3, perturbed);
    assert!(!report.is_passing());
    assert!(!report.failures.is_empty());
}

#[test]
fn verify_counts_passes() {
    let report = verify_counts(8);
    assert!(report.is_passing(), "{:?}", report.failures);
    assert_eq!(bipartition_count(0), 1);
    assert_eq!(bipartition_count(2), 5);
    assert_eq!(independent_family_count(1, SymbolFamily::SpUnipotent), 2);
    assert_eq!(independent_family_count(2, SymbolFamily::SpUnipotent), 6);
    assert_eq!(independent_family_count(0, SymbolFamily::OEvenPlus), 1);
}

#[test]
fn verify_variant_uniqueness_passes() {
    for eps_minus_one in Sign::BOTH {
        for kind in [CaseKind::FourierJacobi, CaseKind::Bessel] {
            let report = verify_variant_uniqueness(2, kind, eps_minus_one);
            assert!(report.is_passing(), "{kind} {eps_minus_one}: {:?}", report.failures);
            assert!(report.checked > 0);
            assert!(verify_variant_uniqueness(0, kind, eps_minus_one).is_passing());
        }
    }
}

#[test]
fn report_json_shape() {
    let report = VerificationReport {
        checked: 3,
        failures: vec![Failure { input: "x".into(), expected: "1".into(), actual: "2".into() }],
        elapsed_ms: 7,
    };
    let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(value["checked"], 3);
    assert_eq!(value["elapsed_ms"], 7);
    assert_eq!(value["failures"][0]["input"], "x");
    assert_eq!(value["failures"][0]["expected"], "1");
    assert_eq!(value["failures"][0]["actual"], "2");
}
