//! The finite theta correspondence at the level of symbols.
//!
//! * [`in_b`] is the membership predicate of the sets `B^±` that describe
//!   which pairs of unipotent representations occur in the Weil
//!   representation of a symplectic–even-orthogonal dual pair;
//! * [`in_g`] tests the four `G` sets that govern nonvanishing of branching
//!   multiplicities;
//! * [`first_occurrence_unipotent`] gives the closed-form first occurrence
//!   index and lift of a unipotent symbol, and [`theta_fiber`] is the
//!   exhaustive scan it is checked against;
//! * [`cuspidal_theta`] pairs unipotent cuspidal symbols;
//! * [`first_occurrence_supported`] evaluates first occurrences of labels
//!   supported on cuspidal staircases, with the tower assignment controlled
//!   by an orientation sign.
//!
//! `B`-set membership compares *transposed* rows of the bipartitions, while
//! `G`-set membership compares the rows as they are.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::{GroupTag, RepLabel, RhoDescriptor, KH};
use crate::combinatorics::{
    close_dominates, enumerate_symbols, Bipartition, Partition, Sign, Symbol, SymbolFamily,
};
use crate::error::ThetaError;

fn require(symbol: &Symbol, family: SymbolFamily, expected: &'static str) -> Result<(), ThetaError> {
    if family.admits(symbol.defect()) {
        Ok(())
    } else {
        Err(ThetaError::DefectClassMismatch { symbol: symbol.to_string(), defect: symbol.defect(), expected })
    }
}

fn require_odd(symbol: &Symbol) -> Result<(), ThetaError> {
    require(symbol, SymbolFamily::SpUnipotent, "defect = 1 mod 4")
}

fn require_even(symbol: &Symbol, sign: Sign) -> Result<(), ThetaError> {
    match sign {
        Sign::Plus => require(symbol, SymbolFamily::OEvenPlus, "defect = 0 mod 4"),
        Sign::Minus => require(symbol, SymbolFamily::OEvenMinus, "defect = 2 mod 4"),
    }
}

/// Membership of `(Λ, Λ')` in `B^sign`: `Λ` is a symplectic symbol (defect
/// `≡ 1 mod 4`) and `Λ'` an even-orthogonal symbol of the class matching
/// `sign`.
///
/// With `Υ(Λ) = (λ, μ)` and `Υ(Λ') = (λ', μ')`:
///
/// * `+`: `ᵗμ' ≼ ᵗλ`, `ᵗμ ≼ ᵗλ'` and `def Λ' = −def Λ + 1`;
/// * `−`: `ᵗλ' ≼ ᵗμ`, `ᵗλ ≼ ᵗμ'` and `def Λ' = −def Λ − 1`.
pub fn in_b(lam: &Symbol, lam_prime: &Symbol, sign: Sign) -> Result<bool, ThetaError> {
    require_odd(lam)?;
    require_even(lam_prime, sign)?;
    let Bipartition { upper: l, lower: m } = lam.upsilon();
    let Bipartition { upper: lp, lower: mp } = lam_prime.upsilon();
    let (d, dp) = (lam.defect(), lam_prime.defect());
    Ok(match sign {
        Sign::Plus => {
            dp == 1 - d
                && close_dominates(&mp.transpose(), &l.transpose())
                && close_dominates(&m.transpose(), &lp.transpose())
        }
        Sign::Minus => {
            dp == -d - 1
                && close_dominates(&lp.transpose(), &m.transpose())
                && close_dominates(&l.transpose(), &mp.transpose())
        }
    })
}

/// The four `G` sets of pairs (symplectic-class symbol, even symbol).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GVariant {
    /// `def Λ > 0`, `def Λ' = def Λ − 1`, `Υ(Λ)^* ≼ Υ(Λ')^*`, `Υ(Λ')_* ≼ Υ(Λ)_*`.
    EvenPlus,
    /// `def Λ > 0`, `def Λ' = −def Λ − 1`, `Υ(Λ')_* ≼ Υ(Λ)^*`, `Υ(Λ)_* ≼ Υ(Λ')^*`.
    EvenMinus,
    /// `def Λ < 0`, `def Λ' = def Λ + 1`, `Υ(Λ')^* ≼ Υ(Λ)^*`, `Υ(Λ)_* ≼ Υ(Λ')_*`.
    OddMinus,
    /// `def Λ < 0`, `def Λ' = −def Λ + 1`, `Υ(Λ')^* ≼ Υ(Λ)_*`, `Υ(Λ)^* ≼ Υ(Λ')_*`.
    OddPlus,
}

impl fmt::Display for GVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GVariant::EvenPlus => "even+",
            GVariant::EvenMinus => "even-",
            GVariant::OddMinus => "odd-",
            GVariant::OddPlus => "odd+",
        })
    }
}

/// The `G` set containing `(Λ, Λ')`, if any. Pairs whose defects are not in
/// the expected classes belong to none of them.
pub fn in_g(lam: &Symbol, lam_prime: &Symbol) -> Option<GVariant> {
    let (d, dp) = (lam.defect(), lam_prime.defect());
    if d.rem_euclid(4) != 1 || dp % 2 != 0 {
        return None;
    }
    let Bipartition { upper: l, lower: m } = lam.upsilon();
    let Bipartition { upper: lp, lower: mp } = lam_prime.upsilon();
    let candidates = [
        (GVariant::EvenPlus, d > 0 && dp == d - 1, (&l, &lp), (&mp, &m)),
        (GVariant::EvenMinus, d > 0 && dp == -d - 1, (&mp, &l), (&m, &lp)),
        (GVariant::OddMinus, d < 0 && dp == d + 1, (&lp, &l), (&m, &mp)),
        (GVariant::OddPlus, d < 0 && dp == -d + 1, (&lp, &m), (&l, &mp)),
    ];
    let found = candidates
        .into_iter()
        .find(|(_, gate, (a, b), (c, e))| *gate && close_dominates(a, b) && close_dominates(c, e))
        .map(|(variant, ..)| variant);
    found
}

/// All `Λ'` of rank `target_rank` in the even family of `sign` with
/// `(Λ, Λ') ∈ B^sign`, in enumeration order.
pub fn theta_fiber(lam: &Symbol, sign: Sign, target_rank: u32) -> Result<Vec<Symbol>, ThetaError> {
    require_odd(lam)?;
    let mut out = Vec::new();
    for candidate in enumerate_symbols(target_rank, SymbolFamily::even(sign)) {
        if in_b(lam, &candidate, sign)? {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// All symplectic `Λ` of rank `target_rank` with `(Λ, Λ') ∈ B^sign`, in
/// enumeration order.
pub fn theta_fiber_to_sp(lam_prime: &Symbol, sign: Sign, target_rank: u32) -> Result<Vec<Symbol>, ThetaError> {
    require_even(lam_prime, sign)?;
    let mut out = Vec::new();
    for candidate in enumerate_symbols(target_rank, SymbolFamily::SpUnipotent) {
        if in_b(&candidate, lam_prime, sign)? {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// Direction of a unipotent lift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    /// From a symplectic group to the even orthogonal tower of a sign.
    SpToO,
    /// From an even orthogonal group of a sign to the symplectic tower.
    OToSp,
}

/// The cuspidal-support data of a lift: the target group (whose rank is the
/// first occurrence index), the `ρ` carried along and the target `(k, h)`.
///
/// Entries flagged as `..._up_to_sign` are only known in absolute value; the
/// stored value is then nonnegative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SupportLift {
    pub group: GroupTag,
    pub rho: RhoDescriptor,
    pub kh: KH,
    pub k_up_to_sign: bool,
    pub h_up_to_sign: bool,
}

/// The lift at the first occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lift {
    /// A unipotent symbol.
    Symbol(Symbol),
    /// The cuspidal-support data of a supported label.
    Support(SupportLift),
}

/// A first occurrence index, the lift there (when known) and whether the
/// tower assignment was determined by the inputs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FirstOccurrence {
    pub index: u32,
    pub lift: Option<Lift>,
    pub resolved: bool,
}

fn to_rank(value: i64) -> u32 {
    u32::try_from(value).expect("closed-form first occurrence indices are nonnegative")
}

/// The closed-form first occurrence of a unipotent symbol.
///
/// For `Sp → O` with `Υ(Λ) = (λ, μ)` and `d = def Λ`:
///
/// * `+`: index `n − λ₁ − (d − 1)/2`, lift `Υ = (μ, λ without λ₁)`, defect `1 − d`;
/// * `−`: index `n − μ₁ + (d + 1)/2`, lift `Υ = (μ without μ₁, λ)`, defect `−d − 1`.
///
/// For `O → Sp` with `Υ(Λ') = (μ', λ')` and `d' = def Λ'`:
///
/// * `+`: index `n' − μ'₁ − d'/2`, lift `Υ = (λ', μ' without μ'₁)`, defect `1 − d'`;
/// * `−`: index `n' − λ'₁ + d'/2`, lift `Υ = (λ' without λ'₁, μ')`, defect `−d' − 1`.
///
/// The lift is the unique member of the fiber at that index.
pub fn first_occurrence_unipotent(
    symbol: &Symbol,
    sign: Sign,
    direction: Direction,
) -> Result<FirstOccurrence, ThetaError> {
    let n = symbol.rank() as i64;
    let d = symbol.defect() as i64;
    let Bipartition { upper, lower } = symbol.upsilon();
    let first = |p: &Partition| p.first() as i64;
    let (index, bp, defect) = match direction {
        Direction::SpToO => {
            require_odd(symbol)?;
            let (lam, mu) = (upper, lower);
            match sign {
                Sign::Plus => (n - first(&lam) - (d - 1) / 2, Bipartition::new(mu, lam.without_first()), 1 - d),
                Sign::Minus => (n - first(&mu) + (d + 1) / 2, Bipartition::new(mu.without_first(), lam), -d - 1),
            }
        }
        Direction::OToSp => {
            require_even(symbol, sign)?;
            let (mu, lam) = (upper, lower);
            match sign {
                Sign::Plus => (n - first(&mu) - d / 2, Bipartition::new(lam, mu.without_first()), 1 - d),
                Sign::Minus => (n - first(&lam) + d / 2, Bipartition::new(lam.without_first(), mu), -d - 1),
            }
        }
    };
    let lift = Symbol::from_upsilon(&bp, defect as i32);
    Ok(FirstOccurrence { index: to_rank(index), lift: Some(Lift::Symbol(lift)), resolved: true })
}

/// Which pair of unipotent cuspidal representations to return.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CuspVariant {
    /// `Sp_{2k(k+1)}` with `O^ε_{2k²}`, `ε = (−1)^k`.
    Down,
    /// `Sp_{2k(k+1)}` with `O^ε_{2(k+1)²}`, `ε = (−1)^{k+1}`.
    Up,
}

/// The symplectic cuspidal symbol of index `k`, its even-orthogonal partner
/// and the sign of the even orthogonal tower.
///
/// The partner is the staircase `(2j−1, …, 0 | ∅)` for `k` odd and its
/// transpose for `k` even, with `j = k` (`Down`) or `j = k + 1` (`Up`).
pub fn cuspidal_theta(k: u32, variant: CuspVariant) -> (Symbol, Symbol, Sign) {
    let lam = crate::catalog::cuspidal_symbol(crate::catalog::CuspKind::Sp, k);
    let (j, sign) = match variant {
        CuspVariant::Down => (k, Sign::parity(k as i64)),
        CuspVariant::Up => (k + 1, Sign::parity(k as i64 + 1)),
    };
    let staircase = Symbol::normalize((0..2 * j).rev().collect(), Vec::new()).expect("staircase rows");
    let partner = if k % 2 == 1 { staircase } else { staircase.transpose() };
    (lam, partner, sign)
}

/// A Witt tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tower {
    Sp,
    OEvenPlus,
    OEvenMinus,
    OOddPlus,
    OOddMinus,
}

impl Tower {
    /// The member of the tower of rank `n`.
    pub fn group(self, n: u32) -> GroupTag {
        match self {
            Tower::Sp => GroupTag::Sp { n },
            Tower::OEvenPlus => GroupTag::OEven { n, eps: Sign::Plus },
            Tower::OEvenMinus => GroupTag::OEven { n, eps: Sign::Minus },
            Tower::OOddPlus => GroupTag::OOdd { n, eps: Sign::Plus },
            Tower::OOddMinus => GroupTag::OOdd { n, eps: Sign::Minus },
        }
    }

    /// The tower containing `group`.
    pub fn of(group: GroupTag) -> Tower {
        match group {
            GroupTag::Sp { .. } => Tower::Sp,
            GroupTag::OEven { eps: Sign::Plus, .. } => Tower::OEvenPlus,
            GroupTag::OEven { eps: Sign::Minus, .. } => Tower::OEvenMinus,
            GroupTag::OOdd { eps: Sign::Plus, .. } => Tower::OOddPlus,
            GroupTag::OOdd { eps: Sign::Minus, .. } => Tower::OOddMinus,
        }
    }

    /// The tower sign, for orthogonal towers.
    pub fn sign(self) -> Option<Sign> {
        self.group(0).sign()
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tower::Sp => "sp",
            Tower::OEvenPlus => "oeven+",
            Tower::OEvenMinus => "oeven-",
            Tower::OOddPlus => "oodd+",
            Tower::OOddMinus => "oodd-",
        })
    }
}

/// The data needed to place a supported label in a tower.
///
/// `orientation` selects which branch of the two-way first occurrence
/// alternative holds (see [`first_occurrence_supported`]). When absent it
/// defaults to `+` for labels with trivial `ρ`, which reproduces the
/// unipotent cuspidal correspondence; for nontrivial `ρ` it stays unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TowerContext {
    pub eps_minus_one: Sign,
    pub tower: Tower,
    pub orientation: Option<Sign>,
}

fn is_staircase(symbol: &Symbol) -> bool {
    symbol.upsilon().size() == 0
}

/// One of two candidate first occurrences.
struct Branch {
    index: u32,
    lift: Option<SupportLift>,
}

/// First occurrence of a label supported on cuspidal staircases, `π_{ρ,k,h}`
/// (or `π_{ρ,k,h,ε}`), in the tower of `ctx`.
///
/// With `o` the orientation sign:
///
/// * symplectic source, even towers: the small branch `n − k` lies in the
///   tower of sign `o·(−1)^{k+|h|}` with lift `(±k, ±h)`; the other tower
///   gets `n + k + 1`;
/// * symplectic source, odd towers: `h = 0` gives `n` with lift `(0, k)`;
///   otherwise the small branch `n − |h|` lies in the tower of sign
///   `o·sign(h)·(−1)^{|h|}` with lift `(|h| − 1, k)` and the other tower gets
///   `n + |h|`;
/// * even orthogonal source: `k = 0` gives `n` with lift `(0, ±h)`; otherwise
///   the branch is small iff `o·sign(k)·(−1)^{|k|} = +`, giving `n − |k|`
///   with lift `(|k| − 1, ±h)`, else `n + |k|` with lift `(|k|, ±h)`;
/// * odd orthogonal source with flag `ε`: small iff `o·ε = +`, giving
///   `n − k` with lift `(h, ±k)`, else `n + k + 1` with lift `(h, ±(k + 1))`.
///
/// Large branches into an orthogonal tower carry no lift. When the
/// orientation is unknown and the two branches differ, the small branch is
/// returned with `resolved = false`.
pub fn first_occurrence_supported(label: &RepLabel, ctx: &TowerContext) -> Result<FirstOccurrence, ThetaError> {
    if !is_staircase(label.lam()) || !is_staircase(label.lam_prime()) {
        return Err(ThetaError::NotCuspidalSupport(label.to_string()));
    }
    let mismatch = || ThetaError::TowerMismatch { tower: ctx.tower.to_string(), group: label.group().to_string() };
    let orientation = ctx.orientation.or(label.rho().is_trivial().then_some(Sign::Plus));
    let n = label.group().rank();
    let rho = label.rho().clone();
    let KH { k, h } = crate::catalog::kh_of(label);
    let lift = |group: GroupTag, kh: KH, k_up_to_sign: bool, h_up_to_sign: bool| SupportLift {
        group,
        rho: rho.clone(),
        kh,
        k_up_to_sign,
        h_up_to_sign,
    };
    let (ku, hu) = (k.unsigned_abs(), h.unsigned_abs());
    let sign_of = |x: i32| if x < 0 { Sign::Minus } else { Sign::Plus };

    // Either a single branch, or (the sign selecting the small branch, small, large).
    let (single, choice): (Option<Branch>, Option<(Sign, Branch, Branch)>) = match (label.group(), ctx.tower) {
        (GroupTag::Sp { .. }, Tower::Sp) => return Err(mismatch()),
        (GroupTag::Sp { .. }, Tower::OEvenPlus | Tower::OEvenMinus) => {
            let tower_sign = ctx.tower.sign().expect("orthogonal tower");
            // The small branch is in this tower iff o·(−1)^{k+|h|} = tower sign.
            let selector = Sign::parity((ku + hu) as i64) * tower_sign;
            let small_group = ctx.tower.group(n - ku);
            let small = Branch { index: n - ku, lift: Some(lift(small_group, KH { k: k.abs(), h: h.abs() }, true, true)) };
            let large = Branch { index: n + ku + 1, lift: None };
            (None, Some((selector, small, large)))
        }
        (GroupTag::Sp { .. }, Tower::OOddPlus | Tower::OOddMinus) => {
            if h == 0 {
                let group = ctx.tower.group(n);
                (Some(Branch { index: n, lift: Some(lift(group, KH { k: 0, h: k }, false, false)) }), None)
            } else {
                let tower_sign = ctx.tower.sign().expect("orthogonal tower");
                let selector = sign_of(h) * Sign::parity(hu as i64) * tower_sign;
                let group = ctx.tower.group(n - hu);
                let small = Branch { index: n - hu, lift: Some(lift(group, KH { k: h.abs() - 1, h: k }, false, false)) };
                let large = Branch { index: n + hu, lift: None };
                (None, Some((selector, small, large)))
            }
        }
        (GroupTag::OEven { .. }, Tower::Sp) => {
            if k == 0 {
                let group = GroupTag::Sp { n };
                (Some(Branch { index: n, lift: Some(lift(group, KH { k: 0, h: h.abs() }, false, true)) }), None)
            } else {
                let selector = sign_of(k) * Sign::parity(ku as i64);
                let small_kh = KH { k: k.abs() - 1, h: h.abs() };
                let small = Branch { index: n - ku, lift: Some(lift(GroupTag::Sp { n: n - ku }, small_kh, false, true)) };
                let large_kh = KH { k: k.abs(), h: h.abs() };
                let large = Branch { index: n + ku, lift: Some(lift(GroupTag::Sp { n: n + ku }, large_kh, false, true)) };
                (None, Some((selector, small, large)))
            }
        }
        (GroupTag::OOdd { .. }, Tower::Sp) => {
            let flag = label.eps_flag().expect("odd orthogonal labels carry a flag");
            let small_kh = KH { k: h, h: k };
            let small = Branch { index: n - ku, lift: Some(lift(GroupTag::Sp { n: n - ku }, small_kh, false, true)) };
            let large_kh = KH { k: h, h: k + 1 };
            let large = Branch { index: n + ku + 1, lift: Some(lift(GroupTag::Sp { n: n + ku + 1 }, large_kh, false, true)) };
            (None, Some((flag, small, large)))
        }
        (GroupTag::OEven { .. } | GroupTag::OOdd { .. }, _) => return Err(mismatch()),
    };

    let (branch, resolved) = match (single, choice) {
        (Some(branch), _) => (branch, true),
        (None, Some((selector, small, large))) => match orientation {
            Some(o) if o * selector == Sign::Plus => (small, true),
            Some(_) => (large, true),
            None => (small, false),
        },
        (None, None) => unreachable!("every case yields a branch"),
    };
    Ok(FirstOccurrence { index: branch.index, lift: branch.lift.map(Lift::Support), resolved })
}
