//! Branching multiplicities for the Bessel (odd orthogonal × even orthogonal)
//! and Fourier–Jacobi (symplectic × symplectic) restriction problems.
//!
//! The multiplicity of a pair of labels is evaluated in four stages:
//!
//! 1. a necessary band condition on the `(k, h)` data of the two labels
//!    ([`relevance_necessary`]);
//! 2. strong relevance, which compares first occurrence distances of the two
//!    cuspidal supports in matching theta towers ([`is_strongly_relevant`]);
//! 3. membership of the symbol pairs in the `G` sets
//!    ([`crate::theta::in_g`]), searched over transposes where the
//!    parametrization leaves a transpose ambiguity;
//! 4. the base factor contributed by the two `ρ` descriptors
//!    ([`base_factor`]).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::{
    cuspidal_support_label, enumerate_labels, kh_of, twist_label, GroupTag, RepLabel, RhoDescriptor, Twist, KH,
};
use crate::combinatorics::{Sign, Symbol};
use crate::error::GgpError;
use crate::theta::{first_occurrence_supported, in_g, Tower, TowerContext};

/// The two restriction problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseKind {
    /// Odd orthogonal against even orthogonal.
    Bessel,
    /// Symplectic against symplectic, twisted by a Weil representation.
    FourierJacobi,
}

impl CaseKind {
    fn name(self) -> &'static str {
        match self {
            CaseKind::Bessel => "Bessel",
            CaseKind::FourierJacobi => "Fourier-Jacobi",
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A restriction problem together with its twist `ε₀` and the permission to
/// reorder Fourier–Jacobi arguments whose ranks are increasing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GGPCase {
    pub kind: CaseKind,
    /// The twist `ε₀` of the Fourier–Jacobi problem; `None` means `ε₋₁`.
    pub eps_zero: Option<Sign>,
    /// When the left rank is smaller than the right one, swap the arguments
    /// (replacing `ε₀` by `ε₋₁ε₀`) instead of failing.
    pub symmetrize: bool,
}

impl GGPCase {
    pub fn bessel() -> GGPCase {
        GGPCase { kind: CaseKind::Bessel, eps_zero: None, symmetrize: false }
    }

    pub fn fourier_jacobi() -> GGPCase {
        GGPCase { kind: CaseKind::FourierJacobi, eps_zero: None, symmetrize: false }
    }
}

/// The field- and character-dependent inputs of a multiplicity evaluation.
///
/// `orient_left` and `orient_right` are the orientation signs of the two
/// labels (see [`crate::theta::first_occurrence_supported`]); when absent
/// they default to `+` for trivial `ρ` and are otherwise unknown.
/// `disjoint_eigenvalues` asserts that the eigenvalue data of the two `ρ`
/// descriptors are disjoint, which cannot be checked on opaque descriptors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GgpContext {
    pub eps_minus_one: Sign,
    pub orient_left: Option<Sign>,
    pub orient_right: Option<Sign>,
    pub disjoint_eigenvalues: bool,
}

impl GgpContext {
    /// No orientations, disjoint eigenvalue data asserted.
    pub fn new(eps_minus_one: Sign) -> GgpContext {
        GgpContext { eps_minus_one, orient_left: None, orient_right: None, disjoint_eigenvalues: true }
    }
}

/// Which inputs were missing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
    Both,
}

impl Side {
    fn from_flags(left: bool, right: bool) -> Option<Side> {
        match (left, right) {
            (true, true) => Some(Side::Both),
            (true, false) => Some(Side::Left),
            (false, true) => Some(Side::Right),
            (false, false) => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Both => "both",
        })
    }
}

/// Machine-readable reason attached to an undetermined multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UndeterminedReason {
    /// The answer depends on orientation signs that were not supplied.
    Orientation(Side),
    /// The answer depends on a descent map that was not supplied.
    Descent,
}

impl fmt::Display for UndeterminedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UndeterminedReason::Orientation(side) => write!(f, "orientation:{side}"),
            UndeterminedReason::Descent => f.write_str("descent"),
        }
    }
}

/// A branching multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Multiplicity {
    Zero,
    One,
    /// The multiplicity equals the unevaluated base multiplicity of the two
    /// `ρ` factors, which does not depend on the additive character.
    SymbolicBase { rho_left: String, rho_right: String, psi_independent: bool, disjoint_asserted: bool },
    Undetermined(UndeterminedReason),
}

impl Multiplicity {
    /// `One` or a symbolic base (which is nonzero whenever it is evaluated
    /// in the cases this crate handles as nonzero candidates).
    pub fn is_nonzero(&self) -> bool {
        matches!(self, Multiplicity::One | Multiplicity::SymbolicBase { .. })
    }

    /// `certain`, `symbolic` or `undetermined`.
    pub fn status(&self) -> &'static str {
        match self {
            Multiplicity::Zero | Multiplicity::One => "certain",
            Multiplicity::SymbolicBase { .. } => "symbolic",
            Multiplicity::Undetermined(_) => "undetermined",
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Zero => f.write_str("0"),
            Multiplicity::One => f.write_str("1"),
            Multiplicity::SymbolicBase { rho_left, rho_right, .. } => write!(f, "m({rho_left},{rho_right})"),
            Multiplicity::Undetermined(reason) => write!(f, "undetermined({reason})"),
        }
    }
}

/// The outcome of a relevance test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relevance {
    Relevant,
    NotRelevant,
    /// Different completions of the missing orientations disagree.
    Undetermined(Side),
}

fn in_band(x: i32, top: i32) -> bool {
    x == top || x == top - 1
}

/// The necessary band conditions.
///
/// Fourier–Jacobi: `k ∈ {|h'|, |h'| − 1}` and `k' ∈ {|h|, |h| − 1}`.
/// Bessel, with `kh_left` taken from the odd orthogonal label:
/// `k ∈ {|k'|, |k'| − 1}` and `h ∈ {|h'|, |h'| − 1}`.
pub fn relevance_necessary(kh_left: KH, kh_right: KH, case: &GGPCase) -> bool {
    let (a, b) = (kh_left, kh_right);
    match case.kind {
        CaseKind::FourierJacobi => in_band(a.k, b.h.abs()) && in_band(b.k, a.h.abs()),
        CaseKind::Bessel => in_band(a.k, b.k.abs()) && in_band(a.h, b.h.abs()),
    }
}

/// A pair of labels in the normal form used by the evaluation: symplectic
/// pairs with the larger rank on the left, Bessel pairs with the odd
/// orthogonal label on the left carrying the flag `+`.
struct Normalized {
    left: RepLabel,
    right: RepLabel,
    orient_left: Option<Sign>,
    orient_right: Option<Sign>,
    eps_zero: Sign,
}

fn normalize(
    left: &RepLabel,
    right: &RepLabel,
    case: &GGPCase,
    ctx: &GgpContext,
    enforce_order: bool,
) -> Result<Normalized, GgpError> {
    let mismatch = || GgpError::CaseMismatch { left: left.to_string(), right: right.to_string(), case: case.kind.name() };
    let mut out = Normalized {
        left: left.clone(),
        right: right.clone(),
        orient_left: ctx.orient_left,
        orient_right: ctx.orient_right,
        eps_zero: case.eps_zero.unwrap_or(ctx.eps_minus_one),
    };
    match (case.kind, left.group(), right.group()) {
        (CaseKind::FourierJacobi, GroupTag::Sp { n }, GroupTag::Sp { n: m }) => {
            if enforce_order && n < m {
                if !case.symmetrize {
                    return Err(GgpError::RankOrder { left: n, right: m });
                }
                std::mem::swap(&mut out.left, &mut out.right);
                std::mem::swap(&mut out.orient_left, &mut out.orient_right);
                out.eps_zero = ctx.eps_minus_one * out.eps_zero;
            }
        }
        (CaseKind::Bessel, GroupTag::OOdd { .. }, GroupTag::OEven { .. }) => {}
        (CaseKind::Bessel, GroupTag::OEven { .. }, GroupTag::OOdd { .. }) => {
            std::mem::swap(&mut out.left, &mut out.right);
            std::mem::swap(&mut out.orient_left, &mut out.orient_right);
        }
        _ => return Err(mismatch()),
    }
    if case.kind == CaseKind::Bessel && out.left.eps_flag() == Some(Sign::Minus) {
        // Tensoring both sides with the sign character preserves the
        // multiplicity, so the odd orthogonal flag can be taken to be `+`.
        out.left = twist_label(&out.left, Twist::Sgn)?;
        out.right = twist_label(&out.right, Twist::Sgn)?;
    }
    Ok(out)
}

fn occurrence(label: &RepLabel, tower: Tower, orientation: Sign, eps_minus_one: Sign) -> Result<i64, GgpError> {
    let ctx = TowerContext { eps_minus_one, tower, orientation: Some(orientation) };
    Ok(first_occurrence_supported(label, &ctx)?.index as i64)
}

/// `n − n₀ ∈ {m − m₀ − 1, m − m₀}`.
fn distances_match(n: i64, n0: i64, m: i64, m0: i64) -> bool {
    let (d, e) = (n - n0, m - m0);
    d == e - 1 || d == e
}

fn odd_tower(sign: Sign) -> Tower {
    match sign {
        Sign::Plus => Tower::OOddPlus,
        Sign::Minus => Tower::OOddMinus,
    }
}

fn even_tower(sign: Sign) -> Tower {
    match sign {
        Sign::Plus => Tower::OEvenPlus,
        Sign::Minus => Tower::OEvenMinus,
    }
}

/// Fourier–Jacobi relevance of cuspidal supports `(σ, σ')` for the twist
/// `ε₀`: with `ε` the even tower in which `σ` occurs by rank `n`, the
/// distance `n − n^ε` must equal `m − m^{εε₀}` or one less, where `m^{·}` is
/// the odd-tower first occurrence of `σ'`.
fn fj_relevant(
    sigma: &RepLabel,
    o: Sign,
    sigma_prime: &RepLabel,
    o_prime: Sign,
    eps_zero: Sign,
    eps_minus_one: Sign,
) -> Result<bool, GgpError> {
    let n = sigma.group().rank() as i64;
    let m = sigma_prime.group().rank() as i64;
    for eps in Sign::BOTH {
        let n_eps = occurrence(sigma, even_tower(eps), o, eps_minus_one)?;
        if n_eps <= n {
            let m_eps = occurrence(sigma_prime, odd_tower(eps * eps_zero), o_prime, eps_minus_one)?;
            return Ok(distances_match(n, n_eps, m, m_eps));
        }
    }
    unreachable!("one of the two even towers is reached by rank n")
}

/// Bessel relevance of cuspidal supports `(π, π')`: with `χ₀ ∈ {1, sgn}`
/// such that `χ₀ ⊗ π` occurs in the symplectic tower by rank `N`, the
/// distance `N − n₀` must equal `M − m₀` or one less, where `m₀` is the
/// first occurrence of `χ₀ ⊗ π'`.
fn bessel_relevant(pi: &RepLabel, o: Sign, pi_prime: &RepLabel, o_prime: Sign, eps_minus_one: Sign) -> Result<bool, GgpError> {
    let big_n = pi.group().rank() as i64;
    let big_m = pi_prime.group().rank() as i64;
    for twisted in [false, true] {
        let apply = |label: &RepLabel| -> Result<RepLabel, GgpError> {
            Ok(if twisted { twist_label(label, Twist::Sgn)? } else { label.clone() })
        };
        let n0 = occurrence(&apply(pi)?, Tower::Sp, o, eps_minus_one)?;
        if n0 <= big_n {
            let m0 = occurrence(&apply(pi_prime)?, Tower::Sp, o_prime, eps_minus_one)?;
            return Ok(distances_match(big_n, n0, big_m, m0));
        }
    }
    unreachable!("one of the two twists is reached by rank N")
}

/// The orientations to try for one label: the supplied one, the default
/// `+` for trivial `ρ`, or both signs.
fn orientation_choices(given: Option<Sign>, label: &RepLabel) -> (Vec<Sign>, bool) {
    match given {
        Some(o) => (vec![o], false),
        None if label.rho().is_trivial() => (vec![Sign::Plus], false),
        None => (Sign::BOTH.to_vec(), true),
    }
}

fn strong_relevance(norm: &Normalized, kind: CaseKind, eps_minus_one: Sign) -> Result<Relevance, GgpError> {
    let sigma = cuspidal_support_label(&norm.left);
    let sigma_prime = cuspidal_support_label(&norm.right);
    let (left_choices, left_free) = orientation_choices(norm.orient_left, &norm.left);
    let (right_choices, right_free) = orientation_choices(norm.orient_right, &norm.right);
    let mut outcomes = Vec::new();
    for &o in &left_choices {
        for &o_prime in &right_choices {
            let value = match kind {
                CaseKind::FourierJacobi => {
                    fj_relevant(&sigma, o, &sigma_prime, o_prime, norm.eps_zero, eps_minus_one)?
                        && fj_relevant(&sigma_prime, o_prime, &sigma, o, eps_minus_one * norm.eps_zero, eps_minus_one)?
                }
                CaseKind::Bessel => {
                    let chi = |label: &RepLabel| twist_label(label, Twist::Chi);
                    bessel_relevant(&sigma, o, &sigma_prime, o_prime, eps_minus_one)?
                        && bessel_relevant(&chi(&sigma)?, o, &chi(&sigma_prime)?, o_prime, eps_minus_one)?
                }
            };
            outcomes.push(value);
        }
    }
    if outcomes.iter().all(|&v| v) {
        Ok(Relevance::Relevant)
    } else if outcomes.iter().all(|&v| !v) {
        Ok(Relevance::NotRelevant)
    } else {
        Ok(Relevance::Undetermined(Side::from_flags(left_free, right_free).expect("disagreement needs a free side")))
    }
}

/// Strong relevance of the cuspidal supports of `left` and `right`.
///
/// Fourier–Jacobi: relevance of `(σ, σ')` for `ε₀` and of `(σ', σ)` for
/// `ε₋₁ε₀`. Bessel: relevance of `(π, π')` and of `(χπ, χπ')`, where `χ`
/// exchanges the two symbols of an orthogonal label. Orientations that are
/// not supplied are completed in every possible way; if the completions
/// disagree the result is [`Relevance::Undetermined`].
pub fn is_strongly_relevant(
    left: &RepLabel,
    right: &RepLabel,
    case: &GGPCase,
    ctx: &GgpContext,
) -> Result<Relevance, GgpError> {
    let norm = normalize(left, right, case, ctx, false)?;
    strong_relevance(&norm, case.kind, ctx.eps_minus_one)
}

/// The base factor contributed by the two `ρ` descriptors.
///
/// Both trivial gives `One`; exactly one trivial gives `One` when the other
/// is regular and `Zero` otherwise; two regular descriptors with disjoint
/// eigenvalue data give `One`; every other case is left symbolic.
pub fn base_factor(rho_left: &RhoDescriptor, rho_right: &RhoDescriptor, disjoint_eigenvalues: bool) -> Multiplicity {
    match (rho_left.is_trivial(), rho_right.is_trivial()) {
        (true, true) => Multiplicity::One,
        (true, false) | (false, true) => {
            let other = if rho_left.is_trivial() { rho_right } else { rho_left };
            if other.is_regular() {
                Multiplicity::One
            } else {
                Multiplicity::Zero
            }
        }
        (false, false) => {
            if rho_left.is_regular() && rho_right.is_regular() && disjoint_eigenvalues {
                Multiplicity::One
            } else {
                Multiplicity::SymbolicBase {
                    rho_left: rho_left.to_string(),
                    rho_right: rho_right.to_string(),
                    psi_independent: true,
                    disjoint_asserted: disjoint_eigenvalues,
                }
            }
        }
    }
}

fn with_transpose(x: &Symbol) -> [Symbol; 2] {
    [x.clone(), x.transpose()]
}

/// True when the label is a unipotent representation in the given slot:
/// `ρ` trivial and the other symbol of rank zero. The symbol in that slot is
/// then known exactly and is not searched over transposes.
fn exact_slot(label: &RepLabel, other: &Symbol) -> bool {
    label.rho().is_trivial() && other.rank() == 0
}

fn g_gate(norm: &Normalized, kind: CaseKind) -> bool {
    let (l, r) = (&norm.left, &norm.right);
    match kind {
        CaseKind::FourierJacobi => {
            let first = with_transpose(r.lam_prime()).iter().any(|x| in_g(l.lam(), x).is_some());
            let second = with_transpose(l.lam_prime()).iter().any(|x| in_g(r.lam(), x).is_some());
            first && second
        }
        CaseKind::Bessel => {
            let candidates = |symbol: &Symbol, other: &Symbol| -> Vec<Symbol> {
                if exact_slot(r, other) {
                    vec![symbol.clone()]
                } else {
                    with_transpose(symbol).to_vec()
                }
            };
            let first = candidates(r.lam(), r.lam_prime()).iter().any(|x| in_g(l.lam(), x).is_some());
            let second = candidates(r.lam_prime(), r.lam()).iter().any(|x| in_g(l.lam_prime(), x).is_some());
            first && second
        }
    }
}

/// The branching multiplicity of `(left, right)`.
///
/// Stages, in order: case check and normalization (Fourier–Jacobi arguments
/// with increasing rank need `case.symmetrize`); the necessary bands; strong
/// relevance; the `G`-set gate; then the base factor. A strong relevance
/// that depends on missing orientations yields
/// [`Multiplicity::Undetermined`] unless a later gate already gives zero.
pub fn ggp_multiplicity(
    left: &RepLabel,
    right: &RepLabel,
    case: &GGPCase,
    ctx: &GgpContext,
) -> Result<Multiplicity, GgpError> {
    let norm = normalize(left, right, case, ctx, true)?;
    if !relevance_necessary(kh_of(&norm.left), kh_of(&norm.right), case) {
        return Ok(Multiplicity::Zero);
    }
    let relevance = strong_relevance(&norm, case.kind, ctx.eps_minus_one)?;
    if relevance == Relevance::NotRelevant || !g_gate(&norm, case.kind) {
        return Ok(Multiplicity::Zero);
    }
    if let Relevance::Undetermined(side) = relevance {
        return Ok(Multiplicity::Undetermined(UndeterminedReason::Orientation(side)));
    }
    Ok(base_factor(norm.left.rho(), norm.right.rho(), ctx.disjoint_eigenvalues))
}

/// The multiplicities of a transpose-variant family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantReport {
    /// Every member of the family with its multiplicity.
    pub evaluated: Vec<(RepLabel, RepLabel, Multiplicity)>,
    /// The members with multiplicity `One` or a symbolic base.
    pub nonzero: Vec<(RepLabel, RepLabel)>,
}

/// `{x, xᵗ}`, collapsed to `{x}` when `x` has defect zero: transposing a
/// defect-zero symbol does not change any multiplicity, so such transposes
/// are not separate variants.
fn transpose_family(x: &Symbol) -> Vec<Symbol> {
    if x.defect() == 0 {
        vec![x.clone()]
    } else {
        vec![x.clone(), x.transpose()]
    }
}

fn rebuild(label: &RepLabel, lam: Symbol, lam_prime: Symbol) -> Result<RepLabel, GgpError> {
    Ok(crate::catalog::make_label(label.group(), label.rho().clone(), lam, lam_prime, label.eps_flag())?)
}

/// The transpose-variant family of a pair of labels.
///
/// Fourier–Jacobi: `Λ'` of the left label and `Λ'₁` of the right label each
/// range over themselves and their transposes. Bessel: both symbols of the
/// even orthogonal label range over themselves and their transposes.
pub fn variant_family(left: &RepLabel, right: &RepLabel, case: &GGPCase) -> Result<Vec<(RepLabel, RepLabel)>, GgpError> {
    let mut out = Vec::new();
    match case.kind {
        CaseKind::FourierJacobi => {
            for a in transpose_family(left.lam_prime()) {
                for b in transpose_family(right.lam_prime()) {
                    out.push((rebuild(left, left.lam().clone(), a.clone())?, rebuild(right, right.lam().clone(), b)?));
                }
            }
        }
        CaseKind::Bessel => {
            let (odd, even, swapped) = match left.group() {
                GroupTag::OEven { .. } => (right, left, true),
                _ => (left, right, false),
            };
            for a in transpose_family(even.lam()) {
                for b in transpose_family(even.lam_prime()) {
                    let variant = rebuild(even, a.clone(), b)?;
                    out.push(if swapped { (variant, odd.clone()) } else { (odd.clone(), variant) });
                }
            }
        }
    }
    Ok(out)
}

/// Evaluates the transpose-variant family of `(left, right)` and returns the
/// nonzero members; more than one nonzero member is reported as
/// [`GgpError::MultipleNonzero`].
pub fn select_nonzero_variant(
    left: &RepLabel,
    right: &RepLabel,
    case: &GGPCase,
    ctx: &GgpContext,
) -> Result<VariantReport, GgpError> {
    let mut report = VariantReport { evaluated: Vec::new(), nonzero: Vec::new() };
    for (a, b) in variant_family(left, right, case)? {
        let m = ggp_multiplicity(&a, &b, case, ctx)?;
        if m.is_nonzero() {
            report.nonzero.push((a.clone(), b.clone()));
        }
        report.evaluated.push((a, b, m));
    }
    if report.nonzero.len() > 1 {
        return Err(GgpError::MultipleNonzero { count: report.nonzero.len() });
    }
    Ok(report)
}

/// Hook for branching statements phrased through descent maps, which are
/// supplied by the caller as a predicate on `(left, right)`. Without a
/// predicate the multiplicity is undetermined.
pub fn descent_multiplicity(
    left: &RepLabel,
    right: &RepLabel,
    descent: Option<&dyn Fn(&RepLabel, &RepLabel) -> bool>,
) -> Multiplicity {
    match descent {
        None => Multiplicity::Undetermined(UndeterminedReason::Descent),
        Some(predicate) if predicate(left, right) => Multiplicity::One,
        Some(_) => Multiplicity::Zero,
    }
}

/// The constituents of a unipotent representation `pi` against every label
/// of `target` whose `ρ` is drawn from `rho_catalog`, with their nonzero (or
/// undetermined) multiplicities, in canonical order.
///
/// Symplectic sources use the Fourier–Jacobi problem against a symplectic
/// target of the same rank; odd orthogonal sources use the Bessel problem
/// against an even orthogonal target of the same rank.
pub fn branch_decomposition(
    pi: &RepLabel,
    target: GroupTag,
    ctx: &GgpContext,
    rho_catalog: &[RhoDescriptor],
) -> Result<Vec<(RepLabel, Multiplicity)>, GgpError> {
    let case = match (pi.group(), target) {
        (GroupTag::Sp { .. }, GroupTag::Sp { .. }) => GGPCase::fourier_jacobi(),
        (GroupTag::OOdd { .. }, GroupTag::OEven { .. }) => GGPCase::bessel(),
        (_, kind) => {
            let case = if matches!(pi.group(), GroupTag::Sp { .. }) { "Fourier-Jacobi" } else { "Bessel" };
            return Err(GgpError::CaseMismatch { left: pi.to_string(), right: kind.to_string(), case });
        }
    };
    if !pi.is_unipotent() {
        return Err(GgpError::NotUnipotent(pi.to_string()));
    }
    let source_rank = pi.group().rank();
    if target.rank() != source_rank {
        return Err(GgpError::RankMismatch { source_rank, target: target.rank() });
    }
    let mut out = Vec::new();
    for candidate in enumerate_labels(target, rho_catalog) {
        let m = ggp_multiplicity(pi, &candidate, &case, ctx)?;
        if m != Multiplicity::Zero {
            out.push((candidate, m));
        }
    }
    Ok(out)
}
