//! Representation labels `π_{ρ,Λ,Λ'}` (with a flag `ε` for odd orthogonal
//! groups), the cuspidal staircase symbols, `(k, h)` extraction and the twist
//! actions.
//!
//! A label of a group `G` splits its rank into three parts: the rank consumed
//! by an opaque descriptor `ρ` (the general-linear/unitary part of the
//! centralizer), the rank of `Λ` (the part attached to the eigenvalue `1`) and
//! the rank of `Λ'` (the part attached to the eigenvalue `−1`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Bipartition, Partition, Sign, Symbol, SymbolFamily};
use crate::error::{CombinatoricsError, LabelError};

/// A finite classical group: `Sp_{2n}`, `O^ε_{2n}` or `O^ε_{2n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupTag {
    Sp { n: u32 },
    OEven { n: u32, eps: Sign },
    OOdd { n: u32, eps: Sign },
}

impl GroupTag {
    /// The rank parameter `n`.
    pub fn rank(self) -> u32 {
        match self {
            GroupTag::Sp { n } | GroupTag::OEven { n, .. } | GroupTag::OOdd { n, .. } => n,
        }
    }

    /// The group sign, for orthogonal groups.
    pub fn sign(self) -> Option<Sign> {
        match self {
            GroupTag::Sp { .. } => None,
            GroupTag::OEven { eps, .. } | GroupTag::OOdd { eps, .. } => Some(eps),
        }
    }

    /// The same kind of group at another rank.
    pub fn with_rank(self, n: u32) -> GroupTag {
        match self {
            GroupTag::Sp { .. } => GroupTag::Sp { n },
            GroupTag::OEven { eps, .. } => GroupTag::OEven { n, eps },
            GroupTag::OOdd { eps, .. } => GroupTag::OOdd { n, eps },
        }
    }

    /// Dimension of the natural module.
    pub fn dimension(self) -> u32 {
        match self {
            GroupTag::Sp { n } | GroupTag::OEven { n, .. } => 2 * n,
            GroupTag::OOdd { n, .. } => 2 * n + 1,
        }
    }

    fn slot_classes(self) -> (SlotClass, SlotClass) {
        match self {
            GroupTag::Sp { .. } => (SlotClass::Odd, SlotClass::Even),
            GroupTag::OEven { .. } => (SlotClass::Even, SlotClass::Even),
            GroupTag::OOdd { .. } => (SlotClass::Odd, SlotClass::Odd),
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupTag::Sp { n } => write!(f, "sp({})", 2 * n),
            GroupTag::OEven { n, eps } => write!(f, "o{eps}({})", 2 * n),
            GroupTag::OOdd { n, eps } => write!(f, "o{eps}({})", 2 * n + 1),
        }
    }
}

impl FromStr for GroupTag {
    type Err = CombinatoricsError;
    fn from_str(text: &str) -> Result<GroupTag, CombinatoricsError> {
        let bad = |message: &str| CombinatoricsError::Parse { offset: 0, message: format!("{message} in `{text}`") };
        let t = text.trim();
        let open = t.find('(').ok_or_else(|| bad("expected `(`"))?;
        let inner = t[open + 1..].strip_suffix(')').ok_or_else(|| bad("expected `)`"))?;
        let dim: u32 = inner.trim().parse().map_err(|_| bad("expected a dimension"))?;
        match &t[..open] {
            "sp" if dim % 2 == 0 => Ok(GroupTag::Sp { n: dim / 2 }),
            "sp" => Err(bad("symplectic dimension must be even")),
            head @ ("o+" | "o-") => {
                let eps = if head == "o+" { Sign::Plus } else { Sign::Minus };
                Ok(if dim % 2 == 0 { GroupTag::OEven { n: dim / 2, eps } } else { GroupTag::OOdd { n: dim / 2, eps } })
            }
            _ => Err(bad("expected `sp`, `o+` or `o-`")),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SlotClass {
    /// Defect `≡ 1 mod 4`.
    Odd,
    /// Even defect.
    Even,
}

impl SlotClass {
    fn admits(self, defect: i32) -> bool {
        match self {
            SlotClass::Odd => defect.rem_euclid(4) == 1,
            SlotClass::Even => defect % 2 == 0,
        }
    }
}

/// An opaque descriptor of the general-linear/unitary factor `ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RhoDescriptor {
    id: String,
    glu_rank: u32,
    regular: bool,
}

impl RhoDescriptor {
    /// The empty factor.
    pub fn trivial() -> RhoDescriptor {
        RhoDescriptor { id: "trivial".into(), glu_rank: 0, regular: true }
    }

    pub fn new(id: &str, glu_rank: u32, regular: bool) -> Result<RhoDescriptor, LabelError> {
        let valid_id = !id.is_empty() && !id.contains([':', ';', ' ']);
        if !valid_id || (glu_rank == 0 && (id != "trivial" || !regular)) {
            return Err(LabelError::InvalidRho);
        }
        Ok(RhoDescriptor { id: id.into(), glu_rank, regular })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn glu_rank(&self) -> u32 {
        self.glu_rank
    }

    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn is_trivial(&self) -> bool {
        self.glu_rank == 0
    }

    /// The default catalog used for branching: one regular descriptor for
    /// every rank `0..=n`, named `trivial` and `reg1`, `reg2`, ….
    pub fn default_catalog(n: u32) -> Vec<RhoDescriptor> {
        (0..=n)
            .map(|r| if r == 0 { RhoDescriptor::trivial() } else { RhoDescriptor { id: format!("reg{r}"), glu_rank: r, regular: true } })
            .collect()
    }
}

impl fmt::Display for RhoDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.id, self.glu_rank)?;
        if self.regular {
            f.write_str(":reg")?;
        }
        Ok(())
    }
}

impl FromStr for RhoDescriptor {
    type Err = LabelError;
    fn from_str(text: &str) -> Result<RhoDescriptor, LabelError> {
        let bad = || CombinatoricsError::Parse { offset: 0, message: format!("expected `id:rank[:reg]`, found `{text}`") };
        let fields: Vec<&str> = text.trim().split(':').collect();
        let (id, rank, regular) = match fields.as_slice() {
            [id, rank] => (id, rank, false),
            [id, rank, "reg"] => (id, rank, true),
            _ => return Err(bad().into()),
        };
        let rank = rank.parse().map_err(|_| bad())?;
        RhoDescriptor::new(id, rank, regular)
    }
}

/// A validated label `π_{ρ,Λ,Λ'}` or `π_{ρ,Λ,Λ',ε}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepLabel {
    group: GroupTag,
    rho: RhoDescriptor,
    lam: Symbol,
    lam_prime: Symbol,
    eps_flag: Option<Sign>,
}

impl RepLabel {
    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn rho(&self) -> &RhoDescriptor {
        &self.rho
    }

    pub fn lam(&self) -> &Symbol {
        &self.lam
    }

    pub fn lam_prime(&self) -> &Symbol {
        &self.lam_prime
    }

    pub fn eps_flag(&self) -> Option<Sign> {
        self.eps_flag
    }

    /// True when `ρ` is trivial and `Λ'` has rank zero, i.e. the label is a
    /// unipotent representation.
    pub fn is_unipotent(&self) -> bool {
        self.rho.is_trivial() && self.lam_prime.rank() == 0
    }

    /// Sort key: defects, then symbols, then `ρ`, then the flag.
    pub fn sort_key(&self) -> impl Ord + '_ {
        (self.lam.defect(), self.lam_prime.defect(), &self.lam, &self.lam_prime, &self.rho.id, self.eps_flag)
    }
}

/// The sign `(−1)^{def/2}` carried by an even-defect symbol.
pub fn even_part_sign(s: &Symbol) -> Sign {
    Sign::parity((s.defect() / 2) as i64)
}

/// Validates a label.
///
/// For even orthogonal groups with trivial `ρ` the two parts must satisfy
/// `(−1)^{def Λ/2} (−1)^{def Λ'/2} = ε`; with nontrivial `ρ` the sign of the
/// `ρ` factor is unknown and the equation is not imposed.
pub fn make_label(
    group: GroupTag,
    rho: RhoDescriptor,
    lam: Symbol,
    lam_prime: Symbol,
    eps_flag: Option<Sign>,
) -> Result<RepLabel, LabelError> {
    let (class, class_prime) = group.slot_classes();
    let family = match group {
        GroupTag::Sp { .. } => "symplectic",
        GroupTag::OEven { .. } => "even orthogonal",
        GroupTag::OOdd { .. } => "odd orthogonal",
    };
    for (slot, symbol, c) in [("L", &lam, class), ("L'", &lam_prime, class_prime)] {
        if !c.admits(symbol.defect()) {
            return Err(LabelError::DefectClassMismatch { slot, defect: symbol.defect(), family });
        }
    }
    if matches!(group, GroupTag::OOdd { .. }) != eps_flag.is_some() {
        return Err(LabelError::EpsFlagMismatch);
    }
    let found = rho.glu_rank + lam.rank() + lam_prime.rank();
    let expected = group.rank();
    if found > expected {
        return Err(LabelError::RankOverflow { expected, found });
    }
    if found < expected {
        return Err(LabelError::RankShortfall { expected, found });
    }
    if let GroupTag::OEven { eps, .. } = group {
        let product = even_part_sign(&lam) * even_part_sign(&lam_prime);
        if rho.is_trivial() && product != eps {
            return Err(LabelError::SignMismatch { expected: eps.to_string(), found: product.to_string() });
        }
    }
    Ok(RepLabel { group, rho, lam, lam_prime, eps_flag })
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : rho={} ; L={} ; L'={}", self.group, self.rho, self.lam, self.lam_prime)?;
        if let Some(eps) = self.eps_flag {
            write!(f, " ; eps={eps}")?;
        }
        Ok(())
    }
}

impl FromStr for RepLabel {
    type Err = LabelError;
    fn from_str(text: &str) -> Result<RepLabel, LabelError> {
        let bad = |message: String| LabelError::from(CombinatoricsError::Parse { offset: 0, message });
        let colon = text.find(':').ok_or_else(|| bad("expected `group : fields`".into()))?;
        let group: GroupTag = text[..colon].parse()?;
        let (mut rho, mut lam, mut lam_prime, mut eps) = (None, None, None, None);
        for field in text[colon + 1..].split(';') {
            let (key, value) =
                field.split_once('=').ok_or_else(|| bad(format!("expected `key=value`, found `{}`", field.trim())))?;
            match key.trim() {
                "rho" => rho = Some(value.parse::<RhoDescriptor>()?),
                "L" => lam = Some(value.parse::<Symbol>()?),
                "L'" => lam_prime = Some(value.parse::<Symbol>()?),
                "eps" => eps = Some(value.parse::<Sign>()?),
                other => return Err(bad(format!("unknown field `{other}`"))),
            }
        }
        let missing = |name: &str| bad(format!("missing field `{name}`"));
        make_label(
            group,
            rho.ok_or_else(|| missing("rho"))?,
            lam.ok_or_else(|| missing("L"))?,
            lam_prime.ok_or_else(|| missing("L'"))?,
            eps,
        )
    }
}

/// The pair `(k, h)` read off the defects of `(Λ, Λ')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KH {
    pub k: i32,
    pub h: i32,
}

/// `(|d| − 1)/2` for a defect `≡ 1 mod 4`, the signed `d/2` otherwise.
pub fn index_of_defect(d: i32) -> i32 {
    if d.rem_euclid(4) == 1 {
        (d.abs() - 1) / 2
    } else {
        d / 2
    }
}

pub fn kh_of(label: &RepLabel) -> KH {
    KH { k: index_of_defect(label.lam.defect()), h: index_of_defect(label.lam_prime.defect()) }
}

/// Parabolic induction preserves defects, so the `(k, h)` of the cuspidal
/// support is the `(k, h)` of the label itself.
pub fn cuspidal_support_kh(label: &RepLabel) -> KH {
    kh_of(label)
}

/// The cuspidal label supporting `label`: same `ρ` and group type, with both
/// symbols replaced by the staircase of the same defect.
pub fn cuspidal_support_label(label: &RepLabel) -> RepLabel {
    let lam = Symbol::from_upsilon(&Bipartition::default(), label.lam.defect());
    let lam_prime = Symbol::from_upsilon(&Bipartition::default(), label.lam_prime.defect());
    let n = label.rho.glu_rank + lam.rank() + lam_prime.rank();
    RepLabel { group: label.group.with_rank(n), rho: label.rho.clone(), lam, lam_prime, eps_flag: label.eps_flag }
}

/// Which staircase to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CuspKind {
    /// The unipotent cuspidal of `Sp_{2k(k+1)}`.
    Sp,
    /// One of the two unipotent cuspidals of `O^ε_{2k²}`, `ε = (−1)^k`.
    OEven,
    /// The unipotent cuspidal symbol of `O_{2k(k+1)+1}`.
    OOdd,
}

/// `(2k, …, 0 | ∅)` or its transpose (`Sp`, `OOdd`); `(2k−1, …, 0 | ∅)`
/// (`OEven`).
pub fn cuspidal_symbol(kind: CuspKind, k: u32) -> Symbol {
    let staircase = |top: u32| -> Vec<u32> { (0..top).rev().collect() };
    match kind {
        CuspKind::Sp | CuspKind::OOdd => {
            let row = staircase(2 * k + 1);
            let s = Symbol::normalize(row, Vec::new()).expect("staircase");
            if k % 2 == 0 {
                s
            } else {
                s.transpose()
            }
        }
        CuspKind::OEven => Symbol::normalize(staircase(2 * k), Vec::new()).expect("staircase"),
    }
}

/// True iff `s` is the staircase symbol of its defect, i.e. its bipartition
/// is empty, and its defect belongs to `family`.
pub fn is_unipotent_cuspidal(s: &Symbol, family: SymbolFamily) -> bool {
    family.admits(s.defect()) && s.upsilon() == Bipartition::default()
}

/// By convention the symbol with bipartition `([], [1^n])` and defect 1 is
/// treated as the regular (Steinberg) representation of `Sp_{2n}`.
pub fn steinberg_symbol(n: u32) -> Symbol {
    let ones = Partition::new(vec![1; n as usize]).expect("constant parts");
    Symbol::from_upsilon(&Bipartition::new(Partition::empty(), ones), 1)
}

/// Convention: true exactly for the symbols returned by [`steinberg_symbol`].
pub fn is_regular_unipotent(s: &Symbol) -> bool {
    s.defect() == 1 && *s == steinberg_symbol(s.rank())
}

/// Twists acting on labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    /// Tensoring with the sign character of an orthogonal group.
    Sgn,
    /// Tensoring with the character that exchanges the two parts.
    Chi,
    /// Conjugation by the similitude group.
    Conj,
}

impl Twist {
    fn name(self) -> &'static str {
        match self {
            Twist::Sgn => "sgn",
            Twist::Chi => "chi",
            Twist::Conj => "conj",
        }
    }
}

pub fn twist_label(label: &RepLabel, twist: Twist) -> Result<RepLabel, LabelError> {
    let mut out = label.clone();
    match (label.group, twist) {
        (GroupTag::OEven { .. }, Twist::Sgn) => {
            out.lam = label.lam.transpose();
            out.lam_prime = label.lam_prime.transpose();
        }
        (GroupTag::OOdd { .. }, Twist::Sgn) => out.eps_flag = label.eps_flag.map(|e| -e),
        (GroupTag::OEven { .. } | GroupTag::OOdd { .. }, Twist::Chi) => {
            std::mem::swap(&mut out.lam, &mut out.lam_prime);
        }
        (GroupTag::Sp { .. } | GroupTag::OEven { .. }, Twist::Conj) => out.lam_prime = label.lam_prime.transpose(),
        (group, twist) => return Err(LabelError::InapplicableTwist { twist: twist.name(), group: group.to_string() }),
    }
    Ok(out)
}

/// All valid labels of `group` whose `ρ` is drawn from `catalog`, in
/// canonical order.
pub fn enumerate_labels(group: GroupTag, catalog: &[RhoDescriptor]) -> Vec<RepLabel> {
    let n = group.rank();
    let (fam, fam_prime): (&[SymbolFamily], &[SymbolFamily]) = match group {
        GroupTag::Sp { .. } => (&[SymbolFamily::SpUnipotent], &[SymbolFamily::OEvenPlus, SymbolFamily::OEvenMinus]),
        GroupTag::OEven { .. } => {
            (&[SymbolFamily::OEvenPlus, SymbolFamily::OEvenMinus], &[SymbolFamily::OEvenPlus, SymbolFamily::OEvenMinus])
        }
        GroupTag::OOdd { .. } => (&[SymbolFamily::SpUnipotent], &[SymbolFamily::SpUnipotent]),
    };
    let symbols = |rank: u32, families: &[SymbolFamily]| -> Vec<Symbol> {
        families.iter().flat_map(|f| crate::combinatorics::enumerate_symbols(rank, *f)).collect()
    };
    let flags: &[Option<Sign>] =
        if matches!(group, GroupTag::OOdd { .. }) { &[Some(Sign::Plus), Some(Sign::Minus)] } else { &[None] };
    let mut out = Vec::new();
    for rho in catalog.iter().filter(|r| r.glu_rank <= n) {
        let rest = n - rho.glu_rank;
        for a in 0..=rest {
            let primes = symbols(rest - a, fam_prime);
            for lam in symbols(a, fam) {
                for lam_prime in &primes {
                    for &eps in flags {
                        if let Ok(label) = make_label(group, rho.clone(), lam.clone(), lam_prime.clone(), eps) {
                            out.push(label);
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    out
}
