//! Partitions, bipartitions and symbols.
//!
//! A *symbol* is a pair of strictly decreasing rows of nonnegative integers,
//! taken up to the shift `(A | B) ~ (A + 1, 0 | B + 1, 0)`. Every value of
//! [`Symbol`] is stored in its reduced form (the two rows never both contain
//! `0`), so structural equality is equality of classes.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use crate::error::CombinatoricsError;

/// A sign `±`, used for tower signs, orthogonal group signs and flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    /// `+1` or `-1`.
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// The sign of `(-1)^e`.
    pub fn parity(e: i64) -> Sign {
        if e.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// The sign of a nonzero integer; `+` for zero.
    pub fn of(x: i64) -> Sign {
        if x < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// The square class of `-1` in a field with `q` elements (`q` odd):
    /// `+` iff `q ≡ 1 mod 4`.
    pub fn eps_minus_one_for_q(q: u64) -> Option<Sign> {
        match q % 4 {
            1 => Some(Sign::Plus),
            3 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = CombinatoricsError;
    fn from_str(s: &str) -> Result<Sign, CombinatoricsError> {
        match s.trim() {
            "+" | "+1" | "plus" => Ok(Sign::Plus),
            "-" | "-1" | "minus" => Ok(Sign::Minus),
            other => Err(CombinatoricsError::Parse {
                offset: 0,
                message: format!("expected `+` or `-`, found `{other}`"),
            }),
        }
    }
}

/// A partition: a weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are
    /// dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition, CombinatoricsError> {
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::NotWeaklyDecreasing { index: index + 1 });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `i`-th part counting from zero, with implicit trailing zeros.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The largest part (zero for the empty partition).
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// The conjugate partition.
    pub fn transpose(&self) -> Partition {
        let columns = self.first() as usize;
        Partition((0..columns).map(|c| self.0.iter().filter(|&&x| x as usize > c).count() as u32).collect())
    }

    /// The partition with its largest part removed.
    pub fn without_first(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

/// All partitions of `n`, in reverse lexicographic order (`[n]` first).
pub fn all_partitions(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// An ordered pair of partitions `(λ, μ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub upper: Partition,
    pub lower: Partition,
}

impl Bipartition {
    pub fn new(upper: Partition, lower: Partition) -> Bipartition {
        Bipartition { upper, lower }
    }

    pub fn size(&self) -> u32 {
        self.upper.size() + self.lower.size()
    }

    /// Exchanges the two partitions.
    pub fn swap(&self) -> Bipartition {
        Bipartition::new(self.lower.clone(), self.upper.clone())
    }
}

/// All bipartitions of total size `n`.
pub fn all_bipartitions(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        let lowers = all_partitions(n - a);
        for upper in all_partitions(a) {
            for lower in &lowers {
                out.push(Bipartition::new(upper.clone(), lower.clone()));
            }
        }
    }
    out
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.upper, self.lower)
    }
}

impl FromStr for Bipartition {
    type Err = CombinatoricsError;
    fn from_str(text: &str) -> Result<Bipartition, CombinatoricsError> {
        let mut cur = Cursor::new(text);
        cur.skip_ws();
        cur.expect(b'(')?;
        let upper = Partition::new(cur.bracketed_list(b'[', b']')?)?;
        cur.skip_ws();
        cur.expect(b',')?;
        let lower = Partition::new(cur.bracketed_list(b'[', b']')?)?;
        cur.skip_ws();
        cur.expect(b')')?;
        cur.finish()?;
        Ok(Bipartition::new(upper, lower))
    }
}

/// The symbol families classifying unipotent representations, selected by
/// the residue of the defect modulo 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymbolFamily {
    /// Defect `≡ 1 mod 4`: symplectic groups.
    SpUnipotent,
    /// Defect `≡ 0 mod 4`: split even orthogonal groups.
    OEvenPlus,
    /// Defect `≡ 2 mod 4`: non-split even orthogonal groups.
    OEvenMinus,
    /// Defect `≡ 1 mod 4` together with a `±` flag: odd orthogonal groups.
    OOdd,
}

impl SymbolFamily {
    pub const ALL: [SymbolFamily; 4] =
        [SymbolFamily::SpUnipotent, SymbolFamily::OEvenPlus, SymbolFamily::OEvenMinus, SymbolFamily::OOdd];

    /// The admissible residue of the defect modulo 4.
    pub fn residue(self) -> i32 {
        match self {
            SymbolFamily::SpUnipotent | SymbolFamily::OOdd => 1,
            SymbolFamily::OEvenPlus => 0,
            SymbolFamily::OEvenMinus => 2,
        }
    }

    pub fn admits(self, defect: i32) -> bool {
        defect.rem_euclid(4) == self.residue()
    }

    /// The family whose residue class contains `defect`; odd defects are
    /// reported as symplectic.
    pub fn for_defect(defect: i32) -> SymbolFamily {
        match defect.rem_euclid(4) {
            0 => SymbolFamily::OEvenPlus,
            2 => SymbolFamily::OEvenMinus,
            _ => SymbolFamily::SpUnipotent,
        }
    }

    /// The even family attached to a tower sign.
    pub fn even(sign: Sign) -> SymbolFamily {
        match sign {
            Sign::Plus => SymbolFamily::OEvenPlus,
            Sign::Minus => SymbolFamily::OEvenMinus,
        }
    }

    /// Short name used in text output.
    pub fn name(self) -> &'static str {
        match self {
            SymbolFamily::SpUnipotent => "sp",
            SymbolFamily::OEvenPlus => "oeven+",
            SymbolFamily::OEvenMinus => "oeven-",
            SymbolFamily::OOdd => "oodd",
        }
    }
}

impl fmt::Display for SymbolFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymbolFamily {
    type Err = CombinatoricsError;
    fn from_str(s: &str) -> Result<SymbolFamily, CombinatoricsError> {
        SymbolFamily::ALL.into_iter().find(|f| f.name() == s.trim()).ok_or_else(|| CombinatoricsError::Parse {
            offset: 0,
            message: format!("unknown family `{s}` (expected sp, oeven+, oeven-, oodd)"),
        })
    }
}

/// A reduced symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symbol {
    a: Vec<u32>,
    b: Vec<u32>,
}

impl Symbol {
    /// The empty symbol `[|]`.
    pub fn empty() -> Symbol {
        Symbol { a: Vec::new(), b: Vec::new() }
    }

    /// Validates two rows and returns the reduced representative of their
    /// class.
    pub fn normalize(mut a: Vec<u32>, mut b: Vec<u32>) -> Result<Symbol, CombinatoricsError> {
        for (row, xs) in [(0, &a), (1, &b)] {
            if let Some(index) = xs.windows(2).position(|w| w[0] <= w[1]) {
                return Err(CombinatoricsError::NotStrictlyDecreasing { row, index: index + 1 });
            }
        }
        while a.last() == Some(&0) && b.last() == Some(&0) {
            a.pop();
            b.pop();
            a.iter_mut().for_each(|x| *x -= 1);
            b.iter_mut().for_each(|x| *x -= 1);
        }
        Ok(Symbol { a, b })
    }

    pub fn row_a(&self) -> &[u32] {
        &self.a
    }

    pub fn row_b(&self) -> &[u32] {
        &self.b
    }

    /// `Σ A + Σ B − ⌊((|A| + |B| − 1) / 2)²⌋`.
    pub fn rank(&self) -> u32 {
        let total: i64 = self.a.iter().chain(&self.b).map(|&x| x as i64).sum();
        let len = (self.a.len() + self.b.len()) as i64;
        (total - ((len - 1) * (len - 1)).div_euclid(4)) as u32
    }

    /// `|A| − |B|`.
    pub fn defect(&self) -> i32 {
        self.a.len() as i32 - self.b.len() as i32
    }

    /// Swaps the two rows.
    pub fn transpose(&self) -> Symbol {
        Symbol { a: self.b.clone(), b: self.a.clone() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.a == self.b
    }

    /// The bipartition obtained by subtracting the staircase from each row.
    pub fn upsilon(&self) -> Bipartition {
        fn row(xs: &[u32]) -> Partition {
            let m = xs.len();
            let parts = xs.iter().enumerate().map(|(i, &x)| x - (m - 1 - i) as u32).collect();
            Partition::new(parts).expect("staircase subtraction of a strictly decreasing row is weakly decreasing")
        }
        Bipartition::new(row(&self.a), row(&self.b))
    }

    /// The unique reduced symbol of the given defect whose image under
    /// [`Symbol::upsilon`] is `bp`.
    pub fn from_upsilon(bp: &Bipartition, defect: i32) -> Symbol {
        let (l1, l2) = (bp.upper.len() as i64, bp.lower.len() as i64);
        let d = defect as i64;
        // Minimal row lengths with m1 - m2 = d, m1 >= l1, m2 >= l2.
        let m1 = l1.max(l2 + d).max(d).max(0);
        let m2 = m1 - d;
        let row = |p: &Partition, m: i64| -> Vec<u32> {
            (0..m as usize).map(|i| p.part(i) + (m as usize - 1 - i) as u32).collect()
        };
        Symbol { a: row(&bp.upper, m1), b: row(&bp.lower, m2) }
    }

    /// Sort key used for every enumeration: `|defect|`, then the rows
    /// lexicographically.
    pub fn enumeration_key(&self) -> (u32, &[u32], &[u32]) {
        (self.defect().unsigned_abs(), &self.a, &self.b)
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Symbol) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Symbol) -> Ordering {
        self.enumeration_key().cmp(&other.enumeration_key())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        let join = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", join(&self.a), join(&self.b))?;
        f.write_str("]")
    }
}

impl FromStr for Symbol {
    type Err = CombinatoricsError;
    fn from_str(text: &str) -> Result<Symbol, CombinatoricsError> {
        let mut cur = Cursor::new(text);
        cur.skip_ws();
        cur.expect(b'[')?;
        let a = cur.list_until(b'|')?;
        cur.expect(b'|')?;
        let b = cur.list_until(b']')?;
        cur.expect(b']')?;
        cur.finish()?;
        Symbol::normalize(a, b)
    }
}

/// A tiny byte cursor shared by the text grammars.
pub(crate) struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Cursor<'a> {
        Cursor { bytes: text.as_bytes(), pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> CombinatoricsError {
        CombinatoricsError::Parse { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), CombinatoricsError> {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", byte as char)))
        }
    }

    fn finish(&mut self) -> Result<(), CombinatoricsError> {
        self.skip_ws();
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn number(&mut self) -> Result<u32, CombinatoricsError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a nonnegative integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| CombinatoricsError::Parse { offset: start, message: "integer out of range".into() })
    }

    /// A comma separated list of integers ending just before `end`.
    fn list_until(&mut self, end: u8) -> Result<Vec<u32>, CombinatoricsError> {
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek() == Some(end) {
            return Ok(out);
        }
        loop {
            out.push(self.number()?);
            self.skip_ws();
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b) if b == end => return Ok(out),
                _ => return Err(self.error(format!("expected `,` or `{}`", end as char))),
            }
        }
    }

    fn bracketed_list(&mut self, open: u8, close: u8) -> Result<Vec<u32>, CombinatoricsError> {
        self.expect(open)?;
        let xs = self.list_until(close)?;
        self.expect(close)?;
        Ok(xs)
    }
}

/// `f(β)`: the rank of the staircase symbol of defect `β`, i.e. the offset
/// between the rank of a symbol and the size of its bipartition.
pub fn defect_offset(beta: i32) -> u32 {
    let b = beta as i64;
    let v = if b.rem_euclid(2) == 1 { ((b + 1) / 2) * ((b - 1) / 2) } else { (b / 2) * (b / 2) };
    v as u32
}

/// Defects admitted by `family` whose staircase fits into rank `n`, ordered
/// by absolute value and then sign (negative first).
pub fn admissible_defects(n: u32, family: SymbolFamily) -> Vec<i32> {
    let mut out = Vec::new();
    let mut magnitude = 0i32;
    while defect_offset(magnitude) <= n {
        for beta in [-magnitude, magnitude] {
            if family.admits(beta) && !out.contains(&beta) {
                out.push(beta);
            }
        }
        magnitude += 1;
    }
    out
}

/// Conjugate partition.
pub fn partition_transpose(p: &Partition) -> Partition {
    p.transpose()
}

/// `λ ≼ μ`: `μ_i − 1 ≤ λ_i ≤ μ_i` for every `i` (zero padded).
pub fn close_dominates(lam: &Partition, mu: &Partition) -> bool {
    (0..lam.len().max(mu.len())).all(|i| {
        let (l, m) = (lam.part(i), mu.part(i));
        l <= m && l + 1 >= m
    })
}

pub fn symbol_rank(s: &Symbol) -> u32 {
    s.rank()
}

pub fn symbol_defect(s: &Symbol) -> i32 {
    s.defect()
}

pub fn symbol_normalize(a: Vec<u32>, b: Vec<u32>) -> Result<Symbol, CombinatoricsError> {
    Symbol::normalize(a, b)
}

pub fn symbol_transpose(s: &Symbol) -> Symbol {
    s.transpose()
}

pub fn upsilon(s: &Symbol) -> Bipartition {
    s.upsilon()
}

pub fn upsilon_inverse(bp: &Bipartition, defect: i32) -> Symbol {
    Symbol::from_upsilon(bp, defect)
}

/// Every reduced symbol of rank `n` in `family`, sorted by
/// [`Symbol::enumeration_key`].
pub fn enumerate_symbols(n: u32, family: SymbolFamily) -> Vec<Symbol> {
    let mut out: Vec<Symbol> = admissible_defects(n, family)
        .into_iter()
        .flat_map(|beta| {
            all_bipartitions(n - defect_offset(beta)).into_iter().map(move |bp| Symbol::from_upsilon(&bp, beta))
        })
        .collect();
    out.sort();
    out
}
