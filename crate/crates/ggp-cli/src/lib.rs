//! The `ggp` command line: enumeration, theta lifts, branching
//! multiplicities and verification suites over the `ggp-symbols` library.
//!
//! [`run`] parses arguments and executes a verb without touching the process
//! state, returning the exit code and both output streams; the binary only
//! prints them.

pub mod cache;
pub mod table;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ggp_symbols::catalog::{GroupTag, RepLabel, RhoDescriptor};
use ggp_symbols::combinatorics::{Sign, Symbol, SymbolFamily};
use ggp_symbols::error::CombinatoricsError;
use ggp_symbols::ggp::{branch_decomposition, ggp_multiplicity, CaseKind, GGPCase, GgpContext, Multiplicity};
use ggp_symbols::oracle::{verify_counts, verify_f1, verify_variant_uniqueness, VerificationReport};
use ggp_symbols::theta::{
    cuspidal_theta, first_occurrence_supported, first_occurrence_unipotent, in_g, theta_fiber, theta_fiber_to_sp,
    CuspVariant, Direction, FirstOccurrence, Lift, Tower, TowerContext,
};

pub use table::{Format, Table};

/// Exit status of a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status for usage and domain errors.
pub const EXIT_ERROR: i32 = 1;
/// Exit status for a failed verification suite.
pub const EXIT_VERIFICATION_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ggp", version, about = "Symbol combinatorics of branching problems for finite Sp and O groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

/// A sign flag value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    #[value(name = "+")]
    Plus,
    #[value(name = "-")]
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    SpToO,
    OToSp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TowerArg {
    Sp,
    #[value(name = "oeven+")]
    OEvenPlus,
    #[value(name = "oeven-")]
    OEvenMinus,
    #[value(name = "oodd+")]
    OOddPlus,
    #[value(name = "oodd-")]
    OOddMinus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Down,
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Bessel,
    #[value(name = "fj")]
    FourierJacobi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    F1,
    Counts,
    Variants,
}

/// The square class of `−1`, given directly or through the field size.
#[derive(Clone, Debug, Args)]
pub struct FieldArgs {
    /// The square class of −1 in the base field.
    #[arg(long, value_enum, conflicts_with = "q", allow_hyphen_values = true)]
    pub eps_minus_one: Option<SignArg>,
    /// The size of the base field, an odd prime power.
    #[arg(long)]
    pub q: Option<u64>,
}

/// Orientation signs of the two labels of a multiplicity problem.
#[derive(Clone, Debug, Args)]
pub struct OrientationArgs {
    /// Orientation sign of the left (or source) label.
    #[arg(long, value_enum, allow_hyphen_values = true)]
    pub orient_left: Option<SignArg>,
    /// Orientation sign of the right (or target) labels.
    #[arg(long, value_enum, allow_hyphen_values = true)]
    pub orient_right: Option<SignArg>,
    /// Do not assert that the eigenvalue data of the two ρ descriptors are
    /// disjoint.
    #[arg(long)]
    pub no_disjoint_eigenvalues: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the symbols of a family and rank in canonical order.
    SymbolsEnumerate {
        /// One of sp, oeven+, oeven-, oodd.
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: u32,
        /// Skip the on-disk cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// List the symbols paired with a symbol at a given rank of a tower.
    ThetaFiber {
        #[arg(long)]
        symbol: String,
        #[arg(long, value_enum, allow_hyphen_values = true)]
        sign: SignArg,
        /// Rank of the target group.
        #[arg(long)]
        rank: u32,
        #[arg(long, value_enum, default_value_t = DirectionArg::SpToO)]
        direction: DirectionArg,
    },
    /// First occurrence of a unipotent symbol (`--symbol`) or of a label
    /// supported on cuspidal staircases (`--label`).
    ThetaFirst {
        #[arg(long, conflicts_with = "label", required_unless_present = "label")]
        symbol: Option<String>,
        /// Tower sign, for `--symbol`.
        #[arg(long, value_enum, allow_hyphen_values = true, requires = "symbol")]
        sign: Option<SignArg>,
        #[arg(long, value_enum, requires = "symbol")]
        direction: Option<DirectionArg>,
        #[arg(long)]
        label: Option<String>,
        /// Target tower, for `--label`.
        #[arg(long, value_enum, requires = "label")]
        tower: Option<TowerArg>,
        /// Orientation sign of the label.
        #[arg(long, value_enum, allow_hyphen_values = true, requires = "label")]
        orientation: Option<SignArg>,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// The cuspidal unipotent theta pair of index k.
    ThetaCuspidal {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Down)]
        variant: VariantArg,
    },
    /// The multiplicity of one pair of labels.
    GgpMult {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long = "case", value_enum)]
        case_kind: CaseArg,
        /// The Fourier–Jacobi twist; defaults to the square class of −1.
        #[arg(long, value_enum, allow_hyphen_values = true)]
        eps_zero: Option<SignArg>,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        orientation: OrientationArgs,
    },
    /// The constituents of the restriction of a unipotent label.
    GgpBranch {
        #[arg(long)]
        pi: String,
        #[arg(long)]
        target: String,
        /// Descriptors `id:rank[:reg]` for the ρ of candidate constituents;
        /// defaults to one regular descriptor per rank.
        #[arg(long = "rho")]
        rho: Vec<String>,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        orientation: OrientationArgs,
    },
    /// Run a verification suite; exits with status 2 on failure.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_rank: u32,
        /// Restrict the variants suite to one problem.
        #[arg(long = "case", value_enum)]
        case_kind: Option<CaseArg>,
        /// Restrict the variants suite to one square class of −1.
        #[command(flatten)]
        field: FieldArgs,
    },
}

/// The result of a run: exit status and the two output streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failure naming the flag responsible.
#[derive(Debug)]
struct Failure {
    flag: &'static str,
    message: String,
}

fn fail(flag: &'static str, error: impl std::fmt::Display) -> Failure {
    Failure { flag, message: error.to_string() }
}

/// Parses a symbol in the `[a,…|b,…]` grammar and normalizes it.
pub fn parse_symbol(text: &str) -> Result<Symbol, CombinatoricsError> {
    text.parse()
}

fn is_odd_prime_power(q: u64) -> bool {
    if q < 3 || q % 2 == 0 {
        return false;
    }
    let p = (3..).step_by(2).find(|p| q % p == 0 || p * p > q).map(|p| if q % p == 0 { p } else { q }).unwrap_or(q);
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
    }
    rest == 1
}

impl FieldArgs {
    fn resolve(&self) -> Result<Option<Sign>, Failure> {
        match (self.eps_minus_one, self.q) {
            (Some(s), _) => Ok(Some(s.into())),
            (None, Some(q)) if is_odd_prime_power(q) => Ok(Sign::eps_minus_one_for_q(q)),
            (None, Some(q)) => Err(fail("--q", format!("{q} is not an odd prime power"))),
            (None, None) => Ok(None),
        }
    }

    fn require(&self) -> Result<Sign, Failure> {
        self.resolve()?.ok_or_else(|| fail("--eps-minus-one", "one of --eps-minus-one or --q is required"))
    }
}

impl OrientationArgs {
    fn context(&self, eps_minus_one: Sign) -> GgpContext {
        GgpContext {
            eps_minus_one,
            orient_left: self.orient_left.map(Sign::from),
            orient_right: self.orient_right.map(Sign::from),
            disjoint_eigenvalues: !self.no_disjoint_eigenvalues,
        }
    }
}

fn parse_flag<T: std::str::FromStr>(flag: &'static str, text: &str) -> Result<T, Failure>
where
    T::Err: std::fmt::Display,
{
    text.parse().map_err(|e| fail(flag, e))
}

fn symbol_flag(text: &str) -> Result<Symbol, Failure> {
    parse_symbol(text).map_err(|e| fail("--symbol", e))
}

fn lift_text(lift: &Option<Lift>) -> Value {
    match lift {
        None => Value::Null,
        Some(Lift::Symbol(x)) => Value::String(x.to_string()),
        Some(Lift::Support(s)) => {
            let signed = |v: i32, up_to_sign: bool| if up_to_sign && v != 0 { format!("±{v}") } else { v.to_string() };
            Value::String(format!(
                "{} ; rho={} ; k={} ; h={}",
                s.group,
                s.rho,
                signed(s.kh.k, s.k_up_to_sign),
                signed(s.kh.h, s.h_up_to_sign)
            ))
        }
    }
}

fn first_occurrence_table(fo: &FirstOccurrence) -> Table {
    let mut table = Table::new(&["index", "lift", "resolved"]);
    table.push(vec![json!(fo.index), lift_text(&fo.lift), json!(fo.resolved)]);
    table
}

fn multiplicity_cells(m: &Multiplicity) -> [Value; 2] {
    [Value::String(m.to_string()), Value::String(m.status().to_string())]
}

fn report_table(rows: &[(String, VerificationReport)], format: Format) -> (Table, bool) {
    let passing = rows.iter().all(|(_, r)| r.is_passing());
    let mut table = if format == Format::Json {
        Table::new(&["suite", "checked", "failures", "elapsed_ms"])
    } else {
        Table::new(&["suite", "checked", "failures", "first_failure"])
    };
    for (name, report) in rows {
        let last = if format == Format::Json {
            json!(report.elapsed_ms)
        } else {
            report.failures.first().map_or(Value::Null, |f| {
                Value::String(format!("{}: expected {}, got {}", f.input, f.expected, f.actual))
            })
        };
        let failures = if format == Format::Json {
            serde_json::to_value(&report.failures).expect("failures serialize")
        } else {
            json!(report.failures.len())
        };
        table.push(vec![json!(name), json!(report.checked), failures, last]);
    }
    (table, passing)
}

/// Executes a parsed command, returning the table and whether verification
/// passed.
fn execute(command: &Command, format: Format) -> Result<(Table, bool), Failure> {
    match command {
        Command::SymbolsEnumerate { family, rank, no_cache } => {
            let family: SymbolFamily = parse_flag("--family", family)?;
            let dir = (!no_cache).then(cache::cache_dir);
            let (symbols, _) = cache::cached_symbols(dir.as_deref(), family, *rank);
            let mut table = Table::new(&["symbol", "rank", "defect", "upsilon"]);
            for x in symbols {
                table.push(vec![json!(x.to_string()), json!(x.rank()), json!(x.defect()), json!(x.upsilon().to_string())]);
            }
            Ok((table, true))
        }
        Command::ThetaFiber { symbol, sign, rank, direction } => {
            let x = symbol_flag(symbol)?;
            let sign = Sign::from(*sign);
            let fiber = match direction {
                DirectionArg::SpToO => theta_fiber(&x, sign, *rank),
                DirectionArg::OToSp => theta_fiber_to_sp(&x, sign, *rank),
            }
            .map_err(|e| fail("--symbol", e))?;
            let mut table = Table::new(&["symbol", "rank", "defect", "g_variant"]);
            for y in fiber {
                let variant = match direction {
                    DirectionArg::SpToO => in_g(&x, &y),
                    DirectionArg::OToSp => in_g(&y, &x),
                };
                let variant = variant.map_or(Value::Null, |v| json!(v.to_string()));
                table.push(vec![json!(y.to_string()), json!(y.rank()), json!(y.defect()), variant]);
            }
            Ok((table, true))
        }
        Command::ThetaFirst { symbol, sign, direction, label, tower, orientation, field } => {
            if let Some(symbol) = symbol {
                let x = symbol_flag(symbol)?;
                let sign = sign.ok_or_else(|| fail("--sign", "required with --symbol"))?;
                let direction = match direction.ok_or_else(|| fail("--direction", "required with --symbol"))? {
                    DirectionArg::SpToO => Direction::SpToO,
                    DirectionArg::OToSp => Direction::OToSp,
                };
                let fo = first_occurrence_unipotent(&x, sign.into(), direction).map_err(|e| fail("--symbol", e))?;
                return Ok((first_occurrence_table(&fo), true));
            }
            let label: RepLabel = parse_flag("--label", label.as_deref().unwrap_or_default())?;
            let tower = match tower.ok_or_else(|| fail("--tower", "required with --label"))? {
                TowerArg::Sp => Tower::Sp,
                TowerArg::OEvenPlus => Tower::OEvenPlus,
                TowerArg::OEvenMinus => Tower::OEvenMinus,
                TowerArg::OOddPlus => Tower::OOddPlus,
                TowerArg::OOddMinus => Tower::OOddMinus,
            };
            let ctx = TowerContext { eps_minus_one: field.require()?, tower, orientation: orientation.map(Sign::from) };
            let fo = first_occurrence_supported(&label, &ctx).map_err(|e| fail("--label", e))?;
            Ok((first_occurrence_table(&fo), true))
        }
        Command::ThetaCuspidal { k, variant } => {
            let variant = match variant {
                VariantArg::Down => CuspVariant::Down,
                VariantArg::Up => CuspVariant::Up,
            };
            let (lam, lam_prime, sign) = cuspidal_theta(*k, variant);
            let mut table = Table::new(&["sp_symbol", "o_symbol", "o_rank", "tower_sign"]);
            table.push(vec![
                json!(lam.to_string()),
                json!(lam_prime.to_string()),
                json!(lam_prime.rank()),
                json!(sign.to_string()),
            ]);
            Ok((table, true))
        }
        Command::GgpMult { left, right, case_kind, eps_zero, field, orientation } => {
            let left: RepLabel = parse_flag("--left", left)?;
            let right: RepLabel = parse_flag("--right", right)?;
            let case = match case_kind {
                CaseArg::Bessel => GGPCase::bessel(),
                CaseArg::FourierJacobi => GGPCase {
                    kind: CaseKind::FourierJacobi,
                    eps_zero: eps_zero.map(Sign::from),
                    symmetrize: true,
                },
            };
            let ctx = orientation.context(field.require()?);
            let m = ggp_multiplicity(&left, &right, &case, &ctx).map_err(|e| fail("--case", e))?;
            let mut table = Table::new(&["left", "right", "multiplicity", "status"]);
            let [mult, status] = multiplicity_cells(&m);
            table.push(vec![json!(left.to_string()), json!(right.to_string()), mult, status]);
            Ok((table, true))
        }
        Command::GgpBranch { pi, target, rho, field, orientation } => {
            let pi: RepLabel = parse_flag("--pi", pi)?;
            let target: GroupTag = parse_flag("--target", target)?;
            let catalog = if rho.is_empty() {
                RhoDescriptor::default_catalog(target.rank())
            } else {
                rho.iter().map(|r| parse_flag("--rho", r)).collect::<Result<Vec<RhoDescriptor>, _>>()?
            };
            let ctx = orientation.context(field.require()?);
            let rows = branch_decomposition(&pi, target, &ctx, &catalog).map_err(|e| fail("--target", e))?;
            let mut table = Table::new(&["label", "multiplicity", "status"]);
            for (label, m) in rows {
                let [mult, status] = multiplicity_cells(&m);
                table.push(vec![json!(label.to_string()), mult, status]);
            }
            Ok((table, true))
        }
        Command::Verify { suite, max_rank, case_kind, field } => {
            let rows = match suite {
                Suite::F1 => vec![("f1".to_string(), verify_f1(*max_rank))],
                Suite::Counts => vec![("counts".to_string(), verify_counts(*max_rank))],
                Suite::Variants => {
                    let kinds = match case_kind {
                        Some(CaseArg::Bessel) => vec![CaseKind::Bessel],
                        Some(CaseArg::FourierJacobi) => vec![CaseKind::FourierJacobi],
                        None => vec![CaseKind::FourierJacobi, CaseKind::Bessel],
                    };
                    let signs = field.resolve()?.map_or(Sign::BOTH.to_vec(), |s| vec![s]);
                    let mut rows = Vec::new();
                    for kind in kinds {
                        for &eps in &signs {
                            let name = format!("variants {} eps-1={eps}", match kind {
                                CaseKind::Bessel => "bessel",
                                CaseKind::FourierJacobi => "fj",
                            });
                            rows.push((name, verify_variant_uniqueness(*max_rank, kind, eps)));
                        }
                    }
                    rows
                }
            };
            Ok(report_table(&rows, format))
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command, cli.format) {
        Ok((table, passing)) => Outcome {
            code: if passing { EXIT_OK } else { EXIT_VERIFICATION_FAILED },
            stdout: table.render(cli.format),
            stderr: String::new(),
        },
        Err(Failure { flag, message }) => {
            Outcome { code: EXIT_ERROR, stdout: String::new(), stderr: format!("error: {flag}: {message}\n") }
        }
    }
}
