//! On-disk cache of symbol enumerations.
//!
//! One JSON file per `(family, rank)` holds the library version, the
//! enumerated symbols in canonical order and a SHA-256 checksum of the
//! serialized symbol list. Entries with a different version, mismatched key
//! or bad checksum are treated as misses and rewritten. Writes go to a
//! temporary file in the cache directory that is then renamed into place.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use ggp_symbols::combinatorics::{enumerate_symbols, Symbol, SymbolFamily};

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_VAR: &str = "GGP_SYMBOLS_CACHE_DIR";

/// A cached enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: String,
    pub family: String,
    pub rank: u32,
    pub symbols: Vec<String>,
    pub checksum: String,
}

/// Whether an enumeration was served from disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    Hit,
    Miss,
    Disabled,
}

fn checksum(symbols: &[String]) -> String {
    let payload = serde_json::to_string(symbols).expect("strings serialize");
    hex::encode(Sha256::digest(payload.as_bytes()))
}

/// The cache directory: the override variable, else the user cache
/// directory, else the system temporary directory.
pub fn cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_DIR_VAR) {
        return PathBuf::from(dir);
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|home| PathBuf::from(home).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("ggp-symbols")
}

pub fn entry_path(dir: &Path, family: SymbolFamily, rank: u32) -> PathBuf {
    let name = match family {
        SymbolFamily::SpUnipotent => "sp",
        SymbolFamily::OEvenPlus => "oeven-plus",
        SymbolFamily::OEvenMinus => "oeven-minus",
        SymbolFamily::OOdd => "oodd",
    };
    dir.join(format!("{name}-{rank}.json"))
}

impl CacheEntry {
    pub fn new(family: SymbolFamily, rank: u32, symbols: &[Symbol]) -> CacheEntry {
        let symbols: Vec<String> = symbols.iter().map(Symbol::to_string).collect();
        CacheEntry {
            version: ggp_symbols::VERSION.to_string(),
            family: family.to_string(),
            rank,
            checksum: checksum(&symbols),
            symbols,
        }
    }

    /// The symbols, if the entry is current, matches the key and its
    /// checksum validates.
    fn validate(&self, family: SymbolFamily, rank: u32) -> Option<Vec<Symbol>> {
        let current = self.version == ggp_symbols::VERSION && self.family == family.name() && self.rank == rank;
        if !current || self.checksum != checksum(&self.symbols) {
            return None;
        }
        self.symbols.iter().map(|s| s.parse().ok()).collect()
    }
}

fn read(path: &Path, family: SymbolFamily, rank: u32) -> Option<Vec<Symbol>> {
    let text = std::fs::read_to_string(path).ok()?;
    serde_json::from_str::<CacheEntry>(&text).ok()?.validate(family, rank)
}

fn write(dir: &Path, path: &Path, entry: &CacheEntry) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut file = tempfile::NamedTempFile::new_in(dir)?;
    file.write_all(serde_json::to_string_pretty(entry).expect("entries serialize").as_bytes())?;
    file.write_all(b"\n")?;
    file.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Enumerates the symbols of `family` and `rank`, reading from and filling
/// the cache in `dir` when given. Failures to write the cache are reported
/// on standard error and otherwise ignored.
pub fn cached_symbols(dir: Option<&Path>, family: SymbolFamily, rank: u32) -> (Vec<Symbol>, CacheOutcome) {
    let Some(dir) = dir else {
        return (enumerate_symbols(rank, family), CacheOutcome::Disabled);
    };
    let path = entry_path(dir, family, rank);
    if let Some(symbols) = read(&path, family, rank) {
        return (symbols, CacheOutcome::Hit);
    }
    let symbols = enumerate_symbols(rank, family);
    if let Err(e) = write(dir, &path, &CacheEntry::new(family, rank, &symbols)) {
        eprintln!("warning: could not write cache file {}: {e}", path.display());
    }
    (symbols, CacheOutcome::Miss)
}
