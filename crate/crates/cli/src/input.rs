use std::fmt;
use std::io::Read;

use suppos_core::{MonomialIdeal, Poset, SigmaCollection, SupportFamily};

/// Errors reported by the binary.
#[derive(Debug)]
pub enum CliError {
    /// A library error; exit status 1.
    Domain(suppos_core::Error),
    /// Unreadable or unwritable files; exit status 1.
    Io(String),
    /// Arguments that parse but do not fit together; exit status 2.
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) | CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "error[{}]: {e}", e.code()),
            CliError::Io(m) => write!(f, "error[IO]: {m}"),
            CliError::Usage(m) => write!(f, "error[USAGE]: {m}"),
        }
    }
}

impl From<suppos_core::Error> for CliError {
    fn from(e: suppos_core::Error) -> Self {
        CliError::Domain(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Contents of `arg`: stdin for `-`, the text itself when it looks inline,
/// otherwise the named file.
pub fn read_source(arg: &str, inline_marker: &[&str]) -> CliResult<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    let trimmed = arg.trim_start();
    if inline_marker.iter().any(|m| trimmed.starts_with(m)) {
        return Ok(arg.replace("\\n", "\n"));
    }
    std::fs::read_to_string(arg).map_err(|e| CliError::Io(format!("{arg}: {e}")))
}

pub fn read_ideal(arg: &str) -> CliResult<MonomialIdeal> {
    Ok(read_source(arg, &["vars:"])?.parse()?)
}

pub fn read_poset(arg: &str) -> CliResult<Poset> {
    Ok(read_source(arg, &["elements:"])?.parse()?)
}

pub fn read_family(arg: &str) -> CliResult<SupportFamily> {
    Ok(SupportFamily::from_json(&read_source(arg, &["{"])?)?)
}

pub fn read_sigma(arg: &str) -> CliResult<SigmaCollection> {
    Ok(SigmaCollection::from_json(&read_source(arg, &["["])?)?)
}

/// Writes `text` to `path`, or returns it for stdout when `path` is `-`.
pub fn write_or_return(path: &str, text: String) -> CliResult<Option<String>> {
    if path == "-" {
        return Ok(Some(text));
    }
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    Ok(None)
}
