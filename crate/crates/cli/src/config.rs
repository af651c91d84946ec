use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use shv_core::algebra::Half;
use shv_core::scalars::Rational;

/// Hard cap on `--max-degree`.
pub const DEGREE_CAP: Half = Half(12);

#[derive(Parser, Debug, Clone)]
#[command(name = "shv", version, about = "Exact checks for the N=1 super Heisenberg-Virasoro algebra at level zero")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandName,
    #[command(flatten)]
    pub args: Args,
}

#[derive(Subcommand, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandName {
    /// Super-antisymmetry and super-Jacobi for the bracket table
    Relations,
    /// Free-field realization on F_{p,r}
    Realize,
    /// Singular vector formulas and screening families
    Singular,
    /// Subsingular vectors for odd p > 0
    Subsingular,
    /// Simple characters against the Gram rank
    Char,
    /// Vanishing locus of the Gram determinant in p
    Det,
    /// Embedding diagram of V[p,r]
    Diagram,
    /// Full acceptance battery
    Acceptance,
}

impl CommandName {
    pub fn name(self) -> &'static str {
        match self {
            CommandName::Relations => "relations",
            CommandName::Realize => "realize",
            CommandName::Singular => "singular",
            CommandName::Subsingular => "subsingular",
            CommandName::Char => "char",
            CommandName::Det => "det",
            CommandName::Diagram => "diagram",
            CommandName::Acceptance => "acceptance",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Specialized,
    Symbolic,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Args {
    /// Weight label p, as "a/b"
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    pub p: String,
    /// Weight label r, as "a/b"
    #[arg(long, global = true, default_value = "1/3", allow_hyphen_values = true)]
    pub r: String,
    #[arg(long = "cL", global = true, default_value = "11/2", allow_hyphen_values = true)]
    pub cl: String,
    #[arg(long = "cLa", global = true, default_value = "2/3", allow_hyphen_values = true)]
    pub cla: String,
    /// Only level zero is supported
    #[arg(long = "cA", global = true, default_value = "0", allow_hyphen_values = true)]
    pub ca: String,
    /// Truncation degree, as "n" or "n/2"
    #[arg(long = "max-degree", global = true, default_value = "4")]
    pub max_degree: String,
    #[arg(long, value_enum, global = true, default_value_t = Mode::Specialized)]
    pub mode: Mode,
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long = "cache-dir", global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Corrupt [L(2), L(-2)] in the bracket table
    #[arg(long = "inject-fault", global = true, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct ConfigError(pub String);

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandName,
    pub p: Rational,
    pub r: Rational,
    pub cl: Rational,
    pub cla: Rational,
    pub ca: Rational,
    pub max_degree: Half,
    pub mode: Mode,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub inject_fault: bool,
}

fn rational(flag: &str, s: &str) -> Result<Rational, ConfigError> {
    s.trim().parse().map_err(|_| ConfigError(format!("--{flag}: expected a rational \"a/b\", got {s:?}")))
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, ConfigError> {
        let a = &cli.args;
        let cfg = RunConfig {
            command: cli.command,
            p: rational("p", &a.p)?,
            r: rational("r", &a.r)?,
            cl: rational("cL", &a.cl)?,
            cla: rational("cLa", &a.cla)?,
            ca: rational("cA", &a.ca)?,
            max_degree: Half::from_rational(&rational("max-degree", &a.max_degree)?)
                .ok_or_else(|| ConfigError(format!("--max-degree: expected a half-integer, got {:?}", a.max_degree)))?,
            mode: a.mode,
            format: a.format,
            out: a.out.clone(),
            cache_dir: a.cache_dir.clone(),
            inject_fault: a.inject_fault,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Defaults for `command`, as if no flags were given.
    pub fn defaults(command: CommandName) -> Self {
        let cli = Cli::parse_from(["shv", command.name()]);
        RunConfig::from_cli(&cli).expect("defaults are valid")
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.cla.is_zero() {
            return Err(ConfigError("--cLa must be nonzero".into()));
        }
        if !self.ca.is_zero() {
            return Err(ConfigError("--cA: only level zero (cA = 0) is supported".into()));
        }
        if self.max_degree.0 < 0 || self.max_degree > DEGREE_CAP {
            return Err(ConfigError(format!("--max-degree must lie in [0, {DEGREE_CAP}]")));
        }
        Ok(())
    }

    /// `p` as an integer, for commands that need one.
    pub fn p_integer(&self) -> Result<i64, ConfigError> {
        if self.p.is_integer() {
            self.p.to_i64().ok_or_else(|| ConfigError("--p out of range".into()))
        } else {
            Err(ConfigError(format!("{} needs an integer --p, got {}", self.command.name(), self.p)))
        }
    }

    pub fn params(&self) -> BTreeMap<String, String> {
        BTreeMap::from([
            ("p".to_string(), self.p.to_string()),
            ("r".to_string(), self.r.to_string()),
            ("cL".to_string(), self.cl.to_string()),
            ("cLa".to_string(), self.cla.to_string()),
            ("cA".to_string(), self.ca.to_string()),
            ("max_degree".to_string(), self.max_degree.to_string()),
            ("mode".to_string(), format!("{:?}", self.mode).to_lowercase()),
        ])
    }
}
