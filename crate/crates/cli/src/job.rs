use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, ValueEnum};
use rankweight::codes::{CodeParams, EntrySpec, LinearCode, DEFAULT_GUARD};
use rankweight::{FieldSpec, FieldTower};
use serde::Deserialize;

use crate::CliError;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Enumerate,
    Dual,
    Macwilliams,
    Moments,
    Mrd,
    Verify,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum MetricChoice {
    Rank,
    Hamming,
    #[default]
    Both,
}

impl MetricChoice {
    pub fn rank(self) -> bool {
        matches!(self, MetricChoice::Rank | MetricChoice::Both)
    }

    pub fn hamming(self) -> bool {
        matches!(self, MetricChoice::Hamming | MetricChoice::Both)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Generator rows, optionally with an explicit length for the zero code.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum CodeJson {
    Rows(Vec<Vec<EntrySpec>>),
    Full {
        #[serde(default)]
        field: Option<FieldSpec>,
        #[serde(default)]
        n: Option<usize>,
        generator: Vec<Vec<EntrySpec>>,
    },
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub q: Option<u64>,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub k: Option<u64>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub format: Option<Format>,
    pub guard: Option<u64>,
    pub workers: Option<usize>,
}

/// A job file. Every field may also be given, or overridden, by a flag.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Option<Command>,
    pub field: Option<FieldSpec>,
    pub code: Option<CodeJson>,
    pub metric: Option<MetricChoice>,
    pub nu: Option<u64>,
    #[serde(default)]
    pub params: Params,
    #[serde(default)]
    pub options: Options,
}

#[derive(Args, Debug, Default)]
pub struct JobArgs {
    /// Job file (JSON); flags override its fields
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Field as JSON, "p,m" or "p,s,m"; "@file" reads JSON from a file
    #[arg(long)]
    pub field: Option<String>,
    /// Generator rows as JSON, e.g. '[["1","a","1"],["1","a","0"]]'; "@file" reads a file
    #[arg(long)]
    pub generator: Option<String>,
    /// Complete code JSON {"field":..,"generator":..}; "@file" reads a file
    #[arg(long, conflicts_with = "generator")]
    pub code: Option<String>,
    #[arg(long, value_enum)]
    pub metric: Option<MetricChoice>,
    /// Single moment order (default: all 0..=n)
    #[arg(long)]
    pub nu: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    /// Maximum number of codewords to enumerate
    #[arg(long)]
    pub guard: Option<u64>,
    /// Enumeration worker threads
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

fn read_arg(value: &str) -> Result<String, CliError> {
    match value.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}"))),
        None => Ok(value.to_string()),
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

fn parse_field(value: &str) -> Result<FieldSpec, CliError> {
    let text = read_arg(value)?;
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        return parse_json("--field", trimmed);
    }
    let parts: Vec<u32> = trimmed
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| CliError::Parse(format!("--field: bad number {s:?}"))))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [p, m] => Ok(FieldSpec::new(p, 1, m)),
        [p, s, m] => Ok(FieldSpec::new(p, s, m)),
        _ => Err(CliError::Parse("--field expects JSON, \"p,m\" or \"p,s,m\"".into())),
    }
}

impl JobArgs {
    /// Merges the job file (if any) with the flags.
    pub fn into_spec(self) -> Result<JobSpec, CliError> {
        let mut spec = match &self.spec {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
                parse_json::<JobSpec>(&path.display().to_string(), &text)?
            }
            None => JobSpec::default(),
        };
        if let Some(f) = &self.field {
            spec.field = Some(parse_field(f)?);
        }
        if let Some(g) = &self.generator {
            spec.code = Some(CodeJson::Rows(parse_json("--generator", &read_arg(g)?)?));
        }
        if let Some(c) = &self.code {
            spec.code = Some(parse_json("--code", &read_arg(c)?)?);
        }
        spec.metric = self.metric.or(spec.metric);
        spec.nu = self.nu.or(spec.nu);
        spec.params.q = self.q.or(spec.params.q);
        spec.params.m = self.m.or(spec.params.m);
        spec.params.n = self.n.or(spec.params.n);
        spec.params.k = self.k.or(spec.params.k);
        spec.options.guard = self.guard.or(spec.options.guard);
        spec.options.workers = self.workers.or(spec.options.workers);
        spec.options.format = self.format.or(spec.options.format);
        Ok(spec)
    }
}

/// A job with its field and code built.
pub struct Job {
    pub command: Command,
    pub tower: Option<Arc<FieldTower>>,
    pub code: Option<LinearCode>,
    pub metric: Option<MetricChoice>,
    pub nu: Option<u64>,
    pub params: Params,
    pub guard: u128,
    pub workers: usize,
    pub format: Format,
}

impl Job {
    pub fn resolve(spec: JobSpec, command: Command) -> Result<Job, CliError> {
        let guard = spec.options.guard.unwrap_or(DEFAULT_GUARD as u64);
        if guard < 1 {
            return Err(CliError::Parse("guard must be at least 1".into()));
        }
        let workers = spec.options.workers.unwrap_or(1);
        if workers < 1 {
            return Err(CliError::Parse("workers must be at least 1".into()));
        }
        let (code_field, rows, n) = match spec.code {
            None => (None, None, None),
            Some(CodeJson::Rows(rows)) => (None, Some(rows), None),
            Some(CodeJson::Full { field, n, generator }) => (field, Some(generator), n),
        };
        let n = n.or(spec.params.n.map(|n| n as usize));
        let field = match (spec.field, code_field) {
            (Some(a), Some(b)) if a != b => {
                return Err(CliError::Parse("field given twice with different values".into()));
            }
            (a, b) => a.or(b),
        };
        let tower = field.map(|f| FieldTower::from_spec(&f).map(Arc::new)).transpose()?;
        let code = match (rows, &tower) {
            (Some(rows), Some(t)) => {
                let cs = rankweight::CodeSpec { field: t.spec(), n, generator: rows };
                Some(cs.build_in(t.clone())?)
            }
            (Some(_), None) => return Err(CliError::Parse("a code needs a field".into())),
            (None, _) => None,
        };
        Ok(Job {
            command,
            tower,
            code,
            metric: spec.metric,
            nu: spec.nu,
            params: spec.params,
            guard: guard as u128,
            workers,
            format: spec.options.format.unwrap_or_default(),
        })
    }

    pub fn require_code(&self) -> Result<&LinearCode, CliError> {
        self.code.as_ref().ok_or_else(|| CliError::Parse("this command needs --generator or --code".into()))
    }

    /// Code parameters for `mrd`: `q` and `m` come from the field unless given.
    pub fn code_params(&self) -> Result<CodeParams, CliError> {
        let p = &self.params;
        let q = p.q.or(self.tower.as_ref().map(|t| t.q() as u64));
        let m = p.m.or(self.tower.as_ref().map(|t| t.m() as u64));
        match (q, m, p.n, p.k) {
            (Some(q), _, _, _) if !is_prime_power(q) => Err(CliError::Parse(format!("q = {q} is not a prime power"))),
            (Some(q), Some(m), Some(n), Some(k)) => Ok(CodeParams::new(q, m, n, k)?),
            _ => Err(CliError::Parse("mrd needs q, m (or --field), n and k".into())),
        }
    }
}

fn is_prime_power(q: u64) -> bool {
    let Some(p) = (2..=q).find(|d| q.is_multiple_of(*d)) else { return false };
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1 && u32::try_from(p).is_ok_and(rankweight::gfq::is_prime)
}
