//! Argument parsing, dispatch and exit codes.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use borel_core::certificates::{construct_certificate, minimize_n, verify_certificate};
use borel_core::chevalley::{build_structure_constants, invariant_subspace, Acting, SignConvention};
use borel_core::orbits::{support_and_socle, torus_degenerate, NilpotentElement};
use borel_core::poset::{socle, up_closure, Antichain, FilterSpec, Maximality, RootIdeal};
use borel_core::roots::format_root_sum;
use borel_core::weyl::{conjugate_antichain_to_simple, SearchBudget};
use borel_core::{Error, Root, RootSystem, RootSystemType};
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cache::Cache;
use crate::format::*;
use crate::reproduce::{self, certificate_text, gamma_text, Target};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SearchExhausted { .. } | Error::NoCertificateBelow { .. } | Error::Overflow(_) => EXIT_RESOURCE,
            Error::ParseType(_) | Error::InvalidType { .. } => EXIT_USAGE,
            _ => EXIT_DATA,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError {
            code: EXIT_RESOURCE,
            message: format!("i/o error: {e}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Nonempty,
    Case4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MaximalityArg {
    /// Maximal among antichains containing no simple root.
    NonSimple,
    /// Maximal among antichains passing the whole filter.
    Filtered,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ActingArg {
    /// The nilradical n.
    N,
    /// The nilradical m0 of the subsystem generated by the socle.
    M0,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Positive,
    Flipped,
}

#[derive(Debug, Parser)]
#[command(name = "borel", version, about = "Antichains, nilpotent ideals and hyperplane certificates in root systems")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for cached antichain enumerations.
    #[arg(long, global = true, env = "BOREL_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads for batch jobs.
    #[arg(long, global = true, env = "BOREL_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// Seed for sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute a family of published values and compare.
    Reproduce {
        #[arg(value_enum)]
        target: Target,
        /// Also write the report as JSON to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Enumerate antichains of the root poset.
    Antichains {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        #[arg(long, value_enum, default_value_t = MaximalityArg::NonSimple)]
        maximality: MaximalityArg,
        /// Emit a seeded random sample of this many antichains.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Build a certificate by the inductive construction.
    Certify {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long)]
        antichain: String,
    },
    /// Certificate with the smallest level.
    MinimizeN {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long)]
        antichain: String,
    },
    /// Weyl group element sending an antichain into the simple roots.
    Conjugate {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long)]
        antichain: String,
        #[arg(long, default_value_t = SearchBudget::default().max_expanded)]
        budget: usize,
    },
    /// Torus limit of an element onto its socle.
    Degenerate {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long)]
        element: String,
        /// Use the constructed certificate for the socle.
        #[arg(long, conflicts_with = "certificate", required_unless_present = "certificate")]
        auto_cert: bool,
        #[arg(long)]
        certificate: Option<String>,
    },
    /// Support, socle and minimal ideal.
    Socle {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long, conflicts_with = "element", required_unless_present = "element")]
        ideal: Option<String>,
        #[arg(long)]
        element: Option<String>,
    },
    /// Invariants of one weight component of C[m].
    Invariants {
        #[arg(long = "type")]
        root_type: String,
        /// Socle of the ideal m.
        #[arg(long)]
        antichain: String,
        /// Weight in -NΠ as an integer array.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value_t = ActingArg::N)]
        acting: ActingArg,
        #[arg(long, value_enum, default_value_t = SignArg::Positive)]
        sign: SignArg,
    },
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub root_type: Option<String>,
    pub command: &'static str,
    pub filter: Option<FilterSpec>,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub jobs: usize,
    pub seed: u64,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Self {
        let (command, root_type, filter) = match &cli.command {
            Command::Reproduce { .. } => ("reproduce", None, None),
            Command::Antichains {
                root_type,
                filter,
                maximality,
                ..
            } => ("antichains", Some(root_type), Some(filter_spec(*filter, *maximality))),
            Command::Certify { root_type, .. } => ("certify", Some(root_type), None),
            Command::MinimizeN { root_type, .. } => ("minimize-n", Some(root_type), None),
            Command::Conjugate { root_type, .. } => ("conjugate", Some(root_type), None),
            Command::Degenerate { root_type, .. } => ("degenerate", Some(root_type), None),
            Command::Socle { root_type, .. } => ("socle", Some(root_type), None),
            Command::Invariants { root_type, .. } => ("invariants", Some(root_type), None),
        };
        let jobs = cli.jobs.map(usize::from).unwrap_or_else(|| {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        });
        RunConfig {
            root_type: root_type.cloned(),
            command,
            filter,
            format: cli.format,
            cache_dir: cli.cache_dir.clone(),
            jobs,
            seed: cli.seed,
        }
    }
}

fn filter_spec(f: FilterArg, m: MaximalityArg) -> FilterSpec {
    match f {
        FilterArg::All => FilterSpec::All,
        FilterArg::Nonempty => FilterSpec::NonEmpty,
        FilterArg::Case4 => FilterSpec::Case4(match m {
            MaximalityArg::NonSimple => Maximality::AmongNonSimple,
            MaximalityArg::Filtered => Maximality::AmongFiltered,
        }),
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let config = RunConfig::from_cli(&cli);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return EXIT_RESOURCE;
        }
    };
    let result = dispatch(&cli.command, &config, &pool, out, err);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn parse_type(label: &str) -> Result<RootSystem, CliError> {
    let ty: RootSystemType = label
        .parse()
        .map_err(|e: Error| CliError::usage(format!("--type: {e}")))?;
    Ok(RootSystem::new(&ty))
}

fn same_type(rs: &RootSystem, label: &str) -> Result<(), CliError> {
    let ty: RootSystemType = label
        .parse()
        .map_err(|e: Error| CliError::usage(format!("type in input: {e}")))?;
    if &ty != rs.root_type() {
        return Err(CliError::usage(format!(
            "input is for {ty} but --type is {}",
            rs.root_type()
        )));
    }
    Ok(())
}

/// A root list given either bare (`[[1,0],[0,1]]`) or wrapped
/// (`{"type":"A2","roots":[...]}`).
fn parse_roots(rs: &RootSystem, flag: &str, text: &str) -> Result<Vec<Root>, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::usage(format!("--{flag}: {e}")))?;
    let rows: Vec<Vec<i64>> = if value.is_object() {
        let j: RootSetJson =
            serde_json::from_value(value).map_err(|e| CliError::usage(format!("--{flag}: {e}")))?;
        same_type(rs, &j.root_type)?;
        j.roots
    } else {
        serde_json::from_value(value).map_err(|e| CliError::usage(format!("--{flag}: {e}")))?
    };
    Ok(roots_from_json(&rows))
}

fn parse_antichain(rs: &RootSystem, text: &str) -> Result<Antichain, CliError> {
    Ok(Antichain::new(rs, parse_roots(rs, "antichain", text)?)?)
}

fn parse_element(rs: &RootSystem, text: &str) -> Result<NilpotentElement, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::usage(format!("--element: {e}")))?;
    let j: ElementJson = if value.is_array() {
        ElementJson {
            root_type: rs.root_type().to_string(),
            terms: serde_json::from_value(value).map_err(|e| CliError::usage(format!("--element: {e}")))?,
        }
    } else {
        serde_json::from_value(value).map_err(|e| CliError::usage(format!("--element: {e}")))?
    };
    same_type(rs, &j.root_type)?;
    j.element(rs).map_err(|e| match e {
        ElementError::Coefficient(c) => CliError::usage(format!("--element: bad coefficient {c:?}")),
        ElementError::Domain(e) => e.into(),
    })
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let s = serde_json::to_string(value).expect("serialisable");
    writeln!(out, "{s}")?;
    Ok(())
}

fn csv_record(fields: &[String]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(fields).expect("in-memory write");
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn csv_line(out: &mut dyn Write, fields: &[String]) -> Result<(), CliError> {
    out.write_all(csv_record(fields).as_bytes())?;
    Ok(())
}

fn root_cell(r: &[i64]) -> String {
    Root::new(r.to_vec()).to_string()
}

fn set_text(roots: &[Root]) -> String {
    gamma_text(roots)
}

fn dispatch(
    command: &Command,
    config: &RunConfig,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let cache = Cache::new(config.cache_dir.clone());
    match command {
        Command::Reproduce { target, report } => cmd_reproduce(*target, report.as_ref(), config, &cache, pool, out, err),
        Command::Antichains { root_type, sample: k, .. } => {
            let rs = parse_type(root_type)?;
            let filter = config.filter.expect("set for antichains");
            let mut list = cache.antichains(&rs, filter)?;
            if let Some(k) = *k {
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                let mut idx = sample(&mut rng, list.len(), k.min(list.len())).into_vec();
                idx.sort_unstable();
                list = idx.into_iter().map(|i| list[i].clone()).collect();
            }
            write_antichains(&rs, &list, config.format, out)?;
            Ok(EXIT_OK)
        }
        Command::Certify { root_type, antichain } => {
            let rs = parse_type(root_type)?;
            let ac = parse_antichain(&rs, antichain)?;
            let c = construct_certificate(&rs, &ac)?;
            let min = minimize_n(&rs, &ac)?;
            let j = CertificateJson::from_construction(&rs, &c, c.certificate.level == min.level);
            write_certificate(&j, config.format, out)?;
            Ok(EXIT_OK)
        }
        Command::MinimizeN { root_type, antichain } => {
            let rs = parse_type(root_type)?;
            let ac = parse_antichain(&rs, antichain)?;
            let c = minimize_n(&rs, &ac)?;
            write_certificate(&CertificateJson::new(&rs, &c, true, Vec::new()), config.format, out)?;
            Ok(EXIT_OK)
        }
        Command::Conjugate {
            root_type,
            antichain,
            budget,
        } => {
            let rs = parse_type(root_type)?;
            let ac = parse_antichain(&rs, antichain)?;
            let c = conjugate_antichain_to_simple(&rs, &ac, SearchBudget { max_expanded: *budget })?;
            let j = ConjugationJson::new(&rs, &ac, &c);
            match config.format {
                Format::Json => json_line(out, &j)?,
                Format::Csv => {
                    csv_line(out, &["root".into(), "image".into()])?;
                    for (a, b) in j.antichain.iter().zip(&j.image) {
                        csv_line(out, &[root_cell(a), root_cell(b)])?;
                    }
                }
                Format::Table => {
                    let word: Vec<String> = j.word.iter().map(|i| format!("s{i}")).collect();
                    writeln!(out, "w     = {}", if word.is_empty() { "1".into() } else { word.join(" ") })?;
                    writeln!(out, "Γ     = {}", set_text(ac.roots()))?;
                    writeln!(out, "w(Γ)  = {}", set_text(&c.image))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Degenerate {
            root_type,
            element,
            auto_cert,
            certificate,
        } => {
            let rs = parse_type(root_type)?;
            let y = parse_element(&rs, element)?;
            let data = support_and_socle(&rs, &y)?;
            let (cert, cj) = if *auto_cert {
                if data.socle.is_empty() {
                    return Err(Error::EmptyAntichain.into());
                }
                let c = construct_certificate(&rs, &data.socle)?;
                let m = minimize_n(&rs, &data.socle)?;
                let j = CertificateJson::from_construction(&rs, &c, c.certificate.level == m.level);
                (c.certificate, j)
            } else {
                let text = certificate.as_deref().expect("required by clap");
                let j: CertificateJson =
                    serde_json::from_str(text).map_err(|e| CliError::usage(format!("--certificate: {e}")))?;
                same_type(&rs, &j.root_type)?;
                (j.certificate(&rs)?, j)
            };
            let limit = torus_degenerate(&rs, &y, &cert)?;
            let j = DegenerationJson {
                root_type: rs.root_type().to_string(),
                certificate: cj,
                socle: roots_to_json(data.socle.roots()),
                limit: ElementJson::new(&rs, &limit),
            };
            match config.format {
                Format::Json => json_line(out, &j)?,
                Format::Csv => {
                    csv_line(out, &["root".into(), "coeff".into()])?;
                    for t in &j.limit.terms {
                        csv_line(out, &[root_cell(&t.root), t.coeff.clone()])?;
                    }
                }
                Format::Table => {
                    writeln!(out, "(H,n)  = {}", certificate_text(&cert.coweight, cert.level))?;
                    writeln!(out, "soc    = {}", set_text(data.socle.roots()))?;
                    writeln!(out, "limit  = {}", element_text(&rs, &limit))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Socle {
            root_type,
            ideal,
            element,
        } => {
            let rs = parse_type(root_type)?;
            let (support, soc, ideal) = if let Some(text) = ideal {
                let ideal = RootIdeal::new(&rs, parse_roots(&rs, "ideal", text)?)?;
                (ideal.roots().to_vec(), socle(&rs, &ideal), ideal)
            } else {
                let x = parse_element(&rs, element.as_deref().expect("required by clap"))?;
                let d = support_and_socle(&rs, &x)?;
                (d.support, d.socle, d.ideal)
            };
            let j = SocleJson {
                root_type: rs.root_type().to_string(),
                support: roots_to_json(&support),
                socle: roots_to_json(soc.roots()),
                ideal: roots_to_json(ideal.roots()),
            };
            match config.format {
                Format::Json => json_line(out, &j)?,
                Format::Csv => {
                    csv_line(out, &["set".into(), "root".into()])?;
                    for (name, rows) in [("support", &j.support), ("socle", &j.socle), ("ideal", &j.ideal)] {
                        for r in rows {
                            csv_line(out, &[name.into(), root_cell(r)])?;
                        }
                    }
                }
                Format::Table => {
                    writeln!(out, "supp   = {}", set_text(&support))?;
                    writeln!(out, "soc    = {}", set_text(soc.roots()))?;
                    writeln!(out, "ideal  = {}", set_text(ideal.roots()))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Invariants {
            root_type,
            antichain,
            weight,
            acting,
            sign,
        } => {
            let rs = parse_type(root_type)?;
            let ac = parse_antichain(&rs, antichain)?;
            let weight: Vec<i64> =
                serde_json::from_str(weight).map_err(|e| CliError::usage(format!("--weight: {e}")))?;
            let ideal = up_closure(&rs, ac.roots());
            let sign = match sign {
                SignArg::Positive => SignConvention::Positive,
                SignArg::Flipped => SignConvention::Flipped,
            };
            let sc = build_structure_constants(&rs, sign);
            let acting_core = match acting {
                ActingArg::N => Acting::Nilradical,
                ActingArg::M0 => Acting::SocleNilradical,
            };
            let inv = invariant_subspace(&rs, &sc, &ideal, &weight, acting_core)?;
            let j = InvariantsJson {
                root_type: rs.root_type().to_string(),
                socle: roots_to_json(ac.roots()),
                weight: weight.clone(),
                acting: match acting {
                    ActingArg::N => "n".into(),
                    ActingArg::M0 => "m0".into(),
                },
                basis: inv.space.basis.iter().map(|m| roots_to_json(m.factors())).collect(),
                invariants: inv
                    .vectors
                    .iter()
                    .map(|v| v.iter().map(|c| c.to_string()).collect())
                    .collect(),
            };
            match config.format {
                Format::Json => json_line(out, &j)?,
                Format::Csv => {
                    let mut header = vec!["monomial".to_string()];
                    header.extend((1..=j.invariants.len()).map(|k| format!("v{k}")));
                    csv_line(out, &header)?;
                    for (i, m) in inv.space.basis.iter().enumerate() {
                        let mut fields = vec![monomial_text(m.factors())];
                        fields.extend(j.invariants.iter().map(|v| v[i].clone()));
                        csv_line(out, &fields)?;
                    }
                }
                Format::Table => {
                    writeln!(out, "dim C[m]_λ      = {}", inv.space.dim())?;
                    writeln!(out, "dim invariants  = {}", inv.dim())?;
                    for v in &inv.vectors {
                        let mut terms = Vec::new();
                        for (m, c) in inv.space.basis.iter().zip(v) {
                            if *c != borel_core::Rational::from_integer(0) {
                                terms.push(format!("({c}) {}", monomial_text(m.factors())));
                            }
                        }
                        writeln!(out, "  {}", terms.join(" + "))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn monomial_text(factors: &[Root]) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    let mut s = String::new();
    let mut i = 0;
    while i < factors.len() {
        let j = factors[i..].iter().take_while(|r| **r == factors[i]).count();
        let _ = write!(s, "ξ[{}]", format_root_sum(&factors[i], "α"));
        if j > 1 {
            let _ = write!(s, "^{j}");
        }
        i += j;
    }
    s
}

fn element_text(rs: &RootSystem, x: &NilpotentElement) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = x
        .support(rs)
        .iter()
        .map(|r| format!("({}) X[{}]", x.coeff(r), format_root_sum(r, "α")))
        .collect();
    parts.join(" + ")
}

pub fn write_antichains(rs: &RootSystem, list: &[Antichain], format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Json => {
            for ac in list {
                json_line(out, &RootSetJson::new(rs, ac.roots()))?;
            }
        }
        Format::Csv => {
            let width = list.iter().map(Antichain::len).max().unwrap_or(0);
            let mut header = vec!["size".to_string()];
            for k in 1..=width {
                header.extend((1..=rs.rank()).map(|i| format!("g{k}_a{i}")));
            }
            csv_line(out, &header)?;
            for ac in list {
                let mut fields = vec![ac.len().to_string()];
                for r in ac.roots() {
                    fields.extend(r.coeffs().iter().map(|c| c.to_string()));
                }
                fields.resize(1 + width * rs.rank(), String::new());
                csv_line(out, &fields)?;
            }
        }
        Format::Table => {
            for ac in list {
                writeln!(out, "{}", set_text(ac.roots()))?;
            }
        }
    }
    Ok(())
}

fn write_certificate(j: &CertificateJson, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let roots = roots_from_json(&j.antichain);
    match format {
        Format::Json => json_line(out, j)?,
        Format::Csv => {
            csv_line(out, &["Gamma".into(), "(H,n)".into(), "minimal".into(), "trace".into()])?;
            csv_line(
                out,
                &[
                    set_text(&roots),
                    certificate_text(&j.coweight, j.n),
                    j.minimal.to_string(),
                    j.trace.join(" "),
                ],
            )?;
        }
        Format::Table => {
            writeln!(out, "Γ      = {}", set_text(&roots))?;
            writeln!(out, "(H,n)  = {}", certificate_text(&j.coweight, j.n))?;
            writeln!(out, "minimal: {}", j.minimal)?;
            if !j.trace.is_empty() {
                writeln!(out, "trace: {}", j.trace.join(" > "))?;
            }
        }
    }
    Ok(())
}

/// The F4 table in its printed layout: one row per `Γ` with the minimal
/// `(H, n)`.
pub fn f4_table_csv() -> String {
    let mut s = csv_record(&["Gamma".into(), "(H,n)".into()]);
    for (roots, cert) in reproduce::f4_minimal() {
        s.push_str(&csv_record(&[gamma_text(&roots), certificate_text(&cert.coweight, cert.level)]));
    }
    s
}

fn write_report(report: &Report, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(report).expect("serialisable"))?;
        }
        Format::Csv if report.target == Target::F4Table.name() => {
            write!(out, "{}", f4_table_csv())?;
        }
        Format::Csv => {
            csv_line(out, &["label".into(), "expected".into(), "computed".into(), "ok".into()])?;
            for r in &report.rows {
                csv_line(out, &[r.label.clone(), r.expected.clone(), r.computed.clone(), r.ok.to_string()])?;
            }
        }
        Format::Table => {
            let w = report.rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(0);
            for r in &report.rows {
                let pad = w - r.label.chars().count();
                writeln!(
                    out,
                    "{} {}{}  expected {}  computed {}",
                    if r.ok { "ok  " } else { "FAIL" },
                    r.label,
                    " ".repeat(pad),
                    r.expected,
                    r.computed
                )?;
            }
            for (k, v) in &report.notes {
                writeln!(out, "note {k}: {v}")?;
            }
            writeln!(out, "{}: {}", report.target, if report.passed { "all match" } else { "MISMATCH" })?;
        }
    }
    Ok(())
}

fn cmd_reproduce(
    target: Target,
    report_path: Option<&PathBuf>,
    config: &RunConfig,
    cache: &Cache,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let (tx, rx) = std::sync::mpsc::channel::<String>();
    let report = std::thread::scope(|scope| {
        let worker = scope.spawn(move || {
            pool.install(|| {
                let mut progress = |line: &str| {
                    let _ = tx.send(line.to_string());
                };
                reproduce::run(target, cache, &mut progress)
            })
        });
        for line in rx {
            let _ = writeln!(err, "{line}");
        }
        worker.join().expect("reproduction worker panicked")
    })?;
    write_report(&report, config.format, out)?;
    if let Some(path) = report_path {
        let mut body = serde_json::to_string_pretty(&report).expect("serialisable");
        body.push('\n');
        std::fs::write(path, body)?;
    }
    if report.passed {
        return Ok(EXIT_OK);
    }
    for r in report.mismatches() {
        writeln!(err, "mismatch: {}: expected {}, computed {}", r.label, r.expected, r.computed)?;
    }
    Ok(EXIT_MISMATCH)
}

/// Checks that a certificate from the JSON format verifies.
pub fn certificate_is_valid(j: &CertificateJson) -> Result<bool, CliError> {
    let rs = parse_type(&j.root_type)?;
    Ok(verify_certificate(&rs, &j.certificate(&rs)?).valid)
}
