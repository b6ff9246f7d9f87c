//! Command-line front end: `analyze`, `enumerate`, `self-orthogonal`, `code`,
//! `dual` and `verify`.
//!
//! Reports are single JSON documents and streams are JSON Lines. Exit codes:
//! 0 success, 2 invalid parameters or descriptors, 3 I/O failure, 4 input too
//! large, 5 verification failure or internal error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::code::{CodeError, CodeSpace, MetacyclicCode, DEFAULT_WEIGHT_CAP};
use crate::field::{FElem, Residue};
use crate::linalg::{self, PrimeField};
use crate::oracle::{self, OracleError};
use crate::skew::{self, IdealDescriptor, IdealTag};
use crate::structure::{Condition, StructureError, System};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Params(StructureError),
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Params(_) | CliError::Descriptor(_) => 2,
            CliError::Io(_) => 3,
            CliError::TooLarge(_) => 4,
            CliError::Verification(_) | CliError::Internal(_) => 5,
        }
    }
}

impl From<StructureError> for CliError {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::TooLarge(msg) => CliError::TooLarge(msg),
            StructureError::InternalInconsistency(msg) => CliError::Internal(msg),
            other => CliError::Params(other),
        }
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::TooLarge { .. } => CliError::TooLarge(e.to_string()),
            CodeError::InvalidChoices(msg) => CliError::Descriptor(msg),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::TooLarge(msg) => CliError::TooLarge(msg),
            OracleError::Code(c) => c.into(),
        }
    }
}

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(name = "metacyclic", version, about = "Left metacyclic codes of length 3m over F_q")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Pretty-print single-document reports.
    #[arg(long, global = true)]
    pub json_indent: bool,
    /// Progress messages on stderr.
    #[arg(short, long, global = true, action = ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Triple {
    pub m: usize,
    pub q: u32,
    pub r: usize,
}

#[derive(Debug, Clone, Args)]
pub struct Filters {
    /// Stop after this many records.
    #[arg(long)]
    pub limit: Option<u64>,
    #[arg(long)]
    pub min_dim: Option<usize>,
    #[arg(long)]
    pub max_dim: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decomposition report: cosets, factors, idempotents, ideal counts.
    Analyze {
        #[command(flatten)]
        params: Triple,
    },
    /// Stream every code as JSON Lines.
    Enumerate {
        #[command(flatten)]
        params: Triple,
        #[command(flatten)]
        filters: Filters,
        #[arg(long)]
        self_orthogonal_only: bool,
    },
    /// Stream the self-orthogonal codes as JSON Lines.
    SelfOrthogonal {
        #[command(flatten)]
        params: Triple,
        #[command(flatten)]
        filters: Filters,
    },
    /// Generator matrix and optional weight enumerator of one code.
    Code {
        #[command(flatten)]
        params: Triple,
        /// Comma-separated terms `i:tag[@n]`; omitted components are zero.
        tuple: String,
        #[arg(long)]
        weights: bool,
        /// Largest number of codewords a weight enumeration may visit.
        #[arg(long, default_value_t = DEFAULT_WEIGHT_CAP)]
        cap: u64,
    },
    /// Descriptor tuple of the Euclidean dual.
    Dual {
        #[command(flatten)]
        params: Triple,
        tuple: String,
    },
    /// Run the brute-force oracles against the closed forms.
    Verify {
        #[command(flatten)]
        params: Triple,
        /// Skip oracles whose size gates are exceeded instead of failing.
        #[arg(long)]
        skip_large: bool,
    },
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(stdout, "{text}") } else { write!(stderr, "{text}") };
            return code;
        }
    };
    match execute(&config, stdout, stderr) {
        Ok(()) => 0,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Run a parsed configuration.
pub fn execute(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let mut file;
    let out: &mut dyn Write = match &config.output {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => stdout,
    };
    let log = |stderr: &mut dyn Write, msg: &str| {
        if config.verbose > 0 {
            let _ = writeln!(stderr, "{msg}");
        }
    };
    let system = |t: &Triple, stderr: &mut dyn Write| -> Result<System, CliError> {
        log(stderr, &format!("building system ({}, {}, {})", t.m, t.q, t.r));
        Ok(System::new(t.m, t.q, t.r)?)
    };
    match &config.command {
        Command::Analyze { params } => {
            let sys = system(params, stderr)?;
            emit(out, &analyze_report(&sys), config.json_indent)?;
        }
        Command::Enumerate { params, filters, self_orthogonal_only } => {
            let sys = system(params, stderr)?;
            stream_codes(&sys, filters, *self_orthogonal_only, out)?;
        }
        Command::SelfOrthogonal { params, filters } => {
            let sys = system(params, stderr)?;
            stream_codes(&sys, filters, true, out)?;
        }
        Command::Code { params, tuple, weights, cap } => {
            let sys = system(params, stderr)?;
            let space = CodeSpace::new(&sys);
            let choices = parse_tuple(&sys, tuple)?;
            let code = space.assemble(&choices)?;
            emit(out, &code_report(&sys, &code, weights.then_some(*cap))?, config.json_indent)?;
        }
        Command::Dual { params, tuple } => {
            let sys = system(params, stderr)?;
            let space = CodeSpace::new(&sys);
            let code = space.assemble(&parse_tuple(&sys, tuple)?)?;
            let dual = space.dual(&code)?;
            emit(out, &dual_report(&sys, &code, &dual), config.json_indent)?;
        }
        Command::Verify { params, skip_large } => {
            let sys = system(params, stderr)?;
            let report = verify(&sys, *skip_large, &mut |m| log(stderr, m))?;
            emit(out, &report, config.json_indent)?;
            out.flush()?;
            if report["passed"] != Value::Bool(true) {
                return Err(CliError::Verification("see the report for failing checks".into()));
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn emit(out: &mut dyn Write, v: &Value, indent: bool) -> Result<(), CliError> {
    let text = if indent { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) }
        .map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

/// JSON array of residues.
pub fn felem_json(a: &FElem) -> Value {
    json!(a.coeffs())
}

/// A big count as a JSON number when it fits in `u64`, else as a decimal string.
pub fn big_json(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

/// JSON descriptor: `{"i", "tag", "g" | "k" + "alpha"}`.
pub fn descriptor_json(d: &IdealDescriptor) -> Value {
    let mut obj = Map::new();
    obj.insert("i".into(), json!(d.component));
    obj.insert("tag".into(), json!(d.tag_name()));
    match &d.tag {
        IdealTag::Comm { kind, j, g } => {
            obj.insert("j".into(), json!(j));
            obj.insert("label".into(), json!(kind.label()));
            obj.insert("g".into(), Value::Array(g.iter().map(felem_json).collect()));
        }
        IdealTag::Dim1 { k, alpha } | IdealTag::Dim2 { k, alpha } => {
            obj.insert("k".into(), json!(k));
            obj.insert("alpha".into(), felem_json(alpha));
        }
        IdealTag::Zero | IdealTag::Full => {}
    }
    Value::Object(obj)
}

/// Parse `0:zero,1:comm@0,2:dim1@7`; omitted components default to zero.
pub fn parse_tuple(sys: &System, text: &str) -> Result<Vec<IdealDescriptor>, CliError> {
    let mut slots: Vec<Option<IdealDescriptor>> = vec![None; sys.len()];
    for term in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (i, rest) =
            term.split_once(':').ok_or_else(|| CliError::Descriptor(format!("term {term:?} is not i:tag[@n]")))?;
        let i: usize =
            i.trim().parse().map_err(|_| CliError::Descriptor(format!("bad component index in {term:?}")))?;
        if i >= sys.len() {
            return Err(CliError::Descriptor(format!("component {i} out of range 0..{}", sys.len())));
        }
        let (tag, n) = match rest.split_once('@') {
            Some((tag, n)) => {
                let n = n.trim().parse().map_err(|_| CliError::Descriptor(format!("bad index in {term:?}")))?;
                (tag.trim(), Some(n))
            }
            None => (rest.trim(), None),
        };
        if slots[i].is_some() {
            return Err(CliError::Descriptor(format!("component {i} given twice")));
        }
        let desc = skew::parse_term(sys.component(i), tag, n).map_err(|e| CliError::Descriptor(e.to_string()))?;
        slots[i] = Some(desc);
    }
    Ok(slots
        .into_iter()
        .enumerate()
        .map(|(i, d)| d.unwrap_or(IdealDescriptor { component: i, tag: IdealTag::Zero }))
        .collect())
}

/// The decomposition report.
pub fn analyze_report(sys: &System) -> Value {
    let space = CodeSpace::new(sys);
    let p = sys.params;
    let part = sys.table.partition;
    let components: Vec<Value> = sys
        .components
        .iter()
        .map(|c| {
            json!({
                "i": c.index,
                "coset": c.coset,
                "d": c.d,
                "condition": match c.cond { Condition::I => "I", Condition::II => "II" },
                "mu": sys.mu(c.index),
                "theta": c.theta.name(),
                "f": c.f.residues(),
                "eps": c.eps,
                "zeta": felem_json(&c.zeta),
                "omega": c.omega.as_ref().map(felem_json),
                "rho": c.rho.as_ref().map(felem_json),
                "norm_group_size": c.norm_group.len(),
                "ideal_count": skew::ideal_count(c),
            })
        })
        .collect();
    json!({
        "params": { "m": p.m, "q": p.q, "r": p.r, "eps": p.eps },
        "splitting_degree": p.splitting_degree(),
        "partition": {
            "s": part.s, "t": part.t, "s1": part.s1, "s2": part.s2, "t1": part.t1, "t2": part.t2,
        },
        "components": components,
        "total_codes": big_json(&space.count_codes()),
    })
}

fn matrix_json(q: u32, rows: &[Vec<Residue>]) -> Value {
    let render = |row: &Vec<Residue>| {
        if q <= 10 {
            row.iter().map(|c| char::from_digit(*c, 10).expect("digit")).collect::<String>()
        } else {
            row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
        }
    };
    Value::Array(rows.iter().map(|r| json!(render(r))).collect())
}

/// Generator matrix report with optional weight enumerator (`cap` set).
pub fn code_report(sys: &System, code: &MetacyclicCode, cap: Option<u64>) -> Result<Value, CliError> {
    let p = sys.params;
    let mut report = json!({
        "params": { "m": p.m, "q": p.q, "r": p.r },
        "tuple": code.tuple_string(),
        "choices": code.choices.iter().map(descriptor_json).collect::<Vec<_>>(),
        "n": code.length,
        "k": code.dimension,
        "cardinality": big_json(&BigUint::from(p.q).pow(code.dimension as u32)),
        "self_orthogonal": code.is_self_orthogonal(),
        "generator": matrix_json(p.q, &code.generator),
    });
    if code.dimension == code.length {
        report["d"] = json!(1);
    }
    if let Some(cap) = cap {
        let w = code.weight_enumerator(cap)?;
        let map: Map<String, Value> = w.counts.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        report["weights"] = Value::Object(map);
        report["weight_enumerator"] = json!(w.to_string());
        report["d"] = json!(w.min_distance());
    }
    Ok(report)
}

fn dual_report(sys: &System, code: &MetacyclicCode, dual: &MetacyclicCode) -> Value {
    let f = PrimeField::new(sys.params.q);
    let orthogonal = code.generator.iter().all(|u| dual.generator.iter().all(|v| f.dot(u, v) == 0));
    json!({
        "tuple": code.tuple_string(),
        "dual_tuple": dual.tuple_string(),
        "dual_choices": dual.choices.iter().map(descriptor_json).collect::<Vec<_>>(),
        "dimension": code.dimension,
        "dual_dimension": dual.dimension,
        "complement_ok": code.dimension + dual.dimension == code.length,
        "orthogonal": orthogonal,
    })
}

fn stream_codes(sys: &System, filters: &Filters, self_orthogonal: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let space = CodeSpace::new(sys);
    let dims: Vec<Vec<usize>> = space
        .catalogs()
        .iter()
        .zip(&sys.components)
        .map(|(cat, c)| cat.iter().map(|d| c.d * d.dim()).collect())
        .collect();
    let tuples: Box<dyn Iterator<Item = Vec<usize>>> =
        if self_orthogonal { Box::new(space.enumerate_self_orthogonal()?) } else { Box::new(space.enumerate()) };
    let mut emitted = 0u64;
    for idx in tuples {
        if filters.limit.is_some_and(|l| emitted >= l) {
            break;
        }
        let dimension: usize = idx.iter().zip(&dims).map(|(&k, d)| d[k]).sum();
        if filters.min_dim.is_some_and(|lo| dimension < lo) || filters.max_dim.is_some_and(|hi| dimension > hi) {
            continue;
        }
        let choices = space.choices_at(&idx);
        let record = json!({
            "index": emitted,
            "tuple": choices.iter().map(IdealDescriptor::term).collect::<Vec<_>>().join(","),
            "choices": choices.iter().map(descriptor_json).collect::<Vec<_>>(),
            "dimension": dimension,
            "log_q_size": dimension,
        });
        writeln!(out, "{record}")?;
        emitted += 1;
    }
    Ok(())
}

/// Number of codes sampled by `verify` when the full space is too big.
pub const VERIFY_SAMPLE: usize = 64;
/// Spaces up to this size are checked exhaustively by `verify`.
pub const VERIFY_EXHAUSTIVE: u64 = 2048;

fn check(name: &str, status: &str, detail: String) -> Value {
    json!({ "name": name, "status": status, "detail": detail })
}

/// Run every oracle comparison that fits its size gate.
pub fn verify(sys: &System, skip_large: bool, log: &mut dyn FnMut(&str)) -> Result<Value, CliError> {
    let space = CodeSpace::new(sys);
    let mut checks = Vec::new();
    let skipped = |name: &str, why: String| -> Result<Value, CliError> {
        if skip_large {
            Ok(check(name, "skipped", why))
        } else {
            Err(CliError::TooLarge(format!("{name}: {why}")))
        }
    };

    checks.push(check("decomposition", "pass", "factor product, idempotent sum and Fourier form verified".into()));

    let formula = space.count_codes();
    let listed = space.enumeration_size();
    checks.push(check(
        "code_count",
        if formula == listed { "pass" } else { "fail" },
        format!("closed form {formula}, catalogue product {listed}"),
    ));

    for c in &sys.components {
        let name = format!("ideals_component_{}", c.index);
        log(&format!("checking {name}"));
        let catalog = &space.catalogs()[c.index];
        match oracle::brute_skew_ideals(c) {
            Ok(brute) => {
                let mut a: Vec<Vec<Vec<FElem>>> = catalog
                    .iter()
                    .map(|d| linalg::row_space(&c.field, &skew::generator_matrix(c, d).unwrap_or_default()))
                    .collect();
                let mut b = brute;
                a.sort();
                b.sort();
                let ok = a == b && a.len() as u64 == skew::ideal_count(c);
                checks.push(check(
                    &name,
                    if ok { "pass" } else { "fail" },
                    format!("catalogue {} ideals, brute force {} stable subspaces", a.len(), b.len()),
                ));
            }
            Err(OracleError::TooLarge(why)) => checks.push(skipped(&name, why)?),
            Err(e) => return Err(e.into()),
        }
        if c.cond == Condition::II {
            let qt = c.q_third();
            let mut ok = true;
            for beta in &c.norm_group {
                let roots = skew::dim2_containing(c, beta).map_err(|e| CliError::Internal(e.to_string()))?;
                let direct: Vec<FElem> =
                    c.norm_group.iter().filter(|a| skew::containment_equation(c, a, beta)).cloned().collect();
                ok &= roots == direct && roots.len() as u64 == qt + 1;
            }
            checks.push(check(
                &format!("containment_component_{}", c.index),
                if ok { "pass" } else { "fail" },
                format!("each Dim1 lies in exactly {} Dim2 ideals", qt + 1),
            ));
        }
    }

    let sample: Vec<Vec<usize>> = match u64::try_from(&listed) {
        Ok(n) if n <= VERIFY_EXHAUSTIVE => space.enumerate().collect(),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(0x6d65_7461);
            (0..VERIFY_SAMPLE)
                .map(|_| space.catalogs().iter().map(|cat| rng.random_range(0..cat.len())).collect())
                .collect()
        }
    };
    log(&format!("checking duals and ideal closure on {} codes", sample.len()));
    let q = sys.params.q;
    let (mut dual_ok, mut closure_ok) = (0usize, 0usize);
    for idx in &sample {
        let code = space.assemble(&space.choices_at(idx))?;
        let dual = space.dual(&code)?;
        let null = oracle::null_space_dual(q, &code.generator, code.length);
        if linalg::row_space(&PrimeField::new(q), &dual.generator) == null {
            dual_ok += 1;
        }
        if oracle::brute_left_ideal_check(&code.generator, sys) {
            closure_ok += 1;
        }
    }
    let n = sample.len();
    checks.push(check(
        "dual_null_space",
        if dual_ok == n { "pass" } else { "fail" },
        format!("{dual_ok}/{n} duals equal the null space"),
    ));
    checks.push(check(
        "left_ideal_closure",
        if closure_ok == n { "pass" } else { "fail" },
        format!("{closure_ok}/{n} codes closed under x and y"),
    ));

    log("checking self-orthogonal codes");
    let stream = space.count_self_orthogonal()?;
    match oracle::brute_self_orthogonal_tuples(&space) {
        Ok(brute) => {
            let mut streamed: Vec<Vec<usize>> = space.enumerate_self_orthogonal()?.collect();
            streamed.sort();
            let ok = streamed == brute;
            checks.push(check(
                "self_orthogonal",
                if ok { "pass" } else { "fail" },
                format!("stream {stream}, brute force {}", brute.len()),
            ));
        }
        Err(OracleError::TooLarge(why)) => {
            checks.push(skipped("self_orthogonal", format!("{why}; stream count {stream}"))?)
        }
        Err(e) => return Err(e.into()),
    }

    let passed = checks.iter().all(|c| c["status"] != "fail");
    Ok(json!({
        "params": { "m": sys.params.m, "q": q, "r": sys.params.r },
        "checks": checks,
        "passed": passed,
    }))
}
