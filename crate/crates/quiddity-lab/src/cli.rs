//! Command-line front end for `quiddity-lab`.
//!
//! Exit codes: 0 success, 1 domain error or golden mismatch, 2 usage error,
//! 3 budget exhausted. Reports go to stdout as one JSON document (or a CSV
//! table); diagnostics go to stderr.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::arith::{self, ArithError};
use crate::bounds::{self, BoundsError, DEFAULT_SURVIVOR_CAP};
use crate::continuant::{self, ContinuantError};
use crate::families::{self, Datum, FamilyError, FamilyKind, FamilyReport};
use crate::quiddity::{self, QuiddityError, QuiddityTuple, Reducibility, ReductionWitness};
use crate::ring_core::{Element, FiniteRing, RingError, RingKind};

/// Environment variable overriding the iteration and survivor caps.
pub const BUDGET_ENV: &str = "QUIDDITY_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "quiddity-lab", version, about = "Continuants and lambda-quiddities over finite rings")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Compare the output against a stored file and fail on mismatch.
    #[arg(long, global = true)]
    golden: Option<PathBuf>,
    /// Worker threads for parallel scans.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Extra diagnostics on stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe a ring.
    RingInfo {
        #[arg(long)]
        ring: String,
    },
    /// Continuant and matrix of a tuple.
    Continuant {
        #[arg(long)]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        tuple: String,
    },
    /// Solution test and reducibility decision.
    Check {
        #[arg(long)]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        tuple: String,
    },
    /// The sum of two tuples.
    Oplus {
        #[arg(long)]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Equality up to rotation and reversal.
    Equivalent {
        #[arg(long)]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Minimal solution of a family.
    Family {
        /// monomial, dynomial, trinomial, quadrinomial, quasi_monomial, towed or polarized.
        kind: String,
        #[arg(long)]
        ring: String,
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
        /// Every valid parameter in enumeration order.
        #[arg(long)]
        all: bool,
    },
    /// Lower bound on ℓ, optionally with the survivor search upper bound.
    Ell {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        upper: bool,
        #[arg(long, default_value_t = 20)]
        nmax: usize,
    },
    /// Dynomial pairs with both discriminants non-squares.
    ScanDynomial {
        #[arg(short)]
        p: u64,
    },
    /// Elements whose trinomial solution is irreducible.
    ScanTrinomial {
        #[arg(short)]
        p: u64,
    },
    /// Primes lacking a generator j with j²+4 a non-square.
    Conjecture {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// n in [a, b] with phi(2^n - 1) < 2^(n-1).
    MersennePhi { a: u32, b: u32 },
    /// Squares of a field.
    Squares {
        #[arg(long)]
        ring: String,
    },
    /// Legendre symbol (a/p).
    Legendre {
        #[arg(allow_hyphen_values = true)]
        a: i128,
        p: u64,
    },
    /// Sum of m-th powers of generators against its closed form.
    Szymiczek {
        #[arg(long)]
        ring: String,
        /// Exponent; all m in [0, 2(q-1)] when omitted.
        #[arg(long)]
        m: Option<u64>,
    },
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Budget(String),
}

impl From<RingError> for Failure {
    fn from(e: RingError) -> Self {
        match e {
            RingError::OrderCapExceeded(_) | RingError::TooLarge => Failure::Budget(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<ArithError> for Failure {
    fn from(e: ArithError) -> Self {
        match e {
            ArithError::Ring(r) => r.into(),
            ArithError::TooLarge => Failure::Budget(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<ContinuantError> for Failure {
    fn from(e: ContinuantError) -> Self {
        match e {
            ContinuantError::Ring(r) => r.into(),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<QuiddityError> for Failure {
    fn from(e: QuiddityError) -> Self {
        match e {
            QuiddityError::Ring(r) => r.into(),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Ring(r) => r.into(),
            FamilyError::Arith(a) => a.into(),
            FamilyError::Quiddity(q) => q.into(),
            FamilyError::SizeCapExceeded(_) => Failure::Budget(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Ring(r) => r.into(),
            BoundsError::Family(f) => f.into(),
            BoundsError::Arith(a) => a.into(),
            BoundsError::TooLarge | BoundsError::RangeTooLarge => Failure::Budget(e.to_string()),
            BoundsError::PNotPrime(_) => Failure::Domain(e.to_string()),
        }
    }
}

/// A report plus an optional tabular view for `--format csv`.
struct Report {
    json: Value,
    table: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
    /// Exit with the budget code after printing.
    budget_hit: bool,
}

impl Report {
    fn json(json: Value) -> Self {
        Report { json, table: None, budget_hit: false }
    }

    fn table(json: Value, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        Report { json, table: Some((header, rows)), budget_hit: false }
    }
}

struct Ctx {
    budget: Option<u64>,
    verbose: bool,
}

impl Ctx {
    fn ring(&self, spec: &str) -> Result<FiniteRing, Failure> {
        let ring = FiniteRing::parse(spec)?;
        Ok(match self.budget {
            Some(b) => ring.with_iteration_cap(b),
            None => ring,
        })
    }
}

/// Runs the CLI with explicit streams and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
            return code;
        }
    };
    let budget = match std::env::var(BUDGET_ENV) {
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(b) if b > 0 => Some(b),
            _ => {
                let _ = writeln!(err, "error: {BUDGET_ENV} must be a positive integer");
                return 2;
            }
        },
        Err(_) => None,
    };
    let ctx = Ctx { budget, verbose: cli.verbose };
    let mut diag: Vec<u8> = Vec::new();
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(&ctx, &cli.command, &mut diag)),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
        },
        None => dispatch(&ctx, &cli.command, &mut diag),
    };
    let _ = err.write_all(&diag);
    let report = match result {
        Ok(r) => r,
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            return 1;
        }
        Err(Failure::Budget(m)) => {
            let _ = writeln!(err, "budget exhausted: {m}");
            return 3;
        }
    };
    let text = match render(&report, cli.format) {
        Ok(t) => t,
        Err(m) => {
            let _ = writeln!(err, "error: {m}");
            return 1;
        }
    };
    let _ = out.write_all(text.as_bytes());
    if let Some(path) = &cli.golden {
        match std::fs::read_to_string(path) {
            Ok(expected) if expected.trim_end() == text.trim_end() => {}
            Ok(expected) => {
                let line = expected
                    .lines()
                    .zip(text.lines())
                    .position(|(a, b)| a != b)
                    .unwrap_or_else(|| expected.lines().count().min(text.lines().count()));
                let _ = writeln!(err, "golden mismatch against {} at line {}", path.display(), line + 1);
                return 1;
            }
            Err(e) => {
                let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
                return 1;
            }
        }
    }
    if report.budget_hit {
        let _ = writeln!(err, "budget exhausted: partial results");
        return 3;
    }
    0
}

fn render(report: &Report, format: Format) -> Result<String, String> {
    match format {
        Format::Json => Ok(format!("{}\n", report.json)),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let write_err = |e: csv::Error| e.to_string();
            match &report.table {
                Some((header, rows)) => {
                    w.write_record(header).map_err(write_err)?;
                    for row in rows {
                        w.write_record(row).map_err(write_err)?;
                    }
                }
                None => {
                    w.write_record(["key", "value"]).map_err(write_err)?;
                    if let Value::Object(map) = &report.json {
                        for (k, v) in map {
                            let v = match v {
                                Value::String(s) => s.clone(),
                                other => other.to_string(),
                            };
                            w.write_record([k.as_str(), v.as_str()]).map_err(write_err)?;
                        }
                    }
                }
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
    }
}

/// Splits a comma-separated list, keeping bracketed coefficient lists intact.
fn split_top_level(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => parts.push(std::mem::take(&mut cur)),
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if !cur.is_empty() || !parts.is_empty() {
        parts.push(cur);
    }
    parts
}

/// Parses `a1,a2,...` into elements of `ring`.
pub fn parse_tuple(ring: &FiniteRing, s: &str) -> Result<Vec<Element>, RingError> {
    split_top_level(s).iter().map(|p| ring.parse_element(p)).collect()
}

/// JSON form of an element: a number for Z/NZ, a coefficient list for GF.
pub fn element_json(ring: &FiniteRing, x: Element) -> Value {
    match ring.kind() {
        RingKind::ZMod { .. } => json!(x.code()),
        RingKind::Gf { .. } => json!(ring.coeffs(x)),
    }
}

fn tuple_json(ring: &FiniteRing, xs: &[Element]) -> Value {
    Value::Array(xs.iter().map(|&x| element_json(ring, x)).collect())
}

fn witness_json(ring: &FiniteRing, w: &ReductionWitness) -> Value {
    json!({
        "start": w.start,
        "window_len": w.window_len,
        "summand": tuple_json(ring, w.summand.entries()),
        "complement": tuple_json(ring, w.complement.entries()),
    })
}

/// JSON form of a family report.
pub fn report_json(r: &FamilyReport) -> Value {
    let ring = r.tuple.ring();
    let mut data = Map::new();
    for (k, v) in &r.criterion_data {
        let v = match v {
            Datum::Element(x) => element_json(ring, *x),
            Datum::Bool(b) => json!(b),
            Datum::Int(i) => json!(i),
            Datum::Text(s) => json!(s),
        };
        data.insert(k.clone(), v);
    }
    let mut obj = Map::new();
    obj.insert("kind".into(), json!(r.kind.name()));
    obj.insert("ring".into(), json!(ring.spec()));
    obj.insert("params".into(), tuple_json(ring, &r.params));
    obj.insert("size".into(), json!(r.size));
    obj.insert("tuple".into(), tuple_json(ring, r.tuple.entries()));
    obj.insert("sign".into(), json!(r.tuple.sign().as_i8()));
    obj.insert("irreducible".into(), json!(r.irreducible));
    obj.insert("decided_by".into(), json!(r.decided_by.label()));
    obj.insert("criterion_data".into(), Value::Object(data));
    if let Some(w) = &r.witness {
        obj.insert("witness".into(), witness_json(ring, w));
    }
    Value::Object(obj)
}

fn report_row(r: &FamilyReport) -> Vec<String> {
    let ring = r.tuple.ring();
    let params: Vec<String> = r.params.iter().map(|&x| ring.format(x)).collect();
    vec![
        r.kind.name().to_string(),
        params.join(" "),
        r.size.to_string(),
        r.irreducible.to_string(),
        r.decided_by.label().to_string(),
    ]
}

fn dispatch(ctx: &Ctx, cmd: &Command, err: &mut Vec<u8>) -> Result<Report, Failure> {
    match cmd {
        Command::RingInfo { ring } => {
            let r = ctx.ring(ring)?;
            let mut obj = Map::new();
            obj.insert("spec".into(), json!(r.spec()));
            match r.kind() {
                RingKind::ZMod { n } => {
                    obj.insert("kind".into(), json!("zmod"));
                    obj.insert("modulus".into(), json!(n));
                }
                RingKind::Gf { p, n, modpoly } => {
                    obj.insert("kind".into(), json!("gf"));
                    obj.insert("p".into(), json!(p));
                    obj.insert("degree".into(), json!(n));
                    obj.insert("modpoly".into(), json!(modpoly));
                }
            }
            obj.insert("cardinality".into(), json!(r.cardinality()));
            obj.insert("characteristic".into(), json!(r.characteristic()));
            obj.insert("is_field".into(), json!(r.is_field()));
            obj.insert("units".into(), json!(r.unit_count()));
            let upper = bounds::ell_theoretic_upper(&r);
            let upper = u64::try_from(upper).map_or_else(|_| json!(upper.to_string()), |u| json!(u));
            obj.insert("ell_theoretic_upper".into(), upper);
            Ok(Report::json(Value::Object(obj)))
        }
        Command::Continuant { ring, tuple } => {
            let r = ctx.ring(ring)?;
            let t = parse_tuple(&r, tuple)?;
            let k = continuant::continuant(&r, &t)?;
            let m = continuant::m_matrix(&r, &t)?;
            let e = |x| element_json(&r, x);
            Ok(Report::json(json!({
                "continuant": e(k),
                "matrix": [[e(m.a11), e(m.a12)], [e(m.a21), e(m.a22)]],
            })))
        }
        Command::Check { ring, tuple } => {
            let r = ctx.ring(ring)?;
            let t = parse_tuple(&r, tuple)?;
            let mut obj = Map::new();
            match quiddity::is_quiddity(&r, &t)? {
                None => {
                    obj.insert("solution".into(), json!(false));
                    obj.insert("sign".into(), Value::Null);
                    obj.insert("reducible".into(), Value::Null);
                }
                Some(sign) => {
                    obj.insert("solution".into(), json!(true));
                    obj.insert("sign".into(), json!(sign.as_i8()));
                    let sol = QuiddityTuple::new(&r, t)?;
                    match quiddity::classify(&sol) {
                        Reducibility::NotApplicable => {
                            obj.insert("reducible".into(), Value::Null);
                            obj.insert("note".into(), json!("not applicable below size 3"));
                        }
                        Reducibility::Irreducible => {
                            obj.insert("reducible".into(), json!(false));
                        }
                        Reducibility::Reducible(w) => {
                            obj.insert("reducible".into(), json!(true));
                            obj.insert("witness".into(), witness_json(&r, &w));
                        }
                    }
                }
            }
            Ok(Report::json(Value::Object(obj)))
        }
        Command::Oplus { ring, left, right } => {
            let r = ctx.ring(ring)?;
            let (a, b) = (parse_tuple(&r, left)?, parse_tuple(&r, right)?);
            let sum = quiddity::oplus(&r, &a, &b)?;
            let solution = quiddity::is_quiddity(&r, &sum)?.is_some();
            Ok(Report::json(json!({ "result": tuple_json(&r, &sum), "solution": solution })))
        }
        Command::Equivalent { ring, left, right } => {
            let r = ctx.ring(ring)?;
            let (a, b) = (parse_tuple(&r, left)?, parse_tuple(&r, right)?);
            Ok(Report::json(json!({ "equivalent": quiddity::equivalent(&r, &a, &b)? })))
        }
        Command::Family { kind, ring, params, all } => {
            let k = FamilyKind::from_name(kind).ok_or_else(|| Failure::Domain(format!("unknown family `{kind}`")))?;
            let r = ctx.ring(ring)?;
            let header = vec!["kind", "params", "size", "irreducible", "decided_by"];
            if *all {
                let reports = families::enumerate_family(&r, k)?;
                let rows = reports.iter().map(report_row).collect();
                let json = Value::Array(reports.iter().map(report_json).collect());
                return Ok(Report::table(json, header, rows));
            }
            let params = params
                .as_deref()
                .ok_or_else(|| Failure::Domain("--params or --all is required".into()))?;
            let ps = parse_tuple(&r, params)?;
            let rep = families::construct(&r, k, &ps)?;
            Ok(Report::table(report_json(&rep), header, vec![report_row(&rep)]))
        }
        Command::Ell { ring, upper, nmax } => {
            let r = ctx.ring(ring)?;
            let b = bounds::ell_lower_bound(&r)?;
            let mut obj = Map::new();
            obj.insert("ring".into(), json!(r.spec()));
            obj.insert("lower".into(), json!(b.lower));
            obj.insert("strategy".into(), json!(b.strategy.label()));
            obj.insert("lower_witness".into(), report_json(&b.lower_witness));
            let mut budget_hit = false;
            let mut rows = vec![vec!["lower".to_string(), b.lower.to_string()]];
            if *upper {
                let cap = ctx.budget.map_or(DEFAULT_SURVIVOR_CAP, |v| v as usize);
                let s = bounds::ell_upper_bound_search(&r, *nmax, cap)?;
                budget_hit = s.budget_exhausted;
                obj.insert("upper".into(), json!(s.upper));
                obj.insert("cutoff".into(), json!(s.cutoff));
                obj.insert("counts".into(), json!(s.counts[1..]));
                if let Some(u) = s.upper {
                    rows.push(vec!["upper".into(), u.to_string()]);
                }
                for (n, c) in s.counts.iter().enumerate().skip(1) {
                    rows.push(vec![format!("count{n}"), c.to_string()]);
                }
            } else {
                obj.insert("upper".into(), Value::Null);
            }
            let mut rep = Report::table(Value::Object(obj), vec!["key", "value"], rows);
            rep.budget_hit = budget_hit;
            Ok(rep)
        }
        Command::ScanDynomial { p } => {
            let pairs = bounds::scan_dynomial_pairs(*p)?;
            let rows = pairs.iter().map(|(a, b)| vec![a.to_string(), b.to_string()]).collect();
            Ok(Report::table(json!(pairs), vec!["a", "b"], rows))
        }
        Command::ScanTrinomial { p } => {
            let xs = bounds::scan_trinomial(*p)?;
            let rows = xs.iter().map(|x| vec![x.to_string()]).collect();
            Ok(Report::table(json!(xs), vec!["x"], rows))
        }
        Command::Conjecture { from, to } => {
            let ws = bounds::conjecture_witnesses(*from, *to)?;
            if ctx.verbose {
                for (p, w) in &ws {
                    match w {
                        Some(j) => writeln!(err, "p={p} generator={j}"),
                        None => writeln!(err, "p={p} no generator"),
                    }
                    .map_err(|e| Failure::Domain(e.to_string()))?;
                }
            }
            let bad: Vec<u64> = ws.iter().filter_map(|(p, w)| w.is_none().then_some(*p)).collect();
            let rows = bad.iter().map(|p| vec![p.to_string()]).collect();
            Ok(Report::table(json!(bad), vec!["p"], rows))
        }
        Command::MersennePhi { a, b } => {
            let ns = arith::mersenne_phi_deficit(*a, *b)?;
            let rows = ns.iter().map(|n| vec![n.to_string()]).collect();
            Ok(Report::table(json!(ns), vec!["n"], rows))
        }
        Command::Squares { ring } => {
            let r = ctx.ring(ring)?;
            let sq = arith::square_table(&r)?;
            let rows = sq.iter().map(|&x| vec![r.format(x)]).collect();
            Ok(Report::table(tuple_json(&r, &sq), vec!["square"], rows))
        }
        Command::Legendre { a, p } => {
            let v = arith::legendre(*a, *p)?;
            Ok(Report::table(json!(v.as_i8()), vec!["value"], vec![vec![v.as_i8().to_string()]]))
        }
        Command::Szymiczek { ring, m } => {
            let r = ctx.ring(ring)?;
            match m {
                Some(m) => {
                    let holds = arith::szymiczek_sum_check(&r, *m)?;
                    let formula = arith::szymiczek_formula(&r, *m)?;
                    Ok(Report::json(json!({
                        "m": m,
                        "formula": element_json(&r, formula),
                        "holds": holds,
                    })))
                }
                None => {
                    let top = 2 * (r.cardinality() - 1);
                    let mut failures = Vec::new();
                    for m in 0..=top {
                        if !arith::szymiczek_sum_check(&r, m)? {
                            failures.push(m);
                        }
                    }
                    Ok(Report::json(json!({
                        "checked": top + 1,
                        "holds": failures.is_empty(),
                        "failures": failures,
                    })))
                }
            }
        }
    }
}
