//! Command surface: every subcommand runs one query and emits a single
//! JSON document on stdout (`--format text` renders the same fields as
//! plain lines). Exit codes: 0 ok, 1 usage error, 2 verification mismatch,
//! 3 resource limit.

use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use fibpow_core::counting::{
    self, count_closed, count_generic, count_oracle, tables, CountResult, EngineChoice, Family,
};
use fibpow_core::error::Error;
use fibpow_core::fib::fib;
use fibpow_core::kernels;
use fibpow_core::oracle::window_power_counts;
use fibpow_core::spectra::{ExponentSpec, PositionSeq};
use fibpow_core::word::{self, Word};
use fibpow_core::zeck::{eval_digit_str, ZeckRep};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    UsageError,
    VerificationMismatch,
    ResourceLimit,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::UsageError => 1,
            Status::VerificationMismatch => 2,
            Status::ResourceLimit => 3,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::UsageError => "usage-error",
            Status::VerificationMismatch => "verification-mismatch",
            Status::ResourceLimit => "resource-limit",
        }
    }
}

pub struct CommandResult {
    pub status: Status,
    pub doc: Value,
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(name = "fibpow", version, about = "Exact queries over fractional powers in the Fibonacci word", disable_help_subcommand = true)]
struct Cli {
    /// Output format for the single result document.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// The letter F[i].
    Letter {
        /// 1-based position (decimal, any length).
        #[arg(long)]
        index: String,
    },
    /// The prefix F[1, n].
    Prefix {
        #[arg(long)]
        length: u64,
    },
    /// The window F[i; n].
    Window {
        #[arg(long)]
        start: String,
        #[arg(long)]
        length: u64,
    },
    /// Zeckendorf numeration.
    Zeck {
        #[command(subcommand)]
        op: ZeckOp,
    },
    /// Kernel words: by index (optionally an occurrence) or of a factor.
    Kernel(KernelArgs),
    /// Return-word decomposition of a factor.
    Returns {
        #[arg(long)]
        word: String,
    },
    /// A slice of the position sequence of r-powers of size f_m.
    Spectrum {
        #[arg(long)]
        r: String,
        #[arg(long)]
        m: i64,
        #[arg(long, default_value = "1")]
        start: String,
        #[arg(long, default_value = "50")]
        length: u64,
    },
    /// The number of distinct r-powers in F[i; n].
    Count {
        #[arg(long)]
        r: String,
        #[arg(long)]
        start: String,
        #[arg(long)]
        length: u64,
        #[arg(long, value_enum, default_value = "closed")]
        engine: EngineArg,
        /// Also list the distinct factors (enumerated by the oracle).
        #[arg(long)]
        list: bool,
    },
    /// Closed-form max and min of D(2, i, n) over all i.
    Extremal {
        #[arg(long)]
        length: u64,
        /// Also sweep one period for witness positions.
        #[arg(long)]
        witness: bool,
    },
    /// An index i0 with D(2, i0, n) equal to the target.
    Witness {
        #[arg(long)]
        length: u64,
        #[arg(long)]
        target: u64,
    },
    /// Derived statistics.
    Stats {
        #[command(subcommand)]
        op: StatsOp,
    },
    /// Engine-agreement sweeps (closed vs generic vs oracle).
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        family: FamilyArg,
        #[arg(long, default_value = "400")]
        i_max: u64,
        #[arg(long, default_value = "250")]
        n_max: u64,
        /// Worker threads over disjoint start-position ranges.
        #[arg(long, default_value = "1")]
        jobs: usize,
        /// Write the table errata report to this path.
        #[arg(long)]
        emit_errata: Option<String>,
    },
}

#[derive(Subcommand)]
enum ZeckOp {
    /// Canonical digits of a value.
    Encode {
        #[arg(long)]
        value: String,
    },
    /// Value of a (possibly non-canonical) digit word.
    Eval {
        #[arg(long)]
        digits: String,
    },
}

#[derive(Args)]
struct KernelArgs {
    /// Kernel index m >= -2.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    /// Occurrence number p (with --m): the position (K_m)_p.
    #[arg(long)]
    occurrence: Option<String>,
    /// A factor of F: report its kernel and offset.
    #[arg(long)]
    word: Option<String>,
}

#[derive(Subcommand)]
enum StatsOp {
    /// Positions starting a cube in F[1, f_m].
    CubeStarts {
        #[arg(long)]
        m: i64,
    },
    /// Exact max/n, min/n, spread/n for the square count.
    Ratios {
        #[arg(long)]
        length: u64,
    },
    /// Per-size periodicity bounds and scanned lengths.
    Critical {
        #[arg(long, default_value = "8")]
        m_max: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Closed,
    Generic,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Squares,
    #[value(name = "2plus")]
    TwoPlus,
    Cubes,
    All,
}

fn parse_exponent(s: &str) -> Result<ExponentSpec, Error> {
    match s {
        "2" => Ok(ExponentSpec::square()),
        "3" => Ok(ExponentSpec::cube()),
        "2plus" | "2+eps" | "2plus-eps" => Ok(ExponentSpec::two_plus_eps()),
        other => {
            if let Some((p, q)) = other.split_once('/') {
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Domain(format!("bad exponent {other:?}")))?;
                let q: u64 = q
                    .parse()
                    .map_err(|_| Error::Domain(format!("bad exponent {other:?}")))?;
                ExponentSpec::exact(p, q)
            } else {
                Err(Error::Domain(format!(
                    "exponent must be 2, 2plus, 3 or P/Q, got {other:?}"
                )))
            }
        }
    }
}

fn parse_index(s: &str) -> Result<BigUint, Error> {
    BigUint::from_str(s).map_err(|_| Error::Domain(format!("bad position {s:?}")))
}

fn status_of(e: &Error) -> Status {
    match e {
        Error::Domain(_) => Status::UsageError,
        Error::Resource(_) => Status::ResourceLimit,
        Error::Verification(_) => Status::VerificationMismatch,
    }
}

/// Parses and runs one invocation. `argv` excludes the program name.
pub fn run(argv: &[String]) -> CommandResult {
    let mut full = vec!["fibpow".to_string()];
    full.extend_from_slice(argv);
    let cli = match Cli::try_parse_from(&full) {
        Ok(c) => c,
        Err(e) => {
            // clap renders its own help/usage text; route it to stderr and
            // report a usage error document.
            let rendered = e.render().to_string();
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            eprintln!("{rendered}");
            return CommandResult {
                status: if is_help { Status::Ok } else { Status::UsageError },
                doc: json!({
                    "command": "parse",
                    "status": if is_help { "ok" } else { "usage-error" },
                    "error": if is_help { Value::Null } else { Value::String(rendered) },
                }),
                format: Format::Json,
            };
        }
    };
    let format = cli.format;
    match dispatch(cli.cmd) {
        Ok((command, inputs, result, engine, errata)) => {
            let mut doc = json!({
                "command": command,
                "status": "ok",
                "inputs": inputs,
                "result": result,
            });
            if let Some(engine) = engine {
                doc["engine"] = Value::String(engine.to_string());
            }
            if !errata.is_empty() {
                doc["errata"] = Value::Array(
                    errata
                        .iter()
                        .map(|id| {
                            json!({
                                "id": id,
                                "note": tables::erratum_note(id).unwrap_or(""),
                            })
                        })
                        .collect(),
                );
            }
            CommandResult { status: Status::Ok, doc, format }
        }
        Err((command, e)) => {
            let status = status_of(&e);
            eprintln!("fibpow {command}: {e}");
            CommandResult {
                status,
                doc: json!({
                    "command": command,
                    "status": status.label(),
                    "error": e.to_string(),
                }),
                format,
            }
        }
    }
}

type Outcome = Result<(String, Value, Value, Option<String>, Vec<&'static str>), (String, Error)>;

fn dispatch(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Letter { index } => {
            let name = "letter".to_string();
            let i = parse_index(&index).map_err(|e| (name.clone(), e))?;
            let l = word::letter_at(&i).map_err(|e| (name.clone(), e))?;
            Ok((
                name,
                json!({ "index": index }),
                json!({ "letter": l.to_string() }),
                None,
                vec![],
            ))
        }
        Cmd::Prefix { length } => {
            let name = "prefix".to_string();
            let w = word::fib_prefix(length).map_err(|e| (name.clone(), e))?;
            Ok((
                name,
                json!({ "length": length }),
                json!({ "word": w.to_string() }),
                None,
                vec![],
            ))
        }
        Cmd::Window { start, length } => {
            let name = "window".to_string();
            let i = parse_index(&start).map_err(|e| (name.clone(), e))?;
            let w = word::window(&i, length).map_err(|e| (name.clone(), e))?;
            Ok((
                name,
                json!({ "start": start, "length": length }),
                json!({ "word": w.to_string() }),
                None,
                vec![],
            ))
        }
        Cmd::Zeck { op } => match op {
            ZeckOp::Encode { value } => {
                let name = "zeck-encode".to_string();
                let v = parse_index(&value).map_err(|e| (name.clone(), e))?;
                let z = ZeckRep::encode(&v);
                Ok((
                    name,
                    json!({ "value": value }),
                    json!({ "digits": z.to_string() }),
                    None,
                    vec![],
                ))
            }
            ZeckOp::Eval { digits } => {
                let name = "zeck-eval".to_string();
                let v = eval_digit_str(&digits).map_err(|e| (name.clone(), e))?;
                Ok((
                    name,
                    json!({ "digits": digits }),
                    json!({ "value": v.to_string() }),
                    None,
                    vec![],
                ))
            }
        },
        Cmd::Kernel(args) => kernel_cmd(args),
        Cmd::Returns { word: w } => {
            let name = "returns".to_string();
            let w: Word = w.parse().map_err(|e| (name.clone(), e))?;
            let d = kernels::return_words(&w).map_err(|e| (name.clone(), e))?;
            Ok((
                name,
                json!({ "word": w.to_string() }),
                json!({
                    "r0": d.prefix_r0.to_string(),
                    "r1": d.r1.to_string(),
                    "r2": d.r2.to_string(),
                }),
                None,
                vec![],
            ))
        }
        Cmd::Spectrum { r, m, start, length } => {
            let name = "spectrum".to_string();
            let spec = parse_exponent(&r).map_err(|e| (name.clone(), e))?;
            let i = parse_index(&start).map_err(|e| (name.clone(), e))?;
            if length > word::DEFAULT_CAP {
                return Err((name, Error::Resource("slice too long".into())));
            }
            let seq = PositionSeq::new(spec, m).map_err(|e| (name.clone(), e))?;
            let values = seq.value_range(&i, length).map_err(|e| (name.clone(), e))?;
            Ok((
                name,
                json!({ "r": r, "m": m, "start": start, "length": length }),
                json!({
                    "occupied_length": seq.spec.occupied_len(fib(m) as u128).to_string(),
                    "values": values,
                }),
                None,
                vec![],
            ))
        }
        Cmd::Count { r, start, length, engine, list } => count_cmd(r, start, length, engine, list),
        Cmd::Extremal { length, witness } => {
            let name = "extremal".to_string();
            let (max, min) = counting::extremal(length).map_err(|e| (name.clone(), e))?;
            let mut result = json!({ "max": max, "min": min });
            if witness {
                let (smax, imax, smin, imin) =
                    counting::extremal_sweep(length).map_err(|e| (name.clone(), e))?;
                if smax != max || smin != min {
                    return Err((
                        name,
                        Error::Verification(format!(
                            "formula ({max}, {min}) vs sweep ({smax}, {smin})"
                        )),
                    ));
                }
                result["max_witness"] = json!(imax);
                result["min_witness"] = json!(imin);
            }
            Ok((
                name,
                json!({ "length": length }),
                result,
                Some("closed".into()),
                vec![],
            ))
        }
        Cmd::Witness { length, target } => {
            let name = "witness".to_string();
            let i0 = counting::find_index_with_count(length, target)
                .map_err(|e| (name.clone(), e))?;
            Ok((
                name,
                json!({ "length": length, "target": target }),
                json!({ "index": i0 }),
                Some("closed".into()),
                vec![],
            ))
        }
        Cmd::Stats { op } => stats_cmd(op),
        Cmd::Verify { family, i_max, n_max, jobs, emit_errata } => {
            verify_cmd(family, i_max, n_max, jobs, emit_errata)
        }
    }
}

fn kernel_cmd(args: KernelArgs) -> Outcome {
    let name = "kernel".to_string();
    match (args.m, args.word) {
        (Some(m), None) => {
            let kw = kernels::kernel_word(m).map_err(|e| (name.clone(), e))?;
            let mut result = json!({
                "word": kw.to_string(),
                "length": kw.len(),
            });
            let occurrence = match args.occurrence {
                Some(p) => {
                    let p = parse_index(&p).map_err(|e| (name.clone(), e))?;
                    let pos = kernels::kernel_occurrence(m, &p).map_err(|e| (name.clone(), e))?;
                    Some(pos.to_string())
                }
                None => None,
            };
            if let Some(pos) = occurrence {
                result["position"] = Value::String(pos);
            }
            Ok((name, json!({ "m": m }), result, None, vec![]))
        }
        (None, Some(w)) => {
            let w: Word = w.parse().map_err(|e| (name.clone(), e))?;
            let (m, offset) = kernels::kernel_of(&w).map_err(|e| (name.clone(), e))?;
            let kw = kernels::kernel_word(m).map_err(|e| (name.clone(), e))?;
            Ok((
                name,
                json!({ "word": w.to_string() }),
                json!({ "m": m, "offset": offset, "kernel": kw.to_string() }),
                None,
                vec![],
            ))
        }
        _ => Err((
            name,
            Error::Domain("pass exactly one of --m or --word".into()),
        )),
    }
}

fn count_cmd(r: String, start: String, length: u64, engine: EngineArg, list: bool) -> Outcome {
    let name = "count".to_string();
    let spec = parse_exponent(&r).map_err(|e| (name.clone(), e))?;
    let i = parse_index(&start).map_err(|e| (name.clone(), e))?;
    let choice = match engine {
        EngineArg::Closed => EngineChoice::Closed,
        EngineArg::Generic => EngineChoice::Generic,
        EngineArg::Oracle => EngineChoice::Oracle,
        EngineArg::All => EngineChoice::All,
    };
    let outcome: CountResult =
        counting::count(spec, &i, length, choice).map_err(|e| (name.clone(), e))?;
    let mut result = json!({ "value": outcome.value });
    if let Some(range) = &outcome.range {
        result["range"] = json!(range.label);
        result["h"] = json!(range.h);
    }
    if let Some(hat) = outcome.hat_index {
        result["hat_index"] = json!(hat.to_string());
    }
    if outcome.delegated {
        result["delegated_to_generic"] = json!(true);
    }
    if list {
        let (_, factors) = count_oracle(spec, &i, length).map_err(|e| (name.clone(), e))?;
        result["factors"] = Value::Array(
            factors
                .iter()
                .map(|f| {
                    json!({
                        "text": f.text.to_string(),
                        "size": f.size,
                        "length": f.length,
                    })
                })
                .collect(),
        );
    }
    let engine_label = outcome.engine.label().to_string();
    let errata = outcome.errata.clone();
    Ok((
        name,
        json!({ "r": r, "start": start, "length": length }),
        result,
        Some(engine_label),
        errata,
    ))
}

fn stats_cmd(op: StatsOp) -> Outcome {
    match op {
        StatsOp::CubeStarts { m } => {
            let name = "stats-cube-starts".to_string();
            let closed = counting::cube_start_count(m).map_err(|e| (name.clone(), e))?;
            let rec = counting::cube_start_count_recurrence(m).map_err(|e| (name.clone(), e))?;
            if closed != rec {
                return Err((
                    name,
                    Error::Verification(format!("C({m}): closed {closed} vs recurrence {rec}")),
                ));
            }
            Ok((
                name,
                json!({ "m": m }),
                json!({ "count": closed, "recurrence": rec }),
                Some("closed".into()),
                vec![],
            ))
        }
        StatsOp::Ratios { length } => {
            let name = "stats-ratios".to_string();
            let r = counting::ratio_report(length).map_err(|e| (name.clone(), e))?;
            let frac = |q: fibpow_core::num_rational::Ratio<i128>| {
                json!({
                    "numer": q.numer().to_string(),
                    "denom": q.denom().to_string(),
                    "decimal": (*q.numer() as f64) / (*q.denom() as f64),
                })
            };
            Ok((
                name,
                json!({ "length": length }),
                json!({
                    "max": r.max,
                    "min": r.min,
                    "spread": r.spread,
                    "max_over_n": frac(r.max_ratio),
                    "min_over_n": frac(r.min_ratio),
                    "spread_over_n": frac(r.spread_ratio),
                }),
                Some("closed".into()),
                vec![],
            ))
        }
        StatsOp::Critical { m_max } => {
            let name = "stats-critical".to_string();
            if m_max < 2 {
                return Err((name, Error::Domain("m-max must be at least 2".into())));
            }
            let text = word::fib_prefix(fib(15) as u64).map_err(|e| (name.clone(), e))?;
            let rows: Vec<Value> = (2..=m_max)
                .map(|m| {
                    let bound = counting::critical_exponent_bound(m).unwrap();
                    let scanned = fibpow_core::oracle::periodicity_scan(&text, fib(m) as u64);
                    json!({
                        "m": m,
                        "period": fib(m) as u64,
                        "longest_factor": scanned,
                        "exponent": scanned as f64 / fib(m) as f64,
                        "stated_bound": format!("{}/{}", bound.numer(), bound.denom()),
                    })
                })
                .collect();
            Ok((
                name,
                json!({ "m_max": m_max }),
                json!({
                    "rows": rows,
                    "limit": counting::critical_exponent_limit(),
                }),
                Some("oracle".into()),
                vec!["shrink-threshold"],
            ))
        }
    }
}

fn verify_cmd(
    family: FamilyArg,
    i_max: u64,
    n_max: u64,
    jobs: usize,
    emit_errata: Option<String>,
) -> Outcome {
    let name = "verify".to_string();
    if let Some(path) = &emit_errata {
        let mut report = String::from("Table errata: corrections applied to the printed rows\n\n");
        for e in tables::TABLE_ERRATA {
            report.push_str(&format!("[{}]\n{}\n\n", e.id, e.note));
        }
        std::fs::write(path, report)
            .map_err(|e| (name.clone(), Error::Resource(format!("writing {path}: {e}"))))?;
    }
    if i_max == 0 || n_max < 2 {
        return Err((name, Error::Domain("need i-max >= 1 and n-max >= 2".into())));
    }
    if i_max.saturating_add(n_max) > word::DEFAULT_CAP {
        return Err((name, Error::Resource("sweep window exceeds the cap".into())));
    }
    let families: Vec<Family> = match family {
        FamilyArg::Squares => vec![Family::Squares],
        FamilyArg::TwoPlus => vec![Family::TwoPlusEps],
        FamilyArg::Cubes => vec![Family::Cubes],
        FamilyArg::All => vec![Family::Squares, Family::TwoPlusEps, Family::Cubes],
    };
    let jobs = jobs.max(1);
    let prefix = word::fib_prefix(i_max + n_max).map_err(|e| (name.clone(), e))?;

    // Workers take disjoint start-position stripes; results merge by
    // conjunction.
    let mut mismatches: Vec<Value> = Vec::new();
    let mut compared = 0u64;
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for worker in 0..jobs {
            let families = families.clone();
            let prefix = &prefix;
            handles.push(scope.spawn(move || {
                let mut local_mismatch = Vec::new();
                let mut local_count = 0u64;
                let mut i = worker as u64 + 1;
                while i <= i_max {
                    for &family in &families {
                        let spec = family.spec();
                        let text = prefix.window(i as usize, n_max as usize);
                        let oracle = window_power_counts(&text, spec);
                        for n in family.min_window()..=n_max {
                            let want = oracle[n as usize];
                            let generic =
                                count_generic(spec, &BigUint::from(i), n).unwrap_or(u64::MAX);
                            let closed = count_closed(family, &BigUint::from(i), n)
                                .map(|r| r.value)
                                .unwrap_or(u64::MAX);
                            local_count += 1;
                            if generic != want || closed != want {
                                local_mismatch.push(json!({
                                    "family": family.label(),
                                    "i": i,
                                    "n": n,
                                    "closed": closed,
                                    "generic": generic,
                                    "oracle": want,
                                }));
                                if local_mismatch.len() >= 5 {
                                    return (local_mismatch, local_count);
                                }
                            }
                        }
                    }
                    i += jobs as u64;
                }
                (local_mismatch, local_count)
            }));
        }
        for h in handles {
            let (mm, c) = h.join().expect("verify worker panicked");
            mismatches.extend(mm);
            compared += c;
        }
    });

    if !mismatches.is_empty() {
        return Err((
            name,
            Error::Verification(
                serde_json::to_string(&json!({
                    "mismatches": mismatches,
                    "compared": compared,
                }))
                .unwrap(),
            ),
        ));
    }
    Ok((
        name,
        json!({
            "family": families.iter().map(|f| f.label()).collect::<Vec<_>>(),
            "i_max": i_max,
            "n_max": n_max,
            "jobs": jobs,
        }),
        json!({ "compared": compared, "mismatches": 0 }),
        None,
        vec![],
    ))
}

/// Renders the document as plain text lines (`--format text`).
pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(map) => {
                for (k, v) in map {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, v, out);
                }
            }
            Value::Array(items) => {
                for (idx, v) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{idx}]"), v, out);
                }
            }
            other => {
                let shown = match other {
                    Value::String(s) => s.clone(),
                    v => v.to_string(),
                };
                out.push_str(&format!("{prefix}: {shown}\n"));
            }
        }
    }
    walk("", doc, &mut out);
    out
}
