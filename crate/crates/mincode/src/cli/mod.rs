//! Command-line surface: construct, extend, complement, analyze, reproduce.
//!
//! Exit codes: 0 success; 2 precondition failure (Ashikhmin-Barg fails, not
//! projective, not self-orthogonal); 3 enumeration cap exceeded; 1 anything
//! else. The enumeration cap defaults to 2^22 messages, can be raised via
//! the MINCODE_CAP environment variable or the --cap flag; lowering --cap
//! below a code's message count skips the minimality scan instead of
//! failing the whole analysis.

pub mod fixtures;
pub mod matfile;
pub mod report;

use std::io::Write;

use crate::analysis::{analyze, AnalyzeOptions};
use crate::codes::LinearCode;
use crate::constructions::{
    ab_violating_extend, dual_bch_trace, even_weight_code, self_orthogonal_extend, simplex,
    simplex_complement, solomon_stiffler,
};
use crate::{Error, Result, DEFAULT_ENUM_CAP};

use report::{render_json, render_text, Provenance, ReportDocument};

const USAGE: &str = "usage: mincode <command> [flags]

commands:
  construct <family>   build a generator matrix
                       families: simplex (--q --m), solomon-stiffler (--k --u ...),
                                 even-weight (--n), dual-bch (--m)
  extend               apply the AB-violating extension to --in
                       (--self-orthogonal for the padded variant)
  complement           simplex complement of --in at --h
  analyze              full verification report for --in
  reproduce            re-run the published table rows (--table 2 | 3 |
                       tab:5-1 | tab:6-1 | tab:6-2 | appendix-A | all)

flags:
  --q N --m N --k N --u N (repeatable) --h N --n N
  --in PATH --out PATH --json --skip-minimality --cap N --self-orthogonal
  --table ID

environment:
  MINCODE_CAP          overrides the default enumeration cap (2^22 messages)";

#[derive(Debug, Default)]
struct Args {
    command: Option<String>,
    family: Option<String>,
    q: Option<u64>,
    m: Option<u64>,
    k: Option<u64>,
    h: Option<u64>,
    n: Option<u64>,
    u: Vec<u64>,
    input: Option<String>,
    output: Option<String>,
    json: bool,
    skip_minimality: bool,
    cap: Option<u64>,
    self_orthogonal: bool,
    table: Option<String>,
}

fn parse_args(argv: &[String]) -> Result<Args> {
    let mut args = Args::default();
    let mut it = argv.iter().peekable();
    while let Some(tok) = it.next() {
        match tok.as_str() {
            "--q" => args.q = Some(int_value(&mut it, "--q")?),
            "--m" => args.m = Some(int_value(&mut it, "--m")?),
            "--k" => args.k = Some(int_value(&mut it, "--k")?),
            "--h" => args.h = Some(int_value(&mut it, "--h")?),
            "--n" => args.n = Some(int_value(&mut it, "--n")?),
            "--u" => args.u.push(int_value(&mut it, "--u")?),
            "--cap" => args.cap = Some(int_value(&mut it, "--cap")?),
            "--in" => args.input = Some(string_value(&mut it, "--in")?),
            "--out" => args.output = Some(string_value(&mut it, "--out")?),
            "--table" => args.table = Some(string_value(&mut it, "--table")?),
            "--json" => args.json = true,
            "--skip-minimality" => args.skip_minimality = true,
            "--self-orthogonal" => args.self_orthogonal = true,
            "--help" | "-h" => {
                return Err(Error::Usage("help".into()));
            }
            flag if flag.starts_with("--") => {
                return Err(Error::Usage(format!("unknown flag {flag}")));
            }
            word => {
                if args.command.is_none() {
                    args.command = Some(word.to_string());
                } else if args.command.as_deref() == Some("construct") && args.family.is_none() {
                    args.family = Some(word.to_string());
                } else {
                    return Err(Error::Usage(format!("unexpected argument {word:?}")));
                }
            }
        }
    }
    Ok(args)
}

fn int_value(
    it: &mut std::iter::Peekable<std::slice::Iter<'_, String>>,
    flag: &str,
) -> Result<u64> {
    let v = it
        .next()
        .ok_or_else(|| Error::Usage(format!("{flag} needs a value")))?;
    v.parse::<u64>()
        .map_err(|_| Error::Usage(format!("{flag} needs an integer, got {v:?}")))
}

fn string_value(
    it: &mut std::iter::Peekable<std::slice::Iter<'_, String>>,
    flag: &str,
) -> Result<String> {
    it.next()
        .map(|s| s.to_string())
        .ok_or_else(|| Error::Usage(format!("{flag} needs a value")))
}

fn env_cap() -> u64 {
    std::env::var("MINCODE_CAP")
        .ok()
        .and_then(|v| v.parse::<u64>().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

/// Enumeration cap: env/default, raised (never lowered) by --cap.
fn enumeration_cap(args: &Args) -> u64 {
    let base = env_cap();
    match args.cap {
        Some(c) if c > base => c,
        _ => base,
    }
}

/// Run the CLI; returns the process exit code.
pub fn run(argv: &[String], stdout: &mut impl Write, stderr: &mut impl Write) -> i32 {
    let args = match parse_args(argv) {
        Ok(a) => a,
        Err(e) => {
            if matches!(&e, Error::Usage(msg) if msg == "help") {
                let _ = writeln!(stdout, "{USAGE}");
                return 0;
            }
            let _ = writeln!(stderr, "error: {e}");
            let _ = writeln!(stderr, "{USAGE}");
            return 1;
        }
    };
    let result = match args.command.as_deref() {
        Some("construct") => cmd_construct(&args, stdout, stderr),
        Some("extend") => cmd_extend(&args, stdout),
        Some("complement") => cmd_complement(&args, stdout),
        Some("analyze") => cmd_analyze(&args, stdout),
        Some("reproduce") => cmd_reproduce(&args, stdout),
        Some(other) => Err(Error::Usage(format!("unknown command {other:?}"))),
        None => Err(Error::Usage("no command given".into())),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if matches!(e, Error::Usage(_)) {
                let _ = writeln!(stderr, "{USAGE}");
            }
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::AbConditionFails { .. } | Error::NotProjective | Error::NotSelfOrthogonal => 2,
        Error::EnumerationTooLarge { .. } => 3,
        _ => 1,
    }
}

fn read_input(args: &Args) -> Result<LinearCode> {
    let path = args
        .input
        .as_deref()
        .ok_or_else(|| Error::Usage("--in <path> is required".into()))?;
    let text = std::fs::read_to_string(path)?;
    matfile::parse_code(&text, enumeration_cap(args))
}

fn write_output(args: &Args, code: &LinearCode, stdout: &mut impl Write) -> Result<bool> {
    match args.output.as_deref() {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            matfile::write_code(code, &mut f)?;
            Ok(true)
        }
        None => {
            matfile::write_code(code, stdout)?;
            Ok(false)
        }
    }
}

fn need(v: Option<u64>, flag: &str, family: &str) -> Result<u64> {
    v.ok_or_else(|| Error::Usage(format!("construct {family} needs {flag}")))
}

fn cmd_construct(args: &Args, stdout: &mut impl Write, stderr: &mut impl Write) -> Result<i32> {
    let family = args
        .family
        .as_deref()
        .ok_or_else(|| Error::Usage("construct needs a family name".into()))?;
    let code = match family {
        "simplex" => {
            let q = need(args.q, "--q", family)?;
            let m = need(args.m, "--m", family)? as usize;
            simplex(q, m)?
        }
        "solomon-stiffler" => {
            let k = need(args.k, "--k", family)? as usize;
            if args.u.is_empty() {
                return Err(Error::Usage("construct solomon-stiffler needs --u".into()));
            }
            let u: Vec<usize> = args.u.iter().map(|&x| x as usize).collect();
            solomon_stiffler(k, &u)?
        }
        "even-weight" => {
            let n = need(args.n, "--n", family)? as usize;
            even_weight_code(n)?
        }
        "dual-bch" => {
            let m = need(args.m, "--m", family)? as usize;
            dual_bch_trace(m)?
        }
        other => {
            return Err(Error::Usage(format!(
                "unknown family {other:?}; expected simplex, solomon-stiffler, even-weight or dual-bch"
            )));
        }
    };
    let to_file = write_output(args, &code, stdout)?;
    let params = match code.weight_distribution() {
        Ok(d) => format!(
            "[{},{},{}]_{} w_max={}",
            code.n(),
            code.k(),
            d.w_min().unwrap_or(0),
            code.q(),
            d.w_max().unwrap_or(0)
        ),
        Err(Error::EnumerationTooLarge { .. }) => format!(
            "[{},{},?]_{} (distance not measured: above enumeration cap)",
            code.n(),
            code.k(),
            code.q()
        ),
        Err(e) => return Err(e),
    };
    if to_file {
        writeln!(stdout, "{params}")?;
    } else {
        writeln!(stderr, "{params}")?;
    }
    Ok(0)
}

fn analyze_with_args(args: &Args, code: &LinearCode) -> Result<crate::analysis::CodeReport> {
    analyze(
        code,
        AnalyzeOptions {
            skip_minimality: args.skip_minimality,
            minimality_cap: Some(args.cap.unwrap_or_else(|| code.cap())),
        },
    )
}

fn emit(doc: &ReportDocument, json: bool, stdout: &mut impl Write) -> Result<()> {
    if json {
        writeln!(stdout, "{}", render_json(doc))?;
    } else {
        write!(stdout, "{}", render_text(doc))?;
    }
    Ok(())
}

fn cmd_extend(args: &Args, stdout: &mut impl Write) -> Result<i32> {
    let code = read_input(args)?;
    let ext = if args.self_orthogonal {
        self_orthogonal_extend(&code)?
    } else {
        ab_violating_extend(&code, None)?
    };
    if args.output.is_some() {
        write_output(args, &ext.code, stdout)?;
    }
    let report = analyze_with_args(args, &ext.code)?;
    let doc = ReportDocument {
        report,
        provenance: Provenance {
            construction: Some(if args.self_orthogonal {
                "self-orthogonal extension".to_string()
            } else {
                "extension".to_string()
            }),
            n_prime: Some(ext.n_prime),
            pad: Some(ext.pad),
            predicted: Some(ext.predicted.clone()),
            threshold_met: None,
        },
    };
    emit(&doc, args.json, stdout)?;
    Ok(0)
}

fn cmd_complement(args: &Args, stdout: &mut impl Write) -> Result<i32> {
    let code = read_input(args)?;
    let h = args.h.unwrap_or(0) as usize;
    let result = simplex_complement(&code, h)?;
    if args.output.is_some() {
        write_output(args, &result.code, stdout)?;
    }
    let report = analyze_with_args(args, &result.code)?;
    let doc = ReportDocument {
        report,
        provenance: Provenance {
            construction: Some(format!("simplex complement, h = {h}")),
            threshold_met: Some(result.threshold_met),
            ..Provenance::default()
        },
    };
    emit(&doc, args.json, stdout)?;
    Ok(0)
}

fn cmd_analyze(args: &Args, stdout: &mut impl Write) -> Result<i32> {
    let code = read_input(args)?;
    let report = analyze_with_args(args, &code)?;
    let doc = ReportDocument {
        report,
        provenance: Provenance::default(),
    };
    emit(&doc, args.json, stdout)?;
    Ok(0)
}

fn cmd_reproduce(args: &Args, stdout: &mut impl Write) -> Result<i32> {
    let table = args
        .table
        .as_deref()
        .ok_or_else(|| Error::Usage("reproduce needs --table".into()))?;
    let mut failed = 0usize;
    if table == "all" {
        for id in fixtures::TABLE_IDS {
            let summary = fixtures::run_table(id, stdout)?.expect("known table id");
            failed += summary.failed;
        }
    } else {
        match fixtures::run_table(table, stdout)? {
            Some(summary) => failed += summary.failed,
            None => {
                return Err(Error::Usage(format!(
                    "unknown table {table:?}; expected one of {:?} or all",
                    fixtures::TABLE_IDS
                )));
            }
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}
