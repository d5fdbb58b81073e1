//! Command dispatch for the `qca` binary.

use std::io::{self, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use qca_core::lie::{build_sl, LieAlgebra};
use qca_core::verify::{self, verify_suite, Case, Options, Report, Suite};

use crate::error::CliError;
use crate::eval::Session;
use crate::json::{algebra_from_json, ghat_to_json, report_to_json, value_to_json};
use crate::parser::{parse, Expr, ExprKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Failures listed in a text report before the rest are summarised.
const SHOWN_FAILURES: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "qca", version, about = "Exact calculator for Laurent spinors on S³ and the current algebra ĝ")]
pub struct Cli {
    /// `sl2`, `sl3`, `sl4` (any `slN`), or a path to a JSON structure-constant file.
    #[arg(long, global = true, default_value = "sl2")]
    pub algebra: String,
    /// Largest basis degree m used by `expand` and the verification suites.
    #[arg(long, global = true, default_value_t = 2)]
    pub max_m: u32,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate an expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Expand a spinor in the basis phi±(m,l,k) up to --max-m.
    Expand {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Compute [x, y], promoting into ĝ where needed.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
    /// Print a reference table.
    Table { which: Table },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Table {
    Generators,
    Section34,
}

pub fn load_algebra(name: &str) -> Result<LieAlgebra, CliError> {
    let input = |e: String| CliError::Input(e);
    if let Some(n) = name.strip_prefix("sl").and_then(|n| n.parse::<usize>().ok()) {
        return build_sl(n).map_err(|e| input(e.to_string()));
    }
    let path = Path::new(name);
    if !path.exists() {
        return Err(input(format!("unknown algebra `{name}`: expected slN or a JSON file")));
    }
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{name}: {e}")))?;
    let j: Json = serde_json::from_str(&text).map_err(|e| input(format!("{name}: {e}")))?;
    algebra_from_json(&j)
}

/// Formats an error with a caret under the offending column of `src`.
pub fn describe_error(err: &CliError, src: Option<&str>) -> String {
    let pos = match err {
        CliError::Parse { pos, .. } | CliError::Type { pos, .. } | CliError::Eval { pos, .. } => Some(*pos),
        CliError::Input(_) => None,
    };
    let mut out = format!("error: {err}");
    if let (Some(pos), Some(src)) = (pos, src) {
        if let Some(line) = src.lines().nth(pos.line.saturating_sub(1) as usize) {
            let pad = " ".repeat(line.chars().take(pos.col.saturating_sub(1) as usize).count());
            out.push_str(&format!("\n  {line}\n  {pad}^"));
        }
    }
    out
}

struct Out<'w, W: Write> {
    w: &'w mut W,
    err: &'w mut dyn Write,
}

impl<W: Write> Out<'_, W> {
    fn line(&mut self, s: impl AsRef<str>) -> io::Result<()> {
        writeln!(self.w, "{}", s.as_ref())
    }

    fn fail(&mut self, err: &CliError, src: Option<&str>) -> io::Result<i32> {
        writeln!(self.err, "{}", describe_error(err, src))?;
        Ok(EXIT_USAGE)
    }
}

/// Runs one command, writing results to `w` and diagnostics to `err`.
pub fn run<W: Write>(cli: &Cli, w: &mut W, err: &mut dyn Write) -> io::Result<i32> {
    let mut out = Out { w, err };
    let g = match load_algebra(&cli.algebra) {
        Ok(g) => g,
        Err(e) => return out.fail(&e, None),
    };
    match &cli.cmd {
        Command::Eval { expr } => eval_cmd(cli, &g, &mut out, expr, |e| e),
        Command::Expand { expr } => {
            eval_cmd(cli, &g, &mut out, expr, |e| Expr { pos: e.pos, kind: ExprKind::Call("expand".into(), vec![e]) })
        }
        Command::Bracket { x, y } => bracket_cmd(cli, &g, &mut out, x, y),
        Command::Verify { suite } => verify_cmd(cli, &g, &mut out, suite),
        Command::Table { which: Table::Generators } => generators_table(cli, &g, &mut out),
        Command::Table { which: Table::Section34 } => identity_table(cli, &g, &mut out),
    }
}

fn eval_cmd<W: Write>(
    cli: &Cli,
    g: &LieAlgebra,
    out: &mut Out<'_, W>,
    src: &str,
    wrap: impl FnOnce(Expr) -> Expr,
) -> io::Result<i32> {
    let s = Session::new(g, cli.max_m);
    let v = match parse(src).map(wrap).and_then(|e| s.run(&e)) {
        Ok(v) => v,
        Err(e) => return out.fail(&e, Some(src)),
    };
    if cli.json {
        out.line(value_to_json(&s, &v).to_string())?;
    } else {
        out.line(s.render(&v))?;
    }
    Ok(EXIT_OK)
}

fn bracket_cmd<W: Write>(cli: &Cli, g: &LieAlgebra, out: &mut Out<'_, W>, x: &str, y: &str) -> io::Result<i32> {
    let s = Session::new(g, cli.max_m);
    let mut args = Vec::new();
    for src in [x, y] {
        match parse(src).and_then(|e| s.typecheck(&e).map(|_| e)) {
            Ok(e) => args.push(e),
            Err(e) => return out.fail(&e, Some(src)),
        }
    }
    let b = args.pop().expect("two arguments");
    let a = args.pop().expect("two arguments");
    let e = Expr { pos: a.pos, kind: ExprKind::Bracket(Box::new(a), Box::new(b)) };
    match s.run(&e) {
        Ok(v) if cli.json => out.line(value_to_json(&s, &v).to_string())?,
        Ok(v) => out.line(s.render(&v))?,
        Err(e) => return out.fail(&e, None),
    }
    Ok(EXIT_OK)
}

fn print_report<W: Write>(out: &mut Out<'_, W>, r: &Report, algebra: &str, max_m: u32) -> io::Result<()> {
    out.line(format!("{} ({algebra}, max-m {max_m}): {}/{} cases passed", r.suite, r.passed(), r.total()))?;
    for n in &r.notes {
        out.line(format!("  note: {n}"))?;
    }
    let failures: Vec<&Case> = r.failures().collect();
    for c in failures.iter().take(SHOWN_FAILURES) {
        if c.detail.is_empty() {
            out.line(format!("  FAIL {}", c.name))?;
        } else {
            out.line(format!("  FAIL {}: {}", c.name, c.detail))?;
        }
    }
    if failures.len() > SHOWN_FAILURES {
        out.line(format!("  ... and {} more failures (--json lists every case)", failures.len() - SHOWN_FAILURES))?;
    }
    Ok(())
}

fn verify_cmd<W: Write>(cli: &Cli, g: &LieAlgebra, out: &mut Out<'_, W>, suite: &str) -> io::Result<i32> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        match suite.parse() {
            Ok(s) => vec![s],
            Err(_) => {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                let e = CliError::Input(format!("unknown suite `{suite}`; expected one of {}, all", names.join(", ")));
                return out.fail(&e, None);
            }
        }
    };
    let opts = Options { max_m: cli.max_m };
    let mut reports = Vec::new();
    for s in suites {
        match verify_suite(g, s, opts) {
            Ok(r) => reports.push(r),
            Err(e) => return out.fail(&CliError::Input(format!("{s}: {e}")), None),
        }
    }
    if cli.json {
        let js: Vec<Json> = reports.iter().map(|r| report_to_json(r, g.name(), cli.max_m)).collect();
        let j = if js.len() == 1 { js.into_iter().next().expect("one report") } else { Json::Array(js) };
        out.line(j.to_string())?;
    } else {
        for r in &reports {
            print_report(out, r, g.name(), cli.max_m)?;
        }
    }
    Ok(if reports.iter().all(Report::all_passed) { EXIT_OK } else { EXIT_FAILED })
}

fn generators_table<W: Write>(cli: &Cli, g: &LieAlgebra, out: &mut Out<'_, W>) -> io::Result<i32> {
    let s = Session::new(g, cli.max_m);
    let gh = s.ghat();
    let (gens, (relations, charges)) = match gh.generators().and_then(|x| Ok((x, verify::generator_relations(gh)?))) {
        Ok(v) => v,
        Err(e) => return out.fail(&CliError::Input(e.to_string()), None),
    };
    if cli.json {
        let rows: Vec<Json> = gens
            .named()
            .iter()
            .map(|(n, x)| json!({"name": n, "text": x.render(g), "value": ghat_to_json(g, x)}))
            .collect();
        let charges: serde_json::Map<String, Json> = charges.into_iter().map(|(n, c)| (n, Json::String(c))).collect();
        let rels: Vec<Json> = relations
            .iter()
            .map(|c| json!({"name": c.name, "status": if c.passed { "pass" } else { "fail" }}))
            .collect();
        out.line(
            json!({"algebra": g.name(), "generators": rows, "central_charges": charges, "relations": rels}).to_string(),
        )?;
    } else {
        out.line(format!("generators of ĝ over {}", g.name()))?;
        for (n, x) in gens.named() {
            out.line(format!("  {n:<8} = {}", x.render(g)))?;
        }
        out.line("central charges, [e_X, f_X] - h_theta:")?;
        for (n, c) in &charges {
            out.line(format!("  {n:<8} {c}"))?;
        }
        let passed = relations.iter().filter(|c| c.passed).count();
        out.line(format!("relations: {passed}/{} hold (see `qca verify generators`)", relations.len()))?;
    }
    Ok(EXIT_OK)
}

fn identity_table<W: Write>(cli: &Cli, g: &LieAlgebra, out: &mut Out<'_, W>) -> io::Result<i32> {
    let r = match verify_suite(g, Suite::Table, Options { max_m: cli.max_m }) {
        Ok(r) => r,
        Err(e) => return out.fail(&CliError::Input(e.to_string()), None),
    };
    if cli.json {
        out.line(report_to_json(&r, g.name(), cli.max_m).to_string())?;
    } else {
        for c in &r.cases {
            let status = if c.passed { "holds" } else { "FAILS" };
            if c.detail.is_empty() {
                out.line(format!("{status:<6} {}", c.name))?;
            } else {
                out.line(format!("{status:<6} {}: {}", c.name, c.detail))?;
            }
        }
        for n in &r.notes {
            out.line(format!("note: {n}"))?;
        }
        out.line(format!("{}/{} rows hold", r.passed(), r.total()))?;
    }
    Ok(if r.all_passed() { EXIT_OK } else { EXIT_FAILED })
}
