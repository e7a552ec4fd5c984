//! The `forcibly` command line.
//!
//! Every command writes one JSON record per line to stdout and finishes
//! with a `report` record; `--human` switches to plain text. Timing goes to
//! stderr so stdout stays byte-stable for a fixed set of flags.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classifier::{classify, ForciblyVerdict};
use crate::enumeration::{
    EnumerationMode, RealizationStream, TargetClass, DEFAULT_VERTEX_LIMIT, MAX_VERTEX_LIMIT,
};
use crate::graph::{bicyclic_core, Edge, Graph};
use crate::sequence::{havel_hakimi_realize, parse_sequence, DegreeSequence};
use crate::switching::{
    apply_switch, bowtie_normalize, girth_reduce_to_3, long_cycle_disconnect, sandglass_to_theta,
    theta_normalize, SwitchMove,
};
use crate::verify::{verify_sweep, LevelResult};
use crate::witness::{disconnected_witness, WitnessOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DISCREPANCY: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;
/// `witness` proved every realization connected.
pub const EXIT_NO_WITNESS: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "forcibly",
    version,
    about = "Forcibly tree / unicyclic / bicyclic degree sequences"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Largest vertex count the enumerator will accept.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_LIMIT)]
    pub limit: usize,
    /// Worker threads for `verify`.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Plain-text output instead of JSON lines.
    #[arg(long, global = true)]
    pub human: bool,
    /// Directory for graph files and verify records.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Auto,
    Tree,
    Unicyclic,
    Bicyclic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Labeled,
    Noniso,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmitArg {
    Edgelist,
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpArg {
    SandglassTheta,
    BowtieNorm,
    ThetaNorm,
    Girth3,
    LongCycle,
    Switch,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide membership from the closed-form families.
    Classify {
        sequence: String,
        #[arg(long, value_enum, default_value_t = ClassArg::Auto)]
        class: ClassArg,
    },
    /// Greedy (Havel-Hakimi) realization as an edge list.
    Realize { sequence: String },
    /// List or count every realization.
    Enumerate {
        sequence: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Noniso)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = EmitArg::Count)]
        emit: EmitArg,
    },
    /// Compare classifier and oracle on every candidate sequence.
    Verify {
        #[arg(long, value_parser = parse_class)]
        class: TargetClass,
        #[arg(long)]
        max_n: usize,
    },
    /// Find a disconnected realization.
    Witness { sequence: String },
    /// Apply a switch or structural transform to a graph file.
    Transform {
        /// Edge-list file, `-` for stdin.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        op: OpArg,
        /// Removed edges for `switch`, e.g. `0-1,2-3`.
        #[arg(long)]
        remove: Option<String>,
        /// Added edges for `switch`, e.g. `0-2,1-3`.
        #[arg(long)]
        add: Option<String>,
        /// Cycle vertices in order for `long-cycle`, e.g. `0,1,2,3,4,5`.
        #[arg(long)]
        cycle: Option<String>,
    },
}

fn parse_class(s: &str) -> Result<TargetClass, String> {
    s.parse()
}

/// A command failure: message plus exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e)
    }
}

/// Trailing record of every run.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub input: Value,
    pub result: Value,
    pub exit_code: i32,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

struct Ctx<'a> {
    global: &'a GlobalOpts,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn record(&mut self, kind: &str, body: Value) -> io::Result<()> {
        let mut obj = serde_json::Map::new();
        obj.insert("record".into(), Value::String(kind.into()));
        if let Value::Object(map) = body {
            obj.extend(map);
        }
        writeln!(self.out, "{}", Value::Object(obj))
    }

    fn human(&self) -> bool {
        self.global.human
    }

    fn write_file(&self, name: &str, contents: &str) -> io::Result<Option<PathBuf>> {
        let Some(dir) = &self.global.out else {
            return Ok(None);
        };
        fs::create_dir_all(dir)?;
        let path = dir.join(name);
        fs::write(&path, contents)?;
        Ok(Some(path))
    }
}

fn sequence_arg(text: &str) -> Result<DegreeSequence, Failure> {
    parse_sequence(text).map_err(Failure::usage)
}

fn resolve_class(arg: ClassArg, seq: &DegreeSequence) -> Option<TargetClass> {
    match arg {
        ClassArg::Auto => crate::classifier::target_for(seq),
        ClassArg::Tree => Some(TargetClass::Tree),
        ClassArg::Unicyclic => Some(TargetClass::Unicyclic),
        ClassArg::Bicyclic => Some(TargetClass::Bicyclic),
    }
}

fn verdict_line(v: &ForciblyVerdict) -> String {
    let mut s = format!("forcibly {}: {}", v.class.name(), v.decision);
    if let Some(f) = v.family {
        s.push_str(&format!(" ({f}"));
        if let Some(p) = v.params {
            s.push_str(&format!(", n={}", p.n));
            for (name, val) in [("r", p.r), ("s", p.s), ("t", p.t)] {
                if let Some(x) = val {
                    s.push_str(&format!(", {name}={x}"));
                }
            }
        }
        s.push(')');
    }
    if let Some(r) = v.reason {
        s.push_str(&format!(" [{r}]"));
    }
    s
}

fn cmd_classify(ctx: &mut Ctx, text: &str, class: ClassArg) -> Result<(Value, i32), Failure> {
    let seq = sequence_arg(text)?;
    let verdicts: Vec<ForciblyVerdict> = match resolve_class(class, &seq) {
        Some(c) => vec![classify(&seq, c)],
        // The sum fits no class; report the "not graphic" or "sum
        // mismatch" verdict of each.
        None => TargetClass::ALL
            .iter()
            .map(|&c| classify(&seq, c))
            .collect(),
    };
    for v in &verdicts {
        if ctx.human() {
            writeln!(ctx.out, "{seq}: {}", verdict_line(v))?;
        } else {
            ctx.record("verdict", json!({ "sequence": seq, "verdict": v }))?;
        }
    }
    let decision = verdicts.iter().any(|v| v.decision);
    Ok((
        json!({ "decision": decision, "edge_class": seq.edge_class() }),
        EXIT_OK,
    ))
}

fn emit_graph(
    ctx: &mut Ctx,
    kind: &str,
    file: &str,
    g: &Graph,
    extra: Value,
) -> Result<(), Failure> {
    let list = g.to_edge_list();
    let path = ctx.write_file(file, &list)?;
    if ctx.human() {
        if let Some(p) = &path {
            writeln!(ctx.out, "wrote {}", p.display())?;
        } else {
            write!(ctx.out, "{list}")?;
        }
        return Ok(());
    }
    let mut body = json!({ "n": g.n(), "edges": g.edge_count() });
    match path {
        Some(p) => body["path"] = json!(p.display().to_string()),
        None => body["edge_list"] = json!(list),
    }
    if let (Value::Object(b), Value::Object(e)) = (&mut body, extra) {
        b.extend(e);
    }
    ctx.record(kind, body)?;
    Ok(())
}

fn cmd_realize(ctx: &mut Ctx, text: &str) -> Result<(Value, i32), Failure> {
    let seq = sequence_arg(text)?;
    let g = havel_hakimi_realize(&seq).map_err(Failure::usage)?;
    emit_graph(
        ctx,
        "graph",
        "realization.txt",
        &g,
        json!({ "sequence": seq }),
    )?;
    Ok((
        json!({ "connected": g.is_connected(), "class": g.structural_class() }),
        EXIT_OK,
    ))
}

fn cmd_enumerate(
    ctx: &mut Ctx,
    text: &str,
    mode: ModeArg,
    emit: EmitArg,
) -> Result<(Value, i32), Failure> {
    let seq = sequence_arg(text)?;
    let mode = match mode {
        ModeArg::Labeled => EnumerationMode::Labeled,
        ModeArg::Noniso => EnumerationMode::Nonisomorphic,
    };
    let limit = ctx.global.limit.min(MAX_VERTEX_LIMIT);
    let mut stream = RealizationStream::new(&seq, mode, limit).map_err(Failure::usage)?;
    let mut count: u64 = 0;
    for g in stream.by_ref() {
        if emit == EmitArg::Edgelist {
            let name = format!("realization-{count}.txt");
            emit_graph(ctx, "graph", &name, &g, json!({ "index": count }))?;
        }
        count += 1;
    }
    if emit == EmitArg::Count {
        if ctx.human() {
            writeln!(ctx.out, "{count}")?;
        } else {
            ctx.record(
                "count",
                json!({ "sequence": seq, "mode": mode, "count": count }),
            )?;
        }
    }
    Ok((json!({ "mode": mode, "count": count }), EXIT_OK))
}

fn cmd_verify(ctx: &mut Ctx, class: TargetClass, max_n: usize) -> Result<(Value, i32), Failure> {
    let limit = ctx.global.limit.min(MAX_VERTEX_LIMIT);
    if max_n > limit {
        return Err(Failure::usage(format!(
            "--max-n {max_n} exceeds the enumeration limit {limit}"
        )));
    }
    let human = ctx.human();
    let mut lines: Vec<String> = Vec::new();
    let mut discrepancy_files: Vec<(String, String)> = Vec::new();
    let mut io_error: Option<io::Error> = None;
    if human {
        writeln!(
            ctx.out,
            "{:>3} {:>9} {:>8} {:>9} {:>6} {:>8}",
            "n", "sequences", "graphic", "positives", "agree", "disagree"
        )?;
    }
    let summary = {
        let out = &mut *ctx.out;
        let mut emit = |line: String, lines: &mut Vec<String>| {
            if io_error.is_none() {
                if let Err(e) = writeln!(out, "{line}") {
                    io_error = Some(e);
                }
            }
            lines.push(line);
        };
        verify_sweep(
            class,
            max_n,
            limit,
            ctx.global.workers,
            |level: &LevelResult| {
                for c in level.positives() {
                    let line = if human {
                        let fam = c
                            .verdict
                            .family
                            .map(|f| f.to_string())
                            .unwrap_or_else(|| "-".into());
                        format!("    {} {}", c.sequence, fam)
                    } else {
                        json!({
                            "record": "positive",
                            "class": class,
                            "n": level.tally.n,
                            "sequence": c.sequence,
                            "family": c.verdict.family,
                            "classifier": c.verdict.decision,
                            "oracle": c.oracle_holds,
                        })
                        .to_string()
                    };
                    emit(line, &mut lines);
                }
                for c in level.discrepancies() {
                    let counterexample = match &c.oracle {
                        crate::enumeration::OracleVerdict::Counterexample(g) => {
                            Some(g.to_edge_list())
                        }
                        _ => None,
                    };
                    if let Some(list) = &counterexample {
                        discrepancy_files
                            .push((format!("counterexample-{}.txt", c.sequence), list.clone()));
                    }
                    let line = json!({
                        "record": "discrepancy",
                        "class": class,
                        "n": level.tally.n,
                        "sequence": c.sequence,
                        "verdict": c.verdict,
                        "oracle": c.oracle_holds,
                        "counterexample": counterexample,
                    })
                    .to_string();
                    emit(line, &mut lines);
                }
                let t = level.tally;
                let line = if human {
                    format!(
                        "{:>3} {:>9} {:>8} {:>9} {:>6} {:>8}",
                        t.n, t.sequences, t.graphic, t.positives, t.agreements, t.discrepancies
                    )
                } else {
                    let mut v = json!({ "record": "tally", "class": class });
                    v.as_object_mut().unwrap().extend(
                        serde_json::to_value(t)
                            .unwrap()
                            .as_object()
                            .unwrap()
                            .clone(),
                    );
                    v.to_string()
                };
                emit(line, &mut lines);
            },
        )
        .map_err(Failure::usage)?
    };
    if let Some(e) = io_error {
        return Err(e.into());
    }
    let status = if summary.discrepancies == 0 {
        "confirmed"
    } else {
        "discrepancy"
    };
    let summary_value = json!({
        "class": class,
        "max_n": max_n,
        "checked": summary.checked,
        "graphic": summary.graphic,
        "positives": summary.positives,
        "agreements": summary.agreements,
        "discrepancies": summary.discrepancies,
        "status": status,
    });
    if human {
        writeln!(
            ctx.out,
            "checked {} sequences ({} graphic): {} positive, {} agreements, {} discrepancies -> {status}",
            summary.checked, summary.graphic, summary.positives, summary.agreements, summary.discrepancies
        )?;
    } else {
        ctx.record("summary", summary_value.clone())?;
    }
    if ctx.global.out.is_some() {
        let mut body = lines.join("\n");
        body.push('\n');
        ctx.write_file(&format!("verify-{}-{max_n}.jsonl", class.name()), &body)?;
        for (name, list) in &discrepancy_files {
            ctx.write_file(name, list)?;
        }
    }
    let code = if summary.discrepancies == 0 {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    };
    Ok((summary_value, code))
}

fn cmd_witness(ctx: &mut Ctx, text: &str) -> Result<(Value, i32), Failure> {
    let seq = sequence_arg(text)?;
    let outcome = disconnected_witness(&seq, ctx.global.limit.min(MAX_VERTEX_LIMIT))
        .map_err(Failure::usage)?;
    Ok(match outcome {
        WitnessOutcome::Found(w) => {
            emit_graph(
                ctx,
                "witness",
                "witness.txt",
                &w.graph,
                json!({ "sequence": seq, "method": w.method, "components": w.components }),
            )?;
            if ctx.human() {
                writeln!(
                    ctx.out,
                    "method: {}, components: {}",
                    w.method, w.components
                )?;
            }
            (json!({ "outcome": "found", "method": w.method }), EXIT_OK)
        }
        WitnessOutcome::None => {
            if ctx.human() {
                writeln!(ctx.out, "{seq}: every realization is connected")?;
            } else {
                ctx.record("witness", json!({ "sequence": seq, "outcome": "none" }))?;
            }
            (json!({ "outcome": "none" }), EXIT_NO_WITNESS)
        }
        WitnessOutcome::Undecided => {
            if ctx.human() {
                writeln!(ctx.out, "{seq}: undecided (above the enumeration limit)")?;
            } else {
                ctx.record(
                    "witness",
                    json!({ "sequence": seq, "outcome": "undecided" }),
                )?;
            }
            (json!({ "outcome": "undecided" }), EXIT_UNDECIDED)
        }
    })
}

fn parse_edges(text: &str) -> Result<Vec<Edge>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (a, b) = t
                .split_once('-')
                .ok_or_else(|| Failure::usage(format!("edge `{t}` is not of the form u-v")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Failure::usage(format!("edge `{t}` has a bad endpoint")))
            };
            Ok(Edge::new(parse(a)?, parse(b)?))
        })
        .collect()
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
    };
    Graph::parse_edge_list(&text).map_err(Failure::usage)
}

fn core_value(g: &Graph) -> Value {
    match bicyclic_core(g) {
        Ok(c) => {
            let (r, s, t) = c.params();
            json!({ "kind": c.kind, "r": r, "s": s, "t": t })
        }
        Err(_) => Value::Null,
    }
}

fn cmd_transform(
    ctx: &mut Ctx,
    graph: &Path,
    op: OpArg,
    remove: Option<&str>,
    add: Option<&str>,
    cycle: Option<&str>,
) -> Result<(Value, i32), Failure> {
    let g = read_graph(graph)?;
    let core = || bicyclic_core(&g).map_err(Failure::usage);
    let result = match op {
        OpArg::SandglassTheta => sandglass_to_theta(&g, &core()?),
        OpArg::BowtieNorm => bowtie_normalize(&g, &core()?),
        OpArg::ThetaNorm => theta_normalize(&g, &core()?).map(|t| t.graph),
        OpArg::Girth3 => girth_reduce_to_3(&g),
        OpArg::LongCycle => {
            let text = cycle.ok_or_else(|| Failure::usage("--op long-cycle needs --cycle"))?;
            let vertices: Vec<usize> = text
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse()
                        .map_err(|_| Failure::usage(format!("bad cycle vertex `{x}`")))
                })
                .collect::<Result<_, _>>()?;
            long_cycle_disconnect(&g, &vertices)
        }
        OpArg::Switch => {
            let (Some(r), Some(a)) = (remove, add) else {
                return Err(Failure::usage("--op switch needs --remove and --add"));
            };
            SwitchMove::new(parse_edges(r)?, parse_edges(a)?).and_then(|m| apply_switch(&g, &m))
        }
    }
    .map_err(Failure::usage)?;
    let extra = json!({
        "op": format!("{op:?}"),
        "core_before": core_value(&g),
        "core_after": core_value(&result),
        "connected": result.is_connected(),
    });
    emit_graph(ctx, "graph", "transformed.txt", &result, extra)?;
    Ok((
        json!({ "connected": result.is_connected(), "core": core_value(&result) }),
        EXIT_OK,
    ))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Realize { .. } => "realize",
        Command::Enumerate { .. } => "enumerate",
        Command::Verify { .. } => "verify",
        Command::Witness { .. } => "witness",
        Command::Transform { .. } => "transform",
    }
}

fn input_echo(c: &Command) -> Value {
    match c {
        Command::Classify { sequence, class } => {
            json!({ "sequence": sequence, "class": format!("{class:?}").to_lowercase() })
        }
        Command::Realize { sequence } | Command::Witness { sequence } => {
            json!({ "sequence": sequence })
        }
        Command::Enumerate {
            sequence,
            mode,
            emit,
        } => json!({
            "sequence": sequence,
            "mode": format!("{mode:?}").to_lowercase(),
            "emit": format!("{emit:?}").to_lowercase(),
        }),
        Command::Verify { class, max_n } => json!({ "class": class, "max_n": max_n }),
        Command::Transform { graph, op, .. } => {
            json!({ "graph": graph.display().to_string(), "op": format!("{op:?}") })
        }
    }
}

/// Runs an already parsed command line.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let start = Instant::now();
    let mut ctx = Ctx {
        global: &cli.global,
        out,
    };
    let outcome = match &cli.command {
        Command::Classify { sequence, class } => cmd_classify(&mut ctx, sequence, *class),
        Command::Realize { sequence } => cmd_realize(&mut ctx, sequence),
        Command::Enumerate {
            sequence,
            mode,
            emit,
        } => cmd_enumerate(&mut ctx, sequence, *mode, *emit),
        Command::Verify { class, max_n } => cmd_verify(&mut ctx, *class, *max_n),
        Command::Witness { sequence } => cmd_witness(&mut ctx, sequence),
        Command::Transform {
            graph,
            op,
            remove,
            add,
            cycle,
        } => cmd_transform(
            &mut ctx,
            graph,
            *op,
            remove.as_deref(),
            add.as_deref(),
            cycle.as_deref(),
        ),
    };
    let (result, code) = match outcome {
        Ok(v) => v,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            (json!({ "error": f.message }), f.code)
        }
    };
    let report = RunReport {
        command: command_name(&cli.command),
        input: input_echo(&cli.command),
        result,
        exit_code: code,
        elapsed_ms: start.elapsed().as_millis(),
    };
    if !cli.global.human {
        let _ = ctx.record("report", serde_json::to_value(&report).unwrap());
    }
    let _ = writeln!(
        err,
        "{}",
        json!({ "record": "timing", "command": report.command, "elapsed_ms": report.elapsed_ms })
    );
    code
}

/// Parses `args` (including the program name) and runs the command.
/// Usage errors exit with 1; `--help` and `--version` with 0.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("forcibly").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap())
    }

    fn records(text: &str) -> Vec<Value> {
        text.lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect()
    }

    #[test]
    fn classify_records() {
        let (code, out) = run_args(&["classify", "2^5"]);
        assert_eq!(code, 0);
        let r = records(&out);
        assert_eq!(r[0]["verdict"]["family"], "U1");
        assert_eq!(r[0]["verdict"]["decision"], true);
        assert_eq!(r.last().unwrap()["record"], "report");

        let (_, out) = run_args(&["classify", "4,2^6"]);
        assert_eq!(records(&out)[0]["verdict"]["family"], "B1");

        let (code, out) = run_args(&["classify", "7"]);
        assert_eq!(code, 0);
        for r in &records(&out)[..3] {
            assert_eq!(r["verdict"]["reason"], "not-graphic");
        }
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_args(&["classify", "2^0"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&["verify", "--class", "tricyclic", "--max-n", "4"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["verify", "--class", "tree", "--max-n", "12"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn enumerate_count() {
        let (_, out) = run_args(&[
            "enumerate",
            "2,2,2,2",
            "--mode",
            "labeled",
            "--emit",
            "count",
        ]);
        assert_eq!(records(&out)[0]["count"], 3);
        let (_, out) = run_args(&["--human", "enumerate", "2^6"]);
        assert_eq!(out.trim(), "2");
    }

    #[test]
    fn witness_exit_codes() {
        let (code, out) = run_args(&["witness", "4,2,2,2,2,1,1"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(records(&out)[0]["method"], "gadget:G2-uni");
        assert_eq!(run_args(&["witness", "2^5"]).0, EXIT_NO_WITNESS);
        assert_eq!(
            run_args(&["--limit", "4", "witness", "2^5"]).0,
            EXIT_UNDECIDED
        );
    }

    #[test]
    fn verify_tree_positives() {
        let (code, out) = run_args(&["verify", "--class", "tree", "--max-n", "4"]);
        assert_eq!(code, 0);
        let positives: Vec<String> = records(&out)
            .iter()
            .filter(|r| r["record"] == "positive")
            .map(|r| r["sequence"].as_str().unwrap().to_string())
            .collect();
        assert_eq!(positives, ["1^2", "2,1^2", "3,1^3", "2^2,1^2"]);
    }
}
