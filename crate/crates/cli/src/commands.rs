use std::fmt::Write;

use anyhow::{anyhow, Context};
use budgen::{BudError, BudSystem, PresetParams, Witness};
use grammar_bridge::{cfg_to_bud, rtg_to_bud, sg_to_bud, Cfg, GrammarError, Rtg, SyncGrammar};
use num_bigint::BigInt;
use operad_core::{Operad, TypeVector};
use operad_zoo::AnyOperad;
use series::colt_table;
use typecount::{CountError, CountPath, SyncRecurrence, SyntRecurrence};

use crate::output::{csv_field, joined, sequence};
use crate::{Command, Failure, Format, Kind, RunArgs};

impl From<BudError> for Failure {
    fn from(e: BudError) -> Self {
        if e.is_divergence() {
            Failure::Divergence(e.into())
        } else {
            Failure::Input(e.into())
        }
    }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Self {
        if e.is_divergence() {
            Failure::Divergence(e.into())
        } else {
            Failure::Input(e.into())
        }
    }
}

impl From<GrammarError> for Failure {
    fn from(e: GrammarError) -> Self {
        match e {
            GrammarError::Bud(b) => b.into(),
            other => Failure::Input(other.into()),
        }
    }
}

fn bad_input(msg: impl std::fmt::Display) -> Failure {
    Failure::Input(anyhow!("{msg}"))
}

type Sys = BudSystem<AnyOperad>;

fn load(run: &RunArgs) -> Result<Sys, Failure> {
    if let Some(path) = &run.system {
        if run.gamma.is_some() || run.arities.is_some() {
            return Err(bad_input("--gamma and --arities only apply to --builtin"));
        }
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .map_err(Failure::Input)?;
        return Ok(budgen::json::from_json(&text)?);
    }
    let name = run.builtin.as_deref().expect("clap requires --system or --builtin");
    let params = PresetParams {
        gamma: run.gamma,
        arities: run.arities.clone(),
    };
    Ok(budgen::builtin(name, &params)?)
}

fn format_of(run: &RunArgs, allowed: &[Format], command: &str) -> Result<Format, Failure> {
    let f = run.format.unwrap_or(allowed[0]);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(bad_input(format!("{command} does not support --format {f:?}").to_lowercase()))
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Text => "text",
        Format::Csv => "csv",
        Format::Dot => "dot",
        Format::Bfile => "bfile",
    }
}

pub fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Enumerate { run, sync } => enumerate(&run, sync),
        Command::Series { run, kind } => series(&run, kind),
        Command::Colt { run, kind } => colt(&run, kind),
        Command::Graph { run, sync } => graph(&run, sync),
        Command::Check { run } => check(&run),
        Command::Compile { file, cap } => compile(&file, cap),
        Command::Presets => Ok(budgen::PRESETS.iter().map(|(n, d)| format!("{n}\t{d}\n")).collect()),
    }
}

fn enumerate(run: &RunArgs, sync: bool) -> Result<String, Failure> {
    let format = format_of(run, &[Format::Text, Format::Bfile, Format::Csv], "enumerate")?;
    let sys = load(run)?;
    let n = run.max_arity as usize;
    let counts = if sync {
        typecount::sync_counting_series(&sys, n)?
    } else {
        typecount::lang_counting_series(&sys, n)?
    };
    eprintln!(
        "counts {}",
        match counts.path {
            CountPath::Recurrence => "from the color-type recurrence (unambiguous up to the bound)",
            CountPath::Support => "from the elements (ambiguous system)",
        }
    );
    Ok(sequence(&counts.counts[1..], format_name(format)))
}

fn series(run: &RunArgs, kind: Kind) -> Result<String, Failure> {
    let format = format_of(run, &[Format::Text, Format::Csv], "series")?;
    let sys = load(run)?;
    let n = run.max_arity as usize;
    let f = match kind {
        Kind::Hook => budgen::hook_series(&sys, n)?,
        Kind::Synt => budgen::synt_series(&sys, n)?,
        Kind::Sync => budgen::sync_series(&sys, n)?,
    };
    if format == Format::Text {
        return Ok(f.render(sys.bud()));
    }
    let mut s = String::from("arity,element,coefficient\n");
    for (text, x, c) in f.sorted_terms(sys.bud()) {
        writeln!(s, "{},{},{c}", x.ins.len(), csv_field(&text)).expect("writing to a string");
    }
    Ok(s)
}

fn colt(run: &RunArgs, kind: Kind) -> Result<String, Failure> {
    format_of(run, &[Format::Csv, Format::Text], "colt")?;
    let sys = load(run)?;
    let n = run.max_arity;
    let colors = sys.colors();
    let k = colors.len();
    let mut rows: Vec<(u32, usize, TypeVector, BigInt)> = Vec::new();
    match kind {
        Kind::Hook => {
            let table = colt_table(sys.bud(), &budgen::hook_series(&sys, n as usize)?);
            rows.extend(table.into_iter().map(|((a, t), c)| (t.degree(), a, t, c)));
        }
        Kind::Synt | Kind::Sync => {
            let mut synt = SyntRecurrence::new(&sys)?;
            let mut sync = SyncRecurrence::new(&sys)?;
            for d in 1..=n {
                for &a in sys.initial() {
                    for t in TypeVector::all_of_degree(k, d) {
                        if !t.support().all(|c| sys.terminal().contains(&c)) {
                            continue;
                        }
                        let c = if kind == Kind::Synt { synt.coeff(a, &t)? } else { sync.coeff(a, &t)? };
                        if c != BigInt::from(0) {
                            rows.push((d, a, t, c));
                        }
                    }
                }
            }
        }
    }
    rows.sort_by(|x, y| (x.0, x.1, &y.2).cmp(&(y.0, y.1, &x.2)));
    let mut s = String::from("color,type,coefficient\n");
    for (_, a, t, c) in rows {
        writeln!(s, "{},{},{c}", csv_field(colors.token(a)), csv_field(&t.to_string())).expect("writing to a string");
    }
    Ok(s)
}

fn graph(run: &RunArgs, sync: bool) -> Result<String, Failure> {
    let format = format_of(run, &[Format::Dot, Format::Text], "graph")?;
    let sys = load(run)?;
    let g = budgen::derivation_graph(&sys, run.max_arity as usize, sync)?;
    if format == Format::Dot {
        return Ok(budgen::to_dot(&sys, &g));
    }
    let mut s = String::new();
    for (a, b, m) in g.edges() {
        writeln!(s, "{} -> {} ({m})", sys.render(&g.vertices()[a]), sys.render(&g.vertices()[b])).expect("writing to a string");
    }
    Ok(s)
}

fn witness(sys: &Sys, w: &Option<Witness<<AnyOperad as Operad>::Elem>>) -> String {
    match w {
        None => "true".into(),
        Some(Witness::Coefficient { element, count }) => format!("false witness=\"{count} * {}\"", sys.render(element)),
        Some(Witness::SharedGround { elements }) => {
            let shown: Vec<String> = elements.iter().map(|x| sys.render(x)).collect();
            format!("false witness=\"{}\"", shown.join(" | "))
        }
    }
}

fn check(run: &RunArgs) -> Result<String, Failure> {
    format_of(run, &[Format::Text], "check")?;
    let sys = load(run)?;
    let report = budgen::check(&sys, run.max_arity as usize)?;
    let mut s = String::new();
    let w = &mut s;
    writeln!(
        w,
        "finitely_factorizing=true longest_chain={}",
        report.factorizing.longest_chain
    )
    .expect("writing to a string");
    writeln!(w, "bound={}", report.language.bound).expect("writing to a string");
    writeln!(w, "language_counts={}", joined(&report.language.counts[1..])).expect("writing to a string");
    writeln!(w, "unambiguous={}", witness(&sys, &report.language.unambiguous.witness)).expect("writing to a string");
    writeln!(w, "faithful={}", witness(&sys, &report.language.faithful.witness)).expect("writing to a string");
    writeln!(w, "sync_language_counts={}", joined(&report.sync_language.counts[1..])).expect("writing to a string");
    writeln!(w, "sync_unambiguous={}", witness(&sys, &report.sync_language.unambiguous.witness))
        .expect("writing to a string");
    writeln!(w, "sync_faithful={}", witness(&sys, &report.sync_language.faithful.witness)).expect("writing to a string");
    Ok(s)
}

fn compile(file: &std::path::Path, cap: Option<usize>) -> Result<String, Failure> {
    let text = std::fs::read_to_string(file)
        .with_context(|| format!("reading {}", file.display()))
        .map_err(Failure::Input)?;
    let ext = file.extension().and_then(|e| e.to_str()).unwrap_or("");
    if cap.is_some() && ext != "sg" {
        return Err(bad_input("--cap only applies to synchronous grammars (.sg)"));
    }
    let sys = match ext {
        "cfg" => cfg_to_bud(&Cfg::parse(&text)?)?,
        "rtg" => rtg_to_bud(&Rtg::parse(&text)?)?,
        "sg" => {
            let g = SyncGrammar::parse(&text)?;
            let cap = cap.unwrap_or_else(|| g.widest().max(1));
            sg_to_bud(&g, cap)?
        }
        _ => return Err(bad_input(format!("{}: expected a .cfg, .rtg or .sg file", file.display()))),
    };
    Ok(budgen::json::to_json(&sys))
}
