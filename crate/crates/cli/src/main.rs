use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use moufang::algebra::{Algebra, Element};
use moufang::construct::fixtures::{fixture, passing_fixtures};
use moufang::construct::{algebras, ansatz_search, perturb, AnsatzSpace, MapSelector, SearchOptions, Strategy};
use moufang::exact::Rational;
use moufang::identity::{eval_identity, parse_identity, parse_identity_file, run_suite, Identity};
use moufang::io;
use moufang::pairs::{check_mm_witnesses, yamagutian, LinearMap, MapTriple, TrialityElement};
use moufang::verdict::{Verdict, Witness};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "moufang", version, about = "Exact checks for Moufang-Mal'tsev pairs over the rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for the parallel sweeps.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,

    /// Failing tuples reported per identity (default 5 in text mode, all in json mode).
    #[arg(long, global = true, value_name = "K")]
    witness_limit: Option<usize>,

    /// Shift one entry of S or T before checking, e.g. `S:0:0:1` or `T:2:1:-1/2`.
    #[arg(long, global = true, value_name = "MAP:ROW:COL:RAT")]
    perturb: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum StrategyArg {
    Auto,
    Exact,
    Float,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the defining relations on a pair file.
    Check { pair: PathBuf },
    /// Run the whole identity catalog on a pair file.
    Suite { pair: PathBuf },
    /// Check the defining relations across the triality orbit, or apply one element.
    Orbit {
        pair: PathBuf,
        /// Emit `g·(S,T)` as a pair file instead, e.g. `s2t` or `σ²τ`.
        #[arg(long, value_name = "WORD")]
        apply: Option<String>,
    },
    /// Print the Yamagutian on basis pairs.
    Yamagutian { pair: PathBuf },
    /// Evaluate identities written in the DSL.
    Eval {
        pair: PathBuf,
        /// Identity file, one identity per line, `#` comments.
        identities: Option<PathBuf>,
        #[arg(long, value_name = "TEXT", conflicts_with = "identities")]
        expr: Vec<String>,
    },
    /// Search an ansatz space for pairs.
    Search {
        ansatz: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        /// Float starts.
        #[arg(long, default_value_t = 100)]
        starts: usize,
        /// Seed for the float starts.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        max_denominator: u64,
    },
    /// Write the shipped fixtures as input files into DIR.
    Examples { dir: PathBuf },
}

/// Exit status plus the rendered report.
struct Outcome {
    ok: bool,
    text: String,
}

type CmdResult = Result<Outcome, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };
    let result = match cli.common.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n as usize).build() {
            Ok(pool) => pool.install(|| run(&cli)),
            Err(e) => Err(format!("cannot start {n} workers: {e}")),
        },
        None => run(&cli),
    };
    match result.and_then(|o| emit(&cli.common, o)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(common: &Common, outcome: Outcome) -> Result<bool, String> {
    match &common.out {
        Some(path) => fs::write(path, &outcome.text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{}", outcome.text),
    }
    Ok(outcome.ok)
}

fn run(cli: &Cli) -> CmdResult {
    let c = &cli.common;
    match &cli.command {
        Command::Check { pair } => cmd_check(c, &load(c, pair)?),
        Command::Suite { pair } => cmd_suite(c, &load(c, pair)?),
        Command::Orbit { pair, apply } => cmd_orbit(c, &load(c, pair)?, apply.as_deref()),
        Command::Yamagutian { pair } => cmd_yamagutian(c, &load(c, pair)?),
        Command::Eval { pair, identities, expr } => {
            let ids = read_identities(identities.as_deref(), expr)?;
            cmd_eval(c, &load(c, pair)?, &ids)
        }
        Command::Search {
            ansatz,
            strategy,
            starts,
            seed,
            max_denominator,
        } => {
            let space = io::load_ansatz(ansatz).map_err(|e| e.to_string())?;
            let opts = SearchOptions {
                strategy: match strategy {
                    StrategyArg::Auto => Strategy::Auto,
                    StrategyArg::Exact => Strategy::Exact,
                    StrategyArg::Float => Strategy::Float,
                },
                starts: *starts,
                seed: *seed,
                max_denominator: *max_denominator,
            };
            cmd_search(c, &space, &opts)
        }
        Command::Examples { dir } => cmd_examples(dir),
    }
}

fn parse_perturbation(spec: &str) -> Result<(MapSelector, usize, usize, Rational), String> {
    let bad = |why: &str| format!("--perturb {spec:?}: {why}");
    let parts: Vec<&str> = spec.splitn(4, ':').collect();
    let [map, row, col, delta] = parts[..] else {
        return Err(bad("expected MAP:ROW:COL:RAT"));
    };
    let map: MapSelector = map.parse().map_err(|e: moufang::Error| bad(&e.to_string()))?;
    let row = row.parse().map_err(|_| bad("row is not an index"))?;
    let col = col.parse().map_err(|_| bad("column is not an index"))?;
    let delta: Rational = delta.parse().map_err(|e: moufang::Error| bad(&e.to_string()))?;
    Ok((map, row, col, delta))
}

fn load(common: &Common, path: &Path) -> Result<MapTriple, String> {
    let specs = common
        .perturb
        .iter()
        .map(|s| parse_perturbation(s))
        .collect::<Result<Vec<_>, _>>()?;
    let mut t = io::load_pair(path).map_err(|e| e.to_string())?;
    for (spec, (map, row, col, delta)) in common.perturb.iter().zip(specs) {
        t = perturb(&t, map, row, col, &delta).map_err(|e| format!("--perturb {spec:?}: {e}"))?;
    }
    Ok(t)
}

fn limit(common: &Common) -> Option<usize> {
    match (common.witness_limit, common.format) {
        (Some(k), _) => Some(k),
        (None, Format::Text) => Some(5),
        (None, Format::Json) => None,
    }
}

fn json_text(value: &impl serde::Serialize) -> String {
    io::to_json(value)
}

fn status(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

fn labels(a: &Algebra, indices: &[usize]) -> String {
    indices.iter().map(|&i| a.basis_label(i)).collect::<Vec<_>>().join(", ")
}

fn witness_lines(t: &MapTriple, failures: &[Witness], out: &mut String) {
    for w in failures {
        out.push_str(&format!(
            "  {}\n    at ({}): residual {}\n",
            w.equation,
            labels(t.source(), &w.indices),
            t.target().format_element(&w.residual)
        ));
    }
}

fn witness_json(w: &Witness) -> serde_json::Value {
    json!({
        "equation": w.equation,
        "witness": w.indices,
        "residual": w.residual,
    })
}

fn verdict_json(v: &Verdict) -> serde_json::Value {
    serde_json::Value::Array(v.failures.iter().map(witness_json).collect())
}

fn cmd_check(common: &Common, t: &MapTriple) -> CmdResult {
    let v = check_mm_witnesses(t, limit(common));
    let ok = v.passed();
    let text = match common.format {
        Format::Json => json_text(&json!({ "status": status(ok), "witnesses": verdict_json(&v) })),
        Format::Text => {
            let mut out = format!("defining relations: {}\n", status(ok));
            witness_lines(t, &v.failures, &mut out);
            out
        }
    };
    Ok(Outcome { ok, text })
}

fn cmd_suite(common: &Common, t: &MapTriple) -> CmdResult {
    let report = run_suite(t);
    let text = match common.format {
        Format::Json => json_text(&report),
        Format::Text => report.render_text(t),
    };
    Ok(Outcome {
        ok: report.all_passed(),
        text,
    })
}

fn cmd_orbit(common: &Common, t: &MapTriple, apply: Option<&str>) -> CmdResult {
    if let Some(word) = apply {
        let g: TrialityElement = word.parse().map_err(|e: moufang::Error| format!("--apply: {e}"))?;
        return Ok(Outcome {
            ok: true,
            text: json_text(&io::pair_to_file(&g.apply(t))),
        });
    }
    let members: Vec<(TrialityElement, Verdict)> = TrialityElement::all()
        .into_iter()
        .map(|g| (g, check_mm_witnesses(&g.apply(t), limit(common))))
        .collect();
    let first = members[0].1.passed();
    let agree = members.iter().all(|(_, v)| v.passed() == first);
    let ok = agree && first;
    let text = match common.format {
        Format::Json => json_text(&json!({
            "agree": agree,
            "members": members
                .iter()
                .map(|(g, v)| json!({ "element": g.to_string(), "status": status(v.passed()), "witnesses": verdict_json(v) }))
                .collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            for (g, v) in &members {
                out.push_str(&format!("{:<4} {}\n", g.to_string(), status(v.passed())));
                witness_lines(&g.apply(t), &v.failures, &mut out);
            }
            out.push_str(if agree { "orbit agrees\n" } else { "orbit DISAGREES\n" });
            out
        }
    };
    Ok(Outcome { ok, text })
}

fn cmd_yamagutian(common: &Common, t: &MapTriple) -> CmdResult {
    let y = yamagutian(t);
    let text = match common.format {
        Format::Json => json_text(&y),
        Format::Text => {
            let m = t.source();
            let mut out = String::new();
            for (i, j, v) in y.entries() {
                out.push_str(&format!(
                    "Y({}; {}) = {}\n",
                    m.basis_label(i),
                    m.basis_label(j),
                    t.target().format_element(v)
                ));
            }
            out
        }
    };
    Ok(Outcome { ok: true, text })
}

fn read_identities(file: Option<&Path>, exprs: &[String]) -> Result<Vec<Identity>, String> {
    match file {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            parse_identity_file(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None if exprs.is_empty() => Err("eval needs an identity file or --expr".into()),
        None => exprs
            .iter()
            .map(|s| parse_identity(s).map_err(|e| format!("--expr {s:?}: {e}")))
            .collect(),
    }
}

fn cmd_eval(common: &Common, t: &MapTriple, ids: &[Identity]) -> CmdResult {
    let verdicts: Vec<Verdict> = ids.iter().map(|id| eval_identity(id, t, limit(common))).collect();
    let ok = verdicts.iter().all(Verdict::passed);
    let text = match common.format {
        Format::Json => json_text(
            &ids.iter()
                .zip(&verdicts)
                .map(|(id, v)| json!({ "identity": id.text, "status": status(v.passed()), "witnesses": verdict_json(v) }))
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut out = String::new();
            for (id, v) in ids.iter().zip(&verdicts) {
                out.push_str(&format!("{:<5}{}\n", status(v.passed()), id.text));
                for w in &v.failures {
                    out.push_str(&format!(
                        "    at ({}): residual {}\n",
                        labels(t.source(), &w.indices),
                        t.target().format_element(&w.residual)
                    ));
                }
            }
            out
        }
    };
    Ok(Outcome { ok, text })
}

fn cmd_search(common: &Common, space: &AnsatzSpace, opts: &SearchOptions) -> CmdResult {
    let res = ansatz_search(space, opts).map_err(|e| e.to_string())?;
    let ok = !res.solutions.is_empty();
    let text = match common.format {
        Format::Json => json_text(&res),
        Format::Text => {
            let list = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
            let mut out = String::new();
            for s in &res.solutions {
                out.push_str(&format!(
                    "a = [{}]  b = [{}]  suite {}\n",
                    list(&s.a),
                    list(&s.b),
                    status(s.suite_passed)
                ));
            }
            if res.diagnostics.positive_dimensional {
                out.push_str("solution set is positive-dimensional; no points listed\n");
            }
            out.push_str(&format!(
                "{} solutions, {} candidates, {} dropped\n",
                res.solutions.len(),
                res.diagnostics.candidates,
                res.diagnostics.dropped
            ));
            out
        }
    };
    Ok(Outcome { ok, text })
}

fn write(dir: &Path, name: &str, value: &impl serde::Serialize, written: &mut Vec<String>) -> Result<(), String> {
    io::write_json(&dir.join(name), value).map_err(|e| e.to_string())?;
    written.push(name.to_string());
    Ok(())
}

fn cmd_examples(dir: &Path) -> CmdResult {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let mut written = Vec::new();
    for f in passing_fixtures() {
        write(dir, &format!("{}-pair.json", f.name), &io::pair_to_file(&f.triple), &mut written)?;
    }
    for name in ["sl2-double", "nonalt3-lr"] {
        let t = fixture(name).expect("shipped failing fixture");
        write(dir, &format!("{name}-pair.json"), &io::pair_to_file(&t), &mut written)?;
    }
    for (name, d) in [
        ("sl2", algebras::sl2()),
        ("so3", algebras::so3()),
        ("solvable2", algebras::solvable2()),
        ("m2", algebras::m2()),
        ("octonions", algebras::octonions()),
    ] {
        write(dir, &format!("{name}-algebra.json"), &io::AlgebraFile::from_descriptor(&d), &mut written)?;
    }
    let sl2 = Arc::new(Algebra::build(algebras::sl2()).map_err(|e| e.to_string())?);
    let scalar = AnsatzSpace::scalar(sl2.clone());
    write(dir, "sl2-scalar-ansatz.json", &io::ansatz_to_file(&scalar), &mut written)?;
    let zero = Element::zero(3);
    let projection = LinearMap::from_images(sl2.clone(), sl2, &[Element::from_i64(&[1, 0, 0]), zero.clone(), zero])
        .map_err(|e| e.to_string())?;
    let mut space = AnsatzSpace::new(vec![projection]).map_err(|e| e.to_string())?;
    space.exclude_trivial = true;
    write(dir, "sl2-projection-ansatz.json", &io::ansatz_to_file(&space), &mut written)?;
    let mut text = String::new();
    for name in &written {
        text.push_str(&format!("wrote {}\n", dir.join(name).display()));
    }
    Ok(Outcome { ok: true, text })
}
