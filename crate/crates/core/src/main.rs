use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sliceburn::formats::{
    class_label, components_to_json, element_to_json, element_to_text, marks_to_csv, marks_to_json, units_to_json,
    MorphismFixture,
};
use sliceburn::group::{parse_group, prime_divisors};
use sliceburn::gset::{check_universal_property, galois_closure, hom_count, is_galois, linearize};
use sliceburn::spectrum::Localization;
use sliceburn::verify::{self, Check, Options, Suite};
use sliceburn::{Context, Error, RingKind};
use std::process::ExitCode;

const EXIT_USAGE: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "sliceburn", version, about = "Slice and section Burnside rings of small finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group order and subgroup, slice and section class counts.
    Info(GroupArgs),
    /// The table of marks of the chosen ring.
    Marks(GroupArgs),
    /// Primitive idempotents of the chosen ring, in exact rationals.
    Idempotents(GroupArgs),
    /// A GF(2) basis of the unit group of the chosen ring.
    Units(GroupArgs),
    /// Connected components of Spec over Z and over each Z_(p) with p dividing |G|.
    Spectrum(GroupArgs),
    /// Runs the property suites and exits with 3 if any check fails.
    Verify(GroupArgs),
}

#[derive(clap::Args)]
struct GroupArgs {
    /// Inline group description, e.g. `family cyclic 6`.
    group: Vec<String>,
    /// Read the group description from a file instead.
    #[arg(long, conflicts_with = "group")]
    file: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Ring::Slice)]
    ring: Ring,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest group order accepted.
    #[arg(long, default_value_t = 100)]
    cap_order: usize,
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: Suite,
    /// A morphism fixture (JSON) to check against the marks and the Galois closure.
    #[arg(long)]
    fixture: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ring {
    Slice,
    Section,
    Burnside,
}

impl Ring {
    fn kind(self) -> RingKind {
        match self {
            Ring::Slice => RingKind::Slice,
            Ring::Section => RingKind::Section,
            Ring::Burnside => RingKind::Burnside,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::parse(s).ok_or_else(|| format!("unknown suite {s:?}; expected all, ring, galois, biset, spectrum or units"))
}

/// A failure and the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn load_context(args: &GroupArgs) -> Result<Context, Failure> {
    let text = match &args.file {
        Some(path) => std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        None if args.group.is_empty() => return Err(usage("give a group description or --file")),
        None => args.group.join(" "),
    };
    let group = parse_group(&text, args.cap_order)?;
    Ok(Context::new(group, args.cap_order)?)
}

fn header(cmd: &str, ctx: &Context, args: &GroupArgs) -> String {
    format!("# sliceburn {cmd} group={} order={} seed={}", ctx.group().name(), ctx.group().order(), args.seed)
}

fn json_report(cmd: &str, ctx: &Context, args: &GroupArgs, body: Value) -> String {
    let report = json!({
        "command": cmd,
        "group": ctx.group().name(),
        "order": ctx.group().order(),
        "seed": args.seed,
        "report": body,
    });
    serde_json::to_string_pretty(&report).expect("JSON values serialize")
}

fn cmd_info(ctx: &Context, args: &GroupArgs) -> Result<String, Failure> {
    let lat = ctx.lattice();
    let counts = [
        ("order", ctx.group().order()),
        ("subgroups", lat.len()),
        ("subgroup classes", lat.classes().len()),
        ("slice classes", ctx.rank(RingKind::Slice)),
        ("section classes", ctx.rank(RingKind::Section)),
    ];
    Ok(match args.format {
        Format::Json => {
            let body = json!({
                "order": counts[0].1,
                "subgroups": counts[1].1,
                "subgroup_classes": counts[2].1,
                "slice_classes": counts[3].1,
                "section_classes": counts[4].1,
                "solvable": lat.is_solvable(),
                "abelian": ctx.group().is_abelian(),
            });
            json_report("info", ctx, args, body)
        }
        Format::Csv => {
            let mut out = format!("{}\nfield,value\n", header("info", ctx, args));
            for (k, v) in counts {
                out.push_str(&format!("{k},{v}\n"));
            }
            out
        }
        Format::Text => {
            let mut out = header("info", ctx, args) + "\n";
            for (k, v) in counts {
                out.push_str(&format!("{k}: {v}\n"));
            }
            out
        }
    })
}

fn cmd_marks(ctx: &Context, args: &GroupArgs) -> Result<String, Failure> {
    let kind = args.ring.kind();
    let m = ctx.mark_matrix(kind);
    Ok(match args.format {
        Format::Json => json_report("marks", ctx, args, marks_to_json(ctx, &m)),
        Format::Csv => format!("{}\n{}", header("marks", ctx, args), marks_to_csv(ctx, &m)?),
        Format::Text => {
            let mut out = format!("{} ring={}\n", header("marks", ctx, args), kind.name());
            for (i, &c) in m.classes.iter().enumerate() {
                out.push_str(&format!("{i:>4}  {}\n", class_label(ctx, kind, c)));
            }
            let width = (0..m.size()).flat_map(|i| m.row(i).iter().map(|v| v.to_string().len())).max().unwrap_or(1);
            for i in 0..m.size() {
                let row: Vec<String> = m.row(i).iter().map(|v| format!("{v:>width$}")).collect();
                out.push_str(&format!("{i:>4}  {}\n", row.join(" ")));
            }
            out
        }
    })
}

fn cmd_idempotents(ctx: &Context, args: &GroupArgs) -> Result<String, Failure> {
    let kind = args.ring.kind();
    let idems = ctx.primitive_idempotents(kind)?;
    let classes = ctx.basis_classes(kind);
    Ok(match args.format {
        Format::Json => {
            let list: Vec<Value> = classes
                .iter()
                .zip(&idems)
                .map(|(&c, e)| json!({"class": class_label(ctx, kind, c), "idempotent": element_to_json(ctx, e)}))
                .collect();
            json_report("idempotents", ctx, args, json!({"ring": kind.name(), "idempotents": list}))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["class", "term", "coefficient"]).map_err(|e| usage(e.to_string()))?;
            for (&c, e) in classes.iter().zip(&idems) {
                for (&d, v) in e.coeffs() {
                    w.write_record([class_label(ctx, kind, c), class_label(ctx, kind, d), v.to_string()])
                        .map_err(|e| usage(e.to_string()))?;
                }
            }
            let body = String::from_utf8(w.into_inner().map_err(|e| usage(e.to_string()))?).expect("CSV is UTF-8");
            format!("{}\n{body}", header("idempotents", ctx, args))
        }
        Format::Text => {
            let mut out = format!("{} ring={}\n", header("idempotents", ctx, args), kind.name());
            for (&c, e) in classes.iter().zip(&idems) {
                out.push_str(&format!("e[{}] = {}\n", class_label(ctx, kind, c), element_to_text(ctx, e)));
            }
            out
        }
    })
}

fn cmd_units(ctx: &Context, args: &GroupArgs) -> Result<String, Failure> {
    let kind = args.ring.kind();
    let units = ctx.unit_group(kind)?;
    Ok(match args.format {
        Format::Json => json_report("units", ctx, args, units_to_json(ctx, &units)),
        Format::Csv => {
            let mut out = format!("{}\nunit,term,coefficient\n", header("units", ctx, args));
            for (i, u) in units.basis.iter().enumerate() {
                for (&d, v) in u.coeffs() {
                    out.push_str(&format!("{i},\"{}\",{v}\n", class_label(ctx, kind, d)));
                }
            }
            out
        }
        Format::Text => {
            let mut out = format!("{} ring={}\n", header("units", ctx, args), kind.name());
            out.push_str(&format!("dimension {} over GF(2), {} units\n", units.dimension, 1u128 << units.dimension.min(127)));
            for (i, u) in units.basis.iter().enumerate() {
                out.push_str(&format!("u{i} = {}\n", element_to_text(ctx, u)));
            }
            out
        }
    })
}

fn cmd_spectrum(ctx: &Context, args: &GroupArgs) -> Result<String, Failure> {
    let kind = match args.ring {
        Ring::Burnside => return Err(usage("spectrum is computed for the slice and section rings")),
        r => r.kind(),
    };
    let mut locs = vec![Localization::Integers];
    locs.extend(prime_divisors(ctx.group().order()).into_iter().map(Localization::AtPrime));
    let mut reports = Vec::new();
    for loc in locs {
        let comps = ctx.components(kind, loc)?;
        reports.push(components_to_json(ctx, kind, loc, &comps));
    }
    Ok(match args.format {
        Format::Json => json_report("spectrum", ctx, args, json!(reports)),
        Format::Csv => {
            let mut out = format!("{}\nlocalization,component,label,classes\n", header("spectrum", ctx, args));
            for r in &reports {
                for (i, c) in r["components"].as_array().expect("components list").iter().enumerate() {
                    out.push_str(&format!("{},{i},\"{}\",{}\n", r["localization"].as_str().unwrap_or(""), c["label"].as_str().unwrap_or(""), c["classes"].as_array().map_or(0, Vec::len)));
                }
            }
            out
        }
        Format::Text => {
            let mut out = format!("{} ring={}\n", header("spectrum", ctx, args), kind.name());
            for r in &reports {
                let comps = r["components"].as_array().expect("components list");
                out.push_str(&format!("over {}: {} components\n", r["localization"].as_str().unwrap_or(""), comps.len()));
                for c in comps {
                    out.push_str(&format!(
                        "  {} ({} classes)\n",
                        c["label"].as_str().unwrap_or(""),
                        c["classes"].as_array().map_or(0, Vec::len)
                    ));
                }
            }
            out
        }
    })
}

fn fixture_checks(ctx: &Context, path: &std::path::Path) -> Result<Vec<Check>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let fx: MorphismFixture = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let f = fx.to_morphism(ctx.group())?;
    let x = linearize(ctx, &f);
    let marks = (|| -> Result<String, String> {
        for &(t, s) in ctx.slices().slices() {
            let h = hom_count(ctx, t, s, &f).map_err(|e| e.to_string())?;
            let m = ctx.mark(t, s, &x).map_err(|e| e.to_string())?;
            if m != h.into() {
                return Err(format!("slice ({t},{s}): mark {m} but {h} squares"));
            }
        }
        Ok(format!("class {}", element_to_text(ctx, &x)))
    })();
    let closure = (|| -> Result<String, String> {
        let (fg, _) = galois_closure(ctx.group(), &f);
        if f.dom.size() > 12 {
            return Ok(format!("closure has {} points; universal property skipped above 12", fg.dom.size()));
        }
        let squares = check_universal_property(ctx.group(), &f, &fg).map_err(|e| e.to_string())?;
        Ok(format!("galois = {}, closure has {} points, {squares} squares", is_galois(&f), fg.dom.size()))
    })();
    let check = |suite, name: &str, r: Result<String, String>| {
        let (passed, detail) = match r {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Check { suite, name: name.to_string(), passed, detail }
    };
    Ok(vec![check(Suite::Ring, "fixture marks vs hom counts", marks), check(Suite::Galois, "fixture Galois closure", closure)])
}

fn cmd_verify(ctx: &Context, args: &GroupArgs) -> Result<(String, bool), Failure> {
    let opts = Options { seed: args.seed, ..Options::default() };
    let mut checks = verify::run(ctx, args.suite, &opts);
    if let Some(path) = &args.fixture {
        checks.extend(fixture_checks(ctx, path)?);
    }
    let ok = checks.iter().all(|c| c.passed);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let out = match args.format {
        Format::Json => {
            let list: Vec<Value> = checks
                .iter()
                .map(|c| json!({"suite": c.suite.name(), "name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            json_report("verify", ctx, args, json!({"suite": args.suite.name(), "passed": ok, "checks": list}))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["suite", "check", "result", "detail"]).map_err(|e| usage(e.to_string()))?;
            for c in &checks {
                w.write_record([c.suite.name(), &c.name, if c.passed { "pass" } else { "fail" }, &c.detail])
                    .map_err(|e| usage(e.to_string()))?;
            }
            let body = String::from_utf8(w.into_inner().map_err(|e| usage(e.to_string()))?).expect("CSV is UTF-8");
            format!("{}\n{body}", header("verify", ctx, args))
        }
        Format::Text => {
            let mut out = format!("{} suite={}\n", header("verify", ctx, args), args.suite.name());
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("{tag} {}/{}: {}\n", c.suite.name(), c.name, c.detail));
            }
            out.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
            out
        }
    };
    Ok((out, ok))
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let (name, args) = match &cli.command {
        Command::Info(a) => ("info", a),
        Command::Marks(a) => ("marks", a),
        Command::Idempotents(a) => ("idempotents", a),
        Command::Units(a) => ("units", a),
        Command::Spectrum(a) => ("spectrum", a),
        Command::Verify(a) => ("verify", a),
    };
    let ctx = load_context(args)?;
    let out = match name {
        "info" => cmd_info(&ctx, args)?,
        "marks" => cmd_marks(&ctx, args)?,
        "idempotents" => cmd_idempotents(&ctx, args)?,
        "units" => cmd_units(&ctx, args)?,
        "spectrum" => cmd_spectrum(&ctx, args)?,
        _ => return cmd_verify(&ctx, args),
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
