//! Command-line surface over the core library.
//!
//! Exit codes: 0 success, 1 negative verdict (a check failed, a witness was
//! not found, a structure test did not hold), 2 usage or input error, 3
//! budget exceeded. Named budgets are overridable through environment
//! variables `HOMOG3_BUDGET_<NAME>`. Reports go to standard output, errors
//! and seed logs to standard error. Identical arguments and seed produce
//! byte-identical output.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use homog3_core::amalgamation::{check_ap, check_jep, ForbiddenSet};
use homog3_core::analysis::{
    color_diameter, equivalences, max_clique_in, quotient_keeping_signature,
};
use homog3_core::classify::{classify, parameter_report, ClassifyOptions, Family};
use homog3_core::constructions::GeneratorSpec;
use homog3_core::geometry::{
    check_semilinear, extract_lines, quadrangle_profile, triangle_freeness,
};
use homog3_core::homogeneity::{check_extension_axioms, check_homogeneity};
use homog3_core::io::{from_json, to_dot, to_json};
use homog3_core::stability::{compatibility_witnesses, find_half_graph};
use homog3_core::{Budgets, Color, Error, NGraph};

#[derive(Parser)]
#[command(
    name = "homog3",
    version,
    about = "Workbench for edge-colored complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and emit it as JSON.
    Build(BuildArgs),
    /// Summarize a graph: counts, equivalences, diameters.
    Analyze(AnalyzeArgs),
    /// Property checks with a pass or fail verdict.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Witness searches; not finding one is a negative verdict.
    #[command(subcommand)]
    Find(FindCommand),
    /// Collapse the classes of an equivalence of colors.
    Quotient(QuotientArgs),
    /// Extract the line space of a color and test its axioms.
    Lines(LinesArgs),
    /// Match a graph against the recognized families.
    Classify(ClassifyArgs),
    /// Re-emit a graph as JSON or DOT.
    Export(ExportArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Generator kind: random | cgamma | class-random | quotient-random |
    /// class-generic | wreath | product | multipartite | pentagon | rook.
    kind: String,
    /// Seed for the randomized kinds.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vertex count (random).
    #[arg(long)]
    v: Option<u64>,
    /// Color count (random).
    #[arg(long)]
    colors: Option<u64>,
    /// Class count (cgamma, class-random, quotient-random).
    #[arg(long)]
    classes: Option<u64>,
    /// Class size (class-random, quotient-random, class-generic).
    #[arg(long)]
    class_size: Option<u64>,
    /// First dimension or class count (product, multipartite, class-generic).
    #[arg(long)]
    m: Option<u64>,
    /// Second dimension or part size (product, multipartite).
    #[arg(long)]
    n: Option<u64>,
    /// Flat (size, color) pairs, outermost first (wreath), e.g. 2,2,3,1,4,0.
    #[arg(long, value_delimiter = ',')]
    layers: Option<Vec<u64>>,
    /// Row, column, and off-grid color indices (product).
    #[arg(long)]
    i: Option<u64>,
    #[arg(long)]
    j: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    /// Within-part and across-part color indices (multipartite).
    #[arg(long)]
    within: Option<u64>,
    #[arg(long)]
    across: Option<u64>,
    /// Unused third color index (pentagon, rook).
    #[arg(long)]
    spare: Option<u64>,
    /// Equivalence color index (class-random).
    #[arg(long)]
    eq_color: Option<u64>,
    /// Output file; standard output when absent.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Exact k-homogeneity: every small isomorphism extends to an automorphism.
    Homogeneity {
        file: PathBuf,
        /// Substructure size bound; defaults to min(4, size).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Extension demand: every vertex tuple has a correctly joined witness.
    Extension {
        file: PathBuf,
        /// Required common-neighbor count per color, e.g. 1,1,0.
        #[arg(long, value_delimiter = ',', required = true)]
        demand: Vec<usize>,
        /// Seed for placement sampling when the budget forces it.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Amalgamation property of a forbidden-triangle class at a size bound.
    Ap(ClassArgs),
    /// Joint embedding property of a forbidden-triangle class at a size bound.
    Jep(ClassArgs),
}

#[derive(Args)]
struct ClassArgs {
    /// Color names, single letters, e.g. R,S,T.
    #[arg(long, value_delimiter = ',', required = true)]
    colors: Vec<String>,
    /// Forbidden triangles as 3-letter words over the color names.
    #[arg(long, value_delimiter = ',')]
    forbid: Vec<String>,
    #[arg(long, default_value_t = 4)]
    max_size: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum FindCommand {
    /// Half-graph of a given order in a color.
    Halfgraph {
        file: PathBuf,
        /// Cross color name.
        #[arg(long)]
        color: String,
        /// Number of rows on each side.
        #[arg(long)]
        order: usize,
        /// Required colors of the two horizontal cliques, e.g. S,T.
        #[arg(long, value_delimiter = ',')]
        horizontal: Option<Vec<String>>,
        /// Require this color below the diagonal (compatibility witness).
        #[arg(long)]
        below: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Maximum monochromatic clique inside a vertex region.
    Clique {
        file: PathBuf,
        #[arg(long)]
        color: String,
        /// Vertices to search within; the whole graph when absent.
        #[arg(long, value_delimiter = ',')]
        region: Option<Vec<usize>>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct QuotientArgs {
    file: PathBuf,
    /// Colors whose union is the equivalence, e.g. R or R,S.
    #[arg(long, value_delimiter = ',', required = true)]
    colors: Vec<String>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LinesArgs {
    file: PathBuf,
    #[arg(long)]
    color: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    file: PathBuf,
    /// Vertex count below which the statistical checks refuse to decide.
    #[arg(long, default_value_t = 16)]
    min_size: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExportArgs {
    file: PathBuf,
    /// Emit DOT instead of JSON.
    #[arg(long)]
    dot: bool,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budgets = Budgets::from_env();
    match run(cli.command, &budgets) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

/// Budget errors are 3, structural negatives are 1, everything else is a
/// usage or input problem.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Budget { .. }) => 3,
        Some(Error::NotAnEquivalence { .. })
        | Some(Error::NotQuotientable { .. })
        | Some(Error::NotSemilinear { .. }) => 1,
        _ => 2,
    }
}

fn run(command: Command, budgets: &Budgets) -> anyhow::Result<u8> {
    match command {
        Command::Build(args) => build(args),
        Command::Analyze(args) => analyze(args),
        Command::Check(args) => check(args, budgets),
        Command::Find(args) => find(args, budgets),
        Command::Quotient(args) => quotient_cmd(args),
        Command::Lines(args) => lines_cmd(args),
        Command::Classify(args) => classify_cmd(args, budgets),
        Command::Export(args) => export(args),
    }
}

fn load(path: &Path) -> anyhow::Result<NGraph> {
    let text = fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    Ok(from_json(&text)?)
}

/// Writes to standard output, treating a closed pipe as an orderly stop.
fn write_stdout(text: &str) {
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?,
        None => write_stdout(text),
    }
    Ok(())
}

fn color_by_name(g: &NGraph, name: &str) -> anyhow::Result<Color> {
    g.color_index(name)
        .ok_or_else(|| Error::invalid(format!("no color named {name:?}")).into())
}

fn print_report(json: bool, value: serde_json::Value, human: &str) {
    if json {
        write_stdout(&format!("{value}\n"));
    } else {
        write_stdout(&format!("{human}\n"));
    }
}

fn build(args: BuildArgs) -> anyhow::Result<u8> {
    let kind = args.kind.replace('-', "_");
    let kind = if kind == "cgamma" {
        "cover".to_string()
    } else {
        kind
    };
    let mut params = serde_json::Map::new();
    let fields: [(&str, &Option<u64>); 13] = [
        ("v", &args.v),
        ("colors", &args.colors),
        ("classes", &args.classes),
        ("class_size", &args.class_size),
        ("m", &args.m),
        ("n", &args.n),
        ("i", &args.i),
        ("j", &args.j),
        ("k", &args.k),
        ("within", &args.within),
        ("across", &args.across),
        ("spare", &args.spare),
        ("eq_color", &args.eq_color),
    ];
    for (name, value) in fields {
        if let Some(v) = value {
            params.insert(name.to_string(), json!(v));
        }
    }
    if let Some(layers) = &args.layers {
        params.insert("layers".to_string(), json!(layers));
    }
    let spec = GeneratorSpec {
        kind,
        params,
        seed: args.seed,
    };
    let g = spec.build()?;
    if matches!(
        spec.kind.as_str(),
        "random" | "cover" | "class_random" | "quotient_random" | "class_generic"
    ) {
        eprintln!("seed: {}", spec.seed);
    }
    emit(&args.out, &(to_json(&g) + "\n"))?;
    Ok(0)
}

fn analyze(args: AnalyzeArgs) -> anyhow::Result<u8> {
    let g = load(&args.file)?;
    let names = g.color_names().to_vec();
    let counts = g.color_counts();
    let realized: Vec<&str> = g
        .realized_colors()
        .iter()
        .map(|&c| g.color_name(c))
        .collect();
    let eq_reports = equivalences(&g);
    let spectrum = g.triangle_spectrum();
    let diameters: Vec<serde_json::Value> = (0..g.color_count() as Color)
        .map(|c| {
            let comps = color_diameter(&g, c);
            let max = comps.iter().map(|x| x.diameter).max().unwrap_or(0);
            json!({
                "color": g.color_name(c),
                "components": comps.len(),
                "max_diameter": max,
            })
        })
        .collect();
    let value = json!({
        "size": g.size(),
        "colors": names,
        "color_counts": counts,
        "realized": realized,
        "triangle_types": spectrum.len(),
        "equivalences": eq_reports,
        "diameters": diameters,
    });
    let mut human = format!(
        "size: {}\ncolors: {}\ncounts: {:?}\nrealized: {}\ntriangle types: {}",
        g.size(),
        names.join(","),
        counts,
        realized.join(","),
        spectrum.len(),
    );
    for r in &eq_reports {
        if r.is_equivalence {
            let cname: Vec<&str> = r.colors.iter().map(|&c| g.color_name(c)).collect();
            let sizes: Vec<usize> = r.classes.iter().map(Vec::len).collect();
            human += &format!(
                "\nequivalence {}: {} classes of sizes {:?}",
                cname.join("+"),
                r.classes.len(),
                sizes
            );
        }
    }
    for d in &diameters {
        human += &format!(
            "\ncolor {}: {} components, max diameter {}",
            d["color"].as_str().unwrap(),
            d["components"],
            d["max_diameter"],
        );
    }
    print_report(args.json, value, &human);
    Ok(0)
}

fn check(command: CheckCommand, budgets: &Budgets) -> anyhow::Result<u8> {
    match command {
        CheckCommand::Homogeneity { file, k, json } => {
            let g = load(&file)?;
            let k = k.unwrap_or_else(|| 4.min(g.size()));
            let report = check_homogeneity(&g, k)?;
            let human = match &report.failure {
                None => format!(
                    "homogeneous up to {k}: yes ({} maps checked)",
                    report.checked
                ),
                Some(f) => format!(
                    "homogeneous up to {k}: no (map {:?} -> {:?} does not extend)",
                    f.domain, f.images
                ),
            };
            print_report(json, serde_json::to_value(&report)?, &human);
            Ok(u8::from(!report.holds))
        }
        CheckCommand::Extension {
            file,
            demand,
            seed,
            json,
        } => {
            let g = load(&file)?;
            let report = check_extension_axioms(&g, &demand, budgets, seed)?;
            let seed_note = match report.sample_seed {
                Some(s) => format!(", seed {s}"),
                None => String::new(),
            };
            let human = format!(
                "demand {:?}: {}/{} placements satisfied ({}{seed_note})",
                report.demand,
                report.satisfied,
                report.placements,
                if report.exhaustive {
                    "exhaustive"
                } else {
                    "sampled"
                },
            );
            print_report(json, serde_json::to_value(&report)?, &human);
            Ok(u8::from(report.failure.is_some()))
        }
        CheckCommand::Ap(args) => {
            let (names, forb) = class_of(&args, budgets)?;
            let names_ref: Vec<&str> = names.iter().map(String::as_str).collect();
            let report = check_ap(&names_ref, &forb, args.max_size, budgets)?;
            let value = json!({
                "holds": report.holds,
                "members_by_size": report.members_by_size,
                "problems": report.problems,
                "failure": report.failure.as_ref().map(|f| json!({
                    "base": to_json(&f.problem.base),
                    "left": to_json(&f.problem.left),
                    "right": to_json(&f.problem.right),
                })),
            });
            let human = format!(
                "amalgamation up to {}: {} ({} problems, member types by size {:?})",
                args.max_size,
                if report.holds { "holds" } else { "fails" },
                report.problems,
                report.members_by_size,
            );
            print_report(args.json, value, &human);
            Ok(u8::from(!report.holds))
        }
        CheckCommand::Jep(args) => {
            let (names, forb) = class_of(&args, budgets)?;
            let names_ref: Vec<&str> = names.iter().map(String::as_str).collect();
            let report = check_jep(&names_ref, &forb, args.max_size, budgets)?;
            let value = json!({
                "holds": report.holds,
                "members_by_size": report.members_by_size,
                "pairs": report.pairs,
                "failure": report.failure.as_ref().map(|f| json!({
                    "left": to_json(&f.left),
                    "right": to_json(&f.right),
                })),
            });
            let human = format!(
                "joint embedding up to {}: {} ({} pairs)",
                args.max_size,
                if report.holds { "holds" } else { "fails" },
                report.pairs,
            );
            print_report(args.json, value, &human);
            Ok(u8::from(!report.holds))
        }
    }
}

fn class_of(args: &ClassArgs, budgets: &Budgets) -> anyhow::Result<(Vec<String>, ForbiddenSet)> {
    let names: Vec<&str> = args.colors.iter().map(String::as_str).collect();
    let words: Vec<&str> = args.forbid.iter().map(String::as_str).collect();
    let forb = if words.is_empty() {
        ForbiddenSet::empty()
    } else {
        ForbiddenSet::triangles(&names, &words, budgets)?
    };
    Ok((args.colors.clone(), forb))
}

fn find(command: FindCommand, budgets: &Budgets) -> anyhow::Result<u8> {
    match command {
        FindCommand::Halfgraph {
            file,
            color,
            order,
            horizontal,
            below,
            json,
        } => {
            let g = load(&file)?;
            let p = color_by_name(&g, &color)?;
            let horizontal = match &horizontal {
                None => None,
                Some(pair) => {
                    if pair.len() != 2 {
                        return Err(Error::invalid("horizontal needs exactly two colors").into());
                    }
                    Some((color_by_name(&g, &pair[0])?, color_by_name(&g, &pair[1])?))
                }
            };
            let witness = match &below {
                None => find_half_graph(&g, p, order, horizontal, budgets)?,
                Some(q) => {
                    let q = color_by_name(&g, q)?;
                    compatibility_witnesses(&g, p, q, order, horizontal, budgets)?
                }
            };
            match &witness {
                Some(w) => {
                    let human = format!(
                        "half-graph of order {order} in {color}: rows a={:?} b={:?}",
                        w.a_rows, w.b_rows
                    );
                    print_report(json, json!({"found": true, "witness": w}), &human);
                    Ok(0)
                }
                None => {
                    print_report(
                        json,
                        json!({"found": false, "witness": null}),
                        &format!("half-graph of order {order} in {color}: none"),
                    );
                    Ok(1)
                }
            }
        }
        FindCommand::Clique {
            file,
            color,
            region,
            json,
        } => {
            let g = load(&file)?;
            let c = color_by_name(&g, &color)?;
            let region = region.unwrap_or_else(|| (0..g.size()).collect());
            let clique = max_clique_in(&g, &region, c, budgets)?;
            let human = format!(
                "maximum {color}-clique in region: size {} {:?}",
                clique.len(),
                clique
            );
            print_report(
                json,
                json!({"size": clique.len(), "vertices": clique}),
                &human,
            );
            Ok(0)
        }
    }
}

fn quotient_cmd(args: QuotientArgs) -> anyhow::Result<u8> {
    let g = load(&args.file)?;
    let colors: Vec<Color> = args
        .colors
        .iter()
        .map(|n| color_by_name(&g, n))
        .collect::<anyhow::Result<_>>()?;
    let (q, classes) = quotient_keeping_signature(&g, &colors)?;
    let mut sizes = vec![0usize; q.size()];
    for &class in &classes {
        sizes[class] += 1;
    }
    eprintln!("classes: {} (sizes {:?})", q.size(), sizes);
    emit(&args.out, &(to_json(&q) + "\n"))?;
    Ok(0)
}

fn lines_cmd(args: LinesArgs) -> anyhow::Result<u8> {
    let g = load(&args.file)?;
    let c = color_by_name(&g, &args.color)?;
    let space = match extract_lines(&g, c) {
        Ok(space) => space,
        Err(Error::NotSemilinear {
            color,
            edge,
            cliques,
        }) => {
            let value = json!({
                "well_defined": false,
                "edge": edge,
                "cliques": cliques,
            });
            let human = format!(
                "lines in {}: not well defined, edge {:?} lies in two maximal cliques {:?} and {:?}",
                g.color_name(color), edge, cliques.0, cliques.1
            );
            print_report(args.json, value, &human);
            return Ok(1);
        }
        Err(other) => return Err(other.into()),
    };
    let semilinear = check_semilinear(&space);
    let triangles = triangle_freeness(&g, &space)?;
    let profile = quadrangle_profile(&space);
    let value = json!({
        "well_defined": true,
        "color": g.color_name(c),
        "line_count": space.lines.len(),
        "lines": space.lines,
        "semilinear": semilinear,
        "triangle_free": triangles,
        "profile": profile,
    });
    let human = format!(
        "lines in {}: {} lines, semilinear {}, triangle-free {}, quadrangle-like {}",
        g.color_name(c),
        space.lines.len(),
        if semilinear.holds { "yes" } else { "no" },
        if triangles.holds { "yes" } else { "no" },
        profile.gq_like,
    );
    print_report(args.json, value, &human);
    Ok(u8::from(!semilinear.holds))
}

fn classify_cmd(args: ClassifyArgs, budgets: &Budgets) -> anyhow::Result<u8> {
    let g = load(&args.file)?;
    let opts = ClassifyOptions {
        min_size: args.min_size,
        ..ClassifyOptions::default()
    };
    let label = classify(&g, &opts, budgets)?;
    let structure = parameter_report(&label).ok();
    let value = json!({
        "family": label.family.name(),
        "structure": structure,
        "params": label.params,
        "evidence": label.evidence,
    });
    let mut human = format!("family: {}", label.family.name());
    if let Some(s) = &structure {
        human += &format!("\nstructure: {s}");
    }
    for (what, detail) in &label.evidence {
        human += &format!("\n  {what}: {detail}");
    }
    print_report(args.json, value, &human);
    Ok(u8::from(label.family == Family::Unknown))
}

fn export(args: ExportArgs) -> anyhow::Result<u8> {
    let g = load(&args.file)?;
    let text = if args.dot {
        to_dot(&g)
    } else {
        to_json(&g) + "\n"
    };
    emit(&args.out, &text)?;
    Ok(0)
}
