use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use ptcolor::certificate::DEFAULT_CERT_CAP;
use ptcolor::generators::{
    clique_join, multipartite, nae_reduction, random_3colorable, random_3colorable_ptfree, Manifest, ManifestEntry,
};
use ptcolor::graph::{parse_graph, write_graph};
use ptcolor::oracles::{nae_solve, NaeFormula, DEFAULT_NAE_CAP, DEFAULT_ORACLE_CAP};
use ptcolor::report::{verify_report, Report};
use ptcolor::{approx_color, bound, DriverResult, Graph, RootPolicy};

const EXIT_INPUT: u8 = 1;
const EXIT_FOUND_PT: u8 = 2;
const EXIT_NOT_COLORABLE: u8 = 3;
const EXIT_REJECTED: u8 = 4;

#[derive(Parser)]
#[command(name = "ptcolor", version, about = "Color 3-colorable graphs without long induced paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph; exit 0 colored, 2 induced P_t found, 3 not 3-colorable.
    Color {
        graph: PathBuf,
        #[arg(long)]
        t: usize,
        /// lowest-id, max-degree, or a vertex id
        #[arg(long, default_value = "lowest-id")]
        root: RootPolicy,
        /// Small-subgraph certificates above this size are flagged as oversized.
        #[arg(long, default_value_t = DEFAULT_CERT_CAP)]
        cert_cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every object claimed by a result file; exit 0 iff all verify.
    Verify {
        graph: PathBuf,
        result: PathBuf,
        /// Size limit for brute-force certificate replay.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap_oracle: usize,
    },
    /// Write generated instances and a manifest.json into a directory.
    Generate {
        #[command(subcommand)]
        family: Family,
        #[arg(long, default_value_t = 0, global = true)]
        seed: u64,
        #[arg(long, default_value_t = 1, global = true)]
        count: usize,
        #[arg(long, default_value = ".", global = true)]
        out: PathBuf,
    },
    /// Color every instance of a corpus for each t and write CSV rows.
    Bench {
        corpus: PathBuf,
        /// A single value, a range like 5..8, or a list like 5,7,9.
        #[arg(long)]
        t: String,
        #[arg(long, default_value = "lowest-id")]
        root: RootPolicy,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Clone)]
enum Family {
    /// Reduction graph of an NAE-3SAT formula file.
    NaeReduction {
        #[arg(long)]
        formula: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NAE_CAP)]
        cap_oracle: usize,
    },
    /// A graph file joined with a clique on k - 3 vertices.
    CliqueJoin {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Complete multipartite graph, e.g. --sizes 4,4,4.
    Tripartite {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Random graph with a planted 3-coloring.
    #[command(name = "random-3col")]
    Random3col {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// Random 3-colorable graph with no induced P_t (oracle checked).
    #[command(name = "random-3col-ptfree")]
    Random3colPtfree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1000)]
        max_tries: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap_oracle: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Color { graph, t, root, cert_cap, out } => cmd_color(&graph, t, root, cert_cap, out.as_deref()),
        Command::Verify { graph, result, cap_oracle } => cmd_verify(&graph, &result, cap_oracle),
        Command::Generate { family, seed, count, out } => cmd_generate(&family, seed, count, &out),
        Command::Bench { corpus, t, root, out } => cmd_bench(&corpus, &t, root, out.as_deref()),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(payload: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, payload).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn triangle_flag(r: &DriverResult) -> bool {
    matches!(r, DriverResult::Colored { triangle: Some(_), .. })
}

fn cmd_color(path: &Path, t: usize, root: RootPolicy, cert_cap: usize, out: Option<&Path>) -> Result<u8> {
    let g = read_graph(path)?;
    let start = Instant::now();
    let result = approx_color(&g, t, root)?;
    let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    let report = Report::new(&result, t, bound(t, triangle_flag(&result))?, runtime_ms, cert_cap);
    if let Some(ptcolor::report::Certificate::SmallSubgraph { oversized: true, vertices }) = &report.certificate {
        eprintln!("warning: certificate has {} vertices, above the cap of {cert_cap}", vertices.len());
    }
    emit(&(report.to_json() + "\n"), out)?;
    Ok(match result {
        DriverResult::Colored { .. } => 0,
        DriverResult::FoundPt(_) => EXIT_FOUND_PT,
        DriverResult::NotThreeColorable(_) => EXIT_NOT_COLORABLE,
    })
}

fn cmd_verify(graph: &Path, result: &Path, cap: usize) -> Result<u8> {
    let g = read_graph(graph)?;
    let text = fs::read_to_string(result).with_context(|| format!("reading {}", result.display()))?;
    let report = Report::from_json(&text).with_context(|| format!("parsing {}", result.display()))?;
    match verify_report(&g, &report, cap) {
        Ok(()) => Ok(0),
        Err(e) => {
            eprintln!("rejected: {e}");
            Ok(EXIT_REJECTED)
        }
    }
}

struct Generated {
    graph: Graph,
    params: BTreeMap<String, serde_json::Value>,
    seed: Option<u64>,
    three_colorable: Option<bool>,
    pt_free: Option<usize>,
    apex: Option<usize>,
}

fn family_name(f: &Family) -> &'static str {
    match f {
        Family::NaeReduction { .. } => "nae-reduction",
        Family::CliqueJoin { .. } => "clique-join",
        Family::Tripartite { .. } => "tripartite",
        Family::Random3col { .. } => "random-3col",
        Family::Random3colPtfree { .. } => "random-3col-ptfree",
    }
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        bail!("edge probability {p} outside [0, 1]");
    }
    Ok(())
}

fn generate_one(f: &Family, seed: u64) -> Result<Generated> {
    let mut g = Generated {
        graph: Graph::empty(0),
        params: BTreeMap::new(),
        seed: None,
        three_colorable: None,
        pt_free: None,
        apex: None,
    };
    match f {
        Family::NaeReduction { formula, cap_oracle } => {
            let text = fs::read_to_string(formula).with_context(|| format!("reading {}", formula.display()))?;
            let f = NaeFormula::parse(&text).with_context(|| format!("parsing {}", formula.display()))?;
            let red = nae_reduction(&f);
            g.params.insert("formula".into(), json!(formula.display().to_string()));
            // colorability equals NAE satisfiability; record it when cheap
            g.three_colorable = nae_solve(&f, *cap_oracle).ok().map(|a| a.is_some());
            g.apex = Some(red.v);
            g.graph = red.graph;
        }
        Family::CliqueJoin { graph, k } => {
            if *k < 4 {
                bail!("clique-join needs k >= 4, got {k}");
            }
            g.graph = clique_join(&read_graph(graph)?, *k);
            g.params.insert("graph".into(), json!(graph.display().to_string()));
            g.params.insert("k".into(), json!(k));
        }
        Family::Tripartite { sizes } => {
            if sizes.is_empty() || sizes.contains(&0) {
                bail!("part sizes must be positive");
            }
            g.graph = multipartite(sizes);
            g.params.insert("sizes".into(), json!(sizes));
            g.three_colorable = Some(sizes.len() <= 3);
            g.pt_free = Some(4);
        }
        Family::Random3col { n, p } => {
            check_probability(*p)?;
            g.graph = random_3colorable(*n, *p, seed);
            g.params.insert("n".into(), json!(n));
            g.params.insert("p".into(), json!(p));
            g.seed = Some(seed);
            g.three_colorable = Some(true);
        }
        Family::Random3colPtfree { n, t, p, max_tries, cap_oracle } => {
            check_probability(*p)?;
            if n > cap_oracle {
                bail!("n = {n} is above the induced-path oracle cap {cap_oracle}");
            }
            g.graph = random_3colorable_ptfree(*n, *t, *p, seed, *max_tries)
                .with_context(|| format!("no P_{t}-free sample within {max_tries} tries (seed {seed})"))?;
            g.params.insert("n".into(), json!(n));
            g.params.insert("t".into(), json!(t));
            g.params.insert("p".into(), json!(p));
            g.params.insert("max_tries".into(), json!(max_tries));
            g.seed = Some(seed);
            g.three_colorable = Some(true);
            g.pt_free = Some(*t);
        }
    }
    Ok(g)
}

fn cmd_generate(family: &Family, seed: u64, count: usize, out: &Path) -> Result<u8> {
    let randomized = matches!(family, Family::Random3col { .. } | Family::Random3colPtfree { .. });
    let count = if randomized { count } else { 1 };
    let name = family_name(family);
    let mut manifest = Manifest { schema: 1, instances: Vec::new() };
    let mut files = Vec::new();
    for i in 0..count {
        // instance i draws from seed + i * 2^32 so tries never overlap
        let inst_seed = seed.wrapping_add((i as u64) << 32);
        let gen = generate_one(family, inst_seed)?;
        let file = format!("{name}-{i:04}.txt");
        manifest.instances.push(ManifestEntry {
            file: file.clone(),
            generator: name.to_string(),
            params: gen.params,
            seed: gen.seed,
            n: gen.graph.n(),
            m: gen.graph.m(),
            three_colorable: gen.three_colorable,
            pt_free: gen.pt_free,
            apex: gen.apex,
        });
        files.push((file, write_graph(&gen.graph)));
    }
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    for (file, text) in files {
        fs::write(out.join(&file), text).with_context(|| format!("writing {file}"))?;
    }
    let json = serde_json::to_string_pretty(&manifest)? + "\n";
    fs::write(out.join("manifest.json"), &json).context("writing manifest.json")?;
    print!("{json}");
    Ok(0)
}

fn parse_t_range(s: &str) -> Result<Vec<usize>> {
    let ts: Vec<usize> = if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (a.trim().parse::<usize>()?, b.trim().parse::<usize>()?);
        (a..=b).collect()
    } else {
        s.split(',').map(|x| x.trim().parse::<usize>()).collect::<Result<_, _>>()?
    };
    if ts.is_empty() {
        bail!("empty t range {s:?}");
    }
    if let Some(&t) = ts.iter().find(|&&t| t < 3) {
        bail!("t = {t} is below 3");
    }
    Ok(ts)
}

fn cmd_bench(corpus: &Path, t_spec: &str, root: RootPolicy, out: Option<&Path>) -> Result<u8> {
    let ts = parse_t_range(t_spec)?;
    let manifest_path = corpus.join("manifest.json");
    let text =
        fs::read_to_string(&manifest_path).with_context(|| format!("reading {}", manifest_path.display()))?;
    let manifest: Manifest = serde_json::from_str(&text).context("parsing manifest.json")?;
    let mut entries = manifest.instances;
    entries.sort_by(|a, b| a.file.cmp(&b.file));

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["instance", "t", "status", "colors_used", "bound", "triangle", "runtime_ms"])?;
    let mut max_used: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut violations = 0;
    for entry in &entries {
        let g = read_graph(&corpus.join(&entry.file))?;
        for &t in &ts {
            let start = Instant::now();
            let result = approx_color(&g, t, root).with_context(|| format!("{} at t = {t}", entry.file))?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            let tri = triangle_flag(&result);
            let b = bound(t, tri)?;
            let (status, used) = match &result {
                DriverResult::Colored { colors_used, .. } => ("colored", Some(*colors_used)),
                DriverResult::FoundPt(_) => ("found_pt", None),
                DriverResult::NotThreeColorable(_) => ("not_three_colorable", None),
            };
            let promised = entry.three_colorable == Some(true) && entry.pt_free.is_some_and(|p| p <= t);
            if promised && used.is_none_or(|u| u > b) {
                violations += 1;
                eprintln!("bound violated: {} at t = {t} ({status}, bound {b})", entry.file);
            }
            if let Some(u) = used {
                let slot = max_used.entry(t).or_insert((0, 0));
                *slot = (slot.0.max(u), slot.1.max(b));
            }
            w.write_record([
                entry.file.clone(),
                t.to_string(),
                status.to_string(),
                used.map(|u| u.to_string()).unwrap_or_default(),
                b.to_string(),
                tri.to_string(),
                format!("{ms:.3}"),
            ])?;
        }
    }
    for (t, (used, b)) in &max_used {
        w.write_record(["max".to_string(), t.to_string(), String::new(), used.to_string(), b.to_string(), String::new(), String::new()])?;
    }
    let csv_text = String::from_utf8(w.into_inner()?)?;
    emit(&csv_text, out)?;
    Ok(if violations == 0 { 0 } else { EXIT_REJECTED })
}
