use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lrw1_core::io::{self, Format};
use lrw1_core::lrw::{self, Certificate};
use lrw1_core::split::{self, NodeKind};
use lrw1_core::{dh, dot, oracle, Error, Graph};

/// Linear rank-width 1 recognition with certificates.
#[derive(Parser)]
#[command(name = "lrw1", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    EdgeList,
    Graph6,
}

#[derive(clap::Args)]
struct Input {
    /// Graph file, or `-` for stdin.
    #[arg(default_value = "-")]
    file: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Decide lrw <= 1 and print a certificate.
    Recognize {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
        /// Re-check the certificate before printing it.
        #[arg(long)]
        verify: bool,
    },
    /// Canonical split decomposition of a connected DH graph.
    Decompose {
        #[command(flatten)]
        input: Input,
        /// Write the decomposition as Graphviz.
        #[arg(long)]
        dot_sd: Option<PathBuf>,
        /// Write the split tree as Graphviz.
        #[arg(long)]
        dot_tree: Option<PathBuf>,
    },
    /// Exact linear rank-width by exhaustive search.
    LrwExact {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = oracle::BRUTE_LIMIT)]
        max_n: usize,
    },
    /// Compare the recognizer with exact search on all connected graphs.
    Crosscheck {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Directory of graphs{n}.g6 files. Defaults to $LRW1_FIXTURES, then
        /// `fixtures`.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Write graphs{n}.g6 with every graph on n vertices up to isomorphism.
    GenFixtures {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

/// Exit status 2, with a message for stderr.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(e.to_string())
    }
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    let bytes = if input.file.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        fs::read(&input.file).map_err(|e| Failure(format!("{}: {e}", input.file.display())))?
    };
    let format = match input.format {
        FormatArg::Auto => io::detect_format(&bytes),
        FormatArg::EdgeList => Format::EdgeList,
        FormatArg::Graph6 => Format::Graph6,
    };
    Ok(io::parse_graph(&bytes, format)?)
}

fn labels(g: &Graph, vs: &[usize]) -> String {
    vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ")
}

fn recognize(input: &Input, json: bool, verify: bool) -> Result<bool, Failure> {
    let g = read_graph(input)?;
    let cert = lrw::recognize(&g)?;
    if verify {
        lrw::verify_certificate(&g, &cert).map_err(|r| Failure(r.to_string()))?;
    }
    if json {
        println!("{}", lrw::certificate_to_json(&g, &cert));
    } else {
        match &cert {
            Certificate::Ordering(o) => {
                println!("lrw <= 1");
                println!("ordering: {}", labels(&g, o));
            }
            Certificate::Obstruction(ob) => {
                println!("lrw >= 2");
                match ob.catalog_index {
                    Some(i) => println!("obstruction ({}, catalog entry {i}): {}", ob.family, labels(&g, &ob.vertices)),
                    None => println!("obstruction ({}): {}", ob.family, labels(&g, &ob.vertices)),
                }
            }
        }
    }
    Ok(cert.accepts())
}

fn decompose(input: &Input, dot_sd: Option<&Path>, dot_tree: Option<&Path>) -> Result<bool, Failure> {
    let g = read_graph(input)?;
    let d = match split::decompose(&g) {
        Ok(d) => d,
        Err(Error::NotDh) => {
            let s = dh::non_dh_obstruction(&g)?;
            let family = g.induced_subgraph(&s).ok().and_then(|h| dh::classify_non_dh(&h));
            println!("not distance-hereditary");
            match family {
                Some(f) => println!("obstruction ({}): {}", lrw::Family::from(f), labels(&g, &s)),
                None => println!("obstruction: {}", labels(&g, &s)),
            }
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    let t = split::split_tree(&d)?;
    for (u, node) in t.nodes().iter().enumerate() {
        let kind = match node.kind {
            NodeKind::Prime => "prime".to_string(),
            NodeKind::Clique => "clique".to_string(),
            NodeKind::Star { centre: split::Centre::Vertex(v) } => format!("star centred at {}", g.label(v)),
            NodeKind::Star { centre: split::Centre::Toward(w) } => format!("star centred toward u{w}"),
        };
        let nbrs: Vec<String> = t.links(u).iter().map(|l| format!("u{}", l.node)).collect();
        println!("u{u}: {kind}; V = {{{}}}; adjacent: {}", labels(&g, &node.vertices), nbrs.join(" "));
    }
    println!("split tree is {}a path", if t.is_path() { "" } else { "not " });
    if let Some(p) = dot_sd {
        fs::write(p, dot::decomposition_to_dot(&d))?;
    }
    if let Some(p) = dot_tree {
        fs::write(p, dot::split_tree_to_dot(&t, &d))?;
    }
    Ok(true)
}

fn lrw_exact(input: &Input, max_n: usize) -> Result<bool, Failure> {
    let g = read_graph(input)?;
    if g.n() > max_n.min(oracle::BRUTE_LIMIT) {
        return Err(Error::TooLarge { n: g.n(), max: max_n.min(oracle::BRUTE_LIMIT) }.into());
    }
    let (w, order) = oracle::brute_lrw_with_ordering(&g)?;
    println!("lrw = {w}");
    println!("ordering: {}", labels(&g, &order));
    Ok(w <= 1)
}

fn fixtures_dir(arg: Option<PathBuf>) -> PathBuf {
    arg.or_else(|| std::env::var_os("LRW1_FIXTURES").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("fixtures"))
}

fn load_graphs(dir: &Path, n: usize) -> Result<Vec<Graph>, Failure> {
    let path = dir.join(oracle::fixture_file_name(n));
    let text = fs::read_to_string(&path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    io::parse_graph6_list(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn crosscheck(max_n: usize, fixtures: Option<PathBuf>) -> Result<bool, Failure> {
    let dir = fixtures_dir(fixtures);
    let mut clean = true;
    for n in 1..=max_n {
        let graphs: Vec<Graph> = load_graphs(&dir, n)?.into_iter().filter(Graph::is_connected).collect();
        let mut failed = false;
        let bad = oracle::crosscheck_recognizer(&graphs, |g| match lrw::recognize(g) {
            Ok(c) => c.accepts() && lrw::verify_certificate(g, &c).is_ok(),
            Err(_) => {
                failed = true;
                false
            }
        })?;
        println!("{} connected graphs on {n} vertices checked, {} disagreements", graphs.len(), bad.len());
        for &i in &bad {
            println!("  disagreement: {}", io::to_graph6(&graphs[i]));
        }
        clean &= bad.is_empty() && !failed;
    }
    Ok(clean)
}

fn gen_fixtures(max_n: usize, out: &Path) -> Result<bool, Failure> {
    fs::create_dir_all(out)?;
    for n in 1..=max_n {
        let graphs = oracle::enumerate_graphs(n)?;
        let mut text = String::new();
        for g in &graphs {
            text.push_str(&io::to_graph6(g));
            text.push('\n');
        }
        let path = out.join(oracle::fixture_file_name(n));
        fs::write(&path, text)?;
        println!("{}: {} graphs", path.display(), graphs.len());
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Recognize { input, json, verify } => recognize(&input, json, verify),
        Command::Decompose { input, dot_sd, dot_tree } => decompose(&input, dot_sd.as_deref(), dot_tree.as_deref()),
        Command::LrwExact { input, max_n } => lrw_exact(&input, max_n),
        Command::Crosscheck { max_n, fixtures } => crosscheck(max_n, fixtures),
        Command::GenFixtures { max_n, out } => gen_fixtures(max_n, &out),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
