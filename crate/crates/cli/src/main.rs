mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flagcheck_core::complex::{enumerate_full_cycles, load_complex_auto, shortest_full_cycle};
use flagcheck_core::curvature::all_vertex_largeness;
use flagcheck_core::generators::{gen_cone, gen_polygon_disc};
use flagcheck_core::hyperbolicity::{delta_growth_profile, profile_csv};
use flagcheck_core::{
    check_five_nine, check_k_large_local, check_m_location, fill_without_interior,
    find_minimal_filling, flagness_check, four_point_delta, largeness_of_link, validate_disc,
    validate_map, verify_minimal_diagram, ConditionReport, DeltaMethod, DiagramMap, Error,
    FlagComplex, GeneratorSpec, Largeness, Loop, Platonic, Simplex, Triviality,
};
use serde_json::{json, Value};

use render::render_human;

const USAGE_EXIT: u8 = 3;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::BudgetExceeded { .. }) => 2,
            _ => USAGE_EXIT,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "flagcheck", version, about = "Curvature checks for flag simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a local curvature condition; exit 0 pass, 1 fail, 2 undetermined
    Check(CheckArgs),
    /// Describe the link of a vertex or edge
    Link(LinkArgs),
    /// List full cycles
    Cycles(CyclesArgs),
    /// Fill a loop with a minimal or interior-free disc diagram
    Fill(FillArgs),
    /// Four-point hyperbolicity constant of a complex or a family
    Delta(DeltaArgs),
    /// Generate a complex
    Gen(GenArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Csv,
    Human,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ConditionSel {
    Flag,
    KLarge(u32),
    FiveNine,
    MLocation(usize),
    Disc,
    DiagramMap,
    MinimalDiagram,
}

impl FromStr for ConditionSel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let number = |what: &str| -> Result<usize, String> {
            arg.ok_or_else(|| format!("{what} needs a parameter, e.g. {what}:6"))?
                .parse()
                .map_err(|e| format!("{what} parameter: {e}"))
        };
        let plain = |c: ConditionSel| match arg {
            None => Ok(c),
            Some(_) => Err(format!("{name} takes no parameter")),
        };
        match name {
            "flag" => plain(ConditionSel::Flag),
            "k-large" => Ok(ConditionSel::KLarge(number("k-large")? as u32)),
            "five-nine" => plain(ConditionSel::FiveNine),
            "m-location" => Ok(ConditionSel::MLocation(number("m-location")?)),
            "disc" => plain(ConditionSel::Disc),
            "diagram-map" => plain(ConditionSel::DiagramMap),
            "minimal-diagram" => plain(ConditionSel::MinimalDiagram),
            _ => Err(format!(
                "unknown condition {name:?}; expected flag, k-large:<k>, five-nine, m-location:<m>, \
                 disc, diagram-map or minimal-diagram"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct TrivialitySel(Triviality);

impl FromStr for TrivialitySel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.split_once(':') {
            None if s == "all" => Ok(TrivialitySel(Triviality::All)),
            Some(("bounded", a)) => a
                .parse()
                .map(|max_area| TrivialitySel(Triviality::Bounded { max_area }))
                .map_err(|e| format!("bounded area: {e}")),
            _ => Err(format!("expected all or bounded:<A>, got {s:?}")),
        }
    }
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// flag | k-large:<k> | five-nine | m-location:<m> | disc | diagram-map | minimal-diagram
    #[arg(long)]
    condition: ConditionSel,
    /// Evidence for loop triviality used by m-location
    #[arg(long, default_value = "bounded:16")]
    triviality: TrivialitySel,
    /// Target complex for diagram-map and minimal-diagram
    #[arg(long)]
    target: Option<PathBuf>,
    /// Complex or diagram (JSON or edge list); `-` reads standard input
    input: PathBuf,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct LinkArgs {
    /// Center vertex
    #[arg(long, conflicts_with = "edge", required_unless_present = "edge")]
    vertex: Option<usize>,
    /// Center edge as u,v
    #[arg(long, value_delimiter = ',')]
    edge: Option<Vec<usize>>,
    input: PathBuf,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct CyclesArgs {
    /// Longest cycle length to enumerate
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    /// Report only one shortest full cycle
    #[arg(long)]
    shortest: bool,
    input: PathBuf,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct FillArgs {
    /// Loop vertices v1,v2,...
    #[arg(long = "loop", value_delimiter = ',', required = true)]
    gamma: Vec<usize>,
    /// Area budget for the minimal search; defaults to twice the loop length
    #[arg(long)]
    max_area: Option<usize>,
    /// Fill by diagonals only, assuming the complex is k-large with k above the loop length
    #[arg(long, value_name = "K")]
    no_interior: Option<String>,
    input: PathBuf,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct DeltaArgs {
    /// Scan every quadruple
    #[arg(long, conflicts_with = "sample")]
    exact: bool,
    /// Sample this many quadruples
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Family such as tiling:7, cycle, path, simplex; needs --radii
    #[arg(long, requires = "radii", conflicts_with = "input")]
    family: Option<String>,
    #[arg(long, value_delimiter = ',')]
    radii: Vec<usize>,
    #[arg(required_unless_present = "family")]
    input: Option<PathBuf>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PlatonicName {
    Octahedron,
    Icosahedron,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Ball in the triangulation with all interior degrees equal
    Tiling {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        radius: usize,
    },
    Platonic {
        #[arg(long, value_enum)]
        name: PlatonicName,
    },
    /// Chain of interior vertices with the given degrees, emitted as a diagram
    PolygonDisc {
        #[arg(long)]
        boundary: usize,
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<usize>,
    },
    /// Clique complex of a seeded G(n, p) graph
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cone over an input complex
    Cone { input: PathBuf },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Simplex {
        #[arg(long)]
        n: usize,
    },
}

fn read_input(path: &PathBuf) -> CliResult<Vec<u8>> {
    let name = path.display().to_string();
    if name == "-" {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|source| CliError::Io { path: name, source })?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|source| CliError::Io { path: name, source })
    }
}

enum Input {
    Complex(FlagComplex),
    Diagram(DiagramMap),
}

impl Input {
    fn load(path: &PathBuf) -> CliResult<Input> {
        let bytes = read_input(path)?;
        if is_diagram(&bytes) {
            Ok(Input::Diagram(DiagramMap::from_json(&bytes)?))
        } else {
            Ok(Input::Complex(load_complex_auto(&bytes)?))
        }
    }

    /// The complex itself, or the disc of a diagram.
    fn complex(&self) -> FlagComplex {
        match self {
            Input::Complex(x) => x.clone(),
            Input::Diagram(m) => m.disc.to_complex(),
        }
    }
}

fn is_diagram(bytes: &[u8]) -> bool {
    serde_json::from_slice::<Value>(bytes)
        .ok()
        .and_then(|v| v.as_object().map(|o| o.contains_key("disc")))
        .unwrap_or(false)
}

fn load_complex(path: &PathBuf) -> CliResult<FlagComplex> {
    Ok(Input::load(path)?.complex())
}

/// Text written to standard output plus the process exit code.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::Usage(format!("--format {format:?} is not available for {command}").to_lowercase())
}

fn emit_json(value_json: String, format: Format, command: &str) -> CliResult<String> {
    match format {
        Format::Json => Ok(value_json + "\n"),
        Format::Human => {
            let v: Value = serde_json::from_str(&value_json).expect("emitted JSON parses");
            Ok(render_human(&v))
        }
        _ => Err(unsupported(format, command)),
    }
}

fn report_outcome(report: &ConditionReport, format: Format) -> CliResult<Outcome> {
    let text = emit_json(report.to_json(), format, "check")?;
    Ok(Outcome { text, code: report.verdict.exit_code() as u8 })
}

fn run_check(a: &CheckArgs) -> CliResult<Outcome> {
    let input = Input::load(&a.input)?;
    let diagram = || match &input {
        Input::Diagram(m) => Ok(m),
        Input::Complex(_) => Err(CliError::Usage("this condition needs a diagram input".into())),
    };
    let target = || -> CliResult<FlagComplex> {
        let path = a
            .target
            .as_ref()
            .ok_or_else(|| CliError::Usage("this condition needs --target".into()))?;
        load_complex(path)
    };
    let report = match a.condition {
        ConditionSel::Flag => flagness_check(&input.complex()),
        ConditionSel::KLarge(k) => check_k_large_local(&input.complex(), k),
        ConditionSel::FiveNine => check_five_nine(&input.complex())?,
        ConditionSel::MLocation(m) => check_m_location(&input.complex(), m, a.triviality.0)?,
        ConditionSel::Disc => validate_disc(&diagram()?.disc),
        ConditionSel::DiagramMap => validate_map(diagram()?, &target()?)?,
        ConditionSel::MinimalDiagram => verify_minimal_diagram(diagram()?, &target()?)?,
    };
    report_outcome(&report, a.out.format)
}

fn run_link(a: &LinkArgs) -> CliResult<Outcome> {
    let x = load_complex(&a.input)?;
    let center = match (&a.edge, a.vertex) {
        (Some(e), _) => match e.as_slice() {
            &[u, v] => Simplex::Edge(u, v),
            _ => return Err(CliError::Usage("--edge takes exactly two vertices u,v".into())),
        },
        (None, Some(v)) => Simplex::Vertex(v),
        (None, None) => unreachable!("clap requires a center"),
    };
    let link = x.link(center)?;
    let value = json!({
        "center": center,
        "members": link.members(),
        "edges": link.ambient_edges(),
        "largeness": largeness_of_link(&link),
    });
    match a.out.format {
        Format::Dot => {
            let mut out = String::from("graph link {\n");
            for &v in link.members() {
                out.push_str(&format!("  {v};\n"));
            }
            for (u, v) in link.ambient_edges() {
                out.push_str(&format!("  {u} -- {v};\n"));
            }
            out.push_str("}\n");
            Ok(Outcome::ok(out))
        }
        f => Ok(Outcome::ok(emit_json(value.to_string(), f, "link")?)),
    }
}

fn run_cycles(a: &CyclesArgs) -> CliResult<Outcome> {
    let x = load_complex(&a.input)?;
    let cycles: Vec<Loop> = if a.shortest {
        shortest_full_cycle(&x).map(|(_, c)| c).into_iter().collect()
    } else {
        enumerate_full_cycles(&x, a.max_len)
    };
    match a.out.format {
        Format::Csv => {
            let mut out = String::from("length,vertices\n");
            for c in &cycles {
                let vs: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("{},{}\n", c.len(), vs.join(" ")));
            }
            Ok(Outcome::ok(out))
        }
        f => {
            let hist = all_vertex_largeness(&x);
            let value = json!({
                "cycles": cycles,
                "count": cycles.len(),
                "vertex_largeness": hist,
            });
            Ok(Outcome::ok(emit_json(value.to_string(), f, "cycles")?))
        }
    }
}

fn run_fill(a: &FillArgs) -> CliResult<Outcome> {
    let x = load_complex(&a.input)?;
    let gamma = Loop::new(&x, a.gamma.clone())?;
    let m = match &a.no_interior {
        Some(k) => fill_without_interior(&x, &gamma, Largeness::from_str(k)?)?,
        None => find_minimal_filling(&x, &gamma, a.max_area.unwrap_or(2 * gamma.len()))?,
    };
    match a.out.format {
        Format::Dot => Ok(Outcome::ok(m.to_dot())),
        f => Ok(Outcome::ok(emit_json(m.to_json(), f, "fill")?)),
    }
}

fn parse_family(s: &str) -> CliResult<GeneratorSpec> {
    let (name, arg) = match s.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (s, None),
    };
    let degree = || -> CliResult<usize> {
        arg.ok_or_else(|| CliError::Usage("tiling family needs a degree, e.g. tiling:7".into()))?
            .parse()
            .map_err(|e| CliError::Usage(format!("tiling degree: {e}")))
    };
    match name {
        "tiling" => Ok(GeneratorSpec::TilingPatch { degree: degree()?, radius: 1 }),
        "cycle" => Ok(GeneratorSpec::Cycle { n: 3 }),
        "path" => Ok(GeneratorSpec::Path { n: 1 }),
        "simplex" => Ok(GeneratorSpec::Simplex { n: 1 }),
        _ => Err(CliError::Usage(format!(
            "unknown family {name:?}; expected tiling:<d>, cycle, path or simplex"
        ))),
    }
}

fn run_delta(a: &DeltaArgs) -> CliResult<Outcome> {
    let method = match a.sample {
        Some(samples) => DeltaMethod::Sampled { samples, seed: a.seed },
        None => DeltaMethod::Exact,
    };
    if let Some(family) = &a.family {
        let spec = parse_family(family)?;
        let samples = a.sample.unwrap_or(100_000);
        let rows = delta_growth_profile(&spec, &a.radii, samples, a.seed)?;
        return match a.out.format {
            Format::Csv => Ok(Outcome::ok(profile_csv(&rows))),
            f => {
                let text = serde_json::to_string(&rows).expect("profile serializes");
                Ok(Outcome::ok(emit_json(text, f, "delta")?))
            }
        };
    }
    let path = a.input.as_ref().expect("clap requires input without --family");
    let x = load_complex(path)?;
    let result = four_point_delta(&x, method)?;
    match a.out.format {
        Format::Csv => Ok(Outcome::ok(format!(
            "vertices,delta\n{},{}\n",
            x.vertex_count(),
            result.delta
        ))),
        f => Ok(Outcome::ok(emit_json(result.to_json(), f, "delta")?)),
    }
}

fn run_gen(a: &GenArgs) -> CliResult<Outcome> {
    let spec = match &a.kind {
        GenKind::Tiling { degree, radius } => GeneratorSpec::TilingPatch { degree: *degree, radius: *radius },
        GenKind::Platonic { name } => GeneratorSpec::Platonic {
            name: match name {
                PlatonicName::Octahedron => Platonic::Octahedron,
                PlatonicName::Icosahedron => Platonic::Icosahedron,
            },
        },
        GenKind::PolygonDisc { boundary, degrees } => {
            let disc = gen_polygon_disc(*boundary, degrees)?;
            let n = disc.vertex_count();
            let m = DiagramMap { disc, vertex_map: (0..n).collect(), simplicial: true, nondegenerate: true };
            return match a.format {
                Format::Dot => Ok(Outcome::ok(m.disc.to_dot(None))),
                f => Ok(Outcome::ok(emit_json(m.to_json(), f, "gen polygon-disc")?)),
            };
        }
        GenKind::Random { n, p, seed } => GeneratorSpec::RandomFlag { n: *n, p: *p, seed: *seed },
        GenKind::Cone { input } => {
            let x = gen_cone(&load_complex(input)?);
            return emit_complex(&x, a.format);
        }
        GenKind::Cycle { n } => GeneratorSpec::Cycle { n: *n },
        GenKind::Path { n } => GeneratorSpec::Path { n: *n },
        GenKind::Simplex { n } => GeneratorSpec::Simplex { n: *n },
    };
    emit_complex(&spec.build()?, a.format)
}

fn emit_complex(x: &FlagComplex, format: Format) -> CliResult<Outcome> {
    match format {
        Format::Dot => {
            let mut out = String::from("graph complex {\n");
            for v in x.vertices() {
                out.push_str(&format!("  {v};\n"));
            }
            for (u, v) in x.edges() {
                out.push_str(&format!("  {u} -- {v};\n"));
            }
            out.push_str("}\n");
            Ok(Outcome::ok(out))
        }
        Format::Csv => {
            let mut out = String::from("u,v\n");
            for (u, v) in x.edges() {
                out.push_str(&format!("{u},{v}\n"));
            }
            Ok(Outcome::ok(out))
        }
        f => Ok(Outcome::ok(emit_json(x.to_json(), f, "gen")?)),
    }
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Check(a) => run_check(a),
        Command::Link(a) => run_link(a),
        Command::Cycles(a) => run_cycles(a),
        Command::Fill(a) => run_fill(a),
        Command::Delta(a) => run_delta(a),
        Command::Gen(a) => run_gen(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE_EXIT } else { 0 });
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(outcome.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(USAGE_EXIT);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("flagcheck: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
