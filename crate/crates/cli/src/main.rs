mod expr;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ehv_core::indmod::{enumerate_basis, reduce_to_v};
use ehv_core::suites;
use ehv_core::{
    AlgebraSpec, Bindings, GeneratorOrder, IndVector, InducedModule, ModuleKind, Normalizer, Param, Phi, Report, Row,
    UEMonomial,
};

use expr::{parse, parse_lie, parse_scalar, ParseError};

#[derive(Parser)]
#[command(
    name = "ehv",
    version,
    about = "Exact computations in the extended Heisenberg-Virasoro algebra"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Generator indices range over [-window, window].
    #[arg(long, global = true, default_value_t = 6)]
    window: i64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random cases, where a suite samples.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Parameter substitutions, e.g. `alpha=0,beta=-1/2,F=1`.
    #[arg(long, global = true)]
    bind: Option<String>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::O31)]
    order: OrderArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    O31,
    O32,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bracket of two linear combinations of generators.
    Bracket { x: String, y: String },
    /// PBW normal form of an expression.
    Normalize { expr: String },
    /// Apply an expression to a module vector (given as an expression applied to the cyclic vector).
    Act {
        #[arg(long, default_value = "vacuum")]
        module: String,
        operator: String,
        #[arg(default_value = "1")]
        vector: String,
    },
    /// List the vacuum module basis in one degree.
    Basis {
        #[arg(long)]
        degree: u32,
    },
    /// Jacobi identity for every table, plus the corrupted control.
    CheckJacobi,
    /// Isomorphisms between parameter choices.
    CheckIso {
        /// Only this isomorphism (1 to 4).
        #[arg(long)]
        phi: Option<u8>,
        /// Shifts for phi1.
        #[arg(long, value_delimiter = ',', default_value = "1,3", allow_hyphen_values = true)]
        shift: Vec<i64>,
    },
    /// Comparison embeddings and subalgebra closure.
    CheckEmbed,
    /// Normal form commutators, associativity and round trips.
    CheckPbw,
    /// Module axiom on sampled vectors.
    CheckModuleAxiom {
        #[arg(long, default_value = "vacuum")]
        module: String,
        /// Degree (vacuum) or prefix weight cap of sampled vectors.
        #[arg(long, default_value_t = 5)]
        degree: u32,
    },
    /// Vertex operator products, field commutators and grading.
    CheckVertex {
        #[arg(long, default_value_t = 5)]
        degree: u32,
        /// Largest |m|, |n| in the commutator check.
        #[arg(long, default_value_t = 4)]
        max_index: i64,
        #[arg(long, default_value_t = 6)]
        l0_degree: u32,
    },
    /// Degree predictions for the three reduction rows.
    CheckLemma {
        #[arg(long, default_value = "universal:1,0,2")]
        module: String,
        /// G, J, L, or all (all also runs stability, injectivity, reduction and guards).
        #[arg(long, default_value = "all")]
        row: String,
        #[arg(long, default_value_t = 4)]
        weight: u64,
    },
    /// Reduce a vector of a universal module into the coefficient module.
    Reduce {
        #[arg(long, default_value = "universal:1,0,2")]
        module: String,
        vector: String,
    },
    /// Annihilation of vectors above the bound.
    CheckBound {
        #[arg(long, default_value = "restricted:1,1,1")]
        module: String,
        #[arg(long, default_value_t = 4)]
        weight: u64,
        #[arg(long, default_value_t = 5)]
        extra: i64,
    },
}

enum Failure {
    Usage(String),
    Check,
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ehv_core::Error> for Failure {
    fn from(e: ehv_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_bindings(src: Option<&str>) -> Result<Bindings, Failure> {
    let mut b = Bindings::new();
    for part in src.unwrap_or("").split(',').filter(|s| !s.trim().is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("binding {part:?} is not name=value")))?;
        let p = Param::from_name(name.trim()).ok_or_else(|| Failure::Usage(format!("unknown parameter {name:?}")))?;
        b.insert(p, parse_scalar(value)?);
    }
    Ok(b)
}

fn parse_module(src: &str) -> Result<ModuleKind, Failure> {
    let bad = || {
        Failure::Usage(format!(
            "module {src:?}: expected vacuum, universal:k,d,l, opaque:k,d1,d2 or restricted:k,l,m"
        ))
    };
    if src == "vacuum" {
        return Ok(ModuleKind::Vacuum);
    }
    let (name, args) = src.split_once(':').ok_or_else(bad)?;
    let n: Vec<i64> = args
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [a, b, c] = n[..] else { return Err(bad()) };
    let unsigned = |x: i64| u32::try_from(x).map_err(|_| bad());
    match name {
        "universal" => Ok(ModuleKind::Universal {
            k: a,
            d: unsigned(b)?,
            l: c,
        }),
        "opaque" => Ok(ModuleKind::Opaque {
            k: a,
            d1: unsigned(b)?,
            d2: unsigned(c)?,
        }),
        "restricted" => Ok(ModuleKind::Restricted { k: a, l: b, m: c }),
        _ => Err(bad()),
    }
}

fn module_vector(module: &InducedModule, src: &str) -> Result<IndVector, Failure> {
    let mut v = IndVector::zero();
    for (c, w) in parse(src)?.0 {
        v = v.add(&module.word_vector(&w)?.scale(&c));
    }
    Ok(v)
}

fn write_out(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        // a closed pipe (`ehv basis | head`) is not an error
        None => {
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            Ok(())
        }
    }
}

fn emit(cli: &Cli, report: Report) -> Result<(), Failure> {
    write_out(cli, &report.to_json())?;
    eprintln!(
        "{}: {} cases, {} failed",
        report.suite, report.cases_run, report.failure_count
    );
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if cli.window < 0 {
        return Err(Failure::Usage("--window must be nonnegative".into()));
    }
    let bindings = parse_bindings(cli.bind.as_deref())?;
    let order = match cli.order {
        OrderArg::O31 => GeneratorOrder::order_31(),
        OrderArg::O32 => GeneratorOrder::order_32(),
    };
    let samples = |default: usize| cli.samples.unwrap_or(default);
    match &cli.cmd {
        Cmd::Bracket { x, y } => {
            let spec = AlgebraSpec::ehv_with(bindings);
            let out = spec.bracket(&parse_lie(x)?, &parse_lie(y)?)?;
            write_out(cli, &out.to_string())
        }
        Cmd::Normalize { expr } => {
            let mut n = Normalizer::new(AlgebraSpec::ehv_with(bindings), order);
            let mut out = ehv_core::UEElement::zero();
            for (c, w) in parse(expr)?.0 {
                out = out.add(&n.normalize(&w)?.scale(&c));
            }
            write_out(cli, &out.to_string())
        }
        Cmd::Act {
            module,
            operator,
            vector,
        } => {
            let m = InducedModule::new(parse_module(module)?, bindings)?;
            let v = module_vector(&m, vector)?;
            let mut out = IndVector::zero();
            for (c, w) in parse(operator)?.0 {
                out = out.add(&m.act_word(&w, &v)?.scale(&c));
            }
            match cli.out {
                Some(_) => write_out(
                    cli,
                    &serde_json::to_string_pretty(&m.to_json(&out)).expect("vector serializes"),
                ),
                None => write_out(cli, &out.to_string()),
            }
        }
        Cmd::Basis { degree } => {
            let words = enumerate_basis(*degree);
            let lines: Vec<String> = words
                .into_iter()
                .map(|w| {
                    if w.is_empty() {
                        "1".into()
                    } else {
                        UEMonomial::of_word(w).to_string()
                    }
                })
                .collect();
            write_out(cli, &lines.join("\n"))
        }
        Cmd::CheckJacobi => emit(cli, suites::jacobi_suite(&bindings, cli.window)),
        Cmd::CheckIso { phi, shift } => {
            let report = match phi {
                None => suites::iso_suite(cli.window, shift)?,
                Some(1) => {
                    let mut r = Report::new("check-iso");
                    for &p in shift {
                        r.absorb(ehv_core::algebra::homomorphism_check(Phi::Shift(p), cli.window)?);
                    }
                    r
                }
                Some(k) => ehv_core::algebra::homomorphism_check(Phi::from_index(*k, 0)?, cli.window)?,
            };
            emit(cli, report)
        }
        Cmd::CheckEmbed => emit(cli, suites::embed_suite(cli.window)?),
        Cmd::CheckPbw => emit(cli, suites::pbw_suite(&bindings, cli.window, samples(300), cli.seed)?),
        Cmd::CheckModuleAxiom { module, degree } => {
            let kind = parse_module(module)?;
            if matches!(kind, ModuleKind::Opaque { .. }) {
                return Err(Failure::Usage(
                    "the opaque model only supports single lemma steps".into(),
                ));
            }
            let m = InducedModule::new(kind, bindings)?;
            let mut report = suites::module_axiom_suite(&m, samples(500), *degree, cli.window.min(4), cli.seed);
            if m.kind() == ModuleKind::Vacuum {
                report.absorb(suites::vacuum_dimension_check(8));
            }
            emit(cli, report)
        }
        Cmd::CheckVertex {
            degree,
            max_index,
            l0_degree,
        } => emit(
            cli,
            suites::vertex_suite(&bindings, cli.window, *max_index, *degree, *l0_degree)?,
        ),
        Cmd::CheckLemma { module, row, weight } => {
            let kind = parse_module(module)?;
            let report = match (row.as_str(), kind) {
                ("all", ModuleKind::Universal { .. }) => suites::universal_suite(kind, samples(200), 100, 4, cli.seed)?,
                ("all", ModuleKind::Opaque { .. }) => suites::opaque_suite(kind, samples(200), cli.seed)?,
                ("all", _) => return Err(Failure::Usage("lemma rows need a universal or opaque module".into())),
                (r, _) => {
                    let row = Row::from_name(r).ok_or_else(|| Failure::Usage(format!("unknown row {r:?}")))?;
                    let m = InducedModule::new(kind, bindings)?;
                    suites::lemma_suite(&m, row, samples(200), *weight, cli.seed)
                }
            };
            emit(cli, report)
        }
        Cmd::Reduce { module, vector } => {
            let m = InducedModule::new(parse_module(module)?, bindings)?;
            let v = module_vector(&m, vector)?;
            let red = reduce_to_v(&m, &v, 64)?;
            let mut lines = Vec::new();
            for (op, deg) in red.operators.iter().zip(&red.degrees) {
                lines.push(format!("{deg} --{op}-->"));
            }
            lines.push(format!(
                "{} : {}",
                red.degrees.last().expect("initial degree"),
                red.value
            ));
            write_out(cli, &lines.join("\n"))
        }
        Cmd::CheckBound { module, weight, extra } => {
            let ModuleKind::Restricted { k, l, m } = parse_module(module)? else {
                return Err(Failure::Usage("check-bound needs restricted:k,l,m".into()));
            };
            emit(cli, suites::bound_suite(k, l, m, *weight, *extra)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
