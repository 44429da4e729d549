//! `pog`: preordered-group computations over a JSON workspace.
//!
//! Exit status is 0 on success, 2 when a checked property fails and 1 on
//! malformed input.

mod commands;
mod workspace;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use commands::{LimitKind, OracleKind, Outcome, Report};
use pog_core::factor::ClassKind;
use workspace::{parse_workspace, InputError, Workspace};

#[derive(Parser, Debug)]
#[command(name = "pog", version, about = "Preordered groups: torsion theories, factorizations and coverings")]
struct Cli {
    /// Workspace document; read from standard input when omitted.
    #[arg(long, short = 'f', global = true)]
    workspace: Option<PathBuf>,
    /// Window for bounded checks on infinite groups.
    #[arg(long, global = true, default_value_t = 8)]
    window: u32,
    /// Entry bound for morphism enumeration on the abelian backend.
    #[arg(long, global = true, default_value_t = 10)]
    hom_bound: u32,
    /// Use the bundled corpus as the workspace. Object commands given no
    /// object run over every corpus object.
    #[arg(long, global = true)]
    corpus: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum System {
    Em,
    Ml,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    #[value(name = "E")]
    E,
    #[value(name = "M")]
    M,
    #[value(name = "Eprime")]
    Eprime,
    #[value(name = "Mstar")]
    Mstar,
}

impl From<ClassArg> for ClassKind {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::E => ClassKind::E,
            ClassArg::M => ClassKind::M,
            ClassArg::Eprime => ClassKind::Eprime,
            ClassArg::Mstar => ClassKind::Mstar,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Enumerable {
    Cones,
    Morphisms,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Load and validate the workspace.
    Validate,
    /// Total / protomodular / partially ordered / discrete flags.
    Classify { object: Option<String> },
    /// The torsion sequence T(P) -> P -> F(P).
    Torsion { object: Option<String> },
    /// The pretorsion sequence (G, N) -> (G, P) -> F(P).
    Pretorsion { object: Option<String> },
    /// The torsion-free reflection of a morphism.
    Reflect { morphism: String },
    /// The protomodular reflection of an object.
    ProtoReflect { object: Option<String> },
    /// Factor a morphism through the (E, M) or monotone-light system.
    Factor {
        morphism: String,
        #[arg(long, value_enum)]
        system: System,
    },
    /// Membership in one of the classes E, M, Eprime, Mstar.
    Class {
        morphism: String,
        #[arg(long = "of", value_enum)]
        of: ClassArg,
    },
    /// Whether a morphism is a covering, optionally trivial along a cover.
    Covering {
        morphism: String,
        #[arg(long)]
        along: Option<String>,
    },
    /// Certify the canonical cover of an object.
    Cover { object: Option<String> },
    Kernel { morphism: String },
    Cokernel { morphism: String },
    /// Product of two objects, or pullback, equalizer or coequalizer of two morphisms.
    Limit {
        #[arg(value_enum)]
        kind: LimitKind,
        first: String,
        second: String,
    },
    /// Check that K -> A -> B is short exact, or Z-preexact with --z.
    SequenceCheck {
        k: String,
        f: String,
        #[arg(long)]
        z: bool,
    },
    /// Stable units for B and a morphism into F(B).
    StableUnits { base: String, g: String },
    /// Unique diagonal for the square m a = b e.
    Orthogonal { e: String, m: String, a: String, b: String },
    /// Special Schreier check of a morphism's cone map, or of an object's
    /// torsion-free reflection when NAME is an object.
    Schreier { name: Option<String> },
    /// Cones of a finite group, or morphisms between two objects.
    Enumerate {
        #[arg(value_enum)]
        what: Enumerable,
        first: String,
        second: Option<String>,
    },
    /// Verify a universal property by brute force.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        names: Vec<String>,
        /// Largest finite test object.
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// Entry bound for abelian test morphisms.
        #[arg(long, default_value_t = 1)]
        bound: u32,
    },
    /// Search registered laws for a counterexample.
    Search {
        law: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
    },
}

fn load(cli: &Cli) -> Result<Workspace, InputError> {
    if cli.corpus {
        return Ok(Workspace::corpus());
    }
    let text = match &cli.workspace {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| InputError::Usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| InputError::Usage(e.to_string()))?;
            s
        }
    };
    parse_workspace(&text)
}

/// Runs `f` on the named object, or on every object under `--corpus`.
fn per_object(ws: &Workspace, name: &Option<String>, f: impl Fn(&pog_core::preord::PreorderedGroup) -> Outcome) -> Outcome {
    match name {
        Some(n) => f(ws.object(n)?),
        None if !ws.objects.is_empty() => {
            let mut results = Map::new();
            let mut ok = true;
            for (n, p) in &ws.objects {
                let r = f(p)?;
                ok &= r.ok;
                results.insert(n.clone(), r.body);
            }
            Ok(Report { body: json!({ "results": results }), ok })
        }
        None => Err(InputError::Usage("no object given".into())),
    }
}

fn needs_workspace(c: &Command) -> bool {
    !matches!(c, Command::Search { .. })
}

fn run(cli: &Cli, ws: &Workspace) -> Outcome {
    use commands as c;
    let w = cli.window;
    match &cli.command {
        Command::Validate => c::validate(ws),
        Command::Classify { object } => per_object(ws, object, c::classify),
        Command::Torsion { object } => per_object(ws, object, c::torsion),
        Command::Pretorsion { object } => per_object(ws, object, c::pretorsion),
        Command::Reflect { morphism } => c::reflect(ws.morphism(morphism)?),
        Command::ProtoReflect { object } => per_object(ws, object, c::proto_reflect_cmd),
        Command::Factor { morphism, system } => c::factor(ws.morphism(morphism)?, matches!(system, System::Ml)),
        Command::Class { morphism, of } => c::class(ws.morphism(morphism)?, (*of).into()),
        Command::Covering { morphism, along } => {
            let along = along.as_deref().map(|a| ws.morphism(a)).transpose()?;
            c::covering(ws.morphism(morphism)?, along)
        }
        Command::Cover { object } => per_object(ws, object, |p| c::cover(p, w)),
        Command::Kernel { morphism } => c::kernel(ws.morphism(morphism)?),
        Command::Cokernel { morphism } => c::cokernel(ws.morphism(morphism)?),
        Command::Limit { kind, first, second } => c::limit(ws, *kind, first, second),
        Command::SequenceCheck { k, f, z } => c::sequence_check(ws.morphism(k)?, ws.morphism(f)?, *z),
        Command::StableUnits { base, g } => c::stable_units(ws.object(base)?, ws.morphism(g)?),
        Command::Orthogonal { e, m, a, b } => {
            c::orthogonal(ws.morphism(e)?, ws.morphism(m)?, ws.morphism(a)?, ws.morphism(b)?)
        }
        Command::Schreier { name } => match name.as_deref() {
            Some(n) if ws.morphisms.contains_key(n) => c::schreier(ws.morphism(n)?, w),
            _ => per_object(ws, name, |p| c::schreier(&pog_core::torsion::torsion_sequence(p).unit, w)),
        },
        Command::Enumerate { what: Enumerable::Cones, first, second: None } => c::enumerate_cones_cmd(ws.group(first)?),
        Command::Enumerate { what: Enumerable::Morphisms, first, second: Some(second) } => {
            c::enumerate_morphisms(ws.object(first)?, ws.object(second)?, cli.hom_bound)
        }
        Command::Enumerate { what: Enumerable::Cones, .. } => Err(InputError::Usage("enumerate cones takes one group".into())),
        Command::Enumerate { what: Enumerable::Morphisms, .. } => {
            Err(InputError::Usage("enumerate morphisms takes two objects".into()))
        }
        Command::Oracle { kind, names, max_order, bound } => c::oracle(ws, *kind, names, *max_order, *bound),
        Command::Search { law, max_order } => c::search(law.as_deref(), *max_order),
    }
}

/// Echo of the command line settings.
fn echo(cli: &Cli) -> Value {
    json!({
        "args": std::env::args().skip(1).collect::<Vec<_>>(),
        "window": cli.window,
        "hom_bound": cli.hom_bound,
        "corpus": cli.corpus,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let ws = if needs_workspace(&cli.command) { load(&cli) } else { Ok(Workspace::default()) };
    let outcome = ws.and_then(|ws| run(&cli, &ws));
    match outcome {
        Ok(Report { mut body, ok }) => {
            body["input"] = echo(&cli);
            println!("{}", serde_json::to_string(&body).expect("serializable"));
            ExitCode::from(if ok { 0 } else { 2 })
        }
        Err(e) => {
            eprintln!("pog: {e}");
            ExitCode::from(1)
        }
    }
}
