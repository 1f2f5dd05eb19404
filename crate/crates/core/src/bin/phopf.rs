//! `phopf`: check, build and pair fixture objects.
//!
//! Exit codes: 0 all axioms hold, 1 an axiom fails, 2 a construction refused its input,
//! 3 the input could not be read, is not a valid fixture, or the arguments are malformed.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use phopf::cli_io::{
    load, render_reports, run_build, run_check, run_pair, run_report, save, verdict_code, BuildRequest, CheckKind,
    Construction, Format, PairKind, PairRequest,
};
use phopf::exactlin::Field;
use phopf::Error;

#[derive(Parser)]
#[command(
    name = "phopf",
    version,
    about = "Exact checks and constructions for partial (co)actions of finite-dimensional Hopf algebras"
)]
struct Cli {
    /// Worker threads for the axiom checkers; output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Reinterpret every scalar of the input in this field (`Q` or `Fp:<p>`).
    #[arg(long, global = true)]
    field: Option<Field>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one object against the axioms of its kind.
    Check {
        file: PathBuf,
        /// The checker to run; defaults to the kind of the selected object.
        #[arg(long = "as", value_enum)]
        kind: Option<CheckKind>,
        /// The object to check; may be omitted when only one object fits.
        #[arg(long)]
        object: Option<String>,
    },
    /// Run a construction and write the result as a fixture.
    Build(BuildArgs),
    /// Build and check a pairing between two objects.
    Pair {
        file: PathBuf,
        #[arg(long = "as", value_enum)]
        kind: PairKind,
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        #[arg(long)]
        hopf_pairing: Option<String>,
        #[arg(long)]
        pairing: Option<String>,
    },
    /// Check every top-level object of a fixture.
    Report { file: PathBuf },
}

#[derive(Args)]
#[command(group(ArgGroup::new("construction").required(true).multiple(false)))]
struct BuildArgs {
    file: PathBuf,
    /// Source object; may be omitted when only one object fits.
    #[arg(long)]
    object: Option<String>,
    /// Name of the result; defaults to `<object>.<construction>`.
    #[arg(long)]
    name: Option<String>,
    /// The other Hopf algebra of a transfer.
    #[arg(long)]
    hopf: Option<String>,
    /// The Hopf pairing of a transfer.
    #[arg(long)]
    pairing: Option<String>,
    /// Write the fixture here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Partial action → Hopf algebroid on the partial smash product.
    #[arg(long, group = "construction")]
    smash_algebroid: bool,
    /// Partial coaction → partial split Hopf algebroid.
    #[arg(long, group = "construction")]
    partial_split_algebroid: bool,
    /// Global coaction → split Hopf algebroid.
    #[arg(long, group = "construction")]
    split_algebroid: bool,
    /// Set partial action → groupoid of the action.
    #[arg(long, group = "construction")]
    groupoid: bool,
    /// Set partial action → function Hopf algebroid of its groupoid.
    #[arg(long, group = "construction")]
    groupoid_algebroid: bool,
    /// Set partial action → partial action of the group algebra.
    #[arg(long, group = "construction")]
    kg_action: bool,
    /// Set partial action → partial coaction of the dual group algebra.
    #[arg(long, group = "construction")]
    dual_coaction: bool,
    /// Set partial action → partial module coalgebra.
    #[arg(long, group = "construction")]
    module_coalgebra: bool,
    /// Set partial action → partial comodule coalgebra.
    #[arg(long, group = "construction")]
    comodule_coalgebra: bool,
    /// Comodule coalgebra → partial cosmash coproduct.
    #[arg(long, group = "construction")]
    cosmash: bool,
    /// Module coalgebra → its C-ring.
    #[arg(long, group = "construction")]
    cring: bool,
    /// Partial coaction → partial action through a Hopf pairing.
    #[arg(long, group = "construction")]
    action_from_coaction: bool,
    /// Partial action → partial coaction through a non-degenerate Hopf pairing.
    #[arg(long, group = "construction")]
    coaction_from_action: bool,
}

impl BuildArgs {
    fn construction(&self) -> Construction {
        [
            (self.smash_algebroid, Construction::SmashAlgebroid),
            (self.partial_split_algebroid, Construction::PartialSplitAlgebroid),
            (self.split_algebroid, Construction::SplitAlgebroid),
            (self.groupoid, Construction::Groupoid),
            (self.groupoid_algebroid, Construction::GroupoidAlgebroid),
            (self.kg_action, Construction::KgAction),
            (self.dual_coaction, Construction::DualCoaction),
            (self.module_coalgebra, Construction::ModuleCoalgebra),
            (self.comodule_coalgebra, Construction::ComoduleCoalgebra),
            (self.cosmash, Construction::Cosmash),
            (self.cring, Construction::CRing),
            (self.action_from_coaction, Construction::ActionFromCoaction),
            (self.coaction_from_action, Construction::CoactionFromAction),
        ]
        .into_iter()
        .find_map(|(on, c)| on.then_some(c))
        .expect("clap requires one construction")
    }
}

fn run(cli: &Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::Check { file, kind, object } => {
            let fx = load(file, cli.field)?;
            let (name, r) = run_check(&fx, *kind, object.as_deref())?;
            print!("{}", render_reports(&[(name, r.clone())], fx.field, cli.format));
            Ok(verdict_code([&r]))
        }
        Command::Build(args) => {
            let fx = load(&args.file, cli.field)?;
            let req = BuildRequest {
                construction: args.construction(),
                object: args.object.as_deref(),
                hopf: args.hopf.as_deref(),
                pairing: args.pairing.as_deref(),
                name: args.name.as_deref(),
            };
            let (out, summary) = run_build(&fx, &req)?;
            match &args.out {
                Some(path) => {
                    save(&out, path)?;
                    println!("{summary}");
                }
                None => {
                    print!("{}", out.to_json());
                    eprintln!("{summary}");
                }
            }
            Ok(0)
        }
        Command::Pair { file, kind, left, right, hopf_pairing, pairing } => {
            let fx = load(file, cli.field)?;
            let req = PairRequest {
                kind: *kind,
                left: left.as_deref(),
                right: right.as_deref(),
                hopf_pairing: hopf_pairing.as_deref(),
                pairing: pairing.as_deref(),
            };
            let (name, r) = run_pair(&fx, &req)?;
            print!("{}", render_reports(&[(name, r.clone())], fx.field, cli.format));
            Ok(verdict_code([&r]))
        }
        Command::Report { file } => {
            let fx = load(file, cli.field)?;
            let reports = run_report(&fx)?;
            print!("{}", render_reports(&reports, fx.field, cli.format));
            Ok(verdict_code(reports.iter().map(|(_, r)| r)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("phopf: cannot configure threads: {e}");
            return ExitCode::from(3);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("phopf: {e}");
            ExitCode::from(phopf::cli_io::exit_code(&e) as u8)
        }
    }
}
