//! Batch interface over the workspace: construct structures, classify them,
//! compute nuclei and their companions, and run the invariant suites.
//!
//! [`run`] is the whole program minus process plumbing, so tests drive it
//! in-process.

use std::io::Read;

use clap::{Parser, Subcommand};
use order_core::Error;
use serde_json::Value;

pub mod analyze;
pub mod doc;
pub mod make;
pub mod resolve;
pub mod verify;

pub use doc::{Body, LazyCarrier, MagmaDoc, MapDoc, MorphismDoc, PosetDoc, StructureDoc, FORMAT_VERSION};
pub use verify::{roundtrip_witnesses, verify_all, RoundTripWitnesses, Status};

#[derive(Debug, Parser)]
#[command(name = "quantale", version, about = "Nuclei on finite ordered magmas and quantales")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a structure and print its document.
    Make {
        #[command(subcommand)]
        what: make::MakeCmd,
    },
    /// Classification profile and diagram position.
    Classify {
        input: String,
        /// Emit the Hasse diagram of the carrier instead.
        #[arg(long)]
        dot: bool,
    },
    /// Every nucleus, with flags.
    Nuclei { input: String },
    /// The lattice of nuclei under the pointwise order.
    NucleusLattice {
        input: String,
        #[arg(long)]
        dot: bool,
    },
    /// The finitary companion of a nucleus.
    StarF {
        /// `<magma> [nucleus]`, or just `[nucleus]` with `--carrier`.
        #[arg(num_args = 0..=2)]
        inputs: Vec<String>,
        #[arg(long, value_enum)]
        carrier: Option<LazyCarrier>,
        /// Describable elements evaluated on a lazy carrier.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Stability of a nucleus and its stable closure.
    Stable { magma: String, nucleus: String },
    /// The divisorial closure `v(a)`.
    V {
        magma: String,
        element: String,
        #[arg(long, value_enum, default_value_t = resolve::StrategyArg::All)]
        strategy: resolve::StrategyArg,
    },
    /// Whether the only nuclei are `d` and `e`.
    Simple { input: String },
    /// The ideal completion of a multiplicative semilattice.
    Idl { input: String },
    /// Both round-trip isomorphisms as explicit bijections.
    Roundtrip { input: String },
    /// `N(M)`, `N(N(M))`, ... up to a depth.
    Tower {
        input: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Every applicable invariant suite, as a pass/fail matrix.
    VerifyAll { input: String },
}

/// What a command produced, as text and as JSON.
#[derive(Clone, Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(text: String, json: Value) -> Self {
        Report { text, json }
    }

    /// A report whose text is the document itself.
    pub fn doc(d: &StructureDoc) -> Self {
        let json = serde_json::to_value(d).expect("documents serialize");
        Report { text: d.to_json(), json }
    }
}

/// A finished invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit status for an error: 1 when a hypothesis fails or the question is
/// out of reach, 2 for bad input, 3 for an internal inconsistency.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::HypothesisNotMet(_) | Error::Undecidable(_) | Error::BudgetExceeded(_) => 1,
        Error::Malformed(_)
        | Error::InvalidOrder(_)
        | Error::ForeignId { .. }
        | Error::TooLarge { .. }
        | Error::NotAMorphism(_) => 2,
        Error::Internal(_) => 3,
    }
}

/// Input source shared by the subcommands; `-` reads standard input once.
pub struct Inputs<'a> {
    stdin: Option<&'a mut dyn Read>,
    cached: Option<String>,
}

impl<'a> Inputs<'a> {
    pub fn new(stdin: &'a mut dyn Read) -> Self {
        Inputs { stdin: Some(stdin), cached: None }
    }

    pub fn read(&mut self, path: &str) -> order_core::Result<String> {
        if path != "-" {
            return std::fs::read_to_string(path)
                .map_err(|e| Error::malformed(format!("cannot read {path}: {e}")));
        }
        if self.cached.is_none() {
            let mut buf = String::new();
            if let Some(r) = self.stdin.take() {
                r.read_to_string(&mut buf)
                    .map_err(|e| Error::malformed(format!("cannot read standard input: {e}")))?;
            }
            self.cached = Some(buf);
        }
        Ok(self.cached.clone().expect("just filled"))
    }

    pub fn doc(&mut self, path: &str) -> order_core::Result<StructureDoc> {
        StructureDoc::parse(&self.read(path)?)
    }
}

fn dispatch(cli: &Cli, inputs: &mut Inputs<'_>) -> order_core::Result<(Report, i32)> {
    let ok = |r: Report| Ok((r, 0));
    match &cli.command {
        Command::Make { what } => ok(make::make(what, inputs)?),
        Command::Classify { input, dot } => ok(analyze::classify(&inputs.doc(input)?, *dot)?),
        Command::Nuclei { input } => ok(analyze::nuclei(&inputs.doc(input)?)?),
        Command::NucleusLattice { input, dot } => ok(analyze::nucleus_lattice(&inputs.doc(input)?, *dot)?),
        Command::StarF { inputs: args, carrier, samples } => ok(analyze::star_f(args, *carrier, *samples, inputs)?),
        Command::Stable { magma, nucleus } => {
            let d = inputs.doc(magma)?;
            ok(analyze::stable(&d, nucleus, inputs)?)
        }
        Command::V { magma, element, strategy } => ok(analyze::v(&inputs.doc(magma)?, element, *strategy)?),
        Command::Simple { input } => ok(analyze::simple(&inputs.doc(input)?)?),
        Command::Idl { input } => ok(analyze::idl(&inputs.doc(input)?)?),
        Command::Roundtrip { input } => ok(analyze::roundtrip(&inputs.doc(input)?)?),
        Command::Tower { input, depth } => ok(analyze::tower(&inputs.doc(input)?, *depth)?),
        Command::VerifyAll { input } => {
            let (report, failed) = verify::verify_all_report(&inputs.doc(input)?)?;
            Ok((report, if failed { 3 } else { 0 }))
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    let mut inputs = Inputs::new(stdin);
    match dispatch(&cli, &mut inputs) {
        Ok((report, code)) => {
            let mut stdout = if cli.json {
                serde_json::to_string_pretty(&report.json).expect("reports serialize")
            } else {
                report.text
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
