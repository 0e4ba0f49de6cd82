//! Command-line front end for `qtest-core`.
//!
//! [`dispatch`] parses an argument list, runs one command and writes its
//! output to the supplied streams; `main` is a thin wrapper around it.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use qtest_core::boolfunc::{self, classify, to_parity_form, FunctionClass, TruthTable};
use qtest_core::charts::{build_catalog, build_chart, Format, Render};
use qtest_core::circuits::{
    assert_equivalent_on, compile_equivalent, pipeline_circuit, InputDomain,
};
use qtest_core::pipeline::{self, FaultSpec};
use qtest_core::statevec::{self, factor_product_state, StateVector, DEFAULT_TOLERANCE};
use qtest_core::{BasisKet, BitString, Error, QuantumOracle};

/// Exit code for domain errors.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit code for usage errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "qtest",
    version,
    about = "Symmetric/antisymmetric test functions for Hadamard-oracle-Hadamard circuits"
)]
struct Cli {
    /// Output format for `chart` and `catalog`.
    #[arg(long, global = true, default_value = "text")]
    format: String,

    /// Tolerance for basis-state detection.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,

    /// Largest total qubit count (variables + ancilla) a command may use.
    #[arg(long, global = true, default_value_t = statevec::MAX_QUBITS)]
    max_qubits: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List positive then negative functions: `<binary> <hex> <decimal> <class>`.
    Gen { n: usize },
    /// Print Positive, Negative or NotAdmissible (exit 1 for the latter).
    Classify { function: String },
    /// Print the parity form (mask, complement) of an admissible function.
    Parity { function: String },
    /// Simulate the pipeline on a signed input state such as `+001`.
    Simulate {
        function: String,
        #[arg(allow_hyphen_values = true)]
        state: String,
        /// Also print the full output vector.
        #[arg(long)]
        vector: bool,
    },
    /// Predict the output from the parity form, without simulation.
    Predict {
        function: String,
        #[arg(allow_hyphen_values = true)]
        state: String,
    },
    /// Find the function mapping one state to another; prints its hex form.
    Solve {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(allow_hyphen_values = true)]
        output: String,
    },
    /// Input/output mapping chart of positive functions.
    Chart {
        n: usize,
        /// Annotate each cell with the complementary negative function.
        #[arg(long)]
        negatives: bool,
    },
    /// Catalog of positive functions with ids, hex and decimal values.
    Catalog { n: usize },
    /// Show the CNOT pipeline and its Hadamard-free equivalent, and check them.
    Equiv { function: String },
    /// Compare simulation and prediction for every admissible function.
    Verify { n: usize },
    /// Success probability with one injected fault
    /// (`skip-h:<layer>:<q>`, `rotate:<layer>:<q>:<rad>`, `corrupt:<t>`, `none`).
    Fault {
        function: String,
        #[arg(allow_hyphen_values = true)]
        state: String,
        fault: String,
    },
    /// Factor a product state such as `(1 -1 -1 1 -1 1 1 -1)/√8`.
    Factor {
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Print the oracle matrix as rows of 0/1.
    Matrix { function: String },
    /// Simon shift between two inputs; with a function, whether it is invariant.
    Shift {
        x: String,
        y: String,
        function: Option<String>,
    },
}

struct Context {
    format: Format,
    tolerance: f64,
    max_qubits: usize,
}

impl Context {
    fn check_qubits(&self, qubits: usize) -> Result<(), Error> {
        if qubits > self.max_qubits {
            return Err(Error::SizeCap {
                qubits,
                max: self.max_qubits,
            });
        }
        Ok(())
    }

    fn function(&self, text: &str) -> Result<TruthTable, Error> {
        let f = boolfunc::parse_function(text)?;
        self.check_qubits(f.n() + 1)?;
        Ok(f)
    }

    /// Function whose variable count is fixed by an accompanying state.
    fn function_for(&self, text: &str, state: &BasisKet) -> Result<TruthTable, Error> {
        self.check_qubits(state.qubits())?;
        if state.qubits() < 2 {
            return Err(Error::InvalidState(format!(
                "{state} needs at least one data bit and the ancilla"
            )));
        }
        boolfunc::hex_decode(text, state.qubits() - 1)
    }
}

/// Outcome of a command that ran without a domain error.
enum Outcome {
    Success,
    /// Output was printed but the command reports failure (exit 1).
    Failed,
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let format = match cli.format.parse::<Format>() {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            return EXIT_USAGE;
        }
    };
    if !(cli.tolerance.is_finite() && cli.tolerance >= 0.0) {
        let _ = writeln!(err, "error: --tolerance must be a non-negative number");
        return EXIT_USAGE;
    }
    let ctx = Context {
        format,
        tolerance: cli.tolerance,
        max_qubits: cli.max_qubits,
    };
    match execute(&ctx, cli.command, out) {
        Ok(Outcome::Success) => 0,
        Ok(Outcome::Failed) => EXIT_DOMAIN,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            EXIT_DOMAIN
        }
    }
}

fn execute(ctx: &Context, command: Command, out: &mut dyn Write) -> Result<Outcome, Error> {
    let mut text = String::new();
    let outcome = match command {
        Command::Gen { n } => {
            ctx.check_qubits(n + 1)?;
            let (pos, neg) = boolfunc::generate_functions(n)?;
            for f in pos.iter().chain(&neg) {
                text += &format!(
                    "{} {} {} {}\n",
                    f.to_binary(),
                    f.to_hex(),
                    f.to_decimal(),
                    classify(f)
                );
            }
            Outcome::Success
        }
        Command::Classify { function } => {
            let class = classify(&ctx.function(&function)?);
            text += &format!("{class}\n");
            if class == FunctionClass::NotAdmissible {
                Outcome::Failed
            } else {
                Outcome::Success
            }
        }
        Command::Parity { function } => {
            let pf = to_parity_form(&ctx.function(&function)?)?;
            text += &format!("{pf} f={}\n", pf.expression());
            Outcome::Success
        }
        Command::Simulate {
            function,
            state,
            vector,
        } => {
            let input: BasisKet = state.parse()?;
            let f = ctx.function_for(&function, &input)?;
            if vector {
                text += &format!("{}\n", pipeline::run_vector(&f, &input)?);
            }
            let result = pipeline::run_with_tolerance(&f, &input, ctx.tolerance)?;
            text += &format!("{}\n", result.output);
            if result.ancilla_ok {
                Outcome::Success
            } else {
                Outcome::Failed
            }
        }
        Command::Predict { function, state } => {
            let input: BasisKet = state.parse()?;
            let f = ctx.function_for(&function, &input)?;
            text += &format!("{}\n", pipeline::predict(&f, &input)?.output);
            Outcome::Success
        }
        Command::Solve { input, output } => {
            let input: BasisKet = input.parse()?;
            let output: BasisKet = output.parse()?;
            ctx.check_qubits(input.qubits())?;
            text += &format!("{}\n", pipeline::solve_function(&input, &output)?.to_hex());
            Outcome::Success
        }
        Command::Chart { n, negatives } => {
            ctx.check_qubits(n + 1)?;
            text += &build_chart(n)?.with_negatives(negatives).render(ctx.format);
            Outcome::Success
        }
        Command::Catalog { n } => {
            ctx.check_qubits(n + 1)?;
            text += &build_catalog(n)?.render(ctx.format);
            Outcome::Success
        }
        Command::Equiv { function } => {
            let f = ctx.function(&function)?;
            let full = pipeline_circuit(&f)?;
            let short = compile_equivalent(&f)?;
            let same = assert_equivalent_on(&full, &short, InputDomain::AncillaSet)?;
            text += &format!("# pipeline\n{full}# equivalent\n{short}equivalent={same}\n");
            if same {
                Outcome::Success
            } else {
                Outcome::Failed
            }
        }
        Command::Verify { n } => {
            ctx.check_qubits(n + 1)?;
            let report = pipeline::verify_all(n)?;
            text += &report.to_string();
            if report.is_pass() {
                Outcome::Success
            } else {
                Outcome::Failed
            }
        }
        Command::Fault {
            function,
            state,
            fault,
        } => {
            let input: BasisKet = state.parse()?;
            let f = ctx.function_for(&function, &input)?;
            let fault = match fault.as_str() {
                "none" => None,
                spec => Some(spec.parse::<FaultSpec>()?),
            };
            let p = pipeline::success_probability(&f, &input, fault.as_ref())?;
            text += &format!("{p:.12}\n");
            Outcome::Success
        }
        Command::Factor { vector } => {
            let v: StateVector = vector.parse()?;
            for pair in factor_product_state(&v)? {
                text += &format!("{}\n", StateVector::new(pair.to_vec())?);
            }
            Outcome::Success
        }
        Command::Matrix { function } => {
            let f = ctx.function(&function)?;
            text += &QuantumOracle::new(f).matrix()?.to_string();
            Outcome::Success
        }
        Command::Shift { x, y, function } => {
            let x: BitString = x.parse()?;
            let y: BitString = y.parse()?;
            let delta = boolfunc::delta_between(&x, &y)?;
            text += &format!("delta={delta}\n");
            if let Some(function) = function {
                let f = boolfunc::hex_decode(&function, delta.width())?;
                let invariant = boolfunc::is_invariant_under(&f, &delta)?;
                text += &format!("invariant={invariant}\n");
            }
            Outcome::Success
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Error::InvalidState(format!("cannot write output: {e}")))?;
    Ok(outcome)
}
