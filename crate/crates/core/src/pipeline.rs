//! The Hadamard / oracle / Hadamard pipeline, its analytic predictor, the
//! inverse problem (which function maps `x` to `y`), and fault injection.
//!
//! Inputs are signed basis kets `±|x, 1⟩` on `n + 1` qubits. For an
//! admissible `f = c ^ parity(x & m)` the pipeline returns
//! `(-1)^c · sign · |x ^ m, 1⟩` exactly; [`run`] gets there by simulation and
//! [`predict`] by reading the parity form.

use std::fmt;
use std::str::FromStr;

use crate::bits::{BitString, Sign};
use crate::boolfunc::{self, generate_functions, to_parity_form, ParityForm, TruthTable};
use crate::error::{Error, Result};
use crate::oracle::QuantumOracle;
use crate::statevec::{ket_to_vector, vector_to_ket, BasisKet, StateVector, DEFAULT_TOLERANCE};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PipelineResult {
    pub output: BasisKet,
    /// The ancilla (last qubit) came back as 1.
    pub ancilla_ok: bool,
}

impl PipelineResult {
    fn from_output(output: BasisKet) -> Self {
        let ancilla_ok = output.bits.value() & 1 == 1;
        PipelineResult { output, ancilla_ok }
    }
}

impl fmt::Display for PipelineResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.output)
    }
}

fn check_input(f: &TruthTable, input: &BasisKet) -> Result<()> {
    if input.qubits() != f.n() + 1 {
        return Err(Error::LengthMismatch {
            expected: f.n() + 1,
            got: input.qubits(),
        });
    }
    if input.bits.value() & 1 == 0 {
        return Err(Error::InvalidState(format!(
            "input {input} must end in the ancilla bit 1"
        )));
    }
    Ok(())
}

/// Final state vector of the pipeline, before basis detection.
pub fn run_vector(f: &TruthTable, input: &BasisKet) -> Result<StateVector> {
    run_faulted(f, input, None)
}

pub fn run(f: &TruthTable, input: &BasisKet) -> Result<PipelineResult> {
    run_with_tolerance(f, input, DEFAULT_TOLERANCE)
}

pub fn run_with_tolerance(
    f: &TruthTable,
    input: &BasisKet,
    tolerance: f64,
) -> Result<PipelineResult> {
    let v = run_vector(f, input)?;
    Ok(PipelineResult::from_output(vector_to_ket(&v, tolerance)?))
}

/// Output predicted from the parity form, without simulation.
pub fn predict(f: &TruthTable, input: &BasisKet) -> Result<PipelineResult> {
    check_input(f, input)?;
    let form = to_parity_form(f)?;
    Ok(PipelineResult::from_output(predict_from_form(&form, input)))
}

fn predict_from_form(form: &ParityForm, input: &BasisKet) -> BasisKet {
    let shift = form.mask().push(false).expect("mask width below limit");
    BasisKet {
        sign: input.sign * Sign::from_negative(form.complement()),
        bits: input.bits ^ shift,
    }
}

/// The unique admissible function sending `input` to `desired`.
pub fn solve_function(input: &BasisKet, desired: &BasisKet) -> Result<TruthTable> {
    if input.qubits() != desired.qubits() {
        return Err(Error::LengthMismatch {
            expected: input.qubits(),
            got: desired.qubits(),
        });
    }
    for ket in [input, desired] {
        if ket.qubits() < 2 || ket.bits.value() & 1 == 0 {
            return Err(Error::InvalidState(format!(
                "{ket} must hold at least one data bit and end in the ancilla bit 1"
            )));
        }
    }
    let (x, _) = input.bits.split_last().expect("width checked");
    let (y, _) = desired.bits.split_last().expect("width checked");
    let form = ParityForm::new(x ^ y, input.sign != desired.sign)?;
    Ok(boolfunc::from_parity_form(&form))
}

/// One disagreement found by [`verify_all`].
#[derive(Clone, PartialEq, Debug)]
pub struct VerifyFailure {
    pub function: TruthTable,
    pub input: BasisKet,
    pub got: String,
    pub want: String,
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "f={} x={} got={} want={}",
            self.function.to_hex(),
            self.input,
            self.got,
            self.want
        )
    }
}

#[derive(Clone, PartialEq, Debug, Default)]
pub struct VerifyReport {
    pub total: usize,
    pub passed: usize,
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn is_pass(&self) -> bool {
        self.failures.is_empty() && self.passed == self.total
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for failure in &self.failures {
            writeln!(f, "{failure}")?;
        }
        if self.is_pass() {
            writeln!(f, "PASS {}/{}", self.passed, self.total)
        } else {
            writeln!(f, "FAIL {}/{}", self.passed, self.total)
        }
    }
}

/// Runs every admissible function on every signed input `±|x, 1⟩` and
/// compares simulation with prediction.
pub fn verify_all(n: usize) -> Result<VerifyReport> {
    let (pos, neg) = generate_functions(n)?;
    let mut report = VerifyReport::default();
    for f in pos.iter().chain(&neg) {
        for x in 0..1u64 << n {
            for sign in [Sign::Plus, Sign::Minus] {
                let input = BasisKet::new(sign, BitString::new(n + 1, (x << 1) | 1)?);
                report.total += 1;
                let simulated = run(f, &input);
                let predicted = predict(f, &input);
                match (simulated, predicted) {
                    (Ok(got), Ok(want)) if got == want && got.ancilla_ok => report.passed += 1,
                    (got, want) => report.failures.push(VerifyFailure {
                        function: f.clone(),
                        input,
                        got: describe(&got),
                        want: describe(&want),
                    }),
                }
            }
        }
    }
    Ok(report)
}

fn describe(r: &Result<PipelineResult>) -> String {
    match r {
        Ok(res) if res.ancilla_ok => res.output.to_string(),
        Ok(res) => format!("{}(ancilla lost)", res.output),
        Err(e) => e.name().to_string(),
    }
}

/// Which of the two Hadamard layers a fault is attached to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Layer {
    First,
    Second,
}

impl FromStr for Layer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "first" | "1" => Ok(Layer::First),
            "second" | "2" => Ok(Layer::Second),
            _ => Err(Error::InvalidFault(format!("unknown layer {s:?}"))),
        }
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Layer::First => "first",
            Layer::Second => "second",
        })
    }
}

/// A single injected defect.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum FaultSpec {
    /// The Hadamard on `qubit` in `layer` is missing.
    SkipHadamard { layer: Layer, qubit: usize },
    /// A real rotation by `angle` radians follows the Hadamard on `qubit`.
    RotateQubit {
        layer: Layer,
        qubit: usize,
        angle: f64,
    },
    /// The oracle computes `f` with entry `index` flipped.
    CorruptOracleEntry { index: usize },
}

impl FaultSpec {
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            FaultSpec::SkipHadamard { qubit, .. } | FaultSpec::RotateQubit { qubit, .. }
                if qubit > n =>
            {
                Err(Error::InvalidFault(format!(
                    "qubit {qubit} out of range for {} qubits",
                    n + 1
                )))
            }
            FaultSpec::RotateQubit { angle, .. } if !angle.is_finite() => {
                Err(Error::InvalidFault(format!("angle {angle} is not finite")))
            }
            FaultSpec::CorruptOracleEntry { index } if index >= 1 << n => Err(Error::InvalidFault(
                format!("entry {index} out of range for 2^{n} entries"),
            )),
            _ => Ok(()),
        }
    }
}

/// `skip-h:<layer>:<qubit>`, `rotate:<layer>:<qubit>:<radians>`,
/// `corrupt:<index>`.
impl FromStr for FaultSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let bad = || Error::InvalidFault(format!("cannot parse {s:?}"));
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            ["skip-h" | "skip", layer, qubit] => Ok(FaultSpec::SkipHadamard {
                layer: layer.parse()?,
                qubit: num(qubit)?,
            }),
            ["rotate", layer, qubit, angle] => Ok(FaultSpec::RotateQubit {
                layer: layer.parse()?,
                qubit: num(qubit)?,
                angle: angle.parse().map_err(|_| bad())?,
            }),
            ["corrupt", index] => Ok(FaultSpec::CorruptOracleEntry { index: num(index)? }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for FaultSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaultSpec::SkipHadamard { layer, qubit } => write!(f, "skip-h:{layer}:{qubit}"),
            FaultSpec::RotateQubit {
                layer,
                qubit,
                angle,
            } => write!(f, "rotate:{layer}:{qubit}:{angle}"),
            FaultSpec::CorruptOracleEntry { index } => write!(f, "corrupt:{index}"),
        }
    }
}

/// Final state of the pipeline with an optional fault injected.
pub fn run_faulted(
    f: &TruthTable,
    input: &BasisKet,
    fault: Option<&FaultSpec>,
) -> Result<StateVector> {
    check_input(f, input)?;
    if let Some(fault) = fault {
        fault.validate(f.n())?;
    }
    let function = match fault {
        Some(FaultSpec::CorruptOracleEntry { index }) => f.with_flipped(*index),
        _ => f.clone(),
    };
    let mut v = ket_to_vector(input)?;
    let mut hadamards = hadamard_layer(&mut v, Layer::First, fault)?;
    QuantumOracle::new(function).apply_in_place(&mut v)?;
    hadamards += hadamard_layer(&mut v, Layer::Second, fault)?;
    // one 1/√2 per Hadamard, applied once so full layers scale exactly
    let mut factor = 0.5f64.powi((hadamards / 2) as i32);
    if hadamards % 2 == 1 {
        factor *= std::f64::consts::FRAC_1_SQRT_2;
    }
    v.scale(factor);
    Ok(v)
}

/// Applies one unscaled Hadamard layer, returning how many Hadamards ran.
fn hadamard_layer(v: &mut StateVector, layer: Layer, fault: Option<&FaultSpec>) -> Result<usize> {
    match fault {
        Some(&FaultSpec::SkipHadamard { layer: l, qubit }) if l == layer => {
            for q in (0..v.qubits()).filter(|&q| q != qubit) {
                v.apply_h_unscaled(q)?;
            }
            Ok(v.qubits() - 1)
        }
        Some(&FaultSpec::RotateQubit {
            layer: l,
            qubit,
            angle,
        }) if l == layer => {
            v.apply_walsh_unscaled();
            v.apply_rotation(qubit, angle)?;
            Ok(v.qubits())
        }
        _ => {
            v.apply_walsh_unscaled();
            Ok(v.qubits())
        }
    }
}

/// Probability of observing the predicted basis state when `fault` (if any)
/// is present: the squared overlap of the faulted output with the prediction.
pub fn success_probability(
    f: &TruthTable,
    input: &BasisKet,
    fault: Option<&FaultSpec>,
) -> Result<f64> {
    let expected = predict(f, input)?;
    let v = run_faulted(f, input, fault)?;
    let amp = v.amplitudes()[expected.output.index()] * expected.output.sign.as_f64();
    Ok((amp * amp).clamp(0.0, 1.0))
}
