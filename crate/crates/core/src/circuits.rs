//! Gate-list circuits over H, X and CNOT with an explicit global sign.
//!
//! Used to build the CNOT realization of a parity oracle and to check
//! numerically that the Hadamard-sandwiched oracle collapses to a layer of X
//! gates (times `-1` for negative functions).

use std::fmt;
use std::str::FromStr;

use crate::bits::{BitString, Sign};
use crate::boolfunc::{to_parity_form, TruthTable};
use crate::error::{Error, Result};
use crate::oracle::MAX_MATRIX_QUBITS;
use crate::statevec::{ket_to_vector, BasisKet, StateVector, DEFAULT_TOLERANCE, MAX_QUBITS};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gate {
    H(usize),
    X(usize),
    Cnot { control: usize, target: usize },
}

impl Gate {
    fn max_wire(&self) -> usize {
        match *self {
            Gate::H(q) | Gate::X(q) => q,
            Gate::Cnot { control, target } => control.max(target),
        }
    }

    fn apply(&self, v: &mut StateVector) -> Result<()> {
        match *self {
            Gate::H(q) => v.apply_h(q),
            Gate::X(q) => v.apply_x(q),
            Gate::Cnot { control, target } => v.apply_cnot(control, target),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(q) => write!(f, "H {q}"),
            Gate::X(q) => write!(f, "X {q}"),
            Gate::Cnot { control, target } => write!(f, "CNOT {control} {target}"),
        }
    }
}

impl FromStr for Gate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        let wire = |p: &str| {
            p.parse::<usize>()
                .map_err(|_| Error::InvalidGate(format!("bad wire {p:?} in {s:?}")))
        };
        match parts.as_slice() {
            [op, q] if op.eq_ignore_ascii_case("h") => Ok(Gate::H(wire(q)?)),
            [op, q] if op.eq_ignore_ascii_case("x") => Ok(Gate::X(wire(q)?)),
            [op, c, t] if op.eq_ignore_ascii_case("cnot") => Ok(Gate::Cnot {
                control: wire(c)?,
                target: wire(t)?,
            }),
            _ => Err(Error::InvalidGate(format!("cannot parse {s:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Circuit {
    wires: usize,
    gates: Vec<Gate>,
    global_sign: Sign,
}

impl Circuit {
    pub fn new(wires: usize) -> Result<Self> {
        if wires == 0 || wires > MAX_QUBITS {
            return Err(Error::OutOfBounds {
                what: "wire count",
                value: wires,
                min: 1,
                max: MAX_QUBITS,
            });
        }
        Ok(Circuit {
            wires,
            gates: Vec::new(),
            global_sign: Sign::Plus,
        })
    }

    pub fn wires(&self) -> usize {
        self.wires
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn global_sign(&self) -> Sign {
        self.global_sign
    }

    pub fn set_global_sign(&mut self, sign: Sign) {
        self.global_sign = sign;
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        if gate.max_wire() >= self.wires {
            return Err(Error::InvalidGate(format!(
                "{gate} touches a wire outside 0..{}",
                self.wires
            )));
        }
        if let Gate::Cnot { control, target } = gate {
            if control == target {
                return Err(Error::InvalidGate(format!("{gate}: control equals target")));
            }
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn with(mut self, gate: Gate) -> Result<Self> {
        self.push(gate)?;
        Ok(self)
    }

    /// Appends a Hadamard on every wire.
    pub fn push_hadamard_layer(&mut self) {
        for q in 0..self.wires {
            self.gates.push(Gate::H(q));
        }
    }

    /// `self` followed by `other`; signs multiply.
    pub fn then(&self, other: &Circuit) -> Result<Circuit> {
        if self.wires != other.wires {
            return Err(Error::LengthMismatch {
                expected: self.wires,
                got: other.wires,
            });
        }
        let mut out = self.clone();
        out.gates.extend_from_slice(&other.gates);
        out.global_sign = self.global_sign * other.global_sign;
        Ok(out)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "wires={} sign={}", self.wires, self.global_sign)?;
        for gate in &self.gates {
            writeln!(f, "{gate}")?;
        }
        Ok(())
    }
}

impl FromStr for Circuit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::malformed(s, "missing header"))?;
        let mut wires = None;
        let mut sign = Sign::Plus;
        for field in header.split_whitespace() {
            match field.split_once('=') {
                Some(("wires", w)) => {
                    wires = Some(
                        w.parse::<usize>()
                            .map_err(|_| Error::malformed(header, "bad wire count"))?,
                    )
                }
                Some(("sign", "+1")) => sign = Sign::Plus,
                Some(("sign", "-1")) => sign = Sign::Minus,
                _ => return Err(Error::malformed(header, format!("unknown field {field:?}"))),
            }
        }
        let mut circuit =
            Circuit::new(wires.ok_or_else(|| Error::malformed(header, "missing wires="))?)?;
        circuit.global_sign = sign;
        for line in lines {
            circuit.push(line.parse()?)?;
        }
        Ok(circuit)
    }
}

/// CNOT from every masked variable into the ancilla (wire `n`), plus an X on
/// the ancilla for complemented functions.
pub fn oracle_as_cnots(f: &TruthTable) -> Result<Circuit> {
    let form = to_parity_form(f)?;
    let n = f.n();
    let mut c = Circuit::new(n + 1)?;
    for i in (0..n).filter(|&i| form.mask().get(i)) {
        c.push(Gate::Cnot {
            control: i,
            target: n,
        })?;
    }
    if form.complement() {
        c.push(Gate::X(n))?;
    }
    Ok(c)
}

/// Hadamard layer, CNOT oracle, Hadamard layer.
pub fn pipeline_circuit(f: &TruthTable) -> Result<Circuit> {
    let oracle = oracle_as_cnots(f)?;
    let mut c = Circuit::new(oracle.wires())?;
    c.push_hadamard_layer();
    let mut c = c.then(&oracle)?;
    c.push_hadamard_layer();
    Ok(c)
}

/// Hadamard-free equivalent of the pipeline: X on each masked data qubit and
/// a global sign of `(-1)^complement`. Matches the pipeline on inputs whose
/// ancilla is 1.
pub fn compile_equivalent(f: &TruthTable) -> Result<Circuit> {
    let form = to_parity_form(f)?;
    let mut c = Circuit::new(f.n() + 1)?;
    for i in (0..f.n()).filter(|&i| form.mask().get(i)) {
        c.push(Gate::X(i))?;
    }
    c.global_sign = Sign::from_negative(form.complement());
    Ok(c)
}

pub fn simulate_circuit(circ: &Circuit, input: &BasisKet) -> Result<StateVector> {
    if input.qubits() != circ.wires {
        return Err(Error::LengthMismatch {
            expected: circ.wires,
            got: input.qubits(),
        });
    }
    simulate_on_vector(circ, ket_to_vector(input)?)
}

pub fn simulate_on_vector(circ: &Circuit, mut v: StateVector) -> Result<StateVector> {
    if v.qubits() != circ.wires {
        return Err(Error::LengthMismatch {
            expected: circ.wires,
            got: v.qubits(),
        });
    }
    for gate in &circ.gates {
        gate.apply(&mut v)?;
    }
    v.scale_by(circ.global_sign);
    Ok(v)
}

/// Basis inputs over which two circuits are compared.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InputDomain {
    /// Every computational basis state.
    All,
    /// Basis states whose last (ancilla) qubit is 1.
    AncillaSet,
}

/// True iff both circuits give the same vector (within 1e-9) on every
/// computational basis input.
pub fn assert_equivalent(a: &Circuit, b: &Circuit) -> Result<bool> {
    assert_equivalent_on(a, b, InputDomain::All)
}

pub fn assert_equivalent_on(a: &Circuit, b: &Circuit, domain: InputDomain) -> Result<bool> {
    if a.wires != b.wires {
        return Err(Error::LengthMismatch {
            expected: a.wires,
            got: b.wires,
        });
    }
    if a.wires > MAX_MATRIX_QUBITS {
        return Err(Error::SizeCap {
            qubits: a.wires,
            max: MAX_MATRIX_QUBITS,
        });
    }
    for index in 0..1u64 << a.wires {
        if domain == InputDomain::AncillaSet && index & 1 == 0 {
            continue;
        }
        let input = BasisKet::positive(BitString::new(a.wires, index)?);
        let va = simulate_circuit(a, &input)?;
        let vb = simulate_circuit(b, &input)?;
        if !va.approx_eq(&vb, DEFAULT_TOLERANCE) {
            return Ok(false);
        }
    }
    Ok(true)
}
