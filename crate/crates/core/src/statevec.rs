//! Real-amplitude state vectors on a handful of qubits.
//!
//! Every gate used here (Hadamard, X, CNOT, the function oracle and real
//! rotations) has real entries, so amplitudes are stored as `f64` rather than
//! complex numbers. Qubit 0 is the leftmost label of a ket and the most
//! significant bit of the amplitude index.

use std::fmt;
use std::str::FromStr;

use crate::bits::{BitString, Sign};
use crate::error::{Error, Result};

/// Largest qubit count for a materialized state vector.
pub const MAX_QUBITS: usize = 20;

/// Default tolerance for basis-state detection and equality checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

const NORM_TOLERANCE: f64 = 1e-9;

/// A signed computational basis state `±|b1..bk⟩`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BasisKet {
    pub sign: Sign,
    pub bits: BitString,
}

impl BasisKet {
    pub fn new(sign: Sign, bits: BitString) -> Self {
        BasisKet { sign, bits }
    }

    pub fn positive(bits: BitString) -> Self {
        Self::new(Sign::Plus, bits)
    }

    pub fn qubits(&self) -> usize {
        self.bits.width()
    }

    pub fn index(&self) -> usize {
        self.bits.value() as usize
    }

    pub fn negated(&self) -> Self {
        BasisKet {
            sign: -self.sign,
            ..*self
        }
    }
}

impl fmt::Display for BasisKet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign.symbol(), self.bits)
    }
}

/// Parses `+10001`, `-00101`, or an unsigned bit string (taken as positive).
/// Commas and a surrounding `|…⟩` or `|…>` are ignored.
impl FromStr for BasisKet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (sign, rest) = if let Some(r) = t.strip_prefix('-') {
            (Sign::Minus, r)
        } else if let Some(r) = t.strip_prefix('+') {
            (Sign::Plus, r)
        } else {
            (Sign::Plus, t)
        };
        let rest = rest.trim();
        let rest = rest.strip_prefix('|').unwrap_or(rest);
        let rest = rest
            .strip_suffix('⟩')
            .or_else(|| rest.strip_suffix('>'))
            .unwrap_or(rest);
        let bits = rest
            .parse::<BitString>()
            .map_err(|_| Error::malformed(s, "expected a signed bit string such as +101"))?;
        Ok(BasisKet { sign, bits })
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct StateVector {
    qubits: usize,
    amps: Vec<f64>,
}

impl StateVector {
    /// Checked constructor: length must be `2^k` and the norm 1.
    pub fn new(amps: Vec<f64>) -> Result<Self> {
        let qubits = qubits_for_len(amps.len())?;
        let norm: f64 = amps.iter().map(|a| a * a).sum();
        if !norm.is_finite() || (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::InvalidState(format!(
                "squared amplitudes sum to {norm}, expected 1"
            )));
        }
        Ok(StateVector { qubits, amps })
    }

    pub fn basis(ket: &BasisKet) -> Result<Self> {
        check_qubits(ket.qubits())?;
        let mut amps = vec![0.0; 1 << ket.qubits()];
        amps[ket.index()] = ket.sign.as_f64();
        Ok(StateVector {
            qubits: ket.qubits(),
            amps,
        })
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amps
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a * a).sum()
    }

    pub fn inner(&self, other: &StateVector) -> Result<f64> {
        self.same_size(other)?;
        Ok(self.amps.iter().zip(&other.amps).map(|(a, b)| a * b).sum())
    }

    pub fn max_abs_diff(&self, other: &StateVector) -> Result<f64> {
        self.same_size(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    pub fn approx_eq(&self, other: &StateVector, tolerance: f64) -> bool {
        self.max_abs_diff(other).is_ok_and(|d| d <= tolerance)
    }

    pub(crate) fn same_size(&self, other: &StateVector) -> Result<()> {
        if self.qubits != other.qubits {
            return Err(Error::LengthMismatch {
                expected: self.qubits,
                got: other.qubits,
            });
        }
        Ok(())
    }

    pub(crate) fn amps_mut(&mut self) -> &mut [f64] {
        &mut self.amps
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q >= self.qubits {
            return Err(Error::OutOfBounds {
                what: "qubit index",
                value: q,
                min: 0,
                max: self.qubits - 1,
            });
        }
        Ok(())
    }

    /// Stride of qubit `q` in the amplitude index.
    fn stride(&self, q: usize) -> usize {
        1 << (self.qubits - 1 - q)
    }

    pub fn negate(&mut self) {
        self.amps.iter_mut().for_each(|a| *a = -*a);
    }

    pub fn scale_by(&mut self, sign: Sign) {
        if sign.is_negative() {
            self.negate();
        }
    }

    /// Applies a 2x2 real matrix `[[a, b], [c, d]]` to qubit `q`.
    pub fn apply_single(&mut self, q: usize, m: [[f64; 2]; 2]) -> Result<()> {
        self.check_qubit(q)?;
        let stride = self.stride(q);
        for base in (0..self.amps.len()).step_by(2 * stride) {
            for i in base..base + stride {
                let (lo, hi) = (self.amps[i], self.amps[i + stride]);
                self.amps[i] = m[0][0] * lo + m[0][1] * hi;
                self.amps[i + stride] = m[1][0] * lo + m[1][1] * hi;
            }
        }
        Ok(())
    }

    pub fn apply_h(&mut self, q: usize) -> Result<()> {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        self.apply_single(q, [[s, s], [s, -s]])
    }

    pub fn apply_x(&mut self, q: usize) -> Result<()> {
        self.check_qubit(q)?;
        let stride = self.stride(q);
        for base in (0..self.amps.len()).step_by(2 * stride) {
            for i in base..base + stride {
                self.amps.swap(i, i + stride);
            }
        }
        Ok(())
    }

    /// Real rotation `[[cos, -sin], [sin, cos]]` on qubit `q`.
    pub fn apply_rotation(&mut self, q: usize, angle: f64) -> Result<()> {
        let (s, c) = angle.sin_cos();
        self.apply_single(q, [[c, -s], [s, c]])
    }

    pub fn apply_cnot(&mut self, control: usize, target: usize) -> Result<()> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(Error::InvalidGate(format!(
                "CNOT control and target are both {control}"
            )));
        }
        let c = self.stride(control);
        let t = self.stride(target);
        for i in 0..self.amps.len() {
            if i & c != 0 && i & t == 0 {
                self.amps.swap(i, i | t);
            }
        }
        Ok(())
    }

    /// Hadamard on every qubit via the in-place fast Walsh-Hadamard transform.
    pub fn apply_hadamard_all(&mut self) {
        self.apply_walsh_unscaled();
        let scale = (self.amps.len() as f64).sqrt().recip();
        self.amps.iter_mut().for_each(|a| *a *= scale);
    }

    /// Walsh-Hadamard butterflies without the `1/√(2^k)` factor.
    pub(crate) fn apply_walsh_unscaled(&mut self) {
        let len = self.amps.len();
        let mut half = 1;
        while half < len {
            for base in (0..len).step_by(2 * half) {
                for i in base..base + half {
                    let (a, b) = (self.amps[i], self.amps[i + half]);
                    self.amps[i] = a + b;
                    self.amps[i + half] = a - b;
                }
            }
            half *= 2;
        }
    }

    pub(crate) fn apply_h_unscaled(&mut self, q: usize) -> Result<()> {
        self.apply_single(q, [[1.0, 1.0], [1.0, -1.0]])
    }

    pub(crate) fn scale(&mut self, factor: f64) {
        self.amps.iter_mut().for_each(|a| *a *= factor);
    }
}

impl std::ops::Neg for StateVector {
    type Output = StateVector;

    fn neg(mut self) -> StateVector {
        self.negate();
        self
    }
}

/// Prints `(1 -1 1 -1)/√4` when every nonzero amplitude has the same
/// magnitude `1/√d` for a power of two `d`, and plain decimals otherwise.
impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const EPS: f64 = 1e-12;
        let max = self.amps.iter().fold(0.0f64, |m, a| m.max(a.abs()));
        let uniform = max > EPS
            && self
                .amps
                .iter()
                .all(|a| a.abs() < EPS || (a.abs() - max).abs() < EPS);
        let d = (1.0 / (max * max)).round();
        if uniform && (d * max * max - 1.0).abs() < 1e-9 && (d as u64).is_power_of_two() {
            let cells: Vec<&str> = self
                .amps
                .iter()
                .map(|a| {
                    if a.abs() < EPS {
                        "0"
                    } else if *a > 0.0 {
                        "1"
                    } else {
                        "-1"
                    }
                })
                .collect();
            write!(f, "({})", cells.join(" "))?;
            if d as u64 > 1 {
                write!(f, "/√{}", d as u64)?;
            }
            return Ok(());
        }
        let cells: Vec<String> = self
            .amps
            .iter()
            .map(|a| {
                let a = if a.abs() < EPS { 0.0 } else { *a };
                format!("{a}")
            })
            .collect();
        write!(f, "({})", cells.join(" "))
    }
}

/// Parses the display form: numbers in parentheses separated by spaces or
/// commas, optionally followed by `/√d` or `/sqrt(d)`.
impl FromStr for StateVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (body, divisor) = match t.rfind('/') {
            Some(pos) => {
                let den = t[pos + 1..].trim();
                let den = den
                    .strip_prefix('√')
                    .or_else(|| den.strip_prefix("sqrt"))
                    .ok_or_else(|| Error::malformed(s, "divisor must be √d or sqrt(d)"))?;
                let den = den.trim().trim_start_matches('(').trim_end_matches(')');
                let d: f64 = den
                    .trim()
                    .parse()
                    .map_err(|_| Error::malformed(s, "bad divisor"))?;
                if d.is_nan() || d <= 0.0 {
                    return Err(Error::malformed(s, "divisor must be positive"));
                }
                (&t[..pos], d.sqrt())
            }
            None => (t, 1.0),
        };
        let body = body.trim();
        let body = body
            .strip_prefix('(')
            .or_else(|| body.strip_prefix('['))
            .unwrap_or(body);
        let body = body
            .strip_suffix(')')
            .or_else(|| body.strip_suffix(']'))
            .unwrap_or(body);
        let amps = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<f64>()
                    .map(|v| v / divisor)
                    .map_err(|_| Error::malformed(s, format!("bad amplitude {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        StateVector::new(amps)
    }
}

fn qubits_for_len(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::InvalidState(format!(
            "{len} amplitudes is not a power of two >= 2"
        )));
    }
    let k = len.trailing_zeros() as usize;
    check_qubits(k)?;
    Ok(k)
}

pub(crate) fn check_qubits(k: usize) -> Result<()> {
    if !(1..=MAX_QUBITS).contains(&k) {
        return Err(Error::SizeCap {
            qubits: k,
            max: MAX_QUBITS,
        });
    }
    Ok(())
}

pub fn ket_to_vector(ket: &BasisKet) -> Result<StateVector> {
    StateVector::basis(ket)
}

/// Recovers `±|b⟩` when one amplitude is ±1 and the rest vanish, within
/// `tolerance`.
pub fn vector_to_ket(v: &StateVector, tolerance: f64) -> Result<BasisKet> {
    let mut found = None;
    for (i, &a) in v.amps.iter().enumerate() {
        if (a.abs() - 1.0).abs() <= tolerance {
            if found.is_some() {
                return Err(Error::NotBasisState);
            }
            found = Some((i, a));
        } else if a.abs() > tolerance {
            return Err(Error::NotBasisState);
        }
    }
    let (index, amp) = found.ok_or(Error::NotBasisState)?;
    Ok(BasisKet {
        sign: Sign::from_negative(amp < 0.0),
        bits: BitString::new(v.qubits, index as u64)?,
    })
}

pub fn hadamard_all(v: &StateVector) -> StateVector {
    let mut out = v.clone();
    out.apply_hadamard_all();
    out
}

pub fn kron(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| x * y))
        .collect()
}

/// Splits a product state into one normalized amplitude pair per qubit.
///
/// Qubit 0 carries the overall sign; every later factor has a positive
/// leading amplitude. The Kronecker product of the factors is compared with
/// the input and `Entangled` is returned when they differ by more than 1e-9.
pub fn factor_product_state(v: &StateVector) -> Result<Vec<[f64; 2]>> {
    const TOL: f64 = 1e-9;
    let mut factors = Vec::with_capacity(v.qubits);
    let mut rest = v.amps.clone();
    while rest.len() > 1 {
        let (lo, hi) = rest.split_at(rest.len() / 2);
        let norm = |x: &[f64]| x.iter().map(|a| a * a).sum::<f64>().sqrt();
        let pick = if norm(lo) >= norm(hi) { lo } else { hi };
        let pick_norm = norm(pick);
        if pick_norm < TOL {
            return Err(Error::Entangled);
        }
        let lead = pick.iter().find(|a| a.abs() > TOL).copied().unwrap_or(1.0);
        let scale = pick_norm.copysign(lead);
        let w: Vec<f64> = pick.iter().map(|a| a / scale).collect();
        let dot = |x: &[f64]| x.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>();
        factors.push([dot(lo), dot(hi)]);
        rest = w;
    }
    let rebuilt = factors
        .iter()
        .fold(vec![1.0], |acc, f| kron(&acc, f.as_slice()));
    let max_err = rebuilt
        .iter()
        .zip(&v.amps)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    if max_err > TOL {
        return Err(Error::Entangled);
    }
    Ok(factors)
}
