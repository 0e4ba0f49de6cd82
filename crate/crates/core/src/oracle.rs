//! The function oracle `U_f |x, k⟩ = |x, k ^ f(x)⟩` on `n + 1` qubits.
//!
//! The ancilla is the last (least significant) qubit, so the oracle swaps the
//! amplitude pair `(2t, 2t + 1)` for every truth-table index `t` with
//! `f(t) = 1`.

use std::fmt;

use crate::boolfunc::TruthTable;
use crate::error::{Error, Result};
use crate::statevec::StateVector;

/// Largest total qubit count for which [`QuantumOracle::matrix`] materializes.
pub const MAX_MATRIX_QUBITS: usize = 12;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuantumOracle {
    function: TruthTable,
}

impl QuantumOracle {
    pub fn new(function: TruthTable) -> Self {
        QuantumOracle { function }
    }

    pub fn function(&self) -> &TruthTable {
        &self.function
    }

    pub fn qubits(&self) -> usize {
        self.function.n() + 1
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        let mut out = v.clone();
        self.apply_in_place(&mut out)?;
        Ok(out)
    }

    /// Swaps amplitude pairs in the caller's buffer.
    pub fn apply_in_place(&self, v: &mut StateVector) -> Result<()> {
        if v.qubits() != self.qubits() {
            return Err(Error::LengthMismatch {
                expected: self.qubits(),
                got: v.qubits(),
            });
        }
        let amps = v.amps_mut();
        for (t, _) in self.function.bits().iter().enumerate().filter(|(_, &b)| b) {
            amps.swap(2 * t, 2 * t + 1);
        }
        Ok(())
    }

    /// Image of basis index `i` under the oracle permutation.
    pub fn permute_index(&self, i: usize) -> usize {
        if self.function.get(i >> 1) {
            i ^ 1
        } else {
            i
        }
    }

    pub fn matrix(&self) -> Result<BinaryMatrix> {
        if self.qubits() > MAX_MATRIX_QUBITS {
            return Err(Error::SizeCap {
                qubits: self.qubits(),
                max: MAX_MATRIX_QUBITS,
            });
        }
        let dim = 1 << self.qubits();
        let mut m = BinaryMatrix::zeros(dim);
        for col in 0..dim {
            m.set(self.permute_index(col), col, true);
        }
        Ok(m)
    }

    pub fn is_involution(&self) -> bool {
        (0..1usize << self.qubits()).all(|i| self.permute_index(self.permute_index(i)) == i)
    }
}

/// Square 0/1 matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryMatrix {
    dim: usize,
    entries: Vec<bool>,
}

impl BinaryMatrix {
    pub fn zeros(dim: usize) -> Self {
        BinaryMatrix {
            dim,
            entries: vec![false; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, true);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn row(&self, row: usize) -> &[bool] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok((0..self.dim)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(&e, _)| e)
                    .map(|(_, x)| x)
                    .sum()
            })
            .collect())
    }

    /// True when every row and every column holds exactly one 1.
    pub fn is_permutation(&self) -> bool {
        let rows_ok = (0..self.dim).all(|r| self.row(r).iter().filter(|&&e| e).count() == 1);
        let cols_ok = (0..self.dim).all(|c| (0..self.dim).filter(|&r| self.get(r, c)).count() == 1);
        rows_ok && cols_ok
    }
}

/// Rows of space-separated 0/1 digits.
impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let line: Vec<&str> = self
                .row(r)
                .iter()
                .map(|&e| if e { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statevec::{hadamard_all, ket_to_vector};

    fn oracle(s: &str) -> QuantumOracle {
        QuantumOracle::new(TruthTable::from_binary(s).unwrap())
    }

    fn first_layer() -> StateVector {
        hadamard_all(&ket_to_vector(&"+001".parse().unwrap()).unwrap())
    }

    fn signs(v: &StateVector) -> Vec<i32> {
        let scale = (v.len() as f64).sqrt();
        v.amplitudes()
            .iter()
            .map(|a| (a * scale).round() as i32)
            .collect()
    }

    #[test]
    fn apply_examples() {
        let v = first_layer();
        assert_eq!(
            signs(&oracle("0011").apply(&v).unwrap()),
            [1, -1, 1, -1, -1, 1, -1, 1]
        );
        assert_eq!(
            signs(&oracle("0110").apply(&v).unwrap()),
            [1, -1, -1, 1, -1, 1, 1, -1]
        );
        assert_eq!(oracle("0000").apply(&v).unwrap(), v);
    }

    #[test]
    fn apply_rejects_wrong_dimension() {
        let v = ket_to_vector(&"+01".parse().unwrap()).unwrap();
        assert!(matches!(
            oracle("0110").apply(&v),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(oracle("0000").matrix().unwrap(), BinaryMatrix::identity(8));

        let and = oracle("0001").matrix().unwrap();
        let mut want = BinaryMatrix::identity(8);
        want.set(6, 6, false);
        want.set(7, 7, false);
        want.set(6, 7, true);
        want.set(7, 6, true);
        assert_eq!(and, want);

        let ones = oracle("1111").matrix().unwrap();
        for r in 0..8 {
            for c in 0..8 {
                assert_eq!(ones.get(r, c), c == r ^ 1);
            }
        }
    }

    #[test]
    fn matrix_display() {
        let m = oracle("01").matrix().unwrap();
        assert_eq!(m.to_string(), "1 0 0 0\n0 1 0 0\n0 0 0 1\n0 0 1 0\n");
    }

    #[test]
    fn matrix_size_cap() {
        let big = QuantumOracle::new(TruthTable::zero(12).unwrap());
        assert!(matches!(big.matrix(), Err(Error::SizeCap { .. })));
        let ok = QuantumOracle::new(TruthTable::zero(11).unwrap());
        assert_eq!(ok.matrix().unwrap().dim(), 4096);
    }

    #[test]
    fn involution_examples() {
        assert!(oracle("0110").is_involution());
        assert!(oracle("0001").is_involution());
        assert!(oracle("11111111").is_involution());
    }
}
