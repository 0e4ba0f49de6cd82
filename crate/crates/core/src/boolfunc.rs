//! Boolean functions as truth tables, and the symmetric/antisymmetric family.
//!
//! A truth table on `n` variables is a sequence of `2^n` bits. The bit at index
//! `i` is `f(x1..xn)` where `x1` is the most significant bit of `i`, so for
//! `n = 2` the entries are listed for inputs `00, 01, 10, 11`.
//!
//! A table is *admissible* when it equals its own reversal (symmetric) or the
//! complement of its reversal (antisymmetric), and both halves are admissible
//! again, down to pairs. Admissible tables are exactly the affine parity
//! functions `c ^ parity(x & m)`, captured by [`ParityForm`].

use std::fmt;

use num_bigint::BigUint;

use crate::bits::BitString;
use crate::error::{Error, Result};

/// Largest variable count accepted for truth tables.
pub const MAX_VARS: usize = 20;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    n: usize,
    bits: Vec<bool>,
}

impl TruthTable {
    pub fn new(n: usize, bits: Vec<bool>) -> Result<Self> {
        check_vars(n)?;
        if bits.len() != 1 << n {
            return Err(Error::LengthMismatch {
                expected: 1 << n,
                got: bits.len(),
            });
        }
        Ok(TruthTable { n, bits })
    }

    pub fn from_fn(n: usize, f: impl Fn(u64) -> bool) -> Result<Self> {
        check_vars(n)?;
        Ok(TruthTable {
            n,
            bits: (0..1u64 << n).map(f).collect(),
        })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| false)
    }

    /// Parses a plain binary string such as `"0110"`; `n` is inferred.
    pub fn from_binary(s: &str) -> Result<Self> {
        let bits = parse_binary(s)?;
        let n = log2_exact(bits.len())
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::malformed(s, "length must be a power of two >= 2"))?;
        Self::new(n, bits)
    }

    /// Truth table of a numeric value, most significant bit first.
    pub fn from_value(n: usize, value: u64) -> Result<Self> {
        check_vars(n)?;
        let len = 1usize << n;
        if len < 64 && value >> len != 0 {
            return Err(Error::LengthMismatch {
                expected: len,
                got: 64 - value.leading_zeros() as usize,
            });
        }
        if len > 64 {
            return Self::new(n, {
                let mut bits = vec![false; len - 64];
                bits.extend((0..64).rev().map(|s| (value >> s) & 1 == 1));
                bits
            });
        }
        Self::from_fn(n, |i| (value >> (len as u64 - 1 - i)) & 1 == 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, index: usize) -> bool {
        self.bits[index]
    }

    /// Value at the input `x` (an `n`-bit string).
    pub fn eval(&self, x: &BitString) -> Result<bool> {
        if x.width() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: x.width(),
            });
        }
        Ok(self.bits[x.value() as usize])
    }

    pub fn leading_bit(&self) -> bool {
        self.bits[0]
    }

    pub fn complement(&self) -> Self {
        TruthTable {
            n: self.n,
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn reversed(&self) -> Self {
        TruthTable {
            n: self.n,
            bits: self.bits.iter().rev().copied().collect(),
        }
    }

    /// Copy of this table with entry `index` flipped.
    pub fn with_flipped(&self, index: usize) -> Self {
        let mut bits = self.bits.clone();
        bits[index] = !bits[index];
        TruthTable { n: self.n, bits }
    }

    /// `self` followed by `other`: a table on one more variable whose first
    /// variable selects between the two.
    pub fn concat(&self, other: &TruthTable) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut bits = Vec::with_capacity(2 * self.bits.len());
        bits.extend_from_slice(&self.bits);
        bits.extend_from_slice(&other.bits);
        Self::new(self.n + 1, bits)
    }

    pub fn to_binary(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut bytes = Vec::with_capacity(self.bits.len().div_ceil(8));
        for chunk in self.bits.rchunks(8) {
            bytes.push(chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8));
        }
        BigUint::from_bytes_le(&bytes)
    }

    pub fn to_decimal(&self) -> String {
        self.to_biguint().to_string()
    }

    pub fn to_hex(&self) -> String {
        hex_encode(self)
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({})", self.to_binary())
    }
}

fn check_vars(n: usize) -> Result<()> {
    if !(1..=MAX_VARS).contains(&n) {
        return Err(Error::OutOfBounds {
            what: "variable count",
            value: n,
            min: 1,
            max: MAX_VARS,
        });
    }
    Ok(())
}

fn log2_exact(len: usize) -> Option<usize> {
    len.is_power_of_two().then(|| len.trailing_zeros() as usize)
}

fn parse_binary(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .filter(|c| !matches!(c, ',' | '_' | ' '))
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::malformed(s, format!("unexpected character {c:?}"))),
        })
        .collect()
}

/// Positive or negative member of the admissible family, or neither.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FunctionClass {
    Positive,
    Negative,
    NotAdmissible,
}

impl fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FunctionClass::Positive => "Positive",
            FunctionClass::Negative => "Negative",
            FunctionClass::NotAdmissible => "NotAdmissible",
        })
    }
}

/// `f(x) = complement ^ parity(x & mask)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ParityForm {
    mask: BitString,
    complement: bool,
}

impl ParityForm {
    pub fn new(mask: BitString, complement: bool) -> Result<Self> {
        check_vars(mask.width())?;
        Ok(ParityForm { mask, complement })
    }

    pub fn n(&self) -> usize {
        self.mask.width()
    }

    pub fn mask(&self) -> BitString {
        self.mask
    }

    pub fn complement(&self) -> bool {
        self.complement
    }

    pub fn eval_index(&self, index: u64) -> bool {
        self.complement ^ ((index & self.mask.value()).count_ones() % 2 == 1)
    }

    /// Shortcut for [`is_invariant_under`]: the shift leaves the function
    /// unchanged iff it flips an even number of the masked variables.
    pub fn is_invariant_under(&self, delta: &BitString) -> Result<bool> {
        if delta.width() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: delta.width(),
            });
        }
        Ok(!(self.mask & *delta).parity())
    }

    /// Human form such as `x1 ^ x3`, or `!(x2)` for complemented functions.
    pub fn expression(&self) -> String {
        let vars: Vec<String> = (0..self.n())
            .filter(|&i| self.mask.get(i))
            .map(|i| format!("x{}", i + 1))
            .collect();
        let body = if vars.is_empty() {
            "0".to_string()
        } else {
            vars.join(" ^ ")
        };
        if self.complement {
            if vars.is_empty() {
                "1".to_string()
            } else {
                format!("!({body})")
            }
        } else {
            body
        }
    }
}

impl fmt::Display for ParityForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mask={} complement={}", self.mask, self.complement as u8)
    }
}

/// Positive and negative admissible functions on `n` variables, built by
/// repeated self/mirror concatenation.
///
/// Level 1 is seeded with positives `(00), (01)` and negatives `(11), (10)`.
/// Each further level concatenates every function with itself and then with
/// its mirror image in the numerically ordered list of all functions of the
/// previous level. Positives keep their construction order; negatives from
/// level 2 on are sorted numerically.
pub fn generate_functions(n: usize) -> Result<(Vec<TruthTable>, Vec<TruthTable>)> {
    check_vars(n)?;
    let mut positives = vec![
        TruthTable::new(1, vec![false, false])?,
        TruthTable::new(1, vec![false, true])?,
    ];
    let mut negatives = vec![
        TruthTable::new(1, vec![true, true])?,
        TruthTable::new(1, vec![true, false])?,
    ];
    for _ in 1..n {
        let mut level: Vec<&TruthTable> = positives.iter().chain(&negatives).collect();
        level.sort();
        let mirror = |t: &TruthTable| {
            let i = level
                .binary_search(&t)
                .expect("function is in its own level");
            level[level.len() - 1 - i].clone()
        };
        let grow = |list: &[TruthTable]| -> Result<Vec<TruthTable>> {
            let mut out = Vec::with_capacity(2 * list.len());
            for t in list {
                out.push(t.concat(t)?);
                out.push(t.concat(&mirror(t))?);
            }
            Ok(out)
        };
        let next_pos = grow(&positives)?;
        let mut next_neg = grow(&negatives)?;
        next_neg.sort();
        positives = next_pos;
        negatives = next_neg;
    }
    Ok((positives, negatives))
}

/// Recursive symmetric-or-antisymmetric test down to pairs.
pub fn is_admissible(tt: &TruthTable) -> bool {
    fn check(bits: &[bool]) -> bool {
        if bits.len() <= 2 {
            return true;
        }
        let symmetric = bits.iter().eq(bits.iter().rev());
        let antisymmetric = bits.iter().zip(bits.iter().rev()).all(|(a, b)| a != b);
        if !(symmetric || antisymmetric) {
            return false;
        }
        let (lo, hi) = bits.split_at(bits.len() / 2);
        check(lo) && check(hi)
    }
    check(&tt.bits)
}

/// Reads the parity form off `f(0)` and the unit vectors, then checks it
/// against every entry.
pub fn to_parity_form(tt: &TruthTable) -> Result<ParityForm> {
    let n = tt.n;
    let complement = tt.bits[0];
    let mut mask = BitString::zeros(n)?;
    for i in 0..n {
        let unit = 1usize << (n - 1 - i);
        mask = mask.with(i, tt.bits[unit] ^ complement);
    }
    let form = ParityForm { mask, complement };
    let reproduces = tt
        .bits
        .iter()
        .enumerate()
        .all(|(i, &b)| form.eval_index(i as u64) == b);
    if !reproduces {
        return Err(Error::NotAdmissible(abbreviate(tt)));
    }
    Ok(form)
}

pub fn from_parity_form(pf: &ParityForm) -> TruthTable {
    TruthTable {
        n: pf.n(),
        bits: (0..1u64 << pf.n()).map(|i| pf.eval_index(i)).collect(),
    }
}

pub fn classify(tt: &TruthTable) -> FunctionClass {
    if !is_admissible(tt) {
        FunctionClass::NotAdmissible
    } else if tt.leading_bit() {
        FunctionClass::Negative
    } else {
        FunctionClass::Positive
    }
}

/// Uppercase hex, most significant entry first, padded to `ceil(2^n / 4)`
/// digits.
pub fn hex_encode(tt: &TruthTable) -> String {
    let digits = tt.bits.len().div_ceil(4);
    let pad = digits * 4 - tt.bits.len();
    let padded: Vec<bool> = std::iter::repeat_n(false, pad)
        .chain(tt.bits.iter().copied())
        .collect();
    padded
        .chunks(4)
        .map(|c| {
            let v = c.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
            char::from_digit(v, 16).unwrap().to_ascii_uppercase()
        })
        .collect()
}

/// Decodes `$3C3C`, `0x3c3c`, bare hex, or a bare binary string of length
/// `2^n`.
pub fn hex_decode(text: &str, n: usize) -> Result<TruthTable> {
    check_vars(n)?;
    let len = 1usize << n;
    let trimmed = text.trim();
    let (hex_body, forced_hex) = match strip_hex_prefix(trimmed) {
        Some(body) => (body, true),
        None => (trimmed, false),
    };
    if !forced_hex {
        let cleaned: String = trimmed.chars().filter(|c| *c != '_').collect();
        if cleaned.len() == len && cleaned.chars().all(|c| c == '0' || c == '1') {
            return TruthTable::new(n, parse_binary(&cleaned)?);
        }
    }
    let hex_body: String = hex_body.chars().filter(|c| *c != '_').collect();
    if hex_body.is_empty() {
        return Err(Error::malformed(text, "empty function"));
    }
    let mut bits = Vec::with_capacity(hex_body.len() * 4);
    for c in hex_body.chars() {
        let v = c
            .to_digit(16)
            .ok_or_else(|| Error::malformed(text, format!("unexpected character {c:?}")))?;
        bits.extend((0..4).rev().map(|s| (v >> s) & 1 == 1));
    }
    if bits.len() > len {
        let excess = bits.len() - len;
        if bits[..excess].iter().any(|&b| b) || hex_body.len() > len.div_ceil(4) {
            return Err(Error::LengthMismatch {
                expected: len,
                got: bits.len(),
            });
        }
        bits.drain(..excess);
    } else if bits.len() < len {
        let mut padded = vec![false; len - bits.len()];
        padded.extend(bits);
        bits = padded;
    }
    TruthTable::new(n, bits)
}

fn strip_hex_prefix(s: &str) -> Option<&str> {
    s.strip_prefix('$')
        .or_else(|| s.strip_prefix("0x"))
        .or_else(|| s.strip_prefix("0X"))
}

/// Parses a function argument when the variable count is not known from
/// context.
///
/// Prefixed hex takes `n` from the digit count (one digit means `n = 2`);
/// a bare 0/1 string of power-of-two length is binary; anything else is bare
/// hex.
pub fn parse_function(text: &str) -> Result<TruthTable> {
    let trimmed = text.trim();
    let hex_n = |digits: usize| -> Result<usize> {
        match digits {
            0 => Err(Error::malformed(text, "empty function")),
            1 => Ok(2),
            d => log2_exact(d * 4)
                .ok_or_else(|| Error::malformed(text, "hex digit count must be a power of two")),
        }
    };
    if let Some(body) = strip_hex_prefix(trimmed) {
        return hex_decode(trimmed, hex_n(body.len())?);
    }
    if trimmed.len() >= 2
        && trimmed.len().is_power_of_two()
        && trimmed.chars().all(|c| c == '0' || c == '1')
    {
        return TruthTable::from_binary(trimmed);
    }
    hex_decode(trimmed, hex_n(trimmed.len())?)
}

/// Simon shift between two inputs: `y = x ^ delta`.
pub fn delta_between(x: &BitString, y: &BitString) -> Result<BitString> {
    x.checked_xor(y)
}

/// Brute-force check that `f(x) == f(x ^ delta)` for every input.
pub fn is_invariant_under(tt: &TruthTable, delta: &BitString) -> Result<bool> {
    if delta.width() != tt.n {
        return Err(Error::LengthMismatch {
            expected: tt.n,
            got: delta.width(),
        });
    }
    let d = delta.value() as usize;
    Ok((0..tt.bits.len()).all(|x| tt.bits[x] == tt.bits[x ^ d]))
}

fn abbreviate(tt: &TruthTable) -> String {
    if tt.len() <= 64 {
        tt.to_binary()
    } else {
        format!("${}", hex_encode(tt))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(s: &str) -> TruthTable {
        TruthTable::from_binary(s).unwrap()
    }

    fn strings(list: &[TruthTable]) -> Vec<String> {
        list.iter().map(TruthTable::to_binary).collect()
    }

    #[test]
    fn generate_level_one_and_two() {
        let (pos, neg) = generate_functions(1).unwrap();
        assert_eq!(strings(&pos), ["00", "01"]);
        assert_eq!(strings(&neg), ["11", "10"]);

        let (pos, neg) = generate_functions(2).unwrap();
        assert_eq!(strings(&pos), ["0000", "0011", "0101", "0110"]);
        assert_eq!(strings(&neg), ["1001", "1010", "1100", "1111"]);
    }

    #[test]
    fn generate_level_three() {
        let (pos, neg) = generate_functions(3).unwrap();
        assert_eq!(
            strings(&pos),
            [
                "00000000", "00001111", "00110011", "00111100", "01010101", "01011010", "01100110",
                "01101001"
            ]
        );
        assert_eq!(
            strings(&neg),
            [
                "10010110", "10011001", "10100101", "10101010", "11000011", "11001100", "11110000",
                "11111111"
            ]
        );
    }

    #[test]
    fn generate_rejects_out_of_range() {
        assert!(matches!(
            generate_functions(0),
            Err(Error::OutOfBounds { .. })
        ));
        assert!(matches!(
            generate_functions(MAX_VARS + 1),
            Err(Error::OutOfBounds { .. })
        ));
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&tt("0110")));
        assert!(!is_admissible(&tt("0001")));
        assert!(!is_admissible(&tt("00010111")));
        assert!(is_admissible(&tt("01")));
    }

    #[test]
    fn parity_form_examples() {
        let pf = to_parity_form(&tt("0011")).unwrap();
        assert_eq!(pf.mask().to_string(), "10");
        assert!(!pf.complement());
        assert_eq!(pf.expression(), "x1");

        let pf = to_parity_form(&tt("0110")).unwrap();
        assert_eq!(pf.mask().to_string(), "11");
        assert_eq!(pf.expression(), "x1 ^ x2");

        let pf = to_parity_form(&tt("1111")).unwrap();
        assert_eq!(pf.mask().to_string(), "00");
        assert!(pf.complement());

        assert!(matches!(
            to_parity_form(&tt("0001")),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn from_parity_form_examples() {
        let pf = ParityForm::new("01".parse().unwrap(), false).unwrap();
        assert_eq!(from_parity_form(&pf).to_binary(), "0101");
        let pf = ParityForm::new("000".parse().unwrap(), false).unwrap();
        assert_eq!(from_parity_form(&pf).to_binary(), "00000000");
        let pf = ParityForm::new("111".parse().unwrap(), false).unwrap();
        assert_eq!(from_parity_form(&pf).to_binary(), "01101001");
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&tt("0101")), FunctionClass::Positive);
        assert_eq!(classify(&tt("1100")), FunctionClass::Negative);
        assert_eq!(classify(&tt("0001")), FunctionClass::NotAdmissible);
    }

    #[test]
    fn hex_examples() {
        let g = tt("0011110000111100");
        assert_eq!(hex_encode(&g), "3C3C");
        assert_eq!(g.to_decimal(), "15420");
        let p = hex_decode("$6996", 4).unwrap();
        assert_eq!(p.to_decimal(), "27030");
        assert_eq!(hex_encode(&tt("0000")), "0");
        assert_eq!(hex_encode(&tt("00001111")), "0F");
        assert_eq!(hex_encode(&tt("01")), "1");
    }

    #[test]
    fn hex_decode_variants() {
        assert_eq!(hex_decode("0x3c3c", 4).unwrap(), tt("0011110000111100"));
        assert_eq!(hex_decode("3C3C", 4).unwrap(), tt("0011110000111100"));
        assert_eq!(hex_decode("0011", 2).unwrap(), tt("0011"));
        // four characters cannot be binary for n = 4
        assert_eq!(hex_decode("0011", 4).unwrap(), tt("0000000000010001"));
        assert_eq!(hex_decode("3", 2).unwrap(), tt("0011"));
        assert_eq!(hex_decode("$F", 2).unwrap(), tt("1111"));
    }

    #[test]
    fn hex_decode_errors() {
        assert!(matches!(hex_decode("$3G", 3), Err(Error::Malformed { .. })));
        assert!(matches!(
            hex_decode("$1F", 2),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            hex_decode("$00F", 3),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(hex_decode("", 2), Err(Error::Malformed { .. })));
    }

    #[test]
    fn parse_function_infers_width() {
        assert_eq!(parse_function("0011").unwrap().n(), 2);
        assert_eq!(parse_function("$3333").unwrap().n(), 4);
        assert_eq!(parse_function("$3").unwrap(), tt("0011"));
        assert_eq!(parse_function("3C3C").unwrap().n(), 4);
        assert_eq!(parse_function("00010111").unwrap().n(), 3);
        assert!(parse_function("$123").is_err());
    }

    #[test]
    fn delta_examples() {
        let x: BitString = "1000".parse().unwrap();
        let y: BitString = "1110".parse().unwrap();
        assert_eq!(delta_between(&x, &y).unwrap().to_string(), "0110");
        assert_eq!(delta_between(&x, &x).unwrap().value(), 0);
        let short: BitString = "10".parse().unwrap();
        assert!(delta_between(&x, &short).is_err());
    }

    #[test]
    fn delta_11_is_invariant_for_xor_by_exhaustion() {
        let x: BitString = "00".parse().unwrap();
        let y: BitString = "11".parse().unwrap();
        let d = delta_between(&x, &y).unwrap();
        assert_eq!(d.to_string(), "11");
        let f = tt("0110");
        for i in 0..4usize {
            assert_eq!(f.get(i), f.get(i ^ 3));
        }
    }

    #[test]
    fn invariance_examples() {
        let d = |s: &str| s.parse::<BitString>().unwrap();
        assert!(is_invariant_under(&tt("0011"), &d("01")).unwrap());
        assert!(is_invariant_under(&tt("0101"), &d("10")).unwrap());
        assert!(is_invariant_under(&tt("0110"), &d("11")).unwrap());
        assert!(!is_invariant_under(&tt("0011"), &d("10")).unwrap());
        assert!(is_invariant_under(&tt("0011"), &d("101")).is_err());
    }

    #[test]
    fn from_value_round_trips() {
        let t = TruthTable::from_value(4, 0x3C3C).unwrap();
        assert_eq!(t.to_hex(), "3C3C");
        assert!(TruthTable::from_value(2, 0x10).is_err());
        let wide = TruthTable::from_value(7, 5).unwrap();
        assert_eq!(wide.to_decimal(), "5");
    }

    #[test]
    fn decimal_of_wide_tables() {
        let ones = TruthTable::from_fn(7, |_| true).unwrap();
        assert_eq!(ones.to_decimal(), u128::MAX.to_string());
    }
}
