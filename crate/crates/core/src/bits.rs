//! Fixed-width bit strings and ±1 signs shared by every module.
//!
//! Position 0 is the leftmost character and the most significant bit of the
//! numeric value, so `"10"` has value 2. Truth-table indices, masks, shifts
//! and basis-ket labels all use this convention.

use std::fmt;
use std::ops::{BitAnd, BitXor, Mul, Neg};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Widest bit string supported (fits in a `u64`).
pub const MAX_WIDTH: usize = 63;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BitString {
    width: usize,
    value: u64,
}

impl BitString {
    pub fn new(width: usize, value: u64) -> Result<Self> {
        if width == 0 || width > MAX_WIDTH {
            return Err(Error::OutOfBounds {
                what: "bit width",
                value: width,
                min: 1,
                max: MAX_WIDTH,
            });
        }
        if value >> width != 0 {
            return Err(Error::LengthMismatch {
                expected: width,
                got: 64 - value.leading_zeros() as usize,
            });
        }
        Ok(BitString { width, value })
    }

    pub fn zeros(width: usize) -> Result<Self> {
        Self::new(width, 0)
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let value = bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
        Self::new(bits.len(), value)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Bit at position `i`, counted from the left.
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.width,
            "bit {i} out of range for width {}",
            self.width
        );
        (self.value >> (self.width - 1 - i)) & 1 == 1
    }

    pub fn with(&self, i: usize, bit: bool) -> Self {
        assert!(
            i < self.width,
            "bit {i} out of range for width {}",
            self.width
        );
        let shift = self.width - 1 - i;
        let value = (self.value & !(1 << shift)) | ((bit as u64) << shift);
        BitString { value, ..*self }
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.width).map(move |i| self.get(i))
    }

    pub fn count_ones(&self) -> u32 {
        self.value.count_ones()
    }

    pub fn parity(&self) -> bool {
        self.count_ones() % 2 == 1
    }

    pub fn complement(&self) -> Self {
        let all = (1u64 << self.width) - 1;
        BitString {
            value: !self.value & all,
            ..*self
        }
    }

    /// Appends `bit` on the right.
    pub fn push(&self, bit: bool) -> Result<Self> {
        Self::new(self.width + 1, (self.value << 1) | bit as u64)
    }

    /// Drops the rightmost bit.
    pub fn split_last(&self) -> Option<(Self, bool)> {
        if self.width < 2 {
            return None;
        }
        let last = self.value & 1 == 1;
        Some((
            BitString {
                width: self.width - 1,
                value: self.value >> 1,
            },
            last,
        ))
    }

    pub fn checked_xor(&self, other: &Self) -> Result<Self> {
        self.same_width(other)?;
        Ok(*self ^ *other)
    }

    fn same_width(&self, other: &Self) -> Result<()> {
        if self.width != other.width {
            return Err(Error::LengthMismatch {
                expected: self.width,
                got: other.width,
            });
        }
        Ok(())
    }
}

impl BitXor for BitString {
    type Output = BitString;

    fn bitxor(self, rhs: Self) -> Self {
        assert_eq!(
            self.width, rhs.width,
            "xor of bit strings of different widths"
        );
        BitString {
            value: self.value ^ rhs.value,
            ..self
        }
    }
}

impl BitAnd for BitString {
    type Output = BitString;

    fn bitand(self, rhs: Self) -> Self {
        assert_eq!(
            self.width, rhs.width,
            "and of bit strings of different widths"
        );
        BitString {
            value: self.value & rhs.value,
            ..self
        }
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .filter(|c| *c != ',' && *c != '_')
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::malformed(s, format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.is_empty() {
            return Err(Error::malformed(s, "empty bit string"));
        }
        Self::from_bits(&bits)
    }
}

/// A global ±1 factor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn from_negative(negative: bool) -> Self {
        if negative {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_negative(self.is_negative() != rhs.is_negative())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}
