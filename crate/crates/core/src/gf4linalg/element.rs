//! Elements of GF(4) = {0, 1, ω, ω²} with ω² = ω + 1.
//!
//! Each element is a 2-bit value `b1 b0` standing for `b0 + b1·ω`, so
//! `0 = 0b00`, `1 = 0b01`, `ω = 0b10`, `ω² = 0b11`. Addition is XOR and
//! multiplication goes through a 16-entry table.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Sub};

/// Element of GF(4).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

// MUL_TABLE[(a << 2) | b] = a * b
const MUL_TABLE: [u8; 16] = [
    0, 0, 0, 0, //
    0, 1, 2, 3, //
    0, 2, 3, 1, //
    0, 3, 1, 2, //
];

const INV_TABLE: [u8; 4] = [0, 1, 3, 2];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA2: Gf4 = Gf4(3);

    /// All four elements in encoding order.
    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];
    /// The multiplicative group {1, ω, ω²}.
    pub const NONZERO: [Gf4; 3] = [Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];

    /// Builds an element from its 2-bit encoding; higher bits are masked off.
    #[inline]
    pub const fn from_bits(bits: u8) -> Gf4 {
        Gf4(bits & 0b11)
    }

    #[inline]
    pub const fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Frobenius conjugation `x ↦ x²`, swapping ω and ω².
    #[inline]
    pub const fn conj(self) -> Gf4 {
        // x² = b0 + b1·ω² = (b0 ^ b1) + b1·ω
        Gf4(self.0 ^ (self.0 >> 1))
    }

    /// Multiplicative inverse, `None` for zero.
    #[inline]
    pub fn inv(self) -> Option<Gf4> {
        if self.is_zero() {
            None
        } else {
            Some(Gf4(INV_TABLE[self.0 as usize]))
        }
    }

    /// Symbol used in matrix files: `0`, `1`, `w` (ω) and `W` (ω²).
    pub const fn symbol(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'W',
        }
    }

    /// Parses a letter symbol (`0 1 w W`) or, with `digits`, a numeric one (`0 1 2 3`).
    pub fn from_symbol(c: char, digits: bool) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' if !digits => Some(Gf4::OMEGA),
            'W' if !digits => Some(Gf4::OMEGA2),
            '2' if digits => Some(Gf4::OMEGA),
            '3' if digits => Some(Gf4::OMEGA2),
            _ => None,
        }
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf4 {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

// characteristic 2: subtraction is addition
impl Sub for Gf4 {
    type Output = Gf4;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    #[inline]
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL_TABLE[((self.0 << 2) | rhs.0) as usize])
    }
}

impl MulAssign for Gf4 {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = *self * rhs;
    }
}

impl Div for Gf4 {
    type Output = Gf4;
    /// Panics on division by zero.
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Gf4) -> Gf4 {
        self * rhs.inv().expect("division by zero in GF(4)")
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.0 {
            0 => "0",
            1 => "1",
            2 => "ω",
            _ => "ω²",
        };
        f.write_str(name)
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}
