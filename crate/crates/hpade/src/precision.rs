//! Working-precision configuration and small helpers around `rug` values.

use rug::{Complex, Float};

use crate::{Error, Result};

/// Binary precision of all coefficient arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionConfig {
    bits: u32,
}

impl PrecisionConfig {
    pub const MIN_BITS: u32 = 64;

    pub fn new(bits: u32) -> Result<Self> {
        if bits < Self::MIN_BITS {
            return Err(Error::InvalidInput(format!(
                "precision must be at least {} bits, got {bits}",
                Self::MIN_BITS
            )));
        }
        Ok(Self { bits })
    }

    /// Default bit budget for computations up to approximant order `n`.
    ///
    /// Hermite-Pade systems are exponentially ill-conditioned in `n`; a
    /// linear-in-`n` budget keeps the extracted null vector accurate to far
    /// more digits than any downstream tolerance requires.
    pub fn for_order(n: usize) -> Self {
        Self {
            bits: 128 + 12 * n as u32,
        }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Half-precision threshold `2^{-bits/2}` used throughout for the
    /// "numerically zero" decision.
    pub fn zero_threshold(self) -> Float {
        let mut t = Float::with_val(self.bits, 1u32);
        t >>= self.bits / 2;
        t
    }
}

pub fn cplx(bits: u32, re: f64, im: f64) -> Complex {
    Complex::with_val(bits, (re, im))
}

pub fn czero(bits: u32) -> Complex {
    Complex::with_val(bits, (0, 0))
}

pub fn cone(bits: u32) -> Complex {
    Complex::with_val(bits, (1, 0))
}

/// `|z|` as a `Float` at the value's precision.
pub fn cabs(z: &Complex) -> Float {
    Float::with_val(z.real().prec(), z.abs_ref())
}

/// Squared modulus; cheaper than `cabs` when only comparisons are needed.
pub fn cnorm2(z: &Complex) -> Float {
    Float::with_val(z.real().prec(), z.norm_ref())
}

pub fn to_c64(z: &Complex) -> num_complex::Complex64 {
    num_complex::Complex64::new(z.real().to_f64(), z.imag().to_f64())
}

pub fn from_c64(bits: u32, z: num_complex::Complex64) -> Complex {
    Complex::with_val(bits, (z.re, z.im))
}
