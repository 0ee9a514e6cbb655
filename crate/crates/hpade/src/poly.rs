//! Multiprecision polynomials in one complex variable.

use rug::{Complex, Float};

use crate::precision::{cabs, czero, from_c64, to_c64};
use num_complex::Complex64;

/// Polynomial with ascending coefficients `c[0] + c[1] x + ...`.
#[derive(Debug, Clone)]
pub struct Polynomial {
    coeffs: Vec<Complex>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Complex>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn zero(bits: u32) -> Self {
        Self::new(vec![czero(bits)])
    }

    pub fn bits(&self) -> u32 {
        self.coeffs[0].real().prec()
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Complex {
        &self.coeffs[k]
    }

    /// Nominal degree, counting stored coefficients.
    pub fn nominal_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn scale(&self) -> Float {
        let mut m = Float::with_val(self.bits(), 0);
        for c in &self.coeffs {
            let a = cabs(c);
            if a > m {
                m = a;
            }
        }
        m
    }

    /// Degree after discarding trailing coefficients below `rel_tol * scale`;
    /// `None` for the (numerically) zero polynomial.
    pub fn degree(&self, rel_tol: &Float) -> Option<usize> {
        let bits = self.bits();
        let tol = Float::with_val(bits, rel_tol * self.scale());
        for k in (0..self.coeffs.len()).rev() {
            if cabs(&self.coeffs[k]) > tol {
                return Some(k);
            }
        }
        None
    }

    /// Drop trailing negligible coefficients in place.
    pub fn trimmed(&self, rel_tol: &Float) -> Self {
        match self.degree(rel_tol) {
            Some(d) => Self::new(self.coeffs[..=d].to_vec()),
            None => Self::zero(self.bits()),
        }
    }

    /// Numerically zero: every coefficient is below the absolute threshold.
    pub fn is_zero(&self, abs_tol: &Float) -> bool {
        self.scale() <= *abs_tol
    }

    pub fn eval(&self, z: &Complex) -> Complex {
        let bits = self.bits();
        let mut acc = czero(bits);
        for c in self.coeffs.iter().rev() {
            acc *= z;
            acc += c;
        }
        acc
    }

    pub fn eval_c64(&self, z: Complex64) -> Complex64 {
        to_c64(&self.eval(&from_c64(self.bits(), z)))
    }

    /// Upper bound `sum_k |c_k| |z|^k`, used for backward-error residual tests.
    pub fn eval_abs(&self, zabs: &Float) -> Float {
        let bits = self.bits();
        let mut acc = Float::with_val(bits, 0);
        for c in self.coeffs.iter().rev() {
            acc *= zabs;
            acc += cabs(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let bits = self.bits();
        if self.coeffs.len() == 1 {
            return Self::zero(bits);
        }
        let coeffs = (1..self.coeffs.len())
            .map(|k| Complex::with_val(bits, &self.coeffs[k] * k as u32))
            .collect();
        Self::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let bits = self.bits();
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![czero(bits); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let bits = self.bits();
        Self::new(
            self.coeffs
                .iter()
                .map(|c| Complex::with_val(bits, -c.clone()))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bits = self.bits();
        let mut coeffs = vec![czero(bits); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += Complex::with_val(bits, a * b);
            }
        }
        Self::new(coeffs)
    }

    pub fn scalar_mul(&self, s: &Complex) -> Self {
        let bits = self.bits();
        Self::new(
            self.coeffs
                .iter()
                .map(|c| Complex::with_val(bits, c * s))
                .collect(),
        )
    }

    /// Scale so the highest stored coefficient is 1.
    pub fn monic(&self) -> Self {
        let bits = self.bits();
        let lead = self.coeffs.last().unwrap();
        let inv = Complex::with_val(bits, lead.clone().recip());
        self.scalar_mul(&inv)
    }

    /// Largest coefficient modulus equals 1 after this rescaling; keeps the
    /// dynamic range tame for export and root finding.
    pub fn normalized(&self) -> Self {
        let s = self.scale();
        if s == 0 {
            return self.clone();
        }
        let bits = self.bits();
        let inv = Float::with_val(bits, s.recip_ref());
        Self::new(
            self.coeffs
                .iter()
                .map(|c| Complex::with_val(bits, c * &inv))
                .collect(),
        )
    }

    pub fn coeffs_c64(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(to_c64).collect()
    }
}
