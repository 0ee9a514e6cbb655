//! Formal power series arithmetic at configurable precision and construction
//! of the model-class germs at `z = infinity` and `zeta = 0`.
//!
//! A series is a truncated expansion in the local variable `t`, where
//! `t = 1/z` for at-infinity germs and `t = zeta` for finite-point germs.

use num_complex::Complex64;
use rug::{Complex, Float};

use crate::precision::{cabs, cone, cplx, czero, PrecisionConfig};
use crate::{Error, Result};

/// Expansion point of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Center {
    AtInfinity,
    AtZero,
}

/// Truncated power series with high-precision complex coefficients.
///
/// `coeffs[k]` multiplies `t^k`; the truncation order is `coeffs.len() - 1`.
#[derive(Debug, Clone)]
pub struct PowerSeries {
    coeffs: Vec<Complex>,
    center: Center,
}

impl PowerSeries {
    pub fn new(center: Center, coeffs: Vec<Complex>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self { coeffs, center }
    }

    pub fn constant(center: Center, value: Complex, order: usize, bits: u32) -> Self {
        let mut coeffs = vec![czero(bits); order + 1];
        coeffs[0] = Complex::with_val(bits, &value);
        Self { coeffs, center }
    }

    pub fn one(center: Center, order: usize, bits: u32) -> Self {
        Self::constant(center, cone(bits), order, bits)
    }

    pub fn center(&self) -> Center {
        self.center
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
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

    /// Largest coefficient modulus; the scale against which "numerically
    /// zero" is judged.
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

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=n].to_vec(),
            center: self.center,
        }
    }

    fn check_center(&self, other: &Self) -> Result<()> {
        if self.center != other.center {
            return Err(Error::CenterMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_center(other)?;
        let n = self.order().min(other.order());
        let bits = self.bits();
        let coeffs = (0..=n)
            .map(|k| Complex::with_val(bits, &self.coeffs[k] + &other.coeffs[k]))
            .collect();
        Ok(Self::new(self.center, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_center(other)?;
        let n = self.order().min(other.order());
        let bits = self.bits();
        let coeffs = (0..=n)
            .map(|k| Complex::with_val(bits, &self.coeffs[k] - &other.coeffs[k]))
            .collect();
        Ok(Self::new(self.center, coeffs))
    }

    pub fn neg(&self) -> Self {
        let bits = self.bits();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| Complex::with_val(bits, -c.clone()))
            .collect();
        Self::new(self.center, coeffs)
    }

    pub fn scalar_mul(&self, s: &Complex) -> Self {
        let bits = self.bits();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| Complex::with_val(bits, c * s))
            .collect();
        Self::new(self.center, coeffs)
    }

    pub fn scalar_add(&self, s: &Complex) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += s;
        out
    }

    /// Cauchy product truncated to the smaller operand order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_center(other)?;
        let n = self.order().min(other.order());
        let bits = self.bits();
        let mut coeffs = vec![czero(bits); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                coeffs[i + j] += Complex::with_val(bits, a * b);
            }
        }
        Ok(Self::new(self.center, coeffs))
    }

    fn require_unit(&self) -> Result<()> {
        let scale = self.scale();
        let mut tol = PrecisionConfig::new(self.bits())
            .map(|p| p.zero_threshold())
            .unwrap_or_else(|_| Float::with_val(self.bits(), 0));
        tol *= Float::with_val(self.bits(), 1).max(&scale);
        if cabs(&self.coeffs[0]) <= tol {
            return Err(Error::SingularSeries);
        }
        Ok(())
    }

    /// Multiplicative inverse by Newton iteration `y <- y (2 - x y)`.
    pub fn inv(&self) -> Result<Self> {
        self.require_unit()?;
        let bits = self.bits();
        let n = self.order();
        let mut y = Self::constant(
            self.center,
            Complex::with_val(bits, self.coeffs[0].clone().recip()),
            0,
            bits,
        );
        let mut m = 0usize;
        while m < n {
            m = (2 * m + 1).min(n);
            let x = self.truncate(m);
            let mut y_ext = y.clone();
            y_ext.coeffs.resize(m + 1, czero(bits));
            let xy = x.mul(&y_ext)?;
            let two_minus = Self::constant(self.center, cplx(bits, 2.0, 0.0), m, bits).sub(&xy)?;
            y = y_ext.mul(&two_minus)?;
        }
        Ok(y)
    }

    /// Term-wise derivative with respect to `t`.
    fn derivative(&self) -> Self {
        let bits = self.bits();
        if self.order() == 0 {
            return Self::constant(self.center, czero(bits), 0, bits);
        }
        let coeffs = (1..=self.order())
            .map(|k| Complex::with_val(bits, &self.coeffs[k] * k as u32))
            .collect();
        Self::new(self.center, coeffs)
    }

    /// Series logarithm: `log c0 + integral of f'/f`, principal branch at the
    /// constant term.
    pub fn log(&self) -> Result<Self> {
        self.require_unit()?;
        let bits = self.bits();
        let n = self.order();
        let g = self.derivative().mul(&self.inv()?.truncate(n.saturating_sub(1)))?;
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(Complex::with_val(bits, self.coeffs[0].clone().ln()));
        for k in 1..=n {
            if k - 1 <= g.order() {
                coeffs.push(Complex::with_val(bits, &g.coeffs[k - 1] / k as u32));
            } else {
                coeffs.push(czero(bits));
            }
        }
        Ok(Self::new(self.center, coeffs))
    }

    /// Series exponential via the standard first-order recurrence; requires a
    /// vanishing constant term.
    fn exp_zero_constant(&self) -> Self {
        let bits = self.bits();
        let n = self.order();
        let mut y = vec![czero(bits); n + 1];
        y[0] = cone(bits);
        for k in 1..=n {
            let mut acc = czero(bits);
            for j in 1..=k {
                let term = Complex::with_val(bits, &self.coeffs[j] * &y[k - j]);
                acc += Complex::with_val(bits, term * j as u32);
            }
            y[k] = Complex::with_val(bits, acc / k as u32);
        }
        Self::new(self.center, y)
    }

    /// `self^alpha = exp(alpha log self)` with the principal branch of the
    /// logarithm applied to the constant term.
    pub fn pow(&self, alpha: &Complex) -> Result<Self> {
        let bits = self.bits();
        let mut l = self.log()?;
        let l0 = std::mem::replace(&mut l.coeffs[0], czero(bits));
        let scaled = l.scalar_mul(alpha);
        let series = scaled.exp_zero_constant();
        let lead = Complex::with_val(bits, (Complex::with_val(bits, l0 * alpha)).exp());
        Ok(series.scalar_mul(&lead))
    }

    /// Divide by `t^k`; the lowest `k` coefficients must be negligible.
    fn shift_down(&self, k: usize) -> Self {
        Self::new(self.center, self.coeffs[k..].to_vec())
    }

    /// Multiply by `t^k`, keeping the coefficient count.
    fn shift_up(&self, k: usize) -> Self {
        let bits = self.bits();
        let mut coeffs = vec![czero(bits); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.center, coeffs)
    }
}

/// Parameters of the model class: the factors `(A_j - 1/phi)^{alpha_j}` and
/// the optional affine change of variable used for germs at `zeta = 0`.
#[derive(Debug, Clone)]
pub struct SZParams {
    pub a_list: Vec<Complex64>,
    pub alpha_list: Vec<Complex64>,
    /// Real shift of the variable change `z = (z~ - a) i / b`.
    pub a: f64,
    /// Real scale of the variable change.
    pub b: f64,
}

const PARAM_TOL: f64 = 1e-9;

impl SZParams {
    pub fn new(a_list: Vec<Complex64>, alpha_list: Vec<Complex64>, a: f64, b: f64) -> Result<Self> {
        if a_list.is_empty() || a_list.len() != alpha_list.len() {
            return Err(Error::InvalidInput(
                "A_j and alpha_j lists must be nonempty and of equal length".into(),
            ));
        }
        for (j, aj) in a_list.iter().enumerate() {
            if aj.norm() <= 1.0 {
                return Err(Error::InvalidInput(format!("|A_{j}| must exceed 1")));
            }
            for ak in &a_list[..j] {
                if (aj - ak).norm() < 1e-12 {
                    return Err(Error::InvalidInput("A_j must be pairwise distinct".into()));
                }
            }
        }
        let sum: Complex64 = alpha_list.iter().sum();
        if sum.im.abs() > PARAM_TOL || (sum.re - sum.re.round()).abs() > PARAM_TOL {
            return Err(Error::InvalidInput("sum of alpha_j must be an integer".into()));
        }
        for (j, al) in alpha_list.iter().enumerate() {
            if al.im.abs() < PARAM_TOL && (al.re - al.re.round()).abs() < PARAM_TOL {
                return Err(Error::InvalidInput(format!("alpha_{j} must not be an integer")));
            }
        }
        Ok(Self {
            a_list,
            alpha_list,
            a,
            b,
        })
    }

    /// Real Markov-type case: `f = [(A - 1/phi)(B - 1/phi)]^{-1/2}`, `1 < A < B`.
    pub fn markov(a_big: f64, b_big: f64) -> Result<Self> {
        if !(1.0 < a_big && a_big < b_big) {
            return Err(Error::InvalidInput("need 1 < A < B".into()));
        }
        let m = Complex64::new(-0.5, 0.0);
        Self::new(
            vec![Complex64::new(a_big, 0.0), Complex64::new(b_big, 0.0)],
            vec![m, m],
            0.0,
            0.0,
        )
    }

    /// Conjugate-symmetric pair `A = A1 + i A2`, `B = -A1 + i A2` together
    /// with the variable change parameters `a`, `b`.
    pub fn conjugate_pair(a1: f64, a2: f64, a: f64, b: f64) -> Result<Self> {
        let m = Complex64::new(-0.5, 0.0);
        Self::new(
            vec![Complex64::new(a1, a2), Complex64::new(-a1, a2)],
            vec![m, m],
            a,
            b,
        )
    }

    /// Endpoints `a = (A + 1/A)/2`, `b = (B + 1/B)/2` of `Delta_2` in the real
    /// case; only meaningful for `markov` parameters.
    pub fn delta2(&self) -> Result<(f64, f64)> {
        let mut ends: Vec<f64> = Vec::new();
        for aj in &self.a_list {
            if aj.im.abs() > PARAM_TOL {
                return Err(Error::InvalidInput("Delta_2 requires real A_j".into()));
            }
            ends.push(0.5 * (aj.re + 1.0 / aj.re));
        }
        ends.sort_by(|x, y| x.partial_cmp(y).unwrap());
        Ok((ends[0], *ends.last().unwrap()))
    }
}

/// Series of `1/phi(z) = z - (z^2-1)^{1/2}` in `t = 1/z`:
/// `s(t) = (1 - sqrt(1 - t^2)) / t`.
fn zhukovskii_inverse_series(order: usize, bits: u32) -> Result<PowerSeries> {
    let work = order + 2;
    let mut one_minus_t2 = PowerSeries::one(Center::AtInfinity, work, bits);
    one_minus_t2.coeffs[2] = cplx(bits, -1.0, 0.0);
    let half = cplx(bits, 0.5, 0.0);
    let root = one_minus_t2.pow(&half)?;
    let num = PowerSeries::one(Center::AtInfinity, work, bits).sub(&root)?;
    Ok(num.shift_down(1).truncate(order))
}

/// Taylor coefficients of `f(z) = prod_j (A_j - 1/phi(z))^{alpha_j}` in powers
/// of `t = 1/z`, with the branch fixed by `(z^2-1)^{1/2}/z -> 1` at infinity
/// and the principal branch at each constant term.
pub fn germ_at_infinity(p: &SZParams, order: usize, prec: PrecisionConfig) -> Result<PowerSeries> {
    let bits = prec.bits();
    let s = zhukovskii_inverse_series(order, bits)?;
    let mut f = PowerSeries::one(Center::AtInfinity, order, bits);
    for (aj, alpha) in p.a_list.iter().zip(&p.alpha_list) {
        let base = s
            .neg()
            .scalar_add(&cplx(bits, aj.re, aj.im));
        let factor = base.pow(&cplx(bits, alpha.re, alpha.im))?;
        f = f.mul(&factor)?;
    }
    Ok(f)
}

/// Coefficients at `zeta = 0` of the transformed function
/// `f~(zeta) = prod_j (A_j + g(zeta))^{alpha_j}` with
/// `g = i zeta / (u + sqrt(u^2 + zeta^2))`, `u = (1 - a zeta)/b`,
/// the inner square root fixed to `+1/b` at `zeta = 0`.
pub fn germ_at_zero(p: &SZParams, order: usize, prec: PrecisionConfig) -> Result<PowerSeries> {
    if p.a == 0.0 || p.b == 0.0 {
        return Err(Error::InvalidInput(
            "germ at zero requires nonzero variable-change parameters a, b".into(),
        ));
    }
    let bits = prec.bits();
    let work = order + 2;
    // u = (1 - a zeta)/b
    let mut u = PowerSeries::constant(Center::AtZero, cplx(bits, 1.0 / p.b, 0.0), work, bits);
    u.coeffs[1] = cplx(bits, -p.a / p.b, 0.0);
    let mut w2 = u.mul(&u)?;
    w2.coeffs[2] += cone(bits);
    let half = cplx(bits, 0.5, 0.0);
    let mut w = w2.pow(&half)?;
    // fix the inner branch: w(0) = +1/b
    let target = cplx(bits, 1.0 / p.b, 0.0);
    let d_plus = cabs(&Complex::with_val(bits, &w.coeffs[0] - &target));
    let d_minus = cabs(&Complex::with_val(
        bits,
        Complex::with_val(bits, -w.coeffs[0].clone()) - &target,
    ));
    if d_minus < d_plus {
        w = w.neg();
    }
    let den = u.add(&w)?;
    let g = den.inv()?.shift_up(1).truncate(work).scalar_mul(&cplx(bits, 0.0, 1.0));
    let mut f = PowerSeries::one(Center::AtZero, work, bits);
    for (aj, alpha) in p.a_list.iter().zip(&p.alpha_list) {
        let base = g.scalar_add(&cplx(bits, aj.re, aj.im));
        let factor = base.pow(&cplx(bits, alpha.re, alpha.im))?;
        f = f.mul(&factor)?;
    }
    Ok(f.truncate(order))
}

/// Default truncation order for order-`n` Hermite-Pade computations.
pub fn default_order(n: usize) -> usize {
    4 * n + 8
}
