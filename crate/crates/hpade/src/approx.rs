//! Evaluation of the rational objects produced by the solvers and their
//! composition into branch values on sheets 1..3.

use num_complex::Complex64;
use rug::Float;

use crate::hp::{self, HPSolveReport, MultiIndex};
use crate::poly::Polynomial;
use crate::precision::from_c64;
use crate::series::PowerSeries;
use crate::{Error, Result};

/// Function values on the first three sheets at one point.
#[derive(Debug, Clone, Copy)]
pub struct BranchValues {
    pub f1: Complex64,
    pub f2: Complex64,
    pub f3: Complex64,
    pub n_used: usize,
    pub point: Complex64,
}

/// Relative cancellation threshold for the near-pole decision: Horner at
/// `bits` precision is backward stable, so the value is trustworthy as long
/// as it stays above `2^{-bits/2}` times the no-cancellation bound
/// `sum |c_k| |z|^k`. Denominators with all roots on one side of `z` are
/// legitimately exponentially small against that bound and must not trip
/// the guard.
fn pole_threshold(bits: u32) -> Float {
    let mut t = Float::with_val(bits, 1u32);
    t >>= bits / 2;
    t
}

pub fn eval_ratio(num: &Polynomial, den: &Polynomial, z: Complex64) -> Result<Complex64> {
    eval_ratio_named(num, den, z, "ratio")
}

pub fn eval_ratio_named(
    num: &Polynomial,
    den: &Polynomial,
    z: Complex64,
    which: &str,
) -> Result<Complex64> {
    let bits = den.bits();
    let zz = from_c64(bits, z);
    let dv = den.eval(&zz);
    let dabs = crate::precision::cabs(&dv);
    let mut bound = den.eval_abs(&Float::with_val(bits, z.norm()));
    bound *= pole_threshold(bits);
    if dabs <= bound {
        return Err(Error::NearPole {
            which: which.into(),
            denominator_abs: dabs.to_f64(),
        });
    }
    let nv = num.eval(&zz);
    Ok(crate::precision::to_c64(&rug::Complex::with_val(bits, nv / dv)))
}

/// All polynomials needed by the two-sheet recovery scheme at order `n`:
/// the type II pair over `[f, f^2]` and the type I triple over `[1, f, f^2]`.
#[derive(Debug, Clone)]
pub struct TwoSheetSet {
    pub type2: HPSolveReport,
    pub type1: HPSolveReport,
    pub n: usize,
}

impl TwoSheetSet {
    pub fn build(f: &PowerSeries, n: usize) -> Result<Self> {
        let tuple = hp::power_tuple(f, 2)?;
        let type2 = hp::hp_type2(&tuple[1..], n)?;
        let idx = MultiIndex::balanced(vec![n, n, n], f.center());
        let type1 = hp::hp_type1(&tuple, &idx)?;
        Ok(Self { type2, type1, n })
    }

    /// Denominator whose zeros model the first sheet boundary.
    pub fn q2n(&self) -> &Polynomial {
        &self.type2.polynomials[0]
    }

    /// Type I component whose zeros model the second sheet boundary.
    pub fn qn2(&self) -> &Polynomial {
        &self.type1.polynomials[2]
    }

    fn values_at(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        let f1 = eval_ratio_named(&self.type2.polynomials[1], &self.type2.polynomials[0], z, "P/Q2n")?;
        let r = eval_ratio_named(&self.type1.polynomials[1], &self.type1.polynomials[2], z, "Qn1/Qn2")?;
        Ok((f1, -r - f1))
    }
}

/// All polynomials needed by the three-sheet recovery scheme at order `n`.
#[derive(Debug, Clone)]
pub struct ThreeSheetSet {
    pub type2: HPSolveReport,
    pub type1_full: HPSolveReport,
    pub s1: Polynomial,
    pub s2: Polynomial,
    pub n: usize,
}

impl ThreeSheetSet {
    pub fn build(f: &PowerSeries, n: usize) -> Result<Self> {
        let tuple = hp::power_tuple(f, 3)?;
        let type2 = hp::hp_type2(&tuple[1..], n)?;
        let sol1 = hp::hp_type1(&tuple, &MultiIndex::tuple1(n, f.center()))?;
        let sol2 = hp::hp_type1(&tuple, &MultiIndex::tuple2(n, f.center()))?;
        let (s1, s2) = hp::s_polys(&sol1, &sol2)?;
        let type1_full = hp::hp_type1(&tuple, &MultiIndex::full(n, f.center()))?;
        Ok(Self {
            type2,
            type1_full,
            s1,
            s2,
            n,
        })
    }

    pub fn q3n(&self) -> &Polynomial {
        &self.type2.polynomials[0]
    }

    pub fn qfull3(&self) -> &Polynomial {
        &self.type1_full.polynomials[3]
    }

    fn values_at(&self, z: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
        let f1 = eval_ratio_named(&self.type2.polynomials[1], &self.type2.polynomials[0], z, "P3n1/Q3n")?;
        let rs = eval_ratio_named(&self.s1, &self.s2, z, "S1/S2")?;
        let f2 = -rs - f1;
        let rq = eval_ratio_named(
            &self.type1_full.polynomials[2],
            &self.type1_full.polynomials[3],
            z,
            "Qn2/Qn3",
        )?;
        let f3 = -rq - f1 - f2;
        Ok((f1, f2, f3))
    }
}

/// The recovery identities hold in capacity, so isolated spurious poles near
/// `z` are expected; sample a 5-point cross and take the component-wise
/// median.
fn cross_points(z: Complex64) -> [Complex64; 5] {
    let h = 1e-6 * z.norm().max(1.0);
    [
        z,
        z + Complex64::new(h, 0.0),
        z - Complex64::new(h, 0.0),
        z + Complex64::new(0.0, h),
        z - Complex64::new(0.0, h),
    ]
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v[v.len() / 2]
}

fn median_c(samples: &[Complex64]) -> Complex64 {
    Complex64::new(
        median(samples.iter().map(|s| s.re).collect()),
        median(samples.iter().map(|s| s.im).collect()),
    )
}

pub fn recover_two_sheets(set: &TwoSheetSet, z: Complex64) -> Result<(Complex64, Complex64)> {
    let mut s1 = Vec::new();
    let mut s2 = Vec::new();
    let mut last_err = None;
    for p in cross_points(z) {
        match set.values_at(p) {
            Ok((a, b)) => {
                s1.push(a);
                s2.push(b);
            }
            Err(e) => last_err = Some(e),
        }
    }
    if s1.len() < 3 {
        return Err(last_err.unwrap());
    }
    Ok((median_c(&s1), median_c(&s2)))
}

pub fn recover_three_sheets(set: &ThreeSheetSet, z: Complex64) -> Result<BranchValues> {
    let mut s1 = Vec::new();
    let mut s2 = Vec::new();
    let mut s3 = Vec::new();
    let mut last_err = None;
    for p in cross_points(z) {
        match set.values_at(p) {
            Ok((a, b, c)) => {
                s1.push(a);
                s2.push(b);
                s3.push(c);
            }
            Err(e) => last_err = Some(e),
        }
    }
    if s1.len() < 3 {
        return Err(last_err.unwrap());
    }
    Ok(BranchValues {
        f1: median_c(&s1),
        f2: median_c(&s2),
        f3: median_c(&s3),
        n_used: set.n,
        point: z,
    })
}

/// Shafer (quadratic) approximant: the root of
/// `Q0 + Q1 w + Q2 w^2 = 0` closer to `branch_hint`.
pub fn shafer_eval(
    sol1: &HPSolveReport,
    z: Complex64,
    branch_hint: Complex64,
) -> Result<Complex64> {
    if sol1.polynomials.len() != 3 {
        return Err(Error::InvalidInput(
            "Shafer evaluation needs a 3-component type I solution".into(),
        ));
    }
    let q0 = sol1.polynomials[0].eval_c64(z);
    let q1 = sol1.polynomials[1].eval_c64(z);
    let q2v = sol1.polynomials[2].eval_c64(z);
    let bits = sol1.polynomials[2].bits();
    // Q2 is evaluated in f64 here, so the guard uses the f64 rounding scale.
    let mut bound = sol1.polynomials[2].eval_abs(&Float::with_val(bits, z.norm()));
    bound *= 1e-13;
    if q2v.norm() <= bound.to_f64() {
        return Err(Error::NearPole {
            which: "Q2".into(),
            denominator_abs: q2v.norm(),
        });
    }
    let disc = (q1 * q1 - 4.0 * q0 * q2v).sqrt();
    let w1 = (-q1 + disc) / (2.0 * q2v);
    let w2 = (-q1 - disc) / (2.0 * q2v);
    let d1 = (w1 - branch_hint).norm();
    let d2 = (w2 - branch_hint).norm();
    let sep = (w1 - w2).norm();
    if sep > 0.0 && (d1 - d2).abs() <= 1e-9 * sep {
        return Err(Error::AmbiguousBranch);
    }
    Ok(if d1 <= d2 { w1 } else { w2 })
}

/// Shafer discriminant `Q1^2 - 4 Q0 Q2` at a point.
pub fn shafer_discriminant(sol1: &HPSolveReport, z: Complex64) -> Result<Complex64> {
    if sol1.polynomials.len() != 3 {
        return Err(Error::InvalidInput(
            "Shafer discriminant needs a 3-component type I solution".into(),
        ));
    }
    let q0 = sol1.polynomials[0].eval_c64(z);
    let q1 = sol1.polynomials[1].eval_c64(z);
    let q2 = sol1.polynomials[2].eval_c64(z);
    Ok(q1 * q1 - 4.0 * q0 * q2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::{cplx, PrecisionConfig};
    use crate::series::{germ_at_infinity, Center, SZParams};

    const BITS: u32 = 448;

    fn markov_germ(n: usize) -> PowerSeries {
        let p = SZParams::markov(2.0, 3.0).unwrap();
        germ_at_infinity(&p, crate::series::default_order(n), PrecisionConfig::new(BITS).unwrap())
            .unwrap()
    }

    fn oracle_sheets(z: Complex64) -> [Complex64; 4] {
        crate::continuation::oracle_sheet_values_real(&SZParams::markov(2.0, 3.0).unwrap(), z)
            .unwrap()
    }

    #[test]
    fn eval_ratio_basic() {
        let num = Polynomial::new(vec![cplx(BITS, 0.0, 0.0), cplx(BITS, 1.0, 0.0)]);
        let den = Polynomial::new(vec![cplx(BITS, 1.0, 0.0)]);
        let v = eval_ratio(&num, &den, Complex64::new(3.0, 0.0)).unwrap();
        assert!((v.re - 3.0).abs() < 1e-15 && v.im.abs() < 1e-15);
    }

    #[test]
    fn eval_ratio_pole_detection() {
        // den = z - 1 evaluated at its root
        let num = Polynomial::new(vec![cplx(BITS, 1.0, 0.0)]);
        let den = Polynomial::new(vec![cplx(BITS, -1.0, 0.0), cplx(BITS, 1.0, 0.0)]);
        assert!(matches!(
            eval_ratio(&num, &den, Complex64::new(1.0, 0.0)),
            Err(Error::NearPole { .. })
        ));
    }

    #[test]
    fn pade_matches_closed_form() {
        let n = 16;
        let g = markov_germ(n);
        let (p, q) = crate::hp::pade_pair(&g, n).unwrap();
        let z = Complex64::new(2.0, 0.0);
        let v = eval_ratio(&p, &q, z).unwrap();
        let oracle = oracle_sheets(z)[0];
        assert!((v - oracle).norm() < 1e-8, "pade {v} vs oracle {oracle}");
    }

    #[test]
    fn two_sheet_recovery_real_case() {
        let n = 16;
        let g = markov_germ(n);
        let set = TwoSheetSet::build(&g, n).unwrap();
        let z = Complex64::new(2.0, 0.0);
        let (f1, f2) = recover_two_sheets(&set, z).unwrap();
        let oracle = oracle_sheets(z);
        assert!((f1 - oracle[0]).norm() < 1e-6, "f1 {f1} vs {}", oracle[0]);
        assert!((f2 - oracle[1]).norm() < 1e-4, "f2 {f2} vs {}", oracle[1]);
    }

    #[test]
    fn three_sheet_recovery_real_case() {
        let n = 16;
        let g = markov_germ(n);
        let set = ThreeSheetSet::build(&g, n).unwrap();
        let z = Complex64::new(2.0, 0.0);
        let bv = recover_three_sheets(&set, z).unwrap();
        let oracle = oracle_sheets(z);
        assert!((bv.f1 - oracle[0]).norm() < 1e-4, "f1 {} vs {}", bv.f1, oracle[0]);
        assert!((bv.f2 - oracle[1]).norm() < 1e-4, "f2 {} vs {}", bv.f2, oracle[1]);
        assert!((bv.f3 - oracle[2]).norm() < 1e-4, "f3 {} vs {}", bv.f3, oracle[2]);
        // the implied fourth value closes the two sign pairs
        let f4 = -(bv.f1 + bv.f2 + bv.f3);
        assert!((f4 - oracle[3]).norm() < 1e-4, "f4 {f4} vs {}", oracle[3]);
    }

    #[test]
    fn shafer_quadratic_germ_is_fixed_point() {
        // f = sqrt(1 - 1/z) satisfies f^2 - (1 - t) = 0 in t = 1/z
        let order = 24;
        let mut one_minus_t = PowerSeries::one(Center::AtInfinity, order, BITS);
        let mut coeffs: Vec<rug::Complex> = one_minus_t.coeffs().to_vec();
        coeffs[1] = cplx(BITS, -1.0, 0.0);
        one_minus_t = PowerSeries::new(Center::AtInfinity, coeffs);
        let f = one_minus_t.pow(&cplx(BITS, 0.5, 0.0)).unwrap();
        let tuple = crate::hp::power_tuple(&f, 2).unwrap();
        let idx = MultiIndex::balanced(vec![2, 2, 2], Center::AtInfinity);
        let sol = crate::hp::hp_type1(&tuple, &idx).unwrap();
        let z = Complex64::new(3.0, 1.0);
        let exact = (Complex64::new(1.0, 0.0) - 1.0 / z).sqrt();
        // shafer_eval works in f64, so "exact" means up to rounding
        let v = shafer_eval(&sol, z, exact).unwrap();
        assert!((v - exact).norm() < 1e-13, "{v} vs {exact}");
    }

    #[test]
    fn shafer_reaches_two_sheets() {
        let n = 14;
        let g = markov_germ(n);
        let tuple = crate::hp::power_tuple(&g, 2).unwrap();
        let idx = MultiIndex::balanced(vec![n, n, n], Center::AtInfinity);
        let sol = crate::hp::hp_type1(&tuple, &idx).unwrap();
        let z = Complex64::new(2.0, 0.0);
        let oracle = oracle_sheets(z);
        let v1 = shafer_eval(&sol, z, oracle[0]).unwrap();
        assert!((v1 - oracle[0]).norm() < 1e-8, "sheet 1: {v1} vs {}", oracle[0]);
        let v2 = shafer_eval(&sol, z, oracle[1]).unwrap();
        assert!((v2 - oracle[1]).norm() < 1e-4, "sheet 2: {v2} vs {}", oracle[1]);
    }

    #[test]
    fn shafer_discriminant_positive_beyond_interval() {
        let n = 10;
        let g = markov_germ(n);
        let tuple = crate::hp::power_tuple(&g, 2).unwrap();
        let idx = MultiIndex::balanced(vec![n, n, n], Center::AtInfinity);
        let sol = crate::hp::hp_type1(&tuple, &idx).unwrap();
        for x in [1.8, 2.0, 2.5, 3.0, 5.0] {
            let d = shafer_discriminant(&sol, Complex64::new(x, 0.0)).unwrap();
            assert!(d.re >= 0.0, "discriminant at {x}: {d}");
            assert!(d.im.abs() < 1e-9 * d.re.abs().max(1.0));
        }
    }
}
