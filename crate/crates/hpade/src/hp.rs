//! Linear-algebraic construction of diagonal Pade and type I / type II
//! Hermite-Pade polynomials from germs, plus the derived S-polynomials and
//! the 3x3 determinant representation of the type II solution.
//!
//! Vanishing-order convention: for a germ at infinity, `vanish_order = v`
//! means the remainder is `O(z^{-v})`; for a germ at zero it means
//! `O(zeta^v)`. With polynomial degrees `d_j` the homogeneous system is
//! solvable whenever `v <= sum(d_j + 1) - 1 - max(d_j)` at infinity
//! (`v <= sum(d_j + 1) - 1` at zero); `MultiIndex::balanced` picks the
//! largest such `v`.

use rug::{Complex, Float};

use crate::linalg::null_vector;
use crate::poly::Polynomial;
use crate::precision::{cabs, czero, PrecisionConfig};
use crate::series::{Center, PowerSeries};
use crate::{Error, Result};

/// Degree bounds of one Hermite-Pade system together with the required
/// vanishing order of its remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndex {
    pub degrees: Vec<usize>,
    pub vanish_order: usize,
}

impl MultiIndex {
    pub fn new(degrees: Vec<usize>, vanish_order: usize, center: Center) -> Result<Self> {
        let cap = Self::max_vanish(&degrees, center);
        if vanish_order > cap {
            return Err(Error::InvalidInput(format!(
                "vanish order {vanish_order} exceeds the solvable bound {cap}"
            )));
        }
        Ok(Self {
            degrees,
            vanish_order,
        })
    }

    fn max_vanish(degrees: &[usize], center: Center) -> usize {
        let total: usize = degrees.iter().map(|d| d + 1).sum();
        let max_deg = degrees.iter().copied().max().unwrap_or(0);
        match center {
            Center::AtInfinity => total - 1 - max_deg,
            Center::AtZero => total - 1,
        }
    }

    /// The largest admissible vanishing order for the given degrees.
    pub fn balanced(degrees: Vec<usize>, center: Center) -> Self {
        let vanish_order = Self::max_vanish(&degrees, center);
        Self {
            degrees,
            vanish_order,
        }
    }

    /// Degrees `(n, n, n-1, n-1)` over the tuple `[1, f, f^2, f^3]`.
    pub fn tuple1(n: usize, center: Center) -> Self {
        Self::balanced(vec![n, n, n - 1, n - 1], center)
    }

    /// Degrees `(n, n, n, n-1)` over the tuple `[1, f, f^2, f^3]`.
    pub fn tuple2(n: usize, center: Center) -> Self {
        Self::balanced(vec![n, n, n, n - 1], center)
    }

    /// Degrees `(n, n, n, n)` over the tuple `[1, f, f^2, f^3]`.
    pub fn full(n: usize, center: Center) -> Self {
        Self::balanced(vec![n, n, n, n], center)
    }

    /// Primed variant `k in 1..=3`: component `k` keeps degree `n`, the other
    /// two f-components drop to `n-1`; the constant component stays at `n`.
    pub fn primed(n: usize, k: usize, center: Center) -> Self {
        assert!((1..=3).contains(&k));
        let mut degrees = vec![n, n - 1, n - 1, n - 1];
        degrees[k] = n;
        Self::balanced(degrees, center)
    }
}

/// Output of one Hermite-Pade solve.
#[derive(Debug, Clone)]
pub struct HPSolveReport {
    pub polynomials: Vec<Polynomial>,
    pub index: MultiIndex,
    /// Attained vanishing order (exponent of the first nonzero remainder
    /// coefficient, in the convention of the module docs).
    pub residual_order: usize,
    /// First nonzero remainder coefficient of the normalized solution; zero
    /// when the remainder vanishes identically to the computable depth.
    pub leading_remainder: Complex,
    pub nullity: usize,
}

fn check_common_center(germs: &[PowerSeries]) -> Result<Center> {
    let center = germs[0].center();
    if germs.iter().any(|g| g.center() != center) {
        return Err(Error::CenterMismatch);
    }
    Ok(center)
}

fn germ_scale(germs: &[PowerSeries]) -> Float {
    let bits = germs[0].bits();
    let mut m = Float::with_val(bits, 0);
    for g in germs {
        let s = g.scale();
        if s > m {
            m = s;
        }
    }
    m
}

/// Coefficient of the combination `sum_j Q_j g_j` at exponent `l`, where `l`
/// indexes `z^{-l}` at infinity and `zeta^l` at zero.
fn combination_coeff(
    germs: &[PowerSeries],
    polys: &[Polynomial],
    center: Center,
    l: isize,
    bits: u32,
) -> Complex {
    let mut acc = czero(bits);
    for (g, q) in germs.iter().zip(polys) {
        for (i, qi) in q.coeffs().iter().enumerate() {
            let k = match center {
                Center::AtInfinity => i as isize + l,
                Center::AtZero => l - i as isize,
            };
            if k >= 0 && k as usize <= g.order() {
                acc += Complex::with_val(bits, qi * g.coeff(k as usize));
            }
        }
    }
    acc
}

/// Scan for the first remainder coefficient above `tol`, returning its
/// exponent and value.
fn leading_remainder(
    germs: &[PowerSeries],
    polys: &[Polynomial],
    center: Center,
    l_from: isize,
    l_to: isize,
    tol: &Float,
    bits: u32,
) -> (usize, Complex) {
    for l in l_from..=l_to {
        let r = combination_coeff(germs, polys, center, l, bits);
        if cabs(&r) > *tol {
            return (l.max(0) as usize, r);
        }
    }
    ((l_to + 1).max(0) as usize, czero(bits))
}

/// Type I solve: polynomials `Q_j` with `deg Q_j <= degrees[j]`, not all
/// zero, such that `sum_j Q_j g_j` vanishes to `idx.vanish_order`. The last
/// polynomial is normalized monic.
pub fn hp_type1(germs: &[PowerSeries], idx: &MultiIndex) -> Result<HPSolveReport> {
    if germs.len() != idx.degrees.len() {
        return Err(Error::InvalidInput(format!(
            "{} germs vs {} degree bounds",
            germs.len(),
            idx.degrees.len()
        )));
    }
    let center = check_common_center(germs)?;
    let bits = germs[0].bits();
    let v = idx.vanish_order as isize;
    let max_deg = *idx.degrees.iter().max().unwrap() as isize;
    let l_from = match center {
        Center::AtInfinity => -max_deg,
        Center::AtZero => 0,
    };
    // depth at which each germ still fully determines the needed coefficient
    for (g, &d) in germs.iter().zip(&idx.degrees) {
        let need = match center {
            Center::AtInfinity => d as isize + v - 1,
            Center::AtZero => v - 1,
        };
        if (g.order() as isize) < need {
            return Err(Error::InvalidInput(format!(
                "germ order {} too small; need {need}",
                g.order()
            )));
        }
    }

    let cols: usize = idx.degrees.iter().map(|d| d + 1).sum();
    let mut rows = Vec::with_capacity((v - l_from) as usize);
    for l in l_from..v {
        let mut row = Vec::with_capacity(cols);
        for (g, &d) in germs.iter().zip(&idx.degrees) {
            for i in 0..=d {
                let k = match center {
                    Center::AtInfinity => i as isize + l,
                    Center::AtZero => l - i as isize,
                };
                if k >= 0 && k as usize <= g.order() {
                    row.push(g.coeff(k as usize).clone());
                } else {
                    row.push(czero(bits));
                }
            }
        }
        rows.push(row);
    }
    let nv = null_vector(rows, cols, bits)?;

    let mut polys = Vec::with_capacity(germs.len());
    let mut start = 0usize;
    for &d in &idx.degrees {
        polys.push(Polynomial::new(nv.vector[start..start + d + 1].to_vec()));
        start += d + 1;
    }
    normalize_by_last(&mut polys, bits)?;

    let prec = PrecisionConfig::new(bits)?;
    let mut tol = prec.zero_threshold();
    tol *= Float::with_val(bits, 1).max(&germ_scale(germs));
    let l_to = germs
        .iter()
        .zip(&idx.degrees)
        .map(|(g, &d)| match center {
            Center::AtInfinity => g.order() as isize - d as isize,
            Center::AtZero => g.order() as isize,
        })
        .min()
        .unwrap();
    let (residual_order, lead) =
        leading_remainder(germs, &polys, center, l_from, l_to, &tol, bits);

    Ok(HPSolveReport {
        polynomials: polys,
        index: idx.clone(),
        residual_order,
        leading_remainder: lead,
        nullity: nv.nullity,
    })
}

fn normalize_by_last(polys: &mut [Polynomial], bits: u32) -> Result<()> {
    let prec = PrecisionConfig::new(bits)?;
    let tol = prec.zero_threshold();
    let principal = polys.last().unwrap();
    let lead = match principal.degree(&tol) {
        Some(d) => principal.coeff(d).clone(),
        None => {
            return Err(Error::IllConditioned(
                "principal polynomial vanished; cannot normalize".into(),
            ))
        }
    };
    let inv = Complex::with_val(bits, lead.recip());
    for p in polys.iter_mut() {
        *p = p.scalar_mul(&inv);
    }
    Ok(())
}

/// Diagonal Pade pair: `deg P, deg Q <= n` with `Q g - P` vanishing to the
/// balanced order; `Q` monic.
pub fn pade_pair(g: &PowerSeries, n: usize) -> Result<(Polynomial, Polynomial)> {
    let bits = g.bits();
    let one = PowerSeries::one(g.center(), g.order(), bits);
    let idx = MultiIndex::balanced(vec![n, n], g.center());
    let report = hp_type1(&[one, g.clone()], &idx)?;
    let p = report.polynomials[0].neg();
    let q = report.polynomials[1].clone();
    Ok((p, q))
}

/// Type II solve over `germs = [f, f^2, ..., f^m]`: one denominator `Q` of
/// degree `<= m n` such that each `Q f^k - P_k` vanishes to the paper order
/// (`O(z^{-n-1})` at infinity, `O(zeta^{mn+n+1})` at zero). Returns
/// `[Q, P_1, ..., P_m]` with `Q` monic.
pub fn hp_type2(germs: &[PowerSeries], n: usize) -> Result<HPSolveReport> {
    let m = germs.len();
    if m == 0 {
        return Err(Error::InvalidInput("need at least one germ power".into()));
    }
    let center = check_common_center(germs)?;
    let bits = germs[0].bits();
    let qdeg = m * n;
    let need = qdeg + n;
    for g in germs {
        if g.order() < need {
            return Err(Error::InvalidInput(format!(
                "germ order {} too small; need {need}",
                g.order()
            )));
        }
    }

    let cols = qdeg + 1;
    let mut rows = Vec::with_capacity(m * n);
    for g in germs {
        for l in 1..=n {
            let mut row = Vec::with_capacity(cols);
            for i in 0..=qdeg {
                let k = match center {
                    Center::AtInfinity => i as isize + l as isize,
                    Center::AtZero => (qdeg + l) as isize - i as isize,
                };
                if k >= 0 && k as usize <= g.order() {
                    row.push(g.coeff(k as usize).clone());
                } else {
                    row.push(czero(bits));
                }
            }
            rows.push(row);
        }
    }
    let nv = null_vector(rows, cols, bits)?;
    let mut q = Polynomial::new(nv.vector);
    let prec = PrecisionConfig::new(bits)?;
    let tol = prec.zero_threshold();
    let lead = match q.degree(&tol) {
        Some(d) => q.coeff(d).clone(),
        None => return Err(Error::IllConditioned("type II denominator vanished".into())),
    };
    let inv = Complex::with_val(bits, lead.recip());
    q = q.scalar_mul(&inv);

    // numerators: the polynomial part of Q f^k
    let mut polys = vec![q.clone()];
    for g in germs {
        let mut coeffs = Vec::with_capacity(qdeg + 1);
        for l in 0..=qdeg {
            let c = match center {
                Center::AtInfinity => poly_part_coeff_inf(g, &q, l, bits),
                Center::AtZero => combination_coeff(
                    std::slice::from_ref(g),
                    std::slice::from_ref(&q),
                    center,
                    l as isize,
                    bits,
                ),
            };
            coeffs.push(c);
        }
        polys.push(Polynomial::new(coeffs));
    }

    // remainder scan over all powers k
    let mut scan_tol = prec.zero_threshold();
    scan_tol *= Float::with_val(bits, 1).max(&germ_scale(germs));
    let mut best: Option<(usize, Complex)> = None;
    for g in germs {
        let l_from = match center {
            Center::AtInfinity => 1isize,
            Center::AtZero => (qdeg + 1) as isize,
        };
        let l_to = match center {
            Center::AtInfinity => g.order() as isize - qdeg as isize,
            Center::AtZero => g.order() as isize,
        };
        let (order, lead) = leading_remainder(
            std::slice::from_ref(g),
            std::slice::from_ref(&q),
            center,
            l_from,
            l_to,
            &scan_tol,
            bits,
        );
        if best.as_ref().map(|(o, _)| order < *o).unwrap_or(true) {
            best = Some((order, lead));
        }
    }
    let (residual_order, lead_rem) = best.unwrap();
    let requested = match center {
        Center::AtInfinity => n + 1,
        Center::AtZero => qdeg + n + 1,
    };

    Ok(HPSolveReport {
        polynomials: polys,
        index: MultiIndex {
            degrees: vec![qdeg],
            vanish_order: requested,
        },
        residual_order,
        leading_remainder: lead_rem,
        nullity: nv.nullity,
    })
}

/// Coefficient of `z^{+l}` in `Q(z) g(1/z)`.
fn poly_part_coeff_inf(g: &PowerSeries, q: &Polynomial, l: usize, bits: u32) -> Complex {
    let mut acc = czero(bits);
    for (i, qi) in q.coeffs().iter().enumerate() {
        if i >= l && i - l <= g.order() {
            acc += Complex::with_val(bits, qi * g.coeff(i - l));
        }
    }
    acc
}

/// S-polynomials from two type I solves at the neighboring multiindices
/// `tuple1` and `tuple2`:
/// `S1 = Q_{1,1} Q_{2,3} - Q_{1,3} Q_{2,1}`, `S2 = Q_{1,2} Q_{2,3} - Q_{1,3} Q_{2,2}`
/// (component indices over `[1, f, f^2, f^3]`).
pub fn s_polys(sol1: &HPSolveReport, sol2: &HPSolveReport) -> Result<(Polynomial, Polynomial)> {
    for sol in [sol1, sol2] {
        if sol.polynomials.len() != 4 {
            return Err(Error::InvalidInput(
                "S-polynomials need 4-component type I solutions".into(),
            ));
        }
    }
    let bits = sol1.polynomials[0].bits();
    let prec = PrecisionConfig::new(bits)?;
    let tol = prec.zero_threshold();
    let det2 = |a: &Polynomial, b: &Polynomial, c: &Polynomial, d: &Polynomial| {
        a.mul(d).sub(&c.mul(b))
    };
    let p1 = &sol1.polynomials;
    let p2 = &sol2.polynomials;
    let s1 = det2(&p1[1], &p1[3], &p2[1], &p2[3]);
    let s2 = det2(&p1[2], &p1[3], &p2[2], &p2[3]);
    if s1.is_zero(&tol) || s2.is_zero(&tol) {
        return Err(Error::DegenerateDeterminant);
    }
    Ok((s1, s2))
}

/// Type II polynomials via the 3x3 determinant of type I solutions at the
/// three primed multiindices: `Q = det[Q_{k,j}]_{j=1..3}`, and the first
/// numerator `P_1 = -det` with column 1 replaced by the constant-component
/// polynomials `Q_{k,0}`. Output normalized with `Q` monic.
pub fn type2_via_determinant(
    sols: &[HPSolveReport; 3],
) -> Result<(Polynomial, Polynomial)> {
    for sol in sols.iter() {
        if sol.polynomials.len() != 4 {
            return Err(Error::InvalidInput(
                "determinant representation needs 4-component type I solutions".into(),
            ));
        }
    }
    let bits = sols[0].polynomials[0].bits();
    let prec = PrecisionConfig::new(bits)?;
    let tol = prec.zero_threshold();
    let det3 = |m: [[&Polynomial; 3]; 3]| {
        let minor = |a: &Polynomial, b: &Polynomial, c: &Polynomial, d: &Polynomial| {
            a.mul(d).sub(&c.mul(b))
        };
        let m0 = m[0][0].mul(&minor(m[1][1], m[1][2], m[2][1], m[2][2]));
        let m1 = m[0][1].mul(&minor(m[1][0], m[1][2], m[2][0], m[2][2]));
        let m2 = m[0][2].mul(&minor(m[1][0], m[1][1], m[2][0], m[2][1]));
        m0.sub(&m1).add(&m2)
    };
    let row = |k: usize, j: usize| &sols[k].polynomials[j];
    let q = det3([
        [row(0, 1), row(0, 2), row(0, 3)],
        [row(1, 1), row(1, 2), row(1, 3)],
        [row(2, 1), row(2, 2), row(2, 3)],
    ]);
    let p1 = det3([
        [row(0, 0), row(0, 2), row(0, 3)],
        [row(1, 0), row(1, 2), row(1, 3)],
        [row(2, 0), row(2, 2), row(2, 3)],
    ])
    .neg();
    let qd = match q.degree(&tol) {
        Some(d) => d,
        None => return Err(Error::DegenerateDeterminant),
    };
    let lead = q.coeff(qd).clone();
    let inv = Complex::with_val(bits, lead.recip());
    Ok((q.scalar_mul(&inv), p1.scalar_mul(&inv)))
}

/// Zeros of the degree-`n` partial sum of a germ at zero.
pub fn partial_sum_zeros(g: &PowerSeries, n: usize) -> Result<Vec<num_complex::Complex64>> {
    if g.center() != Center::AtZero {
        return Err(Error::InvalidInput("partial sums expect a germ at zero".into()));
    }
    if g.order() < n {
        return Err(Error::InvalidInput(format!(
            "germ order {} < partial-sum degree {n}",
            g.order()
        )));
    }
    let p = Polynomial::new(g.coeffs()[..=n].to_vec());
    crate::roots::all_roots(&p)
}

/// The power tuple `[1, f, f^2, f^3]` (or shorter) used by the type I solvers.
pub fn power_tuple(f: &PowerSeries, max_power: usize) -> Result<Vec<PowerSeries>> {
    let mut out = vec![PowerSeries::one(f.center(), f.order(), f.bits())];
    let mut cur = PowerSeries::one(f.center(), f.order(), f.bits());
    for _ in 0..max_power {
        cur = cur.mul(f)?;
        out.push(cur.clone());
    }
    Ok(out)
}
