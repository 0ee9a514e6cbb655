//! Logarithmic potential theory on the two intervals: Green functions of the
//! complement of `[-1, 1]`, the scalar equilibrium problem on `[a, b]` with
//! the Green external field, balayage onto `[-1, 1]`, convergence-rate
//! functions, the four-sheet harmonic ordering function, and Kolmogorov
//! comparison of empirical zero measures against predicted limits.
//!
//! Everything here runs in `f64`: the target tolerances (1e-3 .. 1e-6) are
//! far above double-precision roundoff.

use num_complex::Complex64;

use crate::continuation::zhukovskii_phi;
use crate::linalg::solve_f64;
use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;

/// Support label of a discrete measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportTag {
    Delta1,
    Delta2,
    Plane,
}

/// Weighted point set standing in for a measure.
#[derive(Debug, Clone)]
pub struct DiscreteMeasure {
    pub nodes: Vec<Complex64>,
    pub weights: Vec<f64>,
    pub support_tag: SupportTag,
}

impl DiscreteMeasure {
    pub fn new(nodes: Vec<Complex64>, weights: Vec<f64>, support_tag: SupportTag) -> Self {
        assert_eq!(nodes.len(), weights.len());
        Self {
            nodes,
            weights,
            support_tag,
        }
    }

    /// Zero-counting measure `chi(points)/points.len()`.
    pub fn counting(points: &[Complex64]) -> Self {
        let w = 1.0 / points.len() as f64;
        Self::new(points.to_vec(), vec![w; points.len()], SupportTag::Plane)
    }

    pub fn mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Logarithmic potential `V(z) = -sum w_k log|z - t_k|`.
    pub fn potential(&self, z: Complex64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(t, w)| -w * (z - t).norm().ln())
            .sum()
    }

    /// Green potential `G(z) = sum w_k g(z, t_k)` for the complement of
    /// `[-1, 1]`.
    pub fn green_potential(&self, z: Complex64) -> Result<f64> {
        let mut acc = 0.0;
        for (t, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * green_delta1(z, Some(*t))?;
        }
        Ok(acc)
    }
}

fn on_delta1(z: Complex64) -> bool {
    z.im.abs() < 1e-14 && z.re.abs() <= 1.0 + 1e-14
}

/// Green function of the complement of `[-1, 1]` with pole at infinity
/// (`None`) or at a finite point. Points on the interval return 0 by
/// continuity; evaluation at the pole itself returns infinity.
pub fn green_delta1(z: Complex64, pole: Option<Complex64>) -> Result<f64> {
    let w = zhukovskii_phi(z);
    match pole {
        None => Ok(w.norm().ln().max(0.0)),
        Some(p) => {
            if on_delta1(p) {
                return Err(Error::InvalidInput(
                    "Green pole must lie off the interval".into(),
                ));
            }
            if (z - p).norm() == 0.0 {
                return Ok(f64::INFINITY);
            }
            if on_delta1(z) {
                return Ok(0.0);
            }
            let wp = zhukovskii_phi(p);
            Ok(((w * wp.conj() - 1.0).norm() / (w - wp).norm()).ln())
        }
    }
}

/// Gauss-Chebyshev discretization of the arcsine (Robin) measure of
/// `[-1, 1]`.
pub fn robin_measure(n: usize) -> Result<DiscreteMeasure> {
    if n < 2 {
        return Err(Error::InvalidInput("need at least 2 nodes".into()));
    }
    let nodes = (0..n)
        .map(|k| {
            let th = (2 * k + 1) as f64 * PI / (2 * n) as f64;
            Complex64::new(th.cos(), 0.0)
        })
        .collect();
    Ok(DiscreteMeasure::new(
        nodes,
        vec![1.0 / n as f64; n],
        SupportTag::Delta1,
    ))
}

/// Harmonic-measure density of the complement of `[-1, 1]` seen from `t`,
/// with respect to `d psi / pi` at the boundary point `cos(psi)` (both sides
/// of the cut folded together).
fn balayage_density(t: Complex64, psi: f64) -> f64 {
    let w0 = zhukovskii_phi(t);
    let e = Complex64::new(psi.cos(), psi.sin());
    let k = w0.norm_sqr() - 1.0;
    0.5 * k * (1.0 / (w0 - e).norm_sqr() + 1.0 / (w0 - e.conj()).norm_sqr())
}

/// Regularized Green kernel `g(z, t) + log|z - t|`, smooth across the
/// diagonal; used when both arguments lie on the same interval.
fn green_regular(z: Complex64, t: Complex64) -> Result<f64> {
    if (z - t).norm() > 1e-9 {
        return Ok(green_delta1(z, Some(t))? + (z - t).norm().ln());
    }
    // diagonal limit: log(|w|^2 - 1) - log|phi'(z)|, phi' = phi/sqrt(z^2-1)
    let w = zhukovskii_phi(z);
    let dphi = w / (z * z - Complex64::new(1.0, 0.0)).sqrt();
    Ok((w.norm_sqr() - 1.0).ln() - dphi.norm().ln())
}

/// Number of Chebyshev angles used for measures discretized on `[-1, 1]`.
const DELTA1_NODES: usize = 400;

fn chebyshev_angles(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| (2 * k + 1) as f64 * PI / (2 * n) as f64)
        .collect()
}

/// Balayage of a measure with nodes off `[-1, 1]` onto the interval,
/// preserving mass and the exterior potential up to a constant.
pub fn balayage_delta1(mu: &DiscreteMeasure) -> Result<DiscreteMeasure> {
    for t in &mu.nodes {
        if on_delta1(*t) {
            return Err(Error::InvalidInput(
                "balayage source node lies on the interval".into(),
            ));
        }
    }
    let angles = chebyshev_angles(DELTA1_NODES);
    let mut weights = vec![0.0; angles.len()];
    for (t, w) in mu.nodes.iter().zip(&mu.weights) {
        for (l, psi) in angles.iter().enumerate() {
            weights[l] += w * balayage_density(*t, *psi) / DELTA1_NODES as f64;
        }
    }
    let nodes = angles.iter().map(|p| Complex64::new(p.cos(), 0.0)).collect();
    Ok(DiscreteMeasure::new(nodes, weights, SupportTag::Delta1))
}

/// Equilibrium data for the interval `[a, b]` under the external Green
/// field, together with the derived measures on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct EquilibriumSolution {
    pub lambda: DiscreteMeasure,
    pub lambda1: DiscreteMeasure,
    pub lambda2: DiscreteMeasure,
    pub gamma: f64,
    pub residual: f64,
    pub a: f64,
    pub b: f64,
    /// Cosine coefficients of the angular density of `lambda`
    /// (`d lambda = (1/pi) sum beta_j cos(j theta) d theta`, `t = m + r cos theta`).
    pub beta: Vec<f64>,
    /// Cosine coefficients of the angular density of `lambda1` on `[-1, 1]`.
    pub beta1: Vec<f64>,
    c1: f64,
    c2: f64,
    c3: f64,
}

/// Collocation node families for the spectral solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeFamily {
    Chebyshev,
    Legendre,
}

fn gauss_legendre_angles(n: usize) -> Vec<f64> {
    // roots of the Legendre polynomial on [-1, 1] by Newton iteration,
    // mapped to angles theta = acos(x)
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut x = (PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0f64, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        out.push(x.acos());
    }
    out.sort_by(|u, v| u.partial_cmp(v).unwrap());
    out
}

/// On-interval potential of the cosine-series density: for `x = m + r cos(psi)`,
/// `V(psi) = -beta_0 log(r/2) + sum_{j>=1} beta_j cos(j psi)/j`.
fn series_potential(beta: &[f64], r: f64, psi: f64) -> f64 {
    let mut v = -beta[0] * (r / 2.0).ln();
    for (j, bj) in beta.iter().enumerate().skip(1) {
        v += bj * (j as f64 * psi).cos() / j as f64;
    }
    v
}

fn density_value(beta: &[f64], theta: f64) -> f64 {
    beta.iter()
        .enumerate()
        .map(|(j, bj)| bj * (j as f64 * theta).cos())
        .sum()
}

/// Solve the equilibrium problem on `[a, b]`: find the unit measure `lambda`
/// with `V^lambda + G^lambda + g(., infinity) = gamma` there, then form
/// `lambda1` (balayage onto `[-1, 1]`) and `lambda2 = (2 tau + lambda1)/3`.
pub fn solve_equilibrium(a: f64, b: f64, n_colloc: usize) -> Result<EquilibriumSolution> {
    solve_equilibrium_with(a, b, n_colloc, NodeFamily::Chebyshev)
}

pub fn solve_equilibrium_with(
    a: f64,
    b: f64,
    n_colloc: usize,
    family: NodeFamily,
) -> Result<EquilibriumSolution> {
    if !(1.0 < a && a < b) {
        return Err(Error::InvalidInput("need 1 < a < b".into()));
    }
    if n_colloc < 8 {
        return Err(Error::InvalidInput("need at least 8 collocation nodes".into()));
    }
    let m = 0.5 * (a + b);
    let r = 0.5 * (b - a);
    let nb = n_colloc; // cosine-basis size (j = 0 .. nb-1)
    let quad = (4 * nb).max(256);
    let qangles = chebyshev_angles(quad);
    let psis = match family {
        NodeFamily::Chebyshev => chebyshev_angles(nb),
        NodeFamily::Legendre => gauss_legendre_angles(nb),
    };

    // unknowns: beta_0 .. beta_{nb-1}, gamma
    let dim = nb + 1;
    let mut mat = vec![vec![0.0; dim]; dim];
    let mut rhs = vec![0.0; dim];
    for (i, &psi) in psis.iter().enumerate() {
        let x = Complex64::new(m + r * psi.cos(), 0.0);
        // the Green kernel has the same -log|x - t| singularity as the
        // logarithmic one; both log parts are summed exactly through the
        // cosine series, leaving a smooth remainder for quadrature
        mat[i][0] += -2.0 * (r / 2.0).ln();
        for j in 1..nb {
            mat[i][j] += 2.0 * (j as f64 * psi).cos() / j as f64;
        }
        for &theta in &qangles {
            let t = Complex64::new(m + r * theta.cos(), 0.0);
            let h = green_regular(x, t)?;
            for j in 0..nb {
                mat[i][j] += h * (j as f64 * theta).cos() / quad as f64;
            }
        }
        mat[i][nb] = -1.0; // -gamma
        rhs[i] = -green_delta1(x, None)?;
    }
    // mass constraint beta_0 = 1
    mat[nb][0] = 1.0;
    rhs[nb] = 1.0;
    let sol = solve_f64(mat, rhs).map_err(|e| match e {
        Error::IllConditioned(msg) => Error::IllConditioned(format!(
            "equilibrium collocation at {n_colloc} nodes: {msg}"
        )),
        other => other,
    })?;
    let beta: Vec<f64> = sol[..nb].to_vec();
    let gamma = sol[nb];

    // residual on a denser off-grid check set
    let check = chebyshev_angles(3 * nb + 7);
    let mut residual = 0.0f64;
    for &psi in &check {
        let x = Complex64::new(m + r * psi.cos(), 0.0);
        let mut lhs = 2.0 * series_potential(&beta, r, psi);
        for &theta in &qangles {
            let t = Complex64::new(m + r * theta.cos(), 0.0);
            lhs += density_value(&beta, theta) * green_regular(x, t)? / quad as f64;
        }
        lhs += green_delta1(x, None)?;
        residual = residual.max((lhs - gamma).abs());
    }

    // discrete carrier of lambda
    let kq = quad;
    let lnodes: Vec<Complex64> = qangles
        .iter()
        .map(|&th| Complex64::new(m + r * th.cos(), 0.0))
        .collect();
    let lweights: Vec<f64> = qangles
        .iter()
        .map(|&th| density_value(&beta, th) / kq as f64)
        .collect();
    if lweights.iter().any(|w| *w < -1e-9) {
        return Err(Error::IllConditioned(
            "equilibrium density came out negative; refine the grid".into(),
        ));
    }
    let lambda = DiscreteMeasure::new(lnodes, lweights, SupportTag::Delta2);

    let lambda1 = balayage_delta1(&lambda)?;
    let l2weights: Vec<f64> = lambda1
        .weights
        .iter()
        .map(|w1| (2.0 / DELTA1_NODES as f64 + w1) / 3.0)
        .collect();
    let lambda2 = DiscreteMeasure::new(lambda1.nodes.clone(), l2weights, SupportTag::Delta1);

    // cosine coefficients of the lambda1 angular density, for exact on-cut
    // potentials: f1(psi) = sum_k w_k * density(t_k, psi)
    let nb1 = 64usize;
    let mut beta1 = vec![0.0; nb1];
    let dct_angles = chebyshev_angles(4 * nb1);
    for &psi in &dct_angles {
        let mut f = 0.0;
        for (t, w) in lambda.nodes.iter().zip(&lambda.weights) {
            f += w * balayage_density(*t, psi);
        }
        for (j, bj) in beta1.iter_mut().enumerate() {
            let scale = if j == 0 { 1.0 } else { 2.0 };
            *bj += scale * f * (j as f64 * psi).cos() / dct_angles.len() as f64;
        }
    }

    // gluing constants of the four-sheet harmonic function, fixed by
    // continuity at the cut midpoints (0 on [-1,1]; (a+b)/2 on [a,b])
    let zero = Complex64::new(0.0, 0.0);
    let v_l_0 = lambda.potential(zero);
    let v_l1_0 = series_potential(&beta1, 1.0, PI / 2.0);
    let v_l2_0 = (2.0 * 2.0f64.ln() + v_l1_0) / 3.0;
    let c1 = 3.0 * v_l2_0 - v_l_0;
    let c3 = v_l1_0 - v_l_0;
    let xm = Complex64::new(m, 0.0);
    let v_l_m = series_potential(&beta, r, PI / 2.0);
    let v_l1_m = lambda1.potential(xm);
    let v_l2_m = lambda2.potential(xm);
    let c2 = 4.0 * v_l_m - 3.0 * v_l2_m - v_l1_m;

    Ok(EquilibriumSolution {
        lambda,
        lambda1,
        lambda2,
        gamma,
        residual,
        a,
        b,
        beta,
        beta1,
        c1,
        c2,
        c3,
    })
}

impl EquilibriumSolution {
    fn check_off_supports(&self, z: Complex64) -> Result<()> {
        if z.im.abs() < 1e-10
            && (z.re.abs() <= 1.0 + 1e-10 || (self.a - 1e-10..=self.b + 1e-10).contains(&z.re))
        {
            return Err(Error::BoundaryPoint);
        }
        Ok(())
    }

    /// Convergence-rate functions `(delta1, delta2, delta3)` at a point off
    /// both intervals.
    pub fn rate_functions(&self, z: Complex64) -> Result<(f64, f64, f64)> {
        self.check_off_supports(z)?;
        let g_inf = green_delta1(z, None)?;
        let g_l = self.lambda.green_potential(z)?;
        let v_l = self.lambda.potential(z);
        let d1 = (-(g_l + 2.0 * g_inf)).exp();
        let d2 = (2.0 * (v_l + g_l + g_inf - self.gamma)).exp();
        let d3 = (-2.0 * g_l).exp();
        Ok((d1, d2, d3))
    }

    /// The four-sheet harmonic ordering function: `-3 log|z|` growth on
    /// sheet 1, `+log|z|` on sheets 2..4, glued continuously across the cuts.
    pub fn nuttall_u(&self, sheet: usize, z: Complex64) -> Result<f64> {
        if !(1..=4).contains(&sheet) {
            return Err(Error::InvalidInput("sheet index must be 1..4".into()));
        }
        self.check_off_supports(z)?;
        let v_l = self.lambda.potential(z);
        let v_l1 = self.lambda1.potential(z);
        let v_l2 = self.lambda2.potential(z);
        Ok(match sheet {
            1 => 3.0 * v_l2,
            2 => 2.0 * v_l - 3.0 * v_l2 + 2.0 * self.c1,
            3 => v_l1 - 2.0 * v_l + 2.0 * self.c1 + self.c2,
            _ => -v_l1 + 2.0 * self.c1 + self.c2 + 2.0 * self.c3,
        })
    }

    /// Harmonic ordering values on both edges of the `[a, b]` cut, for the
    /// sheet-2/3 gluing check: sheets 2 and 3 share boundary values there.
    pub fn nuttall_u_on_delta2(&self, x: f64, sheet: usize) -> Result<f64> {
        if !(self.a..=self.b).contains(&x) {
            return Err(Error::InvalidInput("point must lie on [a, b]".into()));
        }
        let r = 0.5 * (self.b - self.a);
        let m = 0.5 * (self.a + self.b);
        let psi = ((x - m) / r).clamp(-1.0, 1.0).acos();
        let v_l = series_potential(&self.beta, r, psi);
        let p = Complex64::new(x, 0.0);
        let v_l1 = self.lambda1.potential(p);
        let v_l2 = self.lambda2.potential(p);
        Ok(match sheet {
            2 => 2.0 * v_l - 3.0 * v_l2 + 2.0 * self.c1,
            3 => v_l1 - 2.0 * v_l + 2.0 * self.c1 + self.c2,
            _ => return Err(Error::InvalidInput("gluing check covers sheets 2 and 3".into())),
        })
    }
}

/// Kolmogorov (sup-CDF) distance between two measures on a common real
/// interval, after normalizing both to unit mass. Complex empirical points
/// are projected to their real parts once near-realness is asserted.
pub fn measure_distance(emp: &DiscreteMeasure, target: &DiscreteMeasure) -> Result<f64> {
    let max_imag = emp
        .nodes
        .iter()
        .chain(&target.nodes)
        .map(|z| z.im.abs())
        .fold(0.0f64, f64::max);
    if max_imag > 1e-6 {
        return Err(Error::SupportViolation { max_imag });
    }
    let project = |mu: &DiscreteMeasure| -> Vec<(f64, f64)> {
        let total = mu.mass();
        let mut pts: Vec<(f64, f64)> = mu
            .nodes
            .iter()
            .zip(&mu.weights)
            .map(|(z, w)| (z.re, w / total))
            .collect();
        pts.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        pts
    };
    let pa = project(emp);
    let pb = project(target);
    let cdf = |pts: &[(f64, f64)], x: f64| -> f64 {
        pts.iter()
            .take_while(|(t, _)| *t <= x)
            .map(|(_, w)| w)
            .sum()
    };
    let mut d = 0.0f64;
    for (x, _) in pa.iter().chain(pb.iter()) {
        d = d.max((cdf(&pa, *x) - cdf(&pb, *x)).abs());
    }
    Ok(d)
}
