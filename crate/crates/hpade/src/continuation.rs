//! Ground-truth analytic continuation along paths via closed-form branch
//! tracking, zero-cluster geometry, sheet-crossing bookkeeping, and the
//! end-to-end continuation driver built on the recovery schemes.

use num_complex::Complex64;

use crate::approx::{self, TwoSheetSet, ThreeSheetSet};
use crate::hp;
use crate::series::{PowerSeries, SZParams};
use crate::{Error, Result};

/// Polyline along which continuation is performed.
#[derive(Debug, Clone)]
pub struct PathSpec {
    pub waypoints: Vec<Complex64>,
    pub max_step: f64,
}

impl PathSpec {
    pub fn new(waypoints: Vec<Complex64>, max_step: f64) -> Result<Self> {
        if waypoints.is_empty() || max_step <= 0.0 {
            return Err(Error::InvalidInput(
                "path needs waypoints and a positive max step".into(),
            ));
        }
        for pair in waypoints.windows(2) {
            if (pair[0] - pair[1]).norm() == 0.0 {
                return Err(Error::InvalidInput("consecutive waypoints must differ".into()));
            }
        }
        Ok(Self { waypoints, max_step })
    }

    /// Straight real-axis path from 0 to `x`.
    pub fn real_axis(x: f64, max_step: f64) -> Result<Self> {
        Self::new(
            vec![Complex64::new(0.0, 0.0), Complex64::new(x, 0.0)],
            max_step,
        )
    }

    pub fn endpoint(&self) -> Complex64 {
        *self.waypoints.last().unwrap()
    }
}

/// The four branch points of the transformed function in the `zeta` plane:
/// the pair `1/(a +- i b)` inherited from the square-root endpoints, and one
/// `1/(a - i b (A_j + 1/A_j)/2)` per factor.
pub fn branch_points(p: &SZParams) -> Result<Vec<Complex64>> {
    if p.a == 0.0 || p.b == 0.0 {
        return Err(Error::InvalidInput(
            "branch points in zeta require nonzero a, b".into(),
        ));
    }
    let i = Complex64::new(0.0, 1.0);
    let ab = Complex64::new(p.a, p.b);
    let mut out = vec![1.0 / ab, 1.0 / ab.conj()];
    for aj in &p.a_list {
        let zj = 0.5 * (aj + 1.0 / aj);
        out.push(1.0 / (Complex64::new(p.a, 0.0) - i * p.b * zj));
    }
    Ok(out)
}

/// Convergence radius of the germ at zero. Only the square-root pair
/// `1/(a +- i b)` limits the disc: on the principal branch the inner function
/// stays in the closed unit disk, so the factor branch points (which need it
/// to reach `-A_j` with `|A_j| > 1`) sit on the other square-root sheet.
pub fn convergence_radius(p: &SZParams) -> Result<f64> {
    if p.a == 0.0 || p.b == 0.0 {
        return Err(Error::InvalidInput(
            "convergence radius requires nonzero a, b".into(),
        ));
    }
    Ok(1.0 / p.a.hypot(p.b))
}

fn point_segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

fn sample_path(waypoints: &[Complex64], step: f64) -> Vec<Complex64> {
    let mut pts = vec![waypoints[0]];
    for pair in waypoints.windows(2) {
        let len = (pair[1] - pair[0]).norm();
        let n = (len / step).ceil().max(1.0) as usize;
        for k in 1..=n {
            pts.push(pair[0] + (pair[1] - pair[0]) * (k as f64 / n as f64));
        }
    }
    pts
}

/// One pass of branch tracking along sampled points; `None` means the step
/// was too coarse to identify branches unambiguously.
fn track(p: &SZParams, pts: &[Complex64]) -> Option<Complex64> {
    let i = Complex64::new(0.0, 1.0);
    let mut w_prev = Complex64::new(1.0 / p.b, 0.0);
    let mut bases: Vec<Complex64> = p.a_list.clone();
    let mut logs: Vec<Complex64> = bases.iter().map(|b| b.ln()).collect();
    for &zeta in &pts[1..] {
        let u = (Complex64::new(1.0, 0.0) - p.a * zeta) / p.b;
        let wc = (u * u + zeta * zeta).sqrt();
        let dp = (wc - w_prev).norm();
        let dm = (-wc - w_prev).norm();
        let w = if dp <= dm { wc } else { -wc };
        if dp.min(dm) > 0.5 * w_prev.norm().max(1e-6) {
            return None;
        }
        let den = u + w;
        if den.norm() < 1e-12 {
            return None;
        }
        let g = i * zeta / den;
        for (j, aj) in p.a_list.iter().enumerate() {
            let base = aj + g;
            let ratio = base / bases[j];
            if (ratio - Complex64::new(1.0, 0.0)).norm() > 0.5 {
                return None;
            }
            logs[j] += ratio.ln();
            bases[j] = base;
        }
        w_prev = w;
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (alpha, l) in p.alpha_list.iter().zip(&logs) {
        acc += alpha * l;
    }
    Some(acc.exp())
}

/// Weierstrass continuation of the germ at zero along `path`, by monodromy
/// tracking with adaptive step halving until two refinements agree to 1e-10.
pub fn oracle_continue(p: &SZParams, path: &PathSpec) -> Result<Complex64> {
    if path.waypoints[0].norm() > 1e-12 {
        return Err(Error::InvalidInput(
            "continuation path must start at the expansion point zeta = 0".into(),
        ));
    }
    let bps = branch_points(p)?;
    for pair in path.waypoints.windows(2) {
        for bp in &bps {
            if point_segment_distance(*bp, pair[0], pair[1]) < path.max_step {
                return Err(Error::InvalidPath);
            }
        }
    }
    let mut step = path.max_step;
    let mut prev: Option<Complex64> = None;
    for _ in 0..28 {
        match track(p, &sample_path(&path.waypoints, step)) {
            Some(v) => {
                if let Some(pv) = prev {
                    if (v - pv).norm() <= 1e-10 * v.norm().max(1.0) {
                        return Ok(v);
                    }
                }
                prev = Some(v);
            }
            None => prev = None,
        }
        step *= 0.5;
    }
    Err(Error::StepRefinementFailure)
}

/// `phi(z) = z + sqrt(z^2 - 1)` on the branch with `|phi| > 1`.
pub fn zhukovskii_phi(z: Complex64) -> Complex64 {
    let r = (z * z - Complex64::new(1.0, 0.0)).sqrt();
    let w = z + r;
    if w.norm() >= 1.0 {
        w
    } else {
        z - r
    }
}

/// Closed-form values of the real-parameter function on all four sheets, in
/// gluing order: sheet 1 carries the Markov branch, sheet 2 swaps
/// `1/phi <-> phi`, sheets 3 and 4 are their negatives.
pub fn oracle_sheet_values_real(p: &SZParams, z: Complex64) -> Result<[Complex64; 4]> {
    let (a, b) = p.delta2()?;
    let on_real = z.im.abs() < 1e-12;
    if on_real && ((-1.0..=1.0).contains(&z.re) || (a..=b).contains(&z.re)) {
        return Err(Error::BoundaryPoint);
    }
    let phi = zhukovskii_phi(z);
    let s = 1.0 / phi;
    let mut v1 = Complex64::new(1.0, 0.0);
    let mut v2 = Complex64::new(1.0, 0.0);
    for aj in &p.a_list {
        // factored square roots keep the cuts exactly on the two intervals
        v1 /= (aj - s).sqrt();
        v2 /= (aj - phi).sqrt();
    }
    Ok([v1, v2, -v2, -v1])
}

/// Zero-cluster family labels with their sheet-boundary visibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyTag {
    /// Pade denominator zeros: the Stahl set, boundary between sheets 1 and 2.
    StahlS,
    /// Two-sheet scheme: type II denominator zeros, boundary (1,2).
    E2,
    /// Two-sheet scheme: type I component zeros, boundary (2,3).
    F2,
    /// Three-sheet scheme: type II denominator zeros, boundary (1,2).
    E,
    /// Three-sheet scheme: S-polynomial zeros, boundary (2,3).
    F,
    /// Three-sheet scheme: type I last-component zeros, boundary (3,4).
    Eprime,
}

impl FamilyTag {
    /// The pair of sheets glued along this cluster's arc.
    pub fn boundary(self) -> (usize, usize) {
        match self {
            FamilyTag::StahlS | FamilyTag::E2 | FamilyTag::E => (1, 2),
            FamilyTag::F2 | FamilyTag::F => (2, 3),
            FamilyTag::Eprime => (3, 4),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::StahlS => "stahl",
            FamilyTag::E2 => "E2",
            FamilyTag::F2 => "F2",
            FamilyTag::E => "E",
            FamilyTag::F => "F",
            FamilyTag::Eprime => "Eprime",
        }
    }
}

/// A zero cluster reduced to an ordered polyline.
#[derive(Debug, Clone)]
pub struct ClusterArc {
    pub points: Vec<Complex64>,
    pub polyline: Vec<Complex64>,
    pub family_tag: FamilyTag,
}

/// Default outlier rejection factor (multiples of the median nearest-neighbor
/// spacing).
pub const EPS_OUTLIER: f64 = 3.0;

/// Drop outliers from a zero set and chain the survivors into a polyline by
/// nearest-neighbor traversal from the point of smallest real part.
pub fn extract_cluster(
    points: &[Complex64],
    tag: FamilyTag,
    eps_outlier: f64,
) -> Result<ClusterArc> {
    if points.len() < 10 {
        return Err(Error::InvalidInput(format!(
            "cluster extraction needs at least 10 points, got {}",
            points.len()
        )));
    }
    let nn: Vec<f64> = points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            points
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| (p - q).norm())
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    let mut sorted_nn = nn.clone();
    sorted_nn.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let median = sorted_nn[sorted_nn.len() / 2];
    let survivors: Vec<Complex64> = points
        .iter()
        .zip(&nn)
        .filter(|(_, d)| **d <= eps_outlier * median)
        .map(|(p, _)| *p)
        .collect();
    if survivors.len() < 10 {
        return Err(Error::InsufficientCluster {
            survivors: survivors.len(),
            required: 10,
        });
    }
    let start = survivors
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.re.partial_cmp(&b.1.re).unwrap())
        .unwrap()
        .0;
    let mut remaining: Vec<Complex64> = survivors.clone();
    let mut polyline = vec![remaining.swap_remove(start)];
    while !remaining.is_empty() {
        let cur = *polyline.last().unwrap();
        let next = remaining
            .iter()
            .enumerate()
            .min_by(|a, b| {
                (a.1 - cur)
                    .norm()
                    .partial_cmp(&(b.1 - cur).norm())
                    .unwrap()
            })
            .unwrap()
            .0;
        polyline.push(remaining.swap_remove(next));
    }
    Ok(ClusterArc {
        points: survivors,
        polyline,
        family_tag: tag,
    })
}

/// Intersection point of segments `[p1, p2]` and `[q1, q2]`, if any.
fn seg_intersect(p1: Complex64, p2: Complex64, q1: Complex64, q2: Complex64) -> Option<Complex64> {
    let d1 = p2 - p1;
    let d2 = q2 - q1;
    let denom = d1.re * d2.im - d1.im * d2.re;
    if denom.abs() < 1e-15 * (d1.norm() * d2.norm()).max(1e-300) {
        return None;
    }
    // solve p1 + t d1 = q1 + s d2
    let rhs = q1 - p1;
    let t = (rhs.re * d2.im - rhs.im * d2.re) / denom;
    let s = (rhs.re * d1.im - rhs.im * d1.re) / denom;
    if (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&s) {
        Some(p1 + d1 * t)
    } else {
        None
    }
}

/// Intersections of the path polyline with the cluster polyline, ordered
/// along the path; each crossing carries its position parameter.
pub fn crossings_with_params(path: &PathSpec, arc: &ClusterArc) -> Vec<(f64, Complex64)> {
    let mut out = Vec::new();
    for (pi, pseg) in path.waypoints.windows(2).enumerate() {
        for qseg in arc.polyline.windows(2) {
            if let Some(x) = seg_intersect(pseg[0], pseg[1], qseg[0], qseg[1]) {
                let t = (x - pseg[0]).norm() / (pseg[1] - pseg[0]).norm();
                out.push((pi as f64 + t, x));
            }
        }
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    // deduplicate near-coincident hits from adjacent polyline segments
    out.dedup_by(|a, b| (a.1 - b.1).norm() < 1e-9);
    out
}

pub fn crossings(path: &PathSpec, arc: &ClusterArc) -> Vec<Complex64> {
    crossings_with_params(path, arc)
        .into_iter()
        .map(|(_, x)| x)
        .collect()
}

/// Continuation schemes ordered by how many sheets they can reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Pade,
    TwoSheet,
    ThreeSheet,
}

impl Scheme {
    pub fn capability(self) -> usize {
        match self {
            Scheme::Pade => 1,
            Scheme::TwoSheet => 2,
            Scheme::ThreeSheet => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Pade => "pade",
            Scheme::TwoSheet => "two-sheet",
            Scheme::ThreeSheet => "three-sheet",
        }
    }
}

/// Result of an approximant-based continuation.
#[derive(Debug, Clone)]
pub struct ContinuationResult {
    pub value: Complex64,
    /// Effective sheet transitions in path order.
    pub sheet_log: Vec<(Complex64, FamilyTag)>,
    pub method: Scheme,
    pub n: usize,
    pub terminal_sheet: usize,
}

enum SchemeData {
    Pade(crate::poly::Polynomial, crate::poly::Polynomial),
    Two(TwoSheetSet),
    Three(ThreeSheetSet),
}

/// Build the approximants for `scheme`, extract the sheet-boundary clusters,
/// count effective crossings along `path`, and evaluate the terminal-sheet
/// value at the endpoint.
pub fn continue_via_hp(
    germ: &PowerSeries,
    path: &PathSpec,
    n: usize,
    scheme: Scheme,
) -> Result<ContinuationResult> {
    let (data, families): (SchemeData, Vec<(FamilyTag, Vec<Complex64>)>) = match scheme {
        Scheme::Pade => {
            let (p, q) = hp::pade_pair(germ, n)?;
            let zeros = crate::roots::all_roots(&q)?;
            (SchemeData::Pade(p, q), vec![(FamilyTag::StahlS, zeros)])
        }
        Scheme::TwoSheet => {
            let set = TwoSheetSet::build(germ, n)?;
            let e2 = crate::roots::all_roots(set.q2n())?;
            let f2 = crate::roots::all_roots(set.qn2())?;
            (
                SchemeData::Two(set),
                vec![(FamilyTag::E2, e2), (FamilyTag::F2, f2)],
            )
        }
        Scheme::ThreeSheet => {
            let set = ThreeSheetSet::build(germ, n)?;
            let e = crate::roots::all_roots(set.q3n())?;
            let f = crate::roots::all_roots(&set.s2)?;
            let ep = crate::roots::all_roots(set.qfull3())?;
            (
                SchemeData::Three(set),
                vec![
                    (FamilyTag::E, e),
                    (FamilyTag::F, f),
                    (FamilyTag::Eprime, ep),
                ],
            )
        }
    };

    let mut all_crossings: Vec<(f64, Complex64, FamilyTag)> = Vec::new();
    for (tag, zeros) in &families {
        let arc = extract_cluster(zeros, *tag, EPS_OUTLIER)?;
        for (t, x) in crossings_with_params(path, &arc) {
            all_crossings.push((t, x, *tag));
        }
    }
    all_crossings.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

    let mut sheet = 1usize;
    let mut sheet_log = Vec::new();
    for (_, x, tag) in &all_crossings {
        let (lo, hi) = tag.boundary();
        let next = if sheet == lo {
            hi
        } else if sheet == hi {
            lo
        } else {
            continue;
        };
        sheet = next;
        sheet_log.push((*x, *tag));
        if sheet > scheme.capability() {
            return Err(Error::SheetUnreachable {
                scheme: scheme.name().into(),
                sheet,
                family: tag.name().into(),
                at: *x,
            });
        }
    }

    let z = path.endpoint();
    let value = match (&data, sheet) {
        (SchemeData::Pade(p, q), 1) => approx::eval_ratio(p, q, z)?,
        (SchemeData::Two(set), k) => {
            let (f1, f2) = approx::recover_two_sheets(set, z)?;
            if k == 1 {
                f1
            } else {
                f2
            }
        }
        (SchemeData::Three(set), k) => {
            let bv = approx::recover_three_sheets(set, z)?;
            match k {
                1 => bv.f1,
                2 => bv.f2,
                _ => bv.f3,
            }
        }
        _ => unreachable!("sheet within capability by construction"),
    };

    Ok(ContinuationResult {
        value,
        sheet_log,
        method: scheme,
        n,
        terminal_sheet: sheet,
    })
}
