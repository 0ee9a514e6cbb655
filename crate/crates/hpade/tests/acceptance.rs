//! Acceptance gate for the whole pipeline: thirteen criteria covering zero
//! distributions, convergence rates, branch recovery, the determinant
//! identity, the harmonic ordering, the three end-to-end continuation
//! examples, partial-sum zeros, and index normality. Prints one PASS/FAIL
//! line per criterion (visible with `-- --nocapture` or on failure).

use std::collections::BTreeMap;
use std::time::Instant;

use hpade::approx::{recover_three_sheets, ThreeSheetSet};
use hpade::continuation::{
    continue_via_hp, convergence_radius, oracle_continue, oracle_sheet_values_real, FamilyTag,
    PathSpec, Scheme,
};
use hpade::hp::{self, MultiIndex};
use hpade::poly::Polynomial;
use hpade::potential::{
    green_delta1, measure_distance, robin_measure, solve_equilibrium, DiscreteMeasure,
    EquilibriumSolution,
};
use hpade::precision::{cabs, PrecisionConfig};
use hpade::presets::by_name;
use hpade::roots::all_roots;
use hpade::series::{default_order, germ_at_infinity, Center, SZParams};
use hpade::Error;
use num_complex::Complex64;
use rug::{Complex, Float};

const A_END: f64 = 1.25;
const B_END: f64 = 5.0 / 3.0;

/// Bit budget for criteria that exercise the type I solver: its linear
/// systems lose close to 20 bits per order, so the default budget is topped
/// up well past the loss.
fn generous_bits(n: usize) -> u32 {
    256 + 28 * n as u32
}

struct Crit {
    ok: bool,
    detail: String,
}

fn crit(ok: bool, detail: String) -> Crit {
    Crit { ok, detail }
}

fn fail_err(e: &Error) -> Crit {
    crit(false, format!("error: {e}"))
}

fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let num: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

/// Decreasing trend over a short sequence: strictly lower at the end and a
/// negative fitted slope.
fn decreasing_trend(d: &[f64]) -> bool {
    let xs: Vec<f64> = (0..d.len()).map(|k| k as f64).collect();
    d.last().unwrap() < d.first().unwrap() && slope(&xs, d) < 0.0
}

fn trimmed_degree(p: &Polynomial) -> Option<usize> {
    let tol = PrecisionConfig::new(p.bits()).unwrap().zero_threshold();
    p.degree(&tol)
}

fn real_roots_in_open_interval(roots: &[Complex64], lo: f64, hi: f64) -> bool {
    roots
        .iter()
        .all(|z| z.im.abs() < 1e-8 && lo < z.re && z.re < hi)
}

/// Multiprecision sheet-1/2 values of the two-point function at a point, by
/// the same factored-square-root closed form as the f64 oracle.
fn mp_sheets(p: &SZParams, z: Complex64, bits: u32) -> (Complex, Complex) {
    let zz = Complex::with_val(bits, (z.re, z.im));
    let one = Complex::with_val(bits, (1, 0));
    let r = Complex::with_val(bits, zz.clone().square() - &one).sqrt();
    let mut phi = Complex::with_val(bits, &zz + &r);
    if cabs(&phi).to_f64() < 1.0 {
        phi = Complex::with_val(bits, &zz - &r);
    }
    let s = Complex::with_val(bits, phi.clone().recip());
    let value = |w: &Complex| {
        let mut acc = Complex::with_val(bits, (1, 0));
        for aj in &p.a_list {
            let factor = Complex::with_val(bits, Complex::with_val(bits, (aj.re, aj.im)) - w)
                .sqrt();
            acc /= factor;
        }
        acc
    };
    (value(&s), value(&phi))
}

fn mp_ratio(num: &Polynomial, den: &Polynomial, z: Complex64) -> Complex {
    let bits = num.bits();
    let zz = Complex::with_val(bits, (z.re, z.im));
    Complex::with_val(bits, num.eval(&zz) / den.eval(&zz))
}

fn log_abs(v: &Complex) -> f64 {
    let a = cabs(v);
    // exponent-aware log so values far below f64 range survive
    let exp = a.get_exp().unwrap_or(0);
    let mantissa = Float::with_val(64, &a >> exp).to_f64();
    mantissa.ln() + exp as f64 * std::f64::consts::LN_2
}

struct RealCase {
    params: SZParams,
    sets: BTreeMap<usize, ThreeSheetSet>,
}

impl RealCase {
    fn build(ns: &[usize]) -> Self {
        let params = SZParams::markov(2.0, 3.0).unwrap();
        let mut sets = BTreeMap::new();
        for &n in ns {
            let prec = PrecisionConfig::new(generous_bits(n)).unwrap();
            let germ = germ_at_infinity(&params, default_order(n), prec).unwrap();
            sets.insert(n, ThreeSheetSet::build(&germ, n).unwrap());
        }
        Self { params, sets }
    }
}

fn criterion_pade_zero_distribution(rc: &RealCase) -> Crit {
    let t0 = Instant::now();
    let prec = PrecisionConfig::new(640).unwrap();
    let germ = match germ_at_infinity(&rc.params, default_order(40), prec) {
        Ok(g) => g,
        Err(e) => return fail_err(&e),
    };
    let tau = robin_measure(400).unwrap();
    let mut dists = Vec::new();
    let mut poles_ok = true;
    for n in [10usize, 20, 30, 40] {
        let (_p, q) = match hp::pade_pair(&germ, n) {
            Ok(r) => r,
            Err(e) => return fail_err(&e),
        };
        let roots = match all_roots(&q) {
            Ok(r) => r,
            Err(e) => return fail_err(&e),
        };
        if n == 40 {
            poles_ok = roots.len() == 40 && real_roots_in_open_interval(&roots, -1.0, 1.0);
        }
        match measure_distance(&DiscreteMeasure::counting(&roots), &tau) {
            Ok(d) => dists.push(d),
            Err(e) => return fail_err(&e),
        }
    }
    let strictly_dec = dists.windows(2).all(|w| w[1] < w[0]);
    let elapsed = t0.elapsed().as_secs_f64();
    let ok = poles_ok && strictly_dec && dists[3] < 0.15 && elapsed < 60.0;
    crit(
        ok,
        format!(
            "poles real in (-1,1): {poles_ok}; arcsine distances {:?} strictly decreasing: {strictly_dec}; {elapsed:.1}s at 640 bits",
            dists.iter().map(|d| format!("{d:.4}")).collect::<Vec<_>>()
        ),
    )
}

fn criterion_type2_zero_distribution(rc: &RealCase, sol: &EquilibriumSolution) -> Crit {
    let mut dists = Vec::new();
    let mut structure_ok = true;
    let mut detail_notes = Vec::new();
    for n in [10usize, 20, 30, 40] {
        let q = rc.sets[&n].q3n();
        if trimmed_degree(q) != Some(3 * n) {
            structure_ok = false;
            detail_notes.push(format!("deg Q at n={n} is {:?}", trimmed_degree(q)));
        }
        let mut roots = match all_roots(q) {
            Ok(r) => r,
            Err(e) => return fail_err(&e),
        };
        if !real_roots_in_open_interval(&roots, -1.0, 1.0) {
            structure_ok = false;
            detail_notes.push(format!("off-interval roots at n={n}"));
        }
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        if roots.windows(2).any(|w| (w[1].re - w[0].re) <= 1e-8) {
            structure_ok = false;
            detail_notes.push(format!("root gap below 1e-8 at n={n}"));
        }
        match measure_distance(&DiscreteMeasure::counting(&roots), &sol.lambda2) {
            Ok(d) => dists.push(d),
            Err(e) => return fail_err(&e),
        }
    }
    let trend = decreasing_trend(&dists);
    let ok = structure_ok && trend && dists[3] < 0.15;
    crit(
        ok,
        format!(
            "structure ok: {structure_ok}{}; lambda2 distances {:?} trend down: {trend}",
            if detail_notes.is_empty() {
                String::new()
            } else {
                format!(" ({})", detail_notes.join("; "))
            },
            dists.iter().map(|d| format!("{d:.4}")).collect::<Vec<_>>()
        ),
    )
}

fn criterion_type1_zero_distribution(rc: &RealCase, sol: &EquilibriumSolution) -> Crit {
    let mut deg_ok = true;
    let mut interval_ok = true;
    let mut off_counts = Vec::new();
    let mut dists: Vec<Vec<f64>> = vec![Vec::new(); 4];
    for n in [10usize, 20, 30, 40] {
        for (j, q) in rc.sets[&n].type1_full.polynomials.iter().enumerate() {
            if trimmed_degree(q) != Some(n) {
                deg_ok = false;
            }
            let roots = match all_roots(q) {
                Ok(r) => r,
                Err(Error::RootFinderFailure { partial, .. }) => partial,
                Err(e) => return fail_err(&e),
            };
            let off = roots
                .iter()
                .filter(|z| z.im.abs() >= 1e-8 || z.re.abs() >= 1.0)
                .count();
            if off > 0 {
                interval_ok = false;
            }
            if n == 40 {
                off_counts.push(off);
            }
            // the distance trend is still informative with stragglers
            // present, as long as every root is near the real axis
            match measure_distance(&DiscreteMeasure::counting(&roots), &sol.lambda1) {
                Ok(d) => dists[j].push(d),
                Err(_) => dists[j].push(f64::NAN),
            }
        }
    }
    let trend_ok = dists
        .iter()
        .all(|d| d.iter().all(|x| x.is_finite()) && decreasing_trend(d));
    let ok = deg_ok && interval_ok && trend_ok;
    crit(
        ok,
        format!(
            "deg = n for all components: {deg_ok}; all roots in (-1,1): {interval_ok} (off-interval per component at n=40: {off_counts:?}); lambda1 distance trend down: {trend_ok}"
        ),
    )
}

fn criterion_s_poly_zero_distribution(rc: &RealCase, sol: &EquilibriumSolution) -> Crit {
    let set = &rc.sets[&40];
    let mut ok = true;
    let mut details = Vec::new();
    for (name, s) in [("S1", &set.s1), ("S2", &set.s2)] {
        let roots = match all_roots(s) {
            Ok(r) => r,
            Err(e) => return fail_err(&e),
        };
        let stragglers = roots
            .iter()
            .filter(|z| {
                z.im.abs() >= 1e-6 || z.re < A_END - 1e-6 || z.re > B_END + 1e-6
            })
            .count();
        let dist = match measure_distance(&DiscreteMeasure::counting(&roots), &sol.lambda) {
            Ok(d) => d,
            Err(e) => return fail_err(&e),
        };
        if stragglers > 2 || dist >= 0.15 {
            ok = false;
        }
        details.push(format!("{name}: {stragglers} stragglers, lambda distance {dist:.4}"));
    }
    crit(ok, details.join("; "))
}

fn criterion_convergence_rates(rc: &RealCase, sol: &EquilibriumSolution) -> Crit {
    let z = Complex64::new(0.0, 2.0);
    let (d1, d2, d3) = match sol.rate_functions(z) {
        Ok(v) => v,
        Err(e) => return fail_err(&e),
    };
    let d_pade = (-2.0 * green_delta1(z, None).unwrap()).exp();

    // Pade errors from a dedicated 640-bit germ; the approximant families
    // come from the shared per-order solve sets
    let prec = PrecisionConfig::new(640).unwrap();
    let germ640 = germ_at_infinity(&rc.params, default_order(40), prec).unwrap();
    let ns = [15usize, 20, 25, 30, 35, 40];
    let xs: Vec<f64> = ns.iter().map(|&n| n as f64).collect();
    let mut logs: [Vec<f64>; 4] = Default::default();
    for &n in &ns {
        let set = &rc.sets[&n];
        let bits = set.q3n().bits();
        let (f1, f2) = mp_sheets(&rc.params, z, bits);
        let f12 = Complex::with_val(bits, &f1 + &f2);

        let (p, q) = hp::pade_pair(&germ640, n).unwrap();
        let (f1_640, _) = mp_sheets(&rc.params, z, 640);
        logs[0].push(log_abs(&Complex::with_val(
            640,
            mp_ratio(&p, &q, z) - &f1_640,
        )));
        logs[1].push(log_abs(&Complex::with_val(
            bits,
            mp_ratio(&set.type2.polynomials[1], &set.type2.polynomials[0], z) - &f1,
        )));
        logs[2].push(log_abs(&Complex::with_val(
            bits,
            mp_ratio(&set.s1, &set.s2, z) + &f12,
        )));
        // with f3 = -f2 the telescoped target for the last ratio is -f1
        logs[3].push(log_abs(&Complex::with_val(
            bits,
            mp_ratio(
                &set.type1_full.polynomials[2],
                &set.type1_full.polynomials[3],
                z,
            ) + &f1,
        )));
    }
    let targets = [d_pade.ln(), d1.ln(), d2.ln(), d3.ln()];
    let names = ["pade", "type2", "s-ratio", "type1"];
    let mut ok = true;
    let mut details = Vec::new();
    for k in 0..4 {
        let s = slope(&xs, &logs[k]);
        let within = (s - targets[k]).abs() <= 0.2 * targets[k].abs();
        if !within {
            ok = false;
        }
        details.push(format!(
            "{}: slope {:.4} vs log-rate {:.4}",
            names[k], s, targets[k]
        ));
    }
    crit(ok, details.join("; "))
}

fn criterion_branch_recovery(rc: &RealCase) -> Crit {
    let set = &rc.sets[&40];
    let mut ok = true;
    let mut details = Vec::new();
    for z in [
        Complex64::new(2.0, 0.0),
        Complex64::new(3.0, 1.0),
        Complex64::new(-2.0, 2.0),
    ] {
        let bv = match recover_three_sheets(set, z) {
            Ok(v) => v,
            Err(e) => return fail_err(&e),
        };
        let oracle = match oracle_sheet_values_real(&rc.params, z) {
            Ok(v) => v,
            Err(e) => return fail_err(&e),
        };
        let errs = [
            (bv.f1 - oracle[0]).norm(),
            (bv.f2 - oracle[1]).norm(),
            (bv.f3 - oracle[2]).norm(),
        ];
        let worst = errs.iter().cloned().fold(0.0f64, f64::max);
        if worst >= 1e-4 {
            ok = false;
        }
        details.push(format!("z={z}: worst sheet error {worst:.2e}"));
    }
    crit(ok, details.join("; "))
}

fn criterion_determinant_identity(rc: &RealCase) -> Crit {
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for n in 1..=10usize {
        let bits = 640u32;
        let prec = PrecisionConfig::new(bits).unwrap();
        let germ = germ_at_infinity(&rc.params, default_order(n), prec).unwrap();
        let tuple = hp::power_tuple(&germ, 3).unwrap();
        let sols: [hp::HPSolveReport; 3] = [1, 2, 3].map(|k| {
            hp::hp_type1(&tuple, &MultiIndex::primed(n, k, Center::AtInfinity)).unwrap()
        });
        let (q_det, p_det) = match hp::type2_via_determinant(&sols) {
            Ok(v) => v,
            Err(e) => return fail_err(&e),
        };
        let direct = match hp::hp_type2(&tuple[1..], n) {
            Ok(v) => v,
            Err(e) => return fail_err(&e),
        };
        // normalize the direct solution the same way: monic denominator
        let qd = trimmed_degree(&direct.polynomials[0]).unwrap();
        let lead = direct.polynomials[0].coeff(qd).clone();
        let inv = Complex::with_val(bits, lead.recip());
        let q_dir = direct.polynomials[0].scalar_mul(&inv);
        let p_dir = direct.polynomials[1].scalar_mul(&inv);
        let mut res = Float::with_val(bits, 0);
        for (a, b) in [(&q_det, &q_dir), (&p_det, &p_dir)] {
            let d = a.sub(b);
            let scale = a.scale().max(&b.scale());
            let r = Float::with_val(bits, d.scale() / scale);
            if r > res {
                res = r;
            }
        }
        let thresh = {
            let mut t = Float::with_val(bits, 1u32);
            t >>= bits / 4;
            t
        };
        if res > thresh {
            ok = false;
        }
        let rf = res.to_f64();
        worst = worst.max(rf);
    }
    crit(ok, format!("worst relative coefficient residual {worst:.2e} over n <= 10"))
}

fn criterion_harmonic_ordering(sol: &EquilibriumSolution) -> Crit {
    // 100 off-cut points: 10 x 10 grid with |Im| >= 0.4
    let mut ordering_ok = true;
    for i in 0..10 {
        for j in 0..10 {
            let x = -2.7 + 0.6 * i as f64;
            let y = 0.4 + 0.3 * (j % 5) as f64;
            let y = if j < 5 { y } else { -y };
            let z = Complex64::new(x, y);
            let u: Vec<f64> = (1..=4)
                .map(|s| sol.nuttall_u(s, z).unwrap())
                .collect();
            if !(u[0] < u[1] && u[1] < u[2] && u[2] < u[3]) {
                ordering_ok = false;
            }
        }
    }
    let mut growth_ok = true;
    let r1 = 1e4;
    let r2 = 2e4;
    let mut worst: f64 = 0.0;
    for (sheet, expect) in [(1usize, -3.0), (2, 1.0), (3, 1.0), (4, 1.0)] {
        let u1 = sol.nuttall_u(sheet, Complex64::new(0.0, r1)).unwrap();
        let u2 = sol.nuttall_u(sheet, Complex64::new(0.0, r2)).unwrap();
        let coeff = (u2 - u1) / (r2 / r1).ln();
        worst = worst.max((coeff - expect).abs());
        if (coeff - expect).abs() >= 1e-3 {
            growth_ok = false;
        }
    }
    crit(
        ordering_ok && growth_ok,
        format!("strict ordering on 100-point grid: {ordering_ok}; worst growth-coefficient error {worst:.2e}"),
    )
}

fn criterion_example1(path: &PathSpec) -> Crit {
    let t0 = Instant::now();
    let preset = by_name("example1").unwrap();
    let oracle = match oracle_continue(&preset.params, path) {
        Ok(v) => v,
        Err(e) => return fail_err(&e),
    };
    let germ = preset
        .germ_with(50, PrecisionConfig::new(640).unwrap())
        .unwrap();
    let r = match continue_via_hp(&germ, path, 50, Scheme::Pade) {
        Ok(r) => r,
        Err(e) => return fail_err(&e),
    };
    let diff = (r.value - oracle).norm();
    let elapsed = t0.elapsed().as_secs_f64();
    crit(
        diff < 1e-6 && elapsed < 120.0,
        format!("pade continuation to 6: |diff| = {diff:.2e}, {elapsed:.1}s"),
    )
}

fn criterion_example2(path: &PathSpec) -> Crit {
    let preset = by_name("example2").unwrap();
    let oracle = match oracle_continue(&preset.params, path) {
        Ok(v) => v,
        Err(e) => return fail_err(&e),
    };
    let germ = preset
        .germ_with(50, PrecisionConfig::new(generous_bits(50)).unwrap())
        .unwrap();
    let r = match continue_via_hp(&germ, path, 50, Scheme::TwoSheet) {
        Ok(r) => r,
        Err(e) => return fail_err(&e),
    };
    let crossings: Vec<FamilyTag> = r.sheet_log.iter().map(|(_, t)| *t).collect();
    let diff = (r.value - oracle).norm();
    crit(
        crossings == vec![FamilyTag::E2] && diff < 1e-4,
        format!("crossings {crossings:?}; |diff| = {diff:.2e}"),
    )
}

fn criterion_example3(path: &PathSpec) -> Crit {
    let preset = by_name("example3").unwrap();
    let oracle = match oracle_continue(&preset.params, path) {
        Ok(v) => v,
        Err(e) => return fail_err(&e),
    };
    let germ50 = preset
        .germ_with(50, PrecisionConfig::new(generous_bits(50)).unwrap())
        .unwrap();
    let two_sheet_blocked = matches!(
        continue_via_hp(&germ50, path, 50, Scheme::TwoSheet),
        Err(Error::SheetUnreachable { .. })
    );

    // tolerant of one bad order near 50: occasional degenerate indices are
    // expected along subsequences
    let mut three_detail = String::new();
    let mut three_ok = false;
    for (attempt, n) in [50usize, 49].into_iter().enumerate() {
        let germ = if n == 50 {
            germ50.clone()
        } else {
            preset
                .germ_with(n, PrecisionConfig::new(generous_bits(n)).unwrap())
                .unwrap()
        };
        match continue_via_hp(&germ, path, n, Scheme::ThreeSheet) {
            Ok(r) => {
                let crossings: Vec<FamilyTag> = r.sheet_log.iter().map(|(_, t)| *t).collect();
                let diff = (r.value - oracle).norm();
                let good = crossings == vec![FamilyTag::E, FamilyTag::F] && diff < 1e-3;
                three_detail = format!(
                    "n={n}: crossings {crossings:?}, |diff| = {diff:.2e}{}",
                    if attempt > 0 { " (after one failing order)" } else { "" }
                );
                if good {
                    three_ok = true;
                    break;
                }
            }
            Err(e) => {
                three_detail = format!("n={n}: error {e}");
            }
        }
    }
    crit(
        two_sheet_blocked && three_ok,
        format!("two-sheet blocked: {two_sheet_blocked}; three-sheet {three_detail}"),
    )
}

fn criterion_partial_sum_zeros() -> Crit {
    let preset = by_name("example1").unwrap();
    let germ = preset
        .germ_with(50, PrecisionConfig::new(640).unwrap())
        .unwrap();
    let zeros = match hp::partial_sum_zeros(&germ, 50) {
        Ok(z) => z,
        Err(e) => return fail_err(&e),
    };
    let mut moduli: Vec<f64> = zeros.iter().map(|z| z.norm()).collect();
    moduli.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let median = moduli[moduli.len() / 2];
    let radius = convergence_radius(&preset.params).unwrap();
    let rel = (median - radius).abs() / radius;
    crit(
        rel < 0.10,
        format!("median zero modulus {median:.4} vs radius {radius:.4} (relative gap {rel:.3})"),
    )
}

fn criterion_normality(rc: &RealCase) -> Crit {
    let mut ok = true;
    let mut smallest = f64::INFINITY;
    for n in 1..=20usize {
        // the true remainders shrink roughly like exp(-c n^2); the budget
        // must keep the 2^{-bits/2} nonzero-test threshold well below them
        let bits = 2048u32;
        let prec = PrecisionConfig::new(bits).unwrap();
        let germ = germ_at_infinity(&rc.params, default_order(n), prec).unwrap();
        let tuple = hp::power_tuple(&germ, 3).unwrap();
        for idx in [
            MultiIndex::tuple1(n, Center::AtInfinity),
            MultiIndex::tuple2(n, Center::AtInfinity),
            MultiIndex::full(n, Center::AtInfinity),
        ] {
            let sol = match hp::hp_type1(&tuple, &idx) {
                Ok(s) => s,
                Err(e) => return fail_err(&e),
            };
            let mag = cabs(&sol.leading_remainder);
            let thresh = {
                let mut t = Float::with_val(bits, 1u32);
                t >>= bits / 2;
                t
            };
            if mag <= thresh {
                ok = false;
            }
            smallest = smallest.min(mag.to_f64());
        }
    }
    crit(
        ok,
        format!("smallest leading remainder magnitude {smallest:.2e} over n <= 20"),
    )
}

#[test]
fn acceptance() {
    let ns = [10usize, 15, 20, 25, 30, 35, 40];
    println!("building shared solve sets for n in {ns:?}...");
    let rc = RealCase::build(&ns);
    let sol = solve_equilibrium(A_END, B_END, 48).unwrap();
    let path = PathSpec::real_axis(6.0, 0.05).unwrap();

    let results: Vec<(&str, Crit)> = vec![
        ("01 pade pole distribution", criterion_pade_zero_distribution(&rc)),
        ("02 type II zero distribution", criterion_type2_zero_distribution(&rc, &sol)),
        ("03 type I zero distribution", criterion_type1_zero_distribution(&rc, &sol)),
        ("04 S-polynomial zero distribution", criterion_s_poly_zero_distribution(&rc, &sol)),
        ("05 convergence rates", criterion_convergence_rates(&rc, &sol)),
        ("06 branch recovery", criterion_branch_recovery(&rc)),
        ("07 determinant identity", criterion_determinant_identity(&rc)),
        ("08 harmonic ordering", criterion_harmonic_ordering(&sol)),
        ("09 example1 end-to-end", criterion_example1(&path)),
        ("10 example2 end-to-end", criterion_example2(&path)),
        ("11 example3 end-to-end", criterion_example3(&path)),
        ("12 partial-sum zeros", criterion_partial_sum_zeros()),
        ("13 index normality", criterion_normality(&rc)),
    ];

    let mut all_ok = true;
    for (name, c) in &results {
        println!(
            "criterion {name}: {} - {}",
            if c.ok { "PASS" } else { "FAIL" },
            c.detail
        );
        all_ok &= c.ok;
    }
    assert!(all_ok, "one or more acceptance criteria failed (see lines above)");
}
