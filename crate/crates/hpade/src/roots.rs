//! Polynomial root extraction by the Ehrlich-Aberth simultaneous iteration,
//! carried out at the polynomial's own precision so that coefficients with a
//! huge dynamic range (as produced by high-order approximant solves) are
//! handled without overflow.

use num_complex::Complex64;
use rug::{Complex, Float};

use crate::poly::Polynomial;
use crate::precision::{cabs, cplx, czero, to_c64, PrecisionConfig};
use crate::{Error, Result};

const MAX_ITERS: usize = 1000;

/// All roots of `p`, in no particular order, as `f64` complex numbers.
///
/// Trailing negligible coefficients are trimmed first; leading negligible
/// coefficients produce exact roots at the origin. Every returned root passes
/// a backward-error residual test at half the working precision.
pub fn all_roots(p: &Polynomial) -> Result<Vec<Complex64>> {
    let bits = p.bits();
    let prec = PrecisionConfig::new(bits.max(PrecisionConfig::MIN_BITS))?;
    let rel_tol = prec.zero_threshold();
    let trimmed = p.trimmed(&rel_tol);
    if trimmed.scale() == 0 {
        return Err(Error::InvalidInput(
            "cannot extract roots of the zero polynomial".into(),
        ));
    }
    let deg = trimmed.nominal_degree();
    if deg == 0 {
        return Ok(vec![]);
    }

    // split off roots at the origin
    let scale = trimmed.scale();
    let low_tol = Float::with_val(bits, &rel_tol * &scale);
    let mut low = 0usize;
    while low < deg && cabs(trimmed.coeff(low)) <= low_tol {
        low += 1;
    }
    let mut roots = vec![Complex64::new(0.0, 0.0); low];
    if low == deg {
        return Ok(roots);
    }
    let reduced = Polynomial::new(trimmed.coeffs()[low..].to_vec()).normalized();
    match aberth(&reduced, bits) {
        Ok(r) => roots.extend(r),
        Err(first) => {
            // retry on the reversed polynomial: its roots are the reciprocals
            // of the original ones, which tames roots far outside the initial
            // inclusion radius (the approximant families occasionally carry a
            // single root of astronomical modulus)
            let mut rev = reduced.coeffs().to_vec();
            rev.reverse();
            let reversed = Polynomial::new(rev).normalized();
            match aberth(&reversed, bits) {
                Ok(r) => roots.extend(r.iter().map(|z| z.inv())),
                Err(_) => return Err(first),
            }
        }
    }
    Ok(roots)
}

fn fujiwara_bound(p: &Polynomial) -> f64 {
    let deg = p.nominal_degree();
    let lead = cabs(p.coeff(deg)).to_f64();
    let mut bound: f64 = 0.0;
    for k in 0..deg {
        let ratio = cabs(p.coeff(k)).to_f64() / lead;
        let r = if k == 0 { ratio / 2.0 } else { ratio };
        bound = bound.max(2.0 * r.powf(1.0 / (deg - k) as f64));
    }
    bound.max(1e-3)
}

fn aberth(p: &Polynomial, bits: u32) -> Result<Vec<Complex64>> {
    let deg = p.nominal_degree();
    let dp = p.derivative();
    let radius = fujiwara_bound(p);
    let mut z: Vec<Complex> = (0..deg)
        .map(|k| {
            // irrational angle offset avoids symmetry stalls
            let theta = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4;
            cplx(bits, radius * theta.cos(), radius * theta.sin())
        })
        .collect();

    let stop_bits = (bits / 2).max(64);
    let mut stop = Float::with_val(bits, 1u32);
    stop >>= stop_bits;

    let mut converged = vec![false; deg];
    for _ in 0..MAX_ITERS {
        let mut moved = false;
        for i in 0..deg {
            if converged[i] {
                continue;
            }
            let pv = p.eval(&z[i]);
            let dv = dp.eval(&z[i]);
            if *pv.real() == 0 && *pv.imag() == 0 {
                converged[i] = true;
                continue;
            }
            let newton = if *dv.real() == 0 && *dv.imag() == 0 {
                // nudge off a critical point
                cplx(bits, 1e-3, 1e-3)
            } else {
                Complex::with_val(bits, &pv / &dv)
            };
            let mut sum = czero(bits);
            for (j, zj) in z.iter().enumerate() {
                if j == i {
                    continue;
                }
                let diff = Complex::with_val(bits, &z[i] - zj);
                if *diff.real() == 0 && *diff.imag() == 0 {
                    continue;
                }
                sum += diff.recip();
            }
            let denom = Complex::with_val(
                bits,
                Complex::with_val(bits, 1u32) - Complex::with_val(bits, &newton * &sum),
            );
            let correction = if *denom.real() == 0 && *denom.imag() == 0 {
                newton
            } else {
                Complex::with_val(bits, &newton / &denom)
            };
            let step = cabs(&correction);
            let tol = Float::with_val(bits, &stop * Float::with_val(bits, 1 + cabs(&z[i])));
            z[i] -= &correction;
            if step <= tol {
                converged[i] = true;
            } else {
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }

    // backward-error acceptance: |p(z)| <= bound(|z|) * 2^{-stop_bits}
    let mut accepted = Vec::with_capacity(deg);
    let mut n_ok = 0usize;
    let mut all_ok = true;
    for zi in &z {
        let pv = cabs(&p.eval(zi));
        let mut bound = p.eval_abs(&cabs(zi));
        bound *= &stop;
        bound *= deg as u32 + 1;
        let ok = pv <= bound;
        if ok {
            n_ok += 1;
        } else {
            all_ok = false;
        }
        accepted.push(to_c64(zi));
    }
    if !all_ok {
        return Err(Error::RootFinderFailure {
            converged: n_ok,
            total: deg,
            partial: accepted,
        });
    }
    Ok(accepted)
}

/// Sort roots by real part, then imaginary part; handy for stable test output.
pub fn sorted(mut roots: Vec<Complex64>) -> Vec<Complex64> {
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const BITS: u32 = 192;

    fn poly(vals: &[f64]) -> Polynomial {
        Polynomial::new(vals.iter().map(|&v| cplx(BITS, v, 0.0)).collect())
    }

    fn from_roots(roots: &[Complex64]) -> Polynomial {
        let mut p = Polynomial::new(vec![cplx(BITS, 1.0, 0.0)]);
        for r in roots {
            let lin = Polynomial::new(vec![cplx(BITS, -r.re, -r.im), cplx(BITS, 1.0, 0.0)]);
            p = p.mul(&lin);
        }
        p
    }

    fn matches(found: &[Complex64], expect: &[Complex64], tol: f64) {
        assert_eq!(found.len(), expect.len());
        let mut pool = found.to_vec();
        for b in expect {
            let (k, d) = pool
                .iter()
                .enumerate()
                .map(|(k, a)| (k, (a - b).norm()))
                .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
                .unwrap();
            assert!(d < tol, "no root near {b} (closest at distance {d})");
            pool.swap_remove(k);
        }
    }

    #[test]
    fn quadratic_exact() {
        let p = poly(&[2.0, -3.0, 1.0]);
        let r = all_roots(&p).unwrap();
        matches(
            &r,
            &[Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)],
            1e-20,
        );
    }

    #[test]
    fn roots_at_origin() {
        // x^2 (x - 3)
        let p = poly(&[0.0, 0.0, -3.0, 1.0]);
        let r = all_roots(&p).unwrap();
        matches(
            &r,
            &[
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(3.0, 0.0),
            ],
            1e-20,
        );
    }

    #[test]
    fn complex_conjugate_pair() {
        // x^2 + 1
        let p = poly(&[1.0, 0.0, 1.0]);
        let r = all_roots(&p).unwrap();
        matches(
            &r,
            &[Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0)],
            1e-20,
        );
    }

    #[test]
    fn wilkinson_style_cluster() {
        let expect: Vec<Complex64> = (1..=12).map(|k| Complex64::new(k as f64, 0.0)).collect();
        let p = from_roots(&expect);
        let r = all_roots(&p).unwrap();
        matches(&r, &expect, 1e-10);
    }

    #[test]
    fn unit_circle_roots() {
        // x^20 - 1: roots are the 20th roots of unity
        let mut coeffs = vec![0.0; 21];
        coeffs[0] = -1.0;
        coeffs[20] = 1.0;
        let r = all_roots(&poly(&coeffs)).unwrap();
        assert_eq!(r.len(), 20);
        for z in &r {
            assert!((z.norm() - 1.0).abs() < 1e-20);
        }
    }

    #[test]
    fn huge_outlier_root() {
        // a root far outside the cluster at moderately high degree starves
        // the direct iteration (its far-field contraction is only 1 - 1/deg
        // per step), exercising the reversed-polynomial fallback
        let bits = 512u32;
        let mut expect: Vec<Complex64> =
            (0..15).map(|k| Complex64::new(0.1 * k as f64 - 0.8, 0.0)).collect();
        expect.push(Complex64::new(1e30, 0.0));
        let mut p = Polynomial::new(vec![cplx(bits, 1.0, 0.0)]);
        for r in &expect {
            let lin = Polynomial::new(vec![cplx(bits, -r.re, -r.im), cplx(bits, 1.0, 0.0)]);
            p = p.mul(&lin);
        }
        let r = all_roots(&p).unwrap();
        assert_eq!(r.len(), 16);
        let s = sorted(r);
        for (a, b) in s.iter().zip(sorted(expect)) {
            assert!((a - b).norm() / b.norm().max(1.0) < 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn constant_and_zero() {
        let p = poly(&[5.0]);
        assert!(all_roots(&p).unwrap().is_empty());
        let z = poly(&[0.0]);
        assert!(all_roots(&z).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn reconstructed_roots_are_recovered(
            parts in proptest::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 1..8)
        ) {
            // skip nearly coincident pairs: multiple roots converge slowly and
            // are not produced by the generically simple systems upstream
            let roots: Vec<Complex64> = parts.iter().map(|&(a, b)| Complex64::new(a, b)).collect();
            for i in 0..roots.len() {
                for j in 0..i {
                    prop_assume!((roots[i] - roots[j]).norm() > 1e-2);
                }
            }
            let p = from_roots(&roots);
            let found = all_roots(&p).unwrap();
            let f = sorted(found);
            let e = sorted(roots);
            for (a, b) in f.iter().zip(&e) {
                prop_assert!((a - b).norm() < 1e-8, "{} vs {}", a, b);
            }
        }
    }
}
