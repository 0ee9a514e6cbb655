//! Sweep the factor position A_1 of the example3 preset until the
//! sheet-(2,3) cluster F crosses the positive real axis to the right of the
//! sheet-(1,2) cluster E. Prints one line per candidate; the chosen value is
//! pinned as EXAMPLE3_A1 in src/presets.rs.
//!
//! Run with: cargo run --release --example example3_search

use hpade::approx::ThreeSheetSet;
use hpade::continuation::{crossings, extract_cluster, FamilyTag, PathSpec, EPS_OUTLIER};
use hpade::precision::PrecisionConfig;
use hpade::roots::all_roots;
use hpade::series::{default_order, germ_at_zero, SZParams};
use num_complex::Complex64;

fn axis_crossing(zeros: &[Complex64], tag: FamilyTag, path: &PathSpec) -> Option<f64> {
    let arc = extract_cluster(zeros, tag, EPS_OUTLIER).ok()?;
    crossings(path, &arc).first().map(|x| x.re)
}

fn main() {
    let n = 30usize;
    let bits = 256 + 24 * n as u32;
    let path = PathSpec::real_axis(6.0, 0.05).unwrap();
    println!("n={n} bits={bits}");
    println!("{:>12} {:>10} {:>10}  verdict", "(A1,A2)", "x_E", "x_F");
    for (a1, a2) in [
        (1.0f64, 2.0f64),
        (1.0, -1.2),
        (1.0, -1.5),
        (1.0, -2.0),
        (1.5, -2.0),
        (1.0, -2.5),
        (0.7, -2.0),
    ] {
        let params = match SZParams::conjugate_pair(a1, a2, 2.0, 1.0) {
            Ok(p) => p,
            Err(e) => {
                println!("({a1},{a2}) invalid: {e}");
                continue;
            }
        };
        let germ = germ_at_zero(&params, default_order(n), PrecisionConfig::new(bits).unwrap())
            .unwrap();
        let set = match ThreeSheetSet::build(&germ, n) {
            Ok(s) => s,
            Err(e) => {
                println!("({a1},{a2}) solve failed: {e}");
                continue;
            }
        };
        let e_zeros = all_roots(set.q3n()).unwrap();
        let f_zeros = all_roots(&set.s2).unwrap();
        let xe = axis_crossing(&e_zeros, FamilyTag::E, &path);
        let xf = axis_crossing(&f_zeros, FamilyTag::F, &path);
        let verdict = match (xe, xf) {
            (Some(e), Some(f)) if f > e => "F right of E",
            (Some(_), Some(_)) => "F left of E",
            _ => "no crossing",
        };
        println!(
            "{:>12} {:>10} {:>10}  {verdict}",
            format!("({a1},{a2})"),
            xe.map_or("-".into(), |x| format!("{x:.4}")),
            xf.map_or("-".into(), |x| format!("{x:.4}")),
        );
    }
}
