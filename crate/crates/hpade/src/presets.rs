//! Ready-made parameter sets for the continuation examples and the real
//! two-point case.

use crate::precision::PrecisionConfig;
use crate::series::{germ_at_infinity, germ_at_zero, Center, PowerSeries, SZParams};
use crate::{Error, Result};

/// A named parameter set together with its natural expansion point.
#[derive(Debug, Clone)]
pub struct Preset {
    pub name: &'static str,
    pub params: SZParams,
    pub center: Center,
}

/// Conjugate-pair presets share this exponent structure; the three examples
/// differ only in the variable-change shift `a` and the factor position
/// `A_1`:
///
/// * `example1`: shift `a < 0`, so the square-root cut (and the whole Stahl
///   set) stays in the left half-plane; a real-axis path to the right never
///   leaves the first sheet.
/// * `example2`: shift `a > 0`; the cut crosses the positive real axis, the
///   sheet-(2,3) boundary crossing lies left of the sheet-(1,2) one, and the
///   two-sheet scheme reaches the endpoint.
/// * `example3`: as `example2` but with `A_1` moved until the sheet-(2,3)
///   boundary crosses to the right of the sheet-(1,2) boundary, which forces
///   the three-sheet scheme (value found by the sweep in
///   `examples/example3_search.rs`).
pub fn by_name(name: &str) -> Result<Preset> {
    let (params, center) = match name {
        "example1" => (SZParams::conjugate_pair(1.0, 2.0, -2.0, 1.0)?, Center::AtZero),
        "example2" => (SZParams::conjugate_pair(1.0, 2.0, 2.0, 1.0)?, Center::AtZero),
        "example3" => (SZParams::conjugate_pair(EXAMPLE3_A1, EXAMPLE3_A2, 2.0, 1.0)?, Center::AtZero),
        "real-ab" => (SZParams::markov(2.0, 3.0)?, Center::AtInfinity),
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown preset {other:?}; expected example1, example2, example3, real-ab"
            )))
        }
    };
    Ok(Preset {
        name: match name {
            "example1" => "example1",
            "example2" => "example2",
            "example3" => "example3",
            _ => "real-ab",
        },
        params,
        center,
    })
}

/// Factor position of `example3`, found by sweeping `A_1` until the
/// sheet-(2,3) zero cluster crosses the positive real axis to the right of
/// the sheet-(1,2) cluster (see `examples/example3_search.rs`; at n=30 the
/// crossings land near 0.46 for E and 1.07 for F).
pub const EXAMPLE3_A1: f64 = 1.0;
pub const EXAMPLE3_A2: f64 = -2.0;

impl Preset {
    /// Germ at this preset's expansion point, at the default order and
    /// precision budget for order-`n` computations.
    pub fn germ(&self, n: usize) -> Result<PowerSeries> {
        self.germ_with(n, PrecisionConfig::for_order(n))
    }

    pub fn germ_with(&self, n: usize, prec: PrecisionConfig) -> Result<PowerSeries> {
        let order = crate::series::default_order(n);
        match self.center {
            Center::AtInfinity => germ_at_infinity(&self.params, order, prec),
            Center::AtZero => germ_at_zero(&self.params, order, prec),
        }
    }
}
