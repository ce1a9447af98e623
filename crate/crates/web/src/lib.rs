//! Browser bindings for three explorations: the constraint-system kernel,
//! the averaging probe as `N` grows, and the equispaced interpolant.
//!
//! Each export returns a JSON string. Exact values are `p/q` strings; every
//! plotted quantity also carries an `f64` approximation. The `*_json`
//! functions are plain Rust so they can be tested natively.

use divdiff_core::differences::check_uniform_identity;
use divdiff_core::interp::{degree_reduced, lagrange_equispaced, leading_coefficient, EquispacedSample};
use divdiff_core::lab::{averaging_probe, build_constraint_system, nullspace};
use divdiff_core::rational::{approx, parse_rational};
use divdiff_core::{Error, FuncSpec, Rational};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps page requests small enough to stay interactive.
const MAX_ORDER: usize = 8;
const MAX_PROBE_N: usize = 4096;
const MAX_SAMPLES: usize = 2001;

fn to_f64(q: &Rational) -> f64 {
    approx(q).parse().unwrap_or(f64::NAN)
}

fn exact(q: &Rational) -> Value {
    json!({ "exact": q.to_string(), "approx": to_f64(q) })
}

/// File-backed grids (`pl:`) are unavailable in the browser; use `plv:`.
fn parse_func(text: &str) -> Result<FuncSpec, String> {
    FuncSpec::parse_with(text, |_| {
        Err(Error::InvalidArgument(
            "pl: files are not available here; use plv:L=<L>;v0,...,vL".into(),
        ))
    })
    .map_err(|e| e.to_string())
}

fn parse_q(label: &str, text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| format!("{label}: {e}"))
}

/// Kernel of the order-`N` constraint system on the grid `k/L`.
pub fn nullspace_json(big_n: usize) -> Result<String, String> {
    if big_n == 0 || big_n > MAX_ORDER {
        return Err(format!("N must be between 1 and {MAX_ORDER}"));
    }
    let system = build_constraint_system(big_n).map_err(|e| e.to_string())?;
    let report = nullspace(&system);
    let basis: Vec<Value> = if report.dimension <= 64 {
        report
            .basis()
            .iter()
            .map(|g| Value::Array(g.values().iter().map(|v| json!(to_f64(v))).collect()))
            .collect()
    } else {
        Vec::new()
    };
    Ok(json!({
        "N": big_n,
        "L": report.denom,
        "rank": report.rank,
        "dimension": report.dimension,
        "forced_zero_points": report.forced_zero_points,
        "basis": basis,
    })
    .to_string())
}

/// Averaging residual of the zero extension for `N = 1, 2, 4, ... <= n_max`.
pub fn probe_json(func: &str, x: &str, h: &str, n: usize, n_max: usize) -> Result<String, String> {
    if n_max == 0 || n_max > MAX_PROBE_N {
        return Err(format!("Nmax must be between 1 and {MAX_PROBE_N}"));
    }
    let f = parse_func(func)?.with_zero_extension(true);
    let (x, h) = (parse_q("x", x)?, parse_q("h", h)?);
    let mut series = Vec::new();
    let mut cutoff = 0;
    let mut big_n = 1;
    while big_n <= n_max {
        let r = averaging_probe(&f, &x, &h, n, big_n).map_err(|e| e.to_string())?;
        cutoff = r.cutoff;
        series.push(json!({
            "N": big_n,
            "average": exact(&r.average),
            "residual": exact(&r.residual),
            "bound": exact(&r.bound),
            "residual_times_N": exact(&r.boundary_sum),
        }));
        big_n *= 2;
    }
    Ok(json!({ "cutoff": cutoff, "series": series }).to_string())
}

/// `f` and its equispaced interpolant `Q_n` sampled on `[0, 1]`, with the
/// leading coefficient and both sides of the uniform identity.
pub fn interpolant_json(func: &str, n: usize, samples: usize) -> Result<String, String> {
    if n == 0 || n > 24 {
        return Err("n must be between 1 and 24".into());
    }
    let samples = samples.clamp(2, MAX_SAMPLES);
    let f = parse_func(func)?;
    let s = EquispacedSample::of(&f, n).map_err(|e| e.to_string())?;
    let q = lagrange_equispaced(&s);
    let lead = leading_coefficient(&q, n).map_err(|e| e.to_string())?;
    let identity = check_uniform_identity(&f, n).map_err(|e| e.to_string())?;
    let mut xs = Vec::with_capacity(samples);
    let mut fs = Vec::with_capacity(samples);
    let mut qs = Vec::with_capacity(samples);
    for i in 0..samples {
        let t = Rational::new((i as i64).into(), ((samples - 1) as i64).into());
        xs.push(to_f64(&t));
        // a rational function may have a pole between the knots
        fs.push(f.eval(&t).map(|v| to_f64(&v)).ok());
        qs.push(to_f64(&q.eval(&t)));
    }
    let knots: Vec<f64> = (0..=n).map(|k| k as f64 / n as f64).collect();
    let values: Vec<f64> = s.values().iter().map(to_f64).collect();
    Ok(json!({
        "n": n,
        "interpolant": q.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "leading_coefficient": exact(&lead),
        "degree_reduced": degree_reduced(&s),
        "identity": { "lhs": identity.lhs.to_string(), "rhs": identity.rhs.to_string(), "equal": identity.equal },
        "x": xs,
        "f": fs,
        "q": qs,
        "knots": knots,
        "values": values,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn nullspace_explorer(big_n: usize) -> Result<String, JsError> {
    nullspace_json(big_n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn averaging_curve(func: &str, x: &str, h: &str, n: usize, n_max: usize) -> Result<String, JsError> {
    probe_json(func, x, h, n, n_max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn interpolant_plot(func: &str, n: usize, samples: usize) -> Result<String, JsError> {
    interpolant_json(func, n, samples).map_err(|e| JsError::new(&e))
}
