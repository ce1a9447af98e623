//! Acceptance criteria 1-9. Criterion 10 (CLI round-trip) lives in the cli
//! crate's own acceptance target. Runs without the libtest harness so the
//! per-criterion lines always print.

mod common;

use std::time::{Duration, Instant};

use divdiff_core::differences::{
    check_uniform_identity, divided_difference_direct, divided_difference_recursive, finite_difference,
    finite_difference_via_integral, FiniteDifferenceRequest, KnotValueList,
};
use divdiff_core::interp::{lagrange_equispaced, leading_coefficient, EquispacedSample};
use divdiff_core::lab::{
    averaging_probe, build_constraint_system, min_lipschitz_unit_norm, nullspace, polynomial_cascade,
    telescope_shift_identity, CascadeVerdict, MinLipschitz,
};
use divdiff_core::rational::{int, ratio};
use divdiff_core::{FuncSpec, Polynomial, Rational};
use num_traits::Signed;
use rand::Rng;

type Outcome = Result<String, String>;

/// Name, check, time budget in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn identity_corpus() -> Outcome {
    let mut r = common::rng(1);
    let mut corpus: Vec<FuncSpec> = Vec::new();
    for d in 0..=10 {
        corpus.push(FuncSpec::poly(common::polynomial_of_degree(&mut r, d)));
        corpus.push(FuncSpec::poly(common::polynomial_of_degree(&mut r, d)));
    }
    for _ in 0..15 {
        corpus.push(FuncSpec::ratfun(common::polynomial(&mut r, 6), common::positive_denominator(&mut r)).unwrap());
    }
    for _ in 0..15 {
        corpus.push(FuncSpec::piecewise_linear(common::grid_function(&mut r, 12)));
    }
    for f in &corpus {
        for n in 1..=12 {
            let c = check_uniform_identity(f, n).map_err(|e| e.to_string())?;
            ensure(c.equal, || format!("n={n}: {} != {}", c.lhs, c.rhs))?;
        }
    }
    Ok(format!("{} functions x n=1..12", corpus.len()))
}

fn direct_vs_recursive() -> Outcome {
    let mut r = common::rng(2);
    for t in 0..1000 {
        let order = r.gen_range(0..=10);
        let knots = common::distinct_knots(&mut r, order + 1);
        let values: Vec<Rational> = (0..=order).map(|_| common::small_rational(&mut r)).collect();
        let kv = KnotValueList::from_parts(knots, values).map_err(|e| e.to_string())?;
        let (a, b) = (divided_difference_direct(&kv), divided_difference_recursive(&kv));
        ensure(a == b, || format!("instance {t}: {a} != {b}"))?;
    }
    Ok("1000 instances".into())
}

fn integral_representation() -> Outcome {
    let mut r = common::rng(3);
    for t in 0..200 {
        let p = common::polynomial(&mut r, 10);
        let n = r.gen_range(0..=8);
        let x = common::small_rational(&mut r);
        let h = ratio(r.gen_range(1..=20), r.gen_range(1..=20));
        let f = FuncSpec::poly(p.clone());
        let req = FiniteDifferenceRequest::new(&f, x.clone(), h.clone(), n).map_err(|e| e.to_string())?;
        let a = finite_difference(&req).map_err(|e| e.to_string())?;
        let b = finite_difference_via_integral(&p, &x, &h, n).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("instance {t}: {a} != {b}"))?;
    }
    Ok("200 polynomials".into())
}

fn leading_coefficient_bridge() -> Outcome {
    let mut r = common::rng(4);
    for t in 0..200 {
        let n = r.gen_range(1..=10);
        let values = (0..=n).map(|_| common::small_rational(&mut r)).collect();
        let s = EquispacedSample::new(n, values).map_err(|e| e.to_string())?;
        let lead = leading_coefficient(&lagrange_equispaced(&s), n).map_err(|e| e.to_string())?;
        let dd = divided_difference_direct(&s.knot_values());
        ensure(lead == dd, || format!("sample {t}: {lead} != {dd}"))?;
    }
    Ok("200 samples".into())
}

fn cascade() -> Outcome {
    let zero = polynomial_cascade(&Polynomial::zero());
    ensure(zero.verdict == CascadeVerdict::ZeroPolynomial, || {
        "zero polynomial misclassified".into()
    })?;
    let mut r = common::rng(5);
    for t in 0..200 {
        let d = r.gen_range(0..=10);
        let p = common::polynomial_of_degree(&mut r, d);
        let v = polynomial_cascade(&p).verdict;
        ensure(v == CascadeVerdict::NonzeroAtOrder(d), || {
            format!("polynomial {t}: {v:?}, degree {d}")
        })?;
    }
    Ok("zero polynomial + 200 nonzero".into())
}

fn nullspace_fixtures() -> Outcome {
    let dims: Vec<usize> = (1..=4)
        .map(|n| nullspace(&build_constraint_system(n).unwrap()).dimension)
        .collect();
    ensure(dims == [0, 0, 3, 8], || format!("dimensions {dims:?}"))?;
    let three = nullspace(&build_constraint_system(3).unwrap());
    ensure(three.forced_zero_points == [0, 3, 6], || {
        format!("forced {:?}", three.forced_zero_points)
    })?;
    for g in three.basis() {
        ensure(g.values()[2] == g.values()[4], || "f(1/3) != f(2/3)".into())?;
    }
    Ok("dims 0,0,3,8; N=3 forced {0,1/2,1}, f(1/3)=f(2/3)".into())
}

fn min_lipschitz() -> Outcome {
    let two = min_lipschitz_unit_norm(2).map_err(|e| e.to_string())?;
    ensure(two == MinLipschitz::Infeasible, || format!("N=2: {two:?}"))?;
    match min_lipschitz_unit_norm(3).map_err(|e| e.to_string())? {
        MinLipschitz::Optimal { value, witness, .. } => {
            ensure(value == int(6), || format!("N=3 value {value}"))?;
            ensure(witness.sup_norm() == int(1), || "witness not unit norm".into())?;
            ensure(witness.lipschitz() == value, || "witness slope differs".into())?;
            ensure(build_constraint_system(3).unwrap().is_satisfied_by(&witness), || {
                "witness violates constraints".into()
            })?;
            Ok("N=2 infeasible, N=3 -> 6".into())
        }
        other => Err(format!("N=3: {other:?}")),
    }
}

fn telescope() -> Outcome {
    let mut r = common::rng(8);
    for t in 0..500 {
        let g = common::func_spec(&mut r).with_zero_extension(true);
        let x = common::unit_point(&mut r, 12);
        let n = r.gen_range(1..=6);
        let j = r.gen_range(1..=n);
        let h = ratio(1, r.gen_range(1..=40));
        let count = r.gen_range(1..=50);
        let c = telescope_shift_identity(&g, &x, n, j, &h, count).map_err(|e| e.to_string())?;
        ensure(c.equal, || format!("config {t}: {} != {}", c.lhs, c.rhs))?;
    }
    Ok("500 configurations".into())
}

fn averaging_decay() -> Outcome {
    let mut r = common::rng(9);
    let sizes: Vec<usize> = (2..=8).map(|k| 1 << k).collect();
    for t in 0..20 {
        let f = common::func_spec(&mut r).with_zero_extension(true);
        let x = ratio(r.gen_range(0..=5), 6);
        let h = ratio(1, r.gen_range(2..=10));
        let n = r.gen_range(1..=4);
        let mut settled: Option<Rational> = None;
        for &big_n in &sizes {
            let p = averaging_probe(&f, &x, &h, n, big_n).map_err(|e| e.to_string())?;
            ensure(p.residual.abs() <= p.bound, || {
                format!("function {t}, N={big_n}: residual above bound")
            })?;
            if big_n >= p.cutoff {
                let scaled = &p.residual * int(big_n as i64);
                match &settled {
                    None => settled = Some(scaled),
                    Some(s) => ensure(*s == scaled, || format!("function {t}, N={big_n}: residual*N moved"))?,
                }
            }
        }
        ensure(settled.is_some(), || format!("function {t}: cutoff beyond 256"))?;
    }
    Ok("20 functions x N=4,8,...,256".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 uniform identity corpus", identity_corpus, 10),
        ("2 direct vs recursive", direct_vs_recursive, 5),
        ("3 integral representation", integral_representation, 10),
        ("4 leading-coefficient bridge", leading_coefficient_bridge, 5),
        ("5 polynomial cascade", cascade, 5),
        ("6 nullspace fixtures", nullspace_fixtures, 1),
        ("7 min-Lipschitz fixture", min_lipschitz, 5),
        ("8 telescoping identity", telescope, 10),
        ("9 averaging decay", averaging_decay, 20),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({elapsed:.2?}, target {budget}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} ({elapsed:.2?})");
            }
        }
        if elapsed > Duration::from_secs(budget) {
            println!("note: criterion {name} over its {budget}s target (debug build)");
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
