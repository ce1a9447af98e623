use divdiff_core::differences::{
    check_uniform_identity, divided_difference_direct, divided_difference_recursive, equispaced_knots,
    finite_difference, finite_difference_via_integral, FiniteDifferenceRequest, KnotValueList,
};
use divdiff_core::interp::{degree_reduced, lagrange_equispaced, leading_coefficient, EquispacedSample};
use divdiff_core::lab::{
    averaging_probe, build_constraint_system, min_lipschitz_unit_norm, nullspace, polynomial_cascade,
    proof_walkthrough, telescope_shift_identity, CascadeVerdict, MinLipschitz,
};
use divdiff_core::{Error, FuncSpec, Rational};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{Map, Value};

use crate::report::{Fields, Report};
use crate::{Command, GlobalOpts};

pub struct Outcome {
    pub report: Report,
    /// Set when the report describes a domain failure (exit status 2).
    pub domain_failure: Option<String>,
}

pub enum CommandError {
    Usage(String),
    Domain(String),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        if e.is_domain() {
            CommandError::Domain(e.to_string())
        } else {
            CommandError::Usage(e.to_string())
        }
    }
}

type CmdResult<T> = Result<T, CommandError>;

struct Inputs(Map<String, Value>);

impl Inputs {
    fn new() -> Self {
        Inputs(Map::new())
    }
    fn put(mut self, key: &str, v: impl ToString) -> Self {
        self.0.insert(key.to_string(), Value::String(v.to_string()));
        self
    }
    fn list(mut self, key: &str, vs: &[Rational]) -> Self {
        let joined: Vec<String> = vs.iter().map(ToString::to_string).collect();
        self.0.insert(key.to_string(), Value::String(joined.join(",")));
        self
    }
}

fn parse_func(text: &str, extend_zero: bool) -> CmdResult<FuncSpec> {
    let f = FuncSpec::parse(text).map_err(|e| CommandError::Usage(e.to_string()))?;
    Ok(f.with_zero_extension(extend_zero))
}

fn ok(command: &str, inputs: Inputs, results: Fields) -> CmdResult<Outcome> {
    Ok(Outcome {
        report: Report {
            command: command.to_string(),
            inputs: inputs.0,
            results: results.into_value(),
        },
        domain_failure: None,
    })
}

fn require_positive(name: &str, v: usize) -> CmdResult<()> {
    if v == 0 {
        return Err(CommandError::Usage(format!("--{name} must be at least 1")));
    }
    Ok(())
}

fn check_cap(big_n: usize, opts: &GlobalOpts) -> CmdResult<()> {
    require_positive("N", big_n)?;
    if big_n > opts.n_cap {
        return Err(CommandError::Usage(format!(
            "N = {big_n} exceeds the cap {}; raise it with --n-cap",
            opts.n_cap
        )));
    }
    Ok(())
}

fn grid_point(k: usize, denom: usize) -> Rational {
    Rational::new(BigInt::from(k), BigInt::from(denom))
}

pub fn run(cmd: &Command, opts: &GlobalOpts) -> CmdResult<Outcome> {
    let fields = Fields::new(opts.decimals);
    let ez = opts.extend_zero;
    match cmd {
        Command::Eval { knots, values, func } => {
            let knots = &knots.0;
            let mut inputs = Inputs::new().list("knots", knots).put("extend_zero", ez);
            let kv = match (values, func) {
                (Some(v), None) => {
                    let v = &v.0;
                    inputs = inputs.list("values", v);
                    KnotValueList::from_parts(knots.clone(), v.clone())?
                }
                (None, Some(text)) => {
                    inputs = inputs.put("func", text);
                    KnotValueList::sample(&parse_func(text, ez)?, knots.clone())?
                }
                _ => return Err(CommandError::Usage("give exactly one of --values or --func".into())),
            };
            let direct = divided_difference_direct(&kv);
            let recursive = divided_difference_recursive(&kv);
            ok(
                "eval",
                inputs,
                fields
                    .value("order", kv.order())
                    .rational("direct", &direct)
                    .rational("recursive", &recursive)
                    .value("equal", direct == recursive),
            )
        }
        Command::Uniform { func, n } => {
            let f = parse_func(func, ez)?;
            let kv = KnotValueList::equispaced(&f, *n)?;
            let dd = divided_difference_direct(&kv);
            ok(
                "uniform",
                Inputs::new().put("func", func).put("n", n).put("extend_zero", ez),
                fields
                    .rationals("knots", &equispaced_knots(*n))
                    .rationals("values", kv.pairs().iter().map(|(_, v)| v))
                    .rational("divided_difference", &dd),
            )
        }
        Command::Fd { func, x, h, n } => {
            let f = parse_func(func, ez)?;
            let req = FiniteDifferenceRequest::new(&f, x.clone(), h.clone(), *n)?;
            let fd = finite_difference(&req)?;
            let mut out = fields.rational("finite_difference", &fd);
            if let (Some(p), false) = (f.as_polynomial(), ez) {
                let via = finite_difference_via_integral(p, x, h, *n)?;
                out = out.rational("via_integral", &via).value("integral_matches", via == fd);
            }
            ok(
                "fd",
                Inputs::new()
                    .put("func", func)
                    .put("x", x)
                    .put("h", h)
                    .put("n", n)
                    .put("extend_zero", ez),
                out,
            )
        }
        Command::Identity { func, n } => {
            require_positive("n", *n)?;
            let f = parse_func(func, ez)?;
            let c = check_uniform_identity(&f, *n)?;
            ok(
                "identity",
                Inputs::new().put("func", func).put("n", n).put("extend_zero", ez),
                fields
                    .rational("lhs", &c.lhs)
                    .rational("rhs", &c.rhs)
                    .value("equal", c.equal),
            )
        }
        Command::Interp { func, n } => {
            let f = parse_func(func, ez)?;
            let s = EquispacedSample::of(&f, *n)?;
            let q = lagrange_equispaced(&s);
            let lead = leading_coefficient(&q, *n)?;
            let dd = divided_difference_direct(&s.knot_values());
            ok(
                "interp",
                Inputs::new().put("func", func).put("n", n).put("extend_zero", ez),
                fields
                    .rationals("coefficients", q.coeffs())
                    .value("degree", q.degree().map_or(Value::Null, Value::from))
                    .rational("leading_coefficient", &lead)
                    .rational("divided_difference", &dd)
                    .value("degree_reduced", degree_reduced(&s)),
            )
        }
        Command::Cascade { func } => {
            let f = parse_func(func, false)?;
            let p = f
                .as_polynomial()
                .ok_or_else(|| CommandError::Usage("cascade needs a `poly:` function".into()))?;
            let r = polynomial_cascade(p);
            let rows = r
                .checks
                .iter()
                .map(|c| {
                    fields
                        .child()
                        .value("order", c.order)
                        .rational("difference", &c.difference)
                })
                .collect();
            let (verdict, order) = match r.verdict {
                CascadeVerdict::ZeroPolynomial => ("zero_polynomial", Value::Null),
                CascadeVerdict::NonzeroAtOrder(n) => ("nonzero_at_order", Value::from(n)),
            };
            ok(
                "cascade",
                Inputs::new().put("func", func),
                fields
                    .rows("rows", rows)
                    .value("verdict", verdict)
                    .value("nonzero_order", order),
            )
        }
        Command::Nullspace { big_n, basis_limit } => {
            check_cap(*big_n, opts)?;
            let system = build_constraint_system(*big_n)?;
            let r = nullspace(&system);
            let forced: Vec<Rational> = r.forced_zero_points.iter().map(|&k| grid_point(k, r.denom)).collect();
            let include_basis = r.dimension <= *basis_limit;
            let rows = if include_basis {
                (0..r.dimension)
                    .map(|i| {
                        let g = r.basis_vector(i);
                        fields
                            .child()
                            .value("free_column", r.kernel().free_columns()[i])
                            .rationals("values", g.values())
                    })
                    .collect()
            } else {
                Vec::new()
            };
            ok(
                "nullspace",
                Inputs::new().put("N", big_n).put("basis_limit", basis_limit),
                fields
                    .rows("rows", rows)
                    .value("N", *big_n)
                    .value("L", r.denom)
                    .value("rank", r.rank)
                    .value("dimension", r.dimension)
                    .value("forced_zero_points", r.forced_zero_points.clone())
                    .rationals("forced_zero_knots", &forced)
                    .value("basis_included", include_basis),
            )
        }
        Command::Minlip { big_n } => {
            check_cap(*big_n, opts)?;
            let inputs = Inputs::new().put("N", big_n);
            let system = build_constraint_system(*big_n)?;
            match min_lipschitz_unit_norm(*big_n)? {
                MinLipschitz::Infeasible => Ok(Outcome {
                    report: Report {
                        command: "minlip".into(),
                        inputs: inputs.0,
                        results: fields
                            .value("N", *big_n)
                            .value("L", system.denom())
                            .value("value", "infeasible")
                            .into_value(),
                    },
                    domain_failure: Some(format!("no nonzero survivor at N = {big_n}")),
                }),
                MinLipschitz::Optimal { value, witness, pinned } => ok(
                    "minlip",
                    inputs,
                    fields
                        .value("N", *big_n)
                        .value("L", system.denom())
                        .rational("value", &value)
                        .value("pinned", pinned)
                        .rationals("witness", witness.values())
                        .rational("witness_sup_norm", &witness.sup_norm())
                        .rational("witness_lipschitz", &witness.lipschitz())
                        .value("witness_in_kernel", system.is_satisfied_by(&witness)),
                ),
            }
        }
        Command::Probe {
            func,
            x,
            h,
            n,
            n_max,
            n_min,
        } => {
            require_positive("Nmin", *n_min)?;
            if n_max < n_min {
                return Err(CommandError::Usage("--Nmax must be at least --Nmin".into()));
            }
            let f = parse_func(func, true)?;
            let mut rows = Vec::new();
            let mut count = *n_min;
            let mut last = None;
            while count <= *n_max {
                let r = averaging_probe(&f, x, h, *n, count)?;
                rows.push(
                    fields
                        .child()
                        .value("N", count)
                        .rational("average", &r.average)
                        .rational("residual", &r.residual)
                        .rational("bound", &r.bound)
                        .rational("residual_times_N", &r.boundary_sum)
                        .value("within_bound", r.residual.abs() <= r.bound),
                );
                last = Some(r);
                count = count.saturating_mul(2);
            }
            let last = last.expect("at least one row");
            ok(
                "probe",
                Inputs::new()
                    .put("func", func)
                    .put("x", x)
                    .put("h", h)
                    .put("n", n)
                    .put("Nmin", n_min)
                    .put("Nmax", n_max),
                fields
                    .rows("rows", rows)
                    .value("cutoff", last.cutoff)
                    .rational("sup_bound", &last.sup_bound),
            )
        }
        Command::Telescope {
            func,
            x,
            n,
            j,
            h,
            big_n,
        } => {
            let g = parse_func(func, ez)?;
            let c = telescope_shift_identity(&g, x, *n, *j, h, *big_n)?;
            ok(
                "telescope",
                Inputs::new()
                    .put("func", func)
                    .put("x", x)
                    .put("n", n)
                    .put("j", j)
                    .put("h", h)
                    .put("N", big_n)
                    .put("extend_zero", ez),
                fields
                    .value("cofactor", c.cofactor)
                    .rational("y", &c.y)
                    .rational("lhs", &c.lhs)
                    .rational("rhs", &c.rhs)
                    .value("equal", c.equal),
            )
        }
        Command::Walkthrough { func, n, h, big_n, x } => {
            let f = parse_func(func, true)?;
            let r = proof_walkthrough(&f, *n, h, *big_n, x)?;
            let rows = r
                .shifts
                .iter()
                .map(|s| {
                    fields
                        .child()
                        .value("j", s.j)
                        .value("cofactor", s.cofactor)
                        .rational("weight", &s.weight)
                        .rational("head", &s.head)
                        .rational("tail", &s.tail)
                        .rational("displayed_tail", &s.displayed_tail)
                        .rational("displayed_head_at_y", &s.displayed_head_at_y)
                        .rational("interpolant_term", &s.interpolant_term)
                })
                .collect();
            let note = if r.displayed_indexing_agrees {
                "displayed index ranges agree with the shifted-argument reading"
            } else {
                "displayed index ranges differ from the shifted-argument reading; second_term uses the shifted reading"
            };
            ok(
                "walkthrough",
                Inputs::new()
                    .put("func", func)
                    .put("n", n)
                    .put("h", h)
                    .put("N", big_n)
                    .put("x", x),
                fields
                    .rows("rows", rows)
                    .rational("y", &r.y)
                    .rationals("interpolant", r.interpolant.coeffs())
                    .rational("leading_coefficient", &r.leading_coefficient)
                    .value("degree_reduced", r.degree_reduced)
                    .rational("f_at_x", &r.f_at_x)
                    .rational("interpolant_at_x", &r.interpolant_at_x)
                    .rational("average_at_x", &r.average_at_x)
                    .rational("average_at_y", &r.average_at_y)
                    .rational("first_term", &r.first_term)
                    .rational("first_term_limit", &r.first_term_limit)
                    .rational("first_term_residual", &r.first_term_residual)
                    .rational("first_term_envelope", &r.first_term_envelope)
                    .rational("averaging_target", &r.averaging_target)
                    .rational("averaging_target_gap", &r.averaging_target_gap)
                    .rational("second_term", &r.second_term)
                    .rational("second_term_displayed", &r.second_term_displayed)
                    .value("reindexing_holds", r.reindexing_holds)
                    .value("displayed_indexing_agrees", r.displayed_indexing_agrees)
                    .value("indexing_note", note)
                    .rational("final_lhs", &r.final_lhs)
                    .rational("final_residual", &r.final_residual)
                    .rational("final_envelope", &r.final_envelope)
                    .rational("unresolved_gap", &r.unresolved_gap),
            )
        }
    }
}
