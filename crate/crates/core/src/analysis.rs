//! Error norms, convergence tables and numerical certificates for the
//! properties the schemes rely on.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::grid::{discrete_l2_norm, max_norm, second_diff, Field, Grid};
use crate::problems::{self, AnyProblem, NamedProblem};
use crate::stepper::{SolutionHistory, SpaceTimeFn};
use crate::weights::{
    gen_fn_subdiffusion, gen_fn_wave, grunwald_derivative_weights, grunwald_integral_weights,
    lambda_subdiffusion, lambda_wave, weighted_shift_coefficients_derivative,
    weighted_shift_coefficients_integral, FracOrder, ShiftPair,
};

/// Smallest eigenvalue accepted as "non-negative" in the Toeplitz checks.
pub const PSD_TOLERANCE: f64 = -1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErrorReport {
    /// `max_k ||U^k - u^k||_∞` over all nodes.
    pub e_inf: f64,
    /// `max_k ||U^k - u^k||` in the interior L2 norm.
    pub e_l2: f64,
    pub grid: Grid,
}

pub enum Reference<'a> {
    Exact(&'a SpaceTimeFn),
    /// A finer run whose nodes contain the coarse nodes.
    History(&'a SolutionHistory),
}

pub fn error_report(history: &SolutionHistory, reference: Reference<'_>) -> Result<ErrorReport> {
    let grid = history.grid;
    let h = grid.h();
    let mut e_inf: f64 = 0.0;
    let mut e_l2: f64 = 0.0;
    let mut record = |k: usize, truth: Field| -> Result<()> {
        let diff = truth.sub(history.level(k))?;
        e_inf = e_inf.max(max_norm(&diff));
        e_l2 = e_l2.max(discrete_l2_norm(&diff, h));
        Ok(())
    };
    match reference {
        Reference::Exact(u) => {
            for k in 0..=grid.n() {
                let t = grid.t(k);
                record(k, grid.sample(|x| u(x, t)))?;
            }
        }
        Reference::History(fine) => {
            let (sx, st) = coarsening_ratios(&grid, &fine.grid)?;
            for k in 0..=grid.n() {
                let level = fine.level(k * st);
                let truth = Field((0..=grid.m()).map(|i| level[i * sx]).collect());
                record(k, truth)?;
            }
        }
    }
    Ok(ErrorReport { e_inf, e_l2, grid })
}

pub fn error_report_exact(history: &SolutionHistory, exact: &SpaceTimeFn) -> ErrorReport {
    error_report(history, Reference::Exact(exact)).expect("exact reference always matches")
}

fn coarsening_ratios(coarse: &Grid, fine: &Grid) -> Result<(usize, usize)> {
    let same = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(b.abs());
    if !same(coarse.length(), fine.length()) || !same(coarse.final_time(), fine.final_time()) {
        return Err(Error::GridMismatch("domains differ".into()));
    }
    if !fine.m().is_multiple_of(coarse.m()) || !fine.n().is_multiple_of(coarse.n()) {
        return Err(Error::GridMismatch(format!(
            "({}, {}) does not divide ({}, {})",
            coarse.m(),
            coarse.n(),
            fine.m(),
            fine.n()
        )));
    }
    Ok((fine.m() / coarse.m(), fine.n() / coarse.n()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Temporal,
    Spatial,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RateRow {
    pub step: f64,
    pub e_inf: f64,
    pub rate_inf: Option<f64>,
    pub e_l2: f64,
    pub rate_l2: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateTable {
    pub axis: Axis,
    pub rows: Vec<RateRow>,
}

/// `log2(coarse / fine)`, undefined when either error vanishes.
pub fn observed_rate(coarse: f64, fine: f64) -> Option<f64> {
    (coarse > 0.0 && fine > 0.0 && coarse.is_finite() && fine.is_finite())
        .then(|| (coarse / fine).log2())
}

impl RateTable {
    /// `(step, e_inf, e_l2)` triples ordered from coarse to fine.
    pub fn from_errors(axis: Axis, errors: &[(f64, f64, f64)]) -> Self {
        let rows = errors
            .iter()
            .enumerate()
            .map(|(i, &(step, e_inf, e_l2))| {
                let prev = i.checked_sub(1).map(|j| errors[j]);
                RateRow {
                    step,
                    e_inf,
                    rate_inf: prev.and_then(|p| observed_rate(p.1, e_inf)),
                    e_l2,
                    rate_l2: prev.and_then(|p| observed_rate(p.2, e_l2)),
                }
            })
            .collect();
        Self { axis, rows }
    }

    pub fn rates_inf(&self) -> Vec<f64> {
        self.rows.iter().filter_map(|r| r.rate_inf).collect()
    }

    pub fn rates_l2(&self) -> Vec<f64> {
        self.rows.iter().filter_map(|r| r.rate_l2).collect()
    }
}

fn check_doubling(counts: &[usize]) -> Result<()> {
    if counts.is_empty() {
        return Err(Error::NotHalving("empty list".into()));
    }
    if counts[0] == 0 {
        return Err(Error::NotHalving("zero subdivisions".into()));
    }
    for w in counts.windows(2) {
        if w[1] != 2 * w[0] {
            return Err(Error::NotHalving(format!(
                "{} is not followed by {}",
                w[0],
                2 * w[0]
            )));
        }
    }
    Ok(())
}

fn rate_study(problem: &NamedProblem, axis: Axis, grids: Vec<Grid>) -> Result<RateTable> {
    let reference = match (problem.exact(), problem.reference_grid) {
        (Some(_), _) => None,
        (None, Some(g)) => Some(problem.solve(&g)?),
        (None, None) => {
            return Err(Error::InvalidProblem(format!(
                "{} has neither an exact solution nor a reference grid",
                problem.id
            )))
        }
    };
    let errors = grids
        .par_iter()
        .map(|grid| {
            let history = problem.solve(grid)?;
            let report = match (&reference, problem.exact()) {
                (Some(r), _) => error_report(&history, Reference::History(r))?,
                (None, Some(u)) => error_report(&history, Reference::Exact(u))?,
                (None, None) => unreachable!(),
            };
            let step = match axis {
                Axis::Temporal => grid.tau(),
                Axis::Spatial => grid.h(),
            };
            Ok((step, report.e_inf, report.e_l2))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RateTable::from_errors(axis, &errors))
}

/// Fixed `M`, `N` doubling along `time_steps`, on the unit square.
pub fn temporal_rate_study(
    problem: &NamedProblem,
    m: usize,
    time_steps: &[usize],
) -> Result<RateTable> {
    check_doubling(time_steps)?;
    let grids = time_steps
        .iter()
        .map(|&n| Grid::unit(m, n))
        .collect::<Result<Vec<_>>>()?;
    rate_study(problem, Axis::Temporal, grids)
}

/// Fixed `N`, `M` doubling along `space_steps`, on the unit square.
pub fn spatial_rate_study(
    problem: &NamedProblem,
    n: usize,
    space_steps: &[usize],
) -> Result<RateTable> {
    check_doubling(space_steps)?;
    let grids = space_steps
        .iter()
        .map(|&m| Grid::unit(m, n))
        .collect::<Result<Vec<_>>>()?;
    rate_study(problem, Axis::Spatial, grids)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaKind {
    Subdiffusion,
    Wave,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PsdCheck {
    pub min_eigenvalue: f64,
    pub pass: bool,
}

/// Symmetric Toeplitz matrix with diagonal `λ_0` and `j`-th off-diagonal `λ_j / 2`.
pub fn toeplitz_matrix(kind: LambdaKind, order: FracOrder, k: usize) -> DMatrix<f64> {
    let lambdas = match kind {
        LambdaKind::Subdiffusion => lambda_subdiffusion(order, k.saturating_sub(1)),
        LambdaKind::Wave => lambda_wave(order, k.saturating_sub(1)),
    };
    DMatrix::from_fn(k, k, |i, j| {
        let d = i.abs_diff(j);
        if d == 0 {
            lambdas[0]
        } else {
            0.5 * lambdas[d]
        }
    })
}

pub fn toeplitz_psd_check(kind: LambdaKind, order: FracOrder, k: usize) -> Result<PsdCheck> {
    if k == 0 {
        return Err(Error::Domain {
            what: "k",
            value: 0.0,
            domain: "k >= 1",
        });
    }
    let eig = SymmetricEigen::new(toeplitz_matrix(kind, order, k));
    let min_eigenvalue = eig
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    Ok(PsdCheck {
        min_eigenvalue,
        pass: min_eigenvalue >= PSD_TOLERANCE,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OperatorKind {
    Derivative,
    Integral,
}

/// Weighted and shifted Grünwald operator applied to `f` at `t`, with `f`
/// taken as zero for non-positive arguments.
pub fn shifted_operator(
    kind: OperatorKind,
    order: FracOrder,
    shifts: ShiftPair,
    f: impl Fn(f64) -> f64,
    t: f64,
    tau: f64,
) -> f64 {
    let a = order.value();
    let terms = ((t / tau).ceil() as usize) + shifts.p().max(shifts.q()).max(0) as usize + 1;
    let (weights, (cp, cq), scale) = match kind {
        OperatorKind::Derivative => (
            grunwald_derivative_weights(order, terms),
            weighted_shift_coefficients_derivative(order, shifts),
            tau.powf(-a),
        ),
        OperatorKind::Integral => (
            grunwald_integral_weights(order, terms),
            weighted_shift_coefficients_integral(order, shifts),
            tau.powf(a),
        ),
    };
    let shifted = |r: i32| -> f64 {
        weights
            .values()
            .iter()
            .enumerate()
            .map(|(k, w)| {
                let s = t - (k as f64 - f64::from(r)) * tau;
                if s > 0.0 {
                    w * f(s)
                } else {
                    0.0
                }
            })
            .sum()
    };
    scale * (cp * shifted(shifts.p()) + cq * shifted(shifts.q()))
}

/// Applies the shifted operator to `t^σ` (cut off at zero) at `t = 1` for
/// each `τ` and compares with the exact fractional derivative or integral.
/// Both norms of the table equal the pointwise error.
pub fn operator_order_check(
    kind: OperatorKind,
    order: FracOrder,
    shifts: ShiftPair,
    sigma: f64,
    taus: &[f64],
) -> Result<RateTable> {
    if ![(0, -1), (1, 0), (1, -1)].contains(&(shifts.p(), shifts.q())) {
        return Err(Error::UnsupportedShifts {
            p: shifts.p(),
            q: shifts.q(),
        });
    }
    if sigma.is_nan() || sigma < 4.0 {
        return Err(Error::Domain {
            what: "sigma",
            value: sigma,
            domain: "[4, inf)",
        });
    }
    if taus.is_empty() || taus.iter().any(|&t| t.is_nan() || t <= 0.0) {
        return Err(Error::NotHalving("step sizes must be positive".into()));
    }
    let a = order.value();
    let exact = match kind {
        OperatorKind::Derivative => gamma(sigma + 1.0) / gamma(sigma + 1.0 - a),
        OperatorKind::Integral => gamma(sigma + 1.0) / gamma(sigma + 1.0 + a),
    };
    let errors: Vec<_> = taus
        .iter()
        .map(|&tau| {
            let approx = shifted_operator(kind, order, shifts, |s| s.powf(sigma), 1.0, tau);
            let e = (approx - exact).abs();
            (tau, e, e)
        })
        .collect();
    Ok(RateTable::from_errors(Axis::Temporal, &errors))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StabilityOutcome {
    /// `max_k ||v^k - u^k||`.
    pub deviation: f64,
    pub bound: f64,
    pub pass: bool,
}

fn vanishes_at_boundary(f: &Field, name: &str) -> Result<()> {
    let last = f.len().saturating_sub(1);
    if f.is_empty() || f[0] != 0.0 || f[last] != 0.0 {
        return Err(Error::InvalidProblem(format!(
            "{name} must vanish at both boundaries"
        )));
    }
    Ok(())
}

/// Perturbs the initial data by `rho` (and, for the wave equation, the
/// initial velocity by `rho_tilde`) and compares the deviation of the two
/// runs against the a-priori stability bound.
pub fn stability_experiment(
    problem: &NamedProblem,
    grid: &Grid,
    rho: &Field,
    rho_tilde: Option<&Field>,
) -> Result<StabilityOutcome> {
    let nodes = grid.m() + 1;
    if rho.len() != nodes {
        return Err(Error::SizeMismatch {
            expected: nodes,
            got: rho.len(),
        });
    }
    vanishes_at_boundary(rho, "rho")?;
    if let Some(rt) = rho_tilde {
        if rt.len() != nodes {
            return Err(Error::SizeMismatch {
                expected: nodes,
                got: rt.len(),
            });
        }
        vanishes_at_boundary(rt, "rho_tilde")?;
    }

    let h = grid.h();
    let growth = 5f64.sqrt() * grid.final_time().exp();
    let d2rho = second_diff(rho, h)?;
    let (base, perturbed, bound) = match &problem.problem {
        AnyProblem::SubDiffusion(p) => {
            if rho_tilde.is_some() {
                return Err(Error::InvalidProblem(
                    "velocity perturbation only applies to the wave equation".into(),
                ));
            }
            let c2 = 1.0
                + p.kappa1 / gamma(1.0 - p.alpha.value())
                + p.kappa2 / gamma(1.0 - p.beta.value());
            let u0 = p.initial.clone().unwrap_or_else(|| Field::zeros(nodes));
            let mut q = p.clone();
            q.initial = Some(u0.add(rho)?);
            let bound = growth * c2 * discrete_l2_norm(&d2rho, h) + discrete_l2_norm(rho, h);
            (
                crate::subdiffusion::solve(p, grid)?,
                crate::subdiffusion::solve(&q, grid)?,
                bound,
            )
        }
        AnyProblem::Wave(p) => {
            let u0 = p.initial.clone().unwrap_or_else(|| Field::zeros(nodes));
            let mut q = p.clone();
            q.initial = Some(u0.add(rho)?);
            let zero = Field::zeros(nodes);
            let rt = rho_tilde.unwrap_or(&zero);
            let c = p.kappa / gamma(p.alpha.value() + 1.0) + 1.0;
            let combined = d2rho.scaled(c).add(rt)?;
            let bound = growth * discrete_l2_norm(&combined, h) + discrete_l2_norm(rho, h);
            (
                crate::wave::solve_wave(p, grid)?,
                crate::wave::solve_wave_with_velocity_offset(&q, grid, rho_tilde)?,
                bound,
            )
        }
    };
    let mut deviation: f64 = 0.0;
    for (u, v) in base.levels.iter().zip(&perturbed.levels) {
        deviation = deviation.max(discrete_l2_norm(&v.sub(u)?, h));
    }
    Ok(StabilityOutcome {
        deviation,
        bound,
        pass: deviation <= bound,
    })
}

/// Random interior perturbation with entries in `[-scale, scale]`.
pub fn random_perturbation(rng: &mut impl Rng, nodes: usize, scale: f64) -> Field {
    let mut v: Vec<f64> = (0..nodes)
        .map(|_| scale * rng.gen_range(-1.0..=1.0))
        .collect();
    v[0] = 0.0;
    v[nodes - 1] = 0.0;
    Field(v)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckItem {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// `α = 0.05, 0.15, ..., 0.95`.
pub fn order_grid() -> Vec<FracOrder> {
    (0..10)
        .map(|i| FracOrder::new(0.05 + 0.1 * i as f64).expect("grid lies in (0, 1)"))
        .collect()
}

pub const PSD_SIZES: [usize; 5] = [1, 2, 10, 50, 200];

pub fn check_psd_sweep() -> Vec<CheckItem> {
    let mut out = Vec::new();
    for (kind, label) in [
        (LambdaKind::Subdiffusion, "subdiffusion"),
        (LambdaKind::Wave, "wave"),
    ] {
        let worst = order_grid()
            .into_par_iter()
            .flat_map_iter(|a| {
                PSD_SIZES.iter().map(move |&k| {
                    let c = toeplitz_psd_check(kind, a, k).expect("k >= 1");
                    (a.value(), k, c.min_eigenvalue)
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .fold(
                (0.0, 0, f64::INFINITY),
                |acc, x| if x.2 < acc.2 { x } else { acc },
            );
        out.push(CheckItem::new(
            format!("toeplitz psd ({label})"),
            worst.2 >= PSD_TOLERANCE,
            format!(
                "min eigenvalue {:.3e} at alpha={:.2}, k={}",
                worst.2, worst.0, worst.1
            ),
        ));
    }
    out
}

pub const SYMBOL_POINTS: usize = 2048;

pub fn check_generating_functions() -> Vec<CheckItem> {
    let mut sub_min = f64::INFINITY;
    let mut wave_min = f64::INFINITY;
    for a in order_grid() {
        for j in 0..SYMBOL_POINTS {
            let x = PI * j as f64 / (SYMBOL_POINTS - 1) as f64;
            sub_min = sub_min.min(gen_fn_subdiffusion(a, x).expect("x in [0, pi]"));
            let x = PI * (j + 1) as f64 / SYMBOL_POINTS as f64;
            wave_min = wave_min.min(gen_fn_wave(a, x).expect("x in (0, pi]"));
        }
    }
    vec![
        CheckItem::new(
            "symbol nonnegative (subdiffusion)",
            sub_min >= 0.0,
            format!("min {sub_min:.3e} over {SYMBOL_POINTS} points"),
        ),
        CheckItem::new(
            "symbol nonnegative (wave)",
            wave_min >= 0.0,
            format!("min {wave_min:.3e} over {SYMBOL_POINTS} points"),
        ),
    ]
}

/// `Σ_{k≤n} g_k` against the product form `Π_{j=1}^{n} (1 - α/j)` of
/// `(-1)^n binom(α - 1, n)`, for `n ≤ max_n`.
pub fn partial_sum_deviation(order: FracOrder, max_n: usize) -> f64 {
    let a = order.value();
    let g = grunwald_derivative_weights(order, max_n);
    let mut running = 0.0;
    let mut closed = 1.0;
    let mut worst: f64 = 0.0;
    for n in 0..=max_n {
        running += g[n];
        if n > 0 {
            closed *= 1.0 - a / n as f64;
        }
        worst = worst.max(((running - closed) / closed).abs());
    }
    worst
}

pub fn check_weight_identities() -> Vec<CheckItem> {
    let (worst, at) = order_grid()
        .into_iter()
        .map(|a| (partial_sum_deviation(a, 500), a.value()))
        .fold((0.0, 0.0), |acc, x| if x.0 > acc.0 { x } else { acc });
    let positive = order_grid().into_iter().all(|a| {
        let g = grunwald_derivative_weights(a, 500);
        g.values()
            .iter()
            .scan(0.0, |s, v| {
                *s += v;
                Some(*s)
            })
            .all(|s| s > 0.0)
    });
    // τ^{-α} Σ_{k≤1/τ} g_k → 1/Γ(1-α) at first order
    let mut limit_ok = true;
    let mut limit_detail = String::new();
    for a in order_grid() {
        let target = 1.0 / gamma(1.0 - a.value());
        let errs: Vec<f64> = (6..=12)
            .map(|p| {
                let n = 1usize << p;
                let s: f64 = grunwald_derivative_weights(a, n).values().iter().sum();
                ((n as f64).powf(a.value()) * s - target).abs()
            })
            .collect();
        let rate = observed_rate(errs[errs.len() - 2], errs[errs.len() - 1]).unwrap_or(f64::NAN);
        if !((0.8..=1.2).contains(&rate)) {
            limit_ok = false;
        }
        limit_detail.push_str(&format!("{:.2}:{rate:.3} ", a.value()));
    }
    vec![
        CheckItem::new(
            "grunwald partial sums",
            worst <= 1e-12 && positive,
            format!("max relative deviation {worst:.2e} (alpha={at:.2}), all positive: {positive}"),
        ),
        CheckItem::new(
            "scaled partial-sum limit order",
            limit_ok,
            limit_detail.trim_end().to_string(),
        ),
    ]
}

pub const OPERATOR_ORDERS: [f64; 3] = [0.3, 0.5, 0.7];
pub const OPERATOR_SHIFTS: [(i32, i32); 2] = [(0, -1), (1, 0)];

/// `τ = 2^{-4} .. 2^{-10}`.
pub fn operator_taus() -> Vec<f64> {
    (4..=10).map(|p| 0.5f64.powi(p)).collect()
}

pub fn check_operator_orders() -> Vec<CheckItem> {
    let taus = operator_taus();
    let mut out = Vec::new();
    for kind in [OperatorKind::Derivative, OperatorKind::Integral] {
        for (p, q) in OPERATOR_SHIFTS {
            for a in OPERATOR_ORDERS {
                let order = FracOrder::new(a).expect("valid order");
                let shifts = ShiftPair::new(p, q).expect("p != q");
                let table = operator_order_check(kind, order, shifts, 4.0, &taus)
                    .expect("supported shifts");
                let rate = table.rates_inf().last().copied().unwrap_or(f64::NAN);
                out.push(CheckItem::new(
                    format!("{kind:?} operator order, alpha={a}, shifts=({p},{q})").to_lowercase(),
                    (rate - 2.0).abs() <= 0.2,
                    format!("observed order {rate:.4}"),
                ));
            }
        }
    }
    out
}

pub const STABILITY_TRIALS: usize = 20;

/// Random perturbation experiments on `sub.t2sin2pix` and `wave.exp`
/// (`α = 0.5`, `M = N = 50`).
pub fn check_stability(seed: u64) -> Result<Vec<CheckItem>> {
    let grid = Grid::unit(50, 50)?;
    let nodes = grid.m() + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for problem in [
        problems::make_t2sin2pix_subdiffusion(0.5)?,
        problems::make_exp_wave(0.5)?,
    ] {
        let is_wave = matches!(problem.problem, AnyProblem::Wave(_));
        let perturbations: Vec<(Field, Option<Field>)> = (0..STABILITY_TRIALS)
            .map(|_| {
                let scale = 10f64.powf(rng.gen_range(-6.0..=-1.0));
                let rho = random_perturbation(&mut rng, nodes, scale);
                let rho_tilde = is_wave.then(|| random_perturbation(&mut rng, nodes, scale));
                (rho, rho_tilde)
            })
            .collect();
        let outcomes = perturbations
            .par_iter()
            .map(|(rho, rt)| stability_experiment(&problem, &grid, rho, rt.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let passed = outcomes.iter().filter(|o| o.pass).count();
        let worst = outcomes
            .iter()
            .map(|o| o.deviation / o.bound)
            .fold(0.0, f64::max);
        out.push(CheckItem::new(
            format!("stability bound ({})", problem.id),
            passed == outcomes.len(),
            format!(
                "{passed}/{} within bound, max deviation/bound {worst:.3e}",
                outcomes.len()
            ),
        ));
    }
    Ok(out)
}

/// Every certificate: weight identities, Toeplitz PSD sweep, symbol
/// positivity, operator orders and stability experiments.
pub fn verification_suite(seed: u64) -> Result<Vec<CheckItem>> {
    let mut items = check_weight_identities();
    items.extend(check_psd_sweep());
    items.extend(check_generating_functions());
    items.extend(check_operator_orders());
    items.extend(check_stability(seed)?);
    Ok(items)
}
