//! Executable checks of the identities and inequalities satisfied by
//! networks: Green's formula, ΣΔf = 0, the maximum principle, conservation
//! of power, Thomson's principle, sign conditions, independence of the
//! solution choice, and agreement of the two impedance models.
//!
//! Checks over R(λ) are exact. Checks over ℂ use a scale-relative tolerance
//! and report the residual. Every randomized check is deterministic given
//! its seed.

use std::collections::HashSet;
use std::fmt::{self, Display};

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{format_complex, ratio, Field, Rational, RationalFunction, ZeroTest};
use crate::impedance::{
    compare_with, effective_complex, effective_symbolic, energy_complex_weighted, energy_symbolic,
};
use crate::network::{EdgeParams, Mode, Network, NetworkBuilder, VertexFunction, WeightedGraph};
use crate::solver::{self, GaussOutcome, SingularSet, SolutionClass, DEFAULT_RANK_TOL};

/// Tolerance for Green's formula and ΣΔf = 0 over ℂ.
pub const GREEN_TOL: f64 = 1e-9;
/// Relative tolerance for conservation, choice invariance and agreement.
pub const RELATIVE_TOL: f64 = 1e-8;
/// Slack for the sign conditions, relative to max(1, |Z|).
pub const SIGN_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Preconditions not met (e.g. non-positive weights for a K-side check).
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

impl Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub status: CheckStatus,
    /// Offending values on failure, the reason when skipped, empty on pass.
    pub witness: String,
    pub seed: u64,
}

impl CheckReport {
    pub fn pass(check: &str, instance: impl Into<String>) -> Self {
        Self::new(check, instance, CheckStatus::Pass, String::new())
    }

    pub fn fail(check: &str, instance: impl Into<String>, witness: impl Into<String>) -> Self {
        Self::new(check, instance, CheckStatus::Fail, witness)
    }

    pub fn skipped(check: &str, instance: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::new(check, instance, CheckStatus::Skipped, reason)
    }

    fn new(
        check: &str,
        instance: impl Into<String>,
        status: CheckStatus,
        witness: impl Into<String>,
    ) -> Self {
        CheckReport {
            check: check.to_string(),
            instance: instance.into(),
            status,
            witness: witness.into(),
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn is_fail(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// True when no report failed.
pub fn all_passed(reports: &[CheckReport]) -> bool {
    !reports.iter().any(CheckReport::is_fail)
}

// ---------------------------------------------------------------------------
// random instances

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetworkKind {
    Any,
    /// Every L = 0.
    PureRc,
    /// Every D = 0 (no capacitors).
    PureRl,
}

const PARAM_VALUES: [(i64, i64); 5] = [(0, 1), (1, 2), (1, 1), (2, 1), (5, 1)];

fn pick_param<R: Rng>(rng: &mut R) -> Rational {
    let (n, d) = *PARAM_VALUES.choose(rng).expect("nonempty");
    ratio(n, d)
}

fn random_params<R: Rng>(rng: &mut R, kind: NetworkKind) -> EdgeParams {
    loop {
        let r = pick_param(rng);
        let l = if kind == NetworkKind::PureRc {
            Rational::default()
        } else {
            pick_param(rng)
        };
        let d = if kind == NetworkKind::PureRl {
            Rational::default()
        } else {
            pick_param(rng)
        };
        if !(num_traits::Zero::is_zero(&r)
            && num_traits::Zero::is_zero(&l)
            && num_traits::Zero::is_zero(&d))
        {
            return EdgeParams::rlc(r, l, d);
        }
    }
}

/// Random connected strict network on `min_vertices..=max_vertices`
/// vertices: a random spanning tree plus extra edges, with R, L and D drawn
/// from {0, 1/2, 1, 2, 5} (D = 0 meaning no capacitor).
pub fn random_network_sized<R: Rng>(
    rng: &mut R,
    kind: NetworkKind,
    min_vertices: usize,
    max_vertices: usize,
) -> Network {
    let n = rng.gen_range(min_vertices.max(2)..=max_vertices.max(min_vertices).max(2));
    let name = |i: usize| match i {
        0 => "a0".to_string(),
        i if i == n - 1 => "a1".to_string(),
        i => format!("v{i}"),
    };
    let mut builder = NetworkBuilder::new("a0", "a1");
    for i in 0..n {
        builder = builder.vertex(name(i));
    }
    let mut seen = HashSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        seen.insert((j, i));
        builder = builder.edge(name(j), name(i), random_params(rng, kind));
    }
    let extra = rng.gen_range(0..=n);
    for _ in 0..extra {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let key = (a.min(b), a.max(b));
        if a == b || !seen.insert(key) {
            continue;
        }
        builder = builder.edge(name(key.0), name(key.1), random_params(rng, kind));
    }
    builder.build().expect("random network is valid")
}

/// [`random_network_sized`] on 4–8 vertices.
pub fn random_network<R: Rng>(rng: &mut R, kind: NetworkKind) -> Network {
    random_network_sized(rng, kind, 4, 8)
}

/// Small rational function: numerator of degree ≤ 2 with coefficients in
/// −3..=3 over 1 or λ + k.
pub fn random_rational_function<R: Rng>(rng: &mut R) -> RationalFunction {
    let deg = rng.gen_range(0..=2);
    let num: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-3..=3)).collect();
    let den: Vec<i64> = if rng.gen_bool(0.5) {
        vec![1]
    } else {
        vec![rng.gen_range(1..=3), 1]
    };
    RationalFunction::from_ints(&num, &den)
}

/// Rational function ≻ 0: a + bλ with a, b ≥ 0 not both zero.
fn random_positive_function<R: Rng>(rng: &mut R) -> RationalFunction {
    loop {
        let (a, b) = (rng.gen_range(0..=4), rng.gen_range(0..=2));
        if a + b > 0 {
            return RationalFunction::from_ints(&[a, b], &[1]);
        }
    }
}

pub fn random_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

/// λ = iω with ω log-uniform in [0.1, 10].
pub fn random_physical_lambda<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(0.0, 10f64.powf(rng.gen_range(-1.0..1.0)))
}

fn random_function<F, R: Rng>(
    rng: &mut R,
    n: usize,
    mut gen: impl FnMut(&mut R) -> F,
) -> VertexFunction<F> {
    VertexFunction((0..n).map(|_| gen(rng)).collect())
}

/// Random nonempty Ω ⊆ V; proper whenever |V| > 1 so the boundary term of
/// Green's formula is present.
pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    let k = if n > 1 { rng.gen_range(1..n) } else { 1 };
    let mut s = all[..k].to_vec();
    s.sort_unstable();
    s
}

// ---------------------------------------------------------------------------
// identities valid over either field

/// Σ_{x∈Ω} Δf(x) g(x) = −½ Σ_{x,y∈Ω} ∇f ∇g ρ + Σ_{x∈Ω} Σ_{y∉Ω} ∇_xy f g(x) ρ_xy.
///
/// Exact for R(λ); for ℂ the residual must be at most `tol` times the sum of
/// the magnitudes of all terms.
pub fn check_green<F: Field + Display>(
    weights: &WeightedGraph<F>,
    f: &VertexFunction<F>,
    g: &VertexFunction<F>,
    omega: &[usize],
    tol: f64,
) -> CheckReport {
    let n = weights.vertex_count();
    let instance = format!("|V|={n} |Ω|={}", omega.len());
    if omega.is_empty() {
        return CheckReport::skipped("green", instance, "Ω is empty");
    }
    let mut inside = vec![false; n];
    for &x in omega {
        inside[x] = true;
    }
    let mut scale = 0.0;
    let mut lhs = F::zero();
    let mut inner = F::zero();
    let mut boundary = F::zero();
    for &x in omega {
        let term = weights.laplacian_at(f, x) * g[x].clone();
        scale += term.magnitude();
        lhs = lhs + term;
        for (y, w) in weights.neighbors(x) {
            let grad = f[*y].clone() - f[x].clone();
            if inside[*y] {
                if x < *y {
                    let t = grad * (g[*y].clone() - g[x].clone()) * w.clone();
                    scale += t.magnitude();
                    inner = inner + t;
                }
            } else {
                let t = grad * g[x].clone() * w.clone();
                scale += t.magnitude();
                boundary = boundary + t;
            }
        }
    }
    let rhs = boundary - inner;
    let residual = lhs.clone() - rhs.clone();
    if residual.is_zero_under(&ZeroTest::new(tol, scale)) {
        CheckReport::pass("green", instance)
    } else {
        CheckReport::fail(
            "green",
            instance,
            format!(
                "lhs={lhs} rhs={rhs} residual={} scale={scale:e}",
                residual.magnitude()
            ),
        )
    }
}

/// Σ_{x∈V} Δf(x) = 0.
pub fn check_sum_laplacian<F: Field + Display>(
    weights: &WeightedGraph<F>,
    f: &VertexFunction<F>,
    tol: f64,
) -> CheckReport {
    let n = weights.vertex_count();
    let mut scale = 0.0;
    let mut total = F::zero();
    for x in 0..n {
        for (y, w) in weights.neighbors(x) {
            let t = (f[*y].clone() - f[x].clone()) * w.clone();
            scale += t.magnitude();
            total = total + t;
        }
    }
    let instance = format!("|V|={n}");
    if total.is_zero_under(&ZeroTest::new(tol, scale)) {
        CheckReport::pass("sum-laplacian", instance)
    } else {
        CheckReport::fail(
            "sum-laplacian",
            instance,
            format!("sum={total} scale={scale:e}"),
        )
    }
}

// ---------------------------------------------------------------------------
// ordered-field checks

fn vertex_names(net: &Network, set: &[usize]) -> String {
    set.iter()
        .map(|&x| net.name(x))
        .collect::<Vec<_>>()
        .join(",")
}

/// Maximum/minimum principle over R(λ) for u on V ∖ B.
///
/// Subharmonic u (Δu ⪰ 0 on V ∖ B) must satisfy max_{V∖B} u ⪯ max_B u;
/// superharmonic u the dual bound on the minimum. Harmonic u gets both.
pub fn check_max_principle(
    net: &Network,
    u: &VertexFunction<RationalFunction>,
    b: &[usize],
) -> CheckReport {
    let name = "max-principle";
    let instance = format!("B={{{}}}", vertex_names(net, b));
    let rest: Vec<usize> = (0..net.vertex_count()).filter(|x| !b.contains(x)).collect();
    if b.is_empty() || rest.is_empty() {
        return CheckReport::skipped(name, instance, "B and V∖B must both be nonempty");
    }
    let lap = net.laplacian_symbolic(u);
    let sub = rest.iter().all(|&x| !lap[x].signum().is_lt());
    let sup = rest.iter().all(|&x| !lap[x].signum().is_gt());
    if !sub && !sup {
        return CheckReport::skipped(
            name,
            instance,
            "not applicable: u is neither sub- nor superharmonic on V∖B",
        );
    }
    let max_of = |s: &[usize]| s.iter().map(|&x| &u[x]).max().expect("nonempty").clone();
    let min_of = |s: &[usize]| s.iter().map(|&x| &u[x]).min().expect("nonempty").clone();
    if sub && max_of(&rest) > max_of(b) {
        return CheckReport::fail(
            name,
            instance,
            format!(
                "max over V∖B = {} exceeds max over B = {}",
                max_of(&rest),
                max_of(b)
            ),
        );
    }
    if sup && min_of(&rest) < min_of(b) {
        return CheckReport::fail(
            name,
            instance,
            format!(
                "min over V∖B = {} is below min over B = {}",
                min_of(&rest),
                min_of(b)
            ),
        );
    }
    CheckReport::pass(name, instance)
}

/// Solves Δu = 0 off `boundary` with the prescribed boundary values. `None`
/// when the interior system is not uniquely solvable.
pub fn solve_boundary_problem<F: Field>(
    weights: &WeightedGraph<F>,
    boundary: &[(usize, F)],
    tol: f64,
) -> Option<VertexFunction<F>> {
    let n = weights.vertex_count();
    let mut value: Vec<Option<F>> = vec![None; n];
    for (x, v) in boundary {
        value[*x] = Some(v.clone());
    }
    let unknowns: Vec<usize> = (0..n).filter(|&x| value[x].is_none()).collect();
    let mut col = vec![usize::MAX; n];
    for (i, &x) in unknowns.iter().enumerate() {
        col[x] = i;
    }
    let m = unknowns.len();
    let mut matrix = vec![vec![F::zero(); m]; m];
    let mut rhs = vec![F::zero(); m];
    for (i, &x) in unknowns.iter().enumerate() {
        for (y, w) in weights.neighbors(x) {
            matrix[i][i] = matrix[i][i].clone() - w.clone();
            match &value[*y] {
                Some(b) => rhs[i] = rhs[i].clone() - w.clone() * b.clone(),
                None => matrix[i][col[*y]] = matrix[i][col[*y]].clone() + w.clone(),
            }
        }
    }
    let GaussOutcome::Unique(sol) = solver::gauss_solve(&matrix, &rhs, tol) else {
        return None;
    };
    let mut out = VertexFunction(
        value
            .into_iter()
            .map(|v| v.unwrap_or_else(F::zero))
            .collect(),
    );
    for (&x, v) in unknowns.iter().zip(sol) {
        out[x] = v;
    }
    Some(out)
}

fn non_positive_notice(net: &Network) -> Option<String> {
    net.first_non_positive_edge().map(|e| {
        format!(
            "non-positive weight on edge {}-{}: not a network over R(λ)",
            net.name(e.x),
            net.name(e.y)
        )
    })
}

/// 0 ⪯ v ⪯ 1 for the symbolic Dirichlet solution, plus the maximum
/// principle with B = {a0, a1}.
pub fn check_dirichlet_bounds(net: &Network) -> CheckReport {
    let name = "dirichlet-bounds";
    if let Some(msg) = non_positive_notice(net) {
        return CheckReport::skipped(name, "B={a0,a1}", msg);
    }
    let v = match solver::solve_symbolic(net) {
        Ok(s) => s.values,
        Err(e) => return CheckReport::fail(name, "B={a0,a1}", e.to_string()),
    };
    let (zero, one) = (RationalFunction::zero(), RationalFunction::one());
    if let Some(x) = (0..net.vertex_count()).find(|&x| v[x] < zero || v[x] > one) {
        return CheckReport::fail(
            name,
            "B={a0,a1}",
            format!("v({}) = {} outside [0, 1]", net.name(x), v[x]),
        );
    }
    let mp = check_max_principle(net, &v, &[net.a0(), net.a1()]);
    CheckReport {
        check: name.into(),
        ..mp
    }
}

/// Maximum principle for a harmonic function with random positive boundary
/// data on a random boundary set containing both terminals.
pub fn check_random_max_principle<R: Rng>(net: &Network, rng: &mut R) -> CheckReport {
    let name = "max-principle";
    if let Some(msg) = non_positive_notice(net) {
        return CheckReport::skipped(name, "random boundary", msg);
    }
    let mut b = vec![net.a0(), net.a1()];
    for x in net.interior() {
        if rng.gen_bool(0.3) {
            b.push(x);
        }
    }
    if b.len() == net.vertex_count() {
        b.pop();
    }
    b.sort_unstable();
    let data: Vec<(usize, RationalFunction)> = b
        .iter()
        .map(|&x| (x, random_positive_function(rng)))
        .collect();
    match solve_boundary_problem(net.symbolic_weights(), &data, 0.0) {
        Some(u) => check_max_principle(net, &u, &b),
        None => CheckReport::fail(
            name,
            format!("B={{{}}}", vertex_names(net, &b)),
            "boundary problem not uniquely solvable",
        ),
    }
}

/// ½ Σ (∇v)² ρ = P exactly.
pub fn check_conservation_symbolic(net: &Network) -> CheckReport {
    let name = "conservation-symbolic";
    if let Some(msg) = non_positive_notice(net) {
        return CheckReport::skipped(name, "R(λ)", msg);
    }
    match effective_symbolic(net) {
        Ok(s) => {
            let e = energy_symbolic(net, &s.solution.values);
            if e == s.p {
                CheckReport::pass(name, "R(λ)")
            } else {
                CheckReport::fail(name, "R(λ)", format!("energy={e} P={}", s.p))
            }
        }
        Err(e) => CheckReport::fail(name, "R(λ)", e.to_string()),
    }
}

/// Thomson's principle: `trials` competitors f with f(a0) = 0, f(a1) = 1
/// never have smaller energy than v, and tie only when f = v. The first
/// two competitors are v itself and v plus an indicator bump.
pub fn check_thomson(net: &Network, trials: usize, seed: u64) -> CheckReport {
    let name = "thomson";
    let instance = format!("{trials} competitors");
    if let Some(msg) = non_positive_notice(net) {
        return CheckReport::skipped(name, instance, msg).with_seed(seed);
    }
    let v = match solver::solve_symbolic(net) {
        Ok(s) => s.values,
        Err(e) => return CheckReport::fail(name, instance, e.to_string()).with_seed(seed),
    };
    let ev = energy_symbolic(net, &v);
    let interior = net.interior();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let f = match t {
            0 => v.clone(),
            1 if !interior.is_empty() => {
                let mut f = v.clone();
                let x = *interior.choose(&mut rng).expect("nonempty");
                f[x] = &f[x] + &RationalFunction::one();
                f
            }
            _ => {
                let mut f = random_function(&mut rng, net.vertex_count(), random_rational_function);
                f[net.a0()] = RationalFunction::zero();
                f[net.a1()] = RationalFunction::one();
                f
            }
        };
        let ef = energy_symbolic(net, &f);
        let bad = if ef == ev { f != v } else { ef < ev };
        if bad {
            let values: Vec<String> = (0..f.len())
                .map(|x| format!("{}={}", net.name(x), f[x]))
                .collect();
            return CheckReport::fail(
                name,
                instance,
                format!(
                    "trial {t}: energy(f)={ef} energy(v)={ev} f: {}",
                    values.join("; ")
                ),
            )
            .with_seed(seed);
        }
    }
    CheckReport::pass(name, instance).with_seed(seed)
}

// ---------------------------------------------------------------------------
// complex-side checks

/// ½ Σ |∇v|² ρ(λ) = P(λ) within [`RELATIVE_TOL`] of the energy-term scale.
/// Skipped when the problem has no solution at λ.
pub fn check_conservation_complex(net: &Network, lambda: Complex64) -> CheckReport {
    let name = "conservation-complex";
    let instance = format!("lambda={}", format_complex(lambda));
    let weights = match net.complex_weights(lambda) {
        Ok(w) => w,
        Err(e) => return CheckReport::skipped(name, instance, e.to_string()),
    };
    let r = match effective_complex(net, lambda, DEFAULT_RANK_TOL) {
        Ok(r) => r,
        Err(e) => return CheckReport::fail(name, instance, e.to_string()),
    };
    let (Some(v), Some(p)) = (r.outcome.particular.as_ref(), r.p.finite()) else {
        return CheckReport::skipped(name, instance, "class None: no solution");
    };
    let e = energy_complex_weighted(&weights, v);
    let scale: f64 = weights
        .edges()
        .map(|(x, y, w)| (v[y] - v[x]).norm_sqr() * w.norm())
        .sum::<f64>()
        .max(p.norm());
    if (e - p).norm() <= RELATIVE_TOL * scale {
        CheckReport::pass(name, instance)
    } else {
        CheckReport::fail(
            name,
            instance,
            format!(
                "energy={} P={} residual={:e}",
                format_complex(e),
                format_complex(p),
                (e - p).norm()
            ),
        )
    }
}

/// P computed from the particular solution and from particular + Σ tᵢ hᵢ
/// agree. Skipped unless the class at λ is `Multiple`.
pub fn check_choice_invariance<R: Rng>(
    net: &Network,
    lambda: Complex64,
    rng: &mut R,
) -> CheckReport {
    let name = "choice-invariance";
    let instance = format!("lambda={}", format_complex(lambda));
    let weights = match net.complex_weights(lambda) {
        Ok(w) => w,
        Err(e) => return CheckReport::skipped(name, instance, e.to_string()),
    };
    let outcome = match solver::solve_complex(net, lambda, DEFAULT_RANK_TOL) {
        Ok(o) => o,
        Err(e) => return CheckReport::fail(name, instance, e.to_string()),
    };
    if outcome.class != SolutionClass::Multiple {
        return CheckReport::skipped(name, instance, format!("class {} at this λ", outcome.class));
    }
    let v = outcome
        .particular
        .as_ref()
        .expect("Multiple has a particular solution");
    let mut w = v.clone();
    for h in &outcome.nullspace {
        let t = random_complex(rng);
        for x in 0..w.len() {
            w[x] += t * h[x];
        }
    }
    let a0 = net.a0();
    let p1 = crate::impedance::admittance_from(&weights, a0, v);
    let p2 = crate::impedance::admittance_from(&weights, a0, &w);
    let scale: f64 = weights
        .neighbors(a0)
        .iter()
        .map(|(x, r)| (v[*x].norm() + w[*x].norm()) * r.norm())
        .sum();
    if (p1 - p2).norm() <= RELATIVE_TOL * scale.max(f64::MIN_POSITIVE) {
        CheckReport::pass(name, instance)
    } else {
        CheckReport::fail(
            name,
            instance,
            format!(
                "P(particular)={} P(shifted)={}",
                format_complex(p1),
                format_complex(p2)
            ),
        )
    }
}

/// Re Z ≥ 0 at every λ = iω; Im Z ≤ 0 for pure RC and Im Z ≥ 0 for pure RL
/// networks. Slack is [`SIGN_TOL`]·max(1, |Z|). Requires a strict network.
pub fn check_signs(net: &Network, omegas: &[f64]) -> CheckReport {
    let name = "signs";
    let instance = format!("{} frequencies", omegas.len());
    if net.mode() != Mode::Strict || !net.is_all_rlc() {
        return CheckReport::skipped(name, instance, "requires a strict RLC network");
    }
    let (rc, rl) = (net.is_pure_rc(), net.is_pure_rl());
    for &omega in omegas {
        let lambda = Complex64::new(0.0, omega);
        let r = match effective_complex(net, lambda, DEFAULT_RANK_TOL) {
            Ok(r) => r,
            Err(e) => return CheckReport::fail(name, instance, format!("omega={omega}: {e}")),
        };
        let Some(z) = r.z.finite() else { continue };
        let slack = SIGN_TOL * z.norm().max(1.0);
        let witness = format!("omega={omega} Z={}", format_complex(z));
        if z.re < -slack {
            return CheckReport::fail(name, instance, format!("{witness}: Re Z < 0"));
        }
        if rc && z.im > slack {
            return CheckReport::fail(name, instance, format!("{witness}: pure RC but Im Z > 0"));
        }
        if rl && z.im < -slack {
            return CheckReport::fail(name, instance, format!("{witness}: pure RL but Im Z < 0"));
        }
    }
    CheckReport::pass(name, instance)
}

/// Z⁽¹⁾(λ) = Z⁽²⁾(λ) at `samples` random physical λ away from the singular
/// frequencies and from poles of Z⁽²⁾.
pub fn check_cramer(net: &Network, samples: usize, seed: u64) -> CheckReport {
    let name = "cramer";
    let instance = format!("{samples} frequencies");
    if let Some(msg) = non_positive_notice(net) {
        return CheckReport::skipped(name, instance, msg).with_seed(seed);
    }
    let singular: Vec<f64> = match solver::singular_frequencies(
        net,
        crate::exact::DEFAULT_ROOT_TOL,
        crate::exact::DEFAULT_MAX_ITER,
    ) {
        Ok(s) => s.physical().iter().map(|l| l.im).collect(),
        Err(e) => return CheckReport::fail(name, instance, e.to_string()).with_seed(seed),
    };
    let z2 = match effective_symbolic(net) {
        Ok(s) => s.z,
        Err(e) => return CheckReport::fail(name, instance, e.to_string()).with_seed(seed),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut attempts = 0;
    while done < samples && attempts < samples * 20 {
        attempts += 1;
        let lambda = random_physical_lambda(&mut rng);
        if singular
            .iter()
            .any(|&w| (w - lambda.im).abs() <= 1e-3 * w.max(1.0))
        {
            continue;
        }
        let report = match compare_with(
            net,
            Some(z2.clone()),
            lambda,
            DEFAULT_RANK_TOL,
            RELATIVE_TOL,
        ) {
            Ok(r) => r,
            Err(crate::Error::Exact(crate::error::ExactError::Pole(_))) => continue,
            Err(e) => return CheckReport::fail(name, instance, e.to_string()).with_seed(seed),
        };
        if report.z2.is_none() || report.z1.is_infinite() {
            continue;
        }
        if !report.agree {
            return CheckReport::fail(
                name,
                instance,
                format!(
                    "lambda={} Z1={} Z2={} class={}",
                    format_complex(lambda),
                    report.z1,
                    format_complex(report.z2.expect("checked")),
                    report.class
                ),
            )
            .with_seed(seed);
        }
        done += 1;
    }
    if done < samples {
        return CheckReport::fail(
            name,
            instance,
            format!("only {done} usable frequencies found"),
        )
        .with_seed(seed);
    }
    CheckReport::pass(name, instance).with_seed(seed)
}

// ---------------------------------------------------------------------------
// the full suite

fn aggregate(check: &str, runs: impl IntoIterator<Item = CheckReport>) -> CheckReport {
    let mut count = 0;
    let mut skipped = None;
    for r in runs {
        match r.status {
            CheckStatus::Fail => {
                return CheckReport {
                    check: check.into(),
                    ..r
                }
            }
            CheckStatus::Skipped => {
                skipped.get_or_insert(r);
            }
            CheckStatus::Pass => count += 1,
        }
    }
    match (count, skipped) {
        (0, Some(r)) => CheckReport {
            check: check.into(),
            ..r
        },
        _ => CheckReport::pass(check, format!("{count} instances")),
    }
}

fn sub_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Candidate λ for the choice-invariance check: the physical singular
/// frequencies, or random physical λ when every λ is singular.
fn multiple_candidates<R: Rng>(net: &Network, rng: &mut R) -> Vec<Complex64> {
    match solver::singular_frequencies(
        net,
        crate::exact::DEFAULT_ROOT_TOL,
        crate::exact::DEFAULT_MAX_ITER,
    ) {
        Ok(SingularSet::IdenticallyZero) => (0..3).map(|_| random_physical_lambda(rng)).collect(),
        Ok(s) => s.physical(),
        Err(_) => Vec::new(),
    }
}

/// Runs every check with default sample counts; `trials` random instances
/// for the Green/ΣΔf checks and `trials` Thomson competitors.
pub fn run_all(net: &Network, seed: u64, trials: usize) -> Vec<CheckReport> {
    let n = net.vertex_count();
    let trials = trials.max(1);
    let mut reports = Vec::new();

    let mut rng = sub_rng(seed, 1);
    reports.push(aggregate(
        "green-symbolic",
        (0..trials).map(|_| {
            let f = random_function(&mut rng, n, random_rational_function);
            let g = random_function(&mut rng, n, random_rational_function);
            let omega = if rng.gen_bool(0.2) {
                (0..n).collect()
            } else {
                random_subset(&mut rng, n)
            };
            check_green(net.symbolic_weights(), &f, &g, &omega, 0.0)
        }),
    ));

    let mut rng = sub_rng(seed, 2);
    reports.push(aggregate(
        "green-complex",
        (0..trials).map(|_| {
            let lambda = random_physical_lambda(&mut rng);
            let f = random_function(&mut rng, n, random_complex);
            let g = random_function(&mut rng, n, random_complex);
            let omega = random_subset(&mut rng, n);
            match net.complex_weights(lambda) {
                Ok(w) => check_green(&w, &f, &g, &omega, GREEN_TOL),
                Err(e) => CheckReport::skipped(
                    "green",
                    format!("lambda={}", format_complex(lambda)),
                    e.to_string(),
                ),
            }
        }),
    ));

    let mut rng = sub_rng(seed, 3);
    reports.push(aggregate(
        "sum-laplacian-symbolic",
        (0..trials).map(|_| {
            let f = random_function(&mut rng, n, random_rational_function);
            check_sum_laplacian(net.symbolic_weights(), &f, 0.0)
        }),
    ));

    let mut rng = sub_rng(seed, 4);
    reports.push(aggregate(
        "sum-laplacian-complex",
        (0..trials).map(|_| {
            let lambda = random_physical_lambda(&mut rng);
            let f = random_function(&mut rng, n, random_complex);
            match net.complex_weights(lambda) {
                Ok(w) => check_sum_laplacian(&w, &f, GREEN_TOL),
                Err(e) => CheckReport::skipped(
                    "sum-laplacian",
                    format!("lambda={}", format_complex(lambda)),
                    e.to_string(),
                ),
            }
        }),
    ));

    reports.push(check_dirichlet_bounds(net));

    let mut rng = sub_rng(seed, 5);
    reports.push(aggregate(
        "max-principle",
        (0..5).map(|_| check_random_max_principle(net, &mut rng)),
    ));

    reports.push(check_conservation_symbolic(net));

    let mut rng = sub_rng(seed, 6);
    reports.push(aggregate(
        "conservation-complex",
        (0..5).map(|_| check_conservation_complex(net, random_physical_lambda(&mut rng))),
    ));

    reports.push(check_thomson(net, trials, seed));

    let mut rng = sub_rng(seed, 7);
    let omegas: Vec<f64> = (0..10)
        .map(|_| random_physical_lambda(&mut rng).im)
        .collect();
    reports.push(check_signs(net, &omegas));

    let mut rng = sub_rng(seed, 8);
    let candidates = multiple_candidates(net, &mut rng);
    let runs: Vec<CheckReport> = candidates
        .iter()
        .flat_map(|&l| {
            [
                check_choice_invariance(net, l, &mut rng),
                check_conservation_complex(net, l),
            ]
        })
        .collect();
    if runs.is_empty() {
        reports.push(CheckReport::skipped(
            "choice-invariance",
            "singular λ",
            "no physical singular frequency",
        ));
    } else {
        reports.push(aggregate("choice-invariance", runs));
    }

    reports.push(check_cramer(net, 20, seed));

    reports.into_iter().map(|r| r.with_seed(seed)).collect()
}
