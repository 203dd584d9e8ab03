//! The Dirichlet problem Δ_ρ v = 0 on V ∖ {a0, a1}, v(a0) = 0, v(a1) = 1,
//! over either field instance.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::{poly_roots, Field, Polynomial, RationalFunction, ZeroTest, DEFAULT_ZERO_TOL};
use crate::network::{Network, VertexFunction, WeightedGraph};

/// Linear system on the interior vertices, boundary values folded into the
/// right-hand side: Σ_{y interior} ρ_xy v(y) − ρ(x) v(x) = −ρ_{x a1}.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletSystem<F> {
    pub unknowns: Vec<usize>,
    pub matrix: Vec<Vec<F>>,
    pub rhs: Vec<F>,
}

/// Result of Gauss–Jordan elimination on a square system.
#[derive(Debug, Clone, PartialEq)]
pub enum GaussOutcome<F> {
    Unique(Vec<F>),
    /// `particular` is `None` when the system is inconsistent; free
    /// variables are set to zero in the particular solution.
    RankDeficient {
        rank: usize,
        particular: Option<Vec<F>>,
        nullspace: Vec<Vec<F>>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolutionClass {
    Unique,
    Multiple,
    None,
}

impl SolutionClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolutionClass::Unique => "Unique",
            SolutionClass::Multiple => "Multiple",
            SolutionClass::None => "None",
        }
    }
}

impl std::fmt::Display for SolutionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classification of the complex problem at a fixed λ.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletOutcome {
    pub class: SolutionClass,
    pub lambda: Complex64,
    /// Present for `Unique` and `Multiple`.
    pub particular: Option<VertexFunction<Complex64>>,
    /// Homogeneous solutions (zero at both terminals); nonempty iff `Multiple`.
    pub nullspace: Vec<VertexFunction<Complex64>>,
}

/// The unique solution over R(λ).
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicSolution {
    pub values: VertexFunction<RationalFunction>,
}

pub fn assemble<F: Field>(weights: &WeightedGraph<F>, a0: usize, a1: usize) -> DirichletSystem<F> {
    let unknowns: Vec<usize> = (0..weights.vertex_count())
        .filter(|&x| x != a0 && x != a1)
        .collect();
    let mut column = vec![usize::MAX; weights.vertex_count()];
    for (i, &x) in unknowns.iter().enumerate() {
        column[x] = i;
    }
    let n = unknowns.len();
    let mut matrix = vec![vec![F::zero(); n]; n];
    let mut rhs = vec![F::zero(); n];
    for (row, &x) in unknowns.iter().enumerate() {
        let mut diag = F::zero();
        for (y, w) in weights.neighbors(x) {
            diag = diag - w.clone();
            if *y == a1 {
                rhs[row] = rhs[row].clone() - w.clone();
            } else if *y != a0 {
                matrix[row][column[*y]] = w.clone();
            }
        }
        matrix[row][row] = diag;
    }
    DirichletSystem {
        unknowns,
        matrix,
        rhs,
    }
}

pub fn assemble_symbolic(net: &Network) -> DirichletSystem<RationalFunction> {
    assemble(net.symbolic_weights(), net.a0(), net.a1())
}

pub fn assemble_complex(net: &Network, lambda: Complex64) -> Result<DirichletSystem<Complex64>> {
    Ok(assemble(&net.complex_weights(lambda)?, net.a0(), net.a1()))
}

fn matrix_scale<F: Field>(matrix: &[Vec<F>], rhs: &[F]) -> f64 {
    matrix
        .iter()
        .flatten()
        .chain(rhs)
        .map(Field::magnitude)
        .fold(0.0, f64::max)
}

/// Gauss–Jordan elimination with pivoting chosen by [`Field::pivot_rank`]:
/// largest magnitude for ℂ, smallest total degree for R(λ). An entry is a
/// zero pivot when `|p| ≤ tol × (max initial |entry|)`.
pub fn gauss_solve<F: Field>(matrix: &[Vec<F>], rhs: &[F], tol: f64) -> GaussOutcome<F> {
    let n = matrix.len();
    let mut a: Vec<Vec<F>> = matrix.to_vec();
    let mut b: Vec<F> = rhs.to_vec();
    let zt = ZeroTest::new(tol, matrix_scale(matrix, rhs));

    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == n {
            break;
        }
        let best = (row..n)
            .filter_map(|r| a[r][col].pivot_rank(&zt).map(|s| (r, s)))
            .fold(None, |acc: Option<(usize, f64)>, (r, s)| match acc {
                Some((_, bs)) if bs >= s => acc,
                _ => Some((r, s)),
            });
        let Some((p, _)) = best else { continue };
        a.swap(row, p);
        b.swap(row, p);

        let pivot = a[row][col].clone();
        for x in &mut a[row][col..] {
            *x = x.clone() / pivot.clone();
        }
        b[row] = b[row].clone() / pivot;
        a[row][col] = F::one();

        let pivot_row = a[row].clone();
        for r in 0..n {
            if r == row || a[r][col].is_exact_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for (x, y) in a[r][col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                if !y.is_exact_zero() {
                    *x = x.clone() - factor.clone() * y.clone();
                }
            }
            b[r] = b[r].clone() - factor * b[row].clone();
            a[r][col] = F::zero();
        }
        pivot_cols.push(col);
        row += 1;
    }

    let rank = pivot_cols.len();
    if rank == n {
        return GaussOutcome::Unique(b);
    }
    let consistent = b[rank..].iter().all(|x| x.is_zero_under(&zt));
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![F::zero(); n];
            v[f] = F::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[i][f].clone();
            }
            v
        })
        .collect();
    let particular = consistent.then(|| {
        let mut v = vec![F::zero(); n];
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = b[i].clone();
        }
        v
    });
    GaussOutcome::RankDeficient {
        rank,
        particular,
        nullspace,
    }
}

/// Determinant by elimination; the empty matrix has determinant one.
pub fn determinant<F: Field>(matrix: &[Vec<F>], tol: f64) -> F {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let zt = ZeroTest::new(tol, matrix_scale(matrix, &[]));
    let mut det = F::one();
    for col in 0..n {
        let best = (col..n)
            .filter_map(|r| a[r][col].pivot_rank(&zt).map(|s| (r, s)))
            .fold(None, |acc: Option<(usize, f64)>, (r, s)| match acc {
                Some((_, bs)) if bs >= s => acc,
                _ => Some((r, s)),
            });
        let Some((p, _)) = best else { return F::zero() };
        if p != col {
            a.swap(col, p);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det = det * pivot.clone();
        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower {
            if row[col].is_exact_zero() {
                continue;
            }
            let factor = row[col].clone() / pivot.clone();
            for (x, y) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                if !y.is_exact_zero() {
                    *x = x.clone() - factor.clone() * y.clone();
                }
            }
        }
    }
    det
}

fn embed<F: Field>(
    net: &Network,
    unknowns: &[usize],
    values: &[F],
    boundary: (F, F),
) -> VertexFunction<F> {
    let mut f = VertexFunction::constant(net.vertex_count(), F::zero());
    f[net.a0()] = boundary.0;
    f[net.a1()] = boundary.1;
    for (&x, v) in unknowns.iter().zip(values) {
        f[x] = v.clone();
    }
    f
}

/// The unique solution over R(λ). Requires every edge weight ≻ 0.
pub fn solve_symbolic(net: &Network) -> Result<SymbolicSolution> {
    if let Some(e) = net.first_non_positive_edge() {
        return Err(Error::NonPositiveWeight(
            net.name(e.x).to_string(),
            net.name(e.y).to_string(),
        ));
    }
    let sys = assemble_symbolic(net);
    match gauss_solve(&sys.matrix, &sys.rhs, 0.0) {
        GaussOutcome::Unique(values) => Ok(SymbolicSolution {
            values: embed(
                net,
                &sys.unknowns,
                &values,
                (RationalFunction::zero(), RationalFunction::one()),
            ),
        }),
        GaussOutcome::RankDeficient { .. } => {
            unreachable!("interior operator of a positive network is injective")
        }
    }
}

/// Classifies and solves the complex problem at λ with the given relative
/// rank tolerance.
pub fn solve_complex(net: &Network, lambda: Complex64, tol: f64) -> Result<DirichletOutcome> {
    let sys = assemble_complex(net, lambda)?;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let outcome = match gauss_solve(&sys.matrix, &sys.rhs, tol) {
        GaussOutcome::Unique(v) => DirichletOutcome {
            class: SolutionClass::Unique,
            lambda,
            particular: Some(embed(net, &sys.unknowns, &v, (zero, one))),
            nullspace: Vec::new(),
        },
        GaussOutcome::RankDeficient {
            particular: Some(p),
            nullspace,
            ..
        } => DirichletOutcome {
            class: SolutionClass::Multiple,
            lambda,
            particular: Some(embed(net, &sys.unknowns, &p, (zero, one))),
            nullspace: nullspace
                .iter()
                .map(|h| embed(net, &sys.unknowns, h, (zero, zero)))
                .collect(),
        },
        GaussOutcome::RankDeficient {
            particular: None, ..
        } => DirichletOutcome {
            class: SolutionClass::None,
            lambda,
            particular: None,
            nullspace: Vec::new(),
        },
    };
    Ok(outcome)
}

/// Determinant of the interior system over R(λ). It differs from the
/// determinant of the full n×n system only by a nonzero factor, so the zero
/// sets away from admittance poles agree.
pub fn determinant_symbolic(net: &Network) -> RationalFunction {
    determinant(&assemble_symbolic(net).matrix, 0.0)
}

/// A zero of the Dirichlet determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularFrequency {
    pub lambda: Complex64,
    pub multiplicity: usize,
    /// λ = iω with ω > 0.
    pub physical: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SingularSet {
    /// D(λ) ≡ 0: every λ is singular (possible only for non-positive raw weights).
    IdenticallyZero,
    Finite(Vec<SingularFrequency>),
}

impl SingularSet {
    pub fn physical(&self) -> Vec<Complex64> {
        match self {
            SingularSet::IdenticallyZero => Vec::new(),
            SingularSet::Finite(v) => v.iter().filter(|s| s.physical).map(|s| s.lambda).collect(),
        }
    }
}

/// Relative bound on |Re λ| for a root to count as purely imaginary.
pub const IMAGINARY_AXIS_TOL: f64 = 1e-9;

/// Zeros of the determinant numerator, excluding points where some edge
/// admittance has a pole. Factors shared with admittance denominators are
/// divided out exactly before root finding.
pub fn singular_frequencies(net: &Network, tol: f64, max_iter: usize) -> Result<SingularSet> {
    let det = determinant_symbolic(net);
    if det.is_zero() {
        return Ok(SingularSet::IdenticallyZero);
    }
    let mut num = det.num().clone();
    for (_, _, w) in net.symbolic_weights().edges() {
        loop {
            let g = Polynomial::gcd_nonzero(&num, w.den());
            if g.is_constant() {
                break;
            }
            num = num.exact_div(&g);
        }
    }
    if num.is_constant() {
        return Ok(SingularSet::Finite(Vec::new()));
    }
    let mut out: Vec<SingularFrequency> = Vec::new();
    for (factor, multiplicity) in num.squarefree_factors() {
        let roots = poly_roots(&factor, tol, max_iter).map_err(Error::Exact)?;
        for lambda in roots {
            // snap components that are zero up to the axis tolerance
            let eps = IMAGINARY_AXIS_TOL * lambda.norm().max(1.0);
            let snap = |t: f64| if t.abs() <= eps { 0.0 } else { t };
            let lambda = Complex64::new(snap(lambda.re), snap(lambda.im));
            let physical = lambda.im > 0.0 && lambda.re == 0.0;
            out.push(SingularFrequency {
                lambda,
                multiplicity,
                physical,
            });
        }
    }
    out.sort_by(|a, b| {
        a.lambda
            .re
            .total_cmp(&b.lambda.re)
            .then(a.lambda.im.total_cmp(&b.lambda.im))
    });
    Ok(SingularSet::Finite(out))
}

/// Default relative rank tolerance for complex solves.
pub const DEFAULT_RANK_TOL: f64 = DEFAULT_ZERO_TOL;
