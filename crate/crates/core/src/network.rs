//! Network data model: a connected graph with two terminals and per-edge
//! RLC parameters or raw rational-function weights.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::ops::{Index, IndexMut};

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::error::{ExactError, NetworkError, Result};
use crate::exact::{Field, Polynomial, Rational, RationalFunction};

/// Per-edge data. `d` is the inverse capacitance (D = 1/C, zero for C = ∞).
#[derive(Debug, Clone, PartialEq)]
pub enum EdgeParams {
    Rlc {
        r: Rational,
        l: Rational,
        d: Rational,
    },
    Raw(RationalFunction),
}

impl EdgeParams {
    pub fn rlc(r: Rational, l: Rational, d: Rational) -> Self {
        EdgeParams::Rlc { r, l, d }
    }

    /// R, L and an optional capacitance; `None` means C = ∞.
    pub fn with_capacitance(r: Rational, l: Rational, c: Option<Rational>) -> Self {
        let d = match c {
            Some(c) if !c.is_zero() => c.recip(),
            // zero capacitance is rejected at build time through a negative marker
            Some(_) => Rational::from_integer((-1).into()),
            None => Rational::zero(),
        };
        EdgeParams::Rlc { r, l, d }
    }

    pub fn resistor(r: i64) -> Self {
        Self::rlc(crate::exact::rat(r), Rational::zero(), Rational::zero())
    }

    pub fn inductor(l: i64) -> Self {
        Self::rlc(Rational::zero(), crate::exact::rat(l), Rational::zero())
    }

    pub fn capacitor(c: i64) -> Self {
        Self::with_capacitance(
            Rational::zero(),
            Rational::zero(),
            Some(crate::exact::rat(c)),
        )
    }

    pub fn raw(weight: RationalFunction) -> Self {
        EdgeParams::Raw(weight)
    }

    /// ρ = λ / (Lλ² + Rλ + D) for RLC edges, the stored weight otherwise.
    pub fn admittance(&self) -> RationalFunction {
        match self {
            EdgeParams::Rlc { r, l, d } => RationalFunction::new(
                Polynomial::lambda(),
                Polynomial::new(vec![d.clone(), r.clone(), l.clone()]),
            )
            .expect("validated RLC triple has a nonzero denominator"),
            EdgeParams::Raw(w) => w.clone(),
        }
    }

    pub fn is_rlc(&self) -> bool {
        matches!(self, EdgeParams::Rlc { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Strict,
    Raw,
}

/// One input edge as given by the caller.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub x: usize,
    pub y: usize,
    pub params: EdgeParams,
    /// ρ ≻ 0 in the order of R(λ).
    pub positive: bool,
}

/// Adjacency lists with weights in some field instance. Parallel edges are
/// already merged; `adj[x]` is sorted by neighbour index.
#[derive(Debug, Clone)]
pub struct WeightedGraph<F> {
    adj: Vec<Vec<(usize, F)>>,
}

impl<F: Field> WeightedGraph<F> {
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, x: usize) -> &[(usize, F)] {
        &self.adj[x]
    }

    /// ρ_xy, zero when x and y are not adjacent.
    pub fn weight(&self, x: usize, y: usize) -> F {
        self.adj[x]
            .binary_search_by_key(&y, |(n, _)| *n)
            .map(|i| self.adj[x][i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    /// ρ(x) = Σ_y ρ_xy.
    pub fn vertex_weight(&self, x: usize) -> F {
        self.adj[x]
            .iter()
            .fold(F::zero(), |acc, (_, w)| acc + w.clone())
    }

    /// Unordered edges `(x, y, ρ_xy)` with `x < y`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        self.adj.iter().enumerate().flat_map(|(x, row)| {
            row.iter()
                .filter(move |(y, _)| x < *y)
                .map(move |(y, w)| (x, *y, w))
        })
    }

    /// (Δ_ρ f)(x) = Σ_{y∼x} (f(y) − f(x)) ρ_xy.
    pub fn laplacian_at(&self, f: &VertexFunction<F>, x: usize) -> F {
        self.adj[x].iter().fold(F::zero(), |acc, (y, w)| {
            acc + (f[*y].clone() - f[x].clone()) * w.clone()
        })
    }

    pub fn laplacian(&self, f: &VertexFunction<F>) -> VertexFunction<F> {
        VertexFunction(
            (0..self.adj.len())
                .map(|x| self.laplacian_at(f, x))
                .collect(),
        )
    }

    pub fn map<G: Field>(
        &self,
        mut g: impl FnMut(&F) -> std::result::Result<G, ExactError>,
    ) -> std::result::Result<WeightedGraph<G>, ExactError> {
        let adj = self
            .adj
            .iter()
            .map(|row| row.iter().map(|(y, w)| Ok((*y, g(w)?))).collect())
            .collect::<std::result::Result<_, ExactError>>()?;
        Ok(WeightedGraph { adj })
    }
}

/// A value of field instance `F` at every vertex, indexed like
/// [`Network::vertices`].
#[derive(Debug, Clone, PartialEq)]
pub struct VertexFunction<F>(pub Vec<F>);

impl<F: Field> VertexFunction<F> {
    pub fn constant(n: usize, value: F) -> Self {
        VertexFunction(vec![value; n])
    }

    pub fn values(&self) -> &[F] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<F> Index<usize> for VertexFunction<F> {
    type Output = F;
    fn index(&self, i: usize) -> &F {
        &self.0[i]
    }
}

impl<F> IndexMut<usize> for VertexFunction<F> {
    fn index_mut(&mut self, i: usize) -> &mut F {
        &mut self.0[i]
    }
}

/// Validated electrical network Γ = ((V, E), {ρ_xy}, a0, a1).
#[derive(Debug, Clone)]
pub struct Network {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    a0: usize,
    a1: usize,
    mode: Mode,
    weights: WeightedGraph<RationalFunction>,
}

/// Collects vertices and edges before validation. Vertex order is the order
/// of first mention (explicit [`NetworkBuilder::vertex`] calls or edges).
#[derive(Debug, Clone, Default)]
pub struct NetworkBuilder {
    names: Vec<String>,
    edges: Vec<(String, String, EdgeParams)>,
    terminals: (String, String),
    mode: Mode,
}

impl NetworkBuilder {
    pub fn new(a0: impl Into<String>, a1: impl Into<String>) -> Self {
        NetworkBuilder {
            terminals: (a0.into(), a1.into()),
            ..Default::default()
        }
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn vertex(mut self, name: impl Into<String>) -> Self {
        let name = name.into();
        if !self.names.contains(&name) {
            self.names.push(name);
        }
        self
    }

    pub fn edge(mut self, x: impl Into<String>, y: impl Into<String>, params: EdgeParams) -> Self {
        let (x, y) = (x.into(), y.into());
        for v in [&x, &y] {
            if !self.names.contains(v) {
                self.names.push(v.clone());
            }
        }
        self.edges.push((x, y, params));
        self
    }

    pub fn build(self) -> Result<Network> {
        Network::build(
            self.names,
            self.edges,
            &self.terminals.0,
            &self.terminals.1,
            self.mode,
        )
    }
}

impl Network {
    /// Validates and assembles a network.
    ///
    /// Strict mode accepts RLC edges only. Raw mode additionally accepts any
    /// nonzero rational-function weight and records whether each is ≻ 0.
    /// Parallel edges are merged by summing admittances.
    pub fn build(
        vertices: Vec<String>,
        edges: Vec<(String, String, EdgeParams)>,
        a0: &str,
        a1: &str,
        mode: Mode,
    ) -> Result<Network> {
        if edges.is_empty() {
            return Err(NetworkError::NoEdges.into());
        }
        let mut names = Vec::new();
        let mut index = HashMap::new();
        for v in vertices
            .iter()
            .chain(edges.iter().flat_map(|(x, y, _)| [x, y]))
        {
            if !index.contains_key(v) {
                index.insert(v.clone(), names.len());
                names.push(v.clone());
            }
        }
        if a0 == a1 {
            return Err(NetworkError::SameTerminals(a0.to_string()).into());
        }
        let lookup = |t: &str| {
            index
                .get(t)
                .copied()
                .ok_or_else(|| NetworkError::UnknownTerminal(t.to_string()))
        };
        let (i0, i1) = (lookup(a0)?, lookup(a1)?);

        let mut checked = Vec::with_capacity(edges.len());
        let mut merged: BTreeMap<(usize, usize), RationalFunction> = BTreeMap::new();
        for (x, y, params) in edges {
            if x == y {
                return Err(NetworkError::SelfLoop(x).into());
            }
            validate_params(&x, &y, &params, mode)?;
            let rho = params.admittance();
            let (ix, iy) = (index[&x], index[&y]);
            let key = (ix.min(iy), ix.max(iy));
            let slot = merged.entry(key).or_insert_with(RationalFunction::zero);
            *slot = &*slot + &rho;
            checked.push(Edge {
                x: ix,
                y: iy,
                positive: rho.is_positive(),
                params,
            });
        }

        let n = names.len();
        let mut adj: Vec<Vec<(usize, RationalFunction)>> = vec![Vec::new(); n];
        for ((x, y), w) in merged {
            // parallel raw weights may cancel; the pair is then not adjacent
            if w.is_zero() {
                continue;
            }
            adj[x].push((y, w.clone()));
            adj[y].push((x, w));
        }
        for row in &mut adj {
            row.sort_by_key(|(y, _)| *y);
        }

        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([i0]);
        seen[i0] = true;
        while let Some(x) = queue.pop_front() {
            for (y, _) in &adj[x] {
                if !seen[*y] {
                    seen[*y] = true;
                    queue.push_back(*y);
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(
                NetworkError::Disconnected(names[missing].clone(), names[i0].clone()).into(),
            );
        }

        Ok(Network {
            names,
            index,
            edges: checked,
            a0: i0,
            a1: i1,
            mode,
            weights: WeightedGraph { adj },
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn a0(&self) -> usize {
        self.a0
    }

    pub fn a1(&self) -> usize {
        self.a1
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Interior vertices V ∖ {a0, a1} in vertex order.
    pub fn interior(&self) -> Vec<usize> {
        (0..self.names.len())
            .filter(|&x| x != self.a0 && x != self.a1)
            .collect()
    }

    /// Merged admittances as elements of R(λ).
    pub fn symbolic_weights(&self) -> &WeightedGraph<RationalFunction> {
        &self.weights
    }

    /// Merged admittances evaluated at λ; fails if any has a pole there.
    pub fn complex_weights(&self, lambda: Complex64) -> Result<WeightedGraph<Complex64>> {
        Ok(self.weights.map(|w| w.eval(lambda))?)
    }

    pub fn admittance(&self, x: usize, y: usize) -> RationalFunction {
        self.weights.weight(x, y)
    }

    pub fn vertex_weight(&self, x: usize) -> RationalFunction {
        self.weights.vertex_weight(x)
    }

    /// First input edge whose weight is not ≻ 0, if any.
    pub fn first_non_positive_edge(&self) -> Option<&Edge> {
        self.edges.iter().find(|e| !e.positive)
    }

    pub fn all_weights_positive(&self) -> bool {
        self.first_non_positive_edge().is_none()
    }

    /// Every edge is an RLC edge without inductance.
    pub fn is_pure_rc(&self) -> bool {
        self.edges
            .iter()
            .all(|e| matches!(&e.params, EdgeParams::Rlc { l, .. } if l.is_zero()))
    }

    /// Every edge is an RLC edge without capacitor (D = 0).
    pub fn is_pure_rl(&self) -> bool {
        self.edges
            .iter()
            .all(|e| matches!(&e.params, EdgeParams::Rlc { d, .. } if d.is_zero()))
    }

    pub fn is_all_rlc(&self) -> bool {
        self.edges.iter().all(|e| e.params.is_rlc())
    }

    /// Δ_ρ f over R(λ).
    pub fn laplacian_symbolic(
        &self,
        f: &VertexFunction<RationalFunction>,
    ) -> VertexFunction<RationalFunction> {
        self.weights.laplacian(f)
    }

    /// Δ_ρ f over ℂ with admittances evaluated at λ.
    pub fn laplacian_complex(
        &self,
        f: &VertexFunction<Complex64>,
        lambda: Complex64,
    ) -> Result<VertexFunction<Complex64>> {
        Ok(self.complex_weights(lambda)?.laplacian(f))
    }

    /// Builds a vertex function from `(name, value)` pairs, defaulting
    /// unspecified vertices to zero.
    pub fn vertex_function<F: Field>(&self, values: &[(&str, F)]) -> VertexFunction<F> {
        let mut f = VertexFunction::constant(self.vertex_count(), F::zero());
        for (name, v) in values {
            if let Some(i) = self.vertex_index(name) {
                f[i] = v.clone();
            }
        }
        f
    }
}

fn validate_params(x: &str, y: &str, params: &EdgeParams, mode: Mode) -> Result<(), NetworkError> {
    match params {
        EdgeParams::Rlc { r, l, d } => {
            for (v, what) in [
                (r, "resistance"),
                (l, "inductance"),
                (d, "inverse capacitance"),
            ] {
                if v.is_negative() {
                    return Err(if what == "inverse capacitance" {
                        NetworkError::NonPositiveCapacitance(x.into(), y.into())
                    } else {
                        NetworkError::NegativeParameter(x.into(), y.into(), what)
                    });
                }
            }
            if r.is_zero() && l.is_zero() && d.is_zero() {
                return Err(NetworkError::ZeroRlc(x.into(), y.into()));
            }
        }
        EdgeParams::Raw(w) => {
            if mode == Mode::Strict {
                return Err(NetworkError::RawInStrictMode(x.into(), y.into()));
            }
            if w.is_zero() {
                return Err(NetworkError::ZeroWeight(x.into(), y.into()));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exact::rat;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::from_ints(n, d)
    }

    fn series_resistors() -> Network {
        NetworkBuilder::new("a0", "a1")
            .edge("a0", "x", EdgeParams::resistor(1))
            .edge("x", "a1", EdgeParams::resistor(1))
            .build()
            .unwrap()
    }

    #[test]
    fn admittance_examples() {
        assert_eq!(
            EdgeParams::resistor(1).admittance(),
            RationalFunction::one()
        );
        assert_eq!(
            EdgeParams::capacitor(1).admittance(),
            RationalFunction::lambda()
        );
        let rlc = EdgeParams::with_capacitance(rat(1), rat(1), Some(rat(1)));
        assert_eq!(rlc.admittance(), rf(&[0, 1], &[1, 1, 1]));
        assert_eq!(EdgeParams::inductor(1).admittance(), rf(&[1], &[0, 1]));
    }

    #[test]
    fn rlc_admittance_is_positive() {
        let vals = [0, 1, 2, 5];
        for r in vals {
            for l in vals {
                for d in vals {
                    if r == 0 && l == 0 && d == 0 {
                        continue;
                    }
                    assert!(EdgeParams::rlc(rat(r), rat(l), rat(d))
                        .admittance()
                        .is_positive());
                }
            }
        }
    }

    #[test]
    fn valid_path() {
        let net = series_resistors();
        assert_eq!(net.vertices(), &["a0", "x", "a1"]);
        assert_eq!(net.interior(), vec![1]);
        assert_eq!(net.vertex_weight(1), RationalFunction::from_int(2));
    }

    #[test]
    fn rejects_invalid_graphs() {
        let zero = EdgeParams::rlc(rat(0), rat(0), rat(0));
        let err = NetworkBuilder::new("a0", "a1")
            .edge("a0", "a1", zero)
            .build();
        assert!(matches!(
            err,
            Err(Error::Network(NetworkError::ZeroRlc(..)))
        ));

        let err = NetworkBuilder::new("a0", "a0")
            .edge("a0", "x", EdgeParams::resistor(1))
            .build();
        assert!(matches!(
            err,
            Err(Error::Network(NetworkError::SameTerminals(_)))
        ));

        let err = NetworkBuilder::new("a0", "a1")
            .edge("a0", "x", EdgeParams::resistor(1))
            .edge("a1", "y", EdgeParams::resistor(1))
            .build();
        assert!(matches!(
            err,
            Err(Error::Network(NetworkError::Disconnected(..)))
        ));

        let err = NetworkBuilder::new("a0", "a1")
            .edge("a0", "a0", EdgeParams::resistor(1))
            .edge("a0", "a1", EdgeParams::resistor(1))
            .build();
        assert!(matches!(
            err,
            Err(Error::Network(NetworkError::SelfLoop(_)))
        ));

        let err = NetworkBuilder::new("a0", "a1")
            .edge("a0", "a1", EdgeParams::raw(RationalFunction::lambda()))
            .build();
        assert!(matches!(
            err,
            Err(Error::Network(NetworkError::RawInStrictMode(..)))
        ));

        let err = NetworkBuilder::new("a0", "a1")
            .mode(Mode::Raw)
            .edge("a0", "a1", EdgeParams::raw(RationalFunction::zero()))
            .build();
        assert!(matches!(
            err,
            Err(Error::Network(NetworkError::ZeroWeight(..)))
        ));

        let err = NetworkBuilder::new("a0", "zz")
            .edge("a0", "a1", EdgeParams::resistor(1))
            .build();
        assert!(matches!(
            err,
            Err(Error::Network(NetworkError::UnknownTerminal(_)))
        ));

        let err = NetworkBuilder::new("a0", "a1")
            .edge(
                "a0",
                "a1",
                EdgeParams::with_capacitance(rat(1), rat(0), Some(rat(0))),
            )
            .build();
        assert!(matches!(
            err,
            Err(Error::Network(NetworkError::NonPositiveCapacitance(..)))
        ));
    }

    #[test]
    fn minus_lambda_needs_raw_mode() {
        let lam = RationalFunction::lambda();
        let net = NetworkBuilder::new("a0", "a1")
            .mode(Mode::Raw)
            .edge("a0", "x", EdgeParams::raw(lam.clone()))
            .edge("y", "a0", EdgeParams::raw(-&lam))
            .edge("x", "a1", EdgeParams::raw(-&lam))
            .edge("a1", "y", EdgeParams::raw(lam.clone()))
            .edge("x", "y", EdgeParams::raw(RationalFunction::one()))
            .build()
            .unwrap();
        let flags: Vec<bool> = net.edges().iter().map(|e| e.positive).collect();
        assert_eq!(flags, vec![true, false, false, true, true]);
        assert!(!net.all_weights_positive());
    }

    #[test]
    fn parallel_edges_merge() {
        let net = NetworkBuilder::new("a0", "a1")
            .edge("a0", "a1", EdgeParams::resistor(1))
            .edge("a1", "a0", EdgeParams::capacitor(1))
            .build()
            .unwrap();
        assert_eq!(net.admittance(0, 1), rf(&[1, 1], &[1]));
        assert_eq!(net.admittance(1, 0), net.admittance(0, 1));
        assert_eq!(net.edges().len(), 2);
    }

    #[test]
    fn complex_omega_vertex_weight() {
        let net = NetworkBuilder::new("a0", "a1")
            .edge("z", "a0", EdgeParams::capacitor(1))
            .edge("a1", "z", EdgeParams::inductor(1))
            .build()
            .unwrap();
        let z = net.vertex_index("z").unwrap();
        assert_eq!(net.vertex_weight(z), rf(&[1, 0, 1], &[0, 1]));
    }

    #[test]
    fn laplacian_examples() {
        let net = series_resistors();
        let c = VertexFunction::constant(3, RationalFunction::from_int(7));
        assert!(net
            .laplacian_symbolic(&c)
            .values()
            .iter()
            .all(|v| v.is_zero()));
        let f = net.vertex_function(&[("x", RationalFunction::one())]);
        assert_eq!(
            net.laplacian_symbolic(&f)[1],
            RationalFunction::from_int(-2)
        );
        let fc = net.vertex_function(&[("x", Complex64::new(1.0, 0.0))]);
        let lap = net
            .laplacian_complex(&fc, Complex64::new(0.0, 1.0))
            .unwrap();
        assert_eq!(lap[1], Complex64::new(-2.0, 0.0));
    }

    #[test]
    fn laplacian_reports_pole() {
        let net = NetworkBuilder::new("a0", "a1")
            .edge("a0", "a1", EdgeParams::inductor(1))
            .build()
            .unwrap();
        let f = VertexFunction::constant(2, Complex64::new(0.0, 0.0));
        assert!(matches!(
            net.laplacian_complex(&f, Complex64::new(0.0, 0.0)),
            Err(Error::Exact(ExactError::Pole(_)))
        ));
    }
}
