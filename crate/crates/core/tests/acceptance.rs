//! Acceptance suite: one line per criterion on standard output, then a
//! single assertion per criterion group.

mod common;

use std::io::Write;
use std::process::Command;

use acnet::exact::{Complex64, Extended, Polynomial, Rational, RationalFunction};
use acnet::impedance::{compare, effective_complex, effective_symbolic};
use acnet::network::{EdgeParams, Network, NetworkBuilder, VertexFunction};
use acnet::solver::{singular_frequencies, SingularSet, SolutionClass, DEFAULT_RANK_TOL};
use acnet::verify::{self, CheckReport, CheckStatus, NetworkKind};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{load, netlist_path};

const REL: f64 = 1e-8;

/// Writes straight to the process stdout so the lines survive output capture.
fn line(id: &str, ok: bool, what: &str) -> bool {
    let status = if ok { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "acceptance {id}: {status} {what}");
    ok
}

fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
    RationalFunction::from_ints(n, d)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= REL * b.norm().max(1.0)
}

fn z1(net: &Network, lambda: Complex64) -> acnet::impedance::ComplexImpedance {
    effective_complex(net, lambda, DEFAULT_RANK_TOL).unwrap()
}

#[test]
fn criterion_1_golden_symbolic() {
    let mut ok = true;

    let net = load("nontrivial");
    let s = effective_symbolic(&net).unwrap();
    let v = &s.solution.values;
    let at = |n: &str| v[net.vertex_index(n).unwrap()].clone();
    let pass = s.z == rf(&[1, 3, 1, 1], &[1, 2, 3])
        && at("x") == rf(&[0, 1, 1, 1], &[1, 3, 1, 1])
        && at("y") == rf(&[1, 2], &[1, 3, 1, 1]);
    ok &= line(
        "1.nontrivial",
        pass,
        "Z = (λ³+λ²+3λ+1)/(3λ²+2λ+1), interior closed forms",
    );

    let z = effective_symbolic(&load("complex_omega")).unwrap().z;
    ok &= line(
        "1.complex_omega",
        z == rf(&[1, 0, 1], &[1, 1, 1]),
        "Z = (λ²+1)/(λ²+λ+1)",
    );

    let z = effective_symbolic(&load("solutions")).unwrap().z;
    ok &= line(
        "1.solutions",
        z == rf(&[1, 1, 3, 3], &[1, 2, 5, 1, 1]),
        "Z = (3λ³+3λ²+λ+1)/(λ⁴+λ³+5λ²+2λ+1)",
    );

    let z = effective_symbolic(&load("non_pos_w")).unwrap().z;
    ok &= line(
        "1.non_pos_w",
        z == RationalFunction::one(),
        "Z ≡ 1 (raw mode)",
    );
    assert!(ok);
}

#[test]
fn criterion_2_complex_classification() {
    let mut ok = true;
    let s2 = 2f64.sqrt();

    let net = load("solutions");
    let r = z1(&net, c(0.0, s2));
    ok &= line(
        "2.solutions.i√2",
        r.class == SolutionClass::Multiple && r.z.finite().is_some_and(|z| close(z, c(1.0, s2))),
        "class Multiple, Z = 1 + i√2",
    );
    let r = z1(&net, c(0.0, 1.0 / 3f64.sqrt()));
    ok &= line(
        "2.solutions.i/√3",
        r.class == SolutionClass::None
            && r.z == Extended::Finite(c(0.0, 0.0))
            && r.p == Extended::Infinite,
        "class None, Z = 0, P = ∞",
    );

    let net = load("nontrivial");
    let r = z1(&net, c(0.0, 1.0));
    let cmp = compare(&net, c(0.0, 1.0), DEFAULT_RANK_TOL, REL).unwrap();
    ok &= line(
        "2.nontrivial.i",
        r.class == SolutionClass::Multiple
            && r.z.finite().is_some_and(|z| close(z, c(0.5, -0.5)))
            && cmp.agree,
        "class Multiple, Z = 0.5 − 0.5i, compare agrees",
    );

    let net = load("complex_omega");
    let cmp = compare(&net, c(0.0, 1.0), DEFAULT_RANK_TOL, REL).unwrap();
    ok &= line(
        "2.complex_omega.i",
        cmp.agree
            && cmp.z1.finite().is_some_and(|z| z.norm() <= REL)
            && cmp.z2.is_some_and(|z| z.norm() <= REL),
        "both impedances 0, compare agrees",
    );
    let cmp = compare(&net, c(-1.0, 0.0), DEFAULT_RANK_TOL, REL).unwrap();
    ok &= line(
        "2.complex_omega.-1",
        !cmp.agree
            && cmp
                .z1
                .finite()
                .is_some_and(|z| close(z, c(-2.0 / 3.0, 0.0)))
            && cmp.z2.is_some_and(|z| close(z, c(2.0, 0.0))),
        "Z1 = −2/3, Z2(−1) = 2, compare disagrees",
    );

    let net = load("non_pos_w");
    let cmp = compare(&net, c(0.0, 1.0), DEFAULT_RANK_TOL, REL).unwrap();
    ok &= line(
        "2.non_pos_w.i",
        cmp.class == SolutionClass::None
            && cmp.z1 == Extended::Finite(c(0.0, 0.0))
            && cmp.z2.is_some_and(|z| close(z, c(1.0, 0.0)))
            && !cmp.agree,
        "class None, Z1 = 0, Z2(i) = 1, compare disagrees",
    );
    assert!(ok);
}

fn same_set(mut got: Vec<Complex64>, mut want: Vec<Complex64>) -> bool {
    let key = |a: &Complex64, b: &Complex64| a.im.total_cmp(&b.im);
    got.sort_by(key);
    want.sort_by(key);
    got.len() == want.len() && got.iter().zip(&want).all(|(a, b)| close(*a, *b))
}

#[test]
fn criterion_3_singular_frequencies() {
    let mut ok = true;
    let tol = acnet::exact::DEFAULT_ROOT_TOL;
    let it = acnet::exact::DEFAULT_MAX_ITER;

    let s = singular_frequencies(&load("solutions"), tol, it).unwrap();
    ok &= line(
        "3.solutions",
        same_set(
            s.physical(),
            vec![c(0.0, 2f64.sqrt()), c(0.0, 1.0 / 3f64.sqrt())],
        ),
        "physical singular set {i√2, i/√3}",
    );
    let s = singular_frequencies(&load("nontrivial"), tol, it).unwrap();
    ok &= line(
        "3.nontrivial",
        same_set(s.physical(), vec![c(0.0, 1.0)]),
        "physical singular set {i}",
    );
    let s = singular_frequencies(&load("minus_lambda"), tol, it).unwrap();
    ok &= line(
        "3.minus_lambda",
        s == SingularSet::IdenticallyZero,
        "determinant identically zero",
    );
    assert!(ok);
}

/// Tracks the worst outcome of a family of checks.
#[derive(Default)]
struct Tally {
    passed: usize,
    failures: Vec<CheckReport>,
}

impl Tally {
    fn add(&mut self, r: CheckReport) {
        match r.status {
            CheckStatus::Pass => self.passed += 1,
            CheckStatus::Fail => self.failures.push(r),
            CheckStatus::Skipped => {}
        }
    }

    fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed > 0
    }

    fn summary(&self) -> String {
        match self.failures.first() {
            None => format!("{} instances", self.passed),
            Some(f) => format!(
                "{} failures, first: {} [{}] {}",
                self.failures.len(),
                f.check,
                f.instance,
                f.witness
            ),
        }
    }
}

#[test]
fn criterion_4_theorem_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let nets: Vec<Network> = (0..100)
        .map(|i| {
            let kind = match i {
                0..=59 => NetworkKind::Any,
                60..=79 => NetworkKind::PureRc,
                _ => NetworkKind::PureRl,
            };
            verify::random_network(&mut rng, kind)
        })
        .collect();

    let mut green = Tally::default();
    let mut sum_lap = Tally::default();
    let mut bounds = Tally::default();
    let mut cons_k = Tally::default();
    let mut cons_c = Tally::default();
    let mut thomson = Tally::default();
    let mut signs = Tally::default();
    let mut rc = Tally::default();
    let mut rl = Tally::default();
    let mut choice = Tally::default();
    let mut cramer = Tally::default();

    for (i, net) in nets.iter().enumerate() {
        let n = net.vertex_count();
        let sym = net.symbolic_weights();
        for k in 0..4 {
            let f = VertexFunction(
                (0..n)
                    .map(|_| verify::random_rational_function(&mut rng))
                    .collect(),
            );
            let g = VertexFunction(
                (0..n)
                    .map(|_| verify::random_rational_function(&mut rng))
                    .collect(),
            );
            let omega = if k == 0 {
                (0..n).collect()
            } else {
                verify::random_subset(&mut rng, n)
            };
            green.add(verify::check_green(sym, &f, &g, &omega, 0.0));
            sum_lap.add(verify::check_sum_laplacian(sym, &f, 0.0));

            let lambda = verify::random_physical_lambda(&mut rng);
            let w = net.complex_weights(lambda).unwrap();
            let f = VertexFunction((0..n).map(|_| verify::random_complex(&mut rng)).collect());
            let g = VertexFunction((0..n).map(|_| verify::random_complex(&mut rng)).collect());
            let omega = verify::random_subset(&mut rng, n);
            green.add(verify::check_green(&w, &f, &g, &omega, verify::GREEN_TOL));
            sum_lap.add(verify::check_sum_laplacian(&w, &f, verify::GREEN_TOL));
        }
        bounds.add(verify::check_dirichlet_bounds(net));
        cons_k.add(verify::check_conservation_symbolic(net));
        for _ in 0..5 {
            cons_c.add(verify::check_conservation_complex(
                net,
                verify::random_physical_lambda(&mut rng),
            ));
        }
        thomson.add(verify::check_thomson(net, 100, i as u64));
        let omegas: Vec<f64> = (0..10)
            .map(|_| verify::random_physical_lambda(&mut rng).im)
            .collect();
        let r = verify::check_signs(net, &omegas);
        if net.is_pure_rc() {
            rc.add(r.clone());
        }
        if net.is_pure_rl() {
            rl.add(r.clone());
        }
        signs.add(r);
        let singular = singular_frequencies(
            net,
            acnet::exact::DEFAULT_ROOT_TOL,
            acnet::exact::DEFAULT_MAX_ITER,
        )
        .unwrap();
        for lambda in singular.physical() {
            choice.add(verify::check_choice_invariance(net, lambda, &mut rng));
        }
        cramer.add(verify::check_cramer(net, 20, i as u64));
    }
    // the worked examples force Multiple cases
    for (name, lambda) in [
        ("solutions", c(0.0, 2f64.sqrt())),
        ("nontrivial", c(0.0, 1.0)),
        ("complex_omega", c(-1.0, 0.0)),
        ("minus_lambda", c(0.0, 0.7)),
    ] {
        let r = verify::check_choice_invariance(&load(name), lambda, &mut rng);
        assert_eq!(r.status, CheckStatus::Pass, "{name}: {r:?}");
        choice.add(r);
    }

    let rows = [
        (
            "4.green",
            &green,
            "Green's formula, exact over K and ≤ 1e−9·scale over ℂ with random Ω",
        ),
        ("4.sum-laplacian", &sum_lap, "ΣΔf = 0 over both fields"),
        ("4.max-principle", &bounds, "0 ⪯ v ⪯ 1 over K"),
        ("4.conservation-K", &cons_k, "energy(v) = P exactly"),
        (
            "4.conservation-C",
            &cons_c,
            "energy(v) = P within 1e−8 at 5 physical λ",
        ),
        (
            "4.thomson",
            &thomson,
            "100 competitors per network, energy(f) ⪰ energy(v)",
        ),
        ("4.signs", &signs, "Re Z ≥ 0 at physical λ"),
        ("4.signs-rc", &rc, "pure RC: Im Z ≤ 0"),
        ("4.signs-rl", &rl, "pure RL: Im Z ≥ 0"),
        (
            "4.choice-invariance",
            &choice,
            "P independent of the solution in Multiple cases",
        ),
        ("4.cramer", &cramer, "Z1 = Z2 at 20 non-singular physical λ"),
    ];
    let mut ok = true;
    for (id, tally, what) in rows {
        ok &= line(id, tally.ok(), &format!("{what} ({})", tally.summary()));
    }
    assert!(ok);
}

// ---------------------------------------------------------------------------
// criterion 5: series/parallel composition oracle

#[derive(Debug, Clone)]
enum Circuit {
    Edge(Rational, Rational, Rational),
    Series(Vec<Circuit>),
    Parallel(Vec<Circuit>),
}

/// Impedance of one RLC edge, written from z = R + Lλ + D/λ.
fn edge_impedance(r: &Rational, l: &Rational, d: &Rational) -> RationalFunction {
    let num = Polynomial::new(vec![d.clone(), r.clone(), l.clone()]);
    RationalFunction::new(num, Polynomial::lambda()).unwrap()
}

fn oracle(c: &Circuit) -> RationalFunction {
    match c {
        Circuit::Edge(r, l, d) => edge_impedance(r, l, d),
        Circuit::Series(parts) => parts.iter().map(oracle).sum(),
        Circuit::Parallel(parts) => parts
            .iter()
            .map(|p| oracle(p).recip().unwrap())
            .sum::<RationalFunction>()
            .recip()
            .unwrap(),
    }
}

fn edges_in(c: &Circuit) -> usize {
    match c {
        Circuit::Edge(..) => 1,
        Circuit::Series(p) | Circuit::Parallel(p) => p.iter().map(edges_in).sum(),
    }
}

fn wire(
    c: &Circuit,
    a: &str,
    b: &str,
    fresh: &mut usize,
    mut builder: NetworkBuilder,
) -> NetworkBuilder {
    match c {
        Circuit::Edge(r, l, d) => {
            builder.edge(a, b, EdgeParams::rlc(r.clone(), l.clone(), d.clone()))
        }
        Circuit::Parallel(parts) => {
            for p in parts {
                builder = wire(p, a, b, fresh, builder);
            }
            builder
        }
        Circuit::Series(parts) => {
            let mut from = a.to_string();
            for (k, p) in parts.iter().enumerate() {
                let to = if k + 1 == parts.len() {
                    b.to_string()
                } else {
                    *fresh += 1;
                    format!("n{fresh}")
                };
                builder = wire(p, &from, &to, fresh, builder);
                from = to;
            }
            builder
        }
    }
}

fn random_edge<R: Rng>(rng: &mut R) -> Circuit {
    let vals = [(0, 1), (1, 2), (1, 1), (2, 1), (5, 1), (3, 7)];
    loop {
        let mut pick = || {
            let (n, d) = vals[rng.gen_range(0..vals.len())];
            Rational::new(n.into(), d.into())
        };
        let (r, l, d) = (pick(), pick(), pick());
        if !(r.is_zero() && l.is_zero() && d.is_zero()) {
            return Circuit::Edge(r, l, d);
        }
    }
}

fn random_circuit<R: Rng>(rng: &mut R, budget: usize) -> Circuit {
    if budget == 1 || rng.gen_bool(0.3) {
        return random_edge(rng);
    }
    let k = rng.gen_range(2..=budget.min(4));
    let mut left = budget;
    let parts: Vec<Circuit> = (0..k)
        .map(|j| {
            let rest = k - 1 - j;
            let share = if rest == 0 {
                left
            } else {
                rng.gen_range(1..=left - rest)
            };
            left -= share;
            random_circuit(rng, share)
        })
        .collect();
    if rng.gen_bool(0.5) {
        Circuit::Series(parts)
    } else {
        Circuit::Parallel(parts)
    }
}

#[test]
fn criterion_5_series_parallel_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    let mut failure = None;
    for _ in 0..300 {
        let budget = rng.gen_range(1..=4);
        let circuit = random_circuit(&mut rng, budget);
        assert!(edges_in(&circuit) <= 4);
        let mut fresh = 0;
        let net = wire(
            &circuit,
            "a0",
            "a1",
            &mut fresh,
            NetworkBuilder::new("a0", "a1"),
        )
        .build()
        .unwrap();
        let z = effective_symbolic(&net).unwrap().z;
        if z != oracle(&circuit) && failure.is_none() {
            failure = Some(format!(
                "{circuit:?}: solver {z} vs oracle {}",
                oracle(&circuit)
            ));
        }
        checked += 1;
    }
    let what = match &failure {
        None => format!("Z2 equals the series/parallel formula on {checked} circuits of ≤ 4 edges"),
        Some(f) => f.clone(),
    };
    assert!(line("5.oracle", failure.is_none(), &what));
}

// ---------------------------------------------------------------------------
// criterion 6: command line

fn acnet(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_acnet"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn criterion_6_cli() {
    let mut ok = true;
    let tmp = std::env::temp_dir().join(format!("acnet-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    for name in [
        "solutions",
        "nontrivial",
        "complex_omega",
        "non_pos_w",
        "minus_lambda",
    ] {
        let file = netlist_path(name);
        let file = file.to_str().unwrap();
        let runs: Vec<(&str, Vec<&str>)> = vec![
            ("solve", vec!["solve", file, "--omega", "1"]),
            (
                "sweep",
                vec![
                    "sweep",
                    file,
                    "--omega-min",
                    "0.5",
                    "--omega-max",
                    "2",
                    "--points",
                    "7",
                ],
            ),
            ("singular", vec!["singular", file]),
            ("compare", vec!["compare", file, "--omega", "0.5"]),
            ("check", vec!["check", file, "--trials", "20"]),
        ];
        for (cmd, args) in runs {
            let (status, _, err) = acnet(&args);
            ok &= line(
                &format!("6.{name}.{cmd}"),
                status == 0,
                &format!("exit status {status} {}", err.trim()),
            );
        }
        if name != "minus_lambda" {
            let (status, _, _) = acnet(&["solve", file, "--symbolic"]);
            ok &= line(
                &format!("6.{name}.solve-symbolic"),
                status == 0,
                &format!("exit status {status}"),
            );
        }

        let csv_a = tmp.join(format!("{name}-a.csv"));
        let csv_b = tmp.join(format!("{name}-b.csv"));
        for out in [&csv_a, &csv_b] {
            acnet(&[
                "sweep",
                file,
                "--omega-min",
                "0.1",
                "--omega-max",
                "10",
                "--points",
                "41",
                "--log",
                "--out",
                out.to_str().unwrap(),
            ]);
        }
        let (a, b) = (
            std::fs::read(&csv_a).unwrap(),
            std::fs::read(&csv_b).unwrap(),
        );
        ok &= line(
            &format!("6.{name}.csv-stable"),
            !a.is_empty() && a == b && a.starts_with(b"omega,re_Z,im_Z,class\n"),
            "sweep CSV byte-identical across two runs",
        );
    }

    let f = netlist_path("complex_omega");
    let (status, out, _) = acnet(&["compare", f.to_str().unwrap(), "--lambda", "-1,0"]);
    ok &= line(
        "6.complex_omega.compare-disagree",
        status == 0 && out.contains("agree=no"),
        "compare at λ = −1 reports disagreement and exits 0",
    );
    let f = netlist_path("non_pos_w");
    let (status, out, _) = acnet(&["compare", f.to_str().unwrap(), "--omega", "1"]);
    ok &= line(
        "6.non_pos_w.compare-disagree",
        status == 0 && out.contains("agree=no"),
        "compare at λ = i reports disagreement and exits 0",
    );
    let _ = std::fs::remove_dir_all(&tmp);
    assert!(ok);
}
