//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. Criteria 1–6 run once with four workers and are
//! timed; criterion 7 reruns them with one and with four workers and
//! compares every report byte for byte.
//!
//! Command-line parts spawn the `morita` binary; library parts run on a
//! rayon pool of the same size.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use morita_core::{
    compare_induced, fixtures, iso_f, iso_g, wreath_acted, wreath_algebra, wreath_bimodule, wreath_structure_map,
    wreath_units, ActedAlgebra, GradedAlgebra, GradedBimodule, Rational, Scalar, SparseVec, StructureMap,
};
use tempfile::TempDir;

type Q = Rational;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

struct Run {
    jobs: usize,
    dir: TempDir,
    pool: rayon::ThreadPool,
}

impl Run {
    fn new(jobs: usize) -> Self {
        Run {
            jobs,
            dir: TempDir::new().expect("temp dir"),
            pool: rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("pool"),
        }
    }

    /// Runs the binary inside the scratch directory, so that outputs can be
    /// named relatively and reports do not mention the directory.
    fn morita(&self, args: &[&str]) -> (i32, String) {
        let out = Command::new(env!("CARGO_BIN_EXE_morita"))
            .args(args)
            .args(["--jobs", &self.jobs.to_string()])
            .current_dir(self.dir.path())
            .output()
            .expect("spawn morita");
        let stdout = String::from_utf8(out.stdout).expect("utf-8 report");
        (out.status.code().unwrap_or(-1), stdout)
    }
}

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    transcript: String,
}

impl Outcome {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn log(&mut self, text: &str) {
        self.transcript.push_str(text);
        self.transcript.push('\n');
    }

    /// Runs a command, logs its report and checks exit code and verdict.
    fn command(&mut self, run: &Run, args: &[&str], exit: i32, verdict: &str) -> String {
        let (code, out) = run.morita(args);
        self.log(&format!("$ morita {}", args.join(" ")));
        self.log(&out);
        let found = if args.contains(&"--json") {
            serde_json::from_str::<serde_json::Value>(&out)
                .ok()
                .and_then(|v| v["verdict"].as_str().map(String::from))
                .unwrap_or_default()
        } else {
            let first = out.lines().next().unwrap_or("");
            first.rsplit(": ").next().unwrap_or("").to_string()
        };
        self.expect(
            code == exit && found == verdict,
            format!("`{}` exited {code} with verdict `{found}`", args.join(" ")),
        );
        out
    }
}

fn built_dimension(report: &str) -> Option<usize> {
    let line = report.lines().find(|l| l.contains("[pass] built "))?;
    let start = line.find("(dimension ")? + "(dimension ".len();
    line[start..].trim_end_matches(')').parse().ok()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

// 1. F[G] ≀ Sₙ against F[G ≀ Sₙ]

fn criterion1(run: &Run, o: &mut Outcome) {
    for (file, order, n) in [("c2.json", 2usize, 2), ("c2.json", 2, 3), ("c3.json", 3, 2), ("s3.json", 6, 2)] {
        for field in ["Q", "GF(5)"] {
            let n_arg = n.to_string();
            let out = o.command(run, &["oracle", &fixture(file), "--n", &n_arg, "--field", field], 0, "certified");
            let dim = order.pow(n as u32) * factorial(n);
            o.expect(
                out.contains(&format!("(dimension {dim}, all {} products)", dim * dim)),
                format!("{file} n={n} over {field}: expected dimension {dim}"),
            );
        }
    }
}

// 2. tensor products of acted algebras and structure maps

fn criterion2(run: &Run, o: &mut Outcome) {
    let cases: [(&[&str], usize); 5] = [
        (&["regular_c2.json", "regular_c3.json"], 6),
        (&["regular_c2.json", "matrix_c2.json"], 8),
        (&["regular_c3.json", "matrix_c2.json"], 12),
        (&["matrix_c2.json", "matrix_c2.json"], 16),
        (&["regular_c2.json", "regular_c3.json", "matrix_c2.json"], 24),
    ];
    for (i, (inputs, dim)) in cases.iter().enumerate() {
        let out_name = format!("tensor{i}.json");
        let mut args = vec!["build".to_string(), "tensor".into()];
        args.extend(inputs.iter().map(|f| fixture(f)));
        args.extend(["-o".into(), out_name.clone()]);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let report = o.command(run, &args, 0, "certified");
        o.expect(built_dimension(&report) == Some(*dim), format!("tensor {inputs:?}: expected dimension {dim}"));
        let check = o.command(run, &["check", &out_name], 0, "certified");
        o.expect(
            check.contains("[pass] crossed-product units at $") && check.contains("[pass] structure map at $"),
            format!("tensor {inputs:?}: units or structure map not certified"),
        );
    }
}

// 3. wreath products of algebras, acted algebras and structure maps

fn exhaustive_wreath(z: &StructureMap<Q>, n: usize, o: &mut Outcome) {
    let label = format!("{} n={n}", z.target().dim());
    let a = z.target();
    let wa = match wreath_algebra(a, n) {
        Ok(w) => w,
        Err(e) => return o.expect(false, format!("wreath algebra {label}: {e}")),
    };
    // grading inclusion on every pair of basis vectors
    let g = wa.group();
    let graded = (0..wa.dim()).all(|i| {
        (0..wa.dim()).all(|j| {
            let want = g.mul(wa.degree(i), wa.degree(j));
            wa.mult().cell(i, j).support().all(|k| wa.degree(k) == want)
        })
    });
    o.expect(graded, format!("wreath algebra {label}: grading inclusion"));

    // units and their stated inverses
    match wreath_units(&wa, a, z.units(), n) {
        Ok(u) => {
            let ok = (0..g.order()).all(|w| {
                wa.homogeneous_degree(u.unit(w)) == Some(w)
                    && wa.mul(u.unit(w), u.inverse(w)) == *wa.one()
                    && wa.mul(u.inverse(w), u.unit(w)) == *wa.one()
            });
            o.expect(ok, format!("wreath units {label}"));
            o.log(&format!("wreath units {label}: {} certified", u.len()));
        }
        Err(e) => o.expect(false, format!("wreath units {label}: {e}")),
    }

    // action laws, checked again here on every element and basis pair
    match wreath_acted(z.source(), n) {
        Ok(c) => {
            let laws = action_laws(&c);
            o.expect(laws.is_none(), format!("wreath action {label}: {laws:?}"));
        }
        Err(e) => o.expect(false, format!("wreath action {label}: {e}")),
    }
    let zw = wreath_structure_map(z, n);
    o.expect(zw.is_ok(), format!("wreath structure map {label}: {:?}", zw.err()));
}

/// First violated law among identity, composition, automorphism and
/// grading compatibility.
fn action_laws(c: &ActedAlgebra<Q>) -> Option<String> {
    let k = c.acting_group();
    let alg: &GradedAlgebra<Q> = c.algebra();
    if !c.action(k.identity()).is_identity() {
        return Some("identity".into());
    }
    for g in 0..k.order() {
        for h in 0..k.order() {
            if c.action(g).mul(c.action(h)).ok().as_ref() != Some(c.action(k.mul(g, h))) {
                return Some(format!("composition ({g}, {h})"));
            }
        }
        for x in 0..alg.dim() {
            let gx = c.act(g, &alg.basis(x));
            let Some(degree) = c.act_on_degree(g, alg.degree(x)) else {
                return Some(format!("degree of ({g}, {x})"));
            };
            if gx.support().any(|y| alg.degree(y) != degree) {
                return Some(format!("grading ({g}, {x})"));
            }
            for y in 0..alg.dim() {
                let lhs = c.act(g, &alg.mul(&alg.basis(x), &alg.basis(y)));
                if lhs != alg.mul(&gx, &c.act(g, &alg.basis(y))) {
                    return Some(format!("automorphism ({g}, {x}, {y})"));
                }
            }
        }
    }
    None
}

fn criterion3(run: &Run, o: &mut Outcome) {
    for (file, n, dim) in [("regular_c2.json", 2, 8), ("regular_c2.json", 3, 48), ("matrix_c2.json", 2, 32)] {
        let out_name = format!("wreath_{n}_{file}");
        let n_arg = n.to_string();
        let report = o.command(run, &["build", "wreath", "--n", &n_arg, &fixture(file), "-o", &out_name], 0, "certified");
        o.expect(built_dimension(&report) == Some(dim), format!("wreath {file} n={n}: expected dimension {dim}"));
        o.command(run, &["check", &out_name], 0, "certified");
    }
    run.pool.install(|| {
        let regular = fixtures::regular_structure_map::<Q>(fixtures::group_algebra_c2());
        exhaustive_wreath(&regular, 2, o);
        exhaustive_wreath(&regular, 3, o);
        exhaustive_wreath(&fixtures::matrix_structure_map::<Q>(), 2, o);
    });
}

// 4. the induced-module isomorphisms f and g

fn rows<F: Scalar>(m: &morita_core::Matrix<F>) -> String {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("; ")
}

fn induced(name: &str, m: &GradedBimodule<Q>, o: &mut Outcome) {
    let w = match wreath_bimodule(m, 2) {
        Ok(w) => Arc::new(w),
        Err(e) => return o.expect(false, format!("{name}: wreath bimodule: {e}")),
    };
    for (side, iso) in [("f", iso_f(m, &w, 2)), ("g", iso_g(m, &w, 2))] {
        let iso = match iso {
            Ok(i) => i,
            Err(e) => {
                o.expect(false, format!("{name}: {side}: {e}"));
                continue;
            }
        };
        let inverse_ok = iso.map.matrix().mul(&iso.inverse).is_ok_and(|p| p.is_identity())
            && iso.inverse.mul(iso.map.matrix()).is_ok_and(|p| p.is_identity());
        let graded = (0..w.dim()).all(|x| {
            iso.map
                .apply(&SparseVec::unit(w.dim(), x))
                .support()
                .all(|y| w.degree(y) == iso.source().degree(x))
        });
        o.expect(iso.map.check().is_ok(), format!("{name}: {side} is not a bimodule map"));
        o.expect(inverse_ok, format!("{name}: {side} inverse"));
        o.expect(graded, format!("{name}: {side} grading"));
        o.expect(iso.preimages == w.dim(), format!("{name}: {side} preimages {} of {}", iso.preimages, w.dim()));
        o.log(&format!("{name} {side}: {}", rows(iso.map.matrix())));
        o.log(&format!("{name} {side}⁻¹: {}", rows(&iso.inverse)));
    }
    if let (Ok(f), Ok(g)) = (iso_f(m, &w, 2), iso_g(m, &w, 2)) {
        o.expect(compare_induced(&f, &g).is_ok(), format!("{name}: the two induced forms do not agree"));
    }
}

fn criterion4(run: &Run, o: &mut Outcome) {
    for (file, dim) in [("regular_bimodule.json", 8), ("row_module.json", 32)] {
        let out_name = format!("wreath_{file}");
        let report = o.command(run, &["build", "wreath", "--n", "2", &fixture(file), "-o", &out_name], 0, "certified");
        o.expect(built_dimension(&report) == Some(dim), format!("wreath {file}: expected dimension {dim}"));
        o.command(run, &["check", &out_name], 0, "certified");
    }
    run.pool.install(|| {
        induced("regular", &fixtures::regular_c2_bimodule::<Q>(), o);
        induced("row", &fixtures::row_module::<Q>(), o);
    });
}

// 5. Morita equivalence end to end

fn criterion5(run: &Run, o: &mut Outcome) {
    let row = fixture("row_module.json");
    let seed = ["--seed", "0", "--trials", "64"];
    let verify = |o: &mut Outcome, path: &str| {
        // JSON, so that the certificate matrices themselves are compared
        // across runs
        let mut args = vec!["verify-morita", path, "--json"];
        args.extend(seed);
        let out = o.command(run, &args, 0, "certified");
        let certificates = serde_json::from_str::<serde_json::Value>(&out)
            .ok()
            .and_then(|v| v["certificates"].as_array().map(Vec::len));
        o.expect(certificates == Some(2), format!("{path}: expected two certificates"));
    };
    verify(o, &row);
    o.command(run, &["build", "tensor", &row, &row, "-o", "tensor_square.json"], 0, "certified");
    verify(o, "tensor_square.json");
    o.command(run, &["build", "wreath", "--n", "2", &row, "-o", "wreath_square.json"], 0, "certified");
    verify(o, "wreath_square.json");
}

// 6. fault-injected mutants

fn criterion6(run: &Run, o: &mut Outcome) {
    let cases = [
        ("mutants/bad_algebra.json", "basis triple (0, 0, 1): coordinate 1 of (e0e0)e1 is 2, of e0(e0e1) is 4"),
        ("mutants/bad_degree.json", "m0·a'2 has a component on m2 of degree 1, expected degree 0"),
        ("mutants/bad_lact.json", "(a1, a1, m0): coordinate 0 of (a1a1)m0 is 1, of a1(a1m0) is 2"),
        ("mutants/bad_action.json", "act(1)·act(1) ≠ act(1·1)"),
        ("mutants/bad_zeta.json", "basis pair (c1, c1)"),
    ];
    for (file, witness) in cases {
        let out = o.command(run, &["check", &fixture(file)], 1, "refuted");
        o.expect(out.contains(witness), format!("{file}: witness `{witness}` missing"));
    }
    let out = o.command(run, &["verify-morita", &fixture("sum_bimodule.json")], 1, "refuted");
    o.expect(
        out.contains("witness: dim M ⊗_A′ M* = 8, dim A = 2"),
        "A⊕A: dimension witness missing",
    );
}

type Criterion = fn(&Run, &mut Outcome);

const CRITERIA: [(&str, Criterion, u64); 6] = [
    ("group-algebra oracle", criterion1, 30),
    ("tensor products", criterion2, 10),
    ("wreath products", criterion3, 60),
    ("induced-module isomorphisms", criterion4, 60),
    ("Morita equivalences", criterion5, 120),
    ("negative controls", criterion6, 10),
];

fn run_all(jobs: usize) -> Vec<(Outcome, Duration)> {
    let run = Run::new(jobs);
    CRITERIA
        .iter()
        .map(|(_, f, _)| {
            let mut o = Outcome::default();
            let start = Instant::now();
            f(&run, &mut o);
            (o, start.elapsed())
        })
        .collect()
}

fn main() -> ExitCode {
    let mut all_pass = true;
    let mut lines = String::new();
    let first = run_all(4);
    for (i, ((name, _, limit), (o, took))) in CRITERIA.iter().zip(&first).enumerate() {
        let in_time = took.as_secs_f64() < *limit as f64;
        let pass = o.failures.is_empty() && in_time;
        all_pass &= pass;
        let _ = writeln!(
            lines,
            "criterion {} ({name}, exact): {} in {:.2}s (limit {limit}s)",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
        for f in &o.failures {
            let _ = writeln!(lines, "    {f}");
        }
    }

    let single = run_all(1);
    let again = run_all(4);
    let differing: Vec<usize> = (0..CRITERIA.len())
        .filter(|&i| first[i].0.transcript != single[i].0.transcript || first[i].0.transcript != again[i].0.transcript)
        .map(|i| i + 1)
        .collect();
    let bytes: usize = first.iter().map(|(o, _)| o.transcript.len()).sum();
    let pass = differing.is_empty();
    all_pass &= pass;
    let _ = writeln!(
        lines,
        "criterion 7 (determinism, byte-identical): {} ({bytes} report bytes, runs with --jobs 4, 1, 4)",
        if pass { "PASS" } else { "FAIL" }
    );
    if !pass {
        let _ = writeln!(lines, "    reports differ for criteria {differing:?}");
    }
    print!("{lines}");
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
