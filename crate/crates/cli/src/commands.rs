//! The four commands. Each returns the text to print and an exit code;
//! document problems come back as [`CliError`] and exit with 2.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use morita_core::scalar::Field;
use morita_core::{
    direct_product, dual, opposite, oracle_group_algebra, tensor_acted, tensor_algebras, tensor_bimodules,
    tensor_over, tensor_structure_maps, verify_morita, wreath_acted, wreath_algebra, wreath_bimodule,
    wreath_group, wreath_structure_map, Fp, IsoVerdict, Rational, Scalar,
};
use morita_core::bimodule::MoritaSide;
use morita_core::constructions::OracleDiff;

use crate::doc::{self, Node};
use crate::error::CliError;
use crate::export;
use crate::load::{Loader, Object, Stop};
use crate::report::{Certificate, Check, Report};

/// Primes with a compiled-in field. Other primes are refused with a usage
/// error rather than falling back to a slower representation.
pub const PRIMES: [u64; 9] = [2, 3, 5, 7, 11, 13, 101, 65537, 2147483647];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub seed: u64,
    pub trials: usize,
    pub json: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            seed: 0,
            trials: 64,
            json: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub exit: i32,
}

/// Work that needs a concrete coefficient field.
pub trait FieldJob {
    type Out;
    fn run<F: Scalar>(self) -> Self::Out;
}

pub fn dispatch<J: FieldJob>(field: Field, job: J) -> Result<J::Out, CliError> {
    Ok(match field {
        Field::Rational => job.run::<Rational>(),
        Field::Prime(2) => job.run::<Fp<2>>(),
        Field::Prime(3) => job.run::<Fp<3>>(),
        Field::Prime(5) => job.run::<Fp<5>>(),
        Field::Prime(7) => job.run::<Fp<7>>(),
        Field::Prime(11) => job.run::<Fp<11>>(),
        Field::Prime(13) => job.run::<Fp<13>>(),
        Field::Prime(101) => job.run::<Fp<101>>(),
        Field::Prime(65537) => job.run::<Fp<65537>>(),
        Field::Prime(2147483647) => job.run::<Fp<2147483647>>(),
        Field::Prime(p) => {
            let known: Vec<String> = PRIMES.iter().map(u64::to_string).collect();
            return Err(CliError::Usage(format!(
                "GF({p}) is not available; supported primes are {}",
                known.join(", ")
            )));
        }
    })
}

fn supported(field: Field) -> Result<(), CliError> {
    struct Probe;
    impl FieldJob for Probe {
        type Out = ();
        fn run<F: Scalar>(self) {}
    }
    dispatch(field, Probe)
}

fn parse_field(text: &str, at: &str) -> Result<Field, CliError> {
    Field::parse(text).map_err(|e| CliError::Content {
        at: at.to_string(),
        message: e.to_string(),
    })
}

/// Field of a document; groups carry none and are loaded over Q.
fn field_of(node: &Node, origin: &str) -> Result<Field, CliError> {
    match node.doc.body.field() {
        Some(f) => parse_field(f, origin),
        None => Ok(Field::Rational),
    }
}

fn render(report: &Report, settings: &Settings) -> Output {
    Output {
        stdout: if settings.json { report.to_json() } else { report.to_text() },
        exit: report.verdict.exit_code(),
    }
}

fn subject(path: &Path) -> String {
    path.display().to_string()
}

/// Finishes a load: a verdict stop becomes a report, an error propagates.
fn stopped(stop: Stop, command: &str, subject: &str, loader_checks: Vec<Check>, settings: &Settings) -> Result<Output, CliError> {
    match stop {
        Stop::Error(e) => Err(e),
        Stop::Verdict => Ok(render(&Report::new(command, subject, settings.seed, loader_checks), settings)),
    }
}

// check

struct CheckJob<'a> {
    node: &'a Node,
    subject: String,
    settings: Settings,
}

impl FieldJob for CheckJob<'_> {
    type Out = Result<Output, CliError>;

    fn run<F: Scalar>(self) -> Self::Out {
        let mut loader = Loader::<F>::new(self.settings.seed, self.settings.trials);
        match loader.any(self.node) {
            Ok(_) => Ok(render(
                &Report::new("check", &self.subject, self.settings.seed, loader.checks),
                &self.settings,
            )),
            Err(stop) => stopped(stop, "check", &self.subject, loader.checks, &self.settings),
        }
    }
}

/// Validates a document and everything it references.
pub fn check(path: &Path, settings: &Settings) -> Result<Output, CliError> {
    let node = doc::read(path)?;
    let field = field_of(&node, &subject(path))?;
    dispatch(
        field,
        CheckJob {
            node: &node,
            subject: subject(path),
            settings: *settings,
        },
    )?
}

// build

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildOp {
    Tensor,
    Wreath,
    Dual,
    TensorOver,
    Opposite,
}

impl BuildOp {
    pub fn name(self) -> &'static str {
        match self {
            BuildOp::Tensor => "tensor",
            BuildOp::Wreath => "wreath",
            BuildOp::Dual => "dual",
            BuildOp::TensorOver => "tensor-over",
            BuildOp::Opposite => "opposite",
        }
    }
}

struct BuildJob<'a> {
    op: BuildOp,
    nodes: &'a [Node],
    n: Option<usize>,
    output: Option<&'a Path>,
    subject: String,
    settings: Settings,
}

fn build_error(op: BuildOp, message: impl ToString) -> CliError {
    CliError::Build {
        op: op.name().into(),
        message: message.to_string(),
    }
}

fn a(kind: &str) -> String {
    let article = if kind.starts_with('a') { "an" } else { "a" };
    format!("{article} {kind}")
}

fn construct<F: Scalar>(op: BuildOp, inputs: &[Object<F>], n: Option<usize>) -> Result<Object<F>, CliError> {
    let err = |e: &dyn ToString| build_error(op, e.to_string());
    let same_kind = || {
        let kind = inputs[0].kind();
        match inputs.iter().find(|o| o.kind() != kind) {
            Some(o) => Err(build_error(op, format!("cannot combine {} with {}", a(kind), a(o.kind())))),
            None => Ok(()),
        }
    };
    let arity = |k: usize| {
        if inputs.len() == k {
            Ok(())
        } else {
            Err(build_error(op, format!("expects {k} input(s), got {}", inputs.len())))
        }
    };
    match op {
        BuildOp::Tensor => {
            same_kind()?;
            macro_rules! all {
                ($variant:ident) => {
                    inputs
                        .iter()
                        .map(|o| match o {
                            Object::$variant(x) => x.as_ref(),
                            _ => unreachable!("kinds checked above"),
                        })
                        .collect::<Vec<_>>()
                };
            }
            Ok(match &inputs[0] {
                Object::Group(_) => Object::Group(Arc::new(direct_product(&all!(Group)).map_err(|e| err(&e))?)),
                Object::Algebra(_) => Object::Algebra(Arc::new(tensor_algebras(&all!(Algebra)).map_err(|e| err(&e))?)),
                Object::Action(_) => Object::Action(Arc::new(tensor_acted(&all!(Action)).map_err(|e| err(&e))?)),
                Object::StructureMap(_) => {
                    Object::StructureMap(Arc::new(tensor_structure_maps(&all!(StructureMap)).map_err(|e| err(&e))?))
                }
                Object::Bimodule(_) => Object::Bimodule(Arc::new(tensor_bimodules(&all!(Bimodule)).map_err(|e| err(&e))?)),
            })
        }
        BuildOp::Wreath => {
            arity(1)?;
            let n = n.ok_or_else(|| build_error(op, "--n is required"))?;
            Ok(match &inputs[0] {
                Object::Group(g) => Object::Group(Arc::new(wreath_group(g, n).map_err(|e| err(&e))?)),
                Object::Algebra(a) => Object::Algebra(Arc::new(wreath_algebra(a, n).map_err(|e| err(&e))?)),
                Object::Action(c) => Object::Action(Arc::new(wreath_acted(c, n).map_err(|e| err(&e))?)),
                Object::StructureMap(z) => Object::StructureMap(Arc::new(wreath_structure_map(z, n).map_err(|e| err(&e))?)),
                Object::Bimodule(m) => Object::Bimodule(Arc::new(wreath_bimodule(m, n).map_err(|e| err(&e))?)),
            })
        }
        BuildOp::Dual => {
            arity(1)?;
            match &inputs[0] {
                Object::Bimodule(m) => Ok(Object::Bimodule(Arc::new(dual(m).map_err(|e| err(&e))?))),
                o => Err(build_error(op, format!("expects a bimodule, got {}", a(o.kind())))),
            }
        }
        BuildOp::TensorOver => {
            arity(2)?;
            match (&inputs[0], &inputs[1]) {
                (Object::Bimodule(m), Object::Bimodule(k)) => {
                    Ok(Object::Bimodule(Arc::new(tensor_over(m, k).map_err(|e| err(&e))?)))
                }
                _ => Err(build_error(op, "expects two bimodules")),
            }
        }
        BuildOp::Opposite => {
            arity(1)?;
            match &inputs[0] {
                Object::Algebra(a) => Ok(Object::Algebra(Arc::new(opposite(a)))),
                o => Err(build_error(op, format!("expects an algebra, got {}", a(o.kind())))),
            }
        }
    }
}

impl FieldJob for BuildJob<'_> {
    type Out = Result<Output, CliError>;

    fn run<F: Scalar>(self) -> Self::Out {
        let command = format!("build {}", self.op.name());
        let mut loader = Loader::<F>::new(self.settings.seed, self.settings.trials);
        let mut inputs = Vec::with_capacity(self.nodes.len());
        for node in self.nodes {
            match loader.any(node) {
                Ok(o) => inputs.push(o),
                Err(stop) => return stopped(stop, &command, &self.subject, loader.checks, &self.settings),
            }
        }
        let built = construct(self.op, &inputs, self.n)?;
        let text = doc::to_json(&export::object(&built));
        let Some(out) = self.output else {
            return Ok(Output { stdout: text, exit: 0 });
        };
        fs::write(out, &text).map_err(|source| CliError::Write {
            path: out.display().to_string(),
            source,
        })?;
        let mut checks = loader.checks;
        let noun = if built.kind() == "group" { "order" } else { "dimension" };
        checks.push(Check::pass(format!("built {} written to {}", built.kind(), out.display())).with_detail(format!(
            "{noun} {}",
            built.size()
        )));
        Ok(render(&Report::new(&command, &self.subject, self.settings.seed, checks), &self.settings))
    }
}

/// Builds a new document from validated inputs. Without `output` the
/// document itself is printed.
pub fn build(
    op: BuildOp,
    inputs: &[PathBuf],
    n: Option<usize>,
    output: Option<&Path>,
    settings: &Settings,
) -> Result<Output, CliError> {
    if inputs.is_empty() {
        return Err(build_error(op, "no inputs"));
    }
    let nodes = inputs.iter().map(|p| doc::read(p)).collect::<Result<Vec<_>, _>>()?;
    let fields = nodes
        .iter()
        .zip(inputs)
        .filter(|(n, _)| n.doc.body.field().is_some())
        .map(|(n, p)| field_of(n, &subject(p)).map(|f| (f, p)))
        .collect::<Result<Vec<_>, _>>()?;
    let field = fields.first().map_or(Field::Rational, |(f, _)| *f);
    if let Some((f, p)) = fields.iter().find(|(f, _)| *f != field) {
        return Err(CliError::FieldMismatch {
            at: subject(p),
            expected: field.to_string(),
            found: f.to_string(),
        });
    }
    let subject = inputs.iter().map(|p| subject(p)).collect::<Vec<_>>().join(" ");
    dispatch(
        field,
        BuildJob {
            op,
            nodes: &nodes,
            n,
            output,
            subject,
            settings: *settings,
        },
    )?
}

// verify-morita

struct MoritaJob<'a> {
    node: &'a Node,
    subject: String,
    settings: Settings,
}

fn side_check<F: Scalar>(
    name: &str,
    tensor: &str,
    regular: &str,
    side: &MoritaSide<F>,
    certificates: &mut Vec<Certificate>,
) -> Check {
    match &side.verdict {
        IsoVerdict::DimensionMismatch { source, target } => Check::fail(
            name,
            format!("dim {tensor} = {source}, dim {regular} = {target}"),
        ),
        IsoVerdict::Certified {
            map,
            inverse,
            hom_dim,
            attempt,
        } => {
            certificates.push(Certificate {
                name: name.into(),
                matrix: export::matrix_rows(map.matrix()),
                inverse: export::matrix_rows(inverse),
            });
            Check::pass(name).with_detail(format!(
                "dimension {}, hom space of dimension {hom_dim}, invertible map on attempt {attempt}",
                side.tensor_dim
            ))
        }
        IsoVerdict::NotCertified { hom_dim, tried } => Check::not_certified(
            name,
            format!("hom space of dimension {hom_dim}, no invertible map among {tried} candidates"),
        ),
    }
}

impl FieldJob for MoritaJob<'_> {
    type Out = Result<Output, CliError>;

    fn run<F: Scalar>(self) -> Self::Out {
        let command = "verify-morita";
        let mut loader = Loader::<F>::new(self.settings.seed, self.settings.trials);
        let m = match loader.bimodule(self.node) {
            Ok(m) => m,
            Err(stop) => return stopped(stop, command, &self.subject, loader.checks, &self.settings),
        };
        let mut checks = loader.checks;
        let mut certificates = Vec::new();
        match verify_morita(&m, self.settings.seed, self.settings.trials) {
            Err(e) => checks.push(Check::fail("dual and tensor products", e.to_string())),
            Ok(r) => {
                checks.push(Check::pass("dual M*").with_detail(format!("dimension {}", r.dual_dim)));
                checks.push(side_check("M ⊗_A′ M* ≅ A", "M ⊗_A′ M*", "A", &r.left, &mut certificates));
                checks.push(side_check("M* ⊗_A M ≅ A′", "M* ⊗_A M", "A′", &r.right, &mut certificates));
            }
        }
        let mut report = Report::new(command, &self.subject, self.settings.seed, checks);
        report.certificates = certificates;
        Ok(render(&report, &self.settings))
    }
}

/// Decides whether a bimodule is invertible by certifying both
/// isomorphisms `M ⊗ M* ≅ A` and `M* ⊗ M ≅ A′`.
pub fn verify_morita_cmd(path: &Path, settings: &Settings) -> Result<Output, CliError> {
    let node = doc::read(path)?;
    let field = field_of(&node, &subject(path))?;
    dispatch(
        field,
        MoritaJob {
            node: &node,
            subject: subject(path),
            settings: *settings,
        },
    )?
}

// oracle

struct OracleJob<'a> {
    group: &'a Arc<morita_core::FiniteGroup>,
    n: usize,
}

impl FieldJob for OracleJob<'_> {
    type Out = Check;

    fn run<F: Scalar>(self) -> Check {
        let name = "structure constants of F[G] ≀ Sₙ and F[G ≀ Sₙ] agree";
        match oracle_group_algebra::<F>(self.group, self.n) {
            Err(e) => Check::fail(name, e.to_string()),
            Ok((dim, None)) => Check::pass(name).with_detail(format!("dimension {dim}, all {} products", dim * dim)),
            Ok((_, Some(diff))) => Check::fail(
                name,
                match diff {
                    OracleDiff::Degree { basis, left, right } => {
                        format!("basis {basis} has degree {left} on the left, {right} on the right")
                    }
                    OracleDiff::Unit => "unit elements differ".into(),
                    OracleDiff::Product { i, j, left, right } => {
                        format!("b{i}·b{j}: {left} on the left, {right} on the right")
                    }
                },
            ),
        }
    }
}

/// Compares the wreath product of a group algebra with the group algebra
/// of the wreath product. Instances with `dim³` above `budget` are refused.
pub fn oracle(path: &Path, n: usize, field: &str, budget: u128, settings: &Settings) -> Result<Output, CliError> {
    let node = doc::read(path)?;
    let field = Field::parse(field).map_err(|e| CliError::Usage(e.to_string()))?;
    supported(field)?;
    let command = format!("oracle {field} n={n}");
    let mut loader = Loader::<Rational>::new(settings.seed, settings.trials);
    let group = match loader.group(&node) {
        Ok(g) => g,
        Err(stop) => return stopped(stop, &command, &subject(path), loader.checks, settings),
    };
    let mut checks = loader.checks;
    let dim = (1..=n as u128)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .and_then(|f| (group.order() as u128).checked_pow(u32::try_from(n).ok()?)?.checked_mul(f));
    let cost = dim.and_then(|d| d.checked_pow(3));
    let guard = "size guard";
    match (dim, cost) {
        (Some(d), Some(c)) if c <= budget => {
            checks.push(Check::pass(guard).with_detail(format!("dimension {d}, {c} ≤ {budget} triples")));
            checks.push(dispatch(field, OracleJob { group: &group, n })?);
        }
        (Some(d), _) => checks.push(Check::not_certified(
            guard,
            format!("dimension {d} needs {d}³ triples, over the budget of {budget}; refused"),
        )),
        _ => checks.push(Check::not_certified(guard, "dimension overflows; refused")),
    }
    Ok(render(&Report::new(&command, &subject(path), settings.seed, checks), settings))
}
