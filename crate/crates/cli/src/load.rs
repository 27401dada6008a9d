//! Documents to validated objects. Every validator run is recorded as a
//! check, so a report can show exactly which object failed and why.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::marker::PhantomData;
use std::sync::Arc;

use morita_core::algebra::{AlgebraSpec, UnitSearchFailure};
use morita_core::bimodule::BimoduleSpec;
use morita_core::scalar::Field;
use morita_core::{
    is_crossed_product, make_bimodule, make_graded_algebra, make_structure_map, symmetric_group, ActedAlgebra,
    CrossedUnits, FiniteGroup, GradedAlgebra, GradedBimodule, Matrix, Scalar, SparseVec, StructureMap,
};

use crate::doc::{resolve, Document, Node, Quad};
use crate::error::CliError;
use crate::report::Check;

/// Why loading stopped.
#[derive(Debug)]
pub enum Stop {
    /// The documents are unusable; exit code 2.
    Error(CliError),
    /// A validator rejected an object, or a certificate was not found. The
    /// loader's checks say which.
    Verdict,
}

impl From<CliError> for Stop {
    fn from(e: CliError) -> Self {
        Stop::Error(e)
    }
}

/// Any validated object a document can describe.
#[derive(Clone)]
pub enum Object<F> {
    Group(Arc<FiniteGroup>),
    Algebra(Arc<GradedAlgebra<F>>),
    Action(Arc<ActedAlgebra<F>>),
    StructureMap(Arc<StructureMap<F>>),
    Bimodule(Arc<GradedBimodule<F>>),
}

impl<F: Scalar> Object<F> {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Group(_) => "group",
            Object::Algebra(_) => "algebra",
            Object::Action(_) => "action",
            Object::StructureMap(_) => "structure_map",
            Object::Bimodule(_) => "bimodule",
        }
    }

    /// Order of a group, dimension of everything else.
    pub fn size(&self) -> usize {
        match self {
            Object::Group(g) => g.order(),
            Object::Algebra(a) => a.dim(),
            Object::Action(c) => c.algebra().dim(),
            Object::StructureMap(z) => z.target().dim(),
            Object::Bimodule(m) => m.dim(),
        }
    }
}

pub struct Loader<F> {
    pub checks: Vec<Check>,
    seed: u64,
    trials: usize,
    _field: PhantomData<F>,
}

fn content(at: &str, message: impl Display) -> CliError {
    CliError::Content {
        at: at.to_string(),
        message: message.to_string(),
    }
}

impl<F: Scalar> Loader<F> {
    pub fn new(seed: u64, trials: usize) -> Self {
        Loader {
            checks: Vec::new(),
            seed,
            trials,
            _field: PhantomData,
        }
    }

    fn record<T, E: Display>(&mut self, name: String, r: Result<T, E>) -> Result<T, Stop> {
        match r {
            Ok(t) => {
                self.checks.push(Check::pass(name));
                Ok(t)
            }
            Err(e) => {
                self.checks.push(Check::fail(name, e.to_string()));
                Err(Stop::Verdict)
            }
        }
    }

    fn expect_field(&self, node: &Node) -> Result<(), CliError> {
        let Some(text) = node.doc.body.field() else {
            return Ok(());
        };
        let found = Field::parse(text).map_err(|e| content(&node.at, e))?;
        if found != F::field() {
            return Err(CliError::FieldMismatch {
                at: node.at.clone(),
                expected: F::field().to_string(),
                found: found.to_string(),
            });
        }
        Ok(())
    }

    fn scalar(at: &str, text: &str) -> Result<F, CliError> {
        F::parse_str(text).map_err(|e| content(at, e))
    }

    fn vector(at: &str, xs: &[String]) -> Result<Vec<F>, CliError> {
        xs.iter().map(|x| Self::scalar(at, x)).collect()
    }

    fn matrix(at: &str, rows: &[Vec<String>], shape: (usize, usize)) -> Result<Matrix<F>, CliError> {
        let parsed = rows.iter().map(|r| Self::vector(at, r)).collect::<Result<Vec<_>, _>>()?;
        if parsed.is_empty() {
            return Ok(Matrix::zeros(shape.0, shape.1));
        }
        let m = Matrix::from_rows(parsed).map_err(|e| content(at, e))?;
        if (m.rows(), m.cols()) != shape {
            return Err(content(
                at,
                format!("matrix is {}x{}, expected {}x{}", m.rows(), m.cols(), shape.0, shape.1),
            ));
        }
        Ok(m)
    }

    fn quads(at: &str, qs: &[Quad]) -> Result<Vec<(usize, usize, usize, F)>, CliError> {
        qs.iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, Self::scalar(at, c)?)))
            .collect()
    }

    fn wrong_kind(node: &Node, expected: &str) -> Stop {
        Stop::Error(CliError::Kind {
            at: node.at.clone(),
            expected: expected.into(),
            found: node.doc.body.kind().into(),
        })
    }

    pub fn any(&mut self, node: &Node) -> Result<Object<F>, Stop> {
        Ok(match node.doc.body {
            Document::Group(_) => Object::Group(self.group(node)?),
            Document::Algebra(_) => Object::Algebra(self.algebra(node)?),
            Document::Action(_) => Object::Action(self.action(node)?),
            Document::StructureMap(_) => Object::StructureMap(self.structure_map(node)?),
            Document::Bimodule(_) => Object::Bimodule(self.bimodule(node)?),
        })
    }

    pub fn group(&mut self, node: &Node) -> Result<Arc<FiniteGroup>, Stop> {
        let Document::Group(d) = &node.doc.body else {
            return Err(Self::wrong_kind(node, "group"));
        };
        let built = match (&d.preset, &d.table) {
            (Some(p), None) => preset(p).ok_or_else(|| content(&node.at, format!("unknown group preset `{p}`")))?,
            (None, Some(rows)) => FiniteGroup::from_table(rows.clone(), d.names.clone()),
            _ => return Err(content(&node.at, "a group needs exactly one of `preset` and `table`").into()),
        };
        self.record(format!("group at {}", node.at), built).map(Arc::new)
    }

    pub fn algebra(&mut self, node: &Node) -> Result<Arc<GradedAlgebra<F>>, Stop> {
        let Document::Algebra(d) = &node.doc.body else {
            return Err(Self::wrong_kind(node, "algebra"));
        };
        self.expect_field(node)?;
        let group = self.group(&resolve(node, "group", &d.group)?)?;
        let spec = AlgebraSpec {
            group,
            names: d.basis.clone(),
            degree: d.degree.clone(),
            mult: Self::quads(&node.at, &d.mult)?,
            one: Self::vector(&node.at, &d.one)?,
        };
        self.record(format!("algebra at {}", node.at), make_graded_algebra(spec))
            .map(Arc::new)
    }

    pub fn action(&mut self, node: &Node) -> Result<Arc<ActedAlgebra<F>>, Stop> {
        let Document::Action(d) = &node.doc.body else {
            return Err(Self::wrong_kind(node, "action"));
        };
        self.expect_field(node)?;
        let algebra = self.algebra(&resolve(node, "algebra", &d.algebra)?)?;
        let acting = match &d.acting_group {
            Some(r) => self.group(&resolve(node, "acting_group", r)?)?,
            None => algebra.group().clone(),
        };
        let embedding = d
            .embedding
            .clone()
            .unwrap_or_else(|| (0..algebra.group().order()).collect());
        let dim = algebra.dim();
        let matrices = match &d.matrices {
            None => vec![Matrix::identity(dim); acting.order()],
            Some(ms) => ms
                .iter()
                .map(|m| Self::matrix(&node.at, m, (dim, dim)))
                .collect::<Result<_, _>>()?,
        };
        let built = ActedAlgebra::new(algebra, acting, embedding, matrices);
        self.record(format!("action at {}", node.at), built).map(Arc::new)
    }

    pub fn structure_map(&mut self, node: &Node) -> Result<Arc<StructureMap<F>>, Stop> {
        let Document::StructureMap(d) = &node.doc.body else {
            return Err(Self::wrong_kind(node, "structure_map"));
        };
        self.expect_field(node)?;
        let source = self.action(&resolve(node, "source", &d.source)?)?;
        let target = self.algebra(&resolve(node, "target", &d.target)?)?;
        let zeta = Self::matrix(&node.at, &d.zeta, (target.dim(), source.algebra().dim()))?;
        let name = format!("crossed-product units at {}", node.at);
        let units = match &d.units {
            Some(vs) => {
                let vs = vs
                    .iter()
                    .map(|v| Self::vector(&node.at, v).map(|v| SparseVec::from_dense(&v)))
                    .collect::<Result<Vec<_>, _>>()?;
                self.record(name, CrossedUnits::certify(&target, vs))?
            }
            None => match is_crossed_product(&target, &BTreeMap::new(), self.trials, self.seed) {
                Ok(u) => {
                    self.checks.push(Check::pass(name).with_detail("found by search"));
                    u
                }
                Err(e @ UnitSearchFailure::EmptyComponent { .. }) => {
                    self.checks.push(Check::fail(name, e.to_string()));
                    return Err(Stop::Verdict);
                }
                Err(e) => {
                    self.checks.push(Check::not_certified(name, e.to_string()));
                    return Err(Stop::Verdict);
                }
            },
        };
        let built = make_structure_map(source, target, zeta, units);
        self.record(format!("structure map at {}", node.at), built)
            .map(Arc::new)
    }

    pub fn bimodule(&mut self, node: &Node) -> Result<Arc<GradedBimodule<F>>, Stop> {
        let Document::Bimodule(d) = &node.doc.body else {
            return Err(Self::wrong_kind(node, "bimodule"));
        };
        self.expect_field(node)?;
        let left = self.structure_map(&resolve(node, "left", &d.left)?)?;
        let right = self.structure_map(&resolve(node, "right", &d.right)?)?;
        let spec = BimoduleSpec {
            left,
            right,
            names: d.names.clone(),
            degree: d.degree.clone(),
            lact: Self::quads(&node.at, &d.lact)?,
            ract: Self::quads(&node.at, &d.ract)?,
        };
        self.record(format!("bimodule at {}", node.at), make_bimodule(spec))
            .map(Arc::new)
    }
}

/// `C<n>`, `S<n>` or `trivial`.
fn preset(name: &str) -> Option<Result<FiniteGroup, morita_core::group::GroupError>> {
    let name = name.trim();
    if name == "trivial" {
        return Some(Ok(FiniteGroup::trivial()));
    }
    let (head, n) = name.split_at(1);
    let n: usize = n.parse().ok()?;
    match head {
        "C" => Some(FiniteGroup::cyclic(n)),
        "S" if n <= 6 => Some(symmetric_group(n)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doc::parse_str;
    use morita_core::Rational;

    fn node(text: &str) -> Node {
        Node {
            doc: parse_str(text, "test").unwrap(),
            base: ".".into(),
            at: "$".into(),
        }
    }

    #[test]
    fn presets() {
        assert_eq!(preset("C5").unwrap().unwrap().order(), 5);
        assert_eq!(preset("S3").unwrap().unwrap().order(), 6);
        assert_eq!(preset("trivial").unwrap().unwrap().order(), 1);
        assert!(preset("D4").is_none());
        assert!(preset("S9").is_none());
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let n = node(
            r#"{"schema_version":1,"kind":"algebra","field":"GF(5)",
                "group":{"schema_version":1,"kind":"group","preset":"trivial"},
                "basis":["1"],"degree":[0],"mult":[[0,0,0,"1"]],"one":["1"]}"#,
        );
        let mut l = Loader::<Rational>::new(0, 0);
        assert!(matches!(l.algebra(&n), Err(Stop::Error(CliError::FieldMismatch { .. }))));
    }

    #[test]
    fn failed_validation_is_recorded() {
        let n = node(
            r#"{"schema_version":1,"kind":"algebra","field":"Q",
                "group":{"schema_version":1,"kind":"group","preset":"trivial"},
                "basis":["1"],"degree":[0],"mult":[[0,0,0,"2"]],"one":["1"]}"#,
        );
        let mut l = Loader::<Rational>::new(0, 0);
        assert!(matches!(l.algebra(&n), Err(Stop::Verdict)));
        assert_eq!(l.checks.len(), 2);
        assert_eq!(l.checks[1].witness.as_deref(), Some("1·e0 ≠ e0"));
    }

    #[test]
    fn missing_units_are_searched_for() {
        let n = node(
            r#"{"schema_version":1,"kind":"structure_map","field":"Q",
                "source":{"schema_version":1,"kind":"action","field":"Q",
                    "algebra":{"schema_version":1,"kind":"algebra","field":"Q",
                        "group":{"schema_version":1,"kind":"group","preset":"trivial"},
                        "basis":["1"],"degree":[0],"mult":[[0,0,0,"1"]],"one":["1"]}},
                "target":{"schema_version":1,"kind":"algebra","field":"Q",
                    "group":{"schema_version":1,"kind":"group","preset":"trivial"},
                    "basis":["1"],"degree":[0],"mult":[[0,0,0,"1"]],"one":["1"]},
                "zeta":[["1"]]}"#,
        );
        let mut l = Loader::<Rational>::new(0, 4);
        let z = l.structure_map(&n).unwrap();
        assert_eq!(z.target().dim(), 1);
        assert!(l.checks.iter().any(|c| c.detail.as_deref() == Some("found by search")));
    }
}
