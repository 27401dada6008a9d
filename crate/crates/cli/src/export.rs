//! Objects to self-contained documents, every reference inlined.

use morita_core::{ActedAlgebra, FiniteGroup, GradedAlgebra, GradedBimodule, Matrix, Scalar, SparseVec, StructureMap};

use crate::doc::{ActionDoc, AlgebraDoc, BimoduleDoc, Document, Envelope, GroupDoc, Quad, Ref, StructureMapDoc};
use crate::load::Object;

fn strings<F: Scalar>(xs: &[F]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn dense<F: Scalar>(v: &SparseVec<F>) -> Vec<String> {
    strings(&v.to_dense())
}

pub fn matrix_rows<F: Scalar>(m: &Matrix<F>) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| strings(r)).collect()
}

fn quads<F: Scalar>(qs: Vec<(usize, usize, usize, F)>) -> Vec<Quad> {
    qs.into_iter().map(|(i, j, k, c)| (i, j, k, c.to_string())).collect()
}

pub fn group(g: &FiniteGroup) -> Document {
    Document::Group(GroupDoc {
        preset: None,
        table: Some(g.rows()),
        names: g.names().map(<[String]>::to_vec),
    })
}

pub fn algebra<F: Scalar>(a: &GradedAlgebra<F>) -> Document {
    Document::Algebra(AlgebraDoc {
        field: F::field().to_string(),
        group: Ref::inline(group(a.group())),
        basis: a.names().to_vec(),
        degree: a.degrees().to_vec(),
        mult: quads(a.mult().quadruples()),
        one: dense(a.one()),
    })
}

pub fn action<F: Scalar>(c: &ActedAlgebra<F>) -> Document {
    Document::Action(ActionDoc {
        field: F::field().to_string(),
        algebra: Ref::inline(algebra(c.algebra())),
        acting_group: Some(Ref::inline(group(c.acting_group()))),
        embedding: Some(c.embedding().to_vec()),
        matrices: Some(c.actions().iter().map(matrix_rows).collect()),
    })
}

pub fn structure_map<F: Scalar>(z: &StructureMap<F>) -> Document {
    Document::StructureMap(StructureMapDoc {
        field: F::field().to_string(),
        source: Ref::inline(action(z.source())),
        target: Ref::inline(algebra(z.target())),
        zeta: matrix_rows(z.zeta()),
        units: Some(z.units().units().iter().map(dense).collect()),
    })
}

pub fn bimodule<F: Scalar>(m: &GradedBimodule<F>) -> Document {
    Document::Bimodule(BimoduleDoc {
        field: F::field().to_string(),
        left: Ref::inline(structure_map(m.left())),
        right: Ref::inline(structure_map(m.right())),
        names: m.names().to_vec(),
        degree: m.degrees().to_vec(),
        lact: quads(m.lact().quadruples()),
        ract: quads(m.ract().quadruples()),
    })
}

pub fn object<F: Scalar>(o: &Object<F>) -> Envelope {
    Envelope::new(match o {
        Object::Group(g) => group(g),
        Object::Algebra(a) => algebra(a),
        Object::Action(c) => action(c),
        Object::StructureMap(z) => structure_map(z),
        Object::Bimodule(m) => bimodule(m),
    })
}
