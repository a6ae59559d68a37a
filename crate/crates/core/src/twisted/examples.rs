//! A fixed collection of small groups with automorphisms, used by the test
//! suites and the command line.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::Automorphism;
use crate::error::Result;
use crate::group::IndexedGroup;
use crate::perm::Perm;
use crate::root_system::{CartanType, RootSystem, Series};

/// A group together with named automorphisms.
#[derive(Clone, Debug)]
pub struct SuiteEntry {
    pub name: String,
    pub group: IndexedGroup,
    pub generators: Vec<Perm>,
    pub automorphisms: Vec<(String, Automorphism)>,
}

fn cycles(deg: usize, gens: &[&[&[usize]]]) -> Vec<Perm> {
    gens.iter().map(|c| Perm::from_cycles(deg, c).unwrap()).collect()
}

fn entry(name: &str, deg: usize, gens: Vec<Perm>, images: &[(&str, Vec<Perm>)], inner: &[usize]) -> Result<SuiteEntry> {
    let group = IndexedGroup::generate(deg, &gens)?;
    let mut automorphisms = vec![("id".to_string(), Automorphism::identity(&group))];
    for (label, im) in images {
        automorphisms.push((label.to_string(), Automorphism::from_generator_images(&group, &gens, im)?));
    }
    for &g in inner {
        let x = group.index_of(&gens[g]).unwrap();
        automorphisms.push((alloc::format!("inner(g{g})"), Automorphism::inner(&group, x)));
    }
    Ok(SuiteEntry { name: name.to_string(), group, generators: gens, automorphisms })
}

fn weyl_gens(s: Series, n: usize) -> (usize, Vec<Perm>) {
    let rs = RootSystem::new(CartanType::new(s, n).unwrap());
    let gens = rs.simple_roots().into_iter().map(|r| rs.reflection(r)).collect();
    (rs.num_roots(), gens)
}

/// S3, S4, Z/3, Z/2 x Z/2, W(B2), W(G2) and W(B3), each with the identity
/// and at least one further automorphism.
pub fn standard_suite() -> Result<Vec<SuiteEntry>> {
    let mut out = Vec::new();
    let s3 = cycles(3, &[&[&[0, 1]], &[&[1, 2]]]);
    out.push(entry("S3", 3, s3.clone(), &[("swap", vec![s3[1].clone(), s3[0].clone()])], &[0])?);
    let s4 = cycles(4, &[&[&[0, 1]], &[&[0, 1, 2, 3]]]);
    out.push(entry("S4", 4, s4, &[], &[0, 1])?);
    let z3 = cycles(3, &[&[&[0, 1, 2]]]);
    out.push(entry("Z3", 3, z3.clone(), &[("inversion", vec![z3[0].inverse()])], &[])?);
    let v4 = cycles(4, &[&[&[0, 1]], &[&[2, 3]]]);
    out.push(entry("Z2xZ2", 4, v4.clone(), &[("swap", vec![v4[1].clone(), v4[0].clone()])], &[])?);
    for (name, s, n) in [("W(B2)", Series::B, 2), ("W(G2)", Series::G, 2)] {
        let (deg, g) = weyl_gens(s, n);
        out.push(entry(name, deg, g.clone(), &[("swap", vec![g[1].clone(), g[0].clone()])], &[0])?);
    }
    let (deg, g) = weyl_gens(Series::B, 3);
    out.push(entry("W(B3)", deg, g, &[], &[0, 2])?);
    Ok(out)
}
