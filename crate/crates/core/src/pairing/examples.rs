//! Built-in scenarios covering trivial data, the S4 example with a normal
//! Klein four subgroup, dihedral groups, Weyl groups with a nontrivial
//! Frobenius action, and several blocks at once.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::scenario::{BlockSpec, ScenarioSpec};
use crate::error::{Error, Result};
use crate::group::IndexedGroup;
use crate::perm::Perm;
use crate::root_system::{CartanType, RootSystem, Series};
use crate::twisted::Automorphism;

#[derive(Clone, Debug)]
pub struct NamedScenario {
    pub spec: ScenarioSpec,
    pub description: String,
}

fn cyc(deg: usize, c: &[&[usize]]) -> Perm {
    Perm::from_cycles(deg, c).unwrap()
}

/// How to pick `w_1` or `a_j` among the elements that keep the relevant
/// subgroup stable.
#[derive(Clone, Copy)]
enum Pick {
    Identity,
    /// The last stabilizing element in the group's fixed order.
    Last,
}

struct Builder {
    name: &'static str,
    description: &'static str,
    degree: usize,
    generators: Vec<Perm>,
    frobenius: Vec<Perm>,
    wse: Vec<Perm>,
    w1: Pick,
    blocks: Vec<(Vec<Perm>, Pick)>,
}

/// An element `x` with `x^-1 F^-1(S) x = S`.
fn stabilizing(o: &IndexedGroup, f_inv: &Automorphism, gens: &[Perm], pick: Pick) -> Perm {
    if let Pick::Identity = pick {
        return Perm::identity(o.elements()[0].degree());
    }
    let idx: Vec<usize> = gens.iter().map(|g| o.index_of(g).unwrap()).collect();
    let sub = o.closure(&idx);
    let mut member = vec![false; o.order()];
    for &x in &sub {
        member[x] = true;
    }
    (0..o.order())
        .rev()
        .find(|&x| {
            let xi = o.inv(x);
            sub.iter().all(|&y| member[o.mul(o.mul(xi, f_inv.apply(y)), x)])
        })
        .map(|x| o.element(x).clone())
        .expect("the normalizer of F^-1(S) meets the coset")
}

impl Builder {
    fn build(self) -> Result<NamedScenario> {
        let o = IndexedGroup::generate(self.degree, &self.generators)?;
        let f = Automorphism::from_generator_images(&o, &self.generators, &self.frobenius)
            .map_err(|e| Error::Internal(alloc::format!("{}: {e}", self.name)))?;
        let f_inv = Automorphism::from_map(&o, f.power(-1))?;
        let w1 = stabilizing(&o, &f_inv, &self.wse, self.w1);
        let blocks = self
            .blocks
            .into_iter()
            .map(|(g, p)| BlockSpec { a: stabilizing(&o, &f_inv, &g, p), whm_generators: g })
            .collect();
        Ok(NamedScenario {
            spec: ScenarioSpec {
                name: self.name.to_string(),
                degree: self.degree,
                generators: self.generators,
                wse_generators: self.wse,
                blocks,
                frobenius: self.frobenius,
                w1,
                character_tables: Vec::new(),
                coxeter_times_abelian: Some(true),
            },
            description: self.description.to_string(),
        })
    }
}

fn weyl(s: Series, n: usize) -> (usize, Vec<Perm>) {
    let rs = RootSystem::new(CartanType::new(s, n).unwrap());
    let gens = rs.simple_roots().into_iter().map(|r| rs.reflection(r)).collect();
    (rs.num_roots(), gens)
}

/// `Omega = W(F4)` of order 1152 with `W_se` of type B3 and `W_1` of type
/// A2 x A1, both parabolic; used for timing.
pub fn large_scenario() -> Result<NamedScenario> {
    use Pick::*;
    let (deg, f4) = weyl(Series::F, 4);
    Builder {
        name: "f4-large",
        description: "W(F4), W_se of type B3, W_1 of type A1 x A2",
        degree: deg,
        generators: f4.clone(),
        frobenius: f4.clone(),
        wse: vec![f4[0].clone(), f4[1].clone(), f4[2].clone()],
        w1: Identity,
        blocks: vec![(vec![f4[0].clone(), f4[2].clone(), f4[3].clone()], Identity)],
    }
    .build()
}

/// At least ten scenarios, each satisfying every invariant.
pub fn standard_scenarios() -> Result<Vec<NamedScenario>> {
    use Pick::*;
    let mut out = Vec::new();

    let e1 = Perm::identity(1);
    out.push(
        Builder {
            name: "trivial",
            description: "every group trivial",
            degree: 1,
            generators: vec![e1.clone()],
            frobenius: vec![e1.clone()],
            wse: vec![],
            w1: Identity,
            blocks: vec![(vec![], Identity)],
        }
        .build()?,
    );

    let s3 = vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[1, 2]])];
    out.push(
        Builder {
            name: "s3-whole",
            description: "Omega = W_se = W_1 = S3, F trivial",
            degree: 3,
            generators: s3.clone(),
            frobenius: s3.clone(),
            wse: s3.clone(),
            w1: Identity,
            blocks: vec![(s3.clone(), Identity)],
        }
        .build()?,
    );
    out.push(
        Builder {
            name: "s3-levi",
            description: "W_se = S3, W_1 generated by one transposition",
            degree: 3,
            generators: s3.clone(),
            frobenius: s3.clone(),
            wse: s3.clone(),
            w1: Identity,
            blocks: vec![(vec![s3[0].clone()], Identity)],
        }
        .build()?,
    );
    out.push(
        Builder {
            name: "s3-twisted",
            description: "S3 with F swapping the generators, W_se and W_1 of order two",
            degree: 3,
            generators: s3.clone(),
            frobenius: vec![s3[1].clone(), s3[0].clone()],
            wse: vec![s3[0].clone()],
            w1: Last,
            blocks: vec![(vec![s3[1].clone()], Last)],
        }
        .build()?,
    );

    let s4 = vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[1, 2]]), cyc(4, &[&[2, 3]])];
    out.push(
        Builder {
            name: "d1",
            description: "S4, W_se = <(0 1), (2 3)>, W_1 the normal Klein four group",
            degree: 4,
            generators: s4.clone(),
            frobenius: s4.clone(),
            wse: vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[2, 3]])],
            w1: Identity,
            blocks: vec![(vec![cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])], Identity)],
        }
        .build()?,
    );

    let d8 = vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])];
    out.push(
        Builder {
            name: "dihedral-8",
            description: "symmetries of a square, reflections through vertices and through edges",
            degree: 4,
            generators: d8.clone(),
            frobenius: d8.clone(),
            wse: vec![cyc(4, &[&[1, 3]])],
            w1: Identity,
            blocks: vec![(vec![cyc(4, &[&[0, 1], &[2, 3]])], Identity)],
        }
        .build()?,
    );

    let (deg, b2) = weyl(Series::B, 2);
    out.push(
        Builder {
            name: "b2-swap",
            description: "W(B2) with F exchanging the simple reflections, W_1 the centre",
            degree: deg,
            generators: b2.clone(),
            frobenius: vec![b2[1].clone(), b2[0].clone()],
            wse: b2.clone(),
            w1: Last,
            blocks: vec![(vec![b2[0].compose(&b2[1]).pow(2)], Last)],
        }
        .build()?,
    );

    let (deg, g2) = weyl(Series::G, 2);
    let g2_rot = g2[0].compose(&g2[1]);
    out.push(
        Builder {
            name: "g2-swap",
            description: "W(G2) with F exchanging the simple reflections, W_1 the rotations",
            degree: deg,
            generators: g2.clone(),
            frobenius: vec![g2[1].clone(), g2[0].clone()],
            wse: g2.clone(),
            w1: Last,
            blocks: vec![(vec![g2_rot.clone()], Last)],
        }
        .build()?,
    );

    let (deg, b3) = weyl(Series::B, 3);
    let conj: Vec<Perm> = b3.iter().map(|g| b3[0].conjugate_by(g)).collect();
    out.push(
        Builder {
            name: "b3-inner",
            description: "W(B3) with F conjugation by s0, W_se of type B2 and W_1 of type A1 x A1",
            degree: deg,
            generators: b3.clone(),
            frobenius: conj.clone(),
            wse: vec![b3[1].clone(), b3[2].clone()],
            w1: Last,
            blocks: vec![(vec![b3[0].clone(), b3[2].clone()], Last)],
        }
        .build()?,
    );
    out.push(
        Builder {
            name: "b3-two-blocks",
            description: "W(B3) with F conjugation by s0 and two blocks of types A2 and B2",
            degree: deg,
            generators: b3.clone(),
            frobenius: conj,
            wse: vec![b3[0].clone(), b3[1].clone()],
            w1: Last,
            blocks: vec![(vec![b3[0].clone(), b3[1].clone()], Last), (vec![b3[1].clone(), b3[2].clone()], Last)],
        }
        .build()?,
    );

    out.push(
        Builder {
            name: "s4-two-blocks",
            description: "S4, W_se = S3, blocks the Klein four group and a cyclic group of order four",
            degree: 4,
            generators: s4.clone(),
            frobenius: s4.clone(),
            wse: vec![s4[0].clone(), s4[1].clone()],
            w1: Identity,
            blocks: vec![
                (vec![cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])], Last),
                (vec![cyc(4, &[&[0, 1, 2, 3]])], Last),
            ],
        }
        .build()?,
    );

    let z3 = vec![cyc(3, &[&[0, 1, 2]])];
    out.push(
        Builder {
            name: "z3-inversion",
            description: "cyclic group of order three with F the inversion",
            degree: 3,
            generators: z3.clone(),
            frobenius: vec![z3[0].inverse()],
            wse: z3.clone(),
            w1: Last,
            blocks: vec![(vec![], Identity), (z3.clone(), Last)],
        }
        .build()?,
    );
    Ok(out)
}
