//! Scenario data: the relative Weyl group `Omega`, the subgroup `W_se`, the
//! blocks `(W_j, a_j)`, the Frobenius action `F` on `Omega` and `w_1`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::group::IndexedGroup;
use crate::perm::Perm;
use crate::twisted::{Automorphism, CharacterTable, TwistedCharacters};

/// Which group a supplied character table belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableTarget {
    Wse,
    Block(usize),
}

/// A character table given in the scenario instead of being computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuppliedTable {
    pub target: TableTarget,
    pub class_representatives: Vec<Perm>,
    /// `values[i][c]` for character `i` on the class of representative `c`.
    pub values: Vec<Vec<Cyc>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    pub whm_generators: Vec<Perm>,
    pub a: Perm,
}

/// Unvalidated scenario, as read from a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub wse_generators: Vec<Perm>,
    pub blocks: Vec<BlockSpec>,
    /// Images of `generators` under `F`.
    pub frobenius: Vec<Perm>,
    pub w1: Perm,
    pub character_tables: Vec<SuppliedTable>,
    /// Whether the user asserts `W_se` is a Coxeter group extended by a
    /// finite abelian group. Recorded, never checked.
    pub coxeter_times_abelian: Option<bool>,
}

/// A subgroup of `Omega` with its own multiplication table.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: IndexedGroup,
    /// Index in `Omega` of each local element.
    pub to_omega: Vec<usize>,
    /// Local index of each element of `Omega`, if it lies in the subgroup.
    pub from_omega: Vec<Option<usize>>,
}

impl Subgroup {
    fn new(omega: &IndexedGroup, degree: usize, gens: &[Perm], what: &str) -> Result<Self> {
        for g in gens {
            if g.degree() != degree || omega.index_of(g).is_none() {
                return Err(Error::Validation(format!("{what}-not-in-omega")));
            }
        }
        let group = if gens.is_empty() {
            IndexedGroup::from_elements(vec![Perm::identity(degree)])?
        } else {
            IndexedGroup::generate(degree, gens)?
        };
        let to_omega: Vec<usize> = group.elements().iter().map(|p| omega.index_of(p).unwrap()).collect();
        let mut from_omega = vec![None; omega.order()];
        for (i, &o) in to_omega.iter().enumerate() {
            from_omega[o] = Some(i);
        }
        Ok(Subgroup { group, to_omega, from_omega })
    }

    pub fn order(&self) -> usize {
        self.to_omega.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.from_omega[x].is_some()
    }

    pub fn local(&self, x: usize) -> usize {
        self.from_omega[x].expect("element of the subgroup")
    }

    /// The automorphism `x -> f(x)` of the subgroup, or `None` if `f` does
    /// not preserve it.
    fn restrict(&self, f: impl Fn(usize) -> usize) -> Option<Vec<usize>> {
        self.to_omega.iter().map(|&x| self.from_omega[f(x)]).collect()
    }
}

/// One block `j`: `W_j = W^H_{M_j}` inside `Omega`, `a_j`, and `eta_j`.
#[derive(Clone, Debug)]
pub struct Block {
    pub whm: Subgroup,
    pub a: usize,
    /// `eta_j(w) = a_j^-1 F^-1(w) a_j`, on local indices.
    pub eta: Automorphism,
    pub chars: TwistedCharacters,
}

/// A validated scenario. Elements are indices into `omega`.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub omega: IndexedGroup,
    pub f: Automorphism,
    pub f_inv: Automorphism,
    pub w1: usize,
    pub wse: Subgroup,
    /// `gamma_1(w) = w_1^-1 F^-1(w) w_1`, on local indices.
    pub gamma1: Automorphism,
    pub wse_chars: TwistedCharacters,
    pub blocks: Vec<Block>,
    pub coxeter_times_abelian: Option<bool>,
    pub supplied_tables: usize,
}

fn supplied(
    spec: &ScenarioSpec,
    target: TableTarget,
    sub: &Subgroup,
) -> Result<Option<CharacterTable>> {
    let Some(t) = spec.character_tables.iter().find(|t| t.target == target) else {
        return Ok(None);
    };
    let reps = t
        .class_representatives
        .iter()
        .map(|p| sub.group.index_of(p).ok_or_else(|| Error::BadCharacterTable("representative not in the group".into())))
        .collect::<Result<Vec<_>>>()?;
    CharacterTable::from_supplied(&sub.group, &reps, t.values.clone()).map(Some)
}

impl Scenario {
    /// Checks every invariant and materializes `gamma_1`, the `eta_j` and
    /// the extended characters.
    pub fn validate(spec: &ScenarioSpec) -> Result<Self> {
        let d = spec.degree;
        let all = spec
            .generators
            .iter()
            .chain(&spec.wse_generators)
            .chain(&spec.frobenius)
            .chain(core::iter::once(&spec.w1))
            .chain(spec.blocks.iter().flat_map(|b| b.whm_generators.iter().chain(core::iter::once(&b.a))));
        for p in all {
            if p.degree() != d {
                return Err(Error::Validation("degree-mismatch".into()));
            }
        }
        let omega = if spec.generators.is_empty() {
            IndexedGroup::from_elements(vec![Perm::identity(d)])?
        } else {
            IndexedGroup::generate(d, &spec.generators)?
        };
        let f = Automorphism::from_generator_images(&omega, &spec.generators, &spec.frobenius)
            .map_err(|_| Error::Validation("frobenius-not-automorphism".into()))?;
        let mut inv = vec![0; omega.order()];
        for (x, &y) in f.map().iter().enumerate() {
            inv[y] = x;
        }
        let f_inv = Automorphism::from_map(&omega, inv)?;
        let w1 = omega.index_of(&spec.w1).ok_or_else(|| Error::Validation("w1-not-in-omega".into()))?;
        let wse = Subgroup::new(&omega, d, &spec.wse_generators, "wse")?;
        let w1i = omega.inv(w1);
        let gmap = wse
            .restrict(|x| omega.mul(omega.mul(w1i, f_inv.apply(x)), w1))
            .ok_or_else(|| Error::Validation("gamma1-undefined".into()))?;
        let gamma1 = Automorphism::from_map(&wse.group, gmap)?;
        let wse_chars = match supplied(spec, TableTarget::Wse, &wse)? {
            Some(t) => TwistedCharacters::with_table(&wse.group, &gamma1, t)?,
            None => TwistedCharacters::compute(&wse.group, &gamma1)?,
        };
        let mut blocks = Vec::with_capacity(spec.blocks.len());
        for (j, b) in spec.blocks.iter().enumerate() {
            let whm = Subgroup::new(&omega, d, &b.whm_generators, &format!("whm{j}"))?;
            let a = omega.index_of(&b.a).ok_or_else(|| Error::Validation(format!("a{j}-not-in-omega")))?;
            let ai = omega.inv(a);
            let emap = whm
                .restrict(|x| omega.mul(omega.mul(ai, f_inv.apply(x)), a))
                .ok_or_else(|| Error::Validation(format!("eta{j}-undefined")))?;
            let eta = Automorphism::from_map(&whm.group, emap)?;
            let chars = match supplied(spec, TableTarget::Block(j), &whm)? {
                Some(t) => TwistedCharacters::with_table(&whm.group, &eta, t)?,
                None => TwistedCharacters::compute(&whm.group, &eta)?,
            };
            blocks.push(Block { whm, a, eta, chars });
        }
        Ok(Scenario {
            name: spec.name.clone(),
            omega,
            f,
            f_inv,
            w1,
            wse,
            gamma1,
            wse_chars,
            blocks,
            coxeter_times_abelian: spec.coxeter_times_abelian,
            supplied_tables: spec.character_tables.len(),
        })
    }
}
