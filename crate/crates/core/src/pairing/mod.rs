//! Double-coset pairings between extended characters of `W_se` and of the
//! `W_j`, and the two formal expansions of `k(w_1 w)` over Green symbols.
//!
//! Green symbols are formal: `Q_(j,c)` stands for the function attached to
//! the `eta_j`-twisted class `c` of `W_j`, and `Q_(j,E')` for the one
//! attached to an extended character. The two bases are related by
//! `Q_(j,w') = sum_E' Tr(eta_j w', E') Q_(j,E')`.

mod examples;
mod scenario;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::twisted::{twisted_classes, TwistedClassPartition};

pub use examples::{large_scenario, standard_scenarios, NamedScenario};
pub use scenario::{Block, BlockSpec, Scenario, ScenarioSpec, Subgroup, SuppliedTable, TableTarget};

fn ratio(a: usize, b: usize) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Double cosets `W_se \ Omega / W_j`, each labelled by its least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosets {
    pub block: usize,
    pub representatives: Vec<usize>,
    pub cosets: Vec<Vec<usize>>,
}

/// Which basis a formal combination is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GreenBasis {
    /// `Q_(j,c)` for twisted classes `c` of `W_j`.
    TwistedClass,
    /// `Q_(j,E')` for extended characters `E'` of `W_j`.
    Character,
}

/// A formal linear combination of Green symbols; `coeffs[j][i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalGreenCombination {
    pub basis: GreenBasis,
    pub coeffs: Vec<Vec<Cyc>>,
}

impl FormalGreenCombination {
    fn zero(s: &Scenario, basis: GreenBasis) -> Self {
        let coeffs = s
            .blocks
            .iter()
            .map(|b| {
                let n = match basis {
                    GreenBasis::TwistedClass => b.chars.partition.len(),
                    GreenBasis::Character => b.chars.extensions.len(),
                };
                vec![Cyc::zero(); n]
            })
            .collect();
        FormalGreenCombination { basis, coeffs }
    }

    fn add(&mut self, j: usize, i: usize, c: &Cyc) {
        self.coeffs[j][i] = &self.coeffs[j][i] + c;
    }

    fn add_scaled(&mut self, other: &Self, c: &Cyc) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            for (x, y) in a.iter_mut().zip(b) {
                *x = &*x + &(y * c);
            }
        }
    }

    fn scale(&mut self, q: &BigRational) {
        for x in self.coeffs.iter_mut().flatten() {
            *x = x.scale(q);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Cyc::is_zero)
    }

    /// Rewrites a class-basis combination in the character basis.
    pub fn to_character_basis(&self, s: &Scenario) -> Self {
        if self.basis == GreenBasis::Character {
            return self.clone();
        }
        let mut out = Self::zero(s, GreenBasis::Character);
        for (j, b) in s.blocks.iter().enumerate() {
            for (c, q) in self.coeffs[j].iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                for (e, ext) in b.chars.extensions.iter().enumerate() {
                    out.add(j, e, &(q * &ext.values[c]));
                }
            }
        }
        out
    }
}

/// Normalizations tried for the double-coset expansion of `k(w_1 w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prefactor {
    /// `|Z_gamma1(w)|` in `W_se`.
    GammaCentralizer,
    /// `|{x in W_j : eta_j(x) w x^-1 = w}|`, computed inside `Omega`.
    EtaCentralizer,
    /// `|Z_{F^-1}(w_1 w)| / |W_j|`, the factor of the class expansion.
    FInverseOverBlock,
}

impl Prefactor {
    pub const ALL: [Prefactor; 3] = [Prefactor::GammaCentralizer, Prefactor::EtaCentralizer, Prefactor::FInverseOverBlock];

    pub fn name(self) -> &'static str {
        match self {
            Prefactor::GammaCentralizer => "gamma1-centralizer",
            Prefactor::EtaCentralizer => "eta-centralizer",
            Prefactor::FInverseOverBlock => "f-inverse-over-block",
        }
    }
}

/// Whether the `W_se` factor is conjugated in the pairing and in the
/// average expressing `chi_{A_E}` through `k(w_1 w)`.
///
/// `Printed` uses `Tr(gamma_1 w, E) Tr(eta_j w', E')` throughout. It inverts
/// `k(w_1 w) = sum_E Tr(gamma_1 w, E) chi_{A_E}` only when the extended
/// characters of `W_se` are real valued. `Hermitian` conjugates the first
/// factor and inverts it always. The two agree on real tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Printed,
    Hermitian,
}

/// Pairing values `<E, E'>` summed over double cosets, plus each summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    /// `total[j][E][E']`.
    pub total: Vec<Vec<Vec<Cyc>>>,
    /// `per_coset[j][nu][E][E']`.
    pub per_coset: Vec<Vec<Vec<Vec<Cyc>>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefactorResult {
    pub prefactor: Prefactor,
    /// The double-coset expansion equals the class expansion for every `w`.
    pub matches_class_expansion: bool,
    /// Averaging against `Tr(gamma_1 w, E)` reproduces the pairing expansion.
    pub matches_pairing_expansion: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub scenario: String,
    pub checks: Vec<CheckResult>,
    pub prefactors: Vec<PrefactorResult>,
    /// Every extended character of `W_se` is real valued.
    pub real_wse_table: bool,
    /// The round trip also holds with the unconjugated average.
    pub printed_round_trip: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Number of random representative re-choices in [`Engine::verify_all`].
pub const RECHOICES: usize = 100;

/// Precomputed data for a validated scenario.
pub struct Engine<'a> {
    pub s: &'a Scenario,
    f_inv_classes: TwistedClassPartition,
    cosets: Vec<DoubleCosets>,
}

impl<'a> Engine<'a> {
    pub fn new(s: &'a Scenario) -> Self {
        let f_inv_classes = twisted_classes(&s.omega, &s.f_inv);
        let cosets = (0..s.blocks.len()).map(|j| double_cosets(s, j)).collect();
        Engine { s, f_inv_classes, cosets }
    }

    pub fn double_cosets(&self, j: usize) -> &DoubleCosets {
        &self.cosets[j]
    }

    /// `W(nu) = w_1 W_se  ∩  F^-1(w_nu) a_j W_j w_nu^-1`, sorted.
    pub fn w_nu(&self, j: usize, w_nu: usize) -> Vec<usize> {
        let s = self.s;
        let o = &s.omega;
        let b = &s.blocks[j];
        let left = o.mul(s.f_inv.apply(w_nu), b.a);
        let right = o.inv(w_nu);
        let mut out: Vec<usize> = b
            .whm
            .to_omega
            .iter()
            .map(|&z| o.mul(o.mul(left, z), right))
            .filter(|&x| s.wse.contains(o.mul(o.inv(s.w1), x)))
            .collect();
        out.sort_unstable();
        out
    }

    /// `lambda(wbar) = eta_j^-1(a_j^-1 F^-1(w_nu^-1) wbar w_nu)`, local in `W_j`.
    pub fn lambda(&self, j: usize, w_nu: usize, wbar: usize) -> Result<usize> {
        let s = self.s;
        let o = &s.omega;
        let b = &s.blocks[j];
        let x = o.mul(o.mul(o.mul(o.inv(b.a), s.f_inv.apply(o.inv(w_nu))), wbar), w_nu);
        let local = b.whm.from_omega[x].ok_or_else(|| Error::Internal("lambda leaves W_j".into()))?;
        let inv = b.eta.power(-1);
        Ok(inv[local])
    }

    /// `kappa(wbar) = gamma_1^-1(w_1^-1 wbar)`, local in `W_se`.
    pub fn kappa(&self, wbar: usize) -> Result<usize> {
        let s = self.s;
        let x = s.omega.mul(s.omega.inv(s.w1), wbar);
        let local = s.wse.from_omega[x].ok_or_else(|| Error::Internal("kappa leaves W_se".into()))?;
        Ok(s.gamma1.power(-1)[local])
    }

    /// `<E, E'>_nu` for extension indices `e` of `W_se` and `f` of `W_j`.
    pub fn pairing(&self, j: usize, w_nu: usize, e: usize, f: usize) -> Result<Cyc> {
        self.pairing_in(Convention::Printed, j, w_nu, e, f)
    }

    pub fn pairing_in(&self, conv: Convention, j: usize, w_nu: usize, e: usize, f: usize) -> Result<Cyc> {
        let wn = self.w_nu(j, w_nu);
        if wn.is_empty() {
            return Ok(Cyc::zero());
        }
        let g_inv = self.s.gamma1.power(-1);
        let e_inv = self.s.blocks[j].eta.power(-1);
        self.pairing_on(conv, j, w_nu, &wn, &g_inv, &e_inv, e, f)
    }

    #[allow(clippy::too_many_arguments)]
    fn pairing_on(&self, conv: Convention, j: usize, w_nu: usize, wn: &[usize], g_inv: &[usize], e_inv: &[usize], e: usize, f: usize) -> Result<Cyc> {
        let s = self.s;
        let o = &s.omega;
        let b = &s.blocks[j];
        let w1i = o.inv(s.w1);
        let pre = o.mul(o.inv(b.a), s.f_inv.apply(o.inv(w_nu)));
        let mut sum = Cyc::zero();
        for &wbar in wn {
            let k = g_inv[s.wse.local(o.mul(w1i, wbar))];
            let l = b.whm.from_omega[o.mul(o.mul(pre, wbar), w_nu)]
                .map(|x| e_inv[x])
                .ok_or_else(|| Error::Internal("lambda leaves W_j".into()))?;
            let x = s.wse_chars.coset_value(e, k);
            let x = match conv {
                Convention::Printed => x.clone(),
                Convention::Hermitian => x.conj(),
            };
            sum = &sum + &(&x * b.chars.coset_value(f, l));
        }
        Ok(sum.scale(&ratio(1, wn.len())))
    }

    fn matrix_with(&self, conv: Convention, reps: &[Vec<usize>]) -> Result<PairingMatrix> {
        let s = self.s;
        let g_inv = s.gamma1.power(-1);
        let ne = s.wse_chars.extensions.len();
        let mut total = Vec::new();
        let mut per_coset = Vec::new();
        for (j, b) in s.blocks.iter().enumerate() {
            let nf = b.chars.extensions.len();
            let e_inv = b.eta.power(-1);
            let mut tj = vec![vec![Cyc::zero(); nf]; ne];
            let mut pj = Vec::new();
            for &w_nu in &reps[j] {
                let wn = self.w_nu(j, w_nu);
                let mut m = vec![vec![Cyc::zero(); nf]; ne];
                if !wn.is_empty() {
                    for (e, row) in m.iter_mut().enumerate() {
                        for (f, x) in row.iter_mut().enumerate() {
                            *x = self.pairing_on(conv, j, w_nu, &wn, &g_inv, &e_inv, e, f)?;
                            tj[e][f] = &tj[e][f] + x;
                        }
                    }
                }
                pj.push(m);
            }
            total.push(tj);
            per_coset.push(pj);
        }
        Ok(PairingMatrix { total, per_coset })
    }

    /// All pairings at the canonical representatives.
    pub fn pairing_matrix(&self, conv: Convention) -> Result<PairingMatrix> {
        let reps: Vec<Vec<usize>> = self.cosets.iter().map(|d| d.representatives.clone()).collect();
        self.matrix_with(conv, &reps)
    }

    /// The expansion of `chi_{A_E}`: coefficient of `Q_(j,E')` is
    /// `sum_nu <E, E'>_nu`.
    pub fn expand_characteristic(&self, conv: Convention, e: usize) -> Result<FormalGreenCombination> {
        let m = self.pairing_matrix(conv)?;
        Ok(self.expansion_from(&m, e))
    }

    fn expansion_from(&self, m: &PairingMatrix, e: usize) -> FormalGreenCombination {
        FormalGreenCombination { basis: GreenBasis::Character, coeffs: m.total.iter().map(|t| t[e].clone()).collect() }
    }

    /// `k(w_1 w)` as a sum over the `W_j`, in the class basis. `w` is a
    /// local index of `W_se`.
    pub fn k_formal_mw(&self, w: usize) -> FormalGreenCombination {
        let s = self.s;
        let o = &s.omega;
        let mut out = FormalGreenCombination::zero(s, GreenBasis::TwistedClass);
        let target = o.mul(s.w1, s.wse.to_omega[w]);
        let tc = self.f_inv_classes.class_of[target];
        let z = o.order() / self.f_inv_classes.classes[tc].len();
        for (j, b) in s.blocks.iter().enumerate() {
            let coeff = Cyc::from_rational(ratio(z, b.whm.order()));
            for (lw, &wp) in b.whm.to_omega.iter().enumerate() {
                if self.f_inv_classes.class_of[o.mul(b.a, wp)] == tc {
                    out.add(j, b.chars.partition.class_of[lw], &coeff);
                }
            }
        }
        out
    }

    fn prefactor(&self, p: Prefactor, j: usize, w: usize) -> usize {
        let s = self.s;
        let o = &s.omega;
        match p {
            Prefactor::GammaCentralizer => {
                let g = &s.gamma1;
                let wse = &s.wse.group;
                (0..wse.order()).filter(|&x| wse.mul(wse.mul(g.apply(x), w), wse.inv(x)) == w).count()
            }
            Prefactor::EtaCentralizer => {
                let b = &s.blocks[j];
                let wo = s.wse.to_omega[w];
                let ai = o.inv(b.a);
                b.whm
                    .to_omega
                    .iter()
                    .filter(|&&x| {
                        let ex = o.mul(o.mul(ai, s.f_inv.apply(x)), b.a);
                        o.mul(o.mul(ex, wo), o.inv(x)) == wo
                    })
                    .count()
            }
            Prefactor::FInverseOverBlock => unreachable!(),
        }
    }

    /// `k(w_1 w)` from the double-coset decomposition with the given
    /// normalization, in the class basis.
    pub fn k_formal_dc(&self, w: usize, p: Prefactor) -> Result<FormalGreenCombination> {
        let s = self.s;
        let mut out = FormalGreenCombination::zero(s, GreenBasis::TwistedClass);
        let wclass = s.wse_chars.partition.class_of[w];
        for (j, b) in s.blocks.iter().enumerate() {
            let pref = match p {
                Prefactor::FInverseOverBlock => {
                    let o = &s.omega;
                    let tc = self.f_inv_classes.class_of[o.mul(s.w1, s.wse.to_omega[w])];
                    ratio(o.order() / self.f_inv_classes.classes[tc].len(), b.whm.order())
                }
                _ => ratio(self.prefactor(p, j, w), 1),
            };
            for &w_nu in &self.cosets[j].representatives {
                let wn = self.w_nu(j, w_nu);
                if wn.is_empty() {
                    continue;
                }
                let c = Cyc::from_rational(&pref * &ratio(1, wn.len()));
                for &wbar in &wn {
                    if s.wse_chars.partition.class_of[self.kappa(wbar)?] == wclass {
                        let l = self.lambda(j, w_nu, wbar)?;
                        out.add(j, b.chars.partition.class_of[l], &c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Lemma on fibre sizes: for every `t` in a double coset `nu`, the number
    /// of `(y, z)` with `y w_nu z = w_1^-1 F^-1(t) a_j` equals `|W(nu)|`.
    pub fn verify_fibres(&self) -> core::result::Result<(), String> {
        let s = self.s;
        let o = &s.omega;
        let w1i = o.inv(s.w1);
        for (j, b) in s.blocks.iter().enumerate() {
            let d = &self.cosets[j];
            for (nu, coset) in d.cosets.iter().enumerate() {
                let w_nu = d.representatives[nu];
                let size = self.w_nu(j, w_nu).len();
                for &t in coset {
                    let target = o.mul(o.mul(w1i, s.f_inv.apply(t)), b.a);
                    let mut count = 0;
                    for &y in &s.wse.to_omega {
                        let yw = o.mul(y, w_nu);
                        let z = o.mul(o.inv(yw), target);
                        if b.whm.contains(z) {
                            count += 1;
                        }
                    }
                    if count != size {
                        return Err(format!("block {j}, coset {nu}, t = {t}: {count} pairs but |W(nu)| = {size}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Runs every check. `seed` drives the representative re-choices.
    pub fn verify_all(&self, seed: u64) -> Result<VerificationReport> {
        let s = self.s;
        let mut checks = Vec::new();
        let mut push = |name: &str, r: core::result::Result<(), String>| {
            let (passed, detail) = match r {
                Ok(()) => (true, String::new()),
                Err(e) => (false, e),
            };
            checks.push(CheckResult { name: name.into(), passed, detail });
        };

        let mut twisted = s.wse_chars.verify().map_err(|e| format!("W_se: {e}"));
        for (j, b) in s.blocks.iter().enumerate() {
            if twisted.is_ok() {
                twisted = b.chars.verify().map_err(|e| format!("W_{j}: {e}"));
            }
        }
        push("extended-characters", twisted);

        let partition = (|| {
            for (j, d) in self.cosets.iter().enumerate() {
                let total: usize = d.cosets.iter().map(Vec::len).sum();
                if total != s.omega.order() {
                    return Err(format!("block {j}: double cosets cover {total} of {}", s.omega.order()));
                }
            }
            Ok(())
        })();
        push("double-cosets", partition);
        push("fibre-sizes", self.verify_fibres());

        let nw = s.wse.order();
        let mut mw = Vec::with_capacity(nw);
        for w in 0..nw {
            mw.push(self.k_formal_mw(w));
        }
        let mut dc = Vec::new();
        for p in Prefactor::ALL {
            let mut v = Vec::with_capacity(nw);
            for w in 0..nw {
                v.push(self.k_formal_dc(w, p)?);
            }
            dc.push((p, v));
        }
        let lemma = match mw.iter().zip(&dc[0].1).position(|(a, b)| a != b) {
            None => Ok(()),
            Some(w) => Err(format!("class and double-coset expansions differ at w = {w}")),
        };
        push("class-vs-double-coset", lemma);

        let m = self.pairing_matrix(Convention::Hermitian)?;
        let ne = s.wse_chars.extensions.len();
        let expansions: Vec<_> = (0..ne).map(|e| self.expansion_from(&m, e)).collect();
        let mw_chars: Vec<_> = mw.iter().map(|k| k.to_character_basis(s)).collect();
        let averaged_in = |conv: Convention, ks: &[FormalGreenCombination], e: usize| {
            let mut acc = FormalGreenCombination::zero(s, GreenBasis::Character);
            for (w, k) in ks.iter().enumerate() {
                let x = &s.wse_chars.extensions[e].values[s.wse_chars.partition.class_of[w]];
                let x = match conv {
                    Convention::Printed => x.clone(),
                    Convention::Hermitian => x.conj(),
                };
                acc.add_scaled(k, &x);
            }
            acc.scale(&ratio(1, nw));
            acc
        };
        let averaged = |ks: &[FormalGreenCombination], e: usize| averaged_in(Convention::Hermitian, ks, e);
        let thm = (0..ne).find(|&e| averaged(&mw_chars, e) != expansions[e]);
        push(
            "average-equals-pairing",
            match thm {
                None => Ok(()),
                Some(e) => Err(format!("extended character {e}")),
            },
        );
        let reconstruct = |exps: &[FormalGreenCombination]| {
            for (w, k) in mw_chars.iter().enumerate() {
                let mut acc = FormalGreenCombination::zero(s, GreenBasis::Character);
                for (e, x) in exps.iter().enumerate() {
                    acc.add_scaled(x, &s.wse_chars.extensions[e].values[s.wse_chars.partition.class_of[w]]);
                }
                if &acc != k {
                    return Err(format!("w = {w}"));
                }
            }
            Ok(())
        };
        push("pairing-reconstructs-k", reconstruct(&expansions));
        let printed = self.pairing_matrix(Convention::Printed)?;
        let printed_exp: Vec<_> = (0..ne).map(|e| self.expansion_from(&printed, e)).collect();
        let printed_round_trip = (0..ne).all(|e| averaged_in(Convention::Printed, &mw_chars, e) == printed_exp[e])
            && reconstruct(&printed_exp).is_ok();
        let real_wse_table = s.wse_chars.extensions.iter().flat_map(|e| &e.values).all(|v| v == &v.conj());

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let o = &s.omega;
        let rechoice = (|| {
            for round in 0..RECHOICES {
                let reps: Vec<Vec<usize>> = self
                    .cosets
                    .iter()
                    .enumerate()
                    .map(|(j, d)| {
                        let b = &s.blocks[j];
                        d.representatives
                            .iter()
                            .map(|&w| {
                                let y = s.wse.to_omega[(rng.next_u64() % nw as u64) as usize];
                                let v = b.whm.to_omega[(rng.next_u64() % b.whm.order() as u64) as usize];
                                o.mul(o.mul(y, w), v)
                            })
                            .collect()
                    })
                    .collect();
                let m2 = self.matrix_with(Convention::Hermitian, &reps).map_err(|e| format!("{e}"))?;
                let p2 = self.matrix_with(Convention::Printed, &reps).map_err(|e| format!("{e}"))?;
                if m2 != m || p2 != printed {
                    return Err(format!("round {round}: pairings changed"));
                }
            }
            Ok(())
        })();
        push("representative-independence", rechoice);

        let prefactors = dc
            .iter()
            .map(|(p, v)| {
                let vc: Vec<_> = v.iter().map(|k| k.to_character_basis(s)).collect();
                PrefactorResult {
                    prefactor: *p,
                    matches_class_expansion: v == &mw,
                    matches_pairing_expansion: (0..ne).all(|e| averaged(&vc, e) == expansions[e]),
                }
            })
            .collect();

        Ok(VerificationReport { scenario: s.name.clone(), checks, prefactors, real_wse_table, printed_round_trip })
    }
}

/// `W_se \ Omega / W_j`, each coset sorted, ordered by least element.
pub fn double_cosets(s: &Scenario, j: usize) -> DoubleCosets {
    let o = &s.omega;
    let b = &s.blocks[j];
    let mut seen = vec![false; o.order()];
    let mut representatives = Vec::new();
    let mut cosets = Vec::new();
    for x in 0..o.order() {
        if seen[x] {
            continue;
        }
        let mut c = Vec::new();
        for &y in &s.wse.to_omega {
            let yx = o.mul(y, x);
            for &z in &b.whm.to_omega {
                let e = o.mul(yx, z);
                if !seen[e] {
                    seen[e] = true;
                    c.push(e);
                }
            }
        }
        c.sort_unstable();
        representatives.push(x);
        cosets.push(c);
    }
    DoubleCosets { block: j, representatives, cosets }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(name: &str) -> Scenario {
        let n = standard_scenarios().unwrap().into_iter().find(|n| n.spec.name == name).unwrap();
        Scenario::validate(&n.spec).unwrap()
    }

    #[test]
    fn levi_in_s3_has_one_double_coset() {
        let s = named("s3-levi");
        let d = double_cosets(&s, 0);
        assert_eq!(d.representatives, vec![0]);
        assert_eq!(d.cosets[0].len(), 6);
    }

    #[test]
    fn class_basis_of_identity_maps_to_degrees() {
        let s = named("s3-whole");
        let mut q = FormalGreenCombination::zero(&s, GreenBasis::TwistedClass);
        let c = s.blocks[0].chars.partition.class_of[0];
        q.add(0, c, &Cyc::one());
        let degrees: Vec<Cyc> = s.blocks[0].chars.extensions.iter().map(|e| e.values[c].clone()).collect();
        assert_eq!(q.to_character_basis(&s).coeffs[0], degrees);
    }

    #[test]
    fn kappa_and_lambda_land_in_their_groups() {
        let s = named("b3-inner");
        let e = Engine::new(&s);
        for &w in &e.double_cosets(0).representatives {
            for wbar in e.w_nu(0, w) {
                assert!(e.kappa(wbar).is_ok());
                assert!(e.lambda(0, w, wbar).is_ok());
            }
        }
    }

    #[test]
    fn conventions_agree_on_real_tables() {
        let s = named("d1");
        let e = Engine::new(&s);
        assert_eq!(e.pairing_matrix(Convention::Printed).unwrap(), e.pairing_matrix(Convention::Hermitian).unwrap());
    }
}
