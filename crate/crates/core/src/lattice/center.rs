use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;

use super::snf::{smith_normal_form, vec_mat, IntMatrix, Snf};
use super::{p_prime_part, FiniteAbelianGroup, RootDatum};
use crate::error::{Error, Result};
use crate::perm::{Perm, StabChain};
use crate::root_system::{standard_orderings, type_of_base, WeylGroup};

fn frac(x: Rational64) -> Rational64 {
    x - x.floor()
}

fn quotient_snf(g: &RootDatum, roots: &[usize]) -> Snf {
    let n = g.rank();
    let mut y: IntMatrix = roots.iter().map(|&r| g.root_x_coords(r)).collect();
    if y.is_empty() {
        y.push(vec![0; n]);
    }
    smith_normal_form(&y)
}

fn torsion(s: &Snf, p: u64) -> FiniteAbelianGroup {
    let orders: Vec<u64> = s
        .diagonal()
        .iter()
        .filter(|&&d| d > 1)
        .map(|&d| p_prime_part(d as u64, p))
        .collect();
    FiniteAbelianGroup::from_cyclic_orders(&orders)
}

/// `Z(L)/Z°(L)`: the prime-to-`p` torsion of `X / Z J` for the roots `J`
/// (normally a set of simple roots).
pub fn center_component_group(g: &RootDatum, levi: &[usize], p: u64) -> FiniteAbelianGroup {
    torsion(&quotient_snf(g, levi), p)
}

/// Generators of the prime-to-`p` torsion of `X / Z J` as weights in `X`,
/// with their orders. The quotient is the direct sum of the cyclic groups
/// they generate.
pub fn component_group_generators(g: &RootDatum, roots: &[usize], p: u64) -> Vec<(Vec<i64>, u64)> {
    let s = quotient_snf(g, roots);
    let mut out = Vec::new();
    for (i, &d) in s.diagonal().iter().enumerate() {
        if d <= 1 {
            continue;
        }
        let q = p_prime_part(d as u64, p);
        if q == 1 {
            continue;
        }
        let mult = d / q as i64;
        let e: Vec<i64> = s.v_inv[i].iter().map(|&x| x * mult).collect();
        out.push((vec_mat(&e, g.x_basis()), q));
    }
    out
}

/// `Z(H)` for the subgroup with full-rank root subsystem based on `psi`,
/// as the prime-to-`p` part of `X / Z psi`.
pub fn full_center(g: &RootDatum, psi: &[usize], p: u64) -> Result<FiniteAbelianGroup> {
    let s = quotient_snf(g, psi);
    if s.rank() < g.rank() {
        return Err(Error::NotFullRank);
    }
    Ok(torsion(&s, p))
}

/// An element `t` of `Hom(X, Q/Z)`, stored by its values on the basis of `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CenterElement {
    pub values: Vec<Rational64>,
}

impl CenterElement {
    pub fn order(&self) -> u64 {
        self.values
            .iter()
            .fold(1u64, |acc, v| acc.lcm(&(*v.denom() as u64)))
    }

    /// `t(lambda)` modulo 1 for a weight in `X`.
    pub fn eval(&self, g: &RootDatum, weight: &[i64]) -> Option<Rational64> {
        let y = g.x_coords(weight)?;
        let s = y
            .iter()
            .zip(&self.values)
            .fold(Rational64::zero(), |acc, (&k, &u)| acc + u * k);
        Some(frac(s))
    }

    /// Value on a root.
    pub fn on_root(&self, g: &RootDatum, r: usize) -> Rational64 {
        self.eval(g, &g.root_system().weight_coords(r))
            .expect("roots lie in X")
    }

    /// Central in `G`: trivial on every root.
    pub fn is_central_in(&self, g: &RootDatum) -> bool {
        (0..g.rank()).all(|i| self.on_root(g, i).is_zero())
    }

    /// `w . t = t o w^-1`.
    pub fn act(&self, g: &RootDatum, w: &Perm) -> CenterElement {
        let m = g.weight_action(&w.inverse());
        let values = g
            .x_basis()
            .iter()
            .map(|x| {
                let img: Vec<i64> = (0..x.len())
                    .map(|j| {
                        let v = x
                            .iter()
                            .enumerate()
                            .fold(Rational64::zero(), |acc, (i, &xi)| acc + m[i][j] * xi);
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect();
                self.eval(g, &img).expect("Weyl group preserves X")
            })
            .collect();
        CenterElement { values }
    }
}

impl fmt::Display for CenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Every element of the prime-to-`p` part of `Z(H)`, sorted by order and
/// then by values.
pub fn full_center_elements(g: &RootDatum, psi: &[usize], p: u64) -> Result<Vec<CenterElement>> {
    let s = quotient_snf(g, psi);
    let n = g.rank();
    if s.rank() < n {
        return Err(Error::NotFullRank);
    }
    let diag = s.diagonal();
    // u = V s with s_i in (1/d_i) Z.
    let mut out: Vec<Vec<Rational64>> = vec![vec![Rational64::zero(); n]];
    for i in 0..n {
        let d = diag[i];
        let step = d / p_prime_part(d as u64, p) as i64;
        let mut next = Vec::new();
        for u in &out {
            let mut a = 0;
            while a < d {
                let si = Rational64::new(a, d);
                let v: Vec<Rational64> = (0..n).map(|k| frac(u[k] + si * s.v[k][i])).collect();
                next.push(v);
                a += step;
            }
        }
        out = next;
    }
    let mut elems: Vec<CenterElement> = out
        .into_iter()
        .map(|values| CenterElement { values })
        .collect();
    elems.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
    elems.dedup();
    Ok(elems)
}

/// Elements of `Z(H)` outside `Z(G)`.
pub fn center_elements_outside_subcenter(
    g: &RootDatum,
    psi: &[usize],
    p: u64,
) -> Result<Vec<CenterElement>> {
    Ok(full_center_elements(g, psi, p)?
        .into_iter()
        .filter(|t| !t.is_central_in(g))
        .collect())
}

/// Representatives of `N_W(W_psi) / W_psi`: one Weyl element for each
/// permutation of the base `psi` that some Weyl element realizes. For
/// non-full-rank `psi` the representatives are taken modulo the pointwise
/// stabilizer, whose reflection generators are listed separately.
#[derive(Clone, Debug)]
pub struct Normalizer {
    /// The base of `psi` in standard order.
    pub base: Vec<usize>,
    /// Identity first; `elements[k]` maps `base` to `images[k]`.
    pub elements: Vec<Perm>,
    pub images: Vec<Vec<usize>>,
    /// Reflections in roots orthogonal to `psi`.
    pub pointwise: Vec<Perm>,
}

impl Normalizer {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// How element `k` permutes the irreducible components of `psi`,
    /// components numbered by their order of appearance in `base`.
    pub fn component_permutation(&self, w: &WeylGroup, k: usize) -> Vec<usize> {
        let rs = w.root_system();
        let comps = component_index(rs, &self.base);
        let img = &self.images[k];
        let ncomp = comps.iter().max().map_or(0, |m| m + 1);
        let mut out = vec![usize::MAX; ncomp];
        for (i, &c) in comps.iter().enumerate() {
            let pos = self
                .base
                .iter()
                .position(|&b| b == img[i])
                .expect("image inside base");
            out[c] = comps[pos];
        }
        out
    }
}

fn component_index(rs: &crate::root_system::RootSystem, base: &[usize]) -> Vec<usize> {
    let k = base.len();
    let mut comp = vec![usize::MAX; k];
    let mut next = 0;
    for s in 0..k {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..k {
                if comp[y] == usize::MAX && rs.pairing(base[x], base[y]) != 0 {
                    comp[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Normalizer of the reflection subgroup with base `psi` inside `w`.
pub fn normalizer_of_subsystem(w: &WeylGroup, psi: &[usize]) -> Result<Normalizer> {
    let rs = w.root_system();
    type_of_base(rs, psi)?;
    let orderings = standard_orderings(rs, psi);
    let base = orderings.first().cloned().unwrap_or_default();
    let chain = StabChain::with_base_prefix(rs.num_roots(), w.generators(), &base);
    let mut elements = Vec::new();
    let mut images = Vec::new();
    for o in &orderings {
        if let Some(g) = chain.map_prefix(&base, o) {
            elements.push(g);
            images.push(o.clone());
        }
    }
    if elements.is_empty() {
        elements.push(Perm::identity(rs.num_roots()));
        images.push(base.clone());
    }
    let pointwise: Vec<Perm> = (0..rs.num_positive())
        .filter(|&r| psi.iter().all(|&b| rs.pairing(r, b) == 0))
        .filter(|&r| w.contains(&rs.reflection(r)))
        .map(|r| rs.reflection(r))
        .collect();
    Ok(Normalizer {
        base,
        elements,
        images,
        pointwise,
    })
}

/// The action of `N_W(W_psi)/W_psi` on `Z(H)`.
#[derive(Clone, Debug)]
pub struct CenterAction {
    pub center: FiniteAbelianGroup,
    pub elements: Vec<CenterElement>,
    /// `central[i]` iff `elements[i]` lies in `Z(G)`.
    pub central: Vec<bool>,
    pub normalizer: Normalizer,
    /// `maps[k][i]` is the index of `normalizer.elements[k] . elements[i]`.
    pub maps: Vec<Vec<usize>>,
}

pub fn normalizer_center_action(
    g: &RootDatum,
    w: &WeylGroup,
    psi: &[usize],
    p: u64,
) -> Result<CenterAction> {
    let center = full_center(g, psi, p)?;
    let elements = full_center_elements(g, psi, p)?;
    let central = elements.iter().map(|t| t.is_central_in(g)).collect();
    let normalizer = normalizer_of_subsystem(w, psi)?;
    let mut maps = Vec::with_capacity(normalizer.len());
    for x in &normalizer.elements {
        let m: Vec<usize> = elements
            .iter()
            .map(|t| {
                let img = t.act(g, x);
                elements
                    .iter()
                    .position(|e| *e == img)
                    .ok_or_else(|| Error::Internal("normalizer does not preserve Z(H)".into()))
            })
            .collect::<Result<_>>()?;
        maps.push(m);
    }
    Ok(CenterAction {
        center,
        elements,
        central,
        normalizer,
        maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Isogeny;
    use crate::root_system::{CartanType, Series};
    use alloc::sync::Arc;

    fn datum(s: Series, n: usize, iso: Isogeny) -> RootDatum {
        RootDatum::from_type(CartanType::new(s, n).unwrap(), iso).unwrap()
    }

    #[test]
    fn levi_component_groups_in_e6() {
        let g = datum(Series::E, 6, Isogeny::SimplyConnected);
        assert!(center_component_group(&g, &[0, 2], 0).is_trivial());
        // a1,a3 and a5,a6: (A2)^2.
        assert_eq!(
            center_component_group(&g, &[0, 2, 4, 5], 0).invariant_factors(),
            &[3]
        );
        assert!(center_component_group(&g, &[0, 2, 4, 5], 3).is_trivial());
        assert!(center_component_group(&g, &[], 0).is_trivial());
    }

    #[test]
    fn whole_system_gives_fundamental_group() {
        for (s, n, k) in [(Series::A, 4, 5u64), (Series::D, 6, 4), (Series::E, 7, 2)] {
            let g = datum(s, n, Isogeny::SimplyConnected);
            let all: Vec<usize> = (0..n).collect();
            assert_eq!(full_center(&g, &all, 0).unwrap().order(), k);
            assert_eq!(full_center_elements(&g, &all, 0).unwrap().len() as u64, k);
            assert!(center_elements_outside_subcenter(&g, &all, 0)
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn b2_adjoint_long_a1_pair() {
        let g = datum(Series::B, 2, Isogeny::Adjoint);
        let rs = g.root_system().clone();
        // Long roots a1 and a1 + 2 a2.
        let other = rs.index_of(&[1, 2]).unwrap();
        assert_eq!(
            full_center(&g, &[0, other], 0).unwrap().invariant_factors(),
            &[2]
        );
    }

    #[test]
    fn not_full_rank_is_an_error() {
        let g = datum(Series::A, 3, Isogeny::SimplyConnected);
        assert_eq!(full_center(&g, &[0], 0), Err(Error::NotFullRank));
    }

    #[test]
    fn normalizer_action_preserves_center() {
        let g = datum(Series::E, 6, Isogeny::SimplyConnected);
        let rs = g.root_system().clone();
        let w = WeylGroup::new(Arc::clone(&rs));
        let theta = rs.negate(rs.highest_root());
        let psi = [0, 2, 4, 5, 1, theta];
        let act = normalizer_center_action(&g, &w, &psi, 0).unwrap();
        assert_eq!(act.elements.len(), 9);
        for m in &act.maps {
            for (i, &j) in m.iter().enumerate() {
                if act.central[i] {
                    assert_eq!(i, j);
                }
            }
        }
    }
}
