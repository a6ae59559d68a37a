//! Root systems in the simple-root basis, Dynkin diagrams, Weyl groups acting
//! on roots, and conjugacy of subsystems.

mod conjugacy;
mod diagram;
mod types;
mod weyl;

pub use conjugacy::{
    canonical_tuple, enumerate_subsets_of_type, levi_subsets_up_to_conjugacy,
    partition_into_classes, standard_orderings, subsystem_class_key, type_of_base, ClassKey,
    Conjugacy, SubdiagramClass,
};
pub use diagram::{extended_diagram, plain_diagram, Bond, Diagram};
pub use types::{CartanType, Component, Series, TypeDecomposition, TypePattern};
pub use weyl::{subsystems_conjugate, WeylGroup};

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::Result;
use crate::perm::Perm;

/// An irreducible crystallographic root system.
///
/// Roots are integer vectors in the basis of simple roots. Positive roots
/// come first, sorted by height and then by coordinates in decreasing
/// lexicographic order, so the simple roots occupy indices `0..rank` in
/// Bourbaki order. The negative of root `i` is root `i + npos`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    /// Squared lengths of the simple roots (short roots of B, C, F, G have 1).
    norms: Vec<i64>,
    /// Twice the invariant form on simple roots: `gram[i][j] = 2(a_i, a_j)`.
    gram: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    npos: usize,
    /// `pairing[x * n + y] = <root x, coroot y>`.
    pairing: Vec<i8>,
    root_norm2: Vec<i64>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank();
        let (norms, edges) = cartan_type.simple_data();
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            gram[i][i] = 2 * norms[i];
        }
        for &(i, j) in &edges {
            let v = -core::cmp::max(norms[i], norms[j]);
            gram[i][j] = v;
            gram[j][i] = v;
        }
        let simple: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v
            })
            .collect();
        let coroot_pair = |v: &[i64], i: usize| -> i64 {
            let b: i64 = (0..n).map(|j| v[j] * gram[j][i]).sum();
            b / norms[i]
        };
        // Reflection closure starting from the simple roots.
        let mut found: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for s in &simple {
            found.insert(s.clone(), ());
            queue.push_back(s.clone());
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..n {
                let c = coroot_pair(&v, i);
                let mut w = v.clone();
                w[i] -= c;
                if !found.contains_key(&w) {
                    found.insert(w.clone(), ());
                    queue.push_back(w);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = found
            .keys()
            .filter(|v| v.iter().all(|&x| x >= 0))
            .cloned()
            .collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = positive.len();
        debug_assert_eq!(found.len(), 2 * npos);
        let mut roots = positive.clone();
        roots.extend(
            positive
                .iter()
                .map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let bilinear = |x: &[i64], y: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                if x[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += x[i] * gram[i][j] * y[j];
                }
            }
            s
        };
        let root_norm2: Vec<i64> = roots.iter().map(|r| bilinear(r, r)).collect();
        let total = roots.len();
        let mut pairing = vec![0i8; total * total];
        for x in 0..total {
            for y in 0..total {
                let v = 2 * bilinear(&roots[x], &roots[y]) / root_norm2[y];
                pairing[x * total + y] = v as i8;
            }
        }
        RootSystem {
            cartan_type,
            norms,
            gram,
            roots,
            index,
            npos,
            pairing,
            root_norm2,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn simple_roots(&self) -> Vec<usize> {
        (0..self.rank()).collect()
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    pub fn highest_root(&self) -> usize {
        self.npos - 1
    }

    /// `<x, y^vee>` for root indices.
    #[inline]
    pub fn pairing(&self, x: usize, y: usize) -> i64 {
        self.pairing[x * self.roots.len() + y] as i64
    }

    /// Twice the squared length of a root.
    pub fn norm2(&self, i: usize) -> i64 {
        self.root_norm2[i]
    }

    pub fn simple_norms(&self) -> &[i64] {
        &self.norms
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Cartan matrix `C[i][j] = <a_i, a_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.pairing(i, j)).collect())
            .collect()
    }

    pub fn max_norm(&self) -> i64 {
        *self.root_norm2.iter().max().unwrap()
    }

    pub fn is_short(&self, i: usize) -> bool {
        self.root_norm2[i] < self.max_norm()
    }

    /// Root-space reflection `s_r` as a permutation of all roots.
    pub fn reflection(&self, r: usize) -> Perm {
        let total = self.roots.len();
        let images: Vec<u32> = (0..total)
            .map(|x| {
                let c = self.pairing(x, r);
                if c == 0 {
                    x as u32
                } else {
                    let v: Vec<i64> = self.roots[x]
                        .iter()
                        .zip(&self.roots[r])
                        .map(|(a, b)| a - c * b)
                        .collect();
                    self.index[&v] as u32
                }
            })
            .collect();
        Perm::from_images(images).expect("reflection permutes roots")
    }

    /// Index of `s_r(x)` without building the whole permutation.
    pub fn reflect(&self, r: usize, x: usize) -> usize {
        let c = self.pairing(x, r);
        if c == 0 {
            return x;
        }
        let v: Vec<i64> = self.roots[x]
            .iter()
            .zip(&self.roots[r])
            .map(|(a, b)| a - c * b)
            .collect();
        self.index[&v]
    }

    /// Closed subsystem generated by the given roots: their orbit under the
    /// reflections they define. Sorted root indices.
    pub fn generated_subsystem(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.roots.len()];
        let mut out: Vec<usize> = Vec::new();
        for &g in gens {
            for r in [g, self.negate(g)] {
                if !seen[r] {
                    seen[r] = true;
                    out.push(r);
                }
            }
        }
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.reflect(g, x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Weight-basis coordinates of a root: `<root, a_j^vee>` for each `j`.
    pub fn weight_coords(&self, i: usize) -> Vec<i64> {
        (0..self.rank()).map(|j| self.pairing(i, j)).collect()
    }

    /// Coefficients of the coroot of root `i` in the basis of simple coroots.
    pub fn coroot_coords(&self, i: usize) -> Vec<i64> {
        let r = &self.roots[i];
        let ni = self.root_norm2[i] / 2;
        (0..self.rank())
            .map(|j| r[j] * self.norms[j] / ni)
            .collect()
    }

    /// Automorphisms of the Dynkin diagram as permutations of simple roots,
    /// identity first.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let c = self.cartan_matrix();
        types::matrix_automorphisms(&c)
    }

    /// The root permutation induced by a diagram automorphism.
    pub fn diagram_automorphism_perm(&self, sigma: &[usize]) -> Perm {
        let n = self.rank();
        let images: Vec<u32> = self
            .roots
            .iter()
            .map(|r| {
                let mut v = vec![0i64; n];
                for i in 0..n {
                    v[sigma[i]] = r[i];
                }
                self.index[&v] as u32
            })
            .collect();
        Perm::from_images(images).expect("diagram automorphism permutes roots")
    }
}

/// Builds the root system of an irreducible Cartan type.
pub fn build_root_system(t: CartanType) -> Result<RootSystem> {
    let t = CartanType::new(t.series(), t.rank())?;
    Ok(RootSystem::new(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(s: Series, n: usize) -> usize {
        RootSystem::new(CartanType::new(s, n).unwrap()).num_roots()
    }

    #[test]
    fn root_counts() {
        assert_eq!(count(Series::A, 1), 2);
        assert_eq!(count(Series::A, 4), 20);
        assert_eq!(count(Series::B, 3), 18);
        assert_eq!(count(Series::C, 4), 32);
        assert_eq!(count(Series::D, 5), 40);
        assert_eq!(count(Series::G, 2), 12);
        assert_eq!(count(Series::F, 4), 48);
        assert_eq!(count(Series::E, 6), 72);
        assert_eq!(count(Series::E, 7), 126);
        assert_eq!(count(Series::E, 8), 240);
    }

    #[test]
    fn simple_roots_come_first_and_negation_is_an_offset() {
        let rs = RootSystem::new(CartanType::new(Series::E, 6).unwrap());
        for i in 0..6 {
            let mut v = vec![0; 6];
            v[i] = 1;
            assert_eq!(rs.index_of(&v), Some(i));
        }
        for i in 0..rs.num_roots() {
            let neg: Vec<i64> = rs.root(i).iter().map(|x| -x).collect();
            assert_eq!(rs.index_of(&neg), Some(rs.negate(i)));
        }
        assert_eq!(rs.root(rs.highest_root()), &[1, 2, 2, 3, 2, 1]);
    }

    #[test]
    fn g2_cartan_matrix_bourbaki() {
        let rs = RootSystem::new(CartanType::new(Series::G, 2).unwrap());
        assert_eq!(rs.cartan_matrix(), vec![vec![2, -1], vec![-3, 2]]);
        assert!(rs.is_short(0));
        assert!(!rs.is_short(1));
        assert_eq!(rs.root(rs.highest_root()), &[3, 2]);
    }

    #[test]
    fn b_and_c_have_expected_highest_roots() {
        let b = RootSystem::new(CartanType::new(Series::B, 3).unwrap());
        assert_eq!(b.root(b.highest_root()), &[1, 2, 2]);
        let c = RootSystem::new(CartanType::new(Series::C, 3).unwrap());
        assert_eq!(c.root(c.highest_root()), &[2, 2, 1]);
    }

    #[test]
    fn reflections_are_involutions() {
        let rs = RootSystem::new(CartanType::new(Series::F, 4).unwrap());
        for r in 0..rs.num_roots() {
            let s = rs.reflection(r);
            assert!(s.compose(&s).is_identity());
            assert_eq!(s.apply(r), rs.negate(r));
        }
    }

    #[test]
    fn generated_subsystem_of_simple_roots() {
        let rs = RootSystem::new(CartanType::new(Series::A, 3).unwrap());
        assert_eq!(rs.generated_subsystem(&[0, 1]).len(), 6);
        assert_eq!(rs.generated_subsystem(&[0, 2]).len(), 4);
    }
}
