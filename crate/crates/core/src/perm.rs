//! Permutations and stabilizer chains.
//!
//! A [`Perm`] is an image array: `p.apply(i)` is the image of point `i`.
//! Products follow function composition, `(a * b)(i) = a(b(i))`, so a
//! permutation representation of a group is a homomorphism for this product.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use rand_chacha::rand_core::RngCore;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation);
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub fn from_usize(images: &[usize]) -> Result<Self> {
        Self::from_images(images.iter().map(|&x| x as u32).collect())
    }

    /// Builds a permutation from disjoint cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a >= degree || b >= degree {
                    return Err(Error::InvalidPermutation);
                }
                images[a] = b as u32;
            }
        }
        Self::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut ord: u64 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }

    /// `self^-1 * a * self`.
    pub fn conjugate_by(&self, a: &Perm) -> Perm {
        self.inverse().compose(a).compose(self)
    }
}

impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs)
    }
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// `transversal[x] = Some(u)` with `u(base) = x` for orbit points.
    transversal: Vec<Option<Perm>>,
    inverses: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverses = vec![None; degree];
        transversal[base] = Some(Perm::identity(degree));
        inverses[base] = Some(Perm::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            transversal,
            inverses,
            orbit: vec![base],
        }
    }
}

/// Base and strong generating set, built by the deterministic incremental
/// Schreier–Sims procedure.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

enum Task {
    Add(usize, Perm),
    Step(usize, Perm),
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        Self::with_base_prefix(degree, generators, &[])
    }

    /// Chain whose base starts with `prefix` (in that order).
    pub fn with_base_prefix(degree: usize, generators: &[Perm], prefix: &[usize]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        let mut tasks: Vec<Task> = Vec::new();
        for g in generators.iter().rev() {
            tasks.push(Task::Add(0, g.clone()));
        }
        while let Some(task) = tasks.pop() {
            match task {
                Task::Add(k, g) => chain.add_generator(k, g, &mut tasks),
                Task::Step(k, t) => chain.orbit_step(k, t, &mut tasks),
            }
        }
        chain
    }

    fn add_generator(&mut self, k: usize, g: Perm, tasks: &mut Vec<Task>) {
        if self.sift_from(k, &g).is_identity() {
            return;
        }
        if k == self.levels.len() {
            let b = g.first_moved().expect("non-identity");
            self.levels.push(Level::new(b, self.degree));
        }
        let level = &mut self.levels[k];
        level.gens.push(g.clone());
        for &x in &level.orbit {
            let u = level.transversal[x].as_ref().unwrap();
            tasks.push(Task::Step(k, g.compose(u)));
        }
    }

    fn orbit_step(&mut self, k: usize, t: Perm, tasks: &mut Vec<Task>) {
        let level = &mut self.levels[k];
        let j = t.apply(level.base);
        if let Some(uinv) = &level.inverses[j] {
            let schreier = uinv.compose(&t);
            if !schreier.is_identity() {
                tasks.push(Task::Add(k + 1, schreier));
            }
        } else {
            level.inverses[j] = Some(t.inverse());
            level.transversal[j] = Some(t.clone());
            level.orbit.push(j);
            for s in &level.gens {
                tasks.push(Task::Step(k, s.compose(&t)));
            }
        }
    }

    /// Strips `g` through levels `k..`; the residue is the identity iff `g`
    /// lies in the group stored at level `k`.
    fn sift_from(&self, k: usize, g: &Perm) -> Perm {
        let mut h = g.clone();
        for level in &self.levels[k..] {
            let x = h.apply(level.base);
            match &level.inverses[x] {
                Some(uinv) => h = uinv.compose(&h),
                None => return h,
            }
        }
        h
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift_from(0, g).is_identity()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.levels
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    /// Uniformly random element.
    pub fn random_element<R: RngCore>(&self, rng: &mut R) -> Perm {
        let mut g = Perm::identity(self.degree);
        for level in &self.levels {
            let x = level.orbit[(rng.next_u64() % level.orbit.len() as u64) as usize];
            g = g.compose(level.transversal[x].as_ref().unwrap());
        }
        g
    }

    /// Every group element, in the deterministic order induced by the chain.
    /// Refuses groups above `limit` elements.
    pub fn elements(&self, limit: u128) -> Result<Vec<Perm>> {
        let order = self.order();
        if order > limit {
            return Err(Error::GroupTooLarge { order, limit });
        }
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &x in &level.orbit {
                let u = level.transversal[x].as_ref().unwrap();
                for g in &out {
                    next.push(u.compose(g));
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Searches for an element mapping `src[i]` to `dst[i]` for every `i`,
    /// provided the chain base starts with `src`. The search walks the chain
    /// level by level; no enumeration of the group takes place.
    pub fn map_prefix(&self, src: &[usize], dst: &[usize]) -> Option<Perm> {
        if src.len() != dst.len() || self.levels.len() < src.len() {
            return None;
        }
        if self.levels.iter().zip(src).any(|(l, &b)| l.base != b) {
            return None;
        }
        // g = u_0 u_1 ... with u_k in level k; track the remaining targets
        // pulled back through the chosen prefix.
        let mut g = Perm::identity(self.degree);
        let mut ginv = Perm::identity(self.degree);
        for (k, &target) in dst.iter().enumerate() {
            let want = ginv.apply(target);
            let level = &self.levels[k];
            let u = level.transversal[want].as_ref()?;
            g = g.compose(u);
            ginv = level.inverses[want].as_ref().unwrap().compose(&ginv);
        }
        Some(g)
    }
}

/// A permutation group given by generators, with its stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: StabChain,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch);
        }
        let chain = StabChain::new(degree, &generators);
        Ok(PermGroup {
            degree,
            generators,
            chain,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: StabChain::new(degree, &[]),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain.contains(g)
    }

    pub fn elements(&self, limit: u128) -> Result<Vec<Perm>> {
        self.chain.elements(limit)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }
}

/// Orbit of `point` under `gens`, in breadth-first order.
pub fn orbit(point: usize, gens: &[Perm]) -> Vec<usize> {
    let n = gens.first().map(|g| g.degree()).unwrap_or(point + 1);
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut out = vec![point];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sym(n: usize) -> PermGroup {
        let mut cycle: Vec<usize> = (1..n).collect();
        cycle.push(0);
        let gens = vec![
            Perm::from_cycles(n, &[&[0, 1]]).unwrap(),
            Perm::from_usize(&cycle).unwrap(),
        ];
        PermGroup::new(n, gens).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        let mut f: u128 = 1;
        for n in 2..9 {
            f *= n as u128;
            assert_eq!(sym(n).order(), f);
        }
    }

    #[test]
    fn composition_is_function_composition() {
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let ab = &a * &b;
        assert_eq!(ab.apply(1), a.apply(b.apply(1)));
        assert_eq!(ab.apply(2), 0);
    }

    #[test]
    fn elements_are_distinct_and_complete() {
        let g = sym(5);
        let mut els = g.elements(1000).unwrap();
        assert_eq!(els.len(), 120);
        els.sort();
        els.dedup();
        assert_eq!(els.len(), 120);
        assert!(els.iter().all(|e| g.contains(e)));
    }

    #[test]
    fn membership_rejects_odd_permutations_in_alternating_group() {
        let gens = vec![
            Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
            Perm::from_cycles(5, &[&[2, 3, 4]]).unwrap(),
        ];
        let a5 = PermGroup::new(5, gens).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(!a5.contains(&Perm::from_cycles(5, &[&[0, 1]]).unwrap()));
        assert!(a5.contains(&Perm::from_cycles(5, &[&[0, 1], &[2, 3]]).unwrap()));
    }

    #[test]
    fn map_prefix_finds_tuple_images() {
        let g = sym(6);
        let chain = StabChain::with_base_prefix(6, g.generators(), &[3, 1]);
        let w = chain.map_prefix(&[3, 1], &[0, 5]).unwrap();
        assert_eq!(w.apply(3), 0);
        assert_eq!(w.apply(1), 5);
        assert!(chain.map_prefix(&[3, 1], &[2, 2]).is_none());
    }

    #[test]
    fn random_elements_are_members() {
        let g = sym(7);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            assert!(g.contains(&g.chain().random_element(&mut rng)));
        }
    }

    #[test]
    fn element_order() {
        let p = Perm::from_cycles(7, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
    }
}
