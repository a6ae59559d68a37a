use alloc::sync::Arc;
use alloc::vec::Vec;

use rand_chacha::rand_core::RngCore;

use super::conjugacy::{for_each_standard_ordering, type_of_base};
use super::RootSystem;
use crate::perm::{Perm, StabChain};

/// A reflection group acting on the roots of an ambient system, generated by
/// the reflections in a given base. For the full Weyl group the base is the
/// set of simple roots.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    base: Vec<usize>,
    generators: Vec<Perm>,
    chain: StabChain,
}

impl WeylGroup {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        let base = rs.simple_roots();
        Self::reflection_subgroup(rs, base)
    }

    /// The group generated by reflections in `base`, which should be a base
    /// of a subsystem.
    pub fn reflection_subgroup(rs: Arc<RootSystem>, base: Vec<usize>) -> Self {
        let generators: Vec<Perm> = base.iter().map(|&r| rs.reflection(r)).collect();
        let chain = StabChain::new(rs.num_roots(), &generators);
        WeylGroup {
            rs,
            base,
            generators,
            chain,
        }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn base(&self) -> &[usize] {
        &self.base
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

    pub fn random_element<R: RngCore>(&self, rng: &mut R) -> Perm {
        self.chain.random_element(rng)
    }

    /// `s_{w[0]} s_{w[1]} ... s_{w[k-1]}` for a word of root indices.
    pub fn word_to_perm(&self, word: &[usize]) -> Perm {
        let mut g = Perm::identity(self.rs.num_roots());
        for &r in word {
            g = g.compose(&self.rs.reflection(r));
        }
        g
    }

    /// An element mapping the subsystem generated by `s1` onto the one
    /// generated by `s2`, found by a search along a stabilizer chain whose
    /// base starts with an ordering of `s1`.
    pub fn conjugating_element(&self, s1: &[usize], s2: &[usize]) -> Option<Perm> {
        if s1.len() != s2.len() {
            return None;
        }
        let rs = &self.rs;
        let t1 = type_of_base(rs, s1).ok()?;
        let t2 = type_of_base(rs, s2).ok()?;
        if t1 != t2 {
            return None;
        }
        let mut n1: Vec<i64> = s1.iter().map(|&r| rs.norm2(r)).collect();
        let mut n2: Vec<i64> = s2.iter().map(|&r| rs.norm2(r)).collect();
        n1.sort_unstable();
        n2.sort_unstable();
        if n1 != n2 {
            return None;
        }
        if s1.is_empty() {
            return Some(Perm::identity(rs.num_roots()));
        }
        let mut first: Option<Vec<usize>> = None;
        for_each_standard_ordering(rs, s1, &mut |o| {
            first = Some(o.to_vec());
            false
        });
        let src = first?;
        let chain = StabChain::with_base_prefix(rs.num_roots(), &self.generators, &src);
        let mut found = None;
        for_each_standard_ordering(rs, s2, &mut |dst| {
            if let Some(g) = chain.map_prefix(&src, dst) {
                found = Some(g);
                false
            } else {
                true
            }
        });
        found
    }
}

/// Whether some element of `w` maps the subsystem generated by the roots
/// `s1` onto the one generated by `s2`. Both are bases of subsystems.
pub fn subsystems_conjugate(w: &WeylGroup, s1: &[usize], s2: &[usize]) -> bool {
    w.conjugating_element(s1, s2).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{CartanType, Series};

    #[test]
    fn weyl_orders_match_formula() {
        for (s, n) in [
            (Series::A, 1),
            (Series::A, 5),
            (Series::B, 4),
            (Series::C, 3),
            (Series::D, 5),
            (Series::E, 6),
            (Series::E, 7),
            (Series::E, 8),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            let t = CartanType::new(s, n).unwrap();
            let w = WeylGroup::new(Arc::new(RootSystem::new(t)));
            assert_eq!(w.order(), t.weyl_order(), "{t}");
            for g in w.generators() {
                assert!(g.compose(g).is_identity());
            }
        }
    }

    #[test]
    fn conjugating_element_maps_subsystem() {
        let rs = Arc::new(RootSystem::new(CartanType::new(Series::D, 4).unwrap()));
        let w = WeylGroup::new(rs.clone());
        let g = w.conjugating_element(&[0], &[3]).unwrap();
        assert_eq!(g.apply(0), 3);
        // {a1, a3} and {a1, a4} are not W-conjugate in D4.
        assert!(!subsystems_conjugate(&w, &[0, 2], &[0, 3]));
        assert!(subsystems_conjugate(&w, &[0, 2], &[2, 0]));
    }
}
