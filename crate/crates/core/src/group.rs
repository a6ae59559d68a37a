//! Small finite groups with explicit multiplication tables.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::perm::{Perm, StabChain};

/// Largest group this module will tabulate.
pub const TABLE_LIMIT: usize = 5000;

/// A finite permutation group with its elements indexed `0..n`, index 0 being
/// the identity.
#[derive(Clone, Debug)]
pub struct IndexedGroup {
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    table: Vec<u16>,
    inverse: Vec<usize>,
}

impl IndexedGroup {
    /// The group generated by `gens`, acting on `degree` points.
    pub fn generate(degree: usize, gens: &[Perm]) -> Result<Self> {
        let chain = StabChain::new(degree, gens);
        let mut elements = chain.elements(TABLE_LIMIT as u128)?;
        elements.sort();
        let id = Perm::identity(degree);
        let pos = elements.iter().position(|g| *g == id).unwrap();
        elements.swap(0, pos);
        elements[1..].sort();
        Self::from_elements(elements)
    }

    /// Builds the table from a complete, closed list of elements whose first
    /// entry is the identity.
    pub fn from_elements(elements: Vec<Perm>) -> Result<Self> {
        let n = elements.len();
        if n > TABLE_LIMIT {
            return Err(Error::GroupTooLarge {
                order: n as u128,
                limit: TABLE_LIMIT as u128,
            });
        }
        if n == 0 || !elements[0].is_identity() {
            return Err(Error::Internal(
                "element list must start with the identity".into(),
            ));
        }
        let index: HashMap<Perm, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let c = elements[a].compose(&elements[b]);
                let k = *index
                    .get(&c)
                    .ok_or_else(|| Error::Internal("element list not closed".into()))?;
                table[a * n + b] = k as u16;
            }
        }
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table[a * n + b] == 0).unwrap())
            .collect();
        Ok(IndexedGroup {
            elements,
            index,
            table,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for a possibly negative exponent.
    pub fn zpow(&self, a: usize, e: i64) -> usize {
        let p = self.pow(a, e.unsigned_abs());
        if e < 0 {
            self.inv(p)
        } else {
            p
        }
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Exponent of the group (lcm of element orders).
    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1u64, |acc, a| {
            num_integer::lcm(acc, self.element_order(a) as u64)
        })
    }

    /// Subgroup generated by the given element indices, as a sorted list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
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

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut mem = vec![false; self.order()];
        for &x in set {
            mem[x] = true;
        }
        mem[0]
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| mem[self.mul(a, self.inv(b))]))
    }

    /// Conjugacy classes, each sorted; classes ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut cls = Vec::new();
            for x in 0..n {
                let c = self.mul(self.mul(x, a), self.inv(x));
                if !seen[c] {
                    seen[c] = true;
                    cls.push(c);
                }
            }
            cls.sort_unstable();
            classes.push(cls);
        }
        classes
    }

    /// Checks that `map` (image of every element) is an automorphism.
    pub fn is_automorphism(&self, map: &[usize]) -> bool {
        let n = self.order();
        if map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in map {
            if m >= n || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        (0..n).all(|a| (0..n).all(|b| map[self.mul(a, b)] == self.mul(map[a], map[b])))
    }
}
