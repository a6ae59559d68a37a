//! Finite groups with a distinguished automorphism `phi`.
//!
//! Twisted classes are the orbits of `u -> phi(w) u w^-1`. The coset
//! `phi.W` is realized inside `W x| <t>` with `t w t^-1 = phi^-1(w)`, so that
//! conjugating `t u` by `w` gives `t phi(w) u w^-1`. Extensions of
//! `phi`-stable characters are read off the character table of that group.

mod examples;
mod table;

pub use examples::{standard_suite, SuiteEntry};

pub use table::{conjugacy_classes, CharacterTable, FiniteGroup, ORDER_LIMIT};

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::group::IndexedGroup;
use crate::perm::Perm;

/// An automorphism of an [`IndexedGroup`], as the image of every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    map: Vec<usize>,
    order: usize,
}

impl Automorphism {
    pub fn identity(g: &IndexedGroup) -> Self {
        Automorphism { map: (0..g.order()).collect(), order: 1 }
    }

    /// Checks that `map` is an automorphism of `g`.
    pub fn from_map(g: &IndexedGroup, map: Vec<usize>) -> Result<Self> {
        if !g.is_automorphism(&map) {
            return Err(Error::NotAnAutomorphism("element map does not respect multiplication".into()));
        }
        let n = map.len();
        let mut order = 1;
        let mut cur = map.clone();
        while (0..n).any(|i| cur[i] != i) {
            cur = cur.iter().map(|&x| map[x]).collect();
            order += 1;
        }
        Ok(Automorphism { map, order })
    }

    /// The automorphism sending `gens[i]` to `images[i]`, extended along
    /// words in the generators and then checked.
    pub fn from_generator_images(g: &IndexedGroup, gens: &[Perm], images: &[Perm]) -> Result<Self> {
        if gens.len() != images.len() {
            return Err(Error::NotAnAutomorphism("one image per generator is required".into()));
        }
        let idx = |p: &Perm| {
            g.index_of(p).ok_or_else(|| Error::NotAnAutomorphism(format!("{p:?} is not in the group")))
        };
        let gi: Vec<usize> = gens.iter().map(idx).collect::<Result<_>>()?;
        let hi: Vec<usize> = images.iter().map(idx).collect::<Result<_>>()?;
        let n = g.order();
        let mut map = vec![usize::MAX; n];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (a, b) in gi.iter().zip(&hi) {
                let y = g.mul(x, *a);
                let img = g.mul(map[x], *b);
                if map[y] == usize::MAX {
                    map[y] = img;
                    queue.push_back(y);
                } else if map[y] != img {
                    return Err(Error::NotAnAutomorphism("generator images violate a relation".into()));
                }
            }
        }
        if map.contains(&usize::MAX) {
            return Err(Error::NotAnAutomorphism("generators do not generate the group".into()));
        }
        Self::from_map(g, map)
    }

    /// Conjugation `w -> x w x^-1`.
    pub fn inner(g: &IndexedGroup, x: usize) -> Self {
        let map = (0..g.order()).map(|w| g.mul(g.mul(x, w), g.inv(x))).collect();
        Self::from_map(g, map).expect("conjugation is an automorphism")
    }

    pub fn apply(&self, w: usize) -> usize {
        self.map[w]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// `phi^k` for any integer `k`.
    pub fn power(&self, k: i64) -> Vec<usize> {
        let k = k.rem_euclid(self.order as i64) as usize;
        let mut cur: Vec<usize> = (0..self.map.len()).collect();
        for _ in 0..k {
            cur = cur.iter().map(|&x| self.map[x]).collect();
        }
        cur
    }
}

/// Partition of a group into `phi`-twisted classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedClassPartition {
    /// Each class sorted, classes ordered by least element.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl TwistedClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }
}

/// Orbits of `u -> phi(w) u w^-1`.
pub fn twisted_classes(g: &IndexedGroup, phi: &Automorphism) -> TwistedClassPartition {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for u in 0..n {
        if class_of[u] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut cls = Vec::new();
        for w in 0..n {
            let v = g.mul(g.mul(phi.apply(w), u), g.inv(w));
            if class_of[v] == usize::MAX {
                class_of[v] = id;
                cls.push(v);
            }
        }
        cls.sort_unstable();
        classes.push(cls);
    }
    TwistedClassPartition { classes, class_of }
}

/// `|{x : phi(x) w x^-1 = w}|`.
pub fn twisted_centralizer(g: &IndexedGroup, phi: &Automorphism, w: usize) -> usize {
    (0..g.order()).filter(|&x| g.mul(g.mul(phi.apply(x), w), g.inv(x)) == w).count()
}

/// Characters `E` with `E o phi = E`, as indices into `table`.
pub fn extendable_irreducibles(table: &CharacterTable, phi: &Automorphism) -> Vec<usize> {
    (0..table.num_classes())
        .filter(|&i| {
            table.classes.iter().all(|cls| {
                let w = cls[0];
                table.value(i, phi.apply(w)) == table.value(i, w)
            })
        })
        .collect()
}

/// How an extension was singled out among the `m` candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtensionRule {
    /// The automorphism is trivial and the extension is `E` itself.
    Identity,
    /// Rational coset values; least among the rational candidates.
    Rational,
    /// No candidate is rational; least among all candidates.
    Lexicographic,
}

impl fmt::Display for ExtensionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtensionRule::Identity => "identity",
            ExtensionRule::Rational => "rational-least",
            ExtensionRule::Lexicographic => "lexicographic-least",
        })
    }
}

/// Description of the normalization rule, embedded in reports.
pub const EXTENSION_CONVENTION: &str = "extensions satisfy A^m = 1; among the m candidates those with all coset \
values rational are preferred, then the least value sequence over twisted classes in class order, values \
compared by conductor and then by power-basis coefficients with larger coefficients first";

/// `Tr(phi w, E~)` on each twisted class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedCharacter {
    /// Index of `E` in the character table.
    pub base: usize,
    pub values: Vec<Cyc>,
    pub rule: ExtensionRule,
}

/// The group `W x| <t>` with elements `t^i w` numbered `i * |W| + w`.
struct Semidirect<'a> {
    g: &'a IndexedGroup,
    /// `phi^j` for `j = 0..m`.
    powers: Vec<Vec<usize>>,
}

impl FiniteGroup for Semidirect<'_> {
    fn order(&self) -> usize {
        self.g.order() * self.powers.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.g.order();
        let m = self.powers.len();
        let (i, x) = (a / n, a % n);
        let (j, y) = (b / n, b % n);
        ((i + j) % m) * n + self.g.mul(self.powers[j][x], y)
    }

    fn inv(&self, a: usize) -> usize {
        let n = self.g.order();
        let m = self.powers.len();
        let (i, x) = (a / n, a % n);
        let k = (m - i) % m;
        k * n + self.powers[k][self.g.inv(x)]
    }
}

/// Value order for the lexicographic rule: conductor, then coefficients with
/// larger ones first, so that `1` precedes `-1`.
fn value_cmp(a: &Cyc, b: &Cyc) -> Ordering {
    a.conductor()
        .cmp(&b.conductor())
        .then_with(|| b.coefficients().cmp(a.coefficients()))
}

fn seq_cmp(a: &[Cyc], b: &[Cyc]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match value_cmp(x, y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Everything about `(W, phi)` needed downstream: the table of `W`, the
/// twisted classes, and one fixed extension of each `phi`-stable character.
#[derive(Clone, Debug)]
pub struct TwistedCharacters {
    pub table: CharacterTable,
    pub partition: TwistedClassPartition,
    pub extensions: Vec<ExtendedCharacter>,
    pub phi_order: usize,
}

impl TwistedCharacters {
    pub fn compute(g: &IndexedGroup, phi: &Automorphism) -> Result<Self> {
        let table = CharacterTable::compute(g)?;
        Self::with_table(g, phi, table)
    }

    /// Like [`compute`](Self::compute) with a table already validated.
    pub fn with_table(g: &IndexedGroup, phi: &Automorphism, table: CharacterTable) -> Result<Self> {
        let partition = twisted_classes(g, phi);
        let ext = extendable_irreducibles(&table, phi);
        let m = phi.order();
        if m == 1 {
            let extensions = ext
                .iter()
                .map(|&i| ExtendedCharacter {
                    base: i,
                    values: partition.classes.iter().map(|c| table.value(i, c[0]).clone()).collect(),
                    rule: ExtensionRule::Identity,
                })
                .collect();
            return Ok(TwistedCharacters { table, partition, extensions, phi_order: 1 });
        }
        let sd = Semidirect { g, powers: (0..m as i64).map(|j| phi.power(j)).collect() };
        let big = CharacterTable::compute(&sd)?;
        let n = g.order();
        let mut extensions = Vec::with_capacity(ext.len());
        for &e in &ext {
            let mut candidates: Vec<Vec<Cyc>> = Vec::new();
            for row in &big.characters {
                if (0..n).all(|w| row[big.class_of[w]] == *table.value(e, w)) {
                    candidates.push(partition.classes.iter().map(|c| row[big.class_of[n + c[0]]].clone()).collect());
                }
            }
            if candidates.len() != m {
                return Err(Error::Internal(format!("{} extensions found, expected {m}", candidates.len())));
            }
            let rational: Vec<&Vec<Cyc>> = candidates.iter().filter(|v| v.iter().all(Cyc::is_rational)).collect();
            let (pool, rule) = if rational.is_empty() {
                (candidates.iter().collect::<Vec<_>>(), ExtensionRule::Lexicographic)
            } else {
                (rational, ExtensionRule::Rational)
            };
            let best = pool.into_iter().min_by(|a, b| seq_cmp(a, b)).unwrap().clone();
            extensions.push(ExtendedCharacter { base: e, values: best, rule });
        }
        Ok(TwistedCharacters { table, partition, extensions, phi_order: m })
    }

    /// `Tr(phi w, E~)` for extension number `k`.
    pub fn coset_value(&self, k: usize, w: usize) -> &Cyc {
        &self.extensions[k].values[self.partition.class_of[w]]
    }

    /// Position in `extensions` of the extension of table character `e`.
    pub fn extension_of(&self, e: usize) -> Option<usize> {
        self.extensions.iter().position(|x| x.base == e)
    }

    /// `(1/|W|) sum_w f(phi w) conj(g(phi w))` for class functions on the
    /// twisted classes.
    pub fn coset_inner(&self, f: &[Cyc], g: &[Cyc]) -> Cyc {
        let mut s = Cyc::zero();
        for (c, cls) in self.partition.classes.iter().enumerate() {
            let term = &f[c] * &g[c].conj();
            s = &s + &term.scale(&BigRational::from_integer(BigInt::from(cls.len())));
        }
        s.scale(&BigRational::new(1.into(), BigInt::from(self.table.group_order)))
    }

    /// Coefficients of a twisted class function in the basis of extensions.
    pub fn decompose(&self, f: &[Cyc]) -> Vec<Cyc> {
        self.extensions.iter().map(|e| self.coset_inner(f, &e.values)).collect()
    }

    /// Exact checks: restriction, coset orthogonality, count, completeness.
    pub fn verify(&self) -> core::result::Result<(), String> {
        let k = self.partition.len();
        if self.extensions.len() != k {
            return Err(format!("{} extendable characters but {k} twisted classes", self.extensions.len()));
        }
        for (a, ea) in self.extensions.iter().enumerate() {
            for (b, eb) in self.extensions.iter().enumerate() {
                let want = if a == b { Cyc::one() } else { Cyc::zero() };
                if self.coset_inner(&ea.values, &eb.values) != want {
                    return Err(format!("coset orthogonality fails for extensions {a}, {b}"));
                }
            }
        }
        for c in 0..k {
            let mut f = vec![Cyc::zero(); k];
            f[c] = Cyc::one();
            let coeffs = self.decompose(&f);
            let mut back = vec![Cyc::zero(); k];
            for (coef, e) in coeffs.iter().zip(&self.extensions) {
                for (x, v) in back.iter_mut().zip(&e.values) {
                    *x = &*x + &(coef * v);
                }
            }
            if back != f {
                return Err(format!("indicator of twisted class {c} is not reconstructed"));
            }
        }
        Ok(())
    }
}
