//! Which Levi subgroups carry cuspidal character sheaves.
//!
//! A reductive group is reduced to its derived group, then to the simply
//! connected cover of that, which is a product of quasi-simple groups. A
//! character of the center component group pulls back to a character of the
//! cover's center, one class in `P_i / Q_i` per factor. The group admits a
//! cuspidal object on which the component group acts by some character if
//! and only if every factor does for its restriction.

mod table;

pub use table::{
    classical_signature, generate_table1, ClassicalSignature, CuspidalLeviRecord, Table1,
};

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{component_group_generators, rational_inverse, RootDatum};
use crate::root_system::{CartanType, Series};

/// `n` is a triangular number `t(t+1)/2`.
pub fn is_triangular(n: u64) -> bool {
    is_square(8 * n + 1)
}

pub fn is_square(n: u64) -> bool {
    let r = n.isqrt();
    r * r == n
}


/// Class of a central character of a simply connected quasi-simple group,
/// as far as the criteria below distinguish them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharKind {
    Trivial,
    /// Types B, C, E: any nontrivial class.
    Nontrivial,
    /// Type D: the class of the first fundamental weight.
    Vector,
    /// Type D: a half-spin class.
    Spin,
    /// Type A: a class of the given order in `P/Q`.
    Order(u64),
}

impl fmt::Display for CharKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharKind::Trivial => write!(f, "trivial"),
            CharKind::Nontrivial => write!(f, "nontrivial"),
            CharKind::Vector => write!(f, "vector"),
            CharKind::Spin => write!(f, "spin"),
            CharKind::Order(k) => write!(f, "order {k}"),
        }
    }
}

fn cartan_of(t: CartanType) -> Vec<Vec<i64>> {
    crate::root_system::RootSystem::new(t).cartan_matrix()
}

fn in_root_lattice(cinv: &[Vec<Rational64>], lambda: &[i64]) -> bool {
    let n = lambda.len();
    (0..n).all(|j| {
        let s = (0..n).fold(Rational64::zero(), |acc, i| acc + cinv[i][j] * lambda[i]);
        s.is_integer()
    })
}

/// Classifies a weight class `lambda` (fundamental-weight coordinates in
/// Bourbaki order) of the quasi-simple type `t` modulo the root lattice.
pub fn classify_character(t: CartanType, lambda: &[i64]) -> CharKind {
    let c = cartan_of(t);
    let cinv = rational_inverse(&c).expect("Cartan matrices are invertible");
    if in_root_lattice(&cinv, lambda) {
        return CharKind::Trivial;
    }
    match t.series() {
        Series::A => {
            let mut k = 1u64;
            loop {
                k += 1;
                let v: Vec<i64> = lambda.iter().map(|&x| x * k as i64).collect();
                if in_root_lattice(&cinv, &v) {
                    return CharKind::Order(k);
                }
            }
        }
        Series::D => {
            let mut v = lambda.to_vec();
            v[0] -= 1;
            if in_root_lattice(&cinv, &v) {
                CharKind::Vector
            } else {
                CharKind::Spin
            }
        }
        _ => CharKind::Nontrivial,
    }
}

/// Pairs `(r, s)` with `r + s = k` satisfying `pred`.
fn splits(k: u64, pred: impl Fn(u64, u64) -> bool) -> Vec<(u64, u64)> {
    (0..=k)
        .map(|r| (r, k - r))
        .filter(|&(r, s)| pred(r, s))
        .collect()
}

/// Whether the simply connected quasi-simple group of type `t` has a cuspidal
/// character sheaf on which its center acts through a character of the
/// given kind. Characters are assumed to have order prime to `p`.
pub fn base_case_admits(t: CartanType, kind: CharKind, p: u64) -> Result<bool> {
    let k = t.rank() as u64;
    let tri = is_triangular;
    let sq = is_square;
    Ok(match t.series() {
        Series::A => kind == CharKind::Order(k + 1) || (k == 0),
        Series::B => match (p == 2, kind) {
            (true, CharKind::Trivial) => k % 2 == 0 && tri(k / 2),
            (true, _) => false,
            (false, CharKind::Trivial) => !splits(k, |r, s| sq(2 * r + 1) && sq(2 * s)).is_empty(),
            (false, _) => !splits(k, |r, s| tri(2 * r + 1) && tri(2 * s)).is_empty(),
        },
        Series::C => match (p == 2, kind) {
            (true, CharKind::Trivial) => k % 2 == 0 && tri(k / 2),
            (true, _) => false,
            (false, CharKind::Trivial) => k % 2 == 0 && !splits(k, |r, s| tri(r) && tri(s)).is_empty(),
            (false, _) => k % 2 == 1 && !splits(k, |r, s| tri(r) && tri(s)).is_empty(),
        },
        Series::D => match (p == 2, kind) {
            (true, CharKind::Trivial) => k % 4 == 0 && sq(k / 4),
            (true, _) => false,
            (false, CharKind::Trivial) => k % 4 == 0 && !splits(k, |r, s| sq(2 * r) && sq(2 * s)).is_empty(),
            (false, CharKind::Vector) => k % 4 == 2 && !splits(k, |r, s| sq(2 * r) && sq(2 * s)).is_empty(),
            (false, _) => !splits(k, |r, s| tri(2 * r) && tri(2 * s)).is_empty(),
        },
        Series::F | Series::E if p == 2 && (t.series() == Series::F || k == 8) => {
            return Err(Error::Unsupported(format!(
                "{t} in characteristic 2: cleanness of cuspidal character sheaves is not established"
            )))
        }
        Series::E | Series::F | Series::G => true,
    })
}

/// A reductive group up to what the criterion sees: the simply connected
/// quasi-simple factors of its derived group and the characters of the
/// center component group, pulled back to classes in `P_i / Q_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDescription {
    pub factors: Vec<CartanType>,
    /// Generators of the character group, each a class per factor
    /// (fundamental-weight coordinates), with its order.
    pub character_generators: Vec<(Vec<Vec<i64>>, u64)>,
    pub torus_rank: usize,
}

impl GroupDescription {
    /// A product of simply connected groups with no characters but the
    /// trivial one (as for a Levi subgroup with connected center).
    pub fn connected_center(factors: Vec<CartanType>, torus_rank: usize) -> Self {
        GroupDescription {
            factors,
            character_generators: Vec::new(),
            torus_rank,
        }
    }

    /// The Levi subgroup of `g` with simple roots `levi`.
    pub fn from_levi(g: &RootDatum, levi: &[usize], p: u64) -> Result<Self> {
        let rs = g.root_system();
        let comps = crate::root_system::Diagram::from_roots(rs, levi.to_vec(), None)
            .components(rs, &(0..levi.len()).collect::<Vec<_>>())?;
        let factors: Vec<CartanType> = comps.iter().map(|c| c.cartan).collect();
        let gens = component_group_generators(g, levi, p);
        let character_generators = gens
            .into_iter()
            .map(|(x, order)| {
                let classes = comps
                    .iter()
                    .map(|c| {
                        c.order
                            .iter()
                            .map(|&b| {
                                let cc = rs.coroot_coords(b);
                                x.iter().zip(&cc).map(|(a, b)| a * b).sum()
                            })
                            .collect()
                    })
                    .collect();
                (classes, order)
            })
            .collect();
        Ok(GroupDescription {
            factors,
            character_generators,
            torus_rank: g.rank() - levi.len(),
        })
    }

    /// Every character, as a class per factor, together with the
    /// coefficient vector on the generators. The trivial character first.
    pub fn characters(&self) -> Vec<(Vec<u64>, Vec<Vec<i64>>)> {
        let zero: Vec<Vec<i64>> = self.factors.iter().map(|t| vec![0; t.rank()]).collect();
        let mut out = vec![(Vec::new(), zero)];
        for (gen, order) in &self.character_generators {
            let mut next = Vec::new();
            for (coef, cls) in &out {
                for a in 0..*order {
                    let mut c2 = coef.clone();
                    c2.push(a);
                    let cls2: Vec<Vec<i64>> = cls
                        .iter()
                        .zip(gen)
                        .map(|(v, g)| v.iter().zip(g).map(|(x, y)| x + y * a as i64).collect())
                        .collect();
                    next.push((c2, cls2));
                }
            }
            out = next;
        }
        out
    }

    /// Whether the character with the given per-factor classes admits.
    pub fn admits_with(&self, classes: &[Vec<i64>], p: u64) -> Result<bool> {
        for (t, cls) in self.factors.iter().zip(classes) {
            if !base_case_admits(*t, classify_character(*t, cls), p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Whether some character of the center component group admits a cuspidal
/// character sheaf. Tori (no factors) admit.
pub fn admits_cuspidal(k: &GroupDescription, p: u64) -> Result<bool> {
    for (_, cls) in k.characters() {
        if k.admits_with(&cls, p)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Isogeny;

    fn t(s: Series, n: usize) -> CartanType {
        CartanType::new(s, n).unwrap()
    }

    #[test]
    fn triangular_and_square() {
        let tri: Vec<u64> = (0..30).filter(|&n| is_triangular(n)).collect();
        assert_eq!(tri, [0, 1, 3, 6, 10, 15, 21, 28]);
        let sq: Vec<u64> = (0..30).filter(|&n| is_square(n)).collect();
        assert_eq!(sq, [0, 1, 4, 9, 16, 25]);
    }

    #[test]
    fn adjoint_classical_quasi_simple_cases() {
        for (s, n) in [
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 5),
            (Series::D, 6),
            (Series::D, 7),
        ] {
            assert!(
                !base_case_admits(t(s, n), CharKind::Trivial, 0).unwrap(),
                "{s:?}{n}"
            );
        }
        assert!(base_case_admits(t(Series::B, 2), CharKind::Trivial, 0).unwrap());
        assert!(base_case_admits(t(Series::D, 4), CharKind::Trivial, 0).unwrap());
        assert!(base_case_admits(t(Series::B, 2), CharKind::Trivial, 2).unwrap());
        assert!(base_case_admits(t(Series::D, 4), CharKind::Trivial, 2).unwrap());
    }

    #[test]
    fn low_rank_coincidences_agree() {
        // D3 = A3 and the spin class is the order-4 class.
        for kind in [CharKind::Trivial, CharKind::Vector, CharKind::Spin] {
            let d3 = match kind {
                CharKind::Trivial => {
                    !splits(3, |r, s| is_square(2 * r) && is_square(2 * s)).is_empty() && 3 % 4 == 0
                }
                CharKind::Vector => 3 % 4 == 2,
                _ => !splits(3, |r, s| is_triangular(2 * r) && is_triangular(2 * s)).is_empty(),
            };
            let a3kind = match kind {
                CharKind::Trivial => CharKind::Trivial,
                CharKind::Vector => CharKind::Order(2),
                _ => CharKind::Order(4),
            };
            assert_eq!(d3, base_case_admits(t(Series::A, 3), a3kind, 0).unwrap());
        }
    }

    #[test]
    fn exceptional_characteristic_two_is_refused() {
        assert!(base_case_admits(t(Series::F, 4), CharKind::Trivial, 2).is_err());
        assert!(base_case_admits(t(Series::E, 8), CharKind::Trivial, 2).is_err());
        assert!(base_case_admits(t(Series::E, 7), CharKind::Trivial, 2).unwrap());
    }

    #[test]
    fn character_classes() {
        assert_eq!(
            classify_character(t(Series::A, 3), &[1, 0, 0]),
            CharKind::Order(4)
        );
        assert_eq!(
            classify_character(t(Series::A, 3), &[0, 1, 0]),
            CharKind::Order(2)
        );
        assert_eq!(
            classify_character(t(Series::D, 5), &[1, 0, 0, 0, 0]),
            CharKind::Vector
        );
        assert_eq!(
            classify_character(t(Series::D, 5), &[0, 0, 0, 0, 1]),
            CharKind::Spin
        );
        assert_eq!(
            classify_character(t(Series::E, 6), &[2, 0, -1, 0, 0, 0]),
            CharKind::Trivial
        );
    }

    #[test]
    fn e6_levis() {
        let g = RootDatum::from_type(t(Series::E, 6), Isogeny::SimplyConnected).unwrap();
        let a2a2 = GroupDescription::from_levi(&g, &[0, 2, 4, 5], 0).unwrap();
        assert!(admits_cuspidal(&a2a2, 0).unwrap());
        let a2a2_p3 = GroupDescription::from_levi(&g, &[0, 2, 4, 5], 3).unwrap();
        assert!(!admits_cuspidal(&a2a2_p3, 3).unwrap());
        let a2 = GroupDescription::from_levi(&g, &[0, 2], 0).unwrap();
        assert!(!admits_cuspidal(&a2, 0).unwrap());
        assert!(admits_cuspidal(&GroupDescription::connected_center(Vec::new(), 3), 0).unwrap());
    }
}
