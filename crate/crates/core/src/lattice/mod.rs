//! Character lattices, finite abelian quotients and centers.
//!
//! Weights are integer row vectors in the basis of fundamental weights, so
//! the weight lattice `P` is `Z^n` and the root lattice `Q` is spanned by the
//! rows of the Cartan matrix. A root datum is a lattice `Q <= X <= P`.
//! Centers are handled through `X / Z psi`: the center of the subgroup with
//! root system `psi` is dual to the torsion of that quotient.

mod center;
mod snf;

pub use center::{
    center_component_group, center_elements_outside_subcenter, component_group_generators,
    full_center, full_center_elements, normalizer_center_action, normalizer_of_subsystem,
    CenterAction, CenterElement, Normalizer,
};
pub use snf::{determinant, identity, mat_mul, smith_normal_form, vec_mat, IntMatrix, Snf};

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::root_system::{CartanType, RootSystem, Series};

/// Position of the character lattice between `Q` and `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Isogeny {
    /// `X = P`.
    SimplyConnected,
    /// `X = Q`.
    Adjoint,
    /// Type D only: `X = Q + Z w1`.
    SpecialOrthogonal,
    /// Type D with even rank: `X = Q + Z w_n`.
    HalfSpin,
    /// Type A only: `SL_{n+1} / mu_d`, `X = Q + Z d w1`.
    SlMod(u32),
}

impl Isogeny {
    /// Parses `sc`, `ad`, `SO`, `PSO`, `Spin`, `Sp`, `PSp`, `HalfSpin`, `SLmod:d`.
    /// The type decides what `SO` means (adjoint in type B).
    pub fn parse(label: &str, t: CartanType) -> Result<Self> {
        let bad = || Error::InvalidIsogeny {
            label: label.to_string(),
        };
        let s = label.trim();
        let lower = s.to_ascii_lowercase();
        let iso = match lower.as_str() {
            "sc" | "spin" | "sp" | "sl" => Isogeny::SimplyConnected,
            "ad" | "pso" | "psp" | "pgl" => Isogeny::Adjoint,
            "so" => match t.series() {
                Series::B => Isogeny::Adjoint,
                Series::D => Isogeny::SpecialOrthogonal,
                _ => return Err(bad()),
            },
            "halfspin" | "½spin" => Isogeny::HalfSpin,
            _ => {
                let d = lower
                    .strip_prefix("slmod:")
                    .or_else(|| lower.strip_prefix("slmod"))
                    .ok_or_else(bad)?;
                Isogeny::SlMod(d.parse().map_err(|_| bad())?)
            }
        };
        iso.validate(t).map_err(|_| bad())?;
        Ok(iso.normalize(t))
    }

    fn validate(self, t: CartanType) -> Result<()> {
        let n = t.rank();
        let ok = match self {
            Isogeny::SimplyConnected | Isogeny::Adjoint => true,
            Isogeny::SpecialOrthogonal => t.series() == Series::D,
            Isogeny::HalfSpin => t.series() == Series::D && n % 2 == 0,
            Isogeny::SlMod(d) => t.series() == Series::A && d >= 1 && (n as u32 + 1) % d == 0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidIsogeny {
                label: self.to_string(),
            })
        }
    }

    fn normalize(self, t: CartanType) -> Self {
        match self {
            Isogeny::SlMod(1) => Isogeny::SimplyConnected,
            Isogeny::SlMod(d) if d as usize == t.rank() + 1 => Isogeny::Adjoint,
            other => other,
        }
    }

    pub fn label(self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Isogeny {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Isogeny::SimplyConnected => write!(f, "sc"),
            Isogeny::Adjoint => write!(f, "ad"),
            Isogeny::SpecialOrthogonal => write!(f, "SO"),
            Isogeny::HalfSpin => write!(f, "HalfSpin"),
            Isogeny::SlMod(d) => write!(f, "SLmod:{d}"),
        }
    }
}

/// A finite abelian group by its invariant factors `d1 | d2 | ...`, all > 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// The group `Z/o1 x Z/o2 x ...` for arbitrary positive orders.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let k = orders.len();
        let m: IntMatrix = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| if i == j { orders[i] as i64 } else { 0 })
                    .collect()
            })
            .collect();
        let d = smith_normal_form(&m).diagonal();
        FiniteAbelianGroup {
            invariant_factors: d.into_iter().map(|x| x as u64).filter(|&x| x > 1).collect(),
        }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Elements as tuples `(a_i mod d_i)`, lexicographic.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.invariant_factors {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for e in &out {
                for a in 0..d {
                    let mut x = e.clone();
                    x.push(a);
                    next.push(x);
                }
            }
            out = next;
        }
        out
    }

    pub fn element_order(&self, x: &[u64]) -> u64 {
        x.iter()
            .zip(&self.invariant_factors)
            .fold(1, |acc, (&a, &d)| {
                num_integer::lcm(acc, d / num_integer::gcd(a, d))
            })
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "1");
        }
        for (i, d) in self.invariant_factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z/{d}")?;
        }
        Ok(())
    }
}

/// Removes every factor `p` from `d`; `p = 0` or `1` keeps `d`.
pub fn p_prime_part(mut d: u64, p: u64) -> u64 {
    if p > 1 {
        while d % p == 0 {
            d /= p;
        }
    }
    d
}

/// A root system with a character lattice `Q <= X <= P`.
#[derive(Clone, Debug)]
pub struct RootDatum {
    rs: Arc<RootSystem>,
    isogeny: Isogeny,
    /// Basis of `X` as rows in weight coordinates.
    x_basis: IntMatrix,
    x_snf: Snf,
    cartan_inv: Vec<Vec<Rational64>>,
}

impl RootDatum {
    pub fn new(rs: Arc<RootSystem>, isogeny: Isogeny) -> Result<Self> {
        let t = rs.cartan_type();
        isogeny.validate(t)?;
        let isogeny = isogeny.normalize(t);
        let n = rs.rank();
        let c = rs.cartan_matrix();
        let mut gens: IntMatrix = match isogeny {
            Isogeny::SimplyConnected => identity(n),
            _ => c.clone(),
        };
        let unit = |i: usize, k: i64| -> Vec<i64> {
            let mut v = vec![0i64; n];
            v[i] = k;
            v
        };
        match isogeny {
            Isogeny::SpecialOrthogonal => gens.push(unit(0, 1)),
            Isogeny::HalfSpin => gens.push(unit(n - 1, 1)),
            Isogeny::SlMod(d) => gens.push(unit(0, d as i64)),
            _ => {}
        }
        let x_basis = lattice_basis(&gens);
        let x_snf = smith_normal_form(&x_basis);
        let cartan_inv =
            rational_inverse(&c).ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
        Ok(RootDatum {
            rs,
            isogeny,
            x_basis,
            x_snf,
            cartan_inv,
        })
    }

    pub fn from_type(t: CartanType, isogeny: Isogeny) -> Result<Self> {
        Self::new(Arc::new(RootSystem::new(t)), isogeny)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn isogeny(&self) -> Isogeny {
        self.isogeny
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn x_basis(&self) -> &IntMatrix {
        &self.x_basis
    }

    /// Coordinates of a weight in the basis of `X`, if it lies in `X`.
    pub fn x_coords(&self, weight: &[i64]) -> Option<Vec<i64>> {
        // y B = w with U B V = D: (y U^-1) D = w V.
        let s = &self.x_snf;
        let z = vec_mat(weight, &s.v);
        let n = z.len();
        let mut t = vec![0i64; n];
        for i in 0..n {
            let d = s.d[i][i];
            if z[i] % d != 0 {
                return None;
            }
            t[i] = z[i] / d;
        }
        Some(vec_mat(&t, &s.u))
    }

    pub fn contains(&self, weight: &[i64]) -> bool {
        self.x_coords(weight).is_some()
    }

    /// `X`-coordinates of a root.
    pub fn root_x_coords(&self, r: usize) -> Vec<i64> {
        self.x_coords(&self.rs.weight_coords(r))
            .expect("roots lie in X")
    }

    /// `|X / Q|`.
    pub fn index_over_q(&self) -> u64 {
        let c = self.rs.cartan_matrix();
        (determinant(&c) / determinant(&self.x_basis)).unsigned_abs()
    }

    /// The linear action of a Weyl element (a root permutation) on weight
    /// coordinates, as a matrix acting on row vectors.
    pub fn weight_action(&self, w: &crate::perm::Perm) -> Vec<Vec<Rational64>> {
        let n = self.rank();
        // lambda -> lambda C^-1 R C, R rows = root coordinates of w(a_i).
        let c = self.rs.cartan_matrix();
        let rc: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                let img = self.rs.root(w.apply(i));
                (0..n)
                    .map(|k| Rational64::from_integer((0..n).map(|j| img[j] * c[j][k]).sum()))
                    .collect()
            })
            .collect();
        let mut m = vec![vec![Rational64::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational64::zero();
                for l in 0..n {
                    s += self.cartan_inv[i][l] * rc[l][j];
                }
                m[i][j] = s;
            }
        }
        m
    }
}

/// Row-lattice basis (rank many rows) of the rows of `gens`.
pub fn lattice_basis(gens: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(gens);
    let diag = s.diagonal();
    diag.iter()
        .enumerate()
        .filter(|(_, &d)| d != 0)
        .map(|(i, &d)| s.v_inv[i].iter().map(|&x| x * d).collect())
        .collect()
}

pub(crate) fn rational_inverse(m: &IntMatrix) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = Rational64::one() / a[col][col];
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..2 * n {
                    let v = a[col][j] * f;
                    a[r][j] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: Series, n: usize, iso: Isogeny) -> RootDatum {
        RootDatum::from_type(CartanType::new(s, n).unwrap(), iso).unwrap()
    }

    #[test]
    fn fundamental_group_orders() {
        for (s, n, k) in [
            (Series::A, 3, 4),
            (Series::B, 4, 2),
            (Series::C, 3, 2),
            (Series::D, 5, 4),
            (Series::D, 6, 4),
            (Series::E, 6, 3),
            (Series::E, 7, 2),
            (Series::E, 8, 1),
            (Series::F, 4, 1),
            (Series::G, 2, 1),
        ] {
            assert_eq!(datum(s, n, Isogeny::SimplyConnected).index_over_q(), k);
            assert_eq!(datum(s, n, Isogeny::Adjoint).index_over_q(), 1);
        }
        assert_eq!(
            datum(Series::D, 6, Isogeny::SpecialOrthogonal).index_over_q(),
            2
        );
        assert_eq!(datum(Series::D, 6, Isogeny::HalfSpin).index_over_q(), 2);
        assert_eq!(datum(Series::A, 5, Isogeny::SlMod(2)).index_over_q(), 3);
    }

    #[test]
    fn isogeny_labels() {
        let b3 = CartanType::new(Series::B, 3).unwrap();
        let d4 = CartanType::new(Series::D, 4).unwrap();
        let d5 = CartanType::new(Series::D, 5).unwrap();
        let a5 = CartanType::new(Series::A, 5).unwrap();
        assert_eq!(Isogeny::parse("SO", b3).unwrap(), Isogeny::Adjoint);
        assert_eq!(
            Isogeny::parse("SO", d4).unwrap(),
            Isogeny::SpecialOrthogonal
        );
        assert!(Isogeny::parse("HalfSpin", d5).is_err());
        assert_eq!(Isogeny::parse("SLmod:3", a5).unwrap(), Isogeny::SlMod(3));
        assert_eq!(Isogeny::parse("SLmod:6", a5).unwrap(), Isogeny::Adjoint);
        assert!(Isogeny::parse("SLmod:4", a5).is_err());
    }

    #[test]
    fn abelian_group_normal_form() {
        let g = FiniteAbelianGroup::from_cyclic_orders(&[4, 2, 4]);
        assert_eq!(g.invariant_factors(), &[2, 4, 4]);
        let h = FiniteAbelianGroup::from_cyclic_orders(&[2, 3]);
        assert_eq!(h.invariant_factors(), &[6]);
        assert_eq!(h.elements().len(), 6);
        assert_eq!(p_prime_part(12, 2), 3);
        assert_eq!(p_prime_part(12, 0), 12);
    }

    #[test]
    fn weyl_action_on_weights_is_integral() {
        let d = datum(Series::E, 6, Isogeny::SimplyConnected);
        let rs = d.root_system().clone();
        let s = rs.reflection(0);
        let m = d.weight_action(&s);
        // s_1(w1) = w1 - a1, whose weight coordinates are e1 - row 1 of C.
        let c = rs.cartan_matrix();
        for j in 0..6 {
            let expect = i64::from(j == 0) - c[0][j];
            assert_eq!(m[0][j], Rational64::from_integer(expect));
        }
    }
}
