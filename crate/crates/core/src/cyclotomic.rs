//! Exact arithmetic in cyclotomic fields.
//!
//! An element of `Q(zeta_n)` is stored in the power basis `1, z, ..., z^(phi(n)-1)`
//! modulo the cyclotomic polynomial. Binary operations lift both operands to
//! the least common conductor. Values are kept at the least conductor that
//! contains them, so equal numbers have equal representations.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn poly_divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic; coefficients low to high.
    let mut r = num.to_vec();
    let dn = den.len() - 1;
    let mut q = vec![0i64; r.len() - dn];
    for i in (0..q.len()).rev() {
        let c = r[i + dn];
        q[i] = c;
        for j in 0..=dn {
            r[i + j] -= c * den[j];
        }
    }
    q
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in divisors(n) {
        if d < n {
            p = poly_divide_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

/// Reduce a polynomial (coefficients indexed by exponent, any length) modulo
/// the `n`-th cyclotomic polynomial, first folding exponents mod `n`.
fn reduce(n: u32, raw: Vec<BigRational>, phi_n: &[i64]) -> Vec<BigRational> {
    let n = n as usize;
    let mut p = vec![BigRational::zero(); n.max(1)];
    for (i, c) in raw.into_iter().enumerate() {
        if !c.is_zero() {
            p[i % n.max(1)] += c;
        }
    }
    let deg = phi_n.len() - 1;
    for i in (deg..p.len()).rev() {
        if p[i].is_zero() {
            continue;
        }
        let c = core::mem::replace(&mut p[i], BigRational::zero());
        for j in 0..deg {
            if phi_n[j] != 0 {
                p[i - deg + j] -= &c * BigRational::from_integer(BigInt::from(phi_n[j]));
            }
        }
    }
    p.truncate(deg);
    p
}

/// An element of a cyclotomic field.
#[derive(Clone, Debug)]
pub struct Cyc {
    n: u32,
    coeffs: Vec<BigRational>,
}

impl Cyc {
    pub fn zero() -> Self {
        Cyc {
            n: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyc::from_rational(BigRational::one())
    }

    pub fn from_int(k: i64) -> Self {
        Cyc::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyc {
            n: 1,
            coeffs: vec![q],
        }
    }

    /// `zeta_n^k` with `zeta_n = exp(2 pi i / n)`.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n > 0);
        let e = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![BigRational::zero(); n as usize];
        raw[e] = BigRational::one();
        Cyc::from_raw(n, raw)
    }

    /// From coefficients of `zeta_n^i`, `i = 0..`, not yet reduced.
    pub fn from_raw(n: u32, raw: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(n);
        let c = reduce(n, raw, &phi);
        Cyc { n, coeffs: c }.canonical()
    }

    /// Sum of `m_k zeta_n^k` for integer multiplicities.
    pub fn from_exponent_counts(n: u32, counts: &[i64]) -> Self {
        let raw = counts
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        Cyc::from_raw(n, raw)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        (self.n == 1).then(|| self.coeffs[0].clone())
    }

    /// Coordinates in `Q(zeta_m)` for a multiple `m` of the conductor.
    fn lifted(&self, m: u32) -> Vec<BigRational> {
        if m == self.n {
            return self.coeffs.clone();
        }
        let step = (m / self.n) as usize;
        let mut raw = vec![BigRational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[(i * step) % m as usize] += c;
        }
        reduce(m, raw, &cyclotomic_polynomial(m))
    }

    /// Image under `zeta -> zeta^k` (`k` coprime to the conductor).
    pub fn galois(&self, k: i64) -> Self {
        let n = self.n as i64;
        let mut raw = vec![BigRational::zero(); self.n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[((i as i64) * k).rem_euclid(n) as usize] += c;
        }
        Cyc::from_raw(self.n, raw)
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Cyc::zero();
        }
        Cyc {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Exact multiplicative inverse, via the norm to `Q`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Internal("inverse of zero".into()));
        }
        // Product of the other Galois conjugates divided by the norm.
        let n = self.n;
        let mut others = Cyc::one();
        for k in 2..n as i64 {
            if (k as u32).gcd(&n) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (&others * self)
            .to_rational()
            .ok_or_else(|| Error::Internal("norm not rational".into()))?;
        Ok(others.scale(&(BigRational::one() / norm)))
    }

    fn canonical(mut self) -> Self {
        while self.n > 1 {
            match self.descend() {
                Some(c) => self = c,
                None => break,
            }
        }
        if self.is_zero() {
            return Cyc::zero();
        }
        self
    }

    /// Tries to rewrite the element over a proper subfield `Q(zeta_d)`.
    fn descend(&self) -> Option<Self> {
        let n = self.n;
        for d in divisors(n) {
            if d == n {
                break;
            }
            // Fixed by every zeta -> zeta^k with k = 1 mod d?
            let fixed = (1..n as i64)
                .filter(|&k| (k as u32).gcd(&n) == 1 && k as u32 % d == 1 % d)
                .all(|k| self.galois_raw(k) == self.coeffs);
            if !fixed {
                continue;
            }
            return Some(Cyc {
                n: d,
                coeffs: self.solve_in(d)?,
            });
        }
        None
    }

    fn galois_raw(&self, k: i64) -> Vec<BigRational> {
        let n = self.n as i64;
        let mut raw = vec![BigRational::zero(); self.n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[((i as i64) * k).rem_euclid(n) as usize] += c;
        }
        reduce(self.n, raw, &cyclotomic_polynomial(self.n))
    }

    /// Coordinates over `Q(zeta_d)` of an element known to lie there.
    fn solve_in(&self, d: u32) -> Option<Vec<BigRational>> {
        let pd = euler_phi(d);
        let pn = self.coeffs.len();
        // Columns: images of the basis of Q(zeta_d).
        let cols: Vec<Vec<BigRational>> = (0..pd)
            .map(|i| {
                let mut raw = vec![BigRational::zero(); d as usize];
                raw[i] = BigRational::one();
                Cyc {
                    n: d,
                    coeffs: reduce(d, raw, &cyclotomic_polynomial(d)),
                }
                .lifted(self.n)
            })
            .collect();
        // Augmented rows: pn equations, pd unknowns.
        let mut m: Vec<Vec<BigRational>> = (0..pn)
            .map(|r| {
                let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut piv_row = 0;
        let mut pivots = Vec::new();
        for col in 0..pd {
            let Some(p) = (piv_row..pn).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(piv_row, p);
            let inv = BigRational::one() / m[piv_row][col].clone();
            for x in m[piv_row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..pn {
                if r != piv_row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..=pd {
                        let v = &m[piv_row][c] * &f;
                        m[r][c] -= v;
                    }
                }
            }
            pivots.push(col);
            piv_row += 1;
        }
        if m[piv_row..].iter().any(|row| !row[pd].is_zero()) {
            return None;
        }
        let mut x = vec![BigRational::zero(); pd];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = m[r][pd].clone();
        }
        Some(x)
    }

    fn binary(
        &self,
        other: &Cyc,
        f: impl Fn(Vec<BigRational>, Vec<BigRational>, u32) -> Vec<BigRational>,
    ) -> Cyc {
        let m = self.n.lcm(&other.n);
        let a = self.lifted(m);
        let b = other.lifted(m);
        Cyc {
            n: m,
            coeffs: f(a, b, m),
        }
        .canonical()
    }

    /// Parses `1/2`, `E(3)`, `-2*E(12)^5 + E(12)^7 - 3` and similar.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::BadCharacterTable(format!("cannot parse cyclotomic `{s}`"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let bytes = t.as_bytes();
        let mut start = 0;
        let mut neg = false;
        if bytes[0] == b'+' || bytes[0] == b'-' {
            neg = bytes[0] == b'-';
            start = 1;
        }
        let mut depth = 0;
        for i in start..bytes.len() {
            match bytes[i] {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 && i > start && bytes[i - 1] != b'^' => {
                    terms.push((neg, &t[start..i]));
                    neg = bytes[i] == b'-';
                    start = i + 1;
                }
                _ => {}
            }
        }
        terms.push((neg, &t[start..]));
        let mut acc = Cyc::zero();
        for (neg, term) in terms {
            let mut val = Cyc::one();
            for factor in term.split('*') {
                let f = if let Some(rest) = factor.strip_prefix("E(") {
                    let close = rest.find(')').ok_or_else(bad)?;
                    let n: u32 = rest[..close].parse().map_err(|_| bad())?;
                    if n == 0 {
                        return Err(bad());
                    }
                    let tail = &rest[close + 1..];
                    let k: i64 = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse()
                            .map_err(|_| bad())?
                    };
                    Cyc::zeta(n, k)
                } else {
                    let q = parse_rational(factor).ok_or_else(bad)?;
                    Cyc::from_rational(q)
                };
                val = &val * &f;
            }
            acc = if neg { &acc - &val } else { &acc + &val };
        }
        Ok(acc)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (a, b) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let a: BigInt = a.parse().ok()?;
    let b: BigInt = b.parse().ok()?;
    if b.is_zero() {
        return None;
    }
    Some(BigRational::new(a, b))
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        // Representations are canonical, but compare by lifting for safety.
        if self.n == other.n {
            return self.coeffs == other.coeffs;
        }
        let m = self.n.lcm(&other.n);
        self.lifted(m) == other.lifted(m)
    }
}

impl Eq for Cyc {}

/// Structural order: conductor first, then coefficients in the power basis.
/// Consistent with equality because representations are canonical.
impl Ord for Cyc {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.n, &self.coeffs).cmp(&(other.n, &other.coeffs))
    }
}

impl PartialOrd for Cyc {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Cyc {
    type Output = Cyc;
    fn add(self, o: &Cyc) -> Cyc {
        self.binary(o, |a, b, _| {
            a.into_iter().zip(b).map(|(x, y)| x + y).collect()
        })
    }
}

impl Sub for &Cyc {
    type Output = Cyc;
    fn sub(self, o: &Cyc) -> Cyc {
        self.binary(o, |a, b, _| {
            a.into_iter().zip(b).map(|(x, y)| x - y).collect()
        })
    }
}

impl Mul for &Cyc {
    type Output = Cyc;
    fn mul(self, o: &Cyc) -> Cyc {
        self.binary(o, |a, b, m| {
            let mut raw = vec![BigRational::zero(); a.len() + b.len()];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    if !y.is_zero() {
                        raw[i + j] += x * y;
                    }
                }
            }
            reduce(m, raw, &cyclotomic_polynomial(m))
        })
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for Cyc {
    type Output = Cyc;
    fn add(self, o: Cyc) -> Cyc {
        &self + &o
    }
}

impl Sub for Cyc {
    type Output = Cyc;
    fn sub(self, o: Cyc) -> Cyc {
        &self - &o
    }
}

impl Mul for Cyc {
    type Output = Cyc;
    fn mul(self, o: Cyc) -> Cyc {
        &self * &o
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyc {
    /// GAP-style output, e.g. `-1/2 + E(3)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", fmt_rational(&a))?;
                continue;
            }
            if !a.is_one() {
                write!(f, "{}*", fmt_rational(&a))?;
            }
            if i == 1 {
                write!(f, "E({})", self.n)?;
            } else {
                write!(f, "E({})^{}", self.n, i)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..13 {
            let mut s = Cyc::zero();
            for k in 0..n {
                s = &s + &Cyc::zeta(n, k as i64);
            }
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn conductor_two_is_rational() {
        let m = Cyc::from_exponent_counts(2, &[3, 1]);
        assert_eq!(m.conductor(), 1);
        assert!(m.is_rational());
        assert_eq!(m, Cyc::from_int(2));
    }

    #[test]
    fn canonical_conductor() {
        // zeta_8 + zeta_8^7 = sqrt 2 lives in Q(zeta_8); zeta_6 = -zeta_3^2.
        let z6 = Cyc::zeta(6, 1);
        assert_eq!(z6.conductor(), 3);
        assert_eq!(z6, -Cyc::zeta(3, 2));
        let i = Cyc::zeta(4, 1);
        assert_eq!(&i * &i, Cyc::from_int(-1));
        assert!((&i * &i).is_rational());
        let r = &Cyc::zeta(8, 1) + &Cyc::zeta(8, 7);
        assert_eq!(&r * &r, Cyc::from_int(2));
    }

    #[test]
    fn conj_and_inverse() {
        let w = Cyc::zeta(3, 1);
        assert_eq!(&w * &w.conj(), Cyc::one());
        let x = &Cyc::from_int(2) + &w;
        let y = x.inverse().unwrap();
        assert_eq!(&x * &y, Cyc::one());
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in [
            "0",
            "1",
            "-1/2",
            "E(3)",
            "-1 - E(3)",
            "2*E(5)^2 + E(5)^3",
            "E(12)^7",
        ] {
            let c = Cyc::parse(s).unwrap();
            let back = Cyc::parse(&c.to_string()).unwrap();
            assert_eq!(c, back, "{s}");
        }
        assert_eq!(Cyc::parse("-1 - E(3)").unwrap(), Cyc::zeta(3, 2));
        assert!(Cyc::parse("E(0)").is_err());
        assert!(Cyc::parse("x").is_err());
    }
}
