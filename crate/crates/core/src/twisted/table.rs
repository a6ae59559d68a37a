//! Exact character tables of small groups.
//!
//! Central characters are common eigenvectors of the class multiplication
//! matrices. They are computed over a prime field `F_q` with `q = 1 mod e`
//! (`e` the exponent) and `q > |G|`, then each value is lifted to `Q(zeta_o)`
//! from the eigenvalue multiplicities of `rho(g)`, which are integers between
//! 0 and the degree.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclotomic::Cyc;
use crate::error::{Error, Result};
use crate::group::IndexedGroup;

/// Largest group order accepted by [`CharacterTable::compute`].
pub const ORDER_LIMIT: usize = 10_000;

/// A finite group given by its multiplication, elements `0..order`, 0 the
/// identity.
pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;

    fn pow(&self, a: usize, e: usize) -> usize {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

impl FiniteGroup for IndexedGroup {
    fn order(&self) -> usize {
        IndexedGroup::order(self)
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        IndexedGroup::mul(self, a, b)
    }
    fn inv(&self, a: usize) -> usize {
        IndexedGroup::inv(self, a)
    }
}

/// Conjugacy classes ordered by least element (so the identity class is 0),
/// and the class of every element.
pub fn conjugacy_classes<G: FiniteGroup>(g: &G) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut cls = Vec::new();
        for x in 0..n {
            let c = g.mul(g.mul(x, a), g.inv(x));
            if class_of[c] == usize::MAX {
                class_of[c] = id;
                cls.push(c);
            }
        }
        cls.sort_unstable();
        classes.push(cls);
    }
    (classes, class_of)
}

/// Irreducible characters as class functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub group_order: usize,
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// `characters[i][c]`: value of character `i` on class `c`.
    pub characters: Vec<Vec<Cyc>>,
}

impl CharacterTable {
    pub fn compute<G: FiniteGroup>(g: &G) -> Result<Self> {
        let n = g.order();
        if n > ORDER_LIMIT {
            return Err(Error::GroupTooLarge { order: n as u128, limit: ORDER_LIMIT as u128 });
        }
        let (classes, class_of) = conjugacy_classes(g);
        let characters = dixon(g, &classes, &class_of)?;
        let t = CharacterTable { group_order: n, classes, class_of, characters };
        t.check_orthogonality()?;
        Ok(t)
    }

    /// A table supplied from outside: `reps[c]` is an element of class `c`
    /// and `values[i][c]` the value of character `i` there. Classes are
    /// reordered to the internal order; the result must pass both
    /// orthogonality relations.
    pub fn from_supplied<G: FiniteGroup>(g: &G, reps: &[usize], values: Vec<Vec<Cyc>>) -> Result<Self> {
        let (classes, class_of) = conjugacy_classes(g);
        let k = classes.len();
        if reps.len() != k {
            return Err(Error::BadCharacterTable(alloc::format!("{} classes supplied, group has {k}", reps.len())));
        }
        let mut perm = vec![usize::MAX; k];
        for (i, &r) in reps.iter().enumerate() {
            let c = *class_of.get(r).ok_or_else(|| Error::BadCharacterTable("representative out of range".into()))?;
            if perm[c] != usize::MAX {
                return Err(Error::BadCharacterTable("two representatives of one class".into()));
            }
            perm[c] = i;
        }
        if values.len() != k || values.iter().any(|row| row.len() != k) {
            return Err(Error::BadCharacterTable("table is not square in the number of classes".into()));
        }
        let characters = values.into_iter().map(|row| perm.iter().map(|&i| row[i].clone()).collect()).collect();
        let t = CharacterTable { group_order: g.order(), classes, class_of, characters };
        t.check_orthogonality()?;
        Ok(t)
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn degree(&self, i: usize) -> Cyc {
        self.characters[i][0].clone()
    }

    pub fn value(&self, i: usize, element: usize) -> &Cyc {
        &self.characters[i][self.class_of[element]]
    }

    /// Both orthogonality relations, exactly.
    pub fn check_orthogonality(&self) -> Result<()> {
        let k = self.classes.len();
        let bad = |m: &str| Err(Error::BadCharacterTable(m.into()));
        if self.characters.len() != k {
            return bad("number of characters differs from number of classes");
        }
        let sizes: Vec<Cyc> = self.classes.iter().map(|c| Cyc::from_int(c.len() as i64)).collect();
        let order = Cyc::from_int(self.group_order as i64);
        for i in 0..k {
            for j in i..k {
                let mut s = Cyc::zero();
                for c in 0..k {
                    s = &s + &(&sizes[c] * &(&self.characters[i][c] * &self.characters[j][c].conj()));
                }
                let want = if i == j { order.clone() } else { Cyc::zero() };
                if s != want {
                    return bad("row orthogonality fails");
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let mut s = Cyc::zero();
                for row in &self.characters {
                    s = &s + &(&row[a] * &row[b].conj());
                }
                let want = if a == b {
                    Cyc::from_rational(BigRational::new(
                        BigInt::from(self.group_order),
                        BigInt::from(self.classes[a].len()),
                    ))
                } else {
                    Cyc::zero()
                };
                if s != want {
                    return bad("column orthogonality fails");
                }
            }
        }
        Ok(())
    }
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A primitive `e`-th root of unity modulo `q`.
fn root_of_unity(e: u64, q: u64) -> u64 {
    let fs = prime_factors(q - 1);
    let g = (2..q).find(|&g| fs.iter().all(|&f| pow_mod(g, (q - 1) / f, q) != 1)).unwrap_or(1);
    pow_mod(g, (q - 1) / e, q)
}

/// Reduced column echelon form of a list of independent vectors: returns the
/// new vectors and pivot rows with `cols[a][piv[b]] = delta_ab`.
fn echelon(mut cols: Vec<Vec<u64>>, q: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let len = cols.first().map_or(0, Vec::len);
    let mut piv = Vec::new();
    let mut row = 0;
    for a in 0..cols.len() {
        while row < len && (a..cols.len()).all(|c| cols[c][row] == 0) {
            row += 1;
        }
        if row == len {
            break;
        }
        let c = (a..cols.len()).find(|&c| cols[c][row] != 0).unwrap();
        cols.swap(a, c);
        let inv = inv_mod(cols[a][row], q);
        for x in cols[a].iter_mut() {
            *x = *x * inv % q;
        }
        for b in 0..cols.len() {
            if b != a && cols[b][row] != 0 {
                let f = cols[b][row];
                for i in 0..len {
                    cols[b][i] = (cols[b][i] + q - f * cols[a][i] % q) % q;
                }
            }
        }
        piv.push(row);
        row += 1;
    }
    (cols, piv)
}

/// Basis of the null space of a square matrix.
fn nullspace(mut m: Vec<Vec<u64>>, q: u64) -> Vec<Vec<u64>> {
    let d = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..d {
        let Some(p) = (r..d).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = inv_mod(m[r][c], q);
        for x in m[r].iter_mut() {
            *x = *x * inv % q;
        }
        for i in 0..d {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..d {
                    m[i][j] = (m[i][j] + q - f * m[r][j] % q) % q;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; d];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (q - m[i][f]) % q;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial (low degree first) through Hessenberg form.
fn charpoly(mut h: Vec<Vec<u64>>, q: u64) -> Vec<u64> {
    let n = h.len();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], q);
        for i in m + 1..n {
            let u = h[i][m - 1] * inv % q;
            if u == 0 {
                continue;
            }
            for j in 0..n {
                h[i][j] = (h[i][j] + q - u * h[m][j] % q) % q;
            }
            for row in h.iter_mut() {
                row[m] = (row[m] + u * row[i]) % q;
            }
        }
    }
    // p[k] is the characteristic polynomial of the leading k x k block.
    let mut p: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let mut next = vec![0u64; k + 1];
        for (i, &c) in p[k - 1].iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % q;
            next[i] = (next[i] + q - c * h[k - 1][k - 1] % q) % q;
        }
        let mut t = 1u64;
        for i in (1..k).rev() {
            t = t * h[i][i - 1] % q;
            let f = t * h[i - 1][k - 1] % q;
            for (j, &c) in p[i - 1].iter().enumerate() {
                next[j] = (next[j] + q - f * c % q) % q;
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

fn eval(poly: &[u64], x: u64, q: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % q)
}

fn dixon<G: FiniteGroup>(g: &G, classes: &[Vec<usize>], class_of: &[usize]) -> Result<Vec<Vec<Cyc>>> {
    let n = g.order();
    let k = classes.len();
    let e = (0..n).fold(1u64, |acc, a| num_integer::lcm(acc, g.element_order(a) as u64));
    let mut q = e * ((n as u64 / e) + 1) + 1;
    while !is_prime(q) {
        q += e;
    }
    // Class multiplication matrices: mats[j][r][s] = #{x in C_j : x^-1 g_s in C_r}.
    let mut mats = vec![vec![vec![0u64; k]; k]; k];
    for s in 0..k {
        let gs = classes[s][0];
        for x in 0..n {
            let y = g.mul(g.inv(x), gs);
            mats[class_of[x]][class_of[y]][s] += 1;
        }
    }
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut v = vec![0u64; k];
            v[i] = 1;
            v
        })
        .collect()];
    for mat in &mats {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for sp in spaces {
            if sp.len() == 1 {
                next.push(sp);
                continue;
            }
            let (basis, piv) = echelon(sp, q);
            let d = basis.len();
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|col| (0..k).map(|r| (0..k).fold(0, |acc, s| (acc + mat[r][s] * col[s]) % q)).collect())
                .collect();
            let restricted: Vec<Vec<u64>> = (0..d).map(|a| (0..d).map(|b| images[b][piv[a]]).collect()).collect();
            let poly = charpoly(restricted.clone(), q);
            let mut total = 0;
            for lambda in (0..q).filter(|&x| eval(&poly, x, q) == 0) {
                let mut shifted = restricted.clone();
                for (a, row) in shifted.iter_mut().enumerate() {
                    row[a] = (row[a] + q - lambda) % q;
                }
                let ns = nullspace(shifted, q);
                total += ns.len();
                let vecs: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|x| {
                        (0..k).map(|i| (0..d).fold(0, |acc, b| (acc + x[b] * basis[b][i]) % q)).collect()
                    })
                    .collect();
                next.push(vecs);
            }
            if total != d {
                return Err(Error::Internal("class algebra did not split over the prime field".into()));
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::Internal("central characters not separated".into()));
    }
    let inv_class: Vec<usize> = (0..k).map(|c| class_of[g.inv(classes[c][0])]).collect();
    let z = root_of_unity(e, q);
    let mut out = Vec::with_capacity(k);
    for sp in spaces {
        let v = &sp[0];
        let norm = inv_mod(v[0], q);
        let w: Vec<u64> = v.iter().map(|x| x * norm % q).collect();
        let s = (0..k).fold(0, |acc, c| {
            (acc + w[c] * w[inv_class[c]] % q * inv_mod(classes[c].len() as u64, q)) % q
        });
        let d2 = n as u64 % q * inv_mod(s, q) % q;
        let deg = (1..=n as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|d| d * d % q == d2)
            .ok_or_else(|| Error::Internal("no degree fits".into()))?;
        let chi: Vec<u64> =
            (0..k).map(|c| deg * w[c] % q * inv_mod(classes[c].len() as u64, q) % q).collect();
        let mut row = Vec::with_capacity(k);
        for c in 0..k {
            let rep = classes[c][0];
            let o = g.element_order(rep) as u64;
            let zo = pow_mod(z, e / o, q);
            let powers: Vec<u64> = (0..o).map(|l| chi[class_of[g.pow(rep, l as usize)]]).collect();
            let inv_o = inv_mod(o, q);
            let mut counts = Vec::with_capacity(o as usize);
            for m in 0..o {
                let mut acc = 0;
                for (l, &x) in powers.iter().enumerate() {
                    let exp = (o - (m * l as u64) % o) % o;
                    acc = (acc + x * pow_mod(zo, exp, q)) % q;
                }
                let mult = acc * inv_o % q;
                if mult > deg {
                    return Err(Error::Internal("eigenvalue multiplicity out of range".into()));
                }
                counts.push(mult as i64);
            }
            row.push(Cyc::from_exponent_counts(o as u32, &counts));
        }
        out.push(row);
    }
    // Trivial character first, then by degree and values.
    out.sort_by(|a, b| {
        let ta = a.iter().all(|x| *x == Cyc::one());
        let tb = b.iter().all(|x| *x == Cyc::one());
        tb.cmp(&ta).then_with(|| a[0].cmp(&b[0])).then_with(|| a.cmp(b))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn group(deg: usize, gens: &[&[&[usize]]]) -> IndexedGroup {
        let g: Vec<Perm> = gens.iter().map(|c| Perm::from_cycles(deg, c).unwrap()).collect();
        IndexedGroup::generate(deg, &g).unwrap()
    }

    fn degrees(t: &CharacterTable) -> Vec<i64> {
        let mut d: Vec<i64> = (0..t.num_classes())
            .map(|i| t.degree(i).to_rational().unwrap().to_integer().try_into().unwrap())
            .collect();
        d.sort();
        d
    }

    #[test]
    fn small_tables() {
        let s3 = group(3, &[&[&[0, 1]], &[&[0, 1, 2]]]);
        let t = CharacterTable::compute(&s3).unwrap();
        assert_eq!(degrees(&t), [1, 1, 2]);
        let z4 = group(4, &[&[&[0, 1, 2, 3]]]);
        let t = CharacterTable::compute(&z4).unwrap();
        assert_eq!(degrees(&t), [1, 1, 1, 1]);
        assert!(t.characters.iter().flatten().any(|x| *x == Cyc::zeta(4, 1)));
        // W(B2) as the dihedral group of the square.
        let d8 = group(4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]);
        let t = CharacterTable::compute(&d8).unwrap();
        assert_eq!(degrees(&t), [1, 1, 1, 1, 2]);
        let s4 = group(4, &[&[&[0, 1]], &[&[0, 1, 2, 3]]]);
        assert_eq!(degrees(&CharacterTable::compute(&s4).unwrap()), [1, 1, 2, 3, 3]);
    }

    #[test]
    fn supplied_table_is_validated() {
        let z3 = group(3, &[&[&[0, 1, 2]]]);
        let t = CharacterTable::compute(&z3).unwrap();
        let reps: Vec<usize> = t.classes.iter().map(|c| c[0]).collect();
        let back = CharacterTable::from_supplied(&z3, &reps, t.characters.clone()).unwrap();
        assert_eq!(back, t);
        let mut broken = t.characters.clone();
        broken[1][1] = Cyc::one();
        assert!(CharacterTable::from_supplied(&z3, &reps, broken).is_err());
    }

    #[test]
    fn charpoly_of_companion() {
        // x^2 - 3x + 2 over F_7.
        let p = charpoly(vec![vec![0, 5], vec![1, 3]], 7);
        assert_eq!(p, [2, 4, 1]);
    }
}
