use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

use super::RootSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// An irreducible Cartan type with a rank valid for its series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    series: Series,
    rank: usize,
}

impl CartanType {
    /// Strict constructor: `B1`, `C1`, `C2`, `D2`, `D3` are rejected here; use
    /// [`CartanType::normalized`] to fold them onto their standard names.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::InvalidCartanType {
                series: series.letter(),
                rank,
            })
        }
    }

    /// Folds low-rank coincidences: `B1 = C1 = A1`, `C2 = B2`, `D2 = A1×A1`,
    /// `D3 = A3`. Rank zero (and `D1`, a torus) gives no components.
    pub fn normalized(series: Series, rank: usize) -> Result<Vec<CartanType>> {
        let a = |r| CartanType {
            series: Series::A,
            rank: r,
        };
        Ok(match (series, rank) {
            (_, 0) => Vec::new(),
            (Series::B | Series::C, 1) => vec![a(1)],
            (Series::C, 2) => vec![CartanType {
                series: Series::B,
                rank: 2,
            }],
            (Series::D, 1) => Vec::new(),
            (Series::D, 2) => vec![a(1), a(1)],
            (Series::D, 3) => vec![a(3)],
            _ => vec![CartanType::new(series, rank)?],
        })
    }

    pub fn series(self) -> Series {
        self.series
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.series, Series::A | Series::D | Series::E)
    }

    /// Squared lengths of the simple roots and the edges of the diagram.
    pub(crate) fn simple_data(self) -> (Vec<i64>, Vec<(usize, usize)>) {
        let n = self.rank;
        let chain: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        match self.series {
            Series::A => (vec![2; n], chain),
            Series::B => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                (d, chain)
            }
            Series::C => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                (d, chain)
            }
            Series::D => {
                let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                (vec![2; n], e)
            }
            Series::E => {
                let all = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
                let e = all
                    .iter()
                    .copied()
                    .filter(|&(i, j)| i < n && j < n)
                    .collect();
                (vec![2; n], e)
            }
            Series::F => (vec![2, 2, 1, 1], chain),
            Series::G => (vec![1, 3], chain),
        }
    }

    /// Order of the Weyl group by the classical formula.
    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
            Series::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1152,
            Series::G => 12,
        }
    }

    /// Number of roots by the classical formula.
    pub fn root_count(self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1),
            Series::B | Series::C => 2 * n * n,
            Series::D => 2 * n * (n - 1),
            Series::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Series::F => 48,
            Series::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl core::str::FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = chars
            .next()
            .and_then(Series::from_letter)
            .ok_or_else(|| Error::UnknownTypeLabel(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::UnknownTypeLabel(s.to_string()))?;
        CartanType::new(series, rank)
    }
}

/// One irreducible component of a subsystem, with its simple roots listed in
/// Bourbaki order. `short` marks type-A components made of short roots in a
/// system with two root lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub cartan: CartanType,
    pub short: bool,
    pub order: Vec<usize>,
}

impl Component {
    pub fn key(&self) -> (CartanType, bool) {
        (self.cartan, self.short)
    }
}

/// Multiset of component types, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeDecomposition {
    parts: Vec<(CartanType, bool)>,
}

impl TypeDecomposition {
    pub fn new(mut parts: Vec<(CartanType, bool)>) -> Self {
        parts.sort_by(|a, b| b.0.rank.cmp(&a.0.rank).then(a.cmp(b)));
        TypeDecomposition { parts }
    }

    pub fn parts(&self) -> &[(CartanType, bool)] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().map(|p| p.0.rank).sum()
    }

    /// Ignoring root lengths.
    pub fn cartan_types(&self) -> Vec<CartanType> {
        let mut v: Vec<CartanType> = self.parts.iter().map(|p| p.0).collect();
        v.sort();
        v
    }

    pub fn non_a_count(&self) -> usize {
        self.parts
            .iter()
            .filter(|p| p.0.series != Series::A)
            .count()
    }
}

impl fmt::Display for TypeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        for (i, (t, short)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "×")?;
            }
            if *short {
                write!(f, "Ã{}", t.rank)?;
            } else {
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum LengthReq {
    Short,
    Any,
}

/// A target type such as `A3×A1×A3`, `(A1)^4`, `A1×~A1` or `A2 x A2`.
///
/// A tilde requires the component to consist of short roots; a plain `A`
/// label accepts either length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypePattern {
    parts: Vec<(CartanType, LengthReq)>,
}

impl TypePattern {
    pub fn from_types(types: &[CartanType]) -> Self {
        TypePattern {
            parts: types.iter().map(|&t| (t, LengthReq::Any)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().map(|p| p.0.rank).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::UnknownTypeLabel(s.to_string());
        let norm = s.replace('×', "x").replace('*', "x").replace(' ', "");
        let mut parts = Vec::new();
        if norm.is_empty() || norm == "∅" || norm == "T" {
            return Ok(TypePattern { parts });
        }
        for tok in norm.split(|c| c == 'x' || c == 'X') {
            if tok.is_empty() {
                return Err(bad());
            }
            let (body, power) = match tok.rfind('^') {
                Some(k) => (&tok[..k], tok[k + 1..].parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let body = body.trim_start_matches('(').trim_end_matches(')');
            let (short, body) = if let Some(rest) = body.strip_prefix('~') {
                (true, rest)
            } else if let Some(rest) = body.strip_prefix('Ã') {
                (true, rest)
            } else {
                (false, body)
            };
            let body = if short {
                format!("A{body}")
            } else {
                body.to_string()
            };
            let mut chars = body.chars();
            let series = chars.next().and_then(Series::from_letter).ok_or_else(bad)?;
            let rank: usize = chars
                .as_str()
                .trim_start_matches('_')
                .parse()
                .map_err(|_| bad())?;
            let req = if short {
                LengthReq::Short
            } else {
                LengthReq::Any
            };
            for _ in 0..power {
                for t in CartanType::normalized(series, rank)? {
                    parts.push((t, req));
                }
            }
        }
        parts.sort();
        Ok(TypePattern { parts })
    }

    /// Whether a decomposition matches: same Cartan types, and every
    /// tilde-marked component is matched by a short one.
    pub fn matches(&self, d: &TypeDecomposition) -> bool {
        let mut mine: Vec<CartanType> = self.parts.iter().map(|p| p.0).collect();
        mine.sort();
        if mine != d.cartan_types() {
            return false;
        }
        // Per Cartan type, the number of short components must cover the
        // number of tilde requirements.
        for &(t, req) in &self.parts {
            if req != LengthReq::Short {
                continue;
            }
            let need = self
                .parts
                .iter()
                .filter(|p| p.0 == t && p.1 == LengthReq::Short)
                .count();
            let have = d.parts().iter().filter(|p| p.0 == t && p.1).count();
            if have < need {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for TypePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self
            .parts
            .iter()
            .map(|(t, r)| match r {
                LengthReq::Short => format!("Ã{}", t.rank),
                LengthReq::Any => t.to_string(),
            })
            .collect();
        write!(f, "{}", s.join("×"))
    }
}

/// All permutations `s` with `c[s(i)][s(j)] = c[i][j]`, identity first.
pub(crate) fn matrix_automorphisms(c: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = c.len();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(c: &[Vec<i64>], cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = c.len();
        let i = cur.len();
        if i == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if used[v] || c[v][v] != c[i][i] {
                continue;
            }
            if (0..i).all(|j| c[cur[j]][v] == c[j][i] && c[v][cur[j]] == c[i][j]) {
                used[v] = true;
                cur.push(v);
                rec(c, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(c, &mut cur, &mut used, &mut out);
    out
}

/// Splits a set of roots forming a base of a subsystem into irreducible
/// components, each listed in Bourbaki order.
pub(crate) fn identify_components(rs: &RootSystem, base: &[usize]) -> Result<Vec<Component>> {
    let k = base.len();
    let mut comp = vec![usize::MAX; k];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..k {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for y in 0..k {
                if comp[y] == usize::MAX && rs.pairing(base[x], base[y]) != 0 {
                    comp[y] = id;
                    members.push(y);
                }
            }
            i += 1;
        }
        comps.push(members.into_iter().map(|m| base[m]).collect());
    }
    let two_lengths = !rs.cartan_type().is_simply_laced();
    let maxn = rs.max_norm();
    comps
        .iter()
        .map(|nodes| {
            let mut c = identify_irreducible(rs, nodes)?;
            if c.cartan.series == Series::A && two_lengths {
                c.short = rs.norm2(nodes[0]) < maxn;
            }
            Ok(c)
        })
        .collect()
}

fn identify_irreducible(rs: &RootSystem, nodes: &[usize]) -> Result<Component> {
    let k = nodes.len();
    let internal = || Error::Internal(format!("roots {nodes:?} do not form a base"));
    let bond = |a: usize, b: usize| rs.pairing(a, b) * rs.pairing(b, a);
    let nbrs = |a: usize| -> Vec<usize> {
        nodes
            .iter()
            .copied()
            .filter(|&b| b != a && rs.pairing(a, b) != 0)
            .collect()
    };
    for &a in nodes {
        for &b in nodes {
            if a != b && rs.pairing(a, b) > 0 {
                return Err(internal());
            }
        }
    }
    let make = |series: Series, order: Vec<usize>| -> Result<Component> {
        Ok(Component {
            cartan: CartanType::new(series, order.len())?,
            short: false,
            order,
        })
    };
    if k == 1 {
        return make(Series::A, nodes.to_vec());
    }
    let mut max_bond = 0;
    let mut heavy = (0, 0);
    for &a in nodes {
        for &b in nodes {
            if a < b && bond(a, b) > max_bond {
                max_bond = bond(a, b);
                heavy = (a, b);
            }
        }
    }
    let walk = |start: usize| -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next: Vec<usize> = nbrs(cur).into_iter().filter(|&b| b != prev).collect();
            if next.len() != 1 {
                break;
            }
            prev = cur;
            cur = next[0];
            order.push(cur);
        }
        order
    };
    let ends: Vec<usize> = nodes
        .iter()
        .copied()
        .filter(|&a| nbrs(a).len() == 1)
        .collect();
    let long = |a: usize, b: usize| {
        if rs.norm2(a) > rs.norm2(b) {
            (a, b)
        } else {
            (b, a)
        }
    };
    match max_bond {
        3 => {
            if k != 2 {
                return Err(internal());
            }
            let (l, s) = long(heavy.0, heavy.1);
            make(Series::G, vec![s, l])
        }
        2 => {
            let (l, s) = long(heavy.0, heavy.1);
            if k == 2 {
                return make(Series::B, vec![l, s]);
            }
            if ends.len() != 2 || nodes.iter().any(|&a| nbrs(a).len() > 2) {
                return Err(internal());
            }
            let l_end = nbrs(l).len() == 1;
            let s_end = nbrs(s).len() == 1;
            if !l_end && !s_end {
                if k != 4 {
                    return Err(internal());
                }
                let start = ends
                    .iter()
                    .copied()
                    .find(|&e| rs.norm2(e) == rs.norm2(l))
                    .unwrap();
                make(Series::F, walk(start))
            } else if s_end {
                let start = ends.iter().copied().find(|&e| e != s).unwrap();
                make(Series::B, walk(start))
            } else {
                let start = ends.iter().copied().find(|&e| e != l).unwrap();
                make(Series::C, walk(start))
            }
        }
        1 => {
            let branch: Vec<usize> = nodes
                .iter()
                .copied()
                .filter(|&a| nbrs(a).len() >= 3)
                .collect();
            if branch.is_empty() {
                if ends.len() != 2 {
                    return Err(internal());
                }
                return make(Series::A, walk(ends[0]));
            }
            if branch.len() != 1 || nbrs(branch[0]).len() != 3 {
                return Err(internal());
            }
            let b = branch[0];
            // Arms as paths leaving the branch node.
            let mut arms: Vec<Vec<usize>> = nbrs(b)
                .into_iter()
                .map(|first| {
                    let mut arm = vec![first];
                    let mut prev = b;
                    let mut cur = first;
                    loop {
                        let nx: Vec<usize> = nbrs(cur).into_iter().filter(|&x| x != prev).collect();
                        if nx.len() != 1 {
                            break;
                        }
                        prev = cur;
                        cur = nx[0];
                        arm.push(cur);
                    }
                    arm
                })
                .collect();
            arms.sort_by_key(|a| a.len());
            let lens = (arms[0].len(), arms[1].len(), arms[2].len());
            match lens {
                (1, 1, _) => {
                    let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
                    order.push(b);
                    order.push(arms[0][0]);
                    order.push(arms[1][0]);
                    make(Series::D, order)
                }
                (1, 2, 2) | (1, 2, 3) | (1, 2, 4) => {
                    let mut order = vec![arms[1][1], arms[0][0], arms[1][0], b];
                    order.extend(arms[2].iter().copied());
                    make(Series::E, order)
                }
                _ => Err(internal()),
            }
        }
        _ => Err(internal()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(
            CartanType::normalized(Series::D, 3).unwrap(),
            vec![CartanType::new(Series::A, 3).unwrap()]
        );
        assert_eq!(CartanType::normalized(Series::D, 2).unwrap().len(), 2);
        assert!(CartanType::normalized(Series::D, 1).unwrap().is_empty());
        assert!(CartanType::new(Series::E, 5).is_err());
    }

    #[test]
    fn pattern_parsing() {
        let p = TypePattern::parse("(A1)^4").unwrap();
        assert_eq!(p.len(), 4);
        let q = TypePattern::parse("A3×A1×A3").unwrap();
        assert_eq!(q.rank(), 7);
        let g = TypePattern::parse("A1×Ã1").unwrap();
        let a1 = CartanType::new(Series::A, 1).unwrap();
        assert!(g.matches(&TypeDecomposition::new(vec![(a1, false), (a1, true)])));
        assert!(!g.matches(&TypeDecomposition::new(vec![(a1, false), (a1, false)])));
        assert!(TypePattern::parse("Q7").is_err());
    }

    #[test]
    fn automorphism_counts() {
        for (s, n, k) in [
            (Series::A, 4, 2),
            (Series::D, 4, 6),
            (Series::D, 5, 2),
            (Series::E, 6, 2),
            (Series::E, 7, 1),
            (Series::B, 3, 1),
        ] {
            let rs = RootSystem::new(CartanType::new(s, n).unwrap());
            assert_eq!(rs.diagram_automorphisms().len(), k, "{s:?}{n}");
        }
    }

    #[test]
    fn identify_simple_systems_in_bourbaki_order() {
        for (s, n) in [
            (Series::A, 3),
            (Series::B, 4),
            (Series::C, 3),
            (Series::D, 5),
            (Series::E, 6),
            (Series::E, 8),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            let t = CartanType::new(s, n).unwrap();
            let rs = RootSystem::new(t);
            let comps = identify_components(&rs, &rs.simple_roots()).unwrap();
            assert_eq!(comps.len(), 1);
            assert_eq!(comps[0].cartan, t);
            let c = rs.cartan_matrix();
            let o = &comps[0].order;
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(c[o[i]][o[j]], c[i][j]);
                }
            }
        }
    }
}
