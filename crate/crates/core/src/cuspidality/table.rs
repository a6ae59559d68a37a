//! Regeneration of the list of Levi subgroups carrying cuspidal pairs,
//! together with the types of the pseudo-Levi subgroups that go with them.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{classify_character, is_square, is_triangular, splits, CharKind, GroupDescription};
use crate::error::{Error, Result};
use crate::lattice::{component_group_generators, p_prime_part, Isogeny, RootDatum};
use crate::root_system::{
    levi_subsets_up_to_conjugacy, CartanType, Conjugacy, RootSystem, Series, TypeDecomposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PCond {
    Any,
    Ne(u64),
    Eq(u64),
}

impl PCond {
    fn holds(self, p: u64) -> bool {
        match self {
            PCond::Any => true,
            PCond::Ne(q) => p != q,
            PCond::Eq(q) => p == q,
        }
    }
}

struct ExceptionalRow {
    series: Series,
    rank: usize,
    kind: CharKind,
    levi: &'static str,
    m: &'static [(&'static str, PCond)],
}

use CharKind::{Nontrivial as NT, Trivial as TR};
use PCond::{Any, Eq as P, Ne as NotP};

const D4_ROW: &[(&str, PCond)] = &[("(A1)^4", NotP(2)), ("D4", P(2))];
const E6_ROW: &[(&str, PCond)] = &[("(A2)^3", NotP(3)), ("E6", P(3))];
const E7_ROW: &[(&str, PCond)] = &[("(A3)^2×A1", NotP(2)), ("E7", P(2))];

const EXCEPTIONAL: &[ExceptionalRow] = &[
    ExceptionalRow {
        series: Series::E,
        rank: 6,
        kind: NT,
        levi: "(A2)^2",
        m: &[("(A2)^2", Any)],
    },
    ExceptionalRow {
        series: Series::E,
        rank: 6,
        kind: NT,
        levi: "E6",
        m: &[("A5×A1", NotP(2)), ("E6", Any)],
    },
    ExceptionalRow {
        series: Series::E,
        rank: 6,
        kind: TR,
        levi: "D4",
        m: D4_ROW,
    },
    ExceptionalRow {
        series: Series::E,
        rank: 6,
        kind: TR,
        levi: "E6",
        m: E6_ROW,
    },
    ExceptionalRow {
        series: Series::E,
        rank: 7,
        kind: NT,
        levi: "(A1)^3",
        m: &[("(A1)^3", Any)],
    },
    ExceptionalRow {
        series: Series::E,
        rank: 7,
        kind: NT,
        levi: "E7",
        m: &[("A5×A2", NotP(3)), ("E7", P(3))],
    },
    ExceptionalRow {
        series: Series::E,
        rank: 7,
        kind: TR,
        levi: "D4",
        m: D4_ROW,
    },
    ExceptionalRow {
        series: Series::E,
        rank: 7,
        kind: TR,
        levi: "E6",
        m: E6_ROW,
    },
    ExceptionalRow {
        series: Series::E,
        rank: 7,
        kind: TR,
        levi: "E7",
        m: E7_ROW,
    },
    ExceptionalRow {
        series: Series::E,
        rank: 8,
        kind: TR,
        levi: "D4",
        m: D4_ROW,
    },
    ExceptionalRow {
        series: Series::E,
        rank: 8,
        kind: TR,
        levi: "E6",
        m: E6_ROW,
    },
    ExceptionalRow {
        series: Series::E,
        rank: 8,
        kind: TR,
        levi: "E7",
        m: E7_ROW,
    },
    ExceptionalRow {
        series: Series::E,
        rank: 8,
        kind: TR,
        levi: "E8",
        m: &[
            ("(A4)^2", Any),
            ("A5×A2×A1", Any),
            ("D5×A3", Any),
            ("D8", Any),
            ("E6×A2", Any),
            ("E7×A1", Any),
            ("E8", Any),
        ],
    },
    ExceptionalRow {
        series: Series::F,
        rank: 4,
        kind: TR,
        levi: "B2",
        m: &[("(A1)^2", NotP(2)), ("B2", P(2))],
    },
    ExceptionalRow {
        series: Series::F,
        rank: 4,
        kind: TR,
        levi: "F4",
        m: &[
            ("C3×A1", Any),
            ("A2×A2", Any),
            ("A3×A1", Any),
            ("B4", Any),
            ("F4", Any),
        ],
    },
    ExceptionalRow {
        series: Series::G,
        rank: 2,
        kind: TR,
        levi: "G2",
        m: &[("A1×Ã1", Any), ("A2", Any), ("G2", Any)],
    },
];

/// A Levi subgroup class admitting a cuspidal pair for characters of the
/// given kind, with the matching row data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspidalLeviRecord {
    /// Simple roots of a representative.
    pub levi_nodes: Vec<usize>,
    pub levi_label: String,
    /// Restriction of the character to the center of the ambient group.
    pub character: CharKind,
    pub condition: String,
    pub m_types: Vec<String>,
    /// False when no row of the reference table describes this class.
    pub in_table: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1 {
    pub group: String,
    pub p: u64,
    pub records: Vec<CuspidalLeviRecord>,
    pub notes: Vec<String>,
}

impl Table1 {
    /// One line per record: `levi | character | M1, M2, ...`.
    pub fn summary_lines(&self) -> Vec<String> {
        self.records
            .iter()
            .map(|r| {
                format!(
                    "{} | {} | {}",
                    r.levi_label,
                    r.character,
                    r.m_types.join(", ")
                )
            })
            .collect()
    }
}

impl fmt::Display for Table1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (p = {})", self.group, self.p)?;
        for r in &self.records {
            writeln!(
                f,
                "  L = {} {:?}  chi: {}  [{}]  M: {}{}",
                r.levi_label,
                r.levi_nodes,
                r.character,
                r.condition,
                r.m_types.join(", "),
                if r.in_table { "" } else { "  (no table row)" }
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Joins atoms such as `A1`, `A1`, `B2` into `(A1)^2×B2`, keeping the order
/// of first appearance. The empty product is the torus `T`.
fn power_label(atoms: &[String]) -> String {
    let mut groups: Vec<(String, usize)> = Vec::new();
    for a in atoms {
        match groups.iter_mut().find(|(s, _)| s == a) {
            Some(g) => g.1 += 1,
            None => groups.push((a.clone(), 1)),
        }
    }
    if groups.is_empty() {
        return "T".to_string();
    }
    groups
        .iter()
        .map(|(s, k)| {
            if *k == 1 {
                s.clone()
            } else {
                format!("({s})^{k}")
            }
        })
        .collect::<Vec<_>>()
        .join("×")
}

/// Label of a type decomposition in power notation.
pub(crate) fn decomposition_label(d: &TypeDecomposition) -> String {
    let atoms: Vec<String> = d
        .parts()
        .iter()
        .map(|(t, short)| {
            if *short {
                format!("Ã{}", t.rank())
            } else {
                t.to_string()
            }
        })
        .collect();
    power_label(&atoms)
}

/// Atom names for a classical factor, with the small-rank coincidences
/// resolved and rank-zero factors dropped.
fn classical_atoms(letter: char, k: u64) -> Vec<String> {
    match (letter, k) {
        (_, 0) | ('D', 1) => Vec::new(),
        ('B' | 'C', 1) => vec!["A1".to_string()],
        ('D', 2) => vec!["A1".to_string(), "A1".to_string()],
        ('D', 3) => vec!["A3".to_string()],
        _ => vec![format!("{letter}{k}")],
    }
}

fn ones(j: usize) -> Vec<String> {
    (0..j).map(|_| "A1".to_string()).collect()
}

/// Shape of a Levi subset of a classical diagram: the rank of the component
/// at the special end (type B, C or D there, 0 if absent) and the ranks of
/// the remaining type-A blocks, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassicalSignature {
    pub end: usize,
    pub blocks: Vec<usize>,
}

pub fn classical_signature(rs: &RootSystem, nodes: &[usize]) -> ClassicalSignature {
    let n = rs.rank();
    let series = rs.cartan_type().series();
    let in_s = |i: usize| nodes.contains(&i);
    let mut seen = vec![false; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for &s in nodes {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            for y in 0..n {
                if !seen[y] && in_s(y) && rs.pairing(x, y) != 0 {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            i += 1;
        }
        comps.push(comp);
    }
    let end_nodes: Vec<usize> = match series {
        Series::B | Series::C if n >= 2 => vec![n - 1],
        Series::D if n >= 4 && in_s(n - 1) && in_s(n - 2) => vec![n - 2, n - 1],
        _ => Vec::new(),
    };
    let mut end = 0;
    let mut blocks = Vec::new();
    for c in comps {
        if c.iter().any(|x| end_nodes.contains(x)) {
            end += c.len();
        } else {
            blocks.push(c.len());
        }
    }
    blocks.sort_unstable_by(|a, b| b.cmp(a));
    ClassicalSignature { end, blocks }
}

/// Row data for a classical group: condition text and `M` types, or `None`
/// when no row has this shape.
fn classical_row(
    g: &RootDatum,
    kind: CharKind,
    p: u64,
    sig: &ClassicalSignature,
) -> Option<(String, Vec<String>)> {
    let n = g.rank();
    let series = g.root_system().cartan_type().series();
    let k = sig.end as u64;
    let all_ones = sig.blocks.iter().all(|&b| b == 1);
    let j = sig.blocks.len();
    let pairs_text = |pairs: &[(u64, u64)]| {
        pairs
            .iter()
            .map(|(r, s)| format!("({r},{s})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let dedup = |v: Vec<String>| {
        let mut out: Vec<String> = Vec::new();
        for m in v {
            if !out.contains(&m) {
                out.push(m);
            }
        }
        out
    };
    let m_from = |pairs: &[(u64, u64)], a: char, b: char, extra: usize| {
        dedup(
            pairs
                .iter()
                .map(|&(r, s)| {
                    let mut atoms = classical_atoms(a, r);
                    atoms.extend(classical_atoms(b, s));
                    atoms.extend(ones(extra));
                    power_label(&atoms)
                })
                .collect(),
        )
    };
    match series {
        Series::A => {
            let r = *sig.blocks.first()?;
            if sig.blocks.iter().any(|&b| b != r) || (r + 1) * j != n + 1 {
                return None;
            }
            let d = match g.isogeny() {
                Isogeny::SimplyConnected => 1,
                Isogeny::Adjoint => n as u64 + 1,
                Isogeny::SlMod(d) => d as u64,
                _ => return None,
            };
            // Rows are indexed by `d | (n+1)_p'`; only the prime-to-`p` part
            // of the kernel is seen by the characters.
            let d = p_prime_part(d, p);
            let np = p_prime_part(n as u64 + 1, p);
            if np % ((r as u64 + 1) * d) != 0 {
                return None;
            }
            let label = power_label(&vec![format!("A{r}"); j]);
            Some((format!("(r+1)d | (n+1)_p' with r={r}, d={d}"), vec![label]))
        }
        Series::B => match (p == 2, kind) {
            (true, CharKind::Trivial) if j == 0 && k % 2 == 0 && is_triangular(k / 2) => Some((
                format!("r={k} in 2△"),
                vec![power_label(&classical_atoms('B', k))],
            )),
            (false, CharKind::Trivial) if j == 0 => {
                let pairs = splits(k, |r, s| is_square(2 * r + 1) && is_square(2 * s));
                (!pairs.is_empty()).then(|| {
                    (
                        format!("2r+1, 2s ∈ □: {}", pairs_text(&pairs)),
                        m_from(&pairs, 'B', 'D', 0),
                    )
                })
            }
            (false, CharKind::Nontrivial) if all_ones && sig.end + 2 * j == n => {
                let pairs = splits(k, |r, s| is_triangular(2 * r + 1) && is_triangular(2 * s));
                (!pairs.is_empty()).then(|| {
                    (
                        format!("2r+1, 2s ∈ △: {}", pairs_text(&pairs)),
                        m_from(&pairs, 'B', 'D', j),
                    )
                })
            }
            _ => None,
        },
        Series::C => match (p == 2, kind) {
            (true, CharKind::Trivial) if j == 0 && k % 2 == 0 && is_triangular(k / 2) => Some((
                format!("r={k} in 2△"),
                vec![power_label(&classical_atoms('C', k))],
            )),
            (false, CharKind::Trivial | CharKind::Nontrivial) if j == 0 => {
                let want_odd = kind == CharKind::Nontrivial;
                if (k % 2 == 1) != want_odd {
                    return None;
                }
                let pairs = splits(k, |r, s| r <= s && is_triangular(r) && is_triangular(s));
                let parity = if want_odd { "odd" } else { "even" };
                (!pairs.is_empty()).then(|| {
                    (
                        format!("r+s {parity}, r, s ∈ △: {}", pairs_text(&pairs)),
                        m_from(&pairs, 'C', 'C', 0),
                    )
                })
            }
            _ => None,
        },
        Series::D => match (p == 2, kind) {
            (true, CharKind::Trivial) if j == 0 && k % 4 == 0 && is_square(k / 4) => Some((
                format!("r={k} in 4□"),
                vec![power_label(&classical_atoms('D', k))],
            )),
            (false, CharKind::Trivial | CharKind::Vector) if j == 0 => {
                let residue = if kind == CharKind::Trivial { 0 } else { 2 };
                if k % 4 != residue {
                    return None;
                }
                let pairs = splits(k, |r, s| r <= s && is_square(2 * r) && is_square(2 * s));
                (!pairs.is_empty()).then(|| {
                    (
                        format!("r+s ≡ {residue} mod 4, 2r, 2s ∈ □: {}", pairs_text(&pairs)),
                        m_from(&pairs, 'D', 'D', 0),
                    )
                })
            }
            (false, CharKind::Spin) if all_ones && sig.end + 2 * j == n => {
                let pairs = splits(k, |r, s| {
                    r <= s && is_triangular(2 * r) && is_triangular(2 * s)
                });
                (!pairs.is_empty()).then(|| {
                    (
                        format!("2r, 2s ∈ △: {}", pairs_text(&pairs)),
                        m_from(&pairs, 'D', 'D', j),
                    )
                })
            }
            _ => None,
        },
        _ => None,
    }
}

fn exceptional_row(t: CartanType, kind: CharKind, label: &str, p: u64) -> Option<Vec<String>> {
    let row = EXCEPTIONAL.iter().find(|r| {
        r.series == t.series() && r.rank == t.rank() && r.kind == kind && r.levi == label
    })?;
    Some(
        row.m
            .iter()
            .filter(|(_, c)| c.holds(p))
            .map(|(m, _)| m.to_string())
            .collect(),
    )
}

fn group_name(g: &RootDatum) -> String {
    format!("{} {}", g.root_system().cartan_type(), g.isogeny())
}

/// Every non-toral Levi class of `g` admitting a cuspidal pair in
/// characteristic `p` (0 for characteristic zero), split by the restriction
/// of the character to the center of `g`. The torus always admits the
/// trivial pair and is left out.
///
/// Quasi-simple factors in characteristic 2 of type `F4` or `E8` are not
/// decided; those classes are reported in `notes` instead.
pub fn generate_table1(g: &RootDatum, p: u64) -> Result<Table1> {
    let rs = g.root_system();
    let t = rs.cartan_type();
    let classical = matches!(t.series(), Series::A | Series::B | Series::C | Series::D);
    let mut records = Vec::new();
    let mut notes = Vec::new();
    for class in levi_subsets_up_to_conjugacy(rs, Conjugacy::Weyl)? {
        if class.roots.is_empty() {
            continue;
        }
        let desc = GroupDescription::from_levi(g, &class.roots, p)?;
        let gens = component_group_generators(g, &class.roots, p);
        let label = decomposition_label(&class.type_decomposition);
        let mut kinds = BTreeSet::new();
        let mut refused = false;
        for (coef, classes) in desc.characters() {
            match desc.admits_with(&classes, p) {
                Ok(true) => {
                    let mut x = vec![0i64; g.rank()];
                    for ((w, _), &c) in gens.iter().zip(&coef) {
                        for (xi, wi) in x.iter_mut().zip(w) {
                            *xi += wi * c as i64;
                        }
                    }
                    kinds.insert(classify_character(t, &x));
                }
                Ok(false) => {}
                Err(Error::Unsupported(msg)) => {
                    refused = true;
                    notes.push(format!("L = {label}: {msg}"));
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if refused {
            continue;
        }
        for kind in kinds {
            let row = if classical {
                let sig = classical_signature(rs, &class.roots);
                classical_row(g, kind, p, &sig)
            } else {
                exceptional_row(t, kind, &label, p).map(|m| (String::from("table entry"), m))
            };
            let in_table = row.is_some();
            if !in_table {
                notes.push(format!(
                    "L = {label} ({kind}) admits but matches no table row"
                ));
            }
            let (condition, m_types) = row.unwrap_or_else(|| (String::from("none"), Vec::new()));
            records.push(CuspidalLeviRecord {
                levi_nodes: class.roots.clone(),
                levi_label: label.clone(),
                character: kind,
                condition,
                m_types,
                in_table,
            });
        }
    }
    Ok(Table1 {
        group: group_name(g),
        p,
        records,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::sync::Arc;

    fn datum(s: Series, n: usize, iso: Isogeny) -> RootDatum {
        RootDatum::from_type(CartanType::new(s, n).unwrap(), iso).unwrap()
    }

    #[test]
    fn power_labels() {
        let a = |s: &str| s.to_string();
        assert_eq!(power_label(&[a("A3"), a("A3"), a("A1")]), "(A3)^2×A1");
        assert_eq!(power_label(&[]), "T");
        assert_eq!(power_label(&classical_atoms('D', 2)), "(A1)^2");
    }

    #[test]
    fn signatures_in_type_d() {
        let rs = Arc::new(RootSystem::new(CartanType::new(Series::D, 6).unwrap()));
        assert_eq!(
            classical_signature(&rs, &[0, 4, 5]),
            ClassicalSignature {
                end: 2,
                blocks: vec![1]
            }
        );
        assert_eq!(
            classical_signature(&rs, &[0, 2, 5]),
            ClassicalSignature {
                end: 0,
                blocks: vec![1, 1, 1]
            }
        );
        assert_eq!(
            classical_signature(&rs, &[2, 3, 4, 5]),
            ClassicalSignature {
                end: 4,
                blocks: vec![]
            }
        );
    }

    #[test]
    fn g2_and_e6() {
        let t = generate_table1(&datum(Series::G, 2, Isogeny::Adjoint), 0).unwrap();
        assert_eq!(t.summary_lines(), ["G2 | trivial | A1×Ã1, A2, G2"]);
        let t = generate_table1(&datum(Series::E, 6, Isogeny::SimplyConnected), 5).unwrap();
        assert!(t.notes.is_empty(), "{t}");
        assert_eq!(
            t.summary_lines(),
            [
                "(A2)^2 | nontrivial | (A2)^2",
                "D4 | trivial | (A1)^4",
                "E6 | trivial | (A2)^3",
                "E6 | nontrivial | A5×A1, E6",
            ]
        );
    }

    #[test]
    fn f4_in_characteristic_two_refuses_only_the_top_row() {
        let t = generate_table1(&datum(Series::F, 4, Isogeny::Adjoint), 2).unwrap();
        assert_eq!(t.summary_lines(), ["B2 | trivial | B2"]);
        assert_eq!(t.notes.len(), 1);
    }
}
