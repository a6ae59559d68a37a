//! Classical groups: the Levi classes found by the reduction procedure
//! against a direct evaluation of the arithmetic conditions in the table.

use std::collections::BTreeSet;

use charsheaf_core::cuspidality::{classical_signature, generate_table1, ClassicalSignature};
use charsheaf_core::lattice::{Isogeny, RootDatum};
use charsheaf_core::root_system::{CartanType, Series};

fn tri(n: u64) -> bool {
    (0..=n).any(|t| t * (t + 1) / 2 == n)
}

fn sq(n: u64) -> bool {
    (0..=n).any(|t| t * t == n)
}

fn sig(end: u64, ones: u64) -> ClassicalSignature {
    ClassicalSignature {
        end: end as usize,
        blocks: vec![1; ones as usize],
    }
}

fn p_prime(mut m: u64, p: u64) -> u64 {
    if p > 1 {
        while m % p == 0 {
            m /= p;
        }
    }
    m
}

/// Signatures predicted by the rows that apply to the group, quotient rows
/// included. The torus is left out.
fn oracle(s: Series, n: u64, iso: Isogeny, p: u64) -> BTreeSet<ClassicalSignature> {
    let mut out = BTreeSet::new();
    let rs = |k: u64| (0..=k).map(move |r| (r, k - r));
    match s {
        Series::A => {
            let d = match iso {
                Isogeny::SimplyConnected => 1,
                Isogeny::Adjoint => n + 1,
                Isogeny::SlMod(d) => d as u64,
                _ => unreachable!(),
            };
            let d = p_prime(d, p);
            for r in 1..=n {
                if (n + 1) % (r + 1) == 0 && p_prime(n + 1, p) % ((r + 1) * d) == 0 {
                    let j = (n + 1) / (r + 1);
                    out.insert(ClassicalSignature {
                        end: 0,
                        blocks: vec![r as usize; j as usize],
                    });
                }
            }
        }
        Series::B | Series::C if p == 2 => {
            for k in 1..=n {
                if k % 2 == 0 && tri(k / 2) {
                    out.insert(sig(k, 0));
                }
            }
        }
        Series::D if p == 2 => {
            for k in 1..=n {
                if k % 4 == 0 && sq(k / 4) {
                    out.insert(sig(k, 0));
                }
            }
        }
        Series::B => {
            for k in 0..=n {
                if rs(k).any(|(r, s)| sq(2 * r + 1) && sq(2 * s)) {
                    out.insert(sig(k, 0));
                }
                if iso == Isogeny::SimplyConnected
                    && (n - k) % 2 == 0
                    && rs(k).any(|(r, s)| tri(2 * r + 1) && tri(2 * s))
                {
                    out.insert(sig(k, (n - k) / 2));
                }
            }
        }
        Series::C => {
            for k in 0..=n {
                let ok = rs(k).any(|(r, s)| tri(r) && tri(s));
                if ok && (k % 2 == 0 || iso == Isogeny::SimplyConnected) {
                    out.insert(sig(k, 0));
                }
            }
        }
        Series::D => {
            let spin = matches!(iso, Isogeny::SimplyConnected | Isogeny::HalfSpin);
            let vector = matches!(iso, Isogeny::SimplyConnected | Isogeny::SpecialOrthogonal);
            for k in 0..=n {
                let squares = rs(k).any(|(r, s)| sq(2 * r) && sq(2 * s));
                if squares && k % 4 == 0 {
                    out.insert(sig(k, 0));
                }
                if squares && vector && k % 4 == 2 {
                    out.insert(sig(k, 0));
                }
                if spin && (n - k) % 2 == 0 && rs(k).any(|(r, s)| tri(2 * r) && tri(2 * s)) {
                    out.insert(sig(k, (n - k) / 2));
                }
            }
        }
        _ => unreachable!(),
    }
    out.remove(&sig(0, 0));
    out
}

fn engine(s: Series, n: usize, iso: Isogeny, p: u64) -> BTreeSet<ClassicalSignature> {
    let g = RootDatum::from_type(CartanType::new(s, n).unwrap(), iso).unwrap();
    let t = generate_table1(&g, p).unwrap();
    assert!(t.notes.is_empty(), "{t}");
    assert!(t.records.iter().all(|r| r.in_table));
    t.records
        .iter()
        .map(|r| classical_signature(g.root_system(), &r.levi_nodes))
        .collect()
}

fn isogenies(s: Series, n: usize) -> Vec<Isogeny> {
    match s {
        Series::A => (1..=n as u32 + 1)
            .filter(|d| (n as u32 + 1) % d == 0)
            .map(|d| Isogeny::parse(&format!("SLmod:{d}"), CartanType::new(s, n).unwrap()).unwrap())
            .collect(),
        Series::D if n % 2 == 0 => {
            vec![
                Isogeny::SimplyConnected,
                Isogeny::Adjoint,
                Isogeny::SpecialOrthogonal,
                Isogeny::HalfSpin,
            ]
        }
        Series::D => vec![
            Isogeny::SimplyConnected,
            Isogeny::Adjoint,
            Isogeny::SpecialOrthogonal,
        ],
        _ => vec![Isogeny::SimplyConnected, Isogeny::Adjoint],
    }
}

fn check_family(s: Series, ranks: std::ops::RangeInclusive<usize>) {
    for n in ranks {
        for iso in isogenies(s, n) {
            for p in [0, 2, 3] {
                let want = oracle(s, n as u64, iso, p);
                let got = engine(s, n, iso, p);
                assert_eq!(got, want, "{s:?}{n} {iso} p={p}");
            }
        }
    }
}

#[test]
fn type_a() {
    check_family(Series::A, 1..=9);
}

#[test]
fn type_b() {
    check_family(Series::B, 2..=9);
}

#[test]
fn type_c() {
    check_family(Series::C, 3..=9);
}

#[test]
fn type_d() {
    check_family(Series::D, 4..=9);
}

#[test]
fn spin_odd_rank_has_no_a3_blocks() {
    for n in [5, 7, 9] {
        let g = RootDatum::from_type(
            CartanType::new(Series::D, n).unwrap(),
            Isogeny::SimplyConnected,
        )
        .unwrap();
        let t = generate_table1(&g, 0).unwrap();
        // An A3 block, as opposed to D3 at the end of the diagram.
        for r in &t.records {
            let sig = classical_signature(g.root_system(), &r.levi_nodes);
            assert!(!sig.blocks.contains(&3), "{t}");
        }
    }
}
