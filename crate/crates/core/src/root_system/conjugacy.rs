use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::diagram::Diagram;
use super::types::{
    identify_components, matrix_automorphisms, Component, TypeDecomposition, TypePattern,
};
use super::RootSystem;
use crate::error::Result;

/// Canonical representative of a conjugacy class of subsystems: the least
/// canonical ordered base over all standard orderings.
pub type ClassKey = Vec<usize>;

/// Which group decides conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjugacy {
    /// The reflection group of the acting base.
    Weyl,
    /// The full Weyl group extended by automorphisms of its Dynkin diagram.
    /// Only meaningful when the acting base is the set of simple roots.
    WeylAndDiagram,
}

/// A class of node subsets of one diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdiagramClass {
    /// Representative, as positions in the diagram.
    pub node_subset: Vec<usize>,
    pub roots: Vec<usize>,
    pub type_decomposition: TypeDecomposition,
    pub class_id: ClassKey,
    /// Every input subset that fell into this class, representative first.
    pub members: Vec<Vec<usize>>,
}

impl SubdiagramClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

pub fn type_of_base(rs: &RootSystem, base: &[usize]) -> Result<TypeDecomposition> {
    let comps = identify_components(rs, base)?;
    Ok(TypeDecomposition::new(
        comps.iter().map(Component::key).collect(),
    ))
}

fn component_automorphisms(rs: &RootSystem, c: &Component) -> Vec<Vec<usize>> {
    let m: Vec<Vec<i64>> = c
        .order
        .iter()
        .map(|&a| c.order.iter().map(|&b| rs.pairing(a, b)).collect())
        .collect();
    matrix_automorphisms(&m)
}

/// Calls `f` on every ordering of `base` that lists components sorted by
/// type, each in a Bourbaki labelling. Isomorphic components may appear in
/// any order. Stops early when `f` returns false.
pub(crate) fn for_each_standard_ordering(
    rs: &RootSystem,
    base: &[usize],
    f: &mut dyn FnMut(&[usize]) -> bool,
) {
    let Ok(mut comps) = identify_components(rs, base) else {
        return;
    };
    comps.sort_by(|a, b| (a.key(), &a.order).cmp(&(b.key(), &b.order)));
    // Labellings of each component: the Bourbaki order composed with every
    // diagram automorphism.
    let labellings: Vec<Vec<Vec<usize>>> = comps
        .iter()
        .map(|c| {
            component_automorphisms(rs, c)
                .into_iter()
                .map(|s| s.iter().map(|&i| c.order[i]).collect())
                .collect()
        })
        .collect();
    let k = comps.len();
    let mut slot_used = vec![false; k];
    let mut out: Vec<usize> = Vec::with_capacity(base.len());
    // Slot i is filled by some component with the same key as comps[i].
    fn rec(
        i: usize,
        comps: &[Component],
        labellings: &[Vec<Vec<usize>>],
        used: &mut [bool],
        out: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == comps.len() {
            return f(out);
        }
        for j in 0..comps.len() {
            if used[j] || comps[j].key() != comps[i].key() {
                continue;
            }
            used[j] = true;
            for lab in &labellings[j] {
                let len = out.len();
                out.extend_from_slice(lab);
                let go_on = rec(i + 1, comps, labellings, used, out, f);
                out.truncate(len);
                if !go_on {
                    used[j] = false;
                    return false;
                }
            }
            used[j] = false;
        }
        true
    }
    rec(0, &comps, &labellings, &mut slot_used, &mut out, f);
}

/// All standard orderings of a base (see [`for_each_standard_ordering`]).
pub fn standard_orderings(rs: &RootSystem, base: &[usize]) -> Vec<Vec<usize>> {
    let mut v = Vec::new();
    for_each_standard_ordering(rs, base, &mut |o| {
        v.push(o.to_vec());
        true
    });
    v
}

/// Canonical form of an ordered tuple of roots under the reflection group
/// with simple system `acting`: the first entry is made dominant, then the
/// next one dominant for the stabilizer of the first, and so on.
///
/// Returns the canonical tuple and a word (root indices, leftmost applied
/// last) of an element carrying the input to it.
pub fn canonical_tuple(
    rs: &RootSystem,
    acting: &[usize],
    tuple: &[usize],
) -> (Vec<usize>, Vec<usize>) {
    let mut cur = tuple.to_vec();
    let mut simple: Vec<usize> = acting.to_vec();
    let mut word: Vec<usize> = Vec::new();
    for i in 0..cur.len() {
        loop {
            let Some(&d) = simple.iter().find(|&&d| rs.pairing(cur[i], d) < 0) else {
                break;
            };
            for x in cur[i..].iter_mut() {
                *x = rs.reflect(d, *x);
            }
            word.push(d);
        }
        let v = cur[i];
        simple.retain(|&d| rs.pairing(v, d) == 0);
    }
    word.reverse();
    (cur, word)
}

fn key_under(rs: &RootSystem, acting: &[usize], base: &[usize]) -> ClassKey {
    let mut best: Option<Vec<usize>> = None;
    for_each_standard_ordering(rs, base, &mut |o| {
        let (c, _) = canonical_tuple(rs, acting, o);
        if best.as_ref().map_or(true, |b| c < *b) {
            best = Some(c);
        }
        true
    });
    best.unwrap_or_default()
}

/// Class identity of the subsystem with base `base` under the reflection group
/// of `acting` (optionally extended by diagram automorphisms of the ambient
/// system). Equal keys if and only if the subsystems are conjugate.
pub fn subsystem_class_key(
    rs: &RootSystem,
    acting: &[usize],
    base: &[usize],
    mode: Conjugacy,
) -> ClassKey {
    match mode {
        Conjugacy::Weyl => key_under(rs, acting, base),
        Conjugacy::WeylAndDiagram => rs
            .diagram_automorphisms()
            .iter()
            .map(|s| {
                let p = rs.diagram_automorphism_perm(s);
                let img: Vec<usize> = base.iter().map(|&r| p.apply(r)).collect();
                key_under(rs, acting, &img)
            })
            .min()
            .unwrap_or_default(),
    }
}

/// Every subset of diagram positions whose induced sub-diagram has the target
/// type, in lexicographic order of position lists.
pub fn enumerate_subsets_of_type(
    rs: &RootSystem,
    d: &Diagram,
    target: &TypePattern,
) -> Vec<Vec<usize>> {
    let k = target.rank();
    let n = d.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        if k < n || !d.extended {
            if let Ok(t) = d.type_of(rs, &comb) {
                if target.matches(&t) {
                    out.push(comb.clone());
                }
            }
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if comb[i] < n - k + i {
                comb[i] += 1;
                for j in i + 1..k {
                    comb[j] = comb[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Groups diagram subsets into classes under the reflection group of `acting`.
/// Classes appear in order of their first member.
pub fn partition_into_classes(
    rs: &RootSystem,
    acting: &[usize],
    d: &Diagram,
    subsets: &[Vec<usize>],
    mode: Conjugacy,
) -> Result<Vec<SubdiagramClass>> {
    let mut classes: Vec<SubdiagramClass> = Vec::new();
    let mut by_key: BTreeMap<ClassKey, usize> = BTreeMap::new();
    for s in subsets {
        let roots = d.roots_of(s);
        let key = subsystem_class_key(rs, acting, &roots, mode);
        match by_key.get(&key) {
            Some(&i) => classes[i].members.push(s.clone()),
            None => {
                by_key.insert(key.clone(), classes.len());
                classes.push(SubdiagramClass {
                    node_subset: s.clone(),
                    type_decomposition: type_of_base(rs, &roots)?,
                    roots,
                    class_id: key,
                    members: vec![s.clone()],
                });
            }
        }
    }
    Ok(classes)
}

/// Representatives of the subsets of simple roots up to conjugacy, sorted by
/// size and then by node list.
pub fn levi_subsets_up_to_conjugacy(
    rs: &RootSystem,
    mode: Conjugacy,
) -> Result<Vec<SubdiagramClass>> {
    let n = rs.rank();
    let mut subsets: Vec<Vec<usize>> = (0u32..(1u32 << n))
        .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let d = super::diagram::plain_diagram(rs);
    partition_into_classes(rs, &rs.simple_roots(), &d, &subsets, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{extended_diagram, CartanType, Series};

    fn rs(s: Series, n: usize) -> RootSystem {
        RootSystem::new(CartanType::new(s, n).unwrap())
    }

    #[test]
    fn levi_class_counts_small() {
        let a2 = rs(Series::A, 2);
        assert_eq!(
            levi_subsets_up_to_conjugacy(&a2, Conjugacy::Weyl)
                .unwrap()
                .len(),
            3
        );
        let g2 = rs(Series::G, 2);
        assert_eq!(
            levi_subsets_up_to_conjugacy(&g2, Conjugacy::Weyl)
                .unwrap()
                .len(),
            4
        );
        // Partitions of 4 for A3.
        let a3 = rs(Series::A, 3);
        assert_eq!(
            levi_subsets_up_to_conjugacy(&a3, Conjugacy::Weyl)
                .unwrap()
                .len(),
            5
        );
    }

    #[test]
    fn d4_triality_merges_classes() {
        let d4 = rs(Series::D, 4);
        let w = levi_subsets_up_to_conjugacy(&d4, Conjugacy::Weyl)
            .unwrap()
            .len();
        let wd = levi_subsets_up_to_conjugacy(&d4, Conjugacy::WeylAndDiagram)
            .unwrap()
            .len();
        assert!(wd < w);
    }

    #[test]
    fn canonical_tuple_word_is_correct() {
        let e6 = rs(Series::E, 6);
        let t = [e6.negate(e6.highest_root()), 3];
        let (c, word) = canonical_tuple(&e6, &e6.simple_roots(), &t);
        let mut img = t.to_vec();
        for &r in word.iter().rev() {
            for x in img.iter_mut() {
                *x = e6.reflect(r, *x);
            }
        }
        assert_eq!(img, c);
        assert_eq!(c[0], e6.highest_root());
    }

    #[test]
    fn e6_a2_cubed_subsets() {
        let e6 = rs(Series::E, 6);
        let d = extended_diagram(&e6);
        let t = TypePattern::parse("A2×A2").unwrap();
        assert_eq!(enumerate_subsets_of_type(&e6, &d, &t).len(), 3);
    }
}
