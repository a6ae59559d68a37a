//! Conjugacy classes of the Levi subgroups `M_x` inside `H = Z°_G(sigma)`.
//!
//! Everything happens at the level of root subsystems. `H` is a pseudo-Levi
//! subsystem, `M` a sub-diagram of `Delta_H`, and the number `r` of
//! `H`-classes in the set `{M_x}` is computed as the size of the orbit of the
//! `W(H)`-class of `Delta_M` under those elements of `N_W(W_H)` that fix
//! `sigma`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::cuspidality::{generate_table1, CharKind};
use crate::error::{Error, Result};
use crate::lattice::{
    full_center_elements, normalizer_center_action, CenterAction, CenterElement, RootDatum,
};
use crate::root_system::{
    enumerate_subsets_of_type, extended_diagram, partition_into_classes, subsystem_class_key,
    type_of_base, ClassKey, Component, Conjugacy, Diagram, RootSystem, SubdiagramClass,
    TypeDecomposition, TypePattern, WeylGroup,
};

/// A class of pseudo-Levi subsystems under `W(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoLeviClass {
    /// A base of a representative subsystem.
    pub base: Vec<usize>,
    pub type_decomposition: TypeDecomposition,
    pub class_id: ClassKey,
    /// 0 for subsets of the extended diagram of `G`; `k` for subsets obtained
    /// after `k` further passes through extended diagrams of components.
    pub depth: usize,
}

impl PseudoLeviClass {
    pub fn is_full_rank(&self, g: &RootDatum) -> bool {
        self.base.len() == g.rank()
    }
}

fn components(rs: &RootSystem, base: &[usize]) -> Result<Vec<Component>> {
    Diagram::from_roots(rs, base.to_vec(), None)
        .components(rs, &(0..base.len()).collect::<Vec<_>>())
}

/// Highest root of the irreducible subsystem with the given base.
fn highest_of(rs: &RootSystem, base: &[usize]) -> usize {
    rs.generated_subsystem(base)
        .into_iter()
        .filter(|&r| base.iter().all(|&b| rs.pairing(r, b) >= 0))
        .max_by_key(|&r| (rs.norm2(r), rs.height(r), r))
        .expect("a nonempty subsystem has a dominant root")
}

fn proper_subsets(nodes: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let k = nodes.len();
    (0u32..(1u32 << k) - 1).map(move |m| {
        (0..k)
            .filter(|&i| m & (1 << i) != 0)
            .map(|i| nodes[i])
            .collect()
    })
}

/// Pseudo-Levi subsystems of `g` up to `W(G)`: proper subsets of the
/// extended diagram, then, for every full-rank class found, the subsystems
/// obtained by replacing one component with a proper subset of its own
/// extended diagram, until nothing new appears. Sorted by depth, then by
/// decreasing rank.
pub fn enumerate_pseudo_levis(g: &RootDatum) -> Result<Vec<PseudoLeviClass>> {
    let rs = g.root_system();
    let n = rs.rank();
    let simple = rs.simple_roots();
    let mut seen_sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut keys: BTreeMap<(TypeDecomposition, ClassKey), ()> = BTreeMap::new();
    let mut out: Vec<PseudoLeviClass> = Vec::new();
    let ext = extended_diagram(rs).nodes;
    let mut frontier: Vec<Vec<usize>> = proper_subsets(&ext).collect();
    for depth in 0..=n {
        let mut fresh = Vec::new();
        for base in frontier {
            let mut sorted = rs.generated_subsystem(&base);
            sorted.shrink_to_fit();
            if !seen_sets.insert(sorted) {
                continue;
            }
            let td = type_of_base(rs, &base)?;
            let key = subsystem_class_key(rs, &simple, &base, Conjugacy::Weyl);
            if keys.insert((td.clone(), key.clone()), ()).is_some() {
                continue;
            }
            let class = PseudoLeviClass {
                base,
                type_decomposition: td,
                class_id: key,
                depth,
            };
            if class.base.len() == n {
                fresh.push(class.base.clone());
            }
            out.push(class);
        }
        let mut next = Vec::new();
        for psi in fresh {
            for c in components(rs, &psi)? {
                let rest: Vec<usize> = psi
                    .iter()
                    .copied()
                    .filter(|r| !c.order.contains(r))
                    .collect();
                let mut ext_c = c.order.clone();
                ext_c.push(rs.negate(highest_of(rs, &c.order)));
                for s in proper_subsets(&ext_c) {
                    let mut b = rest.clone();
                    b.extend(s);
                    next.push(b);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    out.sort_by(|a, b| a.depth.cmp(&b.depth).then(b.base.len().cmp(&a.base.len())));
    Ok(out)
}

/// `W(H)`-classes of sub-diagrams of `Delta_H` (the base `h`) that are
/// `W(G)`-conjugate to the subsystem with base `m`.
pub fn admissible_m_classes(
    g: &RootDatum,
    h: &[usize],
    m: &[usize],
) -> Result<Vec<SubdiagramClass>> {
    let rs = g.root_system();
    let simple = rs.simple_roots();
    let mtype = type_of_base(rs, m)?;
    let mkey = subsystem_class_key(rs, &simple, m, Conjugacy::Weyl);
    let d = Diagram::from_roots(rs, h.to_vec(), None);
    let k = m.len();
    let mut subsets = Vec::new();
    for mask in 0u32..(1u32 << h.len()) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let s: Vec<usize> = (0..h.len()).filter(|&i| mask & (1 << i) != 0).collect();
        let roots = d.roots_of(&s);
        if type_of_base(rs, &roots)? != mtype {
            continue;
        }
        if subsystem_class_key(rs, &simple, &roots, Conjugacy::Weyl) == mkey {
            subsets.push(s);
        }
    }
    subsets.sort();
    partition_into_classes(rs, h, &d, &subsets, Conjugacy::Weyl)
}

/// Subsets of the extended diagram of `g` of the given type, grouped into
/// `W(G)`-classes. Positions refer to [`extended_diagram`].
pub fn extended_subdiagram_classes(g: &RootDatum, pattern: &str) -> Result<Vec<SubdiagramClass>> {
    let rs = g.root_system();
    let d = extended_diagram(rs);
    let target = TypePattern::parse(pattern)?;
    let subsets = enumerate_subsets_of_type(rs, &d, &target);
    partition_into_classes(rs, &rs.simple_roots(), &d, &subsets, Conjugacy::Weyl)
}

/// Whether the roots trivial on `sigma` are exactly those of `h`.
pub fn centralizer_equals(g: &RootDatum, h: &[usize], sigma: &CenterElement) -> bool {
    let rs = g.root_system();
    let kernel: Vec<usize> = (0..rs.num_roots())
        .filter(|&r| sigma.on_root(g, r) == 0.into())
        .collect();
    kernel == rs.generated_subsystem(h)
}

/// Data shared by every `sigma` for a fixed `H` and `M`: the normalizer
/// action on `Z(H)` and on the admissible classes.
#[derive(Clone, Debug)]
pub struct HContext {
    pub h: Vec<usize>,
    pub action: CenterAction,
    pub classes: Vec<SubdiagramClass>,
    /// `class_maps[k][c]`: image of class `c` under normalizer element `k`.
    pub class_maps: Vec<Vec<usize>>,
}

impl HContext {
    pub fn new(g: &RootDatum, w: &WeylGroup, h: &[usize], m: &[usize], p: u64) -> Result<Self> {
        let rs = g.root_system();
        let action = normalizer_center_action(g, w, h, p)?;
        let classes = admissible_m_classes(g, h, m)?;
        let mut class_maps = Vec::with_capacity(action.normalizer.len());
        for x in &action.normalizer.elements {
            let row = classes
                .iter()
                .map(|c| {
                    let img: Vec<usize> = c.roots.iter().map(|&r| x.apply(r)).collect();
                    let key = subsystem_class_key(rs, h, &img, Conjugacy::Weyl);
                    classes
                        .iter()
                        .position(|d| d.class_id == key)
                        .ok_or_else(|| {
                            Error::Internal(
                                "normalizer moved an admissible class outside the list".into(),
                            )
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            class_maps.push(row);
        }
        Ok(HContext {
            h: h.to_vec(),
            action,
            classes,
            class_maps,
        })
    }

    /// Index of the admissible class containing the sub-base `m` of `Phi_H`.
    pub fn class_of(&self, g: &RootDatum, m: &[usize]) -> Option<usize> {
        let key = subsystem_class_key(g.root_system(), &self.h, m, Conjugacy::Weyl);
        self.classes.iter().position(|c| c.class_id == key)
    }

    /// Orbit of class `c` under the normalizer elements fixing center
    /// element number `s`.
    pub fn orbit(&self, c: usize, s: usize) -> Vec<usize> {
        let stab: Vec<usize> = (0..self.action.maps.len())
            .filter(|&k| self.action.maps[k][s] == s)
            .collect();
        let mut orbit = vec![c];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for &k in &stab {
                let y = self.class_maps[k][x];
                if !orbit.contains(&y) {
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }
}

/// Result of [`m_class_count`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MClassCount {
    pub r: usize,
    pub admissible: usize,
    /// Admissible classes in the orbit of the class of `M`.
    pub orbit: Vec<usize>,
    /// Whether `Z°_G(sigma)` has exactly the roots of `H`.
    pub centralizer_equals_h: bool,
}

/// The number `r` of `H`-classes of the Levi subgroups `M_x`, for `H` with
/// base `h`, `M` with base `m` inside `Phi_H` and `sigma` in `Z(H) \ Z(G)`.
/// When `l` equals all of `G` the answer is 1.
pub fn m_class_count(
    g: &RootDatum,
    l: &[usize],
    m: &[usize],
    h: &[usize],
    sigma: &CenterElement,
    p: u64,
) -> Result<MClassCount> {
    if sigma.is_central_in(g) {
        return Err(Error::CentralElement);
    }
    let rs = g.root_system();
    if l.len() == rs.rank() && rs.generated_subsystem(l).len() == rs.num_roots() {
        return Ok(MClassCount {
            r: 1,
            admissible: 1,
            orbit: vec![0],
            centralizer_equals_h: true,
        });
    }
    let w = WeylGroup::new(rs.clone());
    let ctx = HContext::new(g, &w, h, m, p)?;
    let c = ctx
        .class_of(g, m)
        .ok_or_else(|| Error::Validation("M is not a sub-diagram of H".into()))?;
    let s = ctx
        .action
        .elements
        .iter()
        .position(|e| e == sigma)
        .ok_or_else(|| Error::Validation("sigma is not in Z(H)".into()))?;
    let orbit = ctx.orbit(c, s);
    Ok(MClassCount {
        r: orbit.len(),
        admissible: ctx.classes.len(),
        orbit,
        centralizer_equals_h: centralizer_equals(g, h, sigma),
    })
}

/// One `(H, position of M, sigma)` evaluated for a configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct REntry {
    pub h_type: String,
    pub h_base: Vec<usize>,
    /// Which admissible class plays the role of `M`.
    pub position: usize,
    pub admissible: usize,
    pub sigma: CenterElement,
    pub sigma_order: u64,
    pub r: usize,
    pub centralizer_equals_h: bool,
    /// `Z°_L(sigma) = M` for the conjugate of `L` through `M`'s position.
    pub in_support: bool,
}

/// All evaluations for one table configuration `(L, chi, M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MClassReport {
    pub group: String,
    pub p: u64,
    pub levi_label: String,
    pub levi_nodes: Vec<usize>,
    pub character: CharKind,
    pub m_type: String,
    pub m_base: Vec<usize>,
    /// `L = G`: then `H = M` and `r = 1` without search.
    pub l_is_g: bool,
    pub entries: Vec<REntry>,
    pub notes: Vec<String>,
}

impl MClassReport {
    /// Entries where `sigma` really has centralizer `H` and cuts `M` out of `L`.
    pub fn realized(&self) -> impl Iterator<Item = &REntry> {
        self.entries
            .iter()
            .filter(|e| e.centralizer_equals_h && e.in_support)
    }

    /// Smallest and largest `r` over realized entries.
    pub fn r_range(&self) -> Option<(usize, usize)> {
        if self.l_is_g {
            return Some((1, 1));
        }
        let rs: Vec<usize> = self.realized().map(|e| e.r).collect();
        Some((*rs.iter().min()?, *rs.iter().max()?))
    }
}

/// Full-rank subsystems `M` of `L` (base `l`) of the given type that are
/// pseudo-Levi in `L`, one per `W(G)`-class.
fn m_candidates(g: &RootDatum, l: &[usize], m_type: &str) -> Result<Vec<Vec<usize>>> {
    let rs = g.root_system();
    let pattern = TypePattern::parse(m_type)?;
    let comps = components(rs, l)?;
    let mut options: Vec<Vec<Vec<usize>>> = Vec::new();
    for c in &comps {
        let mut opts = vec![c.order.clone()];
        let mut ext = c.order.clone();
        ext.push(rs.negate(highest_of(rs, &c.order)));
        for i in 0..ext.len() - 1 {
            let mut s = ext.clone();
            s.remove(i);
            opts.push(s);
        }
        options.push(opts);
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut keys = BTreeSet::new();
    let mut idx = vec![0usize; options.len()];
    loop {
        let base: Vec<usize> = idx
            .iter()
            .zip(&options)
            .flat_map(|(&i, o)| o[i].iter().copied())
            .collect();
        if pattern.matches(&type_of_base(rs, &base)?) {
            let key = subsystem_class_key(rs, &rs.simple_roots(), &base, Conjugacy::Weyl);
            if keys.insert(key) {
                out.push(base);
            }
        }
        let mut j = 0;
        loop {
            if j == idx.len() {
                return Ok(out);
            }
            idx[j] += 1;
            if idx[j] < options[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

fn type_label(rs: &RootSystem, base: &[usize]) -> String {
    type_of_base(rs, base)
        .map(|t| t.to_string())
        .unwrap_or_default()
}

/// Evaluates `r` for every configuration of the cuspidal Levi table of `g`:
/// each admitted Levi class `L`, each `M` type in its row, each full-rank
/// pseudo-Levi `H` containing `M` and realized as a centralizer by some
/// element of `Z(H)`, each position of `M` in `H` and each `sigma` in
/// `Z(H) \ Z(G)` of order prime to `p`.
pub fn theorem61_report(g: &RootDatum, p: u64) -> Result<Vec<MClassReport>> {
    let rs: Arc<RootSystem> = g.root_system().clone();
    let n = rs.rank();
    let w = WeylGroup::new(rs.clone());
    let table = generate_table1(g, p)?;
    let pseudo: Vec<PseudoLeviClass> = enumerate_pseudo_levis(g)?
        .into_iter()
        .filter(|c| c.base.len() == n && c.depth == 0)
        .collect();
    // Per H: center elements outside Z(G) and which of them realize H.
    let mut centers: Vec<Vec<(CenterElement, bool)>> = Vec::new();
    for h in &pseudo {
        let elems = full_center_elements(g, &h.base, p)?;
        centers.push(
            elems
                .into_iter()
                .filter(|t| !t.is_central_in(g))
                .map(|t| {
                    let real = centralizer_equals(g, &h.base, &t);
                    (t, real)
                })
                .collect(),
        );
    }
    let mut reports = Vec::new();
    for rec in &table.records {
        let l = &rec.levi_nodes;
        let l_is_g = l.len() == n;
        for m_type in &rec.m_types {
            let mut report = MClassReport {
                group: table.group.clone(),
                p,
                levi_label: rec.levi_label.clone(),
                levi_nodes: l.clone(),
                character: rec.character,
                m_type: m_type.clone(),
                m_base: Vec::new(),
                l_is_g,
                entries: Vec::new(),
                notes: Vec::new(),
            };
            let ms = m_candidates(g, l, m_type)?;
            if ms.is_empty() {
                report
                    .notes
                    .push(format!("no subsystem of type {m_type} in L"));
                reports.push(report);
                continue;
            }
            if ms.len() > 1 {
                report.notes.push(format!(
                    "{} W(G)-classes of type {m_type} in L; using the first",
                    ms.len()
                ));
            }
            let m = ms[0].clone();
            report.m_base = m.clone();
            if l_is_g {
                reports.push(report);
                continue;
            }
            let phi_l = rs.generated_subsystem(l);
            for (hi, h) in pseudo.iter().enumerate() {
                if !centers[hi].iter().any(|(_, real)| *real) {
                    continue;
                }
                let ctx = HContext::new(g, &w, &h.base, &m, p)?;
                if ctx.classes.is_empty() {
                    continue;
                }
                for (pos, class) in ctx.classes.iter().enumerate() {
                    let x = w.conjugating_element(&m, &class.roots).ok_or_else(|| {
                        Error::Internal("admissible class not conjugate to M".into())
                    })?;
                    let l_img: Vec<usize> = phi_l.iter().map(|&r| x.apply(r)).collect();
                    let phi_s = rs.generated_subsystem(&class.roots);
                    for (sigma, real) in &centers[hi] {
                        let s = ctx
                            .action
                            .elements
                            .iter()
                            .position(|e| e == sigma)
                            .ok_or_else(|| Error::Internal("center element lost".into()))?;
                        let mut kernel: Vec<usize> = l_img
                            .iter()
                            .copied()
                            .filter(|&r| sigma.on_root(g, r) == 0.into())
                            .collect();
                        kernel.sort_unstable();
                        let orbit = ctx.orbit(pos, s);
                        report.entries.push(REntry {
                            h_type: type_label(&rs, &h.base),
                            h_base: h.base.clone(),
                            position: pos,
                            admissible: ctx.classes.len(),
                            sigma: sigma.clone(),
                            sigma_order: sigma.order(),
                            r: orbit.len(),
                            centralizer_equals_h: *real,
                            in_support: kernel == phi_s,
                        });
                    }
                }
            }
            reports.push(report);
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Isogeny;
    use crate::root_system::{CartanType, Series};

    fn datum(s: Series, n: usize, iso: Isogeny) -> RootDatum {
        RootDatum::from_type(CartanType::new(s, n).unwrap(), iso).unwrap()
    }

    fn labels(v: &[PseudoLeviClass]) -> Vec<String> {
        v.iter().map(|c| c.type_decomposition.to_string()).collect()
    }

    #[test]
    fn pseudo_levis_of_a1() {
        let g = datum(Series::A, 1, Isogeny::SimplyConnected);
        let v = enumerate_pseudo_levis(&g).unwrap();
        let mut l = labels(&v);
        l.sort();
        assert_eq!(l, ["A1", "∅"]);
    }

    #[test]
    fn pseudo_levis_of_g2_and_b2() {
        let g = datum(Series::G, 2, Isogeny::Adjoint);
        let l = labels(&enumerate_pseudo_levis(&g).unwrap());
        for t in ["G2", "A2", "A1×Ã1"] {
            assert!(l.iter().any(|x| x == t), "{t} missing from {l:?}");
        }
        let g = datum(Series::B, 2, Isogeny::Adjoint);
        let l = labels(&enumerate_pseudo_levis(&g).unwrap());
        assert!(l.iter().any(|x| x == "A1×A1"), "{l:?}");
    }

    #[test]
    fn e6_contains_a2_cubed() {
        let g = datum(Series::E, 6, Isogeny::SimplyConnected);
        let l = labels(&enumerate_pseudo_levis(&g).unwrap());
        assert!(l.iter().any(|x| x == "A2×A2×A2"));
    }

    #[test]
    fn a2_cubed_has_three_a2_squared_classes() {
        let g = datum(Series::E, 6, Isogeny::SimplyConnected);
        let rs = g.root_system().clone();
        let theta = rs.negate(rs.highest_root());
        let h = [0, 2, 4, 5, 1, theta];
        let cls = admissible_m_classes(&g, &h, &[0, 2, 4, 5]).unwrap();
        assert_eq!(cls.len(), 3);
    }

    #[test]
    fn central_sigma_is_rejected() {
        let g = datum(Series::E, 6, Isogeny::SimplyConnected);
        let rs = g.root_system().clone();
        let theta = rs.negate(rs.highest_root());
        let h = [0, 2, 4, 5, 1, theta];
        let z = full_center_elements(&g, &h, 0).unwrap();
        let central = z.iter().find(|t| t.is_central_in(&g)).unwrap();
        assert!(matches!(
            m_class_count(&g, &[0, 2, 4, 5], &[0, 2, 4, 5], &h, central, 0),
            Err(Error::CentralElement)
        ));
    }
}
