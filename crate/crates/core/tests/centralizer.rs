//! Counts of classes of `M_x` in `H` for the configurations worked out by
//! hand, plus the global bound `r <= 2`.

use charsheaf_core::centralizer::*;
use charsheaf_core::lattice::{full_center_elements, Isogeny, RootDatum};
use charsheaf_core::root_system::{CartanType, Series};

fn datum(s: Series, n: usize, iso: Isogeny) -> RootDatum {
    RootDatum::from_type(CartanType::new(s, n).unwrap(), iso).unwrap()
}

fn entries<'a>(rep: &'a [MClassReport], m: &str, h: &str) -> Vec<&'a REntry> {
    rep.iter()
        .filter(|r| r.m_type == m)
        .flat_map(|r| r.entries.iter())
        .filter(|e| e.h_type == h)
        .collect()
}

#[test]
fn e6_a2_cubed_gives_one_class_for_every_sigma() {
    let g = datum(Series::E, 6, Isogeny::SimplyConnected);
    let rep = theorem61_report(&g, 0).unwrap();
    let es = entries(&rep, "(A2)^2", "A2×A2×A2");
    let sigmas: std::collections::BTreeSet<_> = es.iter().map(|e| e.sigma.clone()).collect();
    assert_eq!(sigmas.len(), 6);
    assert!(es.iter().all(|e| e.admissible == 3 && e.r == 1));
}

#[test]
fn e7_simply_connected_order_two_sigma_gives_two_classes() {
    let g = datum(Series::E, 7, Isogeny::SimplyConnected);
    let rep = theorem61_report(&g, 0).unwrap();
    let es = entries(&rep, "(A1)^3", "A3×A3×A1");
    assert!(!es.is_empty());
    for e in es {
        assert_eq!(e.admissible, 2);
        assert_eq!(e.r, if e.sigma_order == 2 { 2 } else { 1 }, "{e:?}");
    }
}

#[test]
fn pso8_has_two_classes() {
    for (iso, want) in [
        (Isogeny::Adjoint, 2),
        (Isogeny::SpecialOrthogonal, 1),
        (Isogeny::SimplyConnected, 1),
    ] {
        let g = datum(Series::D, 4, iso);
        let rs = g.root_system().clone();
        let h = [0, 2, 3, rs.negate(rs.highest_root())];
        let m = [2, 3];
        for s in full_center_elements(&g, &h, 0)
            .unwrap()
            .into_iter()
            .filter(|s| !s.is_central_in(&g))
        {
            let c = m_class_count(&g, &m, &m, &h, &s, 0).unwrap();
            assert!(c.centralizer_equals_h);
            assert_eq!(c.r, want, "{iso}");
        }
    }
}

#[test]
fn psp_witness() {
    let g = datum(Series::C, 6, Isogeny::Adjoint);
    let rep = theorem61_report(&g, 0).unwrap();
    assert!(rep.iter().flat_map(|r| r.realized()).any(|e| e.r == 2));
}

#[test]
fn adjoint_exceptional_and_classical_bounds() {
    for (s, n) in [
        (Series::G, 2),
        (Series::F, 4),
        (Series::E, 6),
        (Series::E, 7),
    ] {
        let rep = theorem61_report(&datum(s, n, Isogeny::Adjoint), 0).unwrap();
        assert!(
            rep.iter().flat_map(|r| r.entries.iter()).all(|e| e.r == 1),
            "{s:?}{n}"
        );
    }
    for n in 3..=6 {
        for (s, iso) in [
            (Series::B, Isogeny::Adjoint),
            (Series::C, Isogeny::SimplyConnected),
            (Series::D, Isogeny::SimplyConnected),
        ] {
            if s == Series::D && n < 4 {
                continue;
            }
            let rep = theorem61_report(&datum(s, n, iso), 0).unwrap();
            assert!(
                rep.iter().flat_map(|r| r.entries.iter()).all(|e| e.r == 1),
                "{s:?}{n}"
            );
        }
    }
}

#[test]
fn extended_diagram_subsets() {
    let e6 = datum(Series::E, 6, Isogeny::SimplyConnected);
    let c = extended_subdiagram_classes(&e6, "(A2)^2").unwrap();
    assert_eq!(c.iter().map(|c| c.size()).sum::<usize>(), 3);

    let e7 = datum(Series::E, 7, Isogeny::SimplyConnected);
    let c = extended_subdiagram_classes(&e7, "(A1)^4").unwrap();
    let mut sizes: Vec<usize> = c.iter().map(|c| c.size()).collect();
    sizes.sort();
    assert_eq!(sizes, [1, 6]);

    // The (A1)^3 Levi admitting a cuspidal pair.
    let t = charsheaf_core::cuspidality::generate_table1(&e7, 0).unwrap();
    let l = &t
        .records
        .iter()
        .find(|r| r.levi_label == "(A1)^3")
        .unwrap()
        .levi_nodes;
    let key = charsheaf_core::root_system::subsystem_class_key(
        e7.root_system(),
        &e7.root_system().simple_roots(),
        l,
        charsheaf_core::root_system::Conjugacy::Weyl,
    );
    let c = extended_subdiagram_classes(&e7, "(A1)^3").unwrap();
    let cls = c.iter().find(|c| c.class_id == key).unwrap();
    assert_eq!(cls.size(), 2);
}

#[test]
fn r_is_constant_on_normalizer_orbits_of_sigma() {
    use charsheaf_core::root_system::WeylGroup;
    let g = datum(Series::E, 7, Isogeny::SimplyConnected);
    let rs = g.root_system().clone();
    let w = WeylGroup::new(rs.clone());
    let h = [0, 1, 2, 4, 5, 6, rs.negate(rs.highest_root())];
    let ctx = HContext::new(&g, &w, &h, &[1, 4, 6], 0).unwrap();
    for s in 0..ctx.action.elements.len() {
        for k in 0..ctx.action.maps.len() {
            let t = ctx.action.maps[k][s];
            for c in 0..ctx.classes.len() {
                assert_eq!(ctx.orbit(c, s).len(), ctx.orbit(c, t).len());
            }
        }
    }
}
