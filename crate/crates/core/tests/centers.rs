use std::sync::Arc;

use charsheaf_core::lattice::{
    center_elements_outside_subcenter, full_center, normalizer_center_action, Isogeny, RootDatum,
};
use charsheaf_core::root_system::{CartanType, Series, WeylGroup};

fn datum(s: Series, n: usize) -> RootDatum {
    RootDatum::from_type(CartanType::new(s, n).unwrap(), Isogeny::SimplyConnected).unwrap()
}

#[test]
fn e6_a2_cubed_center() {
    let g = datum(Series::E, 6);
    let rs = g.root_system().clone();
    let theta = rs.negate(rs.highest_root());
    let psi = [0, 2, 4, 5, 1, theta];
    let z = full_center(&g, &psi, 0).unwrap();
    assert_eq!(z.invariant_factors(), &[3, 3]);
    let out = center_elements_outside_subcenter(&g, &psi, 0).unwrap();
    assert_eq!(out.len(), 6);
    assert!(out.iter().all(|t| t.order() == 3));
}

#[test]
fn e7_a3_a1_a3_center() {
    let g = datum(Series::E, 7);
    let rs = g.root_system().clone();
    let theta = rs.negate(rs.highest_root());
    let psi = [theta, 0, 2, 1, 4, 5, 6];
    let z = full_center(&g, &psi, 0).unwrap();
    assert_eq!(z.invariant_factors(), &[2, 4]);
    let out = center_elements_outside_subcenter(&g, &psi, 0).unwrap();
    let mut orders: Vec<u64> = out.iter().map(|t| t.order()).collect();
    orders.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(orders, [4, 4, 4, 4, 2, 2]);
    let w = WeylGroup::new(Arc::clone(&rs));
    let act = normalizer_center_action(&g, &w, &psi, 0).unwrap();
    let order2: Vec<usize> = (0..act.elements.len())
        .filter(|&i| !act.central[i] && act.elements[i].order() == 2)
        .collect();
    assert_eq!(order2.len(), 2);
    let mut swaps = 0;
    for k in 0..act.normalizer.len() {
        let perm = act.normalizer.component_permutation(&w, k);
        if perm.iter().enumerate().any(|(i, &j)| i != j) {
            swaps += 1;
            for &i in &order2 {
                assert_eq!(act.maps[k][i], i);
            }
        }
    }
    assert!(swaps > 0);
}
