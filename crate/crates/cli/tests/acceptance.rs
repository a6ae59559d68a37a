//! Acceptance harness: one PASS/FAIL line per criterion, exact arithmetic.

use std::collections::BTreeSet;
use std::path::Path;
use std::sync::Arc;
use std::time::{Duration, Instant};

use charsheaf::commands;
use charsheaf_core::centralizer::{extended_subdiagram_classes, m_class_count, theorem61_report};
use charsheaf_core::cuspidality::{classical_signature, generate_table1, ClassicalSignature};
use charsheaf_core::lattice::{
    center_elements_outside_subcenter, full_center, full_center_elements, normalizer_center_action, Isogeny,
    RootDatum,
};
use charsheaf_core::pairing::{large_scenario, standard_scenarios, Engine, Prefactor, Scenario};
use charsheaf_core::root_system::{subsystem_class_key, CartanType, Conjugacy, Series, WeylGroup};
use charsheaf_core::twisted::{standard_suite, twisted_centralizer, TwistedCharacters};

type Verdict = Result<String, String>;

fn datum(s: Series, n: usize, iso: Isogeny) -> Result<RootDatum, String> {
    let t = CartanType::new(s, n).map_err(|e| e.to_string())?;
    RootDatum::from_type(t, iso).map_err(|e| e.to_string())
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t < limit {
        Ok(())
    } else {
        Err(format!("{what} took {t:?}, limit {limit:?}"))
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// Criterion 1

fn output_lines(group: &str, p: u64) -> Result<BTreeSet<String>, String> {
    let o = commands::cuspidal_levis(group, None, None, p).map_err(|e| e.to_string())?;
    let r = &o.report;
    let mut out = BTreeSet::new();
    for rec in r["records"].as_array().ok_or("no records")? {
        let ms: Vec<&str> = rec["m_types"].as_array().unwrap().iter().map(|m| m.as_str().unwrap()).collect();
        let line = format!("{} | {} | {}", rec["levi"].as_str().unwrap(), rec["character"].as_str().unwrap(), ms.join(", "));
        if rec["in_table"].as_bool() == Some(true) {
            out.insert(line);
        } else {
            out.insert(format!("off-table {line}"));
        }
    }
    for n in r["notes"].as_array().ok_or("no notes")? {
        let n = n.as_str().unwrap();
        if n.contains("cleanness") {
            let l = n.trim_start_matches("L = ").split(':').next().unwrap_or("");
            out.insert(format!("refused {l}"));
        }
    }
    Ok(out)
}

fn criterion1() -> Verdict {
    let start = Instant::now();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/table1");
    let mut bad = Vec::new();
    let mut files = 0;
    for g in ["G2", "F4", "E6sc", "E6ad", "E7sc", "E7ad", "E8"] {
        for p in [0u64, 2, 3, 5] {
            let path = dir.join(format!("{g}_p{p}.txt"));
            let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            let want: BTreeSet<String> = text.lines().filter(|l| !l.is_empty()).map(String::from).collect();
            let got = output_lines(g, p)?;
            files += 1;
            if got != want {
                let extra: Vec<_> = got.difference(&want).collect();
                let missing: Vec<_> = want.difference(&got).collect();
                bad.push(format!("{g} p={p}: extra {extra:?} missing {missing:?}"));
            }
        }
    }
    within(start, Duration::from_secs(60), "table generation")?;
    if bad.is_empty() {
        Ok(format!("{files} golden files match"))
    } else {
        Err(format!(
            "{} of {files} golden files differ: {}; the D6 Levi of E7sc has disconnected centre and its half-spin quotient \
             meets the printed half-spin row, but the printed E7sc rows omit it",
            bad.len(),
            bad.join("; ")
        ))
    }
}

// Criterion 2

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

fn classical_oracle(s: Series, n: u64, iso: Isogeny, p: u64) -> BTreeSet<ClassicalSignature> {
    let mut out = BTreeSet::new();
    let rs = |k: u64| (0..=k).map(move |r| (r, k - r));
    match s {
        Series::B | Series::C if p == 2 => {
            for k in (2..=n).step_by(2) {
                if tri(k / 2) {
                    out.insert(sig(k, 0));
                }
            }
        }
        Series::D if p == 2 => {
            for k in (4..=n).step_by(4) {
                if sq(k / 4) {
                    out.insert(sig(k, 0));
                }
            }
        }
        Series::B => {
            for k in 0..=n {
                if rs(k).any(|(r, s)| sq(2 * r + 1) && sq(2 * s)) {
                    out.insert(sig(k, 0));
                }
                if iso == Isogeny::SimplyConnected && (n - k) % 2 == 0 && rs(k).any(|(r, s)| tri(2 * r + 1) && tri(2 * s)) {
                    out.insert(sig(k, (n - k) / 2));
                }
            }
        }
        Series::C => {
            for k in 0..=n {
                if rs(k).any(|(r, s)| tri(r) && tri(s)) && (k % 2 == 0 || iso == Isogeny::SimplyConnected) {
                    out.insert(sig(k, 0));
                }
            }
        }
        Series::D => {
            let spin = matches!(iso, Isogeny::SimplyConnected | Isogeny::HalfSpin);
            let vector = matches!(iso, Isogeny::SimplyConnected | Isogeny::SpecialOrthogonal);
            for k in 0..=n {
                let squares = rs(k).any(|(r, s)| sq(2 * r) && sq(2 * s));
                if squares && (k % 4 == 0 || (vector && k % 4 == 2)) {
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

fn criterion2() -> Verdict {
    let start = Instant::now();
    let mut cases = 0;
    let mut bad = Vec::new();
    for (s, lo) in [(Series::B, 2), (Series::C, 3), (Series::D, 4)] {
        for n in lo..=12 {
            let mut isos = vec![Isogeny::SimplyConnected, Isogeny::Adjoint];
            if s == Series::D {
                isos.push(Isogeny::SpecialOrthogonal);
                if n % 2 == 0 {
                    isos.push(Isogeny::HalfSpin);
                }
            }
            for iso in isos {
                let g = datum(s, n, iso)?;
                for p in [0, 2] {
                    let t = generate_table1(&g, p).map_err(|e| e.to_string())?;
                    let got: BTreeSet<_> = t.records.iter().map(|r| classical_signature(g.root_system(), &r.levi_nodes)).collect();
                    cases += 1;
                    if got != classical_oracle(s, n as u64, iso, p) || !t.notes.is_empty() {
                        bad.push(format!("{s:?}{n} {iso} p={p}"));
                    }
                }
            }
        }
    }
    within(start, Duration::from_secs(120), "classical enumeration")?;
    ensure(bad.is_empty(), || format!("mismatch: {}", bad.join(", ")))?;
    Ok(format!("{cases} (group, p) cases agree with the arithmetic conditions"))
}

// Criterion 3

fn criterion3() -> Verdict {
    let start = Instant::now();
    let mut configs = 0usize;
    let mut max_r = 0;
    let mut check_all_one = |g: &RootDatum, label: String| -> Result<(), String> {
        let rep = theorem61_report(g, 0).map_err(|e| e.to_string())?;
        for e in rep.iter().flat_map(|r| r.entries.iter()) {
            configs += 1;
            max_r = max_r.max(e.r);
            ensure(e.r == 1, || format!("{label}: r = {} for H = {}", e.r, e.h_type))?;
        }
        Ok(())
    };
    for (s, n) in [(Series::G, 2), (Series::F, 4), (Series::E, 6), (Series::E, 7), (Series::E, 8)] {
        check_all_one(&datum(s, n, Isogeny::Adjoint)?, format!("{s:?}{n} ad"))?;
    }
    for n in 2..=8 {
        check_all_one(&datum(Series::B, n, Isogeny::Adjoint)?, format!("SO{}", 2 * n + 1))?;
        check_all_one(&datum(Series::B, n, Isogeny::SimplyConnected)?, format!("Spin{}", 2 * n + 1))?;
        if n >= 3 {
            check_all_one(&datum(Series::C, n, Isogeny::SimplyConnected)?, format!("Sp{}", 2 * n))?;
        }
        if n >= 4 {
            check_all_one(&datum(Series::D, n, Isogeny::SimplyConnected)?, format!("Spin{}", 2 * n))?;
        }
    }
    let mut total = configs;

    let e7 = datum(Series::E, 7, Isogeny::SimplyConnected)?;
    let rep = theorem61_report(&e7, 0).map_err(|e| e.to_string())?;
    let es: Vec<_> = rep
        .iter()
        .filter(|r| r.m_type == "(A1)^3")
        .flat_map(|r| r.entries.iter())
        .filter(|e| e.h_type == "A3×A3×A1")
        .collect();
    ensure(es.iter().any(|e| e.sigma_order == 2), || "E7sc: no order-2 sigma for H = A3×A1×A3".into())?;
    for e in &es {
        let want = if e.sigma_order == 2 { 2 } else { 1 };
        ensure(e.r == want, || format!("E7sc H = A3×A1×A3, sigma of order {}: r = {}", e.sigma_order, e.r))?;
    }
    total += rep.iter().map(|r| r.entries.len()).sum::<usize>();
    ensure(rep.iter().flat_map(|r| r.entries.iter()).all(|e| e.r <= 2), || "E7sc: r > 2".into())?;

    let e6 = datum(Series::E, 6, Isogeny::SimplyConnected)?;
    let rep = theorem61_report(&e6, 0).map_err(|e| e.to_string())?;
    let es: Vec<_> = rep
        .iter()
        .filter(|r| r.m_type == "(A2)^2")
        .flat_map(|r| r.entries.iter())
        .filter(|e| e.h_type == "A2×A2×A2")
        .collect();
    let sigmas: BTreeSet<_> = es.iter().map(|e| e.sigma.clone()).collect();
    ensure(sigmas.len() == 6, || format!("E6sc: {} sigma, expected 6", sigmas.len()))?;
    ensure(es.iter().all(|e| e.r == 1), || "E6sc (A2)^3: some r != 1".into())?;
    total += rep.iter().map(|r| r.entries.len()).sum::<usize>();
    ensure(rep.iter().flat_map(|r| r.entries.iter()).all(|e| e.r <= 2), || "E6sc: r > 2".into())?;

    // PSO8 with H = (A1)^4 and M = (A1)^2.
    let pso = datum(Series::D, 4, Isogeny::Adjoint)?;
    let rs = pso.root_system().clone();
    let h = [0, 2, 3, rs.negate(rs.highest_root())];
    let m = [2, 3];
    let mut witness = false;
    for s in full_center_elements(&pso, &h, 0).map_err(|e| e.to_string())?.into_iter().filter(|s| !s.is_central_in(&pso)) {
        let c = m_class_count(&pso, &m, &m, &h, &s, 0).map_err(|e| e.to_string())?;
        ensure(c.r <= 2, || "PSO8: r > 2".into())?;
        witness |= c.r == 2 && c.centralizer_equals_h;
        total += 1;
    }
    ensure(witness, || "no r = 2 witness in PSO8".into())?;
    within(start, Duration::from_secs(300), "theorem 6.1 checks")?;
    Ok(format!("{total} configurations, r <= 2 throughout, PSO8 witness with r = 2"))
}

// Criterion 4

fn criterion4() -> Verdict {
    let e6 = datum(Series::E, 6, Isogeny::SimplyConnected)?;
    let c = extended_subdiagram_classes(&e6, "(A2)^2").map_err(|e| e.to_string())?;
    let n = c.iter().map(|c| c.size()).sum::<usize>();
    ensure(n == 3, || format!("(A2)^2 in extended E6: {n}"))?;

    let e7 = datum(Series::E, 7, Isogeny::SimplyConnected)?;
    let c = extended_subdiagram_classes(&e7, "(A1)^4").map_err(|e| e.to_string())?;
    let mut sizes: Vec<usize> = c.iter().map(|c| c.size()).collect();
    sizes.sort_unstable();
    ensure(sizes == [1, 6], || format!("(A1)^4 in extended E7: class sizes {sizes:?}"))?;

    let t = generate_table1(&e7, 0).map_err(|e| e.to_string())?;
    let l = &t.records.iter().find(|r| r.levi_label == "(A1)^3").ok_or("no (A1)^3 record")?.levi_nodes;
    let rs = e7.root_system();
    let key = subsystem_class_key(rs, &rs.simple_roots(), l, Conjugacy::Weyl);
    let c = extended_subdiagram_classes(&e7, "(A1)^3").map_err(|e| e.to_string())?;
    let k = c.iter().find(|c| c.class_id == key).map(|c| c.size()).unwrap_or(0);
    ensure(k == 2, || format!("cuspidal (A1)^3 class in extended E7: {k}"))?;
    Ok("3; 7 as {6, 1}; 2".into())
}

// Criterion 5

fn criterion5() -> Verdict {
    let e6 = datum(Series::E, 6, Isogeny::SimplyConnected)?;
    let rs = e6.root_system().clone();
    let theta = rs.negate(rs.highest_root());
    let psi = [0, 2, 4, 5, 1, theta];
    let z = full_center(&e6, &psi, 0).map_err(|e| e.to_string())?;
    let order: u64 = z.invariant_factors().iter().product();
    ensure(order == 9, || format!("|Z((A2)^3)| = {order}"))?;
    let out = center_elements_outside_subcenter(&e6, &psi, 0).map_err(|e| e.to_string())?;
    ensure(out.len() == 6 && out.iter().all(|t| t.order() == 3), || "E6: non-central elements".into())?;

    let e7 = datum(Series::E, 7, Isogeny::SimplyConnected)?;
    let rs = e7.root_system().clone();
    let theta = rs.negate(rs.highest_root());
    let psi = [theta, 0, 2, 1, 4, 5, 6];
    let z = full_center(&e7, &psi, 0).map_err(|e| e.to_string())?;
    ensure(z.invariant_factors() == [2, 4], || format!("E7 invariant factors {:?}", z.invariant_factors()))?;
    let out = center_elements_outside_subcenter(&e7, &psi, 0).map_err(|e| e.to_string())?;
    let mut orders: Vec<u64> = out.iter().map(|t| t.order()).collect();
    orders.sort_unstable_by(|a, b| b.cmp(a));
    ensure(orders == [4, 4, 4, 4, 2, 2], || format!("E7 orders {orders:?}"))?;
    let w = WeylGroup::new(Arc::clone(&rs));
    let act = normalizer_center_action(&e7, &w, &psi, 0).map_err(|e| e.to_string())?;
    let order2: Vec<usize> = (0..act.elements.len()).filter(|&i| !act.central[i] && act.elements[i].order() == 2).collect();
    let mut swaps = 0;
    for k in 0..act.normalizer.len() {
        let perm = act.normalizer.component_permutation(&w, k);
        if perm.iter().enumerate().any(|(i, &j)| i != j) {
            swaps += 1;
            ensure(order2.iter().all(|&i| act.maps[k][i] == i), || "swap moves an order-2 element".into())?;
        }
    }
    ensure(swaps > 0 && order2.len() == 2, || "no swap element".into())?;
    Ok("9 with six elements of order 3; 8 as (2,4) with orders (4,4,4,4,2,2); swap fixes both".into())
}

// Criterion 6

fn criterion6() -> Verdict {
    let suite = standard_suite().map_err(|e| e.to_string())?;
    let names: BTreeSet<&str> = suite.iter().map(|e| e.name.as_str()).collect();
    for want in ["S3", "S4", "Z3", "Z2xZ2", "W(B2)", "W(G2)", "W(B3)"] {
        ensure(names.contains(want), || format!("suite lacks {want}"))?;
    }
    let mut pairs = 0;
    for e in &suite {
        ensure(e.automorphisms.len() >= 2, || format!("{}: fewer than two automorphisms", e.name))?;
        for (label, phi) in &e.automorphisms {
            let tc = TwistedCharacters::compute(&e.group, phi).map_err(|x| format!("{} {label}: {x}", e.name))?;
            tc.table.check_orthogonality().map_err(|x| format!("{} {label}: {x}", e.name))?;
            // Twisted classes by orbit counting: sum of class sizes from centralizer orders.
            let classes = tc.partition.classes.len();
            ensure(tc.extensions.len() == classes, || format!("{} {label}: |Irr_ex| != classes", e.name))?;
            for c in &tc.partition.classes {
                let z = twisted_centralizer(&e.group, phi, c[0]);
                ensure(z * c.len() == e.group.order(), || format!("{} {label}: orbit-stabilizer", e.name))?;
            }
            tc.verify().map_err(|x| format!("{} {label}: {x}", e.name))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (group, automorphism) pairs"))
}

// Criterion 7

fn criterion7() -> Verdict {
    let mut specs: Vec<_> = standard_scenarios().map_err(|e| e.to_string())?;
    specs.push(large_scenario().map_err(|e| e.to_string())?);
    ensure(specs.len() >= 10, || "fewer than ten scenarios".into())?;
    let mut consistent: BTreeSet<&'static str> = Prefactor::ALL.iter().map(|p| p.name()).collect();
    for n in &specs {
        let start = Instant::now();
        let s = Scenario::validate(&n.spec).map_err(|e| format!("{}: {e}", n.spec.name))?;
        ensure(s.omega.order() <= 1152, || format!("{}: |Omega| too large", s.name))?;
        let r = Engine::new(&s).verify_all(0).map_err(|e| format!("{}: {e}", s.name))?;
        for c in &r.checks {
            ensure(c.passed, || format!("{}: {} failed: {}", s.name, c.name, c.detail))?;
        }
        for p in &r.prefactors {
            if !(p.matches_class_expansion && p.matches_pairing_expansion) {
                consistent.remove(p.prefactor.name());
            }
        }
        within(start, Duration::from_secs(10), &s.name)?;
    }
    ensure(consistent.len() == 1, || format!("consistent normalizations: {consistent:?}"))?;
    Ok(format!(
        "{} scenarios pass every check; consistent normalization: {}",
        specs.len(),
        consistent.iter().next().unwrap()
    ))
}

// Criterion 8

fn criterion8() -> Verdict {
    Err("not reproducible here: no numeric character-sheaf values over finite fields are computed; \
         Green functions are opaque symbols and the theorem is checked only through the formal identities of criterion 7"
        .into())
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("table 1, exceptional groups", criterion1),
        ("table 1, classical groups", criterion2),
        ("number of Levi classes r", criterion3),
        ("extended diagram counts", criterion4),
        ("center computations", criterion5),
        ("twisted-group suite", criterion6),
        ("double-coset verification suite", criterion7),
        ("character-sheaf values", criterion8),
    ];
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = f();
        let t = start.elapsed().as_secs_f64();
        match v {
            Ok(msg) => println!("criterion {}: PASS [{name}] {msg} ({t:.1}s)", i + 1),
            Err(msg) => println!("criterion {}: FAIL [{name}] {msg} ({t:.1}s)", i + 1),
        }
    }
}
