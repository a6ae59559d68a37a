//! One function per subcommand. Each returns a structured report, its text
//! rendering and whether everything it checked passed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use charsheaf_core::centralizer::theorem61_report;
use charsheaf_core::cuspidality::generate_table1;
use charsheaf_core::lattice::{Isogeny, RootDatum};
use charsheaf_core::pairing::{
    large_scenario, standard_scenarios, Convention, Engine, NamedScenario, Scenario, ScenarioSpec,
};
use charsheaf_core::root_system::{
    extended_diagram, plain_diagram, type_of_base, CartanType, Diagram, RootSystem, TypePattern,
};
use charsheaf_core::twisted::EXTENSION_CONVENTION;
use serde_json::{json, Value};

use crate::document::{cyc_json, perm_json, scenario_json, ScenarioDocument};
use crate::CliError;

pub struct Outcome {
    pub report: Value,
    pub text: String,
    pub passed: bool,
}

/// Conventions every report carries.
pub fn conventions() -> Value {
    json!({
        "extension_rule": EXTENSION_CONVENTION,
        "element_order": "identity first, then permutations by image array, lexicographically",
        "class_order": "twisted classes ordered by least element",
        "double_coset_representative": "least element of the double coset",
        "coset_realization": "t w t^-1 = phi^-1(w) in W x| <t>",
        "root_order": "positive roots by height, then negatives in the same order",
        "cyclotomic_encoding": "conductor with coefficients in the power basis of Q(zeta_conductor)",
    })
}

/// `E7sc`, `B3`, `D4 PSO` style labels; a missing rank comes from `rank`.
pub fn parse_group(label: &str, isogeny: Option<&str>, rank: Option<usize>) -> Result<RootDatum, CliError> {
    let label = label.trim();
    let letter_end = label.char_indices().nth(1).map_or(label.len(), |(i, _)| i);
    let digits_end = label[letter_end..]
        .find(|c: char| !c.is_ascii_digit())
        .map_or(label.len(), |k| letter_end + k);
    let (head, suffix) = label.split_at(digits_end);
    let ty: CartanType = if head.len() > letter_end {
        head.parse()?
    } else {
        let n = rank.ok_or_else(|| CliError::Input(format!("{label}: rank missing")))?;
        format!("{head}{n}").parse()?
    };
    let iso_label = match (suffix.trim(), isogeny) {
        ("", None) => "sc",
        ("", Some(i)) => i,
        (s, None) => s,
        (s, Some(i)) if s.eq_ignore_ascii_case(i) => s,
        (s, Some(i)) => return Err(CliError::Input(format!("isogeny {s} in the label conflicts with --isogeny {i}"))),
    };
    let iso = Isogeny::parse(iso_label, ty)?;
    Ok(RootDatum::from_type(ty, iso)?)
}

pub fn check_p(p: u64) -> Result<(), CliError> {
    let prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if p == 0 || prime {
        Ok(())
    } else {
        Err(CliError::Input(format!("p = {p} is neither 0 nor a prime")))
    }
}

fn diagram_json(d: &Diagram) -> Value {
    json!({
        "nodes": d.nodes,
        "affine_node": d.affine_node,
        "bonds": d.bonds.iter().map(|b| json!({"a": b.a, "b": b.b, "multiplicity": b.multiplicity, "arrow_to": b.arrow_to})).collect::<Vec<_>>(),
    })
}

pub fn roots(ty: &str, rank: Option<usize>) -> Result<Outcome, CliError> {
    let g = parse_group(ty, Some("sc"), rank)?;
    let rs: &RootSystem = g.root_system();
    let t = rs.cartan_type();
    let plain = plain_diagram(rs);
    let ext = extended_diagram(rs);
    let report = json!({
        "type": t.to_string(),
        "rank": rs.rank(),
        "roots": rs.num_roots(),
        "positive_roots": rs.num_positive(),
        "weyl_order": t.weyl_order().to_string(),
        "cartan_matrix": rs.cartan_matrix(),
        "diagram": diagram_json(&plain),
        "extended_diagram": diagram_json(&ext),
    });
    let mut text = String::new();
    writeln!(text, "{t}: {} roots ({} positive), |W| = {}", rs.num_roots(), rs.num_positive(), t.weyl_order()).unwrap();
    writeln!(text, "cartan matrix: {:?}", rs.cartan_matrix()).unwrap();
    for (name, d) in [("diagram", &plain), ("extended diagram", &ext)] {
        let bonds: Vec<String> = d
            .bonds
            .iter()
            .map(|b| format!("{}-{}{}", b.a, b.b, if b.multiplicity > 1 { format!("(x{})", b.multiplicity) } else { String::new() }))
            .collect();
        writeln!(text, "{name}: {} nodes, bonds {}", d.len(), bonds.join(" ")).unwrap();
    }
    Ok(Outcome { report, text, passed: true })
}

pub fn cuspidal_levis(ty: &str, isogeny: Option<&str>, rank: Option<usize>, p: u64) -> Result<Outcome, CliError> {
    check_p(p)?;
    let g = parse_group(ty, isogeny, rank)?;
    let t = generate_table1(&g, p)?;
    let records: Vec<Value> = t
        .records
        .iter()
        .map(|r| {
            json!({
                "levi": r.levi_label,
                "levi_nodes": r.levi_nodes,
                "character": r.character.to_string(),
                "condition": r.condition,
                "m_types": r.m_types,
                "in_table": r.in_table,
            })
        })
        .collect();
    let report = json!({
        "group": t.group,
        "p": p,
        "records": records,
        "notes": t.notes,
    });
    Ok(Outcome { report, text: t.to_string(), passed: true })
}

pub fn m_classify(g_label: &str, isogeny: Option<&str>, p: u64, l: &str, m: &str) -> Result<Outcome, CliError> {
    check_p(p)?;
    let g = parse_group(g_label, isogeny, None)?;
    let rs = g.root_system().clone();
    let lp = TypePattern::parse(l)?;
    let mp = TypePattern::parse(m)?;
    let reports = theorem61_report(&g, p)?;
    let mut out = Vec::new();
    let mut text = String::new();
    for r in &reports {
        if !lp.matches(&type_of_base(&rs, &r.levi_nodes)?) || !mp.matches(&type_of_base(&rs, &r.m_base)?) {
            continue;
        }
        writeln!(text, "{} p = {}: L = {} ({}), M = {}", r.group, r.p, r.levi_label, r.character, r.m_type).unwrap();
        if r.l_is_g {
            writeln!(text, "  L = G, so H = M and r = 1").unwrap();
        }
        let mut by_order: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for e in &r.entries {
            writeln!(
                text,
                "  H = {} sigma = {} (order {}): r = {} of {} admissible{}{}",
                e.h_type,
                e.sigma,
                e.sigma_order,
                e.r,
                e.admissible,
                if e.centralizer_equals_h { "" } else { ", centralizer larger than H" },
                if e.in_support { "" } else { ", outside the support" }
            )
            .unwrap();
            if e.centralizer_equals_h && e.in_support {
                by_order.entry(e.sigma_order).or_default().push(e.r);
            }
        }
        for n in &r.notes {
            writeln!(text, "  note: {n}").unwrap();
        }
        let r_range = r.r_range();
        out.push(json!({
            "group": r.group,
            "p": r.p,
            "levi": r.levi_label,
            "levi_nodes": r.levi_nodes,
            "character": r.character.to_string(),
            "m_type": r.m_type,
            "m_base": r.m_base,
            "l_is_g": r.l_is_g,
            "r_range": r_range.map(|(a, b)| vec![a, b]),
            "realized_r_by_sigma_order": by_order.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
            "entries": r.entries.iter().map(|e| json!({
                "h_type": e.h_type,
                "h_base": e.h_base,
                "position": e.position,
                "admissible": e.admissible,
                "sigma": e.sigma.to_string(),
                "sigma_order": e.sigma_order,
                "r": e.r,
                "centralizer_equals_h": e.centralizer_equals_h,
                "in_support": e.in_support,
            })).collect::<Vec<_>>(),
            "notes": r.notes,
        }));
    }
    if out.is_empty() {
        return Err(CliError::Input(format!("no configuration with L of type {l} and M of type {m}")));
    }
    let report = json!({ "configurations": out });
    Ok(Outcome { report, text, passed: true })
}

/// A scenario from a file path, or `builtin:<name>` for the built-in ones.
pub fn load_scenario(src: &str) -> Result<ScenarioSpec, CliError> {
    if let Some(name) = src.strip_prefix("builtin:") {
        return builtin(name).map(|n| n.spec);
    }
    let text = std::fs::read_to_string(src).map_err(|e| CliError::Input(format!("{src}: {e}")))?;
    let stem = std::path::Path::new(src).file_stem().and_then(|s| s.to_str()).unwrap_or("scenario");
    ScenarioDocument::parse(&text)?.into_spec(stem)
}

pub fn builtins() -> Result<Vec<NamedScenario>, CliError> {
    let mut all = standard_scenarios()?;
    all.push(large_scenario()?);
    Ok(all)
}

fn builtin(name: &str) -> Result<NamedScenario, CliError> {
    builtins()?
        .into_iter()
        .find(|n| n.spec.name == name)
        .ok_or_else(|| CliError::Input(format!("no built-in scenario {name:?}")))
}

pub fn scenarios() -> Result<Outcome, CliError> {
    let all = builtins()?;
    let mut text = String::new();
    for n in &all {
        writeln!(text, "{}: {}", n.spec.name, n.description).unwrap();
    }
    let report = json!({ "scenarios": all.iter().map(scenario_json).collect::<Vec<_>>() });
    Ok(Outcome { report, text, passed: true })
}

pub const CHECK_NAMES: [&str; 7] = [
    "extended-characters",
    "double-cosets",
    "fibre-sizes",
    "class-vs-double-coset",
    "average-equals-pairing",
    "pairing-reconstructs-k",
    "representative-independence",
];

pub fn verify(src: &str, checks: &str, seed: u64) -> Result<Outcome, CliError> {
    let selected: Vec<&str> = if checks == "all" {
        CHECK_NAMES.to_vec()
    } else {
        let v: Vec<&str> = checks.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        if let Some(bad) = v.iter().find(|c| !CHECK_NAMES.contains(c)) {
            return Err(CliError::Input(format!("unknown check {bad:?}; known: {}", CHECK_NAMES.join(", "))));
        }
        v
    };
    let spec = load_scenario(src)?;
    let s = Scenario::validate(&spec)?;
    let r = Engine::new(&s).verify_all(seed)?;
    let kept: Vec<_> = r.checks.iter().filter(|c| selected.contains(&c.name.as_str())).collect();
    let passed = kept.iter().all(|c| c.passed);
    let mut text = format!("scenario {} (|Omega| = {}, |W_se| = {}, {} blocks)\n", s.name, s.omega.order(), s.wse.order(), s.blocks.len());
    for c in &kept {
        writeln!(text, "  {} {}{}", if c.passed { "pass" } else { "FAIL" }, c.name, if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) }).unwrap();
    }
    for p in &r.prefactors {
        writeln!(
            text,
            "  prefactor {}: class expansion {}, pairing expansion {}",
            p.prefactor.name(),
            if p.matches_class_expansion { "matches" } else { "differs" },
            if p.matches_pairing_expansion { "matches" } else { "differs" }
        )
        .unwrap();
    }
    writeln!(text, "  real W_se extensions: {}; unconjugated round trip: {}", r.real_wse_table, r.printed_round_trip).unwrap();
    let report = json!({
        "scenario": s.name,
        "seed": seed,
        "omega_order": s.omega.order(),
        "wse_order": s.wse.order(),
        "block_orders": s.blocks.iter().map(|b| b.whm.order()).collect::<Vec<_>>(),
        "checks": kept.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
        "prefactor_study": r.prefactors.iter().map(|p| json!({
            "prefactor": p.prefactor.name(),
            "matches_class_expansion": p.matches_class_expansion,
            "matches_pairing_expansion": p.matches_pairing_expansion,
        })).collect::<Vec<_>>(),
        "real_wse_extensions": r.real_wse_table,
        "unconjugated_round_trip": r.printed_round_trip,
        "passed": passed,
    });
    Ok(Outcome { report, text, passed })
}

pub fn pairing(src: &str, convention: Convention) -> Result<Outcome, CliError> {
    let spec = load_scenario(src)?;
    let s = Scenario::validate(&spec)?;
    let e = Engine::new(&s);
    let m = e.pairing_matrix(convention)?;
    let rows: Vec<Value> = s
        .wse_chars
        .extensions
        .iter()
        .map(|x| json!({"character": x.base, "rule": x.rule.to_string()}))
        .collect();
    let mut blocks = Vec::new();
    let mut text = format!("scenario {}: rows are extended characters of W_se ({convention:?} convention)\n", s.name);
    for (j, b) in s.blocks.iter().enumerate() {
        let d = e.double_cosets(j);
        let cols: Vec<Value> = b.chars.extensions.iter().map(|x| json!({"character": x.base, "rule": x.rule.to_string()})).collect();
        let mat = |mm: &Vec<Vec<charsheaf_core::cyclotomic::Cyc>>| -> Value {
            json!(mm.iter().map(|row| row.iter().map(cyc_json).collect::<Vec<_>>()).collect::<Vec<_>>())
        };
        writeln!(text, "block {j}: |W_j| = {}, {} double cosets", b.whm.order(), d.representatives.len()).unwrap();
        for row in &m.total[j] {
            writeln!(text, "  {}", row.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("  ")).unwrap();
        }
        let cosets: Vec<Value> = d
            .representatives
            .iter()
            .enumerate()
            .map(|(nu, &w)| {
                json!({
                    "representative": perm_json(s.omega.element(w)),
                    "size": d.cosets[nu].len(),
                    "w_nu_size": e.w_nu(j, w).len(),
                    "pairing": mat(&m.per_coset[j][nu]),
                })
            })
            .collect();
        blocks.push(json!({
            "block": j,
            "columns": cols,
            "total": mat(&m.total[j]),
            "double_cosets": cosets,
        }));
    }
    let report = json!({
        "scenario": s.name,
        "convention": format!("{convention:?}").to_lowercase(),
        "rows": rows,
        "blocks": blocks,
    });
    Ok(Outcome { report, text, passed: true })
}
