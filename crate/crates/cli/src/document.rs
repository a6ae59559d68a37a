//! Scenario documents (JSON) and their conversion to core scenarios.

use charsheaf_core::cyclotomic::Cyc;
use charsheaf_core::pairing::{BlockSpec, NamedScenario, ScenarioSpec, SuppliedTable, TableTarget};
use charsheaf_core::perm::Perm;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer};
use serde_json::{json, Value};

use crate::CliError;

/// A permutation as a 0-based image array, checked while parsing so that
/// errors carry the document position.
#[derive(Clone, Debug)]
pub struct PermDoc(pub Perm);

impl<'de> Deserialize<'de> for PermDoc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Perm::from_usize(&images)
            .map(PermDoc)
            .map_err(|_| D::Error::custom(format!("malformed permutation {images:?}")))
    }
}

/// A cyclotomic number: an integer, a GAP-style string such as
/// `"-1-2*E(3)"`, or `{conductor, coefficients}` in the power basis.
#[derive(Clone, Debug)]
pub struct CycDoc(pub Cyc);

#[derive(Deserialize)]
#[serde(untagged)]
enum CycRepr {
    Int(i64),
    Text(String),
    Basis { conductor: u32, coefficients: Vec<String> },
}

impl<'de> Deserialize<'de> for CycDoc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match CycRepr::deserialize(d)? {
            CycRepr::Int(k) => Ok(CycDoc(Cyc::from_int(k))),
            CycRepr::Text(s) => Cyc::parse(&s).map(CycDoc).map_err(|e| D::Error::custom(format!("{e}"))),
            CycRepr::Basis { conductor, coefficients } => {
                if conductor == 0 {
                    return Err(D::Error::custom("conductor must be positive"));
                }
                let raw = coefficients
                    .iter()
                    .map(|c| parse_rational(c).ok_or_else(|| D::Error::custom(format!("bad rational {c:?}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(CycDoc(Cyc::from_raw(conductor, raw)))
            }
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let b: BigInt = b.trim().parse().ok()?;
            if b == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(a.trim().parse().ok()?, b))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockDoc {
    pub whm_generators: Vec<PermDoc>,
    pub a: PermDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDoc {
    /// `"wse"` or `"whm<j>"`.
    pub group: String,
    pub class_representatives: Vec<PermDoc>,
    pub values: Vec<Vec<CycDoc>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDocument {
    #[serde(default)]
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<PermDoc>,
    pub wse_generators: Vec<PermDoc>,
    pub blocks: Vec<BlockDoc>,
    pub frobenius: Vec<PermDoc>,
    pub w1: PermDoc,
    #[serde(default)]
    pub character_tables: Vec<TableDoc>,
    #[serde(default)]
    pub coxeter_times_abelian: Option<bool>,
}

impl ScenarioDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("scenario document: {e}")))
    }

    pub fn into_spec(self, fallback_name: &str) -> Result<ScenarioSpec, CliError> {
        let perms = |v: Vec<PermDoc>| v.into_iter().map(|p| p.0).collect::<Vec<_>>();
        let mut tables = Vec::new();
        for t in self.character_tables {
            let target = if t.group == "wse" {
                TableTarget::Wse
            } else if let Some(j) = t.group.strip_prefix("whm").and_then(|j| j.parse().ok()) {
                TableTarget::Block(j)
            } else {
                return Err(CliError::Input(format!("unknown character table group {:?}", t.group)));
            };
            tables.push(SuppliedTable {
                target,
                class_representatives: perms(t.class_representatives),
                values: t.values.into_iter().map(|r| r.into_iter().map(|c| c.0).collect()).collect(),
            });
        }
        Ok(ScenarioSpec {
            name: self.name.unwrap_or_else(|| fallback_name.to_string()),
            degree: self.degree,
            generators: perms(self.generators),
            wse_generators: perms(self.wse_generators),
            blocks: self.blocks.into_iter().map(|b| BlockSpec { whm_generators: perms(b.whm_generators), a: b.a.0 }).collect(),
            frobenius: perms(self.frobenius),
            w1: self.w1.0,
            character_tables: tables,
            coxeter_times_abelian: self.coxeter_times_abelian,
        })
    }
}

pub fn perm_json(p: &Perm) -> Value {
    json!(p.images())
}

pub fn cyc_json(c: &Cyc) -> Value {
    json!({
        "conductor": c.conductor(),
        "coefficients": c.coefficients().iter().map(|q| q.to_string()).collect::<Vec<_>>(),
    })
}

/// The document form of a built-in scenario.
pub fn scenario_json(n: &NamedScenario) -> Value {
    let s = &n.spec;
    let perms = |v: &[Perm]| v.iter().map(perm_json).collect::<Vec<_>>();
    json!({
        "name": s.name,
        "degree": s.degree,
        "generators": perms(&s.generators),
        "wse_generators": perms(&s.wse_generators),
        "blocks": s.blocks.iter().map(|b| json!({"whm_generators": perms(&b.whm_generators), "a": perm_json(&b.a)})).collect::<Vec<_>>(),
        "frobenius": perms(&s.frobenius),
        "w1": perm_json(&s.w1),
        "coxeter_times_abelian": s.coxeter_times_abelian,
    })
}
