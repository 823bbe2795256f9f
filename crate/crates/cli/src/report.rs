//! Report JSON.
//!
//! ```text
//! {
//!   "case": "cellular" | "sylow_strongly_closed" | "proper_strongly_closed",
//!   "fibration": {"base": [term, ...], "total": term},
//!   "gamma_label": string,              (proper case only)
//!   "name": string | null,
//!   "note": "no p-torsion",              (only when p does not divide |G|)
//!   "orders": {"group", "working_group", "sylow", "omega_bar", "o_a",
//!              "quotient", "normalizer_bar", "gamma"},
//!   "other_primes": [int, ...],
//!   "prime": int,
//!   "reduced": bool,
//!   "trace": {"cl_orders": [int, ...]},
//!   "verifications": {name: "pass" | "fail" | "skipped_cap"}
//! }
//! ```
//!
//! Keys are sorted. Orders that do not exist for the case are omitted.
//! A term is `*`, `B(name)` or `B(name)^_q` with `name` one of `group`,
//! `working_group`, `gamma`.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail};
use cellfuse_core::classifier::{CellularizationReport, GroupRef, SpaceTerm};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Orders {
    pub group: u64,
    pub working_group: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sylow: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_bar: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub o_a: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalizer_bar: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fibration {
    pub total: String,
    pub base: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Trace {
    pub cl_orders: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub name: Option<String>,
    pub prime: u64,
    pub reduced: bool,
    pub case: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub orders: Orders,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_label: Option<String>,
    pub other_primes: Vec<u64>,
    pub fibration: Fibration,
    pub verifications: BTreeMap<String, String>,
    pub trace: Trace,
}

fn small(n: u128) -> u64 {
    u64::try_from(n).expect("analyzed groups have orders below 2^64")
}

impl ReportDocument {
    pub fn from_report(r: &CellularizationReport) -> ReportDocument {
        let proper = r.proper.as_ref();
        let orders = Orders {
            group: small(r.group.order()),
            working_group: small(r.working_group.order()),
            sylow: r.sylow.as_ref().map(|s| small(s.order())),
            omega_bar: r.omega_bar.as_ref().map(|o| small(o.subgroup.order())),
            o_a: r.o_a.as_ref().map(|o| small(o.subgroup.order())),
            quotient: proper.map(|c| small(c.quotient.quotient().order())),
            normalizer_bar: proper.map(|c| small(c.normalizer_bar.order())),
            gamma: proper.map(|c| small(c.gamma().order())),
        };
        ReportDocument {
            name: r.input.name.clone(),
            prime: r.prime,
            reduced: r.reduced,
            case: r.case.as_str().to_string(),
            note: r.note.map(str::to_string),
            orders,
            gamma_label: proper.map(|c| c.gamma_label.clone()),
            other_primes: r.other_primes.clone(),
            fibration: Fibration {
                total: r.fibration.total_space.to_string(),
                base: r.fibration.base_factors.iter().map(ToString::to_string).collect(),
            },
            verifications: r
                .verifications
                .iter()
                .map(|(k, v)| (k.to_string(), v.as_str().to_string()))
                .collect(),
            trace: Trace {
                cl_orders: r
                    .omega_bar
                    .as_ref()
                    .map(|o| o.trace.iter().map(|&n| small(n)).collect())
                    .unwrap_or_default(),
            },
        }
    }

    pub fn to_value(&self) -> serde_json::Value {
        // serde_json's default map is a BTreeMap, so keys come out sorted.
        serde_json::to_value(self).expect("reports serialize")
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
        text.push('\n');
        text
    }

    pub fn read(text: &str) -> anyhow::Result<ReportDocument> {
        let doc: ReportDocument = serde_json::from_str(text)?;
        parse_term(&doc.fibration.total)?;
        for t in &doc.fibration.base {
            parse_term(t)?;
        }
        Ok(doc)
    }
}

pub fn render_report(r: &CellularizationReport) -> String {
    ReportDocument::from_report(r).render()
}

pub fn parse_term(text: &str) -> anyhow::Result<SpaceTerm> {
    if text == "*" {
        return Ok(SpaceTerm::Point);
    }
    let inner = text
        .strip_prefix("B(")
        .ok_or_else(|| anyhow!("bad space term {text:?}"))?;
    let (name, rest) = inner
        .split_once(')')
        .ok_or_else(|| anyhow!("bad space term {text:?}"))?;
    let group = match name {
        "group" => GroupRef::Group,
        "working_group" => GroupRef::WorkingGroup,
        "gamma" => GroupRef::Gamma,
        _ => bail!("unknown group {name:?} in space term"),
    };
    if rest.is_empty() {
        return Ok(SpaceTerm::ClassifyingSpace(group));
    }
    let q = rest
        .strip_prefix("^_")
        .and_then(|q| q.parse().ok())
        .ok_or_else(|| anyhow!("bad completion in space term {text:?}"))?;
    Ok(SpaceTerm::PCompletedClassifyingSpace(group, q))
}

/// First path at which two JSON values differ, e.g. `orders.gamma`.
pub fn first_difference(expected: &serde_json::Value, actual: &serde_json::Value) -> Option<String> {
    use serde_json::Value;
    fn walk(path: &str, e: &Value, a: &Value) -> Option<String> {
        let join = |k: &str| {
            if path.is_empty() {
                k.to_string()
            } else {
                format!("{path}.{k}")
            }
        };
        match (e, a) {
            (Value::Object(e), Value::Object(a)) => {
                let keys: std::collections::BTreeSet<&String> = e.keys().chain(a.keys()).collect();
                keys.into_iter().find_map(|k| match (e.get(k), a.get(k)) {
                    (Some(x), Some(y)) => walk(&join(k), x, y),
                    _ => Some(join(k)),
                })
            }
            (Value::Array(e), Value::Array(a)) => {
                if e.len() != a.len() {
                    return Some(path.to_string());
                }
                e.iter()
                    .zip(a)
                    .enumerate()
                    .find_map(|(i, (x, y))| walk(&join(&i.to_string()), x, y))
            }
            _ if e == a => None,
            _ => Some(path.to_string()),
        }
    }
    walk("", expected, actual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cellfuse_core::catalog;
    use cellfuse_core::classifier::classify;
    use serde_json::json;
    use std::sync::Arc;

    fn doc(g: cellfuse_core::Group, p: u64) -> ReportDocument {
        ReportDocument::from_report(&classify(&Arc::new(g), p).unwrap())
    }

    #[test]
    fn cellular_has_no_quotient() {
        let d = doc(catalog::cyclic(9).unwrap(), 3);
        let v = d.to_value();
        assert_eq!(v["case"], "cellular");
        assert_eq!(v["reduced"], true);
        assert!(v["orders"].get("quotient").is_none());
        assert!(v.get("gamma_label").is_none());
        assert_eq!(v["fibration"]["total"], "B(working_group)");
    }

    #[test]
    fn round_trip() {
        for (g, p) in [
            (catalog::symmetric(4).unwrap(), 2),
            (catalog::symmetric(4).unwrap(), 5),
            (catalog::psl2(7).unwrap(), 3),
            (catalog::quaternion8().unwrap(), 2),
        ] {
            let d = doc(g, p);
            let text = d.render();
            assert_eq!(ReportDocument::read(&text).unwrap(), d);
            assert_eq!(ReportDocument::read(&text).unwrap().render(), text);
        }
    }

    #[test]
    fn keys_are_sorted() {
        let text = doc(catalog::symmetric(4).unwrap(), 2).render();
        let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
        let keys = ["case", "fibration", "name", "orders", "other_primes", "prime", "reduced", "trace", "verifications"];
        assert!(keys.windows(2).all(|w| pos(w[0]) < pos(w[1])));
    }

    #[test]
    fn terms_parse_back() {
        for t in [
            SpaceTerm::Point,
            SpaceTerm::ClassifyingSpace(GroupRef::WorkingGroup),
            SpaceTerm::PCompletedClassifyingSpace(GroupRef::Gamma, 3),
        ] {
            assert_eq!(parse_term(&t.to_string()).unwrap(), t);
        }
        assert!(parse_term("B(delta)").is_err());
        assert!(parse_term("B(gamma)^3").is_err());
    }

    #[test]
    fn differences() {
        let a = json!({"orders": {"gamma": 6, "group": 3420}, "base": ["*"]});
        let b = json!({"orders": {"gamma": 7, "group": 3420}, "base": ["*"]});
        assert_eq!(first_difference(&a, &a), None);
        assert_eq!(first_difference(&a, &b).as_deref(), Some("orders.gamma"));
        let c = json!({"orders": {"group": 3420}, "base": ["x"]});
        assert_eq!(first_difference(&a, &c).as_deref(), Some("base.0"));
    }
}
