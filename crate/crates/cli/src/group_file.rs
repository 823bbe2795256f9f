//! Group JSON: `{"name": string?, "degree": int, "generators": [cycles, ...]}`.

use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context};
use cellfuse_core::oracle::{naive_normal_subgroups, ORACLE_CAP};
use cellfuse_core::{Group, GroupSpec, Perm};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<String>,
}

impl GroupFile {
    pub fn from_spec(spec: &GroupSpec) -> GroupFile {
        GroupFile {
            name: spec.name.clone(),
            degree: spec.degree,
            generators: spec.generators.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn to_spec(&self) -> cellfuse_core::Result<GroupSpec> {
        let gens = self
            .generators
            .iter()
            .map(|g| Perm::parse(g, self.degree))
            .collect::<Result<Vec<_>, _>>()?;
        let spec = GroupSpec::new(self.degree, gens)?;
        Ok(match &self.name {
            Some(n) => spec.named(n.clone()),
            None => spec,
        })
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("group files serialize");
        let mut text = serde_json::to_string_pretty(&value).expect("values serialize");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> anyhow::Result<GroupFile> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Reads a group file and builds the group. Prime-power `PSL_2` fixtures,
/// which have no built-in constructor, are checked for the right order and
/// for simplicity.
pub fn load(path: &Path, cap: usize) -> anyhow::Result<Arc<Group>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = GroupFile::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    let spec = file.to_spec().with_context(|| format!("invalid group in {}", path.display()))?;
    let group = Group::new(spec).with_cap(cap);
    validate_fixture(&group)?;
    Ok(Arc::new(group))
}

fn validate_fixture(group: &Group) -> anyhow::Result<()> {
    let expected = match group.name() {
        Some("psl2 8") => 504,
        _ => return Ok(()),
    };
    if group.order() != expected {
        bail!("fixture {:?} has order {}, expected {expected}", group.name(), group.order());
    }
    if group.order() <= ORACLE_CAP as u128 && naive_normal_subgroups(group)?.len() != 2 {
        bail!("fixture {:?} is not simple", group.name());
    }
    Ok(())
}
