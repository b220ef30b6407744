//! Machine-readable summaries with stable key order.

use serde::Serialize;

use crate::catalog;
use crate::invariants::Fingerprint;
use crate::lie::LieAlgebra;

/// Invariant summary of one algebra. Subcommands drop the keys they do not
/// compute.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub name: String,
    pub dim: usize,
    pub lcs_dims: Vec<usize>,
    pub ucs_dims: Vec<usize>,
    pub class: Option<usize>,
    pub derived_dim: usize,
    pub center_dim: usize,
    pub multiplier_dim: usize,
    pub corank: usize,
    pub identified_as: Option<String>,
    pub flags: Vec<String>,
}

impl AlgebraReport {
    pub fn new(l: &LieAlgebra) -> Self {
        let f = Fingerprint::of(l);
        let identified_as = catalog::identify_fingerprint(&f);
        let mut flags = Vec::new();
        if f.class.is_none() {
            flags.push("not nilpotent".to_string());
        }
        if let Some(entry) = identified_as.as_deref().and_then(|n| catalog::get(n).ok()) {
            if let Some(t) = entry.expected_corank.filter(|&t| t != f.corank) {
                flags.push(format!(
                    "{}: listed t={t}, engine computes t={}",
                    entry.name, f.corank
                ));
            }
        }
        AlgebraReport {
            name: l.label().unwrap_or("unnamed").to_string(),
            dim: f.dim,
            derived_dim: l.derived_subalgebra().dim(),
            center_dim: l.center().dim(),
            lcs_dims: f.lcs_dims,
            ucs_dims: f.ucs_dims,
            class: f.class,
            multiplier_dim: f.multiplier_dim,
            corank: f.corank,
            identified_as,
            flags,
        }
    }

    /// Pretty JSON restricted to `keys` (all keys when `None`).
    pub fn to_json(&self, keys: Option<&[&str]>) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        if let (Some(keys), Some(map)) = (keys, value.as_object_mut()) {
            map.retain(|k, _| keys.contains(&k.as_str()));
        }
        to_json(&value)
    }
}

/// Pretty JSON with object keys sorted at every level.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    // serde_json's default map is ordered by key.
    let v = serde_json::to_value(value).expect("value serializes");
    serde_json::to_string_pretty(&v).expect("value prints")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted_and_trimmed() {
        let l = catalog::get("L4_3").unwrap().algebra;
        let r = AlgebraReport::new(&l);
        assert_eq!(r.identified_as.as_deref(), Some("L4_3"));
        assert_eq!((r.derived_dim, r.center_dim, r.corank), (2, 1, 4));
        let json = r.to_json(None);
        let keys: Vec<&str> = json
            .lines()
            .filter_map(|l| l.trim().strip_prefix('"')?.split('"').next())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(
            r.to_json(Some(&["corank", "name"])),
            "{\n  \"corank\": 4,\n  \"name\": \"L4_3\"\n}"
        );
    }
}
