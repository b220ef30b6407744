//! Built-in nilpotent Lie algebras of dimension ≤ 5, the `⊕ i` chains up to
//! dimension 8, the corank expectation table, and fingerprint lookup.

use std::sync::OnceLock;

use serde::Serialize;

use crate::cohomology::corank;
use crate::error::{Error, Result};
use crate::invariants::Fingerprint;
use crate::lie::{LieAlgebra, Relation};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    /// Corank as listed in the corank classification, `None` if unlisted.
    pub expected_corank: Option<usize>,
}

/// `h(m)`: `[v_{2i−1}, v_{2i}] = v_{2m+1}` for `i = 1..m`.
pub fn heisenberg(m: usize) -> Result<LieAlgebra> {
    if m == 0 {
        return Err(Error::Domain("heisenberg(m) needs m >= 1".into()));
    }
    let n = 2 * m + 1;
    let rels: Vec<Relation> = (1..=m)
        .map(|i| Relation::unit(2 * i - 1, 2 * i, n))
        .collect();
    Ok(LieAlgebra::from_brackets(n, &rels)?.with_label(format!("H({m})")))
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n).with_label(format!("A({n})"))
}

/// `h(m) ⊕ i^k`; `m = 0` gives the abelian algebra of dimension `k`.
pub fn heisenberg_plus_abelian(m: usize, k: usize) -> Result<LieAlgebra> {
    match (m, k) {
        (0, 0) => Err(Error::Domain(
            "heisenberg_plus_abelian needs (m, k) != (0, 0)".into(),
        )),
        (0, k) => Ok(abelian(k)),
        (m, k) => Ok(heisenberg(m)?
            .direct_sum(&LieAlgebra::abelian(k))
            .with_label(format!("H({m})+A({k})"))),
    }
}

fn rel(n: usize, pairs: &[(usize, usize, usize)]) -> LieAlgebra {
    let rels: Vec<Relation> = pairs
        .iter()
        .map(|&(i, j, k)| Relation::unit(i, j, k))
        .collect();
    LieAlgebra::from_brackets(n, &rels).expect("catalog relations satisfy Jacobi")
}

fn plus_i(l: &LieAlgebra) -> LieAlgebra {
    l.direct_sum(&LieAlgebra::abelian(1))
}

fn build_entries() -> Vec<CatalogEntry> {
    let l32 = heisenberg(1).unwrap();
    let l42 = plus_i(&l32);
    let l43 = rel(4, &[(1, 2, 3), (1, 3, 4)]);
    let l52 = plus_i(&l42);
    let l62 = plus_i(&l52);
    let l72 = plus_i(&l62);
    let l82 = plus_i(&l72);
    let table: Vec<(&str, LieAlgebra, Option<usize>)> = vec![
        ("L3_1", LieAlgebra::abelian(3), Some(0)),
        ("L3_2", l32.clone(), Some(1)),
        ("L4_1", LieAlgebra::abelian(4), Some(0)),
        ("L4_2", l42.clone(), Some(2)),
        ("L4_3", l43.clone(), Some(4)),
        ("L5_1", LieAlgebra::abelian(5), Some(0)),
        ("L5_2", l52.clone(), Some(3)),
        ("L5_3", plus_i(&l43), None),
        ("L5_4", rel(5, &[(1, 2, 5), (3, 4, 5)]), Some(5)),
        ("L5_5", rel(5, &[(1, 2, 3), (1, 3, 5), (2, 4, 5)]), Some(6)),
        // [v1,v4] = [v2,v3] = v5
        (
            "L5_6",
            rel(5, &[(1, 2, 3), (1, 3, 4), (1, 4, 5), (2, 3, 5)]),
            None,
        ),
        ("L5_7", rel(5, &[(1, 2, 3), (1, 3, 4), (1, 4, 5)]), None),
        ("L5_8", rel(5, &[(1, 2, 4), (1, 3, 5)]), Some(4)),
        ("L5_9", rel(5, &[(1, 2, 3), (1, 3, 4), (2, 3, 5)]), None),
        ("L6_2", l62, Some(4)),
        ("L7_2", l72, Some(5)),
        ("L8_2", l82, Some(6)),
    ];
    table
        .into_iter()
        .map(|(name, algebra, expected_corank)| CatalogEntry {
            name: name.to_string(),
            algebra: algebra.with_label(name),
            expected_corank,
        })
        .collect()
}

struct Catalog {
    entries: Vec<CatalogEntry>,
    fingerprints: Vec<Fingerprint>,
}

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let entries = build_entries();
        let fingerprints: Vec<Fingerprint> = entries
            .iter()
            .map(|e| Fingerprint::of(&e.algebra))
            .collect();
        for (a, fa) in fingerprints.iter().enumerate() {
            for (b, fb) in fingerprints.iter().enumerate().skip(a + 1) {
                assert!(
                    fa != fb,
                    "catalog fingerprints of {} and {} coincide",
                    entries[a].name,
                    entries[b].name
                );
            }
        }
        Catalog {
            entries,
            fingerprints,
        }
    })
}

/// All fixed entries, in classification order.
pub fn list() -> &'static [CatalogEntry] {
    &catalog().entries
}

/// Parses `H(m)` / `A(n)` style names.
fn parametric(name: &str) -> Option<(char, usize)> {
    let mut chars = name.chars();
    let head = chars.next()?.to_ascii_uppercase();
    let arg = chars.as_str().strip_prefix('(')?.strip_suffix(')')?;
    Some((head, arg.trim().parse().ok()?))
}

/// Looks up a fixed entry by name (`L5_8`) or a parametric one (`H(2)`, `A(4)`).
pub fn get(name: &str) -> Result<CatalogEntry> {
    let key = name.trim();
    if let Some(e) = list().iter().find(|e| e.name.eq_ignore_ascii_case(key)) {
        return Ok(e.clone());
    }
    match parametric(key) {
        Some(('H', m)) if m >= 1 => Ok(CatalogEntry {
            name: format!("H({m})"),
            algebra: heisenberg(m)?,
            expected_corank: None,
        }),
        Some(('A', n)) => Ok(CatalogEntry {
            name: format!("A({n})"),
            algebra: abelian(n),
            expected_corank: Some(0),
        }),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// Name of the catalog algebra with the same fingerprint, if any. Algebras
/// outside the fixed list are matched against the abelian and Heisenberg
/// families.
pub fn identify(l: &LieAlgebra) -> Option<String> {
    identify_fingerprint(&Fingerprint::of(l))
}

pub fn identify_fingerprint(f: &Fingerprint) -> Option<String> {
    let cat = catalog();
    if let Some(k) = cat.fingerprints.iter().position(|g| g == f) {
        return Some(cat.entries[k].name.clone());
    }
    if f.class.is_some_and(|c| c <= 1) {
        return Some(format!("A({})", f.dim));
    }
    if f.dim >= 3 && f.dim % 2 == 1 {
        let m = (f.dim - 1) / 2;
        if Fingerprint::of(&heisenberg(m).unwrap()) == *f {
            return Some(format!("H({m})"));
        }
    }
    None
}

/// One algebra listed in the corank classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub label: String,
    pub listed_corank: usize,
    pub engine_corank: usize,
    /// Set when the listed corank disagrees with the computed one.
    pub flag: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorankRow {
    pub corank: usize,
    pub entries: Vec<TableEntry>,
}

/// The listed corank classification for `t ≤ 6`, each entry paired with
/// the engine's value. Disagreements are flagged, never corrected.
pub fn corank_table() -> Vec<CorankRow> {
    let g = |n: &str| get(n).unwrap().algebra;
    let listed: Vec<(usize, &str, LieAlgebra)> = vec![
        (0, "L3_1", g("L3_1")),
        (0, "L4_1", g("L4_1")),
        (0, "L5_1", g("L5_1")),
        (1, "L3_2", g("L3_2")),
        (2, "L4_2", g("L4_2")),
        (3, "L5_2", g("L5_2")),
        (4, "L6_2", g("L6_2")),
        (4, "L4_3", g("L4_3")),
        (4, "L5_8", g("L5_8")),
        (5, "L7_2", g("L7_2")),
        (5, "L5_4", g("L5_4")),
        (6, "L4_2 ⊕ i", plus_i(&g("L4_2"))),
        (6, "L5_5", g("L5_5")),
        (6, "H(2) ⊕ i", plus_i(&g("H(2)"))),
        (6, "L5_8 ⊕ i", plus_i(&g("L5_8"))),
        (6, "L8_2", g("L8_2")),
    ];
    let mut rows: Vec<CorankRow> = (0..=6)
        .map(|corank| CorankRow {
            corank,
            entries: Vec::new(),
        })
        .collect();
    for (t, label, algebra) in listed {
        let engine = corank(&algebra);
        let flag =
            (engine != t).then(|| format!("{label}: listed t={t}, engine computes t={engine}"));
        rows[t].entries.push(TableEntry {
            label: label.to_string(),
            listed_corank: t,
            engine_corank: engine,
            flag,
        });
    }
    rows
}

/// The claimed law `t(h(m) ⊕ i^k) = 2m + k + 1` against the computed corank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthCheck {
    pub m: usize,
    pub k: usize,
    pub claimed: usize,
    pub engine: usize,
    pub flag: Option<String>,
}

pub fn growth_law(m: usize, k: usize) -> Result<GrowthCheck> {
    let engine = corank(&heisenberg_plus_abelian(m, k)?);
    let claimed = 2 * m + k + 1;
    let flag = (engine != claimed)
        .then(|| format!("h({m}) ⊕ i^{k}: claimed t={claimed}, engine computes t={engine}"));
    Ok(GrowthCheck {
        m,
        k,
        claimed,
        engine,
        flag,
    })
}
