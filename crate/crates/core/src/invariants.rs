//! Basis-independent invariants used to tell algebras apart.

use serde::Serialize;

use crate::cohomology::cohomology_report;
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;

/// Dimensions of the central series plus cohomological data.
///
/// `centralizer_dims[i]` is `dim C_l(γ_{i+1})`, the centralizer of each
/// lower-central-series term; it separates `L5_6` from `L5_7`, which agree
/// on every other entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub lcs_dims: Vec<usize>,
    pub ucs_dims: Vec<usize>,
    /// `None` when not nilpotent.
    pub class: Option<usize>,
    pub multiplier_dim: usize,
    pub corank: usize,
    pub centralizer_dims: Vec<usize>,
}

struct SeriesData {
    lcs_dims: Vec<usize>,
    ucs_dims: Vec<usize>,
    class: Option<usize>,
    centralizer_dims: Vec<usize>,
}

fn series_data(l: &LieAlgebra) -> SeriesData {
    let lcs = l.lower_central_series();
    let ucs = l.upper_central_series();
    let class = ucs.last().unwrap().is_full().then(|| ucs.len() - 1);
    SeriesData {
        lcs_dims: lcs.iter().map(Subspace::dim).collect(),
        ucs_dims: ucs.iter().map(Subspace::dim).collect(),
        class,
        centralizer_dims: lcs.iter().map(|g| l.centralizer(g).dim()).collect(),
    }
}

impl Fingerprint {
    pub fn of(l: &LieAlgebra) -> Self {
        let s = series_data(l);
        let coh = cohomology_report(l);
        Fingerprint {
            dim: l.dim(),
            lcs_dims: s.lcs_dims,
            ucs_dims: s.ucs_dims,
            class: s.class,
            multiplier_dim: coh.multiplier_dim,
            corank: coh.corank,
            centralizer_dims: s.centralizer_dims,
        }
    }

    /// `Fingerprint::of(l) == *self`, skipping the cohomology computation
    /// when the cheaper series data already differ.
    pub fn matches(&self, l: &LieAlgebra) -> bool {
        if l.dim() != self.dim {
            return false;
        }
        let s = series_data(l);
        if s.lcs_dims != self.lcs_dims
            || s.ucs_dims != self.ucs_dims
            || s.class != self.class
            || s.centralizer_dims != self.centralizer_dims
        {
            return false;
        }
        cohomology_report(l).multiplier_dim == self.multiplier_dim
    }
}

pub fn fingerprint(l: &LieAlgebra) -> Fingerprint {
    Fingerprint::of(l)
}
