//! Fixed-point counts, attracting-set component counts, symplectic-leaf labels
//! and multiplicity-space dimensions for Coulomb branches `M(lambda, mu)` of
//! affine type A quiver gauge theories, computed on the representation side.
//!
//! A leaf is labeled by a dominant `kappa` and a partition `k` with
//! `lambda - |k| delta >= kappa >= mu`. Its regular part is empty exactly
//! when `dim W = level(lambda) = 1` and `kappa != mu`.

use serde::Serialize;

use crate::cartan::Weight;
use crate::crystal::{
    lowering_of, tensor_splittings_with, BranchTable, CrystalGraph, GenerationConfig,
};
use crate::error::{Error, Result};
use crate::fock::Partition;
use crate::freudenthal::box_below;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Stratum {
    pub kappa: Weight,
    pub k: Partition,
    pub regular_locus_empty: bool,
}

fn dominant_top(lambda: &Weight) -> Result<()> {
    if !lambda.is_dominant() || lambda.c().iter().any(|&x| x != 0) || lambda.level() < 1 {
        return Err(Error::domain("lambda must be dominant of positive level with zero lowering"));
    }
    Ok(())
}

/// Number of fixed points of the one-parameter group on `M(lambda, mu)`: one
/// when `mu` is a weight of `V(lambda)`, zero otherwise.
pub fn fixed_point_count_with(lambda: &Weight, mu: &Weight, config: &GenerationConfig) -> Result<u64> {
    Ok(u64::from(attracting_component_count_with(lambda, mu, config)? > 0))
}

pub fn fixed_point_count(lambda: &Weight, mu: &Weight) -> Result<u64> {
    fixed_point_count_with(lambda, mu, &GenerationConfig::default())
}

/// Predicted number of irreducible components of the attracting set, i.e.
/// `dim V_mu(lambda)`.
pub fn attracting_component_count_with(
    lambda: &Weight,
    mu: &Weight,
    config: &GenerationConfig,
) -> Result<u64> {
    crate::crystal::weight_multiplicity_with(lambda, mu, config)
}

pub fn attracting_component_count(lambda: &Weight, mu: &Weight) -> Result<u64> {
    attracting_component_count_with(lambda, mu, &GenerationConfig::default())
}

/// All stratum labels `(kappa, k)` of `M(lambda, mu)`, sorted by height of
/// `lambda - kappa`, then `c(kappa)`, then `k`.
pub fn enumerate_leaves(lambda: &Weight, mu: &Weight, include_empty: bool) -> Result<Vec<Stratum>> {
    dominant_top(lambda)?;
    let v = lowering_of(lambda, mu)?
        .ok_or_else(|| Error::domain("mu must lie in lambda minus the nonnegative root cone"))?;
    let mu = lambda.with_lowering(v.clone())?;
    let dim_w = lambda.level();
    let mut out = Vec::new();
    for c in box_below(&v) {
        let kappa = lambda.with_lowering(c.clone())?;
        if !kappa.is_dominant() {
            continue;
        }
        let regular_locus_empty = dim_w == 1 && kappa != mu;
        if regular_locus_empty && !include_empty {
            continue;
        }
        let max_size = *c.iter().min().expect("rank >= 2");
        for size in 0..=max_size as u32 {
            for k in Partition::all_of_size(size) {
                out.push(Stratum { kappa: kappa.clone(), k, regular_locus_empty });
            }
        }
    }
    out.sort_by(|a, b| {
        (a.kappa.height(), a.kappa.c(), &a.k).cmp(&(b.kappa.height(), b.kappa.c(), &b.k))
    });
    Ok(out)
}

/// Pairs `(mu1, mu2)` with `mu = mu1 + mu2` and both factor multiplicities
/// positive; these index the fixed points on the tensor-product deformation.
pub fn tensor_fixed_points_with(
    lambda1: &Weight,
    lambda2: &Weight,
    mu: &Weight,
    config: &GenerationConfig,
) -> Result<Vec<(Weight, Weight)>> {
    Ok(tensor_splittings_with(lambda1, lambda2, mu, config)?
        .into_iter()
        .filter(|s| s.mult1 > 0 && s.mult2 > 0)
        .map(|s| (s.mu1, s.mu2))
        .collect())
}

pub fn tensor_fixed_points(lambda1: &Weight, lambda2: &Weight, mu: &Weight) -> Result<Vec<(Weight, Weight)>> {
    tensor_fixed_points_with(lambda1, lambda2, mu, &GenerationConfig::default())
}

/// One row of the multiplicity-space table for `Phi_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SheafRow {
    pub k: i64,
    pub kappa: Weight,
    pub pairing: i64,
    pub multiplicity: u64,
}

/// Rows of a [`BranchTable`] relabeled by `kappa' = mu + k alpha_i`, keeping
/// only rows whose sl(2) string reaches `mu` (`<kappa', h_i> >= k`).
pub fn sheaf_rows(mu: &Weight, i: usize, table: &BranchTable) -> Result<Vec<SheafRow>> {
    let mut rows = Vec::new();
    for (k, m) in table.iter() {
        let mut c = mu.c().to_vec();
        c[i] -= k;
        let kappa = mu.with_lowering(c)?;
        let pairing = kappa.pairing(i);
        if pairing < k {
            continue;
        }
        rows.push(SheafRow { k, kappa, pairing, multiplicity: m });
    }
    Ok(rows)
}

pub fn sheaf_multiplicity_table_with(
    lambda: &Weight,
    mu: &Weight,
    i: usize,
    config: &GenerationConfig,
) -> Result<Vec<SheafRow>> {
    dominant_top(lambda)?;
    let Some(c) = lowering_of(lambda, mu)? else {
        return Ok(Vec::new());
    };
    let graph = CrystalGraph::generate(lambda, &c, config)?;
    let table = graph.levi_branching(&c, i)?;
    sheaf_rows(&lambda.with_lowering(c)?, i, &table)
}

pub fn sheaf_multiplicity_table(lambda: &Weight, mu: &Weight, i: usize) -> Result<Vec<SheafRow>> {
    sheaf_multiplicity_table_with(lambda, mu, i, &GenerationConfig::default())
}

/// Tab-separated rendering with a header line.
pub fn sheaf_rows_tsv(rows: &[SheafRow]) -> String {
    let mut out = String::from("k\tkappa_w\tkappa_c\tpairing\tmultiplicity\n");
    for row in rows {
        let fmt = |xs: &[i64]| xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            row.k,
            fmt(row.kappa.w()),
            fmt(row.kappa.c()),
            row.pairing,
            row.multiplicity
        ));
    }
    out
}
