use std::collections::BTreeMap;

use serde::Serialize;

use super::graph::{CrystalGraph, GenerationConfig};
use crate::cartan::Weight;
use crate::error::{Error, Result};
use crate::freudenthal::box_below;

/// Branching multiplicities `k -> m_k` for the restriction to the sl(2) at
/// node `i`: `m_k` counts `i`-highest nodes of weight `mu + k alpha_i`.
/// Only nonzero entries are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BranchTable(BTreeMap<i64, u64>);

impl BranchTable {
    pub fn entries(&self) -> &BTreeMap<i64, u64> {
        &self.0
    }

    pub fn get(&self, k: i64) -> u64 {
        self.0.get(&k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.0.iter().map(|(&k, &m)| (k, m))
    }
}

/// `mu` against the base of `lambda`; `None` when it cannot be a weight of
/// `V(lambda)` because it sits outside `lambda - Q_+`.
pub(crate) fn lowering_of(lambda: &Weight, mu: &Weight) -> Result<Option<Vec<i64>>> {
    if lambda.rank() != mu.rank() {
        return Err(Error::domain("rank mismatch"));
    }
    match mu.rebase(lambda.w()) {
        Ok(m) if m.c().iter().all(|&x| x >= 0) => Ok(Some(m.c().to_vec())),
        Ok(_) | Err(Error::Incomparable(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn check_highest(lambda: &Weight) -> Result<()> {
    if !lambda.is_dominant() || lambda.c().iter().any(|&x| x != 0) {
        return Err(Error::domain("highest weight must be dominant with zero lowering"));
    }
    if lambda.level() < 1 {
        return Err(Error::NoHighestWeight);
    }
    Ok(())
}

impl CrystalGraph {
    /// Branching table at lowering `c` (must be covered by the budget).
    pub fn levi_branching(&self, c: &[i64], i: usize) -> Result<BranchTable> {
        let n = self.rank().get();
        if i >= n {
            return Err(Error::domain(format!("residue {i} out of range for n = {n}")));
        }
        if !self.covers(c) {
            return Err(Error::domain(format!("lowering {c:?} lies outside budget {:?}", self.budget())));
        }
        let highest = self.i_highest_counts(i);
        let counts = self.weight_counts();
        let mult = |t: &[i64]| counts.get(t).copied().unwrap_or(0);
        let mu = self.lambda().with_lowering(c.to_vec())?;
        let mut table = BTreeMap::new();
        for k in 0..=c[i] {
            let mut t = c.to_vec();
            t[i] -= k;
            let direct = highest.get(&t).copied().unwrap_or(0);
            // sl(2) strings: i-highest count = mult(kappa) - mult(kappa + alpha_i) when <kappa, h_i> >= 0.
            let pairing = mu.pairing(i) + 2 * k;
            let by_strings = if pairing >= 0 {
                let mut above = t.clone();
                above[i] -= 1;
                let up = if above[i] >= 0 { mult(&above) } else { 0 };
                mult(&t).checked_sub(up).ok_or_else(|| {
                    Error::Consistency(format!("sl(2) string at {t:?} is not unimodal"))
                })?
            } else {
                0
            };
            if direct != by_strings {
                return Err(Error::Consistency(format!(
                    "branching at {t:?}: {direct} i-highest nodes but strings give {by_strings}"
                )));
            }
            if direct > 0 {
                table.insert(k, direct);
            }
        }
        Ok(BranchTable(table))
    }
}

pub fn weight_multiplicity_with(lambda: &Weight, mu: &Weight, config: &GenerationConfig) -> Result<u64> {
    check_highest(lambda)?;
    let Some(c) = lowering_of(lambda, mu)? else {
        return Ok(0);
    };
    let graph = CrystalGraph::generate(lambda, &c, config)?;
    Ok(graph.multiplicity(&c))
}

pub fn weight_multiplicity(lambda: &Weight, mu: &Weight) -> Result<u64> {
    weight_multiplicity_with(lambda, mu, &GenerationConfig::default())
}

pub fn levi_branching_with(
    lambda: &Weight,
    mu: &Weight,
    i: usize,
    config: &GenerationConfig,
) -> Result<BranchTable> {
    check_highest(lambda)?;
    let Some(c) = lowering_of(lambda, mu)? else {
        return Ok(BranchTable::default());
    };
    CrystalGraph::generate(lambda, &c, config)?.levi_branching(&c, i)
}

pub fn levi_branching(lambda: &Weight, mu: &Weight, i: usize) -> Result<BranchTable> {
    levi_branching_with(lambda, mu, i, &GenerationConfig::default())
}

/// Highest-weight nodes of the truncated `B(lambda1) (x) B(lambda2)`, by weight.
///
/// Pairs `b1 (x) b2` are taken with `c(b1) + c(b2) <= budget` and tested with
/// the signature rule on the concatenated word.
pub fn tensor_highest_weights_with(
    lambda1: &Weight,
    lambda2: &Weight,
    budget: &[i64],
    config: &GenerationConfig,
) -> Result<BTreeMap<Weight, u64>> {
    let g1 = CrystalGraph::generate(lambda1, budget, config)?;
    let g2 = CrystalGraph::generate(lambda2, budget, config)?;
    tensor_highest_weights_from(&g1, &g2)
}

pub fn tensor_highest_weights(
    lambda1: &Weight,
    lambda2: &Weight,
    budget: &[i64],
) -> Result<BTreeMap<Weight, u64>> {
    tensor_highest_weights_with(lambda1, lambda2, budget, &GenerationConfig::default())
}

/// Same as [`tensor_highest_weights`] on already generated factors; the budget
/// is taken from the first graph.
pub fn tensor_highest_weights_from(g1: &CrystalGraph, g2: &CrystalGraph) -> Result<BTreeMap<Weight, u64>> {
    if g1.rank() != g2.rank() || g1.budget() != g2.budget() {
        return Err(Error::domain("tensor factors must share rank and budget"));
    }
    let budget = g1.budget();
    let base: Vec<i64> = g1.lambda().w().iter().zip(g2.lambda().w()).map(|(a, b)| a + b).collect();
    let top = Weight::highest(g1.rank(), base)?;
    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    for (id1, b1) in g1.nodes().iter().enumerate() {
        let c1 = g1.lowering(id1);
        for (id2, b2) in g2.nodes().iter().enumerate() {
            let c: Vec<i64> = c1.iter().zip(g2.lowering(id2)).map(|(a, b)| a + b).collect();
            if c.iter().zip(budget).any(|(x, b)| x > b) {
                continue;
            }
            if b1.concat(b2).is_highest() {
                *out.entry(top.with_lowering(c)?).or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}

/// One way of writing `mu = mu1 + mu2`, with the factor multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Splitting {
    pub mu1: Weight,
    pub mu2: Weight,
    pub mult1: u64,
    pub mult2: u64,
}

/// All splittings `mu = mu1 + mu2` with `mu_a` in `lambda_a - Q_+`, in
/// lexicographic order of `c(mu1)`.
pub fn tensor_splittings_with(
    lambda1: &Weight,
    lambda2: &Weight,
    mu: &Weight,
    config: &GenerationConfig,
) -> Result<Vec<Splitting>> {
    check_highest(lambda1)?;
    check_highest(lambda2)?;
    if lambda1.rank() != lambda2.rank() {
        return Err(Error::domain("rank mismatch"));
    }
    let base: Vec<i64> = lambda1.w().iter().zip(lambda2.w()).map(|(a, b)| a + b).collect();
    let top = Weight::highest(lambda1.rank(), base)?;
    let Some(c) = lowering_of(&top, mu)? else {
        return Ok(Vec::new());
    };
    let m1 = CrystalGraph::generate(lambda1, &c, config)?.weight_counts();
    let m2 = CrystalGraph::generate(lambda2, &c, config)?.weight_counts();
    let mut out = Vec::new();
    for x in box_below(&c) {
        let y: Vec<i64> = c.iter().zip(&x).map(|(a, b)| a - b).collect();
        out.push(Splitting {
            mult1: m1.get(&x).copied().unwrap_or(0),
            mult2: m2.get(&y).copied().unwrap_or(0),
            mu1: lambda1.with_lowering(x)?,
            mu2: lambda2.with_lowering(y)?,
        });
    }
    Ok(out)
}

pub fn tensor_weight_multiplicity_with(
    lambda1: &Weight,
    lambda2: &Weight,
    mu: &Weight,
    config: &GenerationConfig,
) -> Result<u64> {
    tensor_splittings_with(lambda1, lambda2, mu, config)?
        .iter()
        .try_fold(0u64, |acc, s| {
            s.mult1.checked_mul(s.mult2).and_then(|p| acc.checked_add(p))
        })
        .ok_or(Error::Overflow("tensor multiplicity"))
}

pub fn tensor_weight_multiplicity(lambda1: &Weight, lambda2: &Weight, mu: &Weight) -> Result<u64> {
    tensor_weight_multiplicity_with(lambda1, lambda2, mu, &GenerationConfig::default())
}
