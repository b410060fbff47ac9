//! Weight multiplicities of `V(lambda)` by the Freudenthal recursion.
//!
//! With `mu = lambda - beta` and simply-laced normalization `(alpha_i, alpha_i) = 2`,
//!
//! ```text
//! (|lambda+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{alpha>0} mult(alpha) sum_{k>=1} m(mu+k alpha) (mu+k alpha, alpha)
//! |lambda+rho|^2 - |mu+rho|^2 = 2 sum_i beta_i (w_i + 1) - beta^T A beta
//! (nu, alpha) = sum_i e_i <nu, h_i>
//! ```
//!
//! so every quantity is an integer built from Cartan pairings. This engine is
//! independent of the crystal code and serves as its oracle.

use std::collections::HashMap;

use crate::cartan::{Rank, Weight};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRoot {
    pub coeffs: Vec<i64>,
    pub multiplicity: u64,
}

impl PositiveRoot {
    pub fn is_imaginary(&self) -> bool {
        self.coeffs.windows(2).all(|w| w[0] == w[1])
    }
}

/// Finite positive roots of sl(n) as coefficient vectors on `alpha_1..alpha_{n-1}`
/// (index 0 unused and zero).
fn finite_positive_roots(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in 1..n {
        for b in a..n {
            let mut e = vec![0; n];
            e[a..=b].iter_mut().for_each(|x| *x = 1);
            out.push(e);
        }
    }
    out
}

/// All positive roots of A_{n-1}^(1) with `e_0 <= degree_bound`.
///
/// Real roots are `alpha_bar + k delta` with `alpha_bar` a finite root (positive
/// when `k = 0`); the imaginary roots `k delta` carry multiplicity `n - 1`.
pub fn positive_roots(n: Rank, degree_bound: i64) -> Vec<PositiveRoot> {
    let n = n.get();
    let finite = finite_positive_roots(n);
    let mut out: Vec<PositiveRoot> = finite
        .iter()
        .map(|e| PositiveRoot { coeffs: e.clone(), multiplicity: 1 })
        .collect();
    for k in 1..=degree_bound.max(0) {
        out.push(PositiveRoot { coeffs: vec![k; n], multiplicity: n as u64 - 1 });
        for e in &finite {
            for sign in [1, -1] {
                let coeffs = e.iter().map(|&x| k + sign * x).collect();
                out.push(PositiveRoot { coeffs, multiplicity: 1 });
            }
        }
    }
    out.sort();
    out
}

/// `|lambda+rho|^2 - |mu+rho|^2` for `mu = lambda - sum beta_i alpha_i`.
pub fn casimir_gap(lambda: &Weight, beta: &[i64]) -> i64 {
    let n = lambda.rank();
    let linear: i64 = beta.iter().zip(lambda.w()).map(|(b, w)| b * (w + 1)).sum();
    let mut quad = 0;
    for (i, bi) in beta.iter().enumerate() {
        for (j, bj) in beta.iter().enumerate() {
            quad += bi * n.cartan(i, j) * bj;
        }
    }
    2 * linear - quad
}

/// Memoized Freudenthal evaluator for one highest weight.
#[derive(Debug, Clone)]
pub struct Freudenthal {
    lambda: Weight,
    roots: Vec<PositiveRoot>,
    root_bound: i64,
    memo: HashMap<Vec<i64>, u64>,
}

impl Freudenthal {
    pub fn new(lambda: &Weight) -> Result<Self> {
        if !lambda.is_dominant() || lambda.c().iter().any(|&c| c != 0) {
            return Err(Error::domain("highest weight must be dominant with zero lowering"));
        }
        Ok(Freudenthal {
            lambda: lambda.clone(),
            roots: positive_roots(lambda.rank(), 0),
            root_bound: 0,
            memo: HashMap::new(),
        })
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// Multiplicity of `mu` in `V(lambda)`; zero outside `lambda - Q_+`.
    pub fn multiplicity(&mut self, mu: &Weight) -> Result<u64> {
        if mu.rank() != self.lambda.rank() {
            return Err(Error::domain("rank mismatch"));
        }
        let mu = match mu.rebase(self.lambda.w()) {
            Ok(mu) => mu,
            Err(Error::Incomparable(_)) => return Ok(0),
            Err(e) => return Err(e),
        };
        if mu.c().iter().any(|&c| c < 0) {
            return Ok(0);
        }
        self.lowering_multiplicity(mu.c())
    }

    /// Multiplicity of `lambda - sum c_i alpha_i` for `c >= 0`.
    pub fn lowering_multiplicity(&mut self, c: &[i64]) -> Result<u64> {
        if let Some(&m) = self.memo.get(c) {
            return Ok(m);
        }
        if c[0] > self.root_bound {
            self.root_bound = c[0];
            self.roots = positive_roots(self.lambda.rank(), c[0]);
        }
        let mut pending: Vec<Vec<i64>> = box_below(c)
            .into_iter()
            .filter(|t| !self.memo.contains_key(t))
            .collect();
        pending.sort_by_key(|t| t.iter().sum::<i64>());
        for t in pending {
            let m = self.evaluate(&t)?;
            self.memo.insert(t, m);
        }
        Ok(self.memo[c])
    }

    fn evaluate(&self, t: &[i64]) -> Result<u64> {
        if t.iter().all(|&x| x == 0) {
            return Ok(1);
        }
        let n = self.lambda.rank();
        let w = self.lambda.w();
        let mut rhs: i128 = 0;
        for root in &self.roots {
            let e = &root.coeffs;
            let mut k = 1i64;
            loop {
                // mu + k alpha sits at lowering t - k e; stop once it leaves the cone.
                let shifted: Vec<i64> = t.iter().zip(e).map(|(ti, ei)| ti - k * ei).collect();
                if shifted.iter().any(|&x| x < 0) {
                    break;
                }
                let m = self.memo[&shifted];
                if m != 0 {
                    let pairing: i64 = (0..n.get())
                        .map(|i| {
                            let lowered: i64 =
                                (0..n.get()).map(|j| n.cartan(i, j) * shifted[j]).sum();
                            e[i] * (w[i] - lowered)
                        })
                        .sum();
                    let term = (m as i128)
                        .checked_mul(pairing as i128)
                        .and_then(|x| x.checked_mul(root.multiplicity as i128))
                        .ok_or(Error::Overflow("freudenthal sum"))?;
                    rhs = rhs.checked_add(term).ok_or(Error::Overflow("freudenthal sum"))?;
                }
                k += 1;
            }
        }
        let rhs = rhs.checked_mul(2).ok_or(Error::Overflow("freudenthal sum"))?;
        let gap = casimir_gap(&self.lambda, t) as i128;
        if gap <= 0 {
            // Only non-weights have a non-positive gap; the identity then forces rhs = 0.
            if rhs != 0 {
                return Err(Error::Consistency(format!(
                    "non-positive Casimir gap {gap} with nonzero sum {rhs} at lowering {t:?}"
                )));
            }
            return Ok(0);
        }
        if rhs % gap != 0 || rhs < 0 {
            return Err(Error::Consistency(format!(
                "Freudenthal sum {rhs} not a nonnegative multiple of {gap} at lowering {t:?}"
            )));
        }
        u64::try_from(rhs / gap).map_err(|_| Error::Overflow("multiplicity"))
    }
}

/// All vectors `0 <= t <= c` componentwise.
pub(crate) fn box_below(c: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(c.len())];
    for &ci in c {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=ci.max(-1)).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn freudenthal_multiplicity(lambda: &Weight, mu: &Weight) -> Result<u64> {
    Freudenthal::new(lambda)?.multiplicity(mu)
}
