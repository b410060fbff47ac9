//! Weight-lattice arithmetic for the affine Kac-Moody algebra of type
//! A_{n-1}^(1).
//!
//! A weight is stored in root-lattice coordinates relative to a dominant base:
//!
//! ```text
//! mu = sum_i w_i Lambda_i - sum_i c_i alpha_i
//! ```
//!
//! Expanding `alpha_j = sum_i a_ij Lambda_i + [j == 0] delta` shows that the
//! lattice element is determined by the coroot pairings and by `c_0`. The
//! δ-degree is therefore normalized as `c_0`, so every highest weight has
//! degree 0 and `mu - delta` has degree 1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of nodes of the affine Dynkin diagram (the `n` of sl(n)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Rank(n));
        }
        Ok(Rank(n))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Entry `a_ij` of the affine Cartan matrix, indices taken mod n.
    #[inline]
    pub fn cartan(self, i: usize, j: usize) -> i64 {
        let n = self.0;
        let (i, j) = (i % n, j % n);
        if i == j {
            2
        } else if n == 2 {
            -2
        } else if (i + 1) % n == j || (j + 1) % n == i {
            -1
        } else {
            0
        }
    }

    /// Residue `i` reduced into `0..n`.
    #[inline]
    pub fn residue(self, i: i64) -> usize {
        i.rem_euclid(self.0 as i64) as usize
    }
}

impl TryFrom<usize> for Rank {
    type Error = Error;

    fn try_from(n: usize) -> Result<Self> {
        Rank::new(n)
    }
}

impl From<Rank> for usize {
    fn from(r: Rank) -> usize {
        r.0
    }
}

/// The generalized Cartan matrix of A_{n-1}^(1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    n: Rank,
    a: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn rank(&self) -> Rank {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }
}

pub fn cartan_matrix(n: usize) -> Result<CartanMatrix> {
    let n = Rank::new(n)?;
    let a = (0..n.get())
        .map(|i| (0..n.get()).map(|j| n.cartan(i, j)).collect())
        .collect();
    Ok(CartanMatrix { n, a })
}

/// An affine sl(n) weight `sum w_i Lambda_i - sum c_i alpha_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightRepr")]
pub struct Weight {
    n: Rank,
    w: Vec<i64>,
    c: Vec<i64>,
}

#[derive(Deserialize)]
struct WeightRepr {
    n: Rank,
    w: Vec<i64>,
    c: Vec<i64>,
}

impl TryFrom<WeightRepr> for Weight {
    type Error = Error;

    fn try_from(r: WeightRepr) -> Result<Self> {
        Weight::new(r.n, r.w, r.c)
    }
}

/// Level, δ-degree and coroot pairings of a weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightInvariants {
    pub level: i64,
    pub delta_degree: i64,
    pub pairings: Vec<i64>,
}

impl Weight {
    pub fn new(n: Rank, w: Vec<i64>, c: Vec<i64>) -> Result<Self> {
        if w.len() != n.get() || c.len() != n.get() {
            return Err(Error::domain(format!(
                "weight vectors must have length {}, got w: {}, c: {}",
                n.get(),
                w.len(),
                c.len()
            )));
        }
        Ok(Weight { n, w, c })
    }

    /// `sum w_i Lambda_i` with no lowering.
    pub fn highest(n: Rank, w: Vec<i64>) -> Result<Self> {
        let c = vec![0; n.get()];
        Weight::new(n, w, c)
    }

    /// The fundamental weight `Lambda_i`.
    pub fn fundamental(n: Rank, i: usize) -> Self {
        let mut w = vec![0; n.get()];
        w[i % n.get()] = 1;
        Weight { n, w, c: vec![0; n.get()] }
    }

    /// `sum_i Lambda_i`; pairs to 1 with every simple coroot.
    pub fn rho(n: Rank) -> Self {
        Weight { n, w: vec![1; n.get()], c: vec![0; n.get()] }
    }

    pub fn rank(&self) -> Rank {
        self.n
    }

    pub fn w(&self) -> &[i64] {
        &self.w
    }

    pub fn c(&self) -> &[i64] {
        &self.c
    }

    /// The base `sum w_i Lambda_i` of this weight.
    pub fn top(&self) -> Weight {
        Weight { n: self.n, w: self.w.clone(), c: vec![0; self.n.get()] }
    }

    /// Same base, different lowering vector.
    pub fn with_lowering(&self, c: Vec<i64>) -> Result<Weight> {
        Weight::new(self.n, self.w.clone(), c)
    }

    /// `self - alpha_i`.
    pub fn lower(&self, i: usize) -> Weight {
        let mut next = self.clone();
        next.c[i % self.n.get()] += 1;
        next
    }

    /// `self + alpha_i`.
    pub fn raise(&self, i: usize) -> Weight {
        let mut next = self.clone();
        next.c[i % self.n.get()] -= 1;
        next
    }

    /// `self - k delta`.
    pub fn minus_delta(&self, k: i64) -> Weight {
        let mut next = self.clone();
        next.c.iter_mut().for_each(|x| *x += k);
        next
    }

    /// `<mu, h_i> = w_i - sum_j a_ij c_j`.
    pub fn pairing(&self, i: usize) -> i64 {
        let lowered: i64 = self
            .c
            .iter()
            .enumerate()
            .map(|(j, &cj)| self.n.cartan(i, j) * cj)
            .sum();
        self.w[i] - lowered
    }

    pub fn pairings(&self) -> Vec<i64> {
        (0..self.n.get()).map(|i| self.pairing(i)).collect()
    }

    pub fn level(&self) -> i64 {
        self.w.iter().sum()
    }

    pub fn delta_degree(&self) -> i64 {
        self.c[0]
    }

    /// Total lowering height `sum c_i`.
    pub fn height(&self) -> i64 {
        self.c.iter().sum()
    }

    pub fn invariants(&self) -> WeightInvariants {
        WeightInvariants {
            level: self.level(),
            delta_degree: self.delta_degree(),
            pairings: self.pairings(),
        }
    }

    pub fn is_dominant(&self) -> bool {
        (0..self.n.get()).all(|i| self.pairing(i) >= 0)
    }

    /// True when both coordinates describe the same lattice element.
    pub fn same_as(&self, other: &Weight) -> bool {
        self.n == other.n
            && self.delta_degree() == other.delta_degree()
            && self.pairings() == other.pairings()
    }

    /// Express the same lattice element against the base `sum w_i Lambda_i`.
    ///
    /// Fails when the two bases differ by something outside the root lattice,
    /// which includes any difference in level.
    pub fn rebase(&self, w: &[i64]) -> Result<Weight> {
        let n = self.n.get();
        if w.len() != n {
            return Err(Error::domain(format!("base must have length {n}")));
        }
        if w == self.w.as_slice() {
            return Ok(self.clone());
        }
        let diff: Vec<i64> = w.iter().zip(&self.w).map(|(a, b)| a - b).collect();
        if diff.iter().sum::<i64>() != 0 {
            return Err(Error::Incomparable(format!(
                "levels differ ({} vs {})",
                self.level(),
                w.iter().sum::<i64>()
            )));
        }
        // Solve A x = diff with x_0 = 0 on the finite A_{n-1} block, whose
        // inverse is min(i,j)(n-max(i,j))/n.
        let mut x = vec![0i64; n];
        for (i, xi) in x.iter_mut().enumerate().skip(1) {
            let mut acc: i64 = 0;
            for (j, dj) in diff.iter().enumerate().skip(1) {
                acc += (i.min(j) * (n - i.max(j))) as i64 * dj;
            }
            if acc % n as i64 != 0 {
                return Err(Error::Incomparable(format!(
                    "bases {:?} and {:?} differ outside the root lattice",
                    self.w, w
                )));
            }
            *xi = acc / n as i64;
        }
        let c = self.c.iter().zip(&x).map(|(c, x)| c + x).collect();
        Weight::new(self.n, w.to_vec(), c)
    }
}

pub fn weight_invariants(mu: &Weight) -> WeightInvariants {
    mu.invariants()
}

pub fn is_dominant(mu: &Weight) -> bool {
    mu.is_dominant()
}

/// `nu <= mu`, i.e. `mu - nu` is a nonnegative integer combination of simple
/// roots.
pub fn dominance_leq(nu: &Weight, mu: &Weight) -> Result<bool> {
    if nu.n != mu.n {
        return Err(Error::Incomparable("ranks differ".into()));
    }
    let nu = nu.rebase(&mu.w)?;
    Ok(nu.c.iter().zip(&mu.c).all(|(a, b)| a >= b))
}

/// Dimension vectors `(w, v)` of the quiver gauge theory to the pair
/// `(lambda, mu) = (sum w_i Lambda_i, lambda - sum v_i alpha_i)`.
pub fn weights_from_dims(n: usize, w: &[i64], v: &[i64]) -> Result<(Weight, Weight)> {
    let n = Rank::new(n)?;
    if w.len() != n.get() || v.len() != n.get() {
        return Err(Error::domain(format!(
            "dimension vectors must have length {}",
            n.get()
        )));
    }
    if w.iter().chain(v).any(|&x| x < 0) {
        return Err(Error::domain("dimension vectors must be nonnegative"));
    }
    if w.iter().all(|&x| x == 0) {
        return Err(Error::NoHighestWeight);
    }
    let lambda = Weight::highest(n, w.to_vec())?;
    let mu = lambda.with_lowering(v.to_vec())?;
    Ok((lambda, mu))
}

/// Inverse of [`weights_from_dims`]: reads `(w, v)` off `mu` written against
/// its own base.
pub fn dims_from_weight(mu: &Weight) -> (Vec<i64>, Vec<i64>) {
    (mu.w.clone(), mu.c.clone())
}
