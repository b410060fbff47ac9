use crate::cartan::{Rank, Weight};
use crate::error::{Error, Result};
use crate::fock::ChargedPartition;
use crate::signature;

/// Tensor signature data at one residue: totals plus the factor each root
/// operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorEpsPhi {
    pub eps: u32,
    pub phi: u32,
    pub position_f: Option<usize>,
    pub position_e: Option<usize>,
}

/// An element of `B(Lambda_{i_1}) (x) ... (x) B(Lambda_{i_L})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrystalNode {
    word: Vec<ChargedPartition>,
}

/// Residue `i` repeated `w_i` times, in increasing residue order.
pub fn canonical_charges(lambda: &Weight) -> Result<Vec<usize>> {
    if lambda.w().iter().any(|&x| x < 0) {
        return Err(Error::domain("highest weight must have nonnegative w"));
    }
    Ok(lambda
        .w()
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize))
        .collect())
}

impl CrystalNode {
    /// The all-empty word, highest weight of the tensor product.
    pub fn vacuum(charges: &[usize], n: Rank) -> Self {
        CrystalNode { word: charges.iter().map(|&q| ChargedPartition::vacuum(q, n)).collect() }
    }

    pub fn from_word(word: Vec<ChargedPartition>) -> Result<Self> {
        let Some(first) = word.first() else {
            return Err(Error::domain("a crystal word needs at least one factor"));
        };
        let n = first.rank();
        if word.iter().any(|b| b.rank() != n) {
            return Err(Error::domain("all factors of a word must share the rank"));
        }
        Ok(CrystalNode { word })
    }

    pub fn word(&self) -> &[ChargedPartition] {
        &self.word
    }

    pub fn rank(&self) -> Rank {
        self.word[0].rank()
    }

    pub fn charges(&self) -> Vec<usize> {
        self.word.iter().map(ChargedPartition::charge).collect()
    }

    pub fn concat(&self, other: &CrystalNode) -> CrystalNode {
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        CrystalNode { word }
    }

    pub fn eps_phi(&self, i: usize) -> TensorEpsPhi {
        let reduced = signature::reduce(self.word.iter().map(|b| {
            let ep = b.eps_phi(i);
            (ep.eps, ep.phi)
        }));
        TensorEpsPhi {
            eps: reduced.eps,
            phi: reduced.phi,
            position_f: reduced.lower_at,
            position_e: reduced.raise_at,
        }
    }

    pub fn is_highest(&self) -> bool {
        (0..self.rank().get()).all(|i| self.eps_phi(i).eps == 0)
    }

    pub fn lower(&self, i: usize) -> Option<CrystalNode> {
        let at = self.eps_phi(i).position_f?;
        let mut word = self.word.clone();
        word[at] = word[at].lower(i)?;
        Some(CrystalNode { word })
    }

    pub fn raise(&self, i: usize) -> Option<CrystalNode> {
        let at = self.eps_phi(i).position_e?;
        let mut word = self.word.clone();
        word[at] = word[at].raise(i)?;
        Some(CrystalNode { word })
    }

    /// Lowering vector relative to `sum_k Lambda_{charge_k}`.
    pub fn lowering(&self) -> Vec<i64> {
        let mut c = vec![0; self.rank().get()];
        for b in &self.word {
            for (acc, x) in c.iter_mut().zip(b.residue_counts()) {
                *acc += x;
            }
        }
        c
    }

    pub fn weight(&self) -> Weight {
        let n = self.rank();
        let mut w = vec![0; n.get()];
        for b in &self.word {
            w[b.charge()] += 1;
        }
        Weight::new(n, w, self.lowering()).expect("lengths match rank")
    }
}

pub fn tensor_eps_phi(node: &CrystalNode, i: usize) -> TensorEpsPhi {
    node.eps_phi(i)
}
