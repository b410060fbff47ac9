//! Level-one crystals `B(Lambda_i)` on charged partitions.
//!
//! The cell in row `r`, column `c` (both 1-based) of a partition with charge
//! `i` has residue `(c - r + i) mod n`. Lowering `f_j` adds the good addable
//! `j`-cell, raising `e_j` removes the good removable `j`-cell. Addable and
//! removable `j`-cells are read by increasing row and reduced with
//! [`crate::signature::reduce`], addable cells counting as `+`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{Rank, Weight};
use crate::error::{Error, Result};
use crate::signature;

/// An integer partition in canonical form: positive, weakly decreasing parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Accepts any weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("parts {parts:?} are not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::domain("zero part inside a partition"));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `r` (1-based); zero past the last row.
    fn row(&self, r: usize) -> u32 {
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    /// All partitions of `m`, in lexicographic order on the part sequence.
    pub fn all_of_size(m: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for part in 1..=rest.min(max) {
                prefix.push(part);
                go(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(m, m, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A 1-based `(row, column)` position in a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

pub fn cell_residue(row: usize, col: usize, charge: usize, n: Rank) -> usize {
    n.residue(col as i64 - row as i64 + charge as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Raise,
}

/// Result of the signature rule at one residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EpsPhi {
    pub eps: u32,
    pub phi: u32,
    pub good_addable: Option<Cell>,
    pub good_removable: Option<Cell>,
}

/// A node of `B(Lambda_charge)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargedPartition {
    partition: Partition,
    charge: usize,
    n: Rank,
}

/// JSON form `{"parts": [...], "charge": i}`; the rank comes from context.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChargedPartitionRepr {
    pub parts: Partition,
    pub charge: usize,
}

#[derive(Clone, Copy)]
enum Edge {
    Addable,
    Removable,
}

impl ChargedPartition {
    pub fn new(partition: Partition, charge: usize, n: Rank) -> Result<Self> {
        if charge >= n.get() {
            return Err(Error::domain(format!("charge {charge} out of range for n = {}", n.get())));
        }
        Ok(ChargedPartition { partition, charge, n })
    }

    /// The highest-weight node of `B(Lambda_charge)`.
    pub fn vacuum(charge: usize, n: Rank) -> Self {
        ChargedPartition { partition: Partition::empty(), charge: charge % n.get(), n }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn charge(&self) -> usize {
        self.charge
    }

    pub fn rank(&self) -> Rank {
        self.n
    }

    pub fn residue(&self, cell: Cell) -> usize {
        cell_residue(cell.row, cell.col, self.charge, self.n)
    }

    pub fn to_repr(&self) -> ChargedPartitionRepr {
        ChargedPartitionRepr { parts: self.partition.clone(), charge: self.charge }
    }

    pub fn from_repr(repr: ChargedPartitionRepr, n: Rank) -> Result<Self> {
        ChargedPartition::new(repr.parts, repr.charge, n)
    }

    /// Addable and removable `i`-cells by increasing row.
    fn rim(&self, i: usize) -> Vec<(Edge, Cell)> {
        let p = &self.partition;
        let rows = p.parts().len();
        let mut out = Vec::new();
        for r in 1..=rows + 1 {
            let len = p.row(r) as usize;
            let removable = len > 0 && len > p.row(r + 1) as usize;
            let addable = r == 1 || p.row(r - 1) as usize > len;
            // Both cells in one row differ in residue by 1, so at most one is an i-cell.
            if removable {
                let cell = Cell { row: r, col: len };
                if self.residue(cell) == i {
                    out.push((Edge::Removable, cell));
                }
            }
            if addable {
                let cell = Cell { row: r, col: len + 1 };
                if self.residue(cell) == i {
                    out.push((Edge::Addable, cell));
                }
            }
        }
        out
    }

    pub fn eps_phi(&self, i: usize) -> EpsPhi {
        let rim = self.rim(i % self.n.get());
        let reduced = signature::reduce(rim.iter().map(|(edge, _)| match edge {
            Edge::Addable => (0, 1),
            Edge::Removable => (1, 0),
        }));
        EpsPhi {
            eps: reduced.eps,
            phi: reduced.phi,
            good_addable: reduced.lower_at.map(|k| rim[k].1),
            good_removable: reduced.raise_at.map(|k| rim[k].1),
        }
    }

    pub fn apply(&self, i: usize, direction: Direction) -> Option<ChargedPartition> {
        let ep = self.eps_phi(i);
        let mut parts = self.partition.0.clone();
        match direction {
            Direction::Lower => {
                let cell = ep.good_addable?;
                if cell.row > parts.len() {
                    parts.push(1);
                } else {
                    parts[cell.row - 1] += 1;
                }
            }
            Direction::Raise => {
                let cell = ep.good_removable?;
                parts[cell.row - 1] -= 1;
                if parts[cell.row - 1] == 0 {
                    parts.pop();
                }
            }
        }
        Some(ChargedPartition { partition: Partition(parts), charge: self.charge, n: self.n })
    }

    pub fn lower(&self, i: usize) -> Option<ChargedPartition> {
        self.apply(i, Direction::Lower)
    }

    pub fn raise(&self, i: usize) -> Option<ChargedPartition> {
        self.apply(i, Direction::Raise)
    }

    /// Number of cells of each residue.
    pub fn residue_counts(&self) -> Vec<i64> {
        let n = self.n.get();
        let mut counts = vec![0i64; n];
        for (r, &len) in self.partition.parts().iter().enumerate() {
            let start = self.n.residue(1 - (r as i64 + 1) + self.charge as i64);
            let len = len as usize;
            // A row of length len covers len consecutive residues from start.
            for (k, count) in counts.iter_mut().enumerate() {
                let offset = (k + n - start) % n;
                if offset < len {
                    *count += (len - offset).div_ceil(n) as i64;
                }
            }
        }
        counts
    }

    pub fn weight(&self) -> Weight {
        Weight::fundamental(self.n, self.charge)
            .with_lowering(self.residue_counts())
            .expect("residue counts have length n")
    }
}

pub fn eps_phi(b: &ChargedPartition, i: usize) -> EpsPhi {
    b.eps_phi(i)
}

pub fn apply_root_operator(
    b: &ChargedPartition,
    i: usize,
    direction: Direction,
) -> Option<ChargedPartition> {
    b.apply(i, direction)
}

pub fn fock_weight(b: &ChargedPartition) -> Weight {
    b.weight()
}
