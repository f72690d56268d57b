use std::fmt;

use crate::error::{Error, Result};

/// A multi-index `n = (n_1, …, n_r)` of nonnegative integers.
///
/// The size `|n| = n_1 + … + n_r` is the degree of the polynomial indexed
/// by `n`. Directions are 0-based in this API: `k` ranges over `0..r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    entries: Vec<u32>,
}

impl MultiIndex {
    /// Builds a multi-index from its entries. Requires at least one entry.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::validation("multi-index needs at least one entry"));
        }
        Ok(MultiIndex { entries })
    }

    /// The zero multi-index of dimension `r`.
    pub fn zero(r: usize) -> Result<Self> {
        MultiIndex::new(vec![0; r])
    }

    /// Number of components `r`.
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// The size `|n| = Σ n_j`, also the polynomial degree.
    pub fn size(&self) -> u64 {
        self.entries.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn entry(&self, k: usize) -> u32 {
        self.entries[k]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// The neighbor `n + e_k`. Errors when `k >= r`.
    pub fn up(&self, k: usize) -> Result<Self> {
        if k >= self.dim() {
            return Err(Error::validation(format!(
                "direction {k} out of range for dimension {}",
                self.dim()
            )));
        }
        let mut entries = self.entries.clone();
        entries[k] += 1;
        Ok(MultiIndex { entries })
    }

    /// The neighbor `n − e_k`. Errors when `k >= r` or `n_k == 0`.
    pub fn down(&self, k: usize) -> Result<Self> {
        if k >= self.dim() {
            return Err(Error::validation(format!(
                "direction {k} out of range for dimension {}",
                self.dim()
            )));
        }
        if self.entries[k] == 0 {
            return Err(Error::validation(format!(
                "cannot lower component {k}: entry is already 0"
            )));
        }
        let mut entries = self.entries.clone();
        entries[k] -= 1;
        Ok(MultiIndex { entries })
    }

    /// Number of lattice points in the box `[0,n_1]×…×[0,n_r]`, or an error
    /// when it exceeds `guard`.
    pub(crate) fn box_count(&self, guard: u64) -> Result<u64> {
        let mut count: u64 = 1;
        for &e in &self.entries {
            count = count
                .checked_mul(u64::from(e) + 1)
                .filter(|&c| c <= guard)
                .ok_or_else(|| {
                    Error::resource(format!("lattice box for {self} exceeds {guard} points"))
                })?;
        }
        Ok(count)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_and_neighbors() {
        let n = MultiIndex::new(vec![2, 0, 3]).unwrap();
        assert_eq!(n.size(), 5);
        assert_eq!(n.dim(), 3);
        assert_eq!(n.up(1).unwrap().entries(), &[2, 1, 3]);
        assert_eq!(n.down(0).unwrap().entries(), &[1, 0, 3]);
        assert!(n.down(1).is_err());
        assert!(n.up(3).is_err());
    }

    #[test]
    fn empty_rejected() {
        assert!(MultiIndex::new(vec![]).is_err());
    }

    #[test]
    fn box_guard() {
        let n = MultiIndex::new(vec![9, 9, 9]).unwrap();
        assert_eq!(n.box_count(10_000_000).unwrap(), 1000);
        assert!(n.box_count(999).is_err());
    }
}
