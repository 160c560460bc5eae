use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A binary operation on `{0, .., order-1}` stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Table {
    order: usize,
    cells: Vec<usize>,
}

impl Table {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::MalformedTable("table has no rows".into()));
        }
        let mut cells = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            cells.extend_from_slice(row);
        }
        Self::from_cells(order, cells)
    }

    pub fn from_cells(order: usize, cells: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::MalformedTable("order must be positive".into()));
        }
        if cells.len() != order * order {
            return Err(Error::MalformedTable(format!(
                "expected {} cells, found {}",
                order * order,
                cells.len()
            )));
        }
        if let Some(&bad) = cells.iter().find(|&&c| c >= order) {
            return Err(Error::ElementOutOfRange {
                element: bad,
                order,
            });
        }
        Ok(Table { order, cells })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut cells = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                cells.push(f(x, y));
            }
        }
        Self::from_cells(order, cells)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.first_non_commuting().is_none()
    }

    /// First pair `(x, y)` with `x > y` and `x*y != y*x`, scanning the lower
    /// triangle row by row.
    pub fn first_non_commuting(&self) -> Option<(usize, usize)> {
        let n = self.order;
        (0..n)
            .flat_map(|x| (0..x).map(move |y| (x, y)))
            .find(|&(x, y)| self.get(x, y) != self.get(y, x))
    }

    pub fn is_associative(&self) -> bool {
        self.first_non_associative().is_none()
    }

    pub fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    if self.get(xy, z) != self.get(x, self.get(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.order).all(|x| self.get(x, x) == x)
    }

    /// Relabels elements: entry `(perm[x], perm[y])` of the result is
    /// `perm[self(x, y)]`.
    pub fn permuted(&self, perm: &[usize]) -> Table {
        let n = self.order;
        debug_assert_eq!(perm.len(), n);
        let mut cells = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[perm[x] * n + perm[y]] = perm[self.get(x, y)];
            }
        }
        Table { order: n, cells }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_rows() {
        let err = Table::from_rows(&[vec![0, 1], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::MalformedTable(_)));
    }

    #[test]
    fn rejects_out_of_range() {
        let err = Table::from_rows(&[vec![0, 2], vec![1, 1]]).unwrap_err();
        assert_eq!(
            err,
            Error::ElementOutOfRange {
                element: 2,
                order: 2
            }
        );
    }

    #[test]
    fn permuting_by_identity_is_noop() {
        let t = Table::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(t.permuted(&[0, 1]), t);
        let swapped = t.permuted(&[1, 0]);
        assert_eq!(swapped.rows(), vec![vec![0, 0], vec![0, 1]]);
    }
}
