//! Matrices over GF(2), cut matrices of graphs, and cut ranks.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Matrix over GF(2) whose rows and columns are labelled by vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    row_labels: Vec<usize>,
    col_labels: Vec<usize>,
    rows: Vec<BitSet>,
}

impl Gf2Matrix {
    pub fn zeros(row_labels: Vec<usize>, col_labels: Vec<usize>) -> Self {
        let rows = vec![BitSet::new(col_labels.len()); row_labels.len()];
        Gf2Matrix {
            row_labels,
            col_labels,
            rows,
        }
    }

    /// Unlabelled matrix from dense rows; labels are positions.
    pub fn from_rows(rows: &[Vec<bool>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        let mut m = Gf2Matrix::zeros((0..rows.len()).collect(), (0..ncols).collect());
        for (i, r) in rows.iter().enumerate() {
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[usize] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[usize] {
        &self.col_labels
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i].insert(j);
        } else {
            self.rows[i].remove(j);
        }
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.col_labels.clone(), self.row_labels.clone());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.iter() {
                t.rows[j].insert(i);
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows.iter().cloned())
    }
}

/// Rank of a family of bit vectors, by elimination against a growing basis.
///
/// Each basis vector is reduced against all earlier ones, so it carries no
/// bit at an earlier pivot; reducing in insertion order is then exact.
pub(crate) fn rank_of_rows(rows: impl IntoIterator<Item = BitSet>) -> usize {
    let mut basis: Vec<(usize, BitSet)> = Vec::new();
    for mut r in rows {
        for (pivot, b) in &basis {
            if r.contains(*pivot) {
                r.symmetric_difference_with(b);
            }
        }
        if let Some(p) = r.first() {
            basis.push((p, r));
        }
    }
    basis.len()
}

/// `A_G[X, V \ X]` with rows and columns in ascending vertex order.
pub fn cut_matrix(g: &Graph, x: &[usize]) -> Result<Gf2Matrix> {
    let inside = g.check_vertex_set(x)?;
    let mut rows: Vec<usize> = x.to_vec();
    rows.sort_unstable();
    let cols: Vec<usize> = (0..g.n()).filter(|v| !inside.contains(*v)).collect();
    let mut m = Gf2Matrix::zeros(rows.clone(), cols.clone());
    for (i, &u) in rows.iter().enumerate() {
        for (j, &v) in cols.iter().enumerate() {
            if g.has_edge(u, v) {
                m.set(i, j, true);
            }
        }
    }
    Ok(m)
}

pub(crate) fn cutrank_of_bitset(g: &Graph, inside: &BitSet) -> usize {
    let mut outside = BitSet::full(g.n());
    outside.difference_with(inside);
    rank_of_rows(inside.iter().map(|u| {
        let mut r = g.neighbor_set(u).clone();
        r.intersect_with(&outside);
        r
    }))
}

/// `rk(A_G[X, V \ X])`.
pub fn cutrank_of_cut(g: &Graph, x: &[usize]) -> Result<usize> {
    let inside = g.check_vertex_set(x)?;
    Ok(cutrank_of_bitset(g, &inside))
}

/// Largest cut rank over the prefixes of `order`.
pub fn cutrank_of_ordering(g: &Graph, order: &[usize]) -> Result<usize> {
    if order.len() != g.n() {
        return Err(Error::NotAPermutation);
    }
    let mut prefix = BitSet::new(g.n());
    let mut best = 0;
    for &v in order {
        if v >= g.n() || prefix.contains(v) {
            return Err(Error::NotAPermutation);
        }
        prefix.insert(v);
        best = best.max(cutrank_of_bitset(g, &prefix));
    }
    Ok(best)
}
