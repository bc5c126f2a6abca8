//! Gaussian elimination over GF(p^k) on code-valued rows.
//!
//! Everything here produces *reduced* row echelon form with pivot entries
//! normalized to 1 and pivots ordered leftmost-first, so every basis the
//! crate hands out is deterministic and directly comparable.

use super::field::Fq;

/// Incrementally maintained reduced-row-echelon span.
///
/// Rows are kept pivot-normalized with zeros above and below every pivot and
/// sorted by pivot column, so `rows` is literally the RREF basis of the span
/// at every moment.
pub(crate) struct Echelon {
    fq: Fq,
    ncols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(fq: Fq, ncols: usize) -> Self {
        Echelon { fq, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_rows(self) -> Vec<Vec<u64>> {
        self.rows
    }

    /// Subtracts span members to clear every pivot position of v.
    pub fn reduce(&self, v: &mut [u64]) {
        let fq = self.fq;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                for (vj, rj) in v.iter_mut().zip(row) {
                    *vj = fq.sub(*vj, fq.mul(c, *rj));
                }
            }
        }
    }

    /// Adds v to the span; returns the new pivot column if v was independent.
    pub fn insert(&mut self, mut v: Vec<u64>) -> Option<usize> {
        debug_assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        let piv = v.iter().position(|&c| c != 0)?;
        let fq = self.fq;
        let inv = fq.inv(v[piv]).expect("leading entry is nonzero");
        for c in v.iter_mut() {
            *c = fq.mul(*c, inv);
        }
        // Clear the new pivot column in the existing rows.
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (rj, vj) in row.iter_mut().zip(&v) {
                    *rj = fq.sub(*rj, fq.mul(c, *vj));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.rows.insert(at, v);
        self.pivots.insert(at, piv);
        Some(piv)
    }

    /// True iff v lies in the span.
    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&c| c == 0)
    }
}

/// Reduced row echelon form of an m×n code matrix, with optional transform:
/// returns (rref, transform, pivots) where transform·input = rref (transform
/// is m×m and always has full rank).
pub(crate) fn rref_gen(
    fq: Fq,
    data: &[u64],
    m: usize,
    n: usize,
    want_transform: bool,
) -> (Vec<u64>, Option<Vec<u64>>, Vec<usize>) {
    let aug = if want_transform { n + m } else { n };
    let mut work: Vec<Vec<u64>> = (0..m)
        .map(|i| {
            let mut row = vec![0u64; aug];
            row[..n].copy_from_slice(&data[i * n..(i + 1) * n]);
            if want_transform {
                row[n + i] = 1;
            }
            row
        })
        .collect();
    let mut pivots = Vec::new();
    for col in 0..n {
        let r = pivots.len();
        let Some(pos) = (r..m).find(|&i| work[i][col] != 0) else {
            continue;
        };
        work.swap(r, pos);
        let inv = fq.inv(work[r][col]).expect("pivot entry is nonzero");
        for c in work[r].iter_mut() {
            *c = fq.mul(*c, inv);
        }
        let pivot_row = std::mem::take(&mut work[r]);
        for (i, row) in work.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let c = row[col];
            if c != 0 {
                for (rj, pj) in row.iter_mut().zip(&pivot_row) {
                    *rj = fq.sub(*rj, fq.mul(c, *pj));
                }
            }
        }
        work[r] = pivot_row;
        pivots.push(col);
        if pivots.len() == m {
            break;
        }
    }
    let mut rref = vec![0u64; m * n];
    let mut transform = if want_transform { vec![0u64; m * m] } else { Vec::new() };
    for (i, row) in work.iter().enumerate() {
        rref[i * n..(i + 1) * n].copy_from_slice(&row[..n]);
        if want_transform {
            transform[i * m..(i + 1) * m].copy_from_slice(&row[n..]);
        }
    }
    (rref, want_transform.then_some(transform), pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FieldSpec;

    fn fq(p: u64, k: u32) -> Fq {
        Fq::new(FieldSpec::new(p, k).unwrap())
    }

    #[test]
    fn echelon_tracks_rank_and_membership() {
        let f = fq(5, 1);
        let mut e = Echelon::new(f, 3);
        assert_eq!(e.insert(vec![0, 2, 1]), Some(1));
        assert_eq!(e.insert(vec![0, 4, 2]), None); // dependent
        assert_eq!(e.insert(vec![3, 1, 0]), Some(0));
        assert_eq!(e.dim(), 2);
        assert_eq!(e.pivots(), &[0, 1]);
        // RREF invariants: unit pivots, zeros elsewhere in pivot columns.
        assert_eq!(e.rows()[0][0], 1);
        assert_eq!(e.rows()[1][0], 0);
        assert_eq!(e.rows()[0][1], 0);
        assert_eq!(e.rows()[1][1], 1);
        assert!(e.contains(&[3, 3, 1])); // 3·row0 + 3·row1
        assert!(!e.contains(&[3, 3, 0]));
    }

    #[test]
    fn rref_transform_reproduces_input_reduction() {
        let f = fq(3, 1);
        // 3×4 over GF(3) with a dependent row.
        let data = vec![
            1, 2, 0, 1, //
            2, 1, 0, 2, // = 2 × row0
            0, 0, 1, 1,
        ];
        let (rref, transform, pivots) = rref_gen(f, &data, 3, 4, true);
        assert_eq!(pivots, vec![0, 2]);
        let t = transform.unwrap();
        // transform · data = rref (naive product over GF(3)).
        for i in 0..3 {
            for j in 0..4 {
                let mut acc = 0u64;
                for l in 0..3 {
                    acc = f.add(acc, f.mul(t[i * 3 + l], data[l * 4 + j]));
                }
                assert_eq!(acc, rref[i * 4 + j], "({i},{j})");
            }
        }
        // The dependent row leaves one zero rref row.
        assert!(rref[2 * 4..].iter().all(|&c| c == 0));
    }
}
