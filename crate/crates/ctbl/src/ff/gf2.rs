//! Bit-packed kernels for GF(2) matrices.
//!
//! Rows are stored LSB-first in consecutive u64 words (`wpr` words per row);
//! bits beyond the column count are kept zero so whole-word equality and
//! hashing work on the packed form.  Multiplication dispatches to the Method
//! of Four Russians above a size threshold; elimination is plain Gaussian
//! with whole-word XOR updates.

use crate::thread_budget;

/// Inner-dimension threshold above which multiply uses the Method of Four
/// Russians (empirically where the 256-entry row tables start paying off).
pub(crate) const M4R_THRESHOLD: usize = 512;

pub(crate) fn words_per_row(ncols: usize) -> usize {
    ncols.div_ceil(64).max(1)
}

#[inline]
pub(crate) fn get_bit(row: &[u64], j: usize) -> bool {
    row[j / 64] >> (j % 64) & 1 == 1
}

#[inline]
pub(crate) fn set_bit(row: &mut [u64], j: usize, v: bool) {
    if v {
        row[j / 64] |= 1u64 << (j % 64);
    } else {
        row[j / 64] &= !(1u64 << (j % 64));
    }
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Splits packed storage into row slices.
fn rows(data: &[u64], wpr: usize) -> impl Iterator<Item = &[u64]> {
    data.chunks_exact(wpr)
}

/// a (m×n) · b (n×q) → m×q, naive row-combination schoolbook.
pub(crate) fn mul_naive(a: &[u64], m: usize, n: usize, b: &[u64], q: usize) -> Vec<u64> {
    let wpr_a = words_per_row(n);
    let wpr_c = words_per_row(q);
    let mut c = vec![0u64; m * wpr_c];
    for (i, arow) in rows(a, wpr_a).enumerate().take(m) {
        let crow = &mut c[i * wpr_c..(i + 1) * wpr_c];
        for (w, &word) in arow.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let j = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if j < n {
                    xor_into(crow, &b[j * wpr_c..(j + 1) * wpr_c]);
                }
            }
        }
    }
    c
}

/// Method of Four Russians: b's rows are processed in groups of 8, with a
/// 256-entry table of all XOR combinations per group (built by doubling, so
/// 256 row-XORs per group); each row of a then folds one byte per group.
pub(crate) fn mul_m4r(a: &[u64], m: usize, n: usize, b: &[u64], q: usize) -> Vec<u64> {
    let wpr_a = words_per_row(n);
    let wpr_c = words_per_row(q);
    let groups = n.div_ceil(8);
    let mut c = vec![0u64; m * wpr_c];

    let process_rows = |c_chunk: &mut [u64], a_chunk: &[u64], table: &mut Vec<u64>| {
        let rows_here = c_chunk.len() / wpr_c;
        for g in 0..groups {
            // table[mask] = XOR of b-rows selected by mask over rows 8g..8g+8.
            table[..wpr_c].iter_mut().for_each(|w| *w = 0);
            for mask in 1usize..256 {
                let low = mask & (mask - 1);
                let bit = (mask ^ low).trailing_zeros() as usize;
                let src_row = 8 * g + bit;
                let (head, tail) = table.split_at_mut(mask * wpr_c);
                let dst = &mut tail[..wpr_c];
                dst.copy_from_slice(&head[low * wpr_c..low * wpr_c + wpr_c]);
                if src_row < n {
                    xor_into(dst, &b[src_row * wpr_c..src_row * wpr_c + wpr_c]);
                }
            }
            let word_idx = g / 8;
            let shift = g % 8 * 8;
            for i in 0..rows_here {
                let byte = (a_chunk[i * wpr_a + word_idx] >> shift & 0xFF) as usize;
                if byte != 0 {
                    xor_into(
                        &mut c_chunk[i * wpr_c..(i + 1) * wpr_c],
                        &table[byte * wpr_c..byte * wpr_c + wpr_c],
                    );
                }
            }
        }
    };

    let budget = thread_budget();
    if budget > 1 && m >= 256 {
        let chunk_rows = m.div_ceil(budget);
        std::thread::scope(|scope| {
            for (ci, c_chunk) in c.chunks_mut(chunk_rows * wpr_c).enumerate() {
                let a_chunk = &a[ci * chunk_rows * wpr_a..];
                scope.spawn(move || {
                    let mut table = vec![0u64; 256 * wpr_c];
                    process_rows(c_chunk, a_chunk, &mut table);
                });
            }
        });
    } else {
        let mut table = vec![0u64; 256 * wpr_c];
        process_rows(&mut c, a, &mut table);
    }
    c
}

pub(crate) fn mul(a: &[u64], m: usize, n: usize, b: &[u64], q: usize) -> Vec<u64> {
    if n >= M4R_THRESHOLD && q >= 64 {
        mul_m4r(a, m, n, b, q)
    } else {
        mul_naive(a, m, n, b, q)
    }
}

pub(crate) fn transpose(a: &[u64], m: usize, n: usize) -> Vec<u64> {
    let wpr_a = words_per_row(n);
    let wpr_t = words_per_row(m);
    let mut t = vec![0u64; n * wpr_t];
    for (i, arow) in rows(a, wpr_a).enumerate().take(m) {
        for (w, &word) in arow.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let j = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if j < n {
                    set_bit(&mut t[j * wpr_t..(j + 1) * wpr_t], i, true);
                }
            }
        }
    }
    t
}

pub(crate) fn rank(a: &[u64], m: usize, n: usize) -> usize {
    let wpr = words_per_row(n);
    let mut work: Vec<Vec<u64>> = rows(a, wpr).take(m).map(|r| r.to_vec()).collect();
    let mut r = 0usize;
    for col in 0..n {
        let Some(pos) = (r..m).find(|&i| get_bit(&work[i], col)) else {
            continue;
        };
        work.swap(r, pos);
        let (top, below) = work.split_at_mut(r + 1);
        let pivot = &top[r];
        for row in below {
            if get_bit(row, col) {
                xor_into(row, pivot);
            }
        }
        r += 1;
        if r == m {
            break;
        }
    }
    r
}

/// Full reduced row echelon with a recorded transform: returns
/// (rref rows, transform rows (m×m), pivot columns) with T·A = R.
pub(crate) fn rref_with_transform(a: &[u64], m: usize, n: usize) -> (Vec<u64>, Vec<u64>, Vec<usize>) {
    let wpr = words_per_row(n);
    let wpr_t = words_per_row(m);
    let aug = wpr + wpr_t;
    let mut work: Vec<Vec<u64>> = rows(a, wpr)
        .enumerate()
        .take(m)
        .map(|(i, row)| {
            let mut w = vec![0u64; aug];
            w[..wpr].copy_from_slice(row);
            set_bit(&mut w[wpr..], i, true);
            w
        })
        .collect();
    let mut pivots = Vec::new();
    for col in 0..n {
        let r = pivots.len();
        let Some(pos) = (r..m).find(|&i| get_bit(&work[i], col)) else {
            continue;
        };
        work.swap(r, pos);
        let (pivot_row, rest_below) = {
            let (top, below) = work.split_at_mut(r + 1);
            (&top[r], below)
        };
        // Eliminate below...
        for row in rest_below {
            if get_bit(row, col) {
                xor_into(row, pivot_row);
            }
        }
        // ...and above.
        let (above, lower) = work.split_at_mut(r);
        let pivot_row = &lower[0];
        for row in above {
            if get_bit(row, col) {
                xor_into(row, pivot_row);
            }
        }
        pivots.push(col);
        if pivots.len() == m {
            break;
        }
    }
    let mut rref = vec![0u64; m * wpr];
    let mut transform = vec![0u64; m * wpr_t];
    for (i, row) in work.iter().enumerate() {
        rref[i * wpr..(i + 1) * wpr].copy_from_slice(&row[..wpr]);
        transform[i * wpr_t..(i + 1) * wpr_t].copy_from_slice(&row[wpr..]);
    }
    (rref, transform, pivots)
}
