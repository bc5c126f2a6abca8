//! Integer-lattice tools for virtual characters: Hermite normal form with
//! transform, integral linear-system solving, and LLL reduction driven
//! entirely by the Gram matrix of scalar products.

use num::{BigInt, One, Signed, Zero};

use super::func::{norm, scalar_product, ClassFunction};
use super::head::TableHead;
use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};

/// Row-style Hermite normal form with transform: returns `(h, u, pivots)`
/// with `u·m = h`, `u` unimodular, the nonzero rows of `h` on top with
/// positive pivot entries and the entries above each pivot reduced into
/// `[0, pivot)`.
pub(crate) fn row_hermite_with_transform(
    m: &[Vec<BigInt>],
) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>, Vec<usize>) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..nrows)
        .map(|i| {
            let mut row = vec![BigInt::zero(); nrows];
            row[i] = BigInt::one();
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        loop {
            let best = (r..nrows)
                .filter(|&i| !h[i][col].is_zero())
                .min_by_key(|&i| h[i][col].abs());
            let Some(best) = best else { break };
            h.swap(r, best);
            u.swap(r, best);
            let mut cleared = true;
            for i in r + 1..nrows {
                if h[i][col].is_zero() {
                    continue;
                }
                let q = &h[i][col] / &h[r][col];
                if !q.is_zero() {
                    for c in 0..ncols {
                        let d = &q * &h[r][c];
                        h[i][c] -= d;
                    }
                    for c in 0..nrows {
                        let d = &q * &u[r][c];
                        u[i][c] -= d;
                    }
                }
                if !h[i][col].is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                break;
            }
        }
        if h[r][col].is_zero() {
            continue;
        }
        if h[r][col].is_negative() {
            for c in 0..ncols {
                h[r][c] = -h[r][c].clone();
            }
            for c in 0..nrows {
                u[r][c] = -u[r][c].clone();
            }
        }
        for i in 0..r {
            let q = num::Integer::div_floor(&h[i][col], &h[r][col]);
            if !q.is_zero() {
                for c in 0..ncols {
                    let d = &q * &h[r][c];
                    h[i][c] -= d;
                }
                for c in 0..nrows {
                    let d = &q * &u[r][c];
                    u[i][c] -= d;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (h, u, pivots)
}

/// An integer solution `x` of `x·m = v` if one exists, found through the
/// Hermite normal form of `m`; `None` when the system has no integral
/// solution.  Deterministic.
pub fn solution_int_mat(m: &[Vec<BigInt>], v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    let ncols = m.first().map_or(v.len(), Vec::len);
    if m.iter().any(|row| row.len() != ncols) {
        return Err(Error::Shape("matrix rows have differing lengths".into()));
    }
    if v.len() != ncols {
        return Err(Error::Shape(format!(
            "vector of length {} against a matrix with {} columns",
            v.len(),
            ncols
        )));
    }
    let (h, u, pivots) = row_hermite_with_transform(m);
    let mut residual = v.to_vec();
    let mut x = vec![BigInt::zero(); m.len()];
    for (k, &col) in pivots.iter().enumerate() {
        if (&residual[col] % &h[k][col]).is_zero() {
            let q = &residual[col] / &h[k][col];
            if !q.is_zero() {
                for c in 0..ncols {
                    let d = &q * &h[k][c];
                    residual[c] -= d;
                }
                for (xc, uc) in x.iter_mut().zip(&u[k]) {
                    *xc += &q * uc;
                }
            }
        }
    }
    if residual.iter().all(BigInt::is_zero) {
        Ok(Some(x))
    } else {
        Ok(None)
    }
}

/// Gram–Schmidt data recomputed from a (positive semidefinite) Gram
/// matrix: squared norms of the orthogonalized vectors and the `μ`
/// coefficients.  A zero squared norm marks a direction dependent on the
/// earlier ones.
fn gram_schmidt(gram: &[Vec<Rational>]) -> Result<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let n = gram.len();
    let mut b = vec![Rational::zero(); n];
    let mut mu = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in 0..i {
            let mut num = gram[i][j].clone();
            for l in 0..j {
                num -= &mu[i][l] * &mu[j][l] * &b[l];
            }
            mu[i][j] = if b[j].is_zero() {
                Rational::zero()
            } else {
                num / &b[j]
            };
        }
        let mut norm = gram[i][i].clone();
        for j in 0..i {
            norm -= &mu[i][j] * &mu[i][j] * &b[j];
        }
        if norm.is_negative() {
            return Err(Error::Precondition(
                "scalar-product matrix is not positive semidefinite".into(),
            ));
        }
        b[i] = norm;
    }
    Ok((b, mu))
}

/// Replaces `b_k` by `b_k − q·b_j` in the tracked transform and Gram
/// matrix.
fn subtract_multiple(
    gram: &mut [Vec<Rational>],
    trans: &mut [Vec<BigInt>],
    k: usize,
    j: usize,
    q: &BigInt,
) {
    let n = gram.len();
    let qr = Rational::from(q.clone());
    let old_kk = gram[k][k].clone();
    let old_kj = gram[k][j].clone();
    let old_jj = gram[j][j].clone();
    for i in 0..n {
        if i == k {
            continue;
        }
        let updated = &gram[k][i] - &qr * &gram[j][i];
        gram[k][i] = updated.clone();
        gram[i][k] = updated;
    }
    gram[k][k] = old_kk - Rational::from(BigInt::from(2)) * &qr * old_kj + &qr * &qr * old_jj;
    let scaled: Vec<BigInt> = trans[j].iter().map(|t| q * t).collect();
    for (tk, s) in trans[k].iter_mut().zip(scaled) {
        *tk -= s;
    }
}

fn remove_vector(gram: &mut Vec<Vec<Rational>>, trans: &mut Vec<Vec<BigInt>>, i: usize) {
    gram.remove(i);
    for row in gram.iter_mut() {
        row.remove(i);
    }
    trans.remove(i);
}

/// LLL reduction of a lattice given only through the Gram matrix of a
/// (possibly dependent) generating set.  Returns the integer transform
/// rows expressing an LLL-reduced basis in the original generators,
/// together with its Gram matrix.  Generators that reduce to zero are
/// dropped; this relies on the Gram matrix coming from an actual inner
/// product, so a zero diagonal entry certifies the zero vector.
fn lll_on_gram(
    mut gram: Vec<Vec<Rational>>,
    delta: &Rational,
) -> Result<(Vec<Vec<BigInt>>, Vec<Vec<Rational>>)> {
    let n = gram.len();
    let mut trans: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = vec![BigInt::zero(); n];
            row[i] = BigInt::one();
            row
        })
        .collect();
    let mut k = 1;
    loop {
        if let Some(i) = (0..gram.len()).find(|&i| gram[i][i].is_zero()) {
            remove_vector(&mut gram, &mut trans, i);
            k = 1;
            continue;
        }
        if k >= gram.len() {
            break;
        }
        let (b, mu) = gram_schmidt(&gram)?;
        let q = mu[k][k - 1].round().to_integer();
        if !q.is_zero() {
            subtract_multiple(&mut gram, &mut trans, k, k - 1, &q);
            if gram[k][k].is_zero() {
                continue;
            }
        }
        let (b, mu) = if q.is_zero() {
            (b, mu)
        } else {
            gram_schmidt(&gram)?
        };
        let threshold = (delta - &mu[k][k - 1] * &mu[k][k - 1]) * &b[k - 1];
        if b[k] < threshold {
            gram.swap(k, k - 1);
            for row in gram.iter_mut() {
                row.swap(k, k - 1);
            }
            trans.swap(k, k - 1);
            k = (k - 1).max(1);
        } else {
            for j in (0..k.saturating_sub(1)).rev() {
                let (_, mu) = gram_schmidt(&gram)?;
                let q = mu[k][j].round().to_integer();
                if !q.is_zero() {
                    subtract_multiple(&mut gram, &mut trans, k, j, &q);
                }
            }
            if gram[k][k].is_zero() {
                continue;
            }
            k += 1;
        }
    }
    Ok((trans, gram))
}

/// Materializes a transform row as a class function `Σᵢ row[i]·gens[i]`.
fn combine(head: &TableHead, gens: &[ClassFunction], row: &[BigInt]) -> Result<ClassFunction> {
    let mut acc = ClassFunction::new(head, vec![Cyclotomic::zero(); head.ncls()])?;
    for (coeff, gen) in row.iter().zip(gens) {
        if coeff.is_zero() {
            continue;
        }
        let factor = Cyclotomic::from_rational(Rational::from(coeff.clone()));
        acc = acc.add(&gen.scale(&factor))?;
    }
    Ok(acc)
}

/// Negates a norm-1 virtual character when its degree is negative so the
/// result is a genuine irreducible character; non-rational or zero degree
/// (impossible for virtual characters) leaves the vector untouched and
/// signals failure through `None`.
fn sign_normalized(f: ClassFunction) -> Option<ClassFunction> {
    let degree = f.degree().as_rational()?;
    if degree.is_zero() {
        return None;
    }
    Some(if degree.is_negative() { f.neg() } else { f })
}

/// Subtracts from each virtual character its projections onto the known
/// irreducibles, collecting the norm-1 results (sign-normalized to
/// positive degree) as new irreducibles and everything else as remainders
/// orthogonal to all known and new irreducibles.  Zero differences are
/// dropped.
pub fn reduced(
    head: &TableHead,
    irreducibles: &[ClassFunction],
    virtuals: &[ClassFunction],
) -> Result<(Vec<ClassFunction>, Vec<ClassFunction>)> {
    let one = Cyclotomic::one();
    for chi in irreducibles {
        if norm(head, chi)? != one {
            return Err(Error::Precondition(format!(
                "'{}' entry of norm != 1 passed as an irreducible",
                head.identifier()
            )));
        }
    }
    let mut new_irr: Vec<ClassFunction> = Vec::new();
    let mut remainders: Vec<ClassFunction> = Vec::new();
    let mut queue: std::collections::VecDeque<ClassFunction> = virtuals.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        let mut f = v;
        for chi in irreducibles.iter().chain(new_irr.iter()) {
            let sp = scalar_product(head, &f, chi)?;
            if !sp.is_zero() {
                f = f.sub(&chi.scale(&sp))?;
            }
        }
        if f.is_zero() {
            continue;
        }
        if norm(head, &f)? == one {
            match sign_normalized(f) {
                Some(chi) => {
                    new_irr.push(chi);
                    for r in remainders.drain(..) {
                        queue.push_back(r);
                    }
                }
                None => unreachable!("a norm-1 virtual character has nonzero rational degree"),
            }
        } else {
            remainders.push(f);
        }
    }
    Ok((new_irr, remainders))
}

/// LLL reduction of the lattice spanned by virtual characters, computed on
/// the Gram matrix of scalar products: basis vectors are only materialized
/// as class functions at the end, from the tracked integer transform.
/// Norm-1 vectors are sign-normalized and returned as irreducibles, the
/// rest as remainders.  Requires `1/4 < delta ≤ 1` and an integral Gram
/// matrix.
pub fn lll_characters(
    head: &TableHead,
    virtuals: &[ClassFunction],
    delta: &Rational,
) -> Result<(Vec<ClassFunction>, Vec<ClassFunction>)> {
    let quarter = Rational::new(BigInt::one(), BigInt::from(4));
    if *delta <= quarter || *delta > Rational::one() {
        return Err(Error::Precondition(format!(
            "the reduction parameter must lie in (1/4, 1], got {delta}"
        )));
    }
    let n = virtuals.len();
    let mut gram = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in 0..=i {
            let sp = scalar_product(head, &virtuals[i], &virtuals[j])?;
            let value = sp.as_rational().filter(|r| r.is_integer()).ok_or_else(|| {
                Error::Precondition(format!(
                    "scalar product of inputs {} and {} is {}, not a rational integer",
                    i + 1,
                    j + 1,
                    sp
                ))
            })?;
            gram[i][j] = value.clone();
            gram[j][i] = value;
        }
    }
    let (trans, final_gram) = lll_on_gram(gram, delta)?;
    let mut irreducibles = Vec::new();
    let mut remainders = Vec::new();
    for (row, g) in trans.iter().zip(final_gram.iter().enumerate()) {
        let f = combine(head, virtuals, row)?;
        if g.1[g.0] == Rational::one() {
            match sign_normalized(f) {
                Some(chi) => irreducibles.push(chi),
                None => unreachable!("a norm-1 virtual character has nonzero rational degree"),
            }
        } else {
            remainders.push(f);
        }
    }
    Ok((irreducibles, remainders))
}
