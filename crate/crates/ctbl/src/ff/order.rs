//! Multiplicative order of an invertible matrix.
//!
//! The route avoids polynomial factorization entirely:
//!
//! 1. minimal polynomial f via reduced Krylov spans (one seed per standard
//!    basis vector, skipping seeds already inside the accumulated span);
//! 2. the squarefree part f₀ of f — GF(q)[x]/(f₀) is then a product of
//!    fields, and the order of x in it is exactly the lcm of the orders of
//!    the eigenvalues, i.e. the p′-part of the matrix order;
//! 3. baby-step/giant-step for that order, bounded by the caller's cap;
//! 4. the p-part by trying e₀·pᵗ until mᵉ = I (multiplicities are ≤ nrows);
//! 5. certification: mᵉ = I and m^(e/ℓ) ≠ I for every prime ℓ | e, by
//!    direct repeated-squaring powering.

use std::collections::HashMap;

use super::field::Fq;
use super::poly::{self, Poly};
use super::{FFMatrix, FFVector};
use crate::error::{Error, Result};

/// Minimal polynomial (monic, ascending codes) of a square matrix.
pub(crate) fn minimal_polynomial(m: &FFMatrix) -> Poly {
    let n = m.nrows();
    let fq = Fq::new(m.field());
    if n == 0 {
        return vec![1];
    }
    let mut f: Poly = vec![1];
    let mut global = super::Echelon::new(fq, n);
    for seed in 0..n {
        let mut e = vec![0u64; n];
        e[seed] = 1;
        if global.contains(&e) {
            // The span of earlier Krylov sequences is m-invariant and f kills
            // all of it, so this seed's annihilator already divides f.
            continue;
        }
        // Krylov rows with polynomial bookkeeping: each stored row is a
        // reduced vector v with v = Σ coeff[t]·(seed row)·mᵗ.
        let mut rows: Vec<(Vec<u64>, Poly)> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let mut krylov = FFVector::from_codes(m.field(), e.clone()).expect("unit vector");
        let mut step = 0usize;
        let annihilator = loop {
            let mut vec_part = krylov.codes().to_vec();
            let mut poly_part = vec![0u64; step + 1];
            poly_part[step] = 1;
            for ((row, coeffs), &piv) in rows.iter().zip(&pivots) {
                let c = vec_part[piv];
                if c != 0 {
                    for (v, r) in vec_part.iter_mut().zip(row) {
                        *v = fq.sub(*v, fq.mul(c, *r));
                    }
                    for (t, &rc) in coeffs.iter().enumerate() {
                        poly_part[t] = fq.sub(poly_part[t], fq.mul(c, rc));
                    }
                }
            }
            match vec_part.iter().position(|&c| c != 0) {
                None => break poly_part, // monic of degree `step` by construction
                Some(piv) => {
                    let inv = fq.inv(vec_part[piv]).expect("pivot nonzero");
                    for v in vec_part.iter_mut() {
                        *v = fq.mul(*v, inv);
                    }
                    let coeffs = poly::scale(fq, &poly_part, inv);
                    global.insert(vec_part.clone());
                    rows.push((vec_part, coeffs));
                    pivots.push(piv);
                    krylov = krylov.mul_matrix(m).expect("square matrix");
                    step += 1;
                }
            }
        };
        f = poly::lcm(fq, &f, &annihilator);
        if f.len() == n + 1 {
            break;
        }
    }
    f
}

use crate::arith::prime_factors;

/// Order of x in GF(q)[x]/(f) with f squarefree and f(0) ≠ 0, by
/// baby-step/giant-step; errors out (cap-exceeded) beyond `cap`.
fn order_of_x_mod(fq: Fq, f: &Poly, cap: u64) -> Result<u64> {
    let n = f.len() - 1;
    if n == 0 {
        return Ok(1);
    }
    // The order divides lcm of (q^{d_i}−1), so q^n−1 is a hard bound.
    let mut bound = cap;
    let mut qn = 1u64;
    let mut overflowed = false;
    for _ in 0..n {
        match qn.checked_mul(fq.order()) {
            Some(v) => qn = v,
            None => {
                overflowed = true;
                break;
            }
        }
    }
    if !overflowed {
        bound = bound.min(qn - 1);
    }
    let s = (bound as f64).sqrt().ceil() as u64 + 1;
    let shift_x = |a: &Poly| -> Poly {
        let mut shifted = vec![0u64; a.len() + 1];
        shifted[1..].copy_from_slice(a);
        let (_, r) = poly::divrem(fq, &shifted, f).expect("modulus nonzero");
        r
    };
    // Baby steps x^0 .. x^{s-1}; if 1 recurs the order is already found.
    let mut baby: HashMap<Poly, u64> = HashMap::new();
    let mut cur: Poly = vec![1];
    for i in 0..s {
        if i > 0 && cur == vec![1] {
            return Ok(i);
        }
        baby.entry(cur.clone()).or_insert(i);
        cur = shift_x(&cur);
    }
    // cur is now x^s; giant-step with its inverse.
    let giant = poly::inv_mod(fq, &cur, f)?;
    let mut g: Poly = giant.clone();
    let mut j = 1u64;
    loop {
        if let Some(&i) = baby.get(&g) {
            let e = j * s + i;
            if e > cap {
                return Err(Error::CapExceeded(format!("element order exceeds cap {cap}")));
            }
            return Ok(e);
        }
        j += 1;
        if j.saturating_mul(s) > bound.saturating_add(s) {
            return Err(Error::CapExceeded(format!("element order exceeds cap {cap}")));
        }
        let prod = poly::mul(fq, &g, &giant);
        let (_, r) = poly::divrem(fq, &prod, f)?;
        g = r;
    }
    // Unreachable: x is invertible mod a squarefree f with f(0) ≠ 0, so its
    // order is finite and ≤ q^n − 1.
}

pub(crate) fn element_order(m: &FFMatrix, cap: u64) -> Result<u64> {
    if !m.is_square() {
        return Err(Error::Shape("element_order: matrix must be square".into()));
    }
    let n = m.nrows();
    if n == 0 {
        return Ok(1);
    }
    let fq = Fq::new(m.field());
    let f = minimal_polynomial(m);
    if f[0] == 0 {
        return Err(Error::Singular("zero is an eigenvalue".into()));
    }
    let f0 = poly::squarefree_part(fq, &f);
    let e0 = order_of_x_mod(fq, &f0, cap)?;
    // p-part: the matrix order is e₀·pᵗ with pᵗ at least the maximal
    // multiplicity in f; try ascending t.
    let p = m.field().p();
    let mut e = e0;
    let order = loop {
        if m.power(e as i64)?.is_identity() {
            break e;
        }
        e = e.checked_mul(p).ok_or_else(|| {
            Error::CapExceeded(format!("element order exceeds cap {cap}"))
        })?;
        if e > cap.saturating_mul(p.pow(n.ilog2() + 2)) {
            // Safety net; unreachable when the minimal polynomial is correct.
            return Err(Error::CapExceeded(format!("element order exceeds cap {cap}")));
        }
    };
    if order > cap {
        return Err(Error::CapExceeded(format!(
            "element order {order} exceeds cap {cap}"
        )));
    }
    // Cross-check by repeated squaring: m^e = I and m^(e/ℓ) ≠ I for primes ℓ|e.
    for l in prime_factors(order) {
        if m.power((order / l) as i64)?.is_identity() {
            return Err(Error::Validation(format!(
                "order certification failed: m^({order}/{l}) is the identity"
            )));
        }
    }
    Ok(order)
}
