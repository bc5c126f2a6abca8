//! Polynomial arithmetic over GF(p^k), on ascending code-coefficient vectors.
//!
//! Zero is the empty vector; every function keeps results trimmed (no
//! trailing zero coefficients).  Only what the element-order machinery needs
//! lives here: ring operations, gcd/lcm, derivative, p-th roots, and the
//! char-p squarefree part.

use super::field::Fq;
use crate::error::{Error, Result};

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn deg(a: &Poly) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub(crate) fn add(fq: Fq, a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = fq.add(x, y);
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(fq: Fq, a: &Poly, c: u64) -> Poly {
    if c == 0 {
        return vec![];
    }
    let mut out: Poly = a.iter().map(|&x| fq.mul(x, c)).collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(fq: Fq, a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = fq.add(out[i + j], fq.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// (quotient, remainder) with deg r < deg b; b must be nonzero.
pub(crate) fn divrem(fq: Fq, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
    if b.is_empty() {
        return Err(Error::DivisionByZero("polynomial division by zero".into()));
    }
    let db = b.len() - 1;
    let lead_inv = fq.inv(*b.last().unwrap())?;
    let mut r = a.clone();
    let mut q = vec![0u64; a.len().saturating_sub(db)];
    while r.len() > db {
        let c = fq.mul(*r.last().unwrap(), lead_inv);
        let shift = r.len() - 1 - db;
        if c != 0 {
            q[shift] = c;
            for i in 0..db {
                r[shift + i] = fq.sub(r[shift + i], fq.mul(c, b[i]));
            }
        }
        r.pop();
        trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    trim(&mut q);
    trim(&mut r);
    Ok((q, r))
}

pub(crate) fn make_monic(fq: Fq, a: &Poly) -> Poly {
    match a.last() {
        None => vec![],
        Some(&l) => {
            let inv = fq.inv(l).expect("leading coefficient is nonzero");
            a.iter().map(|&c| fq.mul(c, inv)).collect()
        }
    }
}

/// Monic gcd.
pub(crate) fn gcd(fq: Fq, a: &Poly, b: &Poly) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_empty() {
        let (_, r) = divrem(fq, &a, &b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    make_monic(fq, &a)
}

/// Monic lcm.
pub(crate) fn lcm(fq: Fq, a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let g = gcd(fq, a, b);
    let (q, r) = divrem(fq, a, &g).expect("gcd divides");
    debug_assert!(r.is_empty());
    make_monic(fq, &mul(fq, &q, b))
}

pub(crate) fn derivative(fq: Fq, a: &Poly) -> Poly {
    let mut out: Poly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| {
            let mut s = 0u64;
            // i·c in the prime subfield action: add c to itself i mod p times.
            for _ in 0..(i as u64 % fq.p) {
                s = fq.add(s, c);
            }
            s
        })
        .collect();
    trim(&mut out);
    out
}

/// For f with f' = 0 (so f = g(x^p)): the p-th root g, with coefficients
/// mapped through the inverse Frobenius c ↦ c^(q/p).
pub(crate) fn pth_root(fq: Fq, f: &Poly) -> Poly {
    let p = fq.p as usize;
    let frob_exp = fq.p.pow(fq.k - 1);
    let mut out: Poly = f
        .iter()
        .step_by(p)
        .map(|&c| fq.pow(c, frob_exp))
        .collect();
    trim(&mut out);
    out
}

/// The radical (product of distinct irreducible factors) of a nonzero monic
/// polynomial, by the characteristic-p recursion: strip a Frobenius power
/// when f' = 0, otherwise split off the multiplicity-coprime part u = f/gcd(f,f')
/// and recurse into gcd(f, f').
pub(crate) fn squarefree_part(fq: Fq, f: &Poly) -> Poly {
    debug_assert!(!f.is_empty());
    if f.len() == 1 {
        return vec![1];
    }
    let d = derivative(fq, f);
    if d.is_empty() {
        return squarefree_part(fq, &pth_root(fq, f));
    }
    let g = gcd(fq, f, &d);
    if g.len() == 1 {
        return make_monic(fq, f);
    }
    let (u, r) = divrem(fq, f, &g).expect("gcd divides f");
    debug_assert!(r.is_empty());
    let h = squarefree_part(fq, &g);
    let shared = gcd(fq, &u, &h);
    let (extra, r) = divrem(fq, &h, &shared).expect("gcd divides");
    debug_assert!(r.is_empty());
    make_monic(fq, &mul(fq, &u, &extra))
}

/// Inverse of a modulo f (gcd must be 1), by the extended Euclid algorithm.
pub(crate) fn inv_mod(fq: Fq, a: &Poly, f: &Poly) -> Result<Poly> {
    let (mut old_r, mut r) = (f.clone(), a.clone());
    let (mut old_t, mut t): (Poly, Poly) = (vec![], vec![1]);
    while !r.is_empty() {
        let (q, rem) = divrem(fq, &old_r, &r)?;
        let next_t = sub(fq, &old_t, &mul(fq, &q, &t));
        old_r = std::mem::replace(&mut r, rem);
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.len() != 1 {
        return Err(Error::DivisionByZero(
            "element is not invertible modulo f".into(),
        ));
    }
    let inv = fq.inv(old_r[0])?;
    let mut out = scale(fq, &old_t, inv);
    let (_, out_red) = divrem(fq, &out, f)?;
    out = out_red;
    Ok(out)
}

pub(crate) fn sub(fq: Fq, a: &Poly, b: &Poly) -> Poly {
    let neg_b: Poly = b.iter().map(|&c| fq.neg(c)).collect();
    add(fq, a, &neg_b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FieldSpec;

    fn fq(p: u64, k: u32) -> Fq {
        Fq::new(FieldSpec::new(p, k).unwrap())
    }

    #[test]
    fn division_and_gcd() {
        let f = fq(5, 1);
        // (x²+1)(x+2) = x³+2x²+x+2
        let prod = mul(f, &vec![1, 0, 1], &vec![2, 1]);
        assert_eq!(prod, vec![2, 1, 2, 1]);
        let (q, r) = divrem(f, &prod, &vec![2, 1]).unwrap();
        assert_eq!(q, vec![1, 0, 1]);
        assert!(r.is_empty());
        assert_eq!(gcd(f, &prod, &vec![2, 1]), vec![2, 1]);
        assert_eq!(lcm(f, &vec![2, 1], &vec![2, 1]), vec![2, 1]);
    }

    #[test]
    fn squarefree_part_handles_frobenius_powers() {
        let f2 = fq(2, 1);
        // (x+1)² = x²+1 over GF(2): derivative vanishes.
        assert_eq!(squarefree_part(f2, &vec![1, 0, 1]), vec![1, 1]);
        // (x²+x+1)²·(x+1) over GF(2).
        let sq = mul(f2, &vec![1, 1, 1], &vec![1, 1, 1]);
        let f = mul(f2, &sq, &vec![1, 1]);
        let sf = squarefree_part(f2, &f);
        assert_eq!(sf, mul(f2, &vec![1, 1, 1], &vec![1, 1]));
        // x³ over GF(3): radical is x.
        let f3 = fq(3, 1);
        assert_eq!(squarefree_part(f3, &vec![0, 0, 0, 1]), vec![0, 1]);
    }

    #[test]
    fn modular_inverse() {
        let f = fq(3, 1);
        let modulus = vec![1, 0, 1]; // x²+1, irreducible over GF(3)
        let a = vec![1, 1]; // x+1
        let inv = inv_mod(f, &a, &modulus).unwrap();
        let (_, check) = divrem(f, &mul(f, &a, &inv), &modulus).unwrap();
        assert_eq!(check, vec![1]);
    }
}
