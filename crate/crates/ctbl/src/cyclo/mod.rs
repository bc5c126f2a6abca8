//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! Elements are stored as rational coefficient vectors over the Zumbroich
//! basis of Q(ζ_n) (the basis GAP uses, which makes printed values portable):
//! writing n = ∏ p^ν, the basis consists of the roots ζ_n^e whose residue
//! e·(n/q)⁻¹ mod q lies, for every prime power q = p^ν exactly dividing n, in
//!
//! * [q/p, q)  for odd p,
//! * [0, q/2)  for p = 2 (only ν ≥ 2 occurs; conductors are never ≡ 2 mod 4).
//!
//! The two rewriting rules
//!
//! * ζ_n^i = −Σ_{t=1}^{p−1} ζ_n^{i+t·n/p}   (odd p, component below q/p),
//! * ζ_n^i = −ζ_n^{i−n/2}                   (p = 2, component in [q/2, q)),
//!
//! rewrite an arbitrary root into the basis, one prime at a time.  Every
//! public operation returns values in reduced form: minimal conductor (never
//! ≡ 2 mod 4), basis exponents only, no explicitly stored zeros.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::Sign;
use num::{BigInt, BigRational, BigUint, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

mod parse;
pub use parse::parse_cyclotomic;

/// Exact rational scalar used for cyclotomic coefficients.
pub type Rational = BigRational;

/// An element of some cyclotomic field Q(ζ_n), stored in reduced form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cyclotomic {
    /// Conductor: minimal n with the element in Q(ζ_n); never ≡ 2 mod 4.
    n: u64,
    /// Zumbroich-basis coefficients; zero coefficients are never stored.
    coeffs: BTreeMap<u64, Rational>,
}

/// (prime, prime power) decomposition of n, ascending by prime.
use crate::arith::prime_power_factors;

fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

/// Modular inverse for u64, assuming gcd(a, m) = 1.
fn inv_mod(a: u64, m: u64) -> u64 {
    // Extended Euclid on i128 to dodge sign gymnastics.
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r.abs(), 1);
    (old_s.rem_euclid(m as i128)) as u64
}

/// The residue of exponent e at the prime power q ‖ n: e·(n/q)⁻¹ mod q.
fn component(n: u64, q: u64, e: u64) -> u64 {
    let cof = (n / q) % q;
    (e % q) * inv_mod(cof, q) % q
}

fn in_basis_at(p: u64, q: u64, a: u64) -> bool {
    if p == 2 {
        a < q / 2
    } else {
        a >= q / p
    }
}

/// Decomposition of ζ_n^i over the Zumbroich basis of Q(ζ_n): ±1 signed
/// exponents.  n must not be ≡ 2 mod 4.
fn reduce_exponent(n: u64, i: u64, factors: &[(u64, u64)]) -> Vec<(u64, i64)> {
    let mut terms: Vec<(u64, i64)> = vec![(i % n, 1)];
    for &(p, q) in factors {
        let mut next = Vec::with_capacity(terms.len());
        for (e, s) in terms {
            let a = component(n, q, e);
            if in_basis_at(p, q, a) {
                next.push((e, s));
            } else if p == 2 {
                next.push(((e + n - n / 2) % n, -s));
            } else {
                let step = n / p;
                for t in 1..p {
                    next.push(((e + t * step) % n, -s));
                }
            }
        }
        terms = next;
    }
    terms
}

impl Cyclotomic {
    /// The zero element.
    pub fn zero() -> Self {
        Cyclotomic { n: 1, coeffs: BTreeMap::new() }
    }

    /// The one element.
    pub fn one() -> Self {
        Cyclotomic::from_integer(1)
    }

    /// A rational integer as a cyclotomic.
    pub fn from_integer(v: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    /// A rational number as a cyclotomic.
    pub fn from_rational(v: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !v.is_zero() {
            coeffs.insert(0, v);
        }
        Cyclotomic { n: 1, coeffs }
    }

    /// E(n)^k: the k-th power of the fixed primitive n-th root of unity.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("root_of_unity: order must be positive".into()));
        }
        let e = k.rem_euclid(n as i64) as u64;
        Ok(Cyclotomic::from_terms(n, vec![(e, Rational::one())]))
    }

    /// Builds an element of Q(ζ_n) from arbitrary (exponent, coefficient)
    /// terms, reducing to canonical form.
    pub fn from_terms(n: u64, terms: Vec<(u64, Rational)>) -> Self {
        let mut n = n.max(1);
        let mut terms = terms;
        // Conductors ≡ 2 mod 4 are normalized away via ζ_{2m}^i = (−1)^i ζ_m^{i(m+1)/2}.
        if n % 4 == 2 {
            let m = n / 2;
            let half = (m + 1) / 2;
            terms = terms
                .into_iter()
                .map(|(e, c)| {
                    let e = e % n;
                    let sign = if e % 2 == 0 { c } else { -c };
                    (e % m * half % m, sign)
                })
                .collect();
            n = m;
        }
        let factors = prime_power_factors(n);
        let mut coeffs: BTreeMap<u64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            for (b, s) in reduce_exponent(n, e % n, &factors) {
                let entry = coeffs.entry(b).or_insert_with(Rational::zero);
                if s > 0 {
                    *entry += &c;
                } else {
                    *entry -= &c;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        let mut out = Cyclotomic { n, coeffs };
        out.descend();
        out
    }

    /// Minimal conductor of the element (1 for rationals).
    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// Zumbroich-basis coefficients (keys are basis exponents of the
    /// conductor; no zero coefficients are stored).
    pub fn coefficients(&self) -> &BTreeMap<u64, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True iff the element is rational.
    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    /// The element as a rational number, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.n != 1 {
            return None;
        }
        Some(self.coeffs.get(&0).cloned().unwrap_or_else(Rational::zero))
    }

    /// The element as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.denom().is_one() {
            Some(r.numer().clone())
        } else {
            None
        }
    }

    /// True iff the element is an algebraic integer (the Zumbroich basis is an
    /// integral basis, so this is simply integrality of all coefficients).
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.denom().is_one())
    }

    /// Conductor descent: repeatedly strip primes from the conductor while the
    /// element lies in the smaller field.
    fn descend(&mut self) {
        if self.coeffs.is_empty() {
            self.n = 1;
            return;
        }
        'outer: loop {
            if self.n == 1 {
                return;
            }
            for (p, q) in prime_power_factors(self.n) {
                let descended = if p == 2 {
                    match q {
                        4 => self.try_descend_divisible(4),
                        _ => self.try_descend_divisible(2),
                    }
                } else if q == p {
                    self.try_descend_coset(p)
                } else {
                    self.try_descend_divisible(p)
                };
                if descended {
                    continue 'outer;
                }
            }
            return;
        }
    }

    /// Descent when the embedding Q(ζ_{n/d}) → Q(ζ_n) maps basis to basis
    /// (d = p with p² | n, or d = 4 when 4 ‖ n): the element descends iff
    /// every exponent is divisible by d.
    fn try_descend_divisible(&mut self, d: u64) -> bool {
        if self.coeffs.keys().any(|&e| e % d != 0) {
            return false;
        }
        self.n /= d;
        self.coeffs = std::mem::take(&mut self.coeffs)
            .into_iter()
            .map(|(e, c)| (e / d, c))
            .collect();
        true
    }

    /// Descent for an odd prime p with p ‖ n.  The embedding of a basis root
    /// of Q(ζ_{n/p}) is a (p−1)-term coset with constant coefficient −1, so
    /// the element descends iff its coefficients are constant along each such
    /// coset (and every partially-filled coset is complete).
    fn try_descend_coset(&mut self, p: u64) -> bool {
        let n = self.n;
        let m = n / p;
        let mut new_coeffs: BTreeMap<u64, Rational> = BTreeMap::new();
        let mut visited: std::collections::BTreeSet<u64> = std::collections::BTreeSet::new();
        for (&e, c) in &self.coeffs {
            if visited.contains(&e) {
                continue;
            }
            // The coset {e + t·n/p} contains exactly one exponent divisible
            // by p (the embedded pre-image) and p−1 basis exponents.
            let mut base = None;
            let mut members = Vec::with_capacity(p as usize - 1);
            for t in 0..p {
                let f = (e + t * m) % n;
                if f % p == 0 {
                    base = Some(f / p);
                } else {
                    members.push(f);
                }
            }
            let base = match base {
                Some(b) => b,
                None => return false, // cannot happen: p ∤ n/p
            };
            for &f in &members {
                match self.coeffs.get(&f) {
                    Some(cf) if cf == c => {}
                    _ => return false,
                }
                visited.insert(f);
            }
            new_coeffs.insert(base % m, -c.clone());
        }
        self.n = m;
        self.coeffs = new_coeffs;
        true
    }

    /// Re-expresses the element in Q(ζ_m) for a multiple m of the conductor.
    /// Internal: callers guarantee conductor | m and m not ≡ 2 mod 4.
    fn terms_at(&self, m: u64) -> Vec<(u64, Rational)> {
        let scale = m / self.n;
        self.coeffs
            .iter()
            .map(|(&e, c)| (e * scale % m, c.clone()))
            .collect()
    }

    fn common_conductor(&self, other: &Self) -> u64 {
        lcm_u64(self.n, other.n)
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.common_conductor(other);
        let mut terms = self.terms_at(m);
        terms.extend(other.terms_at(m));
        Cyclotomic::from_terms(m, terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        // Rational scaling needs no basis work.
        if self.n == 1 {
            return other.scale(&self.coeffs[&0]);
        }
        if other.n == 1 {
            return self.scale(&other.coeffs[&0]);
        }
        let m = self.common_conductor(other);
        let a = self.terms_at(m);
        let b = other.terms_at(m);
        let mut terms = Vec::with_capacity(a.len() * b.len());
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                terms.push(((ea + eb) % m, ca * cb));
            }
        }
        Cyclotomic::from_terms(m, terms)
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * r)).collect(),
        }
    }

    /// Multiplicative inverse.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("invert: zero has no inverse".into()));
        }
        if self.n == 1 {
            let c = &self.coeffs[&0];
            return Ok(Cyclotomic::from_rational(c.recip()));
        }
        // x⁻¹ = (∏_{σ ≠ id} σ(x)) / N(x) with N(x) = ∏_σ σ(x) ∈ Q.
        let mut prod = Cyclotomic::one();
        for s in 2..self.n {
            if gcd_u64(s, self.n) == 1 {
                prod = prod.mul(&self.galois_conjugate(s as i64)?);
            }
        }
        let norm = self.mul(&prod);
        let norm = norm
            .as_rational()
            .expect("product over the full Galois orbit is rational");
        Ok(prod.scale(&norm.recip()))
    }

    /// The ring automorphism ζ ↦ ζ^k, for k coprime to the conductor.
    pub fn galois_conjugate(&self, k: i64) -> Result<Self> {
        let n = self.n;
        let s = k.rem_euclid(n as i64) as u64;
        if gcd_u64(s, n) != 1 {
            return Err(Error::Domain(format!(
                "galois_conjugate: {k} is not coprime to the conductor {n}"
            )));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let terms = self
            .coeffs
            .iter()
            .map(|(&e, c)| (e * s % n, c.clone()))
            .collect();
        Ok(Cyclotomic::from_terms(n, terms))
    }

    /// Complex conjugation (the Galois automorphism ζ ↦ ζ⁻¹).
    pub fn conj(&self) -> Self {
        self.galois_conjugate(-1)
            .expect("-1 is coprime to every conductor")
    }

    /// Integer powers, with negative exponents via the inverse.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }
}

/// A square root of the nonzero integer d as a cyclotomic, built
/// multiplicatively from quadratic Gauss sums:
///
/// * √p = Σ_k (k|p)·E(p)^k for odd p ≡ 1 mod 4, and −E(4)·Σ_k (k|p)·E(p)^k
///   for odd p ≡ 3 mod 4 (the classical sign determination makes both real
///   and positive),
/// * √2 = E(8) − E(8)³,
/// * √−1 = E(4).
///
/// For d < 0 the result is E(4)·√|d|, so real square roots are positive and
/// pure-imaginary ones have positive imaginary part.
pub fn sqrt_int(d: i64) -> Result<Cyclotomic> {
    if d == 0 {
        return Err(Error::Domain("sqrt_int: 0 is excluded".into()));
    }
    let mut out = Cyclotomic::one();
    if d < 0 {
        out = out.mul(&Cyclotomic::root_of_unity(4, 1)?);
    }
    let mut rest = d.unsigned_abs();
    let mut square = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                out = out.mul(&sqrt_prime(p)?);
            }
        }
        p += 1;
    }
    if rest > 1 {
        out = out.mul(&sqrt_prime(rest)?);
    }
    let square = Rational::from_integer(BigInt::from(square));
    Ok(out.scale(&square))
}

fn sqrt_prime(p: u64) -> Result<Cyclotomic> {
    if p == 2 {
        let e8 = Cyclotomic::root_of_unity(8, 1)?;
        let e83 = Cyclotomic::root_of_unity(8, 3)?;
        return Ok(e8.sub(&e83));
    }
    // Quadratic Gauss sum g = Σ_{k=1}^{p−1} (k|p) ζ_p^k.
    let mut residues = vec![false; p as usize];
    for k in 1..p {
        residues[(k * k % p) as usize] = true;
    }
    let mut terms = Vec::with_capacity(p as usize - 1);
    for k in 1..p {
        let c = if residues[k as usize] { Rational::one() } else { -Rational::one() };
        terms.push((k, c));
    }
    let g = Cyclotomic::from_terms(p, terms);
    if p % 4 == 1 {
        Ok(g)
    } else {
        // g = i√p here, so √p = −E(4)·g.
        Ok(Cyclotomic::root_of_unity(4, 1)?.neg().mul(&g))
    }
}

/// Least nonnegative solution of the simultaneous congruences
/// x ≡ residues[i] mod moduli[i]; the moduli must be positive and pairwise
/// coprime.
pub fn crt(moduli: &[BigInt], residues: &[BigInt]) -> Result<BigInt> {
    if moduli.len() != residues.len() {
        return Err(Error::Shape(format!(
            "crt: {} moduli vs {} residues",
            moduli.len(),
            residues.len()
        )));
    }
    for m in moduli {
        if !m.is_positive() {
            return Err(Error::Domain(format!("crt: modulus {m} is not positive")));
        }
    }
    for i in 0..moduli.len() {
        for j in i + 1..moduli.len() {
            if moduli[i].gcd(&moduli[j]) != BigInt::one() {
                return Err(Error::Domain(format!(
                    "crt: moduli {} and {} are not coprime",
                    moduli[i], moduli[j]
                )));
            }
        }
    }
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (mi, ri) in moduli.iter().zip(residues) {
        // Solve x + m·t ≡ ri mod mi.
        let egcd = m.extended_gcd(mi);
        debug_assert!(egcd.gcd.is_one());
        let t = ((ri - &x) * egcd.x).mod_floor(mi);
        x += &m * t;
        m *= mi;
        x = x.mod_floor(&m);
    }
    Ok(x)
}

impl fmt::Display for Cyclotomic {
    /// Canonical form: Zumbroich-basis terms ordered by ascending exponent,
    /// no spaces; e.g. `-E(5)^2-E(5)^3` (the golden ratio) or `1+E(4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "E({})", self.n)?;
                } else {
                    write!(f, "E({})^{}", self.n, e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

/// Rational → cyclotomic convenience conversions.
impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Cyclotomic::from_integer(v)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(v: Rational) -> Self {
        Cyclotomic::from_rational(v)
    }
}

/// Converts a BigUint group/centralizer order into a rational.
pub fn rational_from_biguint(v: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from_biguint(Sign::Plus, v.clone()))
}
