//! Exact dense linear algebra over the small finite fields GF(p^k),
//! p ∈ {2,3,5,7}, k ≤ 12.
//!
//! Matrices over GF(2) are bit-packed (64 entries per word) with Method of
//! Four Russians multiplication above a size threshold; all other fields use
//! one code per entry, where the code of Σ aᵢxⁱ is the base-p integer
//! Σ aᵢpⁱ with respect to the field's Conway polynomial (so prime-field
//! codes are ordinary residues).  Row vectors act on the right: v·M.

mod brauer;
mod conway;
mod elim;
mod field;
mod gf2;
mod order;
pub(crate) mod poly;

pub use brauer::brauer_character_value;
pub use conway::{conway_polynomial, MAX_EXTENSION_DEGREE, SUPPORTED_PRIMES};

pub use field::Fq;

pub(crate) use elim::Echelon;

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Which field a matrix lives over; validated at construction.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldSpec {
    p: u64,
    k: u32,
}

impl FieldSpec {
    pub fn new(p: u64, k: u32) -> Result<FieldSpec> {
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(Error::UnsupportedField(format!(
                "characteristic {p} (supported: 2, 3, 5, 7)"
            )));
        }
        if k == 0 || k > MAX_EXTENSION_DEGREE {
            return Err(Error::UnsupportedField(format!(
                "extension degree {k} (supported: 1..={MAX_EXTENSION_DEGREE})"
            )));
        }
        Ok(FieldSpec { p, k })
    }

    pub fn prime(p: u64) -> Result<FieldSpec> {
        FieldSpec::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field size p^k.
    pub fn order(&self) -> u64 {
        self.p.pow(self.k)
    }

    fn fq(&self) -> Fq {
        Fq::new(*self)
    }

    fn is_bits(&self) -> bool {
        self.p == 2 && self.k == 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Storage {
    /// GF(2) rows bit-packed LSB-first, fixed words-per-row stride.
    Bits { wpr: usize, words: Vec<u64> },
    /// Row-major element codes for every other field.
    Gen(Vec<u64>),
}

/// Dense matrix over a supported finite field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FFMatrix {
    spec: FieldSpec,
    nrows: usize,
    ncols: usize,
    storage: Storage,
}

/// One row vector; same entry representation as a matrix row (always codes).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FFVector {
    spec: FieldSpec,
    codes: Vec<u64>,
}

impl FFVector {
    pub fn zero(spec: FieldSpec, len: usize) -> FFVector {
        FFVector { spec, codes: vec![0; len] }
    }

    pub fn from_integers(spec: FieldSpec, entries: &[i64]) -> FFVector {
        let fq = spec.fq();
        FFVector { spec, codes: entries.iter().map(|&v| fq.from_int(v)).collect() }
    }

    pub fn from_codes(spec: FieldSpec, codes: Vec<u64>) -> Result<FFVector> {
        let fq = spec.fq();
        if let Some(&bad) = codes.iter().find(|&&c| !fq.valid_code(c)) {
            return Err(Error::Domain(format!(
                "code {bad} out of range for GF({}^{})",
                spec.p, spec.k
            )));
        }
        Ok(FFVector { spec, codes })
    }

    pub fn field(&self) -> FieldSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.codes[i]
    }

    pub fn set(&mut self, i: usize, code: u64) -> Result<()> {
        if !self.spec.fq().valid_code(code) {
            return Err(Error::Domain(format!("code {code} out of range")));
        }
        self.codes[i] = code;
        Ok(())
    }

    pub fn codes(&self) -> &[u64] {
        &self.codes
    }

    pub fn is_zero(&self) -> bool {
        self.codes.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &FFVector) -> Result<FFVector> {
        if self.spec != other.spec || self.len() != other.len() {
            return Err(Error::Shape("vector add: field or length mismatch".into()));
        }
        let fq = self.spec.fq();
        let codes = self.codes.iter().zip(&other.codes).map(|(&a, &b)| fq.add(a, b)).collect();
        Ok(FFVector { spec: self.spec, codes })
    }

    pub fn scale(&self, code: u64) -> FFVector {
        let fq = self.spec.fq();
        FFVector {
            spec: self.spec,
            codes: self.codes.iter().map(|&a| fq.mul(a, code)).collect(),
        }
    }

    /// Row action v·M.
    pub fn mul_matrix(&self, m: &FFMatrix) -> Result<FFVector> {
        if self.spec != m.spec || self.len() != m.nrows {
            return Err(Error::Shape(format!(
                "v·M: vector length {} vs matrix rows {}",
                self.len(),
                m.nrows
            )));
        }
        let fq = self.spec.fq();
        let mut out = vec![0u64; m.ncols];
        match &m.storage {
            Storage::Bits { wpr, words } => {
                let mut acc = vec![0u64; *wpr];
                for (l, &c) in self.codes.iter().enumerate() {
                    if c == 1 {
                        for (a, w) in acc.iter_mut().zip(&words[l * wpr..(l + 1) * wpr]) {
                            *a ^= w;
                        }
                    }
                }
                for (j, o) in out.iter_mut().enumerate() {
                    *o = u64::from(gf2::get_bit(&acc, j));
                }
            }
            Storage::Gen(codes) => {
                if self.spec.k == 1 {
                    // Delayed reduction: products are < p² ≤ 49, so u64 sums
                    // cannot overflow at any supported dimension.
                    for (l, &c) in self.codes.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        for (o, &b) in out.iter_mut().zip(&codes[l * m.ncols..(l + 1) * m.ncols]) {
                            *o += c * b;
                        }
                    }
                    for o in out.iter_mut() {
                        *o %= self.spec.p;
                    }
                } else {
                    for (l, &c) in self.codes.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        for (o, &b) in out.iter_mut().zip(&codes[l * m.ncols..(l + 1) * m.ncols]) {
                            *o = fq.add(*o, fq.mul(c, b));
                        }
                    }
                }
            }
        }
        Ok(FFVector { spec: self.spec, codes: out })
    }
}

impl fmt::Debug for FFVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FFVector(GF({}^{}), {:?})", self.spec.p, self.spec.k, self.codes)
    }
}

impl FFMatrix {
    pub fn zero(spec: FieldSpec, nrows: usize, ncols: usize) -> FFMatrix {
        let storage = if spec.is_bits() {
            let wpr = gf2::words_per_row(ncols);
            Storage::Bits { wpr, words: vec![0; nrows * wpr] }
        } else {
            Storage::Gen(vec![0; nrows * ncols])
        };
        FFMatrix { spec, nrows, ncols, storage }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> FFMatrix {
        let mut m = FFMatrix::zero(spec, n, n);
        for i in 0..n {
            m.set_unchecked(i, i, 1);
        }
        m
    }

    /// Row-major construction; integers reduce into the prime subfield.
    pub fn from_integers(
        spec: FieldSpec,
        nrows: usize,
        ncols: usize,
        entries: &[i64],
    ) -> Result<FFMatrix> {
        if entries.len() != nrows * ncols {
            return Err(Error::Shape(format!(
                "{}×{} matrix needs {} entries, got {}",
                nrows,
                ncols,
                nrows * ncols,
                entries.len()
            )));
        }
        let fq = spec.fq();
        let mut m = FFMatrix::zero(spec, nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                m.set_unchecked(i, j, fq.from_int(entries[i * ncols + j]));
            }
        }
        Ok(m)
    }

    /// Row-major construction from element codes.
    pub fn from_codes(
        spec: FieldSpec,
        nrows: usize,
        ncols: usize,
        entries: &[u64],
    ) -> Result<FFMatrix> {
        if entries.len() != nrows * ncols {
            return Err(Error::Shape(format!(
                "{}×{} matrix needs {} entries, got {}",
                nrows,
                ncols,
                nrows * ncols,
                entries.len()
            )));
        }
        let fq = spec.fq();
        if let Some(&bad) = entries.iter().find(|&&c| !fq.valid_code(c)) {
            return Err(Error::Domain(format!(
                "code {bad} out of range for GF({}^{})",
                spec.p, spec.k
            )));
        }
        let mut m = FFMatrix::zero(spec, nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                m.set_unchecked(i, j, entries[i * ncols + j]);
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[FFVector]) -> Result<FFMatrix> {
        let first = rows.first().ok_or_else(|| {
            Error::Shape("from_rows: need at least one row to fix field and width".into())
        })?;
        let (spec, ncols) = (first.spec, first.len());
        if rows.iter().any(|r| r.spec != spec || r.len() != ncols) {
            return Err(Error::Shape("from_rows: mixed fields or lengths".into()));
        }
        let mut m = FFMatrix::zero(spec, rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &c) in row.codes.iter().enumerate() {
                m.set_unchecked(i, j, c);
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.spec
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        assert!(i < self.nrows && j < self.ncols, "index ({i},{j}) out of range");
        match &self.storage {
            Storage::Bits { wpr, words } => {
                u64::from(gf2::get_bit(&words[i * wpr..(i + 1) * wpr], j))
            }
            Storage::Gen(codes) => codes[i * self.ncols + j],
        }
    }

    fn set_unchecked(&mut self, i: usize, j: usize, code: u64) {
        match &mut self.storage {
            Storage::Bits { wpr, words } => {
                gf2::set_bit(&mut words[i * *wpr..(i + 1) * *wpr], j, code == 1)
            }
            Storage::Gen(codes) => codes[i * self.ncols + j] = code,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, code: u64) -> Result<()> {
        if i >= self.nrows || j >= self.ncols {
            return Err(Error::Index(format!("index ({i},{j}) out of range")));
        }
        if !self.spec.fq().valid_code(code) {
            return Err(Error::Domain(format!("code {code} out of range")));
        }
        self.set_unchecked(i, j, code);
        Ok(())
    }

    pub fn row(&self, i: usize) -> FFVector {
        let codes = (0..self.ncols).map(|j| self.get(i, j)).collect();
        FFVector { spec: self.spec, codes }
    }

    pub fn rows(&self) -> Vec<FFVector> {
        (0..self.nrows).map(|i| self.row(i)).collect()
    }

    /// Row-major element codes.
    pub fn codes(&self) -> Vec<u64> {
        match &self.storage {
            Storage::Gen(codes) => codes.clone(),
            Storage::Bits { .. } => {
                let mut out = Vec::with_capacity(self.nrows * self.ncols);
                for i in 0..self.nrows {
                    for j in 0..self.ncols {
                        out.push(self.get(i, j));
                    }
                }
                out
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.storage {
            Storage::Bits { words, .. } => words.iter().all(|&w| w == 0),
            Storage::Gen(codes) => codes.iter().all(|&c| c == 0),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == FFMatrix::identity(self.spec, self.nrows)
    }

    fn same_shape_check(&self, other: &FFMatrix, op: &str) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::Shape(format!("{op}: field mismatch")));
        }
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(Error::Shape(format!(
                "{op}: {}×{} vs {}×{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &FFMatrix) -> Result<FFMatrix> {
        self.same_shape_check(other, "add")?;
        let mut out = self.clone();
        match (&mut out.storage, &other.storage) {
            (Storage::Bits { words, .. }, Storage::Bits { words: ow, .. }) => {
                for (a, b) in words.iter_mut().zip(ow) {
                    *a ^= b;
                }
            }
            (Storage::Gen(codes), Storage::Gen(oc)) => {
                let fq = self.spec.fq();
                for (a, &b) in codes.iter_mut().zip(oc) {
                    *a = fq.add(*a, b);
                }
            }
            _ => unreachable!("storage kind is determined by the field"),
        }
        Ok(out)
    }

    pub fn neg(&self) -> FFMatrix {
        match &self.storage {
            Storage::Bits { .. } => self.clone(),
            Storage::Gen(codes) => {
                let fq = self.spec.fq();
                let mut out = self.clone();
                let Storage::Gen(oc) = &mut out.storage else { unreachable!() };
                for (o, &c) in oc.iter_mut().zip(codes) {
                    *o = fq.neg(c);
                }
                out
            }
        }
    }

    pub fn sub(&self, other: &FFMatrix) -> Result<FFMatrix> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, code: u64) -> Result<FFMatrix> {
        let fq = self.spec.fq();
        if !fq.valid_code(code) {
            return Err(Error::Domain(format!("code {code} out of range")));
        }
        let mut out = FFMatrix::zero(self.spec, self.nrows, self.ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.set_unchecked(i, j, fq.mul(self.get(i, j), code));
            }
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &FFMatrix) -> Result<FFMatrix> {
        if self.spec != other.spec {
            return Err(Error::Shape("multiply: field mismatch".into()));
        }
        if self.ncols != other.nrows {
            return Err(Error::Shape(format!(
                "multiply: {}×{} by {}×{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut out = FFMatrix::zero(self.spec, self.nrows, other.ncols);
        match (&self.storage, &other.storage, &mut out.storage) {
            (Storage::Bits { words: a, .. }, Storage::Bits { words: b, .. }, Storage::Bits { words: c, .. }) => {
                *c = gf2::mul(a, self.nrows, self.ncols, b, other.ncols);
            }
            (Storage::Gen(a), Storage::Gen(b), Storage::Gen(c)) => {
                let (n, q) = (self.ncols, other.ncols);
                if self.spec.k == 1 {
                    let p = self.spec.p;
                    // Delayed reduction; see mul_matrix for the overflow bound.
                    for i in 0..self.nrows {
                        let crow = &mut c[i * q..(i + 1) * q];
                        for l in 0..n {
                            let av = a[i * n + l];
                            if av == 0 {
                                continue;
                            }
                            for (cv, &bv) in crow.iter_mut().zip(&b[l * q..(l + 1) * q]) {
                                *cv += av * bv;
                            }
                        }
                        for cv in crow.iter_mut() {
                            *cv %= p;
                        }
                    }
                } else {
                    let fq = self.spec.fq();
                    for i in 0..self.nrows {
                        for l in 0..n {
                            let av = a[i * n + l];
                            if av == 0 {
                                continue;
                            }
                            for j in 0..q {
                                let idx = i * q + j;
                                c[idx] = fq.add(c[idx], fq.mul(av, b[l * q + j]));
                            }
                        }
                    }
                }
            }
            _ => unreachable!("storage kind is determined by the field"),
        }
        Ok(out)
    }

    /// m^e for e ∈ ℤ; negative exponents go through the exact inverse.
    pub fn power(&self, e: i64) -> Result<FFMatrix> {
        if !self.is_square() {
            return Err(Error::Shape("power: matrix must be square".into()));
        }
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = FFMatrix::identity(self.spec, self.nrows);
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.multiply(&sq)?;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.multiply(&sq)?;
            }
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> FFMatrix {
        let mut out = FFMatrix::zero(self.spec, self.ncols, self.nrows);
        match (&self.storage, &mut out.storage) {
            (Storage::Bits { words, .. }, Storage::Bits { words: t, .. }) => {
                *t = gf2::transpose(words, self.nrows, self.ncols);
            }
            _ => {
                for i in 0..self.nrows {
                    for j in 0..self.ncols {
                        out.set_unchecked(j, i, self.get(i, j));
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        match &self.storage {
            Storage::Bits { words, .. } => gf2::rank(words, self.nrows, self.ncols),
            Storage::Gen(codes) => {
                let (_, _, pivots) =
                    elim::rref_gen(self.spec.fq(), codes, self.nrows, self.ncols, false);
                pivots.len()
            }
        }
    }

    /// Reduced-row-echelon basis of {v : v·M = 0}.
    pub fn left_nullspace(&self) -> Vec<FFVector> {
        let kernel_rows: Vec<Vec<u64>> = match &self.storage {
            Storage::Bits { words, .. } => {
                let (rref, transform, pivots) =
                    gf2::rref_with_transform(words, self.nrows, self.ncols);
                let wpr = gf2::words_per_row(self.ncols);
                let wpr_t = gf2::words_per_row(self.nrows);
                (pivots.len()..self.nrows)
                    .map(|i| {
                        debug_assert!(rref[i * wpr..(i + 1) * wpr].iter().all(|&w| w == 0));
                        (0..self.nrows)
                            .map(|j| u64::from(gf2::get_bit(&transform[i * wpr_t..], j)))
                            .collect()
                    })
                    .collect()
            }
            Storage::Gen(codes) => {
                let (rref, transform, pivots) =
                    elim::rref_gen(self.spec.fq(), codes, self.nrows, self.ncols, true);
                let transform = transform.expect("requested transform");
                (pivots.len()..self.nrows)
                    .map(|i| {
                        debug_assert!(rref[i * self.ncols..(i + 1) * self.ncols]
                            .iter()
                            .all(|&c| c == 0));
                        transform[i * self.nrows..(i + 1) * self.nrows].to_vec()
                    })
                    .collect()
            }
        };
        // Re-echelonize so the basis itself is RREF and deterministic.
        let mut ech = Echelon::new(self.spec.fq(), self.nrows);
        for row in kernel_rows {
            ech.insert(row);
        }
        ech.into_rows()
            .into_iter()
            .map(|codes| FFVector { spec: self.spec, codes })
            .collect()
    }

    pub fn inverse(&self) -> Result<FFMatrix> {
        if !self.is_square() {
            return Err(Error::Shape("inverse: matrix must be square".into()));
        }
        let n = self.nrows;
        match &self.storage {
            Storage::Bits { words, .. } => {
                let (_, transform, pivots) = gf2::rref_with_transform(words, n, self.ncols);
                if pivots.len() != n {
                    return Err(Error::Singular(format!("rank {} of {}", pivots.len(), n)));
                }
                let wpr_t = gf2::words_per_row(n);
                let mut out = FFMatrix::zero(self.spec, n, n);
                let Storage::Bits { words: ow, .. } = &mut out.storage else { unreachable!() };
                ow.copy_from_slice(&transform[..n * wpr_t]);
                Ok(out)
            }
            Storage::Gen(codes) => {
                let (_, transform, pivots) =
                    elim::rref_gen(self.spec.fq(), codes, n, self.ncols, true);
                if pivots.len() != n {
                    return Err(Error::Singular(format!("rank {} of {}", pivots.len(), n)));
                }
                let mut out = FFMatrix::zero(self.spec, n, n);
                out.storage = Storage::Gen(transform.expect("requested transform"));
                Ok(out)
            }
        }
    }

    /// Field trace (sum of diagonal entries) as an element code.
    pub fn trace(&self) -> Result<u64> {
        if !self.is_square() {
            return Err(Error::Shape("trace: matrix must be square".into()));
        }
        let fq = self.spec.fq();
        let mut t = 0u64;
        for i in 0..self.nrows {
            t = fq.add(t, self.get(i, i));
        }
        Ok(t)
    }

    /// Trace over a prime field as its canonical integer representative in
    /// [0, p−1].
    pub fn trace_lift(&self) -> Result<u64> {
        if self.spec.k != 1 {
            return Err(Error::UnsupportedField(
                "trace_lift needs a prime field (k = 1)".into(),
            ));
        }
        self.trace()
    }

    /// Least e ≥ 1 with m^e = I; fails with a cap-exceeded error beyond `cap`.
    pub fn element_order(&self, cap: u64) -> Result<u64> {
        order::element_order(self, cap)
    }

    /// Re-interprets a prime-field matrix in an extension of the same
    /// characteristic (the prime subfield embedding is the identity on codes).
    pub fn embed(&self, target: FieldSpec) -> Result<FFMatrix> {
        if self.spec.k != 1 || target.p != self.spec.p {
            return Err(Error::UnsupportedField(format!(
                "embed: GF({}^{}) into GF({}^{}) is not a prime-subfield embedding",
                self.spec.p, self.spec.k, target.p, target.k
            )));
        }
        let mut out = FFMatrix::zero(target, self.nrows, self.ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.set_unchecked(i, j, self.get(i, j));
            }
        }
        Ok(out)
    }
}

impl PartialOrd for FFMatrix {
    fn partial_cmp(&self, other: &FFMatrix) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FFMatrix {
    /// Orders by field, shape, then row-major entry codes (the packed word
    /// order of GF(2) storage is *not* entry order, hence the explicit loop).
    fn cmp(&self, other: &FFMatrix) -> Ordering {
        let head = (self.spec, self.nrows, self.ncols).cmp(&(other.spec, other.nrows, other.ncols));
        if head != Ordering::Equal {
            return head;
        }
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                let c = self.get(i, j).cmp(&other.get(i, j));
                if c != Ordering::Equal {
                    return c;
                }
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for FFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FFMatrix(GF({}^{}), {}×{}", self.spec.p, self.spec.k, self.nrows, self.ncols)?;
        if self.nrows <= 12 && self.ncols <= 12 {
            write!(f, ", [")?;
            for i in 0..self.nrows {
                if i > 0 {
                    write!(f, "; ")?;
                }
                for j in 0..self.ncols {
                    if j > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", self.get(i, j))?;
                }
            }
            write!(f, "]")?;
        }
        write!(f, ")")
    }
}

/// Echelonized bases of span(u)+span(w) and span(u)∩span(w), by the
/// Zassenhaus block trick: row-reducing [U|U; W|0] leaves sum-basis rows
/// (nonzero left half) and intersection-basis rows (zero left half, basis in
/// the right half).
pub fn sum_intersection(u: &[FFVector], w: &[FFVector]) -> Result<(Vec<FFVector>, Vec<FFVector>)> {
    let probe = u.iter().chain(w).next().ok_or_else(|| {
        Error::Shape("sum_intersection: need at least one vector to fix the space".into())
    })?;
    let (spec, len) = (probe.spec, probe.len());
    if u.iter().chain(w).any(|v| v.spec != spec || v.len() != len) {
        return Err(Error::Shape("sum_intersection: mixed fields or lengths".into()));
    }
    let m = u.len() + w.len();
    let mut block = vec![0u64; m * 2 * len];
    for (i, v) in u.iter().enumerate() {
        block[i * 2 * len..i * 2 * len + len].copy_from_slice(&v.codes);
        block[i * 2 * len + len..(i + 1) * 2 * len].copy_from_slice(&v.codes);
    }
    for (i, v) in w.iter().enumerate() {
        let i = u.len() + i;
        block[i * 2 * len..i * 2 * len + len].copy_from_slice(&v.codes);
    }
    let (rref, _, _) = elim::rref_gen(spec.fq(), &block, m, 2 * len, false);
    let mut sum = Vec::new();
    let mut intersection = Vec::new();
    for i in 0..m {
        let left = &rref[i * 2 * len..i * 2 * len + len];
        let right = &rref[i * 2 * len + len..(i + 1) * 2 * len];
        if left.iter().any(|&c| c != 0) {
            sum.push(FFVector { spec, codes: left.to_vec() });
        } else if right.iter().any(|&c| c != 0) {
            intersection.push(FFVector { spec, codes: right.to_vec() });
        }
    }
    Ok((sum, intersection))
}
