//! Modules over matrix groups: spinning, rebasing, and the induced actions
//! on invariant subspaces and their quotients.

use crate::error::{Error, Result};
use crate::ff::{Echelon, FFMatrix, FFVector, FieldSpec, Fq};

/// A module for a matrix group: a list of invertible square generator
/// matrices over a common field, acting on row vectors from the right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GModule {
    spec: FieldSpec,
    dim: usize,
    generators: Vec<FFMatrix>,
}

impl GModule {
    /// Builds a module from generator matrices (nonempty; all square, the
    /// same shape and field, and invertible).
    pub fn new(generators: Vec<FFMatrix>) -> Result<GModule> {
        let first = generators.first().ok_or_else(|| {
            Error::Arity("a module needs at least one generator matrix".into())
        })?;
        if !first.is_square() {
            return Err(Error::Shape(format!(
                "module generators must be square, got {}x{}",
                first.nrows(),
                first.ncols()
            )));
        }
        let spec = first.field();
        let dim = first.nrows();
        for (i, g) in generators.iter().enumerate() {
            if g.field() != spec || g.nrows() != dim || g.ncols() != dim {
                return Err(Error::Shape(format!(
                    "generator {} does not match the module shape {}x{} over GF({})",
                    i + 1,
                    dim,
                    dim,
                    spec.order()
                )));
            }
            if g.rank() != dim {
                return Err(Error::Singular(format!("generator {} is singular", i + 1)));
            }
        }
        Ok(GModule { spec, dim, generators })
    }

    pub fn field(&self) -> FieldSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[FFMatrix] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    /// The module with transposed generators (the contragredient module up
    /// to inversion; what irreducibility certification spins dually).
    pub fn transposed(&self) -> GModule {
        GModule {
            spec: self.spec,
            dim: self.dim,
            generators: self.generators.iter().map(|g| g.transpose()).collect(),
        }
    }
}

/// Spins up the standard basis of the submodule generated by `seed`:
/// starting from `[seed]`, appends images of listed vectors under the
/// generators (in list order, generators in order) whenever the image
/// enlarges the span, until the span is the full space or the list is
/// exhausted.  The result is a basis of the generated submodule whose
/// order depends only on the seed and the generator list.
pub fn standard_basis(module: &GModule, seed: &FFVector) -> Result<Vec<FFVector>> {
    if seed.len() != module.dim() {
        return Err(Error::Shape(format!(
            "seed has length {} in a {}-dimensional module",
            seed.len(),
            module.dim()
        )));
    }
    if seed.is_zero() {
        return Err(Error::Seed("the spinning seed must be nonzero".into()));
    }
    let fq = Fq::new(module.field());
    let mut span = Echelon::new(fq, module.dim());
    span.insert(seed.codes().to_vec());
    let mut basis = vec![seed.clone()];
    let mut next = 0;
    while next < basis.len() && span.dim() < module.dim() {
        let v = basis[next].clone();
        next += 1;
        for g in module.generators() {
            if span.dim() == module.dim() {
                break;
            }
            let image = v.mul_matrix(g)?;
            if span.insert(image.codes().to_vec()).is_some() {
                basis.push(image);
            }
        }
    }
    Ok(basis)
}

/// Conjugates every generator by the basis matrix: `g ↦ B·g·B⁻¹`.
pub fn rebase(module: &GModule, basis: &[FFVector]) -> Result<GModule> {
    let b = FFMatrix::from_rows(basis)?;
    if b.nrows() != module.dim() || b.ncols() != module.dim() {
        return Err(Error::Shape(format!(
            "rebasing needs {0} vectors of length {0}, got {1} of length {2}",
            module.dim(),
            b.nrows(),
            b.ncols()
        )));
    }
    let inv = b.inverse()?;
    let generators: Vec<FFMatrix> = module
        .generators()
        .iter()
        .map(|g| b.multiply(g)?.multiply(&inv))
        .collect::<Result<_>>()?;
    GModule::new(generators)
}

/// The echelonized span of a vector list, with its pivot columns.
fn echelonize(module: &GModule, basis: &[FFVector]) -> Result<Echelon> {
    let fq = Fq::new(module.field());
    let mut span = Echelon::new(fq, module.dim());
    for v in basis {
        if v.len() != module.dim() {
            return Err(Error::Shape(format!(
                "basis vector of length {} in a {}-dimensional module",
                v.len(),
                module.dim()
            )));
        }
        span.insert(v.codes().to_vec());
    }
    Ok(span)
}

/// Checks that the span is invariant and returns, for each generator, the
/// action matrix rows on the echelon basis (used by `submodule_action`).
fn action_on_span(module: &GModule, span: &Echelon) -> Result<Vec<FFMatrix>> {
    let spec = module.field();
    let d = span.dim();
    let mut actions = Vec::with_capacity(module.ngens());
    for (gi, g) in module.generators().iter().enumerate() {
        let mut entries = Vec::with_capacity(d * d);
        for row in span.rows() {
            let v = FFVector::from_codes(spec, row.clone())?;
            let image = v.mul_matrix(g)?;
            let mut residual = image.codes().to_vec();
            span.reduce(&mut residual);
            if residual.iter().any(|&c| c != 0) {
                return Err(Error::Invariance(format!(
                    "the span is not invariant under generator {}",
                    gi + 1
                )));
            }
            // In a reduced echelon basis the coordinate along row j is the
            // image's entry at pivot column j.
            for &piv in span.pivots() {
                entries.push(image.get(piv));
            }
        }
        actions.push(FFMatrix::from_codes(spec, d, d, &entries)?);
    }
    Ok(actions)
}

/// The action of the generators on the span of `basis`, expressed in the
/// echelonized basis of that span.  The span must be invariant.
pub fn submodule_action(module: &GModule, basis: &[FFVector]) -> Result<GModule> {
    let span = echelonize(module, basis)?;
    let actions = action_on_span(module, &span)?;
    GModule::new(actions)
}

/// The action of the generators on the quotient by the span of `basis`, in
/// the canonical complement coordinates (the non-pivot columns of the
/// echelonized span).  The span must be invariant.
pub fn factor_action(module: &GModule, basis: &[FFVector]) -> Result<GModule> {
    let span = echelonize(module, basis)?;
    // Invariance check (also validates the spanning rows).
    action_on_span(module, &span)?;
    let spec = module.field();
    let complement: Vec<usize> =
        (0..module.dim()).filter(|c| !span.pivots().contains(c)).collect();
    let q = complement.len();
    let mut actions = Vec::with_capacity(module.ngens());
    for g in module.generators() {
        let mut entries = Vec::with_capacity(q * q);
        for &c in &complement {
            let mut unit = vec![0u64; module.dim()];
            unit[c] = 1;
            let v = FFVector::from_codes(spec, unit)?;
            let mut reduced = v.mul_matrix(g)?.codes().to_vec();
            span.reduce(&mut reduced);
            for &c2 in &complement {
                entries.push(reduced[c2]);
            }
        }
        actions.push(FFMatrix::from_codes(spec, q, q, &entries)?);
    }
    GModule::new(actions)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Permutation matrices of (1,2) and (1,2,3) over GF(q): the natural
    /// permutation module of S3.
    pub(crate) fn s3_natural(q: u64) -> GModule {
        let spec = FieldSpec::new(q, 1).unwrap();
        let swap = FFMatrix::from_integers(spec, 3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]).unwrap();
        let cyc = FFMatrix::from_integers(spec, 3, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0]).unwrap();
        GModule::new(vec![swap, cyc]).unwrap()
    }

    fn vec_of(module: &GModule, entries: &[i64]) -> FFVector {
        FFVector::from_integers(module.field(), entries)
    }

    #[test]
    fn construction_validates() {
        let spec = FieldSpec::new(3, 1).unwrap();
        let singular = FFMatrix::zero(spec, 2, 2);
        assert!(matches!(GModule::new(vec![singular]), Err(Error::Singular(_))));
        let id2 = FFMatrix::identity(spec, 2);
        let id3 = FFMatrix::identity(spec, 3);
        assert!(matches!(GModule::new(vec![id2.clone(), id3]), Err(Error::Shape(_))));
        assert!(GModule::new(vec![]).is_err());
        let m = GModule::new(vec![id2]).unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.ngens(), 1);
    }

    #[test]
    fn spinning_follows_the_contract() {
        let m = s3_natural(2);
        // The all-ones vector is fixed by both permutation matrices.
        let ones = vec_of(&m, &[1, 1, 1]);
        assert_eq!(standard_basis(&m, &ones).unwrap(), vec![ones]);
        // e1 spins up the whole space.
        let e1 = vec_of(&m, &[1, 0, 0]);
        let basis = standard_basis(&m, &e1).unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(basis[0], e1);
        // Zero seed and wrong length are rejected.
        assert!(matches!(
            standard_basis(&m, &vec_of(&m, &[0, 0, 0])),
            Err(Error::Seed(_))
        ));
        assert!(matches!(
            standard_basis(&m, &FFVector::from_integers(m.field(), &[1, 0])),
            Err(Error::Shape(_))
        ));
        // A 1-dimensional module returns its seed.
        let spec = FieldSpec::new(5, 1).unwrap();
        let one_dim = GModule::new(vec![FFMatrix::from_integers(spec, 1, 1, &[2]).unwrap()]).unwrap();
        let seed = FFVector::from_integers(spec, &[3]);
        assert_eq!(standard_basis(&one_dim, &seed).unwrap(), vec![seed]);
    }

    #[test]
    fn spinning_oracle_check() {
        // Brute-force oracle: grow the span by repeatedly applying all
        // generators to all known vectors until stable, then compare ranks.
        let m = s3_natural(3);
        for seed_entries in [[1i64, 0, 0], [1, 1, 0], [2, 1, 1], [1, 1, 1], [0, 1, 2]] {
            let seed = vec_of(&m, &seed_entries);
            let basis = standard_basis(&m, &seed).unwrap();
            let mut all = vec![seed.clone()];
            loop {
                let mut grew = false;
                for v in all.clone() {
                    for g in m.generators() {
                        let img = v.mul_matrix(g).unwrap();
                        if !all.contains(&img) {
                            all.push(img);
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            let spun = FFMatrix::from_rows(&basis).unwrap().rank();
            let full = FFMatrix::from_rows(&all).unwrap().rank();
            assert_eq!(spun, full, "seed {seed_entries:?}");
            assert_eq!(spun, basis.len(), "basis is independent");
        }
    }

    #[test]
    fn rebase_by_identity_and_round_trip() {
        let m = s3_natural(3);
        let spec = m.field();
        let id_basis: Vec<FFVector> = (0..3)
            .map(|i| {
                let mut v = vec![0u64; 3];
                v[i] = 1;
                FFVector::from_codes(spec, v).unwrap()
            })
            .collect();
        let same = rebase(&m, &id_basis).unwrap();
        assert_eq!(same.generators(), m.generators());

        // Rebase by B then by the rows of B⁻¹ recovers the original.
        let b = FFMatrix::from_integers(spec, 3, 3, &[1, 1, 0, 0, 1, 0, 2, 0, 1]).unwrap();
        let rebased = rebase(&m, &b.rows()).unwrap();
        let back = rebase(&rebased, &b.inverse().unwrap().rows()).unwrap();
        assert_eq!(back.generators(), m.generators());

        // Traces and orders are similarity invariants.
        for (g, h) in m.generators().iter().zip(rebased.generators()) {
            assert_eq!(g.trace().unwrap(), h.trace().unwrap());
            assert_eq!(
                g.element_order(1000).unwrap(),
                h.element_order(1000).unwrap()
            );
        }

        // A singular basis is rejected.
        let bad = vec![
            vec_of(&m, &[1, 0, 0]),
            vec_of(&m, &[1, 0, 0]),
            vec_of(&m, &[0, 0, 1]),
        ];
        assert!(rebase(&m, &bad).is_err());
    }

    #[test]
    fn submodule_and_factor_actions() {
        // GF(3)³ for S3: the all-ones line and the sum-zero plane are the
        // invariant subspaces.
        let m = s3_natural(3);
        let ones = vec![vec_of(&m, &[1, 1, 1])];
        let line = submodule_action(&m, &ones).unwrap();
        assert_eq!(line.dim(), 1);
        // Permutations fix the line pointwise: the action is trivial.
        for g in line.generators() {
            assert!(g.is_identity());
        }

        let plane_basis = vec![vec_of(&m, &[1, 2, 0]), vec_of(&m, &[0, 1, 2])];
        let plane = submodule_action(&m, &plane_basis).unwrap();
        assert_eq!(plane.dim(), 2);
        // Traces on the plane: trace(natural) = fixed points; the plane
        // carries trace(natural) − trace(line) = fixed − 1.
        assert_eq!(plane.generators()[0].trace().unwrap(), 0); // swap fixes 1 point
        assert_eq!(plane.generators()[1].trace().unwrap(), 2); // 3-cycle fixes 0, −1 ≡ 2

        // The factor by the plane is 1-dimensional and trivial.
        let factor = factor_action(&m, &plane_basis).unwrap();
        assert_eq!(factor.dim(), 1);
        for g in factor.generators() {
            assert!(g.is_identity());
        }

        // Full-space basis: similar copy / zero-dimensional factor.
        let full: Vec<FFVector> = FFMatrix::identity(m.field(), 3).rows();
        let copy = submodule_action(&m, &full).unwrap();
        assert_eq!(copy.generators(), m.generators());
        assert_eq!(factor_action(&m, &full).unwrap().dim(), 0);
        // Zero submodule: factor is a similar copy.
        let none: Vec<FFVector> = Vec::new();
        assert_eq!(factor_action(&m, &none).unwrap().generators(), m.generators());

        // A non-invariant span is rejected.
        let bad = vec![vec_of(&m, &[1, 0, 0])];
        assert!(matches!(submodule_action(&m, &bad), Err(Error::Invariance(_))));
        assert!(matches!(factor_action(&m, &bad), Err(Error::Invariance(_))));
    }

    #[test]
    fn spun_spans_are_invariant() {
        // Spec invariant: span(standard_basis) is closed under all
        // generators, over several seeds and fields.
        for q in [2u64, 3, 5] {
            let m = s3_natural(q);
            for raw in [[1i64, 0, 0], [1, 1, 0], [1, 2, 2]] {
                let seed = FFVector::from_integers(m.field(), &raw);
                if seed.is_zero() {
                    continue;
                }
                let basis = standard_basis(&m, &seed).unwrap();
                // Membership of every image in the span.
                let rank = FFMatrix::from_rows(&basis).unwrap().rank();
                for v in &basis {
                    for g in m.generators() {
                        let mut rows = basis.clone();
                        rows.push(v.mul_matrix(g).unwrap());
                        assert_eq!(FFMatrix::from_rows(&rows).unwrap().rank(), rank);
                    }
                }
            }
        }
    }
}
