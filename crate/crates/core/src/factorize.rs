//! Factorizations of the adjugate `adj X = Y Z`.
//!
//! For even `n` and constant invertible alternating `A`, `A'` with data
//! `(r, C)`, both
//!
//! ```text
//! Y  = A^-1 X^T,             Z  = (r id + C X^T) A'^-1
//! Y' = A^-1 (r id + X^T C),  Z' = X^T A'^-1
//! ```
//!
//! factor `adj X`. Normalized factorizations `adj X = J X^T Z` with `J`
//! invertible are parametrized by `J^-1 = A + X^T U`, `Z = B_A + U adj X`.

use crate::companion::{bilinear, companion_right, AlternatingMatrix};
use crate::error::{Error, Result};
use crate::genmat::{determinant, inverse, GenericContext};
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// `[[0, id], [-id, 0]]` of even size `n`, in context `n`.
pub fn hyperbolic<C: Scalar>(n: usize) -> Result<AlternatingMatrix<C>> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::OddSize(n));
    }
    let m = n / 2;
    let h = PolyMatrix::from_fn(n, n, n, |i, j| {
        if j == i + m {
            Polynomial::one(n)
        } else if i == j + m {
            -Polynomial::one(n)
        } else {
            Polynomial::zero(n)
        }
    });
    debug_assert!(determinant(&h).map(|d| d.is_one()).unwrap_or(false));
    AlternatingMatrix::new(h)
}

/// Both factorizations built from `(A, A')`.
#[derive(Clone, Debug)]
pub struct AdjointFactorization<C> {
    pub y: PolyMatrix<C>,
    pub z: PolyMatrix<C>,
    pub y2: PolyMatrix<C>,
    pub z2: PolyMatrix<C>,
    /// `det Y = det X / det A`.
    pub det_y: Polynomial<C>,
    /// `det Z' = det X / det A'`.
    pub det_z2: Polynomial<C>,
    /// One factor of the first pair is a constant invertible matrix
    /// (happens exactly for `n = 2`, where `C = 0`).
    pub trivial: bool,
}

fn constant_det<C: Scalar>(a: &AlternatingMatrix<C>) -> Result<C> {
    let d = determinant(a.matrix())?;
    match d.constant_value() {
        Some(c) if !c.is_zero() => Ok(c),
        _ => Err(Error::NotInvertible(format!("det A = {d} is not a nonzero constant"))),
    }
}

pub fn factor_adjoint<C: Scalar>(
    ctx: &GenericContext<C>,
    a: &AlternatingMatrix<C>,
    a2: &AlternatingMatrix<C>,
) -> Result<AdjointFactorization<C>> {
    let n = ctx.n;
    if !n.is_multiple_of(2) {
        return Err(Error::OddSize(n));
    }
    let (da, da2) = (constant_det(a)?, constant_det(a2)?);
    let (ainv, a2inv) = (inverse(a.matrix())?, inverse(a2.matrix())?);
    let data = bilinear(a, a2, &ctx.x)?;
    let xt = ctx.xt();
    let r_id = PolyMatrix::identity(n, n).scale_poly(&data.r);

    let y = &ainv * &xt;
    let z = &(&r_id + &(&data.c * &xt)) * &a2inv;
    let y2 = &ainv * &(&r_id + &(&xt * &data.c));
    let z2 = &xt * &a2inv;
    if &y * &z != ctx.adj {
        return Err(Error::IdentityFails("Y Z = adj X".into()));
    }
    if &y2 * &z2 != ctx.adj {
        return Err(Error::IdentityFails("Y' Z' = adj X".into()));
    }
    let trivial = z.is_constant() || y2.is_constant();
    Ok(AdjointFactorization {
        y,
        z,
        y2,
        z2,
        det_y: ctx.det.scale(&(C::one() / da)),
        det_z2: ctx.det.scale(&(C::one() / da2)),
        trivial,
    })
}

/// From `adj X = Y Z`: the pair `(tau(Z^T), tau(Y^T))`, which again
/// multiplies to `adj X` and moves the determinant condition of the right
/// factor onto the left one.
pub fn tau_transpose_dual<C: Scalar>(y: &PolyMatrix<C>, z: &PolyMatrix<C>) -> (PolyMatrix<C>, PolyMatrix<C>) {
    (z.transpose().tau(), y.transpose().tau())
}

/// `adj X = J X^T Z` with witnesses `J^-1 = A + X^T U`, `Z = B_A + U adj X`.
#[derive(Clone, Debug)]
pub struct NormalizedFactorization<C> {
    pub j: PolyMatrix<C>,
    pub z: PolyMatrix<C>,
    pub a: AlternatingMatrix<C>,
    pub u: PolyMatrix<C>,
}

impl<C: Scalar> PartialEq for NormalizedFactorization<C> {
    fn eq(&self, o: &Self) -> bool {
        self.j == o.j && self.z == o.z && self.a == o.a && self.u == o.u
    }
}

impl<C: Scalar> NormalizedFactorization<C> {
    /// `J^-1`, computed from `J` alone.
    pub fn j_inverse(&self) -> Result<PolyMatrix<C>> {
        inverse(&self.j)
    }

    /// `adj X = J X^T Z`, `J^-1 = A + X^T U` and `Z = B_A + U adj X`.
    pub fn verify(&self, ctx: &GenericContext<C>) -> Result<()> {
        let xt = ctx.xt();
        if &(&self.j * &xt) * &self.z != ctx.adj {
            return Err(Error::NotAFactorization);
        }
        if self.j_inverse()? != self.a.matrix() + &(&xt * &self.u) {
            return Err(Error::IdentityFails("J^-1 = A + X^T U".into()));
        }
        if self.z != &companion_right(&self.a, &ctx.x)? + &(&self.u * &ctx.adj) {
            return Err(Error::IdentityFails("Z = B_A + U adj X".into()));
        }
        Ok(())
    }
}

pub fn build_normalized<C: Scalar>(
    ctx: &GenericContext<C>,
    a: &AlternatingMatrix<C>,
    u: &PolyMatrix<C>,
) -> Result<NormalizedFactorization<C>> {
    let n = ctx.n;
    if a.size() != n || u.rows() != n || u.cols() != n {
        return Err(Error::SizeMismatch(format!("A and U must be {n}x{n}")));
    }
    let jinv = a.matrix() + &(&ctx.xt() * u);
    let j = inverse(&jinv).map_err(|e| match e {
        Error::NotInvertible(d) => Error::NotInvertible(format!("J^-1 = A + X^T U: {d}")),
        other => other,
    })?;
    let z = &companion_right(a, &ctx.x)? + &(u * &ctx.adj);
    if &jinv * &ctx.adj != &ctx.xt() * &z {
        return Err(Error::IdentityFails("(A + X^T U) adj X = X^T (B_A + U adj X)".into()));
    }
    let nf = NormalizedFactorization { j, z, a: a.clone(), u: u.clone() };
    if &(&nf.j * &ctx.xt()) * &nf.z != ctx.adj {
        return Err(Error::IdentityFails("adj X = J X^T Z".into()));
    }
    Ok(nf)
}

#[derive(Clone, Debug)]
pub enum Equivalence<C> {
    /// `J1^-1 - J2^-1 = X^T V` and `Z1 - Z2 = V adj X`.
    Equivalent(PolyMatrix<C>),
    NotEquivalent,
}

impl<C: Scalar> PartialEq for Equivalence<C> {
    fn eq(&self, o: &Self) -> bool {
        match (self, o) {
            (Equivalence::Equivalent(a), Equivalence::Equivalent(b)) => a == b,
            (Equivalence::NotEquivalent, Equivalence::NotEquivalent) => true,
            _ => false,
        }
    }
}

impl<C> Equivalence<C> {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent(_))
    }
}

/// Decides equivalence by exact division: `V = adj(X)^T (J1^-1 - J2^-1) / det X`.
pub fn normalized_equivalent<C: Scalar>(
    ctx: &GenericContext<C>,
    nf1: &NormalizedFactorization<C>,
    nf2: &NormalizedFactorization<C>,
) -> Equivalence<C> {
    let (Ok(i1), Ok(i2)) = (nf1.j_inverse(), nf2.j_inverse()) else {
        return Equivalence::NotEquivalent;
    };
    let Ok(delta) = i1.checked_sub(&i2) else {
        return Equivalence::NotEquivalent;
    };
    let w = &ctx.adj.transpose() * &delta;
    let n = ctx.n;
    let mut v = PolyMatrix::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            match w[(i, j)].exact_div(&ctx.det) {
                Ok(q) => v[(i, j)] = q,
                Err(_) => return Equivalence::NotEquivalent,
            }
        }
    }
    debug_assert!(&ctx.xt() * &v == delta);
    match nf1.z.checked_sub(&nf2.z) {
        Ok(dz) if dz == &v * &ctx.adj => Equivalence::Equivalent(v),
        _ => Equivalence::NotEquivalent,
    }
}

/// `U = adj(X)^T A N` for constant nilpotent `N`: then
/// `det(A + X^T U) = det A det(id + det X N) = det A`, giving a normalized
/// factorization equivalent to the one with `U = 0`.
pub fn nilpotent_witness<C: Scalar>(ctx: &GenericContext<C>, a: &AlternatingMatrix<C>, nilpotent: &PolyMatrix<C>) -> PolyMatrix<C> {
    &(&ctx.adj.transpose() * a.matrix()) * nilpotent
}
