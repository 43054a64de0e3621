//! Matrix factorizations of `det X` and their cokernels.
//!
//! A matrix factorization `(phi, psi)` of `f` is a pair of square matrices
//! with `phi psi = psi phi = f id`. When `f` is irreducible,
//! `det phi = u f^k` for a unit `u`, and `k` is the rank of `cok phi` over
//! `S/(f)`.

use std::fmt;

use crate::companion::{companion_right, AlternatingMatrix};
use crate::error::{Error, Result};
use crate::genmat::{determinant, inverse, GenericContext};
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::random::Rng;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MfLabel {
    L,
    M,
    LDual,
    MDual,
    Q,
    Trivial,
    Custom(String),
}

impl MfLabel {
    pub fn parse(s: &str) -> MfLabel {
        match s {
            "L" => MfLabel::L,
            "M" => MfLabel::M,
            "Ldual" => MfLabel::LDual,
            "Mdual" => MfLabel::MDual,
            "Q" => MfLabel::Q,
            "trivial" => MfLabel::Trivial,
            other => MfLabel::Custom(other.to_string()),
        }
    }
}

impl fmt::Display for MfLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MfLabel::L => "L",
            MfLabel::M => "M",
            MfLabel::LDual => "Ldual",
            MfLabel::MDual => "Mdual",
            MfLabel::Q => "Q",
            MfLabel::Trivial => "trivial",
            MfLabel::Custom(s) => s,
        })
    }
}

/// A validated matrix factorization. Construct with [`mf_new`].
#[derive(Clone, Debug)]
pub struct MatrixFactorization<C> {
    phi: PolyMatrix<C>,
    psi: PolyMatrix<C>,
    f: Polynomial<C>,
    pub label: MfLabel,
}

impl<C: Scalar> MatrixFactorization<C> {
    pub fn phi(&self) -> &PolyMatrix<C> {
        &self.phi
    }

    pub fn psi(&self) -> &PolyMatrix<C> {
        &self.psi
    }

    pub fn f(&self) -> &Polynomial<C> {
        &self.f
    }

    pub fn size(&self) -> usize {
        self.phi.rows()
    }

    pub fn with_label(mut self, label: MfLabel) -> Self {
        self.label = label;
        self
    }

    /// Entrywise `tau` of both matrices and of `f`.
    pub fn tau(&self) -> Self {
        MatrixFactorization { phi: self.phi.tau(), psi: self.psi.tau(), f: self.f.tau(), label: self.label.clone() }
    }

    /// `(psi, phi)`, the factorization whose cokernel is the syzygy.
    pub fn swap(&self) -> Self {
        MatrixFactorization { phi: self.psi.clone(), psi: self.phi.clone(), f: self.f.clone(), label: MfLabel::Custom(format!("swap({})", self.label)) }
    }
}

impl<C: Scalar> PartialEq for MatrixFactorization<C> {
    fn eq(&self, o: &Self) -> bool {
        self.phi == o.phi && self.psi == o.psi && self.f == o.f && self.label == o.label
    }
}

pub fn mf_new<C: Scalar>(phi: PolyMatrix<C>, psi: PolyMatrix<C>, f: Polynomial<C>) -> Result<MatrixFactorization<C>> {
    let k = phi.square_size()?;
    if psi.square_size()? != k {
        return Err(Error::SizeMismatch(format!("phi is {k}x{k} but psi is {}x{}", psi.rows(), psi.cols())));
    }
    if phi.context_size() != psi.context_size() || phi.context_size() != f.context_size() {
        return Err(Error::ContextMismatch(phi.context_size(), f.context_size()));
    }
    let fid = PolyMatrix::identity(f.context_size(), k).scale_poly(&f);
    if &phi * &psi != fid {
        return Err(Error::IdentityFails("phi psi = f id".into()));
    }
    if &psi * &phi != fid {
        return Err(Error::IdentityFails("psi phi = f id".into()));
    }
    Ok(MatrixFactorization { phi, psi, f, label: MfLabel::Custom(String::new()) })
}

/// `L = (X, adj X)`, `M = (adj X, X)` and their duals `(X^T, adj X^T)`,
/// `(adj X^T, X^T)`.
#[derive(Clone, Debug)]
pub struct CanonicalMfs<C> {
    pub l: MatrixFactorization<C>,
    pub m: MatrixFactorization<C>,
    pub l_dual: MatrixFactorization<C>,
    pub m_dual: MatrixFactorization<C>,
}

impl<C> CanonicalMfs<C> {
    pub fn all(&self) -> [&MatrixFactorization<C>; 4] {
        [&self.l, &self.m, &self.l_dual, &self.m_dual]
    }
}

pub fn canonical_mfs<C: Scalar>(ctx: &GenericContext<C>) -> Result<CanonicalMfs<C>> {
    let (x, adj, det) = (&ctx.x, &ctx.adj, &ctx.det);
    let (xt, adjt) = (x.transpose(), adj.transpose());
    Ok(CanonicalMfs {
        l: mf_new(x.clone(), adj.clone(), det.clone())?.with_label(MfLabel::L),
        m: mf_new(adj.clone(), x.clone(), det.clone())?.with_label(MfLabel::M),
        l_dual: mf_new(xt.clone(), adjt.clone(), det.clone())?.with_label(MfLabel::LDual),
        m_dual: mf_new(adjt, xt, det.clone())?.with_label(MfLabel::MDual),
    })
}

/// How [`cokernel_rank_with`] obtains `det phi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    /// Full symbolic determinant.
    Symbolic,
    /// Restriction to a seeded random line `x = p + t q`: `det phi(t)` is
    /// stripped of factors `f(t)`. Agrees with the symbolic count whenever
    /// `det phi = u f^k`; a non-unit residue is detected with probability 1
    /// over the choice of line.
    Line(u64),
}

const LINE_SEED: u64 = 0x5eed;

/// Rank of `cok phi`. Symbolic for contexts up to 3, line restriction
/// above that.
pub fn cokernel_rank<C: Scalar>(mf: &MatrixFactorization<C>) -> Result<usize> {
    let method = if mf.f.context_size() <= 3 { RankMethod::Symbolic } else { RankMethod::Line(LINE_SEED) };
    cokernel_rank_with(mf, method)
}

pub fn cokernel_rank_with<C: Scalar>(mf: &MatrixFactorization<C>, method: RankMethod) -> Result<usize> {
    match method {
        RankMethod::Symbolic => strip_powers(determinant(&mf.phi)?, &mf.f),
        RankMethod::Line(seed) => {
            let n = mf.f.context_size();
            let mut rng = Rng::new(seed);
            loop {
                let p: Vec<C> = rng.point(n, 50);
                let q: Vec<C> = rng.point(n, 50);
                let f_line = mf.f.restrict_to_line(&p, &q);
                if f_line.total_degree() != mf.f.total_degree() {
                    // degenerate line: f drops degree along it
                    continue;
                }
                return strip_powers(determinant(&mf.phi.restrict_to_line(&p, &q))?, &f_line);
            }
        }
    }
}

fn strip_powers<C: Scalar>(mut d: Polynomial<C>, f: &Polynomial<C>) -> Result<usize> {
    if f.is_constant() {
        return Err(Error::ResidueNotUnit("f is constant".into()));
    }
    if d.is_zero() {
        return Err(Error::ResidueNotUnit("det phi = 0".into()));
    }
    let mut k = 0;
    while let Ok(q) = d.exact_div(f) {
        d = q;
        k += 1;
    }
    if d.is_constant() {
        Ok(k)
    } else {
        Err(Error::ResidueNotUnit(format!("residue {d} after {k} factors of f")))
    }
}

/// From `Y Z = adj X`: the factorizations `(Z, X Y)` and `(Y, Z X)` of
/// `det X`, in that order.
pub fn from_adjoint_factorization<C: Scalar>(
    ctx: &GenericContext<C>,
    y: &PolyMatrix<C>,
    z: &PolyMatrix<C>,
) -> Result<(MatrixFactorization<C>, MatrixFactorization<C>)> {
    let prod = y.checked_mul(z).map_err(|_| Error::NotAFactorization)?;
    if prod != ctx.adj {
        return Err(Error::NotAFactorization);
    }
    let det = ctx.det.clone();
    let zside = mf_new(z.clone(), &ctx.x * y, det.clone())?.with_label(MfLabel::Custom("Z".into()));
    let yside = mf_new(y.clone(), z * &ctx.x, det)?.with_label(MfLabel::Custom("Y".into()));
    Ok((zside, yside))
}

/// `(rank cok Y, rank cok Z)` for `Y Z = adj X`, verified to sum to `n-1`.
pub fn adjoint_ranks<C: Scalar>(ctx: &GenericContext<C>, y: &PolyMatrix<C>, z: &PolyMatrix<C>) -> Result<(usize, usize)> {
    let (zside, yside) = from_adjoint_factorization(ctx, y, z)?;
    let ranks = (cokernel_rank(&yside)?, cokernel_rank(&zside)?);
    if ranks.0 + ranks.1 != ctx.n - 1 {
        return Err(Error::IdentityFails(format!("ranks {ranks:?} do not sum to n-1")));
    }
    Ok(ranks)
}

/// The rank-2 factorization `([[X^T, A], [0, X]], [[adj X^T, -B_A], [0, adj X]])`
/// presenting the pushout of the extension class of `A`.
pub fn pushout_block<C: Scalar>(ctx: &GenericContext<C>, a: &AlternatingMatrix<C>) -> Result<MatrixFactorization<C>> {
    let n = ctx.n;
    let b = companion_right(a, &ctx.x)?;
    let zero = PolyMatrix::zeros(n, n, n);
    let phi = PolyMatrix::block(&ctx.xt(), a.matrix(), &zero, &ctx.x)?;
    let psi = PolyMatrix::block(&ctx.adj.transpose(), &-b, &zero, &ctx.adj)?;
    let mf = mf_new(phi, psi, ctx.det.clone())?.with_label(MfLabel::Q);
    expect_rank(&mf, 2)?;
    Ok(mf)
}

/// For constant invertible `A`: `(X A^-1 X^T, B_A)`.
pub fn reduce_pushout<C: Scalar>(ctx: &GenericContext<C>, a: &AlternatingMatrix<C>) -> Result<MatrixFactorization<C>> {
    let ainv = inverse(a.matrix())?;
    let b = companion_right(a, &ctx.x)?;
    let phi = &(&ctx.x * &ainv) * &ctx.xt();
    let mf = mf_new(phi, b, ctx.det.clone())?.with_label(MfLabel::Q);
    expect_rank(&mf, 2)?;
    Ok(mf)
}

fn expect_rank<C: Scalar>(mf: &MatrixFactorization<C>, k: usize) -> Result<()> {
    let r = cokernel_rank(mf)?;
    if r == k {
        Ok(())
    } else {
        Err(Error::IdentityFails(format!("cokernel rank {r}, expected {k}")))
    }
}

/// `alpha phi1 = phi2 beta`, `beta psi1 = psi2 alpha`, and both `alpha`,
/// `beta` have nonzero constant determinant.
pub fn check_equivalence_pair<C: Scalar>(
    mf1: &MatrixFactorization<C>,
    mf2: &MatrixFactorization<C>,
    alpha: &PolyMatrix<C>,
    beta: &PolyMatrix<C>,
) -> bool {
    let k = mf1.size();
    if mf2.size() != k || [alpha, beta].iter().any(|m| m.rows() != k || m.cols() != k) {
        return false;
    }
    let unit_det = |m: &PolyMatrix<C>| determinant(m).map(|d| d.is_unit()).unwrap_or(false);
    alpha * &mf1.phi == &mf2.phi * beta && beta * &mf1.psi == &mf2.psi * alpha && unit_det(alpha) && unit_det(beta)
}

/// Sufficient test for reducedness: no entry of `phi` or `psi` is a
/// nonzero constant. Conservative — a unit entry reports `false` even when
/// no trivial summand splits off.
pub fn is_reduced<C: Scalar>(mf: &MatrixFactorization<C>) -> bool {
    !mf.phi.entries().iter().chain(mf.psi.entries()).any(Polynomial::is_unit)
}
