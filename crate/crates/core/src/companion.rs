//! Companion matrices of alternating matrices against an adjugate.
//!
//! For an alternating `A` and a square `U`, the right companion `B_A` is
//! the alternating matrix with `A adj(U) = U^T B_A`, given entrywise by
//!
//! ```text
//! b_rs = sum_{k<l} a_kl (-1)^(r+s+k+l) [rs ^| kl](U)
//! ```
//!
//! A second alternating `A'` yields the scalar `r` and matrix `C` with
//! `B_A A' = r id + C U^T` and `A adj(U) A' = r U^T + U^T C U^T`.
//!
//! Every public constructor here verifies the identity it promises before
//! returning; the `*_formula` variants skip verification.

use crate::error::{Error, Result};
use crate::genmat::{adjugate, determinant, GenericContext, MinorCache, MinorSign};
use crate::matrix::PolyMatrix;
use crate::poly::{Polynomial, VarId};
use crate::report::Report;
use crate::scalar::Scalar;

/// A square matrix with `A^T = -A` and zero diagonal.
#[derive(Clone, Debug)]
pub struct AlternatingMatrix<C>(PolyMatrix<C>);

impl<C: Scalar> PartialEq for AlternatingMatrix<C> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl<C: Scalar> AlternatingMatrix<C> {
    pub fn new(m: PolyMatrix<C>) -> Result<Self> {
        m.square_size()?;
        if m.is_alternating() {
            Ok(AlternatingMatrix(m))
        } else {
            Err(Error::NotAlternating)
        }
    }

    pub fn zero(n: usize, size: usize) -> Self {
        AlternatingMatrix(PolyMatrix::zeros(n, size, size))
    }

    /// Alternating matrix with the given strictly-upper entries `(k, l, a_kl)`,
    /// 1-based.
    pub fn from_upper(n: usize, size: usize, entries: &[(usize, usize, Polynomial<C>)]) -> Result<Self> {
        let mut m = PolyMatrix::zeros(n, size, size);
        for (k, l, a) in entries {
            if !(1..=size).contains(k) || !(1..=size).contains(l) || k >= l {
                return Err(Error::SizeMismatch(format!("({k},{l}) is not strictly upper")));
            }
            m[(k - 1, l - 1)] = a.clone();
            m[(l - 1, k - 1)] = -a;
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &PolyMatrix<C> {
        &self.0
    }

    pub fn into_matrix(self) -> PolyMatrix<C> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn tau(&self) -> Self {
        AlternatingMatrix(self.0.tau())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(AlternatingMatrix(self.0.checked_add(&other.0)?))
    }

    pub fn scale(&self, c: &C) -> Self {
        AlternatingMatrix(self.0.scale(c))
    }

    fn entry(&self, k: usize, l: usize) -> &Polynomial<C> {
        &self.0[(k - 1, l - 1)]
    }
}

fn check_sizes<C: Scalar>(a: &AlternatingMatrix<C>, u: &PolyMatrix<C>) -> Result<usize> {
    let n = u.square_size()?;
    if a.size() != n {
        return Err(Error::SizeMismatch(format!("alternating matrix of size {} against {n}", a.size())));
    }
    if a.0.context_size() != u.context_size() {
        return Err(Error::ContextMismatch(a.0.context_size(), u.context_size()));
    }
    Ok(n)
}

fn ensure(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::IdentityFails(what.to_string()))
    }
}

/// `B_A` by the explicit minor sum, without verification.
pub fn companion_formula<C: Scalar>(a: &AlternatingMatrix<C>, u: &PolyMatrix<C>) -> Result<PolyMatrix<C>> {
    let n = check_sizes(a, u)?;
    let ctx = u.context_size();
    let mut cache = MinorCache::new(u)?;
    let mut b = PolyMatrix::zeros(ctx, n, n);
    for r in 1..=n {
        for s in 1..=n {
            let mut acc = Polynomial::zero(ctx);
            for k in 1..=n {
                for l in k + 1..=n {
                    let akl = a.entry(k, l);
                    if akl.is_zero() {
                        continue;
                    }
                    let m = cache.comp_minor(&[r, s], &[k, l], MinorSign::Signed)?;
                    if !m.is_zero() {
                        acc = acc + akl * &m;
                    }
                }
            }
            b[(r - 1, s - 1)] = acc;
        }
    }
    Ok(b)
}

/// The right companion `B_A`, verified alternating and to satisfy
/// `A adj(U) = U^T B_A`.
pub fn companion_right<C: Scalar>(a: &AlternatingMatrix<C>, u: &PolyMatrix<C>) -> Result<PolyMatrix<C>> {
    let b = companion_formula(a, u)?;
    ensure(b.is_alternating(), "B_A alternating")?;
    let adj = adjugate(u)?;
    ensure(&a.0 * &adj == &u.transpose() * &b, "A adj(U) = U^T B_A")?;
    Ok(b)
}

/// Independent route to `B_A`: `adj(U)^T A adj(U) / det(U)`.
pub fn companion_oracle<C: Scalar>(a: &AlternatingMatrix<C>, u: &PolyMatrix<C>) -> Result<PolyMatrix<C>> {
    check_sizes(a, u)?;
    let d = determinant(u)?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let adj = adjugate(u)?;
    let num = &(&adj.transpose() * &a.0) * &adj;
    divide_entries(&num, &d)
}

fn divide_entries<C: Scalar>(m: &PolyMatrix<C>, d: &Polynomial<C>) -> Result<PolyMatrix<C>> {
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(i, j)] = m[(i, j)].exact_div(d)?;
        }
    }
    Ok(out)
}

/// The left companion `_A B` with `adj(U) A = _A B U^T`.
///
/// Transposing `A adj(U^T) = U B_A(U^T)` shows `_A B = B_A(U^T)`, so it is
/// computed by the minor sum against `U^T`; this stays valid when `det U`
/// is a zerodivisor.
pub fn companion_left<C: Scalar>(a: &AlternatingMatrix<C>, u: &PolyMatrix<C>) -> Result<PolyMatrix<C>> {
    let b = companion_formula(a, &u.transpose())?;
    ensure(b.is_alternating(), "_A B alternating")?;
    let adj = adjugate(u)?;
    ensure(&adj * &a.0 == &b * &u.transpose(), "adj(U) A = _A B U^T")?;
    Ok(b)
}

/// `adj(U) A adj(U)^T / det(U)`.
pub fn companion_left_oracle<C: Scalar>(a: &AlternatingMatrix<C>, u: &PolyMatrix<C>) -> Result<PolyMatrix<C>> {
    check_sizes(a, u)?;
    let d = determinant(u)?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let adj = adjugate(u)?;
    let num = &(&adj * &a.0) * &adj.transpose();
    divide_entries(&num, &d)
}

/// `tau(B_{tau(A)})` over the generic matrix.
pub fn companion_left_tau<C: Scalar>(ctx: &GenericContext<C>, a: &AlternatingMatrix<C>) -> Result<PolyMatrix<C>> {
    Ok(companion_formula(&a.tau(), &ctx.x)?.tau())
}

/// The pair `(r, C)` attached to `(A, A', U)`.
#[derive(Clone, Debug)]
pub struct BilinearData<C> {
    pub r: Polynomial<C>,
    pub c: PolyMatrix<C>,
}

impl<C: Scalar> PartialEq for BilinearData<C> {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.c == other.c
    }
}

/// `r` and `C` by their minor sums, without verification. The sums run
/// over ordered pairs `k<l`, `u<v` with `w, m` free, as displayed.
pub fn bilinear_formula<C: Scalar>(
    a: &AlternatingMatrix<C>,
    a2: &AlternatingMatrix<C>,
    u: &PolyMatrix<C>,
) -> Result<BilinearData<C>> {
    let n = check_sizes(a, u)?;
    check_sizes(a2, u)?;
    let ctx = u.context_size();
    let mut cache = MinorCache::new(u)?;
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|k| (k + 1..=n).map(move |l| (k, l))).collect();

    let mut r = Polynomial::zero(ctx);
    for &(k, l) in &pairs {
        let akl = a.entry(k, l);
        if akl.is_zero() {
            continue;
        }
        for &(p, q) in &pairs {
            let apq = a2.entry(p, q);
            if apq.is_zero() {
                continue;
            }
            let m = cache.comp_minor(&[p, q], &[k, l], MinorSign::Signed)?;
            r = r - &(akl * &m) * apq;
        }
    }

    let mut c = PolyMatrix::zeros(ctx, n, n);
    for w in 1..=n {
        for m in 1..=n {
            let mut acc = Polynomial::zero(ctx);
            for &(k, l) in &pairs {
                let akl = a.entry(k, l);
                if akl.is_zero() {
                    continue;
                }
                for &(p, q) in &pairs {
                    let apq = a2.entry(p, q);
                    if apq.is_zero() {
                        continue;
                    }
                    let minor = cache.comp_minor(&[p, q, w], &[k, l, m], MinorSign::Signed)?;
                    if !minor.is_zero() {
                        acc = acc + &(akl * &minor) * apq;
                    }
                }
            }
            c[(w - 1, m - 1)] = acc;
        }
    }
    Ok(BilinearData { r, c })
}

/// `(r, C)` verified against `B_A A' = r id + C U^T`,
/// `A _{A'}B = r id + U^T C` and `A adj(U) A' = r U^T + U^T C U^T`.
pub fn bilinear<C: Scalar>(
    a: &AlternatingMatrix<C>,
    a2: &AlternatingMatrix<C>,
    u: &PolyMatrix<C>,
) -> Result<BilinearData<C>> {
    let data = bilinear_formula(a, a2, u)?;
    let n = u.rows();
    let ctx = u.context_size();
    let r_id = PolyMatrix::identity(ctx, n).scale_poly(&data.r);
    let ut = u.transpose();
    let b = companion_formula(a, u)?;
    ensure(&b * &a2.0 == &r_id + &(&data.c * &ut), "B_A A' = r id + C U^T")?;
    let left2 = companion_formula(a2, &ut)?;
    ensure(&a.0 * &left2 == &r_id + &(&ut * &data.c), "A _{A'}B = r id + U^T C")?;
    let sandwich = &(&a.0 * &adjugate(u)?) * &a2.0;
    let rhs = &ut.scale_poly(&data.r) + &(&(&ut * &data.c) * &ut);
    ensure(sandwich == rhs, "A adj(U) A' = r U^T + U^T C U^T")?;
    Ok(data)
}

/// `tr(B_A A') = 2r` and `tr(C U^T) = (2 - n) r`.
pub fn half_trace_check<C: Scalar>(
    data: &BilinearData<C>,
    b_a: &PolyMatrix<C>,
    a2: &AlternatingMatrix<C>,
    u: &PolyMatrix<C>,
) -> Report {
    let mut rep = Report::new();
    let n = u.rows() as i64;
    let t1 = (b_a * &a2.0).trace().expect("square");
    rep.check("trace(B_A A') = 2r", t1 == data.r.scale(&C::from_int(2)));
    let t2 = (&data.c * &u.transpose()).trace().expect("square");
    rep.check("trace(C U^T) = (2-n) r", t2 == data.r.scale(&C::from_int(2 - n)));
    rep
}

/// The companion identities used for the presentation of `Hom(M, L^v)`
/// and for the extension module:
/// `B_{X^T W X} = W det X`, `X^T B_W X = W det X`, and
/// `B_{U X - X^T U^T} = adj(X)^T U - U^T adj(X)`.
pub fn special_companions<C: Scalar>(ctx: &GenericContext<C>, w: &AlternatingMatrix<C>, u: &PolyMatrix<C>) -> Report {
    let mut rep = Report::new();
    let x = &ctx.x;
    let xt = ctx.xt();
    let wdet = w.0.scale_poly(&ctx.det);

    let xtwx = AlternatingMatrix::new(&(&xt * &w.0) * x);
    let a = xtwx.and_then(|m| companion_formula(&m, x));
    rep.check_with("B_{X^T W X} = W det X", matches!(&a, Ok(b) if *b == wdet), err_text(&a));

    let b = companion_formula(w, x).map(|bw| &(&xt * &bw) * x);
    rep.check_with("X^T B_W X = W det X", matches!(&b, Ok(m) if *m == wdet), err_text(&b));

    let alt = AlternatingMatrix::new(&(u * x) - &(&xt * &u.transpose()));
    let c = alt.and_then(|m| companion_formula(&m, x));
    let want = &(&ctx.adj.transpose() * u) - &(&u.transpose() * &ctx.adj);
    rep.check_with("B_{UX - X^T U^T} = adj(X)^T U - U^T adj(X)", matches!(&c, Ok(m) if *m == want), err_text(&c));
    rep
}

fn err_text<T>(r: &Result<T>) -> String {
    r.as_ref().err().map(ToString::to_string).unwrap_or_default()
}

/// `V = -sum u_ij d_ij(adj X)`, verified to satisfy
/// `U adj(X) - X V = tr(U adj(X)) id`.
pub fn ile_correction<C: Scalar>(ctx: &GenericContext<C>, u: &PolyMatrix<C>) -> Result<PolyMatrix<C>> {
    let n = ctx.n;
    if u.square_size()? != n {
        return Err(Error::SizeMismatch(format!("U must be {n}x{n}")));
    }
    let mut v = PolyMatrix::zeros(n, n, n);
    for i in 1..=n {
        for j in 1..=n {
            let uij = &u[(i - 1, j - 1)];
            if !uij.is_zero() {
                v = &v - &ctx.adj.partial(VarId::new(i, j)).scale_poly(uij);
            }
        }
    }
    let uadj = u * &ctx.adj;
    let tr = uadj.trace()?;
    ensure(&uadj - &(&ctx.x * &v) == PolyMatrix::identity(n, n).scale_poly(&tr), "U adj(X) - X V = tr(U adj(X)) id")?;
    Ok(v)
}

/// The quadratic form `r(tau(A), A)`. Also verifies, for the pair
/// `(tau(A), A)`, both `B_{tau A} A = r id + C X^T` and
/// `A B_{tau A} = r id + X C^T`.
pub fn quadratic_form<C: Scalar>(ctx: &GenericContext<C>, a: &AlternatingMatrix<C>) -> Result<Polynomial<C>> {
    let first = a.tau();
    let data = bilinear_formula(&first, a, &ctx.x)?;
    let rep = yoneda_identities(ctx, &first, a, &data);
    ensure(rep.passed(), "Yoneda representative identities")?;
    Ok(data.r)
}

/// `B_A A' = r id + C X^T` and `A' B_A = r id + X C^T` for given `(r, C)`.
pub fn yoneda_identities<C: Scalar>(
    ctx: &GenericContext<C>,
    a: &AlternatingMatrix<C>,
    a2: &AlternatingMatrix<C>,
    data: &BilinearData<C>,
) -> Report {
    let mut rep = Report::new();
    let n = ctx.n;
    let r_id = PolyMatrix::identity(n, n).scale_poly(&data.r);
    match companion_formula(a, &ctx.x) {
        Ok(b) => {
            rep.check("B_A A' = r id + C X^T", &b * &a2.0 == &r_id + &(&data.c * &ctx.xt()));
            rep.check("A' B_A = r id + X C^T", &a2.0 * &b == &r_id + &(&ctx.x * &data.c.transpose()));
        }
        Err(e) => {
            rep.check_with("B_A", false, e.to_string());
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::Rng;
    use crate::{Poly, PolyMat, Rational};

    fn ctx(n: usize) -> GenericContext<Rational> {
        GenericContext::new(n).unwrap()
    }

    fn hyp2(n: usize, c: i64) -> AlternatingMatrix<Rational> {
        AlternatingMatrix::from_upper(n, 2, &[(1, 2, Poly::from_int(n, c))]).unwrap()
    }

    #[test]
    fn alternating_validation() {
        assert_eq!(AlternatingMatrix::new(PolyMat::from_ints(2, &[&[1, 0], &[0, -1]])), Err(Error::NotAlternating));
        assert!(AlternatingMatrix::new(PolyMat::zeros(2, 2, 3)).is_err());
        assert!(AlternatingMatrix::<Rational>::from_upper(2, 2, &[(2, 1, Poly::one(2))]).is_err());
    }

    #[test]
    fn right_companion_examples() {
        let c = ctx(2);
        assert!(companion_right(&AlternatingMatrix::zero(2, 2), &c.x).unwrap().is_zero());
        let a = hyp2(2, 1);
        assert_eq!(&companion_right(&a, &c.x).unwrap(), a.matrix());
        let a5 = hyp2(2, 5);
        let u = PolyMat::from_ints(2, &[&[1, 2], &[3, 4]]);
        let b = companion_right(&a5, &u).unwrap();
        assert_eq!(&b, a5.matrix());
        let lhs = a5.matrix() * &adjugate(&u).unwrap();
        assert_eq!(lhs, PolyMat::from_ints(2, &[&[-15, 5], &[-20, 10]]));
        assert_eq!(lhs, &u.transpose() * &b);
    }

    #[test]
    fn oracle_examples() {
        let c = ctx(2);
        assert_eq!(&companion_oracle(&hyp2(2, 1), &c.x).unwrap(), hyp2(2, 1).matrix());
        assert!(companion_oracle(&AlternatingMatrix::zero(2, 2), &c.x).unwrap().is_zero());
        let c3 = ctx(3);
        let mut rng = Rng::new(11);
        for _ in 0..3 {
            let a = rng.alternating(3, 3);
            assert_eq!(companion_oracle(&a, &c3.x).unwrap(), companion_right(&a, &c3.x).unwrap());
        }
        let singular = PolyMat::from_ints(2, &[&[1, 2], &[2, 4]]);
        assert_eq!(companion_oracle(&hyp2(2, 1), &singular), Err(Error::DivisionByZero));
    }

    #[test]
    fn left_companion_examples() {
        let c = ctx(2);
        assert!(companion_left(&AlternatingMatrix::zero(2, 2), &c.x).unwrap().is_zero());
        assert_eq!(&companion_left(&hyp2(2, 1), &c.x).unwrap(), hyp2(2, 1).matrix());
        let c3 = ctx(3);
        let mut rng = Rng::new(5);
        let a = rng.alternating_affine(3);
        let left = companion_left(&a, &c3.x).unwrap();
        assert_eq!(left, companion_left_tau(&c3, &a).unwrap());
        assert_eq!(left, companion_left_oracle(&a, &c3.x).unwrap());
        // singular U still has a left companion
        let s = PolyMat::from_ints(3, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert!(companion_left(&rng.alternating(3, 3), &s).is_ok());
    }

    #[test]
    fn size_mismatch() {
        let c = ctx(3);
        assert!(matches!(companion_right(&hyp2(3, 1), &c.x), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn two_by_two_bilinear_identity() {
        // a, b as distinct constants
        let c = ctx(2);
        let (a, b) = (3, -7);
        let data = bilinear(&hyp2(2, a), &hyp2(2, b), &c.x).unwrap();
        assert_eq!(data.r, Poly::from_int(2, -a * b));
        assert!(data.c.is_zero());
        let sandwich = &(hyp2(2, a).matrix() * &c.adj) * hyp2(2, b).matrix();
        assert_eq!(sandwich, c.xt().scale(&Rational::from_int(-a * b)));
        let ba = companion_right(&hyp2(2, a), &c.x).unwrap();
        let rep = half_trace_check(&data, &ba, &hyp2(2, b), &c.x);
        assert!(rep.passed());
        assert_eq!((&ba * hyp2(2, b).matrix()).trace().unwrap(), Poly::from_int(2, -2 * a * b));
    }

    #[test]
    fn bilinear_zero() {
        let c = ctx(3);
        let z = AlternatingMatrix::zero(3, 3);
        let data = bilinear(&z, &Rng::new(1).alternating(3, 3), &c.x).unwrap();
        assert!(data.r.is_zero() && data.c.is_zero());
    }

    // Brute-force oracle: partial derivatives of det X stand in for the
    // signed minors, over all k<l, u<v, w, m.
    fn brute_bilinear(c: &GenericContext<Rational>, a: &PolyMat, a2: &PolyMat) -> (Poly, PolyMat) {
        let n = c.n;
        let d = |i: usize, j: usize, p: &Poly| p.partial(VarId::new(i, j));
        let mut r = Poly::zero(n);
        let mut cm = PolyMat::zeros(n, n, n);
        for k in 1..=n {
            for l in k + 1..=n {
                for u in 1..=n {
                    for v in u + 1..=n {
                        let coef = &a[(k - 1, l - 1)] * &a2[(u - 1, v - 1)];
                        let second = d(u, k, &d(v, l, &c.det));
                        r = r - &coef * &second;
                        for w in 1..=n {
                            for m in 1..=n {
                                let third = d(w, m, &second);
                                cm[(w - 1, m - 1)] = &cm[(w - 1, m - 1)] + &(&coef * &third);
                            }
                        }
                    }
                }
            }
        }
        (r, cm)
    }

    #[test]
    fn bilinear_against_brute_force() {
        let c = ctx(3);
        let a = AlternatingMatrix::from_upper(3, 3, &[(1, 2, Poly::one(3))]).unwrap();
        let data = bilinear(&a, &a, &c.x).unwrap();
        let (r, cm) = brute_bilinear(&c, a.matrix(), a.matrix());
        assert_eq!(data.r, r);
        assert_eq!(data.c, cm);
        assert_eq!(data.r, -Poly::x(3, 3, 3));
        let mut rng = Rng::new(3);
        let c4 = ctx(4);
        let (a, b) = (rng.alternating(4, 4), rng.alternating(4, 4));
        let data = bilinear(&a, &b, &c4.x).unwrap();
        assert_eq!((data.r, data.c), brute_bilinear(&c4, a.matrix(), b.matrix()));
    }

    #[test]
    fn half_trace_random_n4() {
        let c = ctx(4);
        let mut rng = Rng::new(9);
        let (a, b) = (rng.alternating(4, 4), rng.alternating(4, 4));
        let data = bilinear(&a, &b, &c.x).unwrap();
        let ba = companion_right(&a, &c.x).unwrap();
        assert!(half_trace_check(&data, &ba, &b, &c.x).passed());
        assert!(half_trace_check(&BilinearData { r: Poly::zero(4), c: PolyMat::zeros(4, 4, 4) }, &PolyMat::zeros(4, 4, 4), &b, &c.x).passed());
    }

    #[test]
    fn special_companion_examples() {
        let c = ctx(2);
        assert!(special_companions(&c, &AlternatingMatrix::zero(2, 2), &PolyMat::zeros(2, 2, 2)).passed());
        let u = PolyMat::elementary(2, 2, 1, 1);
        assert!(special_companions(&c, &hyp2(2, 1), &u).passed());
        let alt = AlternatingMatrix::new(&(&u * &c.x) - &(&c.xt() * &u.transpose())).unwrap();
        let want = PolyMat::from_rows(2, vec![vec![Poly::zero(2), Poly::x(2, 1, 2)], vec![-Poly::x(2, 1, 2), Poly::zero(2)]]).unwrap();
        assert_eq!(companion_right(&alt, &c.x).unwrap(), want);
        let c3 = ctx(3);
        let mut rng = Rng::new(21);
        let w = rng.alternating(3, 3);
        let u3 = rng.int_matrix(3, 3, 3, 9);
        assert!(special_companions(&c3, &w, &u3).passed());
    }

    #[test]
    fn ile_examples() {
        let c = ctx(2);
        assert!(ile_correction(&c, &PolyMat::zeros(2, 2, 2)).unwrap().is_zero());
        let v = ile_correction(&c, &PolyMat::elementary(2, 2, 1, 1)).unwrap();
        assert_eq!(v, PolyMat::from_ints(2, &[&[0, 0], &[0, -1]]));
        let c3 = ctx(3);
        let mut rng = Rng::new(4);
        assert!(ile_correction(&c3, &rng.int_matrix(3, 3, 3, 9)).is_ok());
    }

    #[test]
    fn quadratic_form_examples() {
        let c = ctx(2);
        assert!(quadratic_form(&c, &AlternatingMatrix::zero(2, 2)).unwrap().is_zero());
        assert_eq!(quadratic_form(&c, &hyp2(2, 4)).unwrap(), Poly::from_int(2, -16));
        let c3 = ctx(3);
        let a = AlternatingMatrix::from_upper(3, 3, &[(1, 2, Poly::one(3))]).unwrap();
        assert_eq!(quadratic_form(&c3, &a).unwrap(), -Poly::x(3, 3, 3));
        // a variable entry, so tau acts nontrivially
        let a = AlternatingMatrix::from_upper(3, 3, &[(1, 2, Poly::x(3, 1, 3))]).unwrap();
        let q = quadratic_form(&c3, &a).unwrap();
        assert_eq!(q, -(Poly::x(3, 3, 1) * Poly::x(3, 3, 3) * Poly::x(3, 1, 3)));
    }

    #[test]
    fn linearity_in_a() {
        let c = ctx(3);
        let mut rng = Rng::new(8);
        let (a, b) = (rng.alternating(3, 3), rng.alternating(3, 3));
        let sum = companion_formula(&a.add(&b).unwrap(), &c.x).unwrap();
        assert_eq!(sum, companion_formula(&a, &c.x).unwrap() + companion_formula(&b, &c.x).unwrap());
        let k = Rational::from_int(-3);
        assert_eq!(companion_formula(&a.scale(&k), &c.x).unwrap(), companion_formula(&a, &c.x).unwrap().scale(&k));
    }
}
