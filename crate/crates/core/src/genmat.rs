//! The generic matrix, determinants, adjugates and complementary minors.
//!
//! `[i1..ik ^| j1..jk](M)` denotes the determinant of `M` with rows
//! `i1..ik` and columns `j1..jk` deleted. Index lists need not be sorted:
//! the value is extended so that it is alternating in both lists, and it
//! vanishes on any repetition. Deleting nothing gives `det M`; deleting
//! everything gives 1.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::poly::{Polynomial, VarId};
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorSign {
    Unsigned,
    /// Multiplied by `(-1)^(i1+..+ik+j1+..+jk)`.
    Signed,
}

/// Memoized minors of one square matrix, keyed by the kept row and
/// column sets.
pub struct MinorCache<'a, C> {
    m: &'a PolyMatrix<C>,
    size: usize,
    memo: HashMap<(u64, u64), Polynomial<C>>,
}

impl<'a, C: Scalar> MinorCache<'a, C> {
    pub fn new(m: &'a PolyMatrix<C>) -> Result<Self> {
        let size = m.square_size()?;
        if size > 64 {
            return Err(Error::SizeMismatch(format!("minor cache supports size <= 64, got {size}")));
        }
        Ok(MinorCache { m, size, memo: HashMap::new() })
    }

    fn full_mask(&self) -> u64 {
        if self.size == 64 {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        }
    }

    /// Determinant of the submatrix on the kept rows and columns, by
    /// Laplace expansion along the first kept row.
    pub fn det_kept(&mut self, rows: u64, cols: u64) -> Polynomial<C> {
        debug_assert_eq!(rows.count_ones(), cols.count_ones());
        let n = self.m.context_size();
        if rows == 0 {
            return Polynomial::one(n);
        }
        if let Some(p) = self.memo.get(&(rows, cols)) {
            return p.clone();
        }
        let r = rows.trailing_zeros() as usize;
        let sub_rows = rows & !(1u64 << r);
        let mut acc = Polynomial::zero(n);
        let mut rest = cols;
        let mut pos = 0;
        while rest != 0 {
            let c = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let e = &self.m[(r, c)];
            if !e.is_zero() {
                let sub = self.det_kept(sub_rows, cols & !(1u64 << c));
                let t = e * &sub;
                acc = if pos % 2 == 0 { acc + t } else { acc - t };
            }
            pos += 1;
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }

    pub fn det(&mut self) -> Polynomial<C> {
        let f = self.full_mask();
        self.det_kept(f, f)
    }

    /// `[rows ^| cols]` with 1-based, possibly unsorted index lists.
    pub fn comp_minor(&mut self, rows: &[usize], cols: &[usize], sign: MinorSign) -> Result<Polynomial<C>> {
        if rows.len() != cols.len() {
            return Err(Error::SizeMismatch(format!(
                "index lists of length {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        for &i in rows.iter().chain(cols) {
            if i == 0 || i > self.size {
                return Err(Error::IndexOutOfRange { index: i, size: self.size });
            }
        }
        let n = self.m.context_size();
        let (Some(ps), Some(pc)) = (permutation_sign(rows), permutation_sign(cols)) else {
            return Ok(Polynomial::zero(n));
        };
        let mut s = ps * pc;
        if sign == MinorSign::Signed && (rows.iter().sum::<usize>() + cols.iter().sum::<usize>()) % 2 == 1 {
            s = -s;
        }
        let del = |l: &[usize]| l.iter().fold(0u64, |m, &i| m | (1u64 << (i - 1)));
        let full = self.full_mask();
        let d = self.det_kept(full & !del(rows), full & !del(cols));
        Ok(if s < 0 { -d } else { d })
    }
}

/// Sign of the permutation sorting `l`; `None` on a repeated entry.
fn permutation_sign(l: &[usize]) -> Option<i32> {
    let mut s = 1;
    for a in 0..l.len() {
        for b in a + 1..l.len() {
            if l[a] == l[b] {
                return None;
            }
            if l[a] > l[b] {
                s = -s;
            }
        }
    }
    Some(s)
}

/// `[rows ^| cols](m)`; see the module docs for the conventions.
pub fn comp_minor<C: Scalar>(rows: &[usize], cols: &[usize], m: &PolyMatrix<C>, sign: MinorSign) -> Result<Polynomial<C>> {
    MinorCache::new(m)?.comp_minor(rows, cols, sign)
}

/// Fraction-free (Bareiss) determinant.
pub fn det_bareiss<C: Scalar>(m: &PolyMatrix<C>) -> Result<Polynomial<C>> {
    let k = m.square_size()?;
    let n = m.context_size();
    if k == 0 {
        return Ok(Polynomial::one(n));
    }
    let mut a: Vec<Vec<Polynomial<C>>> = (0..k).map(|i| m.row_vec(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = Polynomial::one(n);
    for p in 0..k - 1 {
        let Some(piv) = (p..k).find(|&r| !a[r][p].is_zero()) else {
            return Ok(Polynomial::zero(n));
        };
        if piv != p {
            a.swap(piv, p);
            negate = !negate;
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let num = &a[p][p] * &a[i][j] - &a[i][p] * &a[p][j];
                a[i][j] = num.exact_div(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = a[p][p].clone();
    }
    let d = a[k - 1][k - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Cofactor (Laplace) determinant with memoized minors.
pub fn det_cofactor<C: Scalar>(m: &PolyMatrix<C>) -> Result<Polynomial<C>> {
    Ok(MinorCache::new(m)?.det())
}

/// Exact determinant. Uses Bareiss elimination; small matrices are
/// cross-checked against cofactor expansion in debug builds.
pub fn determinant<C: Scalar>(m: &PolyMatrix<C>) -> Result<Polynomial<C>> {
    let d = det_bareiss(m)?;
    #[cfg(debug_assertions)]
    if m.rows() <= 4 {
        debug_assert_eq!(d, det_cofactor(m)?, "Bareiss and cofactor determinants disagree");
    }
    Ok(d)
}

/// `adj(M)_{ij} = (-1)^(i+j) [j ^| i](M)`.
pub fn adjugate<C: Scalar>(m: &PolyMatrix<C>) -> Result<PolyMatrix<C>> {
    let k = m.square_size()?;
    let mut cache = MinorCache::new(m)?;
    let mut out = PolyMatrix::zeros(m.context_size(), k, k);
    for i in 0..k {
        for j in 0..k {
            out[(i, j)] = cache.comp_minor(&[j + 1], &[i + 1], MinorSign::Signed)?;
        }
    }
    Ok(out)
}

/// Inverse of a matrix whose determinant is a nonzero constant.
pub fn inverse<C: Scalar>(m: &PolyMatrix<C>) -> Result<PolyMatrix<C>> {
    let d = determinant(m)?;
    match d.constant_value() {
        Some(c) if !c.is_zero() => Ok(adjugate(m)?.scale(&(C::one() / c))),
        _ => Err(Error::NotInvertible(format!("determinant {d} is not a nonzero constant"))),
    }
}

/// The generic matrix together with its determinant and adjugate.
#[derive(Clone, Debug)]
pub struct GenericContext<C> {
    pub n: usize,
    pub x: PolyMatrix<C>,
    pub det: Polynomial<C>,
    pub adj: PolyMatrix<C>,
}

impl<C: Scalar> GenericContext<C> {
    /// Builds the context and checks `X adj(X) = adj(X) X = det(X) id`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySize);
        }
        let x = PolyMatrix::generic(n);
        let mut cache = MinorCache::new(&x)?;
        let det = cache.det();
        drop(cache);
        let adj = adjugate(&x)?;
        let scalar = PolyMatrix::identity(n, n).scale_poly(&det);
        if &x * &adj != scalar || &adj * &x != scalar {
            return Err(Error::IdentityFails("X adj(X) = det(X) id".into()));
        }
        Ok(GenericContext { n, x, det, adj })
    }

    pub fn xt(&self) -> PolyMatrix<C> {
        self.x.transpose()
    }

    pub fn det_id(&self) -> PolyMatrix<C> {
        PolyMatrix::identity(self.n, self.n).scale_poly(&self.det)
    }

    pub fn var(&self, i: usize, j: usize) -> VarId {
        VarId::new(i, j)
    }
}

/// Verifies the derivative/minor identities of the generic determinant:
/// `d_ij det = adj_ji`, both Euler identities, and that every `k`-fold
/// partial derivative equals the signed complementary minor.
pub fn derivative_minor_suite<C: Scalar>(ctx: &GenericContext<C>, k: usize) -> Report {
    let n = ctx.n;
    let mut rep = Report::new();
    let vars: Vec<VarId> = (1..=n).flat_map(|i| (1..=n).map(move |j| VarId::new(i, j))).collect();
    let first: HashMap<VarId, Polynomial<C>> = vars.iter().map(|&v| (v, ctx.det.partial(v))).collect();

    let ok_adj = vars.iter().all(|&v| first[&v] == ctx.adj[(v.col - 1, v.row - 1)]);
    rep.check("partial_equals_adjugate", ok_adj);

    let mut ok_rows = true;
    let mut ok_cols = true;
    for i in 1..=n {
        for j in 1..=n {
            let want = if i == j { ctx.det.clone() } else { Polynomial::zero(n) };
            let mut by_rows = Polynomial::zero(n);
            let mut by_cols = Polynomial::zero(n);
            for nu in 1..=n {
                by_rows = by_rows + Polynomial::x(n, i, nu) * &first[&VarId::new(j, nu)];
                by_cols = by_cols + Polynomial::x(n, nu, i) * &first[&VarId::new(nu, j)];
            }
            ok_rows &= by_rows == want;
            ok_cols &= by_cols == want;
        }
    }
    rep.check("euler_rows", ok_rows);
    rep.check("euler_cols", ok_cols);

    let mut cache = MinorCache::new(&ctx.x).expect("generic matrix is square");
    let mut ok = true;
    let mut stack: Vec<VarId> = Vec::with_capacity(k);
    walk_partials(&ctx.det, k, &vars, &mut stack, &mut |p, path| {
        if path.len() > n {
            ok &= p.is_zero();
        } else {
            let rows: Vec<usize> = path.iter().map(|v| v.row).collect();
            let cols: Vec<usize> = path.iter().map(|v| v.col).collect();
            let m = cache.comp_minor(&rows, &cols, MinorSign::Signed).expect("indices in range");
            ok &= *p == m;
        }
    });
    rep.check(format!("partials_order_{k}"), ok);
    rep
}

fn walk_partials<C: Scalar>(
    p: &Polynomial<C>,
    depth: usize,
    vars: &[VarId],
    path: &mut Vec<VarId>,
    visit: &mut impl FnMut(&Polynomial<C>, &[VarId]),
) {
    if path.len() == depth {
        visit(p, path);
        return;
    }
    for &v in vars {
        path.push(v);
        walk_partials(&p.partial(v), depth, vars, path, visit);
        path.pop();
    }
}
