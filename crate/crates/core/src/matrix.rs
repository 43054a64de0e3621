//! Dense matrices of polynomials.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, VarId};
use crate::scalar::Scalar;

/// Generator degrees attached to the rows and columns of a differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradeTag {
    pub row_degrees: Vec<i64>,
    pub col_degrees: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct PolyMatrix<C> {
    rows: usize,
    cols: usize,
    n: usize,
    entries: Vec<Polynomial<C>>,
    pub grade: Option<GradeTag>,
}

// Grade tags are metadata and do not take part in equality.
impl<C: Scalar> PartialEq for PolyMatrix<C> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl<C: Scalar> PolyMatrix<C> {
    pub fn from_fn(n: usize, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial<C>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                debug_assert_eq!(e.context_size(), n);
                entries.push(e);
            }
        }
        PolyMatrix { rows, cols, n, entries, grade: None }
    }

    pub fn from_rows(n: usize, rows: Vec<Vec<Polynomial<C>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::SizeMismatch("ragged rows".into()));
        }
        if let Some(e) = rows.iter().flatten().find(|e| e.context_size() != n) {
            return Err(Error::ContextMismatch(n, e.context_size()));
        }
        Ok(PolyMatrix { rows: r, cols: c, n, entries: rows.into_iter().flatten().collect(), grade: None })
    }

    /// Constant integer matrix.
    pub fn from_ints(n: usize, rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        Self::from_fn(n, rows.len(), c, |i, j| Polynomial::from_int(n, rows[i][j]))
    }

    pub fn zeros(n: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(n, rows, cols, |_, _| Polynomial::zero(n))
    }

    pub fn identity(n: usize, size: usize) -> Self {
        Self::from_fn(n, size, size, |i, j| if i == j { Polynomial::one(n) } else { Polynomial::zero(n) })
    }

    /// The generic matrix `X = (x[i,j])`.
    pub fn generic(n: usize) -> Self {
        Self::from_fn(n, n, n, |i, j| Polynomial::x(n, i + 1, j + 1))
    }

    /// Elementary matrix `E_ij` (1-based) of the given size.
    pub fn elementary(n: usize, size: usize, i: usize, j: usize) -> Self {
        Self::from_fn(n, size, size, |a, b| {
            if a + 1 == i && b + 1 == j {
                Polynomial::one(n)
            } else {
                Polynomial::zero(n)
            }
        })
    }

    /// `[[a, b], [c, d]]` assembled from blocks.
    pub fn block(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::SizeMismatch("block shapes do not tile".into()));
        }
        let (r, k) = (a.rows + c.rows, a.cols + b.cols);
        Ok(Self::from_fn(a.n, r, k, |i, j| {
            let (blk, ii, jj) = match (i < a.rows, j < a.cols) {
                (true, true) => (a, i, j),
                (true, false) => (b, i, j - a.cols),
                (false, true) => (c, i - a.rows, j),
                (false, false) => (d, i - a.rows, j - a.cols),
            };
            blk[(ii, jj)].clone()
        }))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn context_size(&self) -> usize {
        self.n
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn square_size(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare(self.rows, self.cols))
        }
    }

    pub fn entries(&self) -> &[Polynomial<C>] {
        &self.entries
    }

    pub fn row_vec(&self, i: usize) -> &[Polynomial<C>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map(&self, f: impl Fn(&Polynomial<C>) -> Polynomial<C>) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
            grade: self.grade.clone(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Entrywise `x[i,j] -> x[j,i]`.
    pub fn tau(&self) -> Self {
        self.map(Polynomial::tau)
    }

    /// Entrywise partial derivative.
    pub fn partial(&self, v: VarId) -> Self {
        self.map(|p| p.partial(v))
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn scale_poly(&self, p: &Polynomial<C>) -> Self {
        self.map(|e| e * p)
    }

    pub fn specialize_dense(&self, point: &[C]) -> Self {
        self.map(|p| p.specialize_dense(point))
    }

    /// Entrywise restriction to the line `x = p + t q`; the result lives in
    /// context 1.
    pub fn restrict_to_line(&self, p: &[C], q: &[C]) -> Self {
        Self::from_fn(1, self.rows, self.cols, |i, j| self[(i, j)].restrict_to_line(p, q))
    }

    pub fn trace(&self) -> Result<Polynomial<C>> {
        let k = self.square_size()?;
        Ok((0..k).fold(Polynomial::zero(self.n), |acc, i| acc + &self[(i, i)]))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(Polynomial::is_constant)
    }

    /// `M^T = -M` with vanishing diagonal (checked separately).
    pub fn is_alternating(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_zero() && (i + 1..self.cols).all(|j| self[(i, j)] == -&self[(j, i)])
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    fn check_same_shape(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return Err(Error::ContextMismatch(self.n, o.n));
        }
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::SizeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check_same_shape(o)?;
        Ok(Self::from_fn(self.n, self.rows, self.cols, |i, j| &self[(i, j)] + &o[(i, j)]))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.check_same_shape(o)?;
        Ok(Self::from_fn(self.n, self.rows, self.cols, |i, j| &self[(i, j)] - &o[(i, j)]))
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::ContextMismatch(self.n, o.n));
        }
        if self.cols != o.rows {
            return Err(Error::SizeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(Self::from_fn(self.n, self.rows, o.cols, |i, j| {
            let mut acc = Polynomial::zero(self.n);
            for k in 0..self.cols {
                let (a, b) = (&self[(i, k)], &o[(k, j)]);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a * b;
                }
            }
            acc
        }))
    }

    /// Rows of the text form of each entry, for display and JSON.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row_vec(i).iter().map(|p| p.to_string()).collect()).collect()
    }
}

impl<C> Index<(usize, usize)> for PolyMatrix<C> {
    type Output = Polynomial<C>;
    fn index(&self, (i, j): (usize, usize)) -> &Polynomial<C> {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl<C> IndexMut<(usize, usize)> for PolyMatrix<C> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Polynomial<C> {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl<C: Scalar> Neg for &PolyMatrix<C> {
    type Output = PolyMatrix<C>;
    fn neg(self) -> PolyMatrix<C> {
        self.map(|p| -p)
    }
}

impl<C: Scalar> Neg for PolyMatrix<C> {
    type Output = PolyMatrix<C>;
    fn neg(self) -> PolyMatrix<C> {
        -&self
    }
}

// Panicking operators for internal use on shapes known to agree.
macro_rules! matop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<C: Scalar> $tr<&PolyMatrix<C>> for &PolyMatrix<C> {
            type Output = PolyMatrix<C>;
            fn $m(self, rhs: &PolyMatrix<C>) -> PolyMatrix<C> {
                self.$checked(rhs).expect("compatible matrix shapes")
            }
        }
        impl<C: Scalar> $tr<PolyMatrix<C>> for PolyMatrix<C> {
            type Output = PolyMatrix<C>;
            fn $m(self, rhs: PolyMatrix<C>) -> PolyMatrix<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Scalar> $tr<&PolyMatrix<C>> for PolyMatrix<C> {
            type Output = PolyMatrix<C>;
            fn $m(self, rhs: &PolyMatrix<C>) -> PolyMatrix<C> {
                (&self).$m(rhs)
            }
        }
        impl<C: Scalar> $tr<PolyMatrix<C>> for &PolyMatrix<C> {
            type Output = PolyMatrix<C>;
            fn $m(self, rhs: PolyMatrix<C>) -> PolyMatrix<C> {
                self.$m(&rhs)
            }
        }
    };
}

matop!(Add, add, checked_add);
matop!(Sub, sub, checked_sub);
matop!(Mul, mul, checked_mul);

impl<C: Scalar> fmt::Display for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_strings().into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::PolyMat;
    use proptest::prelude::*;

    fn arb_int_matrix(r: usize, c: usize) -> impl Strategy<Value = PolyMat> {
        prop::collection::vec(-5i64..=5, r * c).prop_map(move |v| {
            let rows: Vec<&[i64]> = v.chunks(c).collect();
            PolyMat::from_ints(2, &rows)
        })
    }

    #[test]
    fn shapes_and_errors() {
        let a = PolyMat::from_ints(2, &[&[1, 2, 3], &[4, 5, 6]]);
        let b = PolyMat::identity(2, 2);
        assert!(a.checked_mul(&b).is_err());
        assert_eq!(b.checked_mul(&a).unwrap(), a);
        assert!(a.trace().is_err());
        assert!(PolyMat::from_rows(2, vec![vec![crate::Poly::one(2)], vec![]]).is_err());
        assert!(PolyMat::from_ints(2, &[&[0, 1], &[-1, 0]]).is_alternating());
        assert!(!PolyMat::from_ints(2, &[&[1, 1], &[-1, 0]]).is_alternating());
    }

    #[test]
    fn blocks_tile() {
        let x = PolyMat::generic(2);
        let z = PolyMat::zeros(2, 2, 2);
        let b = PolyMat::block(&x, &z, &z, &x).unwrap();
        assert_eq!(b.rows(), 4);
        assert_eq!(b[(3, 3)], crate::Poly::x(2, 2, 2));
        assert!(b[(0, 3)].is_zero());
    }

    proptest! {
        #[test]
        fn transpose_laws(a in arb_int_matrix(2, 3), b in arb_int_matrix(3, 2)) {
            prop_assert_eq!(a.transpose().transpose(), a.clone());
            prop_assert_eq!((&a * &b).transpose(), b.transpose() * a.transpose());
        }
    }
}
