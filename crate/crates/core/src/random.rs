//! Seeded generators for test inputs.
//!
//! All randomness flows through [`Rng`], a ChaCha8 stream seeded from a
//! `u64`, so a seed fully determines every generated matrix and point.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::companion::AlternatingMatrix;
use crate::genmat::determinant;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

pub struct Rng {
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { inner: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform integer in `[-bound, bound]`.
    pub fn int(&mut self, bound: i64) -> i64 {
        self.inner.gen_range(-bound..=bound)
    }

    pub fn int_matrix<C: Scalar>(&mut self, n: usize, rows: usize, cols: usize, bound: i64) -> PolyMatrix<C> {
        PolyMatrix::from_fn(n, rows, cols, |_, _| Polynomial::from_int(n, self.int(bound)))
    }

    /// Integer matrix with nonzero determinant.
    pub fn int_matrix_nonsingular<C: Scalar>(&mut self, n: usize, size: usize, bound: i64) -> PolyMatrix<C> {
        loop {
            let m = self.int_matrix(n, size, size, bound);
            if !determinant(&m).expect("square").is_zero() {
                return m;
            }
        }
    }

    /// Alternating matrix with integer entries in `[-9, 9]` above the
    /// diagonal, mirrored with opposite sign.
    pub fn alternating<C: Scalar>(&mut self, n: usize, size: usize) -> AlternatingMatrix<C> {
        self.alternating_with(n, size, |r, n| Polynomial::from_int(n, r.int(9)))
    }

    /// Alternating matrix whose entries are integer-affine in the variables:
    /// `c + a*x[i,j] + b*x[k,l]` with random coefficients and variables.
    pub fn alternating_affine<C: Scalar>(&mut self, n: usize) -> AlternatingMatrix<C> {
        self.alternating_with(n, n, |r, n| {
            let mut p = Polynomial::from_int(n, r.int(9));
            for _ in 0..2 {
                let (i, j) = (r.inner.gen_range(1..=n), r.inner.gen_range(1..=n));
                p = p + Polynomial::x(n, i, j).scale(&C::from_int(r.int(3)));
            }
            p
        })
    }

    fn alternating_with<C: Scalar>(
        &mut self,
        n: usize,
        size: usize,
        mut entry: impl FnMut(&mut Self, usize) -> Polynomial<C>,
    ) -> AlternatingMatrix<C> {
        let mut m = PolyMatrix::zeros(n, size, size);
        for i in 0..size {
            for j in i + 1..size {
                let e = entry(self, n);
                m[(j, i)] = -&e;
                m[(i, j)] = e;
            }
        }
        AlternatingMatrix::new(m).expect("constructed alternating")
    }

    /// Constant alternating matrix with nonzero determinant (even size).
    pub fn invertible_alternating<C: Scalar>(&mut self, n: usize, size: usize) -> AlternatingMatrix<C> {
        assert!(size.is_multiple_of(2), "invertible alternating matrices have even size");
        loop {
            let a = self.alternating(n, size);
            if !determinant(a.matrix()).expect("square").is_zero() {
                return a;
            }
        }
    }

    /// Point with integer coordinates in `[-bound, bound]`, one per
    /// variable, row-major.
    pub fn point<C: Scalar>(&mut self, n: usize, bound: i64) -> Vec<C> {
        (0..n * n).map(|_| C::from_int(self.int(bound))).collect()
    }

    pub fn index(&mut self, upto: usize) -> usize {
        self.inner.gen_range(0..upto)
    }
}
