//! Exact symbolic toolkit for the adjugate of the generic determinant.
pub mod companion;
pub mod error;
pub mod factorize;
pub mod genmat;
pub mod homology;
pub mod json;
pub mod matfact;
pub mod matrix;
pub mod poly;
pub mod random;
pub mod report;
pub mod scalar;

pub use companion::{AlternatingMatrix, BilinearData};
pub use error::{Error, Result};
pub use factorize::{AdjointFactorization, Equivalence, NormalizedFactorization};
pub use homology::{GradedComplex, GradedModule, HilbertSeries, Shape};
pub use genmat::{GenericContext, MinorCache, MinorSign};
pub use matfact::{CanonicalMfs, MatrixFactorization, MfLabel, RankMethod};
pub use matrix::{GradeTag, PolyMatrix};
pub use poly::{poly_arith, ArithKind, Monomial, Polynomial, VarId};
pub use report::{Check, Report, Status};
pub use scalar::{ratio, Scalar};

pub type Rational = num_rational::BigRational;
pub type Poly = Polynomial<Rational>;
pub type PolyF64 = Polynomial<f64>;
pub type PolyMat = PolyMatrix<Rational>;
pub type Context = GenericContext<Rational>;
pub type Alternating = AlternatingMatrix<Rational>;
