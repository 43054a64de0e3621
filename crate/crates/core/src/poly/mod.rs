//! Sparse multivariate polynomials in the entries `x[i,j]` of a generic
//! `n x n` matrix.
//!
//! Terms are kept sorted ascending in graded lexicographic order, with the
//! variables ordered row-major: `x[1,1] < x[1,2] < ... < x[n,n]`. The
//! leading term is therefore the last one. No stored coefficient is zero,
//! so structural equality is polynomial equality.

mod monomial;
mod text;

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

pub use monomial::{Monomial, VarId};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<C> {
    n: usize,
    terms: Vec<(Monomial, C)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

/// Context-checked binary arithmetic.
pub fn poly_arith<C: Scalar>(
    p: &Polynomial<C>,
    q: &Polynomial<C>,
    kind: ArithKind,
) -> Result<Polynomial<C>> {
    match kind {
        ArithKind::Add => p.checked_add(q),
        ArithKind::Sub => p.checked_sub(q),
        ArithKind::Mul => p.checked_mul(q),
    }
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: Vec::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        if c.is_zero() {
            Self::zero(n)
        } else {
            Polynomial { n, terms: vec![(Monomial::one(), c)] }
        }
    }

    pub fn from_int(n: usize, v: i64) -> Self {
        Self::constant(n, C::from_int(v))
    }

    /// The variable `x[row,col]`.
    ///
    /// Panics if the variable is outside the context; use
    /// [`Polynomial::try_var`] for unchecked input.
    pub fn var(n: usize, v: VarId) -> Self {
        Self::try_var(n, v).expect("variable in context")
    }

    pub fn try_var(n: usize, v: VarId) -> Result<Self> {
        if !v.in_context(n) {
            return Err(Error::VarOutOfRange(v, n));
        }
        Ok(Polynomial { n, terms: vec![(Monomial::var(v), C::one())] })
    }

    pub fn x(n: usize, row: usize, col: usize) -> Self {
        Self::var(n, VarId::new(row, col))
    }

    pub fn monomial(n: usize, m: Monomial, c: C) -> Self {
        Self::from_terms(n, std::iter::once((m, c)))
    }

    /// Canonicalizes an arbitrary term list: merges equal monomials and
    /// drops zero coefficients.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            debug_assert!(m.vars().all(|(v, _)| v.in_context(n)));
            match acc.get_mut(&m) {
                Some(e) => *e = e.clone() + c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(n, acc)
    }

    fn from_map(n: usize, acc: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial { n, terms }
    }

    pub fn context_size(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn constant_value(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// A nonzero constant, i.e. a unit of the polynomial ring.
    pub fn is_unit(&self) -> bool {
        self.constant_value().is_some_and(|c| !c.is_zero())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.last()
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    /// The common degree of all terms; `None` if zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.n, other.n))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sgn = |c: &C| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0.clone(), sgn(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        a[i].1.clone() - b[j].1.clone()
                    } else {
                        a[i].1.clone() + b[j].1.clone()
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sgn(c))));
        Polynomial { n: self.n, terms: out }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.n);
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        // the product bound wildly overestimates once terms collide
        let cap = (self.terms.len() * other.terms.len()).min(1 << 16);
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(cap);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&m) {
                    Some(e) => *e = e.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(self.n, acc)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial(&self, v: VarId) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let (dm, e) = m.derive(v)?;
            Some((dm, c.clone() * C::from_int(e as i64)))
        });
        Self::from_terms(self.n, terms)
    }

    /// The involution `x[i,j] -> x[j,i]`.
    pub fn tau(&self) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(m, c)| (m.transpose(), c.clone())))
    }

    /// Exact quotient `self / d`, or [`Error::NotDivisible`].
    ///
    /// Runs the multivariate division algorithm against the leading term
    /// of `d`; when `d` divides `self` the remainder is always zero, so a
    /// non-divisible leading term proves non-divisibility.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        self.check_context(d)?;
        let (lm, lc) = d.leading_term().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero(self.n));
        }
        if let Some(c) = d.constant_value() {
            return Ok(self.scale(&(C::one() / c)));
        }
        let mut rem: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, C)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = lm.divides(&m).ok_or(Error::NotDivisible)?;
            let qc = c / lc.clone();
            // the leading term cancels exactly; subtract the rest of qc*qm*d
            for (dm, dc) in d.terms.iter().rev().skip(1) {
                let tm = qm.mul(dm);
                let tc = qc.clone() * dc.clone();
                match rem.entry(tm) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = e.get().clone() - tc;
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-tc);
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        let q = Polynomial { n: self.n, terms: quot };
        debug_assert!(q.mul_unchecked(d) == *self);
        Ok(q)
    }

    /// Evaluates at a point given as a row-major slice of `n*n` values.
    pub fn eval_dense(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.n * self.n, "point has n*n coordinates");
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.vars() {
                let x = &point[(v.row - 1) * self.n + (v.col - 1)];
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            total = total + t;
        }
        total
    }

    /// Evaluation homomorphism for an assignment covering every occurring
    /// variable.
    pub fn specialize(&self, assignment: &HashMap<VarId, C>) -> Result<C> {
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.vars() {
                let x = assignment.get(&v).ok_or(Error::MissingAssignment(v))?;
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            total = total + t;
        }
        Ok(total)
    }

    /// Partial evaluation at a dense point, returning a constant
    /// polynomial in the same context.
    pub fn specialize_dense(&self, point: &[C]) -> Self {
        Self::constant(self.n, self.eval_dense(point))
    }

    /// Restriction to the line `x = p + t q` (row-major points), as a
    /// polynomial in `t` living in context 1 with `t = x[1,1]`.
    pub fn restrict_to_line(&self, p: &[C], q: &[C]) -> Polynomial<C> {
        let nn = self.n * self.n;
        assert!(p.len() == nn && q.len() == nn, "points have n*n coordinates");
        let mut dense: Vec<C> = vec![C::zero()];
        for (m, c) in &self.terms {
            let mut acc = vec![c.clone()];
            for (v, e) in m.vars() {
                let k = (v.row - 1) * self.n + (v.col - 1);
                for _ in 0..e {
                    let mut next = vec![C::zero(); acc.len() + 1];
                    for (i, a) in acc.iter().enumerate() {
                        next[i] = next[i].clone() + a.clone() * p[k].clone();
                        next[i + 1] = next[i + 1].clone() + a.clone() * q[k].clone();
                    }
                    acc = next;
                }
            }
            if dense.len() < acc.len() {
                dense.resize(acc.len(), C::zero());
            }
            for (i, a) in acc.into_iter().enumerate() {
                dense[i] = dense[i].clone() + a;
            }
        }
        let t = Monomial::var(VarId::new(1, 1));
        Polynomial::from_terms(1, dense.into_iter().enumerate().map(|(i, c)| (t.pow(i as u32), c)))
    }

    /// Variables that occur with nonzero exponent.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self.terms.iter().flat_map(|(m, _)| m.vars().map(|(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }
}

impl<C: Scalar> Neg for Polynomial<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial { n: self.n, terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.clone().neg()
    }
}

// Operator impls panic on mixed contexts; the checked_* methods report
// the mismatch instead.
macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<C: Scalar> $tr<&Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $m(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                self.$checked(rhs).expect("polynomials share a context")
            }
        }
        impl<C: Scalar> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $m(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Scalar> $tr<&Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $m(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                (&self).$m(rhs)
            }
        }
        impl<C: Scalar> $tr<Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $m(self, rhs: Polynomial<C>) -> Polynomial<C> {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational};
    use crate::scalar::ratio;
    use proptest::prelude::*;

    fn x(n: usize, i: usize, j: usize) -> Poly {
        Poly::x(n, i, j)
    }

    fn det2() -> Poly {
        x(2, 1, 1) * x(2, 2, 2) - x(2, 1, 2) * x(2, 2, 1)
    }

    fn det3() -> Poly {
        let mut d = Poly::zero(3);
        for (p, s) in [([1, 2, 3], 1), ([2, 3, 1], 1), ([3, 1, 2], 1), ([1, 3, 2], -1), ([2, 1, 3], -1), ([3, 2, 1], -1)] {
            let t = x(3, 1, p[0]) * x(3, 2, p[1]) * x(3, 3, p[2]);
            d = d + t.scale(&Rational::from_int(s));
        }
        d
    }

    #[test]
    fn additive_identity() {
        assert_eq!(poly_arith(&x(2, 1, 1), &Poly::zero(2), ArithKind::Add).unwrap(), x(2, 1, 1));
    }

    #[test]
    fn difference_of_squares() {
        let p = x(2, 1, 1) + x(2, 1, 2);
        let q = x(2, 1, 1) - x(2, 1, 2);
        let want = x(2, 1, 1).pow(2) - x(2, 1, 2).pow(2);
        assert_eq!(poly_arith(&p, &q, ArithKind::Mul).unwrap(), want);
    }

    #[test]
    fn det2_squared_by_hand() {
        let sq = det2() * det2();
        let want = Poly::parse_in(
            "x[1,1]^2*x[2,2]^2 - 2*x[1,1]*x[1,2]*x[2,1]*x[2,2] + x[1,2]^2*x[2,1]^2",
            2,
        )
        .unwrap();
        assert_eq!(sq, want);
        assert_eq!(sq.homogeneous_degree(), Some(4));
    }

    #[test]
    fn context_mismatch_is_error() {
        assert_eq!(x(2, 1, 1).checked_add(&x(3, 1, 1)), Err(Error::ContextMismatch(2, 3)));
        assert!(x(2, 1, 1).checked_mul(&x(3, 1, 1)).is_err());
    }

    #[test]
    fn partial_of_det() {
        assert_eq!(det2().partial(VarId::new(1, 1)), x(2, 2, 2));
        assert!(x(2, 1, 1).partial(VarId::new(1, 2)).is_zero());
        let d = det3().partial(VarId::new(1, 1)).partial(VarId::new(2, 2));
        assert_eq!(d, x(3, 3, 3));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(x(2, 1, 2).tau(), x(2, 2, 1));
        assert_eq!(det2().tau(), det2());
        assert_eq!(det3().tau(), det3());
    }

    #[test]
    fn exact_division_examples() {
        let p = x(2, 1, 1).pow(2) - x(2, 1, 2).pow(2);
        let d = x(2, 1, 1) + x(2, 1, 2);
        assert_eq!(p.exact_div(&d).unwrap(), x(2, 1, 1) - x(2, 1, 2));
        assert_eq!((det2() * x(2, 1, 1)).exact_div(&det2()).unwrap(), x(2, 1, 1));
        assert_eq!(x(2, 1, 1).exact_div(&x(2, 1, 2)), Err(Error::NotDivisible));
        assert_eq!(x(2, 1, 1).exact_div(&Poly::zero(2)), Err(Error::DivisionByZero));
        // constant divisor
        let half = x(2, 1, 1).exact_div(&Poly::from_int(2, 2)).unwrap();
        assert_eq!(half, x(2, 1, 1).scale(&ratio(1, 2)));
    }

    #[test]
    fn specialization_examples() {
        let mut a = HashMap::new();
        for (i, j, v) in [(1, 1, 1), (1, 2, 2), (2, 1, 3), (2, 2, 4)] {
            a.insert(VarId::new(i, j), Rational::from_int(v));
        }
        assert_eq!(det2().specialize(&a).unwrap(), Rational::from_int(-2));
        // adj entry (1,2) of a 2x2 matrix is -x12
        assert_eq!((-x(2, 1, 2)).specialize(&a).unwrap(), Rational::from_int(-2));
        let id: Vec<Rational> = (0..9).map(|k| Rational::from_int(if k % 4 == 0 { 1 } else { 0 })).collect();
        assert_eq!(det3().eval_dense(&id), Rational::from_int(1));
        a.remove(&VarId::new(2, 2));
        assert_eq!(det2().specialize(&a), Err(Error::MissingAssignment(VarId::new(2, 2))));
    }

    #[test]
    fn homogeneity_flags() {
        assert!(det3().is_homogeneous());
        assert!(!(det3() + x(3, 1, 1)).is_homogeneous());
        assert_eq!((det3() + x(3, 1, 1)).homogeneous_degree(), None);
        assert!(Poly::zero(3).is_homogeneous());
    }

    #[test]
    fn float_scalar_instance() {
        let p = crate::PolyF64::x(2, 1, 1) * crate::PolyF64::x(2, 2, 2);
        assert_eq!(p.eval_dense(&[2.0, 0.0, 0.0, 1.5]), 3.0);
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Poly> {
        let term = (prop::collection::vec((1..=n, 1..=n, 1u32..3), 0..3), -5i64..=5);
        prop::collection::vec(term, 0..5).prop_map(move |ts| {
            Poly::from_terms(
                n,
                ts.into_iter().map(|(vs, c)| {
                    let m = vs.into_iter().fold(Monomial::one(), |m, (i, j, e)| {
                        m.mul(&Monomial::var(VarId::new(i, j)).pow(e))
                    });
                    (m, Rational::from_int(c))
                }),
            )
        })
    }

    fn canonical(p: &Poly) -> bool {
        p.terms().iter().all(|(_, c)| *c != Rational::from_int(0))
            && p.terms().windows(2).all(|w| w[0].0 < w[1].0)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn outputs_are_canonical(p in arb_poly(3), q in arb_poly(3)) {
            prop_assert!(canonical(&(&p + &q)));
            prop_assert!(canonical(&(&p - &q)));
            prop_assert!(canonical(&(&p * &q)));
            prop_assert!(canonical(&p.partial(VarId::new(1, 2))));
            prop_assert!(canonical(&p.tau()));
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn partials_commute(p in arb_poly(3)) {
            for a in 0..9 {
                for b in 0..9 {
                    let u = VarId::new(a / 3 + 1, a % 3 + 1);
                    let v = VarId::new(b / 3 + 1, b % 3 + 1);
                    prop_assert_eq!(p.partial(u).partial(v), p.partial(v).partial(u));
                }
            }
        }

        #[test]
        fn leibniz_rule(p in arb_poly(2), q in arb_poly(2), i in 1usize..=2, j in 1usize..=2) {
            let v = VarId::new(i, j);
            prop_assert_eq!((&p * &q).partial(v), p.partial(v) * &q + &p * q.partial(v));
        }

        #[test]
        fn tau_is_ring_involution(p in arb_poly(3), q in arb_poly(3)) {
            prop_assert_eq!(p.tau().tau(), p.clone());
            prop_assert_eq!((&p * &q).tau(), p.tau() * q.tau());
            prop_assert_eq!((&p + &q).tau(), p.tau() + q.tau());
        }

        #[test]
        fn exact_division_round_trip(p in arb_poly(2), d in arb_poly(2)) {
            prop_assume!(!d.is_zero());
            let prod = &p * &d;
            prop_assert_eq!(prod.exact_div(&d).unwrap(), p.clone());
            if let Ok(q) = p.exact_div(&d) {
                prop_assert_eq!(q * &d, p);
            }
        }

        #[test]
        fn evaluation_is_multiplicative(p in arb_poly(2), q in arb_poly(2), pt in prop::collection::vec(-7i64..=7, 4)) {
            let pt: Vec<Rational> = pt.into_iter().map(Rational::from_int).collect();
            prop_assert_eq!((&p * &q).eval_dense(&pt), p.eval_dense(&pt) * q.eval_dense(&pt));
            prop_assert_eq!((&p + &q).eval_dense(&pt), p.eval_dense(&pt) + q.eval_dense(&pt));
        }

        #[test]
        fn text_round_trip(p in arb_poly(3)) {
            let s = p.to_string();
            prop_assert_eq!(Poly::parse_in(&s, 3).unwrap(), p);
        }
    }
}
