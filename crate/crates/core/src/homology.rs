//! Graded complexes over the polynomial ring, their Hilbert numerators and
//! generic rank profiles.
//!
//! Free modules are realized as matrix spaces with fixed coordinates:
//!
//! * full `n x n`: all entries, row-major;
//! * alternating: entries `(k, l)` with `k < l`;
//! * symmetric: entries `(k, l)` with `k <= l` (basis `E_kk`, `E_kl + E_lk`);
//! * trace-zero pairs `(P, Q)`: for each of `P`, `Q` the off-diagonal
//!   entries and the diagonal entries `i < n` (basis `E_ii - E_nn`);
//! * scalars: one coordinate.
//!
//! A differential `d_k` maps slot `k+1` to slot `k` and is stored as the
//! polynomial matrix with one column per source coordinate.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::genmat::GenericContext;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::random::Rng;
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Full,
    Alternating,
    Symmetric,
    TraceZeroPair,
    Scalar,
}

/// A free module `shape(size)` generated in a single degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradedModule {
    pub shape: Shape,
    pub size: usize,
    pub degree: u32,
}

impl GradedModule {
    pub fn new(shape: Shape, size: usize, degree: u32) -> Self {
        GradedModule { shape, size, degree }
    }

    pub fn rank(&self) -> usize {
        let n = self.size;
        match self.shape {
            Shape::Full => n * n,
            Shape::Alternating => n * (n - 1) / 2,
            Shape::Symmetric => n * (n + 1) / 2,
            Shape::TraceZeroPair => 2 * n * n - 2,
            Shape::Scalar => 1,
        }
    }

    /// Coordinate positions, as `(row, col)` of the matrix (0-based); for
    /// pairs the second matrix is offset by `n` rows.
    fn positions(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        match self.shape {
            Shape::Full => (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect(),
            Shape::Alternating => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
            Shape::Symmetric => (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect(),
            Shape::TraceZeroPair => {
                let one: Vec<(usize, usize)> =
                    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| !(i == j && i == n - 1)).collect();
                one.iter().copied().chain(one.iter().map(|&(i, j)| (i + n, j))).collect()
            }
            Shape::Scalar => vec![(0, 0)],
        }
    }

    /// The basis element for each coordinate, as a matrix (pairs are
    /// stacked as `2n x n`).
    fn basis<C: Scalar>(&self, ctx_n: usize) -> Vec<PolyMatrix<C>> {
        let n = self.size;
        let one = || Polynomial::one(ctx_n);
        self.positions()
            .into_iter()
            .map(|(i, j)| match self.shape {
                Shape::Scalar => PolyMatrix::identity(ctx_n, 1),
                Shape::Full => unit(ctx_n, n, n, &[(i, j, 1)]),
                Shape::Alternating => unit(ctx_n, n, n, &[(i, j, 1), (j, i, -1)]),
                Shape::Symmetric if i == j => unit(ctx_n, n, n, &[(i, i, 1)]),
                Shape::Symmetric => unit(ctx_n, n, n, &[(i, j, 1), (j, i, 1)]),
                Shape::TraceZeroPair => {
                    let (off, r) = if i >= n { (n, i - n) } else { (0, i) };
                    let mut m = PolyMatrix::zeros(ctx_n, 2 * n, n);
                    m[(off + r, j)] = one();
                    if r == j {
                        m[(off + n - 1, n - 1)] = -one();
                    }
                    m
                }
            })
            .collect()
    }

    /// Coordinates of `m`, checking that `m` lies in the module.
    fn coordinates<C: Scalar>(&self, m: &PolyMatrix<C>) -> Result<Vec<Polynomial<C>>> {
        let coords: Vec<Polynomial<C>> = self.positions().into_iter().map(|(i, j)| m[(i, j)].clone()).collect();
        let rebuilt = self
            .basis::<C>(m.context_size())
            .iter()
            .zip(&coords)
            .fold(PolyMatrix::zeros(m.context_size(), m.rows(), m.cols()), |acc, (b, c)| &acc + &b.scale_poly(c));
        if &rebuilt != m {
            return Err(Error::IdentityFails(format!("image does not lie in the {:?} module", self.shape)));
        }
        Ok(coords)
    }
}

fn unit<C: Scalar>(ctx_n: usize, rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> PolyMatrix<C> {
    let mut m = PolyMatrix::zeros(ctx_n, rows, cols);
    for &(i, j, v) in entries {
        m[(i, j)] = Polynomial::from_int(ctx_n, v);
    }
    m
}

pub type Slot = Vec<GradedModule>;

fn slot_rank(slot: &Slot) -> usize {
    slot.iter().map(GradedModule::rank).sum()
}

#[derive(Clone, Debug)]
pub struct GradedComplex<C> {
    pub name: String,
    pub n: usize,
    pub slots: Vec<Slot>,
    /// `differentials[k]` maps `slots[k+1]` to `slots[k]`.
    pub differentials: Vec<PolyMatrix<C>>,
}

impl<C: Scalar> GradedComplex<C> {
    pub fn slot_ranks(&self) -> Vec<usize> {
        self.slots.iter().map(slot_rank).collect()
    }

    /// Column range of the `j`-th summand of slot `k`.
    pub fn summand_range(&self, k: usize, j: usize) -> std::ops::Range<usize> {
        let start: usize = self.slots[k][..j].iter().map(GradedModule::rank).sum();
        start..start + self.slots[k][j].rank()
    }
}

/// A linear map on one summand: input is the basis matrix, output is one
/// matrix per target summand (`None` for zero).
type SummandMap<'a, C> = Box<dyn Fn(&PolyMatrix<C>) -> Vec<Option<PolyMatrix<C>>> + 'a>;

fn assemble<C: Scalar>(n: usize, target: &Slot, source: &Slot, maps: &[SummandMap<'_, C>]) -> Result<PolyMatrix<C>> {
    let rows = slot_rank(target);
    let cols = slot_rank(source);
    let mut d = PolyMatrix::zeros(n, rows, cols);
    let mut col = 0;
    for (s, f) in source.iter().zip(maps) {
        for b in s.basis::<C>(n) {
            let images = f(&b);
            let mut row = 0;
            for (t, img) in target.iter().zip(images) {
                if let Some(img) = img {
                    for (r, c) in t.coordinates(&img)?.into_iter().enumerate() {
                        d[(row + r, col)] = c;
                    }
                }
                row += t.rank();
            }
            col += 1;
        }
    }
    Ok(d)
}

fn stack<C: Scalar>(p: &PolyMatrix<C>, q: &PolyMatrix<C>) -> PolyMatrix<C> {
    let n = p.rows();
    PolyMatrix::from_fn(p.context_size(), 2 * n, n, |i, j| if i < n { p[(i, j)].clone() } else { q[(i - n, j)].clone() })
}

fn unstack<C: Scalar>(m: &PolyMatrix<C>) -> (PolyMatrix<C>, PolyMatrix<C>) {
    let n = m.cols();
    let ctx = m.context_size();
    (PolyMatrix::from_fn(ctx, n, n, |i, j| m[(i, j)].clone()), PolyMatrix::from_fn(ctx, n, n, |i, j| m[(i + n, j)].clone()))
}

fn trace_free<C: Scalar>(m: &PolyMatrix<C>) -> Result<PolyMatrix<C>> {
    let n = m.rows();
    let t = m.trace()?.scale(&(C::one() / C::from_int(n as i64)));
    Ok(m - &PolyMatrix::identity(m.context_size(), n).scale_poly(&t))
}

/// Slot shapes and generator degrees of the resolution of `E`:
/// `Alt:2 <- Full:3 <- Sym:4 + Sym:n+2 <- Full:n+3 <- Alt:n+4`.
pub fn res_e_shape(n: usize) -> Vec<Slot> {
    let d = n as u32;
    vec![
        vec![GradedModule::new(Shape::Alternating, n, 2)],
        vec![GradedModule::new(Shape::Full, n, 3)],
        vec![GradedModule::new(Shape::Symmetric, n, 4), GradedModule::new(Shape::Symmetric, n, d + 2)],
        vec![GradedModule::new(Shape::Full, n, d + 3)],
        vec![GradedModule::new(Shape::Alternating, n, d + 4)],
    ]
}

/// Slot shapes of the Scandinavian complex:
/// `S:0 <- Full:n-1 <- H:n <- Full:n+1 <- S:2n`.
pub fn scandinavian_shape(n: usize) -> Vec<Slot> {
    let d = n as u32;
    vec![
        vec![GradedModule::new(Shape::Scalar, n, 0)],
        vec![GradedModule::new(Shape::Full, n, d - 1)],
        vec![GradedModule::new(Shape::TraceZeroPair, n, d)],
        vec![GradedModule::new(Shape::Full, n, d + 1)],
        vec![GradedModule::new(Shape::Scalar, n, 2 * d)],
    ]
}

/// The resolution of `E` without the composite check; see [`build_res_e`].
pub fn res_e_unchecked<C: Scalar>(ctx: &GenericContext<C>) -> Result<GradedComplex<C>> {
    let n = ctx.n;
    let (x, xt, adj, adjt) = (&ctx.x, ctx.xt(), &ctx.adj, ctx.adj.transpose());
    let slots = res_e_shape(n);

    // d0(V) = V X - X^T V^T
    let d0 = assemble(n, &slots[0], &slots[1], &[Box::new(|v: &PolyMatrix<C>| vec![Some(&(v * x) - &(&xt * &v.transpose()))])])?;
    // d1(P, S) = X^T P - S adj X
    let d1 = assemble(
        n,
        &slots[1],
        &slots[2],
        &[Box::new(|p: &PolyMatrix<C>| vec![Some(&xt * p)]), Box::new(|s: &PolyMatrix<C>| vec![Some(-&(s * adj))])],
    )?;
    // d2(U) = (U adj X + adj X^T U^T, X^T U + U^T X)
    let d2 = assemble(
        n,
        &slots[2],
        &slots[3],
        &[Box::new(|u: &PolyMatrix<C>| {
            let ut = u.transpose();
            vec![Some(&(u * adj) + &(&adjt * &ut)), Some(&(&xt * u) + &(&ut * x))]
        })],
    )?;
    // d3(W) = W X
    let d3 = assemble(n, &slots[3], &slots[4], &[Box::new(|w: &PolyMatrix<C>| vec![Some(w * x)])])?;
    Ok(GradedComplex { name: "resE".into(), n, slots, differentials: vec![d0, d1, d2, d3] })
}

/// The five-step graded resolution of `E`, verified by [`check_complex`].
pub fn build_res_e<C: Scalar>(ctx: &GenericContext<C>) -> Result<GradedComplex<C>> {
    verified(res_e_unchecked(ctx)?)
}

/// The Scandinavian complex without the composite check.
pub fn scandinavian_unchecked<C: Scalar>(ctx: &GenericContext<C>) -> Result<GradedComplex<C>> {
    let n = ctx.n;
    let (x, adj) = (&ctx.x, &ctx.adj);
    let slots = scandinavian_shape(n);

    // d0(W) = tr(W adj X)
    let d0 = assemble(
        n,
        &slots[0],
        &slots[1],
        &[Box::new(|w: &PolyMatrix<C>| {
            let t = (w * adj).trace().expect("square");
            vec![Some(PolyMatrix::from_fn(n, 1, 1, |_, _| t.clone()))]
        })],
    )?;
    // d1(P, Q) = P X - X Q
    let d1 = assemble(
        n,
        &slots[1],
        &slots[2],
        &[Box::new(|pq: &PolyMatrix<C>| {
            let (p, q) = unstack(pq);
            vec![Some(&(&p * x) - &(x * &q))]
        })],
    )?;
    // d2(V) = trace-free parts of (X V, V X)
    let d2 = assemble(
        n,
        &slots[2],
        &slots[3],
        &[Box::new(|v: &PolyMatrix<C>| {
            let p = trace_free(&(x * v)).expect("square");
            let q = trace_free(&(v * x)).expect("square");
            vec![Some(stack(&p, &q))]
        })],
    )?;
    // d3(1) = adj X
    let d3 = assemble(n, &slots[3], &slots[4], &[Box::new(|one: &PolyMatrix<C>| vec![Some(adj.scale_poly(&one[(0, 0)]))])])?;
    Ok(GradedComplex { name: "scand".into(), n, slots, differentials: vec![d0, d1, d2, d3] })
}

pub fn build_scandinavian<C: Scalar>(ctx: &GenericContext<C>) -> Result<GradedComplex<C>> {
    verified(scandinavian_unchecked(ctx)?)
}

fn verified<C: Scalar>(cx: GradedComplex<C>) -> Result<GradedComplex<C>> {
    let rep = check_complex(&cx);
    let failed = rep.failures().next().map(|c| c.name.clone());
    match failed {
        None => Ok(cx),
        Some(name) => Err(Error::IdentityFails(format!("{}: {name}", cx.name))),
    }
}

/// `d_k d_{k+1} = 0` for each consecutive pair, and homogeneity of every
/// entry of `d_k` of degree (source degree - target degree).
pub fn check_complex<C: Scalar>(cx: &GradedComplex<C>) -> Report {
    let mut rep = Report::new();
    for k in 0..cx.differentials.len() {
        rep.check(format!("d{k} homogeneous"), homogeneous(cx, k));
    }
    for k in 0..cx.differentials.len().saturating_sub(1) {
        let comp = cx.differentials[k].checked_mul(&cx.differentials[k + 1]);
        rep.check_with(format!("d{k}*d{} = 0", k + 1), matches!(&comp, Ok(m) if m.is_zero()), match &comp {
            Err(e) => e.to_string(),
            _ => String::new(),
        });
    }
    rep
}

fn homogeneous<C: Scalar>(cx: &GradedComplex<C>, k: usize) -> bool {
    let d = &cx.differentials[k];
    let mut row = 0;
    for t in &cx.slots[k] {
        let mut col = 0;
        for s in &cx.slots[k + 1] {
            let want = s.degree as i64 - t.degree as i64;
            for i in row..row + t.rank() {
                for j in col..col + s.rank() {
                    let e = &d[(i, j)];
                    if e.is_zero() {
                        continue;
                    }
                    if want < 0 || e.homogeneous_degree() != Some(want as u32) {
                        return false;
                    }
                }
            }
            col += s.rank();
        }
        row += t.rank();
    }
    true
}

/// `numerator / (1 - t)^denominator_power` with integer numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    /// `(degree, coefficient)`, ascending, nonzero coefficients only.
    pub numerator: Vec<(u32, i64)>,
    pub denominator_power: u32,
}

impl HilbertSeries {
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, i64)>, denominator_power: u32) -> Self {
        let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
        for (d, c) in terms {
            *acc.entry(d).or_default() += c;
        }
        HilbertSeries { numerator: acc.into_iter().filter(|&(_, c)| c != 0).collect(), denominator_power }
    }

    fn dense(&self) -> Vec<i64> {
        let len = self.numerator.last().map_or(0, |&(d, _)| d as usize + 1);
        let mut v = vec![0; len];
        for &(d, c) in &self.numerator {
            v[d as usize] = c;
        }
        v
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator.is_empty() {
            return f.write_str("0");
        }
        for (i, &(d, c)) in self.numerator.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (d, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}")?,
            }
            match d {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

/// Numerator `sum_slots (-1)^slot rank t^degree` over `(1 - t)^(n^2)`.
pub fn hilbert_from_slots(n: usize, slots: &[Slot]) -> HilbertSeries {
    let terms = slots.iter().enumerate().flat_map(|(k, slot)| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        slot.iter().map(move |m| (m.degree, sign * m.rank() as i64))
    });
    HilbertSeries::from_terms(terms, (n * n) as u32)
}

pub fn hilbert_from_complex<C: Scalar>(cx: &GradedComplex<C>) -> HilbertSeries {
    hilbert_from_slots(cx.n, &cx.slots)
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

/// `C(n,2) t^2 - n^2 t^3 + C(n+1,2)(t^4 + t^(n+2)) - n^2 t^(n+3) + C(n,2) t^(n+4)`.
pub fn closed_numerator_e(n: usize) -> HilbertSeries {
    let (m, d) = (n as i64, n as u32);
    let (a, s, f) = (binom(m, 2), binom(m + 1, 2), m * m);
    HilbertSeries::from_terms([(2, a), (3, -f), (4, s), (d + 2, s), (d + 3, -f), (d + 4, a)], d * d)
}

/// `1 - n^2 t^(n-1) + (2n^2 - 2) t^n - n^2 t^(n+1) + t^(2n)`.
pub fn closed_numerator_detideal(n: usize) -> HilbertSeries {
    let (m, d) = (n as i64, n as u32);
    HilbertSeries::from_terms([(0, 1), (d - 1, -m * m), (d, 2 * m * m - 2), (d + 1, -m * m), (2 * d, 1)], d * d)
}

/// `(c, e)`: `c` is the order of vanishing of the numerator at `t = 1`,
/// and `e` the value of `numerator / (1 - t)^c` there.
pub fn multiplicity_codim(hs: &HilbertSeries) -> Result<(u32, i64)> {
    let mut p = hs.dense();
    if p.iter().all(|&c| c == 0) {
        return Err(Error::ZeroSeries);
    }
    let mut c = 0;
    loop {
        let value: i64 = p.iter().sum();
        if value != 0 {
            return Ok((c, value));
        }
        // p(t) = (1 - t) q(t): q_k = sum_{i <= k} p_i
        let mut q = Vec::with_capacity(p.len() - 1);
        let mut acc = 0;
        for &a in &p[..p.len() - 1] {
            acc += a;
            q.push(acc);
        }
        p = q;
        c += 1;
    }
}

/// Rank of the matrix obtained by evaluating at `point`, by fraction-free
/// elimination.
pub fn rank_at<C: Scalar>(m: &PolyMatrix<C>, point: &[C]) -> usize {
    let rows: Vec<Vec<C>> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m[(i, j)].eval_dense(point)).collect()).collect();
    exact_rank(rows)
}

/// Rank of a scalar matrix by Bareiss elimination with column skipping.
pub fn exact_rank<C: Scalar>(mut a: Vec<Vec<C>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = C::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(piv, rank);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let num = a[rank][col].clone() * a[i][j].clone() - a[i][col].clone() * a[rank][j].clone();
                a[i][j] = num / prev.clone();
            }
            a[i][col] = C::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Ranks of `d_0, d_1, ...` at seeded random integer points: the maximum
/// over two points, and over a third when they disagree.
pub fn generic_rank_profile<C: Scalar>(cx: &GradedComplex<C>, seed: u64) -> Vec<usize> {
    let mut rng = Rng::new(seed);
    let nn = cx.n;
    let points: Vec<Vec<C>> = (0..2).map(|_| rng.point(nn, 100)).collect();
    let profiles: Vec<Vec<usize>> = std::thread::scope(|s| {
        let handles: Vec<_> = points.iter().map(|p| s.spawn(move || profile_at(cx, p))).collect();
        handles.into_iter().map(|h| h.join().expect("rank worker")).collect()
    });
    let mut best = max_profile(&profiles[0], &profiles[1]);
    if profiles[0] != profiles[1] {
        best = max_profile(&best, &profile_at(cx, &rng.point(nn, 100)));
    }
    best
}

fn profile_at<C: Scalar>(cx: &GradedComplex<C>, point: &[C]) -> Vec<usize> {
    cx.differentials.iter().map(|d| rank_at(d, point)).collect()
}

fn max_profile(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Ranks forced by exactness: the last map is injective, and
/// `r_k = rank(slot k+1) - r_{k+1}`.
pub fn expected_rank_profile(slot_ranks: &[usize]) -> Vec<usize> {
    let m = slot_ranks.len() - 1;
    let mut r = vec![0; m];
    r[m - 1] = slot_ranks[m];
    for k in (0..m - 1).rev() {
        r[k] = slot_ranks[k + 1] - r[k + 1];
    }
    r
}
