use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// The indeterminate `x[row,col]`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VarId {
    pub row: usize,
    pub col: usize,
}

impl VarId {
    pub const fn new(row: usize, col: usize) -> Self {
        VarId { row, col }
    }

    pub fn in_context(self, n: usize) -> bool {
        (1..=n).contains(&self.row) && (1..=n).contains(&self.col)
    }

    // row-major packing; sorting keys sorts variables row-major
    fn key(self) -> u16 {
        debug_assert!(self.row < 256 && self.col < 256);
        ((self.row as u16) << 8) | self.col as u16
    }

    fn from_key(k: u16) -> Self {
        VarId { row: (k >> 8) as usize, col: (k & 0xff) as usize }
    }

    pub fn transpose(self) -> Self {
        VarId { row: self.col, col: self.row }
    }
}

/// A power product of variables, stored sparsely as `(variable, exponent)`
/// pairs sorted by variable; no stored exponent is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[(u16, u16); 8]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        let mut exps = SmallVec::new();
        exps.push((v.key(), 1));
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        let k = v.key();
        self.exps.iter().find(|&&(kk, _)| kk == k).map_or(0, |&(_, e)| e as u32)
    }

    pub fn vars(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().map(|&(k, e)| (VarId::from_key(k), e as u32))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut exps = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    exps.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        Monomial { exps }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|&(k, x)| (k, x * e as u16)).collect() }
    }

    /// `Some(other / self)` when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = SmallVec::new();
        let mut it = self.exps.iter().peekable();
        for &(k, e) in &other.exps {
            match it.peek() {
                Some(&&(ks, es)) if ks == k => {
                    if es > e {
                        return None;
                    }
                    if es < e {
                        exps.push((k, e - es));
                    }
                    it.next();
                }
                Some(&&(ks, _)) if ks < k => return None,
                _ => exps.push((k, e)),
            }
        }
        if it.next().is_some() {
            return None;
        }
        Some(Monomial { exps })
    }

    /// `(d/dv self) = e * result`; `None` when `v` does not occur.
    pub fn derive(&self, v: VarId) -> Option<(Monomial, u32)> {
        let k = v.key();
        let pos = self.exps.iter().position(|&(kk, _)| kk == k)?;
        let e = self.exps[pos].1;
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(pos);
        } else {
            exps[pos].1 = e - 1;
        }
        Some((Monomial { exps }, e as u32))
    }

    pub fn transpose(&self) -> Monomial {
        let mut exps: SmallVec<[(u16, u16); 8]> =
            self.exps.iter().map(|&(k, e)| (VarId::from_key(k).transpose().key(), e)).collect();
        exps.sort_unstable();
        Monomial { exps }
    }
}

/// Graded order; ties broken lexicographically with the larger variable
/// compared first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.exps.iter().rev();
        let mut b = other.exps.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(ka, ea)), Some(&(kb, eb))) => {
                    if ka != kb {
                        return ka.cmp(&kb);
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
