//! Exact rank of sparse integer matrices by fraction-free elimination.
//!
//! Rows are reduced against pivot rows keyed by their leading column. Each
//! elimination step is `p_lead * row - row_lead * pivot`, followed by division
//! by the row's content, so entries stay small. Arithmetic runs in `i64` with
//! overflow checks and restarts in `BigInt` if any step overflows.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse row: strictly increasing column indices with nonzero values.
pub type SparseRow = Vec<(usize, i64)>;

trait Scalar: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    fn checked_sub(&self, o: &Self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i64::checked_mul(*self, *o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        i64::checked_sub(*self, *o)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
}

struct Overflow;

fn normalize<T: Scalar>(row: &mut [(usize, T)]) {
    if row.is_empty() {
        return;
    }
    let mut g = row[0].1.clone();
    for (_, v) in row.iter().skip(1) {
        if g.is_unit() {
            break;
        }
        g = g.gcd(v);
    }
    if row[0].1.is_negative() {
        g = g.neg();
    }
    if !(g.is_unit() && !g.is_negative()) {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

/// `a * row - b * pivot`, dropping zeros. The leading columns cancel.
fn combine<T: Scalar>(
    row: &[(usize, T)],
    pivot: &[(usize, T)],
    a: &T,
    b: &T,
) -> Result<Vec<(usize, T)>, Overflow> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let (col, val) = match (row.get(i), pivot.get(j)) {
            (Some(&(ci, ref vi)), Some(&(cj, ref vj))) if ci == cj => {
                i += 1;
                j += 1;
                let l = a.checked_mul(vi).ok_or(Overflow)?;
                let r = b.checked_mul(vj).ok_or(Overflow)?;
                (ci, l.checked_sub(&r).ok_or(Overflow)?)
            }
            (Some(&(ci, ref vi)), Some(&(cj, _))) if ci < cj => {
                i += 1;
                (ci, a.checked_mul(vi).ok_or(Overflow)?)
            }
            (Some(&(ci, ref vi)), None) => {
                i += 1;
                (ci, a.checked_mul(vi).ok_or(Overflow)?)
            }
            (_, Some(&(cj, ref vj))) => {
                j += 1;
                let r = b.checked_mul(vj).ok_or(Overflow)?;
                (cj, T::from_i64(0).checked_sub(&r).ok_or(Overflow)?)
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    Ok(out)
}

fn rank_generic<T: Scalar>(rows: &[SparseRow]) -> Result<usize, Overflow> {
    let mut pivots: BTreeMap<usize, Vec<(usize, T)>> = BTreeMap::new();
    for r in rows {
        let mut row: Vec<(usize, T)> = r.iter().map(|&(c, v)| (c, T::from_i64(v))).collect();
        normalize(&mut row);
        while let Some((lead, lead_val)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => {
                    let p_lead = p[0].1.clone();
                    row = combine(&row, p, &p_lead, &lead_val)?;
                    normalize(&mut row);
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    Ok(pivots.len())
}

/// Rank over the rationals of the matrix with the given sparse rows.
pub fn rank(rows: &[SparseRow]) -> usize {
    match rank_generic::<i64>(rows) {
        Ok(r) => r,
        Err(Overflow) => rank_generic::<BigInt>(rows)
            .unwrap_or_else(|_| unreachable!("BigInt arithmetic cannot overflow")),
    }
}

/// Dense convenience wrapper.
pub fn rank_dense(matrix: &[Vec<i64>]) -> usize {
    let rows: Vec<SparseRow> = matrix
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(c, &v)| (c, v))
                .collect()
        })
        .collect();
    rank(&rows)
}
