//! Sparse polynomials in commuting variables `u_p`, one per poset element,
//! together with the P-elementary functions and the determinants built from
//! them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Mul, Neg, RangeInclusive};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{guard, Error, Result};
use crate::poset::Poset;
use crate::shapes::{CylindricShape, SkewShape};
use crate::symx::{Basis, SymFunc};

/// Largest matrix dimension accepted by [`det_upoly`].
pub const DET_LIMIT: usize = 10;
/// Largest `λ_1` accepted by the cylindric determinant sums.
pub const CYLINDRIC_WIDTH_LIMIT: usize = 8;

/// Exponent vector of a monomial `∏ u_p^{a_p}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UMonomial(SmallVec<[u8; 16]>);

impl UMonomial {
    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        UMonomial(SmallVec::from_elem(0, n))
    }

    /// `u_P`, the product of all `n` variables.
    pub fn all_ones(n: usize) -> Self {
        UMonomial(SmallVec::from_elem(1, n))
    }

    pub fn from_exps(exps: &[u8]) -> Self {
        UMonomial(SmallVec::from_slice(exps))
    }

    pub fn exps(&self) -> &[u8] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    /// Multiplies in one more factor `u_x`.
    pub fn bump(&mut self, x: usize) {
        self.0[x] += 1;
    }

    pub fn mul(&self, other: &UMonomial) -> UMonomial {
        UMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Debug for UMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    format!("u{i}")
                } else {
                    format!("u{i}^{a}")
                }
            })
            .collect();
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// Coefficient rings used for u-polynomials.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Display
        + Zero
        + One
        + Neg<Output = T>
        + for<'a> AddAssign<&'a T>
        + for<'a> Mul<&'a T, Output = T>
{
}

/// A polynomial in `nvars` commuting variables; zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq)]
pub struct UPoly<C> {
    nvars: usize,
    terms: BTreeMap<UMonomial, C>,
}

pub type UPolynomial = UPoly<BigInt>;
pub type QPolynomial = UPoly<BigRational>;

impl<C: Coeff> UPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        UPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(UMonomial::one(nvars), C::one())
    }

    pub fn monomial(m: UMonomial, c: C) -> Self {
        let mut f = Self::zero(m.nvars());
        f.add_term(m, c);
        f
    }

    /// The variable `u_x`.
    pub fn var(nvars: usize, x: usize) -> Self {
        let mut m = UMonomial::one(nvars);
        m.bump(x);
        Self::monomial(m, C::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&UMonomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &UMonomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: UMonomial, c: C) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.clone() * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.mul(n), a.clone() * b);
            }
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> UPoly<D> {
        let mut out = UPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl UPolynomial {
    pub fn to_rational(&self) -> QPolynomial {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl QPolynomial {
    /// Fails with [`Error::Integrality`] if some coefficient has a denominator.
    pub fn to_integral(&self) -> Result<UPolynomial> {
        let mut out = UPolynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            if !c.is_integer() {
                return Err(Error::Integrality(c.to_string()));
            }
            out.add_term(m.clone(), c.to_integer());
        }
        Ok(out)
    }
}

impl<C: Coeff> fmt::Debug for UPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Terms in decreasing lexicographic order of exponent vectors, written
/// `c*u0^a*u1*...`, joined by ` + `; the zero polynomial prints as `0`.
impl<C: Coeff> fmt::Display for UPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if m.degree() == 0 {
                    c.to_string()
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `e_k^P`: the sum of `u_{i_1}⋯u_{i_k}` over chains `i_1 <_P ⋯ <_P i_k`.
pub fn e_k_p(p: &Poset, k: i64) -> UPolynomial {
    let n = p.len();
    if k < 0 {
        return UPolynomial::zero(n);
    }
    let mut f = UPolynomial::zero(n);
    for chain in p.chains(k as usize) {
        let mut m = UMonomial::one(n);
        for x in chain {
            m.bump(x);
        }
        f.add_term(m, BigInt::one());
    }
    f
}

/// `e_0^P, …, e_h^P` for the longest chain length `h`; every other index
/// gives zero.
struct ElementaryTable {
    polys: Vec<UPolynomial>,
    zero: UPolynomial,
}

impl ElementaryTable {
    fn new(p: &Poset) -> Self {
        let h = p.longest_chain() as i64;
        ElementaryTable {
            polys: (0..=h).map(|k| e_k_p(p, k)).collect(),
            zero: UPolynomial::zero(p.len()),
        }
    }

    fn get(&self, k: i64) -> &UPolynomial {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.polys.get(k))
            .unwrap_or(&self.zero)
    }
}

/// `ψ(f)` for `f` in the e-basis: each `e_k` becomes `e_k^P`.
pub fn apply_psi(f: &SymFunc, p: &Poset) -> Result<QPolynomial> {
    if f.basis() != Basis::E {
        return Err(Error::Precondition(format!(
            "apply_psi needs the e-basis, got {}",
            f.basis()
        )));
    }
    let table = ElementaryTable::new(p);
    let mut out = QPolynomial::zero(p.len());
    for (mu, c) in f.terms() {
        let mut term = UPolynomial::one(p.len());
        for &part in mu.parts() {
            term = term.mul(table.get(part as i64));
            if term.is_zero() {
                break;
            }
        }
        out.add_assign(&term.to_rational().scale(c));
    }
    Ok(out)
}

/// Determinant of a square matrix of polynomials in `nvars` variables.
///
/// Expands over permutations row by row, grouping partial products by the
/// set of columns already used so shared prefixes are multiplied once.
pub fn det_upoly<C: Coeff>(nvars: usize, mat: &[Vec<UPoly<C>>]) -> Result<UPoly<C>> {
    let dim = mat.len();
    guard("det_upoly", dim, DET_LIMIT)?;
    if mat.iter().any(|row| row.len() != dim) {
        return Err(Error::Shape(format!(
            "determinant of a non-square {dim}-row matrix"
        )));
    }
    if mat.iter().any(|row| row.iter().all(UPoly::is_zero)) {
        return Ok(UPoly::zero(nvars));
    }
    let mut layer: BTreeMap<u32, UPoly<C>> = BTreeMap::from([(0, UPoly::one(nvars))]);
    for row in mat {
        let mut next: BTreeMap<u32, UPoly<C>> = BTreeMap::new();
        for (&used, partial) in &layer {
            for (c, entry) in row.iter().enumerate() {
                if used & (1 << c) != 0 || entry.is_zero() {
                    continue;
                }
                let mut prod = partial.mul(entry);
                if (used >> (c + 1)).count_ones() % 2 == 1 {
                    prod = prod.scale(&-C::one());
                }
                next.entry(used | (1 << c))
                    .or_insert_with(|| UPoly::zero(nvars))
                    .add_assign(&prod);
            }
        }
        next.retain(|_, f| !f.is_zero());
        layer = next;
    }
    Ok(layer
        .into_values()
        .next()
        .unwrap_or_else(|| UPoly::zero(nvars)))
}

/// `s^P_{λ/μ} = det[e^P_{λ'_i − μ'_j − i + j}]`, of dimension `λ_1`.
pub fn s_p_skew(shape: &SkewShape, p: &Poset) -> Result<UPolynomial> {
    let l = shape.outer().first();
    guard("s_p_skew", l, DET_LIMIT)?;
    let table = ElementaryTable::new(p);
    let lam = shape.outer().conj_padded(l);
    let mu = shape.inner().conj_padded(l);
    let mat: Vec<Vec<UPolynomial>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    table
                        .get(lam[i] as i64 - mu[j] as i64 - i as i64 + j as i64)
                        .clone()
                })
                .collect()
        })
        .collect();
    det_upoly(p.len(), &mat)
}

/// Which index of the cylindric matrix carries the `k`-shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum KAxis {
    Row,
    Column,
}

/// Offsets `λ'_i − μ'_j − i + j` of the cylindric matrix (0-based `i`, `j`).
fn offsets(cs: &CylindricShape) -> Vec<Vec<i64>> {
    let l = cs.outer().first();
    let lam = cs.outer().conj_padded(l);
    let mu = cs.inner().conj_padded(l);
    (0..l)
        .map(|i| {
            (0..l)
                .map(|j| lam[i] as i64 - mu[j] as i64 - i as i64 + j as i64)
                .collect()
        })
        .collect()
}

fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

fn axis_ranges(cs: &CylindricShape, h: usize, axis: KAxis) -> Vec<RangeInclusive<i64>> {
    let off = offsets(cs);
    let l = off.len();
    let period = (cs.outer().first() + cs.shift()) as i64;
    let h = h as i64;
    (0..l)
        .map(|a| {
            let mut lo = i64::MAX;
            let mut hi = i64::MIN;
            let line: Vec<i64> = match axis {
                KAxis::Row => off[a].clone(),
                KAxis::Column => off.iter().map(|row| row[a]).collect(),
            };
            for c in line {
                let (from, to) = (div_ceil(-c, period), div_floor(h - c, period));
                if from <= to {
                    lo = lo.min(from);
                    hi = hi.max(to);
                }
            }
            lo..=hi
        })
        .collect()
}

/// For each row `i`, the hull of the `k_i` for which some entry of row `i`
/// has subscript in `[0, h]`, `h` the longest chain of `P`. Outside it the
/// row vanishes and so does the determinant.
pub fn krange(cs: &CylindricShape, p: &Poset) -> Vec<RangeInclusive<i64>> {
    axis_ranges(cs, p.longest_chain(), KAxis::Row)
}

/// All integer vectors with coordinates in `ranges` summing to zero, in
/// lexicographic order.
pub fn zero_sum_tuples(ranges: &[RangeInclusive<i64>]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if ranges.iter().any(RangeInclusive::is_empty) {
        return out;
    }
    let mut min_rest = vec![0i64; ranges.len() + 1];
    let mut max_rest = vec![0i64; ranges.len() + 1];
    for t in (0..ranges.len()).rev() {
        min_rest[t] = min_rest[t + 1] + ranges[t].start();
        max_rest[t] = max_rest[t + 1] + ranges[t].end();
    }
    fn rec(
        t: usize,
        sum: i64,
        ranges: &[RangeInclusive<i64>],
        bounds: (&[i64], &[i64]),
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if t == ranges.len() {
            if sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in ranges[t].clone() {
            let s = sum + k;
            if s + bounds.0[t + 1] > 0 || s + bounds.1[t + 1] < 0 {
                continue;
            }
            cur.push(k);
            rec(t + 1, s, ranges, bounds, cur, out);
            cur.pop();
        }
    }
    rec(
        0,
        0,
        ranges,
        (&min_rest, &max_rest),
        &mut Vec::new(),
        &mut out,
    );
    out
}

fn cylindric_terms_on(
    cs: &CylindricShape,
    p: &Poset,
    axis: KAxis,
) -> Result<Vec<(Vec<i64>, UPolynomial)>> {
    let l = cs.outer().first();
    guard("cylindric determinant width", l, CYLINDRIC_WIDTH_LIMIT)?;
    let table = ElementaryTable::new(p);
    let off = offsets(cs);
    let period = (l + cs.shift()) as i64;
    let ranges = axis_ranges(cs, p.longest_chain(), axis);
    let mut out = Vec::new();
    for k in zero_sum_tuples(&ranges) {
        let mat: Vec<Vec<UPolynomial>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let shift = if axis == KAxis::Row { k[i] } else { k[j] };
                        table.get(shift * period + off[i][j]).clone()
                    })
                    .collect()
            })
            .collect();
        let det = det_upoly(p.len(), &mat)?;
        if !det.is_zero() {
            out.push((k, det));
        }
    }
    Ok(out)
}

/// The nonzero determinants of the cylindric Jacobi–Trudi sum, keyed by the
/// row shift vector `k`.
pub fn cylindric_terms(cs: &CylindricShape, p: &Poset) -> Result<Vec<(Vec<i64>, UPolynomial)>> {
    cylindric_terms_on(cs, p, KAxis::Row)
}

fn sum_terms(n: usize, terms: Vec<(Vec<i64>, UPolynomial)>) -> UPolynomial {
    terms
        .into_iter()
        .fold(UPolynomial::zero(n), |mut acc, (_, f)| {
            acc.add_assign(&f);
            acc
        })
}

/// `s^P_{λ/μ/d} = Σ_{Σk = 0} det[e^P_{k_i(λ_1+d) + λ'_i − μ'_j − i + j}]`.
pub fn s_p_cylindric(cs: &CylindricShape, p: &Poset) -> Result<UPolynomial> {
    Ok(sum_terms(p.len(), cylindric_terms_on(cs, p, KAxis::Row)?))
}

/// The same sum with the shift indexed by column:
/// `Σ_{Σk = 0} det[e^P_{k_j(λ_1+d) + λ'_i − μ'_j − i + j}]`.
pub fn second_determinant(cs: &CylindricShape, p: &Poset) -> Result<UPolynomial> {
    Ok(sum_terms(
        p.len(),
        cylindric_terms_on(cs, p, KAxis::Column)?,
    ))
}

/// Coefficient of `u_P`, the product of every variable once.
pub fn coeff_up(f: &UPolynomial) -> BigInt {
    f.coeff(&UMonomial::all_ones(f.nvars()))
}
