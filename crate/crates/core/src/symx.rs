//! Symmetric functions of fixed degree in the monomial, elementary and Schur
//! bases, chromatic symmetric functions and their e-expansions.
//!
//! Degree `n` computations use `n` variables, enough for every
//! m-coefficient at that degree to be faithful.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{guard, Error, Result};
use crate::poset::{IncGraph, Poset};
use crate::shapes::{partitions, CylindricShape, Partition};
use crate::tableaux::{count_cylindric_with_content, count_standard_cylindric};
use crate::upoly::{apply_psi, coeff_up, s_p_cylindric, UMonomial};

/// Largest degree for basis transitions.
pub const TRANSITION_LIMIT: usize = 12;
/// Largest shape handled by [`cylindric_schur_m`].
pub const CYLINDRIC_SCHUR_LIMIT: usize = 10;
/// Largest graph handled by [`chromatic_x`].
pub const CHROMATIC_LIMIT: usize = 9;
/// Largest poset handled by [`psi_m_coeff`].
pub const PSI_M_LIMIT: usize = 8;
/// Largest poset handled by [`corollary_sum`].
pub const COROLLARY_LIMIT: usize = 7;
/// Largest graph handled by [`sink_counts`].
pub const SINK_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    S,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::S => "s",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "s" => Ok(Basis::S),
            _ => Err(Error::Parse {
                line: 1,
                msg: format!("unknown basis `{s}`"),
            }),
        }
    }
}

/// A homogeneous symmetric function `Σ c_λ b_λ` in one basis, with exact
/// rational coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lam: Partition) -> Self {
        let mut f = Self::zero(basis, lam.size());
        f.coeffs.insert(lam, BigRational::one());
        f
    }

    pub fn from_terms(
        basis: Basis,
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> Result<Self> {
        let mut f = Self::zero(basis, degree);
        for (lam, c) in terms {
            f.add_term(lam, c)?;
        }
        Ok(f)
    }

    pub fn add_term(&mut self, lam: Partition, c: BigRational) -> Result<()> {
        if lam.size() != self.degree {
            return Err(Error::Shape(format!(
                "{lam:?} is not a partition of {}",
                self.degree
            )));
        }
        let slot = self.coeffs.entry(lam).or_insert_with(BigRational::zero);
        *slot += c;
        self.coeffs.retain(|_, c| !c.is_zero());
        Ok(())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lam: &Partition) -> BigRational {
        self.coeffs
            .get(lam)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        let mut out = Self::zero(self.basis, self.degree);
        for (lam, a) in &self.coeffs {
            if !(a * c).is_zero() {
                out.coeffs.insert(lam.clone(), a * c);
            }
        }
        out
    }

    /// Product of two e-basis functions: `e_μ e_ν = e_{μ ∪ ν}`.
    pub fn mul_e(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis != Basis::E || other.basis != Basis::E {
            return Err(Error::Precondition(
                "mul_e needs two e-basis functions".into(),
            ));
        }
        let mut out = Self::zero(Basis::E, self.degree + other.degree);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                parts.sort_unstable_by(|p, q| q.cmp(p));
                out.add_term(Partition::new(parts)?, x * y)?;
            }
        }
        Ok(out)
    }

    /// Coefficients as integers, failing on the first fraction.
    pub fn to_integral(&self) -> Result<BTreeMap<Partition, BigInt>> {
        self.coeffs
            .iter()
            .map(|(lam, c)| {
                if c.is_integer() {
                    Ok((lam.clone(), c.to_integer()))
                } else {
                    Err(Error::Integrality(c.to_string()))
                }
            })
            .collect()
    }
}

fn partition_label(lam: &Partition) -> String {
    if lam.is_empty() {
        "()".to_string()
    } else {
        lam.to_string()
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `basis:degree`, then one `λ1,λ2,... -> c` line per term in
/// lexicographic order of partitions.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.basis, self.degree)?;
        for (lam, c) in &self.coeffs {
            write!(f, "\n{} -> {}", partition_label(lam), c)?;
        }
        Ok(())
    }
}

impl FromStr for SymFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty input".into(),
        })?;
        let bad = |line: usize, msg: String| Error::Parse {
            line: line + 1,
            msg,
        };
        let (basis, degree) = header
            .trim()
            .split_once(':')
            .ok_or_else(|| bad(0, format!("expected `basis:degree`, got `{header}`")))?;
        let degree = degree
            .trim()
            .parse()
            .map_err(|_| bad(0, format!("bad degree `{degree}`")))?;
        let mut f = SymFunc::zero(basis.trim().parse()?, degree);
        for (no, line) in lines {
            let (lam, c) = line
                .split_once("->")
                .ok_or_else(|| bad(no, format!("expected `λ -> c`, got `{line}`")))?;
            let lam: Partition = lam
                .trim()
                .parse()
                .map_err(|e: Error| bad(no, e.to_string()))?;
            let c: BigRational = c
                .trim()
                .parse()
                .map_err(|_| bad(no, format!("bad coefficient `{}`", c.trim())))?;
            f.add_term(lam, c).map_err(|e| bad(no, e.to_string()))?;
        }
        Ok(f)
    }
}

/// Index sets of size `k` inside `0..len`, as bitmasks.
fn subsets(len: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << len).filter(move |s| s.count_ones() as usize == k)
}

/// m-expansion of `f · e_k` for `f` given in the m-basis with integer
/// coefficients: `x^ρ` arises once for each `k`-set `S` with `ρ − 1_S` a
/// rearrangement of some `ν` in `f`.
fn times_e(
    f: &BTreeMap<Partition, BigInt>,
    degree: usize,
    k: usize,
) -> BTreeMap<Partition, BigInt> {
    let mut out = BTreeMap::new();
    for rho in partitions(degree + k) {
        let mut total = BigInt::zero();
        for s in subsets(rho.len(), k) {
            let mut nu: Vec<usize> = rho
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &r)| r - ((s >> i) & 1) as usize)
                .collect();
            nu.sort_unstable_by(|a, b| b.cmp(a));
            let nu = Partition::new(nu).expect("nonnegative parts");
            if let Some(c) = f.get(&nu) {
                total += c;
            }
        }
        if !total.is_zero() {
            out.insert(rho, total);
        }
    }
    out
}

/// m-expansion of `e_μ = e_{μ_1} ⋯ e_{μ_ℓ}`.
pub fn e_to_m(mu: &Partition) -> Result<SymFunc> {
    guard("e_to_m", mu.size(), TRANSITION_LIMIT)?;
    let mut cur = BTreeMap::from([(Partition::empty(), BigInt::one())]);
    let mut degree = 0;
    for &k in mu.parts() {
        cur = times_e(&cur, degree, k);
        degree += k;
    }
    SymFunc::from_terms(
        Basis::M,
        degree,
        cur.into_iter()
            .map(|(l, c)| (l, BigRational::from_integer(c))),
    )
}

/// Rewrites an e-basis function in the m-basis.
pub fn e_func_to_m(f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::E {
        return Err(Error::Precondition(format!(
            "expected the e-basis, got {}",
            f.basis()
        )));
    }
    let mut out = SymFunc::zero(Basis::M, f.degree());
    for (mu, c) in f.terms() {
        for (nu, a) in e_to_m(mu)?.terms() {
            out.add_term(nu.clone(), a * c)?;
        }
    }
    Ok(out)
}

/// The matrix `M[μ][ν] = ⟨m_ν⟩ e_μ` over partitions of `n`, and its inverse.
#[derive(Clone, Debug)]
pub struct EMTransition {
    degree: usize,
    parts: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    forward: Vec<Vec<BigRational>>,
    inverse: Vec<Vec<BigRational>>,
}

impl EMTransition {
    pub fn new(degree: usize) -> Result<Self> {
        guard("EMTransition", degree, TRANSITION_LIMIT)?;
        let parts = partitions(degree);
        let index: BTreeMap<Partition, usize> = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        let size = parts.len();
        let mut forward = vec![vec![BigRational::zero(); size]; size];
        for (r, mu) in parts.iter().enumerate() {
            for (nu, c) in e_to_m(mu)?.terms() {
                forward[r][index[nu]] = c.clone();
            }
        }
        let inverse = invert(&forward).ok_or_else(|| {
            Error::Precondition(format!("e-to-m transition of degree {degree} is singular"))
        })?;
        Ok(EMTransition {
            degree,
            parts,
            index,
            forward,
            inverse,
        })
    }

    /// Shared transition for `degree`, built on first use.
    pub fn cached(degree: usize) -> Result<Arc<EMTransition>> {
        static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<EMTransition>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("cache lock").get(&degree) {
            return Ok(Arc::clone(t));
        }
        let t = Arc::new(EMTransition::new(degree)?);
        cache
            .lock()
            .expect("cache lock")
            .insert(degree, Arc::clone(&t));
        Ok(t)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    /// `⟨m_ν⟩ e_μ`.
    pub fn entry(&self, mu: &Partition, nu: &Partition) -> BigRational {
        self.forward[self.index[mu]][self.index[nu]].clone()
    }

    /// `⟨e_μ⟩ m_ν`.
    pub fn inverse_entry(&self, nu: &Partition, mu: &Partition) -> BigRational {
        self.inverse[self.index[nu]][self.index[mu]].clone()
    }
}

/// Gauss–Jordan inverse; `None` for a singular matrix.
fn invert(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut left: Vec<Vec<BigRational>> = a.to_vec();
    let mut right: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !left[r][col].is_zero())?;
        left.swap(col, pivot);
        right.swap(col, pivot);
        let inv = left[col][col].recip();
        for x in left[col].iter_mut().chain(right[col].iter_mut()) {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || left[r][col].is_zero() {
                continue;
            }
            let factor = left[r][col].clone();
            for c in 0..n {
                let (l, rr) = (&left[col][c] * &factor, &right[col][c] * &factor);
                left[r][c] -= l;
                right[r][c] -= rr;
            }
        }
    }
    Some(right)
}

/// Rewrites an m-basis function in the e-basis.
pub fn m_to_e(f: &SymFunc) -> Result<SymFunc> {
    if f.basis() != Basis::M {
        return Err(Error::Precondition(format!(
            "expected the m-basis, got {}",
            f.basis()
        )));
    }
    let t = EMTransition::cached(f.degree())?;
    let mut out = SymFunc::zero(Basis::E, f.degree());
    for (nu, c) in f.terms() {
        for mu in t.partitions() {
            let a = t.inverse_entry(nu, mu);
            if !a.is_zero() {
                out.add_term(mu.clone(), a * c)?;
            }
        }
    }
    Ok(out)
}

/// `s_{λ/μ/d}` in the m-basis: `a_ν` counts cylindric tableaux over the
/// chain on `nvars` letters with content exactly `ν`.
pub fn cylindric_schur_m(cs: &CylindricShape, nvars: usize) -> Result<SymFunc> {
    guard("cylindric_schur_m", cs.size(), CYLINDRIC_SCHUR_LIMIT)?;
    if nvars < cs.size() {
        return Err(Error::Precondition(format!(
            "{nvars} variables cannot see every monomial of degree {}",
            cs.size()
        )));
    }
    let chain = Poset::chain(nvars);
    let mut out = SymFunc::zero(Basis::M, cs.size());
    for nu in partitions(cs.size()) {
        let a = count_cylindric_with_content(cs, &chain, nu.parts())?;
        out.add_term(nu, BigRational::from_integer(a.into()))?;
    }
    Ok(out)
}

/// Number of proper colourings of `g` using colour `c` exactly `content[c]`
/// times.
fn colourings_with_content(g: &IncGraph, content: &[usize]) -> u64 {
    fn rec(g: &IncGraph, v: usize, colour: &mut Vec<usize>, budget: &mut [usize]) -> u64 {
        if v == g.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..budget.len() {
            if budget[c] == 0 || (0..v).any(|u| colour[u] == c && g.adjacent(u, v)) {
                continue;
            }
            budget[c] -= 1;
            colour.push(c);
            total += rec(g, v + 1, colour, budget);
            colour.pop();
            budget[c] += 1;
        }
        total
    }
    rec(
        g,
        0,
        &mut Vec::with_capacity(g.len()),
        &mut content.to_vec(),
    )
}

/// `X_G` in the m-basis: `⟨m_ν⟩ X_G` is the number of proper colourings with
/// colour `i` used `ν_i` times.
pub fn chromatic_x(g: &IncGraph) -> Result<SymFunc> {
    guard("chromatic_x", g.len(), CHROMATIC_LIMIT)?;
    let mut out = SymFunc::zero(Basis::M, g.len());
    for nu in partitions(g.len()) {
        let c = colourings_with_content(g, nu.parts());
        out.add_term(nu, BigRational::from_integer(c.into()))?;
    }
    Ok(out)
}

/// The coefficients `c_λ` of `X_G = Σ c_λ e_λ`.
pub fn e_coeffs(g: &IncGraph) -> Result<BTreeMap<Partition, BigInt>> {
    m_to_e(&chromatic_x(g)?)?.to_integral()
}

/// `⟨u_P⟩ m^P_λ(u)` with `m^P_λ = ψ(m_λ)`.
pub fn psi_m_coeff(p: &Poset, lam: &Partition) -> Result<BigInt> {
    guard("psi_m_coeff", p.len(), PSI_M_LIMIT)?;
    if lam.size() != p.len() {
        return Err(Error::Precondition(format!(
            "{lam:?} is not a partition of {}",
            p.len()
        )));
    }
    let image = apply_psi(&m_to_e(&SymFunc::basis_element(Basis::M, lam.clone()))?, p)?;
    let c = image.coeff(&UMonomial::all_ones(p.len()));
    if !c.is_integer() {
        return Err(Error::Integrality(c.to_string()));
    }
    Ok(c.to_integer())
}

/// Both sides of `Σ_ν a_ν c_ν = #{standard cylindric P-tableaux}`, plus the
/// `u_P` coefficient of the cylindric determinant sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub det_coeff: BigInt,
}

impl CorollaryCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.rhs == self.det_coeff
    }
}

pub fn corollary_sum(p: &Poset, cs: &CylindricShape) -> Result<CorollaryCheck> {
    guard("corollary_sum", p.len(), COROLLARY_LIMIT)?;
    if cs.size() != p.len() {
        return Err(Error::Precondition(format!(
            "shape of size {} for a poset on {} elements",
            cs.size(),
            p.len()
        )));
    }
    let a = cylindric_schur_m(cs, p.len())?;
    let c = e_coeffs(&p.inc_graph())?;
    let mut lhs = BigInt::zero();
    for (nu, a_nu) in a.terms() {
        if let Some(c_nu) = c.get(nu) {
            lhs += a_nu.to_integer() * c_nu;
        }
    }
    let rhs = BigInt::from(count_standard_cylindric(cs, p)?);
    let det_coeff = coeff_up(&s_p_cylindric(cs, p)?);
    Ok(CorollaryCheck {
        lhs,
        rhs,
        det_coeff,
    })
}

/// Histogram of sink counts over the acyclic orientations of `g`.
///
/// Every acyclic orientation orients edges along some vertex ordering, so
/// the orientations are collected from all orderings and deduplicated.
pub fn sink_counts(g: &IncGraph) -> Result<BTreeMap<usize, u64>> {
    guard("sink_counts", g.len(), SINK_LIMIT)?;
    let n = g.len();
    let edges = g.edges();
    let mut seen: HashSet<u32> = HashSet::new();
    let mut order: Vec<usize> = (0..n).collect();
    let mut hist = BTreeMap::new();
    loop {
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mask = edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| pos[a] < pos[b])
            .fold(0u32, |m, (e, _)| m | (1 << e));
        if seen.insert(mask) {
            let mut has_out = vec![false; n];
            for (e, &(a, b)) in edges.iter().enumerate() {
                has_out[if mask >> e & 1 == 1 { a } else { b }] = true;
            }
            *hist
                .entry(has_out.iter().filter(|&&o| !o).count())
                .or_insert(0) += 1;
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    Ok(hist)
}

/// Advances to the next permutation in lexicographic order.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `Σ_{ℓ(λ) = j} c_λ` for each length `j`.
pub fn e_coeff_length_sums(c: &BTreeMap<Partition, BigInt>) -> BTreeMap<usize, BigInt> {
    let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (lam, x) in c {
        *out.entry(lam.len()).or_insert_with(BigInt::zero) += x;
    }
    out.retain(|_, x| !x.is_zero());
    out
}

/// Returns true when every coefficient is nonnegative.
pub fn is_nonnegative(c: &BTreeMap<Partition, BigInt>) -> bool {
    c.values().all(|x| !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn m_terms(f: &SymFunc) -> Vec<(Partition, i64)> {
        f.terms()
            .map(|(l, c)| (l.clone(), i64::try_from(c.to_integer()).unwrap()))
            .collect()
    }

    #[test]
    fn e_to_m_examples() {
        assert_eq!(m_terms(&e_to_m(&p(&[2])).unwrap()), vec![(p(&[1, 1]), 1)]);
        assert_eq!(
            m_terms(&e_to_m(&p(&[1, 1])).unwrap()),
            vec![(p(&[1, 1]), 2), (p(&[2]), 1)]
        );
        assert_eq!(
            m_terms(&e_to_m(&p(&[2, 1])).unwrap()),
            vec![(p(&[1, 1, 1]), 3), (p(&[2, 1]), 1)]
        );
        assert!(matches!(e_to_m(&p(&[13])), Err(Error::Size { .. })));
    }

    /// `⟨m_ν⟩ e_μ` as the number of 0/1 matrices with row sums `μ` and
    /// column sums `ν`.
    fn zero_one_matrices(rows: &[usize], cols: &[usize]) -> u64 {
        match rows.split_first() {
            None => u64::from(cols.iter().all(|&c| c == 0)),
            Some((&r, rest)) => subsets(cols.len(), r)
                .filter(|s| (0..cols.len()).all(|i| (s >> i) & 1 == 0 || cols[i] > 0))
                .map(|s| {
                    let left: Vec<usize> = cols
                        .iter()
                        .enumerate()
                        .map(|(i, &c)| c - ((s >> i) & 1) as usize)
                        .collect();
                    zero_one_matrices(rest, &left)
                })
                .sum(),
        }
    }

    #[test]
    fn transition_matches_matrix_count() {
        for n in 0..=6 {
            let t = EMTransition::new(n).unwrap();
            for mu in t.partitions() {
                for nu in t.partitions() {
                    let expect = zero_one_matrices(mu.parts(), nu.parts());
                    assert_eq!(t.entry(mu, nu), q(expect as i64), "{mu:?} {nu:?}");
                    if !t.entry(mu, nu).is_zero() {
                        assert!(mu.conjugate().dominates(nu));
                    }
                }
                assert_eq!(t.entry(mu, &mu.conjugate()), q(1));
            }
        }
    }

    #[test]
    fn m_to_e_examples() {
        let e2 = m_to_e(&SymFunc::basis_element(Basis::M, p(&[1, 1]))).unwrap();
        assert_eq!(e2, SymFunc::basis_element(Basis::E, p(&[2])));
        let m2 = m_to_e(&SymFunc::basis_element(Basis::M, p(&[2]))).unwrap();
        let expect =
            SymFunc::from_terms(Basis::E, 2, [(p(&[1, 1]), q(1)), (p(&[2]), q(-2))]).unwrap();
        assert_eq!(m2, expect);
    }

    #[test]
    fn round_trip() {
        for n in 0..=8 {
            for lam in partitions(n) {
                let m = SymFunc::basis_element(Basis::M, lam);
                assert_eq!(e_func_to_m(&m_to_e(&m).unwrap()).unwrap(), m);
            }
        }
    }

    #[test]
    fn text_form() {
        let f = SymFunc::from_terms(
            Basis::E,
            3,
            [
                (p(&[3]), q(6)),
                (p(&[2, 1]), BigRational::new(1.into(), 2.into())),
            ],
        )
        .unwrap();
        let s = f.to_string();
        assert_eq!(s, "e:3\n2,1 -> 1/2\n3 -> 6");
        assert_eq!(s.parse::<SymFunc>().unwrap(), f);
        let one = SymFunc::basis_element(Basis::M, Partition::empty());
        assert_eq!(one.to_string(), "m:0\n() -> 1");
        assert_eq!(one.to_string().parse::<SymFunc>().unwrap(), one);
        assert!(matches!(
            "m:2\n3 -> 1".parse::<SymFunc>(),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn chromatic_examples() {
        let edgeless = Poset::chain(3).inc_graph();
        assert_eq!(
            m_terms(&chromatic_x(&edgeless).unwrap()),
            vec![(p(&[1, 1, 1]), 6), (p(&[2, 1]), 3), (p(&[3]), 1)]
        );
        let k3 = Poset::antichain(3).inc_graph();
        assert_eq!(
            m_terms(&chromatic_x(&k3).unwrap()),
            vec![(p(&[1, 1, 1]), 6)]
        );
        let single = Poset::chain(1).inc_graph();
        assert_eq!(m_terms(&chromatic_x(&single).unwrap()), vec![(p(&[1]), 1)]);
    }

    #[test]
    fn e_coefficient_examples() {
        let chain = e_coeffs(&Poset::chain(3).inc_graph()).unwrap();
        assert_eq!(chain, BTreeMap::from([(p(&[1, 1, 1]), BigInt::from(1))]));
        let anti = e_coeffs(&Poset::antichain(3).inc_graph()).unwrap();
        assert_eq!(anti, BTreeMap::from([(p(&[3]), BigInt::from(6))]));
        // path a - b - c: X = 3 e_{(2,1)} + 3 e_{(3)}
        let path = e_coeffs(&Poset::from_relations(3, &[(0, 1)]).unwrap().inc_graph()).unwrap();
        assert_eq!(
            path,
            BTreeMap::from([(p(&[2, 1]), BigInt::from(1)), (p(&[3]), BigInt::from(3))])
        );
    }

    #[test]
    fn psi_m_examples() {
        assert_eq!(
            psi_m_coeff(&Poset::chain(3), &p(&[1, 1, 1])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            psi_m_coeff(&Poset::antichain(3), &p(&[3])).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(
            psi_m_coeff(&Poset::chain(3), &p(&[3])).unwrap(),
            BigInt::from(0)
        );
    }

    #[test]
    fn cylindric_schur_examples() {
        let rect = CylindricShape::new(p(&[2, 2]), Partition::empty(), 0).unwrap();
        assert_eq!(
            cylindric_schur_m(&rect, 4).unwrap(),
            SymFunc::basis_element(Basis::M, p(&[2, 2]))
        );
        let hook = CylindricShape::new(p(&[2, 1]), Partition::empty(), 1).unwrap();
        let got = cylindric_schur_m(&hook, 3).unwrap();
        assert_eq!(m_terms(&got), vec![(p(&[1, 1, 1]), 1), (p(&[2, 1]), 1)]);
        assert!(matches!(
            cylindric_schur_m(&hook, 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn corollary_examples() {
        let cs = CylindricShape::new(p(&[3]), Partition::empty(), 1).unwrap();
        let r = corollary_sum(&Poset::antichain(3), &cs).unwrap();
        assert!(r.holds(), "{r:?}");
        let col = CylindricShape::new(p(&[1, 1, 1]), Partition::empty(), 1).unwrap();
        let r = corollary_sum(&Poset::chain(3), &col).unwrap();
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone()),
            (BigInt::from(1), BigInt::from(1))
        );
        assert!(r.holds());
        let r = corollary_sum(&Poset::antichain(0), &CylindricShape::empty()).unwrap();
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone()),
            (BigInt::from(1), BigInt::from(1))
        );
    }

    #[test]
    fn sink_examples() {
        assert_eq!(
            sink_counts(&Poset::chain(4).inc_graph()).unwrap(),
            BTreeMap::from([(4, 1)])
        );
        let edge = IncGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(sink_counts(&edge).unwrap(), BTreeMap::from([(1, 2)]));
        assert_eq!(
            sink_counts(&IncGraph::complete(3)).unwrap(),
            BTreeMap::from([(1, 6)])
        );
        assert_eq!(
            sink_counts(&IncGraph::complete(0)).unwrap(),
            BTreeMap::from([(0, 1)])
        );
    }

    #[test]
    fn permutations_in_order() {
        let mut v = vec![0, 1, 2];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[5], vec![2, 1, 0]);
    }
}
