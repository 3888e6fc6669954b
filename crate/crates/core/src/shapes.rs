//! Partitions, skew and cylindric shapes, and column diagrams `col(α, β)`.
//!
//! Coordinates are 1-based and matrix style: cell `(i, j)` sits in row `i`
//! and column `j`. Conjugate parts beyond the length of a conjugate are 0.

use std::fmt;
use std::str::FromStr;

use crate::error::{guard, Error, Result};

/// Largest `|λ/μ|` accepted by the shape enumerators.
pub const SHAPE_ENUM_LIMIT: usize = 12;

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that `parts` is weakly decreasing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Shape(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The partition with `c` parts equal to `r`.
    pub fn rectangle(r: usize, c: usize) -> Self {
        if r == 0 {
            return Self::empty();
        }
        Partition(vec![r; c])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` for 1-based `i`, 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ_1`, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `λ'_j` for 1-based `j`, 0 past `λ_1`.
    pub fn conj_part(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.0.iter().take_while(|&&p| p >= j).count()
    }

    /// `λ'_1, …, λ'_width`, zero padded.
    pub fn conj_padded(&self, width: usize) -> Vec<usize> {
        (1..=width).map(|j| self.conj_part(j)).collect()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        j >= 1 && j <= self.part(i)
    }

    /// Dominance order `self ⊵ other` for partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Comma separated parts; the empty partition prints as nothing.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, p) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Shape(format!("bad part `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` with parts at most `max_part` and at most `max_len`
/// parts, in lexicographically decreasing order.
pub fn partitions_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    fn go(
        rest: usize,
        max_part: usize,
        max_len: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

pub fn partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, n)
}

/// Partitions `μ ⊂ λ` with `|μ| = size`.
pub fn subpartitions(outer: &Partition, size: usize) -> Vec<Partition> {
    fn go(
        outer: &Partition,
        row: usize,
        rest: usize,
        cap: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if row > outer.len() {
            return;
        }
        let hi = cap.min(outer.part(row)).min(rest);
        for p in (1..=hi).rev() {
            cur.push(p);
            go(outer, row + 1, rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 1, size, usize::MAX, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Shape(format!(
                "({inner}) is not contained in ({outer})"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of columns, `λ_1`.
    pub fn width(&self) -> usize {
        self.outer.first()
    }

    /// Cells in column-major order: columns left to right, top to bottom.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        ColumnDiagram::of_skew(self).cells()
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A skew shape `λ/μ` with a wrap shift `d` inside the validity window
/// `max(λ'_1 − λ'_{λ_1}, μ'_1 − μ'_{λ_1}) ≤ d ≤ λ'_1`.
///
/// The empty shape is allowed only as `∅/∅/0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylindricShape {
    skew: SkewShape,
    d: usize,
}

impl CylindricShape {
    pub fn new(outer: Partition, inner: Partition, d: usize) -> Result<Self> {
        let skew = SkewShape::new(outer, inner)?;
        let (lo, hi) = Self::window(&skew);
        if d < lo || d > hi {
            return Err(Error::Shape(format!(
                "shift {d} outside the window [{lo}, {hi}] for {}/{}",
                skew.outer, skew.inner
            )));
        }
        Ok(CylindricShape { skew, d })
    }

    /// Valid shifts `[lo, hi]` for a skew shape (with μ' zero padded).
    pub fn window(skew: &SkewShape) -> (usize, usize) {
        let l = skew.width();
        if l == 0 {
            return (0, 0);
        }
        let (lam, mu) = (&skew.outer, &skew.inner);
        let lo = (lam.conj_part(1) - lam.conj_part(l)).max(mu.conj_part(1) - mu.conj_part(l));
        (lo, lam.conj_part(1))
    }

    pub fn empty() -> Self {
        CylindricShape {
            skew: SkewShape::straight(Partition::empty()),
            d: 0,
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.skew.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.skew.inner
    }

    pub fn shift(&self) -> usize {
        self.d
    }

    pub fn skew(&self) -> &SkewShape {
        &self.skew
    }

    pub fn size(&self) -> usize {
        self.skew.size()
    }

    pub fn width(&self) -> usize {
        self.skew.width()
    }

    /// `λ/∅/λ'_1`, whose cylindric tableaux are the ordinary ones.
    pub fn straight(outer: Partition) -> Self {
        let d = outer.conj_part(1);
        CylindricShape {
            skew: SkewShape::straight(outer),
            d,
        }
    }

    /// Column diagram of `T^d`.
    pub fn glued(&self) -> ColumnDiagram {
        glue_d(&self.skew, self.d)
    }
}

impl fmt::Debug for CylindricShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The shape string syntax `λ1,λ2,…/μ1,μ2,…/d`.
impl fmt::Display for CylindricShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.skew.outer, self.skew.inner, self.d)
    }
}

impl FromStr for CylindricShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.trim().split('/').collect();
        let [outer, inner, d] = fields[..] else {
            return Err(Error::Shape(format!("expected `outer/inner/d`, got `{s}`")));
        };
        let d = d
            .trim()
            .parse()
            .map_err(|_| Error::Shape(format!("bad shift `{}`", d.trim())))?;
        CylindricShape::new(outer.parse()?, inner.parse()?, d)
    }
}

/// `col(α, β)`: column `j` holds the rows `β_j < i ≤ α_j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColumnDiagram {
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

impl ColumnDiagram {
    /// `beta` may be shorter than `alpha`; it is zero padded.
    pub fn new(alpha: Vec<usize>, mut beta: Vec<usize>) -> Result<Self> {
        if beta.len() > alpha.len() {
            return Err(Error::Shape(format!("β {beta:?} longer than α {alpha:?}")));
        }
        beta.resize(alpha.len(), 0);
        if alpha.iter().zip(&beta).any(|(a, b)| b > a) {
            return Err(Error::Shape(format!("β {beta:?} exceeds α {alpha:?}")));
        }
        Ok(ColumnDiagram { alpha, beta })
    }

    pub fn of_skew(shape: &SkewShape) -> Self {
        let l = shape.width();
        ColumnDiagram {
            alpha: shape.outer.conj_padded(l),
            beta: shape.inner.conj_padded(l),
        }
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn num_columns(&self) -> usize {
        self.alpha.len()
    }

    /// Number of cells in 1-based column `j`.
    pub fn column_len(&self, j: usize) -> usize {
        self.alpha[j - 1] - self.beta[j - 1]
    }

    pub fn cell_count(&self) -> usize {
        self.alpha.iter().zip(&self.beta).map(|(a, b)| a - b).sum()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        j >= 1 && j <= self.alpha.len() && i > self.beta[j - 1] && i <= self.alpha[j - 1]
    }

    /// Cells in column-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.cell_count());
        for (j, (&a, &b)) in self.alpha.iter().zip(&self.beta).enumerate() {
            out.extend((b + 1..=a).map(|i| (i, j + 1)));
        }
        out
    }

    /// `col(ᾱ, β̄)` with `ᾱ = (α_1+d, …, α_l+d, α_1)`, `β̄ = (β_1+d, …, β_l+d, β_1)`:
    /// the first column is copied to the right, shifted up `d` cells.
    pub fn glue(&self, d: usize) -> ColumnDiagram {
        if self.alpha.is_empty() {
            return self.clone();
        }
        let mut alpha: Vec<usize> = self.alpha.iter().map(|a| a + d).collect();
        let mut beta: Vec<usize> = self.beta.iter().map(|b| b + d).collect();
        alpha.push(self.alpha[0]);
        beta.push(self.beta[0]);
        ColumnDiagram { alpha, beta }
    }
}

/// The column diagram of `T^d` for a filling `T` of `λ/μ`.
pub fn glue_d(shape: &SkewShape, d: usize) -> ColumnDiagram {
    ColumnDiagram::of_skew(shape).glue(d)
}

/// A cylindric shape `ν/η/m` in Gessel–Krattenthaler notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkShape {
    pub nu: Partition,
    pub eta: Partition,
    pub m: usize,
}

/// `ν_i = λ_i + λ_{i+d} + λ_{i+2d} + ⋯` for `i = 1..d`, `η = μ`, `m = λ_1`.
pub fn to_gessel_krattenthaler(cs: &CylindricShape) -> Result<GkShape> {
    let d = cs.shift();
    if d == 0 {
        return Err(Error::Shift);
    }
    let lam = cs.outer();
    let nu: Vec<usize> = (1..=d)
        .map(|i| (i..=lam.len()).step_by(d).map(|r| lam.part(r)).sum())
        .collect();
    Ok(GkShape {
        nu: Partition::new(nu)?,
        eta: cs.inner().clone(),
        m: lam.first(),
    })
}

/// A cylindric shape `ν/m/θ` with parameters `k` and `n` in
/// Postnikov–McNamara notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmShape {
    pub nu: Partition,
    pub m: usize,
    pub theta: Partition,
    pub k: usize,
    pub n: usize,
}

pub fn to_postnikov_mcnamara(cs: &CylindricShape) -> Result<PmShape> {
    let d = cs.shift();
    if d == 0 {
        return Err(Error::Shift);
    }
    let n = cs.outer().first() + d;
    let mut nu = cs.outer().clone();
    let mut m = 0;
    while nu.len() > d {
        nu = remove_bottom_ribbon(&nu, n).ok_or_else(|| Error::Ribbon {
            shape: format!("({nu})"),
            n,
            step: m + 1,
        })?;
        m += 1;
    }
    Ok(PmShape {
        nu,
        m,
        theta: cs.inner().clone(),
        k: d,
        n,
    })
}

/// Strips the `n`-cell border strip that starts at the first cell of the last
/// row and follows the rim up and to the right. `None` if the rim runs out or
/// the remainder is not a partition.
pub fn remove_bottom_ribbon(lam: &Partition, n: usize) -> Option<Partition> {
    if lam.is_empty() || n == 0 {
        return None;
    }
    let mut rows = lam.parts().to_vec();
    let (mut i, mut j) = (lam.len(), 1);
    let mut removed = vec![0usize; rows.len() + 1];
    for step in 0..n {
        removed[i] += 1;
        if step + 1 == n {
            break;
        }
        if lam.contains_cell(i, j + 1) {
            j += 1;
        } else if i > 1 {
            i -= 1;
        } else {
            return None;
        }
    }
    // rows below the final one are entered at the left and left upward from
    // their last cell, so only the final row can lose a non-suffix
    if j != lam.part(i) {
        return None;
    }
    for (r, cnt) in removed.iter().enumerate().skip(1) {
        rows[r - 1] -= cnt;
    }
    Partition::new(rows).ok()
}

/// Every cylindric shape with `|λ/μ| = size`, `λ ≠ μ`, `λ_1 ≤ size` and
/// `ℓ(λ) ≤ max_parts`, and every valid shift.
pub fn enumerate_cylindric_shapes(size: usize, max_parts: usize) -> Result<Vec<CylindricShape>> {
    guard("enumerate_cylindric_shapes", size, SHAPE_ENUM_LIMIT)?;
    let mut out = Vec::new();
    for skew in enumerate_skew_shapes(size, max_parts)? {
        let (lo, hi) = CylindricShape::window(&skew);
        for d in lo..=hi {
            out.push(CylindricShape {
                skew: skew.clone(),
                d,
            });
        }
    }
    Ok(out)
}

/// Every skew shape with `|λ/μ| = size ≥ 1`, `λ_1 ≤ size`, `ℓ(λ) ≤ max_parts`.
pub fn enumerate_skew_shapes(size: usize, max_parts: usize) -> Result<Vec<SkewShape>> {
    guard("enumerate_skew_shapes", size, SHAPE_ENUM_LIMIT)?;
    let mut out = Vec::new();
    if size == 0 {
        return Ok(out);
    }
    let max_total = size * max_parts;
    for total in size..=max_total {
        for outer in partitions_bounded(total, size, max_parts) {
            for inner in subpartitions(&outer, total - size) {
                out.push(SkewShape {
                    outer: outer.clone(),
                    inner,
                });
            }
        }
    }
    Ok(out)
}
