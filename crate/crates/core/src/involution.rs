//! Intersecting columns of P-arrays, the swap operations and the
//! sign-reversing involution `Φ` on arrays whose glued form is not a
//! P-tableau.
//!
//! Column and row indices are 1-based; permutations are stored in one-line
//! notation with values `1..=l`.

use std::fmt;
use std::ops::RangeInclusive;

use sha2::{Digest, Sha256};

use crate::error::{guard, Error, Result};
use crate::poset::Poset;
use crate::shapes::{ColumnDiagram, CylindricShape, Partition};
use crate::tableaux::{enum_p_arrays, is_p_tableau, PFilling, Slot};
use crate::upoly::zero_sum_tuples;

/// Largest `λ_1` accepted by [`enumerate_b`].
pub const B_WIDTH_LIMIT: usize = 4;
/// Largest poset accepted by [`enumerate_b`].
pub const B_POSET_LIMIT: usize = 5;

/// A permutation `π` and shift vector `k` indexing the column heights
/// `π_d^k(λ)_i = k_i(λ_1 + d) + λ'_{π(i)} + i − π(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ShiftedColumns {
    pi: Vec<usize>,
    k: Vec<i64>,
    lam: Partition,
    d: usize,
}

impl ShiftedColumns {
    pub fn new(pi: Vec<usize>, k: Vec<i64>, lam: Partition, d: usize) -> Result<Self> {
        let l = lam.first();
        let mut seen = vec![false; l + 1];
        let bijective = pi.len() == l
            && pi
                .iter()
                .all(|&x| (1..=l).contains(&x) && !std::mem::replace(&mut seen[x], true));
        if !bijective {
            return Err(Error::Shape(format!(
                "{pi:?} is not a permutation of 1..={l}"
            )));
        }
        if k.len() != l || k.iter().sum::<i64>() != 0 {
            return Err(Error::Shape(format!(
                "{k:?} is not a zero-sum vector of length {l}"
            )));
        }
        Ok(ShiftedColumns { pi, k, lam, d })
    }

    pub fn identity(lam: Partition, d: usize) -> Self {
        let l = lam.first();
        ShiftedColumns {
            pi: (1..=l).collect(),
            k: vec![0; l],
            lam,
            d,
        }
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn k(&self) -> &[i64] {
        &self.k
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn shift(&self) -> usize {
        self.d
    }

    pub fn width(&self) -> usize {
        self.pi.len()
    }

    pub fn is_identity(&self) -> bool {
        self.pi.iter().enumerate().all(|(i, &x)| x == i + 1) && self.k.iter().all(|&x| x == 0)
    }

    /// `+1` or `-1`, the sign of `π`.
    pub fn sign(&self) -> i32 {
        let inversions = (0..self.pi.len())
            .flat_map(|a| (a + 1..self.pi.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| self.pi[a] > self.pi[b])
            .count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn period(&self) -> i64 {
        (self.lam.first() + self.d) as i64
    }
}

impl fmt::Debug for ShiftedColumns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(pi={:?}, k={:?}, lam={:?}, d={})",
            self.pi, self.k, self.lam, self.d
        )
    }
}

/// The vector `π_d^k(λ)`.
pub fn shifted_heights(sc: &ShiftedColumns) -> Vec<i64> {
    (1..=sc.width())
        .map(|i| {
            let pi = sc.pi[i - 1];
            sc.k[i - 1] * sc.period() + sc.lam.conj_part(pi) as i64 + i as i64 - pi as i64
        })
        .collect()
}

/// `col(π_d^k(λ), μ')`, or `None` when some height is below `μ'_i`.
pub fn shifted_diagram(sc: &ShiftedColumns, mu: &Partition) -> Option<ColumnDiagram> {
    let beta = mu.conj_padded(sc.width());
    let alpha: Option<Vec<usize>> = shifted_heights(sc)
        .iter()
        .zip(&beta)
        .map(|(&h, &b)| usize::try_from(h).ok().filter(|&h| h >= b))
        .collect();
    ColumnDiagram::new(alpha?, beta).ok()
}

/// An element `(π, k, A)` of `B̃`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BTriple {
    sc: ShiftedColumns,
    mu: Partition,
    arr: PFilling,
}

impl BTriple {
    pub fn new(sc: ShiftedColumns, mu: Partition, arr: PFilling, p: &Poset) -> Result<Self> {
        let fits = shifted_diagram(&sc, &mu).is_some_and(|cd| &cd == arr.diagram());
        if !fits || !crate::tableaux::is_p_array(&arr, p) {
            return Err(Error::Shape(format!(
                "{arr:?} is not a P-array on col(π_d^k(λ), μ')"
            )));
        }
        Ok(BTriple { sc, mu, arr })
    }

    pub fn columns(&self) -> &ShiftedColumns {
        &self.sc
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn array(&self) -> &PFilling {
        &self.arr
    }

    pub fn sign(&self) -> i32 {
        self.sc.sign()
    }

    pub fn glued(&self) -> PFilling {
        self.arr.glue(self.sc.d)
    }

    /// True when `A^d` is not a P-tableau.
    pub fn in_b(&self, p: &Poset) -> bool {
        !is_p_tableau(&self.glued(), p)
    }

    /// Stable one-line serialization.
    pub fn key(&self) -> String {
        format!(
            "pi={} k={} alpha={} beta={} A={}",
            compact(&self.sc.pi),
            compact(&self.sc.k),
            compact(self.arr.diagram().alpha()),
            compact(self.arr.diagram().beta()),
            compact(self.arr.columns())
        )
    }

    /// First 16 hex digits of the SHA-256 of [`BTriple::key`].
    pub fn digest(&self) -> String {
        hex::encode(&Sha256::digest(self.key().as_bytes())[..8])
    }
}

impl fmt::Debug for BTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BTriple{{{}}}", self.key())
    }
}

fn compact<T: fmt::Debug + ?Sized>(v: &T) -> String {
    format!("{v:?}").replace(' ', "")
}

/// An intersection point `a_{m,j}` of columns `i < j` with its witness
/// `a_{w,i}`, `w = m − j + i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Intersection {
    pub i: usize,
    pub j: usize,
    pub m: usize,
    pub w: usize,
}

fn intersections_between(arr: &PFilling, i: usize, j: usize, p: &Poset) -> Vec<Intersection> {
    let (alpha, beta) = (arr.diagram().alpha(), arr.diagram().beta());
    let mut out = Vec::new();
    for m in beta[j - 1] + 1..=alpha[j - 1] {
        let w = m as i64 - j as i64 + i as i64 + 1;
        if w <= beta[i - 1] as i64 {
            continue;
        }
        let x = arr.get(m, j).expect("row inside column");
        let hit = match arr.slot(w, i) {
            Slot::Empty => true,
            Slot::Entry(y) => p.gt(y, x),
            Slot::Above => false,
        };
        if hit {
            out.push(Intersection {
                i,
                j,
                m,
                w: w as usize,
            });
        }
    }
    out
}

/// Every intersection point of every pair of columns, ordered by `(i, j, m)`.
pub fn find_intersections(arr: &PFilling, p: &Poset) -> Vec<Intersection> {
    let l = arr.num_columns();
    (1..=l)
        .flat_map(|i| (i + 1..=l).map(move |j| (i, j)))
        .flat_map(|(i, j)| intersections_between(arr, i, j, p))
        .collect()
}

/// True when some adjacent pair of columns intersects.
pub fn has_adjacent_intersection(arr: &PFilling, p: &Poset) -> bool {
    (1..arr.num_columns()).any(|i| !intersections_between(arr, i, i + 1, p).is_empty())
}

/// The `P`-minimal intersection point between columns `i` and `j`. Points
/// of one pair lie in one column, a chain, so this is the topmost.
fn minimal_between(arr: &PFilling, i: usize, j: usize, p: &Poset) -> Result<Intersection> {
    if i == 0 || i >= j || j > arr.num_columns() {
        return Err(Error::NoIntersection { i, j });
    }
    intersections_between(arr, i, j, p)
        .into_iter()
        .next()
        .ok_or(Error::NoIntersection { i, j })
}

/// Replaces columns `a` and `b`: column `a` keeps its first `keep_a` entries
/// and receives `tail_a`, and likewise for `b`. Top gaps stay fixed.
fn rebuild(
    arr: &PFilling,
    (a, keep_a, tail_a): (usize, usize, &[usize]),
    (b, keep_b, tail_b): (usize, usize, &[usize]),
) -> PFilling {
    let mut columns = arr.columns().to_vec();
    let col_a: Vec<usize> = arr.column(a)[..keep_a]
        .iter()
        .chain(tail_a)
        .copied()
        .collect();
    let col_b: Vec<usize> = arr.column(b)[..keep_b]
        .iter()
        .chain(tail_b)
        .copied()
        .collect();
    columns[a - 1] = col_a;
    columns[b - 1] = col_b;
    let beta = arr.diagram().beta().to_vec();
    let alpha = columns
        .iter()
        .zip(&beta)
        .map(|(c, b)| c.len() + b)
        .collect();
    let diagram = ColumnDiagram::new(alpha, beta).expect("heights stay above the gaps");
    PFilling::new(diagram, columns).expect("columns sized to the diagram")
}

/// Exchanges the tails of columns `i` and `j` about their `P`-minimal
/// intersection point `a_{m,j}` and its witness `a_{w,i}`: column `i` keeps
/// rows `< w` and receives `{a_{r,j} : r > m}`, column `j` keeps rows `≤ m`
/// and receives `{a_{r,i} : r ≥ w}`.
pub fn swap(arr: &PFilling, i: usize, j: usize, p: &Poset) -> Result<PFilling> {
    let pt = minimal_between(arr, i, j, p)?;
    let beta = arr.diagram().beta();
    let keep_i = (pt.w - 1 - beta[i - 1]).min(arr.column(i).len());
    let keep_j = pt.m - beta[j - 1];
    let right = &arr.column(j)[keep_j..];
    let left = &arr.column(i)[keep_i..];
    Ok(rebuild(arr, (i, keep_i, right), (j, keep_j, left)))
}

/// The swap at columns `i < j ≤ l + 1` of `A^d`, performed on `A`. For
/// `j = l + 1` the glued column is the first column of `A`, so the tail of
/// column 1 moves to column `i` and the tail of column `i` moves to column 1.
pub fn cylindric_swap(arr: &PFilling, i: usize, j: usize, d: usize, p: &Poset) -> Result<PFilling> {
    let l = arr.num_columns();
    let beta = arr.diagram().beta();
    if l > 0 && beta[0] > beta[l - 1] + d {
        return Err(Error::Precondition(format!(
            "cylindric swap needs beta_1 - beta_l <= d, got {} - {} > {d}",
            beta[0],
            beta[l - 1]
        )));
    }
    if j <= l {
        return swap(arr, i, j, p);
    }
    if j != l + 1 {
        return Err(Error::NoIntersection { i, j });
    }
    let pt = minimal_between(&arr.glue(d), i, j, p)?;
    let keep_i = (pt.w - d - 1 - beta[i - 1]).min(arr.column(i).len());
    let keep_1 = pt.m - beta[0];
    let right = &arr.column(1)[keep_1..];
    let left = &arr.column(i)[keep_i..];
    Ok(rebuild(arr, (i, keep_i, right), (1, keep_1, left)))
}

/// One application of `Φ`, with the intersection point that drove it.
#[derive(Clone, Debug)]
pub struct PhiStep {
    /// The rightmost `P`-minimal intersection point of `A^d` and the
    /// rightmost witness column, in glued coordinates.
    pub point: Intersection,
    /// True when another `P`-minimal point shared the chosen column.
    pub tie: bool,
    pub image: BTriple,
}

/// `Φ(π, k, A)`: swap at the rightmost `P`-minimal intersection point of
/// `A^d` and its rightmost witness column.
pub fn phi_step(t: &BTriple, p: &Poset) -> Result<PhiStep> {
    let d = t.sc.d;
    let glued = t.glued();
    if is_p_tableau(&glued, p) {
        return Err(Error::NotInB);
    }
    let points = find_intersections(&glued, p);
    let entry = |pt: &Intersection| {
        glued
            .get(pt.m, pt.j)
            .expect("intersection points are entries")
    };
    let minimal: Vec<&Intersection> = points
        .iter()
        .filter(|a| !points.iter().any(|b| p.lt(entry(b), entry(a))))
        .collect();
    let j = minimal.iter().map(|pt| pt.j).max().ok_or(Error::NotInB)?;
    let rows: Vec<usize> = minimal
        .iter()
        .filter(|pt| pt.j == j)
        .map(|pt| pt.m)
        .collect();
    let m = *rows.iter().min().expect("column has a point");
    let tie = rows.iter().any(|&r| r != m);
    let point = **minimal
        .iter()
        .filter(|pt| pt.j == j && pt.m == m)
        .max_by_key(|pt| pt.i)
        .expect("point has a witness");

    let arr = cylindric_swap(&t.arr, point.i, point.j, d, p)?;
    let l = t.sc.width();
    let mut pi = t.sc.pi.clone();
    let mut k = t.sc.k.clone();
    if point.j <= l {
        pi.swap(point.i - 1, point.j - 1);
        k.swap(point.i - 1, point.j - 1);
    } else {
        pi.swap(0, point.i - 1);
        let (k1, ki) = (k[0], k[point.i - 1]);
        k[0] = ki + 1;
        k[point.i - 1] = k1 - 1;
    }
    let sc = ShiftedColumns {
        pi,
        k,
        lam: t.sc.lam.clone(),
        d,
    };
    let image = BTriple {
        sc,
        mu: t.mu.clone(),
        arr,
    };
    Ok(PhiStep { point, tie, image })
}

pub fn phi(t: &BTriple, p: &Poset) -> Result<BTriple> {
    phi_step(t, p).map(|s| s.image)
}

/// Triples of `B̃` for one cylindric shape, split by membership in `B`.
#[derive(Clone, Debug, Default)]
pub struct BEnumeration {
    /// Triples whose glued array is not a P-tableau.
    pub b: Vec<BTriple>,
    /// Triples whose glued array is a P-tableau.
    pub rest: Vec<BTriple>,
    /// True when `kbound` cut off shift vectors that could carry P-arrays.
    pub truncated: bool,
}

/// Range of `k_i` for which column `i` of `col(π_d^k(λ), μ')` has a length
/// between 0 and `h`.
fn column_k_range(
    lam: &Partition,
    d: usize,
    mu: &Partition,
    pi_i: usize,
    i: usize,
    h: usize,
) -> RangeInclusive<i64> {
    let period = (lam.first() + d) as i64;
    let c = lam.conj_part(pi_i) as i64 + i as i64 - pi_i as i64 - mu.conj_part(i) as i64;
    -c.div_euclid(period)..=(h as i64 - c).div_euclid(period)
}

fn permutations(l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=l).collect();
    loop {
        out.push(cur.clone());
        let Some(a) = (1..cur.len()).rev().find(|&a| cur[a - 1] < cur[a]) else {
            return out;
        };
        let b = (a..cur.len())
            .rev()
            .find(|&b| cur[b] > cur[a - 1])
            .expect("pivot");
        cur.swap(a - 1, b);
        cur[a..].reverse();
    }
}

/// All of `B̃` for `cs` with `|k_i| ≤ kbound`, split into `B` and its
/// complement. Shift vectors are restricted per column to those giving
/// column lengths in `[0, h]`, outside of which there are no P-arrays.
pub fn enumerate_b(cs: &CylindricShape, p: &Poset, kbound: i64) -> Result<BEnumeration> {
    let l = cs.outer().first();
    guard("enumerate_b width", l, B_WIDTH_LIMIT)?;
    guard("enumerate_b poset", p.len(), B_POSET_LIMIT)?;
    let h = p.longest_chain();
    let mut out = BEnumeration::default();
    for pi in permutations(l) {
        let ranges: Vec<RangeInclusive<i64>> = (1..=l)
            .map(|i| {
                let r = column_k_range(cs.outer(), cs.shift(), cs.inner(), pi[i - 1], i, h);
                if !r.is_empty() && (*r.start() < -kbound || *r.end() > kbound) {
                    out.truncated = true;
                }
                (*r.start()).max(-kbound)..=(*r.end()).min(kbound)
            })
            .collect();
        for k in zero_sum_tuples(&ranges) {
            let sc = ShiftedColumns {
                pi: pi.clone(),
                k,
                lam: cs.outer().clone(),
                d: cs.shift(),
            };
            let Some(cd) = shifted_diagram(&sc, cs.inner()) else {
                continue;
            };
            for arr in enum_p_arrays(&cd, p)? {
                let t = BTriple {
                    sc: sc.clone(),
                    mu: cs.inner().clone(),
                    arr,
                };
                if t.in_b(p) {
                    out.b.push(t);
                } else {
                    out.rest.push(t);
                }
            }
        }
    }
    Ok(out)
}

/// One audit line for `t ∈ B`: the triple, the cell driving `Φ`, its witness
/// and the digest of `Φ(t)`.
pub fn trace_line(t: &BTriple, p: &Poset) -> Result<String> {
    let step = phi_step(t, p)?;
    let pt = step.point;
    Ok(format!(
        "{} point=({},{}) witness=({},{}) partner={}",
        t.key(),
        pt.m,
        pt.j,
        pt.w,
        pt.i,
        step.image.digest()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// `i <_P j` iff `j − i > 1`, on `0..n`.
    fn gap_poset(n: usize) -> Poset {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 2..n).map(move |b| (a, b)))
            .collect();
        Poset::from_relations(n, &pairs).unwrap()
    }

    fn rows(r: &[&str]) -> PFilling {
        PFilling::from_rows(r).unwrap().map_entries(|v| v - 1)
    }

    fn example_a() -> PFilling {
        rows(&[". 2 3", "1 4 5", "4 9 7", "6"])
    }

    #[test]
    fn heights() {
        let id = ShiftedColumns::identity(p(&[3, 2]), 0);
        assert_eq!(shifted_heights(&id), vec![2, 2, 1]);
        let sc = ShiftedColumns::new(vec![2, 1], vec![0, 0], p(&[2, 2]), 0).unwrap();
        assert_eq!(shifted_heights(&sc), vec![1, 3]);
        assert_eq!(sc.sign(), -1);
        let low = ShiftedColumns::new(vec![1, 2], vec![-3, 3], p(&[2, 2]), 0).unwrap();
        assert!(shifted_heights(&low)[0] < 0);
        assert!(shifted_diagram(&low, &Partition::empty()).is_none());
        assert!(ShiftedColumns::new(vec![1, 1], vec![0, 0], p(&[2]), 0).is_err());
        assert!(ShiftedColumns::new(vec![1, 2], vec![1, 0], p(&[2]), 0).is_err());
    }

    #[test]
    fn example_intersections() {
        let pos = gap_poset(9);
        let glued = example_a().glue(1);
        let rendered = glued.map_entries(|v| v + 1).to_string();
        assert_eq!(rendered, ". 2 3 1\n1 4 5 4\n4 9 7 6\n6");
        let pts = find_intersections(&glued, &pos);
        let mut cells: Vec<(usize, usize)> = pts.iter().map(|pt| (pt.m, pt.j)).collect();
        cells.sort();
        cells.dedup();
        assert_eq!(cells, vec![(2, 4), (4, 3)]);
        let values: Vec<usize> = cells
            .iter()
            .map(|&(m, j)| glued.get(m, j).unwrap() + 1)
            .collect();
        assert_eq!(values, vec![1, 7]);
    }

    #[test]
    fn example_swaps() {
        let pos = gap_poset(9);
        let a = example_a();
        let s23 = cylindric_swap(&a, 2, 3, 1, &pos).unwrap();
        assert_eq!(s23, rows(&[". 2 3", "1 4 5", "4 . 7", "6 . 9"]));
        assert_eq!(s23, swap(&a, 2, 3, &pos).unwrap());
        let s34 = cylindric_swap(&a, 3, 4, 1, &pos).unwrap();
        assert_eq!(s34, rows(&[". 2 4", "1 4 6", "3 9", "5", "7"]));
        assert_eq!(s34.u_weight(9), a.u_weight(9));
        assert!(matches!(
            swap(&a, 1, 2, &pos),
            Err(Error::NoIntersection { i: 1, j: 2 })
        ));
        assert!(matches!(
            cylindric_swap(&a, 1, 4, 1, &pos),
            Err(Error::NoIntersection { .. })
        ));
    }

    #[test]
    fn swap_precondition() {
        let a = rows(&[". 1", ". 2", "1 3"]);
        let pos = Poset::chain(3);
        assert!(matches!(
            cylindric_swap(&a, 1, 2, 1, &pos),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn condition_one() {
        let a = rows(&["1 1", ". 2"]);
        let pts = find_intersections(&a, &Poset::chain(2));
        assert_eq!(
            pts,
            vec![Intersection {
                i: 1,
                j: 2,
                m: 2,
                w: 2
            }]
        );
    }

    #[test]
    fn tableaux_have_no_intersections() {
        let pos = Poset::chain(7);
        let t = rows(&[". . 1 2 3", ". 1 3 5 5", "2 2 4 6 6", "3 4 5 7"]);
        assert!(find_intersections(&t, &pos).is_empty());
        assert!(find_intersections(&t.glue(3), &pos).is_empty());
        assert!(!find_intersections(&t.glue(2), &pos).is_empty());
    }

    #[test]
    fn phi_on_small_shape() {
        let pos = Poset::chain(3);
        let cs = CylindricShape::new(p(&[2, 1]), Partition::empty(), 1).unwrap();
        let all = enumerate_b(&cs, &pos, 3).unwrap();
        assert!(!all.truncated);
        assert!(!all.b.is_empty());
        for t in &all.b {
            let image = phi(t, &pos).unwrap();
            assert_eq!(image.sign(), -t.sign());
            assert_eq!(image.array().u_weight(3), t.array().u_weight(3));
            assert_eq!(&phi(&image, &pos).unwrap(), t);
        }
        for t in &all.rest {
            assert!(t.columns().is_identity());
            assert!(matches!(phi(t, &pos), Err(Error::NotInB)));
        }
    }

    #[test]
    fn trace_lines_are_stable() {
        let pos = Poset::chain(2);
        let cs = CylindricShape::new(p(&[2]), Partition::empty(), 1).unwrap();
        let all = enumerate_b(&cs, &pos, 2).unwrap();
        let lines: Vec<String> = all.b.iter().map(|t| trace_line(t, &pos).unwrap()).collect();
        let again: Vec<String> = all.b.iter().map(|t| trace_line(t, &pos).unwrap()).collect();
        assert_eq!(lines, again);
        assert!(lines
            .iter()
            .all(|l| l.starts_with("pi=[") && l.contains(" partner=")));
        assert_eq!(all.b[0].digest().len(), 16);
    }

    #[test]
    fn guards() {
        let cs = CylindricShape::straight(p(&[5]));
        assert!(matches!(
            enumerate_b(&cs, &Poset::chain(2), 1),
            Err(Error::Size { .. })
        ));
    }
}
