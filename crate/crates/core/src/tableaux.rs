//! Fillings of column diagrams by poset elements: P-arrays, P-tableaux and
//! cylindric P-tableaux.
//!
//! Enumeration walks cells column by column, top to bottom, trying poset
//! elements in index order, so every stream is deterministic.

use std::fmt;

use crate::error::{guard, Error, Result};
use crate::poset::Poset;
use crate::shapes::{ColumnDiagram, CylindricShape, SkewShape};
use crate::upoly::UMonomial;

/// Largest number of cells the enumerators accept.
pub const FILLING_LIMIT: usize = 12;

/// What sits at a position `(s, t)` relative to `col(α, β)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    /// `s ≤ β_t`: inside the top gap.
    Above,
    Entry(usize),
    /// `s > α_t`: below the column, "empty" in the intersection sense.
    Empty,
}

/// A map from the cells of a column diagram to poset elements, stored
/// column by column, top to bottom.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PFilling {
    diagram: ColumnDiagram,
    columns: Vec<Vec<usize>>,
}

impl PFilling {
    pub fn new(diagram: ColumnDiagram, columns: Vec<Vec<usize>>) -> Result<Self> {
        let fits = columns.len() == diagram.num_columns()
            && columns
                .iter()
                .enumerate()
                .all(|(j, col)| col.len() == diagram.column_len(j + 1));
        if !fits {
            return Err(Error::Shape(format!(
                "entries {columns:?} do not fill col({:?}, {:?})",
                diagram.alpha(),
                diagram.beta()
            )));
        }
        Ok(PFilling { diagram, columns })
    }

    /// Builds a filling from rows of whitespace separated tokens, `.` marking
    /// positions outside the diagram. Each column must be contiguous.
    pub fn from_rows(rows: &[&str]) -> Result<Self> {
        let grid: Vec<Vec<Option<usize>>> = rows
            .iter()
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| match tok {
                        "." => Ok(None),
                        _ => tok
                            .parse()
                            .map(Some)
                            .map_err(|_| Error::Shape(format!("bad entry `{tok}`"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let width = grid.iter().map(Vec::len).max().unwrap_or(0);
        let (mut alpha, mut beta, mut columns) = (Vec::new(), Vec::new(), Vec::new());
        for j in 0..width {
            let col: Vec<(usize, usize)> = grid
                .iter()
                .enumerate()
                .filter_map(|(i, row)| row.get(j).copied().flatten().map(|x| (i + 1, x)))
                .collect();
            let top = col.first().map_or(0, |c| c.0 - 1);
            if col.iter().enumerate().any(|(k, c)| c.0 != top + 1 + k) {
                return Err(Error::Shape(format!("column {} is not contiguous", j + 1)));
            }
            beta.push(top);
            alpha.push(top + col.len());
            columns.push(col.into_iter().map(|c| c.1).collect());
        }
        PFilling::new(ColumnDiagram::new(alpha, beta)?, columns)
    }

    /// Lays `entries` (column-major order) onto the diagram of a skew shape.
    pub fn from_skew(shape: &SkewShape, entries: &[usize]) -> Result<Self> {
        Self::from_cells(ColumnDiagram::of_skew(shape), entries)
    }

    pub fn from_cells(diagram: ColumnDiagram, entries: &[usize]) -> Result<Self> {
        if entries.len() != diagram.cell_count() {
            return Err(Error::Shape(format!(
                "{} entries for {} cells",
                entries.len(),
                diagram.cell_count()
            )));
        }
        let mut rest = entries;
        let columns = (1..=diagram.num_columns())
            .map(|j| {
                let (col, tail) = rest.split_at(diagram.column_len(j));
                rest = tail;
                col.to_vec()
            })
            .collect();
        Ok(PFilling { diagram, columns })
    }

    pub fn diagram(&self) -> &ColumnDiagram {
        &self.diagram
    }

    /// Entries of 1-based column `j`, top to bottom.
    pub fn column(&self, j: usize) -> &[usize] {
        &self.columns[j - 1]
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn cell_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Entries in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.columns.iter().flatten().copied()
    }

    pub fn slot(&self, s: i64, t: usize) -> Slot {
        let (alpha, beta) = (
            self.diagram.alpha()[t - 1] as i64,
            self.diagram.beta()[t - 1] as i64,
        );
        if s <= beta {
            Slot::Above
        } else if s <= alpha {
            Slot::Entry(self.columns[t - 1][(s - beta - 1) as usize])
        } else {
            Slot::Empty
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        match self.slot(i as i64, j) {
            Slot::Entry(x) => Some(x),
            _ => None,
        }
    }

    pub fn map_entries(&self, f: impl Fn(usize) -> usize) -> PFilling {
        PFilling {
            diagram: self.diagram.clone(),
            columns: self
                .columns
                .iter()
                .map(|c| c.iter().map(|&x| f(x)).collect())
                .collect(),
        }
    }

    /// `A^d`: the first column copied to the right of the last, shifted up `d`.
    pub fn glue(&self, d: usize) -> PFilling {
        let mut columns = self.columns.clone();
        if let Some(first) = self.columns.first() {
            columns.push(first.clone());
        }
        PFilling {
            diagram: self.diagram.glue(d),
            columns,
        }
    }

    /// Exponent vector of `u^T` over a poset with `n` elements.
    pub fn u_weight(&self, n: usize) -> UMonomial {
        let mut m = UMonomial::one(n);
        for x in self.entries() {
            m.bump(x);
        }
        m
    }
}

impl fmt::Debug for PFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PFilling{:?}", self.columns)
    }
}

/// Rows top to bottom, entries space separated, `.` for positions left of or
/// between cells. Rendering starts at the topmost occupied row.
impl fmt::Display for PFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = &self.diagram;
        let occupied: Vec<usize> = (0..d.num_columns())
            .filter(|&j| d.alpha()[j] > d.beta()[j])
            .collect();
        let Some(top) = occupied.iter().map(|&j| d.beta()[j] + 1).min() else {
            return Ok(());
        };
        let bottom = occupied.iter().map(|&j| d.alpha()[j]).max().unwrap_or(0);
        for i in top..=bottom {
            if i > top {
                writeln!(f)?;
            }
            let last = (1..=d.num_columns()).rev().find(|&j| d.contains(i, j));
            let Some(last) = last else { continue };
            let row: Vec<String> = (1..=last)
                .map(|j| {
                    self.get(i, j)
                        .map_or_else(|| ".".to_string(), |x| x.to_string())
                })
                .collect();
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Strictly increasing in `<_P` down every column.
pub fn is_p_array(f: &PFilling, p: &Poset) -> bool {
    f.columns
        .iter()
        .all(|col| col.windows(2).all(|w| p.lt(w[0], w[1])))
}

/// A P-array of skew partition shape whose rows never strictly decrease in `P`.
pub fn is_p_tableau(f: &PFilling, p: &Poset) -> bool {
    let d = &f.diagram;
    let decreasing = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]);
    if !decreasing(d.alpha()) || !decreasing(d.beta()) || !is_p_array(f, p) {
        return false;
    }
    let bottom = d.alpha().iter().copied().max().unwrap_or(0);
    for i in 1..=bottom {
        let mut left: Option<usize> = None;
        for j in 1..=d.num_columns() {
            match f.get(i, j) {
                Some(x) => {
                    if left.is_some_and(|y| p.gt(y, x)) {
                        return false;
                    }
                    left = Some(x);
                }
                None => left = None,
            }
        }
    }
    true
}

/// `T^d` is a P-tableau, with `T` filling the skew shape of `cs`.
pub fn is_cylindric_p_tableau(f: &PFilling, cs: &CylindricShape, p: &Poset) -> bool {
    f.diagram == ColumnDiagram::of_skew(cs.skew()) && is_p_tableau(&f.glue(cs.shift()), p)
}

/// Every element of `P` appears exactly once.
pub fn is_standard(f: &PFilling, p: &Poset) -> bool {
    if f.cell_count() != p.len() {
        return false;
    }
    let mut seen = vec![false; p.len()];
    for x in f.entries() {
        if x >= p.len() || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    true
}

#[derive(Clone, Copy, Debug)]
enum Rel {
    /// The earlier cell is directly above: `earlier <_P this`.
    Below,
    /// The earlier cell is the left neighbour: not `earlier >_P this`.
    RightOf,
    /// The earlier cell is the right neighbour: not `this >_P earlier`.
    LeftOf,
}

/// Column-major backtracking over fillings of a column diagram subject to
/// pairwise constraints and an optional content budget.
struct Search<'a> {
    p: &'a Poset,
    diagram: ColumnDiagram,
    constraints: Vec<Vec<(usize, Rel)>>,
    budget: Option<Vec<usize>>,
    assign: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'a> Search<'a> {
    /// `wrap`: the shift `d` of a cylindric shape, adding the constraints
    /// between the last column and the shifted copy of the first.
    fn new(skew: &SkewShape, wrap: Option<usize>, p: &'a Poset) -> Self {
        let diagram = ColumnDiagram::of_skew(skew);
        let cells = diagram.cells();
        let index = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j));
        let l = diagram.num_columns();
        let mut constraints = vec![Vec::new(); cells.len()];
        for (k, &(i, j)) in cells.iter().enumerate() {
            if let Some(up) = index(i.wrapping_sub(1), j) {
                constraints[k].push((up, Rel::Below));
            }
            if j > 1 {
                if let Some(left) = index(i, j - 1) {
                    constraints[k].push((left, Rel::RightOf));
                }
            }
            if let (Some(d), true) = (wrap, j == l && l > 1) {
                if let Some(right) = index(i + d, 1) {
                    constraints[k].push((right, Rel::LeftOf));
                }
            }
        }
        Search {
            p,
            diagram,
            constraints,
            budget: None,
            assign: vec![0; cells.len()],
            started: false,
            done: false,
        }
    }

    fn with_budget(mut self, content: &[usize]) -> Self {
        let mut budget = content.to_vec();
        budget.resize(self.p.len(), 0);
        self.budget = Some(budget);
        self
    }

    fn fits(&self, k: usize, v: usize) -> bool {
        if self.budget.as_ref().is_some_and(|b| b[v] == 0) {
            return false;
        }
        self.constraints[k].iter().all(|&(other, rel)| {
            let w = self.assign[other];
            match rel {
                Rel::Below => self.p.lt(w, v),
                Rel::RightOf => !self.p.gt(w, v),
                Rel::LeftOf => !self.p.gt(v, w),
            }
        })
    }

    fn take(&mut self, v: usize) {
        if let Some(b) = self.budget.as_mut() {
            b[v] -= 1;
        }
    }

    fn release(&mut self, v: usize) {
        if let Some(b) = self.budget.as_mut() {
            b[v] += 1;
        }
    }

    /// Advances to the next complete assignment.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let len = self.assign.len();
        let n = self.p.len();
        if len == 0 {
            self.done = self.started;
            self.started = true;
            return !self.done;
        }
        let (mut k, mut from) = if self.started {
            let v = self.assign[len - 1];
            self.release(v);
            (len - 1, v + 1)
        } else {
            self.started = true;
            (0, 0)
        };
        loop {
            match (from..n).find(|&v| self.fits(k, v)) {
                Some(v) => {
                    self.assign[k] = v;
                    self.take(v);
                    if k + 1 == len {
                        return true;
                    }
                    k += 1;
                    from = 0;
                }
                None => {
                    if k == 0 {
                        self.done = true;
                        return false;
                    }
                    k -= 1;
                    let v = self.assign[k];
                    self.release(v);
                    from = v + 1;
                }
            }
        }
    }

    fn count(mut self) -> usize {
        let mut total = 0;
        while self.advance() {
            total += 1;
        }
        total
    }
}

/// Stream of fillings produced by backtracking.
pub struct Fillings<'a> {
    search: Search<'a>,
}

impl Iterator for Fillings<'_> {
    type Item = PFilling;

    fn next(&mut self) -> Option<PFilling> {
        if !self.search.advance() {
            return None;
        }
        let s = &self.search;
        Some(PFilling::from_cells(s.diagram.clone(), &s.assign).expect("sized to the diagram"))
    }
}

/// `SSYT_P(λ/μ)`.
pub fn enum_p_tableaux<'a>(shape: &SkewShape, p: &'a Poset) -> Result<Fillings<'a>> {
    guard("enum_p_tableaux", shape.size(), FILLING_LIMIT)?;
    Ok(Fillings {
        search: Search::new(shape, None, p),
    })
}

/// `CT_P(λ/μ/d)`: fillings `T` of `λ/μ` with `T^d` a P-tableau.
pub fn enum_cylindric_p_tableaux<'a>(cs: &CylindricShape, p: &'a Poset) -> Result<Fillings<'a>> {
    guard("enum_cylindric_p_tableaux", cs.size(), FILLING_LIMIT)?;
    Ok(Fillings {
        search: Search::new(cs.skew(), Some(cs.shift()), p),
    })
}

/// Number of cylindric P-tableaux whose content is exactly `content`
/// (`content[x]` copies of element `x`).
pub fn count_cylindric_with_content(
    cs: &CylindricShape,
    p: &Poset,
    content: &[usize],
) -> Result<usize> {
    guard("count_cylindric_with_content", cs.size(), FILLING_LIMIT)?;
    if content.iter().sum::<usize>() != cs.size() || content.len() > p.len() {
        return Ok(0);
    }
    Ok(Search::new(cs.skew(), Some(cs.shift()), p)
        .with_budget(content)
        .count())
}

/// Number of standard cylindric P-tableaux.
pub fn count_standard_cylindric(cs: &CylindricShape, p: &Poset) -> Result<usize> {
    count_cylindric_with_content(cs, p, &vec![1; p.len()])
}

/// Stream of `P-Array(α, β)`: each column independently runs over all chains
/// of its length.
pub struct PArrays {
    diagram: ColumnDiagram,
    chains: Vec<Vec<Vec<usize>>>,
    odometer: Vec<usize>,
    done: bool,
}

impl Iterator for PArrays {
    type Item = PFilling;

    fn next(&mut self) -> Option<PFilling> {
        if self.done {
            return None;
        }
        let columns: Vec<Vec<usize>> = self
            .odometer
            .iter()
            .zip(&self.chains)
            .map(|(&idx, ch)| ch[idx].clone())
            .collect();
        self.done = true;
        for (pos, ch) in self.odometer.iter_mut().zip(&self.chains).rev() {
            *pos += 1;
            if *pos < ch.len() {
                self.done = false;
                break;
            }
            *pos = 0;
        }
        Some(PFilling {
            diagram: self.diagram.clone(),
            columns,
        })
    }
}

pub fn enum_p_arrays(cd: &ColumnDiagram, p: &Poset) -> Result<PArrays> {
    guard("enum_p_arrays", cd.cell_count(), FILLING_LIMIT)?;
    let chains: Vec<Vec<Vec<usize>>> = (1..=cd.num_columns())
        .map(|j| p.chains(cd.column_len(j)))
        .collect();
    let done = chains.iter().any(Vec::is_empty);
    Ok(PArrays {
        diagram: cd.clone(),
        odometer: vec![0; chains.len()],
        chains,
        done,
    })
}
