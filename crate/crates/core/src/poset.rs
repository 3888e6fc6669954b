//! Finite posets on `0..n`, (3+1)-freeness and incomparability graphs.
//!
//! Relations are stored as a dense, transitively closed `n × n` matrix so that
//! every `<_P` test downstream is a single lookup.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{guard, Error, Result};

/// Largest `n` accepted by [`all_posets`].
pub const ALL_POSETS_LIMIT: usize = 7;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    lt: Vec<bool>,
}

impl Poset {
    /// Transitive closure of `pairs`, each `(a, b)` meaning `a <_P b`.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut lt = vec![false; n * n];
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::Index { index: x, n });
                }
            }
            lt[a * n + b] = true;
        }
        // Warshall
        for k in 0..n {
            for a in 0..n {
                if !lt[a * n + k] {
                    continue;
                }
                for b in 0..n {
                    if lt[k * n + b] {
                        lt[a * n + b] = true;
                    }
                }
            }
        }
        if let Some(a) = (0..n).find(|&a| lt[a * n + a]) {
            return Err(Error::Cycle(a));
        }
        Ok(Poset { n, lt })
    }

    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_relations(n, &pairs).expect("a chain is acyclic")
    }

    pub fn antichain(n: usize) -> Self {
        Poset {
            n,
            lt: vec![false; n * n],
        }
    }

    /// Elements of `other` are relabelled `self.len()..`.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let n = self.n + other.n;
        let mut lt = vec![false; n * n];
        for a in 0..self.n {
            for b in 0..self.n {
                lt[a * n + b] = self.lt(a, b);
            }
        }
        for a in 0..other.n {
            for b in 0..other.n {
                lt[(a + self.n) * n + b + self.n] = other.lt(a, b);
            }
        }
        Poset { n, lt }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a * self.n + b]
    }

    #[inline]
    pub fn gt(&self, a: usize, b: usize) -> bool {
        self.lt(b, a)
    }

    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b) || self.lt(b, a)
    }

    /// All strict relations `(a, b)` with `a <_P b`.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn comparable_pairs(&self) -> usize {
        self.lt.iter().filter(|&&x| x).count()
    }

    pub fn is_31_free(&self) -> bool {
        self.find_31().is_none()
    }

    /// A witness `([a, b, c], d)` with `a < b < c` and `d` incomparable to all three.
    pub fn find_31(&self) -> Option<([usize; 3], usize)> {
        let n = self.n;
        for d in 0..n {
            let free: Vec<usize> = (0..n).filter(|&x| !self.comparable(x, d)).collect();
            for &b in &free {
                let below = free.iter().find(|&&a| self.lt(a, b));
                let above = free.iter().find(|&&c| self.lt(b, c));
                if let (Some(&a), Some(&c)) = (below, above) {
                    return Some(([a, b, c], d));
                }
            }
        }
        None
    }

    /// Length of the longest chain; 0 for the empty poset.
    pub fn longest_chain(&self) -> usize {
        // a <_P b implies a has strictly fewer elements below it
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&a| (0..self.n).filter(|&x| self.lt(x, a)).count());
        let mut best = vec![0usize; self.n];
        for (idx, &b) in order.iter().enumerate() {
            best[b] = 1 + order[..idx]
                .iter()
                .filter(|&&a| self.lt(a, b))
                .map(|&a| best[a])
                .max()
                .unwrap_or(0);
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// All chains `i_1 <_P ⋯ <_P i_k`, listed bottom to top.
    pub fn chains(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        self.extend_chains(k, &mut cur, &mut out);
        out
    }

    fn extend_chains(&self, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..self.n {
            if cur.last().is_none_or(|&top| self.lt(top, x)) {
                cur.push(x);
                self.extend_chains(k, cur, out);
                cur.pop();
            }
        }
    }

    pub fn inc_graph(&self) -> IncGraph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                adj[a * n + b] = !self.comparable(a, b);
            }
        }
        IncGraph { n, adj }
    }

    /// Relabel by `perm`: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        let n = self.n;
        let mut lt = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                lt[perm[a] * n + perm[b]] = self.lt(a, b);
            }
        }
        Poset { n, lt }
    }

    /// Canonical labelling: the minimal relation string over every relabelling
    /// that orders elements by their refined structural colour.
    ///
    /// Returns the key and a permutation realising it.
    pub fn canonical_form(&self) -> (u64, Vec<usize>) {
        assert!(
            self.n <= 8,
            "canonical_form packs the relation into 64 bits"
        );
        let colors = self.refined_colors();
        let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (x, &c) in colors.iter().enumerate() {
            cells.entry(c).or_default().push(x);
        }
        let cells: Vec<Vec<usize>> = cells.into_values().collect();
        let mut best = (u64::MAX, Vec::new());
        let mut perm = vec![usize::MAX; self.n];
        self.search_labelings(&cells, 0, 0, &mut perm, &mut best);
        best
    }

    fn search_labelings(
        &self,
        cells: &[Vec<usize>],
        cell: usize,
        next_label: usize,
        perm: &mut Vec<usize>,
        best: &mut (u64, Vec<usize>),
    ) {
        let Some(members) = cells.get(cell) else {
            let key = self.key_under(perm);
            if key < best.0 {
                *best = (key, perm.clone());
            }
            return;
        };
        let mut open = members
            .iter()
            .filter(|&&x| perm[x] == usize::MAX)
            .peekable();
        if open.peek().is_none() {
            self.search_labelings(cells, cell + 1, next_label, perm, best);
            return;
        }
        for x in open.copied().collect::<Vec<_>>() {
            perm[x] = next_label;
            self.search_labelings(cells, cell, next_label + 1, perm, best);
            perm[x] = usize::MAX;
        }
    }

    fn key_under(&self, perm: &[usize]) -> u64 {
        let n = self.n;
        let mut key = 0u64;
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) {
                    let bit = perm[a] * n + perm[b];
                    key |= 1u64 << (63 - bit);
                }
            }
        }
        key
    }

    /// Colour refinement seeded by (down-set size, up-set size).
    fn refined_colors(&self) -> Vec<usize> {
        let n = self.n;
        let mut colors: Vec<usize> = {
            let sig: Vec<(usize, usize)> = (0..n)
                .map(|a| {
                    let down = (0..n).filter(|&x| self.lt(x, a)).count();
                    let up = (0..n).filter(|&x| self.lt(a, x)).count();
                    (down, up)
                })
                .collect();
            rank(&sig)
        };
        loop {
            let sig: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
                .map(|a| {
                    let mut down: Vec<usize> = (0..n)
                        .filter(|&x| self.lt(x, a))
                        .map(|x| colors[x])
                        .collect();
                    let mut up: Vec<usize> = (0..n)
                        .filter(|&x| self.lt(a, x))
                        .map(|x| colors[x])
                        .collect();
                    down.sort_unstable();
                    up.sort_unstable();
                    (colors[a], down, up)
                })
                .collect();
            let next = rank(&sig);
            let classes = |c: &[usize]| c.iter().collect::<std::collections::BTreeSet<_>>().len();
            if classes(&next) == classes(&colors) {
                return next;
            }
            colors = next;
        }
    }
}

fn rank<T: Ord + Clone>(sig: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = sig.to_vec();
    sorted.sort();
    sorted.dedup();
    sig.iter()
        .map(|s| sorted.binary_search(s).expect("present"))
        .collect()
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset({}; {:?})", self.n, self.cover_relations())
    }
}

impl Poset {
    /// Covering pairs of the Hasse diagram.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(a, b)| !(0..self.n).any(|c| self.lt(a, c) && self.lt(c, b)))
            .collect()
    }
}

/// Writes the text format read by [`Poset::from_str`], using cover relations.
impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (a, b) in self.cover_relations() {
            writeln!(f, "{a} < {b}")?;
        }
        Ok(())
    }
}

/// Parses the poset text format: the first line holds `n`; each later
/// non-empty line not starting with `#` reads `a < b`.
impl FromStr for Poset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut pairs = Vec::new();
        for (idx, raw) in s.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |msg: String| Error::Parse { line: line_no, msg };
            let Some(size) = n else {
                n = Some(
                    line.parse()
                        .map_err(|_| parse_err(format!("expected element count, got `{line}`")))?,
                );
                continue;
            };
            let (a, b) = line
                .split_once('<')
                .ok_or_else(|| parse_err(format!("expected `a < b`, got `{line}`")))?;
            let a: usize = a
                .trim()
                .parse()
                .map_err(|_| parse_err(format!("bad element `{}`", a.trim())))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|_| parse_err(format!("bad element `{}`", b.trim())))?;
            if a >= size || b >= size {
                return Err(parse_err(format!("element out of range 0..{size}")));
            }
            pairs.push((a, b));
        }
        let n = n.ok_or(Error::Parse {
            line: 1,
            msg: "missing element count".into(),
        })?;
        Poset::from_relations(n, &pairs)
    }
}

/// The incomparability graph of a poset, or any simple graph on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct IncGraph {
    n: usize,
    adj: Vec<bool>,
}

impl IncGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![false; n * n];
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::Index { index: x, n });
                }
            }
            if a != b {
                adj[a * n + b] = true;
                adj[b * n + a] = true;
            }
        }
        Ok(IncGraph { n, adj })
    }

    pub fn complete(n: usize) -> Self {
        let mut adj = vec![true; n * n];
        for a in 0..n {
            adj[a * n + a] = false;
        }
        IncGraph { n, adj }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.n + b]
    }

    /// Edges `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.adjacent(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&b| self.adjacent(a, b))
    }
}

impl fmt::Debug for IncGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IncGraph({}; {:?})", self.n, self.edges())
    }
}

/// One representative per isomorphism class of `n`-element posets.
///
/// Posets are grown one maximal element at a time: every poset on `n`
/// elements arises from one on `n - 1` by adding a new element above a
/// down-closed set. Candidates are deduplicated by [`Poset::canonical_form`],
/// and each representative is returned in its canonical labelling, sorted by
/// canonical key.
pub fn all_posets(n: usize) -> Result<Vec<Poset>> {
    guard("all_posets", n, ALL_POSETS_LIMIT)?;
    let mut level = vec![Poset::antichain(0)];
    for size in 1..=n {
        let mut seen: BTreeMap<u64, Poset> = BTreeMap::new();
        for base in &level {
            let m = size - 1;
            for mask in 0u32..(1 << m) {
                let down_closed = (0..m)
                    .filter(|&x| mask >> x & 1 == 1)
                    .all(|x| (0..m).all(|y| !base.lt(y, x) || mask >> y & 1 == 1));
                if !down_closed {
                    continue;
                }
                let mut pairs = base.relations();
                pairs.extend((0..m).filter(|&x| mask >> x & 1 == 1).map(|x| (x, m)));
                let cand = Poset::from_relations(size, &pairs).expect("acyclic by construction");
                let (key, perm) = cand.canonical_form();
                seen.entry(key).or_insert_with(|| cand.relabel(&perm));
            }
        }
        level = seen.into_values().collect();
    }
    Ok(level)
}
