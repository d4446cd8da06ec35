//! Young diagrams, the label sets `O(n,N)`, branching, and up-down paths.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeffs::{Rational, Ring};
use crate::error::{Error, Result};

/// A partition, stored as weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        YoungDiagram::new(v)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(y: YoungDiagram) -> Vec<u32> {
        y.parts
    }
}

impl YoungDiagram {
    /// Accepts trailing zeros; rejects increasing sequences.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} is not a partition")));
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty() -> Self {
        YoungDiagram::default()
    }

    /// Parses `"2,1"`; the empty diagram is `""` or `"0"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of column `j` (1-based).
    pub fn column(&self, j: u32) -> usize {
        self.parts.iter().filter(|&&p| p >= j).count()
    }

    /// Number of pairwise distinct row lengths among the nonzero rows.
    pub fn distinct_rows(&self) -> usize {
        let mut v = self.parts.clone();
        v.dedup();
        v.len()
    }

    /// Addable boxes as `(row, col)`, 1-based, top to bottom.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let len = self.parts.get(i).copied().unwrap_or(0);
            let above = if i == 0 { u32::MAX } else { self.parts[i - 1] };
            if len < above {
                out.push((i + 1, len as usize + 1));
            }
        }
        out
    }

    /// Removable boxes as `(row, col)`, 1-based, top to bottom.
    pub fn removable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            let below = self.parts.get(i + 1).copied().unwrap_or(0);
            if self.parts[i] > below {
                out.push((i + 1, self.parts[i] as usize));
            }
        }
        out
    }

    pub fn add_box(&self, row: usize) -> Self {
        let mut p = self.parts.clone();
        if row > p.len() {
            p.push(1);
        } else {
            p[row - 1] += 1;
        }
        YoungDiagram::new(p).expect("addable box")
    }

    pub fn remove_box(&self, row: usize) -> Self {
        let mut p = self.parts.clone();
        p[row - 1] -= 1;
        YoungDiagram::new(p).expect("removable box")
    }

    /// Contents `j - i` of all boxes, row by row.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p as i64 {
                out.push(j - i as i64);
            }
        }
        out
    }

    /// Sum of contents.
    pub fn content_sum(&self) -> i64 {
        self.contents().iter().sum()
    }

    /// The box in which `self` and `other` differ, as `(row, col)`, if they
    /// differ by exactly one box.
    pub fn box_difference(&self, other: &Self) -> Option<(usize, usize)> {
        let (big, small) = match self.size().cmp(&other.size()) {
            Ordering::Greater => (self, other),
            Ordering::Less => (other, self),
            Ordering::Equal => return None,
        };
        small
            .addable()
            .into_iter()
            .find(|&(r, _)| &small.add_box(r) == big)
    }

    /// Padded comparison: compares the part lists lexicographically after
    /// padding with zeros.
    pub fn cmp_padded(&self, other: &Self) -> Ordering {
        let len = self.parts.len().max(other.parts.len());
        for i in 0..len {
            let a = self.parts.get(i).copied().unwrap_or(0);
            let b = other.parts.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Content `j - i` of the box by which two adjacent diagrams differ.
pub fn content_of_difference(lambda: &YoungDiagram, mu: &YoungDiagram) -> Result<i64> {
    let (r, c) = lambda
        .box_difference(mu)
        .ok_or_else(|| Error::InvalidShape(format!("{lambda} and {mu} do not differ by one box")))?;
    Ok(c as i64 - r as i64)
}

/// Whether `λ` labels an irreducible representation of `B(n,N)`: the first
/// two columns hold at most `N` boxes and `n - |λ|` is even and non-negative.
pub fn in_o(lambda: &YoungDiagram, n: usize, big_n: u64) -> bool {
    let size = lambda.size();
    size <= n
        && (n - size) % 2 == 0
        && (lambda.column(1) + lambda.column(2)) as u64 <= big_n
}

/// Partitions of `size` in decreasing lexicographic order.
fn partitions(size: usize) -> Vec<YoungDiagram> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
        if rest == 0 {
            out.push(YoungDiagram { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p as u32);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, &mut Vec::new(), &mut out);
    out
}

/// `O(n,N)` ordered by size, then by parts in decreasing lexicographic order.
pub fn enumerate_o(n: usize, big_n: u64) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    for size in (n % 2..=n).step_by(2) {
        out.extend(partitions(size).into_iter().filter(|l| in_o(l, n, big_n)));
    }
    out
}

fn o_order(a: &YoungDiagram, b: &YoungDiagram) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.cmp_padded(a))
}

/// Diagrams in `O(k,N)` obtained from `μ` by adding or removing one box.
pub fn branch(mu: &YoungDiagram, k: usize, big_n: u64) -> Vec<YoungDiagram> {
    let mut out: Vec<YoungDiagram> = mu
        .removable()
        .into_iter()
        .map(|(r, _)| mu.remove_box(r))
        .chain(mu.addable().into_iter().map(|(r, _)| mu.add_box(r)))
        .filter(|l| in_o(l, k, big_n))
        .collect();
    out.sort_by(o_order);
    out
}

/// A sequence `∅ = Λ(0), Λ(1), …, Λ(n)` of diagrams, each step adding or
/// removing one box.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UpDownPath {
    steps: Vec<YoungDiagram>,
}

impl UpDownPath {
    /// Validates adjacency and the `O(k,N)` condition at every level.
    pub fn new(steps: Vec<YoungDiagram>, big_n: u64) -> Result<Self> {
        if steps.first().map(|s| !s.is_empty()).unwrap_or(true) {
            return Err(Error::InvalidShape("path must start at the empty diagram".into()));
        }
        for (k, w) in steps.windows(2).enumerate() {
            if w[0].box_difference(&w[1]).is_none() {
                return Err(Error::InvalidShape(format!("{} and {} are not adjacent", w[0], w[1])));
            }
            if !in_o(&w[1], k + 1, big_n) {
                return Err(Error::InvalidShape(format!("{} is not in O({},{big_n})", w[1], k + 1)));
            }
        }
        Ok(UpDownPath { steps })
    }

    pub fn steps(&self) -> &[YoungDiagram] {
        &self.steps
    }

    /// Number of steps `n`.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Λ(k)`.
    pub fn at(&self, k: usize) -> &YoungDiagram {
        &self.steps[k]
    }

    pub fn end(&self) -> &YoungDiagram {
        self.steps.last().expect("non-empty path")
    }

    /// Whether step `k` adds a box.
    pub fn adds_at(&self, k: usize) -> bool {
        self.steps[k].size() > self.steps[k - 1].size()
    }

    /// Content of the box added or removed at step `k` (1-based).
    pub fn content_at(&self, k: usize) -> i64 {
        content_of_difference(&self.steps[k], &self.steps[k - 1]).expect("adjacent steps")
    }

    /// The path with step `k` replaced by `shape`.
    pub fn with_step(&self, k: usize, shape: YoungDiagram) -> Self {
        let mut steps = self.steps.clone();
        steps[k] = shape;
        UpDownPath { steps }
    }

    /// Truncation to the first `k` steps.
    pub fn prefix(&self, k: usize) -> Self {
        UpDownPath { steps: self.steps[..=k].to_vec() }
    }
}

impl fmt::Display for UpDownPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.steps.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", s.join(" → "))
    }
}

impl fmt::Debug for UpDownPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Compares paths step by step, larger diagrams (padded part lists) first.
fn path_order(a: &UpDownPath, b: &UpDownPath) -> Ordering {
    for (x, y) in a.steps.iter().zip(&b.steps) {
        match y.cmp_padded(x) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.steps.len().cmp(&b.steps.len())
}

/// Minimal number of single-box moves between two diagrams.
fn distance(a: &YoungDiagram, b: &YoungDiagram) -> usize {
    let len = a.parts.len().max(b.parts.len());
    (0..len)
        .map(|i| {
            let x = a.parts.get(i).copied().unwrap_or(0) as i64;
            let y = b.parts.get(i).copied().unwrap_or(0) as i64;
            (x - y).unsigned_abs() as usize
        })
        .sum()
}

/// All up-down paths from `∅` to `λ` of length `n`, in a fixed order.
pub fn enumerate_paths(lambda: &YoungDiagram, n: usize, big_n: u64) -> Result<Vec<UpDownPath>> {
    if !in_o(lambda, n, big_n) {
        return Err(Error::InvalidShape(format!("{lambda} is not in O({n},{big_n})")));
    }
    let mut out = Vec::new();
    let mut cur = vec![YoungDiagram::empty()];
    fn rec(
        lambda: &YoungDiagram,
        n: usize,
        big_n: u64,
        cur: &mut Vec<YoungDiagram>,
        out: &mut Vec<UpDownPath>,
    ) {
        let k = cur.len() - 1;
        let last = cur[k].clone();
        if k == n {
            if &last == lambda {
                out.push(UpDownPath { steps: cur.clone() });
            }
            return;
        }
        for next in branch(&last, k + 1, big_n) {
            if distance(&next, lambda) <= n - k - 1 {
                cur.push(next);
                rec(lambda, n, big_n, cur, out);
                cur.pop();
            }
        }
    }
    rec(lambda, n, big_n, &mut cur, &mut out);
    out.sort_by(path_order);
    Ok(out)
}

/// Number of up-down paths to each `λ ∈ O(n,N)`, by the branching recurrence.
pub fn path_counts(n: usize, big_n: u64) -> Vec<(YoungDiagram, u64)> {
    let mut level: HashMap<YoungDiagram, u64> = HashMap::from([(YoungDiagram::empty(), 1)]);
    for k in 1..=n {
        let mut next: HashMap<YoungDiagram, u64> = HashMap::new();
        for (mu, c) in &level {
            for nu in branch(mu, k, big_n) {
                *next.entry(nu).or_insert(0) += c;
            }
        }
        level = next;
    }
    enumerate_o(n, big_n)
        .into_iter()
        .map(|l| {
            let c = level.get(&l).copied().unwrap_or(0);
            (l, c)
        })
        .collect()
}

/// The `2l+1` numbers `(N-1)/2 + c` over addable corners `c` and
/// `-(N-1)/2 - d` over removable corners `d` of `μ`, for a given value of
/// `half = (N-1)/2`. Addable corners come first, by decreasing content,
/// then removable corners by increasing content.
pub fn b_list<S: Ring>(mu: &YoungDiagram, half: &S) -> Vec<S> {
    let mut add: Vec<i64> = mu.addable().iter().map(|&(r, c)| c as i64 - r as i64).collect();
    let mut rem: Vec<i64> = mu.removable().iter().map(|&(r, c)| c as i64 - r as i64).collect();
    add.sort_by(|a, b| b.cmp(a));
    rem.sort();
    add.into_iter()
        .map(|c| half.add_ref(&S::from_int(c)))
        .chain(rem.into_iter().map(|d| half.add_ref(&S::from_int(d)).neg_ref()))
        .collect()
}

/// `b_list` at a rational value of `N`, sorted in decreasing order.
pub fn b_list_at(mu: &YoungDiagram, big_n: &Rational) -> Vec<Rational> {
    let half = (big_n - Rational::from_integer(1.into())) / Rational::from_integer(2.into());
    let mut v = b_list(mu, &half);
    v.sort_by(|a, b| b.cmp(a));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;

    fn yd(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    #[test]
    fn membership() {
        assert!(!in_o(&yd(&[1, 1, 1]), 3, 2));
        assert!(in_o(&YoungDiagram::empty(), 2, 5));
        assert!(!in_o(&yd(&[2, 1]), 4, 3));
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(enumerate_o(2, 2), vec![yd(&[]), yd(&[2]), yd(&[1, 1])]);
        assert_eq!(enumerate_o(1, 1), vec![yd(&[1])]);
        // (2,1) has three boxes in its first two columns.
        assert_eq!(enumerate_o(3, 2), vec![yd(&[1]), yd(&[3])]);
        assert_eq!(enumerate_o(3, 3), vec![yd(&[1]), yd(&[3]), yd(&[2, 1]), yd(&[1, 1, 1])]);
    }

    #[test]
    fn branching() {
        assert_eq!(branch(&yd(&[]), 1, 3), vec![yd(&[1])]);
        assert_eq!(branch(&yd(&[1]), 2, 2), vec![yd(&[]), yd(&[2]), yd(&[1, 1])]);
        assert_eq!(branch(&yd(&[1]), 2, 1), vec![yd(&[])]);
    }

    #[test]
    fn paths_to_one_box() {
        assert_eq!(enumerate_paths(&yd(&[1]), 1, 1).unwrap().len(), 1);
        let p = enumerate_paths(&yd(&[1]), 3, 3).unwrap();
        let middles: Vec<_> = p.iter().map(|x| x.at(2).clone()).collect();
        assert_eq!(middles, vec![yd(&[2]), yd(&[1, 1]), yd(&[])]);
        assert_eq!(enumerate_paths(&yd(&[1]), 3, 1).unwrap().len(), 1);
        assert_eq!(enumerate_paths(&yd(&[1]), 3, 2).unwrap().len(), 3);
        assert!(enumerate_paths(&yd(&[2]), 3, 3).is_err());
    }

    #[test]
    fn contents_and_differences() {
        assert_eq!(content_of_difference(&yd(&[2]), &yd(&[1])).unwrap(), 1);
        assert_eq!(content_of_difference(&yd(&[1, 1]), &yd(&[1])).unwrap(), -1);
        let mut c = yd(&[3, 1]).contents();
        c.sort();
        assert_eq!(c, vec![-1, 0, 1, 2]);
        assert!(content_of_difference(&yd(&[2]), &yd(&[1, 1])).is_err());
    }

    #[test]
    fn b_lists() {
        assert_eq!(b_list_at(&yd(&[]), &rat(7, 1)), vec![rat(3, 1)]);
        assert_eq!(b_list_at(&yd(&[1]), &rat(3, 1)), vec![rat(2, 1), rat(0, 1), rat(-1, 1)]);
        assert_eq!(b_list_at(&yd(&[2, 1]), &rat(5, 1)).len(), 5);
        let sym = b_list(&yd(&[1]), &crate::coeffs::NPoly::half_n_minus_one());
        assert_eq!(sym.len(), 3);
    }

    #[test]
    fn path_counts_match_enumeration() {
        for n in 0..=6 {
            for big_n in 1..=4 {
                for (l, c) in path_counts(n, big_n) {
                    let paths = enumerate_paths(&l, n, big_n).unwrap();
                    assert_eq!(paths.len() as u64, c, "{l} n={n} N={big_n}");
                    for p in &paths {
                        for k in 0..=n {
                            assert!(in_o(p.at(k), k, big_n));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn squares_sum_to_brauer_dimension() {
        let mut dfact = 1u64;
        for n in 1..=5usize {
            dfact *= 2 * n as u64 - 1;
            let total: u64 = path_counts(n, 2 * n as u64).iter().map(|(_, c)| c * c).sum();
            assert_eq!(total, dfact);
        }
    }

    #[test]
    fn json_forms() {
        let p = &enumerate_paths(&yd(&[1]), 3, 3).unwrap()[0];
        let s = serde_json::to_string(p).unwrap();
        assert_eq!(s, "[[],[1],[2],[1]]");
        let back: UpDownPath = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, p);
        assert!(serde_json::from_str::<YoungDiagram>("[1,2]").is_err());
    }
}
