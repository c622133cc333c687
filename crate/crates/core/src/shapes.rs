//! Partitions, r-partite partitions, standard tableaux and rim hooks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Validates that the parts are positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    /// Sorts descending and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `i`, zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Self {
        let cols = self.row(0);
        Self((0..cols).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    pub fn contains(&self, (i, j): (usize, usize)) -> bool {
        j < self.row(i)
    }

    /// Cells whose removal leaves a partition.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        (0..self.0.len())
            .filter(|&i| self.row(i) > self.row(i + 1))
            .map(|i| (i, self.0[i] - 1))
            .collect()
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn syt_count(&self) -> u64 {
        let conj = self.conjugate();
        let n = self.size() as u128;
        let mut num: u128 = 1;
        for k in 1..=n {
            num = num.checked_mul(k).expect("hook length formula overflow");
        }
        let mut den: u128 = 1;
        for (i, j) in self.cells() {
            let hook = (self.0[i] - j - 1) + (conj.0[j] - i - 1) + 1;
            den *= hook as u128;
        }
        debug_assert_eq!(num % den, 0);
        u64::try_from(num / den).expect("tableau count overflow")
    }

    fn without_cell(&self, row: usize) -> Self {
        let mut parts = self.0.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Self(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An r-tuple of partitions; its total size is `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct MultiPartition(Vec<Partition>);

impl TryFrom<Vec<Partition>> for MultiPartition {
    type Error = Error;

    fn try_from(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidPartition(
                "a multipartition needs at least one component".into(),
            ));
        }
        Ok(Self(components))
    }
}

impl From<MultiPartition> for Vec<Partition> {
    fn from(p: MultiPartition) -> Self {
        p.0
    }
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "a multipartition needs at least one component");
        Self(components)
    }

    /// Convenience constructor; panics on malformed parts.
    pub fn from_parts(parts: &[&[usize]]) -> Self {
        Self::new(
            parts
                .iter()
                .map(|p| Partition::new(p.to_vec()).expect("valid partition"))
                .collect(),
        )
    }

    pub fn empty(r: usize) -> Self {
        Self::new(vec![Partition::empty(); r])
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, j: usize) -> &Partition {
        &self.0[j]
    }

    pub(crate) fn with_component(&self, j: usize, p: Partition) -> Self {
        let mut c = self.0.clone();
        c[j] = p;
        Self(c)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            if p.is_empty() {
                write!(f, "-")?;
            } else {
                let s: Vec<String> = p.parts().iter().map(usize::to_string).collect();
                write!(f, "{}", s.join(","))?;
            }
        }
        write!(f, ")")
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All r-partite partitions of `n`: component 0 varies slowest, larger
/// sizes first, then reverse lexicographic within a component.
pub fn multipartitions(r: usize, n: usize) -> Result<Vec<MultiPartition>> {
    if r == 0 {
        return Err(Error::InvalidModulus(r));
    }
    fn go(r: usize, rest: usize, cur: &mut Vec<Partition>, out: &mut Vec<MultiPartition>) {
        if cur.len() + 1 == r {
            for p in partitions(rest) {
                cur.push(p);
                out.push(MultiPartition(cur.clone()));
                cur.pop();
            }
            return;
        }
        for size in (0..=rest).rev() {
            for p in partitions(size) {
                cur.push(p);
                go(r, rest - size, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(r, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// A filling of a Young diagram, rows top to bottom.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau(pub Vec<Vec<u32>>);

impl Tableau {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.0
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.0.iter().map(Vec::len).collect())
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().flatten().copied()
    }

    pub fn num_cells(&self) -> usize {
        self.0.iter().map(Vec::len).sum()
    }

    /// Rows form a partition shape and strictly increase along rows and columns.
    pub fn is_standard_shape(&self) -> bool {
        if self.0.iter().any(Vec::is_empty) {
            return false;
        }
        if self.0.windows(2).any(|w| w[0].len() < w[1].len()) {
            return false;
        }
        let rows_ok = self.0.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .0
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }
}

/// One tableau per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiTableau(pub Vec<Tableau>);

impl MultiTableau {
    pub fn empty(r: usize) -> Self {
        Self(vec![Tableau::default(); r])
    }

    pub fn shape(&self) -> MultiPartition {
        MultiPartition::new(self.0.iter().map(Tableau::shape).collect())
    }

    /// Each component standard, entries exactly `1..=n` across components.
    pub fn is_standard(&self) -> bool {
        if self.0.is_empty() || !self.0.iter().all(|t| t.0.is_empty() || t.is_standard_shape()) {
            return false;
        }
        let mut all: Vec<u32> = self.0.iter().flat_map(Tableau::entries).collect();
        all.sort_unstable();
        all.iter().enumerate().all(|(k, &e)| e as usize == k + 1)
    }
}

fn place(rows: &mut Vec<Vec<u32>>, row: usize, value: u32) {
    if row == rows.len() {
        rows.push(Vec::new());
    }
    rows[row].push(value);
}

/// All standard Young tableaux of shape `shape`.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    if shape.is_empty() {
        return vec![Tableau::default()];
    }
    let n = shape.size() as u32;
    let mut out = Vec::new();
    for (row, _) in shape.corners() {
        for mut t in enumerate_syt(&shape.without_cell(row)) {
            place(&mut t.0, row, n);
            out.push(t);
        }
    }
    out
}

pub fn syt_count(shape: &Partition) -> u64 {
    shape.syt_count()
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// `multinomial(n; n_0, …) · Π_j syt_count(λ_j)`.
pub fn multi_syt_count(shape: &MultiPartition) -> u64 {
    let mut remaining = shape.size() as u64;
    let mut acc: u64 = 1;
    for p in shape.components() {
        let k = p.size() as u64;
        acc = acc
            .checked_mul(binomial(remaining, k))
            .and_then(|a| a.checked_mul(p.syt_count()))
            .expect("tableau count overflow");
        remaining -= k;
    }
    acc
}

/// All r-partite standard tableaux of the given shape.
pub fn enumerate_multi_syt(shape: &MultiPartition) -> Vec<MultiTableau> {
    let n = shape.size() as u32;
    if n == 0 {
        return vec![MultiTableau::empty(shape.r())];
    }
    let mut out = Vec::new();
    for (j, comp) in shape.components().iter().enumerate() {
        for (row, _) in comp.corners() {
            let smaller = shape.with_component(j, comp.without_cell(row));
            for mut t in enumerate_multi_syt(&smaller) {
                place(&mut t.0[j].0, row, n);
                out.push(t);
            }
        }
    }
    out
}

/// A border strip inside component `component` of an r-partite diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RimHook {
    pub component: usize,
    /// `(row, column)` cells, 0-based.
    pub cells: Vec<(usize, usize)>,
}

impl RimHook {
    pub fn length(&self) -> usize {
        self.cells.len()
    }

    /// Number of occupied rows minus one.
    pub fn height(&self) -> usize {
        let mut rows: Vec<usize> = self.cells.iter().map(|c| c.0).collect();
        rows.sort_unstable();
        rows.dedup();
        rows.len().saturating_sub(1)
    }

    /// `(-1)^height`.
    pub fn sign(&self) -> i64 {
        if self.height().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.cells.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.cells.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(k) = stack.pop() {
            let (a, b) = self.cells[k];
            for (m, &(c, d)) in self.cells.iter().enumerate() {
                if !seen[m] && a.abs_diff(c) + b.abs_diff(d) == 1 {
                    seen[m] = true;
                    stack.push(m);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn has_no_2x2(&self) -> bool {
        let has = |c: (usize, usize)| self.cells.contains(&c);
        !self
            .cells
            .iter()
            .any(|&(a, b)| has((a + 1, b)) && has((a, b + 1)) && has((a + 1, b + 1)))
    }
}

/// Removing `hook` from a shape leaves `remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHookRemoval {
    pub remainder: Partition,
    pub hook: RimHook,
}

impl RimHookRemoval {
    pub fn height(&self) -> usize {
        self.hook.height()
    }
}

/// All rim hooks of length `d` whose removal from `shape` leaves a partition.
///
/// The hook is walked along the rim from the end of its top row: in each row
/// it covers the cells right of the next row's end, plus the cell above that
/// end when it continues downward.
pub fn rim_hook_removals(shape: &Partition, d: usize) -> Vec<RimHookRemoval> {
    rim_hook_removals_in(shape, d, 0)
}

pub(crate) fn rim_hook_removals_in(shape: &Partition, d: usize, component: usize) -> Vec<RimHookRemoval> {
    let mut out = Vec::new();
    if d == 0 {
        return out;
    }
    let parts = shape.parts();
    for top in 0..parts.len() {
        let mut rest = d;
        let mut row = top;
        let mut new_parts = parts.to_vec();
        let mut cells = Vec::with_capacity(d);
        loop {
            let cur = parts[row];
            let next = shape.row(row + 1);
            let avail = cur - next;
            if rest <= avail {
                cells.extend((cur - rest..cur).rev().map(|c| (row, c)));
                new_parts[row] = cur - rest;
                new_parts.retain(|&p| p > 0);
                out.push(RimHookRemoval {
                    remainder: Partition(new_parts),
                    hook: RimHook { component, cells },
                });
                break;
            }
            // continue down through column next - 1
            if next == 0 || rest == avail + 1 {
                break;
            }
            cells.extend((next - 1..cur).rev().map(|c| (row, c)));
            new_parts[row] = next - 1;
            rest -= avail + 1;
            row += 1;
        }
    }
    out
}

/// A sequence of rim hooks building an r-partite shape from the empty one;
/// `hooks[i]` is added at step `i + 1` in component `hooks[i].component`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiRimHookTableau {
    pub shape: MultiPartition,
    pub hooks: Vec<RimHook>,
}

impl MultiRimHookTableau {
    /// `Π (-1)^{ht}`.
    pub fn sign(&self) -> i64 {
        self.hooks.iter().map(RimHook::sign).product()
    }

    /// `f(i)` for every step.
    pub fn components(&self) -> Vec<usize> {
        self.hooks.iter().map(|h| h.component).collect()
    }

    /// The chain of intermediate shapes, starting from the empty one.
    pub fn chain(&self) -> Vec<MultiPartition> {
        let r = self.shape.r();
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); r];
        let mut out = vec![MultiPartition::empty(r)];
        for h in &self.hooks {
            let rows = &mut cells[h.component];
            for &(i, _) in &h.cells {
                if rows.len() <= i {
                    rows.resize(i + 1, 0);
                }
                rows[i] += 1;
            }
            out.push(MultiPartition::new(
                cells.iter().map(|c| Partition::from_unsorted(c.clone())).collect(),
            ));
        }
        out
    }
}

/// All r-partite rim hook tableaux of `shape` whose `i`-th hook has length `lengths[i]`.
pub fn enumerate_multi_rht(shape: &MultiPartition, lengths: &[usize]) -> Result<Vec<MultiRimHookTableau>> {
    let total: usize = lengths.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            got: total,
        });
    }
    fn go(shape: &MultiPartition, lengths: &[usize]) -> Vec<Vec<RimHook>> {
        let Some((&last, init)) = lengths.split_last() else {
            return vec![Vec::new()];
        };
        let mut out = Vec::new();
        for (j, comp) in shape.components().iter().enumerate() {
            for rm in rim_hook_removals_in(comp, last, j) {
                let smaller = shape.with_component(j, rm.remainder.clone());
                for mut seq in go(&smaller, init) {
                    seq.push(rm.hook.clone());
                    out.push(seq);
                }
            }
        }
        out
    }
    Ok(go(shape, lengths)
        .into_iter()
        .map(|hooks| MultiRimHookTableau {
            shape: shape.clone(),
            hooks,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Partition counts by Euler's pentagonal recurrence.
    fn partition_numbers(max: usize) -> Vec<usize> {
        let mut pn = vec![0i64; max + 1];
        pn[0] = 1;
        for n in 1..=max {
            let mut k: i64 = 1;
            let mut acc = 0i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * pn[n - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= n {
                    acc += sign * pn[n - g2];
                }
                k += 1;
            }
            pn[n] = acc;
        }
        pn.into_iter().map(|x| x as usize).collect()
    }

    /// Coefficients of the r-th power of the partition generating series.
    fn multipartition_numbers(r: usize, max: usize) -> Vec<usize> {
        let pn = partition_numbers(max);
        let mut acc = vec![0usize; max + 1];
        acc[0] = 1;
        for _ in 0..r {
            let mut next = vec![0usize; max + 1];
            for i in 0..=max {
                for j in 0..=max - i {
                    next[i + j] += acc[i] * pn[j];
                }
            }
            acc = next;
        }
        acc
    }

    /// Every μ ⊆ λ with |λ/μ| = d whose difference is a connected strip with no 2x2.
    fn brute_force_removals(shape: &Partition, d: usize) -> HashSet<(Partition, usize)> {
        let mut out = HashSet::new();
        if d > shape.size() {
            return out;
        }
        for mu in partitions(shape.size() - d) {
            if mu.num_rows() > shape.num_rows() || (0..mu.num_rows()).any(|i| mu.row(i) > shape.row(i)) {
                continue;
            }
            let cells: Vec<(usize, usize)> = shape.cells().filter(|&c| !mu.contains(c)).collect();
            let hook = RimHook { component: 0, cells };
            if hook.is_connected() && hook.has_no_2x2() {
                out.insert((mu, hook.height()));
            }
        }
        out
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 0, 3, 2]), p(&[3, 2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions(6).len(), 11);
        let pn = partition_numbers(15);
        for n in 0..=15 {
            let ps = partitions(n);
            assert_eq!(ps.len(), pn[n]);
            assert!(ps.windows(2).all(|w| w[0] > w[1]), "reverse-lex order");
            assert!(ps.iter().all(|q| q.size() == n));
        }
    }

    #[test]
    fn multipartition_counts() {
        assert_eq!(multipartitions(1, 3).unwrap().len(), 3);
        let two = multipartitions(2, 2).unwrap();
        assert_eq!(
            two,
            vec![
                MultiPartition::from_parts(&[&[2], &[]]),
                MultiPartition::from_parts(&[&[1, 1], &[]]),
                MultiPartition::from_parts(&[&[1], &[1]]),
                MultiPartition::from_parts(&[&[], &[2]]),
                MultiPartition::from_parts(&[&[], &[1, 1]]),
            ]
        );
        assert_eq!(multipartitions(3, 3).unwrap().len(), 22);
        for r in 1..=4 {
            let expect = multipartition_numbers(r, 6);
            for n in 0..=6 {
                let mps = multipartitions(r, n).unwrap();
                assert_eq!(mps.len(), expect[n], "r={r} n={n}");
                let set: HashSet<_> = mps.iter().collect();
                assert_eq!(set.len(), mps.len());
            }
        }
        assert!(multipartitions(0, 1).is_err());
    }

    #[test]
    fn syt_examples() {
        assert_eq!(syt_count(&p(&[4])), 1);
        assert_eq!(enumerate_syt(&p(&[2, 1])).len(), 2);
        assert_eq!(enumerate_syt(&p(&[2, 2])).len(), 2);
        assert_eq!(syt_count(&p(&[2, 2])), 2);
        assert_eq!(syt_count(&Partition::empty()), 1);
        for n in 0..=7 {
            for lam in partitions(n) {
                let all = enumerate_syt(&lam);
                assert_eq!(all.len() as u64, syt_count(&lam), "{lam:?}");
                for t in &all {
                    assert_eq!(t.shape(), lam);
                    assert!(MultiTableau(vec![t.clone()]).is_standard());
                }
                let distinct: HashSet<_> = all.iter().collect();
                assert_eq!(distinct.len(), all.len());
            }
        }
    }

    #[test]
    fn multi_syt_examples() {
        assert_eq!(multi_syt_count(&MultiPartition::from_parts(&[&[1], &[1]])), 2);
        assert_eq!(enumerate_multi_syt(&MultiPartition::from_parts(&[&[1], &[1]])).len(), 2);
        assert_eq!(multi_syt_count(&MultiPartition::from_parts(&[&[4], &[], &[]])), 1);
        for r in 1..=3 {
            for n in 0..=5 {
                for lam in multipartitions(r, n).unwrap() {
                    let all = enumerate_multi_syt(&lam);
                    assert_eq!(all.len() as u64, multi_syt_count(&lam));
                    assert!(all.iter().all(|t| t.is_standard() && t.shape() == lam));
                }
            }
        }
    }

    #[test]
    fn sum_of_squared_dimensions_is_group_order() {
        for r in 1..=4u64 {
            for n in 0..=5u64 {
                let total: u64 = multipartitions(r as usize, n as usize)
                    .unwrap()
                    .iter()
                    .map(|l| multi_syt_count(l).pow(2))
                    .sum();
                let order = r.pow(n as u32) * (1..=n).product::<u64>();
                assert_eq!(total, order, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn rim_hook_examples() {
        let rm = rim_hook_removals(&p(&[2, 1]), 3);
        assert_eq!(rm.len(), 1);
        assert_eq!(rm[0].height(), 1);
        assert!(rm[0].remainder.is_empty());

        // (2,2) minus the strip {(0,1),(1,1),(1,0)} leaves (1)
        let rm = rim_hook_removals(&p(&[2, 2]), 3);
        assert_eq!(rm.len(), 1);
        assert_eq!(rm[0].remainder, p(&[1]));
        assert_eq!(rm[0].height(), 1);

        for n in 1..=6 {
            let rm = rim_hook_removals(&p(&[n]), n);
            assert_eq!(rm.len(), 1);
            assert_eq!(rm[0].height(), 0);
        }
        assert!(rim_hook_removals(&p(&[3, 1]), 0).is_empty());
    }

    #[test]
    fn rim_hook_removals_match_brute_force() {
        for n in 0..=8 {
            for lam in partitions(n) {
                for d in 1..=n {
                    let fast = rim_hook_removals(&lam, d);
                    for r in &fast {
                        assert!(r.hook.is_connected() && r.hook.has_no_2x2());
                        assert_eq!(r.hook.length(), d);
                        assert_eq!(r.remainder.size() + d, n);
                    }
                    let got: HashSet<_> = fast.iter().map(|r| (r.remainder.clone(), r.height())).collect();
                    assert_eq!(got.len(), fast.len());
                    assert_eq!(got, brute_force_removals(&lam, d), "{lam:?} d={d}");
                }
            }
        }
    }

    #[test]
    fn multi_rim_hook_tableaux() {
        for n in 1..=5 {
            let lam = MultiPartition::from_parts(&[&[n], &[], &[]]);
            let t = enumerate_multi_rht(&lam, &[n]).unwrap();
            assert_eq!(t.len(), 1);
            assert_eq!(t[0].components(), vec![0]);
            assert_eq!(t[0].hooks[0].height(), 0);
        }
        assert!(enumerate_multi_rht(&MultiPartition::from_parts(&[&[2]]), &[1]).is_err());

        // chains grow one component at a time and end at the shape
        for lam in multipartitions(3, 4).unwrap() {
            for lengths in [vec![1, 1, 1, 1], vec![2, 1, 1], vec![1, 3], vec![2, 2], vec![4]] {
                for t in enumerate_multi_rht(&lam, &lengths).unwrap() {
                    let chain = t.chain();
                    assert_eq!(chain.last().unwrap(), &lam);
                    for (step, w) in chain.windows(2).enumerate() {
                        let changed: Vec<usize> = (0..3).filter(|&j| w[0].component(j) != w[1].component(j)).collect();
                        assert_eq!(changed, vec![t.hooks[step].component]);
                    }
                    assert!(t.hooks.iter().all(|h| h.is_connected() && h.has_no_2x2()));
                }
            }
        }
        // at r = 1, lengths all 1: rim hook tableaux are standard tableaux
        for lam in partitions(5) {
            let t = enumerate_multi_rht(&MultiPartition::new(vec![lam.clone()]), &[1; 5]).unwrap();
            assert_eq!(t.len() as u64, syt_count(&lam));
        }
    }

    #[test]
    fn json_forms() {
        let m = MultiPartition::from_json_str("[[2,1],[],[1]]").unwrap();
        assert_eq!(m, MultiPartition::from_parts(&[&[2, 1], &[], &[1]]));
        assert_eq!(serde_json::to_string(&m).unwrap(), "[[2,1],[],[1]]");
        assert!(MultiPartition::from_json_str("[[1,2]]").is_err());
        assert!(MultiPartition::from_json_str("[]").is_err());
        assert!(MultiPartition::from_json_str("[[0]]").is_err());
    }
}
