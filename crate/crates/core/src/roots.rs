//! Absolute square roots: solutions of `v · v̄ = g`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::colored_perm::{enumerate_group, ColoredPermutation};
use crate::error::{Error, Result};

/// `v · v̄`.
pub fn absolute_square(v: &ColoredPermutation) -> ColoredPermutation {
    v.compose(&v.bar()).expect("same group")
}

/// Number of `v` with `v · v̄ = g`, by walking the whole group.
pub fn count_bruteforce(g: &ColoredPermutation, max_order: u64) -> Result<u64> {
    Ok(enumerate_group(g.r(), g.n(), max_order)?
        .filter(|v| absolute_square(v) == *g)
        .count() as u64)
}

/// Root counts for every element of `G(r,n)` in one pass; elements with no
/// root are absent.
pub fn absolute_square_counts(r: usize, n: usize, max_order: u64) -> Result<HashMap<ColoredPermutation, u64>> {
    let mut counts = HashMap::new();
    for v in enumerate_group(r, n, max_order)? {
        *counts.entry(absolute_square(&v)).or_insert(0) += 1;
    }
    Ok(counts)
}

/// A set partition of some cycle indices into pairs and singletons.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PairSingletonPartition {
    pub indices: Vec<usize>,
    pub pairs: Vec<(usize, usize)>,
    pub singletons: Vec<usize>,
    /// Whether singletons were permitted when this was enumerated.
    pub allow_singletons: bool,
}

impl PairSingletonPartition {
    pub fn n2(&self) -> usize {
        self.pairs.len()
    }

    pub fn n1(&self) -> usize {
        self.singletons.len()
    }
}

/// All partitions of `indices` into pairs `{i,j}` with equal lengths and
/// `colors[i] + colors[j] ≡ 0 (mod r)`, plus, when allowed, singletons `{i}`
/// with `colors[i] ≡ 0`. `colors` and `lengths` run parallel to `indices`.
pub fn enumerate_pair_singleton_partitions(
    r: usize,
    indices: &[usize],
    colors: &[usize],
    lengths: &[usize],
    allow_singletons: bool,
) -> Result<Vec<PairSingletonPartition>> {
    if colors.len() != indices.len() || lengths.len() != indices.len() {
        return Err(Error::SizeMismatch {
            expected: indices.len(),
            got: colors.len().min(lengths.len()),
        });
    }
    if r == 0 {
        return Err(Error::InvalidModulus(r));
    }

    struct Walk<'a> {
        r: usize,
        colors: &'a [usize],
        lengths: &'a [usize],
        allow_singletons: bool,
        used: Vec<bool>,
        pairs: Vec<(usize, usize)>,
        singletons: Vec<usize>,
        out: Vec<(Vec<(usize, usize)>, Vec<usize>)>,
    }

    impl Walk<'_> {
        fn go(&mut self) {
            let Some(a) = self.used.iter().position(|u| !u) else {
                self.out.push((self.pairs.clone(), self.singletons.clone()));
                return;
            };
            self.used[a] = true;
            if self.allow_singletons && self.colors[a].is_multiple_of(self.r) {
                self.singletons.push(a);
                self.go();
                self.singletons.pop();
            }
            for b in a + 1..self.used.len() {
                if self.used[b]
                    || self.lengths[a] != self.lengths[b]
                    || !(self.colors[a] + self.colors[b]).is_multiple_of(self.r)
                {
                    continue;
                }
                self.used[b] = true;
                self.pairs.push((a, b));
                self.go();
                self.pairs.pop();
                self.used[b] = false;
            }
            self.used[a] = false;
        }
    }

    let mut walk = Walk {
        r,
        colors,
        lengths,
        allow_singletons,
        used: vec![false; indices.len()],
        pairs: Vec::new(),
        singletons: Vec::new(),
        out: Vec::new(),
    };
    walk.go();
    Ok(walk
        .out
        .into_iter()
        .map(|(pairs, singletons)| PairSingletonPartition {
            indices: indices.to_vec(),
            pairs: pairs.into_iter().map(|(a, b)| (indices[a], indices[b])).collect(),
            singletons: singletons.into_iter().map(|a| indices[a]).collect(),
            allow_singletons,
        })
        .collect())
}

/// `N_d` for the cycles of length `d`: `Σ_P (dr)^{n2(P)} r^{n1(P)}`, with
/// singletons only for odd `d`.
fn n_d(r: usize, d: usize, colors: &[usize]) -> u128 {
    let indices: Vec<usize> = (0..colors.len()).collect();
    let lengths = vec![d; colors.len()];
    enumerate_pair_singleton_partitions(r, &indices, colors, &lengths, d % 2 == 1)
        .expect("parallel slices")
        .iter()
        .map(|p| ((d * r) as u128).pow(p.n2() as u32) * (r as u128).pow(p.n1() as u32))
        .sum()
}

/// Root count from the cycle structure of `g` alone.
pub fn count_formula(g: &ColoredPermutation) -> u64 {
    let mut by_length: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for c in g.colored_cycles() {
        by_length.entry(c.length()).or_default().push(c.color);
    }
    let total = by_length
        .iter()
        .fold(1u128, |acc, (&d, colors)| acc * n_d(g.r(), d, colors));
    u64::try_from(total).expect("root count overflow")
}

/// `#{v ∈ S_n : v² = σ}` for a 0-based permutation `σ`.
pub fn count_sqroots_sn(sigma: &[usize]) -> Result<u64> {
    let g = ColoredPermutation::new(1, sigma.to_vec(), vec![0; sigma.len()])?;
    Ok(count_formula(&g))
}
