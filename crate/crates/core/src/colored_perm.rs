//! Colored permutations: the elements of `G(r,n) = Z_r ≀ S_n`.
//!
//! An element is a permutation `σ` of `[1..n]` together with a color vector
//! `z ∈ Z_r^n`. It is identified with the monomial matrix `M` whose only
//! nonzero entry in column `j` is `ω^{z_j}` in row `σ(j)`. The group law is the
//! one that makes `v ↦ M(v)` a homomorphism:
//!
//! `(a·b).σ = a.σ ∘ b.σ`, `(a·b).z_j = b.z_j + a.z_{b.σ(j)}`.
//!
//! Internally permutations are 0-based; the JSON form uses 1-based images.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycEl;
use crate::error::{Error, Result};
use crate::shapes::{MultiPartition, Partition};

/// Default bound on `r^n · n!` for anything that walks the whole group.
pub const DEFAULT_MAX_ORDER: u64 = 100_000;

/// `r^n · n!`, or `None` on overflow.
pub fn group_order(r: usize, n: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for k in 1..=n as u64 {
        acc = acc.checked_mul(k)?.checked_mul(r as u64)?;
    }
    Some(acc)
}

/// Checks `r ≥ 1` and `r^n · n! ≤ max_order`, returning the order.
pub fn check_order(r: usize, n: usize, max_order: u64) -> Result<u64> {
    if r == 0 {
        return Err(Error::InvalidModulus(r));
    }
    match group_order(r, n) {
        Some(o) if o <= max_order => Ok(o),
        _ => Err(Error::BoundExceeded { r, n, max_order }),
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawColoredPermutation", into = "RawColoredPermutation")]
pub struct ColoredPermutation {
    r: usize,
    n: usize,
    perm: Vec<usize>,
    colors: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawColoredPermutation {
    r: usize,
    n: usize,
    perm: Vec<u64>,
    colors: Vec<u64>,
}

impl TryFrom<RawColoredPermutation> for ColoredPermutation {
    type Error = Error;

    fn try_from(raw: RawColoredPermutation) -> Result<Self> {
        if raw.perm.len() != raw.n || raw.colors.len() != raw.n {
            return Err(Error::InvalidElement(format!(
                "perm and colors must have length n = {}",
                raw.n
            )));
        }
        if raw.r == 0 {
            return Err(Error::InvalidModulus(0));
        }
        let mut perm = Vec::with_capacity(raw.n);
        for &p in &raw.perm {
            if p == 0 || p > raw.n as u64 {
                return Err(Error::InvalidElement(format!("image {p} outside [1, {}]", raw.n)));
            }
            perm.push(p as usize - 1);
        }
        let mut colors = Vec::with_capacity(raw.n);
        for &c in &raw.colors {
            if c >= raw.r as u64 {
                return Err(Error::InvalidElement(format!("color {c} outside [0, {}]", raw.r - 1)));
            }
            colors.push(c as usize);
        }
        ColoredPermutation::new(raw.r, perm, colors)
    }
}

impl From<ColoredPermutation> for RawColoredPermutation {
    fn from(v: ColoredPermutation) -> Self {
        RawColoredPermutation {
            r: v.r,
            n: v.n,
            perm: v.perm.iter().map(|&p| p as u64 + 1).collect(),
            colors: v.colors.iter().map(|&c| c as u64).collect(),
        }
    }
}

/// A cycle of the underlying permutation with the sum of its colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ColoredCycle {
    /// 0-based positions `i, σ(i), σ²(i), …`, starting from the smallest.
    pub support: Vec<usize>,
    pub color: usize,
}

impl ColoredCycle {
    pub fn length(&self) -> usize {
        self.support.len()
    }
}

/// Conjugacy class label: for each color `a`, the partition formed by the
/// lengths of the cycles of total color `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassType {
    pub r: usize,
    pub n: usize,
    pub by_color: MultiPartition,
}

impl ClassType {
    pub fn new(r: usize, by_color: MultiPartition) -> Result<Self> {
        if by_color.r() != r {
            return Err(Error::InvalidPartition(format!(
                "class type needs {r} components, got {}",
                by_color.r()
            )));
        }
        Ok(Self {
            r,
            n: by_color.size(),
            by_color,
        })
    }

    /// Cycle `(length, color)` pairs in component-major order.
    pub fn cycles(&self) -> Vec<(usize, usize)> {
        self.by_color
            .components()
            .iter()
            .enumerate()
            .flat_map(|(a, p)| p.parts().iter().map(move |&l| (l, a)))
            .collect()
    }

    /// A canonical representative: cycles on consecutive positions
    /// `(k+1, …, k+l)` with the whole cycle color on the first position.
    pub fn representative(&self) -> ColoredPermutation {
        let mut perm = vec![0; self.n];
        let mut colors = vec![0; self.n];
        let mut start = 0;
        for (len, color) in self.cycles() {
            for t in 0..len {
                perm[start + t] = start + (t + 1) % len;
            }
            colors[start] = color;
            start += len;
        }
        ColoredPermutation {
            r: self.r,
            n: self.n,
            perm,
            colors,
        }
    }
}

impl ColoredPermutation {
    /// `perm` holds 0-based images.
    pub fn new(r: usize, perm: Vec<usize>, colors: Vec<usize>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidModulus(r));
        }
        let n = perm.len();
        if colors.len() != n {
            return Err(Error::InvalidElement(format!("{} colors for degree {n}", colors.len())));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidElement(format!("{perm:?} is not a permutation")));
            }
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= r) {
            return Err(Error::InvalidElement(format!("color {c} outside [0, {}]", r - 1)));
        }
        Ok(Self { r, n, perm, colors })
    }

    /// Like [`ColoredPermutation::new`] but reduces colors modulo `r`.
    pub fn with_colors_mod(r: usize, perm: Vec<usize>, colors: &[i64]) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidModulus(r));
        }
        let colors = colors.iter().map(|&c| c.rem_euclid(r as i64) as usize).collect();
        Self::new(r, perm, colors)
    }

    pub fn identity(r: usize, n: usize) -> Self {
        assert!(r >= 1, "modulus must be positive");
        Self {
            r,
            n,
            perm: (0..n).collect(),
            colors: vec![0; n],
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based images of the underlying permutation `|v|`.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn is_identity(&self) -> bool {
        self.colors.iter().all(|&c| c == 0) && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `|v|` as an element of `G(1,n)`.
    pub fn underlying(&self) -> Self {
        Self {
            r: 1,
            n: self.n,
            perm: self.perm.clone(),
            colors: vec![0; self.n],
        }
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let r = self.r;
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        let colors = (0..self.n)
            .map(|j| (other.colors[j] + self.colors[other.perm[j]]) % r)
            .collect();
        Ok(Self {
            r,
            n: self.n,
            perm,
            colors,
        })
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0; self.n];
        let mut colors = vec![0; self.n];
        for j in 0..self.n {
            perm[self.perm[j]] = j;
            colors[self.perm[j]] = (self.r - self.colors[j]) % self.r;
        }
        Self {
            r: self.r,
            n: self.n,
            perm,
            colors,
        }
    }

    /// Negates every color.
    pub fn bar(&self) -> Self {
        let colors = self.colors.iter().map(|&c| (self.r - c) % self.r).collect();
        Self {
            r: self.r,
            n: self.n,
            perm: self.perm.clone(),
            colors,
        }
    }

    /// `inverse(bar(v))`, the element whose matrix is the transpose.
    pub fn transpose(&self) -> Self {
        let mut perm = vec![0; self.n];
        let mut colors = vec![0; self.n];
        for j in 0..self.n {
            perm[self.perm[j]] = j;
            colors[self.perm[j]] = self.colors[j];
        }
        Self {
            r: self.r,
            n: self.n,
            perm,
            colors,
        }
    }

    /// `v · v̄ = id`, equivalently the monomial matrix is symmetric.
    pub fn is_absolute_involution(&self) -> bool {
        (0..self.n).all(|j| {
            let i = self.perm[j];
            self.perm[i] == j && self.colors[i] == self.colors[j]
        })
    }

    /// `g · h · g^{-1}`.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        g.compose(self)?.compose(&g.inverse())
    }

    pub fn colored_cycles(&self) -> Vec<ColoredCycle> {
        let mut seen = vec![false; self.n];
        let mut cycles = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut support = Vec::new();
            let mut color = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                support.push(i);
                color = (color + self.colors[i]) % self.r;
                i = self.perm[i];
            }
            cycles.push(ColoredCycle { support, color });
        }
        cycles
    }

    pub fn class_type(&self) -> ClassType {
        let mut lengths: Vec<Vec<usize>> = vec![Vec::new(); self.r];
        for c in self.colored_cycles() {
            lengths[c.color].push(c.length());
        }
        let by_color = MultiPartition::new(lengths.into_iter().map(Partition::from_unsorted).collect());
        ClassType {
            r: self.r,
            n: self.n,
            by_color,
        }
    }

    /// Monomial matrix over `Z[ω]`, row-major: `m[i][j] = ω^{z_j}` iff `i = σ(j)`.
    pub fn to_monomial_matrix(&self) -> Vec<Vec<CycEl>> {
        let mut m = vec![vec![CycEl::zero(self.r); self.n]; self.n];
        for j in 0..self.n {
            m[self.perm[j]][j] = CycEl::omega_pow(self.r, self.colors[j] as i64);
        }
        m
    }

    /// Parses the `{"r":..,"n":..,"perm":[..],"colors":[..]}` JSON form.
    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.r != other.r || self.n != other.n {
            return Err(Error::DimensionMismatch {
                r1: self.r,
                n1: self.n,
                r2: other.r,
                n2: other.n,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for j in 0..self.n {
            if j > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.perm[j] + 1)?;
            if self.colors[j] != 0 {
                write!(f, "^{}", self.colors[j])?;
            }
        }
        write!(f, "]_{}", self.r)
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `s_0, …, s_{n-1}`: `s_0` colors position 1 by 1, `s_i` swaps `i` and `i+1`.
pub fn simple_reflections(r: usize, n: usize) -> Result<Vec<ColoredPermutation>> {
    if r == 0 {
        return Err(Error::InvalidModulus(r));
    }
    if n == 0 {
        return Err(Error::InvalidElement("simple reflections need n >= 1".into()));
    }
    let mut gens = Vec::with_capacity(n);
    let mut s0 = ColoredPermutation::identity(r, n);
    s0.colors[0] = 1 % r;
    gens.push(s0);
    for i in 1..n {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i - 1, i);
        gens.push(ColoredPermutation {
            r,
            n,
            perm,
            colors: vec![0; n],
        });
    }
    Ok(gens)
}

/// Next permutation in lexicographic order; `false` after the last one.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Next color vector in lexicographic order over `[0, r)^n`.
fn next_colors(c: &mut [usize], r: usize) -> bool {
    for k in (0..c.len()).rev() {
        c[k] += 1;
        if c[k] < r {
            return true;
        }
        c[k] = 0;
    }
    false
}

/// Stream over all of `G(r,n)` in lexicographic `(perm, colors)` order.
pub struct GroupIter {
    r: usize,
    current: Option<(Vec<usize>, Vec<usize>)>,
}

impl Iterator for GroupIter {
    type Item = ColoredPermutation;

    fn next(&mut self) -> Option<Self::Item> {
        let (perm, colors) = self.current.as_mut()?;
        let item = ColoredPermutation {
            r: self.r,
            n: perm.len(),
            perm: perm.clone(),
            colors: colors.clone(),
        };
        if !next_colors(colors, self.r) && !next_permutation(perm) {
            self.current = None;
        }
        Some(item)
    }
}

pub fn enumerate_group(r: usize, n: usize, max_order: u64) -> Result<GroupIter> {
    check_order(r, n, max_order)?;
    Ok(GroupIter {
        r,
        current: Some(((0..n).collect(), vec![0; n])),
    })
}

/// All involutions of `[0, n)` as image vectors, in lexicographic order.
pub(crate) fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(p: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        match p.iter().position(Option::is_none) {
            None => out.push(p.iter().map(|x| x.unwrap()).collect()),
            Some(i) => {
                p[i] = Some(i);
                go(p, out);
                for j in i + 1..p.len() {
                    if p[j].is_none() {
                        p[i] = Some(j);
                        p[j] = Some(i);
                        go(p, out);
                        p[j] = None;
                    }
                }
                p[i] = None;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![None; n], &mut out);
    out.sort();
    out
}

/// `I_{r,n}`: all symmetric elements, sorted by `(perm, colors)`.
pub fn enumerate_absolute_involutions(r: usize, n: usize, max_order: u64) -> Result<Vec<ColoredPermutation>> {
    check_order(r, n, max_order)?;
    let mut out = Vec::new();
    for perm in involutions(n) {
        // one free color per orbit of the involution
        let reps: Vec<usize> = (0..n).filter(|&i| perm[i] >= i).collect();
        let mut orbit_colors = vec![0; reps.len()];
        loop {
            let mut colors = vec![0; n];
            for (&i, &c) in reps.iter().zip(&orbit_colors) {
                colors[i] = c;
                colors[perm[i]] = c;
            }
            out.push(ColoredPermutation {
                r,
                n,
                perm: perm.clone(),
                colors,
            });
            if !next_colors(&mut orbit_colors, r) {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}
