//! Irreducible characters of `S_n` and `G(r,n)` via the Murnaghan–Nakayama rule.
//!
//! Two evaluation routes exist and are kept in agreement by tests: the
//! memoized recursion that peels the last cycle off (used everywhere), and a
//! literal sum over r-partite rim hook tableaux.

use std::collections::HashMap;

use serde::Serialize;

use crate::classes::{conjugacy_classes, ConjugacyClass};
use crate::colored_perm::{check_order, enumerate_group, ColoredCycle, ColoredPermutation};
use crate::cyclotomic::CycEl;
use crate::error::{Error, Result};
use crate::shapes::{
    enumerate_multi_rht, multipartitions, partitions, rim_hook_removals, rim_hook_removals_in, MultiPartition,
    Partition,
};

/// `χ^λ` at a permutation with the given cycle lengths (in any order).
pub fn chi_sn(shape: &Partition, cycle_lengths: &[usize]) -> Result<i64> {
    let total: usize = cycle_lengths.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            got: total,
        });
    }
    fn go(shape: &Partition, lengths: &[usize], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
        let Some((&last, init)) = lengths.split_last() else {
            return i64::from(shape.is_empty());
        };
        let key = (shape.clone(), lengths.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let v = rim_hook_removals(shape, last)
            .iter()
            .map(|rm| rm.hook.sign() * go(&rm.remainder, init, memo))
            .sum();
        memo.insert(key, v);
        v
    }
    Ok(go(shape, cycle_lengths, &mut HashMap::new()))
}

/// `χ^λ` as a literal signed count of rim hook tableaux.
pub fn chi_sn_by_tableaux(shape: &Partition, cycle_lengths: &[usize]) -> Result<i64> {
    let multi = MultiPartition::new(vec![shape.clone()]);
    Ok(enumerate_multi_rht(&multi, cycle_lengths)?
        .iter()
        .map(|t| t.sign())
        .sum())
}

/// `(length, color)` of each cycle.
fn cycle_data(cycles: &[ColoredCycle]) -> Vec<(usize, usize)> {
    cycles.iter().map(|c| (c.length(), c.color)).collect()
}

/// Memoized evaluator of `χ^λ(g)` for one fixed ordered cycle sequence and
/// varying `λ`; the memo is shared across shapes.
pub struct CharacterEvaluator {
    r: usize,
    cycles: Vec<(usize, usize)>,
    memo: HashMap<(MultiPartition, usize), CycEl>,
}

impl CharacterEvaluator {
    pub fn new(r: usize, cycles: &[ColoredCycle]) -> Self {
        Self::from_cycle_data(r, cycle_data(cycles))
    }

    pub fn for_element(g: &ColoredPermutation) -> Self {
        Self::new(g.r(), &g.colored_cycles())
    }

    fn from_cycle_data(r: usize, cycles: Vec<(usize, usize)>) -> Self {
        Self {
            r,
            cycles,
            memo: HashMap::new(),
        }
    }

    pub fn eval(&mut self, shape: &MultiPartition) -> Result<CycEl> {
        if shape.r() != self.r {
            return Err(Error::ModulusMismatch {
                left: shape.r(),
                right: self.r,
            });
        }
        let total: usize = self.cycles.iter().map(|c| c.0).sum();
        if total != shape.size() {
            return Err(Error::SizeMismatch {
                expected: shape.size(),
                got: total,
            });
        }
        let cycles = std::mem::take(&mut self.cycles);
        let v = self.go(shape, &cycles);
        self.cycles = cycles;
        Ok(v)
    }

    fn go(&mut self, shape: &MultiPartition, cycles: &[(usize, usize)]) -> CycEl {
        let Some((&(len, color), init)) = cycles.split_last() else {
            return CycEl::from_integer(self.r, i64::from(shape.size() == 0));
        };
        let key = (shape.clone(), cycles.len());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut acc = CycEl::zero(self.r);
        for (j, comp) in shape.components().iter().enumerate() {
            for rm in rim_hook_removals_in(comp, len, j) {
                let smaller = shape.with_component(j, rm.remainder);
                let sub = self.go(&smaller, init);
                acc += &sub.mul_signed_omega(rm.hook.sign(), (j * color) as i64);
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// `χ^λ` of `G(r,n)` at an element with the given colored cycles.
pub fn chi_grn(shape: &MultiPartition, cycles: &[ColoredCycle]) -> Result<CycEl> {
    CharacterEvaluator::new(shape.r(), cycles).eval(shape)
}

pub fn chi_grn_at(shape: &MultiPartition, g: &ColoredPermutation) -> Result<CycEl> {
    chi_grn(shape, &g.colored_cycles())
}

/// `Σ_T Π (-1)^{ht(rh_i)} ω^{f(i) z(c_i)}` summed literally over tableaux.
pub fn chi_grn_by_tableaux(shape: &MultiPartition, cycles: &[ColoredCycle]) -> Result<CycEl> {
    let r = shape.r();
    let lengths: Vec<usize> = cycles.iter().map(ColoredCycle::length).collect();
    let mut acc = CycEl::zero(r);
    for t in enumerate_multi_rht(shape, &lengths)? {
        let exponent: usize = t.hooks.iter().zip(cycles).map(|(h, c)| h.component * c.color).sum();
        acc += &CycEl::omega_pow(r, exponent as i64).scale(t.sign());
    }
    Ok(acc)
}

/// Irreducible characters of `G(r,n)`: rows are multipartitions, columns classes.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    pub r: usize,
    pub n: usize,
    pub rows: Vec<MultiPartition>,
    pub classes: Vec<ConjugacyClass>,
    pub values: Vec<Vec<CycEl>>,
}

impl CharacterTable {
    pub fn order(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn row(&self, shape: &MultiPartition) -> Option<&[CycEl]> {
        self.rows
            .iter()
            .position(|s| s == shape)
            .map(|i| self.values[i].as_slice())
    }

    /// Column of the class containing `g`.
    pub fn class_index(&self, g: &ColoredPermutation) -> Option<usize> {
        let ct = g.class_type();
        self.classes.iter().position(|c| c.class_type == ct)
    }
}

pub fn char_table(r: usize, n: usize, max_order: u64) -> Result<CharacterTable> {
    let classes = conjugacy_classes(r, n, max_order)?;
    let rows = multipartitions(r, n)?;
    let mut values = vec![Vec::with_capacity(classes.len()); rows.len()];
    for class in &classes {
        let mut ev = CharacterEvaluator::for_element(&class.representative);
        for (i, shape) in rows.iter().enumerate() {
            values[i].push(ev.eval(shape)?.canonical());
        }
    }
    Ok(CharacterTable {
        r,
        n,
        rows,
        classes,
        values,
    })
}

/// `Σ_{χ ∈ Irr(G)} χ(g)`, which must be a rational integer.
pub fn sum_irr_chars(g: &ColoredPermutation) -> Result<i64> {
    let mut ev = CharacterEvaluator::for_element(g);
    let mut acc = CycEl::zero(g.r());
    for shape in multipartitions(g.r(), g.n())? {
        acc += &ev.eval(&shape)?;
    }
    acc.as_integer()
}

/// The same sum, reorganised over all maps `f` from cycles to components:
/// `Σ_f ω^{α(f)} Π_j Σ_{λ ⊢ n_j} χ^λ(σ_j)` with `α(f) = Σ_i f(i) z(c_i)`.
pub fn lemma_chi_sum(g: &ColoredPermutation) -> Result<i64> {
    let r = g.r();
    let cycles = g.colored_cycles();
    let m = cycles.len();
    // Σ_{λ ⊢ k} χ^λ(μ), cached by the sorted cycle-length multiset μ
    let mut sn_sums: HashMap<Vec<usize>, i64> = HashMap::new();
    let mut sn_sum = |mut lengths: Vec<usize>| -> Result<i64> {
        lengths.sort_unstable();
        if let Some(&v) = sn_sums.get(&lengths) {
            return Ok(v);
        }
        let k = lengths.iter().sum();
        let mut s = 0;
        for lam in partitions(k) {
            s += chi_sn(&lam, &lengths)?;
        }
        sn_sums.insert(lengths, s);
        Ok(s)
    };
    let mut acc = CycEl::zero(r);
    let mut f = vec![0usize; m];
    loop {
        let alpha: usize = f.iter().zip(&cycles).map(|(&j, c)| j * c.color).sum();
        let mut prod: i64 = 1;
        for j in 0..r {
            let lengths: Vec<usize> = cycles
                .iter()
                .zip(&f)
                .filter(|(_, &fj)| fj == j)
                .map(|(c, _)| c.length())
                .collect();
            prod *= sn_sum(lengths)?;
            if prod == 0 {
                break;
            }
        }
        if prod != 0 {
            acc += &CycEl::omega_pow(r, alpha as i64).scale(prod);
        }
        // next f in [0, r)^m
        let mut k = m;
        loop {
            if k == 0 {
                return acc.as_integer();
            }
            k -= 1;
            f[k] += 1;
            if f[k] < r {
                break;
            }
            f[k] = 0;
        }
    }
}

/// `(1/|G|) Σ_classes |C| f1(C) conj(f2(C))`, with exact division.
pub fn inner_product(classes: &[ConjugacyClass], f1: &[CycEl], f2: &[CycEl]) -> Result<CycEl> {
    if f1.len() != classes.len() || f2.len() != classes.len() {
        return Err(Error::SizeMismatch {
            expected: classes.len(),
            got: f1.len().min(f2.len()),
        });
    }
    let r = match classes.first() {
        Some(c) => c.representative.r(),
        None => return Err(Error::SizeMismatch { expected: 1, got: 0 }),
    };
    let mut acc = CycEl::zero(r);
    let mut order: i64 = 0;
    for ((class, a), b) in classes.iter().zip(f1).zip(f2) {
        let size = i64::try_from(class.size).expect("class size overflow");
        acc += &(a * &b.conj()).scale(size);
        order += size;
    }
    acc.div_exact(order)
}

/// Frobenius–Schur indicator `(1/|G|) Σ_g χ^λ(g²)`, by walking the group.
pub fn fs_indicator(shape: &MultiPartition, r: usize, n: usize, max_order: u64) -> Result<CycEl> {
    if shape.r() != r || shape.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: shape.size(),
        });
    }
    let order = check_order(r, n, max_order)?;
    let mut by_class: HashMap<crate::colored_perm::ClassType, CycEl> = HashMap::new();
    let mut acc = CycEl::zero(r);
    for g in enumerate_group(r, n, max_order)? {
        let sq = g.compose(&g)?;
        let ct = sq.class_type();
        let value = match by_class.get(&ct) {
            Some(v) => v.clone(),
            None => {
                let v = chi_grn_at(shape, &ct.representative())?;
                by_class.insert(ct, v.clone());
                v
            }
        };
        acc += &value;
    }
    acc.div_exact(order as i64)
}
