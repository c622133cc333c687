//! The Gelfand model: `G(r,n)` acting by signed permutations on the span of
//! absolute involutions, `ρ(π) C_w = ±C_{π w π^t}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::Mul;

use serde::Serialize;

use crate::characters::{char_table, inner_product, CharacterEvaluator};
use crate::classes::conjugacy_classes;
use crate::colored_perm::{enumerate_absolute_involutions, involutions, simple_reflections, ColoredPermutation};
use crate::cyclotomic::CycEl;
use crate::error::{Error, Result};
use crate::rsk::shape_of_involution;
use crate::shapes::MultiPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k` for `odd = k odd`.
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

/// `I_{r,n}` in canonical order, with reverse lookup.
#[derive(Debug, Clone)]
pub struct ModelBasis {
    r: usize,
    n: usize,
    elements: Vec<ColoredPermutation>,
    index: HashMap<ColoredPermutation, usize>,
}

impl ModelBasis {
    pub fn new(r: usize, n: usize, max_order: u64) -> Result<Self> {
        let elements = enumerate_absolute_involutions(r, n, max_order)?;
        let index = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(Self { r, n, elements, index })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ColoredPermutation] {
        &self.elements
    }

    pub fn index_of(&self, w: &ColoredPermutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    fn check(&self, pi: &ColoredPermutation) -> Result<()> {
        if pi.r() != self.r || pi.n() != self.n {
            return Err(Error::DimensionMismatch {
                r1: self.r,
                n1: self.n,
                r2: pi.r(),
                n2: pi.n(),
            });
        }
        Ok(())
    }
}

/// A monomial matrix with entries `±1`: column `j` has its entry in row
/// `targets[j]` with sign `signs[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedPermMatrix {
    pub targets: Vec<usize>,
    pub signs: Vec<Sign>,
}

impl SignedPermMatrix {
    pub fn identity(dim: usize) -> Self {
        Self {
            targets: (0..dim).collect(),
            signs: vec![Sign::Plus; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.targets.len()
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let (targets, signs) = other
            .targets
            .iter()
            .zip(&other.signs)
            .map(|(&t, &s)| (self.targets[t], s * self.signs[t]))
            .unzip();
        Self { targets, signs }
    }

    pub fn trace(&self) -> i64 {
        self.targets
            .iter()
            .enumerate()
            .filter(|&(j, &t)| j == t)
            .map(|(j, _)| self.signs[j].value())
            .sum()
    }

    pub fn is_bijection(&self) -> bool {
        let mut hit = vec![false; self.dim()];
        self.targets
            .iter()
            .all(|&t| t < hit.len() && !std::mem::replace(&mut hit[t], true))
    }

    /// Dense form, row-major.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.dim()]; self.dim()];
        for (j, (&t, &s)) in self.targets.iter().zip(&self.signs).enumerate() {
            m[t][j] = s.value();
        }
        m
    }
}

fn check_involution(v: &ColoredPermutation) -> Result<()> {
    if v.is_absolute_involution() {
        Ok(())
    } else {
        Err(Error::NotAbsoluteInvolution)
    }
}

fn check_generator(i: usize, v: &ColoredPermutation) -> Result<()> {
    if i >= v.n() {
        return Err(Error::GeneratorOutOfRange { index: i, n: v.n() });
    }
    check_involution(v)
}

/// Sign of the generator action `ρ(s_i) C_v = sign(i; v) C_{s_i v s_i}`.
/// For `i > 0` it is `-1` iff `|v|` swaps `i` and `i+1`; for `i = 0` it is
/// `-1` iff `r` is even and `v` fixes `1` with color `-1`.
pub fn sign_generator(i: usize, v: &ColoredPermutation) -> Result<Sign> {
    check_generator(i, v)?;
    let minus = if i == 0 {
        v.r().is_multiple_of(2) && v.perm()[0] == 0 && v.colors()[0] == v.r() - 1
    } else {
        v.perm()[i - 1] == i
    };
    Ok(Sign::from_parity(minus))
}

/// Same sign from the descent form: for `i > 0`, `-1` iff `s_i v s_i = v`
/// and `i` is a descent of `|v|`.
pub fn sign_generator_by_descent(i: usize, v: &ColoredPermutation) -> Result<Sign> {
    check_generator(i, v)?;
    if i == 0 {
        return sign_generator(0, v);
    }
    let s = &simple_reflections(v.r(), v.n())?[i];
    let fixed = s.compose(v)?.compose(s)? == *v;
    let descent = v.perm()[i - 1] > v.perm()[i];
    Ok(Sign::from_parity(fixed && descent))
}

/// `(-1)^{#(Inv(|π|) ∩ Pair(|w|))}`.
pub fn sign_o(pi: &ColoredPermutation, w: &ColoredPermutation) -> Sign {
    let sigma = pi.perm();
    let crossings = w
        .perm()
        .iter()
        .enumerate()
        .filter(|&(i, &j)| j > i && sigma[j] < sigma[i])
        .count();
    Sign::from_parity(crossings % 2 == 1)
}

/// Fixed points `i` of `|w|` with odd color `2k+1` and
/// `k + z_π(i) ∈ [r/2, r-1]` mod `r`.
pub fn b_set(pi: &ColoredPermutation, w: &ColoredPermutation) -> Vec<usize> {
    let r = w.r();
    (0..w.n())
        .filter(|&i| {
            let z = w.colors()[i];
            w.perm()[i] == i && z % 2 == 1 && ((z - 1) / 2 + pi.colors()[i]) % r >= r / 2
        })
        .collect()
}

/// `(-1)^{#B(π,w)} · sign_o(π,w)`, for even `r`.
pub fn sign_e(pi: &ColoredPermutation, w: &ColoredPermutation) -> Result<Sign> {
    if w.r() % 2 == 1 {
        return Err(Error::OddModulus(w.r()));
    }
    Ok(Sign::from_parity(b_set(pi, w).len() % 2 == 1) * sign_o(pi, w))
}

/// `sign_o` for odd `r`, `sign_e` for even `r`.
pub fn sign(pi: &ColoredPermutation, w: &ColoredPermutation) -> Sign {
    if w.r().is_multiple_of(2) {
        sign_e(pi, w).expect("even modulus")
    } else {
        sign_o(pi, w)
    }
}

/// `π w π^t`.
pub fn act(pi: &ColoredPermutation, w: &ColoredPermutation) -> Result<ColoredPermutation> {
    pi.compose(w)?.compose(&pi.transpose())
}

pub fn rho(basis: &ModelBasis, pi: &ColoredPermutation) -> Result<SignedPermMatrix> {
    basis.check(pi)?;
    let mut targets = Vec::with_capacity(basis.len());
    let mut signs = Vec::with_capacity(basis.len());
    for w in basis.elements() {
        let image = act(pi, w)?;
        targets.push(basis.index_of(&image).ok_or(Error::NotAbsoluteInvolution)?);
        signs.push(sign(pi, w));
    }
    Ok(SignedPermMatrix { targets, signs })
}

/// `Fix(π) = {w ∈ I_{r,n} : π w π^t = w}`.
pub fn fix_set(basis: &ModelBasis, pi: &ColoredPermutation) -> Result<Vec<ColoredPermutation>> {
    basis.check(pi)?;
    let mut out = Vec::new();
    for w in basis.elements() {
        if act(pi, w)? == *w {
            out.push(w.clone());
        }
    }
    Ok(out)
}

/// `Fix(π)` built directly: involutions commuting with `|π|`, then every
/// orbit coloring that survives conjugation. Needs no basis, so it reaches
/// groups far beyond enumeration bounds.
pub fn fix_set_direct(pi: &ColoredPermutation) -> Result<Vec<ColoredPermutation>> {
    let (r, n) = (pi.r(), pi.n());
    let sigma = pi.perm();
    let mut out = Vec::new();
    for perm in involutions(n) {
        if (0..n).any(|i| perm[sigma[i]] != sigma[perm[i]]) {
            continue;
        }
        let reps: Vec<usize> = (0..n).filter(|&i| perm[i] >= i).collect();
        let mut orbit_colors = vec![0; reps.len()];
        loop {
            let mut colors = vec![0; n];
            for (&i, &c) in reps.iter().zip(&orbit_colors) {
                colors[i] = c;
                colors[perm[i]] = c;
            }
            let w = ColoredPermutation::new(r, perm.clone(), colors)?;
            if act(pi, &w)? == w {
                out.push(w);
            }
            let Some(k) = orbit_colors.iter().rposition(|&c| c + 1 < r) else {
                break;
            };
            orbit_colors[k] += 1;
            orbit_colors[k + 1..].iter_mut().for_each(|c| *c = 0);
        }
    }
    out.sort();
    Ok(out)
}

/// Trace of `ρ(π)` as `Σ_{w ∈ Fix(π)} sign(π, w)`, without building the matrix.
pub fn model_character(basis: &ModelBasis, pi: &ColoredPermutation) -> Result<i64> {
    basis.check(pi)?;
    let mut acc = 0;
    for w in basis.elements() {
        if act(pi, w)? == *w {
            acc += sign(pi, w).value();
        }
    }
    Ok(acc)
}

/// `ρ(π2 π1) = ρ(π2) ρ(π1)`.
pub fn homomorphism_check(basis: &ModelBasis, pi1: &ColoredPermutation, pi2: &ColoredPermutation) -> Result<bool> {
    let lhs = rho(basis, &pi2.compose(pi1)?)?;
    Ok(lhs == rho(basis, pi2)?.mul(&rho(basis, pi1)?))
}

/// How one cycle of `|π|` meets `|w|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CycleCase {
    /// Every point of the cycle is fixed by `|w|`.
    Fixed,
    /// `|w|` pairs the cycle with a different cycle.
    Paired,
    /// `|w|` pairs each point with the antipodal point of the same cycle.
    SelfPaired,
}

/// Cycle length `d` if `π` has `|π| = (1..d)(d+1..2d)⋯` with even `d` and
/// each cycle's color carried by its first position.
fn normalized_cycle_length(pi: &ColoredPermutation) -> Result<usize> {
    let n = pi.n();
    let Some(d) = (1..=n).find(|&d| pi.perm()[d - 1] == 0) else {
        return Ok(0);
    };
    if d % 2 == 1 || !n.is_multiple_of(d) {
        return Err(Error::NotNormalized(format!("cycle length {d} of {n}")));
    }
    for i in 0..n {
        let base = i - i % d;
        if pi.perm()[i] != base + (i - base + 1) % d {
            return Err(Error::NotNormalized(format!(
                "position {} is not in a consecutive cycle",
                i + 1
            )));
        }
        if i != base && pi.colors()[i] != 0 {
            return Err(Error::NotNormalized(format!(
                "color at position {} is not on a cycle start",
                i + 1
            )));
        }
    }
    Ok(d)
}

/// Case of each cycle of a normalized `π` relative to `w`.
pub fn cycle_cases(pi: &ColoredPermutation, w: &ColoredPermutation) -> Result<Vec<CycleCase>> {
    let d = normalized_cycle_length(pi)?;
    if d == 0 {
        return Ok(Vec::new());
    }
    let e = d / 2;
    Ok((0..pi.n())
        .step_by(d)
        .map(|base| {
            let within = |i: usize| w.perm()[i] >= base && w.perm()[i] < base + d;
            if (base..base + d).all(|i| w.perm()[i] == i) {
                CycleCase::Fixed
            } else if (base..base + d).all(|i| w.perm()[i] == base + (i - base + e) % d) {
                CycleCase::SelfPaired
            } else {
                debug_assert!((base..base + d).all(|i| !within(i)));
                CycleCase::Paired
            }
        })
        .collect())
}

/// The sign-reversing involution on `Fix(π)` for `|π|` of type `d^m`, `d` even.
///
/// The first cycle not paired with another is toggled: a self-paired cycle
/// becomes pointwise fixed and vice versa, keeping colors. A fixed cycle with
/// `z_π(c) = r/2` instead flips the low bit of each of its colors, which
/// stays inside `Fix(π)` and changes membership of its first point in `B`.
pub fn phi_toggle(pi: &ColoredPermutation, w: &ColoredPermutation) -> Result<ColoredPermutation> {
    check_involution(w)?;
    let cases = cycle_cases(pi, w)?;
    if act(pi, w)? != *w {
        return Err(Error::NotInFixSet);
    }
    let Some(c) = cases.iter().position(|&k| k != CycleCase::Paired) else {
        return Ok(w.clone());
    };
    let d = pi.n() / cases.len();
    let (base, e) = (c * d, d / 2);
    let mut perm = w.perm().to_vec();
    let mut colors = w.colors().to_vec();
    match cases[c] {
        CycleCase::SelfPaired => (base..base + d).for_each(|i| perm[i] = i),
        CycleCase::Fixed if pi.colors()[base] == 0 => {
            (base..base + d).for_each(|i| perm[i] = base + (i - base + e) % d)
        }
        CycleCase::Fixed => (base..base + d).for_each(|i| colors[i] ^= 1),
        CycleCase::Paired => unreachable!(),
    }
    let image = ColoredPermutation::new(w.r(), perm, colors)?;
    debug_assert_eq!(act(pi, &image)?, image);
    Ok(image)
}

/// `⟨χ_ρ, χ^λ⟩` for every irreducible `χ^λ`.
pub fn decompose_model(r: usize, n: usize, max_order: u64) -> Result<BTreeMap<MultiPartition, i64>> {
    let basis = ModelBasis::new(r, n, max_order)?;
    let table = char_table(r, n, max_order)?;
    let model: Vec<CycEl> = table
        .classes
        .iter()
        .map(|c| Ok(CycEl::from_integer(r, model_character(&basis, &c.representative)?)))
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for (shape, row) in table.rows.iter().zip(&table.values) {
        let m = inner_product(&table.classes, &model, row)?.as_integer()?;
        out.insert(shape.clone(), m);
    }
    Ok(out)
}

/// One block of the basis: absolute involutions with a given number of 2-cycles.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureGroup {
    pub two_cycles: usize,
    pub total_cycles: usize,
    pub dimension: usize,
    /// Distinct RSK shapes of the block's involutions.
    pub shapes: Vec<MultiPartition>,
    pub shape_dimension: u64,
    /// Every generator maps the block's span into itself.
    pub invariant: bool,
    /// Restricted trace equals `Σ χ^λ` over `shapes` on every class.
    pub character_matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub r: usize,
    pub n: usize,
    pub groups: Vec<ConjectureGroup>,
    /// Block traces add up to the full model character on every class.
    pub traces_add_up: bool,
}

impl ConjectureReport {
    pub fn all_match(&self) -> bool {
        self.groups.iter().all(|g| g.character_matches)
    }

    pub fn all_invariant(&self) -> bool {
        self.groups.iter().all(|g| g.invariant)
    }
}

pub fn conjecture_experiment(r: usize, n: usize, max_order: u64) -> Result<ConjectureReport> {
    let basis = ModelBasis::new(r, n, max_order)?;
    let classes = conjugacy_classes(r, n, max_order)?;
    let two_cycles = |w: &ColoredPermutation| w.perm().iter().enumerate().filter(|&(i, &j)| j > i).count();

    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, w) in basis.elements().iter().enumerate() {
        blocks.entry(two_cycles(w)).or_default().push(i);
    }
    let generators = if n == 0 { Vec::new() } else { simple_reflections(r, n)? };
    let gen_rho: Vec<SignedPermMatrix> = generators.iter().map(|s| rho(&basis, s)).collect::<Result<_>>()?;
    let class_rho: Vec<SignedPermMatrix> = classes
        .iter()
        .map(|c| rho(&basis, &c.representative))
        .collect::<Result<_>>()?;
    let mut evaluators: Vec<CharacterEvaluator> = classes
        .iter()
        .map(|c| CharacterEvaluator::for_element(&c.representative))
        .collect();

    let mut groups = Vec::new();
    let mut summed = vec![0i64; classes.len()];
    for (k, members) in &blocks {
        let invariant = gen_rho.iter().all(|m| {
            members
                .iter()
                .all(|&j| two_cycles(&basis.elements()[m.targets[j]]) == *k)
        });
        let shapes: BTreeSet<MultiPartition> = members
            .iter()
            .map(|&j| shape_of_involution(&basis.elements()[j]))
            .collect::<Result<_>>()?;
        let mut character_matches = true;
        for (ci, m) in class_rho.iter().enumerate() {
            let trace: i64 = members
                .iter()
                .filter(|&&j| m.targets[j] == j)
                .map(|&j| m.signs[j].value())
                .sum();
            summed[ci] += trace;
            let mut expect = CycEl::zero(r);
            for shape in &shapes {
                expect += &evaluators[ci].eval(shape)?;
            }
            if expect != CycEl::from_integer(r, trace) {
                character_matches = false;
            }
        }
        groups.push(ConjectureGroup {
            two_cycles: *k,
            total_cycles: n - k,
            dimension: members.len(),
            shape_dimension: shapes.iter().map(crate::shapes::multi_syt_count).sum(),
            shapes: shapes.into_iter().collect(),
            invariant,
            character_matches,
        });
    }
    let traces_add_up = class_rho.iter().zip(&summed).all(|(m, &s)| m.trace() == s);
    Ok(ConjectureReport {
        r,
        n,
        groups,
        traces_add_up,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::sum_irr_chars;
    use crate::colored_perm::{enumerate_group, group_order};
    use crate::roots::count_formula;

    fn cp(r: usize, perm1: &[usize], colors: &[usize]) -> ColoredPermutation {
        ColoredPermutation::new(r, perm1.iter().map(|&x| x - 1).collect(), colors.to_vec()).unwrap()
    }

    #[test]
    fn generator_sign_examples() {
        for n in 1..=3 {
            let id = ColoredPermutation::identity(2, n);
            for i in 1..n {
                assert_eq!(sign_generator(i, &id).unwrap(), Sign::Plus);
            }
        }
        for v in enumerate_absolute_involutions(3, 2, u64::MAX).unwrap() {
            assert_eq!(sign_generator(0, &v).unwrap(), Sign::Plus);
        }
        assert_eq!(sign_generator(0, &cp(2, &[1, 2], &[1, 0])).unwrap(), Sign::Minus);
        assert_eq!(sign_generator(1, &cp(2, &[2, 1], &[1, 1])).unwrap(), Sign::Minus);
        assert_eq!(
            sign_generator(2, &cp(2, &[2, 1], &[0, 0])),
            Err(Error::GeneratorOutOfRange { index: 2, n: 2 })
        );
        assert_eq!(
            sign_generator(0, &cp(2, &[2, 3, 1], &[0, 0, 0])),
            Err(Error::NotAbsoluteInvolution)
        );
    }

    #[test]
    fn descent_form_agrees_with_swap_form() {
        for r in 1..=4 {
            for n in 1..=4 {
                for v in enumerate_absolute_involutions(r, n, u64::MAX).unwrap() {
                    for i in 0..n {
                        assert_eq!(
                            sign_generator(i, &v).unwrap(),
                            sign_generator_by_descent(i, &v).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn group_level_signs_agree_on_generators() {
        for r in 1..=4 {
            for n in 1..=3 {
                let basis = ModelBasis::new(r, n, u64::MAX).unwrap();
                for (i, s) in simple_reflections(r, n).unwrap().iter().enumerate() {
                    for v in basis.elements() {
                        assert_eq!(sign(s, v), sign_generator(i, v).unwrap(), "r={r} i={i} v={v:?}");
                        // s_i v s_i^t, with s_i^t = s_i for i > 0
                        if i > 0 {
                            assert_eq!(act(s, v).unwrap(), s.compose(v).unwrap().compose(s).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn r2_remark() {
        // for r = 2: sign(0; v) = -1 iff s_0 v s_0 = v and z_1 = 1
        for n in 1..=4 {
            let s0 = simple_reflections(2, n).unwrap()[0].clone();
            for v in enumerate_absolute_involutions(2, n, u64::MAX).unwrap() {
                let fixed = s0.compose(&v).unwrap().compose(&s0).unwrap() == v;
                let expect = Sign::from_parity(fixed && v.colors()[0] == 1);
                assert_eq!(sign_generator(0, &v).unwrap(), expect);
                assert_eq!(sign_e(&s0, &v).unwrap(), expect);
            }
        }
    }

    #[test]
    fn sign_o_cases() {
        for d in 1..=6 {
            let mut cycle: Vec<usize> = (2..=d).collect();
            cycle.push(1);
            let pi = cp(3, &cycle, &vec![0; d]);
            assert_eq!(sign_o(&pi, &ColoredPermutation::identity(3, d)), Sign::Plus);
            assert_eq!(sign_o(&ColoredPermutation::identity(3, d), &pi), Sign::Plus);

            // two cycles paired with every shift
            let mut two: Vec<usize> = cycle.clone();
            two.extend(cycle.iter().map(|&x| x + d));
            let pi2 = cp(3, &two, &vec![0; 2 * d]);
            for shift in 0..d {
                let mut w = vec![0; 2 * d];
                for t in 0..d {
                    let j = d + (t + shift) % d;
                    w[t] = j + 1;
                    w[j] = t + 1;
                }
                assert_eq!(
                    sign_o(&pi2, &cp(3, &w, &vec![0; 2 * d])),
                    Sign::Plus,
                    "d={d} shift={shift}"
                );
            }

            if d % 2 == 0 {
                let e = d / 2;
                let w: Vec<usize> = (0..d).map(|t| (t + e) % d + 1).collect();
                assert_eq!(sign_o(&pi, &cp(3, &w, &vec![0; d])), Sign::Minus, "d={d}");
            }
        }
    }

    #[test]
    fn sign_e_examples() {
        assert_eq!(sign_e(&cp(4, &[1], &[2]), &cp(4, &[1], &[1])).unwrap(), Sign::Minus);
        assert_eq!(sign_e(&cp(4, &[1], &[0]), &cp(4, &[1], &[1])).unwrap(), Sign::Plus);
        assert_eq!(
            sign_e(&cp(3, &[1], &[0]), &cp(3, &[1], &[1])),
            Err(Error::OddModulus(3))
        );
        for r in [2, 4] {
            for w in enumerate_absolute_involutions(r, 3, u64::MAX).unwrap() {
                if w.colors().iter().all(|c| c % 2 == 0) {
                    for pi in enumerate_group(r, 3, u64::MAX).unwrap().step_by(11) {
                        assert_eq!(sign_e(&pi, &w).unwrap(), sign_o(&pi, &w));
                    }
                }
            }
        }
    }

    #[test]
    fn rho_basics() {
        for (r, n) in [(1, 3), (2, 2), (3, 2), (4, 2)] {
            let basis = ModelBasis::new(r, n, u64::MAX).unwrap();
            let id = rho(&basis, &ColoredPermutation::identity(r, n)).unwrap();
            assert_eq!(id, SignedPermMatrix::identity(basis.len()));
            for pi in enumerate_group(r, n, u64::MAX).unwrap() {
                let m = rho(&basis, &pi).unwrap();
                assert!(m.is_bijection());
                assert_eq!(m.trace(), model_character(&basis, &pi).unwrap());
                assert_eq!(m.mul(&rho(&basis, &pi.inverse()).unwrap()), id);
            }
        }
        let s1 = &simple_reflections(1, 2).unwrap()[1];
        assert_eq!(rho(&ModelBasis::new(1, 2, u64::MAX).unwrap(), s1).unwrap().trace(), 0);
        let s0 = &simple_reflections(2, 1).unwrap()[0];
        assert_eq!(rho(&ModelBasis::new(2, 1, u64::MAX).unwrap(), s0).unwrap().trace(), 0);
        let m = SignedPermMatrix {
            targets: vec![1, 0],
            signs: vec![Sign::Plus, Sign::Minus],
        };
        assert_eq!(m.to_dense(), vec![vec![0, -1], vec![1, 0]]);
    }

    #[test]
    fn homomorphism_small_groups() {
        for r in 1..=4 {
            for n in 1..=3 {
                if group_order(r, n).unwrap() > 200 {
                    continue;
                }
                let basis = ModelBasis::new(r, n, u64::MAX).unwrap();
                let g: Vec<_> = enumerate_group(r, n, u64::MAX).unwrap().collect();
                let rhos: Vec<_> = g.iter().map(|x| rho(&basis, x).unwrap()).collect();
                let index: HashMap<_, _> = g.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
                for (i1, a) in g.iter().enumerate() {
                    for (i2, b) in g.iter().enumerate() {
                        let prod = index[&b.compose(a).unwrap()];
                        assert_eq!(rhos[prod], rhos[i2].mul(&rhos[i1]), "r={r} n={n} {a:?} {b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn character_is_sum_of_irreducibles() {
        for r in 1..=3 {
            for n in 0..=3 {
                let basis = ModelBasis::new(r, n, u64::MAX).unwrap();
                for class in conjugacy_classes(r, n, u64::MAX).unwrap() {
                    let g = &class.representative;
                    assert_eq!(model_character(&basis, g).unwrap(), sum_irr_chars(g).unwrap(), "{g:?}");
                }
                assert_eq!(
                    model_character(&basis, &ColoredPermutation::identity(r, n)).unwrap(),
                    basis.len() as i64
                );
            }
        }
    }

    #[test]
    fn fix_set_structure() {
        for r in 1..=4 {
            for n in 1..=4 {
                if group_order(r, n).unwrap() > 2_000 {
                    continue;
                }
                let basis = ModelBasis::new(r, n, u64::MAX).unwrap();
                for class in conjugacy_classes(r, n, u64::MAX).unwrap() {
                    let pi = &class.representative;
                    let cycles = pi.colored_cycles();
                    let mut len_of = vec![0; n];
                    let mut cycle_of = vec![0; n];
                    for (k, c) in cycles.iter().enumerate() {
                        for &i in &c.support {
                            len_of[i] = c.length();
                            cycle_of[i] = k;
                        }
                    }
                    let fix = fix_set(&basis, pi).unwrap();
                    if pi.is_identity() {
                        assert_eq!(fix.len(), basis.len());
                    }
                    for w in &fix {
                        for i in 0..n {
                            assert_eq!(len_of[i], len_of[w.perm()[i]]);
                        }
                        for c in &cycles {
                            if c.support.iter().all(|&i| w.perm()[i] == i) {
                                if r % 2 == 1 {
                                    assert_eq!(c.color, 0);
                                } else {
                                    assert!(c.color == 0 || c.color == r / 2);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn direct_fix_set_matches_filter() {
        for (r, n) in [(1, 4), (2, 3), (3, 3), (4, 3), (2, 4)] {
            let basis = ModelBasis::new(r, n, u64::MAX).unwrap();
            for pi in enumerate_group(r, n, u64::MAX).unwrap().step_by(3) {
                assert_eq!(fix_set(&basis, &pi).unwrap(), fix_set_direct(&pi).unwrap());
            }
        }
    }

    #[test]
    fn odd_modulus_odd_cycles_have_positive_signs() {
        for r in [1, 3] {
            for (d, m) in [(1, 3), (3, 1), (1, 4), (3, 2)] {
                let n = d * m;
                let basis = ModelBasis::new(r, n, u64::MAX).unwrap();
                let perm: Vec<usize> = (0..n).map(|i| i - i % d + (i % d + 1) % d).collect();
                for colors in [vec![0; n], (0..n).map(|i| i % r).collect()] {
                    let pi = ColoredPermutation::new(r, perm.clone(), colors).unwrap();
                    for w in fix_set(&basis, &pi).unwrap() {
                        assert_eq!(sign_o(&pi, &w), Sign::Plus);
                    }
                }
            }
        }
    }

    /// Normalized `π` with cycle type `d^m` and the given cycle colors.
    fn normalized(r: usize, d: usize, cycle_colors: &[usize]) -> ColoredPermutation {
        let n = d * cycle_colors.len();
        let perm: Vec<usize> = (0..n).map(|i| i - i % d + (i % d + 1) % d).collect();
        let mut colors = vec![0; n];
        for (k, &c) in cycle_colors.iter().enumerate() {
            colors[k * d] = c;
        }
        ColoredPermutation::new(r, perm, colors).unwrap()
    }

    #[test]
    fn phi_is_a_sign_reversing_involution() {
        for r in [2, 3, 4] {
            for d in [2, 4] {
                for m in 1..=2 {
                    let mut colorings = vec![vec![]];
                    for _ in 0..m {
                        colorings = colorings
                            .into_iter()
                            .flat_map(|c: Vec<usize>| (0..r).map(move |z| [c.clone(), vec![z]].concat()))
                            .collect();
                    }
                    for cc in colorings {
                        let pi = normalized(r, d, &cc);
                        let mut survivors = 0u64;
                        let mut total = 0i64;
                        for w in fix_set_direct(&pi).unwrap() {
                            let image = phi_toggle(&pi, &w).unwrap();
                            assert_eq!(phi_toggle(&pi, &image).unwrap(), w);
                            total += sign(&pi, &w).value();
                            if image == w {
                                assert_eq!(sign(&pi, &w), Sign::Plus);
                                assert!(cycle_cases(&pi, &w).unwrap().iter().all(|&c| c == CycleCase::Paired));
                                survivors += 1;
                            } else {
                                assert_eq!(sign(&pi, &image), Sign::from_parity(sign(&pi, &w) == Sign::Plus));
                            }
                        }
                        assert_eq!(survivors, count_formula(&pi), "r={r} d={d} colors={cc:?}");
                        assert_eq!(total, survivors as i64);
                    }
                }
            }
        }
    }

    #[test]
    fn phi_rejects_bad_input() {
        let basis = ModelBasis::new(2, 4, u64::MAX).unwrap();
        let pi = normalized(2, 2, &[1, 1]);
        let outside = basis.elements().iter().find(|w| act(&pi, w).unwrap() != **w).unwrap();
        assert_eq!(phi_toggle(&pi, outside), Err(Error::NotInFixSet));
        let w = ColoredPermutation::identity(2, 4);
        let odd = ColoredPermutation::new(2, vec![1, 2, 0, 3], vec![0; 4]).unwrap();
        assert!(matches!(phi_toggle(&odd, &w), Err(Error::NotNormalized(_))));
        let spread = ColoredPermutation::new(2, vec![1, 0, 3, 2], vec![0, 1, 0, 0]).unwrap();
        assert!(matches!(phi_toggle(&spread, &w), Err(Error::NotNormalized(_))));
        let not_inv = ColoredPermutation::new(2, vec![1, 2, 3, 0], vec![0; 4]).unwrap();
        assert_eq!(phi_toggle(&pi, &not_inv), Err(Error::NotAbsoluteInvolution));
    }

    #[test]
    fn decomposition_is_multiplicity_free() {
        let m = decompose_model(2, 2, u64::MAX).unwrap();
        assert_eq!(m.len(), 5);
        assert!(m.values().all(|&v| v == 1));
        let m = decompose_model(1, 3, u64::MAX).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.values().all(|&v| v == 1));
        for (r, n) in [(3, 2), (4, 2), (2, 3)] {
            assert!(decompose_model(r, n, u64::MAX).unwrap().values().all(|&v| v == 1));
        }
    }

    #[test]
    fn conjecture_report_shape() {
        for (r, n) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
            let report = conjecture_experiment(r, n, u64::MAX).unwrap();
            assert!(report.all_invariant());
            assert!(report.traces_add_up);
            let basis = ModelBasis::new(r, n, u64::MAX).unwrap();
            assert_eq!(report.groups.iter().map(|g| g.dimension).sum::<usize>(), basis.len());
            let k0 = &report.groups[0];
            assert_eq!(k0.two_cycles, 0);
            assert_eq!(k0.dimension as u64, (r as u64).pow(n as u32));
        }
    }
}
