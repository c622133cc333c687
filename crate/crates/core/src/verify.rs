//! Batch checks of the main identities for one group `G(r,n)`, with reports
//! that serialize to JSON.

use std::collections::HashMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{char_table, fs_indicator, inner_product, lemma_chi_sum, sum_irr_chars};
use crate::classes::conjugacy_classes;
use crate::colored_perm::{check_order, enumerate_group, simple_reflections, ColoredPermutation, DEFAULT_MAX_ORDER};
use crate::cyclotomic::CycEl;
use crate::error::Result;
use crate::model::{
    conjecture_experiment, decompose_model, fix_set_direct, model_character, phi_toggle, rho, sign, ConjectureReport,
    ModelBasis, Sign, SignedPermMatrix,
};
use crate::roots::{absolute_square, absolute_square_counts, count_formula};
use crate::rsk::{colored_rsk, inverse_colored_rsk};
use crate::shapes::{multi_syt_count, multipartitions, MultiPartition};

/// Groups up to this order get the exhaustive homomorphism check.
pub const EXHAUSTIVE_PAIR_LIMIT: u64 = 200;
pub const DEFAULT_RANDOM_PAIRS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub scope: Scope,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    pub cases: u64,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub r: usize,
    pub n: usize,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureReport>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub max_order: u64,
    pub seed: u64,
    pub random_pairs: usize,
    /// Check every pair for the homomorphism regardless of group size.
    pub exhaustive: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
            seed: 0,
            random_pairs: DEFAULT_RANDOM_PAIRS,
            exhaustive: false,
        }
    }
}

fn timed(name: &str, scope: Scope, f: impl FnOnce() -> Result<(u64, Option<Value>)>) -> Result<CheckResult> {
    let start = Instant::now();
    let (cases, counterexample) = f()?;
    Ok(CheckResult {
        name: name.to_string(),
        scope,
        pass: counterexample.is_none(),
        counterexample,
        cases,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// A uniformly random element of `G(r,n)`.
pub fn random_element<R: Rng>(r: usize, n: usize, rng: &mut R) -> ColoredPermutation {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let colors = (0..n).map(|_| rng.gen_range(0..r)).collect();
    ColoredPermutation::new(r, perm, colors).expect("valid element")
}

/// One row of the square-root comparison.
#[derive(Debug, Clone, Serialize)]
pub struct SqrootRow {
    pub class: MultiPartition,
    pub representative: ColoredPermutation,
    pub bruteforce: u64,
    pub formula: u64,
    pub character_sum: i64,
    pub pass: bool,
}

fn sqroot_row(g: &ColoredPermutation, bruteforce: u64) -> Result<SqrootRow> {
    let formula = count_formula(g);
    let character_sum = sum_irr_chars(g)?;
    Ok(SqrootRow {
        class: g.class_type().by_color,
        representative: g.clone(),
        bruteforce,
        formula,
        character_sum,
        pass: bruteforce == formula && character_sum == bruteforce as i64,
    })
}

/// Brute-force count, closed formula and character sum for every class.
pub fn sqroots_table(r: usize, n: usize, max_order: u64) -> Result<Vec<SqrootRow>> {
    let classes = conjugacy_classes(r, n, max_order)?;
    let counts = absolute_square_counts(r, n, max_order)?;
    classes
        .par_iter()
        .map(|c| sqroot_row(&c.representative, counts.get(&c.representative).copied().unwrap_or(0)))
        .collect()
}

/// The same comparison for one element.
pub fn sqroots_row_for(g: &ColoredPermutation, max_order: u64) -> Result<SqrootRow> {
    check_order(g.r(), g.n(), max_order)?;
    let brute = enumerate_group(g.r(), g.n(), max_order)?
        .filter(|v| absolute_square(v) == *g)
        .count();
    sqroot_row(g, brute as u64)
}

pub fn check_root_identity(r: usize, n: usize, opts: &VerifyOptions) -> Result<CheckResult> {
    timed("root_count_identity", Scope::Exhaustive, || {
        let rows = sqroots_table(r, n, opts.max_order)?;
        let bad = rows.iter().find(|row| !row.pass).map(|row| json!(row));
        Ok((rows.len() as u64, bad))
    })
}

/// Per-class comparison of the model character with `Σ χ(g)`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassCharacterCheck {
    pub class: MultiPartition,
    pub representative: ColoredPermutation,
    pub model_character: i64,
    pub character_sum: i64,
    pub pass: bool,
}

pub fn model_character_table(basis: &ModelBasis, max_order: u64) -> Result<Vec<ClassCharacterCheck>> {
    conjugacy_classes(basis.r(), basis.n(), max_order)?
        .par_iter()
        .map(|c| {
            let g = &c.representative;
            let model = model_character(basis, g)?;
            let sum = sum_irr_chars(g)?;
            Ok(ClassCharacterCheck {
                class: c.class_type.by_color.clone(),
                representative: g.clone(),
                model_character: model,
                character_sum: sum,
                pass: model == sum,
            })
        })
        .collect()
}

pub fn check_model_character(basis: &ModelBasis, opts: &VerifyOptions) -> Result<CheckResult> {
    timed("model_character_identity", Scope::Exhaustive, || {
        let rows = model_character_table(basis, opts.max_order)?;
        let bad = rows.iter().find(|row| !row.pass).map(|row| json!(row));
        Ok((rows.len() as u64, bad))
    })
}

pub fn check_multiplicities(r: usize, n: usize, opts: &VerifyOptions) -> Result<CheckResult> {
    timed("multiplicity_free", Scope::Exhaustive, || {
        let m = decompose_model(r, n, opts.max_order)?;
        let bad = m
            .iter()
            .find(|(_, &v)| v != 1)
            .map(|(s, v)| json!({"shape": s, "multiplicity": v}));
        Ok((m.len() as u64, bad))
    })
}

pub fn check_homomorphism(basis: &ModelBasis, opts: &VerifyOptions) -> Result<CheckResult> {
    let (r, n) = (basis.r(), basis.n());
    let order = check_order(r, n, opts.max_order)?;
    let exhaustive = opts.exhaustive || order <= EXHAUSTIVE_PAIR_LIMIT;
    let scope = if exhaustive { Scope::Exhaustive } else { Scope::Sampled };
    timed("rho_homomorphism", scope, || {
        let pairs: Vec<(ColoredPermutation, ColoredPermutation)> = if exhaustive {
            let g: Vec<_> = enumerate_group(r, n, opts.max_order)?.collect();
            g.iter()
                .flat_map(|a| g.iter().map(move |b| (a.clone(), b.clone())))
                .collect()
        } else {
            let gens = simple_reflections(r, n)?;
            let mut pairs: Vec<_> = gens
                .iter()
                .flat_map(|a| gens.iter().map(move |b| (a.clone(), b.clone())))
                .collect();
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            for _ in 0..opts.random_pairs {
                pairs.push((random_element(r, n, &mut rng), random_element(r, n, &mut rng)));
            }
            pairs
        };
        let mut cache: HashMap<ColoredPermutation, SignedPermMatrix> = HashMap::new();
        for (a, b) in &pairs {
            for x in [a, b] {
                if !cache.contains_key(x) {
                    cache.insert(x.clone(), rho(basis, x)?);
                }
            }
        }
        let bad = pairs
            .par_iter()
            .map(|(p1, p2)| -> Result<Option<Value>> {
                let lhs = rho(basis, &p2.compose(p1)?)?;
                Ok((lhs != cache[p2].mul(&cache[p1])).then(|| json!([p1, p2])))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .next();
        Ok((pairs.len() as u64, bad))
    })
}

pub fn check_dimension(basis: &ModelBasis, opts: &VerifyOptions) -> Result<CheckResult> {
    timed("model_dimension", Scope::Exhaustive, || {
        let (r, n) = (basis.r(), basis.n());
        let shapes = multipartitions(r, n)?;
        let dims: u64 = shapes.iter().map(multi_syt_count).sum();
        let squares: u64 = shapes.iter().map(|s| multi_syt_count(s).pow(2)).sum();
        let order = check_order(r, n, opts.max_order)?;
        let bad = (dims != basis.len() as u64 || squares != order)
            .then(|| json!({"involutions": basis.len(), "tableaux": dims, "order": order, "tableau_pairs": squares}));
        Ok((shapes.len() as u64, bad))
    })
}

pub fn check_rsk(r: usize, n: usize, opts: &VerifyOptions) -> Result<CheckResult> {
    timed("rsk_duality_and_round_trip", Scope::Exhaustive, || {
        let g: Vec<_> = enumerate_group(r, n, opts.max_order)?.collect();
        let bad = g
            .par_iter()
            .map(|pi| -> Result<Option<Value>> {
                let pair = colored_rsk(pi);
                let ok = colored_rsk(&pi.transpose()) == pair.swapped()
                    && inverse_colored_rsk(&pair, r, n)? == *pi
                    && pair.p.shape() == pair.q.shape();
                Ok((!ok).then(|| json!(pi)))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .next();
        Ok((g.len() as u64, bad))
    })
}

pub fn check_character_sum_paths(r: usize, n: usize, opts: &VerifyOptions) -> Result<CheckResult> {
    timed("character_sum_two_paths", Scope::Exhaustive, || {
        let classes = conjugacy_classes(r, n, opts.max_order)?;
        let bad = classes
            .par_iter()
            .map(|c| -> Result<Option<Value>> {
                let g = &c.representative;
                Ok((lemma_chi_sum(g)? != sum_irr_chars(g)?).then(|| json!(g)))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .next();
        Ok((classes.len() as u64, bad))
    })
}

pub fn check_orthogonality(r: usize, n: usize, opts: &VerifyOptions) -> Result<CheckResult> {
    timed("character_table_orthogonality", Scope::Exhaustive, || {
        let t = char_table(r, n, opts.max_order)?;
        let id = t
            .class_index(&ColoredPermutation::identity(r, n))
            .expect("identity class");
        let mut bad = None;
        'rows: for (i, a) in t.values.iter().enumerate() {
            if a[id] != CycEl::from_integer(r, multi_syt_count(&t.rows[i]) as i64) {
                bad = Some(json!({"degree_of": t.rows[i]}));
                break;
            }
            for (j, b) in t.values.iter().enumerate() {
                if inner_product(&t.classes, a, b)? != CycEl::from_integer(r, i64::from(i == j)) {
                    bad = Some(json!({"rows": [t.rows[i], t.rows[j]]}));
                    break 'rows;
                }
            }
        }
        Ok(((t.rows.len() * t.rows.len()) as u64, bad))
    })
}

/// For `r ≤ 2`: every indicator is 1, and for `r = 2` absolute squares are squares.
pub fn check_reality(r: usize, n: usize, opts: &VerifyOptions) -> Result<CheckResult> {
    timed("real_characters", Scope::Exhaustive, || {
        let shapes = multipartitions(r, n)?;
        let mut cases = shapes.len() as u64;
        let indicators: Vec<_> = shapes
            .par_iter()
            .map(|s| Ok((s, fs_indicator(s, r, n, opts.max_order)?)))
            .collect::<Result<_>>()?;
        if let Some((s, e)) = indicators.iter().find(|(_, e)| *e != CycEl::one(r)) {
            return Ok((cases, Some(json!({"shape": s, "indicator": e}))));
        }
        if r == 2 {
            for v in enumerate_group(r, n, opts.max_order)? {
                cases += 1;
                if absolute_square(&v) != v.compose(&v)? {
                    return Ok((cases, Some(json!(v))));
                }
            }
        }
        Ok((cases, None))
    })
}

/// `π` with `|π| = (1..d)(d+1..2d)⋯` and the given colors on cycle starts.
pub fn normalized_element(r: usize, d: usize, cycle_colors: &[usize]) -> ColoredPermutation {
    let n = d * cycle_colors.len();
    let perm: Vec<usize> = (0..n).map(|i| i - i % d + (i % d + 1) % d).collect();
    let mut colors = vec![0; n];
    for (k, &c) in cycle_colors.iter().enumerate() {
        colors[k * d] = c % r;
    }
    ColoredPermutation::new(r, perm, colors).expect("valid element")
}

/// Cancellation on `Fix(π)` for every normalized `π` of type `d^m`, `d` even:
/// the toggle is an involution that flips signs off its fixed points, the
/// fixed points all have sign +1, and their number is the root count.
pub fn check_sign_cancellation(r: usize, d: usize, m: usize) -> Result<CheckResult> {
    timed(&format!("sign_cancellation_d{d}_m{m}"), Scope::Exhaustive, || {
        let mut cases = 0;
        let colorings = (r as u64).pow(m as u32);
        for code in 0..colorings {
            let cc: Vec<usize> = (0..m).map(|k| (code / (r as u64).pow(k as u32)) as usize % r).collect();
            let pi = normalized_element(r, d, &cc);
            let mut survivors = 0u64;
            let mut total = 0i64;
            for w in fix_set_direct(&pi)? {
                cases += 1;
                let image = phi_toggle(&pi, &w)?;
                let s = sign(&pi, &w);
                total += s.value();
                let ok = phi_toggle(&pi, &image)? == w
                    && if image == w {
                        survivors += 1;
                        s == Sign::Plus
                    } else {
                        sign(&pi, &image) != s
                    };
                if !ok {
                    return Ok((cases, Some(json!({"pi": pi, "w": w}))));
                }
            }
            if survivors != count_formula(&pi) || total != survivors as i64 {
                return Ok((
                    cases,
                    Some(json!({"pi": pi, "survivors": survivors, "signed_sum": total})),
                ));
            }
        }
        Ok((cases, None))
    })
}

/// Every check that applies to `G(r,n)`, plus the conjecture report.
pub fn verify_all(r: usize, n: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_order(r, n, opts.max_order)?;
    let basis = ModelBasis::new(r, n, opts.max_order)?;
    let mut checks = vec![
        check_root_identity(r, n, opts)?,
        check_model_character(&basis, opts)?,
        check_multiplicities(r, n, opts)?,
        check_dimension(&basis, opts)?,
        check_rsk(r, n, opts)?,
        check_character_sum_paths(r, n, opts)?,
        check_orthogonality(r, n, opts)?,
    ];
    if n > 0 {
        checks.push(check_homomorphism(&basis, opts)?);
    }
    if r <= 2 {
        checks.push(check_reality(r, n, opts)?);
    }
    for d in (2..=n).step_by(2) {
        if n.is_multiple_of(d) {
            checks.push(check_sign_cancellation(r, d, n / d)?);
        }
    }
    let start = Instant::now();
    let conjecture = conjecture_experiment(r, n, opts.max_order)?;
    let invariant = conjecture.all_invariant() && conjecture.traces_add_up;
    checks.push(CheckResult {
        name: "block_invariance".into(),
        scope: Scope::Exhaustive,
        pass: invariant,
        counterexample: (!invariant).then(|| json!(conjecture.groups)),
        cases: conjecture.groups.len() as u64,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    });
    Ok(VerificationReport {
        r,
        n,
        checks,
        conjecture: Some(conjecture),
    })
}
