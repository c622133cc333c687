//! Exact arithmetic in the cyclotomic integers `Z[ω]`, `ω = e^{2πi/r}`.
//!
//! Elements are kept as raw coefficient vectors of length `r`, i.e. as
//! elements of `Z[x]/(x^r - 1)`. Addition and multiplication are the cheap
//! componentwise sum and cyclic convolution. Equality, integer extraction and
//! exact division go through the canonical form: the remainder modulo the
//! `r`-th cyclotomic polynomial `Φ_r`, which is unique.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("cyclotomic coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("cyclotomic coefficient overflow")
}

/// Integer polynomial product, coefficients low degree first.
fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = checked_add(out[i + j], checked_mul(x, y));
        }
    }
    out
}

/// Divides `num` by the monic polynomial `den`, returning `(quotient, remainder)`.
fn poly_divrem_monic(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        rem.resize(dd, 0);
        return (Vec::new(), rem);
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k];
        if c == 0 {
            continue;
        }
        quot[k - dd] = c;
        for (j, &dj) in den.iter().enumerate() {
            let idx = k - dd + j;
            rem[idx] = checked_add(rem[idx], -checked_mul(c, dj));
        }
    }
    rem.truncate(dd);
    (quot, rem)
}

fn compute_cyclotomic_polynomial(r: usize) -> Vec<i64> {
    // x^r - 1 = Π_{d | r} Φ_d
    let mut num = vec![0i64; r + 1];
    num[0] = -1;
    num[r] = 1;
    let mut den = vec![1i64];
    for d in (1..r).filter(|d| r.is_multiple_of(*d)) {
        den = poly_mul(&den, &cyclotomic_polynomial_cached(d));
    }
    let (quot, rem) = poly_divrem_monic(&num, &den);
    assert!(
        rem.iter().all(|&c| c == 0),
        "x^{r} - 1 not divisible by the product of lower cyclotomic polynomials"
    );
    quot
}

fn cyclotomic_polynomial_cached(r: usize) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().expect("poisoned cache").get(&r) {
        return Arc::clone(p);
    }
    let p = Arc::new(compute_cyclotomic_polynomial(r));
    cache
        .write()
        .expect("poisoned cache")
        .entry(r)
        .or_insert_with(|| Arc::clone(&p));
    p
}

/// The `r`-th cyclotomic polynomial `Φ_r`, coefficients low degree first.
///
/// Computed by exact division of `x^r - 1` by `Π_{d | r, d < r} Φ_d`.
pub fn cyclotomic_polynomial(r: usize) -> Result<Vec<i64>> {
    if r == 0 {
        return Err(Error::InvalidModulus(r));
    }
    Ok(cyclotomic_polynomial_cached(r).as_ref().clone())
}

/// Euler's totient, which is the degree of `Φ_r`.
pub fn euler_phi(r: usize) -> usize {
    (1..=r).filter(|&k| gcd(k, r) == 1).count()
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A cyclotomic integer `Σ coeffs[k] ω^k` with `ω` a primitive `r`-th root of unity.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "RawCycEl")]
pub struct CycEl {
    r: usize,
    coeffs: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCycEl {
    r: usize,
    coeffs: Vec<i64>,
}

impl TryFrom<RawCycEl> for CycEl {
    type Error = Error;

    fn try_from(raw: RawCycEl) -> Result<Self> {
        CycEl::from_coeffs(raw.r, raw.coeffs)
    }
}

impl CycEl {
    /// Builds an element from a raw coefficient vector of length exactly `r`.
    pub fn from_coeffs(r: usize, coeffs: Vec<i64>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidModulus(r));
        }
        if coeffs.len() != r {
            return Err(Error::Parse(format!("expected {r} coefficients, got {}", coeffs.len())));
        }
        Ok(Self { r, coeffs })
    }

    pub fn zero(r: usize) -> Self {
        assert!(r >= 1, "modulus must be positive");
        Self { r, coeffs: vec![0; r] }
    }

    pub fn one(r: usize) -> Self {
        Self::from_integer(r, 1)
    }

    pub fn from_integer(r: usize, value: i64) -> Self {
        let mut x = Self::zero(r);
        x.coeffs[0] = value;
        x
    }

    /// `ω^k`, with `k` taken modulo `r` (negative exponents allowed).
    pub fn omega_pow(r: usize, k: i64) -> Self {
        let mut x = Self::zero(r);
        x.coeffs[k.rem_euclid(r as i64) as usize] = 1;
        x
    }

    pub fn modulus(&self) -> usize {
        self.r
    }

    /// Raw (unreduced) coefficients.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| checked_add(a, b))
            .collect();
        Ok(Self { r: self.r, coeffs })
    }

    /// Cyclic convolution of the coefficient vectors.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        let r = self.r;
        let mut coeffs = vec![0i64; r];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % r;
                coeffs[k] = checked_add(coeffs[k], checked_mul(a, b));
            }
        }
        Ok(Self { r, coeffs })
    }

    /// Multiplies by `± ω^k` in place of a full convolution.
    pub fn mul_signed_omega(&self, sign: i64, k: i64) -> Self {
        let r = self.r;
        let shift = k.rem_euclid(r as i64) as usize;
        let mut coeffs = vec![0i64; r];
        for (i, &a) in self.coeffs.iter().enumerate() {
            coeffs[(i + shift) % r] = checked_mul(sign, a);
        }
        Self { r, coeffs }
    }

    pub fn scale(&self, factor: i64) -> Self {
        Self {
            r: self.r,
            coeffs: self.coeffs.iter().map(|&c| checked_mul(c, factor)).collect(),
        }
    }

    /// Complex conjugation `ω^k ↦ ω^{r-k}`.
    pub fn conj(&self) -> Self {
        let r = self.r;
        let mut coeffs = vec![0i64; r];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[(r - k) % r] = c;
        }
        Self { r, coeffs }
    }

    /// Remainder modulo `Φ_r`: `φ(r)` coefficients in the power basis.
    pub fn canonical_coeffs(&self) -> Vec<i64> {
        let phi = cyclotomic_polynomial_cached(self.r);
        poly_divrem_monic(&self.coeffs, &phi).1
    }

    /// The same value with raw coefficients replaced by the canonical remainder.
    pub fn canonical(&self) -> Self {
        let mut coeffs = self.canonical_coeffs();
        coeffs.resize(self.r, 0);
        Self { r: self.r, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.canonical_coeffs().iter().all(|&c| c == 0)
    }

    /// The rational integer this element equals, if it is one.
    pub fn as_integer(&self) -> Result<i64> {
        let c = self.canonical_coeffs();
        match c.split_first() {
            Some((&c0, rest)) if rest.iter().all(|&x| x == 0) => Ok(c0),
            _ => Err(Error::NotRationalInteger(self.to_string())),
        }
    }

    /// Exact division by a nonzero integer; fails unless every canonical
    /// coefficient is divisible.
    pub fn div_exact(&self, divisor: i64) -> Result<Self> {
        if divisor == 0 {
            return Err(Error::InexactDivision {
                value: self.to_string(),
                divisor,
            });
        }
        let c = self.canonical_coeffs();
        if c.iter().any(|&x| x % divisor != 0) {
            return Err(Error::InexactDivision {
                value: self.to_string(),
                divisor,
            });
        }
        let mut coeffs: Vec<i64> = c.into_iter().map(|x| x / divisor).collect();
        coeffs.resize(self.r, 0);
        Ok(Self { r: self.r, coeffs })
    }

    /// Parses the `{"r":..,"coeffs":[..]}` JSON form.
    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Floating-point embedding at `ω = e^{2πi/r}`, for display only.
    pub fn to_complex_approx(&self) -> (f64, f64) {
        let r = self.r as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &c)| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / r;
            (re + c as f64 * t.cos(), im + c as f64 * t.sin())
        })
    }

    fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.r != other.r {
            return Err(Error::ModulusMismatch {
                left: self.r,
                right: other.r,
            });
        }
        Ok(())
    }
}

/// `Σ_{j=0}^{r-1} ω^{j a}`; equals `r` when `a ≡ 0 (mod r)` and `0` otherwise.
pub fn root_of_unity_sum(r: usize, a: i64) -> CycEl {
    let mut acc = CycEl::zero(r);
    for j in 0..r as i64 {
        let k = (j * a).rem_euclid(r as i64) as usize;
        acc.coeffs[k] += 1;
    }
    acc
}

impl PartialEq for CycEl {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.canonical_coeffs() == other.canonical_coeffs()
    }
}

impl Eq for CycEl {}

impl fmt::Debug for CycEl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycEl(r={}, {})", self.r, self)
    }
}

impl fmt::Display for CycEl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical_coeffs();
        let mut first = true;
        for (k, &a) in c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let sign = if a < 0 { "-" } else { "+" };
            if first {
                if a < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let m = a.unsigned_abs();
            match (k, m) {
                (0, _) => write!(f, "{m}")?,
                (1, 1) => write!(f, "w")?,
                (1, _) => write!(f, "{m}w")?,
                (_, 1) => write!(f, "w^{k}")?,
                _ => write!(f, "{m}w^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &CycEl {
    type Output = CycEl;

    fn add(self, rhs: &CycEl) -> CycEl {
        CycEl::add(self, rhs).expect("modulus mismatch")
    }
}

impl AddAssign<&CycEl> for CycEl {
    fn add_assign(&mut self, rhs: &CycEl) {
        assert_eq!(self.r, rhs.r, "modulus mismatch");
        for (a, &b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = checked_add(*a, b);
        }
    }
}

impl Sub for &CycEl {
    type Output = CycEl;

    fn sub(self, rhs: &CycEl) -> CycEl {
        self + &(-rhs)
    }
}

impl Neg for &CycEl {
    type Output = CycEl;

    fn neg(self) -> CycEl {
        self.scale(-1)
    }
}

impl Mul for &CycEl {
    type Output = CycEl;

    fn mul(self, rhs: &CycEl) -> CycEl {
        CycEl::mul(self, rhs).expect("modulus mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn el(r: usize, c: &[i64]) -> CycEl {
        CycEl::from_coeffs(r, c.to_vec()).unwrap()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2).unwrap(), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4).unwrap(), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6).unwrap(), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12).unwrap(), vec![1, 0, -1, 0, 1]);
        assert!(cyclotomic_polynomial(0).is_err());
        for r in 1..=30 {
            assert_eq!(cyclotomic_polynomial(r).unwrap().len() - 1, euler_phi(r));
        }
    }

    #[test]
    fn omega_powers() {
        assert_eq!(CycEl::omega_pow(2, 1), CycEl::from_integer(2, -1));
        assert_eq!(CycEl::omega_pow(4, 2), CycEl::from_integer(4, -1));
        for r in 1..=12 {
            assert_eq!(CycEl::omega_pow(r, 0), CycEl::one(r));
            let w = CycEl::omega_pow(r, 1);
            assert_eq!(&w * &CycEl::omega_pow(r, r as i64 - 1), CycEl::one(r));
            // multiplicative order r / gcd(r, k)
            for k in 0..r as i64 {
                let x = CycEl::omega_pow(r, k);
                let ord = r / gcd(r, k as usize);
                let mut p = CycEl::one(r);
                for step in 1..=ord {
                    p = &p * &x;
                    assert_eq!(p == CycEl::one(r), step == ord, "r={r} k={k} step={step}");
                }
            }
        }
    }

    #[test]
    fn all_ones_vector_is_shift_invariant() {
        let s = el(3, &[1, 1, 1]);
        assert_eq!(&s * &CycEl::omega_pow(3, 1), s);
        assert!(s.is_zero());
        assert_eq!((&el(3, &[1, 1, 0]) * &CycEl::zero(3)), CycEl::zero(3));
    }

    #[test]
    fn root_sums() {
        assert_eq!(root_of_unity_sum(4, 1).as_integer().unwrap(), 0);
        assert_eq!(root_of_unity_sum(4, 0).as_integer().unwrap(), 4);
        assert_eq!(root_of_unity_sum(6, 3).as_integer().unwrap(), 0);
        for r in 1..=12usize {
            for a in 0..r as i64 {
                let expect = if a == 0 { r as i64 } else { 0 };
                assert_eq!(root_of_unity_sum(r, a).as_integer().unwrap(), expect);
            }
        }
    }

    #[test]
    fn integer_extraction() {
        for r in 1..=8 {
            assert_eq!(CycEl::from_integer(r, r as i64).as_integer().unwrap(), r as i64);
            assert_eq!(el(r, &vec![1; r]).as_integer().unwrap(), if r == 1 { 1 } else { 0 });
        }
        // ω = -1 is rational when r = 2
        assert_eq!(CycEl::omega_pow(2, 1).as_integer().unwrap(), -1);
        for r in 3..=8 {
            assert!(matches!(
                CycEl::omega_pow(r, 1).as_integer(),
                Err(Error::NotRationalInteger(_))
            ));
        }
    }

    #[test]
    fn conjugation() {
        for r in 1..=8 {
            assert_eq!(CycEl::one(r).conj(), CycEl::one(r));
            assert_eq!(CycEl::omega_pow(r, 1).conj(), CycEl::omega_pow(r, r as i64 - 1));
        }
    }

    #[test]
    fn mismatched_modulus_is_an_error() {
        assert!(matches!(
            CycEl::one(3).add(&CycEl::one(4)),
            Err(Error::ModulusMismatch { left: 3, right: 4 })
        ));
        assert!(CycEl::one(3).mul(&CycEl::one(2)).is_err());
    }

    #[test]
    fn exact_division() {
        let x = el(4, &[4, 8, 0, 0]);
        assert_eq!(x.div_exact(4).unwrap(), el(4, &[1, 2, 0, 0]));
        assert!(el(4, &[3, 0, 0, 0]).div_exact(2).is_err());
        // 2 + 2w^2 = 0 in Z[i]
        assert_eq!(el(4, &[2, 0, 2, 0]).div_exact(7).unwrap(), CycEl::zero(4));
    }

    #[test]
    fn json_form() {
        let x = CycEl::from_json_str(r#"{"r":4,"coeffs":[1,0,1,0]}"#).unwrap();
        assert!(x.is_zero());
        assert!(CycEl::from_json_str(r#"{"r":4,"coeffs":[1]}"#).is_err());
        assert!(CycEl::from_json_str(r#"{"r":0,"coeffs":[]}"#).is_err());
        let s = serde_json::to_string(&CycEl::omega_pow(3, 2)).unwrap();
        assert_eq!(s, r#"{"r":3,"coeffs":[0,0,1]}"#);
    }

    #[test]
    fn display() {
        assert_eq!(CycEl::from_integer(3, 0).to_string(), "0");
        assert_eq!(el(5, &[2, -1, 0, 3, 0]).to_string(), "2 - w + 3w^3");
    }

    fn arb_el(r: usize) -> impl Strategy<Value = CycEl> {
        proptest::collection::vec(-50i64..50, r).prop_map(move |c| CycEl::from_coeffs(r, c).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (CycEl, CycEl, CycEl)> {
        (1usize..=12).prop_flat_map(|r| (arb_el(r), arb_el(r), arb_el(r)))
    }

    proptest! {
        #[test]
        fn ring_axioms_hold_on_canonical_forms((a, b, c) in arb_triple()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            // reduction commutes with the operations
            prop_assert_eq!((&a.canonical() * &b.canonical()).canonical_coeffs(), (&a * &b).canonical_coeffs());
            let once = a.canonical();
            prop_assert_eq!(once.canonical().coeffs().to_vec(), once.coeffs().to_vec());
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }
    }
}
