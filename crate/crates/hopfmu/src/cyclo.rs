//! Exact arithmetic in the cyclotomic field Q(zeta_n).
//!
//! Elements are stored in the power basis `1, zeta, ..., zeta^{phi(n)-1}`
//! reduced modulo the n-th cyclotomic polynomial Phi_n, so two elements are
//! equal iff their orders and coefficient vectors match and zero-testing is
//! exact. Phi_n is obtained by dividing `x^n - 1` by Phi_d for every proper
//! divisor d of n; the result is cached per order. No floating point is used
//! anywhere.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from cyclotomic field operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u64),
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
}

// ---------------------------------------------------------------------------
// Polynomial helpers over Q, little-endian coefficient vectors.
// ---------------------------------------------------------------------------

type Poly = Vec<BigRational>;

fn rat_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn poly_trim(p: &mut Poly) {
    while p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    poly_trim(&mut out);
    out
}

/// Quotient and remainder of `num / den` over Q; `den` must be nonzero.
fn poly_divrem(num: &[BigRational], den: &[BigRational]) -> (Poly, Poly) {
    assert!(!den.is_empty(), "polynomial division by zero");
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = den.last().unwrap().recip();
    let mut quot = vec![BigRational::zero(); rem.len() - den.len() + 1];
    while rem.len() >= den.len() {
        let k = rem.len() - den.len();
        let factor = rem.last().unwrap() * &lead_inv;
        quot[k] = factor.clone();
        for (i, di) in den.iter().enumerate() {
            if di.is_zero() {
                continue;
            }
            let v = &rem[k + i] - &factor * di;
            rem[k + i] = v;
        }
        rem.pop(); // leading term cancels exactly
        poly_trim(&mut rem);
        if rem.len() < den.len() {
            break;
        }
    }
    poly_trim(&mut quot);
    (quot, rem)
}

/// Extended Euclid: find `b` with `a * b == 1 (mod modulus)`, or `None`
/// if gcd(a, modulus) is not a nonzero constant.
fn poly_inverse_mod(a: &[BigRational], modulus: &[BigRational]) -> Option<Poly> {
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut s0: Poly = Vec::new();
    let mut s1: Poly = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r2) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if r0.len() != 1 {
        return None;
    }
    let c_inv = r0[0].recip();
    let mut out: Poly = s0.iter().map(|x| x * &c_inv).collect();
    let (_, rem) = poly_divrem(&out, modulus);
    out = rem;
    Some(out)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

fn x_n_minus_1(n: u64) -> Poly {
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    coeffs[0] = -BigRational::one();
    coeffs[n as usize] = BigRational::one();
    coeffs
}

fn compute_cyclotomic(n: u64) -> Poly {
    if n == 1 {
        return vec![-BigRational::one(), BigRational::one()];
    }
    let mut result = x_n_minus_1(n);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        let (q, r) = poly_divrem(&result, &phi_d);
        debug_assert!(r.is_empty(), "Phi_{d} must divide x^{n} - 1 exactly");
        result = q;
    }
    result
}

/// The n-th cyclotomic polynomial Phi_n, computed once per order and cached.
pub(crate) fn cyclotomic_poly(n: u64) -> Arc<Poly> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Poly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    // Computed outside the lock: the recursion below re-enters this function.
    let p = Arc::new(compute_cyclotomic(n));
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&p))
        .clone()
}

/// Euler's totient of n, read off as the degree of Phi_n.
pub fn phi(n: u64) -> usize {
    assert!(n >= 1, "cyclotomic order must be positive");
    cyclotomic_poly(n).len() - 1
}

// ---------------------------------------------------------------------------
// CycNum
// ---------------------------------------------------------------------------

/// An element of Q(zeta_n) in canonical form: coefficients of
/// `1, zeta, ..., zeta^{phi(n)-1}` after reduction mod Phi_n.
#[derive(Clone, PartialEq, Eq)]
pub struct CycNum {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    fn from_poly(order: u64, mut poly: Poly) -> Self {
        let modulus = cyclotomic_poly(order);
        poly_trim(&mut poly);
        if poly.len() >= modulus.len() {
            let (_, rem) = poly_divrem(&poly, &modulus);
            poly = rem;
        }
        poly.resize(modulus.len() - 1, BigRational::zero());
        CycNum {
            order,
            coeffs: poly,
        }
    }

    /// The zero element of Q(zeta_n).
    pub fn zero(order: u64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        CycNum {
            order,
            coeffs: vec![BigRational::zero(); phi(order)],
        }
    }

    /// The unit of Q(zeta_n).
    pub fn one(order: u64) -> Self {
        Self::from_rational(BigRational::one(), order)
    }

    /// Embed a rational constant into Q(zeta_n).
    pub fn from_rational(x: BigRational, order: u64) -> Self {
        let mut out = Self::zero(order);
        if !out.coeffs.is_empty() {
            out.coeffs[0] = x;
        } else {
            // order 1 or 2 still has phi(n) = 1, so this branch is unreachable
            unreachable!("phi(n) >= 1 for all n >= 1");
        }
        out
    }

    /// Embed an integer constant into Q(zeta_n).
    pub fn from_int(v: i64, order: u64) -> Self {
        Self::from_rational(rat_int(v), order)
    }

    /// `zeta_n^e` in canonical form; `e` is reduced mod n.
    pub fn root(order: u64, e: i64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let e = e.rem_euclid(order as i64) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        Self::from_poly(order, poly)
    }

    /// Cyclotomic order n of the ambient field.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Power-basis coefficients, length phi(n).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value of a constant element, if it is one.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_same_order(&self, rhs: &CycNum, op: &str) {
        assert!(
            self.order == rhs.order,
            "cyclotomic order mismatch in {op}: {} vs {}",
            self.order,
            rhs.order
        );
    }

    /// Multiplicative inverse; fails exactly on zero.
    pub fn inv(&self) -> Result<CycNum, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero(self.order));
        }
        let modulus = cyclotomic_poly(self.order);
        let inv = poly_inverse_mod(&self.coeffs, &modulus)
            .expect("Phi_n is irreducible, so every nonzero element is invertible");
        Ok(Self::from_poly(self.order, inv))
    }

    /// Exact division.
    pub fn div(&self, rhs: &CycNum) -> Result<CycNum, CycloError> {
        self.assert_same_order(rhs, "div");
        Ok(self * &rhs.inv()?)
    }

    /// Integer power, with negative exponents via the inverse.
    ///
    /// Panics when a negative power of zero is requested.
    pub fn pow(&self, k: i64) -> CycNum {
        if k == 0 {
            return Self::one(self.order);
        }
        let base = if k < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        self.assert_same_order(rhs, "add");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycNum {
            order: self.order,
            coeffs,
        }
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self.assert_same_order(rhs, "sub");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycNum {
            order: self.order,
            coeffs,
        }
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        self.assert_same_order(rhs, "mul");
        if self.is_zero() || rhs.is_zero() {
            return CycNum::zero(self.order);
        }
        CycNum::from_poly(self.order, poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        &self + &rhs
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        &self - &rhs
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        &self * &rhs
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Formatting and serialization
// ---------------------------------------------------------------------------

/// Decimal string for a rational: `"p/q"`, with `/q` omitted when q = 1.
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse the string format produced by [`rational_to_string`].
pub fn rational_from_str(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((num, den)) => {
            let n = num.parse::<BigInt>().ok()?;
            let d = den.parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
    }
}

/// Renders a coefficient vector over powers of `q` as a sum, e.g.
/// `1 - q^2 + (1/2)q^3`; the zero vector renders as `"0"`.
fn format_power_terms(coeffs: &[BigRational]) -> String {
    let terms: Vec<(usize, &BigRational)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (pos, (k, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if pos == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag_str = rational_to_string(&mag);
        if *k == 0 {
            out.push_str(&mag_str);
        } else {
            if !mag.is_one() {
                if mag.denom().is_one() {
                    out.push_str(&mag_str);
                } else {
                    out.push('(');
                    out.push_str(&mag_str);
                    out.push(')');
                }
            }
            if *k == 1 {
                out.push('q');
            } else {
                out.push_str(&format!("q^{k}"));
            }
        }
    }
    out
}

/// Exact solve of a small square rational system; `None` when singular.
fn solve_rational_square(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let d = b.len();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        for r in 0..d {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c2 in 0..d {
                let delta = &factor * &a[col][c2];
                a[r][c2] -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Some(b)
}

/// Re-express `x` over the root powers `q^0, ..., q^{n-1}`, choosing among
/// all lifts of the reduced representative the one with the fewest nonzero
/// coefficients (ties broken by smallest coefficient l1-norm, then
/// lexicographically). Lifts differ by multiples of Phi_n; the search zeroes
/// every possible set of `n - phi(n)` coordinates, which is exhaustive for
/// the orders this crate targets. For orders whose kernel would make that
/// search large the plain zero-padded lift is returned instead.
pub fn root_power_lift(x: &CycNum) -> Vec<BigRational> {
    let n = x.order() as usize;
    let deg = x.coeffs().len();
    let d = n - deg;
    let mut base = x.coeffs().to_vec();
    base.resize(n, BigRational::zero());
    if d == 0 {
        return base;
    }
    let subset_count = (0..d as u128).try_fold(1u128, |acc, i| {
        acc.checked_mul(n as u128 - i)?.checked_div(i + 1)
    });
    if !matches!(subset_count, Some(c) if c <= 20_000) {
        return base;
    }
    let cyclo = cyclotomic_poly(x.order());
    // Kernel column j holds Phi_n(q) * q^j; entry (i, j) is its q^i term.
    let kernel = |i: usize, j: usize| -> BigRational {
        if i >= j && i - j < cyclo.len() {
            cyclo[i - j].clone()
        } else {
            BigRational::zero()
        }
    };
    let metric = |v: &[BigRational]| -> (usize, BigRational) {
        let support = v.iter().filter(|c| !c.is_zero()).count();
        let l1 = v.iter().map(|c| c.abs()).sum();
        (support, l1)
    };
    let mut best = base.clone();
    let mut best_metric = metric(&base);
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let a: Vec<Vec<BigRational>> = idx
            .iter()
            .map(|&i| (0..d).map(|j| kernel(i, j)).collect())
            .collect();
        let rhs: Vec<BigRational> = idx.iter().map(|&i| -&base[i]).collect();
        if let Some(g) = solve_rational_square(a, rhs) {
            let candidate: Vec<BigRational> = (0..n)
                .map(|i| &base[i] + (0..d).map(|j| kernel(i, j) * &g[j]).sum::<BigRational>())
                .collect();
            let m = metric(&candidate);
            if m < best_metric || (m == best_metric && candidate < best) {
                best_metric = m;
                best = candidate;
            }
        }
        // Next size-d subset of 0..n in lexicographic order.
        let mut t = d;
        while t > 0 && idx[t - 1] == n - d + t - 1 {
            t -= 1;
        }
        if t == 0 {
            break;
        }
        idx[t - 1] += 1;
        for j in t..d {
            idx[j] = idx[j - 1] + 1;
        }
    }
    best
}

/// The canonical human-readable form of `x` as a sum of root powers
/// `q^0..q^{n-1}` (see [`root_power_lift`]), e.g. `-q - q^4`.
pub fn pretty_in_root_powers(x: &CycNum) -> String {
    format_power_terms(&root_power_lift(x))
}

impl fmt::Display for CycNum {
    /// Renders the power basis with symbol `q`, e.g. `1 - q^2 + (1/2)q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_power_terms(&self.coeffs))
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum(n={}, {})", self.order, self)
    }
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CycNum", 2)?;
        st.serialize_field("order", &self.order)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(rational_to_string).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            order: u64,
            coeffs: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.order < 1 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        let expect = phi(repr.order);
        if repr.coeffs.len() != expect {
            return Err(D::Error::custom(format!(
                "expected {expect} coefficients for order {}, got {}",
                repr.order,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| {
                rational_from_str(s)
                    .ok_or_else(|| D::Error::custom(format!("invalid rational: {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CycNum {
            order: repr.order,
            coeffs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn phi_values() {
        let expected = [
            (1, 1),
            (2, 1),
            (3, 2),
            (4, 2),
            (5, 4),
            (6, 2),
            (7, 6),
            (8, 4),
            (9, 6),
            (10, 4),
            (11, 10),
            (12, 4),
            (13, 12),
        ];
        for (n, p) in expected {
            assert_eq!(phi(n), p, "phi({n})");
        }
    }

    #[test]
    fn from_rational_constants() {
        assert!(CycNum::from_int(1, 5).is_one());
        assert!(CycNum::from_int(0, 5).is_zero());
        let half = CycNum::from_rational(rat(-1, 2), 3);
        assert_eq!(half.coeffs()[0], rat(-1, 2));
        assert!(half.coeffs()[1].is_zero());
    }

    #[test]
    fn root_identity_cases() {
        assert!(CycNum::root(5, 0).is_one());
        assert!(CycNum::root(5, 5).is_one());
        assert_eq!(CycNum::root(5, -1), CycNum::root(5, 4));
    }

    #[test]
    fn zeta3_squared_reduces() {
        // Phi_3 = x^2 + x + 1, so zeta^2 = -1 - zeta.
        let z = CycNum::root(3, 1);
        let sq = &z * &z;
        assert_eq!(sq.coeffs()[0], rat(-1, 1));
        assert_eq!(sq.coeffs()[1], rat(-1, 1));
    }

    #[test]
    fn sum_of_primitive_fifth_roots() {
        let mut sum = CycNum::zero(5);
        for e in 1..=4 {
            sum = &sum + &CycNum::root(5, e);
        }
        assert_eq!(sum, CycNum::from_int(-1, 5));
    }

    #[test]
    fn additive_identity() {
        let a = &CycNum::root(7, 3) + &CycNum::from_int(2, 7);
        assert_eq!(&a + &CycNum::zero(7), a);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn mul_inverse_roots() {
        let prod = &CycNum::root(5, 1) * &CycNum::root(5, 4);
        assert!(prod.is_one());
        assert_eq!(CycNum::root(5, 2).inv().unwrap(), CycNum::root(5, 3));
        assert!(CycNum::one(5).inv().unwrap().is_one());
    }

    #[test]
    fn inv_of_one_minus_zeta3() {
        let a = &CycNum::one(3) - &CycNum::root(3, 1);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        // Hand computation: (1 - zeta)^-1 = 2/3 + (1/3) zeta.
        assert_eq!(inv.coeffs()[0], rat(2, 3));
        assert_eq!(inv.coeffs()[1], rat(1, 3));
    }

    #[test]
    fn inv_of_zero_fails() {
        assert_eq!(
            CycNum::zero(5).inv(),
            Err(CycloError::DivisionByZero(5))
        );
    }

    #[test]
    fn pow_cases() {
        assert_eq!(CycNum::root(5, 1).pow(-1), CycNum::root(5, 4));
        assert!(CycNum::root(7, 3).pow(0).is_one());
        assert_eq!(CycNum::root(5, 2).pow(3), CycNum::root(5, 1));
    }

    #[test]
    fn roots_satisfy_their_cyclotomic_polynomial() {
        for n in 1..=13u64 {
            for e in 0..n as i64 {
                assert!(CycNum::root(n, e).pow(n as i64).is_one(), "zeta_{n}^{e}");
            }
            let z = CycNum::root(n, 1);
            let modulus = cyclotomic_poly(n);
            let mut val = CycNum::zero(n);
            for (k, c) in modulus.iter().enumerate() {
                let term = CycNum::from_rational(c.clone(), n);
                val = &val + &(&term * &z.pow(k as i64));
            }
            assert!(val.is_zero(), "Phi_{n}(zeta_{n}) = 0");
        }
    }

    #[test]
    #[should_panic(expected = "order mismatch")]
    fn mixed_orders_panic() {
        let _ = &CycNum::one(5) + &CycNum::one(7);
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(CycNum::zero(5).to_string(), "0");
        assert_eq!(CycNum::from_int(1, 5).to_string(), "1");
        assert_eq!(CycNum::from_rational(rat(-1, 2), 5).to_string(), "-1/2");
        let mut x = CycNum::one(5);
        x = &x - &CycNum::root(5, 2);
        x = &x + &(&CycNum::from_rational(rat(1, 2), 5) * &CycNum::root(5, 3));
        assert_eq!(x.to_string(), "1 - q^2 + (1/2)q^3");
        let y = &CycNum::from_int(2, 5) * &CycNum::root(5, 1);
        assert_eq!(y.to_string(), "2q");
        assert_eq!((-&CycNum::root(5, 1)).to_string(), "-q");
    }

    #[test]
    fn root_power_pretty_picks_the_smallest_lift() {
        // -(q + q^-1) reduces to 1 + q^2 + q^3 at n=5; the two-term lift
        // -q - q^4 (differing by Phi_5) is canonical.
        let neg_two_cos = -&(&CycNum::root(5, 1) + &CycNum::root(5, 4));
        assert_eq!(pretty_in_root_powers(&neg_two_cos), "-q - q^4");
        // q^2 + 1 + q^-2 is the same field element.
        let balanced_three = &(&CycNum::root(5, 2) + &CycNum::one(5)) + &CycNum::root(5, 3);
        assert_eq!(pretty_in_root_powers(&balanced_three), "-q - q^4");
        // Constants and single roots stay themselves.
        assert_eq!(pretty_in_root_powers(&CycNum::zero(7)), "0");
        assert_eq!(pretty_in_root_powers(&CycNum::from_int(-2, 7)), "-2");
        assert_eq!(pretty_in_root_powers(&CycNum::from_rational(rat(3, 2), 5)), "3/2");
        assert_eq!(pretty_in_root_powers(&CycNum::root(5, 2)), "q^2");
        // Composite order: zeta_9^8 reduces to -q^2 - q^5 in the power
        // basis but lifts back to the single root power.
        assert_eq!(pretty_in_root_powers(&CycNum::root(9, 8)), "q^8");
        // 1 + zeta_3 = -zeta_3^2.
        let x = &CycNum::one(3) + &CycNum::root(3, 1);
        assert_eq!(pretty_in_root_powers(&x), "-q^2");
    }

    #[test]
    fn json_round_trip() {
        let x = &(&CycNum::root(12, 5) + &CycNum::from_rational(rat(3, 4), 12))
            * &CycNum::from_int(2, 12);
        let json = serde_json::to_string(&x).unwrap();
        let back: CycNum = serde_json::from_str(&json).unwrap();
        assert_eq!(x, back);
        let one = CycNum::from_int(1, 3);
        assert_eq!(
            serde_json::to_string(&one).unwrap(),
            r#"{"order":3,"coeffs":["1","0"]}"#
        );
    }

    #[test]
    fn rational_string_forms() {
        assert_eq!(rational_to_string(&rat(3, 1)), "3");
        assert_eq!(rational_to_string(&rat(-1, 2)), "-1/2");
        assert_eq!(rational_from_str("5").unwrap(), rat(5, 1));
        assert_eq!(rational_from_str("-7/3").unwrap(), rat(-7, 3));
        assert!(rational_from_str("1/0").is_none());
        assert!(rational_from_str("x").is_none());
    }

    fn arb_cyc(order: u64) -> impl Strategy<Value = CycNum> {
        let degree = phi(order);
        proptest::collection::vec((-6i64..=6, 1i64..=4), degree).prop_map(move |cs| {
            let coeffs = cs.into_iter().map(|(n, d)| rat(n, d)).collect();
            CycNum { order, coeffs }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms_hold(a in arb_cyc(5), b in arb_cyc(5), c in arb_cyc(5)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn mul_commutes_order_twelve(a in arb_cyc(12), b in arb_cyc(12)) {
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }
}
