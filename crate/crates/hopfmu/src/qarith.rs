//! q-combinatorics at a fixed primitive root of unity.
//!
//! A [`QContext`] pins down n and a primitive n-th root q = zeta_n^e and
//! provides the balanced q-integers `[i] = (q^i - q^{-i})/(q - q^{-1})`,
//! their factorials and binomials, the one-parameter quantities
//! `(i)_q = 1 + q + ... + q^{i-1}` and `(i)!_q`, and the structure scalars
//! `alpha_i(l) = (i)_q (1 - q^{i-l})` that drive lowering operators.
//! Everything is computed from the defining formula; recurrences appear
//! only in the tests as independent oracles.

use num_integer::Integer;
use thiserror::Error;

use crate::cyclo::CycNum;

/// Errors from q-combinatorial operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum QarithError {
    #[error("zeta_{n}^{e} is not a primitive {n}-th root of unity (gcd(e, n) != 1)")]
    NotPrimitive { n: u64, e: u64 },
    #[error("q-binomial ({i} choose {k}) has a vanishing q-factorial in its denominator")]
    ZeroDenominator { i: u64, k: u64 },
}

/// A fixed choice of primitive n-th root of unity q = zeta_n^e.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QContext {
    n: u64,
    e: u64,
    q: CycNum,
}

impl QContext {
    /// Build a context for q = zeta_n^e; requires gcd(e, n) = 1 so that q
    /// is primitive. The exponent is normalized mod n.
    pub fn new(n: u64, e: i64) -> Result<Self, QarithError> {
        assert!(n >= 1, "root-of-unity order must be positive");
        let e = e.rem_euclid(n as i64) as u64;
        if e.gcd(&n) != 1 {
            return Err(QarithError::NotPrimitive { n, e });
        }
        Ok(QContext {
            n,
            e,
            q: CycNum::root(n, e as i64),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Exponent e with q = zeta_n^e, normalized to 0..n.
    pub fn exponent(&self) -> u64 {
        self.e
    }

    pub fn q(&self) -> &CycNum {
        &self.q
    }

    /// q^k for any integer k, reduced through the exponent lattice.
    pub fn q_pow(&self, k: i64) -> CycNum {
        let e = (self.e as i128 * k as i128).rem_euclid(self.n as i128) as i64;
        CycNum::root(self.n, e)
    }

    /// Balanced q-integer `[i] = (q^i - q^{-i})/(q - q^{-1})`; `[-i] = -[i]`.
    pub fn q_int(&self, i: i64) -> CycNum {
        assert!(
            self.n >= 3,
            "balanced q-integers need q != q^{{-1}}, i.e. n >= 3"
        );
        let num = &self.q_pow(i) - &self.q_pow(-i);
        let den = &self.q_pow(1) - &self.q_pow(-1);
        num.div(&den)
            .expect("q - q^{-1} is nonzero for primitive q with n >= 3")
    }

    /// `[k]! = [1][2]...[k]`, with `[0]! = 1`.
    pub fn q_factorial(&self, k: u64) -> CycNum {
        let mut acc = CycNum::one(self.n);
        for i in 1..=k as i64 {
            acc = &acc * &self.q_int(i);
        }
        acc
    }

    /// Gaussian binomial `[i]! / ([k]! [i-k]!)` for 0 <= k <= i.
    ///
    /// Fails when a q-factorial in the denominator vanishes (i >= n cases).
    pub fn q_binomial(&self, i: u64, k: u64) -> Result<CycNum, QarithError> {
        assert!(k <= i, "q-binomial requires k <= i, got ({i} choose {k})");
        let den = &self.q_factorial(k) * &self.q_factorial(i - k);
        self.q_factorial(i)
            .div(&den)
            .map_err(|_| QarithError::ZeroDenominator { i, k })
    }

    /// One-parameter q-integer `(i)_q = 1 + q + ... + q^{i-1}`.
    pub fn paren_q(&self, i: u64) -> CycNum {
        let mut acc = CycNum::zero(self.n);
        for j in 0..i as i64 {
            acc = &acc + &self.q_pow(j);
        }
        acc
    }

    /// `(i)!_q = (1)_q (2)_q ... (i)_q`, with `(0)!_q = 1`.
    pub fn paren_factorial(&self, i: u64) -> CycNum {
        let mut acc = CycNum::one(self.n);
        for j in 1..=i {
            acc = &acc * &self.paren_q(j);
        }
        acc
    }

    /// `alpha_i(l) = (i)_q (1 - q^{i-l})` for 0 <= i <= l-1, 1 <= l <= n,
    /// with `alpha_0(l) = 0`.
    pub fn alpha(&self, i: u64, l: u64) -> CycNum {
        assert!(
            1 <= l && l <= self.n,
            "alpha_i(l) requires 1 <= l <= n, got l={l}, n={}",
            self.n
        );
        assert!(i < l, "alpha_i(l) requires 0 <= i <= l-1, got i={i}, l={l}");
        if i == 0 {
            return CycNum::zero(self.n);
        }
        let tail = &CycNum::one(self.n) - &self.q_pow(i as i64 - l as i64);
        &self.paren_q(i) * &tail
    }
}
