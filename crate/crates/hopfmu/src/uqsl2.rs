//! The small quantum group u_q(sl2) at an odd primitive root of unity.
//!
//! The presentation uses generators E, F, K and the inverse symbol K^-1,
//! with the finite quotient relations E^n = F^n = 0, K^n = 1. Its simple
//! modules fall into two families: V_i of dimension i+1 for 0 <= i <= n-2,
//! and one n-dimensional module V(q^-1). Alongside the constructors this
//! module carries the closed forms their trace invariants must match:
//! mu(V_i) = sum_j (-q)^{i-2j} and the quantum dimension Tr(phi(K)) = [i+1].

use std::sync::Arc;

use thiserror::Error;

use crate::cyclo::CycNum;
use crate::exactla::CMatrix;
use crate::qarith::QContext;
use crate::repcore::{CoproductTerm, HopfData, NCExpr, Relation, Rep, RepLabel};

use std::collections::BTreeMap;

/// Errors from u_q(sl2) constructors.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum UqError {
    #[error("u_q(sl2) requires an odd order n >= 3, got n = {0}")]
    UnsupportedOrder(u64),
    #[error("V_i requires 0 <= i <= n-2, got i = {i} at n = {n}")]
    IndexOutOfRange { i: u64, n: u64 },
}

/// Label of a simple u_q(sl2)-module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UqLabel {
    /// The (i+1)-dimensional highest-weight module, 0 <= i <= n-2.
    Vi(u64),
    /// The n-dimensional simple module.
    Vqinv,
}

impl UqLabel {
    pub fn rep_label(self) -> RepLabel {
        match self {
            UqLabel::Vi(i) => RepLabel::Vi { i },
            UqLabel::Vqinv => RepLabel::Vqinv,
        }
    }

    pub fn dim(self, n: u64) -> u64 {
        match self {
            UqLabel::Vi(i) => i + 1,
            UqLabel::Vqinv => n,
        }
    }
}

/// All simple-module labels at odd n, in dimension order.
pub fn simple_labels(n: u64) -> Vec<UqLabel> {
    let mut labels: Vec<UqLabel> = (0..=n.saturating_sub(2)).map(UqLabel::Vi).collect();
    labels.push(UqLabel::Vqinv);
    labels
}

/// The u_q(sl2) presentation over the given root of unity.
pub fn uq_presentation(ctx: &QContext) -> Result<Arc<HopfData>, UqError> {
    let n = ctx.n();
    if n < 3 || n % 2 == 0 {
        return Err(UqError::UnsupportedOrder(n));
    }
    let one = CycNum::one(n);
    let unit = NCExpr::unit(one.clone());
    let word = |w: &[&str]| NCExpr::term(one.clone(), w);
    let balancing = (&ctx.q_pow(1) - &ctx.q_pow(-1))
        .inv()
        .expect("q != q^{-1} for n >= 3");
    let relations = vec![
        Relation::new("K K^-1 = 1", word(&["K", "K^-1"]), unit.clone()),
        Relation::new("K^-1 K = 1", word(&["K^-1", "K"]), unit.clone()),
        Relation::new(
            "K E K^-1 = q^2 E",
            word(&["K", "E", "K^-1"]),
            NCExpr::term(ctx.q_pow(2), &["E"]),
        ),
        Relation::new(
            "K F K^-1 = q^-2 F",
            word(&["K", "F", "K^-1"]),
            NCExpr::term(ctx.q_pow(-2), &["F"]),
        ),
        Relation::new(
            "E F - F E = (K - K^-1)/(q - q^-1)",
            word(&["E", "F"]).sub(&word(&["F", "E"])),
            word(&["K"]).sub(&word(&["K^-1"])).scale(&balancing),
        ),
        Relation::new("E^n = 0", NCExpr::power("E", n as usize, n), NCExpr::zero()),
        Relation::new("F^n = 0", NCExpr::power("F", n as usize, n), NCExpr::zero()),
        Relation::new("K^n = 1", NCExpr::power("K", n as usize, n), unit),
    ];
    let antipode = BTreeMap::from([
        (
            "E".to_string(),
            NCExpr::term(CycNum::from_int(-1, n), &["E", "K^-1"]),
        ),
        (
            "F".to_string(),
            NCExpr::term(CycNum::from_int(-1, n), &["K", "F"]),
        ),
        ("K".to_string(), word(&["K^-1"])),
        ("K^-1".to_string(), word(&["K"])),
    ]);
    let counit = BTreeMap::from([
        ("E".to_string(), CycNum::zero(n)),
        ("F".to_string(), CycNum::zero(n)),
        ("K".to_string(), one.clone()),
        ("K^-1".to_string(), one.clone()),
    ]);
    let coproduct = BTreeMap::from([
        (
            "E".to_string(),
            vec![
                CoproductTerm::new(one.clone(), &[], &["E"]),
                CoproductTerm::new(one.clone(), &["E"], &["K"]),
            ],
        ),
        (
            "F".to_string(),
            vec![
                CoproductTerm::new(one.clone(), &["K^-1"], &["F"]),
                CoproductTerm::new(one.clone(), &["F"], &[]),
            ],
        ),
        (
            "K".to_string(),
            vec![CoproductTerm::new(one.clone(), &["K"], &["K"])],
        ),
        (
            "K^-1".to_string(),
            vec![CoproductTerm::new(one.clone(), &["K^-1"], &["K^-1"])],
        ),
    ]);
    Ok(Arc::new(HopfData::new(
        "u_q(sl2)",
        &["E", "F", "K", "K^-1"],
        relations,
        antipode,
        counit,
        Some(coproduct),
    )))
}

/// The (i+1)-dimensional module V_i on basis v_0..v_i:
/// `K v_j = q^{i-2j} v_j`, `E v_j = [i-j+1] v_{j-1}`, `F v_j = [j+1] v_{j+1}`.
pub fn build_vi(ctx: &QContext, i: u64) -> Result<Rep, UqError> {
    let hopf = uq_presentation(ctx)?;
    let n = ctx.n();
    if i > n - 2 {
        return Err(UqError::IndexOutOfRange { i, n });
    }
    let l = (i + 1) as usize;
    let diag_k: Vec<CycNum> = (0..l).map(|j| ctx.q_pow(i as i64 - 2 * j as i64)).collect();
    let diag_k_inv: Vec<CycNum> = (0..l).map(|j| ctx.q_pow(2 * j as i64 - i as i64)).collect();
    let mut e = CMatrix::zero(n, l, l);
    let mut f = CMatrix::zero(n, l, l);
    for j in 1..=i {
        e.set(j as usize - 1, j as usize, ctx.q_int(i as i64 - j as i64 + 1));
        f.set(j as usize, j as usize - 1, ctx.q_int(j as i64));
    }
    let matrices = BTreeMap::from([
        ("E".to_string(), e),
        ("F".to_string(), f),
        ("K".to_string(), CMatrix::diagonal(&diag_k)),
        ("K^-1".to_string(), CMatrix::diagonal(&diag_k_inv)),
    ]);
    Ok(Rep::new(hopf, ctx.clone(), matrices, RepLabel::Vi { i }))
}

/// The n-dimensional module V(q^-1) on basis v_0..v_{n-1}:
/// `K v_j = q^{-1-2j} v_j`, `E v_{j+1} = ((q^{-j-1} - q^{j+1})/(q - q^{-1})) [j+1] v_j`,
/// `F v_j = v_{j+1}`.
pub fn build_vqinv(ctx: &QContext) -> Result<Rep, UqError> {
    let hopf = uq_presentation(ctx)?;
    let n = ctx.n();
    let l = n as usize;
    let diag_k: Vec<CycNum> = (0..l).map(|j| ctx.q_pow(-1 - 2 * j as i64)).collect();
    let diag_k_inv: Vec<CycNum> = (0..l).map(|j| ctx.q_pow(1 + 2 * j as i64)).collect();
    let balancing = (&ctx.q_pow(1) - &ctx.q_pow(-1))
        .inv()
        .expect("q != q^{-1} for n >= 3");
    let mut e = CMatrix::zero(n, l, l);
    let mut f = CMatrix::zero(n, l, l);
    for j in 0..l - 1 {
        let jj = j as i64;
        let coeff = &(&(&ctx.q_pow(-jj - 1) - &ctx.q_pow(jj + 1)) * &balancing)
            * &ctx.q_int(jj + 1);
        e.set(j, j + 1, coeff);
        f.set(j + 1, j, CycNum::one(n));
    }
    let matrices = BTreeMap::from([
        ("E".to_string(), e),
        ("F".to_string(), f),
        ("K".to_string(), CMatrix::diagonal(&diag_k)),
        ("K^-1".to_string(), CMatrix::diagonal(&diag_k_inv)),
    ]);
    Ok(Rep::new(hopf, ctx.clone(), matrices, RepLabel::Vqinv))
}

/// Build the simple module named by a label.
pub fn build_module(ctx: &QContext, label: UqLabel) -> Result<Rep, UqError> {
    match label {
        UqLabel::Vi(i) => build_vi(ctx, i),
        UqLabel::Vqinv => build_vqinv(ctx),
    }
}

/// Closed form of the trace invariant: `sum_{j=0}^{i} (-q)^{i-2j}`, with
/// V(q^-1) entering as i = n-1.
pub fn mu_closed_form(ctx: &QContext, label: UqLabel) -> CycNum {
    let i = match label {
        UqLabel::Vi(i) => i as i64,
        UqLabel::Vqinv => ctx.n() as i64 - 1,
    };
    let mut acc = CycNum::zero(ctx.n());
    for j in 0..=i {
        let k = i - 2 * j;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        acc = &acc + &(&CycNum::from_int(sign, ctx.n()) * &ctx.q_pow(k));
    }
    acc
}

/// Quantum dimension, computed operationally as the trace of the K-action.
pub fn quantum_dim(ctx: &QContext, label: UqLabel) -> CycNum {
    let rep = build_module(ctx, label).expect("label must be valid for this order");
    rep.matrix("K").expect("K is a generator").trace()
}
