//! The algebra H_n(1,q) — the generators-and-relations face of the
//! Drinfeld double of a Taft algebra — and its simple modules V(l,r).
//!
//! Everything label-arithmetic lives here: duals (l, 1-(r+l)), the
//! self-duality criterion n | 2r+l-1 and its catalog, the projection
//! psi: H_n(1,q^2) -> u_q(sl2) used to pull u_q-modules back, the label
//! correspondence between the two families, and the closed-form trace
//! invariant sum_j (-q)^{l-2j+1}. The closed forms require odd n (where
//! q^2 is again primitive); constructors and label theorems work for all n.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::cyclo::CycNum;
use crate::exactla::CMatrix;
use crate::qarith::QContext;
use crate::repcore::{HopfData, NCExpr, Relation, Rep, RepLabel};
use crate::uqsl2::{self, UqLabel};

/// Errors from H_n(1,q) constructors and closed forms.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TaftError {
    #[error("V(l,r) requires 1 <= l <= n, got l = {l} at n = {n}")]
    DimensionOutOfRange { l: u64, n: u64 },
    #[error("this operation views the algebra as H_n(1,q^2) and requires odd n, got {0}")]
    UnsupportedOrder(u64),
}

/// Label of a simple module V(l,r): dimension l and weight r, with r kept
/// as its canonical representative in 1..=n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct VlrLabel {
    pub l: u64,
    pub r: u64,
}

impl VlrLabel {
    /// Canonicalize r mod n into 1..=n; l must be a valid dimension.
    pub fn new(l: u64, r: i64, n: u64) -> Result<Self, TaftError> {
        if l < 1 || l > n {
            return Err(TaftError::DimensionOutOfRange { l, n });
        }
        let r = (r - 1).rem_euclid(n as i64) as u64 + 1;
        Ok(VlrLabel { l, r })
    }

    pub fn rep_label(self) -> RepLabel {
        RepLabel::Vlr {
            l: self.l,
            r: self.r,
        }
    }
}

/// The H_n(1,q) presentation over the given root of unity. The inverse
/// symbols for the grouplike generators b, c come with unit relations;
/// no coproduct is attached.
pub fn hn1q_presentation(ctx: &QContext) -> Arc<HopfData> {
    let n = ctx.n();
    let one = CycNum::one(n);
    let unit = NCExpr::unit(one.clone());
    let word = |w: &[&str]| NCExpr::term(one.clone(), w);
    let q_times = |w: &[&str]| NCExpr::term(ctx.q_pow(1), w);
    let relations = vec![
        Relation::new("a^n = 0", NCExpr::power("a", n as usize, n), NCExpr::zero()),
        Relation::new("b^n = 1", NCExpr::power("b", n as usize, n), unit.clone()),
        Relation::new("c^n = 1", NCExpr::power("c", n as usize, n), unit.clone()),
        Relation::new("d^n = 0", NCExpr::power("d", n as usize, n), NCExpr::zero()),
        Relation::new("b a = q a b", word(&["b", "a"]), q_times(&["a", "b"])),
        Relation::new("d b = q b d", word(&["d", "b"]), q_times(&["b", "d"])),
        Relation::new("c a = q a c", word(&["c", "a"]), q_times(&["a", "c"])),
        Relation::new("d c = q c d", word(&["d", "c"]), q_times(&["c", "d"])),
        Relation::new("b c = c b", word(&["b", "c"]), word(&["c", "b"])),
        Relation::new(
            "d a - q a d = 1 - b c",
            word(&["d", "a"]).sub(&q_times(&["a", "d"])),
            unit.clone().sub(&word(&["b", "c"])),
        ),
        Relation::new("b b^-1 = 1", word(&["b", "b^-1"]), unit.clone()),
        Relation::new("b^-1 b = 1", word(&["b^-1", "b"]), unit.clone()),
        Relation::new("c c^-1 = 1", word(&["c", "c^-1"]), unit.clone()),
        Relation::new("c^-1 c = 1", word(&["c^-1", "c"]), unit),
    ];
    let minus_one = CycNum::from_int(-1, n);
    let antipode = BTreeMap::from([
        ("a".to_string(), NCExpr::term(minus_one.clone(), &["a", "b^-1"])),
        ("b".to_string(), word(&["b^-1"])),
        ("c".to_string(), word(&["c^-1"])),
        ("d".to_string(), NCExpr::term(minus_one, &["d", "c^-1"])),
        ("b^-1".to_string(), word(&["b"])),
        ("c^-1".to_string(), word(&["c"])),
    ]);
    // The counit is forced by the Hopf axioms: 1 on the grouplikes b, c
    // and 0 on the skew-primitives a, d.
    let counit = BTreeMap::from([
        ("a".to_string(), CycNum::zero(n)),
        ("b".to_string(), one.clone()),
        ("c".to_string(), one.clone()),
        ("d".to_string(), CycNum::zero(n)),
        ("b^-1".to_string(), one.clone()),
        ("c^-1".to_string(), one),
    ]);
    Arc::new(HopfData::new(
        "H_n(1,q)",
        &["a", "b", "c", "d", "b^-1", "c^-1"],
        relations,
        antipode,
        counit,
        None,
    ))
}

/// The l-dimensional module V(l,r) on basis v_1..v_l:
/// `a v_i = v_{i+1}`, `b v_i = q^{r+i-1} v_i`, `c v_i = q^{i-(r+l)} v_i`,
/// `d v_i = alpha_{i-1}(l) v_{i-1}`.
pub fn build_vlr(ctx: &QContext, label: VlrLabel) -> Result<Rep, TaftError> {
    let n = ctx.n();
    let (l, r) = (label.l, label.r as i64);
    if l < 1 || l > n {
        return Err(TaftError::DimensionOutOfRange { l, n });
    }
    let dim = l as usize;
    let mut a = CMatrix::zero(n, dim, dim);
    let mut d = CMatrix::zero(n, dim, dim);
    for i in 1..l {
        a.set(i as usize, i as usize - 1, CycNum::one(n));
    }
    for i in 2..=l {
        d.set(i as usize - 2, i as usize - 1, ctx.alpha(i - 1, l));
    }
    let diag_b: Vec<CycNum> = (1..=l as i64).map(|i| ctx.q_pow(r + i - 1)).collect();
    let diag_c: Vec<CycNum> = (1..=l as i64).map(|i| ctx.q_pow(i - (r + l as i64))).collect();
    let diag_b_inv: Vec<CycNum> = (1..=l as i64).map(|i| ctx.q_pow(1 - r - i)).collect();
    let diag_c_inv: Vec<CycNum> = (1..=l as i64).map(|i| ctx.q_pow(r + l as i64 - i)).collect();
    let matrices = BTreeMap::from([
        ("a".to_string(), a),
        ("b".to_string(), CMatrix::diagonal(&diag_b)),
        ("c".to_string(), CMatrix::diagonal(&diag_c)),
        ("d".to_string(), d),
        ("b^-1".to_string(), CMatrix::diagonal(&diag_b_inv)),
        ("c^-1".to_string(), CMatrix::diagonal(&diag_c_inv)),
    ]);
    Ok(Rep::new(
        hn1q_presentation(ctx),
        ctx.clone(),
        matrices,
        label.rep_label(),
    ))
}

/// Label of the dual module: V(l,r)* is isomorphic to V(l, 1-(r+l)).
pub fn dual_label(n: u64, label: VlrLabel) -> VlrLabel {
    VlrLabel::new(label.l, 1 - (label.r as i64 + label.l as i64), n)
        .expect("dual keeps the dimension in range")
}

/// Self-duality criterion: n divides 2r + l - 1.
pub fn is_self_dual(n: u64, label: VlrLabel) -> bool {
    (2 * label.r + label.l - 1) % n == 0
}

/// All self-dual labels with 1 <= l, r <= n, sorted by (l, r). Odd n gives
/// one label per dimension; even n gives two per odd dimension.
pub fn self_dual_catalog(n: u64) -> Vec<VlrLabel> {
    let mut out = Vec::new();
    for l in 1..=n {
        for r in 1..=n {
            let label = VlrLabel { l, r };
            if is_self_dual(n, label) {
                out.push(label);
            }
        }
    }
    out
}

/// The context for H_n(1,q^2) induced by a base context with root q.
pub fn squared_context(ctx_base: &QContext) -> Result<QContext, TaftError> {
    let n = ctx_base.n();
    if n % 2 == 0 {
        return Err(TaftError::UnsupportedOrder(n));
    }
    Ok(QContext::new(n, 2 * ctx_base.exponent() as i64)
        .expect("2e is coprime to odd n whenever e is"))
}

/// Pull a simple u_q(sl2)-module back along
/// `psi: H_n(1,q^2) -> u_q(sl2)`, `a -> E`, `b, c -> K`,
/// `d -> ((q - q^{-1})/q^2) F K`. The result is a module over the
/// H_n(1,q^2) presentation (built on the squared context).
pub fn pullback_along_psi(ctx_base: &QContext, label: UqLabel) -> Result<Rep, TaftError> {
    let squared = squared_context(ctx_base)?;
    let uq_rep = uqsl2::build_module(ctx_base, label)
        .expect("odd n was already checked and labels are validated by build");
    let phi = |g: &str| uq_rep.matrix(g).expect("u_q generator").clone();
    let d_scale = (&ctx_base.q_pow(1) - &ctx_base.q_pow(-1))
        .div(&ctx_base.q_pow(2))
        .expect("q^2 is invertible");
    let matrices = BTreeMap::from([
        ("a".to_string(), phi("E")),
        ("b".to_string(), phi("K")),
        ("c".to_string(), phi("K")),
        ("d".to_string(), phi("F").matmul(&phi("K")).scale(&d_scale)),
        ("b^-1".to_string(), phi("K^-1")),
        ("c^-1".to_string(), phi("K^-1")),
    ]);
    let rep = Rep::new(
        hn1q_presentation(&squared),
        squared,
        matrices,
        RepLabel::Pullback {
            of: Box::new(label.rep_label()),
        },
    );
    let violations = rep.check_relations();
    assert!(
        violations.is_empty(),
        "pullback along psi must satisfy the H_n(1,q^2) relations; failed: {violations:?}"
    );
    Ok(rep)
}

/// The V(l,r) label matching a pulled-back u_q-module:
/// V_i -> V(i+1, n - i/2) for even i, V(i+1, (n-i)/2) for odd i, and
/// V(q^-1) -> V(n, (n+1)/2).
pub fn correspondence_label(n: u64, label: UqLabel) -> Result<VlrLabel, TaftError> {
    if n % 2 == 0 {
        return Err(TaftError::UnsupportedOrder(n));
    }
    let (l, r) = match label {
        UqLabel::Vi(i) if i % 2 == 0 => (i + 1, n as i64 - i as i64 / 2),
        UqLabel::Vi(i) => (i + 1, (n as i64 - i as i64) / 2),
        UqLabel::Vqinv => (n, (n as i64 + 1) / 2),
    };
    VlrLabel::new(l, r, n)
}

/// Closed-form trace invariant of V(l,r) over H_n(1,q^2), written in the
/// base root q: `sum_{j=1}^{l} (-q)^{l-2j+1}` when 2r = 1-l mod n, else 0.
pub fn mu_closed_form_double(ctx_base: &QContext, label: VlrLabel) -> Result<CycNum, TaftError> {
    let n = ctx_base.n();
    if n % 2 == 0 {
        return Err(TaftError::UnsupportedOrder(n));
    }
    let (l, r) = (label.l as i64, label.r as i64);
    if (2 * r - (1 - l)).rem_euclid(n as i64) != 0 {
        return Ok(CycNum::zero(n));
    }
    let mut acc = CycNum::zero(n);
    for j in 1..=l {
        let k = l - 2 * j + 1;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        acc = &acc + &(&CycNum::from_int(sign, n) * &ctx_base.q_pow(k));
    }
    Ok(acc)
}
