//! Presentation-level representation theory.
//!
//! A Hopf algebra enters as [`HopfData`]: generators, defining relations,
//! antipode and counit on generators, and (optionally) the coproduct. A
//! module enters as a [`Rep`]: one matrix per generator. On top of that
//! this module builds the mechanical parts of the trace invariant:
//! relation checking, the dual module, intertwiner spaces via
//! [`sylvester_nullspace`], the matrix `Q` with
//! `phi(S(g)) = Q phi(g)^T Q^{-1}`, the operator `U = Q Q^{-T}` whose trace
//! is the invariant, and an independent oracle that computes the same trace
//! by expressing matrix units as word images and applying the antipode
//! word by word.
//!
//! Inverse generators (`K^-1`, `b^-1`, ...) are ordinary symbols tied to
//! their partners by unit relations, so words stay free and evaluation is
//! total.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::cyclo::CycNum;
use crate::exactla::{sylvester_nullspace, CMatrix, SpanTracker};
use crate::qarith::QContext;

/// Errors from representation-level computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("generator {0:?} has no matrix in this representation")]
    UnknownSymbol(String),
    #[error("defining relations fail: {0:?}")]
    RelationViolations(Vec<String>),
    #[error("module is not self-dual")]
    NotSelfDual,
    #[error("module is not simple (intertwiner space has dimension {0})")]
    NotSimple(usize),
    #[error("intertwiner with the dual is singular")]
    Degenerate,
    #[error("words up to length {max_len} span {rank} of {needed} endomorphism dimensions")]
    SpanNotReached {
        max_len: usize,
        rank: usize,
        needed: usize,
    },
    #[error("operator is not a scalar multiple of the grouplike action")]
    NotScalar,
}

// ---------------------------------------------------------------------------
// Noncommutative expressions
// ---------------------------------------------------------------------------

/// A linear combination of words in generator symbols; the empty word is
/// the unit. Kept normalized: words sorted, coefficients merged, zero terms
/// dropped — so structural equality is semantic equality of expressions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCExpr {
    terms: Vec<(CycNum, Vec<String>)>,
}

impl NCExpr {
    pub fn zero() -> Self {
        NCExpr { terms: Vec::new() }
    }

    /// A scalar multiple of the unit (empty word).
    pub fn unit(coeff: CycNum) -> Self {
        Self::term(coeff, &[])
    }

    /// A single scaled word.
    pub fn term(coeff: CycNum, word: &[&str]) -> Self {
        let terms = vec![(coeff, word.iter().map(|s| s.to_string()).collect())];
        Self::normalized(terms)
    }

    /// The word `sym^k` with coefficient 1.
    pub fn power(sym: &str, k: usize, order: u64) -> Self {
        Self::term(CycNum::one(order), &vec![sym; k])
    }

    fn normalized(mut terms: Vec<(CycNum, Vec<String>)>) -> Self {
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        let mut out: Vec<(CycNum, Vec<String>)> = Vec::with_capacity(terms.len());
        for (coeff, word) in terms {
            match out.last_mut() {
                Some((c, w)) if *w == word => *c = &*c + &coeff,
                _ => out.push((coeff, word)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        NCExpr { terms: out }
    }

    pub fn terms(&self) -> &[(CycNum, Vec<String>)] {
        &self.terms
    }

    pub fn add(&self, rhs: &NCExpr) -> NCExpr {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        Self::normalized(terms)
    }

    pub fn sub(&self, rhs: &NCExpr) -> NCExpr {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> NCExpr {
        NCExpr {
            terms: self.terms.iter().map(|(c, w)| (-c, w.clone())).collect(),
        }
    }

    pub fn scale(&self, coeff: &CycNum) -> NCExpr {
        let terms = self
            .terms
            .iter()
            .map(|(c, w)| (c * coeff, w.clone()))
            .collect();
        Self::normalized(terms)
    }

    /// Concatenation product of expressions.
    pub fn mul(&self, rhs: &NCExpr) -> NCExpr {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (c1, w1) in &self.terms {
            for (c2, w2) in &rhs.terms {
                let mut word = w1.clone();
                word.extend(w2.iter().cloned());
                terms.push((c1 * c2, word));
            }
        }
        Self::normalized(terms)
    }
}

// ---------------------------------------------------------------------------
// Hopf algebra data
// ---------------------------------------------------------------------------

/// A named defining relation `lhs = rhs`.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub lhs: NCExpr,
    pub rhs: NCExpr,
}

impl Relation {
    pub fn new(name: &str, lhs: NCExpr, rhs: NCExpr) -> Self {
        Relation {
            name: name.to_string(),
            lhs,
            rhs,
        }
    }
}

/// One term of a coproduct: `coeff * (left word) (x) (right word)`.
#[derive(Debug, Clone)]
pub struct CoproductTerm {
    pub coeff: CycNum,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

impl CoproductTerm {
    pub fn new(coeff: CycNum, left: &[&str], right: &[&str]) -> Self {
        CoproductTerm {
            coeff,
            left: left.iter().map(|s| s.to_string()).collect(),
            right: right.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// A Hopf algebra presentation: generators, relations, antipode and counit
/// on generators, and an optional coproduct (some presentations omit it).
#[derive(Debug, Clone)]
pub struct HopfData {
    name: String,
    generators: Vec<String>,
    relations: Vec<Relation>,
    antipode: BTreeMap<String, NCExpr>,
    counit: BTreeMap<String, CycNum>,
    coproduct: Option<BTreeMap<String, Vec<CoproductTerm>>>,
}

impl HopfData {
    pub fn new(
        name: &str,
        generators: &[&str],
        relations: Vec<Relation>,
        antipode: BTreeMap<String, NCExpr>,
        counit: BTreeMap<String, CycNum>,
        coproduct: Option<BTreeMap<String, Vec<CoproductTerm>>>,
    ) -> Self {
        let generators: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        for g in &generators {
            assert!(antipode.contains_key(g), "antipode missing for {g:?}");
            assert!(counit.contains_key(g), "counit missing for {g:?}");
        }
        if let Some(cop) = &coproduct {
            for g in &generators {
                assert!(cop.contains_key(g), "coproduct missing for {g:?}");
            }
        }
        HopfData {
            name: name.to_string(),
            generators,
            relations,
            antipode,
            counit,
            coproduct,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn antipode(&self, g: &str) -> Option<&NCExpr> {
        self.antipode.get(g)
    }

    pub fn counit(&self, g: &str) -> Option<&CycNum> {
        self.counit.get(g)
    }

    pub fn coproduct(&self) -> Option<&BTreeMap<String, Vec<CoproductTerm>>> {
        self.coproduct.as_ref()
    }
}

// ---------------------------------------------------------------------------
// Representation labels
// ---------------------------------------------------------------------------

/// Structured module label used in reports and tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum RepLabel {
    Vi {
        i: u64,
    },
    Vqinv,
    Vlr {
        l: u64,
        r: u64,
    },
    #[serde(rename = "pullback")]
    Pullback {
        of: Box<RepLabel>,
    },
    #[serde(rename = "custom")]
    Custom {
        name: String,
    },
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Vi { i } => write!(f, "V_{i}"),
            RepLabel::Vqinv => write!(f, "V(q^-1)"),
            RepLabel::Vlr { l, r } => write!(f, "V({l},{r})"),
            RepLabel::Pullback { of } => write!(f, "pullback({of})"),
            RepLabel::Custom { name } => write!(f, "{name}"),
        }
    }
}

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

/// A finite-dimensional module: one square matrix per generator symbol.
#[derive(Debug, Clone)]
pub struct Rep {
    hopf: Arc<HopfData>,
    ctx: QContext,
    dim: usize,
    matrices: BTreeMap<String, CMatrix>,
    label: RepLabel,
}

/// Result of a full invariant computation on one module.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MuReport {
    pub self_dual: bool,
    pub mu: CycNum,
    #[serde(rename = "Q", skip_serializing_if = "Option::is_none", default)]
    pub q: Option<CMatrix>,
    #[serde(rename = "U", skip_serializing_if = "Option::is_none", default)]
    pub u: Option<CMatrix>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle_mu: Option<CycNum>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pivot_scalar: Option<CycNum>,
}

/// Outcome of the bilinear-form checks derived from Q.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearReport {
    pub nondegenerate: bool,
    pub adjoint_law: bool,
    pub u_law: bool,
    /// `None` when the presentation carries no coproduct.
    pub coproduct_invariance: Option<bool>,
}

impl BilinearReport {
    pub fn all_pass(&self) -> bool {
        self.nondegenerate
            && self.adjoint_law
            && self.u_law
            && self.coproduct_invariance.unwrap_or(true)
    }
}

impl Rep {
    /// Assemble a representation; structural invariants (one square matrix
    /// of the right size and order per generator) are enforced here, while
    /// relation validity is a separate, reportable check.
    pub fn new(
        hopf: Arc<HopfData>,
        ctx: QContext,
        matrices: BTreeMap<String, CMatrix>,
        label: RepLabel,
    ) -> Self {
        assert!(!matrices.is_empty(), "representation needs matrices");
        let dim = matrices.values().next().unwrap().rows();
        for g in hopf.generators() {
            let m = matrices
                .get(g)
                .unwrap_or_else(|| panic!("no matrix for generator {g:?}"));
            assert!(m.is_square() && m.rows() == dim, "matrix sizes must agree");
            assert_eq!(m.order(), ctx.n(), "matrix entries must live in Q(zeta_n)");
        }
        Rep {
            hopf,
            ctx,
            dim,
            matrices,
            label,
        }
    }

    pub fn hopf(&self) -> &Arc<HopfData> {
        &self.hopf
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &RepLabel {
        &self.label
    }

    pub fn matrix(&self, g: &str) -> Result<&CMatrix, RepError> {
        self.matrices
            .get(g)
            .ok_or_else(|| RepError::UnknownSymbol(g.to_string()))
    }

    /// Product of generator matrices along a word; the empty word is I.
    pub fn eval_word(&self, word: &[String]) -> Result<CMatrix, RepError> {
        let mut acc = CMatrix::identity(self.ctx.n(), self.dim);
        for g in word {
            acc = acc.matmul(self.matrix(g)?);
        }
        Ok(acc)
    }

    /// Evaluate a noncommutative expression in this representation.
    pub fn eval(&self, expr: &NCExpr) -> Result<CMatrix, RepError> {
        let mut acc = CMatrix::zero(self.ctx.n(), self.dim, self.dim);
        for (coeff, word) in expr.terms() {
            acc = acc.add(&self.eval_word(word)?.scale(coeff));
        }
        Ok(acc)
    }

    /// The matrix of S(g) in this representation.
    pub fn apply_antipode(&self, g: &str) -> Result<CMatrix, RepError> {
        let expr = self
            .hopf
            .antipode(g)
            .ok_or_else(|| RepError::UnknownSymbol(g.to_string()))?;
        self.eval(expr)
    }

    /// Names of defining relations that fail in this representation.
    pub fn check_relations(&self) -> Vec<String> {
        let mut violations = Vec::new();
        for rel in self.hopf.relations() {
            match (self.eval(&rel.lhs), self.eval(&rel.rhs)) {
                (Ok(lhs), Ok(rhs)) if lhs == rhs => {}
                (Ok(_), Ok(_)) => violations.push(rel.name.clone()),
                _ => violations.push(format!("{} (unknown generator)", rel.name)),
            }
        }
        violations
    }

    /// The dual module: g acts on the dual basis by `eval(S(g))^T`.
    pub fn dual_rep(&self) -> Rep {
        let matrices = self
            .hopf
            .generators()
            .iter()
            .map(|g| {
                let m = self
                    .apply_antipode(g)
                    .expect("antipode covers every generator")
                    .transpose();
                (g.clone(), m)
            })
            .collect();
        Rep {
            hopf: Arc::clone(&self.hopf),
            ctx: self.ctx.clone(),
            dim: self.dim,
            matrices,
            label: RepLabel::Custom {
                name: format!("dual({})", self.label),
            },
        }
    }

    /// The normalized invertible Q with `eval(S(g)) Q = Q eval(g)^T` for
    /// every generator — the conjugating matrix of the antipode action on
    /// endomorphisms, unique up to scalar for simple self-dual modules.
    pub fn skolem_noether_q(&self) -> Result<CMatrix, RepError> {
        let mut constraints = Vec::new();
        for g in self.hopf.generators() {
            constraints.push((self.apply_antipode(g)?, self.matrix(g)?.transpose()));
        }
        let mut basis = sylvester_nullspace(&constraints);
        match basis.len() {
            0 => Err(RepError::NotSelfDual),
            1 => {
                let q = basis.pop().unwrap();
                if q.det().is_zero() {
                    Err(RepError::Degenerate)
                } else {
                    Ok(q)
                }
            }
            d => Err(RepError::NotSimple(d)),
        }
    }

    /// Full invariant computation: decides self-duality by intertwiners
    /// with the dual, then computes Q, U = Q Q^{-T}, and the trace of U.
    pub fn mu(&self) -> Result<MuReport, RepError> {
        let violations = self.check_relations();
        if !violations.is_empty() {
            return Err(RepError::RelationViolations(violations));
        }
        let dual = self.dual_rep();
        let hom = intertwiners(self, &dual);
        match hom.len() {
            0 => Ok(MuReport {
                self_dual: false,
                mu: CycNum::zero(self.ctx.n()),
                q: None,
                u: None,
                oracle_mu: None,
                pivot_scalar: None,
            }),
            1 => {
                let q = self.skolem_noether_q()?;
                let u = u_matrix(&q).map_err(|_| RepError::Degenerate)?;
                let mu = u.trace();
                Ok(MuReport {
                    self_dual: true,
                    mu,
                    q: Some(q),
                    u: Some(u),
                    oracle_mu: None,
                    pivot_scalar: None,
                })
            }
            d => Err(RepError::NotSimple(d)),
        }
    }

    /// Independent route to the same trace, bypassing Q entirely: express
    /// each matrix unit as a combination of word images `eval(w)`, replace
    /// each word by its antipode image `eval(S(g_k)) ... eval(S(g_1))`, and
    /// read off the trace of the induced map on endomorphisms.
    pub fn mu_oracle(&self) -> Result<CycNum, RepError> {
        let l = self.dim;
        let order = self.ctx.n();
        let needed = l * l;
        let gens: Vec<&CMatrix> = self
            .hopf
            .generators()
            .iter()
            .map(|g| self.matrix(g))
            .collect::<Result<_, _>>()?;
        let antis: Vec<CMatrix> = self
            .hopf
            .generators()
            .iter()
            .map(|g| self.apply_antipode(g))
            .collect::<Result<_, _>>()?;

        // Breadth-first closure over words, keeping only span-increasing
        // ones. Extensions of discarded words are never needed: a dependent
        // word image is a combination of kept ones, so its extensions are
        // combinations of kept-word extensions, which are all visited.
        let max_len = 2 * (l - 1) + 2;
        let mut tracker = SpanTracker::new(needed);
        let identity = CMatrix::identity(order, l);
        tracker.insert(&vectorize(&identity));
        let mut kept = vec![(identity.clone(), identity.clone())];
        let mut frontier = vec![(identity.clone(), identity)];
        let mut len = 0;
        while tracker.rank() < needed && len < max_len && !frontier.is_empty() {
            len += 1;
            let mut next = Vec::new();
            'level: for (word_mat, anti_mat) in &frontier {
                for (g_mat, a_mat) in gens.iter().zip(&antis) {
                    let extended = word_mat.matmul(g_mat);
                    if !tracker.insert(&vectorize(&extended)) {
                        continue;
                    }
                    let extended_anti = a_mat.matmul(anti_mat);
                    kept.push((extended.clone(), extended_anti.clone()));
                    next.push((extended, extended_anti));
                    if tracker.rank() == needed {
                        break 'level;
                    }
                }
            }
            frontier = next;
        }
        if tracker.rank() < needed {
            return Err(RepError::SpanNotReached {
                max_len,
                rank: tracker.rank(),
                needed,
            });
        }

        // Columns of W are the vectorized kept word images; the coefficient
        // of word w in the preimage of the matrix unit E_uv is then
        // (W^{-1})_{w, idx(u,v)}.
        let w_mat = CMatrix::from_fn(order, needed, needed, |idx, w| {
            kept[w].0.get(idx / l, idx % l).clone()
        });
        let w_inv = w_mat
            .inverse()
            .expect("kept word images are linearly independent");
        let mut trace = CycNum::zero(order);
        for (w, (_, anti_mat)) in kept.iter().enumerate() {
            for u in 0..l {
                for v in 0..l {
                    let coeff = w_inv.get(w, u * l + v);
                    if coeff.is_zero() {
                        continue;
                    }
                    let img = anti_mat.get(u, v);
                    if img.is_zero() {
                        continue;
                    }
                    trace = &trace + &(coeff * img);
                }
            }
        }
        Ok(trace)
    }

    /// Checks on the bilinear form `<v, w> = v^T Q^{-1} w`: non-degeneracy,
    /// the adjoint law `Q^{-1} eval(S(g)) = eval(g)^T Q^{-1}`, the U-law
    /// `Q^{-1} U = Q^{-T}`, and (when a coproduct is present) the invariance
    /// `sum eval(h_1)^T Q^{-1} eval(h_2) = eps(h) Q^{-1}`.
    pub fn bilinear_form_checks(&self, q: &CMatrix) -> BilinearReport {
        let has_coproduct = self.hopf.coproduct().is_some();
        let Ok(q_inv) = q.inverse() else {
            return BilinearReport {
                nondegenerate: false,
                adjoint_law: false,
                u_law: false,
                coproduct_invariance: has_coproduct.then_some(false),
            };
        };
        let adjoint_law = self.hopf.generators().iter().all(|g| {
            let lhs = q_inv.matmul(&self.apply_antipode(g).expect("generators covered"));
            let rhs = self
                .matrix(g)
                .expect("generators covered")
                .transpose()
                .matmul(&q_inv);
            lhs == rhs
        });
        let u = q.matmul(&q_inv.transpose());
        let u_law = q_inv.matmul(&u) == q_inv.transpose();
        let coproduct_invariance = self.hopf.coproduct().map(|cop| {
            self.hopf.generators().iter().all(|h| {
                let mut sum = CMatrix::zero(self.ctx.n(), self.dim, self.dim);
                for term in &cop[h] {
                    let left = self.eval_word(&term.left).expect("generators covered");
                    let right = self.eval_word(&term.right).expect("generators covered");
                    sum = sum.add(

                        &left
                            .transpose()
                            .matmul(&q_inv)
                            .matmul(&right)
                            .scale(&term.coeff),
                    );
                }
                let eps = self.hopf.counit(h).expect("generators covered");
                sum == q_inv.scale(eps)
            })
        });
        BilinearReport {
            nondegenerate: true,
            adjoint_law,
            u_law,
            coproduct_invariance,
        }
    }

    /// The scalar lambda with `U = lambda * eval(grouplike)`.
    pub fn pivotal_scalar(&self, u: &CMatrix, grouplike: &str) -> Result<CycNum, RepError> {
        let g = self.matrix(grouplike)?;
        let g_inv = g
            .inverse()
            .expect("grouplike generator must act invertibly");
        u.matmul(&g_inv).as_scalar().ok_or(RepError::NotScalar)
    }
}

fn vectorize(m: &CMatrix) -> Vec<CycNum> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.push(m.get(i, j).clone());
        }
    }
    out
}

/// `U = Q (Q^{-1})^T`; conjugation by U realizes the square of the antipode
/// action, and its trace is the invariant.
pub fn u_matrix(q: &CMatrix) -> Result<CMatrix, crate::exactla::LinAlgError> {
    Ok(q.matmul(&q.inverse()?.transpose()))
}

/// Basis of `{T : T . from(g) = to(g) . T for all generators g}` — module
/// maps from `from` to `to`. The representations must share the same
/// presentation and root of unity; dimensions may differ.
pub fn intertwiners(from: &Rep, to: &Rep) -> Vec<CMatrix> {
    assert_eq!(
        from.hopf.generators(),
        to.hopf.generators(),
        "intertwiners need a common generator set"
    );
    assert_eq!(from.ctx, to.ctx, "intertwiners need a common root of unity");
    let constraints: Vec<(CMatrix, CMatrix)> = from
        .hopf
        .generators()
        .iter()
        .map(|g| {
            let a = to.matrix(g).expect("generators covered").clone();
            let b = from.matrix(g).expect("generators covered").clone();
            (a, b)
        })
        .collect();
    sylvester_nullspace(&constraints)
}

/// Dimension of the intertwiner space.
pub fn intertwiner_dim(from: &Rep, to: &Rep) -> usize {
    intertwiners(from, to).len()
}

impl Serialize for Rep {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Rep", 6)?;
        st.serialize_field("hopf", self.hopf.name())?;
        st.serialize_field("n", &self.ctx.n())?;
        st.serialize_field("exponent", &self.ctx.exponent())?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("label", &self.label)?;
        st.serialize_field("matrices", &self.matrices)?;
        st.end()
    }
}
