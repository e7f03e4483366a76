//! Exact computation of antipode trace invariants for finite-dimensional
//! Hopf algebras presented by generators and relations.
//!
//! The pipeline: [`cyclo`] provides exact arithmetic in cyclotomic fields,
//! [`qarith`] the q-integer combinatorics on top of it, [`exactla`] exact
//! dense linear algebra over those fields, and [`repcore`] the
//! presentation-level machinery (relation checking, dual modules,
//! intertwiner spaces, and the trace of the antipode-induced operator on
//! endomorphisms). [`uqsl2`] and [`taftdouble`] instantiate the engine for
//! the small quantum group u_q(sl2) and for the book-keeping algebra
//! H_n(1, q) whose module category matches the Drinfeld double of a Taft
//! algebra.

pub mod cyclo;
pub mod exactla;
pub mod qarith;
pub mod repcore;
pub mod taftdouble;
pub mod uqsl2;

pub use cyclo::{phi, pretty_in_root_powers, root_power_lift, CycNum, CycloError};
pub use exactla::{sylvester_nullspace, CMatrix, LinAlgError};
pub use qarith::{QContext, QarithError};
pub use repcore::{
    intertwiner_dim, intertwiners, u_matrix, BilinearReport, CoproductTerm, HopfData, MuReport,
    NCExpr, Relation, Rep, RepError, RepLabel,
};
pub use taftdouble::{
    build_vlr, correspondence_label, dual_label, hn1q_presentation, is_self_dual,
    mu_closed_form_double, pullback_along_psi, self_dual_catalog, squared_context, TaftError,
    VlrLabel,
};
pub use uqsl2::{
    build_module, mu_closed_form, quantum_dim, simple_labels, uq_presentation, UqError, UqLabel,
};
