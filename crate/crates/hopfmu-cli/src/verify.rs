//! The `verify` subcommand: named exact checks grouped into suites.
//!
//! Every check prints one `ok`/`FAIL`/`skip` line and the command exits
//! nonzero as soon as any check fails.  All sweeps are deterministic; at
//! large orders the quadratic label sweeps shrink to a fixed representative
//! set so that `verify --n 13` still finishes in seconds.

use std::collections::BTreeMap;

use hopfmu::{
    build_module, build_vlr, correspondence_label, dual_label, intertwiner_dim, is_self_dual,
    mu_closed_form, mu_closed_form_double, pullback_along_psi, quantum_dim, self_dual_catalog,
    simple_labels, squared_context, u_matrix, CMatrix, CycNum, MuReport, QContext, Rep, UqLabel,
    VlrLabel,
};

use crate::{context, CliError, Suite};

/// Orders up to this bound get full quadratic label sweeps.
const FULL_SWEEP_MAX: u64 = 7;

pub fn run(n: u64, exp: i64, suite: Suite) -> Result<(), CliError> {
    let ctx = context(n, exp)?;
    if suite == Suite::Uq && n % 2 == 0 {
        return Err(CliError::Usage(format!(
            "the uq suite needs an odd order so that q^2 is primitive; n = {n} is even"
        )));
    }
    let mut session = Session::default();
    match suite {
        Suite::Core => core_suite(&mut session, &ctx),
        Suite::Uq => uq_suite(&mut session, &ctx),
        Suite::DoubleLabels => double_label_suite(&mut session, &ctx),
        Suite::Double => {
            double_label_suite(&mut session, &ctx);
            double_mu_suite(&mut session, &ctx);
        }
        Suite::All => {
            core_suite(&mut session, &ctx);
            if n % 2 == 1 {
                uq_suite(&mut session, &ctx);
            } else {
                session.skip("uq", "q^2 is not primitive at even order, so u_q(sl2) is out of scope");
            }
            double_label_suite(&mut session, &ctx);
            double_mu_suite(&mut session, &ctx);
        }
    }
    session.finish(n, exp, suite)
}

// ---------------------------------------------------------------------------
// Bookkeeping
// ---------------------------------------------------------------------------

#[derive(Default)]
struct Session {
    passed: usize,
    failed: usize,
    skipped: usize,
}

/// A check reports what it covered on success and the first offender on
/// failure.
type Outcome = Result<String, String>;

impl Session {
    fn check(&mut self, name: &str, outcome: Outcome) {
        match outcome {
            Ok(detail) => {
                self.passed += 1;
                println!("ok    {name}: {detail}");
            }
            Err(detail) => {
                self.failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }

    fn skip(&mut self, name: &str, reason: &str) {
        self.skipped += 1;
        println!("skip  {name}: {reason}");
    }

    fn finish(self, n: u64, exp: i64, suite: Suite) -> Result<(), CliError> {
        let suite_name = match suite {
            Suite::All => "all",
            Suite::Core => "core",
            Suite::Uq => "uq",
            Suite::Double => "double",
            Suite::DoubleLabels => "double-labels",
        };
        println!(
            "verify: {} passed, {} failed, {} skipped (n = {n}, exponent = {exp}, suite = {suite_name})",
            self.passed, self.failed, self.skipped
        );
        if self.failed > 0 {
            Err(CliError::Failure(format!("{} check(s) failed", self.failed)))
        } else {
            Ok(())
        }
    }
}

fn show(rep: &Rep) -> String {
    format!("{}", rep.label())
}

// ---------------------------------------------------------------------------
// Core suite: engine laws on a fixed probe set drawn from both families
// ---------------------------------------------------------------------------

struct Probe {
    rep: Rep,
    report: MuReport,
}

fn build_probes(ctx: &QContext) -> Result<Vec<Probe>, String> {
    let n = ctx.n();
    let mut reps = Vec::new();
    if n % 2 == 1 {
        let mut labels = vec![UqLabel::Vi(1)];
        if n > 3 {
            labels.push(UqLabel::Vi(n - 2));
        }
        labels.push(UqLabel::Vqinv);
        for label in labels {
            reps.push(build_module(ctx, label).map_err(|e| format!("{label:?}: {e}"))?);
        }
    }
    for label in self_dual_catalog(n) {
        reps.push(build_vlr(ctx, label).map_err(|e| format!("{label:?}: {e}"))?);
    }
    reps.push(build_vlr(ctx, VlrLabel { l: 3, r: 2 }).map_err(|e| format!("V(3,2): {e}"))?);
    reps.into_iter()
        .map(|rep| {
            let report = rep.mu().map_err(|e| format!("{}: {e}", show(&rep)))?;
            Ok(Probe { rep, report })
        })
        .collect()
}

fn core_suite(session: &mut Session, ctx: &QContext) {
    let probes = match build_probes(ctx) {
        Ok(probes) => {
            let detail = format!("{} probe modules across both families", probes.len());
            session.check("core/build-probes", Ok(detail));
            probes
        }
        Err(e) => {
            session.check("core/build-probes", Err(e));
            return;
        }
    };
    session.check("core/antipode-antihomomorphism", antihomomorphism(&probes));
    session.check("core/s-squared-conjugation", s_squared(&probes));
    session.check("core/endomorphism-trace", endomorphism_trace(&probes));
    session.check("core/dual-relations", dual_relations(&probes));
    session.check("core/oracle-agreement", oracle_agreement(&probes));
    session.check("core/q-rescaling", q_rescaling(&probes));
    session.check("core/basis-invariance", basis_invariance(&probes));
}

/// Q (g h)^T Q^-1 = S(h) S(g) for every generator pair of every self-dual
/// probe.
fn antihomomorphism(probes: &[Probe]) -> Outcome {
    let mut covered = 0;
    for probe in probes {
        let Some(q) = &probe.report.q else { continue };
        let q_inv = q.inverse().map_err(|e| format!("{}: {e}", show(&probe.rep)))?;
        let gens = probe.rep.hopf().generators().to_vec();
        for g in &gens {
            for h in &gens {
                let gh = probe
                    .rep
                    .matrix(g)
                    .unwrap()
                    .matmul(probe.rep.matrix(h).unwrap());
                let lhs = q.matmul(&gh.transpose()).matmul(&q_inv);
                let rhs = probe
                    .rep
                    .apply_antipode(h)
                    .unwrap()
                    .matmul(&probe.rep.apply_antipode(g).unwrap());
                if lhs != rhs {
                    return Err(format!("S({g} {h}) via Q mismatch on {}", show(&probe.rep)));
                }
            }
        }
        covered += 1;
    }
    Ok(format!(
        "S(gh) = S(h)S(g) through Q on {covered} self-dual modules"
    ))
}

/// U g U^-1 equals the double-dual action S^2(g) on every self-dual probe.
fn s_squared(probes: &[Probe]) -> Outcome {
    let mut covered = 0;
    for probe in probes {
        let Some(u) = &probe.report.u else { continue };
        let u_inv = u.inverse().map_err(|e| format!("{}: {e}", show(&probe.rep)))?;
        let double_dual = probe.rep.dual_rep().dual_rep();
        for g in probe.rep.hopf().generators() {
            let lhs = u.matmul(probe.rep.matrix(g).unwrap()).matmul(&u_inv);
            if &lhs != double_dual.matrix(g).unwrap() {
                return Err(format!("U {g} U^-1 != S^2({g}) on {}", show(&probe.rep)));
            }
        }
        covered += 1;
    }
    Ok(format!("S^2 is conjugation by U on {covered} modules"))
}

/// Tr(U) equals the trace of X -> Q X^T Q^-1 on End(V)ed out over matrix
/// units.
fn endomorphism_trace(probes: &[Probe]) -> Outcome {
    let mut covered = 0;
    for probe in probes {
        let Some(q) = &probe.report.q else { continue };
        let n = probe.rep.ctx().n();
        let q_inv = q.inverse().map_err(|e| format!("{}: {e}", show(&probe.rep)))?;
        let dim = probe.rep.dim();
        let mut total = CycNum::zero(n);
        for i in 0..dim {
            for j in 0..dim {
                let mut unit = CMatrix::zero(n, dim, dim);
                unit.set(i, j, CycNum::one(n));
                let image = q.matmul(&unit.transpose()).matmul(&q_inv);
                total = &total + image.get(i, j);
            }
        }
        if total != probe.report.mu {
            return Err(format!(
                "endomorphism trace {total} != Tr(U) = {} on {}",
                probe.report.mu,
                show(&probe.rep)
            ));
        }
        covered += 1;
    }
    Ok(format!(
        "Tr(U) equals the endomorphism-space trace on {covered} modules"
    ))
}

/// The dual of every probe satisfies the defining relations.
fn dual_relations(probes: &[Probe]) -> Outcome {
    for probe in probes {
        let violations = probe.rep.dual_rep().check_relations();
        if !violations.is_empty() {
            return Err(format!(
                "dual of {} breaks {}",
                show(&probe.rep),
                violations.join(", ")
            ));
        }
    }
    Ok(format!(
        "{} dual modules satisfy the defining relations",
        probes.len()
    ))
}

/// The word-preimage oracle reproduces Tr(U) on self-dual probes, and the
/// conventional zero shows up exactly on the rest.
fn oracle_agreement(probes: &[Probe]) -> Outcome {
    let mut covered = 0;
    for probe in probes {
        if probe.report.self_dual {
            let oracle = probe
                .rep
                .mu_oracle()
                .map_err(|e| format!("{}: {e}", show(&probe.rep)))?;
            if oracle != probe.report.mu {
                return Err(format!(
                    "oracle {oracle} != engine {} on {}",
                    probe.report.mu,
                    show(&probe.rep)
                ));
            }
            covered += 1;
        } else if !probe.report.mu.is_zero() {
            return Err(format!(
                "non-self-dual {} must report 0, got {}",
                show(&probe.rep),
                probe.report.mu
            ));
        }
    }
    Ok(format!(
        "engine equals the independent oracle on {covered} self-dual modules"
    ))
}

/// Rescaling Q by any nonzero scalar leaves Tr(U) alone.
fn q_rescaling(probes: &[Probe]) -> Outcome {
    let mut covered = 0;
    for probe in probes {
        let Some(q) = &probe.report.q else { continue };
        let n = probe.rep.ctx().n();
        let half = hopfmu::cyclo::rational_from_str("1/2").expect("literal rational");
        let scalars = [
            CycNum::from_int(2, n),
            CycNum::root(n, 1),
            -&CycNum::root(n, n as i64 - 1),
            CycNum::from_rational(half, n),
        ];
        for scalar in scalars {
            let rescaled = u_matrix(&q.scale(&scalar))
                .map_err(|e| format!("{}: {e}", show(&probe.rep)))?
                .trace();
            if rescaled != probe.report.mu {
                return Err(format!(
                    "Tr(U) moved to {rescaled} under Q -> ({scalar}) Q on {}",
                    show(&probe.rep)
                ));
            }
        }
        covered += 1;
    }
    Ok(format!(
        "Tr(U) unchanged under 4 rescalings of Q on {covered} modules"
    ))
}

/// A fixed unipotent change of basis leaves the invariant alone.
fn basis_invariance(probes: &[Probe]) -> Outcome {
    let mut covered = 0;
    for probe in probes {
        let dim = probe.rep.dim();
        if dim < 2 {
            continue;
        }
        let n = probe.rep.ctx().n();
        // P = I + 2 zeta e_{0,dim-1}; the inverse flips the sign.
        let shear = &CycNum::from_int(2, n) * &CycNum::root(n, 1);
        let mut p = CMatrix::identity(n, dim);
        p.set(0, dim - 1, shear.clone());
        let mut p_inv = CMatrix::identity(n, dim);
        p_inv.set(0, dim - 1, -&shear);
        let matrices = probe
            .rep
            .hopf()
            .generators()
            .iter()
            .map(|g| {
                let m = probe.rep.matrix(g).unwrap();
                (g.clone(), p.matmul(m).matmul(&p_inv))
            })
            .collect();
        let conjugated = Rep::new(
            probe.rep.hopf().clone(),
            probe.rep.ctx().clone(),
            matrices,
            probe.rep.label().clone(),
        );
        let mu = conjugated
            .mu()
            .map_err(|e| format!("{}: {e}", show(&probe.rep)))?
            .mu;
        if mu != probe.report.mu {
            return Err(format!(
                "mu moved to {mu} under a change of basis on {}",
                show(&probe.rep)
            ));
        }
        covered += 1;
    }
    Ok(format!(
        "mu unchanged under a fixed change of basis on {covered} modules"
    ))
}

// ---------------------------------------------------------------------------
// uq suite: closed forms and matrix facts for u_q(sl2); odd order only
// ---------------------------------------------------------------------------

fn uq_suite(session: &mut Session, ctx: &QContext) {
    let simples: Result<Vec<(UqLabel, Rep, MuReport)>, String> = simple_labels(ctx.n())
        .into_iter()
        .map(|label| {
            let rep = build_module(ctx, label).map_err(|e| format!("{label:?}: {e}"))?;
            let report = rep.mu().map_err(|e| format!("{label:?}: {e}"))?;
            Ok((label, rep, report))
        })
        .collect();
    let simples = match simples {
        Ok(simples) => {
            let detail = format!("{} simple modules of dimensions 1..={}", simples.len(), ctx.n());
            session.check("uq/build-simples", Ok(detail));
            simples
        }
        Err(e) => {
            session.check("uq/build-simples", Err(e));
            return;
        }
    };
    session.check("uq/closed-form", uq_closed_form(ctx, &simples));
    session.check("uq/signed-quantum-dimension", uq_signed_qdim(ctx, &simples));
    session.check("uq/oracle", uq_oracle(&simples));
    session.check("uq/k-matrix", uq_k_matrix(ctx, &simples));
    session.check("uq/q-structure", uq_q_structure(ctx, &simples));
    session.check("uq/pivotal", uq_pivotal(ctx, &simples));
    session.check("uq/bilinear-form", uq_bilinear(&simples));
}

fn uq_closed_form(ctx: &QContext, simples: &[(UqLabel, Rep, MuReport)]) -> Outcome {
    for (label, _, report) in simples {
        if !report.self_dual {
            return Err(format!("{label:?} must be self-dual"));
        }
        let expected = mu_closed_form(ctx, *label);
        if report.mu != expected {
            return Err(format!(
                "{label:?}: engine {} != closed form {expected}",
                report.mu
            ));
        }
    }
    Ok(format!(
        "engine matches the alternating-sum closed form on {} modules",
        simples.len()
    ))
}

fn uq_signed_qdim(ctx: &QContext, simples: &[(UqLabel, Rep, MuReport)]) -> Outcome {
    for (label, rep, report) in simples {
        let parity = if rep.dim() % 2 == 1 { 1 } else { -1 };
        let expected = &CycNum::from_int(parity, ctx.n()) * &quantum_dim(ctx, *label);
        if report.mu != expected {
            return Err(format!(
                "{label:?}: mu {} != (-1)^(dim-1) [dim] = {expected}",
                report.mu
            ));
        }
    }
    Ok("mu equals the signed quantum dimension, and 0 on V(q^-1)".to_string())
}

fn uq_oracle(simples: &[(UqLabel, Rep, MuReport)]) -> Outcome {
    for (label, rep, report) in simples {
        let oracle = rep.mu_oracle().map_err(|e| format!("{label:?}: {e}"))?;
        if oracle != report.mu {
            return Err(format!(
                "{label:?}: oracle {oracle} != engine {}",
                report.mu
            ));
        }
    }
    Ok(format!(
        "the word-preimage oracle agrees on all {} modules",
        simples.len()
    ))
}

/// det K = 1 and Tr K = [dim] on every simple module.
fn uq_k_matrix(ctx: &QContext, simples: &[(UqLabel, Rep, MuReport)]) -> Outcome {
    for (label, rep, _) in simples {
        let k = rep.matrix("K").map_err(|e| format!("{label:?}: {e}"))?;
        if !k.det().is_one() {
            return Err(format!("{label:?}: det K = {} != 1", k.det()));
        }
        let expected = ctx.q_int(rep.dim() as i64);
        if k.trace() != expected {
            return Err(format!(
                "{label:?}: Tr K = {} != [{}] = {expected}",
                k.trace(),
                rep.dim()
            ));
        }
    }
    Ok("det K = 1 and Tr K = [dim] on every simple module".to_string())
}

/// Q is antidiagonal on every simple, with ratio (-q)^(l-2r+1) across the
/// antidiagonal on the V_i.
fn uq_q_structure(ctx: &QContext, simples: &[(UqLabel, Rep, MuReport)]) -> Outcome {
    for (label, rep, report) in simples {
        let q = report
            .q
            .as_ref()
            .ok_or_else(|| format!("{label:?}: no Q on a self-dual module"))?;
        let l = rep.dim();
        for r in 0..l {
            for s in 0..l {
                if r + s != l - 1 && !q.get(r, s).is_zero() {
                    return Err(format!("{label:?}: Q[{r}][{s}] off the antidiagonal"));
                }
            }
        }
        if matches!(label, UqLabel::Vqinv) {
            continue;
        }
        for r in 1..=l as i64 {
            let num = q.get(r as usize - 1, l - r as usize);
            let den = q.get(l - r as usize, r as usize - 1);
            let ratio = num.div(den).map_err(|e| format!("{label:?}: {e}"))?;
            let k = l as i64 - 2 * r + 1;
            let sign = CycNum::from_int(if k % 2 == 0 { 1 } else { -1 }, ctx.n());
            let expected = &sign * &ctx.q_pow(k);
            if ratio != expected {
                return Err(format!(
                    "{label:?}: antidiagonal ratio at r = {r} is {ratio}, expected {expected}"
                ));
            }
        }
    }
    Ok("Q is antidiagonal with the (-q)-power ratio law on every V_i".to_string())
}

/// U = lambda K with lambda = (-1)^i on V_i; on V(q^-1) the pivot scalar
/// still exists and Tr(U) = lambda Tr(K) throughout.
fn uq_pivotal(ctx: &QContext, simples: &[(UqLabel, Rep, MuReport)]) -> Outcome {
    for (label, rep, report) in simples {
        let u = report
            .u
            .as_ref()
            .ok_or_else(|| format!("{label:?}: no U on a self-dual module"))?;
        let lambda = rep
            .pivotal_scalar(u, "K")
            .map_err(|e| format!("{label:?}: U is not a multiple of K ({e})"))?;
        if let UqLabel::Vi(i) = label {
            let expected = CycNum::from_int(if i % 2 == 0 { 1 } else { -1 }, ctx.n());
            if lambda != expected {
                return Err(format!("{label:?}: lambda = {lambda}, expected {expected}"));
            }
        }
        let k = rep.matrix("K").map_err(|e| format!("{label:?}: {e}"))?;
        if report.mu != &lambda * &k.trace() {
            return Err(format!("{label:?}: Tr(U) != lambda Tr(K)"));
        }
    }
    Ok("U = lambda K with lambda = (-1)^i, and Tr(U) = lambda Tr(K)".to_string())
}

fn uq_bilinear(simples: &[(UqLabel, Rep, MuReport)]) -> Outcome {
    for (label, rep, report) in simples {
        let q = report
            .q
            .as_ref()
            .ok_or_else(|| format!("{label:?}: no Q on a self-dual module"))?;
        let checks = rep.bilinear_form_checks(q);
        if !checks.all_pass() || checks.coproduct_invariance != Some(true) {
            return Err(format!("{label:?}: bilinear-form checks report {checks:?}"));
        }
    }
    Ok(format!(
        "the Q-bilinear form is nondegenerate and Hopf-invariant on {} modules",
        simples.len()
    ))
}

// ---------------------------------------------------------------------------
// double label suite: theorems about V(l,r) that hold at every order
// ---------------------------------------------------------------------------

/// The labels swept by the quadratic checks: everything up to order 7, a
/// fixed representative set (first/diagonal/last r per l, plus the
/// self-dual catalog) beyond.
fn label_grid(n: u64) -> (Vec<VlrLabel>, String) {
    if n <= FULL_SWEEP_MAX {
        let mut grid = Vec::new();
        for l in 1..=n {
            for r in 1..=n {
                grid.push(VlrLabel { l, r });
            }
        }
        (grid, format!("all {} labels", n * n))
    } else {
        let mut grid = std::collections::BTreeSet::new();
        for l in 1..=n {
            grid.insert(VlrLabel { l, r: 1 });
            grid.insert(VlrLabel { l, r: l });
            grid.insert(VlrLabel { l, r: n });
        }
        grid.extend(self_dual_catalog(n));
        let grid: Vec<VlrLabel> = grid.into_iter().collect();
        let note = format!("{} representative labels", grid.len());
        (grid, note)
    }
}

/// Neighbouring labels used for the sampled classification pairs.
fn bumped(n: u64, label: VlrLabel) -> [VlrLabel; 2] {
    [
        VlrLabel { l: label.l, r: label.r % n + 1 },
        VlrLabel { l: label.l % n + 1, r: label.r },
    ]
}

fn double_label_suite(session: &mut Session, ctx: &QContext) {
    let n = ctx.n();
    let (grid, grid_note) = label_grid(n);
    let mut needed = std::collections::BTreeSet::new();
    for &label in &grid {
        needed.insert(label);
        needed.extend(bumped(n, label));
        needed.insert(dual_label(n, label));
    }
    let built: Result<BTreeMap<VlrLabel, Rep>, String> = needed
        .into_iter()
        .map(|label| {
            let rep = build_vlr(ctx, label).map_err(|e| format!("V({},{}): {e}", label.l, label.r))?;
            let violations = rep.check_relations();
            if !violations.is_empty() {
                return Err(format!(
                    "V({},{}) breaks {}",
                    label.l,
                    label.r,
                    violations.join(", ")
                ));
            }
            Ok((label, rep))
        })
        .collect();
    let reps = match built {
        Ok(reps) => {
            let detail = format!("{} modules satisfy all defining relations ({grid_note})", reps.len());
            session.check("double/relations", Ok(detail));
            reps
        }
        Err(e) => {
            session.check("double/relations", Err(e));
            return;
        }
    };
    session.check("double/classification", double_classification(n, &grid, &reps));
    session.check("double/dual-label", double_dual_label(n, &grid, &reps));
    session.check("double/self-duality", double_self_duality(n, &grid, &reps));
    session.check("double/catalog", double_catalog(n));
}

/// V(l,r) and V(l',r') are isomorphic exactly when the labels agree.
fn double_classification(n: u64, grid: &[VlrLabel], reps: &BTreeMap<VlrLabel, Rep>) -> Outcome {
    let mut pairs = 0;
    let check = |x: VlrLabel, y: VlrLabel| -> Result<(), String> {
        let expected = usize::from(x == y);
        let dim = intertwiner_dim(&reps[&x], &reps[&y]);
        if dim != expected {
            return Err(format!(
                "dim Hom(V({},{}), V({},{})) = {dim}, expected {expected}",
                x.l, x.r, y.l, y.r
            ));
        }
        Ok(())
    };
    if n <= 5 {
        for &x in grid {
            for &y in grid {
                check(x, y)?;
                pairs += 1;
            }
        }
    } else {
        for &x in grid {
            check(x, x)?;
            pairs += 1;
            for y in bumped(n, x) {
                check(x, y)?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "dim Hom(V, W) = [V = W] over {pairs} ordered pairs"
    ))
}

/// The dual of V(l,r) is V(l, 1-(r+l)), and duality is an involution.
fn double_dual_label(n: u64, grid: &[VlrLabel], reps: &BTreeMap<VlrLabel, Rep>) -> Outcome {
    for l in 1..=n {
        for r in 1..=n {
            let label = VlrLabel { l, r };
            let twice = dual_label(n, dual_label(n, label));
            if twice != label {
                return Err(format!("double dual of V({l},{r}) is V({},{})", twice.l, twice.r));
            }
        }
    }
    for &label in grid {
        let dual = dual_label(n, label);
        let dual_module = reps[&label].dual_rep();
        let violations = dual_module.check_relations();
        if !violations.is_empty() {
            return Err(format!(
                "dual of V({},{}) breaks {}",
                label.l,
                label.r,
                violations.join(", ")
            ));
        }
        if intertwiner_dim(&dual_module, &reps[&dual]) != 1 {
            return Err(format!(
                "V({},{})* is not isomorphic to V({},{})",
                label.l, label.r, dual.l, dual.r
            ));
        }
    }
    Ok(format!(
        "V(l,r)* = V(l, 1-(r+l)) on {} labels, duality is an involution on all {}",
        grid.len(),
        n * n
    ))
}

/// The congruence n | 2r+l-1 decides self-duality, matching intertwiners.
fn double_self_duality(n: u64, grid: &[VlrLabel], reps: &BTreeMap<VlrLabel, Rep>) -> Outcome {
    for &label in grid {
        let rep = &reps[&label];
        let hom = intertwiner_dim(rep, &rep.dual_rep());
        if (hom == 1) != is_self_dual(n, label) {
            return Err(format!(
                "V({},{}): criterion says {}, intertwiners say {}",
                label.l,
                label.r,
                is_self_dual(n, label),
                hom == 1
            ));
        }
    }
    Ok(format!(
        "n | 2r+l-1 matches dim Hom(V, V*) on {} labels",
        grid.len()
    ))
}

/// Catalog checks are pure label arithmetic, so they always run in full.
fn double_catalog(n: u64) -> Outcome {
    let catalog = self_dual_catalog(n);
    for l in 1..=n {
        for r in 1..=n {
            let label = VlrLabel { l, r };
            if is_self_dual(n, label) != catalog.contains(&label) {
                return Err(format!("catalog disagrees with the criterion at V({l},{r})"));
            }
        }
    }
    if catalog.len() as u64 != n {
        return Err(format!("catalog has {} entries, expected {n}", catalog.len()));
    }
    if n % 2 == 1 {
        let dims: Vec<u64> = catalog.iter().map(|x| x.l).collect();
        if dims != (1..=n).collect::<Vec<_>>() {
            return Err("odd order must give one self-dual module per dimension".to_string());
        }
    } else if let Some(label) = catalog.iter().find(|x| x.l % 2 == 0) {
        return Err(format!(
            "even order admits no even-dimensional self-dual module, found V({},{})",
            label.l, label.r
        ));
    }
    for &label in &catalog {
        if dual_label(n, label) != label {
            return Err(format!(
                "catalog entry V({},{}) is not fixed by duality",
                label.l, label.r
            ));
        }
    }
    Ok(format!(
        "{} self-dual labels, the parity pattern, and duality-fixedness",
        catalog.len()
    ))
}

// ---------------------------------------------------------------------------
// double mu suite: trace invariants of H_n(1,q^2) and the pullback bridge
// ---------------------------------------------------------------------------

fn double_mu_suite(session: &mut Session, ctx: &QContext) {
    let n = ctx.n();
    if n % 2 == 0 {
        session.check("double/oracle", double_oracle(ctx));
        session.skip(
            "double/mu-closed-form",
            "the tabulated trace values need odd order; even-order values are computed, not tabulated",
        );
        session.skip("double/pullback", "the comparison algebra u_q(sl2) needs odd order");
        return;
    }
    let squared = match squared_context(ctx) {
        Ok(squared) => squared,
        Err(e) => {
            session.check("double/mu-closed-form", Err(e.to_string()));
            return;
        }
    };
    session.check("double/mu-closed-form", double_mu_closed_form(ctx, &squared));
    session.check("double/oracle", double_oracle(&squared));
    session.check("double/pullback", double_pullback(ctx, &squared));
}

/// Engine trace over H_n(1,q^2) equals the gated geometric sum in q, and
/// vanishes exactly off the self-dual catalog.
fn double_mu_closed_form(base: &QContext, squared: &QContext) -> Outcome {
    let n = base.n();
    let (grid, grid_note) = label_grid(n);
    for &label in &grid {
        let rep = build_vlr(squared, label).map_err(|e| format!("V({},{}): {e}", label.l, label.r))?;
        let mu = rep.mu().map_err(|e| format!("V({},{}): {e}", label.l, label.r))?.mu;
        let expected = mu_closed_form_double(base, label).map_err(|e| e.to_string())?;
        if mu != expected {
            return Err(format!(
                "V({},{}): engine {mu} != closed form {expected}",
                label.l, label.r
            ));
        }
        if !is_self_dual(n, label) && !mu.is_zero() {
            return Err(format!("V({},{}) is not self-dual but mu != 0", label.l, label.r));
        }
    }
    Ok(format!("engine matches the gated sum of (-q)-powers on {grid_note}"))
}

/// The two independent trace computations agree on the self-dual catalog
/// over the given root (q^2 at odd order, the presented root at even order
/// where the closed forms are out of scope).
fn double_oracle(module_ctx: &QContext) -> Outcome {
    let catalog = self_dual_catalog(module_ctx.n());
    for &label in &catalog {
        let rep =
            build_vlr(module_ctx, label).map_err(|e| format!("V({},{}): {e}", label.l, label.r))?;
        let mu = rep.mu().map_err(|e| format!("V({},{}): {e}", label.l, label.r))?.mu;
        let oracle = rep
            .mu_oracle()
            .map_err(|e| format!("V({},{}): {e}", label.l, label.r))?;
        if mu != oracle {
            return Err(format!(
                "V({},{}): oracle {oracle} != engine {mu}",
                label.l, label.r
            ));
        }
    }
    Ok(format!(
        "the word-preimage oracle agrees on all {} self-dual modules",
        catalog.len()
    ))
}

/// Pulling back along psi: H_n(1,q^2) -> u_q(sl2) turns V_i into its
/// correspondence label, preserves mu, and reverses the weight ladder.
fn double_pullback(base: &QContext, squared: &QContext) -> Outcome {
    let n = base.n();
    for label in simple_labels(n) {
        let pulled = pullback_along_psi(base, label).map_err(|e| format!("{label:?}: {e}"))?;
        let mu = pulled.mu().map_err(|e| format!("{label:?}: {e}"))?.mu;
        if mu != mu_closed_form(base, label) {
            return Err(format!("{label:?}: pullback mu {mu} != u_q closed form"));
        }
        let target = correspondence_label(n, label).map_err(|e| format!("{label:?}: {e}"))?;
        let target_mu = mu_closed_form_double(base, target).map_err(|e| e.to_string())?;
        if mu != target_mu {
            return Err(format!(
                "{label:?}: pullback mu {mu} != closed form {target_mu} of V({},{})",
                target.l, target.r
            ));
        }
        let target_rep =
            build_vlr(squared, target).map_err(|e| format!("V({},{}): {e}", target.l, target.r))?;
        if intertwiner_dim(&pulled, &target_rep) != 1 {
            return Err(format!(
                "{label:?}: pullback is not isomorphic to V({},{})",
                target.l, target.r
            ));
        }
        if let UqLabel::Vi(i) = label {
            let b = pulled.matrix("b").map_err(|e| format!("{label:?}: {e}"))?;
            let dim = i as usize + 1;
            for p in 0..dim {
                if b.get(dim - 1 - p, dim - 1 - p) != &base.q_pow(2 * p as i64 - i as i64) {
                    return Err(format!("{label:?}: b is not the reversed weight ladder"));
                }
            }
        }
    }
    Ok(format!(
        "pullback along psi matches the correspondence on all {n} simple modules"
    ))
}
