//! Acceptance suite: one test per documented guarantee of the library.
//!
//! Every check is exact — the arithmetic is in Q(zeta_n), so there is no
//! tolerance anywhere. Each test prints a single PASS line on success so a
//! `--nocapture` run reads as a checklist.

use hopfmu::{
    build_module, build_vlr, correspondence_label, dual_label, intertwiner_dim,
    mu_closed_form_double, pullback_along_psi, self_dual_catalog, simple_labels, squared_context,
    u_matrix, CMatrix, CycNum, QContext, UqLabel, VlrLabel,
};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn ctx(n: u64) -> QContext {
    QContext::new(n, 1).unwrap()
}

fn pass(k: u32, what: &str) {
    println!("PASS criterion {k:02}: {what}");
}

/// The same module in the basis transformed by p: every generator matrix
/// conjugated to p g p^-1.
fn conjugate(rep: &hopfmu::Rep, p: &CMatrix, p_inv: &CMatrix) -> hopfmu::Rep {
    let matrices = rep
        .hopf()
        .generators()
        .iter()
        .map(|g| {
            let m = rep.matrix(g).unwrap();
            (g.clone(), p.matmul(m).matmul(p_inv))
        })
        .collect();
    hopfmu::Rep::new(rep.hopf().clone(), rep.ctx().clone(), matrices, rep.label().clone())
}

/// Engine mu equals the alternating sum and the signed quantum dimension
/// for every simple u_q(sl2)-module, and vanishes on V(q^-1).
#[test]
fn criterion_01_uq_trace_theorem() {
    for n in [3, 5, 7, 9] {
        let c = ctx(n);
        for i in 0..=n - 2 {
            let report = build_module(&c, UqLabel::Vi(i)).unwrap().mu().unwrap();
            assert!(report.self_dual, "V_{i} at n={n} must be self-dual");
            // sum over j of (-q)^(i-2j), with the sign read off the exponent.
            let mut sum = CycNum::zero(n);
            for j in 0..=i as i64 {
                let k = i as i64 - 2 * j;
                let sign = CycNum::from_int(if k % 2 == 0 { 1 } else { -1 }, n);
                sum = &sum + &(&sign * &c.q_pow(k));
            }
            assert_eq!(report.mu, sum, "V_{i} at n={n}");
            let parity = CycNum::from_int(if i % 2 == 0 { 1 } else { -1 }, n);
            let signed_qdim = &parity * &c.q_int(i as i64 + 1);
            assert_eq!(report.mu, signed_qdim, "V_{i} vs signed [i+1] at n={n}");
        }
        // V(q^-1) is the unique n-dimensional simple, hence self-dual; its
        // invariant vanishes with the quantum dimension [n].
        let report = build_module(&c, UqLabel::Vqinv).unwrap().mu().unwrap();
        assert!(report.self_dual, "V(q^-1) at n={n} is self-dual");
        assert!(report.mu.is_zero(), "mu(V(q^-1)) at n={n}");
    }
    pass(1, "u_q trace values match sum (-q)^(i-2j) = (-1)^i [i+1], and 0 on V(q^-1), n in {3,5,7,9}");
}

/// The Skolem–Noether route Tr(Q (Q^-1)^T) and the monomial-preimage
/// oracle produce the same invariant for every simple module.
#[test]
fn criterion_02_oracle_equivalence() {
    for n in [3, 5, 7, 9] {
        let c = ctx(n);
        for label in simple_labels(n) {
            let rep = build_module(&c, label).unwrap();
            let mu = rep.mu().unwrap().mu;
            let oracle = rep.mu_oracle().unwrap();
            assert_eq!(mu, oracle, "{label:?} at n={n}");
        }
    }
    pass(2, "Skolem-Noether mu equals the word-preimage oracle for every u_q simple, n in {3,5,7,9}");
}

/// Q is antidiagonal with the (-q)-power ratio across the antidiagonal.
#[test]
fn criterion_03_q_structure() {
    for n in [3u64, 5, 7, 9] {
        let c = ctx(n);
        for i in 0..=n - 2 {
            let rep = build_module(&c, UqLabel::Vi(i)).unwrap();
            let q = rep.mu().unwrap().q.expect("self-dual module has Q");
            let l = i as usize + 1;
            for r in 0..l {
                for s in 0..l {
                    if r + s != l - 1 {
                        assert!(q.get(r, s).is_zero(), "Q[{r}][{s}] off-antidiagonal, V_{i} n={n}");
                    }
                }
            }
            // Ratio law with 1-based antidiagonal index r: 1 <= r <= l.
            for r in 1..=l as i64 {
                let num = q.get(r as usize - 1, l - r as usize);
                let den = q.get(l - r as usize, r as usize - 1);
                let ratio = num.div(den).unwrap();
                let k = l as i64 - 2 * r + 1;
                let sign = CycNum::from_int(if k % 2 == 0 { 1 } else { -1 }, n);
                assert_eq!(ratio, &sign * &c.q_pow(k), "ratio at r={r}, V_{i} n={n}");
            }
        }
    }
    pass(3, "Q is antidiagonal with Q[r,l+1-r]/Q[l+1-r,r] = (-q)^(l-2r+1) for every V_i, n in {3,5,7,9}");
}

/// The K-action has determinant 1 and trace [i+1] on V_i.
#[test]
fn criterion_04_k_matrix_facts() {
    for n in [3, 5, 7, 9] {
        let c = ctx(n);
        for i in 0..=n - 2 {
            let rep = build_module(&c, UqLabel::Vi(i)).unwrap();
            let k = rep.matrix("K").unwrap();
            assert!(k.det().is_one(), "det K on V_{i} at n={n}");
            assert_eq!(k.trace(), c.q_int(i as i64 + 1), "tr K on V_{i} at n={n}");
        }
    }
    pass(4, "det(K) = 1 and Tr(K) = [i+1] on every V_i, n in {3,5,7,9}");
}

/// U is the scalar (-1)^i times the K-action: the pivotal scalar.
#[test]
fn criterion_05_pivotal_scalar() {
    for n in [3, 5, 7, 9] {
        let c = ctx(n);
        for i in 0..=n - 2 {
            let rep = build_module(&c, UqLabel::Vi(i)).unwrap();
            let u = rep.mu().unwrap().u.expect("self-dual module has U");
            let lambda = rep.pivotal_scalar(&u, "K").unwrap();
            let expected = CycNum::from_int(if i % 2 == 0 { 1 } else { -1 }, n);
            assert_eq!(lambda, expected, "lambda on V_{i} at n={n}");
        }
    }
    pass(5, "U = (-1)^i K on every V_i, n in {3,5,7,9}");
}

/// The bilinear form from Q^-1 is non-degenerate, H-invariant (adjoint
/// law), satisfies the u-law, and is epsilon-invariant under the coproduct.
#[test]
fn criterion_06_bilinear_form() {
    for n in [3, 5, 7, 9] {
        let c = ctx(n);
        for label in simple_labels(n) {
            let rep = build_module(&c, label).unwrap();
            let mu = rep.mu().unwrap();
            assert!(mu.self_dual, "{label:?} at n={n} is self-dual");
            let q = mu.q.expect("self-dual module has Q");
            let report = rep.bilinear_form_checks(&q);
            assert!(report.nondegenerate, "nondegenerate, {label:?} n={n}");
            assert!(report.adjoint_law, "adjoint law, {label:?} n={n}");
            assert!(report.u_law, "u-law, {label:?} n={n}");
            assert_eq!(report.coproduct_invariance, Some(true), "coproduct, {label:?} n={n}");
        }
    }
    pass(6, "bilinear form passes non-degeneracy, adjoint, u-law, coproduct invariance on every self-dual simple, n in {3,5,7,9}");
}

/// Intertwiner dimensions reproduce the classification of the V(l,r):
/// isomorphic exactly when dimensions match and weights agree mod n.
#[test]
fn criterion_07_chen_classification() {
    for n in [3u64, 4, 5] {
        let c = ctx(n);
        let reps: Vec<(VlrLabel, _)> = (1..=n)
            .flat_map(|l| (1..=n).map(move |r| VlrLabel { l, r }))
            .map(|x| (x, build_vlr(&c, x).unwrap()))
            .collect();
        for (x, rep_x) in &reps {
            for (y, rep_y) in &reps {
                let expected = usize::from(x == y);
                assert_eq!(
                    intertwiner_dim(rep_x, rep_y),
                    expected,
                    "Hom(V({},{}), V({},{})) at n={n}",
                    x.l, x.r, y.l, y.r
                );
            }
        }
    }
    pass(7, "Hom(V(l,r), V(l',r')) has dimension 1 iff l=l' and r=r' mod n, all pairs, n in {3,4,5}");
}

/// The dual of V(l,r) is isomorphic to V(l, 1-(r+l)).
#[test]
fn criterion_08_dual_label_theorem() {
    for n in [3u64, 4, 5] {
        let c = ctx(n);
        for l in 1..=n {
            for r in 1..=n {
                let label = VlrLabel { l, r };
                let dual = build_vlr(&c, label).unwrap().dual_rep();
                assert!(dual.check_relations().is_empty());
                let expected = build_vlr(&c, dual_label(n, label)).unwrap();
                assert_eq!(
                    intertwiner_dim(&dual, &expected),
                    1,
                    "V({l},{r})* vs V({},{}) at n={n}",
                    dual_label(n, label).l,
                    dual_label(n, label).r
                );
            }
        }
    }
    pass(8, "dual_rep(V(l,r)) is isomorphic to V(l, 1-(r+l)) for all n^2 labels, n in {3,4,5}");
}

/// The self-dual catalog: one label per dimension at n=5; exactly
/// {(1,2),(1,4),(3,1),(3,3)} at n=4.
#[test]
fn criterion_09_self_duality_catalog() {
    let n5: Vec<(u64, u64)> = self_dual_catalog(5).iter().map(|x| (x.l, x.r)).collect();
    assert_eq!(n5.len(), 5);
    let dims: Vec<u64> = n5.iter().map(|&(l, _)| l).collect();
    assert_eq!(dims, [1, 2, 3, 4, 5], "one self-dual label per dimension at n=5");
    assert_eq!(n5, [(1, 5), (2, 2), (3, 4), (4, 1), (5, 3)]);
    let n4: Vec<(u64, u64)> = self_dual_catalog(4).iter().map(|x| (x.l, x.r)).collect();
    assert_eq!(n4, [(1, 2), (1, 4), (3, 1), (3, 3)]);
    pass(9, "self-dual catalogs: n=5 one per dimension, n=4 exactly {(1,2),(1,4),(3,1),(3,3)}");
}

/// Pulling a u_q-module back along psi lands on the predicted V(l,r).
#[test]
fn criterion_10_correspondence() {
    for n in [5u64, 7] {
        let base = ctx(n);
        let squared = squared_context(&base).unwrap();
        for label in simple_labels(n) {
            // pullback_along_psi verifies the H_n(1,q^2) relations internally.
            let pulled = pullback_along_psi(&base, label).unwrap();
            assert!(pulled.check_relations().is_empty());
            let target = correspondence_label(n, label).unwrap();
            let direct = build_vlr(&squared, target).unwrap();
            assert_eq!(
                intertwiner_dim(&pulled, &direct),
                1,
                "{label:?} vs V({},{}) at n={n}",
                target.l,
                target.r
            );
        }
        let vqinv_target = correspondence_label(n, UqLabel::Vqinv).unwrap();
        assert_eq!((vqinv_target.l, vqinv_target.r), (n, (n + 1) / 2));
    }
    pass(10, "psi-pullbacks satisfy the relations and match their correspondence labels, n in {5,7}");
}

/// The closed-form invariant for the double: sum of (-q)^(l-2j+1) when
/// 2r = 1-l mod n, zero otherwise, against the engine on H_n(1,q^2).
#[test]
fn criterion_11_double_mu_theorem() {
    for n in [5u64, 7] {
        let base = ctx(n);
        let squared = squared_context(&base).unwrap();
        for l in 1..=n {
            for r in 1..=n {
                let label = VlrLabel { l, r };
                let mu = build_vlr(&squared, label).unwrap().mu().unwrap().mu;
                let expected = if (2 * r + l - 1) % n == 0 {
                    let mut acc = CycNum::zero(n);
                    for j in 1..=l as i64 {
                        let k = l as i64 - 2 * j + 1;
                        let sign = CycNum::from_int(if k % 2 == 0 { 1 } else { -1 }, n);
                        acc = &acc + &(&sign * &base.q_pow(k));
                    }
                    acc
                } else {
                    CycNum::zero(n)
                };
                assert_eq!(mu, expected, "V({l},{r}) at n={n}");
                assert_eq!(mu, mu_closed_form_double(&base, label).unwrap());
            }
        }
    }
    pass(11, "engine mu over H_n(1,q^2) equals sum (-q)^(l-2j+1) gated by 2r = 1-l mod n, n in {5,7}");
}

/// mu is invariant under random basis changes and Q rescalings.
#[test]
fn criterion_12_randomized_invariance() {
    let n = 5u64;
    let c = ctx(n);
    let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
    for trial in 0..20 {
        // Random module from either family.
        let rep = if rng.gen_bool(0.5) {
            let labels = simple_labels(n);
            build_module(&c, labels[rng.gen_range(0..labels.len())]).unwrap()
        } else {
            let label = VlrLabel {
                l: rng.gen_range(1..=n),
                r: rng.gen_range(1..=n),
            };
            build_vlr(&c, label).unwrap()
        };
        let reference = rep.mu().unwrap();
        // Random invertible basis change assembled from a unit diagonal and
        // transvections, so the exact inverse is available directly.
        let dim = rep.dim();
        let exps: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..n as i64)).collect();
        let mut p = CMatrix::diagonal(&exps.iter().map(|&e| CycNum::root(n, e)).collect::<Vec<_>>());
        let mut p_inv =
            CMatrix::diagonal(&exps.iter().map(|&e| CycNum::root(n, -e)).collect::<Vec<_>>());
        for _ in 0..2 {
            if dim < 2 {
                break;
            }
            let s = rng.gen_range(0..dim);
            let mut t = rng.gen_range(0..dim);
            while t == s {
                t = rng.gen_range(0..dim);
            }
            let a = &CycNum::from_int(rng.gen_range(-2i64..=2), n)
                * &CycNum::root(n, rng.gen_range(0..n as i64));
            let mut trans = CMatrix::identity(n, dim);
            trans.set(s, t, a.clone());
            let mut trans_inv = CMatrix::identity(n, dim);
            trans_inv.set(s, t, -&a);
            p = trans.matmul(&p);
            p_inv = p_inv.matmul(&trans_inv);
        }
        assert!(p.matmul(&p_inv).sub(&CMatrix::identity(n, dim)).is_zero());
        let conjugated = conjugate(&rep, &p, &p_inv);
        assert_eq!(
            conjugated.mu().unwrap().mu,
            reference.mu,
            "basis conjugation trial {trial}"
        );
        // Q rescaling: U, and hence mu, ignores the normalization of Q.
        if let Some(q) = reference.q {
            let mut scalar = CycNum::zero(n);
            while scalar.is_zero() {
                scalar = &CycNum::from_int(rng.gen_range(-3i64..=3), n)
                    * &CycNum::root(n, rng.gen_range(0..n as i64));
            }
            let rescaled = q.scale(&scalar);
            assert_eq!(
                u_matrix(&rescaled).unwrap().trace(),
                u_matrix(&q).unwrap().trace(),
                "Q rescaling trial {trial}"
            );
        }
    }
    pass(12, "mu invariant under 20 random basis conjugations and Q rescalings at n=5");
}
