//! `adjfact selftest`: every identity suite at one size, in a fixed order.
//! The report is deterministic in `(n, seed)`; wall times are kept apart so
//! callers can print them to stderr.

use std::time::{Duration, Instant};

use adjfact::companion::{
    bilinear, companion_formula, companion_left, companion_left_oracle, companion_left_tau, companion_oracle,
    companion_right, half_trace_check, ile_correction, quadratic_form, special_companions,
};
use adjfact::factorize::{build_normalized, factor_adjoint, hyperbolic, nilpotent_witness, normalized_equivalent};
use adjfact::genmat::{derivative_minor_suite, determinant};
use adjfact::homology::{
    build_res_e, build_scandinavian, check_complex, closed_numerator_detideal, closed_numerator_e,
    expected_rank_profile, generic_rank_profile, hilbert_from_complex, hilbert_from_slots, res_e_shape,
    scandinavian_shape,
};
use adjfact::matfact::{adjoint_ranks, canonical_mfs, cokernel_rank, pushout_block, reduce_pushout};
use adjfact::random::Rng;
use adjfact::{Alternating, Context, Equivalence, PolyMat, Report};

type Stage = fn(&Context, &mut Rng) -> Report;

pub struct SelftestRun {
    pub report: Report,
    pub timings: Vec<(String, Duration)>,
}

pub fn selftest(n: usize, seed: u64) -> SelftestRun {
    let mut run = SelftestRun { report: Report::new(), timings: Vec::new() };
    let ctx = match Context::new(n) {
        Ok(c) => c,
        Err(e) => {
            run.report.check_with("context", false, e.to_string());
            return run;
        }
    };
    let mut rng = Rng::new(seed);
    let stages: [(&str, Stage); 5] = [
        ("genmat", genmat_stage),
        ("companion", companion_stage),
        ("matfact", matfact_stage),
        ("factorize", factorize_stage),
        ("homology", homology_stage),
    ];
    for (name, stage) in stages {
        let start = Instant::now();
        let rep = stage(&ctx, &mut rng);
        run.timings.push((name.to_string(), start.elapsed()));
        run.report.absorb(&format!("{name}: "), rep);
    }
    run
}

fn genmat_stage(ctx: &Context, _: &mut Rng) -> Report {
    let mut rep = Report::new();
    for k in 1..=3 {
        rep.absorb(&format!("k={k} "), derivative_minor_suite(ctx, k));
    }
    if ctx.n <= 4 {
        rep.check(
            "det(adj X) = det(X)^(n-1)",
            determinant(&ctx.adj).map(|d| d == ctx.det.pow(ctx.n as u32 - 1)).unwrap_or(false),
        );
    } else {
        rep.skip("det(adj X) = det(X)^(n-1)", "expanded only for n <= 4");
    }
    rep
}

fn companion_stage(ctx: &Context, rng: &mut Rng) -> Report {
    let n = ctx.n;
    let mut rep = Report::new();
    let a: Alternating = rng.alternating(n, n);
    let a2: Alternating = rng.alternating(n, n);
    let u: PolyMat = rng.int_matrix_nonsingular(n, n, 9);

    for (name, uu) in [("U const", &u), ("U = X", &ctx.x)] {
        let b = companion_right(&a, uu);
        rep.check_result(format!("{name}: B_A identity"), &b);
        if let Ok(b) = &b {
            rep.check(format!("{name}: B_A alternating"), b.is_alternating());
            match companion_oracle(&a, uu) {
                Ok(o) => rep.check(format!("{name}: B_A = oracle"), o == *b),
                Err(e) => rep.skip(format!("{name}: B_A = oracle"), e.to_string()),
            };
        }
    }
    let left = companion_left(&a, &u);
    rep.check_result("left companion identity", &left);
    if let (Ok(l), Ok(o)) = (&left, companion_left_oracle(&a, &u)) {
        rep.check("left companion = oracle", *l == o);
    }
    let aff: Alternating = rng.alternating_affine(n);
    let tau_ok = match (companion_left(&aff, &ctx.x), companion_left_tau(ctx, &aff)) {
        (Ok(l), Ok(t)) => l == t,
        _ => false,
    };
    rep.check("_A B = tau(B_tau A) at U = X", tau_ok);

    match bilinear(&a, &a2, &ctx.x) {
        Ok(data) => {
            rep.check("bilinear identities", true);
            if let Ok(b) = companion_formula(&a, &ctx.x) {
                rep.absorb("", half_trace_check(&data, &b, &a2, &ctx.x));
            }
        }
        Err(e) => {
            rep.check_with("bilinear identities", false, e.to_string());
        }
    }
    rep.absorb("", special_companions(ctx, &a, &u));
    rep.check_result("U adj(X) - X V = tr(U adj X) id", &ile_correction(ctx, &u));
    rep.check_result("quadratic form r(tau A, A) and Yoneda identities", &quadratic_form(ctx, &aff));
    rep
}

fn matfact_stage(ctx: &Context, rng: &mut Rng) -> Report {
    let n = ctx.n;
    let mut rep = Report::new();
    match canonical_mfs(ctx) {
        Ok(q) => {
            let ranks: Vec<_> = q.all().iter().map(|m| cokernel_rank(m).ok()).collect();
            let want: Vec<_> = [1, n - 1, 1, n - 1].into_iter().map(Some).collect();
            rep.check_with("canonical ranks (L, M, Lv, Mv)", ranks == want, format!("{ranks:?}"));
        }
        Err(e) => {
            rep.check_with("canonical factorizations", false, e.to_string());
        }
    }
    let id = PolyMat::identity(n, n);
    rep.check("ranks (Y, Z) = (id, adj X) give (0, n-1)", adjoint_ranks(ctx, &id, &ctx.adj) == Ok((0, n - 1)));
    let a: Alternating = rng.alternating(n, n);
    rep.check_result("pushout_block rank 2", &pushout_block(ctx, &a));
    if n.is_multiple_of(2) {
        let h: Alternating = rng.invertible_alternating(n, n);
        rep.check_result("reduce_pushout rank 2", &reduce_pushout(ctx, &h));
    } else {
        rep.skip("reduce_pushout rank 2", "odd n has no invertible alternating A");
    }
    rep
}

fn factorize_stage(ctx: &Context, rng: &mut Rng) -> Report {
    let n = ctx.n;
    let mut rep = Report::new();
    if !n.is_multiple_of(2) {
        rep.skip("factor_adjoint", "odd n");
        rep.skip("normalized round trip", "odd n");
        return rep;
    }
    let h: Alternating = hyperbolic(n).expect("even n");
    let a: Alternating = rng.invertible_alternating(n, n);
    for (name, a1, a2) in [("hyperbolic", &h, &h), ("random", &a, &h)] {
        match factor_adjoint(ctx, a1, a2) {
            Ok(f) => {
                rep.check(format!("{name}: trivial iff n = 2"), f.trivial == (n == 2));
                let r = adjoint_ranks(ctx, &f.y, &f.z);
                rep.check_with(format!("{name}: ranks (1, n-2)"), r == Ok((1, n - 2)), format!("{r:?}"));
            }
            Err(e) => {
                rep.check_with(format!("{name}: Y Z = Y' Z' = adj X"), false, e.to_string());
            }
        }
    }
    let zero = PolyMat::zeros(n, n, n);
    match build_normalized(ctx, &a, &zero) {
        Ok(nf1) => {
            rep.check("normalized U = 0", true);
            let v0 = nilpotent_witness(ctx, &a, &PolyMat::elementary(n, n, 1, 2));
            match build_normalized(ctx, &a, &v0) {
                Ok(nf2) => {
                    rep.check("equivalent pair recovers V", normalized_equivalent(ctx, &nf2, &nf1) == Equivalence::Equivalent(v0));
                    let mut bad = nf2.clone();
                    bad.z = &bad.z + &PolyMat::elementary(n, n, 1, 1);
                    rep.check("tampered Z rejected", normalized_equivalent(ctx, &nf1, &bad) == Equivalence::NotEquivalent);
                }
                Err(e) => {
                    rep.check_with("normalized witness", false, e.to_string());
                }
            }
        }
        Err(e) => {
            rep.check_with("normalized U = 0", false, e.to_string());
        }
    }
    rep
}

fn homology_stage(ctx: &Context, rng: &mut Rng) -> Report {
    let n = ctx.n;
    let mut rep = Report::new();
    rep.check("E bookkeeping = closed form", hilbert_from_slots(n, &res_e_shape(n)) == closed_numerator_e(n));
    rep.check(
        "S/I bookkeeping = closed form",
        hilbert_from_slots(n, &scandinavian_shape(n)) == closed_numerator_detideal(n),
    );
    if n > 4 {
        rep.skip("symbolic complexes", "built for n <= 4 only");
        return rep;
    }
    let seed = rng.int(1 << 30).unsigned_abs();
    for (name, cx, closed) in [
        ("resE", build_res_e(ctx), closed_numerator_e(n)),
        ("scand", build_scandinavian(ctx), closed_numerator_detideal(n)),
    ] {
        match cx {
            Ok(cx) => {
                rep.absorb(&format!("{name} "), check_complex(&cx));
                rep.check(format!("{name} hilbert from complex"), hilbert_from_complex(&cx) == closed);
                let got = generic_rank_profile(&cx, seed);
                let want = expected_rank_profile(&cx.slot_ranks());
                rep.check_with(format!("{name} rank profile"), got == want, format!("{got:?} vs {want:?}"));
            }
            Err(e) => {
                rep.check_with(format!("{name} build"), false, e.to_string());
            }
        }
    }
    rep
}
