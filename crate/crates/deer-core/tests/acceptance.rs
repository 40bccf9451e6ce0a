//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its runtime. All checks are exactness-based; the stated time limits are
//! asserted.
//!
//! Run with `cargo test -p deer-core --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use deer_core::artin::{BraidWord, Sign};
use deer_core::deer::{
    self, gcd, is_member, lcm, rewrite_to_deer, tau_inner_witness, DeerLetter, DeerParams,
    DeerWord,
};
use deer_core::garside::{self, GarsideIdentity};
use deer_core::periodic::{
    is_periodic, lambda_periodic, mu_element, seeded_members, verify_rotation_identity,
    RotationIdentity,
};
use deer_core::presentations::{
    catalog, eval_braid, positive_presentation, verify_presentation, PresGen, PresentationId,
};
use deer_core::reflection::{expected_order, group_order_bfs, is_regular, MonomialMatrix};
use deer_core::reversing::MonoidVerdict;

const GRID: [(u32, u32); 7] = [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3), (2, 4), (4, 5)];
const FUEL: u64 = 10_000;

fn params(e: u32, r: u32) -> DeerParams {
    DeerParams::new(2, e, r).unwrap()
}

fn finish(criterion: u32, what: &str, t: Instant, limit: Duration) {
    let elapsed = t.elapsed();
    println!(
        "PASS criterion {criterion}: {what} [{:.2?} < {:.0?}]",
        elapsed, limit
    );
    assert!(
        elapsed < limit,
        "criterion {criterion} exceeded its time budget: {elapsed:.2?}"
    );
}

#[test]
fn criterion_01_presentation_suite() {
    let t = Instant::now();
    let mut relations = 0usize;
    for &(e, r) in &GRID {
        let p = params(e, r);
        let window = 6.max(e as i64 + 2);
        let mut ids = vec![
            PresentationId::NewInf,
            PresentationId::NewDeer,
            PresentationId::BmrDeer,
            PresentationId::ShiInf,
        ];
        if r >= 3 {
            ids.push(PresentationId::AtildeDeer);
        }
        for id in ids {
            let report = verify_presentation(id, p, window).unwrap();
            for v in &report.relations {
                assert!(v.verdict, "{id} e={e} r={r}: relation {} failed", v.label);
            }
            relations += report.relations.len();
        }
    }
    assert!(relations > 1000, "suite exercised {relations} relations");
    finish(
        1,
        &format!("{relations} relation instances verify exactly under the embedding"),
        t,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_02_rotation_product_identities() {
    let t = Instant::now();
    let mut checks = 0usize;
    for r in 2..=5u32 {
        for k in 1..=8 {
            assert!(
                verify_rotation_identity(RotationIdentity::PowerProduct { k }, r).unwrap(),
                "power product r={r} k={k}"
            );
            checks += 1;
        }
        assert!(
            verify_rotation_identity(RotationIdentity::FullTwist, r).unwrap(),
            "full twist r={r}"
        );
        checks += 1;
        for j in -4..=4 {
            assert!(
                verify_rotation_identity(RotationIdentity::ShiftedProduct { j }, r).unwrap(),
                "shifted product r={r} j={j}"
            );
            checks += 1;
        }
    }
    finish(
        2,
        &format!("{checks} rotation-product identities hold as exact normal-form equalities"),
        t,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_03_lambda_mu_center() {
    let t = Instant::now();
    for &(e, r) in &GRID {
        let p = params(e, r);
        let lam = lambda_periodic(p);
        let mu = mu_element(p);
        let center = deer::center_element(p);
        let g = gcd(e as i64, r as i64);
        let eps = BraidWord::epsilon_rotation(p.strands());
        assert!(
            lam.embed().equal(&eps.pow(e as i64)).unwrap(),
            "lambda embeds to the e-th rotation power, e={e} r={r}"
        );
        assert!(
            lam.pow(r as i64 / g).equal(&center).unwrap(),
            "lambda^(r/gcd) generates the center, e={e} r={r}"
        );
        assert!(lam.pow(r as i64).equal(&mu).unwrap(), "lambda^r = mu");
        assert!(center.pow(g).equal(&mu).unwrap(), "center^gcd = mu");
        assert_eq!(
            center.embed().winding().unwrap(),
            lcm(e as i64, r as i64),
            "winding of the central generator is lcm(e,r)"
        );
    }
    finish(
        3,
        "lambda, mu and the central generator satisfy all power and winding identities",
        t,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_04_periodicity() {
    let t = Instant::now();
    let mut conjugations = 0usize;
    for &(e, r) in &GRID {
        let p = params(e, r);
        let lam = lambda_periodic(p);
        for q in [-3i64, -2, -1, 1, 2, 3] {
            let v = is_periodic(&lam.pow(q));
            assert!(v.periodic, "lambda^{q} periodic, e={e} r={r}");
            assert_eq!(v.epsilon_power, Some(q * e as i64));
            assert_eq!(v.lambda_power, Some(q));
        }
        let t0 = DeerWord::new(p, vec![DeerLetter::t(0)]).unwrap();
        let zt0 = DeerWord::new(p, vec![DeerLetter::z(), DeerLetter::t(0)]).unwrap();
        assert!(!is_periodic(&t0).periodic);
        if (e, r) == (1, 2) {
            // degenerate corner: here z t_0 is the shift image of
            // lambda = z t_1 itself, hence genuinely periodic
            let v = is_periodic(&zt0);
            assert!(v.periodic && v.lambda_power == Some(1));
        } else {
            assert!(!is_periodic(&zt0).periodic, "e={e} r={r}");
        }
        if r >= 3 {
            let s3 = DeerWord::new(p, vec![DeerLetter::s(3)]).unwrap();
            assert!(!is_periodic(&s3).periodic);
        }
        // verdict is invariant under conjugation by random members
        let lam3 = lam.pow(3);
        for x in seeded_members(p, 1000 + e as u64 * 10 + r as u64, 15, 12) {
            let xd = rewrite_to_deer(&x, p).unwrap();
            let conj = xd.mul(&lam3).unwrap().mul(&xd.inverse()).unwrap();
            let v = is_periodic(&conj);
            assert_eq!(v.epsilon_power, Some(3 * e as i64), "e={e} r={r}");
            assert_eq!(v.lambda_power, Some(3));
            conjugations += 1;
        }
    }
    assert!(conjugations >= 100, "ran {conjugations} conjugations");
    finish(
        4,
        &format!("periodicity exponents exact; verdict invariant under {conjugations} conjugations"),
        t,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_05_reflection_model() {
    let t = Instant::now();
    for &(d, e, r) in &[
        (2u32, 1u32, 2u32),
        (3, 1, 2),
        (2, 2, 2),
        (3, 2, 2),
        (2, 2, 3),
        (2, 3, 2),
    ] {
        let p = DeerParams::new(d, e, r).unwrap();
        let order = group_order_bfs(p, 10_000_000).unwrap();
        assert_eq!(
            order as u128,
            expected_order(p),
            "group order, (d,e,r)=({d},{e},{r})"
        );
        let report = verify_presentation(PresentationId::GDeer, p, 0).unwrap();
        assert!(report.all_pass(), "matrix relations, (d,e,r)=({d},{e},{r})");
        let de = (d * e) as i64;
        for i in -de..=de {
            let a = MonomialMatrix::t_reflection(r as usize, d * e, i + de);
            let b = MonomialMatrix::t_reflection(r as usize, d * e, i);
            assert_eq!(a, b, "t-index periodicity mod de, i={i}");
        }
    }
    finish(
        5,
        "BFS orders match (de)^r·r!/e and all reflection relations hold as matrix identities",
        t,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_06_regular_numbers() {
    let t = Instant::now();
    for &(e, r) in &[(2u32, 2u32), (2, 4), (3, 3), (4, 2)] {
        let p = params(e, r);
        for q in 1..=2 * e * r {
            let v = is_regular(q, p).unwrap();
            assert!(
                v.degrees_divisible <= v.codegrees_divisible,
                "count inequality, p={q} e={e} r={r}"
            );
            assert_eq!(
                v.regular,
                r % q == 0,
                "regularity iff p | r, p={q} e={e} r={r}"
            );
        }
    }
    finish(
        6,
        "degree/codegree counts satisfy |A(p)| ≤ |B(p)| with equality exactly when p | r",
        t,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_07_reversing() {
    let t = Instant::now();
    // complementedness and coherence of the truncated presentations
    for r in 2..=4u32 {
        let inf = positive_presentation(PresentationId::NewInf, params(2, r), 4).unwrap();
        assert!(inf.is_right_complemented(), "infinite family, r={r}");
        let cube = inf.cube_condition(FUEL);
        assert!(cube.passed(), "cube condition (infinite family), r={r}");
        for e in 2..=4u32 {
            let cp = positive_presentation(PresentationId::CpEer, params(e, r), 0).unwrap();
            assert!(cp.is_right_complemented(), "e={e} r={r}");
            assert!(
                cp.cube_condition(FUEL).passed(),
                "cube condition, e={e} r={r}"
            );
        }
    }

    // every instantiated relation is confirmed by reversing itself
    for &(e, r) in &[(1u32, 3u32), (2, 3), (3, 2)] {
        let p = params(e, r);
        let pres = positive_presentation(PresentationId::NewDeer, p, 10).unwrap();
        for rel in catalog(PresentationId::NewDeer, p, 4).unwrap() {
            let ids = |side: &[PresGen]| -> Vec<deer_core::reversing::GenId> {
                side.iter()
                    .map(|g| pres.generator_id(&g.to_string()).unwrap())
                    .collect()
            };
            assert!(
                pres.monoid_equal(&ids(&rel.lhs), &ids(&rel.rhs), FUEL)
                    .unwrap()
                    .is_true(),
                "reversing confirms {} (e={e}, r={r})",
                rel.label
            );
        }
    }

    // agreement with the embedding oracle on random positive pairs; the
    // sampled letters live in the window, while the relation set is padded
    // quadratically: every reversal step lowers a t-index by at most one,
    // and a pair of length-8 words reverses in at most ~len² such steps
    let p = params(2, 3);
    let window = 4i64;
    let max_len = 8i64;
    let pres =
        positive_presentation(PresentationId::NewInf, p, window + max_len * max_len + 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let random_gen = |rng: &mut ChaCha8Rng| -> PresGen {
        if rng.gen_bool(0.75) {
            PresGen::T(rng.gen_range(-window..=window))
        } else {
            PresGen::S(3)
        }
    };
    let relations = catalog(PresentationId::NewInf, p, window).unwrap();
    let mut unsound_true = 0usize;
    let mut disagreements = 0usize;
    let mut inconclusive = 0usize;
    for pair_index in 0..500 {
        let (u, v): (Vec<PresGen>, Vec<PresGen>) = if pair_index % 2 == 0 {
            // an equal pair manufactured from a relation instance
            let rel = &relations[rng.gen_range(0..relations.len())];
            let mut a: Vec<PresGen> = (0..rng.gen_range(0..=2))
                .map(|_| random_gen(&mut rng))
                .collect();
            let b: Vec<PresGen> = (0..rng.gen_range(0..=2))
                .map(|_| random_gen(&mut rng))
                .collect();
            let mut u = a.clone();
            u.extend_from_slice(&rel.lhs);
            u.extend_from_slice(&b);
            a.extend_from_slice(&rel.rhs);
            a.extend_from_slice(&b);
            (u, a)
        } else {
            let len = rng.gen_range(1..=8);
            (
                (0..len).map(|_| random_gen(&mut rng)).collect(),
                (0..len).map(|_| random_gen(&mut rng)).collect(),
            )
        };
        let to_ids = |w: &[PresGen]| -> Vec<deer_core::reversing::GenId> {
            w.iter()
                .map(|g| pres.generator_id(&g.to_string()).unwrap())
                .collect()
        };
        let (ui, vi) = (to_ids(&u), to_ids(&v));
        let verdict = pres.monoid_equal(&ui, &vi, FUEL).unwrap();
        let embed_equal = eval_braid(&u, p).equal(&eval_braid(&v, p)).unwrap();
        match verdict {
            MonoidVerdict::True => {
                if !embed_equal {
                    unsound_true += 1;
                }
            }
            MonoidVerdict::False => {
                if embed_equal {
                    disagreements += 1;
                }
            }
            MonoidVerdict::Inconclusive(_) => inconclusive += 1,
        }
        // completed reversals certify u·v' = v·u'; re-verify via the embedding
        if let deer_core::reversing::ReversingOutcome::Completed {
            left_complement,
            right_complement,
        } = pres.right_reverse(&ui, &vi, FUEL).unwrap()
        {
            let back = |ids: &[deer_core::reversing::GenId]| -> Vec<PresGen> {
                ids.iter()
                    .map(|&g| {
                        let name = pres.generator_name(g);
                        if name == "s3" {
                            PresGen::S(3)
                        } else {
                            let inner = &name[2..name.len() - 1];
                            PresGen::T(inner.parse().unwrap())
                        }
                    })
                    .collect()
            };
            let mut lhs = u.clone();
            lhs.extend(back(&left_complement));
            let mut rhs = v.clone();
            rhs.extend(back(&right_complement));
            assert!(
                eval_braid(&lhs, p).equal(&eval_braid(&rhs, p)).unwrap(),
                "reversing certificate failed the embedding re-check"
            );
        }
    }
    assert_eq!(unsound_true, 0, "no unsound true verdicts");
    assert_eq!(
        disagreements, 0,
        "false verdicts never contradict the embedding"
    );
    assert_eq!(
        inconclusive, 0,
        "padded relation window resolves every pair"
    );
    finish(
        7,
        "complemented + coherent presentations; full 500-pair agreement with the embedding",
        t,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_08_quasi_garside() {
    let t = Instant::now();
    for r in 2..=4u32 {
        let p = params(1, r);
        let lam = garside::lambda_element(p);
        let window = 3i64;
        let report = garside::divisors(&lam, window, lam.len(), FUEL).unwrap();
        assert!(
            report.equal_within_window,
            "left and right divisor sets coincide, r={r}"
        );
        for i in -window..=window {
            let tok = format!("t[{i}]");
            assert!(
                report.left_divisors.iter().any(|d| d == &tok),
                "missing left divisor {tok}, r={r}"
            );
            assert!(
                report.right_divisors.iter().any(|d| d == &tok),
                "missing right divisor {tok}, r={r}"
            );
        }
        for j in 3..=r {
            let tok = format!("s{j}");
            assert!(report.left_divisors.iter().any(|d| d == &tok));
            assert!(report.right_divisors.iter().any(|d| d == &tok));
        }

        // Λ g ≐ τ^r(g) Λ for every window generator, doubly verified
        let mut gens = vec![deer_core::deer::DeerGen::Z];
        for i in -window..=window {
            gens.push(deer_core::deer::DeerGen::T(i));
        }
        for j in 3..=r {
            gens.push(deer_core::deer::DeerGen::S(j));
        }
        for gen in gens {
            let checks =
                garside::verify_garside_identity(GarsideIdentity::TwistCommutation(gen), p, FUEL)
                    .unwrap();
            assert!(
                checks.iter().all(|c| c.doubly_confirmed()),
                "twist commutation at {gen:?}, r={r}"
            );
        }
        let checks =
            garside::verify_garside_identity(GarsideIdentity::AltFactorization, p, FUEL).unwrap();
        assert!(
            checks.iter().all(|c| c.doubly_confirmed()),
            "alternate factorization, r={r}"
        );
    }
    finish(
        8,
        "divisor sets of the Garside element coincide within the window and contain every generator",
        t,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_09_membership_and_rewriting() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7777);
    let mut members = 0usize;
    let mut non_members = 0usize;
    let combos: Vec<(u32, u32)> = [1u32, 2, 3]
        .iter()
        .flat_map(|&e| [(e, 2u32), (e, 3u32)])
        .collect();
    for &(e, r) in &combos {
        let p = params(e, r);
        let n = p.strands();
        let mut got_members = 0;
        let mut got_non = 0;
        while got_members < 50 || got_non < 50 {
            let len = rng.gen_range(1..=10);
            let signed: Vec<i64> = (0..len)
                .map(|_| {
                    let i = rng.gen_range(1..n) as i64;
                    if rng.gen_bool(0.5) {
                        i
                    } else {
                        -i
                    }
                })
                .collect();
            let w = BraidWord::from_signed(n, &signed).unwrap();
            if is_member(&w, p).unwrap() {
                if got_members < 50 {
                    got_members += 1;
                    members += 1;
                    let dw = rewrite_to_deer(&w, p).unwrap();
                    assert!(
                        dw.embed().equal(&w).unwrap(),
                        "round trip failed, e={e} r={r} w={w}"
                    );
                }
            } else if got_non < 50 {
                got_non += 1;
                non_members += 1;
                assert!(matches!(
                    rewrite_to_deer(&w, p),
                    Err(deer_core::deer::DeerError::NotMember(_))
                ));
            }
        }
    }
    assert_eq!(members, 300);
    assert_eq!(non_members, 300);
    // purpose-built non-members: spoil the winding, or the purity
    for &(e, r) in &combos {
        let p = params(e, r);
        let n = p.strands();
        let sigma1 = BraidWord::from_signed(n, &[1]).unwrap();
        for base in seeded_members(p, 42 + e as u64, 10, 8) {
            if e >= 2 {
                let wrong_winding = base.mul(&sigma1.pow(2)).unwrap();
                assert!(!is_member(&wrong_winding, p).unwrap(), "e={e} r={r}");
            }
            let not_pure = base.mul(&sigma1).unwrap();
            assert!(!is_member(&not_pure, p).unwrap(), "e={e} r={r}");
        }
    }
    finish(
        9,
        "300 member braids rewrite and round-trip exactly; 300+ non-members rejected",
        t,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_10_tau_innerness() {
    let t = Instant::now();
    for &(e, r) in &GRID {
        let p = params(e, r);
        let witness = tau_inner_witness(p);
        if gcd(e as i64, r as i64) == 1 {
            let (k, x) = witness.expect("witness exists when gcd(e,r) = 1");
            assert!((k * r as i64 + 1) % e as i64 == 0);
            assert!(is_member(&x, p).unwrap());
            let mut gens = vec![DeerWord::new(p, vec![DeerLetter::z()]).unwrap()];
            for i in -2..=2 {
                gens.push(DeerWord::new(p, vec![DeerLetter::t(i)]).unwrap());
            }
            for j in 3..=r {
                gens.push(DeerWord::new(p, vec![DeerLetter::s(j)]).unwrap());
            }
            for g in gens {
                let conj = g.embed().conjugated_by(&x).unwrap();
                assert!(
                    conj.equal(&g.tau().embed()).unwrap(),
                    "witness conjugates like the shift, e={e} r={r} g={g}"
                );
            }
        } else {
            assert!(witness.is_none(), "no witness when gcd(e,r) > 1, e={e} r={r}");
        }
    }
    finish(
        10,
        "shift-automorphism witnesses exist exactly for gcd(e,r) = 1 and act correctly",
        t,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_11_desk_scale_exclusions() {
    // Translation-number values, k-th root computation and biautomaticity
    // have no algorithms here; they are covered only by the property
    // suites above and are deliberately out of scope.
    println!(
        "PASS criterion 11: excluded analyses (translation numbers, root extraction, \
         biautomaticity) are documented as out of scope"
    );
}

/// The winding check inside membership and the strand-removal machinery are
/// exercised across the grid as part of the suite's fixed examples; this
/// cross-check keeps the two entry points consistent with each other.
#[test]
fn cross_check_membership_vs_semidirect_exponent() {
    let mut rng = ChaCha8Rng::seed_from_u64(31337);
    for &(e, r) in &GRID {
        let p = params(e, r);
        for _ in 0..10 {
            let len = rng.gen_range(0..=8);
            let letters: Vec<DeerLetter> = (0..len)
                .map(|_| {
                    let gen = match rng.gen_range(0..3) {
                        0 => deer_core::deer::DeerGen::Z,
                        1 => deer_core::deer::DeerGen::T(rng.gen_range(-2..=2)),
                        _ if r >= 3 => deer_core::deer::DeerGen::S(rng.gen_range(3..=r)),
                        _ => deer_core::deer::DeerGen::T(0),
                    };
                    DeerLetter {
                        gen,
                        sign: if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg },
                    }
                })
                .collect();
            let w = DeerWord::new(p, letters).unwrap();
            assert!(is_member(&w.embed(), p).unwrap());
            let sf = w.semidirect_form();
            assert_eq!(sf.z_exponent * e as i64, w.embed().winding().unwrap());
            let tail_pure: BTreeSet<usize> = std::iter::once(1).collect();
            assert!(sf.tail.embed().is_pure(&tail_pure).unwrap());
        }
    }
}
