//! One line per acceptance criterion.
//!
//! Two criteria cannot pass because the published classification omits
//! contractions that verify exactly. Those print FAIL together with the
//! offending pairs, and the target only fails if the set of failures differs
//! from the known one. Any other FAIL fails the target.

use lieshrink::arith::{ratfun_matrix_inverse, Matrix, Rational};
use lieshrink::catalog::{
    self, entries, filiform, filiform_heisenberg_basis, heisenberg, ids, pad_family, run_theorem24,
    run_theorem24_parts, try_witnesses, witness_store, PaddedStore, Part, Theorem24Report,
};
use lieshrink::contraction::{
    decide, obstruct, rational_to_ratfun, reduce_stabilized, search_diagonal, search_diagonal_exponents,
    sheared_permutations, verify_contraction, ContractionFamily, Rule, Verdict, WitnessLookup,
};
use lieshrink::gt::{closure_cone_member_nilpotent, extract_cone_limit, find_gt_form, make_gt, JordanType};
use lieshrink::lie::{center, derived_algebra, fingerprint, flat_generic_orbits, pad, LieAlgebra};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

enum Status {
    Pass,
    /// Failed only on the documented discrepancies.
    KnownFail,
    Fail,
}

struct Outcome {
    status: Status,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { status: if pass { Status::Pass } else { Status::Fail }, detail }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn get(id: &str) -> LieAlgebra {
    catalog::get(id).unwrap_or_else(|e| panic!("{e}"))
}

fn gt_id(t: &JordanType) -> String {
    format!("gT:{}", lieshrink::gt::matrix_literal(&t.representative()))
}

fn witness_reproduction() -> Outcome {
    let ws = match try_witnesses() {
        Ok(ws) => ws,
        Err(e) => return outcome(false, e.to_string()),
    };
    let printed: Vec<_> = ws.iter().filter(|w| w.variant != "found" && w.variant != "generated").collect();
    let mut bad = Vec::new();
    let mut slowest = Duration::ZERO;
    let mut inverses = 0;
    for w in &printed {
        let t = Instant::now();
        if !verify_contraction(&w.family).is_verified() {
            bad.push(w.id.clone());
        }
        slowest = slowest.max(t.elapsed());
        if let Some(p) = &w.printed_inverse {
            inverses += 1;
            if ratfun_matrix_inverse(w.family.matrix()).ok().as_ref() != Some(p) {
                bad.push(format!("{} inverse", w.id));
            }
        }
    }
    outcome(
        bad.is_empty() && printed.len() >= 22 && inverses == 8 && slowest < Duration::from_secs(1),
        format!(
            "{} printed families verify, {inverses} printed inverses match, slowest {}{}",
            printed.len(),
            secs(slowest),
            if bad.is_empty() { String::new() } else { format!("; failing: {}", bad.join(", ")) }
        ),
    )
}

fn obstruction_reproduction() -> Outcome {
    use Rule::*;
    let mut cases: Vec<(String, String, Rule)> = Vec::new();
    let mut push = |s: String, t: String, r: Rule| cases.push((s, t, r));
    let semisimple = ["su2", "sl2"];
    let solvable = ["A48m1", "A490"];
    for k in 0..=2 {
        push(format!("su2+a{k}"), format!("sl2+a{k}"), R8);
        push(format!("sl2+a{k}"), format!("su2+a{k}"), R6);
        push(format!("su2+a{}", k + 1), format!("A48m1+a{k}"), R6);
        push(format!("A48m1+a{k}"), format!("A490+a{k}"), R8);
        push(format!("A490+a{k}"), format!("A48m1+a{k}"), R8);
        push(format!("n33+a{k}"), format!("n212+a{}", k + 1), R2);
        for s in semisimple {
            for t in solvable {
                push(format!("{t}+a{k}"), format!("{s}+a{}", k + 1), R3);
            }
            push(format!("n33+a{k}"), format!("{s}+a{}", k + 3), R2);
            push(format!("n212+a{k}"), format!("{s}+a{}", k + 2), R2);
        }
        for t in solvable {
            push(format!("n33+a{k}"), format!("{t}+a{}", k + 2), R2);
            push(format!("n212+a{k}"), format!("{t}+a{}", k + 1), R2);
        }
    }
    for n in 2..=6 {
        for ty in JordanType::all(n) {
            let g = gt_id(&ty);
            if n <= 4 {
                for s in semisimple {
                    push(g.clone(), format!("{s}+a{}", n - 2), R3);
                }
            }
            if (3..=4).contains(&n) {
                for t in solvable {
                    push(g.clone(), format!("{t}+a{}", n - 3), R1);
                }
            }
            if (5..=6).contains(&n) {
                push(g.clone(), format!("n33+a{}", n - 5), R9);
            }
            if (4..=5).contains(&n) {
                push(g.clone(), format!("n212+a{}", n - 4), R9);
            }
        }
    }
    let mut missing = Vec::new();
    for (s, t, rule) in &cases {
        let vs = obstruct(&get(s), &get(t)).expect("equal dimensions");
        if !vs.iter().any(|v| v.rule == *rule) {
            missing.push(format!("{s} -> {t} ({rule})"));
        }
    }
    // no rule applies here; the pair must simply never verify
    let store = PaddedStore::standard();
    let mut verified = Vec::new();
    for k in 0..=1 {
        let (s, t) = (format!("n212+a{}", k + 1), format!("n33+a{k}"));
        if matches!(decide(&get(&s), &get(&t), &store).unwrap(), Verdict::Verified { .. }) {
            verified.push(format!("{s} -> {t}"));
        }
    }
    outcome(
        missing.is_empty() && verified.is_empty(),
        format!(
            "{} argued pairs blocked by the named rule; padded n212 -> n33 not verified{}{}",
            cases.len() - missing.len(),
            if missing.is_empty() { String::new() } else { format!("; missing: {}", missing.join(", ")) },
            if verified.is_empty() { String::new() } else { format!("; verified: {}", verified.join(", ")) }
        ),
    )
}

fn failing_rows(r: &Theorem24Report, part: Part) -> BTreeSet<String> {
    r.rows.iter().filter(|x| x.part == part && !x.pass).map(|x| format!("{} -> {}", x.source, x.label)).collect()
}

fn known(pass: bool, failures: &BTreeSet<String>, known: &[&str], detail: String) -> Outcome {
    let known: BTreeSet<String> = known.iter().map(|s| s.to_string()).collect();
    let status = if pass {
        Status::Pass
    } else if *failures == known {
        Status::KnownFail
    } else {
        Status::Fail
    };
    let list = failures.iter().cloned().collect::<Vec<_>>().join(", ");
    Outcome { status, detail: if failures.is_empty() { detail } else { format!("{detail}; failing: {list}") } }
}

fn diagram() -> Outcome {
    let t = Instant::now();
    let r = run_theorem24_parts(&[Part::Diagram]);
    let elapsed = t.elapsed();
    let fails = failing_rows(&r, Part::Diagram);
    let verified = r.rows.iter().filter(|x| x.actual == "VERIFIED").count();
    known(
        fails.is_empty() && r.unsound.is_empty() && elapsed < Duration::from_secs(60),
        &fails,
        &["A490+a1 -> n212", "A490+a2 -> n33"],
        format!("{} ordered pairs, {verified} verified, {}", r.rows.len(), secs(elapsed)),
    )
}

fn gt_targets() -> Outcome {
    let t = Instant::now();
    let r = run_theorem24_parts(&[Part::GtTargets]);
    let elapsed = t.elapsed();
    let mut fails = failing_rows(&r, Part::GtTargets);
    for b in r.bullets.iter().filter(|b| !b.pass) {
        fails.insert(format!("{} lists {{{}}} but {{{}}} survive", b.source, b.listed.join(", "), b.enumerated.join(", ")));
    }
    let ok_bullets = r.bullets.iter().filter(|b| b.pass).count();
    known(
        fails.is_empty() && elapsed < Duration::from_secs(30),
        &fails,
        &[
            "A48m1 -> gT<J2+0^1>",
            "A48m1 -> gT<J3>",
            "A490 -> gT<J2+0^1>",
            "A490 -> gT<J3>",
            "A48m1 lists {0^3, H+0^1} but {0^3, H+0^1, J2+0^1, J3} survive",
            "A490 lists {0^3, R+0^1} but {0^3, R+0^1, J2+0^1, J3} survive",
        ],
        format!("{ok_bullets}/{} bullets match with witnesses, {}", r.bullets.len(), secs(elapsed)),
    )
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn cone_slice(families: &mut Vec<ContractionFamily>) -> Outcome {
    let t = Instant::now();
    let mut mismatches = Vec::new();
    let (mut pairs, mut inside, mut sheared_only) = (0, 0, Vec::new());
    for n in 1..=4 {
        let types: Vec<JordanType> = JordanType::all(n).into_iter().filter(JordanType::is_nilpotent).collect();
        for ty in &types {
            for sy in &types {
                pairs += 1;
                let (tm, sm) = (ty.representative(), sy.representative());
                let closure = closure_cone_member_nilpotent(&sm, &tm).expect("nilpotent pair");
                let (g, g0) = (make_gt(&tm).into_algebra(), make_gt(&sm).into_algebra());
                let hit = sheared_permutations(n + 1)
                    .enumerate()
                    .find(|(_, p)| search_diagonal_exponents(&g, &g0, 4, Some(p)).unwrap().is_some());
                if closure {
                    inside += 1;
                }
                if closure != hit.is_some() {
                    mismatches.push(format!("{sy} vs {ty}"));
                }
                if let Some((i, p)) = hit {
                    if i >= factorial(n + 1) {
                        sheared_only.push(format!("gT<{ty}> -> gT<{sy}>"));
                    }
                    families.push(search_diagonal(&g, &g0, 4, Some(&p)).unwrap().expect("exponents found"));
                }
            }
        }
    }
    let elapsed = t.elapsed();
    outcome(
        mismatches.is_empty() && elapsed < Duration::from_secs(120),
        format!(
            "{pairs} pairs, {inside} in the closure, all matched by P diag(r^k) with P a permutation times at most one \
             shear; needing the shear: {}; {}{}",
            if sheared_only.is_empty() { "none".to_string() } else { sheared_only.join(", ") },
            secs(elapsed),
            if mismatches.is_empty() { String::new() } else { format!("; mismatches: {}", mismatches.join(", ")) }
        ),
    )
}

fn filiform_contractions(families: &mut Vec<ContractionFamily>) -> Outcome {
    let mut bad = Vec::new();
    for m in 3..=8 {
        let f = filiform(m);
        match search_diagonal(&f, &pad(&heisenberg(1), m - 3), 4, Some(&filiform_heisenberg_basis(m))).unwrap() {
            Some(fam) => families.push(fam),
            None => bad.push(format!("f{m} -> h3+a{}", m - 3)),
        }
        if m >= 5 {
            let vs = obstruct(&f, &pad(&heisenberg(2), m - 5)).unwrap();
            let r7 = vs.iter().find(|v| v.rule == Rule::R7);
            if r7.map(|v| (v.source_value.as_str(), v.target_value.as_str())) != Some(("2", "4")) {
                bad.push(format!("f{m} -> h5+a{} not blocked by R7 (2 < 4)", m - 5));
            }
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            "f3..f8 contract to h3 + a by diagonal search; f5..f8 to h5 + a blocked by R7".into()
        } else {
            bad.join(", ")
        },
    )
}

/// A random automorphism of `g ⊕ a_k` mixing the two summands: `x -> x +
/// lambda(x)` with `lambda` vanishing on `[g, g]`, and `e_p -> D e_p + z_p`
/// with `D` a scaled permutation and `z_p` central in `g`.
fn mixing_automorphism(g: &LieAlgebra, k: usize, rng: &mut ChaCha8Rng) -> Matrix<Rational> {
    let n = g.dim();
    let big = pad(g, k);
    let ann = derived_algebra(g).annihilator();
    let z = center(g);
    let small = |rng: &mut ChaCha8Rng| Rational::from_integer(rng.gen_range(-2i64..=2).into());
    loop {
        let mut s = Matrix::<Rational>::identity(n + k);
        for p in 0..k {
            for b in ann.basis() {
                let c = small(rng);
                for (j, bj) in b.iter().enumerate() {
                    let v = s.get(n + p, j).clone() + c.clone() * bj;
                    s.set(n + p, j, v);
                }
            }
        }
        let mut perm: Vec<usize> = (0..k).collect();
        for i in (1..k).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        for p in 0..k {
            let scale = loop {
                let c = small(rng);
                if !c.is_zero() {
                    break c;
                }
            };
            s.set(n + p, n + p, Rational::zero());
            s.set(n + perm[p], n + p, scale);
            for b in z.basis() {
                let c = small(rng);
                for (i, bi) in b.iter().enumerate() {
                    let v = s.get(i, n + p).clone() + c.clone() * bi;
                    s.set(i, n + p, v);
                }
            }
        }
        if !s.determinant().is_zero() {
            assert!(big.is_isomorphism(&big, &s), "mixing map is not an automorphism");
            return s;
        }
    }
}

fn stabilization_round_trip() -> Outcome {
    let ws = try_witnesses().expect("witnesses load");
    let pool: Vec<_> = ws.iter().filter(|w| w.family.dim() <= 6).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut bad = Vec::new();
    let mut used = Vec::new();
    for _ in 0..10 {
        let w = pool[rng.gen_range(0..pool.len())];
        let k = rng.gen_range(1..=3);
        let (g, g0) = (w.family.source(), w.family.target());
        let padded = pad_family(&w.family, k).expect("padding keeps invertibility");
        let left = mixing_automorphism(g, k, &mut rng);
        let right = mixing_automorphism(g0, k, &mut rng);
        let c = rational_to_ratfun(&left).mul(padded.matrix()).mul(&rational_to_ratfun(&right));
        let mixed = ContractionFamily::new(pad(g, k), pad(g0, k), c.clone()).unwrap();
        if !verify_contraction(&mixed).is_verified() {
            bad.push(format!("{} (k = {k}) mixed family does not verify", w.id));
            continue;
        }
        match reduce_stabilized(g, g0, k, &c) {
            Ok(f) if verify_contraction(&f).is_verified() => used.push(format!("{}+{k}", w.id)),
            Ok(_) => bad.push(format!("{} (k = {k}) reduced family does not verify", w.id)),
            Err(e) => bad.push(format!("{} (k = {k}): {e}", w.id)),
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() { format!("10/10 reduced and re-verified: {}", used.join(", ")) } else { bad.join("; ") },
    )
}

fn cone_limits(families: &[ContractionFamily]) -> Outcome {
    let ws = try_witnesses().expect("witnesses load");
    let mut bad = Vec::new();
    for id in ["A48m1->A34m1+a1", "A490->A350+a1"] {
        let w = ws.iter().find(|w| w.id == id).expect("stored witness");
        match extract_cone_limit(&w.family) {
            Ok(out) => {
                let (_, s) = find_gt_form(w.family.target()).expect("g_T target");
                if out.limit != s {
                    bad.push(format!("{id}: limit differs from S"));
                }
            }
            Err(e) => bad.push(format!("{id}: {e}")),
        }
    }
    let mut checked = 0;
    for f in families {
        let (s, t) = (fingerprint(f.source()), fingerprint(f.target()));
        if s.center_dim == 1 && t.center_dim == 1 {
            checked += 1;
            if flat_generic_orbits(f.target()) && !flat_generic_orbits(f.source()) {
                bad.push(format!("{} -> {} breaks flat-orbit monotonicity", f.source().name(), f.target().name()));
            }
        }
    }
    outcome(
        bad.is_empty() && checked > 0,
        format!("both limits equal S; flat-orbit monotonicity holds on {checked} verified pairs with 1-dim centers{}",
            if bad.is_empty() { String::new() } else { format!("; {}", bad.join(", ")) }),
    )
}

fn invariant_suite() -> Outcome {
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..20 {
        let n = rng.gen_range(1..=4);
        let t = Matrix::from_fn(n, n, |_, _| Rational::from_integer(rng.gen_range(-2i64..=2).into()));
        if let Err(e) = make_gt(&t).check_laws() {
            bad.push(format!("g_T law: {e}"));
        }
    }
    for e in entries() {
        let f = fingerprint(&e.algebra);
        let got = (f.dim, f.derived_series_dims.first().copied().unwrap_or(0), f.center_dim, f.coadjoint_rank, f.solvable, f.nilpotent_class);
        let x = &e.expected;
        if got != (x.dim, x.derived_dim, x.center_dim, x.coadjoint_rank, x.solvable, x.nilpotent_class) {
            bad.push(format!("{} fingerprint", e.id));
        }
    }
    // soundness over the catalog product: no stored witness for a blocked pair
    let store = PaddedStore(witness_store());
    for f in &store.0 {
        if !obstruct(f.source(), f.target()).unwrap().is_empty() {
            bad.push(format!("{} -> {} stored but blocked", f.source().name(), f.target().name()));
        }
    }
    let all = ids();
    let mut verified_pairs = 0;
    for a in &all {
        for b in &all {
            let (g, g0) = (get(a), get(b));
            let n = g.dim().max(g0.dim());
            let (g, g0) = (pad(&g, n - g.dim()), pad(&g0, n - g0.dim()));
            if let Some(f) = store.find(&g, &g0) {
                if verify_contraction(&f).is_verified() {
                    verified_pairs += 1;
                    if !obstruct(&g, &g0).unwrap().is_empty() {
                        bad.push(format!("{a} -> {b} both verified and blocked"));
                    }
                }
            }
        }
    }
    let first = run_theorem24();
    let second = run_theorem24();
    if first.to_json() != second.to_json() {
        bad.push("theorem24 JSON differs between runs".into());
    }
    if !first.unsound.is_empty() {
        bad.push(format!("unsound rows: {}", first.unsound.join(", ")));
    }
    outcome(
        bad.is_empty(),
        format!(
            "20 random g_T laws, {} catalog fingerprints, {} stored families and {verified_pairs} verified catalog pairs \
             unobstructed, theorem24 JSON stable{}",
            entries().len(),
            store.0.len(),
            if bad.is_empty() { String::new() } else { format!("; {}", bad.join("; ")) }
        ),
    )
}

fn main() {
    let mut families: Vec<ContractionFamily> = witness_store();
    families.extend(try_witnesses().expect("witnesses load").into_iter().map(|w| w.family));
    let mut results: Vec<(u8, &str, Outcome)> = Vec::new();
    results.push((1, "witness reproduction", witness_reproduction()));
    results.push((2, "obstruction reproduction", obstruction_reproduction()));
    results.push((3, "contraction diagram", diagram()));
    results.push((4, "g_T targets per source", gt_targets()));
    results.push((5, "nilpotent cone slice", cone_slice(&mut families)));
    results.push((6, "filiform to Heisenberg", filiform_contractions(&mut families)));
    results.push((7, "stabilization round trip", stabilization_round_trip()));
    results.push((8, "cone limits and flat orbits", cone_limits(&families)));
    results.push((9, "invariant suite", invariant_suite()));

    let mut unexpected = 0;
    for (n, name, o) in &results {
        let tag = match o.status {
            Status::Pass => "PASS",
            Status::KnownFail => "FAIL (known)",
            Status::Fail => {
                unexpected += 1;
                "FAIL"
            }
        };
        println!("criterion {n} [{tag}] {name}: {}", o.detail);
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed beyond the known discrepancies");
        std::process::exit(1);
    }
}
