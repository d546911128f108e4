//! One PASS/FAIL line per acceptance criterion, at fixed seeds and limits.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use kf_core::arith::{
    is_root_of_unity, rat, ratio, root_of_unity_order_bound, FieldDescriptor, FieldElement,
    MultiPoly, Rational,
};
use kf_core::decision::{
    any_valuation, decide_point, membership, unibranch_kf, value_semigroup, Outcome, Verdict,
    Witness,
};
use kf_core::forms::{genus_of, space_power, BinaryForm, FormSpace, ProjPoint};
use kf_core::geometry::{center_of, classify_profile, singular_points};
use kf_core::strata::{
    locus_polynomial, stratum_decide, stratum_kf_condition, stratum_power_basis, stratum_space,
    StratumId, StratumParams,
};
use kf_core::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pt(a: i64, b: i64) -> ProjPoint {
    ProjPoint::from_ints(&qq(), a, b).unwrap()
}

fn within(t: Duration, limit: Duration) -> Result<(), String> {
    ensure(t < limit, || format!("took {:.2?}, limit {:.0?}", t, limit))
}

fn quintic_semigroups() -> Check {
    let start = Instant::now();
    let l = quintic(&qq());
    let rep = value_semigroup(&l, &pt(1, 1), 3).map_err(|e| e.to_string())?;
    let want = vec![(5, 0), (5, 1), (5, 2), (5, 5)];
    ensure(rep.generators == want, || {
        format!("at (1:1): {:?}", rep.generators)
    })?;
    ensure(!rep.truncated, || "(1:1) report is truncated".into())?;
    let rep = value_semigroup(&l, &pt(0, 1), 4).map_err(|e| e.to_string())?;
    let mut want = vec![(5, 0), (5, 1)];
    for k in 1..=4 {
        want.push((5 * k, 5 * k - 3));
        want.push((5 * k, 5 * k - 2));
    }
    want.sort();
    ensure(rep.generators == want, || {
        format!("at (0:1): {:?}", rep.generators)
    })?;
    ensure(rep.truncated, || "(0:1) report is not truncated".into())?;
    let t = start.elapsed();
    within(t, Duration::from_secs(1))?;
    Ok(format!("{:.2?}", t))
}

fn power_bases() -> Check {
    let start = Instant::now();
    let mut r = rng(2);
    let mut cases = 0;
    for id in StratumId::ALL {
        for n in [3, 4, 5] {
            for _ in 0..5 {
                let p = random_params(&mut r, id, n);
                let l = stratum_space(id, &p).map_err(|e| e.to_string())?;
                for k in 1..=4 {
                    let closed = stratum_power_basis(id, &p, k).map_err(|e| e.to_string())?;
                    let brute = space_power(&l, k).map_err(|e| e.to_string())?;
                    ensure(closed == brute, || format!("{id} n = {n} k = {k} {p:?}"))?;
                    cases += 1;
                }
            }
        }
    }
    let t = start.elapsed();
    within(t, Duration::from_secs(60))?;
    Ok(format!("{cases} cases, {:.2?}", t))
}

fn conditions_vs_membership() -> Check {
    let mut r = rng(3);
    let mut cases = 0;
    let mut positives = 0;
    for id in StratumId::ALL {
        for n in [3, 4, 5] {
            let mut grid: Vec<(StratumParams, Vec<ProjPoint>)> = Vec::new();
            for _ in 0..5 {
                let p = random_params(&mut r, id, n);
                let pts = candidates(id, &p);
                grid.push((p, pts));
            }
            // constructed members make the positive side non-vacuous
            let (p, q) = constructed(&mut r, id, n);
            let mut pts = candidates(id, &p);
            pts.push(q);
            grid.push((p, pts));
            for (p, mut pts) in grid {
                pts.extend(random_points(&mut r, &qq(), 5));
                let l = stratum_space(id, &p).map_err(|e| e.to_string())?;
                for q in &pts {
                    for k in 1..=3 {
                        let closed = stratum_kf_condition(id, &p, q, k);
                        let direct = membership(&l, q, k).map_err(|e| e.to_string())?;
                        ensure(closed == direct, || {
                            format!("{id} n = {n} k = {k} at {q}: condition {closed}, membership {direct}")
                        })?;
                        cases += 1;
                        positives += direct as usize;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} cases, {positives} members"))
}

fn documented_bounds() -> Check {
    let f = qq();
    let p = StratumParams::from_ints(&f, StratumId::CuspWithSmoothBranch, 3, 5, 0, 0).unwrap();
    let v = stratum_decide(
        StratumId::CuspWithSmoothBranch,
        &p,
        Some(&pt(0, 1)),
        None,
        None,
    )
    .map_err(|e| e.to_string())?;
    ensure(v.outcome == Outcome::NotKf && v.bound_used == 3, || {
        format!("cusp with smooth branch: {v:?}")
    })?;
    let p = StratumParams::from_ints(&f, StratumId::Tacnode, 3, 1, 1, 0).unwrap();
    let v = stratum_decide(StratumId::Tacnode, &p, None, None, None).map_err(|e| e.to_string())?;
    ensure(v.outcome == Outcome::NotKf && v.bound_used == 6, || {
        format!("tacnode: {v:?}")
    })?;
    Ok("NotKF at 3 and 6".into())
}

fn closed_form_locus() -> MultiPoly {
    let r = MultiPoly::ring(&["a", "b", "u", "v"]);
    let var = |s| MultiPoly::var(&r, s);
    let c = |q: Rational| MultiPoly::constant(&r, q);
    let (a, b, u, v) = (var("a"), var("b"), var("u"), var("v"));
    let one = c(rat(1));
    let lin = u.sub(&v).mul(&a).add(&u.mul(&b)).add(&u).sub(&one);
    let inner = u
        .mul(&b)
        .add(&u.add(&v.scale(&ratio(3, 2))).mul(&a))
        .add(&u.add(&c(ratio(3, 2))));
    let i_uv = inner.pow(2).sub(
        &one.add(&v.mul(&a).scale(&rat(6)))
            .add(&v.pow(2).mul(&a.pow(2)))
            .scale(&ratio(5, 4)),
    );
    lin.pow(5).sub(
        &u.mul(&v)
            .mul(&a)
            .mul(&a.add(&b).add(&one))
            .mul(&i_uv)
            .scale(&rat(625)),
    )
}

fn locus_identity() -> Check {
    let h = locus_polynomial(StratumId::OrdinaryTriplePoint, 3).map_err(|e| e.to_string())?;
    let closed = closed_form_locus();
    let (_, lh) = h.leading().ok_or("locus polynomial is zero")?;
    let (_, lc) = closed.leading().ok_or("closed form is zero")?;
    let scalar = lc / lh;
    ensure(h.scale(&scalar) == closed, || {
        "locus and closed form differ beyond a scalar".into()
    })?;
    let w = [rat(1), rat(30), rat(1), rat(1)];
    ensure(h.eval(&w).is_zero(), || {
        "no vanishing at (1, 30, 1, 1)".into()
    })?;
    Ok(format!("scalar {scalar}, {} terms", h.num_terms()))
}

fn classification() -> Check {
    let start = Instant::now();
    let mut r = rng(6);
    let mut cases = 0;
    for id in StratumId::ALL {
        for n in [3, 4, 5] {
            for _ in 0..5 {
                let p = random_params(&mut r, id, n);
                let l = stratum_space(id, &p).map_err(|e| e.to_string())?;
                let g = genus_of(&l).map_err(|e| e.to_string())?;
                ensure(g == 2, || format!("{id} n = {n}: genus {g}"))?;
                let u = center_of(&l).map_err(|e| e.to_string())?;
                let mut want: Vec<&str> = Vec::new();
                for (kind, pre) in id.singularities(&p) {
                    let got =
                        classify_profile(&u, &pre).map_err(|e| format!("{id} n = {n}: {e}"))?;
                    ensure(got == kind, || {
                        format!(
                            "{id} n = {n} {p:?}: {} classified as {}",
                            kind.name(),
                            got.name()
                        )
                    })?;
                    want.push(kind.name());
                }
                let rep = singular_points(&l).map_err(|e| e.to_string())?;
                ensure(rep.total_delta == Some(2), || {
                    format!("{id} n = {n} {p:?}: delta {:?}", rep.total_delta)
                })?;
                let mut found: Vec<&str> = rep
                    .points
                    .iter()
                    .filter_map(|s| s.kind.map(|t| t.name()))
                    .collect();
                want.sort();
                found.sort();
                ensure(found == want, || {
                    format!("{id} n = {n} {p:?}: found {found:?}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases, {:.2?}", start.elapsed()))
}

fn roots_of_unity() -> Check {
    for m in 1..=20usize {
        let z = primitive_root(m);
        let ell = z.field().degree() as u64;
        let got = is_root_of_unity(&z).map_err(|e| e.to_string())?;
        ensure(got == Some(m as u64), || format!("order {m}: got {got:?}"))?;
        ensure(m as u64 <= root_of_unity_order_bound(ell), || {
            format!("order {m} above the bound")
        })?;
    }
    let f = qq();
    for x in [int(&f, 2), elt(&f, ratio(3, 2))] {
        ensure(is_root_of_unity(&x).unwrap().is_none(), || {
            format!("{x} reported as a root of unity")
        })?;
    }
    let c5 = cyclotomic_field(5);
    let x = &FieldElement::one(&c5) + &FieldElement::generator(&c5);
    ensure(is_root_of_unity(&x).unwrap().is_none(), || {
        "1 + θ reported as a root of unity".into()
    })?;
    Ok("orders 1..20, three negatives".into())
}

fn unibranch() -> Check {
    let mut r = rng(8);
    let mut draws = 0;
    for id in [StratumId::Cusp345, StratumId::Cusp25] {
        for i in 0..21 {
            let n = 3 + i % 3;
            let p = random_params(&mut r, id, n);
            let l = stratum_space(id, &p).map_err(|e| e.to_string())?;
            let q = ProjPoint::infinity(&qq());
            let fast = unibranch_kf(&l, &q).map_err(|e| format!("{id} n = {n}: {e}"))?;
            let direct = membership(&l, &q, 1).map_err(|e| e.to_string())?;
            ensure(fast && direct, || {
                format!("{id} n = {n} {p:?}: unibranch {fast}, membership {direct}")
            })?;
            draws += 1;
        }
    }
    let l = septic(&qq());
    let q = ProjPoint::infinity(&qq());
    ensure(
        matches!(unibranch_kf(&l, &q), Err(Error::Precondition(_))),
        || "septic precondition not raised".into(),
    )?;
    for k in 1..=10 {
        ensure(!membership(&l, &q, k).unwrap(), || {
            format!("septic member at k = {k}")
        })?;
    }
    Ok(format!("{draws} draws, septic rejected through k = 10"))
}

/// `L` over `Q(t₀)` with `t₀` a root of the monic rational `poly`, and the
/// point `(t₀:1)`.
fn extend_to_root(l: &FormSpace, poly: &kf_core::arith::UniPoly) -> (FormSpace, ProjPoint) {
    let m = poly.monic();
    let coeffs: Vec<Rational> = m
        .coeffs()
        .iter()
        .map(|c| c.as_rational().unwrap())
        .collect();
    let den = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let deg = coeffs.len() - 1;
    // s = den·t₀ has an integral monic minimal polynomial
    let minpoly: Vec<BigInt> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            (c * Rational::from_integer(num_traits::pow(den.clone(), deg - i))).to_integer()
        })
        .collect();
    let k = FieldDescriptor::new(minpoly).unwrap();
    let lift = |x: &FieldElement| FieldElement::from_rational(&k, x.as_rational().unwrap());
    let forms: Vec<BinaryForm> = l
        .rows()
        .iter()
        .map(|r| BinaryForm::new(&k, r.iter().map(lift).collect()).unwrap())
        .collect();
    let lk = FormSpace::from_basis(&k, l.degree(), &forms).unwrap();
    let t0 = &FieldElement::generator(&k)
        / &FieldElement::from_rational(&k, Rational::from_integer(den));
    (lk, ProjPoint::affine(t0))
}

fn replay(l: &FormSpace, v: &Verdict, label: &str, replays: &mut usize) -> Result<(), String> {
    ensure(
        v.trace
            .iter()
            .any(|&(k, ok)| ok && Some(k) == v.witness_k()),
        || format!("{label}: trace lacks the witness"),
    )?;
    for w in &v.witnesses {
        let (space, q, k) = match w {
            Witness::Point { point, k } => (l.clone(), point.clone(), *k as usize),
            Witness::Algebraic { poly, k } => {
                let (lk, q) = extend_to_root(l, poly);
                (lk, q, *k as usize)
            }
        };
        for m in 1..=3 {
            let ok = membership(&space, &q, m * k).map_err(|e| e.to_string())?;
            ensure(ok, || {
                format!("{label}: {} fails at level {}", w.describe(), m * k)
            })?;
        }
        *replays += 1;
    }
    Ok(())
}

fn witness_replay() -> Check {
    let mut r = rng(9);
    let mut replays = 0;
    let mut verdicts = 0;
    let l = quintic(&qq());
    for v in [
        decide_point(&l, &pt(1, 1), 1, Some(3)).unwrap(),
        any_valuation(&l, 1, Some(3)).unwrap(),
    ] {
        replay(&l, &v, "quintic", &mut replays)?;
        verdicts += 1;
    }
    let f = qq();
    let mut corpus: Vec<(StratumId, StratumParams, Option<ProjPoint>)> = Vec::new();
    // α = i: the tacnode witness lies outside the rationals
    corpus.push((
        StratumId::Tacnode,
        StratumParams::from_ints(&f, StratumId::Tacnode, 3, -1, 0, 0).unwrap(),
        None,
    ));
    for id in StratumId::ALL {
        for n in [3, 4, 5] {
            for _ in 0..2 {
                let (p, q) = constructed(&mut r, id, n);
                corpus.push((id, p.clone(), Some(q)));
                corpus.push((id, p, None));
            }
        }
    }
    for (id, p, q) in corpus {
        let l = stratum_space(id, &p).map_err(|e| e.to_string())?;
        let v = stratum_decide(id, &p, q.as_ref(), None, Some(4)).map_err(|e| e.to_string())?;
        if !v.is_kf() {
            return Err(format!(
                "{id} {p:?}: constructed witness not found ({:?})",
                v.outcome
            ));
        }
        replay(&l, &v, &format!("{id} n = {}", p.n), &mut replays)?;
        verdicts += 1;
    }
    Ok(format!(
        "{verdicts} verdicts, {replays} witnesses at k, 2k, 3k"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("quintic value semigroups", quintic_semigroups),
        ("closed-form power bases equal brute force", power_bases),
        (
            "closed-form KF conditions equal membership",
            conditions_vs_membership,
        ),
        ("stratum bounds honored", documented_bounds),
        ("triple-point locus polynomial", locus_identity),
        ("singularity classification", classification),
        ("root-of-unity orders", roots_of_unity),
        ("unibranch fast path and septic control", unibranch),
        ("witness replay and monotonicity", witness_replay),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("[{}] PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[{}] FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
