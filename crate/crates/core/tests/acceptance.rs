//! Acceptance suite: nine exact checks, one PASS/FAIL line each.
//! Runs with a plain `main` so the report is always printed.

mod common;

use std::time::{Duration, Instant};

use borel_lie::borel::{
    classify_tuple, cross_check, generator_value, symbolic_generators, tuple_variable_names,
    CrossCheckStatus, Evidence, MultiPoly, Verdict,
};
use borel_lie::bracket::{count_exprs, enumerate_exprs, find_non_nilpotent_witness, value_closure, CountMode};
use borel_lie::lie::{apply, catalog, Element, LieAlgebra};
use borel_lie::linalg::{Matrix, Rational};
use borel_lie::sample;
use borel_lie::semisimple::{
    characteristic_grading, extremal_bracket_span, is_reductive_in, jacobson_morozov,
    parabolic_nilpotency_pair, refute_with, RefuteOptions,
};
use common::*;
use num_bigint::BigUint;
use num_traits::{One, Zero};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fail<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn bracket_count() -> Outcome {
    let start = Instant::now();
    let nine = count_exprs(2, 9, CountMode::Exact);
    let elapsed = start.elapsed();
    let bound = BigUint::one() << 256usize;
    ensure!(nine > bound, "depth-9 count {nine} is not above 2^256");
    ensure!(elapsed < Duration::from_secs(1), "count took {elapsed:?}");
    let a1 = enumerate_exprs(2, 1).map_err(fail)?.count();
    let a2 = enumerate_exprs(2, 2).map_err(fail)?.count();
    ensure!(a1 == 2 && a2 == 6, "enumerated A1 = {a1}, A2 = {a2}");
    ensure!(
        count_exprs(2, 1, CountMode::Cumulative) == BigUint::from(2u8)
            && count_exprs(2, 2, CountMode::Cumulative) == BigUint::from(6u8),
        "recurrence disagrees with enumeration"
    );
    Ok(format!(
        "depth 9 count has {} digits ({} bits) in {elapsed:?}; A1 = 2, A2 = 6 by enumeration",
        nine.to_string().len(),
        nine.bits()
    ))
}

fn nilpotent_algebras_have_no_witness() -> Outcome {
    let start = Instant::now();
    let algebras = [
        catalog::heisenberg(3),
        catalog::heisenberg(5),
        catalog::strictly_upper(3),
        catalog::strictly_upper(4),
        catalog::abelian(4),
    ];
    let mut checked = 0;
    for (a, l) in algebras.into_iter().enumerate() {
        let l = l.map_err(fail)?;
        let class = l.nilpotency_class().ok_or("catalog algebra not nilpotent")?;
        for seed in 0..20 {
            let mut r = rng(1000 * a as u64 + seed);
            let p = sample::invertible(&mut r, l.dim(), 3);
            let m = l.change_of_basis(&p).map_err(fail)?;
            ensure!(m.nilpotency_class() == Some(class), "{} seed {seed}: class changed", l.name());
            let basis: Vec<Element> = (0..m.dim()).map(|i| m.basis_element(i)).collect();
            let depth = m.dim() + 1;
            let w = find_non_nilpotent_witness(&m, &basis, depth).map_err(fail)?;
            ensure!(w.is_none(), "{} seed {seed}: witness {:?}", l.name(), w.map(|w| w.expr.to_string()));
            let c = value_closure(&m, &basis, depth).map_err(fail)?;
            for d in class + 1..=depth {
                ensure!(c.layer(d).is_empty(), "{} seed {seed}: layer {d} not empty", l.name());
            }
            // the algebra in the original coordinates, with the same basis
            let rows: Vec<Element> = p.row_vecs().into_iter().map(Element::new).collect();
            ensure!(
                find_non_nilpotent_witness(&l, &rows, depth).map_err(fail)?.is_none(),
                "{} seed {seed}: witness for the row basis",
                l.name()
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!("{checked} random bases, no witness up to depth dim+1, layers past the class empty, {elapsed:.1?}"))
}

fn semisimple_bases_are_refuted() -> Outcome {
    let mut max_depth = 0;
    let mut descents = 0;
    let mut count = 0;
    for name in [2usize, 3] {
        let l = catalog::sl(name).map_err(fail)?;
        let n = l.dim();
        let positives = name * (name - 1) / 2;
        let upper = coordinate_span(&l, 0..positives);
        let lower = coordinate_span(&l, n - upper.dim()..n);
        for seed in 0..100 {
            let mut r = rng(7000 + seed);
            let generic = sample::basis(&mut r, &l, 3);
            let nilpotent = sample::nilpotent_basis(&mut r, &l, &upper, &[&upper, &lower], 2);
            for (kind, basis) in [("generic", &generic), ("nilpotent", &nilpotent)] {
                let direct_depths: &[usize] = if kind == "nilpotent" { &[2, 0] } else { &[2] };
                for &dd in direct_depths {
                    let rep = refute_with(&l, basis, RefuteOptions { direct_search_depth: dd }).map_err(fail)?;
                    let x = rep.outcome.reported_element();
                    ensure!(
                        !naive_ad_nilpotent(&l, x),
                        "sl({name}) seed {seed} {kind}: reported element is nilpotent"
                    );
                    descents += rep.trace.len();
                    ensure!(
                        rep.trace.iter().all(|t| t.checks_passed && t.k_reductive),
                        "sl({name}) seed {seed} {kind}: descent check failed"
                    );
                }
                let w = find_non_nilpotent_witness(&l, basis, 6)
                    .map_err(fail)?
                    .ok_or_else(|| format!("sl({name}) seed {seed} {kind}: no witness within depth 6"))?;
                ensure!(!naive_ad_nilpotent(&l, &w.value), "witness value is nilpotent");
                max_depth = max_depth.max(w.depth);
                count += 1;
            }
        }
    }
    Ok(format!(
        "{count} bases of sl2/sl3 (half all-nilpotent) refuted; {descents} descent levels; deepest witness needed: {max_depth}"
    ))
}

fn sl3_pairs() -> (LieAlgebra, Vec<(&'static str, Vec<Element>)>) {
    let l = catalog::sl(3).unwrap();
    let (n, b, _) = sl3_parts(&l);
    let mut pairs = Vec::new();
    for seed in 0..50 {
        let mut r = rng(300 + seed);
        pairs.push(("borel", vec![sample::element_of(&mut r, &b, 3), sample::element_of(&mut r, &b, 3)]));
        pairs.push(("nilradical", vec![sample::element_of(&mut r, &n, 3), sample::element_of(&mut r, &n, 3)]));
        pairs.push(("generic", vec![sample::element(&mut r, 8, 3), sample::element(&mut r, 8, 3)]));
    }
    (l, pairs)
}

fn borel_containments() -> Outcome {
    let (l, pairs) = sl3_pairs();
    let mut tally = [0usize; 3];
    for (i, (kind, pair)) in pairs.iter().enumerate() {
        let r = classify_tuple(&l, pair, 4).map_err(fail)?;
        match *kind {
            "borel" => ensure!(r.verdict != Verdict::Neither, "borel pair {i} classified as neither"),
            "nilradical" => ensure!(
                r.verdict == Verdict::CommonNilradical,
                "nilradical pair {i} classified as {:?}",
                r.verdict
            ),
            _ => {
                ensure!(r.verdict == Verdict::Neither, "generic pair {i} classified as {:?}", r.verdict);
                match &r.evidence {
                    Evidence::Neither { derived_series_dims, .. } => ensure!(
                        derived_series_dims.last().is_some_and(|d| *d > 0),
                        "generic pair {i}: derived series reaches zero"
                    ),
                    other => return Err(format!("generic pair {i}: evidence {other:?}")),
                }
            }
        }
        tally[r.verdict as usize] += 1;
        let c = cross_check(&l, pair, 4).map_err(fail)?;
        ensure!(
            c.status == CrossCheckStatus::Consistent,
            "{kind} pair {i}: cross-check {:?}",
            c.status
        );
    }
    Ok(format!(
        "150 pairs: {} common nilradical, {} common borel only, {} neither; cross-check at depth 4 consistent for all",
        tally[0], tally[1], tally[2]
    ))
}

fn adjoint_invariance() -> Outcome {
    let (l, pairs) = sl3_pairs();
    let (n, _, lower) = sl3_parts(&l);
    let mut checked = 0;
    for (i, (_, pair)) in pairs.iter().take(20).enumerate() {
        let verdict = classify_tuple(&l, pair, 2).map_err(fail)?.verdict;
        for t in 0..10 {
            let mut r = rng(9000 + 10 * i as u64 + t);
            let part = if t % 2 == 0 { &n } else { &lower };
            let x = sample::nilpotent_element_of(&mut r, &l, part, 2);
            let a = l.exp_ad_nilpotent(&x).map_err(fail)?;
            let a_inv = a.inverse().map_err(fail)?;
            let moved: Vec<Element> = pair.iter().map(|y| apply(&a, y)).collect();
            let v = classify_tuple(&l, &moved, 2).map_err(fail)?.verdict;
            ensure!(v == verdict, "pair {i}, automorphism {t}: {verdict:?} became {v:?}");
            for u in pair.iter().chain([&x, &sample::element(&mut r, 8, 3)]) {
                let lhs = &(&a * &l.ad_matrix(u).map_err(fail)?) * &a_inv;
                let rhs = l.ad_matrix(&apply(&a, u)).map_err(fail)?;
                ensure!(lhs == rhs, "pair {i}, automorphism {t}: conjugation identity fails");
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (pair, automorphism) combinations: verdicts unchanged, A ad(u) A^-1 = ad(Au) exact"))
}

fn sl2_triples() -> Outcome {
    let sl2 = catalog::sl(2).map_err(fail)?;
    let sl3 = catalog::sl(3).map_err(fail)?;
    let cases = [
        ("sl2 e", &sl2, sl2.basis_element(0), Some(2)),
        ("sl3 regular", &sl3, Element::from_ints(&[1, 0, 1, 0, 0, 0, 0, 0]), Some(4)),
        ("sl3 minimal", &sl3, Element::from_ints(&[0, 1, 0, 0, 0, 0, 0, 0]), None),
    ];
    let mut notes = Vec::new();
    for (name, l, y, expected) in cases {
        let t = jacobson_morozov(l, &y).map_err(fail)?;
        let br = |a: &Element, b: &Element| l.bracket(a, b).unwrap();
        ensure!(br(&t.h, &t.y) == t.y.scale(&q(2)), "{name}: [h,y] != 2y");
        ensure!(br(&t.h, &t.f) == t.f.scale(&q(-2)), "{name}: [h,f] != -2f");
        ensure!(br(&t.y, &t.f) == t.h, "{name}: [y,f] != h");
        ensure!(t.y == y, "{name}: triple does not pass through y");
        let g = characteristic_grading(l, &t.h).map_err(fail)?;
        let total: usize = g.layer_dims().iter().map(|(_, d)| d).sum();
        ensure!(total == l.dim(), "{name}: layer dims sum to {total}");
        let top = g.highest_weight().map_err(fail)?;
        if let Some(e) = expected {
            ensure!(top == e, "{name}: highest weight {top}, expected {e}");
        }
        notes.push(format!("{name} weight {top}"));
    }
    Ok(notes.join(", "))
}

fn parabolic_and_reductive() -> Outcome {
    let sl3 = catalog::sl(3).map_err(fail)?;
    let t = jacobson_morozov(&sl3, &Element::from_ints(&[1, 0, 1, 0, 0, 0, 0, 0])).map_err(fail)?;
    let g = characteristic_grading(&sl3, &t.h).map_err(fail)?;
    let weights: Vec<i64> = g.weights().into_iter().filter(|w| *w >= 0).collect();
    let mut nilpotent = 0;
    for seed in 0..100 {
        let mut r = rng(500 + seed);
        let mut x = Element::zero(8);
        for w in &weights {
            // every other sample has no weight-zero part
            if *w == 0 && seed % 2 == 1 {
                continue;
            }
            x = &x + &sample::element_of(&mut r, g.layer(*w).unwrap(), 3);
        }
        let (a, b) = parabolic_nilpotency_pair(&sl3, &g, &x).map_err(fail)?;
        ensure!(a == b, "seed {seed}: x nilpotent {a} but pr_0 x nilpotent {b}");
        ensure!(a == naive_ad_nilpotent(&sl3, &x), "seed {seed}: nilpotency disagrees with oracle");
        nilpotent += usize::from(a);
    }

    let sl2 = catalog::sl(2).map_err(fail)?;
    let g2 = characteristic_grading(&sl2, &sl2.basis_element(1)).map_err(fail)?;
    let k2 = extremal_bracket_span(&sl2, &g2).map_err(fail)?;
    ensure!(is_reductive_in(&sl2, &k2).map_err(fail)?, "sl2: span not reductive");
    ensure!(k2.dim() == 1 && k2.contains(&sl2.basis_element(1)), "sl2: span is not <h>");
    let k3 = extremal_bracket_span(&sl3, &g).map_err(fail)?;
    ensure!(is_reductive_in(&sl3, &k3).map_err(fail)?, "sl3 regular: span not reductive");
    let tm = jacobson_morozov(&sl3, &Element::from_ints(&[0, 1, 0, 0, 0, 0, 0, 0])).map_err(fail)?;
    let gm = characteristic_grading(&sl3, &tm.h).map_err(fail)?;
    let km = extremal_bracket_span(&sl3, &gm).map_err(fail)?;
    ensure!(is_reductive_in(&sl3, &km).map_err(fail)?, "sl3 minimal: span not reductive");
    Ok(format!(
        "100 parabolic elements ({nilpotent} nilpotent), pairs agree; extremal spans reductive (sl2 <h>, sl3 dims {} and {})",
        k3.dim(),
        km.dim()
    ))
}

/// `det(tI - ad_x)` for generic `x = a e + b h + c f`, written out by hand
/// and expanded with the rule of Sarrus. Variables: a, b, c, t = 0, 1, 2, 3.
fn hand_char_poly_sl2() -> MultiPoly {
    let v = MultiPoly::var;
    let k = |n: i64| MultiPoly::constant(q(n));
    let (a, b, c, t) = (v(0), v(1), v(2), v(3));
    // ad_x columns: [x,e] = 2b e - c h, [x,h] = -2a e + 2c f, [x,f] = a h - 2b f
    let ad = [
        [&k(2) * &b, &k(-2) * &a, k(0)],
        [-&c, k(0), a.clone()],
        [k(0), &k(2) * &c, &k(-2) * &b],
    ];
    let m: Vec<Vec<MultiPoly>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| if i == j { &t - &ad[i][j] } else { -&ad[i][j] })
                .collect()
        })
        .collect();
    let p = |i: usize, j: usize, k: usize| &(&m[0][i] * &m[1][j]) * &m[2][k];
    let plus = &(&p(0, 1, 2) + &p(1, 2, 0)) + &p(2, 0, 1);
    let minus = &(&p(2, 1, 0) + &p(0, 2, 1)) + &p(1, 0, 2);
    &plus - &minus
}

fn symbolic_invariants() -> Outcome {
    let l = catalog::sl(2).map_err(fail)?;
    let gens = symbolic_generators(&l, 1, 1, 1).map_err(fail)?;
    ensure!(!gens.is_empty(), "no generators");
    for seed in 0..20 {
        let mut r = rng(40 + seed);
        let x = sample::element(&mut r, 3, 5);
        let tuple = [x.clone()];
        for i in 0..3 {
            let num = generator_value(&l, &borel_lie::bracket::BracketExpr::leaf(1), &tuple, i).map_err(fail)?;
            let sym = gens
                .iter()
                .find(|g| g.coeff_index == i)
                .map_or_else(Rational::zero, |g| g.poly.eval(&x.coords));
            ensure!(num == sym, "seed {seed}, coefficient {i}: numeric {num} vs symbolic {sym}");
        }
    }
    let t1 = gens
        .iter()
        .find(|g| g.coeff_index == 1)
        .ok_or("no t^1 coefficient")?;
    // -4 (x_h^2 + x_e x_f)
    let mut expected = MultiPoly::zero();
    expected.add_term(vec![0, 2], q(-4));
    expected.add_term(vec![1, 0, 1], q(-4));
    ensure!(t1.poly == expected, "t^1 coefficient is {}", t1.poly);
    let hand = hand_char_poly_sl2();
    let mut hand_t1 = MultiPoly::zero();
    for (exp, c) in hand.terms() {
        if exp.get(3).copied().unwrap_or(0) == 1 {
            hand_t1.add_term(exp[..3.min(exp.len())].to_vec(), c.clone());
        }
    }
    ensure!(hand_t1 == t1.poly, "hand expansion gives {hand_t1}");
    let vars = tuple_variable_names(&l, 1);
    Ok(format!("20 points agree exactly; t^1 coefficient {}", t1.poly.to_text(&vars)))
}

fn linear_algebra() -> Outcome {
    for seed in 0..50 {
        let mut r = rng(60 + seed);
        // low-rank and repeated-eigenvalue cases mixed in
        let a = match seed % 3 {
            0 => sample::matrix(&mut r, 5, 5, 4),
            1 => {
                let b = sample::matrix(&mut r, 5, 2, 3);
                let c = sample::matrix(&mut r, 2, 5, 3);
                &b * &c
            }
            _ => {
                let p = sample::invertible(&mut r, 5, 3);
                let d = Matrix::diagonal(&[q(1), q(1), q(2), q(2), q(0)]);
                &(&p * &d) * &p.inverse().map_err(fail)?
            }
        };
        let chi = a.char_poly().map_err(fail)?;
        ensure!(chi.eval_matrix(&a).map_err(fail)?.is_zero(), "seed {seed}: chi(A) != 0");
        let rows = to_rows(&a);
        for t in -2..=3 {
            let t = q(t);
            ensure!(chi.eval(&t) == char_poly_at(&rows, &t), "seed {seed}: chi disagrees with cofactor det");
        }
        let mu = a.min_poly().map_err(fail)?;
        ensure!(mu.eval_matrix(&a).map_err(fail)?.is_zero(), "seed {seed}: mu(A) != 0");
        let (_, rem) = chi.div_rem(&mu).map_err(fail)?;
        ensure!(rem.is_zero(), "seed {seed}: min poly does not divide char poly");
        let ker = a.kernel();
        ensure!(a.rank() + ker.len() == 5, "seed {seed}: rank-nullity fails");
        for v in &ker {
            ensure!(a.mul_vec(v).iter().all(Zero::is_zero), "seed {seed}: kernel vector not annihilated");
        }
        let kr = Matrix::from_rows(5, &ker).map_err(fail)?;
        ensure!(ker.is_empty() || kr.rank() == ker.len(), "seed {seed}: kernel basis dependent");
    }
    Ok("50 random 5x5 matrices: Cayley-Hamilton, min | char, rank + nullity = 5".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("bracket count", bracket_count),
        ("nilpotent algebras have no witness", nilpotent_algebras_have_no_witness),
        ("semisimple bases are refuted", semisimple_bases_are_refuted),
        ("borel and nilradical containments", borel_containments),
        ("adjoint-group invariance", adjoint_invariance),
        ("sl2-triples and gradings", sl2_triples),
        ("parabolic nilpotency and reductive spans", parabolic_and_reductive),
        ("symbolic and numeric invariants agree", symbolic_invariants),
        ("linear algebra substrate", linear_algebra),
    ];
    let results: Vec<(Outcome, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let r = std::panic::catch_unwind(f).unwrap_or_else(|p| {
                        Err(p
                            .downcast_ref::<String>()
                            .cloned()
                            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                            .unwrap_or_else(|| "panicked".into()))
                    });
                    (r, start.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut failed = 0;
    for (i, ((name, _), (r, t))) in criteria.iter().zip(results).enumerate() {
        match r {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} [{t:.1?}]", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {e} [{t:.1?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
