//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so that the report is always printed.

mod common;

use std::collections::BTreeSet;
use std::error::Error as StdError;
use std::process::Command;
use std::time::Instant;

use common::*;
use monideal::classes::{
    depth_universal_lex, is_borel_fixed, is_borel_type, is_lexsegment,
    is_squarefree_strongly_stable, is_stably_lexsegment, is_strongly_stable,
    is_universal_lexsegment, is_universal_lexsegment_by_exchange, max_support_exchange_holds,
    satisfies,
};
use monideal::closure::{closure_oracle, integral_closure, is_integral_over, OracleVerdict};
use monideal::decomp::{
    ass_primes, irreducible_decomposition, localization_kernel, min_primes, radical_via_dual,
    MonomialPrime,
};
use monideal::dsl::{Config, OutputFormat, Session};
use monideal::ideal::verify_almost_regular_sequence;
use monideal::polar::{depolarize_enumerate, exponent_vector, polarize, SlotVar};
use monideal::symbolic::{
    symbolic_equals_ordinary, symbolic_power, symbolic_power_squarefree, symbolic_power_via_power,
};
use monideal::{Characteristic, IdealClass, Monomial, MonomialIdeal, VarSet};
use rand::Rng;

type Outcome = Result<String, Box<dyn StdError + Send + Sync>>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+).into());
        }
    };
}

const FIVE: [IdealClass; 5] = [
    IdealClass::BorelType,
    IdealClass::StronglyStable,
    IdealClass::BorelFixed,
    IdealClass::Lexsegment,
    IdealClass::UniversalLexsegment,
];

/// Offset keeping the number of variables and the characteristic of
/// [`params`] unchanged.
const PARTNER: u64 = 30_000;

fn holds(i: &MonomialIdeal, class: IdealClass, ch: Characteristic) -> bool {
    satisfies(i, class, ch, 3).unwrap()
}

fn c1_colon_not_borel_fixed() -> Outcome {
    let ch2 = Characteristic::new(2)?;
    for n in 2..=4 {
        let mut a = vec![0u32; n];
        let mut b = vec![0u32; n];
        a[0] = 3;
        b[0] = 1;
        b[1] = 2;
        let i = MonomialIdeal::minimalize([Monomial::new(a), Monomial::new(b)], n)?;
        ensure!(
            is_borel_fixed(&i, ch2),
            "{i} should be Borel-fixed in char 2"
        );
        let l = MonomialIdeal::principal(Monomial::var(n, 1)?);
        let c = i.colon(&l)?;
        let mut e = vec![0u32; n];
        e[0] = 1;
        e[1] = 1;
        let mut x13 = vec![0u32; n];
        x13[0] = 3;
        let expected = MonomialIdeal::minimalize([Monomial::new(x13), Monomial::new(e)], n)?;
        ensure!(c == expected, "I : <x2> = {c}, expected {expected}");
        ensure!(
            !is_borel_fixed(&c, ch2),
            "{c} should not be Borel-fixed in char 2"
        );
    }
    let out = Command::new(env!("CARGO_BIN_EXE_monideal"))
        .args(["--char", "2", "eval", "-e"])
        .arg("ring 3; I = <x1^3, x1*x2^2>; is_borel_fixed(I); I : <x2>; is_borel_fixed(I : <x2>)")
        .output()?;
    let text = String::from_utf8(out.stdout)?;
    ensure!(out.status.success(), "CLI exited with {}", out.status);
    ensure!(
        text == "true\n<x1^3, x1*x2>\nfalse\n",
        "CLI printed {text:?}"
    );
    Ok("n = 2..4 and `--char 2` CLI run".into())
}

fn c2_product_not_lexsegment() -> Outcome {
    let i = ideal(
        3,
        &[&[3, 0, 0], &[2, 1, 0], &[2, 0, 1], &[1, 2, 0], &[1, 1, 1]],
    );
    ensure!(is_lexsegment(&i)?, "I should be lexsegment");
    let sq = i.power(2)?;
    ensure!(
        sq.contains(&mono(&[2, 2, 2]))?,
        "x1^2x2^2x3^2 should lie in I^2"
    );
    ensure!(
        !sq.contains(&mono(&[3, 0, 3]))?,
        "x1^3x3^3 should not lie in I^2"
    );
    ensure!(!is_lexsegment(&sq)?, "I^2 should not be lexsegment");
    Ok(String::new())
}

fn not_equal_ideal() -> MonomialIdeal {
    ideal(
        6,
        &[
            &[1, 1, 1, 0, 0, 0],
            &[1, 0, 0, 1, 1, 0],
            &[0, 1, 0, 1, 0, 1],
            &[0, 0, 1, 0, 1, 1],
        ],
    )
}

fn c3_not_equal() -> Outcome {
    let i = not_equal_ideal();
    let u = mono(&[1; 6]);
    let bar = integral_closure(&i)?;
    ensure!(bar == i, "closure of the squarefree ideal changed: {bar}");
    let sq = i.power(2)?;
    ensure!(!sq.contains(&u)?, "u should not lie in I^2");
    let v = closure_oracle(&u, &sq, 4)?;
    ensure!(v == OracleVerdict::Member(2), "oracle returned {v:?}");
    ensure!(
        is_integral_over(&u, &sq)?,
        "LP membership disagrees with the oracle"
    );
    ensure!(
        integral_closure(&sq)?.contains(&u)?,
        "u missing from the closure of I^2"
    );
    ensure!(
        !bar.power(2)?.contains(&u)?,
        "u should not lie in (closure I)^2"
    );
    Ok(String::new())
}

fn c4_identity_example() -> Outcome {
    let i = ideal(3, &[&[2, 0, 2], &[1, 1, 2]]);
    let min: BTreeSet<Vec<usize>> = min_primes(&i)?
        .iter()
        .map(|p| p.vars().to_one_based())
        .collect();
    ensure!(
        min == BTreeSet::from([vec![1], vec![3]]),
        "Min(I) = {min:?}"
    );
    let ass: BTreeSet<Vec<usize>> = ass_primes(&i)?
        .iter()
        .map(|p| p.vars().to_one_based())
        .collect();
    ensure!(
        ass == BTreeSet::from([vec![1], vec![1, 2], vec![3]]),
        "Ass(I) = {ass:?}"
    );
    let comps: BTreeSet<String> = irreducible_decomposition(&i)?
        .iter()
        .map(ToString::to_string)
        .collect();
    let listed: BTreeSet<String> = [
        ideal(3, &[&[2, 0, 0], &[0, 1, 0]]),
        ideal(3, &[&[1, 0, 0]]),
        ideal(3, &[&[0, 0, 2]]),
    ]
    .iter()
    .map(ToString::to_string)
    .collect();
    ensure!(comps == listed, "decomposition {comps:?}");
    for k in 1..=3u32 {
        let listed = MonomialIdeal::minimalize((0..=k).map(|j| mono(&[k + j, k - j, 2 * k])), 3)?;
        let pk = i.power(k)?;
        ensure!(pk == listed, "I^{k} = {pk}, expected {listed}");
        let mut meet = ideal(3, &[&[k, 0, 0]]).intersect(&ideal(3, &[&[0, 0, 2 * k]]))?;
        for j in 1..=k {
            meet = meet.intersect(&ideal(3, &[&[k + j, 0, 0], &[0, k - j + 1, 0]]))?;
        }
        ensure!(pk == meet, "I^{k} differs from its listed decomposition");
        let sym = symbolic_power(&i, k)?;
        ensure!(sym == ideal(3, &[&[k, 0, 2 * k]]), "I^({k}) = {sym}");
        let cmp = symbolic_equals_ordinary(&i, k)?;
        ensure!(!cmp.equal, "I^({k}) = I^{k} reported");
    }
    Ok(String::new())
}

fn c5_u_not_p() -> Outcome {
    let p = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
    let sym = symbolic_power(&p, 2)?;
    let sq = p.power(2)?;
    ensure!(sym == sq, "I^(2) = {sym} but I^2 = {sq}");
    ensure!(
        sq == ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]),
        "I^2 = {sq}"
    );
    ensure!(!is_lexsegment(&sym)?, "I^(2) should not be lexsegment");
    ensure!(
        is_universal_lexsegment(&p),
        "I should be universal lexsegment"
    );
    Ok(String::new())
}

fn c6_polarization() -> Outcome {
    let t = polarize(&ideal(2, &[&[3, 0], &[2, 1], &[1, 2]]))?;
    let s = |var: usize, slot: u32| SlotVar { var: var - 1, slot };
    let expected = vec![
        vec![s(1, 1), s(1, 2), s(1, 3)],
        vec![s(1, 1), s(1, 2), s(2, 1)],
        vec![s(1, 1), s(2, 1), s(2, 2)],
    ];
    ensure!(t.gens() == expected.as_slice(), "T(I) = {t}");
    Ok(t.to_string())
}

fn c7_universal_lexsegment_example() -> Outcome {
    let i = ideal(
        8,
        &[
            &[3, 0, 0, 0, 0, 0, 0, 0],
            &[2, 1, 1, 0, 0, 0, 0, 0],
            &[2, 1, 0, 1, 0, 0, 0, 0],
            &[2, 1, 0, 0, 3, 3, 0, 0],
            &[2, 1, 0, 0, 3, 2, 2, 0],
            &[2, 1, 0, 0, 3, 2, 1, 2],
        ],
    );
    let a = exponent_vector(&i);
    ensure!(a == [3, 1, 1, 1, 3, 3, 2, 2], "exponent vector {a:?}");
    ensure!(
        polarize(&i)?.is_squarefree_strongly_stable(),
        "T(I) not squarefree strongly stable"
    );
    Ok(String::new())
}

fn c8_closure_preserves_classes() -> Outcome {
    let mut grew = 0;
    for class in FIVE {
        for (s, i) in instances(class, 200, 0) {
            let ch = char_for(s);
            let bar = integral_closure(&i)?;
            ensure!(
                i.is_subset(&bar)?,
                "{class} seed {s}: I not inside its closure"
            );
            ensure!(
                holds(&bar, class, ch),
                "{class} seed {s}: closure of {i} is {bar}"
            );
            if class == IdealClass::UniversalLexsegment {
                ensure!(
                    bar == i,
                    "universal lexsegment seed {s}: {i} has closure {bar}"
                );
            }
            grew += usize::from(bar != i);
        }
    }
    Ok(format!(
        "1000 instances, {grew} with a strictly larger closure"
    ))
}

fn c9_operations() -> Outcome {
    let mut checked = 0;
    for (s, i) in instances(IdealClass::BorelType, 200, 0)
        .into_iter()
        .map(|x| (IdealClass::BorelType, x))
        .chain(
            instances(IdealClass::StronglyStable, 200, 0)
                .into_iter()
                .map(|x| (IdealClass::StronglyStable, x)),
        )
        .map(|(c, (s, i))| ((c, s), i))
    {
        let (class, s) = s;
        let j = instance(class, s + PARTNER);
        let l = random_ideal(&mut rng(s), i.nvars(), 3, 3);
        for (what, r) in [
            ("I & J", i.intersect(&j)?),
            ("I + J", i.sum(&j)?),
            ("I : L", i.colon(&l)?),
            ("I * J", i.product(&j)?),
            ("I : m^inf", i.saturate(&MonomialIdeal::maximal(i.nvars()))?),
        ] {
            ensure!(
                holds(&r, class, Characteristic::ZERO),
                "{class} seed {s}: {what} = {r} (I = {i}, J = {j}, L = {l})"
            );
            checked += 1;
        }
    }
    for (s, i) in instances(IdealClass::BorelFixed, 200, 0) {
        let ch = char_for(s);
        let j = instance(IdealClass::BorelFixed, s + PARTNER);
        for (what, r) in [
            ("I & J", i.intersect(&j)?),
            ("I + J", i.sum(&j)?),
            ("I : J", i.colon(&j)?),
            ("I * J", i.product(&j)?),
            ("I : m^inf", i.saturate(&MonomialIdeal::maximal(i.nvars()))?),
        ] {
            ensure!(
                is_borel_fixed(&r, ch),
                "borel-fixed (char {}) seed {s}: {what} = {r}",
                ch.value()
            );
            checked += 1;
        }
    }
    let mut lex_products_failing = 0;
    for class in [IdealClass::Lexsegment, IdealClass::UniversalLexsegment] {
        for (s, i) in instances(class, 200, 0) {
            let j = instance(class, s + PARTNER);
            let l = random_ideal(&mut rng(s), i.nvars(), 3, 3);
            for (what, r) in [
                ("I & J", i.intersect(&j)?),
                ("I + J", i.sum(&j)?),
                ("I : L", i.colon(&l)?),
            ] {
                ensure!(
                    holds(&r, class, Characteristic::ZERO),
                    "{class} seed {s}: {what} = {r} (I = {i}, J = {j}, L = {l})"
                );
                checked += 1;
            }
            if class == IdealClass::Lexsegment && !is_lexsegment(&i.product(&j)?)? {
                lex_products_failing += 1;
            }
        }
    }
    // The documented exemptions fail exactly as stated.
    let ch2 = Characteristic::new(2)?;
    let bf = ideal(2, &[&[3, 0], &[1, 2]]);
    ensure!(
        !is_borel_fixed(&bf.colon(&ideal(2, &[&[0, 1]]))?, ch2),
        "Borel-fixed colon exemption did not fail"
    );
    let lex = ideal(
        3,
        &[&[3, 0, 0], &[2, 1, 0], &[2, 0, 1], &[1, 2, 0], &[1, 1, 1]],
    );
    ensure!(
        !is_lexsegment(&lex.product(&lex)?)?,
        "lexsegment product exemption did not fail"
    );
    Ok(format!(
        "{checked} operation results; exemptions reproduced; {lex_products_failing}/200 random lexsegment products not lexsegment"
    ))
}

fn c10_kernels() -> Outcome {
    let mut n_checked = 0;
    for class in FIVE {
        for (s, i) in instances(class, 200, 0) {
            let ch = char_for(s);
            let n = i.nvars();
            let mut r = rng(s + 77);
            for _ in 0..3 {
                let p = MonomialPrime::new(n, random_varset(&mut r, n))?;
                let j = localization_kernel(&i, &p)?;
                ensure!(
                    holds(&j, class, ch),
                    "{class} seed {s}: J(I, {p}) = {j} for I = {i}"
                );
                match p.vars().first_missing(n) {
                    Some(0) => ensure!(j.is_unit(), "{class} seed {s}: x1 not in {p} but J = {j}"),
                    Some(first) => ensure!(
                        j.gens()
                            .iter()
                            .all(|g| (first..n).all(|l| g.exponent(l) == 0)),
                        "{class} seed {s}: J(I, {p}) = {j} uses a variable beyond x{}",
                        first
                    ),
                    None => {}
                }
                ensure!(
                    i.is_subset(&p.to_ideal())? == j.is_proper(),
                    "{class} seed {s}: properness of J(I, {p}) disagrees with I ⊆ P"
                );
                n_checked += 1;
            }
        }
    }
    for s in 0..200 {
        let mut r = rng(s + 5000);
        let n = 2 + (s % 4) as usize;
        let i = random_ideal(&mut r, n, 4, 4);
        let p = MonomialPrime::new(n, random_varset(&mut r, n))?;
        let j = localization_kernel(&i, &p)?;
        ensure!(
            i.is_subset(&p.to_ideal())? == j.is_proper(),
            "arbitrary seed {s}: properness disagrees"
        );
        n_checked += 1;
    }
    Ok(format!("{n_checked} (ideal, prime) pairs"))
}

fn c11_symbolic_classes() -> Outcome {
    for class in [
        IdealClass::StronglyStable,
        IdealClass::BorelFixed,
        IdealClass::BorelType,
    ] {
        for (s, i) in instances(class, 200, 0) {
            let ch = char_for(s);
            for k in 1..=3 {
                let sym = symbolic_power(&i, k)?;
                ensure!(
                    holds(&sym, class, ch),
                    "{class} seed {s}: I^({k}) = {sym} for I = {i}"
                );
            }
        }
    }
    let mut verified = 0;
    for (s, i) in instances(IdealClass::StablyLexsegment, 200, 0) {
        if !is_stably_lexsegment(&i, 3)?.holds() {
            continue;
        }
        verified += 1;
        for k in 1..=3 {
            let sym = symbolic_power(&i, k)?;
            ensure!(
                is_lexsegment(&sym)?,
                "stably lexsegment seed {s}: I^({k}) = {sym} for I = {i}"
            );
        }
    }
    ensure!(
        verified == 200,
        "only {verified}/200 generated instances verified stably lexsegment"
    );
    Ok("600 class instances and 200 stably lexsegment instances, k = 1..3".into())
}

fn c12_symbolic_routes() -> Outcome {
    let mut sqfree = 0;
    for s in 0..200u64 {
        let i = if s % 2 == 0 {
            mixed_instance(s)
        } else if s % 4 == 1 {
            instance(IdealClass::SquarefreeStronglyStable, s)
        } else {
            let n = 2 + (s % 4) as usize;
            random_squarefree(&mut rng(s), n, 4)
        };
        for k in 1..=3 {
            let a = symbolic_power(&i, k)?;
            let b = symbolic_power_via_power(&i, k)?;
            ensure!(
                a == b,
                "seed {s}, k = {k}: routes differ on {i}: {a} vs {b}"
            );
            if i.is_squarefree() {
                let c = symbolic_power_squarefree(&i, k)?;
                ensure!(
                    a == c,
                    "seed {s}, k = {k}: squarefree route differs on {i}: {a} vs {c}"
                );
            }
            ensure!(
                i.power(k)?.is_subset(&a)?,
                "seed {s}: I^{k} not inside I^({k}) for {i}"
            );
        }
        sqfree += usize::from(i.is_squarefree());
    }
    Ok(format!("200 instances ({sqfree} squarefree), k = 1..3"))
}

fn c13_radical_and_min() -> Outcome {
    for s in 0..100u64 {
        let i = mixed_instance(s + 1000);
        let rad = i.radical();
        let dual = radical_via_dual(&i)?;
        ensure!(
            dual == rad,
            "seed {s}: dual radical {dual} vs {rad} for {i}"
        );
        let m = min_primes(&i)?;
        ensure!(
            min_primes(&rad)? == m,
            "seed {s}: Min differs for the radical of {i}"
        );
        ensure!(
            min_primes(&integral_closure(&i)?)? == m,
            "seed {s}: Min differs for the closure of {i}"
        );
    }
    Ok("100 instances".into())
}

fn c14_almost_regular() -> Outcome {
    for (s, i) in instances(IdealClass::BorelType, 200, 0) {
        let rep = verify_almost_regular_sequence(&i)?;
        ensure!(rep.holds(), "seed {s}: {i} fails at {:?}", rep.steps);
        ensure!(
            almost_regular_oracle(&i),
            "seed {s}: kernel oracle rejects {i}"
        );
    }
    Ok("200 Borel type instances, cross-checked by the kernel oracle".into())
}

fn c15_four_conditions() -> Outcome {
    let mut ul = 0;
    let mut members = 0;
    for s in 0..500u64 {
        let i = mixed_instance(s + 2000);
        let shape = is_universal_lexsegment(&i);
        let exchange = is_universal_lexsegment_by_exchange(&i);
        ensure!(
            shape == exchange,
            "seed {s}: shape test {shape} but exchange test {exchange} for {i}"
        );
        if !shape {
            continue;
        }
        ul += 1;
        let mut r = rng(s);
        for _ in 0..10 {
            let g = &i.gens()[r.gen_range(0..i.len())];
            let w = Monomial::new((0..i.nvars()).map(|_| r.gen_range(0..=2)).collect());
            let u = g.try_mul(&w)?;
            ensure!(
                max_support_exchange_holds(&i, &u)?,
                "seed {s}: condition (3) fails at {u} for {i}"
            );
            members += 1;
        }
    }
    ensure!(
        ul > 0 && ul < 500,
        "degenerate mix: {ul} universal lexsegment instances"
    );
    Ok(format!(
        "500 instances ({ul} universal lexsegment), {members} sampled members"
    ))
}

/// `a_j ≠ 1` for all `j`, and every variable `j < m` has some generator
/// exponent strictly between 0 and `a_j`.
fn converse_hypothesis(i: &MonomialIdeal) -> bool {
    let a = exponent_vector(i);
    if a.contains(&1) {
        return false;
    }
    let m = i.len();
    (0..(m.saturating_sub(1)).min(i.nvars())).all(|j| {
        i.gens()
            .iter()
            .any(|g| g.exponent(j) > 0 && g.exponent(j) < a[j])
    })
}

fn c16_polarization_structure() -> Outcome {
    for (s, i) in instances(IdealClass::UniversalLexsegment, 200, 0) {
        ensure!(
            polarize(&i)?.is_squarefree_strongly_stable(),
            "seed {s}: T({i}) not squarefree strongly stable"
        );
    }
    let (mut yes, mut no) = (0, 0);
    let mut pool: Vec<MonomialIdeal> = Vec::new();
    for s in 0..3000u64 {
        pool.push(mixed_instance(s + 7000));
        pool.push(instance(IdealClass::UniversalLexsegment, s + 7000));
    }
    for i in pool.iter().filter(|i| converse_hypothesis(i)) {
        let t = polarize(i)?.is_squarefree_strongly_stable();
        let u = is_universal_lexsegment(i);
        ensure!(
            t == u,
            "{i}: T(I) squarefree strongly stable is {t} but universal lexsegment is {u}"
        );
        if u {
            yes += 1;
        } else {
            no += 1;
        }
    }
    ensure!(
        yes > 0 && no > 0,
        "converse direction vacuous: {yes} universal, {no} not"
    );
    for i in &pool {
        let t = polarize(i)?;
        ensure!(
            exponent_vector(i) == t.extension(),
            "{i}: exponent and extension vectors differ"
        );
        ensure!(
            t.depolarize() == *i,
            "{i}: slot-count depolarization does not invert"
        );
    }
    let mut reports = Vec::new();
    for i in pool.iter().filter(|i| {
        !exponent_vector(i).contains(&1) && polarize(i).unwrap().is_squarefree_strongly_stable()
    }) {
        if reports.len() == 20 {
            break;
        }
        let j = polarize(i)?;
        let rep = depolarize_enumerate(&j)?;
        for found in &rep.ideals {
            ensure!(
                polarize(found)? == j,
                "{found} returned for {j} but does not polarize to it"
            );
        }
        ensure!(
            rep.ideals.contains(i),
            "{i} missing from the preimages of its polarization"
        );
        ensure!(
            rep.canonical == *i,
            "canonical depolarization of T({i}) is {}",
            rep.canonical
        );
        reports.push((rep.ideals.len(), rep.predicted));
    }
    ensure!(
        reports.len() == 20,
        "only {} eligible instances for the preimage report",
        reports.len()
    );
    let mismatches = reports.iter().filter(|(f, p)| *f as u64 != *p).count();
    Ok(format!(
        "converse on {yes}+{no} instances; {} ideals checked for extension; preimage report: {mismatches}/20 differ from 2^t (found, predicted) = {:?}",
        pool.len(),
        reports
    ))
}

/// `depth(S/I) = n - max m(u)` for stable ideals.
fn depth_by_max_support(i: &MonomialIdeal) -> usize {
    let m = i
        .gens()
        .iter()
        .filter_map(Monomial::max_support)
        .max()
        .map_or(0, |x| x + 1);
    i.nvars() - m
}

fn c17_depth() -> Outcome {
    let mut pairs = 0;
    let mut equalities = 0;
    for s in 0..200u64 {
        let n = 2 + (s % 5) as usize;
        let params = monideal::GenParams::new(IdealClass::UniversalLexsegment, n, 4, n, s);
        let i = monideal::gen_ideal(&params)?;
        let d = depth_universal_lex(&i)?;
        ensure!(
            d == depth_by_max_support(&i),
            "seed {s}: depth formula disagrees on {i}"
        );
        let ass_height = ass_primes(&i)?
            .iter()
            .map(|p| p.vars().len())
            .max()
            .unwrap_or(0);
        ensure!(
            d == n - ass_height,
            "seed {s}: depth {d} but largest associated prime has height {ass_height}"
        );
        let m = i.len();
        let head = VarSet::full(m);
        let mut r = rng(s + 31);
        let mut seen = BTreeSet::new();
        for _ in 0..6 {
            let vars = random_varset(&mut r, n);
            let p = MonomialPrime::new(n, vars)?;
            if !i.is_subset(&p.to_ideal())? || !seen.insert(vars.bits()) {
                continue;
            }
            let j = localization_kernel(&i, &p)?;
            let dj = depth_universal_lex(&j)?;
            ensure!(
                dj == depth_by_max_support(&j),
                "seed {s}: depth formula disagrees on J = {j}"
            );
            ensure!(
                d <= dj,
                "seed {s}: depth(S/I) = {d} > depth(S/J(I,{p})) = {dj}"
            );
            ensure!(
                (d == dj) == head.is_subset(vars),
                "seed {s}: equality case wrong for {p}"
            );
            pairs += 1;
            equalities += usize::from(d == dj);
        }
        // The prime of all variables always contains a proper ideal.
        let full = MonomialPrime::new(n, VarSet::full(n))?;
        ensure!(
            depth_universal_lex(&localization_kernel(&i, &full)?)? == d,
            "seed {s}: J(I, m) = I fails"
        );
    }
    ensure!(
        pairs > 0 && equalities > 0 && equalities < pairs,
        "degenerate sample: {equalities}/{pairs}"
    );
    Ok(format!(
        "{pairs} (ideal, prime) pairs, {equalities} equalities"
    ))
}

type Criterion = (u32, &'static str, fn() -> Outcome);

const CRITERIA: &[Criterion] = &[
    (
        1,
        "colon of a Borel-fixed ideal (char 2)",
        c1_colon_not_borel_fixed,
    ),
    (2, "square of a lexsegment ideal", c2_product_not_lexsegment),
    (3, "closure of powers is strictly larger", c3_not_equal),
    (
        4,
        "symbolic powers with an embedded prime",
        c4_identity_example,
    ),
    (5, "universal lexsegment, square not lexsegment", c5_u_not_p),
    (6, "polarization example", c6_polarization),
    (
        7,
        "exponent vector of a universal lexsegment ideal",
        c7_universal_lexsegment_example,
    ),
    (
        8,
        "integral closure preserves the classes",
        c8_closure_preserves_classes,
    ),
    (9, "class closure under ideal operations", c9_operations),
    (
        10,
        "localization kernels keep class, support and properness",
        c10_kernels,
    ),
    (11, "symbolic powers keep class", c11_symbolic_classes),
    (12, "symbolic power routes agree", c12_symbolic_routes),
    (
        13,
        "radical via Alexander dual; minimal primes",
        c13_radical_and_min,
    ),
    (
        14,
        "almost regular sequence on Borel type ideals",
        c14_almost_regular,
    ),
    (
        15,
        "universal lexsegment characterizations agree",
        c15_four_conditions,
    ),
    (
        16,
        "polarization of universal lexsegment ideals",
        c16_polarization_structure,
    ),
    (
        17,
        "depth of kernels of universal lexsegment ideals",
        c17_depth,
    ),
];

fn main() {
    // Sanity: the DSL front end and the library agree on a basic script.
    let lines = Session::new(Config::default())
        .run_to_lines(
            "ring 3; is_strongly_stable(<x1^2, x1*x2>)",
            OutputFormat::Text,
        )
        .expect("front end");
    assert_eq!(lines, ["true"]);
    let _ = (
        is_borel_type,
        is_strongly_stable,
        is_squarefree_strongly_stable,
    );

    let start = Instant::now();
    let results: Vec<(Outcome, f64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|&(_, _, run)| {
                std::thread::Builder::new()
                    .stack_size(64 << 20)
                    .spawn_scoped(scope, move || {
                        let t = Instant::now();
                        let out = std::panic::catch_unwind(run)
                            .unwrap_or_else(|_| Err("panicked".into()));
                        (out, t.elapsed().as_secs_f64())
                    })
                    .expect("spawn")
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("join"))
            .collect()
    });

    let mut failed = 0;
    for (&(id, name, _), (outcome, secs)) in CRITERIA.iter().zip(&results) {
        match outcome {
            Ok(detail) if detail.is_empty() => {
                println!("criterion {id:>2} PASS  {name} ({secs:.2}s)")
            }
            Ok(detail) => println!("criterion {id:>2} PASS  {name} ({secs:.2}s): {detail}"),
            Err(e) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name} ({secs:.2}s): {e}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        CRITERIA.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
