//! One PASS/FAIL line per acceptance criterion. Always exits 0; the lines are the result.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

use cascade_kit::biparabolic::{borel, make_biparabolic};
use cascade_kit::cascade::{highest_root, kostant_cascade, subsystem_positive_roots};
use cascade_kit::checker::{
    check_half_set, check_with_explicit_hgamma, h_gamma_basis, integrality_sweep, reverify, HGamma, Stage, Status,
    Witness,
};
use cascade_kit::diophantine::{
    brute_force_minimal, hilbert_basis_with_budget, ExponentVector, HilbertOutcome, MonoidProblem,
};
use cascade_kit::frobenius_pairs::{
    borel_constraints, dimension_identities_check, frobenius_h, frobenius_sweep, solve_h_on_support, standing_pairs,
    FindingKind, HSolution, SupportSet,
};
use cascade_kit::integral_pairs::{
    beta, compute_pi1_z, compute_pi_z, integral_roots, is_reduced, reduce_half_set, split_i, HalfSet, PiZ,
};
use cascade_kit::semiinvariant_weights::closed_forms::{checks, Rule};
use cascade_kit::semiinvariant_weights::{composite_orbits, generator_weights, integral_generators};
use cascade_kit::{Family, NodeSet, RootSystem, RootVec, SimpleSystem, WeightVec};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn rs(f: Family, n: usize) -> RootSystem {
    RootSystem::new(f, n).unwrap()
}

fn ns(n: usize, v: &[usize]) -> NodeSet {
    NodeSet::new(n, v).unwrap()
}

fn hs(n: usize, v: &[usize]) -> HalfSet {
    HalfSet::new(n, v).unwrap()
}

fn w(x: &RootVec) -> WeightVec {
    x.to_weight()
}

fn sign(i: usize) -> i64 {
    if i % 2 == 1 {
        1
    } else {
        -1
    }
}

/// Expected Borel values on π, by family and rank.
fn borel_values(f: Family, n: usize) -> Vec<i64> {
    (1..=n)
        .map(|i| match f {
            Family::B if n % 2 == 1 => sign(i),
            Family::B => {
                if i < n {
                    sign(i)
                } else {
                    0
                }
            }
            Family::C => i64::from(i == n),
            Family::D => {
                if i <= n - 2 {
                    sign(i)
                } else {
                    1
                }
            }
            Family::E if n == 7 => {
                if [1, 4, 6].contains(&i) {
                    -1
                } else {
                    1
                }
            }
            Family::E => {
                if [1, 4, 6, 8].contains(&i) {
                    -1
                } else {
                    1
                }
            }
            Family::F => match i {
                1 => -1,
                2 => 1,
                _ => 0,
            },
            Family::G => {
                if i == 1 {
                    1
                } else {
                    -1
                }
            }
            Family::A => unreachable!(),
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let mut systems = Vec::new();
    systems.extend((3..=6).map(|n| (Family::B, n)));
    systems.extend((2..=6).map(|n| (Family::C, n)));
    systems.extend([(Family::D, 4), (Family::D, 6), (Family::G, 2), (Family::F, 4), (Family::E, 7), (Family::E, 8)]);
    let mut bad = Vec::new();
    for &(f, n) in &systems {
        let r = rs(f, n);
        let want: Vec<String> = borel_values(f, n).iter().map(i64::to_string).collect();
        match frobenius_h(&borel(&r)) {
            Ok(fh) if fh.h.values_as_strings() == want => {}
            Ok(fh) => bad.push(format!("{} got {:?} want {:?}", r.label(), fh.h.values_as_strings(), want)),
            Err(e) => bad.push(format!("{}: {e}", r.label())),
        }
    }
    if bad.is_empty() {
        outcome(true, format!("{} Borels match exactly", systems.len()))
    } else {
        outcome(false, bad.join("; "))
    }
}

fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    let s = |x: i64| Some(x.to_string());
    // D5: (−1)^{i−1} for i ≤ 3, h4 + h5 = 0
    let c = borel_constraints(&rs(Family::D, 5));
    let d5 =
        c.determined[..3] == [s(1), s(-1), s(1)] && c.orbit_sums.iter().any(|o| (o.i, o.j) == (4, 5) && o.sum == s(0));
    notes.push(format!("D5 {}", if d5 { "matches" } else { "differs" }));
    pass &= d5;
    // E6: h4 = −1, h2 = 1, h1 + h6 = h3 + h5 = 0
    let c = borel_constraints(&rs(Family::E, 6));
    let sums = [(1, 6), (3, 5)].iter().all(|&p| c.orbit_sums.iter().any(|o| (o.i, o.j) == p && o.sum == s(0)));
    let values = c.determined[3] == s(-1) && c.determined[1] == s(1);
    notes.push(format!(
        "E6 orbit sums {}, h(a2) = {}, h(a4) = {} (expected 1, -1)",
        if sums { "match" } else { "differ" },
        c.determined[1].as_deref().unwrap_or("?"),
        c.determined[3].as_deref().unwrap_or("?"),
    ));
    pass &= sums && values;
    outcome(pass, notes.join("; "))
}

fn criterion_3() -> Outcome {
    let mut systems = Vec::new();
    for (f, lo) in [(Family::A, 1), (Family::B, 2), (Family::C, 2), (Family::D, 4)] {
        systems.extend((lo..=6).map(|n| rs(f, n)));
    }
    systems.extend([rs(Family::E, 6), rs(Family::E, 7), rs(Family::E, 8), rs(Family::F, 4), rs(Family::G, 2)]);
    let (mut rows, mut non_integral, mut over_m, mut over_weak) = (0, 0, Vec::new(), 0);
    let mut beyond_unit = Vec::new();
    let mut e7_claim = String::new();
    for r in &systems {
        let t = frobenius_sweep(r).unwrap();
        rows += t.rows.len();
        non_integral += t.rows.iter().filter(|x| !x.integral).count();
        let over = t.rows.iter().filter(|x| !x.within_bound).count();
        if over > 0 {
            over_m.push(format!("{} {over}", r.label()));
        }
        for row in &t.rows {
            let bp = make_biparabolic(r, row.pi1.clone(), row.pi2.clone()).unwrap();
            let fh = frobenius_h(&bp).unwrap();
            let weak = num_rational::BigRational::from_integer(((1 + fh.m1 + fh.m2) as i64).into());
            over_weak += usize::from(fh.max_abs > weak);
        }
        let beyond = t.findings.iter().filter(|f| f.kind == FindingKind::ExceptionalBeyondUnit).count();
        if beyond > 0 {
            beyond_unit.push(format!("{} {beyond}", r.label()));
        }
        if r.label() == "E7" {
            let full = NodeSet::full(7);
            let row = t
                .rows
                .iter()
                .find(|x| x.pi1 == full.difference(&ns(7, &[5])) && x.pi2 == full.difference(&ns(7, &[7])))
                .expect("E7 pair is Frobenius");
            e7_claim = format!("E7 pi1=pi-a5 pi2=pi-a7 h(pi) = {{{}}}", row.value_set.join(","));
        }
    }
    let pass = non_integral == 0 && over_m.is_empty();
    outcome(
        pass,
        format!(
            "{rows} Frobenius rows, {non_integral} non-integral; max|h| > m on [{}]; > 1+m1+m2 on {over_weak}; findings: {e7_claim}, beyond {{0,±1}} on [{}]",
            over_m.join(", "),
            beyond_unit.join(", ")
        ),
    )
}

fn criterion_4() -> Outcome {
    let c6 = rs(Family::C, 6);
    let half = hs(6, &[1, 3, 5]);
    let pi1 = ns(6, &[1, 2, 4, 5]);
    let mut bad = Vec::new();
    let want_pi_z: BTreeSet<RootVec> = [
        RootVec::interval(6, 1, 3),
        c6.simple(2),
        RootVec::interval(6, 3, 5),
        c6.simple(4),
        RootVec(vec![0, 0, 0, 0, 2, 1]),
        c6.simple(6),
    ]
    .into_iter()
    .collect();
    match compute_pi_z(&c6, &half).unwrap() {
        PiZ::Admissible(ss) if ss.elements().iter().cloned().collect::<BTreeSet<_>>() == want_pi_z => {}
        other => bad.push(format!("pi^Z = {other:?}")),
    }
    let data = compute_pi1_z(&c6, &pi1, &half).unwrap();
    if data.pi1_z.elements() != [c6.simple(2), c6.simple(4)] {
        bad.push("pi1^Z".into());
    }
    let hg = h_gamma_basis(&c6, &pi1, &half).unwrap();
    if hg.labels() != [1, 5] {
        bad.push(format!("h_Gamma {:?}", hg.labels()));
    }
    let gens = integral_generators(&c6, &data, &hg.coroots).unwrap();
    let b = |t| beta(6, t);
    let want = [
        b(1),
        b(1).add(&b(4)).sub(&c6.simple(4)),
        b(1).add(&b(4)).add(&b(5)),
        b(2).sub(&c6.simple(2)),
        b(2).add(&b(3)),
        b(2).add(&b(3)).add(&b(6)),
    ];
    if gens.iter().map(|g| g.weight.clone()).ne(want.iter().map(w)) {
        bad.push("C6 weights".into());
    }
    let rows: Vec<Vec<i64>> = gens.iter().map(|g| g.pairing_vector.clone()).collect();
    if rows != [vec![2, 0], vec![2, 1], vec![2, 2], vec![-1, 0], vec![-2, 0], vec![-2, -2]] {
        bad.push(format!("C6 pairings {rows:?}"));
    }
    let v = check_half_set(&c6, &pi1, &half).unwrap();
    let names = v.generator_names();
    let mut extra = Vec::new();
    match &v.witness {
        Witness::NotFree { basis, .. } | Witness::Factorization { basis, .. } => {
            let expected: Vec<ExponentVector> =
                [[1, 0, 0, 0, 1, 0], [1, 0, 0, 2, 0, 0], [0, 0, 1, 0, 0, 1], [0, 2, 0, 0, 1, 1]]
                    .iter()
                    .map(|x| ExponentVector(x.to_vec()))
                    .collect();
            if !expected.iter().all(|p| basis.contains(p)) {
                bad.push("expected monomials missing from the Hilbert basis".into());
            }
            extra = basis.iter().filter(|x| !expected.contains(x)).map(|x| x.monomial(&names)).collect();
        }
        _ => bad.push("no Hilbert basis computed".into()),
    }
    if !v.is_excluded() {
        bad.push(format!("verdict {:?}", v.status));
    }
    if bad.is_empty() {
        outcome(
            true,
            format!(
                "pi^Z, pi1^Z, weights, pairings, h_Gamma = {{a1^v, a5^v}} match; verdict {:?}; basis has the four expected monomials plus [{}]",
                v.status,
                extra.join(", ")
            ),
        )
    } else {
        outcome(false, bad.join("; "))
    }
}

fn criterion_5() -> Outcome {
    let c3 = rs(Family::C, 3);
    let pi1 = ns(3, &[1, 2]);
    let mut bad = Vec::new();
    let data = compute_pi1_z(&c3, &pi1, &hs(3, &[1])).unwrap();
    let gens = integral_generators(&c3, &data, &[c3.simple(1)]).unwrap();
    let b = |t| beta(3, t);
    let want = [b(1), b(2).sub(&c3.simple(2)), b(2).add(&b(3))];
    if gens.iter().map(|g| g.weight.clone()).ne(want.iter().map(w)) {
        bad.push("C3 weights".into());
    }
    if gens.iter().map(|g| g.pairing_vector[0]).ne([2, -1, -2]) {
        bad.push("C3 pairings".into());
    }
    let span = SupportSet::coroot_span(&c3, &[1, 2]);
    let s1 = SupportSet::new(&c3, vec![RootVec(vec![1, 1, 1]), RootVec(vec![0, 2, 1])], span.clone()).unwrap();
    if solve_h_on_support(&c3, &s1) != HSolution::NoSolution {
        bad.push("first support set is solvable".into());
    }
    let s2 = SupportSet::new(&c3, vec![RootVec(vec![1, 1, 1]), RootVec(vec![0, 1, 0])], span).unwrap();
    match solve_h_on_support(&c3, &s2) {
        HSolution::Unique(h) if h.to_string() == "3a1^v+2a2^v" => {}
        other => bad.push(format!("second support set gives {other:?}")),
    }
    let v = check_half_set(&c3, &pi1, &hs(3, &[1])).unwrap();
    if v.status != Status::Excluded(Stage::FactorizationFail) {
        bad.push(format!("verdict {:?}", v.status));
    }
    let r = integrality_sweep(&c3, &pi1, 8).unwrap();
    if !r.certified {
        bad.push("C3 pi1={1,2} not certified".into());
    }
    if bad.is_empty() {
        outcome(
            true,
            "C3 weights and pairings exact; NoSolution and h = 3a1^v+2a2^v; {a1} Excluded(FactorizationFail); C3 {1,2} certified",
        )
    } else {
        outcome(false, bad.join("; "))
    }
}

fn criterion_6() -> Outcome {
    let c5 = rs(Family::C, 5);
    let (a2, a3, a5) = (c5.simple(2), c5.simple(3), c5.simple(5));
    let (b4, s14) = (RootVec(vec![0, 0, 0, 2, 1]), RootVec::interval(5, 1, 4));
    let side1 = SimpleSystem::new(&c5, vec![a2.clone(), a3.clone(), s14.clone()]).unwrap();
    let side2 = SimpleSystem::new(&c5, vec![a5.clone(), b4.clone()]).unwrap();
    let all = SimpleSystem::new(&c5, vec![b4.clone(), a5.clone(), a2.clone(), a3.clone(), s14.clone()]).unwrap();
    let hg = HGamma::from_labels(&c5, &[4]).unwrap();
    let orbits = composite_orbits(&c5, &all, &side1, &side2);
    let gens = generator_weights(&c5, &side1, &side2, &orbits, &hg.coroots).unwrap();
    let minus23 = a2.add(&a3).neg();
    let want = [b4, a5, minus23.clone(), minus23, s14.neg()];
    let mut bad = Vec::new();
    if gens.iter().map(|g| g.weight.clone()).ne(want.iter().map(w)) {
        bad.push("C5 weights".into());
    }
    if gens.iter().map(|g| g.pairing_vector[0]).ne([2, -2, 1, 1, -1]) {
        bad.push("C5 pairings".into());
    }
    let v = check_with_explicit_hgamma(&c5, &gens, &hg, 4).unwrap();
    if v.status != Status::Excluded(Stage::NotPolynomial) {
        bad.push(format!("verdict {:?}", v.status));
    }
    if bad.is_empty() {
        outcome(true, "C5 weights and a4^v pairings exact; Excluded(NotPolynomial)")
    } else {
        outcome(false, bad.join("; "))
    }
}

fn criterion_7() -> Outcome {
    let (mut parabolics, mut classes, mut inconclusive) = (0, 0, Vec::new());
    let mut unverified = 0;
    for n in 2..=6 {
        let r = rs(Family::C, n);
        for m in 0u32..(1 << n) - 1 {
            let pi1 = NodeSet::from_mask(n, m);
            let rep = integrality_sweep(&r, &pi1, 8).unwrap();
            parabolics += 1;
            classes += rep.classes.len();
            for c in &rep.classes {
                unverified += usize::from(!reverify(&r, &pi1, &c.verdict).unwrap());
                if !c.representative.is_empty() && !c.verdict.is_excluded() {
                    inconclusive.push(format!("C{n} pi1={pi1} {} {:?}", c.representative, c.verdict.witness));
                }
            }
        }
    }
    let pass = inconclusive.is_empty() && unverified == 0;
    let mut detail =
        format!("{parabolics} parabolics, {classes} reduced classes, {unverified} witnesses failing re-verification");
    if !inconclusive.is_empty() {
        detail.push_str(&format!("; not excluded: {}", inconclusive.join("; ")));
    }
    outcome(pass, detail)
}

fn connected_subsets(r: &RootSystem) -> Vec<NodeSet> {
    let n = r.rank();
    (1u32..(1 << n)).map(|m| NodeSet::from_mask(n, m)).filter(|s| r.node_components(s).len() == 1).collect()
}

fn cascade_lemmas() -> Result<(), String> {
    for n in 1..=6 {
        for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            let Ok(r) = RootSystem::new(f, n) else { continue };
            for s in connected_subsets(&r) {
                let ss = SimpleSystem::from_nodes(&r, &s);
                let c = kostant_cascade(&r, &ss);
                for (i, a) in c.roots().iter().enumerate() {
                    for b in &c.roots()[i + 1..] {
                        if r.form(a, b) != 0 || r.is_root(&a.add(b)) || r.is_root(&a.sub(b)) {
                            return Err(format!("{} {s}: {a}, {b} not strongly orthogonal", r.label()));
                        }
                    }
                }
                let top = highest_root(&r, &ss).unwrap();
                let bb = r.form(&top, &top);
                let pos: BTreeSet<RootVec> = subsystem_positive_roots(&r, &ss).into_iter().map(|x| x.0).collect();
                if pos.iter().any(|g| *g != top && r.form(&top, g) > 0 && 2 * r.form(&top, g) != bb) {
                    return Err(format!("{} {s}: highest root pairing", r.label()));
                }
                let touching = ss.elements().iter().filter(|a| r.form(a, &top) > 0).count();
                if !(1..=2).contains(&touching) {
                    return Err(format!("{} {s}: more than two simple roots touch the highest root", r.label()));
                }
                let image: BTreeSet<RootVec> = pos.iter().map(|g| c.longest_element(&r, g).neg()).collect();
                if image != pos {
                    return Err(format!("{} {s}: cascade reflections do not negate", r.label()));
                }
            }
        }
    }
    Ok(())
}

fn pi_z_extremal() -> Result<(), String> {
    for n in 2..=8 {
        let r = rs(Family::C, n);
        for m in 0u32..(1 << (n - 1)) {
            let half = HalfSet::from_nodes(NodeSet::from_mask(n, m));
            let PiZ::Admissible(ss) = compute_pi_z(&r, &half).unwrap() else {
                return Err(format!("C{n} {half} inadmissible"));
            };
            if ss.len() != n {
                return Err(format!("C{n} {half}: |pi^Z| = {}", ss.len()));
            }
            let pos: BTreeSet<RootVec> = integral_roots(&r, &half).into_iter().collect();
            for a in ss.elements() {
                if !pos.contains(a) || pos.iter().any(|b| pos.contains(&a.sub(b))) {
                    return Err(format!("C{n} {half}: {a} not extremal"));
                }
            }
            for g in pos.iter().filter(|g| !ss.contains(g)) {
                if !ss.elements().iter().any(|a| pos.contains(&g.sub(a))) {
                    return Err(format!("C{n} {half}: {g} not generated"));
                }
            }
        }
    }
    Ok(())
}

fn cascade_partition() -> Result<(), String> {
    for n in 2..=8 {
        let r = rs(Family::C, n);
        for m in 0u32..(1 << (n - 1)) {
            let half = HalfSet::from_nodes(NodeSet::from_mask(n, m));
            let data = compute_pi1_z(&r, &NodeSet::default(), &half).unwrap();
            let split = split_i(&r, &half).unwrap();
            for (part, idx) in [(&data.pi_z_left, &split.left), (&data.pi_z_right, &split.right)] {
                if part.is_empty() {
                    continue;
                }
                let ss = SimpleSystem::new(&r, part.clone()).unwrap();
                let got: BTreeSet<RootVec> = kostant_cascade(&r, &ss).roots().iter().cloned().collect();
                let want: BTreeSet<RootVec> = idx.iter().map(|&t| beta(n, t)).collect();
                if got != want {
                    return Err(format!("C{n} {half}"));
                }
            }
        }
    }
    Ok(())
}

fn closed_form_instance() -> impl Strategy<Value = (usize, NodeSet, HalfSet)> {
    (3usize..=8).prop_flat_map(|n| {
        (Just(n), 1u32..(1 << n) - 1, proptest::collection::vec(any::<prop::sample::Index>(), n)).prop_map(
            |(n, mask, picks)| {
                let r = rs(Family::C, n);
                let pi1 = NodeSet::from_mask(n, mask);
                let mut half = Vec::new();
                for (c, pick) in r.node_components(&pi1).iter().zip(&picks) {
                    let choices: Vec<usize> = c.iter().filter(|&i| i < n).collect();
                    let k = pick.index(choices.len() + 1);
                    if k < choices.len() {
                        half.push(choices[k]);
                    }
                }
                half.sort();
                (n, pi1, hs(n, &half))
            },
        )
    })
}

fn sample<S: Strategy>(s: &S, count: usize) -> Vec<S::Value> {
    let mut runner = TestRunner::deterministic();
    (0..count).map(|_| s.new_tree(&mut runner).unwrap().current()).collect()
}

/// (instances, stated-rule failures, other failures, first stated failure).
fn closed_forms_random() -> (usize, usize, usize, Option<String>) {
    let (mut stated, mut other, mut witness) = (0, 0, None);
    let instances = sample(&closed_form_instance(), 500);
    for (n, pi1, half) in &instances {
        let r = rs(Family::C, *n);
        for c in checks(&r, pi1, half).unwrap() {
            if c.holds() {
                continue;
            }
            if c.rule == Rule::OtherBlockPlus {
                stated += 1;
                witness.get_or_insert_with(|| {
                    format!(
                        "C{n} pi1={pi1} half={half} i_u={} start={}: {} vs {}",
                        c.half_index, c.generator_start, c.actual, c.predicted
                    )
                });
            } else {
                other += 1;
            }
        }
    }
    (instances.len(), stated, other, witness)
}

fn zero_eigenspace_identity() -> Result<usize, String> {
    let mut rows = 0;
    for (f, lo, hi) in [
        (Family::A, 1, 6),
        (Family::B, 2, 6),
        (Family::C, 2, 6),
        (Family::D, 4, 6),
        (Family::E, 6, 7),
        (Family::F, 4, 4),
        (Family::G, 2, 2),
    ] {
        for n in lo..=hi {
            let r = rs(f, n);
            for (p1, p2) in standing_pairs(n) {
                let bp = make_biparabolic(&r, p1, p2).unwrap();
                let Ok(fh) = frobenius_h(&bp) else { continue };
                rows += 1;
                if !dimension_identities_check(&bp, &fh.h).identity_v {
                    return Err(format!("{} {} {}", r.label(), bp.pi1(), bp.pi2()));
                }
            }
        }
    }
    Ok(rows)
}

fn hilbert_random() -> Result<(usize, usize), String> {
    let problems = (1usize..=6, 0usize..=3)
        .prop_flat_map(|(k, d)| proptest::collection::vec(proptest::collection::vec(-3i64..=3, d), k));
    let mut budget_hit = 0;
    for v in sample(&problems, 200) {
        let p = MonoidProblem::new(v.clone()).unwrap();
        let oracle = brute_force_minimal(&p, 12);
        match hilbert_basis_with_budget(&p, 256) {
            HilbertOutcome::Basis(b) => {
                let low: Vec<_> = b.iter().filter(|x| x.degree() <= 12).cloned().collect();
                if low != oracle || !b.iter().all(|x| p.is_member(x)) {
                    return Err(format!("{v:?}"));
                }
            }
            HilbertOutcome::BudgetExceeded { found, .. } => {
                budget_hit += 1;
                if !oracle.iter().all(|x| found.contains(x)) {
                    return Err(format!("{v:?} (partial)"));
                }
            }
        }
    }
    Ok((200, budget_hit))
}

fn reduction_and_stability() -> Result<usize, String> {
    let mut cases = 0;
    for n in 2..=6 {
        let r = rs(Family::C, n);
        for m in 0u32..(1 << n) - 1 {
            let pi1 = NodeSet::from_mask(n, m);
            for hm in 1u32..(1 << (n - 1)) {
                let half = HalfSet::from_nodes(NodeSet::from_mask(n, hm));
                let red = reduce_half_set(&r, &pi1, &half).unwrap();
                if !is_reduced(&r, &pi1, &red) || reduce_half_set(&r, &pi1, &red).unwrap() != red {
                    return Err(format!("C{n} pi1={pi1} {half}: reduction not idempotent"));
                }
                let a = check_half_set(&r, &pi1, &half).unwrap().status;
                let b = check_half_set(&r, &pi1, &red).unwrap().status;
                if a != b {
                    return Err(format!("C{n} pi1={pi1} {half}: {a:?} vs {b:?}"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    let mut record = |name: &str, r: Result<String, String>| match r {
        Ok(s) => parts.push(format!("{name} ok{s}")),
        Err(e) => {
            pass = false;
            parts.push(format!("{name} FAILED ({e})"));
        }
    };
    record("cascade lemmas", cascade_lemmas().map(|_| String::new()));
    record("pi^Z extremal C2-C8", pi_z_extremal().map(|_| String::new()));
    record("cascade partition", cascade_partition().map(|_| String::new()));
    let (count, stated, other, witness) = closed_forms_random();
    let cf = if stated == 0 && other == 0 {
        Ok(format!(" ({count} instances)"))
    } else {
        Err(format!(
            "{count} instances: left-neighbour rule fails {stated} times, e.g. {}; corrected rule and remaining closed forms fail {other} times",
            witness.unwrap_or_default()
        ))
    };
    record("closed forms", cf);
    record("zero-eigenspace dimension identity", zero_eigenspace_identity().map(|r| format!(" ({r} rows)")));
    record("Hilbert oracle", hilbert_random().map(|(k, b)| format!(" ({k} problems, {b} over budget)")));
    record("reduction and stability", reduction_and_stability().map(|c| format!(" ({c} cases)")));
    outcome(pass, parts.join("; "))
}

/// Name, check and time limit.
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 8] = [
        ("Borel h-values", criterion_1, Duration::from_secs(5)),
        ("D5 and E6 Borel constraints", criterion_2, Duration::from_secs(5)),
        ("Frobenius sweep integrality and bound", criterion_3, Duration::from_secs(120)),
        ("C6 pipeline", criterion_4, Duration::from_secs(1)),
        ("C3 pipeline", criterion_5, Duration::from_secs(1)),
        ("C5 biparabolic, explicit h_Gamma", criterion_6, Duration::from_secs(5)),
        ("certify every C_n parabolic, n <= 6", criterion_7, Duration::from_secs(600)),
        ("property suites", criterion_8, Duration::from_secs(600)),
    ];
    let mut passed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        let dt = t.elapsed();
        let ok = o.pass && dt <= *limit;
        passed += usize::from(ok);
        let timing = if dt > *limit { format!("{dt:.2?}, over the {limit:?} limit") } else { format!("{dt:.2?}") };
        println!("{} {}: {name} [{timing}] {}", if ok { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("{passed}/{} criteria pass", criteria.len());
}
