//! Acceptance checks, one printed PASS/FAIL line per criterion.
//!
//! Every comparison is exact integer or exact rational equality; there is
//! no floating-point tolerance anywhere.

mod common;

use std::process::ExitCode;

use rand::Rng;
use zfcover::conjecture::{
    caro_pepper_bound, check_conjecture, check_named_statements, compute_rows, fit_linear_upper_bounds, Status,
};
use zfcover::constructive::{clawfree_forcing_set, delta_bound_forcing_set};
use zfcover::cover::{independence_number, max_independent_set, vertex_cover_number};
use zfcover::enumerate::{all_graphs, canonical_certificate, connected_graphs};
use zfcover::families::{construction2, join, max_degree_lsva, FamilySpec};
use zfcover::forcing::{closure, closure_set, zero_forcing_number};
use zfcover::{
    parse_graph6, serialize_graph6, Budget, ConjectureRecord, Graph, Hypothesis, Invariant, InvariantRow, Rational,
    VertexSet,
};

use common::*;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn z(g: &Graph) -> usize {
    zero_forcing_number(g, &Budget::unlimited()).unwrap().z
}

fn beta(g: &Graph) -> usize {
    vertex_cover_number(g, &Budget::unlimited()).unwrap().beta
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn connected_upto(max_n: usize) -> Vec<Graph> {
    (2..=max_n).flat_map(connected_graphs).collect()
}

fn theorem1_sweep(corpus: &[Graph]) -> Check {
    let mut checked = 0;
    for g in corpus.iter().filter(|g| g.is_claw_free()) {
        let id = serialize_graph6(g);
        let r = clawfree_forcing_set(g, &Budget::unlimited()).map_err(|e| format!("{id}: {e}"))?;
        let b = beta(g);
        let set: Vec<usize> = r.final_set.iter().collect();
        ensure(oracle_is_forcing(g, &set), || format!("{id}: set {} does not force", r.final_set))?;
        ensure(r.size() == b, || format!("{id}: size {} but beta {b}", r.size()))?;
        ensure(z(g) <= b, || format!("{id}: Z > beta"))?;
        checked += 1;
    }
    Ok(format!("{checked} connected claw-free graphs, 2 <= n <= 8, zero exceptions"))
}

fn theorem2_sweep(corpus: &[Graph]) -> Check {
    let n7 = connected_graphs(7).len();
    ensure(n7 == 853, || format!("expected 853 connected graphs on 7 vertices, found {n7}"))?;
    let mut checked = 0;
    let mut tight_cases = 0;
    for g in corpus.iter().filter(|g| g.n() <= 7 && g.max_degree() >= 3) {
        let id = serialize_graph6(g);
        let r = delta_bound_forcing_set(g, &Budget::unlimited()).map_err(|e| format!("{id}: {e}"))?;
        let b = beta(g);
        let delta = g.max_degree();
        let set: Vec<usize> = r.final_set.iter().collect();
        ensure(oracle_is_forcing(g, &set), || format!("{id}: set does not force"))?;
        ensure(r.size() <= (delta - 2) * b + 1, || format!("{id}: size {} above bound", r.size()))?;
        if !r.partition.class1.union(r.partition.class2).is_empty() {
            tight_cases += 1;
            ensure(r.size() <= (delta - 2) * b, || format!("{id}: size {} above (D-2)beta", r.size()))?;
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} connected graphs with maxdeg >= 3, n <= 7 ({tight_cases} with C1 or C2 nonempty), zero exceptions"
    ))
}

fn point_values() -> Check {
    let k23 = Graph::complete_bipartite(2, 3);
    ensure(oracle_z(&k23) == 3 && z(&k23) == 3, || "Z(K23) != 3".into())?;
    ensure(beta(&k23) == 2 && oracle_alpha(&k23) == 3, || "beta(K23) != 2".into())?;
    for n in 4..=10 {
        let s = Graph::star(n - 1);
        ensure(z(&s) == n - 2, || format!("Z(K1,{}) != {}", n - 1, n - 2))?;
        if n <= 8 {
            ensure(oracle_z(&s) == n - 2, || format!("oracle Z(K1,{}) != {}", n - 1, n - 2))?;
        }
    }
    for k in 3..=5 {
        let g = construction2(k, &vec![2; k]).unwrap();
        let b = beta(&g);
        ensure(b == 2 * k, || format!("construction2 k={k}: beta {b}"))?;
        if k <= 4 {
            ensure(z(&g) == 2 * k, || format!("construction2 k={k}: Z != 2k"))?;
        } else {
            // certificate: a valid forcing set of size beta, and no smaller forcing set
            let r = clawfree_forcing_set(&g, &Budget::unlimited()).unwrap();
            let set: Vec<usize> = r.final_set.iter().collect();
            ensure(r.size() == 2 * k && oracle_is_forcing(&g, &set), || "k=5 certificate failed".into())?;
            ensure(z(&g) == 2 * k, || "k=5 exact Z differs".into())?;
        }
    }
    Ok("Z(K23)=3, beta(K23)=2, Z(K1,n-1)=n-2 for n=4..10, construction2 Z=beta=2k for k=3..5; exact".into())
}

fn caro_pepper() -> Check {
    for k in 3..=8usize {
        let g = construction2(k, &vec![2; k]).unwrap();
        let v: Rational = caro_pepper_bound(&g).map_err(|e| e.to_string())?;
        let expected = Rational::new(12 * k as i64 - 1, 5);
        ensure(v == expected, || format!("k={k}: {v} != {expected}"))?;
        ensure(v > Rational::from_integer(2 * k as i64), || format!("k={k}: {v} <= 2k"))?;
    }
    Ok("bound = (12k-1)/5 > 2k for k=3..8; exact rationals".into())
}

fn join_theorems() -> Check {
    let mut rng = rng(20_240_501);
    for i in 0..50 {
        let (ng, nh) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
        let g = random_connected_graph(&mut rng, ng);
        let h = random_connected_graph(&mut rng, nh);
        let j = join(&g, &h).unwrap();
        let zj = z(&j);
        let formula = (g.n() + z(&h)).min(h.n() + z(&g));
        ensure(zj == formula, || {
            format!("pair {i} ({}, {}): Z={zj}, formula={formula}", serialize_graph6(&g), serialize_graph6(&h))
        })?;
        if j.n() <= 9 {
            ensure(oracle_z(&j) == zj, || format!("pair {i}: oracle disagrees"))?;
        }
    }
    let tight = [
        FamilySpec::Construction1 { clique: 3, pendants: 0 },
        FamilySpec::Construction1 { clique: 3, pendants: 2 },
        FamilySpec::Construction1 { clique: 4, pendants: 1 },
        FamilySpec::Construction2 { sizes: vec![1, 1, 1] },
        FamilySpec::Construction2 { sizes: vec![1, 2, 1] },
        FamilySpec::Star { leaves: 1 },
    ];
    let mut pairs = 0;
    for a in &tight {
        for b in &tight {
            let (ga, gb) = (a.build().unwrap(), b.build().unwrap());
            ensure(z(&ga) == beta(&ga) && z(&gb) == beta(&gb), || format!("{a} or {b} not tight"))?;
            let j = join(&ga, &gb).unwrap();
            ensure(z(&j) == beta(&j), || format!("join({a};{b}): Z != beta"))?;
            pairs += 1;
        }
    }
    Ok(format!("50 random connected pairs (seed 20240501) match the join formula; {pairs} tight family pairs keep Z=beta"))
}

fn lsva_lemma() -> Check {
    // (start, number of applications, stride used to pick the attachment vertex)
    let scripts: [(Graph, usize, usize); 5] = [
        (Graph::star(3), 5, 1),
        (Graph::star(3), 5, 4),
        (Graph::star(4), 3, 2),
        (Graph::star(5), 2, 3),
        (Graph::complete_bipartite(2, 3), 5, 5),
    ];
    let mut applied = 0;
    for (start, steps, stride) in scripts {
        let mut g = start;
        let (mut zg, mut bg) = (z(&g), beta(&g));
        for step in 0..steps {
            let delta = g.max_degree();
            let eligible: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) < delta).collect();
            let v = eligible[(step * stride + 1) % eligible.len()];
            let next = max_degree_lsva(&g, v).map_err(|e| e.to_string())?;
            let (zn, bn) = (z(&next), beta(&next));
            ensure(bn == bg + 1, || format!("LSVA at {v} on {}: beta {bg} -> {bn}", serialize_graph6(&g)))?;
            ensure(zn == zg + delta - 2, || {
                format!("LSVA at {v} on {}: Z {zg} -> {zn}, delta {delta}", serialize_graph6(&g))
            })?;
            ensure(next.max_degree() == delta, || "maximum degree changed".into())?;
            g = next;
            zg = zn;
            bg = bn;
            applied += 1;
        }
    }
    ensure(applied == 20, || format!("{applied} applications"))?;
    Ok("20 scripted (maxdeg-1)-LSVA applications: beta+1 and Z+(maxdeg-2) exactly".into())
}

fn seeded_instances() -> Vec<(String, Graph)> {
    let mut specs = Vec::new();
    for clique in 3..=6 {
        for pendants in 0..clique {
            if clique + pendants <= 10 {
                specs.push(FamilySpec::Construction1 { clique, pendants });
            }
        }
    }
    for sizes in [vec![1, 1, 1], vec![1, 1, 2], vec![2, 2, 2], vec![1, 1, 1, 1], vec![2, 1, 1, 1]] {
        specs.push(FamilySpec::Construction2 { sizes });
    }
    specs
        .into_iter()
        .map(|s| (s.to_string(), s.build().unwrap()))
        .collect()
}

fn rows_for(graphs: &[(String, Graph)]) -> Vec<InvariantRow> {
    compute_rows(graphs, zfcover::DEFAULT_BUDGET)
        .into_iter()
        .map(|r| r.expect("corpus fits the budget"))
        .collect()
}

fn conjecture_recovery(corpus_rows: &[InvariantRow]) -> Check {
    let seeded = seeded_instances();
    for (id, g) in &seeded {
        ensure(g.is_claw_free() && g.is_connected(), || format!("{id} is not claw-free connected"))?;
    }
    let mut rows = corpus_rows.to_vec();
    rows.extend(rows_for(&seeded));
    let records =
        fit_linear_upper_bounds::<Rational>(&rows, Hypothesis::ClawFreeConnected, Invariant::Z, Invariant::Beta)
            .map_err(|e| e.to_string())?;
    let top = &records[0];
    ensure(top.m == Rational::from_integer(1) && top.b == Rational::from_integer(0), || {
        format!("top record is {top}")
    })?;
    ensure(top.status == Status::HoldsOnCorpus, || format!("{top}"))?;
    ensure(top.touch >= seeded.len(), || format!("touch {} < {} seeded", top.touch, seeded.len()))?;

    let rec = check_conjecture(
        ConjectureRecord::new(
            Hypothesis::Connected,
            Invariant::Z,
            Invariant::Beta,
            Rational::from_integer(1),
            Rational::from_integer(0),
        ),
        &rows,
    );
    let Status::Refuted(witness) = &rec.status else {
        return Err(format!("Z <= beta over connected graphs not refuted: {rec}"));
    };
    let w = parse_graph6(witness).map_err(|e| e.to_string())?;
    ensure(canonical_certificate(&w) == canonical_certificate(&Graph::star(3)), || {
        format!("witness {witness} is not K1,3")
    })?;
    ensure(z(&w) == 2 && beta(&w) == 1, || "witness values".into())?;
    Ok(format!(
        "top record z <= 1*beta + 0, touch {} >= {} seeded instances; connected corpus refuted by {witness} (K1,3: Z=2, beta=1)",
        top.touch,
        seeded.len()
    ))
}

fn conjecture_alpha(corpus_rows: &[InvariantRow]) -> Check {
    let report = check_named_statements(corpus_rows);
    let counterexamples = report.alpha_counterexamples();
    if !counterexamples.is_empty() {
        println!("HEADLINE: counterexamples to Z <= alpha+1: {}", counterexamples.join(" "));
        return Err(format!("{} counterexamples", counterexamples.len()));
    }
    ensure(!report.theorem_violation(), || "a proven statement failed".into())?;
    let support = report.get(zfcover::conjecture::Statement::ConjectureAlpha).support;
    Ok(format!("Z <= alpha+1 holds on all {support} connected subcubic non-K4 graphs with n <= 8"))
}

fn closure_properties(g: &Graph, a: VertexSet, b: VertexSet) -> Result<(), String> {
    let id = serialize_graph6(g);
    let ca = closure_set(g, a);
    ensure(closure_set(g, ca) == ca, || format!("{id}: closure not idempotent"))?;
    ensure(ca.is_subset(closure_set(g, a.union(b))), || format!("{id}: closure not monotone"))?;
    let cl = closure(g, a);
    let replayed = cl.trace.replay(g, a).map_err(|e| format!("{id}: {e}"))?;
    ensure(replayed == cl.final_set && cl.final_set == ca, || format!("{id}: trace replay mismatch"))?;
    let oracle: VertexSet = oracle_closure(g, &a.to_vec())
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(v, _)| v)
        .collect();
    ensure(oracle == ca, || format!("{id}: closure differs from oracle"))
}

fn structural_properties(g: &Graph) -> Result<(), String> {
    let id = serialize_graph6(g);
    let budget = Budget::unlimited();
    let mis = max_independent_set(g, &budget).map_err(|e| e.to_string())?;
    let vc = vertex_cover_number(g, &budget).map_err(|e| e.to_string())?;
    ensure(g.is_independent(mis) && g.is_vertex_cover(vc.cover), || format!("{id}: invalid MIS or cover"))?;
    ensure(mis.len() + vc.beta == g.n(), || format!("{id}: alpha + beta != n"))?;
    ensure(g.is_claw_free() != oracle_has_claw(g), || format!("{id}: claw test disagrees"))?;
    ensure(parse_graph6(&id).map_err(|e| e.to_string())? == *g, || format!("{id}: graph6 round trip"))
}

fn property_suites() -> Check {
    let mut rng = rng(7);
    let mut random = Vec::new();
    for _ in 0..1000 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.1..0.9);
        random.push(random_graph(&mut rng, n, p));
    }
    let exhaustive: Vec<Graph> = (1..=6).flat_map(all_graphs).collect();
    for g in random.iter().chain(&exhaustive) {
        let full = g.vertices().bits();
        let a = VertexSet::from_bits(rng.gen::<u128>() & full);
        let b = VertexSet::from_bits(rng.gen::<u128>() & full);
        closure_properties(g, a, b)?;
        structural_properties(g)?;
    }
    let mut oracle_checked = 0;
    for g in exhaustive.iter().filter(|g| g.is_connected()) {
        let id = serialize_graph6(g);
        ensure(z(g) == oracle_z(g), || format!("{id}: Z differs from oracle"))?;
        let alpha = independence_number(g, &Budget::unlimited()).unwrap();
        ensure(alpha == oracle_alpha(g), || format!("{id}: alpha differs from oracle"))?;
        oracle_checked += 1;
    }
    Ok(format!(
        "1000 seeded random graphs (seed 7) + {} graphs with n <= 6; oracle agreement on {oracle_checked} connected graphs",
        exhaustive.len()
    ))
}

fn main() -> ExitCode {
    let corpus = connected_upto(8);
    let corpus_rows = rows_for(
        &corpus
            .iter()
            .map(|g| (serialize_graph6(g), g.clone()))
            .collect::<Vec<_>>(),
    );
    let criteria: Vec<Criterion> = vec![
        ("theorem1-sweep", Box::new(|| theorem1_sweep(&corpus))),
        ("theorem2-sweep", Box::new(|| theorem2_sweep(&corpus))),
        ("point-values", Box::new(point_values)),
        ("caro-pepper", Box::new(caro_pepper)),
        ("join-theorems", Box::new(join_theorems)),
        ("lsva-lemma", Box::new(lsva_lemma)),
        ("conjecture-recovery", Box::new(|| conjecture_recovery(&corpus_rows))),
        ("conjecture-alpha", Box::new(|| conjecture_alpha(&corpus_rows))),
        ("property-suites", Box::new(property_suites)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("acceptance {} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("acceptance {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    println!("acceptance summary: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
