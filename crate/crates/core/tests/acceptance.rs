//! Acceptance gate: one PASS/FAIL line per criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use critgraph::canon::{are_isomorphic, canonical_form};
use critgraph::domination::{certify_criticality, domination_number, DvReading};
use critgraph::harness::{
    reconstruct_case_1_2, reconstruct_case_3_2, reconstruct_case_4_2, run_suite, verify_2critical,
    verify_3connectivity, verify_cut_lemma, verify_facts, verify_theorem_matching, with_workers, Corpus, Parity, Suite,
};
use critgraph::matching::{
    has_near_perfect_matching, has_perfect_matching, matching_number_within, near_pm_witness,
};
use critgraph::named::NamedGraph;
use critgraph::structure::is_star_free;
use critgraph::{components_after_deletion, Graph, VertexSet};

use common::{brute_gamma, brute_max_surplus, brute_nu, random_graph, rng};

struct Gate {
    failures: usize,
}

impl Gate {
    fn check(&mut self, id: u32, title: &str, limit: Duration, f: impl FnOnce() -> Result<String, String>) {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; exceeded {limit:?}")),
            Err(e) => (false, e),
        };
        if !ok {
            self.failures += 1;
        }
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {id:>2}. {title}: {detail} ({:.2}s)", elapsed.as_secs_f64());
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn named(s: &str) -> Graph {
    s.parse::<NamedGraph>().unwrap().build().unwrap()
}

fn main() -> ExitCode {
    let mut gate = Gate { failures: 0 };
    let min = |m: u64| Duration::from_secs(60 * m);

    let small = Corpus::exhaustive(7).unwrap();
    let t = Instant::now();
    let full = Corpus::exhaustive(9).unwrap();
    println!("exhaustive corpus n<=9: {} graphs in {:.2}s", full.graphs.len(), t.elapsed().as_secs_f64());

    gate.check(1, "blossom matching number equals brute force on all graphs n<=7", min(1), || {
        for g in &small.graphs {
            let got = matching_number_within(g, g.vertices());
            let want = brute_nu(g, g.vertices());
            ensure(got == want, format!("{}: {got} != {want}", canonical_form(g)))?;
        }
        let n7 = small.graphs.iter().filter(|g| g.order() == 7).count();
        ensure(n7 == 1044, format!("{n7} classes at n=7"))?;
        Ok(format!("{} graphs, {n7} at n=7", small.graphs.len()))
    });

    gate.check(2, "branch-and-bound domination number equals brute force", min(2), || {
        for g in &small.graphs {
            ensure(domination_number(g).gamma == brute_gamma(g), canonical_form(g))?;
        }
        let mut r = rng(2);
        for i in 0..500 {
            let n = 1 + i % 12;
            let g = random_graph(&mut r, n, [0.1, 0.25, 0.5, 0.75][i % 4]);
            ensure(domination_number(&g).gamma == brute_gamma(&g), canonical_form(&g))?;
        }
        Ok(format!("{} exhaustive + 500 random (seed 2)", small.graphs.len()))
    });

    gate.check(3, "2-critical graphs are exactly the cocktail party graphs, n<=9", min(10), || {
        let r = verify_2critical(&full);
        ensure(r.passed(), format!("violations: {:?}", r.violations))?;
        for c in &r.counts {
            let want = usize::from(c.order % 2 == 0);
            ensure(c.candidates == want && c.passed == want, format!("order {}: {c:?}", c.order))?;
        }
        for n in [2, 4, 6, 8] {
            let cp = named(&format!("cocktail_party:{}", n / 2));
            let found = full.graphs.iter().filter(|g| g.order() == n).find(|g| are_isomorphic(g, &cp));
            ensure(found.is_some(), format!("cocktail party missing at {n}"))?;
        }
        Ok("one per even order, none per odd order".into())
    });

    gate.check(4, "near-perfect matching iff no S with c_o(G-S) >= |S|+3", min(5), || {
        let mut r = rng(4);
        let (mut with, mut without) = (0, 0);
        for i in 0..500 {
            let n = [3, 5, 7, 9, 11][i % 5];
            let g = random_graph(&mut r, n, [0.08, 0.15, 0.25, 0.4][i % 4]);
            let npm = has_near_perfect_matching(&g);
            let brute = brute_max_surplus(&g) < 3;
            let witness = near_pm_witness(&g).unwrap();
            ensure(npm == brute, format!("{}: npm={npm} brute={brute}", canonical_form(&g)))?;
            ensure(witness.is_none() == npm, format!("{}: witness disagrees", canonical_form(&g)))?;
            if let Some(w) = witness {
                let odd = components_after_deletion(&g, w.s).odd_count;
                ensure(odd >= w.s.len() + 3, "witness too weak")?;
            }
            if npm {
                with += 1;
            } else {
                without += 1;
            }
        }
        Ok(format!("500 graphs (seed 4): {with} with, {without} without"))
    });

    gate.check(5, "case 1.2 search yields exactly the nine-vertex graph", Duration::from_secs(1), || {
        let found = reconstruct_case_1_2();
        ensure(found.len() == 1, format!("{} classes", found.len()))?;
        let g = &found[0];
        ensure(are_isomorphic(g, &named("fig1_nine_vertex")), "not the nine-vertex graph")?;
        let cert = certify_criticality(g, DvReading::Choosable);
        ensure(g.order() == 9 && cert.gamma == 3 && cert.is_vertex_critical, "not 3-critical of order 9")?;
        ensure(cert.facts.as_ref().is_some_and(|f| f.all_hold()), "facts fail")?;
        ensure(is_star_free(g, 5).free, "not K_{1,5}-free")?;
        let w = near_pm_witness(g).unwrap().ok_or("has a near-perfect matching")?;
        ensure(w.s.len() == 3 && w.summary.odd_count == 6, format!("witness {:?}", w.s))?;
        Ok(canonical_form(g))
    });

    gate.check(6, "matching conclusions over n<=9 with the expected exception", min(15), || {
        let even = verify_theorem_matching(&full, 6, Parity::Even).map_err(|e| e.to_string())?;
        ensure(even.passed() && even.exceptions.is_empty(), format!("even: {:?}", even.violations))?;
        let odd = verify_theorem_matching(&full, 7, Parity::Odd).map_err(|e| e.to_string())?;
        ensure(odd.passed(), format!("odd: {:?}", odd.violations))?;
        let fig1 = canonical_form(&named("fig1_nine_vertex"));
        ensure(odd.exception_graph6() == vec![fig1.as_str()], format!("exceptions {:?}", odd.exception_graph6()))?;
        ensure(odd.exceptions.iter().all(|e| e.reverify() && e.order == 9), "exception does not re-verify")?;
        Ok(format!("even: {} candidates; odd: {} candidates, exception {fig1}", even.candidates(), odd.candidates()))
    });

    gate.check(7, "case 4.2 search yields exactly two graphs of order 15", min(30), || {
        let found = reconstruct_case_4_2();
        ensure(found.len() == 2, format!("{} classes", found.len()))?;
        let s = VertexSet::full(6);
        for g in &found {
            let cert = certify_criticality(g, DvReading::Choosable);
            ensure(g.order() == 15 && cert.gamma == 3 && cert.is_vertex_critical, "not 3-critical of order 15")?;
            ensure(is_star_free(g, 7).free, "not K_{1,7}-free")?;
            ensure(!has_near_perfect_matching(g), "has a near-perfect matching")?;
            let rest = g.vertices().difference(s);
            ensure(rest.iter().all(|x| !g.neighbors(x).intersects(rest)), "G-S not independent")?;
            ensure(rest.iter().all(|x| g.degree(x) == 4), "G-S degree not 4")?;
        }
        ensure(!are_isomorphic(&found[0], &found[1]), "duplicate class")?;
        Ok(found.iter().map(canonical_form).collect::<Vec<_>>().join(", "))
    });

    gate.check(8, "case 3.2 search finds graphs of order 12 and 13", min(60), || {
        let six = reconstruct_case_3_2(6).map_err(|e| e.to_string())?;
        let seven = reconstruct_case_3_2(7).map_err(|e| e.to_string())?;
        ensure(!six.is_empty() && six.iter().all(|g| g.order() == 12 && !has_perfect_matching(g)), "k=6")?;
        ensure(!seven.is_empty() && seven.iter().all(|g| g.order() == 13 && !has_near_perfect_matching(g)), "k=7")?;
        Ok(format!("k=6: {} classes, k=7: {} classes", six.len(), seven.len()))
    });

    gate.check(9, "cut structure, D_v facts and 3-connectivity over n<=9", min(15), || {
        let cut = verify_cut_lemma(&full);
        let facts = verify_facts(&full);
        let conn = verify_3connectivity(&full);
        for r in [&cut, &facts, &conn] {
            ensure(r.passed(), format!("{}: {:?}", r.suite, r.violations))?;
        }
        Ok(format!(
            "{} cut-lemma, {} facts, {} connectivity candidates",
            cut.candidates(),
            facts.candidates(),
            conn.candidates()
        ))
    });

    gate.check(10, "reports identical across worker counts", min(10), || {
        let suites = ["2critical", "matching:6:even", "matching:7:odd", "cut-lemma", "3conn", "facts"];
        for name in suites {
            let suite: Suite = name.parse().unwrap();
            let render = |w: usize| {
                with_workers(w, || serde_json::to_string(&run_suite(&full, suite)).unwrap()).unwrap()
            };
            ensure(render(1) == render(4), format!("{name} differs"))?;
        }
        let a = with_workers(1, reconstruct_case_4_2).unwrap();
        let b = with_workers(4, reconstruct_case_4_2).unwrap();
        ensure(a == b, "case 4.2 search differs")?;
        Ok(format!("{} suites + case 4.2 search, 1 vs 4 workers", suites.len()))
    });

    println!("{} failed", gate.failures);
    if gate.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
