//! End-to-end acceptance criteria. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cgraph::builders::{cross_check_class2, verify_correspondence};
use cgraph::constructions::{dihedral, frobenius, generalized_dihedral, gothic, gothic_paths, named_example, BuiltGroup, KernelKind, NamedExample};
use cgraph::fp::VecFp;
use cgraph::graph::isomorphic;
use cgraph::verifier::{
    abelian_invariants, format_invariants, run_suite, two_independent_bound, unique_independent_isolated, Corpus,
    Subject, CROSS_CHECK_ORDER,
};

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn class2_subject(g: cgraph::fp::Class2Group) -> Subject {
    Subject::from_class2(g, 1 << 16).expect("class-2 subject")
}

/// Γ_Z vertex holding the coset of the generator x_i (1-based).
fn generator_vertex(s: &Subject, i: usize) -> usize {
    let g = s.class2.as_ref().expect("class-2");
    let v = VecFp::unit(g.n(), i - 1);
    s.class_of_coset[v.lex_index(g.p())]
}

fn example_one() -> Verdict {
    let mut seen = Vec::new();
    for p in [2u32, 3] {
        let s = class2_subject(named_example(NamedExample::Example1, p).unwrap());
        let want = (p as usize).pow(3);
        ensure(s.isolated_count() == want, || format!("p={p}: {} isolated, want {want}", s.isolated_count()))?;
        let nontrivial = s.nontrivial_components();
        ensure(nontrivial.len() == 1, || format!("p={p}: {} nontrivial components", nontrivial.len()))?;
        let x2 = generator_vertex(&s, 2);
        let x4 = generator_vertex(&s, 4);
        let independent: Vec<usize> =
            nontrivial[0].vertices.iter().copied().filter(|&k| !s.gamma_roles[k].is_subordinate()).collect();
        ensure(independent == vec![x2], || format!("p={p}: independent vertices {independent:?}, want C(x2)"))?;
        ensure(s.gamma.degree(x4) == 0, || format!("p={p}: C(x4) is not isolated"))?;
        seen.push(format!("p={p}: {want} isolated, C(x2) unique independent"));
    }
    Ok(seen.join("; "))
}

fn gothic_three_component() -> Verdict {
    let s = class2_subject(gothic(3, &[3]).unwrap());
    let comp = s
        .gamma_components
        .iter()
        .find(|c| c.len() == 9)
        .ok_or("no 9-vertex component")?;
    let labels: BTreeSet<&str> = comp.vertices.iter().map(|&k| s.vertex_label(k)).collect();
    let want_labels: BTreeSet<&str> = [
        "Z(x4)", "Z(x2*x4)", "Z(x2*x4^2)", "Z(x3)", "Z(x2*x3)", "Z(x2)", "Z(x1)", "Z(x1*x3)", "Z(x1*x3^2)",
    ]
    .into_iter()
    .collect();
    ensure(labels == want_labels, || format!("labels {labels:?}"))?;
    let mut edges = BTreeSet::new();
    for &u in &comp.vertices {
        for v in s.gamma.neighbors(u) {
            let (a, b) = (s.vertex_label(u), s.vertex_label(v));
            edges.insert(if a < b { (a, b) } else { (b, a) });
        }
    }
    let want_edges: BTreeSet<(&str, &str)> = [
        ("Z(x3)", "Z(x4)"),
        ("Z(x2*x4)", "Z(x3)"),
        ("Z(x2*x4^2)", "Z(x3)"),
        ("Z(x2*x3)", "Z(x3)"),
        ("Z(x2)", "Z(x3)"),
        ("Z(x2)", "Z(x2*x3)"),
        ("Z(x1)", "Z(x2)"),
        ("Z(x1*x3)", "Z(x2)"),
        ("Z(x1*x3^2)", "Z(x2)"),
    ]
    .into_iter()
    .collect();
    ensure(edges == want_edges, || format!("edges {edges:?}"))?;
    ensure(comp.diameter == 3, || format!("diameter {}", comp.diameter))?;
    let hubs: Vec<&str> = comp
        .vertices
        .iter()
        .filter(|&&k| s.gamma.degree(k) == 5)
        .map(|&k| s.vertex_label(k))
        .collect();
    ensure(hubs == ["Z(x3)", "Z(x2)"] || hubs == ["Z(x2)", "Z(x3)"], || format!("hubs {hubs:?}"))?;
    Ok("9 vertices, 9 edges, hubs Z(x2) and Z(x3), diameter 3".into())
}

fn gothic_components() -> Verdict {
    let mut seen = Vec::new();
    for (p, parts) in [(2u32, vec![2usize, 2]), (2, vec![3, 2]), (3, vec![3, 2])] {
        let s = class2_subject(gothic(p, &parts).unwrap());
        let nontrivial = s.nontrivial_components().len();
        ensure(nontrivial == parts.len(), || format!("G_{p}{parts:?}: {nontrivial} nontrivial components"))?;
        let mut observed = Vec::new();
        for ((first, _), &ni) in gothic_paths(&parts).iter().zip(&parts) {
            let comp = &s.gamma_components[s.gamma_component_of[generator_vertex(&s, *first)]];
            ensure(comp.diameter >= ni && comp.diameter <= ni + 2, || {
                format!("G_{p}{parts:?}: path at x{first} has diameter {} outside [{ni}, {}]", comp.diameter, ni + 2)
            })?;
            observed.push(format!("{}(n={ni})", comp.diameter));
        }
        seen.push(format!("G_{p}{parts:?} diameters {}", observed.join(",")));
    }
    Ok(seen.join("; "))
}

const THEOREM_CHECKS: [&str; 12] = [
    "derivedBound",
    "p3CA",
    "p45Diameter",
    "p4Isolated",
    "classN",
    "isolatedEquiv",
    "independentComponentEquiv",
    "indDiam",
    "primeIndexIsolated",
    "caEmpty",
    "fGroupIndependent",
    "subNonabelian",
];

fn theorem_suite() -> Verdict {
    let report = run_suite(&Corpus::default_corpus(), &THEOREM_CHECKS).map_err(|e| e.to_string())?;
    if let Some(r) = report.failures().next() {
        return Err(format!("{} failed on {}: {}", r.check_id, r.group, r.witness));
    }
    let vacuous = report.vacuous_checks();
    ensure(vacuous.is_empty(), || format!("never applicable: {vacuous:?}"))?;
    for group in ["D16", "Q16", "SD16", "D32"] {
        let r = report
            .results_for("classN")
            .find(|r| r.group == group)
            .ok_or_else(|| format!("classN not run on {group}"))?;
        ensure(r.hypothesis && r.passed(), || format!("classN on {group}: {}", r.witness))?;
    }
    let s = report.summary();
    Ok(format!("{} pass, {} fail, {} vacuous over {} groups", s.pass, s.fail, s.vacuous, report.corpus.len()))
}

fn oracle_equivalence() -> Verdict {
    let corpus = Corpus::default_corpus();
    let mut checked = Vec::new();
    for e in &corpus.entries {
        let cgraph::verifier::EntrySource::Family(spec) = &e.source else { continue };
        let BuiltGroup::Class2(g) = spec.build().map_err(|e| e.to_string())? else { continue };
        let Some(order) = g.order().filter(|&o| o <= CROSS_CHECK_ORDER) else { continue };
        let cross = cross_check_class2(&g, order as usize).map_err(|e| e.to_string())?;
        ensure(cross.passed(), || format!("{}: {:?}", g.name(), cross.mismatches))?;
        let table = g.expand_to_table(order as usize).map_err(|e| e.to_string())?;
        let corr = verify_correspondence(&table).map_err(|e| e.to_string())?;
        ensure(corr.passed(), || format!("{}: {:?}", g.name(), corr.failures))?;
        checked.push(format!("{}({order})", g.name()));
    }
    ensure(checked.len() >= 6, || format!("only {} instances", checked.len()))?;
    Ok(checked.join(", "))
}

fn dihedral_counterexample() -> Verdict {
    let d18 = dihedral(18).unwrap();
    let gd = generalized_dihedral(&[3, 3]).unwrap();
    let a = Subject::from_table(d18.clone()).map_err(|e| e.to_string())?;
    let b = Subject::from_table(gd.clone()).map_err(|e| e.to_string())?;
    let (ga, gb) = (&a.elements.graph, &b.elements.graph);
    let f = isomorphic(ga, gb).map_err(|e| e.to_string())?.ok_or("commuting graphs not isomorphic")?;
    let bijective = f.iter().collect::<BTreeSet<_>>().len() == f.len() && f.len() == gb.vertex_count();
    let preserved = (0..f.len()).all(|u| (0..f.len()).all(|v| ga.has_edge(u, v) == gb.has_edge(f[u], f[v])));
    ensure(bijective && preserved, || "witness is not an isomorphism".into())?;
    let ia = abelian_invariants(&d18, &d18.derived_subgroup()).ok_or("D18′ not abelian")?;
    let ib = abelian_invariants(&gd, &gd.derived_subgroup()).ok_or("GD18′ not abelian")?;
    ensure(ia == [9] && ib == [3, 3], || format!("invariants {ia:?} vs {ib:?}"))?;
    Ok(format!(
        "{}-vertex witness verified; G′ {} vs {}",
        f.len(),
        format_invariants(&ia),
        format_invariants(&ib)
    ))
}

fn frobenius_example() -> Verdict {
    let f14 = frobenius(KernelKind::Cyclic, 7, 2, None).unwrap();
    let f21 = frobenius(KernelKind::Cyclic, 7, 3, None).unwrap();
    let f42 = frobenius(KernelKind::Cyclic, 7, 6, None).unwrap();
    let h42 = f14.direct_product(&cgraph::constructions::cyclic(3).unwrap(), 1 << 10).unwrap();
    let subjects: Vec<Subject> =
        [f14, f21, f42, h42].into_iter().map(|t| Subject::from_table(t).expect("nonabelian")).collect();
    for s in &subjects {
        ensure(s.gamma.vertex_count() == 8 && s.gamma.edge_count() == 0, || {
            format!("{}: {} vertices, {} edges", s.name, s.gamma.vertex_count(), s.gamma.edge_count())
        })?;
    }
    let (f42, h42) = (&subjects[2].elements.graph, &subjects[3].elements.graph);
    ensure(f42.vertex_count() == 41 && h42.vertex_count() == 39, || {
        format!("commuting vertex counts {} vs {}", f42.vertex_count(), h42.vertex_count())
    })?;
    ensure(isomorphic(f42, h42).map_err(|e| e.to_string())?.is_none(), || "commuting graphs isomorphic".into())?;
    Ok("four graphs of 8 isolated vertices; commuting graphs 41 vs 39 vertices".into())
}

fn p4_arithmetic() -> Verdict {
    for p in [2u128, 3, 5, 7, 11] {
        let unique = unique_independent_isolated(p, p.pow(4), p.pow(3));
        let bound = two_independent_bound(p);
        ensure(unique == p.pow(3) && bound == p.pow(3) - p.pow(2), || format!("closed forms at p={p}"))?;
    }
    let report = run_suite(&Corpus::default_corpus(), &["p4Isolated"]).map_err(|e| e.to_string())?;
    let mut seen = Vec::new();
    for r in report.results_for("p4Isolated").filter(|r| r.hypothesis) {
        ensure(r.passed(), || format!("{}: {}", r.group, r.witness))?;
        seen.push(format!(
            "{} {} {}",
            r.group,
            r.witness["branch"].as_str().unwrap_or("?"),
            r.witness["isolated"].as_str().unwrap_or("?")
        ));
    }
    for branch in ["uniqueIndependent", "twoIndependent"] {
        ensure(seen.iter().any(|s| s.contains(branch)), || format!("no instance of the {branch} branch"))?;
    }
    Ok(seen.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict, Duration); 8] = [
        ("1 example1 isolated vertices", example_one, Duration::from_secs(5)),
        ("2 Gothic_3(3) diameter-3 component", gothic_three_component, Duration::from_secs(5)),
        ("3 gothic component diameters", gothic_components, Duration::from_secs(30)),
        ("4 theorem suite", theorem_suite, Duration::from_secs(60)),
        ("5 oracle equivalence", oracle_equivalence, Duration::from_secs(60)),
        ("6 D18 counterexample", dihedral_counterexample, Duration::from_secs(5)),
        ("7 Frobenius centralizer graphs", frobenius_example, Duration::from_secs(5)),
        ("8 p^4 isolated-vertex arithmetic", p4_arithmetic, Duration::from_secs(5)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; took {elapsed:?}, budget {budget:?}")),
            other => other,
        };
        match verdict {
            Ok(detail) => println!("PASS criterion {name} ({} ms): {detail}", elapsed.as_millis()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({} ms): {why}", elapsed.as_millis());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
