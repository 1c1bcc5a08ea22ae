//! Acceptance gate. Runs every criterion and prints one PASS/FAIL line each;
//! the process exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lsg_core::graph::Extent;
use lsg_core::harness::{
    run_suite, subset_clique_bound, CorpusSpec, ModuleAnalysis, SuiteOptions, TheoremId,
};
use lsg_core::predicates::{is_large_brute, is_large_by_socle};
use lsg_core::{Caps, Element, ModuleSpec, SimpleGraph};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn analyse(s: &str) -> ModuleAnalysis {
    ModuleAnalysis::new(&s.parse().unwrap(), &Caps::default()).unwrap()
}

fn criterion_1() -> Check {
    let a = analyse("Z:2,4");
    let g = &a.graph;
    ensure(
        g.vertex_count() == 5,
        format!("{} vertices", g.vertex_count()),
    )?;
    let mins: Vec<Vec<Element>> = a
        .report
        .minimal_submodules
        .iter()
        .map(|s| s.generators())
        .collect();
    let expect: Vec<Vec<Element>> = [[0, 2], [1, 0], [1, 2]]
        .iter()
        .map(|c| vec![Element::new(c.to_vec())])
        .collect();
    ensure(mins == expect, format!("Min(M) = {mins:?}"))?;
    ensure(!a.invariants.connected, "graph is connected")?;
    ensure(
        !a.report.is_comultiplication(),
        "module reported as comultiplication",
    )?;
    ensure(
        a.invariants.clique_number == Some(2),
        format!("omega = {:?}", a.invariants.clique_number),
    )?;
    // N1 = <(0,1)>, N2 = <(0,2)>, N4 = <(1,1)>.
    let find = |c: [u64; 2]| {
        (0..g.vertex_count())
            .find(|&v| g.vertex(v).generators() == vec![Element::new(c.to_vec())])
            .unwrap()
    };
    let (n1, n2, n4) = (find([0, 1]), find([0, 2]), find([1, 1]));
    let mut expect = vec![(n1.min(n2), n1.max(n2)), (n2.min(n4), n2.max(n4))];
    expect.sort();
    ensure(
        g.graph().edges() == expect,
        format!("edges {:?}", g.graph().edges()),
    )?;
    Ok("Z:2,4 has 5 vertices, 3 atoms, edges {N1-N2, N2-N4}, omega 2, not comultiplication".into())
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let opts = SuiteOptions {
        theorems: TheoremId::THEOREMS.to_vec(),
        ..SuiteOptions::default()
    };
    let report = run_suite(&CorpusSpec::cyclic(2, 500), &opts);
    let elapsed = start.elapsed();
    ensure(report.summary.module_errors == 0, "module errors")?;
    ensure(
        report.summary.comultiplication_modules == 499,
        format!(
            "{} comultiplication modules",
            report.summary.comultiplication_modules
        ),
    )?;
    ensure(
        report.summary.total.inconclusive == 0,
        "inconclusive checks",
    )?;
    ensure(
        elapsed <= Duration::from_secs(120),
        format!("took {elapsed:?}"),
    )?;
    let violations: Vec<_> = report.violations().collect();
    if !violations.is_empty() {
        let ids: BTreeSet<String> = violations
            .iter()
            .map(|v| v.theorem_id.to_string())
            .collect();
        let first: Vec<&str> = violations
            .iter()
            .take(3)
            .map(|v| v.module_spec.as_str())
            .collect();
        return Err(format!(
            "{} violations among applicable checks (ids {:?}; first on {}) in {:.1?}",
            violations.len(),
            ids,
            first.join(", "),
            elapsed
        ));
    }
    Ok(format!("499 modules, zero violations in {elapsed:.1?}"))
}

fn criterion_3() -> Check {
    let mut specs = CorpusSpec::cyclic(2, 200).modules();
    specs.extend(CorpusSpec::two_factor(8).modules());
    let mut checked = 0;
    for spec in &specs {
        let m = spec.build(&Caps::default()).map_err(|e| e.to_string())?;
        let lattice = lsg_core::SubmoduleLattice::enumerate(&m, &Caps::default())
            .map_err(|e| e.to_string())?;
        let soc = lsg_core::predicates::socle(&lattice);
        for n in lattice.submodules() {
            ensure(
                is_large_brute(&lattice, n) == is_large_by_socle(&soc, n),
                format!("{spec}: disagreement on {}", n.label()),
            )?;
            checked += 1;
        }
    }
    Ok(format!(
        "{} modules, {checked} submodules agree",
        specs.len()
    ))
}

// Naive oracles on adjacency matrices.

fn adj(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n)
        .map(|a| (0..n).map(|b| g.has_edge(a, b)).collect())
        .collect()
}

fn naive_diameter(m: &[Vec<bool>]) -> Option<Extent> {
    let n = m.len();
    if n == 0 {
        return None;
    }
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                d[i][j] = 0;
            } else if m[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let max = d.iter().flatten().copied().max().unwrap();
    Some(if max >= INF {
        Extent::Infinite
    } else {
        Extent::Finite(max)
    })
}

fn naive_girth(m: &[Vec<bool>]) -> Extent {
    // Shortest simple cycle by exhaustive path extension.
    fn extend(m: &[Vec<bool>], path: &mut Vec<usize>, best: &mut usize) {
        let (start, last) = (path[0], *path.last().unwrap());
        if path.len() >= 3 && m[last][start] {
            *best = (*best).min(path.len());
        }
        if path.len() >= *best {
            return;
        }
        for v in 0..m.len() {
            if v > start && m[last][v] && !path.contains(&v) {
                path.push(v);
                extend(m, path, best);
                path.pop();
            }
        }
    }
    let mut best = usize::MAX;
    for s in 0..m.len() {
        extend(m, &mut vec![s], &mut best);
    }
    if best == usize::MAX {
        Extent::Infinite
    } else {
        Extent::Finite(best)
    }
}

fn component_count(m: &[Vec<bool>], removed: Option<usize>) -> usize {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] || Some(s) == removed {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if m[v][w] && !seen[w] && Some(w) != removed {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

fn naive_cut_vertices(m: &[Vec<bool>]) -> Vec<usize> {
    let base = component_count(m, None);
    (0..m.len())
        .filter(|&v| component_count(m, Some(v)) > base)
        .collect()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << n)).map(move |mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
}

fn naive_omega(m: &[Vec<bool>]) -> usize {
    subsets(m.len())
        .filter(|s| s.iter().all(|&a| s.iter().all(|&b| a == b || m[a][b])))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

fn naive_alpha(m: &[Vec<bool>]) -> usize {
    subsets(m.len())
        .filter(|s| s.iter().all(|&a| s.iter().all(|&b| !m[a][b])))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

fn naive_gamma(m: &[Vec<bool>]) -> usize {
    let n = m.len();
    subsets(n)
        .filter(|s| (0..n).all(|v| s.contains(&v) || s.iter().any(|&d| m[d][v])))
        .map(|s| s.len())
        .min()
        .unwrap_or(0)
}

fn criterion_4() -> Check {
    let mut specs = CorpusSpec::cyclic(2, 500).modules();
    specs.extend(CorpusSpec::two_factor(12).modules());
    let mut graphs = 0;
    let mut seen = BTreeSet::new();
    for spec in &specs {
        let a = ModuleAnalysis::new(spec, &Caps::default()).map_err(|e| e.to_string())?;
        let g = a.graph.graph();
        if g.vertex_count() == 0 || g.vertex_count() > 8 {
            continue;
        }
        graphs += 1;
        seen.insert(g.edges());
        let m = adj(g);
        let inv = &a.invariants;
        let ctx = |what: &str| format!("{spec}: {what} disagrees");
        ensure(inv.diameter == naive_diameter(&m), ctx("diameter"))?;
        ensure(inv.girth == Some(naive_girth(&m)), ctx("girth"))?;
        ensure(
            inv.cut_vertices == naive_cut_vertices(&m),
            ctx("cut vertices"),
        )?;
        ensure(inv.clique_number == Some(naive_omega(&m)), ctx("omega"))?;
        ensure(
            inv.independence_number == Some(naive_alpha(&m)),
            ctx("alpha"),
        )?;
        ensure(inv.domination_number == Some(naive_gamma(&m)), ctx("gamma"))?;
    }
    Ok(format!(
        "{graphs} graphs ({} distinct edge sets) match exhaustive recomputation",
        seen.len()
    ))
}

fn criterion_5() -> Check {
    let a = analyse("Z:30");
    let i = &a.invariants;
    ensure(i.vertex_count == 6 && i.edge_count == 9, "Z:30 size")?;
    ensure(i.diameter == Some(Extent::Finite(2)), "Z:30 diameter")?;
    ensure(i.girth == Some(Extent::Finite(3)), "Z:30 girth")?;
    ensure(
        i.clique_number == Some(3) && i.independence_number == Some(3),
        "Z:30 omega/alpha",
    )?;
    ensure(i.domination_number == Some(2), "Z:30 gamma")?;
    ensure(i.cut_vertices.is_empty(), "Z:30 cut vertices")?;

    let a = analyse("Z:12");
    let pend: Vec<u64> = a
        .invariants
        .pendant_vertices
        .iter()
        .map(|&v| a.graph.vertex(v).order())
        .collect();
    ensure(pend == vec![2, 4], format!("Z:12 pendant orders {pend:?}"))?;
    let mut sizes: Vec<usize> = a
        .invariants
        .component_vertex_sets
        .iter()
        .map(Vec::len)
        .collect();
    sizes.sort_unstable();
    ensure(
        sizes == vec![1, 2],
        format!("Z:12 component sizes {sizes:?}"),
    )?;

    let a = analyse("Z:36");
    let i = &a.invariants;
    ensure(
        i.regular_degree == Some(1),
        format!("Z:36 regular degree {:?}", i.regular_degree),
    )?;
    ensure(i.vertex_count == 4, "Z:36 vertex count")?;
    Ok("Z:30, Z:12 and Z:36 values match".into())
}

fn criterion_6() -> Check {
    for (n, min) in [(30u64, 3usize), (210, 4)] {
        let a = analyse(&format!("Z:{n}"));
        ensure(
            a.min_count() == min,
            format!("Z:{n} has {} atoms", a.min_count()),
        )?;
        let omega = a.invariants.clique_number.ok_or("clique search aborted")?;
        ensure(omega >= min, format!("Z:{n}: omega {omega} < |Min|"))?;
        ensure(
            omega as u128 >= subset_clique_bound(min),
            format!("Z:{n}: omega {omega} < 2^(|Min|-1)-1"),
        )?;
    }
    let a = analyse("Z:210");
    let family = a.subset_sum_family(0).ok_or("family not formed")?;
    ensure(family.len() == 7, format!("family size {}", family.len()))?;
    ensure(a.is_clique(&family), "family is not a clique")?;
    Ok("bounds hold for Z:30 and Z:210; subset-sum family in Z:210 is a 7-clique".into())
}

fn criterion_7() -> Check {
    let opts = SuiteOptions::default();
    let corpus = CorpusSpec::cyclic(2, 200);
    let a = run_suite(&corpus, &opts).to_json();
    let b = run_suite(&corpus, &opts).to_json();
    ensure(a == b, "reports differ")?;
    Ok(format!(
        "two cyclic(2..=200) JSON reports are byte-identical ({} bytes)",
        a.len()
    ))
}

fn criterion_8() -> Check {
    let opts = SuiteOptions {
        catalog: true,
        ..SuiteOptions::default()
    };
    let report = run_suite(&CorpusSpec::two_factor(12), &opts);
    let catalog = report.catalog.as_ref().ok_or("no catalog")?;
    for module in ["Z:2,2", "Z:2,4"] {
        let entry = catalog
            .iter()
            .find(|c| c.module_spec == module)
            .ok_or(format!("{module} missing from catalog"))?;
        let w = entry
            .comultiplication_witness
            .as_ref()
            .ok_or("no witness")?;
        let d = entry
            .double_annihilator
            .as_ref()
            .ok_or("no double annihilator")?;
        ensure(
            w.order < d.order,
            format!("{module}: witness not a strict failure"),
        )?;
        // Recompute the failure directly.
        let m = ModuleSpec::over_z(if module == "Z:2,2" { &[2, 2] } else { &[2, 4] })
            .build(&Caps::default())
            .unwrap();
        let gens: Vec<Element> = w
            .generators
            .iter()
            .map(|g| Element::new(g.clone()))
            .collect();
        let n = lsg_core::Submodule::generate(&m, &gens).unwrap();
        let back = lsg_core::annihilator_in_module(&m, &n.annihilator());
        ensure(
            back.order() == d.order && back != n,
            format!("{module}: recomputed failure differs"),
        )?;
    }
    let modules: BTreeSet<&str> = catalog.iter().map(|c| c.module_spec.as_str()).collect();
    Ok(format!(
        "{} entries over {} non-comultiplication modules, Z:2,2 and Z:2,4 witnesses present",
        catalog.len(),
        modules.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 Z:2,4 reproduction", criterion_1),
        ("2 main theorem sweep", criterion_2),
        ("3 largeness oracle equivalence", criterion_3),
        ("4 graph-invariant oracles", criterion_4),
        ("5 specific derived values", criterion_5),
        ("6 clique lower bounds", criterion_6),
        ("7 determinism", criterion_7),
        ("8 negative-space catalog", criterion_8),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(msg) => println!("PASS criterion {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
