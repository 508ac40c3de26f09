//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p splitoff-cli --test acceptance`. Criteria that
//! sweep exhaustive corpora are parallel; results never depend on thread
//! scheduling.


use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use splitoff::augmentation::{
    augment, certificate_bruteforce, minimal_extension, verify_certificate,
};
use splitoff::connectivity::{check, check_bruteforce, check_in_v};
use splitoff::construction::{decompose, generate, k_k3, replay};
use splitoff::splitting::{
    complete_splitting, find_blocking_biset, verify_obstacle, SplitOutcome, SplitPair,
};
use splitoff::{BiSet, ConnParams, Error, GroundMode, MultiGraph, VertexId, VertexSet};

use corpus::Bounds;
use oracles::Literal;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(k: u32) -> ConnParams {
    ConnParams::new(k).unwrap()
}

fn v(i: u32) -> VertexId {
    VertexId(i)
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn load(name: &str) -> MultiGraph {
    MultiGraph::parse(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    ensure(load("kk3_k2.txt") == k_k3(p(2)), || {
        "fixture differs from 2K3".into()
    })?;
    for k in 1..=4 {
        let g = k_k3(p(k));
        ensure(check(&g, p(k)).ok, || format!("kK3 fails for k = {k}"))?;
        ensure(oracles::connected(&g, None, k), || {
            format!("oracle rejects kK3, k = {k}")
        })?;
        for e in g.edges() {
            let h = g.without_edge(e.id).unwrap();
            ensure(!check(&h, p(k)).ok, || {
                format!("kK3 - {} still passes, k = {k}", e.id)
            })?;
        }
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!(
        "k = 1..4, every edge critical ({:.0?})",
        start.elapsed()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let g = load("k4_plus_t.txt");
    let k = p(3);
    ensure(check(&g, k).ok, || "K4+t fails check".into())?;
    for e in g.edges() {
        ensure(!check(&g.without_edge(e.id).unwrap(), k).ok, || {
            format!("{} removable", e.id)
        })?;
    }
    let hub = v(4);
    for s in 0..4 {
        let s = v(s);
        ensure(g.degree(s).unwrap() == 6, || format!("d({s}) != 6"))?;
        let SplitOutcome::Obstacle(ob) = complete_splitting(&g, s, k).map_err(|e| e.to_string())?
        else {
            return Err(format!("vertex {s} split completely"));
        };
        let ground: VertexSet = g.vertices().iter().filter(|&x| x != s).collect();
        let expected: Vec<BiSet> = (0..4)
            .map(v)
            .filter(|&x| x != s)
            .map(|x| BiSet::with_wall(ground.clone(), VertexSet::singleton(x), hub).unwrap())
            .collect();
        ensure(ob.t == hub && ob.members == expected, || {
            format!("unexpected obstacle {ob:?}")
        })?;
        ensure(verify_obstacle(&g, s, k, &ob).is_ok(), || {
            "obstacle fails verification".into()
        })?;
        oracles::obstacle_holds(&g, s, 3, &ob)?;
        ensure(!oracles::splittable(&g, s, 3), || {
            format!("oracle splits {s}")
        })?;
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!(
        "minimal, obstacle with hub t at all 4 degree-6 vertices ({:.0?})",
        start.elapsed()
    ))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let graphs = corpus::standard();
    let comparisons = AtomicUsize::new(0);
    let failure = graphs.par_iter().find_map_any(|g| {
        for k in 1..=3 {
            let params = p(k);
            let flow = check(g, params);
            let brute = check_bruteforce(g, params, GroundMode::Plain).unwrap();
            let literal = oracles::connected(g, None, k);
            comparisons.fetch_add(1, Ordering::Relaxed);
            if flow.ok != brute.ok || flow.ok != literal {
                return Some(format!(
                    "check disagrees on {:?} k = {k}",
                    g.edge_multiset()
                ));
            }
            if let Some(w) = &flow.witness {
                let lit = Literal::new(g);
                if w.is_trivial() || lit.f_biset(k, w) >= 2 * k || flow.f != Some(lit.f_biset(k, w))
                {
                    return Some(format!("bad witness {w:?}"));
                }
            }
            if g.vertex_count() < 4 {
                continue;
            }
            for s in g.vertices().iter() {
                let flow = check_in_v(g, s, params).unwrap();
                let brute = check_bruteforce(g, params, GroundMode::InV(s)).unwrap();
                let literal = oracles::connected(g, Some(s), k);
                comparisons.fetch_add(1, Ordering::Relaxed);
                if flow.ok != brute.ok || flow.ok != literal {
                    return Some(format!(
                        "check_in_v disagrees on {:?} s = {s} k = {k}",
                        g.edge_multiset()
                    ));
                }
            }
        }
        None
    });
    if let Some(f) = failure {
        return Err(f);
    }
    within(Duration::from_secs(600), start)?;
    Ok(format!(
        "{} graphs, {} comparisons ({:.1?})",
        graphs.len(),
        comparisons.load(Ordering::Relaxed),
        start.elapsed()
    ))
}

fn random_graph(rng: &mut ChaCha8Rng) -> MultiGraph {
    let n = rng.gen_range(3..=6u32);
    let m = rng.gen_range(0..=12usize);
    let edges: Vec<(u32, u32)> = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    MultiGraph::from_edges(n, &edges).unwrap()
}

fn random_mask(rng: &mut ChaCha8Rng, ground: u64) -> (u64, u64) {
    let (mut outer, mut inner) = (0, 0);
    for a in 0..64 {
        if ground >> a & 1 == 1 {
            match rng.gen_range(0..3) {
                1 => outer |= 1 << a,
                2 => {
                    outer |= 1 << a;
                    inner |= 1 << a;
                }
                _ => {}
            }
        }
    }
    (outer, inner)
}

/// Edges between two disjoint vertex sets.
fn between(lit: &Literal, a: u64, b: u64) -> u32 {
    let a = a & !b;
    let b = b & !a;
    lit.edges
        .iter()
        .filter(|&&(x, y)| {
            (a >> x & 1 == 1 && b >> y & 1 == 1) || (a >> y & 1 == 1 && b >> x & 1 == 1)
        })
        .count() as u32
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut samples = 0;
    let mut claim_uses = 0;
    while samples < 10_000 {
        let g = random_graph(&mut rng);
        let k = rng.gen_range(1..=3u32);
        let ext = minimal_extension(&g, p(k)).map_err(|e| e.to_string())?;
        let h = ext.host;
        let lit = Literal::new(&h);
        let s = lit.pos(ext.s);
        let all = lit.ground(None);
        let vmask = lit.ground(Some(ext.s));
        let d_s = |m: u64| between(&lit, 1 << s, m);
        let mut tight = Vec::new();
        lit.for_each_nontrivial(vmask, |o, i| {
            if lit.f(k, o, i) == 2 * k {
                tight.push((o, i));
                tight.push((all & !i, all & !o));
            }
            true
        });
        let nontrivial_in_v = |(o, i): (u64, u64)| o & !vmask == 0 && i != 0 && o != vmask;
        for _ in 0..10 {
            samples += 1;
            // degree identity and submodularity on arbitrary bi-sets of V + s
            let (xo, xi) = random_mask(&mut rng, all);
            let (yo, yi) = random_mask(&mut rng, all);
            let (mo, mi, jo, ji) = (xo & yo, xi & yi, xo | yo, xi | yi);
            let lhs = lit.entering(xo, xi) + lit.entering(yo, yi);
            let cross =
                between(&lit, !xo & all & yo, xi & !yi) + between(&lit, !yo & all & xo, yi & !xi);
            let rhs = lit.entering(mo, mi) + lit.entering(jo, ji) + cross;
            ensure(lhs == rhs, || format!("degree identity: {lhs} != {rhs}"))?;
            ensure(
                lit.f(k, xo, xi) + lit.f(k, yo, yi) >= lit.f(k, mo, mi) + lit.f(k, jo, ji),
                || "f is not submodular".into(),
            )?;
            // s-neighbour bounds on a non-trivial bi-set of V
            let (xo, xi) = loop {
                let x = random_mask(&mut rng, vmask);
                if nontrivial_in_v(x) {
                    break x;
                }
            };
            let f = lit.f(k, xo, xi) as i64;
            let two_k = 2 * k as i64;
            let (ds_in, ds_out, ds_wall) = (
                d_s(xi) as i64,
                d_s(vmask & !xo) as i64,
                d_s(xo & !xi) as i64,
            );
            ensure(two_k - f <= ds_out - ds_in, || {
                "s-neighbour inequality (upper)".into()
            })?;
            ensure(
                ds_in <= (d_s(vmask) as i64 - ds_wall + f - two_k).div_euclid(2),
                || "s-neighbour inequality (count)".into(),
            )?;
            // tight intersection
            if tight.is_empty() {
                continue;
            }
            let (xo, xi) = tight[rng.gen_range(0..tight.len())];
            let (yo, yi) = tight[rng.gen_range(0..tight.len())];
            let meet = (xo & yo, xi & yi);
            let join = (xo | yo, xi | yi);
            let join_c = (all & !join.1, all & !join.0);
            let cross =
                between(&lit, !xo & all & yo, xi & !yi) + between(&lit, !yo & all & xo, yi & !xi);
            for other in [join, join_c] {
                if nontrivial_in_v(meet) && nontrivial_in_v(other) {
                    claim_uses += 1;
                    ensure(
                        lit.f(k, meet.0, meet.1) == 2 * k
                            && lit.f(k, other.0, other.1) == 2 * k
                            && cross == 0,
                        || "tight intersection claim fails".into(),
                    )?;
                }
            }
        }
    }
    Ok(format!(
        "{samples} samples, tight-intersection claim applied {claim_uses} times ({:.1?})",
        start.elapsed()
    ))
}

fn splitting_instances() -> Vec<(MultiGraph, VertexId)> {
    let b = Bounds {
        max_edges: 10,
        max_mult: 4,
        loops: false,
    };
    let mut out = Vec::new();
    for n in 3..=5u32 {
        for g in corpus::graphs(n, b) {
            for d in [4u32, 6] {
                for_each_composition(d, n as usize, &mut |c| {
                    let ok_degrees =
                        (0..n).all(|x| g.degree(v(x)).unwrap() as u32 + c[x as usize] >= 4);
                    if !ok_degrees {
                        return;
                    }
                    let mut h = g.clone();
                    let s = h.add_fresh_vertex();
                    for (x, &m) in c.iter().enumerate() {
                        for _ in 0..m {
                            h.add_edge(s, v(x as u32)).unwrap();
                        }
                    }
                    out.push((h, s));
                });
            }
        }
    }
    out
}

fn for_each_composition(total: u32, parts: usize, f: &mut impl FnMut(&[u32])) {
    fn rec(left: u32, cur: &mut Vec<u32>, parts: usize, f: &mut impl FnMut(&[u32])) {
        if cur.len() + 1 == parts {
            cur.push(left);
            f(cur);
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(left - x, cur, parts, f);
            cur.pop();
        }
    }
    rec(total, &mut Vec::new(), parts, f);
}

fn blocks_literally(lit: &Literal, k: u32, x: &BiSet, u: VertexId, w: VertexId) -> bool {
    let f = lit.f_biset(k, x);
    let (inner, wall) = (x.inner(), x.wall());
    let dangerous = inner.contains(u) && inner.contains(w) && f <= 2 * k + 1;
    let critical = (inner.contains(u) && wall == VertexSet::singleton(w))
        || (inner.contains(w) && wall == VertexSet::singleton(u));
    !x.is_trivial() && wall.len() <= 1 && (dangerous || (critical && f <= 2 * k))
}

fn check_split_instance(h: &MultiGraph, s: VertexId) -> Result<bool, String> {
    let k = 2;
    let params = p(k);
    let lit = Literal::new(h);
    let ds = h.degree(s).unwrap();
    let mut any_admissible = false;
    for (a, b) in oracles::pairs_at(h, s) {
        let adm = oracles::admissible(h, s, k, a, b);
        any_admissible |= adm;
        let pair = SplitPair::new(a, b);
        let found = find_blocking_biset(h, s, params, pair, true).map_err(|e| e.to_string())?;
        match (&found, adm) {
            (None, true) => {}
            (Some(bl), false) => {
                let x = &bl.biset;
                ensure(blocks_literally(&lit, k, x, a, b), || {
                    format!("{x:?} does not block ({a},{b})")
                })?;
                let f = lit.f_biset(k, x) as i64;
                let ds_in = h.cross_degree(&VertexSet::singleton(s), x.inner()).unwrap() as i64;
                ensure(f - 2 * (k as i64) < ds_in, || {
                    "blocking inequality fails".into()
                })?;
                let ground = lit.ground(Some(s));
                let xo = lit.mask(x.outer());
                let xi = lit.mask(x.inner());
                let larger = !lit.for_each_nontrivial(ground, |o, i| {
                    let above = o & xo == xo && i & xi == xi && (o, i) != (xo, xi);
                    let set = |m: u64| -> VertexSet {
                        (0..lit.ids.len())
                            .filter(|&j| m >> j & 1 == 1)
                            .map(|j| lit.ids[j])
                            .collect()
                    };
                    !(above && {
                        let y = BiSet::new(x.ground().clone(), set(o), set(i)).unwrap();
                        blocks_literally(&lit, k, &y, a, b)
                    })
                });
                ensure(!larger, || format!("{x:?} is not maximal"))?;
                // still blocks after splitting any pair that leaves su and sv alone
                for (c, d) in oracles::pairs_at(h, s) {
                    let spare = |z: VertexId| {
                        let used = [a, b, c, d].iter().filter(|&&q| q == z).count();
                        h.multiplicity(s, z) >= used
                    };
                    if [a, b, c, d].iter().all(|&z| spare(z)) {
                        let mut g = h.clone();
                        for z in [c, d] {
                            let id = *g.edges_between(s, z).last().unwrap();
                            g.remove_edge(id).unwrap();
                        }
                        g.add_edge(c, d).unwrap();
                        ensure(blocks_literally(&Literal::new(&g), k, x, a, b), || {
                            format!("{x:?} stops blocking after splitting ({c},{d})")
                        })?;
                    }
                }
            }
            _ => {
                return Err(format!(
                    "blocking search disagrees with admissibility at ({a},{b})"
                ))
            }
        }
    }
    let oracle = oracles::splittable(h, s, k);
    match complete_splitting(h, s, params).map_err(|e| e.to_string())? {
        SplitOutcome::Complete(trace) => {
            ensure(oracle, || "library splits, oracle cannot".into())?;
            ensure(oracles::connected(&trace.final_graph, None, k), || {
                "final graph fails".into()
            })?;
            ensure(trace.replay(h).unwrap() == trace.final_graph, || {
                "replay differs".into()
            })?;
            ensure(trace.pairs().len() * 2 == ds, || {
                "pairs do not use every edge at s".into()
            })?;
        }
        SplitOutcome::Obstacle(ob) => {
            ensure(!oracle, || {
                "library reports an obstacle, oracle splits".into()
            })?;
            ensure(verify_obstacle(h, s, params, &ob).is_ok(), || {
                "obstacle fails verification".into()
            })?;
            oracles::obstacle_holds(h, s, k, &ob)?;
            ensure(ob.members.len() >= 3, || "fewer than 3 members".into())?;
            let st = h.edges_between(s, ob.t)[0];
            ensure(
                oracles::connected(&h.without_edge(st).unwrap(), Some(s), k),
                || "st not removable".into(),
            )?;
        }
    }
    if !any_admissible {
        ensure(ds == 4, || format!("no admissible pair with d(s) = {ds}"))?;
        ensure(!oracle, || "no admissible pair, yet splittable".into())?;
    }
    Ok(oracle)
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let candidates = splitting_instances();
    let instances: Vec<&(MultiGraph, VertexId)> = candidates
        .par_iter()
        .filter(|(h, s)| oracles::connected(h, Some(*s), 2))
        .collect();
    let results: Vec<Result<bool, String>> = instances
        .par_iter()
        .map(|(h, s)| {
            check_split_instance(h, *s).map_err(|e| format!("{:?} at {s}: {e}", h.edge_multiset()))
        })
        .collect();
    let mut traces = 0;
    let mut obstacles = 0;
    for r in results {
        if r? {
            traces += 1;
        } else {
            obstacles += 1;
        }
    }
    Ok(format!(
        "{} instances ({traces} complete splittings, {obstacles} obstacles) ({:.1?})",
        instances.len(),
        start.elapsed()
    ))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut runs = 0;
    for k in [2u32, 4] {
        let results: Vec<Result<(), String>> = (0..200u64)
            .into_par_iter()
            .map(|seed| {
                let params = p(k);
                let steps = (seed % 11) as usize;
                let (g, trace) = generate(params, steps, seed).map_err(|e| e.to_string())?;
                ensure(check(&g, params).ok, || {
                    format!("k = {k} seed {seed}: generated graph fails")
                })?;
                ensure(replay(params, &trace).unwrap() == g, || {
                    "generate trace does not replay".into()
                })?;
                let back_trace =
                    decompose(&g, params).map_err(|e| format!("k = {k} seed {seed}: {e}"))?;
                let back = replay(params, &back_trace).map_err(|e| e.to_string())?;
                ensure(check(&back, params).ok, || {
                    "replayed decomposition fails check".into()
                })?;
                ensure(
                    back.vertices() == g.vertices() && back.edge_multiset() == g.edge_multiset(),
                    || format!("k = {k} seed {seed}: decomposition replays to a different graph"),
                )?;
                ensure(
                    back_trace.steps.len() <= g.edge_count() + g.vertex_count(),
                    || "too many steps".into(),
                )
            })
            .collect();
        for r in results {
            r?;
            runs += 1;
        }
    }
    let g = load("k4_plus_t.txt");
    ensure(
        matches!(decompose(&g, p(3)), Err(Error::OddK { k: 3 })),
        || "odd k not refused".into(),
    )?;
    for s in 0..4 {
        ensure(
            matches!(
                complete_splitting(&g, v(s), p(3)),
                Ok(SplitOutcome::Obstacle(_))
            ),
            || format!("K4+t splits at {s}"),
        )?;
    }
    Ok(format!(
        "{runs} generate/decompose round trips, k = 3 refused ({:.1?})",
        start.elapsed()
    ))
}

fn augmentation_corpus() -> Vec<MultiGraph> {
    corpus::standard()
        .into_iter()
        .filter(|g| g.vertex_count() >= 3)
        .collect()
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let graphs = augmentation_corpus();
    let results: Vec<Result<(), String>> = graphs
        .par_iter()
        .map(|g| {
            let r = augment(g, p(2)).map_err(|e| e.to_string())?;
            let best = oracles::min_addition(g, 2) as usize;
            let tag = || format!("{:?}", g.edge_multiset());
            ensure(r.alpha() == best, || {
                format!("{}: alpha {} but minimum {best}", tag(), r.alpha())
            })?;
            ensure(
                r.certificate.value.div_ceil(2) as usize == r.alpha(),
                || format!("{}: bound differs", tag()),
            )?;
            ensure(oracles::connected(&r.augmented, None, 2), || {
                format!("{}: result fails", tag())
            })?;
            let mut expect = g.edge_multiset();
            expect.extend(r.added.iter().map(|&(a, b)| (a.min(b), a.max(b))));
            expect.sort_unstable();
            ensure(r.augmented.edge_multiset() == expect, || {
                format!("{}: result is not g + added", tag())
            })
        })
        .collect();
    for r in results {
        r?;
    }
    let tri = augment(&load("triangle.txt"), p(2)).map_err(|e| e.to_string())?;
    ensure(tri.alpha() == 3, || "triangle: alpha != 3".into())?;
    let minus = augment(&load("kk3_minus_edge.txt"), p(2)).map_err(|e| e.to_string())?;
    ensure(minus.alpha() == 1, || "2K3 - e: alpha != 1".into())?;
    within(Duration::from_secs(1800), start)?;
    Ok(format!(
        "{} graphs optimal; triangle 3, 2K3 - e 1 ({:.1?})",
        graphs.len(),
        start.elapsed()
    ))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let graphs = augmentation_corpus();
    let results: Vec<Result<(), String>> = graphs
        .par_iter()
        .map(|g| {
            let ext = minimal_extension(g, p(2)).map_err(|e| e.to_string())?;
            let cert = certificate_bruteforce(g, p(2)).map_err(|e| e.to_string())?;
            let oracle = oracles::best_family(g, 2);
            let checked = verify_certificate(g, p(2), &cert.members).map_err(|e| e.to_string())?;
            let n = ext.new_edges.len() as u32;
            ensure(n == cert.value && n == oracle && checked == n, || {
                format!(
                    "{:?}: extension {n}, certificate {}, oracle {oracle}, members {checked}",
                    g.edge_multiset(),
                    cert.value
                )
            })
        })
        .collect();
    for r in results {
        r?;
    }
    Ok(format!(
        "{} graphs, zero exceptions ({:.1?})",
        graphs.len(),
        start.elapsed()
    ))
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_splitoff");
    let fixtures = [
        ("kk3_k2.txt", 2),
        ("k4_plus_t.txt", 3),
        ("triangle.txt", 2),
        ("kk3_minus_edge.txt", 2),
        ("kk3_plus_s.txt", 2),
    ];
    let mut commands: Vec<Vec<String>> = Vec::new();
    for (name, k) in fixtures {
        let f = fixture(name).display().to_string();
        let n = load(name).vertex_count();
        for json in [false, true] {
            let flag = json.then(|| "--json".to_string());
            for cmd in ["check", "augment", "certify"] {
                commands.push(
                    [cmd.into(), f.clone(), "--k".into(), k.to_string()]
                        .into_iter()
                        .chain(flag.clone())
                        .collect(),
                );
            }
            for s in 0..n {
                commands.push(
                    [
                        "split".into(),
                        f.clone(),
                        "--k".into(),
                        k.to_string(),
                        "--s".into(),
                        s.to_string(),
                    ]
                    .into_iter()
                    .chain(flag.clone())
                    .collect(),
                );
            }
        }
        commands.push(vec![
            "decompose".into(),
            f.clone(),
            "--k".into(),
            k.to_string(),
        ]);
    }
    for seed in [1, 7, 42] {
        commands.push(
            ["generate", "--k", "2", "--steps", "10", "--seed"]
                .iter()
                .map(|s| s.to_string())
                .chain([seed.to_string()])
                .collect(),
        );
    }
    for args in &commands {
        let a = Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        let b = Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(
            a.stdout == b.stdout && a.stderr == b.stderr && a.status.code() == b.status.code(),
            || format!("output differs for {args:?}"),
        )?;
    }
    Ok(format!(
        "{} commands, byte-identical across runs",
        commands.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("kK3 fixture", criterion_1),
        ("K4+t fixture", criterion_2),
        ("checker equivalence", criterion_3),
        ("structural identities", criterion_4),
        ("splitting biconditional", criterion_5),
        ("construction round trip", criterion_6),
        ("augmentation optimality", criterion_7),
        ("min-max", criterion_8),
        ("determinism", criterion_9),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = (i + 1).to_string();
        if !filter.is_empty() && !filter.iter().any(|f| *f == id || f == name) {
            continue;
        }
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {id} PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id} FAIL  {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
