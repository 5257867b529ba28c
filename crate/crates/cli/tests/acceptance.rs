//! Acceptance gate. Each numbered criterion runs against oracles written
//! here (brute force, closed forms, a Jacobi eigensolver) rather than the
//! library's own checkers, and prints one PASS/FAIL line.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use spectre_core::bounds::{
    kappa_threshold_strong, kappa_threshold_weak, moore_bound, n1_star, tau_threshold,
};
use spectre_core::connectivity::{edge_connectivity, tau_at_least, check_catlin_lai_shao, PackingEvidence};
use spectre_core::generators::{
    circulant, complete, complete_bipartite, cycle, gnp, named, random_regular, trial_seed,
    SplitMix64,
};
use spectre_core::graph::{parse_graph6, to_graph6};
use spectre_core::spectral::{
    build_matrix, check_interlacing, graph_spectrum, is_equitable, lambda_i, quotient_eigenvalues,
};
use spectre_core::theorems::{
    check_co3_5, check_cor2, check_lemma3_1, check_lemma4_1, check_main1, check_main2,
    CheckOptions, Main1Variant, StandardForm, TheoremId,
};
use spectre_core::{Edge, Error, Graph, MatrixKind, Partition, VertexSet};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

// ---------------------------------------------------------------- oracles

/// Cyclic Jacobi; eigenvalues in non-increasing order.
fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let scale: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().max(1.0);
        if off <= 1e-30 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (kp, kq) = (row[p], row[q]);
                    row[p] = c * kp - s * kq;
                    row[q] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (a[p][k], a[q][k]);
                    a[p][k] = c * pk - s * qk;
                    a[q][k] = s * pk + c * qk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

fn dense(g: &Graph, a: f64, b: f64) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut m = vec![vec![0.0; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = b;
        m[v][u] = b;
    }
    for (u, row) in m.iter_mut().enumerate() {
        row[u] = a * g.degree(u) as f64;
    }
    m
}

fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Shortest cycle through deleting each edge in turn.
fn girth_oracle(g: &Graph) -> Option<u64> {
    let n = g.n();
    let mut best: Option<u64> = None;
    for (u, v) in g.edges() {
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if (x == u && y == v) || dist[y] != usize::MAX {
                    continue;
                }
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        if dist[v] != usize::MAX {
            let c = dist[v] as u64 + 1;
            best = Some(best.map_or(c, |b| b.min(c)));
        }
    }
    best
}

fn cut_of_mask(g: &Graph, mask: u64) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| ((mask >> u) & 1) != ((mask >> v) & 1))
        .count()
}

fn brute_kappa(g: &Graph) -> usize {
    let n = g.n();
    (1..(1u64 << (n - 1)))
        .map(|mask| cut_of_mask(g, mask))
        .min()
        .unwrap_or(0)
}

/// Calls `visit` with the block label of every vertex for each set
/// partition of `0..n` (restricted growth strings). Stops when `visit`
/// returns false.
fn for_each_partition(n: usize, mut visit: impl FnMut(&[usize], usize) -> bool) {
    let mut labels = vec![0usize; n];
    let mut maxes = vec![0usize; n];
    loop {
        let blocks = labels.iter().max().map_or(0, |m| m + 1);
        if !visit(&labels, blocks) {
            return;
        }
        let mut i = n;
        loop {
            if i <= 1 {
                return;
            }
            i -= 1;
            if labels[i] <= maxes[i] {
                labels[i] += 1;
                for j in i + 1..n {
                    labels[j] = 0;
                    maxes[j] = maxes[j - 1].max(labels[j - 1]);
                }
                break;
            }
        }
    }
}

/// τ(G) ≥ k iff every partition has at least k(t − 1) crossing edges.
fn nash_williams(g: &Graph, k: usize) -> bool {
    let edges = g.edges();
    let mut ok = true;
    for_each_partition(g.n(), |labels, t| {
        let crossing = edges.iter().filter(|&&(u, v)| labels[u] != labels[v]).count();
        ok = crossing >= k * (t - 1);
        ok
    });
    ok
}

fn is_spanning_tree(n: usize, tree: &[Edge]) -> bool {
    if tree.len() + 1 != n {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(u, v) in tree {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// Checks evidence from `tau_at_least` without the library's verifiers.
fn evidence_ok(g: &Graph, k: usize, answer: bool, evidence: &PackingEvidence) -> Result<(), String> {
    match (answer, evidence) {
        (true, PackingEvidence::Packing(p)) => {
            ensure!(p.forests.len() == k, "{} forests for k = {k}", p.forests.len());
            let mut used = std::collections::HashSet::new();
            for tree in &p.forests {
                ensure!(is_spanning_tree(g.n(), tree), "forest is not a spanning tree");
                for &(u, v) in tree {
                    ensure!(g.has_edge(u, v), "packing uses a non-edge ({u},{v})");
                    ensure!(used.insert((u.min(v), u.max(v))), "edge ({u},{v}) reused");
                }
            }
            Ok(())
        }
        (false, PackingEvidence::Certificate(c)) => {
            let labels = c.partition.labels(g.n());
            ensure!(labels.iter().all(|&l| l != usize::MAX), "certificate misses a vertex");
            let t = c.partition.len();
            let crossing = g.edges().iter().filter(|&&(u, v)| labels[u] != labels[v]).count();
            ensure!(crossing < k * (t - 1), "certificate partition is not deficient");
            Ok(())
        }
        _ => Err("evidence kind does not match the answer".into()),
    }
}

/// Order lower bound for girth g and minimum degree δ, from its defining sums.
fn n1_oracle(delta: u64, g: u64) -> u64 {
    let t = (g - 1) / 2;
    let d1 = delta - 1;
    if g % 2 == 1 {
        1 + delta + (2..=t).map(|i| d1.pow(i as u32)).sum::<u64>()
    } else {
        2 + 2 * d1.pow(t as u32) + (1..t).map(|i| d1.pow(i as u32)).sum::<u64>()
    }
}

fn random_graph(rng: &mut SplitMix64, n: usize, p: f64) -> Graph {
    let edges: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.next_f64() < p)
        .collect();
    Graph::from_edges(n, edges).expect("valid edges")
}

/// Rejection-sampled connected graph with order in `lo..=hi`.
fn connected_graph(
    rng: &mut SplitMix64,
    lo: usize,
    hi: usize,
    accept: impl Fn(&Graph) -> bool,
) -> Graph {
    loop {
        let n = lo + rng.index(hi - lo + 1);
        let p = 0.2 + 0.7 * rng.next_f64();
        let g = random_graph(rng, n, p);
        if is_connected(&g) && accept(&g) {
            return g;
        }
    }
}

fn within(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol
}

fn same_spectrum(got: &[f64], mut want: Vec<f64>, tol: f64) -> Result<(), String> {
    want.sort_by(|a, b| b.total_cmp(a));
    ensure!(got.len() == want.len(), "length {} vs {}", got.len(), want.len());
    for (i, (g, w)) in got.iter().zip(&want).enumerate() {
        ensure!(within(*g, *w, tol), "eigenvalue {} is {g}, expected {w}", i + 1);
    }
    Ok(())
}

fn norm_inf(m: &[Vec<f64>]) -> f64 {
    m.iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

// ---------------------------------------------------------------- criteria

fn formula_fixtures() -> Outcome {
    for delta in 2..=50u64 {
        ensure!(n1_star(delta, 3).unwrap() == delta + 1, "n1*({delta},3)");
        ensure!(n1_star(delta, 4).unwrap() == 2 * delta, "n1*({delta},4)");
        for g in 3..=10 {
            if let Ok(v) = n1_star(delta, g) {
                ensure!(v == n1_oracle(delta, g), "n1*({delta},{g}) = {v}");
            }
        }
    }
    ensure!(n1_star(3, 5).unwrap() == 8 && n1_star(3, 6).unwrap() == 12, "cubic n1*");
    ensure!(moore_bound(3, 5).unwrap() == 10, "moore(3,5)");
    ensure!(moore_bound(3, 6).unwrap() == 14, "moore(3,6)");
    for (name, g, d, girth) in [("petersen", named::petersen(), 3, 5), ("heawood", named::heawood(), 3, 6)] {
        ensure!(g.is_regular() && g.min_degree() == d, "{name} is not {d}-regular");
        ensure!(girth_oracle(&g) == Some(girth), "{name} girth");
        ensure!(g.n() as u64 == moore_bound(d as u64, girth).unwrap(), "{name} misses the bound");
    }
    Ok("n1* for δ ≤ 50, Petersen and Heawood attain the Moore bound".into())
}

fn eigensolver_accuracy() -> Outcome {
    use std::f64::consts::PI;
    let check = |g: &Graph, kind: MatrixKind, want: Vec<f64>| -> Result<(), String> {
        let m = dense(g, kind.a, kind.b);
        let tol = 1e-9 * (1.0 + norm_inf(&m));
        let got = graph_spectrum(g, kind).map_err(|e| e.to_string())?;
        same_spectrum(got.values(), want, tol)
    };
    let adj = MatrixKind::ADJACENCY;
    for n in 2..=30 {
        let g = complete(n).unwrap();
        let mut want = vec![-1.0; n - 1];
        want.push((n - 1) as f64);
        check(&g, adj, want).map_err(|e| format!("K{n}: {e}"))?;
        let mut lap = vec![n as f64; n - 1];
        lap.push(0.0);
        check(&g, MatrixKind::LAPLACIAN, lap).map_err(|e| format!("L(K{n}): {e}"))?;
    }
    for n in 3..=60 {
        let g = cycle(n).unwrap();
        let cos: Vec<f64> = (0..n).map(|j| (2.0 * PI * j as f64 / n as f64).cos()).collect();
        check(&g, adj, cos.iter().map(|c| 2.0 * c).collect()).map_err(|e| format!("C{n}: {e}"))?;
        check(&g, MatrixKind::LAPLACIAN, cos.iter().map(|c| 2.0 - 2.0 * c).collect())
            .map_err(|e| format!("L(C{n}): {e}"))?;
        check(&g, MatrixKind::SIGNLESS, cos.iter().map(|c| 2.0 + 2.0 * c).collect())
            .map_err(|e| format!("Q(C{n}): {e}"))?;
    }
    for a in 1..=15 {
        for b in 1..=15 {
            let g = complete_bipartite(a, b).unwrap();
            let r = ((a * b) as f64).sqrt();
            let mut want = vec![0.0; a + b - 2];
            want.extend([r, -r]);
            check(&g, adj, want).map_err(|e| format!("K{a},{b}: {e}"))?;
        }
    }
    let mut rng = SplitMix64::new(2);
    for _ in 0..100 {
        let n = 5 + rng.index(36);
        let mut conns: Vec<usize> = (1..=n / 2).filter(|_| rng.next_f64() < 0.4).collect();
        if conns.is_empty() {
            conns.push(1);
        }
        let g = circulant(n, &conns).unwrap();
        let want = (0..n)
            .map(|j| {
                conns
                    .iter()
                    .map(|&s| {
                        let c = (2.0 * PI * (j * s) as f64 / n as f64).cos();
                        if 2 * s == n { c } else { 2.0 * c }
                    })
                    .sum()
            })
            .collect();
        check(&g, adj, want).map_err(|e| format!("circulant {n} {conns:?}: {e}"))?;
    }
    let p = named::petersen();
    let mut want = vec![3.0];
    want.extend([1.0; 5]);
    want.extend([-2.0; 4]);
    check(&p, adj, want).map_err(|e| format!("Petersen: {e}"))?;

    let l2 = |g: &Graph, kind: MatrixKind, i: usize| lambda_i(g, kind, i).unwrap();
    let tol = |g: &Graph, kind: MatrixKind| 1e-9 * (1.0 + norm_inf(&dense(g, kind.a, kind.b)));
    let k6 = complete(6).unwrap();
    let k4 = complete(4).unwrap();
    ensure!(within(l2(&p, adj, 2), 1.0, tol(&p, adj)), "λ2(Petersen)");
    ensure!(within(l2(&k6, adj, 2), -1.0, tol(&k6, adj)), "λ2(K6)");
    let lap = MatrixKind::LAPLACIAN;
    ensure!(within(l2(&k4, lap, 1), 4.0, tol(&k4, lap)), "μ_(n-1)(K4)");
    let q = MatrixKind::SIGNLESS;
    ensure!(within(l2(&k4, q, 2), 2.0, tol(&k4, q)), "q2(K4)");
    Ok("K_n, C_n, K_a,b, 100 circulants, Petersen within 1e-9(1+‖M‖∞)".into())
}

fn tau_oracle_equivalence() -> Outcome {
    let graphs: Vec<Graph> = (0..500)
        .map(|i| connected_graph(&mut SplitMix64::new(trial_seed(3, i)), 2, 8, |_| true))
        .collect();
    let mismatches: Vec<String> = graphs
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, g)| {
            (1..=3).filter_map(move |k| {
                let d = tau_at_least(g, k).ok()?;
                let want = nash_williams(g, k);
                if d.answer != want {
                    return Some(format!("graph {i} ({}) k={k}: {} vs oracle {want}", to_graph6(g), d.answer));
                }
                evidence_ok(g, k, d.answer, &d.evidence)
                    .and_then(|_| d.evidence.verify(g, k, d.answer))
                    .err()
                    .map(|e| format!("graph {i} k={k}: {e}"))
            })
        })
        .collect();
    ensure!(mismatches.is_empty(), "{} mismatches, first: {}", mismatches.len(), mismatches[0]);
    Ok("500 graphs × k ∈ {1,2,3}, zero mismatches, evidence valid".into())
}

fn kappa_oracle_equivalence() -> Outcome {
    let bad: Vec<String> = (0..500u64)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = SplitMix64::new(trial_seed(4, i));
            let n = 2 + rng.index(11);
            let p = 0.15 + 0.8 * rng.next_f64();
            let g = random_graph(&mut rng, n, p);
            let cut = edge_connectivity(&g).ok()?;
            let want = brute_kappa(&g);
            let mask: u64 = cut.witness.members().iter().map(|&v| 1u64 << v).sum();
            let witness_ok = mask != 0 && mask != (1u64 << n) - 1 && cut_of_mask(&g, mask) == cut.value;
            (cut.value != want || !witness_ok)
                .then(|| format!("{}: {} vs {want}", to_graph6(&g), cut.value))
        })
        .collect();
    ensure!(bad.is_empty(), "{} mismatches, first: {}", bad.len(), bad[0]);
    Ok("500 graphs n ≤ 12, zero mismatches".into())
}

fn soundness_sweeps() -> Outcome {
    let corpus: Vec<Graph> = (0..1000u64)
        .map(|i| {
            let seed = trial_seed(7, i);
            let n = 30 + SplitMix64::new(seed).index(31);
            random_regular(n, 6, seed).unwrap()
        })
        .collect();
    let opts = CheckOptions::ALWAYS;
    let results: Vec<Result<[usize; 2], String>> = corpus
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let eig = jacobi_eigenvalues(dense(g, 0.0, 1.0));
            let delta = 6.0;
            let girth = girth_oracle(g).unwrap();
            let n1 = n1_oracle(6, girth) as f64;
            let n = g.n() as f64;
            let kappa = edge_connectivity(g).unwrap().value;
            let mut held = 0;
            let mut checks = 0;
            let mut agree = |v: &spectre_core::theorems::Verdict, mine: Option<bool>| -> Result<(), String> {
                checks += 1;
                ensure!(v.sound, "graph {i}: {} unsound", v.theorem);
                if let (Some(m), Some(margin)) = (mine, v.margin) {
                    ensure!(
                        m == v.hypothesis_holds || margin.abs() < 1e-9,
                        "graph {i}: {} hypothesis {} vs oracle {m}",
                        v.theorem,
                        v.hypothesis_holds
                    );
                }
                held += v.hypothesis_holds as usize;
                Ok(())
            };
            let tau2 = tau_at_least(g, 2).unwrap();
            evidence_ok(g, 2, tau2.answer, &tau2.evidence)?;
            for a in [0.0, 1.0, -1.0] {
                // λ₂(aD + A) = 6a + λ₂(A) on a 6-regular graph.
                let l2 = a * delta + eig[1];
                let v = check_main2(g, 2, a, opts);
                let mine = l2 < (a + 1.0) * delta - 3.0 / n1;
                ensure!(!mine || tau2.answer, "graph {i}: MAIN2 a={a} holds but τ < 2");
                agree(&v, Some(mine))?;
                for k in [2usize, 3] {
                    let kf = k as f64;
                    let weak = l2 < (a + 1.0) * delta - 2.0 * (kf - 1.0) / n1;
                    let strong = n > n1 && l2 <= (a + 1.0) * delta - (kf - 1.0) * n / (n1 * (n - n1));
                    ensure!(!(weak || strong) || kappa >= k, "graph {i}: MAIN1 a={a} k={k} but κ′={kappa}");
                    agree(&check_main1(g, k, a, Main1Variant::Weak, opts), Some(weak))?;
                    agree(&check_main1(g, k, a, Main1Variant::Strong, opts), Some(strong))?;
                }
            }
            for form in [StandardForm::Adjacency, StandardForm::Laplacian, StandardForm::Signless] {
                agree(&check_cor2(g, 2, form, opts), None)?;
            }
            Ok([checks, held])
        })
        .collect();
    let mut totals = [0, 0];
    for r in results {
        let [c, h] = r?;
        totals[0] += c;
        totals[1] += h;
    }
    ensure!(totals[1] > 0, "no hypothesis ever held; the sweep proves nothing");

    for (name, g, _, _) in named::cages() {
        let v = check_main1(&g, 2, 0.0, Main1Variant::Weak, opts);
        ensure!(v.applicable && v.sound, "{name}: {v:?}");
        ensure!(v.exact_values.kappa_prime == Some(3), "{name}: κ′ {:?}", v.exact_values.kappa_prime);
        let girth = girth_oracle(&g).unwrap();
        let threshold = 3.0 - 2.0 / n1_oracle(3, girth) as f64;
        ensure!(within(v.threshold.unwrap(), threshold, 1e-12), "{name} threshold");
    }
    let p = check_main1(&named::petersen(), 2, 0.0, Main1Variant::Weak, opts);
    ensure!(
        p.hypothesis_holds && within(p.eigenvalue.unwrap(), 1.0, 1e-9) && p.threshold == Some(2.75),
        "Petersen: {p:?}"
    );
    Ok(format!(
        "{} verdicts on 1000 graphs ({} hypotheses held), zero violations; cages verified",
        totals[0], totals[1]
    ))
}

fn lemma_suites() -> Outcome {
    // Small-cut lemma.
    let bad: Vec<String> = (0..300u64)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = SplitMix64::new(trial_seed(6, i));
            let g = connected_graph(&mut rng, 3, 8, |g| g.min_degree() >= 2);
            let n = g.n();
            let delta = g.min_degree();
            let n1 = girth_oracle(&g).map(|gi| n1_oracle(delta as u64, gi)).unwrap_or(0);
            let mine = (1..(1u64 << n) - 1)
                .all(|mask| cut_of_mask(&g, mask) >= delta || mask.count_ones() as u64 >= n1);
            match check_lemma3_1(&g) {
                Ok(r) if r.holds && mine => None,
                other => Some(format!("{}: {other:?}, oracle {mine}", to_graph6(&g))),
            }
        })
        .collect();
    ensure!(bad.is_empty(), "small-cut lemma: {}", bad[0]);
    for (name, g, _, _) in named::cages() {
        match check_lemma3_1(&g) {
            Ok(r) => ensure!(g.n() <= 16 && r.holds, "{name}: {r:?}"),
            Err(Error::Refused(_)) => ensure!(g.n() > 16, "{name} refused"),
            Err(e) => return Err(format!("{name}: {e}")),
        }
    }

    // e(X,Y)² bound: 200 applicable triples on each of 50 graphs.
    let bad: Vec<String> = (0..50u64)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = SplitMix64::new(trial_seed(41, i));
            let n = 10 + rng.index(9);
            let g = gnp(n, 0.85, rng.next_u64()).ok()?;
            let shifts = [-1.0, -0.5, 0.0, 0.5, 1.0, 2.0];
            let lambda2: Vec<f64> = shifts.iter().map(|&a| jacobi_eigenvalues(dense(&g, a, 1.0))[1]).collect();
            let delta = g.min_degree() as f64;
            let mut found = 0;
            for _ in 0..200_000 {
                if found == 200 {
                    break;
                }
                let which = rng.index(shifts.len());
                let (a, l2) = (shifts[which], lambda2[which]);
                let mut order: Vec<usize> = (0..n).collect();
                rng.shuffle(&mut order);
                let sx = 1 + rng.index(n - 1);
                let sy = 1 + rng.index(n - sx);
                let xm: u64 = order[..sx].iter().map(|&v| 1u64 << v).sum();
                let ym: u64 = order[sx..sx + sy].iter().map(|&v| 1u64 << v).sum();
                let dx = cut_of_mask(&g, xm) as f64 / sx as f64;
                let dy = cut_of_mask(&g, ym) as f64 / sy as f64;
                let top = (a + 1.0) * delta;
                if l2 > top - dx.max(dy) - 1e-9 {
                    continue;
                }
                found += 1;
                let e = g
                    .edges()
                    .iter()
                    .filter(|&&(u, v)| {
                        let (iu, iv) = ((xm >> u) & 1 == 1, (xm >> v) & 1 == 1);
                        let (ju, jv) = ((ym >> u) & 1 == 1, (ym >> v) & 1 == 1);
                        (iu && jv) || (iv && ju)
                    })
                    .count() as f64;
                let rhs = (top - dx - l2) * (top - dy - l2) * (sx * sy) as f64;
                let x = VertexSet::new(order[..sx].iter().copied(), n).unwrap();
                let y = VertexSet::new(order[sx..sx + sy].iter().copied(), n).unwrap();
                let r = check_lemma4_1(&g, &x, &y, a).unwrap();
                if !r.applicable || !r.inequality_holds || e * e < rhs - 1e-8 * (1.0 + rhs.abs()) {
                    return Some(format!("graph {i} a={a}: {r:?}, oracle lhs {} rhs {rhs}", e * e));
                }
            }
            (found < 200).then(|| format!("graph {i}: only {found} applicable triples"))
        })
        .collect();
    ensure!(bad.is_empty(), "e(X,Y) bound: {}", bad[0]);

    // Interlacing of quotient eigenvalues.
    let bad: Vec<String> = (0..200u64)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = SplitMix64::new(trial_seed(22, i));
            let n = 3 + rng.index(10);
            let p = 0.2 + 0.6 * rng.next_f64();
            let g = random_graph(&mut rng, n, p);
            let parts = 1 + rng.index(n - 1);
            let mut labels: Vec<usize> = (0..n).map(|v| if v < parts { v } else { rng.index(parts) }).collect();
            rng.shuffle(&mut labels);
            let sizes: Vec<f64> = (0..parts).map(|b| labels.iter().filter(|&&l| l == b).count() as f64).collect();
            let mut q = vec![vec![0.0; parts]; parts];
            for (u, v) in g.edges() {
                let (bu, bv) = (labels[u], labels[v]);
                q[bu][bv] += 1.0;
                q[bv][bu] += 1.0;
            }
            for (bi, row) in q.iter_mut().enumerate() {
                for (bj, x) in row.iter_mut().enumerate() {
                    *x /= (sizes[bi] * sizes[bj]).sqrt();
                }
            }
            let eta = jacobi_eigenvalues(q);
            let theta = jacobi_eigenvalues(dense(&g, 0.0, 1.0));
            let mine = (0..parts).all(|j| theta[j] + 1e-8 >= eta[j] && eta[j] + 1e-8 >= theta[n - parts + j]);
            let p = Partition::from_labels(&labels);
            let m = build_matrix(&g, MatrixKind::ADJACENCY).unwrap();
            let lib_eta = quotient_eigenvalues(&m, &p).unwrap();
            let lib_theta = graph_spectrum(&g, MatrixKind::ADJACENCY).unwrap();
            let r = check_interlacing(&lib_theta, &lib_eta).unwrap();
            let same = lib_eta.values().iter().zip(&eta).all(|(x, y)| within(*x, *y, 1e-9));
            (!(mine && r.holds && same)).then(|| format!("pair {i}: oracle {mine}, library {r:?}"))
        })
        .collect();
    ensure!(bad.is_empty(), "interlacing: {}", bad[0]);

    for (name, g, blocks) in [
        ("C4", cycle(4).unwrap(), vec![vec![0, 2], vec![1, 3]]),
        ("Petersen", named::petersen(), vec![(0..5).collect(), (5..10).collect()]),
    ] {
        let n = g.n();
        let p = Partition::new(blocks.iter().map(|b| VertexSet::new(b.iter().copied(), n).unwrap()).collect(), n)
            .unwrap();
        let labels = p.labels(n);
        let equitable_mine = blocks.iter().all(|b| {
            let count = |u: usize, c: usize| g.neighbors(u).iter().filter(|&&w| labels[w] == c).count();
            (0..blocks.len()).all(|c| b.iter().all(|&u| count(u, c) == count(b[0], c)))
        });
        let m = build_matrix(&g, MatrixKind::ADJACENCY).unwrap();
        let r = check_interlacing(&graph_spectrum(&g, MatrixKind::ADJACENCY).unwrap(), &quotient_eigenvalues(&m, &p).unwrap())
            .unwrap();
        ensure!(equitable_mine && is_equitable(&g, &p) && r.holds && r.tight, "{name}: {r:?}");
    }
    Ok("300 small-cut graphs + cages, 50×200 e(X,Y) triples, 200 interlacing pairs, tight cases".into())
}

fn edge_deletion_equivalence() -> Outcome {
    let bad: Vec<String> = (0..300u64)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut rng = SplitMix64::new(trial_seed(71, i));
            let g = connected_graph(&mut rng, 2, 7, |g| g.m() <= 14);
            (1..=2usize).filter_map(move |k| {
                let r = check_catlin_lai_shao(&g, k).ok()?;
                let kappa = brute_kappa(&g);
                let edges = g.edges();
                let m = edges.len();
                let mut deletion = true;
                'outer: for a in 0..=m {
                    for b in a..=m {
                        // (a, b) with a == m or b == m stand for "no edge".
                        if (a == m && b < m) || (a < m && a == b) || (k == 1 && b < m) {
                            continue;
                        }
                        let removed: Vec<Edge> =
                            [a, b].iter().filter(|&&x| x < m).map(|&x| edges[x]).collect();
                        let rest: Vec<Edge> = edges.iter().copied().filter(|e| !removed.contains(e)).collect();
                        if !nash_williams(&Graph::from_edges(g.n(), rest).unwrap(), k) {
                            deletion = false;
                            break 'outer;
                        }
                    }
                }
                let ok = r.equiv_holds
                    && r.kappa_prime == kappa
                    && r.connectivity_side == (kappa >= 2 * k)
                    && r.deletion_side == deletion
                    && deletion == (kappa >= 2 * k);
                (!ok).then(|| format!("{} k={k}: {r:?}, oracle κ′={kappa} deletion={deletion}", to_graph6(&g)))
            })
        })
        .collect();
    ensure!(bad.is_empty(), "{}", bad[0]);
    Ok("300 connected graphs n ≤ 7, m ≤ 14, k ∈ {1,2}: equivalence holds".into())
}

fn reduction_identities() -> Outcome {
    let shifts = [-1.0, -0.5, 0.0, 0.25, 1.0, 2.0];
    for delta in 4..=20u64 {
        for k in 2..=delta / 2 {
            for a in shifts {
                let got = tau_threshold(delta, k, 3, a).unwrap();
                let want = (a + 1.0) * delta as f64 - (2 * k - 1) as f64 / (delta + 1) as f64;
                ensure!(got == want, "tau_threshold({delta},{k},3,{a}) = {got}, want {want}");
            }
        }
    }
    for delta in 2..=20usize {
        for k in 2..=delta {
            let g = complete_bipartite(delta, delta + 1).unwrap();
            let v = check_co3_5(&g, k, CheckOptions { verification: spectre_core::theorems::Verification::Never });
            let weak = kappa_threshold_weak(delta as u64, k as u64, 4, 0.0).unwrap();
            ensure!(v.threshold == Some(weak), "bipartite threshold δ={delta} k={k}: {:?} vs {weak}", v.threshold);
            ensure!(weak == delta as f64 - (k - 1) as f64 / delta as f64, "weak(δ,k,4,0) δ={delta} k={k}");
        }
    }
    // Strong threshold at girth 3 against its closed form.
    for delta in 2..=12u64 {
        for k in 2..=delta {
            let n = delta + 5;
            let got = kappa_threshold_strong(delta, k, 3, 0.0, n).unwrap();
            let n1 = (delta + 1) as f64;
            let want = delta as f64 - (k - 1) as f64 * n as f64 / (n1 * (n as f64 - n1));
            ensure!(within(got, want, 1e-12), "strong({delta},{k},3,0,{n})");
        }
    }
    // λ_{n−i+1}(G, a, b) = b·λᵢ(G, a/b, 1) for b < 0.
    let mut rng = SplitMix64::new(88);
    for t in 0..50 {
        let n = 2 + rng.index(20);
        let p = 0.2 + 0.7 * rng.next_f64();
            let g = random_graph(&mut rng, n, p);
        let b = -(0.25 + 3.0 * rng.next_f64());
        let ratio = -1.0 + 3.0 * rng.next_f64();
        let kind = MatrixKind::new(ratio * b, b).map_err(|e| e.to_string())?;
        let scaled = graph_spectrum(&g, MatrixKind::shifted(kind.a / kind.b)).unwrap();
        let full = graph_spectrum(&g, kind).unwrap();
        for i in 1..=n {
            let lhs = full.ith(n - i + 1).unwrap();
            let rhs = b * scaled.ith(i).unwrap();
            ensure!(within(lhs, rhs, 1e-8), "graph {t} i={i}: {lhs} vs {rhs}");
        }
    }
    let k6 = complete(6).unwrap();
    let direct = lambda_i(&k6, MatrixKind::LAPLACIAN, 5).unwrap();
    let via = -lambda_i(&k6, MatrixKind::shifted(-1.0), 2).unwrap();
    ensure!(within(direct, via, 1e-9) && within(direct, 6.0, 1e-9), "K6 Laplacian flip");
    let cor = check_cor2(&k6, 2, StandardForm::Laplacian, CheckOptions::ALWAYS);
    ensure!(cor.theorem == TheoremId::Cor2Ii && within(cor.eigenvalue.unwrap(), 6.0, 1e-9), "{cor:?}");
    Ok("threshold grid exact, bipartite = weak(δ,k,4,0), index flip on 50 graphs".into())
}

fn cli(args: &[&str], threads: Option<&str>) -> Result<Vec<u8>, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_spectre"));
    cmd.args(args);
    if let Some(t) = threads {
        cmd.env("SPECTRE_THREADS", t);
    }
    let out = cmd.output().map_err(|e| e.to_string())?;
    ensure!(out.status.code() == Some(0), "spectre {args:?} exited {:?}", out.status.code());
    Ok(out.stdout)
}

fn determinism_and_formats() -> Outcome {
    let mut rng = SplitMix64::new(99);
    for i in 0..200 {
        let n = rng.index(31);
        let p = rng.next_f64();
            let g = random_graph(&mut rng, n, p);
        let text = to_graph6(&g);
        let back = parse_graph6(&text).map_err(|e| format!("graph {i}: {e}"))?;
        ensure!(back == g && to_graph6(&back) == text, "graph {i} does not round-trip");
    }
    let runs: [&[&str]; 2] = [
        &["analyze", "random_regular:n=40,d=6,seed=42", "--k", "2", "--k", "3", "--a", "0", "--a", "-1", "--exact", "--spectrum", "full", "--compact"],
        &["verify", "--family", "random_regular", "--n", "30..40", "--d", "6", "--theorem", "MAIN2", "--trials", "40", "--seed", "7"],
    ];
    for args in runs {
        let first = cli(args, None)?;
        ensure!(!first.is_empty(), "no output from {args:?}");
        ensure!(first == cli(args, None)?, "{} differs between runs", args[0]);
        ensure!(first == cli(args, Some("1"))?, "{} depends on the thread count", args[0]);
    }
    let json: serde_json::Value = serde_json::from_slice(&cli(runs[0], None)?).map_err(|e| e.to_string())?;
    ensure!(json["provenance"]["seed"] == 42, "seed missing from provenance");
    Ok("200 graph6 round trips, analyze and verify byte-identical".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("formula fixtures", formula_fixtures, Duration::from_secs(1)),
        ("eigensolver accuracy", eigensolver_accuracy, Duration::from_secs(10)),
        ("τ vs partition oracle", tau_oracle_equivalence, Duration::from_secs(120)),
        ("κ′ vs brute-force cuts", kappa_oracle_equivalence, Duration::from_secs(60)),
        ("soundness sweeps", soundness_sweeps, Duration::from_secs(600)),
        ("lemma suites", lemma_suites, Duration::from_secs(120)),
        ("connectivity/packing equivalence", edge_deletion_equivalence, Duration::from_secs(120)),
        ("reduction identities", reduction_identities, Duration::from_secs(30)),
        ("determinism and formats", determinism_and_formats, Duration::from_secs(30)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *limit => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
