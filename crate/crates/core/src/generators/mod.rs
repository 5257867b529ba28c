//! Deterministic graph families: named cages, parametric families and
//! seeded random graphs.
//!
//! A [`GeneratorSpec`] has a compact string form used on the command line,
//! e.g. `random_regular:n=50,d=6,seed=42`, `complete_bipartite:a=3,b=4`,
//! `circulant:n=10,s=1+3` or just `petersen`.

pub mod named;
pub mod rng;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use rng::{trial_seed, SplitMix64};

/// Full restarts allowed in [`random_regular`] before giving up.
pub const MAX_RESTARTS: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Cycle { n: usize },
    Path { n: usize },
    Petersen,
    Heawood,
    McGee,
    TutteCoxeter,
    /// Vertex `i` is adjacent to `i ± s (mod n)` for each `s` in `connections`.
    Circulant { n: usize, connections: Vec<usize> },
    RandomRegular { n: usize, d: usize, seed: u64 },
    RandomMinDegree { n: usize, delta: usize, seed: u64 },
    /// Erdős–Rényi G(n, p).
    Gnp { n: usize, p: f64, seed: u64 },
}

fn gen_err(msg: impl Into<String>) -> Error {
    Error::Generator(msg.into())
}

impl GeneratorSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GeneratorSpec::Complete { .. } => "complete",
            GeneratorSpec::CompleteBipartite { .. } => "complete_bipartite",
            GeneratorSpec::Cycle { .. } => "cycle",
            GeneratorSpec::Path { .. } => "path",
            GeneratorSpec::Petersen => "petersen",
            GeneratorSpec::Heawood => "heawood",
            GeneratorSpec::McGee => "mcgee",
            GeneratorSpec::TutteCoxeter => "tutte_coxeter",
            GeneratorSpec::Circulant { .. } => "circulant",
            GeneratorSpec::RandomRegular { .. } => "random_regular",
            GeneratorSpec::RandomMinDegree { .. } => "random_min_degree",
            GeneratorSpec::Gnp { .. } => "gnp",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            GeneratorSpec::RandomRegular { seed, .. }
            | GeneratorSpec::RandomMinDegree { seed, .. }
            | GeneratorSpec::Gnp { seed, .. } => Some(*seed),
            _ => None,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        generate(self)
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let family = self.family();
        match self {
            GeneratorSpec::Complete { n } | GeneratorSpec::Cycle { n } | GeneratorSpec::Path { n } => {
                write!(f, "{family}:n={n}")
            }
            GeneratorSpec::CompleteBipartite { a, b } => write!(f, "{family}:a={a},b={b}"),
            GeneratorSpec::Petersen
            | GeneratorSpec::Heawood
            | GeneratorSpec::McGee
            | GeneratorSpec::TutteCoxeter => f.write_str(family),
            GeneratorSpec::Circulant { n, connections } => {
                let s: Vec<String> = connections.iter().map(|c| c.to_string()).collect();
                write!(f, "{family}:n={n},s={}", s.join("+"))
            }
            GeneratorSpec::RandomRegular { n, d, seed } => {
                write!(f, "{family}:n={n},d={d},seed={seed}")
            }
            GeneratorSpec::RandomMinDegree { n, delta, seed } => {
                write!(f, "{family}:n={n},delta={delta},seed={seed}")
            }
            GeneratorSpec::Gnp { n, p, seed } => write!(f, "{family}:n={n},p={p},seed={seed}"),
        }
    }
}

fn take_param<'a>(params: &mut HashMap<&str, &'a str>, family: &str, key: &str) -> Result<&'a str> {
    params
        .remove(key)
        .ok_or_else(|| gen_err(format!("{family} needs parameter `{key}`")))
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (family, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut params: HashMap<&str, &str> = HashMap::new();
        for item in rest.split(',').filter(|x| !x.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| gen_err(format!("expected key=value, found `{item}`")))?;
            if params.insert(k.trim(), v.trim()).is_some() {
                return Err(gen_err(format!("parameter `{k}` given twice")));
            }
        }
        let family = family.trim();
        let int = |params: &mut HashMap<&str, &str>, key: &str| -> Result<usize> {
            let v = take_param(params, family, key)?;
            v.parse()
                .map_err(|_| gen_err(format!("parameter `{key}` must be an integer, got `{v}`")))
        };
        let seed = |params: &mut HashMap<&str, &str>| -> Result<u64> {
            match params.remove("seed") {
                None => Ok(0),
                Some(v) => v
                    .parse()
                    .map_err(|_| gen_err(format!("seed must be a 64-bit unsigned integer, got `{v}`"))),
            }
        };
        let spec = match family {
            "complete" => GeneratorSpec::Complete { n: int(&mut params, "n")? },
            "complete_bipartite" => GeneratorSpec::CompleteBipartite {
                a: int(&mut params, "a")?,
                b: int(&mut params, "b")?,
            },
            "cycle" => GeneratorSpec::Cycle { n: int(&mut params, "n")? },
            "path" => GeneratorSpec::Path { n: int(&mut params, "n")? },
            "petersen" => GeneratorSpec::Petersen,
            "heawood" => GeneratorSpec::Heawood,
            "mcgee" => GeneratorSpec::McGee,
            "tutte_coxeter" => GeneratorSpec::TutteCoxeter,
            "circulant" => {
                let n = int(&mut params, "n")?;
                let list = take_param(&mut params, family, "s")?;
                let connections = list
                    .split('+')
                    .map(|x| {
                        x.trim()
                            .parse()
                            .map_err(|_| gen_err(format!("bad circulant connection `{x}`")))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                GeneratorSpec::Circulant { n, connections }
            }
            "random_regular" => GeneratorSpec::RandomRegular {
                n: int(&mut params, "n")?,
                d: int(&mut params, "d")?,
                seed: seed(&mut params)?,
            },
            "random_min_degree" => GeneratorSpec::RandomMinDegree {
                n: int(&mut params, "n")?,
                delta: int(&mut params, "delta")?,
                seed: seed(&mut params)?,
            },
            "gnp" => {
                let n = int(&mut params, "n")?;
                let p_text = take_param(&mut params, family, "p")?;
                let p = p_text
                    .parse()
                    .map_err(|_| gen_err(format!("parameter `p` must be a number, got `{p_text}`")))?;
                GeneratorSpec::Gnp { n, p, seed: seed(&mut params)? }
            }
            other => return Err(gen_err(format!("unknown graph family `{other}`"))),
        };
        if let Some(key) = params.keys().next() {
            return Err(gen_err(format!("unknown parameter `{key}` for {family}")));
        }
        Ok(spec)
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    match spec {
        GeneratorSpec::Complete { n } => complete(*n),
        GeneratorSpec::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
        GeneratorSpec::Cycle { n } => cycle(*n),
        GeneratorSpec::Path { n } => path(*n),
        GeneratorSpec::Petersen => Ok(named::petersen()),
        GeneratorSpec::Heawood => Ok(named::heawood()),
        GeneratorSpec::McGee => Ok(named::mcgee()),
        GeneratorSpec::TutteCoxeter => Ok(named::tutte_coxeter()),
        GeneratorSpec::Circulant { n, connections } => circulant(*n, connections),
        GeneratorSpec::RandomRegular { n, d, seed } => random_regular(*n, *d, *seed),
        GeneratorSpec::RandomMinDegree { n, delta, seed } => random_min_degree(*n, *delta, *seed),
        GeneratorSpec::Gnp { n, p, seed } => gnp(*n, *p, *seed),
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(gen_err("complete_bipartite needs both sides non-empty"));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(gen_err(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(gen_err("path needs at least one vertex"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Circulant graph. Connections are taken modulo `n`; `s` and `n − s`
/// describe the same edges and are merged.
pub fn circulant(n: usize, connections: &[usize]) -> Result<Graph> {
    if n < 2 {
        return Err(gen_err("circulant needs n >= 2"));
    }
    let mut steps: Vec<usize> = connections
        .iter()
        .map(|&s| {
            let s = s % n;
            s.min(n - s)
        })
        .collect();
    steps.sort_unstable();
    steps.dedup();
    if steps.first() == Some(&0) {
        return Err(gen_err("circulant connection must not be a multiple of n"));
    }
    let mut edges = Vec::new();
    for &s in &steps {
        for i in 0..n {
            let j = (i + s) % n;
            // s = n/2 joins each antipodal pair once.
            if 2 * s != n || i < j {
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Random d-regular simple graph by stub pairing.
///
/// Every vertex contributes `d` stubs. Pairs of remaining stubs are drawn
/// uniformly; a pair that would form a loop or a repeated edge is redrawn.
/// When 100 consecutive draws fail the attempt is abandoned and pairing
/// restarts from scratch, at most [`MAX_RESTARTS`] times. The output is a
/// deterministic function of `(n, d, seed)`. Connectivity is not enforced.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if d >= n && !(n == 0 && d == 0) {
        return Err(gen_err(format!("random_regular needs d < n, got d={d}, n={n}")));
    }
    if (n * d) % 2 == 1 {
        return Err(gen_err(format!("random_regular needs n*d even, got {n}*{d}")));
    }
    const REDRAWS: usize = 100;
    let mut rng = SplitMix64::new(seed);
    'restart: for _ in 0..MAX_RESTARTS {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
        let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(d); n];
        let mut edges = Vec::with_capacity(n * d / 2);
        while !stubs.is_empty() {
            let mut placed = false;
            for _ in 0..REDRAWS {
                let i = rng.index(stubs.len());
                let j = rng.index(stubs.len());
                let (u, v) = (stubs[i], stubs[j]);
                if i == j || u == v || adj[u].contains(&v) {
                    continue;
                }
                adj[u].push(v);
                adj[v].push(u);
                edges.push((u.min(v), u.max(v)));
                let (hi, lo) = (i.max(j), i.min(j));
                stubs.swap_remove(hi);
                stubs.swap_remove(lo);
                placed = true;
                break;
            }
            if !placed {
                continue 'restart;
            }
        }
        return Graph::from_edges(n, edges);
    }
    Err(gen_err(format!(
        "random_regular(n={n}, d={d}) exceeded {MAX_RESTARTS} restarts"
    )))
}

/// Random graph with minimum degree at least `delta`: a random regular
/// graph of degree `delta` (or `delta + 1` when `n·delta` is odd) plus a
/// seeded number, between 0 and n, of extra random edges.
pub fn random_min_degree(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    if delta >= n {
        return Err(gen_err(format!(
            "random_min_degree needs delta < n, got delta={delta}, n={n}"
        )));
    }
    let base_degree = if (n * delta) % 2 == 1 { delta + 1 } else { delta };
    if base_degree >= n {
        return Err(gen_err(format!(
            "no regular graph of degree {base_degree} on {n} vertices"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let base_seed = rng.next_u64();
    let base = random_regular(n, base_degree, base_seed)?;
    let extra = rng.index(n + 1);
    let max_edges = n * (n - 1) / 2;
    let mut edges = base.edges();
    let mut present: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    let mut added = 0;
    let mut attempts = 0;
    while added < extra && present.len() < max_edges && attempts < 100 * (extra + 1) {
        attempts += 1;
        let u = rng.index(n);
        let v = rng.index(n);
        if u == v {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if present.insert(e) {
            edges.push(e);
            added += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// G(n, p): each of the `n(n−1)/2` pairs, in lexicographic order, is an
/// edge when a uniform draw falls below `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(gen_err(format!("gnp needs 0 <= p <= 1, got {p}")));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}
