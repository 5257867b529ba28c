use serde::Serialize;

use super::{eigen, SymmetricMatrix, Spectrum, INTERLACING_TOL};
use crate::error::{domain, Result};
use crate::graph::{Graph, Partition};

/// Average-row-sum matrix of a symmetric matrix over a vertex partition.
/// Generally not symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<f64>,
    block_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// Eigenvalues of the quotient. They are real: with `S = diag(|Xᵢ|) R`
    /// symmetric, `R` is similar to `diag(|Xᵢ|)^{1/2} R diag(|Xᵢ|)^{-1/2}`,
    /// which is symmetric. Two blocks use the closed form of the 2×2
    /// characteristic polynomial.
    pub fn spectrum(&self) -> Spectrum {
        let m = self.order;
        if m == 2 {
            let (p, q, r, s) = (self.get(0, 0), self.get(0, 1), self.get(1, 0), self.get(1, 1));
            let half_trace = (p + s) / 2.0;
            let disc = ((p - s) / 2.0).powi(2) + q * r;
            let root = disc.max(0.0).sqrt();
            return Spectrum::from_values(vec![half_trace + root, half_trace - root]);
        }
        let sizes: Vec<f64> = self.block_sizes.iter().map(|&s| s as f64).collect();
        let mut sym = vec![0.0; m * m];
        for i in 0..m {
            for j in 0..m {
                sym[i * m + j] = self.get(i, j) * (sizes[i] / sizes[j]).sqrt();
            }
        }
        // Average the two triangles to remove rounding asymmetry.
        for i in 0..m {
            for j in 0..i {
                let avg = 0.5 * (sym[i * m + j] + sym[j * m + i]);
                sym[i * m + j] = avg;
                sym[j * m + i] = avg;
            }
        }
        Spectrum::from_values(eigen::symmetric_eigenvalues(&sym, m))
    }
}

/// `R[i][j] = (1/|Xᵢ|) Σ_{u∈Xᵢ} Σ_{v∈Xⱼ} M[u][v]`.
pub fn quotient_matrix(m: &SymmetricMatrix, p: &Partition) -> Result<QuotientMatrix> {
    let n = m.order();
    let covered: usize = p.blocks().iter().map(|b| b.len()).sum();
    if covered != n || p.blocks().iter().any(|b| b.members().last().is_some_and(|&v| v >= n)) {
        return Err(domain(format!("partition does not cover 0..{n}")));
    }
    let labels = p.labels(n);
    if labels.iter().any(|&l| l == usize::MAX) {
        return Err(domain(format!("partition does not cover 0..{n}")));
    }
    let k = p.len();
    let mut sums = vec![0.0; k * k];
    for u in 0..n {
        for v in 0..n {
            sums[labels[u] * k + labels[v]] += m.get(u, v);
        }
    }
    let block_sizes: Vec<usize> = p.blocks().iter().map(|b| b.len()).collect();
    for i in 0..k {
        for j in 0..k {
            sums[i * k + j] /= block_sizes[i] as f64;
        }
    }
    Ok(QuotientMatrix {
        order: k,
        entries: sums,
        block_sizes,
    })
}

pub fn quotient_eigenvalues(m: &SymmetricMatrix, p: &Partition) -> Result<Spectrum> {
    Ok(quotient_matrix(m, p)?.spectrum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Interlacing {
    pub holds: bool,
    pub tight: bool,
    /// First 1-based index `i` where `θᵢ ≥ ηᵢ ≥ θ_{n-m+i}` fails.
    pub witness: Option<usize>,
}

/// Checks whether `eta` (length m) interlaces `theta` (length n > m), and
/// whether the interlacing is tight: for some `k ∈ [0, m]`, `θᵢ = ηᵢ` for
/// `i ≤ k` and `θ_{n-m+i} = ηᵢ` for `i > k`. Comparisons use
/// [`INTERLACING_TOL`].
pub fn check_interlacing(theta: &Spectrum, eta: &Spectrum) -> Result<Interlacing> {
    let (n, m) = (theta.len(), eta.len());
    if n <= m || m == 0 {
        return Err(domain(format!(
            "interlacing needs n > m >= 1, got n={n}, m={m}"
        )));
    }
    let th = theta.values();
    let et = eta.values();
    let witness = (0..m)
        .find(|&i| et[i] > th[i] + INTERLACING_TOL || et[i] < th[n - m + i] - INTERLACING_TOL)
        .map(|i| i + 1);
    if witness.is_some() {
        return Ok(Interlacing {
            holds: false,
            tight: false,
            witness,
        });
    }
    let close = |x: f64, y: f64| (x - y).abs() <= INTERLACING_TOL;
    // prefix[k]: θᵢ = ηᵢ for all i < k; suffix[k]: θ_{n-m+i} = ηᵢ for all i >= k.
    let mut prefix = vec![true; m + 1];
    for i in 0..m {
        prefix[i + 1] = prefix[i] && close(th[i], et[i]);
    }
    let mut suffix = vec![true; m + 1];
    for i in (0..m).rev() {
        suffix[i] = suffix[i + 1] && close(th[n - m + i], et[i]);
    }
    let tight = (0..=m).any(|k| prefix[k] && suffix[k]);
    Ok(Interlacing {
        holds: true,
        tight,
        witness: None,
    })
}

/// True when, for every ordered pair of blocks `(i, j)`, all vertices of
/// block `i` have the same number of neighbours in block `j`.
pub fn is_equitable(g: &Graph, p: &Partition) -> bool {
    let n = g.n();
    let labels = p.labels(n);
    if labels.iter().any(|&l| l == usize::MAX) {
        return false;
    }
    let k = p.len();
    let mut counts = vec![0usize; k];
    for block in p.blocks() {
        let mut reference: Option<Vec<usize>> = None;
        for &u in block.members() {
            counts.iter_mut().for_each(|c| *c = 0);
            for &w in g.neighbors(u) {
                counts[labels[w]] += 1;
            }
            match &reference {
                None => reference = Some(counts.clone()),
                Some(r) if *r != counts => return false,
                Some(_) => {}
            }
        }
    }
    true
}

/// Eigenvalues `(λ₁, λ₂)` of the two-part quotient of `aD + A` over a cut
/// `(X, Y)` with `|X| = n1`, `|Y| = n2`, average degrees `dbar1`, `dbar2`
/// and `r` crossing edges:
///
/// ```text
/// [ (a+1)d̄₁ − r/n₁    r/n₁          ]
/// [ r/n₂              (a+1)d̄₂ − r/n₂ ]
/// ```
///
/// computed from the trace and discriminant of its characteristic polynomial.
pub fn two_part_quotient_eigen(
    dbar1: f64,
    dbar2: f64,
    n1: usize,
    n2: usize,
    r: usize,
    a: f64,
) -> (f64, f64) {
    let (n1f, n2f, rf) = (n1 as f64, n2 as f64, r as f64);
    let c1 = (a + 1.0) * dbar1 - rf / n1f;
    let c2 = (a + 1.0) * dbar2 - rf / n2f;
    let root = ((c1 - c2).powi(2) + 4.0 * rf * rf / (n1f * n2f)).sqrt();
    (0.5 * (c1 + c2 + root), 0.5 * (c1 + c2 - root))
}
