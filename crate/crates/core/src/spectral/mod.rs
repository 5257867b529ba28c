//! Spectra of `aD + bA` and the interlacing machinery used to relate them to
//! cuts.
//!
//! Everything here is dense. `λᵢ` always means the i-th *largest* eigenvalue,
//! counted from 1.

mod eigen;
mod quotient;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::Graph;

pub use quotient::{
    check_interlacing, is_equitable, quotient_eigenvalues, quotient_matrix,
    two_part_quotient_eigen, Interlacing, QuotientMatrix,
};

/// Largest order the dense eigensolver accepts.
pub const DENSE_MAX_N: usize = 2000;

/// Refuses orders above [`DENSE_MAX_N`].
pub fn check_dense_order(n: usize) -> Result<()> {
    if n > DENSE_MAX_N {
        return Err(Error::Refused(format!(
            "dense spectra need n <= {DENSE_MAX_N}, got n = {n}"
        )));
    }
    Ok(())
}

/// Absolute tolerance for interlacing and tightness comparisons.
pub const INTERLACING_TOL: f64 = 1e-8;

/// A dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    /// Builds the matrix from its lower triangle: `entry(i, j)` is called
    /// for `j <= i` only and mirrored.
    pub fn from_lower(order: usize, mut entry: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut entries = vec![0.0; order * order];
        for i in 0..order {
            for j in 0..=i {
                let x = entry(i, j);
                if !x.is_finite() {
                    return Err(domain(format!("non-finite matrix entry at ({i}, {j})")));
                }
                entries[i * order + j] = x;
                entries[j * order + i] = x;
            }
        }
        Ok(SymmetricMatrix { order, entries })
    }

    /// Takes a full row-major matrix, rejecting asymmetric or non-finite input.
    pub fn from_rows(order: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(domain("entry count does not match order"));
        }
        for i in 0..order {
            for j in 0..i {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(domain(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(domain("non-finite matrix entry"));
        }
        Ok(SymmetricMatrix { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        self.entries
            .chunks(self.order.max(1))
            .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Principal submatrix on the given (sorted, distinct) indices.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<SymmetricMatrix> {
        if indices.iter().any(|&i| i >= self.order) {
            return Err(domain("submatrix index out of range"));
        }
        SymmetricMatrix::from_lower(indices.len(), |i, j| self.get(indices[i], indices[j]))
    }
}

/// Eigenvalues sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    /// Sorts the given values non-increasing.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// i-th largest eigenvalue, 1-based.
    pub fn ith(&self, i: usize) -> Option<f64> {
        i.checked_sub(1).and_then(|k| self.0.get(k).copied())
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }
}

/// The coefficients `(a, b)` of `aD + bA`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatrixKind {
    pub a: f64,
    pub b: f64,
}

impl MatrixKind {
    pub const ADJACENCY: MatrixKind = MatrixKind { a: 0.0, b: 1.0 };
    pub const LAPLACIAN: MatrixKind = MatrixKind { a: 1.0, b: -1.0 };
    pub const SIGNLESS: MatrixKind = MatrixKind { a: 1.0, b: 1.0 };

    /// `aD + A`.
    pub fn shifted(a: f64) -> Self {
        MatrixKind { a, b: 1.0 }
    }

    pub fn new(a: f64, b: f64) -> Result<Self> {
        let kind = MatrixKind { a, b };
        kind.validate()?;
        Ok(kind)
    }

    /// Requires finite coefficients, `b != 0` and `a / b >= -1`.
    pub fn validate(&self) -> Result<()> {
        if !self.a.is_finite() || !self.b.is_finite() {
            return Err(domain("matrix coefficients must be finite"));
        }
        if self.b == 0.0 {
            return Err(domain("b must be nonzero"));
        }
        if self.a / self.b < -1.0 {
            return Err(domain(format!(
                "a/b = {} is below -1",
                self.a / self.b
            )));
        }
        Ok(())
    }

    /// Short name for the three standard matrices, if this is one of them.
    pub fn name(&self) -> Option<&'static str> {
        match (self.a, self.b) {
            (a, b) if a == 0.0 && b == 1.0 => Some("adjacency"),
            (a, b) if a == 1.0 && b == -1.0 => Some("laplacian"),
            (a, b) if a == 1.0 && b == 1.0 => Some("signless_laplacian"),
            _ => None,
        }
    }
}

/// `a·D + b·A` for the graph.
pub fn build_matrix(g: &Graph, kind: MatrixKind) -> Result<SymmetricMatrix> {
    kind.validate()?;
    SymmetricMatrix::from_lower(g.n(), |i, j| {
        if i == j {
            kind.a * g.degree(i) as f64
        } else if g.has_edge(i, j) {
            kind.b
        } else {
            0.0
        }
    })
}

pub fn eigenvalues(m: &SymmetricMatrix) -> Result<Spectrum> {
    if m.order == 0 {
        return Err(domain("eigenvalues of an empty matrix"));
    }
    check_dense_order(m.order)?;
    Ok(Spectrum(eigen::symmetric_eigenvalues(&m.entries, m.order)))
}

/// Full spectrum of `aD + bA`.
pub fn graph_spectrum(g: &Graph, kind: MatrixKind) -> Result<Spectrum> {
    eigenvalues(&build_matrix(g, kind)?)
}

/// λᵢ(G, a, b): the i-th largest eigenvalue of `aD + bA`, 1-based.
pub fn lambda_i(g: &Graph, kind: MatrixKind, i: usize) -> Result<f64> {
    if i == 0 || i > g.n() {
        return Err(domain(format!("eigenvalue index {i} outside 1..={}", g.n())));
    }
    let spectrum = graph_spectrum(g, kind)?;
    Ok(spectrum.ith(i).expect("index checked"))
}
