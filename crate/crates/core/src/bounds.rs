//! Closed-form bounds: the minimum size `n₁*(δ, g)` of a cut side with
//! fewer than δ boundary edges, the Moore bound, and the eigenvalue
//! thresholds that guarantee `κ′ ≥ k` or `τ ≥ k`.
//!
//! All integer parts are computed exactly with overflow checks; each
//! threshold performs a single integer-to-float division at the end.

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::Girth;

/// Parameters shared by the bounds: minimum degree, girth, connectivity
/// target `k`, matrix shift `a` and (where needed) the order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundParams {
    pub delta: u64,
    pub girth: u64,
    pub k: u64,
    pub a: f64,
    pub n: Option<u64>,
}

impl BoundParams {
    /// `t = ⌊(g − 1)/2⌋`.
    pub fn t(&self) -> u64 {
        (self.girth - 1) / 2
    }

    pub fn n1_star(&self) -> Result<u64> {
        n1_star(self.delta, self.girth)
    }

    pub fn tau_threshold(&self) -> Result<f64> {
        tau_threshold(self.delta, self.k, self.girth, self.a)
    }

    pub fn kappa_threshold_weak(&self) -> Result<f64> {
        kappa_threshold_weak(self.delta, self.k, self.girth, self.a)
    }

    pub fn kappa_threshold_strong(&self) -> Result<f64> {
        let n = self
            .n
            .ok_or_else(|| Error::NotApplicable("graph order n is required".into()))?;
        kappa_threshold_strong(self.delta, self.k, self.girth, self.a, n)
    }
}

/// Extracts a finite girth, reporting infinite girth as not applicable.
pub fn finite_girth(g: Girth) -> Result<u64> {
    g.finite()
        .map(|g| g as u64)
        .ok_or_else(|| Error::NotApplicable("girth is infinite (graph is acyclic)".into()))
}

fn checked_pow(base: u64, exp: u64) -> Result<u64> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow("power"))?;
    base.checked_pow(exp).ok_or(Error::Overflow("power"))
}

/// `Σ_{i=lo}^{hi} base^i`, zero when `lo > hi`.
fn power_sum(base: u64, lo: u64, hi: u64) -> Result<u64> {
    (lo..=hi).try_fold(0u64, |acc, i| {
        acc.checked_add(checked_pow(base, i)?)
            .ok_or(Error::Overflow("power sum"))
    })
}

fn check_degree_girth(d: u64, g: u64, what: &str) -> Result<()> {
    if d < 2 {
        return Err(domain(format!("{what} must be at least 2, got {d}")));
    }
    if g < 3 {
        return Err(domain(format!("girth must be at least 3, got {g}")));
    }
    Ok(())
}

/// `n₁*(δ, g)` with `t = ⌊(g−1)/2⌋`:
/// `1 + δ + Σ_{i=2}^{t} (δ−1)^i` for odd g, and
/// `2 + 2(δ−1)^t + Σ_{i=1}^{t−1} (δ−1)^i` for even g.
pub fn n1_star(delta: u64, g: u64) -> Result<u64> {
    check_degree_girth(delta, g, "minimum degree")?;
    let t = (g - 1) / 2;
    let b = delta - 1;
    let overflow = || Error::Overflow("n1_star");
    if g % 2 == 1 {
        power_sum(b, 2, t)?
            .checked_add(1 + delta)
            .ok_or_else(overflow)
    } else {
        checked_pow(b, t)?
            .checked_mul(2)
            .and_then(|x| x.checked_add(2))
            .and_then(|x| x.checked_add(power_sum(b, 1, t - 1).ok()?))
            .ok_or_else(overflow)
    }
}

/// Moore lower bound on the order of a d-regular graph of girth g:
/// `1 + d Σ_{i=0}^{t−1} (d−1)^i` for odd g, `2 Σ_{i=0}^{t} (d−1)^i` for even g.
pub fn moore_bound(d: u64, g: u64) -> Result<u64> {
    check_degree_girth(d, g, "degree")?;
    let t = (g - 1) / 2;
    let overflow = || Error::Overflow("moore_bound");
    if g % 2 == 1 {
        power_sum(d - 1, 0, t - 1)?
            .checked_mul(d)
            .and_then(|x| x.checked_add(1))
            .ok_or_else(overflow)
    } else {
        power_sum(d - 1, 0, t)?.checked_mul(2).ok_or_else(overflow)
    }
}

fn check_shift(a: f64) -> Result<()> {
    if !a.is_finite() || a < -1.0 {
        return Err(Error::NotApplicable(format!("a = {a} must be finite and >= -1")));
    }
    Ok(())
}

fn check_girth(g: u64) -> Result<()> {
    if g < 3 {
        return Err(Error::NotApplicable(format!("girth {g} < 3")));
    }
    Ok(())
}

/// `(a+1)δ − (2k−1)/n₁*`, the spanning-tree packing threshold. Requires
/// `δ ≥ 2k ≥ 4`.
pub fn tau_threshold(delta: u64, k: u64, g: u64, a: f64) -> Result<f64> {
    if k < 2 {
        return Err(Error::NotApplicable(format!("k = {k} < 2")));
    }
    if delta < 2 * k {
        return Err(Error::NotApplicable(format!("minimum degree {delta} < 2k = {}", 2 * k)));
    }
    check_girth(g)?;
    check_shift(a)?;
    let n1 = n1_star(delta, g)?;
    Ok((a + 1.0) * delta as f64 - (2 * k - 1) as f64 / n1 as f64)
}

/// `(a+1)δ − 2(k−1)/n₁*`. Requires `δ ≥ k ≥ 2`.
pub fn kappa_threshold_weak(delta: u64, k: u64, g: u64, a: f64) -> Result<f64> {
    check_kappa_params(delta, k, g, a)?;
    let n1 = n1_star(delta, g)?;
    Ok((a + 1.0) * delta as f64 - (2 * (k - 1)) as f64 / n1 as f64)
}

/// `(a+1)δ − (k−1)n / (n₁*(n − n₁*))`. Requires `δ ≥ k ≥ 2` and `n > n₁*`.
pub fn kappa_threshold_strong(delta: u64, k: u64, g: u64, a: f64, n: u64) -> Result<f64> {
    check_kappa_params(delta, k, g, a)?;
    let n1 = n1_star(delta, g)?;
    if n <= n1 {
        return Err(Error::NotApplicable(format!(
            "order n = {n} does not exceed n1* = {n1}"
        )));
    }
    let num = (k - 1).checked_mul(n).ok_or(Error::Overflow("kappa_threshold_strong"))?;
    let den = n1
        .checked_mul(n - n1)
        .ok_or(Error::Overflow("kappa_threshold_strong"))?;
    Ok((a + 1.0) * delta as f64 - num as f64 / den as f64)
}

fn check_kappa_params(delta: u64, k: u64, g: u64, a: f64) -> Result<()> {
    if k < 2 {
        return Err(Error::NotApplicable(format!("k = {k} < 2")));
    }
    if delta < k {
        return Err(Error::NotApplicable(format!("minimum degree {delta} < k = {k}")));
    }
    check_girth(g)?;
    check_shift(a)
}
