//! Eigenvalues of a dense real symmetric matrix: Householder reduction to
//! tridiagonal form followed by implicitly shifted QL iteration.

/// Reduces the symmetric matrix `a` (row-major, `n`×`n`, only the lower
/// triangle is read) to tridiagonal form in place. Returns the diagonal and
/// the subdiagonal, where `e[i]` couples rows `i - 1` and `i` and `e[0] = 0`.
fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    if n == 0 {
        return (d, e);
    }
    let at = |i: usize, j: usize| i * n + j;
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[at(i, k)].abs()).sum();
            if scale == 0.0 {
                e[i] = a[at(i, l)];
            } else {
                for k in 0..=l {
                    a[at(i, k)] /= scale;
                    h += a[at(i, k)] * a[at(i, k)];
                }
                let f = a[at(i, l)];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[at(i, l)] = f - g;
                // p = A u / h, accumulated in e[0..=l]
                let mut f_acc = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[at(j, k)] * a[at(i, k)];
                    }
                    for k in j + 1..=l {
                        g += a[at(k, j)] * a[at(i, k)];
                    }
                    e[j] = g / h;
                    f_acc += e[j] * a[at(i, j)];
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a[at(i, j)];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[at(j, k)] -= f * e[k] + g * a[at(i, k)];
                    }
                }
            }
        } else {
            e[i] = a[at(i, l)];
        }
        d[i] = h;
    }
    for (i, di) in d.iter_mut().enumerate() {
        *di = a[at(i, i)];
    }
    e[0] = 0.0;
    (d, e)
}

/// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal
/// matrix. `e` uses the layout produced by [`tridiagonalize`]. Eigenvalues
/// are returned unsorted in `d`.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<(), usize> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    // Deflate against the norm of the whole matrix. A running maximum over
    // the rows seen so far stays near zero when the leading rows vanish
    // (rank-deficient input), and the iteration then stalls on rounding
    // noise far below the scale of the matrix.
    let tst1 = d
        .iter()
        .zip(e.iter())
        .map(|(x, y)| x.abs() + y.abs())
        .fold(0.0, f64::max);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                if e[m].abs() <= f64::EPSILON * tst1 {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(l);
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// All eigenvalues of the symmetric matrix stored row-major in `entries`,
/// sorted non-increasing.
pub(crate) fn symmetric_eigenvalues(entries: &[f64], n: usize) -> Vec<f64> {
    let mut a = entries.to_vec();
    let (mut d, mut e) = tridiagonalize(&mut a, n);
    if let Err(row) = tridiagonal_ql(&mut d, &mut e) {
        // Not observed on symmetric input; surface loudly rather than
        // return unconverged values.
        panic!("QL iteration failed to converge at row {row}");
    }
    d.sort_by(|x, y| y.total_cmp(x));
    d
}
