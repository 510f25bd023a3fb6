//! Small numerical kernels shared by the geometry and spectral modules:
//! deterministic pairwise summation, endpoint-corrected quadrature weights,
//! cubic Hermite interpolation, five-point difference formulas, low-order
//! associated Legendre polynomials, and a banded Cholesky solver.

pub mod band;

/// Pairwise (cascade) summation. Deterministic for a fixed input order and
/// keeps the rounding error of long quadrature sums near machine epsilon.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

/// Dot-style pairwise sum of `a[i] * b[i]` without allocating when short.
pub fn pairwise_dot(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    fn go(a: &[f64], b: &[f64]) -> f64 {
        match a.len() {
            0 => 0.0,
            1 => a[0] * b[0],
            2 => a[0] * b[0] + a[1] * b[1],
            n => {
                let mid = n / 2;
                go(&a[..mid], &b[..mid]) + go(&a[mid..], &b[mid..])
            }
        }
    }
    go(a, b)
}

/// Gregory-corrected trapezoid weights on the inclusive uniform grid
/// `x_i = a + i h`, `i = 0..=n`. The endpoint corrections cancel the
/// Euler-Maclaurin error terms through `h^5`, giving sixth-order accuracy
/// for smooth integrands while keeping all weights positive.
///
/// Falls back to lower correction depth on very coarse grids so the
/// boundary stencils never overlap destructively.
pub fn gregory_weights(n: usize, h: f64) -> Vec<f64> {
    assert!(n >= 2, "need at least two intervals");
    let mut w = vec![h; n + 1];
    w[0] = 0.5 * h;
    w[n] = 0.5 * h;
    // Difference-correction coefficients: -1/12, -1/24, -19/720, -3/160
    // applied to forward differences at the left end and backward at the
    // right end. Depth adapts so the two ends never overlap.
    let depth = if n >= 10 { 4 } else if n >= 6 { 2 } else { 0 };
    let coeff = [-1.0 / 12.0, -1.0 / 24.0, -19.0 / 720.0, -3.0 / 160.0];
    for (k, &c) in coeff.iter().enumerate().take(depth) {
        let order = k + 1;
        // Binomial expansion of the forward difference of given order.
        for j in 0..=order {
            let sign = if (order - j) % 2 == 0 { 1.0 } else { -1.0 };
            let binom = binomial(order, j) as f64;
            let delta = c * sign * binom * h;
            w[j] += delta;
            w[n - j] += delta;
        }
    }
    w
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Cubic Hermite interpolation of `f` on `[x0, x0 + h]` from endpoint values
/// and derivatives.
pub fn hermite(t: f64, f0: f64, d0: f64, f1: f64, d1: f64, h: f64) -> f64 {
    let t2 = t * t;
    let t3 = t2 * t;
    let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    let h10 = t3 - 2.0 * t2 + t;
    let h01 = -2.0 * t3 + 3.0 * t2;
    let h11 = t3 - t2;
    h00 * f0 + h10 * h * d0 + h01 * f1 + h11 * h * d1
}

/// Five-point fourth-order first derivative at the center of samples taken
/// at `{-2h, -h, 0, h, 2h}`.
pub fn central_first(f: &[f64; 5], h: f64) -> f64 {
    (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h)
}

/// Five-point fourth-order second derivative at the center.
pub fn central_second(f: &[f64; 5], h: f64) -> f64 {
    (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h)
}

/// Associated Legendre polynomial `P_l^m(x)` (unnormalized, Condon-Shortley
/// phase) for the small `l` used by test fields and band-limited variations.
pub fn assoc_legendre(l: usize, m: usize, x: f64) -> f64 {
    assert!(m <= l && l <= 8, "assoc_legendre implemented for l <= 8");
    // P_m^m by the closed product, then upward recurrence in l.
    let somx2 = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
    let mut pmm = 1.0;
    let mut fact = 1.0;
    for _ in 0..m {
        pmm *= -fact * somx2;
        fact += 2.0;
    }
    if l == m {
        return pmm;
    }
    let mut pmmp1 = x * (2.0 * m as f64 + 1.0) * pmm;
    if l == m + 1 {
        return pmmp1;
    }
    let mut pll = 0.0;
    for ll in (m + 2)..=l {
        let llf = ll as f64;
        let mf = m as f64;
        pll = ((2.0 * llf - 1.0) * x * pmmp1 - (llf + mf - 1.0) * pmm) / (llf - mf);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    pll
}

/// Legendre polynomial `P_l(x)`.
pub fn legendre(l: usize, x: f64) -> f64 {
    assoc_legendre(l, 0, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn gregory_integrates_smooth_functions_to_high_order() {
        // Reference values: int_0^{pi/2} sin = 1, int_0^{pi/2} sin*cos = 1/2.
        let n = 64;
        let h = std::f64::consts::FRAC_PI_2 / n as f64;
        let w = gregory_weights(n, h);
        let sum_sin: f64 = (0..=n).map(|i| w[i] * (i as f64 * h).sin()).sum();
        let sum_sincos: f64 = (0..=n)
            .map(|i| {
                let t = i as f64 * h;
                w[i] * t.sin() * t.cos()
            })
            .sum();
        assert_abs_diff_eq!(sum_sin, 1.0, epsilon = 1e-11);
        assert_abs_diff_eq!(sum_sincos, 0.5, epsilon = 1e-11);
    }

    #[test]
    fn gregory_weights_positive_and_sum_to_length() {
        for n in [8, 10, 16, 64, 128] {
            let h = 1.0 / n as f64;
            let w = gregory_weights(n, h);
            assert!(w.iter().all(|&x| x > 0.0), "negative weight at n={n}");
            let total: f64 = w.iter().sum();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn hermite_reproduces_cubics_exactly() {
        // f(x) = x^3 - 2x on [1, 1.5].
        let f = |x: f64| x * x * x - 2.0 * x;
        let d = |x: f64| 3.0 * x * x - 2.0;
        let (x0, h) = (1.0, 0.5);
        for k in 0..=10 {
            let t = k as f64 / 10.0;
            let x = x0 + t * h;
            let v = hermite(t, f(x0), d(x0), f(x0 + h), d(x0 + h), h);
            assert_abs_diff_eq!(v, f(x), epsilon = 1e-14);
        }
    }

    #[test]
    fn five_point_formulas_are_exact_on_quartics() {
        let h = 0.1;
        let f = |x: f64| 1.0 + x + x.powi(2) + x.powi(3) + x.powi(4);
        let samples = [f(-2.0 * h), f(-h), f(0.0), f(h), f(2.0 * h)];
        assert_abs_diff_eq!(central_first(&samples, h), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(central_second(&samples, h), 2.0, epsilon = 1e-10);
    }

    #[test]
    fn legendre_values() {
        // P_2(x) = (3x^2 - 1)/2, P_2^2(x) = 3(1-x^2).
        assert_abs_diff_eq!(legendre(2, 0.3), (3.0 * 0.09 - 1.0) / 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(assoc_legendre(2, 2, 0.3), 3.0 * (1.0 - 0.09), epsilon = 1e-14);
        // P_1^1(x) = -sqrt(1-x^2).
        assert_abs_diff_eq!(assoc_legendre(1, 1, 0.6), -0.8, epsilon = 1e-14);
    }

    #[test]
    fn pairwise_sum_matches_naive_on_small_inputs() {
        let v: Vec<f64> = (0..17).map(|i| (i as f64).sin()).collect();
        let naive: f64 = v.iter().sum();
        assert_abs_diff_eq!(pairwise_sum(&v), naive, epsilon = 1e-12);
    }
}
