//! Elementary special functions not provided by `std`.

/// Li₂(−z) for 0 ≤ z ≤ 1, via the Landen identity
/// Li₂(−z) = −Li₂(z/(1+z)) − ½ log²(1+z).
pub fn li2_neg(z: f64) -> f64 {
    assert!((0.0..=1.0).contains(&z), "li2_neg expects z in [0,1]");
    if z == 0.0 {
        return 0.0;
    }
    let w = z / (1.0 + z);
    let mut term = w;
    let mut sum = 0.0f64;
    let mut n = 1.0;
    while term > 1e-18 * sum.max(1e-300) || n < 2.0 {
        sum += term / (n * n);
        n += 1.0;
        term *= w;
    }
    let l = z.ln_1p();
    -sum - 0.5 * l * l
}

/// Digamma function for x > 0.
pub fn digamma(x: f64) -> f64 {
    assert!(x > 0.0);
    let mut x = x;
    let mut acc = 0.0;
    while x < 10.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let x2 = 1.0 / (x * x);
    acc + x.ln() - 0.5 / x
        - x2 * (1.0 / 12.0
            - x2 * (1.0 / 120.0 - x2 * (1.0 / 252.0 - x2 * (1.0 / 240.0 - x2 * (1.0 / 132.0 - x2 * 691.0 / 32760.0)))))
}

/// log(1+r) − r/(1+r) for r ≥ 0, accurate also for small r.
#[inline]
pub fn ln1p_series_i1(r: f64) -> f64 {
    if r > 0.05 {
        return r.ln_1p() - r / (1.0 + r);
    }
    // Σ_{k≥2} (−1)^k (k−1)/k · r^k
    let mut pow = r * r;
    let mut sum = 0.0;
    let mut k = 2.0;
    loop {
        let t = pow * (k - 1.0) / k;
        sum += t;
        if t.abs() < 1e-17 * sum {
            break;
        }
        pow *= -r;
        k += 1.0;
    }
    sum
}

/// r − 2 log(1+r) + r/(1+r) for r ≥ 0, accurate also for small r.
#[inline]
pub fn ln1p_series_i2(r: f64) -> f64 {
    if r > 0.05 {
        return r - 2.0 * r.ln_1p() + r / (1.0 + r);
    }
    // Σ_{k≥3} (−1)^{k+1} (k−2)/k · r^k
    let mut pow = r * r * r;
    let mut sum = 0.0;
    let mut k = 3.0;
    loop {
        let t = pow * (k - 2.0) / k;
        sum += t;
        if t.abs() < 1e-17 * sum.abs() {
            break;
        }
        pow *= -r;
        k += 1.0;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dilog_values() {
        let pi2 = std::f64::consts::PI.powi(2);
        assert!((li2_neg(1.0) + pi2 / 12.0).abs() < 1e-15);
        // Li₂(−1/2) = −0.4484142069236462...
        assert!((li2_neg(0.5) + 0.448_414_206_923_646_2).abs() < 1e-15);
        let direct: f64 = (1..200).map(|n| (-1e-3f64).powi(n) / (n as f64).powi(2)).sum();
        assert!((li2_neg(1e-3) - direct).abs() < 1e-18);
    }

    #[test]
    fn digamma_values() {
        assert!((digamma(1.0) + crate::scalar::EULER_GAMMA).abs() < 1e-14);
        let v = -crate::scalar::EULER_GAMMA - 2.0 * std::f64::consts::LN_2;
        assert!((digamma(0.5) - v).abs() < 1e-14);
    }

    #[test]
    fn series_match_direct() {
        for r in [0.049f64, 0.01, 1e-3] {
            let d1 = r.ln_1p() - r / (1.0 + r);
            let d2 = r - 2.0 * r.ln_1p() + r / (1.0 + r);
            assert!((ln1p_series_i1(r) - d1).abs() < 4e-16 * r);
            assert!((ln1p_series_i2(r) - d2).abs() < 8e-16 * r);
        }
        assert!((ln1p_series_i1(1e-9) - (0.5e-18 - 2.0e-27 / 3.0)).abs() < 1e-33);
    }
}
