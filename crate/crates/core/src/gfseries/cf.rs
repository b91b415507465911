//! Generating function of `|D4_2n(1423)|` from the continued fraction and,
//! independently, from the four-family linear system it comes from.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::closed::catalan;
use super::series::TruncatedSeries;
use super::SeriesError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// `C_{e,2m}` or `C_{o,2m+1}` to the given order; zero for `m < 0`.
pub fn catalan_trunc(parity: Parity, m: i64, order: usize) -> TruncatedSeries {
    let offset = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    let top = 2 * m + offset as i64;
    TruncatedSeries::from_coeffs(
        order,
        (0..=order).map(|d| {
            if d % 2 == offset && (d as i64) <= top {
                catalan(d as u64)
            } else {
                Zero::zero()
            }
        }),
    )
}

/// Depth used for a request of `n_max` terms.
pub fn default_depth(n_max: usize) -> usize {
    (n_max + 1).div_ceil(3) + 1
}

fn one_minus_z_times(f: &TruncatedSeries) -> TruncatedSeries {
    &TruncatedSeries::one(f.order()) - &f.shift(1)
}

/// One level of the continued fraction: `zR_{2k+1}` from `zR_{2k+3}`.
fn cf_level(k: usize, zr_next: &TruncatedSeries, order: usize) -> Result<TruncatedSeries, SeriesError> {
    let k = k as i64;
    let ce = catalan_trunc(Parity::Even, k, order);
    let co_prev = catalan_trunc(Parity::Odd, k - 1, order);
    let co = catalan_trunc(Parity::Odd, k, order);
    let z2ce = ce.shift(2);
    let one = TruncatedSeries::one(order);

    let innermost = (&ce * &ce).shift(2).try_div(&(&one - zr_next))?;
    let middle = z2ce.try_div(&(&one_minus_z_times(&co) - &innermost))?;
    let outer = &one_minus_z_times(&co_prev).pow(2) - &middle;
    z2ce.try_div(&outer)
}

/// `zR_1` to `z`-degree `order`, cutting the fraction at `zR_{2K+3} = 0`.
pub fn z_r1(order: usize, depth: usize) -> Result<TruncatedSeries, SeriesError> {
    let mut zr = TruncatedSeries::zero(order);
    for k in (0..=depth).rev() {
        zr = cf_level(k, &zr, order)?;
    }
    Ok(zr)
}

/// Re-indexes `z^2 F(z^2)` as `F`, checking that odd degrees vanish.
fn even_part_over_z2(zr1: &TruncatedSeries, shift: usize, n_max: usize) -> Result<TruncatedSeries, SeriesError> {
    for d in (0..=zr1.order()).filter(|d| (d + shift) % 2 == 1 || *d < shift) {
        if !zr1.coeff(d).is_zero() {
            return Err(SeriesError::Internal(format!("unexpected nonzero coefficient at degree {d}")));
        }
    }
    Ok(TruncatedSeries::from_coeffs(
        n_max,
        (0..=n_max).map(|n| zr1.coeff(2 * n + shift)),
    ))
}

/// `|D4_2n(1423)|` for `n = 0..=n_max` at an explicit truncation depth.
pub fn d4_1423_series_at_depth(n_max: usize, depth: usize) -> Result<TruncatedSeries, SeriesError> {
    let zr1 = z_r1(2 * n_max + 2, depth)?;
    even_part_over_z2(&zr1, 2, n_max)
}

/// `|D4_2n(1423)|` for `n = 0..=n_max`.
pub fn d4_1423_series(n_max: usize) -> Result<TruncatedSeries, SeriesError> {
    d4_1423_series_at_depth(n_max, default_depth(n_max))
}

/// The families `P_{2k}`, `S_{2k}`, `R_{2k+1}`, `T_{2k+1}` keyed by subscript.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrstSolution {
    pub depth: usize,
    pub order: usize,
    pub p: BTreeMap<usize, TruncatedSeries>,
    pub r: BTreeMap<usize, TruncatedSeries>,
    pub s: BTreeMap<usize, TruncatedSeries>,
    pub t: BTreeMap<usize, TruncatedSeries>,
}

impl PrstSolution {
    /// `R_1 / z` re-indexed in `z^2`: must equal [`d4_1423_series`].
    pub fn d4_1423_counts(&self, n_max: usize) -> Result<TruncatedSeries, SeriesError> {
        even_part_over_z2(&self.r[&1], 1, n_max)
    }
}

/// Solves `a11 x + a12 y = b1`, `a21 x + a22 y = b2` by Cramer's rule.
fn cramer(
    a: [[&TruncatedSeries; 2]; 2],
    b: [&TruncatedSeries; 2],
) -> Result<(TruncatedSeries, TruncatedSeries), SeriesError> {
    let det = &(a[0][0] * a[1][1]) - &(a[0][1] * a[1][0]);
    let x = (&(b[0] * a[1][1]) - &(a[0][1] * b[1])).try_div(&det)?;
    let y = (&(a[0][0] * b[1]) - &(b[0] * a[1][0])).try_div(&det)?;
    Ok((x, y))
}

/// Downward sweep of the linear system with `R_{2K+3} = 0`, to `z`-degree `2 n_max + 2`.
pub fn solve_prst_system(n_max: usize) -> Result<PrstSolution, SeriesError> {
    solve_prst_at_depth(n_max, default_depth(n_max))
}

pub fn solve_prst_at_depth(n_max: usize, depth: usize) -> Result<PrstSolution, SeriesError> {
    let order = 2 * n_max + 2;
    let one = TruncatedSeries::one(order);
    let zero = TruncatedSeries::zero(order);
    let mut sol = PrstSolution {
        depth,
        order,
        p: BTreeMap::new(),
        r: BTreeMap::new(),
        s: BTreeMap::new(),
        t: BTreeMap::new(),
    };
    let mut r_above = zero.clone();
    for k in (0..=depth + 1).rev() {
        let ki = k as i64;
        let a = one_minus_z_times(&catalan_trunc(Parity::Odd, ki - 1, order));
        // P_{2k}, S_{2k} from R_{2k+1}
        let zce_prev = catalan_trunc(Parity::Even, ki - 1, order).shift(1);
        let minus_zce_prev = -&zce_prev;
        let (p, s) = cramer(
            [[&a, &minus_zce_prev], [&minus_zce_prev, &one_minus_z_times(&r_above)]],
            [&one, &zero],
        )?;
        sol.p.insert(2 * k, p);
        sol.s.insert(2 * k, s);
        if k == 0 {
            break;
        }
        // R_{2k-1}, T_{2k-1} from P_{2k}
        let j = ki - 1;
        let a = one_minus_z_times(&catalan_trunc(Parity::Odd, j - 1, order));
        let minus_zce = -&catalan_trunc(Parity::Even, j, order).shift(1);
        let minus_zp = -&sol.p[&(2 * k)].shift(1);
        let (r, t) = cramer([[&a, &minus_zce], [&minus_zp, &a]], [&zero, &one])?;
        sol.r.insert(2 * k - 1, r.clone());
        sol.t.insert(2 * k - 1, t);
        r_above = r;
    }
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn truncations() {
        assert_eq!(small(&catalan_trunc(Parity::Even, 0, 6)), [1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(small(&catalan_trunc(Parity::Odd, 0, 4)), [0, 1, 0, 0, 0]);
        assert_eq!(small(&catalan_trunc(Parity::Even, 2, 6)), [1, 0, 2, 0, 14, 0, 0]);
        assert_eq!(small(&catalan_trunc(Parity::Odd, -1, 4)), [0; 5]);
    }

    #[test]
    fn continued_fraction_values() {
        assert_eq!(
            small(&d4_1423_series(11).unwrap()),
            [1, 1, 3, 10, 39, 174, 872, 4805, 28474, 178099, 1160173, 7803860]
        );
    }

    #[test]
    fn depth_stability() {
        let n = 14;
        let base = d4_1423_series(n).unwrap();
        let d = default_depth(n);
        assert_eq!(d4_1423_series_at_depth(n, d + 1).unwrap(), base);
        assert_eq!(d4_1423_series_at_depth(n, d + 2).unwrap(), base);
    }

    #[test]
    fn linear_system_agrees() {
        let n = 24;
        let sol = solve_prst_system(n).unwrap();
        assert_eq!(sol.d4_1423_counts(n).unwrap(), d4_1423_series(n).unwrap());
        for p in sol.p.values() {
            assert_eq!(i64::try_from(p.coeff(0)).unwrap(), 1);
        }
        for s in sol.s.values() {
            assert!(s.coeff(0).is_zero());
        }
    }
}
