use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{Cell, Family, ProductBasis, ProductState};
use crate::numkernel::{phase, sqrt, ComplexVector, C64, ZERO};
use crate::{Error, Result};

/// `e^{2 pi i k / n}`, exact at multiples of a quarter turn.
pub fn root_of_unity(k: i64, n: u64) -> C64 {
    let n = n as i64;
    let k = k.rem_euclid(n);
    if (4 * k) % n == 0 {
        return match 4 * k / n {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        };
    }
    phase(2.0 * PI * k as f64 / n as f64)
}

/// Unit vector with amplitude `omega^{j m} / sqrt(|support|)` on `support[j]`.
pub fn fourier_local_state(
    dim: usize,
    support: &[usize],
    m: i64,
    omega: C64,
) -> Result<ComplexVector> {
    if support.is_empty() {
        return Err(Error::InvalidDimension("empty support".into()));
    }
    let mut v = ComplexVector::zeros(dim);
    let norm = 1.0 / sqrt(support.len() as f64);
    for (j, &x) in support.iter().enumerate() {
        if x >= dim {
            return Err(Error::IndexOutOfRange { index: x, dim });
        }
        if v[x] != ZERO {
            return Err(Error::InvalidDimension(format!(
                "support index {x} repeated"
            )));
        }
        v[x] = omega.powi((j as i64 * m) as i32) * norm;
    }
    Ok(v)
}

fn uniform(dim: usize) -> ComplexVector {
    ComplexVector::from_real(&alloc::vec![1.0 / sqrt(dim as f64); dim])
}

fn all_cells(d_a: usize, d_b: usize) -> Vec<Cell> {
    (0..d_a)
        .flat_map(|c| (0..d_b).map(move |r| (c, r)))
        .collect()
}

/// The `GenTiles1` unextendible product basis on `C^n ⊗ C^n` for even `n >= 4`.
///
/// For `m = 1..n/2-1` and `k = 0..n-1`, with `omega = e^{4 pi i / n}`:
///
/// * vertical tiles `|k> ⊗ |w_{m,k+1}>`,
/// * horizontal tiles `|w_{m,k}> ⊗ |k>`,
///
/// where `|w_{m,k}> ∝ sum_{j<n/2} omega^{jm} |j+k mod n>`, plus the uniform
/// stopper `|F>`. That makes `(n-1)^2` states.
pub fn gen_tiles1(n: usize) -> Result<ProductBasis> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidDimension(format!(
            "GenTiles1 requires an even n >= 4, got n = {n}"
        )));
    }
    let half = n / 2;
    let omega = root_of_unity(1, half as u64);
    let window = |start: usize| -> Vec<usize> { (0..half).map(|j| (start + j) % n).collect() };

    let mut states = Vec::with_capacity((n - 1) * (n - 1));
    for m in 1..half {
        for k in 0..n {
            let rows = window(k + 1);
            let b = fourier_local_state(n, &rows, m as i64, omega)?;
            let cells = rows.iter().map(|&r| (k, r)).collect();
            states.push(
                ProductState::new(ComplexVector::basis(n, k)?, b, format!("V[m={m},k={k}]"))?
                    .with_tile_cells(cells),
            );
        }
    }
    for m in 1..half {
        for k in 0..n {
            let cols = window(k);
            let a = fourier_local_state(n, &cols, m as i64, omega)?;
            let cells = cols.iter().map(|&c| (c, k)).collect();
            states.push(
                ProductState::new(a, ComplexVector::basis(n, k)?, format!("H[m={m},k={k}]"))?
                    .with_tile_cells(cells),
            );
        }
    }
    states.push(ProductState::new(uniform(n), uniform(n), "F")?.with_tile_cells(all_cells(n, n)));
    ProductBasis::new(n, n, states, Family::GenTiles1)
}

/// The `GenTiles2` unextendible product basis on `C^m ⊗ C^n`, for
/// `m >= 3`, `n > 3` and `n >= m`.
///
/// * short tiles `(|j> - |j+1 mod m>)/sqrt2 ⊗ |j>` for `j < m`,
/// * long tiles `|j> ⊗ (sum_{i<=m-3} w^{ik}|i+j+1 mod m> + sum_{m-2<=i<=n-3} w^{ik}|i+2>)/sqrt(n-2)`
///   for `j < m`, `1 <= k <= n-3`, with `w = e^{2 pi i/(n-2)}`,
/// * the uniform stopper.
///
/// That makes `mn - 2m + 1` states.
pub fn gen_tiles2(m: usize, n: usize) -> Result<ProductBasis> {
    if m < 3 || n <= 3 || n < m {
        return Err(Error::InvalidDimension(format!(
            "GenTiles2 requires n > 3, m >= 3 and n >= m, got m = {m}, n = {n}"
        )));
    }
    let omega = root_of_unity(1, (n - 2) as u64);
    let inv_sqrt2 = 1.0 / sqrt(2.0);

    let mut states = Vec::with_capacity(m * n - 2 * m + 1);
    for j in 0..m {
        let next = (j + 1) % m;
        let mut a = ComplexVector::zeros(m);
        a[j] = C64::new(inv_sqrt2, 0.0);
        a[next] = C64::new(-inv_sqrt2, 0.0);
        states.push(
            ProductState::new(a, ComplexVector::basis(n, j)?, format!("S[j={j}]"))?
                .with_tile_cells(alloc::vec![(j, j), (next, j)]),
        );
    }
    for j in 0..m {
        let rows: Vec<usize> = (0..m - 2)
            .map(|i| (i + j + 1) % m)
            .chain((m - 2..=n - 3).map(|i| i + 2))
            .collect();
        for k in 1..=n - 3 {
            let b = fourier_local_state(n, &rows, k as i64, omega)?;
            let cells = rows.iter().map(|&r| (j, r)).collect();
            states.push(
                ProductState::new(ComplexVector::basis(m, j)?, b, format!("L[j={j},k={k}]"))?
                    .with_tile_cells(cells),
            );
        }
    }
    states.push(ProductState::new(uniform(m), uniform(n), "F")?.with_tile_cells(all_cells(m, n)));
    ProductBasis::new(m, n, states, Family::GenTiles2)
}

/// The grid basis `|i> ⊗ |j>` in lexicographic order.
pub fn cartesian_basis(d_a: usize, d_b: usize) -> Result<ProductBasis> {
    if d_a == 0 || d_b == 0 {
        return Err(Error::InvalidDimension(format!(
            "local dimensions {d_a}x{d_b}"
        )));
    }
    let mut states = Vec::with_capacity(d_a * d_b);
    for i in 0..d_a {
        for j in 0..d_b {
            states.push(ProductState::new(
                ComplexVector::basis(d_a, i)?,
                ComplexVector::basis(d_b, j)?,
                format!("C[i={i},j={j}]"),
            )?);
        }
    }
    ProductBasis::new(d_a, d_b, states, Family::Cartesian)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_tiles1_counts() {
        assert_eq!(gen_tiles1(4).unwrap().len(), 9);
        assert_eq!(gen_tiles1(6).unwrap().len(), 25);
    }

    #[test]
    fn gen_tiles1_rejects_odd_and_small() {
        for n in [0, 2, 3, 5, 7] {
            assert!(
                matches!(gen_tiles1(n), Err(Error::InvalidDimension(_))),
                "n = {n}"
            );
        }
    }

    #[test]
    fn gen_tiles1_n4_has_sign_phases() {
        // omega = e^{i pi} = -1: every amplitude is real.
        let basis = gen_tiles1(4).unwrap();
        for s in basis.states() {
            for z in s.a.entries().iter().chain(s.b.entries()) {
                assert_eq!(z.im, 0.0, "{}", s.label);
            }
        }
        let v = &basis.states()[0];
        assert_eq!(v.label, "V[m=1,k=0]");
        let h = 1.0 / sqrt(2.0);
        assert_eq!(v.b, ComplexVector::from_real(&[0.0, h, -h, 0.0]));
    }

    #[test]
    fn gen_tiles2_counts_and_bounds() {
        assert_eq!(gen_tiles2(3, 4).unwrap().len(), 7);
        assert_eq!(gen_tiles2(4, 6).unwrap().len(), 17);
        for (m, n) in [(3, 3), (2, 5), (5, 4)] {
            assert!(
                matches!(gen_tiles2(m, n), Err(Error::InvalidDimension(_))),
                "{m},{n}"
            );
        }
    }

    #[test]
    fn gen_tiles2_short_tile_cells() {
        let basis = gen_tiles2(3, 4).unwrap();
        let s2 = &basis.states()[2];
        assert_eq!(s2.label, "S[j=2]");
        assert_eq!(s2.tile_cells.as_deref(), Some(&[(0, 2), (2, 2)][..]));
    }

    #[test]
    fn cartesian_small() {
        let b = cartesian_basis(2, 2).unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(
            b.states()[1].joint(),
            ComplexVector::from_real(&[0.0, 1.0, 0.0, 0.0])
        );
        assert_eq!(cartesian_basis(1, 3).unwrap().len(), 3);
    }

    #[test]
    fn fourier_direct_substitution() {
        let v = fourier_local_state(4, &[1, 2], 1, C64::new(-1.0, 0.0)).unwrap();
        let h = 1.0 / sqrt(2.0);
        assert_eq!(v, ComplexVector::from_real(&[0.0, h, -h, 0.0]));
    }

    #[test]
    fn fourier_m0_is_uniform() {
        let v = fourier_local_state(5, &[4, 0, 2], 0, root_of_unity(1, 3)).unwrap();
        let u = 1.0 / sqrt(3.0);
        assert_eq!(v, ComplexVector::from_real(&[u, 0.0, u, 0.0, u]));
    }

    #[test]
    fn fourier_modes_are_orthogonal() {
        let support = [0, 2, 3, 5, 6];
        let omega = root_of_unity(1, 5);
        let modes: Vec<_> = (0..5)
            .map(|m| fourier_local_state(7, &support, m, omega).unwrap())
            .collect();
        for i in 0..5 {
            for j in 0..5 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((modes[i].inner(&modes[j]).norm() - expected).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn fourier_rejects_bad_support() {
        let one = C64::new(1.0, 0.0);
        assert_eq!(
            fourier_local_state(3, &[0, 3], 1, one),
            Err(Error::IndexOutOfRange { index: 3, dim: 3 })
        );
        assert!(fourier_local_state(3, &[1, 1], 1, one).is_err());
        assert!(fourier_local_state(3, &[], 1, one).is_err());
    }

    #[test]
    fn quarter_turn_roots_are_exact() {
        assert_eq!(root_of_unity(1, 2), C64::new(-1.0, 0.0));
        assert_eq!(root_of_unity(1, 4), C64::new(0.0, 1.0));
        assert_eq!(root_of_unity(-1, 4), C64::new(0.0, -1.0));
    }
}
