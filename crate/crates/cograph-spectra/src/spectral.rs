//! Exact adjacency spectra.
//!
//! The characteristic polynomial `det(xI - A)` is computed by the
//! Faddeev–LeVerrier recurrence over arbitrary-precision integers (every
//! division in it is exact). Eigenvalue multiplicities come from the
//! square-free decomposition of that polynomial — the adjacency matrix is
//! symmetric, hence diagonalizable, so root multiplicity equals eigenspace
//! dimension. Interval counts run Sturm chains on the square-free factors,
//! and ranks use fraction-free Bareiss elimination. A cyclic Jacobi
//! eigensolver provides floating-point cross-checks; it never decides a
//! theorem.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::poly::{yun_square_free, IntPoly, SturmChain};

/// Default off-diagonal Frobenius tolerance for the Jacobi solver.
pub const JACOBI_DEFAULT_TOL: f64 = 1e-9;
/// Sweep cap for the Jacobi solver.
pub const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectralError {
    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}

/// Exact characteristic polynomial `det(xI - A(g))`, monic of degree `n`.
///
/// Faddeev–LeVerrier: with `M_1 = A` and `c_{n-1} = -tr(M_1)`, iterate
/// `M_k = A (M_{k-1} + c_{n-k+1} I)` and `c_{n-k} = -tr(M_k)/k`; the trace
/// divisions are exact over the integers.
pub fn char_poly(g: &Graph) -> IntPoly {
    let n = g.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return IntPoly::from_coeffs(coeffs);
    }
    // M_1 = A
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(g.has_edge(i, j) as u8)).collect())
        .collect();
    let trace = |m: &Vec<Vec<BigInt>>| -> BigInt { (0..n).map(|i| m[i][i].clone()).sum() };
    coeffs[n - 1] = -trace(&m);
    for k in 2..=n {
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        // A is 0/1, so A·M is a sum of M's rows over each vertex's neighbors.
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for t in g.neighbors(i) {
                for j in 0..n {
                    next[i][j] += &m[t][j];
                }
            }
        }
        m = next;
        let t = trace(&m);
        let (q, r) = num_integer::Integer::div_rem(&t, &BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace division must be exact");
        coeffs[n - k] = -q;
    }
    IntPoly::from_coeffs(coeffs)
}

/// One square-free factor of the characteristic polynomial with its
/// multiplicity; all roots of `factor` are eigenvalues of that multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorRecord {
    pub factor: IntPoly,
    pub multiplicity: u32,
}

/// Square-free multiplicity decomposition of a monic polynomial, with the
/// multiplicities of the roots 0 and -1 pulled out for direct use.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicitySpectrum {
    pub factors: Vec<FactorRecord>,
    pub mult_zero: u32,
    pub mult_minus_one: u32,
}

/// Yun decomposition of `p` (monic, nonzero): `p = Π factor^multiplicity`
/// with pairwise-coprime square-free factors.
pub fn square_free_decomposition(p: &IntPoly) -> MultiplicitySpectrum {
    let factors: Vec<FactorRecord> = yun_square_free(p)
        .into_iter()
        .map(|(factor, multiplicity)| FactorRecord { factor, multiplicity })
        .collect();
    let mult_at = |x: i64| {
        factors
            .iter()
            .find(|r| r.factor.eval_i64(x).is_zero())
            .map_or(0, |r| r.multiplicity)
    };
    let mult_zero = mult_at(0);
    let mult_minus_one = mult_at(-1);
    MultiplicitySpectrum { factors, mult_zero, mult_minus_one }
}

impl MultiplicitySpectrum {
    pub fn of_graph(g: &Graph) -> MultiplicitySpectrum {
        square_free_decomposition(&char_poly(g))
    }

    /// Exact number of roots (with multiplicity) strictly inside `(a, b)`:
    /// per factor, divide out any root at an endpoint, Sturm-count the rest,
    /// and weight by the factor's multiplicity.
    pub fn count_roots_open(&self, a: i64, b: i64) -> usize {
        assert!(a < b, "empty interval ({a}, {b})");
        let (ba, bb) = (BigInt::from(a), BigInt::from(b));
        let mut total = 0;
        for rec in &self.factors {
            let mut f = rec.factor.clone();
            for endpoint in [&ba, &bb] {
                if f.eval(endpoint).is_zero() {
                    // square-free, so a single division clears the endpoint
                    f = f
                        .div_exact(&IntPoly::x_minus(endpoint))
                        .expect("endpoint root divides its factor");
                }
            }
            if f.degree().is_none_or(|d| d == 0) {
                continue;
            }
            total += SturmChain::new(&f).count_roots_open(&ba, &bb) * rec.multiplicity as usize;
        }
        total
    }

    /// Largest multiplicity among eigenvalues other than 0 and -1
    /// (zero when there are none).
    pub fn max_mult_excluding_zero_minus_one(&self) -> u32 {
        self.factors
            .iter()
            .filter(|rec| strip_zero_and_minus_one(&rec.factor).degree().is_some_and(|d| d > 0))
            .map(|rec| rec.multiplicity)
            .max()
            .unwrap_or(0)
    }

    /// Largest multiplicity over all eigenvalues (zero for the empty graph).
    pub fn max_mult(&self) -> u32 {
        self.factors.iter().map(|r| r.multiplicity).max().unwrap_or(0)
    }
}

/// Removes the factors `x` and `x + 1` if present (each at most once in a
/// square-free polynomial).
pub fn strip_zero_and_minus_one(f: &IntPoly) -> IntPoly {
    let mut out = f.clone();
    for root in [0i64, -1] {
        if out.eval_i64(root).is_zero() {
            out = out
                .div_exact(&IntPoly::x_minus(&BigInt::from(root)))
                .expect("root divides");
        }
    }
    out
}

/// Eigenvalues of `g` strictly inside the open interval `(a, b)`, counted
/// with multiplicity, by exact integer arithmetic.
pub fn count_eigs_open_interval(g: &Graph, a: i64, b: i64) -> usize {
    MultiplicitySpectrum::of_graph(g).count_roots_open(a, b)
}

/// Exact rank over the rationals of `A(g) + shift·I`, by fraction-free
/// Bareiss elimination with full pivoting.
pub fn rank_exact(g: &Graph, shift: i64) -> usize {
    let n = g.order();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = BigInt::from(g.has_edge(i, j) as u8);
                    if i == j {
                        e += shift;
                    }
                    e
                })
                .collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for step in 0..n {
        // Any nonzero entry of the trailing submatrix can pivot.
        let pivot = (step..n)
            .flat_map(|i| (step..n).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero());
        let Some((pi, pj)) = pivot else { break };
        m.swap(step, pi);
        for row in &mut m {
            row.swap(step, pj);
        }
        for r in step + 1..n {
            for c in step + 1..n {
                let num = &m[step][step] * &m[r][c] - &m[r][step] * &m[step][c];
                let (q, rem) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[r][c] = q;
            }
        }
        prev = m[step][step].clone();
        rank += 1;
    }
    rank
}

/// All `n` eigenvalues by cyclic Jacobi rotations, descending, iterated until
/// the off-diagonal Frobenius norm drops below `tol`.
pub fn numeric_eigenvalues(g: &Graph, tol: f64) -> Result<Vec<f64>, SpectralError> {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = g.order();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = g.has_edge(i, j) as u8 as f64;
        }
    }
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += a[i][j] * a[i][j];
                }
            }
        }
        if off.sqrt() < tol {
            let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
            eigs.sort_by(|x, y| y.partial_cmp(x).expect("finite"));
            return Ok(eigs);
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k != p && k != q {
                        let akp = a[k][p];
                        let akq = a[k][q];
                        a[k][p] = c * akp - s * akq;
                        a[p][k] = a[k][p];
                        a[k][q] = s * akp + c * akq;
                        a[q][k] = a[k][q];
                    }
                }
                let app = a[p][p];
                let aqq = a[q][q];
                a[p][p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                a[q][q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    Err(SpectralError::NoConvergence { sweeps: JACOBI_MAX_SWEEPS })
}
