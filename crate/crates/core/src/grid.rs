//! Uniform space-time mesh, the compact averaging operator, discrete norms and
//! the tridiagonal solver.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform mesh on `[0, L] x [0, T]` with `M` spatial intervals and `N` time steps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    m: usize,
    n: usize,
    length: f64,
    final_time: f64,
}

impl Grid {
    pub fn new(m: usize, n: usize, length: f64, final_time: f64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidGrid(format!("need M >= 2, got {m}")));
        }
        if n < 1 {
            return Err(Error::InvalidGrid("need N >= 1".into()));
        }
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::InvalidGrid(format!("need L > 0, got {length}")));
        }
        if !(final_time > 0.0 && final_time.is_finite()) {
            return Err(Error::InvalidGrid(format!("need T > 0, got {final_time}")));
        }
        Ok(Self {
            m,
            n,
            length,
            final_time,
        })
    }

    /// Unit square `L = T = 1`.
    pub fn unit(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, 1.0, 1.0)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn final_time(&self) -> f64 {
        self.final_time
    }

    pub fn h(&self) -> f64 {
        self.length / self.m as f64
    }

    pub fn tau(&self) -> f64 {
        self.final_time / self.n as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        i as f64 * self.h()
    }

    pub fn t(&self, k: usize) -> f64 {
        k as f64 * self.tau()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..=self.m).map(|i| self.x(i)).collect()
    }

    /// Samples `f(x_i)` at every spatial node.
    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Field {
        Field((0..=self.m).map(|i| f(self.x(i))).collect())
    }
}

/// Values of a grid function at one time level, one per spatial node.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Field(pub Vec<f64>);

impl Field {
    pub fn zeros(nodes: usize) -> Self {
        Self(vec![0.0; nodes])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self(self.0.iter().map(|v| c * v).collect())
    }

    pub fn sub(&self, other: &Field) -> Result<Self> {
        check_len(other, self.len())?;
        Ok(Self(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn add(&self, other: &Field) -> Result<Self> {
        check_len(other, self.len())?;
        Ok(Self(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }
}

impl From<Vec<f64>> for Field {
    fn from(v: Vec<f64>) -> Self {
        Self(v)
    }
}

impl std::ops::Index<usize> for Field {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

fn check_len(u: &Field, expected: usize) -> Result<()> {
    if u.len() != expected {
        return Err(Error::SizeMismatch {
            expected,
            got: u.len(),
        });
    }
    Ok(())
}

fn check_min_nodes(u: &Field) -> Result<()> {
    if u.len() < 3 {
        return Err(Error::SizeMismatch {
            expected: 3,
            got: u.len(),
        });
    }
    Ok(())
}

/// Compact averaging `(u_{i-1} + 10 u_i + u_{i+1}) / 12` at interior nodes;
/// boundary nodes pass through.
pub fn apply_compact(u: &Field) -> Result<Field> {
    check_min_nodes(u)?;
    let v = &u.0;
    let mut out = v.clone();
    for i in 1..v.len() - 1 {
        out[i] = (v[i - 1] + 10.0 * v[i] + v[i + 1]) / 12.0;
    }
    Ok(Field(out))
}

/// Centered second difference at interior nodes; boundary entries are zero.
pub fn second_diff(u: &Field, h: f64) -> Result<Field> {
    check_min_nodes(u)?;
    let mut out = vec![0.0; u.len()];
    second_diff_into(&u.0, h, &mut out);
    Ok(Field(out))
}

pub(crate) fn second_diff_into(u: &[f64], h: f64, out: &mut [f64]) {
    let inv_h2 = 1.0 / (h * h);
    let last = u.len() - 1;
    out[0] = 0.0;
    out[last] = 0.0;
    for i in 1..last {
        out[i] = (u[i - 1] - 2.0 * u[i] + u[i + 1]) * inv_h2;
    }
}

/// `<u, v> = h Σ_{i=1}^{M-1} u_i v_i`.
pub fn inner(u: &Field, v: &Field, h: f64) -> Result<f64> {
    check_len(v, u.len())?;
    let n = u.len();
    if n < 2 {
        return Ok(0.0);
    }
    Ok(h * u.0[1..n - 1]
        .iter()
        .zip(&v.0[1..n - 1])
        .map(|(a, b)| a * b)
        .sum::<f64>())
}

/// `<δu, δv> = h Σ_{i=0}^{M-1} δu_{i+1/2} δv_{i+1/2}`.
pub fn diff_inner(u: &Field, v: &Field, h: f64) -> Result<f64> {
    check_len(v, u.len())?;
    Ok(h * u
        .0
        .windows(2)
        .zip(v.0.windows(2))
        .map(|(a, b)| ((a[1] - a[0]) / h) * ((b[1] - b[0]) / h))
        .sum::<f64>())
}

/// Discrete L2 norm over interior nodes only.
pub fn discrete_l2_norm(u: &Field, h: f64) -> f64 {
    let n = u.len();
    if n < 3 {
        return 0.0;
    }
    (h * u.0[1..n - 1].iter().map(|v| v * v).sum::<f64>()).sqrt()
}

/// Maximum norm over all nodes, boundaries included.
pub fn max_norm(u: &Field) -> f64 {
    u.0.iter().fold(0.0, |m: f64, v| m.max(v.abs()))
}

/// Tridiagonal matrix of order `n`: `lower[i]` couples row `i + 1` to column
/// `i`, `upper[i]` couples row `i` to column `i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub lower: Vec<f64>,
    pub diag: Vec<f64>,
    pub upper: Vec<f64>,
}

const DOMINANCE_SLACK: f64 = 1e-14;

impl Tridiagonal {
    pub fn new(lower: Vec<f64>, diag: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::SizeMismatch {
                expected: 1,
                got: 0,
            });
        }
        for band in [&lower, &upper] {
            if band.len() != n - 1 {
                return Err(Error::SizeMismatch {
                    expected: n - 1,
                    got: band.len(),
                });
            }
        }
        Ok(Self { lower, diag, upper })
    }

    /// Constant-coefficient Toeplitz tridiagonal `tri[sub, main, sup]`.
    pub fn constant(n: usize, sub: f64, main: f64, sup: f64) -> Self {
        let off = n.saturating_sub(1);
        Self {
            lower: vec![sub; off],
            diag: vec![main; n],
            upper: vec![sup; off],
        }
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    /// `|d_i| - |l_i| - |u_i|` for row `i`.
    pub fn dominance_margin(&self, row: usize) -> f64 {
        let l = if row > 0 {
            self.lower[row - 1].abs()
        } else {
            0.0
        };
        let u = if row + 1 < self.order() {
            self.upper[row].abs()
        } else {
            0.0
        };
        self.diag[row].abs() - l - u
    }

    pub fn check_dominance(&self) -> Result<()> {
        for row in 0..self.order() {
            let margin = self.dominance_margin(row);
            if margin.is_nan() || margin <= -DOMINANCE_SLACK {
                return Err(Error::NotDominant { row, margin });
            }
        }
        Ok(())
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.order();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * x[i];
                if i > 0 {
                    s += self.lower[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    s += self.upper[i] * x[i + 1];
                }
                s
            })
            .collect()
    }

    /// Infinity norm (maximum absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        (0..self.order())
            .map(|r| 2.0 * self.diag[r].abs() - self.dominance_margin(r))
            .fold(0.0, f64::max)
    }
}

/// Thomas elimination without pivoting. The system must be diagonally
/// dominant; a violation means the caller assembled it wrong.
pub fn thomas_solve(sys: &Tridiagonal, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = sys.order();
    if rhs.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: rhs.len(),
        });
    }
    sys.check_dominance()?;

    let mut c = vec![0.0; n];
    let mut x = vec![0.0; n];
    let mut denom = sys.diag[0];
    if n > 1 {
        c[0] = sys.upper[0] / denom;
    }
    x[0] = rhs[0] / denom;
    for i in 1..n {
        let a = sys.lower[i - 1];
        denom = sys.diag[i] - a * c[i - 1];
        if i + 1 < n {
            c[i] = sys.upper[i] / denom;
        }
        x[i] = (rhs[i] - a * x[i - 1]) / denom;
    }
    for i in (0..n - 1).rev() {
        x[i] -= c[i] * x[i + 1];
    }
    Ok(x)
}
