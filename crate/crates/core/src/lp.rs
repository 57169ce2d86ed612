//! Seidel's randomized incremental LP for dimension at most 3.
//!
//! Minimises `c . x` subject to `a_k . x <= b_k`. A virtual box
//! `|x_i| <= M` keeps every intermediate problem bounded; unboundedness is
//! decided afterwards by a recession-cone LP whenever the box is active.
//! Rows are normalised to unit infinity norm and the reported optimum is
//! polished by re-solving the active `d x d` system.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GeomError, Result};
use crate::tol::EPS_LP;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Optimiser (empty unless `Optimal`).
    pub x: Vec<f64>,
    pub value: f64,
    /// Indices of constraints tight at `x`, ascending.
    pub active: Vec<usize>,
}

#[derive(Clone, Copy, Debug)]
struct Row {
    a: [f64; 3],
    b: f64,
}

#[derive(Clone, Debug)]
pub struct LinearProgram {
    dim: usize,
    c: [f64; 3],
    rows: Vec<Row>,
    trivially_infeasible: bool,
}

const PARALLEL: f64 = 1e-11;

impl LinearProgram {
    /// New problem minimising `objective . x`; `objective.len()` is the
    /// dimension (1 to 3).
    pub fn new(objective: &[f64]) -> Result<Self> {
        let dim = objective.len();
        if !(1..=3).contains(&dim) {
            return Err(GeomError::ParamOutOfRange {
                name: "dim",
                value: dim as f64,
                domain: "1..=3",
            });
        }
        if objective.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let mut c = [0.0; 3];
        c[..dim].copy_from_slice(objective);
        Ok(LinearProgram {
            dim,
            c,
            rows: Vec::new(),
            trivially_infeasible: false,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_constraints(&self) -> usize {
        self.rows.len()
    }

    /// Adds `a . x <= b`. Rows are stored normalised; zero rows are kept as
    /// `0 <= b` and only checked for consistency.
    pub fn add_constraint(&mut self, a: &[f64], b: f64) -> Result<()> {
        if a.len() != self.dim {
            return Err(GeomError::ParamOutOfRange {
                name: "row length",
                value: a.len() as f64,
                domain: "equal to dimension",
            });
        }
        if a.iter().any(|v| !v.is_finite()) || !b.is_finite() {
            return Err(GeomError::NonFinite);
        }
        let m = a.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let mut r = Row { a: [0.0; 3], b: 0.0 };
        if m == 0.0 {
            if b < -EPS_LP {
                self.trivially_infeasible = true;
            }
        } else {
            for i in 0..self.dim {
                r.a[i] = a[i] / m;
            }
            r.b = b / m;
        }
        self.rows.push(r);
        Ok(())
    }

    pub fn solve(&self, seed: u64) -> Result<LpSolution> {
        let d = self.dim;
        let infeasible = || LpSolution {
            status: LpStatus::Infeasible,
            x: Vec::new(),
            value: f64::INFINITY,
            active: Vec::new(),
        };
        if self.trivially_infeasible {
            return Ok(infeasible());
        }
        let live: Vec<usize> = (0..self.rows.len())
            .filter(|&i| self.rows[i].a.iter().any(|v| *v != 0.0))
            .collect();
        let mut order = live.clone();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let rows: Vec<Row> = order.iter().map(|&i| self.rows[i]).collect();

        let bmax = rows.iter().fold(1.0f64, |m, r| m.max(r.b.abs()));
        let big = 1e6 * bmax;
        let cn = norm_inf(&self.c, d);
        let c = if cn > 0.0 { scale(self.c, 1.0 / cn) } else { self.c };

        let Some(mut x) = level(&rows, c, d, big) else {
            return Ok(infeasible());
        };
        if x.iter().any(|v| v.is_nan()) {
            return Err(GeomError::NumericalBreakdown("NaN optimiser".into()));
        }

        if (0..d).any(|i| x[i].abs() >= big * (1.0 - 1e-9)) && cn > 0.0 {
            // Box active: unbounded iff some recession direction descends.
            let rec: Vec<Row> = rows.iter().map(|r| Row { a: r.a, b: 0.0 }).collect();
            if let Some(dir) = level(&rec, c, d, 1.0) {
                if dot(&c, &dir, d) < -1e-9 {
                    return Ok(LpSolution {
                        status: LpStatus::Unbounded,
                        x: Vec::new(),
                        value: f64::NEG_INFINITY,
                        active: Vec::new(),
                    });
                }
            }
        }

        self.polish(&mut x, &live);

        let scale_x = 1.0 + norm_inf(&x, d);
        let viol = live
            .iter()
            .map(|&i| dot(&self.rows[i].a, &x, d) - self.rows[i].b)
            .fold(0.0f64, f64::max);
        if viol > 1e-6 * scale_x {
            return Err(GeomError::NumericalBreakdown(format!(
                "optimiser violates a constraint by {viol:e}"
            )));
        }
        let active = live
            .iter()
            .copied()
            .filter(|&i| (dot(&self.rows[i].a, &x, d) - self.rows[i].b).abs() <= 1e-9 * scale_x)
            .collect();
        Ok(LpSolution {
            status: LpStatus::Optimal,
            x: x[..d].to_vec(),
            value: dot(&self.c, &x, d),
            active,
        })
    }

    // Re-solve the system of the lowest-index independent near-active rows;
    // keep the result only if it is no worse.
    fn polish(&self, x: &mut [f64; 3], live: &[usize]) {
        let d = self.dim;
        let sx = 1.0 + norm_inf(x, d);
        let mut basis: Vec<[f64; 3]> = Vec::new();
        let mut pick: Vec<Row> = Vec::new();
        for &i in live {
            let r = self.rows[i];
            if (dot(&r.a, x, d) - r.b).abs() > 1e-7 * sx {
                continue;
            }
            let mut v = r.a;
            for q in &basis {
                let p = dot(&v, q, d);
                for k in 0..d {
                    v[k] -= p * q[k];
                }
            }
            let n = dot(&v, &v, d).sqrt();
            if n > 1e-6 {
                basis.push(scale(v, 1.0 / n));
                pick.push(r);
                if pick.len() == d {
                    break;
                }
            }
        }
        if pick.len() < d {
            return;
        }
        let Some(y) = solve_square(&pick, d) else {
            return;
        };
        let viol = |z: &[f64; 3]| {
            live.iter()
                .map(|&i| dot(&self.rows[i].a, z, d) - self.rows[i].b)
                .fold(0.0f64, f64::max)
        };
        let (vy, vx) = (viol(&y), viol(x));
        let (cy, cx) = (dot(&self.c, &y, d), dot(&self.c, x, d));
        if y.iter().all(|v| v.is_finite())
            && vy <= vx.max(EPS_LP * sx)
            && cy <= cx + 1e-9 * (1.0 + cx.abs())
        {
            *x = y;
        }
    }
}

fn dot(a: &[f64; 3], b: &[f64; 3], d: usize) -> f64 {
    (0..d).map(|i| a[i] * b[i]).sum()
}

fn norm_inf(a: &[f64; 3], d: usize) -> f64 {
    (0..d).fold(0.0f64, |m, i| m.max(a[i].abs()))
}

fn scale(mut a: [f64; 3], k: f64) -> [f64; 3] {
    for v in a.iter_mut() {
        *v *= k;
    }
    a
}

// Gaussian elimination with partial pivoting.
fn solve_square(rows: &[Row], d: usize) -> Option<[f64; 3]> {
    let mut m = [[0.0; 4]; 3];
    for (i, r) in rows.iter().enumerate().take(d) {
        m[i][..d].copy_from_slice(&r.a[..d]);
        m[i][3] = r.b;
    }
    for col in 0..d {
        let p = (col..d).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[p][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, p);
        for i in 0..d {
            if i != col {
                let f = m[i][col] / m[col][col];
                for k in col..4 {
                    m[i][k] -= f * m[col][k];
                }
            }
        }
    }
    let mut x = [0.0; 3];
    for i in 0..d {
        x[i] = m[i][3] / m[i][i];
    }
    Some(x)
}

// Optimum of `c . x` over `rows` and the box |x_i| <= big, or None if
// infeasible. Rows carry `d` live coordinates.
fn level(rows: &[Row], c: [f64; 3], d: usize, big: f64) -> Option<[f64; 3]> {
    if d == 1 {
        return interval(rows, c[0], big).map(|v| [v, 0.0, 0.0]);
    }
    let mut x = [0.0; 3];
    for i in 0..d {
        x[i] = if c[i] > 0.0 {
            -big
        } else if c[i] < 0.0 {
            big
        } else {
            0.0
        };
    }
    for k in 0..rows.len() {
        let r = rows[k];
        if dot(&r.a, &x, d) <= r.b + EPS_LP {
            continue;
        }
        let j = (0..d)
            .max_by(|&p, &q| r.a[p].abs().total_cmp(&r.a[q].abs()))
            .unwrap_or(0);
        let mut sub = Vec::with_capacity(k + 2);
        for sgn in [1.0, -1.0] {
            let mut e = Row { a: [0.0; 3], b: big };
            e.a[j] = sgn;
            if !push_projected(&mut sub, e, r, j, d) {
                return None;
            }
        }
        for q in &rows[..k] {
            if !push_projected(&mut sub, *q, r, j, d) {
                return None;
            }
        }
        let mut c2 = [0.0; 3];
        let mut t = 0;
        for i in 0..d {
            if i != j {
                c2[t] = c[i] - c[j] * r.a[i] / r.a[j];
                t += 1;
            }
        }
        let cn = norm_inf(&c2, d - 1);
        let c0 = norm_inf(&c, d);
        if cn <= 1e-12 * c0 || cn == 0.0 {
            c2 = [0.0; 3];
        } else {
            c2 = scale(c2, 1.0 / cn);
        }
        let y = level(&sub, c2, d - 1, big)?;
        let mut s = r.b;
        let mut t = 0;
        for i in 0..d {
            if i != j {
                x[i] = y[t];
                s -= r.a[i] * y[t];
                t += 1;
            }
        }
        x[j] = s / r.a[j];
    }
    Some(x)
}

// Substitutes the pivot equation into `q`; false if the result is an
// infeasible constant row.
fn push_projected(out: &mut Vec<Row>, q: Row, r: Row, j: usize, d: usize) -> bool {
    let f = q.a[j] / r.a[j];
    let mut a = [0.0; 3];
    let mut t = 0;
    for i in 0..d {
        if i != j {
            a[t] = q.a[i] - f * r.a[i];
            t += 1;
        }
    }
    let b = q.b - f * r.b;
    let m = norm_inf(&a, d - 1);
    if m <= PARALLEL {
        return b >= -EPS_LP;
    }
    out.push(Row {
        a: scale(a, 1.0 / m),
        b: b / m,
    });
    true
}

fn interval(rows: &[Row], c: f64, big: f64) -> Option<f64> {
    let (mut lo, mut hi) = (-big, big);
    for r in rows {
        let a = r.a[0];
        if a > PARALLEL {
            hi = hi.min(r.b / a);
        } else if a < -PARALLEL {
            lo = lo.max(r.b / a);
        } else if r.b < -EPS_LP {
            return None;
        }
    }
    if lo > hi + EPS_LP {
        return None;
    }
    if lo > hi {
        return Some(0.5 * (lo + hi));
    }
    Some(if c > 0.0 {
        lo
    } else if c < 0.0 {
        hi
    } else {
        0.0f64.clamp(lo, hi)
    })
}
