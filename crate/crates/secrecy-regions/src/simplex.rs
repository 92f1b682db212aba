//! Dense two-phase simplex for the small LPs behind the rate polytope
//! (at most 8 structural variables and ~12 constraints per solve).
//!
//! Bland's rule throughout: deterministic and cycle-free, which matters more
//! than pivot count at this size.

use crate::error::{Error, Result};

/// Pivot tolerance.
const TOL: f64 = 1e-10;
/// Phase-1 residual above which the system is declared infeasible.
const FEAS_TOL: f64 = 1e-9;
const MAX_PIVOTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Rel {
    Le,
    Eq,
}

#[derive(Debug, Clone)]
pub(crate) enum LpOutcome {
    Optimal { value: f64, x: Vec<f64> },
    Infeasible,
}

struct Tableau {
    m: usize,
    ncols: usize,
    a: Vec<f64>, // m rows of ncols, row-major
    b: Vec<f64>,
    red: Vec<f64>, // reduced costs
    basis: Vec<usize>,
    alive: Vec<bool>,
    banned_from: usize, // columns >= banned_from are artificial
}

impl Tableau {
    fn at(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.ncols + j]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let w = self.ncols;
        let inv = 1.0 / self.a[row * w + col];
        for j in 0..w {
            self.a[row * w + j] *= inv;
        }
        self.b[row] *= inv;
        self.a[row * w + col] = 1.0;
        for i in 0..self.m {
            if i == row || !self.alive[i] {
                continue;
            }
            let f = self.a[i * w + col];
            if f == 0.0 {
                continue;
            }
            for j in 0..w {
                self.a[i * w + j] -= f * self.a[row * w + j];
            }
            self.a[i * w + col] = 0.0;
            self.b[i] -= f * self.b[row];
            if self.b[i].abs() < 1e-15 {
                self.b[i] = 0.0;
            }
        }
        let f = self.red[col];
        if f != 0.0 {
            for j in 0..w {
                self.red[j] -= f * self.a[row * w + j];
            }
            self.red[col] = 0.0;
        }
        self.basis[row] = col;
    }

    /// Runs simplex iterations until no improving column remains.
    /// `allow_artificial` keeps artificial columns eligible (phase 1 only).
    fn optimize(&mut self, allow_artificial: bool) -> Result<()> {
        for _ in 0..MAX_PIVOTS {
            let limit = if allow_artificial { self.ncols } else { self.banned_from };
            // Bland: lowest-index improving column.
            let Some(col) = (0..limit).find(|&j| self.red[j] > TOL) else {
                return Ok(());
            };
            // Ratio test; ties broken by lowest basis index (Bland).
            let mut best: Option<(f64, usize, usize)> = None; // (ratio, basis var, row)
            for i in 0..self.m {
                if !self.alive[i] {
                    continue;
                }
                let aij = self.at(i, col);
                if aij > TOL {
                    let ratio = self.b[i] / aij;
                    let key = (ratio, self.basis[i]);
                    if best.map_or(true, |(r, v, _)| key < (r, v)) {
                        best = Some((ratio, self.basis[i], i));
                    }
                }
            }
            let Some((_, _, row)) = best else {
                return Err(Error::Numeric(
                    "linear program is unbounded; constraint system is malformed".into(),
                ));
            };
            self.pivot(row, col);
        }
        Err(Error::Numeric("simplex failed to converge".into()))
    }
}

/// Maximizes `objective . x` subject to `rows` (coefficients, relation, rhs)
/// and `x >= 0`.
pub(crate) fn maximize(objective: &[f64], rows: &[(Vec<f64>, Rel, f64)]) -> Result<LpOutcome> {
    let n = objective.len();
    let m = rows.len();

    // Normalize so every rhs is non-negative; negated Le rows become Ge rows.
    #[derive(Clone, Copy, PartialEq)]
    enum Kind {
        Le,
        Ge,
        Eq,
    }
    let mut norm: Vec<(Vec<f64>, Kind, f64)> = Vec::with_capacity(m);
    for (coeffs, rel, rhs) in rows {
        assert_eq!(coeffs.len(), n, "constraint arity mismatch");
        if *rhs >= 0.0 {
            let kind = match rel {
                Rel::Le => Kind::Le,
                Rel::Eq => Kind::Eq,
            };
            norm.push((coeffs.clone(), kind, *rhs));
        } else {
            let kind = match rel {
                Rel::Le => Kind::Ge,
                Rel::Eq => Kind::Eq,
            };
            norm.push((coeffs.iter().map(|c| -c).collect(), kind, -rhs));
        }
    }

    let n_slack = norm.iter().filter(|(_, k, _)| *k != Kind::Eq).count();
    let n_art = norm.iter().filter(|(_, k, _)| *k != Kind::Le).count();
    let ncols = n + n_slack + n_art;

    let mut t = Tableau {
        m,
        ncols,
        a: vec![0.0; m * ncols],
        b: vec![0.0; m],
        red: vec![0.0; ncols],
        basis: vec![0; m],
        alive: vec![true; m],
        banned_from: n + n_slack,
    };

    let mut slack = n;
    let mut art = n + n_slack;
    for (i, (coeffs, kind, rhs)) in norm.iter().enumerate() {
        for (j, &c) in coeffs.iter().enumerate() {
            t.a[i * ncols + j] = c;
        }
        t.b[i] = *rhs;
        match kind {
            Kind::Le => {
                t.a[i * ncols + slack] = 1.0;
                t.basis[i] = slack;
                slack += 1;
            }
            Kind::Ge => {
                t.a[i * ncols + slack] = -1.0;
                slack += 1;
                t.a[i * ncols + art] = 1.0;
                t.basis[i] = art;
                art += 1;
            }
            Kind::Eq => {
                t.a[i * ncols + art] = 1.0;
                t.basis[i] = art;
                art += 1;
            }
        }
    }

    if n_art > 0 {
        // Phase 1: maximize -(sum of artificials). Price out the initial basis.
        let mut infeas = 0.0;
        for i in 0..m {
            if t.basis[i] >= t.banned_from {
                for j in 0..ncols {
                    t.red[j] += t.a[i * ncols + j];
                }
                infeas += t.b[i];
            }
        }
        for j in t.banned_from..ncols {
            t.red[j] -= 1.0;
        }
        t.optimize(true)?;
        let residual: f64 = (0..m)
            .filter(|&i| t.alive[i] && t.basis[i] >= t.banned_from)
            .map(|i| t.b[i])
            .sum();
        let _ = infeas;
        if residual > FEAS_TOL {
            return Ok(LpOutcome::Infeasible);
        }
        // Drive surviving artificials out of the basis (degenerate pivots),
        // or retire rows that have become redundant.
        for i in 0..m {
            if !t.alive[i] || t.basis[i] < t.banned_from {
                continue;
            }
            let col = (0..t.banned_from).find(|&j| t.at(i, j).abs() > TOL);
            match col {
                Some(j) => t.pivot(i, j),
                None => t.alive[i] = false,
            }
        }
    }

    // Phase 2 objective, priced out against the current basis.
    t.red = vec![0.0; ncols];
    t.red[..n].copy_from_slice(objective);
    for i in 0..m {
        if !t.alive[i] {
            continue;
        }
        let bi = t.basis[i];
        let c = if bi < n { objective[bi] } else { 0.0 };
        if c != 0.0 {
            for j in 0..ncols {
                t.red[j] -= c * t.a[i * ncols + j];
            }
        }
    }
    for i in 0..m {
        if t.alive[i] {
            t.red[t.basis[i]] = 0.0;
        }
    }
    t.optimize(false)?;

    let mut x = vec![0.0; n];
    for i in 0..m {
        if t.alive[i] && t.basis[i] < n {
            x[t.basis[i]] = t.b[i].max(0.0);
        }
    }
    let value = objective.iter().zip(&x).map(|(c, v)| c * v).sum();
    Ok(LpOutcome::Optimal { value, x })
}
