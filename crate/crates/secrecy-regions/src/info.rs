//! Exact information measures on finite probability mass functions, plus the
//! scalar Gaussian capacity function.
//!
//! Everything is computed in bits (base-2 logarithms) with the convention
//! `0 log 0 = 0`. Joint distributions carry named axes so that mutual
//! information between arbitrary groups of variables can be requested by
//! name, e.g. `I(X1; Y | X2, V1, U)`.

use crate::error::{Error, Result};

/// Normalization tolerance for probability vectors.
pub const PMF_TOL: f64 = 1e-12;

/// Mutual information values above this (negative) floor are floating-point
/// noise and clamp to zero; anything more negative is a genuine inconsistency.
const MI_NEG_FLOOR: f64 = -1e-10;

/// Gaussian capacity `C(x) = (1/2) log2(1 + x)` in bits per channel use.
pub fn cap(snr: f64) -> Result<f64> {
    if !snr.is_finite() || snr < 0.0 {
        return Err(Error::Domain(format!(
            "cap requires a finite non-negative snr, got {snr}"
        )));
    }
    Ok(cap_nn(snr))
}

/// `cap` for arguments known non-negative by construction.
pub(crate) fn cap_nn(snr: f64) -> f64 {
    debug_assert!(snr >= 0.0);
    0.5 * (1.0 + snr).log2()
}

/// Compensated (Kahan) summation; keeps pmf normalization checks meaningful
/// even for joints with hundreds of thousands of entries.
fn kahan_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut carry = 0.0;
    for v in values {
        let y = v - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    sum
}

fn check_normalized(probs: &[f64], what: &str) -> Result<()> {
    for (i, &p) in probs.iter().enumerate() {
        if !p.is_finite() || p < 0.0 {
            return Err(Error::Validation(format!(
                "{what}: entry {i} is {p}, must be finite and >= 0"
            )));
        }
    }
    let sum = kahan_sum(probs.iter().copied());
    if (sum - 1.0).abs() > PMF_TOL {
        return Err(Error::Validation(format!(
            "{what}: entries sum to {sum}, not 1 within {PMF_TOL}"
        )));
    }
    Ok(())
}

/// A probability mass function over a finite alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct Pmf {
    probs: Vec<f64>,
}

impl Pmf {
    /// Validates non-negativity and normalization (tolerance [`PMF_TOL`]).
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::Validation("pmf must have at least one entry".into()));
        }
        check_normalized(&probs, "pmf")?;
        Ok(Self { probs })
    }

    /// Explicitly renormalizes a non-negative weight vector. Inputs are never
    /// renormalized silently elsewhere; this is the one opt-in path.
    pub fn normalized(mut weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Validation("pmf must have at least one entry".into()));
        }
        let sum = kahan_sum(weights.iter().copied());
        if !(sum > 0.0) || !sum.is_finite() {
            return Err(Error::Validation(format!(
                "cannot normalize weights with sum {sum}"
            )));
        }
        for w in &mut weights {
            if !w.is_finite() || *w < 0.0 {
                return Err(Error::Validation(format!("negative or non-finite weight {w}")));
            }
            *w /= sum;
        }
        Ok(Self { probs: weights })
    }

    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "uniform pmf needs a non-empty alphabet");
        Self {
            probs: vec![1.0 / n as f64; n],
        }
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }
}

/// Shannon entropy of a pmf, in bits. Lies in `[0, log2(alphabet size)]`.
pub fn entropy(p: &Pmf) -> f64 {
    entropy_of_slice(&p.probs)
}

fn entropy_of_slice(probs: &[f64]) -> f64 {
    let h = kahan_sum(
        probs
            .iter()
            .map(|&p| if p > 0.0 { -p * p.log2() } else { 0.0 }),
    );
    h.max(0.0)
}

/// A joint pmf over a tuple of finite alphabets with named axes.
///
/// Stored dense in row-major order, last axis fastest.
#[derive(Debug, Clone)]
pub struct JointPmf {
    axes: Vec<String>,
    dims: Vec<usize>,
    probs: Vec<f64>,
}

impl JointPmf {
    /// `axes` pairs each axis name with its alphabet size; `probs` is the
    /// dense row-major table (last listed axis varies fastest).
    pub fn new(axes: Vec<(&str, usize)>, probs: Vec<f64>) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::Validation("joint pmf needs at least one axis".into()));
        }
        let mut names = Vec::with_capacity(axes.len());
        let mut dims = Vec::with_capacity(axes.len());
        for (name, size) in &axes {
            if *size == 0 {
                return Err(Error::Validation(format!("axis {name} has empty alphabet")));
            }
            if names.iter().any(|n: &String| n == name) {
                return Err(Error::Validation(format!("duplicate axis name {name}")));
            }
            names.push((*name).to_owned());
            dims.push(*size);
        }
        let total: usize = dims.iter().product();
        if probs.len() != total {
            return Err(Error::Validation(format!(
                "joint pmf has {} entries, expected {total}",
                probs.len()
            )));
        }
        check_normalized(&probs, "joint pmf")?;
        Ok(Self {
            axes: names,
            dims,
            probs,
        })
    }

    pub fn axes(&self) -> impl Iterator<Item = (&str, usize)> {
        self.axes.iter().map(|s| s.as_str()).zip(self.dims.iter().copied())
    }

    pub fn alphabet_size(&self, axis: &str) -> Option<usize> {
        self.axis_position(axis).map(|i| self.dims[i])
    }

    fn axis_position(&self, axis: &str) -> Option<usize> {
        self.axes.iter().position(|a| a == axis)
    }

    fn resolve(&self, group: &[&str], what: &str) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(group.len());
        for name in group {
            let pos = self.axis_position(name).ok_or_else(|| {
                Error::Usage(format!("{what}: axis {name} not present in joint pmf"))
            })?;
            if out.contains(&pos) {
                return Err(Error::Usage(format!("{what}: axis {name} listed twice")));
            }
            out.push(pos);
        }
        Ok(out)
    }

    /// Strides of the row-major layout.
    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1usize; self.dims.len()];
        for i in (0..self.dims.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.dims[i + 1];
        }
        strides
    }

    /// Dense marginal over the given axis positions (flattened row-major in
    /// the listed order).
    fn marginal_by_positions(&self, positions: &[usize]) -> Vec<f64> {
        let strides = self.strides();
        let out_len: usize = positions.iter().map(|&p| self.dims[p]).product();
        let mut out = vec![0.0; out_len];
        for (flat, &p) in self.probs.iter().enumerate() {
            let mut idx = 0usize;
            for &pos in positions {
                idx = idx * self.dims[pos] + (flat / strides[pos]) % self.dims[pos];
            }
            out[idx] += p;
        }
        out
    }

    /// Marginal pmf over a group of axes, flattened in the listed order.
    pub fn marginal(&self, group: &[&str]) -> Result<Pmf> {
        let positions = self.resolve(group, "marginal")?;
        if positions.is_empty() {
            return Err(Error::Usage("marginal: empty axis set".into()));
        }
        Pmf::new(self.marginal_by_positions(&positions))
    }

    /// Entropy (bits) of the marginal on a group of axes. An empty group has
    /// zero entropy.
    ///
    /// The computed marginal is divided by its own compensated sum before the
    /// entropy is taken, so that a bucket holding all the mass contributes
    /// exactly zero and degenerate axes cancel exactly in MI differences.
    pub fn group_entropy(&self, group: &[&str]) -> Result<f64> {
        let positions = self.resolve(group, "entropy")?;
        if positions.is_empty() {
            return Ok(0.0);
        }
        let buckets = self.marginal_by_positions(&positions);
        let total = kahan_sum(buckets.iter().copied());
        let h = kahan_sum(buckets.iter().map(|&p| {
            let q = p / total;
            if q > 0.0 {
                -q * q.log2()
            } else {
                0.0
            }
        }));
        Ok(h.max(0.0))
    }
}

fn ensure_disjoint(groups: &[&[&str]], what: &str) -> Result<()> {
    for (i, ga) in groups.iter().enumerate() {
        for gb in groups.iter().skip(i + 1) {
            if let Some(shared) = ga.iter().find(|a| gb.contains(a)) {
                return Err(Error::Usage(format!(
                    "{what}: axis {shared} appears in two of the groups"
                )));
            }
        }
    }
    Ok(())
}

fn clamp_mi(value: f64, what: &str) -> Result<f64> {
    if value < MI_NEG_FLOOR {
        return Err(Error::Numeric(format!(
            "{what} evaluated to {value}, below the {MI_NEG_FLOOR} floor"
        )));
    }
    Ok(value.max(0.0))
}

/// Mutual information `I(A; B)` in bits between two disjoint axis groups,
/// computed as `H(A) + H(B) - H(A,B)`.
pub fn mutual_information(joint: &JointPmf, group_a: &[&str], group_b: &[&str]) -> Result<f64> {
    ensure_disjoint(&[group_a, group_b], "mutual_information")?;
    let merged: Vec<&str> = group_a.iter().chain(group_b.iter()).copied().collect();
    // Grouped so that H(A) - H(A,B) cancels exactly when B is degenerate.
    let value = (joint.group_entropy(group_a)? - joint.group_entropy(&merged)?)
        + joint.group_entropy(group_b)?;
    clamp_mi(value, "mutual information")
}

/// Conditional mutual information `I(A; B | C)` in bits across three pairwise
/// disjoint axis groups. With an empty `group_c` this equals
/// [`mutual_information`].
pub fn conditional_mi(
    joint: &JointPmf,
    group_a: &[&str],
    group_b: &[&str],
    group_c: &[&str],
) -> Result<f64> {
    ensure_disjoint(&[group_a, group_b, group_c], "conditional_mi")?;
    let ac: Vec<&str> = group_a.iter().chain(group_c.iter()).copied().collect();
    let bc: Vec<&str> = group_b.iter().chain(group_c.iter()).copied().collect();
    let abc: Vec<&str> = group_a
        .iter()
        .chain(group_b.iter())
        .chain(group_c.iter())
        .copied()
        .collect();
    // Grouped so that each difference cancels exactly when A or B is
    // degenerate (H(A,C) = H(A,B,C) and H(C) = H(B,C) bitwise).
    let value = (joint.group_entropy(&ac)? - joint.group_entropy(&abc)?)
        + (joint.group_entropy(&bc)? - joint.group_entropy(group_c)?);
    clamp_mi(value, "conditional mutual information")
}
