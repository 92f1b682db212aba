//! Secrecy rate regions and sum rates of the Gaussian channel model.
//!
//! Both transmitters hear an attenuated, noisy copy of each other (power
//! gains `h12`, `h21`); the receiver and the eavesdropper hear the
//! superposition through gains `h1, h2` and `g1, g2`. Noise variances are
//! normalized to one. Each user splits its power budget across a coherent
//! cooperative part (`pu`), a relayed cooperative part (`p12`/`p21`), and a
//! direct non-cooperative part (`p10`/`p20`); sweeping the splits and hulling
//! the per-split regions yields the achievable region.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::info::cap_nn;
use crate::polytope::{
    build_polytope, hull2d, pentagon_points, trace_region, union_regions, MutualInfoBundle,
    Region2D,
};
use crate::pool::sweep_pool;

/// Power gains and power budgets of the Gaussian channel (noise variance 1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianChannel {
    /// Main-channel power gains of users 1 and 2.
    pub h1: f64,
    pub h2: f64,
    /// Eavesdropper power gains.
    pub g1: f64,
    pub g2: f64,
    /// Inter-user link gains (user 1 -> user 2, user 2 -> user 1).
    pub h12: f64,
    pub h21: f64,
    /// Average power budgets.
    pub p1: f64,
    pub p2: f64,
}

impl GaussianChannel {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        h1: f64,
        h2: f64,
        g1: f64,
        g2: f64,
        h12: f64,
        h21: f64,
        p1: f64,
        p2: f64,
    ) -> Result<Self> {
        let ch = Self {
            h1,
            h2,
            g1,
            g2,
            h12,
            h21,
            p1,
            p2,
        };
        ch.validate()?;
        Ok(ch)
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("h1", self.h1),
            ("h2", self.h2),
            ("g1", self.g1),
            ("g2", self.g2),
            ("h12", self.h12),
            ("h21", self.h21),
            ("p1", self.p1),
            ("p2", self.p2),
        ];
        for (name, v) in fields {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Validation(format!(
                    "channel field {name} = {v} must be finite and non-negative"
                )));
            }
        }
        Ok(())
    }
}

/// Six-way power allocation `(pu1, p12, p10, pu2, p21, p20)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerSplit {
    pub pu1: f64,
    pub p12: f64,
    pub p10: f64,
    pub pu2: f64,
    pub p21: f64,
    pub p20: f64,
}

/// Tolerance on the per-user power identities `pu + pc + p0 = P`.
const SPLIT_TOL: f64 = 1e-9;

impl PowerSplit {
    pub fn new(pu1: f64, p12: f64, p10: f64, pu2: f64, p21: f64, p20: f64) -> Result<Self> {
        let s = Self {
            pu1,
            p12,
            p10,
            pu2,
            p21,
            p20,
        };
        for (name, v) in [
            ("pu1", pu1),
            ("p12", p12),
            ("p10", p10),
            ("pu2", pu2),
            ("p21", p21),
            ("p20", p20),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Validation(format!(
                    "power term {name} = {v} must be finite and non-negative"
                )));
            }
        }
        Ok(s)
    }

    /// Splits each budget by fractions: `pu = fu*P`, cooperative `pc = fc*P`,
    /// and the remainder goes to the non-cooperative part.
    pub fn from_fractions(ch: &GaussianChannel, fu1: f64, fc1: f64, fu2: f64, fc2: f64) -> Result<Self> {
        for (name, f) in [("fu1", fu1), ("fc1", fc1), ("fu2", fu2), ("fc2", fc2)] {
            if !(0.0..=1.0).contains(&f) {
                return Err(Error::Validation(format!("fraction {name} = {f} not in [0, 1]")));
            }
        }
        if fu1 + fc1 > 1.0 + 1e-12 || fu2 + fc2 > 1.0 + 1e-12 {
            return Err(Error::Validation(
                "fractions of one user must sum to at most 1".into(),
            ));
        }
        let pu1 = fu1 * ch.p1;
        let p12 = fc1 * ch.p1;
        let pu2 = fu2 * ch.p2;
        let p21 = fc2 * ch.p2;
        Self::new(
            pu1,
            p12,
            (ch.p1 - pu1 - p12).max(0.0),
            pu2,
            p21,
            (ch.p2 - pu2 - p21).max(0.0),
        )
    }

    fn check_budgets(&self, ch: &GaussianChannel) -> Result<()> {
        let s1 = self.pu1 + self.p12 + self.p10;
        let s2 = self.pu2 + self.p21 + self.p20;
        if (s1 - ch.p1).abs() > SPLIT_TOL || (s2 - ch.p2).abs() > SPLIT_TOL {
            return Err(Error::Validation(format!(
                "split sums ({s1}, {s2}) do not match power budgets ({}, {})",
                ch.p1, ch.p2
            )));
        }
        Ok(())
    }
}

/// Grid resolution for power-split sweeps and boundary tracing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    /// Points per power-fraction axis (21 gives 0.05 steps).
    pub steps_per_fraction: usize,
    /// Weight directions per polytope trace.
    pub angles: usize,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            steps_per_fraction: 21,
            angles: 181,
        }
    }
}

impl SweepSpec {
    pub fn new(steps_per_fraction: usize, angles: usize) -> Result<Self> {
        let spec = Self {
            steps_per_fraction,
            angles,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.steps_per_fraction < 2 {
            return Err(Error::Validation(format!(
                "steps_per_fraction must be at least 2, got {}",
                self.steps_per_fraction
            )));
        }
        if self.angles < 2 {
            return Err(Error::Validation(format!(
                "angles must be at least 2, got {}",
                self.angles
            )));
        }
        Ok(())
    }
}

/// The three ratios from the sum-rate decomposition
/// `(1/2) min(log T1, log T2 + log T3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TTerms {
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
}

fn coherent_terms(ch: &GaussianChannel, s: &PowerSplit) -> (f64, f64) {
    let main = ch.h1 * ch.p1 + ch.h2 * ch.p2 + 2.0 * (ch.h1 * ch.h2 * s.pu1 * s.pu2).sqrt();
    let eaves = ch.g1 * ch.p1 + ch.g2 * ch.p2 + 2.0 * (ch.g1 * ch.g2 * s.pu1 * s.pu2).sqrt();
    (main, eaves)
}

/// Mutual-information constants of the partial decode-and-forward system for
/// one power split.
pub fn bundle_partial(ch: &GaussianChannel, s: &PowerSplit) -> Result<MutualInfoBundle> {
    ch.validate()?;
    s.check_budgets(ch)?;
    let (coh_main, coh_eaves) = coherent_terms(ch, s);
    Ok(MutualInfoBundle {
        a1: cap_nn(ch.h1 * s.p10),
        a2: cap_nn(ch.h2 * s.p20),
        a3: cap_nn(ch.h1 * s.p10 + ch.h2 * s.p20),
        a4: cap_nn(ch.h12 * s.p12 / (1.0 + ch.h12 * s.p10)),
        a5: cap_nn(ch.h21 * s.p21 / (1.0 + ch.h21 * s.p20)),
        a6: cap_nn(coh_main) - cap_nn(coh_eaves),
        b1: cap_nn(ch.g1 * s.p10),
        b2: cap_nn(ch.g2 * s.p20),
        b3: cap_nn(ch.g1 * s.p10 + ch.g2 * s.p20),
        b4: cap_nn(coh_eaves),
    })
}

/// Same constraint structure with the secrecy constants removed: all
/// eavesdropper terms zero and the sum bound from the main channel alone.
/// Tracing this over splits yields the regular (no-secrecy) feedback region.
pub fn bundle_regular(ch: &GaussianChannel, s: &PowerSplit) -> Result<MutualInfoBundle> {
    ch.validate()?;
    s.check_budgets(ch)?;
    let (coh_main, _) = coherent_terms(ch, s);
    Ok(MutualInfoBundle {
        a1: cap_nn(ch.h1 * s.p10),
        a2: cap_nn(ch.h2 * s.p20),
        a3: cap_nn(ch.h1 * s.p10 + ch.h2 * s.p20),
        a4: cap_nn(ch.h12 * s.p12 / (1.0 + ch.h12 * s.p10)),
        a5: cap_nn(ch.h21 * s.p21 / (1.0 + ch.h21 * s.p20)),
        a6: cap_nn(coh_main),
        b1: 0.0,
        b2: 0.0,
        b3: 0.0,
        b4: 0.0,
    })
}

/// Triangle grid of one user's `(pu, pc, p0)` allocations.
fn user_grid(total: f64, steps: usize) -> Vec<(f64, f64, f64)> {
    let denom = (steps - 1) as f64;
    let mut out = Vec::with_capacity(steps * (steps + 1) / 2);
    for i in 0..steps {
        for j in 0..(steps - i) {
            let pu = i as f64 / denom * total;
            let pc = j as f64 / denom * total;
            out.push((pu, pc, (total - pu - pc).max(0.0)));
        }
    }
    out
}

/// Full-cooperation grid: `p0 = 0`, budget split between `pu` and `pc`.
fn user_line_grid(total: f64, steps: usize) -> Vec<(f64, f64)> {
    let denom = (steps - 1) as f64;
    (0..steps)
        .map(|i| {
            let pu = i as f64 / denom * total;
            (pu, (total - pu).max(0.0))
        })
        .collect()
}

fn sweep_bundles<F>(ch: &GaussianChannel, spec: &SweepSpec, bundle: F) -> Result<Region2D>
where
    F: Fn(&GaussianChannel, &PowerSplit) -> Result<MutualInfoBundle> + Sync,
{
    ch.validate()?;
    spec.validate()?;
    let u1 = user_grid(ch.p1, spec.steps_per_fraction);
    let u2 = user_grid(ch.p2, spec.steps_per_fraction);
    let regions: Result<Vec<Region2D>> = sweep_pool().install(|| {
        (0..u1.len() * u2.len())
            .into_par_iter()
            .map(|idx| {
                let (pu1, p12, p10) = u1[idx / u2.len()];
                let (pu2, p21, p20) = u2[idx % u2.len()];
                let s = PowerSplit {
                    pu1,
                    p12,
                    p10,
                    pu2,
                    p21,
                    p20,
                };
                let m = bundle(ch, &s)?;
                trace_region(&build_polytope(&m)?, spec.angles)
            })
            .collect()
    });
    union_regions(regions?.iter())
}

/// Achievable secrecy region under partial decode-and-forward: sweeps the
/// power-split grid, traces each per-split polytope, and hulls the union.
pub fn region_partial(ch: &GaussianChannel, spec: &SweepSpec) -> Result<Region2D> {
    sweep_bundles(ch, spec, bundle_partial)
}

/// The regular (no-secrecy) rate region over the same sweep.
pub fn regular_region(ch: &GaussianChannel, spec: &SweepSpec) -> Result<Region2D> {
    sweep_bundles(ch, spec, bundle_regular)
}

/// Achievable secrecy region under full decode-and-forward. The sweep fixes
/// `p10 = p20 = 0`: the full-cooperation constraints contain no direct-path
/// power terms, so non-cooperative power is rejected rather than ignored.
pub fn region_full(ch: &GaussianChannel, spec: &SweepSpec) -> Result<Region2D> {
    ch.validate()?;
    spec.validate()?;
    let u1 = user_line_grid(ch.p1, spec.steps_per_fraction);
    let u2 = user_line_grid(ch.p2, spec.steps_per_fraction);
    let mut points = Vec::new();
    for &(pu1, p12) in &u1 {
        for &(pu2, p21) in &u2 {
            let s = PowerSplit {
                pu1,
                p12,
                p10: 0.0,
                pu2,
                p21,
                p20: 0.0,
            };
            let (coh_main, coh_eaves) = coherent_terms(ch, &s);
            let r1b = cap_nn(ch.h12 * p12);
            let r2b = cap_nn(ch.h21 * p21);
            let sum = (r1b + r2b).min(cap_nn(coh_main)) - cap_nn(coh_eaves);
            points.extend(pentagon_points(r1b, r2b, sum));
        }
    }
    hull2d(&points)
}

/// Secrecy sum rate of one partial decode-and-forward split, clamped at zero.
pub fn sum_rate_partial(ch: &GaussianChannel, s: &PowerSplit) -> Result<f64> {
    ch.validate()?;
    s.check_budgets(ch)?;
    let (coh_main, coh_eaves) = coherent_terms(ch, s);
    let relay_path = cap_nn(ch.h12 * s.p12 / (1.0 + ch.h12 * s.p10))
        + cap_nn(ch.h21 * s.p21 / (1.0 + ch.h21 * s.p20))
        + cap_nn(ch.h1 * s.p10 + ch.h2 * s.p20);
    Ok((cap_nn(coh_main).min(relay_path) - cap_nn(coh_eaves)).max(0.0))
}

/// Secrecy sum rate of one full decode-and-forward split (`p10 = p20 = 0`
/// required), clamped at zero.
pub fn sum_rate_full(ch: &GaussianChannel, s: &PowerSplit) -> Result<f64> {
    ch.validate()?;
    s.check_budgets(ch)?;
    if s.p10 != 0.0 || s.p20 != 0.0 {
        return Err(Error::Usage(format!(
            "full decode-and-forward allocates no direct-path power; got p10 = {}, p20 = {}",
            s.p10, s.p20
        )));
    }
    let (coh_main, coh_eaves) = coherent_terms(ch, s);
    let relay_path = cap_nn(ch.h12 * s.p12) + cap_nn(ch.h21 * s.p21);
    Ok((cap_nn(coh_main).min(relay_path) - cap_nn(coh_eaves)).max(0.0))
}

/// Decode-and-forward flavor for sum-rate maximization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DfMode {
    Partial,
    Full,
}

/// Grid-maximizes the secrecy sum rate over power splits; returns the best
/// value and its split. Ties keep the first split in grid order.
pub fn max_sum_rate(
    ch: &GaussianChannel,
    mode: DfMode,
    spec: &SweepSpec,
) -> Result<(f64, PowerSplit)> {
    ch.validate()?;
    spec.validate()?;
    let mut best: Option<(f64, PowerSplit)> = None;
    let mut consider = |value: f64, split: PowerSplit| {
        if best.map_or(true, |(v, _)| value > v + 1e-15) {
            best = Some((value, split));
        }
    };
    match mode {
        DfMode::Partial => {
            let u1 = user_grid(ch.p1, spec.steps_per_fraction);
            let u2 = user_grid(ch.p2, spec.steps_per_fraction);
            for &(pu1, p12, p10) in &u1 {
                for &(pu2, p21, p20) in &u2 {
                    let s = PowerSplit {
                        pu1,
                        p12,
                        p10,
                        pu2,
                        p21,
                        p20,
                    };
                    consider(sum_rate_partial(ch, &s)?, s);
                }
            }
        }
        DfMode::Full => {
            let u1 = user_line_grid(ch.p1, spec.steps_per_fraction);
            let u2 = user_line_grid(ch.p2, spec.steps_per_fraction);
            for &(pu1, p12) in &u1 {
                for &(pu2, p21) in &u2 {
                    let s = PowerSplit {
                        pu1,
                        p12,
                        p10: 0.0,
                        pu2,
                        p21,
                        p20: 0.0,
                    };
                    consider(sum_rate_full(ch, &s)?, s);
                }
            }
        }
    }
    Ok(best.expect("grid is never empty"))
}

/// The ratios `T1, T2, T3` of the sum-rate decomposition for one split.
pub fn t_terms(ch: &GaussianChannel, s: &PowerSplit) -> Result<TTerms> {
    ch.validate()?;
    s.check_budgets(ch)?;
    let (coh_main, coh_eaves) = coherent_terms(ch, s);
    let denom = 1.0 + coh_eaves;
    Ok(TTerms {
        t1: (1.0 + coh_main) / denom,
        t2: (1.0 + ch.h12 * (s.p10 + s.p12)) * (1.0 + ch.h21 * (s.p20 + s.p21)) / denom,
        t3: (1.0 + ch.h1 * s.p10 + ch.h2 * s.p20)
            / ((1.0 + s.p10 * ch.h12) * (1.0 + s.p20 * ch.h21)),
    })
}

/// Channel-and-sweep JSON document accepted by the command line and the
/// file-based interfaces.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelConfig {
    pub h1: f64,
    pub h2: f64,
    pub g1: f64,
    pub g2: f64,
    pub h12: f64,
    pub h21: f64,
    pub p1: f64,
    pub p2: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angles: Option<usize>,
    /// Input correlation for the relay/MISO special cases.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
}

impl ChannelConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Validation(format!("channel document: {e}")))
    }

    pub fn channel(&self) -> Result<GaussianChannel> {
        GaussianChannel::new(
            self.h1, self.h2, self.g1, self.g2, self.h12, self.h21, self.p1, self.p2,
        )
    }

    /// Sweep resolution, with command-line values taking precedence over the
    /// document and the document over the defaults.
    pub fn sweep(&self, steps_override: Option<usize>, angles_override: Option<usize>) -> Result<SweepSpec> {
        let d = SweepSpec::default();
        SweepSpec::new(
            steps_override.or(self.steps).unwrap_or(d.steps_per_fraction),
            angles_override.or(self.angles).unwrap_or(d.angles),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig3_channel(hc: f64) -> GaussianChannel {
        GaussianChannel::new(0.6, 0.6, 0.2, 0.1, hc, hc, 1.0, 1.0).unwrap()
    }

    fn zero_channel() -> GaussianChannel {
        GaussianChannel::new(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn bundle_all_gains_zero() {
        let ch = zero_channel();
        let s = PowerSplit::new(0.2, 0.3, 0.5, 0.1, 0.4, 0.5).unwrap();
        let m = bundle_partial(&ch, &s).unwrap();
        assert_eq!(
            (m.a1, m.a2, m.a3, m.a4, m.a5, m.a6),
            (0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
        );
        assert_eq!((m.b1, m.b2, m.b3, m.b4), (0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn bundle_without_eavesdropper() {
        let ch = GaussianChannel::new(0.6, 0.6, 0.0, 0.0, 0.6, 0.6, 1.0, 1.0).unwrap();
        let s = PowerSplit::new(0.25, 0.25, 0.5, 0.25, 0.25, 0.5).unwrap();
        let m = bundle_partial(&ch, &s).unwrap();
        assert_eq!((m.b1, m.b2, m.b3, m.b4), (0.0, 0.0, 0.0, 0.0));
        let coh = 0.6 + 0.6 + 2.0 * (0.6f64 * 0.6 * 0.25 * 0.25).sqrt();
        assert!((m.a6 - cap_nn(coh)).abs() < 1e-15);
    }

    #[test]
    fn bundle_fig3_direct_split() {
        // Frozen by an independent evaluation of the capacity formulas.
        let ch = fig3_channel(0.6);
        let s = PowerSplit::new(0.0, 0.0, 1.0, 0.0, 0.0, 1.0).unwrap();
        let m = bundle_partial(&ch, &s).unwrap();
        assert!((m.a1 - 0.3390359525563188).abs() < 1e-12);
        assert!((m.a2 - 0.3390359525563188).abs() < 1e-12);
        assert!((m.a3 - 0.5687517618749675).abs() < 1e-12);
        assert_eq!(m.a4, 0.0);
        assert_eq!(m.a5, 0.0);
        assert!((m.a6 - 0.3794959502481025).abs() < 1e-12);
        assert!((m.b1 - 0.1315172029168969).abs() < 1e-12);
        assert!((m.b2 - 0.0687517618749675).abs() < 1e-12);
        assert!((m.b3 - 0.1892558116268649).abs() < 1e-12);
        assert!((m.b4 - 0.1892558116268649).abs() < 1e-12);
    }

    #[test]
    fn bundle_fig3_cooperative_split_has_a4_c03() {
        let ch = fig3_channel(0.6);
        let s = PowerSplit::new(0.5, 0.5, 0.0, 0.5, 0.5, 0.0).unwrap();
        let m = bundle_partial(&ch, &s).unwrap();
        assert!((m.a4 - 0.1892558116268649).abs() < 1e-12);
        assert!((m.a5 - 0.1892558116268649).abs() < 1e-12);
    }

    #[test]
    fn split_must_match_budgets() {
        let ch = fig3_channel(0.6);
        let s = PowerSplit::new(0.5, 0.5, 0.5, 0.0, 0.0, 1.0).unwrap();
        assert!(matches!(
            bundle_partial(&ch, &s),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn sum_rate_partial_fig3_frozen() {
        // Independent evaluation of the displayed formula.
        let ch = fig3_channel(0.6);
        let s = PowerSplit::new(0.25, 0.75, 0.0, 0.25, 0.75, 0.0).unwrap();
        let r = sum_rate_partial(&ch, &s).unwrap();
        assert!((r - 0.3085908565824062).abs() < 1e-12, "{r}");
    }

    #[test]
    fn sum_rate_trivials() {
        let s = PowerSplit::new(0.0, 0.0, 1.0, 0.0, 0.0, 1.0).unwrap();
        assert_eq!(sum_rate_partial(&zero_channel(), &s).unwrap(), 0.0);

        // No eavesdropper, no inter-user links, all power direct.
        let ch = GaussianChannel::new(0.7, 0.4, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0).unwrap();
        let r = sum_rate_partial(&ch, &s).unwrap();
        assert!((r - cap_nn(0.7 + 0.4)).abs() < 1e-15);
    }

    #[test]
    fn sum_rate_full_rejects_direct_power() {
        let ch = fig3_channel(0.6);
        let s = PowerSplit::new(0.25, 0.5, 0.25, 0.25, 0.5, 0.25).unwrap();
        assert!(matches!(sum_rate_full(&ch, &s), Err(Error::Usage(_))));
    }

    #[test]
    fn partial_equals_full_without_direct_power() {
        let ch = fig3_channel(0.8);
        for i in 0..=10 {
            let fu = i as f64 / 10.0;
            let s = PowerSplit::new(fu, 1.0 - fu, 0.0, 1.0 - fu, fu, 0.0).unwrap();
            let a = sum_rate_partial(&ch, &s).unwrap();
            let b = sum_rate_full(&ch, &s).unwrap();
            assert_eq!(a, b, "term-by-term identity must be exact");
        }
    }

    #[test]
    fn t_terms_known_cases() {
        let ch = fig3_channel(0.6);
        let s = PowerSplit::new(0.25, 0.75, 0.0, 0.25, 0.75, 0.0).unwrap();
        let t = t_terms(&ch, &s).unwrap();
        assert_eq!(t.t3, 1.0);

        let s = PowerSplit::new(0.0, 0.0, 1.0, 0.0, 0.0, 1.0).unwrap();
        let t = t_terms(&zero_channel(), &s).unwrap();
        assert_eq!((t.t1, t.t2, t.t3), (1.0, 1.0, 1.0));
    }

    #[test]
    fn t3_at_most_one_with_strong_links() {
        // h12 >= h1 and h21 >= h2.
        let ch = GaussianChannel::new(0.5, 0.7, 0.2, 0.1, 0.9, 0.8, 1.0, 2.0).unwrap();
        for i in 0..=4 {
            for j in 0..=4 {
                let s = PowerSplit::from_fractions(&ch, 0.1, i as f64 * 0.2, 0.2, j as f64 * 0.2)
                    .unwrap();
                let t = t_terms(&ch, &s).unwrap();
                assert!(t.t3 <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn regions_of_dead_channel_are_origin_only() {
        let spec = SweepSpec::new(3, 5).unwrap();
        assert!(region_partial(&zero_channel(), &spec).unwrap().is_origin_only());
        assert!(regular_region(&zero_channel(), &spec).unwrap().is_origin_only());
        let ch = GaussianChannel::new(0.6, 0.6, 0.2, 0.1, 0.0, 0.0, 1.0, 1.0).unwrap();
        assert!(region_full(&ch, &spec).unwrap().is_origin_only());
    }

    #[test]
    fn secrecy_region_inside_regular_region() {
        let ch = fig3_channel(0.6);
        let spec = SweepSpec::new(5, 31).unwrap();
        let secrecy = region_partial(&ch, &spec).unwrap();
        let regular = regular_region(&ch, &spec).unwrap();
        for v in secrecy.vertices() {
            assert!(regular.contains(*v, 1e-9));
        }
    }

    #[test]
    fn full_region_inside_partial_region() {
        let ch = fig3_channel(0.2);
        let spec = SweepSpec::new(7, 31).unwrap();
        let full = region_full(&ch, &spec).unwrap();
        let partial = region_partial(&ch, &spec).unwrap();
        for v in full.vertices() {
            assert!(partial.contains(*v, 1e-6));
        }
    }

    #[test]
    fn max_sum_rate_zero_channel() {
        let (v, _) = max_sum_rate(&zero_channel(), DfMode::Partial, &SweepSpec::new(5, 5).unwrap())
            .unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn max_sum_rate_modes_agree_with_strong_links() {
        let ch = fig3_channel(1.0);
        let spec = SweepSpec::new(11, 5).unwrap();
        let (vp, _) = max_sum_rate(&ch, DfMode::Partial, &spec).unwrap();
        let (vf, _) = max_sum_rate(&ch, DfMode::Full, &spec).unwrap();
        assert!((vp - vf).abs() < 1e-9, "partial {vp} vs full {vf}");
    }

    #[test]
    fn channel_config_parses_and_overrides() {
        let cfg = ChannelConfig::from_json(
            r#"{"h1":0.6,"h2":0.6,"g1":0.2,"g2":0.1,"h12":0.6,"h21":0.6,"p1":1,"p2":1,"steps":11}"#,
        )
        .unwrap();
        let sweep = cfg.sweep(None, None).unwrap();
        assert_eq!(sweep.steps_per_fraction, 11);
        assert_eq!(sweep.angles, 181);
        let sweep = cfg.sweep(Some(5), Some(31)).unwrap();
        assert_eq!((sweep.steps_per_fraction, sweep.angles), (5, 31));
        assert!(ChannelConfig::from_json(r#"{"h1":1}"#).is_err());
        assert!(ChannelConfig::from_json(
            r#"{"h1":0.6,"h2":0.6,"g1":0.2,"g2":0.1,"h12":0.6,"h21":0.6,"p1":1,"p2":1,"bogus":3}"#
        )
        .is_err());
    }
}
