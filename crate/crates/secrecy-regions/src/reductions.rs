//! Closed-form special cases of the feedback model: the multiple-access
//! wiretap channel (no feedback), the relay-eavesdropper channel, and the
//! virtual MISO wiretap channel (perfect feedback). They double as
//! cross-validation oracles for the swept Gaussian regions.

use crate::error::{Error, Result};
use crate::gaussian::{GaussianChannel, SweepSpec};
use crate::info::cap_nn;
use crate::polytope::{hull2d, pentagon_points, RatePoint, Region2D};

/// Jointly Gaussian inputs at powers `p1`, `p2` with correlation `rho`.
///
/// `rho` is restricted to `[0, 1]`: with non-negative gains, negative
/// correlation only weakens the coherent-combining terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelatedGaussianInput {
    pub p1: f64,
    pub p2: f64,
    pub rho: f64,
}

impl CorrelatedGaussianInput {
    pub fn new(p1: f64, p2: f64, rho: f64) -> Result<Self> {
        if !p1.is_finite() || p1 < 0.0 || !p2.is_finite() || p2 < 0.0 {
            return Err(Error::Validation(format!(
                "powers ({p1}, {p2}) must be finite and non-negative"
            )));
        }
        if !(0.0..=1.0).contains(&rho) {
            return Err(Error::Validation(format!("rho = {rho} not in [0, 1]")));
        }
        Ok(Self { p1, p2, rho })
    }
}

/// No-feedback region with independent Gaussian inputs: the pentagon
///
/// ```text
/// R1      <= [C(h1 q1) - C(g1 q1 / (1 + g2 q2))]+
/// R2      <= [C(h2 q2) - C(g2 q2 / (1 + g1 q1))]+
/// R1 + R2 <= [C(h1 q1 + h2 q2) - C(g1 q1 + g2 q2)]+
/// ```
///
/// swept over per-user power backoff `(q1, q2)` on the grid (reduced power is
/// admissible under the average power constraint) and hulled. Feedback gains
/// are ignored.
pub fn mac_wiretap_region(ch: &GaussianChannel, spec: &SweepSpec) -> Result<Region2D> {
    ch.validate()?;
    spec.validate()?;
    let steps = spec.steps_per_fraction;
    let denom = (steps - 1) as f64;
    let mut points: Vec<RatePoint> = Vec::new();
    for i in 0..steps {
        let q1 = i as f64 / denom * ch.p1;
        for j in 0..steps {
            let q2 = j as f64 / denom * ch.p2;
            let r1b = cap_nn(ch.h1 * q1) - cap_nn(ch.g1 * q1 / (1.0 + ch.g2 * q2));
            let r2b = cap_nn(ch.h2 * q2) - cap_nn(ch.g2 * q2 / (1.0 + ch.g1 * q1));
            let sum = cap_nn(ch.h1 * q1 + ch.h2 * q2) - cap_nn(ch.g1 * q1 + ch.g2 * q2);
            points.extend(pentagon_points(r1b.max(0.0), r2b.max(0.0), sum));
        }
    }
    hull2d(&points)
}

/// Secrecy rate of the relay-eavesdropper reduction: user 2 relays for
/// user 1 by decode-and-forward, `R2 = 0`:
///
/// ```text
/// [min{C(h12 p1 (1 - rho^2)), C(h1 p1 + h2 p2 + 2 rho sqrt(h1 h2 p1 p2))}
///  - C(g1 p1 + g2 p2 + 2 rho sqrt(g1 g2 p1 p2))]+
/// ```
pub fn relay_eavesdropper_rate(ch: &GaussianChannel, inp: &CorrelatedGaussianInput) -> Result<f64> {
    ch.validate()?;
    let relay_link = cap_nn(ch.h12 * inp.p1 * (1.0 - inp.rho * inp.rho));
    let coherent = cap_nn(
        ch.h1 * inp.p1 + ch.h2 * inp.p2 + 2.0 * inp.rho * (ch.h1 * ch.h2 * inp.p1 * inp.p2).sqrt(),
    );
    let eaves = cap_nn(
        ch.g1 * inp.p1 + ch.g2 * inp.p2 + 2.0 * inp.rho * (ch.g1 * ch.g2 * inp.p1 * inp.p2).sqrt(),
    );
    Ok((relay_link.min(coherent) - eaves).max(0.0))
}

/// Secrecy sum rate of the virtual MISO wiretap reduction (perfect feedback):
/// `[C(h-coherent) - C(g-coherent)]+` at correlation `rho`.
pub fn miso_sum_rate(ch: &GaussianChannel, inp: &CorrelatedGaussianInput) -> Result<f64> {
    ch.validate()?;
    let coherent = cap_nn(
        ch.h1 * inp.p1 + ch.h2 * inp.p2 + 2.0 * inp.rho * (ch.h1 * ch.h2 * inp.p1 * inp.p2).sqrt(),
    );
    let eaves = cap_nn(
        ch.g1 * inp.p1 + ch.g2 * inp.p2 + 2.0 * inp.rho * (ch.g1 * ch.g2 * inp.p1 * inp.p2).sqrt(),
    );
    Ok((coherent - eaves).max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig3_channel() -> GaussianChannel {
        GaussianChannel::new(0.6, 0.6, 0.2, 0.1, 0.0, 0.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn wiretap_region_without_eavesdropper_is_the_mac_pentagon() {
        let ch = GaussianChannel::new(0.5, 0.8, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0).unwrap();
        let region = mac_wiretap_region(&ch, &SweepSpec::new(11, 5).unwrap()).unwrap();
        assert!((region.r1_max() - cap_nn(0.5)).abs() < 1e-12);
        assert!((region.r2_max() - cap_nn(0.8)).abs() < 1e-12);
        assert!((region.support(1.0, 1.0) - cap_nn(1.3)).abs() < 1e-12);
    }

    #[test]
    fn wiretap_region_collapses_under_dominant_eavesdropper() {
        let ch = GaussianChannel::new(0.2, 0.2, 0.9, 0.9, 0.0, 0.0, 1.0, 1.0).unwrap();
        let region = mac_wiretap_region(&ch, &SweepSpec::new(9, 5).unwrap()).unwrap();
        assert!(region.is_origin_only());
    }

    #[test]
    fn relay_rate_frozen_example() {
        // min{C(1), C(2)} = 0.5 with silent eavesdropper and rho = 0.
        let ch = GaussianChannel::new(1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0).unwrap();
        let inp = CorrelatedGaussianInput::new(1.0, 1.0, 0.0).unwrap();
        let r = relay_eavesdropper_rate(&ch, &inp).unwrap();
        assert!((r - 0.5).abs() < 1e-12);
    }

    #[test]
    fn relay_rate_dies_at_full_correlation() {
        let ch = GaussianChannel::new(1.0, 1.0, 0.3, 0.3, 1.0, 0.0, 1.0, 1.0).unwrap();
        let inp = CorrelatedGaussianInput::new(1.0, 1.0, 1.0).unwrap();
        assert_eq!(relay_eavesdropper_rate(&ch, &inp).unwrap(), 0.0);
    }

    #[test]
    fn relay_rate_zero_when_eavesdropper_matches_main() {
        let ch = GaussianChannel::new(0.5, 0.5, 0.5, 0.5, 2.0, 0.0, 1.0, 1.0).unwrap();
        let inp = CorrelatedGaussianInput::new(1.0, 1.0, 0.6).unwrap();
        assert_eq!(relay_eavesdropper_rate(&ch, &inp).unwrap(), 0.0);
    }

    #[test]
    fn miso_rate_frozen_example() {
        // C(4) = 1.1609640474436813 with unit gains and full correlation.
        let ch = GaussianChannel::new(1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0).unwrap();
        let inp = CorrelatedGaussianInput::new(1.0, 1.0, 1.0).unwrap();
        let r = miso_sum_rate(&ch, &inp).unwrap();
        assert!((r - 1.1609640474436813).abs() < 1e-12);
    }

    #[test]
    fn miso_rate_zero_for_identical_channels() {
        let ch = GaussianChannel::new(0.4, 0.7, 0.4, 0.7, 0.0, 0.0, 1.0, 1.0).unwrap();
        for rho in [0.0, 0.3, 1.0] {
            let inp = CorrelatedGaussianInput::new(1.0, 1.0, rho).unwrap();
            assert_eq!(miso_sum_rate(&ch, &inp).unwrap(), 0.0);
        }
    }

    #[test]
    fn miso_at_rho_zero_matches_wiretap_sum_face() {
        let ch = fig3_channel();
        let inp = CorrelatedGaussianInput::new(1.0, 1.0, 0.0).unwrap();
        let miso = miso_sum_rate(&ch, &inp).unwrap();
        let direct = cap_nn(0.6 + 0.6) - cap_nn(0.2 + 0.1);
        assert!((miso - direct).abs() < 1e-15);
    }

    #[test]
    fn grid_max_over_rho_dominates_endpoints() {
        let ch = GaussianChannel::new(0.6, 0.9, 0.2, 0.1, 0.8, 0.0, 1.0, 1.0).unwrap();
        let rate_at = |rho: f64| {
            relay_eavesdropper_rate(&ch, &CorrelatedGaussianInput::new(1.0, 1.0, rho).unwrap())
                .unwrap()
        };
        let best = (0..=20).map(|i| rate_at(i as f64 / 20.0)).fold(0.0, f64::max);
        assert!(best >= rate_at(0.0) - 1e-15);
        assert!(best >= rate_at(1.0) - 1e-15);
    }

    #[test]
    fn monotone_in_main_gains() {
        let inp = CorrelatedGaussianInput::new(1.0, 1.0, 0.5).unwrap();
        let lo = GaussianChannel::new(0.4, 0.5, 0.2, 0.1, 0.0, 0.0, 1.0, 1.0).unwrap();
        let hi = GaussianChannel::new(0.9, 0.5, 0.2, 0.1, 0.0, 0.0, 1.0, 1.0).unwrap();
        assert!(miso_sum_rate(&hi, &inp).unwrap() >= miso_sum_rate(&lo, &inp).unwrap());
        let worse = GaussianChannel::new(0.4, 0.5, 0.35, 0.1, 0.0, 0.0, 1.0, 1.0).unwrap();
        assert!(miso_sum_rate(&worse, &inp).unwrap() <= miso_sum_rate(&lo, &inp).unwrap());
    }

    #[test]
    fn rho_outside_unit_interval_is_rejected() {
        assert!(CorrelatedGaussianInput::new(1.0, 1.0, -0.2).is_err());
        assert!(CorrelatedGaussianInput::new(1.0, 1.0, 1.2).is_err());
    }

    #[test]
    fn all_reductions_vanish_without_main_gains() {
        let ch = GaussianChannel::new(0.0, 0.0, 0.3, 0.2, 0.0, 0.0, 1.0, 1.0).unwrap();
        let inp = CorrelatedGaussianInput::new(1.0, 1.0, 0.4).unwrap();
        assert!(mac_wiretap_region(&ch, &SweepSpec::new(5, 5).unwrap())
            .unwrap()
            .is_origin_only());
        assert_eq!(relay_eavesdropper_rate(&ch, &inp).unwrap(), 0.0);
        assert_eq!(miso_sum_rate(&ch, &inp).unwrap(), 0.0);
    }
}
