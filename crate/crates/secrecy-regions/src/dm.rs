//! Finite-alphabet channels: sampled input laws, the ten mutual-information
//! constants, and the resulting secrecy regions.
//!
//! A channel is a conditional pmf `p(y1, y2, y, z | x1, x2)` on explicit
//! alphabets. An input law factors as `p(u) p(v1, x1 | u) p(v2, x2 | u)`;
//! sampling laws and hulling the per-law regions yields an inner bound that
//! depends on the auxiliary alphabet sizes, which are reported rather than
//! optimized away.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::info::{conditional_mi, mutual_information, JointPmf, Pmf};
use crate::polytope::{
    build_polytope, pentagon_points, trace_region, union_regions, MutualInfoBundle, Region2D,
};
use crate::pool::sweep_pool;

/// Desk-scale guard on channel and auxiliary alphabet sizes for region sweeps.
pub const MAX_ALPHABET: usize = 4;

/// A discrete memoryless channel `p(y1, y2, y, z | x1, x2)`.
///
/// The transition table is row-major over `(x1, x2, y1, y2, y, z)` with the
/// last index fastest; every `(x1, x2)` slice must be a valid pmf.
#[derive(Debug, Clone)]
pub struct DiscreteMacGf {
    nx1: usize,
    nx2: usize,
    ny1: usize,
    ny2: usize,
    ny: usize,
    nz: usize,
    transition: Vec<f64>,
}

impl DiscreteMacGf {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        nx1: usize,
        nx2: usize,
        ny1: usize,
        ny2: usize,
        ny: usize,
        nz: usize,
        transition: Vec<f64>,
    ) -> Result<Self> {
        for (name, n) in [
            ("x1", nx1),
            ("x2", nx2),
            ("y1", ny1),
            ("y2", ny2),
            ("y", ny),
            ("z", nz),
        ] {
            if n == 0 {
                return Err(Error::Validation(format!("alphabet {name} is empty")));
            }
        }
        let block = ny1 * ny2 * ny * nz;
        let expected = nx1 * nx2 * block;
        if transition.len() != expected {
            return Err(Error::Validation(format!(
                "transition table has {} entries, expected {expected}",
                transition.len()
            )));
        }
        for x1 in 0..nx1 {
            for x2 in 0..nx2 {
                let start = (x1 * nx2 + x2) * block;
                // Reuse pmf validation for the conditional slice.
                Pmf::new(transition[start..start + block].to_vec()).map_err(|e| {
                    Error::Validation(format!("transition slice at (x1={x1}, x2={x2}): {e}"))
                })?;
            }
        }
        Ok(Self {
            nx1,
            nx2,
            ny1,
            ny2,
            ny,
            nz,
            transition,
        })
    }

    /// Builds the transition table from a probability function.
    #[allow(clippy::too_many_arguments)]
    pub fn from_fn<F>(
        nx1: usize,
        nx2: usize,
        ny1: usize,
        ny2: usize,
        ny: usize,
        nz: usize,
        prob: F,
    ) -> Result<Self>
    where
        F: Fn(usize, usize, usize, usize, usize, usize) -> f64,
    {
        let mut t = Vec::with_capacity(nx1 * nx2 * ny1 * ny2 * ny * nz);
        for x1 in 0..nx1 {
            for x2 in 0..nx2 {
                for y1 in 0..ny1 {
                    for y2 in 0..ny2 {
                        for y in 0..ny {
                            for z in 0..nz {
                                t.push(prob(x1, x2, y1, y2, y, z));
                            }
                        }
                    }
                }
            }
        }
        Self::new(nx1, nx2, ny1, ny2, ny, nz, t)
    }

    pub fn sizes(&self) -> (usize, usize, usize, usize, usize, usize) {
        (self.nx1, self.nx2, self.ny1, self.ny2, self.ny, self.nz)
    }

    fn guard_desk_scale(&self) -> Result<()> {
        let (nx1, nx2, ny1, ny2, ny, nz) = self.sizes();
        for (name, n) in [
            ("x1", nx1),
            ("x2", nx2),
            ("y1", ny1),
            ("y2", ny2),
            ("y", ny),
            ("z", nz),
        ] {
            if n > MAX_ALPHABET {
                return Err(Error::Usage(format!(
                    "alphabet {name} has size {n}; region sweeps support at most {MAX_ALPHABET}"
                )));
            }
        }
        Ok(())
    }
}

/// JSON document for a discrete channel: alphabet sizes plus the flattened
/// row-major transition array ordered by `(x1, x2, y1, y2, y, z)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DmChannelConfig {
    pub x1: usize,
    pub x2: usize,
    pub y1: usize,
    pub y2: usize,
    pub y: usize,
    pub z: usize,
    pub transition: Vec<f64>,
}

impl DmChannelConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Validation(format!("channel document: {e}")))
    }

    pub fn channel(&self) -> Result<DiscreteMacGf> {
        DiscreteMacGf::new(
            self.x1,
            self.x2,
            self.y1,
            self.y2,
            self.y,
            self.z,
            self.transition.clone(),
        )
    }
}

/// A factored input law `p(u) p(v1, x1 | u) p(v2, x2 | u)`.
#[derive(Debug, Clone)]
pub struct InputLaw {
    pu: Pmf,
    /// Per `u`, a pmf over `(v1, x1)`, `v1`-major.
    pv1x1: Vec<Pmf>,
    /// Per `u`, a pmf over `(v2, x2)`, `v2`-major.
    pv2x2: Vec<Pmf>,
    nv1: usize,
    nx1: usize,
    nv2: usize,
    nx2: usize,
}

impl InputLaw {
    pub fn new(
        pu: Pmf,
        pv1x1: Vec<Pmf>,
        nv1: usize,
        nx1: usize,
        pv2x2: Vec<Pmf>,
        nv2: usize,
        nx2: usize,
    ) -> Result<Self> {
        if pv1x1.len() != pu.len() || pv2x2.len() != pu.len() {
            return Err(Error::Validation(format!(
                "need one conditional slice per u: |U| = {}, got {} and {}",
                pu.len(),
                pv1x1.len(),
                pv2x2.len()
            )));
        }
        for (slices, nv, nx, who) in [(&pv1x1, nv1, nx1, "user 1"), (&pv2x2, nv2, nx2, "user 2")] {
            for s in slices.iter() {
                if s.len() != nv * nx {
                    return Err(Error::Validation(format!(
                        "{who} slice has {} entries, expected {}",
                        s.len(),
                        nv * nx
                    )));
                }
            }
        }
        Ok(Self {
            pu,
            pv1x1,
            nv1,
            nx1,
            pv2x2,
            nv2,
            nx2,
        })
    }

    pub fn nu(&self) -> usize {
        self.pu.len()
    }
}

/// Full joint law over `(U, V1, V2, X1, X2, Y1, Y2, Y, Z)` as the product of
/// the input factors and the channel.
pub fn joint_law(ch: &DiscreteMacGf, law: &InputLaw) -> Result<JointPmf> {
    if law.nx1 != ch.nx1 || law.nx2 != ch.nx2 {
        return Err(Error::Validation(format!(
            "law input alphabets ({}, {}) do not match channel ({}, {})",
            law.nx1, law.nx2, ch.nx1, ch.nx2
        )));
    }
    let (nu, nv1, nv2) = (law.nu(), law.nv1, law.nv2);
    let (nx1, nx2, ny1, ny2, ny, nz) = ch.sizes();
    let block = ny1 * ny2 * ny * nz;
    let total = nu * nv1 * nv2 * nx1 * nx2 * block;
    let mut probs = Vec::with_capacity(total);
    for u in 0..nu {
        let wu = law.pu.probs()[u];
        let s1 = law.pv1x1[u].probs();
        let s2 = law.pv2x2[u].probs();
        for v1 in 0..nv1 {
            for v2 in 0..nv2 {
                for x1 in 0..nx1 {
                    let w1 = wu * s1[v1 * nx1 + x1];
                    for x2 in 0..nx2 {
                        let w12 = w1 * s2[v2 * nx2 + x2];
                        let start = (x1 * nx2 + x2) * block;
                        for t in &ch.transition[start..start + block] {
                            probs.push(w12 * t);
                        }
                    }
                }
            }
        }
    }
    JointPmf::new(
        vec![
            ("u", nu),
            ("v1", nv1),
            ("v2", nv2),
            ("x1", nx1),
            ("x2", nx2),
            ("y1", ny1),
            ("y2", ny2),
            ("y", ny),
            ("z", nz),
        ],
        probs,
    )
}

/// The ten mutual-information constants of the partial decode-and-forward
/// constraint system, evaluated on the joint law.
pub fn bundle_dm(ch: &DiscreteMacGf, law: &InputLaw) -> Result<MutualInfoBundle> {
    let j = joint_law(ch, law)?;
    Ok(MutualInfoBundle {
        a1: conditional_mi(&j, &["x1"], &["y"], &["x2", "v1", "u"])?,
        a2: conditional_mi(&j, &["x2"], &["y"], &["x1", "v2", "u"])?,
        a3: conditional_mi(&j, &["x1", "x2"], &["y"], &["v1", "v2", "u"])?,
        a4: conditional_mi(&j, &["v1"], &["y2"], &["x2", "u"])?,
        a5: conditional_mi(&j, &["v2"], &["y1"], &["x1", "u"])?,
        a6: mutual_information(&j, &["x1", "x2"], &["y"])?
            - mutual_information(&j, &["x1", "x2"], &["z"])?,
        b1: conditional_mi(&j, &["x1"], &["z"], &["x2", "v1", "u"])?,
        b2: conditional_mi(&j, &["x2"], &["z"], &["x1", "v2", "u"])?,
        b3: conditional_mi(&j, &["x1", "x2"], &["z"], &["v1", "v2", "u"])?,
        b4: mutual_information(&j, &["x1", "x2"], &["z"])?,
    })
}

/// How input laws are drawn for a region sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplerMode {
    /// Deterministic enumeration: the uniform law first, then all point-mass
    /// (vertex) laws in lexicographic order.
    Grid,
    /// Flat-Dirichlet conditional slices from a seeded generator; the law for
    /// sample `i` depends only on `(seed, i)`.
    Random,
}

/// Input-law sampling plan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawSampler {
    pub mode: SamplerMode,
    pub samples: usize,
    pub seed: u64,
}

impl LawSampler {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Validation("sampler needs at least one sample".into()));
        }
        Ok(())
    }
}

/// Auxiliary alphabet sizes `(|U|, |V1|, |V2|)` for partial decode-and-forward
/// sweeps. Any finite choice yields an inner bound; 2 is the smallest
/// nontrivial default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuxSizes {
    pub u: usize,
    pub v1: usize,
    pub v2: usize,
}

impl Default for AuxSizes {
    fn default() -> Self {
        Self { u: 2, v1: 2, v2: 2 }
    }
}

impl AuxSizes {
    fn guard(&self) -> Result<()> {
        for (name, n) in [("u", self.u), ("v1", self.v1), ("v2", self.v2)] {
            if n == 0 || n > MAX_ALPHABET {
                return Err(Error::Usage(format!(
                    "auxiliary alphabet {name} has size {n}; supported range is 1..={MAX_ALPHABET}"
                )));
            }
        }
        Ok(())
    }
}

fn dirichlet_flat(rng: &mut ChaCha20Rng, k: usize) -> Pmf {
    let weights: Vec<f64> = (0..k).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    Pmf::normalized(weights).expect("exponential weights are positive")
}

fn point_mass(k: usize, at: usize) -> Pmf {
    let mut p = vec![0.0; k];
    p[at] = 1.0;
    Pmf::new(p).expect("point mass is a valid pmf")
}

fn sample_rng(seed: u64, index: usize) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn uniform_law(aux: AuxSizes, nx1: usize, nx2: usize) -> InputLaw {
    InputLaw::new(
        Pmf::uniform(aux.u),
        vec![Pmf::uniform(aux.v1 * nx1); aux.u],
        aux.v1,
        nx1,
        vec![Pmf::uniform(aux.v2 * nx2); aux.u],
        aux.v2,
        nx2,
    )
    .expect("uniform law is consistent")
}

/// The `index`-th law of the sampling plan.
fn law_at(
    sampler: &LawSampler,
    aux: AuxSizes,
    nx1: usize,
    nx2: usize,
    index: usize,
) -> Option<InputLaw> {
    match sampler.mode {
        SamplerMode::Random => {
            let mut rng = sample_rng(sampler.seed, index);
            let pu = dirichlet_flat(&mut rng, aux.u);
            let pv1x1 = (0..aux.u)
                .map(|_| dirichlet_flat(&mut rng, aux.v1 * nx1))
                .collect();
            let pv2x2 = (0..aux.u)
                .map(|_| dirichlet_flat(&mut rng, aux.v2 * nx2))
                .collect();
            Some(InputLaw::new(pu, pv1x1, aux.v1, nx1, pv2x2, aux.v2, nx2).expect("consistent"))
        }
        SamplerMode::Grid => {
            if index == 0 {
                return Some(uniform_law(aux, nx1, nx2));
            }
            // Point-mass laws: u pinned to j, both conditional slices
            // deterministic (identical across u; only the slice at u = j is
            // ever weighted).
            let k1 = aux.v1 * nx1;
            let k2 = aux.v2 * nx2;
            let mut i = index - 1;
            if i >= aux.u * k1 * k2 {
                return None;
            }
            let d2 = i % k2;
            i /= k2;
            let d1 = i % k1;
            let j = i / k1;
            Some(
                InputLaw::new(
                    point_mass(aux.u, j),
                    vec![point_mass(k1, d1); aux.u],
                    aux.v1,
                    nx1,
                    vec![point_mass(k2, d2); aux.u],
                    aux.v2,
                    nx2,
                )
                .expect("consistent"),
            )
        }
    }
}

/// Secrecy region under partial decode-and-forward: samples factored input
/// laws, evaluates the constraint polytope of each, and hulls the union.
/// Deterministic for a fixed seed.
pub fn region_partial_dm(
    ch: &DiscreteMacGf,
    sampler: &LawSampler,
    aux: AuxSizes,
) -> Result<Region2D> {
    ch.guard_desk_scale()?;
    aux.guard()?;
    sampler.validate()?;
    let angles = 91;
    let regions: Result<Vec<Region2D>> = sweep_pool().install(|| {
        (0..sampler.samples)
            .into_par_iter()
            .map(|i| {
                let Some(law) = law_at(sampler, aux, ch.nx1, ch.nx2, i) else {
                    return Ok(Region2D::origin());
                };
                let m = bundle_dm(ch, &law)?;
                trace_region(&build_polytope(&m)?, angles)
            })
            .collect()
    });
    union_regions(regions?.iter())
}

/// Secrecy region under full decode-and-forward, over laws that factor as
/// `p(u) p(x1 | u) p(x2 | u)`.
pub fn region_full_dm(ch: &DiscreteMacGf, sampler: &LawSampler, aux_u: usize) -> Result<Region2D> {
    ch.guard_desk_scale()?;
    AuxSizes {
        u: aux_u,
        v1: 1,
        v2: 1,
    }
    .guard()?;
    sampler.validate()?;
    let (nx1, nx2, ny1, ny2, ny, nz) = ch.sizes();
    let block = ny1 * ny2 * ny * nz;

    let law_points = |pu: Pmf, px1: Vec<Pmf>, px2: Vec<Pmf>| -> Result<Vec<crate::polytope::RatePoint>> {
        let nu = pu.len();
        let mut probs = Vec::with_capacity(nu * nx1 * nx2 * block);
        for u in 0..nu {
            let wu = pu.probs()[u];
            for x1 in 0..nx1 {
                let w1 = wu * px1[u].probs()[x1];
                for x2 in 0..nx2 {
                    let w12 = w1 * px2[u].probs()[x2];
                    let start = (x1 * nx2 + x2) * block;
                    for t in &ch.transition[start..start + block] {
                        probs.push(w12 * t);
                    }
                }
            }
        }
        let j = JointPmf::new(
            vec![
                ("u", nu),
                ("x1", nx1),
                ("x2", nx2),
                ("y1", ny1),
                ("y2", ny2),
                ("y", ny),
                ("z", nz),
            ],
            probs,
        )?;
        let r1b = conditional_mi(&j, &["x1"], &["y2"], &["x2", "u"])?;
        let r2b = conditional_mi(&j, &["x2"], &["y1"], &["x1", "u"])?;
        let iy = mutual_information(&j, &["x1", "x2"], &["y"])?;
        let iz = mutual_information(&j, &["x1", "x2"], &["z"])?;
        let sum = (r1b + r2b).min(iy) - iz;
        Ok(pentagon_points(r1b, r2b, sum))
    };

    let points: Result<Vec<Vec<crate::polytope::RatePoint>>> = sweep_pool().install(|| {
        (0..sampler.samples)
            .into_par_iter()
            .map(|i| match sampler.mode {
                SamplerMode::Random => {
                    let mut rng = sample_rng(sampler.seed, i);
                    let pu = dirichlet_flat(&mut rng, aux_u);
                    let px1 = (0..aux_u).map(|_| dirichlet_flat(&mut rng, nx1)).collect();
                    let px2 = (0..aux_u).map(|_| dirichlet_flat(&mut rng, nx2)).collect();
                    law_points(pu, px1, px2)
                }
                SamplerMode::Grid => {
                    if i == 0 {
                        return law_points(
                            Pmf::uniform(aux_u),
                            vec![Pmf::uniform(nx1); aux_u],
                            vec![Pmf::uniform(nx2); aux_u],
                        );
                    }
                    let mut k = i - 1;
                    if k >= aux_u * nx1 * nx2 {
                        return Ok(vec![crate::polytope::RatePoint::ORIGIN]);
                    }
                    let d2 = k % nx2;
                    k /= nx2;
                    let d1 = k % nx1;
                    let j = k / nx1;
                    law_points(
                        point_mass(aux_u, j),
                        vec![point_mass(nx1, d1); aux_u],
                        vec![point_mass(nx2, d2); aux_u],
                    )
                }
            })
            .collect()
    });
    let flat: Vec<crate::polytope::RatePoint> = points?.into_iter().flatten().collect();
    crate::polytope::hull2d(&flat)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Noiseless two-user adder-free channel: Y identifies (X1, X2), no
    /// feedback outputs, no eavesdropper output.
    fn noiseless_mac() -> DiscreteMacGf {
        DiscreteMacGf::from_fn(2, 2, 1, 1, 4, 1, |x1, x2, _, _, y, _| {
            if y == 2 * x1 + x2 {
                1.0
            } else {
                0.0
            }
        })
        .unwrap()
    }

    /// Binary channel whose eavesdropper sees an exact copy of Y.
    fn mirrored_eavesdropper() -> DiscreteMacGf {
        DiscreteMacGf::from_fn(2, 2, 2, 2, 2, 2, |x1, x2, y1, y2, y, z| {
            let clean = (x1 + x2) % 2;
            if y1 != x2 || y2 != x1 || z != y {
                return 0.0;
            }
            if y == clean {
                0.9
            } else {
                0.1
            }
        })
        .unwrap()
    }

    fn law(aux: AuxSizes, ch: &DiscreteMacGf, seed: u64) -> InputLaw {
        let sampler = LawSampler {
            mode: SamplerMode::Random,
            samples: 1,
            seed,
        };
        law_at(&sampler, aux, ch.sizes().0, ch.sizes().1, 0).unwrap()
    }

    #[test]
    fn joint_of_deterministic_law_and_noiseless_channel_is_point_mass() {
        let ch = noiseless_mac();
        let l = InputLaw::new(
            point_mass(2, 0),
            vec![point_mass(4, 1); 2], // (v1, x1) = (0, 1)
            2,
            2,
            vec![point_mass(4, 2); 2], // (v2, x2) = (1, 0)
            2,
            2,
        )
        .unwrap();
        let j = joint_law(&ch, &l).unwrap();
        let ones: Vec<f64> = j
            .marginal(&["u", "v1", "v2", "x1", "x2", "y"])
            .unwrap()
            .probs()
            .iter()
            .filter(|&&p| p > 0.0)
            .copied()
            .collect();
        assert_eq!(ones, vec![1.0]);
    }

    #[test]
    fn joint_marginal_matches_direct_summation() {
        let ch = mirrored_eavesdropper();
        let aux = AuxSizes::default();
        let l = law(aux, &ch, 7);
        let j = joint_law(&ch, &l).unwrap();
        let marg = j.marginal(&["x1", "x2"]).unwrap();
        // Direct: p(x1, x2) = sum_u p(u) p(x1 | u) p(x2 | u).
        for x1 in 0..2 {
            for x2 in 0..2 {
                let mut direct = 0.0;
                for u in 0..aux.u {
                    let m1: f64 = (0..aux.v1).map(|v1| l.pv1x1[u].probs()[v1 * 2 + x1]).sum();
                    let m2: f64 = (0..aux.v2).map(|v2| l.pv2x2[u].probs()[v2 * 2 + x2]).sum();
                    direct += l.pu.probs()[u] * m1 * m2;
                }
                assert!((marg.probs()[x1 * 2 + x2] - direct).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn constant_eavesdropper_output_zeroes_the_b_constants() {
        let ch = noiseless_mac();
        let l = law(AuxSizes::default(), &ch, 3);
        let m = bundle_dm(&ch, &l).unwrap();
        assert_eq!((m.b1, m.b2, m.b3, m.b4), (0.0, 0.0, 0.0, 0.0));
        let j = joint_law(&ch, &l).unwrap();
        let iy = mutual_information(&j, &["x1", "x2"], &["y"]).unwrap();
        assert!((m.a6 - iy).abs() < 1e-12);
        // No feedback outputs either.
        assert_eq!((m.a4, m.a5), (0.0, 0.0));
    }

    #[test]
    fn mirrored_eavesdropper_kills_a6() {
        let ch = mirrored_eavesdropper();
        let l = law(AuxSizes::default(), &ch, 11);
        let m = bundle_dm(&ch, &l).unwrap();
        assert!(m.a6.abs() < 1e-12);
    }

    #[test]
    fn noiseless_mac_region_reaches_the_corner() {
        let ch = noiseless_mac();
        let sampler = LawSampler {
            mode: SamplerMode::Grid,
            samples: 40,
            seed: 0,
        };
        let region = region_partial_dm(&ch, &sampler, AuxSizes::default()).unwrap();
        assert!(region.contains(crate::polytope::RatePoint::new(1.0, 1.0), 1e-9));
        assert!(region.support(1.0, 1.0) <= 2.0 + 1e-9);
    }

    #[test]
    fn constant_receiver_output_gives_origin_region() {
        let ch = DiscreteMacGf::from_fn(2, 2, 2, 2, 1, 2, |_, _, y1, y2, _, z| {
            // Independent uniform feedback and eavesdropper outputs.
            let _ = (y1, y2, z);
            1.0 / 8.0
        })
        .unwrap();
        let sampler = LawSampler {
            mode: SamplerMode::Random,
            samples: 12,
            seed: 5,
        };
        let region = region_partial_dm(&ch, &sampler, AuxSizes::default()).unwrap();
        assert!(region.is_origin_only());
    }

    #[test]
    fn full_region_is_origin_without_feedback() {
        let ch = noiseless_mac();
        let sampler = LawSampler {
            mode: SamplerMode::Random,
            samples: 10,
            seed: 1,
        };
        let region = region_full_dm(&ch, &sampler, 2).unwrap();
        assert!(region.is_origin_only());
    }

    #[test]
    fn full_region_contained_in_partial_region() {
        let ch = mirrored_eavesdropper();
        let sampler = LawSampler {
            mode: SamplerMode::Random,
            samples: 24,
            seed: 9,
        };
        let full = region_full_dm(&ch, &sampler, 2).unwrap();
        let partial = region_partial_dm(&ch, &sampler, AuxSizes::default()).unwrap();
        for v in full.vertices() {
            assert!(partial.contains(*v, 0.01), "vertex ({}, {})", v.r1, v.r2);
        }
    }

    #[test]
    fn identical_seeds_give_identical_regions() {
        let ch = mirrored_eavesdropper();
        let sampler = LawSampler {
            mode: SamplerMode::Random,
            samples: 16,
            seed: 42,
        };
        let a = region_partial_dm(&ch, &sampler, AuxSizes::default()).unwrap();
        let b = region_partial_dm(&ch, &sampler, AuxSizes::default()).unwrap();
        assert_eq!(a.vertices(), b.vertices());
    }

    #[test]
    fn more_samples_never_shrink_the_region() {
        let ch = mirrored_eavesdropper();
        let mut sampler = LawSampler {
            mode: SamplerMode::Random,
            samples: 8,
            seed: 42,
        };
        let small = region_partial_dm(&ch, &sampler, AuxSizes::default()).unwrap();
        sampler.samples = 16;
        let large = region_partial_dm(&ch, &sampler, AuxSizes::default()).unwrap();
        for v in small.vertices() {
            assert!(large.contains(*v, 1e-9));
        }
    }

    #[test]
    fn oversized_alphabets_are_rejected() {
        let ch = DiscreteMacGf::from_fn(5, 2, 1, 1, 2, 1, |_, _, _, _, _, _| 0.5).unwrap();
        let sampler = LawSampler {
            mode: SamplerMode::Random,
            samples: 1,
            seed: 0,
        };
        let err = region_partial_dm(&ch, &sampler, AuxSizes::default()).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
        assert!(err.to_string().contains("at most 4"), "{err}");

        let ch = noiseless_mac();
        let aux = AuxSizes {
            u: 9,
            ..AuxSizes::default()
        };
        assert!(matches!(
            region_partial_dm(&ch, &sampler, aux),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn transition_normalization_is_checked() {
        let err = DiscreteMacGf::new(1, 1, 1, 1, 2, 1, vec![0.6, 0.6]).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }
}
