use crate::geometry::DiskRegion;
use crate::{Error, Result};

/// `𝒩_θ`: operators `(1−θ)I + θN` with `N` nonexpansive, `θ ∈ (0,1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AveragedClass {
    theta: f64,
}

impl AveragedClass {
    pub fn new(theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < 1.0) {
            return Err(Error::InvalidTheta(theta));
        }
        Ok(Self { theta })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// `𝒞_β`: `⟨Ax−Ay, x−y⟩ ≥ β‖Ax−Ay‖²`, `β > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CocoerciveClass {
    beta: f64,
}

impl CocoerciveClass {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::InvalidBeta(beta));
        }
        Ok(Self { beta })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `(1/β)·Disk(½)`.
    pub fn srg(&self) -> DiskRegion {
        let r = 0.5 / self.beta;
        DiskRegion { center: r, radius: r }
    }
}

/// Davis–Yin operators `T_γ(A,B,C)` with `A, B` monotone, `C` β-cocoercive and
/// `0 < γ < 2β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DysClass {
    beta: f64,
    gamma: f64,
}

impl DysClass {
    pub fn new(beta: f64, gamma: f64) -> Result<Self> {
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::InvalidBeta(beta));
        }
        if !(gamma > 0.0 && gamma < 2.0 * beta) {
            return Err(Error::InvalidGamma { gamma, bound: 2.0 * beta });
        }
        Ok(Self { beta, gamma })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `2β/(4β−γ)`.
    pub fn averagedness(&self) -> f64 {
        2.0 * self.beta / (4.0 * self.beta - self.gamma)
    }
}

/// `𝒢(𝒩_θ) = Disk(θ)`.
pub fn srg_of_averaged(cls: &AveragedClass) -> DiskRegion {
    DiskRegion { center: 1.0 - cls.theta, radius: cls.theta }
}

/// Smallest θ with `𝒩_{θ₁}𝒩_{θ₂} ⊆ 𝒩_θ`:
/// `θ = (θ₁+θ₂−2θ₁θ₂)/(1−θ₁θ₂)`.
pub fn tight_composition_coeff(theta1: f64, theta2: f64) -> Result<f64> {
    let (a, b) = (AveragedClass::new(theta1)?.theta, AveragedClass::new(theta2)?.theta);
    Ok((a + b - 2.0 * a * b) / (1.0 - a * b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn averaged_disks() {
        let d = srg_of_averaged(&AveragedClass::new(0.5).unwrap());
        assert_eq!((d.center, d.radius), (0.5, 0.5));
        let d = srg_of_averaged(&AveragedClass::new(0.75).unwrap());
        assert_eq!(d.leftmost(), -0.5);
        assert!(AveragedClass::new(0.0).is_err());
        assert!(AveragedClass::new(1.0).is_err());
    }

    #[test]
    fn tight_coefficient_values() {
        assert!((tight_composition_coeff(0.5, 0.5).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!((tight_composition_coeff(0.75, 0.75).unwrap() - 6.0 / 7.0).abs() < 1e-15);
        assert!((tight_composition_coeff(0.25, 0.75).unwrap() - 0.625 / 0.8125).abs() < 1e-15);
        // composing with a near-identity
        assert!((tight_composition_coeff(1e-12, 0.3).unwrap() - 0.3).abs() < 1e-11);
        assert!(tight_composition_coeff(1.0, 0.3).is_err());
    }

    #[test]
    fn gamma_range_is_open() {
        assert!(DysClass::new(1.0, 2.0).is_err());
        assert!(DysClass::new(1.0, 0.0).is_err());
        assert!(DysClass::new(0.5, 2.5).is_err());
        assert!(DysClass::new(-1.0, 0.5).is_err());
        assert!(DysClass::new(1.0, 1.999).is_ok());
    }

    proptest! {
        #[test]
        fn tight_coefficient_is_symmetric_and_above_both(a in 0.001f64..0.999, b in 0.001f64..0.999) {
            let t = tight_composition_coeff(a, b).unwrap();
            prop_assert!((t - tight_composition_coeff(b, a).unwrap()).abs() < 1e-15);
            prop_assert!(t > a.max(b) && t < 1.0);
        }

        #[test]
        fn tight_coefficient_increases_in_each_argument(a in 0.001f64..0.99, b in 0.001f64..0.999, da in 1e-4f64..0.009) {
            let lo = tight_composition_coeff(a, b).unwrap();
            let hi = tight_composition_coeff(a + da, b).unwrap();
            prop_assert!(hi > lo);
        }
    }
}
