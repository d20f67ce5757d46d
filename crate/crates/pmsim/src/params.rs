//! Physical parameters of the photonic molecule, in normalized units.
//!
//! Every rate is expressed as a ratio to the signal ring-ring coupling,
//! which serves as the unit. Mode center frequencies are offsets from a
//! global reference in the same units. All downstream modules consume only
//! the types defined here.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default tolerance for the energy-matching check `2 w0_p = w0_s + w0_i`.
pub const DEFAULT_ENERGY_TOLERANCE: f64 = 1e-9;

/// The three intracavity fields. Signal and idler form the "bin" subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldLabel {
    Pump,
    Signal,
    Idler,
}

impl FieldLabel {
    pub const ALL: [FieldLabel; 3] = [FieldLabel::Pump, FieldLabel::Signal, FieldLabel::Idler];
    pub const BINS: [FieldLabel; 2] = [FieldLabel::Signal, FieldLabel::Idler];

    pub fn is_bin(self) -> bool {
        matches!(self, FieldLabel::Signal | FieldLabel::Idler)
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldLabel::Pump => "pump",
            FieldLabel::Signal => "signal",
            FieldLabel::Idler => "idler",
        }
    }
}

/// One value per field.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerField<T> {
    pub pump: T,
    pub signal: T,
    pub idler: T,
}

impl<T: Copy> PerField<T> {
    pub fn uniform(value: T) -> Self {
        PerField {
            pump: value,
            signal: value,
            idler: value,
        }
    }

    pub fn get(&self, label: FieldLabel) -> T {
        match label {
            FieldLabel::Pump => self.pump,
            FieldLabel::Signal => self.signal,
            FieldLabel::Idler => self.idler,
        }
    }

    pub fn set(&mut self, label: FieldLabel, value: T) {
        match label {
            FieldLabel::Pump => self.pump = value,
            FieldLabel::Signal => self.signal = value,
            FieldLabel::Idler => self.idler = value,
        }
    }
}

/// Loss rates of the two outer rings carrying signal and idler.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BinPair<T> {
    pub signal: T,
    pub idler: T,
}

impl<T: Copy> BinPair<T> {
    pub fn uniform(value: T) -> Self {
        BinPair {
            signal: value,
            idler: value,
        }
    }

    pub fn get(&self, label: FieldLabel) -> T {
        match label {
            FieldLabel::Signal => self.signal,
            FieldLabel::Idler => self.idler,
            FieldLabel::Pump => panic!("pump has no right-ring loss"),
        }
    }
}

/// What the downstream computation needs; selects which invariants to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValidationMode {
    /// Transfer functions only.
    TransferOnly,
    /// Doublet structure is used: splittings must be real and positive.
    BinSplitting,
    /// Heralded qubit preparation: additionally requires energy matching.
    QubitGeneration,
}

/// Coupling and loss rates seen by one field's transfer function.
#[derive(Debug, Clone, Copy)]
pub struct RingRates {
    /// Ring-ring coupling g.
    pub g: f64,
    /// Ring-waveguide coupling kappa.
    pub kappa: f64,
    /// Loss of the outer ring on this field's path (x for pump, z for bins).
    pub gamma_outer: f64,
    /// Loss of the central ring for this field.
    pub gamma_central: f64,
    /// Mode center frequency.
    pub omega0: f64,
}

/// All coupling rates, loss rates and mode centers of the molecule.
///
/// `g` and `kappa` are per-field ring-ring and ring-waveguide couplings.
/// Losses follow the ring layout: `gamma_x_p` for the left outer ring (pump
/// path), `gamma_y` for the central ring (all three fields), `gamma_z` for
/// the right outer rings (signal/idler paths).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MoleculeParams {
    pub g: PerField<f64>,
    pub kappa: PerField<f64>,
    pub gamma_x_p: f64,
    pub gamma_y: PerField<f64>,
    pub gamma_z: BinPair<f64>,
    pub omega0: PerField<f64>,
}

impl Default for MoleculeParams {
    /// Paper operating point: symmetric bins with kappa_mu/g_mu = 0.1,
    /// kappa_p/kappa_mu = 30, pump ring delta-matched, lossless, centers at 0.
    fn default() -> Self {
        let kappa_mu = 0.1;
        let kappa_p = 30.0 * kappa_mu;
        let g_p = delta_matched_pump_coupling(1.0, kappa_mu, kappa_p);
        MoleculeParams {
            g: PerField {
                pump: g_p,
                signal: 1.0,
                idler: 1.0,
            },
            kappa: PerField {
                pump: kappa_p,
                signal: kappa_mu,
                idler: kappa_mu,
            },
            gamma_x_p: 0.0,
            gamma_y: PerField::uniform(0.0),
            gamma_z: BinPair::uniform(0.0),
            omega0: PerField::uniform(0.0),
        }
    }
}

/// Ring-ring pump coupling that makes the pump doublet splitting equal the
/// bin splitting: solves 2 sqrt(g_p^2 - kappa_p^2/8) = 2 sqrt(g_mu^2 - kappa_mu^2/8).
pub fn delta_matched_pump_coupling(g_mu: f64, kappa_mu: f64, kappa_p: f64) -> f64 {
    (g_mu * g_mu - kappa_mu * kappa_mu / 8.0 + kappa_p * kappa_p / 8.0).sqrt()
}

impl MoleculeParams {
    /// Rates entering the transfer function of `label`.
    pub fn rates(&self, label: FieldLabel) -> RingRates {
        let (gamma_outer, gamma_central) = match label {
            FieldLabel::Pump => (self.gamma_x_p, self.gamma_y.pump),
            FieldLabel::Signal => (self.gamma_z.signal, self.gamma_y.signal),
            FieldLabel::Idler => (self.gamma_z.idler, self.gamma_y.idler),
        };
        RingRates {
            g: self.g.get(label),
            kappa: self.kappa.get(label),
            gamma_outer,
            gamma_central,
            omega0: self.omega0.get(label),
        }
    }

    /// Validate against the invariants required by `mode`, with the default
    /// energy-matching tolerance.
    pub fn validate(self, mode: ValidationMode) -> Result<Self> {
        self.validate_with_tolerance(mode, DEFAULT_ENERGY_TOLERANCE)
    }

    /// Validate, returning the parameters unchanged when all invariants hold.
    pub fn validate_with_tolerance(self, mode: ValidationMode, tolerance: f64) -> Result<Self> {
        let mut check = |name: &str, value: f64| -> Result<()> {
            if value < 0.0 || !value.is_finite() {
                return Err(Error::NegativeRate {
                    name: name.to_string(),
                    value,
                });
            }
            Ok(())
        };
        for label in FieldLabel::ALL {
            check(&format!("g_{}", label.name()), self.g.get(label))?;
            check(&format!("kappa_{}", label.name()), self.kappa.get(label))?;
            check(&format!("gamma_y_{}", label.name()), self.gamma_y.get(label))?;
        }
        check("gamma_x_p", self.gamma_x_p)?;
        check("gamma_z_signal", self.gamma_z.signal)?;
        check("gamma_z_idler", self.gamma_z.idler)?;
        if self.g.signal <= 0.0 {
            return Err(Error::NegativeRate {
                name: "g_signal (the unit rate)".to_string(),
                value: self.g.signal,
            });
        }

        if mode >= ValidationMode::BinSplitting {
            for label in FieldLabel::ALL {
                let g = self.g.get(label);
                let kappa = self.kappa.get(label);
                let limit = 8.0_f64.sqrt() * g;
                if kappa >= limit {
                    return Err(Error::OvercoupledForSplitting {
                        label,
                        kappa,
                        limit,
                    });
                }
            }
        }

        if mode >= ValidationMode::QubitGeneration {
            let mismatch = 2.0 * self.omega0.pump - self.omega0.signal - self.omega0.idler;
            if mismatch.abs() > tolerance {
                return Err(Error::EnergyMismatch {
                    mismatch,
                    tolerance,
                });
            }
        }

        Ok(self)
    }
}

/// Unit conventions fixed by the normalization policy. These never enter the
/// numerics: the JSA is defined up to scale and renormalized before analysis.
#[derive(Debug, Clone, Copy)]
pub struct NormalizationConvention;

impl NormalizationConvention {
    /// The unit rate is the signal ring-ring coupling.
    pub const UNIT_RATE: &'static str = "g_signal";
    pub const HBAR: f64 = 1.0;
    /// Effective nonlinearity; an overall JSA scale only.
    pub const ZETA: f64 = 1.0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_params_pass_qubit_validation() {
        let p = MoleculeParams::default();
        assert!(p.validate(ValidationMode::QubitGeneration).is_ok());
    }

    #[test]
    fn overcoupled_bin_rejected_in_splitting_mode() {
        let mut p = MoleculeParams::default();
        p.kappa.signal = 3.0 * p.g.signal; // 3 > sqrt(8) ~ 2.828
        let err = p.clone().validate(ValidationMode::BinSplitting).unwrap_err();
        assert!(matches!(err, Error::OvercoupledForSplitting { label: FieldLabel::Signal, .. }));
        // but transfer-only evaluation is still allowed
        assert!(p.validate(ValidationMode::TransferOnly).is_ok());
    }

    #[test]
    fn negative_rate_rejected() {
        let mut p = MoleculeParams::default();
        p.g.signal = -1.0;
        let err = p.validate(ValidationMode::TransferOnly).unwrap_err();
        assert!(matches!(err, Error::NegativeRate { .. }));
    }

    #[test]
    fn energy_mismatch_rejected_only_in_qubit_mode() {
        let mut p = MoleculeParams::default();
        p.omega0.pump = 0.5;
        assert!(p.clone().validate(ValidationMode::BinSplitting).is_ok());
        let err = p.validate(ValidationMode::QubitGeneration).unwrap_err();
        assert!(matches!(err, Error::EnergyMismatch { .. }));
    }

    #[test]
    fn validate_is_idempotent() {
        let p = MoleculeParams::default();
        let v1 = p.validate(ValidationMode::QubitGeneration).unwrap();
        let v2 = v1.clone().validate(ValidationMode::QubitGeneration).unwrap();
        assert_eq!(v1, v2);
    }

    #[test]
    fn delta_match_closure_reproduces_caption_ratios() {
        // kappa_p/kappa_mu = 30 at kappa_mu/g_mu = 0.1
        let g_p = delta_matched_pump_coupling(1.0, 0.1, 3.0);
        assert!((g_p - 1.4573091641789673).abs() < 1e-12);
        assert!((3.0 / g_p - 2.06).abs() < 0.01, "kappa_p/g_p = {}", 3.0 / g_p);
        assert!((g_p - 1.46).abs() < 0.01, "g_p/g_mu = {}", g_p);
    }
}
