//! Exhaustive checks over the indecomposables of a Nakayama algebra.

use crate::artranslation::{tau, tau_inverse};
use crate::error::Result;
use crate::k0::{nakayama_tau_map, K0Class, K0Map};
use crate::nakayama::{Direction, KupischSeries, NakayamaIndec};
use crate::repr::is_isomorphic;
use crate::sweep;

/// One non-projective indecomposable `M` checked against `τ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleCheck {
    pub module: NakayamaIndec,
    /// `Φ·[M]` for the Nakayama τ-map.
    pub predicted: K0Class,
    /// `[τM]` from the engine.
    pub engine: K0Class,
    /// `τM` from the closed form.
    pub closed_form: NakayamaIndec,
    /// The engine translate is isomorphic to the closed-form module.
    pub isomorphic: bool,
}

impl ModuleCheck {
    pub fn passed(&self) -> bool {
        self.predicted == self.engine && self.isomorphic
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NakayamaReport {
    pub phi: K0Map,
    pub indecomposables: usize,
    pub checks: Vec<ModuleCheck>,
    /// Non-injective indecomposables whose `τ⁻¹` disagrees with the closed form.
    pub inverse_failures: Vec<NakayamaIndec>,
}

impl NakayamaReport {
    pub fn passed(&self) -> bool {
        self.inverse_failures.is_empty() && self.checks.iter().all(ModuleCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ModuleCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

fn check_module(k: &KupischSeries, phi: &K0Map, m: NakayamaIndec) -> Result<ModuleCheck> {
    let rep = k.module(m)?;
    let t = tau(&rep)?;
    let closed_form = k
        .translate(m, Direction::Tau)?
        .expect("only non-projective modules are checked");
    Ok(ModuleCheck {
        module: m,
        predicted: phi.mul_vec(&k.dim_vector(m)?),
        engine: t.dim_vector(),
        closed_form,
        isomorphic: is_isomorphic(&t, &k.module(closed_form)?)?,
    })
}

fn inverse_agrees(k: &KupischSeries, m: NakayamaIndec) -> Result<bool> {
    let t = tau_inverse(&k.module(m)?)?;
    let closed = k
        .translate(m, Direction::TauInverse)?
        .expect("only non-injective modules are checked");
    is_isomorphic(&t, &k.module(closed)?)
}

/// Checks `Φ[M] = [τM]` and the closed form of `τM` and `τ⁻¹M` for every
/// indecomposable, using the sweep's parallel map.
pub fn verify_nakayama(k: &KupischSeries) -> Result<NakayamaReport> {
    verify_nakayama_with(k, |items, f| sweep::map(items, f))
}

pub fn verify_nakayama_sequential(k: &KupischSeries) -> Result<NakayamaReport> {
    verify_nakayama_with(k, |items, f| sweep::map_sequential(items, f))
}

type Job<'a> =
    &'a (dyn Fn(&(NakayamaIndec, bool)) -> Result<(Option<ModuleCheck>, bool)> + Sync + Send);

fn verify_nakayama_with<M>(k: &KupischSeries, map: M) -> Result<NakayamaReport>
where
    M: Fn(&[(NakayamaIndec, bool)], Job<'_>) -> Vec<Result<(Option<ModuleCheck>, bool)>>,
{
    let phi = nakayama_tau_map(k);
    let all = k.enumerate_indecomposables();
    let items: Vec<(NakayamaIndec, bool)> = all.iter().map(|i| (i.module, i.projective)).collect();
    let job = |&(m, projective): &(NakayamaIndec, bool)| -> Result<(Option<ModuleCheck>, bool)> {
        let check = if projective {
            None
        } else {
            Some(check_module(k, &phi, m)?)
        };
        let inverse_ok = k.is_injective(m) || inverse_agrees(k, m)?;
        Ok((check, inverse_ok))
    };
    let mut checks = Vec::new();
    let mut inverse_failures = Vec::new();
    for (r, &(m, _)) in map(&items, &job).into_iter().zip(&items) {
        let (check, inverse_ok) = r?;
        checks.extend(check);
        if !inverse_ok {
            inverse_failures.push(m);
        }
    }
    Ok(NakayamaReport {
        phi,
        indecomposables: all.len(),
        checks,
        inverse_failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycle_report() {
        let k = KupischSeries::cyclic(&[2, 3]).unwrap();
        let r = verify_nakayama(&k).unwrap();
        assert_eq!(r.indecomposables, 5);
        assert_eq!(r.checks.len(), 3);
        assert!(r.passed(), "{r:?}");
        assert_eq!(verify_nakayama_sequential(&k).unwrap(), r);
    }

    #[test]
    fn linear_report() {
        let k = KupischSeries::linear(&[3, 3, 2, 1]).unwrap();
        assert!(verify_nakayama(&k).unwrap().passed());
    }
}
