//! Exhaustive and seeded sweeps over the decompositions and functor
//! identities, each summarised as a [`CheckReport`].

use std::collections::BTreeSet;
use std::fmt;

use ifas_core::barhom::{
    bar_apply, based_bar_apply, loday_degeneracy, loday_face, reflexive_action, rotation, BarError, TensorBasis,
    TensorElement,
};
use ifas_core::factorize::{
    b_module_action, factor_d_hplus, factor_delta_h, factor_reflexive, generated_delta_r_op, is_delta_r_op,
};
use ifas_core::groups::{enumerate, DEFAULT_ENUMERATION_CAP, GroupError, GroupFamily, SignedPermutation};
use ifas_core::invalg::{builtin, InvolutiveAlgebra, BUILTIN_NAMES};
use ifas_core::linalg::Ring;
use ifas_core::ncsets::{
    embed_group, embed_reflection, hom_set, hom_set_size, loday_degeneracy_morphism, loday_face_morphism,
    MorphismError, NCMorphism, DEFAULT_HOM_SIZE_CAP,
};
use rand::Rng;

use crate::sample;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Selector {
    DihedralSubgroup,
    DeltaH,
    DHplus,
    ReflexiveDecomp,
    BFunctoriality,
    BarFunctoriality,
    GeneratorIdentities,
    All,
}

impl Selector {
    pub const CHECKS: [Selector; 7] = [
        Selector::DihedralSubgroup,
        Selector::DeltaH,
        Selector::DHplus,
        Selector::ReflexiveDecomp,
        Selector::BFunctoriality,
        Selector::BarFunctoriality,
        Selector::GeneratorIdentities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Selector::DihedralSubgroup => "dihedral-subgroup",
            Selector::DeltaH => "delta-h",
            Selector::DHplus => "d-hplus",
            Selector::ReflexiveDecomp => "reflexive-decomp",
            Selector::BFunctoriality => "b-functoriality",
            Selector::BarFunctoriality => "bar-functoriality",
            Selector::GeneratorIdentities => "generator-identities",
            Selector::All => "all",
        }
    }
}

/// `max_n` bounds every object `[n]` that a sweep touches.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
}

/// Largest `[n]` for which the tensor-level sweeps run exhaustively.
pub const GENERATOR_MAX_N: usize = 3;
/// Largest object for which `ΔRᵒᵖ` is generated from faces, degeneracies and
/// reflections to certify membership.
pub const GENERATED_MAX_N: usize = 3;

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub name: &'static str,
    pub exhaustive: u64,
    pub sampled: u64,
    pub failures: u64,
    pub first_counterexample: Option<String>,
    /// Set when the sweep could not run at the requested size.
    pub error: Option<String>,
}

impl CheckReport {
    fn new(name: &'static str) -> CheckReport {
        CheckReport { name, ..CheckReport::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.error.is_none()
    }

    fn record(&mut self, exhaustive: bool, ok: bool, counterexample: impl FnOnce() -> String) {
        if exhaustive {
            self.exhaustive += 1;
        } else {
            self.sampled += 1;
        }
        if !ok {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(counterexample());
            }
        }
    }

    fn fail_with(&mut self, error: String) {
        self.error.get_or_insert(error);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} exhaustive, {} sampled, {} failures",
            self.name, self.exhaustive, self.sampled, self.failures
        )?;
        if let Some(c) = &self.first_counterexample {
            write!(f, "\n  first counterexample: {c}")?;
        }
        if let Some(e) = &self.error {
            write!(f, "\n  error: {e}")?;
        }
        Ok(())
    }
}

fn cap_message(e: impl fmt::Display) -> String {
    format!("{e}; lower --max-n")
}

/// Refuses sizes whose hom-sets [`hom_set`] will not enumerate.
fn hom_cap_ok(config: &VerifyConfig, report: &mut CheckReport) -> bool {
    if config.max_n > DEFAULT_HOM_SIZE_CAP {
        report.fail_with(cap_message(MorphismError::SizeCapExceeded { cap: DEFAULT_HOM_SIZE_CAP }));
        return false;
    }
    true
}

pub fn run(selector: Selector, config: &VerifyConfig) -> Vec<CheckReport> {
    let selected: Vec<Selector> = if selector == Selector::All { Selector::CHECKS.to_vec() } else { vec![selector] };
    selected
        .into_iter()
        .map(|s| {
            let mut rng = sample::rng(config.seed);
            let mut report = CheckReport::new(s.name());
            match s {
                Selector::DihedralSubgroup => dihedral_subgroup(config, &mut report),
                Selector::DeltaH => delta_h(config, &mut rng, &mut report),
                Selector::DHplus => d_hplus(config, &mut report),
                Selector::ReflexiveDecomp => reflexive_decomp(config, &mut rng, &mut report),
                Selector::BFunctoriality => b_functoriality(config, &mut rng, &mut report),
                Selector::BarFunctoriality => bar_functoriality(config, &mut rng, &mut report),
                Selector::GeneratorIdentities => generator_identities(config, &mut report),
                Selector::All => unreachable!(),
            }
            report
        })
        .collect()
}

/// `R² = T^{n+1} = 1`, `RTR = T⁻¹`, `|⟨R, T⟩| = 2(n+1)` and `⟨R, T⟩ ∩ H⁺ = 1`.
fn dihedral_subgroup(config: &VerifyConfig, report: &mut CheckReport) {
    for n in 0..=config.max_n {
        let r = SignedPermutation::canonical_r(n);
        let t = SignedPermutation::canonical_t(n);
        let id = SignedPermutation::identity(n);
        let rtr = r.compose(&t).and_then(|x| x.compose(&r)).expect("same size");
        report.record(true, r.pow(2) == id, || format!("R² ≠ 1 in H_{}", n + 1));
        report.record(true, t.pow(n + 1) == id, || format!("T^{} ≠ 1 in H_{}", n + 1, n + 1));
        report.record(true, rtr == t.inverse(), || format!("RTR ≠ T⁻¹ in H_{}", n + 1));
        let d = ifas_core::groups::generated_subgroup(&[r.clone(), t.clone()]);
        report.record(true, d.len() == 2 * (n + 1), || format!("|⟨R, T⟩| = {} in H_{}", d.len(), n + 1));
        let meet: Vec<_> = d.iter().filter(|g| g.is_member(GroupFamily::BasedHyperoctahedral)).collect();
        report.record(true, meet.len() == 1 && meet[0].is_identity(), || {
            format!("⟨R, T⟩ ∩ H⁺ has {} elements in H_{}", meet.len(), n + 1)
        });
    }
}

fn check_delta_h(f: &NCMorphism) -> bool {
    let fac = factor_delta_h(f);
    fac.phi.windows(2).all(|w| w[0] <= w[1]) && fac.reconstruct() == *f
}

/// Existence and uniqueness of `f = φ ∘ g` with `φ ∈ Δ`, `g ∈ H`.
fn delta_h<R: Rng>(config: &VerifyConfig, rng: &mut R, report: &mut CheckReport) {
    if !hom_cap_ok(config, report) {
        return;
    }
    for n in 0..=config.max_n {
        for m in 0..=config.max_n {
            let all = match hom_set(n, m) {
                Ok(all) => all,
                Err(e @ MorphismError::SizeCapExceeded { .. }) => return report.fail_with(cap_message(e)),
                Err(e) => return report.fail_with(e.to_string()),
            };
            let mut seen = BTreeSet::new();
            for f in &all {
                report.record(true, check_delta_h(f), || f.to_string());
                let fac = factor_delta_h(f);
                seen.insert((fac.phi, fac.g));
            }
            let expected = hom_set_size(n, m);
            report.record(true, seen.len() as u128 == expected && all.len() as u128 == expected, || {
                format!("[{n}] -> [{m}]: {} morphisms, {} distinct factorizations, {expected} expected", all.len(), seen.len())
            });
        }
    }
    for _ in 0..config.samples {
        let (n, m) = (rng.gen_range(0..=config.max_n), rng.gen_range(0..=config.max_n));
        let f = sample::morphism(rng, n, m);
        report.record(false, check_delta_h(&f), || f.to_string());
    }
}

/// `g = d ∘ h` with `d ∈ ⟨R, T⟩`, `h ∈ H⁺`, and the product map
/// `D × H⁺ → H` a bijection.
fn d_hplus(config: &VerifyConfig, report: &mut CheckReport) {
    let order = GroupFamily::Hyperoctahedral.order(config.max_n);
    if order > DEFAULT_ENUMERATION_CAP as u128 {
        return report.fail_with(cap_message(GroupError::CapExceeded { order, cap: DEFAULT_ENUMERATION_CAP }));
    }
    for n in 0..=config.max_n {
        let enumerate_or_report = |family, report: &mut CheckReport| match enumerate(family, n) {
            Ok(all) => Some(all),
            Err(e @ GroupError::CapExceeded { .. }) => {
                report.fail_with(cap_message(e));
                None
            }
            Err(e) => {
                report.fail_with(e.to_string());
                None
            }
        };
        let Some(group) = enumerate_or_report(GroupFamily::Hyperoctahedral, report) else { return };
        let Some(dihedral) = enumerate_or_report(GroupFamily::Dihedral, report) else { return };
        let Some(based) = enumerate_or_report(GroupFamily::BasedHyperoctahedral, report) else { return };
        for g in &group {
            let fac = factor_d_hplus(g);
            let ok = fac.d.is_member(GroupFamily::Dihedral)
                && fac.h.is_member(GroupFamily::BasedHyperoctahedral)
                && fac.d.compose(&fac.h).as_ref() == Ok(g);
            report.record(true, ok, || g.to_string());
        }
        let products: BTreeSet<SignedPermutation> = dihedral
            .iter()
            .flat_map(|d| based.iter().map(move |h| d.compose(h).expect("same size")))
            .collect();
        report.record(true, products.len() == group.len() && dihedral.len() * based.len() == group.len(), || {
            format!(
                "H_{}: |D| = {}, |H⁺| = {}, |D H⁺| = {}, |H| = {}",
                n + 1,
                dihedral.len(),
                based.len(),
                products.len(),
                group.len()
            )
        });
        let meet = dihedral.iter().filter(|d| d.is_member(GroupFamily::BasedHyperoctahedral)).count();
        report.record(true, meet == 1, || format!("|D ∩ H⁺| = {meet} in H_{}", n + 1));
    }
}

fn check_reflexive(f: &NCMorphism, generated: Option<&BTreeSet<NCMorphism>>) -> bool {
    let Ok(fac) = factor_reflexive(f) else { return false };
    let certified = generated.is_none_or(|set| set.contains(&fac.rho));
    fac.reconstruct() == *f && is_delta_r_op(&fac.rho) && certified && fac.h.is_member(GroupFamily::BasedHyperoctahedral)
}

/// Based morphisms factor as `ρ ∘ h` with `ρ ∈ ΔRᵒᵖ`, `h ∈ H⁺`, and
/// `|Hom_{IΓ(as)}| = |Hom_{ΔRᵒᵖ}| · |H⁺|`.
fn reflexive_decomp<R: Rng>(config: &VerifyConfig, rng: &mut R, report: &mut CheckReport) {
    if !hom_cap_ok(config, report) {
        return;
    }
    let generated = (config.max_n <= GENERATED_MAX_N).then(|| generated_delta_r_op(config.max_n));
    for n in 0..=config.max_n {
        let based_group = match enumerate(GroupFamily::BasedHyperoctahedral, n) {
            Ok(g) => g,
            Err(e) => return report.fail_with(cap_message(e)),
        };
        for m in 0..=config.max_n {
            let based: Vec<NCMorphism> = match hom_set(n, m) {
                Ok(all) => all.into_iter().filter(NCMorphism::is_based).collect(),
                Err(e) => return report.fail_with(cap_message(e)),
            };
            for f in &based {
                report.record(true, check_reflexive(f, generated.as_ref()), || f.to_string());
            }
            let delta_r = based.iter().filter(|f| is_delta_r_op(f)).count();
            report.record(true, based.len() == delta_r * based_group.len(), || {
                format!("[{n}] -> [{m}]: {} based, {delta_r} in ΔRᵒᵖ, |H⁺| = {}", based.len(), based_group.len())
            });
            if let Some(set) = &generated {
                let count = set.iter().filter(|f| f.source() == n && f.target() == m).count();
                report.record(true, count == delta_r, || {
                    format!("[{n}] -> [{m}]: {count} generated, {delta_r} recognised")
                });
            }
        }
    }
    for _ in 0..config.samples {
        let (n, m) = (rng.gen_range(0..=config.max_n), rng.gen_range(0..=config.max_n));
        let f = sample::based_morphism(rng, n, m);
        report.record(false, check_reflexive(&f, generated.as_ref()), || f.to_string());
    }
}

/// `B(g ∘ f) = B(f) ∘ B(g)` on random composable pairs and random `h ∈ H⁺`.
fn b_functoriality<R: Rng>(config: &VerifyConfig, rng: &mut R, report: &mut CheckReport) {
    for _ in 0..config.samples {
        let (f, g) = sample::composable_pair(rng, config.max_n, false);
        let h = sample::based_signed_permutation(rng, g.target());
        let lhs = b_module_action(&g.compose(&f).expect("composable"), &h);
        let rhs = b_module_action(&g, &h).and_then(|k| b_module_action(&f, &k));
        report.record(false, lhs.is_ok() && lhs == rhs, || format!("f = {f}, g = {g}, h = {h}"));
    }
}

/// Algebras for the bar-construction sweeps.
pub fn functoriality_algebras() -> Vec<InvolutiveAlgebra> {
    let mut out = Vec::new();
    for ring in [Ring::Rationals, Ring::PrimeField(2)] {
        for name in ["group_c2", "dual_numbers_minus"] {
            out.push(builtin(name, ring).expect("builtin"));
        }
    }
    out
}

/// `H_A(g ∘ f) = H_A(g) ∘ H_A(f)` on random tensors.
fn bar_functoriality<R: Rng>(config: &VerifyConfig, rng: &mut R, report: &mut CheckReport) {
    let algebras = functoriality_algebras();
    for k in 0..config.samples {
        let a = &algebras[k % algebras.len()];
        let (f, g) = sample::composable_pair(rng, config.max_n, false);
        let x = sample::tensor(rng, a, f.source());
        let lhs = bar_apply(a, &g.compose(&f).expect("composable"), &x);
        let rhs = bar_apply(a, &f, &x).and_then(|y| bar_apply(a, &g, &y));
        report.record(false, lhs.is_ok() && lhs == rhs, || {
            format!("A = {} over {}, f = {f}, g = {g}, x = {:?}", algebra_name(a), a.ring(), x.coefficients())
        });
    }
}

fn algebra_name(a: &InvolutiveAlgebra) -> String {
    BUILTIN_NAMES
        .iter()
        .find(|name| builtin(name, a.ring()).as_ref() == Ok(a))
        .map_or_else(|| "custom".to_string(), |s| s.to_string())
}

/// `bar_apply` along `T` and the reflection is the rotation and the reflexive
/// action; `based_bar_apply` along the Loday generators is the Loday functor.
fn generator_identities(config: &VerifyConfig, report: &mut CheckReport) {
    let top = config.max_n.min(GENERATOR_MAX_N);
    for name in BUILTIN_NAMES {
        for ring in [Ring::Rationals, Ring::PrimeField(2)] {
            let a = builtin(name, ring).expect("builtin");
            if let Err(e) = generator_identities_for(&a, top, report) {
                report.fail_with(format!("{name} over {ring}: {e}"));
            }
        }
    }
}

pub fn generator_identities_for(a: &InvolutiveAlgebra, top: usize, report: &mut CheckReport) -> Result<(), BarError> {
    let m = a.regular_bimodule();
    let ring = a.ring();
    for n in 0..=top {
        let basis = TensorBasis::new(a.dim(), a.dim(), n);
        let t = embed_group(&SignedPermutation::canonical_t(n));
        let refl = embed_reflection(n);
        for code in 0..basis.len() {
            let idx = basis.decode(code);
            let x = TensorElement::basis_tensor(ring, basis, idx.clone())?;
            let show = |what: &str| format!("{what} on {idx:?}, n = {n}");
            report.record(true, bar_apply(a, &t, &x)? == rotation(a, &x)?, || show("T"));
            let r_action = reflexive_action(a, &m, &x)?;
            report.record(true, bar_apply(a, &refl, &x)? == r_action, || show("reflection"));
            report.record(true, based_bar_apply(a, &m, &refl, &x)? == r_action, || show("based reflection"));
            for i in 0..=n {
                if n >= 1 {
                    let face = loday_face_morphism(n, i).expect("valid face");
                    let ok = based_bar_apply(a, &m, &face, &x)? == loday_face(a, &m, i, &x)?;
                    report.record(true, ok, || show(&format!("face {i}")));
                }
                let degeneracy = loday_degeneracy_morphism(n, i).expect("valid degeneracy");
                let ok = based_bar_apply(a, &m, &degeneracy, &x)? == loday_degeneracy(a, &m, i, &x)?;
                report.record(true, ok, || show(&format!("degeneracy {i}")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(max_n: usize) -> VerifyConfig {
        VerifyConfig { max_n, samples: 200, seed: sample::DEFAULT_SEED }
    }

    #[test]
    fn every_check_passes_small() {
        for report in run(Selector::All, &config(2)) {
            assert!(report.passed(), "{report}");
            assert!(report.exhaustive + report.sampled > 0, "{report}");
        }
    }

    #[test]
    fn caps_are_reported_with_guidance() {
        let reports = run(Selector::DeltaH, &config(5));
        assert!(reports[0].error.as_deref().unwrap().contains("--max-n"));
        let reports = run(Selector::DHplus, &config(7));
        assert!(!reports[0].passed());
        assert!(reports[0].error.as_deref().unwrap().contains("--max-n"));
    }

    #[test]
    fn reports_are_reproducible() {
        let a: Vec<String> = run(Selector::BarFunctoriality, &config(3)).iter().map(ToString::to_string).collect();
        let b: Vec<String> = run(Selector::BarFunctoriality, &config(3)).iter().map(ToString::to_string).collect();
        assert_eq!(a, b);
    }
}
