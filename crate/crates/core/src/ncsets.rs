//! Morphisms of involutive non-commutative sets.
//!
//! A morphism `f: [n] → [m]` is stored preimage-first: for every target point
//! `i` we keep the totally ordered list `f⁻¹(i)`, each source point carrying a
//! label in `C₂ = {1, t}` (`false`/`true`). The underlying map of finite sets
//! is derived from this data. Composition is the ordered disjoint union
//!
//! ```text
//! (g ∘ f)⁻¹(i) = ⨆_{j^α ∈ g⁻¹(i)} α ∗ f⁻¹(j)
//! ```
//!
//! where `t ∗ −` reverses a list and flips every label.
//!
//! The subcategories `F(as)`, `Γ(as)`, `IΓ(as)`, `Δ` and `ΔRᵒᵖ` are
//! membership predicates on the one type [`NCMorphism`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::factorize;
use crate::groups::SignedPermutation;

/// Largest object `[n]` for which [`hom_set`] enumerates by default.
pub const DEFAULT_HOM_SIZE_CAP: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("cannot compose: target [{left}] does not match source [{right}]")]
    SizeMismatch { left: usize, right: usize },
    #[error("preimage lists for [{n}] do not partition it")]
    NotAPartition { n: usize },
    #[error("expected {expected} preimage lists, got {got}")]
    PreimageCount { expected: usize, got: usize },
    #[error("map is not order-preserving")]
    NotMonotone,
    #[error("value {value} outside the target [{m}]")]
    ValueOutOfRange { value: usize, m: usize },
    #[error("morphism does not fix the basepoint 0")]
    NotBased,
    #[error("hom-set enumeration capped at [{cap}]")]
    SizeCapExceeded { cap: usize },
    #[error("no Loday {kind} with index {index} on [{n}]")]
    IndexOutOfRange { kind: &'static str, index: usize, n: usize },
}

/// A finite, totally ordered `C₂`-set: `j₁^{α₁} < ⋯ < j_r^{α_r}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledPreimage(pub Vec<(usize, bool)>);

impl LabeledPreimage {
    pub fn entries(&self) -> &[(usize, bool)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `C₂` action: identity for `1`, reverse-and-flip for `t`.
    pub fn star_action(&self, a: bool) -> LabeledPreimage {
        if a {
            LabeledPreimage(self.0.iter().rev().map(|&(j, z)| (j, !z)).collect())
        } else {
            self.clone()
        }
    }
}

/// The `C₂` action on a labeled preimage, free-function form.
pub fn star_action(a: bool, p: &LabeledPreimage) -> LabeledPreimage {
    p.star_action(a)
}

/// Subcategories of `IF(as)` sharing its objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CategoryTag {
    /// `F(as)`: every label is `1`.
    Fas,
    /// `IF(as)`: everything.
    IFas,
    /// `Γ(as)`: unlabelled and based.
    GammaAs,
    /// `IΓ(as)`: based, `f(0) = 0`.
    IGammaAs,
    /// `Δ`: order-preserving, unlabelled, increasing preimages.
    Delta,
    /// `ΔRᵒᵖ`, generated by the Loday faces, degeneracies and reflections.
    DeltaROp,
}

impl CategoryTag {
    pub const ALL: [CategoryTag; 6] = [
        CategoryTag::Fas,
        CategoryTag::IFas,
        CategoryTag::GammaAs,
        CategoryTag::IGammaAs,
        CategoryTag::Delta,
        CategoryTag::DeltaROp,
    ];
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NCMorphism {
    source_n: usize,
    target_m: usize,
    preimages: Vec<LabeledPreimage>,
}

impl NCMorphism {
    /// `preimages[i]` is the ordered, labeled `f⁻¹(i)`; together they must
    /// partition `[source_n]`.
    pub fn new(source_n: usize, target_m: usize, preimages: Vec<LabeledPreimage>) -> Result<NCMorphism, MorphismError> {
        if preimages.len() != target_m + 1 {
            return Err(MorphismError::PreimageCount { expected: target_m + 1, got: preimages.len() });
        }
        let mut seen = vec![false; source_n + 1];
        let mut count = 0;
        for p in &preimages {
            for &(j, _) in &p.0 {
                if j > source_n || seen[j] {
                    return Err(MorphismError::NotAPartition { n: source_n });
                }
                seen[j] = true;
                count += 1;
            }
        }
        if count != source_n + 1 {
            return Err(MorphismError::NotAPartition { n: source_n });
        }
        Ok(NCMorphism { source_n, target_m, preimages })
    }

    pub fn from_lists(source_n: usize, target_m: usize, lists: Vec<Vec<(usize, bool)>>) -> Result<NCMorphism, MorphismError> {
        NCMorphism::new(source_n, target_m, lists.into_iter().map(LabeledPreimage).collect())
    }

    pub fn identity(n: usize) -> NCMorphism {
        NCMorphism { source_n: n, target_m: n, preimages: (0..=n).map(|i| LabeledPreimage(vec![(i, false)])).collect() }
    }

    pub fn source(&self) -> usize {
        self.source_n
    }

    pub fn target(&self) -> usize {
        self.target_m
    }

    pub fn preimage(&self, i: usize) -> &LabeledPreimage {
        &self.preimages[i]
    }

    pub fn preimages(&self) -> &[LabeledPreimage] {
        &self.preimages
    }

    /// The underlying map of finite sets, `j ↦ f(j)`.
    pub fn underlying_map(&self) -> Vec<usize> {
        let mut f = vec![0; self.source_n + 1];
        for (i, p) in self.preimages.iter().enumerate() {
            for &(j, _) in &p.0 {
                f[j] = i;
            }
        }
        f
    }

    /// Label carried by source point `j`.
    pub fn label_of(&self, j: usize) -> bool {
        self.preimages
            .iter()
            .flat_map(|p| p.0.iter())
            .find(|&&(k, _)| k == j)
            .map(|&(_, z)| z)
            .expect("partition covers every source point")
    }

    pub fn is_based(&self) -> bool {
        self.preimages[0].0.iter().any(|&(j, _)| j == 0)
    }

    pub fn is_unlabelled(&self) -> bool {
        self.preimages.iter().all(|p| p.0.iter().all(|&(_, z)| !z))
    }

    pub fn is_bijective(&self) -> bool {
        self.source_n == self.target_m && self.preimages.iter().all(|p| p.len() == 1)
    }

    /// `self ∘ f`; `f` acts first.
    pub fn compose(&self, f: &NCMorphism) -> Result<NCMorphism, MorphismError> {
        if f.target_m != self.source_n {
            return Err(MorphismError::SizeMismatch { left: f.target_m, right: self.source_n });
        }
        let preimages = self
            .preimages
            .iter()
            .map(|gp| {
                let mut out = Vec::new();
                for &(j, alpha) in &gp.0 {
                    out.extend(f.preimages[j].star_action(alpha).0);
                }
                LabeledPreimage(out)
            })
            .collect();
        Ok(NCMorphism { source_n: f.source_n, target_m: self.target_m, preimages })
    }

    pub fn is_in(&self, category: CategoryTag) -> bool {
        match category {
            CategoryTag::IFas => true,
            CategoryTag::Fas => self.is_unlabelled(),
            CategoryTag::IGammaAs => self.is_based(),
            CategoryTag::GammaAs => self.is_unlabelled() && self.is_based(),
            CategoryTag::Delta => self.is_delta(),
            CategoryTag::DeltaROp => factorize::is_delta_r_op(self),
        }
    }

    fn is_delta(&self) -> bool {
        if !self.is_unlabelled() {
            return false;
        }
        // Increasing preimages whose blocks follow each other in order.
        let mut next = 0;
        for p in &self.preimages {
            for &(j, _) in &p.0 {
                if j != next {
                    return false;
                }
                next += 1;
            }
        }
        true
    }
}

/// The reflection `r_{n+1}` of `ΔRᵒᵖ` as an endomorphism of `[n]` in `IΓ(as)`:
/// `r⁻¹(0) = {0ᵗ}` and `r⁻¹(i) = {(n − i + 1)ᵗ}` for `i > 0`.
pub fn embed_reflection(n: usize) -> NCMorphism {
    let preimages = (0..=n)
        .map(|i| LabeledPreimage(vec![(if i == 0 { 0 } else { n - i + 1 }, true)]))
        .collect();
    NCMorphism { source_n: n, target_m: n, preimages }
}

/// A group element as a bijection: the preimage of `σ(j)` is `{j^{z_{σ(j)}}}`.
///
/// This is a homomorphism for the composition law of
/// [`SignedPermutation::compose`].
pub fn embed_group(g: &SignedPermutation) -> NCMorphism {
    let n = g.n();
    let mut preimages = vec![LabeledPreimage::default(); n + 1];
    for j in 0..=n {
        preimages[g.apply(j)] = LabeledPreimage(vec![(j, g.source_sign(j))]);
    }
    NCMorphism { source_n: n, target_m: n, preimages }
}

/// An order-preserving map `φ: [n] → [m]` given by its values, with
/// unlabelled increasing preimages.
pub fn embed_delta(phi: &[usize], m: usize) -> Result<NCMorphism, MorphismError> {
    assert!(!phi.is_empty(), "[n] is never empty");
    if let Some(&value) = phi.iter().find(|&&v| v > m) {
        return Err(MorphismError::ValueOutOfRange { value, m });
    }
    if phi.windows(2).any(|w| w[0] > w[1]) {
        return Err(MorphismError::NotMonotone);
    }
    let mut preimages = vec![LabeledPreimage::default(); m + 1];
    for (j, &i) in phi.iter().enumerate() {
        preimages[i].0.push((j, false));
    }
    Ok(NCMorphism { source_n: phi.len() - 1, target_m: m, preimages })
}

/// The Loday face `∂ᵢ: [n] → [n−1]` as a morphism of `IΓ(as)`.
///
/// For `i < n` it merges `i < i+1`; the last face sends `n` in front of the
/// basepoint, `∂_n⁻¹(0) = {n < 0}`.
pub fn loday_face_morphism(n: usize, i: usize) -> Result<NCMorphism, MorphismError> {
    if n == 0 || i > n {
        return Err(MorphismError::IndexOutOfRange { kind: "face", index: i, n });
    }
    let mut preimages = Vec::with_capacity(n);
    if i < n {
        for k in 0..n {
            let list = match k.cmp(&i) {
                core::cmp::Ordering::Less => vec![(k, false)],
                core::cmp::Ordering::Equal => vec![(i, false), (i + 1, false)],
                core::cmp::Ordering::Greater => vec![(k + 1, false)],
            };
            preimages.push(LabeledPreimage(list));
        }
    } else {
        preimages.push(LabeledPreimage(vec![(n, false), (0, false)]));
        for k in 1..n {
            preimages.push(LabeledPreimage(vec![(k, false)]));
        }
    }
    Ok(NCMorphism { source_n: n, target_m: n - 1, preimages })
}

/// The Loday degeneracy `s_j: [n] → [n+1]`, inserting an empty preimage at
/// slot `j + 1`.
pub fn loday_degeneracy_morphism(n: usize, j: usize) -> Result<NCMorphism, MorphismError> {
    if j > n {
        return Err(MorphismError::IndexOutOfRange { kind: "degeneracy", index: j, n });
    }
    let preimages = (0..=n + 1)
        .map(|k| {
            if k <= j {
                LabeledPreimage(vec![(k, false)])
            } else if k == j + 1 {
                LabeledPreimage::default()
            } else {
                LabeledPreimage(vec![(k - 1, false)])
            }
        })
        .collect();
    Ok(NCMorphism { source_n: n, target_m: n + 1, preimages })
}

/// `|Hom_{IF(as)}([n], [m])| = |Hom_Δ([n], [m])| · 2^{n+1} (n+1)!`.
pub fn hom_set_size(n: usize, m: usize) -> u128 {
    let binom = |a: u128, b: u128| (0..b).fold(1u128, |acc, i| acc * (a - i) / (i + 1));
    let fact = (1..=n as u128 + 1).product::<u128>();
    binom((n + m + 1) as u128, (n + 1) as u128) * (1u128 << (n + 1)) * fact
}

/// Every morphism `[n] → [m]` of `IF(as)`, with the default size cap.
pub fn hom_set(n: usize, m: usize) -> Result<Vec<NCMorphism>, MorphismError> {
    hom_set_capped(n, m, DEFAULT_HOM_SIZE_CAP)
}

/// Enumerates maps of finite sets, then every ordering of each fibre, then
/// every labelling. Independent of the `Δ ∘ H` normal form.
pub fn hom_set_capped(n: usize, m: usize, cap: usize) -> Result<Vec<NCMorphism>, MorphismError> {
    if n > cap || m > cap {
        return Err(MorphismError::SizeCapExceeded { cap });
    }
    let k = n + 1;
    let mut out = Vec::new();
    let mut map = vec![0usize; k];
    loop {
        let mut fibres: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
        for (j, &i) in map.iter().enumerate() {
            fibres[i].push(j);
        }
        let orderings: Vec<Vec<Vec<usize>>> = fibres
            .iter()
            .map(|fib| crate::groups::permutations(fib.len()).map(|p| p.iter().map(|&x| fib[x]).collect()).collect())
            .collect();
        let mut choice = vec![0usize; m + 1];
        loop {
            for mask in 0u64..(1u64 << k) {
                let preimages = (0..=m)
                    .map(|i| LabeledPreimage(orderings[i][choice[i]].iter().map(|&j| (j, mask >> j & 1 == 1)).collect()))
                    .collect();
                out.push(NCMorphism { source_n: n, target_m: m, preimages });
            }
            if !advance(&mut choice, |i| orderings[i].len()) {
                break;
            }
        }
        if !advance(&mut map, |_| m + 1) {
            break;
        }
    }
    Ok(out)
}

/// Odometer increment; `false` once it wraps around.
fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for (i, d) in digits.iter_mut().enumerate() {
        *d += 1;
        if *d < radix(i) {
            return true;
        }
        *d = 0;
    }
    false
}

/// `n -> m ; 0: j± … ; 1: … ; m: …`, with `.` for an empty preimage.
impl fmt::Display for NCMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.source_n, self.target_m)?;
        for (i, p) in self.preimages.iter().enumerate() {
            write!(f, " ; {i}:")?;
            if p.is_empty() {
                f.write_str(" .")?;
            }
            for &(j, z) in &p.0 {
                write!(f, " {}{}", j, if z { '-' } else { '+' })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
