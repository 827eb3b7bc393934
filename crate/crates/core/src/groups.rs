//! Hyperoctahedral groups `H_{n+1} = C₂^{n+1} ⋊ Σ_{n+1}` as signed
//! permutations of `[n] = {0, …, n}`.
//!
//! An element is written `(z₀, …, z_n; σ)`. Labels are attached to *target*
//! positions: the element sends `j` to `σ(j)` and then applies the sign
//! `z_{σ(j)}` there. With that reading the group law is
//!
//! ```text
//! (z; σ) ∘ (z'; σ') = (z · σ·z'; σσ'),   (σ·z')ᵢ = z'_{σ⁻¹(i)}
//! ```
//!
//! where the right-hand factor acts first, the same order as composition of
//! morphisms in [`crate::ncsets`].
//!
//! `C₂ = {1, t}` is encoded as `bool` with `t ↔ true`; multiplication is XOR.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Largest group [`enumerate`] will materialise unless told otherwise.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("signed permutations of different sizes: {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("{labels} labels for a permutation of {points} points")]
    LabelCount { labels: usize, points: usize },
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    sigma: Vec<usize>,
    labels: Vec<bool>,
}

impl SignedPermutation {
    /// `(labels; sigma)` with `labels[i]` the sign at target position `i`.
    pub fn new(sigma: Vec<usize>, labels: Vec<bool>) -> Result<SignedPermutation, GroupError> {
        let k = sigma.len();
        if labels.len() != k {
            return Err(GroupError::LabelCount { labels: labels.len(), points: k });
        }
        let mut seen = vec![false; k];
        for &s in &sigma {
            if s >= k || seen[s] {
                return Err(GroupError::NotAPermutation(k));
            }
            seen[s] = true;
        }
        Ok(SignedPermutation { sigma, labels })
    }

    /// Build from the sign each *source* point carries, `j ↦ ±σ(j)`.
    pub fn from_source_signs(sigma: Vec<usize>, source_signs: Vec<bool>) -> Result<SignedPermutation, GroupError> {
        let probe = SignedPermutation::new(sigma, vec![false; source_signs.len()])?;
        if source_signs.len() != probe.sigma.len() {
            return Err(GroupError::LabelCount { labels: source_signs.len(), points: probe.sigma.len() });
        }
        let mut labels = vec![false; source_signs.len()];
        for (j, &s) in source_signs.iter().enumerate() {
            labels[probe.sigma[j]] = s;
        }
        Ok(SignedPermutation { sigma: probe.sigma, labels })
    }

    /// The identity of `H_{n+1}`.
    pub fn identity(n: usize) -> SignedPermutation {
        SignedPermutation { sigma: (0..=n).collect(), labels: vec![false; n + 1] }
    }

    /// `R = (t, …, t; r_{n+1})` with `r_{n+1}(i) = n − i`.
    pub fn canonical_r(n: usize) -> SignedPermutation {
        SignedPermutation { sigma: (0..=n).rev().collect(), labels: vec![true; n + 1] }
    }

    /// `T = (1, …, 1; t_{n+1})` with `t_{n+1}(i) = i + 1 mod n + 1`.
    pub fn canonical_t(n: usize) -> SignedPermutation {
        SignedPermutation { sigma: (0..=n).map(|i| (i + 1) % (n + 1)).collect(), labels: vec![false; n + 1] }
    }

    /// Number of points, `n + 1`.
    pub fn size(&self) -> usize {
        self.sigma.len()
    }

    /// The object `[n]` this acts on.
    pub fn n(&self) -> usize {
        self.sigma.len() - 1
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// Target-indexed labels `z₀, …, z_n`.
    pub fn labels(&self) -> &[bool] {
        &self.labels
    }

    pub fn apply(&self, j: usize) -> usize {
        self.sigma[j]
    }

    /// Sign carried by source point `j`, i.e. `z_{σ(j)}`.
    pub fn source_sign(&self, j: usize) -> bool {
        self.labels[self.sigma[j]]
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s) && self.labels.iter().all(|&z| !z)
    }

    /// `self ∘ other`; `other` acts first.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation, GroupError> {
        if self.size() != other.size() {
            return Err(GroupError::SizeMismatch(self.size(), other.size()));
        }
        let sigma = other.sigma.iter().map(|&j| self.sigma[j]).collect();
        let inv = self.sigma_inverse();
        let labels = (0..self.size()).map(|i| self.labels[i] ^ other.labels[inv[i]]).collect();
        Ok(SignedPermutation { sigma, labels })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let sigma = self.sigma_inverse();
        let labels = (0..self.size()).map(|j| self.labels[self.sigma[j]]).collect();
        SignedPermutation { sigma, labels }
    }

    pub fn pow(&self, k: usize) -> SignedPermutation {
        let mut acc = SignedPermutation::identity(self.n());
        for _ in 0..k {
            acc = self.compose(&acc).expect("same size");
        }
        acc
    }

    fn sigma_inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.size()];
        for (j, &s) in self.sigma.iter().enumerate() {
            inv[s] = j;
        }
        inv
    }

    pub fn is_member(&self, family: GroupFamily) -> bool {
        let n = self.n();
        match family {
            GroupFamily::Hyperoctahedral => true,
            GroupFamily::BasedHyperoctahedral => self.sigma[0] == 0 && !self.labels[0],
            GroupFamily::Symmetric => self.labels.iter().all(|&z| !z),
            GroupFamily::Reflexive => self.is_identity() || *self == SignedPermutation::canonical_r(n),
            GroupFamily::Cyclic | GroupFamily::Dihedral => {
                // Decided by enumerating the (small) subgroup itself.
                generated_subgroup(&family.generators(n)).contains(self)
            }
        }
    }
}

/// `[σ(0)±, σ(1)±, …]`, where the sign is the one carried by each source
/// point: `+` for label 1, `-` for label t.
impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for j in 0..self.size() {
            if j > 0 {
                f.write_str(", ")?;
            }
            let s = if self.source_sign(j) { '-' } else { '+' };
            write!(f, "{}{}", self.sigma[j], s)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The subgroup families of `H_{n+1}` used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    /// `{1, R}`.
    Reflexive,
    /// `⟨T⟩ ≅ C_{n+1}`.
    Cyclic,
    /// `⟨R, T⟩ ≅ D_{n+1}`.
    Dihedral,
    /// Unsigned permutations, `Σ_{n+1}`.
    Symmetric,
    Hyperoctahedral,
    /// `H⁺_{n+1}`: `σ(0) = 0` and `z₀ = 1`.
    BasedHyperoctahedral,
}

impl GroupFamily {
    pub const ALL: [GroupFamily; 6] = [
        GroupFamily::Reflexive,
        GroupFamily::Cyclic,
        GroupFamily::Dihedral,
        GroupFamily::Symmetric,
        GroupFamily::Hyperoctahedral,
        GroupFamily::BasedHyperoctahedral,
    ];

    fn generators(self, n: usize) -> Vec<SignedPermutation> {
        match self {
            GroupFamily::Reflexive => vec![SignedPermutation::canonical_r(n)],
            GroupFamily::Cyclic => vec![SignedPermutation::canonical_t(n)],
            GroupFamily::Dihedral => vec![SignedPermutation::canonical_r(n), SignedPermutation::canonical_t(n)],
            _ => unreachable!("only the small families are generated"),
        }
    }

    /// `|family ∩ H_{n+1}|`, saturating at `u128::MAX`.
    pub fn order(self, n: usize) -> u128 {
        let k = n as u128 + 1;
        let fact = |m: u128| (1..=m).try_fold(1u128, |acc, x| acc.checked_mul(x)).unwrap_or(u128::MAX);
        let pow2 = |m: u128| 1u128.checked_shl(m as u32).unwrap_or(u128::MAX);
        match self {
            // R = (t, …, t; r) is never trivial, not even in H₁.
            GroupFamily::Reflexive => 2,
            GroupFamily::Cyclic => k,
            GroupFamily::Dihedral => 2 * k,
            GroupFamily::Symmetric => fact(k),
            GroupFamily::Hyperoctahedral => pow2(k).saturating_mul(fact(k)),
            GroupFamily::BasedHyperoctahedral => pow2(k - 1).saturating_mul(fact(k - 1)),
        }
    }
}

/// BFS closure of a generating set.
pub fn generated_subgroup(generators: &[SignedPermutation]) -> BTreeSet<SignedPermutation> {
    let mut seen = BTreeSet::new();
    let Some(first) = generators.first() else {
        return seen;
    };
    let id = SignedPermutation::identity(first.n());
    let mut queue = VecDeque::from([id.clone()]);
    seen.insert(id);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = s.compose(&g).expect("generators share a size");
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen
}

/// Every element of `family ∩ H_{n+1}`, without duplicates, in a fixed order.
pub fn enumerate(family: GroupFamily, n: usize) -> Result<Vec<SignedPermutation>, GroupError> {
    enumerate_capped(family, n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_capped(family: GroupFamily, n: usize, cap: usize) -> Result<Vec<SignedPermutation>, GroupError> {
    let order = family.order(n);
    if order > cap as u128 {
        return Err(GroupError::CapExceeded { order, cap });
    }
    let k = n + 1;
    let out = match family {
        GroupFamily::Reflexive | GroupFamily::Cyclic | GroupFamily::Dihedral => {
            generated_subgroup(&family.generators(n)).into_iter().collect()
        }
        GroupFamily::Symmetric => permutations(k).map(|s| SignedPermutation { sigma: s, labels: vec![false; k] }).collect(),
        GroupFamily::Hyperoctahedral => {
            let mut out = Vec::with_capacity(order as usize);
            for sigma in permutations(k) {
                for mask in 0u64..(1u64 << k) {
                    out.push(SignedPermutation { sigma: sigma.clone(), labels: mask_labels(mask, k) });
                }
            }
            out
        }
        GroupFamily::BasedHyperoctahedral => {
            let mut out = Vec::with_capacity(order as usize);
            for rest in permutations(n) {
                let sigma: Vec<usize> = core::iter::once(0).chain(rest.iter().map(|&x| x + 1)).collect();
                for mask in 0u64..(1u64 << n) {
                    out.push(SignedPermutation { sigma: sigma.clone(), labels: mask_labels(mask << 1, k) });
                }
            }
            out
        }
    };
    Ok(out)
}

fn mask_labels(mask: u64, k: usize) -> Vec<bool> {
    (0..k).map(|i| mask >> i & 1 == 1).collect()
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next: Option<Vec<usize>> = Some((0..k).collect());
    core::iter::from_fn(move || {
        let current = next.take()?;
        let mut p = current.clone();
        // Standard next-permutation step.
        if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
            p.swap(i - 1, j);
            p[i..].reverse();
            next = Some(p);
        }
        Some(current)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn sp(sigma: &[usize], labels: &[bool]) -> SignedPermutation {
        SignedPermutation::new(sigma.to_vec(), labels.to_vec()).unwrap()
    }

    #[test]
    fn compose_semidirect_example() {
        // (1,1;τ) ∘ (1,t;id) = (t,1;τ) in H₂
        let tau = sp(&[1, 0], &[false, false]);
        let h = sp(&[0, 1], &[false, true]);
        assert_eq!(tau.compose(&h).unwrap(), sp(&[1, 0], &[true, false]));
    }

    /// Brute-force multiplication table of H₂ from the action on signed
    /// basis vectors `±e₀, ±e₁`.
    #[test]
    fn h2_table_matches_action_on_signed_points() {
        let all = enumerate(GroupFamily::Hyperoctahedral, 1).unwrap();
        assert_eq!(all.len(), 8);
        // act on (point, sign): j with sign s goes to σ(j) with sign s ^ z_{σ(j)}
        let act = |g: &SignedPermutation, (j, s): (usize, bool)| (g.apply(j), s ^ g.labels()[g.apply(j)]);
        for g in &all {
            for h in &all {
                let gh = g.compose(h).unwrap();
                for j in 0..2 {
                    for s in [false, true] {
                        assert_eq!(act(&gh, (j, s)), act(g, act(h, (j, s))));
                    }
                }
            }
        }
    }

    #[test]
    fn compose_size_mismatch() {
        let a = SignedPermutation::identity(1);
        let b = SignedPermutation::identity(2);
        assert_eq!(a.compose(&b), Err(GroupError::SizeMismatch(2, 3)));
    }

    #[test]
    fn construction_validation() {
        assert_eq!(SignedPermutation::new(vec![0, 0], vec![false, false]), Err(GroupError::NotAPermutation(2)));
        assert!(matches!(SignedPermutation::new(vec![0, 1], vec![false]), Err(GroupError::LabelCount { .. })));
        let g = SignedPermutation::from_source_signs(vec![1, 0], vec![true, false]).unwrap();
        assert_eq!(g, sp(&[1, 0], &[false, true]));
        assert!(g.source_sign(0));
    }

    #[test]
    fn canonical_generators() {
        assert_eq!(SignedPermutation::canonical_r(1), sp(&[1, 0], &[true, true]));
        assert!(SignedPermutation::canonical_t(0).is_identity());
        for n in 0..=8 {
            let r = SignedPermutation::canonical_r(n);
            let t = SignedPermutation::canonical_t(n);
            assert!(r.compose(&r).unwrap().is_identity());
            assert!(t.pow(n + 1).is_identity());
            let rtr = r.compose(&t).unwrap().compose(&r).unwrap();
            assert_eq!(rtr, t.inverse());
            for i in 0..=n {
                assert_eq!(r.apply(i), n - i);
            }
        }
    }

    #[test]
    fn inverse_of_t() {
        let t = SignedPermutation::canonical_t(2);
        assert_eq!(t.inverse(), sp(&[2, 0, 1], &[false, false, false]));
        assert!(SignedPermutation::identity(3).inverse().is_identity());
    }

    #[test]
    fn membership_examples() {
        assert!(sp(&[0, 1], &[false, true]).is_member(GroupFamily::BasedHyperoctahedral));
        assert!(!sp(&[0, 1], &[true, false]).is_member(GroupFamily::BasedHyperoctahedral));
        assert!(!sp(&[1, 0], &[false, false]).is_member(GroupFamily::BasedHyperoctahedral));
        let r = SignedPermutation::canonical_r(3);
        let t = SignedPermutation::canonical_t(3);
        assert!(r.is_member(GroupFamily::Reflexive));
        assert!(!t.is_member(GroupFamily::Reflexive));
        assert!(t.is_member(GroupFamily::Cyclic));
        assert!(!r.is_member(GroupFamily::Cyclic));
        assert!(r.compose(&t).unwrap().is_member(GroupFamily::Dihedral));
        assert!(!r.is_member(GroupFamily::Symmetric));
    }

    #[test]
    fn enumeration_orders() {
        assert_eq!(enumerate(GroupFamily::Hyperoctahedral, 1).unwrap().len(), 8);
        assert_eq!(enumerate(GroupFamily::Dihedral, 2).unwrap().len(), 6);
        let based0 = enumerate(GroupFamily::BasedHyperoctahedral, 0).unwrap();
        assert_eq!(based0, vec![SignedPermutation::identity(0)]);
        for n in 0..=4 {
            for fam in GroupFamily::ALL {
                let all = enumerate(fam, n).unwrap();
                assert_eq!(all.len() as u128, fam.order(n), "{fam:?} n={n}");
                let distinct: BTreeSet<_> = all.iter().cloned().collect();
                assert_eq!(distinct.len(), all.len());
                assert!(all.iter().all(|g| g.is_member(fam)), "{fam:?} n={n}");
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        assert!(matches!(
            enumerate(GroupFamily::Hyperoctahedral, 7),
            Err(GroupError::CapExceeded { order: 10_321_920, .. })
        ));
        assert!(enumerate_capped(GroupFamily::Hyperoctahedral, 2, 10).is_err());
    }

    #[test]
    fn dihedral_meets_based_trivially() {
        for n in 0..=6 {
            let d = enumerate(GroupFamily::Dihedral, n).unwrap();
            let meet = d.iter().filter(|g| g.is_member(GroupFamily::BasedHyperoctahedral)).count();
            assert_eq!(meet, 1, "n={n}");
            assert_eq!(
                GroupFamily::Dihedral.order(n) * GroupFamily::BasedHyperoctahedral.order(n),
                GroupFamily::Hyperoctahedral.order(n)
            );
        }
    }

    #[test]
    fn display_uses_source_signs() {
        let g = sp(&[1, 0], &[true, false]);
        assert_eq!(g.to_string(), "[1+, 0-]");
        assert_eq!(SignedPermutation::canonical_r(2).to_string(), "[2-, 1-, 0-]");
    }

    fn arb_element(n: usize) -> impl Strategy<Value = SignedPermutation> {
        (Just((0..=n).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n + 1))
            .prop_map(|(s, z)| SignedPermutation::new(s, z).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (SignedPermutation, SignedPermutation, SignedPermutation)> {
        (0usize..=5).prop_flat_map(|n| (arb_element(n), arb_element(n), arb_element(n)))
    }

    proptest! {
        #[test]
        fn group_axioms((a, b, c) in arb_triple()) {
            let id = SignedPermutation::identity(a.n());
            prop_assert_eq!(a.compose(&b).unwrap().compose(&c).unwrap(), a.compose(&b.compose(&c).unwrap()).unwrap());
            prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
            prop_assert_eq!(id.compose(&a).unwrap(), a.clone());
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
            prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
            prop_assert_eq!(a.inverse().inverse(), a.clone());
        }
    }
}
