use ifas_core::barhom::{bar_apply, TensorBasis, TensorElement};
use ifas_core::factorize::{b_module_action, factor_d_hplus, factor_delta_h, factor_reflexive, is_delta_r_op};
use ifas_core::groups::{GroupFamily, SignedPermutation};
use ifas_core::invalg::builtin;
use ifas_core::linalg::{kernel_basis, rank, ExactMatrix, Ring};
use ifas_core::ncsets::{embed_group, LabeledPreimage, NCMorphism};
use proptest::prelude::*;

fn signed_permutation(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((0..=n).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n + 1))
        .prop_map(|(sigma, labels)| SignedPermutation::new(sigma, labels).unwrap())
}

/// A morphism `[n] → [m]` from a target, a label and a sort key per point.
fn morphism(n: usize, m: usize, based: bool) -> impl Strategy<Value = NCMorphism> {
    proptest::collection::vec((0..=m, any::<bool>(), any::<u32>()), n + 1).prop_map(move |points| {
        let mut fibres: Vec<Vec<(u32, usize, bool)>> = vec![Vec::new(); m + 1];
        for (j, &(target, label, key)) in points.iter().enumerate() {
            let target = if based && j == 0 { 0 } else { target };
            fibres[target].push((key, j, label));
        }
        let preimages = fibres
            .into_iter()
            .map(|mut f| {
                f.sort();
                LabeledPreimage(f.into_iter().map(|(_, j, z)| (j, z)).collect())
            })
            .collect();
        NCMorphism::new(n, m, preimages).unwrap()
    })
}

fn composable_triple() -> impl Strategy<Value = (NCMorphism, NCMorphism, NCMorphism)> {
    (0..=3usize, 0..=3usize, 0..=3usize, 0..=3usize)
        .prop_flat_map(|(a, b, c, d)| (morphism(a, b, false), morphism(b, c, false), morphism(c, d, false)))
}

fn small_integer_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..6usize, 1..6usize)
        .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-4i64..=4, c), r))
}

proptest! {
    #[test]
    fn composition_is_associative((f, g, h) in composable_triple()) {
        let left = h.compose(&g).unwrap().compose(&f).unwrap();
        let right = h.compose(&g.compose(&f).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(NCMorphism::identity(f.target()).compose(&f).unwrap(), f.clone());
        prop_assert_eq!(f.compose(&NCMorphism::identity(f.source())).unwrap(), f);
    }

    #[test]
    fn embed_group_is_a_homomorphism((g, h) in (0..=4usize).prop_flat_map(|n| (signed_permutation(n), signed_permutation(n)))) {
        prop_assert_eq!(embed_group(&g.compose(&h).unwrap()), embed_group(&g).compose(&embed_group(&h)).unwrap());
        prop_assert!(g.compose(&g.inverse()).unwrap().is_identity());
    }

    #[test]
    fn delta_h_reconstructs(f in (0..=5usize, 0..=5usize).prop_flat_map(|(n, m)| morphism(n, m, false))) {
        let fac = factor_delta_h(&f);
        prop_assert!(fac.phi.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(fac.reconstruct(), f);
    }

    #[test]
    fn d_hplus_reconstructs(g in (0..=7usize).prop_flat_map(signed_permutation)) {
        let fac = factor_d_hplus(&g);
        prop_assert!(fac.d.is_member(GroupFamily::Dihedral));
        prop_assert!(fac.h.is_member(GroupFamily::BasedHyperoctahedral));
        prop_assert_eq!(fac.d.compose(&fac.h).unwrap(), g);
    }

    #[test]
    fn reflexive_reconstructs(f in (0..=4usize, 0..=4usize).prop_flat_map(|(n, m)| morphism(n, m, true))) {
        let fac = factor_reflexive(&f).unwrap();
        prop_assert!(is_delta_r_op(&fac.rho));
        prop_assert_eq!(fac.reconstruct(), f);
    }

    #[test]
    fn b_is_contravariant(
        ((f, g), h) in (0..=3usize, 0..=3usize, 0..=3usize)
            .prop_flat_map(|(a, b, c)| ((morphism(a, b, false), morphism(b, c, false)), signed_permutation(c)))
    ) {
        let h = factor_d_hplus(&h).h;
        let lhs = b_module_action(&g.compose(&f).unwrap(), &h).unwrap();
        let rhs = b_module_action(&f, &b_module_action(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bar_construction_is_functorial(
        (f, g, idx) in (0..=3usize, 0..=3usize, 0..=3usize).prop_flat_map(|(a, b, c)| {
            (morphism(a, b, false), morphism(b, c, false), proptest::collection::vec(0..3usize, a + 1))
        })
    ) {
        let a = builtin("trunc_poly_3", Ring::Rationals).unwrap();
        let x = TensorElement::basis_tensor(a.ring(), TensorBasis::new(3, 3, f.source()), idx).unwrap();
        let lhs = bar_apply(&a, &g.compose(&f).unwrap(), &x).unwrap();
        let rhs = bar_apply(&a, &g, &bar_apply(&a, &f, &x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_nullity(rows in small_integer_matrix(), p in prop_oneof![Just(Ring::Rationals), Just(Ring::PrimeField(3))]) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = ExactMatrix::from_i64_rows(p, &refs);
        let kernel = kernel_basis(&m).unwrap();
        prop_assert_eq!(rank(&m) + kernel.len(), m.cols());
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
        for v in &kernel {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| *x == p.zero()));
        }
    }
}
