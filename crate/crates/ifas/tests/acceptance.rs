//! The ten acceptance criteria, each printed as one PASS/FAIL line with its
//! runtime against the allowed budget. Runs without the libtest harness so
//! the lines always reach the terminal; the process fails if any criterion
//! fails or overruns.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ifas::sample;
use ifas_core::barhom::{
    bar_apply, bar_prime_boundary, based_bar_apply, cyclic_homology, cyclic_operator, hochschild_boundary,
    hochschild_homology, loday_degeneracy, loday_face, norm_operator, reflexive_action, reflexive_homology,
    reflexive_operator, rotation, TensorBasis, TensorElement,
};
use ifas_core::factorize::{
    b_module_action, factor_d_hplus, factor_delta_h, factor_reflexive, generated_delta_r_op, is_delta_r_op,
};
use ifas_core::groups::{enumerate, generated_subgroup, GroupFamily, SignedPermutation};
use ifas_core::invalg::{builtin, InvolutiveAlgebra, BUILTIN_NAMES};
use ifas_core::linalg::{ExactMatrix, HomologyGroup, Ring};
use ifas_core::ncsets::{
    embed_delta, embed_group, embed_reflection, hom_set, hom_set_size, loday_degeneracy_morphism,
    loday_face_morphism, NCMorphism,
};
use num_rational::Ratio;
use rand::Rng;

const SEED: u64 = 20_240_607;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("dihedral subgroup relations, n <= 8", 1, dihedral_relations),
        ("IF(as) = Delta o H", 120, delta_h_factorization),
        ("H = D o H+", 60, d_hplus_factorization),
        ("IGamma(as) = DeltaR^op o H+", 120, reflexive_factorization),
        ("B is a contravariant functor", 60, b_functoriality),
        ("bar construction is a functor", 120, bar_functoriality),
        ("generator-level functor identities", 120, generator_identities),
        ("chain-level identities", 60, chain_identities),
        ("homology of the ground ring", 60, ground_ring_homology),
        ("Hochschild homology oracle, dual numbers", 120, dual_numbers_oracle),
    ];
    let mut failed = 0;
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let budget = Duration::from_secs(*limit);
        let (status, detail) = match outcome {
            Ok(detail) if elapsed < budget => ("PASS", detail),
            Ok(detail) => ("FAIL", format!("{detail}; over the time budget")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} [{status}] {name}: {detail} ({:.3} s, limit {limit} s)",
            k + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance criteria passed");
}

fn dihedral_relations() -> Outcome {
    let mut checks = 0;
    for n in 0..=8 {
        let r = SignedPermutation::canonical_r(n);
        let t = SignedPermutation::canonical_t(n);
        let id = SignedPermutation::identity(n);
        ensure(r.compose(&r).unwrap() == id, || format!("R² ≠ 1 for n = {n}"))?;
        ensure(t.pow(n + 1) == id, || format!("T^(n+1) ≠ 1 for n = {n}"))?;
        // Powers below n + 1 are not the identity, so T has order exactly n + 1.
        ensure((1..=n).all(|k| t.pow(k) != id), || format!("T has order < n + 1 for n = {n}"))?;
        let rtr = r.compose(&t).unwrap().compose(&r).unwrap();
        ensure(rtr == t.inverse(), || format!("RTR ≠ T⁻¹ for n = {n}"))?;
        ensure(t.compose(&t.inverse()).unwrap() == id, || format!("T T⁻¹ ≠ 1 for n = {n}"))?;
        ensure(generated_subgroup(&[r, t]).len() == 2 * (n + 1), || format!("|⟨R, T⟩| ≠ 2(n+1) for n = {n}"))?;
        checks += 6;
    }
    Ok(format!("{checks} relations exact"))
}

fn monotone_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, m: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n + 1 {
            out.push(cur.clone());
            return;
        }
        for v in lo..=m {
            cur.push(v);
            go(n, m, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, m, 0, &mut Vec::new(), &mut out);
    out
}

fn delta_h_factorization() -> Outcome {
    let mut exhaustive = 0;
    for n in 0..=2 {
        let group = enumerate(GroupFamily::Hyperoctahedral, n).unwrap();
        for m in 0..=2 {
            let all = hom_set(n, m).unwrap();
            ensure(all.len() as u128 == hom_set_size(n, m), || format!("hom-set size [{n}] -> [{m}]"))?;
            // Uniqueness: distinct pairs (φ, g) give distinct composites, and
            // there are exactly as many pairs as morphisms.
            let mut composites = BTreeSet::new();
            let maps = monotone_maps(n, m);
            for phi in &maps {
                let d = embed_delta(phi, m).unwrap();
                for g in &group {
                    composites.insert(d.compose(&embed_group(g)).unwrap());
                }
            }
            ensure(composites.len() == maps.len() * group.len(), || format!("two factorizations in [{n}] -> [{m}]"))?;
            ensure(composites.len() == all.len(), || format!("counting fails in [{n}] -> [{m}]"))?;
            for f in &all {
                let fac = factor_delta_h(f);
                ensure(fac.reconstruct() == *f && composites.contains(f), || format!("no factorization of {f}"))?;
                exhaustive += 1;
            }
        }
    }
    let mut rng = sample::rng(SEED);
    let samples = 10_000;
    for _ in 0..samples {
        let (n, m) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
        let f = sample::morphism(&mut rng, n, m);
        let fac = factor_delta_h(&f);
        ensure(fac.phi.windows(2).all(|w| w[0] <= w[1]), || format!("φ not monotone for {f}"))?;
        ensure(fac.reconstruct() == f, || format!("reconstruction fails for {f}"))?;
    }
    Ok(format!("{exhaustive} morphisms exhaustive, {samples} sampled, 0 failures"))
}

fn d_hplus_factorization() -> Outcome {
    let mut total = 0;
    for n in 0..=4 {
        let group = enumerate(GroupFamily::Hyperoctahedral, n).unwrap();
        let dihedral = enumerate(GroupFamily::Dihedral, n).unwrap();
        let based = enumerate(GroupFamily::BasedHyperoctahedral, n).unwrap();
        ensure(dihedral.len() * based.len() == group.len(), || format!("|D||H⁺| ≠ |H| for n = {n}"))?;
        let meet = dihedral.iter().filter(|d| based.contains(d)).count();
        ensure(meet == 1, || format!("|D ∩ H⁺| = {meet} for n = {n}"))?;
        let products: BTreeSet<SignedPermutation> =
            dihedral.iter().flat_map(|d| based.iter().map(move |h| d.compose(h).unwrap())).collect();
        ensure(products.len() == group.len(), || format!("D × H⁺ → H not bijective for n = {n}"))?;
        for g in &group {
            let fac = factor_d_hplus(g);
            ensure(fac.d.is_member(GroupFamily::Dihedral), || format!("d ∉ D for {g}"))?;
            ensure(fac.h.is_member(GroupFamily::BasedHyperoctahedral), || format!("h ∉ H⁺ for {g}"))?;
            ensure(fac.d.compose(&fac.h).as_ref() == Ok(g), || format!("d h ≠ g for {g}"))?;
        }
        total += group.len();
    }
    Ok(format!("{total} group elements, all unique"))
}

fn certify(f: &NCMorphism, generated: &BTreeSet<NCMorphism>) -> Result<(), String> {
    let fac = factor_reflexive(f).map_err(|e| format!("{f}: {e}"))?;
    ensure(fac.reconstruct() == *f, || format!("reconstruction fails for {f}"))?;
    ensure(generated.contains(&fac.rho), || format!("ρ = {} is not generated by the Loday maps", fac.rho))?;
    ensure(is_delta_r_op(&fac.rho), || format!("ρ = {} not recognised", fac.rho))?;
    ensure(fac.h.is_member(GroupFamily::BasedHyperoctahedral), || format!("h ∉ H⁺ for {f}"))
}

fn reflexive_factorization() -> Outcome {
    let generated = generated_delta_r_op(3);
    let mut exhaustive = 0;
    for n in 0..=2 {
        let based_group = enumerate(GroupFamily::BasedHyperoctahedral, n).unwrap();
        for m in 0..=2 {
            let based: BTreeSet<NCMorphism> = hom_set(n, m).unwrap().into_iter().filter(|f| f.is_based()).collect();
            let rhos: Vec<&NCMorphism> = generated.iter().filter(|f| f.source() == n && f.target() == m).collect();
            ensure(based.len() == rhos.len() * based_group.len(), || {
                format!("|IΓ| ≠ |ΔRᵒᵖ| |H⁺| in [{n}] -> [{m}]")
            })?;
            let composites: BTreeSet<NCMorphism> =
                rhos.iter().flat_map(|rho| based_group.iter().map(|h| rho.compose(&embed_group(h)).unwrap())).collect();
            ensure(composites == based, || format!("ρ ∘ h does not enumerate IΓ(as) in [{n}] -> [{m}]"))?;
            for f in &based {
                certify(f, &generated)?;
                exhaustive += 1;
            }
        }
    }
    let mut rng = sample::rng(SEED);
    let samples = 10_000;
    for _ in 0..samples {
        let (n, m) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        certify(&sample::based_morphism(&mut rng, n, m), &generated)?;
    }
    Ok(format!("{exhaustive} based morphisms exhaustive, {samples} sampled and certified"))
}

fn b_functoriality() -> Outcome {
    let mut rng = sample::rng(SEED);
    let pairs = 1_000;
    let mut checks = 0;
    for _ in 0..pairs {
        let (f, g) = sample::composable_pair(&mut rng, 3, false);
        let gf = g.compose(&f).unwrap();
        for h in enumerate(GroupFamily::BasedHyperoctahedral, g.target()).unwrap() {
            let lhs = b_module_action(&gf, &h).unwrap();
            let rhs = b_module_action(&f, &b_module_action(&g, &h).unwrap()).unwrap();
            ensure(lhs == rhs, || format!("B(g∘f) ≠ B(f)∘B(g) at f = {f}, g = {g}, h = {h}"))?;
            checks += 1;
        }
        let id = NCMorphism::identity(f.target());
        let h = sample::based_signed_permutation(&mut rng, f.target());
        ensure(b_module_action(&id, &h).unwrap() == h, || format!("B(id) ≠ id at {h}"))?;
    }
    Ok(format!("{pairs} pairs, {checks} basis elements"))
}

fn bar_functoriality() -> Outcome {
    let mut rng = sample::rng(SEED);
    let per_algebra = 1_000;
    let mut count = 0;
    for ring in [Ring::Rationals, Ring::PrimeField(2)] {
        for name in ["group_c2", "dual_numbers_minus"] {
            let a = builtin(name, ring).unwrap();
            for _ in 0..per_algebra {
                let (f, g) = sample::composable_pair(&mut rng, 4, false);
                let x = sample::tensor(&mut rng, &a, f.source());
                let lhs = bar_apply(&a, &g.compose(&f).unwrap(), &x).unwrap();
                let rhs = bar_apply(&a, &g, &bar_apply(&a, &f, &x).unwrap()).unwrap();
                ensure(lhs == rhs, || format!("{name} over {ring}: f = {f}, g = {g}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} pairs over 4 algebras"))
}

/// `bar_apply` at `T` is the rotation `τ`; at the reflection `TR` it is the
/// reflexive action `r`, and at `R` itself the full reversal `τ⁻¹ r`, for
/// `n ≤ 4`. The based restrictions along faces, degeneracies and the
/// reflection are the Loday functor for `n ≤ 3`.
fn generator_identities() -> Outcome {
    let mut count = 0;
    for ring in [Ring::Rationals, Ring::PrimeField(2)] {
        for name in BUILTIN_NAMES {
            let a = builtin(name, ring).unwrap();
            ensure(a.dim() <= 4, || format!("{name} has dimension {}", a.dim()))?;
            let m = a.regular_bimodule();
            for n in 0..=4 {
                let basis = TensorBasis::new(a.dim(), a.dim(), n);
                let t = embed_group(&SignedPermutation::canonical_t(n));
                let big_r = embed_group(&SignedPermutation::canonical_r(n));
                let refl = embed_reflection(n);
                for code in 0..basis.len() {
                    let idx = basis.decode(code);
                    let x = TensorElement::basis_tensor(ring, basis, idx.clone()).unwrap();
                    let at = |what: &str| format!("{name} over {ring}, {what}, tensor {idx:?}");
                    let r = reflexive_action(&a, &m, &x).unwrap();
                    ensure(bar_apply(&a, &t, &x).unwrap() == rotation(&a, &x).unwrap(), || at("T"))?;
                    ensure(bar_apply(&a, &refl, &x).unwrap() == r, || at("reflection"))?;
                    let mut reversal = r.clone();
                    for _ in 0..n {
                        reversal = rotation(&a, &reversal).unwrap();
                    }
                    ensure(bar_apply(&a, &big_r, &x).unwrap() == reversal, || at("R"))?;
                    count += 1;
                    if n > 3 {
                        continue;
                    }
                    ensure(based_bar_apply(&a, &m, &refl, &x).unwrap() == r, || at("based reflection"))?;
                    for i in 0..=n {
                        if n >= 1 {
                            let face = loday_face_morphism(n, i).unwrap();
                            let ok = based_bar_apply(&a, &m, &face, &x).unwrap() == loday_face(&a, &m, i, &x).unwrap();
                            ensure(ok, || at(&format!("face {i}")))?;
                        }
                        let s = loday_degeneracy_morphism(n, i).unwrap();
                        let ok = based_bar_apply(&a, &m, &s, &x).unwrap() == loday_degeneracy(&a, &m, i, &x).unwrap();
                        ensure(ok, || at(&format!("degeneracy {i}")))?;
                    }
                }
            }
        }
    }
    Ok(format!("{count} basis tensors"))
}

fn chain_identities() -> Outcome {
    let mut count = 0;
    for ring in [Ring::Rationals, Ring::PrimeField(2)] {
        for name in BUILTIN_NAMES {
            let a = builtin(name, ring).unwrap();
            let m = a.regular_bimodule();
            let at = |what: &str, n: usize| format!("{name} over {ring}: {what} in degree {n}");
            let b: Vec<ExactMatrix> = (0..=4).map(|n| hochschild_boundary(&a, &m, n).unwrap()).collect();
            let bp: Vec<ExactMatrix> = (0..=4).map(|n| bar_prime_boundary(&a, n).unwrap()).collect();
            let y: Vec<ExactMatrix> = (0..=4).map(|n| reflexive_operator(&a, &m, n).unwrap()).collect();
            let t: Vec<ExactMatrix> = (0..=4).map(|n| cyclic_operator(&a, n).unwrap()).collect();
            let nm: Vec<ExactMatrix> = (0..=4).map(|n| norm_operator(&a, n).unwrap()).collect();
            for n in 0..=4 {
                let id = ExactMatrix::identity(ring, y[n].rows());
                let one_minus_t = id.sub(&t[n]).unwrap();
                ensure(y[n].mul(&y[n]).unwrap() == id, || at("y² ≠ 1", n))?;
                ensure(one_minus_t.mul(&nm[n]).unwrap().is_zero(), || at("(1 − t)N ≠ 0", n))?;
                if n >= 1 {
                    let id_below = ExactMatrix::identity(ring, y[n - 1].rows());
                    ensure(b[n].mul(&y[n]).unwrap() == y[n - 1].mul(&b[n]).unwrap(), || at("by ≠ yb", n))?;
                    let lhs = b[n].mul(&one_minus_t).unwrap();
                    let rhs = id_below.sub(&t[n - 1]).unwrap().mul(&bp[n]).unwrap();
                    ensure(lhs == rhs, || at("b(1 − t) ≠ (1 − t)b′", n))?;
                    ensure(bp[n].mul(&nm[n]).unwrap() == nm[n - 1].mul(&b[n]).unwrap(), || at("b′N ≠ Nb", n))?;
                }
                if n >= 2 {
                    ensure(b[n - 1].mul(&b[n]).unwrap().is_zero(), || at("b² ≠ 0", n))?;
                    ensure(bp[n - 1].mul(&bp[n]).unwrap().is_zero(), || at("b′² ≠ 0", n))?;
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} (algebra, ring, degree) cases"))
}

/// Dense matrices with entries in ℚ (as `i128` fractions) or `𝔽_p`, with
/// their own elimination, sharing nothing with the library.
mod oracle {
    use super::Ratio;

    pub type Q = Ratio<i128>;

    #[derive(Clone, Copy)]
    pub enum Field {
        Rationals,
        Mod(i128),
    }

    impl Field {
        fn normalize(self, x: Q) -> Q {
            match self {
                Field::Rationals => x,
                Field::Mod(p) => {
                    assert!(x.is_integer(), "entries are integers");
                    Q::from_integer(x.to_integer().rem_euclid(p))
                }
            }
        }

        fn inverse(self, x: Q) -> Q {
            match self {
                Field::Rationals => x.recip(),
                Field::Mod(p) => {
                    let v = x.to_integer();
                    Q::from_integer((1..p).find(|k| (k * v).rem_euclid(p) == 1).expect("nonzero in a field"))
                }
            }
        }
    }

    pub fn rank(field: Field, rows: &[Vec<i128>]) -> usize {
        let mut m: Vec<Vec<Q>> =
            rows.iter().map(|r| r.iter().map(|&x| field.normalize(Q::from_integer(x))).collect()).collect();
        let cols = m.first().map_or(0, Vec::len);
        let zero = Q::from_integer(0);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| m[i][c] != zero) else { continue };
            m.swap(r, p);
            let inv = field.inverse(m[r][c]);
            for i in 0..m.len() {
                if i != r && m[i][c] != zero {
                    let factor = m[i][c] * inv;
                    let pivot_row = m[r].clone();
                    for (entry, &pivot) in m[i].iter_mut().zip(&pivot_row).skip(c) {
                        *entry = field.normalize(*entry - factor * pivot);
                    }
                }
            }
            r += 1;
        }
        r
    }

    /// Betti numbers of `C_0 ← C_1 ← ⋯ ← C_top` given `d[k]: C_k → C_{k−1}`
    /// as row lists (`d[0]` unused), for degrees `0 … top − 1`.
    pub fn betti(field: Field, dims: &[usize], d: &[Vec<Vec<i128>>]) -> Vec<usize> {
        let ranks: Vec<usize> = (0..dims.len()).map(|k| if k == 0 { 0 } else { rank(field, &d[k]) }).collect();
        (0..dims.len() - 1).map(|k| dims[k] - ranks[k] - ranks[k + 1]).collect()
    }
}

use oracle::Field;

/// Total complex of a bicomplex of one-dimensional spaces `E_{p,q} = k`,
/// from the scalar vertical and horizontal maps.
fn scalar_total(top: usize, vertical: impl Fn(usize, usize) -> i128, horizontal: impl Fn(usize, usize) -> i128) -> (Vec<usize>, Vec<Vec<Vec<i128>>>) {
    let dims: Vec<usize> = (0..=top).map(|k| k + 1).collect();
    let mut d = vec![Vec::new()];
    for k in 1..=top {
        // Rows: E_{p, k−1−p} for p = 0..k−1; columns: E_{p, k−p} for p = 0..k.
        let mut m = vec![vec![0i128; k + 1]; k];
        for p in 0..=k {
            let q = k - p;
            if q >= 1 {
                m[p][p] = vertical(p, q);
            }
            if p >= 1 {
                m[p - 1][p] = horizontal(p, q);
            }
        }
        d.push(m);
    }
    (dims, d)
}

fn sign(negative: bool) -> i128 {
    if negative {
        -1
    } else {
        1
    }
}

/// On `k^{⊗n+1} = k`: `b = Σ_{i≤n} (−1)^i`, `b′ = Σ_{i<n} (−1)^i`, `y = (−1)^{n(n+1)/2}`, `t = (−1)^n`.
fn ground_b(n: usize) -> i128 {
    (0..=n).map(|i| sign(i % 2 == 1)).sum()
}

fn ground_bp(n: usize) -> i128 {
    (0..n).map(|i| sign(i % 2 == 1)).sum()
}

fn ground_y(n: usize) -> i128 {
    sign((n * (n + 1) / 2) % 2 == 1)
}

fn ground_t(n: usize) -> i128 {
    sign(n % 2 == 1)
}

fn ground_oracle(field: Field, theory: &str) -> Vec<usize> {
    let top = 5;
    match theory {
        "hochschild" => {
            let dims = vec![1; top + 1];
            let d: Vec<Vec<Vec<i128>>> = (0..=top).map(|n| vec![vec![if n == 0 { 0 } else { ground_b(n) }]]).collect();
            oracle::betti(field, &dims, &d)
        }
        "reflexive" => {
            let (dims, d) = scalar_total(
                top,
                |p, q| sign(p % 2 == 1) * ground_b(q),
                |p, q| if p % 2 == 1 { 1 - ground_y(q) } else { 1 + ground_y(q) },
            );
            oracle::betti(field, &dims, &d)
        }
        "cyclic" => {
            let (dims, d) = scalar_total(
                top,
                |p, q| if p % 2 == 0 { ground_b(q) } else { -ground_bp(q) },
                |p, q| if p % 2 == 1 { 1 - ground_t(q) } else { (0..=q).map(|i| ground_t(q).pow(i as u32)).sum() },
            );
            oracle::betti(field, &dims, &d)
        }
        _ => unreachable!(),
    }
}

fn ranks(groups: &[HomologyGroup]) -> Vec<usize> {
    assert!(groups.iter().all(|h| h.torsion.is_empty()));
    groups.iter().map(|h| h.free_rank).collect()
}

type GroundCase = (&'static str, Vec<usize>, Vec<usize>, Vec<usize>);

fn ground_ring_homology() -> Outcome {
    let q = Ring::Rationals;
    let f2 = Ring::PrimeField(2);
    let ground_q = builtin("ground", q).unwrap();
    let ground_f2 = builtin("ground", f2).unwrap();
    // (label, expected, library, oracle)
    let cases: [GroundCase; 4] = [
        (
            "HH(Q)",
            vec![1, 0, 0, 0, 0],
            ranks(&hochschild_homology(&ground_q, &ground_q.regular_bimodule(), 4).unwrap()),
            ground_oracle(Field::Rationals, "hochschild"),
        ),
        (
            "HR(Q)",
            vec![1, 0, 0, 0, 0],
            ranks(&reflexive_homology(&ground_q, &ground_q.regular_bimodule(), 4).unwrap()),
            ground_oracle(Field::Rationals, "reflexive"),
        ),
        (
            "HC(Q)",
            vec![1, 0, 1, 0, 1],
            ranks(&cyclic_homology(&ground_q, 4).unwrap()),
            ground_oracle(Field::Rationals, "cyclic"),
        ),
        (
            "HR(F2)",
            vec![1, 1, 1, 1, 1],
            ranks(&reflexive_homology(&ground_f2, &ground_f2.regular_bimodule(), 4).unwrap()),
            ground_oracle(Field::Mod(2), "reflexive"),
        ),
    ];
    for (label, expected, library, oracle) in &cases {
        ensure(library == expected, || format!("{label}: library gives {library:?}, expected {expected:?}"))?;
        ensure(oracle == expected, || format!("{label}: oracle gives {oracle:?}, expected {expected:?}"))?;
    }
    Ok(cases.iter().map(|(label, e, _, _)| format!("{label} = {e:?}")).collect::<Vec<_>>().join(", "))
}

/// `k[x]/x²` with basis `1, x`: `e_i e_j = e_{i+j}` when `i + j ≤ 1`.
fn dual_product(i: usize, j: usize) -> Option<usize> {
    (i + j <= 1).then_some(i + j)
}

/// The Hochschild boundary on `A^{⊗n+1}`, `A = k[x]/x²`, assembled directly:
/// `b(a₀ ⊗ ⋯ ⊗ a_n) = Σ_{i<n} (−1)^i a₀ ⊗ ⋯ ⊗ aᵢa_{i+1} ⊗ ⋯ + (−1)^n a_n a₀ ⊗ a₁ ⊗ ⋯ ⊗ a_{n−1}`.
#[allow(clippy::needless_range_loop)]
fn dual_boundary(n: usize) -> Vec<Vec<i128>> {
    let src = 1usize << (n + 1);
    let tgt = 1usize << n;
    let digits = |code: usize, len: usize| -> Vec<usize> { (0..len).map(|k| (code >> (len - 1 - k)) & 1).collect() };
    let code_of = |w: &[usize]| w.iter().fold(0, |acc, &d| acc * 2 + d);
    let mut m = vec![vec![0i128; src]; tgt];
    for c in 0..src {
        let w = digits(c, n + 1);
        for i in 0..n {
            if let Some(p) = dual_product(w[i], w[i + 1]) {
                let mut v = w[..i].to_vec();
                v.push(p);
                v.extend_from_slice(&w[i + 2..]);
                m[code_of(&v)][c] += sign(i % 2 == 1);
            }
        }
        if let Some(p) = dual_product(w[n], w[0]) {
            let mut v = vec![p];
            v.extend_from_slice(&w[1..n]);
            m[code_of(&v)][c] += sign(n % 2 == 1);
        }
    }
    m
}

fn dual_numbers_oracle() -> Outcome {
    let a: InvolutiveAlgebra = builtin("dual_numbers_minus", Ring::Rationals).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            let mut e = vec![a.ring().zero(); 2];
            if let Some(p) = dual_product(i, j) {
                e[p] = a.ring().one();
            }
            ensure(a.basis_product(i, j) == e.as_slice(), || format!("builtin differs from k[x]/x² at ({i}, {j})"))?;
        }
    }
    let library = ranks(&hochschild_homology(&a, &a.regular_bimodule(), 3).unwrap());
    let top = 4;
    let dims: Vec<usize> = (0..=top).map(|n| 1 << (n + 1)).collect();
    let d: Vec<Vec<Vec<i128>>> = (0..=top).map(|n| if n == 0 { Vec::new() } else { dual_boundary(n) }).collect();
    for n in 2..=top {
        let rows = d[n - 1].len();
        let composite_zero = (0..rows).all(|r| {
            (0..dims[n]).all(|c| (0..dims[n - 1]).map(|k| d[n - 1][r][k] * d[n][k][c]).sum::<i128>() == 0)
        });
        ensure(composite_zero, || format!("oracle b² ≠ 0 in degree {n}"))?;
    }
    let oracle = oracle::betti(Field::Rationals, &dims, &d);
    ensure(library == oracle, || format!("library {library:?} ≠ oracle {oracle:?}"))?;
    Ok(format!("HH_0..3 = {library:?} from both"))
}
