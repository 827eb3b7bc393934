//! Involutive algebras and bimodules given by structure constants.
//!
//! Elements are coefficient vectors in a fixed basis. An algebra carries
//! `mult[i][j]` (the product `eᵢ·eⱼ`), a unit vector and the involution as
//! the list of images `ēᵢ`. Nothing is assumed valid until [`validate`] says
//! so; the builtin catalog is validated in tests.
//!
//! [`validate`]: InvolutiveAlgebra::validate

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::linalg::{LinalgError, Ring, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("expected a coefficient vector of length {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("unknown builtin algebra `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: [&str; 6] =
    ["ground", "group_c2", "dual_numbers_plus", "dual_numbers_minus", "mat2_transpose", "trunc_poly_3"];

/// One violated axiom, with the basis indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomFailure {
    Associativity { i: usize, j: usize, k: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
    InvolutionSquare { i: usize },
    AntiMultiplicative { i: usize, j: usize },
    UnitNotFixed,
    /// `(eᵢ m) e_k ≠ eᵢ (m e_k)` and friends; `m` indexes the module basis.
    BimoduleAssociativity { kind: &'static str, a: usize, m: usize, b: usize },
    BimoduleUnit { side: &'static str, m: usize },
    BimoduleInvolutionSquare { m: usize },
    BimoduleCompatibility { a: usize, m: usize, b: usize },
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomFailure::Associativity { i, j, k } => write!(f, "associativity fails at basis triple ({i}, {j}, {k})"),
            AxiomFailure::LeftUnit { i } => write!(f, "1·e{i} != e{i}"),
            AxiomFailure::RightUnit { i } => write!(f, "e{i}·1 != e{i}"),
            AxiomFailure::InvolutionSquare { i } => write!(f, "involution does not square to the identity on e{i}"),
            AxiomFailure::AntiMultiplicative { i, j } => write!(f, "bar(e{i}·e{j}) != bar(e{j})·bar(e{i})"),
            AxiomFailure::UnitNotFixed => write!(f, "involution moves the unit"),
            AxiomFailure::BimoduleAssociativity { kind, a, m, b } => {
                write!(f, "{kind} associativity fails at (a{a}, m{m}, a{b})")
            }
            AxiomFailure::BimoduleUnit { side, m } => write!(f, "{side} unit does not act trivially on m{m}"),
            AxiomFailure::BimoduleInvolutionSquare { m } => {
                write!(f, "module involution does not square to the identity on m{m}")
            }
            AxiomFailure::BimoduleCompatibility { a, m, b } => {
                write!(f, "bar(a{a}·m{m}·a{b}) != bar(a{b})·bar(m{m})·bar(a{a})")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

type Table = Vec<Vec<Vec<Scalar>>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutiveAlgebra {
    ring: Ring,
    basis: Vec<String>,
    mult: Table,
    unit: Vec<Scalar>,
    involution: Vec<Vec<Scalar>>,
}

fn reduce_vec(ring: Ring, v: Vec<Scalar>, len: usize) -> Result<Vec<Scalar>, AlgebraError> {
    if v.len() != len {
        return Err(AlgebraError::ShapeMismatch { expected: len, got: v.len() });
    }
    v.iter().map(|x| ring.reduce(x).map_err(AlgebraError::from)).collect()
}

fn reduce_table(ring: Ring, t: Table, outer: usize, inner: usize, len: usize) -> Result<Table, AlgebraError> {
    if t.len() != outer {
        return Err(AlgebraError::ShapeMismatch { expected: outer, got: t.len() });
    }
    t.into_iter()
        .map(|row| {
            if row.len() != inner {
                return Err(AlgebraError::ShapeMismatch { expected: inner, got: row.len() });
            }
            row.into_iter().map(|v| reduce_vec(ring, v, len)).collect()
        })
        .collect()
}

/// `Σ xᵢ yⱼ table[i][j]`.
fn bilinear(ring: Ring, table: &Table, x: &[Scalar], y: &[Scalar], len: usize) -> Vec<Scalar> {
    let zero = ring.zero();
    let mut out = vec![ring.zero(); len];
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| **v != zero) {
        for (j, yj) in y.iter().enumerate().filter(|(_, v)| **v != zero) {
            let c = ring.mul(xi, yj);
            for (o, t) in out.iter_mut().zip(&table[i][j]) {
                if *t != zero {
                    *o = ring.add(o, &ring.mul(&c, t));
                }
            }
        }
    }
    out
}

fn linear(ring: Ring, images: &[Vec<Scalar>], x: &[Scalar], len: usize) -> Vec<Scalar> {
    let zero = ring.zero();
    let mut out = vec![ring.zero(); len];
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| **v != zero) {
        for (o, t) in out.iter_mut().zip(&images[i]) {
            *o = ring.add(o, &ring.mul(xi, t));
        }
    }
    out
}

fn basis_vector(ring: Ring, len: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![ring.zero(); len];
    v[i] = ring.one();
    v
}

impl InvolutiveAlgebra {
    /// Shapes are checked and coefficients reduced into `ring`; the axioms
    /// are not checked here.
    pub fn new(
        ring: Ring,
        basis: Vec<String>,
        mult: Table,
        unit: Vec<Scalar>,
        involution: Vec<Vec<Scalar>>,
    ) -> Result<InvolutiveAlgebra, AlgebraError> {
        let d = basis.len();
        let mult = reduce_table(ring, mult, d, d, d)?;
        let unit = reduce_vec(ring, unit, d)?;
        if involution.len() != d {
            return Err(AlgebraError::ShapeMismatch { expected: d, got: involution.len() });
        }
        let involution = involution.into_iter().map(|v| reduce_vec(ring, v, d)).collect::<Result<_, _>>()?;
        Ok(InvolutiveAlgebra { ring, basis, mult, unit, involution })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Coefficients of `eᵢ·eⱼ`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mult[i][j]
    }

    /// Coefficients of `ēᵢ`.
    pub fn involution_image(&self, i: usize) -> &[Scalar] {
        &self.involution[i]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        basis_vector(self.ring, self.dim(), i)
    }

    fn check(&self, x: &[Scalar]) -> Result<(), AlgebraError> {
        if x.len() != self.dim() {
            return Err(AlgebraError::ShapeMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(bilinear(self.ring, &self.mult, x, y, self.dim()))
    }

    pub fn involve(&self, x: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        self.check(x)?;
        Ok(linear(self.ring, &self.involution, x, self.dim()))
    }

    /// Exhaustive check of every axiom on basis tuples.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let e = |i| self.basis_vector(i);
        let mul = |x: &[Scalar], y: &[Scalar]| bilinear(self.ring, &self.mult, x, y, d);
        let bar = |x: &[Scalar]| linear(self.ring, &self.involution, x, d);
        let mut failures = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let ij = mul(&e(i), &e(j));
                for k in 0..d {
                    if mul(&ij, &e(k)) != mul(&e(i), &mul(&e(j), &e(k))) {
                        failures.push(AxiomFailure::Associativity { i, j, k });
                    }
                }
                if bar(&ij) != mul(&bar(&e(j)), &bar(&e(i))) {
                    failures.push(AxiomFailure::AntiMultiplicative { i, j });
                }
            }
        }
        for i in 0..d {
            if mul(&self.unit, &e(i)) != e(i) {
                failures.push(AxiomFailure::LeftUnit { i });
            }
            if mul(&e(i), &self.unit) != e(i) {
                failures.push(AxiomFailure::RightUnit { i });
            }
            if bar(&bar(&e(i))) != e(i) {
                failures.push(AxiomFailure::InvolutionSquare { i });
            }
        }
        if bar(&self.unit) != self.unit {
            failures.push(AxiomFailure::UnitNotFixed);
        }
        ValidationReport { failures }
    }

    /// `M = A` with `m̄` the algebra involution.
    pub fn regular_bimodule(&self) -> InvolutiveBimodule {
        let d = self.dim();
        let right = (0..d).map(|m| (0..d).map(|a| self.mult[m][a].clone()).collect()).collect();
        InvolutiveBimodule {
            ring: self.ring,
            dim: d,
            left: self.mult.clone(),
            right,
            involution: self.involution.clone(),
        }
    }
}

/// A bimodule over an [`InvolutiveAlgebra`], kept separate from it: methods
/// that need the algebra take it as an argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutiveBimodule {
    ring: Ring,
    dim: usize,
    /// `left[a][m]` = coefficients of `e_a · m_m`.
    left: Table,
    /// `right[m][a]` = coefficients of `m_m · e_a`.
    right: Table,
    involution: Vec<Vec<Scalar>>,
}

impl InvolutiveBimodule {
    pub fn new(
        algebra: &InvolutiveAlgebra,
        dim: usize,
        left: Table,
        right: Table,
        involution: Vec<Vec<Scalar>>,
    ) -> Result<InvolutiveBimodule, AlgebraError> {
        let ring = algebra.ring();
        let left = reduce_table(ring, left, algebra.dim(), dim, dim)?;
        let right = reduce_table(ring, right, dim, algebra.dim(), dim)?;
        if involution.len() != dim {
            return Err(AlgebraError::ShapeMismatch { expected: dim, got: involution.len() });
        }
        let involution = involution.into_iter().map(|v| reduce_vec(ring, v, dim)).collect::<Result<_, _>>()?;
        Ok(InvolutiveBimodule { ring, dim, left, right, involution })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficients of `e_a · m_m`.
    pub fn left_basis(&self, a: usize, m: usize) -> &[Scalar] {
        &self.left[a][m]
    }

    /// Coefficients of `m_m · e_a`.
    pub fn right_basis(&self, m: usize, a: usize) -> &[Scalar] {
        &self.right[m][a]
    }

    pub fn involution_image(&self, m: usize) -> &[Scalar] {
        &self.involution[m]
    }

    pub fn act_left(&self, a: &[Scalar], m: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        if m.len() != self.dim {
            return Err(AlgebraError::ShapeMismatch { expected: self.dim, got: m.len() });
        }
        if a.len() != self.left.len() {
            return Err(AlgebraError::ShapeMismatch { expected: self.left.len(), got: a.len() });
        }
        Ok(bilinear(self.ring, &self.left, a, m, self.dim))
    }

    pub fn act_right(&self, m: &[Scalar], a: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        if m.len() != self.dim {
            return Err(AlgebraError::ShapeMismatch { expected: self.dim, got: m.len() });
        }
        if a.len() != self.left.len() {
            return Err(AlgebraError::ShapeMismatch { expected: self.left.len(), got: a.len() });
        }
        Ok(bilinear(self.ring, &self.right, m, a, self.dim))
    }

    pub fn involve(&self, m: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        if m.len() != self.dim {
            return Err(AlgebraError::ShapeMismatch { expected: self.dim, got: m.len() });
        }
        Ok(linear(self.ring, &self.involution, m, self.dim))
    }

    pub fn validate(&self, algebra: &InvolutiveAlgebra) -> ValidationReport {
        let (d, r) = (algebra.dim(), self.dim);
        let ring = self.ring;
        let a = |i| basis_vector(ring, d, i);
        let m = |i| basis_vector(ring, r, i);
        let amul = |x: &[Scalar], y: &[Scalar]| bilinear(ring, &algebra.mult, x, y, d);
        let lact = |x: &[Scalar], y: &[Scalar]| bilinear(ring, &self.left, x, y, r);
        let ract = |y: &[Scalar], x: &[Scalar]| bilinear(ring, &self.right, y, x, r);
        let abar = |x: &[Scalar]| linear(ring, &algebra.involution, x, d);
        let mbar = |y: &[Scalar]| linear(ring, &self.involution, y, r);
        let mut failures = Vec::new();
        for x in 0..d {
            for mi in 0..r {
                for y in 0..d {
                    if lact(&amul(&a(x), &a(y)), &m(mi)) != lact(&a(x), &lact(&a(y), &m(mi))) {
                        failures.push(AxiomFailure::BimoduleAssociativity { kind: "left", a: x, m: mi, b: y });
                    }
                    if ract(&m(mi), &amul(&a(x), &a(y))) != ract(&ract(&m(mi), &a(x)), &a(y)) {
                        failures.push(AxiomFailure::BimoduleAssociativity { kind: "right", a: x, m: mi, b: y });
                    }
                    let amb = ract(&lact(&a(x), &m(mi)), &a(y));
                    if amb != lact(&a(x), &ract(&m(mi), &a(y))) {
                        failures.push(AxiomFailure::BimoduleAssociativity { kind: "middle", a: x, m: mi, b: y });
                    }
                    if mbar(&amb) != ract(&lact(&abar(&a(y)), &mbar(&m(mi))), &abar(&a(x))) {
                        failures.push(AxiomFailure::BimoduleCompatibility { a: x, m: mi, b: y });
                    }
                }
            }
        }
        for mi in 0..r {
            if lact(algebra.unit(), &m(mi)) != m(mi) {
                failures.push(AxiomFailure::BimoduleUnit { side: "left", m: mi });
            }
            if ract(&m(mi), algebra.unit()) != m(mi) {
                failures.push(AxiomFailure::BimoduleUnit { side: "right", m: mi });
            }
            if mbar(&mbar(&m(mi))) != m(mi) {
                failures.push(AxiomFailure::BimoduleInvolutionSquare { m: mi });
            }
        }
        ValidationReport { failures }
    }
}

/// The builtin catalog; see [`BUILTIN_NAMES`].
///
/// * `ground`: `k` itself.
/// * `group_c2`: `k[C₂]` on `1, g`, with `ḡ = g⁻¹ = g`.
/// * `dual_numbers_plus` / `dual_numbers_minus`: `k[x]/x²` with `x̄ = ±x`.
/// * `mat2_transpose`: `M₂(k)` on `E11, E12, E21, E22`, involution the transpose.
/// * `trunc_poly_3`: `k[x]/x³` with `x̄ = x`.
pub fn builtin(name: &str, ring: Ring) -> Result<InvolutiveAlgebra, AlgebraError> {
    let int = |v: &[i64]| -> Vec<Scalar> { v.iter().map(|&x| ring.from_i64(x)).collect() };
    let names = |v: &[&str]| -> Vec<String> { v.iter().map(|s| s.to_string()).collect() };
    match name {
        "ground" => InvolutiveAlgebra::new(ring, names(&["1"]), vec![vec![int(&[1])]], int(&[1]), vec![int(&[1])]),
        "group_c2" => InvolutiveAlgebra::new(
            ring,
            names(&["1", "g"]),
            vec![vec![int(&[1, 0]), int(&[0, 1])], vec![int(&[0, 1]), int(&[1, 0])]],
            int(&[1, 0]),
            vec![int(&[1, 0]), int(&[0, 1])],
        ),
        "dual_numbers_plus" | "dual_numbers_minus" => {
            let sign = if name == "dual_numbers_plus" { 1 } else { -1 };
            InvolutiveAlgebra::new(
                ring,
                names(&["1", "x"]),
                vec![vec![int(&[1, 0]), int(&[0, 1])], vec![int(&[0, 1]), int(&[0, 0])]],
                int(&[1, 0]),
                vec![int(&[1, 0]), int(&[0, sign])],
            )
        }
        "mat2_transpose" => {
            // E_{ab} at index 2a + b.
            let mult = (0..4)
                .map(|p| {
                    (0..4)
                        .map(|q| {
                            let mut v = vec![0i64; 4];
                            if p % 2 == q / 2 {
                                v[2 * (p / 2) + q % 2] = 1;
                            }
                            int(&v)
                        })
                        .collect()
                })
                .collect();
            let involution = (0..4)
                .map(|p| {
                    let mut v = vec![0i64; 4];
                    v[2 * (p % 2) + p / 2] = 1;
                    int(&v)
                })
                .collect();
            InvolutiveAlgebra::new(ring, names(&["E11", "E12", "E21", "E22"]), mult, int(&[1, 0, 0, 1]), involution)
        }
        "trunc_poly_3" => {
            let mult = (0..3)
                .map(|p| {
                    (0..3)
                        .map(|q| {
                            let mut v = vec![0i64; 3];
                            if p + q < 3 {
                                v[p + q] = 1;
                            }
                            int(&v)
                        })
                        .collect()
                })
                .collect();
            InvolutiveAlgebra::new(
                ring,
                names(&["1", "x", "x2"]),
                mult,
                int(&[1, 0, 0]),
                vec![int(&[1, 0, 0]), int(&[0, 1, 0]), int(&[0, 0, 1])],
            )
        }
        other => Err(AlgebraError::UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rings() -> [Ring; 4] {
        [Ring::Rationals, Ring::Integers, Ring::PrimeField(2), Ring::PrimeField(3)]
    }

    #[test]
    fn builtins_validate() {
        for ring in rings() {
            for name in BUILTIN_NAMES {
                let a = builtin(name, ring).unwrap();
                assert!(a.validate().is_valid(), "{name} over {ring}: {:?}", a.validate());
                let m = a.regular_bimodule();
                assert!(m.validate(&a).is_valid(), "{name} over {ring}");
            }
        }
        assert_eq!(builtin("octonions", Ring::Rationals), Err(AlgebraError::UnknownName("octonions".into())));
    }

    #[test]
    fn ground_is_trivial() {
        let a = builtin("ground", Ring::Rationals).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.basis_product(0, 0), &[Ring::Rationals.one()]);
    }

    #[test]
    fn corrupted_table_reports_triple() {
        let q = Ring::Rationals;
        let good = builtin("dual_numbers_plus", q).unwrap();
        let mut mult: Table = (0..2).map(|i| (0..2).map(|j| good.basis_product(i, j).to_vec()).collect()).collect();
        mult[1][1] = vec![q.one(), q.zero()];
        mult[0][1] = vec![q.zero(), q.from_i64(2)];
        let bad = InvolutiveAlgebra::new(
            q,
            good.basis_names().to_vec(),
            mult,
            good.unit().to_vec(),
            (0..2).map(|i| good.involution_image(i).to_vec()).collect(),
        )
        .unwrap();
        let report = bad.validate();
        assert!(report.failures.iter().any(|f| matches!(f, AxiomFailure::Associativity { .. })));
    }

    #[test]
    fn non_involution_detected() {
        let q = Ring::Rationals;
        let a = builtin("dual_numbers_plus", q).unwrap();
        let broken = InvolutiveAlgebra::new(
            q,
            a.basis_names().to_vec(),
            (0..2).map(|i| (0..2).map(|j| a.basis_product(i, j).to_vec()).collect()).collect(),
            a.unit().to_vec(),
            vec![vec![q.one(), q.zero()], vec![q.zero(), q.from_i64(2)]],
        )
        .unwrap();
        assert!(broken.validate().failures.contains(&AxiomFailure::InvolutionSquare { i: 1 }));
    }

    #[test]
    fn transpose_and_dual_examples() {
        let q = Ring::Rationals;
        let minus = builtin("dual_numbers_minus", q).unwrap();
        assert_eq!(minus.involve(&minus.basis_vector(1)).unwrap(), vec![q.zero(), q.from_i64(-1)]);
        let c2 = builtin("group_c2", q).unwrap();
        let p = vec![q.one(), q.one()];
        let m = vec![q.one(), q.from_i64(-1)];
        assert_eq!(c2.multiply(&p, &m).unwrap(), vec![q.zero(), q.zero()]);
        assert_eq!(c2.multiply(c2.unit(), &m).unwrap(), m);
        assert_eq!(c2.multiply(&p, &[q.one()]), Err(AlgebraError::ShapeMismatch { expected: 2, got: 1 }));
        let mat = builtin("mat2_transpose", q).unwrap();
        // E12 E21 = E11; transposed: E12 E21 = E11 again but in reversed order.
        assert_eq!(mat.basis_product(1, 2), &mat.basis_vector(0)[..]);
        assert_eq!(mat.involve(&mat.basis_vector(1)).unwrap(), mat.basis_vector(2));
    }

    #[test]
    fn coefficients_reduced_into_ring() {
        let f3 = Ring::PrimeField(3);
        let a = builtin("dual_numbers_minus", f3).unwrap();
        assert_eq!(a.involution_image(1), &[f3.zero(), f3.from_i64(2)]);
    }

    fn arb_vec(d: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-3i64..=3, d)
    }

    proptest! {
        #[test]
        fn involution_reverses_products(idx in 0usize..6, ri in 0usize..4, x in arb_vec(4), y in arb_vec(4), z in arb_vec(4)) {
            let ring = rings()[ri];
            let a = builtin(BUILTIN_NAMES[idx], ring).unwrap();
            let d = a.dim();
            let lift = |v: &[i64]| v[..d].iter().map(|&c| ring.from_i64(c)).collect::<Vec<_>>();
            let (x, y, z) = (lift(&x), lift(&y), lift(&z));
            let xy = a.multiply(&x, &y).unwrap();
            prop_assert_eq!(a.involve(&xy).unwrap(), a.multiply(&a.involve(&y).unwrap(), &a.involve(&x).unwrap()).unwrap());
            prop_assert_eq!(a.involve(&a.involve(&x).unwrap()).unwrap(), x.clone());
            prop_assert_eq!(a.multiply(&xy, &z).unwrap(), a.multiply(&x, &a.multiply(&y, &z).unwrap()).unwrap());
        }
    }
}
