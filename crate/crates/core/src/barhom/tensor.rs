use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::invalg::{InvolutiveAlgebra, InvolutiveBimodule};
use crate::linalg::{Ring, Scalar};
use crate::ncsets::NCMorphism;

use super::BarError;

/// Mixed-radix numbering of the basis tensors of `M ⊗ A^{⊗n}`; slot 0 is the
/// most significant digit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorBasis {
    pub module_rank: usize,
    pub algebra_rank: usize,
    pub degree: usize,
}

impl TensorBasis {
    pub fn new(module_rank: usize, algebra_rank: usize, degree: usize) -> TensorBasis {
        TensorBasis { module_rank, algebra_rank, degree }
    }

    pub fn len(&self) -> usize {
        self.module_rank * self.algebra_rank.pow(self.degree as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encode(&self, idx: &[usize]) -> usize {
        idx[1..].iter().fold(idx[0], |acc, &i| acc * self.algebra_rank + i)
    }

    pub fn decode(&self, mut code: usize) -> Vec<usize> {
        let mut idx = vec![0; self.degree + 1];
        for slot in (1..=self.degree).rev() {
            idx[slot] = code % self.algebra_rank;
            code /= self.algebra_rank;
        }
        idx[0] = code;
        idx
    }
}

/// A finite linear combination of basis tensors `e_{i₀} ⊗ e_{i₁} ⊗ ⋯ ⊗ e_{i_n}`
/// of `M ⊗ A^{⊗n}` (with `M = A` for the bar construction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    ring: Ring,
    basis: TensorBasis,
    coeffs: BTreeMap<Vec<usize>, Scalar>,
}

impl TensorElement {
    pub fn zero(ring: Ring, basis: TensorBasis) -> TensorElement {
        TensorElement { ring, basis, coeffs: BTreeMap::new() }
    }

    pub fn basis_tensor(ring: Ring, basis: TensorBasis, idx: Vec<usize>) -> Result<TensorElement, BarError> {
        let mut x = TensorElement::zero(ring, basis);
        x.add_term(idx, &ring.one())?;
        Ok(x)
    }

    /// Adds `c · e_idx`, checking index bounds.
    pub fn add_term(&mut self, idx: Vec<usize>, c: &Scalar) -> Result<(), BarError> {
        if idx.len() != self.basis.degree + 1 {
            return Err(BarError::SizeMismatch { expected: self.basis.degree + 1, got: idx.len() });
        }
        for (slot, &i) in idx.iter().enumerate() {
            let bound = if slot == 0 { self.basis.module_rank } else { self.basis.algebra_rank };
            if i >= bound {
                return Err(BarError::BasisIndex { slot, index: i });
            }
        }
        let c = self.ring.reduce(c)?;
        self.add_unchecked(idx, &c);
        Ok(())
    }

    fn add_unchecked(&mut self, idx: Vec<usize>, c: &Scalar) {
        let ring = self.ring;
        let zero = ring.zero();
        if *c == zero {
            return;
        }
        let slot = self.coeffs.entry(idx).or_insert_with(|| ring.zero());
        *slot = ring.add(slot, c);
        if *slot == zero {
            self.coeffs.retain(|_, v| *v != zero);
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn basis(&self) -> TensorBasis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.basis.degree
    }

    pub fn coefficients(&self) -> &BTreeMap<Vec<usize>, Scalar> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement, BarError> {
        if other.basis != self.basis {
            return Err(BarError::SizeMismatch { expected: self.basis.len(), got: other.basis.len() });
        }
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_unchecked(idx.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero(self.ring, self.basis);
        for (idx, c) in &self.coeffs {
            out.add_unchecked(idx.clone(), &self.ring.mul(c, s));
        }
        out
    }

    /// Coordinates in the [`TensorBasis`] numbering.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut v = vec![self.ring.zero(); self.basis.len()];
        for (idx, c) in &self.coeffs {
            v[self.basis.encode(idx)] = c.clone();
        }
        v
    }

    /// Add `c · v₀ ⊗ v₁ ⊗ ⋯` for coefficient vectors `vᵢ`.
    fn add_outer(&mut self, slots: &[Vec<Scalar>], c: &Scalar) {
        let ring = self.ring;
        let zero = ring.zero();
        let supports: Vec<Vec<(usize, &Scalar)>> =
            slots.iter().map(|v| v.iter().enumerate().filter(|(_, x)| **x != zero).collect()).collect();
        if supports.iter().any(Vec::is_empty) {
            return;
        }
        let mut choice = vec![0usize; slots.len()];
        loop {
            let mut coeff = c.clone();
            let mut idx = Vec::with_capacity(slots.len());
            for (s, &k) in supports.iter().zip(&choice) {
                coeff = ring.mul(&coeff, s[k].1);
                idx.push(s[k].0);
            }
            self.add_unchecked(idx, &coeff);
            let mut pos = 0;
            loop {
                if pos == choice.len() {
                    return;
                }
                choice[pos] += 1;
                if choice[pos] < supports[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }
}

fn expect_shape(x: &TensorElement, basis: TensorBasis) -> Result<(), BarError> {
    if x.basis != basis {
        return Err(BarError::SizeMismatch { expected: basis.len(), got: x.basis.len() });
    }
    Ok(())
}

fn expect_ring(x: &TensorElement, ring: Ring) -> Result<(), BarError> {
    if x.ring != ring {
        return Err(crate::linalg::LinalgError::RingMismatch(ring, x.ring).into());
    }
    Ok(())
}

/// `e_i` or `ē_i`.
fn algebra_factor(a: &InvolutiveAlgebra, i: usize, involve: bool) -> Vec<Scalar> {
    if involve {
        a.involution_image(i).to_vec()
    } else {
        a.basis_vector(i)
    }
}

fn ordered_product(a: &InvolutiveAlgebra, idx: &[usize], list: &[(usize, bool)]) -> Vec<Scalar> {
    let mut acc = a.unit().to_vec();
    for &(j, z) in list {
        acc = a.multiply(&acc, &algebra_factor(a, idx[j], z)).expect("dimensions agree");
    }
    acc
}

/// `H_A(f)`: slot `i` of the image is the product, in the order of `f⁻¹(i)`,
/// of the factors `a_j` (involuted when `j` carries the label `t`); an empty
/// preimage contributes `1_A`.
pub fn bar_apply(a: &InvolutiveAlgebra, f: &NCMorphism, x: &TensorElement) -> Result<TensorElement, BarError> {
    let d = a.dim();
    expect_ring(x, a.ring())?;
    expect_shape(x, TensorBasis::new(d, d, f.source()))?;
    let mut out = TensorElement::zero(a.ring(), TensorBasis::new(d, d, f.target()));
    for (idx, c) in &x.coeffs {
        let slots: Vec<Vec<Scalar>> = f.preimages().iter().map(|p| ordered_product(a, idx, p.entries())).collect();
        out.add_outer(&slots, c);
    }
    Ok(out)
}

/// `R(A, M)(f)` for a based `f`: as [`bar_apply`], except that slot 0 is the
/// ordered product around the module factor `m = a₀` (replaced by `m̄` when it
/// carries the label `t`), using the bimodule actions on either side of it.
pub fn based_bar_apply(
    a: &InvolutiveAlgebra,
    m: &InvolutiveBimodule,
    f: &NCMorphism,
    x: &TensorElement,
) -> Result<TensorElement, BarError> {
    if !f.is_based() {
        return Err(BarError::NotBased);
    }
    expect_ring(x, a.ring())?;
    expect_shape(x, TensorBasis::new(m.dim(), a.dim(), f.source()))?;
    let mut out = TensorElement::zero(a.ring(), TensorBasis::new(m.dim(), a.dim(), f.target()));
    let zero_list = f.preimage(0).entries();
    let split = zero_list.iter().position(|&(j, _)| j == 0).expect("based");
    for (idx, c) in &x.coeffs {
        let (j0, z0) = zero_list[split];
        debug_assert_eq!(j0, 0);
        let module = if z0 { m.involution_image(idx[0]).to_vec() } else { basis(a.ring(), m.dim(), idx[0]) };
        let left = ordered_product(a, idx, &zero_list[..split]);
        let right = ordered_product(a, idx, &zero_list[split + 1..]);
        let slot0 = m.act_left(&left, &m.act_right(&module, &right)?)?;
        let mut slots = vec![slot0];
        slots.extend(f.preimages()[1..].iter().map(|p| ordered_product(a, idx, p.entries())));
        out.add_outer(&slots, c);
    }
    Ok(out)
}

fn basis(ring: Ring, len: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![ring.zero(); len];
    v[i] = ring.one();
    v
}

/// The Loday face
///
/// ```text
/// ∂₀(m ⊗ a₁ ⊗ ⋯ ⊗ a_n) = m a₁ ⊗ a₂ ⊗ ⋯ ⊗ a_n
/// ∂ᵢ(m ⊗ a₁ ⊗ ⋯ ⊗ a_n) = m ⊗ ⋯ ⊗ aᵢ a_{i+1} ⊗ ⋯ ⊗ a_n      (0 < i < n)
/// ∂_n(m ⊗ a₁ ⊗ ⋯ ⊗ a_n) = a_n m ⊗ a₁ ⊗ ⋯ ⊗ a_{n−1}
/// ```
pub fn loday_face(
    a: &InvolutiveAlgebra,
    m: &InvolutiveBimodule,
    i: usize,
    x: &TensorElement,
) -> Result<TensorElement, BarError> {
    let n = x.degree();
    if n == 0 || i > n {
        return Err(BarError::IndexOutOfRange { kind: "face", index: i, degree: n });
    }
    expect_ring(x, a.ring())?;
    expect_shape(x, TensorBasis::new(m.dim(), a.dim(), n))?;
    let ring = a.ring();
    let mut out = TensorElement::zero(ring, TensorBasis::new(m.dim(), a.dim(), n - 1));
    for (idx, c) in &x.coeffs {
        let mut slots: Vec<Vec<Scalar>> = Vec::with_capacity(n);
        if i == 0 {
            slots.push(m.act_right(&basis(ring, m.dim(), idx[0]), &a.basis_vector(idx[1]))?);
            slots.extend(idx[2..].iter().map(|&k| a.basis_vector(k)));
        } else if i < n {
            slots.push(basis(ring, m.dim(), idx[0]));
            slots.extend(idx[1..i].iter().map(|&k| a.basis_vector(k)));
            slots.push(a.basis_product(idx[i], idx[i + 1]).to_vec());
            slots.extend(idx[i + 2..].iter().map(|&k| a.basis_vector(k)));
        } else {
            slots.push(m.act_left(&a.basis_vector(idx[n]), &basis(ring, m.dim(), idx[0]))?);
            slots.extend(idx[1..n].iter().map(|&k| a.basis_vector(k)));
        }
        out.add_outer(&slots, c);
    }
    Ok(out)
}

/// `s_j(m ⊗ a₁ ⊗ ⋯ ⊗ a_n) = m ⊗ ⋯ ⊗ a_j ⊗ 1 ⊗ a_{j+1} ⊗ ⋯ ⊗ a_n`.
pub fn loday_degeneracy(
    a: &InvolutiveAlgebra,
    m: &InvolutiveBimodule,
    j: usize,
    x: &TensorElement,
) -> Result<TensorElement, BarError> {
    let n = x.degree();
    if j > n {
        return Err(BarError::IndexOutOfRange { kind: "degeneracy", index: j, degree: n });
    }
    expect_ring(x, a.ring())?;
    expect_shape(x, TensorBasis::new(m.dim(), a.dim(), n))?;
    let ring = a.ring();
    let mut out = TensorElement::zero(ring, TensorBasis::new(m.dim(), a.dim(), n + 1));
    for (idx, c) in &x.coeffs {
        let mut slots = vec![basis(ring, m.dim(), idx[0])];
        slots.extend(idx[1..=j].iter().map(|&k| a.basis_vector(k)));
        slots.push(a.unit().to_vec());
        slots.extend(idx[j + 1..].iter().map(|&k| a.basis_vector(k)));
        out.add_outer(&slots, c);
    }
    Ok(out)
}

/// The unsigned reflexive action `r(m ⊗ a₁ ⊗ ⋯ ⊗ a_n) = m̄ ⊗ ā_n ⊗ ⋯ ⊗ ā₁`.
pub fn reflexive_action(
    a: &InvolutiveAlgebra,
    m: &InvolutiveBimodule,
    x: &TensorElement,
) -> Result<TensorElement, BarError> {
    let n = x.degree();
    expect_ring(x, a.ring())?;
    expect_shape(x, TensorBasis::new(m.dim(), a.dim(), n))?;
    let mut out = TensorElement::zero(a.ring(), x.basis);
    for (idx, c) in &x.coeffs {
        let mut slots = vec![m.involution_image(idx[0]).to_vec()];
        slots.extend(idx[1..].iter().rev().map(|&k| a.involution_image(k).to_vec()));
        out.add_outer(&slots, c);
    }
    Ok(out)
}

/// The unsigned rotation `τ(a₀ ⊗ ⋯ ⊗ a_n) = a_n ⊗ a₀ ⊗ ⋯ ⊗ a_{n−1}`.
pub fn rotation(a: &InvolutiveAlgebra, x: &TensorElement) -> Result<TensorElement, BarError> {
    let n = x.degree();
    expect_ring(x, a.ring())?;
    expect_shape(x, TensorBasis::new(a.dim(), a.dim(), n))?;
    let mut out = TensorElement::zero(a.ring(), x.basis);
    for (idx, c) in &x.coeffs {
        let mut rotated = Vec::with_capacity(n + 1);
        rotated.push(idx[n]);
        rotated.extend_from_slice(&idx[..n]);
        out.add_unchecked(rotated, c);
    }
    Ok(out)
}
