use alloc::vec::Vec;

use crate::invalg::{InvolutiveAlgebra, InvolutiveBimodule};
use crate::linalg::{rank, ExactMatrix, HomologyGroup, Ring};

use super::complex::{total_complex, ChainComplex};
use super::tensor::{loday_face, reflexive_action, rotation, TensorBasis, TensorElement};
use super::BarError;

/// Matrix of a linear map on tensors, column `c` being the image of basis
/// tensor number `c` of `src`.
fn operator_matrix(
    ring: Ring,
    src: TensorBasis,
    tgt: TensorBasis,
    op: impl Fn(&TensorElement) -> Result<TensorElement, BarError>,
) -> Result<ExactMatrix, BarError> {
    let mut triplets = Vec::new();
    for c in 0..src.len() {
        let x = TensorElement::basis_tensor(ring, src, src.decode(c))?;
        for (idx, v) in op(&x)?.coefficients() {
            triplets.push((tgt.encode(idx), c, v.clone()));
        }
    }
    Ok(ExactMatrix::from_triplets(ring, tgt.len(), src.len(), triplets)?)
}

fn sign(ring: Ring, negative: bool) -> crate::linalg::Scalar {
    ring.from_i64(if negative { -1 } else { 1 })
}

/// Alternating sum of faces `Σ_{i ∈ faces} (−1)^i ∂ᵢ` on degree `n`.
fn face_sum(
    a: &InvolutiveAlgebra,
    m: &InvolutiveBimodule,
    n: usize,
    faces: core::ops::Range<usize>,
) -> Result<ExactMatrix, BarError> {
    let ring = a.ring();
    let src = TensorBasis::new(m.dim(), a.dim(), n);
    if n == 0 {
        return Ok(ExactMatrix::zeros(ring, 0, src.len()));
    }
    let tgt = TensorBasis::new(m.dim(), a.dim(), n - 1);
    operator_matrix(ring, src, tgt, |x| {
        let mut acc = TensorElement::zero(ring, tgt);
        for i in faces.clone() {
            acc = acc.add(&loday_face(a, m, i, x)?.scale(&sign(ring, i % 2 == 1)))?;
        }
        Ok(acc)
    })
}

/// The Hochschild boundary `b = Σ_{i=0}^{n} (−1)^i ∂ᵢ : C_n → C_{n−1}`
/// (the empty map out of degree 0).
pub fn hochschild_boundary(a: &InvolutiveAlgebra, m: &InvolutiveBimodule, n: usize) -> Result<ExactMatrix, BarError> {
    face_sum(a, m, n, 0..n + 1)
}

/// `b′ = Σ_{i=0}^{n−1} (−1)^i ∂ᵢ` on `A^{⊗n+1}`.
pub fn bar_prime_boundary(a: &InvolutiveAlgebra, n: usize) -> Result<ExactMatrix, BarError> {
    face_sum(a, &a.regular_bimodule(), n, 0..n)
}

/// The unsigned reversal `r` on degree `n`.
pub fn reflexive_action_matrix(
    a: &InvolutiveAlgebra,
    m: &InvolutiveBimodule,
    n: usize,
) -> Result<ExactMatrix, BarError> {
    let b = TensorBasis::new(m.dim(), a.dim(), n);
    operator_matrix(a.ring(), b, b, |x| reflexive_action(a, m, x))
}

/// `y_n = (−1)^{n(n+1)/2} r`.
pub fn reflexive_operator(a: &InvolutiveAlgebra, m: &InvolutiveBimodule, n: usize) -> Result<ExactMatrix, BarError> {
    Ok(reflexive_action_matrix(a, m, n)?.scale(&sign(a.ring(), n % 4 == 1 || n % 4 == 2)))
}

/// The unsigned rotation `τ` on `A^{⊗n+1}`.
pub fn rotation_matrix(a: &InvolutiveAlgebra, n: usize) -> Result<ExactMatrix, BarError> {
    let b = TensorBasis::new(a.dim(), a.dim(), n);
    operator_matrix(a.ring(), b, b, |x| rotation(a, x))
}

/// `t_n = (−1)^n τ`.
pub fn cyclic_operator(a: &InvolutiveAlgebra, n: usize) -> Result<ExactMatrix, BarError> {
    Ok(rotation_matrix(a, n)?.scale(&sign(a.ring(), n % 2 == 1)))
}

/// `N = 1 + t + ⋯ + tⁿ`.
pub fn norm_operator(a: &InvolutiveAlgebra, n: usize) -> Result<ExactMatrix, BarError> {
    let t = cyclic_operator(a, n)?;
    let mut power = ExactMatrix::identity(a.ring(), t.rows());
    let mut sum = power.clone();
    for _ in 0..n {
        power = t.mul(&power)?;
        sum = sum.add(&power)?;
    }
    Ok(sum)
}

/// The involution of column `p` of the cyclic bicomplex in degree `n`:
/// `ε_p y` for even `p`, `ε_p y t` for odd `p`, with
/// `ε_p = (−1)^{⌊(p+1)/2⌋}`.
pub fn dihedral_operator(a: &InvolutiveAlgebra, p: usize, n: usize) -> Result<ExactMatrix, BarError> {
    let y = reflexive_operator(a, &a.regular_bimodule(), n)?;
    let base = if p.is_multiple_of(2) { y } else { y.mul(&cyclic_operator(a, n)?)? };
    Ok(base.scale(&sign(a.ring(), p.div_ceil(2) % 2 == 1)))
}

/// The Hochschild complex `M ⊗ A^{⊗•}` in degrees `0 … top`.
pub fn hochschild_complex(
    a: &InvolutiveAlgebra,
    m: &InvolutiveBimodule,
    top: usize,
) -> Result<ChainComplex, BarError> {
    let ranks = (0..=top).map(|n| TensorBasis::new(m.dim(), a.dim(), n).len()).collect();
    let differentials = (1..=top).map(|n| hochschild_boundary(a, m, n)).collect::<Result<_, _>>()?;
    ChainComplex::new(a.ring(), ranks, differentials)
}

/// `HH_0 … HH_last`.
pub fn hochschild_homology(
    a: &InvolutiveAlgebra,
    m: &InvolutiveBimodule,
    last: usize,
) -> Result<Vec<HomologyGroup>, BarError> {
    hochschild_complex(a, m, last + 1)?.homology_up_to(last)
}

/// Total complex of `E_{p,q} = C_q(A, M)` with vertical `(−1)^p b` and
/// horizontal `1 − y` out of odd columns, `1 + y` out of even ones: the
/// `C₂`-hyperhomology of the Hochschild complex.
pub fn reflexive_bicomplex(
    a: &InvolutiveAlgebra,
    m: &InvolutiveBimodule,
    top: usize,
) -> Result<ChainComplex, BarError> {
    let ring = a.ring();
    let b: Vec<ExactMatrix> = (0..=top).map(|q| hochschild_boundary(a, m, q)).collect::<Result<_, _>>()?;
    let y: Vec<ExactMatrix> = (0..=top).map(|q| reflexive_operator(a, m, q)).collect::<Result<_, _>>()?;
    let minus_b: Vec<ExactMatrix> = b.iter().map(|d| d.scale(&ring.from_i64(-1))).collect();
    let one_minus: Vec<ExactMatrix> =
        y.iter().map(|yq| ExactMatrix::identity(ring, yq.rows()).sub(yq)).collect::<Result<_, _>>()?;
    let one_plus: Vec<ExactMatrix> =
        y.iter().map(|yq| ExactMatrix::identity(ring, yq.rows()).add(yq)).collect::<Result<_, _>>()?;
    total_complex(
        ring,
        top,
        |_, q| TensorBasis::new(m.dim(), a.dim(), q).len(),
        |p, q| if p % 2 == 0 { b[q].clone() } else { minus_b[q].clone() },
        |p, q| if p % 2 == 1 { one_minus[q].clone() } else { one_plus[q].clone() },
    )
}

/// `HR_0 … HR_last` from [`reflexive_bicomplex`].
pub fn reflexive_homology(
    a: &InvolutiveAlgebra,
    m: &InvolutiveBimodule,
    last: usize,
) -> Result<Vec<HomologyGroup>, BarError> {
    reflexive_bicomplex(a, m, last + 1)?.homology_up_to(last)
}

/// The cyclic bicomplex: column `p` is `(A^{⊗•+1}, b)` for even `p` and
/// `(A^{⊗•+1}, −b′)` for odd `p`; horizontally `1 − t` leaves odd columns and
/// `N` leaves even ones.
pub fn cyclic_bicomplex(a: &InvolutiveAlgebra, top: usize) -> Result<ChainComplex, BarError> {
    let ring = a.ring();
    let m = a.regular_bimodule();
    let b: Vec<ExactMatrix> = (0..=top).map(|q| hochschild_boundary(a, &m, q)).collect::<Result<_, _>>()?;
    let minus_bp: Vec<ExactMatrix> = (0..=top)
        .map(|q| Ok(bar_prime_boundary(a, q)?.scale(&ring.from_i64(-1))))
        .collect::<Result<_, BarError>>()?;
    let one_minus_t: Vec<ExactMatrix> = (0..=top)
        .map(|q| {
            let t = cyclic_operator(a, q)?;
            Ok(ExactMatrix::identity(ring, t.rows()).sub(&t)?)
        })
        .collect::<Result<_, BarError>>()?;
    let norm: Vec<ExactMatrix> = (0..=top).map(|q| norm_operator(a, q)).collect::<Result<_, _>>()?;
    total_complex(
        ring,
        top,
        |_, q| TensorBasis::new(a.dim(), a.dim(), q).len(),
        |p, q| if p % 2 == 0 { b[q].clone() } else { minus_bp[q].clone() },
        |p, q| if p % 2 == 1 { one_minus_t[q].clone() } else { norm[q].clone() },
    )
}

/// `HC_0 … HC_last`.
pub fn cyclic_homology(a: &InvolutiveAlgebra, last: usize) -> Result<Vec<HomologyGroup>, BarError> {
    cyclic_bicomplex(a, last + 1)?.homology_up_to(last)
}

/// Homology of the subcomplex fixed by an involution `ω` commuting with `d`,
/// when 2 is invertible: with `P = (1 + ω)/2`,
/// `dim H_k = rank P_k − rank(d_k P_k) − rank(d_{k+1} P_{k+1})`.
pub fn invariant_homology(
    complex: &ChainComplex,
    omega: &[ExactMatrix],
    last: usize,
) -> Result<Vec<HomologyGroup>, BarError> {
    let ring = complex.ring();
    let half = ring.inv(&ring.from_i64(2)).ok_or(BarError::RingNotRational(ring))?;
    let projector = |k: usize| -> Result<ExactMatrix, BarError> {
        let id = ExactMatrix::identity(ring, complex.rank(k));
        Ok(id.add(&omega[k])?.scale(&half))
    };
    let mut out = Vec::with_capacity(last + 1);
    let mut p_next = projector(0)?;
    for k in 0..=last {
        let p_k = p_next;
        p_next = projector(k + 1)?;
        let boundary_rank = rank(&complex.differential(k + 1).mul(&p_next)?);
        let cycle_defect = rank(&complex.differential(k).mul(&p_k)?);
        out.push(HomologyGroup::free(ring, rank(&p_k) - cycle_defect - boundary_rank));
    }
    Ok(out)
}

/// Over ℚ, `HR` is the homology of the `y`-invariant Hochschild complex.
pub fn reflexive_homology_via_invariants(
    a: &InvolutiveAlgebra,
    m: &InvolutiveBimodule,
    last: usize,
) -> Result<Vec<HomologyGroup>, BarError> {
    if !a.ring().two_invertible() {
        return Err(BarError::RingNotRational(a.ring()));
    }
    let complex = hochschild_complex(a, m, last + 1)?;
    let omega: Vec<ExactMatrix> = (0..=last + 1).map(|n| reflexive_operator(a, m, n)).collect::<Result<_, _>>()?;
    invariant_homology(&complex, &omega, last)
}

/// `HD_0 … HD_last` over ℚ: the homology of the invariants of the dihedral
/// involution ([`dihedral_operator`]) on the total cyclic complex.
pub fn dihedral_homology_rational(a: &InvolutiveAlgebra, last: usize) -> Result<Vec<HomologyGroup>, BarError> {
    if a.ring() != Ring::Rationals {
        return Err(BarError::RingNotRational(a.ring()));
    }
    let ring = a.ring();
    let top = last + 1;
    let complex = cyclic_bicomplex(a, top)?;
    let mut omega = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let blocks: Vec<ExactMatrix> = (0..=k).map(|p| dihedral_operator(a, p, k - p)).collect::<Result<_, _>>()?;
        let sizes: Vec<usize> = blocks.iter().map(ExactMatrix::rows).collect();
        let grid: Vec<Vec<Option<&ExactMatrix>>> =
            (0..=k).map(|i| (0..=k).map(|j| (i == j).then(|| &blocks[i])).collect()).collect();
        omega.push(ExactMatrix::block(ring, &sizes, &sizes, &grid)?);
    }
    invariant_homology(&complex, &omega, last)
}
