//! Quasi-bialgebras: coproduct, counit, invertible reassociator `Φ ∈ H^⊗3`
//! and unit constraints `ℓ, r ∈ H`, a quasitriangular layer with an
//! invertible R-matrix, the axiom verifiers, and gauge twisting.
//!
//! Constructors only validate shapes and compute the cached inverses; they do
//! not check the axioms. Run [`verify_quasibialgebra`] /
//! [`verify_quasitriangular`] for that — construction of deliberately broken
//! structures (for negative controls) must stay possible.

use std::sync::Arc;

use crate::algebra::{same_algebra, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::morphism::AlgebraMorphism;
use crate::report::CheckReport;
use crate::tensor::TensorElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiBialgebra {
    algebra: Arc<FiniteAlgebra>,
    coproduct: AlgebraMorphism,
    counit: AlgebraMorphism,
    reassociator: TensorElement,
    reassociator_inv: TensorElement,
    ell: TensorElement,
    ell_inv: TensorElement,
    r_elt: TensorElement,
    r_elt_inv: TensorElement,
}

impl QuasiBialgebra {
    pub fn new(
        coproduct: AlgebraMorphism,
        counit: AlgebraMorphism,
        reassociator: TensorElement,
        ell: TensorElement,
        r_elt: TensorElement,
    ) -> Result<Self> {
        let algebra = coproduct.algebra().clone();
        if coproduct.target_arity() != 2 {
            return Err(Error::InvalidBundle(format!(
                "coproduct must target arity 2, got {}",
                coproduct.target_arity()
            )));
        }
        if counit.target_arity() != 0 {
            return Err(Error::InvalidBundle(format!(
                "counit must target arity 0, got {}",
                counit.target_arity()
            )));
        }
        for (what, tensor, arity) in [
            ("reassociator", &reassociator, 3),
            ("left unit constraint", &ell, 1),
            ("right unit constraint", &r_elt, 1),
        ] {
            if tensor.arity() != arity {
                return Err(Error::InvalidBundle(format!(
                    "{what} must have arity {arity}, got {}",
                    tensor.arity()
                )));
            }
            if !same_algebra(tensor.algebra(), &algebra) {
                return Err(Error::InvalidBundle(format!(
                    "{what} lives over a different algebra"
                )));
            }
        }
        if !same_algebra(counit.algebra(), &algebra) {
            return Err(Error::InvalidBundle(
                "counit lives over a different algebra".into(),
            ));
        }
        let reassociator_inv = reassociator.invert()?;
        let ell_inv = ell.invert()?;
        let r_elt_inv = r_elt.invert()?;
        Ok(QuasiBialgebra {
            algebra,
            coproduct,
            counit,
            reassociator,
            reassociator_inv,
            ell,
            ell_inv,
            r_elt,
            r_elt_inv,
        })
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        &self.algebra
    }

    pub fn coproduct(&self) -> &AlgebraMorphism {
        &self.coproduct
    }

    pub fn counit(&self) -> &AlgebraMorphism {
        &self.counit
    }

    pub fn reassociator(&self) -> &TensorElement {
        &self.reassociator
    }

    pub fn reassociator_inv(&self) -> &TensorElement {
        &self.reassociator_inv
    }

    pub fn ell(&self) -> &TensorElement {
        &self.ell
    }

    pub fn ell_inv(&self) -> &TensorElement {
        &self.ell_inv
    }

    pub fn r_elt(&self) -> &TensorElement {
        &self.r_elt
    }

    pub fn r_elt_inv(&self) -> &TensorElement {
        &self.r_elt_inv
    }

    pub fn has_trivial_reassociator(&self) -> bool {
        self.reassociator == TensorElement::unit(self.algebra.clone(), 3)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiTriangular {
    base: QuasiBialgebra,
    rmatrix: TensorElement,
    rmatrix_inv: TensorElement,
}

impl QuasiTriangular {
    pub fn new(base: QuasiBialgebra, rmatrix: TensorElement) -> Result<Self> {
        if rmatrix.arity() != 2 {
            return Err(Error::InvalidBundle(format!(
                "R-matrix must have arity 2, got {}",
                rmatrix.arity()
            )));
        }
        if !same_algebra(rmatrix.algebra(), base.algebra()) {
            return Err(Error::InvalidBundle(
                "R-matrix lives over a different algebra".into(),
            ));
        }
        let rmatrix_inv = rmatrix.invert()?;
        Ok(QuasiTriangular {
            base,
            rmatrix,
            rmatrix_inv,
        })
    }

    pub fn base(&self) -> &QuasiBialgebra {
        &self.base
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        self.base.algebra()
    }

    pub fn rmatrix(&self) -> &TensorElement {
        &self.rmatrix
    }

    pub fn rmatrix_inv(&self) -> &TensorElement {
        &self.rmatrix_inv
    }
}

/// Product of tensors of equal arity, associated left to right.
pub(crate) fn product(factors: &[TensorElement]) -> TensorElement {
    let mut iter = factors.iter();
    let first = iter.next().expect("product of at least one factor");
    iter.fold(first.clone(), |acc, f| &acc * f)
}

/// Embedding with statically valid positions: component `j` of `t` goes to
/// leg `positions[j]`, units fill the rest — the reading behind R₁₃, F₂₃, ….
pub(crate) fn embed(t: &TensorElement, positions: &[usize], m: usize) -> TensorElement {
    t.embed_legs(positions, m)
        .expect("embedding positions are distinct and in range")
}

/// Full-permutation leg subscript `X_{i₁…iₙ}`: leg `l` of the result carries
/// component `iₗ` of `X`, so e.g. `subscript(Φ, [3,1,2]) = Σ φ³⊗φ¹⊗φ²`.
/// For transpositions this agrees with [`embed`]; for 3-cycles it is the
/// inverse placement.
pub(crate) fn subscript(t: &TensorElement, sub: &[usize]) -> TensorElement {
    let mut positions = vec![0usize; sub.len()];
    for (leg, comp) in sub.iter().enumerate() {
        positions[*comp - 1] = leg + 1;
    }
    embed(t, &positions, sub.len())
}

/// First nonzero residual over all basis elements, if any.
pub(crate) fn first_failing(
    dim: usize,
    f: impl Fn(u16) -> TensorElement,
) -> Option<TensorElement> {
    (0..dim as u16).map(f).find(|r| !r.is_zero())
}

pub fn verify_quasibialgebra(qb: &QuasiBialgebra) -> CheckReport {
    let mut report = CheckReport::new();
    let alg = qb.algebra();
    let dim = alg.dim();
    let delta = qb.coproduct();
    let eps = qb.counit();
    let phi = qb.reassociator();
    let phi_inv = qb.reassociator_inv();

    let delta_mult = delta.multiplicativity_witness().map(|(i, j)| {
        &(delta.image(i) * delta.image(j))
            - &delta.image_of_combination(&alg.product_basis(i, j).to_vec())
    });
    report.record_residual("qb-delta-mult", "coproduct is multiplicative", delta_mult);
    report.record_bool("qb-delta-unital", "coproduct preserves the unit", delta.is_unital());

    let eps_mult = eps.multiplicativity_witness().map(|(i, j)| {
        &(eps.image(i) * eps.image(j))
            - &eps.image_of_combination(&alg.product_basis(i, j).to_vec())
    });
    report.record_residual("qb-eps-mult", "counit is multiplicative", eps_mult);
    report.record_bool("qb-eps-unital", "counit preserves the unit", eps.is_unital());

    let coassoc = first_failing(dim, |e| {
        let de = delta.image(e);
        let lhs = de.apply_morphism_leg(2, delta).unwrap();
        let inner = de.apply_morphism_leg(1, delta).unwrap();
        let rhs = &(phi * &inner) * phi_inv;
        &lhs - &rhs
    });
    report.record_residual(
        "qb-coassoc",
        "coassociativity up to conjugation by the reassociator",
        coassoc,
    );

    let counit_l = first_failing(dim, |e| {
        let lhs = delta.image(e).apply_morphism_leg(1, eps).unwrap();
        let elem = TensorElement::basis(alg.clone(), &[e]);
        let rhs = &(qb.ell_inv() * &elem) * qb.ell();
        &lhs - &rhs
    });
    report.record_residual("qb-counit-l", "(ε⊗id)∘Δ is conjugation by ℓ", counit_l);

    let counit_r = first_failing(dim, |e| {
        let lhs = delta.image(e).apply_morphism_leg(2, eps).unwrap();
        let elem = TensorElement::basis(alg.clone(), &[e]);
        let rhs = &(qb.r_elt_inv() * &elem) * qb.r_elt();
        &lhs - &rhs
    });
    report.record_residual("qb-counit-r", "(id⊗ε)∘Δ is conjugation by r", counit_r);

    let pentagon_lhs = &phi.apply_morphism_leg(3, delta).unwrap()
        * &phi.apply_morphism_leg(1, delta).unwrap();
    let pentagon_rhs = product(&[
        embed(phi, &[2, 3, 4], 4),
        phi.apply_morphism_leg(2, delta).unwrap(),
        embed(phi, &[1, 2, 3], 4),
    ]);
    report.record_residual(
        "qb-pentagon",
        "reassociator pentagon identity",
        Some(&pentagon_lhs - &pentagon_rhs),
    );

    let counit_phi_lhs = phi.apply_morphism_leg(2, eps).unwrap();
    let counit_phi_rhs = qb.r_elt().outer(qb.ell_inv());
    report.record_residual(
        "qb-counit-phi",
        "(id⊗ε⊗id)(Φ) = r⊗ℓ⁻¹",
        Some(&counit_phi_lhs - &counit_phi_rhs),
    );

    report
}

pub fn verify_quasitriangular(qt: &QuasiTriangular) -> CheckReport {
    let mut report = CheckReport::new();
    let qb = qt.base();
    let delta = qb.coproduct();
    let phi = qb.reassociator();
    let phi_inv = qb.reassociator_inv();
    let r = qt.rmatrix();

    let intertwine = first_failing(qb.algebra().dim(), |e| {
        let de = delta.image(e);
        &(&de.flip() * r) - &(r * de)
    });
    report.record_residual("qtqb1", "R intertwines Δ and the opposite coproduct", intertwine);

    // (id⊗Δ)(R) = Φ₃₁₂⁻¹ R₁₃ Φ₂₁₃ R₁₂ Φ⁻¹
    let lhs = r.apply_morphism_leg(2, delta).unwrap();
    let rhs = product(&[
        subscript(phi_inv, &[3, 1, 2]),
        embed(r, &[1, 3], 3),
        subscript(phi, &[2, 1, 3]),
        embed(r, &[1, 2], 3),
        phi_inv.clone(),
    ]);
    report.record_residual("qtqb2", "hexagon for (id⊗Δ)(R)", Some(&lhs - &rhs));

    // (Δ⊗id)(R) = Φ₂₃₁ R₁₃ Φ₁₃₂⁻¹ R₂₃ Φ
    let lhs = r.apply_morphism_leg(1, delta).unwrap();
    let rhs = product(&[
        subscript(phi, &[2, 3, 1]),
        embed(r, &[1, 3], 3),
        subscript(phi_inv, &[1, 3, 2]),
        embed(r, &[2, 3], 3),
        phi.clone(),
    ]);
    report.record_residual("qtqb3", "hexagon for (Δ⊗id)(R)", Some(&lhs - &rhs));

    report
}

/// Whether `R^op · R = 1⊗1` (the triangular / symmetric case).
pub fn check_triangular(qt: &QuasiTriangular) -> bool {
    let unit = TensorElement::unit(qt.algebra().clone(), 2);
    &qt.rmatrix().flip() * qt.rmatrix() == unit
}

/// Conjugates the coproduct by `F`, rebuilds the reassociator and unit
/// constraints, and transports the R-matrix to `F^op·R·F⁻¹`.
///
/// The output is not re-verified here; deliberately twisting by a bad `F`
/// and watching the verifiers fail is a supported workflow.
pub fn gauge_twist(qt: &QuasiTriangular, f: &TensorElement) -> Result<QuasiTriangular> {
    let base = gauge_twist_bialgebra(qt.base(), f)?;
    let f_inv = f.invert()?;
    let r_f = &(&f.flip() * qt.rmatrix()) * &f_inv;
    QuasiTriangular::new(base, r_f)
}

pub fn gauge_twist_bialgebra(qb: &QuasiBialgebra, f: &TensorElement) -> Result<QuasiBialgebra> {
    if f.arity() != 2 {
        return Err(Error::InvalidBundle(format!(
            "gauge transformation must have arity 2, got {}",
            f.arity()
        )));
    }
    if !same_algebra(f.algebra(), qb.algebra()) {
        return Err(Error::InvalidBundle(
            "gauge transformation lives over a different algebra".into(),
        ));
    }
    let f_inv = f.invert()?;
    let delta = qb.coproduct();

    let images = (0..qb.algebra().dim() as u16)
        .map(|e| &(f * delta.image(e)) * &f_inv)
        .collect();
    let delta_f = AlgebraMorphism::new(qb.algebra().clone(), 2, images)?;

    let phi_f = product(&[
        embed(f, &[2, 3], 3),
        f.apply_morphism_leg(2, delta).unwrap(),
        qb.reassociator().clone(),
        f_inv.apply_morphism_leg(1, delta).unwrap(),
        embed(&f_inv, &[1, 2], 3),
    ]);

    // For F that is not counit-normalized, the unit constraints absorb
    // u = (ε⊗id)(F) and v = (id⊗ε)(F).
    let u = f.apply_morphism_leg(1, qb.counit()).unwrap();
    let v = f.apply_morphism_leg(2, qb.counit()).unwrap();
    let ell_f = qb.ell() * &u.invert()?;
    let r_f = qb.r_elt() * &v.invert()?;

    QuasiBialgebra::new(delta_f, qb.counit().clone(), phi_f, ell_f, r_f)
}
