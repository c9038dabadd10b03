//! Infinitesimal R-matrices on quasitriangular quasi-bialgebras: the
//! pre-Cartier axioms pC1–pC3, the Cartier condition pC4, gauge transport of
//! χ, the conjugated leg-1-3 elements, infinitesimal braid relation sets, the
//! (quasi) quantum Yang–Baxter identities, and ħ-truncated quantization of χ
//! into a deformed R-matrix.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{same_algebra, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::quasibialgebra::{
    embed, first_failing, gauge_twist, product, subscript, QuasiBialgebra, QuasiTriangular,
};
use crate::report::CheckReport;
use crate::scalar::{GaussRat, HPoly};
use crate::tensor::TensorElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreCartier {
    qt: QuasiTriangular,
    chi: TensorElement,
}

impl PreCartier {
    pub fn new(qt: QuasiTriangular, chi: TensorElement) -> Result<Self> {
        if chi.arity() != 2 {
            return Err(Error::InvalidBundle(format!(
                "infinitesimal R-matrix must have arity 2, got {}",
                chi.arity()
            )));
        }
        if !same_algebra(chi.algebra(), qt.algebra()) {
            return Err(Error::InvalidBundle(
                "infinitesimal R-matrix lives over a different algebra".into(),
            ));
        }
        Ok(PreCartier { qt, chi })
    }

    pub fn qt(&self) -> &QuasiTriangular {
        &self.qt
    }

    pub fn base(&self) -> &QuasiBialgebra {
        self.qt.base()
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        self.qt.algebra()
    }

    pub fn chi(&self) -> &TensorElement {
        &self.chi
    }
}

pub fn verify_precartier(p: &PreCartier) -> CheckReport {
    let mut report = CheckReport::new();
    let delta = p.base().coproduct();
    let phi = p.base().reassociator();
    let phi_inv = p.base().reassociator_inv();
    let r = p.qt().rmatrix();
    let r_inv = p.qt().rmatrix_inv();
    let chi = p.chi();

    let central = first_failing(p.algebra().dim(), |e| {
        let de = delta.image(e);
        &(chi * de) - &(de * chi)
    });
    report.record_residual("pC1", "χ commutes with every coproduct image", central);

    // (id⊗Δ)(χ) = Φ R₁₂⁻¹ Φ₂₁₃⁻¹ χ₁₃ Φ₂₁₃ R₁₂ Φ⁻¹ + Φ χ₁₂ Φ⁻¹
    let lhs = chi.apply_morphism_leg(2, delta).unwrap();
    let conjugated = product(&[
        phi.clone(),
        embed(r_inv, &[1, 2], 3),
        subscript(phi_inv, &[2, 1, 3]),
        embed(chi, &[1, 3], 3),
        subscript(phi, &[2, 1, 3]),
        embed(r, &[1, 2], 3),
        phi_inv.clone(),
    ]);
    let shifted = product(&[phi.clone(), embed(chi, &[1, 2], 3), phi_inv.clone()]);
    let rhs = &conjugated + &shifted;
    report.record_residual("pC2", "coproduct of χ on the second leg", Some(&lhs - &rhs));

    // (Δ⊗id)(χ) = Φ⁻¹ R₂₃⁻¹ Φ₁₃₂ χ₁₃ Φ₁₃₂⁻¹ R₂₃ Φ + Φ⁻¹ χ₂₃ Φ
    let lhs = chi.apply_morphism_leg(1, delta).unwrap();
    let conjugated = product(&[
        phi_inv.clone(),
        embed(r_inv, &[2, 3], 3),
        subscript(phi, &[1, 3, 2]),
        embed(chi, &[1, 3], 3),
        subscript(phi_inv, &[1, 3, 2]),
        embed(r, &[2, 3], 3),
        phi.clone(),
    ]);
    let shifted = product(&[phi_inv.clone(), embed(chi, &[2, 3], 3), phi.clone()]);
    let rhs = &conjugated + &shifted;
    report.record_residual("pC3", "coproduct of χ on the first leg", Some(&lhs - &rhs));

    report
}

/// The Cartier condition `R·χ = χ^op·R`.
pub fn verify_cartier(p: &PreCartier) -> bool {
    let r = p.qt().rmatrix();
    &(r * p.chi()) - &(&p.chi().flip() * r) == TensorElement::zero(p.algebra().clone(), 2)
}

/// Gauge twist of the whole structure: the underlying quasitriangular data is
/// twisted by `F` and χ is conjugated to `F·χ·F⁻¹`.
pub fn twist_chi(p: &PreCartier, f: &TensorElement) -> Result<PreCartier> {
    let qt_f = gauge_twist(p.qt(), f)?;
    let f_inv = f.invert()?;
    let chi_f = &(f * p.chi()) * &f_inv;
    PreCartier::new(qt_f, chi_f)
}

fn require_trivial_reassociator(p: &PreCartier) -> Result<()> {
    if p.base().has_trivial_reassociator() {
        Ok(())
    } else {
        Err(Error::NontrivialReassociator)
    }
}

/// `χ̄₁₃ := R₁₂⁻¹ χ₁₃ R₁₂` in the trivial-reassociator case.
pub fn chi13_bar(p: &PreCartier) -> Result<TensorElement> {
    require_trivial_reassociator(p)?;
    let r = p.qt().rmatrix();
    let r_inv = p.qt().rmatrix_inv();
    Ok(product(&[
        embed(r_inv, &[1, 2], 3),
        embed(p.chi(), &[1, 3], 3),
        embed(r, &[1, 2], 3),
    ]))
}

/// With trivial Φ the two conjugates of χ₁₃ agree:
/// `R₂₃⁻¹ χ₁₃ R₂₃ = R₁₂⁻¹ χ₁₃ R₁₂`.
pub fn check_chi13_bialgebra(p: &PreCartier) -> Result<bool> {
    require_trivial_reassociator(p)?;
    let r = p.qt().rmatrix();
    let r_inv = p.qt().rmatrix_inv();
    let via_23 = product(&[
        embed(r_inv, &[2, 3], 3),
        embed(p.chi(), &[1, 3], 3),
        embed(r, &[2, 3], 3),
    ]);
    Ok(via_23 == chi13_bar(p)?)
}

/// The quasi version of the statement above:
/// `Φ⁻¹R₂₃⁻¹Φ₁₃₂ χ₁₃ Φ₁₃₂⁻¹R₂₃Φ = R₁₂⁻¹Φ₂₁₃⁻¹ χ₁₃ Φ₂₁₃R₁₂`.
pub fn check_chi13_quasi(p: &PreCartier) -> bool {
    let phi = p.base().reassociator();
    let phi_inv = p.base().reassociator_inv();
    let r = p.qt().rmatrix();
    let r_inv = p.qt().rmatrix_inv();
    let chi13 = embed(p.chi(), &[1, 3], 3);
    let lhs = product(&[
        phi_inv.clone(),
        embed(r_inv, &[2, 3], 3),
        subscript(phi, &[1, 3, 2]),
        chi13.clone(),
        subscript(phi_inv, &[1, 3, 2]),
        embed(r, &[2, 3], 3),
        phi.clone(),
    ]);
    let rhs = product(&[
        embed(r_inv, &[1, 2], 3),
        subscript(phi_inv, &[2, 1, 3]),
        chi13,
        subscript(phi, &[2, 1, 3]),
        embed(r, &[1, 2], 3),
    ]);
    lhs == rhs
}

/// A labelled family `{A^{ij}}` of equal-arity tensors indexed by leg pairs,
/// ready for the infinitesimal braid relation checker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidSet {
    arity: usize,
    elements: BTreeMap<(usize, usize), TensorElement>,
}

impl BraidSet {
    pub fn new(elements: BTreeMap<(usize, usize), TensorElement>) -> Result<Self> {
        let arity = match elements.values().next() {
            Some(t) => t.arity(),
            None => {
                return Err(Error::InvalidBundle(
                    "braid set must contain at least one element".into(),
                ))
            }
        };
        let expected: Vec<(usize, usize)> = match arity {
            3 => vec![(1, 2), (1, 3), (2, 3)],
            4 => vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
            other => {
                return Err(Error::InvalidBundle(format!(
                    "braid sets are defined for arity 3 or 4, got {other}"
                )))
            }
        };
        let keys: Vec<(usize, usize)> = elements.keys().copied().collect();
        if keys != expected {
            return Err(Error::InvalidBundle(format!(
                "braid set of arity {arity} must be indexed by exactly {expected:?}, got {keys:?}"
            )));
        }
        let first = elements.values().next().unwrap();
        for t in elements.values() {
            if t.arity() != arity || !same_algebra(t.algebra(), first.algebra()) {
                return Err(Error::InvalidBundle(
                    "braid set elements must share arity and algebra".into(),
                ));
            }
        }
        Ok(BraidSet { arity, elements })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn element(&self, i: usize, j: usize) -> &TensorElement {
        &self.elements[&(i, j)]
    }

    pub fn elements(&self) -> &BTreeMap<(usize, usize), TensorElement> {
        &self.elements
    }
}

/// `{Θ^{12}, Θ^{23}, Θ^{13}}`: the left-handed conjugated family.
pub fn theta_set(p: &PreCartier) -> BraidSet {
    let phi = p.base().reassociator();
    let phi_inv = p.base().reassociator_inv();
    let r = p.qt().rmatrix();
    let r_inv = p.qt().rmatrix_inv();
    let chi = p.chi();
    let mut elements = BTreeMap::new();
    elements.insert((1, 2), embed(chi, &[1, 2], 3));
    elements.insert(
        (2, 3),
        product(&[phi_inv.clone(), embed(chi, &[2, 3], 3), phi.clone()]),
    );
    elements.insert(
        (1, 3),
        product(&[
            phi_inv.clone(),
            embed(r_inv, &[2, 3], 3),
            subscript(phi, &[1, 3, 2]),
            embed(chi, &[1, 3], 3),
            subscript(phi_inv, &[1, 3, 2]),
            embed(r, &[2, 3], 3),
            phi.clone(),
        ]),
    );
    BraidSet::new(elements).expect("theta set is well-formed by construction")
}

/// `{Υ^{12}, Υ^{23}, Υ^{13}}`: the right-handed conjugated family.
pub fn upsilon_set(p: &PreCartier) -> BraidSet {
    let phi = p.base().reassociator();
    let phi_inv = p.base().reassociator_inv();
    let r = p.qt().rmatrix();
    let r_inv = p.qt().rmatrix_inv();
    let chi = p.chi();
    let mut elements = BTreeMap::new();
    elements.insert(
        (1, 2),
        product(&[phi.clone(), embed(chi, &[1, 2], 3), phi_inv.clone()]),
    );
    elements.insert((2, 3), embed(chi, &[2, 3], 3));
    elements.insert(
        (1, 3),
        product(&[
            phi.clone(),
            embed(r_inv, &[1, 2], 3),
            subscript(phi_inv, &[2, 1, 3]),
            embed(chi, &[1, 3], 3),
            subscript(phi, &[2, 1, 3]),
            embed(r, &[1, 2], 3),
            phi_inv.clone(),
        ]),
    );
    BraidSet::new(elements).expect("upsilon set is well-formed by construction")
}

/// The trivial-reassociator family `{χ₁₂, χ₂₃, χ̄₁₃}`.
pub fn chi_braid_set(p: &PreCartier) -> Result<BraidSet> {
    require_trivial_reassociator(p)?;
    let chi = p.chi();
    let mut elements = BTreeMap::new();
    elements.insert((1, 2), embed(chi, &[1, 2], 3));
    elements.insert((2, 3), embed(chi, &[2, 3], 3));
    elements.insert((1, 3), chi13_bar(p)?);
    Ok(BraidSet::new(elements).expect("chi braid set is well-formed by construction"))
}

/// Checks `[A^{ij}, A^{ik} + A^{jk}] = 0` for every triple, and
/// `[A^{ij}, A^{kh}] = 0` for disjoint pairs when the arity is 4.
pub fn check_infinitesimal_braid(set: &BraidSet) -> CheckReport {
    let mut report = CheckReport::new();
    let n = set.arity();

    let mut triples = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                triples.push((i, j, k));
            }
        }
    }
    for (i, j, k) in triples {
        // Distinguished pair (a,b), remaining index c.
        for (a, b, c) in [(i, j, k), (i, k, j), (j, k, i)] {
            let ab = set.element(a, b);
            let ac = set.element(a.min(c), a.max(c));
            let bc = set.element(b.min(c), b.max(c));
            let residual = ab.commutator(&(ac + bc));
            report.record_residual(
                "infbraid1",
                &format!("[A^{{{a}{b}}}, A^{{{}{}}} + A^{{{}{}}}] = 0", a.min(c), a.max(c), b.min(c), b.max(c)),
                Some(residual),
            );
        }
    }

    if n == 4 {
        for ((a, b), (c, d)) in [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))] {
            let residual = set.element(a, b).commutator(set.element(c, d));
            report.record_residual(
                "infbraid2",
                &format!("[A^{{{a}{b}}}, A^{{{c}{d}}}] = 0"),
                Some(residual),
            );
        }
    }

    report
}

/// The quasi quantum Yang–Baxter equation
/// `R₁₂Φ₂₃₁R₁₃Φ₁₃₂⁻¹R₂₃Φ = Φ₃₂₁R₂₃Φ₃₁₂⁻¹R₁₃Φ₂₁₃R₁₂`.
pub fn check_qybe(qt: &QuasiTriangular) -> bool {
    let phi = qt.base().reassociator();
    let phi_inv = qt.base().reassociator_inv();
    let r = qt.rmatrix();
    let lhs = product(&[
        embed(r, &[1, 2], 3),
        subscript(phi, &[2, 3, 1]),
        embed(r, &[1, 3], 3),
        subscript(phi_inv, &[1, 3, 2]),
        embed(r, &[2, 3], 3),
        phi.clone(),
    ]);
    let rhs = product(&[
        subscript(phi, &[3, 2, 1]),
        embed(r, &[2, 3], 3),
        subscript(phi_inv, &[3, 1, 2]),
        embed(r, &[1, 3], 3),
        subscript(phi, &[2, 1, 3]),
        embed(r, &[1, 2], 3),
    ]);
    lhs == rhs
}

/// The infinitesimal (quasi) quantum Yang–Baxter equation: the six-term
/// identity obtained by inserting χ into each R slot of the QYBE.
pub fn check_infinitesimal_qqybe(p: &PreCartier) -> bool {
    let phi = p.base().reassociator();
    let phi_inv = p.base().reassociator_inv();
    let r = p.qt().rmatrix();
    let chi = p.chi();

    let r12 = embed(r, &[1, 2], 3);
    let r13 = embed(r, &[1, 3], 3);
    let r23 = embed(r, &[2, 3], 3);
    let chi12 = embed(chi, &[1, 2], 3);
    let chi13 = embed(chi, &[1, 3], 3);
    let chi23 = embed(chi, &[2, 3], 3);
    let phi231 = subscript(phi, &[2, 3, 1]);
    let phi132_inv = subscript(phi_inv, &[1, 3, 2]);
    let phi321 = subscript(phi, &[3, 2, 1]);
    let phi312_inv = subscript(phi_inv, &[3, 1, 2]);
    let phi213 = subscript(phi, &[2, 1, 3]);

    let lhs1 = product(&[
        r12.clone(),
        chi12.clone(),
        phi231.clone(),
        r13.clone(),
        phi132_inv.clone(),
        r23.clone(),
        phi.clone(),
    ]);
    let lhs2 = product(&[
        r12.clone(),
        phi231.clone(),
        r13.clone(),
        chi13.clone(),
        phi132_inv.clone(),
        r23.clone(),
        phi.clone(),
    ]);
    let lhs3 = product(&[
        r12.clone(),
        phi231,
        r13.clone(),
        phi132_inv,
        r23.clone(),
        chi23.clone(),
        phi.clone(),
    ]);
    let rhs1 = product(&[
        phi321.clone(),
        r23.clone(),
        chi23,
        phi312_inv.clone(),
        r13.clone(),
        phi213.clone(),
        r12.clone(),
    ]);
    let rhs2 = product(&[
        phi321.clone(),
        r23.clone(),
        phi312_inv.clone(),
        r13.clone(),
        chi13,
        phi213.clone(),
        r12.clone(),
    ]);
    let rhs3 = product(&[phi321, r23, phi312_inv, r13, phi213, r12, chi12]);

    &(&lhs1 + &lhs2) + &lhs3 == &(&rhs1 + &rhs2) + &rhs3
}

/// The three commutator preconditions used by the quantization theorem in the
/// trivial-reassociator case. On a valid pre-Cartier bialgebra the three are
/// equivalent, so a report should come back all-pass or all-fail.
pub fn check_quantization_preconditions(p: &PreCartier) -> Result<CheckReport> {
    require_trivial_reassociator(p)?;
    let r = p.qt().rmatrix();
    let r_inv = p.qt().rmatrix_inv();
    let chi = p.chi();
    let chi12 = embed(chi, &[1, 2], 3);
    let chi13 = embed(chi, &[1, 3], 3);
    let chi23 = embed(chi, &[2, 3], 3);

    let mut report = CheckReport::new();
    let conj12 = product(&[embed(r_inv, &[1, 2], 3), chi13.clone(), embed(r, &[1, 2], 3)]);
    report.record_residual(
        "com1",
        "[χ₁₂, R₁₂⁻¹χ₁₃R₁₂] = 0",
        Some(chi12.commutator(&conj12)),
    );
    let conj23 = product(&[embed(r_inv, &[2, 3], 3), chi13, embed(r, &[2, 3], 3)]);
    report.record_residual(
        "com2",
        "[χ₂₃, R₂₃⁻¹χ₁₃R₂₃] = 0",
        Some(chi23.commutator(&conj23)),
    );
    report.record_residual("com3", "[χ₁₂, χ₂₃] = 0", Some(chi12.commutator(&chi23)));
    Ok(report)
}

/// Scaling applied to ħχ in the quantization exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    One,
    Half,
}

impl Scale {
    pub fn as_gauss(&self) -> GaussRat {
        match self {
            Scale::One => GaussRat::one(),
            Scale::Half => GaussRat::ratio(1, 2),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Scale::One => "1",
            Scale::Half => "1/2",
        }
    }
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "one" => Ok(Scale::One),
            "1/2" | "half" => Ok(Scale::Half),
            other => Err(Error::Parse(format!(
                "unknown scale {other:?}; expected 1 or 1/2"
            ))),
        }
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn lift_tensor(t: &TensorElement, algebra: &Arc<FiniteAlgebra>) -> TensorElement {
    t.retruncate(algebra)
}

fn lift_morphism(
    m: &crate::morphism::AlgebraMorphism,
    algebra: &Arc<FiniteAlgebra>,
) -> crate::morphism::AlgebraMorphism {
    let images = m
        .images()
        .iter()
        .map(|t| lift_tensor(t, algebra))
        .collect();
    crate::morphism::AlgebraMorphism::new(algebra.clone(), m.target_arity(), images)
        .expect("retruncation preserves morphism shape")
}

/// Deforms the R-matrix to `R·exp(s·ħ·χ)` over coefficients truncated at
/// ħ^{order+1}, after checking the commutation preconditions that make the
/// deformation a quasitriangular structure:
///
/// * trivial reassociator: the three commutators com1–com3 must vanish
///   (failures are reported in the error);
/// * nontrivial reassociator: `[χ₁₂, Φ⁻¹χ₂₃Φ]` must vanish, so that the
///   associator correction degenerates to the identity and Φ can be kept —
///   the non-commuting case is out of scope and reported as an error rather
///   than silently approximated.
pub fn quantize(p: &PreCartier, scale: Scale, order: usize) -> Result<QuasiTriangular> {
    if p.base().has_trivial_reassociator() {
        let report = check_quantization_preconditions(p)?;
        if !report.all_passed() {
            return Err(Error::QuantizationObstruction(format!(
                "nonzero commutators: {}",
                report.failed_tags().join(", ")
            )));
        }
    } else {
        let phi = p.base().reassociator();
        let phi_inv = p.base().reassociator_inv();
        let chi12 = embed(p.chi(), &[1, 2], 3);
        let chi23_conj = product(&[phi_inv.clone(), embed(p.chi(), &[2, 3], 3), phi.clone()]);
        if !chi12.commutator(&chi23_conj).is_zero() {
            return Err(Error::NoncommutingAssociatorArguments);
        }
    }

    let algebra = p.algebra().retruncate(order);
    let base = p.base();
    let lifted = QuasiBialgebra::new(
        lift_morphism(base.coproduct(), &algebra),
        lift_morphism(base.counit(), &algebra),
        lift_tensor(base.reassociator(), &algebra),
        lift_tensor(base.ell(), &algebra),
        lift_tensor(base.r_elt(), &algebra),
    )?;

    let chi = lift_tensor(p.chi(), &algebra);
    let exponent = chi.scale(&HPoly::hbar(order).scale(&scale.as_gauss()));
    let r_tilde = &lift_tensor(p.qt().rmatrix(), &algebra) * &exponent.exp()?;
    QuasiTriangular::new(lifted, r_tilde)
}
