//! Tiny fixture algebras shared across unit tests.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::FiniteAlgebra;
use crate::morphism::AlgebraMorphism;
use crate::quasibialgebra::QuasiBialgebra;
use crate::scalar::HPoly;
use crate::tensor::TensorElement;

/// Group algebra of Z/2: basis {1, g}, g² = 1.
pub fn z2_algebra(order: usize) -> FiniteAlgebra {
    let one = HPoly::one(order);
    let mut structure = BTreeMap::new();
    structure.insert((0, 0), vec![(0, one.clone())]);
    structure.insert((0, 1), vec![(1, one.clone())]);
    structure.insert((1, 0), vec![(1, one.clone())]);
    structure.insert((1, 1), vec![(0, one.clone())]);
    FiniteAlgebra::new(
        vec!["1".into(), "g".into()],
        vec![(0, one)],
        structure,
        order,
    )
    .unwrap()
}

/// Z/2 group algebra as an honest bialgebra: Δ(g) = g⊗g, trivial Φ, ℓ, r.
pub fn z2_bialgebra(order: usize) -> QuasiBialgebra {
    let a = Arc::new(z2_algebra(order));
    let delta = AlgebraMorphism::new(
        a.clone(),
        2,
        vec![
            TensorElement::unit(a.clone(), 2),
            TensorElement::basis(a.clone(), &[1, 1]),
        ],
    )
    .unwrap();
    let eps = AlgebraMorphism::new(
        a.clone(),
        0,
        vec![
            TensorElement::single(a.clone(), &[], HPoly::one(order)),
            TensorElement::single(a.clone(), &[], HPoly::one(order)),
        ],
    )
    .unwrap();
    QuasiBialgebra::new(
        delta,
        eps,
        TensorElement::unit(a.clone(), 3),
        TensorElement::unit(a.clone(), 1),
        TensorElement::unit(a, 1),
    )
    .unwrap()
}

/// Dual numbers k[x]/(x²): basis {1, x}, x² = 0.
pub fn dual_numbers(order: usize) -> FiniteAlgebra {
    let one = HPoly::one(order);
    let mut structure = BTreeMap::new();
    structure.insert((0, 0), vec![(0, one.clone())]);
    structure.insert((0, 1), vec![(1, one.clone())]);
    structure.insert((1, 0), vec![(1, one.clone())]);
    FiniteAlgebra::new(
        vec!["1".into(), "x".into()],
        vec![(0, one)],
        structure,
        order,
    )
    .unwrap()
}
