//! Algebra maps `H → H^⊗m` given by their values on the basis, such as a
//! coproduct (m = 2) or a counit (m = 0, where the image is a bare scalar).

use std::sync::Arc;

use crate::algebra::{same_algebra, FiniteAlgebra, SparseVec};
use crate::error::{Error, Result};
use crate::tensor::TensorElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    algebra: Arc<FiniteAlgebra>,
    target_arity: usize,
    images: Vec<TensorElement>,
}

impl AlgebraMorphism {
    pub fn new(
        algebra: Arc<FiniteAlgebra>,
        target_arity: usize,
        images: Vec<TensorElement>,
    ) -> Result<Self> {
        if images.len() != algebra.dim() {
            return Err(Error::InvalidBundle(format!(
                "morphism defines {} basis images, algebra dimension is {}",
                images.len(),
                algebra.dim()
            )));
        }
        for (i, image) in images.iter().enumerate() {
            if image.arity() != target_arity {
                return Err(Error::InvalidBundle(format!(
                    "image of basis element {i} has arity {}, expected {target_arity}",
                    image.arity()
                )));
            }
            if !same_algebra(image.algebra(), &algebra) {
                return Err(Error::InvalidBundle(format!(
                    "image of basis element {i} lives over a different algebra"
                )));
            }
        }
        Ok(AlgebraMorphism {
            algebra,
            target_arity,
            images,
        })
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        &self.algebra
    }

    pub fn target_arity(&self) -> usize {
        self.target_arity
    }

    pub fn image(&self, i: u16) -> &TensorElement {
        &self.images[i as usize]
    }

    pub fn images(&self) -> &[TensorElement] {
        &self.images
    }

    /// Linear extension: the image of `Σ cᵢ·eᵢ`.
    pub fn image_of_combination(&self, combo: &SparseVec) -> TensorElement {
        let mut out = TensorElement::zero(self.algebra.clone(), self.target_arity);
        for (i, c) in combo {
            out = &out + &self.image(*i).scale(c);
        }
        out
    }

    /// First pair `(i, j)` with `φ(eᵢ)·φ(eⱼ) ≠ φ(eᵢ·eⱼ)`, if any.
    pub fn multiplicativity_witness(&self) -> Option<(u16, u16)> {
        let dim = self.algebra.dim() as u16;
        for i in 0..dim {
            for j in 0..dim {
                let lhs = &(self.image(i) * self.image(j));
                let rhs = self.image_of_combination(&self.algebra.product_basis(i, j).to_vec());
                if lhs != &rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_unital(&self) -> bool {
        let unit_image = self.image_of_combination(&self.algebra.unit().to_vec());
        unit_image == TensorElement::unit(self.algebra.clone(), self.target_arity)
    }

    pub fn is_algebra_morphism(&self) -> bool {
        self.is_unital() && self.multiplicativity_witness().is_none()
    }
}
