//! JSON bundles: one document carrying an algebra together with its
//! quasi-bialgebra structure tensors, and optionally an R-matrix and an
//! infinitesimal R-matrix.
//!
//! A bundle is the unit of exchange for the command-line tools: constructors
//! emit bundles, the verifiers and the twist/quantize transforms consume
//! them.  [`BundleData`] is the raw serde schema; [`Bundle`] is the validated
//! form holding a [`QuasiBialgebra`] plus the optional components, from which
//! [`Bundle::quasitriangular`] and [`Bundle::precartier`] assemble the richer
//! structures on demand.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::morphism::AlgebraMorphism;
use crate::precartier::PreCartier;
use crate::quasibialgebra::{QuasiBialgebra, QuasiTriangular};
use crate::scalar::HPoly;
use crate::tensor::{TensorData, TensorElement};

/// One term of a sparse vector over the algebra basis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScalarTermData {
    pub index: u16,
    pub coefficient: HPoly,
}

/// One structure constant row: `e_left · e_right = Σ terms`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructureEntryData {
    pub left: u16,
    pub right: u16,
    pub terms: Vec<ScalarTermData>,
}

/// Serialization schema for a finite-dimensional algebra: basis labels, the
/// unit vector, and sparse structure constants (zero products omitted).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraData {
    pub basis_labels: Vec<String>,
    pub truncation_order: usize,
    pub unit: Vec<ScalarTermData>,
    pub structure: Vec<StructureEntryData>,
}

impl AlgebraData {
    pub fn from_algebra(algebra: &FiniteAlgebra) -> Self {
        let sparse_terms = |v: &[(u16, HPoly)]| {
            v.iter()
                .map(|(index, coefficient)| ScalarTermData {
                    index: *index,
                    coefficient: coefficient.clone(),
                })
                .collect()
        };
        AlgebraData {
            basis_labels: algebra.basis_labels().to_vec(),
            truncation_order: algebra.truncation_order(),
            unit: sparse_terms(algebra.unit()),
            structure: algebra
                .structure_constants()
                .iter()
                .filter(|(_, terms)| !terms.is_empty())
                .map(|((left, right), terms)| StructureEntryData {
                    left: *left,
                    right: *right,
                    terms: sparse_terms(terms),
                })
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<Arc<FiniteAlgebra>> {
        let sparse = |terms: &[ScalarTermData]| {
            terms
                .iter()
                .map(|t| (t.index, t.coefficient.clone()))
                .collect::<Vec<_>>()
        };
        let mut structure = BTreeMap::new();
        for entry in &self.structure {
            if structure
                .insert((entry.left, entry.right), sparse(&entry.terms))
                .is_some()
            {
                return Err(Error::InvalidBundle(format!(
                    "duplicate structure entry for ({}, {})",
                    entry.left, entry.right
                )));
            }
        }
        Ok(Arc::new(FiniteAlgebra::new(
            self.basis_labels.clone(),
            sparse(&self.unit),
            structure,
            self.truncation_order,
        )?))
    }
}

/// Extra context attached to emitted bundles, e.g. the scale and truncation
/// order a quantization was performed at.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleMetadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
}

/// The on-disk bundle document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BundleData {
    pub algebra: AlgebraData,
    /// Coproduct image of each basis element, in basis order (arity 2).
    pub coproduct: Vec<TensorData>,
    /// Counit value of each basis element, in basis order.
    pub counit: Vec<HPoly>,
    pub reassociator: TensorData,
    pub ell: TensorData,
    pub r: TensorData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<TensorData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<TensorData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<BundleMetadata>,
}

/// A validated bundle: a quasi-bialgebra plus whatever optional structure
/// the document carried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bundle {
    qb: QuasiBialgebra,
    rmatrix: Option<TensorElement>,
    chi: Option<TensorElement>,
    metadata: Option<BundleMetadata>,
}

impl Bundle {
    pub fn from_quasibialgebra(qb: QuasiBialgebra) -> Self {
        Bundle {
            qb,
            rmatrix: None,
            chi: None,
            metadata: None,
        }
    }

    pub fn from_quasitriangular(qt: &QuasiTriangular) -> Self {
        Bundle {
            qb: qt.base().clone(),
            rmatrix: Some(qt.rmatrix().clone()),
            chi: None,
            metadata: None,
        }
    }

    pub fn from_precartier(p: &PreCartier) -> Self {
        Bundle {
            qb: p.qt().base().clone(),
            rmatrix: Some(p.qt().rmatrix().clone()),
            chi: Some(p.chi().clone()),
            metadata: None,
        }
    }

    pub fn with_metadata(mut self, metadata: BundleMetadata) -> Self {
        self.metadata = Some(metadata);
        self
    }

    pub fn quasibialgebra(&self) -> &QuasiBialgebra {
        &self.qb
    }

    pub fn rmatrix(&self) -> Option<&TensorElement> {
        self.rmatrix.as_ref()
    }

    pub fn chi(&self) -> Option<&TensorElement> {
        self.chi.as_ref()
    }

    pub fn metadata(&self) -> Option<&BundleMetadata> {
        self.metadata.as_ref()
    }

    /// Assembles the quasitriangular structure, re-validating the R-matrix's
    /// invertibility.
    pub fn quasitriangular(&self) -> Result<QuasiTriangular> {
        let rmatrix = self.rmatrix.clone().ok_or(Error::MissingComponent("rmatrix"))?;
        QuasiTriangular::new(self.qb.clone(), rmatrix)
    }

    /// Assembles the pre-Cartier structure; requires both an R-matrix and an
    /// infinitesimal R-matrix in the bundle.
    pub fn precartier(&self) -> Result<PreCartier> {
        let chi = self.chi.clone().ok_or(Error::MissingComponent("chi"))?;
        PreCartier::new(self.quasitriangular()?, chi)
    }

    pub fn to_data(&self) -> BundleData {
        let algebra = self.qb.algebra();
        let counit = (0..algebra.dim() as u16)
            .map(|i| {
                let image = self.qb.counit().image(i);
                image
                    .terms()
                    .get(&Vec::new())
                    .cloned()
                    .unwrap_or_else(|| HPoly::zero(algebra.truncation_order()))
            })
            .collect();
        BundleData {
            algebra: AlgebraData::from_algebra(algebra),
            coproduct: self.qb.coproduct().images().iter().map(TensorElement::to_data).collect(),
            counit,
            reassociator: self.qb.reassociator().to_data(),
            ell: self.qb.ell().to_data(),
            r: self.qb.r_elt().to_data(),
            rmatrix: self.rmatrix.as_ref().map(TensorElement::to_data),
            chi: self.chi.as_ref().map(TensorElement::to_data),
            metadata: self.metadata.clone(),
        }
    }

    /// Rebuilds the typed bundle, re-running every structural validation:
    /// algebra well-formedness, morphism shapes, and invertibility of Φ, ℓ,
    /// r, and R.
    pub fn from_data(data: &BundleData) -> Result<Self> {
        let algebra = data.algebra.to_algebra()?;
        let dim = algebra.dim();
        if data.coproduct.len() != dim || data.counit.len() != dim {
            return Err(Error::InvalidBundle(format!(
                "coproduct and counit must list one entry per basis element ({dim})"
            )));
        }
        let coproduct_images = data
            .coproduct
            .iter()
            .map(|t| TensorElement::from_data(algebra.clone(), t))
            .collect::<Result<Vec<_>>>()?;
        let counit_images = data
            .counit
            .iter()
            .map(|c| {
                if c.order() != algebra.truncation_order() {
                    return Err(Error::InvalidBundle(
                        "counit values must share the algebra's truncation order".into(),
                    ));
                }
                Ok(TensorElement::single(algebra.clone(), &[], c.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        let coproduct = AlgebraMorphism::new(algebra.clone(), 2, coproduct_images)?;
        let counit = AlgebraMorphism::new(algebra.clone(), 0, counit_images)?;
        let qb = QuasiBialgebra::new(
            coproduct,
            counit,
            TensorElement::from_data(algebra.clone(), &data.reassociator)?,
            TensorElement::from_data(algebra.clone(), &data.ell)?,
            TensorElement::from_data(algebra.clone(), &data.r)?,
        )?;
        let rmatrix = data
            .rmatrix
            .as_ref()
            .map(|t| TensorElement::from_data(algebra.clone(), t))
            .transpose()?;
        let chi = data
            .chi
            .as_ref()
            .map(|t| TensorElement::from_data(algebra.clone(), t))
            .transpose()?;
        if let Some(r) = &rmatrix {
            if r.arity() != 2 {
                return Err(Error::InvalidBundle("rmatrix must have arity 2".into()));
            }
        }
        if let Some(c) = &chi {
            if c.arity() != 2 {
                return Err(Error::InvalidBundle("chi must have arity 2".into()));
            }
        }
        Ok(Bundle {
            qb,
            rmatrix,
            chi,
            metadata: data.metadata.clone(),
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_data())?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let data: BundleData = serde_json::from_str(text)?;
        Bundle::from_data(&data)
    }
}
