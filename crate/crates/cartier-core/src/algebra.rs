//! Finite-dimensional associative unital algebras presented by sparse
//! structure constants: `e_i · e_j = Σ_k c_{ij}^k e_k`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::HPoly;

/// Sparse linear combination of basis elements, sorted by index.
pub type SparseVec = Vec<(u16, HPoly)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    dim: usize,
    truncation_order: usize,
    basis_labels: Vec<String>,
    unit: SparseVec,
    structure: BTreeMap<(u16, u16), SparseVec>,
}

fn normalize_sparse(v: SparseVec, dim: usize, order: usize) -> Result<SparseVec> {
    let mut map: BTreeMap<u16, HPoly> = BTreeMap::new();
    for (idx, coeff) in v {
        if idx as usize >= dim {
            return Err(Error::InvalidBundle(format!(
                "basis index {idx} out of range for dimension {dim}"
            )));
        }
        if coeff.order() != order {
            return Err(Error::InvalidBundle(format!(
                "coefficient order {} does not match truncation order {order}",
                coeff.order()
            )));
        }
        match map.get_mut(&idx) {
            Some(slot) => *slot += &coeff,
            None => {
                map.insert(idx, coeff);
            }
        }
    }
    Ok(map.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

impl FiniteAlgebra {
    pub fn new(
        basis_labels: Vec<String>,
        unit: SparseVec,
        structure: BTreeMap<(u16, u16), SparseVec>,
        truncation_order: usize,
    ) -> Result<Self> {
        let dim = basis_labels.len();
        if dim == 0 || dim > u16::MAX as usize {
            return Err(Error::InvalidBundle(format!("unsupported dimension {dim}")));
        }
        let unit = normalize_sparse(unit, dim, truncation_order)?;
        if unit.is_empty() {
            return Err(Error::InvalidBundle("unit element is zero".into()));
        }
        let mut cleaned = BTreeMap::new();
        for ((i, j), products) in structure {
            if i as usize >= dim || j as usize >= dim {
                return Err(Error::InvalidBundle(format!(
                    "structure constant index ({i},{j}) out of range"
                )));
            }
            let products = normalize_sparse(products, dim, truncation_order)?;
            if !products.is_empty() {
                cleaned.insert((i, j), products);
            }
        }
        Ok(FiniteAlgebra {
            dim,
            truncation_order,
            basis_labels,
            unit,
            structure: cleaned,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn truncation_order(&self) -> usize {
        self.truncation_order
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn label(&self, i: u16) -> &str {
        &self.basis_labels[i as usize]
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    /// Expansion of `e_i · e_j`; empty slice means the product is zero.
    pub fn product_basis(&self, i: u16, j: u16) -> &[(u16, HPoly)] {
        self.structure
            .get(&(i, j))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn structure_constants(&self) -> &BTreeMap<(u16, u16), SparseVec> {
        &self.structure
    }

    /// Product of two sparse combinations of basis elements.
    pub fn mul_sparse(&self, a: &[(u16, HPoly)], b: &[(u16, HPoly)]) -> SparseVec {
        let mut out: BTreeMap<u16, HPoly> = BTreeMap::new();
        for (i, ci) in a {
            for (j, cj) in b {
                let c = ci * cj;
                if c.is_zero() {
                    continue;
                }
                for (k, ck) in self.product_basis(*i, *j) {
                    let term = &c * ck;
                    match out.get_mut(k) {
                        Some(slot) => *slot += &term,
                        None => {
                            out.insert(*k, term);
                        }
                    }
                }
            }
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// First basis triple where `(e_i e_j) e_k ≠ e_i (e_j e_k)`, if any.
    pub fn associativity_witness(&self) -> Option<(u16, u16, u16)> {
        let one = HPoly::one(self.truncation_order);
        for i in 0..self.dim as u16 {
            for j in 0..self.dim as u16 {
                let ij = self.product_basis(i, j).to_vec();
                for k in 0..self.dim as u16 {
                    let lhs = self.mul_sparse(&ij, &[(k, one.clone())]);
                    let rhs = self.mul_sparse(&[(i, one.clone())], self.product_basis(j, k));
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First basis element where the unit laws fail, if any.
    pub fn unit_witness(&self) -> Option<u16> {
        let one = HPoly::one(self.truncation_order);
        (0..self.dim as u16).find(|&i| {
            let e = vec![(i, one.clone())];
            self.mul_sparse(&self.unit, &e) != e || self.mul_sparse(&e, &self.unit) != e
        })
    }

    pub fn is_associative_unital(&self) -> bool {
        self.associativity_witness().is_none() && self.unit_witness().is_none()
    }

    /// Same presentation at a different truncation order.
    pub fn retruncate(&self, order: usize) -> Arc<FiniteAlgebra> {
        let retrunc = |v: &SparseVec| -> SparseVec {
            v.iter()
                .map(|(i, c)| (*i, c.retruncate(order)))
                .filter(|(_, c)| !c.is_zero())
                .collect()
        };
        Arc::new(FiniteAlgebra {
            dim: self.dim,
            truncation_order: order,
            basis_labels: self.basis_labels.clone(),
            unit: retrunc(&self.unit),
            structure: self
                .structure
                .iter()
                .map(|(k, v)| (*k, retrunc(v)))
                .filter(|(_, v)| !v.is_empty())
                .collect(),
        })
    }
}

/// Two algebra handles agree: pointer-equal or structurally equal.
pub fn same_algebra(a: &Arc<FiniteAlgebra>, b: &Arc<FiniteAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    index: u16,
    coefficient: HPoly,
}

#[derive(Serialize, Deserialize)]
struct ProductJson {
    left: u16,
    right: u16,
    products: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    truncation_order: usize,
    basis_labels: Vec<String>,
    unit: Vec<TermJson>,
    structure_constants: Vec<ProductJson>,
}

impl Serialize for FiniteAlgebra {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let to_terms = |v: &SparseVec| {
            v.iter()
                .map(|(i, c)| TermJson {
                    index: *i,
                    coefficient: c.clone(),
                })
                .collect::<Vec<_>>()
        };
        AlgebraJson {
            dim: self.dim,
            truncation_order: self.truncation_order,
            basis_labels: self.basis_labels.clone(),
            unit: to_terms(&self.unit),
            structure_constants: self
                .structure
                .iter()
                .map(|((i, j), v)| ProductJson {
                    left: *i,
                    right: *j,
                    products: to_terms(v),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteAlgebra {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let data = AlgebraJson::deserialize(deserializer)?;
        if data.basis_labels.len() != data.dim {
            return Err(D::Error::custom("basis label count does not match dim"));
        }
        let from_terms = |v: Vec<TermJson>| -> SparseVec {
            v.into_iter().map(|t| (t.index, t.coefficient)).collect()
        };
        let structure = data
            .structure_constants
            .into_iter()
            .map(|p| ((p.left, p.right), from_terms(p.products)))
            .collect();
        FiniteAlgebra::new(
            data.basis_labels,
            from_terms(data.unit),
            structure,
            data.truncation_order,
        )
        .map_err(D::Error::custom)
    }
}
