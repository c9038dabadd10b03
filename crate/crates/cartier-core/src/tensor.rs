//! Sparse elements of tensor powers `H^⊗k` and the operations identity
//! checks are phrased in: componentwise products, leg embeddings, flips,
//! exact inversion, and exponentials of nilpotent elements.
//!
//! Terms are kept in a sorted map keyed by basis-index tuples, so iteration
//! order and serialization are deterministic. Arity 0 is allowed internally
//! and plays the role of a bare scalar (the image arity of a counit).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{same_algebra, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::scalar::{GaussRat, HPoly};
use crate::solve::solve_sparse;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    algebra: Arc<FiniteAlgebra>,
    arity: usize,
    terms: BTreeMap<Vec<u16>, HPoly>,
}

/// Serialization mirror: a tensor without its algebra context.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TensorData {
    pub arity: usize,
    pub terms: Vec<TensorTermData>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TensorTermData {
    pub indices: Vec<u16>,
    pub coefficient: HPoly,
}

impl TensorElement {
    pub fn zero(algebra: Arc<FiniteAlgebra>, arity: usize) -> Self {
        TensorElement {
            algebra,
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1^{⊗arity}` of the tensor power algebra.
    pub fn unit(algebra: Arc<FiniteAlgebra>, arity: usize) -> Self {
        let order = algebra.truncation_order();
        let mut terms: Vec<(Vec<u16>, HPoly)> = vec![(Vec::new(), HPoly::one(order))];
        for _ in 0..arity {
            let mut next = Vec::new();
            for (prefix, c) in &terms {
                for (idx, uc) in algebra.unit() {
                    let mut key = prefix.clone();
                    key.push(*idx);
                    next.push((key, c * uc));
                }
            }
            terms = next;
        }
        let mut out = TensorElement::zero(algebra, arity);
        for (key, c) in terms {
            out.add_term(key, c);
        }
        out
    }

    /// Basis monomial `e_{i_1} ⊗ … ⊗ e_{i_k}` with coefficient 1.
    pub fn basis(algebra: Arc<FiniteAlgebra>, indices: &[u16]) -> Self {
        let one = HPoly::one(algebra.truncation_order());
        TensorElement::single(algebra, indices, one)
    }

    pub fn single(algebra: Arc<FiniteAlgebra>, indices: &[u16], coeff: HPoly) -> Self {
        let mut out = TensorElement::zero(algebra, indices.len());
        out.add_term(indices.to_vec(), coeff);
        out
    }

    pub fn from_data(algebra: Arc<FiniteAlgebra>, data: &TensorData) -> Result<Self> {
        let order = algebra.truncation_order();
        let dim = algebra.dim();
        let mut out = TensorElement::zero(algebra, data.arity);
        for term in &data.terms {
            if term.indices.len() != data.arity {
                return Err(Error::InvalidBundle(format!(
                    "tensor term has {} indices, expected arity {}",
                    term.indices.len(),
                    data.arity
                )));
            }
            if let Some(bad) = term.indices.iter().find(|i| **i as usize >= dim) {
                return Err(Error::InvalidBundle(format!(
                    "tensor index {bad} out of range for dimension {dim}"
                )));
            }
            if term.coefficient.order() != order {
                return Err(Error::InvalidBundle(format!(
                    "tensor coefficient order {} does not match algebra order {order}",
                    term.coefficient.order()
                )));
            }
            out.add_term(term.indices.clone(), term.coefficient.clone());
        }
        Ok(out)
    }

    pub fn to_data(&self) -> TensorData {
        TensorData {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TensorTermData {
                    indices: k.clone(),
                    coefficient: c.clone(),
                })
                .collect(),
        }
    }

    pub fn algebra(&self) -> &Arc<FiniteAlgebra> {
        &self.algebra
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u16>, HPoly> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: Vec<u16>, coeff: HPoly) {
        debug_assert_eq!(key.len(), self.arity);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += &coeff;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    fn assert_compatible(&self, rhs: &TensorElement) {
        assert_eq!(self.arity, rhs.arity, "tensor arity mismatch");
        assert!(
            same_algebra(&self.algebra, &rhs.algebra),
            "tensor algebra mismatch"
        );
    }

    pub fn scale(&self, c: &HPoly) -> Self {
        let mut out = TensorElement::zero(self.algebra.clone(), self.arity);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn scale_gauss(&self, c: &GaussRat) -> Self {
        let mut out = TensorElement::zero(self.algebra.clone(), self.arity);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.scale(c));
        }
        out
    }

    /// Places the k legs of `self` at `positions` (1-based, distinct) inside
    /// arity `m`, filling the remaining legs with the unit.
    pub fn embed_legs(&self, positions: &[usize], m: usize) -> Result<Self> {
        if positions.len() != self.arity
            || positions.iter().any(|p| *p == 0 || *p > m)
            || (1..positions.len()).any(|i| positions[i..].contains(&positions[i - 1]))
        {
            return Err(Error::BadPositions {
                positions: positions.to_vec(),
                arity: m,
            });
        }
        let occupied: Vec<bool> = {
            let mut v = vec![false; m];
            for p in positions {
                v[p - 1] = true;
            }
            v
        };
        let mut out = TensorElement::zero(self.algebra.clone(), m);
        for (key, coeff) in &self.terms {
            // Start from the placed legs, then fill free legs with the unit
            // expansion (cartesian product over its support).
            let mut partial: Vec<(Vec<Option<u16>>, HPoly)> = {
                let mut template = vec![None; m];
                for (l, p) in positions.iter().enumerate() {
                    template[p - 1] = Some(key[l]);
                }
                vec![(template, coeff.clone())]
            };
            for leg in 0..m {
                if occupied[leg] {
                    continue;
                }
                let mut next = Vec::new();
                for (template, c) in &partial {
                    for (idx, uc) in self.algebra.unit() {
                        let mut t = template.clone();
                        t[leg] = Some(*idx);
                        next.push((t, c * uc));
                    }
                }
                partial = next;
            }
            for (template, c) in partial {
                let key: Vec<u16> = template.into_iter().map(Option::unwrap).collect();
                out.add_term(key, c);
            }
        }
        Ok(out)
    }

    /// Reorders legs: leg `l` of the result is leg `perm[l]` placed there,
    /// i.e. `permute_legs(T, perm) = embed_legs(T, perm, arity)`.
    pub fn permute_legs(&self, perm: &[usize]) -> Result<Self> {
        self.embed_legs(perm, self.arity)
    }

    /// The flip `τ(a ⊗ b) = b ⊗ a` on arity-2 elements.
    pub fn flip(&self) -> Self {
        assert_eq!(self.arity, 2, "flip is defined on arity-2 elements");
        let mut out = TensorElement::zero(self.algebra.clone(), 2);
        for (k, c) in &self.terms {
            out.add_term(vec![k[1], k[0]], c.clone());
        }
        out
    }

    /// Outer product: `(a_1⊗…⊗a_j) ⊗ (b_1⊗…⊗b_k)`.
    pub fn outer(&self, rhs: &TensorElement) -> Self {
        assert!(
            same_algebra(&self.algebra, &rhs.algebra),
            "tensor algebra mismatch"
        );
        let mut out = TensorElement::zero(self.algebra.clone(), self.arity + rhs.arity);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let mut key = ka.clone();
                key.extend_from_slice(kb);
                out.add_term(key, ca * cb);
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &TensorElement) -> Self {
        &(self * rhs) - &(rhs * self)
    }

    /// Tensor keeping only the degree-`d` part of each coefficient, at the
    /// same truncation order.
    fn degree_slice(&self, d: usize) -> Self {
        let order = self.algebra.truncation_order();
        let mut out = TensorElement::zero(self.algebra.clone(), self.arity);
        for (k, c) in &self.terms {
            let g = c.coeff(d).clone();
            if !g.is_zero() {
                let mut coeffs = vec![GaussRat::zero(); order + 1];
                coeffs[d] = g;
                out.add_term(k.clone(), HPoly::from_coeffs(coeffs).unwrap());
            }
        }
        out
    }

    /// Coefficient of ħ^d as a tensor over the order-0 version of the algebra.
    pub fn h_coefficient(&self, d: usize) -> Self {
        let base = self.algebra.retruncate(0);
        let mut out = TensorElement::zero(base, self.arity);
        for (k, c) in &self.terms {
            let g = c.coeff(d).clone();
            if !g.is_zero() {
                out.add_term(k.clone(), HPoly::constant(g, 0));
            }
        }
        out
    }

    /// Same element over a re-truncated copy of its algebra.
    pub fn retruncate(&self, algebra: &Arc<FiniteAlgebra>) -> Self {
        let order = algebra.truncation_order();
        let mut out = TensorElement::zero(algebra.clone(), self.arity);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.retruncate(order));
        }
        out
    }

    fn flat_dim(&self) -> usize {
        self.algebra
            .dim()
            .checked_pow(self.arity as u32)
            .expect("tensor power dimension overflow")
    }

    fn flatten(&self, key: &[u16]) -> usize {
        let dim = self.algebra.dim();
        key.iter().fold(0usize, |acc, k| acc * dim + *k as usize)
    }

    fn unflatten(&self, mut flat: usize) -> Vec<u16> {
        let dim = self.algebra.dim();
        let mut key = vec![0u16; self.arity];
        for l in (0..self.arity).rev() {
            key[l] = (flat % dim) as u16;
            flat /= dim;
        }
        key
    }

    /// Exact two-sided inverse in `H^⊗k`, solved at ħ-degree 0 and corrected
    /// degree by degree with a finite Neumann series.
    pub fn invert(&self) -> Result<Self> {
        let order = self.algebra.truncation_order();
        let dim_flat = self.flat_dim();

        // Degree-0 coefficients only.
        let t0: Vec<(Vec<u16>, GaussRat)> = self
            .terms
            .iter()
            .filter(|(_, c)| !c.coeff(0).is_zero())
            .map(|(k, c)| (k.clone(), c.coeff(0).clone()))
            .collect();
        if t0.is_empty() {
            return Err(Error::NonInvertibleElement);
        }

        // Left-multiplication matrix of the degree-0 part, column by column.
        let mut cols: Vec<Vec<(usize, GaussRat)>> = vec![Vec::new(); dim_flat];
        for (col, slot) in cols.iter_mut().enumerate() {
            let target = self.unflatten(col);
            let mut acc: BTreeMap<usize, GaussRat> = BTreeMap::new();
            for (key, c) in &t0 {
                // Componentwise product e_{key[l]} · e_{target[l]}.
                let mut partial: Vec<(Vec<u16>, GaussRat)> = vec![(Vec::new(), c.clone())];
                for l in 0..self.arity {
                    let products = self.algebra.product_basis(key[l], target[l]);
                    if products.is_empty() {
                        partial.clear();
                        break;
                    }
                    let mut next = Vec::new();
                    for (prefix, pc) in &partial {
                        for (m, mc) in products {
                            let g0 = mc.coeff(0);
                            if g0.is_zero() {
                                continue;
                            }
                            let mut p = prefix.clone();
                            p.push(*m);
                            next.push((p, pc * g0));
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for (k, v) in partial {
                    let row = self.flatten(&k);
                    match acc.get_mut(&row) {
                        Some(s) => *s += &v,
                        None => {
                            acc.insert(row, v);
                        }
                    }
                }
            }
            *slot = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }

        let unit = TensorElement::unit(self.algebra.clone(), self.arity);
        let rhs: Vec<(usize, GaussRat)> = unit
            .terms
            .iter()
            .map(|(k, c)| (self.flatten(k), c.coeff(0).clone()))
            .collect();

        let solution = solve_sparse(dim_flat, &cols, &rhs).ok_or(Error::NonInvertibleElement)?;
        let mut s0 = TensorElement::zero(self.algebra.clone(), self.arity);
        for (flat, g) in solution {
            s0.add_term(self.unflatten(flat), HPoly::constant(g, order));
        }

        let inv = if order == 0 {
            s0
        } else {
            // self = T₀ + T₊, s0·self = 1 + Y with Y of positive valuation;
            // (1 + Y)^{-1} = Σ (−Y)^j terminates at the truncation order.
            let y = &(&s0 * self) - &unit;
            let neg_y = -&y;
            let mut acc = unit.clone();
            let mut pow = unit.clone();
            for _ in 1..=order {
                pow = &pow * &neg_y;
                if pow.is_zero() {
                    break;
                }
                acc = &acc + &pow;
            }
            &acc * &s0
        };

        if &(&inv * self) != &unit || &(self * &inv) != &unit {
            return Err(Error::NonInvertibleElement);
        }
        Ok(inv)
    }

    /// Exponential `Σ T^j / j!`. Requires the degree-0 part to be nilpotent
    /// (probed by repeated squaring up to the flat dimension) so that the
    /// series terminates exactly; never truncates silently.
    pub fn exp(&self) -> Result<Self> {
        let order = self.algebra.truncation_order();
        let bound = self.flat_dim();
        let t0 = self.degree_slice(0);
        if !t0.is_zero() {
            let mut s = t0;
            let mut e: usize = 1;
            while !s.is_zero() {
                if e >= bound {
                    return Err(Error::NotNilpotent { bound });
                }
                s = &s * &s;
                e = e.saturating_mul(2);
            }
        }
        let unit = TensorElement::unit(self.algebra.clone(), self.arity);
        let mut acc = unit.clone();
        let mut term = unit;
        let max_steps = bound * (order + 1) + 1;
        for j in 1..=max_steps {
            term = (&term * self).scale_gauss(&GaussRat::ratio(1, j as i64));
            if term.is_zero() {
                return Ok(acc);
            }
            acc = &acc + &term;
        }
        Err(Error::NotNilpotent { bound })
    }

    /// Applies an algebra morphism to one leg (1-based), splicing the image
    /// in place; the arity changes by `target_arity - 1`.
    pub fn apply_morphism_leg(
        &self,
        leg: usize,
        phi: &crate::morphism::AlgebraMorphism,
    ) -> Result<Self> {
        if leg == 0 || leg > self.arity {
            return Err(Error::LegOutOfRange {
                leg,
                arity: self.arity,
            });
        }
        assert!(
            same_algebra(&self.algebra, phi.algebra()),
            "morphism source algebra mismatch"
        );
        let new_arity = self.arity - 1 + phi.target_arity();
        let mut out = TensorElement::zero(self.algebra.clone(), new_arity);
        for (key, coeff) in &self.terms {
            let image = phi.image(key[leg - 1]);
            for (ikey, icoeff) in image.terms() {
                let mut k = Vec::with_capacity(new_arity);
                k.extend_from_slice(&key[..leg - 1]);
                k.extend_from_slice(ikey);
                k.extend_from_slice(&key[leg..]);
                out.add_term(k, coeff * icoeff);
            }
        }
        Ok(out)
    }
}

impl Mul for &TensorElement {
    type Output = TensorElement;

    /// Componentwise product in `H^⊗k`.
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.assert_compatible(rhs);
        let mut out = TensorElement::zero(self.algebra.clone(), self.arity);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let c = ca * cb;
                if c.is_zero() {
                    continue;
                }
                let mut partial: Vec<(Vec<u16>, HPoly)> = vec![(Vec::new(), c)];
                for l in 0..self.arity {
                    let products = self.algebra.product_basis(ka[l], kb[l]);
                    if products.is_empty() {
                        partial.clear();
                        break;
                    }
                    let mut next = Vec::new();
                    for (prefix, pc) in &partial {
                        for (m, mc) in products {
                            let npc = pc * mc;
                            if npc.is_zero() {
                                continue;
                            }
                            let mut p = prefix.clone();
                            p.push(*m);
                            next.push((p, npc));
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for (k, v) in partial {
                    out.add_term(k, v);
                }
            }
        }
        out
    }
}

impl Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        let mut out = TensorElement::zero(self.algebra.clone(), self.arity);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k.is_empty() {
                write!(f, "({c})")?;
            } else {
                let labels: Vec<&str> = k.iter().map(|i| self.algebra.label(*i)).collect();
                write!(f, "({c})·{}", labels.join("⊗"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{dual_numbers, z2_algebra};

    #[test]
    fn unit_is_neutral() {
        let a = Arc::new(z2_algebra(1));
        let u = TensorElement::unit(a.clone(), 2);
        let t = TensorElement::basis(a.clone(), &[1, 0]);
        assert_eq!(&(&u * &t), &t);
        assert_eq!(&(&t * &u), &t);
    }

    #[test]
    fn group_like_squares_to_unit() {
        let a = Arc::new(z2_algebra(0));
        let gg = TensorElement::basis(a.clone(), &[1, 1]);
        let u = TensorElement::unit(a, 2);
        assert_eq!(&(&gg * &gg), &u);
    }

    #[test]
    fn nilpotent_squares_to_zero() {
        let a = Arc::new(dual_numbers(0));
        let xx = TensorElement::basis(a, &[1, 1]);
        assert!((&xx * &xx).is_zero());
    }

    #[test]
    fn embed_legs_matches_brute_force() {
        let a = Arc::new(z2_algebra(0));
        // x⊗y placed at legs (3,1) of arity 3: term (i,j) goes to key (j,0,i)
        // because the free leg 2 is the unit e₀.
        let t = TensorElement::basis(a.clone(), &[1, 0]);
        let e = t.embed_legs(&[3, 1], 3).unwrap();
        let expected = TensorElement::basis(a, &[0, 0, 1]);
        assert_eq!(e, expected);
    }

    #[test]
    fn embed_legs_rejects_bad_positions() {
        let a = Arc::new(z2_algebra(0));
        let t = TensorElement::basis(a, &[1, 0]);
        assert!(t.embed_legs(&[1, 1], 3).is_err());
        assert!(t.embed_legs(&[0, 2], 3).is_err());
        assert!(t.embed_legs(&[1, 4], 3).is_err());
        assert!(t.embed_legs(&[1], 3).is_err());
    }

    #[test]
    fn flip_matches_permuted_embedding() {
        let a = Arc::new(z2_algebra(0));
        let mut t = TensorElement::basis(a.clone(), &[1, 0]);
        t = &t + &TensorElement::single(a, &[0, 1], HPoly::constant(GaussRat::from_int(3), 0));
        assert_eq!(t.flip(), t.embed_legs(&[2, 1], 2).unwrap());
        assert_eq!(t.flip().flip(), t);
    }

    #[test]
    fn invert_group_like() {
        let a = Arc::new(z2_algebra(2));
        // 1⊗g is its own inverse.
        let t = TensorElement::basis(a.clone(), &[0, 1]);
        assert_eq!(t.invert().unwrap(), t);
    }

    #[test]
    fn invert_with_h_correction() {
        let a = Arc::new(dual_numbers(2));
        // (1 + ħ·x)^{-1} = 1 - ħ·x  since x² = 0.
        let one = TensorElement::unit(a.clone(), 1);
        let hx = TensorElement::single(a.clone(), &[1], HPoly::hbar(2));
        let t = &one + &hx;
        let inv = t.invert().unwrap();
        assert_eq!(inv, &one - &hx);
    }

    #[test]
    fn invert_rejects_nilpotent() {
        let a = Arc::new(dual_numbers(0));
        let x = TensorElement::basis(a, &[1]);
        assert!(matches!(x.invert(), Err(Error::NonInvertibleElement)));
    }

    #[test]
    fn exp_of_nilpotent_terminates() {
        let a = Arc::new(dual_numbers(0));
        // exp(x⊗x) = 1 + x⊗x.
        let xx = TensorElement::basis(a.clone(), &[1, 1]);
        let expected = &TensorElement::unit(a, 2) + &xx;
        assert_eq!(xx.exp().unwrap(), expected);
    }

    #[test]
    fn exp_rejects_non_nilpotent() {
        let a = Arc::new(z2_algebra(0));
        // g⊗g squares to the unit: not nilpotent, no ħ either.
        let gg = TensorElement::basis(a, &[1, 1]);
        assert!(matches!(gg.exp(), Err(Error::NotNilpotent { .. })));
    }

    #[test]
    fn exp_h_multiple_of_non_nilpotent() {
        let a = Arc::new(z2_algebra(2));
        // exp(ħ·g) = 1 + ħ·g + ħ²/2 at order 2 (g² = 1).
        let hg = TensorElement::single(a.clone(), &[1], HPoly::hbar(2));
        let got = hg.exp().unwrap();
        let mut expected = TensorElement::unit(a.clone(), 1);
        expected = &expected + &hg;
        expected = &expected
            + &TensorElement::single(
                a,
                &[0],
                HPoly::monomial(GaussRat::ratio(1, 2), 2, 2),
            );
        assert_eq!(got, expected);
    }

    #[test]
    fn exp_is_homomorphism_on_commuting_nilpotents() {
        let a = Arc::new(dual_numbers(1));
        let s = TensorElement::basis(a.clone(), &[1, 0]);
        let t = TensorElement::basis(a.clone(), &[0, 1]);
        // x⊗1 and 1⊗x commute.
        assert!(s.commutator(&t).is_zero());
        let lhs = &s.exp().unwrap() * &t.exp().unwrap();
        let rhs = (&s + &t).exp().unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn serde_data_round_trip() {
        let a = Arc::new(z2_algebra(1));
        let t = &TensorElement::basis(a.clone(), &[1, 0])
            + &TensorElement::single(a.clone(), &[0, 1], HPoly::hbar(1));
        let data = t.to_data();
        let json = serde_json::to_string(&data).unwrap();
        let parsed: TensorData = serde_json::from_str(&json).unwrap();
        assert_eq!(TensorElement::from_data(a, &parsed).unwrap(), t);
    }

    #[test]
    fn arity_zero_acts_as_scalar() {
        let a = Arc::new(z2_algebra(0));
        let s = TensorElement::single(a.clone(), &[], HPoly::constant(GaussRat::from_int(2), 0));
        let t = TensorElement::single(a, &[], HPoly::constant(GaussRat::from_int(3), 0));
        let p = &s * &t;
        assert_eq!(
            p.terms().get(&Vec::new()).unwrap(),
            &HPoly::constant(GaussRat::from_int(6), 0)
        );
    }
}
