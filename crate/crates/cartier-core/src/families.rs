//! Built-in families of quasitriangular (pre-Cartier) quasi-bialgebras.
//!
//! Two families are provided:
//!
//! * `E(n)` — the 2^{n+1}-dimensional pointed Hopf algebras generated by a
//!   group-like `g` and anticommuting skew-primitives `x_1, …, x_n` subject
//!   to `g² = 1`, `x_i g = −g x_i`, `x_j x_i = −x_i x_j` (so `x_i² = 0`).
//!   `E(1)` is Sweedler's four-dimensional Hopf algebra.  Every member
//!   carries a family of R-matrices `R_(a)` indexed by an `n×n` matrix `a`
//!   and a family of infinitesimal R-matrices `χ_(b)` indexed by `b`;
//!   [`build_en`] assembles the whole bundle and [`build_en_twisted`] its
//!   gauge twist by `F = 1⊗g`, which has the nontrivial reassociator
//!   `1⊗1⊗g`.
//! * `H(2)` — the group algebra of ℤ/2 equipped with the reassociator
//!   `1⊗1⊗1 − 2p₋⊗p₋⊗p₋` (where `p₋ = ½(1−g)`) and one of its two
//!   R-matrices `R_± = 1⊗1 − (1±i)p₋⊗p₋`.
//!
//! Everything here is exact and deterministic; builders panic only on
//! malformed dimensions, never on the algebra itself.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::FiniteAlgebra;
use crate::morphism::AlgebraMorphism;
use crate::precartier::PreCartier;
use crate::quasibialgebra::{gauge_twist, QuasiBialgebra, QuasiTriangular};
use crate::scalar::{GaussRat, HPoly};
use crate::tensor::TensorElement;

/// Parameters selecting one member of the `E(n)` family: the number of
/// anticommuting generators together with the coefficient matrix `a` of the
/// R-matrix `R_(a)` and the coefficient matrix `b` of the infinitesimal
/// R-matrix `χ_(b) = Σ b_{kl} g x_k ⊗ x_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnSpec {
    n: usize,
    a: Vec<Vec<GaussRat>>,
    b: Vec<Vec<GaussRat>>,
}

impl EnSpec {
    /// # Panics
    ///
    /// Panics unless `1 ≤ n ≤ 14` (the basis is indexed by `u16`) and both
    /// matrices are `n×n`.
    pub fn new(n: usize, a: Vec<Vec<GaussRat>>, b: Vec<Vec<GaussRat>>) -> Self {
        assert!(n >= 1, "E(n) needs at least one generator");
        assert!(n <= 14, "E(n) basis indices must fit in u16");
        for (name, m) in [("a", &a), ("b", &b)] {
            assert!(
                m.len() == n && m.iter().all(|row| row.len() == n),
                "coefficient matrix {name} must be {n}x{n}"
            );
        }
        EnSpec { n, a, b }
    }

    /// The member with `a = b = 0`: the bare half-sum R-matrix and `χ = 0`.
    pub fn zero(n: usize) -> Self {
        let row = vec![GaussRat::zero(); n];
        EnSpec::new(n, vec![row.clone(); n], vec![row; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[Vec<GaussRat>] {
        &self.a
    }

    pub fn b(&self) -> &[Vec<GaussRat>] {
        &self.b
    }
}

/// A basis monomial of `E(n)`: an optional leading `g` followed by a strictly
/// ascending product of generators `x_i`.
///
/// Flat indices enumerate the `g`-free monomials first, ordered by subset
/// mask (bit `i−1` ⇔ `x_i` present), then the same subsets with `g` in
/// front: `1, x1, x2, x1x2, …, g, gx1, gx2, gx1x2, …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnBasisIndex {
    pub g_flag: bool,
    /// Generator indices in `1..=n`, strictly ascending.
    pub subset: Vec<usize>,
}

impl EnBasisIndex {
    pub fn from_flat(index: u16, n: usize) -> Self {
        assert!((index as usize) < (1 << (n + 1)), "basis index out of range");
        let mask = (index as usize) & ((1 << n) - 1);
        EnBasisIndex {
            g_flag: (index as usize) >> n == 1,
            subset: (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
        }
    }

    pub fn flat(&self, n: usize) -> u16 {
        let mut mask = 0usize;
        for &i in &self.subset {
            assert!((1..=n).contains(&i), "generator index out of range");
            mask |= 1 << (i - 1);
        }
        (((self.g_flag as usize) << n) | mask) as u16
    }

    pub fn label(&self) -> String {
        let mut out = String::new();
        if self.g_flag {
            out.push('g');
        }
        for &i in &self.subset {
            out.push('x');
            out.push_str(&i.to_string());
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

/// Product of two basis monomials in mask form.  Returns `None` when a
/// generator repeats (it squares to zero); otherwise the result index and the
/// sign collected from moving `g` across generators and sorting the merged
/// word.
fn en_monomial_product(n: usize, i: usize, j: usize) -> Option<(usize, bool)> {
    let gen_mask = (1usize << n) - 1;
    let (mi, mj) = (i & gen_mask, j & gen_mask);
    if mi & mj != 0 {
        return None;
    }
    let (gi, gj) = (i >> n, j >> n);
    // g^{gj} crosses every generator of the left word; each crossing flips
    // the sign once.
    let mut flips = gj * mi.count_ones() as usize;
    // Interleave the two ascending words: each pair s ∈ left, t ∈ right with
    // s > t costs one transposition.
    for s in 0..n {
        if mi >> s & 1 == 1 {
            flips += (mj & ((1 << s) - 1)).count_ones() as usize;
        }
    }
    let index = ((gi + gj) % 2) << n | (mi | mj);
    Some((index, flips % 2 == 1))
}

/// The algebra underlying `E(n)`, truncated at the given ħ-order.
pub fn en_algebra(n: usize, order: usize) -> Arc<FiniteAlgebra> {
    assert!((1..=14).contains(&n), "E(n) needs 1 ≤ n ≤ 14");
    let dim = 1usize << (n + 1);
    let labels = (0..dim)
        .map(|i| EnBasisIndex::from_flat(i as u16, n).label())
        .collect();
    let mut structure = BTreeMap::new();
    for i in 0..dim {
        for j in 0..dim {
            if let Some((k, negative)) = en_monomial_product(n, i, j) {
                let coeff = if negative {
                    -&GaussRat::one()
                } else {
                    GaussRat::one()
                };
                structure.insert(
                    (i as u16, j as u16),
                    vec![(k as u16, HPoly::constant(coeff, order))],
                );
            }
        }
    }
    let unit = vec![(0u16, HPoly::one(order))];
    Arc::new(
        FiniteAlgebra::new(labels, unit, structure, order)
            .expect("monomial structure constants are well-formed"),
    )
}

fn en_coproduct(algebra: &Arc<FiniteAlgebra>, n: usize) -> AlgebraMorphism {
    let g = (1usize << n) as u16;
    let delta_g = TensorElement::basis(algebra.clone(), &[g, g]);
    let images = (0..algebra.dim())
        .map(|idx| {
            let monomial = EnBasisIndex::from_flat(idx as u16, n);
            let mut image = if monomial.g_flag {
                delta_g.clone()
            } else {
                TensorElement::unit(algebra.clone(), 2)
            };
            for &i in &monomial.subset {
                let xi = (1usize << (i - 1)) as u16;
                let primitive = &TensorElement::basis(algebra.clone(), &[xi, 0])
                    + &TensorElement::basis(algebra.clone(), &[g, xi]);
                image = &image * &primitive;
            }
            image
        })
        .collect();
    AlgebraMorphism::new(algebra.clone(), 2, images)
        .expect("coproduct images are built over the same algebra")
}

fn en_counit(algebra: &Arc<FiniteAlgebra>, n: usize) -> AlgebraMorphism {
    let images = (0..algebra.dim())
        .map(|idx| {
            if EnBasisIndex::from_flat(idx as u16, n).subset.is_empty() {
                TensorElement::unit(algebra.clone(), 0)
            } else {
                TensorElement::zero(algebra.clone(), 0)
            }
        })
        .collect();
    AlgebraMorphism::new(algebra.clone(), 0, images)
        .expect("counit images are built over the same algebra")
}

/// `Σ c_{kl} g x_k ⊗ x_l` for an `n×n` coefficient matrix.
fn en_pairing_tensor(algebra: &Arc<FiniteAlgebra>, n: usize, c: &[Vec<GaussRat>]) -> TensorElement {
    let g = 1usize << n;
    let order = algebra.truncation_order();
    let mut out = TensorElement::zero(algebra.clone(), 2);
    for k in 1..=n {
        for l in 1..=n {
            let coeff = &c[k - 1][l - 1];
            if coeff.is_zero() {
                continue;
            }
            let term = TensorElement::single(
                algebra.clone(),
                &[(g | 1 << (k - 1)) as u16, (1 << (l - 1)) as u16],
                HPoly::constant(coeff.clone(), order),
            );
            out = &out + &term;
        }
    }
    out
}

/// `½(1⊗1 + 1⊗g + g⊗1 − g⊗g)` — the R-matrix of the group-like part.
fn en_half_sum(algebra: &Arc<FiniteAlgebra>, n: usize) -> TensorElement {
    let g = (1usize << n) as u16;
    let order = algebra.truncation_order();
    let half = HPoly::constant(GaussRat::ratio(1, 2), order);
    let term = |a: u16, b: u16, c: &HPoly| {
        TensorElement::single(algebra.clone(), &[a, b], c.clone())
    };
    let neg_half = -&half;
    let mut sum = term(0, 0, &half);
    sum = &sum + &term(0, g, &half);
    sum = &sum + &term(g, 0, &half);
    &sum + &term(g, g, &neg_half)
}

/// Builds the pre-Cartier Hopf algebra `(E(n), R_(a), χ_(b))` with trivial
/// reassociator, where `R_(a) = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)·exp(Σ a_{ij} g x_i ⊗ x_j)`
/// and `χ_(b) = Σ b_{kl} g x_k ⊗ x_l`.
pub fn build_en(spec: &EnSpec, order: usize) -> PreCartier {
    let algebra = en_algebra(spec.n, order);
    let coproduct = en_coproduct(&algebra, spec.n);
    let counit = en_counit(&algebra, spec.n);
    let base = QuasiBialgebra::new(
        coproduct,
        counit,
        TensorElement::unit(algebra.clone(), 3),
        TensorElement::unit(algebra.clone(), 1),
        TensorElement::unit(algebra.clone(), 1),
    )
    .expect("trivial reassociator and unit constraints are invertible");
    let exponential = en_pairing_tensor(&algebra, spec.n, &spec.a)
        .exp()
        .expect("the exponent is nilpotent: every term kills itself");
    let rmatrix = &en_half_sum(&algebra, spec.n) * &exponential;
    let qt = QuasiTriangular::new(base, rmatrix)
        .expect("R_(a) factors into two invertible elements");
    let chi = en_pairing_tensor(&algebra, spec.n, &spec.b);
    PreCartier::new(qt, chi).expect("χ_(b) has arity 2 over the same algebra")
}

/// Gauge-twists [`build_en`] by `F = 1⊗g`, producing the quasi-bialgebra
/// with reassociator `1⊗1⊗g`, coproduct `Δ_F(x_i) = x_i⊗1 − g⊗x_i`, and
/// R-matrix `−½(1⊗1 − 1⊗g − g⊗1 − g⊗g)·exp(−Σ a_{ij} g x_i ⊗ x_j)`.
///
/// The infinitesimal R-matrix is kept as the untwisted `χ_(b)`: conjugating
/// by `F` sends `χ_(b)` to `χ_(−b)`, so the twisted family is the same family
/// again and `spec.b` parametrizes it directly.
pub fn build_en_twisted(spec: &EnSpec, order: usize) -> PreCartier {
    let plain = build_en(spec, order);
    let g = (1usize << spec.n) as u16;
    let f = TensorElement::basis(plain.algebra().clone(), &[0, g]);
    let qt = gauge_twist(plain.qt(), &f).expect("1⊗g is invertible");
    PreCartier::new(qt, plain.chi().clone()).expect("χ_(b) survives the twist unchanged")
}

/// Determinant over ℚ(i) by Laplace expansion along the first row; the empty
/// matrix has determinant 1.  Intended for the small minors appearing in
/// [`rmatrix_power_closed_form`].
fn det(m: &[Vec<GaussRat>]) -> GaussRat {
    if m.is_empty() {
        return GaussRat::one();
    }
    let mut acc = GaussRat::zero();
    for (col, pivot) in m[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<GaussRat>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = pivot * &det(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Closed form of `(Σ a_{ij} g x_i ⊗ x_j)^k` in `E(n)`:
///
/// ```text
/// k! · Σ_{P,F ⊆ {1..n}, |P|=|F|=k} (−1)^{k(k−1)/2} det(a[P,F]) · g^k x_P ⊗ x_F
/// ```
///
/// where `a[P,F]` is the submatrix with rows `P` and columns `F`, both
/// written ascending.  For `k > n` every term repeats a generator, so the
/// result is zero.  [`build_en`] raises the same tensor to the `k`-th power
/// directly, which makes each computation an oracle for the other.
pub fn rmatrix_power_closed_form(
    a_matrix: &[Vec<GaussRat>],
    k: usize,
    order: usize,
) -> TensorElement {
    let n = a_matrix.len();
    assert!(
        n >= 1 && a_matrix.iter().all(|row| row.len() == n),
        "coefficient matrix must be square and nonempty"
    );
    let algebra = en_algebra(n, order);
    let mut out = TensorElement::zero(algebra.clone(), 2);
    if k > n {
        return out;
    }
    let mut scale = GaussRat::one();
    for t in 1..=k {
        scale = &scale * &GaussRat::from_int(t as i64);
    }
    if (k * (k.max(1) - 1) / 2) % 2 == 1 {
        scale = -&scale;
    }
    let g_part = if k % 2 == 1 { 1usize << n } else { 0 };
    let masks: Vec<usize> = (0..1usize << n)
        .filter(|m| m.count_ones() as usize == k)
        .collect();
    for &p_mask in &masks {
        let rows: Vec<usize> = (0..n).filter(|i| p_mask >> i & 1 == 1).collect();
        for &f_mask in &masks {
            let cols: Vec<usize> = (0..n).filter(|j| f_mask >> j & 1 == 1).collect();
            let submatrix: Vec<Vec<GaussRat>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| a_matrix[r][c].clone()).collect())
                .collect();
            let minor = det(&submatrix);
            if minor.is_zero() {
                continue;
            }
            let term = TensorElement::single(
                algebra.clone(),
                &[(g_part | p_mask) as u16, f_mask as u16],
                HPoly::constant(&scale * &minor, order),
            );
            out = &out + &term;
        }
    }
    out
}

/// Selects one of the two R-matrices `R_± = 1⊗1 − (1±i)p₋⊗p₋` of `H(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H2Sign {
    Plus,
    Minus,
}

impl H2Sign {
    /// The coefficient `1 ± i` in front of `p₋⊗p₋`.
    pub fn r_coefficient(&self) -> GaussRat {
        match self {
            H2Sign::Plus => &GaussRat::one() + &GaussRat::i(),
            H2Sign::Minus => &GaussRat::one() - &GaussRat::i(),
        }
    }
}

impl std::fmt::Display for H2Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            H2Sign::Plus => "+",
            H2Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for H2Sign {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" | "plus" => Ok(H2Sign::Plus),
            "-" | "minus" => Ok(H2Sign::Minus),
            other => Err(crate::error::Error::Parse(format!(
                "unknown sign {other:?}, expected \"+\" or \"-\""
            ))),
        }
    }
}

/// Builds `H(2)`: the group algebra of ℤ/2 with reassociator
/// `1⊗1⊗1 − 2p₋⊗p₋⊗p₋` for the idempotent `p₋ = ½(1−g)`, trivial unit
/// constraints, and the chosen R-matrix `R_±`.
pub fn build_h2(sign: H2Sign, order: usize) -> QuasiTriangular {
    let labels = vec!["1".to_string(), "g".to_string()];
    let one = HPoly::one(order);
    let structure = BTreeMap::from([
        ((0u16, 0u16), vec![(0u16, one.clone())]),
        ((0, 1), vec![(1, one.clone())]),
        ((1, 0), vec![(1, one.clone())]),
        ((1, 1), vec![(0, one.clone())]),
    ]);
    let algebra = Arc::new(
        FiniteAlgebra::new(labels, vec![(0, one.clone())], structure, order)
            .expect("the group algebra of ℤ/2 is well-formed"),
    );
    let coproduct = AlgebraMorphism::new(
        algebra.clone(),
        2,
        vec![
            TensorElement::unit(algebra.clone(), 2),
            TensorElement::basis(algebra.clone(), &[1, 1]),
        ],
    )
    .expect("group-like coproduct");
    let counit = AlgebraMorphism::new(
        algebra.clone(),
        0,
        vec![
            TensorElement::unit(algebra.clone(), 0),
            TensorElement::unit(algebra.clone(), 0),
        ],
    )
    .expect("counit sends both group elements to 1");
    let half = HPoly::constant(GaussRat::ratio(1, 2), order);
    let p_minus = &TensorElement::single(algebra.clone(), &[0], half.clone())
        - &TensorElement::single(algebra.clone(), &[1], half);
    let p_cube = p_minus.outer(&p_minus).outer(&p_minus);
    let reassociator = &TensorElement::unit(algebra.clone(), 3)
        - &p_cube.scale(&HPoly::constant(GaussRat::from_int(2), order));
    let base = QuasiBialgebra::new(
        coproduct,
        counit,
        reassociator,
        TensorElement::unit(algebra.clone(), 1),
        TensorElement::unit(algebra.clone(), 1),
    )
    .expect("the reassociator of H(2) is invertible");
    let rmatrix = &TensorElement::unit(algebra.clone(), 2)
        - &p_minus
            .outer(&p_minus)
            .scale(&HPoly::constant(sign.r_coefficient(), order));
    QuasiTriangular::new(base, rmatrix).expect("R_± is invertible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precartier::{quantize, verify_cartier, verify_precartier, Scale};
    use crate::quasibialgebra::{
        check_triangular, verify_quasibialgebra, verify_quasitriangular,
    };
    use crate::error::Error;

    fn gr(p: i64, q: i64) -> GaussRat {
        GaussRat::ratio(p, q)
    }

    fn matrix(entries: &[&[i64]]) -> Vec<Vec<GaussRat>> {
        entries
            .iter()
            .map(|row| row.iter().map(|&v| GaussRat::from_int(v)).collect())
            .collect()
    }

    /// Independent oracle for the product: write both monomials as letter
    /// sequences and rewrite to normal form one adjacent swap at a time.
    #[derive(Clone, Copy, PartialEq)]
    enum Letter {
        G,
        X(usize),
    }

    fn rewrite_to_normal_form(mut word: Vec<Letter>) -> Option<(Vec<Letter>, i64)> {
        let mut sign = 1i64;
        'scan: loop {
            for k in 0..word.len().saturating_sub(1) {
                match (word[k], word[k + 1]) {
                    (Letter::X(_), Letter::G) => {
                        word.swap(k, k + 1);
                        sign = -sign;
                        continue 'scan;
                    }
                    (Letter::X(a), Letter::X(b)) if a == b => return None,
                    (Letter::X(a), Letter::X(b)) if a > b => {
                        word.swap(k, k + 1);
                        sign = -sign;
                        continue 'scan;
                    }
                    (Letter::G, Letter::G) => {
                        word.drain(k..k + 2);
                        continue 'scan;
                    }
                    _ => {}
                }
            }
            return Some((word, sign));
        }
    }

    fn letters(index: usize, n: usize) -> Vec<Letter> {
        let basis = EnBasisIndex::from_flat(index as u16, n);
        let mut word = Vec::new();
        if basis.g_flag {
            word.push(Letter::G);
        }
        word.extend(basis.subset.iter().map(|&i| Letter::X(i)));
        word
    }

    #[test]
    fn basis_indexing_round_trips_and_labels_read_naturally() {
        for n in 1..=3 {
            for idx in 0..(1u16 << (n + 1)) {
                assert_eq!(EnBasisIndex::from_flat(idx, n).flat(n), idx);
            }
        }
        let labels: Vec<String> = (0..8)
            .map(|i| EnBasisIndex::from_flat(i, 2).label())
            .collect();
        assert_eq!(
            labels,
            ["1", "x1", "x2", "x1x2", "g", "gx1", "gx2", "gx1x2"]
        );
        assert_eq!(en_algebra(2, 0).basis_labels(), &labels[..]);
    }

    #[test]
    fn product_rule_matches_letterwise_rewriting() {
        for n in 1..=3 {
            let algebra = en_algebra(n, 0);
            let dim = algebra.dim();
            for i in 0..dim {
                for j in 0..dim {
                    let mut word = letters(i, n);
                    word.extend(letters(j, n));
                    let expected = rewrite_to_normal_form(word);
                    let got = en_monomial_product(n, i, j);
                    match expected {
                        None => assert!(got.is_none(), "({i},{j}) should vanish"),
                        Some((normal, sign)) => {
                            let mut target = EnBasisIndex {
                                g_flag: false,
                                subset: Vec::new(),
                            };
                            for letter in normal {
                                match letter {
                                    Letter::G => target.g_flag = true,
                                    Letter::X(a) => target.subset.push(a),
                                }
                            }
                            let (index, negative) = got.expect("product should survive");
                            assert_eq!(index as u16, target.flat(n));
                            assert_eq!(negative, sign < 0, "sign mismatch at ({i},{j})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn structure_constants_are_associative_and_unital_up_to_n3() {
        for n in 1..=3 {
            assert!(en_algebra(n, 0).is_associative_unital());
        }
    }

    #[test]
    fn coproduct_and_counit_match_their_defining_formulas() {
        let p = build_en(&EnSpec::zero(2), 0);
        let algebra = p.algebra().clone();
        let (g, x1, x2) = (4u16, 1u16, 2u16);
        let delta = p.base().coproduct();
        assert_eq!(delta.image(g), &TensorElement::basis(algebra.clone(), &[g, g]));
        assert_eq!(
            delta.image(x1),
            &(&TensorElement::basis(algebra.clone(), &[x1, 0])
                + &TensorElement::basis(algebra.clone(), &[g, x1]))
        );
        // Δ is multiplicative: the image of x1x2 is Δ(x1)·Δ(x2).
        let product = delta.image(x1) * delta.image(x2);
        assert_eq!(delta.image(3), &product);
        let eps = p.base().counit();
        let scalar_one = TensorElement::unit(algebra.clone(), 0);
        assert_eq!(eps.image(0), &scalar_one);
        assert_eq!(eps.image(g), &scalar_one);
        assert!(eps.image(x1).is_zero());
        assert!(eps.image(g | x1).is_zero());
    }

    #[test]
    fn sweedler_member_passes_every_verifier() {
        let spec = EnSpec::new(1, vec![vec![gr(3, 4)]], vec![vec![gr(-5, 2)]]);
        let p = build_en(&spec, 0);
        let qb = verify_quasibialgebra(p.base());
        assert!(qb.all_passed(), "{qb}");
        let qt = verify_quasitriangular(p.qt());
        assert!(qt.all_passed(), "{qt}");
        let pc = verify_precartier(&p);
        assert!(pc.all_passed(), "{pc}");
    }

    #[test]
    fn sweedler_r_matrix_exponential_truncates_at_degree_one() {
        // (gx⊗x)² = 0, so exp(α·gx⊗x) = 1⊗1 + α·gx⊗x.
        let alpha = gr(7, 3);
        let spec = EnSpec::new(1, vec![vec![alpha.clone()]], vec![vec![GaussRat::zero()]]);
        let p = build_en(&spec, 0);
        let algebra = p.algebra().clone();
        let linear = &TensorElement::unit(algebra.clone(), 2)
            + &TensorElement::single(algebra.clone(), &[3, 1], HPoly::constant(alpha, 0));
        let expected = &en_half_sum(&algebra, 1) * &linear;
        assert_eq!(p.qt().rmatrix(), &expected);
    }

    #[test]
    fn twisted_member_matches_the_published_closed_forms() {
        let spec = EnSpec::new(
            2,
            vec![vec![gr(1, 1), gr(-2, 1)], vec![gr(1, 2), gr(0, 1)]],
            vec![vec![gr(2, 1), gr(1, 3)], vec![gr(-1, 1), gr(1, 1)]],
        );
        let twisted = build_en_twisted(&spec, 0);
        let algebra = twisted.algebra().clone();
        let g = 4u16;

        // Reassociator 1⊗1⊗g, unit constraints ℓ = g and r = 1.
        assert_eq!(
            twisted.base().reassociator(),
            &TensorElement::basis(algebra.clone(), &[0, 0, g])
        );
        assert_eq!(twisted.base().ell(), &TensorElement::basis(algebra.clone(), &[g]));
        assert_eq!(twisted.base().r_elt(), &TensorElement::unit(algebra.clone(), 1));

        // Δ_F(g) = g⊗g and Δ_F(x_i) = x_i⊗1 − g⊗x_i.
        let delta = twisted.base().coproduct();
        assert_eq!(delta.image(g), &TensorElement::basis(algebra.clone(), &[g, g]));
        for xi in [1u16, 2] {
            assert_eq!(
                delta.image(xi),
                &(&TensorElement::basis(algebra.clone(), &[xi, 0])
                    - &TensorElement::basis(algebra.clone(), &[g, xi]))
            );
        }

        // R_F = −½(1⊗1 − 1⊗g − g⊗1 − g⊗g)·exp(−Σ a_{ij} g x_i ⊗ x_j).
        let half = HPoly::constant(gr(1, 2), 0);
        let term = |a: u16, b: u16| TensorElement::basis(algebra.clone(), &[a, b]);
        let prefactor = &(&(&term(0, 0) - &term(0, g)) - &term(g, 0)) - &term(g, g);
        let negated_a: Vec<Vec<GaussRat>> = spec
            .a()
            .iter()
            .map(|row| row.iter().map(|v| -v).collect())
            .collect();
        let expected_r = &(-&prefactor.scale(&half))
            * &en_pairing_tensor(&algebra, 2, &negated_a).exp().unwrap();
        assert_eq!(twisted.qt().rmatrix(), &expected_r);

        // χ is kept as the untwisted χ_(b).
        assert_eq!(twisted.chi(), &en_pairing_tensor(&algebra, 2, spec.b()));

        // The twisted bundle still satisfies every axiom.
        let report = verify_quasibialgebra(twisted.base());
        assert!(report.all_passed(), "{report}");
        let report = verify_quasitriangular(twisted.qt());
        assert!(report.all_passed(), "{report}");
        let report = verify_precartier(&twisted);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn closed_form_powers_match_direct_powering() {
        // Spot value: n = 2, a = identity, k = 2 gives −2·x1x2⊗x1x2.
        let identity = matrix(&[&[1, 0], &[0, 1]]);
        let square = rmatrix_power_closed_form(&identity, 2, 0);
        let algebra = en_algebra(2, 0);
        assert_eq!(
            square,
            TensorElement::single(algebra.clone(), &[3, 3], HPoly::constant(gr(-2, 1), 0))
        );

        // Exhaustive cross-check against direct powering for a dense matrix.
        let a = vec![
            vec![gr(1, 1), gr(2, 1), gr(-1, 2)],
            vec![gr(0, 1), gr(1, 3), gr(3, 1)],
            vec![gr(-2, 1), gr(5, 1), gr(1, 1)],
        ];
        let algebra = en_algebra(3, 0);
        let base = en_pairing_tensor(&algebra, 3, &a);
        let mut power = TensorElement::unit(algebra.clone(), 2);
        for k in 0..=4 {
            assert_eq!(
                rmatrix_power_closed_form(&a, k, 0),
                power,
                "closed form disagrees at k = {k}"
            );
            power = &power * &base;
        }
    }

    #[test]
    fn cartier_exactly_when_b_is_skew_symmetric() {
        let a = matrix(&[&[1, 2], &[3, 4]]);
        let skew = EnSpec::new(2, a.clone(), matrix(&[&[0, 2], &[-2, 0]]));
        assert!(verify_cartier(&build_en(&skew, 0)));
        let symmetric = EnSpec::new(2, a.clone(), matrix(&[&[0, 2], &[2, 0]]));
        assert!(!verify_cartier(&build_en(&symmetric, 0)));
        let diagonal = EnSpec::new(2, a, matrix(&[&[1, 0], &[0, 0]]));
        assert!(!verify_cartier(&build_en(&diagonal, 0)));
    }

    #[test]
    fn h2_verifies_and_inverts_in_closed_form() {
        for sign in [H2Sign::Plus, H2Sign::Minus] {
            let qt = build_h2(sign, 0);
            assert!(!qt.base().has_trivial_reassociator());
            let report = verify_quasibialgebra(qt.base());
            assert!(report.all_passed(), "H(2) sign {sign}: {report}");
            let report = verify_quasitriangular(&qt);
            assert!(report.all_passed(), "H(2) sign {sign}: {report}");

            // (R_±)⁻¹ = 1⊗1 − (1 ± i³)·p₋⊗p₋ and i³ = −i.
            let algebra = qt.algebra().clone();
            let half = HPoly::constant(gr(1, 2), 0);
            let p = &TensorElement::single(algebra.clone(), &[0], half.clone())
                - &TensorElement::single(algebra.clone(), &[1], half);
            let conjugate = match sign {
                H2Sign::Plus => &GaussRat::one() - &GaussRat::i(),
                H2Sign::Minus => &GaussRat::one() + &GaussRat::i(),
            };
            let expected = &TensorElement::unit(algebra.clone(), 2)
                - &p.outer(&p).scale(&HPoly::constant(conjugate, 0));
            assert_eq!(qt.rmatrix_inv(), &expected);
        }
    }

    #[test]
    fn triangularity_separates_h2_from_the_bare_sweedler_member() {
        assert!(!check_triangular(&build_h2(H2Sign::Plus, 0)));
        assert!(!check_triangular(&build_h2(H2Sign::Minus, 0)));
        assert!(check_triangular(build_en(&EnSpec::zero(1), 0).qt()));
    }

    #[test]
    fn fabricated_chi_obstructs_quantization() {
        // g x₁ ⊗ g x₂ commutes with the coproduct of nothing useful: its
        // 12/23 placements fail to commute, which quantization requires.
        let p = build_en(&EnSpec::zero(2), 1);
        let algebra = p.algebra().clone();
        let chi = TensorElement::basis(algebra, &[5, 6]);
        let fake = PreCartier::new(p.qt().clone(), chi).unwrap();
        match quantize(&fake, Scale::One, 1) {
            Err(Error::QuantizationObstruction(msg)) => {
                assert!(msg.contains("com3"), "unexpected obstruction list: {msg}")
            }
            other => panic!("expected an obstruction, got {other:?}"),
        }
    }

    #[test]
    fn mixed_chi_fails_the_coproduct_compatibility_axioms() {
        // χ' = gx⊗x + x⊗gx commutes with every coproduct image, but is not
        // of the form χ_(b); the compatibility axioms reject it.
        let p = build_en(&EnSpec::zero(1), 0);
        let algebra = p.algebra().clone();
        let chi = &TensorElement::basis(algebra.clone(), &[3, 1])
            + &TensorElement::basis(algebra, &[1, 3]);
        let candidate = PreCartier::new(p.qt().clone(), chi).unwrap();
        let report = verify_precartier(&candidate);
        assert!(!report.all_passed());
        let failed = report.failed_tags();
        assert!(
            failed.contains(&"pC2") || failed.contains(&"pC3"),
            "expected a coproduct-compatibility failure, got {failed:?}"
        );
    }
}
