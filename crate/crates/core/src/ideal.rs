//! Monomial ideals as antichains of exponent vectors.
//!
//! A monomial `X_1^{a_1} ... X_s^{a_s}` is identified with its exponent
//! vector `(a_1, ..., a_s)`. A monomial ideal is stored as its unique
//! minimal generating set: an antichain under componentwise divisibility,
//! kept sorted lexicographically so that equal ideals are structurally
//! equal.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("an ideal needs at least one generator")]
    Empty,
    #[error("the zero exponent vector is not allowed (it generates the unit ideal)")]
    ZeroVector,
    #[error("exponent vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("expansion budget exceeded: {predicted} predicted combinations > budget {budget}")]
    BudgetExceeded { predicted: u64, budget: u64 },
}

/// Exponent vector of a monomial; coordinates are non-negative integers.
///
/// `Ord` is the lexicographic order (used only for canonical storage);
/// divisibility of monomials is the separate componentwise [`divides`].
///
/// [`divides`]: ExponentVector::divides
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(coords: Vec<u64>) -> Self {
        ExponentVector(coords)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    /// Total degree of the monomial.
    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `<=`, i.e. the monomial divides the other one.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Exponent vector of the product of the two monomials.
    pub fn plus(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Exponent vector of the `k`-th power of the monomial.
    pub fn scaled(&self, k: u64) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Concatenation, for products over disjoint variable blocks.
    pub fn concat(&self, other: &ExponentVector) -> ExponentVector {
        let mut coords = self.0.clone();
        coords.extend_from_slice(&other.0);
        ExponentVector(coords)
    }
}

impl From<Vec<u64>> for ExponentVector {
    fn from(coords: Vec<u64>) -> Self {
        ExponentVector(coords)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Removes duplicates and dominated vectors, leaving the antichain of
/// minimal elements sorted lexicographically.
fn minimal_antichain(mut vectors: Vec<ExponentVector>) -> Vec<ExponentVector> {
    vectors.sort_unstable();
    vectors.dedup();
    // Sort by degree so that each candidate only needs to be checked
    // against already accepted vectors (a strict divisor has strictly
    // smaller degree; equal-degree distinct vectors are incomparable).
    vectors.sort_by_key(ExponentVector::degree);
    let mut minimal: Vec<ExponentVector> = Vec::with_capacity(vectors.len());
    for v in vectors {
        if !minimal.iter().any(|m| m.divides(&v)) {
            minimal.push(v);
        }
    }
    minimal.sort_unstable();
    minimal
}

/// A monomial ideal, represented by its minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<ExponentVector>,
}

/// Wire format: `{"vars": 3, "generators": [[2,0,0], [0,3,0]]}`.
/// Generators need not form an antichain; they are minimalized on intake.
#[derive(Serialize, Deserialize)]
struct IdealRepr {
    vars: usize,
    generators: Vec<Vec<u64>>,
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = IdealError;

    fn try_from(repr: IdealRepr) -> Result<Self, IdealError> {
        let vectors = repr.generators.into_iter().map(ExponentVector::new).collect();
        MonomialIdeal::new(repr.vars, vectors)
    }
}

impl From<MonomialIdeal> for IdealRepr {
    fn from(ideal: MonomialIdeal) -> IdealRepr {
        IdealRepr {
            vars: ideal.num_vars,
            generators: ideal.generators.into_iter().map(|g| g.0).collect(),
        }
    }
}

impl MonomialIdeal {
    /// Builds the ideal generated by `vectors` in `num_vars` variables,
    /// discarding non-minimal generators.
    pub fn new(num_vars: usize, vectors: Vec<ExponentVector>) -> Result<Self, IdealError> {
        if vectors.is_empty() {
            return Err(IdealError::Empty);
        }
        for v in &vectors {
            if v.len() != num_vars {
                return Err(IdealError::LengthMismatch {
                    expected: num_vars,
                    found: v.len(),
                });
            }
            if v.is_zero() {
                return Err(IdealError::ZeroVector);
            }
        }
        Ok(MonomialIdeal {
            num_vars,
            generators: minimal_antichain(vectors),
        })
    }

    /// Like [`new`](MonomialIdeal::new), inferring the number of variables
    /// from the first vector.
    pub fn minimalize(vectors: Vec<ExponentVector>) -> Result<Self, IdealError> {
        let num_vars = vectors.first().ok_or(IdealError::Empty)?.len();
        MonomialIdeal::new(num_vars, vectors)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Minimal generators, sorted lexicographically.
    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    /// Maximal generating degree `d(I)`.
    pub fn max_degree(&self) -> u64 {
        self.generators.iter().map(ExponentVector::degree).max().unwrap()
    }

    /// Whether the monomial `m` lies in the ideal, i.e. some minimal
    /// generator divides it.
    pub fn contains(&self, m: &ExponentVector) -> bool {
        assert_eq!(m.len(), self.num_vars, "variable count mismatch");
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Whether `m` is one of the minimal generators.
    pub fn is_generator(&self, m: &ExponentVector) -> bool {
        self.generators.binary_search(m).is_ok()
    }

    /// Product of two ideals in the same variables: the Minkowski sum of
    /// the generator sets, minimalized.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        if self.num_vars != other.num_vars {
            return Err(IdealError::LengthMismatch {
                expected: self.num_vars,
                found: other.num_vars,
            });
        }
        let mut sums = Vec::with_capacity(self.generators.len() * other.generators.len());
        for g in &self.generators {
            for h in &other.generators {
                sums.push(g.plus(h));
            }
        }
        Ok(MonomialIdeal {
            num_vars: self.num_vars,
            generators: minimal_antichain(sums),
        })
    }

    /// `n`-th power (`n >= 1`) by iterated Minkowski sums, minimalizing
    /// after every step so intermediate sets never explode.
    pub fn power(&self, n: usize) -> Result<MonomialIdeal, IdealError> {
        self.power_with_budget(n, u64::MAX)
    }

    /// Like [`power`](MonomialIdeal::power), refusing any step whose
    /// predicted candidate count `mu(I^k) * mu(I)` exceeds `budget`.
    pub fn power_with_budget(&self, n: usize, budget: u64) -> Result<MonomialIdeal, IdealError> {
        if n == 0 {
            return Err(IdealError::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            let predicted = acc.mu() as u64 * self.mu() as u64;
            if predicted > budget {
                return Err(IdealError::BudgetExceeded { predicted, budget });
            }
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Iterator over `I, I^2, I^3, ...` that reuses the previous power.
    pub fn powers(&self) -> Powers<'_> {
        Powers {
            base: self,
            current: None,
        }
    }

    /// Whether the monomial `m` lies in `I^t`, i.e. there are generator
    /// multiplicities `c_i >= 0` with `sum c_i = t` and `sum c_i g_i <= m`
    /// componentwise. Decided by a memoized depth-first search over
    /// `(generator index, remaining factor count, residual vector)`
    /// without ever expanding `I^t`.
    pub fn member_of_power(&self, t: usize, m: &ExponentVector) -> bool {
        assert_eq!(m.len(), self.num_vars, "variable count mismatch");
        assert!(t >= 1, "power exponent must be at least 1");
        let mut memo: HashMap<(usize, usize, Vec<u64>), bool> = HashMap::new();
        self.member_search(0, t, m.coords().to_vec(), &mut memo)
    }

    fn member_search(
        &self,
        idx: usize,
        remaining: usize,
        residual: Vec<u64>,
        memo: &mut HashMap<(usize, usize, Vec<u64>), bool>,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        if idx == self.generators.len() {
            return false;
        }
        let key = (idx, remaining, residual.clone());
        if let Some(&hit) = memo.get(&key) {
            return hit;
        }
        let g = self.generators[idx].coords();
        // Largest multiplicity of generator idx that still fits.
        let mut max_copies = remaining as u64;
        for (gi, ri) in g.iter().zip(&residual) {
            if *gi > 0 {
                max_copies = max_copies.min(ri / gi);
            }
        }
        let mut found = false;
        for copies in (0..=max_copies).rev() {
            let next: Vec<u64> = residual
                .iter()
                .zip(g)
                .map(|(ri, gi)| ri - gi * copies)
                .collect();
            if self.member_search(idx + 1, remaining - copies as usize, next, memo) {
                found = true;
                break;
            }
        }
        memo.insert(key, found);
        found
    }

    /// Whether `m` is a minimal generator of `I^n`.
    pub fn is_minimal_generator(&self, n: usize, m: &ExponentVector) -> Result<bool, IdealError> {
        if m.len() != self.num_vars {
            return Err(IdealError::LengthMismatch {
                expected: self.num_vars,
                found: m.len(),
            });
        }
        Ok(self.power(n)?.is_generator(m))
    }

    /// Product with an ideal in a disjoint block of variables, kept in
    /// factored form.
    pub fn product_disjoint(&self, other: &MonomialIdeal) -> FactoredIdeal {
        FactoredIdeal {
            factors: vec![self.clone(), other.clone()],
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("ideal serialization cannot fail")
    }
}

/// See [`MonomialIdeal::powers`].
pub struct Powers<'a> {
    base: &'a MonomialIdeal,
    current: Option<MonomialIdeal>,
}

impl Iterator for Powers<'_> {
    type Item = MonomialIdeal;

    fn next(&mut self) -> Option<MonomialIdeal> {
        let next = match &self.current {
            None => self.base.clone(),
            Some(prev) => prev.multiply(self.base).expect("powers share variables"),
        };
        self.current = Some(next.clone());
        Some(next)
    }
}

/// A product of monomial ideals over pairwise disjoint variable blocks,
/// kept factored so that per-factor quantities can be combined instead of
/// expanding the (multiplicatively large) generator set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredIdeal {
    factors: Vec<MonomialIdeal>,
}

impl FactoredIdeal {
    pub fn new(factors: Vec<MonomialIdeal>) -> Result<Self, IdealError> {
        if factors.is_empty() {
            return Err(IdealError::Empty);
        }
        Ok(FactoredIdeal { factors })
    }

    pub fn factors(&self) -> &[MonomialIdeal] {
        &self.factors
    }

    pub fn total_vars(&self) -> usize {
        self.factors.iter().map(MonomialIdeal::num_vars).sum()
    }

    /// Minimal generator count: the product of the factor counts, since
    /// concatenations of minimal generators are exactly the minimal
    /// generators of the product.
    pub fn mu(&self) -> u64 {
        self.factors.iter().map(|f| f.mu() as u64).product()
    }

    /// Maximal generating degree: the sum of the factor degrees.
    pub fn max_degree(&self) -> u64 {
        self.factors.iter().map(MonomialIdeal::max_degree).sum()
    }

    /// Expands to a plain ideal over the concatenated variables. Refused
    /// when the predicted generator count exceeds `budget`.
    pub fn expand(&self, budget: u64) -> Result<MonomialIdeal, IdealError> {
        let predicted = self.mu();
        if predicted > budget {
            return Err(IdealError::BudgetExceeded { predicted, budget });
        }
        let mut gens = vec![ExponentVector::new(Vec::new())];
        for factor in &self.factors {
            let mut next = Vec::with_capacity(gens.len() * factor.mu());
            for prefix in &gens {
                for g in factor.generators() {
                    next.push(prefix.concat(g));
                }
            }
            gens = next;
        }
        let expanded = MonomialIdeal::new(self.total_vars(), gens)
            .expect("factors are non-empty and free of zero vectors");
        debug_assert_eq!(expanded.mu() as u64, predicted, "expansion must already be minimal");
        Ok(expanded)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(coords: &[u64]) -> ExponentVector {
        ExponentVector::new(coords.to_vec())
    }

    fn ideal(gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens.iter().map(|g| ev(g)).collect()).unwrap()
    }

    #[test]
    fn minimalize_drops_dominated_and_duplicate_vectors() {
        let i = ideal(&[&[2, 0, 0], &[2, 1, 0], &[0, 3, 0], &[2, 0, 0]]);
        assert_eq!(i.generators(), &[ev(&[0, 3, 0]), ev(&[2, 0, 0])]);
        assert_eq!(i.mu(), 2);
    }

    #[test]
    fn minimalize_keeps_an_antichain_untouched() {
        let i = ideal(&[&[2, 0, 0], &[0, 3, 0], &[1, 2, 1]]);
        assert_eq!(i.mu(), 3);
        assert_eq!(i.max_degree(), 4);
    }

    #[test]
    fn minimalize_rejects_empty_input() {
        assert_eq!(MonomialIdeal::minimalize(vec![]), Err(IdealError::Empty));
    }

    #[test]
    fn minimalize_rejects_zero_vector() {
        assert_eq!(
            MonomialIdeal::minimalize(vec![ev(&[0, 0])]),
            Err(IdealError::ZeroVector)
        );
    }

    #[test]
    fn minimalize_rejects_mixed_lengths() {
        assert_eq!(
            MonomialIdeal::new(2, vec![ev(&[1, 0]), ev(&[1, 0, 0])]),
            Err(IdealError::LengthMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn power_one_is_the_ideal_itself() {
        let i = ideal(&[&[2, 0, 0], &[0, 3, 0], &[1, 2, 1]]);
        assert_eq!(i.power(1).unwrap(), i);
    }

    #[test]
    fn power_zero_is_rejected() {
        let i = ideal(&[&[1, 0], &[0, 1]]);
        assert_eq!(i.power(0), Err(IdealError::ZeroPower));
    }

    #[test]
    fn square_of_the_maximal_ideal() {
        let m = ideal(&[&[1, 0], &[0, 1]]);
        let m2 = m.power(2).unwrap();
        assert_eq!(m2.generators(), &[ev(&[0, 2]), ev(&[1, 1]), ev(&[2, 0])]);
    }

    #[test]
    fn powers_iterator_matches_power() {
        let i = ideal(&[&[2, 0], &[0, 3], &[1, 1]]);
        for (k, p) in i.powers().take(5).enumerate() {
            assert_eq!(p, i.power(k + 1).unwrap());
        }
    }

    #[test]
    fn power_budget_is_enforced() {
        let i = ideal(&[&[2, 0], &[0, 3], &[1, 1]]);
        assert_eq!(
            i.power_with_budget(5, 4),
            Err(IdealError::BudgetExceeded { predicted: 9, budget: 4 })
        );
    }

    #[test]
    fn contains_checks_divisibility_by_some_generator() {
        let i = ideal(&[&[2, 0, 0], &[0, 3, 0], &[1, 2, 1]]);
        assert!(i.contains(&ev(&[2, 5, 0])));
        assert!(!i.contains(&ev(&[1, 2, 0])));
    }

    #[test]
    fn member_of_power_on_principal_ideal() {
        let i = ideal(&[&[1, 0]]);
        assert!(i.member_of_power(2, &ev(&[2, 0])));
        assert!(!i.member_of_power(3, &ev(&[2, 0])));
    }

    #[test]
    fn member_of_power_finds_cyclic_witness() {
        // J = (v_1, v_2, v_3) with v_k = 3e_k + e_{k+1 mod 3} (embedded in
        // four variables); 7*(2,1,1,1) = 4v_1 + v_2 + 2v_3 + 7e_4.
        let j = ideal(&[&[3, 1, 0, 0], &[0, 3, 1, 0], &[1, 0, 3, 0]]);
        assert!(j.member_of_power(7, &ev(&[14, 7, 7, 7])));
        assert!(!j.member_of_power(6, &ev(&[12, 6, 6, 6])));
    }

    #[test]
    fn is_minimal_generator_distinguishes_membership_from_minimality() {
        let m = ideal(&[&[1, 0], &[0, 1]]);
        // (3,0) lies in m^2 but is not a minimal generator of it.
        assert!(m.member_of_power(2, &ev(&[3, 0])));
        assert!(!m.is_minimal_generator(2, &ev(&[3, 0])).unwrap());
        assert!(m.is_minimal_generator(2, &ev(&[1, 1])).unwrap());
    }

    #[test]
    fn disjoint_product_multiplies_generator_counts() {
        let i = ideal(&[&[2, 0, 0], &[0, 3, 0], &[1, 2, 1]]);
        let j = ideal(&[&[1, 0], &[0, 1]]);
        let product = i.product_disjoint(&j);
        assert_eq!(product.mu(), 6);
        assert_eq!(product.total_vars(), 5);
        assert_eq!(product.max_degree(), 5);
        let expanded = product.expand(1_000).unwrap();
        assert_eq!(expanded.mu(), 6);
        assert_eq!(expanded.num_vars(), 5);
    }

    #[test]
    fn expansion_budget_is_enforced() {
        let i = ideal(&[&[2, 0], &[0, 3], &[1, 1]]);
        let j = ideal(&[&[1, 0], &[0, 1]]);
        let product = i.product_disjoint(&j);
        assert_eq!(
            product.expand(5),
            Err(IdealError::BudgetExceeded { predicted: 6, budget: 5 })
        );
    }

    #[test]
    fn json_round_trip_minimalizes_on_intake() {
        let parsed =
            MonomialIdeal::from_json_str(r#"{"vars":3,"generators":[[2,0,0],[0,3,0],[2,1,0],[1,2,1]]}"#)
                .unwrap();
        assert_eq!(parsed.mu(), 3);
        let again = MonomialIdeal::from_json_str(&parsed.to_json_string()).unwrap();
        assert_eq!(parsed, again);
    }

    #[test]
    fn json_rejects_zero_vector() {
        let err = MonomialIdeal::from_json_str(r#"{"vars":2,"generators":[[0,0]]}"#);
        assert!(err.is_err());
    }
}
