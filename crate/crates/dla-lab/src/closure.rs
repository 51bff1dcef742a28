//! Lie closure of a generating set, with the commutator ideal and center.
//!
//! The engine works over any coordinate system implementing
//! [`LieCoordinates`]: raw Pauli strings, orbit representatives under a
//! permutation group, or closed-form orbit labels. Only brackets against the
//! generators are ever needed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{combination, null_space, Augmented, LinearLedger, ModularLedger, SparseRow};
use crate::pauli::{bracket_sign, PauliString, PauliVector};
use crate::symmetry::{permute_unchecked, PermGroup, Permutation, DEFAULT_GROUP_CAP};

/// A basis of coordinates in which a Lie algebra generated by a few
/// elements can be explored.
pub trait LieCoordinates: Sync {
    type Key: Ord + Clone + Hash + Debug + Send + Sync;

    fn generators(&self) -> &[SparseRow<Self::Key>];

    /// `[G_index, v]`.
    fn bracket_generator(&self, index: usize, v: &SparseRow<Self::Key>) -> SparseRow<Self::Key>;

    /// Squared Hilbert–Schmidt norm of the unit vector at `key`, up to a
    /// factor common to all keys.
    fn weight(&self, key: &Self::Key) -> BigInt;
}

/// Closure output: a canonical (reduced row-echelon) basis and the degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dla<K> {
    pub basis: Vec<SparseRow<K>>,
    pub degree: usize,
    pub generator_count: usize,
    /// Indices of the maximal independent prefix-greedy subset of generators.
    pub independent_generators: Vec<usize>,
}

impl<K> Dla<K> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

#[cfg(feature = "parallel")]
fn map_ordered<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_ordered<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.iter().map(f).collect()
}

fn budget_error(stage: &'static str, round: usize, frontier: usize, budget: usize) -> Error {
    Error::BudgetExceeded { stage, round, frontier, budget }
}

/// Round-by-round closure. Round `k` brackets every generator (outer loop)
/// with every element added in round `k - 1` (inner loop); the degree is the
/// number of rounds that added something.
///
/// Frontier elements are bracketed in their reduced form. Each differs from
/// the element a plain implementation would hold by a combination of
/// earlier-round elements and same-round elements, so every round spans the
/// same space and the dimension and degree are unchanged.
pub fn generate<C: LieCoordinates>(coords: &C, budget: usize) -> Result<Dla<C::Key>> {
    let generators = coords.generators();
    if generators.is_empty() {
        return Err(Error::InvalidArgument("at least one generator is required".into()));
    }
    let mut ledger = LinearLedger::with_budget(budget);
    let mut independent = Vec::new();
    let mut frontier_ids = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        let id = ledger.insert(g).map_err(|_| budget_error("generators", 0, 0, budget))?;
        if let Some(id) = id {
            independent.push(i);
            frontier_ids.push(id);
        }
    }
    if independent.is_empty() {
        return Err(Error::InvalidArgument("all generators are zero".into()));
    }

    let mut round = 0;
    loop {
        round += 1;
        let frontier: Vec<SparseRow<C::Key>> = frontier_ids.iter().map(|&id| ledger.row(id).clone()).collect();
        let mut added = Vec::new();
        for &g in &independent {
            let candidates = map_ordered(&frontier, |h| coords.bracket_generator(g, h));
            for c in &candidates {
                if c.is_empty() {
                    continue;
                }
                match ledger.insert(c) {
                    Ok(Some(id)) => added.push(id),
                    Ok(None) => {}
                    Err(_) => return Err(budget_error("closure", round, frontier.len(), budget)),
                }
            }
        }
        if added.is_empty() {
            return Ok(Dla {
                basis: ledger.into_rows(),
                degree: round - 1,
                generator_count: generators.len(),
                independent_generators: independent,
            });
        }
        frontier_ids = added;
    }
}

/// How rank decisions are made.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RankArithmetic {
    /// Integer row reduction; the basis is in reduced row-echelon form.
    #[default]
    Exact,
    /// Decisions modulo a 61-bit prime (see [`ModularLedger`]); the basis is
    /// made of the exact nested brackets that were accepted.
    Modular,
}

/// [`generate`] with rank decisions taken modulo a prime. Same schedule and
/// degree; basis rows are primitive integer multiples of nested brackets, so
/// they are exact elements of the algebra and certified independent.
pub fn generate_modular<C: LieCoordinates>(coords: &C, budget: usize) -> Result<Dla<C::Key>> {
    let generators = coords.generators();
    if generators.is_empty() {
        return Err(Error::InvalidArgument("at least one generator is required".into()));
    }
    let mut ledger = ModularLedger::with_budget(budget);
    let mut basis: Vec<SparseRow<C::Key>> = Vec::new();
    let mut independent = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if ledger.insert(g).map_err(|_| budget_error("generators", 0, 0, budget))?.is_some() {
            independent.push(i);
            basis.push(g.clone());
        }
    }
    if independent.is_empty() {
        return Err(Error::InvalidArgument("all generators are zero".into()));
    }

    let mut frontier = 0..basis.len();
    let mut round = 0;
    loop {
        round += 1;
        let mut added = Vec::new();
        for &g in &independent {
            let candidates = map_ordered(&basis[frontier.clone()], |h| coords.bracket_generator(g, h).primitive());
            for c in candidates {
                if c.is_empty() {
                    continue;
                }
                match ledger.insert(&c) {
                    Ok(Some(_)) => added.push(c),
                    Ok(None) => {}
                    Err(_) => return Err(budget_error("closure", round, frontier.len(), budget)),
                }
            }
        }
        if added.is_empty() {
            return Ok(Dla {
                basis,
                degree: round - 1,
                generator_count: generators.len(),
                independent_generators: independent,
            });
        }
        frontier = basis.len()..basis.len() + added.len();
        basis.extend(added);
    }
}

/// Dimensions of the algebra, its commutator ideal and its center.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dimensions {
    pub dimension: usize,
    pub degree: usize,
    pub ideal_dimension: usize,
    pub center_dimension: usize,
}

/// Dimensions under the chosen arithmetic. In modular mode the center
/// dimension is `dim g - dim [g,g]`, which holds because the algebra is
/// compact and hence reductive.
pub fn dimensions<C: LieCoordinates>(coords: &C, budget: usize, arithmetic: RankArithmetic) -> Result<Dimensions> {
    match arithmetic {
        RankArithmetic::Exact => {
            let a = analyze(coords, budget)?;
            Ok(Dimensions {
                dimension: a.dla.dimension(),
                degree: a.dla.degree,
                ideal_dimension: a.ideal.len(),
                center_dimension: a.center.len(),
            })
        }
        RankArithmetic::Modular => modular_dimensions(coords, &generate_modular(coords, budget)?, budget),
    }
}

/// Ideal and center dimensions of a closure from [`generate_modular`].
pub fn modular_dimensions<C: LieCoordinates>(coords: &C, dla: &Dla<C::Key>, budget: usize) -> Result<Dimensions> {
    let mut ledger = ModularLedger::with_budget(budget);
    for g in 0..coords.generators().len() {
        let images = map_ordered(&dla.basis, |b| coords.bracket_generator(g, b));
        for v in images.iter().filter(|v| !v.is_empty()) {
            ledger.insert(v).map_err(|_| budget_error("commutator ideal", g, dla.basis.len(), budget))?;
        }
    }
    let center_dimension = dla.dimension() - ledger.rank();
    if center_dimension > dla.independent_generators.len() {
        return Err(Error::Inconsistent(format!(
            "center dimension {center_dimension} exceeds the {} independent generators",
            dla.independent_generators.len()
        )));
    }
    Ok(Dimensions { dimension: dla.dimension(), degree: dla.degree, ideal_dimension: ledger.rank(), center_dimension })
}

/// `[g, g]`, spanned by the brackets of every generator with every basis
/// element; returned in reduced row-echelon form.
pub fn commutator_ideal<C: LieCoordinates>(
    coords: &C,
    dla: &Dla<C::Key>,
    budget: usize,
) -> Result<Vec<SparseRow<C::Key>>> {
    let mut ledger = LinearLedger::with_budget(budget);
    for g in 0..coords.generators().len() {
        let images = map_ordered(&dla.basis, |b| coords.bracket_generator(g, b));
        for v in &images {
            if !v.is_empty() {
                ledger.insert(v).map_err(|_| budget_error("commutator ideal", g, dla.basis.len(), budget))?;
            }
        }
    }
    Ok(ledger.into_rows())
}

// Stacked image v -> ([G_1, v], [G_2, v], ...).
fn stacked_ad<C: LieCoordinates>(coords: &C, v: &SparseRow<C::Key>) -> SparseRow<(usize, C::Key)> {
    SparseRow::from_terms(
        (0..coords.generators().len())
            .flat_map(|g| coords.bracket_generator(g, v).into_entries().into_iter().map(move |(k, c)| ((g, k), c))),
    )
}

fn kernel_of_ad<C: LieCoordinates>(
    coords: &C,
    vectors: &[SparseRow<C::Key>],
    budget: usize,
) -> Result<Vec<SparseRow<C::Key>>> {
    let images = map_ordered(vectors, |v| stacked_ad(coords, v));
    let relations = null_space(&images, budget).map_err(|_| budget_error("center", 0, vectors.len(), budget))?;
    Ok(relations.iter().map(|t| combination(t, vectors).primitive()).collect())
}

/// Center as the null space of the stacked generator actions over the whole
/// basis. Quadratic in the dimension; meant for small algebras and as an
/// oracle for [`center`].
pub fn center_by_null_space<C: LieCoordinates>(
    coords: &C,
    dla: &Dla<C::Key>,
    budget: usize,
) -> Result<Vec<SparseRow<C::Key>>> {
    kernel_of_ad(coords, &dla.basis, budget)
}

/// Center of the algebra. An element commuting with everything is
/// orthogonal to every bracket, so the search runs over `g ∩ [g,g]^⊥`
/// (usually a handful of vectors) before solving `[G_j, v] = 0` exactly.
pub fn center<C: LieCoordinates>(
    coords: &C,
    dla: &Dla<C::Key>,
    ideal: &[SparseRow<C::Key>],
    budget: usize,
) -> Result<Vec<SparseRow<C::Key>>> {
    let candidates = orthogonal_complement_in(coords, &dla.basis, ideal, budget)?;
    if candidates.is_empty() {
        return Ok(Vec::new());
    }
    kernel_of_ad(coords, &candidates, budget)
}

/// Basis of `span(space) ∩ span(sub)^⊥` under the weighted inner product.
/// `sub` must be in reduced row-echelon form.
pub fn orthogonal_complement_in<C: LieCoordinates>(
    coords: &C,
    space: &[SparseRow<C::Key>],
    sub: &[SparseRow<C::Key>],
    budget: usize,
) -> Result<Vec<SparseRow<C::Key>>> {
    let universe: BTreeSet<C::Key> = space.iter().flat_map(|r| r.keys().cloned()).collect();
    let pivots: BTreeMap<C::Key, usize> =
        sub.iter().enumerate().map(|(i, r)| (r.leading().expect("empty row").0.clone(), i)).collect();

    // For each free column f, y' = e_f - Σ_i (w_i[f] / w_i[piv_i]) e_{piv_i}
    // is plainly orthogonal to every row; dividing by the weights turns that
    // into weighted orthogonality.
    let mut hits: BTreeMap<C::Key, Vec<usize>> = BTreeMap::new();
    for (i, r) in sub.iter().enumerate() {
        for (k, _) in &r.entries()[1..] {
            hits.entry(k.clone()).or_default().push(i);
        }
    }
    let ys: Vec<SparseRow<C::Key>> = universe
        .iter()
        .filter(|k| !pivots.contains_key(*k))
        .map(|f| {
            let mut terms = vec![(f.clone(), BigRational::from_integer(BigInt::one()) / coords.weight(f))];
            for &i in hits.get(f).into_iter().flatten() {
                let (pk, pv) = sub[i].leading().expect("empty row");
                let c = sub[i].get(f).expect("column index");
                terms.push((pk.clone(), -BigRational::new(c.clone(), pv.clone() * coords.weight(pk))));
            }
            integer_row(terms)
        })
        .collect();

    // Intersect span(ys) with span(space) through tagged rows.
    let mut ledger: LinearLedger<Augmented<C::Key>> = LinearLedger::with_budget(budget);
    let err = |_| budget_error("center", 0, ys.len(), budget);
    for r in space {
        ledger.insert(&r.map_keys(|k| Augmented::Main(k.clone()))).map_err(err)?;
    }
    for (j, y) in ys.iter().enumerate() {
        let mut terms: Vec<_> = y.entries().iter().map(|(k, c)| (Augmented::Main(k.clone()), c.clone())).collect();
        terms.push((Augmented::Tag(j), BigInt::one()));
        ledger.insert(&SparseRow::from_terms(terms)).map_err(err)?;
    }
    Ok(ledger
        .rows()
        .iter()
        .filter(|r| matches!(r.leading(), Some((Augmented::Tag(_), _))))
        .map(|r| {
            let t = SparseRow::from_terms(r.entries().iter().filter_map(|(k, c)| match k {
                Augmented::Tag(j) => Some((*j, c.clone())),
                Augmented::Main(_) => None,
            }));
            combination(&t, &ys).primitive()
        })
        .collect())
}

/// Clears denominators of rational terms into a primitive integer row.
pub fn integer_row<K: Ord + Clone>(terms: Vec<(K, BigRational)>) -> SparseRow<K> {
    let lcm = terms.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    SparseRow::from_terms(terms.into_iter().map(|(k, c)| (k, (c * &lcm).to_integer()))).primitive()
}

/// Closure together with its ideal and center, after the structural checks
/// `dim c + dim [g,g] = dim g` and `dim c ≤ #independent generators`.
#[derive(Clone, Debug)]
pub struct Analysis<K> {
    pub dla: Dla<K>,
    pub ideal: Vec<SparseRow<K>>,
    pub center: Vec<SparseRow<K>>,
}

pub fn analyze<C: LieCoordinates>(coords: &C, budget: usize) -> Result<Analysis<C::Key>> {
    let dla = generate(coords, budget)?;
    let ideal = commutator_ideal(coords, &dla, budget)?;
    let center = center(coords, &dla, &ideal, budget)?;
    if center.len() + ideal.len() != dla.dimension() {
        return Err(Error::Inconsistent(format!(
            "center ({}) and ideal ({}) do not add up to the dimension ({})",
            center.len(),
            ideal.len(),
            dla.dimension()
        )));
    }
    if center.len() > dla.independent_generators.len() {
        return Err(Error::Inconsistent(format!(
            "center dimension {} exceeds the {} independent generators",
            center.len(),
            dla.independent_generators.len()
        )));
    }
    Ok(Analysis { dla, ideal, center })
}

fn bracket_pauli_rows(a: &SparseRow<PauliString>, b: &SparseRow<PauliString>) -> SparseRow<PauliString> {
    let mut terms = Vec::new();
    for (p, cp) in a.entries() {
        for (q, cq) in b.entries() {
            let (s, r) = bracket_sign(p, q);
            if s != 0 {
                terms.push((r, cp * cq * s));
            }
        }
    }
    SparseRow::from_terms(terms)
}

/// Converts a vector to a primitive integer row (a positive rescaling).
pub fn pauli_row(v: &PauliVector) -> SparseRow<PauliString> {
    integer_row(v.terms().map(|(p, c)| (*p, c.clone())).collect())
}

pub fn row_to_vector(n: usize, row: &SparseRow<PauliString>) -> Result<PauliVector> {
    PauliVector::from_terms(n, row.entries().iter().map(|(p, c)| (*p, BigRational::from_integer(c.clone()))))
}

/// Raw Pauli-string coordinates.
#[derive(Clone, Debug)]
pub struct PauliCoordinates {
    n: usize,
    generators: Vec<SparseRow<PauliString>>,
}

impl PauliCoordinates {
    pub fn new(generators: &[PauliVector]) -> Result<Self> {
        let first =
            generators.first().ok_or_else(|| Error::InvalidArgument("at least one generator is required".into()))?;
        let n = first.n();
        for g in generators {
            if g.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: g.n() });
            }
        }
        Ok(Self { n, generators: generators.iter().map(pauli_row).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl LieCoordinates for PauliCoordinates {
    type Key = PauliString;

    fn generators(&self) -> &[SparseRow<PauliString>] {
        &self.generators
    }

    fn bracket_generator(&self, index: usize, v: &SparseRow<PauliString>) -> SparseRow<PauliString> {
        bracket_pauli_rows(&self.generators[index], v)
    }

    fn weight(&self, _key: &PauliString) -> BigInt {
        BigInt::one()
    }
}

/// Coordinates indexed by orbit representatives under a permutation group;
/// key `P` stands for the sum of the distinct images of `P`. Valid for
/// generators invariant under the group.
#[derive(Clone, Debug)]
pub struct OrbitCoordinates {
    n: usize,
    elements: Vec<Permutation>,
    generator_terms: Vec<Vec<(PauliString, BigInt)>>,
    generators: Vec<SparseRow<PauliString>>,
}

impl OrbitCoordinates {
    pub fn new(group: &PermGroup, generators: &[PauliVector]) -> Result<Self> {
        let raw = PauliCoordinates::new(generators)?;
        if raw.n != group.n() {
            return Err(Error::DimensionMismatch { left: group.n(), right: raw.n });
        }
        let elements = group.elements(DEFAULT_GROUP_CAP)?;
        let mut out = Self { n: raw.n, elements, generator_terms: Vec::new(), generators: Vec::new() };
        for g in &raw.generators {
            for (p, c) in g.entries() {
                for pi in &out.elements {
                    if g.get(&permute_unchecked(pi, p)) != Some(c) {
                        return Err(Error::InvalidArgument(format!(
                            "generator is not invariant under the group (string {p})"
                        )));
                    }
                }
            }
            out.generators
                .push(SparseRow::from_terms(g.entries().iter().filter(|(p, _)| out.is_canonical(p)).cloned()));
            out.generator_terms.push(g.entries().to_vec());
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn canonical(&self, p: &PauliString) -> PauliString {
        self.elements.iter().map(|pi| permute_unchecked(pi, p)).min().expect("group has the identity")
    }

    fn is_canonical(&self, p: &PauliString) -> bool {
        self.elements.iter().all(|pi| permute_unchecked(pi, p) >= *p)
    }

    pub fn orbit(&self, p: &PauliString) -> Vec<PauliString> {
        let set: BTreeSet<PauliString> = self.elements.iter().map(|pi| permute_unchecked(pi, p)).collect();
        set.into_iter().collect()
    }

    /// Orbit-sum expansion into raw Pauli coordinates.
    pub fn expand(&self, row: &SparseRow<PauliString>) -> SparseRow<PauliString> {
        SparseRow::from_terms(
            row.entries().iter().flat_map(|(p, c)| self.orbit(p).into_iter().map(move |q| (q, c.clone()))),
        )
    }
}

impl LieCoordinates for OrbitCoordinates {
    type Key = PauliString;

    fn generators(&self) -> &[SparseRow<PauliString>] {
        &self.generators
    }

    // The bracket is invariant, so its coefficient on an orbit equals its
    // raw coefficient on the orbit's representative.
    fn bracket_generator(&self, index: usize, v: &SparseRow<PauliString>) -> SparseRow<PauliString> {
        let mut terms = Vec::new();
        for (q, cq) in v.entries() {
            for s in self.orbit(q) {
                for (p, cp) in &self.generator_terms[index] {
                    let (sign, r) = bracket_sign(p, &s);
                    if sign != 0 && self.is_canonical(&r) {
                        terms.push((r, cp * cq * sign));
                    }
                }
            }
        }
        SparseRow::from_terms(terms)
    }

    fn weight(&self, key: &PauliString) -> BigInt {
        BigInt::from(self.orbit(key).len())
    }
}

/// Closure result in raw Pauli coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DlaReport {
    pub n: usize,
    pub basis: Vec<PauliVector>,
    pub dimension: usize,
    pub degree: usize,
    pub generator_count: usize,
}

fn to_report(n: usize, dla: &Dla<PauliString>) -> Result<DlaReport> {
    Ok(DlaReport {
        n,
        basis: dla.basis.iter().map(|r| row_to_vector(n, r)).collect::<Result<_>>()?,
        dimension: dla.dimension(),
        degree: dla.degree,
        generator_count: dla.generator_count,
    })
}

fn report_dla(report: &DlaReport, coords: &PauliCoordinates) -> Dla<PauliString> {
    let mut ledger = LinearLedger::with_budget(usize::MAX);
    for b in &report.basis {
        let _ = ledger.insert(&pauli_row(b));
    }
    let independent = (0..coords.generators.len()).collect();
    Dla {
        basis: ledger.into_rows(),
        degree: report.degree,
        generator_count: report.generator_count,
        independent_generators: independent,
    }
}

pub fn generate_dla(generators: &[PauliVector], budget: usize) -> Result<DlaReport> {
    let coords = PauliCoordinates::new(generators)?;
    to_report(coords.n, &generate(&coords, budget)?)
}

pub fn commutator_ideal_of(report: &DlaReport, generators: &[PauliVector], budget: usize) -> Result<Vec<PauliVector>> {
    let coords = PauliCoordinates::new(generators)?;
    let rows = commutator_ideal(&coords, &report_dla(report, &coords), budget)?;
    rows.iter().map(|r| row_to_vector(coords.n, r)).collect()
}

pub fn center_of(report: &DlaReport, generators: &[PauliVector], budget: usize) -> Result<Vec<PauliVector>> {
    let coords = PauliCoordinates::new(generators)?;
    let dla = report_dla(report, &coords);
    let rows = center_by_null_space(&coords, &dla, budget)?;
    rows.iter().map(|r| row_to_vector(coords.n, r)).collect()
}

/// Whether a row lies in the span of `rows`.
pub fn in_span<K: Ord + Clone + Hash + Debug>(rows: &[SparseRow<K>], v: &SparseRow<K>) -> bool {
    let mut ledger = LinearLedger::with_budget(usize::MAX);
    for r in rows {
        let _ = ledger.insert(r);
    }
    ledger.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{maxcut_generators, Graph};
    use crate::linalg::{rank, DEFAULT_BUDGET};

    fn coords(g: &Graph) -> PauliCoordinates {
        let (a, b) = maxcut_generators(g).unwrap();
        PauliCoordinates::new(&[a, b]).unwrap()
    }

    #[test]
    fn single_generator() {
        let x = PauliVector::parse_terms(1, &[("X", 1)]).unwrap();
        let r = generate_dla(std::slice::from_ref(&x), DEFAULT_BUDGET).unwrap();
        assert_eq!((r.dimension, r.degree), (1, 0));
        assert!(commutator_ideal_of(&r, std::slice::from_ref(&x), DEFAULT_BUDGET).unwrap().is_empty());
        assert_eq!(center_of(&r, &[x], DEFAULT_BUDGET).unwrap().len(), 1);
    }

    #[test]
    fn su2() {
        let x = PauliVector::parse_terms(1, &[("X", 1)]).unwrap();
        let z = PauliVector::parse_terms(1, &[("Z", 1)]).unwrap();
        let r = generate_dla(&[x, z], DEFAULT_BUDGET).unwrap();
        assert_eq!((r.dimension, r.degree), (3, 1));
    }

    #[test]
    fn cycles() {
        for n in 3..=6 {
            let c = coords(&Graph::cycle(n).unwrap());
            let a = analyze(&c, DEFAULT_BUDGET).unwrap();
            assert_eq!(a.dla.dimension(), 3 * n - 1);
            assert_eq!(a.center.len(), 2);
            assert_eq!(a.ideal.len(), 3 * (n - 1));
            let direct = center_by_null_space(&c, &a.dla, DEFAULT_BUDGET).unwrap();
            assert_eq!(rank(&[direct.clone(), a.center.clone()].concat()), direct.len());
        }
    }

    #[test]
    fn idempotent() {
        let g = Graph::complete(4).unwrap();
        let (a, b) = maxcut_generators(&g).unwrap();
        let r = generate_dla(&[a, b], DEFAULT_BUDGET).unwrap();
        let again = generate_dla(&r.basis, DEFAULT_BUDGET).unwrap();
        assert_eq!(again.dimension, r.dimension);
        assert_eq!(r.dimension, 15);
    }

    #[test]
    fn orbit_coordinates_agree() {
        for n in 3..=6 {
            let g = Graph::cycle(n).unwrap();
            let (a, b) = maxcut_generators(&g).unwrap();
            let raw = analyze(&PauliCoordinates::new(&[a.clone(), b.clone()]).unwrap(), DEFAULT_BUDGET).unwrap();
            let oc = OrbitCoordinates::new(&PermGroup::dihedral(n), &[a, b]).unwrap();
            let orb = analyze(&oc, DEFAULT_BUDGET).unwrap();
            assert_eq!(orb.dla.dimension(), raw.dla.dimension());
            assert_eq!(orb.dla.degree, raw.dla.degree);
            assert_eq!(orb.center.len(), raw.center.len());
            let expanded: Vec<_> = orb.dla.basis.iter().map(|r| oc.expand(r)).collect();
            let both = [expanded.clone(), raw.dla.basis.clone()].concat();
            assert_eq!(rank(&both), raw.dla.dimension());
        }
    }

    #[test]
    fn modular_matches_exact() {
        let graphs = [
            Graph::cycle(4).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::path(4).unwrap(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap(),
        ];
        for g in &graphs {
            let c = coords(g);
            let exact = dimensions(&c, DEFAULT_BUDGET, RankArithmetic::Exact).unwrap();
            let modular = dimensions(&c, DEFAULT_BUDGET, RankArithmetic::Modular).unwrap();
            assert_eq!(exact, modular);
            let dla = generate(&c, DEFAULT_BUDGET).unwrap();
            let m = generate_modular(&c, DEFAULT_BUDGET).unwrap();
            assert_eq!(rank(&[dla.basis.clone(), m.basis.clone()].concat()), dla.dimension());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let c = coords(&Graph::cycle(5).unwrap());
        match generate(&c, 20) {
            Err(Error::BudgetExceeded { stage, .. }) => assert_eq!(stage, "closure"),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn non_invariant_generator_rejected() {
        let a = PauliVector::parse_terms(3, &[("XII", 1)]).unwrap();
        assert!(OrbitCoordinates::new(&PermGroup::dihedral(3), &[a]).is_err());
    }
}
