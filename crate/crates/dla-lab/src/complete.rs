//! The complete graph `K_n` in symmetric-orbit coordinates `X^pY^qZ^r`.
//!
//! `X^pY^qZ^r` is `i` times the sum of all strings with `p` X's, `q` Y's and
//! `r` Z's; labels with a negative entry or `p + q + r > n` denote zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::closure::{self, integer_row, Analysis, LieCoordinates};
use crate::error::{Error, Result};
use crate::linalg::{self, LinearLedger, SparseRow};
use crate::pauli::{Pauli, PauliString, PauliVector};

/// Label `(p, q, r)` of `X^pY^qZ^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymOrbit {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl SymOrbit {
    pub const fn new(p: usize, q: usize, r: usize) -> Self {
        Self { p, q, r }
    }

    pub fn in_range(&self, n: usize) -> bool {
        self.p + self.q + self.r <= n
    }

    /// Number of strings in the orbit, `n!/(p! q! r! (n-p-q-r)!)`.
    pub fn size(&self, n: usize) -> BigInt {
        let mut out = BigInt::one();
        let mut left = n;
        for k in [self.p, self.q, self.r] {
            out *= binomial(left, k);
            left -= k;
        }
        out
    }

    /// All labels for `n` qubits, in key order.
    pub fn all(n: usize) -> impl Iterator<Item = SymOrbit> {
        (0..=n).flat_map(move |p| (0..=n - p).flat_map(move |q| (0..=n - p - q).map(move |r| SymOrbit::new(p, q, r))))
    }
}

impl fmt::Display for SymOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X^{}Y^{}Z^{}", self.p, self.q, self.r)
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

fn label(n: usize, p: i64, q: i64, r: i64) -> Option<SymOrbit> {
    if p < 0 || q < 0 || r < 0 || p + q + r > n as i64 {
        return None;
    }
    Some(SymOrbit::new(p as usize, q as usize, r as usize))
}

/// `[X^1, X^pY^qZ^r] = 2(q+1) X^pY^{q+1}Z^{r-1} - 2(r+1) X^pY^{q-1}Z^{r+1}`.
pub fn ad_x1_terms(n: usize, s: SymOrbit) -> Vec<(SymOrbit, i64)> {
    if !s.in_range(n) {
        return Vec::new();
    }
    let (p, q, r) = (s.p as i64, s.q as i64, s.r as i64);
    [(label(n, p, q + 1, r - 1), 2 * (q + 1)), (label(n, p, q - 1, r + 1), -2 * (r + 1))]
        .into_iter()
        .filter_map(|(k, c)| k.map(|k| (k, c)))
        .collect()
}

/// `[Z^2, X^pY^qZ^r] = α1 X^{p+1}Y^{q-1}Z^{r-1} + α2 X^{p+1}Y^{q-1}Z^{r+1}
/// - α3 X^{p-1}Y^{q+1}Z^{r-1} - α4 X^{p-1}Y^{q+1}Z^{r+1}` with `m = n-p-q-r+1`,
/// `α1 = 2m(p+1)`, `α2 = 2(p+1)(r+1)`, `α3 = 2m(q+1)`, `α4 = 2(q+1)(r+1)`.
pub fn ad_z2_terms(n: usize, s: SymOrbit) -> Vec<(SymOrbit, i64)> {
    if !s.in_range(n) {
        return Vec::new();
    }
    let (p, q, r) = (s.p as i64, s.q as i64, s.r as i64);
    let m = n as i64 - p - q - r + 1;
    [
        (label(n, p + 1, q - 1, r - 1), 2 * m * (p + 1)),
        (label(n, p + 1, q - 1, r + 1), 2 * (p + 1) * (r + 1)),
        (label(n, p - 1, q + 1, r - 1), -2 * m * (q + 1)),
        (label(n, p - 1, q + 1, r + 1), -2 * (q + 1) * (r + 1)),
    ]
    .into_iter()
    .filter_map(|(k, c)| k.map(|k| (k, c)))
    .collect()
}

/// Exact rational combination of symmetric orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymOrbitSum {
    n: usize,
    terms: BTreeMap<SymOrbit, BigRational>,
}

impl SymOrbitSum {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn unit(n: usize, s: SymOrbit) -> Result<Self> {
        let mut out = Self::zero(n);
        out.add_term(s, BigRational::one())?;
        Ok(out)
    }

    pub fn from_terms<I: IntoIterator<Item = (SymOrbit, BigRational)>>(n: usize, terms: I) -> Result<Self> {
        let mut out = Self::zero(n);
        for (s, c) in terms {
            out.add_term(s, c)?;
        }
        Ok(out)
    }

    pub fn add_term(&mut self, s: SymOrbit, c: BigRational) -> Result<()> {
        if !s.in_range(self.n) {
            return Err(Error::InvalidArgument(format!("{s} out of range for n = {}", self.n)));
        }
        self.add_unchecked(s, c);
        Ok(())
    }

    fn add_unchecked(&mut self, s: SymOrbit, c: BigRational) {
        let v = self.terms.remove(&s).map_or(c.clone(), |old| old + c);
        if !v.is_zero() {
            self.terms.insert(s, v);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SymOrbit, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.n);
        for (s, v) in &self.terms {
            out.add_unchecked(*s, v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for (s, v) in &other.terms {
            out.add_unchecked(*s, v.clone());
        }
        Ok(out)
    }

    fn apply(&self, f: fn(usize, SymOrbit) -> Vec<(SymOrbit, i64)>) -> Self {
        let mut out = Self::zero(self.n);
        for (s, v) in &self.terms {
            for (t, c) in f(self.n, *s) {
                out.add_unchecked(t, v * BigInt::from(c));
            }
        }
        out
    }

    pub fn ad_x1(&self) -> Self {
        self.apply(ad_x1_terms)
    }

    pub fn ad_z2(&self) -> Self {
        self.apply(ad_z2_terms)
    }

    /// Primitive integer row with the same span.
    pub fn to_row(&self) -> SparseRow<SymOrbit> {
        integer_row(self.terms.iter().map(|(s, c)| (*s, c.clone())).collect())
    }

    pub fn from_row(n: usize, row: &SparseRow<SymOrbit>) -> Result<Self> {
        Self::from_terms(n, row.entries().iter().map(|(s, c)| (*s, BigRational::from_integer(c.clone()))))
    }
}

/// Largest `n` for which orbits are expanded into Pauli strings.
pub const EXPAND_CAP: usize = 8;

/// Strings of the orbit `s`.
pub fn orbit_strings(n: usize, s: SymOrbit) -> Result<Vec<PauliString>> {
    if n > EXPAND_CAP {
        return Err(Error::SizeCap { what: "symmetric orbit expansion", cap: EXPAND_CAP, n });
    }
    if !s.in_range(n) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut sites = vec![Pauli::I; n];
    fill(&mut sites, 0, [s.p, s.q, s.r], &mut out);
    out.into_iter()
        .map(|sites| {
            let pairs: Vec<_> = sites.into_iter().enumerate().filter(|(_, p)| *p != Pauli::I).collect();
            PauliString::from_sites(n, &pairs)
        })
        .collect()
}

fn fill(sites: &mut Vec<Pauli>, j: usize, left: [usize; 3], out: &mut Vec<Vec<Pauli>>) {
    let remaining = sites.len() - j;
    let used: usize = left.iter().sum();
    if used > remaining {
        return;
    }
    if j == sites.len() {
        out.push(sites.clone());
        return;
    }
    if used < remaining {
        sites[j] = Pauli::I;
        fill(sites, j + 1, left, out);
    }
    for (slot, pauli) in [Pauli::X, Pauli::Y, Pauli::Z].into_iter().enumerate() {
        if left[slot] > 0 {
            let mut next = left;
            next[slot] -= 1;
            sites[j] = pauli;
            fill(sites, j + 1, next, out);
        }
    }
    sites[j] = Pauli::I;
}

pub fn expand_sym(s: &SymOrbitSum) -> Result<PauliVector> {
    let mut terms = Vec::new();
    for (o, c) in s.terms() {
        terms.extend(orbit_strings(s.n(), *o)?.into_iter().map(|p| (p, c.clone())));
    }
    PauliVector::from_terms(s.n(), terms)
}

/// Closure coordinates for `K_n`: generators `X^1` and `Z^2`.
pub struct CompleteCoordinates {
    n: usize,
    generators: Vec<SparseRow<SymOrbit>>,
}

impl CompleteCoordinates {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("complete graph needs n >= 2, got {n}")));
        }
        Ok(Self {
            n,
            generators: vec![
                SparseRow::single(SymOrbit::new(1, 0, 0), 1),
                SparseRow::single(SymOrbit::new(0, 0, 2), 1),
            ],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl LieCoordinates for CompleteCoordinates {
    type Key = SymOrbit;

    fn generators(&self) -> &[SparseRow<SymOrbit>] {
        &self.generators
    }

    fn bracket_generator(&self, index: usize, v: &SparseRow<SymOrbit>) -> SparseRow<SymOrbit> {
        let f = if index == 0 { ad_x1_terms } else { ad_z2_terms };
        let mut terms = Vec::new();
        for (s, c) in v.entries() {
            terms.extend(f(self.n, *s).into_iter().map(|(t, k)| (t, c * k)));
        }
        SparseRow::from_terms(terms)
    }

    fn weight(&self, key: &SymOrbit) -> BigInt {
        key.size(self.n)
    }
}

/// Closure, ideal and center of `g_{K_n}` in orbit coordinates.
pub fn complete_analysis(n: usize, budget: usize) -> Result<Analysis<SymOrbit>> {
    closure::analyze(&CompleteCoordinates::new(n)?, budget)
}

fn labels_where(n: usize, f: impl Fn(usize, usize, usize) -> bool) -> Vec<SymOrbit> {
    SymOrbit::all(n).filter(|s| f(s.p, s.q, s.r)).collect()
}

fn odd(k: usize) -> bool {
    k % 2 == 1
}

fn even(k: usize) -> bool {
    k % 2 == 0
}

fn units(n: usize, labels: &[SymOrbit]) -> Vec<SymOrbitSum> {
    labels.iter().map(|&s| SymOrbitSum::unit(n, s).expect("label in range")).collect()
}

/// Explicit basis of `g_{K_n}`.
///
/// Even `n`: `J_1 ∪ … ∪ J_5 ∪ L_1 ∪ L_2` with `J_5 = {Y^1Z^1, Y^2, Z^2}`,
/// `L_1 = ad_{X^1}(J_1)` and `L_2 = ad_{Z^2}(J_2)`. Odd `n`: `Q ∪ V_1 ∪ V_2`.
pub fn kn_basis(n: usize) -> Result<Vec<SymOrbitSum>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("explicit basis needs n >= 3, got {n}")));
    }
    let y1z1 = SymOrbit::new(0, 1, 1);
    if n % 2 == 0 {
        let j1 = labels_where(n, |p, q, r| even(p) && odd(q) && odd(r) && (p, q, r) != (0, 1, 1));
        let j2 = labels_where(n, |p, q, r| q == 1 && odd(p) && odd(r));
        let j3 = labels_where(n, |p, q, r| odd(p) && odd(q) && odd(r) && q >= 3);
        let j4 = labels_where(n, |p, q, r| odd(p) && even(q) && even(r));
        let j5 = [y1z1, SymOrbit::new(0, 2, 0), SymOrbit::new(0, 0, 2)];
        let mut out = Vec::new();
        for set in [&j1[..], &j2, &j3, &j4, &j5] {
            out.extend(units(n, set));
        }
        out.extend(units(n, &j1).iter().map(SymOrbitSum::ad_x1));
        out.extend(units(n, &j2).iter().map(SymOrbitSum::ad_z2));
        Ok(out)
    } else {
        let mut q_set = labels_where(n, |_, q, r| odd(q) && odd(r));
        q_set.extend(labels_where(n, |p, q, r| p == 1 && even(q) && even(r)));
        q_set.extend([SymOrbit::new(2, 0, 0), SymOrbit::new(0, 2, 0), SymOrbit::new(0, 0, 2)]);
        let u1 = labels_where(n, |p, q, r| odd(q) && odd(r) && p != 1 && (p, q, r) != (0, 1, 1));
        let u2 = labels_where(n, |p, q, r| q == 1 && odd(r) && p != 0 && (p, q, r) != (1, 1, n - 2));
        let mut out = units(n, &q_set);
        out.extend(units(n, &u1).iter().map(SymOrbitSum::ad_x1));
        out.extend(units(n, &u2).iter().map(SymOrbitSum::ad_z2));
        Ok(out)
    }
}

/// Spanning set `K ∪ ad_{X^1}(K) ∪ ad_{Z^2}({X^pY^1Z^r : r odd})` of
/// `[g, g]`, where `K = {X^pY^qZ^r : q, r odd}`.
pub fn kn_ideal_basis(n: usize) -> Result<Vec<SymOrbitSum>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("explicit ideal basis needs n >= 3, got {n}")));
    }
    let k = units(n, &labels_where(n, |_, q, r| odd(q) && odd(r)));
    let mut out = k.clone();
    out.extend(k.iter().map(SymOrbitSum::ad_x1));
    out.extend(units(n, &labels_where(n, |_, q, r| q == 1 && odd(r))).iter().map(SymOrbitSum::ad_z2));
    Ok(out)
}

pub fn rank_of(sums: &[SymOrbitSum]) -> usize {
    let rows: Vec<_> = sums.iter().map(SymOrbitSum::to_row).collect();
    linalg::rank(&rows)
}

/// One membership or identity claim and whether it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactCheck {
    pub name: String,
    pub holds: bool,
}

/// Largest `n` for [`fact_suite`].
pub const FACT_SUITE_CAP: usize = 12;

/// Membership facts about `g_{K_n}`, tested by exact rank against the
/// closure span.
pub fn fact_suite(n: usize) -> Result<Vec<FactCheck>> {
    if !(3..=FACT_SUITE_CAP).contains(&n) {
        return Err(Error::SizeCap { what: "complete-graph fact suite", cap: FACT_SUITE_CAP, n });
    }
    let dla = closure::generate(&CompleteCoordinates::new(n)?, linalg::DEFAULT_BUDGET)?;
    let mut ledger = LinearLedger::with_budget(usize::MAX);
    for row in &dla.basis {
        let _ = ledger.insert(row);
    }
    let member = |s: SymOrbit| ledger.contains(&SparseRow::single(s, 1));
    let all_in = |labels: Vec<SymOrbit>| labels.into_iter().all(member);
    let mut out = Vec::new();
    let mut check = |name: &str, holds: bool| out.push(FactCheck { name: name.into(), holds });

    check("X^pY^qZ^r in g for odd q, r", all_in(labels_where(n, |_, q, r| odd(q) && odd(r))));
    check("Y^1Z^r in g for odd r", all_in(labels_where(n, |p, q, r| p == 0 && q == 1 && odd(r))));
    check("X^1Y^1Z^r in g for odd r", all_in(labels_where(n, |p, q, r| p == 1 && q == 1 && odd(r))));
    check("X^1Z^r in g for even r", all_in(labels_where(n, |p, q, r| p == 1 && q == 0 && even(r))));
    check("X^1Y^qZ^r in g for even q, r", all_in(labels_where(n, |p, q, r| p == 1 && even(q) && even(r))));
    check("Y^2 in g", member(SymOrbit::new(0, 2, 0)));
    if n % 2 == 1 {
        check("X^2 in g", member(SymOrbit::new(2, 0, 0)));
    } else {
        check("X^pY^qZ^r in g for odd p, even q, r", all_in(labels_where(n, |p, q, r| odd(p) && even(q) && even(r))));
        check("X^2 not in g", !member(SymOrbit::new(2, 0, 0)));
    }
    check("X^n not in g", !member(SymOrbit::new(n, 0, 0)));
    check("identity not in g", !member(SymOrbit::new(0, 0, 0)));

    let mut reduces = true;
    for s in labels_where(n, |_, q, r| odd(q) && q >= 3 && odd(r)) {
        reduces &= reduction_residual(n, s)?.is_empty();
    }
    check("ad_{Z^2} reduction of X^pY^qZ^r, odd q >= 3", reduces);

    let (l1, l2): (Vec<_>, Vec<_>) = if n % 2 == 0 {
        (
            labels_where(n, |p, q, r| even(p) && odd(q) && odd(r) && (p, q, r) != (0, 1, 1)),
            labels_where(n, |p, q, r| q == 1 && odd(p) && odd(r)),
        )
    } else {
        (
            labels_where(n, |p, q, r| odd(q) && odd(r) && p != 1 && (p, q, r) != (0, 1, 1)),
            labels_where(n, |p, q, r| q == 1 && odd(r) && p != 0 && (p, q, r) != (1, 1, n - 2)),
        )
    };
    let mut images: Vec<_> = units(n, &l1).iter().map(SymOrbitSum::ad_x1).collect();
    images.extend(units(n, &l2).iter().map(SymOrbitSum::ad_z2));
    check("ad images in the explicit basis are independent", rank_of(&images) == images.len());
    Ok(out)
}

/// `ad_{Z^2}(X^pY^qZ^r)` minus its expression through `ad_{X^1}` images and
/// `ad_{Z^2}(X^pY^{q-2}Z^{r+2})`; zero when the reduction holds.
pub fn reduction_residual(n: usize, s: SymOrbit) -> Result<SymOrbitSum> {
    if s.q < 3 || !s.in_range(n) {
        return Err(Error::InvalidArgument(format!("reduction needs q >= 3 and an in-range label, got {s}")));
    }
    let (p, q, r) = (s.p as i64, s.q as i64, s.r as i64);
    let frac = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
    let m = n as i64 - p - q - r + 1;
    let unit = |p: i64, q: i64, r: i64| -> SymOrbitSum {
        match label(n, p, q, r) {
            Some(l) => SymOrbitSum::unit(n, l).expect("label in range"),
            None => SymOrbitSum::zero(n),
        }
    };
    let lhs = unit(p, q, r).ad_z2();
    let rhs = [
        (unit(p + 1, q - 2, r).ad_x1(), frac(m * (p + 1), q - 1)),
        (unit(p + 1, q - 2, r + 2).ad_x1(), frac((r + 1) * (p + 1), q - 1)),
        (unit(p - 1, q, r).ad_x1(), frac(-m, 1)),
        (unit(p - 1, q, r + 2).ad_x1(), frac(-(r + 1), 1)),
        (unit(p, q - 2, r + 2).ad_z2(), frac(r + 1, q - 1)),
    ]
    .iter()
    .try_fold(SymOrbitSum::zero(n), |acc, (v, c)| acc.add(&v.scaled(c)))?;
    lhs.add(&rhs.scaled(&-BigRational::one()))
}

/// Dimensions from orbit-compressed closure next to the explicit bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteReport {
    pub n: usize,
    pub dimension: usize,
    pub degree: usize,
    pub ideal_dimension: usize,
    pub center_dimension: usize,
    pub basis_size: usize,
    pub basis_rank: usize,
    pub basis_matches_closure: bool,
    pub ideal_basis_rank: usize,
    pub ideal_basis_matches: bool,
}

pub fn complete_report(n: usize, budget: usize) -> Result<CompleteReport> {
    let analysis = complete_analysis(n, budget)?;
    let basis: Vec<_> = kn_basis(n)?.iter().map(SymOrbitSum::to_row).collect();
    let ideal: Vec<_> = kn_ideal_basis(n)?.iter().map(SymOrbitSum::to_row).collect();
    Ok(CompleteReport {
        n,
        dimension: analysis.dla.dimension(),
        degree: analysis.dla.degree,
        ideal_dimension: analysis.ideal.len(),
        center_dimension: analysis.center.len(),
        basis_size: basis.len(),
        basis_rank: linalg::rank(&basis),
        basis_matches_closure: linalg::same_span(&basis, &analysis.dla.basis),
        ideal_basis_rank: linalg::rank(&ideal),
        ideal_basis_matches: linalg::same_span(&ideal, &analysis.ideal),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::kn_formulas;
    use crate::pauli::commutator;

    #[test]
    fn bracket_examples() {
        let n = 5;
        let z2 = SymOrbitSum::unit(n, SymOrbit::new(0, 0, 2)).unwrap();
        assert_eq!(
            z2.ad_x1(),
            SymOrbitSum::unit(n, SymOrbit::new(0, 1, 1)).unwrap().scaled(&BigRational::from_integer(2.into()))
        );
        let yz = SymOrbitSum::unit(n, SymOrbit::new(0, 1, 1)).unwrap().ad_z2();
        let want = SymOrbitSum::from_terms(
            n,
            [
                (SymOrbit::new(1, 0, 0), BigRational::from_integer(BigInt::from(2 * (n as i64 - 1)))),
                (SymOrbit::new(1, 0, 2), BigRational::from_integer(4.into())),
            ],
        );
        assert_eq!(yz, want.unwrap());
        assert_eq!(ad_x1_terms(4, SymOrbit::new(2, 1, 0)), vec![(SymOrbit::new(2, 0, 1), -2)]);
    }

    #[test]
    fn expansion_sizes() {
        let x1 = expand_sym(&SymOrbitSum::unit(3, SymOrbit::new(1, 0, 0)).unwrap()).unwrap();
        assert_eq!(x1, PauliVector::parse_terms(3, &[("XII", 1), ("IXI", 1), ("IIX", 1)]).unwrap());
        for n in 2..=6 {
            for s in SymOrbit::all(n) {
                assert_eq!(BigInt::from(orbit_strings(n, s).unwrap().len()), s.size(n));
            }
        }
    }

    #[test]
    fn homomorphism() {
        for n in 2..=5 {
            let x1 = expand_sym(&SymOrbitSum::unit(n, SymOrbit::new(1, 0, 0)).unwrap()).unwrap();
            let z2 = expand_sym(&SymOrbitSum::unit(n, SymOrbit::new(0, 0, 2)).unwrap()).unwrap();
            for s in SymOrbit::all(n) {
                let v = SymOrbitSum::unit(n, s).unwrap();
                let e = expand_sym(&v).unwrap();
                assert_eq!(expand_sym(&v.ad_x1()).unwrap(), commutator(&x1, &e).unwrap(), "n={n} {s}");
                assert_eq!(expand_sym(&v.ad_z2()).unwrap(), commutator(&z2, &e).unwrap(), "n={n} {s}");
            }
        }
    }

    #[test]
    fn small_reports() {
        for n in 3..=9 {
            let r = complete_report(n, linalg::DEFAULT_BUDGET).unwrap();
            let f = kn_formulas(n).unwrap();
            assert_eq!(r.dimension as u64, f.dim);
            assert_eq!(r.ideal_dimension as u64, f.ideal_dim);
            assert_eq!(r.center_dimension as u64, f.center_dim);
            assert_eq!((r.basis_size, r.basis_rank), (r.dimension, r.dimension));
            assert!(r.basis_matches_closure && r.ideal_basis_matches);
            assert_eq!(r.ideal_basis_rank, r.ideal_dimension);
        }
    }

    #[test]
    fn facts() {
        for n in 3..=8 {
            for f in fact_suite(n).unwrap() {
                assert!(f.holds, "n={n}: {}", f.name);
            }
        }
    }
}
