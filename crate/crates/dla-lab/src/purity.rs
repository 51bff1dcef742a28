//! Purities of the initial state and the cut observable with respect to a
//! subalgebra, and the moments of the QAOA loss for cycles.
//!
//! Vectors are real coefficients on Pauli strings; `⟨A, B⟩ = 2^n Σ a_P b_P`.
//! A skew-Hermitian basis element `iΣ e_P P` is stored as its real vector `e`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::cycle::{self, cycle_basis, cycle_center, su2_basis, CycleOrbitSum};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::{PauliString, PauliVector};

/// `Σ c_P P` with real coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianVector {
    n: usize,
    entries: BTreeMap<PauliString, f64>,
}

impl HermitianVector {
    pub fn zero(n: usize) -> Self {
        Self { n, entries: BTreeMap::new() }
    }

    pub fn from_terms<I: IntoIterator<Item = (PauliString, f64)>>(n: usize, terms: I) -> Result<Self> {
        let mut out = Self::zero(n);
        for (p, c) in terms {
            if p.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: p.n() });
            }
            let v = out.entries.remove(&p).unwrap_or(0.0) + c;
            if v != 0.0 {
                out.entries.insert(p, v);
            }
        }
        Ok(out)
    }

    pub fn from_pauli_vector(v: &PauliVector) -> Self {
        let entries = v.terms().map(|(p, c)| (*p, c.to_f64().unwrap_or(f64::NAN))).filter(|(_, c)| *c != 0.0).collect();
        Self { n: v.n(), entries }
    }

    pub fn from_orbits<T: cycle::Coefficient + ToPrimitive>(s: &CycleOrbitSum<T>) -> Result<Self> {
        let terms = s.expand_terms()?;
        Self::from_terms(s.n(), terms.into_iter().map(|(p, c)| (p, c.to_f64().unwrap_or(f64::NAN))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, p: &PauliString) -> f64 {
        self.entries.get(p).copied().unwrap_or(0.0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PauliString, &f64)> {
        self.entries.iter()
    }

    pub fn scaled(&self, c: f64) -> Self {
        let entries = self.entries.iter().map(|(p, v)| (*p, v * c)).filter(|(_, v)| *v != 0.0).collect();
        Self { n: self.n, entries }
    }

    /// `self - c·other`.
    fn minus_scaled(&self, c: f64, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, v) in &other.entries {
            let e = out.entries.entry(*p).or_insert(0.0);
            *e -= c * v;
            if *e == 0.0 {
                out.entries.remove(p);
            }
        }
        out
    }

    /// `Σ a_P b_P`, without the `2^n`.
    pub fn dot(&self, other: &Self) -> f64 {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small.entries.iter().map(|(p, v)| v * large.get(p)).sum()
    }
}

/// `tr(A B) = 2^n Σ a_P b_P`.
pub fn hs_inner(a: &HermitianVector, b: &HermitianVector) -> Result<f64> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch { left: a.n, right: b.n });
    }
    Ok(2f64.powi(a.n as i32) * a.dot(b))
}

/// Largest `n` for which `|+⟩⟨+|^{⊗n}` is built explicitly.
pub const PLUS_STATE_CAP: usize = 20;

/// `|+⟩⟨+|^{⊗n} = 2^{-n} Σ_{S ⊆ [n]} X_S`.
pub fn plus_state(n: usize) -> Result<HermitianVector> {
    if n == 0 {
        return Err(Error::InvalidArgument("plus state needs n >= 1".into()));
    }
    if n > PLUS_STATE_CAP {
        return Err(Error::SizeCap { what: "plus state", cap: PLUS_STATE_CAP, n });
    }
    let c = 0.5f64.powi(n as i32);
    HermitianVector::from_terms(n, (0u64..1 << n).map(|x| (PauliString::new(n, x, 0).expect("mask fits"), c)))
}

/// `O = |E|^{-1/2} Σ_{(j,k) ∈ E} Z_j Z_k`.
pub fn cut_observable(g: &Graph) -> Result<HermitianVector> {
    if g.edges().is_empty() {
        return Err(Error::InvalidArgument("cut observable needs at least one edge".into()));
    }
    let n = g.n();
    let c = 1.0 / (g.edges().len() as f64).sqrt();
    let terms = g
        .edges()
        .iter()
        .map(|&(a, b)| Ok((PauliString::new(n, 0, (1 << a) | (1 << b))?, c)))
        .collect::<Result<Vec<_>>>()?;
    HermitianVector::from_terms(n, terms)
}

const ORTHOGONALITY_TOLERANCE: f64 = 1e-12;

/// Orthogonal basis of the span of `basis`, by modified Gram–Schmidt when
/// the input is not already orthogonal. Errors on dependent input.
pub fn orthogonalize(basis: &[HermitianVector]) -> Result<Vec<HermitianVector>> {
    let norms: Vec<f64> = basis.iter().map(|b| b.dot(b)).collect();
    let orthogonal = (0..basis.len()).all(|i| {
        (0..i).all(|j| basis[i].dot(&basis[j]).abs() <= ORTHOGONALITY_TOLERANCE * (norms[i] * norms[j]).sqrt())
    });
    if orthogonal && norms.iter().all(|&v| v > 0.0) {
        return Ok(basis.to_vec());
    }
    let mut out: Vec<HermitianVector> = Vec::with_capacity(basis.len());
    for (b, &norm) in basis.iter().zip(&norms) {
        let mut v = b.clone();
        for e in &out {
            v = v.minus_scaled(v.dot(e) / e.dot(e), e);
        }
        if v.dot(&v) <= ORTHOGONALITY_TOLERANCE * norm {
            return Err(Error::InvalidArgument("purity basis is linearly dependent".into()));
        }
        out.push(v);
    }
    Ok(out)
}

/// `𝒫_s(H) = Σ_j ⟨B_j, H⟩² / ⟨B_j, B_j⟩` over an orthogonalized basis of `s`.
pub fn purity(h: &HermitianVector, basis: &[HermitianVector]) -> Result<f64> {
    let mut total = 0.0;
    for b in orthogonalize(basis)? {
        let num = hs_inner(&b, h)?;
        total += num * num / hs_inner(&b, &b)?;
    }
    Ok(total)
}

/// `tr(ρ_c O_c)` for the center spanned by `center_basis`.
pub fn expectation(rho: &HermitianVector, obs: &HermitianVector, center_basis: &[HermitianVector]) -> Result<f64> {
    let mut total = 0.0;
    for b in orthogonalize(center_basis)? {
        total += hs_inner(&b, rho)? * hs_inner(&b, obs)? / hs_inner(&b, &b)?;
    }
    Ok(total)
}

/// Purities, expectation and variance for `C_n` with `ρ = |+⟩⟨+|^{⊗n}` and
/// the cut observable.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralReport {
    pub n: usize,
    /// `(𝒫_g(ρ), 𝒫_g(O))`.
    pub purity_whole: (f64, f64),
    pub purity_center: (f64, f64),
    /// `(k, 𝒫_{g_k}(ρ), 𝒫_{g_k}(O))` for `k = 1..n`.
    pub purity_per_component: Vec<(usize, f64, f64)>,
    pub expectation: f64,
    pub variance: f64,
}

impl SpectralReport {
    pub fn max_deviation(&self, other: &Self) -> f64 {
        let mut d = [
            self.purity_whole.0 - other.purity_whole.0,
            self.purity_whole.1 - other.purity_whole.1,
            self.purity_center.0 - other.purity_center.0,
            self.purity_center.1 - other.purity_center.1,
            self.expectation - other.expectation,
            self.variance - other.variance,
        ]
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()));
        for (a, b) in self.purity_per_component.iter().zip(&other.purity_per_component) {
            d = d.max((a.1 - b.1).abs()).max((a.2 - b.2).abs());
        }
        if self.purity_per_component.len() != other.purity_per_component.len() {
            d = f64::INFINITY;
        }
        d
    }
}

fn parity(n: usize) -> usize {
    n % 2
}

fn check_cycle(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(())
}

/// `Var = 2(n - parity(n)) / (3n)`, exactly.
pub fn cycle_variance_exact(n: usize) -> Result<BigRational> {
    check_cycle(n)?;
    Ok(BigRational::new(BigInt::from(2 * (n - parity(n))), BigInt::from(3 * n)))
}

/// The closed forms, valid for every `n >= 3`.
pub fn cycle_closed_forms(n: usize) -> Result<SpectralReport> {
    check_cycle(n)?;
    let nf = n as f64;
    let two_n = 2f64.powi(n as i32);
    let rho_center = if parity(n) == 1 { 2.0 / two_n } else { 0.0 };
    let purity_per_component = (1..n)
        // sin^2(kπ/2) is the parity of k
        .map(|k| (k, parity(k) as f64 * 4.0 / two_n, two_n / nf))
        .collect();
    Ok(SpectralReport {
        n,
        purity_whole: (2.0 * nf / two_n, two_n),
        purity_center: (rho_center, two_n / nf),
        purity_per_component,
        expectation: parity(n) as f64 / nf.sqrt(),
        variance: cycle_variance_exact(n)?.to_f64().unwrap_or(f64::NAN),
    })
}

/// Largest `n` for [`cycle_spectral_computed`].
pub const SPECTRAL_COMPUTE_CAP: usize = 16;

/// The same quantities from the expanded orbit basis, center and `su(2)`
/// components, with the variance assembled as `Σ_k 𝒫_{g_k}(ρ) 𝒫_{g_k}(O) / 3`.
pub fn cycle_spectral_computed(n: usize) -> Result<SpectralReport> {
    check_cycle(n)?;
    if n > SPECTRAL_COMPUTE_CAP {
        return Err(Error::SizeCap { what: "cycle spectral computation", cap: SPECTRAL_COMPUTE_CAP, n });
    }
    let rho = plus_state(n)?;
    let obs = cut_observable(&Graph::cycle(n)?)?;
    let whole = cycle_basis(n)?
        .into_iter()
        .map(|o| HermitianVector::from_orbits(&CycleOrbitSum::<i64>::unit(n, o)?))
        .collect::<Result<Vec<_>>>()?;
    let (c1, c2) = cycle_center(n)?;
    let center = vec![HermitianVector::from_orbits(&c1)?, HermitianVector::from_orbits(&c2)?];
    let mut purity_per_component = Vec::new();
    let mut variance = 0.0;
    for t in su2_basis(n)? {
        let g_k = [&t.x, &t.y, &t.z].into_iter().map(HermitianVector::from_orbits).collect::<Result<Vec<_>>>()?;
        let (pr, po) = (purity(&rho, &g_k)?, purity(&obs, &g_k)?);
        variance += pr * po / 3.0;
        purity_per_component.push((t.k, pr, po));
    }
    Ok(SpectralReport {
        n,
        purity_whole: (purity(&rho, &whole)?, purity(&obs, &whole)?),
        purity_center: (purity(&rho, &center)?, purity(&obs, &center)?),
        purity_per_component,
        expectation: expectation(&rho, &obs, &center)?,
        variance,
    })
}

/// Closed forms alongside the recomputation where it is available.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralComparison {
    pub closed: SpectralReport,
    pub computed: Option<SpectralReport>,
}

impl SpectralComparison {
    pub fn max_deviation(&self) -> Option<f64> {
        self.computed.as_ref().map(|c| c.max_deviation(&self.closed))
    }
}

pub fn cycle_spectral_report(n: usize) -> Result<SpectralComparison> {
    let closed = cycle_closed_forms(n)?;
    let computed = if n <= SPECTRAL_COMPUTE_CAP { Some(cycle_spectral_computed(n)?) } else { None };
    Ok(SpectralComparison { closed, computed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plus_state_small() {
        let r = plus_state(1).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r.get(&"X".parse().unwrap()), 0.5);
        assert_eq!(plus_state(3).unwrap().len(), 8);
        assert!(plus_state(21).is_err());
    }

    #[test]
    fn observable_norm() {
        let o = cut_observable(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(o.len(), 3);
        assert!((hs_inner(&o, &o).unwrap() - 8.0).abs() < 1e-12);
        let o = cut_observable(&Graph::cycle(4).unwrap()).unwrap();
        assert!(o.terms().all(|(_, c)| (*c - 0.5).abs() < 1e-15));
    }

    #[test]
    fn empty_basis() {
        assert_eq!(purity(&plus_state(3).unwrap(), &[]).unwrap(), 0.0);
    }

    #[test]
    fn non_orthogonal_basis() {
        let a = HermitianVector::from_terms(2, [("XI".parse().unwrap(), 1.0)]).unwrap();
        let b = HermitianVector::from_terms(2, [("XI".parse().unwrap(), 1.0), ("IX".parse().unwrap(), 1.0)]).unwrap();
        let rho = plus_state(2).unwrap();
        let p = purity(&rho, &[a.clone(), b]).unwrap();
        // span{XI, IX}: (4·¼)² / 4 twice
        assert!((p - 0.5).abs() < 1e-12);
        assert!(purity(&rho, &[a.clone(), a]).is_err());
    }

    #[test]
    fn spot_values() {
        let r = cycle_spectral_computed(4).unwrap();
        assert!((r.variance - 2.0 / 3.0).abs() < 1e-12);
        assert!(r.expectation.abs() < 1e-12);
        assert!((r.purity_per_component[0].1 - 0.25).abs() < 1e-12);
        assert!(r.purity_per_component[1].1.abs() < 1e-12);
        let r = cycle_spectral_computed(5).unwrap();
        assert!((r.expectation - 1.0 / 5f64.sqrt()).abs() < 1e-12);
        assert!((r.variance - 8.0 / 15.0).abs() < 1e-12);
        let r = cycle_spectral_computed(3).unwrap();
        assert!((r.purity_center.0 - 0.25).abs() < 1e-12);
        assert!((r.purity_center.1 - 8.0 / 3.0).abs() < 1e-12);
        assert_eq!(cycle_variance_exact(5).unwrap(), BigRational::new(8.into(), 15.into()));
    }
}
