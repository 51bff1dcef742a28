//! Graph analysis reports and the verification suites for cycles and
//! complete graphs.

use num_bigint::BigUint;

use crate::closure::{self, Analysis, OrbitCoordinates, PauliCoordinates, RankArithmetic};
use crate::complete::{self, CompleteCoordinates, SymOrbit, SymOrbitSum};
use crate::cycle::{self, CycleOrbitSum};
use crate::error::{Error, Result};
use crate::graph::{dimension_bounds, kn_formulas, maxcut_generators, Family, Graph};
use crate::linalg::{self, SparseRow};
use crate::pauli::{commutator, PauliString};
use crate::purity;
use crate::symmetry::PermGroup;

/// Summary of the DLA of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphReport {
    pub n: usize,
    pub family: Option<Family>,
    pub orbit_compressed: bool,
    pub dimension: usize,
    pub degree: usize,
    pub center_dim: usize,
    pub ideal_dim: usize,
    pub aut_bound: BigUint,
    /// Every basis element is YZ-even and avoids `I^{⊗n}` and `X^{⊗n}`.
    pub yz_even_ok: bool,
    pub runtime_ms: u128,
}

// wasm32-unknown-unknown has no clock; runtimes read 0 there.
#[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
fn stopwatch() -> impl Fn() -> u128 {
    let start = std::time::Instant::now();
    move || start.elapsed().as_millis()
}

#[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
fn stopwatch() -> impl Fn() -> u128 {
    || 0
}

fn string_ok(p: &PauliString) -> bool {
    let all = if p.n() == 64 { u64::MAX } else { (1u64 << p.n()) - 1 };
    p.pauli_type().yz_even() && !p.is_identity() && !(p.x_mask() == all && p.z_mask() == 0)
}

fn keys_ok<K: Ord + Clone>(analysis: &Analysis<K>, ok: impl Fn(&K) -> bool) -> bool {
    analysis.dla.basis.iter().all(|row| row.keys().all(&ok))
}

/// Runs the closure, ideal and center for `g`. With `orbit_compress` the
/// closure runs in dihedral orbits (cycles) or `(p, q, r)` labels (complete
/// graphs); other graphs are rejected. `arithmetic` applies to raw closure
/// only; the orbit modes are always exact.
pub fn analyze_graph(
    g: &Graph,
    orbit_compress: bool,
    arithmetic: RankArithmetic,
    budget: usize,
) -> Result<GraphReport> {
    let elapsed = stopwatch();
    let n = g.n();
    let (dim, degree, center_dim, ideal_dim, yz_even_ok) = match (orbit_compress, g.family()) {
        (true, Some(Family::Complete)) => {
            let a = closure::analyze(&CompleteCoordinates::new(n)?, budget)?;
            let ok = keys_ok(&a, |s: &SymOrbit| {
                (s.q + s.r) % 2 == 0 && *s != SymOrbit::new(0, 0, 0) && *s != SymOrbit::new(n, 0, 0)
            });
            (a.dla.dimension(), a.dla.degree, a.center.len(), a.ideal.len(), ok)
        }
        (true, Some(Family::Cycle)) => {
            let (x, zz) = maxcut_generators(g)?;
            let a = closure::analyze(&OrbitCoordinates::new(&PermGroup::dihedral(n), &[x, zz])?, budget)?;
            (a.dla.dimension(), a.dla.degree, a.center.len(), a.ideal.len(), keys_ok(&a, string_ok))
        }
        (true, _) => {
            return Err(Error::InvalidArgument(
                "orbit compression is available for cycle and complete graphs only".into(),
            ))
        }
        (false, _) => {
            let (x, zz) = maxcut_generators(g)?;
            let coords = PauliCoordinates::new(&[x, zz])?;
            match arithmetic {
                RankArithmetic::Exact => {
                    let a = closure::analyze(&coords, budget)?;
                    (a.dla.dimension(), a.dla.degree, a.center.len(), a.ideal.len(), keys_ok(&a, string_ok))
                }
                RankArithmetic::Modular => {
                    // the modular basis rows are exact brackets, so their keys cover the span
                    let dla = closure::generate_modular(&coords, budget)?;
                    let d = closure::modular_dimensions(&coords, &dla, budget)?;
                    let ok = dla.basis.iter().all(|row| row.keys().all(string_ok));
                    (d.dimension, d.degree, d.center_dimension, d.ideal_dimension, ok)
                }
            }
        }
    };
    Ok(GraphReport {
        n,
        family: g.family(),
        orbit_compressed: orbit_compress,
        dimension: dim,
        degree,
        center_dim,
        ideal_dim,
        aut_bound: dimension_bounds(g)?.aut_bound,
        yz_even_ok,
        runtime_ms: elapsed(),
    })
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub tag: String,
    pub passed: bool,
    pub residual: Option<f64>,
    pub detail: String,
}

impl Check {
    fn exact(tag: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self { tag: tag.into(), passed, residual: None, detail: detail.into() }
    }

    fn residual(tag: &str, value: f64, tolerance: f64) -> Self {
        Self {
            tag: tag.into(),
            passed: value < tolerance,
            residual: Some(value),
            detail: format!("max residual {value:.3e} (tolerance {tolerance:.0e})"),
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub const CYCLE_SUITE_MAX: usize = 16;
/// Largest `n` for the raw-Pauli closure in the cycle suite.
pub const CYCLE_RAW_MAX: usize = 8;
/// Largest `n` for the wholesale orbit-table homomorphism check.
pub const CYCLE_TABLE_MAX: usize = 10;
/// Largest `n` for the Vandermonde reconstruction.
pub const VANDERMONDE_MAX: usize = 12;
/// Tolerance for the `(AB)^k` recursion and expansion checks (relative).
pub const AB_TOLERANCE: f64 = 1e-6;

/// Row of an orbit sum in dihedral orbit coordinates.
pub fn cycle_orbit_row(coords: &OrbitCoordinates, s: &CycleOrbitSum<i64>) -> Result<SparseRow<PauliString>> {
    let mut terms = Vec::new();
    for (o, c) in s.terms() {
        let first = o.strings(s.n())?[0];
        terms.push((coords.canonical(&first), num_bigint::BigInt::from(*c)));
    }
    Ok(SparseRow::from_terms(terms))
}

/// `expand(orbit_bracket(a, b)) == [expand(a), expand(b)]` for every pair of
/// basis orbits.
pub fn orbit_table_sound(n: usize) -> Result<bool> {
    let basis = cycle::cycle_basis(n)?;
    let expanded = basis.iter().map(|o| CycleOrbitSum::<i64>::unit(n, *o)?.expand()).collect::<Result<Vec<_>>>()?;
    for (a, ea) in basis.iter().zip(&expanded) {
        for (b, eb) in basis.iter().zip(&expanded) {
            if cycle::orbit_bracket(n, *a, *b)?.expand()? != commutator(ea, eb)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn verify_cycle(n: usize, tolerance: f64, budget: usize) -> Result<Vec<Check>> {
    if !(3..=CYCLE_SUITE_MAX).contains(&n) {
        return Err(Error::InvalidArgument(format!("verify-cycle needs 3 <= n <= {CYCLE_SUITE_MAX}, got {n}")));
    }
    let mut out = Vec::new();
    let g = Graph::cycle(n)?;
    let (x, zz) = maxcut_generators(&g)?;
    let coords = OrbitCoordinates::new(&PermGroup::dihedral(n), &[x.clone(), zz.clone()])?;
    let a = closure::analyze(&coords, budget)?;
    out.push(Check::exact(
        "dimension",
        a.dla.dimension() == 3 * n - 1,
        format!("dim {} (expected {}), degree {}", a.dla.dimension(), 3 * n - 1, a.dla.degree),
    ));
    if n <= CYCLE_RAW_MAX {
        let raw = closure::generate(&PauliCoordinates::new(&[x, zz])?, budget)?;
        out.push(Check::exact(
            "dimension (raw)",
            raw.dimension() == 3 * n - 1,
            format!("dim {}, degree {}", raw.dimension(), raw.degree),
        ));
    }
    let basis_rows = cycle::cycle_basis(n)?
        .into_iter()
        .map(|o| cycle_orbit_row(&coords, &CycleOrbitSum::unit(n, o)?))
        .collect::<Result<Vec<_>>>()?;
    out.push(Check::exact(
        "orbit basis",
        linalg::same_span(&basis_rows, &a.dla.basis),
        "orbit basis spans the closure",
    ));
    let (c1, c2) = cycle::cycle_center(n)?;
    let in_center = [&c1, &c2]
        .into_iter()
        .map(|c| Ok(closure::in_span(&a.center, &cycle_orbit_row(&coords, c)?)))
        .collect::<Result<Vec<bool>>>()?;
    out.push(Check::exact(
        "center",
        a.center.len() == 2 && in_center.iter().all(|&b| b),
        format!("center dim {}, closed-form vectors inside: {:?}", a.center.len(), in_center),
    ));
    out.push(Check::exact(
        "ideal",
        a.ideal.len() == 3 * (n - 1),
        format!("ideal dim {} (expected {})", a.ideal.len(), 3 * (n - 1)),
    ));
    if n <= CYCLE_TABLE_MAX {
        out.push(Check::exact("orbit bracket table", orbit_table_sound(n)?, "all basis pairs, exact"));
    }
    for r in cycle::verify_canonical(n)?.into_iter().chain(cycle::verify_su2(n)?) {
        if r.exact {
            out.push(Check::exact(&r.name, r.passes(tolerance), "exact in orbit coordinates"));
        } else {
            out.push(Check::residual(&r.name, r.value, tolerance));
        }
    }
    let c = cycle::verify_cartan(n)?;
    out.push(Check::exact(
        "cartan subalgebra",
        c.commuting && c.dimension == n - 1,
        format!("commuting {}, dim {}", c.commuting, c.dimension),
    ));
    out.push(Check::exact("(AB)^k eigen-relation", c.eigen_relation, "A^2 and B^2 act as -16, exact"));
    out.push(Check::exact("(AB)^k recursion", c.recursion_matches, "bracketing equals the recursion, exact"));
    out.push(Check::residual("H_k spans the cartan", c.h_span_residual, tolerance));
    let ab = cycle::verify_ab_powers(n)?;
    out.push(Check::residual(&ab[0].name, ab[0].value, AB_TOLERANCE));
    out.push(Check::residual(&ab[1].name, ab[1].value, AB_TOLERANCE));
    if n <= VANDERMONDE_MAX {
        out.push(Check::residual(&ab[2].name, ab[2].value, tolerance));
    }
    let s = purity::cycle_spectral_report(n)?;
    if let Some(d) = s.max_deviation() {
        out.push(Check::residual("purities, expectation and variance", d, tolerance));
    }
    Ok(out)
}

pub const COMPLETE_SUITE_MAX: usize = 40;

pub fn verify_complete(n: usize, budget: usize) -> Result<Vec<Check>> {
    if !(3..=COMPLETE_SUITE_MAX).contains(&n) {
        return Err(Error::InvalidArgument(format!("verify-complete needs 3 <= n <= {COMPLETE_SUITE_MAX}, got {n}")));
    }
    let f = kn_formulas(n)?;
    let r = complete::complete_report(n, budget)?;
    let mut out = vec![
        Check::exact(
            "dimension",
            r.dimension as u64 == f.dim,
            format!("dim {} (formula {}), degree {}", r.dimension, f.dim, r.degree),
        ),
        Check::exact(
            "ideal",
            r.ideal_dimension as u64 == f.ideal_dim,
            format!("ideal dim {} (formula {})", r.ideal_dimension, f.ideal_dim),
        ),
        Check::exact(
            "center",
            r.center_dimension as u64 == f.center_dim,
            format!("center dim {} (formula {})", r.center_dimension, f.center_dim),
        ),
        Check::exact(
            "explicit basis",
            r.basis_size == r.dimension && r.basis_rank == r.dimension && r.basis_matches_closure,
            format!("{} vectors, rank {}, spans closure {}", r.basis_size, r.basis_rank, r.basis_matches_closure),
        ),
        Check::exact(
            "explicit ideal basis",
            r.ideal_basis_rank == r.ideal_dimension && r.ideal_basis_matches,
            format!("rank {}, spans ideal {}", r.ideal_basis_rank, r.ideal_basis_matches),
        ),
        Check::exact(
            "bounds",
            kn_bounds_hold(n, f.dim, f.yz_bound, f.binom_bound),
            format!("dim {}, yz-even bound {}, binomial bound {}", f.dim, f.yz_bound, f.binom_bound),
        ),
    ];
    if n <= complete::FACT_SUITE_CAP {
        for fact in complete::fact_suite(n)? {
            out.push(Check::exact(&fact.name, fact.holds, "exact rank test"));
        }
    }
    if n <= 6 {
        out.push(Check::exact("symmetric bracket table", complete_table_sound(n)?, "all labels, exact"));
    }
    if n == 3 {
        out.push(Check::exact("same as cycle", k3_equals_c3(budget)?, "K_3 and C_3 closures span the same space"));
    }
    Ok(out)
}

/// `dim < yz < binom`, except `dim = yz` at `n = 3` where the odd formulas
/// coincide (`yz - dim = n - 3` for odd `n`, `n - 2` for even `n`).
pub fn kn_bounds_hold(n: usize, dim: u64, yz: u64, binom: u64) -> bool {
    let first = if n == 3 { dim == yz } else { dim < yz };
    first && yz < binom
}

/// `expand ∘ ad_{X^1}` and `expand ∘ ad_{Z^2}` against raw commutators.
pub fn complete_table_sound(n: usize) -> Result<bool> {
    let x1 = complete::expand_sym(&SymOrbitSum::unit(n, SymOrbit::new(1, 0, 0))?)?;
    let z2 = complete::expand_sym(&SymOrbitSum::unit(n, SymOrbit::new(0, 0, 2))?)?;
    for s in SymOrbit::all(n) {
        let v = SymOrbitSum::unit(n, s)?;
        let e = complete::expand_sym(&v)?;
        if complete::expand_sym(&v.ad_x1())? != commutator(&x1, &e)?
            || complete::expand_sym(&v.ad_z2())? != commutator(&z2, &e)?
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Raw closures of `K_3` and `C_3` have the same 8-dimensional row space.
pub fn k3_equals_c3(budget: usize) -> Result<bool> {
    let span = |g: Graph| -> Result<Vec<SparseRow<PauliString>>> {
        let (x, zz) = maxcut_generators(&g)?;
        Ok(closure::generate(&PauliCoordinates::new(&[x, zz])?, budget)?.basis)
    };
    let (k, c) = (span(Graph::complete(3)?)?, span(Graph::cycle(3)?)?);
    Ok(k.len() == 8 && c.len() == 8 && linalg::same_span(&k, &c))
}

/// Orbit-compressed closure of `K_n` expanded to Pauli strings.
pub fn expand_complete_basis(n: usize, budget: usize) -> Result<Vec<SparseRow<PauliString>>> {
    let coords = CompleteCoordinates::new(n)?;
    let dla = closure::generate(&coords, budget)?;
    dla.basis
        .iter()
        .map(|row| Ok(closure::pauli_row(&complete::expand_sym(&SymOrbitSum::from_row(n, row)?)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_suite_small() {
        for n in 3..=6 {
            for c in verify_cycle(n, 1e-9, linalg::DEFAULT_BUDGET).unwrap() {
                assert!(c.passed, "n={n}: {c:?}");
            }
        }
        assert!(verify_cycle(2, 1e-9, linalg::DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn complete_suite_small() {
        for n in 3..=6 {
            for c in verify_complete(n, linalg::DEFAULT_BUDGET).unwrap() {
                assert!(c.passed, "n={n}: {c:?}");
            }
        }
    }

    #[test]
    fn graph_reports() {
        let r = analyze_graph(&Graph::cycle(6).unwrap(), false, RankArithmetic::Exact, linalg::DEFAULT_BUDGET).unwrap();
        assert_eq!((r.dimension, r.center_dim, r.ideal_dim), (17, 2, 15));
        assert!(r.yz_even_ok);
        let m =
            analyze_graph(&Graph::cycle(6).unwrap(), false, RankArithmetic::Modular, linalg::DEFAULT_BUDGET).unwrap();
        assert_eq!(
            (m.dimension, m.degree, m.center_dim, m.ideal_dim, m.yz_even_ok),
            (r.dimension, r.degree, 2, 15, true)
        );
        let o = analyze_graph(&Graph::cycle(6).unwrap(), true, RankArithmetic::Exact, linalg::DEFAULT_BUDGET).unwrap();
        assert_eq!((o.dimension, o.degree, o.center_dim), (r.dimension, r.degree, r.center_dim));
        let k =
            analyze_graph(&Graph::complete(5).unwrap(), true, RankArithmetic::Exact, linalg::DEFAULT_BUDGET).unwrap();
        assert_eq!(k.dimension, 24);
        assert!(analyze_graph(&Graph::path(4).unwrap(), true, RankArithmetic::Exact, linalg::DEFAULT_BUDGET).is_err());
    }
}
