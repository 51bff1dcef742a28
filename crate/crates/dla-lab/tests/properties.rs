use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use dla_lab::closure::{self, PauliCoordinates, RankArithmetic};
use dla_lab::complete::{self, SymOrbit, SymOrbitSum};
use dla_lab::cycle::{self, CycleOrbit};
use dla_lab::graph::maxcut_generators;
use dla_lab::linalg::{self, LinearLedger, ModularLedger, SparseRow, DEFAULT_BUDGET};
use dla_lab::pauli::{commutator, hs_inner};
use dla_lab::purity::{self, HermitianVector};
use dla_lab::symmetry::{apply_perm, Permutation};
use dla_lab::{Graph, PauliString, PauliVector};

const N: usize = 3;

fn pauli_string(n: usize) -> impl Strategy<Value = PauliString> {
    let mask = (1u64 << n) - 1;
    (0..=mask, 0..=mask).prop_map(move |(x, z)| PauliString::new(n, x, z).unwrap())
}

fn pauli_vector(n: usize) -> impl Strategy<Value = PauliVector> {
    prop::collection::vec((pauli_string(n), -4i64..=4), 0..5).prop_map(move |terms| {
        PauliVector::from_terms(n, terms.into_iter().map(|(p, c)| (p, BigRational::from_integer(c.into())))).unwrap()
    })
}

fn int_row() -> impl Strategy<Value = SparseRow<u8>> {
    prop::collection::vec((0u8..6, -3i64..=3), 0..5)
        .prop_map(|t| SparseRow::from_terms(t.into_iter().map(|(k, c)| (k, BigInt::from(c)))))
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    (3usize..=4, prop::collection::vec(any::<bool>(), 6)).prop_filter_map("connected", |(n, bits)| {
        let mut edges = Vec::new();
        let mut i = 0;
        for a in 0..n {
            for b in a + 1..n {
                if bits[i] {
                    edges.push((a, b));
                }
                i += 1;
            }
        }
        let g = Graph::from_edges(n, &edges).ok()?;
        g.is_connected().then_some(g)
    })
}

fn sym_label(max_n: usize) -> impl Strategy<Value = (usize, SymOrbit)> {
    (3..=max_n).prop_flat_map(|n| (Just(n), prop::sample::select(SymOrbit::all(n).collect::<Vec<_>>())))
}

proptest! {
    #[test]
    fn bracket_is_antisymmetric(a in pauli_vector(N), b in pauli_vector(N)) {
        let ab = commutator(&a, &b).unwrap();
        let ba = commutator(&b, &a).unwrap();
        prop_assert!(ab.add(&ba).unwrap().is_empty());
    }

    #[test]
    fn jacobi(a in pauli_vector(N), b in pauli_vector(N), c in pauli_vector(N)) {
        let t1 = commutator(&a, &commutator(&b, &c).unwrap()).unwrap();
        let t2 = commutator(&b, &commutator(&c, &a).unwrap()).unwrap();
        let t3 = commutator(&c, &commutator(&a, &b).unwrap()).unwrap();
        prop_assert!(t1.add(&t2).unwrap().add(&t3).unwrap().is_empty());
    }

    #[test]
    fn ad_is_skew_for_the_trace_form(a in pauli_vector(N), b in pauli_vector(N), c in pauli_vector(N)) {
        let left = hs_inner(&commutator(&a, &b).unwrap(), &c).unwrap();
        let right = hs_inner(&b, &commutator(&a, &c).unwrap()).unwrap();
        prop_assert_eq!(left + right, BigRational::zero());
    }

    #[test]
    fn permutations_preserve_type(p in pauli_string(4), images in Just((0..4).collect::<Vec<usize>>()).prop_shuffle()) {
        let pi = Permutation::new(images).unwrap();
        let q = apply_perm(&pi, &p).unwrap();
        prop_assert_eq!(q.pauli_type(), p.pauli_type());
        prop_assert_eq!(apply_perm(&pi.inverse(), &q).unwrap(), p);
    }

    #[test]
    fn ledger_rank_and_membership(rows in prop::collection::vec(int_row(), 0..6), mix in prop::collection::vec(-2i64..=2, 6)) {
        let mut exact = LinearLedger::with_budget(usize::MAX);
        let mut modular = ModularLedger::with_budget(usize::MAX);
        for r in &rows {
            let e = exact.insert(r).unwrap().is_some();
            let m = modular.insert(r).unwrap().is_some();
            prop_assert_eq!(e, m);
        }
        prop_assert_eq!(exact.rank(), linalg::rank(&rows));
        prop_assert_eq!(exact.rank(), modular.rank());
        // reduced form: every pivot key appears in exactly one row
        for i in 0..exact.rank() {
            let pk = exact.pivot_key(i);
            prop_assert_eq!(exact.rows().iter().filter(|r| r.get(pk).is_some()).count(), 1);
        }
        let mut combo = SparseRow::new();
        for (r, c) in rows.iter().zip(&mix) {
            combo = combo.combine(&BigInt::from(1), r, &BigInt::from(*c));
        }
        prop_assert!(exact.contains(&combo));
        prop_assert!(modular.contains(&combo));
    }

    #[test]
    fn primitive_rows_have_unit_content(r in int_row()) {
        let p = r.clone().primitive();
        prop_assert!(p.is_empty() || p.content() == BigInt::from(1));
        prop_assert_eq!(linalg::rank(&[r, p.clone()]), linalg::rank(&[p]));
    }

    #[test]
    fn closure_is_idempotent_and_arithmetic_agrees(g in connected_graph()) {
        let (x, zz) = maxcut_generators(&g).unwrap();
        let dla = closure::generate_dla(&[x.clone(), zz.clone()], DEFAULT_BUDGET).unwrap();
        let again = closure::generate_dla(&dla.basis, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(again.dimension, dla.dimension);
        let coords = PauliCoordinates::new(&[x, zz]).unwrap();
        let exact = closure::dimensions(&coords, DEFAULT_BUDGET, RankArithmetic::Exact).unwrap();
        let modular = closure::dimensions(&coords, DEFAULT_BUDGET, RankArithmetic::Modular).unwrap();
        prop_assert_eq!(exact, modular);
        prop_assert!(exact.center_dimension <= 2);
    }

    #[test]
    fn cycle_orbit_bracket_matches_expansion(n in 3usize..=7, i in 0usize..20, j in 0usize..20) {
        let basis = cycle::cycle_basis(n).unwrap();
        let (a, b) = (basis[i % basis.len()], basis[j % basis.len()]);
        let ab = cycle::orbit_bracket(n, a, b).unwrap();
        let ba = cycle::orbit_bracket(n, b, a).unwrap();
        prop_assert!(ab.add(&ba).unwrap().is_empty());
        let ea = cycle::CycleOrbitSum::<i64>::unit(n, a).unwrap().expand().unwrap();
        let eb = cycle::CycleOrbitSum::<i64>::unit(n, b).unwrap().expand().unwrap();
        prop_assert_eq!(ab.expand().unwrap(), commutator(&ea, &eb).unwrap());
    }

    #[test]
    fn symmetric_actions_preserve_yz_parity((n, s) in sym_label(12)) {
        for (t, _) in complete::ad_x1_terms(n, s).into_iter().chain(complete::ad_z2_terms(n, s)) {
            prop_assert!(t.in_range(n));
            prop_assert_eq!((t.q + t.r) % 2, (s.q + s.r) % 2);
        }
    }

    #[test]
    fn symmetric_actions_match_expansion((n, s) in sym_label(5)) {
        let unit = SymOrbitSum::unit(n, s).unwrap();
        let raw = complete::expand_sym(&unit).unwrap();
        let x1 = complete::expand_sym(&SymOrbitSum::unit(n, SymOrbit::new(1, 0, 0)).unwrap()).unwrap();
        let z2 = complete::expand_sym(&SymOrbitSum::unit(n, SymOrbit::new(0, 0, 2)).unwrap()).unwrap();
        prop_assert_eq!(complete::expand_sym(&unit.ad_x1()).unwrap(), commutator(&x1, &raw).unwrap());
        prop_assert_eq!(complete::expand_sym(&unit.ad_z2()).unwrap(), commutator(&z2, &raw).unwrap());
    }

    #[test]
    fn purity_scales_quadratically(c in 0.1f64..10.0, basis_scale in 0.1f64..10.0, n in 3usize..=5) {
        let g = Graph::cycle(n).unwrap();
        let obs = purity::cut_observable(&g).unwrap();
        let (x, zz) = maxcut_generators(&g).unwrap();
        let basis = [HermitianVector::from_pauli_vector(&x), HermitianVector::from_pauli_vector(&zz)];
        let scaled_basis: Vec<_> = basis.iter().map(|b| b.scaled(basis_scale)).collect();
        let p = purity::purity(&obs, &basis).unwrap();
        let ps = purity::purity(&obs.scaled(c), &scaled_basis).unwrap();
        prop_assert!((ps - c * c * p).abs() <= 1e-9 * ps.abs().max(1.0));
        // a projection never exceeds the squared Hilbert-Schmidt norm
        let norm = purity::hs_inner(&obs, &obs).unwrap();
        prop_assert!(p <= norm * (1.0 + 1e-12));
    }
}

#[test]
fn cycle_orbit_validity() {
    for n in 3..=8 {
        for o in cycle::cycle_basis(n).unwrap() {
            assert!(o.is_valid(n));
        }
        assert!(!CycleOrbit::Zxz(n).is_valid(n));
    }
}
