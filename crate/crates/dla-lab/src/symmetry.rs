//! Qubit permutations acting on Pauli strings, orbits and orbit counting.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::pauli::{PauliString, PauliVector};

/// Default cap on explicit group enumeration (10!).
pub const DEFAULT_GROUP_CAP: u128 = 3_628_800;

/// Largest vertex count for brute-force automorphism search.
pub const AUTOMORPHISM_CAP: usize = 10;

/// A bijection of `0..n`; qubit `j` is moved to `images[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidArgument(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// `j -> j + shift (mod n)`.
    pub fn rotation(n: usize, shift: usize) -> Self {
        Self { images: (0..n).map(|j| (j + shift) % n).collect() }
    }

    /// `j -> n - 1 - j`.
    pub fn reversal(n: usize) -> Self {
        Self { images: (0..n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, j: usize) -> usize {
        self.images[j]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (j, &i) in self.images.iter().enumerate() {
            inv[i] = j;
        }
        Self { images: inv }
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.n()];
        let mut cycles = 0;
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j];
            }
        }
        cycles
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &i)| i == j)
    }
}

pub fn apply_perm(pi: &Permutation, p: &PauliString) -> Result<PauliString> {
    if pi.n() != p.n() {
        return Err(Error::DimensionMismatch { left: pi.n(), right: p.n() });
    }
    Ok(permute_unchecked(pi, p))
}

pub(crate) fn permute_unchecked(pi: &Permutation, p: &PauliString) -> PauliString {
    let (mut x, mut z) = (0u64, 0u64);
    let (px, pz) = (p.x_mask(), p.z_mask());
    for (j, &i) in pi.images.iter().enumerate() {
        x |= (px >> j & 1) << i;
        z |= (pz >> j & 1) << i;
    }
    PauliString::new(p.n(), x, z).expect("permutation preserves width")
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Generated,
    Symmetric,
    Dihedral,
    Explicit(Vec<Permutation>),
}

/// A permutation group given by generators. Named families keep their
/// structure so that counting does not require enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Permutation>,
    kind: Kind,
}

impl PermGroup {
    pub fn generated(n: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: g.n() });
            }
        }
        Ok(Self { n, generators, kind: Kind::Generated })
    }

    pub fn trivial(n: usize) -> Self {
        Self { n, generators: Vec::new(), kind: Kind::Generated }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut generators = Vec::new();
        if n >= 2 {
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            generators.push(Permutation { images: swap });
            generators.push(Permutation::rotation(n, 1));
        }
        Self { n, generators, kind: Kind::Symmetric }
    }

    /// Symmetries of the n-gon, order 2n.
    pub fn dihedral(n: usize) -> Self {
        Self { n, generators: vec![Permutation::rotation(n, 1), Permutation::reversal(n)], kind: Kind::Dihedral }
    }

    pub fn from_elements(n: usize, elements: Vec<Permutation>) -> Self {
        Self { n, generators: elements.clone(), kind: Kind::Explicit(elements) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Group order, enumerating if the structure is not known.
    pub fn order(&self, cap: u128) -> Result<u128> {
        match &self.kind {
            Kind::Symmetric => (1..=self.n as u128)
                .try_fold(1u128, |acc, k| acc.checked_mul(k))
                .ok_or(Error::GroupTooLarge { order: u128::MAX, cap }),
            Kind::Dihedral => Ok(self.dihedral_elements().len() as u128),
            Kind::Explicit(e) => Ok(e.len() as u128),
            Kind::Generated => Ok(self.elements(cap)?.len() as u128),
        }
    }

    fn dihedral_elements(&self) -> Vec<Permutation> {
        let mut set: BTreeSet<Permutation> = BTreeSet::new();
        for s in 0..self.n.max(1) {
            let r = Permutation::rotation(self.n, s);
            set.insert(Permutation::reversal(self.n).compose(&r));
            set.insert(r);
        }
        set.into_iter().collect()
    }

    /// All elements, sorted; fails beyond `cap`.
    pub fn elements(&self, cap: u128) -> Result<Vec<Permutation>> {
        match &self.kind {
            Kind::Explicit(e) => return Ok(e.clone()),
            Kind::Dihedral => return Ok(self.dihedral_elements()),
            Kind::Symmetric => {
                let order = self.order(cap)?;
                if order > cap {
                    return Err(Error::GroupTooLarge { order, cap });
                }
            }
            Kind::Generated => {}
        }
        let id = Permutation::identity(self.n);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in &self.generators {
                let h = s.compose(&g);
                if seen.insert(h.clone()) {
                    if seen.len() as u128 > cap {
                        return Err(Error::GroupTooLarge { order: seen.len() as u128, cap });
                    }
                    queue.push_back(h);
                }
            }
        }
        let mut out: Vec<Permutation> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }
}

/// Distinct images of `p` under the group, sorted; the first is the
/// canonical representative.
pub fn orbit(p: &PauliString, group: &PermGroup) -> Result<Vec<PauliString>> {
    if p.n() != group.n {
        return Err(Error::DimensionMismatch { left: group.n, right: p.n() });
    }
    let mut seen: BTreeSet<PauliString> = BTreeSet::from([*p]);
    let mut queue = VecDeque::from([*p]);
    while let Some(q) = queue.pop_front() {
        for g in &group.generators {
            let r = permute_unchecked(g, &q);
            if seen.insert(r) {
                queue.push_back(r);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

pub fn canonical_representative(p: &PauliString, group: &PermGroup) -> Result<PauliString> {
    Ok(orbit(p, group)?[0])
}

/// Orbit sum with coefficient 1 on each distinct image.
pub fn orbit_sum(p: &PauliString, group: &PermGroup) -> Result<PauliVector> {
    PauliVector::unit_sum(p.n(), orbit(p, group)?)
}

/// Number of Pauli-string orbits, by Burnside: the mean of `4^cycles(π)`.
pub fn orbit_count(n: usize, group: &PermGroup) -> Result<BigUint> {
    if group.n != n {
        return Err(Error::DimensionMismatch { left: n, right: group.n });
    }
    if group.kind == Kind::Symmetric {
        return Ok(symmetric_orbit_count(n));
    }
    let elements = group.elements(DEFAULT_GROUP_CAP)?;
    let total: BigUint = elements.iter().map(|g| BigUint::from(4u32).pow(g.cycle_count() as u32)).sum();
    Ok(total / BigUint::from(elements.len()))
}

// Sum over cycle types λ of 4^{len λ} / z_λ.
fn symmetric_orbit_count(n: usize) -> BigUint {
    fn walk(rest: usize, max: usize, parts: &mut Vec<usize>, acc: &mut BigRational) {
        if rest == 0 {
            let mut z = BigInt::one();
            let mut i = 0;
            while i < parts.len() {
                let mut m = 0;
                while i + m < parts.len() && parts[i + m] == parts[i] {
                    m += 1;
                }
                z *= BigInt::from(parts[i]).pow(m as u32);
                z *= (1..=m).map(BigInt::from).product::<BigInt>();
                i += m;
            }
            *acc += BigRational::new(BigInt::from(4).pow(parts.len() as u32), z);
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            parts.push(k);
            walk(rest - k, k, parts, acc);
            parts.pop();
        }
    }
    let mut acc = BigRational::zero();
    walk(n, n, &mut Vec::new(), &mut acc);
    debug_assert!(acc.is_integer());
    acc.to_integer().to_biguint().expect("positive count")
}

/// Automorphism group of a graph. Named families use their known groups;
/// other graphs are searched exhaustively (n ≤ 10).
pub fn graph_automorphisms(graph: &Graph) -> Result<PermGroup> {
    let n = graph.n();
    match graph.family() {
        Some(Family::Cycle) => return Ok(PermGroup::dihedral(n)),
        Some(Family::Complete) => return Ok(PermGroup::symmetric(n)),
        Some(Family::Path) => {
            return Ok(PermGroup::from_elements(n, {
                let mut e = vec![Permutation::identity(n), Permutation::reversal(n)];
                e.sort();
                e.dedup();
                e
            }))
        }
        None => {}
    }
    if n > AUTOMORPHISM_CAP {
        return Err(Error::SizeCap { what: "automorphism search", cap: AUTOMORPHISM_CAP, n });
    }
    let adj = graph.adjacency();
    let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    let mut found = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(0, &adj, &deg, &mut images, &mut used, &mut found);
    found.sort();
    Ok(PermGroup::from_elements(n, found))
}

fn search(
    j: usize,
    adj: &[Vec<bool>],
    deg: &[usize],
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Permutation>,
) {
    let n = adj.len();
    if j == n {
        found.push(Permutation { images: images.clone() });
        return;
    }
    for v in 0..n {
        if used[v] || deg[v] != deg[j] {
            continue;
        }
        if (0..j).any(|i| adj[i][j] != adj[images[i]][v]) {
            continue;
        }
        images[j] = v;
        used[v] = true;
        search(j + 1, adj, deg, images, used, found);
        used[v] = false;
    }
    images[j] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn actions() {
        assert_eq!(apply_perm(&Permutation::rotation(4, 1), &ps("ZZII")).unwrap(), ps("IZZI"));
        assert_eq!(apply_perm(&Permutation::identity(3), &ps("XYZ")).unwrap(), ps("XYZ"));
        assert_eq!(apply_perm(&Permutation::reversal(3), &ps("YXZ")).unwrap(), ps("ZXY"));
        assert!(Permutation::new(vec![0, 0]).is_err());
    }

    #[test]
    fn orbits() {
        let d3 = PermGroup::dihedral(3);
        let x = orbit_sum(&ps("XII"), &d3).unwrap();
        assert_eq!(x, PauliVector::parse_terms(3, &[("XII", 1), ("IXI", 1), ("IIX", 1)]).unwrap());
        assert_eq!(orbit(&ps("III"), &d3).unwrap(), vec![ps("III")]);
        assert_eq!(orbit(&ps("YZI"), &d3).unwrap().len(), 6);
    }

    #[test]
    fn counts() {
        assert_eq!(orbit_count(3, &PermGroup::symmetric(3)).unwrap(), BigUint::from(20u32));
        assert_eq!(orbit_count(4, &PermGroup::symmetric(4)).unwrap(), BigUint::from(35u32));
        assert_eq!(orbit_count(3, &PermGroup::trivial(3)).unwrap(), BigUint::from(64u32));
        let s3 = PermGroup::generated(3, PermGroup::symmetric(3).generators().to_vec()).unwrap();
        assert_eq!(orbit_count(3, &s3).unwrap(), BigUint::from(20u32));
        assert_eq!(PermGroup::dihedral(4).order(DEFAULT_GROUP_CAP).unwrap(), 8);
    }

    #[test]
    fn automorphisms() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(graph_automorphisms(&c4).unwrap().order(DEFAULT_GROUP_CAP).unwrap(), 8);
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(graph_automorphisms(&k3).unwrap().order(DEFAULT_GROUP_CAP).unwrap(), 6);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let g = graph_automorphisms(&p3).unwrap();
        assert_eq!(g.elements(DEFAULT_GROUP_CAP).unwrap(), vec![Permutation::identity(3), Permutation::reversal(3)]);
    }
}
