//! Pauli strings in symplectic form and real combinations of `i·P`.
//!
//! A string on `n` qubits is a pair of bit masks: bit `j` of `x` is set when
//! qubit `j` carries X or Y, bit `j` of `z` when it carries Z or Y. Qubit 0 is
//! the least significant bit.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest qubit count a mask can hold.
pub const MAX_QUBITS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Ordering is lexicographic in `(x, z)`, which is the global ordering used
/// for pivots and canonical orbit representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    x: u64,
    z: u64,
    n: u8,
}

fn mask(n: usize) -> u64 {
    if n == MAX_QUBITS {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::InvalidArgument(format!("qubit count must be in 1..={MAX_QUBITS}, got {n}")));
    }
    Ok(())
}

impl PauliString {
    pub fn new(n: usize, x: u64, z: u64) -> Result<Self> {
        check_n(n)?;
        if (x | z) & !mask(n) != 0 {
            return Err(Error::InvalidArgument(format!("mask bits set above qubit {}", n - 1)));
        }
        Ok(Self { x, z, n: n as u8 })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0, 0)
    }

    /// Builds a string from `(qubit, letter)` pairs; unlisted qubits are I.
    pub fn from_sites(n: usize, sites: &[(usize, Pauli)]) -> Result<Self> {
        check_n(n)?;
        let (mut x, mut z) = (0u64, 0u64);
        for &(j, p) in sites {
            if j >= n {
                return Err(Error::InvalidArgument(format!("qubit {j} out of range for n = {n}")));
            }
            let (bx, bz) = p.bits();
            x = (x & !(1 << j)) | ((bx as u64) << j);
            z = (z & !(1 << j)) | ((bz as u64) << j);
        }
        Ok(Self { x, z, n: n as u8 })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn x_mask(&self) -> u64 {
        self.x
    }

    pub fn z_mask(&self) -> u64 {
        self.z
    }

    pub fn get(&self, j: usize) -> Pauli {
        Pauli::from_bits(self.x >> j & 1 == 1, self.z >> j & 1 == 1)
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// Number of non-identity factors.
    pub fn weight(&self) -> u32 {
        (self.x | self.z).count_ones()
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        ((self.x & other.z) ^ (self.z & other.x)).count_ones() % 2 == 0
    }

    pub fn pauli_type(&self) -> PauliType {
        let n_y = (self.x & self.z).count_ones() as usize;
        let n_x = (self.x & !self.z).count_ones() as usize;
        let n_z = (self.z & !self.x).count_ones() as usize;
        PauliType { n_i: self.n() - n_x - n_y - n_z, n_x, n_y, n_z }
    }
}

/// `a·b = i^phase · product`.
pub fn multiply(a: &PauliString, b: &PauliString) -> Result<(u8, PauliString)> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch { left: a.n(), right: b.n() });
    }
    Ok(multiply_unchecked(a, b))
}

// Each factor is i^{xz} X^x Z^z; moving Z^{z_a} past X^{x_b} costs (-1)^{z_a x_b}.
pub(crate) fn multiply_unchecked(a: &PauliString, b: &PauliString) -> (u8, PauliString) {
    let x = a.x ^ b.x;
    let z = a.z ^ b.z;
    let phase =
        (a.x & a.z).count_ones() + (b.x & b.z).count_ones() + 2 * (a.z & b.x).count_ones() + 3 * (x & z).count_ones();
    ((phase % 4) as u8, PauliString { x, z, n: a.n })
}

/// Coefficient of `i·R` in `[i·a, i·b]`, where `R` is the product string;
/// zero when the strings commute.
pub(crate) fn bracket_sign(a: &PauliString, b: &PauliString) -> (i64, PauliString) {
    if a.commutes_with(b) {
        return (0, PauliString { x: a.x ^ b.x, z: a.z ^ b.z, n: a.n });
    }
    let (phase, r) = multiply_unchecked(a, b);
    // [iP, iQ] = -(PQ - QP) = -2 i^phase R with phase odd.
    (if phase == 1 { -2 } else { 2 }, r)
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.n() {
            write!(f, "{}", self.get(j).letter())?;
        }
        Ok(())
    }
}

/// Parses letters with qubit 0 first, e.g. `"XIZ"`.
impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s.chars().count();
        let mut sites = Vec::with_capacity(n);
        for (j, c) in s.chars().enumerate() {
            let p = match c.to_ascii_uppercase() {
                'I' => Pauli::I,
                'X' => Pauli::X,
                'Y' => Pauli::Y,
                'Z' => Pauli::Z,
                other => return Err(Error::Parse(format!("unexpected Pauli letter {other:?}"))),
            };
            sites.push((j, p));
        }
        Self::from_sites(n, &sites)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PauliType {
    pub n_i: usize,
    pub n_x: usize,
    pub n_y: usize,
    pub n_z: usize,
}

impl PauliType {
    pub fn yz_even(&self) -> bool {
        (self.n_y + self.n_z) % 2 == 0
    }
}

pub fn pauli_type(p: &PauliString) -> PauliType {
    p.pauli_type()
}

/// The skew-Hermitian operator `Σ c_P (i·P)` with exact rational `c_P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliVector {
    n: usize,
    terms: BTreeMap<PauliString, BigRational>,
}

impl PauliVector {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn from_terms<I, C>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PauliString, C)>,
        C: Into<BigRational>,
    {
        let mut v = Self::zero(n);
        for (p, c) in terms {
            v.add_term(p, c.into())?;
        }
        Ok(v)
    }

    /// Coefficient 1 on every listed string.
    pub fn unit_sum<I: IntoIterator<Item = PauliString>>(n: usize, strings: I) -> Result<Self> {
        Self::from_terms(n, strings.into_iter().map(|p| (p, BigRational::one())))
    }

    pub fn parse_terms(n: usize, items: &[(&str, i64)]) -> Result<Self> {
        let mut v = Self::zero(n);
        for &(s, c) in items {
            v.add_term(s.parse()?, BigRational::from_integer(c.into()))?;
        }
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PauliString, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, p: &PauliString) -> BigRational {
        self.terms.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &PauliString> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, p: PauliString, c: BigRational) -> Result<()> {
        if p.n() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: p.n() });
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self { n: self.n, terms: self.terms.iter().map(|(p, v)| (*p, v * c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(*p, c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scaled(&-BigRational::one()))
    }

    /// Smallest common multiple of denominators, i.e. the factor that makes
    /// every coefficient an integer.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn max_abs(&self) -> BigRational {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }
}

/// `[a, b]` for `a = Σ a_P iP`, `b = Σ b_Q iQ`.
pub fn commutator(a: &PauliVector, b: &PauliVector) -> Result<PauliVector> {
    a.check(b)?;
    let mut acc: BTreeMap<PauliString, BigRational> = BTreeMap::new();
    for (p, ca) in &a.terms {
        for (q, cb) in &b.terms {
            let (sign, r) = bracket_sign(p, q);
            if sign == 0 {
                continue;
            }
            let term = ca * cb * BigRational::from_integer(sign.into());
            *acc.entry(r).or_insert_with(BigRational::zero) += term;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(PauliVector { n: a.n, terms: acc })
}

/// Hilbert–Schmidt inner product `tr(A†B) = 2^n Σ a_P b_P`.
pub fn hs_inner(a: &PauliVector, b: &PauliVector) -> Result<BigRational> {
    a.check(b)?;
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut dot = BigRational::zero();
    for (p, c) in &small.terms {
        if let Some(d) = large.terms.get(p) {
            dot += c * d;
        }
    }
    Ok(dot * BigRational::from_integer(BigInt::one() << a.n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn encoding_round_trip() {
        let p = ps("XYZI");
        assert_eq!(p.x_mask(), 0b0011);
        assert_eq!(p.z_mask(), 0b0110);
        assert_eq!(p.to_string(), "XYZI");
        assert!(PauliString::new(2, 0b100, 0).is_err());
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(multiply(&ps("XI"), &ps("ZZ")).unwrap(), (3, ps("YZ")));
        let p = ps("XYZY");
        assert_eq!(multiply(&p, &p).unwrap(), (0, ps("IIII")));
        assert_eq!(multiply(&ps("III"), &ps("XZY")).unwrap(), (0, ps("XZY")));
        assert_eq!(multiply(&ps("X"), &ps("Y")).unwrap(), (1, ps("Z")));
        assert!(multiply(&ps("X"), &ps("XX")).is_err());
    }

    #[test]
    fn su2_relation() {
        let x = PauliVector::parse_terms(1, &[("X", 1)]).unwrap();
        let y = PauliVector::parse_terms(1, &[("Y", 1)]).unwrap();
        let c = commutator(&x, &y).unwrap();
        assert_eq!(c, PauliVector::parse_terms(1, &[("Z", -2)]).unwrap());
        assert!(commutator(&x, &x).unwrap().is_empty());
    }

    #[test]
    fn cycle_generator_bracket() {
        let a = PauliVector::parse_terms(3, &[("XII", 1), ("IXI", 1), ("IIX", 1)]).unwrap();
        let b = PauliVector::parse_terms(3, &[("ZZI", 1), ("IZZ", 1), ("ZIZ", 1)]).unwrap();
        let c = commutator(&a, &b).unwrap();
        assert_eq!(c.len(), 6);
        for (p, v) in c.terms() {
            let t = p.pauli_type();
            assert_eq!((t.n_y, t.n_z), (1, 1));
            assert_eq!(*v, q(2));
        }
    }

    #[test]
    fn inner_products() {
        let x1 = PauliVector::parse_terms(3, &[("XII", 1)]).unwrap();
        let z1 = PauliVector::parse_terms(3, &[("ZII", 1)]).unwrap();
        assert_eq!(hs_inner(&x1, &x1).unwrap(), q(8));
        assert_eq!(hs_inner(&x1, &z1).unwrap(), q(0));
        let orbit = PauliVector::parse_terms(3, &[("XII", 1), ("IXI", 1), ("IIX", 1)]).unwrap();
        assert_eq!(hs_inner(&orbit, &orbit).unwrap(), q(24));
    }

    #[test]
    fn types() {
        assert_eq!(ps("XYZI").pauli_type(), PauliType { n_i: 1, n_x: 1, n_y: 1, n_z: 1 });
        assert_eq!(ps("IIII").pauli_type(), PauliType { n_i: 4, n_x: 0, n_y: 0, n_z: 0 });
        let t = ps("ZZIII").pauli_type();
        assert_eq!(t.n_z, 2);
        assert!(t.yz_even());
    }
}
