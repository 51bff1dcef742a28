//! Exact sparse linear algebra over the integers.
//!
//! Rows are kept primitive (content 1, positive leading entry) and the ledger
//! holds them in reduced row-echelon form: every pivot column is zero in all
//! other rows. The pivot of a row is its first nonzero key.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Sparse integer vector, sorted by key, without stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseRow<K> {
    entries: Vec<(K, BigInt)>,
}

impl<K> Default for SparseRow<K> {
    fn default() -> Self {
        Self { entries: Vec::new() }
    }
}

impl<K: Ord + Clone> SparseRow<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sums duplicate keys and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (K, BigInt)>>(terms: I) -> Self {
        let mut entries: Vec<(K, BigInt)> = terms.into_iter().collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(K, BigInt)> = Vec::with_capacity(entries.len());
        for (k, v) in entries {
            match out.last_mut() {
                Some((lk, lv)) if *lk == k => *lv += v,
                _ => out.push((k, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        Self { entries: out }
    }

    pub fn single(key: K, value: impl Into<BigInt>) -> Self {
        Self::from_terms([(key, value.into())])
    }

    pub fn entries(&self) -> &[(K, BigInt)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(K, BigInt)> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.entries.iter().map(|(k, _)| k)
    }

    pub fn get(&self, key: &K) -> Option<&BigInt> {
        self.entries.binary_search_by(|(k, _)| k.cmp(key)).ok().map(|i| &self.entries[i].1)
    }

    pub fn leading(&self) -> Option<&(K, BigInt)> {
        self.entries.first()
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self { entries: self.entries.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: &BigInt, other: &Self, b: &BigInt) -> Self {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let ord = match (self.entries.get(i), other.entries.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match ord {
                std::cmp::Ordering::Less => {
                    if !a.is_zero() {
                        out.push((self.entries[i].0.clone(), a * &self.entries[i].1));
                    }
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    if !b.is_zero() {
                        out.push((other.entries[j].0.clone(), b * &other.entries[j].1));
                    }
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = a * &self.entries[i].1 + b * &other.entries[j].1;
                    if !v.is_zero() {
                        out.push((self.entries[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(&BigInt::one(), other, &BigInt::one())
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, v) in &self.entries {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading entry positive.
    pub fn primitive(mut self) -> Self {
        let mut g = self.content();
        if g.is_zero() {
            return self;
        }
        if self.entries[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, v) in &mut self.entries {
                *v /= &g;
            }
        }
        self
    }

    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> SparseRow<L> {
        SparseRow::from_terms(self.entries.iter().map(|(k, v)| (f(k), v.clone())))
    }
}

/// Stored-entry budget was exhausted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub stored: usize,
    pub budget: usize,
}

pub const DEFAULT_BUDGET: usize = 100_000_000;

/// Incremental reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct LinearLedger<K: Ord + Clone + Hash> {
    rows: Vec<SparseRow<K>>,
    pivots: HashMap<K, usize>,
    // Non-pivot column -> rows with a nonzero entry there.
    columns: HashMap<K, BTreeSet<usize>>,
    stored: usize,
    budget: usize,
}

impl<K: Ord + Clone + Hash + Debug> Default for LinearLedger<K> {
    fn default() -> Self {
        Self::with_budget(DEFAULT_BUDGET)
    }
}

impl<K: Ord + Clone + Hash + Debug> LinearLedger<K> {
    pub fn with_budget(budget: usize) -> Self {
        Self { rows: Vec::new(), pivots: HashMap::new(), columns: HashMap::new(), stored: 0, budget }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow<K>] {
        &self.rows
    }

    pub fn row(&self, index: usize) -> &SparseRow<K> {
        &self.rows[index]
    }

    pub fn into_rows(self) -> Vec<SparseRow<K>> {
        self.rows
    }

    pub fn stored_entries(&self) -> usize {
        self.stored
    }

    pub fn pivot_key(&self, index: usize) -> &K {
        &self.rows[index].entries[0].0
    }

    pub fn is_pivot(&self, key: &K) -> bool {
        self.pivots.contains_key(key)
    }

    /// Rows with a nonzero entry in a non-pivot column.
    pub fn rows_with_column(&self, key: &K) -> impl Iterator<Item = usize> + '_ {
        self.columns.get(key).into_iter().flat_map(|s| s.iter().copied())
    }

    /// Component of `v` outside the row space, as a primitive row. Empty iff
    /// `v` lies in the span.
    pub fn reduce(&self, v: &SparseRow<K>) -> SparseRow<K> {
        let hits: Vec<usize> = v.keys().filter_map(|k| self.pivots.get(k).copied()).collect();
        let mut cur = v.clone();
        for r in hits {
            let row = &self.rows[r];
            let (pk, pv) = &row.entries[0];
            let Some(c) = cur.get(pk).cloned() else { continue };
            let g = c.gcd(pv);
            cur = cur.combine(&(pv / &g), row, &-(c / &g));
        }
        cur.primitive()
    }

    pub fn contains(&self, v: &SparseRow<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v` if it is independent of the current rows; returns the new
    /// row index.
    pub fn insert(&mut self, v: &SparseRow<K>) -> Result<Option<usize>, BudgetExceeded> {
        let s = self.reduce(v);
        if s.is_empty() {
            return Ok(None);
        }
        let (pk, pv) = s.entries[0].clone();

        // Clear the new pivot column from the existing rows.
        if let Some(touched) = self.columns.remove(&pk) {
            for r in touched {
                let old = std::mem::take(&mut self.rows[r]);
                let c = old.get(&pk).cloned().expect("column index out of sync");
                let g = c.gcd(&pv);
                let new = old.combine(&(&pv / &g), &s, &-(c / &g)).primitive();
                for (k, _) in &s.entries[1..] {
                    match (old.get(k).is_some(), new.get(k).is_some()) {
                        (false, true) => {
                            self.columns.entry(k.clone()).or_default().insert(r);
                        }
                        (true, false) => {
                            if let Some(set) = self.columns.get_mut(k) {
                                set.remove(&r);
                                if set.is_empty() {
                                    self.columns.remove(k);
                                }
                            }
                        }
                        _ => {}
                    }
                }
                self.stored = self.stored + new.len() - old.len();
                self.rows[r] = new;
            }
        }

        let index = self.rows.len();
        for (k, _) in &s.entries[1..] {
            self.columns.entry(k.clone()).or_default().insert(index);
        }
        self.pivots.insert(pk, index);
        self.stored += s.len();
        self.rows.push(s);
        if self.stored > self.budget {
            return Err(BudgetExceeded { stored: self.stored, budget: self.budget });
        }
        Ok(Some(index))
    }
}

/// Mersenne prime used by [`ModularLedger`].
pub const MODULUS: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    let t = a as u128 * b as u128;
    let s = (t as u64 & MODULUS) + (t >> 61) as u64;
    if s >= MODULUS {
        s - MODULUS
    } else {
        s
    }
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn residue(v: &BigInt) -> u64 {
    let m = BigInt::from(MODULUS);
    let r = ((v % &m) + &m) % &m;
    u64::try_from(r).expect("residue fits")
}

/// Row-echelon form over `Z/pZ`, `p = 2^61 - 1`.
///
/// A row independent modulo `p` is independent over the rationals, so every
/// accepted row is certified. A rejected row is dependent over the rationals
/// unless `p` divides a nonzero minor of the candidate matrix.
#[derive(Clone, Debug)]
pub struct ModularLedger<K: Ord + Hash + Clone> {
    columns: HashMap<K, usize>,
    // Pivot column first, with value 1.
    rows: Vec<Vec<(usize, u64)>>,
    stored: usize,
    budget: usize,
}

impl<K: Ord + Hash + Clone> ModularLedger<K> {
    pub fn with_budget(budget: usize) -> Self {
        Self { columns: HashMap::new(), rows: Vec::new(), stored: 0, budget }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn stored_entries(&self) -> usize {
        self.stored
    }

    fn reduce(&mut self, v: &SparseRow<K>) -> Vec<u64> {
        for (k, _) in v.entries() {
            let next = self.columns.len();
            self.columns.entry(k.clone()).or_insert(next);
        }
        let mut acc = vec![0u64; self.columns.len()];
        for (k, c) in v.entries() {
            acc[self.columns[k]] = residue(c);
        }
        for row in &self.rows {
            let c = acc[row[0].0];
            if c == 0 {
                continue;
            }
            let neg = MODULUS - c;
            for &(j, x) in row {
                let s = acc[j] + mul_mod(neg, x);
                acc[j] = if s >= MODULUS { s - MODULUS } else { s };
            }
        }
        acc
    }

    pub fn contains(&mut self, v: &SparseRow<K>) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Inserts `v` if it is independent modulo `p`; returns the new row index.
    pub fn insert(&mut self, v: &SparseRow<K>) -> Result<Option<usize>, BudgetExceeded> {
        let acc = self.reduce(v);
        let Some(pivot) = acc.iter().position(|&x| x != 0) else {
            return Ok(None);
        };
        let inv = pow_mod(acc[pivot], MODULUS - 2);
        let mut row = vec![(pivot, 1)];
        row.extend(acc.iter().enumerate().filter(|&(j, &x)| j != pivot && x != 0).map(|(j, &x)| (j, mul_mod(x, inv))));
        self.stored += row.len();
        self.rows.push(row);
        if self.stored > self.budget {
            return Err(BudgetExceeded { stored: self.stored, budget: self.budget });
        }
        Ok(Some(self.rows.len() - 1))
    }
}

/// Keys of an augmented row `[v | tag]`; all main keys sort before tags.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Augmented<K> {
    Main(K),
    Tag(usize),
}

/// Integer relations `Σ t_i v_i = 0`, as a basis of the relation space.
pub fn null_space<K: Ord + Clone + Hash + Debug>(
    vectors: &[SparseRow<K>],
    budget: usize,
) -> Result<Vec<SparseRow<usize>>, BudgetExceeded> {
    let mut ledger = LinearLedger::with_budget(budget);
    for (i, v) in vectors.iter().enumerate() {
        let mut terms: Vec<(Augmented<K>, BigInt)> =
            v.entries().iter().map(|(k, c)| (Augmented::Main(k.clone()), c.clone())).collect();
        terms.push((Augmented::Tag(i), BigInt::one()));
        ledger.insert(&SparseRow { entries: terms })?;
    }
    Ok(ledger
        .rows()
        .iter()
        .filter(|r| matches!(r.leading(), Some((Augmented::Tag(_), _))))
        .map(|r| {
            SparseRow::from_terms(r.entries().iter().filter_map(|(k, c)| match k {
                Augmented::Tag(i) => Some((*i, c.clone())),
                Augmented::Main(_) => None,
            }))
        })
        .collect())
}

/// `Σ t_i v_i`.
pub fn combination<K: Ord + Clone>(coeffs: &SparseRow<usize>, vectors: &[SparseRow<K>]) -> SparseRow<K> {
    let mut acc = SparseRow::new();
    for (i, c) in coeffs.entries() {
        acc = acc.combine(&BigInt::one(), &vectors[*i], c);
    }
    acc
}

/// Rank of a list of rows.
pub fn rank<K: Ord + Clone + Hash + Debug>(vectors: &[SparseRow<K>]) -> usize {
    let mut ledger = LinearLedger::with_budget(usize::MAX);
    for v in vectors {
        let _ = ledger.insert(v);
    }
    ledger.rank()
}

/// Whether two families span the same space.
pub fn same_span<K: Ord + Clone + Hash + Debug>(a: &[SparseRow<K>], b: &[SparseRow<K>]) -> bool {
    let ra = rank(a);
    ra == rank(b) && ra == rank(&[a, b].concat())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[(u32, i64)]) -> SparseRow<u32> {
        SparseRow::from_terms(v.iter().map(|&(k, c)| (k, BigInt::from(c))))
    }

    #[test]
    fn primitive_rows() {
        let r = row(&[(3, -4), (5, 6)]).primitive();
        assert_eq!(r, row(&[(3, 2), (5, -3)]));
        assert!(row(&[(1, 1), (1, -1)]).is_empty());
    }

    #[test]
    fn ledger_keeps_reduced_form() {
        let mut l = LinearLedger::default();
        assert_eq!(l.insert(&row(&[(0, 1), (1, 1)])).unwrap(), Some(0));
        assert_eq!(l.insert(&row(&[(1, 2), (2, 2)])).unwrap(), Some(1));
        assert_eq!(l.insert(&row(&[(0, 3), (2, -3)])).unwrap(), None);
        assert_eq!(l.row(0), &row(&[(0, 1), (2, -1)]));
        assert_eq!(l.row(1), &row(&[(1, 1), (2, 1)]));
        assert_eq!(l.rows_with_column(&2).collect::<Vec<_>>(), vec![0, 1]);
        assert!(l.contains(&row(&[(0, 1), (1, 1)])));
        assert!(!l.contains(&row(&[(2, 1)])));
    }

    #[test]
    fn budget_is_enforced() {
        let mut l = LinearLedger::with_budget(3);
        l.insert(&row(&[(0, 1), (1, 1)])).unwrap();
        assert!(l.insert(&row(&[(2, 1), (3, 1)])).is_err());
    }

    #[test]
    fn modular_ledger_matches_exact_rank() {
        let vs = [row(&[(0, 1), (1, 2)]), row(&[(1, 1)]), row(&[(0, 2), (1, 1)]), row(&[(2, -7)])];
        let mut m = ModularLedger::with_budget(usize::MAX);
        let accepted: Vec<_> = vs.iter().map(|v| m.insert(v).unwrap()).collect();
        assert_eq!(accepted, vec![Some(0), Some(1), None, Some(2)]);
        assert_eq!(m.rank(), rank(&vs));
        assert!(m.contains(&row(&[(0, 5), (2, 3)])));
        assert!(!m.contains(&row(&[(3, 1)])));
        assert_eq!(residue(&BigInt::from(-1)), MODULUS - 1);
        assert_eq!(mul_mod(pow_mod(12345, MODULUS - 2), 12345), 1);
    }

    #[test]
    fn relations() {
        let vs = vec![row(&[(0, 1), (1, 2)]), row(&[(1, 1)]), row(&[(0, 2), (1, 1)])];
        let ns = null_space(&vs, usize::MAX).unwrap();
        assert_eq!(ns.len(), 1);
        assert!(combination(&ns[0], &vs).is_empty());
    }
}
