//! Graphs, QAOA-MaxCut generators and the general-graph bounds.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, PauliVector};
use crate::symmetry::{graph_automorphisms, orbit_count};

/// Named families with known automorphism groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cycle,
    Complete,
    Path,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Path => "path",
        })
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    family: Option<Family>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!("edge ({a}, {b}) out of range for n = {n}")));
            }
            if a == b {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {a}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidArgument(format!("duplicate edge ({a}, {b})")));
            }
        }
        Ok(Self { n, edges: set.into_iter().collect(), family: None })
    }

    /// Edges `(j, j+1 mod n)`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|j| (j, (j + 1) % n)).collect();
        Ok(Self { family: Some(Family::Cycle), ..Self::from_edges(n, &edges)? })
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("complete graph needs n >= 2, got {n}")));
        }
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Ok(Self { family: Some(Family::Complete), ..Self::from_edges(n, &edges)? })
    }

    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("path needs n >= 2, got {n}")));
        }
        let edges: Vec<_> = (0..n - 1).map(|j| (j, j + 1)).collect();
        Ok(Self { family: Some(Family::Path), ..Self::from_edges(n, &edges)? })
    }

    pub fn family_member(family: Family, n: usize) -> Result<Self> {
        match family {
            Family::Cycle => Self::cycle(n),
            Family::Complete => Self::complete(n),
            Family::Path => Self::path(n),
        }
    }

    /// Parses `cycle:N`, `complete:N` or `path:N`.
    pub fn from_designator(s: &str) -> Result<Self> {
        let (name, arg) = s.split_once(':').ok_or_else(|| Error::Parse(format!("expected family:N, got {s:?}")))?;
        let n: usize = arg.trim().parse().map_err(|_| Error::Parse(format!("bad vertex count in {s:?}")))?;
        let family = match name.trim() {
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "path" => Family::Path,
            other => return Err(Error::Parse(format!("unknown graph family {other:?}"))),
        };
        Self::family_member(family, n)
    }

    /// Edge-list text: first line `n`, then one `j k` pair per line. Blank
    /// lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let first = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
        let n: usize =
            first.parse().map_err(|_| Error::Parse(format!("first line must be the vertex count, got {first:?}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [a, b] = parts[..] else {
                return Err(Error::Parse(format!("expected \"j k\", got {line:?}")));
            };
            let a = a.parse().map_err(|_| Error::Parse(format!("bad vertex in {line:?}")))?;
            let b = b.parse().map_err(|_| Error::Parse(format!("bad vertex in {line:?}")))?;
            edges.push((a, b));
        }
        Self::from_edges(n, &edges).map_err(|e| match e {
            Error::InvalidArgument(m) => Error::Parse(m),
            other => other,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n]; self.n];
        for &(a, b) in &self.edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if adj[u][v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (a, b) in &self.edges {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Some(fam) => write!(f, "{fam}:{}", self.n),
            None => {
                write!(f, "graph(n={}; ", self.n)?;
                for (i, (a, b)) in self.edges.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{a}-{b}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// `(i·Σ_j X_j, i·Σ_{(j,k)∈E} Z_j Z_k)`, each string with coefficient 1.
pub fn maxcut_generators(g: &Graph) -> Result<(PauliVector, PauliVector)> {
    if g.edges.is_empty() {
        return Err(Error::InvalidArgument("MaxCut generators need at least one edge".into()));
    }
    let a = PauliVector::unit_sum(
        g.n,
        (0..g.n).map(|j| PauliString::from_sites(g.n, &[(j, Pauli::X)])).collect::<Result<Vec<_>>>()?,
    )?;
    let b = PauliVector::unit_sum(
        g.n,
        g.edges
            .iter()
            .map(|&(j, k)| PauliString::from_sites(g.n, &[(j, Pauli::Z), (k, Pauli::Z)]))
            .collect::<Result<Vec<_>>>()?,
    )?;
    Ok((a, b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionBounds {
    /// Number of Pauli orbits under Aut(G), minus one.
    pub aut_bound: BigUint,
    /// Upper bound on the center dimension.
    pub center_bound: usize,
}

pub fn dimension_bounds(g: &Graph) -> Result<DimensionBounds> {
    let group = graph_automorphisms(g)?;
    let count = orbit_count(g.n, &group)?;
    Ok(DimensionBounds { aut_bound: count - BigUint::one(), center_bound: 2 })
}

/// Closed forms for the complete graph on `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnFormulas {
    pub binom_bound: u64,
    pub yz_bound: u64,
    pub dim: u64,
    pub ideal_dim: u64,
    pub center_dim: u64,
}

pub fn kn_formulas(n: usize) -> Result<KnFormulas> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("complete graph formulas need n >= 2, got {n}")));
    }
    let m = n as u64;
    let (c3, c2) = (m * m * m, 6 * m * m);
    let binom_bound = (m + 3) * (m + 2) * (m + 1) / 6;
    Ok(if n % 2 == 0 {
        KnFormulas {
            binom_bound,
            yz_bound: (c3 + c2 + 14 * m - 12) / 12,
            dim: (c3 + c2 + 2 * m + 12) / 12,
            ideal_dim: (c3 + c2 + 2 * m) / 12,
            center_dim: 1,
        }
    } else {
        KnFormulas {
            binom_bound,
            yz_bound: (c3 + c2 + 11 * m - 18) / 12,
            dim: (c3 + c2 - m + 18) / 12,
            ideal_dim: (c3 + c2 - m - 6) / 12,
            center_dim: 2,
        }
    })
}

/// Largest graph for the brute-force centralizer scan.
pub const CENTRALIZER_CAP: usize = 6;

/// Pauli strings commuting with both generators. Each generator is a sum of
/// distinct strings whose products with a fixed string stay distinct, so a
/// string commutes with the sum iff it commutes with every term.
pub fn centralizer_paulis(g: &Graph) -> Result<Vec<PauliString>> {
    if g.n > CENTRALIZER_CAP {
        return Err(Error::SizeCap { what: "centralizer scan", cap: CENTRALIZER_CAP, n: g.n });
    }
    let (a, b) = maxcut_generators(g)?;
    let terms: Vec<PauliString> = a.support().chain(b.support()).copied().collect();
    let full = (1u64 << g.n) - 1;
    let mut out = Vec::new();
    for x in 0..=full {
        for z in 0..=full {
            let p = PauliString::new(g.n, x, z)?;
            if terms.iter().all(|t| t.commutes_with(&p)) {
                out.push(p);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Erdős–Rényi sample conditioned on being connected.
pub fn random_connected_graph<R: Rng>(n: usize, edge_probability: f64, rng: &mut R) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidArgument("random connected graph needs n >= 2".into()));
    }
    loop {
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(edge_probability)).collect();
        if edges.is_empty() {
            continue;
        }
        let g = Graph::from_edges(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
}

/// Deterministic corpus of connected graphs with `min_n..=max_n` vertices.
pub fn random_corpus(count: usize, min_n: usize, max_n: usize, seed: u64) -> Result<Vec<Graph>> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            random_connected_graph(n, 0.5, &mut rng)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        let (a, b) = maxcut_generators(&Graph::cycle(3).unwrap()).unwrap();
        assert_eq!((a.len(), b.len()), (3, 3));
        let (_, b) = maxcut_generators(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(b.len(), 6);
        let (_, b) = maxcut_generators(&Graph::from_edges(2, &[(0, 1)]).unwrap()).unwrap();
        assert_eq!(b, PauliVector::parse_terms(2, &[("ZZ", 1)]).unwrap());
        assert!(maxcut_generators(&Graph::from_edges(2, &[]).unwrap()).is_err());
    }

    #[test]
    fn parsing() {
        let g = Graph::parse_edge_list("3\n0 1\n1 2\n# note\n0 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert!(Graph::parse_edge_list("3\n0 3\n").is_err());
        assert!(Graph::parse_edge_list("x\n").is_err());
        assert_eq!(Graph::from_designator("cycle:5").unwrap().edges().len(), 5);
        assert!(Graph::from_designator("star:5").is_err());
    }

    #[test]
    fn bounds() {
        let b = dimension_bounds(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(b.aut_bound, BigUint::from(19u32));
        assert_eq!(b.center_bound, 2);
        // Asymmetric graph on 6 vertices: trivial automorphism group.
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 5)]).unwrap();
        let b = dimension_bounds(&g).unwrap();
        assert_eq!(b.aut_bound, BigUint::from(4u32.pow(6) - 1));
    }

    #[test]
    fn complete_formulas() {
        let f = kn_formulas(4).unwrap();
        assert_eq!((f.binom_bound, f.yz_bound, f.dim, f.ideal_dim, f.center_dim), (35, 17, 15, 14, 1));
        let f = kn_formulas(3).unwrap();
        assert_eq!((f.dim, f.ideal_dim, f.center_dim), (8, 6, 2));
        let f = kn_formulas(5).unwrap();
        assert_eq!((f.dim, f.ideal_dim, f.center_dim), (24, 22, 2));
        assert_eq!(kn_formulas(7).unwrap().dim, 54);
        assert!(kn_formulas(1).is_err());
    }

    #[test]
    fn centralizers() {
        let c = centralizer_paulis(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c, vec!["IIII".parse().unwrap(), "XXXX".parse().unwrap()]);
        let c = centralizer_paulis(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(c, vec!["III".parse().unwrap(), "XXX".parse().unwrap()]);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(centralizer_paulis(&two).unwrap().len() > 2);
    }
}
