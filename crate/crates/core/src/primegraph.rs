//! Prime graphs of degree sets and the structural conditions known to hold
//! for them.
//!
//! The vertices of the prime graph of a degree set are the primes dividing
//! some degree; two primes are adjacent when their product divides some
//! degree.

use std::collections::BTreeSet;

use crate::arith;
use crate::degrees::{DegreeSet, DegreeTable, GroupDescriptor};
use crate::error::{Error, Result};
use crate::graph::{bits, SmallGraph, VertexSet, MAX_VERTICES};

/// Union of the prime divisors of the degrees, increasing.
pub fn rho(degrees: &DegreeSet) -> Vec<u64> {
    let mut primes = BTreeSet::new();
    for d in degrees.iter().filter(|&d| d > 1) {
        primes.extend(arith::prime_divisors(d).expect("degrees are positive"));
    }
    primes.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Degrees,
    Group(GroupDescriptor),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeGraph {
    pub graph: SmallGraph,
    pub degrees: DegreeSet,
    pub source: Source,
}

impl PrimeGraph {
    pub fn primes(&self) -> &[u64] {
        self.graph.labels().expect("prime graphs are labeled")
    }

    /// Whether `p` and `q` are adjacent; false when either is not a vertex.
    pub fn adjacent(&self, p: u64, q: u64) -> bool {
        match (self.graph.vertex_of_label(p), self.graph.vertex_of_label(q)) {
            (Some(u), Some(v)) => self.graph.has_edge(u, v),
            _ => false,
        }
    }

    /// Edges as prime pairs `(p, q)` with `p < q`, sorted.
    pub fn prime_edges(&self) -> Vec<(u64, u64)> {
        let primes = self.primes();
        self.graph.edges().into_iter().map(|(u, v)| (primes[u], primes[v])).collect()
    }

    pub fn set_primes(&self, set: VertexSet) -> Vec<u64> {
        bits(set).map(|v| self.primes()[v]).collect()
    }

    pub fn is_synthetic(&self) -> bool {
        matches!(&self.source, Source::Group(g) if g.is_synthetic())
    }
}

/// Builds the prime graph of `degrees`, vertices in increasing prime order.
/// Degree sets whose only degree is 1 have no vertices and are rejected.
pub fn build_prime_graph(degrees: &DegreeSet) -> Result<PrimeGraph> {
    let primes = rho(degrees);
    if primes.is_empty() {
        return Err(Error::Domain("degree set {1} has an empty prime graph".into()));
    }
    if primes.len() > MAX_VERTICES {
        return Err(Error::TooManyPrimes { count: primes.len() });
    }
    let mut edges = Vec::new();
    for d in degrees.iter().filter(|&d| d > 1) {
        let here: Vec<usize> = arith::prime_divisors(d)?
            .into_iter()
            .map(|p| primes.binary_search(&p).expect("prime of a degree is in rho"))
            .collect();
        for (i, &u) in here.iter().enumerate() {
            for &v in &here[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    let graph = SmallGraph::new(primes.len(), &edges, Some(primes))?;
    Ok(PrimeGraph { graph, degrees: degrees.clone(), source: Source::Degrees })
}

pub fn prime_graph_of(group: &GroupDescriptor, table: &DegreeTable) -> Result<PrimeGraph> {
    let degrees = group.degrees(table)?;
    let mut pg = build_prime_graph(&degrees)?;
    pg.source = Source::Group(group.clone());
    Ok(pg)
}

/// Necessary conditions on a prime graph, each with a witness when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub solvable: bool,
    pub independence_number: usize,
    /// Every three primes contain an edge (independence number at most 2).
    pub palfy_ok: bool,
    pub palfy_witness: Option<Vec<u64>>,
    /// Every four primes contain an edge (independence number at most 3).
    pub moreto_tiep_ok: bool,
    pub moreto_tiep_witness: Option<Vec<u64>>,
    pub components: Vec<Vec<u64>>,
    /// At most three connected components.
    pub components_ok_nonsolvable: bool,
    /// At most two components; with two, both complete and `n2 >= 2^n1 - 1`.
    pub components_ok_solvable: bool,
    pub diameter: Option<usize>,
    /// Diameter at most three; vacuous for disconnected graphs.
    pub diameter_ok: bool,
    pub diameter_witness: Option<(u64, u64)>,
    pub k4_free: bool,
    pub k4_witness: Option<Vec<u64>>,
    pub notes: Vec<String>,
}

impl ConditionReport {
    /// Whether every condition required under the stated hypothesis holds.
    pub fn all_ok(&self) -> bool {
        if self.solvable {
            self.palfy_ok && self.components_ok_solvable && self.diameter_ok
        } else {
            self.moreto_tiep_ok && self.components_ok_nonsolvable && self.diameter_ok
        }
    }
}

/// Evaluates the conditions; `solvable` states the caller's hypothesis and
/// only selects which conditions [`ConditionReport::all_ok`] requires.
pub fn check_conditions(pg: &PrimeGraph, solvable: bool) -> ConditionReport {
    let g = &pg.graph;
    let mut notes = Vec::new();
    let mis = g.max_independent_set();
    let alpha = mis.count_ones() as usize;
    let palfy_ok = alpha <= 2;
    let moreto_tiep_ok = alpha <= 3;

    let comps = g.components();
    let components: Vec<Vec<u64>> = comps.iter().map(|&c| pg.set_primes(c)).collect();
    let components_ok_nonsolvable = comps.len() <= 3;
    let components_ok_solvable = match comps.as_slice() {
        [_] => true,
        [a, b] => {
            let complete = |c: VertexSet| bits(c).all(|v| g.neighbors(v) & c == c & !(1 << v));
            let (n1, n2) = {
                let (x, y) = (a.count_ones(), b.count_ones());
                (x.min(y), x.max(y))
            };
            let ok = complete(*a) && complete(*b) && (n2 as u64) + 1 >= 1u64 << n1;
            if !ok {
                notes.push(format!(
                    "two components of sizes {n1} and {n2}: need both complete and {n2} >= 2^{n1} - 1"
                ));
            }
            ok
        }
        _ => false,
    };

    let diameter = g.diameter();
    let mut diameter_witness = None;
    if diameter.is_none() {
        notes.push("disconnected: diameter bound applies only to connected graphs".into());
    } else if diameter > Some(3) {
        'outer: for u in 0..g.order() {
            for (v, d) in g.distances_from(u).into_iter().enumerate() {
                if d > Some(3) {
                    diameter_witness = Some((pg.primes()[u], pg.primes()[v]));
                    break 'outer;
                }
            }
        }
    }
    let k4 = g.find_clique(4);

    ConditionReport {
        solvable,
        independence_number: alpha,
        palfy_ok,
        palfy_witness: (!palfy_ok).then(|| pg.set_primes(mis)),
        moreto_tiep_ok,
        moreto_tiep_witness: (!moreto_tiep_ok).then(|| pg.set_primes(mis)),
        components,
        components_ok_nonsolvable,
        components_ok_solvable,
        diameter,
        diameter_ok: diameter.is_none_or(|d| d <= 3),
        diameter_witness,
        k4_free: k4.is_none(),
        k4_witness: k4.map(|c| pg.set_primes(c)),
        notes,
    }
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    (2u64..).filter(|&p| arith::is_prime(p)).take(count).collect()
}

/// `K_{2m}` minus a perfect matching: the complete multipartite graph with
/// `m` parts of size two. Partners are `2i` and `2i + 1`.
pub fn cocktail_party(m: usize) -> Result<SmallGraph> {
    if m < 2 {
        return Err(Error::Domain(format!("cocktail-party graph needs m >= 2, got {m}")));
    }
    if 2 * m > MAX_VERTICES {
        return Err(Error::SizeOverflow(2 * m));
    }
    let matching: Vec<_> = (0..m).map(|i| (2 * i, 2 * i + 1)).collect();
    Ok(SmallGraph::new(2 * m, &matching, None)?.complement())
}

fn two_prime_factor(name: String, p: u64, q: u64) -> GroupDescriptor {
    let degrees = DegreeSet::new([p, q]).expect("primes are nonzero");
    GroupDescriptor::Synthetic { name, degrees }
}

fn square_factor(name: &str, primes: &[u64]) -> GroupDescriptor {
    GroupDescriptor::Product(vec![
        two_prime_factor(format!("{name}a"), primes[0], primes[1]),
        two_prime_factor(format!("{name}b"), primes[2], primes[3]),
    ])
}

/// A direct product whose prime graph is `k`-regular on `k + 2` primes, for
/// even `k >= 2`.
///
/// With `k = 4l + r`, `r` in `{0, 2}`, the product has a factor `G0` whose
/// prime graph is a square (`r = 2`) or two isolated primes (`r = 0`), and
/// `l` further square factors. A factor with two isolated primes `p, q` has
/// degree set `{1, p, q}`; a square is the product of two such factors. These
/// degree sets are synthetic: no concrete group is attached to them.
///
/// `primes` defaults to the first `k + 2` primes.
pub fn construct_regular_product(k: usize, primes: Option<&[u64]>) -> Result<(GroupDescriptor, PrimeGraph)> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::Domain(format!("k must be even and at least 2, got {k}")));
    }
    let n = k + 2;
    if n > MAX_VERTICES {
        return Err(Error::SizeOverflow(n));
    }
    let supply = match primes {
        Some(p) => p.to_vec(),
        None => first_primes(n),
    };
    if supply.len() < n {
        return Err(Error::Domain(format!("need {n} distinct primes, got {}", supply.len())));
    }
    let supply = &supply[..n];
    for (i, &p) in supply.iter().enumerate() {
        if !arith::is_prime(p) {
            return Err(Error::NonPrimeLabel(p));
        }
        if supply[..i].contains(&p) {
            return Err(Error::DuplicateLabel(p));
        }
    }
    let (l, r) = (k / 4, k % 4);
    let mut factors = Vec::with_capacity(l + 1);
    let g0_size = r + 2;
    factors.push(if r == 2 {
        square_factor("G0", &supply[..4])
    } else {
        two_prime_factor("G0".into(), supply[0], supply[1])
    });
    for i in 0..l {
        let start = g0_size + 4 * i;
        factors.push(square_factor(&format!("G{}", i + 1), &supply[start..start + 4]));
    }
    let descriptor = GroupDescriptor::Product(factors);
    let pg = prime_graph_of(&descriptor, &DegreeTable::default())?;
    Ok((descriptor, pg))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> DegreeSet {
        DegreeSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&set(&[1, 3, 4, 5])), vec![2, 3, 5]);
        assert_eq!(rho(&set(&[1, 6, 10, 14, 15, 21, 35])), vec![2, 3, 5, 7]);
        assert!(rho(&DegreeSet::trivial()).is_empty());
    }

    #[test]
    fn a7_gives_k4() {
        let pg = build_prime_graph(&set(&[1, 6, 10, 14, 15, 21, 35])).unwrap();
        assert_eq!(pg.primes(), &[2, 3, 5, 7]);
        assert!(pg.graph.is_complete());
    }

    #[test]
    fn a5_has_three_isolated_primes() {
        let pg = build_prime_graph(&set(&[1, 3, 4, 5])).unwrap();
        assert_eq!(pg.graph.edge_count(), 0);
        let rep = check_conditions(&pg, false);
        assert!(rep.components_ok_nonsolvable);
        assert!(rep.moreto_tiep_ok);
        assert!(!rep.palfy_ok);
        assert_eq!(rep.palfy_witness, Some(vec![2, 3, 5]));
        assert!(rep.diameter_ok);
        assert!(!rep.components_ok_solvable);
    }

    #[test]
    fn m11_edges() {
        let pg = build_prime_graph(&set(&[1, 10, 11, 16, 44, 45, 55])).unwrap();
        assert_eq!(pg.prime_edges(), vec![(2, 5), (2, 11), (3, 5), (5, 11)]);
        assert!(pg.graph.is_kt_free(4).unwrap());
        assert_eq!(pg.graph.triangle_count(), 1);
    }

    #[test]
    fn square_satisfies_solvable_conditions() {
        let g = SmallGraph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], Some(vec![2, 3, 5, 7])).unwrap();
        let pg = PrimeGraph { graph: g, degrees: DegreeSet::trivial(), source: Source::Degrees };
        let rep = check_conditions(&pg, true);
        assert!(rep.palfy_ok);
        assert!(rep.components_ok_solvable);
        assert!(rep.all_ok());
    }

    #[test]
    fn two_complete_components() {
        // cd = {1, 2, 15}: components {2} and {3, 5}
        let pg = build_prime_graph(&set(&[1, 2, 15])).unwrap();
        let rep = check_conditions(&pg, true);
        assert_eq!(rep.components, vec![vec![2], vec![3, 5]]);
        assert!(rep.components_ok_solvable);
        // {2, 3} and {5, 7}: n2 = 2 < 2^2 - 1
        let pg = build_prime_graph(&set(&[1, 6, 35])).unwrap();
        let rep = check_conditions(&pg, true);
        assert!(!rep.components_ok_solvable);
        assert!(!rep.notes.is_empty());
    }

    #[test]
    fn long_path_fails_diameter() {
        // 2-3-5-7-11 path via degrees 6, 15, 35, 77
        let pg = build_prime_graph(&set(&[1, 6, 15, 35, 77])).unwrap();
        let rep = check_conditions(&pg, false);
        assert_eq!(rep.diameter, Some(4));
        assert!(!rep.diameter_ok);
        assert_eq!(rep.diameter_witness, Some((2, 11)));
    }

    #[test]
    fn k4_witness_reported() {
        let pg = build_prime_graph(&set(&[1, 210])).unwrap();
        let rep = check_conditions(&pg, false);
        assert!(!rep.k4_free);
        assert_eq!(rep.k4_witness, Some(vec![2, 3, 5, 7]));
    }

    #[test]
    fn empty_prime_graph_rejected() {
        assert!(build_prime_graph(&DegreeSet::trivial()).is_err());
    }

    #[test]
    fn too_many_primes() {
        let primes = first_primes(17);
        let err = build_prime_graph(&DegreeSet::new(primes).unwrap()).unwrap_err();
        assert_eq!(err, Error::TooManyPrimes { count: 17 });
    }

    #[test]
    fn cocktail_party_shapes() {
        assert!(cocktail_party(2).unwrap().is_isomorphic(&SmallGraph::cycle(4).unwrap()));
        let g = cocktail_party(4).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.regular_degree(), Some(6));
        assert!(cocktail_party(9).is_err());
        assert!(cocktail_party(1).is_err());
    }

    #[test]
    fn construction_shapes() {
        let (_, sq) = construct_regular_product(2, None).unwrap();
        assert!(sq.graph.is_isomorphic(&SmallGraph::cycle(4).unwrap()));
        let (desc, oct) = construct_regular_product(4, None).unwrap();
        assert!(desc.is_synthetic());
        assert!(oct.is_synthetic());
        assert_eq!(oct.graph.regular_degree(), Some(4));
        assert_eq!(oct.primes(), &[2, 3, 5, 7, 11, 13]);
        let (_, six) = construct_regular_product(6, None).unwrap();
        assert_eq!(six.graph.order(), 8);
        assert_eq!(six.graph.regular_degree(), Some(6));
    }

    #[test]
    fn construction_errors() {
        assert!(construct_regular_product(3, None).is_err());
        assert!(construct_regular_product(0, None).is_err());
        assert!(construct_regular_product(16, None).is_err());
        assert!(construct_regular_product(4, Some(&[2, 3, 5, 7, 11])).is_err());
        assert_eq!(construct_regular_product(2, Some(&[2, 3, 5, 5])).unwrap_err(), Error::DuplicateLabel(5));
        assert_eq!(construct_regular_product(2, Some(&[2, 3, 5, 9])).unwrap_err(), Error::NonPrimeLabel(9));
    }

    #[test]
    fn custom_primes() {
        let (_, pg) = construct_regular_product(2, Some(&[11, 13, 17, 19])).unwrap();
        assert_eq!(pg.prime_edges(), vec![(11, 17), (11, 19), (13, 17), (13, 19)]);
    }
}
