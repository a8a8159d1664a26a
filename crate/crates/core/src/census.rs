//! Exhaustive generation of small graphs.
//!
//! Two generators live here. [`orderly`] produces one graph per isomorphism
//! class by Read–Faradzev style orderly generation: vertices are added one at
//! a time and a partial graph survives only if its column-by-column adjacency
//! code is the largest over all relabellings. Induced prefixes of a maximal
//! code are maximal themselves, so every class is reached exactly once.
//! [`enumerate_all`] walks every labelled graph edge by edge and is kept as
//! the independent reference for counts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::canon::CanonicalForm;
use crate::error::{Error, Result};
use crate::graph::{bits, SmallGraph, VertexSet, MAX_VERTICES};

/// Largest order accepted by the isomorphism-class generators.
pub const MAX_CENSUS_ORDER: usize = 12;
/// Largest order accepted by the labelled enumeration.
pub const MAX_LABELED_ORDER: usize = 8;

/// A predicate in the census vocabulary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    Connected,
    Regular(usize),
    MaxDegree(usize),
    TriangleRequired,
    TriangleForbidden,
    MaxAlpha(usize),
    KtFree(usize),
}

impl Constraint {
    /// Evaluation rank: connectivity, degree, triangle, independence, cliques.
    fn rank(&self) -> u8 {
        match self {
            Constraint::Connected => 0,
            Constraint::Regular(_) | Constraint::MaxDegree(_) => 1,
            Constraint::TriangleRequired | Constraint::TriangleForbidden => 2,
            Constraint::MaxAlpha(_) => 3,
            Constraint::KtFree(_) => 4,
        }
    }

    pub fn holds(&self, g: &SmallGraph) -> bool {
        match *self {
            Constraint::Connected => g.is_connected(),
            Constraint::Regular(k) => g.regular_degree() == Some(k),
            Constraint::MaxDegree(d) => g.max_degree() <= d,
            Constraint::TriangleRequired => g.triangle_count() > 0,
            Constraint::TriangleForbidden => g.triangle_count() == 0,
            Constraint::MaxAlpha(a) => g.independence_number() <= a,
            Constraint::KtFree(t) => g.find_clique(t).is_none(),
        }
    }

    /// Why a graph failing this constraint was excluded.
    pub fn failure_reason(&self) -> String {
        match *self {
            Constraint::Connected => "disconnected".into(),
            Constraint::Regular(k) => format!("not {k}-regular"),
            Constraint::MaxDegree(d) => format!("max degree > {d}"),
            Constraint::TriangleRequired => "no triangle".into(),
            Constraint::TriangleForbidden => "has a triangle".into(),
            Constraint::MaxAlpha(a) => format!("alpha > {a}"),
            Constraint::KtFree(t) => format!("contains K{t}"),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Connected => write!(f, "connected"),
            Constraint::Regular(k) => write!(f, "regular={k}"),
            Constraint::MaxDegree(d) => write!(f, "maxdeg<={d}"),
            Constraint::TriangleRequired => write!(f, "triangle"),
            Constraint::TriangleForbidden => write!(f, "no-triangle"),
            Constraint::MaxAlpha(a) => write!(f, "alpha<={a}"),
            Constraint::KtFree(t) => write!(f, "k{t}free"),
        }
    }
}

impl FromStr for Constraint {
    type Err = Error;

    /// Accepts the names printed by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let num = |rest: &str| -> Result<usize> {
            rest.parse().map_err(|_| Error::Domain(format!("bad number in constraint `{s}`")))
        };
        if s == "connected" {
            Ok(Constraint::Connected)
        } else if s == "triangle" {
            Ok(Constraint::TriangleRequired)
        } else if s == "no-triangle" || s == "triangle-free" {
            Ok(Constraint::TriangleForbidden)
        } else if let Some(rest) = s.strip_prefix("alpha<=") {
            Ok(Constraint::MaxAlpha(num(rest)?))
        } else if let Some(rest) = s.strip_prefix("maxdeg<=") {
            Ok(Constraint::MaxDegree(num(rest)?))
        } else if let Some(rest) = s.strip_prefix("regular=") {
            Ok(Constraint::Regular(num(rest)?))
        } else if let Some(t) = s.strip_prefix('k').and_then(|r| r.strip_suffix("free")) {
            let t = num(t)?;
            if t < 3 {
                return Err(Error::CliqueSize(t));
            }
            Ok(Constraint::KtFree(t))
        } else {
            Err(Error::Domain(format!("unknown constraint `{s}`")))
        }
    }
}

/// An ordered list of constraints, kept in evaluation order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Constraints(Vec<Constraint>);

impl Constraints {
    pub fn new(mut list: Vec<Constraint>) -> Self {
        list.sort_by_key(Constraint::rank);
        list.dedup();
        Constraints(list)
    }

    pub fn none() -> Self {
        Constraints(Vec::new())
    }

    pub fn parse_list(s: &str) -> Result<Self> {
        let list = s
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(list))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Constraint> {
        self.0.iter()
    }

    pub fn first_failure(&self, g: &SmallGraph) -> Option<Constraint> {
        self.0.iter().find(|c| !c.holds(g)).copied()
    }

    pub fn holds(&self, g: &SmallGraph) -> bool {
        self.first_failure(g).is_none()
    }

    /// Degree cap implied by the list, used to prune generation.
    fn degree_cap(&self) -> Option<usize> {
        self.0
            .iter()
            .filter_map(|c| match *c {
                Constraint::Regular(k) | Constraint::MaxDegree(k) => Some(k),
                _ => None,
            })
            .min()
    }

    fn exact_degree(&self) -> Option<usize> {
        self.0.iter().find_map(|c| match *c {
            Constraint::Regular(k) => Some(k),
            _ => None,
        })
    }
}

impl fmt::Display for Constraints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// What to generate: order, degree window, connectivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub n: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
}

impl GenParams {
    pub fn regular(n: usize, k: usize, connected: bool) -> Self {
        GenParams { n, min_degree: k, max_degree: k, connected }
    }

    pub fn all(n: usize) -> Self {
        GenParams { n, min_degree: 0, max_degree: n.saturating_sub(1), connected: false }
    }
}

/// Column `j` of the code under ordering `perm`: bit for row 0 most significant.
#[inline]
fn column(adj: &[VertexSet], perm: &[usize], j: usize) -> u16 {
    let row = adj[perm[j]];
    let mut c = 0u16;
    for &p in &perm[..j] {
        c = (c << 1) | ((row >> p) & 1);
    }
    c
}

/// Whether the graph on `0..m` has the largest column code among all relabellings.
fn is_max_code(adj: &[VertexSet], m: usize) -> bool {
    let identity: Vec<usize> = (0..m).collect();
    let target: Vec<u16> = (0..m).map(|j| column(adj, &identity, j)).collect();
    let mut perm = vec![0usize; m];

    fn search(adj: &[VertexSet], target: &[u16], perm: &mut [usize], pos: usize, used: VertexSet) -> bool {
        let m = target.len();
        if pos == m {
            return true;
        }
        let free = !used & ((1u32 << m) - 1) as u16;
        for v in bits(free) {
            perm[pos] = v;
            let c = column(adj, perm, pos);
            if c > target[pos] {
                return false;
            }
            if c == target[pos] && !search(adj, target, perm, pos + 1, used | 1 << v) {
                return false;
            }
        }
        true
    }

    search(adj, &target, &mut perm, 0, 0)
}

struct Orderly<'a, F: FnMut(&SmallGraph)> {
    params: GenParams,
    adj: [VertexSet; MAX_VERTICES],
    visit: &'a mut F,
}

impl<F: FnMut(&SmallGraph)> Orderly<'_, F> {
    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// A component of the partial graph on `0..m` that can take no more edges.
    fn has_closed_component(&self, m: usize) -> bool {
        let all: VertexSet = ((1u32 << m) - 1) as u16;
        let mut left = all;
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= frontier;
            }
            left &= !comp;
            if (comp.count_ones() as usize) < self.params.n
                && bits(comp).all(|v| self.degree(v) == self.params.max_degree)
            {
                return true;
            }
        }
        false
    }

    fn extend(&mut self, m: usize) {
        let n = self.params.n;
        if m == n {
            let g = SmallGraph::from_rows_unchecked(n, &self.adj);
            if (0..n).all(|v| self.degree(v) >= self.params.min_degree) && (!self.params.connected || g.is_connected()) {
                (self.visit)(&g);
            }
            return;
        }
        let remaining_after = n - m - 1;
        let open: VertexSet = (0..m).filter(|&v| self.degree(v) < self.params.max_degree).fold(0, |a, v| a | 1 << v);
        // every subset of the unsaturated vertices is a candidate neighbourhood
        let mut sub: VertexSet = 0;
        loop {
            let size = sub.count_ones() as usize;
            if size <= self.params.max_degree && self.params.min_degree.saturating_sub(size) <= remaining_after {
                for u in bits(sub) {
                    self.adj[u] |= 1 << m;
                }
                self.adj[m] = sub;
                let feasible = (0..m).all(|v| self.params.min_degree.saturating_sub(self.degree(v)) <= remaining_after)
                    && !(self.params.connected && m + 1 < n && self.has_closed_component(m + 1))
                    && is_max_code(&self.adj, m + 1);
                if feasible {
                    self.extend(m + 1);
                }
                for u in bits(sub) {
                    self.adj[u] &= !(1 << m);
                }
                self.adj[m] = 0;
            }
            if sub == open {
                break;
            }
            sub = sub.wrapping_sub(open) & open;
        }
    }
}

/// Calls `visit` once per isomorphism class matching `params`.
pub fn orderly(params: GenParams, mut visit: impl FnMut(&SmallGraph)) -> Result<()> {
    if params.n == 0 || params.n > MAX_CENSUS_ORDER {
        return Err(Error::Domain(format!("census order must be in 1..={MAX_CENSUS_ORDER}, got {}", params.n)));
    }
    let mut gen = Orderly { params, adj: [0; MAX_VERTICES], visit: &mut visit };
    if params.n == 1 || params.max_degree > 0 || params.min_degree == 0 {
        gen.extend(1);
    }
    Ok(())
}

/// One canonical representative per isomorphism class, sorted by canonical form.
pub fn unlabeled(params: GenParams) -> Result<Vec<SmallGraph>> {
    let mut found = BTreeMap::new();
    orderly(params, |g| {
        let c = g.canonical_form();
        let prev = found.insert(c, ());
        debug_assert!(prev.is_none(), "orderly generation produced a duplicate class");
    })?;
    Ok(found.into_keys().map(|c: CanonicalForm| c.to_graph()).collect())
}

/// Result of a regular census; `note` explains an empty answer forced by parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularCensus {
    pub n: usize,
    pub k: usize,
    pub graphs: Vec<SmallGraph>,
    pub note: Option<String>,
}

/// All connected `k`-regular graphs on `n` vertices up to isomorphism.
pub fn enumerate_regular_connected(n: usize, k: usize) -> Result<RegularCensus> {
    if n == 0 || n > MAX_CENSUS_ORDER {
        return Err(Error::Domain(format!("census order must be in 1..={MAX_CENSUS_ORDER}, got {n}")));
    }
    if k >= n {
        return Err(Error::Domain(format!("valency {k} needs more than {n} vertices")));
    }
    if n * k % 2 == 1 {
        return Ok(RegularCensus {
            n,
            k,
            graphs: Vec::new(),
            note: Some(format!("parity: {n} vertices of odd degree {k} would give an odd number of odd vertices")),
        });
    }
    let graphs = unlabeled(GenParams::regular(n, k, true))?;
    Ok(RegularCensus { n, k, graphs, note: None })
}

/// Visits every labelled graph on `n` vertices that satisfies `constraints`,
/// each exactly once, and returns how many were visited. Degree constraints
/// prune the edge-by-edge walk; the rest are checked on complete graphs.
pub fn enumerate_all(n: usize, constraints: &Constraints, mut visit: impl FnMut(&SmallGraph)) -> Result<u64> {
    if n == 0 || n > MAX_LABELED_ORDER {
        return Err(Error::Domain(format!("labelled enumeration needs 1 <= n <= {MAX_LABELED_ORDER}, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let cap = constraints.degree_cap().unwrap_or(n - 1);
    let exact = constraints.exact_degree();
    let mut adj = [0 as VertexSet; MAX_VERTICES];
    let mut count = 0u64;

    #[allow(clippy::too_many_arguments)]
    fn walk(
        idx: usize,
        n: usize,
        pairs: &[(usize, usize)],
        cap: usize,
        exact: Option<usize>,
        adj: &mut [VertexSet; MAX_VERTICES],
        constraints: &Constraints,
        count: &mut u64,
        visit: &mut dyn FnMut(&SmallGraph),
    ) {
        // the row of `u` is complete once we move past its last pair
        if let Some(k) = exact {
            let finished = if idx == pairs.len() { Some(n - 1) } else if idx > 0 && pairs[idx].0 != pairs[idx - 1].0 { Some(pairs[idx - 1].0) } else { None };
            if let Some(u) = finished {
                let done = if idx == pairs.len() { 0..n } else { u..u + 1 };
                if done.clone().any(|v| adj[v].count_ones() as usize != k) {
                    return;
                }
            }
        }
        if idx == pairs.len() {
            let g = SmallGraph::from_rows_unchecked(n, adj);
            if constraints.holds(&g) {
                *count += 1;
                visit(&g);
            }
            return;
        }
        let (u, v) = pairs[idx];
        walk(idx + 1, n, pairs, cap, exact, adj, constraints, count, visit);
        if (adj[u].count_ones() as usize) < cap && (adj[v].count_ones() as usize) < cap {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            walk(idx + 1, n, pairs, cap, exact, adj, constraints, count, visit);
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
    }

    walk(0, n, &pairs, cap, exact, &mut adj, constraints, &mut count, &mut visit);
    Ok(count)
}

/// Graphs that passed every constraint, and the rest with the first failed
/// constraint. Both lists are sorted by canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterOutcome {
    pub survivors: Vec<SmallGraph>,
    pub exclusions: Vec<(SmallGraph, Constraint)>,
}

pub fn filter_census(graphs: &[SmallGraph], constraints: &Constraints) -> FilterOutcome {
    let mut survivors = Vec::new();
    let mut exclusions = Vec::new();
    for g in graphs {
        match constraints.first_failure(g) {
            None => survivors.push(g.clone()),
            Some(c) => exclusions.push((g.clone(), c)),
        }
    }
    survivors.sort_by_cached_key(SmallGraph::canonical_form);
    exclusions.sort_by_cached_key(|(g, _)| g.canonical_form());
    FilterOutcome { survivors, exclusions }
}

/// A census request: order, optional regularity, connectivity and filters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusQuery {
    pub n: usize,
    pub k: Option<usize>,
    pub require_connected: bool,
    pub constraints: Constraints,
}

impl CensusQuery {
    pub fn run(&self) -> Result<FilterOutcome> {
        let params = match self.k {
            Some(k) => {
                if k >= self.n {
                    return Err(Error::Domain(format!("valency {k} needs more than {} vertices", self.n)));
                }
                if self.n * k % 2 == 1 {
                    return Ok(FilterOutcome { survivors: Vec::new(), exclusions: Vec::new() });
                }
                GenParams::regular(self.n, k, self.require_connected)
            }
            None => GenParams { connected: self.require_connected, ..GenParams::all(self.n) },
        };
        let graphs = unlabeled(params)?;
        Ok(filter_census(&graphs, &self.constraints))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k33() -> SmallGraph {
        let edges: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
        SmallGraph::new(6, &edges, None).unwrap()
    }

    #[test]
    fn cubic_on_four_is_k4() {
        let c = enumerate_regular_connected(4, 3).unwrap();
        assert_eq!(c.graphs.len(), 1);
        assert!(c.graphs[0].is_complete());
    }

    #[test]
    fn cubic_on_six() {
        let c = enumerate_regular_connected(6, 3).unwrap();
        assert_eq!(c.graphs.len(), 2);
        let triangles: Vec<_> = c.graphs.iter().map(|g| g.triangle_count()).collect();
        assert!(triangles.contains(&0) && triangles.contains(&2));
    }

    #[test]
    fn parity_gives_empty_with_note() {
        let c = enumerate_regular_connected(7, 3).unwrap();
        assert!(c.graphs.is_empty());
        assert!(c.note.unwrap().starts_with("parity"));
        assert!(enumerate_regular_connected(13, 4).is_err());
        assert!(enumerate_regular_connected(4, 4).is_err());
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_all(3, &Constraints::none(), |_| {}).unwrap(), 8);
        let cubic = Constraints::new(vec![Constraint::Regular(3)]);
        assert_eq!(enumerate_all(4, &cubic, |_| {}).unwrap(), 1);
        assert_eq!(enumerate_all(6, &cubic, |_| {}).unwrap(), 70);
        assert!(enumerate_all(9, &cubic, |_| {}).is_err());
    }

    #[test]
    fn all_graphs_small_orders() {
        // graphs up to isomorphism on 1..=5 vertices: 1, 2, 4, 11, 34
        let counts: Vec<usize> = (1..=5).map(|n| unlabeled(GenParams::all(n)).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn filter_prism_vs_k33() {
        let census = enumerate_regular_connected(6, 3).unwrap();
        let cons = Constraints::new(vec![Constraint::MaxAlpha(3), Constraint::TriangleRequired]);
        let out = filter_census(&census.graphs, &cons);
        assert_eq!(out.survivors.len(), 1);
        assert_eq!(out.survivors[0].triangle_count(), 2);
        assert_eq!(out.exclusions.len(), 1);
        assert!(out.exclusions[0].0.is_isomorphic(&k33()));
        assert_eq!(out.exclusions[0].1.failure_reason(), "no triangle");
    }

    #[test]
    fn constraint_order_is_fixed() {
        let cons = Constraints::new(vec![Constraint::KtFree(4), Constraint::MaxAlpha(1), Constraint::Connected]);
        let list: Vec<_> = cons.iter().copied().collect();
        assert_eq!(list, vec![Constraint::Connected, Constraint::MaxAlpha(1), Constraint::KtFree(4)]);
        let two = SmallGraph::empty(2).unwrap();
        assert_eq!(cons.first_failure(&two), Some(Constraint::Connected));
    }

    #[test]
    fn parse_constraints() {
        let c = Constraints::parse_list("triangle,alpha<=3,k4free").unwrap();
        assert_eq!(c.to_string(), "triangle,alpha<=3,k4free");
        assert!(Constraints::parse_list("k2free").is_err());
        assert!(Constraints::parse_list("bogus").is_err());
        assert_eq!("maxdeg<=3".parse::<Constraint>().unwrap(), Constraint::MaxDegree(3));
    }

    #[test]
    fn query_runs() {
        let q = CensusQuery {
            n: 8,
            k: Some(3),
            require_connected: true,
            constraints: Constraints::new(vec![Constraint::MaxAlpha(2)]),
        };
        let out = q.run().unwrap();
        assert!(out.survivors.is_empty());
        assert_eq!(out.exclusions.len(), 5);
    }

    #[test]
    fn max_code_rejects_non_canonical_path() {
        // path 0-1-2 labelled with the centre first has code (1,1,0), beaten by (1,0,1)? no: max is centre first
        let centre_first = [0b110u16, 0b001, 0b001];
        assert!(is_max_code(&centre_first, 3));
        let end_first = [0b010u16, 0b101, 0b010];
        assert!(!is_max_code(&end_first, 3));
    }
}
