//! Small simple undirected graphs stored as per-vertex neighbour bitmasks.
//!
//! Every graph has between 1 and [`MAX_VERTICES`] vertices, so one `u16` per
//! vertex holds a full adjacency row. Vertex labels are optional metadata
//! (distinct primes for prime graphs); no invariant or isomorphism
//! computation looks at them.

use std::fmt;

use crate::arith;
use crate::canon::{self, CanonicalForm};
use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 16;

/// Bit set of vertices.
pub type VertexSet = u16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    adj: [VertexSet; MAX_VERTICES],
    labels: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInvariants {
    pub order: usize,
    pub edge_count: usize,
    pub degree_sequence: Vec<usize>,
    pub max_degree: usize,
    pub regular_degree: Option<usize>,
    pub component_sizes: Vec<usize>,
    pub diameter: Option<usize>,
    pub triangle_count: usize,
    pub independence_number: usize,
    pub chromatic_number: usize,
    pub clique_number: usize,
    pub odd_vertex_count: usize,
}

pub(crate) fn bits(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

fn full_mask(n: usize) -> VertexSet {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

impl SmallGraph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)], labels: Option<Vec<u64>>) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        match labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }

    /// Builds a graph from 1-based vertex pairs, the way edge lists are
    /// usually written down by hand (`p1 -- p2`).
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut zero = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == 0 || v == 0 {
                return Err(Error::VertexOutOfRange { vertex: 0, n });
            }
            zero.push((u - 1, v - 1));
        }
        Self::new(n, &zero, None)
    }

    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Order(n));
        }
        Ok(SmallGraph { n, adj: [0; MAX_VERTICES], labels: None })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges, None)
    }

    /// Builds a graph from raw adjacency rows, validating every invariant.
    pub fn from_rows(rows: &[VertexSet]) -> Result<Self> {
        let n = rows.len();
        let mut g = Self::empty(n)?;
        let all = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::VertexOutOfRange { vertex: 15 - row.leading_zeros() as usize, n });
            }
            if row & (1 << v) != 0 {
                return Err(Error::Loop(v));
            }
            for w in bits(row) {
                if rows[w] & (1 << v) == 0 {
                    return Err(Error::Domain(format!("adjacency not symmetric at {v}-{w}")));
                }
            }
            g.adj[v] = row;
        }
        Ok(g)
    }

    /// Unchecked constructor for rows already known to be valid.
    pub(crate) fn from_rows_unchecked(n: usize, rows: &[VertexSet]) -> Self {
        let mut adj = [0; MAX_VERTICES];
        adj[..n].copy_from_slice(&rows[..n]);
        SmallGraph { n, adj, labels: None }
    }

    /// Attaches prime labels, one per vertex, pairwise distinct.
    pub fn with_labels(mut self, labels: Vec<u64>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LabelCount { got: labels.len(), expected: self.n });
        }
        for (i, &p) in labels.iter().enumerate() {
            if !arith::is_prime(p) {
                return Err(Error::NonPrimeLabel(p));
            }
            if labels[..i].contains(&p) {
                return Err(Error::DuplicateLabel(p));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(&self) -> Self {
        SmallGraph { labels: None, ..self.clone() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    /// Label of `v`, or `v` itself when the graph is unlabeled.
    pub fn vertex_name(&self, v: usize) -> u64 {
        match &self.labels {
            Some(l) => l[v],
            None => v as u64,
        }
    }

    pub fn vertex_of_label(&self, label: u64) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|&p| p == label)
    }

    pub fn vertices(&self) -> VertexSet {
        full_mask(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj[..self.n]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u].checked_shr(u as u32 + 1).unwrap_or(0)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn is_complete(&self) -> bool {
        self.regular_degree() == Some(self.n - 1)
    }

    pub fn odd_vertex_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) % 2 == 1).count()
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`. Labels move with
    /// their vertices.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Domain(format!(
                "permutation of length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen: VertexSet = 0;
        for &p in perm {
            if p >= self.n || seen & (1 << p) != 0 {
                return Err(Error::Domain("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut adj = [0; MAX_VERTICES];
        for v in 0..self.n {
            adj[perm[v]] = bits(self.adj[v]).fold(0, |acc, w| acc | (1 << perm[w]));
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![0; self.n];
            for v in 0..self.n {
                out[perm[v]] = l[v];
            }
            out
        });
        Ok(SmallGraph { n: self.n, adj, labels })
    }

    pub fn complement(&self) -> Self {
        let all = self.vertices();
        let mut adj = [0; MAX_VERTICES];
        for v in 0..self.n {
            adj[v] = all & !self.adj[v] & !(1 << v);
        }
        SmallGraph { n: self.n, adj, labels: self.labels.clone() }
    }

    fn combine(&self, other: &Self, cross: bool) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::SizeOverflow(n));
        }
        let labels = match (&self.labels, &other.labels) {
            (Some(a), Some(b)) => {
                if let Some(&p) = a.iter().find(|p| b.contains(p)) {
                    return Err(Error::DuplicateLabel(p));
                }
                Some(a.iter().chain(b).copied().collect())
            }
            _ => None,
        };
        let mut adj = [0; MAX_VERTICES];
        let left = self.vertices();
        let right = other.vertices() << self.n;
        for v in 0..self.n {
            adj[v] = self.adj[v] | if cross { right } else { 0 };
        }
        for v in 0..other.n {
            adj[self.n + v] = (other.adj[v] << self.n) | if cross { left } else { 0 };
        }
        Ok(SmallGraph { n, adj, labels })
    }

    /// Disjoint union; vertices of `other` are shifted after those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    /// Disjoint union plus every edge between the two parts. This is the
    /// prime graph of a direct product whose factors have disjoint prime
    /// supports.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    /// Induced subgraph on `set`, vertices renumbered in increasing order.
    pub fn induced(&self, set: VertexSet) -> Result<Self> {
        let keep: Vec<usize> = bits(set & self.vertices()).collect();
        let mut g = Self::empty(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g.labels = self.labels.as_ref().map(|l| keep.iter().map(|&v| l[v]).collect());
        Ok(g)
    }

    /// Connected components as vertex sets, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let comp = self.reach(start, left);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    fn reach(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(1, self.vertices()) == self.vertices()
    }

    /// Breadth-first distances from `v`; `None` for unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut seen: VertexSet = 1 << v;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= frontier;
            for u in bits(frontier) {
                dist[u] = Some(d);
            }
        }
        dist
    }

    /// Longest shortest path; absent for disconnected graphs.
    pub fn diameter(&self) -> Option<usize> {
        if !self.is_connected() {
            return None;
        }
        (0..self.n)
            .map(|v| self.distances_from(v).into_iter().flatten().max().unwrap_or(0))
            .max()
    }

    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for (u, v) in self.edges() {
            let common = self.adj[u] & self.adj[v];
            count += common.checked_shr(v as u32 + 1).unwrap_or(0).count_ones() as usize;
        }
        count
    }

    /// A maximum independent set, found by exhaustive branch and bound.
    pub fn max_independent_set(&self) -> VertexSet {
        let mut best = 0;
        independent_search(&self.adj, self.vertices(), 0, &mut best);
        best
    }

    pub fn independence_number(&self) -> usize {
        self.max_independent_set().count_ones() as usize
    }

    pub fn max_clique(&self) -> VertexSet {
        self.complement().max_independent_set()
    }

    pub fn clique_number(&self) -> usize {
        self.max_clique().count_ones() as usize
    }

    /// Some `t` mutually adjacent vertices, if any exist.
    pub fn find_clique(&self, t: usize) -> Option<VertexSet> {
        fn grow(g: &SmallGraph, chosen: VertexSet, cand: VertexSet, need: usize) -> Option<VertexSet> {
            if need == 0 {
                return Some(chosen);
            }
            if (cand.count_ones() as usize) < need {
                return None;
            }
            let mut rest = cand;
            for v in bits(cand) {
                rest &= !(1 << v);
                if let Some(found) = grow(g, chosen | 1 << v, rest & g.adj[v], need - 1) {
                    return Some(found);
                }
            }
            None
        }
        grow(self, 0, self.vertices(), t)
    }

    /// True iff no `t` vertices are pairwise adjacent.
    pub fn is_kt_free(&self, t: usize) -> Result<bool> {
        if t < 3 {
            return Err(Error::CliqueSize(t));
        }
        Ok(self.find_clique(t).is_none())
    }

    /// Exact chromatic number: smallest `c` with a proper `c`-colouring,
    /// searched upwards from the clique number.
    pub fn chromatic_number(&self) -> usize {
        if self.edge_count() == 0 {
            return 1;
        }
        // colour high-degree vertices first
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut c = self.clique_number();
        loop {
            let mut classes = vec![0 as VertexSet; c];
            if self.colour(&order, 0, &mut classes, 0) {
                return c;
            }
            c += 1;
        }
    }

    fn colour(&self, order: &[usize], idx: usize, classes: &mut [VertexSet], used: usize) -> bool {
        let Some(&v) = order.get(idx) else {
            return true;
        };
        // a fresh colour is interchangeable with every other unused one
        let limit = (used + 1).min(classes.len());
        for c in 0..limit {
            if classes[c] & self.adj[v] == 0 {
                classes[c] |= 1 << v;
                if self.colour(order, idx + 1, classes, used.max(c + 1)) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        false
    }

    pub fn invariants(&self) -> GraphInvariants {
        let mut component_sizes: Vec<usize> =
            self.components().iter().map(|c| c.count_ones() as usize).collect();
        component_sizes.sort_unstable();
        GraphInvariants {
            order: self.n,
            edge_count: self.edge_count(),
            degree_sequence: self.degree_sequence(),
            max_degree: self.max_degree(),
            regular_degree: self.regular_degree(),
            component_sizes,
            diameter: self.diameter(),
            triangle_count: self.triangle_count(),
            independence_number: self.independence_number(),
            chromatic_number: self.chromatic_number(),
            clique_number: self.clique_number(),
            odd_vertex_count: self.odd_vertex_count(),
        }
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_form(self)
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.n == other.n
            && self.edge_count() == other.edge_count()
            && self.degree_sequence() == other.degree_sequence()
            && self.canonical_form() == other.canonical_form()
    }
}

fn independent_search(adj: &[VertexSet], cand: VertexSet, chosen: VertexSet, best: &mut VertexSet) {
    if cand == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    // a vertex with at most one candidate neighbour can always be taken
    if let Some(v) = bits(cand).find(|&v| (adj[v] & cand).count_ones() <= 1) {
        independent_search(adj, cand & !adj[v] & !(1 << v), chosen | 1 << v, best);
        return;
    }
    let v = bits(cand).max_by_key(|&v| (adj[v] & cand).count_ones()).unwrap();
    independent_search(adj, cand & !adj[v] & !(1 << v), chosen | 1 << v, best);
    independent_search(adj, cand & !(1 << v), chosen, best);
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", self.vertex_name(u), self.vertex_name(v))?;
        }
        write!(f, "])")
    }
}
