//! Canonical labelling by individualisation and refinement.
//!
//! The search tree is the usual one: refine to an equitable ordered
//! partition, individualise each vertex of the first non-singleton cell,
//! recurse. Every leaf is a discrete partition and hence a relabelling of the
//! graph; the canonical form is the largest edge code among the leaves.
//! Automorphisms found at equal leaves prune siblings in the same orbit, which
//! keeps very symmetric graphs (edgeless, complete, cocktail-party) cheap.

use std::fmt;

use crate::graph::{bits, SmallGraph, VertexSet, MAX_VERTICES};

/// Upper-triangle edge code of a relabelled graph, read column by column:
/// `(0,1), (0,2), (1,2), (0,3), ...`, most significant bit first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

#[inline]
pub(crate) fn pair_bit(n: usize, i: usize, j: usize) -> u128 {
    debug_assert!(i < j && j < n);
    let total = n * (n - 1) / 2;
    let idx = j * (j - 1) / 2 + i;
    1u128 << (total - 1 - idx)
}

/// Code of `g` under the ordering `lab` (position -> vertex).
pub(crate) fn code_of(g: &SmallGraph, lab: &[usize]) -> u128 {
    let n = lab.len();
    let mut code = 0;
    for j in 1..n {
        let row = g.neighbors(lab[j]);
        for i in 0..j {
            if row & (1 << lab[i]) != 0 {
                code |= pair_bit(n, i, j);
            }
        }
    }
    code
}

impl CanonicalForm {
    pub fn from_code(n: usize, code: u128) -> Self {
        CanonicalForm { n: n as u8, code }
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn code(&self) -> u128 {
        self.code
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> SmallGraph {
        let n = self.order();
        let mut rows = [0 as VertexSet; MAX_VERTICES];
        for j in 1..n {
            for i in 0..j {
                if self.code & pair_bit(n, i, j) != 0 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        SmallGraph::from_rows_unchecked(n, &rows)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        let width = (n * n.saturating_sub(1) / 2).div_ceil(4).max(1);
        write!(f, "{}:{:0width$x}", n, self.code, width = width)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({self})")
    }
}

type Partition = Vec<VertexSet>;

/// Splits cells by neighbour counts into splitter cells until the ordered
/// partition is equitable. Sub-cells are ordered by increasing count.
fn refine(g: &SmallGraph, cells: &mut Partition) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 2);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut groups = [0 as VertexSet; MAX_VERTICES + 1];
                let mut used = 0u32;
                for v in bits(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones() as usize;
                    groups[c] |= 1 << v;
                    used |= 1 << c;
                }
                if used.count_ones() > 1 {
                    changed = true;
                }
                next.extend(groups.iter().copied().filter(|&grp| grp != 0));
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Leaf {
    code: u128,
    lab: Vec<usize>,
}

struct Search<'a> {
    g: &'a SmallGraph,
    first: Option<(Leaf, Vec<usize>)>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let up = parent[y];
        parent[y] = r;
        y = up;
    }
    r
}

impl Search<'_> {
    fn orbits_fixing(&self, path: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        for gamma in &self.autos {
            if path.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        if gamma.iter().enumerate().any(|(v, &w)| v != w) {
            self.autos.push(gamma);
        }
    }

    /// Returns `Some(level)` when the current subtree turned out to be the
    /// image of the first path's subtree and the search can resume at `level`.
    fn dfs(&mut self, cells: Partition, path: &mut Vec<usize>) -> Option<usize> {
        let n = self.g.order();
        if cells.len() == n {
            return self.leaf(&cells, path);
        }
        let t = cells.iter().position(|c| c.count_ones() > 1).expect("non-discrete partition");
        let cell = cells[t];
        let mut explored: Vec<usize> = Vec::new();
        for w in bits(cell) {
            if !explored.is_empty() {
                let orbit = self.orbits_fixing(path);
                if explored.iter().any(|&e| orbit[e] == orbit[w]) {
                    continue;
                }
            }
            explored.push(w);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << w);
            child.push(cell & !(1 << w));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut child);
            path.push(w);
            let r = self.dfs(child, path);
            path.pop();
            if let Some(level) = r {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Partition, path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = code_of(self.g, &lab);
        let Some((first, first_path)) = &self.first else {
            self.first = Some((Leaf { code, lab: lab.clone() }, path.to_vec()));
            self.best = Some(Leaf { code, lab });
            return None;
        };
        if code == first.code {
            let diverge = path.iter().zip(first_path).take_while(|(a, b)| a == b).count();
            let target = first.lab.clone();
            self.record_automorphism(&lab, &target);
            return Some(diverge);
        }
        let best = self.best.as_ref().expect("best leaf set with first");
        if code > best.code {
            self.best = Some(Leaf { code, lab });
        } else if code == best.code {
            let target = best.lab.clone();
            self.record_automorphism(&lab, &target);
        }
        None
    }
}

/// Canonical form of `g`; labels are ignored. Two graphs have equal forms
/// exactly when they are isomorphic.
pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Canonical form together with the ordering that realises it
/// (`lab[i]` is the original vertex placed at position `i`).
pub fn canonical_labeling(g: &SmallGraph) -> (CanonicalForm, Vec<usize>) {
    let n = g.order();
    let mut cells = vec![g.vertices()];
    refine(g, &mut cells);
    let mut search = Search { g, first: None, best: None, autos: Vec::new() };
    search.dfs(cells, &mut Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    (CanonicalForm { n: n as u8, code: best.code }, best.lab)
}
