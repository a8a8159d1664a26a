//! Brute-force reference implementations shared by the integration tests.
//! They are deliberately naive and independent of the library's search code.

#![allow(dead_code)]

use cdgraph::SmallGraph;

/// Calls `f` with every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Column-major upper-triangle code of `g` read through `lab`
/// (position -> vertex), first pair most significant.
pub fn code_under(g: &SmallGraph, lab: &[usize]) -> u128 {
    let n = lab.len();
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | g.has_edge(lab[i], lab[j]) as u128;
        }
    }
    code
}

/// Largest code over all `n!` orderings.
pub fn brute_canonical_code(g: &SmallGraph) -> u128 {
    let mut best = 0;
    for_each_permutation(g.order(), |p| best = best.max(code_under(g, p)));
    best
}

/// Number of automorphisms, by checking every permutation.
pub fn brute_automorphisms(g: &SmallGraph) -> u64 {
    let n = g.order();
    let mut count = 0;
    for_each_permutation(n, |p| {
        if (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == g.has_edge(p[u], p[v]))) {
            count += 1;
        }
    });
    count
}

/// Largest independent set size by checking every subset.
pub fn brute_alpha(g: &SmallGraph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || !g.has_edge(u, v))))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
