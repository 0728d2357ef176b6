//! Brute-force reference implementations the fast paths are tested against.
//! Everything here enumerates permutations or tuples directly and never
//! calls the code under test.

use homog3_core::graph::Color;
use homog3_core::NGraph;

/// All permutations of `0..n` by Heap's algorithm, in its visit order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..n).collect();
    let mut out = vec![items.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            out.push(items.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// All ordered k-tuples of distinct values from `0..n`.
pub fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(k);
    fn rec(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                rec(k, n, cur, out);
                cur.pop();
            }
        }
    }
    rec(k, n, &mut cur, &mut out);
    out
}

/// All k-subsets of `0..n` in lexicographic order.
pub fn subsets(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(k);
    fn rec(k: usize, n: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            cur.push(v);
            rec(k, n, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(k, n, 0, &mut cur, &mut out);
    out
}

/// Isomorphism by scanning every permutation.
pub fn iso_by_permutation(g: &NGraph, h: &NGraph) -> Option<Vec<usize>> {
    if g.size() != h.size() {
        return None;
    }
    permutations(g.size()).into_iter().find(|perm| {
        (0..g.size()).all(|i| (i + 1..g.size()).all(|j| g.color(i, j) == h.color(perm[i], perm[j])))
    })
}

/// Every 2-colored graph on `size` vertices over the R,S signature, in
/// matrix counter order.
pub fn all_two_colored(size: usize) -> Vec<NGraph> {
    let pairs = size * size.saturating_sub(1) / 2;
    (0u32..1 << pairs)
        .map(|bits| {
            let matrix: Vec<Color> = (0..pairs).map(|p| (bits >> p & 1) as Color).collect();
            NGraph::from_matrix(&["R", "S"], size, matrix).unwrap()
        })
        .collect()
}

/// Homogeneity up to order `k` by scanning every pair of subsets, every
/// bijection between them, and every permutation of the graph.
pub fn naive_homogeneous(g: &NGraph, k: usize) -> bool {
    let n = g.size();
    let perms = permutations(n);
    let automorphisms: Vec<&Vec<usize>> = perms
        .iter()
        .filter(|perm| {
            (0..n).all(|i| (i + 1..n).all(|j| g.color(i, j) == g.color(perm[i], perm[j])))
        })
        .collect();
    for s in 1..=k.min(n) {
        for a in subsets(s, n) {
            for b in subsets(s, n) {
                for little in permutations(s) {
                    let preserves = (0..s).all(|x| {
                        (x + 1..s)
                            .all(|y| g.color(a[x], a[y]) == g.color(b[little[x]], b[little[y]]))
                    });
                    if !preserves {
                        continue;
                    }
                    let extends = automorphisms
                        .iter()
                        .any(|perm| (0..s).all(|x| perm[a[x]] == b[little[x]]));
                    if !extends {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Half-graph existence by scanning every ordered 2m-tuple.
pub fn half_graph_exists(g: &NGraph, p: Color, m: usize) -> bool {
    if 2 * m > g.size() {
        return false;
    }
    injections(2 * m, g.size())
        .into_iter()
        .any(|t| (0..m).all(|i| (0..m).all(|j| (g.color(t[i], t[m + j]) == p) == (i <= j))))
}
