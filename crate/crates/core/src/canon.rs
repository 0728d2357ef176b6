//! Canonical labeling, isomorphism, and automorphisms.
//!
//! The canonical order is found by iterated color refinement followed by
//! backtracking over the refined cells. Refinement repeatedly splits cells by
//! each vertex's vector of per-cell, per-color adjacency counts until stable;
//! the backtracking individualizes one vertex of the first non-singleton cell
//! at a time and keeps the ordering whose pair matrix is lexicographically
//! least.
//!
//! Two accelerations keep highly symmetric inputs tractable without touching
//! the result:
//!
//! - when every cell is internally monochromatic and every pair of cells
//!   carries a single color, all completions yield the same matrix, so one
//!   completion is taken outright;
//! - orderings that tie with the current best yield automorphisms, which
//!   then prune sibling branches reachable from an already-explored one.
//!
//! Matrices are compared in increasing-max pair order, `(0,1), (0,2), (1,2),
//! (0,3), ...`, so the pairs among the first `p` placed vertices form a
//! contiguous comparable prefix.

use crate::budget::Budgets;
use crate::error::Error;
use crate::graph::{Color, NGraph, VertexMap};
use crate::Result;

/// Matrix of `g` reordered by `ord`, in increasing-max pair order over
/// positions. `ord` may be a prefix of a full ordering.
fn prefix_key(g: &NGraph, ord: &[usize]) -> Vec<Color> {
    let mut key = Vec::with_capacity(ord.len() * ord.len().saturating_sub(1) / 2);
    for q in 1..ord.len() {
        for r in 0..q {
            key.push(g.color(ord[r], ord[q]));
        }
    }
    key
}

struct Search<'a> {
    g: &'a NGraph,
    best_key: Option<Vec<Color>>,
    best_order: Vec<usize>,
    autos: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    /// Splits cells by per-cell, per-color adjacency counts until stable.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        let n = self.g.size();
        let colors = self.g.color_count();
        loop {
            let mut cell_of = vec![0usize; n];
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let width = cells.len() * colors;
            let mut sig = vec![vec![0u32; width]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let c = self.g.color(i, j) as usize;
                    sig[i][cell_of[j] * colors + c] += 1;
                    sig[j][cell_of[i] * colors + c] += 1;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut members = cell.clone();
                members.sort_by(|&a, &b| sig[a].cmp(&sig[b]));
                let mut group = vec![members[0]];
                for &v in &members[1..] {
                    if sig[v] == sig[group[0]] {
                        group.push(v);
                    } else {
                        next.push(std::mem::replace(&mut group, vec![v]));
                        split = true;
                    }
                }
                next.push(group);
            }
            *cells = next;
            if !split {
                return;
            }
        }
    }

    /// True when cell contents and cell pairs are each monochromatic, making
    /// every completion of the current ordering equivalent.
    fn cells_homogeneous(&self, cells: &[Vec<usize>]) -> bool {
        for (a, ca) in cells.iter().enumerate() {
            let mut seen: Option<Color> = None;
            for (i, &u) in ca.iter().enumerate() {
                for &v in &ca[i + 1..] {
                    let c = self.g.color(u, v);
                    if *seen.get_or_insert(c) != c {
                        return false;
                    }
                }
            }
            for cb in &cells[a + 1..] {
                let mut seen: Option<Color> = None;
                for &u in ca {
                    for &v in cb {
                        let c = self.g.color(u, v);
                        if *seen.get_or_insert(c) != c {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn offer(&mut self, order: Vec<usize>) {
        let key = prefix_key(self.g, &order);
        match &self.best_key {
            None => {
                self.best_key = Some(key);
                self.best_order = order;
            }
            Some(best) => match key.cmp(best) {
                std::cmp::Ordering::Less => {
                    self.best_key = Some(key);
                    self.best_order = order;
                }
                std::cmp::Ordering::Equal => {
                    // Two orderings with equal keys compose to an automorphism.
                    let mut sigma = vec![0usize; order.len()];
                    for (k, &v) in self.best_order.iter().enumerate() {
                        sigma[v] = order[k];
                    }
                    if sigma.iter().enumerate().any(|(i, &v)| i != v)
                        && !self.autos.contains(&sigma)
                    {
                        self.autos.push(sigma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    fn search(&mut self, mut cells: Vec<Vec<usize>>) {
        self.refine(&mut cells);

        let prefix: Vec<usize> = cells
            .iter()
            .take_while(|c| c.len() == 1)
            .map(|c| c[0])
            .collect();
        if let Some(best) = &self.best_key {
            let partial = prefix_key(self.g, &prefix);
            if partial.as_slice() > &best[..partial.len()] {
                return;
            }
        }

        if prefix.len() == self.g.size() {
            self.offer(prefix);
            return;
        }

        if self.cells_homogeneous(&cells) {
            self.offer(cells.concat());
            return;
        }

        let target = cells
            .iter()
            .position(|c| c.len() > 1)
            .expect("non-discrete");
        let members = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            let skip = self.autos.iter().any(|sigma| {
                prefix.iter().all(|&w| sigma[w] == w) && tried.iter().any(|&u| sigma[u] == v)
            });
            if !skip {
                let mut child = cells.clone();
                let rest: Vec<usize> = members.iter().copied().filter(|&u| u != v).collect();
                child[target] = vec![v];
                child.insert(target + 1, rest);
                self.search(child);
            }
            tried.push(v);
        }
    }
}

/// Ordering of the vertices whose induced graph is the canonical form:
/// position `k` of the canonical form is vertex `canonical_order(g)[k]`.
pub fn canonical_order(g: &NGraph) -> Vec<usize> {
    if g.size() == 0 {
        return Vec::new();
    }
    let mut search = Search {
        g,
        best_key: None,
        best_order: Vec::new(),
        autos: Vec::new(),
    };
    search.search(vec![(0..g.size()).collect()]);
    search.best_order
}

/// The canonical representative of `g`'s isomorphism class. Isomorphic
/// graphs over the same signature have equal canonical forms.
pub fn canonical_form(g: &NGraph) -> NGraph {
    g.induced(&canonical_order(g))
        .expect("order is a permutation")
}

/// Canonical-form matrix, usable as a dedup key among graphs of equal size
/// and signature.
pub fn canonical_key(g: &NGraph) -> Vec<Color> {
    canonical_form(g).matrix().to_vec()
}

/// A color-preserving bijection `g -> h` when one exists. Signatures must
/// match exactly; differing sizes simply yield `None`.
pub fn are_isomorphic(g: &NGraph, h: &NGraph) -> Result<Option<VertexMap>> {
    if !g.same_signature(h) {
        return Err(Error::SignatureMismatch {
            left: g.signature(),
            right: h.signature(),
        });
    }
    if g.size() != h.size() || g.color_counts() != h.color_counts() {
        return Ok(None);
    }
    let og = canonical_order(g);
    let oh = canonical_order(h);
    if prefix_key(g, &og) != prefix_key(h, &oh) {
        return Ok(None);
    }
    let mut images = vec![0usize; g.size()];
    for (k, &v) in og.iter().enumerate() {
        images[v] = oh[k];
    }
    let map = VertexMap::new(images);
    debug_assert!(map.is_embedding(g, h));
    Ok(Some(map))
}

/// Backtracking image assignment in vertex order; `fixed` pins vertices to
/// images. Returns assignments in lexicographic order of the image vector.
fn extend_embedding(
    g: &NGraph,
    fixed: &[(usize, usize)],
    all: bool,
    out: &mut Vec<VertexMap>,
) -> bool {
    let n = g.size();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(src, dst) in fixed {
        if src >= n || dst >= n || (images[src] != usize::MAX && images[src] != dst) {
            return false;
        }
        if images[src] == dst {
            continue;
        }
        if used[dst] {
            return false;
        }
        images[src] = dst;
        used[dst] = true;
    }
    // Pinned pairs must already be color-consistent with each other.
    for &(a, _) in fixed {
        for &(b, _) in fixed {
            if a < b && g.color(a, b) != g.color(images[a], images[b]) {
                return false;
            }
        }
    }

    fn rec(
        g: &NGraph,
        pos: usize,
        images: &mut [usize],
        used: &mut [bool],
        all: bool,
        out: &mut Vec<VertexMap>,
    ) -> bool {
        let n = g.size();
        if pos == n {
            out.push(VertexMap::new(images.to_vec()));
            return !all;
        }
        if images[pos] != usize::MAX {
            return rec(g, pos + 1, images, used, all, out);
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            let ok = (0..pos)
                .all(|q| images[q] == usize::MAX || g.color(q, pos) == g.color(images[q], cand))
                && (pos + 1..n).all(|q| {
                    images[q] == usize::MAX || g.color(pos, q) == g.color(cand, images[q])
                });
            if !ok {
                continue;
            }
            images[pos] = cand;
            used[cand] = true;
            if rec(g, pos + 1, images, used, all, out) {
                return true;
            }
            images[pos] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    rec(g, 0, &mut images, &mut used, all, out);
    true
}

/// Color-preserving embeddings of `h` into `g`, in lexicographic image
/// order; with `all` false the search stops at the first. Exhaustive
/// backtracking over `h`'s vertices in index order.
pub fn embeddings(h: &NGraph, g: &NGraph, all: bool) -> Vec<VertexMap> {
    if !h.same_signature(g) || h.size() > g.size() {
        return Vec::new();
    }
    fn rec(
        h: &NGraph,
        g: &NGraph,
        images: &mut Vec<usize>,
        used: &mut [bool],
        all: bool,
        out: &mut Vec<VertexMap>,
    ) -> bool {
        if images.len() == h.size() {
            out.push(VertexMap::new(images.clone()));
            return !all;
        }
        let pos = images.len();
        for cand in 0..g.size() {
            if used[cand] {
                continue;
            }
            if images
                .iter()
                .enumerate()
                .all(|(q, &img)| h.color(q, pos) == g.color(img, cand))
            {
                images.push(cand);
                used[cand] = true;
                if rec(h, g, images, used, all, out) {
                    return true;
                }
                images.pop();
                used[cand] = false;
            }
        }
        false
    }
    let mut out = Vec::new();
    rec(
        h,
        g,
        &mut Vec::with_capacity(h.size()),
        &mut vec![false; g.size()],
        all,
        &mut out,
    );
    out
}

/// First color-preserving embedding of `h` into `g`, if any.
pub fn find_embedding(h: &NGraph, g: &NGraph) -> Option<VertexMap> {
    embeddings(h, g, false).into_iter().next()
}

/// The full automorphism group, in lexicographic image order. Guarded by the
/// automorphism size budget: group order can reach `size!`.
pub fn automorphisms(g: &NGraph, budgets: &Budgets) -> Result<Vec<VertexMap>> {
    Budgets::check(
        "graph size for automorphism enumeration",
        "AUTOMORPHISM_SIZE",
        g.size() as u64,
        budgets.automorphism_size,
    )?;
    let mut out = Vec::new();
    extend_embedding(g, &[], true, &mut out);
    Ok(out)
}

/// First automorphism of `g` extending the pinned `(vertex, image)` pairs,
/// or `None` when no extension exists. Exact: the search is exhaustive.
pub fn find_extending_automorphism(g: &NGraph, fixed: &[(usize, usize)]) -> Option<VertexMap> {
    let mut out = Vec::new();
    if !extend_embedding(g, fixed, false, &mut out) {
        return None;
    }
    out.into_iter().next()
}
