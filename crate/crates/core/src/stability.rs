//! Order-property witnesses: half-graphs, their compatibility refinements,
//! and constant-type subsets of disjoint edges.
//!
//! A half-graph of order `m` for color `P` is a pair of rows `a_1..a_m`,
//! `b_1..b_m` of distinct vertices with `color(a_i, b_j) = P` exactly when
//! `i <= j`. The search assigns the `a` row first, then the `b` row, each in
//! ascending vertex order, so the first witness found is lexicographically
//! least in `(a_1, .., a_m, b_1, .., b_m)`.

use serde::Serialize;

use crate::budget::Budgets;
use crate::error::Error;
use crate::graph::{Color, NGraph};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfGraphWitness {
    /// The cross color `P`.
    pub color: Color,
    pub order: usize,
    pub a_rows: Vec<usize>,
    pub b_rows: Vec<usize>,
    /// Row colors `(a-a pairs, b-b pairs)` when constrained to cliques.
    pub horizontal_colors: Option<(Color, Color)>,
    /// Color of every below-diagonal pair (`i > j`) when constrained.
    pub below: Option<Color>,
}

/// Re-checks a witness pair by pair: the `i <= j` pattern, distinctness, and
/// any horizontal or below-diagonal constraints it claims.
pub fn verify_half_graph(g: &NGraph, w: &HalfGraphWitness) -> Result<()> {
    let m = w.order;
    if w.a_rows.len() != m || w.b_rows.len() != m {
        return Err(Error::invalid("row lengths disagree with the order"));
    }
    let mut all: Vec<usize> = w.a_rows.iter().chain(&w.b_rows).copied().collect();
    all.sort_unstable();
    all.dedup();
    if all.len() != 2 * m || all.iter().any(|&v| v >= g.size()) {
        return Err(Error::invalid("rows are not distinct in-range vertices"));
    }
    for i in 0..m {
        for j in 0..m {
            let c = g.color(w.a_rows[i], w.b_rows[j]);
            if (c == w.color) != (i <= j) {
                return Err(Error::invalid(format!(
                    "cross pattern broken at ({i}, {j})"
                )));
            }
            if i > j {
                if let Some(q) = w.below {
                    if c != q {
                        return Err(Error::invalid(format!(
                            "below-diagonal color broken at ({i}, {j})"
                        )));
                    }
                }
            }
        }
    }
    if let Some((ha, hb)) = w.horizontal_colors {
        for (row, h) in [(&w.a_rows, ha), (&w.b_rows, hb)] {
            for x in 0..m {
                for y in x + 1..m {
                    if g.color(row[x], row[y]) != h {
                        return Err(Error::invalid("horizontal clique color broken"));
                    }
                }
            }
        }
    }
    Ok(())
}

struct RowSearch<'a> {
    g: &'a NGraph,
    p: Color,
    m: usize,
    horizontal: Option<(Color, Color)>,
    below: Option<Color>,
}

impl<'a> RowSearch<'a> {
    fn place_a(&self, a: &mut Vec<usize>, used: &mut [bool]) -> Option<(Vec<usize>, Vec<usize>)> {
        if a.len() == self.m {
            let mut b = Vec::with_capacity(self.m);
            return self.place_b(a, &mut b, used);
        }
        for v in 0..self.g.size() {
            if used[v] {
                continue;
            }
            if let Some((ha, _)) = self.horizontal {
                if a.iter().any(|&u| self.g.color(u, v) != ha) {
                    continue;
                }
            }
            a.push(v);
            used[v] = true;
            if let Some(found) = self.place_a(a, used) {
                return Some(found);
            }
            a.pop();
            used[v] = false;
        }
        None
    }

    fn place_b(
        &self,
        a: &[usize],
        b: &mut Vec<usize>,
        used: &mut [bool],
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if b.len() == self.m {
            return Some((a.to_vec(), b.clone()));
        }
        let j = b.len();
        'candidates: for v in 0..self.g.size() {
            if used[v] {
                continue;
            }
            for (i, &u) in a.iter().enumerate() {
                let c = self.g.color(u, v);
                if (c == self.p) != (i <= j) {
                    continue 'candidates;
                }
                if i > j {
                    if let Some(q) = self.below {
                        if c != q {
                            continue 'candidates;
                        }
                    }
                }
            }
            if let Some((_, hb)) = self.horizontal {
                if b.iter().any(|&u| self.g.color(u, v) != hb) {
                    continue;
                }
            }
            b.push(v);
            used[v] = true;
            if let Some(found) = self.place_b(a, b, used) {
                return Some(found);
            }
            b.pop();
            used[v] = false;
        }
        None
    }
}

fn search_half_graph(
    g: &NGraph,
    p: Color,
    m: usize,
    horizontal: Option<(Color, Color)>,
    below: Option<Color>,
    budgets: &Budgets,
) -> Result<Option<HalfGraphWitness>> {
    if m == 0 {
        return Err(Error::invalid("half-graph order must be at least 1"));
    }
    Budgets::check(
        "half-graph order",
        "HALFGRAPH_ORDER",
        m as u64,
        budgets.halfgraph_order,
    )?;
    if p as usize >= g.color_count() {
        return Err(Error::invalid("cross color out of range"));
    }
    if 2 * m > g.size() {
        return Ok(None);
    }
    let search = RowSearch {
        g,
        p,
        m,
        horizontal,
        below,
    };
    let found = search.place_a(&mut Vec::with_capacity(m), &mut vec![false; g.size()]);
    Ok(found.map(|(a_rows, b_rows)| {
        let w = HalfGraphWitness {
            color: p,
            order: m,
            a_rows,
            b_rows,
            horizontal_colors: horizontal,
            below,
        };
        debug_assert!(verify_half_graph(g, &w).is_ok());
        w
    }))
}

/// First half-graph of order `m` for color `p`, optionally with both rows
/// monochromatic cliques in the given colors. Exhaustive at the budget.
pub fn find_half_graph(
    g: &NGraph,
    p: Color,
    m: usize,
    horizontal: Option<(Color, Color)>,
    budgets: &Budgets,
) -> Result<Option<HalfGraphWitness>> {
    search_half_graph(g, p, m, horizontal, None, budgets)
}

/// Half-graph whose below-diagonal pairs all carry `q`: the witness that `p`
/// and `q` are compatible, refined by monochromatic rows when given.
pub fn compatibility_witnesses(
    g: &NGraph,
    p: Color,
    q: Color,
    m: usize,
    horizontal: Option<(Color, Color)>,
    budgets: &Budgets,
) -> Result<Option<HalfGraphWitness>> {
    if p == q {
        return Err(Error::invalid("compatibility needs two distinct colors"));
    }
    search_half_graph(g, p, m, horizontal, Some(q), budgets)
}

/// Largest `m <= cap` admitting a half-graph for `p`. A witness of order `m`
/// contains one of every smaller order (prefix rows), so the scan ascends
/// and stops at the first missing order.
pub fn max_half_graph_order(g: &NGraph, p: Color, cap: usize, budgets: &Budgets) -> Result<usize> {
    Budgets::check(
        "half-graph order",
        "HALFGRAPH_ORDER",
        cap as u64,
        budgets.halfgraph_order,
    )?;
    let cap = cap.min(g.size() / 2);
    for m in 1..=cap {
        if find_half_graph(g, p, m, None, budgets)?.is_none() {
            return Ok(m - 1);
        }
    }
    Ok(cap)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyWitness {
    /// The chosen edges, in the order given.
    pub items: Vec<(usize, usize)>,
    /// Common type of every ordered item pair `(i < j)`: colors of
    /// `(u_i,u_j), (u_i,v_j), (v_i,u_j), (v_i,v_j)`. Absent for one item.
    pub pair_type: Option<[Color; 4]>,
}

fn pair_type(g: &NGraph, e: (usize, usize), f: (usize, usize)) -> [Color; 4] {
    [
        g.color(e.0, f.0),
        g.color(e.0, f.1),
        g.color(e.1, f.0),
        g.color(e.1, f.1),
    ]
}

/// Largest subset of the items whose pairs all induce one type, returned
/// when it has at least `t` items. Items must be pairwise vertex-disjoint
/// edges of a single color. Backtracking in index order; the first maximum
/// found wins.
pub fn ramsey_monochromatic_pairs(
    g: &NGraph,
    items: &[(usize, usize)],
    t: usize,
) -> Result<Option<RamseyWitness>> {
    if t == 0 {
        return Err(Error::invalid("subset size must be at least 1"));
    }
    let mut seen: Vec<usize> = Vec::new();
    for &(u, v) in items {
        if u == v || u >= g.size() || v >= g.size() {
            return Err(Error::invalid(format!("bad edge ({u}, {v})")));
        }
        if seen.contains(&u) || seen.contains(&v) {
            return Err(Error::invalid(format!("edge ({u}, {v}) reuses a vertex")));
        }
        seen.push(u);
        seen.push(v);
    }
    if let Some(&first) = items.first() {
        let c = g.color(first.0, first.1);
        if items.iter().any(|&(u, v)| g.color(u, v) != c) {
            return Err(Error::invalid("items must share one color"));
        }
    }
    if items.len() < t {
        return Ok(None);
    }

    fn grow(
        g: &NGraph,
        items: &[(usize, usize)],
        from: usize,
        chosen: &mut Vec<usize>,
        ty: Option<[Color; 4]>,
        best: &mut Vec<usize>,
        best_ty: &mut Option<[Color; 4]>,
    ) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
            *best_ty = ty;
        }
        for k in from..items.len() {
            if chosen.len() + (items.len() - k) <= best.len() {
                return;
            }
            let mut ty_k = ty;
            let ok = chosen.iter().all(|&i| {
                let t = pair_type(g, items[i], items[k]);
                match ty_k {
                    None => {
                        ty_k = Some(t);
                        true
                    }
                    Some(fixed) => t == fixed,
                }
            });
            if ok {
                chosen.push(k);
                grow(g, items, k + 1, chosen, ty_k, best, best_ty);
                chosen.pop();
            }
        }
    }

    let mut best = Vec::new();
    let mut best_ty = None;
    grow(g, items, 0, &mut Vec::new(), None, &mut best, &mut best_ty);
    if best.len() < t {
        return Ok(None);
    }
    Ok(Some(RamseyWitness {
        items: best.iter().map(|&i| items[i]).collect(),
        pair_type: best_ty,
    }))
}
