//! Per-color metric structure, equivalence detection, quotients, and the
//! decomposition of class pairs.

use std::collections::VecDeque;

use serde::Serialize;

use crate::budget::Budgets;
use crate::error::Error;
use crate::graph::{Color, NGraph};
use crate::Result;

/// BFS distance inside the single-color graph; `None` when unreachable.
pub fn color_distance(g: &NGraph, c: Color, u: usize, v: usize) -> Option<usize> {
    if u == v {
        return Some(0);
    }
    let n = g.size();
    let mut dist = vec![usize::MAX; n];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for y in 0..n {
            if y != x && g.color(x, y) == c && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                if y == v {
                    return Some(dist[y]);
                }
                queue.push_back(y);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentDiameter {
    pub vertices: Vec<usize>,
    pub diameter: usize,
}

/// Connected components of the single-color graph, ordered by least vertex,
/// each with its exact diameter. Isolated vertices form diameter-0
/// components; unreachability across components stays explicit in the
/// component split rather than as a sentinel distance.
pub fn color_diameter(g: &NGraph, c: Color) -> Vec<ComponentDiameter> {
    let n = g.size();
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        comp[start] = id;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for (y, cy) in comp.iter_mut().enumerate() {
                if y != x && *cy == usize::MAX && g.color(x, y) == c {
                    *cy = id;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    comps
        .into_iter()
        .map(|vertices| {
            let mut diameter = 0;
            for &u in &vertices {
                // BFS within the component.
                let mut dist = vec![usize::MAX; n];
                dist[u] = 0;
                let mut queue = VecDeque::from([u]);
                while let Some(x) = queue.pop_front() {
                    for &y in &vertices {
                        if y != x && g.color(x, y) == c && dist[y] == usize::MAX {
                            dist[y] = dist[x] + 1;
                            diameter = diameter.max(dist[y]);
                            queue.push_back(y);
                        }
                    }
                }
            }
            ComponentDiameter { vertices, diameter }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    /// Color subset whose union was tested, ascending.
    pub colors: Vec<Color>,
    pub is_equivalence: bool,
    /// Classes ordered by least vertex; empty when not an equivalence.
    pub classes: Vec<Vec<usize>>,
    /// First triple `(a, b, c)` with `a~b`, `b~c` but not `a~c`.
    pub witness: Option<(usize, usize, usize)>,
}

fn related(g: &NGraph, mask: u32, u: usize, v: usize) -> bool {
    mask >> g.color(u, v) & 1 == 1
}

/// Triple `(a, b, c)` with `a~b`, `b~c` but not `a~c`.
type TransitivityWitness = (usize, usize, usize);

fn check_equivalence(g: &NGraph, mask: u32) -> (Option<TransitivityWitness>, Vec<Vec<usize>>) {
    let n = g.size();
    // A symmetric irreflexive relation is transitive iff no triple has
    // exactly two related pairs.
    for i in 0..n {
        for j in i + 1..n {
            let ij = related(g, mask, i, j);
            for k in j + 1..n {
                let ik = related(g, mask, i, k);
                let jk = related(g, mask, j, k);
                let witness = match (ij, ik, jk) {
                    (true, false, true) => Some((i, j, k)),
                    (true, true, false) => Some((j, i, k)),
                    (false, true, true) => Some((i, k, j)),
                    _ => None,
                };
                if let Some(w) = witness {
                    return (Some(w), Vec::new());
                }
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![start];
        comp[start] = id;
        for (v, cv) in comp.iter_mut().enumerate().skip(start + 1) {
            if *cv == usize::MAX && related(g, mask, start, v) {
                *cv = id;
                members.push(v);
            }
        }
        classes.push(members);
    }
    (None, classes)
}

/// Tests every nonempty proper subset of the colors, in ascending bitmask
/// order, for whether its union (plus equality) is an equivalence relation.
pub fn detect_equivalences(g: &NGraph) -> Vec<EquivalenceReport> {
    let n = g.color_count() as u32;
    let full: u32 = (1 << n) - 1;
    let mut out = Vec::new();
    for mask in 1..full {
        let colors: Vec<Color> = (0..n as Color).filter(|c| mask >> c & 1 == 1).collect();
        let (witness, classes) = check_equivalence(g, mask);
        out.push(EquivalenceReport {
            colors,
            is_equivalence: witness.is_none(),
            classes,
            witness,
        });
    }
    out
}

/// Equivalence reports that hold, ascending by color mask.
pub fn equivalences(g: &NGraph) -> Vec<EquivalenceReport> {
    detect_equivalences(g)
        .into_iter()
        .filter(|r| r.is_equivalence)
        .collect()
}

fn colors_to_mask(g: &NGraph, colors: &[Color]) -> Result<u32> {
    let n = g.color_count();
    if colors.is_empty() || colors.len() >= n {
        return Err(Error::invalid(
            "quotient colors must be a nonempty proper subset",
        ));
    }
    let mut mask = 0u32;
    for &c in colors {
        if c as usize >= n {
            return Err(Error::invalid(format!("color {c} out of range")));
        }
        if mask >> c & 1 == 1 {
            return Err(Error::invalid(format!("duplicate color {c}")));
        }
        mask |= 1 << c;
    }
    Ok(mask)
}

/// Cross-color table of the class pairs, or the offending pair when some
/// pair realizes more than one color.
fn cross_colors(
    g: &NGraph,
    colors: &[Color],
    classes: &[Vec<usize>],
    proj: &[usize],
) -> Result<Vec<Vec<Option<Color>>>> {
    let mut cross: Vec<Vec<Option<Color>>> = vec![vec![None; classes.len()]; classes.len()];
    for u in 0..g.size() {
        for v in u + 1..g.size() {
            let (a, b) = (proj[u], proj[v]);
            if a == b {
                continue;
            }
            let c = g.color(u, v);
            match cross[a][b] {
                None => {
                    cross[a][b] = Some(c);
                    cross[b][a] = Some(c);
                }
                Some(prev) if prev != c => {
                    return Err(Error::NotQuotientable {
                        colors: colors.to_vec(),
                        classes: (a.min(b), a.max(b)),
                        seen: vec![prev.min(c), prev.max(c)],
                    });
                }
                _ => {}
            }
        }
    }
    Ok(cross)
}

fn quotient_impl(
    g: &NGraph,
    colors: &[Color],
    keep_signature: bool,
) -> Result<(NGraph, Vec<usize>)> {
    let mask = colors_to_mask(g, colors)?;
    let (witness, classes) = check_equivalence(g, mask);
    if let Some(w) = witness {
        return Err(Error::NotAnEquivalence {
            colors: colors.to_vec(),
            witness: w,
        });
    }
    let mut proj = vec![usize::MAX; g.size()];
    for (id, class) in classes.iter().enumerate() {
        for &v in class {
            proj[v] = id;
        }
    }
    let cross = cross_colors(g, colors, &classes, &proj)?;

    let q = if keep_signature {
        let names: Vec<&str> = g.color_names().iter().map(|s| s.as_str()).collect();
        NGraph::from_fn(&names, classes.len(), |a, b| {
            cross[a][b].expect("distinct classes meet")
        })?
    } else {
        let remaining: Vec<Color> = (0..g.color_count() as Color)
            .filter(|&c| mask >> c & 1 == 0)
            .collect();
        if remaining.len() < 2 {
            return Err(Error::invalid(
                "quotient needs at least two remaining colors",
            ));
        }
        let mut rank = vec![Color::MAX; g.color_count()];
        for (k, &c) in remaining.iter().enumerate() {
            rank[c as usize] = k as Color;
        }
        let names: Vec<&str> = remaining.iter().map(|&c| g.color_name(c)).collect();
        NGraph::from_fn(&names, classes.len(), |a, b| {
            rank[cross[a][b].expect("distinct classes meet") as usize]
        })?
    };
    Ok((q, proj))
}

/// Collapses the classes of the equivalence generated by `colors`. The
/// result is a graph over the remaining colors (in their original order,
/// reindexed from 0) on the classes (ordered by least vertex), together
/// with the projection from vertices to class indices. At least two colors
/// must remain.
///
/// Errors: the union is not an equivalence (with a witness triple), or some
/// class pair realizes more than one color across (with the pair and the
/// colors seen).
pub fn quotient(g: &NGraph, colors: &[Color]) -> Result<(NGraph, Vec<usize>)> {
    quotient_impl(g, colors, false)
}

/// Like [`quotient`] but the result keeps the full signature of `g`, with
/// the collapsed colors simply unrealized. Collapsing all the way down to a
/// single remaining color is then representable.
pub fn quotient_keeping_signature(g: &NGraph, colors: &[Color]) -> Result<(NGraph, Vec<usize>)> {
    quotient_impl(g, colors, true)
}

/// The `c`-neighborhood of `a`: the neighbor set (ascending) and the graph
/// it induces.
pub fn neighborhood(g: &NGraph, c: Color, a: usize) -> Result<(Vec<usize>, NGraph)> {
    if a >= g.size() {
        return Err(Error::invalid(format!("vertex {a} out of range")));
    }
    let verts = g.neighbors(c, a);
    let induced = g.induced(&verts)?;
    Ok((verts, induced))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairType {
    /// No cross pair carries the probe color.
    Null,
    /// Every cross pair carries the probe color.
    Complete,
    /// Probe edges form a perfect matching between the classes.
    Matching,
    /// Probe edges split the classes into two complete `r x r` blocks.
    TwoMatchings,
    /// Several colors cross with no block structure.
    RandomLike,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairBlocks {
    /// `(A_i, B_i)` with every `A_i x B_i` pair in the probe color and no
    /// probe pair between different blocks.
    pub blocks: [(Vec<usize>, Vec<usize>); 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairClassReport {
    pub class_a: usize,
    pub class_b: usize,
    pub s_color: Color,
    /// Colors appearing on cross pairs, ascending.
    pub colors_realized: Vec<Color>,
    /// Probe-color degree into the other class, when constant on both sides.
    pub r: Option<usize>,
    pub pair_type: PairType,
    pub partition: Option<PairBlocks>,
}

/// Decomposes the probe-color bipartite graph between two classes of an
/// equivalence: null/complete, a perfect matching, the two-block `r x r`
/// decomposition (found via connected components), or random-like when both
/// remaining colors cross without block structure.
pub fn pair_class_analysis(
    g: &NGraph,
    report: &EquivalenceReport,
    class_a: usize,
    class_b: usize,
    s_color: Color,
) -> Result<PairClassReport> {
    if !report.is_equivalence {
        return Err(Error::invalid("pair analysis needs an equivalence report"));
    }
    if class_a == class_b || class_a >= report.classes.len() || class_b >= report.classes.len() {
        return Err(Error::invalid("bad class indices"));
    }
    if s_color as usize >= g.color_count() {
        return Err(Error::invalid("probe color out of range"));
    }
    let a = &report.classes[class_a];
    let b = &report.classes[class_b];

    let mut colors_realized: Vec<Color> = Vec::new();
    let mut partners_a: Vec<Vec<usize>> = vec![Vec::new(); a.len()];
    let mut partners_b: Vec<Vec<usize>> = vec![Vec::new(); b.len()];
    for (ia, &u) in a.iter().enumerate() {
        for (ib, &v) in b.iter().enumerate() {
            let c = g.color(u, v);
            if !colors_realized.contains(&c) {
                colors_realized.push(c);
            }
            if c == s_color {
                partners_a[ia].push(ib);
                partners_b[ib].push(ia);
            }
        }
    }
    colors_realized.sort_unstable();

    let total: usize = partners_a.iter().map(|p| p.len()).sum();
    let deg_a = partners_a[0].len();
    let deg_b = partners_b[0].len();
    let r = if partners_a.iter().all(|p| p.len() == deg_a)
        && partners_b.iter().all(|p| p.len() == deg_b)
        && deg_a == deg_b
    {
        Some(deg_a)
    } else {
        None
    };

    let done = |pair_type, partition| {
        Ok(PairClassReport {
            class_a,
            class_b,
            s_color,
            colors_realized: colors_realized.clone(),
            r,
            pair_type,
            partition,
        })
    };

    if total == 0 {
        return done(PairType::Null, None);
    }
    if total == a.len() * b.len() {
        return done(PairType::Complete, None);
    }

    if let Some(blocks) = two_block_decomposition(a, b, &partners_a) {
        return done(PairType::TwoMatchings, Some(blocks));
    }
    if r == Some(1) && a.len() == b.len() {
        return done(PairType::Matching, None);
    }
    if colors_realized.len() >= 2 {
        return done(PairType::RandomLike, None);
    }
    done(PairType::Other, None)
}

/// Components of the probe bipartite graph; accepts exactly two complete
/// `r x r` components that exhaust both classes.
fn two_block_decomposition(
    a: &[usize],
    b: &[usize],
    partners_a: &[Vec<usize>],
) -> Option<PairBlocks> {
    let mut comp_a = vec![usize::MAX; a.len()];
    let mut comp_b = vec![usize::MAX; b.len()];
    let mut blocks: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for start in 0..a.len() {
        if comp_a[start] != usize::MAX || partners_a[start].is_empty() {
            continue;
        }
        let id = blocks.len();
        let mut side_a = Vec::new();
        let mut side_b = Vec::new();
        let mut stack = vec![(true, start)];
        comp_a[start] = id;
        while let Some((in_a, x)) = stack.pop() {
            if in_a {
                side_a.push(x);
                for &y in &partners_a[x] {
                    if comp_b[y] == usize::MAX {
                        comp_b[y] = id;
                        stack.push((false, y));
                    }
                }
            } else {
                side_b.push(x);
                for (z, partners) in partners_a.iter().enumerate() {
                    if partners.contains(&x) && comp_a[z] == usize::MAX {
                        comp_a[z] = id;
                        stack.push((true, z));
                    }
                }
            }
        }
        side_a.sort_unstable();
        side_b.sort_unstable();
        blocks.push((side_a, side_b));
    }
    if blocks.len() != 2 {
        return None;
    }
    let covered_a: usize = blocks.iter().map(|(sa, _)| sa.len()).sum();
    let covered_b: usize = blocks.iter().map(|(_, sb)| sb.len()).sum();
    if covered_a != a.len() || covered_b != b.len() {
        return None;
    }
    let r0 = blocks[0].0.len();
    for (sa, sb) in &blocks {
        if sa.len() != r0 || sb.len() != r0 {
            return None;
        }
        // Complete bipartite inside the block.
        for &x in sa {
            if partners_a[x].len() != sb.len() || !sb.iter().all(|y| partners_a[x].contains(y)) {
                return None;
            }
        }
    }
    let to_verts = |side: &[usize], base: &[usize]| side.iter().map(|&i| base[i]).collect();
    Some(PairBlocks {
        blocks: [
            (to_verts(&blocks[0].0, a), to_verts(&blocks[0].1, b)),
            (to_verts(&blocks[1].0, a), to_verts(&blocks[1].1, b)),
        ],
    })
}

/// Exact maximum clique of the color-`c` graph induced on `region`, by
/// branch and bound in ascending vertex order. Returns the first maximum
/// found, sorted.
pub fn max_clique_in(
    g: &NGraph,
    region: &[usize],
    c: Color,
    budgets: &Budgets,
) -> Result<Vec<usize>> {
    Budgets::check(
        "clique search region",
        "CLIQUE_REGION",
        region.len() as u64,
        budgets.clique_region,
    )?;
    for (k, &v) in region.iter().enumerate() {
        if v >= g.size() {
            return Err(Error::invalid(format!("vertex {v} out of range")));
        }
        if region[..k].contains(&v) {
            return Err(Error::invalid(format!("duplicate vertex {v}")));
        }
    }
    let mut region = region.to_vec();
    region.sort_unstable();

    fn grow(
        g: &NGraph,
        c: Color,
        current: &mut Vec<usize>,
        candidates: &[usize],
        best: &mut Vec<usize>,
    ) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        for (k, &v) in candidates.iter().enumerate() {
            if current.len() + (candidates.len() - k) <= best.len() {
                return;
            }
            let next: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&u| g.color(u, v) == c)
                .collect();
            current.push(v);
            grow(g, c, current, &next, best);
            current.pop();
        }
    }

    let mut best = Vec::new();
    grow(g, c, &mut Vec::new(), &region, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{class_generic, clique_wreath, quotient_random, RST};

    fn path_p3() -> NGraph {
        NGraph::from_matrix(&["R", "S"], 3, vec![0, 1, 0]).unwrap()
    }

    #[test]
    fn distances_on_a_path() {
        let g = path_p3();
        assert_eq!(color_distance(&g, 0, 0, 2), Some(2));
        assert_eq!(color_distance(&g, 0, 0, 1), Some(1));
        assert_eq!(color_distance(&g, 1, 0, 1), None);
        assert_eq!(color_distance(&g, 1, 1, 1), Some(0));
    }

    #[test]
    fn diameter_components_split_correctly() {
        let g = path_p3();
        let comps = color_diameter(&g, 0);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].diameter, 2);
        let comps = color_diameter(&g, 1);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vec![0, 2]);
        assert_eq!(comps[0].diameter, 1);
        assert_eq!(comps[1].vertices, vec![1]);
        assert_eq!(comps[1].diameter, 0);
    }

    #[test]
    fn equivalence_detection_on_blocks() {
        let g = quotient_random(3, 2, 5).unwrap();
        let reports = detect_equivalences(&g);
        assert_eq!(reports.len(), 6);
        let r_only = &reports[0];
        assert_eq!(r_only.colors, vec![0]);
        assert!(r_only.is_equivalence);
        assert_eq!(r_only.classes.len(), 3);
        assert!(r_only.classes.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn transitivity_witness_is_a_real_violation() {
        let g = path_p3();
        let report = &detect_equivalences(&g)[0];
        assert!(!report.is_equivalence);
        let (a, b, c) = report.witness.unwrap();
        assert_eq!(g.color(a, b), 0);
        assert_eq!(g.color(b, c), 0);
        assert_ne!(g.color(a, c), 0);
    }

    #[test]
    fn quotient_collapses_blocks() {
        let g = quotient_random(4, 3, 9).unwrap();
        let (q, proj) = quotient(&g, &[0]).unwrap();
        assert_eq!(q.size(), 4);
        assert_eq!(q.color_names(), &["S".to_string(), "T".to_string()]);
        for u in 0..g.size() {
            for v in u + 1..g.size() {
                if proj[u] != proj[v] {
                    let cross = q.color(proj[u], proj[v]);
                    let orig = g.color(u, v);
                    assert_eq!(q.color_name(cross), g.color_name(orig));
                }
            }
        }
    }

    #[test]
    fn quotient_rejects_mixed_class_pairs() {
        let mut bad = quotient_random(2, 2, 0).unwrap();
        let cross = bad.color(0, 2);
        let flip = if cross == 1 { 2 } else { 1 };
        bad.set_color(0, 3, flip);
        match quotient(&bad, &[0]) {
            Err(Error::NotQuotientable { classes, seen, .. }) => {
                assert_eq!(classes, (0, 1));
                assert_eq!(seen, vec![1, 2]);
            }
            other => panic!("expected NotQuotientable, got {other:?}"),
        }
    }

    #[test]
    fn quotient_to_single_color_needs_full_signature() {
        let g = class_generic(2, 3, 4).unwrap();
        // Collapsing {S,T} leaves one color: representable only when the
        // signature is kept.
        assert!(matches!(quotient(&g, &[1, 2]), Err(Error::Invalid(_))));
        let (q, _) = quotient_keeping_signature(&g, &[1, 2]).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(q.color_counts(), vec![1, 0, 0]);
    }

    #[test]
    fn quotient_reports_transitivity_witness() {
        let g = path_p3();
        match quotient(&g, &[0]) {
            Err(Error::NotAnEquivalence { witness, .. }) => {
                assert_eq!(witness, (0, 1, 2));
            }
            other => panic!("expected NotAnEquivalence, got {other:?}"),
        }
    }

    #[test]
    fn neighborhood_returns_induced_graph() {
        let g = clique_wreath(&RST, &[(2, 1), (3, 0)]).unwrap();
        let (verts, sub) = neighborhood(&g, 0, 0).unwrap();
        assert_eq!(verts, vec![1, 2]);
        assert_eq!(sub.color_counts(), vec![1, 0, 0]);
    }

    #[test]
    fn pair_analysis_complete_and_null() {
        let g = quotient_random(2, 3, 1).unwrap();
        let report = detect_equivalences(&g).into_iter().next().unwrap();
        let cross = g.color(0, 3);
        let complete = pair_class_analysis(&g, &report, 0, 1, cross).unwrap();
        assert_eq!(complete.pair_type, PairType::Complete);
        assert_eq!(complete.r, Some(3));
        let other = if cross == 1 { 2 } else { 1 };
        let null = pair_class_analysis(&g, &report, 0, 1, other).unwrap();
        assert_eq!(null.pair_type, PairType::Null);
        assert_eq!(null.r, Some(0));
    }

    #[test]
    fn pair_analysis_finds_two_blocks() {
        // Two classes {0,1,2,3} and {4,5,6,7}; S joins {0,1}x{4,5} and
        // {2,3}x{6,7}; T elsewhere across.
        let g = NGraph::from_fn(&RST, 8, |i, j| {
            let (a, b) = (i.min(j), i.max(j));
            if a / 4 == b / 4 {
                0
            } else if (a < 2 && (4..6).contains(&b)) || ((2..4).contains(&a) && b >= 6) {
                1
            } else {
                2
            }
        })
        .unwrap();
        let report = detect_equivalences(&g).into_iter().next().unwrap();
        assert!(report.is_equivalence);
        let pair = pair_class_analysis(&g, &report, 0, 1, 1).unwrap();
        assert_eq!(pair.pair_type, PairType::TwoMatchings);
        assert_eq!(pair.r, Some(2));
        let blocks = pair.partition.unwrap().blocks;
        assert_eq!(blocks[0].0, vec![0, 1]);
        assert_eq!(blocks[0].1, vec![4, 5]);
        assert_eq!(blocks[1].0, vec![2, 3]);
        assert_eq!(blocks[1].1, vec![6, 7]);
    }

    #[test]
    fn pair_analysis_matching() {
        // Perfect matching in S between two 3-classes, T elsewhere.
        let g = NGraph::from_fn(&RST, 6, |i, j| {
            let (a, b) = (i.min(j), i.max(j));
            if a / 3 == b / 3 {
                0
            } else if b == a + 3 {
                1
            } else {
                2
            }
        })
        .unwrap();
        let report = detect_equivalences(&g).into_iter().next().unwrap();
        let pair = pair_class_analysis(&g, &report, 0, 1, 1).unwrap();
        assert_eq!(pair.pair_type, PairType::Matching);
        assert_eq!(pair.r, Some(1));
    }

    #[test]
    fn max_clique_exact_on_known_graph() {
        // R-triangle {0,1,2} plus vertex 3 attached by R only to 2.
        let g = NGraph::from_fn(&["R", "S"], 4, |i, j| {
            if (i, j) == (2, 3) || (j < 3 && i < 3) {
                0
            } else {
                1
            }
        })
        .unwrap();
        let clique = max_clique_in(&g, &[0, 1, 2, 3], 0, &Budgets::default()).unwrap();
        assert_eq!(clique, vec![0, 1, 2]);
        let region = max_clique_in(&g, &[2, 3], 0, &Budgets::default()).unwrap();
        assert_eq!(region, vec![2, 3]);
    }
}
