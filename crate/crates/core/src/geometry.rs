//! Line spaces of a single color: extraction, the semilinearity axioms,
//! line-triangle freeness, and quadrangle counts.
//!
//! A line through a `c`-edge is the unique maximal `c`-clique containing it.
//! Extraction closes each edge under common `c`-neighbors; when that closure
//! is not a clique the edge lies in two distinct maximal cliques and the
//! space is rejected.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::analysis::color_distance;
use crate::error::Error;
use crate::graph::{Color, NGraph};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineSpace {
    /// Color whose edges the lines cover.
    pub color: Color,
    pub vertex_count: usize,
    /// Each line ascending; lines in lexicographic order.
    pub lines: Vec<Vec<usize>>,
    /// For each vertex, indices into `lines` of the lines through it.
    pub incidence: Vec<Vec<usize>>,
}

impl LineSpace {
    /// Builds a space from explicit lines, for synthetic inputs. Lines are
    /// sorted and deduplicated; every line needs at least two distinct
    /// in-range points.
    pub fn from_lines(
        color: Color,
        vertex_count: usize,
        lines: &[Vec<usize>],
    ) -> Result<LineSpace> {
        let mut normalized: BTreeSet<Vec<usize>> = BTreeSet::new();
        for line in lines {
            let mut l = line.clone();
            l.sort_unstable();
            l.dedup();
            if l.len() != line.len() || l.len() < 2 {
                return Err(Error::invalid("a line needs at least two distinct points"));
            }
            if l.iter().any(|&v| v >= vertex_count) {
                return Err(Error::invalid("line point out of range"));
            }
            normalized.insert(l);
        }
        let lines: Vec<Vec<usize>> = normalized.into_iter().collect();
        let incidence = build_incidence(vertex_count, &lines);
        Ok(LineSpace {
            color,
            vertex_count,
            lines,
            incidence,
        })
    }
}

fn build_incidence(vertex_count: usize, lines: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut incidence = vec![Vec::new(); vertex_count];
    for (i, line) in lines.iter().enumerate() {
        for &v in line {
            incidence[v].push(i);
        }
    }
    incidence
}

fn is_clique(g: &NGraph, c: Color, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.color(u, v) == c))
}

/// Grows `seed` to a maximal `c`-clique by ascending vertex scan.
fn greedy_maximal_clique(g: &NGraph, c: Color, seed: &[usize]) -> Vec<usize> {
    let mut clique = seed.to_vec();
    for v in 0..g.size() {
        if !clique.contains(&v) && clique.iter().all(|&u| g.color(u, v) == c) {
            clique.push(v);
        }
    }
    clique.sort_unstable();
    clique
}

/// The line space of color `c`: every `c`-edge must lie in a unique maximal
/// `c`-clique. The closure of an edge under common `c`-neighbors contains
/// every clique through the edge, so the closure is that unique clique
/// exactly when it is itself a clique; otherwise two distinct maximal
/// cliques through the edge are returned as the rejection witness.
pub fn extract_lines(g: &NGraph, c: Color) -> Result<LineSpace> {
    if c as usize >= g.color_count() {
        return Err(Error::invalid("line color out of range"));
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in 0..g.size() {
        for b in a + 1..g.size() {
            if g.color(a, b) != c {
                continue;
            }
            let mut closure = vec![a, b];
            closure.extend(
                (0..g.size())
                    .filter(|&v| v != a && v != b && g.color(v, a) == c && g.color(v, b) == c),
            );
            closure.sort_unstable();
            if !is_clique(g, c, &closure) {
                let bad = closure
                    .iter()
                    .enumerate()
                    .find_map(|(i, &u)| {
                        closure[i + 1..]
                            .iter()
                            .find(|&&v| g.color(u, v) != c)
                            .map(|&v| (u, v))
                    })
                    .expect("closure is not a clique");
                return Err(Error::NotSemilinear {
                    color: c,
                    edge: (a, b),
                    cliques: (
                        greedy_maximal_clique(g, c, &[a, b, bad.0]),
                        greedy_maximal_clique(g, c, &[a, b, bad.1]),
                    ),
                });
            }
            seen.insert(closure);
        }
    }
    let lines: Vec<Vec<usize>> = seen.into_iter().collect();
    let incidence = build_incidence(g.size(), &lines);
    Ok(LineSpace {
        color: c,
        vertex_count: g.size(),
        lines,
        incidence,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemilinearReport {
    pub holds: bool,
    /// Two line indices sharing the two named points.
    pub shared_pair: Option<(usize, usize, (usize, usize))>,
    /// Index of a line with fewer than three points.
    pub short_line: Option<usize>,
}

/// The two semilinearity axioms: two points lie on at most one common line,
/// and every line has at least three points.
pub fn check_semilinear(space: &LineSpace) -> SemilinearReport {
    let mut shared_pair = None;
    'outer: for i in 0..space.lines.len() {
        for j in i + 1..space.lines.len() {
            let common: Vec<usize> = space.lines[i]
                .iter()
                .filter(|v| space.lines[j].contains(v))
                .copied()
                .collect();
            if common.len() >= 2 {
                shared_pair = Some((i, j, (common[0], common[1])));
                break 'outer;
            }
        }
    }
    let short_line = space.lines.iter().position(|l| l.len() < 3);
    SemilinearReport {
        holds: shared_pair.is_none() && short_line.is_none(),
        shared_pair,
        short_line,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleFreenessReport {
    pub holds: bool,
    /// `(a, line index, d)`: `d` at `c`-distance 2 from `a` sees two points
    /// of a line through `a`.
    pub witness: Option<(usize, usize, usize)>,
}

/// No line triangles: a vertex at `c`-distance 2 from a point of a line is
/// `c`-joined to at most one point of that line.
pub fn triangle_freeness(g: &NGraph, space: &LineSpace) -> Result<TriangleFreenessReport> {
    if space.vertex_count != g.size() {
        return Err(Error::invalid("space and graph sizes disagree"));
    }
    let c = space.color;
    for a in 0..g.size() {
        for &li in &space.incidence[a] {
            let line = &space.lines[li];
            for d in 0..g.size() {
                if color_distance(g, c, a, d) != Some(2) {
                    continue;
                }
                let seen = line.iter().filter(|&&y| g.color(d, y) == c).count();
                if seen >= 2 {
                    return Ok(TriangleFreenessReport {
                        holds: false,
                        witness: Some((a, li, d)),
                    });
                }
            }
        }
    }
    Ok(TriangleFreenessReport {
        holds: true,
        witness: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadrangleProfile {
    /// Line size -> number of lines.
    pub points_per_line: BTreeMap<usize, usize>,
    /// Lines through a vertex -> number of vertices.
    pub lines_per_point: BTreeMap<usize, usize>,
    /// For each non-incident (point, line) pair, the number of points on the
    /// line collinear with the point -> number of such pairs.
    pub collinear_counts: BTreeMap<usize, usize>,
    /// Every non-incident pair sees exactly one collinear point, and at
    /// least one such pair exists.
    pub gq_like: bool,
}

/// Incidence histograms and the generalized-quadrangle regularity check.
/// Two points are collinear when some line contains both.
pub fn quadrangle_profile(space: &LineSpace) -> QuadrangleProfile {
    let mut points_per_line = BTreeMap::new();
    for line in &space.lines {
        *points_per_line.entry(line.len()).or_insert(0) += 1;
    }
    let mut lines_per_point = BTreeMap::new();
    for inc in &space.incidence {
        *lines_per_point.entry(inc.len()).or_insert(0) += 1;
    }
    let collinear = |x: usize, y: usize| {
        space.incidence[x]
            .iter()
            .any(|li| space.lines[*li].contains(&y))
    };
    let mut collinear_counts = BTreeMap::new();
    for x in 0..space.vertex_count {
        for (li, line) in space.lines.iter().enumerate() {
            if space.incidence[x].contains(&li) {
                continue;
            }
            let count = line.iter().filter(|&&y| collinear(x, y)).count();
            *collinear_counts.entry(count).or_insert(0) += 1;
        }
    }
    let gq_like = !collinear_counts.is_empty() && collinear_counts.keys().all(|&k| k == 1);
    QuadrangleProfile {
        points_per_line,
        lines_per_point,
        collinear_counts,
        gq_like,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{clique_wreath, product, rook_q, RST};

    #[test]
    fn wreath_copies_become_lines() {
        // Two disjoint R-cliques of size 4 joined by S.
        let g = clique_wreath(&RST, &[(2, 1), (4, 0)]).unwrap();
        let space = extract_lines(&g, 0).unwrap();
        assert_eq!(space.lines, vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
        assert!(check_semilinear(&space).holds);
        assert!(triangle_freeness(&g, &space).unwrap().holds);
        let edges: usize = space
            .lines
            .iter()
            .map(|l| l.len() * (l.len() - 1) / 2)
            .sum();
        assert_eq!(edges as u64, g.color_counts()[0]);
    }

    #[test]
    fn product_columns_become_lines() {
        let g = product(3, 4, 0, 1, 2).unwrap();
        let space = extract_lines(&g, 0).unwrap();
        assert_eq!(space.lines.len(), 4);
        assert!(space.lines.iter().all(|l| l.len() == 3));
        assert!(check_semilinear(&space).holds);
        assert!(space.incidence.iter().all(|inc| inc.len() == 1));
    }

    #[test]
    fn shared_edge_is_rejected() {
        // Two R-triangles sharing the edge (1, 2).
        let g = NGraph::from_fn(&["R", "S"], 4, |u, v| {
            let e = (u.min(v), u.max(v));
            if e == (0, 3) {
                1
            } else {
                0
            }
        })
        .unwrap();
        match extract_lines(&g, 0) {
            Err(Error::NotSemilinear {
                color: 0,
                edge,
                cliques,
            }) => {
                assert_eq!(edge, (1, 2));
                assert_ne!(cliques.0, cliques.1);
                assert!(cliques.0.contains(&1) && cliques.0.contains(&2));
                assert!(cliques.1.contains(&1) && cliques.1.contains(&2));
            }
            other => panic!("expected a semilinearity rejection, got {other:?}"),
        }
    }

    #[test]
    fn short_lines_fail_the_axioms() {
        let space = LineSpace::from_lines(0, 4, &[vec![0, 1, 2], vec![2, 3]]).unwrap();
        let report = check_semilinear(&space);
        assert!(!report.holds);
        assert_eq!(report.short_line, Some(1));
    }

    #[test]
    fn injected_line_triangle_is_caught() {
        // Line {0,1,2} plus a vertex 3 seeing 1 and 2 but not 0.
        let g = NGraph::from_fn(&["R", "S"], 4, |u, v| {
            let e = (u.min(v), u.max(v));
            if e == (0, 3) {
                1
            } else {
                0
            }
        })
        .unwrap();
        let space = LineSpace::from_lines(0, 4, &[vec![0, 1, 2], vec![1, 3], vec![2, 3]]).unwrap();
        let report = triangle_freeness(&g, &space).unwrap();
        assert!(!report.holds);
        assert_eq!(report.witness, Some((0, 0, 3)));
    }

    #[test]
    fn rook_lines_are_quadrangle_regular() {
        // Rows and columns of the 3x3 rook grid in the line color.
        let g = rook_q(0).unwrap();
        let space = extract_lines(&g, 1).unwrap();
        assert_eq!(space.lines.len(), 6);
        let profile = quadrangle_profile(&space);
        assert_eq!(profile.points_per_line, BTreeMap::from([(3, 6)]));
        assert_eq!(profile.lines_per_point, BTreeMap::from([(2, 9)]));
        assert!(profile.gq_like);
    }
}
