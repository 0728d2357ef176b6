//! Generators for the structured families the diagnostics target.
//!
//! Deterministic constructions: wreath compositions `g[h]`, clique products
//! `K_m x K_n`, the 5-vertex pentagon pair and the 9-vertex rook pair,
//! complete multipartite 2-graphs. Randomized constructions draw every bit
//! from a [`SplitMix64`] stream seeded by the caller: uniform colorings,
//! covers of a random base graph, block graphs with random interiors or
//! random quotients. Identical parameters and seed give identical graphs.
//!
//! Vertex indexing is part of each construction's contract and is documented
//! per function; tests and the classifier rely on it.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{pair_index, Color, NGraph};
use crate::rng::SplitMix64;
use crate::Result;

/// Default 3-color signature.
pub const RST: [&str; 3] = ["R", "S", "T"];

/// A serializable recipe: generator kind, integer parameters, seed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub kind: String,
    #[serde(default)]
    pub params: serde_json::Map<String, serde_json::Value>,
    #[serde(default)]
    pub seed: u64,
}

impl GeneratorSpec {
    fn param(&self, name: &str) -> Result<u64> {
        self.params
            .get(name)
            .and_then(|v| v.as_u64())
            .ok_or_else(|| {
                Error::invalid(format!("generator {:?} needs integer {name}", self.kind))
            })
    }

    fn param_or(&self, name: &str, default: u64) -> Result<u64> {
        match self.params.get(name) {
            None => Ok(default),
            Some(v) => v
                .as_u64()
                .ok_or_else(|| Error::invalid(format!("parameter {name} must be an integer"))),
        }
    }

    /// Builds the described graph. Kinds and parameters:
    ///
    /// - `wreath`: `layers` = flat list `[size, color, size, color, ...]`,
    ///   outermost first; builds the nested clique composition.
    /// - `product`: `m`, `n`, optional colors `i`, `j`, `k` (default 0,1,2).
    /// - `pentagon`: optional `spare` (default 0).
    /// - `rook`: optional `spare` (default 0).
    /// - `multipartite`: `m` parts of size `n`; optional `within`/`across`
    ///   colors (default 0/1) over a 2-color signature.
    /// - `random`: `v` vertices, optional `colors` (default 3).
    /// - `cover`: `classes`; cover of a random base graph.
    /// - `class_random`: `classes`, `class_size`, optional `eq_color`.
    /// - `quotient_random`: `classes`, `class_size`.
    /// - `class_generic`: `m`, `class_size`.
    pub fn build(&self) -> Result<NGraph> {
        match self.kind.as_str() {
            "wreath" => {
                let layers = self
                    .params
                    .get("layers")
                    .and_then(|v| v.as_array())
                    .ok_or_else(|| Error::invalid("wreath needs a layers array"))?;
                let flat: Option<Vec<u64>> = layers.iter().map(|v| v.as_u64()).collect();
                let flat = flat.ok_or_else(|| Error::invalid("layers must be integers"))?;
                if flat.len() % 2 != 0 || flat.is_empty() {
                    return Err(Error::invalid("layers must be (size, color) pairs"));
                }
                let pairs: Vec<(usize, Color)> = flat
                    .chunks(2)
                    .map(|c| (c[0] as usize, c[1] as Color))
                    .collect();
                clique_wreath(&RST, &pairs)
            }
            "product" => {
                let m = self.param("m")? as usize;
                let n = self.param("n")? as usize;
                let i = self.param_or("i", 0)? as Color;
                let j = self.param_or("j", 1)? as Color;
                let k = self.param_or("k", 2)? as Color;
                product(m, n, i, j, k)
            }
            "pentagon" => pentagon_p(self.param_or("spare", 0)? as Color),
            "rook" => rook_q(self.param_or("spare", 0)? as Color),
            "multipartite" => {
                let m = self.param("m")? as usize;
                let n = self.param("n")? as usize;
                let within = self.param_or("within", 0)? as Color;
                let across = self.param_or("across", 1)? as Color;
                multipartite(m, n, within, across)
            }
            "random" => {
                let v = self.param("v")? as usize;
                let colors = self.param_or("colors", 3)? as usize;
                random_ngraph(v, colors, self.seed)
            }
            "cover" => cover_cgamma(self.seed, self.param("classes")? as usize),
            "class_random" => class_random(
                self.param("classes")? as usize,
                self.param("class_size")? as usize,
                self.param_or("eq_color", 0)? as Color,
                self.seed,
            ),
            "quotient_random" => quotient_random(
                self.param("classes")? as usize,
                self.param("class_size")? as usize,
                self.seed,
            ),
            "class_generic" => class_generic(
                self.param("m")? as usize,
                self.param("class_size")? as usize,
                self.seed,
            ),
            other => Err(Error::invalid(format!("unknown generator kind {other:?}"))),
        }
    }
}

/// Wreath composition `g[h]`: vertex `(a, b)` is index `a*h.size() + b`;
/// pairs inside a copy take `h`'s color, pairs across copies take `g`'s
/// color on the copy indices. Signatures must match.
pub fn wreath(g: &NGraph, h: &NGraph) -> Result<NGraph> {
    if !g.same_signature(h) {
        return Err(Error::SignatureMismatch {
            left: g.signature(),
            right: h.signature(),
        });
    }
    let hs = h.size();
    let names: Vec<&str> = g.color_names().iter().map(|s| s.as_str()).collect();
    NGraph::from_fn(&names, g.size() * hs, |x, y| {
        let (a, b) = (x / hs, x % hs);
        let (c, d) = (y / hs, y % hs);
        if a == c {
            h.color(b, d)
        } else {
            g.color(a, c)
        }
    })
}

/// Nested clique wreath over the default 3-color signature, outermost layer
/// first: `[(2, t), (3, s)]` is the 2-block graph of 3-cliques `K_2^t[K_3^s]`.
pub fn clique_wreath(names: &[&str; 3], layers: &[(usize, Color)]) -> Result<NGraph> {
    if layers.is_empty() {
        return Err(Error::invalid("at least one wreath layer required"));
    }
    let (innermost, rest) = layers.split_last().unwrap();
    let mut acc = NGraph::monochromatic(names, innermost.0, innermost.1)?;
    for &(size, color) in rest.iter().rev() {
        let outer = NGraph::monochromatic(names, size, color)?;
        acc = wreath(&outer, &acc)?;
    }
    Ok(acc)
}

/// Clique product `K_m^i x K_n^j`: vertex `(a, b)` is index `a*n + b`; pairs
/// agreeing in the second coordinate take color `i`, in the first `j`, and
/// `k` when both differ.
pub fn product(m: usize, n: usize, i: Color, j: Color, k: Color) -> Result<NGraph> {
    if i == j || i == k || j == k {
        return Err(Error::invalid("product colors must be distinct"));
    }
    NGraph::from_fn(&RST, m * n, |x, y| {
        let (a1, b1) = (x / n, x % n);
        let (a2, b2) = (y / n, y % n);
        if b1 == b2 {
            i
        } else if a1 == a2 {
            j
        } else {
            k
        }
    })
}

fn other_two(spare: Color) -> Result<(Color, Color)> {
    match spare {
        0 => Ok((1, 2)),
        1 => Ok((0, 2)),
        2 => Ok((0, 1)),
        _ => Err(Error::invalid("spare color must be 0, 1, or 2")),
    }
}

/// Five vertices over the 3-color signature leaving `spare` unused: the
/// lower of the remaining colors on the 5-cycle `0-1-2-3-4-0`, the higher on
/// the complementary 5-cycle.
pub fn pentagon_p(spare: Color) -> Result<NGraph> {
    let (j, k) = other_two(spare)?;
    NGraph::from_fn(&RST, 5, |a, b| if b - a == 1 || b - a == 4 { j } else { k })
}

/// Nine vertices `(a, b)` (index `3a + b`) over the 3-color signature
/// leaving `spare` unused: the lower remaining color when the pair shares a
/// row or column, the higher otherwise.
pub fn rook_q(spare: Color) -> Result<NGraph> {
    let (j, k) = other_two(spare)?;
    NGraph::from_fn(&RST, 9, |x, y| {
        let (a1, b1) = (x / 3, x % 3);
        let (a2, b2) = (y / 3, y % 3);
        if a1 == a2 || b1 == b2 {
            j
        } else {
            k
        }
    })
}

/// Complete multipartite 2-graph `I_m[K_n]`: `m` parts of `n` vertices
/// (vertex `(p, q)` is index `p*n + q`), `within` inside parts, `across`
/// elsewhere, over the signature `R,S`.
pub fn multipartite(m: usize, n: usize, within: Color, across: Color) -> Result<NGraph> {
    if within == across {
        return Err(Error::invalid("part colors must be distinct"));
    }
    NGraph::from_fn(&["R", "S"], m * n, |x, y| {
        if x / n == y / n {
            within
        } else {
            across
        }
    })
}

fn signature_of(colors: usize) -> Result<Vec<String>> {
    const LETTERS: [&str; 8] = ["R", "S", "T", "U", "V", "W", "X", "Y"];
    if colors < 2 {
        return Err(Error::invalid("need at least 2 colors"));
    }
    Ok((0..colors)
        .map(|c| {
            LETTERS
                .get(c)
                .map(|s| s.to_string())
                .unwrap_or_else(|| format!("C{c}"))
        })
        .collect())
}

/// Uniform random coloring: every pair independently uniform over `colors`
/// colors, drawn in pair order from the seeded stream.
pub fn random_ngraph(v: usize, colors: usize, seed: u64) -> Result<NGraph> {
    let names = signature_of(colors)?;
    let names: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut rng = SplitMix64::new(seed);
    NGraph::from_fn(&names, v, |_, _| rng.below(colors as u64) as Color)
}

/// Two-vertex cover of a random base graph. The base is a graph on
/// `classes` vertices with each edge an independent fair bit from the seeded
/// stream, scanned in pair order. Base vertex `m` becomes the pair
/// `{2m, 2m+1}`; those pairs get `R`; a cross pair is `S` when its parities
/// agree and the base has the edge, or when the parities differ and the base
/// lacks it; all else is `T`.
pub fn cover_cgamma(graph_seed: u64, classes: usize) -> Result<NGraph> {
    if classes < 2 {
        return Err(Error::invalid("cover needs at least 2 classes"));
    }
    let mut rng = SplitMix64::new(graph_seed);
    let mut base = vec![false; classes * (classes - 1) / 2];
    for slot in base.iter_mut() {
        *slot = rng.bit();
    }
    NGraph::from_fn(&RST, 2 * classes, |x, y| {
        let (m, n) = (x / 2, y / 2);
        if m == n {
            return 0;
        }
        let same_parity = (x % 2) == (y % 2);
        if base[pair_index(classes, m, n)] == same_parity {
            1
        } else {
            2
        }
    })
}

/// Block graph with random cross pairs: `classes` blocks of `class_size`
/// vertices (vertex `(c, q)` is index `c*class_size + q`), `eq_color` inside
/// blocks, and each cross pair independently one of the other two colors.
pub fn class_random(
    classes: usize,
    class_size: usize,
    eq_color: Color,
    seed: u64,
) -> Result<NGraph> {
    if eq_color > 2 {
        return Err(Error::invalid("eq_color must be 0, 1, or 2"));
    }
    let (c1, c2) = other_two(eq_color)?;
    let mut rng = SplitMix64::new(seed);
    NGraph::from_fn(&RST, classes * class_size, |x, y| {
        if x / class_size == y / class_size {
            eq_color
        } else if rng.bit() {
            c1
        } else {
            c2
        }
    })
}

/// Blowup of a random 2-colored quotient: `classes` blocks of `class_size`
/// vertices, `R` inside blocks; each pair of blocks draws one fair bit and
/// joins completely in `S` or `T` accordingly.
pub fn quotient_random(classes: usize, class_size: usize, seed: u64) -> Result<NGraph> {
    let mut rng = SplitMix64::new(seed);
    let mut cross = vec![0 as Color; classes * classes.saturating_sub(1) / 2];
    for slot in cross.iter_mut() {
        *slot = if rng.bit() { 1 } else { 2 };
    }
    NGraph::from_fn(&RST, classes * class_size, |x, y| {
        let (a, b) = (x / class_size, y / class_size);
        if a == b {
            0
        } else {
            cross[pair_index(classes, a, b)]
        }
    })
}

/// Blocks with random interiors: `m` blocks of `class_size` vertices, every
/// cross pair `R`, every inside pair an independent fair choice of `S`/`T`.
pub fn class_generic(m: usize, class_size: usize, seed: u64) -> Result<NGraph> {
    let mut rng = SplitMix64::new(seed);
    NGraph::from_fn(&RST, m * class_size, |x, y| {
        if x / class_size == y / class_size {
            if rng.bit() {
                1
            } else {
                2
            }
        } else {
            0
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn wreath_of_cliques_splits_pairs() {
        let g = NGraph::monochromatic(&RST, 2, 1).unwrap();
        let h = NGraph::monochromatic(&RST, 3, 0).unwrap();
        let w = wreath(&g, &h).unwrap();
        assert_eq!(w.size(), 6);
        assert_eq!(w.color_counts(), vec![6, 9, 0]);
        assert_eq!(w.color(0, 1), 0);
        assert_eq!(w.color(0, 3), 1);
    }

    #[test]
    fn wreath_is_associative_up_to_isomorphism() {
        let seeds = [3u64, 11, 42];
        for &seed in &seeds {
            let a = random_ngraph(2, 3, seed).unwrap();
            let b = random_ngraph(3, 3, seed + 1).unwrap();
            let c = random_ngraph(2, 3, seed + 2).unwrap();
            let left = wreath(&wreath(&a, &b).unwrap(), &c).unwrap();
            let right = wreath(&a, &wreath(&b, &c).unwrap()).unwrap();
            assert!(are_isomorphic(&left, &right).unwrap().is_some());
        }
    }

    #[test]
    fn product_color_counts() {
        let p = product(2, 2, 0, 1, 2).unwrap();
        assert_eq!(p.color_counts(), vec![2, 2, 2]);
        let row = product(1, 4, 0, 1, 2).unwrap();
        assert_eq!(row.color_counts(), vec![0, 6, 0]);
    }

    #[test]
    fn pentagon_leaves_spare_unused() {
        let p = pentagon_p(0).unwrap();
        assert_eq!(p.color_counts(), vec![0, 5, 5]);
        // Every vertex sees each used color exactly twice.
        for v in 0..5 {
            assert_eq!(p.degree(1, v), 2);
            assert_eq!(p.degree(2, v), 2);
        }
    }

    #[test]
    fn rook_matches_product_after_merging_colors() {
        let q = rook_q(0).unwrap();
        assert_eq!(q.color_counts(), vec![0, 18, 18]);
        // Merging the product's row and column colors into one yields the
        // same-row-or-column relation.
        let p = product(3, 3, 0, 1, 2).unwrap();
        let merged = p.map_colors(&["R", "S", "T"], &[1, 1, 2]).unwrap();
        assert!(are_isomorphic(&merged, &q).unwrap().is_some());
    }

    #[test]
    fn rook_complement_symmetry() {
        // Swapping the two used colors gives an isomorphic graph: the
        // complement of the 3x3 rook adjacency is again a 3x3 rook pattern.
        let q = rook_q(0).unwrap();
        let swapped = q.map_colors(&["R", "S", "T"], &[0, 2, 1]).unwrap();
        assert!(are_isomorphic(&q, &swapped).unwrap().is_some());
    }

    #[test]
    fn multipartite_blocks() {
        let g = multipartite(3, 2, 0, 1).unwrap();
        assert_eq!(g.color_counts(), vec![3, 12]);
    }

    #[test]
    fn random_ngraph_is_seed_deterministic() {
        let a = random_ngraph(30, 3, 99).unwrap();
        let b = random_ngraph(30, 3, 99).unwrap();
        let c = random_ngraph(30, 3, 100).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn cover_classes_and_cross_colors() {
        // classes = 2: the single base bit decides which cross pairs are S.
        for seed in 0..8u64 {
            let g = cover_cgamma(seed, 2).unwrap();
            assert_eq!(g.color(0, 1), 0);
            assert_eq!(g.color(2, 3), 0);
            let mut rng = SplitMix64::new(seed);
            let edge = rng.bit();
            let (s, t) = (1 as Color, 2 as Color);
            let (same, diff) = if edge { (s, t) } else { (t, s) };
            assert_eq!(g.color(0, 2), same);
            assert_eq!(g.color(1, 3), same);
            assert_eq!(g.color(0, 3), diff);
            assert_eq!(g.color(1, 2), diff);
        }
    }

    #[test]
    fn class_random_keeps_blocks() {
        let g = class_random(3, 4, 0, 5).unwrap();
        for x in 0..12 {
            for y in x + 1..12 {
                if x / 4 == y / 4 {
                    assert_eq!(g.color(x, y), 0);
                } else {
                    assert_ne!(g.color(x, y), 0);
                }
            }
        }
    }

    #[test]
    fn quotient_random_cross_blocks_are_uniform() {
        let g = quotient_random(4, 3, 17).unwrap();
        for a in 0..4usize {
            for b in a + 1..4 {
                let c = g.color(a * 3, b * 3);
                assert!(c == 1 || c == 2);
                for q in 0..3 {
                    for r in 0..3 {
                        assert_eq!(g.color(a * 3 + q, b * 3 + r), c);
                    }
                }
            }
        }
    }

    #[test]
    fn class_generic_interiors_use_both_colors() {
        let g = class_generic(3, 12, 23).unwrap();
        for x in 0..36 {
            for y in x + 1..36 {
                if x / 12 == y / 12 {
                    assert_ne!(g.color(x, y), 0);
                } else {
                    assert_eq!(g.color(x, y), 0);
                }
            }
        }
    }

    #[test]
    fn generator_spec_round_trip() {
        let text = r#"{"kind":"cover","params":{"classes":4},"seed":7}"#;
        let spec: GeneratorSpec = serde_json::from_str(text).unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.size(), 8);
        assert_eq!(g, cover_cgamma(7, 4).unwrap());
    }

    #[test]
    fn generator_spec_wreath_layers() {
        let spec: GeneratorSpec =
            serde_json::from_str(r#"{"kind":"wreath","params":{"layers":[2,2,3,1,4,0]},"seed":0}"#)
                .unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.size(), 24);
        let direct = clique_wreath(&RST, &[(2, 2), (3, 1), (4, 0)]).unwrap();
        assert_eq!(g, direct);
    }
}
