//! The central type: a complete graph whose pairs each carry one color.
//!
//! Colors are indices into a fixed list of distinct names (at most 36, so a
//! pair color is one base-36 digit in the serialized form). The pair matrix
//! stores the upper triangle row by row: pair `(i, j)` with `i < j` sits at
//! `i*size - i*(i+1)/2 + (j-i-1)`. Vertices are `0..size`. The relation is
//! irreflexive; `color(v, v)` is a programming error and panics.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::Result;

pub type Color = u8;

/// Most colors a signature may hold; pair colors serialize as base-36 digits.
pub const MAX_COLORS: usize = 36;

/// Position of pair `(i, j)`, `i < j`, in the upper-triangle matrix.
#[inline]
pub fn pair_index(size: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < size);
    i * size - i * (i + 1) / 2 + (j - i - 1)
}

/// Number of unordered pairs on `size` vertices.
#[inline]
pub fn pair_count(size: usize) -> usize {
    size * size.saturating_sub(1) / 2
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NGraph {
    names: Vec<String>,
    size: usize,
    matrix: Vec<Color>,
}

impl NGraph {
    fn check_names(names: &[String]) -> Result<()> {
        if names.len() < 2 || names.len() > MAX_COLORS {
            return Err(Error::invalid(format!(
                "need between 2 and {MAX_COLORS} colors, got {}",
                names.len()
            )));
        }
        for (k, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::invalid("empty color name"));
            }
            if names[..k].contains(name) {
                return Err(Error::invalid(format!("duplicate color name {name:?}")));
            }
        }
        Ok(())
    }

    /// Builds a graph by evaluating `f` on every pair `(i, j)` with `i < j`.
    pub fn from_fn<F>(names: &[&str], size: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Color,
    {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        Self::check_names(&names)?;
        let n = names.len() as Color;
        let mut matrix = Vec::with_capacity(pair_count(size));
        for i in 0..size {
            for j in i + 1..size {
                let c = f(i, j);
                if c >= n {
                    return Err(Error::invalid(format!(
                        "pair ({i},{j}) colored {c}, signature has {n} colors"
                    )));
                }
                matrix.push(c);
            }
        }
        Ok(NGraph {
            names,
            size,
            matrix,
        })
    }

    /// Builds a graph from an explicit upper-triangle matrix.
    pub fn from_matrix(names: &[&str], size: usize, matrix: Vec<Color>) -> Result<Self> {
        if matrix.len() != pair_count(size) {
            return Err(Error::invalid(format!(
                "matrix length {} does not match {} pairs",
                matrix.len(),
                pair_count(size)
            )));
        }
        let mut it = matrix.into_iter();
        Self::from_fn(names, size, |_, _| it.next().unwrap())
    }

    /// Complete graph with every pair in color `c`.
    pub fn monochromatic(names: &[&str], size: usize, c: Color) -> Result<Self> {
        Self::from_fn(names, size, |_, _| c)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn color_count(&self) -> usize {
        self.names.len()
    }

    pub fn color_names(&self) -> &[String] {
        &self.names
    }

    pub fn color_name(&self, c: Color) -> &str {
        &self.names[c as usize]
    }

    pub fn color_index(&self, name: &str) -> Option<Color> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as Color)
    }

    /// Signature string used in mismatch errors.
    pub fn signature(&self) -> String {
        self.names.join(",")
    }

    pub fn same_signature(&self, other: &NGraph) -> bool {
        self.names == other.names
    }

    /// Color of the pair `{i, j}`. Panics when `i == j` or out of range.
    #[inline]
    pub fn color(&self, i: usize, j: usize) -> Color {
        assert!(i != j, "pair color of a vertex with itself");
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.matrix[pair_index(self.size, i, j)]
    }

    pub fn set_color(&mut self, i: usize, j: usize, c: Color) {
        assert!(i != j && (c as usize) < self.names.len());
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.matrix[pair_index(self.size, i, j)] = c;
    }

    pub fn matrix(&self) -> &[Color] {
        &self.matrix
    }

    /// Vertices joined to `v` in color `c`, ascending.
    pub fn neighbors(&self, c: Color, v: usize) -> Vec<usize> {
        (0..self.size)
            .filter(|&u| u != v && self.color(u, v) == c)
            .collect()
    }

    pub fn degree(&self, c: Color, v: usize) -> usize {
        (0..self.size)
            .filter(|&u| u != v && self.color(u, v) == c)
            .count()
    }

    /// Induced subgraph on `verts`, which must be distinct and in range.
    /// Vertex `k` of the result is `verts[k]`, so the order of `verts` is the
    /// order of the result.
    pub fn induced(&self, verts: &[usize]) -> Result<NGraph> {
        for (k, &v) in verts.iter().enumerate() {
            if v >= self.size {
                return Err(Error::invalid(format!("vertex {v} out of range")));
            }
            if verts[..k].contains(&v) {
                return Err(Error::invalid(format!("duplicate vertex {v}")));
            }
        }
        let names: Vec<&str> = self.names.iter().map(|s| s.as_str()).collect();
        NGraph::from_fn(&names, verts.len(), |i, j| self.color(verts[i], verts[j]))
    }

    /// Counts of each sorted color triple over all vertex triples.
    pub fn triangle_spectrum(&self) -> BTreeMap<[Color; 3], u64> {
        let mut spectrum = BTreeMap::new();
        for i in 0..self.size {
            for j in i + 1..self.size {
                let cij = self.color(i, j);
                for k in j + 1..self.size {
                    let mut t = [cij, self.color(i, k), self.color(j, k)];
                    t.sort_unstable();
                    *spectrum.entry(t).or_insert(0) += 1;
                }
            }
        }
        spectrum
    }

    /// Number of pairs in each color.
    pub fn color_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.names.len()];
        for &c in &self.matrix {
            counts[c as usize] += 1;
        }
        counts
    }

    /// Colors that appear on at least one pair, ascending.
    pub fn realized_colors(&self) -> Vec<Color> {
        self.color_counts()
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(c, _)| c as Color)
            .collect()
    }

    /// Rebuilds the graph over a new signature, sending old color `c` to
    /// `map[c]`. The map must be total on the old signature; merging colors
    /// is allowed.
    pub fn map_colors(&self, names: &[&str], map: &[Color]) -> Result<NGraph> {
        if map.len() != self.names.len() {
            return Err(Error::invalid(format!(
                "color map has {} entries for {} colors",
                map.len(),
                self.names.len()
            )));
        }
        NGraph::from_fn(names, self.size, |i, j| map[self.color(i, j) as usize])
    }

    /// The graph with vertex `k` renamed to `perm[k]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<NGraph> {
        if perm.len() != self.size {
            return Err(Error::invalid("permutation length mismatch"));
        }
        let mut seen = vec![false; self.size];
        for &p in perm {
            if p >= self.size || seen[p] {
                return Err(Error::invalid("not a permutation"));
            }
            seen[p] = true;
        }
        let names: Vec<&str> = self.names.iter().map(|s| s.as_str()).collect();
        let mut g = NGraph::monochromatic(&names, self.size, 0)?;
        for i in 0..self.size {
            for j in i + 1..self.size {
                g.set_color(perm[i], perm[j], self.color(i, j));
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for NGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NGraph[{}; {} vertices;", self.signature(), self.size)?;
        for i in 0..self.size {
            for j in i + 1..self.size {
                write!(f, " {i}{}{j}", self.color_name(self.color(i, j)))?;
            }
        }
        write!(f, "]")
    }
}

/// A map between vertex sets, `images[k]` being the image of vertex `k` of
/// the source. Validity against concrete graphs is checked on demand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct VertexMap {
    pub images: Vec<usize>,
}

impl VertexMap {
    pub fn new(images: Vec<usize>) -> Self {
        VertexMap { images }
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        let mut sorted = self.images.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// True when this is a color-preserving embedding of `src` into `dst`
    /// defined on all of `src`.
    pub fn is_embedding(&self, src: &NGraph, dst: &NGraph) -> bool {
        if self.images.len() != src.size() || !src.same_signature(dst) {
            return false;
        }
        if self.images.iter().any(|&v| v >= dst.size()) || !self.is_injective() {
            return false;
        }
        for i in 0..src.size() {
            for j in i + 1..src.size() {
                if src.color(i, j) != dst.color(self.images[i], self.images[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// True when this is an automorphism of `g`.
    pub fn is_automorphism(&self, g: &NGraph) -> bool {
        self.images.len() == g.size() && self.is_embedding(g, g)
    }

    /// `then` applied after `self`.
    pub fn compose(&self, then: &VertexMap) -> VertexMap {
        VertexMap {
            images: self.images.iter().map(|&v| then.images[v]).collect(),
        }
    }

    /// Inverse of a permutation map.
    pub fn inverse(&self) -> Result<VertexMap> {
        let n = self.images.len();
        let mut inv = vec![usize::MAX; n];
        for (i, &v) in self.images.iter().enumerate() {
            if v >= n || inv[v] != usize::MAX {
                return Err(Error::invalid("map is not a permutation"));
            }
            inv[v] = i;
        }
        Ok(VertexMap { images: inv })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_p3() -> NGraph {
        // Vertices 0-1-2 with the middle pairs R and the long pair S.
        NGraph::from_matrix(&["R", "S"], 3, vec![0, 1, 0]).unwrap()
    }

    #[test]
    fn pair_indexing_is_row_by_row() {
        assert_eq!(pair_index(4, 0, 1), 0);
        assert_eq!(pair_index(4, 0, 3), 2);
        assert_eq!(pair_index(4, 1, 2), 3);
        assert_eq!(pair_index(4, 2, 3), 5);
    }

    #[test]
    fn color_lookup_is_symmetric() {
        let g = path_p3();
        assert_eq!(g.color(0, 2), g.color(2, 0));
        assert_eq!(g.color(0, 2), 1);
    }

    #[test]
    #[should_panic]
    fn reflexive_lookup_panics() {
        path_p3().color(1, 1);
    }

    #[test]
    fn rejects_bad_signatures() {
        assert!(NGraph::monochromatic(&["R"], 3, 0).is_err());
        assert!(NGraph::monochromatic(&["R", "R"], 3, 0).is_err());
        assert!(NGraph::from_fn(&["R", "S"], 3, |_, _| 2).is_err());
    }

    #[test]
    fn induced_keeps_given_order() {
        let g = path_p3();
        let h = g.induced(&[2, 0]).unwrap();
        assert_eq!(h.color(0, 1), 1);
        assert!(g.induced(&[0, 0]).is_err());
        assert!(g.induced(&[0, 5]).is_err());
    }

    #[test]
    fn triangle_spectrum_of_p3() {
        let spectrum = path_p3().triangle_spectrum();
        assert_eq!(spectrum.len(), 1);
        assert_eq!(spectrum[&[0, 0, 1]], 1);
    }

    #[test]
    fn map_colors_merges() {
        let g = path_p3();
        let merged = g.map_colors(&["R", "S"], &[0, 0]).unwrap();
        assert_eq!(merged.color_counts(), vec![3, 0]);
    }

    #[test]
    fn vertex_map_embedding_checks_colors() {
        let g = path_p3();
        let swap = VertexMap::new(vec![2, 1, 0]);
        assert!(swap.is_automorphism(&g));
        let rot = VertexMap::new(vec![1, 2, 0]);
        assert!(!rot.is_automorphism(&g));
    }
}
