//! Joint embedding and amalgamation over classes cut out by forbidden
//! configurations.
//!
//! A class is given by a [`ForbiddenSet`]: a graph belongs to it when no
//! forbidden entry embeds. An amalgamation problem glues two members over a
//! common base; [`solve`] searches the colorings of the unidentified pairs
//! and returns either the lexicographically first solution or a failure
//! record citing, for every coloring, a forbidden embedding it contains.
//! [`check_ap`] and [`check_jep`] enumerate all problems up to simultaneous
//! isomorphism within a size bound, so their verdicts are exact at that
//! bound.

use std::collections::BTreeMap;

use crate::budget::Budgets;
use crate::canon::{automorphisms, canonical_form, embeddings};
use crate::error::Error;
use crate::graph::{pair_count, pair_index, Color, NGraph, VertexMap};
use crate::Result;

const UNSET: u8 = u8::MAX;

/// Forbidden configurations, held in canonical form, pairwise
/// non-isomorphic, sorted by size then matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenSet {
    forbidden: Vec<NGraph>,
}

impl ForbiddenSet {
    pub fn empty() -> Self {
        ForbiddenSet {
            forbidden: Vec::new(),
        }
    }

    /// Canonicalizes, deduplicates, and size-checks the entries. All entries
    /// must share one signature.
    pub fn new(entries: Vec<NGraph>, budgets: &Budgets) -> Result<Self> {
        let mut canon: Vec<NGraph> = Vec::new();
        for g in &entries {
            Budgets::check(
                "forbidden configuration size",
                "FORBIDDEN_SIZE",
                g.size() as u64,
                budgets.forbidden_size,
            )?;
            if let Some(first) = entries.first() {
                if !g.same_signature(first) {
                    return Err(Error::SignatureMismatch {
                        left: first.signature(),
                        right: g.signature(),
                    });
                }
            }
            let c = canonical_form(g);
            if !canon.contains(&c) {
                canon.push(c);
            }
        }
        canon.sort_by(|a, b| (a.size(), a.matrix()).cmp(&(b.size(), b.matrix())));
        Ok(ForbiddenSet { forbidden: canon })
    }

    /// Builds a set of forbidden triangles from 3-letter color words over
    /// single-letter color names: `"RRS"` is the triangle with colors R, R, S
    /// on its three pairs.
    pub fn triangles(names: &[&str], words: &[&str], budgets: &Budgets) -> Result<Self> {
        let mut entries = Vec::with_capacity(words.len());
        for word in words {
            let letters: Vec<char> = word.chars().collect();
            if letters.len() != 3 {
                return Err(Error::invalid(format!(
                    "triangle word {word:?} must have exactly 3 letters"
                )));
            }
            let mut colors = [0 as Color; 3];
            for (k, ch) in letters.iter().enumerate() {
                let pos = names
                    .iter()
                    .position(|n| n.len() == 1 && n.starts_with(*ch))
                    .ok_or_else(|| {
                        Error::invalid(format!("letter {ch:?} names no color in {names:?}"))
                    })?;
                colors[k] = pos as Color;
            }
            entries.push(NGraph::from_matrix(names, 3, colors.to_vec())?);
        }
        ForbiddenSet::new(entries, budgets)
    }

    pub fn entries(&self) -> &[NGraph] {
        &self.forbidden
    }

    pub fn is_empty(&self) -> bool {
        self.forbidden.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberWitness {
    /// Index into the forbidden set.
    pub forbidden: usize,
    /// Embedding of that entry into the tested graph.
    pub embedding: VertexMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberReport {
    pub member: bool,
    pub witness: Option<MemberWitness>,
}

/// Class membership: `g` belongs iff no forbidden entry embeds into it. The
/// witness carries the first embedding found otherwise.
pub fn member(g: &NGraph, forb: &ForbiddenSet) -> Result<MemberReport> {
    for (k, f) in forb.forbidden.iter().enumerate() {
        if !f.same_signature(g) {
            return Err(Error::SignatureMismatch {
                left: f.signature(),
                right: g.signature(),
            });
        }
        if f.size() > g.size() {
            continue;
        }
        if let Some(embedding) = embeddings(f, g, false).into_iter().next() {
            return Ok(MemberReport {
                member: false,
                witness: Some(MemberWitness {
                    forbidden: k,
                    embedding,
                }),
            });
        }
    }
    Ok(MemberReport {
        member: true,
        witness: None,
    })
}

/// Two members glued over a common base: `f1 : base -> left` and
/// `f2 : base -> right` are embeddings. An empty base states a joint
/// embedding problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmalgamationProblem {
    pub base: NGraph,
    pub left: NGraph,
    pub right: NGraph,
    pub f1: VertexMap,
    pub f2: VertexMap,
}

impl AmalgamationProblem {
    pub fn new(
        base: NGraph,
        left: NGraph,
        right: NGraph,
        f1: VertexMap,
        f2: VertexMap,
    ) -> Result<Self> {
        let p = AmalgamationProblem {
            base,
            left,
            right,
            f1,
            f2,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.base.same_signature(&self.left) || !self.base.same_signature(&self.right) {
            return Err(Error::SignatureMismatch {
                left: self.base.signature(),
                right: if self.base.same_signature(&self.left) {
                    self.right.signature()
                } else {
                    self.left.signature()
                },
            });
        }
        if !self.f1.is_embedding(&self.base, &self.left) {
            return Err(Error::invalid("f1 is not an embedding of the base"));
        }
        if !self.f2.is_embedding(&self.base, &self.right) {
            return Err(Error::invalid("f2 is not an embedding of the base"));
        }
        Ok(())
    }
}

/// Order in which the solver tries colorings of the new pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FillStrategy {
    /// Ascending color index on each pair, pairs in `(left, right)` vertex
    /// order; yields the lexicographically first solution.
    Lexicographic,
    /// Try the single all-`fill` coloring first, then fall back to the
    /// lexicographic search.
    FreeFirst(Color),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmalgamationSolution {
    pub d: NGraph,
    pub g1: VertexMap,
    pub g2: VertexMap,
}

/// One enumerated coloring of the free pairs together with the forbidden
/// embedding that blocks it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockedColoring {
    pub colors: Vec<Color>,
    pub forbidden: usize,
    pub embedding: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmalgamationFailure {
    /// The unidentified pairs, as vertex pairs of the glued graph, in the
    /// enumeration order of the coloring words.
    pub free_pairs: Vec<(usize, usize)>,
    /// Every coloring word in lexicographic order with its blocker.
    pub blocked: Vec<BlockedColoring>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmalgamationCertificate {
    pub solved: bool,
    pub solution: Option<AmalgamationSolution>,
    pub failure: Option<AmalgamationFailure>,
}

impl AmalgamationCertificate {
    /// Re-verifies the certificate against the problem from scratch: a
    /// solution must embed both sides compatibly and stay in the class; a
    /// failure record must list every coloring once, in order, each with a
    /// valid citation.
    pub fn verify(&self, problem: &AmalgamationProblem, forb: &ForbiddenSet) -> Result<()> {
        problem.validate()?;
        let sk = skeleton(problem);
        match (self.solved, &self.solution, &self.failure) {
            (true, Some(sol), None) => {
                if sol.d.size() != sk.d_size {
                    return Err(Error::invalid("solution has the wrong vertex count"));
                }
                if !sol.g1.is_embedding(&problem.left, &sol.d)
                    || !sol.g2.is_embedding(&problem.right, &sol.d)
                {
                    return Err(Error::invalid("solution maps are not embeddings"));
                }
                let via_left = problem.f1.compose(&sol.g1);
                let via_right = problem.f2.compose(&sol.g2);
                if via_left != via_right {
                    return Err(Error::invalid("solution does not identify the base"));
                }
                if !member(&sol.d, forb)?.member {
                    return Err(Error::invalid("solution leaves the class"));
                }
                Ok(())
            }
            (false, None, Some(fail)) => {
                if fail.free_pairs != sk.free {
                    return Err(Error::invalid("failure record lists the wrong pairs"));
                }
                let n = problem.base.color_count() as u64;
                let total = (n as u128).checked_pow(sk.free.len() as u32);
                if total != Some(fail.blocked.len() as u128) {
                    return Err(Error::invalid("failure record is not exhaustive"));
                }
                let mut word = vec![0 as Color; sk.free.len()];
                let mut matrix = sk.matrix.clone();
                for entry in &fail.blocked {
                    if entry.colors != word {
                        return Err(Error::invalid("failure record out of order"));
                    }
                    for (&(u, w), &c) in sk.free.iter().zip(&word) {
                        matrix[pair_index(sk.d_size, u, w)] = c;
                    }
                    let f = forb
                        .forbidden
                        .get(entry.forbidden)
                        .ok_or_else(|| Error::invalid("citation names no forbidden entry"))?;
                    let img = &entry.embedding;
                    let distinct =
                        img.iter().collect::<std::collections::BTreeSet<_>>().len() == img.len();
                    if img.len() != f.size() || !distinct || img.iter().any(|&v| v >= sk.d_size) {
                        return Err(Error::invalid("cited embedding is malformed"));
                    }
                    for x in 0..f.size() {
                        for y in x + 1..f.size() {
                            let m = matrix
                                [pair_index(sk.d_size, img[x].min(img[y]), img[x].max(img[y]))];
                            if m != f.color(x, y) {
                                return Err(Error::invalid("cited embedding does not match"));
                            }
                        }
                    }
                    next_word(&mut word, n as Color);
                }
                Ok(())
            }
            _ => Err(Error::invalid("certificate shape is inconsistent")),
        }
    }
}

/// Advances a coloring word lexicographically (most significant digit
/// first); wraps to all zero after the last word.
fn next_word(word: &mut [Color], n: Color) {
    for i in (0..word.len()).rev() {
        if word[i] + 1 < n {
            word[i] += 1;
            word[i + 1..].fill(0);
            return;
        }
    }
    word.fill(0);
}

struct Skeleton {
    d_size: usize,
    /// Colors of the determined pairs, `UNSET` on the free ones.
    matrix: Vec<u8>,
    /// Free pairs `(u, w)`, `u` in the left copy, `w` right-only, ascending.
    free: Vec<(usize, usize)>,
    /// Right vertex to glued-graph index.
    g2: Vec<usize>,
}

/// Glues `left` and `right` over the base: left keeps its indices, the
/// right-only vertices follow in ascending right order. Pairs between
/// left-only and right-only vertices are free.
fn skeleton(p: &AmalgamationProblem) -> Skeleton {
    let b = p.left.size();
    let c = p.right.size();
    let d_size = b + c - p.base.size();

    let mut left_from_base = vec![usize::MAX; b];
    for (t, &lv) in p.f1.images.iter().enumerate() {
        left_from_base[lv] = t;
    }
    let mut g2 = vec![usize::MAX; c];
    for (t, &rv) in p.f2.images.iter().enumerate() {
        g2[rv] = p.f1.images[t];
    }
    let mut next = b;
    let mut right_at = vec![usize::MAX; d_size];
    for (rv, slot) in g2.iter_mut().enumerate() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
        right_at[*slot] = rv;
    }
    debug_assert_eq!(next, d_size);

    let mut matrix = vec![UNSET; pair_count(d_size)];
    let mut free = Vec::new();
    for u in 0..d_size {
        for w in u + 1..d_size {
            let at = pair_index(d_size, u, w);
            if w < b {
                matrix[at] = p.left.color(u, w);
            } else if u < b && left_from_base[u] == usize::MAX {
                free.push((u, w));
            } else {
                matrix[at] = p.right.color(right_at[u], right_at[w]);
            }
        }
    }
    Skeleton {
        d_size,
        matrix,
        free,
        g2,
    }
}

/// First forbidden embedding whose image pairs are all determined and
/// matching; with an anchor, only embeddings whose image contains both
/// anchor endpoints are sought (forbidden graphs are complete, so such an
/// embedding necessarily uses the anchor pair).
fn find_blocked(
    forb: &[NGraph],
    matrix: &[u8],
    d_size: usize,
    anchor: Option<(usize, usize)>,
) -> Option<(usize, Vec<usize>)> {
    for (k, f) in forb.iter().enumerate() {
        let fs = f.size();
        if fs > d_size {
            continue;
        }
        let mut images = vec![usize::MAX; fs];
        let mut used = vec![false; d_size];
        match anchor {
            None => {
                if embed_into_partial(f, matrix, d_size, &mut images, &mut used) {
                    return Some((k, images));
                }
            }
            Some((p0, p1)) => {
                if fs < 2 {
                    continue;
                }
                for x in 0..fs {
                    for y in 0..fs {
                        if x == y || f.color(x, y) != matrix[pair_index(d_size, p0, p1)] {
                            continue;
                        }
                        images.fill(usize::MAX);
                        used.fill(false);
                        images[x] = p0;
                        images[y] = p1;
                        used[p0] = true;
                        used[p1] = true;
                        if embed_into_partial(f, matrix, d_size, &mut images, &mut used) {
                            return Some((k, images));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Backtracking completion of a partial injective map of `f` into the glued
/// graph; every `f` pair between assigned vertices must land on a determined
/// pair of the same color. Fills `images` on success.
fn embed_into_partial(
    f: &NGraph,
    matrix: &[u8],
    d_size: usize,
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let pos = match images.iter().position(|&v| v == usize::MAX) {
        None => {
            return check_partial_pairs(f, matrix, d_size, images);
        }
        Some(p) => p,
    };
    for cand in 0..d_size {
        if used[cand] {
            continue;
        }
        let ok = (0..f.size()).all(|q| {
            images[q] == usize::MAX || {
                let m = matrix[pair_index(d_size, images[q].min(cand), images[q].max(cand))];
                m != UNSET && m == f.color(q, pos)
            }
        });
        if !ok {
            continue;
        }
        images[pos] = cand;
        used[cand] = true;
        if embed_into_partial(f, matrix, d_size, images, used) {
            return true;
        }
        images[pos] = usize::MAX;
        used[cand] = false;
    }
    false
}

fn check_partial_pairs(f: &NGraph, matrix: &[u8], d_size: usize, images: &[usize]) -> bool {
    for x in 0..f.size() {
        for y in x + 1..f.size() {
            let m = matrix[pair_index(d_size, images[x].min(images[y]), images[x].max(images[y]))];
            if m == UNSET || m != f.color(x, y) {
                return false;
            }
        }
    }
    true
}

/// Searches the colorings of the free pairs for one that stays in the
/// class. The search assigns pairs in list order, colors ascending,
/// pruning a branch as soon as a forbidden structure closes over the newly
/// set pair; the first leaf reached is the lexicographically first valid
/// coloring. Every assignment attempt charges one search step against the
/// coloring budget.
///
/// When no coloring works, the failure record enumerates all of them, each
/// with a forbidden embedding it contains; the enumeration size is charged
/// against the same budget.
pub fn solve(
    problem: &AmalgamationProblem,
    forb: &ForbiddenSet,
    strategy: FillStrategy,
    budgets: &Budgets,
) -> Result<AmalgamationCertificate> {
    problem.validate()?;
    for (name, g) in [
        ("base", &problem.base),
        ("left", &problem.left),
        ("right", &problem.right),
    ] {
        if !member(g, forb)?.member {
            return Err(Error::invalid(format!("{name} is not in the class")));
        }
    }

    let sk = skeleton(problem);
    let n = problem.base.color_count() as Color;
    let names: Vec<&str> = problem
        .base
        .color_names()
        .iter()
        .map(|s| s.as_str())
        .collect();
    let mut matrix = sk.matrix.clone();

    let solution = |matrix: Vec<u8>| -> Result<AmalgamationCertificate> {
        let d = NGraph::from_matrix(&names, sk.d_size, matrix)?;
        let cert = AmalgamationCertificate {
            solved: true,
            solution: Some(AmalgamationSolution {
                d,
                g1: VertexMap::identity(problem.left.size()),
                g2: VertexMap::new(sk.g2.clone()),
            }),
            failure: None,
        };
        debug_assert!(cert.verify(problem, forb).is_ok());
        Ok(cert)
    };

    let root_clean = find_blocked(&forb.forbidden, &matrix, sk.d_size, None).is_none();

    if root_clean {
        if let FillStrategy::FreeFirst(fill) = strategy {
            if fill >= n {
                return Err(Error::invalid(format!("fill color {fill} out of range")));
            }
            for &(u, w) in &sk.free {
                matrix[pair_index(sk.d_size, u, w)] = fill;
            }
            if find_blocked(&forb.forbidden, &matrix, sk.d_size, None).is_none() {
                return solution(matrix);
            }
            for &(u, w) in &sk.free {
                matrix[pair_index(sk.d_size, u, w)] = UNSET;
            }
        }

        let mut steps = 0u64;
        if search_free(
            &sk.free,
            0,
            n,
            &mut matrix,
            sk.d_size,
            &forb.forbidden,
            &mut steps,
            budgets.ap_colorings,
        )? {
            return solution(matrix);
        }
    }

    // Exhaustive failure record over all coloring words.
    let total = (n as u128).checked_pow(sk.free.len() as u32);
    Budgets::check(
        "amalgamation failure colorings",
        "AP_COLORINGS",
        total.map_or(u64::MAX, |t| t.min(u64::MAX as u128) as u64),
        budgets.ap_colorings,
    )?;
    let total = total.expect("bounded by the budget check") as u64;
    let mut word = vec![0 as Color; sk.free.len()];
    let mut blocked = Vec::with_capacity(total as usize);
    for _ in 0..total {
        for (&(u, w), &c) in sk.free.iter().zip(&word) {
            matrix[pair_index(sk.d_size, u, w)] = c;
        }
        match find_blocked(&forb.forbidden, &matrix, sk.d_size, None) {
            Some((k, image)) => blocked.push(BlockedColoring {
                colors: word.clone(),
                forbidden: k,
                embedding: image,
            }),
            // The search is exhaustive, so this is unreachable; returning
            // the solution keeps the result honest regardless.
            None => return solution(matrix),
        }
        next_word(&mut word, n);
    }
    let cert = AmalgamationCertificate {
        solved: false,
        solution: None,
        failure: Some(AmalgamationFailure {
            free_pairs: sk.free.clone(),
            blocked,
        }),
    };
    debug_assert!(cert.verify(problem, forb).is_ok());
    Ok(cert)
}

#[allow(clippy::too_many_arguments)]
fn search_free(
    free: &[(usize, usize)],
    at: usize,
    n: Color,
    matrix: &mut Vec<u8>,
    d_size: usize,
    forb: &[NGraph],
    steps: &mut u64,
    limit: u64,
) -> Result<bool> {
    if at == free.len() {
        return Ok(true);
    }
    let (u, w) = free[at];
    let idx = pair_index(d_size, u, w);
    for c in 0..n {
        *steps += 1;
        if *steps > limit {
            return Err(Error::Budget {
                what: "amalgamation search steps",
                key: "AP_COLORINGS",
                requested: *steps,
                limit,
            });
        }
        matrix[idx] = c;
        if find_blocked(forb, matrix, d_size, Some((u, w))).is_none()
            && search_free(free, at + 1, n, matrix, d_size, forb, steps, limit)?
        {
            return Ok(true);
        }
    }
    matrix[idx] = UNSET;
    Ok(false)
}

/// Lexicographically least member of the embedding's orbit under the given
/// automorphisms (of the target).
fn normalize_embedding(e: &[usize], autos: &[VertexMap]) -> Vec<usize> {
    let mut best: Vec<usize> = e.to_vec();
    for sigma in autos {
        let mapped: Vec<usize> = e.iter().map(|&v| sigma.images[v]).collect();
        if mapped < best {
            best = mapped;
        }
    }
    best
}

/// All isomorphism types of members with at most `max_size` vertices, by
/// single-vertex extension of the smaller types (members are closed under
/// vertex deletion, so every type is reached). `sizes[s]` holds the size-`s`
/// representatives in canonical form, sorted by matrix.
pub fn enumerate_members(
    names: &[&str],
    forb: &ForbiddenSet,
    max_size: usize,
    budgets: &Budgets,
) -> Result<Vec<Vec<NGraph>>> {
    Budgets::check(
        "amalgamation side size",
        "AP_MAX_SIZE",
        max_size as u64,
        budgets.ap_max_size,
    )?;
    let n = names.len() as Color;
    let mut sizes: Vec<Vec<NGraph>> = vec![Vec::new(); max_size + 1];
    if max_size == 0 {
        return Ok(sizes);
    }
    let point = NGraph::from_matrix(names, 1, Vec::new())?;
    if member(&point, forb)?.member {
        sizes[1].push(point);
    }
    for s in 1..max_size {
        let mut seen: BTreeMap<Vec<Color>, NGraph> = BTreeMap::new();
        for rep in &sizes[s] {
            let mut word = vec![0 as Color; s];
            for _ in 0..(n as u64).pow(s as u32) {
                let candidate = extend_by_vertex(rep, &word, names)?;
                debug_assert_eq!(candidate.size(), s + 1);
                if member(&candidate, forb)?.member {
                    let c = canonical_form(&candidate);
                    seen.entry(c.matrix().to_vec()).or_insert(c);
                }
                next_word(&mut word, n);
            }
        }
        sizes[s + 1] = seen.into_values().collect();
    }
    Ok(sizes)
}

/// `rep` extended by one vertex joined to vertex `i` in `word[i]`.
fn extend_by_vertex(rep: &NGraph, word: &[Color], names: &[&str]) -> Result<NGraph> {
    let s = rep.size();
    NGraph::from_fn(
        names,
        s + 1,
        |i, j| {
            if j < s {
                rep.color(i, j)
            } else {
                word[i]
            }
        },
    )
}

#[derive(Debug, Clone)]
pub struct ApFailure {
    pub problem: AmalgamationProblem,
    pub certificate: AmalgamationCertificate,
}

#[derive(Debug, Clone)]
pub struct ApReport {
    pub holds: bool,
    /// Member isomorphism types found per size, index = vertex count.
    pub members_by_size: Vec<usize>,
    /// Problems solved, counted up to simultaneous isomorphism.
    pub problems: u64,
    pub failure: Option<ApFailure>,
}

/// Exact amalgamation check at the size bound: every problem with
/// `|base| < |left| <= |right| <= max_size`, enumerated up to simultaneous
/// isomorphism of the whole diagram, must have a solution. Problems with
/// `|left| = |base|` are identities and always solvable, so they are
/// skipped.
pub fn check_ap(
    names: &[&str],
    forb: &ForbiddenSet,
    max_size: usize,
    budgets: &Budgets,
) -> Result<ApReport> {
    let sizes = enumerate_members(names, forb, max_size, budgets)?;
    let members_by_size: Vec<usize> = sizes.iter().map(|v| v.len()).collect();

    // Cache automorphism groups per representative.
    let mut autos: Vec<Vec<Vec<VertexMap>>> = Vec::with_capacity(sizes.len());
    for reps in &sizes {
        let mut row = Vec::with_capacity(reps.len());
        for rep in reps {
            row.push(automorphisms(rep, budgets)?);
        }
        autos.push(row);
    }

    let mut problems = 0u64;
    for a_size in 1..max_size {
        for (a_idx, base) in sizes[a_size].iter().enumerate() {
            let aut_a = &autos[a_size][a_idx];
            for b_size in a_size + 1..=max_size {
                for (b_idx, left) in sizes[b_size].iter().enumerate() {
                    let e1_reps = embedding_orbit_reps(base, left, &autos[b_size][b_idx]);
                    if e1_reps.is_empty() {
                        continue;
                    }
                    for c_size in b_size..=max_size {
                        let c_start = if c_size == b_size { b_idx } else { 0 };
                        for (c_off, right) in sizes[c_size][c_start..].iter().enumerate() {
                            let c_idx = c_start + c_off;
                            let same_side = c_size == b_size && c_idx == b_idx;
                            let e2_reps = if same_side {
                                e1_reps.clone()
                            } else {
                                embedding_orbit_reps(base, right, &autos[c_size][c_idx])
                            };
                            if e2_reps.is_empty() {
                                continue;
                            }
                            for e1 in &e1_reps {
                                for e2 in &e2_reps {
                                    if !pair_is_canonical(
                                        e1,
                                        e2,
                                        aut_a,
                                        &autos[b_size][b_idx],
                                        &autos[c_size][c_idx],
                                        same_side,
                                    ) {
                                        continue;
                                    }
                                    problems += 1;
                                    let problem = AmalgamationProblem::new(
                                        base.clone(),
                                        left.clone(),
                                        right.clone(),
                                        VertexMap::new(e1.clone()),
                                        VertexMap::new(e2.clone()),
                                    )?;
                                    let certificate = solve(
                                        &problem,
                                        forb,
                                        FillStrategy::Lexicographic,
                                        budgets,
                                    )?;
                                    if !certificate.solved {
                                        return Ok(ApReport {
                                            holds: false,
                                            members_by_size,
                                            problems,
                                            failure: Some(ApFailure {
                                                problem,
                                                certificate,
                                            }),
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(ApReport {
        holds: true,
        members_by_size,
        problems,
        failure: None,
    })
}

/// Representatives of the embeddings of `base` into `target` up to
/// automorphisms of the target, sorted; each representative is the least
/// image vector of its orbit.
fn embedding_orbit_reps(
    base: &NGraph,
    target: &NGraph,
    target_autos: &[VertexMap],
) -> Vec<Vec<usize>> {
    let all = embeddings(base, target, true);
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for e in &all {
        let norm = normalize_embedding(&e.images, target_autos);
        if !reps.contains(&norm) {
            reps.push(norm);
        }
    }
    reps.sort();
    reps
}

/// True when `(e1, e2)` is the canonical representative of its orbit under
/// base automorphisms acting on both coordinates, target automorphisms on
/// each, and the side swap when both sides are the same representative.
fn pair_is_canonical(
    e1: &[usize],
    e2: &[usize],
    aut_base: &[VertexMap],
    aut_left: &[VertexMap],
    aut_right: &[VertexMap],
    same_side: bool,
) -> bool {
    let original = (e1.to_vec(), e2.to_vec());
    for tau in aut_base {
        let t1: Vec<usize> = tau.images.iter().map(|&t| e1[t]).collect();
        let t2: Vec<usize> = tau.images.iter().map(|&t| e2[t]).collect();
        let cand = (
            normalize_embedding(&t1, aut_left),
            normalize_embedding(&t2, aut_right),
        );
        if cand < original {
            return false;
        }
        if same_side {
            let swapped = (
                normalize_embedding(&t2, aut_left),
                normalize_embedding(&t1, aut_right),
            );
            if swapped < original {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone)]
pub struct JepFailure {
    pub left: NGraph,
    pub right: NGraph,
    pub certificate: AmalgamationCertificate,
}

#[derive(Debug, Clone)]
pub struct JepReport {
    pub holds: bool,
    pub members_by_size: Vec<usize>,
    pub pairs: u64,
    pub failure: Option<JepFailure>,
}

/// Joint embedding at the size bound: every unordered pair of member types
/// must embed into a common member. Stated as amalgamation over the empty
/// base.
pub fn check_jep(
    names: &[&str],
    forb: &ForbiddenSet,
    max_size: usize,
    budgets: &Budgets,
) -> Result<JepReport> {
    let sizes = enumerate_members(names, forb, max_size, budgets)?;
    let members_by_size: Vec<usize> = sizes.iter().map(|v| v.len()).collect();
    let empty = NGraph::from_matrix(names, 0, Vec::new())?;
    let flat: Vec<&NGraph> = sizes.iter().flatten().collect();

    let mut pairs = 0u64;
    for (i, &left) in flat.iter().enumerate() {
        for &right in &flat[i..] {
            pairs += 1;
            let problem = AmalgamationProblem::new(
                empty.clone(),
                left.clone(),
                right.clone(),
                VertexMap::new(Vec::new()),
                VertexMap::new(Vec::new()),
            )?;
            let certificate = solve(&problem, forb, FillStrategy::Lexicographic, budgets)?;
            if !certificate.solved {
                return Ok(JepReport {
                    holds: false,
                    members_by_size,
                    pairs,
                    failure: Some(JepFailure {
                        left: left.clone(),
                        right: right.clone(),
                        certificate,
                    }),
                });
            }
        }
    }
    Ok(JepReport {
        holds: true,
        members_by_size,
        pairs,
        failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{class_random, RST};

    fn budgets() -> Budgets {
        Budgets::default()
    }

    fn r_edge() -> NGraph {
        NGraph::from_matrix(&RST, 2, vec![0]).unwrap()
    }

    fn point() -> NGraph {
        NGraph::from_matrix(&RST, 1, Vec::new()).unwrap()
    }

    fn edge_problem() -> AmalgamationProblem {
        // Two R-edges glued on one endpoint.
        AmalgamationProblem::new(
            point(),
            r_edge(),
            r_edge(),
            VertexMap::new(vec![0]),
            VertexMap::new(vec![0]),
        )
        .unwrap()
    }

    #[test]
    fn member_finds_forbidden_triangle() {
        let forb = ForbiddenSet::triangles(&RST, &["RRR"], &budgets()).unwrap();
        let k3 = NGraph::monochromatic(&RST, 3, 0).unwrap();
        let report = member(&k3, &forb).unwrap();
        assert!(!report.member);
        let witness = report.witness.unwrap();
        assert!(witness
            .embedding
            .is_embedding(&forb.entries()[witness.forbidden], &k3));
        assert!(member(&k3, &ForbiddenSet::empty()).unwrap().member);
    }

    #[test]
    fn class_random_omits_its_forbidden_triangles() {
        let forb = ForbiddenSet::triangles(&RST, &["RRS", "RRT"], &budgets()).unwrap();
        let g = class_random(4, 3, 0, 11).unwrap();
        assert!(member(&g, &forb).unwrap().member);
    }

    #[test]
    fn forbidden_set_dedups_isomorphic_entries() {
        // RRS and RSR are the same triangle.
        let forb = ForbiddenSet::triangles(&RST, &["RRS", "RSR", "SRR"], &budgets()).unwrap();
        assert_eq!(forb.entries().len(), 1);
    }

    #[test]
    fn free_strategy_fills_with_the_designated_color() {
        let cert = solve(
            &edge_problem(),
            &ForbiddenSet::empty(),
            FillStrategy::FreeFirst(2),
            &budgets(),
        )
        .unwrap();
        let sol = cert.solution.unwrap();
        assert_eq!(sol.d.color(1, 2), 2);
        // Lexicographic takes the least color instead.
        let lex = solve(
            &edge_problem(),
            &ForbiddenSet::empty(),
            FillStrategy::Lexicographic,
            &budgets(),
        )
        .unwrap();
        assert_eq!(lex.solution.unwrap().d.color(1, 2), 0);
    }

    #[test]
    fn triangle_constraint_forces_the_new_pair() {
        let forb = ForbiddenSet::triangles(&RST, &["RRR"], &budgets()).unwrap();
        let cert = solve(
            &edge_problem(),
            &forb,
            FillStrategy::Lexicographic,
            &budgets(),
        )
        .unwrap();
        assert!(cert.solved);
        let sol = cert.solution.as_ref().unwrap();
        // Both new vertices are R-joined to the base point, so R on the new
        // pair closes the forbidden triangle; S is the next color.
        assert_eq!(sol.d.color(1, 2), 1);
        cert.verify(&edge_problem(), &forb).unwrap();
    }

    #[test]
    fn planted_failure_enumerates_every_coloring() {
        // Forbidding all triangles with two R-edges leaves no legal color
        // for the new pair of two R-extensions of a point.
        let forb = ForbiddenSet::triangles(&RST, &["RRR", "RRS", "RRT"], &budgets()).unwrap();
        let problem = edge_problem();
        let cert = solve(&problem, &forb, FillStrategy::Lexicographic, &budgets()).unwrap();
        assert!(!cert.solved);
        let failure = cert.failure.as_ref().unwrap();
        assert_eq!(failure.free_pairs, vec![(1, 2)]);
        assert_eq!(failure.blocked.len(), 3);
        assert_eq!(
            failure
                .blocked
                .iter()
                .map(|b| b.colors.clone())
                .collect::<Vec<_>>(),
            vec![vec![0], vec![1], vec![2]]
        );
        cert.verify(&problem, &forb).unwrap();
    }

    #[test]
    fn solve_rejects_non_members() {
        let forb = ForbiddenSet::triangles(&RST, &["RRR"], &budgets()).unwrap();
        let k3 = NGraph::monochromatic(&RST, 3, 0).unwrap();
        let bad = AmalgamationProblem::new(
            point(),
            k3,
            r_edge(),
            VertexMap::new(vec![0]),
            VertexMap::new(vec![0]),
        )
        .unwrap();
        assert!(matches!(
            solve(&bad, &forb, FillStrategy::Lexicographic, &budgets()),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn member_enumeration_counts_small_types() {
        // Unconstrained 3-color types: 1 point, 3 edges, 10 triangles.
        let sizes = enumerate_members(&RST, &ForbiddenSet::empty(), 3, &budgets()).unwrap();
        assert_eq!(sizes[1].len(), 1);
        assert_eq!(sizes[2].len(), 3);
        assert_eq!(sizes[3].len(), 10);
        // Forbidding one triangle type removes exactly it.
        let forb = ForbiddenSet::triangles(&RST, &["RRR"], &budgets()).unwrap();
        let constrained = enumerate_members(&RST, &forb, 3, &budgets()).unwrap();
        assert_eq!(constrained[3].len(), 9);
    }

    #[test]
    fn free_class_has_ap_and_jep() {
        let report = check_ap(&RST, &ForbiddenSet::empty(), 3, &budgets()).unwrap();
        assert!(report.holds);
        assert!(report.problems > 0);
        let jep = check_jep(&RST, &ForbiddenSet::empty(), 3, &budgets()).unwrap();
        assert!(jep.holds);
    }

    #[test]
    fn triangle_free_two_colors_has_ap() {
        let names = ["R", "S"];
        let forb = ForbiddenSet::triangles(&names, &["RRR"], &budgets()).unwrap();
        let report = check_ap(&names, &forb, 3, &budgets()).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn size_budget_guards_check_ap() {
        assert!(matches!(
            check_ap(&RST, &ForbiddenSet::empty(), 7, &budgets()),
            Err(Error::Budget { .. })
        ));
    }
}
