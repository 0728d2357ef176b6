//! Family classifier over the generator catalog: exact sporadic matches
//! first, then the equivalence landscape, a class pair census, blowup
//! peeling, and extension spot checks. Every label carries the evidence
//! trail that produced it, in the order the checks ran.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::analysis::{
    detect_equivalences, pair_class_analysis, quotient_keeping_signature, EquivalenceReport,
    PairType,
};
use crate::budget::Budgets;
use crate::canon::canonical_key;
use crate::error::Error;
use crate::graph::{Color, NGraph};
use crate::homogeneity::check_extension_axioms;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// No equivalence, every low-weight extension demand met exhaustively.
    RandomNGraph,
    /// Small classes blown up over an equivalence-free quotient.
    RandomGraphBlowup,
    /// Same shape with classes past the finite-class threshold.
    QuotientComplete,
    /// Complete quotient over random class interiors.
    ClassGeneric,
    /// Two-vertex classes crossing in paired matchings.
    Cover,
    /// Large classes with random cross pairs.
    ClassRandom,
    /// Nested clique blowups ending in one color.
    WreathStable,
    /// Transversal grid of two clique factors.
    Product,
    /// Two-layer two-color blowup.
    Multipartite,
    /// The two exceptional graphs, possibly blown up.
    PentagonRook,
    Unknown,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::RandomNGraph => "random",
            Family::RandomGraphBlowup => "random_graph_blowup",
            Family::QuotientComplete => "quotient_complete",
            Family::ClassGeneric => "class_generic",
            Family::Cover => "cover",
            Family::ClassRandom => "class_random",
            Family::WreathStable => "wreath_stable",
            Family::Product => "product",
            Family::Multipartite => "multipartite",
            Family::PentagonRook => "pentagon_rook",
            Family::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub classes: Option<usize>,
    pub class_size: Option<usize>,
    /// Colors in the family's role order (documented per branch).
    pub colors: Vec<Color>,
    /// Clique layers outermost first: (member count, color).
    pub layers: Vec<(usize, Color)>,
    /// Product factor sizes, ordered by factor color.
    pub dims: Option<(usize, usize)>,
    /// "pentagon" or "rook".
    pub sporadic: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationLabel {
    pub family: Family,
    pub params: FamilyParams,
    /// Signature of the classified graph, for rendering.
    pub color_names: Vec<String>,
    /// (check, outcome) pairs in execution order. Never empty.
    pub evidence: Vec<(String, String)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassifyOptions {
    /// Below this many vertices the statistical checks are inconclusive.
    pub min_size: usize,
    /// Class sizes up to this count as the finite-class regime.
    pub finite_class_threshold: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            min_size: 16,
            finite_class_threshold: 4,
        }
    }
}

fn nontrivial(r: &EquivalenceReport) -> bool {
    r.is_equivalence && r.classes.len() >= 2 && r.classes.iter().any(|c| c.len() >= 2)
}

fn uniform_class_size(r: &EquivalenceReport) -> Option<usize> {
    let k = r.classes[0].len();
    r.classes.iter().all(|c| c.len() == k).then_some(k)
}

/// Every pair of classes crossed by exactly one color.
fn cross_colors_single(g: &NGraph, classes: &[Vec<usize>]) -> bool {
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let c0 = g.color(classes[i][0], classes[j][0]);
            for &u in &classes[i] {
                for &v in &classes[j] {
                    if g.color(u, v) != c0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Exact isomorphism against the pentagon (5 vertices) or the rook grid
/// (9 vertices) over every ordered color pair of the signature. Returns the
/// kind and (cycle, chord) respectively (line, skew) colors.
fn sporadic_match(g: &NGraph) -> Option<(String, (Color, Color))> {
    if g.size() != 5 && g.size() != 9 {
        return None;
    }
    let names: Vec<&str> = g.color_names().iter().map(|s| s.as_str()).collect();
    let key = canonical_key(g);
    let n = g.color_count() as Color;
    for j in 0..n {
        for k in 0..n {
            if j == k {
                continue;
            }
            let cand = if g.size() == 5 {
                NGraph::from_fn(
                    &names,
                    5,
                    |a, b| if b - a == 1 || b - a == 4 { j } else { k },
                )
            } else {
                NGraph::from_fn(&names, 9, |x, y| {
                    if x / 3 == y / 3 || x % 3 == y % 3 {
                        j
                    } else {
                        k
                    }
                })
            }
            .expect("signature comes from a valid graph");
            if canonical_key(&cand) == key {
                let kind = if g.size() == 5 { "pentagon" } else { "rook" };
                return Some((kind.to_string(), (j, k)));
            }
        }
    }
    None
}

enum PeelEnd {
    Mono,
    Stuck,
}

/// Wreath layers as (class size, color) pairs, innermost first.
type PeelLayers = Vec<(usize, Color)>;

/// Repeatedly quotients out a single-color equivalence with uniform classes
/// and single-colored cross pairs, recording (class size, color) per layer
/// innermost first, until the quotient is monochromatic or no such step
/// exists. Quotients keep the signature so a final single color stays
/// representable.
fn peel(g: &NGraph) -> Result<(PeelLayers, NGraph, PeelEnd)> {
    let mut layers: Vec<(usize, Color)> = Vec::new();
    let mut current = g.clone();
    loop {
        let realized = current.realized_colors();
        if realized.len() == 1 {
            layers.push((current.size(), realized[0]));
            return Ok((layers, current, PeelEnd::Mono));
        }
        let eqs = detect_equivalences(&current);
        let step = eqs.iter().find(|r| {
            r.colors.len() == 1
                && realized.contains(&r.colors[0])
                && nontrivial(r)
                && uniform_class_size(r).is_some()
                && cross_colors_single(&current, &r.classes)
        });
        match step {
            Some(r) => {
                layers.push((r.classes[0].len(), r.colors[0]));
                let (q, _) = quotient_keeping_signature(&current, &r.colors)?;
                current = q;
            }
            None => return Ok((layers, current, PeelEnd::Stuck)),
        }
    }
}

/// All sorted color triples over the given colors.
fn all_triples(colors: &[Color]) -> BTreeSet<[Color; 3]> {
    let mut out = BTreeSet::new();
    for (i, &a) in colors.iter().enumerate() {
        for (j, &b) in colors.iter().enumerate().skip(i) {
            for &c in &colors[j..] {
                out.insert([a, b, c]);
            }
        }
    }
    out
}

fn sorted3(mut t: [Color; 3]) -> [Color; 3] {
    t.sort_unstable();
    t
}

/// The statistical regimes (extension screening, random-like cross pairs)
/// need enough vertices to mean anything; exact structural matches do not.
fn inconclusive_below(g: &NGraph, opts: &ClassifyOptions) -> Result<()> {
    if g.size() < opts.min_size {
        return Err(Error::invalid(format!(
            "{} vertices is below the classification minimum {}; the statistical checks are inconclusive",
            g.size(),
            opts.min_size
        )));
    }
    Ok(())
}

pub fn classify(
    g: &NGraph,
    opts: &ClassifyOptions,
    budgets: &Budgets,
) -> Result<ClassificationLabel> {
    let color_names = g.color_names().to_vec();
    let mut evidence: Vec<(String, String)> = Vec::new();
    let done = |family: Family, params: FamilyParams, evidence: Vec<(String, String)>| {
        debug_assert!(!evidence.is_empty());
        Ok(ClassificationLabel {
            family,
            params,
            color_names: color_names.clone(),
            evidence,
        })
    };

    // Exact matches need no statistics and skip the size gate.
    let realized = g.realized_colors();
    if realized.len() == 1 {
        evidence.push((
            "monochromatic".into(),
            format!("all pairs carry {}", g.color_name(realized[0])),
        ));
        let params = FamilyParams {
            colors: vec![realized[0]],
            layers: vec![(g.size(), realized[0])],
            ..FamilyParams::default()
        };
        return done(Family::WreathStable, params, evidence);
    }
    if let Some((kind, (j, k))) = sporadic_match(g) {
        evidence.push((
            "sporadic isomorphism".into(),
            format!("{kind} in colors {}, {}", g.color_name(j), g.color_name(k)),
        ));
        let params = FamilyParams {
            colors: vec![j, k],
            sporadic: Some(kind),
            ..FamilyParams::default()
        };
        return done(Family::PentagonRook, params, evidence);
    }
    let eqs = detect_equivalences(g);
    let singles: Vec<&EquivalenceReport> = eqs
        .iter()
        .filter(|r| r.colors.len() == 1 && nontrivial(r))
        .collect();
    let doubles: Vec<&EquivalenceReport> = eqs
        .iter()
        .filter(|r| {
            r.colors.len() == 2 && nontrivial(r) && r.colors.iter().all(|c| realized.contains(c))
        })
        .collect();
    evidence.push((
        "equivalence scan".into(),
        format!(
            "{} single-color, {} two-color",
            singles.len(),
            doubles.len()
        ),
    ));

    match (singles.len(), doubles.len()) {
        (2, _) => classify_grid(g, singles[0], singles[1], evidence, done),
        (1, _) => classify_class_structure(g, opts, singles[0], evidence, done),
        (0, 1) => classify_complete_quotient(g, &realized, doubles[0], evidence, done),
        (0, 0) => classify_by_extension(g, opts, &realized, budgets, evidence, done),
        _ => {
            evidence.push((
                "structure".into(),
                "equivalence landscape matches no cataloged family".into(),
            ));
            done(Family::Unknown, FamilyParams::default(), evidence)
        }
    }
}

/// Two single-color equivalences: accept exactly the transversal grid of
/// two clique factors with a constant third color between them.
fn classify_grid(
    g: &NGraph,
    a: &EquivalenceReport,
    b: &EquivalenceReport,
    mut evidence: Vec<(String, String)>,
    done: impl Fn(Family, FamilyParams, Vec<(String, String)>) -> Result<ClassificationLabel>,
) -> Result<ClassificationLabel> {
    let unknown = |mut ev: Vec<(String, String)>, why: &str| {
        ev.push(("grid structure".into(), why.into()));
        done(Family::Unknown, FamilyParams::default(), ev)
    };
    let (Some(sa), Some(sb)) = (uniform_class_size(a), uniform_class_size(b)) else {
        return unknown(evidence, "classes of unequal size");
    };
    if sa * sb != g.size() || a.classes.len() != sb || b.classes.len() != sa {
        return unknown(evidence, "class counts do not form a grid");
    }
    let mut in_a = vec![usize::MAX; g.size()];
    let mut in_b = vec![usize::MAX; g.size()];
    for (i, cl) in a.classes.iter().enumerate() {
        for &v in cl {
            in_a[v] = i;
        }
    }
    for (i, cl) in b.classes.iter().enumerate() {
        for &v in cl {
            in_b[v] = i;
        }
    }
    let mut meets = vec![0usize; a.classes.len() * b.classes.len()];
    for v in 0..g.size() {
        meets[in_a[v] * b.classes.len() + in_b[v]] += 1;
    }
    if meets.iter().any(|&m| m != 1) {
        return unknown(evidence, "factor classes are not transversal");
    }
    let (ca, cb) = (a.colors[0], b.colors[0]);
    let mut third: Option<Color> = None;
    for u in 0..g.size() {
        for v in u + 1..g.size() {
            if in_a[u] == in_a[v] || in_b[u] == in_b[v] {
                continue;
            }
            let c = g.color(u, v);
            if c == ca || c == cb || *third.get_or_insert(c) != c {
                return unknown(evidence, "off-grid pairs are not a constant third color");
            }
        }
    }
    let third = third.expect("a grid with both sides of size 2 has off-grid pairs");
    evidence.push((
        "grid structure".into(),
        format!(
            "{}x{} transversal grid, remaining pairs {}",
            sa,
            sb,
            g.color_name(third)
        ),
    ));
    let params = FamilyParams {
        colors: vec![ca, cb, third],
        dims: Some((sa, sb)),
        ..FamilyParams::default()
    };
    done(Family::Product, params, evidence)
}

/// One single-color equivalence: census the class pairs, then either peel
/// blowup layers, accept the paired-matching cover, or accept the large
/// random-cross regime.
fn classify_class_structure(
    g: &NGraph,
    opts: &ClassifyOptions,
    eq: &EquivalenceReport,
    mut evidence: Vec<(String, String)>,
    done: impl Fn(Family, FamilyParams, Vec<(String, String)>) -> Result<ClassificationLabel>,
) -> Result<ClassificationLabel> {
    let unknown = |mut ev: Vec<(String, String)>, check: &str, why: String| {
        ev.push((check.into(), why));
        done(Family::Unknown, FamilyParams::default(), ev)
    };
    let e = eq.colors[0];
    let Some(k) = uniform_class_size(eq) else {
        return unknown(evidence, "class sizes", "classes of unequal size".into());
    };
    let classes = eq.classes.len();
    let probe = (0..g.color_count() as Color)
        .find(|c| *c != e)
        .expect("at least two colors");

    let total = classes * (classes - 1) / 2;
    let (mut single_colored, mut two_matchings, mut random_like, mut other) = (0, 0, 0, 0);
    let mut block_r: BTreeSet<usize> = BTreeSet::new();
    for i in 0..classes {
        for j in i + 1..classes {
            let rep = pair_class_analysis(g, eq, i, j, probe)?;
            if rep.colors_realized.len() == 1 {
                single_colored += 1;
            } else {
                match rep.pair_type {
                    PairType::TwoMatchings => {
                        two_matchings += 1;
                        block_r.insert(rep.r.unwrap_or(0));
                    }
                    PairType::RandomLike => random_like += 1,
                    _ => other += 1,
                }
            }
        }
    }
    evidence.push((
        "pair census".into(),
        format!(
            "{single_colored} single-colored, {two_matchings} two-matching, {random_like} random-like, {other} other of {total}"
        ),
    ));

    if single_colored == total {
        return classify_blowup(g, opts, k, e, evidence, done);
    }
    if two_matchings == total {
        evidence.push((
            "matching blocks".into(),
            format!("every pair splits into two r x r blocks, r in {block_r:?}"),
        ));
        let params = FamilyParams {
            classes: Some(classes),
            class_size: Some(k),
            colors: vec![e],
            ..FamilyParams::default()
        };
        return done(Family::Cover, params, evidence);
    }
    if random_like == total {
        inconclusive_below(g, opts)?;
        if k <= opts.finite_class_threshold {
            return unknown(
                evidence,
                "class regime",
                format!(
                    "random cross pairs but class size {k} within the finite threshold {}",
                    opts.finite_class_threshold
                ),
            );
        }
        let realized = g.realized_colors();
        if realized.len() != 3 {
            return unknown(
                evidence,
                "colors",
                format!("{} realized colors", realized.len()),
            );
        }
        let others: Vec<Color> = realized.iter().copied().filter(|c| *c != e).collect();
        let expected_missing: BTreeSet<[Color; 3]> =
            others.iter().map(|&s| sorted3([e, e, s])).collect();
        let present: BTreeSet<[Color; 3]> = g.triangle_spectrum().into_keys().collect();
        let missing: BTreeSet<[Color; 3]> = all_triples(&realized)
            .into_iter()
            .filter(|t| !present.contains(t))
            .collect();
        if missing != expected_missing {
            return unknown(
                evidence,
                "triangle spectrum",
                format!("missing triples {missing:?}"),
            );
        }
        evidence.push((
            "triangle spectrum".into(),
            "missing exactly the two one-sided class triples".into(),
        ));
        let params = FamilyParams {
            classes: Some(classes),
            class_size: Some(k),
            colors: [vec![e], others].concat(),
            ..FamilyParams::default()
        };
        return done(Family::ClassRandom, params, evidence);
    }
    unknown(evidence, "pair census", "mixed pair types".into())
}

/// All class pairs single-colored: peel blowup layers and read the chain.
fn classify_blowup(
    g: &NGraph,
    opts: &ClassifyOptions,
    first_class_size: usize,
    first_color: Color,
    mut evidence: Vec<(String, String)>,
    done: impl Fn(Family, FamilyParams, Vec<(String, String)>) -> Result<ClassificationLabel>,
) -> Result<ClassificationLabel> {
    let (inner_layers, terminal, end) = peel(g)?;
    let layers: Vec<(usize, Color)> = inner_layers.iter().rev().copied().collect();
    match end {
        PeelEnd::Mono => {
            evidence.push((
                "blowup chain".into(),
                format!("{} clique layers ending in one color", layers.len()),
            ));
            let colors: Vec<Color> = layers.iter().map(|&(_, c)| c).collect();
            if g.realized_colors().len() == 2 && layers.len() == 2 {
                let params = FamilyParams {
                    classes: Some(layers[0].0),
                    class_size: Some(layers[1].0),
                    colors: vec![layers[1].1, layers[0].1],
                    layers,
                    ..FamilyParams::default()
                };
                return done(Family::Multipartite, params, evidence);
            }
            let params = FamilyParams {
                colors,
                layers,
                ..FamilyParams::default()
            };
            done(Family::WreathStable, params, evidence)
        }
        PeelEnd::Stuck => {
            if let Some((kind, (j, k))) = sporadic_match(&terminal) {
                evidence.push((
                    "quotient isomorphism".into(),
                    format!("{kind} quotient after {} layers", layers.len()),
                ));
                let params = FamilyParams {
                    colors: vec![j, k],
                    layers,
                    sporadic: Some(kind),
                    ..FamilyParams::default()
                };
                return done(Family::PentagonRook, params, evidence);
            }
            let term_realized = terminal.realized_colors();
            let term_eqs = detect_equivalences(&terminal);
            let clean = term_eqs
                .iter()
                .all(|r| !(nontrivial(r) && r.colors.iter().all(|c| term_realized.contains(c))));
            if clean && layers.len() == 1 {
                evidence.push((
                    "quotient".into(),
                    format!(
                        "{} equivalence-free classes over colors {:?}",
                        terminal.size(),
                        term_realized
                    ),
                ));
                evidence.push((
                    "class regime".into(),
                    format!(
                        "class size {} against the finite threshold {}",
                        first_class_size, opts.finite_class_threshold
                    ),
                ));
                let family = if first_class_size <= opts.finite_class_threshold {
                    Family::RandomGraphBlowup
                } else {
                    Family::QuotientComplete
                };
                let params = FamilyParams {
                    classes: Some(terminal.size()),
                    class_size: Some(first_class_size),
                    colors: [vec![first_color], term_realized].concat(),
                    layers,
                    ..FamilyParams::default()
                };
                return done(family, params, evidence);
            }
            evidence.push((
                "quotient".into(),
                "terminal quotient is neither sporadic nor an equivalence-free single level".into(),
            ));
            done(Family::Unknown, FamilyParams::default(), evidence)
        }
    }
}

/// One two-color equivalence and no single: accept the complete quotient
/// over random class interiors.
fn classify_complete_quotient(
    g: &NGraph,
    realized: &[Color],
    eq: &EquivalenceReport,
    mut evidence: Vec<(String, String)>,
    done: impl Fn(Family, FamilyParams, Vec<(String, String)>) -> Result<ClassificationLabel>,
) -> Result<ClassificationLabel> {
    let unknown = |mut ev: Vec<(String, String)>, why: String| {
        ev.push(("complete quotient".into(), why));
        done(Family::Unknown, FamilyParams::default(), ev)
    };
    let (s, t) = (eq.colors[0], eq.colors[1]);
    let Some(k) = uniform_class_size(eq) else {
        return unknown(evidence, "classes of unequal size".into());
    };
    if realized.len() != 3 {
        return unknown(evidence, format!("{} realized colors", realized.len()));
    }
    let cross = realized
        .iter()
        .copied()
        .find(|c| *c != s && *c != t)
        .expect("three realized colors");
    if !cross_colors_single(g, &eq.classes) {
        return unknown(evidence, "cross pairs are not single-colored".into());
    }
    for cl in &eq.classes {
        let mut seen = BTreeSet::new();
        for (i, &u) in cl.iter().enumerate() {
            for &v in &cl[i + 1..] {
                seen.insert(g.color(u, v));
            }
        }
        if !(seen.contains(&s) && seen.contains(&t)) {
            return unknown(evidence, "a class interior misses one of its colors".into());
        }
    }
    evidence.push((
        "complete quotient".into(),
        format!(
            "{} classes of size {k}, cross pairs all {}, interiors realize both colors",
            eq.classes.len(),
            g.color_name(cross)
        ),
    ));
    let params = FamilyParams {
        classes: Some(eq.classes.len()),
        class_size: Some(k),
        colors: vec![cross, s, t],
        ..FamilyParams::default()
    };
    done(Family::ClassGeneric, params, evidence)
}

/// No equivalences at all: spot-check every extension demand of weight at
/// most 2 exhaustively.
fn classify_by_extension(
    g: &NGraph,
    opts: &ClassifyOptions,
    realized: &[Color],
    budgets: &Budgets,
    mut evidence: Vec<(String, String)>,
    done: impl Fn(Family, FamilyParams, Vec<(String, String)>) -> Result<ClassificationLabel>,
) -> Result<ClassificationLabel> {
    inconclusive_below(g, opts)?;
    let n = g.color_count();
    let mut demands: Vec<Vec<usize>> = Vec::new();
    for c in 0..n {
        let mut d = vec![0; n];
        d[c] = 1;
        demands.push(d);
    }
    for c in 0..n {
        for d in c..n {
            let mut v = vec![0; n];
            v[c] += 1;
            v[d] += 1;
            demands.push(v);
        }
    }
    demands.retain(|d| {
        d.iter()
            .enumerate()
            .all(|(c, &need)| need == 0 || realized.contains(&(c as Color)))
    });
    let mut checked = 0;
    for demand in &demands {
        let rep = check_extension_axioms(g, demand, budgets, 0)?;
        if !rep.exhaustive || rep.fraction < 1.0 {
            evidence.push((
                "extension axioms".into(),
                format!(
                    "demand {demand:?} satisfied at fraction {:.4} (exhaustive: {})",
                    rep.fraction, rep.exhaustive
                ),
            ));
            return done(Family::Unknown, FamilyParams::default(), evidence);
        }
        checked += 1;
    }
    evidence.push((
        "extension axioms".into(),
        format!("{checked} demand vectors of weight at most 2, all exhaustive at fraction 1"),
    ));
    let params = FamilyParams {
        colors: realized.to_vec(),
        ..FamilyParams::default()
    };
    done(Family::RandomNGraph, params, evidence)
}

/// Renders the detected parameters in the catalog's notation, such as
/// `K_2^T[K_3^S[K_4^R]]` or `B_3^{S,T} [class size 12]`.
pub fn parameter_report(label: &ClassificationLabel) -> Result<String> {
    let name = |c: Color| label.color_names[c as usize].as_str();
    let sup = |cs: &[Color]| cs.iter().map(|&c| name(c)).collect::<Vec<_>>().join(",");
    let nest_layers = |layers: &[(usize, Color)], core: Option<String>| {
        let mut out = core;
        for &(size, c) in layers.iter().rev() {
            let clique = format!("K_{}^{}", size, name(c));
            out = Some(match out {
                None => clique,
                Some(inner) => format!("{clique}[{inner}]"),
            });
        }
        out.expect("at least one layer or a core")
    };
    let p = &label.params;
    match label.family {
        Family::RandomNGraph => Ok(format!("Γ^{{{}}}", sup(&p.colors))),
        Family::RandomGraphBlowup | Family::QuotientComplete => Ok(format!(
            "Γ^{{{}}}[K_{}^{}]",
            sup(&p.colors[1..]),
            p.class_size.unwrap_or(0),
            name(p.colors[0]),
        )),
        Family::ClassGeneric => Ok(format!(
            "K_{}^{}[Γ^{{{}}}]",
            p.classes.unwrap_or(0),
            name(p.colors[0]),
            sup(&p.colors[1..]),
        )),
        Family::Cover => Ok(format!("C(Γ) [{} classes]", p.classes.unwrap_or(0))),
        Family::ClassRandom => Ok(format!(
            "B_{}^{{{}}} [class size {}]",
            p.classes.unwrap_or(0),
            sup(&p.colors[1..]),
            p.class_size.unwrap_or(0),
        )),
        Family::WreathStable => Ok(nest_layers(&p.layers, None)),
        Family::Multipartite => Ok(format!(
            "I_{}[K_{}^{}]",
            p.classes.unwrap_or(0),
            p.class_size.unwrap_or(0),
            name(p.colors[0]),
        )),
        Family::Product => {
            let (m, n) = p.dims.unwrap_or((0, 0));
            Ok(format!(
                "K_{}^{} × K_{}^{}",
                m,
                name(p.colors[0]),
                n,
                name(p.colors[1]),
            ))
        }
        Family::PentagonRook => {
            let base = match p.sporadic.as_deref() {
                Some("pentagon") => "P",
                _ => "Q",
            };
            let core = format!("{base}^{{{}}}", sup(&p.colors));
            if p.layers.is_empty() {
                Ok(core)
            } else {
                Ok(format!("{core}[{}]", nest_layers(&p.layers, None)))
            }
        }
        Family::Unknown => Err(Error::invalid(
            "no parameter report for an unclassified graph",
        )),
    }
}
