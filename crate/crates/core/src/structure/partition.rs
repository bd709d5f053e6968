//! Gallai partitions: vertex partitions whose part pairs are each joined in a
//! single color, with at most two such colors overall.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitWord;
use crate::coloring::{Color, ColoredCompleteGraph, VertexSubset};
use crate::detect::find_rainbow_triangle;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiPartition<W: BitWord = u64> {
    parts: Vec<VertexSubset<W>>,
    between_colors: Vec<Color>,
    pair_colors: BTreeMap<(usize, usize), Color>,
}

/// The first reason a partition fails to be a Gallai partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OrderMismatch { graph: usize, partition: usize },
    EmptyPart(usize),
    Overlap(usize),
    Uncovered(usize),
    TooFewParts,
    MissingPairColor(usize, usize),
    EdgeColor { u: usize, v: usize, expected: Color, found: Color },
    BetweenColorsMismatch { declared: Vec<Color>, actual: Vec<Color> },
    TooManyBetweenColors(Vec<Color>),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OrderMismatch { graph, partition } => {
                write!(f, "partition is over {partition} vertices, graph has {graph}")
            }
            Self::EmptyPart(i) => write!(f, "part {i} is empty"),
            Self::Overlap(v) => write!(f, "vertex {v} lies in two parts"),
            Self::Uncovered(v) => write!(f, "vertex {v} lies in no part"),
            Self::TooFewParts => write!(f, "fewer than two parts"),
            Self::MissingPairColor(i, j) => write!(f, "no color recorded for parts {i} and {j}"),
            Self::EdgeColor { u, v, expected, found } => {
                write!(f, "edge {{{u},{v}}} has color {found}, expected {expected}")
            }
            Self::BetweenColorsMismatch { declared, actual } => {
                write!(f, "between colors declared {declared:?}, used {actual:?}")
            }
            Self::TooManyBetweenColors(cs) => write!(f, "{} colors between parts: {cs:?}", cs.len()),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PartitionJson {
    parts: Vec<Vec<usize>>,
    between_colors: Vec<Color>,
    pair_colors: Vec<[usize; 3]>,
}

impl<W: BitWord> GallaiPartition<W> {
    /// Takes the given fields verbatim; use [`validate_partition`] to check them.
    pub fn from_raw(
        parts: Vec<VertexSubset<W>>,
        between_colors: Vec<Color>,
        pair_colors: BTreeMap<(usize, usize), Color>,
    ) -> Self {
        Self { parts, between_colors, pair_colors }
    }

    /// Sorts `parts` (largest first, then by minimum vertex) and reads each
    /// pair color off one representative edge.
    pub fn from_parts(g: &ColoredCompleteGraph<W>, mut parts: Vec<VertexSubset<W>>) -> Self {
        parts.sort_by_key(|p| (std::cmp::Reverse(p.len()), p.bits().lowest()));
        let reps: Vec<Option<usize>> = parts.iter().map(|p| p.bits().lowest()).collect();
        let mut pair_colors = BTreeMap::new();
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if let (Some(a), Some(b)) = (reps[i], reps[j]) {
                    if a != b {
                        pair_colors.insert((i, j), g.color(a, b));
                    }
                }
            }
        }
        let mut between_colors: Vec<Color> = pair_colors.values().copied().collect();
        between_colors.sort_unstable();
        between_colors.dedup();
        Self { parts, between_colors, pair_colors }
    }

    pub fn parts(&self) -> &[VertexSubset<W>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn between_colors(&self) -> &[Color] {
        &self.between_colors
    }

    pub fn pair_color(&self, i: usize, j: usize) -> Option<Color> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.pair_colors.get(&key).copied()
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.len()).collect()
    }

    pub fn to_json(&self) -> String {
        let json = PartitionJson {
            parts: self.parts.iter().map(|p| p.to_vec()).collect(),
            between_colors: self.between_colors.clone(),
            pair_colors: self.pair_colors.iter().map(|(&(i, j), &c)| [i, j, c as usize]).collect(),
        };
        serde_json::to_string(&json).expect("partition serializes")
    }

    pub fn from_json(n: usize, text: &str) -> Result<Self> {
        let json: PartitionJson =
            serde_json::from_str(text).map_err(|e| Error::InvalidPartition(e.to_string()))?;
        let parts = json
            .parts
            .into_iter()
            .map(|p| VertexSubset::new(n, p))
            .collect::<Result<Vec<_>>>()?;
        let mut pair_colors = BTreeMap::new();
        for [i, j, c] in json.pair_colors {
            let c = Color::try_from(c).map_err(|_| Error::InvalidPartition(format!("bad color {c}")))?;
            pair_colors.insert((i.min(j), i.max(j)), c);
        }
        Ok(Self { parts, between_colors: json.between_colors, pair_colors })
    }

    /// Inverse of splitting `g` along this partition: substitutes `parts`
    /// into `reduced` and moves every vertex back to its original label.
    pub fn reconstruct(
        &self,
        reduced: &ColoredCompleteGraph<W>,
        parts: &[ColoredCompleteGraph<W>],
    ) -> Result<ColoredCompleteGraph<W>> {
        let blown = ColoredCompleteGraph::substitute(reduced, parts)?;
        let labels: Vec<usize> = self.parts.iter().flat_map(|p| p.iter()).collect();
        if labels.len() != blown.n() {
            return Err(Error::ArityMismatch { expected: labels.len(), got: blown.n() });
        }
        let mut position = vec![0; labels.len()];
        for (i, &v) in labels.iter().enumerate() {
            position[v] = i;
        }
        ColoredCompleteGraph::from_fn(blown.n(), blown.palette(), |u, v| blown.color(position[u], position[v]))
    }
}

pub fn validate_partition<W: BitWord>(g: &ColoredCompleteGraph<W>, p: &GallaiPartition<W>) -> Result<(), Violation> {
    let n = g.n();
    let mut covered = W::zero();
    for (i, part) in p.parts.iter().enumerate() {
        if part.parent_order() != n {
            return Err(Violation::OrderMismatch { graph: n, partition: part.parent_order() });
        }
        if part.is_empty() {
            return Err(Violation::EmptyPart(i));
        }
        if let Some(v) = (covered & part.bits()).lowest() {
            return Err(Violation::Overlap(v));
        }
        covered = covered | part.bits();
    }
    if let Some(v) = (g.vertex_mask() & !covered).lowest() {
        return Err(Violation::Uncovered(v));
    }
    if n >= 2 && p.parts.len() < 2 {
        return Err(Violation::TooFewParts);
    }
    let mut used = Vec::new();
    for i in 0..p.parts.len() {
        for j in i + 1..p.parts.len() {
            let expected = p.pair_colors.get(&(i, j)).copied().ok_or(Violation::MissingPairColor(i, j))?;
            for u in p.parts[i].iter() {
                let off = p.parts[j].bits() & !g.neighbors(expected, u);
                if let Some(v) = off.lowest() {
                    return Err(Violation::EdgeColor {
                        u: u.min(v),
                        v: u.max(v),
                        expected,
                        found: g.color(u, v),
                    });
                }
            }
            used.push(expected);
        }
    }
    used.sort_unstable();
    used.dedup();
    if used.len() > 2 {
        return Err(Violation::TooManyBetweenColors(used));
    }
    let mut declared = p.between_colors.clone();
    declared.sort_unstable();
    declared.dedup();
    if declared != used {
        return Err(Violation::BetweenColorsMismatch { declared: p.between_colors.clone(), actual: used });
    }
    Ok(())
}

/// Color of the edges between blocks `x` and `y` if they all agree.
fn uniform_color<W: BitWord>(g: &ColoredCompleteGraph<W>, x: W, y: W) -> Option<Color> {
    let (a, b) = (x.lowest()?, y.lowest()?);
    let c = g.color(a, b);
    x.ones().all(|u| (y & !g.neighbors(c, u)).is_zero()).then_some(c)
}

/// Finest partition with pairwise-uniform blocks whose between colors lie in
/// `allowed`: components of the other color classes, merged while some
/// block pair is not uniform.
fn finest_for<W: BitWord>(g: &ColoredCompleteGraph<W>, allowed: &[Color]) -> Vec<W> {
    let n = g.n();
    let others: Vec<Color> = (1..=g.palette() as Color).filter(|c| !allowed.contains(c)).collect();
    let mut blocks = Vec::new();
    let mut left = g.vertex_mask();
    while let Some(v) = left.lowest() {
        let mut comp = W::bit(v);
        let mut frontier = comp;
        while !frontier.is_zero() {
            let mut next = W::zero();
            for u in frontier.ones() {
                for &c in &others {
                    next = next | g.neighbors(c, u);
                }
            }
            next = next & !comp;
            comp = comp | next;
            frontier = next;
        }
        blocks.push(comp);
        left = left & !comp;
    }
    debug_assert!(blocks.iter().map(|b| b.len()).sum::<usize>() == n);

    'merge: loop {
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if uniform_color(g, blocks[i], blocks[j]).is_none() {
                    let bj = blocks.remove(j);
                    blocks[i] = blocks[i] | bj;
                    continue 'merge;
                }
            }
        }
        return blocks;
    }
}

/// Merges block pairs that see every other block in the same color, while
/// more than two blocks remain.
fn coarsen<W: BitWord>(g: &ColoredCompleteGraph<W>, mut blocks: Vec<W>) -> Vec<W> {
    'merge: while blocks.len() > 2 {
        let t = blocks.len();
        let color = |i: usize, j: usize| g.color(blocks[i].lowest().unwrap(), blocks[j].lowest().unwrap());
        for i in 0..t {
            for j in i + 1..t {
                if (0..t).filter(|&z| z != i && z != j).all(|z| color(i, z) == color(j, z)) {
                    let bj = blocks.remove(j);
                    blocks[i] = blocks[i] | bj;
                    continue 'merge;
                }
            }
        }
        break;
    }
    blocks
}

/// Finds a Gallai partition of a rainbow-triangle-free coloring.
///
/// Every candidate set of at most two between colors is tried; the other
/// color classes must stay inside parts, so their components are merged
/// until all block pairs are uniform. With `coarsest`, blocks with identical
/// color profiles are merged until no pair merge stays valid. Among
/// candidates the one with fewest parts wins, ties going to the earliest.
pub fn gallai_partition<W: BitWord>(g: &ColoredCompleteGraph<W>, coarsest: bool) -> Result<GallaiPartition<W>> {
    if g.n() < 2 {
        return Err(Error::BadParameters("a Gallai partition needs at least 2 vertices".into()));
    }
    if let Some(w) = find_rainbow_triangle(g) {
        return Err(Error::NotGallai(w));
    }
    let used = g.colors_used();
    let mut candidates: Vec<Vec<Color>> = used.iter().map(|&a| vec![a]).collect();
    for (i, &a) in used.iter().enumerate() {
        for &b in &used[i + 1..] {
            candidates.push(vec![a, b]);
        }
    }

    let mut best: Option<Vec<W>> = None;
    for allowed in &candidates {
        let mut blocks = finest_for(g, allowed);
        if blocks.len() < 2 {
            continue;
        }
        if coarsest {
            blocks = coarsen(g, blocks);
        }
        if best.as_ref().is_none_or(|b| blocks.len() < b.len()) {
            best = Some(blocks);
        }
    }
    let blocks = best.ok_or_else(|| Error::InvalidPartition("no candidate color pair splits the graph".into()))?;
    let parts = blocks
        .into_iter()
        .map(|b| VertexSubset::from_bits(g.n(), b))
        .collect::<Result<Vec<_>>>()?;
    let p = GallaiPartition::from_parts(g, parts);
    debug_assert_eq!(validate_partition(g, &p), Ok(()));
    Ok(p)
}

/// The coloring on one vertex per part, colored by the part pair colors.
pub fn reduced_graph<W: BitWord>(g: &ColoredCompleteGraph<W>, p: &GallaiPartition<W>) -> Result<ColoredCompleteGraph<W>> {
    validate_partition(g, p).map_err(|v| Error::InvalidPartition(v.to_string()))?;
    let t = p.parts.len();
    ColoredCompleteGraph::from_fn(t, g.palette(), |i, j| p.pair_colors[&(i, j)])
}

/// The colorings induced on each part, in part order.
pub fn induced_parts<W: BitWord>(g: &ColoredCompleteGraph<W>, p: &GallaiPartition<W>) -> Result<Vec<ColoredCompleteGraph<W>>> {
    p.parts.iter().map(|s| g.induced(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    type G = ColoredCompleteGraph<u64>;

    fn subsets(n: usize, parts: &[&[usize]]) -> Vec<VertexSubset<u64>> {
        parts.iter().map(|p| VertexSubset::new(n, p.iter().copied()).unwrap()).collect()
    }

    #[test]
    fn validate_examples() {
        let k4 = G::monochromatic(4, 1, 1).unwrap();
        let p = GallaiPartition::from_parts(&k4, subsets(4, &[&[0, 1], &[2, 3]]));
        assert_eq!(validate_partition(&k4, &p), Ok(()));
        assert_eq!(p.between_colors(), &[1]);

        let map = HashMap::from([((0, 1), 1), ((0, 2), 2), ((1, 2), 3)]);
        let rainbow = G::build(3, 3, &map).unwrap();
        let p = GallaiPartition::from_parts(&rainbow, subsets(3, &[&[0], &[1], &[2]]));
        assert_eq!(validate_partition(&rainbow, &p), Err(Violation::TooManyBetweenColors(vec![1, 2, 3])));
    }

    #[test]
    fn validate_catches_bad_edges_and_cover() {
        let g = G::from_fn(4, 2, |u, v| if (u, v) == (0, 2) { 2 } else { 1 }).unwrap();
        let p = GallaiPartition::from_parts(&g, subsets(4, &[&[0, 1], &[2, 3]]));
        assert!(matches!(validate_partition(&g, &p), Err(Violation::EdgeColor { .. })));
        let p = GallaiPartition::from_parts(&g, subsets(4, &[&[0, 1], &[2]]));
        assert_eq!(validate_partition(&g, &p), Err(Violation::Uncovered(3)));
        let p = GallaiPartition::from_parts(&g, subsets(4, &[&[0, 1, 2, 3]]));
        assert_eq!(validate_partition(&g, &p), Err(Violation::TooFewParts));
    }

    #[test]
    fn monochromatic_clique_coarsest_has_two_parts() {
        let k5 = G::monochromatic(5, 1, 1).unwrap();
        let p = gallai_partition(&k5, true).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.part_sizes(), vec![4, 1]);
        let fine = gallai_partition(&k5, false).unwrap();
        assert_eq!(fine.len(), 5);
    }

    #[test]
    fn rainbow_is_rejected() {
        let map = HashMap::from([((0, 1), 1), ((0, 2), 2), ((1, 2), 3)]);
        let rainbow = G::build(3, 3, &map).unwrap();
        assert!(matches!(gallai_partition(&rainbow, true), Err(Error::NotGallai(_))));
    }

    #[test]
    fn two_joined_triangles() {
        let base = G::monochromatic(2, 2, 2).unwrap();
        let tri = G::monochromatic(3, 1, 1).unwrap();
        let g = G::substitute(&base, &[tri.clone(), tri]).unwrap();
        let p = gallai_partition(&g, true).unwrap();
        assert_eq!(p.part_sizes(), vec![3, 3]);
        assert_eq!(p.between_colors(), &[2]);
        let reduced = reduced_graph(&g, &p).unwrap();
        assert_eq!(reduced, G::monochromatic(2, 2, 2).unwrap());
        let parts = induced_parts(&g, &p).unwrap();
        assert_eq!(p.reconstruct(&reduced, &parts).unwrap(), g);
    }

    #[test]
    fn singleton_partition_of_two_colored_graph() {
        let g = G::from_fn(5, 2, |u, v| if (u + v) % 2 == 0 { 1 } else { 2 }).unwrap();
        let singles: Vec<_> = (0..5).map(|v| VertexSubset::new(5, [v]).unwrap()).collect();
        let p = GallaiPartition::from_parts(&g, singles);
        assert_eq!(validate_partition(&g, &p), Ok(()));
        assert_eq!(reduced_graph(&g, &p).unwrap(), g);
    }

    #[test]
    fn json_roundtrip() {
        let k4 = G::monochromatic(4, 1, 1).unwrap();
        let p = GallaiPartition::from_parts(&k4, subsets(4, &[&[0, 1], &[2, 3]]));
        let text = p.to_json();
        assert_eq!(text, r#"{"parts":[[0,1],[2,3]],"between_colors":[1],"pair_colors":[[0,1,1]]}"#);
        assert_eq!(GallaiPartition::from_json(4, &text).unwrap(), p);
    }
}
