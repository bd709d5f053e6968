use crate::bits::BitWord;
use crate::coloring::{Color, ColoredCompleteGraph, VertexSubset};
use crate::detect::dirac_hamiltonian;
use crate::error::{Error, Result};
use crate::witness::Witness;

use super::partition::{validate_partition, GallaiPartition};

/// Recolors the small sets `B_1..B_{k-1}` into palette `1..=k`.
///
/// Hypotheses, all checked: `A` and the `B_i` partition the vertices; every
/// edge between `A` and `B_i` has color `i`; `|B_i| <= m - 1`; `A` only uses
/// colors `1..=k`; edges between `B_i` and `B_j` use color `i` or `j`.
/// Inside each `B_i`, edges colored outside `1..k-1` become `k`. Nothing
/// else changes. A recolored edge cannot join a color-`k` cycle longer than
/// `|B_i| < m`, since no edge leaving `B_i` has color `k`.
pub fn recolor_small_parts<W: BitWord>(
    g: &ColoredCompleteGraph<W>,
    a: &VertexSubset<W>,
    bs: &[VertexSubset<W>],
    k: usize,
    m: usize,
) -> Result<ColoredCompleteGraph<W>> {
    let violated = |msg: String| Err(Error::HypothesisViolated(msg));
    if k < 2 || k > Color::MAX as usize {
        return violated(format!("palette size k = {k} must be in 2..=255"));
    }
    if bs.len() != k - 1 {
        return violated(format!("expected {} sets B_i, got {}", k - 1, bs.len()));
    }
    let n = g.n();
    let mut owner = vec![None::<usize>; n];
    for (idx, set) in std::iter::once(a).chain(bs).enumerate() {
        if set.parent_order() != n {
            return violated(format!("set over {} vertices, graph has {n}", set.parent_order()));
        }
        for v in set.iter() {
            if owner[v].replace(idx).is_some() {
                return violated(format!("vertex {v} lies in two sets"));
            }
        }
    }
    if let Some(v) = owner.iter().position(Option::is_none) {
        return violated(format!("vertex {v} lies in no set"));
    }
    for (i, b) in bs.iter().enumerate() {
        if b.len() + 1 > m {
            return violated(format!("|B_{}| = {} exceeds m - 1 = {}", i + 1, b.len(), m.saturating_sub(1)));
        }
    }
    let k = k as Color;
    for (u, v, c) in g.edges() {
        let (ou, ov) = (owner[u].unwrap(), owner[v].unwrap());
        let ok = match (ou, ov) {
            (0, 0) => c <= k,
            (0, i) | (i, 0) => c == i as Color,
            (i, j) if i != j => c == i as Color || c == j as Color,
            _ => true,
        };
        if !ok {
            let where_ = match (ou, ov) {
                (0, 0) => "inside A".to_string(),
                (0, i) | (i, 0) => format!("between A and B_{i}"),
                (i, j) => format!("between B_{i} and B_{j}"),
            };
            return violated(format!("edge {{{u},{v}}} {where_} has color {c}"));
        }
    }

    g.map_colors(k as usize, |u, v, c| {
        let (ou, ov) = (owner[u].unwrap(), owner[v].unwrap());
        if ou == ov && ou != 0 && c >= k {
            k
        } else {
            c
        }
    })
}

/// A monochromatic `C_{2l+1}` in the single between-part color, given that
/// every part has at most `l` vertices.
///
/// On any `2l + 1` vertices each vertex has at most `l - 1` others from its
/// own part, so it sees at least `l + 1` vertices in the between color and
/// the Dirac condition holds there. The first `2l + 1` vertices are used.
pub fn between_parts_cycle<W: BitWord>(
    g: &ColoredCompleteGraph<W>,
    p: &GallaiPartition<W>,
    ell: usize,
) -> Result<Witness> {
    if ell < 2 {
        return Err(Error::HypothesisViolated(format!("l = {ell} must be at least 2")));
    }
    validate_partition(g, p).map_err(|v| Error::InvalidPartition(v.to_string()))?;
    let len = 2 * ell + 1;
    if g.n() < len {
        return Err(Error::HypothesisViolated(format!("need {len} vertices, graph has {}", g.n())));
    }
    let &[color] = p.between_colors() else {
        return Err(Error::HypothesisViolated(format!(
            "expected one between color, found {:?}",
            p.between_colors()
        )));
    };
    if let Some((i, part)) = p.parts().iter().enumerate().find(|(_, s)| s.len() > ell) {
        return Err(Error::HypothesisViolated(format!(
            "part {i} has order {} > l = {ell}",
            part.len()
        )));
    }
    let chosen: Vec<usize> = (0..len).collect();
    let host = g.color_class(color).to_graph().induced(&chosen);
    let cycle = dirac_hamiltonian(&host)?;
    let vertices = cycle.vertices.iter().map(|&i| chosen[i]).collect();
    Ok(Witness::mono_cycle(Some(color), vertices))
}
