use crate::bits::BitWord;
use crate::coloring::{Color, ColoredCompleteGraph};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::witness::Witness;

use super::walk;

/// A path with `k_edges` edges (so `k_edges + 1` vertices).
///
/// Whenever `e(h) > (k_edges - 1) n / 2` such a path exists and is returned;
/// below that threshold the search is still exact.
pub fn erdos_gallai_path<W: BitWord>(h: &SimpleGraph<W>, k_edges: usize) -> Result<Option<Witness>> {
    if k_edges < 2 {
        return Err(Error::BadParameters(format!("k_edges must be at least 2, got {k_edges}")));
    }
    let found = walk::path_of_order(h.rows(), k_edges + 1).map(|vs| Witness::mono_path(None, vs));
    debug_assert!(
        found.is_some() || 2 * h.edge_count() <= (k_edges - 1) * h.n(),
        "edge-count hypothesis holds but no path found"
    );
    Ok(found)
}

/// A red path on `a` vertices or a blue path on `b` vertices, given
/// `d_R(v) + d_B(v) >= a + b - 3` at every vertex.
///
/// Compares the red and blue edge totals: one of them exceeds the
/// corresponding path threshold, and the edge-count path theorem is applied
/// to that color. Edges of any other color count toward neither degree.
/// Orders below 1 are treated as 1, since the single-vertex path contains
/// the empty one.
pub fn colored_path_split<W: BitWord>(
    g: &ColoredCompleteGraph<W>,
    red: Color,
    blue: Color,
    a: usize,
    b: usize,
) -> Result<Witness> {
    if red == blue {
        return Err(Error::BadParameters("red and blue must differ".into()));
    }
    if a + b < 3 {
        return Err(Error::BadParameters(format!("need a + b >= 3, got a = {a}, b = {b}")));
    }
    let n = g.n();
    let required = a + b - 3;
    for v in 0..n {
        let degree = g.degree(red, v) + g.degree(blue, v);
        if degree < required {
            return Err(Error::DegreePreconditionFailed { vertex: v, degree, required });
        }
    }

    let red_twice: usize = (0..n).map(|v| g.degree(red, v)).sum();
    let blue_twice: usize = (0..n).map(|v| g.degree(blue, v)).sum();
    // Average red degree > a - 2  <=>  2 e_R > n (a - 2); same for blue.
    let red_heavy = red_twice as isize > n as isize * (a as isize - 2);
    let blue_heavy = blue_twice as isize > n as isize * (b as isize - 2);
    let (color, order) = if red_heavy {
        (red, a)
    } else if blue_heavy {
        (blue, b)
    } else {
        return Err(Error::HypothesisViolated("neither color class is dense enough".into()));
    };

    let class = g.color_class(color).to_graph();
    let vertices = match order {
        0 | 1 => Some(vec![0]),
        2 => class.edges().next().map(|(u, v)| vec![u, v]),
        _ => erdos_gallai_path(&class, order - 1)?.map(|w| w.vertices),
    };
    let vertices = vertices.ok_or_else(|| Error::HypothesisViolated(format!("dense color {color} has no path")))?;
    Ok(Witness::mono_path(Some(color), vertices))
}
