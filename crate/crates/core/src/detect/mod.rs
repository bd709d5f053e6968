//! Witness-producing detectors.
//!
//! Every positive answer comes back as a [`Witness`] that can be re-checked
//! with [`Witness::validate`] without trusting the detector.

mod hamilton;
mod paths;
pub(crate) mod walk;

pub use hamilton::dirac_hamiltonian;
pub use paths::{colored_path_split, erdos_gallai_path};

use crate::bits::BitWord;
use crate::coloring::{Color, ColoredCompleteGraph};
use crate::witness::Witness;

/// The lexicographically first rainbow triangle, or `None` for a Gallai
/// coloring.
pub fn find_rainbow_triangle<W: BitWord>(g: &ColoredCompleteGraph<W>) -> Option<Witness> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let c = g.color(u, v);
            // w must avoid c on both sides and then split the remaining two colors.
            let candidates = W::above(v) & g.vertex_mask() & !g.neighbors(c, u) & !g.neighbors(c, v);
            for w in candidates.ones() {
                if g.color(u, w) != g.color(v, w) {
                    return Some(Witness::rainbow_triangle(u, v, w));
                }
            }
        }
    }
    None
}

/// A cycle on exactly `len` vertices in the class of `color`.
pub fn find_mono_cycle<W: BitWord>(g: &ColoredCompleteGraph<W>, color: Color, len: usize) -> Option<Witness> {
    let rows = g.class_rows(color)?;
    walk::cycle_of_length(rows, len).map(|vs| Witness::mono_cycle(Some(color), vs))
}

/// A path on exactly `order` vertices in the class of `color`.
pub fn find_mono_path<W: BitWord>(g: &ColoredCompleteGraph<W>, color: Color, order: usize) -> Option<Witness> {
    if order == 1 {
        return Some(Witness::mono_path(Some(color), vec![0]));
    }
    let rows = g.class_rows(color)?;
    walk::path_of_order(rows, order).map(|vs| Witness::mono_path(Some(color), vs))
}

/// First monochromatic `C_len` over all palette colors, lowest color first.
pub fn find_any_mono_cycle<W: BitWord>(g: &ColoredCompleteGraph<W>, len: usize) -> Option<Witness> {
    (1..=g.palette() as Color).find_map(|c| find_mono_cycle(g, c, len))
}

/// The full sweep for Gallai-Ramsey avoidance: a rainbow triangle, or else a
/// monochromatic `C_len` in any color.
pub fn gallai_ramsey_obstruction<W: BitWord>(g: &ColoredCompleteGraph<W>, len: usize) -> Option<Witness> {
    find_rainbow_triangle(g).or_else(|| find_any_mono_cycle(g, len))
}
