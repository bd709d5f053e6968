//! Edge colorings of complete graphs.
//!
//! Colors are dense 1-based ids. The authoritative store is the lower triangle
//! in row order (`{j, i}` for `j < i` sits at `i(i-1)/2 + j`), which is also
//! the order of the text format. Per-color adjacency bitsets are derived from
//! it at construction time.

use std::collections::HashMap;

use crate::bits::BitWord;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub type Color = u8;

#[inline]
pub(crate) fn pair_index(u: usize, v: usize) -> usize {
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    hi * (hi - 1) / 2 + lo
}

#[inline]
pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// An edge-colored complete graph `K_n` with palette `1..=palette`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredCompleteGraph<W: BitWord = u64> {
    n: usize,
    palette: Color,
    colors: Vec<Color>,
    adj: Vec<W>,
}

impl<W: BitWord> std::fmt::Debug for ColoredCompleteGraph<W> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ColoredCompleteGraph")
            .field("n", &self.n)
            .field("palette", &self.palette)
            .field("colors", &self.colors)
            .finish()
    }
}

impl<W: BitWord> ColoredCompleteGraph<W> {
    /// Builds a coloring from an explicit pair map. Keys may be given in
    /// either orientation.
    pub fn build(n: usize, palette: usize, map: &HashMap<(usize, usize), Color>) -> Result<Self> {
        let mut colors = vec![0; pair_count(n)];
        for (&(u, v), &c) in map {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::BadParameters(format!("self-pair {{{u},{u}}}")));
            }
            colors[pair_index(u, v)] = c;
        }
        Self::from_lower_triangle(n, palette, colors)
    }

    /// Builds a coloring from `color(u, v)` called once per pair with `u < v`.
    pub fn from_fn(n: usize, palette: usize, mut color: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        let mut colors = Vec::with_capacity(pair_count(n));
        for v in 1..n {
            for u in 0..v {
                colors.push(color(u, v));
            }
        }
        Self::from_lower_triangle(n, palette, colors)
    }

    /// Builds from the row-ordered lower triangle; 0 marks a missing pair.
    pub fn from_lower_triangle(n: usize, palette: usize, colors: Vec<Color>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySubset);
        }
        if n > W::BITS {
            return Err(Error::TooManyVertices { n, max: W::BITS });
        }
        if palette == 0 || palette > Color::MAX as usize {
            return Err(Error::BadPalette(palette));
        }
        if colors.len() != pair_count(n) {
            return Err(Error::BadParameters(format!(
                "expected {} pair colors, got {}",
                pair_count(n),
                colors.len()
            )));
        }
        let palette = palette as Color;
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                let c = colors[idx];
                if c == 0 {
                    return Err(Error::MissingPair(u, v));
                }
                if c > palette {
                    return Err(Error::ColorOutOfRange { u, v, color: c, palette });
                }
                idx += 1;
            }
        }
        let mut g = Self { n, palette, colors, adj: Vec::new() };
        g.rebuild_adjacency();
        Ok(g)
    }

    pub fn monochromatic(n: usize, color: Color, palette: usize) -> Result<Self> {
        Self::from_fn(n, palette, |_, _| color)
    }

    pub fn single_vertex(palette: usize) -> Self {
        Self::from_lower_triangle(1, palette, Vec::new()).expect("one vertex is always valid")
    }

    fn rebuild_adjacency(&mut self) {
        let n = self.n;
        let mut adj = vec![W::zero(); n * self.palette as usize];
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                let base = (self.colors[idx] as usize - 1) * n;
                adj[base + u] = adj[base + u].with(v);
                adj[base + v] = adj[base + v].with(u);
                idx += 1;
            }
        }
        self.adj = adj;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn palette(&self) -> usize {
        self.palette as usize
    }

    /// Color of the pair `{u, v}`. Panics when `u == v`.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        assert!(u != v, "no color on a loop at {u}");
        self.colors[pair_index(u, v)]
    }

    /// Neighbors of `v` in the class of `color`. Colors outside the palette
    /// have empty classes.
    #[inline]
    pub fn neighbors(&self, color: Color, v: usize) -> W {
        if color == 0 || color > self.palette {
            return W::zero();
        }
        self.adj[(color as usize - 1) * self.n + v]
    }

    /// Adjacency rows of one color class; `None` outside the palette.
    pub(crate) fn class_rows(&self, color: Color) -> Option<&[W]> {
        if color == 0 || color > self.palette {
            return None;
        }
        let base = (color as usize - 1) * self.n;
        Some(&self.adj[base..base + self.n])
    }

    pub fn degree(&self, color: Color, v: usize) -> usize {
        self.neighbors(color, v).len()
    }

    pub fn lower_triangle(&self) -> &[Color] {
        &self.colors
    }

    pub fn vertex_mask(&self) -> W {
        W::low_mask(self.n)
    }

    /// Colors that actually occur on some edge, ascending.
    pub fn colors_used(&self) -> Vec<Color> {
        let mut seen = vec![false; self.palette as usize + 1];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        (1..=self.palette).filter(|&c| seen[c as usize]).collect()
    }

    pub fn color_class(&self, color: Color) -> ColorClassView<'_, W> {
        ColorClassView { parent: self, color }
    }

    /// Iterates `(u, v, color)` over pairs with `u < v`, row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        (1..self.n).flat_map(move |v| (0..v).map(move |u| (u, v, self.colors[pair_index(u, v)])))
    }

    /// Same coloring over a larger palette.
    pub fn with_palette(&self, palette: usize) -> Result<Self> {
        Self::from_lower_triangle(self.n, palette, self.colors.clone())
    }

    /// Applies `f` to every edge color.
    pub fn map_colors(&self, palette: usize, mut f: impl FnMut(usize, usize, Color) -> Color) -> Result<Self> {
        Self::from_fn(self.n, palette, |u, v| f(u, v, self.color(u, v)))
    }

    /// The subgraph induced on `s`, relabeled to `0..|s|` in increasing order.
    pub fn induced(&self, s: &VertexSubset<W>) -> Result<Self> {
        if s.n != self.n {
            return Err(Error::BadParameters(format!(
                "subset over {} vertices applied to a graph on {}",
                s.n, self.n
            )));
        }
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        let map: Vec<usize> = s.iter().collect();
        Self::from_fn(map.len(), self.palette as usize, |a, b| self.color(map[a], map[b]))
    }

    /// Blow-up: replaces vertex `i` of `base` by a copy of `parts[i]`. Edges
    /// between copies `i` and `j` take the color of `{i, j}` in `base`.
    pub fn substitute(base: &Self, parts: &[Self]) -> Result<Self> {
        if parts.len() != base.n {
            return Err(Error::ArityMismatch { expected: base.n, got: parts.len() });
        }
        let order: usize = parts.iter().map(|p| p.n).sum();
        if order > W::BITS {
            return Err(Error::TooManyVertices { n: order, max: W::BITS });
        }
        let palette = parts.iter().map(|p| p.palette).chain([base.palette]).max().unwrap_or(1);
        let mut owner = Vec::with_capacity(order);
        for (i, p) in parts.iter().enumerate() {
            for local in 0..p.n {
                owner.push((i, local));
            }
        }
        Self::from_fn(order, palette as usize, |u, v| {
            let (pu, lu) = owner[u];
            let (pv, lv) = owner[v];
            if pu == pv {
                parts[pu].color(lu, lv)
            } else {
                base.color(pu, pv)
            }
        })
    }
}

/// One color class of a coloring, seen as a simple graph on the same vertices.
#[derive(Clone, Copy)]
pub struct ColorClassView<'a, W: BitWord = u64> {
    parent: &'a ColoredCompleteGraph<W>,
    color: Color,
}

impl<'a, W: BitWord> ColorClassView<'a, W> {
    pub fn color(&self) -> Color {
        self.color
    }

    pub fn n(&self) -> usize {
        self.parent.n
    }

    pub fn neighbors(&self, v: usize) -> W {
        self.parent.neighbors(self.color, v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.neighbors(u).has(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn to_graph(&self) -> SimpleGraph<W> {
        SimpleGraph::from_adjacency((0..self.n()).map(|v| self.neighbors(v)).collect())
    }
}

/// A set of vertices of a graph on `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexSubset<W: BitWord = u64> {
    n: usize,
    members: W,
}

impl<W: BitWord> VertexSubset<W> {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n > W::BITS {
            return Err(Error::TooManyVertices { n, max: W::BITS });
        }
        let mut bits = W::zero();
        for v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            bits = bits.with(v);
        }
        Ok(Self { n, members: bits })
    }

    pub fn from_bits(n: usize, members: W) -> Result<Self> {
        if n > W::BITS {
            return Err(Error::TooManyVertices { n, max: W::BITS });
        }
        if !(members & !W::low_mask(n)).is_zero() {
            let vertex = (members & !W::low_mask(n)).lowest().unwrap_or(n);
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(Self { n, members })
    }

    pub fn full(n: usize) -> Self {
        Self { n, members: W::low_mask(n) }
    }

    pub fn parent_order(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> W {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_zero()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.members.has(v)
    }

    pub fn iter(&self) -> crate::bits::Ones<W> {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = ColoredCompleteGraph<u64>;

    fn rainbow_k3() -> G {
        let map = HashMap::from([((0, 1), 1), ((0, 2), 2), ((1, 2), 3)]);
        G::build(3, 3, &map).unwrap()
    }

    #[test]
    fn build_examples() {
        let g = rainbow_k3();
        assert_eq!(g.color(2, 0), 2);
        assert_eq!(g.colors_used(), vec![1, 2, 3]);

        let one = G::build(1, 1, &HashMap::new()).unwrap();
        assert_eq!(one.n(), 1);

        let map = HashMap::from([((0, 1), 1), ((0, 2), 3), ((1, 2), 1)]);
        assert!(matches!(G::build(3, 2, &map), Err(Error::ColorOutOfRange { color: 3, .. })));

        let map = HashMap::from([((0, 1), 1), ((1, 2), 1)]);
        assert_eq!(G::build(3, 2, &map), Err(Error::MissingPair(0, 2)));
    }

    #[test]
    fn palette_may_exceed_used_colors() {
        let g = G::monochromatic(4, 1, 5).unwrap();
        assert_eq!(g.palette(), 5);
        assert_eq!(g.colors_used(), vec![1]);
        assert_eq!(g.color_class(4).edge_count(), 0);
    }

    #[test]
    fn too_many_vertices() {
        assert!(matches!(G::monochromatic(65, 1, 1), Err(Error::TooManyVertices { .. })));
        assert!(ColoredCompleteGraph::<u128>::monochromatic(65, 1, 1).is_ok());
    }

    #[test]
    fn induced_examples() {
        let g = rainbow_k3();
        let h = g.induced(&VertexSubset::new(3, [0, 1]).unwrap()).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.color(0, 1), 1);

        assert_eq!(g.induced(&VertexSubset::full(3)).unwrap(), g);

        let mono = G::monochromatic(6, 1, 1).unwrap();
        let t = mono.induced(&VertexSubset::new(6, [0, 2, 4]).unwrap()).unwrap();
        assert_eq!(t, G::monochromatic(3, 1, 1).unwrap());

        assert_eq!(g.induced(&VertexSubset::new(3, []).unwrap()), Err(Error::EmptySubset));
    }

    #[test]
    fn substitute_examples() {
        let base = G::monochromatic(2, 2, 2).unwrap();
        let tri = G::monochromatic(3, 1, 1).unwrap();
        let g = G::substitute(&base, &[tri.clone(), tri.clone()]).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.palette(), 2);
        assert_eq!(g.color(0, 2), 1);
        assert_eq!(g.color(3, 5), 1);
        assert_eq!(g.color(2, 3), 2);
        assert_eq!(g.color_class(2).edge_count(), 9);

        let k1 = G::single_vertex(1);
        assert_eq!(G::substitute(&k1, &[rainbow_k3()]).unwrap(), rainbow_k3());

        assert_eq!(
            G::substitute(&base, &[tri]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn singleton_substitution_reproduces() {
        let g = rainbow_k3();
        let singles = vec![G::single_vertex(1); 3];
        assert_eq!(G::substitute(&g, &singles).unwrap(), g);
    }

    #[test]
    fn class_views_partition_edges() {
        let g = rainbow_k3();
        let total: usize = (1..=3).map(|c| g.color_class(c).edge_count()).sum();
        assert_eq!(total, 3);
        assert!(g.color_class(3).has_edge(2, 1));
        assert!(!g.color_class(3).has_edge(0, 1));
    }
}
