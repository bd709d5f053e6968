//! Certificates for found substructures, and their independent re-validation.

use serde::{Deserialize, Serialize};

use crate::bits::BitWord;
use crate::coloring::{Color, ColoredCompleteGraph};
use crate::graph::SimpleGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WitnessKind {
    RainbowTriangle,
    MonoCycle,
    MonoPath,
    HamiltonCycle,
}

/// A found substructure. `color` is `None` for rainbow triangles and for
/// structures found in an uncolored host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub color: Option<Color>,
    pub vertices: Vec<usize>,
}

impl Witness {
    pub fn rainbow_triangle(a: usize, b: usize, c: usize) -> Self {
        let mut vertices = vec![a, b, c];
        vertices.sort_unstable();
        Self { kind: WitnessKind::RainbowTriangle, color: None, vertices }
    }

    pub fn mono_cycle(color: Option<Color>, vertices: Vec<usize>) -> Self {
        Self { kind: WitnessKind::MonoCycle, color, vertices: canonical_cycle(vertices) }
    }

    pub fn mono_path(color: Option<Color>, vertices: Vec<usize>) -> Self {
        Self { kind: WitnessKind::MonoPath, color, vertices: canonical_path(vertices) }
    }

    pub fn hamilton_cycle(vertices: Vec<usize>) -> Self {
        Self { kind: WitnessKind::HamiltonCycle, color: None, vertices: canonical_cycle(vertices) }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }

    /// Re-checks the witness against a coloring by reading edge colors
    /// directly. Hamilton cycles need a host simple graph; see
    /// [`Witness::validate_in`].
    pub fn validate<W: BitWord>(&self, g: &ColoredCompleteGraph<W>) -> Result<(), String> {
        self.check_vertices(g.n())?;
        let vs = &self.vertices;
        match self.kind {
            WitnessKind::RainbowTriangle => {
                if vs.len() != 3 {
                    return Err(format!("rainbow triangle with {} vertices", vs.len()));
                }
                let (a, b, c) = (g.color(vs[0], vs[1]), g.color(vs[0], vs[2]), g.color(vs[1], vs[2]));
                if a == b || a == c || b == c {
                    return Err(format!("triangle {vs:?} has colors {a},{b},{c}"));
                }
                Ok(())
            }
            WitnessKind::MonoCycle | WitnessKind::MonoPath => {
                let color = self.color.ok_or("monochromatic witness without a color")?;
                self.check_walk(|u, v| g.color(u, v) == color)
            }
            WitnessKind::HamiltonCycle => Err("Hamilton cycles are validated against a simple graph".into()),
        }
    }

    /// Re-checks a cycle, path or Hamilton cycle against an uncolored host.
    pub fn validate_in<W: BitWord>(&self, h: &SimpleGraph<W>) -> Result<(), String> {
        self.check_vertices(h.n())?;
        match self.kind {
            WitnessKind::RainbowTriangle => Err("rainbow triangles need a coloring".into()),
            WitnessKind::HamiltonCycle if self.vertices.len() != h.n() => Err(format!(
                "Hamilton cycle visits {} of {} vertices",
                self.vertices.len(),
                h.n()
            )),
            _ => self.check_walk(|u, v| h.has_edge(u, v)),
        }
    }

    fn check_vertices(&self, n: usize) -> Result<(), String> {
        let mut seen = vec![false; n];
        for &v in &self.vertices {
            if v >= n {
                return Err(format!("vertex {v} out of range for n = {n}"));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(format!("vertex {v} repeated"));
            }
        }
        Ok(())
    }

    fn check_walk(&self, edge: impl Fn(usize, usize) -> bool) -> Result<(), String> {
        let vs = &self.vertices;
        let closed = matches!(self.kind, WitnessKind::MonoCycle | WitnessKind::HamiltonCycle);
        if closed && vs.len() < 3 {
            return Err(format!("cycle with {} vertices", vs.len()));
        }
        if vs.is_empty() {
            return Err("empty path".into());
        }
        for w in vs.windows(2) {
            if !edge(w[0], w[1]) {
                return Err(format!("missing edge {{{},{}}}", w[0], w[1]));
            }
        }
        if closed && !edge(vs[vs.len() - 1], vs[0]) {
            return Err(format!("missing closing edge {{{},{}}}", vs[vs.len() - 1], vs[0]));
        }
        Ok(())
    }
}

/// Rotates a cycle to start at its minimum vertex and picks the orientation
/// whose second vertex is smaller.
pub fn canonical_cycle(mut vs: Vec<usize>) -> Vec<usize> {
    if vs.len() < 3 {
        return vs;
    }
    let pos = (0..vs.len()).min_by_key(|&i| vs[i]).unwrap_or(0);
    vs.rotate_left(pos);
    if vs[vs.len() - 1] < vs[1] {
        vs[1..].reverse();
    }
    vs
}

/// Orients a path so that it starts at the smaller endpoint.
pub fn canonical_path(mut vs: Vec<usize>) -> Vec<usize> {
    if vs.len() > 1 && vs[vs.len() - 1] < vs[0] {
        vs.reverse();
    }
    vs
}
