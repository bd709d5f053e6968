//! Extremal colorings, random Gallai colorings and closed-form bounds.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::BitWord;
use crate::coloring::{Color, ColoredCompleteGraph};
use crate::detect::{find_mono_cycle, find_rainbow_triangle};
use crate::error::{Error, Result};
use crate::format::RECIPE_PREFIX;
use crate::witness::Witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RecipeKind {
    OddCycleExtremal,
    RamseyCycleLower,
    RandomSubstitution,
}

/// A structure the generated coloring is claimed to avoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "structure")]
pub enum Claim {
    RainbowTriangle,
    MonoCycle { order: usize, colors: Vec<Color> },
}

/// How a coloring was generated and what it should satisfy. The claims are
/// re-checked by the detectors, never taken on trust.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRecipe {
    pub kind: RecipeKind,
    pub params: BTreeMap<String, u64>,
    pub expected_order: usize,
    pub expected_properties: Vec<Claim>,
    pub steps: Vec<String>,
}

impl ConstructionRecipe {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("recipe serializes")
    }

    /// The recipe as a comment line for the coloring text format.
    pub fn to_comment(&self) -> String {
        format!("{RECIPE_PREFIX}{}", self.to_json())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::BadParameters(format!("recipe: {e}")))
    }

    /// Checks the order and every claim against `g`. On failure returns the
    /// witness that breaks a claim, or `None` for an order mismatch.
    pub fn verify<W: BitWord>(&self, g: &ColoredCompleteGraph<W>) -> std::result::Result<(), Option<Witness>> {
        if g.n() != self.expected_order {
            return Err(None);
        }
        for claim in &self.expected_properties {
            let found = match claim {
                Claim::RainbowTriangle => find_rainbow_triangle(g),
                Claim::MonoCycle { order, colors } => colors.iter().find_map(|&c| find_mono_cycle(g, c, *order)),
            };
            if let Some(w) = found {
                return Err(Some(w));
            }
        }
        Ok(())
    }
}

/// The doubling construction avoiding rainbow triangles and monochromatic
/// `C_{2l+1}` on `l * 2^k` vertices.
///
/// Level 1 is a color-1 clique on `2l` vertices. Level `i` joins two copies
/// of level `i - 1` completely in color `i`. Color `i >= 2` is then a
/// disjoint union of complete bipartite graphs and color 1 has components of
/// order `2l`, so no color holds an odd cycle of length `2l + 1`.
pub fn build_extremal_odd<W: BitWord>(ell: usize, k: usize) -> Result<(ColoredCompleteGraph<W>, ConstructionRecipe)> {
    if ell < 2 || k < 1 {
        return Err(Error::BadParameters(format!("need l >= 2 and k >= 1, got l = {ell}, k = {k}")));
    }
    if k > Color::MAX as usize {
        return Err(Error::BadPalette(k));
    }
    let order = 1usize
        .checked_shl(k as u32)
        .and_then(|p| p.checked_mul(ell))
        .unwrap_or(usize::MAX);
    if order > W::BITS {
        return Err(Error::SizeLimitExceeded { order, max: W::BITS });
    }

    let mut steps = vec![format!("level 1: clique K_{} in color 1", 2 * ell)];
    let mut g = ColoredCompleteGraph::<W>::monochromatic(2 * ell, 1, k)?;
    for level in 2..=k {
        let base = ColoredCompleteGraph::monochromatic(2, level as Color, k)?;
        g = ColoredCompleteGraph::substitute(&base, &[g.clone(), g])?;
        steps.push(format!("level {level}: two copies of level {} joined in color {level}", level - 1));
    }
    let recipe = ConstructionRecipe {
        kind: RecipeKind::OddCycleExtremal,
        params: BTreeMap::from([("ell".into(), ell as u64), ("k".into(), k as u64)]),
        expected_order: order,
        expected_properties: vec![
            Claim::RainbowTriangle,
            Claim::MonoCycle { order: 2 * ell + 1, colors: (1..=k as Color).collect() },
        ],
        steps,
    };
    Ok((g, recipe))
}

/// Two color-2 cliques of order `n - 1` joined completely in color 1. Color 1
/// is bipartite, so it has no odd `C_m`; color-2 components are too small for
/// `C_n`. Certifies `R(C_m, C_n) >= 2n - 1` for odd `m`.
pub fn build_ramsey_cycle_lower<W: BitWord>(m: usize, n: usize) -> Result<(ColoredCompleteGraph<W>, ConstructionRecipe)> {
    if m.is_multiple_of(2) || m < 5 || m > n {
        return Err(Error::BadParameters(format!("need odd m with 5 <= m <= n, got m = {m}, n = {n}")));
    }
    let order = 2 * n - 2;
    if order > W::BITS {
        return Err(Error::SizeLimitExceeded { order, max: W::BITS });
    }
    let half = n - 1;
    let g = ColoredCompleteGraph::<W>::from_fn(order, 2, |u, v| if (u < half) == (v < half) { 2 } else { 1 })?;
    let recipe = ConstructionRecipe {
        kind: RecipeKind::RamseyCycleLower,
        params: BTreeMap::from([("m".into(), m as u64), ("n".into(), n as u64)]),
        expected_order: order,
        expected_properties: vec![
            Claim::MonoCycle { order: m, colors: vec![1] },
            Claim::MonoCycle { order: n, colors: vec![2] },
        ],
        steps: vec![format!("two color-2 cliques K_{half} joined in color 1")],
    };
    Ok((g, recipe))
}

/// A rainbow-triangle-free coloring built by random nested substitution:
/// each level splits the vertex range into 2 to 4 blocks joined by a random
/// base coloring that uses at most two colors. Deterministic per seed.
pub fn random_gallai<W: BitWord>(n: usize, k: usize, seed: u64) -> Result<ColoredCompleteGraph<W>> {
    if n == 0 {
        return Err(Error::EmptySubset);
    }
    if n > W::BITS {
        return Err(Error::TooManyVertices { n, max: W::BITS });
    }
    if k == 0 || k > Color::MAX as usize {
        return Err(Error::BadPalette(k));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_substitution(n, k, &mut rng)
}

fn random_substitution<W: BitWord>(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Result<ColoredCompleteGraph<W>> {
    if n == 1 {
        return Ok(ColoredCompleteGraph::single_vertex(k));
    }
    if k == 1 {
        return ColoredCompleteGraph::monochromatic(n, 1, 1);
    }
    let t = rng.gen_range(2..=n.min(4));
    let mut cuts: Vec<usize> = sample(rng, n - 1, t - 1).into_iter().map(|c| c + 1).collect();
    cuts.sort_unstable();
    cuts.push(n);
    let mut sizes = Vec::with_capacity(t);
    let mut prev = 0;
    for c in cuts {
        sizes.push(c - prev);
        prev = c;
    }

    let a = rng.gen_range(1..=k) as Color;
    let b = if rng.gen_bool(0.5) {
        a
    } else {
        let other = rng.gen_range(1..k) as Color;
        if other >= a {
            other + 1
        } else {
            other
        }
    };
    let base = ColoredCompleteGraph::from_fn(t, k, |_, _| if rng.gen_bool(0.5) { a } else { b })?;
    let parts = sizes
        .into_iter()
        .map(|s| random_substitution(s, k, rng))
        .collect::<Result<Vec<_>>>()?;
    ColoredCompleteGraph::substitute(&base, &parts)
}

/// Known bounds `((n-1)k + n + 1, (n-1)k + 3n)` on `gr_k(K_3 : C_{2n})`.
pub fn even_cycle_bounds(n: usize, k: usize) -> (usize, usize) {
    ((n - 1) * k + n + 1, (n - 1) * k + 3 * n)
}

/// Closed form for the two-color cycle Ramsey number `R(C_m, C_n)` with
/// `m <= n`, or `None` outside the covered range.
pub fn ramsey_formula(m: usize, n: usize) -> Option<usize> {
    if m < 3 || m > n {
        return None;
    }
    match (m % 2 == 1, n % 2 == 1) {
        (true, _) if (m, n) != (3, 3) => Some(2 * n - 1),
        (false, false) if m >= 4 && (m, n) != (4, 4) => Some(n - 1 + m / 2),
        (false, true) if m >= 4 && m < n => Some((n - 1 + m / 2).max(2 * m - 1)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::find_any_mono_cycle;
    use crate::format;

    type G = ColoredCompleteGraph<u64>;

    #[test]
    fn extremal_k1_is_clique() {
        let (g, recipe) = build_extremal_odd::<u64>(3, 1).unwrap();
        assert_eq!(g, G::monochromatic(6, 1, 1).unwrap());
        assert_eq!(recipe.verify(&g), Ok(()));
    }

    #[test]
    fn extremal_k2_structure() {
        let (g, recipe) = build_extremal_odd::<u64>(3, 2).unwrap();
        assert_eq!(g.n(), 12);
        for u in 0..12 {
            for v in u + 1..12 {
                let expected = if (u < 6) == (v < 6) { 1 } else { 2 };
                assert_eq!(g.color(u, v), expected);
            }
        }
        assert_eq!(find_rainbow_triangle(&g), None);
        assert_eq!(find_any_mono_cycle(&g, 7), None);
        assert_eq!(recipe.verify(&g), Ok(()));
    }

    #[test]
    fn extremal_orders_and_limits() {
        let (g, _) = build_extremal_odd::<u128>(5, 3).unwrap();
        assert_eq!(g.n(), 40);
        assert_eq!(
            build_extremal_odd::<u64>(3, 9).unwrap_err(),
            Error::SizeLimitExceeded { order: 1536, max: 64 }
        );
        assert!(build_extremal_odd::<u128>(5, 4).is_ok());
        assert!(matches!(build_extremal_odd::<u64>(3, 200), Err(Error::SizeLimitExceeded { .. })));
    }

    #[test]
    fn ramsey_lower_examples() {
        let (g, recipe) = build_ramsey_cycle_lower::<u64>(5, 5).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.color_class(2).edge_count(), 12);
        assert_eq!(g.color_class(1).edge_count(), 16);
        assert_eq!(recipe.verify(&g), Ok(()));
        let (g, recipe) = build_ramsey_cycle_lower::<u64>(5, 7).unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(recipe.verify(&g), Ok(()));
        assert!(matches!(build_ramsey_cycle_lower::<u64>(6, 7), Err(Error::BadParameters(_))));
    }

    #[test]
    fn recipe_catches_false_claims() {
        let (_, recipe) = build_extremal_odd::<u64>(3, 1).unwrap();
        let k7 = G::monochromatic(7, 1, 1).unwrap();
        assert_eq!(recipe.verify(&k7), Err(None));
        let mut recipe = recipe;
        recipe.expected_order = 7;
        assert!(matches!(recipe.verify(&k7), Err(Some(_))));
    }

    #[test]
    fn recipe_comment_roundtrip() {
        let (g, recipe) = build_extremal_odd::<u64>(3, 2).unwrap();
        let text = format::to_text_with_comments(&g, &[recipe.to_comment()]);
        let lines = format::recipe_lines(&text);
        assert_eq!(ConstructionRecipe::from_json(lines[0]).unwrap(), recipe);
        assert_eq!(format::parse::<u64>(&text).unwrap(), g);
    }

    #[test]
    fn random_gallai_examples() {
        for seed in 0..5 {
            assert_eq!(random_gallai::<u64>(9, 1, seed).unwrap(), G::monochromatic(9, 1, 1).unwrap());
        }
        assert_eq!(random_gallai::<u64>(1, 3, 7).unwrap().n(), 1);
        let g = random_gallai::<u64>(30, 4, 42).unwrap();
        assert_eq!(g.n(), 30);
        assert_eq!(find_rainbow_triangle(&g), None);
        assert_eq!(random_gallai::<u64>(30, 4, 42).unwrap(), g);
    }

    #[test]
    fn bounds() {
        assert_eq!(even_cycle_bounds(2, 1), (4, 7));
        assert_eq!(even_cycle_bounds(5, 4), (22, 31));
        for ell in 3..12 {
            assert_eq!(even_cycle_bounds(ell - 1, 3).1, 6 * ell - 9);
        }
        assert_eq!(ramsey_formula(5, 5), Some(9));
        assert_eq!(ramsey_formula(4, 5), Some(7));
        assert_eq!(ramsey_formula(3, 3), None);
        assert_eq!(ramsey_formula(4, 4), None);
        assert_eq!(ramsey_formula(4, 6), Some(7));
        assert_eq!(ramsey_formula(3, 4), Some(7));
        assert_eq!(ramsey_formula(6, 4), None);
    }
}
