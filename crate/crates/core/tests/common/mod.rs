//! Slow, obviously-correct reference implementations and random inputs.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gallai_lab::constructions::random_gallai;
use gallai_lab::detect::{find_any_mono_cycle, find_rainbow_triangle};
use gallai_lab::{BitWord, Color, ColoredCompleteGraph, Coloring, Graph, Subset};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Adjacency rows of one color class, as plain `u32` masks.
pub fn class_rows<W: BitWord>(g: &ColoredCompleteGraph<W>, color: Color) -> Vec<u32> {
    assert!(g.n() <= 32);
    (0..g.n())
        .map(|u| (0..g.n()).filter(|&v| u != v && g.color(u, v) == color).fold(0u32, |r, v| r | 1 << v))
        .collect()
}

pub fn graph_rows(h: &Graph) -> Vec<u32> {
    (0..h.n())
        .map(|u| (0..h.n()).filter(|&v| h.has_edge(u, v)).fold(0u32, |r, v| r | 1 << v))
        .collect()
}

/// Subset DP: `ends[mask]` holds every `v` such that some path from the
/// minimum of `mask` to `v` visits exactly `mask`. Only masks of at most
/// `len` vertices are expanded.
pub fn has_cycle_dp(rows: &[u32], len: usize) -> bool {
    let n = rows.len();
    assert!(n <= 22, "oracle is exponential");
    if len < 3 || len > n {
        return false;
    }
    let mut ends = vec![0u32; 1 << n];
    for s in 0..n {
        ends[1 << s] = 1 << s;
    }
    for mask in 1usize..1 << n {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        let s = mask.trailing_zeros() as usize;
        if size == len {
            if (0..n).any(|v| e >> v & 1 == 1 && rows[v] >> s & 1 == 1) {
                return true;
            }
            continue;
        }
        for v in (0..n).filter(|&v| e >> v & 1 == 1) {
            for w in (s + 1..n).filter(|&w| rows[v] >> w & 1 == 1 && mask >> w & 1 == 0) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    false
}

/// Number of vertices on a longest path, by subset DP over all start points.
pub fn longest_path_order(rows: &[u32]) -> usize {
    let n = rows.len();
    assert!(n <= 20, "oracle is exponential");
    if n == 0 {
        return 0;
    }
    let mut ends = vec![0u32; 1 << n];
    let mut best = 1;
    for s in 0..n {
        ends[1 << s] = 1 << s;
    }
    for mask in 1usize..1 << n {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        for v in (0..n).filter(|&v| e >> v & 1 == 1) {
            for w in (0..n).filter(|&w| rows[v] >> w & 1 == 1 && mask >> w & 1 == 0) {
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    best
}

/// All triples, checked directly.
pub fn rainbow_triangles<W: BitWord>(g: &ColoredCompleteGraph<W>) -> usize {
    let n = g.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (x, y, z) = (g.color(a, b), g.color(a, c), g.color(b, c));
                if x != y && y != z && x != z {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Every set partition of `0..n`, as block labels per vertex.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(v: usize, n: usize, labels: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if v == n {
            out.push(labels.clone());
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            go(v + 1, n, labels, blocks.max(b + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

/// Is `labels` a partition with at least two blocks, one color between any
/// two blocks and at most two such colors overall?
pub fn is_gallai_partition<W: BitWord>(g: &ColoredCompleteGraph<W>, labels: &[usize]) -> bool {
    let t = labels.iter().max().map_or(0, |&b| b + 1);
    if t < 2 {
        return false;
    }
    let mut pair = vec![0u8; t * t];
    let mut used = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let (a, b) = (labels[u], labels[v]);
            if a == b {
                continue;
            }
            let slot = &mut pair[a.min(b) * t + a.max(b)];
            let c = g.color(u, v);
            if *slot == 0 {
                *slot = c;
                if !used.contains(&c) {
                    used.push(c);
                }
            } else if *slot != c {
                return false;
            }
        }
    }
    used.len() <= 2
}

/// Fewest blocks over all valid partitions, by enumeration.
pub fn min_gallai_parts<W: BitWord>(g: &ColoredCompleteGraph<W>) -> Option<usize> {
    set_partitions(g.n())
        .into_iter()
        .filter(|l| is_gallai_partition(g, l))
        .map(|l| l.iter().max().unwrap() + 1)
        .min()
}

pub fn random_coloring<W: BitWord>(r: &mut impl Rng, n: usize, k: usize) -> ColoredCompleteGraph<W> {
    ColoredCompleteGraph::from_fn(n, k, |_, _| r.gen_range(1..=k as Color)).unwrap()
}

pub fn random_graph(r: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut h = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                h.add_edge(u, v).unwrap();
            }
        }
    }
    h
}

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Size of the automorphism group of a coloring, by trying every permutation.
pub fn automorphisms<W: BitWord>(g: &ColoredCompleteGraph<W>) -> usize {
    permutations(g.n())
        .into_iter()
        .filter(|p| {
            (0..g.n()).all(|u| (u + 1..g.n()).all(|v| g.color(u, v) == g.color(p[u], p[v])))
        })
        .count()
}

/// Is there a bijection of colors taking `a` to `b` vertex for vertex?
pub fn equal_up_to_colors<W: BitWord>(a: &ColoredCompleteGraph<W>, b: &ColoredCompleteGraph<W>) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let mut fwd = [0u8; 256];
    let mut back = [0u8; 256];
    for (u, v, c) in a.edges() {
        let d = b.color(u, v);
        if fwd[c as usize] == 0 && back[d as usize] == 0 {
            fwd[c as usize] = d;
            back[d as usize] = c;
        } else if fwd[c as usize] != d || back[d as usize] != c {
            return false;
        }
    }
    true
}

/// A coloring meeting the recoloring hypotheses, or `None` when the sample
/// happens to contain a monochromatic `C_m` or rainbow triangle.
pub struct RecolorCase {
    pub g: Coloring,
    pub a: Subset,
    pub bs: Vec<Subset>,
    pub k: usize,
    pub m: usize,
}

pub fn recolor_case(r: &mut impl Rng, max_n: usize) -> Option<RecolorCase> {
    use rand::seq::SliceRandom;
    let k = r.gen_range(2..=4);
    let m = r.gen_range(4..=7);
    let a_len = r.gen_range(1..=6);
    let mut sizes = vec![a_len];
    for _ in 1..k {
        sizes.push(r.gen_range(0..m));
    }
    let n: usize = sizes.iter().sum();
    if n > max_n || n < 2 {
        return None;
    }
    let mut owner: Vec<usize> = sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect();
    owner.shuffle(r);
    let slot: Vec<usize> = (0..n).map(|v| owner[..v].iter().filter(|&&o| o == owner[v]).count()).collect();
    let inner: Vec<Coloring> = sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let palette = if i == 0 { k } else { k + 2 };
            random_gallai(s.max(1), palette, r.gen()).unwrap()
        })
        .collect();
    let mut between = vec![0u8; k * k];
    for i in 1..k {
        for j in i + 1..k {
            between[i * k + j] = if r.gen_bool(0.5) { i as Color } else { j as Color };
        }
    }
    let g = Coloring::from_fn(n, k + 2, |u, v| {
        let (ou, ov) = (owner[u], owner[v]);
        match (ou, ov) {
            _ if ou == ov => inner[ou].color(slot[u], slot[v]),
            (0, i) | (i, 0) => i as Color,
            (i, j) => between[i.min(j) * k + i.max(j)],
        }
    })
    .unwrap();
    if find_rainbow_triangle(&g).is_some() || find_any_mono_cycle(&g, m).is_some() {
        return None;
    }
    let set = |i: usize| Subset::new(n, (0..n).filter(|&v| owner[v] == i)).unwrap();
    Some(RecolorCase { a: set(0), bs: (1..k).map(set).collect(), g, k, m })
}
