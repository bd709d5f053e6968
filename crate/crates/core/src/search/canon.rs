//! Canonical labeling of small edge colorings under vertex permutations.
//!
//! Individualization-refinement: the ordered vertex partition is refined by
//! per-cell color-degree signatures until equitable, then the first
//! non-singleton cell is split by individualizing each of its vertices in
//! turn. The canonical code is the smallest lower triangle over all leaves.
//! Automorphisms found between equal leaves prune sibling branches that lie
//! in the same orbit.

use crate::coloring::{pair_index, Color};

/// The lower triangle of a canonically relabeled coloring.
pub type Code = Vec<Color>;

struct Labeler<'a> {
    n: usize,
    k: usize,
    colors: &'a [Color],
    first: Option<(Code, Vec<usize>)>,
    best: Option<(Code, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Labeler<'_> {
    #[inline]
    fn color(&self, u: usize, v: usize) -> Color {
        self.colors[pair_index(u, v)]
    }

    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        let mut cell_of = vec![0usize; self.n];
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i;
                }
            }
            let t = cells.len();
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(self.n);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u8>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig = vec![0u8; t * self.k];
                        for u in 0..self.n {
                            if u != v {
                                sig[cell_of[u] * self.k + self.color(u, v) as usize - 1] += 1;
                            }
                        }
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            let stable = next.len() == cells.len();
            *cells = next;
            if stable {
                return;
            }
        }
    }

    fn code_of(&self, order: &[usize]) -> Code {
        let mut code = Vec::with_capacity(self.colors.len());
        for i in 1..self.n {
            for j in 0..i {
                code.push(self.color(order[i], order[j]));
            }
        }
        code
    }

    /// Maps `from[i] -> to[i]`.
    fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
        let mut g = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            g[a] = b;
        }
        g
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let code = self.code_of(&order);
        match &self.first {
            None => {
                self.first = Some((code.clone(), order.clone()));
            }
            Some((first_code, first_order)) if *first_code == code => {
                let g = Self::automorphism(&order, first_order);
                self.autos.push(g);
                return;
            }
            _ => {}
        }
        match &self.best {
            Some((best_code, best_order)) if *best_code == code => {
                let g = Self::automorphism(&order, best_order);
                self.autos.push(g);
            }
            Some((best_code, _)) if *best_code < code => {}
            _ => self.best = Some((code, order)),
        }
    }

    /// Union-find orbits of `cell` under stored automorphisms fixing `prefix`.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        if explored.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.autos {
            if prefix.iter().any(|&x| g[x] != x) {
                continue;
            }
            for (a, &b) in g.iter().enumerate() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn search(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let members = cells[target].clone();
        let mut explored = Vec::new();
        for &v in &members {
            if self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(members.iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}

/// Canonical code and the relabeling that produces it: vertex `order[i]` of
/// the input becomes vertex `i`.
pub fn canonical_form(n: usize, k: usize, colors: &[Color]) -> (Code, Vec<usize>) {
    debug_assert_eq!(colors.len(), n * n.saturating_sub(1) / 2);
    if n <= 1 {
        return (Vec::new(), (0..n).collect());
    }
    let mut labeler = Labeler { n, k, colors, first: None, best: None, autos: Vec::new() };
    labeler.search(vec![(0..n).collect()], &mut Vec::new());
    labeler.best.expect("search reaches at least one leaf")
}

pub fn canonical_code(n: usize, k: usize, colors: &[Color]) -> Code {
    canonical_form(n, k, colors).0
}
