//! Exact-length cycle and path search over bitset adjacency rows.
//!
//! Depth-first extension with two cuts: the vertices still reachable from the
//! current end must be able to supply the missing length (and, for cycles,
//! touch the start again), and failed `(visited, end)` states are remembered.
//! Odd cycles additionally skip starts whose component is bipartite.

use std::collections::HashSet;

use crate::bits::BitWord;

const MEMO_CAP: usize = 1 << 20;

fn reach<W: BitWord>(adj: &[W], start: usize, within: W) -> W {
    let mut seen = W::bit(start);
    let mut frontier = seen;
    while !frontier.is_zero() {
        let mut next = W::zero();
        for v in frontier.ones() {
            next = next | adj[v];
        }
        next = next & within & !seen;
        seen = seen | next;
        frontier = next;
    }
    seen
}

fn is_bipartite<W: BitWord>(adj: &[W], component: W) -> bool {
    let Some(root) = component.lowest() else {
        return true;
    };
    let mut side = [W::bit(root), W::zero()];
    let mut seen = side[0];
    let mut frontier = side[0];
    let mut parity = 0;
    while !frontier.is_zero() {
        let mut next = W::zero();
        for v in frontier.ones() {
            next = next | adj[v];
        }
        next = next & component & !seen;
        parity ^= 1;
        side[parity] = side[parity] | next;
        seen = seen | next;
        frontier = next;
    }
    side.iter().all(|&s| s.ones().all(|v| (adj[v] & s).is_zero()))
}

struct CycleDfs<'a, W: BitWord> {
    adj: &'a [W],
    start: usize,
    allowed: W,
    len: usize,
    path: Vec<usize>,
    dead: HashSet<(W, usize)>,
}

impl<W: BitWord> CycleDfs<'_, W> {
    fn extend(&mut self, visited: W, end: usize) -> bool {
        let have = self.path.len();
        if have == self.len {
            return self.adj[end].has(self.start);
        }
        let missing = self.len - have;
        let free = self.allowed & !visited;
        let reachable = reach(self.adj, end, free).without(end);
        if reachable.len() < missing || (reachable & self.adj[self.start]).is_zero() {
            return false;
        }
        if have >= 3 && self.dead.contains(&(visited, end)) {
            return false;
        }
        let mut candidates = self.adj[end] & free;
        if missing == 1 {
            candidates = candidates & self.adj[self.start];
        }
        for next in candidates.ones() {
            self.path.push(next);
            if self.extend(visited.with(next), next) {
                return true;
            }
            self.path.pop();
        }
        if have >= 3 && self.dead.len() < MEMO_CAP {
            self.dead.insert((visited, end));
        }
        false
    }
}

fn cycle_from<W: BitWord>(adj: &[W], start: usize, allowed: W, len: usize) -> Option<Vec<usize>> {
    let component = reach(adj, start, allowed);
    if component.len() < len {
        return None;
    }
    if len % 2 == 1 && is_bipartite(adj, component) {
        return None;
    }
    let mut dfs = CycleDfs {
        adj,
        start,
        allowed: component,
        len,
        path: vec![start],
        dead: HashSet::new(),
    };
    dfs.extend(W::bit(start), start).then_some(dfs.path)
}

/// A cycle on exactly `len` vertices, whose minimum vertex is as small as
/// possible. Vertices in the returned order, starting at that minimum.
pub(crate) fn cycle_of_length<W: BitWord>(adj: &[W], len: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if len < 3 || len > n {
        return None;
    }
    let all = W::low_mask(n);
    (0..=n - len).find_map(|s| cycle_from(adj, s, all & !W::low_mask(s), len))
}

struct PathDfs<'a, W: BitWord> {
    adj: &'a [W],
    allowed: W,
    order: usize,
    path: Vec<usize>,
    dead: HashSet<(W, usize)>,
}

impl<W: BitWord> PathDfs<'_, W> {
    fn extend(&mut self, visited: W, end: usize) -> bool {
        let have = self.path.len();
        if have == self.order {
            return true;
        }
        let missing = self.order - have;
        let free = self.allowed & !visited;
        if reach(self.adj, end, free).len() - 1 < missing {
            return false;
        }
        if have >= 3 && self.dead.contains(&(visited, end)) {
            return false;
        }
        for next in (self.adj[end] & free).ones() {
            self.path.push(next);
            if self.extend(visited.with(next), next) {
                return true;
            }
            self.path.pop();
        }
        if have >= 3 && self.dead.len() < MEMO_CAP {
            self.dead.insert((visited, end));
        }
        false
    }
}

/// A path on exactly `order` vertices, found from the lowest start that has one.
pub(crate) fn path_of_order<W: BitWord>(adj: &[W], order: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if order == 0 || order > n {
        return None;
    }
    let all = W::low_mask(n);
    for s in 0..n {
        let component = reach(adj, s, all);
        if component.len() < order {
            continue;
        }
        let mut dfs = PathDfs {
            adj,
            allowed: component,
            order,
            path: vec![s],
            dead: HashSet::new(),
        };
        if dfs.extend(W::bit(s), s) {
            return Some(dfs.path);
        }
    }
    None
}
