use crate::bits::BitWord;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::witness::Witness;

/// Builds a Hamilton cycle in a graph with minimum degree at least `n/2`.
///
/// Rotation-extension: grow a path until both ends have all their neighbors
/// on it, close it into a cycle through a crossing pair `v0 ~ v(i+1)`,
/// `vk ~ v(i)`, then reopen the cycle at a vertex with an outside neighbor
/// and repeat. Each round adds a vertex, so at most `n` rounds run.
pub fn dirac_hamiltonian<W: BitWord>(h: &SimpleGraph<W>) -> Result<Witness> {
    let n = h.n();
    if n < 3 {
        return Err(Error::BadParameters(format!("Dirac needs at least 3 vertices, got {n}")));
    }
    if let Some(vertex) = (0..n).find(|&v| 2 * h.degree(v) < n) {
        return Err(Error::DiracPreconditionFailed { vertex, degree: h.degree(vertex), n });
    }

    let adj = h.rows();
    let mut path = vec![0usize];
    let mut on_path = W::bit(0);
    loop {
        loop {
            let last = path[path.len() - 1];
            if let Some(w) = (adj[last] & !on_path).lowest() {
                path.push(w);
                on_path = on_path.with(w);
            } else if let Some(w) = (adj[path[0]] & !on_path).lowest() {
                path.insert(0, w);
                on_path = on_path.with(w);
            } else {
                break;
            }
        }

        let cycle = close_path(adj, path).ok_or_else(|| {
            Error::HypothesisViolated("maximal path has no crossing pair".into())
        })?;
        if cycle.len() == n {
            return Ok(Witness::hamilton_cycle(cycle));
        }

        // Min degree >= n/2 makes the graph connected, so some cycle vertex
        // sees the outside.
        let (pos, w) = cycle
            .iter()
            .enumerate()
            .find_map(|(i, &c)| (adj[c] & !on_path).lowest().map(|w| (i, w)))
            .ok_or_else(|| Error::HypothesisViolated("graph is disconnected".into()))?;
        let mut reopened = Vec::with_capacity(cycle.len() + 1);
        reopened.push(w);
        reopened.extend(cycle[pos..].iter().chain(&cycle[..pos]));
        on_path = on_path.with(w);
        path = reopened;
    }
}

/// Turns a path whose ends have no outside neighbors into a cycle on the
/// same vertex set.
fn close_path<W: BitWord>(adj: &[W], mut path: Vec<usize>) -> Option<Vec<usize>> {
    let first = path[0];
    let last = path[path.len() - 1];
    if path.len() >= 3 && adj[first].has(last) {
        return Some(path);
    }
    let i = (0..path.len() - 1).find(|&i| adj[first].has(path[i + 1]) && adj[last].has(path[i]))?;
    path[i + 1..].reverse();
    Some(path)
}
