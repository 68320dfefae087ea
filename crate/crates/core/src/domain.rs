//! Finite discrete domains: paths, rectangular grids and general graphs.
//!
//! A [`Domain`] is an immutable, connected, undirected graph on the dense
//! vertex ids `0..len()`. Grids are row-major, so vertex `(x, y)` has id
//! `y * width + x`. All distances are unweighted hop counts.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Neighborhood used when building a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adjacency {
    Four,
    Eight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    Path,
    Grid4,
    Grid8,
    Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Domain {
    kind: DomainKind,
    adjacency: Vec<Vec<usize>>,
    dims: Option<(usize, usize)>,
}

const UNREACHED: usize = usize::MAX;

impl Domain {
    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("path domain needs at least one vertex"));
        }
        let adjacency = (0..n)
            .map(|v| {
                let mut nb = Vec::with_capacity(2);
                if v > 0 {
                    nb.push(v - 1);
                }
                if v + 1 < n {
                    nb.push(v + 1);
                }
                nb
            })
            .collect();
        Ok(Domain {
            kind: DomainKind::Path,
            adjacency,
            dims: None,
        })
    }

    pub fn grid(width: usize, height: usize, adjacency: Adjacency) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::invalid(format!(
                "grid dimensions must be positive, got {width}x{height}"
            )));
        }
        let offsets: &[(isize, isize)] = match adjacency {
            Adjacency::Four => &[(0, -1), (-1, 0), (1, 0), (0, 1)],
            Adjacency::Eight => &[
                (-1, -1),
                (0, -1),
                (1, -1),
                (-1, 0),
                (1, 0),
                (-1, 1),
                (0, 1),
                (1, 1),
            ],
        };
        let mut adj = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                let nb = offsets
                    .iter()
                    .filter_map(|&(dx, dy)| {
                        let nx = x.checked_add_signed(dx)?;
                        let ny = y.checked_add_signed(dy)?;
                        (nx < width && ny < height).then_some(ny * width + nx)
                    })
                    .collect();
                adj.push(nb);
            }
        }
        let kind = match adjacency {
            Adjacency::Four => DomainKind::Grid4,
            Adjacency::Eight => DomainKind::Grid8,
        };
        Ok(Domain {
            kind,
            adjacency: adj,
            dims: Some((width, height)),
        })
    }

    /// General undirected graph. Edges are symmetrized and deduplicated;
    /// self-loops and disconnected graphs are rejected.
    pub fn graph(v_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if v_count == 0 {
            return Err(Error::invalid("graph domain needs at least one vertex"));
        }
        let mut adjacency = vec![Vec::new(); v_count];
        for &(a, b) in edges {
            if a >= v_count || b >= v_count {
                return Err(Error::invalid(format!(
                    "edge ({a},{b}) has an endpoint outside 0..{v_count}"
                )));
            }
            if a == b {
                return Err(Error::invalid(format!("self-loop at vertex {a}")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
            nb.dedup();
        }
        let dom = Domain {
            kind: DomainKind::Graph,
            adjacency,
            dims: None,
        };
        let components = dom.component_count();
        if components != 1 {
            return Err(Error::DisconnectedDomain { components });
        }
        Ok(dom)
    }

    pub fn kind(&self) -> DomainKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// `(width, height)` for grids.
    pub fn dims(&self) -> Option<(usize, usize)> {
        self.dims
    }

    pub fn is_grid(&self) -> bool {
        matches!(self.kind, DomainKind::Grid4 | DomainKind::Grid8)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Each undirected edge once, as `(a, b)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, nb)| nb.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Planar coordinates for path and grid vertices.
    pub fn coords(&self, v: usize) -> Option<(f64, f64)> {
        match (self.kind, self.dims) {
            (DomainKind::Path, _) => Some((v as f64, 0.0)),
            (_, Some((w, _))) => Some(((v % w) as f64, (v / w) as f64)),
            _ => None,
        }
    }

    /// Vertex id of grid cell `(x, y)`.
    pub fn grid_vertex(&self, x: usize, y: usize) -> Option<usize> {
        let (w, h) = self.dims?;
        (x < w && y < h).then_some(y * w + x)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "vertex {v} is outside the domain (0..{})",
                self.len()
            )))
        }
    }

    /// Shortest-path length in edges between `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs(&[u])[v])
    }

    /// Hop distance from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Result<Vec<usize>> {
        self.check_vertex(source)?;
        Ok(self.bfs(&[source]))
    }

    /// For every vertex, the hop distance to the nearest source.
    pub fn multi_source_distances(&self, sources: &[usize]) -> Result<Vec<usize>> {
        if sources.is_empty() {
            return Err(Error::invalid(
                "multi-source distances need at least one source",
            ));
        }
        for &s in sources {
            self.check_vertex(s)?;
        }
        Ok(self.bfs(sources))
    }

    fn bfs(&self, sources: &[usize]) -> Vec<usize> {
        let mut dist = vec![UNREACHED; self.len()];
        let mut queue = VecDeque::with_capacity(self.len());
        for &s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHED {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn component_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }
}
