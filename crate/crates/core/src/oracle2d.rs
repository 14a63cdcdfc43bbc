//! Brute-force growth of a planar `{p,q}` tiling, corona by corona.
//!
//! The disk `W_i` is kept as its boundary ring, a counter-clockwise cycle of
//! vertices each knowing how many cells of `W_i` it lies in. Every ring
//! vertex with `a` inner cells sends `q - a - 1` edges outwards. Consecutive
//! outward edges bound exactly one new cell; the ring path between them fixes
//! how many fresh vertices that `p`-gon needs, and a cell needing one fewer
//! than none closes up by sharing the tip of both outward edges.
//!
//! Nothing here looks at the incidence or growth matrices, so the tallies are
//! an independent check of the matrix recurrence.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::growth::{BeltSeries, GrowthMatrix, Start};
use crate::incidence::build_k;
use crate::schlafli::{GeometryClass, SchlafliSymbol};

pub const DEFAULT_CELL_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarCell {
    pub belt: usize,
    /// Vertex cycle with the cell on the left.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarVertex {
    /// Number of incident cells built so far.
    pub saturation: usize,
    /// Belt of first appearance.
    pub belt: usize,
}

/// Vertex, edge and cell counts of one belt.
pub type Tally = [usize; 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarBeltMap {
    pub p: usize,
    pub q: usize,
    pub cells: Vec<PlanarCell>,
    pub vertices: Vec<PlanarVertex>,
    /// Frontier of the last belt: `(vertex, remaining degree)` counter-clockwise.
    pub boundary: Vec<(usize, usize)>,
    /// `tallies[i]` counts the points new in belt `i`.
    pub tallies: Vec<Tally>,
}

pub fn grow_tiling(p: u32, q: u32, belts: usize) -> Result<PlanarBeltMap> {
    grow_tiling_with_budget(p, q, belts, DEFAULT_CELL_BUDGET)
}

pub fn grow_tiling_with_budget(p: u32, q: u32, belts: usize, budget: usize) -> Result<PlanarBeltMap> {
    let symbol = SchlafliSymbol::new(vec![p, q])?;
    if symbol.classify() == GeometryClass::SphericalPolytope {
        return Err(Error::Unsupported { symbol: format!("{symbol}"), class: GeometryClass::SphericalPolytope });
    }
    if belts == 0 {
        return Err(Error::Domain("at least one belt must be grown".into()));
    }
    let (p, q) = (p as usize, q as usize);
    let mut map = PlanarBeltMap {
        p,
        q,
        cells: vec![PlanarCell { belt: 0, vertices: (0..p).collect() }],
        vertices: vec![PlanarVertex { saturation: 1, belt: 0 }; p],
        boundary: Vec::new(),
        tallies: vec![[p, p, 1]],
    };
    let mut ring: Vec<usize> = (0..p).collect();
    for belt in 1..=belts {
        ring = map.grow_corona(&ring, belt, budget)?;
    }
    map.boundary = ring.iter().map(|&v| (v, q - map.vertices[v].saturation)).collect();
    Ok(map)
}

impl PlanarBeltMap {
    fn fresh_vertex(&mut self, belt: usize) -> usize {
        self.vertices.push(PlanarVertex { saturation: 0, belt });
        self.vertices.len() - 1
    }

    fn grow_corona(&mut self, ring: &[usize], belt: usize, budget: usize) -> Result<Vec<usize>> {
        let (p, q) = (self.p, self.q);
        let len = ring.len();

        // Ring position of every outward edge, in counter-clockwise order.
        let mut origin = Vec::new();
        for (t, &v) in ring.iter().enumerate() {
            let a = self.vertices[v].saturation;
            if a + 1 > q {
                return Err(Error::Invariant(format!("frontier vertex {v} already has {a} cells")));
            }
            origin.extend(core::iter::repeat_n(t, q - a - 1));
        }
        let m = origin.len();
        if m == 0 {
            return Err(Error::Invariant("frontier has no outward edges".into()));
        }
        let needed = self.cells.len() + m;
        if needed > budget {
            return Err(Error::Budget { needed, budget });
        }

        // Fresh inner vertices of the cell between outward edges j and j+1.
        let mut span = Vec::with_capacity(m);
        let mut inner_count = Vec::with_capacity(m);
        for j in 0..m {
            let l = if j + 1 < m { origin[j + 1] - origin[j] } else { origin[0] + len - origin[j] };
            let x = p as isize - 3 - l as isize;
            if x < -1 {
                return Err(Error::Invariant(format!("cell spans {l} frontier edges, more than a {p}-gon allows")));
            }
            span.push(l);
            inner_count.push(x);
        }

        // Tips of outward edges j and j+1 coincide when the cell between
        // them needs -1 fresh vertices.
        let mut class: Vec<usize> = (0..m).collect();
        // Walk forward from a cell that does not merge so chains never wrap.
        let anchor = (0..m)
            .find(|&j| inner_count[j] != -1)
            .ok_or_else(|| Error::Invariant("every new cell closes on a single tip".into()))?;
        for step in 1..=m {
            let j = (anchor + step) % m;
            let next = (j + 1) % m;
            if inner_count[j] == -1 {
                class[next] = class[j];
            }
        }
        let mut tip_vertex: BTreeMap<usize, usize> = BTreeMap::new();
        let mut tips = Vec::with_capacity(m);
        for &c in &class {
            let v = match tip_vertex.get(&c) {
                Some(&v) => v,
                None => {
                    let v = self.fresh_vertex(belt);
                    tip_vertex.insert(c, v);
                    v
                }
            };
            tips.push(v);
        }

        let mut next_ring = Vec::new();
        for j in 0..m {
            let next = (j + 1) % m;
            let inner: Vec<usize> = (0..inner_count[j].max(0)).map(|_| self.fresh_vertex(belt)).collect();
            let mut cycle: Vec<usize> = (0..=span[j]).rev().map(|k| ring[(origin[j] + k) % len]).collect();
            cycle.push(tips[j]);
            cycle.extend(&inner);
            if tips[next] != tips[j] {
                cycle.push(tips[next]);
            }
            if cycle.len() != p {
                return Err(Error::Invariant(format!("built a {}-gon in a {{{p},{q}}} tiling", cycle.len())));
            }
            for &v in &cycle {
                self.vertices[v].saturation += 1;
            }
            self.cells.push(PlanarCell { belt, vertices: cycle });

            if next_ring.last() != Some(&tips[j]) {
                next_ring.push(tips[j]);
            }
            next_ring.extend(inner);
        }
        if next_ring.len() > 1 && next_ring.first() == next_ring.last() {
            next_ring.pop();
        }

        for &v in ring {
            if self.vertices[v].saturation != q {
                return Err(Error::Invariant(format!(
                    "vertex {v} closed with {} cells instead of {q}",
                    self.vertices[v].saturation
                )));
            }
        }
        let vertices = self.vertices.iter().filter(|v| v.belt == belt).count();
        let edges = m + inner_count.iter().filter(|&&x| x >= 0).map(|&x| x as usize + 1).sum::<usize>();
        self.tallies.push([vertices, edges, m]);
        Ok(next_ring)
    }

    /// Index of the last grown belt.
    pub fn belts(&self) -> usize {
        self.tallies.len() - 1
    }

    /// Recomputes per-belt tallies from the cell list alone: a vertex or edge
    /// belongs to the earliest belt of the cells containing it.
    pub fn recount(&self) -> Vec<Tally> {
        let mut out = vec![[0usize; 3]; self.tallies.len()];
        let mut vertex_belt: BTreeMap<usize, usize> = BTreeMap::new();
        let mut edge_belt: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for cell in &self.cells {
            out[cell.belt][2] += 1;
            let n = cell.vertices.len();
            for k in 0..n {
                let a = cell.vertices[k];
                let b = cell.vertices[(k + 1) % n];
                let e = vertex_belt.entry(a).or_insert(cell.belt);
                *e = (*e).min(cell.belt);
                let e = edge_belt.entry((a.min(b), a.max(b))).or_insert(cell.belt);
                *e = (*e).min(cell.belt);
            }
        }
        for belt in vertex_belt.values() {
            out[*belt][0] += 1;
        }
        for belt in edge_belt.values() {
            out[*belt][1] += 1;
        }
        out
    }

    /// `V - E + F` of the disk `W_i` for every completed belt.
    pub fn euler_characteristics(&self) -> Vec<i64> {
        let mut acc = 0i64;
        self.tallies
            .iter()
            .map(|t| {
                acc += t[0] as i64 - t[1] as i64 + t[2] as i64;
                acc
            })
            .collect()
    }

    /// One cell per line: `cell_id belt v1 v2 ... vp`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (id, cell) in self.cells.iter().enumerate() {
            let _ = write!(out, "{id} {}", cell.belt);
            for v in &cell.vertices {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRow {
    pub belt: usize,
    pub oracle: [BigInt; 3],
    pub matrix: [BigInt; 3],
}

impl OracleRow {
    pub fn matches(&self) -> bool {
        self.oracle == self.matrix
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComparison {
    pub p: u32,
    pub q: u32,
    pub rows: Vec<OracleRow>,
}

impl OracleComparison {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(OracleRow::matches)
    }
}

/// Belt-by-belt comparison of the grown tiling with the cell-start recurrence.
pub fn compare_with_matrix(p: u32, q: u32, belts: usize) -> Result<OracleComparison> {
    let map = grow_tiling(p, q, belts)?;
    let k = build_k(&SchlafliSymbol::new(vec![p, q])?)?;
    let gm = GrowthMatrix::from_incidence(&k);
    let series = BeltSeries::compute(&k, &gm, Start::Cell, belts)?;
    let rows = (0..=belts)
        .map(|i| OracleRow {
            belt: i,
            oracle: map.tallies[i].map(BigInt::from),
            matrix: [series.v[i][0].clone(), series.v[i][1].clone(), series.v[i][2].clone()],
        })
        .collect();
    Ok(OracleComparison { p, q, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells_per_belt(map: &PlanarBeltMap) -> Vec<usize> {
        map.tallies.iter().map(|t| t[2]).collect()
    }

    #[test]
    fn square_with_degree_five() {
        let map = grow_tiling(4, 5, 2).unwrap();
        assert_eq!(cells_per_belt(&map), [1, 12, 48]);
    }

    #[test]
    fn square_grid_rings() {
        let map = grow_tiling(4, 4, 6).unwrap();
        let expected: Vec<usize> = (0..=6).map(|i| if i == 0 { 1 } else { 8 * i }).collect();
        assert_eq!(cells_per_belt(&map), expected);
    }

    #[test]
    fn hexagons_and_triangles() {
        // Hexagonal grid: 6, 12, 18 ... hexagons touch the growing disk.
        let hex = grow_tiling(6, 3, 3).unwrap();
        assert_eq!(cells_per_belt(&hex), [1, 6, 12, 18]);
        let tri = grow_tiling(3, 6, 1).unwrap();
        assert_eq!(cells_per_belt(&tri), [1, 12]);
    }

    #[test]
    fn map_invariants() {
        for (p, q) in [(4, 5), (3, 7), (7, 3), (5, 5)] {
            let map = grow_tiling(p, q, 4).unwrap();
            assert!(map.cells.iter().all(|c| c.vertices.len() == p as usize));
            assert_eq!(map.recount(), map.tallies, "{{{p},{q}}}");
            assert!(map.euler_characteristics().iter().all(|&e| e == 1));
            assert!(map.boundary.iter().all(|&(_, r)| r >= 1));
        }
    }

    #[test]
    fn spherical_and_budget() {
        assert!(matches!(
            grow_tiling(3, 5, 2),
            Err(Error::Unsupported { class: GeometryClass::SphericalPolytope, .. })
        ));
        assert!(matches!(grow_tiling_with_budget(3, 7, 6, 100), Err(Error::Budget { .. })));
        assert!(grow_tiling(4, 5, 0).is_err());
    }

    #[test]
    fn dump_format() {
        let map = grow_tiling(4, 4, 1).unwrap();
        let dump = map.dump();
        assert_eq!(dump.lines().count(), 9);
        assert_eq!(dump.lines().next(), Some("0 0 0 1 2 3"));
        assert!(dump.lines().skip(1).all(|l| l.split(' ').count() == 6 && l.split(' ').nth(1) == Some("1")));
    }

    #[test]
    fn comparison_45() {
        let cmp = compare_with_matrix(4, 5, 4).unwrap();
        assert!(cmp.all_match(), "{cmp:?}");
    }
}
