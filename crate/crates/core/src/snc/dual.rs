use std::collections::VecDeque;

use serde::Serialize;

use super::Triangulation;
use crate::error::{Error, Result};

/// Polygon dual to a vertex of the triangulation. Side `i` runs from
/// corner `i` to corner `i + 1` (cyclically); corners are dual vertices,
/// i.e. triangles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polygon {
    pub vertex: usize,
    pub corners: Vec<usize>,
    /// Gluing index of each side.
    pub sides: Vec<usize>,
}

impl Polygon {
    pub fn side_count(&self) -> usize {
        self.sides.len()
    }

    /// Endpoints of side `i` in traversal order.
    pub fn side_ends(&self, i: usize) -> (usize, usize) {
        (self.corners[i], self.corners[(i + 1) % self.corners.len()])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SideRef {
    pub polygon: usize,
    pub position: usize,
}

/// Identification of two polygon sides, dual to one edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gluing {
    pub sides: [SideRef; 2],
    /// The two dual vertices joined by the glued side, as stored in the
    /// first polygon's traversal order.
    pub ends: [usize; 2],
    /// True when the two sides are traversed in the same direction, i.e.
    /// the gluing reverses the polygons' chosen orientations.
    pub reversing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualComplex {
    pub polygons: Vec<Polygon>,
    pub gluings: Vec<Gluing>,
    pub dual_vertex_count: usize,
}

impl DualComplex {
    /// Checks that gluings pair every side exactly once, never a side with
    /// itself, that ends agree with the polygons and that every dual vertex
    /// is a corner of exactly three polygons.
    pub fn new(polygons: Vec<Polygon>, gluings: Vec<Gluing>, dual_vertex_count: usize) -> Result<Self> {
        let d = DualComplex {
            polygons,
            gluings,
            dual_vertex_count,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        let mut used: Vec<Vec<Option<usize>>> =
            self.polygons.iter().map(|p| vec![None; p.side_count()]).collect();
        for (g, gl) in self.gluings.iter().enumerate() {
            if gl.sides[0] == gl.sides[1] {
                return Err(Error::InvalidGluing(format!("gluing {g} fixes a side")));
            }
            for s in gl.sides {
                let slot = used
                    .get_mut(s.polygon)
                    .and_then(|p| p.get_mut(s.position))
                    .ok_or_else(|| Error::InvalidGluing(format!("gluing {g} names a missing side")))?;
                if slot.replace(g).is_some() {
                    return Err(Error::InvalidGluing(format!("side {s:?} glued twice")));
                }
                if self.polygons[s.polygon].sides[s.position] != g {
                    return Err(Error::InvalidGluing(format!("side {s:?} does not record gluing {g}")));
                }
            }
        }
        if let Some((p, _)) = used.iter().enumerate().find(|(_, u)| u.iter().any(Option::is_none)) {
            return Err(Error::InvalidGluing(format!("polygon {p} has an unglued side")));
        }
        let mut valence = vec![0usize; self.dual_vertex_count];
        for p in &self.polygons {
            for &c in &p.corners {
                *valence.get_mut(c).ok_or_else(|| Error::InvalidGluing(format!("corner {c} out of range")))? += 1;
            }
        }
        if let Some(v) = valence.iter().position(|&n| n != 3) {
            return Err(Error::InvalidGluing(format!("dual vertex {v} has valence {}", valence[v])));
        }
        Ok(())
    }

    pub fn from_triangulation(t: &Triangulation) -> Result<Self> {
        t.validate()?;
        let edge_map = t.edge_map();
        let edge_index: std::collections::BTreeMap<(usize, usize), usize> =
            edge_map.keys().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut polygons = Vec::with_capacity(t.vertices);
        // per edge: the (polygon, position, from, to) records of its two sides
        let mut records: Vec<Vec<(usize, usize, usize, usize)>> = vec![Vec::new(); edge_map.len()];
        for v in 0..t.vertices {
            let star = t.star(v);
            let t0 = star[0];
            let tri = t.triangles[t0];
            let k = tri.iter().position(|&x| x == v).expect("vertex in its star");
            let mut across = tri[(k + 1) % 3];
            let mut current = t0;
            let mut corners = Vec::new();
            let mut sides = Vec::new();
            loop {
                corners.push(current);
                let e = (v.min(across), v.max(across));
                let pair = &edge_map[&e];
                let next = if pair[0] == current { pair[1] } else { pair[0] };
                let g = edge_index[&e];
                records[g].push((v, sides.len(), current, next));
                sides.push(g);
                let nt = t.triangles[next];
                across = *nt.iter().find(|&&x| x != v && x != across).expect("third vertex");
                current = next;
                if current == t0 {
                    break;
                }
            }
            if corners.len() != star.len() {
                return Err(Error::NonManifold {
                    vertex: v,
                    reason: "link is not a single cycle".into(),
                });
            }
            polygons.push(Polygon {
                vertex: v,
                corners,
                sides,
            });
        }
        let gluings = records
            .into_iter()
            .map(|r| {
                let (p0, s0, a0, b0) = r[0];
                let (p1, s1, a1, b1) = r[1];
                debug_assert!((a0, b0) == (a1, b1) || (a0, b0) == (b1, a1));
                Gluing {
                    sides: [
                        SideRef { polygon: p0, position: s0 },
                        SideRef { polygon: p1, position: s1 },
                    ],
                    ends: [a0, b0],
                    reversing: (a0, b0) == (a1, b1),
                }
            })
            .collect();
        DualComplex::new(polygons, gluings, t.triangles.len())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dual_vertex_count as i64 - self.gluings.len() as i64 + self.polygons.len() as i64
    }

    /// Polygon signs making every gluing orientation-compatible, if any.
    pub fn orientation(&self) -> Option<Vec<i8>> {
        let n = self.polygons.len();
        let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
        for g in &self.gluings {
            let (a, b) = (g.sides[0].polygon, g.sides[1].polygon);
            adj[a].push((b, g.reversing));
            adj[b].push((a, g.reversing));
        }
        let mut sign = vec![0i8; n];
        for root in 0..n {
            if sign[root] != 0 {
                continue;
            }
            sign[root] = 1;
            let mut queue = VecDeque::from([root]);
            while let Some(p) = queue.pop_front() {
                for &(q, rev) in &adj[p] {
                    let want = if rev { -sign[p] } else { sign[p] };
                    if sign[q] == 0 {
                        sign[q] = want;
                        queue.push_back(q);
                    } else if sign[q] != want {
                        return None;
                    }
                }
            }
        }
        Some(sign)
    }

    /// 1 when the surface is orientable (K ~ 0), 2 otherwise.
    pub fn canonical_order(&self) -> u8 {
        if self.orientation().is_some() {
            1
        } else {
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_dual() {
        let d = DualComplex::from_triangulation(&Triangulation::tetrahedron()).unwrap();
        assert_eq!(d.polygons.len(), 4);
        assert!(d.polygons.iter().all(|p| p.side_count() == 3));
        assert_eq!(d.gluings.len(), 6);
        assert_eq!(d.euler_characteristic(), 2);
        assert_eq!(d.canonical_order(), 1);
    }

    #[test]
    fn torus_and_projective_plane() {
        let t = Triangulation::torus();
        let d = DualComplex::from_triangulation(&t).unwrap();
        assert_eq!(d.euler_characteristic(), 0);
        let total: usize = d.polygons.iter().map(Polygon::side_count).sum();
        assert_eq!(total, 2 * t.edges().len());
        assert_eq!(d.canonical_order(), 1);

        let d = DualComplex::from_triangulation(&Triangulation::projective_plane()).unwrap();
        assert_eq!(d.euler_characteristic(), 1);
        assert!(d.gluings.iter().any(|g| g.reversing));
        assert_eq!(d.canonical_order(), 2);
    }

    #[test]
    fn single_polygon_self_gluing_rejected() {
        let side = SideRef { polygon: 0, position: 0 };
        let polygons = vec![Polygon {
            vertex: 0,
            corners: vec![0, 1, 2],
            sides: vec![0, 1, 2],
        }];
        let gluings = (0..3)
            .map(|i| Gluing {
                sides: [SideRef { position: i, ..side }; 2],
                ends: [i, (i + 1) % 3],
                reversing: false,
            })
            .collect();
        assert!(matches!(
            DualComplex::new(polygons, gluings, 3),
            Err(Error::InvalidGluing(_))
        ));
    }
}
