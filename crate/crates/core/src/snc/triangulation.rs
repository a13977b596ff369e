use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{rank_int, smith_normal_form, IntMatrix};

/// Closed triangulated surface. JSON form:
/// `{"vertices": n, "triangles": [[a, b, c], ...]}`, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    pub vertices: usize,
    pub triangles: Vec<[usize; 3]>,
}

fn sorted_edge(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl Triangulation {
    pub fn new(vertices: usize, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let t = Triangulation { vertices, triangles };
        t.validate()?;
        Ok(t)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let t: Triangulation =
            serde_json::from_str(text).map_err(|e| Error::InvalidTriangulation(e.to_string()))?;
        t.validate()?;
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    /// Edge -> triangles containing it, edges sorted.
    pub fn edge_map(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (ti, t) in self.triangles.iter().enumerate() {
            for k in 0..3 {
                map.entry(sorted_edge(t[k], t[(k + 1) % 3])).or_default().push(ti);
            }
        }
        map
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edge_map().into_keys().collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges().len() as i64 + self.triangles.len() as i64
    }

    /// Triangles containing `v`, ascending.
    pub fn star(&self, v: usize) -> Vec<usize> {
        (0..self.triangles.len())
            .filter(|&t| self.triangles[t].contains(&v))
            .collect()
    }

    /// Checks indices, closedness (every edge in exactly two triangles),
    /// the link condition at every vertex, and connectedness.
    pub fn validate(&self) -> Result<()> {
        if self.triangles.is_empty() {
            return Err(Error::InvalidTriangulation("no triangles".into()));
        }
        let mut seen = BTreeSet::new();
        for t in &self.triangles {
            if t.iter().any(|&v| v >= self.vertices) {
                return Err(Error::InvalidTriangulation(format!("triangle {t:?} has an out-of-range vertex")));
            }
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(Error::InvalidTriangulation(format!("degenerate triangle {t:?}")));
            }
            let mut key = *t;
            key.sort_unstable();
            if !seen.insert(key) {
                return Err(Error::InvalidTriangulation(format!("duplicate triangle {key:?}")));
            }
        }
        for (&(a, b), ts) in &self.edge_map() {
            if ts.len() != 2 {
                return Err(Error::Boundary(a, b, ts.len()));
            }
        }
        for v in 0..self.vertices {
            self.check_link(v)?;
        }
        if !self.is_connected() {
            return Err(Error::InvalidTriangulation("triangulation is disconnected".into()));
        }
        Ok(())
    }

    fn check_link(&self, v: usize) -> Result<()> {
        let star = self.star(v);
        if star.is_empty() {
            return Err(Error::NonManifold {
                vertex: v,
                reason: "vertex lies in no triangle".into(),
            });
        }
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &t in &star {
            let others: Vec<usize> = self.triangles[t].iter().copied().filter(|&x| x != v).collect();
            adj.entry(others[0]).or_default().push(others[1]);
            adj.entry(others[1]).or_default().push(others[0]);
        }
        if adj.values().any(|n| n.len() != 2) {
            return Err(Error::NonManifold {
                vertex: v,
                reason: "link has a vertex of degree other than 2".into(),
            });
        }
        let start = *adj.keys().next().expect("nonempty");
        let mut visited = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[&x] {
                if visited.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        if visited.len() != adj.len() {
            return Err(Error::NonManifold {
                vertex: v,
                reason: "link is not a single cycle".into(),
            });
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        let map = self.edge_map();
        let mut adj = vec![Vec::new(); self.triangles.len()];
        for ts in map.values() {
            for &a in ts {
                for &b in ts {
                    if a != b {
                        adj[a].push(b);
                    }
                }
            }
        }
        let mut seen = vec![false; self.triangles.len()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(t) = queue.pop_front() {
            for &u in &adj[t] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn tetrahedron() -> Self {
        Triangulation {
            vertices: 4,
            triangles: vec![[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]],
        }
    }

    /// Seven-vertex torus.
    pub fn torus() -> Self {
        let mut triangles = Vec::new();
        for i in 0..7 {
            triangles.push([i, (i + 1) % 7, (i + 3) % 7]);
            triangles.push([i, (i + 2) % 7, (i + 3) % 7]);
        }
        Triangulation {
            vertices: 7,
            triangles,
        }
    }

    /// Six-vertex projective plane.
    pub fn projective_plane() -> Self {
        Triangulation {
            vertices: 6,
            triangles: vec![
                [0, 1, 2],
                [0, 2, 3],
                [0, 3, 4],
                [0, 4, 5],
                [0, 5, 1],
                [1, 2, 4],
                [2, 3, 5],
                [3, 4, 1],
                [4, 5, 2],
                [5, 1, 3],
            ],
        }
    }

    pub fn icosahedron() -> Self {
        let up = |i: usize| 1 + i % 5;
        let low = |i: usize| 6 + i % 5;
        let mut triangles = Vec::new();
        for i in 0..5 {
            triangles.push([0, up(i), up(i + 1)]);
            triangles.push([up(i), low(i), up(i + 1)]);
            triangles.push([up(i + 1), low(i), low(i + 1)]);
            triangles.push([11, low(i + 1), low(i)]);
        }
        Triangulation {
            vertices: 12,
            triangles,
        }
    }

    /// Removes the first triangle of each and identifies their boundaries.
    pub fn connected_sum(&self, other: &Triangulation) -> Triangulation {
        let ta = self.triangles[0];
        let tb = other.triangles[0];
        let mut relabel = vec![usize::MAX; other.vertices];
        for k in 0..3 {
            relabel[tb[k]] = ta[k];
        }
        let mut next = self.vertices;
        for slot in relabel.iter_mut() {
            if *slot == usize::MAX {
                *slot = next;
                next += 1;
            }
        }
        let mut triangles: Vec<[usize; 3]> = self.triangles[1..].to_vec();
        triangles.extend(other.triangles[1..].iter().map(|t| t.map(|v| relabel[v])));
        Triangulation {
            vertices: next,
            triangles,
        }
    }

    pub fn klein_bottle() -> Self {
        Triangulation::projective_plane().connected_sum(&Triangulation::projective_plane())
    }

    pub fn genus_two() -> Self {
        Triangulation::torus().connected_sum(&Triangulation::torus())
    }

    /// Replaces triangle `t` by three triangles around a new vertex.
    pub fn stellar_subdivide(&self, t: usize) -> Triangulation {
        let [a, b, c] = self.triangles[t];
        let n = self.vertices;
        let mut triangles = self.triangles.clone();
        triangles[t] = [a, b, n];
        triangles.push([b, c, n]);
        triangles.push([c, a, n]);
        Triangulation {
            vertices: n + 1,
            triangles,
        }
    }

    /// Flips the edge `{a, b}` if the result is again a valid
    /// triangulation.
    pub fn flip(&self, a: usize, b: usize) -> Option<Triangulation> {
        let map = self.edge_map();
        let ts = map.get(&sorted_edge(a, b))?;
        let third = |t: usize| -> usize {
            *self.triangles[t].iter().find(|&&x| x != a && x != b).expect("triangle has a third vertex")
        };
        let (c, d) = (third(ts[0]), third(ts[1]));
        if c == d || map.contains_key(&sorted_edge(c, d)) {
            return None;
        }
        if self.star(a).len() <= 3 || self.star(b).len() <= 3 {
            return None;
        }
        let mut triangles = self.triangles.clone();
        triangles[ts[0]] = [a, d, c];
        triangles[ts[1]] = [b, c, d];
        let out = Triangulation {
            vertices: self.vertices,
            triangles,
        };
        out.validate().ok().map(|_| out)
    }

    /// Same surface with vertices permuted, triangles shuffled and each
    /// triangle's vertex order permuted.
    pub fn scrambled<R: Rng>(&self, rng: &mut R) -> Triangulation {
        let mut perm: Vec<usize> = (0..self.vertices).collect();
        perm.shuffle(rng);
        let mut triangles: Vec<[usize; 3]> = self
            .triangles
            .iter()
            .map(|t| {
                let mut t = t.map(|v| perm[v]);
                t.shuffle(rng);
                t
            })
            .collect();
        triangles.shuffle(rng);
        Triangulation {
            vertices: self.vertices,
            triangles,
        }
    }
}

/// Simplicial chain data, used as an independent check on the glued model.
impl Triangulation {
    /// Boundary maps ∂₁ (vertices × edges) and ∂₂ (edges × triangles), with
    /// edges oriented from the smaller vertex to the larger.
    pub fn boundary_matrices(&self) -> (IntMatrix, IntMatrix) {
        let edges = self.edges();
        let index: BTreeMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut d1 = IntMatrix::zeros(self.vertices, edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            d1[(a, i)] = BigInt::from(-1);
            d1[(b, i)] = BigInt::from(1);
        }
        let mut d2 = IntMatrix::zeros(edges.len(), self.triangles.len());
        for (t, tri) in self.triangles.iter().enumerate() {
            for k in 0..3 {
                let (x, y) = (tri[k], tri[(k + 1) % 3]);
                let sign = if x < y { 1 } else { -1 };
                d2[(index[&sorted_edge(x, y)], t)] += BigInt::from(sign);
            }
        }
        (d1, d2)
    }

    /// Rational Betti numbers b₀, b₁, b₂.
    pub fn betti_numbers(&self) -> [usize; 3] {
        let (d1, d2) = self.boundary_matrices();
        let (r1, r2) = (rank_int(&d1), rank_int(&d2));
        [self.vertices - r1, d1.cols() - r1 - r2, d2.cols() - r2]
    }

    /// H₁(F, ℤ) as free rank plus torsion coefficients.
    pub fn first_homology(&self) -> (usize, Vec<BigInt>) {
        let (d1, d2) = self.boundary_matrices();
        let r1 = rank_int(&d1);
        let snf = smith_normal_form(&d2);
        let r2 = snf.diagonal.iter().filter(|d| !d.is_zero()).count();
        (d1.cols() - r1 - r2, snf.torsion())
    }
}

/// Named closed surfaces with known orientability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    Sphere,
    Torus,
    ProjectivePlane,
    KleinBottle,
    GenusTwo,
}

impl SurfaceKind {
    pub const ALL: [SurfaceKind; 5] = [
        SurfaceKind::Sphere,
        SurfaceKind::Torus,
        SurfaceKind::ProjectivePlane,
        SurfaceKind::KleinBottle,
        SurfaceKind::GenusTwo,
    ];

    pub fn triangulation(self) -> Triangulation {
        match self {
            SurfaceKind::Sphere => Triangulation::tetrahedron(),
            SurfaceKind::Torus => Triangulation::torus(),
            SurfaceKind::ProjectivePlane => Triangulation::projective_plane(),
            SurfaceKind::KleinBottle => Triangulation::klein_bottle(),
            SurfaceKind::GenusTwo => Triangulation::genus_two(),
        }
    }

    pub fn orientable(self) -> bool {
        matches!(self, SurfaceKind::Sphere | SurfaceKind::Torus | SurfaceKind::GenusTwo)
    }
}

/// Random closed surface: one or two named pieces joined by connected
/// sum, then subdivided, flipped and relabelled. Returns the
/// triangulation and whether it is orientable.
pub fn random_triangulation<R: Rng>(rng: &mut R) -> (Triangulation, bool) {
    let first = *SurfaceKind::ALL.choose(rng).expect("nonempty");
    let mut t = first.triangulation();
    let mut orientable = first.orientable();
    if rng.gen_bool(0.4) {
        let second = *SurfaceKind::ALL.choose(rng).expect("nonempty");
        t = t.connected_sum(&second.triangulation().scrambled(rng));
        orientable &= second.orientable();
    }
    for _ in 0..rng.gen_range(0..6) {
        let i = rng.gen_range(0..t.triangles.len());
        t = t.stellar_subdivide(i);
    }
    for _ in 0..rng.gen_range(0..12) {
        let edges = t.edges();
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        if let Some(f) = t.flip(a, b) {
            t = f;
        }
    }
    (t.scrambled(rng), orientable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn library_surfaces_are_valid() {
        let cases = [
            (SurfaceKind::Sphere, 2),
            (SurfaceKind::Torus, 0),
            (SurfaceKind::ProjectivePlane, 1),
            (SurfaceKind::KleinBottle, 0),
            (SurfaceKind::GenusTwo, -2),
        ];
        for (kind, chi) in cases {
            let t = kind.triangulation();
            t.validate().unwrap();
            assert_eq!(t.euler_characteristic(), chi, "{kind:?}");
        }
        let ico = Triangulation::icosahedron();
        ico.validate().unwrap();
        assert_eq!(ico.euler_characteristic(), 2);
        assert!((0..12).all(|v| ico.star(v).len() == 5));
    }

    #[test]
    fn simplicial_homology() {
        let b = |k: SurfaceKind| k.triangulation().betti_numbers();
        assert_eq!(b(SurfaceKind::Sphere), [1, 0, 1]);
        assert_eq!(b(SurfaceKind::Torus), [1, 2, 1]);
        assert_eq!(b(SurfaceKind::ProjectivePlane), [1, 0, 0]);
        assert_eq!(b(SurfaceKind::KleinBottle), [1, 1, 0]);
        assert_eq!(b(SurfaceKind::GenusTwo), [1, 4, 1]);
        let (free, torsion) = Triangulation::projective_plane().first_homology();
        assert_eq!((free, torsion), (0, vec![BigInt::from(2)]));
        let (free, torsion) = Triangulation::klein_bottle().first_homology();
        assert_eq!((free, torsion), (1, vec![BigInt::from(2)]));
    }

    #[test]
    fn rejects_boundary_and_pinch() {
        let disk = Triangulation {
            vertices: 3,
            triangles: vec![[0, 1, 2]],
        };
        assert!(matches!(disk.validate(), Err(Error::Boundary(..))));
        // two tetrahedra sharing one vertex
        let mut tris = Triangulation::tetrahedron().triangles;
        tris.extend(Triangulation::tetrahedron().triangles.iter().map(|t| t.map(|v| if v == 0 { 0 } else { v + 3 })));
        let pinched = Triangulation {
            vertices: 7,
            triangles: tris,
        };
        assert!(matches!(pinched.validate(), Err(Error::NonManifold { vertex: 0, .. })));
    }

    #[test]
    fn json_round_trip() {
        let t = Triangulation::torus();
        let back = Triangulation::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert!(Triangulation::from_json(r#"{"vertices": 3, "triangles": [[0,1,2]]}"#).is_err());
        assert!(Triangulation::from_json("not json").is_err());
    }

    #[test]
    fn random_surfaces_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let (t, _) = random_triangulation(&mut rng);
            t.validate().unwrap();
        }
    }
}
