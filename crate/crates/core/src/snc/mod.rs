//! Snc surfaces with trivial (or 2-torsion) canonical class glued from
//! rational surfaces along a polygon decomposition of a closed 2-manifold.

mod dual;
mod triangulation;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

pub use dual::{DualComplex, Gluing, Polygon, SideRef};
pub use triangulation::{random_triangulation, SurfaceKind, Triangulation};

use crate::error::{Error, Result};
use crate::lattice::{rank, smith_normal_form, IntMatrix, RatMatrix};
use crate::picard::{CycleSurface, QDivisor};

/// A rational surface with its anticanonical cycle and a polarization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub surface: CycleSurface,
    pub polarization: QDivisor,
}

impl Component {
    /// Schedule surface of cycle length `m` with its degree-one
    /// polarization from the default seed.
    pub fn standard(m: usize) -> Result<Component> {
        let surface = CycleSurface::standard(m)?;
        let seed = surface.default_seed()?;
        let polarization = surface.degree_one_polarization(&seed)?;
        Ok(Component { surface, polarization })
    }

    /// Degree 5 del Pezzo surface polarized by `-K`.
    pub fn del_pezzo_five() -> Component {
        let surface = CycleSurface::del_pezzo_five();
        let polarization = surface.canonical().scale(-1).to_rational();
        Component { surface, polarization }
    }
}

/// Caching factory around [`Component::standard`].
pub fn standard_factory() -> impl FnMut(usize) -> Result<Component> {
    let mut cache: HashMap<usize, Component> = HashMap::new();
    move |m| {
        if let Some(c) = cache.get(&m) {
            return Ok(c.clone());
        }
        let c = Component::standard(m)?;
        cache.insert(m, c.clone());
        Ok(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleCurve {
    /// `(polygon, cycle position)` on each side.
    pub curves: [SideRef; 2],
    pub node_marked: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriplePoint {
    pub components: [usize; 3],
}

#[derive(Clone, Debug)]
pub struct SncSurface {
    pub dual: DualComplex,
    pub components: Vec<Component>,
    /// Indexed like `dual.gluings`.
    pub double_curves: Vec<DoubleCurve>,
    /// Indexed by dual vertex.
    pub triple_points: Vec<TriplePoint>,
}

impl SncSurface {
    /// One component per polygon, curve `C_i` of a component along side
    /// `i` of its polygon. Every double curve starts node-marked.
    pub fn assemble(
        dual: &DualComplex,
        factory: &mut dyn FnMut(usize) -> Result<Component>,
    ) -> Result<SncSurface> {
        let mut components = Vec::with_capacity(dual.polygons.len());
        for (p, poly) in dual.polygons.iter().enumerate() {
            let c = factory(poly.side_count())?;
            if c.surface.cycle_length() != poly.side_count() {
                return Err(Error::CycleLengthMismatch {
                    polygon: p,
                    expected: poly.side_count(),
                    got: c.surface.cycle_length(),
                });
            }
            for (i, d) in c.surface.degrees(&c.polarization).into_iter().enumerate() {
                if !d.is_one() {
                    return Err(Error::PolarizationDegreeMismatch {
                        polygon: p,
                        position: i,
                        degree: d.to_string(),
                    });
                }
            }
            components.push(c);
        }
        let double_curves = dual
            .gluings
            .iter()
            .map(|g| DoubleCurve {
                curves: g.sides,
                node_marked: true,
            })
            .collect();
        let mut at_corner: Vec<Vec<usize>> = vec![Vec::new(); dual.dual_vertex_count];
        for (p, poly) in dual.polygons.iter().enumerate() {
            for &c in &poly.corners {
                at_corner[c].push(p);
            }
        }
        let triple_points = at_corner
            .into_iter()
            .map(|ps| TriplePoint {
                components: [ps[0], ps[1], ps[2]],
            })
            .collect();
        Ok(SncSurface {
            dual: dual.clone(),
            components,
            double_curves,
            triple_points,
        })
    }

    pub fn from_triangulation(t: &Triangulation) -> Result<SncSurface> {
        let dual = DualComplex::from_triangulation(t)?;
        SncSurface::assemble(&dual, &mut standard_factory())
    }

    pub fn set_node_markings(&mut self, marked: &[bool]) -> Result<()> {
        if marked.len() != self.double_curves.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} markings for {} double curves",
                marked.len(),
                self.double_curves.len()
            )));
        }
        for (c, &m) in self.double_curves.iter_mut().zip(marked) {
            c.node_marked = m;
        }
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.components.len() as i64 - self.double_curves.len() as i64 + self.triple_points.len() as i64
    }

    /// The two components met by each double curve, smaller index first.
    fn curve_components(&self) -> Vec<(usize, usize)> {
        self.double_curves
            .iter()
            .map(|c| {
                let (a, b) = (c.curves[0].polygon, c.curves[1].polygon);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// `(h^0, h^1, h^2)` of the structure sheaf, from the complex
    /// `⊕ O_{Z_i} -> ⊕ O_{C_e} -> ⊕ O_{points}` with rational components
    /// and rational double curves.
    pub fn structure_cohomology(&self) -> (usize, usize, usize) {
        let curves = self.curve_components();
        let index: HashMap<(usize, usize), usize> = curves.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let n0 = self.components.len();
        let n1 = curves.len();
        let n2 = self.triple_points.len();
        let mut d0 = RatMatrix::zeros(n1, n0);
        for (e, &(a, b)) in curves.iter().enumerate() {
            d0[(e, a)] = -BigRational::one();
            d0[(e, b)] = BigRational::one();
        }
        let mut d1 = RatMatrix::zeros(n2, n1);
        for (t, tp) in self.triple_points.iter().enumerate() {
            let mut v = tp.components;
            v.sort_unstable();
            let [a, b, c] = v;
            d1[(t, index[&(b, c)])] += BigRational::one();
            d1[(t, index[&(a, c)])] -= BigRational::one();
            d1[(t, index[&(a, b)])] += BigRational::one();
        }
        let r0 = rank(&d0);
        let r1 = rank(&d1);
        (n0 - r0, n1 - r0 - r1, n2 - r1)
    }

    /// Presentation with one generator per dual edge outside a BFS spanning
    /// tree of the dual graph and one relation per polygon boundary.
    pub fn fundamental_group(&self) -> GroupPresentation {
        let dual = &self.dual;
        let nv = dual.dual_vertex_count;
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        for (g, gl) in dual.gluings.iter().enumerate() {
            adj[gl.ends[0]].push((gl.ends[1], g));
            adj[gl.ends[1]].push((gl.ends[0], g));
        }
        let mut in_tree = vec![false; dual.gluings.len()];
        let mut seen = vec![false; nv];
        let mut queue = std::collections::VecDeque::new();
        if nv > 0 {
            seen[0] = true;
            queue.push_back(0);
        }
        while let Some(v) = queue.pop_front() {
            for &(w, g) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    in_tree[g] = true;
                    queue.push_back(w);
                }
            }
        }
        let mut generator_of = vec![None; dual.gluings.len()];
        let mut generators = 0usize;
        for (g, &t) in in_tree.iter().enumerate() {
            if !t {
                generator_of[g] = Some(generators);
                generators += 1;
            }
        }
        let relations = dual
            .polygons
            .iter()
            .map(|p| {
                (0..p.side_count())
                    .filter_map(|i| {
                        let g = p.sides[i];
                        let gen = generator_of[g]? as i64 + 1;
                        let (from, _) = p.side_ends(i);
                        Some(if from == dual.gluings[g].ends[0] { gen } else { -gen })
                    })
                    .collect()
            })
            .collect();
        GroupPresentation { generators, relations }
    }

    /// Number of classes of components after merging across every
    /// node-marked double curve.
    pub fn loop_kernel_classes(&self) -> usize {
        let curves: Vec<(usize, usize, bool)> = self
            .curve_components()
            .into_iter()
            .zip(&self.double_curves)
            .map(|((a, b), c)| (a, b, c.node_marked))
            .collect();
        loop_classes(self.components.len(), &curves)
    }

    pub fn summary(&self) -> GlueSummary {
        let (h0, h1, h2) = self.structure_cohomology();
        let ab = self.fundamental_group().abelianization();
        GlueSummary {
            components: self.components.len(),
            double_curves: self.double_curves.len(),
            triple_points: self.triple_points.len(),
            cohomology: [h0, h1, h2],
            abelianization: ab,
            canonical_order: self.dual.canonical_order(),
            euler_characteristic: self.euler_characteristic(),
            loop_classes: self.loop_kernel_classes(),
        }
    }
}

/// Union-find count over `component_count` items, merging `(a, b)` for
/// every curve whose flag is set.
pub fn loop_classes(component_count: usize, curves: &[(usize, usize, bool)]) -> usize {
    let mut parent: Vec<usize> = (0..component_count).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut classes = component_count;
    for &(a, b, marked) in curves {
        if !marked {
            continue;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            classes -= 1;
        }
    }
    classes
}

/// Relations are words in `±(g + 1)` for generator `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relations: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub free_rank: usize,
    #[serde(serialize_with = "bigints_as_strings")]
    pub torsion: Vec<BigInt>,
    #[serde(serialize_with = "bigints_as_strings")]
    pub smith_diagonal: Vec<BigInt>,
}

fn bigints_as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl GroupPresentation {
    /// Exponent-sum matrix, one row per relation.
    pub fn relation_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.relations.len(), self.generators);
        for (r, word) in self.relations.iter().enumerate() {
            for &letter in word {
                let g = letter.unsigned_abs() as usize - 1;
                m[(r, g)] += BigInt::from(letter.signum());
            }
        }
        m
    }

    pub fn abelianization(&self) -> Abelianization {
        let snf = smith_normal_form(&self.relation_matrix());
        let nonzero = snf.diagonal.iter().filter(|d| !d.is_zero()).count();
        Abelianization {
            free_rank: self.generators - nonzero,
            torsion: snf.torsion(),
            smith_diagonal: snf.diagonal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlueSummary {
    pub components: usize,
    pub double_curves: usize,
    pub triple_points: usize,
    pub cohomology: [usize; 3],
    pub abelianization: Abelianization,
    pub canonical_order: u8,
    pub euler_characteristic: i64,
    pub loop_classes: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(t: &Triangulation) -> GlueSummary {
        SncSurface::from_triangulation(t).unwrap().summary()
    }

    #[test]
    fn sphere() {
        let s = summary(&Triangulation::tetrahedron());
        assert_eq!(s.cohomology, [1, 0, 1]);
        assert_eq!(s.abelianization.free_rank, 0);
        assert!(s.abelianization.torsion.is_empty());
        assert!(s.abelianization.smith_diagonal.iter().all(One::is_one));
        assert_eq!(s.canonical_order, 1);
        assert_eq!(s.euler_characteristic, 2);
        assert_eq!(s.loop_classes, 1);
    }

    #[test]
    fn torus() {
        let s = summary(&Triangulation::torus());
        assert_eq!(s.cohomology, [1, 2, 1]);
        assert_eq!(s.abelianization.free_rank, 2);
        assert_eq!(s.canonical_order, 1);
    }

    #[test]
    fn projective_plane_and_klein_bottle() {
        let s = summary(&Triangulation::projective_plane());
        assert_eq!(s.cohomology, [1, 0, 0]);
        assert_eq!(s.abelianization.free_rank, 0);
        assert_eq!(s.abelianization.torsion, vec![BigInt::from(2)]);
        assert_eq!(s.canonical_order, 2);
        let k = summary(&Triangulation::klein_bottle());
        assert_eq!(k.cohomology, [1, 1, 0]);
        assert_eq!(k.abelianization.free_rank, 1);
        assert_eq!(k.abelianization.torsion, vec![BigInt::from(2)]);
        assert_eq!(k.canonical_order, 2);
    }

    #[test]
    fn loop_classes_small() {
        assert_eq!(loop_classes(2, &[(0, 1, true)]), 1);
        assert_eq!(loop_classes(2, &[(0, 1, false)]), 2);
        let mut z = SncSurface::from_triangulation(&Triangulation::tetrahedron()).unwrap();
        assert_eq!(z.loop_kernel_classes(), 1);
        z.set_node_markings(&[false; 6]).unwrap();
        assert_eq!(z.loop_kernel_classes(), 4);
    }

    #[test]
    fn dodecahedral_del_pezzo_gluing() {
        let dual = DualComplex::from_triangulation(&Triangulation::icosahedron()).unwrap();
        assert_eq!(dual.polygons.len(), 12);
        assert!(dual.polygons.iter().all(|p| p.side_count() == 5));
        let z = SncSurface::assemble(&dual, &mut |_| Ok(Component::del_pezzo_five())).unwrap();
        assert_eq!(z.summary().cohomology, [1, 0, 1]);
    }

    #[test]
    fn wrong_cycle_length_rejected() {
        let dual = DualComplex::from_triangulation(&Triangulation::tetrahedron()).unwrap();
        let err = SncSurface::assemble(&dual, &mut |_| Ok(Component::del_pezzo_five())).unwrap_err();
        assert_eq!(
            err,
            Error::CycleLengthMismatch {
                polygon: 0,
                expected: 3,
                got: 5
            }
        );
    }

    #[test]
    fn bad_polarization_rejected() {
        let dual = DualComplex::from_triangulation(&Triangulation::tetrahedron()).unwrap();
        let mut factory = |m: usize| {
            let surface = CycleSurface::standard(m)?;
            let polarization = crate::picard::DivisorClass::line(surface.basis_size()).scale(2).to_rational();
            Ok(Component { surface, polarization })
        };
        assert!(matches!(
            SncSurface::assemble(&dual, &mut factory),
            Err(Error::PolarizationDegreeMismatch { polygon: 0, .. })
        ));
    }
}
