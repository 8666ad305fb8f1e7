//! Symmetric marked-point configurations on the sphere and the permutation
//! action of their rotation groups.
//!
//! Points are left unnormalized: rotations are linear, so invariance and
//! fixed-point counts are unaffected and the arithmetic stays exact.
//! Rotation matrices come from unit quaternions through `v ↦ q v q̄`, whose
//! kernel `{±1}` is the central `⟨Δ²⟩` seen geometrically.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::braid_words::Permutation;
use crate::classifier::{Ambient, GClass, SubgroupDescriptor};
use crate::field::{ExactScalar, Scalar};
use crate::finite_groups::{
    binary_polyhedral_generators, conjugacy_classes, quaternion_closure, rotation_quaternion, GroupError, GroupName,
    GroupTable, Quaternion, QUATERNION_CLOSURE_CAP,
};
use crate::{CyclotomicScalar, QuadScalar};

pub type ExactPoint<T = QuadScalar> = [T; 3];
pub type Matrix<T = QuadScalar> = [[T; 3]; 3];

/// A polyhedral configuration with quadratic-field coordinates.
pub type PolyhedralConfiguration = Configuration<QuadScalar>;
/// An equatorial configuration with cyclotomic coordinates.
pub type EquatorConfiguration = Configuration<CyclotomicScalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("no {polyhedron} recipe places {n} points")]
    NoRecipe { polyhedron: Polyhedron, n: usize },
    #[error("configuration is not invariant: image of point {point} is missing")]
    NotInvariant { point: usize },
    #[error("rotation fixes {fixed} points, expected at most 2")]
    UnexpectedFixedCount { fixed: usize },
    #[error("unknown polyhedron `{0}`")]
    UnknownPolyhedron(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polyhedron {
    Tetrahedron,
    Cube,
    Icosahedron,
    Equator,
}

impl Polyhedron {
    pub fn name(self) -> &'static str {
        match self {
            Polyhedron::Tetrahedron => "tetrahedron",
            Polyhedron::Cube => "cube",
            Polyhedron::Icosahedron => "icosahedron",
            Polyhedron::Equator => "equator",
        }
    }

    /// The binary polyhedral group covering the rotation group.
    pub fn binary_group(self) -> Option<GroupName> {
        match self {
            Polyhedron::Tetrahedron => Some(GroupName::T1),
            Polyhedron::Cube => Some(GroupName::O1),
            Polyhedron::Icosahedron => Some(GroupName::I),
            Polyhedron::Equator => None,
        }
    }
}

impl fmt::Display for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Polyhedron {
    type Err = GeometryError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "tetrahedron" | "tet" => Polyhedron::Tetrahedron,
            "cube" | "octahedron" => Polyhedron::Cube,
            "icosahedron" | "ico" => Polyhedron::Icosahedron,
            "equator" => Polyhedron::Equator,
            _ => return Err(GeometryError::UnknownPolyhedron(s.to_string())),
        })
    }
}

/// Which pieces of the reference solid carry points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recipe {
    pub vertices: bool,
    pub faces: bool,
    /// Points in the interior of each edge.
    pub edge_points: usize,
    /// Equator only: points on the great circle and at the poles.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equator_points: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poles: Option<usize>,
}

impl Recipe {
    fn solid(vertices: bool, faces: bool, edge_points: usize) -> Self {
        Recipe { vertices, faces, edge_points, equator_points: None, poles: None }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let (Some(m), Some(p)) = (self.equator_points, self.poles) {
            return write!(f, "{m} equatorial + {p} polar");
        }
        let mut parts = vec![];
        if self.vertices {
            parts.push("vertices".to_string());
        }
        if self.faces {
            parts.push("faces".to_string());
        }
        if self.edge_points > 0 {
            parts.push(format!("{} per edge", self.edge_points));
        }
        f.write_str(&parts.join(" + "))
    }
}

/// The rotation group of a configuration, as matrices.
#[derive(Clone, Debug)]
pub struct RotationGroup<T> {
    pub elements: Vec<Matrix<T>>,
    /// The binary polyhedral ambient for the solids; `None` on the equator.
    pub ambient: Option<Ambient>,
    table: GroupTable,
}

/// A conjugacy class of nontrivial rotations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RotationClass {
    pub representative: usize,
    pub order: usize,
    pub size: usize,
}

impl<T: ExactScalar> RotationGroup<T> {
    /// Images of the quaternions, with `q` and `-q` identified.
    pub fn from_quaternions(quats: &[Quaternion<T>], ambient: Option<Ambient>) -> Self {
        let mut elements: Vec<Matrix<T>> = vec![];
        let mut index: HashMap<Matrix<T>, usize> = HashMap::new();
        for q in quats {
            let m = q.rotation_matrix();
            if !index.contains_key(&m) {
                index.insert(m.clone(), elements.len());
                elements.push(m);
            }
        }
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&mat_mul(a, b)]).collect())
            .collect();
        let labels = (0..elements.len()).map(|i| format!("r{i}")).collect();
        let table = GroupTable::new(mul, labels).expect("rotation images form a group");
        RotationGroup { elements, ambient, table }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, m: &Matrix<T>) -> Option<usize> {
        self.elements.iter().position(|e| e == m)
    }

    /// Multiplication table; `mul(a, b)` is the matrix product `a·b`.
    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.table.element_order(g)
    }

    pub fn classes(&self) -> Vec<RotationClass> {
        conjugacy_classes(&self.table)
            .into_iter()
            .filter(|c| c[0] != self.table.identity())
            .map(|c| RotationClass { representative: c[0], order: self.table.element_order(c[0]), size: c.len() })
            .collect()
    }

    /// Whether `g` is the square of a rotation of twice its order.
    pub fn has_root(&self, g: usize) -> bool {
        let d = self.element_order(g);
        (0..self.order()).any(|h| self.table.mul(h, h) == g && self.element_order(h) == 2 * d)
    }

    /// The cyclic subgroup of the braid group lying over `⟨g⟩`: order
    /// `2·ord(g)`, in the polyhedral ambient. Inside `O1` a half-turn is
    /// tagged by whether it lies in the copy of `T1`, which holds exactly
    /// the half-turns that are squares of quarter-turns.
    pub fn lift_descriptor(&self, g: usize) -> Option<SubgroupDescriptor> {
        let ambient = self.ambient?;
        let d = self.element_order(g);
        let desc = SubgroupDescriptor::new(GroupName::Cyclic(2 * d), ambient);
        Some(if ambient == Ambient::O1 && d == 2 { desc.with_t1_tag(self.has_root(g)) } else { desc })
    }
}

fn mat_mul<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(T::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone()))
    })
}

pub fn apply<T: Scalar>(m: &Matrix<T>, v: &ExactPoint<T>) -> ExactPoint<T> {
    std::array::from_fn(|i| (0..3).fold(T::zero(), |acc, k| acc + m[i][k].clone() * v[k].clone()))
}

/// Rotation group of a solid: the quaternion model mod `±1`.
pub fn polyhedral_rotation_group(p: Polyhedron) -> Result<RotationGroup<QuadScalar>, GeometryError> {
    let name = p.binary_group().ok_or(GeometryError::NoRecipe { polyhedron: p, n: 0 })?;
    let (quats, _) = quaternion_closure(&binary_polyhedral_generators(name)?, QUATERNION_CLOSURE_CAP)?;
    let ambient = match name {
        GroupName::T1 => Ambient::T1,
        GroupName::O1 => Ambient::O1,
        _ => Ambient::I,
    };
    Ok(RotationGroup::from_quaternions(&quats, Some(ambient)))
}

/// Points of the configuration together with its rotation group.
#[derive(Clone, Debug)]
pub struct Configuration<T> {
    pub polyhedron: Polyhedron,
    pub n: usize,
    pub recipe: Recipe,
    /// Sorted lexicographically by coordinates.
    pub points: Vec<ExactPoint<T>>,
    pub group: RotationGroup<T>,
}

impl<T: ExactScalar> Configuration<T> {
    pub fn to_json(&self) -> serde_json::Value {
        let points: Vec<_> = self.points.iter().map(|p| p.iter().map(|c| c.to_json()).collect::<Vec<_>>()).collect();
        json!({
            "polyhedron": self.polyhedron,
            "n": self.n,
            "recipe": self.recipe,
            "points": points,
        })
    }

    /// One tab-separated line per point.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            out.push_str(&format!("{}\t{}\t{}\n", p[0], p[1], p[2]));
        }
        out
    }

    fn index(&self) -> HashMap<&ExactPoint<T>, usize> {
        self.points.iter().enumerate().map(|(i, p)| (p, i)).collect()
    }

    /// Whether every rotation in the group maps the point set to itself.
    pub fn is_invariant(&self) -> bool {
        let index = self.index();
        self.group.elements.iter().all(|m| self.points.iter().all(|p| index.contains_key(&apply(m, p))))
    }
}

/// Permutation of the points under the rotation `g`.
pub fn induced_permutation<T: ExactScalar>(c: &Configuration<T>, g: &Matrix<T>) -> Result<Permutation, GeometryError> {
    let index = c.index();
    let images = c
        .points
        .iter()
        .enumerate()
        .map(|(i, p)| index.get(&apply(g, p)).copied().ok_or(GeometryError::NotInvariant { point: i }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Permutation::from_images(images).expect("a rotation is injective"))
}

/// `G_f` for a rotation fixing `f ≤ 2` marked points.
pub fn fixed_point_placement<T: ExactScalar>(c: &Configuration<T>, g: &Matrix<T>) -> Result<GClass, GeometryError> {
    let fixed = induced_permutation(c, g)?.fixed_points();
    GClass::from_index(fixed).ok_or(GeometryError::UnexpectedFixedCount { fixed })
}

fn q(v: i64) -> QuadScalar {
    QuadScalar::from_int(v)
}

fn phi() -> QuadScalar {
    QuadScalar::new(Ratio::new(1, 2), Ratio::new(1, 2), 5)
}

fn reference_vertices(p: Polyhedron) -> Vec<ExactPoint> {
    let signs = [-1, 1];
    match p {
        Polyhedron::Tetrahedron => {
            let mut v = vec![];
            for a in signs {
                for b in signs {
                    v.push([q(a), q(b), q(a * b)]);
                }
            }
            v
        }
        Polyhedron::Cube => {
            let mut v = vec![];
            for a in signs {
                for b in signs {
                    for c in signs {
                        v.push([q(a), q(b), q(c)]);
                    }
                }
            }
            v
        }
        Polyhedron::Icosahedron => {
            let mut v = vec![];
            for a in signs {
                for b in signs {
                    let (one, f) = (q(a), phi() * q(b));
                    v.push([q(0), one.clone(), f.clone()]);
                    v.push([one.clone(), f.clone(), q(0)]);
                    v.push([f, q(0), one]);
                }
            }
            v
        }
        Polyhedron::Equator => vec![],
    }
}

fn dist2(a: &ExactPoint, b: &ExactPoint) -> QuadScalar {
    (0..3).fold(q(0), |acc, i| {
        let d = a[i].clone() - b[i].clone();
        acc + d.clone() * d
    })
}

/// Vertex pairs at the shortest distance.
fn edges(vs: &[ExactPoint]) -> Vec<(usize, usize)> {
    let pairs: Vec<_> = (0..vs.len()).flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j))).collect();
    let min = pairs.iter().map(|&(i, j)| dist2(&vs[i], &vs[j])).min().expect("at least two vertices");
    pairs.into_iter().filter(|&(i, j)| dist2(&vs[i], &vs[j]) == min).collect()
}

/// Unnormalized face centers, all at the same distance from the origin.
fn face_centers(p: Polyhedron, vs: &[ExactPoint]) -> Vec<ExactPoint> {
    match p {
        Polyhedron::Cube => (0..3)
            .flat_map(|i| {
                [-1, 1].map(|s| {
                    let mut v = [q(0), q(0), q(0)];
                    v[i] = q(s);
                    v
                })
            })
            .collect(),
        _ => {
            let es = edges(vs);
            let adj = |a: usize, b: usize| es.contains(&(a.min(b), a.max(b)));
            let mut out = vec![];
            for &(a, b) in &es {
                for c in b + 1..vs.len() {
                    if adj(a, c) && adj(b, c) {
                        out.push(std::array::from_fn(|i| vs[a][i].clone() + vs[b][i].clone() + vs[c][i].clone()));
                    }
                }
            }
            out
        }
    }
}

fn recipe_for(p: Polyhedron, n: usize) -> Option<Recipe> {
    let r = Recipe::solid;
    match p {
        Polyhedron::Tetrahedron => (n % 6 == 4).then(|| r(true, false, (n - 4) / 6)),
        Polyhedron::Cube => match (n / 12, n % 12) {
            (k, 0) if k >= 1 => Some(r(false, false, k)),
            (k, 2) if k >= 1 => Some(r(true, true, k - 1)),
            (k, 6) => Some(r(false, true, k)),
            (k, 8) => Some(r(true, false, k)),
            _ => None,
        },
        // 12 vertices and 20 faces
        Polyhedron::Icosahedron => match (n / 30, n % 30) {
            (k, 0) if k >= 1 => Some(r(false, false, k)),
            (k, 2) if k >= 1 => Some(r(true, true, k - 1)),
            (k, 12) => Some(r(true, false, k)),
            (k, 20) => Some(r(false, true, k)),
            _ => None,
        },
        Polyhedron::Equator => None,
    }
}

/// The recipe configuration on a tetrahedron, cube or icosahedron.
///
/// The tetrahedron uses `n = 6k+4`; the cube `12k`, `12k+2` (vertices, faces
/// and `k−1` per edge), `12k+6`, `12k+8`; the icosahedron `30k`, `30k+2`,
/// `30k+12` (vertices), `30k+20` (faces). Equatorial configurations come from
/// [`build_equator`].
pub fn build_configuration(p: Polyhedron, n: usize) -> Result<PolyhedralConfiguration, GeometryError> {
    let recipe = recipe_for(p, n).ok_or(GeometryError::NoRecipe { polyhedron: p, n })?;
    let vs = reference_vertices(p);
    let mut points = vec![];
    if recipe.vertices {
        points.extend(vs.iter().cloned());
    }
    if recipe.faces {
        points.extend(face_centers(p, &vs));
    }
    let k = recipe.edge_points as i64;
    for (a, b) in edges(&vs) {
        for j in 1..=k {
            let t = QuadScalar::from_ratio(j, k + 1);
            points.push(std::array::from_fn(|i| vs[a][i].clone() + t.clone() * (vs[b][i].clone() - vs[a][i].clone())));
        }
    }
    points.sort();
    debug_assert_eq!(points.len(), n);
    Ok(Configuration { polyhedron: p, n, recipe, points, group: polyhedral_rotation_group(p)? })
}

/// `n − poles` points evenly spaced on the great circle `x = 0`, plus
/// `poles ∈ {0, 1, 2}` points on the `x`-axis. The group is generated by the
/// rotation through `2π/(n − poles)` about the `x`-axis, together with a
/// half-turn about the `y`-axis unless there is exactly one pole.
pub fn build_equator(n: usize, poles: usize) -> Result<EquatorConfiguration, GeometryError> {
    let no = GeometryError::NoRecipe { polyhedron: Polyhedron::Equator, n };
    if poles > 2 || n < poles + 2 {
        return Err(no);
    }
    type C = CyclotomicScalar;
    let m = n - poles;
    let turn = rotation_quaternion(2 * m);
    let mut gens = vec![turn.clone()];
    if poles != 1 {
        gens.push(Quaternion::j());
    }
    let (quats, _) = quaternion_closure(&gens, QUATERNION_CLOSURE_CAP)?;
    let group = RotationGroup::from_quaternions(&quats, None);
    let r = turn.rotation_matrix();
    let mut points = vec![];
    let mut p: ExactPoint<C> = [C::zero(), C::one(), C::zero()];
    for _ in 0..m {
        let next = apply(&r, &p);
        points.push(p);
        p = next;
    }
    let pole = |s: i64| [C::from_int(s), C::zero(), C::zero()];
    match poles {
        1 => points.push(pole(1)),
        2 => points.extend([pole(1), pole(-1)]),
        _ => {}
    }
    points.sort();
    let recipe = Recipe { vertices: false, faces: false, edge_points: 0, equator_points: Some(m), poles: Some(poles) };
    Ok(Configuration { polyhedron: Polyhedron::Equator, n, recipe, points, group })
}
