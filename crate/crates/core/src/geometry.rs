//! Exact planar geometry on integer points: the strided vertex pattern,
//! shoelace and determinant areas, and collinearity.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::numerics::Rational;
use crate::sequences::SequenceFamily;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: BigInt,
    pub y: BigInt,
}

impl Point {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn translated(&self, dx: &BigInt, dy: &BigInt) -> Self {
        Self {
            x: &self.x + dx,
            y: &self.y + dy,
        }
    }
}

/// `(a − o) × (b − o)`, twice the signed area of triangle `o, a, b`.
fn cross(o: &Point, a: &Point, b: &Point) -> BigInt {
    (&a.x - &o.x) * (&b.y - &o.y) - (&a.y - &o.y) * (&b.x - &o.x)
}

fn half(v: BigInt) -> Rational {
    Rational::new(v, BigInt::from(2))
}

/// Ordered vertex list with at least three vertices. Order is never
/// changed; the shoelace sum depends on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::Domain(format!(
                "a polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { vertices }
    }

    pub fn translated(&self, dx: &BigInt, dy: &BigInt) -> Self {
        Self {
            vertices: self.vertices.iter().map(|p| p.translated(dx, dy)).collect(),
        }
    }
}

/// Which polygon to build: `m` vertices of `family`, starting at index `n`
/// with stride `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolygonSpec {
    pub family: SequenceFamily,
    pub n: u64,
    pub k: u64,
    pub m: u64,
}

impl PolygonSpec {
    pub fn new(family: SequenceFamily, n: u64, k: u64, m: u64) -> Result<Self> {
        if k < 1 {
            return Err(Error::Domain("stride k must be at least 1".into()));
        }
        if m < 3 {
            return Err(Error::Domain(format!(
                "vertex count m must be at least 3, got {m}"
            )));
        }
        Ok(Self { family, n, k, m })
    }

    /// Largest sequence index touched, `n + (2m−1)k`.
    pub fn max_index(&self) -> u64 {
        self.n + (2 * self.m - 1) * self.k
    }
}

/// Vertex `i` of the pattern, read out of a precomputed prefix of the
/// sequence. `terms` must reach index `n + (2m−1)k`.
pub(crate) fn vertices_from_terms(terms: &[BigInt], n: u64, k: u64, m: u64) -> Vec<Point> {
    (0..m)
        .map(|i| {
            let xi = (n + 2 * i * k) as usize;
            let yi = (n + (2 * i + 1) * k) as usize;
            Point::new(terms[xi].clone(), terms[yi].clone())
        })
        .collect()
}

/// Vertex `i` (0-based) is `(f(n + 2ik), f(n + (2i+1)k))`.
pub fn build_vertices(spec: &PolygonSpec) -> Result<Polygon> {
    if spec.k < 1 || spec.m < 3 {
        return Err(Error::Domain(format!(
            "invalid polygon spec: k={}, m={}",
            spec.k, spec.m
        )));
    }
    let len = usize::try_from(spec.max_index() + 1)
        .map_err(|_| Error::Domain("sequence index out of range".into()))?;
    let terms = spec.family.prefix(len)?;
    Polygon::new(vertices_from_terms(&terms, spec.n, spec.k, spec.m))
}

/// Signed surveyor's formula: half the cyclic sum of `xᵢyᵢ₊₁ − xᵢ₊₁yᵢ`.
/// Positive for counter-clockwise order.
pub fn shoelace_signed(poly: &Polygon) -> Rational {
    let v = poly.vertices();
    let mut sum = BigInt::zero();
    for (i, p) in v.iter().enumerate() {
        let q = &v[(i + 1) % v.len()];
        sum += &p.x * &q.y - &q.x * &p.y;
    }
    half(sum)
}

pub fn shoelace_area(poly: &Polygon) -> Rational {
    shoelace_signed(poly).abs()
}

/// Half the absolute determinant of the edge vectors `p2 − p1`, `p3 − p1`.
pub fn triangle_area_det(p1: &Point, p2: &Point, p3: &Point) -> Rational {
    half(cross(p1, p2, p3).abs())
}

/// True iff every point lies on the line through the first two distinct
/// points. Coincident or fewer than three points are collinear.
pub fn collinear(points: &[Point]) -> bool {
    let Some(origin) = points.first() else {
        return true;
    };
    let Some(other) = points.iter().find(|p| *p != origin) else {
        return true;
    };
    points.iter().all(|p| cross(origin, other, p).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{rational_frac, rational_from_int};

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    fn poly(v: &[(i64, i64)]) -> Polygon {
        Polygon::new(pts(v)).unwrap()
    }

    #[test]
    fn build_vertices_examples() {
        let spec = PolygonSpec::new(SequenceFamily::Fibonacci, 1, 1, 3).unwrap();
        assert_eq!(build_vertices(&spec).unwrap(), poly(&[(1, 1), (2, 3), (5, 8)]));
        let spec = PolygonSpec::new(SequenceFamily::Fibonacci, 1, 1, 4).unwrap();
        assert_eq!(
            build_vertices(&spec).unwrap(),
            poly(&[(1, 1), (2, 3), (5, 8), (13, 21)])
        );
        let spec = PolygonSpec::new(SequenceFamily::Polygonal { rank: 3 }, 1, 1, 3).unwrap();
        assert_eq!(
            build_vertices(&spec).unwrap(),
            poly(&[(1, 3), (6, 10), (15, 21)])
        );
    }

    #[test]
    fn spec_validation() {
        assert!(PolygonSpec::new(SequenceFamily::Fibonacci, 0, 0, 3).is_err());
        assert!(PolygonSpec::new(SequenceFamily::Fibonacci, 0, 1, 2).is_err());
        let bad = PolygonSpec::new(SequenceFamily::Polygonal { rank: 2 }, 0, 1, 3).unwrap();
        assert!(build_vertices(&bad).is_err());
    }

    #[test]
    fn polygon_needs_three_vertices() {
        assert!(Polygon::new(pts(&[(0, 0), (1, 1)])).is_err());
    }

    #[test]
    fn shoelace_signed_examples() {
        assert_eq!(
            shoelace_signed(&poly(&[(0, 0), (1, 0), (0, 1)])),
            rational_frac(1, 2)
        );
        assert_eq!(
            shoelace_signed(&poly(&[(0, 0), (0, 1), (1, 0)])),
            rational_frac(-1, 2)
        );
        // Σxᵢyᵢ₊₁ = 137, Σxᵢ₊₁yᵢ = 142
        let fib4 = poly(&[(1, 1), (2, 3), (5, 8), (13, 21)]);
        assert_eq!(shoelace_signed(&fib4), rational_frac(-5, 2));
    }

    #[test]
    fn shoelace_area_examples() {
        assert_eq!(
            shoelace_area(&poly(&[(0, 0), (1, 1), (2, 2)])),
            rational_from_int(0)
        );
        assert_eq!(
            shoelace_area(&poly(&[(1, 2), (5, 13), (34, 89)])),
            rational_frac(15, 2)
        );
        assert_eq!(
            shoelace_area(&poly(&[(1, 1), (3, 5), (11, 21)])),
            rational_from_int(0)
        );
    }

    #[test]
    fn triangle_det_examples() {
        let t = pts(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(triangle_area_det(&t[0], &t[1], &t[2]), rational_frac(1, 2));
        let t = pts(&[(1, 1), (2, 3), (5, 8)]);
        assert_eq!(triangle_area_det(&t[0], &t[1], &t[2]), rational_frac(1, 2));
        let p = Point::new(7, -3);
        assert_eq!(triangle_area_det(&p, &p, &p), rational_from_int(0));
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&pts(&[(1, 1), (3, 5), (11, 21), (43, 85)])));
        assert!(collinear(&pts(&[(2, 1), (5, 7), (17, 31)])));
        assert!(!collinear(&pts(&[(0, 0), (1, 0), (0, 1)])));
        assert!(collinear(&pts(&[(4, 4), (4, 4), (4, 4)])));
        // first two coincide; the line comes from the first distinct point
        assert!(collinear(&pts(&[(0, 0), (0, 0), (1, 2), (2, 4)])));
        assert!(!collinear(&pts(&[(0, 0), (0, 0), (1, 2), (2, 5)])));
        assert!(collinear(&[]));
        assert!(collinear(&pts(&[(3, 9)])));
    }

    #[test]
    fn max_index() {
        let spec = PolygonSpec::new(SequenceFamily::Fibonacci, 2, 3, 4).unwrap();
        assert_eq!(spec.max_index(), 2 + 7 * 3);
    }
}
