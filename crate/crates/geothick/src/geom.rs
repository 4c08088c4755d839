//! Exact rational planar geometry: points, orientation, segment classification.
//!
//! All predicates are computed over arbitrary-precision rationals; no floating
//! point appears anywhere on a decision path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Exact rational coordinate. `num_rational` keeps the representation
/// canonical: gcd(|num|, den) = 1 and den > 0.
pub type Rat = BigRational;

/// Build a rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Build a rational from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point::new(rat_int(x), rat_int(y))
    }

    pub fn add(&self, dx: &Rat, dy: &Rat) -> Point {
        Point::new(&self.x + dx, &self.y + dy)
    }

    /// Squared Euclidean distance, exact.
    pub fn dist2(&self, other: &Point) -> Rat {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }
}

/// Sign of the cross product (q - p) x (r - p).
/// +1 for a left turn, 0 for collinear, -1 for a right turn.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> i32 {
    let v = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    sign_of(&v)
}

pub fn sign_of(v: &Rat) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact cross product of direction vectors (a -> b) x (c -> d).
pub fn cross_dirs(a: &Point, b: &Point, c: &Point, d: &Point) -> Rat {
    (&b.x - &a.x) * (&d.y - &c.y) - (&b.y - &a.y) * (&d.x - &c.x)
}

/// A closed straight segment with distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }
}

/// Exact classification of how two segments meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegRel {
    Disjoint,
    /// Interiors cross transversally at the returned point.
    ProperCross(Point),
    /// Exactly one endpoint is shared and the interiors are disjoint.
    SharedEndpoint,
    /// An endpoint of one segment lies in the relative interior of the other.
    EndpointTouchInterior(Point),
    /// The segments are collinear and share more than one point.
    CollinearOverlap,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("degenerate segment: both endpoints equal {0:?}")]
    DegenerateSegment(Point),
}

/// True iff `p` lies on the closed segment, assuming p, a, b collinear.
fn on_segment_collinear(s: &Segment, p: &Point) -> bool {
    let lo_x = s.a.x.clone().min(s.b.x.clone());
    let hi_x = s.a.x.clone().max(s.b.x.clone());
    let lo_y = s.a.y.clone().min(s.b.y.clone());
    let hi_y = s.a.y.clone().max(s.b.y.clone());
    lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y
}

/// True iff `p` lies strictly inside the segment (collinearity checked).
pub fn point_in_interior(s: &Segment, p: &Point) -> bool {
    if orientation(&s.a, &s.b, p) != 0 {
        return false;
    }
    on_segment_collinear(s, p) && *p != s.a && *p != s.b
}

/// True iff `p` lies on the closed segment.
pub fn point_on_segment(s: &Segment, p: &Point) -> bool {
    orientation(&s.a, &s.b, p) == 0 && on_segment_collinear(s, p)
}

/// Intersection point of the supporting lines, if not parallel.
pub fn line_intersection(s1: &Segment, s2: &Segment) -> Option<Point> {
    let d = cross_dirs(&s1.a, &s1.b, &s2.a, &s2.b);
    if d.is_zero() {
        return None;
    }
    // Solve s1.a + t (s1.b - s1.a) = s2.a + u (s2.b - s2.a).
    let t_num = cross_dirs(&s1.a, &s2.a, &s2.a, &s2.b);
    let t = t_num / d;
    let x = &s1.a.x + &t * (&s1.b.x - &s1.a.x);
    let y = &s1.a.y + &t * (&s1.b.y - &s1.a.y);
    Some(Point::new(x, y))
}

/// Exact classification of the intersection of two nondegenerate segments.
pub fn segment_relation(s1: &Segment, s2: &Segment) -> Result<SegRel, GeomError> {
    if s1.a == s1.b {
        return Err(GeomError::DegenerateSegment(s1.a.clone()));
    }
    if s2.a == s2.b {
        return Err(GeomError::DegenerateSegment(s2.a.clone()));
    }

    let o1 = orientation(&s1.a, &s1.b, &s2.a);
    let o2 = orientation(&s1.a, &s1.b, &s2.b);
    let o3 = orientation(&s2.a, &s2.b, &s1.a);
    let o4 = orientation(&s2.a, &s2.b, &s1.b);

    // Collinear supporting lines.
    if o1 == 0 && o2 == 0 {
        let shared_endpoints = [(&s1.a, &s2.a), (&s1.a, &s2.b), (&s1.b, &s2.a), (&s1.b, &s2.b)]
            .iter()
            .filter(|(p, q)| p == q)
            .count();
        // Count how many endpoints of one lie on the other beyond shared ends.
        let overlap = point_in_interior(s2, &s1.a)
            || point_in_interior(s2, &s1.b)
            || point_in_interior(s1, &s2.a)
            || point_in_interior(s1, &s2.b)
            || (s1 == s2)
            || (s1.a == s2.b && s1.b == s2.a);
        if overlap {
            return Ok(SegRel::CollinearOverlap);
        }
        if shared_endpoints == 1 {
            return Ok(SegRel::SharedEndpoint);
        }
        return Ok(SegRel::Disjoint);
    }

    // Shared endpoint (non-collinear case): interiors cannot overlap further.
    let shared = (s1.a == s2.a) || (s1.a == s2.b) || (s1.b == s2.a) || (s1.b == s2.b);
    if shared {
        // The other endpoint may still lie in the partner's interior.
        if point_in_interior(s2, &s1.a) {
            return Ok(SegRel::EndpointTouchInterior(s1.a.clone()));
        }
        if point_in_interior(s2, &s1.b) {
            return Ok(SegRel::EndpointTouchInterior(s1.b.clone()));
        }
        if point_in_interior(s1, &s2.a) {
            return Ok(SegRel::EndpointTouchInterior(s2.a.clone()));
        }
        if point_in_interior(s1, &s2.b) {
            return Ok(SegRel::EndpointTouchInterior(s2.b.clone()));
        }
        return Ok(SegRel::SharedEndpoint);
    }

    // Endpoint of one in the interior of the other.
    if o1 == 0 && point_in_interior(s1, &s2.a) {
        return Ok(SegRel::EndpointTouchInterior(s2.a.clone()));
    }
    if o2 == 0 && point_in_interior(s1, &s2.b) {
        return Ok(SegRel::EndpointTouchInterior(s2.b.clone()));
    }
    if o3 == 0 && point_in_interior(s2, &s1.a) {
        return Ok(SegRel::EndpointTouchInterior(s1.a.clone()));
    }
    if o4 == 0 && point_in_interior(s2, &s1.b) {
        return Ok(SegRel::EndpointTouchInterior(s1.b.clone()));
    }

    if o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        let p = line_intersection(s1, s2).expect("non-parallel by orientation test");
        return Ok(SegRel::ProperCross(p));
    }

    Ok(SegRel::Disjoint)
}

/// Parameter of `p` along segment `s` (0 at `a`, 1 at `b`); requires `p` on the
/// supporting line.
pub fn param_on_line(s: &Segment, p: &Point) -> Rat {
    let dx = &s.b.x - &s.a.x;
    let dy = &s.b.y - &s.a.y;
    // Use the larger axis for numerical exactness (division is exact anyway;
    // we only need dx or dy nonzero).
    if !dx.is_zero() {
        (&p.x - &s.a.x) / dx
    } else {
        (&p.y - &s.a.y) / dy
    }
}

/// Point at parameter `t` along segment `s`.
pub fn point_at(s: &Segment, t: &Rat) -> Point {
    Point::new(
        &s.a.x + t * (&s.b.x - &s.a.x),
        &s.a.y + t * (&s.b.y - &s.a.y),
    )
}

/// Squared distance from point to closed segment, exact.
pub fn point_segment_dist2(p: &Point, s: &Segment) -> Rat {
    let dx = &s.b.x - &s.a.x;
    let dy = &s.b.y - &s.a.y;
    let len2 = &dx * &dx + &dy * &dy;
    if len2.is_zero() {
        return p.dist2(&s.a);
    }
    let t = ((&p.x - &s.a.x) * &dx + (&p.y - &s.a.y) * &dy) / &len2;
    let t = if t < Rat::zero() {
        Rat::zero()
    } else if t > Rat::one() {
        Rat::one()
    } else {
        t
    };
    let q = point_at(s, &t);
    p.dist2(&q)
}

/// A rational lower bound on sqrt(v): returns r with r^2 <= v.
pub fn rat_sqrt_lower(v: &Rat) -> Rat {
    if v.is_negative() || v.is_zero() {
        return Rat::zero();
    }
    // sqrt(n/d) = sqrt(n*d)/d >= isqrt(n*d)/d
    let nd = v.numer() * v.denom();
    BigRational::new(nd.sqrt(), v.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::ints(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(0, 1)), 1);
        assert_eq!(orientation(&pt(0, 0), &pt(1, 1), &pt(2, 2)), 0);
        assert_eq!(orientation(&pt(0, 0), &pt(0, 1), &pt(1, 0)), -1);
    }

    #[test]
    fn segment_relation_proper_cross() {
        let s1 = Segment::new(pt(0, 0), pt(2, 2));
        let s2 = Segment::new(pt(0, 2), pt(2, 0));
        match segment_relation(&s1, &s2).unwrap() {
            SegRel::ProperCross(p) => assert_eq!(p, pt(1, 1)),
            other => panic!("expected proper cross, got {other:?}"),
        }
    }

    #[test]
    fn segment_relation_shared_endpoint() {
        let s1 = Segment::new(pt(0, 0), pt(1, 0));
        let s2 = Segment::new(pt(1, 0), pt(2, 1));
        assert_eq!(segment_relation(&s1, &s2).unwrap(), SegRel::SharedEndpoint);
    }

    #[test]
    fn segment_relation_collinear_overlap() {
        let s1 = Segment::new(pt(0, 0), pt(2, 0));
        let s2 = Segment::new(pt(1, 0), pt(3, 0));
        assert_eq!(segment_relation(&s1, &s2).unwrap(), SegRel::CollinearOverlap);
    }

    #[test]
    fn collinear_but_disjoint() {
        let s1 = Segment::new(pt(0, 0), pt(1, 0));
        let s2 = Segment::new(pt(2, 0), pt(3, 0));
        assert_eq!(segment_relation(&s1, &s2).unwrap(), SegRel::Disjoint);
    }

    #[test]
    fn consecutive_collinear_share_endpoint_only() {
        let s1 = Segment::new(pt(0, 0), pt(1, 0));
        let s2 = Segment::new(pt(1, 0), pt(2, 0));
        assert_eq!(segment_relation(&s1, &s2).unwrap(), SegRel::SharedEndpoint);
    }

    #[test]
    fn endpoint_touch_interior() {
        let s1 = Segment::new(pt(0, 0), pt(2, 0));
        let s2 = Segment::new(pt(1, 0), pt(1, 5));
        match segment_relation(&s1, &s2).unwrap() {
            SegRel::EndpointTouchInterior(p) => assert_eq!(p, pt(1, 0)),
            other => panic!("expected touch, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_errors() {
        let s1 = Segment::new(pt(0, 0), pt(0, 0));
        let s2 = Segment::new(pt(1, 0), pt(2, 0));
        assert!(segment_relation(&s1, &s2).is_err());
    }

    #[test]
    fn identical_segments_overlap() {
        let s1 = Segment::new(pt(0, 0), pt(2, 2));
        assert_eq!(
            segment_relation(&s1, &s1.clone()).unwrap(),
            SegRel::CollinearOverlap
        );
    }

    #[test]
    fn sqrt_lower_bound() {
        let v = rat(50, 2); // 25
        let r = rat_sqrt_lower(&v);
        assert!(&r * &r <= v);
        assert!(r >= rat_int(4));
    }
}
