//! Planar geometry primitives shared across the planning stack.
//!
//! All coordinates are in meters in the workspace frame unless a function
//! says otherwise. Polylines are plain `Vec<Point>` with helpers for arc
//! length, resampling, and distance queries.

/// A point (or vector) in the plane, meters.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(&self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn dist_sq(&self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn add(&self, other: Point) -> Point {
        Point::new(self.x + other.x, self.y + other.y)
    }

    pub fn sub(&self, other: Point) -> Point {
        Point::new(self.x - other.x, self.y - other.y)
    }

    pub fn scale(&self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }

    pub fn dot(&self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Linear interpolation between `self` and `other`.
    pub fn lerp(&self, other: Point, t: f64) -> Point {
        Point::new(
            self.x + (other.x - self.x) * t,
            self.y + (other.y - self.y) * t,
        )
    }
}

/// An ordered sequence of points.
pub type Polyline = Vec<Point>;

/// Total arc length of a polyline.
pub fn arc_length(poly: &[Point]) -> f64 {
    poly.windows(2).map(|w| w[0].dist(w[1])).sum()
}

/// Distance from `p` to the segment `a`-`b`, plus the parameter `t` of the
/// closest point (`0` at `a`, `1` at `b`).
pub fn point_segment(p: Point, a: Point, b: Point) -> (f64, f64) {
    let ab = b.sub(a);
    let len_sq = ab.dot(ab);
    if len_sq <= 0.0 {
        return (p.dist(a), 0.0);
    }
    let t = (p.sub(a).dot(ab) / len_sq).clamp(0.0, 1.0);
    (p.dist(a.lerp(b, t)), t)
}

/// Minimum distance from `p` to a polyline.
pub fn dist_to_polyline(p: Point, poly: &[Point]) -> f64 {
    if poly.is_empty() {
        return f64::INFINITY;
    }
    if poly.len() == 1 {
        return p.dist(poly[0]);
    }
    poly.windows(2)
        .map(|w| point_segment(p, w[0], w[1]).0)
        .fold(f64::INFINITY, f64::min)
}

/// Point at arc-length position `s` along the polyline (clamped to its ends).
pub fn point_at_arc(poly: &[Point], s: f64) -> Point {
    assert!(!poly.is_empty());
    if s <= 0.0 {
        return poly[0];
    }
    let mut acc = 0.0;
    for w in poly.windows(2) {
        let seg = w[0].dist(w[1]);
        if acc + seg >= s && seg > 0.0 {
            return w[0].lerp(w[1], (s - acc) / seg);
        }
        acc += seg;
    }
    *poly.last().unwrap()
}

/// Resample a polyline at roughly uniform spacing `step`, keeping both ends.
pub fn resample(poly: &[Point], step: f64) -> Polyline {
    let total = arc_length(poly);
    if poly.len() < 2 || total <= step {
        return poly.to_vec();
    }
    let n = (total / step).ceil() as usize;
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        out.push(point_at_arc(poly, total * i as f64 / n as f64));
    }
    out
}

/// Ramer-Douglas-Peucker simplification with tolerance `eps`.
pub fn simplify(poly: &[Point], eps: f64) -> Polyline {
    if poly.len() <= 2 {
        return poly.to_vec();
    }
    let mut keep = vec![false; poly.len()];
    keep[0] = true;
    keep[poly.len() - 1] = true;
    let mut stack = vec![(0usize, poly.len() - 1)];
    while let Some((lo, hi)) = stack.pop() {
        if hi <= lo + 1 {
            continue;
        }
        let (mut best, mut best_d) = (lo, -1.0);
        for i in lo + 1..hi {
            let (d, _) = point_segment(poly[i], poly[lo], poly[hi]);
            if d > best_d {
                best = i;
                best_d = d;
            }
        }
        if best_d > eps {
            keep[best] = true;
            stack.push((lo, best));
            stack.push((best, hi));
        }
    }
    poly.iter()
        .zip(&keep)
        .filter_map(|(p, k)| k.then_some(*p))
        .collect()
}

/// Interior angle at `b` formed by `a-b-c`, in radians within `[0, pi]`.
pub fn interior_angle(a: Point, b: Point, c: Point) -> f64 {
    let u = a.sub(b);
    let v = c.sub(b);
    let nu = u.norm();
    let nv = v.norm();
    if nu <= 0.0 || nv <= 0.0 {
        return std::f64::consts::PI;
    }
    (u.dot(v) / (nu * nv)).clamp(-1.0, 1.0).acos()
}

/// Area of the intersection of two disks of radius `r` whose centers are `d`
/// apart (the symmetric lens).
pub fn disk_lens_area(r: f64, d: f64) -> f64 {
    if d >= 2.0 * r {
        return 0.0;
    }
    if d <= 0.0 {
        return std::f64::consts::PI * r * r;
    }
    let half = d / 2.0;
    2.0 * (r * r * (half / r).acos() - half * (r * r - half * half).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_length_of_square_path() {
        let poly = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ];
        assert!((arc_length(&poly) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn point_segment_projects_inside_and_clamps() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(2.0, 0.0);
        let (d, t) = point_segment(Point::new(1.0, 1.0), a, b);
        assert!((d - 1.0).abs() < 1e-12 && (t - 0.5).abs() < 1e-12);
        let (d, t) = point_segment(Point::new(-3.0, 4.0), a, b);
        assert!((d - 5.0).abs() < 1e-12 && t == 0.0);
    }

    #[test]
    fn simplify_keeps_corner() {
        let poly: Polyline = (0..=10)
            .map(|i| Point::new(i as f64 * 0.1, 0.0))
            .chain((1..=10).map(|i| Point::new(1.0, i as f64 * 0.1)))
            .collect();
        let s = simplify(&poly, 0.01);
        assert_eq!(s.len(), 3);
        assert!(s[1].dist(Point::new(1.0, 0.0)) < 1e-12);
    }

    #[test]
    fn lens_area_limits() {
        let full = disk_lens_area(1.0, 0.0);
        assert!((full - std::f64::consts::PI).abs() < 1e-12);
        assert_eq!(disk_lens_area(1.0, 2.5), 0.0);
    }

    #[test]
    fn point_at_arc_midpoint() {
        let poly = vec![Point::new(0.0, 0.0), Point::new(4.0, 0.0)];
        let p = point_at_arc(&poly, 1.0);
        assert!((p.x - 1.0).abs() < 1e-12);
    }
}
