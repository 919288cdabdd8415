use std::f64::consts::{PI, TAU};

use crate::{Complex, Error, Result};

use super::{angle_of, Point2, COLLINEAR_TOL};

/// A convex polygon in the plane, identified with `ℂ`.
///
/// Vertices are stored counterclockwise in strictly convex position, starting
/// at the lexicographic minimum `(x, y)`. Points (one vertex) and segments
/// (two vertices) are admitted.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon2 {
    vertices: Vec<Point2>,
}

fn cross(a: Point2, b: Point2) -> f64 {
    a.x * b.y - a.y * b.x
}

fn lex_less(a: &Point2, b: &Point2) -> bool {
    a.x < b.x || (a.x == b.x && a.y < b.y)
}

impl Polygon2 {
    /// Convex hull of `points` in canonical form.
    pub fn from_points(points: &[Point2]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidInput("polygon needs at least one point".into()));
        }
        if points.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::InvalidInput("non-finite coordinate".into()));
        }
        let scale = points
            .iter()
            .map(|p| p.x.abs().max(p.y.abs()))
            .fold(0.0, f64::max)
            .max(1.0);
        let dup_tol = 1e-12 * scale;

        let mut pts = points.to_vec();
        pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        pts.dedup_by(|a, b| (*a - *b).norm() <= dup_tol);
        if pts.len() == 1 {
            return Ok(Self { vertices: pts });
        }

        // Andrew's monotone chain; keeps only strict left turns.
        let turn = |o: Point2, a: Point2, b: Point2| {
            let (u, v) = (a - o, b - o);
            cross(u, v) > COLLINEAR_TOL * u.norm() * v.norm()
        };
        let mut lower: Vec<Point2> = Vec::with_capacity(pts.len());
        for &p in &pts {
            while lower.len() >= 2 && !turn(lower[lower.len() - 2], lower[lower.len() - 1], p) {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Point2> = Vec::with_capacity(pts.len());
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && !turn(upper[upper.len() - 2], upper[upper.len() - 1], p) {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        let mut hull = lower;
        hull.dedup_by(|a, b| (*a - *b).norm() <= dup_tol);
        while hull.len() > 1 && (hull[0] - hull[hull.len() - 1]).norm() <= dup_tol {
            hull.pop();
        }
        Ok(Self::canonical(simplify(hull)))
    }

    /// Rotates the cycle to start at the lexicographic minimum, comparing
    /// `x` up to rounding so that a vertical left edge always starts at its
    /// lower end.
    fn canonical(mut vertices: Vec<Point2>) -> Self {
        if vertices.is_empty() {
            return Self { vertices };
        }
        let scale = vertices
            .iter()
            .map(|v| v.x.abs().max(v.y.abs()))
            .fold(1.0, f64::max);
        let min_x = vertices.iter().map(|v| v.x).fold(f64::INFINITY, f64::min);
        let start = (0..vertices.len())
            .filter(|&i| vertices[i].x <= min_x + 1e-12 * scale)
            .min_by(|&i, &j| vertices[i].y.total_cmp(&vertices[j].y))
            .expect("non-empty");
        vertices.rotate_left(start);
        Self { vertices }
    }

    pub fn point(p: Point2) -> Self {
        Self { vertices: vec![p] }
    }

    pub fn segment(a: Point2, b: Point2) -> Result<Self> {
        Self::from_points(&[a, b])
    }

    /// Axis-aligned rectangle `[x0, x1] × [y0, y1]`.
    pub fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        Self::from_points(&[
            Point2::new(x0, y0),
            Point2::new(x1, y0),
            Point2::new(x1, y1),
            Point2::new(x0, y1),
        ])
    }

    /// The unit square `[−1/2, 1/2]²`.
    pub fn unit_square() -> Self {
        Self::rect(-0.5, -0.5, 0.5, 0.5).expect("valid square")
    }

    /// The interval `[−i/2, i/2]` generating the classical difference body.
    pub fn interval() -> Self {
        Self::segment(Point2::new(0.0, -0.5), Point2::new(0.0, 0.5)).expect("valid segment")
    }

    /// Regular `n`-gon with the given side length whose edge normals sit at
    /// angles `phase + 2πk/n`.
    pub fn regular(n: usize, side: f64, phase: f64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput("regular polygon needs n >= 3".into()));
        }
        let circ = side / (2.0 * (PI / n as f64).sin());
        let pts: Vec<_> = (0..n)
            .map(|k| {
                let a = phase + (2.0 * k as f64 + 1.0) * PI / n as f64;
                Point2::new(circ * a.cos(), circ * a.sin())
            })
            .collect();
        Self::from_points(&pts)
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// Edge vectors `v_{i+1} − v_i`, cyclically. A segment has two opposite
    /// edges, a point none.
    pub fn edge_vectors(&self) -> Vec<Point2> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n)
            .map(|i| self.vertices[(i + 1) % n] - self.vertices[i])
            .collect()
    }

    /// Outward normal angles of the edges, in `[0, 2π)`.
    pub fn edge_normal_angles(&self) -> Vec<f64> {
        self.edge_vectors()
            .into_iter()
            .map(|e| angle_of(Point2::new(e.y, -e.x)))
            .collect()
    }

    pub fn support_dir(&self, u: Point2) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dot(&u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn support(&self, theta: f64) -> f64 {
        self.support_dir(Point2::new(theta.cos(), theta.sin()))
    }

    pub fn width(&self, theta: f64) -> f64 {
        self.support(theta) + self.support(theta + PI)
    }

    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        if n < 3 {
            return 0.0;
        }
        let v0 = self.vertices[0];
        (1..n - 1)
            .map(|i| cross(self.vertices[i] - v0, self.vertices[i + 1] - v0))
            .sum::<f64>()
            / 2.0
    }

    /// Perimeter; a segment counts twice its length.
    pub fn perimeter(&self) -> f64 {
        self.edge_vectors().iter().map(|e| e.norm()).sum()
    }

    pub fn translate(&self, t: Point2) -> Self {
        Self::canonical(self.vertices.iter().map(|v| v + t).collect())
    }

    /// `−P`.
    pub fn reflect(&self) -> Self {
        let pts: Vec<_> = self.vertices.iter().map(|v| -v).collect();
        Self::from_points(&pts).expect("reflection of a valid polygon")
    }

    pub fn scale(&self, s: f64) -> Self {
        self.rotate_scale(Complex::new(s, 0.0))
    }

    /// Multiplies every vertex by `rho` as a complex number.
    pub fn rotate_scale(&self, rho: Complex) -> Self {
        let pts: Vec<_> = self
            .vertices
            .iter()
            .map(|v| {
                let z = rho * Complex::new(v.x, v.y);
                Point2::new(z.re, z.im)
            })
            .collect();
        Self::from_points(&pts).expect("image of a valid polygon")
    }

    /// Exact Minkowski sum by merging edge sequences sorted by direction.
    pub fn minkowski_sum(&self, other: &Polygon2) -> Polygon2 {
        let (sa, ea) = self.edges_from_bottom();
        let (sb, eb) = other.edges_from_bottom();
        let mut start = sa + sb;
        let mut pts = Vec::with_capacity(ea.len() + eb.len() + 1);
        pts.push(start);
        let (mut i, mut j) = (0, 0);
        while i < ea.len() || j < eb.len() {
            let take_a = j >= eb.len() || (i < ea.len() && ea[i].0 <= eb[j].0);
            let e = if take_a {
                i += 1;
                ea[i - 1].1
            } else {
                j += 1;
                eb[j - 1].1
            };
            start += e;
            pts.push(start);
        }
        Polygon2::from_points(&pts).expect("sum of valid polygons")
    }

    /// The origin of the edge with the smallest direction angle in `[0, 2π)`
    /// and all edges from there on, with their angles (ascending up to
    /// rounding).
    fn edges_from_bottom(&self) -> (Point2, Vec<(f64, Point2)>) {
        let n = self.vertices.len();
        if n < 2 {
            return (self.vertices[0], Vec::new());
        }
        let edges: Vec<(f64, Point2)> = (0..n)
            .map(|i| {
                let e = self.vertices[(i + 1) % n] - self.vertices[i];
                (angle_of(e), e)
            })
            .collect();
        let b = (0..n)
            .min_by(|&i, &j| edges[i].0.total_cmp(&edges[j].0))
            .expect("non-empty");
        let mut ordered = edges;
        ordered.rotate_left(b);
        (self.vertices[b], ordered)
    }

    pub fn contains(&self, p: Point2, tol: f64) -> bool {
        match self.vertices.len() {
            1 => (p - self.vertices[0]).norm() <= tol,
            2 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                let d = b - a;
                let t = ((p - a).dot(&d) / d.norm_squared()).clamp(0.0, 1.0);
                (a + d * t - p).norm() <= tol
            }
            n => (0..n).all(|i| {
                let a = self.vertices[i];
                let e = self.vertices[(i + 1) % n] - a;
                cross(e, p - a) >= -tol * e.norm()
            }),
        }
    }

    /// Intersection of two convex polygons (half-plane clipping).
    pub fn intersect(&self, other: &Polygon2) -> Result<Polygon2> {
        let tol = 1e-12 * (1.0 + self.max_abs().max(other.max_abs()));
        let empty = || Error::EmptyResult("polygons do not intersect".into());
        match (self.len(), other.len()) {
            (1, _) => {
                return if other.contains(self.vertices[0], tol) {
                    Ok(self.clone())
                } else {
                    Err(empty())
                }
            }
            (_, 1) => return other.intersect(self),
            (2, 2) => return segment_segment(self, other, tol).ok_or_else(empty),
            (2, _) => return clip_segment(self, other, tol).ok_or_else(empty),
            (_, 2) => return clip_segment(other, self, tol).ok_or_else(empty),
            _ => {}
        }
        let mut poly = self.vertices.clone();
        let n = other.len();
        for i in 0..n {
            let a = other.vertices[i];
            let e = other.vertices[(i + 1) % n] - a;
            let side = |p: Point2| cross(e, p - a) / e.norm();
            let mut out = Vec::with_capacity(poly.len() + 1);
            for k in 0..poly.len() {
                let p = poly[k];
                let q = poly[(k + 1) % poly.len()];
                let (sp, sq) = (side(p), side(q));
                if sp >= -tol {
                    out.push(p);
                }
                if (sp >= -tol) != (sq >= -tol) {
                    let t = sp / (sp - sq);
                    out.push(p + (q - p) * t);
                }
            }
            poly = out;
            if poly.is_empty() {
                return Err(empty());
            }
        }
        Polygon2::from_points(&poly)
    }

    fn max_abs(&self) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.x.abs().max(v.y.abs()))
            .fold(0.0, f64::max)
    }

    /// Steiner point as the exterior-angle weighted mean of the vertices.
    pub fn steiner_point(&self) -> Point2 {
        let n = self.vertices.len();
        if n == 1 {
            return self.vertices[0];
        }
        let normals = self.edge_normal_angles();
        let mut s = Point2::zeros();
        for i in 0..n {
            // normal cone of v_i lies between the normals of edges i-1 and i
            let mut ext = normals[i] - normals[(i + n - 1) % n];
            if ext <= 0.0 {
                ext += TAU;
            }
            s += self.vertices[i] * (ext / TAU);
        }
        s
    }

    /// Area centroid (midpoint for segments).
    pub fn centroid(&self) -> Point2 {
        match self.vertices.len() {
            1 => self.vertices[0],
            2 => (self.vertices[0] + self.vertices[1]) / 2.0,
            n => {
                let v0 = self.vertices[0];
                let mut acc = Point2::zeros();
                let mut area = 0.0;
                for i in 1..n - 1 {
                    let (a, b) = (self.vertices[i], self.vertices[i + 1]);
                    let w = cross(a - v0, b - v0) / 2.0;
                    acc += (v0 + a + b) * (w / 3.0);
                    area += w;
                }
                acc / area
            }
        }
    }

    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut d: f64 = 0.0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                d = d.max((v[i] - v[j]).norm());
            }
        }
        d
    }

    /// Minimal width, attained at an edge normal.
    pub fn min_width(&self) -> f64 {
        if self.len() < 3 {
            return 0.0;
        }
        self.edge_normal_angles()
            .into_iter()
            .map(|t| self.width(t))
            .fold(f64::INFINITY, f64::min)
    }

    /// Hausdorff distance `sup_θ |h_P(θ) − h_Q(θ)|`.
    pub fn hausdorff(&self, other: &Polygon2) -> f64 {
        let mut angles = self.edge_normal_angles();
        angles.extend(other.edge_normal_angles());
        angles.push(0.0);
        angles.sort_by(f64::total_cmp);
        let mut best: f64 = 0.0;
        for w in 0..angles.len() {
            let a = angles[w];
            let b = if w + 1 < angles.len() { angles[w + 1] } else { angles[0] + TAU };
            best = best.max((self.support(a) - other.support(a)).abs());
            // between breakpoints the difference is <p - q, u> for fixed p, q
            let mid = 0.5 * (a + b);
            let d = self.argmax(mid) - other.argmax(mid);
            if arc_contains(a, b, angle_of(d)) || arc_contains(a, b, angle_of(-d)) {
                best = best.max(d.norm());
            }
        }
        best
    }

    fn argmax(&self, theta: f64) -> Point2 {
        let u = Point2::new(theta.cos(), theta.sin());
        *self
            .vertices
            .iter()
            .max_by(|a, b| a.dot(&u).total_cmp(&b.dot(&u)))
            .expect("non-empty")
    }

    /// Largest vertex-wise distance after matching canonical orders; `None`
    /// when the vertex counts differ.
    pub fn vertex_distance(&self, other: &Polygon2) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        Some(
            self.vertices
                .iter()
                .zip(&other.vertices)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max),
        )
    }

    #[doc(hidden)]
    pub fn is_lex_start(&self) -> bool {
        let v0 = self.vertices[0];
        self.vertices
            .iter()
            .skip(1)
            .all(|v| v.x > v0.x - 1e-12 || !lex_less(v, &v0))
    }
}

fn arc_contains(a: f64, b: f64, t: f64) -> bool {
    let mut t = t;
    while t < a {
        t += TAU;
    }
    t <= b
}

/// Removes vertices whose turn is below the collinearity tolerance.
fn simplify(mut v: Vec<Point2>) -> Vec<Point2> {
    loop {
        let n = v.len();
        if n < 3 {
            return v;
        }
        let bad = (0..n).find(|&i| {
            let a = v[(i + n - 1) % n];
            let (p, b) = (v[i], v[(i + 1) % n]);
            let (e1, e2) = (p - a, b - p);
            cross(e1, e2) <= COLLINEAR_TOL * e1.norm() * e2.norm()
        });
        match bad {
            Some(i) => {
                v.remove(i);
            }
            None => return v,
        }
    }
}

fn clip_segment(seg: &Polygon2, poly: &Polygon2, tol: f64) -> Option<Polygon2> {
    let (a, b) = (seg.vertices[0], seg.vertices[1]);
    let d = b - a;
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    let n = poly.len();
    for i in 0..n {
        let p = poly.vertices[i];
        let e = poly.vertices[(i + 1) % n] - p;
        let en = e.norm();
        // inside: cross(e, x - p) >= 0
        let s0 = cross(e, a - p) / en;
        let ds = cross(e, d) / en;
        if ds.abs() < 1e-300 {
            if s0 < -tol {
                return None;
            }
            continue;
        }
        let t = -s0 / ds;
        if ds > 0.0 {
            t0 = t0.max(t);
        } else {
            t1 = t1.min(t);
        }
    }
    if t0 > t1 + tol / d.norm().max(1e-300) {
        return None;
    }
    let t1 = t1.max(t0);
    Polygon2::from_points(&[a + d * t0, a + d * t1]).ok()
}

fn segment_segment(s: &Polygon2, t: &Polygon2, tol: f64) -> Option<Polygon2> {
    let (a, b) = (s.vertices[0], s.vertices[1]);
    let (c, e) = (t.vertices[0], t.vertices[1]);
    let (d1, d2) = (b - a, e - c);
    let den = cross(d1, d2);
    if den.abs() <= COLLINEAR_TOL * d1.norm() * d2.norm() {
        if cross(d1, c - a).abs() > tol * d1.norm() {
            return None;
        }
        let l2 = d1.norm_squared();
        let pc = (c - a).dot(&d1) / l2;
        let pe = (e - a).dot(&d1) / l2;
        let lo = pc.min(pe).max(0.0);
        let hi = pc.max(pe).min(1.0);
        if lo > hi + tol {
            return None;
        }
        return Polygon2::from_points(&[a + d1 * lo, a + d1 * hi.max(lo)]).ok();
    }
    let u = cross(c - a, d2) / den;
    let v = cross(c - a, d1) / den;
    let eps = tol / d1.norm().min(d2.norm()).max(1e-300);
    if (-eps..=1.0 + eps).contains(&u) && (-eps..=1.0 + eps).contains(&v) {
        Some(Polygon2::point(a + d1 * u.clamp(0.0, 1.0)))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn hull_drops_interior_point() {
        let t = Polygon2::from_points(&[p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0), p(0.2, 0.2)]).unwrap();
        assert_eq!(t.vertices(), &[p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)]);
    }

    #[test]
    fn degenerate_inputs() {
        let pt = Polygon2::from_points(&[p(0.0, 0.0)]).unwrap();
        assert!(pt.is_point());
        let seg = Polygon2::from_points(&[p(0.0, 0.0), p(0.5, 0.0), p(1.0, 0.0)]).unwrap();
        assert!(seg.is_segment());
        assert!((seg.perimeter() - 2.0).abs() < 1e-15);
        assert!(Polygon2::from_points(&[p(f64::NAN, 0.0)]).is_err());
        assert!(Polygon2::from_points(&[]).is_err());
    }

    #[test]
    fn support_examples() {
        let sq = Polygon2::unit_square();
        assert!((sq.support(0.0) - 0.5).abs() < 1e-15);
        assert!((sq.support(PI / 4.0) - 2f64.sqrt() / 2.0).abs() < 1e-15);
        let t = Polygon2::from_points(&[p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)]).unwrap();
        assert!(t.support(PI).abs() < 1e-15);
    }

    #[test]
    fn minkowski_examples() {
        let k = Polygon2::regular(5, 1.0, 0.3).unwrap();
        let moved = k.minkowski_sum(&Polygon2::point(p(2.0, -1.0)));
        assert!(moved.vertex_distance(&k.translate(p(2.0, -1.0))).unwrap() < 1e-12);

        let a = Polygon2::segment(p(0.0, 0.0), p(1.0, 0.0)).unwrap();
        let b = Polygon2::segment(p(0.0, 0.0), p(0.0, 1.0)).unwrap();
        let sq = a.minkowski_sum(&b);
        assert_eq!(sq, Polygon2::rect(0.0, 0.0, 1.0, 1.0).unwrap());

        let t = Polygon2::from_points(&[p(0.0, 0.0), p(1.0, 0.0), p(0.0, 1.0)]).unwrap();
        let dt = t.minkowski_sum(&t.reflect());
        assert_eq!(dt.len(), 6);
        assert!((dt.area() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn rotate_scale_examples() {
        let sq = Polygon2::unit_square();
        assert_eq!(sq.rotate_scale(Complex::new(1.0, 0.0)), sq);
        assert!(sq.rotate_scale(Complex::new(0.0, 1.0)).vertex_distance(&sq).unwrap() < 1e-15);
        let seg = Polygon2::segment(p(0.0, 0.0), p(1.0, 0.0)).unwrap();
        let r = seg.rotate_scale(Complex::from_polar(2.0, PI / 4.0));
        let want = Polygon2::segment(p(0.0, 0.0), p(2f64.sqrt(), 2f64.sqrt())).unwrap();
        assert!(r.vertex_distance(&want).unwrap() < 1e-15);
        assert!(sq.rotate_scale(Complex::new(0.0, 0.0)).is_point());
        let k = Polygon2::regular(7, 0.4, 0.1).unwrap();
        let rho = Complex::new(0.3, -1.2);
        assert!((k.rotate_scale(rho).area() - rho.norm_sqr() * k.area()).abs() < 1e-12);
    }

    #[test]
    fn intersection_examples() {
        let a = Polygon2::rect(0.0, 0.0, 2.0, 2.0).unwrap();
        let b = Polygon2::rect(1.0, 1.0, 3.0, 3.0).unwrap();
        assert_eq!(a.intersect(&a).unwrap(), a);
        let i = a.intersect(&b).unwrap();
        assert!(i.vertex_distance(&Polygon2::rect(1.0, 1.0, 2.0, 2.0).unwrap()).unwrap() < 1e-12);
        let far = Polygon2::rect(5.0, 5.0, 6.0, 6.0).unwrap();
        assert!(matches!(a.intersect(&far), Err(Error::EmptyResult(_))));
        let seg = Polygon2::segment(p(-1.0, 1.0), p(3.0, 1.0)).unwrap();
        let cut = seg.intersect(&a).unwrap();
        assert!(cut.vertex_distance(&Polygon2::segment(p(0.0, 1.0), p(2.0, 1.0)).unwrap()).unwrap() < 1e-12);
    }

    #[test]
    fn steiner_point_of_translated_square() {
        let s = Polygon2::unit_square().translate(p(0.7, -2.0)).steiner_point();
        assert!((s - p(0.7, -2.0)).norm() < 1e-14);
    }

    #[test]
    fn canonical_start_is_lexicographic_min() {
        let k = Polygon2::regular(9, 1.0, 0.77).unwrap();
        assert!(k.is_lex_start());
        assert!(k.rotate_scale(Complex::from_polar(1.0, 2.0)).is_lex_start());
    }
}
