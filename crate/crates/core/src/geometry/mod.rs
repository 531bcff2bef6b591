//! Scene construction, the inscribed-square solver and its geometric oracles.
//!
//! Coordinates are fixed so that the line `L` is the x-axis, the unit circle
//! `C1` is tangent to it at the origin and the radius-`r` circle `Cr` is
//! tangent to it at `(2 sqrt(r), 0)`.

mod bounds;
mod classify;
mod solver;
mod sweep;

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

pub use bounds::{bound_m, pivot_balance, pivot_y};
pub use classify::{
    classify, default_contact_tol, CircleContact, ConfigHint, ContactKind, ContactProfile,
    LineContact,
};
pub use solver::{inscribed_square, inscribed_square_with, touch_offset, SolverOptions};
pub use sweep::{brute_force_mu, brute_force_mu_with, side_length_curve, SweepMinimum, THETA_MAX};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

/// Foot parameter of the projection of `p` onto segment `a -> b`, clamped to `[0, 1]`.
fn segment_param(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return 0.0;
    }
    ((p - a).dot(ab) / len2).clamp(0.0, 1.0)
}

pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let t = segment_param(p, a, b);
    p.distance(a + (b - a) * t)
}

/// The line, the unit circle and the radius-`r` circle, mutually tangent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scene {
    r: f64,
    sqrt_r: f64,
}

impl Scene {
    pub fn new(r: f64) -> Result<Self> {
        if !r.is_finite() || r < 1.0 {
            return Err(Error::domain(format!("radius ratio r must be a finite real >= 1, got {r}")));
        }
        Ok(Scene { r, sqrt_r: r.sqrt() })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn center1(&self) -> Point {
        Point::new(0.0, 1.0)
    }

    pub fn center_r(&self) -> Point {
        Point::new(2.0 * self.sqrt_r, self.r)
    }

    /// Points where `C1` and `Cr` touch the line.
    pub fn tangent_points(&self) -> (Point, Point) {
        (Point::new(0.0, 0.0), Point::new(2.0 * self.sqrt_r, 0.0))
    }

    /// Signed gap between a square and `C1`; negative means overlap.
    pub fn clearance1(&self, sq: &SquarePose) -> f64 {
        sq.region_distance(self.center1()) - 1.0
    }

    /// Signed gap between a square and `Cr`; negative means overlap.
    pub fn clearance_r(&self, sq: &SquarePose) -> f64 {
        sq.region_distance(self.center_r()) - self.r
    }

    /// Signed gap between a square and the line (height of its lowest vertex).
    pub fn clearance_line(&self, sq: &SquarePose) -> f64 {
        sq.vertices().iter().map(|v| v.y).fold(f64::INFINITY, f64::min)
    }
}

/// The four corners of a square, named as in the usual figure: `Dn` is the
/// bottom vertex on `L`, then `B`, `Up`, `A` counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Dn,
    B,
    Up,
    A,
}

/// Sides in counter-clockwise order starting from the lower-right side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `Dn -> B`, meets `L` at angle theta.
    LowerRight,
    /// `B -> Up`.
    UpperRight,
    /// `Up -> A`.
    UpperLeft,
    /// `A -> Dn`.
    LowerLeft,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::LowerRight, Side::UpperRight, Side::UpperLeft, Side::LowerLeft];

    pub fn endpoints(self) -> (Vertex, Vertex) {
        match self {
            Side::LowerRight => (Vertex::Dn, Vertex::B),
            Side::UpperRight => (Vertex::B, Vertex::Up),
            Side::UpperLeft => (Vertex::Up, Vertex::A),
            Side::LowerLeft => (Vertex::A, Vertex::Dn),
        }
    }
}

impl Vertex {
    pub const ALL: [Vertex; 4] = [Vertex::Dn, Vertex::B, Vertex::Up, Vertex::A];
}

/// A square resting on `L` with its lower-right side tilted by `theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquarePose {
    pub theta: f64,
    pub s: f64,
    pub v_dn: Point,
    pub v_b: Point,
    pub v_up: Point,
    pub v_a: Point,
}

impl SquarePose {
    /// Square with bottom vertex at `(offset, 0)`.
    pub fn on_line(offset: f64, theta: f64, s: f64) -> Self {
        let (sin, cos) = theta.sin_cos();
        let along = Point::new(cos, sin) * s;
        let up = Point::new(-sin, cos) * s;
        let v_dn = Point::new(offset, 0.0);
        SquarePose {
            theta,
            s,
            v_dn,
            v_b: v_dn + along,
            v_up: v_dn + along + up,
            v_a: v_dn + up,
        }
    }

    /// Vertices in counter-clockwise order `[Dn, B, Up, A]`.
    pub fn vertices(&self) -> [Point; 4] {
        [self.v_dn, self.v_b, self.v_up, self.v_a]
    }

    pub fn vertex(&self, v: Vertex) -> Point {
        match v {
            Vertex::Dn => self.v_dn,
            Vertex::B => self.v_b,
            Vertex::Up => self.v_up,
            Vertex::A => self.v_a,
        }
    }

    pub fn side(&self, side: Side) -> (Point, Point) {
        let (a, b) = side.endpoints();
        (self.vertex(a), self.vertex(b))
    }

    pub fn contains(&self, p: Point) -> bool {
        Side::ALL.iter().all(|&side| {
            let (a, b) = self.side(side);
            (b - a).cross(p - a) >= 0.0
        })
    }

    /// Distance from `p` to the boundary of the square.
    pub fn boundary_distance(&self, p: Point) -> f64 {
        Side::ALL
            .iter()
            .map(|&side| {
                let (a, b) = self.side(side);
                point_segment_distance(p, a, b)
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Distance from `p` to the closed square; zero inside.
    pub fn region_distance(&self, p: Point) -> f64 {
        if self.contains(p) {
            0.0
        } else {
            self.boundary_distance(p)
        }
    }
}
