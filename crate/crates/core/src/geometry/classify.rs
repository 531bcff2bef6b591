use super::{segment_param, Point, Scene, Side, SquarePose, Vertex};
use crate::error::{Error, Result};

/// Default contact tolerance `1e-9 * max(1, r)`.
pub fn default_contact_tol(scene: &Scene) -> f64 {
    1e-9 * scene.r().max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineContact {
    CornerOnLine,
    SideOnLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContactKind {
    /// A single vertex lies on the circle and no side is tangent.
    Corner,
    /// A side is tangent at a point strictly inside the side.
    SideTangent,
    /// A vertex lies on the circle and an incident side is tangent there.
    CornerWithTangency,
    None,
}

/// How the square meets one circle, with the vertex and/or side involved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CircleContact {
    pub kind: ContactKind,
    pub vertex: Option<Vertex>,
    pub side: Option<Side>,
}

impl CircleContact {
    const NONE: CircleContact = CircleContact { kind: ContactKind::None, vertex: None, side: None };

    /// True when the circle is tangent to `side` (at an interior point or at an endpoint).
    pub fn is_tangent_along(&self, side: Side) -> bool {
        matches!(self.kind, ContactKind::SideTangent | ContactKind::CornerWithTangency)
            && self.side == Some(side)
    }
}

/// Configuration labels that can be read off a contact profile.
///
/// Only a few configurations are pinned down without the artwork: the
/// `theta = 0` family, the corner-corner configuration #6 and its mirror
/// #19, the symmetric double tangency #9, and #10 (upper-left side tangent
/// to `C1`, upper-right side tangent to `Cr`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConfigHint {
    ThetaZero,
    Six,
    Nine,
    Ten,
    Nineteen,
}

impl ConfigHint {
    pub fn label(self) -> &'static str {
        match self {
            ConfigHint::ThetaZero => "theta-zero",
            ConfigHint::Six => "#6",
            ConfigHint::Nine => "#9",
            ConfigHint::Ten => "#10",
            ConfigHint::Nineteen => "#19",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ContactProfile {
    pub line_contact: LineContact,
    pub c1_contact: CircleContact,
    pub cr_contact: CircleContact,
    pub named_hint: Option<ConfigHint>,
}

fn circle_contact(sq: &SquarePose, center: Point, radius: f64, tol: f64) -> CircleContact {
    // sides tangent to the circle, with the arc-length position of the foot
    let mut tangent_sides = Vec::new();
    for side in Side::ALL {
        let (a, b) = sq.side(side);
        let ab = b - a;
        let raw = (center - a).dot(ab) / ab.dot(ab);
        if !(-tol / sq.s..=1.0 + tol / sq.s).contains(&raw) {
            continue;
        }
        let foot = a + ab * segment_param(center, a, b);
        if (center.distance(foot) - radius).abs() <= tol {
            tangent_sides.push((side, raw * sq.s));
        }
    }
    let on_circle: Vec<Vertex> = Vertex::ALL
        .into_iter()
        .filter(|&v| (sq.vertex(v).distance(center) - radius).abs() <= tol)
        .collect();

    if let Some(&(side, _)) = tangent_sides
        .iter()
        .find(|(_, pos)| *pos > tol && *pos < sq.s - tol)
    {
        return CircleContact { kind: ContactKind::SideTangent, vertex: None, side: Some(side) };
    }
    for &(side, pos) in &tangent_sides {
        let (start, end) = side.endpoints();
        let at = if pos <= tol { start } else { end };
        if on_circle.contains(&at) {
            return CircleContact {
                kind: ContactKind::CornerWithTangency,
                vertex: Some(at),
                side: Some(side),
            };
        }
    }
    match on_circle.first() {
        Some(&v) => CircleContact { kind: ContactKind::Corner, vertex: Some(v), side: None },
        None => CircleContact::NONE,
    }
}

fn hint(line: LineContact, c1: &CircleContact, cr: &CircleContact) -> Option<ConfigHint> {
    use ContactKind::{Corner, CornerWithTangency};
    if line == LineContact::SideOnLine {
        return Some(ConfigHint::ThetaZero);
    }
    match (c1.kind, c1.vertex, cr.kind, cr.vertex) {
        (Corner, Some(Vertex::A), Corner, Some(Vertex::Up)) => return Some(ConfigHint::Six),
        (Corner, Some(Vertex::Up), Corner, Some(Vertex::B)) => return Some(ConfigHint::Nineteen),
        (CornerWithTangency, Some(Vertex::A), CornerWithTangency, Some(Vertex::B))
            if c1.side == Some(Side::UpperLeft) && cr.side == Some(Side::UpperRight) =>
        {
            return Some(ConfigHint::Nine)
        }
        _ => {}
    }
    if c1.is_tangent_along(Side::UpperLeft) && cr.is_tangent_along(Side::UpperRight) {
        return Some(ConfigHint::Ten);
    }
    None
}

/// Classifies how an inscribed square meets `L`, `C1` and `Cr`.
///
/// Fails with [`Error::NotInscribed`] when any clearance exceeds `tol`.
pub fn classify(scene: &Scene, pose: &SquarePose, tol: f64) -> Result<ContactProfile> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::domain(format!("contact tolerance must be positive, got {tol}")));
    }
    for (which, clearance) in [
        ("line", scene.clearance_line(pose)),
        ("C1", scene.clearance1(pose)),
        ("Cr", scene.clearance_r(pose)),
    ] {
        if clearance.abs() > tol {
            return Err(Error::NotInscribed { which, clearance, tol });
        }
    }
    let line_contact = if pose.v_b.y <= tol || pose.theta == 0.0 {
        LineContact::SideOnLine
    } else {
        LineContact::CornerOnLine
    };
    let c1_contact = circle_contact(pose, scene.center1(), 1.0, tol);
    let cr_contact = circle_contact(pose, scene.center_r(), scene.r(), tol);
    Ok(ContactProfile {
        line_contact,
        c1_contact,
        cr_contact,
        named_hint: hint(line_contact, &c1_contact, &cr_contact),
    })
}
