//! SVG picture of the divisorial cone in the `(z, w)` plane with the wall.
//!
//! Screen map on the 640×640 viewport: `X = 80 + 120·z`, `Y = 560 − 120·w`,
//! so the window is `0 ≤ z, w ≤ 4` and the origin sits at `(80, 560)`. The
//! ray `∂_z` is the `w`-axis `{z = 0}`; `∂_w` is `{w = e·z}`.

use std::fmt::Write;

use crate::divisorial::{wall_boundary_report, BoundaryTag, WallReport};
use crate::gluing::GluingParams;

pub const SIZE: u32 = 640;
pub const ORIGIN: (f64, f64) = (80.0, 560.0);
const SCALE: f64 = 120.0;
const WINDOW: f64 = 4.0;

pub fn to_screen(z: f64, w: f64) -> (f64, f64) {
    (ORIGIN.0 + SCALE * z, ORIGIN.1 - SCALE * w)
}

fn pt((x, y): (f64, f64)) -> String {
    format!("{x:.1},{y:.1}")
}

/// End of the ray `w = e·z` inside the window.
fn ray_end(e: u32) -> (f64, f64) {
    let e = e as f64;
    if e <= 1.0 {
        (WINDOW, e * WINDOW)
    } else {
        (WINDOW / e, WINDOW)
    }
}

/// The wall segment on `∂_z`, in `(z, w)` coordinates, if it is drawn.
pub fn wall_segment(r: &WallReport) -> Option<((f64, f64), (f64, f64))> {
    if !r.on_wall {
        return None;
    }
    match r.position.tag {
        BoundaryTag::BoundaryZ => Some(((0.0, 0.25 * WINDOW), (0.0, 0.75 * WINDOW))),
        BoundaryTag::Vertex => Some(((0.0, 0.0), (0.0, 0.75 * WINDOW))),
        BoundaryTag::InteriorCandidate | BoundaryTag::Degenerate => None,
    }
}

pub fn render(g: &GluingParams) -> String {
    let r = wall_boundary_report(g);
    let e = g.surface().e();
    let end = ray_end(e);
    let top_left = to_screen(0.0, WINDOW);
    let top_right = to_screen(WINDOW, WINDOW);
    let mut cone = vec![pt(ORIGIN), pt(to_screen(end.0, end.1))];
    if end.1 < WINDOW {
        cone.push(pt(top_right));
    }
    cone.push(pt(top_left));

    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
    let _ = writeln!(s, r#"  <rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let _ = writeln!(s, r##"  <polygon id="cone" points="{}" fill="#dbe8f6" stroke="none"/>"##, cone.join(" "));
    let (ax, ay) = (to_screen(WINDOW + 0.3, 0.0), to_screen(0.0, WINDOW + 0.3));
    let _ = writeln!(s, r#"  <line id="axis-z" x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black"/>"#, ORIGIN.0, ORIGIN.1, ax.0, ax.1);
    let _ = writeln!(s, r#"  <line id="axis-w" x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black"/>"#, ORIGIN.0, ORIGIN.1, ay.0, ay.1);
    let _ = writeln!(s, r#"  <text x="{:.1}" y="{:.1}" font-size="16">z</text>"#, ax.0 + 6.0, ax.1 + 5.0);
    let _ = writeln!(s, r#"  <text x="{:.1}" y="{:.1}" font-size="16">w</text>"#, ay.0 - 5.0, ay.1 - 8.0);
    let dz = to_screen(0.0, WINDOW);
    let _ = writeln!(s, r##"  <line id="ray-dz" x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="#1f4e8c" stroke-width="2"/>"##, ORIGIN.0, ORIGIN.1, dz.0, dz.1);
    let dw = to_screen(end.0, end.1);
    let _ = writeln!(s, r##"  <line id="ray-dw" x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="#1f4e8c" stroke-width="2"/>"##, ORIGIN.0, ORIGIN.1, dw.0, dw.1);
    if let Some((a, b)) = wall_segment(&r) {
        let (a, b) = (to_screen(a.0, a.1), to_screen(b.0, b.1));
        let _ = writeln!(
            s,
            r##"  <line id="wall" x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="#c0392b" stroke-width="6" stroke-linecap="butt"/>"##,
            a.0, a.1, b.0, b.1
        );
    }
    let _ = writeln!(s, r#"  <text x="360" y="40" font-size="14">e = {e}, m = {}</text>"#, g.glued_type().index());
    s.push_str("</svg>\n");
    s
}
