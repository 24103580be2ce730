//! Fixed-style figures: 800×800, axes through the origin, the region in one
//! flat tone and the tight circle dashed.

use std::fmt::Write;

use crate::documents::{RegionDocument, TOOL_VERSION};

const SIZE: f64 = 800.0;
/// Half-width of the plotted square `[-W, W]²`; every region lies in the unit disk.
const WORLD: f64 = 1.1;
const FILL: &str = "#9ecae1";

fn to_px(x: f64, y: f64) -> (f64, f64) {
    ((x + WORLD) / (2.0 * WORLD) * SIZE, (WORLD - y) / (2.0 * WORLD) * SIZE)
}

/// The second line carries the tool version; everything else depends only on the document.
pub fn render(doc: &RegionDocument) -> String {
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(s, "<!-- {TOOL_VERSION} -->");
    let _ = writeln!(s, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">");
    let _ = writeln!(s, "<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>");

    s.push_str("<polygon fill=\"");
    s.push_str(FILL);
    s.push_str("\" stroke=\"none\" points=\"");
    for (k, p) in doc.boundary.iter().enumerate() {
        let (x, y) = to_px(p[0], p[1]);
        if k > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{x:.3},{y:.3}");
    }
    s.push_str("\"/>\n");

    let (ox, oy) = to_px(0.0, 0.0);
    let _ = writeln!(s, "<line x1=\"0\" y1=\"{oy:.3}\" x2=\"{SIZE}\" y2=\"{oy:.3}\" stroke=\"black\" stroke-width=\"1\"/>");
    let _ = writeln!(s, "<line x1=\"{ox:.3}\" y1=\"0\" x2=\"{ox:.3}\" y2=\"{SIZE}\" stroke=\"black\" stroke-width=\"1\"/>");

    let c = doc.tight_circle;
    let (cx, cy) = to_px(c.center[0], c.center[1]);
    let r = c.radius / (2.0 * WORLD) * SIZE;
    let _ = writeln!(
        s,
        "<circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"{r:.3}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"8 6\"/>"
    );
    s.push_str("</svg>\n");
    s
}
