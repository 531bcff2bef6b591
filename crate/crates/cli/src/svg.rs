//! Static line plots.

use crate::num::g15;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN: f64 = 60.0;

/// A single polyline on labelled axes.
pub fn line_plot(title: &str, x_label: &str, y_label: &str, points: &[(f64, f64)]) -> String {
    let bounds = |f: fn(&(f64, f64)) -> f64| {
        let lo = points.iter().map(f).fold(f64::INFINITY, f64::min);
        let hi = points.iter().map(f).fold(f64::NEG_INFINITY, f64::max);
        if hi > lo { (lo, hi) } else { (lo - 0.5, lo + 0.5) }
    };
    let (x0, x1) = bounds(|p| p.0);
    let (y0, y1) = bounds(|p| p.1);
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);
    let path: Vec<String> = points
        .iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
        .collect();
    let (left, right, top, bottom) = (MARGIN, WIDTH - MARGIN, MARGIN, HEIGHT - MARGIN);
    format!(
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">
<rect width="100%" height="100%" fill="white"/>
<text x="{cx}" y="30" text-anchor="middle" font-family="sans-serif" font-size="16">{title}</text>
<polyline points="{left},{top} {left},{bottom} {right},{bottom}" fill="none" stroke="black"/>
<text x="{cx}" y="{xl}" text-anchor="middle" font-family="sans-serif" font-size="13">{x_label}</text>
<text x="18" y="{cy}" text-anchor="middle" font-family="sans-serif" font-size="13" transform="rotate(-90 18 {cy})">{y_label}</text>
<text x="{left}" y="{xt}" text-anchor="start" font-family="sans-serif" font-size="11">{x0s}</text>
<text x="{right}" y="{xt}" text-anchor="end" font-family="sans-serif" font-size="11">{x1s}</text>
<text x="{yt}" y="{bottom}" text-anchor="end" font-family="sans-serif" font-size="11">{y0s}</text>
<text x="{yt}" y="{ty}" text-anchor="end" font-family="sans-serif" font-size="11">{y1s}</text>
<polyline points="{pts}" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>
</svg>
"##,
        cx = WIDTH / 2.0,
        cy = HEIGHT / 2.0,
        xl = HEIGHT - 15.0,
        xt = HEIGHT - MARGIN + 16.0,
        yt = MARGIN - 6.0,
        ty = MARGIN + 4.0,
        x0s = g15(x0),
        x1s = g15(x1),
        y0s = g15(y0),
        y1s = g15(y1),
        pts = path.join(" "),
    )
}
