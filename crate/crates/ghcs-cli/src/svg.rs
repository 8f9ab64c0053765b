//! Minimal deterministic SVG polyline plots: axes, one polyline, a title.

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 45.0;

/// Render y(x) as a polyline; byte output depends only on the inputs.
pub fn polyline_plot(title: &str, x_label: &str, xs: &[f64], ys: &[f64]) -> String {
    assert_eq!(xs.len(), ys.len());
    assert!(!xs.is_empty());
    let (x_min, x_max) = bounds(xs);
    let (y_min, y_max) = bounds(ys);
    let inner_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let inner_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let map_x = |x: f64| MARGIN_LEFT + (x - x_min) / span(x_min, x_max) * inner_w;
    let map_y = |y: f64| HEIGHT - MARGIN_BOTTOM - (y - y_min) / span(y_min, y_max) * inner_h;

    let mut points = String::new();
    for (x, y) in xs.iter().zip(ys) {
        points.push_str(&format!("{:.3},{:.3} ", map_x(*x), map_y(*y)));
    }
    let points = points.trim_end();

    let x0 = MARGIN_LEFT;
    let x1 = WIDTH - MARGIN_RIGHT;
    let y0 = HEIGHT - MARGIN_BOTTOM;
    let y1 = MARGIN_TOP;
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\">\n",
            "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
            "<text x=\"{tx}\" y=\"20\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">{title}</text>\n",
            "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>\n",
            "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>\n",
            "<text x=\"{x0}\" y=\"{lbly}\" font-family=\"monospace\" font-size=\"11\">{xmin:.6}</text>\n",
            "<text x=\"{x1}\" y=\"{lbly}\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">{xmax:.6}</text>\n",
            "<text x=\"{tx}\" y=\"{lbly2}\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">{x_label}</text>\n",
            "<text x=\"{ylblx}\" y=\"{y0}\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">{ymin:.6}</text>\n",
            "<text x=\"{ylblx}\" y=\"{y1}\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">{ymax:.6}</text>\n",
            "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"{points}\"/>\n",
            "</svg>\n",
        ),
        w = WIDTH,
        h = HEIGHT,
        tx = (MARGIN_LEFT + WIDTH - MARGIN_RIGHT) / 2.0,
        title = title,
        x0 = x0,
        x1 = x1,
        y0 = y0,
        y1 = y1,
        lbly = HEIGHT - MARGIN_BOTTOM + 16.0,
        lbly2 = HEIGHT - MARGIN_BOTTOM + 32.0,
        x_label = x_label,
        ylblx = MARGIN_LEFT - 6.0,
        xmin = x_min,
        xmax = x_max,
        ymin = y_min,
        ymax = y_max,
        points = points,
    )
}

fn bounds(values: &[f64]) -> (f64, f64) {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (min, max)
}

fn span(min: f64, max: f64) -> f64 {
    if max > min {
        max - min
    } else {
        1.0
    }
}
