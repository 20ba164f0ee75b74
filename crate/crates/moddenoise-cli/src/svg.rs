//! Minimal log-log line-plot emitter: axes, decade ticks and one polyline
//! per series. Display only; no interactivity and no plotting dependency.

use moddenoise::experiment::{SeriesLabel, SweepResult};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 460.0;
const MARGIN_L: f64 = 70.0;
const MARGIN_R: f64 = 20.0;
const MARGIN_T: f64 = 20.0;
const MARGIN_B: f64 = 50.0;

fn color(label: SeriesLabel) -> &'static str {
    match label {
        SeriesLabel::Input => "#444444",
        SeriesLabel::Ucqp => "#1f77b4",
        SeriesLabel::Trs => "#d62728",
    }
}

/// Renders mean MSE vs sigma on log-log axes, one series per method.
pub fn render_sweep(result: &SweepResult) -> String {
    let finite: Vec<(f64, f64)> = result
        .rows
        .iter()
        .filter(|r| r.sigma > 0.0 && r.mean_mse > 0.0)
        .map(|r| (r.sigma.log10(), r.mean_mse.log10()))
        .collect();
    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &finite {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if !x0.is_finite() || x0 == x1 {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if !y0.is_finite() || y0 == y1 {
        y0 -= 0.5;
        y1 += 0.5;
    }
    let plot_w = WIDTH - MARGIN_L - MARGIN_R;
    let plot_h = HEIGHT - MARGIN_T - MARGIN_B;
    let px = |x: f64| MARGIN_L + (x - x0) / (x1 - x0) * plot_w;
    let py = |y: f64| MARGIN_T + (y1 - y) / (y1 - y0) * plot_h;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // frame
    svg.push_str(&format!(
        "<rect x=\"{MARGIN_L}\" y=\"{MARGIN_T}\" width=\"{plot_w}\" height=\"{plot_h}\" \
         fill=\"none\" stroke=\"black\"/>\n"
    ));

    // decade ticks
    for k in (x0.ceil() as i64)..=(x1.floor() as i64) {
        let x = px(k as f64);
        svg.push_str(&format!(
            "<line x1=\"{x:.1}\" y1=\"{}\" x2=\"{x:.1}\" y2=\"{}\" stroke=\"#cccccc\"/>\n",
            MARGIN_T,
            MARGIN_T + plot_h
        ));
        svg.push_str(&format!(
            "<text x=\"{x:.1}\" y=\"{}\" text-anchor=\"middle\">1e{k}</text>\n",
            MARGIN_T + plot_h + 18.0
        ));
    }
    for k in (y0.ceil() as i64)..=(y1.floor() as i64) {
        let y = py(k as f64);
        svg.push_str(&format!(
            "<line x1=\"{}\" y1=\"{y:.1}\" x2=\"{}\" y2=\"{y:.1}\" stroke=\"#cccccc\"/>\n",
            MARGIN_L,
            MARGIN_L + plot_w
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{y:.1}\" text-anchor=\"end\" dominant-baseline=\"middle\">1e{k}</text>\n",
            MARGIN_L - 6.0
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">sigma</text>\n",
        MARGIN_L + plot_w / 2.0,
        HEIGHT - 12.0
    ));
    svg.push_str(&format!(
        "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {})\">mean MSE</text>\n",
        MARGIN_T + plot_h / 2.0,
        MARGIN_T + plot_h / 2.0
    ));

    for label in [SeriesLabel::Input, SeriesLabel::Ucqp, SeriesLabel::Trs] {
        let pts: Vec<String> = result
            .series(label)
            .iter()
            .filter(|r| r.sigma > 0.0 && r.mean_mse > 0.0)
            .map(|r| format!("{:.2},{:.2}", px(r.sigma.log10()), py(r.mean_mse.log10())))
            .collect();
        if pts.is_empty() {
            continue;
        }
        svg.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
            pts.join(" "),
            color(label)
        ));
    }

    // legend
    let mut ly = MARGIN_T + 14.0;
    for label in [SeriesLabel::Input, SeriesLabel::Ucqp, SeriesLabel::Trs] {
        if result.series(label).is_empty() {
            continue;
        }
        let lx = MARGIN_L + plot_w - 90.0;
        svg.push_str(&format!(
            "<line x1=\"{lx}\" y1=\"{ly}\" x2=\"{}\" y2=\"{ly}\" stroke=\"{}\" stroke-width=\"2\"/>\n",
            lx + 22.0,
            color(label)
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\">{label}</text>\n",
            lx + 28.0,
            ly + 4.0
        ));
        ly += 18.0;
    }
    svg.push_str("</svg>\n");
    svg
}
