//! Static SVG: a Dyck path, its image under the involution, and the
//! parallelogram polyomino of that image with the lattice-path endpoints.

use std::fmt::Write;

use narayana::{phi, to_lattice_pair, to_polyomino, DyckPath, Point, Step};

use crate::CliError;

const UNIT: i64 = 16;
const CELL: i64 = 28;
const MARGIN: i64 = 24;
const TITLE: i64 = 22;
const GAP: i64 = 36;

fn heights(p: &DyckPath) -> Vec<i64> {
    let mut h = 0;
    let mut out = vec![0];
    for s in p.steps() {
        h += if *s == Step::Up { 1 } else { -1 };
        out.push(h);
    }
    out
}

fn polyline(points: &[(i64, i64)]) -> String {
    points
        .iter()
        .map(|(x, y)| format!("{x},{y}"))
        .collect::<Vec<_>>()
        .join(" ")
}

struct Canvas {
    body: String,
    width: i64,
    y: i64,
}

impl Canvas {
    fn title(&mut self, text: &str) {
        writeln!(
            self.body,
            r#"<text x="{MARGIN}" y="{}" font-size="13">{text}</text>"#,
            self.y + 14
        )
        .unwrap();
        self.y += TITLE;
    }

    fn dyck_panel(&mut self, class: &str, title: &str, p: &DyckPath) {
        self.title(title);
        let hs = heights(p);
        let top = *hs.iter().max().unwrap();
        let to_svg = |k: usize, h: i64| (MARGIN + k as i64 * UNIT, self.y + (top - h) * UNIT);
        let ground_y = self.y + top * UNIT;
        let right = MARGIN + (hs.len() as i64 - 1) * UNIT;
        writeln!(
            self.body,
            r##"<line x1="{MARGIN}" y1="{ground_y}" x2="{right}" y2="{ground_y}" stroke="#999" stroke-width="1"/>"##
        )
        .unwrap();
        let pts: Vec<(i64, i64)> = hs.iter().enumerate().map(|(k, &h)| to_svg(k, h)).collect();
        writeln!(
            self.body,
            r##"<polyline class="{class}" data-path="{p}" points="{}" fill="none" stroke="#000" stroke-width="2"/>"##,
            polyline(&pts)
        )
        .unwrap();
        for (x, y) in &pts {
            writeln!(
                self.body,
                r##"<circle cx="{x}" cy="{y}" r="2" fill="#000"/>"##
            )
            .unwrap();
        }
        self.width = self.width.max(right + MARGIN);
        self.y += top * UNIT + GAP;
    }

    fn polyomino_panel(&mut self, image: &DyckPath) -> Result<(), CliError> {
        let q = to_polyomino(image)?;
        let pair = to_lattice_pair(&q);
        let corner = q.upper_right();
        self.title(&format!(
            "parallelogram polyomino: upper {}, lower {}",
            q.upper(),
            q.lower()
        ));
        let (y0, top) = (self.y, corner.y);
        let to_svg = |p: Point| (MARGIN + p.x * CELL, y0 + (top - p.y) * CELL);
        let upper: Vec<_> = q
            .upper()
            .points_from(Point::default())
            .into_iter()
            .map(to_svg)
            .collect();
        let lower: Vec<_> = q
            .lower()
            .points_from(Point::default())
            .into_iter()
            .map(to_svg)
            .collect();
        let outline: Vec<_> = upper.iter().chain(lower.iter().rev()).copied().collect();
        writeln!(
            self.body,
            r##"<polygon class="polyomino" points="{}" fill="#dde8f5" stroke="none"/>"##,
            polyline(&outline)
        )
        .unwrap();
        for x in 0..=corner.x {
            let (sx, _) = to_svg(Point::new(x, 0));
            writeln!(
                self.body,
                r##"<line x1="{sx}" y1="{y0}" x2="{sx}" y2="{}" stroke="#eee" stroke-width="1"/>"##,
                y0 + top * CELL
            )
            .unwrap();
        }
        for (class, pts) in [("upper-boundary", &upper), ("lower-boundary", &lower)] {
            writeln!(
                self.body,
                r##"<polyline class="{class}" points="{}" fill="none" stroke="#000" stroke-width="2"/>"##,
                polyline(pts)
            )
            .unwrap();
        }
        if pair.degenerate {
            writeln!(
                self.body,
                r##"<text class="degenerate" x="{}" y="{}" font-size="11">j = n: no upper lattice path</text>"##,
                MARGIN + corner.x * CELL + 12,
                y0 + 12
            )
            .unwrap();
        } else {
            for (class, pts) in [
                ("lattice-upper", pair.upper_points()),
                ("lattice-lower", pair.lower_points()),
            ] {
                let pts: Vec<_> = pts.into_iter().map(to_svg).collect();
                writeln!(
                    self.body,
                    r##"<polyline class="{class}" points="{}" fill="none" stroke="#c33" stroke-width="3" stroke-dasharray="6 3"/>"##,
                    polyline(&pts)
                )
                .unwrap();
            }
            let e = pair.endpoints();
            for (label, p) in [("A1", e.a1), ("B1", e.b1), ("A2", e.a2), ("B2", e.b2)] {
                let (x, y) = to_svg(p);
                writeln!(
                    self.body,
                    r##"<circle class="endpoint" data-label="{label}" data-x="{}" data-y="{}" cx="{x}" cy="{y}" r="5" fill="#c33"/>"##,
                    p.x, p.y
                )
                .unwrap();
                writeln!(
                    self.body,
                    r#"<text x="{}" y="{}" font-size="11">{label}={p}</text>"#,
                    x + 7,
                    y - 6
                )
                .unwrap();
            }
        }
        self.width = self.width.max(MARGIN + corner.x * CELL + 180);
        self.y += top * CELL + MARGIN;
        Ok(())
    }
}

/// Renders the three panels for a nonempty path.
pub fn render_figure(p: &DyckPath) -> Result<String, CliError> {
    if p.is_empty() {
        return Err(CliError::Domain("figure needs a nonempty path".into()));
    }
    let s = p.stats();
    let image = phi(p);
    let t = image.stats();
    let mut canvas = Canvas {
        body: String::new(),
        width: 0,
        y: MARGIN,
    };
    canvas.dyck_panel(
        "source",
        &format!(
            "Dyck path {p}: n={}, {} returns, {} peaks",
            s.semilength, s.returns, s.peaks
        ),
        p,
    );
    canvas.dyck_panel(
        "image",
        &format!(
            "after the involution: initial ascent {}, {} peaks",
            t.initial_ascent, t.peaks
        ),
        &image,
    );
    canvas.polyomino_panel(&image)?;
    Ok(format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n{body}</svg>\n",
        w = canvas.width,
        h = canvas.y,
        body = canvas.body
    ))
}
