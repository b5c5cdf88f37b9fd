//! Static figure exports: SVG for line arrangements, OFF for a single cell of
//! a plane arrangement. Both are write-only formats.

use std::fmt::Write;

use crate::arrangement::CellSignature;
use crate::cell::{CellRecord, Skeleton};
use crate::exact::{Rational, RationalVector};
use crate::statistics::ArrangementAnalysis;
use crate::{Error, Result};

/// Fill colours indexed by cell diameter (1-based); larger diameters reuse the last.
pub const DIAMETER_COLORS: [&str; 8] =
    ["#fde725", "#90d743", "#35b779", "#21918c", "#31688e", "#443983", "#440154", "#2b0030"];

pub fn diameter_color(diameter: usize) -> &'static str {
    DIAMETER_COLORS[diameter.clamp(1, DIAMETER_COLORS.len()) - 1]
}

const CANVAS: f64 = 800.0;
const MARGIN: f64 = 10.0;

/// Walks a 2-regular connected graph as a cycle, starting at local node 0 and
/// stepping to the smaller neighbour first. Returns local indices.
fn cycle_order(adjacency: &[Vec<usize>]) -> Vec<usize> {
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut current = 0;
    while order.len() < adjacency.len() {
        let next = *adjacency[current].iter().find(|&&v| v != prev).expect("2-regular cycle");
        prev = current;
        current = next;
        order.push(current);
    }
    order
}

fn rational_f64(q: &Rational) -> f64 {
    q.to_f64()
}

/// SVG picture of a line arrangement: every line clipped to the vertex
/// bounding box padded by 20%, bounded cells filled by diameter, vertices as
/// dots.
pub fn render_svg(analysis: &ArrangementAnalysis) -> Result<String> {
    if analysis.dim() != 2 {
        return Err(Error::UnsupportedDimension { what: "svg export", required: "2", actual: analysis.dim() });
    }
    let points: Vec<(f64, f64)> =
        analysis.vertices.iter().map(|v| (rational_f64(&v.point[0]), rational_f64(&v.point[1]))).collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &points {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let pad_x = 0.2 * (x1 - x0).max(1e-9);
    let pad_y = 0.2 * (y1 - y0).max(1e-9);
    let (x0, x1, y0, y1) = (x0 - pad_x, x1 + pad_x, y0 - pad_y, y1 + pad_y);
    let scale = (CANVAS - 2.0 * MARGIN) / (x1 - x0).max(y1 - y0);
    let width = (x1 - x0) * scale + 2.0 * MARGIN;
    let height = (y1 - y0) * scale + 2.0 * MARGIN;
    let map = |(x, y): (f64, f64)| (MARGIN + (x - x0) * scale, MARGIN + (y1 - y) * scale);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();

    writeln!(out, r#"<g class="cells" stroke="none">"#).unwrap();
    for cell in &analysis.cells {
        let coords: Vec<String> = cycle_order(&cell.skeleton.adjacency)
            .into_iter()
            .map(|local| {
                let (x, y) = map(points[cell.skeleton.nodes[local]]);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        writeln!(
            out,
            r#"<polygon data-signature="{}" data-diameter="{}" fill="{}" points="{}"/>"#,
            cell.signature,
            cell.diameter,
            diameter_color(cell.diameter),
            coords.join(" ")
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r##"<g class="lines" stroke="#222222" stroke-width="1.5">"##).unwrap();
    for (i, h) in analysis.arrangement.hyperplanes().iter().enumerate() {
        let (a, b, c) = (rational_f64(&h.a[0]), rational_f64(&h.a[1]), rational_f64(&h.b));
        if let Some((p, q)) = clip_line(a, b, c, (x0, x1, y0, y1)) {
            let ((px, py), (qx, qy)) = (map(p), map(q));
            writeln!(out, r#"<line data-index="{}" x1="{px:.3}" y1="{py:.3}" x2="{qx:.3}" y2="{qy:.3}"/>"#, i + 1)
                .unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r##"<g class="vertices" fill="#000000">"##).unwrap();
    for &p in &points {
        let (x, y) = map(p);
        writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    out.push_str("</svg>\n");
    Ok(out)
}

/// Segment of `a x + b y = c` inside the box, if it crosses it.
fn clip_line(a: f64, b: f64, c: f64, (x0, x1, y0, y1): (f64, f64, f64, f64)) -> Option<((f64, f64), (f64, f64))> {
    let mut hits = Vec::new();
    if b != 0.0 {
        for x in [x0, x1] {
            let y = (c - a * x) / b;
            if (y0..=y1).contains(&y) {
                hits.push((x, y));
            }
        }
    }
    if a != 0.0 {
        for y in [y0, y1] {
            let x = (c - b * y) / a;
            if (x0..=x1).contains(&x) {
                hits.push((x, y));
            }
        }
    }
    hits.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
    Some((*hits.first()?, *hits.last()?))
}

/// OFF mesh of one bounded cell of a plane arrangement. Facets come in
/// hyperplane order, each listed counter-clockwise seen from outside.
pub fn render_off(analysis: &ArrangementAnalysis, signature: &CellSignature) -> Result<String> {
    if analysis.dim() != 3 {
        return Err(Error::UnsupportedDimension { what: "off export", required: "3", actual: analysis.dim() });
    }
    let cell = analysis
        .cells
        .iter()
        .find(|c| &c.signature == signature)
        .ok_or_else(|| Error::InvalidInput(format!("{signature} is not a bounded cell")))?;
    let points: Vec<&RationalVector> = cell.skeleton.nodes.iter().map(|&v| &analysis.vertices[v].point).collect();

    let mut out = String::from("OFF\n");
    let facets = cell_facets(analysis, cell);
    writeln!(out, "{} {} {}", points.len(), facets.len(), cell.edge_count).unwrap();
    for p in &points {
        let coords: Vec<String> = p.iter().map(|q| format!("{:.6}", q.to_f64())).collect();
        writeln!(out, "{}", coords.join(" ")).unwrap();
    }
    for facet in facets {
        let ids: Vec<String> = facet.iter().map(ToString::to_string).collect();
        writeln!(out, "{} {}", facet.len(), ids.join(" ")).unwrap();
    }
    Ok(out)
}

/// Facet cycles of a 3-dimensional cell as local vertex indices.
fn cell_facets(analysis: &ArrangementAnalysis, cell: &CellRecord) -> Vec<Vec<usize>> {
    let skeleton: &Skeleton = &cell.skeleton;
    let mut facets = Vec::new();
    for (i, h) in analysis.arrangement.hyperplanes().iter().enumerate() {
        let on: Vec<usize> = (0..skeleton.vertex_count())
            .filter(|&l| analysis.vertices[skeleton.nodes[l]].tight_set.contains(&i))
            .collect();
        if on.len() < 3 {
            continue;
        }
        let index_of = |l: usize| on.iter().position(|&x| x == l);
        let sub: Vec<Vec<usize>> =
            on.iter().map(|&l| skeleton.adjacency[l].iter().filter_map(|&m| index_of(m)).collect()).collect();
        let mut cycle: Vec<usize> = cycle_order(&sub).into_iter().map(|k| on[k]).collect();

        // Outward normal points away from the cell's side of the plane.
        let p = |k: usize| &analysis.vertices[skeleton.nodes[cycle[k]]].point;
        let u = p(1).sub(p(0)).expect("same dimension");
        let v = p(2).sub(p(0)).expect("same dimension");
        let normal = cross(&u, &v);
        let along = normal.dot(&h.a).expect("same dimension");
        let inside_plus = cell.signature.get(i) == crate::exact::Sign::Plus;
        if along.is_zero() {
            continue;
        }
        if (along.signum() == crate::exact::Sign::Plus) == inside_plus {
            cycle.reverse();
        }
        facets.push(cycle);
    }
    facets
}

fn cross(u: &RationalVector, v: &RationalVector) -> RationalVector {
    let c = |i: usize, j: usize| &u[i] * &v[j] - &u[j] * &v[i];
    RationalVector::new(vec![c(1, 2), c(2, 0), c(0, 1)])
}
