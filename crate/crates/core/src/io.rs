//! Instance files, result documents and SVG pictures.

use std::fmt::Write as _;

use num_traits::One;
use serde_json::{json, Map, Value};

use crate::discretizer::{CandidateSet, Provenance};
use crate::error::{Error, Result};
use crate::geometry::{
    contains_closed, format_decimal, format_rational, parse_rational, validate_polygon_with, Point, Polygon, Rational,
    ValidateOptions,
};
use crate::mis::WitnessSolution;
use crate::visibility::{EdgeLabel, VisibilityRegion};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub polygon: Polygon,
    pub points: Option<Vec<Point>>,
}

fn parse_coord(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                return Ok(Rational::from_integer(i.into()));
            }
            parse_rational(&n.to_string()).ok_or_else(|| Error::Parse(format!("bad number {n}")))
        }
        Value::String(s) => parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational {s:?}"))),
        other => Err(Error::Parse(format!("coordinate must be a number or string, got {other}"))),
    }
}

fn parse_points(v: &Value, what: &str) -> Result<Vec<Point>> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("{what} must be an array")))?;
    arr.iter()
        .map(|pair| match pair.as_array().map(Vec::as_slice) {
            Some([x, y]) => Ok(Point::new(parse_coord(x)?, parse_coord(y)?)),
            _ => Err(Error::Parse(format!("{what} entries must be [x, y] pairs"))),
        })
        .collect()
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    parse_instance_with(text, ValidateOptions::default())
}

pub fn parse_instance_with(text: &str, opts: ValidateOptions) -> Result<Instance> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let verts = doc.get("vertices").ok_or_else(|| Error::Parse("missing \"vertices\"".into()))?;
    let polygon = validate_polygon_with(&parse_points(verts, "vertices")?, opts)?;
    let points = match doc.get("points") {
        None | Some(Value::Null) => None,
        Some(v) => Some(parse_points(v, "points")?),
    };
    if let Some(q) = points.iter().flatten().find(|q| !contains_closed(&polygon, q)) {
        return Err(Error::PointOutside(q.to_string()));
    }
    Ok(Instance { polygon, points })
}

/// Parses `"x,y"` with exact rational parts.
pub fn parse_point(s: &str) -> Result<Point> {
    let (x, y) = s.split_once(',').ok_or_else(|| Error::Parse(format!("expected X,Y, got {s:?}")))?;
    let x = parse_rational(x).ok_or_else(|| Error::Parse(format!("bad rational {x:?}")))?;
    let y = parse_rational(y).ok_or_else(|| Error::Parse(format!("bad rational {y:?}")))?;
    Ok(Point::new(x, y))
}

pub fn rational_json(r: &Rational) -> Value {
    if r.denom().is_one() {
        if let Ok(i) = i64::try_from(r.numer()) {
            return json!(i);
        }
    }
    json!(format_rational(r))
}

pub fn point_json(p: &Point) -> Value {
    json!([rational_json(p.x()), rational_json(p.y())])
}

/// Exact `["p/q", "p/q"]` pair, the form used in result documents.
pub fn point_strings(p: &Point) -> Value {
    json!([format_rational(p.x()), format_rational(p.y())])
}

pub fn serialize_instance(inst: &Instance) -> String {
    let mut doc = Map::new();
    doc.insert("vertices".into(), Value::Array(inst.polygon.vertices().iter().map(point_json).collect()));
    if let Some(pts) = &inst.points {
        doc.insert("points".into(), Value::Array(pts.iter().map(point_json).collect()));
    }
    serde_json::to_string_pretty(&Value::Object(doc)).expect("json")
}

pub fn solution_json(sol: &WitnessSolution, guarantee: Option<&Rational>, status: &str) -> Value {
    json!({
        "size": sol.size,
        "witnesses": sol.chosen.iter().map(point_strings).collect::<Vec<_>>(),
        "guarantee": guarantee.map(format_rational),
        "status": status,
    })
}

pub fn region_json(v: &VisibilityRegion) -> Value {
    json!({
        "source": point_strings(&v.source),
        "region": v.region.vertices().iter().map(point_strings).collect::<Vec<_>>(),
        "arms": v.arms.iter().map(|s| json!([point_strings(&s.a), point_strings(&s.b)])).collect::<Vec<_>>(),
        "labels": v.labels.iter().map(|l| match l {
            EdgeLabel::Primary => json!("primary"),
            EdgeLabel::Window { base, end } => json!({"window": {"base": point_strings(base), "end": point_strings(end)}}),
        }).collect::<Vec<_>>(),
        "min_pr2": v.min_pr2.as_ref().map(format_rational),
    })
}

fn provenance_json(p: &Provenance) -> Value {
    match p {
        Provenance::Vertex => json!("vertex"),
        Provenance::RMid => json!("r_mid"),
        Provenance::HPoint => json!("h"),
        Provenance::ChordHit(i) => json!({"chord_hit": i}),
        Provenance::Midpoint(i) => json!({"midpoint": i}),
    }
}

pub fn candidates_json(c: &CandidateSet) -> Value {
    let boundary: Vec<Value> = c
        .boundary_points
        .iter()
        .flatten()
        .map(|bp| {
            json!({
                "edge": bp.edge,
                "t": format_rational(&bp.t),
                "point": point_strings(&bp.point),
                "provenance": provenance_json(&c.provenance[&bp.point]),
            })
        })
        .collect();
    let interior: Vec<Value> = c
        .interior_points
        .iter()
        .map(|q| json!({"point": point_strings(q), "provenance": provenance_json(&c.provenance[q])}))
        .collect();
    json!({"size": c.len(), "boundary": boundary, "interior": interior})
}

#[derive(Clone, Debug, Default)]
pub struct Overlays {
    pub regions: Vec<VisibilityRegion>,
    pub strings: Vec<Vec<Point>>,
    pub candidates: Vec<Point>,
    pub witnesses: Vec<Point>,
    /// Outer boundary drawn dashed, such as an inflated polygon.
    pub outline: Option<Polygon>,
}

const FILLS: [&str; 6] = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2"];

fn path_d(pts: &[Point], close: bool) -> String {
    let mut d = String::new();
    for (k, p) in pts.iter().enumerate() {
        let _ = write!(d, "{}{} {}", if k == 0 { "M" } else { " L" }, format_decimal(p.x()), format_decimal(p.y()));
    }
    if close {
        d.push_str(" Z");
    }
    d
}

/// Deterministic SVG in polygon coordinates, y pointing up.
pub fn render_svg(p: &Polygon, overlays: &Overlays) -> String {
    let mut all: Vec<&Point> = p.vertices().iter().collect();
    if let Some(o) = &overlays.outline {
        all.extend(o.vertices());
    }
    all.extend(overlays.strings.iter().flatten());
    let min_x = all.iter().map(|q| q.x()).min().unwrap().clone();
    let max_x = all.iter().map(|q| q.x()).max().unwrap().clone();
    let min_y = all.iter().map(|q| q.y()).min().unwrap().clone();
    let max_y = all.iter().map(|q| q.y()).max().unwrap().clone();
    let (w, h) = (&max_x - &min_x, &max_y - &min_y);
    let span = if w > h { w.clone() } else { h.clone() };
    let pad = &span / Rational::from_integer(20.into());
    let stroke = &span / Rational::from_integer(250.into());
    let dot = &span / Rational::from_integer(90.into());
    let two = Rational::from_integer(2.into());
    let vb = [
        format_decimal(&(&min_x - &pad)),
        format_decimal(&(-(&max_y) - &pad)),
        format_decimal(&(&w + &pad * &two)),
        format_decimal(&(&h + &pad * &two)),
    ];
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="640" height="{}">"#,
        vb[0],
        vb[1],
        vb[2],
        vb[3],
        format_decimal(&(Rational::from_integer(640.into()) * (&h + &pad * &two) / (&w + &pad * &two)).round()),
    );
    let _ = writeln!(s, r#"<g transform="scale(1,-1)" stroke-linejoin="round" stroke-width="{}">"#, format_decimal(&stroke));
    if let Some(o) = &overlays.outline {
        let _ = writeln!(
            s,
            r##"<path d="{}" fill="none" stroke="#999999" stroke-dasharray="{} {}"/>"##,
            path_d(o.vertices(), true),
            format_decimal(&(&stroke * &two)),
            format_decimal(&stroke)
        );
    }
    let _ = writeln!(s, r##"<path d="{}" fill="#f4f1ea" stroke="#222222"/>"##, path_d(p.vertices(), true));
    for (k, r) in overlays.regions.iter().enumerate() {
        let c = FILLS[k % FILLS.len()];
        let _ = writeln!(s, r#"<path d="{}" fill="{c}" fill-opacity="0.35" stroke="{c}"/>"#, path_d(r.region.vertices(), true));
        for arm in &r.arms {
            let _ = writeln!(s, r#"<path d="{}" fill="none" stroke="{c}"/>"#, path_d(&[arm.a.clone(), arm.b.clone()], false));
        }
    }
    for (k, st) in overlays.strings.iter().enumerate() {
        let c = FILLS[k % FILLS.len()];
        let _ = writeln!(s, r#"<path d="{}" fill="none" stroke="{c}"/>"#, path_d(st, false));
    }
    for q in &overlays.candidates {
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="{}" fill="#555555"/>"##,
            format_decimal(q.x()),
            format_decimal(q.y()),
            format_decimal(&(&dot / &two))
        );
    }
    for q in &overlays.witnesses {
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="{}" fill="#d62728" stroke="#222222"/>"##,
            format_decimal(q.x()),
            format_decimal(q.y()),
            format_decimal(&dot)
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}
