//! Exact rational primitives and predicates.

mod point;
mod polygon;
mod rational;
mod segment;

pub use point::{angle_cmp, orientation, strictly_between_ccw, turn, Orientation, Point, Vector};
pub use polygon::{
    contains_closed, is_reflex, is_x_monotone, locate_boundary, normalize_cycle, on_boundary, point_in_polygon,
    ray_shoot, reflex_vertices, segment_inside, segment_on_boundary, validate_polygon, validate_polygon_with,
    x_max_vertex, x_min_vertex, BoundaryPoint, Location, Polygon, ValidateOptions,
};
pub(crate) use polygon::{ray_line_hit, ray_stretch};
pub use rational::{format_decimal, format_rational, int, parse_rational, ratio, to_f64, Rational};
pub(crate) use rational::sign;
pub use segment::{
    line_intersection, line_param, on_segment, point_segment_dist2, segment_dist2, segments_intersect, segments_touch,
    Segment, SegmentIntersection,
};
