//! Closed-form hyperbolic trigonometry parameterized by the linear constant `k`.

mod measures;
mod triangle;
mod units;

pub use measures::{
    angle_of_parallelism, arc_ratio, axial_volume, chord_to_semichord, circle_area,
    circle_area_from_quadrature_angle, circle_circumference, equidistant_arc_length,
    equidistant_arc_length_via_parallelism, equidistant_region_measures, horocycle_arc_length,
    horocycle_sector_area, lcurve_arc_length, lcurve_point, lcurve_point_via_parallelism,
    parallelism_segment, polygon_area_from_angles, sphere_measures, spherical_cap_area,
    spherical_right_sine, spherical_triangle_area, EquidistantMeasures, SectorExtent,
    SphereMeasures,
};
pub use triangle::{
    solve_general_triangle, solve_right_triangle, GeneralGivens, GeneralTriangle,
    RightGivens, RightResiduals, RightTriangle,
};
pub use units::{Angle, ArcRatio, Area, Curvature, Length};
