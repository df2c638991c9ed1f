//! Structural checks on lifted codes: explicit information sets,
//! quasi-cyclic certificates, minimum-distance bounds and exact search,
//! duality with the points-and-lines design, and dimension/rate tables.

mod design;
mod distance;
mod infoset;
mod qc;
mod table;

pub use design::{design_dual_check, incidence_matrix, plane_incidence_rank, plane_plift_dimension, DesignReport};
pub use distance::{
    distance_bounds, distance_report, gray_min_weight, message_digits, min_distance, subset_min_distance,
    DistanceReport,
};
pub use infoset::{
    information_set, information_set_with, is_information_set, random_information_set, PrimitiveFrame,
};
pub use qc::{qc_certificate, QcCertificate};
pub use table::{format_rate, rate_table, rate_table_csv, recursive_identities, RateRow, TableMode, CSV_HEADER};
