#![allow(dead_code)]

use hkcolor::label_cover::{gen_planted, GenParams, LabelCoverInstance, Labeling};

pub const TINY: GenParams = GenParams {
    u_count: 2,
    v_count: 3,
    left_labels: 2,
    d: 2,
    edge_count: 4,
};

/// The planted reference instance and its labeling.
pub fn tiny1() -> (LabelCoverInstance, Labeling) {
    gen_planted(TINY, 7).unwrap()
}

pub fn within_sigmas(measured: f64, expected: f64, stderr: f64, sigmas: f64) -> bool {
    (measured - expected).abs() <= sigmas * stderr
}
