//! Model files shipped with the crate.

use hqmm::{Error, Result};

use crate::io::{parse_model, ModelFile};

pub const MODELS: &[(&str, &str)] = &[
    ("even_process.hmm", include_str!("../models/even_process.hmm")),
    ("even_process.vn", include_str!("../models/even_process.vn")),
    ("four_state.hmm", include_str!("../models/four_state.hmm")),
    ("two_state.hqmm", include_str!("../models/two_state.hqmm")),
    ("cluster_pi8_0.hqmm", include_str!("../models/cluster_pi8_0.hqmm")),
    ("cluster_pi4_0.hqmm", include_str!("../models/cluster_pi4_0.hqmm")),
    ("cluster_3pi8_pi3.hqmm", include_str!("../models/cluster_3pi8_pi3.hqmm")),
    ("cluster.mps", include_str!("../models/cluster.mps")),
];

pub fn text(name: &str) -> Option<&'static str> {
    MODELS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn load(name: &str) -> Result<ModelFile> {
    let t = text(name).ok_or_else(|| Error::Format(format!("no bundled model named {name:?}")))?;
    parse_model(t)
}

pub fn names() -> impl Iterator<Item = &'static str> {
    MODELS.iter().map(|(n, _)| *n)
}
