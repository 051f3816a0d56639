//! Golden networks shared by the integration suites, and fixture paths.
#![allow(dead_code)] // each test target compiles its own copy

use crnkit::crn::{Crn, Reaction};
use std::path::PathBuf;

/// Workspace-level fixtures directory.
pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixtures_dir().join(name)
}

/// Five species, six reactions: two inflows feed a bimolecular step whose
/// products drain through a chain. Rank 5, one steady-state flux.
pub fn example1() -> Crn {
    Crn::new(
        ["v1", "v2", "v3", "v4", "v5"].map(String::from).to_vec(),
        vec![
            Reaction::unit("e1", [], ["v1"]),
            Reaction::unit("e2", [], ["v2"]),
            Reaction::unit("e3", ["v1", "v2"], ["v3", "v4"]),
            Reaction::unit("e4", ["v3"], ["v5"]),
            Reaction::unit("e5", ["v4"], []),
            Reaction::unit("e6", ["v5"], []),
        ],
    )
    .unwrap()
}

/// Four species, seven reactions: a three-species cycle (v1, v2, v3) with a
/// drain through v4 and an inflow. The pair {v1, v2} with the cycle edges
/// {e1, e2, e3} is a buffering structure.
pub fn cycle4() -> Crn {
    Crn::new(
        ["v1", "v2", "v3", "v4"].map(String::from).to_vec(),
        vec![
            Reaction::unit("e1", ["v1"], ["v3"]),
            Reaction::unit("e2", ["v3"], ["v2"]),
            Reaction::unit("e3", ["v2"], ["v1"]),
            Reaction::unit("e4", ["v3"], ["v4"]),
            Reaction::unit("e5", ["v4"], ["v1"]),
            Reaction::unit("e6", [], ["v1"]),
            Reaction::unit("e7", ["v4"], []),
        ],
    )
    .unwrap()
}

/// The reduction of [`cycle4`] along ({v1,v2},{e1,e2,e3}).
pub fn cycle4_reduced() -> Crn {
    Crn::new(
        ["v3'", "v4'"].map(String::from).to_vec(),
        vec![
            Reaction::unit("e4'", ["v3'"], ["v4'"]),
            Reaction::unit("e5'", ["v4'"], ["v3'"]),
            Reaction::unit("e6'", [], ["v3'"]),
            Reaction::unit("e7'", ["v4'"], []),
        ],
    )
    .unwrap()
}

/// The chain `∅ → v1 → v2 → ∅`.
pub fn chain3() -> Crn {
    Crn::new(
        ["v1", "v2"].map(String::from).to_vec(),
        vec![
            Reaction::unit("e1", [], ["v1"]),
            Reaction::unit("e2", ["v1"], ["v2"]),
            Reaction::unit("e3", ["v2"], []),
        ],
    )
    .unwrap()
}

/// The reduction of [`chain3`] along ({v1},{e2}).
pub fn chain3_reduced() -> Crn {
    Crn::new(
        vec!["v2'".to_string()],
        vec![Reaction::unit("e1'", [], ["v2'"]), Reaction::unit("e3'", ["v2'"], [])],
    )
    .unwrap()
}
