//! Lit-only σ-game and Reeder's game on finite simple graphs, viewed as
//! F₂-linear representations of the simply-laced Coxeter group of the graph.
//!
//! The crate covers the graph model and tree invariants ([`graph`],
//! [`matching`], [`enumerate`]), bit-packed linear algebra ([`f2`],
//! [`theta`]), the forms `B` and `Q` ([`forms`]), and the game engine with
//! exhaustive orbit search ([`game`]).

pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod f2;
pub mod forms;
pub mod game;
pub mod graph;
pub mod masks;
pub mod matching;
pub mod theta;

pub use error::{BitstringError, Error, ParseError, Result};
pub use f2::{rank_and_kernel, F2Matrix, F2Vector, RankKernel};
pub use forms::{alpha_check, classify_config, eval_b, eval_q, q_kernel, OrbitClass};
pub use game::{
    apply_word, delta_project, is_k_lit, lit_move, min_light_number, orbit, orbit_with_members,
    partition_orbits, reeder_move, rewrite_word_rho, Game, MoveWord, OrbitInfo, OrbitPartition,
    OrbitSummary, DEFAULT_CAPACITY, MAX_CAPACITY,
};
pub use graph::{Edge, Graph};
pub use matching::{
    alternating_counts, alternating_set, edge_type, enumerate_perfect_matchings,
    tree_perfect_matching, EdgeType, Matching,
};
pub use theta::{adjacency_matrix, theta_apply, theta_preimage, theta_solve};
