//! Exact-arithmetic F-blowups of affine toric varieties from monoid data.
//!
//! The input everywhere is an [`AffineMonoid`]: a finitely generated
//! submonoid `A` of `Z^d` that is pointed and generates `Z^d` as a group,
//! so that `Spec k[A]` is an affine toric variety with torus `(k^*)^d`. In
//! characteristic `p > 0` the `e`-th F-blowup of that variety is another
//! toric variety, and this crate computes its combinatorial data exactly:
//!
//! - [`frobenius::standard_set`]: the `p^{ed}` weight-minimal coset
//!   representatives of the `q`-scaled monoid, `q = p^e`;
//! - [`frobenius::chart_monoid`]: the minimal generators of one blowup
//!   chart, certified complete in dimension one via the conductor and
//!   bound-flagged in higher dimension;
//! - [`fan::compute_fan`]: the subdivision of the dual cone into chambers
//!   of constant standard set (`d <= 2`), each carrying its chart;
//! - [`fan::dominates`]: whether the level-`e+1` blowup maps down to the
//!   level-`e` one, with a witness when it does not;
//! - [`analysis`]: weak normality, F-purity, normality, the per-chamber
//!   image condition, and whole-sequence reports with stabilization
//!   observations;
//! - [`fedder`]: the hypersurface splitting test over the prime field.
//!
//! Everything runs on arbitrary-precision integers; results a bounded
//! search cannot certify carry explicit flags and bounds instead.
//!
//! The `examples/` directory is the best starting point; each file is a
//! runnable walkthrough of one capability:
//!
//! ```text
//! cargo run -p fblow --example monotonicity_failure
//! cargo run -p fblow --example monotone_without_image_condition
//! cargo run -p fblow --example singularity_predicates
//! cargo run -p fblow --example chamber_fans
//! cargo run -p fblow --example fedder_criterion
//! cargo run -p fblow --example normalization_limit
//! cargo run -p fblow --example random_corpus -- 42
//! ```
//!
//! A thin `fblow` binary exposes the same functionality as the
//! `analyze`, `fblow`, `sequence`, and `fedder` commands; see [`cli`].

pub mod analysis;
pub mod cli;
pub mod error;
pub mod fan;
pub mod fedder;
pub mod frobenius;
pub mod lattice;

pub use error::{Error, Result};
pub use fan::{Chamber, ChamberFan};
pub use frobenius::{ChartMonoid, FrobeniusLevel, StandardSet};
pub use lattice::{AffineMonoid, LatticeVector, RationalCone, Weight};
