//! Partial sums in finite groups: simple orderings of subsets, exhaustive
//! conjecture verification on small groups, Heffter systems and the cyclic
//! cycle systems they generate, and edge-length realization in complete
//! graphs.
//!
//! Entry points:
//! - [`group`]: finite abelian groups in canonical form and Cayley-table
//!   groups, with builtin families and a table file loader.
//! - [`ordering`]: partial sums, simpleness, and the exhaustive
//!   simple-ordering search (the oracle).
//! - [`constructive`]: search-free orderings for small sets, mirroring the
//!   published case analyses.
//! - [`verify`]: batch drivers sweeping group families, with checkpointing.
//! - [`heffter`]: Heffter systems, base cycles and cycle-system development.
//! - [`lengths`]: edge-length lists, necessary conditions and realization
//!   searches.
//! - [`cli`]: the `psums` command-line front end.

pub mod cli;
pub mod constructive;
pub mod group;
pub mod heffter;
pub mod lengths;
pub mod ordering;
pub mod verify;
