//! Classification of finite (quasi-)simple groups whose principal p-block
//! has a star-shaped Brauer tree, together with a from-scratch permutation
//! group engine that re-measures every numerically checkable claim on
//! concrete small groups.
//!
//! The crate is organised as a pipeline:
//!
//! * [`arith`] — exact integer arithmetic (factorization, multiplicative
//!   order, p-parts, prime-power recognition);
//! * [`catalog`] — group identifiers, exact order formulas, and the
//!   exceptional-isomorphism rewrites;
//! * [`btree`] — Brauer trees as plain data: shape predicates, winding,
//!   similarity, real stems;
//! * [`classifier`] — the rule engine deciding membership in the class of
//!   groups whose principal p-block tree is a star, with a justification
//!   chain per verdict;
//! * [`permgrp`] — stabilizer chains, orbit machinery and concrete
//!   permutation representations of the catalog groups;
//! * [`oracle`] — the bridge that measures e = |N_G(P)/C_G(P)| and
//!   m = (|P|-1)/e on concrete groups and cross-checks the classifier.
//!
//! With the `parallel` feature (on by default) the sweep and the heavy
//! orbit enumerations run on rayon; without it everything falls back to
//! sequential code with identical results.

pub mod arith;
pub mod btree;
pub mod catalog;
pub mod classifier;
pub mod oracle;
pub(crate) mod par;
pub mod permgrp;

pub use catalog::GroupId;
pub use classifier::{in_xp, Verdict, VerdictStatus};
pub use oracle::CrossCheckReport;
