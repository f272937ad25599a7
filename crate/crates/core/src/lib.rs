//! Exact construction and verification of the semi-stable elliptic modular
//! surfaces over the projective line attached to the torsion-free genus-zero
//! congruence subgroups of index 12–60.
//!
//! The crate has three layers:
//! - exact arithmetic over Q and quadratic extensions ([`arith`]),
//! - elliptic-surface machinery: Weierstrass models, Kodaira fibers, base
//!   change ([`weierstrass`], [`fibers`], [`basechange`]),
//! - the catalog of congruence groups, equations and covering recipes, with
//!   group-theoretic verification ([`grouptheory`], [`catalog`]).

pub mod arith;

pub mod weierstrass;

pub mod fibers;

pub mod basechange;

pub mod grouptheory;

pub mod catalog;

pub mod parse;

pub mod cli;
