//! Shared test support: a small non-isomorphic graph enumerator used to
//! build and verify the fixture streams, and a definition-direct oracle
//! that recomputes everything with plain set arithmetic.

// each test binary uses its own slice of this module
#![allow(dead_code)]

pub mod enumerate;
pub mod oracle;
