//! Exact counting and enumeration of fractional powers (r-powers, r >= 2)
//! in arbitrary windows `F[i; n]` of the infinite Fibonacci word.
//!
//! Three engines answer the same question at different scales:
//!
//! - `closed`: piecewise run-length tables indexed through Zeckendorf digits,
//!   polylogarithmic in the window position;
//! - `generic`: per-size position sequences walked term by term, for any
//!   rational exponent at desk scale;
//! - `oracle`: brute-force enumeration over an explicit window, the ground
//!   truth everything else is checked against.

pub mod block;
pub mod counting;
pub mod error;
pub mod fib;
pub mod kernels;
pub mod oracle;
pub mod spectra;
pub mod word;
pub mod zeck;

pub use num_bigint;
pub use num_rational;

pub use block::{Block, BlockFibWord, RunSegment};
pub use counting::{CountResult, Engine, Family, RangeClass};
pub use error::{Error, Result};
pub use fib::{classify_h, fib, floor_mult_phi, FibTable, HScheme};
pub use spectra::ExponentSpec;
pub use word::{Letter, Word};
pub use zeck::ZeckRep;
