//! Explicit monomial bases for the Garsia-Haiman modules `M_mu`.
//!
//! The crate builds the determinant `Delta_mu`, the drawing families that
//! index bases of `M_mu` (hooks) and of its zero x-degree slice (any
//! partition), the explicit annihilator ideal of a hook, and the exact linear
//! algebra that certifies all of it.
//!
//! ```
//! use ghmodule::{hook, Partition};
//!
//! let mu: Partition = "3,1,1".parse().unwrap();
//! let h = mu.hook_params().unwrap();
//! assert_eq!(hook::enumerate_drawings(h.k, h.l).len(), 120);
//! ```

pub mod annihilator;
pub mod delta;
pub mod error;
pub mod general;
pub mod hook;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod report;

pub use delta::{build_delta, DeltaPolynomial};
pub use error::{Error, Result};
pub use partition::{Biexponent, HookParams, Partition};
pub use poly::{Monomial, MonomialOrder, Polynomial};

/// Default cap on `n` for anything that expands `Delta_mu`.
pub const DEFAULT_SIZE_LIMIT: usize = 9;

pub(crate) fn check_size(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::SizeLimit { n, limit })
    } else {
        Ok(())
    }
}
