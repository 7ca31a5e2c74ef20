//! Global cap on constructed carrier sizes.
//!
//! Lifts, powerset constructions and transition-monoid closures can explode
//! exponentially; every such construction consults this guard before
//! materializing a carrier. The default cap is 4096 elements; the CLI
//! overrides it from the `SYNALG_SIZE_GUARD` environment variable.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::Error;

pub const DEFAULT_CARRIER_LIMIT: usize = 4096;

static CARRIER_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_CARRIER_LIMIT);

pub fn carrier_limit() -> usize {
    CARRIER_LIMIT.load(Ordering::Relaxed)
}

pub fn set_carrier_limit(limit: usize) {
    CARRIER_LIMIT.store(limit.max(1), Ordering::Relaxed);
}

/// Fails with [`Error::SizeGuard`] when `requested` exceeds the current cap.
pub fn check_carrier(requested: usize) -> Result<(), Error> {
    let limit = carrier_limit();
    if requested > limit {
        Err(Error::SizeGuard { requested, limit })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_limit_allows_desk_scale() {
        assert!(check_carrier(4096).is_ok());
        assert!(matches!(
            check_carrier(4097),
            Err(Error::SizeGuard { requested: 4097, limit: 4096 })
        ));
    }
}
