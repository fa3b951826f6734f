//! The two-element idempotent semiring: `or` as addition, `and` as
//! multiplication. This is the smallest semiring with `1 + 1 = 1`.

use crate::rng::SplitMix64;

pub fn add(a: bool, b: bool) -> bool {
    a || b
}

pub fn mul(a: bool, b: bool) -> bool {
    a && b
}

pub fn unit_inverse(a: bool) -> Option<bool> {
    if a {
        Some(true)
    } else {
        None
    }
}

pub fn sample(rng: &mut SplitMix64) -> bool {
    rng.below(2) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotent_addition() {
        assert!(add(true, true));
        assert!(!add(false, false));
    }

    #[test]
    fn units() {
        assert_eq!(unit_inverse(true), Some(true));
        assert_eq!(unit_inverse(false), None);
    }
}
