use thiserror::Error;

use crate::patterns::ClassName;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BindingError {
    #[error("clique number must be at least 1")]
    ZeroOmega,
}

/// Closed-form upper bound on `χ` as a function of `ω` for the class.
///
/// `P3P2` itself has the cubic bound `C(ω + 2, 3)`. `TriangleFree` is the
/// constant 4 regardless of `ω`.
pub fn evaluate_bound(class: ClassName, omega: usize) -> Result<usize, BindingError> {
    if omega == 0 {
        return Err(BindingError::ZeroOmega);
    }
    let w = omega;
    Ok(match class {
        ClassName::KiteFree | ClassName::K1K3Free => 2 * w,
        ClassName::HammerFree | ClassName::P2K3Free => w * w,
        ClassName::C5Free => (3 * w * w + w) / 2,
        ClassName::K4Free => 9,
        ClassName::P3P2 => w * (w + 1) * (w + 2) / 6,
        ClassName::TriangleFree => 4,
    })
}

/// Human readable form of the bound, e.g. `2w`.
pub fn bound_formula(class: ClassName) -> &'static str {
    match class {
        ClassName::KiteFree | ClassName::K1K3Free => "2w",
        ClassName::HammerFree | ClassName::P2K3Free => "w^2",
        ClassName::C5Free => "(3w^2+w)/2",
        ClassName::K4Free => "9",
        ClassName::P3P2 => "w(w+1)(w+2)/6",
        ClassName::TriangleFree => "4",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        assert_eq!(evaluate_bound(ClassName::KiteFree, 4), Ok(8));
        assert_eq!(evaluate_bound(ClassName::C5Free, 3), Ok(15));
        assert_eq!(evaluate_bound(ClassName::K4Free, 3), Ok(9));
        assert_eq!(evaluate_bound(ClassName::HammerFree, 2), Ok(4));
        assert_eq!(evaluate_bound(ClassName::P3P2, 3), Ok(10));
        assert_eq!(evaluate_bound(ClassName::KiteFree, 0), Err(BindingError::ZeroOmega));
    }

    #[test]
    fn c5_bound_is_integral() {
        for w in 1..50 {
            assert_eq!((3 * w * w + w) % 2, 0);
        }
    }
}
