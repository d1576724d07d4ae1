use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalKind {
    Zero,
    /// `a` lies entirely in the kernel of `n`.
    KernelOnly,
    Spacelike,
    Timelike,
    Null,
}

/// Sign class of `a` under the form defined by a diagonal `n`.
///
/// `Q = Σ n_i a_i²` over the nonzero entries of `n`; `Q > 0` is spacelike and
/// `Q < 0` timelike. `mixed` is set when `a` has both a range and a kernel part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CausalCharacter {
    pub kind: CausalKind,
    pub mixed: bool,
}

impl fmt::Display for CausalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            CausalKind::Zero => "zero",
            CausalKind::KernelOnly => "kernel-only",
            CausalKind::Spacelike => "spacelike",
            CausalKind::Timelike => "timelike",
            CausalKind::Null => "null",
        };
        f.write_str(name)?;
        if self.mixed {
            f.write_str("+kernel")?;
        }
        Ok(())
    }
}

/// Causal character of `a` for a normalized diagonal `n` (entries `-1, 0, 1`).
pub fn causal_character<T: Field>(n_diag: &[T; 3], a: &[T; 3]) -> Result<CausalCharacter> {
    if !n_diag.iter().all(|x| x.is_zero() || x.abs() == T::one()) {
        return Err(Error::NotNormalized);
    }
    Ok(causal_of_diagonal(n_diag, a))
}

/// Same classification for any diagonal; only the signs of `n_i` matter, and
/// positive rescalings of `n` leave the answer unchanged.
pub(crate) fn causal_of_diagonal<T: Field>(d: &[T], a: &[T]) -> CausalCharacter {
    let mut q = T::zero();
    let mut range = false;
    let mut kernel = false;
    for (di, ai) in d.iter().zip(a) {
        if ai.is_zero() {
            continue;
        }
        if di.is_zero() {
            kernel = true;
        } else {
            range = true;
            q += di.clone() * ai.clone() * ai.clone();
        }
    }
    let kind = match (range, kernel) {
        (false, false) => CausalKind::Zero,
        (false, true) => CausalKind::KernelOnly,
        _ if q.is_positive() => CausalKind::Spacelike,
        _ if q.is_negative() => CausalKind::Timelike,
        _ => CausalKind::Null,
    };
    CausalCharacter {
        kind,
        mixed: range && kernel,
    }
}
