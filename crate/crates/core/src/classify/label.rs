use std::fmt;
use std::str::FromStr;

use crate::algebra::AlgebraSpec;
use crate::decomp3d::{reconstruct, NabTriple};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::Matrix;

/// Bianchi-style type of a 3-dimensional ω-deformed Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BianchiType {
    I,
    II,
    VI0,
    VII0,
    VIII,
    IX,
    V,
    IV,
    IVx,
    VIa,
    VIx,
    VIy,
    VIn,
    VIIa,
    VIIx,
    VIIIa,
    VIIIxa,
    VIIIna,
    IXa,
}

/// One row of a classification table: diagonal of `n` and the pattern of `a`
/// (multiplied by the parameter for parametric rows).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub kind: BianchiType,
    pub n: [i64; 3],
    pub a: [i64; 3],
}

impl BianchiType {
    /// Rows with `a = 0`: the ordinary unimodular algebras.
    pub const A_ZERO_TABLE: [Self; 6] = [
        Self::I,
        Self::II,
        Self::VI0,
        Self::VII0,
        Self::VIII,
        Self::IX,
    ];

    /// Rows with `a ≠ 0`.
    pub const A_NONZERO_TABLE: [Self; 13] = [
        Self::V,
        Self::IV,
        Self::IVx,
        Self::VIa,
        Self::VIx,
        Self::VIy,
        Self::VIn,
        Self::VIIa,
        Self::VIIx,
        Self::VIIIa,
        Self::VIIIxa,
        Self::VIIIna,
        Self::IXa,
    ];

    pub fn all() -> impl Iterator<Item = Self> {
        Self::A_ZERO_TABLE.into_iter().chain(Self::A_NONZERO_TABLE)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::I => "I",
            Self::II => "II",
            Self::VI0 => "VI_0",
            Self::VII0 => "VII_0",
            Self::VIII => "VIII",
            Self::IX => "IX",
            Self::V => "V",
            Self::IV => "IV",
            Self::IVx => "IV_x",
            Self::VIa => "VI_a",
            Self::VIx => "VI_x",
            Self::VIy => "VI_y",
            Self::VIn => "VI_n",
            Self::VIIa => "VII_a",
            Self::VIIx => "VII_x",
            Self::VIIIa => "VIII_a",
            Self::VIIIxa => "VIII_xa",
            Self::VIIIna => "VIII_na",
            Self::IXa => "IX_a",
        }
    }

    pub fn is_parametric(self) -> bool {
        matches!(
            self,
            Self::VIa | Self::VIIa | Self::VIIIa | Self::VIIIxa | Self::VIIIna | Self::IXa
        )
    }

    /// Whether the canonical algebra carries a nonzero 2-form.
    pub fn is_deformed(self) -> bool {
        self.row().forced_b().iter().any(|&x| x != 0)
    }

    /// Representative of the set of labels the classifier cannot tell apart.
    /// `VI_y` is transported onto `VI_x` by swapping `e1` and `e2`.
    pub fn label_class(self) -> Self {
        match self {
            Self::VIy => Self::VIx,
            other => other,
        }
    }

    pub fn row(self) -> TableRow {
        let (n, a) = match self {
            Self::I => ([0, 0, 0], [0, 0, 0]),
            Self::II => ([1, 0, 0], [0, 0, 0]),
            Self::VI0 => ([1, -1, 0], [0, 0, 0]),
            Self::VII0 => ([1, 1, 0], [0, 0, 0]),
            Self::VIII => ([1, 1, -1], [0, 0, 0]),
            Self::IX => ([1, 1, 1], [0, 0, 0]),
            Self::V => ([0, 0, 0], [0, 0, 1]),
            Self::IV => ([1, 0, 0], [0, 0, 1]),
            Self::IVx => ([1, 0, 0], [1, 0, 0]),
            Self::VIa => ([1, -1, 0], [0, 0, 1]),
            Self::VIx => ([1, -1, 0], [1, 0, 0]),
            Self::VIy => ([1, -1, 0], [0, 1, 0]),
            Self::VIn => ([1, -1, 0], [1, 1, 0]),
            Self::VIIa => ([1, 1, 0], [0, 0, 1]),
            Self::VIIx => ([1, 1, 0], [1, 0, 0]),
            Self::VIIIa => ([1, 1, -1], [0, 0, 1]),
            Self::VIIIxa => ([1, 1, -1], [1, 0, 0]),
            Self::VIIIna => ([1, 1, -1], [1, 0, 1]),
            Self::IXa => ([1, 1, 1], [0, 0, 1]),
        };
        TableRow { kind: self, n, a }
    }
}

impl TableRow {
    /// `b = −2 n a` for the pattern (parameter 1).
    pub fn forced_b(&self) -> [i64; 3] {
        std::array::from_fn(|i| -2 * self.n[i] * self.a[i])
    }
}

impl fmt::Display for BianchiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BianchiType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::all()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

/// A label together with its continuous parameter, when the type has one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BianchiLabel {
    pub kind: BianchiType,
    pub parameter: Option<f64>,
}

impl fmt::Display for BianchiLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter {
            Some(p) => write!(f, "{}(a={})", self.kind, p),
            None => write!(f, "{}", self.kind),
        }
    }
}

fn check_parameter<T: Field>(kind: BianchiType, parameter: Option<&T>) -> Result<()> {
    let bad = |problem| Error::BadParameter {
        label: kind.name().to_string(),
        problem,
    };
    match (kind.is_parametric(), parameter) {
        (true, None) => Err(bad("requires a parameter")),
        (false, Some(_)) => Err(bad("takes no parameter")),
        (true, Some(p)) if !p.is_positive() => Err(bad("requires a positive parameter")),
        _ => Ok(()),
    }
}

/// `(n, a, b)` of a table row, `b` forced.
pub fn table_triple<T: Field>(kind: BianchiType, parameter: Option<&T>) -> Result<NabTriple<T>> {
    check_parameter(kind, parameter)?;
    let row = kind.row();
    let scale = parameter.cloned().unwrap_or_else(T::one);
    let n = Matrix::diagonal(&row.n.map(T::from_int));
    let a = row.a.map(|x| T::from_int(x) * scale.clone());
    NabTriple::forced(n, a)
}

/// Canonical algebra of a table row, built through the `(n, a, b)` dictionary.
pub fn generate(kind: BianchiType, parameter: Option<&Scalar>) -> Result<AlgebraSpec> {
    generate_in(kind, parameter)
}

/// [`generate`] over any scalar type; the normal-form stage uses `f64`.
pub fn generate_in<T: Field>(kind: BianchiType, parameter: Option<&T>) -> Result<AlgebraSpec<T>> {
    Ok(reconstruct(&table_triple(kind, parameter)?))
}
