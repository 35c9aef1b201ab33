//! Closed-form agglomeration and importance for the four families.
//!
//! Each importance formula only holds inside its stated hypothesis (for
//! example `s > 2, t > 3` for comets); outside it these functions return
//! [`Error::OutOfHypothesis`] and the engine remains the authority.
//!
//! All expressions are evaluated in `i128` and reduced once at the end.

use crate::error::{Error, Result};
use crate::families::{FamilySpec, NodeClass};
use crate::rational::Rational;

fn frac(num: i128, den: i128) -> Result<Rational> {
    Rational::from_i128(num, den)
}

fn invalid(family: &'static str, bound: &'static str) -> Error {
    Error::InvalidSpec { family, bound }
}

fn hypothesis(family: &'static str, bound: &'static str) -> Error {
    Error::OutOfHypothesis { family, bound }
}

/// `3 / (n(n+1))`.
pub fn phi_path(n: usize) -> Result<Rational> {
    if n < 2 {
        return Err(invalid("path", "n >= 2"));
    }
    let n = n as i128;
    frac(3, n * (n + 1))
}

/// End nodes `2/(n+1)`, inner nodes `2(2n-1)/(n(n+1))`, for `n > 3`.
pub fn imc_path(n: usize, class: NodeClass) -> Result<Rational> {
    if n <= 3 {
        return Err(hypothesis("path", "n > 3"));
    }
    let n = n as i128;
    match class {
        NodeClass::PathEnd => frac(2, n + 1),
        NodeClass::PathInner => frac(2 * (2 * n - 1), n * (n + 1)),
        _ => Err(Error::ClassMismatch { family: "path" }),
    }
}

fn comet_denominator(s: i128, t: i128) -> i128 {
    t * (t + 1) * (t + 3 * s - 1) + 6 * s * (s - 1)
}

/// `3(s+t-1) / (t(t+1)(t+3s-1) + 6s(s-1))`.
pub fn phi_comet(s: usize, t: usize) -> Result<Rational> {
    if s < 1 {
        return Err(invalid("comet", "s >= 1"));
    }
    if t < 1 {
        return Err(invalid("comet", "t >= 1"));
    }
    let (s, t) = (s as i128, t as i128);
    frac(3 * (s + t - 1), comet_denominator(s, t))
}

/// Comet importance by class, for `s > 2, t > 3`.
pub fn imc_comet(s: usize, t: usize, class: NodeClass) -> Result<Rational> {
    if s <= 2 {
        return Err(hypothesis("comet", "s > 2"));
    }
    if t <= 3 {
        return Err(hypothesis("comet", "t > 3"));
    }
    let (s, t) = (s as i128, t as i128);
    let den = comet_denominator(s, t);
    match class {
        NodeClass::CometPathEnd => frac(
            2 * t * (3 * s * s - 6 * s + 3 * s * t - 3 * t + t * t + 2) - 6 * s * (s - 1),
            den * (s + t - 2),
        ),
        NodeClass::CometPathInner => frac(
            12 * s * t * (s + t - 3) + 2 * t * (2 * t - 5) * (t - 2) - 6 * (3 * s - 1) * (s - 1),
            (s + t - 3) * den,
        ),
        NodeClass::CometCenter => frac(2 * (t * (s * (t + 2) + t - 1) + 3 * s * (s - 1)), den),
        NodeClass::CometStarLeaf => frac(
            2 * t * (t * t + 6 * s - 7) + 6 * (s - 1) * (s - 2),
            (s + t - 2) * den,
        ),
        _ => Err(Error::ClassMismatch { family: "comet" }),
    }
}

/// Shorthand used by the condensed double-comet statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DcShorthand {
    /// `n - a - b`, the spine length.
    pub k: i128,
    /// `n - a + 2b - 1`
    pub r: i128,
    /// `n - a + b`
    pub p: i128,
}

impl DcShorthand {
    pub fn new(n: usize, a: usize, b: usize) -> Result<Self> {
        check_double_comet(n, a, b)?;
        let (n, a, b) = (n as i128, a as i128, b as i128);
        Ok(DcShorthand {
            k: n - a - b,
            r: n - a + 2 * b - 1,
            p: n - a + b,
        })
    }
}

fn check_double_comet(n: usize, a: usize, b: usize) -> Result<()> {
    if a < 1 {
        return Err(invalid("double-comet", "a >= 1"));
    }
    if b < 1 {
        return Err(invalid("double-comet", "b >= 1"));
    }
    if n < a + b + 2 {
        return Err(invalid("double-comet", "n - a - b >= 2"));
    }
    Ok(())
}

fn check_double_comet_hypothesis(n: usize, a: usize, b: usize) -> Result<()> {
    check_double_comet(n, a, b)?;
    if a < 2 {
        return Err(hypothesis("double-comet", "a >= 2"));
    }
    if b < 2 {
        return Err(hypothesis("double-comet", "b >= 2"));
    }
    if n < a + b + 4 {
        return Err(hypothesis("double-comet", "n - a - b >= 4"));
    }
    Ok(())
}

/// `3(n-1)` over the double-comet distance-sum polynomial (times 3).
pub fn phi_double_comet(n: usize, a: usize, b: usize) -> Result<Rational> {
    check_double_comet(n, a, b)?;
    let (n, a, b) = (n as i128, a as i128, b as i128);
    frac(3 * (n - 1), dc_denominator(n, a, b))
}

/// `(n-a-b+1)((n-a-b)(n-a+2b-1) + 3a(n-a+b)) + 6(b(b-1) + a(a-1))`, which is
/// three times the ordered distance sum of `DC(n, a, b)`.
fn dc_denominator(n: i128, a: i128, b: i128) -> i128 {
    (n - a - b + 1) * ((n - a - b) * (n - a + 2 * b - 1) + 3 * a * (n - a + b))
        + 6 * (b * (b - 1) + a * (a - 1))
}

/// Double-comet importance by class, for `a, b >= 2` and `n - a - b >= 4`,
/// written out in `n, a, b` as derived case by case from the contractions.
pub fn imc_double_comet(n: usize, a: usize, b: usize, class: NodeClass) -> Result<Rational> {
    check_double_comet_hypothesis(n, a, b)?;
    let (n, a, b) = (n as i128, a as i128, b as i128);
    let den = dc_denominator(n, a, b);
    let head = (n - a - b + 1) * ((n - a - b) * (n - a + 2 * b - 1) + 3 * a * (n - a + b));
    match class {
        NodeClass::DcLeafA => frac(
            (-n + a + b - 1) * ((n - a - b) * (n - a + 2 * b - 1) - 3 * (n - a + b) * (n - a - 1))
                - 6 * (b * (b - 1) - (a - 1) * (2 * n - a - 2)),
            (n - 2) * den,
        ),
        NodeClass::DcLeafB => frac(
            (n - a - b + 1) * ((n - a - b) * (2 * n + a - 2 * b - 2) + 3 * a * (a - b + n - 2))
                + 6 * ((b - 1) * (-b + 2 * n - 2) - a * (a - 1)),
            (n - 2) * den,
        ),
        NodeClass::DcEndA => frac(
            (n - a - 2) * head + 6 * ((n - a - 2) * a * (a - 1) - (a + 1) * b * (b - 1))
                - (n - 1) * (n - a - b - 1) * (n - a - b) * (n - a + 2 * b - 2),
            (n - a - 2) * den,
        ),
        NodeClass::DcEndB => frac(
            (n - b - 2) * (head + 6 * b * (b - 1))
                - (n - 1) * (n - a - b - 1) * (n - a - b) * (n + 2 * a - b - 2)
                - (b + 1) * 6 * a * (a - 1),
            (n - b - 2) * den,
        ),
        NodeClass::DcInner => frac(
            (n - 3) * head
                - (n - 1)
                    * (n - a - b - 1)
                    * ((n - a - b - 2) * (n - a + 2 * b - 3) + 3 * a * (n - a + b - 2))
                - 12 * (b * (b - 1) + a * (a - 1)),
            (n - 3) * den,
        ),
        _ => Err(Error::ClassMismatch {
            family: "double-comet",
        }),
    }
}

/// The same five cases in the condensed `k, r, p` form. Kept as an
/// independent transcription; the two must agree everywhere.
pub fn imc_double_comet_condensed(
    n: usize,
    a: usize,
    b: usize,
    class: NodeClass,
) -> Result<Rational> {
    check_double_comet_hypothesis(n, a, b)?;
    let DcShorthand { k, r, p } = DcShorthand::new(n, a, b)?;
    let (n, a, b) = (n as i128, a as i128, b as i128);
    let base = (k + 1) * (k * r + 3 * a * p);
    let den = base + 6 * (b * (b - 1) + a * (a - 1));
    match class {
        NodeClass::DcLeafA => frac(
            (-k - 1) * (k * r - 3 * p * (n - a - 1))
                - 6 * (b * (b - 1) - (a - 1) * (2 * n - a - 2)),
            (n - 2) * den,
        ),
        NodeClass::DcLeafB => frac(
            (k + 1) * (k * (2 * n + a - 2 * b - 2) + 3 * a * (a - b + n - 2))
                + 6 * ((b - 1) * (-b + 2 * n - 2) - a * (a - 1)),
            (n - 2) * den,
        ),
        NodeClass::DcEndA => frac(
            (n - a - 2) * base + 6 * ((n - a - 2) * a * (a - 1) - (a + 1) * b * (b - 1))
                - (n - 1) * (k - 1) * k * (r - 1),
            (n - a - 2) * den,
        ),
        NodeClass::DcEndB => frac(
            (n - b - 2) * (base + 6 * b * (b - 1))
                - (n - 1) * (k - 1) * k * (n + 2 * a - b - 2)
                - (b + 1) * 6 * a * (a - 1),
            (n - b - 2) * den,
        ),
        NodeClass::DcInner => frac(
            (n - 3) * base
                - (n - 1) * (k - 1) * ((k - 2) * (r - 2) + 3 * a * (p - 2))
                - 12 * (b * (b - 1) + a * (a - 1)),
            (n - 3) * den,
        ),
        _ => Err(Error::ClassMismatch {
            family: "double-comet",
        }),
    }
}

fn check_lollipop(n: usize, d: usize) -> Result<()> {
    if d < 2 {
        return Err(invalid("lollipop", "d >= 2"));
    }
    if n < d + 1 {
        return Err(invalid("lollipop", "n - d >= 1"));
    }
    Ok(())
}

fn lollipop_denominator(n: i128, d: i128) -> i128 {
    3 * (n - d) * (d * d - 1 + n) + d * (d * d - 1)
}

/// `3(n-1) / (3(n-d)(d²-1+n) + d(d²-1))`.
pub fn phi_lollipop(n: usize, d: usize) -> Result<Rational> {
    check_lollipop(n, d)?;
    let (n, d) = (n as i128, d as i128);
    frac(3 * (n - 1), lollipop_denominator(n, d))
}

/// Lollipop importance by class, for `d > 3` and `n - d > 1`.
pub fn imc_lollipop(n: usize, d: usize, class: NodeClass) -> Result<Rational> {
    check_lollipop(n, d)?;
    if d <= 3 {
        return Err(hypothesis("lollipop", "d > 3"));
    }
    if n <= d + 1 {
        return Err(hypothesis("lollipop", "n - d > 1"));
    }
    let (n, d) = (n as i128, d as i128);
    let den = lollipop_denominator(n, d);
    match class {
        NodeClass::LpPathEnd => frac(
            3 * (n - d) * ((n - 1) * (2 * d - 1) - d * d) + d * (d - 1) * (3 * n - d - 4),
            (n - 2) * den,
        ),
        NodeClass::LpPathInner => frac(
            6 * (n - d) * (2 * (d - 1) * (n - 1) - d * d)
                + 2 * (d - 1) * (3 * (d - 1) * (n - 1) - d * (d + 1)),
            (n - 3) * den,
        ),
        NodeClass::LpJunction => frac(
            3 * (n - d) * (d * d - 1 + n) + d * (d - 1) * (d - n + 2),
            den,
        ),
        NodeClass::LpClique => frac((n - d) * (d * (2 * d - 1) + 3 * (n - 1)), den),
        _ => Err(Error::ClassMismatch { family: "lollipop" }),
    }
}

pub fn phi_family(spec: FamilySpec) -> Result<Rational> {
    match spec {
        FamilySpec::Path { n } => phi_path(n),
        FamilySpec::Comet { s, t } => phi_comet(s, t),
        FamilySpec::DoubleComet { n, a, b } => phi_double_comet(n, a, b),
        FamilySpec::Lollipop { n, d } => phi_lollipop(n, d),
    }
}

pub fn imc_family(spec: FamilySpec, class: NodeClass) -> Result<Rational> {
    match spec {
        FamilySpec::Path { n } => imc_path(n, class),
        FamilySpec::Comet { s, t } => imc_comet(s, t, class),
        FamilySpec::DoubleComet { n, a, b } => imc_double_comet(n, a, b, class),
        FamilySpec::Lollipop { n, d } => imc_lollipop(n, d, class),
    }
}

/// Checks that `spec` lies inside the hypothesis of its importance formula.
pub fn check_hypothesis(spec: FamilySpec) -> Result<()> {
    spec.validate()?;
    let class = spec.classes()[0];
    imc_family(spec, class).map(|_| ())
}

/// The family that contracting a node of `class` produces, inside the
/// importance hypothesis of `spec`.
pub fn contracted_family(spec: FamilySpec, class: NodeClass) -> Result<FamilySpec> {
    check_hypothesis(spec)?;
    let mismatch = Err(Error::ClassMismatch {
        family: spec.family_name(),
    });
    Ok(match (spec, class) {
        (FamilySpec::Path { n }, NodeClass::PathEnd) => FamilySpec::Path { n: n - 1 },
        (FamilySpec::Path { n }, NodeClass::PathInner) => FamilySpec::Path { n: n - 2 },
        (FamilySpec::Comet { s, t }, NodeClass::CometPathEnd) => FamilySpec::Comet { s, t: t - 1 },
        (FamilySpec::Comet { s, t }, NodeClass::CometPathInner) => {
            FamilySpec::Comet { s, t: t - 2 }
        }
        (FamilySpec::Comet { t, .. }, NodeClass::CometCenter) => FamilySpec::Path { n: t - 1 },
        (FamilySpec::Comet { s, t }, NodeClass::CometStarLeaf) => FamilySpec::Comet { s: s - 1, t },
        (FamilySpec::DoubleComet { n, a, b }, NodeClass::DcLeafA) => FamilySpec::DoubleComet {
            n: n - 1,
            a: a - 1,
            b,
        },
        (FamilySpec::DoubleComet { n, a, b }, NodeClass::DcLeafB) => FamilySpec::DoubleComet {
            n: n - 1,
            a,
            b: b - 1,
        },
        (FamilySpec::DoubleComet { n, a, b }, NodeClass::DcEndA) => FamilySpec::Comet {
            s: b,
            t: n - a - b - 1,
        },
        (FamilySpec::DoubleComet { n, a, b }, NodeClass::DcEndB) => FamilySpec::Comet {
            s: a,
            t: n - a - b - 1,
        },
        (FamilySpec::DoubleComet { n, a, b }, NodeClass::DcInner) => {
            FamilySpec::DoubleComet { n: n - 2, a, b }
        }
        (FamilySpec::Lollipop { n, d }, NodeClass::LpPathEnd) => {
            FamilySpec::Lollipop { n: n - 1, d: d - 1 }
        }
        (FamilySpec::Lollipop { n, d }, NodeClass::LpPathInner) => {
            FamilySpec::Lollipop { n: n - 2, d: d - 2 }
        }
        (FamilySpec::Lollipop { d, .. }, NodeClass::LpJunction) => FamilySpec::Path { n: d - 1 },
        (FamilySpec::Lollipop { d, .. }, NodeClass::LpClique) => FamilySpec::Path { n: d },
        _ => return mismatch,
    })
}

/// `1 - φ(spec) / φ(contracted family)` using only the agglomeration closed
/// forms.
pub fn imc_via_agglomeration(spec: FamilySpec, class: NodeClass) -> Result<Rational> {
    let contracted = contracted_family(spec, class)?;
    let ratio = phi_family(spec)?.checked_div(phi_family(contracted)?)?;
    Rational::ONE.checked_sub(ratio)
}
