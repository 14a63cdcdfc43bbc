//! Schläfli symbols: parsing, geometry classification, flag counts and face
//! counts of the finite regular polytopes that occur as cells and vertex
//! figures.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::BOUNDED_HYPERBOLIC;

/// A validated Schläfli symbol `{n1, ..., nd}` with every entry at least 3.
///
/// Read as a mosaic the symbol lives in `d`-dimensional space; read as a
/// polytope it describes a `(d + 1)`-dimensional polytope.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchlafliSymbol {
    entries: Vec<u32>,
}

impl SchlafliSymbol {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("empty symbol".into()));
        }
        if let Some(bad) = entries.iter().find(|&&n| n < 3) {
            return Err(Error::Domain(format!("entry {bad} is below 3")));
        }
        Ok(Self { entries })
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_symbol(text)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Length of the symbol, i.e. the dimension of the space the mosaic tiles.
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// The dual symbol (entries reversed).
    pub fn reversed(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Self { entries }
    }

    /// `{n1, ..., n_{d-1}}`, empty for `d = 1`.
    pub fn cell(&self) -> &[u32] {
        &self.entries[..self.entries.len() - 1]
    }

    /// `{n2, ..., nd}`, empty for `d = 1`.
    pub fn vertex_figure(&self) -> &[u32] {
        &self.entries[1..]
    }

    pub fn classify(&self) -> GeometryClass {
        classify(self)
    }
}

impl fmt::Display for SchlafliSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, n) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for SchlafliSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_symbol(s)
    }
}

/// Parses `"{4,3,5}"`, `"4,3,5"` or `" { 6 , 3 } "`.
pub fn parse_symbol(text: &str) -> Result<SchlafliSymbol> {
    let trimmed = text.trim();
    let inner = match (trimmed.strip_prefix('{'), trimmed.ends_with('}')) {
        (Some(rest), true) => &rest[..rest.len() - 1],
        (None, false) => trimmed,
        _ => return Err(Error::Syntax(format!("unbalanced braces in {trimmed:?}"))),
    };
    if inner.trim().is_empty() {
        return Err(Error::Domain("empty symbol".into()));
    }
    let mut entries = Vec::new();
    for token in inner.split(',') {
        let token = token.trim();
        if token.is_empty() {
            return Err(Error::Syntax(format!("empty entry in {trimmed:?}")));
        }
        match token.parse::<u32>() {
            Ok(n) => entries.push(n),
            Err(_) => return Err(classify_bad_token(token)),
        }
    }
    SchlafliSymbol::new(entries)
}

// Numeric-looking tokens that are not admissible entries are domain errors;
// anything else is a syntax error.
fn classify_bad_token(token: &str) -> Error {
    let body = token.strip_prefix(['-', '+']).unwrap_or(token);
    let numeric = !body.is_empty()
        && body.chars().all(|c| c.is_ascii_digit() || c == '.' || c == '/')
        && body.chars().any(|c| c.is_ascii_digit());
    if numeric {
        Error::Domain(format!("entry {token:?} is not an integer >= 3"))
    } else {
        Error::Syntax(format!("unexpected token {token:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeometryClass {
    SphericalPolytope,
    EuclideanMosaic,
    /// Compact hyperbolic mosaic. `tabulated` marks the nine 3-D/4-D symbols;
    /// hyperbolic `{p,q}` in the plane are bounded but not tabulated.
    HyperbolicBoundedCells {
        tabulated: bool,
    },
    /// Cells or vertex figures are Euclidean tilings.
    HyperbolicUnboundedCells,
    Invalid,
}

impl GeometryClass {
    pub fn name(self) -> &'static str {
        match self {
            GeometryClass::SphericalPolytope => "spherical polytope",
            GeometryClass::EuclideanMosaic => "euclidean mosaic",
            GeometryClass::HyperbolicBoundedCells { .. } => "hyperbolic, bounded cells",
            GeometryClass::HyperbolicUnboundedCells => "hyperbolic, unbounded cells",
            GeometryClass::Invalid => "invalid",
        }
    }

    pub fn is_bounded_hyperbolic(self) -> bool {
        matches!(self, GeometryClass::HyperbolicBoundedCells { .. })
    }
}

const EUCLIDEAN_3D: [[u32; 3]; 1] = [[4, 3, 4]];
const EUCLIDEAN_4D: [[u32; 4]; 3] = [[4, 3, 3, 4], [3, 3, 4, 3], [3, 4, 3, 3]];

/// Flag counts of the six regular 4-polytopes.
const ORDERS_4D: [([u32; 3], u32); 6] =
    [([3, 3, 3], 120), ([4, 3, 3], 384), ([3, 3, 4], 384), ([3, 4, 3], 1152), ([5, 3, 3], 14400), ([3, 3, 5], 14400)];

/// Whether `entries` (possibly empty) is the symbol of a finite regular polytope.
pub fn is_spherical(entries: &[u32]) -> bool {
    match entries {
        [] => true,
        [p] => *p >= 3,
        [p, q] => *p >= 3 && *q >= 3 && (p - 2) * (q - 2) < 4,
        [a, b, c] => ORDERS_4D.iter().any(|(s, _)| s == &[*a, *b, *c]),
        _ => {
            let n = entries.len();
            let inner_threes = |s: &[u32]| s.iter().all(|&x| x == 3);
            inner_threes(entries)
                || (entries[0] == 4 && inner_threes(&entries[1..]))
                || (entries[n - 1] == 4 && inner_threes(&entries[..n - 1]))
        }
    }
}

fn is_euclidean_tiling(entries: &[u32]) -> bool {
    match entries.len() {
        0 | 1 => false,
        2 => (entries[0] - 2) * (entries[1] - 2) == 4,
        3 => EUCLIDEAN_3D.iter().any(|s| s[..] == *entries),
        4 => EUCLIDEAN_4D.iter().any(|s| s[..] == *entries),
        n => entries[0] == 4 && entries[n - 1] == 4 && entries[1..n - 1].iter().all(|&x| x == 3),
    }
}

pub fn classify(symbol: &SchlafliSymbol) -> GeometryClass {
    let s = symbol.entries();
    if is_spherical(s) {
        return GeometryClass::SphericalPolytope;
    }
    if s.len() == 2 {
        // (p-2)(q-2) vs 4 is 1/p + 1/q vs 1/2 cleared of denominators.
        return if is_euclidean_tiling(s) {
            GeometryClass::EuclideanMosaic
        } else {
            GeometryClass::HyperbolicBoundedCells { tabulated: false }
        };
    }
    if is_euclidean_tiling(s) {
        return GeometryClass::EuclideanMosaic;
    }
    let cell = symbol.cell();
    let figure = symbol.vertex_figure();
    let cell_ok = is_spherical(cell) || is_euclidean_tiling(cell);
    let figure_ok = is_spherical(figure) || is_euclidean_tiling(figure);
    if !(cell_ok && figure_ok) {
        return GeometryClass::Invalid;
    }
    if is_spherical(cell) && is_spherical(figure) {
        if BOUNDED_HYPERBOLIC.contains(&s) {
            GeometryClass::HyperbolicBoundedCells { tabulated: true }
        } else {
            GeometryClass::Invalid
        }
    } else {
        GeometryClass::HyperbolicUnboundedCells
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Number of flags of the regular polytope with symbol `entries`.
///
/// The empty symbol is the segment (2 flags). The point, which has no symbol,
/// is handled by callers with order 1.
pub fn coxeter_order(entries: &[u32]) -> Result<BigInt> {
    if !is_spherical(entries) {
        return Err(Error::Domain(format!("{entries:?} is not a finite regular polytope")));
    }
    let order = match entries {
        [] => BigInt::from(2u32),
        [p] => BigInt::from(2 * p),
        [p, q] => {
            let (p, q) = (*p as i64, *q as i64);
            BigInt::from(8 * p * q / (4 - (p - 2) * (q - 2)))
        }
        [a, b, c] => {
            let (_, order) =
                ORDERS_4D.iter().find(|(s, _)| s == &[*a, *b, *c]).expect("spherical 3-symbols are tabulated");
            BigInt::from(*order)
        }
        _ => {
            let n = entries.len() as u32 + 1;
            if entries.iter().all(|&x| x == 3) {
                factorial(n + 1)
            } else {
                (BigInt::one() << n) * factorial(n)
            }
        }
    };
    Ok(order)
}

/// Number of `l`-dimensional faces of the regular polytope `entries`
/// (dimension `entries.len() + 1`). `N_dim = 1`.
pub fn face_count(entries: &[u32], l: usize) -> Result<BigInt> {
    let dim = entries.len() + 1;
    if l > dim {
        return Err(Error::OutOfRange { what: "face dimension", value: l, max: dim });
    }
    if !is_spherical(entries) {
        return Err(Error::Domain(format!("{entries:?} is not a finite regular polytope")));
    }
    if l == dim {
        return Ok(BigInt::one());
    }
    // Stabiliser of an l-face: flags of the face times flags of its co-face.
    let face_flags = if l == 0 { BigInt::one() } else { coxeter_order(&entries[..l - 1])? };
    let coface_flags = if l + 1 == dim { BigInt::one() } else { coxeter_order(&entries[l + 1..])? };
    Ok(coxeter_order(entries)? / (face_flags * coface_flags))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn sym(e: &[u32]) -> SchlafliSymbol {
        SchlafliSymbol::new(e.to_vec()).unwrap()
    }

    #[test]
    fn parses_braced_and_bare() {
        assert_eq!(parse_symbol("{4,3,5}").unwrap().entries(), &[4, 3, 5]);
        assert_eq!(parse_symbol("6, 3").unwrap().entries(), &[6, 3]);
        assert_eq!(parse_symbol("  { 5 ,3,3 ,5 } ").unwrap().entries(), &[5, 3, 3, 5]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_symbol("{4,3,x}"), Err(Error::Syntax(_))));
        assert!(matches!(parse_symbol("{4,3"), Err(Error::Syntax(_))));
        assert!(matches!(parse_symbol("4,,3"), Err(Error::Syntax(_))));
        assert!(matches!(parse_symbol("{}"), Err(Error::Domain(_))));
        assert!(matches!(parse_symbol(""), Err(Error::Domain(_))));
        assert!(matches!(parse_symbol("{4,2}"), Err(Error::Domain(_))));
        assert!(matches!(parse_symbol("{4,2.5}"), Err(Error::Domain(_))));
        assert!(matches!(parse_symbol("{-4,3}"), Err(Error::Domain(_))));
    }

    #[test]
    fn display_roundtrip() {
        let s = sym(&[5, 3, 3, 4]);
        assert_eq!(s.to_string(), "{5,3,3,4}");
        assert_eq!(parse_symbol(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn classify_planar() {
        assert_eq!(sym(&[6, 3]).classify(), GeometryClass::EuclideanMosaic);
        assert_eq!(sym(&[4, 4]).classify(), GeometryClass::EuclideanMosaic);
        assert_eq!(sym(&[3, 5]).classify(), GeometryClass::SphericalPolytope);
        assert_eq!(sym(&[4, 5]).classify(), GeometryClass::HyperbolicBoundedCells { tabulated: false });
    }

    #[test]
    fn classify_space() {
        for s in BOUNDED_HYPERBOLIC {
            assert_eq!(sym(s).classify(), GeometryClass::HyperbolicBoundedCells { tabulated: true }, "{s:?}");
        }
        assert_eq!(sym(&[4, 3, 4]).classify(), GeometryClass::EuclideanMosaic);
        assert_eq!(sym(&[4, 3, 6]).classify(), GeometryClass::HyperbolicUnboundedCells);
        assert_eq!(sym(&[3, 6, 3]).classify(), GeometryClass::HyperbolicUnboundedCells);
        assert_eq!(sym(&[3, 3, 7]).classify(), GeometryClass::Invalid);
        assert_eq!(sym(&[3, 4, 3]).classify(), GeometryClass::SphericalPolytope);
        assert_eq!(sym(&[3, 3, 4, 3]).classify(), GeometryClass::EuclideanMosaic);
        assert_eq!(sym(&[4, 3, 4, 3]).classify(), GeometryClass::HyperbolicUnboundedCells);
        assert_eq!(sym(&[3, 3, 3, 3, 5]).classify(), GeometryClass::Invalid);
        assert_eq!(sym(&[4, 3, 3, 3, 4]).classify(), GeometryClass::EuclideanMosaic);
        assert_eq!(sym(&[4, 3, 3, 4, 3]).classify(), GeometryClass::HyperbolicUnboundedCells);
    }

    #[test]
    fn paracompact_3d_count() {
        // Eleven regular honeycombs in 3-space with ideal cells or vertices.
        let mut count = 0;
        for p in 3..=8 {
            for q in 3..=8 {
                for r in 3..=8 {
                    if sym(&[p, q, r]).classify() == GeometryClass::HyperbolicUnboundedCells {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(count, 11);
    }

    #[test]
    fn orders() {
        assert_eq!(coxeter_order(&[]).unwrap(), BigInt::from(2));
        assert_eq!(coxeter_order(&[7]).unwrap(), BigInt::from(14));
        assert_eq!(coxeter_order(&[4, 3]).unwrap(), BigInt::from(48));
        assert_eq!(coxeter_order(&[3, 5]).unwrap(), BigInt::from(120));
        assert_eq!(coxeter_order(&[5, 3, 3]).unwrap(), BigInt::from(14400));
        assert_eq!(coxeter_order(&[3, 3, 3, 3]).unwrap(), BigInt::from(720));
        assert_eq!(coxeter_order(&[4, 3, 3, 3]).unwrap(), BigInt::from(3840));
        assert!(coxeter_order(&[6, 3]).is_err());
    }

    #[test]
    fn face_counts() {
        assert_eq!(face_count(&[3, 5], 0).unwrap(), BigInt::from(12));
        assert_eq!(face_count(&[4, 3], 2).unwrap(), BigInt::from(6));
        let c120: Vec<BigInt> = (0..=4).map(|l| face_count(&[5, 3, 3], l).unwrap()).collect();
        assert_eq!(c120, vec![600, 1200, 720, 120, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert_eq!(face_count(&[], 0).unwrap(), BigInt::from(2));
        assert!(matches!(face_count(&[4, 3], 4), Err(Error::OutOfRange { .. })));
        assert!(face_count(&[6, 3], 0).is_err());
    }
}
