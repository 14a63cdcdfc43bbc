//! The incidence matrix `K` of a regular mosaic.
//!
//! `K[x][y]` is the number of `y`-faces incident to an `x`-face. Below the
//! diagonal these are face counts of the `x`-face `{n1..n_{x-1}}`, above it
//! face counts of the polytope `{n_{x+2}..nd}` whose faces correspond to the
//! higher faces around an `x`-face.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::schlafli::{coxeter_order, face_count, GeometryClass, SchlafliSymbol};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    mosaic: SchlafliSymbol,
    k: IntMatrix,
}

fn require_finite_faces(mosaic: &SchlafliSymbol) -> Result<()> {
    match mosaic.classify() {
        GeometryClass::SphericalPolytope
        | GeometryClass::EuclideanMosaic
        | GeometryClass::HyperbolicBoundedCells { .. } => Ok(()),
        class => Err(Error::Unsupported { symbol: format!("{mosaic}"), class }),
    }
}

impl IncidenceMatrix {
    pub fn build(mosaic: &SchlafliSymbol) -> Result<Self> {
        build_k(mosaic)
    }

    pub fn mosaic(&self) -> &SchlafliSymbol {
        &self.mosaic
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.k
    }

    pub fn dim(&self) -> usize {
        self.mosaic.dim()
    }

    pub fn get(&self, x: usize, y: usize) -> &BigInt {
        &self.k[(x, y)]
    }

    pub fn row(&self, x: usize) -> &[BigInt] {
        self.k.row(x)
    }

    /// The incidence matrix of the dual mosaic: `K*[x][y] = K[d-x][d-y]`.
    pub fn dual(&self) -> IncidenceMatrix {
        let d = self.dim();
        IncidenceMatrix {
            mosaic: self.mosaic.reversed(),
            k: IntMatrix::from_fn(d + 1, |x, y| self.k[(d - x, d - y)].clone()),
        }
    }

    /// Flags of one cell: `k[d][d-1] * k[d-1][d-2] * ... * k[1][0]`.
    pub fn flag_count_cell(&self) -> BigInt {
        (1..=self.dim()).map(|x| &self.k[(x, x - 1)]).product()
    }

    pub fn check_k_identities(&self) -> KIdentityReport {
        check_k_identities(self)
    }
}

pub fn build_k(mosaic: &SchlafliSymbol) -> Result<IncidenceMatrix> {
    require_finite_faces(mosaic)?;
    let s = mosaic.entries();
    let d = s.len();
    let mut k = IntMatrix::identity(d + 1);
    for x in 0..=d {
        for y in 0..=d {
            if y < x {
                k[(x, y)] = face_count(&s[..x - 1], y)?;
            } else if y > x {
                k[(x, y)] = face_count(&s[x + 1..], y - x - 1)?;
            }
        }
    }
    Ok(IncidenceMatrix { mosaic: mosaic.clone(), k })
}

pub fn dual_k(k: &IncidenceMatrix) -> IncidenceMatrix {
    k.dual()
}

/// Number of characteristic simplices sharing one `x`-point:
/// flags of the `x`-face times flags of the polytope of faces above it.
pub fn simplices_around_x(mosaic: &SchlafliSymbol, x: usize) -> Result<BigInt> {
    require_finite_faces(mosaic)?;
    let s = mosaic.entries();
    let d = s.len();
    if x > d {
        return Err(Error::OutOfRange { what: "point dimension", value: x, max: d });
    }
    let below = if x == 0 { BigInt::one() } else { coxeter_order(&s[..x - 1])? };
    let above = if x == d { BigInt::one() } else { coxeter_order(&s[x + 1..])? };
    Ok(below * above)
}

/// Per-row outcome of the four alternating-sum identities of `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KIdentityRow {
    pub row: usize,
    /// Computed sums for identities (i)..(iv).
    pub sums: [BigInt; 4],
    pub expected: [BigInt; 4],
}

impl KIdentityRow {
    pub fn passed(&self, identity: usize) -> bool {
        self.sums[identity] == self.expected[identity]
    }

    pub fn all_passed(&self) -> bool {
        (0..4).all(|i| self.passed(i))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KIdentityReport {
    pub rows: Vec<KIdentityRow>,
}

impl KIdentityReport {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(KIdentityRow::all_passed)
    }
}

fn alt(j: usize) -> BigInt {
    if j.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Evaluates, for every row `l`:
/// (i) `sum_{j<=l} (-1)^j k_l^j = 1`,
/// (ii) `sum_{j>=l} (-1)^j k_l^j = (-1)^d`,
/// (iii) `sum_{j>=l} (-1)^(d-j) k_l^j = 1`,
/// (iv) `sum_j (-1)^j k_l^j = 1 - (-1)^l + (-1)^d`.
pub fn check_k_identities(k: &IncidenceMatrix) -> KIdentityReport {
    let d = k.dim();
    let rows = (0..=d)
        .map(|l| {
            let row = k.row(l);
            let lower: BigInt = (0..=l).map(|j| alt(j) * &row[j]).sum();
            let upper: BigInt = (l..=d).map(|j| alt(j) * &row[j]).sum();
            let upper_rev: BigInt = (l..=d).map(|j| alt(d - j) * &row[j]).sum();
            let full: BigInt = (0..=d).map(|j| alt(j) * &row[j]).sum();
            KIdentityRow {
                row: l,
                sums: [lower, upper, upper_rev, full],
                expected: [BigInt::one(), alt(d), BigInt::one(), BigInt::one() - alt(l) + alt(d)],
            }
        })
        .collect();
    KIdentityReport { rows }
}

/// Entry-wise positivity of `K`.
pub fn all_positive(k: &IncidenceMatrix) -> bool {
    k.k.rows().all(|r| r.iter().all(Signed::is_positive))
}
