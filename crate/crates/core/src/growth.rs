//! Sieve matrix `G`, recurrence matrix `M` and exact belt series.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::incidence::IncidenceMatrix;
use crate::matrix::IntMatrix;
use crate::schlafli::SchlafliSymbol;

fn alt(j: usize) -> BigInt {
    if j.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `G[x][y] = sum_{j >= max(x,y)} (-1)^(d-j) k[x][j] k[j][y]`: the number of
/// `y`-points in the union of cells around an `x`-point.
pub fn build_g(k: &IncidenceMatrix) -> IntMatrix {
    let d = k.dim();
    IntMatrix::from_fn(d + 1, |x, y| (x.max(y)..=d).map(|j| alt(d - j) * k.get(x, j) * k.get(j, y)).sum())
}

/// `G`, `M = G^T diag(1, -1, 1, ...)` and the sign diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthMatrix {
    g: IntMatrix,
    m: IntMatrix,
    sign_diag: Vec<i8>,
}

impl GrowthMatrix {
    pub fn from_incidence(k: &IncidenceMatrix) -> Self {
        build_m(&build_g(k))
    }

    pub fn g(&self) -> &IntMatrix {
        &self.g
    }

    pub fn m(&self) -> &IntMatrix {
        &self.m
    }

    pub fn sign_diag(&self) -> &[i8] {
        &self.sign_diag
    }

    pub fn size(&self) -> usize {
        self.m.size()
    }
}

pub fn build_m(g: &IntMatrix) -> GrowthMatrix {
    let n = g.size();
    let m = IntMatrix::from_fn(n, |i, j| alt(j) * &g[(j, i)]);
    let sign_diag = (0..n).map(|j| if j % 2 == 0 { 1 } else { -1 }).collect();
    GrowthMatrix { g: g.clone(), m, sign_diag }
}

/// `sum_j (-1)^j G[x][j]` for every row `x`.
pub fn g_row_alternating_sums(g: &IntMatrix) -> Vec<BigInt> {
    g.rows().map(|row| row.iter().enumerate().map(|(j, v)| alt(j) * v).sum()).collect()
}

/// `sum_y (-1)^y w^y`.
pub fn alternating_sum(w: &[BigInt]) -> BigInt {
    w.iter().enumerate().map(|(y, v)| alt(y) * v).sum()
}

/// What belt 0 is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Start {
    Cell,
    Vertex,
    /// An `l`-dimensional face.
    Face(usize),
}

impl fmt::Display for Start {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Start::Cell => f.write_str("cell"),
            Start::Vertex => f.write_str("vertex"),
            Start::Face(l) => write!(f, "face:{l}"),
        }
    }
}

impl FromStr for Start {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "cell" => Ok(Start::Cell),
            "vertex" => Ok(Start::Vertex),
            other => other
                .strip_prefix("face:")
                .and_then(|l| l.parse().ok())
                .map(Start::Face)
                .ok_or_else(|| Error::Syntax(format!("start must be cell, vertex or face:L, got {other:?}"))),
        }
    }
}

impl Start {
    /// Every start for a mosaic of dimension `d`: cell, vertex, and faces
    /// of dimension `0..=d`.
    pub fn all(d: usize) -> Vec<Start> {
        let mut out = vec![Start::Cell, Start::Vertex];
        out.extend((0..=d).map(Start::Face));
        out
    }
}

/// `w0 = v0` for the given belt 0.
pub fn initial_state(k: &IncidenceMatrix, start: Start) -> Result<Vec<BigInt>> {
    let d = k.dim();
    let w = match start {
        Start::Cell => k.row(d).to_vec(),
        Start::Vertex => {
            let mut w = vec![BigInt::zero(); d + 1];
            w[0] = BigInt::one();
            w
        }
        Start::Face(l) => {
            if l > d {
                return Err(Error::OutOfRange { what: "face dimension", value: l, max: d });
            }
            let row = k.row(l);
            (0..=d).map(|j| if j <= l { row[j].clone() } else { BigInt::zero() }).collect()
        }
    };
    Ok(w)
}

/// Exact point counts `w_0..w_n` of the growing balls and `v_0..v_n` of the
/// belts, with `v_0 = w_0` and `v_i = w_i - w_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeltSeries {
    pub mosaic: SchlafliSymbol,
    pub start: Start,
    pub w: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

impl BeltSeries {
    /// Builds the series for `start` with `n` belts beyond belt 0.
    pub fn compute(k: &IncidenceMatrix, gm: &GrowthMatrix, start: Start, n: usize) -> Result<Self> {
        let (w, v) = iterate(gm, initial_state(k, start)?, n)?;
        Ok(BeltSeries { mosaic: k.mosaic().clone(), start, w, v })
    }

    /// Index of the last belt.
    pub fn len(&self) -> usize {
        self.w.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn counts(&self, coordinate: usize) -> Result<BeltCounts> {
        belt_counts(self, coordinate)
    }
}

/// One integer vector per belt.
pub type Trajectory = Vec<Vec<BigInt>>;

/// Iterates `w_{i+1} = M w_i` for `n` steps and returns `(w, v)`.
pub fn iterate(gm: &GrowthMatrix, w0: Vec<BigInt>, n: usize) -> Result<(Trajectory, Trajectory)> {
    if n == 0 {
        return Err(Error::Domain("at least one belt must be computed".into()));
    }
    if w0.len() != gm.size() {
        return Err(Error::Domain(format!("start vector has {} coordinates, matrix has {}", w0.len(), gm.size())));
    }
    let mut w = Vec::with_capacity(n + 1);
    let mut v = Vec::with_capacity(n + 1);
    v.push(w0.clone());
    w.push(w0);
    for i in 0..n {
        let next = gm.m().mul_vec(&w[i]);
        v.push(next.iter().zip(&w[i]).map(|(a, b)| a - b).collect());
        w.push(next);
    }
    Ok((w, v))
}

/// Scalar series read from one coordinate of a belt series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeltCounts {
    pub coordinate: usize,
    /// `r_i = v_i[coordinate]`
    pub r: Vec<BigInt>,
    /// `s_i = w_i[coordinate] = r_0 + ... + r_i`
    pub s: Vec<BigInt>,
}

impl BeltCounts {
    /// `r_{i+1} / r_i`, `None` where `r_i = 0`.
    pub fn ratio(&self, i: usize) -> Option<BigRational> {
        let den = self.r.get(i)?;
        let num = self.r.get(i + 1)?;
        (!den.is_zero()).then(|| BigRational::new(num.clone(), den.clone()))
    }

    /// `r_i / s_i`, `None` where `s_i = 0`.
    pub fn density(&self, i: usize) -> Option<BigRational> {
        let den = self.s.get(i)?;
        (!den.is_zero()).then(|| BigRational::new(self.r[i].clone(), den.clone()))
    }

    /// `s_{i+1} / s_i`, `None` where `s_i = 0`.
    pub fn ball_ratio(&self, i: usize) -> Option<BigRational> {
        let den = self.s.get(i)?;
        let num = self.s.get(i + 1)?;
        (!den.is_zero()).then(|| BigRational::new(num.clone(), den.clone()))
    }
}

pub fn belt_counts(series: &BeltSeries, coordinate: usize) -> Result<BeltCounts> {
    let d = series.w[0].len() - 1;
    if coordinate > d {
        return Err(Error::OutOfRange { what: "coordinate", value: coordinate, max: d });
    }
    Ok(BeltCounts {
        coordinate,
        r: series.v.iter().map(|v| v[coordinate].clone()).collect(),
        s: series.w.iter().map(|w| w[coordinate].clone()).collect(),
    })
}

/// Human-readable one-line summary of a vector, for diagnostics.
pub fn format_vector(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::build_k;
    use alloc::string::ToString;

    fn sym(e: &[u32]) -> SchlafliSymbol {
        SchlafliSymbol::new(e.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn m_rows(gm: &GrowthMatrix) -> Vec<Vec<i64>> {
        gm.m().rows().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect()
    }

    fn setup(e: &[u32]) -> (IncidenceMatrix, GrowthMatrix) {
        let k = build_k(&sym(e)).unwrap();
        let gm = GrowthMatrix::from_incidence(&k);
        (k, gm)
    }

    #[test]
    fn g_entries_435() {
        let (_, gm) = setup(&[4, 3, 5]);
        assert_eq!(gm.g()[(0, 0)], BigInt::from(63));
        assert_eq!(gm.g()[(1, 0)], BigInt::from(22));
        assert_eq!(gm.g()[(3, 3)], BigInt::from(1));
        assert!(g_row_alternating_sums(gm.g()).iter().all(|s| s.is_one()));
    }

    #[test]
    fn m_435() {
        let (_, gm) = setup(&[4, 3, 5]);
        assert_eq!(m_rows(&gm), [[63, -22, 12, -8], [132, -41, 20, -12], [90, -25, 11, -6], [20, -5, 2, -1]]);
        assert_eq!(gm.sign_diag(), &[1, -1, 1, -1]);
    }

    #[test]
    fn m_planar_generic() {
        for (p, q) in [(6i64, 3i64), (4, 5), (3, 7)] {
            let (_, gm) = setup(&[p as u32, q as u32]);
            assert_eq!(m_rows(&gm), [[p * q - 2 * q + 1, -2 * p + 2, p], [p * q - q, -2 * p + 1, p], [q, -2, 1]]);
        }
    }

    #[test]
    fn m_5335_last_row() {
        let (_, gm) = setup(&[5, 3, 3, 5]);
        assert_eq!(m_rows(&gm)[4], [600, -20, 5, -2, 1]);
    }

    #[test]
    fn initial_states() {
        let (k, _) = setup(&[4, 3, 5]);
        assert_eq!(initial_state(&k, Start::Cell).unwrap(), ints(&[8, 12, 6, 1]));
        assert_eq!(initial_state(&k, Start::Vertex).unwrap(), ints(&[1, 0, 0, 0]));
        assert_eq!(initial_state(&k, Start::Face(1)).unwrap(), ints(&[2, 1, 0, 0]));
        assert_eq!(initial_state(&k, Start::Face(3)).unwrap(), initial_state(&k, Start::Cell).unwrap());
        assert!(matches!(initial_state(&k, Start::Face(4)), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn iterate_435_cell() {
        let (k, gm) = setup(&[4, 3, 5]);
        let series = BeltSeries::compute(&k, &gm, Start::Cell, 2).unwrap();
        assert_eq!(series.w[1], ints(&[304, 672, 480, 111]));
        let counts = series.counts(3).unwrap();
        assert_eq!(counts.r[0], BigInt::from(1));
        assert_eq!(counts.r[1], BigInt::from(110));
        assert_eq!(counts.s[2], BigInt::from(3569));
        assert_eq!(counts.r[2], BigInt::from(3458));
        let ratio = counts.ratio(1).unwrap();
        assert_eq!(ratio, BigRational::new(BigInt::from(3458), BigInt::from(110)));
    }

    #[test]
    fn iterate_vertex_start_extracts_column() {
        let (k, gm) = setup(&[4, 3, 5]);
        let series = BeltSeries::compute(&k, &gm, Start::Vertex, 1).unwrap();
        assert_eq!(series.w[1], gm.m().column(0));
        assert_eq!(series.w[1], ints(&[63, 132, 90, 20]));
    }

    #[test]
    fn planar_45_belts() {
        let (k, gm) = setup(&[4, 5]);
        let counts = BeltSeries::compute(&k, &gm, Start::Cell, 2).unwrap().counts(2).unwrap();
        assert_eq!(counts.r[1], BigInt::from(12));
        assert_eq!(counts.r[2], BigInt::from(48));
        assert_eq!(counts.s[0], BigInt::from(1));
    }

    #[test]
    fn euler_per_belt() {
        for e in crate::BOUNDED_HYPERBOLIC {
            let (k, gm) = setup(e);
            for start in [Start::Cell, Start::Vertex] {
                let series = BeltSeries::compute(&k, &gm, start, 8).unwrap();
                for w in &series.w {
                    assert!(alternating_sum(w).is_one(), "{e:?} {start}");
                }
            }
        }
    }

    #[test]
    fn start_parsing() {
        assert_eq!("cell".parse::<Start>().unwrap(), Start::Cell);
        assert_eq!("vertex".parse::<Start>().unwrap(), Start::Vertex);
        assert_eq!("face:2".parse::<Start>().unwrap(), Start::Face(2));
        assert!("face:x".parse::<Start>().is_err());
        assert!("edge".parse::<Start>().is_err());
        assert_eq!(Start::Face(2).to_string(), "face:2");
        assert_eq!(Start::all(3).len(), 6);
    }

    #[test]
    fn zero_belts_rejected() {
        let (k, gm) = setup(&[4, 5]);
        assert!(BeltSeries::compute(&k, &gm, Start::Cell, 0).is_err());
        assert!(belt_counts(&BeltSeries::compute(&k, &gm, Start::Cell, 1).unwrap(), 3).is_err());
    }
}
