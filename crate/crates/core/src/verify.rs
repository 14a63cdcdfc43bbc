//! Invariant suites over a single mosaic, each producing a named pass/fail
//! check.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::growth::{alternating_sum, g_row_alternating_sums, BeltSeries, GrowthMatrix, Start};
use crate::incidence::{build_k, IncidenceMatrix};
use crate::interval::Interval;
use crate::schlafli::{GeometryClass, SchlafliSymbol};
use crate::spectral::{
    char_poly, closed_form_2d, decompose, dominant_root, hypothesis_check, CharPoly, SpectralResult, ROOT_BITS,
};

/// Belts checked for the per-belt Euler identity.
pub const EULER_BELTS: usize = 20;
/// Belts checked against the characteristic recurrence.
pub const RECURRENCE_BELTS: usize = 30;
/// Belt at which ratio and density are compared with their limits.
pub const CONVERGENCE_BELT: usize = 40;

fn ten_pow_neg(e: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u32).pow(e))
}

/// Rejects symbols the growth pipeline does not handle.
pub fn require_supported(symbol: &SchlafliSymbol) -> Result<GeometryClass> {
    let class = symbol.classify();
    let ok = match class {
        GeometryClass::HyperbolicBoundedCells { .. } => true,
        GeometryClass::EuclideanMosaic => symbol.dim() <= 4,
        _ => false,
    };
    if ok {
        Ok(class)
    } else {
        Err(Error::Unsupported { symbol: format!("{symbol}"), class })
    }
}

/// Everything computed once per mosaic.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub symbol: SchlafliSymbol,
    pub class: GeometryClass,
    pub k: IncidenceMatrix,
    pub growth: GrowthMatrix,
    pub char_poly: CharPoly,
    pub spectral: SpectralResult,
}

impl Analysis {
    pub fn new(symbol: &SchlafliSymbol, precision: u32) -> Result<Self> {
        let class = require_supported(symbol)?;
        let k = build_k(symbol)?;
        let growth = GrowthMatrix::from_incidence(&k);
        let char_poly = char_poly(&growth)?;
        let mut spectral = dominant_root(&char_poly, precision)?;
        // Refined once here so every later decomposition starts narrow.
        spectral.roots.refine_all_bits(ROOT_BITS);
        Ok(Analysis { symbol: symbol.clone(), class, k, growth, char_poly, spectral })
    }

    pub fn series(&self, start: Start, belts: usize) -> Result<BeltSeries> {
        BeltSeries::compute(&self.k, &self.growth, start, belts)
    }

    /// `z1` refined to width at most `2^-bits`.
    pub fn z1_refined(&self, bits: u32) -> Interval {
        let mut root = self.spectral.roots.roots()[self.spectral.dominant].clone();
        root.refine_bits(bits);
        root.enclosure().clone()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub symbol: String,
    pub class: GeometryClass,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs every suite on one mosaic. Errors only when the symbol is not
/// supported or the spectral pipeline itself fails.
pub fn verify_mosaic(symbol: &SchlafliSymbol) -> Result<SuiteReport> {
    let a = Analysis::new(symbol, 10)?;
    let mut checks = Vec::new();
    incidence_checks(&a, &mut checks);
    growth_checks(&a, &mut checks)?;
    spectral_checks(&a, &mut checks)?;
    Ok(SuiteReport { symbol: format!("{symbol}"), class: a.class, checks })
}

fn incidence_checks(a: &Analysis, out: &mut Vec<Check>) {
    const ROMAN: [&str; 4] = ["i", "ii", "iii", "iv"];
    for row in &a.k.check_k_identities().rows {
        for (id, roman) in ROMAN.iter().enumerate() {
            out.push(Check::new(
                format!("K identity ({roman}) row {}", row.row),
                row.passed(id),
                format!("sum {} expected {}", row.sums[id], row.expected[id]),
            ));
        }
    }
    let dual = build_k(&a.symbol.reversed()).map(|k| k == a.k.dual());
    out.push(Check::new("K of dual symbol is K reflected", dual == Ok(true), ""));
}

fn growth_checks(a: &Analysis, out: &mut Vec<Check>) -> Result<()> {
    let g = a.growth.g();
    for (x, s) in g_row_alternating_sums(g).iter().enumerate() {
        out.push(Check::new(format!("G row {x} alternating sum"), s.is_one(), format!("{s}")));
    }
    let det_g = g.determinant();
    let det_m = a.growth.m().determinant();
    out.push(Check::new("det G != 0", !det_g.is_zero(), format!("{det_g}")));
    out.push(Check::new("det M != 0", !det_m.is_zero(), format!("{det_m}")));

    let d = a.symbol.dim();
    for start in [Start::Cell, Start::Vertex] {
        let series = a.series(start, EULER_BELTS)?;
        let bad = series.w.iter().position(|w| !alternating_sum(w).is_one());
        out.push(Check::new(
            format!("Euler identity per belt, {start} start, i <= {EULER_BELTS}"),
            bad.is_none(),
            bad.map(|i| format!("fails at i = {i}")).unwrap_or_default(),
        ));
        if a.class.is_bounded_hyperbolic() {
            let positive = series.v[1..].iter().all(|v| v.iter().all(Signed::is_positive));
            let increasing = (2..series.v.len() - 1).all(|i| (0..=d).all(|y| series.v[i + 1][y] > series.v[i][y]));
            out.push(Check::new(format!("belt counts positive, {start} start"), positive, ""));
            out.push(Check::new(format!("belt counts increasing, {start} start"), increasing, ""));
        }
    }
    let vertex = a.series(Start::Vertex, 1)?;
    out.push(Check::new("vertex start w1 is column 0 of M", vertex.w[1] == a.growth.m().column(0), ""));
    let cell = a.series(Start::Cell, 1)?;
    let expected = a.growth.m().mul_vec(a.k.row(d));
    out.push(Check::new("cell start w1 is M times row d of K", cell.w[1] == expected, ""));
    Ok(())
}

fn spectral_checks(a: &Analysis, out: &mut Vec<Check>) -> Result<()> {
    let d = a.symbol.dim();
    for start in Start::all(d) {
        let series = a.series(start, RECURRENCE_BELTS)?;
        let mut failure = None;
        for y in 0..=d {
            let coord: Vec<BigInt> = series.w.iter().map(|w| w[y].clone()).collect();
            if let Err(i) = a.char_poly.check_recurrence(&coord, 0) {
                failure = Some(format!("coordinate {y} fails at i = {i}"));
                break;
            }
            let belt: Vec<BigInt> = series.v.iter().map(|v| v[y].clone()).collect();
            if let Err(i) = a.char_poly.check_recurrence(&belt[1..], 0) {
                failure = Some(format!("belt coordinate {y} fails at i = {}", i + 1));
                break;
            }
        }
        out.push(Check::new(
            format!("characteristic recurrence, {start} start, i <= {RECURRENCE_BELTS}"),
            failure.is_none(),
            failure.unwrap_or_default(),
        ));
    }

    if !a.class.is_bounded_hyperbolic() {
        out.push(Check::new(
            "growth flagged polynomial (euclidean)",
            a.spectral.polynomial_growth,
            format!("z1 = {}", a.spectral.z1_decimal),
        ));
        return Ok(());
    }

    let z1 = a.z1_refined(128);
    out.push(Check::new("z1 > 1", z1.lo() > &BigRational::one(), a.spectral.z1_decimal.clone()));
    let density = &a.spectral.density_limit;
    let in_unit = density.is_positive() && density.hi() < &BigRational::one();
    out.push(Check::new("0 < density limit < 1", in_unit, a.spectral.density_decimal.clone()));
    let product = &a.spectral.ratio_limit * &a.spectral.density_limit;
    let z1_minus_one = &a.spectral.z1 + &(-BigRational::one());
    out.push(Check::new("ratio limit * density limit = z1 - 1", product.intersects(&z1_minus_one), ""));

    let tol = ten_pow_neg(8);
    for start in [Start::Cell, Start::Vertex] {
        let series = a.series(start, CONVERGENCE_BELT + 1)?;
        let counts = series.counts(d)?;
        let i = CONVERGENCE_BELT;
        let ratio = counts.ratio(i).map(Interval::point);
        let ratio_ok = ratio.as_ref().is_some_and(|r| r.within(&z1, &tol));
        out.push(Check::new(format!("|r_41/r_40 - z1| < 1e-8, {start} start"), ratio_ok, ""));
        let dens = counts.density(i).map(Interval::point);
        let limit = &Interval::from_int(1) - &z1.recip().expect("z1 > 0");
        let dens_ok = dens.as_ref().is_some_and(|r| r.within(&limit, &tol));
        out.push(Check::new(format!("|r_40/s_40 - (z1-1)/z1| < 1e-8, {start} start"), dens_ok, ""));

        let decomposition = decompose(&a.series(start, 2 * (d + 1) + 1)?.counts(d)?, &a.spectral)?;
        let hypotheses = hypothesis_check(&a.spectral, &decomposition);
        out.push(Check::new(
            format!("limit hypotheses hold, {start} start"),
            hypotheses.all_hold() && decomposition.g1_sign() == Some(1),
            format!("g1 ~ {:.6}", decomposition.g1().approx_f64()),
        ));
    }

    let reversed = a.symbol.reversed();
    if reversed != a.symbol {
        let dual = Analysis::new(&reversed, 10)?;
        let bits = 72;
        let gap = (&a.z1_refined(bits) - &dual.z1_refined(bits)).magnitude();
        out.push(Check::new(format!("dual {reversed} has the same z1 to 1e-20"), gap < ten_pow_neg(20), ""));
    }

    if d == 2 {
        let e = a.symbol.entries();
        let closed = closed_form_2d(e[0], e[1])?;
        let agree = closed.z1.enclose(128).within(&a.z1_refined(128), &ten_pow_neg(12));
        out.push(Check::new("z1 matches (c + sqrt(c^2 - 4)) / 2", agree, format!("{}", closed.z1)));
    }
    Ok(())
}

/// Hyperbolic `{p,q}` with `lo <= p, q <= hi`.
pub fn hyperbolic_planar(lo: u32, hi: u32) -> Vec<SchlafliSymbol> {
    let mut out = Vec::new();
    for p in lo..=hi {
        for q in lo..=hi {
            if (p - 2) * (q - 2) > 4 {
                out.push(SchlafliSymbol::new(vec![p, q]).expect("entries >= 3"));
            }
        }
    }
    out
}

/// The nine bounded-cell mosaics followed by the planar sweep `3..=12`.
pub fn all_symbols() -> Vec<SchlafliSymbol> {
    let mut out: Vec<SchlafliSymbol> =
        crate::BOUNDED_HYPERBOLIC.iter().map(|e| SchlafliSymbol::new(e.to_vec()).expect("tabulated symbol")).collect();
    out.extend(hyperbolic_planar(3, 12));
    out
}
