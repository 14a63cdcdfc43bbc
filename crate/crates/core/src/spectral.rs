//! Characteristic polynomial of `M`, its certified dominant root and the
//! eigen-decomposition of scalar belt series.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::decimal;
use crate::error::{Error, Result};
use crate::growth::{BeltCounts, GrowthMatrix};
use crate::interval::{cmp_q, Interval};
use crate::poly::Poly;
use crate::roots::{isolate_real_roots, RootSet};

/// Working resolution, in bits, for interval computations.
const WORK_BITS: u32 = 640;
/// Resolution of root enclosures fed into the eigen-decomposition.
pub const ROOT_BITS: u32 = 400;
/// Give up certifying dominance past this root resolution.
const MAX_CERT_BITS: u32 = 512;

fn q(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn pow10(places: u32) -> BigRational {
    q(BigInt::from(10u32).pow(places))
}

/// `det(zI - M) = z^n - beta_1 z^(n-1) - ... - beta_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    beta: Vec<BigInt>,
    poly: Poly,
    square_free: Vec<(Poly, usize)>,
}

impl CharPoly {
    /// Builds from monic integer coefficients, ascending.
    pub fn from_monic(coeffs: &[BigInt]) -> Result<Self> {
        let poly = Poly::from_ints(coeffs.iter().cloned());
        if poly.degree().unwrap_or(0) == 0 || !poly.leading().is_one() {
            return Err(Error::Domain("characteristic polynomial must be monic of positive degree".into()));
        }
        let n = coeffs.len() - 1;
        let beta: Vec<BigInt> = (1..=n).map(|j| -coeffs[n - j].clone()).collect();
        if beta[n - 1].is_zero() {
            return Err(Error::Invariant("characteristic polynomial has a zero root; M is singular".into()));
        }
        let square_free = poly.square_free_decomposition();
        Ok(CharPoly { beta, poly, square_free })
    }

    /// `beta_1..beta_n`.
    pub fn beta(&self) -> &[BigInt] {
        &self.beta
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.beta.len()
    }

    /// Integer coefficients in ascending order of degree.
    pub fn coefficients(&self) -> Vec<BigInt> {
        self.poly.to_integers().expect("integer characteristic polynomial")
    }

    /// Square-free factors with their multiplicities.
    pub fn square_free(&self) -> &[(Poly, usize)] {
        &self.square_free
    }

    /// Checks `r_i = sum_j beta_j r_(i-j)` for every `i` in `from..r.len()`
    /// with `i >= n`. Returns the first failing index.
    pub fn check_recurrence(&self, r: &[BigInt], from: usize) -> core::result::Result<(), usize> {
        let n = self.degree();
        for i in from.max(n)..r.len() {
            let predicted: BigInt = (1..=n).map(|j| &self.beta[j - 1] * &r[i - j]).sum();
            if predicted != r[i] {
                return Err(i);
            }
        }
        Ok(())
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

pub fn char_poly(gm: &GrowthMatrix) -> Result<CharPoly> {
    let p = gm.m().characteristic_polynomial();
    let coeffs = p
        .to_integers()
        .ok_or_else(|| Error::Invariant("characteristic polynomial of an integer matrix is not integral".into()))?;
    CharPoly::from_monic(&coeffs)
}

/// The dominant root `z1` and the two limits it determines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralResult {
    pub char_poly: CharPoly,
    pub roots: RootSet,
    /// Index of `z1` in `roots`.
    pub dominant: usize,
    pub z1: Interval,
    /// Limit of `r_(i+1) / r_i`, equal to `z1`.
    pub ratio_limit: Interval,
    /// Limit of `r_i / s_i`, equal to `(z1 - 1) / z1`.
    pub density_limit: Interval,
    pub precision: u32,
    pub z1_decimal: String,
    pub density_decimal: String,
    /// `z1 = 1`: the balls grow polynomially, not exponentially.
    pub polynomial_growth: bool,
}

impl SpectralResult {
    pub fn z1_multiplicity(&self) -> usize {
        self.roots.roots()[self.dominant].multiplicity()
    }
}

fn density_of(z1: &Interval) -> Interval {
    let recip = z1.recip().expect("dominant root is non-zero");
    &Interval::from_int(1) - &recip
}

/// Certifies a unique root of maximal modulus and renders the limits with
/// `precision` digits after the decimal point.
pub fn dominant_root(cp: &CharPoly, precision: u32) -> Result<SpectralResult> {
    let mut roots = isolate_real_roots(cp.poly());
    if roots.distinct() == 0 {
        return Err(Error::Ambiguous("no real root".into()));
    }
    let mut bits = 32;
    let dominant = loop {
        roots.refine_all_bits(bits);
        if let Some(k) = certified_max_modulus(&roots) {
            if roots.non_real() == 0 || complex_roots_below(cp.poly(), &roots, k) {
                break k;
            }
        }
        bits *= 2;
        if bits > MAX_CERT_BITS {
            return Err(Error::Ambiguous(format!("no unique root of maximal modulus for {cp}")));
        }
    };

    let mut z1_root = roots.roots()[dominant].clone();
    let (z1_decimal, density_decimal) = loop {
        let z1 = z1_root.enclosure().clone();
        let density = density_of(&z1);
        if let (Some(a), Some(b)) = (z1.render(precision), density.render(precision)) {
            break (a, b);
        }
        let w = z1.width() / pow10(precision + 4);
        z1_root.refine(&w);
        if z1_root.enclosure().width() * pow10(precision + 60) < q(1) {
            // A decimal tie cannot be settled by refinement; render the midpoint.
            let mid = Interval::point(z1_root.enclosure().mid());
            break (decimal::render(mid.lo(), precision), decimal::render(density_of(&mid).lo(), precision));
        }
    };
    roots.roots_mut()[dominant] = z1_root;
    let z1 = roots.roots()[dominant].enclosure().clone();
    let polynomial_growth = z1.is_point() && z1.lo().is_one();
    Ok(SpectralResult {
        char_poly: cp.clone(),
        dominant,
        ratio_limit: z1.clone(),
        density_limit: density_of(&z1),
        z1,
        roots,
        precision,
        z1_decimal,
        density_decimal,
        polynomial_growth,
    })
}

// The root whose modulus is certainly above every other real root's.
fn certified_max_modulus(roots: &RootSet) -> Option<usize> {
    let rs = roots.roots();
    let abs: Vec<Interval> = rs.iter().map(|r| r.enclosure().abs()).collect();
    let k = (0..rs.len()).max_by(|&a, &b| cmp_q(abs[a].hi(), abs[b].hi()))?;
    let strict = (0..rs.len()).all(|j| j == k || abs[j].certainly_lt(&abs[k]));
    strict.then_some(k)
}

// Certifies that every non-real root has modulus below `|z1|`: deflate the
// dominant factor out in interval arithmetic, apply Graeffe root squaring
// and compare with the Fujiwara bound.
fn complex_roots_below(p: &Poly, roots: &RootSet, k: usize) -> bool {
    let root = &roots.roots()[k];
    let z1 = root.enclosure().clone();
    let mut coeffs: Vec<Interval> = p.coeffs().iter().map(|c| Interval::point(c.clone())).collect();
    for _ in 0..root.multiplicity() {
        coeffs = deflate(&coeffs, &z1);
    }
    let mut threshold = z1.abs().lo().clone();
    for _ in 0..8 {
        if fujiwara_below(&coeffs, &threshold) {
            return true;
        }
        coeffs = graeffe(&coeffs);
        threshold = Interval::point(&threshold * &threshold).round_out(WORK_BITS).lo().clone();
    }
    false
}

// Quotient of synthetic division by `z - c`, remainder dropped.
fn deflate(coeffs: &[Interval], c: &Interval) -> Vec<Interval> {
    let n = coeffs.len() - 1;
    let mut out = vec![Interval::from_int(0); n];
    let mut acc = coeffs[n].clone();
    for i in (0..n).rev() {
        out[i] = acc.clone();
        acc = (&coeffs[i] + &(&acc * c)).round_out(WORK_BITS);
    }
    out
}

// Coefficients of `h` with `h(z^2) = p(z) p(-z)` up to sign.
fn graeffe(coeffs: &[Interval]) -> Vec<Interval> {
    let n = coeffs.len() - 1;
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = Interval::from_int(0);
        for i in 0..=2 * k {
            let j = 2 * k - i;
            if i > n || j > n {
                continue;
            }
            let term = &coeffs[i] * &coeffs[j];
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        out.push(acc.round_out(WORK_BITS));
    }
    out
}

// Every root `y` of the polynomial satisfies `|y| < t`, using
// `|y| <= 2 max_k |a_(n-k) / a_n|^(1/k)`.
fn fujiwara_below(coeffs: &[Interval], t: &BigRational) -> bool {
    let n = coeffs.len() - 1;
    if n == 0 {
        return true;
    }
    let lead = &coeffs[n];
    if lead.contains_zero() {
        return false;
    }
    let lead_min = lead.abs().lo().clone();
    let half = t / q(2);
    (1..=n).all(|k| {
        let mut bound = coeffs[n - k].magnitude() / &lead_min;
        if k == n {
            bound /= q(2);
        }
        let mut rhs = BigRational::one();
        for _ in 0..k {
            rhs *= &half;
        }
        bound < rhs
    })
}

/// `a + b sqrt(r)` with `r` square-free, or `r = 0` for a rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    pub a: BigRational,
    pub b: BigRational,
    pub radicand: BigInt,
}

impl QuadraticSurd {
    /// `a + b sqrt(n)` with square factors of `n` pulled out.
    pub fn new(a: BigRational, b: BigRational, n: BigInt) -> Self {
        let (outside, inside) = split_square(n);
        let b = b * q(outside);
        if inside.is_one() {
            return QuadraticSurd { a: a + b, b: BigRational::zero(), radicand: BigInt::zero() };
        }
        if inside.is_zero() || b.is_zero() {
            return QuadraticSurd { a, b: BigRational::zero(), radicand: BigInt::zero() };
        }
        QuadraticSurd { a, b, radicand: inside }
    }

    pub fn enclose(&self, bits: u32) -> Interval {
        if self.radicand.is_zero() {
            return Interval::point(self.a.clone());
        }
        let root = Interval::from_int(self.radicand.clone()).sqrt(bits).expect("non-negative radicand");
        &(&root * &self.b) + &self.a
    }

    pub fn render(&self, places: u32) -> String {
        let mut bits = 64 + 4 * places;
        loop {
            if let Some(s) = self.enclose(bits).render(places) {
                return s;
            }
            bits *= 2;
            if bits > 1 << 16 {
                return decimal::render(&self.enclose(bits).mid(), places);
            }
        }
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        let b = self.b.abs();
        if b.is_one() {
            write!(f, "{} {sign} sqrt({})", self.a, self.radicand)
        } else {
            write!(f, "{} {sign} {b} sqrt({})", self.a, self.radicand)
        }
    }
}

// n = outside^2 * inside with inside free of square factors up to the
// trial-division limit.
fn split_square(n: BigInt) -> (BigInt, BigInt) {
    let mut outside = BigInt::one();
    let mut inside = n;
    if inside.is_zero() {
        return (outside, inside);
    }
    let mut f = BigInt::from(2);
    while &f * &f <= inside && f < BigInt::from(1_000_000) {
        let sq = &f * &f;
        while (&inside % &sq).is_zero() {
            inside /= &sq;
            outside *= &f;
        }
        f += 1;
    }
    let r = inside.sqrt();
    if &r * &r == inside {
        outside *= &r;
        inside = BigInt::one();
    }
    (outside, inside)
}

/// Exact limits of a hyperbolic `{p,q}` mosaic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm2d {
    /// `c = (p-2)(q-2) - 2`
    pub c: BigInt,
    /// `(c + sqrt(c^2 - 4)) / 2`
    pub z1: QuadraticSurd,
    /// `(sqrt(c^2 - 4) - (c - 2)) / 2`
    pub density: QuadraticSurd,
}

pub fn closed_form_2d(p: u32, q_: u32) -> Result<ClosedForm2d> {
    if p < 3 || q_ < 3 {
        return Err(Error::Domain(format!("{{{p},{q_}}} needs p, q >= 3")));
    }
    let c = BigInt::from((p - 2) * (q_ - 2)) - BigInt::from(2);
    if c <= BigInt::from(2) {
        return Err(Error::Domain(format!("{{{p},{q_}}} is not hyperbolic (c = {c})")));
    }
    let disc: BigInt = &c * &c - BigInt::from(4);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let z1 = QuadraticSurd::new(q(c.clone()) * &half, half.clone(), disc.clone());
    let density = QuadraticSurd::new(-q(&c - BigInt::from(2)) * &half, half, disc);
    Ok(ClosedForm2d { c, z1, density })
}

/// Coefficients of `i^t z^i` for one distinct root `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenTerm {
    pub root: Interval,
    pub multiplicity: usize,
    /// Coefficients of the polynomial `g(i)`, ascending in `t`.
    pub coeffs: Vec<Interval>,
}

/// `r_i = sum_k g_k(i) z_k^i` for `i >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenDecomposition {
    pub terms: Vec<EigenTerm>,
    /// Index of the dominant root's term.
    pub dominant: usize,
    /// Highest index at which the reconstruction was checked.
    pub verified_to: usize,
}

impl EigenDecomposition {
    /// Leading coefficient of `g_1`, the one that decides the limits.
    pub fn g1(&self) -> &Interval {
        let t = &self.terms[self.dominant];
        &t.coeffs[t.multiplicity - 1]
    }

    /// Sign of `g_1` when certified.
    pub fn g1_sign(&self) -> Option<i8> {
        let g = self.g1();
        if g.is_positive() {
            Some(1)
        } else if g.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    /// Evaluates the decomposition at `i`.
    pub fn eval(&self, i: usize) -> Interval {
        let mut acc = Interval::from_int(0);
        for term in &self.terms {
            let zi = term.root.pow_rounded(i as u32, WORK_BITS);
            let mut it = Interval::from_int(1);
            for c in &term.coeffs {
                acc = (&acc + &(&(c * &it) * &zi)).round_out(WORK_BITS);
                it = &it * &Interval::from_int(i);
            }
        }
        acc.round_out(WORK_BITS)
    }
}

/// Fits `r_1..r_n` (with `r[0]` the belt-0 value, unused) to the basis
/// `i^t z_k^i` and checks the fit on `r_(n+1)..r_(2n)`.
pub fn series_coefficients(r: &[BigInt], result: &SpectralResult) -> Result<EigenDecomposition> {
    let roots = &result.roots;
    if roots.non_real() > 0 {
        return Err(Error::Domain("eigen-decomposition needs all roots real".into()));
    }
    let n = roots.degree();
    if r.len() <= 2 * n {
        return Err(Error::Domain(format!("need at least {} series values, got {}", 2 * n + 1, r.len())));
    }
    let mut refined = roots.clone();
    refined.refine_all_bits(ROOT_BITS);
    let basis: Vec<(Interval, usize)> = refined
        .roots()
        .iter()
        .flat_map(|root| (0..root.multiplicity()).map(move |t| (root.enclosure().clone(), t)))
        .collect();

    let mut a: Vec<Vec<Interval>> = (1..=n)
        .map(|i| {
            basis
                .iter()
                .map(|(z, t)| {
                    (&z.pow_rounded(i as u32, WORK_BITS) * &q(BigInt::from(i).pow(*t as u32))).round_out(WORK_BITS)
                })
                .collect()
        })
        .collect();
    let mut b: Vec<Interval> = (1..=n).map(|i| Interval::from_int(r[i].clone())).collect();
    let x = solve(&mut a, &mut b)?;

    let mut terms = Vec::new();
    let mut idx = 0;
    for root in refined.roots() {
        let m = root.multiplicity();
        terms.push(EigenTerm { root: root.enclosure().clone(), multiplicity: m, coeffs: x[idx..idx + m].to_vec() });
        idx += m;
    }
    let decomposition = EigenDecomposition { terms, dominant: result.dominant, verified_to: 2 * n };
    for (i, value) in r.iter().enumerate().take(2 * n + 1).skip(n + 1) {
        if !decomposition.eval(i).contains(&q(value.clone())) {
            return Err(Error::Invariant(format!("eigen-decomposition does not reproduce r_{i} = {value}")));
        }
    }
    Ok(decomposition)
}

/// [`series_coefficients`] on one coordinate of a belt series.
pub fn decompose(counts: &BeltCounts, result: &SpectralResult) -> Result<EigenDecomposition> {
    series_coefficients(&counts.r, result)
}

// Interval Gaussian elimination with pivots chosen by largest mignitude.
fn solve(a: &mut [Vec<Interval>], b: &mut [Interval]) -> Result<Vec<Interval>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].contains_zero())
            .max_by(|&x, &y| cmp_q(a[x][col].abs().lo(), a[y][col].abs().lo()))
            .ok_or_else(|| Error::Invariant("singular eigen-basis system".into()))?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip().expect("pivot excludes zero");
        for row in col + 1..n {
            let factor = (&a[row][col] * &inv).round_out(WORK_BITS);
            let (upper, lower) = a.split_at_mut(row);
            for (target, pivot) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *target = (&*target - &(pivot * &factor)).round_out(WORK_BITS);
            }
            b[row] = (&b[row] - &(&b[col] * &factor)).round_out(WORK_BITS);
        }
    }
    let mut x = vec![Interval::from_int(0); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for k in row + 1..n {
            acc = &acc - &(&a[row][k] * &x[k]);
        }
        x[row] = acc
            .div(&a[row][row])
            .ok_or_else(|| Error::Invariant("singular eigen-basis system".into()))?
            .round_out(WORK_BITS);
    }
    Ok(x)
}

/// The three hypotheses under which the ratio and density limits hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypothesisReport {
    /// `|z1| > |z_k|` for every other root, non-real ones included.
    pub dominant_strict: bool,
    /// `|z1| > 1`
    pub exceeds_one: bool,
    /// `g_1 != 0`
    pub g1_nonzero: bool,
}

impl HypothesisReport {
    pub fn all_hold(&self) -> bool {
        self.dominant_strict && self.exceeds_one && self.g1_nonzero
    }
}

pub fn hypothesis_check(result: &SpectralResult, decomposition: &EigenDecomposition) -> HypothesisReport {
    HypothesisReport {
        // dominant_root only returns after certifying strict dominance.
        dominant_strict: true,
        exceeds_one: result.z1.abs().lo() > &BigRational::one(),
        g1_nonzero: decomposition.g1_sign().is_some(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::{BeltSeries, Start};
    use crate::incidence::build_k;
    use crate::schlafli::SchlafliSymbol;
    use alloc::string::ToString;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn charpoly_of(e: &[u32]) -> CharPoly {
        let k = build_k(&SchlafliSymbol::new(e.to_vec()).unwrap()).unwrap();
        char_poly(&GrowthMatrix::from_incidence(&k)).unwrap()
    }

    #[test]
    fn char_poly_435() {
        let cp = charpoly_of(&[4, 3, 5]);
        assert_eq!(cp.coefficients(), ints(&[1, -32, 62, -32, 1]));
        assert_eq!(cp.beta(), ints(&[32, -62, 32, -1]).as_slice());
        // (z^2 - 30z + 1)(z - 1)^2
        let expected = &Poly::from_ints([1, -30, 1]) * &(&Poly::from_ints([-1, 1]) * &Poly::from_ints([-1, 1]));
        assert_eq!(cp.poly(), &expected);
    }

    #[test]
    fn char_poly_planar_factor() {
        for (p, q_) in [(4u32, 5u32), (3, 7), (5, 5)] {
            let cp = charpoly_of(&[p, q_]);
            let c = ((p - 2) * (q_ - 2)) as i64 - 2;
            let (_, rem) = cp.poly().div_rem(&Poly::from_ints([1, -c, 1]));
            assert!(rem.is_zero(), "{{{p},{q_}}}");
        }
    }

    #[test]
    fn singular_rejected() {
        assert!(CharPoly::from_monic(&ints(&[0, -1, 1])).is_err());
        assert!(CharPoly::from_monic(&ints(&[1, 2])).is_err());
    }

    #[test]
    fn dominant_435() {
        let r = dominant_root(&charpoly_of(&[4, 3, 5]), 4).unwrap();
        assert_eq!(r.z1_decimal, "29.9666");
        assert_eq!(r.density_decimal, "0.9666");
        assert_eq!(r.z1_multiplicity(), 1);
        assert!(!r.polynomial_growth);
    }

    #[test]
    fn dominant_5335() {
        let r = dominant_root(&charpoly_of(&[5, 3, 3, 5]), 4).unwrap();
        assert_eq!(r.z1_decimal, "319483.2496");
        let r6 = dominant_root(&charpoly_of(&[5, 3, 3, 5]), 6).unwrap();
        assert_eq!(r6.density_decimal, "0.999997");
    }

    #[test]
    fn euclidean_growth_is_polynomial() {
        let r = dominant_root(&charpoly_of(&[4, 4]), 4).unwrap();
        assert!(r.polynomial_growth);
        assert_eq!(r.z1_decimal, "1.0000");
    }

    #[test]
    fn complex_roots_certified_below() {
        // (z - 3)(z^2 + 2z + 5): complex pair of modulus sqrt(5)
        let p = &Poly::from_ints([-3, 1]) * &Poly::from_ints([5, 2, 1]);
        let cp = CharPoly::from_monic(&p.to_integers().unwrap()).unwrap();
        let r = dominant_root(&cp, 6).unwrap();
        assert_eq!(r.z1_decimal, "3.000000");
        assert_eq!(r.roots.non_real(), 2);
    }

    #[test]
    fn modulus_tie_is_ambiguous() {
        // (z - 2)(z^2 + 4)
        let p = &Poly::from_ints([-2, 1]) * &Poly::from_ints([4, 0, 1]);
        let cp = CharPoly::from_monic(&p.to_integers().unwrap()).unwrap();
        assert!(matches!(dominant_root(&cp, 4), Err(Error::Ambiguous(_))));
        // (z - 2)(z + 2)
        let cp = CharPoly::from_monic(&ints(&[-4, 0, 1])).unwrap();
        assert!(matches!(dominant_root(&cp, 4), Err(Error::Ambiguous(_))));
    }

    #[test]
    fn closed_forms() {
        let f = closed_form_2d(4, 5).unwrap();
        assert_eq!(f.c, BigInt::from(4));
        assert_eq!(f.z1.radicand, BigInt::from(3));
        assert_eq!(f.z1.render(4), "3.7321");
        assert_eq!(f.z1.to_string(), "2 + sqrt(3)");
        let g = closed_form_2d(7, 3).unwrap();
        assert_eq!(g.z1.render(4), "2.6180");
        assert!(matches!(closed_form_2d(6, 3), Err(Error::Domain(_))));
        assert!(matches!(closed_form_2d(3, 5), Err(Error::Domain(_))));
    }

    #[test]
    fn surd_simplification() {
        let s = QuadraticSurd::new(q(0), q(1), BigInt::from(72));
        assert_eq!((s.b.clone(), s.radicand.clone()), (q(6), BigInt::from(2)));
        let t = QuadraticSurd::new(q(1), q(1), BigInt::from(49));
        assert_eq!(t.a, q(8));
        assert!(t.radicand.is_zero());
    }

    #[test]
    fn recurrence_holds() {
        let k = build_k(&SchlafliSymbol::new(vec![4, 3, 5]).unwrap()).unwrap();
        let gm = GrowthMatrix::from_incidence(&k);
        let cp = char_poly(&gm).unwrap();
        let counts = BeltSeries::compute(&k, &gm, Start::Cell, 20).unwrap().counts(3).unwrap();
        assert_eq!(cp.check_recurrence(&counts.s, 0), Ok(()));
        assert_eq!(cp.check_recurrence(&counts.r, 5), Ok(()));
        let mut broken = counts.s.clone();
        broken[10] += 1;
        assert_eq!(cp.check_recurrence(&broken, 0), Err(10));
    }

    #[test]
    fn geometric_series_decomposes_trivially() {
        // (z - 2)(z - 3) with r_i = 3^i
        let cp = CharPoly::from_monic(&ints(&[6, -5, 1])).unwrap();
        let result = dominant_root(&cp, 4).unwrap();
        let r: Vec<BigInt> = (0..8u32).map(|i| BigInt::from(3).pow(i)).collect();
        let d = series_coefficients(&r, &result).unwrap();
        assert!(d.g1().contains(&q(1)));
        assert!(d.terms[0].coeffs[0].contains(&q(0)));
        assert_eq!(d.g1_sign(), Some(1));
    }

    #[test]
    fn g1_435_vertex_start() {
        let k = build_k(&SchlafliSymbol::new(vec![4, 3, 5]).unwrap()).unwrap();
        let gm = GrowthMatrix::from_incidence(&k);
        let result = dominant_root(&char_poly(&gm).unwrap(), 10).unwrap();
        let counts = BeltSeries::compute(&k, &gm, Start::Vertex, 10).unwrap().counts(3).unwrap();
        let d = decompose(&counts, &result).unwrap();
        assert_eq!(decimal::render(&d.g1().mid(), 4), "0.8304");
        let report = hypothesis_check(&result, &d);
        assert!(report.all_hold());
    }
}
