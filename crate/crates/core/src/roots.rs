//! Certified isolation of real polynomial roots.
//!
//! The input is split into square-free factors (Yun); each factor's real
//! roots are isolated by Sturm sign-variation counting and bisection, so every
//! enclosure holds exactly one distinct root and knows its multiplicity.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::interval::{cmp_q, Interval};
use crate::poly::Poly;

/// One distinct real root with its enclosure and multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRoot {
    enclosure: Interval,
    multiplicity: usize,
    // Square-free factor with this root simple; endpoints of a non-point
    // enclosure are never roots of it and have opposite signs.
    factor: Poly,
}

impl RealRoot {
    pub fn enclosure(&self) -> &Interval {
        &self.enclosure
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// Whether the enclosure has collapsed onto an exact rational root.
    pub fn is_exact(&self) -> bool {
        self.enclosure.is_point()
    }

    /// Bisects until the enclosure is no wider than `width`.
    pub fn refine(&mut self, width: &BigRational) {
        while !self.enclosure.is_point() && cmp_q(&self.enclosure.width(), width) == Ordering::Greater {
            self.bisect();
        }
    }

    /// Refines until the enclosure width is at most `2^-bits`.
    pub fn refine_bits(&mut self, bits: u32) {
        let w = BigRational::new(BigInt::one(), BigInt::one() << bits);
        self.refine(&w);
    }

    fn bisect(&mut self) {
        let lo = self.enclosure.lo().clone();
        let hi = self.enclosure.hi().clone();
        let mid = self.enclosure.mid();
        let s_mid = self.factor.sign_at(&mid);
        if s_mid == 0 {
            self.enclosure = Interval::point(mid);
            return;
        }
        let s_lo = self.factor.sign_at(&lo);
        self.enclosure = if s_lo == s_mid { Interval::new(mid, hi) } else { Interval::new(lo, mid) };
    }
}

/// All real roots of a polynomial, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    roots: Vec<RealRoot>,
    degree: usize,
}

impl RootSet {
    pub fn roots(&self) -> &[RealRoot] {
        &self.roots
    }

    pub fn roots_mut(&mut self) -> &mut [RealRoot] {
        &mut self.roots
    }

    /// Number of distinct real roots.
    pub fn distinct(&self) -> usize {
        self.roots.len()
    }

    /// Degree of the polynomial the roots belong to.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Roots off the real line, counted with multiplicity.
    pub fn non_real(&self) -> usize {
        self.degree - self.roots.iter().map(|r| r.multiplicity).sum::<usize>()
    }

    pub fn refine_all(&mut self, width: &BigRational) {
        for r in &mut self.roots {
            r.refine(width);
        }
    }

    pub fn refine_all_bits(&mut self, bits: u32) {
        for r in &mut self.roots {
            r.refine_bits(bits);
        }
    }
}

fn sign_variations(seq: &[Poly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in seq {
        let s = p.sign_at(x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

// Roots of a square-free `f` in the open interval (a, b); neither endpoint
// is a root.
fn isolate_in(f: &Poly, sturm: &[Poly], a: BigRational, b: BigRational, va: usize, vb: usize, out: &mut Vec<Interval>) {
    let count = va - vb;
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(Interval::new(a, b));
        return;
    }
    let mid = split_point(f, &a, &b);
    let vm = sign_variations(sturm, &mid);
    isolate_in(f, sturm, a, mid.clone(), va, vm, out);
    isolate_in(f, sturm, mid, b, vm, vb, out);
}

// The midpoint, or failing that the first a + (b - a) * k / den that is not
// a root of f.
fn split_point(f: &Poly, a: &BigRational, b: &BigRational) -> BigRational {
    let width = b - a;
    let mut den = 2i64;
    loop {
        for num in 1..den {
            let t = BigRational::new(BigInt::from(num), BigInt::from(den));
            let x = a + &width * t;
            if f.sign_at(&x) != 0 {
                return x;
            }
        }
        den += 1;
    }
}

/// Isolates the real roots of a square-free polynomial. Enclosures come back
/// ascending and pairwise disjoint.
pub fn isolate_square_free(f: &Poly) -> Vec<Interval> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let sturm = f.sturm_sequence();
    let bound = f.root_bound();
    let a = -bound.clone();
    let b = bound;
    let va = sign_variations(&sturm, &a);
    let vb = sign_variations(&sturm, &b);
    isolate_in(f, &sturm, a, b, va, vb, &mut out);
    out
}

/// Real roots of `p` with multiplicities. `p` must be non-zero.
pub fn isolate_real_roots(p: &Poly) -> RootSet {
    let degree = p.degree().expect("root isolation of the zero polynomial");
    let mut roots: Vec<RealRoot> = Vec::new();
    for (factor, multiplicity) in p.square_free_decomposition() {
        if factor.degree() == Some(1) {
            let root = -factor.coeff(0) / factor.coeff(1);
            roots.push(RealRoot { enclosure: Interval::point(root), multiplicity, factor });
            continue;
        }
        for enclosure in isolate_square_free(&factor) {
            roots.push(RealRoot { enclosure, multiplicity, factor: factor.clone() });
        }
    }
    separate(&mut roots);
    RootSet { roots, degree }
}

// Roots from different square-free factors are distinct but their initial
// enclosures may overlap; refine until pairwise disjoint, then sort.
fn separate(roots: &mut [RealRoot]) {
    loop {
        let mut clash = None;
        'outer: for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                if roots[i].enclosure.intersects(&roots[j].enclosure) {
                    clash = Some((i, j));
                    break 'outer;
                }
            }
        }
        match clash {
            None => break,
            Some((i, j)) => {
                roots[i].bisect();
                roots[j].bisect();
            }
        }
    }
    roots.sort_by(|x, y| cmp_q(x.enclosure.lo(), y.enclosure.lo()));
}
