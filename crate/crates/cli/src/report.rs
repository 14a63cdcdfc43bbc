//! The full report of one `compute` run and its text, JSON and CSV forms.

use std::fmt::Write as _;

use mosaic_core::decimal;
use mosaic_core::growth::Start;
use mosaic_core::roots::RealRoot;
use mosaic_core::spectral::{decompose, hypothesis_check};
use mosaic_core::verify::{verify_mosaic, Analysis};
use mosaic_core::{Error, IntMatrix, Result, SchlafliSymbol};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

pub const DEFAULT_BELTS: usize = 30;
pub const DEFAULT_PRECISION: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub symbol: String,
    pub classification: String,
    pub dimension: usize,
    pub start: String,
    /// Coordinate of the scalar series `r_i`, `s_i` (the cell count).
    pub coordinate: usize,
    /// Digits after the decimal point in every decimal field.
    pub precision: u32,
    #[serde(rename = "K")]
    pub k: Vec<Vec<i64>>,
    #[serde(rename = "G")]
    pub g: Vec<Vec<i64>>,
    #[serde(rename = "M")]
    pub m: Vec<Vec<i64>>,
    pub belts: Vec<BeltRow>,
    pub char_poly: CharPolyReport,
    pub roots: Vec<RootReport>,
    pub non_real_roots: usize,
    pub z1: String,
    pub ratio_limit: String,
    pub density_limit: String,
    pub polynomial_growth: bool,
    pub hypotheses: Option<HypothesesReport>,
    pub checks: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

/// One belt: counts new in belt `i` for every face dimension, ball size and
/// the two ratios. Big integers travel as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeltRow {
    pub i: usize,
    pub counts: Vec<String>,
    pub s: String,
    /// `r_i / r_(i-1)`
    pub ratio: Option<String>,
    /// `r_i / s_i`
    pub density: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPolyReport {
    /// Ascending by degree, monic.
    pub coefficients: Vec<String>,
    /// `z^n = beta_1 z^(n-1) + ... + beta_n`
    pub beta: Vec<String>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootReport {
    pub value: String,
    pub multiplicity: usize,
    pub dominant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesesReport {
    pub dominant_strict: bool,
    pub exceeds_one: bool,
    pub g1_nonzero: bool,
    pub g1: String,
    pub all_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub version: String,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComputeOptions {
    pub belts: usize,
    pub start: Start,
    pub precision: u32,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions { belts: DEFAULT_BELTS, start: Start::Cell, precision: DEFAULT_PRECISION }
    }
}

fn small_matrix(m: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    m.rows()
        .map(|row| {
            row.iter()
                .map(|x| x.to_i64().ok_or_else(|| Error::Invariant(format!("matrix entry {x} exceeds 64 bits"))))
                .collect()
        })
        .collect()
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Decimal form of a root, refined until its rendering is settled.
pub fn render_root(root: &RealRoot, places: u32) -> String {
    let mut root = root.clone();
    let mut bits = 16 + 4 * places;
    loop {
        root.refine_bits(bits);
        if let Some(s) = root.enclosure().render(places) {
            return s;
        }
        if bits > 4096 {
            return decimal::render(&root.enclosure().mid(), places);
        }
        bits *= 2;
    }
}

pub fn build_report(symbol: &SchlafliSymbol, options: ComputeOptions) -> Result<Report> {
    let a = Analysis::new(symbol, options.precision)?;
    let d = symbol.dim();
    let places = options.precision;
    let series = a.series(options.start, options.belts)?;
    let counts = series.counts(d)?;
    let belts = (0..=options.belts)
        .map(|i| BeltRow {
            i,
            counts: strings(&series.v[i]),
            s: counts.s[i].to_string(),
            ratio: i.checked_sub(1).and_then(|j| counts.ratio(j)).map(|x| decimal::render(&x, places)),
            density: counts.density(i).map(|x| decimal::render(&x, places)),
        })
        .collect();

    let spectral = &a.spectral;
    let roots = spectral
        .roots
        .roots()
        .iter()
        .enumerate()
        .map(|(k, r)| RootReport {
            value: render_root(r, places),
            multiplicity: r.multiplicity(),
            dominant: k == spectral.dominant,
        })
        .collect();

    let n = a.char_poly.degree();
    let hypotheses =
        a.series(options.start, 2 * n + 1).and_then(|s| s.counts(d)).and_then(|c| decompose(&c, spectral)).ok().map(
            |dec| {
                let h = hypothesis_check(spectral, &dec);
                HypothesesReport {
                    dominant_strict: h.dominant_strict,
                    exceeds_one: h.exceeds_one,
                    g1_nonzero: h.g1_nonzero,
                    g1: decimal::render(&dec.g1().mid(), places),
                    all_hold: h.all_hold(),
                }
            },
        );

    let checks = verify_mosaic(symbol)?
        .checks
        .into_iter()
        .map(|c| CheckReport { name: c.name, passed: c.passed, detail: c.detail })
        .collect();

    Ok(Report {
        symbol: symbol.to_string(),
        classification: a.class.name().to_string(),
        dimension: d,
        start: options.start.to_string(),
        coordinate: d,
        precision: places,
        k: small_matrix(a.k.matrix())?,
        g: small_matrix(a.growth.g())?,
        m: small_matrix(a.growth.m())?,
        belts,
        char_poly: CharPolyReport {
            coefficients: strings(&a.char_poly.coefficients()),
            beta: strings(a.char_poly.beta()),
            text: a.char_poly.to_string(),
        },
        roots,
        non_real_roots: spectral.roots.non_real(),
        z1: spectral.z1_decimal.clone(),
        ratio_limit: spectral.z1_decimal.clone(),
        density_limit: spectral.density_decimal.clone(),
        polynomial_growth: spectral.polynomial_growth,
        hypotheses,
        checks,
        metadata: None,
    })
}

impl Report {
    pub fn checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// The belt table only: `i, b0..bd, s, ratio, density`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["i".to_string()];
        header.extend((0..=self.dimension).map(|y| format!("b{y}")));
        header.extend(["s", "ratio", "density"].map(String::from));
        w.write_record(&header).expect("in-memory write");
        for row in &self.belts {
            let mut rec = vec![row.i.to_string()];
            rec.extend(row.counts.iter().cloned());
            rec.push(row.s.clone());
            rec.push(row.ratio.clone().unwrap_or_default());
            rec.push(row.density.clone().unwrap_or_default());
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "mosaic        {}  ({}, d = {})", self.symbol, self.classification, self.dimension);
        let _ = writeln!(out, "start         {}", self.start);
        for (name, m) in [("K", &self.k), ("G", &self.g), ("M", &self.m)] {
            let _ = writeln!(out, "{name}");
            out.push_str(&matrix_text(m));
        }
        let _ = writeln!(out, "char poly     {}", self.char_poly.text);
        for r in &self.roots {
            let mark = if r.dominant { "  <- z1" } else { "" };
            let _ = writeln!(out, "  root {}  (multiplicity {}){mark}", r.value, r.multiplicity);
        }
        if self.non_real_roots > 0 {
            let _ = writeln!(out, "  {} non-real roots", self.non_real_roots);
        }
        let _ = writeln!(out, "z1            {}", self.z1);
        let _ = writeln!(out, "ratio limit   {}", self.ratio_limit);
        let _ = writeln!(out, "density limit {}", self.density_limit);
        if self.polynomial_growth {
            let _ = writeln!(out, "growth        polynomial (z1 = 1)");
        }
        if let Some(h) = &self.hypotheses {
            let _ = writeln!(
                out,
                "hypotheses    |z1| > |zk|: {}  |z1| > 1: {}  g1 != 0: {}  (g1 = {})",
                h.dominant_strict, h.exceeds_one, h.g1_nonzero, h.g1
            );
        }
        let _ = writeln!(out);
        out.push_str(&belt_table_text(self));
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let _ = writeln!(out);
        let _ = writeln!(out, "checks        {} run, {failed} failed", self.checks.len());
        for c in self.checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(out, "  FAIL {}  {}", c.name, c.detail);
        }
        if let Some(meta) = &self.metadata {
            let _ = writeln!(out, "elapsed       {} ms (mosaic {})", meta.elapsed_ms, meta.version);
        }
        out
    }
}

fn matrix_text(m: &[Vec<i64>]) -> String {
    let width = m.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for row in m {
        out.push_str("  ");
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn belt_table_text(r: &Report) -> String {
    let mut header = vec!["i".to_string()];
    header.extend((0..=r.dimension).map(|y| format!("b{y}")));
    header.extend(["s", "ratio", "density"].map(String::from));
    let rows: Vec<Vec<String>> = r
        .belts
        .iter()
        .map(|b| {
            let mut row = vec![b.i.to_string()];
            row.extend(b.counts.iter().cloned());
            row.push(b.s.clone());
            row.push(b.ratio.clone().unwrap_or_else(|| "-".into()));
            row.push(b.density.clone().unwrap_or_else(|| "-".into()));
            row
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|row| row[c].len()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(x, w)| format!("{x:>w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
