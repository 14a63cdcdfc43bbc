//! Growth and density limits of the nine bounded-cell hyperbolic mosaics,
//! beside the published four-to-six decimal values.

use std::fmt::Write as _;

use mosaic_core::decimal;
use mosaic_core::verify::Analysis;
use mosaic_core::{Result, SchlafliSymbol};
use serde::{Deserialize, Serialize};

/// `(symbols, ratio limit, density limit)` as printed.
pub const PUBLISHED: [(&[&str], &str, &str); 6] = [
    (&["{4,3,5}", "{5,3,4}"], "29.9666", "0.9666"),
    (&["{3,5,3}"], "46.9787", "0.9787"),
    (&["{5,3,5}"], "166.9940", "0.9940"),
    (&["{3,3,3,5}", "{5,3,3,3}"], "84.0381", "0.9881"),
    (&["{4,3,3,5}", "{5,3,3,4}"], "2381.8277", "0.9996"),
    (&["{5,3,3,5}"], "319483.2496", "0.999997"),
];

fn places(printed: &str) -> u32 {
    printed.split('.').nth(1).map_or(0, |f| f.len() as u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Entry {
    pub symbol: String,
    pub ratio: String,
    pub density: String,
    /// Computed values rounded to the printed number of decimals.
    pub ratio_rounded: String,
    pub density_rounded: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub entries: Vec<Table1Entry>,
    pub published_ratio: String,
    pub published_density: String,
    pub matches: bool,
}

pub fn compute_table1(precision: u32) -> Result<Vec<Table1Row>> {
    PUBLISHED
        .iter()
        .map(|(symbols, ratio, density)| {
            let entries = symbols
                .iter()
                .map(|s| {
                    let a = Analysis::new(&SchlafliSymbol::parse(s)?, precision)?;
                    let sp = &a.spectral;
                    let z1 = round_settled(&a, places(ratio), false);
                    let dens = round_settled(&a, places(density), true);
                    Ok(Table1Entry {
                        symbol: s.to_string(),
                        ratio: sp.z1_decimal.clone(),
                        density: sp.density_decimal.clone(),
                        ratio_rounded: z1,
                        density_rounded: dens,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let matches = entries.iter().all(|e| e.ratio_rounded == *ratio && e.density_rounded == *density);
            Ok(Table1Row {
                entries,
                published_ratio: ratio.to_string(),
                published_density: density.to_string(),
                matches,
            })
        })
        .collect()
}

// Rounds z1 or (z1 - 1) / z1 to `places` decimals from a refined enclosure.
fn round_settled(a: &Analysis, places: u32, density: bool) -> String {
    let mut bits = 64;
    loop {
        let z1 = a.z1_refined(bits);
        let value = if density { &mosaic_core::Interval::from_int(1) - &z1.recip().expect("z1 > 0") } else { z1 };
        if let Some(s) = value.render(places) {
            return s;
        }
        if bits > 4096 {
            return decimal::render(&value.mid(), places);
        }
        bits *= 2;
    }
}

pub fn render_table1(rows: &[Table1Row]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<22} {:>20} {:>14} {:>16} {:>10}  match",
        "mosaic", "ratio limit", "published", "density limit", "published"
    );
    for row in rows {
        let names: Vec<&str> = row.entries.iter().map(|e| e.symbol.as_str()).collect();
        let first = &row.entries[0];
        let _ = writeln!(
            out,
            "{:<22} {:>20} {:>14} {:>16} {:>10}  {}",
            names.join(", "),
            first.ratio,
            row.published_ratio,
            first.density,
            row.published_density,
            if row.matches { "yes" } else { "NO" }
        );
    }
    out
}
