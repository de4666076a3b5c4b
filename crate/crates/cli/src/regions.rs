use std::io::Write;
use std::str::FromStr;

use rug::Float;

use explicit_zeta::report::{confirm, REPORT_DIGITS};
use explicit_zeta::zfr::regions::STANDARD_CATALOG;
use explicit_zeta::zfr::{crossovers, parse_catalog, region_width, RegionSpec};
use explicit_zeta::{CheckItem, DirectedReal as DR};

use crate::{error_item, read_file, CliError, Report, RunConfig};

/// Geometric grid in `log t`, written `lo:hi:points`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogGrid {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl Default for LogGrid {
    fn default() -> Self {
        LogGrid {
            lo: 10.0,
            hi: 1e6,
            points: 121,
        }
    }
}

impl FromStr for LogGrid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let [lo, hi, n] = parts[..] else {
            return Err(format!("expected lo:hi:points, got `{s}`"));
        };
        let lo: f64 = lo.parse().map_err(|_| format!("bad lower end `{lo}`"))?;
        let hi: f64 = hi.parse().map_err(|_| format!("bad upper end `{hi}`"))?;
        let points: usize = n.parse().map_err(|_| format!("bad point count `{n}`"))?;
        if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && hi >= lo) {
            return Err("need 0 < lo <= hi".into());
        }
        if points == 0 || (points == 1 && hi != lo) {
            return Err("need at least two points unless lo = hi".into());
        }
        Ok(LogGrid { lo, hi, points })
    }
}

impl LogGrid {
    pub fn values(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.lo];
        }
        let r = (self.hi / self.lo).ln();
        (0..self.points)
            .map(|i| {
                if i + 1 == self.points {
                    self.hi
                } else {
                    self.lo * (r * i as f64 / (self.points - 1) as f64).exp()
                }
            })
            .collect()
    }
}

pub struct RegionRow {
    pub log_t: f64,
    /// One entry per catalog region; `None` below its range of validity.
    pub widths: Vec<Option<DR>>,
    pub best: Option<String>,
    /// Whether the best width is certainly larger than all others.
    pub certified: bool,
}

pub struct RegionTable {
    pub names: Vec<String>,
    pub rows: Vec<RegionRow>,
}

impl RegionTable {
    pub fn header(&self) -> Vec<String> {
        let mut h = vec!["log_t".to_string()];
        for n in &self.names {
            h.push(format!("width_{n}"));
            h.push(format!("width_{n}_lo"));
            h.push(format!("width_{n}_hi"));
        }
        h.push("best".into());
        h
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), CliError> {
        let mut out = csv::Writer::from_writer(w);
        let io = |e: csv::Error| CliError::Usage(format!("writing CSV: {e}"));
        out.write_record(self.header()).map_err(io)?;
        for row in &self.rows {
            let mut rec = vec![format!("{}", row.log_t)];
            for w in &row.widths {
                match w {
                    Some(v) => {
                        rec.push(format!("{}", v.mid_f64()));
                        rec.push(v.lo_string(REPORT_DIGITS));
                        rec.push(v.hi_string(REPORT_DIGITS));
                    }
                    None => rec.extend([String::new(), String::new(), String::new()]),
                }
            }
            rec.push(row.best.clone().unwrap_or_default());
            out.write_record(&rec).map_err(io)?;
        }
        out.flush().map_err(|e| CliError::Usage(format!("writing CSV: {e}")))?;
        Ok(())
    }

    pub fn render(&self) -> String {
        let mut s = String::from("log t        best\n");
        for row in &self.rows {
            let mark = if row.certified { "" } else { " (not separated)" };
            s.push_str(&format!(
                "{:<12} {}{}\n",
                row.log_t,
                row.best.as_deref().unwrap_or("-"),
                mark
            ));
        }
        s
    }
}

/// Published crossing heights, in `log t`, checked when both regions are present.
const KNOWN_CROSSINGS: [(&str, &str, &str, &str); 2] = [("new", "ford", "169.8", "170.8"), ("new", "vk", "530141", "534141")];

fn crossover_items(regions: &[RegionSpec], grid: &LogGrid, p: u32) -> Vec<CheckItem> {
    let lo = Float::with_val(p, grid.lo);
    let hi = Float::with_val(p, grid.hi);
    let mut items = Vec::new();
    for (i, a) in regions.iter().enumerate() {
        for b in &regions[i + 1..] {
            let name = format!("crossover {}/{}", a.name, b.name);
            let found = match crossovers(a, b, &lo, &hi, p) {
                Ok(v) => v,
                Err(e) => {
                    items.push(error_item(&name, &e));
                    continue;
                }
            };
            let known = KNOWN_CROSSINGS
                .iter()
                .find(|k| (k.0 == a.name && k.1 == b.name) || (k.0 == b.name && k.1 == a.name));
            let window = known.and_then(|&(_, _, klo, khi)| {
                let (l, h): (f64, f64) = (klo.parse().ok()?, khi.parse().ok()?);
                (grid.lo <= l && h <= grid.hi).then_some((klo, khi, l, h))
            });
            let mut rest = found.clone();
            if let Some((klo, khi, l, h)) = window {
                let (inside, outside): (Vec<DR>, Vec<DR>) =
                    found.into_iter().partition(|x| x.hi_f64() >= l && x.lo_f64() <= h);
                if inside.len() == 1 {
                    items.push(CheckItem::within(&name, &inside[0], klo, khi));
                } else {
                    items.push(CheckItem::holds(
                        &name,
                        &format!("one crossing in [{klo}, {khi}], found {}", inside.len()),
                        &DR::entire(p),
                        false,
                    ));
                }
                rest = outside;
            }
            for (j, x) in rest.iter().enumerate() {
                items.push(CheckItem::holds(&format!("{name} #{}", j + 1), "sign change of the widths", x, true));
            }
        }
    }
    items
}

fn region_row(regions: &[RegionSpec], log_t: f64, p: u32) -> RegionRow {
    let x = DR::from_f64(log_t, p);
    let widths: Vec<Option<DR>> = regions.iter().map(|r| region_width(r, &x).ok()).collect();
    let mut best: Option<usize> = None;
    for (i, w) in widths.iter().enumerate() {
        if let Some(w) = w {
            if best.is_none_or(|b| w.mid_f64() > widths[b].as_ref().unwrap().mid_f64()) {
                best = Some(i);
            }
        }
    }
    let certified = best.is_some_and(|b| {
        let wb = widths[b].as_ref().unwrap();
        widths
            .iter()
            .enumerate()
            .all(|(i, w)| i == b || w.as_ref().is_none_or(|w| wb.certainly_gt(w)))
    });
    RegionRow {
        log_t,
        widths,
        best: best.map(|b| regions[b].name.clone()),
        certified,
    }
}

pub fn load_catalog(cfg: &RunConfig) -> Result<Vec<RegionSpec>, CliError> {
    let (src, origin) = match &cfg.region_catalog_path {
        Some(path) => (read_file(path)?, path.display().to_string()),
        None => (STANDARD_CATALOG.to_string(), "standard catalog".to_string()),
    };
    let regions = parse_catalog(&src).map_err(|e| CliError::Usage(format!("{origin}: {e}")))?;
    if regions.is_empty() {
        return Err(CliError::Usage(format!("{origin}: no regions")));
    }
    Ok(regions)
}

/// Widths of every catalog region along `grid`, the best one at each height,
/// and all pairwise crossings inside the grid's range.
pub fn cmd_regions(cfg: &RunConfig, grid: &LogGrid) -> Result<(Report, RegionTable), CliError> {
    let regions = load_catalog(cfg)?;
    let p = cfg.precision_bits;
    let mut items = crossover_items(&regions, grid, p);
    if cfg.confirm_bits != p {
        items = confirm(items, &crossover_items(&regions, grid, cfg.confirm_bits));
    }
    let table = RegionTable {
        names: regions.iter().map(|r| r.name.clone()).collect(),
        rows: grid.values().into_iter().map(|x| region_row(&regions, x, p)).collect(),
    };
    Ok((Report::new("regions", cfg, items), table))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g: LogGrid = "10:1000:3".parse().unwrap();
        let v = g.values();
        assert_eq!(v.len(), 3);
        assert!((v[1] - 100.0).abs() < 1e-9);
        assert_eq!(v[2], 1000.0);
        assert_eq!("300:300:1".parse::<LogGrid>().unwrap().values(), vec![300.0]);
        assert!("1:2".parse::<LogGrid>().is_err());
        assert!("5:1:4".parse::<LogGrid>().is_err());
        assert!("1:5:1".parse::<LogGrid>().is_err());
    }

    #[test]
    fn best_region_at_300() {
        let cfg = RunConfig::default();
        let regions = load_catalog(&cfg).unwrap();
        let row = region_row(&regions, 300.0, 128);
        assert_eq!(row.best.as_deref(), Some("new"));
        assert!(row.certified);
    }

    #[test]
    fn widths_below_validity_are_blank() {
        let cfg = RunConfig::default();
        let regions = load_catalog(&cfg).unwrap();
        let row = region_row(&regions, 0.9, 128);
        assert!(row.widths[0].is_some());
        assert!(row.widths[1..].iter().all(Option::is_none));
    }
}
