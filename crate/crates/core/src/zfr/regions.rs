//! Published zero-free regions `sigma > 1 - w(t)` and where they cross.
//! Heights are handled through `log t`, since the interesting ones overflow.

use rug::Float;

use crate::error::{domain, usage, Result};
use crate::numerics::{bisect_root, DirectedReal as DR};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionFormula {
    /// `1 / (c log t)`
    Classical,
    /// `(a - b/(J + c)) / (J + d + e log log t)` with `J = log t / 6 + log log t + log j`,
    /// parameters in the order `a, b, c, d, e, j`.
    FordType,
    /// `1 / (c (log t)^(2/3) (log log t)^(1/3))`
    VinogradovKorobov,
    /// `log log t / (c log t)`
    Littlewood,
}

impl RegionFormula {
    pub fn id(self) -> &'static str {
        match self {
            RegionFormula::Classical => "classical",
            RegionFormula::FordType => "ford-type",
            RegionFormula::VinogradovKorobov => "vinogradov-korobov",
            RegionFormula::Littlewood => "littlewood",
        }
    }

    pub fn from_id(s: &str) -> Option<Self> {
        [
            RegionFormula::Classical,
            RegionFormula::FordType,
            RegionFormula::VinogradovKorobov,
            RegionFormula::Littlewood,
        ]
        .into_iter()
        .find(|f| f.id() == s)
    }

    pub fn arity(self) -> usize {
        match self {
            RegionFormula::FordType => 6,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegionSpec {
    pub name: String,
    pub formula: RegionFormula,
    /// Decimal parameters, kept as text so they can be read at any precision.
    pub params: Vec<String>,
    /// Smallest `t` for which the region is claimed.
    pub valid_from: String,
}

impl RegionSpec {
    pub fn new(name: &str, formula: RegionFormula, params: &[&str], valid_from: &str) -> Self {
        RegionSpec {
            name: name.to_string(),
            formula,
            params: params.iter().map(|s| s.to_string()).collect(),
            valid_from: valid_from.to_string(),
        }
    }

    pub fn log_valid_from(&self, p: u32) -> DR {
        DR::lit(&self.valid_from, p).ln()
    }
}

pub fn standard_regions() -> Vec<RegionSpec> {
    vec![
        RegionSpec::new("classical", RegionFormula::Classical, &["5.558691"], "2"),
        RegionSpec::new(
            "ford",
            RegionFormula::FordType,
            &["0.04962", "0.0196", "1.15", "0.685", "0.155", "0.618"],
            "3",
        ),
        RegionSpec::new("vk", RegionFormula::VinogradovKorobov, &["55.241"], "3"),
        RegionSpec::new("new", RegionFormula::Littlewood, &["21.233"], "3"),
    ]
}

/// The catalog read by [`parse_catalog`] for the standard regions.
pub const STANDARD_CATALOG: &str = "\
# name, formula, parameters..., valid_from
classical, classical, 5.558691, 2
ford, ford-type, 0.04962, 0.0196, 1.15, 0.685, 0.155, 0.618, 3
vk, vinogradov-korobov, 55.241, 3
new, littlewood, 21.233, 3
";

/// Width `w(t)` of the region at height `t`, given `log t`.
pub fn region_width(r: &RegionSpec, log_t: &DR) -> Result<DR> {
    let p = log_t.precision();
    if !log_t.certainly_ge(&r.log_valid_from(p)) {
        return Err(domain(format!("{} needs t >= {}", r.name, r.valid_from)));
    }
    if r.params.len() != r.formula.arity() {
        return Err(usage(format!("{}: expected {} parameters", r.name, r.formula.arity())));
    }
    let q: Vec<DR> = r
        .params
        .iter()
        .map(|s| DR::decimal(s, p))
        .collect::<Result<_>>()?;
    let ll = log_t.ln();
    Ok(match r.formula {
        RegionFormula::Classical => (&q[0] * log_t).recip(),
        RegionFormula::FordType => {
            let j = log_t / 6 + &ll + q[5].ln();
            (&q[0] - &q[1] / (&j + &q[2])) / (&j + &q[3] + &q[4] * &ll)
        }
        RegionFormula::VinogradovKorobov => (&q[0] * log_t.pow_ratio(2, 3) * ll.pow_ratio(1, 3)).recip(),
        RegionFormula::Littlewood => ll / (&q[0] * log_t),
    })
}

/// Enclosures, in `log t`, of the points where `w_a - w_b` changes sign on
/// `[log_lo, log_hi]`. The range is clipped to where both regions are valid
/// and scanned on a geometric grid before bisecting each bracket.
pub fn crossovers(a: &RegionSpec, b: &RegionSpec, log_lo: &Float, log_hi: &Float, prec: u32) -> Result<Vec<DR>> {
    let p = prec;
    let start = [a.log_valid_from(p).hi().clone(), b.log_valid_from(p).hi().clone(), Float::with_val(p, log_lo)]
        .into_iter()
        .fold(Float::with_val(p, f64::NEG_INFINITY), |m, x| m.max(&x));
    let end = Float::with_val(p, log_hi);
    if start >= end {
        return Ok(Vec::new());
    }
    let diff = |x: &DR| match (region_width(a, x), region_width(b, x)) {
        (Ok(u), Ok(v)) => u - v,
        _ => DR::entire(x.precision()),
    };
    const N: usize = 2048;
    let log_ratio = Float::with_val(p, &end / &start).ln();
    let mut signs: Vec<(Float, i8)> = Vec::new();
    for i in 0..=N {
        let x = if i == N {
            end.clone()
        } else {
            let step = Float::with_val(p, &log_ratio * i as u64) / N as u64;
            Float::with_val(p, &start * step.exp())
        };
        let d = diff(&DR::point(x.clone()));
        if d.certainly_positive() {
            signs.push((x, 1));
        } else if d.certainly_negative() {
            signs.push((x, -1));
        }
    }
    let mut out = Vec::new();
    for w in signs.windows(2) {
        if w[0].1 != w[1].1 {
            out.push(bisect_root(diff, &w[0].0, &w[1].0, None, p)?);
        }
    }
    Ok(out)
}

/// Reads a catalog of `name, formula, parameters..., valid_from` lines.
/// Blank lines and `#` comments are skipped.
pub fn parse_catalog(src: &str) -> Result<Vec<RegionSpec>> {
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let n = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() < 3 {
            return Err(usage(format!("catalog line {n}: expected name, formula, parameters, valid_from")));
        }
        let name = fields[0];
        if name.is_empty() {
            return Err(usage(format!("catalog line {n}: empty name")));
        }
        let formula = RegionFormula::from_id(fields[1])
            .ok_or_else(|| usage(format!("catalog line {n}: unknown formula `{}`", fields[1])))?;
        let params = &fields[2..fields.len() - 1];
        if params.len() != formula.arity() {
            return Err(usage(format!(
                "catalog line {n}: `{}` takes {} parameters, got {}",
                formula.id(),
                formula.arity(),
                params.len()
            )));
        }
        for s in params.iter().chain(std::iter::once(&fields[fields.len() - 1])) {
            DR::decimal(s, 64).map_err(|_| usage(format!("catalog line {n}: `{s}` is not a decimal")))?;
        }
        let valid_from = fields[fields.len() - 1];
        if !DR::lit(valid_from, 64).certainly_gt(&DR::one(64)) {
            return Err(usage(format!("catalog line {n}: valid_from must exceed 1")));
        }
        if out.iter().any(|r: &RegionSpec| r.name == name) {
            return Err(usage(format!("catalog line {n}: duplicate region `{name}`")));
        }
        out.push(RegionSpec::new(name, formula, params, valid_from));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 128;

    fn std(name: &str) -> RegionSpec {
        standard_regions().into_iter().find(|r| r.name == name).unwrap()
    }

    #[test]
    fn catalog_round_trip() {
        assert_eq!(parse_catalog(STANDARD_CATALOG).unwrap(), standard_regions());
    }

    #[test]
    fn catalog_errors_carry_line_numbers() {
        let bad = "classical, classical, 5.558691, 2\n\nford, ford-type, 1, 2, 3\n";
        let e = parse_catalog(bad).unwrap_err().to_string();
        assert!(e.contains("line 3"), "{e}");
        let e = parse_catalog("x, mystery, 1, 3").unwrap_err().to_string();
        assert!(e.contains("line 1") && e.contains("mystery"), "{e}");
        assert!(parse_catalog("x, classical, abc, 3").is_err());
        assert!(parse_catalog("x, classical, 1, 0.5").is_err());
    }

    #[test]
    fn closed_form_values() {
        let e = DR::e(P);
        let w = region_width(&std("new"), &e).unwrap();
        let want = (DR::lit("21.233", P) * &e).recip();
        assert!((w - want).abs().certainly_lt(&DR::lit("1e-30", P)));
        let w = region_width(&std("classical"), &DR::one(P)).unwrap();
        assert!((w.mid_f64() - 1.0 / 5.558691).abs() < 1e-15);
    }

    #[test]
    fn classical_gives_way_to_ford_near_46() {
        let (c, f) = (std("classical"), std("ford"));
        let at = |lt: &str| {
            let x = DR::lit(lt, P);
            region_width(&f, &x).unwrap() - region_width(&c, &x).unwrap()
        };
        assert!(at("46.2").certainly_negative());
        assert!(at("46.3").certainly_positive());
    }

    #[test]
    fn below_validity() {
        assert!(region_width(&std("ford"), &DR::lit("1", P)).is_err());
    }

    #[test]
    fn self_crossing_is_empty() {
        let n = std("new");
        let v = crossovers(&n, &n, &Float::with_val(P, 2), &Float::with_val(P, 1e6), P).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn new_region_window() {
        let (n, f, vk) = (std("new"), std("ford"), std("vk"));
        let a = crossovers(&n, &f, &Float::with_val(P, 100), &Float::with_val(P, 300), P).unwrap();
        assert_eq!(a.len(), 1);
        assert!(a[0].certainly_ge(&DR::lit("169.8", P)) && a[0].certainly_le(&DR::lit("170.8", P)));
        let b = crossovers(&n, &vk, &Float::with_val(P, 1e5), &Float::with_val(P, 1e6), P).unwrap();
        assert_eq!(b.len(), 1);
        assert!((b[0].mid_f64() - 532141.0).abs() < 2000.0);
    }
}
