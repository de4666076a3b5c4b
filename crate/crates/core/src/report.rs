use serde::Serialize;

use crate::numerics::DirectedReal;

/// Significant digits used when rendering enclosure endpoints.
pub const REPORT_DIGITS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// One certified comparison: an enclosure, the published target and the outcome.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub paper_target: String,
    pub computed_lo: String,
    pub computed_hi: String,
    pub verdict: Verdict,
}

impl CheckItem {
    fn with(name: &str, target: String, v: &DirectedReal, ok: bool) -> Self {
        CheckItem {
            name: name.to_string(),
            paper_target: target,
            computed_lo: v.lo_string(REPORT_DIGITS),
            computed_hi: v.hi_string(REPORT_DIGITS),
            verdict: Verdict::from_bool(ok),
        }
    }

    fn target(v: &DirectedReal, t: &str) -> DirectedReal {
        DirectedReal::lit(t, v.precision().max(64))
    }

    /// Passes when every point of `v` is at most the decimal `target`.
    pub fn le(name: &str, v: &DirectedReal, target: &str) -> Self {
        let t = Self::target(v, target);
        Self::with(name, format!("<= {target}"), v, v.certainly_le(&t))
    }

    pub fn lt(name: &str, v: &DirectedReal, target: &str) -> Self {
        let t = Self::target(v, target);
        Self::with(name, format!("< {target}"), v, v.certainly_lt(&t))
    }

    pub fn ge(name: &str, v: &DirectedReal, target: &str) -> Self {
        let t = Self::target(v, target);
        Self::with(name, format!(">= {target}"), v, v.certainly_ge(&t))
    }

    pub fn gt(name: &str, v: &DirectedReal, target: &str) -> Self {
        let t = Self::target(v, target);
        Self::with(name, format!("> {target}"), v, v.certainly_gt(&t))
    }

    /// Passes when `v` lies in `[lo, hi]`.
    pub fn within(name: &str, v: &DirectedReal, lo: &str, hi: &str) -> Self {
        let a = Self::target(v, lo);
        let b = Self::target(v, hi);
        Self::with(
            name,
            format!("in [{lo}, {hi}]"),
            v,
            v.certainly_ge(&a) && v.certainly_le(&b),
        )
    }

    /// Passes when `v` agrees with the truncated decimal `digits`, i.e. lies
    /// in `[digits, digits + 10^-d)` where `d` is the number of printed decimals.
    pub fn digits(name: &str, v: &DirectedReal, digits: &str) -> Self {
        let d = digits.split_once('.').map(|(_, f)| f.len()).unwrap_or(0);
        let lo = Self::target(v, digits);
        let step = DirectedReal::lit(&format!("1e-{d}"), v.precision().max(64));
        let hi = &lo + &step;
        let ok = v.certainly_ge(&lo) && v.certainly_lt(&hi);
        Self::with(name, format!("= {digits}..."), v, ok)
    }

    /// A yes/no check with a value shown for context.
    pub fn holds(name: &str, target: &str, v: &DirectedReal, ok: bool) -> Self {
        Self::with(name, target.to_string(), v, ok)
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}

/// Merges a run at the working precision with a confirmation run: an item
/// passes only if it passed in both. Enclosures are reported from the first run.
pub fn confirm(primary: Vec<CheckItem>, confirmation: &[CheckItem]) -> Vec<CheckItem> {
    primary
        .into_iter()
        .enumerate()
        .map(|(i, mut item)| {
            let agrees = confirmation
                .get(i)
                .map(|c| c.name == item.name && c.passed())
                .unwrap_or(false);
            if !agrees {
                item.verdict = Verdict::Fail;
            }
            item
        })
        .collect()
}

/// Runs `suite` at both precisions and merges the verdicts.
pub fn run_confirmed<F>(suite: F, prec: u32, confirm_prec: u32) -> Vec<CheckItem>
where
    F: Fn(u32) -> Vec<CheckItem>,
{
    let a = suite(prec);
    if confirm_prec == prec {
        return a;
    }
    let b = suite(confirm_prec);
    confirm(a, &b)
}

pub fn all_pass(items: &[CheckItem]) -> bool {
    items.iter().all(CheckItem::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comparisons_are_conservative() {
        let v = DirectedReal::lit("2.75", 128);
        assert!(CheckItem::le("a", &v, "2.75").passed());
        assert!(!CheckItem::lt("a", &v, "2.75").passed());
        let w = DirectedReal::lit("0.1", 128);
        // 0.1 is not representable, so its enclosure straddles the decimal.
        assert!(!CheckItem::le("b", &w, "0.1").passed());
        assert!(!CheckItem::ge("b", &w, "0.1").passed());
        assert!(CheckItem::within("b", &w, "0.09", "0.11").passed());
    }

    #[test]
    fn digit_agreement() {
        let pi = DirectedReal::pi(128);
        assert!(CheckItem::digits("pi", &pi, "3.14159").passed());
        assert!(!CheckItem::digits("pi", &pi, "3.14160").passed());
    }

    #[test]
    fn confirmation_needs_both_passes() {
        let v = DirectedReal::int(1, 64);
        let a = vec![CheckItem::le("x", &v, "2"), CheckItem::le("y", &v, "2")];
        let b = vec![CheckItem::le("x", &v, "2"), CheckItem::le("y", &v, "0")];
        let m = confirm(a, &b);
        assert!(m[0].passed() && !m[1].passed());
    }
}
