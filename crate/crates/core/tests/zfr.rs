use explicit_zeta::report::all_pass;
use explicit_zeta::zfr::chain::{a1, large_t_chain, small_t_chain};
use explicit_zeta::zfr::consts;
use explicit_zeta::zfr::regions::STANDARD_CATALOG;
use explicit_zeta::zfr::{crossovers, l2_of_log_t, parse_catalog, region_width, standard_regions};
use explicit_zeta::DirectedReal as DR;
use proptest::prelude::*;
use rug::Float;

fn region(name: &str) -> explicit_zeta::zfr::RegionSpec {
    standard_regions().into_iter().find(|r| r.name == name).unwrap()
}

#[test]
fn chain_agrees_at_256_and_512_bits() {
    for (a, b) in [
        (large_t_chain(256).unwrap(), large_t_chain(512).unwrap()),
        (small_t_chain(256).unwrap(), small_t_chain(512).unwrap()),
    ] {
        assert_eq!(a.items.len(), b.items.len());
        for (x, y) in a.items.iter().zip(&b.items) {
            assert_eq!((&x.name, x.verdict), (&y.name, y.verdict));
        }
        assert!(a.ratio.intersect(&b.ratio).is_some());
    }
}

#[test]
fn audit_items_are_kept_apart_from_the_chain() {
    let c = large_t_chain(256).unwrap();
    assert!(all_pass(&c.items));
    assert!(!all_pass(&c.audit));
    for name in ["A0(x0)", "C1", "C5", "C7 = max U(x), x >= L1(t1)", "C11", "C12", "large-t ratio"] {
        assert!(c.item(name).unwrap().passed(), "{name}");
    }
}

#[test]
fn eta_stays_between_two_sevenths_and_one_half() {
    let p = 256;
    let e = DR::lit(consts::E, p);
    let mut prev: Option<DR> = None;
    for i in 0..=40 {
        let lt = DR::lit(consts::LOG_T0, p) + (DR::lit(consts::LOG_T1, p) - DR::lit(consts::LOG_T0, p)) * DR::ratio(i, 40, p);
        let eta = (DR::int(8, p) - &e / l2_of_log_t(&lt, 46)).recip();
        assert!(eta.certainly_ge(&DR::ratio(2, 7, p)) && eta.certainly_le(&DR::ratio(1, 2, p)));
        if let Some(q) = &prev {
            assert!(eta.certainly_lt(q));
        }
        prev = Some(eta);
    }
}

#[test]
fn crossover_heights() {
    let p = 128;
    let (new, ford, vk, classical) = (region("new"), region("ford"), region("vk"), region("classical"));
    let f = |x: f64| Float::with_val(p, x);
    let a = crossovers(&new, &ford, &f(100.0), &f(300.0), p).unwrap();
    assert_eq!(a.len(), 1);
    assert!((a[0].mid_f64() - 170.3).abs() <= 0.5);
    let b = crossovers(&new, &vk, &f(1e5), &f(1e6), p).unwrap();
    assert_eq!(b.len(), 1);
    assert!((b[0].mid_f64() - 532141.0).abs() <= 2000.0);
    let c = crossovers(&classical, &ford, &f(10.0), &f(100.0), p).unwrap();
    assert_eq!(c.len(), 1);
    assert!(c[0].certainly_gt(&DR::lit("46.2", p)) && c[0].certainly_lt(&DR::lit("46.3", p)));
    assert!(crossovers(&ford, &ford, &f(10.0), &f(1e3), p).unwrap().is_empty());
}

#[test]
fn new_region_is_widest_at_log_t_300() {
    let p = 128;
    let lt = DR::int(300, p);
    let widths: Vec<_> = standard_regions()
        .iter()
        .map(|r| (r.name.clone(), region_width(r, &lt).unwrap()))
        .collect();
    let (best, w) = widths.iter().max_by(|a, b| a.1.mid_f64().total_cmp(&b.1.mid_f64())).unwrap();
    assert_eq!(best, "new");
    for (n, v) in &widths {
        if n != best {
            assert!(v.certainly_lt(w));
        }
    }
}

#[test]
fn standard_catalog_parses() {
    assert_eq!(parse_catalog(STANDARD_CATALOG).unwrap().len(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn widths_positive_and_eventually_decreasing(lt in 200.0f64..1e7) {
        let p = 128;
        for r in standard_regions() {
            let a = region_width(&r, &DR::from_f64(lt, p)).unwrap();
            let b = region_width(&r, &DR::from_f64(lt * 1.01, p)).unwrap();
            prop_assert!(a.certainly_positive());
            prop_assert!(b.certainly_lt(&a), "{} at {}", r.name, lt);
        }
    }

    #[test]
    fn a1_is_negative_beyond_15_9(u in 15.9f64.ln()..1e6f64.ln()) {
        let p = 128;
        let v = a1(&DR::from_f64(u.exp(), p), &DR::lit(consts::ALPHA, p));
        prop_assert!(v.certainly_negative());
    }

    #[test]
    fn below_validity_is_rejected(lt in 0.0f64..1.0) {
        let p = 64;
        prop_assert!(region_width(&region("ford"), &DR::from_f64(lt, p)).is_err());
    }
}
