mod common;

use proptest::prelude::*;

use zerodim::bg::{enumerate_bg_mu, leq, length, SigmaClass};
use zerodim::classifier::extended_lubin_tate;
use zerodim::essgap::ess_gap;
use zerodim::hodgenewton::{levi_data, minimal_j};
use zerodim::polygon::{pick_counts, shifted_polygon};
use zerodim::rat::qi;
use zerodim::{CoxeterDatum, RatVec, RootDatum};

fn gl(mu: &[i64]) -> CoxeterDatum {
    let n = mu.len();
    CoxeterDatum::quasi_split(RootDatum::gl(n).unwrap(), (0..n - 1).collect(), RatVec::from_ints(mu)).unwrap()
}

fn dominant(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=3, n).prop_map(|mut v| {
        v.sort_by(|a, b| b.cmp(a));
        v
    })
}

#[test]
fn extended_lubin_tate_does_not_depend_on_z() {
    let mut compared = 0;
    for d in common::sweep(&common::main_sweep_types(), 4) {
        let p = enumerate_bg_mu(&d).unwrap();
        for c in p.elements() {
            let j = minimal_j(&d, c);
            if j.len() == d.rank() {
                continue;
            }
            let all = levi_data(&d, &j, 6).unwrap();
            let verdicts: Vec<bool> =
                all.iter().map(|l| extended_lubin_tate(&l.inner).unwrap().is_extended_lubin_tate()).collect();
            assert!(verdicts.windows(2).all(|w| w[0] == w[1]), "{}: J {j:?} gives {verdicts:?}", d.label());
            compared += all.len();
        }
    }
    assert!(compared > 0);
}

#[test]
fn gl_breakpoints_are_integral() {
    for n in 2..=6 {
        for mu in [vec![1], vec![2, 1], vec![3, 1, 1], vec![2, 2, 1, 0]] {
            let mut m = mu.clone();
            m.resize(n, 0);
            m.sort_by(|a, b| b.cmp(a));
            let d = gl(&m);
            for c in enumerate_bg_mu(&d).unwrap().elements() {
                let poly = shifted_polygon(&d, c).unwrap();
                assert!(poly.has_lattice_vertices(), "{} {:?}", d.label(), c);
            }
        }
    }
}

#[test]
fn posets_are_partial_orders_with_extremes() {
    for d in common::sweep(&common::main_sweep_types(), 4) {
        let p = enumerate_bg_mu(&d).unwrap();
        let e = p.elements();
        for a in e {
            assert!(leq(&d, p.basic(), a) && leq(&d, a, p.max()));
            for b in e {
                if a != b {
                    assert!(!(leq(&d, a, b) && leq(&d, b, a)), "{}", d.label());
                }
                for c in e {
                    if leq(&d, a, b) && leq(&d, b, c) {
                        assert!(leq(&d, a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn central_shift_of_mu_shifts_every_class() {
    let d = gl(&[2, 1, 0, 0]);
    let s = gl(&[3, 2, 1, 1]);
    let one = RatVec::from_ints(&[1, 1, 1, 1]);
    let p = enumerate_bg_mu(&d).unwrap();
    let q = enumerate_bg_mu(&s).unwrap();
    let mut shifted: Vec<String> = p.elements().iter().map(|c| (&c.nu + &one).to_string()).collect();
    let mut got: Vec<String> = q.elements().iter().map(|c| c.nu.to_string()).collect();
    shifted.sort();
    got.sort();
    assert_eq!(shifted, got);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pick_matches_orbit_counts(mu in (2usize..=6).prop_flat_map(dominant), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let d = gl(&mu);
        let p = enumerate_bg_mu(&d).unwrap();
        let x = &p.elements()[a.index(p.len())];
        let y = &p.elements()[b.index(p.len())];
        let (lo, hi) = if leq(&d, x, y) { (x, y) } else if leq(&d, y, x) { (y, x) } else { return Ok(()) };
        let pc = pick_counts(&shifted_polygon(&d, lo).unwrap(), &shifted_polygon(&d, hi).unwrap()).unwrap();
        let g = ess_gap(&d, lo, hi).unwrap();
        prop_assert!(pc.pick_holds());
        prop_assert_eq!((pc.interior as i64, pc.b1 as i64, pc.b2 as i64), (g.i, g.b1, g.b2));
        prop_assert_eq!(pc.area.clone() * qi(2), qi(g.two_rho_pairing));
    }

    #[test]
    fn gap_to_self_is_zero(mu in (2usize..=6).prop_flat_map(dominant), a in any::<prop::sample::Index>()) {
        let d = gl(&mu);
        let p = enumerate_bg_mu(&d).unwrap();
        let x = &p.elements()[a.index(p.len())];
        let g = ess_gap(&d, x, x).unwrap();
        prop_assert_eq!((g.ess_gap, g.length, g.i), (0, 0, 0));
        prop_assert_eq!(length(&d, p.basic(), x).unwrap() + length(&d, x, p.max()).unwrap(), length(&d, p.basic(), p.max()).unwrap());
    }

    #[test]
    fn ratvec_display_round_trips(v in prop::collection::vec((-50i64..50, 1i64..12), 1..8)) {
        let text: Vec<String> = v.iter().map(|(p, q)| format!("{p}/{q}")).collect();
        let parsed = RatVec::parse(&text.join(",")).unwrap();
        prop_assert_eq!(RatVec::parse(&parsed.to_string()).unwrap(), parsed);
    }

    #[test]
    fn incomparable_length_is_rejected(mu in (3usize..=5).prop_flat_map(dominant)) {
        let d = gl(&mu);
        let p = enumerate_bg_mu(&d).unwrap();
        for x in p.elements() {
            for y in p.elements() {
                prop_assert_eq!(length(&d, x, y).is_ok(), leq(&d, x, y));
            }
        }
        let off = SigmaClass::new(&p.max().nu + &RatVec::from_ints(&vec![1; mu.len()]), d.kappa_target());
        prop_assert!(!leq(&d, &off, p.max()));
    }
}
