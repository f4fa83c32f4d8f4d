use zerodim::bg::{enumerate_bg_mu, leq, nu_tilde, SigmaClass};
use zerodim::classifier::gl_twisted;
use zerodim::rootsys::CartanType;
use zerodim::{CoxeterDatum, RatVec, RootDatum};

fn v(s: &str) -> RatVec {
    RatVec::parse(s).unwrap()
}

#[test]
fn d4_labels_follow_the_standard_diagram() {
    let rd = RootDatum::irreducible(CartanType::D, 4).unwrap();
    assert_eq!(rd.blocks()[0].labels, vec![0, 1, 2, 3]);
    let d = CoxeterDatum::from_json(r#"{"type":"D4","sigma0":"flip","tau":3,"mu":"w2"}"#).unwrap();
    assert_eq!(d.sigma0(), &[0, 1, 3, 2]);
    assert_eq!(d.tau().label(), "tau4");
}

#[test]
fn gl4_incomparable_pair() {
    let d = CoxeterDatum::from_json(r#"{"type":"GL4","mu":[1,1,0,0]}"#).unwrap();
    let k = d.kappa_target();
    let a = SigmaClass::new(v("1,1/3,1/3,1/3"), k.clone());
    let b = SigmaClass::new(v("2/3,2/3,2/3,0"), k);
    assert!(!leq(&d, &a, &b) && !leq(&d, &b, &a));
}

#[test]
fn gl4_indecomposable_class() {
    let d = CoxeterDatum::from_json(r#"{"type":"GL4","mu":[2,0,0,0]}"#).unwrap();
    let p = enumerate_bg_mu(&d).unwrap();
    assert_eq!(p.indec().nu, v("1,1/3,1/3,1/3"));
}

#[test]
fn gl6_tau4_twisted_newton_points() {
    let d = gl_twisted(6, 4, &RatVec::from_ints(&[1, 0, 0, 0, 0, 0])).unwrap();
    let p = enumerate_bg_mu(&d).unwrap();
    assert_eq!(nu_tilde(&d, p.max()), v("1,1,1,2/3,2/3,2/3"));
    assert_eq!(nu_tilde(&d, p.indec()), v("1,1,3/4,3/4,3/4,3/4"));
    assert_eq!(nu_tilde(&d, p.basic()), v("5/6,5/6,5/6,5/6,5/6,5/6"));
}

#[test]
fn malformed_datum_is_rejected() {
    for bad in [
        r#"{"type":"A3","mu":"w4"}"#,
        r#"{"type":"Q3","mu":"w1"}"#,
        r#"{"type":"A3","sigma0":[0,0,1],"mu":"w1"}"#,
        r#"{"type":"GL3","mu":[0,1,0]}"#,
        r#"{"type":"A3","mu":"w1","foo":1}"#,
    ] {
        assert!(CoxeterDatum::from_json(bad).is_err(), "{bad}");
    }
}
