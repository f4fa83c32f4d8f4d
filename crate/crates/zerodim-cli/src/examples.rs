//! Built-in regression set.

use zerodim::bg::SigmaClass;
use zerodim::classifier::{classify_full, minimal_elements, saturation_check, Classification};
use zerodim::essgap::{ess_gap, gap_to_max};
use zerodim::polygon::{pick_counts, NewtonPolygon};
use zerodim::rat::qi;
use zerodim::{CoxeterDatum, RatVec, Result};

fn datum(json: &str) -> Result<CoxeterDatum> {
    CoxeterDatum::from_json(json)
}

fn shown(d: &CoxeterDatum, c: &Classification) -> Vec<String> {
    c.poset.elements().iter().map(|e| d.display(&e.nu).to_string()).collect()
}

fn gl8_pair() -> Result<String> {
    let d = datum(r#"{"type":"GL8","mu":[3,1,1,1,0,0,0,0]}"#)?;
    let n1 = RatVec::parse("5/4,5/4,5/4,5/4,1/4,1/4,1/4,1/4")?;
    let n2 = RatVec::parse("3,1,1/2,1/2,1/2,1/2,0,0")?;
    let k = d.kappa_target();
    let g = ess_gap(&d, &SigmaClass::new(n1.clone(), k.clone()), &SigmaClass::new(n2.clone(), k))?;
    let pc = pick_counts(&NewtonPolygon::new(&n1)?, &NewtonPolygon::new(&n2)?)?;
    let got = (pc.area.clone(), pc.interior, pc.b1, pc.b2, g.length, g.ess_gap);
    if got == (qi(5), 3, 0, 4, 7, 3) && (g.i, g.b1, g.b2) == (3, 0, 4) {
        Ok(String::new())
    } else {
        Ok(format!("got {got:?}, orbit counts i={} b1={} b2={}", g.i, g.b1, g.b2))
    }
}

/// Checks the class at `nu` (display coordinates): minimal J, Levi label and zero gap.
fn check_class(d: &CoxeterDatum, c: &Classification, nu: &str, j: &[usize], levi: &str) -> Result<String> {
    let v = d.roots().from_display(&RatVec::parse(nu)?)?;
    let Some(k) = c.poset.elements().iter().position(|e| e.nu == v) else {
        return Ok(format!("no class with nu = {nu}"));
    };
    let ver = &c.verdicts[k];
    let j1: Vec<usize> = ver.minimal_j.iter().map(|x| x + 1).collect();
    if j1 != j {
        return Ok(format!("minimal J = {j1:?}, expected {j:?}"));
    }
    if !ver.levi_label.starts_with(levi) {
        return Ok(format!("Levi {} does not start with {levi}", ver.levi_label));
    }
    if ver.ess_gap != 0 || !ver.cond2 || !ver.cond3 {
        return Ok(format!("class {nu}: gap {} cond2 {} cond3 {}", ver.ess_gap, ver.cond2, ver.cond3));
    }
    Ok(String::new())
}

fn poset_is(d: &CoxeterDatum, c: &Classification, expected: &[&str]) -> String {
    let got = shown(d, c);
    let mut want: Vec<String> = Vec::new();
    for e in expected {
        match RatVec::parse(e) {
            Ok(v) => want.push(v.to_string()),
            Err(err) => return err.to_string(),
        }
    }
    let mut g = got.clone();
    g.sort();
    want.sort();
    if g == want {
        String::new()
    } else {
        format!("poset {got:?}")
    }
}

fn agree_all(c: &Classification) -> String {
    if c.all_agree() {
        String::new()
    } else {
        "cond2 and cond3 disagree".into()
    }
}

fn example_a3() -> Result<String> {
    let d = datum(r#"{"type":"A3","sigma0":"flip","mu":"w2"}"#)?;
    let c = classify_full(&d)?;
    let mut m = poset_is(&d, &c, &["0,0,0,0", "1/2,0,0,-1/2", "1/2,1/2,-1/2,-1/2"]);
    if m.is_empty() {
        m = check_class(&d, &c, "1/2,0,0,-1/2", &[2], "(A1, id, w1)")?;
    }
    if m.is_empty() {
        m = agree_all(&c);
    }
    Ok(m)
}

fn example_a4() -> Result<String> {
    let d = datum(r#"{"type":"A4","sigma0":"flip","mu":"w1"}"#)?;
    let c = classify_full(&d)?;
    let mut m = poset_is(&d, &c, &["0,0,0,0,0", "1/4,1/4,0,-1/4,-1/4", "1/2,0,0,0,-1/2"]);
    if m.is_empty() {
        m = check_class(&d, &c, "1/4,1/4,0,-1/4,-1/4", &[1, 4], "Res_{F2/F}(A1, id), (w1, 0)")?;
    }
    if m.is_empty() {
        m = agree_all(&c);
    }
    Ok(m)
}

fn example_a5() -> Result<String> {
    let d = datum(r#"{"type":"A5","sigma0":"flip","tau":1,"mu":"w1"}"#)?;
    let c = classify_full(&d)?;
    let mut m = poset_is(&d, &c, &["0,0,0,0,0,0", "1/4,1/4,0,0,-1/4,-1/4", "1/2,0,0,0,0,-1/2"]);
    if m.is_empty() {
        m = check_class(&d, &c, "1/4,1/4,0,0,-1/4,-1/4", &[1, 3, 5], "Res_{F2/F}(A1, id), (w1, 0) x (A1, ")?;
    }
    if m.is_empty() {
        m = agree_all(&c);
    }
    Ok(m)
}

fn example_d(n: usize) -> Result<String> {
    let d = datum(&format!(r#"{{"type":"D{n}","tau":1,"mu":"w1"}}"#))?;
    let c = classify_full(&d)?;
    let mut expected = vec![vec!["0".to_string(); n], {
        let mut v = vec!["0".to_string(); n];
        v[0] = "1".into();
        v
    }];
    for i in 2..=n - 2 {
        expected.push((0..n).map(|k| if k < i { format!("1/{i}") } else { "0".into() }).collect());
    }
    let exp: Vec<String> = expected.iter().map(|v| v.join(",")).collect();
    let refs: Vec<&str> = exp.iter().map(String::as_str).collect();
    let m = poset_is(&d, &c, &refs);
    if !m.is_empty() {
        return Ok(m);
    }
    for (i, nu) in exp.iter().enumerate().skip(2) {
        let j: Vec<usize> = (1..=n).filter(|&k| k != i).collect();
        let m = check_class(&d, &c, nu, &j, &format!("(A{}, id, w1) x ", i - 1))?;
        if !m.is_empty() {
            return Ok(m);
        }
    }
    Ok(agree_all(&c))
}

fn gl4_zero_dim_set() -> Result<String> {
    let d = datum(r#"{"type":"GL4","mu":[1,1,0,0]}"#)?;
    let c = classify_full(&d)?;
    let zero = c.zero_dim();
    let mut got: Vec<String> = zero.iter().map(|&k| c.poset.elements()[k].nu.to_string()).collect();
    got.sort();
    let mut want: Vec<String> = ["1,1,0,0", "1,1/2,1/2,0", "1,1/3,1/3,1/3", "2/3,2/3,2/3,0"]
        .iter()
        .map(|s| RatVec::parse(s).map(|v| v.to_string()))
        .collect::<Result<_>>()?;
    want.sort();
    if got != want {
        return Ok(format!("zero-dim set {got:?}"));
    }
    if !saturation_check(&d, &c.poset, &c.verdicts) {
        return Ok("not saturated".into());
    }
    if minimal_elements(&d, &c.poset, &zero).len() != 2 {
        return Ok("expected two minimal elements".into());
    }
    Ok(agree_all(&c))
}

fn gl5_example() -> Result<String> {
    let d = datum(r#"{"type":"GL5","mu":[2,1,0,-1,-1]}"#)?;
    let c = classify_full(&d)?;
    let nu = "3/2,3/2,-2/3,-2/3,-2/3";
    let m = check_class(&d, &c, nu, &[1, 3, 4], "(A1, id, w1) x (A2, id, w1)")?;
    if !m.is_empty() {
        return Ok(m);
    }
    let cl = c.poset.by_nu(&RatVec::parse(nu)?).expect("checked above").clone();
    let g = gap_to_max(&d, &c.poset, &cl)?;
    if (g.i, g.b1) != (0, 0) {
        return Ok(format!("i = {}, b1 = {}", g.i, g.b1));
    }
    Ok(agree_all(&c))
}

fn gl4_twisted() -> Result<String> {
    let d = datum(r#"{"type":"GL4","tau":{"rotate":1},"mu":[1,0,0,0]}"#)?;
    let c = classify_full(&d)?;
    if c.mu_ordinary {
        return Ok("maximum reported mu-ordinary".into());
    }
    if c.verdicts.iter().any(|v| v.cond3 && v.class != *c.poset.max()) {
        return Ok("unexpected zero-dimensional class".into());
    }
    Ok(agree_all(&c))
}

type Example = (&'static str, Box<dyn Fn() -> Result<String>>);

/// Runs every example and prints one line each; returns whether all passed.
pub fn run_all() -> bool {
    let items: Vec<Example> = vec![
        ("GL8 gap counts", Box::new(gl8_pair)),
        ("A3 flip w2 poset and Levi", Box::new(example_a3)),
        ("A4 flip w1 poset and Levi", Box::new(example_a4)),
        ("A5 Ad(tau1) flip w1 poset and Levi", Box::new(example_a5)),
        ("D5 Ad(tau1) w1 chain", Box::new(|| example_d(5))),
        ("D6 Ad(tau1) w1 chain", Box::new(|| example_d(6))),
        ("D7 Ad(tau1) w1 chain", Box::new(|| example_d(7))),
        ("GL4 (1,1,0,0) zero-dim set", Box::new(gl4_zero_dim_set)),
        ("GL5 (2,1,0,-1,-1) no gap class", Box::new(gl5_example)),
        ("GL4 Ad(tau1) w1 not mu-ordinary", Box::new(gl4_twisted)),
    ];
    let mut ok = true;
    for (name, f) in items {
        match f() {
            Ok(m) if m.is_empty() => println!("PASS {name}"),
            Ok(m) => {
                ok = false;
                println!("FAIL {name}: {m}");
            }
            Err(e) => {
                ok = false;
                println!("FAIL {name}: {e}");
            }
        }
    }
    ok
}
