//! Newton polygons for `GL_n`: exact lattice-point counts between two polygons and rendering.

use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};

use crate::bg::{nu_tilde, SigmaClass};
use crate::datum::CoxeterDatum;
use crate::error::{Error, Result};
use crate::rat::{ceil, floor, fmt_q, is_int, qi, to_i64, RatVec, Q};

/// Graph on `[0, n]` starting at the origin with weakly decreasing unit slopes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    slopes: Vec<Q>,
    /// Common slope shift `ν_τ` already included in `slopes`, if any.
    shift: Option<Q>,
}

impl NewtonPolygon {
    pub fn new(slopes: &RatVec) -> Result<Self> {
        if slopes.is_empty() {
            return Err(Error::InvalidDatum("a polygon needs at least one slope".into()));
        }
        if slopes.0.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(slopes.to_string()));
        }
        Ok(NewtonPolygon { slopes: slopes.0.clone(), shift: None })
    }

    pub fn n(&self) -> usize {
        self.slopes.len()
    }

    pub fn slopes(&self) -> &[Q] {
        &self.slopes
    }

    pub fn shift(&self) -> Option<&Q> {
        self.shift.as_ref()
    }

    /// Height at the integer abscissa `x`.
    pub fn height(&self, x: usize) -> Q {
        self.slopes[..x].iter().sum()
    }

    /// Height at a rational abscissa in `[0, n]`.
    pub fn height_at(&self, x: &Q) -> Q {
        let k = to_i64(&floor(x)).clamp(0, self.n() as i64) as usize;
        if k == self.n() {
            return self.height(k);
        }
        self.height(k) + &self.slopes[k] * (x - qi(k as i64))
    }

    pub fn end(&self) -> Q {
        self.height(self.n())
    }

    /// Break points, endpoints included.
    pub fn vertices(&self) -> Vec<(usize, Q)> {
        let n = self.n();
        let mut out = vec![(0, Q::zero())];
        for x in 1..n {
            if self.slopes[x - 1] != self.slopes[x] {
                out.push((x, self.height(x)));
            }
        }
        out.push((n, self.end()));
        out
    }

    pub fn has_lattice_vertices(&self) -> bool {
        self.vertices().iter().all(|(_, y)| is_int(y))
    }
}

/// Lattice-point counts in the closed region between two polygons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PickCounts {
    pub area: Q,
    pub interior: usize,
    /// On the lower polygon only.
    pub b1: usize,
    /// On the upper polygon only.
    pub b2: usize,
    /// On both polygons, endpoints included.
    pub common: usize,
}

impl PickCounts {
    /// `2A = 2i + b₁ + b₂`.
    pub fn pick_holds(&self) -> bool {
        &self.area * qi(2) == qi((2 * self.interior + self.b1 + self.b2) as i64)
    }
}

pub fn pick_counts(lower: &NewtonPolygon, upper: &NewtonPolygon) -> Result<PickCounts> {
    let n = lower.n();
    if upper.n() != n {
        return Err(Error::DimensionMismatch { expected: n, got: upper.n() });
    }
    if lower.end() != upper.end() {
        return Err(Error::NotComparable);
    }
    let mut counts = PickCounts { area: Q::zero(), interior: 0, b1: 0, b2: 0, common: 0 };
    for x in 0..=n {
        let lo = lower.height(x);
        let hi = upper.height(x);
        if lo > hi {
            return Err(Error::NotComparable);
        }
        let mut y = ceil(&lo);
        let top = floor(&hi);
        while y <= top {
            let yq = Q::from_integer(y.clone());
            match (yq == lo, yq == hi) {
                (true, true) => counts.common += 1,
                (true, false) => counts.b1 += 1,
                (false, true) => counts.b2 += 1,
                (false, false) => counts.interior += 1,
            }
            y += 1;
        }
        if x < n {
            counts.area += ((&hi - &lo) + (upper.height(x + 1) - lower.height(x + 1))) / qi(2);
        }
    }
    Ok(counts)
}

/// Polygon of `ν̃ = ν + ν_τ` for a (possibly twisted) `GL_n` datum.
pub fn shifted_polygon(datum: &CoxeterDatum, c: &SigmaClass) -> Result<NewtonPolygon> {
    if datum.roots().gl_n().is_none() {
        return Err(Error::Unsupported(format!("Newton polygons need a GL_n datum, got {}", datum.label())));
    }
    let mut p = NewtonPolygon::new(&nu_tilde(datum, c))?;
    let t = datum.nu_tau();
    p.shift = if t.is_zero() { None } else { Some(t.0[0].clone()) };
    Ok(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Ascii,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(RenderFormat::Svg),
            "ascii" => Ok(RenderFormat::Ascii),
            _ => Err(Error::Parse(format!("unsupported render format {s:?}"))),
        }
    }
}

pub fn render(polygons: &[NewtonPolygon], format: RenderFormat) -> Result<String> {
    if polygons.is_empty() || polygons.len() > 2 {
        return Err(Error::InvalidDatum(format!("expected 1 or 2 polygons, got {}", polygons.len())));
    }
    let n = polygons[0].n();
    if let Some(p) = polygons.iter().find(|p| p.n() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: p.n() });
    }
    let mut lo = 0i64;
    let mut hi = 0i64;
    for p in polygons {
        for x in 0..=n {
            let h = p.height(x);
            lo = lo.min(to_i64(&floor(&h)));
            hi = hi.max(to_i64(&ceil(&h)));
        }
    }
    Ok(match format {
        RenderFormat::Svg => render_svg(polygons, n, lo, hi),
        RenderFormat::Ascii => render_ascii(polygons, n, lo, hi),
    })
}

const UNIT: f64 = 40.0;
const MARGIN: f64 = 20.0;
const COLORS: [&str; 2] = ["#1f4e9c", "#b22222"];

fn qf(x: &Q) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

fn render_svg(polygons: &[NewtonPolygon], n: usize, lo: i64, hi: i64) -> String {
    let w = n as f64 * UNIT + 2.0 * MARGIN;
    let h = (hi - lo) as f64 * UNIT + 2.0 * MARGIN;
    let px = |x: f64| MARGIN + x * UNIT;
    let py = |y: f64| MARGIN + (hi as f64 - y) * UNIT;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.3}" height="{h:.3}" viewBox="0 0 {w:.3} {h:.3}">"#
    );
    let _ = writeln!(s, r#"<rect x="0.000" y="0.000" width="{w:.3}" height="{h:.3}" fill="white"/>"#);
    for x in 0..=n {
        let _ = writeln!(
            s,
            r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#d0d0d0" stroke-width="1"/>"##,
            px(x as f64),
            py(hi as f64),
            px(x as f64),
            py(lo as f64)
        );
    }
    for y in lo..=hi {
        let _ = writeln!(
            s,
            r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#d0d0d0" stroke-width="1"/>"##,
            px(0.0),
            py(y as f64),
            px(n as f64),
            py(y as f64)
        );
    }
    for (k, p) in polygons.iter().enumerate() {
        let mut d = String::new();
        for (i, (x, y)) in p.vertices().iter().enumerate() {
            let _ = write!(d, "{}{:.3} {:.3}", if i == 0 { "M " } else { " L " }, px(*x as f64), py(qf(y)));
        }
        let _ = writeln!(s, r#"<path d="{d}" fill="none" stroke="{}" stroke-width="3"/>"#, COLORS[k]);
        for (x, y) in p.vertices() {
            let _ = writeln!(
                s,
                r#"<rect x="{:.3}" y="{:.3}" width="6.000" height="6.000" fill="{}"/>"#,
                px(x as f64) - 3.0,
                py(qf(&y)) - 3.0,
                COLORS[k]
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

const SX: i64 = 4;
const SY: i64 = 2;

fn render_ascii(polygons: &[NewtonPolygon], n: usize, lo: i64, hi: i64) -> String {
    let width = (n as i64 * SX + 1) as usize;
    let height = ((hi - lo) * SY + 1) as usize;
    let mut grid = vec![vec![' '; width]; height];
    let row_of = |y: &Q| -> usize {
        let r = (y - qi(lo)) * qi(SY);
        let rounded = to_i64(&floor(&(r + Q::new(1.into(), 2.into()))));
        (hi - lo) as usize * SY as usize - rounded as usize
    };
    for x in 0..=n as i64 {
        for y in lo..=hi {
            grid[row_of(&qi(y))][(x * SX) as usize] = '.';
        }
    }
    for p in polygons {
        let mut prev: Option<usize> = None;
        for c in 0..width as i64 {
            let xq = Q::new(c.into(), SX.into());
            let seg = ((c - 1).max(0) / SX) as usize;
            let slope = &p.slopes()[seg.min(n - 1)];
            let ch = if slope.is_zero() {
                '-'
            } else if slope > &Q::zero() {
                '/'
            } else {
                '\\'
            };
            let r = row_of(&p.height_at(&xq));
            grid[r][c as usize] = ch;
            if let Some(pr) = prev {
                let (a, b) = if pr < r { (pr, r) } else { (r, pr) };
                for cell in grid.iter_mut().take(b).skip(a + 1) {
                    cell[c as usize] = ch;
                }
            }
            prev = Some(r);
        }
    }
    for p in polygons {
        for (x, y) in p.vertices() {
            grid[row_of(&y)][x * SX as usize] = '*';
        }
    }
    let mut s = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        s.push_str(line.trim_end());
        s.push('\n');
    }
    s
}

/// `(x, y)` pairs of the vertices, formatted exactly.
pub fn vertex_list(p: &NewtonPolygon) -> String {
    let parts: Vec<String> = p.vertices().iter().map(|(x, y)| format!("({x},{})", fmt_q(y))).collect();
    parts.join("-")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[(i64, i64)]) -> NewtonPolygon {
        NewtonPolygon::new(&RatVec::from_fracs(v)).unwrap()
    }

    fn gl8_pair() -> (NewtonPolygon, NewtonPolygon) {
        (
            poly(&[(5, 4), (5, 4), (5, 4), (5, 4), (1, 4), (1, 4), (1, 4), (1, 4)]),
            poly(&[(3, 1), (1, 1), (1, 2), (1, 2), (1, 2), (1, 2), (0, 1), (0, 1)]),
        )
    }

    #[test]
    fn gl8_pair_counts() {
        let (lo, hi) = gl8_pair();
        let c = pick_counts(&lo, &hi).unwrap();
        assert_eq!((c.area.clone(), c.interior, c.b1, c.b2, c.common), (qi(5), 3, 0, 4, 3));
        assert!(c.pick_holds());
        assert_eq!(vertex_list(&lo), "(0,0)-(4,5)-(8,6)");
        assert_eq!(vertex_list(&hi), "(0,0)-(1,3)-(2,4)-(6,6)-(8,6)");
    }

    #[test]
    fn small_triangle() {
        let c = pick_counts(&poly(&[(1, 2), (1, 2)]), &poly(&[(1, 1), (0, 1)])).unwrap();
        assert_eq!((c.area, c.interior, c.b1, c.b2), (Q::new(1.into(), 2.into()), 0, 0, 1));
        let p = poly(&[(1, 1), (0, 1)]);
        let c = pick_counts(&p, &p).unwrap();
        assert_eq!((c.area, c.interior, c.b1, c.b2), (Q::zero(), 0, 0, 0));
    }

    #[test]
    fn crossing_and_mismatch_are_errors() {
        let a = poly(&[(1, 1), (0, 1)]);
        assert_eq!(pick_counts(&a, &poly(&[(1, 2), (1, 2)])), Err(Error::NotComparable));
        assert_eq!(pick_counts(&a, &poly(&[(1, 1), (1, 1)])), Err(Error::NotComparable));
        assert!(NewtonPolygon::new(&RatVec::from_ints(&[0, 1])).is_err());
    }

    #[test]
    fn rendering_is_deterministic() {
        let (lo, hi) = gl8_pair();
        let svg = render(&[lo.clone(), hi.clone()], RenderFormat::Svg).unwrap();
        assert_eq!(svg, render(&[lo.clone(), hi.clone()], RenderFormat::Svg).unwrap());
        assert!(svg.contains(r#"d="M 20.000 260.000 L 180.000 60.000 L 340.000 20.000""#));
        let ascii = render(&[hi], RenderFormat::Ascii).unwrap();
        assert!(ascii.contains('*') && ascii.contains('/'));
        assert!(render(&[], RenderFormat::Ascii).is_err());
        assert!("png".parse::<RenderFormat>().is_err());
    }

    #[test]
    fn shifted_polygon_of_twisted_basic() {
        let d = CoxeterDatum::from_json(r#"{"type":"GL6","tau":{"rotate":2},"mu":[1,0,0,0,0,0]}"#).unwrap();
        let p = crate::bg::enumerate_bg_mu(&d).unwrap();
        let s = shifted_polygon(&d, p.basic()).unwrap();
        assert_eq!(s.slopes(), RatVec::from_fracs(&[(1, 2); 6]).0.as_slice());
        assert_eq!(s.end(), qi(3));
        assert!(p.elements().iter().all(|c| shifted_polygon(&d, c).unwrap().has_lattice_vertices()));
        let b2 = CoxeterDatum::from_json(r#"{"type":"B2","mu":"w1"}"#).unwrap();
        assert!(shifted_polygon(&b2, &SigmaClass::new(RatVec::zeros(2), b2.kappa_target())).is_err());
    }
}
