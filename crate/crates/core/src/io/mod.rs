//! Text formats: polynomial and set parsers, canonical renderers, LaTeX output.

mod latex;
mod parse;

pub use latex::{certificate_latex, poly_latex, rational_latex};
pub use parse::{parse_poly, parse_poly_in, parse_poly_list, parse_rational_strict, parse_set, ParseError, MAX_PARSE_DEGREE};

use num_traits::{One, Signed, Zero};

use crate::arith::{Polynomial, Rational};
use crate::semialg::{Component, Endpoint, SemiAlgSet};

/// Canonical text, descending powers: `x^2 - 3*x + 2`, `1/2*x - 1`.
pub fn render_poly(p: &Polynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}*{mono}"));
        }
    }
    out
}

pub fn render_rational(q: &Rational) -> String {
    q.to_string()
}

/// `u+v*sqrt(d)` or `u-v*sqrt(d)` with `v > 0`; rationals as `p/q`.
pub fn render_endpoint(e: &Endpoint) -> String {
    match e {
        Endpoint::Rational(q) => q.to_string(),
        Endpoint::QuadSurd { .. } => {
            let (u, v, d) = e.radical_form();
            let sign = if v.is_negative() { '-' } else { '+' };
            format!("{u}{sign}{}*sqrt({d})", v.abs())
        }
    }
}

fn render_component(c: &Component) -> String {
    match c {
        Component::Point(a) => format!("{{{}}}", render_endpoint(a)),
        Component::Segment(a, b) => format!("[{},{}]", render_endpoint(a), render_endpoint(b)),
        Component::RayBelow(b) => format!("(-inf,{}]", render_endpoint(b)),
        Component::RayAbove(a) => format!("[{},inf)", render_endpoint(a)),
        Component::Line => "R".to_string(),
    }
}

/// Canonical set text; the empty set renders as `{}`.
pub fn render_set(k: &SemiAlgSet) -> String {
    if k.is_empty() {
        return "{}".to_string();
    }
    k.components().iter().map(render_component).collect::<Vec<_>>().join(" U ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::semialg::Branch;

    #[test]
    fn poly_examples() {
        assert_eq!(parse_poly("x^2 - 3*x + 2").unwrap(), Polynomial::from_ints(&[2, -3, 1]));
        assert_eq!(parse_poly("1/2").unwrap(), Polynomial::constant(rat(1, 2)));
        assert_eq!(parse_poly("(x-1)*(x-2)").unwrap(), Polynomial::from_ints(&[2, -3, 1]));
        assert_eq!(parse_poly("-x^2").unwrap(), Polynomial::from_ints(&[0, 0, -1]));
        assert_eq!(parse_poly("2*-x").unwrap(), Polynomial::from_ints(&[0, -2]));
        assert_eq!(parse_poly_in("t^3 - t", "t").unwrap(), Polynomial::from_ints(&[0, -1, 0, 1]));
    }

    #[test]
    fn poly_errors_carry_offsets() {
        let e = parse_poly("x^2 + 2x").unwrap_err();
        assert_eq!(e.offset, 7);
        let e = parse_poly("x^-1").unwrap_err();
        assert!(e.message.contains("negative exponent"));
        assert_eq!(parse_poly("y + 1").unwrap_err().offset, 0);
        assert_eq!(parse_poly("1/0").unwrap_err().offset, 2);
        assert!(parse_poly("x^99999").is_err());
        assert!(parse_poly("").is_err());
        assert_eq!(parse_poly("x +").unwrap_err().offset, 3);
        assert!(parse_poly("((((x").is_err());
        assert!(parse_poly("x # 1").is_err());
    }

    #[test]
    fn render_round_trip() {
        for src in ["x^2 - 3*x + 2", "-1/2*x^3 + x", "0", "7/3", "-x"] {
            let p = parse_poly(src).unwrap();
            assert_eq!(render_poly(&p, "x"), src);
        }
    }

    #[test]
    fn set_examples() {
        let k = parse_set("[0,1] U [2,inf)").unwrap();
        assert_eq!(k.components().len(), 2);
        assert_eq!(parse_set("{0}").unwrap().components(), &[Component::Point(Endpoint::Rational(int(0)))]);
        let k = parse_set("[0-1*sqrt(2), 0+1*sqrt(2)]").unwrap();
        assert_eq!(
            k.components(),
            &[Component::Segment(
                Endpoint::surd(int(0), int(-2), Branch::Lower).unwrap(),
                Endpoint::surd(int(0), int(-2), Branch::Upper).unwrap()
            )]
        );
        assert_eq!(render_set(&k), "[0-1*sqrt(2),0+1*sqrt(2)]");
        assert_eq!(parse_set(&render_set(&k)).unwrap(), k);
        assert_eq!(parse_set("R").unwrap(), SemiAlgSet::line());
        assert_eq!(parse_set("(-inf,0] U [0,1]").unwrap().components(), &[Component::RayBelow(Endpoint::Rational(int(1)))]);
        assert!(parse_set("[0+1*sqrt(4),5]").is_err());
        assert!(parse_set("[2,1]").is_err());
        assert!(parse_set("[0,1] [2,3]").is_err());
        assert!(parse_set("(-inf,inf)").is_ok());
    }
}
