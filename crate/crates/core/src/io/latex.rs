use num_traits::{One, Signed, Zero};

use crate::arith::{Polynomial, Rational};
use crate::certificate::Certificate;

pub fn rational_latex(q: &Rational) -> String {
    if q.is_integer() {
        q.to_string()
    } else {
        let sign = if q.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", q.numer().abs(), q.denom())
    }
}

pub fn poly_latex(p: &Polynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let a = c.abs();
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{{{k}}}"),
        };
        if k == 0 {
            out.push_str(&rational_latex(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&rational_latex(&a));
            out.push_str(&mono);
        }
    }
    out
}

fn factor(p: &Polynomial, var: &str) -> String {
    let body = poly_latex(p, var);
    if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || body.starts_with('-') {
        format!("\\left({body}\\right)")
    } else {
        body
    }
}

/// `f = sum_e sigma_e g^e` with explicit weights, one term per line.
pub fn certificate_latex(c: &Certificate) -> String {
    let var = c.variable.as_str();
    let mut lines = Vec::new();
    for (e, sos) in &c.terms {
        let gpart: String = e.indices().iter().map(|i| factor(&c.generators.gens[*i], var)).collect();
        for (w, q) in &sos.terms {
            let mut piece = rational_latex(w);
            if !q.is_constant() {
                piece.push_str(&format!("{}^{{2}}", factor(q, var)));
            } else if !q.leading_coefficient().is_one() {
                piece.push_str(&format!("\\cdot {}^{{2}}", rational_latex(&q.leading_coefficient())));
            }
            if !gpart.is_empty() {
                piece.push_str(&format!("\\,{gpart}"));
            }
            lines.push(piece);
        }
    }
    let rhs = if lines.is_empty() { "0".to_string() } else { lines.join(" \\\\\n  &\\quad + ") };
    format!("\\begin{{aligned}}\n  {} &= {}\n\\end{{aligned}}", poly_latex(&c.target, var), rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn renders() {
        let p = Polynomial::from_coeffs(vec![rat(2, 1), rat(-3, 1), rat(1, 2)]);
        assert_eq!(poly_latex(&p, "x"), "\\frac{1}{2}x^{2} - 3x + 2");
        assert_eq!(rational_latex(&rat(-5, 9)), "-\\frac{5}{9}");
    }
}
