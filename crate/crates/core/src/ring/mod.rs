//! The graded polynomial ring S = k[x₀,…,x_n] with the standard grading:
//! exact fields, monomials in grevlex order, homogeneous polynomials, and
//! twisted free modules.

mod field;
mod free;
mod monomial;
mod poly;

pub use field::{Field, FieldElem};
pub use free::{entry_degree_check, lead_term, FreeModule, ModOrder, ModTerm, ModVec};
pub use monomial::{monomials_of_degree, Monomial};
pub use poly::{GradedPoly, Term};

use std::fmt;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    field: Field,
    vars: Vec<String>,
}

/// Ring descriptor shared by every value built over it. Cloning is cheap.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingData>);

impl Ring {
    pub fn new(field: Field, vars: Vec<String>) -> Self {
        Ring(Arc::new(RingData { field, vars }))
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field(), self.vars().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Ring {
        Ring::new(Field::Fp(32003), vec!["x0".into(), "x1".into()])
    }

    #[test]
    fn parse_homogeneous() {
        let r = ring2();
        let p = r.parse_poly("x0^2 + x0*x1").unwrap();
        assert_eq!(p.terms.len(), 2);
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn parse_cancellation() {
        let r = ring2();
        let p = r.parse_poly("x0 - x0").unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn parse_inhomogeneous() {
        let r = ring2();
        let p = r.parse_poly("3*x0*x1^2 + 2").unwrap();
        assert!(!p.is_homogeneous());
        assert_eq!(p.terms.len(), 2);
    }

    #[test]
    fn parse_errors() {
        let r = ring2();
        match r.parse_poly("x0 + y") {
            Err(crate::error::Error::UnknownVariable { name, pos }) => {
                assert_eq!(name, "y");
                assert_eq!(pos, 5);
            }
            other => panic!("expected unknown variable, got {other:?}"),
        }
        assert!(r.parse_poly("x0 +").is_err());
        assert!(r.parse_poly("").is_err());
    }

    #[test]
    fn difference_of_squares() {
        let r = ring2();
        let a = r.parse_poly("x0 + x1").unwrap();
        let b = r.parse_poly("x0 - x1").unwrap();
        let prod = r.poly_mul(&a, &b);
        assert_eq!(prod, r.parse_poly("x0^2 - x1^2").unwrap());
    }

    #[test]
    fn add_zero_identity() {
        let r = ring2();
        let a = r.parse_poly("x0^3 + 2*x0*x1^2").unwrap();
        assert_eq!(r.poly_add(&a, &r.poly_zero()), a);
    }

    #[test]
    fn char_two_freshman_dream() {
        let r = Ring::new(Field::Fp(2), vec!["x0".into(), "x1".into()]);
        let a = r.parse_poly("x0 + x1").unwrap();
        let sq = r.poly_mul(&a, &a);
        // oracle: (x0+x1)^2 = x0^2 + 2*x0*x1 + x1^2 ≡ x0^2 + x1^2 mod 2
        assert_eq!(sq, r.parse_poly("x0^2 + x1^2").unwrap());
    }

    #[test]
    fn print_parse_round_trip() {
        let r = ring2();
        for text in ["x0^2 - x1^2", "x0*x1", "2*x0^3 + x0*x1^2 - 5", "0"] {
            let p = r.parse_poly(text).unwrap();
            let back = r.parse_poly(&r.poly_format(&p)).unwrap();
            assert_eq!(p, back, "round trip failed for {text}");
        }
    }
}
