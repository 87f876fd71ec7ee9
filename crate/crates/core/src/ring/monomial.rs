//! Monomials in a fixed variable set under the standard grading, compared in
//! graded reverse lexicographic order.

use std::cmp::Ordering;

/// A monomial, stored as one exponent per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        Monomial { exps }
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Graded reverse lexicographic comparison: higher total degree wins;
    /// on equal degree the monomial whose trailing exponent difference is
    /// negative is the larger one.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                // smaller exponent in the last differing slot => larger monomial
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

/// Enumerates all monomials of total degree `d` in `nvars` variables,
/// in no particular order. Returns an empty list for negative `d`.
pub fn monomials_of_degree(nvars: usize, d: i64) -> Vec<Monomial> {
    if d < 0 {
        return Vec::new();
    }
    let d = d as u32;
    if nvars == 0 {
        return if d == 0 {
            vec![Monomial { exps: vec![] }]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, idx: usize, remaining: u32) {
    if idx == current.len() - 1 {
        current[idx] = remaining;
        out.push(Monomial {
            exps: current.clone(),
        });
        current[idx] = 0;
        return;
    }
    for e in 0..=remaining {
        current[idx] = e;
        fill(out, current, idx + 1, remaining - e);
    }
    current[idx] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial {
            exps: exps.to_vec(),
        }
    }

    #[test]
    fn grevlex_two_vars() {
        // x0^2 > x0*x1 > x1^2 in grevlex (last exponent smallest wins)
        assert_eq!(m(&[2, 0]).cmp_grevlex(&m(&[1, 1])), Ordering::Greater);
        assert_eq!(m(&[1, 1]).cmp_grevlex(&m(&[0, 2])), Ordering::Greater);
        assert_eq!(m(&[0, 2]).cmp_grevlex(&m(&[2, 0])), Ordering::Less);
        // degree dominates
        assert_eq!(m(&[0, 3]).cmp_grevlex(&m(&[2, 0])), Ordering::Greater);
    }

    #[test]
    fn grevlex_three_vars_classic() {
        // classic grevlex: x*z < y^2 (as in k[x,y,z], since the z-exponent
        // of x*z exceeds that of y^2)
        assert_eq!(m(&[1, 0, 1]).cmp_grevlex(&m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(2, 0).len(), 1);
        assert_eq!(monomials_of_degree(2, -1).len(), 0);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert_eq!(a.lcm(&b), m(&[2, 3]));
        assert!(m(&[1, 1]).divides(&a));
        assert_eq!(m(&[1, 1]).quotient_into(&a), m(&[1, 0]));
        assert!(m(&[2, 0]).coprime(&m(&[0, 3])));
        assert!(!a.coprime(&b));
    }
}
