use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::word_enum::counts::count_t;

/// Largest total degree accepted by [`verify_f_equation`].
pub const SERIES_GUARD: usize = 8;

/// Which form of the functional equation to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionalEquation {
    /// `H = 1 + yH + xyH² / (1 − yF(xy, 0))` with `H(x, y) = F(xy, y)`.
    Published,
    /// `A = 1 + yA + xA·(aA(x, a) − yA(x, y)) / (a − y)` with
    /// `A(x, y) = F(x, y)` and `a = xF(x, 0)`.
    Decomposition,
}

/// A truncated bivariate series in `x, y` keeping monomials `x^i y^j` with
/// `wx·i + wy·j ≤ max`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Series {
    wx: usize,
    wy: usize,
    max: usize,
    c: BTreeMap<(usize, usize), BigUint>,
}

impl Series {
    fn zero(wx: usize, wy: usize, max: usize) -> Self {
        Series {
            wx,
            wy,
            max,
            c: BTreeMap::new(),
        }
    }

    fn fits(&self, i: usize, j: usize) -> bool {
        self.wx * i + self.wy * j <= self.max
    }

    fn monomial(&self, i: usize, j: usize) -> Self {
        let mut s = Series::zero(self.wx, self.wy, self.max);
        s.add_term(i, j, BigUint::from(1u32));
        s
    }

    fn add_term(&mut self, i: usize, j: usize, v: BigUint) {
        if self.fits(i, j) && !v.is_zero() {
            *self.c.entry((i, j)).or_default() += v;
        }
    }

    fn coeff(&self, i: usize, j: usize) -> BigUint {
        self.c.get(&(i, j)).cloned().unwrap_or_default()
    }

    fn add(&self, other: &Series) -> Series {
        let mut s = self.clone();
        for (&(i, j), v) in &other.c {
            s.add_term(i, j, v.clone());
        }
        s
    }

    fn mul(&self, other: &Series) -> Series {
        let mut s = Series::zero(self.wx, self.wy, self.max);
        for (&(i, j), u) in &self.c {
            for (&(k, l), v) in &other.c {
                s.add_term(i + k, j + l, u * v);
            }
        }
        s
    }

    fn one(&self) -> Series {
        self.monomial(0, 0)
    }

    fn pow(&self, e: usize) -> Series {
        (0..e).fold(self.one(), |acc, _| acc.mul(self))
    }

    /// `1 / (1 − self)` for a series without constant term.
    fn geometric(&self) -> Series {
        assert!(
            self.coeff(0, 0).is_zero(),
            "geometric series needs no constant term"
        );
        let mut total = self.one();
        let mut power = self.one();
        for _ in 0..self.max {
            power = power.mul(self);
            total = total.add(&power);
        }
        total
    }
}

/// A coefficient where the two sides differ. `n, m` index `T(n, m)` in
/// `F = Σ T(n, m) xⁿ yᵐ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    pub m: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FEquationReport {
    pub form: FunctionalEquation,
    pub degree: usize,
    pub holds: bool,
    pub first_mismatch: Option<Mismatch>,
    /// `(n, m, T(n, m))` for `2n + m ≤ degree`, from enumeration.
    pub t: Vec<(usize, usize, String)>,
}

/// Enumerates `T(n, m)` for `2n + m ≤ degree` and checks the chosen form of
/// the equation coefficientwise up to that total degree.
/// Turns a series exponent pair back into `(n, m)`.
type IndexMap = fn(usize, usize) -> (usize, usize);

pub fn verify_f_equation(degree: usize, form: FunctionalEquation) -> Result<FEquationReport> {
    if degree > SERIES_GUARD {
        return Err(Error::Guard(format!(
            "degree {degree} exceeds the enumeration limit of {SERIES_GUARD}"
        )));
    }
    let mut t = BTreeMap::new();
    for n in 0..=degree / 2 {
        for m in 0..=degree - 2 * n {
            t.insert((n, m), count_t(n, m)?);
        }
    }
    let (lhs, rhs, to_nm): (Series, Series, IndexMap) = match form {
        FunctionalEquation::Published => {
            // H = Σ T x^n y^(n+m), truncated by total degree in x and y.
            let mut h = Series::zero(1, 1, degree);
            let mut h0 = Series::zero(1, 1, degree);
            for (&(n, m), v) in &t {
                h.add_term(n, n + m, v.clone());
                if m == 0 {
                    h0.add_term(n, n, v.clone());
                }
            }
            let y = h.monomial(0, 1);
            let xy = h.monomial(1, 1);
            let rhs = h
                .one()
                .add(&y.mul(&h))
                .add(&xy.mul(&h.pow(2)).mul(&y.mul(&h0).geometric()));
            (h, rhs, |i, j| (i, j - i))
        }
        FunctionalEquation::Decomposition => {
            // A = Σ T x^n y^m with x of weight 2 and y of weight 1.
            let mut a_series = Series::zero(2, 1, degree);
            let mut b = Series::zero(2, 1, degree);
            for (&(n, m), v) in &t {
                a_series.add_term(n, m, v.clone());
                if m == 0 {
                    b.add_term(n, 0, v.clone());
                }
            }
            let x = a_series.monomial(1, 0);
            let y = a_series.monomial(0, 1);
            let a = x.mul(&b);
            let a_powers: Vec<Series> = (0..=degree).map(|i| a.pow(i)).collect();
            // (a·A(x, a) − y·A(x, y)) / (a − y) = Σ T x^n Σ_{i ≤ m} a^i y^(m−i)
            let mut q = Series::zero(2, 1, degree);
            for (&(n, m), v) in &t {
                for (i, ai) in a_powers.iter().enumerate().take(m + 1) {
                    let mut term = ai.mul(&a_series.monomial(n, m - i));
                    for c in term.c.values_mut() {
                        *c *= v;
                    }
                    q = q.add(&term);
                }
            }
            let rhs = a_series
                .one()
                .add(&y.mul(&a_series))
                .add(&x.mul(&a_series).mul(&q));
            (a_series, rhs, |i, j| (i, j))
        }
    };
    let mut keys: Vec<(usize, usize)> = lhs.c.keys().chain(rhs.c.keys()).copied().collect();
    keys.sort_by_key(|&(i, j)| (lhs.wx * i + lhs.wy * j, i, j));
    keys.dedup();
    let first_mismatch = keys.into_iter().find_map(|(i, j)| {
        let (l, r) = (lhs.coeff(i, j), rhs.coeff(i, j));
        (l != r).then(|| {
            let (n, m) = to_nm(i, j);
            Mismatch {
                n,
                m,
                lhs: l.to_string(),
                rhs: r.to_string(),
            }
        })
    });
    Ok(FEquationReport {
        form,
        degree,
        holds: first_mismatch.is_none(),
        first_mismatch,
        t: t.into_iter()
            .map(|((n, m), v)| (n, m, v.to_string()))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposition_form_holds() {
        for d in 0..=8 {
            let r = verify_f_equation(d, FunctionalEquation::Decomposition).unwrap();
            assert!(r.holds, "degree {d}: {:?}", r.first_mismatch);
        }
    }

    #[test]
    fn published_form_first_mismatch() {
        assert!(
            verify_f_equation(2, FunctionalEquation::Published)
                .unwrap()
                .holds
        );
        let r = verify_f_equation(6, FunctionalEquation::Published).unwrap();
        assert_eq!(
            r.first_mismatch,
            Some(Mismatch {
                n: 1,
                m: 1,
                lhs: "3".into(),
                rhs: "4".into()
            })
        );
    }

    #[test]
    fn guard() {
        assert!(matches!(
            verify_f_equation(9, FunctionalEquation::Published),
            Err(Error::Guard(_))
        ));
    }

    #[test]
    fn series_geometric() {
        let s = Series::zero(1, 1, 4);
        let y = s.monomial(0, 1);
        let g = y.geometric();
        for j in 0..=4 {
            assert_eq!(g.coeff(0, j), BigUint::from(1u32));
        }
    }
}
