//! Integer-coefficient polynomials: exact arithmetic, primitive-part gcd,
//! integer-root extraction and Sturm root counting.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact polynomial division, remainder {remainder}")]
    InexactDivision { remainder: String },
}

/// Dense integer polynomial, coefficients ascending by degree.
///
/// The coefficient vector never has trailing zeros; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::from_coeffs(vec![c])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPolynomial::from_i64(&[0, 1])
    }

    /// The linear factor x - r.
    pub fn x_minus(r: &BigInt) -> Self {
        IntPolynomial::from_coeffs(vec![-r.clone(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = IntPolynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Exact division: errors with the remainder if `divisor` does not divide
    /// `self` over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let mut rem = self.coeffs.clone();
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree();
        if rem.len() < divisor.coeffs.len() {
            return Err(PolyError::InexactDivision {
                remainder: self.to_string(),
            });
        }
        let qlen = rem.len() - ddeg;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = rem[k + ddeg].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&dlead);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision {
                    remainder: IntPolynomial::from_coeffs(rem).to_string(),
                });
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        let remainder = IntPolynomial::from_coeffs(rem);
        if !remainder.is_zero() {
            return Err(PolyError::InexactDivision {
                remainder: remainder.to_string(),
            });
        }
        Ok(IntPolynomial::from_coeffs(quot))
    }

    /// Gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content and normalizes the leading coefficient to be
    /// positive. Zero stays zero.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let g = self.content();
        let mut p = IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c / &g).collect());
        if p.leading().unwrap().is_negative() {
            p = p.neg();
        }
        p
    }

    /// Primitive-part Euclidean gcd, leading coefficient positive. Monic
    /// whenever a monic integer gcd exists (in particular for monic inputs);
    /// nonzero constants normalize to 1.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Product of the distinct irreducible factors: self / gcd(self, self').
    /// Intended for monic (or at least primitive) polynomials.
    pub fn squarefree_part(&self) -> Self {
        if self.degree() == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd(p, p') divides p")
    }

    /// Strips all integer roots with multiplicity. Requires a monic nonzero
    /// polynomial. Returns the roots sorted ascending and the residual factor
    /// (monic, no integer roots); `residual * prod (x - r)^m == self`.
    pub fn integer_roots(&self) -> (Vec<(BigInt, usize)>, IntPolynomial) {
        assert!(self.is_monic(), "integer_roots requires a monic polynomial");
        let mut roots: Vec<(BigInt, usize)> = Vec::new();
        let mut p = self.clone();

        // x-factors first so the constant term below is nonzero.
        let zero_mult = p.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zero_mult > 0 && zero_mult <= p.degree() {
            p = IntPolynomial::from_coeffs(p.coeffs[zero_mult..].to_vec());
            roots.push((BigInt::zero(), zero_mult));
        }

        if p.degree() > 0 {
            let constant = p.coeff(0);
            let bound = fujiwara_root_bound(&p);
            let mut magnitude = BigInt::one();
            while magnitude <= bound && p.degree() > 0 {
                for sign in [-1i64, 1] {
                    let r = &magnitude * BigInt::from(sign);
                    if !constant.is_multiple_of(&r) {
                        continue;
                    }
                    let mut mult = 0usize;
                    while p.degree() > 0 && p.eval(&r).is_zero() {
                        p = p.div_exact(&IntPolynomial::x_minus(&r)).unwrap();
                        mult += 1;
                    }
                    if mult > 0 {
                        roots.push((r, mult));
                    }
                }
                magnitude += 1;
            }
        }

        roots.sort_by(|a, b| a.0.cmp(&b.0));
        (roots, p)
    }

    /// Decimal coefficient strings, ascending degree.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Factored display with integer roots ascending and any residual factor
    /// last, e.g. `x(x-1)^2(x-3)^2(x-4)`. Requires a monic polynomial.
    pub fn factored(&self) -> String {
        let (roots, residual) = self.integer_roots();
        if roots.is_empty() && residual.degree() == 0 {
            return residual.to_string();
        }
        let mut out = String::new();
        for (r, mult) in &roots {
            if r.is_zero() {
                out.push('x');
            } else if r.is_negative() {
                out.push_str(&format!("(x+{})", -r));
            } else {
                out.push_str(&format!("(x-{r})"));
            }
            if *mult > 1 {
                out.push_str(&format!("^{mult}"));
            }
        }
        if residual.degree() > 0 {
            out.push_str(&format!("({residual})"));
        }
        out
    }
}

/// Pseudo-remainder of a by b: a scaled by a power of lc(b) and reduced mod b.
/// Only meaningful up to content, which is what the gcd loop uses.
fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    assert!(!b.is_zero());
    if b.degree() == 0 {
        return IntPolynomial::zero();
    }
    if a.degree() < b.degree() {
        return a.clone();
    }
    let dlead = b.leading().unwrap().clone();
    let mut rem = a.clone();
    while !rem.is_zero() && rem.degree() >= b.degree() {
        let shift = rem.degree() - b.degree();
        let top = rem.leading().unwrap().clone();
        rem = rem.mul_scalar(&dlead);
        let mut sub = vec![BigInt::zero(); shift];
        sub.extend(b.coeffs.iter().map(|c| c * &top));
        rem = rem.sub(&IntPolynomial::from_coeffs(sub));
    }
    rem
}

/// Fujiwara bound on the magnitude of any root of a monic polynomial:
/// 2 * max_k |a_{d-k}|^(1/k), rounded up.
fn fujiwara_root_bound(p: &IntPolynomial) -> BigInt {
    let d = p.degree();
    let mut bound = BigInt::zero();
    for k in 1..=d {
        let a = p.coeff(d - k).abs();
        if a.is_zero() {
            continue;
        }
        // ceil(|a|^(1/k)): nth_root floors, so bump by one.
        let root = a.nth_root(k as u32) + 1;
        if root > bound {
            bound = root;
        }
    }
    bound * 2
}

/// Number of distinct real roots of `p` in the half-open interval (lo, hi],
/// via a Sturm chain with exact rational arithmetic. `p` must be nonzero.
pub fn count_roots_in_halfopen(p: &IntPolynomial, lo: i64, hi: i64) -> usize {
    assert!(!p.is_zero());
    assert!(lo <= hi);
    if p.degree() == 0 || lo == hi {
        return 0;
    }
    let to_rat = |q: &IntPolynomial| -> Vec<BigRational> {
        q.coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    };
    let mut chain: Vec<Vec<BigRational>> = vec![to_rat(p), to_rat(&p.derivative())];
    loop {
        let len = chain.len();
        let r = rat_poly_rem(&chain[len - 2], &chain[len - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.iter().map(|c| -c).collect());
    }
    let variations = |x: i64| -> usize {
        let x = BigRational::from_integer(BigInt::from(x));
        let mut count = 0;
        let mut last: Option<bool> = None;
        for q in &chain {
            let v = rat_poly_eval(q, &x);
            if v.is_zero() {
                continue;
            }
            let s = v.is_negative();
            if let Some(prev) = last {
                if prev != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    };
    variations(lo) - variations(hi)
}

fn rat_poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    assert!(!b.is_empty());
    let mut rem: Vec<BigRational> = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    while rem.len() > db {
        let top = rem.last().unwrap().clone();
        if top.is_zero() {
            rem.pop();
            continue;
        }
        let factor = top / lead;
        let shift = rem.len() - 1 - db;
        for (i, c) in b.iter().enumerate() {
            let v = &factor * c;
            rem[shift + i] -= v;
        }
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        if db == 0 {
            return Vec::new();
        }
    }
    rem
}

fn rat_poly_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

impl fmt::Display for IntPolynomial {
    /// Compact form with descending powers, e.g. `x^3-6x^2+9x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}
