//! Exact integer polynomials.
//!
//! Everything here runs over arbitrary-precision integers: arithmetic,
//! primitive-part gcd via sign-corrected pseudo-remainders, Yun's square-free
//! decomposition, and Sturm chains for counting distinct real roots in open
//! intervals with integer endpoints. No floating point is involved, so the
//! results are verdict-grade.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Univariate polynomial over the integers.
///
/// Coefficients are stored ascending by power; the zero polynomial has an
/// empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> IntPoly {
        IntPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// `x - c`.
    pub fn x_minus(c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(vec![-c.clone(), BigInt::one()])
    }

    /// Builds from ascending coefficients, trimming leading zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - other.coeff(k)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
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
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> IntPoly {
        if s.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut out = IntPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn derivative(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Exact division; `None` if `divisor` does not divide `self` over ℤ.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dn = self.degree().expect("nonzero");
        if dn < dd {
            return None;
        }
        let lead = divisor.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let (q, r) = rem[k + dd].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * c;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc = acc.gcd(c);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    /// Divides out the positive content; coefficient signs are preserved, so
    /// the value's sign at any point matches the original.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    /// Pseudo-remainder of `self` by `divisor`, scaled so that it equals the
    /// true polynomial remainder times a *positive* rational constant. This is
    /// what keeps Sturm sign sequences honest over the integers.
    pub fn signed_pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().expect("nonzero").clone();
        let mut r = self.clone();
        let mut negated = false;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            // r <- lead·r − lc(r)·x^(dr−dd)·divisor, cancelling the top term
            let top = r.coeffs[dr].clone();
            let mut next = vec![BigInt::zero(); dr];
            for (k, c) in r.coeffs.iter().enumerate().take(dr) {
                next[k] = c * &lead;
            }
            for (i, c) in divisor.coeffs.iter().enumerate().take(dd) {
                next[dr - dd + i] -= &top * c;
            }
            r = IntPoly::from_coeffs(next);
            if lead.is_negative() {
                negated = !negated;
            }
        }
        if negated {
            r.neg()
        } else {
            r
        }
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        while !b.is_zero() {
            let r = a.signed_pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.leading().is_some_and(|c| c.is_negative()) {
            a = a.neg();
        }
        a
    }

    /// Coefficients as decimal strings, ascending by power.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Serialized as the ascending coefficient array in decimal strings, so
/// arbitrary-precision values survive JSON intact.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(serializer)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
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
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Yun's square-free decomposition of a monic polynomial:
/// `p = Π factor_i ^ mult_i` with square-free, pairwise-coprime, monic
/// factors and strictly increasing multiplicities.
pub fn yun_square_free(p: &IntPoly) -> Vec<(IntPoly, u32)> {
    assert!(p.is_monic(), "square-free decomposition expects a monic input");
    if p.degree() == Some(0) {
        return Vec::new();
    }
    let dp = p.derivative();
    let g = p.gcd(&dp);
    if g.degree() == Some(0) {
        return vec![(p.clone(), 1)];
    }
    // Factors of a monic integer polynomial are monic, so every division
    // below is exact over ℤ.
    let mut a = p.div_exact(&g).expect("gcd divides p");
    let mut b = dp.div_exact(&g).expect("gcd divides p'");
    let mut out = Vec::new();
    let mut mult = 1u32;
    loop {
        let c = b.sub(&a.derivative());
        if c.is_zero() {
            if a.degree().is_some_and(|d| d > 0) {
                out.push((a, mult));
            }
            break;
        }
        let d = a.gcd(&c);
        if d.degree().is_some_and(|deg| deg > 0) {
            out.push((d.clone(), mult));
        }
        a = a.div_exact(&d).expect("d divides a");
        b = c.div_exact(&d).expect("d divides c");
        mult += 1;
        if a.degree() == Some(0) {
            break;
        }
    }
    out
}

/// Sturm chain of a nonzero polynomial. Counts distinct real roots in open
/// intervals whose integer endpoints are not themselves roots.
pub struct SturmChain {
    seq: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> SturmChain {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let p0 = p.primitive_part();
        let p1 = p0.derivative().primitive_part();
        let mut seq = vec![p0];
        if !p1.is_zero() {
            seq.push(p1);
        }
        loop {
            let m = seq.len();
            if m < 2 || seq[m - 1].degree() == Some(0) {
                break;
            }
            let r = seq[m - 2].signed_pseudo_rem(&seq[m - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.neg().primitive_part());
        }
        SturmChain { seq }
    }

    /// Number of sign changes in the chain evaluated at `x` (zeros skipped).
    pub fn sign_variations_at(&self, x: &BigInt) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in &self.seq {
            let v = p.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Distinct real roots in the open interval `(a, b)`.
    /// Requires `a < b` and that neither endpoint is a root.
    pub fn count_roots_open(&self, a: &BigInt, b: &BigInt) -> usize {
        assert!(a < b, "empty interval");
        assert!(
            !self.seq[0].eval(a).is_zero() && !self.seq[0].eval(b).is_zero(),
            "endpoint roots must be divided out before Sturm counting"
        );
        let va = self.sign_variations_at(a);
        let vb = self.sign_variations_at(b);
        assert!(va >= vb, "sign variations must not increase left to right");
        va - vb
    }
}
