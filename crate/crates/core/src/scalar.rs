//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{d-1}` with `d = φ(N)`.
//! Coefficients are arbitrary-precision rationals, so every value is kept in
//! canonical form and equality is plain coefficientwise comparison.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The cyclotomic field `Q(ζ_N)`.
#[derive(Debug)]
pub struct CycloField {
    order: usize,
    degree: usize,
    /// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
    min_poly: Vec<BigInt>,
    /// `powers[k]` holds `ζ^k` in the power basis for `0 <= k < N`.
    powers: Vec<Vec<BigRational>>,
}

/// Integer polynomial `x^n - 1 = prod_{d | n} Φ_d(x)`, solved for `Φ_n` by exact division.
fn cyclotomic_poly(n: usize) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = -BigInt::one();
    num[n] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = &den[dd];
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / lead;
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

impl CycloField {
    /// Builds `Q(ζ_N)`. `N = 1` and `N = 2` both give `Q`.
    pub fn new(order: usize) -> Result<Arc<Self>> {
        if order == 0 {
            return Err(Error::Field("cyclotomic order must be positive".into()));
        }
        let min_poly = cyclotomic_poly(order);
        let degree = min_poly.len() - 1;
        let mut powers = Vec::with_capacity(order);
        let mut cur = vec![BigRational::zero(); degree];
        cur[0] = BigRational::one();
        for _ in 0..order {
            powers.push(cur.clone());
            cur = Self::shift_reduce(&min_poly, &cur);
        }
        // ζ^N must come back to 1.
        let mut one = vec![BigRational::zero(); degree];
        one[0] = BigRational::one();
        if cur != one {
            return Err(Error::Field(format!(
                "reduction table for order {order} failed the ζ^N = 1 check"
            )));
        }
        Ok(Arc::new(CycloField {
            order,
            degree,
            min_poly,
            powers,
        }))
    }

    /// Multiplies a reduced element by ζ and reduces again.
    fn shift_reduce(min_poly: &[BigInt], v: &[BigRational]) -> Vec<BigRational> {
        let d = v.len();
        let top = v[d - 1].clone();
        let mut out = vec![BigRational::zero(); d];
        for i in (1..d).rev() {
            out[i] = v[i - 1].clone();
        }
        if !top.is_zero() {
            // ζ^d = -(c_0 + c_1 ζ + … + c_{d-1} ζ^{d-1}) since Φ_N is monic.
            for (i, c) in min_poly.iter().take(d).enumerate() {
                out[i] -= &top * BigRational::from_integer(c.clone());
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    /// `ζ^k` in the power basis.
    pub fn power_coeffs(&self, k: usize) -> &[BigRational] {
        &self.powers[k % self.order]
    }

    pub fn zero(self: &Arc<Self>) -> CycloScalar {
        CycloScalar {
            field: Arc::clone(self),
            coeffs: vec![BigRational::zero(); self.degree],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycloScalar {
        self.from_rational(BigRational::one())
    }

    pub fn from_int(self: &Arc<Self>, v: i64) -> CycloScalar {
        self.from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_frac(self: &Arc<Self>, num: i64, den: i64) -> CycloScalar {
        self.from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(self: &Arc<Self>, q: BigRational) -> CycloScalar {
        let mut s = self.zero();
        s.coeffs[0] = q;
        s
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> CycloScalar {
        let k = k.rem_euclid(self.order as i64) as usize;
        CycloScalar {
            field: Arc::clone(self),
            coeffs: self.powers[k].clone(),
        }
    }

    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<BigRational>) -> Result<CycloScalar> {
        if coeffs.len() != self.degree {
            return Err(Error::Field(format!(
                "expected {} coefficients for Q(ζ_{}), got {}",
                self.degree,
                self.order,
                coeffs.len()
            )));
        }
        Ok(CycloScalar {
            field: Arc::clone(self),
            coeffs,
        })
    }

    /// Parses the power-basis text form `["p/q", …]` of length `φ(N)`.
    pub fn parse_coeffs<S: AsRef<str>>(self: &Arc<Self>, parts: &[S]) -> Result<CycloScalar> {
        let coeffs = parts
            .iter()
            .map(|p| parse_rational(p.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.from_coeffs(coeffs)
    }
}

impl Eq for CycloField {}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct CycloScalar {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl CycloScalar {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// The integer value, if the element is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(
            self.field.order, other.field.order,
            "mixing scalars from Q(ζ_{}) and Q(ζ_{})",
            self.field.order, other.field.order
        );
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        CycloScalar {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(self.field.from_rational(q.recip()));
        }
        // Solve (multiplication-by-self) · x = 1 over Q.
        let d = self.field.degree;
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(d);
        for k in 0..d {
            let basis = CycloScalar {
                field: Arc::clone(&self.field),
                coeffs: self.field.powers[k].clone(),
            };
            cols.push((self * &basis).coeffs);
        }
        // Augmented system, row-major: a[i][j] = cols[j][i].
        let mut a: Vec<Vec<BigRational>> = (0..d)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..d).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                row
            })
            .collect();
        for c in 0..d {
            let p = (c..d).find(|&r| !a[r][c].is_zero())?;
            a.swap(c, p);
            let piv = a[c][c].recip();
            for v in a[c].iter_mut() {
                *v *= &piv;
            }
            for r in 0..d {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    for j in c..=d {
                        let t = &f * &a[c][j];
                        a[r][j] -= t;
                    }
                }
            }
        }
        Some(CycloScalar {
            field: Arc::clone(&self.field),
            coeffs: a.into_iter().map(|mut row| row.pop().unwrap()).collect(),
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// A square root inside the field, if one can be exhibited.
    ///
    /// Only rational radicands are handled: the square-free part is assembled
    /// from quadratic Gauss sums and `√-1`, `√2` when the field contains them.
    pub fn sqrt(&self) -> Option<Self> {
        let q = self.as_rational()?.clone();
        if q.is_zero() {
            return Some(self.clone());
        }
        // q = s^2 * m with m a square-free integer.
        let (sn, mn) = square_split(q.numer());
        let (sd, md) = square_split(q.denom());
        // 1/md = md / md^2
        let m = &mn * &md;
        let s = BigRational::new(sn, sd * &md);
        let root_m = self.field.sqrt_squarefree(&m)?;
        let r = root_m.scale_rational(&s);
        debug_assert!(&(&r * &r) == self);
        Some(r)
    }
}

/// Writes `|n| = s^2 * m` with `m` square-free, returning `(s, sign(n) * m)`.
fn square_split(n: &BigInt) -> (BigInt, BigInt) {
    let neg = n.is_negative();
    let mut rest = n.abs();
    let mut s = BigInt::one();
    let mut m = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            s *= &p;
        }
        if e % 2 == 1 {
            m *= &p;
        }
        p += 1;
    }
    if !rest.is_one() {
        // rest is prime or a perfect square of a prime beyond the loop bound
        let r = rest.sqrt();
        if &r * &r == rest {
            s *= r;
        } else {
            m *= rest;
        }
    }
    if neg {
        m = -m;
    }
    (s, m)
}

impl CycloField {
    fn sqrt_squarefree(self: &Arc<Self>, m: &BigInt) -> Option<CycloScalar> {
        let mut acc = self.one();
        let mut target = m.clone();
        if target.is_negative() {
            target = -target;
            acc = &acc * &self.sqrt_minus_one()?;
        }
        let mut rest = target;
        let mut p = 2u64;
        while !rest.is_one() {
            let bp = BigInt::from(p);
            if rest.is_multiple_of(&bp) {
                rest /= &bp;
                acc = &acc * &self.sqrt_prime(p)?;
            }
            p += 1;
            if BigInt::from(p) > rest && !rest.is_one() {
                // remaining factor is a prime larger than the loop variable
                let pr: u64 = rest.clone().try_into().ok()?;
                acc = &acc * &self.sqrt_prime(pr)?;
                break;
            }
        }
        Some(acc)
    }

    fn sqrt_minus_one(self: &Arc<Self>) -> Option<CycloScalar> {
        if self.order.is_multiple_of(4) {
            Some(self.zeta_pow((self.order / 4) as i64))
        } else {
            None
        }
    }

    /// `√p` for a prime `p`, via Gauss sums for odd `p` and `ζ_8 + ζ_8^{-1}` for `p = 2`.
    fn sqrt_prime(self: &Arc<Self>, p: u64) -> Option<CycloScalar> {
        let n = self.order as u64;
        if p == 2 {
            if !n.is_multiple_of(8) {
                return None;
            }
            let k = (n / 8) as i64;
            return Some(&self.zeta_pow(k) + &self.zeta_pow(-k));
        }
        if !n.is_multiple_of(p) {
            return None;
        }
        let step = (n / p) as i64;
        let mut g = self.zero();
        for a in 1..p {
            let leg = if (1..p).any(|x| (x * x) % p == a) { 1 } else { -1 };
            let t = self.zeta_pow(step * a as i64);
            g = if leg == 1 { &g + &t } else { &g - &t };
        }
        // g^2 = p* = (-1)^((p-1)/2) p
        if p % 4 == 1 {
            Some(g)
        } else {
            let i = self.sqrt_minus_one()?;
            // g = √(-p) = i √p  =>  √p = -i g
            Some(-(&i * &g))
        }
    }
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycloScalar {}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = format_rational(c);
            terms.push(match k {
                0 => cs,
                _ => {
                    let z = if k == 1 {
                        "ζ".to_string()
                    } else {
                        format!("ζ^{k}")
                    };
                    if c.is_one() {
                        z
                    } else if (-c).is_one() {
                        format!("-{z}")
                    } else {
                        format!("{cs}{z}")
                    }
                }
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

impl<'a> Add<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        self.check_field(rhs);
        CycloScalar {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self.check_field(rhs);
        CycloScalar {
            field: Arc::clone(&self.field),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        -&self
    }
}

impl<'a> Mul<&'a CycloScalar> for &'a CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        self.check_field(rhs);
        let d = self.field.degree;
        if d == 1 {
            return CycloScalar {
                field: Arc::clone(&self.field),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        let mut coeffs: Vec<BigRational> = raw[..d].to_vec();
        for (k, c) in raw.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (t, z) in self.field.power_coeffs(k).iter().enumerate() {
                if !z.is_zero() {
                    coeffs[t] += c * z;
                }
            }
        }
        CycloScalar {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }
}

impl AddAssign<&CycloScalar> for CycloScalar {
    fn add_assign(&mut self, rhs: &CycloScalar) {
        self.check_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&CycloScalar> for CycloScalar {
    fn sub_assign(&mut self, rhs: &CycloScalar) {
        self.check_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Add for CycloScalar {
    type Output = CycloScalar;
    fn add(mut self, rhs: CycloScalar) -> CycloScalar {
        self += &rhs;
        self
    }
}

impl Sub for CycloScalar {
    type Output = CycloScalar;
    fn sub(mut self, rhs: CycloScalar) -> CycloScalar {
        self -= &rhs;
        self
    }
}

impl Mul for CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: CycloScalar) -> CycloScalar {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Expands `prod (x - ζ^k)` for primitive k symbolically is awkward; instead
    /// compare against the textbook polynomials.
    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn field_new_reduction_tables() {
        let q = CycloField::new(1).unwrap();
        assert_eq!(q.degree(), 1);
        let f4 = CycloField::new(4).unwrap();
        assert_eq!(f4.degree(), 2);
        assert_eq!(f4.zeta_pow(2), f4.from_int(-1));
        let f3 = CycloField::new(3).unwrap();
        assert_eq!(f3.degree(), 2);
        let expect = &(-&f3.one()) - &f3.zeta_pow(1);
        assert_eq!(f3.zeta_pow(2), expect);
        assert!(CycloField::new(0).is_err());
    }

    #[test]
    fn inverse_and_display() {
        let f = CycloField::new(3).unwrap();
        let a = &f.from_int(2) + &f.zeta_pow(1);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        assert!(f.zero().inv().is_none());
        assert_eq!(format!("{}", f.zeta_pow(2)), "-1 - ζ");
    }

    #[test]
    fn square_roots() {
        let f = CycloField::new(12).unwrap();
        for v in [4i64, -1, 3, -3, 12, -27] {
            let x = f.from_int(v);
            let r = x.sqrt().expect("root exists in Q(ζ12)");
            assert_eq!(&r * &r, x);
        }
        let q = CycloField::new(1).unwrap();
        assert!(q.from_int(2).sqrt().is_none());
        assert_eq!(q.from_frac(9, 4).sqrt().unwrap(), q.from_frac(3, 2));
        let f8 = CycloField::new(8).unwrap();
        let r = f8.from_int(2).sqrt().unwrap();
        assert_eq!(&r * &r, f8.from_int(2));
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(format_rational(&parse_rational("6/-4").unwrap()), "-3/2");
        assert_eq!(format_rational(&parse_rational(" 7 ").unwrap()), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
