//! Coefficient rings for exact series arithmetic.
//!
//! The series and jet engines are generic over [`Coeff`] so the same code
//! runs over `BigInt` (hot integer paths), `BigRational` (prefactor
//! bookkeeping with denominators dividing powers of 2 and 24), and
//! [`GaussRat`] (Gaussian rationals, for assembling θ- and ψ-pieces that
//! carry a factor of `i`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact coefficient ring.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(k: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiply by a small integer (binomial factors in jet products).
    fn mul_i64(&self, k: i64) -> Self;
    fn add_assign(&mut self, rhs: &Self);
    fn sub_assign(&mut self, rhs: &Self);
    /// `self += a * b`, the inner-loop primitive of series multiplication.
    fn add_mul_assign(&mut self, a: &Self, b: &Self);
    /// Multiplicative inverse, if this element is a unit.
    fn inv(&self) -> Option<Self>;
    /// A zero of the same shape as `self` (jets carry a dynamic order, so
    /// series internals derive zeros from an existing coefficient).
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn one() -> Self {
        <BigInt as One>::one()
    }
    fn from_i64(k: i64) -> Self {
        BigInt::from(k)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn mul_i64(&self, k: i64) -> Self {
        self * k
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn inv(&self) -> Option<Self> {
        if self.is_one() || (-self).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(k: i64) -> Self {
        BigRational::from_integer(BigInt::from(k))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn mul_i64(&self, k: i64) -> Self {
        self * BigRational::from_integer(BigInt::from(k))
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Gaussian rational `re + i·im` with exact rational parts.
#[derive(Clone, PartialEq, Debug)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussRat {
            re,
            im: <BigRational as Zero>::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat {
            re: <BigRational as Zero>::zero(),
            im: <BigRational as One>::one(),
        }
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Coeff::one(),
            1 => GaussRat::i(),
            2 => Coeff::neg(&Coeff::one()),
            _ => Coeff::neg(&GaussRat::i()),
        }
    }
}

impl Coeff for GaussRat {
    fn zero() -> Self {
        GaussRat {
            re: <BigRational as Zero>::zero(),
            im: <BigRational as Zero>::zero(),
        }
    }
    fn one() -> Self {
        GaussRat {
            re: <BigRational as One>::one(),
            im: <BigRational as Zero>::zero(),
        }
    }
    fn from_i64(k: i64) -> Self {
        GaussRat {
            re: Coeff::from_i64(k),
            im: <BigRational as Zero>::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn neg(&self) -> Self {
        GaussRat {
            re: -&self.re,
            im: -&self.im,
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        GaussRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        GaussRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn mul_i64(&self, k: i64) -> Self {
        let k = BigRational::from_integer(BigInt::from(k));
        GaussRat {
            re: &self.re * &k,
            im: &self.im * &k,
        }
    }
    fn add_assign(&mut self, rhs: &Self) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
    fn sub_assign(&mut self, rhs: &Self) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        self.re += &a.re * &b.re - &a.im * &b.im;
        self.im += &a.re * &b.im + &a.im * &b.re;
    }
    fn inv(&self) -> Option<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if Zero::is_zero(&norm) {
            None
        } else {
            Some(GaussRat {
                re: &self.re / &norm,
                im: -&self.im / &norm,
            })
        }
    }
}

/// Exact rational magnitude check used by identity tests: `|x|` as a
/// rational is awkward for Gaussian numbers, so report the max of the
/// absolute values of the parts.
pub fn gauss_abs_bound(x: &GaussRat) -> BigRational {
    let re = x.re.abs();
    let im = x.im.abs();
    if re >= im {
        re
    } else {
        im
    }
}
