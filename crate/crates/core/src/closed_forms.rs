//! Closed forms for stars and paths, plus certified rational enclosures of
//! `e^{-2}` and `ln n`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::prob::Prob;

fn int(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

fn pow2(k: usize) -> BigRational {
    BigRational::from_integer(BigInt::one() << k)
}

/// `C(m, m/2) / 2^m` for even `m`.
fn central(m: usize) -> BigRational {
    let c = binomial(BigInt::from(m), BigInt::from(m / 2));
    BigRational::from_integer(c) / pow2(m)
}

/// Optimal first player vs random opponent on the star `S_n`.
pub fn star_p(n: usize) -> Prob {
    assert!(n > 0);
    let n_r = int(n);
    let mut v = frac(2, 3) - frac(1, 3) / &n_r;
    if n % 2 == 1 {
        v += frac(2, 3) / &n_r * central(n - 1);
    }
    Prob::from_ratio(v)
}

/// Optimal second player vs random opponent on the star `S_n`.
pub fn star_q(n: usize) -> Prob {
    assert!(n > 0);
    let n_r = int(n);
    let mut v = frac(2, 3) - frac(2, 3) / &n_r;
    if n.is_multiple_of(2) {
        v += frac(2, 3) / &n_r * central(n);
    }
    Prob::from_ratio(v)
}

/// Partial sum `sum_{j=0}^{n} (-2)^j / j!`.
pub fn exp_minus_two_partial(n: usize) -> BigRational {
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for j in 1..=n {
        term *= frac(-2, j as i64);
        sum += &term;
    }
    sum
}

/// `(-2)^n / n!`.
fn alternating_term(n: usize) -> BigRational {
    (1..=n).fold(BigRational::one(), |t, j| t * frac(-2, j as i64))
}

/// `p_n`; `p_0 = 1/2` by convention.
pub fn path_p(n: usize) -> Prob {
    if n == 0 {
        return Prob::half();
    }
    let n_r = int(n);
    let v = frac(1, 2) - alternating_term(n) / &n_r
        + int(n + 2) / (int(2) * &n_r) * exp_minus_two_partial(n);
    Prob::from_ratio(v)
}

/// `q_n`; `q_0 = 1/2` by convention.
pub fn path_q(n: usize) -> Prob {
    if n == 0 {
        return Prob::half();
    }
    let n_r = int(n);
    let v = int(n - 1) / (int(2) * &n_r) - alternating_term(n) / &n_r
        + int(n + 3) / (int(2) * &n_r) * exp_minus_two_partial(n);
    Prob::from_ratio(v)
}

/// Random-vs-random value of `S_n`: `1/2 + [n odd] / (2 n^2)`.
pub fn star_rr(n: usize) -> Prob {
    assert!(n > 0);
    if n % 2 == 1 {
        Prob::half() + Prob::new(1, 2 * (n * n) as i64)
    } else {
        Prob::half()
    }
}

/// Random-vs-random value of `P_n`: `1/2 + 1/(6n)` for `n >= 3`.
pub fn path_rr(n: usize) -> Prob {
    match n {
        0 => panic!("path needs at least one vertex"),
        1 => Prob::one(),
        2 => Prob::half(),
        _ => Prob::half() + Prob::new(1, 6 * n as i64),
    }
}

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn scale(&self, k: &BigRational) -> Interval {
        assert!(!k.is_negative());
        Interval {
            lo: &self.lo * k,
            hi: &self.hi * k,
        }
    }

    pub fn shift(&self, c: &BigRational) -> Interval {
        Interval {
            lo: &self.lo + c,
            hi: &self.hi + c,
        }
    }
}

/// Encloses `e^{-2}` between consecutive partial sums of its alternating
/// series, which bracket the limit once the terms decrease in magnitude
/// (from `j = 2` on). Refines until the width is below `tol`.
pub fn exp_minus_two_enclosure(tol: &BigRational) -> Interval {
    let mut n = 2;
    loop {
        let a = exp_minus_two_partial(n);
        let b = exp_minus_two_partial(n + 1);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let iv = Interval { lo, hi };
        if &iv.width() < tol {
            return iv;
        }
        n += 1;
    }
}

/// `2 atanh(x) = 2 sum x^{2k+1}/(2k+1)` for `0 <= x <= 1/3`: the partial
/// sum is a lower bound and the tail is at most the next term times
/// `1/(1 - x^2)`.
fn two_atanh(x: &BigRational, tol: &BigRational) -> Interval {
    let x2 = x * x;
    let tail_factor = BigRational::one() / (BigRational::one() - &x2);
    let mut power = x.clone();
    let mut sum = BigRational::zero();
    let mut k = 0usize;
    loop {
        sum += &power / int(2 * k + 1);
        power = &power * &x2;
        k += 1;
        let tail = &power / int(2 * k + 1) * &tail_factor;
        let tail2 = int(2) * &tail;
        if &tail2 < tol {
            return Interval {
                lo: int(2) * &sum,
                hi: int(2) * &sum + tail2,
            };
        }
    }
}

/// Encloses `ln n` (`n >= 1`) as `k ln 2 + ln m` with `m = n / 2^k` in
/// `[1, 2)`, each logarithm from `2 atanh((m - 1)/(m + 1))`.
pub fn ln_enclosure(n: usize, tol: &BigRational) -> Interval {
    assert!(n >= 1);
    let k = (usize::BITS - 1 - n.leading_zeros()) as usize;
    let m = int(n) / pow2(k);
    let part_tol = tol / int(k + 2);
    let ln2 = two_atanh(&frac(1, 3), &part_tol);
    let x = (&m - BigRational::one()) / (&m + BigRational::one());
    let ln_m = two_atanh(&x, &part_tol);
    let kk = int(k);
    Interval {
        lo: &ln2.lo * &kk + &ln_m.lo,
        hi: &ln2.hi * &kk + &ln_m.hi,
    }
}
