//! Closed forms for families whose Martin invariants are known exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn fact(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |a, i| a * i)
}

/// `M(K_4^[a,b,c])` for `a + b + c = 2k`:
/// `a! b! c! / ((k-a)! (k-b)! (k-c)!)`, or zero when one of them exceeds `k`.
pub fn closed_form_k4(a: u32, b: u32, c: u32) -> BigInt {
    let total = a + b + c;
    assert!(total.is_multiple_of(2), "K4 multiplicities must sum to an even degree");
    let k = total / 2;
    if a > k || b > k || c > k {
        return BigInt::zero();
    }
    fact(a) * fact(b) * fact(c) / (fact(k - a) * fact(k - b) * fact(k - c))
}

/// `M(C^n_{1,2}) = ((3n - 2) 2^(n-3) - 2 (-1)^n) / 9` for `n >= 5`.
pub fn closed_form_circulant(n: u32) -> Result<BigInt> {
    if n < 5 {
        return Err(Error::InvalidArgument("the circulant formula needs n >= 5".into()));
    }
    let sign: i64 = if n.is_multiple_of(2) { 2 } else { -2 };
    let num = BigInt::from(3 * n - 2) * (BigInt::one() << (n - 3) as usize) - sign;
    let (q, r): (BigInt, BigInt) = num.div_rem(&BigInt::from(9));
    if !r.is_zero() {
        return Err(Error::Divisibility(format!("circulant numerator for n={n} is not divisible by 9")));
    }
    Ok(q)
}

/// `M(Y_{l+1}^[2]) = 4^(2l-1) (3^(l-2) (4l - 1) - 1)` for the doubled prism
/// over a cycle of length `l + 1`, `l >= 2`.
pub fn closed_form_prism(l: u32) -> Result<BigInt> {
    if l < 2 {
        return Err(Error::InvalidArgument("the prism formula needs l >= 2".into()));
    }
    let three = num_traits::pow(BigInt::from(3), (l - 2) as usize);
    Ok((BigInt::one() << (2 * (2 * l - 1)) as usize) * (three * (4 * l - 1) - 1))
}

/// `M(K_5^[r]) = (r!)^4 * sum over a+b+c=r of
/// (r+a)! (r+b)! (r+c)! / ((a! b! c!)^2 (r-a)! (r-b)! (r-c)!)`.
pub fn closed_form_k5_power(r: u32) -> Result<BigInt> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    let mut sum = BigRational::zero();
    for a in 0..=r {
        for b in 0..=r - a {
            let c = r - a - b;
            let num = fact(r + a) * fact(r + b) * fact(r + c);
            let abc = fact(a) * fact(b) * fact(c);
            let den = &abc * &abc * fact(r - a) * fact(r - b) * fact(r - c);
            sum += BigRational::new(num, den);
        }
    }
    let rf = fact(r);
    let total = sum * BigRational::from_integer(&rf * &rf * &rf * &rf);
    if !total.is_integer() {
        return Err(Error::Divisibility("K5 power sum is not an integer".into()));
    }
    Ok(total.to_integer())
}
