//! Integer factorization just large enough to enumerate divisors of
//! characteristic-polynomial coefficients during rational root search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// All positive divisors of |n|, unordered. n must be nonzero.
pub(crate) fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    assert!(!n.is_zero());
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let d = BigInt::from(small);
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d, e));
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            match primes.iter_mut().find(|(p, _)| *p == m) {
                Some((_, e)) => *e += 1,
                None => primes.push((m, 1)),
            }
            continue;
        }
        let d = pollard_rho(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    let mut divisors = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc = &acc * &p;
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    divisors
}

/// Miller-Rabin with the 12 witnesses that are deterministic below 3.3e24;
/// far beyond desk-scale coefficients, and still a strong test above that.
fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for w in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let w = BigInt::from(w);
        if *n == w {
            return true;
        }
        if (n % &w).is_zero() {
            return false;
        }
    }
    let n_minus_1: BigInt = n - 1;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for w in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigInt::from(2), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-style rho; n must be composite and odd-ish (small factors already
/// stripped by the caller).
fn pollard_rho(n: &BigInt) -> BigInt {
    if (n % BigInt::from(2)).is_zero() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = BigInt::one();
        while d.is_one() {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_of_small_numbers() {
        let mut d = positive_divisors(&BigInt::from(12));
        d.sort();
        let expect: Vec<BigInt> = [1, 2, 3, 4, 6, 12].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(d, expect);

        let mut d = positive_divisors(&BigInt::from(-97));
        d.sort();
        assert_eq!(d, vec![BigInt::one(), BigInt::from(97)]);
    }

    #[test]
    fn factors_a_semiprime() {
        // 1000003 * 1000033 has no factors below the trial-division bound.
        let n = BigInt::from(1000003u64) * BigInt::from(1000033u64);
        let divs = positive_divisors(&n);
        assert_eq!(divs.len(), 4);
        assert!(divs.contains(&BigInt::from(1000003u64)));
    }
}
