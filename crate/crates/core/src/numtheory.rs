pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient: the number of `1 <= a <= n` with `gcd(a, n) = 1`.
pub fn euler_phi(n: usize) -> usize {
    let mut result = n;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

/// Smallest prime dividing `n`; `n` must be at least 2.
pub fn smallest_prime_factor(n: usize) -> usize {
    assert!(n >= 2, "smallest_prime_factor needs n >= 2");
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return p;
        }
        p += 1;
    }
    n
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && smallest_prime_factor(n) == n
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_matches_gcd_count() {
        for n in 1..200 {
            let count = (1..=n).filter(|&a| gcd(a, n) == 1).count();
            assert_eq!(euler_phi(n), count, "n = {n}");
        }
        assert_eq!(euler_phi(15), 8);
    }

    #[test]
    fn spf() {
        assert_eq!(smallest_prime_factor(35), 5);
        assert_eq!(smallest_prime_factor(2), 2);
        assert_eq!(smallest_prime_factor(49), 7);
        assert_eq!(smallest_prime_factor(97), 97);
        assert!(is_prime(13) && !is_prime(15) && !is_prime(1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 4), 126);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 5), 0);
    }
}
