//! Extended Kronecker symbol `(a|n)` for all integer pairs.

/// Full extended Kronecker symbol.
pub fn kronecker(a: i64, n: i64) -> i64 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    if n < 0 {
        let sign = if a < 0 { -1 } else { 1 };
        return sign * kronecker(a, -n);
    }
    let mut n = n;
    let mut acc = 1i64;
    // factor out twos: (a|2) = 0 for even a, (-1)^{(a²-1)/8} otherwise
    while n % 2 == 0 {
        n /= 2;
        if a % 2 == 0 {
            return 0;
        }
        let r = a.rem_euclid(8);
        if r == 3 || r == 5 {
            acc = -acc;
        }
    }
    if n == 1 {
        return acc;
    }
    // Jacobi symbol for odd n > 1 by quadratic reciprocity
    let mut a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n.rem_euclid(8);
            if r == 3 || r == 5 {
                acc = -acc;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.rem_euclid(4) == 3 && n.rem_euclid(4) == 3 {
            acc = -acc;
        }
        a = a.rem_euclid(n);
    }
    if n == 1 {
        acc
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_one_is_one() {
        for a in -20..=20 {
            assert_eq!(kronecker(a, 1), 1);
        }
    }

    #[test]
    fn quadratic_residues_mod_small_primes() {
        assert_eq!(kronecker(2, 3), -1);
        assert_eq!(kronecker(1, 3), 1);
        assert_eq!(kronecker(2, 7), 1);
        assert_eq!(kronecker(3, 7), -1);
        assert_eq!(kronecker(6, 3), 0);
    }

    #[test]
    fn special_arguments() {
        assert_eq!(kronecker(1, 0), 1);
        assert_eq!(kronecker(-1, 0), 1);
        assert_eq!(kronecker(5, 0), 0);
        assert_eq!(kronecker(3, -5), kronecker(3, 5));
        assert_eq!(kronecker(-3, -5), -kronecker(-3, 5));
        assert_eq!(kronecker(5, 2), -1); // 5 ≡ 5 mod 8
        assert_eq!(kronecker(7, 2), 1);
        assert_eq!(kronecker(4, 2), 0);
    }

    #[test]
    fn multiplicative_in_first_argument() {
        // (ab|n) = (a|n)(b|n) on a deterministic pseudo-random sample
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..1000 {
            let a = (next() % 200) as i64 - 100;
            let b = (next() % 200) as i64 - 100;
            let n = (next() % 120) as i64 - 60;
            assert_eq!(
                kronecker(a.wrapping_mul(b), n),
                kronecker(a, n) * kronecker(b, n),
                "a={a} b={b} n={n}"
            );
        }
    }

    #[test]
    fn multiplicative_in_modulus() {
        for a in -30..=30i64 {
            for m in 1..=12i64 {
                for n in 1..=12i64 {
                    assert_eq!(
                        kronecker(a, m * n),
                        kronecker(a, m) * kronecker(a, n),
                        "a={a} m={m} n={n}"
                    );
                }
            }
        }
    }
}
