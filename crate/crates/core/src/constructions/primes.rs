/// Deterministic trial division.
pub fn is_prime(m: usize) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn largest_prime_at_most(x: usize) -> Option<usize> {
    (2..=x).rev().find(|&m| is_prime(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<usize> = (0..30).filter(|&m| is_prime(m)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(largest_prime_at_most(1), None);
        assert_eq!(largest_prime_at_most(10), Some(7));
    }
}
