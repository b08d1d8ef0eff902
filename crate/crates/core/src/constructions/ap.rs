use std::collections::HashSet;

/// Whether `set` contains `x < y < z` with `x + z = 2y`.
pub fn has_three_term_progression(set: &[usize]) -> bool {
    let members: HashSet<usize> = set.iter().copied().collect();
    set.iter().enumerate().any(|(i, &x)| {
        set[i + 1..].iter().any(|&z| x != z && (x + z) % 2 == 0 && members.contains(&((x + z) / 2)))
    })
}

const EXHAUSTIVE_LIMIT: usize = 40;

/// A subset of `{1, ..., n}` without three-term arithmetic progressions.
///
/// For `n <= 40` the result is a maximum such set, found by branch and bound.
/// Larger `n` use Behrend's construction: numbers whose base-`d` digits are
/// all below `d/2` and whose digit vectors lie on a common sphere.
pub fn three_ap_free_set(n: usize) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    if n <= EXHAUSTIVE_LIMIT {
        exhaustive(n)
    } else {
        behrend(n)
    }
}

fn exhaustive(n: usize) -> Vec<usize> {
    // best[m] = maximum size of an AP-free subset of {1..m}, which bounds any
    // AP-free subset of an interval of length m.
    let mut best = vec![0usize; n + 1];
    let mut witness = Vec::new();
    for m in 1..=n {
        let mut search = ApSearch { n: m, r: &best, chosen: Vec::new(), best: Vec::new(), member: vec![false; m + 1] };
        search.best = if m > 1 { witness.clone() } else { Vec::new() };
        search.run(1);
        witness = search.best;
        best[m] = witness.len();
    }
    witness
}

struct ApSearch<'a> {
    n: usize,
    r: &'a [usize],
    chosen: Vec<usize>,
    best: Vec<usize>,
    member: Vec<bool>,
}

impl ApSearch<'_> {
    fn run(&mut self, next: usize) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if next > self.n {
            return;
        }
        // Remaining elements come from {next..n}, an interval of length n-next+1.
        let left = self.n - next + 1;
        let cap = if left < self.n { self.r[left] } else { self.r[left - 1] + 1 };
        if self.chosen.len() + cap <= self.best.len() {
            return;
        }
        if self.fits(next) {
            self.chosen.push(next);
            self.member[next] = true;
            self.run(next + 1);
            self.member[next] = false;
            self.chosen.pop();
        }
        self.run(next + 1);
    }

    fn fits(&self, z: usize) -> bool {
        // z is the largest element, so it can only close x < y < z.
        self.chosen.iter().all(|&y| 2 * y < z + 1 || !self.member[2 * y - z])
    }
}

fn behrend(n: usize) -> Vec<usize> {
    let mut best: Vec<usize> = vec![1];
    let mut d = 3;
    while d * d <= n {
        let half = d.div_ceil(2);
        let mut dims = 1;
        while d.checked_pow(dims as u32 + 1).is_some_and(|p| p <= n) {
            dims += 1;
        }
        for dims in 1..=dims {
            let mut by_norm: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
            let count = half.pow(dims as u32);
            for code in 0..count {
                let (mut c, mut value, mut norm, mut place) = (code, 0usize, 0usize, 1usize);
                for _ in 0..dims {
                    let digit = c % half;
                    c /= half;
                    value += digit * place;
                    norm += digit * digit;
                    place *= d;
                }
                if value < n {
                    by_norm.entry(norm).or_default().push(value + 1);
                }
            }
            if let Some(layer) = by_norm.into_values().max_by_key(Vec::len) {
                if layer.len() > best.len() {
                    best = layer;
                }
            }
        }
        d += 1;
    }
    best.sort_unstable();
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_max(n: usize) -> usize {
        (0u64..1 << n)
            .filter_map(|mask| {
                let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                (!has_three_term_progression(&set)).then_some(set.len())
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_cases() {
        assert_eq!(three_ap_free_set(3), vec![1, 2]);
        assert_eq!(three_ap_free_set(1), vec![1]);
        for n in 1..=14 {
            let a = three_ap_free_set(n);
            assert!(!has_three_term_progression(&a));
            assert_eq!(a.len(), brute_force_max(n), "n={n}");
        }
    }

    #[test]
    fn maxima_up_to_twenty() {
        for n in 15..=20 {
            let a = three_ap_free_set(n);
            assert!(!has_three_term_progression(&a));
            assert_eq!(a.len(), brute_force_max(n), "n={n}");
        }
    }

    #[test]
    fn behrend_sets_are_progression_free() {
        for n in [41, 100, 1000, 10_000] {
            let a = three_ap_free_set(n);
            assert!(!has_three_term_progression(&a), "n={n}");
            assert!(a.iter().all(|&x| (1..=n).contains(&x)));
            let floor = (n as f64 * (-2.0 * (n as f64).ln().sqrt()).exp()) as usize;
            assert!(a.len() >= floor, "n={n}: {} < {floor}", a.len());
        }
    }
}
