/// Strictly increasing `r`-subsets of `1..=n` in lexicographic order,
/// advanced in place so the inner search loop never allocates.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: u64,
    current: Vec<u64>,
    started: bool,
    done: bool,
}

impl Combinations {
    pub fn new(n: u64, r: usize) -> Self {
        Combinations {
            n,
            current: (1..=r as u64).collect(),
            started: false,
            done: r as u64 > n,
        }
    }

    /// Advances to the next subset and returns it, or `None` when exhausted.
    pub fn next_subset(&mut self) -> Option<&[u64]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let r = self.current.len();
        // rightmost slot that can still move up
        let mut k = r;
        while k > 0 {
            let slot = k - 1;
            if self.current[slot] < self.n - (r - 1 - slot) as u64 {
                self.current[slot] += 1;
                for t in slot + 1..r {
                    self.current[t] = self.current[t - 1] + 1;
                }
                return Some(&self.current);
            }
            k -= 1;
        }
        self.done = true;
        None
    }
}

/// `C(n, k)` exactly, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc.checked_mul((n - t) as u128)? / (t as u128 + 1);
    }
    Some(acc)
}
