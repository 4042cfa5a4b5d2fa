//! Index bookkeeping for exterior powers: combinations, permutations and signs.

use std::collections::HashMap;

/// All strictly increasing `m`-tuples drawn from `0..n`, in lexicographic order.
pub fn combinations(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m > n {
        return out;
    }
    let mut current: Vec<usize> = (0..m).collect();
    loop {
        out.push(current.clone());
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < n - m + i {
                current[i] += 1;
                for j in i + 1..m {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Binomial coefficient `C(n, m)`.
pub fn binomial(n: usize, m: usize) -> usize {
    if m > n {
        return 0;
    }
    let m = m.min(n - m);
    let mut acc: usize = 1;
    for i in 0..m {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All permutations of `0..k` paired with their parity (`true` when odd).
pub fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, bool)>) {
        let k = used.len();
        if prefix.len() == k {
            let odd = inversions(prefix) % 2 == 1;
            out.push((prefix.clone(), odd));
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

fn inversions(p: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

/// Sorts `indices` increasingly and reports the parity of the sorting permutation.
///
/// Returns `None` when an index repeats, since the wedge then vanishes.
pub fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = indices.to_vec();
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, odd))
}

/// Canonical basis of an exterior power with a reverse lookup table.
#[derive(Clone, Debug)]
pub struct ExteriorBasis {
    n: usize,
    m: usize,
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl ExteriorBasis {
    /// Basis of the grade-`m` part of the exterior algebra on `n` generators.
    pub fn new(n: usize, m: usize) -> Self {
        let tuples = combinations(n, m);
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        ExteriorBasis { n, m, tuples, index }
    }

    /// Number of generators.
    pub fn generators(&self) -> usize {
        self.n
    }

    /// Grade.
    pub fn grade(&self) -> usize {
        self.m
    }

    /// Number of basis elements.
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    /// True when the space is zero.
    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Basis tuples in canonical order.
    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Tuple of the basis element at position `i`.
    pub fn tuple(&self, i: usize) -> &[usize] {
        &self.tuples[i]
    }

    /// Position of an increasing tuple.
    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
        for n in 0..8 {
            for m in 0..=n + 1 {
                assert_eq!(combinations(n, m).len(), binomial(n, m));
            }
        }
    }

    #[test]
    fn permutation_parities() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().filter(|(_, odd)| *odd).count(), 3);
    }

    #[test]
    fn sorting_sign() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], false)));
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], true)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
    }
}
