//! Exact minimum set cover over flat bit masks.
//!
//! Members and the target are word vectors of equal width. The search is
//! iterative deepening over subfamily size with lexicographic candidate
//! order, so the first solution found is the lexicographically smallest
//! witness of minimum size. Suffix-union pruning cuts branches whose
//! remaining candidates cannot finish the job.

use crate::error::{Error, Result};

/// Largest family the exact search accepts; beyond it the caller gets an
/// explicit threshold error instead of an open-ended run.
pub const EXACT_SEARCH_LIMIT: usize = 24;

fn covers(acc: &[u64], target: &[u64]) -> bool {
    target.iter().zip(acc).all(|(t, a)| t & !a == 0)
}

fn or_into(acc: &mut [u64], set: &[u64]) {
    for (a, s) in acc.iter_mut().zip(set) {
        *a |= s;
    }
}

/// Exact minimum subfamily of `sets` whose union contains `target`.
///
/// Returns `(size, witness indices)`; the witness is the lexicographically
/// smallest index set among minimum-size solutions. `None` when no
/// subfamily covers the target.
pub fn minimal_cover(target: &[u64], sets: &[Vec<u64>]) -> Result<Option<(usize, Vec<usize>)>> {
    if sets.len() > EXACT_SEARCH_LIMIT {
        return Err(Error::ThresholdExceeded {
            size: sets.len(),
            limit: EXACT_SEARCH_LIMIT,
        });
    }
    let width = target.len();
    debug_assert!(sets.iter().all(|s| s.len() == width));

    if target.iter().all(|&w| w == 0) {
        return Ok(Some((0, Vec::new())));
    }

    // suffix_union[i] = union of sets[i..]
    let mut suffix_union = vec![vec![0u64; width]; sets.len() + 1];
    for i in (0..sets.len()).rev() {
        let mut u = suffix_union[i + 1].clone();
        or_into(&mut u, &sets[i]);
        suffix_union[i] = u;
    }
    let full: Vec<u64> = suffix_union[0].clone();
    if !covers(&full, target) {
        return Ok(None);
    }

    for k in 1..=sets.len() {
        let mut witness = Vec::with_capacity(k);
        if search(target, sets, &suffix_union, 0, k, &vec![0; width], &mut witness) {
            return Ok(Some((k, witness)));
        }
    }
    unreachable!("the full family covers, so some k succeeds");
}

fn search(
    target: &[u64],
    sets: &[Vec<u64>],
    suffix_union: &[Vec<u64>],
    start: usize,
    slots: usize,
    acc: &[u64],
    witness: &mut Vec<usize>,
) -> bool {
    if covers(acc, target) {
        return true;
    }
    if slots == 0 || start >= sets.len() {
        return false;
    }
    // Even taking everything from here on cannot cover: prune.
    let mut best = acc.to_vec();
    or_into(&mut best, &suffix_union[start]);
    if !covers(&best, target) {
        return false;
    }
    for i in start..sets.len() {
        let mut next = acc.to_vec();
        or_into(&mut next, &sets[i]);
        witness.push(i);
        if search(target, sets, suffix_union, i + 1, slots - 1, &next, witness) {
            return true;
        }
        witness.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(bits: &[usize]) -> Vec<u64> {
        let mut w = vec![0u64; 1];
        for &b in bits {
            w[b / 64] |= 1 << (b % 64);
        }
        w
    }

    /// Independent oracle: try every subfamily by bitmask, smallest first,
    /// lexicographic within a size.
    fn brute_minimal_cover(target: &[u64], sets: &[Vec<u64>]) -> Option<(usize, Vec<usize>)> {
        let n = sets.len();
        let mut best: Option<(usize, Vec<usize>)> = None;
        for m in 0u32..1 << n {
            let idx: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
            let mut acc = vec![0u64; target.len()];
            for &i in &idx {
                or_into(&mut acc, &sets[i]);
            }
            if covers(&acc, target) {
                let better = match &best {
                    None => true,
                    Some((k, w)) => idx.len() < *k || (idx.len() == *k && idx < *w),
                };
                if better {
                    best = Some((idx.len(), idx));
                }
            }
        }
        best
    }

    #[test]
    fn disjoint_pairs_need_everything() {
        let target = mask(&[0, 1, 2, 3, 4, 5]);
        let sets = vec![mask(&[0, 1]), mask(&[2, 3]), mask(&[4, 5])];
        assert_eq!(minimal_cover(&target, &sets).unwrap(), Some((3, vec![0, 1, 2])));
    }

    #[test]
    fn agrees_with_brute_force_on_random_instances() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..300 {
            let n_bits = rng.gen_range(1..=10usize);
            let n_sets = rng.gen_range(0..=8usize);
            let target = {
                let mut t = vec![0u64];
                for b in 0..n_bits {
                    if rng.gen_bool(0.8) {
                        t[0] |= 1 << b;
                    }
                }
                t
            };
            let sets: Vec<Vec<u64>> = (0..n_sets)
                .map(|_| {
                    let mut s = vec![0u64];
                    for b in 0..n_bits {
                        if rng.gen_bool(0.4) {
                            s[0] |= 1 << b;
                        }
                    }
                    s
                })
                .collect();
            assert_eq!(
                minimal_cover(&target, &sets).unwrap(),
                brute_minimal_cover(&target, &sets),
            );
        }
    }

    #[test]
    fn infeasible_returns_none() {
        let target = mask(&[0, 1, 2]);
        let sets = vec![mask(&[0]), mask(&[1])];
        assert_eq!(minimal_cover(&target, &sets).unwrap(), None);
    }

    #[test]
    fn threshold_is_enforced() {
        let target = mask(&[0]);
        let sets = vec![mask(&[0]); EXACT_SEARCH_LIMIT + 1];
        assert!(matches!(
            minimal_cover(&target, &sets),
            Err(Error::ThresholdExceeded { .. })
        ));
    }

    #[test]
    fn empty_target_needs_nothing() {
        assert_eq!(minimal_cover(&[0], &[]).unwrap(), Some((0, vec![])));
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        // {0} can be covered by set 0 or set 2; both size 1; index 0 wins.
        let target = mask(&[0]);
        let sets = vec![mask(&[0, 1]), mask(&[1]), mask(&[0])];
        assert_eq!(minimal_cover(&target, &sets).unwrap(), Some((1, vec![0])));
    }
}
